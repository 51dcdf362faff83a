use std::collections::BTreeSet;

use super::{gen_aztec_rectangle, has_l_cover, AztecRectangleSpec};
use crate::region::{Cell, Region};

/// Places `r` inside the smallest Aztec diamond AR(a,a) with a cell count
/// divisible by 3 that holds a translate of its bounding box, marking every other cell of
/// the diamond as a defect. The result has an L-cover iff `r` does.
pub fn embed_in_aztec(r: &Region) -> (AztecRectangleSpec, Region) {
    let r = r.normalized();
    let (w, h) = match r.bounds() {
        Some((_, hi)) => (hi.x + 1, hi.y + 1),
        None => (1, 1),
    };
    let mut a = 1u32;
    loop {
        if has_l_cover(a, a) && 2 * a as i32 >= w.max(h) {
            let spec = AztecRectangleSpec { a, b: a };
            let host = gen_aztec_rectangle(spec);
            if let Some((dx, dy)) = fit(&host, w, h) {
                let shifted = r.translate(dx, dy);
                let defects: BTreeSet<Cell> = host
                    .cells()
                    .iter()
                    .filter(|c| !shifted.contains(**c))
                    .chain(shifted.defects())
                    .copied()
                    .collect();
                let embedded = Region::new(host.cells().clone(), defects).expect("defects lie in host");
                return (spec, embedded);
            }
        }
        a += 1;
    }
}

/// First offset (in sorted order) at which a `w`×`h` box lies inside `host`.
fn fit(host: &Region, w: i32, h: i32) -> Option<(i32, i32)> {
    let (_, hi) = host.bounds()?;
    let boxed = Region::rectangle(w, h);
    (0..=hi.x)
        .flat_map(|dx| (0..=hi.y).map(move |dy| (dx, dy)))
        .find(|&(dx, dy)| boxed.cells().iter().all(|c| host.contains(c.offset(dx, dy))))
}
