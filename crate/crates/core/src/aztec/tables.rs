use super::{AztecRectangleSpec, Band};
use crate::region::Cell;
use crate::shape::Placement;
use crate::shape::ShapeKind::{self, LA, LB, LC, LD};

// Tilings of the base rectangles, as (shape, anchor x, anchor y) in the
// coordinates of `gen_aztec_rectangle`.
const AR_2_2: &[(ShapeKind, i32, i32)] = &[(LC, 0, 0), (LB, 0, 2), (LA, 2, 0), (LD, 2, 2)];
const AR_2_5: &[(ShapeKind, i32, i32)] = &[
    (LC, 0, 3),
    (LB, 0, 5),
    (LC, 2, 1),
    (LA, 2, 3),
    (LD, 2, 5),
    (LB, 3, 3),
    (LD, 4, 0),
    (LB, 4, 2),
    (LB, 5, 1),
];
const AR_3_3: &[(ShapeKind, i32, i32)] = &[
    (LC, 0, 1),
    (LB, 0, 3),
    (LB, 2, 0),
    (LA, 2, 1),
    (LB, 2, 3),
    (LA, 2, 4),
    (LA, 4, 1),
    (LD, 4, 3),
];
const AR_3_6: &[(ShapeKind, i32, i32)] = &[
    (LC, 0, 4),
    (LB, 0, 6),
    (LC, 2, 2),
    (LA, 2, 4),
    (LB, 2, 6),
    (LA, 2, 7),
    (LC, 3, 3),
    (LC, 4, 0),
    (LB, 4, 2),
    (LC, 4, 4),
    (LD, 4, 6),
    (LA, 6, 0),
    (LA, 6, 2),
    (LD, 6, 4),
    (LB, 7, 2),
];

fn table(a: u32, b: u32) -> &'static [(ShapeKind, i32, i32)] {
    match (a, b) {
        (2, 2) => AR_2_2,
        (2, 5) => AR_2_5,
        (3, 3) => AR_3_3,
        (3, 6) => AR_3_6,
        _ => unreachable!("no stored tiling for AR({a},{b})"),
    }
}

/// Stored tiling of AR(a, b) in its diagonal coordinates.
pub(super) fn base_diagonal(a: u32, b: u32) -> Vec<[(i32, i32); 3]> {
    let band = Band::new(AztecRectangleSpec { a, b });
    table(a, b)
        .iter()
        .map(|&(shape, x, y)| Placement::new(shape, Cell::new(x, y)).cells().map(|c| band.pq(c)))
        .collect()
}

pub(super) fn diamond_two_diagonal() -> Vec<[(i32, i32); 3]> {
    base_diagonal(2, 2)
}
