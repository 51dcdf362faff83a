//! Aztec rectangles and diamonds, and their constructive L-tromino tilings.
//!
//! Internally a rectangle AR(a,b) is addressed by diagonal coordinates
//! `(p, q)` with `0 ≤ p ≤ 2b`, `1 ≤ q ≤ 2a+1` and `p ≡ q (mod 2)`. The p-axis
//! runs along the long (b) side and the q-axis along the short (a) side.
//! A unit step `(+1,+1)` is a step up in the plane, `(−1,−1)` down,
//! `(+1,−1)` left and `(−1,+1)` right.

mod defect;
mod embed;
mod tables;

use std::collections::BTreeSet;

pub use defect::{fringe_cells, tile_aztec_one_defect, tile_fringe_with_defect, FringeSpec};
pub use embed::embed_in_aztec;

use crate::error::{Error, Result};
use crate::region::{normalize_cells, Cell, Region};
use crate::shape::{Placement, Tiling};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AztecRectangleSpec {
    pub a: u32,
    pub b: u32,
}

impl AztecRectangleSpec {
    pub fn new(a: u32, b: u32) -> Result<Self> {
        if a < 1 || a > b {
            return Err(Error::InvalidSpec(format!(
                "Aztec rectangle needs 1 ≤ a ≤ b, got a={a}, b={b}"
            )));
        }
        Ok(AztecRectangleSpec { a, b })
    }

    pub fn cell_count(&self) -> u64 {
        let (a, b) = (self.a as u64, self.b as u64);
        2 * a * b + a + b
    }
}

/// Conversion between diagonal coordinates and cells of a normalized AR(a,b).
#[derive(Debug, Clone, Copy)]
pub(crate) struct Band {
    b: i32,
}

impl Band {
    pub(crate) fn new(spec: AztecRectangleSpec) -> Self {
        Band { b: spec.b as i32 }
    }

    pub(crate) fn cell(&self, p: i32, q: i32) -> Cell {
        debug_assert!((p - q) % 2 == 0);
        Cell::new((q - p) / 2 + self.b - 1, (p + q) / 2 - 1)
    }

    pub(crate) fn pq(&self, c: Cell) -> (i32, i32) {
        (c.y - c.x + self.b, c.x + c.y - self.b + 2)
    }

    /// Maps a triple of diagonal coordinates to the placement covering it.
    fn placement(&self, cells: [(i32, i32); 3]) -> Placement {
        let cells = cells.map(|(p, q)| self.cell(p, q));
        Placement::from_cells(&cells).expect("diagonal triple forms an L-tromino")
    }
}

pub fn gen_aztec_rectangle(spec: AztecRectangleSpec) -> Region {
    let band = Band::new(spec);
    let (a, b) = (spec.a as i32, spec.b as i32);
    let cells: BTreeSet<Cell> = (0..=2 * b)
        .flat_map(|p| (1..=2 * a + 1).map(move |q| (p, q)))
        .filter(|(p, q)| (p - q) % 2 == 0)
        .map(|(p, q)| band.cell(p, q))
        .collect();
    Region::new(cells, BTreeSet::new()).expect("Aztec rectangles are connected")
}

/// All cells lying inside `|x| + |y| ≤ n + 1`, translated to the origin.
pub fn gen_aztec_diamond(n: u32) -> Result<Region> {
    if n < 1 {
        return Err(Error::InvalidSpec("Aztec diamond needs n ≥ 1".into()));
    }
    let r = n as i32 + 1;
    let inside = |x: i32, y: i32| x.abs() + y.abs() <= r;
    let cells: BTreeSet<Cell> = (-r..r)
        .flat_map(|x| (-r..r).map(move |y| (x, y)))
        .filter(|&(x, y)| inside(x, y) && inside(x + 1, y) && inside(x, y + 1) && inside(x + 1, y + 1))
        .map(Cell::from)
        .collect();
    Region::new(normalize_cells(&cells), BTreeSet::new())
}

/// The Aztec rectangle whose cell set equals the region's footprint up to
/// translation, with the offset of the region's lower-left bound. Aztec
/// diamonds are recognized as AR(n,n).
pub fn recognize_aztec(r: &Region) -> Option<(AztecRectangleSpec, Cell)> {
    let (lo, _) = r.bounds()?;
    let n = r.len() as u64;
    let footprint: BTreeSet<Cell> = r.cells().iter().map(|c| c.offset(-lo.x, -lo.y)).collect();
    (1u32..)
        .take_while(|&a| 2 * u64::from(a) * u64::from(a) + 2 * u64::from(a) <= n)
        .filter_map(|a| {
            let rest = n.checked_sub(u64::from(a))?;
            let b = rest / (2 * u64::from(a) + 1);
            (rest % (2 * u64::from(a) + 1) == 0 && b >= u64::from(a)).then_some((a, b as u32))
        })
        .map(|(a, b)| AztecRectangleSpec::new(a, b).expect("a ≤ b by construction"))
        .find(|&spec| gen_aztec_rectangle(spec).cells() == &footprint)
        .map(|spec| (spec, lo))
}

/// An L-tromino cover of AR(a,b) exists exactly when its cell count is a
/// multiple of 3.
pub fn has_l_cover(a: u32, b: u32) -> bool {
    (2 * a as u64 * b as u64 + a as u64 + b as u64).is_multiple_of(3)
}

/// Direction pair of a stair: the zigzag alternates the two unit steps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StairOrientation {
    UpRight,
    LeftUp,
    DownLeft,
    RightDown,
}

impl StairOrientation {
    fn steps(self) -> [(i32, i32); 2] {
        const UP: (i32, i32) = (0, 1);
        const DOWN: (i32, i32) = (0, -1);
        const LEFT: (i32, i32) = (-1, 0);
        const RIGHT: (i32, i32) = (1, 0);
        match self {
            StairOrientation::UpRight => [UP, RIGHT],
            StairOrientation::LeftUp => [LEFT, UP],
            StairOrientation::DownLeft => [DOWN, LEFT],
            StairOrientation::RightDown => [RIGHT, DOWN],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StairSpec {
    pub k: u32,
    pub orientation: StairOrientation,
}

impl StairSpec {
    pub fn height(&self) -> u32 {
        3 * self.k + 2
    }
}

/// A zigzag of `6k+3` cells starting at `anchor`, cut into `2k+1` consecutive
/// trominoes that alternate between two 180°-rotated shapes.
pub fn build_stair(spec: StairSpec, anchor: Cell) -> Vec<Placement> {
    let [s1, s2] = spec.orientation.steps();
    let len = 6 * spec.k as usize + 3;
    let mut cells = Vec::with_capacity(len);
    let mut c = anchor;
    for i in 0..len {
        cells.push(c);
        let (dx, dy) = if i % 2 == 0 { s1 } else { s2 };
        c = c.offset(dx, dy);
    }
    cells
        .chunks(3)
        .map(|t| Placement::from_cells(t).expect("zigzag triple is an L-tromino"))
        .collect()
}

/// Constructive L-tromino tiling of AR(a,b). Frames are peeled off the
/// border until a base rectangle of short side 2 or 3 remains; that base is
/// tiled from a stored table and lengthened in slabs of three.
pub fn tile_aztec(a: u32, b: u32) -> Result<Tiling> {
    let spec = AztecRectangleSpec::new(a, b)?;
    if !has_l_cover(a, b) {
        return Err(Error::NoCover(format!(
            "AR({a},{b}) has {} cells, not a multiple of 3",
            spec.cell_count()
        )));
    }
    let band = Band::new(spec);
    let mut out = Vec::with_capacity(spec.cell_count() as usize / 3);
    let (mut ca, mut cb, mut o) = (a as i32, b as i32, 0);
    while ca > 3 {
        if ca % 3 == 2 {
            single_frame(&band, ca - 2, cb - 2, o, &mut out);
            ca -= 2;
            cb -= 2;
            o += 2;
        } else {
            double_frame(&band, ca, cb, o, &mut out);
            ca -= 4;
            cb -= 4;
            o += 4;
        }
    }
    base_rectangle(&band, ca, cb, o, &mut out);
    Ok(Tiling::new(out))
}

fn stair_at(band: &Band, k: i32, orientation: StairOrientation, p: i32, q: i32, out: &mut Vec<Placement>) {
    let spec = StairSpec {
        k: k as u32,
        orientation,
    };
    out.extend(build_stair(spec, band.cell(p, q)));
}

/// One-cell-wide frame around an inner AR(ia, ib) with `3 | ia, ib`, the inner
/// rectangle sitting at diagonal offset `o + 2`: four stairs, one per side.
fn single_frame(band: &Band, ia: i32, ib: i32, o: i32, out: &mut Vec<Placement>) {
    use StairOrientation::*;
    stair_at(band, ia / 3, UpRight, o, o + 2, out);
    stair_at(band, ib / 3, LeftUp, o + 1, o + 2 * ia + 5, out);
    stair_at(band, ia / 3, DownLeft, o + 2 * ib + 4, o + 2 * ia + 4, out);
    stair_at(band, ib / 3, RightDown, o + 2 * ib + 3, o + 1, out);
}

/// Two-cell-wide frame of AR(a, b) around AR(a−4, b−4) with `a ≡ b ≡ 0`:
/// an AD(2) in each corner and a pair of parallel stairs along each side.
fn double_frame(band: &Band, a: i32, b: i32, o: i32, out: &mut Vec<Placement>) {
    use StairOrientation::*;
    let corner = tables::diamond_two_diagonal();
    for (dp, dq) in [(0, 0), (0, 2 * a - 4), (2 * b - 4, 0), (2 * b - 4, 2 * a - 4)] {
        for t in &corner {
            out.push(band.placement(t.map(|(p, q)| (p + o + dp, q + o + dq))));
        }
    }
    let ks = (a - 6) / 3;
    let kl = (b - 6) / 3;
    stair_at(band, ks, UpRight, o, o + 6, out);
    stair_at(band, ks, UpRight, o + 2, o + 6, out);
    stair_at(band, ks, DownLeft, o + 2 * b, o + 2 * a - 4, out);
    stair_at(band, ks, DownLeft, o + 2 * b - 2, o + 2 * a - 4, out);
    stair_at(band, kl, RightDown, o + 2 * b - 5, o + 1, out);
    stair_at(band, kl, RightDown, o + 2 * b - 5, o + 3, out);
    stair_at(band, kl, LeftUp, o + 5, o + 2 * a + 1, out);
    stair_at(band, kl, LeftUp, o + 5, o + 2 * a - 1, out);
}

/// AR(a0, b0) with `a0 ∈ {2, 3}` at diagonal offset `o`: a stored tiling of
/// AR(a0, a0) or AR(a0, a0+3) followed by slabs that each add 3 to b.
fn base_rectangle(band: &Band, a0: i32, b0: i32, o: i32, out: &mut Vec<Placement>) {
    let c = if b0 >= a0 + 3 { a0 + 3 } else { a0 };
    for t in tables::base_diagonal(a0 as u32, c as u32) {
        out.push(band.placement(t.map(|(p, q)| (p + o, q + o))));
    }
    for b1 in (c..b0).step_by(3) {
        for t in slab(a0, b1) {
            out.push(band.placement(t.map(|(p, q)| (p + o, q + o))));
        }
    }
}

/// Trominoes covering AR(a0, b1+3) ∖ AR(a0, b1) in diagonal coordinates:
/// a six-cell zigzag per pair of rows plus three trominoes on the top rows.
fn slab(a0: i32, b1: i32) -> Vec<[(i32, i32); 3]> {
    let p0 = 2 * b1;
    let mut out = Vec::new();
    for m in 1..a0 {
        let (lo, hi) = (2 * m - 1, 2 * m);
        out.push([(p0 + 1, lo), (p0 + 2, hi), (p0 + 3, lo)]);
        out.push([(p0 + 4, hi), (p0 + 5, lo), (p0 + 6, hi)]);
    }
    let top = 2 * a0;
    for t in 0..3 {
        let p = p0 + 2 * t + 1;
        out.push([(p, top - 1), (p, top + 1), (p + 1, top)]);
    }
    out
}
