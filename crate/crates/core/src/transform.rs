use std::collections::BTreeSet;
use std::fmt;

use crate::region::Cell;

/// Lattice bijections applied to cell sets. Linear maps act on the cell's
/// lower-left corner coordinates about the origin.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Transform {
    Rotate180,
    /// `(x, y) ↦ (−x, y)`
    ReflectX,
    /// `(x, y) ↦ (x, −y)`
    ReflectY,
    /// `(x, y) ↦ (y, x)`
    ReflectDiagonal,
    /// `(x, y) ↦ (x + s·y, y)`
    ShearX(i32),
    Translate(i32, i32),
}

impl Transform {
    pub fn apply(self, c: Cell) -> Cell {
        let (x, y) = (c.x, c.y);
        match self {
            Transform::Rotate180 => Cell::new(-x, -y),
            Transform::ReflectX => Cell::new(-x, y),
            Transform::ReflectY => Cell::new(x, -y),
            Transform::ReflectDiagonal => Cell::new(y, x),
            Transform::ShearX(s) => Cell::new(x + s * y, y),
            Transform::Translate(dx, dy) => Cell::new(x + dx, y + dy),
        }
    }
}

impl fmt::Display for Transform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Transform::Rotate180 => f.write_str("rotate180"),
            Transform::ReflectX => f.write_str("reflectX"),
            Transform::ReflectY => f.write_str("reflectY"),
            Transform::ReflectDiagonal => f.write_str("reflectDiagonal"),
            Transform::ShearX(s) => write!(f, "shearX({s:+})"),
            Transform::Translate(dx, dy) => write!(f, "translate({dx},{dy})"),
        }
    }
}

/// A composition of transforms, applied first to last.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct TransformChain(pub Vec<Transform>);

impl TransformChain {
    pub fn apply(&self, c: Cell) -> Cell {
        self.0.iter().fold(c, |c, t| t.apply(c))
    }

    pub fn then(&self, t: Transform) -> TransformChain {
        let mut steps = self.0.clone();
        steps.push(t);
        TransformChain(steps)
    }

    pub fn concat(&self, other: &TransformChain) -> TransformChain {
        TransformChain(self.0.iter().chain(&other.0).copied().collect())
    }

    /// Integer matrix of the linear part, ignoring translations.
    fn linear_matrix(&self) -> [i32; 4] {
        let e1 = self.apply(Cell::new(1, 0));
        let e2 = self.apply(Cell::new(0, 1));
        let o = self.apply(Cell::new(0, 0));
        [e1.x - o.x, e2.x - o.x, e1.y - o.y, e2.y - o.y]
    }
}

impl fmt::Display for TransformChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("identity");
        }
        let parts: Vec<String> = self.0.iter().map(|t| t.to_string()).collect();
        f.write_str(&parts.join(" ∘ "))
    }
}

pub fn apply_transform(cells: &BTreeSet<Cell>, t: Transform) -> BTreeSet<Cell> {
    cells.iter().map(|&c| t.apply(c)).collect()
}

pub fn apply_chain(cells: &BTreeSet<Cell>, chain: &TransformChain) -> BTreeSet<Cell> {
    cells.iter().map(|&c| chain.apply(c)).collect()
}

/// The 12 linear symmetries of the lattice that map right-oriented
/// 180-trominoes onto right-oriented 180-trominoes, i.e. the maps preserving
/// the neighbour set {±(1,0), ±(0,1), ±(1,1)}. Generated by the diagonal
/// reflection and a reflection followed by a single-step shear; the first
/// element is the identity.
pub fn right_180_symmetries() -> Vec<TransformChain> {
    let generators = [
        TransformChain(vec![Transform::ReflectDiagonal]),
        TransformChain(vec![Transform::ReflectX, Transform::ShearX(1)]),
    ];
    let mut seen = vec![TransformChain::default().linear_matrix()];
    let mut group = vec![TransformChain::default()];
    let mut i = 0;
    while i < group.len() {
        for g in &generators {
            let next = group[i].concat(g);
            let m = next.linear_matrix();
            if !seen.contains(&m) {
                seen.push(m);
                group.push(next);
            }
        }
        i += 1;
    }
    group
}
