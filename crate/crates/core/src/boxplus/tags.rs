use std::collections::BTreeMap;

use serde::Serialize;

use super::AdjacencyGraph;
use crate::error::{Error, Result};
use crate::region::Cell;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Dir {
    Left,
    Right,
    Down,
    Up,
}

impl Dir {
    pub const ALL: [Dir; 4] = [Dir::Left, Dir::Right, Dir::Down, Dir::Up];

    pub fn delta(self) -> (i32, i32) {
        match self {
            Dir::Left => (-1, 0),
            Dir::Right => (1, 0),
            Dir::Down => (0, -1),
            Dir::Up => (0, 1),
        }
    }

    pub fn opposite(self) -> Dir {
        match self {
            Dir::Left => Dir::Right,
            Dir::Right => Dir::Left,
            Dir::Down => Dir::Up,
            Dir::Up => Dir::Down,
        }
    }

    pub fn is_horizontal(self) -> bool {
        matches!(self, Dir::Left | Dir::Right)
    }

    pub fn step(self, c: Cell) -> Cell {
        let (dx, dy) = self.delta();
        c.offset(dx, dy)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum VertexKind {
    Leaf,
    StraightTrunk,
    BendedTrunk,
    /// Degree 3; the arm opposite the missing side has tag 1.
    Fork212,
    /// Degree 3; the arm opposite the missing side has tag 2.
    Fork221,
    /// Degree 4 with exactly one tag-2 arm.
    Cross21,
    /// Degree 4 with four tag-2 arms.
    Cross24,
}

impl VertexKind {
    pub fn name(self) -> &'static str {
        match self {
            VertexKind::Leaf => "leaf",
            VertexKind::StraightTrunk => "straight-trunk",
            VertexKind::BendedTrunk => "bended-trunk",
            VertexKind::Fork212 => "fork-212",
            VertexKind::Fork221 => "fork-221",
            VertexKind::Cross21 => "cross-2^1",
            VertexKind::Cross24 => "cross-2^4",
        }
    }
}

/// Kind of a tree vertex and, per arm, the size mod 3 of the component that
/// arm leads into once the vertex is removed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexClass {
    pub kind: VertexKind,
    pub tags: Vec<(Dir, u8)>,
}

impl VertexClass {
    pub fn tag(&self, d: Dir) -> Option<u8> {
        self.tags.iter().find(|(e, _)| *e == d).map(|&(_, t)| t)
    }
}

/// Classifies every vertex of a non-detachable tree whose size is divisible
/// by 3. Every tag is then 1 or 2.
pub fn classify_and_tag(tree: &AdjacencyGraph) -> Result<BTreeMap<Cell, VertexClass>> {
    if tree.is_empty() || !tree.is_tree() {
        return Err(Error::NotATree);
    }
    let n = tree.len();
    if !n.is_multiple_of(3) {
        return Err(Error::SizeNotDivisible(n));
    }
    let (parent, size) = tree.subtree_sizes();
    let mut out = BTreeMap::new();
    for v in 0..n {
        let cell = tree.vertices[v];
        let mut tags = Vec::new();
        for d in Dir::ALL {
            let Some(u) = tree.index_of(d.step(cell)) else {
                continue;
            };
            let side = if parent[u] == v && u != v { size[u] } else { n - size[v] };
            let tag = (side % 3) as u8;
            if tag == 0 {
                return Err(Error::DetachableTree);
            }
            tags.push((d, tag));
        }
        let kind = kind_of(&tags);
        out.insert(cell, VertexClass { kind, tags });
    }
    Ok(out)
}

fn kind_of(tags: &[(Dir, u8)]) -> VertexKind {
    let twos = tags.iter().filter(|(_, t)| *t == 2).count();
    match tags {
        [_] => VertexKind::Leaf,
        [(a, _), (b, _)] if a.is_horizontal() == b.is_horizontal() => VertexKind::StraightTrunk,
        [_, _] => VertexKind::BendedTrunk,
        [_, _, _] => {
            let missing = Dir::ALL
                .into_iter()
                .find(|d| tags.iter().all(|(e, _)| e != d))
                .expect("degree 3 leaves one side open");
            let stem = tags
                .iter()
                .find(|(e, _)| *e == missing.opposite())
                .expect("arm opposite the open side");
            if stem.1 == 1 {
                VertexKind::Fork212
            } else {
                VertexKind::Fork221
            }
        }
        _ if twos == 1 => VertexKind::Cross21,
        _ => {
            assert_eq!(twos, 4, "degree-4 vertices have one or four tag-2 arms");
            VertexKind::Cross24
        }
    }
}
