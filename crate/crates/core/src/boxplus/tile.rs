use std::collections::{BTreeMap, BTreeSet};

use super::tags::{classify_and_tag, Dir, VertexClass, VertexKind};
use super::{check_size, decompose, AdjacencyGraph};
use crate::error::{Error, Result};
use crate::region::{Cell, Region};
use crate::shape::{Placement, Tiling};

type Sub = (i32, i32);

/// The two subcells of a 2×2 block on side `d`.
fn facing(d: Dir) -> [Sub; 2] {
    match d {
        Dir::Left => [(0, 0), (0, 1)],
        Dir::Right => [(1, 0), (1, 1)],
        Dir::Down => [(0, 0), (1, 0)],
        Dir::Up => [(0, 1), (1, 1)],
    }
}

/// Subcell in the corner between two perpendicular sides.
fn corner_sub(a: Dir, b: Dir) -> Sub {
    let x = i32::from(a == Dir::Right || b == Dir::Right);
    let y = i32::from(a == Dir::Up || b == Dir::Up);
    (x, y)
}

fn global(c: Cell, s: Sub) -> Cell {
    Cell::new(2 * c.x + s.0, 2 * c.y + s.1)
}

/// Arms joined by a corner tromino at this vertex, if any.
fn corner_arms(class: &VertexClass) -> Option<(Dir, Dir)> {
    match class.kind {
        VertexKind::BendedTrunk => Some((class.tags[0].0, class.tags[1].0)),
        VertexKind::Cross21 => {
            let two = class.tags.iter().find(|(_, t)| *t == 2).expect("one tag-2 arm").0;
            let across = Dir::ALL
                .into_iter()
                .find(|d| d.is_horizontal() != two.is_horizontal())
                .expect("a perpendicular side exists");
            Some((two.opposite(), across))
        }
        _ => None,
    }
}

/// Tiles the subdivision of a region with L-trominoes: the region is split
/// into non-detachable trees, and each tree is covered by per-vertex
/// templates with one tromino crossing every tree edge.
pub fn tile_boxplus(r: &Region) -> Result<Tiling> {
    if !r.defects().is_empty() {
        return Err(Error::DefectsUnsupported);
    }
    check_size(r.len())?;
    let tree = decompose(r)?;
    let mut placements = Vec::new();
    for leaf in tree.leaves() {
        placements.extend(tile_tree(&AdjacencyGraph::from_cells(leaf))?);
    }
    let tiling = Tiling::new(placements);
    if let Err(v) = tiling.validate(&r.subdivide_boxplus()) {
        panic!("template stitching produced an invalid tiling: {v:?}");
    }
    Ok(tiling)
}

/// Template tiling of the subdivision of one non-detachable tree.
pub(crate) fn tile_tree(g: &AdjacencyGraph) -> Result<Vec<Placement>> {
    let classes = classify_and_tag(g)?;
    let corners: BTreeMap<Cell, (Dir, Dir)> = classes
        .iter()
        .filter_map(|(&c, class)| corner_arms(class).map(|a| (c, a)))
        .collect();

    // Subcell each vertex offers to the tromino crossing each tag-2 arm.
    let mut offered: BTreeMap<(Cell, Dir), Sub> = BTreeMap::new();
    let mut internal: Vec<Placement> = Vec::new();
    for (&v, class) in &classes {
        let corner = corners.get(&v).copied();
        let mut fixed: Vec<Sub> = Vec::new();
        if let Some((a, b)) = corner {
            fixed.push(corner_sub(a, b));
        }
        let mut free_arms: Vec<(Dir, Vec<Sub>)> = Vec::new();
        for &(d, t) in &class.tags {
            let in_corner = corner.is_some_and(|(a, b)| a == d || b == d);
            match t {
                1 if in_corner => {}
                1 => fixed.extend(facing(d)),
                _ => {
                    let u = d.step(v);
                    let options = match corners.get(&u) {
                        Some(&(a, b)) if a == d.opposite() => vec![corner_sub(d, b)],
                        Some(&(a, b)) if b == d.opposite() => vec![corner_sub(d, a)],
                        _ => facing(d).to_vec(),
                    };
                    free_arms.push((d, options));
                }
            }
        }
        let needs_internal = matches!(class.kind, VertexKind::Leaf | VertexKind::BendedTrunk);
        let target = if needs_internal { 1 } else { 4 };
        let choice = choose(&fixed, &free_arms, target)
            .unwrap_or_else(|| panic!("no template fits vertex {v} of kind {}", class.kind.name()));
        for (&(d, _), &s) in free_arms.iter().zip(&choice) {
            offered.insert((v, d), s);
        }
        if needs_internal {
            let used: BTreeSet<Sub> = fixed.iter().chain(&choice).copied().collect();
            let rest: Vec<Cell> = [(0, 0), (1, 0), (0, 1), (1, 1)]
                .into_iter()
                .filter(|s| !used.contains(s))
                .map(|s| global(v, s))
                .collect();
            internal.push(Placement::from_cells(&rest).expect("three subcells of a block form an L"));
        }
    }

    let mut out = internal;
    for (&v, class) in &classes {
        let corner = corners.get(&v).copied();
        if let Some((a, b)) = corner {
            let cells = [
                global(v, corner_sub(a, b)),
                global(a.step(v), offered[&(a.step(v), a.opposite())]),
                global(b.step(v), offered[&(b.step(v), b.opposite())]),
            ];
            out.push(Placement::from_cells(&cells).expect("corner template is an L"));
        }
        for &(d, t) in &class.tags {
            let in_corner = corner.is_some_and(|(a, b)| a == d || b == d);
            if t != 1 || in_corner {
                continue;
            }
            let u = d.step(v);
            let [s, t2] = facing(d);
            let cells = [global(v, s), global(v, t2), global(u, offered[&(u, d.opposite())])];
            out.push(Placement::from_cells(&cells).expect("edge template is an L"));
        }
    }
    Ok(out)
}

/// First combination of per-arm options that keeps all used subcells
/// distinct and uses exactly `target` of them.
fn choose(fixed: &[Sub], arms: &[(Dir, Vec<Sub>)], target: usize) -> Option<Vec<Sub>> {
    let mut picked = Vec::with_capacity(arms.len());
    fn go(fixed: &[Sub], arms: &[(Dir, Vec<Sub>)], target: usize, picked: &mut Vec<Sub>) -> bool {
        if picked.len() == arms.len() {
            let all: BTreeSet<Sub> = fixed.iter().chain(picked.iter()).copied().collect();
            return all.len() == fixed.len() + picked.len() && all.len() == target;
        }
        for &s in &arms[picked.len()].1 {
            picked.push(s);
            if go(fixed, arms, target, picked) {
                return true;
            }
            picked.pop();
        }
        false
    }
    go(fixed, arms, target, &mut picked).then_some(picked)
}
