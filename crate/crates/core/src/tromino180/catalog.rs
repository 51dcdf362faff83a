use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use crate::region::{normalize_cells, Cell, Region};
use crate::shape::{Placement, ShapeKind};
use crate::transform::{apply_chain, right_180_symmetries, Transform, TransformChain};

/// One shape of a forbidden class, normalized to min x = min y = 0, with the
/// transform taking the class representative onto it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForbiddenVariant {
    pub cells: BTreeSet<Cell>,
    pub transform: TransformChain,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForbiddenClass {
    pub id: usize,
    pub representative: BTreeSet<Cell>,
    pub variants: Vec<ForbiddenVariant>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForbiddenOccurrence {
    pub class_id: usize,
    /// Maps the class representative onto `cells`.
    pub transform: TransformChain,
    pub cells: BTreeSet<Cell>,
}

fn right_placements_containing(c: Cell) -> Vec<Placement> {
    [ShapeKind::LA, ShapeKind::LB]
        .into_iter()
        .flat_map(|s| s.offsets().map(move |(dx, dy)| Placement::new(s, c.offset(-dx, -dy))))
        .collect()
}

/// Unions of a central right-oriented 180-tromino with three further ones,
/// each meeting the center in exactly one distinct cell and pairwise disjoint:
/// precisely the cell sets of induced claws in the intersection graph.
pub fn claw_configurations() -> BTreeSet<BTreeSet<Cell>> {
    let mut out = BTreeSet::new();
    for shape in [ShapeKind::LA, ShapeKind::LB] {
        let center = Placement::new(shape, Cell::new(0, 0));
        let cc: BTreeSet<Cell> = center.cells().into_iter().collect();
        let leaves_at: Vec<Vec<BTreeSet<Cell>>> = center
            .cells()
            .iter()
            .map(|&c| {
                right_placements_containing(c)
                    .into_iter()
                    .map(|p| p.cells().into_iter().collect::<BTreeSet<Cell>>())
                    .filter(|s| s.intersection(&cc).count() == 1)
                    .collect()
            })
            .collect();
        for x in &leaves_at[0] {
            for y in leaves_at[1].iter().filter(|y| x.is_disjoint(y)) {
                for z in leaves_at[2].iter().filter(|z| x.is_disjoint(z) && y.is_disjoint(z)) {
                    let union: BTreeSet<Cell> = cc.iter().chain(x).chain(y).chain(z).copied().collect();
                    out.insert(normalize_cells(&union));
                }
            }
        }
    }
    out
}

/// Normalizing translation appended to `chain` for the image of `cells`.
fn normalized_image(cells: &BTreeSet<Cell>, chain: &TransformChain) -> (BTreeSet<Cell>, TransformChain) {
    let image = apply_chain(cells, chain);
    let mx = image.iter().map(|c| c.x).min().unwrap_or(0);
    let my = image.iter().map(|c| c.y).min().unwrap_or(0);
    let chain = chain.then(Transform::Translate(-mx, -my));
    (apply_chain(cells, &chain), chain)
}

fn build_catalog() -> Vec<ForbiddenClass> {
    let shapes = claw_configurations();
    let group = right_180_symmetries();
    let mut remaining: BTreeSet<BTreeSet<Cell>> = shapes.clone();
    let mut classes = Vec::new();
    while let Some(rep) = remaining.pop_first() {
        let mut variants: BTreeMap<BTreeSet<Cell>, TransformChain> = BTreeMap::new();
        for g in &group {
            let (image, chain) = normalized_image(&rep, g);
            assert!(shapes.contains(&image), "symmetry must map claws to claws");
            variants.entry(image).or_insert(chain);
        }
        for v in variants.keys() {
            remaining.remove(v);
        }
        classes.push(ForbiddenClass {
            id: classes.len() + 1,
            representative: rep,
            variants: variants
                .into_iter()
                .map(|(cells, transform)| ForbiddenVariant { cells, transform })
                .collect(),
        });
    }
    classes
}

/// The claw-inducing polyominoes grouped into classes under the lattice
/// symmetries that preserve right-oriented 180-trominoes.
pub fn forbidden_catalog() -> &'static [ForbiddenClass] {
    static CATALOG: OnceLock<Vec<ForbiddenClass>> = OnceLock::new();
    CATALOG.get_or_init(build_catalog)
}

/// Every translate of every catalog variant lying in the free cells of `r`,
/// sorted by cells then class.
pub fn detect_forbidden(r: &Region) -> Vec<ForbiddenOccurrence> {
    let free: Vec<Cell> = r.free_cells().collect();
    let mut out = Vec::new();
    for class in forbidden_catalog() {
        for v in &class.variants {
            let first = *v.cells.first().expect("variants are nonempty");
            for f in &free {
                let (dx, dy) = (f.x - first.x, f.y - first.y);
                if v.cells.iter().all(|c| r.is_free(c.offset(dx, dy))) {
                    out.push(ForbiddenOccurrence {
                        class_id: class.id,
                        transform: v.transform.then(Transform::Translate(dx, dy)),
                        cells: v.cells.iter().map(|c| c.offset(dx, dy)).collect(),
                    });
                }
            }
        }
    }
    out.sort_by(|a, b| a.cells.cmp(&b.cells).then(a.class_id.cmp(&b.class_id)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tromino180::graph::{find_claw, IntersectionGraph};

    #[test]
    fn five_classes() {
        let catalog = forbidden_catalog();
        assert_eq!(catalog.len(), 5);
        let total: usize = catalog.iter().map(|c| c.variants.len()).sum();
        assert_eq!(total, claw_configurations().len());
    }

    #[test]
    fn members_are_small_and_clawed() {
        for class in forbidden_catalog() {
            for v in &class.variants {
                assert!(v.cells.len() <= 12);
                let r = Region::new(v.cells.clone(), BTreeSet::new()).unwrap();
                assert!(find_claw(&IntersectionGraph::from_region(&r).graph).is_some());
                assert_eq!(apply_chain(&class.representative, &v.transform), v.cells);
            }
        }
    }

    #[test]
    fn self_occurrence() {
        for class in forbidden_catalog() {
            let r = Region::new(class.representative.clone(), BTreeSet::new()).unwrap();
            let occ = detect_forbidden(&r);
            assert!(occ
                .iter()
                .any(|o| o.class_id == class.id && o.cells == class.representative));
            for o in &occ {
                assert_eq!(apply_chain(&class_of(o.class_id).representative, &o.transform), o.cells);
            }
        }
    }

    fn class_of(id: usize) -> &'static ForbiddenClass {
        &forbidden_catalog()[id - 1]
    }

    #[test]
    fn block_and_strips_are_free_of_forbidden_shapes() {
        assert!(detect_forbidden(&Region::rectangle(2, 2)).is_empty());
        for n in 1..=8 {
            assert!(detect_forbidden(&Region::rectangle(n, 2)).is_empty());
            assert!(detect_forbidden(&Region::rectangle(2, n)).is_empty());
        }
    }
}
