//! Deciding 180-tromino covers through maximum independent sets of the
//! intersection graph.

mod catalog;
mod graph;
mod mis;

pub use catalog::{
    claw_configurations, detect_forbidden, forbidden_catalog, ForbiddenClass, ForbiddenOccurrence, ForbiddenVariant,
};
pub use graph::{
    build_intersection_graph, build_region_graph, find_claw, Claw, IntersectionGraph, RegionGraph, SimpleGraph,
};
pub use mis::{mis_claw_free, mis_exact, mis_exact_with_budget};

use crate::error::{Error, Result};
use crate::region::{Cell, Region};
use crate::shape::{PieceSet, Tiling};
use crate::solver::DEFAULT_BUDGET;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MisRoute {
    /// Skipped: the free cell count is not a multiple of 3.
    Divisibility,
    ClawFree,
    Exact,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision180 {
    pub covered: bool,
    pub tiling: Option<Tiling>,
    pub max_independent: usize,
    pub route: MisRoute,
}

/// Right-oriented 180-tromino coverability with the default node budget.
pub fn decide_180_cover(r: &Region) -> Result<Decision180> {
    decide_180_cover_with(r, PieceSet::RIGHT_180, DEFAULT_BUDGET)
}

/// Decides coverability by RIGHT_180 or LEFT_180. Left-oriented instances are
/// mirrored, decided as right-oriented ones, and the witness mirrored back.
pub fn decide_180_cover_with(r: &Region, pieces: PieceSet, budget: u64) -> Result<Decision180> {
    if pieces == PieceSet::LEFT_180 {
        let mirror = |c: Cell| Cell::new(-c.x, c.y);
        let mut d = decide_right(&r.map_cells(mirror), budget)?;
        d.tiling = d
            .tiling
            .map(|t| t.map_cells(mirror).expect("mirrored trominoes stay trominoes"));
        return Ok(d);
    }
    if pieces != PieceSet::RIGHT_180 {
        return Err(Error::InvalidSpec("180 pipeline needs RIGHT_180 or LEFT_180".into()));
    }
    decide_right(r, budget)
}

fn decide_right(r: &Region, budget: u64) -> Result<Decision180> {
    let free = r.free_count();
    if !free.is_multiple_of(3) {
        return Ok(Decision180 {
            covered: false,
            tiling: None,
            max_independent: 0,
            route: MisRoute::Divisibility,
        });
    }
    let ig = IntersectionGraph::from_region(r);
    let (set, route) = if detect_forbidden(r).is_empty() {
        (mis_claw_free(&ig.graph)?, MisRoute::ClawFree)
    } else {
        (mis_exact_with_budget(&ig.graph, budget)?, MisRoute::Exact)
    };
    let covered = set.len() * 3 == free;
    let tiling = covered.then(|| Tiling::new(set.iter().map(|&i| ig.triangles[i]).collect()));
    Ok(Decision180 {
        covered,
        tiling,
        max_independent: set.len(),
        route,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aztec::gen_aztec_diamond;
    use crate::shape::{Placement, ShapeKind};

    #[test]
    fn two_by_three() {
        let r = Region::rectangle(3, 2);
        let d = decide_180_cover(&r).unwrap();
        assert!(d.covered);
        let t = d.tiling.unwrap();
        assert_eq!(t.validate(&r), Ok(()));
        assert!(t.uses_only(PieceSet::RIGHT_180));
    }

    #[test]
    fn diamond_has_no_180_cover() {
        let r = gen_aztec_diamond(2).unwrap();
        assert!(!decide_180_cover(&r).unwrap().covered);
        assert!(
            !decide_180_cover_with(&r, PieceSet::LEFT_180, DEFAULT_BUDGET)
                .unwrap()
                .covered
        );
    }

    #[test]
    fn single_tromino() {
        let r = Region::from_cells(Placement::new(ShapeKind::LA, Cell::new(0, 0)).cells()).unwrap();
        assert!(decide_180_cover(&r).unwrap().covered);
    }

    #[test]
    fn left_witness_uses_left_shapes() {
        let r = Region::from_cells(Placement::new(ShapeKind::LC, Cell::new(4, 1)).cells()).unwrap();
        assert!(!decide_180_cover(&r).unwrap().covered);
        let d = decide_180_cover_with(&r, PieceSet::LEFT_180, DEFAULT_BUDGET).unwrap();
        let t = d.tiling.unwrap();
        assert_eq!(t.validate(&r), Ok(()));
        assert!(t.uses_only(PieceSet::LEFT_180));
    }

    #[test]
    fn mis_of_small_intersection_graphs() {
        let ig = IntersectionGraph::from_region(&Region::rectangle(2, 2));
        assert_eq!(mis_exact(&ig.graph).unwrap().len(), 1);
        assert_eq!(mis_claw_free(&ig.graph).unwrap().len(), 1);
        let ig = IntersectionGraph::from_region(&Region::rectangle(3, 2));
        assert_eq!(mis_exact(&ig.graph).unwrap().len(), 2);
    }

    #[test]
    fn rejects_other_piece_sets() {
        assert!(decide_180_cover_with(&Region::rectangle(3, 1), PieceSet::I, 10).is_err());
    }
}
