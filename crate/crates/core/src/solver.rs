//! Exact-cover search over tromino placements: decision, counting and
//! maximum packing.

use std::collections::HashMap;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::region::{Cell, Region};
use crate::shape::{enumerate_placements, PieceSet, Placement, Tiling};

pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveStatus {
    Covered(Tiling),
    Uncoverable,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub status: SolveStatus,
    pub nodes_expanded: u64,
}

impl SolveResult {
    pub fn is_covered(&self) -> bool {
        matches!(self.status, SolveStatus::Covered(_))
    }

    pub fn tiling(&self) -> Option<&Tiling> {
        match &self.status {
            SolveStatus::Covered(t) => Some(t),
            SolveStatus::Uncoverable => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PackingResult {
    pub max_tiles: usize,
    pub witness: Vec<Placement>,
    pub nodes_expanded: u64,
}

/// Search configuration. Every search step that tries a placement counts as
/// one node against the budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Solver {
    pub budget: u64,
}

impl Default for Solver {
    fn default() -> Self {
        Solver { budget: DEFAULT_BUDGET }
    }
}

impl Solver {
    pub fn with_budget(budget: u64) -> Self {
        Solver { budget }
    }

    /// Finds a tiling of the free cells, branching on the uncovered cell with
    /// the fewest available placements.
    pub fn solve(&self, r: &Region, pieces: PieceSet) -> Result<SolveResult> {
        if !r.free_count().is_multiple_of(3) {
            return Ok(SolveResult {
                status: SolveStatus::Uncoverable,
                nodes_expanded: 0,
            });
        }
        let problem = Problem::new(r, pieces);
        let mut s = Search::new(&problem, self.budget);
        let status = if s.cover()? {
            let placements = s.chosen.iter().map(|&p| problem.placements[p as usize]).collect();
            SolveStatus::Covered(Tiling::new(placements))
        } else {
            SolveStatus::Uncoverable
        };
        Ok(SolveResult {
            status,
            nodes_expanded: s.nodes,
        })
    }

    /// Number of distinct tilings, memoized on the set of covered cells.
    pub fn count(&self, r: &Region, pieces: PieceSet) -> Result<BigUint> {
        if !r.free_count().is_multiple_of(3) {
            return Ok(BigUint::ZERO);
        }
        let problem = Problem::new(r, pieces);
        let mut c = Counter {
            pb: &problem,
            covered: vec![0; problem.cells.len().div_ceil(64)],
            memo: HashMap::new(),
            nodes: 0,
            budget: self.budget,
        };
        c.count(0)
    }

    /// Largest set of pairwise disjoint placements inside the free cells.
    pub fn max_packing(&self, r: &Region, pieces: PieceSet) -> Result<PackingResult> {
        let problem = Problem::new(r, pieces);
        let n = problem.cells.len();
        let mut p = Packer {
            pb: &problem,
            state: vec![CellState::Open; n],
            current: Vec::new(),
            best: Vec::new(),
            nodes: 0,
            budget: self.budget,
        };
        p.pack(0, n)?;
        let mut witness: Vec<Placement> = p.best.iter().map(|&i| problem.placements[i as usize]).collect();
        witness.sort();
        Ok(PackingResult {
            max_tiles: witness.len(),
            witness,
            nodes_expanded: p.nodes,
        })
    }
}

pub fn solve(r: &Region, pieces: PieceSet) -> Result<SolveResult> {
    Solver::default().solve(r, pieces)
}

pub fn count(r: &Region, pieces: PieceSet) -> Result<BigUint> {
    Solver::default().count(r, pieces)
}

pub fn max_packing(r: &Region, pieces: PieceSet) -> Result<PackingResult> {
    Solver::default().max_packing(r, pieces)
}

/// Free cells and placements translated to dense indices.
struct Problem {
    cells: Vec<Cell>,
    placements: Vec<Placement>,
    pcells: Vec<[u32; 3]>,
    cover: Vec<Vec<u32>>,
}

impl Problem {
    fn new(r: &Region, pieces: PieceSet) -> Problem {
        let cells: Vec<Cell> = r.free_cells().collect();
        let index: HashMap<Cell, u32> = cells.iter().enumerate().map(|(i, &c)| (c, i as u32)).collect();
        let placements = enumerate_placements(r, pieces);
        let mut cover = vec![Vec::new(); cells.len()];
        let pcells: Vec<[u32; 3]> = placements
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let ids = p.cells().map(|c| index[&c]);
                for &c in &ids {
                    cover[c as usize].push(i as u32);
                }
                ids
            })
            .collect();
        Problem {
            cells,
            placements,
            pcells,
            cover,
        }
    }
}

struct Search<'a> {
    pb: &'a Problem,
    covered: Vec<bool>,
    blocked: Vec<u8>,
    avail: Vec<u32>,
    remaining: usize,
    chosen: Vec<u32>,
    nodes: u64,
    budget: u64,
}

impl<'a> Search<'a> {
    fn new(pb: &'a Problem, budget: u64) -> Self {
        Search {
            pb,
            covered: vec![false; pb.cells.len()],
            blocked: vec![0; pb.placements.len()],
            avail: pb.cover.iter().map(|v| v.len() as u32).collect(),
            remaining: pb.cells.len(),
            chosen: Vec::new(),
            nodes: 0,
            budget,
        }
    }

    fn place(&mut self, p: u32) {
        for &c in &self.pb.pcells[p as usize] {
            self.covered[c as usize] = true;
            for &q in &self.pb.cover[c as usize] {
                self.blocked[q as usize] += 1;
                if self.blocked[q as usize] == 1 {
                    for &c2 in &self.pb.pcells[q as usize] {
                        self.avail[c2 as usize] -= 1;
                    }
                }
            }
        }
        self.remaining -= 3;
    }

    fn unplace(&mut self, p: u32) {
        for &c in self.pb.pcells[p as usize].iter().rev() {
            self.covered[c as usize] = false;
            for &q in &self.pb.cover[c as usize] {
                self.blocked[q as usize] -= 1;
                if self.blocked[q as usize] == 0 {
                    for &c2 in &self.pb.pcells[q as usize] {
                        self.avail[c2 as usize] += 1;
                    }
                }
            }
        }
        self.remaining += 3;
    }

    fn cover(&mut self) -> Result<bool> {
        if self.remaining == 0 {
            return Ok(true);
        }
        let mut target = usize::MAX;
        let mut fewest = u32::MAX;
        for c in 0..self.covered.len() {
            if !self.covered[c] && self.avail[c] < fewest {
                fewest = self.avail[c];
                target = c;
                if fewest <= 1 {
                    break;
                }
            }
        }
        if fewest == 0 {
            return Ok(false);
        }
        let pb = self.pb;
        for &q in &pb.cover[target] {
            if self.blocked[q as usize] != 0 {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::ResourceLimit { budget: self.budget });
            }
            self.place(q);
            self.chosen.push(q);
            if self.cover()? {
                return Ok(true);
            }
            self.chosen.pop();
            self.unplace(q);
        }
        Ok(false)
    }
}

struct Counter<'a> {
    pb: &'a Problem,
    covered: Vec<u64>,
    memo: HashMap<Vec<u64>, BigUint>,
    nodes: u64,
    budget: u64,
}

impl Counter<'_> {
    fn is_covered(&self, c: u32) -> bool {
        self.covered[c as usize / 64] >> (c % 64) & 1 == 1
    }

    fn toggle(&mut self, p: u32) {
        for &c in &self.pb.pcells[p as usize] {
            self.covered[c as usize / 64] ^= 1 << (c % 64);
        }
    }

    fn count(&mut self, from: usize) -> Result<BigUint> {
        let n = self.pb.cells.len();
        let mut first = from;
        while first < n && self.is_covered(first as u32) {
            first += 1;
        }
        if first == n {
            return Ok(BigUint::from(1u32));
        }
        if let Some(v) = self.memo.get(&self.covered) {
            return Ok(v.clone());
        }
        let mut total = BigUint::ZERO;
        let pb = self.pb;
        for &q in &pb.cover[first] {
            if pb.pcells[q as usize].iter().any(|&c| self.is_covered(c)) {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::ResourceLimit { budget: self.budget });
            }
            self.toggle(q);
            total += self.count(first + 1)?;
            self.toggle(q);
        }
        self.memo.insert(self.covered.clone(), total.clone());
        Ok(total)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum CellState {
    Open,
    Covered,
    Skipped,
}

struct Packer<'a> {
    pb: &'a Problem,
    state: Vec<CellState>,
    current: Vec<u32>,
    best: Vec<u32>,
    nodes: u64,
    budget: u64,
}

impl Packer<'_> {
    /// Decides cells in index order: each open cell is either covered by a
    /// placement whose cells are all open, or left uncovered.
    fn pack(&mut self, from: usize, open: usize) -> Result<()> {
        let n = self.state.len();
        let mut i = from;
        while i < n && self.state[i] != CellState::Open {
            i += 1;
        }
        if i == n {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            return Ok(());
        }
        if self.current.len() + open / 3 <= self.best.len() {
            return Ok(());
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::ResourceLimit { budget: self.budget });
        }
        let pb = self.pb;
        for &q in &pb.cover[i] {
            let cells = pb.pcells[q as usize];
            if cells.iter().any(|&c| self.state[c as usize] != CellState::Open) {
                continue;
            }
            for &c in &cells {
                self.state[c as usize] = CellState::Covered;
            }
            self.current.push(q);
            self.pack(i + 1, open - 3)?;
            self.current.pop();
            for &c in &cells {
                self.state[c as usize] = CellState::Open;
            }
        }
        self.state[i] = CellState::Skipped;
        self.pack(i + 1, open - 1)?;
        self.state[i] = CellState::Open;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aztec::gen_aztec_diamond;
    use crate::shape::ShapeKind;

    #[test]
    fn two_by_three_is_covered() {
        let r = Region::rectangle(3, 2);
        let res = solve(&r, PieceSet::ALL_L).unwrap();
        assert_eq!(res.tiling().unwrap().validate(&r), Ok(()));
    }

    #[test]
    fn fast_path_skips_search() {
        let res = solve(&Region::rectangle(2, 2), PieceSet::ALL_L).unwrap();
        assert_eq!(res.status, SolveStatus::Uncoverable);
        assert_eq!(res.nodes_expanded, 0);
    }

    #[test]
    fn diamond_of_order_two_is_covered() {
        let r = gen_aztec_diamond(2).unwrap();
        let res = solve(&r, PieceSet::ALL_L).unwrap();
        assert_eq!(res.tiling().unwrap().validate(&r), Ok(()));
    }

    #[test]
    fn budget_exhaustion_is_distinct() {
        let r = Region::rectangle(6, 6)
            .with_defects([Cell::new(0, 0), Cell::new(5, 5), Cell::new(0, 5)])
            .unwrap();
        let err = Solver::with_budget(5).solve(&r, PieceSet::RIGHT_180).unwrap_err();
        assert_eq!(err, Error::ResourceLimit { budget: 5 });
    }

    #[test]
    fn counts() {
        assert_eq!(
            count(&Region::rectangle(3, 2), PieceSet::ALL_L).unwrap(),
            BigUint::from(2u32)
        );
        let l = Region::from_cells(Placement::new(ShapeKind::LA, Cell::new(0, 0)).cells()).unwrap();
        assert_eq!(count(&l, PieceSet::ALL_L).unwrap(), BigUint::from(1u32));
        assert_eq!(count(&Region::rectangle(2, 2), PieceSet::ALL_L).unwrap(), BigUint::ZERO);
    }

    #[test]
    fn packings() {
        assert_eq!(
            max_packing(&Region::rectangle(2, 2), PieceSet::RIGHT_180)
                .unwrap()
                .max_tiles,
            1
        );
        assert_eq!(
            max_packing(&Region::rectangle(3, 2), PieceSet::ALL_L)
                .unwrap()
                .max_tiles,
            2
        );
        let empty = Region::from_cells([]).unwrap();
        assert_eq!(max_packing(&empty, PieceSet::ALL_L).unwrap().max_tiles, 0);
    }

    #[test]
    fn deterministic() {
        let r = gen_aztec_diamond(3).unwrap();
        assert_eq!(solve(&r, PieceSet::ALL_L).unwrap(), solve(&r, PieceSet::ALL_L).unwrap());
    }
}
