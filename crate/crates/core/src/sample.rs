//! Region samplers and exhaustive polyomino enumeration for test corpora.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::region::{normalize_cells, Cell, Region};
use crate::tromino180::detect_forbidden;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// All fixed polyominoes with `n` cells, normalized and sorted.
pub fn fixed_polyominoes(n: usize) -> Vec<BTreeSet<Cell>> {
    if n == 0 {
        return Vec::new();
    }
    let mut level: BTreeSet<BTreeSet<Cell>> = BTreeSet::from([BTreeSet::from([Cell::new(0, 0)])]);
    for _ in 1..n {
        let mut next = BTreeSet::new();
        for shape in &level {
            for c in shape {
                for nb in c.neighbors() {
                    if !shape.contains(&nb) {
                        let mut grown = shape.clone();
                        grown.insert(nb);
                        next.insert(normalize_cells(&grown));
                    }
                }
            }
        }
        level = next;
    }
    level.into_iter().collect()
}

fn frontier(cells: &BTreeSet<Cell>) -> Vec<Cell> {
    let f: BTreeSet<Cell> = cells
        .iter()
        .flat_map(|c| c.neighbors())
        .filter(|c| !cells.contains(c))
        .collect();
    f.into_iter().collect()
}

/// Connected polyomino of `n` cells grown one uniformly chosen frontier cell
/// at a time, normalized.
pub fn random_polyomino<R: Rng>(rng: &mut R, n: usize) -> BTreeSet<Cell> {
    let mut cells = BTreeSet::new();
    if n == 0 {
        return cells;
    }
    cells.insert(Cell::new(0, 0));
    while cells.len() < n {
        let f = frontier(&cells);
        cells.insert(f[rng.gen_range(0..f.len())]);
    }
    normalize_cells(&cells)
}

/// Random polyomino with between 1 and `max_cells` cells, each cell marked as
/// a defect with probability `defect_rate`.
pub fn random_region<R: Rng>(rng: &mut R, max_cells: usize, defect_rate: f64) -> Region {
    let n = rng.gen_range(1..=max_cells);
    let cells = random_polyomino(rng, n);
    let defects = cells.iter().copied().filter(|_| rng.gen_bool(defect_rate)).collect();
    Region::new(cells, defects).expect("grown polyominoes are connected")
}

/// Defect-free region of up to `n` cells grown while avoiding every forbidden
/// polyomino, so its intersection graph is claw-free.
pub fn random_claw_free_region<R: Rng>(rng: &mut R, n: usize) -> Region {
    let mut cells = BTreeSet::from([Cell::new(0, 0)]);
    while cells.len() < n {
        let mut f = frontier(&cells);
        f.shuffle(rng);
        let added = f.into_iter().find(|&c| {
            let mut grown = cells.clone();
            grown.insert(c);
            let r = Region::new(grown, BTreeSet::new()).expect("frontier growth stays connected");
            detect_forbidden(&r).is_empty()
        });
        match added {
            Some(c) => {
                cells.insert(c);
            }
            None => break,
        }
    }
    Region::new(normalize_cells(&cells), BTreeSet::new()).expect("connected")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polyomino_counts() {
        let counts: Vec<usize> = (1..=7).map(|n| fixed_polyominoes(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 6, 19, 63, 216, 760]);
    }

    #[test]
    fn random_regions_are_seeded() {
        let a = random_region(&mut seeded_rng(7), 18, 0.2);
        let b = random_region(&mut seeded_rng(7), 18, 0.2);
        assert_eq!(a, b);
        assert!(a.len() <= 18);
    }

    #[test]
    fn claw_free_growth() {
        let r = random_claw_free_region(&mut seeded_rng(3), 40);
        assert!(detect_forbidden(&r).is_empty());
    }
}
