use std::collections::BTreeSet;

use super::{build_stair, gen_aztec_rectangle, AztecRectangleSpec, Band, StairOrientation, StairSpec};
use crate::error::{Error, Result};
use crate::region::Cell;
use crate::shape::{Placement, Tiling};

/// A chain of `m` order-1 Aztec diamonds (2×2 blocks), consecutive blocks
/// sharing one corner cell: upper-right to lower-left, or upper-left to
/// lower-right when `reversed`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FringeSpec {
    pub m: u32,
    pub reversed: bool,
}

impl FringeSpec {
    pub fn cell_count(&self) -> usize {
        3 * self.m as usize + 1
    }

    fn block_origins(&self, origin: Cell) -> Vec<Cell> {
        let dy = if self.reversed { -1 } else { 1 };
        (0..self.m as i32).map(|i| origin.offset(i, i * dy)).collect()
    }
}

fn block(origin: Cell) -> [Cell; 4] {
    [origin, origin.offset(1, 0), origin.offset(0, 1), origin.offset(1, 1)]
}

pub fn fringe_cells(spec: FringeSpec, origin: Cell) -> BTreeSet<Cell> {
    spec.block_origins(origin).into_iter().flat_map(block).collect()
}

/// Tiles a fringe minus one defect cell. Blocks before the defect's block
/// hand their shared corner forward, blocks after it hand it back.
pub fn tile_fringe_with_defect(spec: FringeSpec, origin: Cell, defect: Cell) -> Result<Vec<Placement>> {
    if spec.m == 0 {
        return Err(Error::InvalidSpec("fringe needs m ≥ 1".into()));
    }
    tile_block_chain(&spec.block_origins(origin), defect)
}

/// `origins` are lower-left cells of 2×2 blocks, consecutive blocks sharing
/// exactly one cell.
fn tile_block_chain(origins: &[Cell], defect: Cell) -> Result<Vec<Placement>> {
    let blocks: Vec<[Cell; 4]> = origins.iter().map(|&o| block(o)).collect();
    let shared: Vec<Cell> = blocks
        .windows(2)
        .map(|w| {
            let common: Vec<Cell> = w[0].iter().filter(|c| w[1].contains(c)).copied().collect();
            assert_eq!(common.len(), 1, "consecutive blocks must share one cell");
            common[0]
        })
        .collect();
    let j = blocks
        .iter()
        .position(|b| b.contains(&defect))
        .ok_or(Error::DefectOutside(defect))?;
    let out = blocks
        .iter()
        .enumerate()
        .map(|(i, b)| {
            let skip = match i.cmp(&j) {
                std::cmp::Ordering::Less => shared[i],
                std::cmp::Ordering::Equal => defect,
                std::cmp::Ordering::Greater => shared[i - 1],
            };
            let rest: Vec<Cell> = b.iter().filter(|&&c| c != skip).copied().collect();
            Placement::from_cells(&rest).expect("three cells of a 2×2 block form an L")
        })
        .collect();
    Ok(out)
}

/// L-tromino tiling of AR(a,b) minus one defect, for `a ≡ b ≡ 1 (mod 3)`.
/// A fringe crossing the short side passes through the defect; the bands on
/// either side of it are stairs.
pub fn tile_aztec_one_defect(a: u32, b: u32, defect: Cell) -> Result<Tiling> {
    let spec = AztecRectangleSpec::new(a, b)?;
    if a % 3 != 1 || b % 3 != 1 {
        return Err(Error::InvalidSpec(format!(
            "one-defect tiling needs a ≡ b ≡ 1 (mod 3), got a={a}, b={b}"
        )));
    }
    if !gen_aztec_rectangle(spec).contains(defect) {
        return Err(Error::DefectOutside(defect));
    }
    let band = Band::new(spec);
    let (a, b) = (a as i32, b as i32);
    let (pd, _) = band.pq(defect);
    let k = if pd % 2 == 1 {
        (pd - 1) / 2
    } else if pd / 2 < b {
        pd / 2
    } else {
        pd / 2 - 1
    };
    let stair_k = ((a - 1) / 3) as u32;
    let mut out = Vec::new();
    for l in 0..k {
        let spec = StairSpec {
            k: stair_k,
            orientation: StairOrientation::DownLeft,
        };
        out.extend(build_stair(spec, band.cell(2 * l + 1, 2 * a + 1)));
    }
    let origins: Vec<Cell> = (0..a).map(|m| band.cell(2 * k + 1, 2 * m + 1)).collect();
    out.extend(tile_block_chain(&origins, defect)?);
    for l in k + 2..=b {
        let spec = StairSpec {
            k: stair_k,
            orientation: StairOrientation::UpRight,
        };
        out.extend(build_stair(spec, band.cell(2 * l - 1, 1)));
    }
    Ok(Tiling::new(out))
}
