use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::region::{Cell, Region};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ShapeKind {
    LA,
    LB,
    LC,
    LD,
    IH,
    IV,
}

impl ShapeKind {
    pub const ALL: [ShapeKind; 6] = [
        ShapeKind::LA,
        ShapeKind::LB,
        ShapeKind::LC,
        ShapeKind::LD,
        ShapeKind::IH,
        ShapeKind::IV,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            ShapeKind::LA => "L-A",
            ShapeKind::LB => "L-B",
            ShapeKind::LC => "L-C",
            ShapeKind::LD => "L-D",
            ShapeKind::IH => "I-H",
            ShapeKind::IV => "I-V",
        }
    }

    pub fn offsets(self) -> [(i32, i32); 3] {
        match self {
            ShapeKind::LA => [(0, 0), (0, 1), (1, 1)],
            ShapeKind::LB => [(0, 0), (1, 0), (1, 1)],
            ShapeKind::LC => [(0, 1), (1, 1), (1, 0)],
            ShapeKind::LD => [(0, 0), (0, 1), (1, 0)],
            ShapeKind::IH => [(0, 0), (1, 0), (2, 0)],
            ShapeKind::IV => [(0, 0), (0, 1), (0, 2)],
        }
    }

    fn bit(self) -> u8 {
        1 << (self as u8)
    }
}

impl fmt::Display for ShapeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for ShapeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ShapeKind::ALL
            .into_iter()
            .find(|k| k.tag() == s)
            .ok_or_else(|| Error::MalformedTiling(format!("unknown shape tag {s:?}")))
    }
}

/// Nonempty set of admissible shapes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PieceSet(u8);

impl PieceSet {
    pub const ALL_L: PieceSet = PieceSet(0b0000_1111);
    pub const RIGHT_180: PieceSet = PieceSet(0b0000_0011);
    pub const LEFT_180: PieceSet = PieceSet(0b0000_1100);
    pub const I: PieceSet = PieceSet(0b0011_0000);

    pub fn new<I: IntoIterator<Item = ShapeKind>>(shapes: I) -> Result<Self> {
        let mask = shapes.into_iter().fold(0, |m, s| m | s.bit());
        if mask == 0 {
            return Err(Error::InvalidSpec("piece set must be nonempty".into()));
        }
        Ok(PieceSet(mask))
    }

    pub fn contains(self, s: ShapeKind) -> bool {
        self.0 & s.bit() != 0
    }

    pub fn shapes(self) -> impl Iterator<Item = ShapeKind> {
        ShapeKind::ALL.into_iter().filter(move |s| self.contains(*s))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Placement {
    pub anchor: Cell,
    pub shape: ShapeKind,
}

impl Placement {
    pub fn new(shape: ShapeKind, anchor: Cell) -> Self {
        Placement { anchor, shape }
    }

    pub fn cells(&self) -> [Cell; 3] {
        self.shape.offsets().map(|(dx, dy)| self.anchor.offset(dx, dy))
    }

    /// Identifies the placement covering exactly `cells`, if any shape does.
    pub fn from_cells(cells: &[Cell]) -> Option<Placement> {
        if cells.len() != 3 {
            return None;
        }
        let set: BTreeSet<Cell> = cells.iter().copied().collect();
        if set.len() != 3 {
            return None;
        }
        let lx = set.iter().map(|c| c.x).min()?;
        let ly = set.iter().map(|c| c.y).min()?;
        let anchor = Cell::new(lx, ly);
        ShapeKind::ALL.into_iter().find_map(|shape| {
            let p = Placement::new(shape, anchor);
            let pc: BTreeSet<Cell> = p.cells().into_iter().collect();
            (pc == set).then_some(p)
        })
    }
}

impl fmt::Display for Placement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.shape, self.anchor)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Tiling {
    pub placements: Vec<Placement>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    OutsideRegion {
        placement: Placement,
        cell: Cell,
    },
    CoversDefect {
        placement: Placement,
        cell: Cell,
    },
    Overlap {
        first: Placement,
        second: Placement,
        cell: Cell,
    },
    UncoveredCell(Cell),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::OutsideRegion { placement, cell } => {
                write!(f, "placement {placement} covers {cell} outside the region")
            }
            Violation::CoversDefect { placement, cell } => {
                write!(f, "placement {placement} covers defect {cell}")
            }
            Violation::Overlap { first, second, cell } => write!(f, "overlap at {cell} between {first} and {second}"),
            Violation::UncoveredCell(c) => write!(f, "uncovered cell {c}"),
        }
    }
}

impl std::error::Error for Violation {}

impl Tiling {
    pub fn new(mut placements: Vec<Placement>) -> Self {
        placements.sort();
        Tiling { placements }
    }

    pub fn len(&self) -> usize {
        self.placements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.placements.is_empty()
    }

    /// Shapes used by the tiling all belong to `pieces`.
    pub fn uses_only(&self, pieces: PieceSet) -> bool {
        self.placements.iter().all(|p| pieces.contains(p.shape))
    }

    /// Checks that the placements partition the free cells of `r`.
    pub fn validate(&self, r: &Region) -> std::result::Result<(), Violation> {
        let mut owner: BTreeMap<Cell, Placement> = BTreeMap::new();
        for p in &self.placements {
            for c in p.cells() {
                if !r.contains(c) {
                    return Err(Violation::OutsideRegion { placement: *p, cell: c });
                }
                if r.defects().contains(&c) {
                    return Err(Violation::CoversDefect { placement: *p, cell: c });
                }
                if let Some(first) = owner.insert(c, *p) {
                    return Err(Violation::Overlap {
                        first,
                        second: *p,
                        cell: c,
                    });
                }
            }
        }
        match r.free_cells().find(|c| !owner.contains_key(c)) {
            Some(c) => Err(Violation::UncoveredCell(c)),
            None => Ok(()),
        }
    }

    /// Applies a cell map to every placement. The map must send each
    /// placement onto some shape; returns `None` otherwise.
    pub fn map_cells<F: Fn(Cell) -> Cell>(&self, f: F) -> Option<Tiling> {
        let placements = self
            .placements
            .iter()
            .map(|p| Placement::from_cells(&p.cells().map(&f)))
            .collect::<Option<Vec<_>>>()?;
        Some(Tiling::new(placements))
    }

    pub fn to_json(&self) -> String {
        let records: Vec<PlacementRecord> = self.placements.iter().map(PlacementRecord::from).collect();
        serde_json::to_string_pretty(&records).expect("placement records always serialize")
    }

    pub fn from_json(text: &str) -> Result<Tiling> {
        let records: Vec<PlacementRecord> =
            serde_json::from_str(text).map_err(|e| Error::MalformedTiling(e.to_string()))?;
        let placements = records
            .into_iter()
            .map(PlacementRecord::into_placement)
            .collect::<Result<Vec<_>>>()?;
        Ok(Tiling::new(placements))
    }
}

/// Interchange form of a placement.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct PlacementRecord {
    shape: String,
    anchor: [i32; 2],
    cells: Vec<[i32; 2]>,
}

impl From<&Placement> for PlacementRecord {
    fn from(p: &Placement) -> Self {
        PlacementRecord {
            shape: p.shape.tag().to_string(),
            anchor: [p.anchor.x, p.anchor.y],
            cells: p.cells().iter().map(|c| [c.x, c.y]).collect(),
        }
    }
}

impl PlacementRecord {
    fn into_placement(self) -> Result<Placement> {
        let shape: ShapeKind = self.shape.parse()?;
        let p = Placement::new(shape, Cell::new(self.anchor[0], self.anchor[1]));
        let expected: BTreeSet<Cell> = p.cells().into_iter().collect();
        let given: BTreeSet<Cell> = self.cells.iter().map(|&[x, y]| Cell::new(x, y)).collect();
        if self.cells.len() != 3 || expected != given {
            return Err(Error::MalformedTiling(format!(
                "cells listed for {p} do not match its shape"
            )));
        }
        Ok(p)
    }
}

/// All placements of `pieces` whose cells are free cells of `r`, sorted by
/// anchor then shape.
pub fn enumerate_placements(r: &Region, pieces: PieceSet) -> Vec<Placement> {
    let shapes: Vec<ShapeKind> = pieces.shapes().collect();
    let mut out = Vec::new();
    let mut anchors: BTreeSet<Cell> = BTreeSet::new();
    for c in r.free_cells() {
        for s in &shapes {
            for (dx, dy) in s.offsets() {
                anchors.insert(c.offset(-dx, -dy));
            }
        }
    }
    for a in anchors {
        for &s in &shapes {
            let p = Placement::new(s, a);
            if p.cells().iter().all(|&c| r.is_free(c)) {
                out.push(p);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn right_pair_share_diagonal() {
        for s in [ShapeKind::LA, ShapeKind::LB] {
            let o = s.offsets();
            assert!(o.contains(&(0, 0)) && o.contains(&(1, 1)));
        }
    }

    #[test]
    fn block_right_180_placements() {
        let p = enumerate_placements(&Region::rectangle(2, 2), PieceSet::RIGHT_180);
        assert_eq!(
            p,
            vec![
                Placement::new(ShapeKind::LA, Cell::new(0, 0)),
                Placement::new(ShapeKind::LB, Cell::new(0, 0))
            ]
        );
    }

    #[test]
    fn single_cell_has_no_placements() {
        assert!(enumerate_placements(&Region::rectangle(1, 1), PieceSet::ALL_L).is_empty());
    }

    #[test]
    fn three_by_two_has_eight_l_placements() {
        assert_eq!(enumerate_placements(&Region::rectangle(3, 2), PieceSet::ALL_L).len(), 8);
    }

    #[test]
    fn from_cells_recovers_every_shape() {
        for s in ShapeKind::ALL {
            let p = Placement::new(s, Cell::new(3, -2));
            assert_eq!(Placement::from_cells(&p.cells()), Some(p));
        }
        let diag = [Cell::new(0, 0), Cell::new(1, 1), Cell::new(2, 2)];
        assert_eq!(Placement::from_cells(&diag), None);
    }

    fn two_by_three_cover() -> Tiling {
        Tiling::new(vec![
            Placement::new(ShapeKind::LA, Cell::new(0, 0)),
            Placement::new(ShapeKind::LB, Cell::new(1, 0)),
        ])
    }

    #[test]
    fn validates_cover() {
        assert_eq!(two_by_three_cover().validate(&Region::rectangle(3, 2)), Ok(()));
    }

    #[test]
    fn empty_tiling_leaves_uncovered_cell() {
        assert_eq!(
            Tiling::default().validate(&Region::rectangle(3, 2)),
            Err(Violation::UncoveredCell(Cell::new(0, 0)))
        );
    }

    #[test]
    fn overlap_is_reported() {
        let t = Tiling::new(vec![
            Placement::new(ShapeKind::LA, Cell::new(0, 0)),
            Placement::new(ShapeKind::LB, Cell::new(0, 0)),
        ]);
        assert!(matches!(
            t.validate(&Region::rectangle(3, 2)),
            Err(Violation::Overlap { .. })
        ));
    }

    #[test]
    fn defect_and_outside_are_reported() {
        let r = Region::parse("#X#\n###").unwrap();
        let t = Tiling::new(vec![Placement::new(ShapeKind::LA, Cell::new(0, 0))]);
        assert!(matches!(t.validate(&r), Err(Violation::CoversDefect { .. })));
        let t = Tiling::new(vec![Placement::new(ShapeKind::IH, Cell::new(1, 0))]);
        assert!(matches!(t.validate(&r), Err(Violation::OutsideRegion { .. })));
    }

    #[test]
    fn json_round_trip() {
        let t = two_by_three_cover();
        assert_eq!(Tiling::from_json(&t.to_json()).unwrap(), t);
    }

    #[test]
    fn json_rejects_inconsistent_cells() {
        let text = r#"[{"shape":"L-A","anchor":[0,0],"cells":[[0,0],[1,0],[1,1]]}]"#;
        assert!(Tiling::from_json(text).is_err());
        let text = r#"[{"shape":"L-Q","anchor":[0,0],"cells":[[0,0],[0,1],[1,1]]}]"#;
        assert!(Tiling::from_json(text).is_err());
    }
}
