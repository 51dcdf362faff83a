use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Unit square with lower-left corner `(x, y)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub x: i32,
    pub y: i32,
}

impl Cell {
    pub const fn new(x: i32, y: i32) -> Self {
        Cell { x, y }
    }

    pub fn offset(self, dx: i32, dy: i32) -> Self {
        Cell::new(self.x + dx, self.y + dy)
    }

    /// The four edge-adjacent cells, in the order left, right, down, up.
    pub fn neighbors(self) -> [Cell; 4] {
        [
            self.offset(-1, 0),
            self.offset(1, 0),
            self.offset(0, -1),
            self.offset(0, 1),
        ]
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl From<(i32, i32)> for Cell {
    fn from((x, y): (i32, i32)) -> Self {
        Cell::new(x, y)
    }
}

/// A finite, edge-connected set of cells, some of which are marked as defects.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Region {
    cells: BTreeSet<Cell>,
    defects: BTreeSet<Cell>,
}

impl Region {
    /// Builds a region, checking that defects lie in the footprint and that
    /// the footprint is edge-connected. The empty region is allowed.
    pub fn new(cells: BTreeSet<Cell>, defects: BTreeSet<Cell>) -> Result<Self> {
        if let Some(d) = defects.iter().find(|d| !cells.contains(d)) {
            return Err(Error::DefectOutside(*d));
        }
        if !is_connected(&cells) {
            return Err(Error::DisconnectedRegion);
        }
        Ok(Region { cells, defects })
    }

    pub fn from_cells<I: IntoIterator<Item = Cell>>(cells: I) -> Result<Self> {
        Region::new(cells.into_iter().collect(), BTreeSet::new())
    }

    /// Axis-aligned `width` × `height` block with lower-left cell at the origin.
    pub fn rectangle(width: i32, height: i32) -> Self {
        let cells = (0..width)
            .flat_map(|x| (0..height).map(move |y| Cell::new(x, y)))
            .collect();
        Region {
            cells,
            defects: BTreeSet::new(),
        }
    }

    pub fn cells(&self) -> &BTreeSet<Cell> {
        &self.cells
    }

    pub fn defects(&self) -> &BTreeSet<Cell> {
        &self.defects
    }

    /// Cells that must be covered, in sorted order.
    pub fn free_cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.cells.iter().copied().filter(|c| !self.defects.contains(c))
    }

    pub fn free_count(&self) -> usize {
        self.cells.len() - self.defects.len()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.cells.contains(&c)
    }

    pub fn is_free(&self, c: Cell) -> bool {
        self.cells.contains(&c) && !self.defects.contains(&c)
    }

    /// Returns a copy with the given cells additionally marked as defects.
    pub fn with_defects<I: IntoIterator<Item = Cell>>(&self, extra: I) -> Result<Self> {
        let mut defects = self.defects.clone();
        for d in extra {
            if !self.cells.contains(&d) {
                return Err(Error::DefectOutside(d));
            }
            defects.insert(d);
        }
        Ok(Region {
            cells: self.cells.clone(),
            defects,
        })
    }

    /// Inclusive bounding box `(min, max)`, or `None` for the empty region.
    pub fn bounds(&self) -> Option<(Cell, Cell)> {
        let first = self.cells.iter().next()?;
        let mut lo = *first;
        let mut hi = *first;
        for c in &self.cells {
            lo.x = lo.x.min(c.x);
            lo.y = lo.y.min(c.y);
            hi.x = hi.x.max(c.x);
            hi.y = hi.y.max(c.y);
        }
        Some((lo, hi))
    }

    pub fn translate(&self, dx: i32, dy: i32) -> Region {
        Region {
            cells: self.cells.iter().map(|c| c.offset(dx, dy)).collect(),
            defects: self.defects.iter().map(|c| c.offset(dx, dy)).collect(),
        }
    }

    /// Translate so that the minimum x and minimum y are both 0.
    pub fn normalized(&self) -> Region {
        match self.bounds() {
            Some((lo, _)) => self.translate(-lo.x, -lo.y),
            None => self.clone(),
        }
    }

    /// Applies a cell map to footprint and defects. The map must be injective.
    pub fn map_cells<F: Fn(Cell) -> Cell>(&self, f: F) -> Region {
        Region {
            cells: self.cells.iter().map(|&c| f(c)).collect(),
            defects: self.defects.iter().map(|&c| f(c)).collect(),
        }
    }

    /// Each cell becomes a 2×2 block; defects become 2×2 blocks of defects.
    pub fn subdivide_boxplus(&self) -> Region {
        let split = |set: &BTreeSet<Cell>| -> BTreeSet<Cell> {
            set.iter()
                .flat_map(|c| {
                    let (x, y) = (2 * c.x, 2 * c.y);
                    [
                        Cell::new(x, y),
                        Cell::new(x + 1, y),
                        Cell::new(x, y + 1),
                        Cell::new(x + 1, y + 1),
                    ]
                })
                .collect()
        };
        Region {
            cells: split(&self.cells),
            defects: split(&self.defects),
        }
    }

    /// Parses the text format: `#` cell, `X` defect, `.` absent; the first
    /// line is the highest row.
    pub fn parse(text: &str) -> Result<Region> {
        let mut lines: Vec<&str> = text.lines().map(|l| l.trim_end_matches([' ', '\t', '\r'])).collect();
        while lines.last().is_some_and(|l| l.is_empty()) {
            lines.pop();
        }
        let height = lines.len() as i32;
        let mut cells = BTreeSet::new();
        let mut defects = BTreeSet::new();
        for (row, line) in lines.iter().enumerate() {
            let y = height - 1 - row as i32;
            for (col, ch) in line.chars().enumerate() {
                let c = Cell::new(col as i32, y);
                match ch {
                    '#' => {
                        cells.insert(c);
                    }
                    'X' => {
                        cells.insert(c);
                        defects.insert(c);
                    }
                    '.' => {}
                    found => {
                        return Err(Error::Syntax {
                            line: row + 1,
                            column: col + 1,
                            found,
                        })
                    }
                }
            }
        }
        if cells.is_empty() {
            return Err(Error::EmptyRegion);
        }
        Region::new(cells, defects)
    }

    /// Serializes the normalized region in the text format, one line per row,
    /// highest row first, with a trailing newline.
    pub fn to_text(&self) -> String {
        let r = self.normalized();
        let Some((_, hi)) = r.bounds() else {
            return String::new();
        };
        let mut out = String::new();
        for y in (0..=hi.y).rev() {
            for x in 0..=hi.x {
                let c = Cell::new(x, y);
                out.push(if r.defects.contains(&c) {
                    'X'
                } else if r.cells.contains(&c) {
                    '#'
                } else {
                    '.'
                });
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Edge-connectivity of a cell set. The empty set counts as connected.
pub fn is_connected(cells: &BTreeSet<Cell>) -> bool {
    let Some(&start) = cells.iter().next() else {
        return true;
    };
    let mut seen = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(c) = queue.pop_front() {
        for n in c.neighbors() {
            if cells.contains(&n) && seen.insert(n) {
                queue.push_back(n);
            }
        }
    }
    seen.len() == cells.len()
}

/// Translates a cell set so its minimum x and y are 0.
pub fn normalize_cells(cells: &BTreeSet<Cell>) -> BTreeSet<Cell> {
    let (Some(mx), Some(my)) = (cells.iter().map(|c| c.x).min(), cells.iter().map(|c| c.y).min()) else {
        return BTreeSet::new();
    };
    cells.iter().map(|c| c.offset(-mx, -my)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_block() {
        let r = Region::parse("##\n##").unwrap();
        assert_eq!(r.len(), 4);
        assert!(r.defects().is_empty());
    }

    #[test]
    fn parses_defect_in_upper_right() {
        let r = Region::parse("#X\n##").unwrap();
        assert_eq!(r.len(), 4);
        assert_eq!(r.defects().iter().copied().collect::<Vec<_>>(), vec![Cell::new(1, 1)]);
    }

    #[test]
    fn rejects_disconnected() {
        assert_eq!(Region::parse("#.#"), Err(Error::DisconnectedRegion));
    }

    #[test]
    fn diagonal_contact_is_not_adjacency() {
        assert_eq!(Region::parse("#.\n.#"), Err(Error::DisconnectedRegion));
    }

    #[test]
    fn rejects_bad_character() {
        assert_eq!(
            Region::parse("##\n#o"),
            Err(Error::Syntax {
                line: 2,
                column: 2,
                found: 'o'
            })
        );
    }

    #[test]
    fn rejects_empty_text() {
        assert_eq!(Region::parse("..\n"), Err(Error::EmptyRegion));
    }

    #[test]
    fn trailing_whitespace_is_ignored() {
        let r = Region::parse("## \n##\r\n\n").unwrap();
        assert_eq!(r, Region::rectangle(2, 2));
    }

    #[test]
    fn text_round_trip() {
        let text = ".#X\n###\n#..\n";
        let r = Region::parse(text).unwrap();
        assert_eq!(r.to_text(), text);
    }

    #[test]
    fn subdivide_counts() {
        let one = Region::rectangle(1, 1).subdivide_boxplus();
        assert_eq!(one, Region::rectangle(2, 2));
        let bar = Region::rectangle(3, 1).subdivide_boxplus();
        assert_eq!(bar, Region::rectangle(6, 2));
        let l = Region::from_cells([Cell::new(0, 0), Cell::new(1, 0), Cell::new(0, 1)]).unwrap();
        let sub = l.subdivide_boxplus();
        assert_eq!(sub.len(), 12);
        assert!(is_connected(sub.cells()));
    }

    #[test]
    fn subdivide_keeps_defects() {
        let r = Region::parse("#X").unwrap().subdivide_boxplus();
        assert_eq!(r.defects().len(), 4);
        assert!(r.defects().contains(&Cell::new(3, 1)));
    }
}
