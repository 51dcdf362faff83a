//! Text and SVG renderings of tilings.

use std::collections::HashMap;
use std::fmt::Write;

use crate::region::{Cell, Region};
use crate::shape::Tiling;

const UNIT: i32 = 20;

fn letter(i: usize) -> char {
    (b'A' + (i % 26) as u8) as char
}

/// One character per cell, top row first: placements get letters A–Z in
/// sorted order (cycling), `X` marks a defect, `#` an uncovered cell and `.`
/// a position outside the region.
pub fn render_ascii(r: &Region, t: &Tiling) -> String {
    let Some((lo, hi)) = r.bounds() else {
        return String::new();
    };
    let owner: HashMap<Cell, usize> = t
        .placements
        .iter()
        .enumerate()
        .flat_map(|(i, p)| p.cells().map(|c| (c, i)))
        .collect();
    let mut out = String::new();
    for y in (lo.y..=hi.y).rev() {
        for x in lo.x..=hi.x {
            let c = Cell::new(x, y);
            let ch = if !r.contains(c) {
                '.'
            } else if !r.is_free(c) {
                'X'
            } else {
                owner.get(&c).map_or('#', |&i| letter(i))
            };
            out.push(ch);
        }
        out.push('\n');
    }
    out
}

/// Unit squares for the cells with tromino outlines drawn along edges that
/// separate different placements.
pub fn render_svg(r: &Region, t: &Tiling) -> String {
    let Some((lo, hi)) = r.bounds() else {
        return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"0\" height=\"0\"/>\n".to_string();
    };
    let owner: HashMap<Cell, usize> = t
        .placements
        .iter()
        .enumerate()
        .flat_map(|(i, p)| p.cells().map(|c| (c, i)))
        .collect();
    let (w, h) = (hi.x - lo.x + 1, hi.y - lo.y + 1);
    let px = |c: Cell| ((c.x - lo.x) * UNIT, (hi.y - c.y) * UNIT);
    let mut out = String::new();
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">",
        w * UNIT,
        h * UNIT,
        w * UNIT,
        h * UNIT
    )
    .expect("writing to a String");
    for &c in r.cells() {
        let (x, y) = px(c);
        let fill = if !r.is_free(c) {
            "#444444".to_string()
        } else if let Some(&i) = owner.get(&c) {
            format!("hsl({}, 60%, 75%)", (i * 47) % 360)
        } else {
            "#ffffff".to_string()
        };
        writeln!(
            out,
            "  <rect x=\"{x}\" y=\"{y}\" width=\"{UNIT}\" height=\"{UNIT}\" fill=\"{fill}\" stroke=\"#bbbbbb\" stroke-width=\"0.5\"/>"
        )
        .expect("writing to a String");
    }
    for &c in r.cells() {
        let (x, y) = px(c);
        let mine = owner.get(&c);
        // Left, right, bottom and top edges of the cell in screen space.
        let sides = [
            (Cell::new(c.x - 1, c.y), (x, y, x, y + UNIT)),
            (Cell::new(c.x + 1, c.y), (x + UNIT, y, x + UNIT, y + UNIT)),
            (Cell::new(c.x, c.y - 1), (x, y + UNIT, x + UNIT, y + UNIT)),
            (Cell::new(c.x, c.y + 1), (x, y, x + UNIT, y)),
        ];
        for (n, (x1, y1, x2, y2)) in sides {
            let theirs = owner.get(&n);
            let boundary = mine != theirs || !r.contains(n);
            // Shared edges are drawn once, from the cell with the smaller key.
            if boundary && (!r.contains(n) || c < n) {
                writeln!(
                    out,
                    "  <line x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" stroke=\"#000000\" stroke-width=\"2\"/>"
                )
                .expect("writing to a String");
            }
        }
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shape::PieceSet;
    use crate::solver::solve;

    #[test]
    fn two_by_three() {
        let r = Region::rectangle(3, 2);
        let t = solve(&r, PieceSet::ALL_L).unwrap().tiling().cloned().unwrap();
        // The 2×3 rectangle has exactly these two L-tilings.
        let text = render_ascii(&r, &t);
        assert!(text == "ABB\nAAB\n" || text == "AAB\nABB\n", "{text}");
    }

    #[test]
    fn defects_and_gaps() {
        let r = Region::parse("#X\n#.").unwrap();
        assert_eq!(render_ascii(&r, &Tiling::new(Vec::new())), "#X\n#.\n");
    }

    #[test]
    fn svg_has_one_rect_per_cell() {
        let r = Region::rectangle(3, 2);
        let t = solve(&r, PieceSet::ALL_L).unwrap().tiling().cloned().unwrap();
        let svg = render_svg(&r, &t);
        assert_eq!(svg.matches("<rect").count(), 6);
        assert!(svg.starts_with("<svg") && svg.ends_with("</svg>\n"));
        // Perimeter 10 plus the 3-unit boundary between the two pieces.
        assert_eq!(svg.matches("<line").count(), 13);
    }
}
