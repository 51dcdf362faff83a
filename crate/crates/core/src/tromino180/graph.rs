use std::collections::HashMap;
use std::fmt::Write;

use crate::region::{Cell, Region};
use crate::shape::Placement;

/// Undirected simple graph on vertices `0..n` with sorted adjacency lists and
/// a bit-matrix for constant-time adjacency tests.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<Vec<usize>>,
    rows: Vec<Vec<u64>>,
}

impl SimpleGraph {
    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Self {
        let words = n.div_ceil(64);
        let mut rows = vec![vec![0u64; words]; n];
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            assert!(u != v && u < n && v < n, "invalid edge ({u},{v})");
            rows[u][v / 64] |= 1 << (v % 64);
            rows[v][u / 64] |= 1 << (u % 64);
            adj[u].push(v);
            adj[v].push(u);
        }
        for ns in &mut adj {
            ns.sort_unstable();
            ns.dedup();
        }
        SimpleGraph { adj, rows }
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u][v / 64] >> (v % 64) & 1 == 1
    }

    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.rows[v]
    }

    /// Edges `(u, v)` with `u < v`, in sorted order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Whether `set` is an independent set.
    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| u != v && !self.adjacent(u, v)))
    }

    pub fn path(n: usize) -> Self {
        SimpleGraph::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn cycle(n: usize) -> Self {
        SimpleGraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn complete(n: usize) -> Self {
        SimpleGraph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    pub fn star(leaves: usize) -> Self {
        SimpleGraph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v)))
    }
}

/// Non-defect cells joined orthogonally and along the (a,b)–(a+1,b+1)
/// diagonal. Its triangles are exactly the right-oriented 180-trominoes.
#[derive(Debug, Clone)]
pub struct RegionGraph {
    pub vertices: Vec<Cell>,
    pub graph: SimpleGraph,
}

pub fn build_region_graph(r: &Region) -> RegionGraph {
    let vertices: Vec<Cell> = r.free_cells().collect();
    let index: HashMap<Cell, usize> = vertices.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut edges = Vec::new();
    for (i, c) in vertices.iter().enumerate() {
        for n in [c.offset(1, 0), c.offset(0, 1), c.offset(1, 1)] {
            if let Some(&j) = index.get(&n) {
                edges.push((i, j));
            }
        }
    }
    RegionGraph {
        graph: SimpleGraph::from_edges(vertices.len(), edges),
        vertices,
    }
}

impl RegionGraph {
    /// Mutually adjacent vertex triples `u < v < w`.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let g = &self.graph;
        let mut out = Vec::new();
        for u in 0..g.len() {
            for &v in g.neighbors(u).iter().filter(|&&v| v > u) {
                for &w in g.neighbors(v).iter().filter(|&&w| w > v) {
                    if g.adjacent(u, w) {
                        out.push([u, v, w]);
                    }
                }
            }
        }
        out
    }

    /// One edge per line, vertices written as `x,y`.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (u, v) in self.graph.edges() {
            let (a, b) = (self.vertices[u], self.vertices[v]);
            writeln!(out, "{},{} {},{}", a.x, a.y, b.x, b.y).expect("writing to a String");
        }
        out
    }
}

/// One vertex per triangle of the region graph; triangles sharing a cell are
/// adjacent.
#[derive(Debug, Clone)]
pub struct IntersectionGraph {
    pub triangles: Vec<Placement>,
    pub graph: SimpleGraph,
}

pub fn build_intersection_graph(g: &RegionGraph) -> IntersectionGraph {
    let mut triangles: Vec<Placement> = g
        .triangles()
        .into_iter()
        .map(|t| Placement::from_cells(&t.map(|i| g.vertices[i])).expect("triangles are L-trominoes"))
        .collect();
    triangles.sort();
    let mut by_cell: HashMap<Cell, Vec<usize>> = HashMap::new();
    for (i, t) in triangles.iter().enumerate() {
        for c in t.cells() {
            by_cell.entry(c).or_default().push(i);
        }
    }
    let mut edges = Vec::new();
    for ts in by_cell.values() {
        for (k, &u) in ts.iter().enumerate() {
            for &v in &ts[k + 1..] {
                edges.push((u, v));
            }
        }
    }
    IntersectionGraph {
        graph: SimpleGraph::from_edges(triangles.len(), edges),
        triangles,
    }
}

impl IntersectionGraph {
    pub fn from_region(r: &Region) -> Self {
        build_intersection_graph(&build_region_graph(r))
    }

    /// One edge per line, vertices written as triangle indices.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (u, v) in self.graph.edges() {
            writeln!(out, "{u} {v}").expect("writing to a String");
        }
        out
    }
}

/// An induced K(1,3): the center is adjacent to three pairwise non-adjacent
/// leaves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Claw {
    pub center: usize,
    pub leaves: [usize; 3],
}

/// First induced claw in lexicographic order of (center, leaves).
pub fn find_claw(g: &SimpleGraph) -> Option<Claw> {
    for center in 0..g.len() {
        let ns = g.neighbors(center);
        for (i, &x) in ns.iter().enumerate() {
            for (j, &y) in ns.iter().enumerate().skip(i + 1) {
                if g.adjacent(x, y) {
                    continue;
                }
                for &z in &ns[j + 1..] {
                    if !g.adjacent(x, z) && !g.adjacent(y, z) {
                        return Some(Claw {
                            center,
                            leaves: [x, y, z],
                        });
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shape::{enumerate_placements, PieceSet};

    #[test]
    fn block_region_graph() {
        let g = build_region_graph(&Region::rectangle(2, 2));
        assert_eq!(g.vertices.len(), 4);
        assert_eq!(g.graph.edge_count(), 5);
        assert!(!g.graph.adjacent(1, 2), "anti-diagonal must be absent");
    }

    #[test]
    fn small_region_graphs() {
        let g = build_region_graph(&Region::rectangle(1, 1));
        assert_eq!((g.vertices.len(), g.graph.edge_count()), (1, 0));
        let g = build_region_graph(&Region::rectangle(3, 1));
        assert_eq!((g.vertices.len(), g.graph.edge_count()), (3, 2));
    }

    #[test]
    fn defects_are_not_vertices() {
        let g = build_region_graph(&Region::parse("#X\n##").unwrap());
        assert_eq!(g.vertices.len(), 3);
    }

    #[test]
    fn block_intersection_graph() {
        let ig = IntersectionGraph::from_region(&Region::rectangle(2, 2));
        assert_eq!(ig.triangles.len(), 2);
        assert_eq!(ig.graph.edge_count(), 1);
    }

    #[test]
    fn three_mutually_overlapping_triangles() {
        let r = Region::parse("###\n##.").unwrap();
        let ig = IntersectionGraph::from_region(&r);
        assert_eq!(ig.graph, SimpleGraph::complete(3));
    }

    #[test]
    fn bar_has_no_triangles() {
        let ig = IntersectionGraph::from_region(&Region::rectangle(3, 1));
        assert!(ig.graph.is_empty());
    }

    #[test]
    fn triangles_match_right_placements() {
        let r = Region::parse("###.\n####\n.###").unwrap();
        let ig = IntersectionGraph::from_region(&r);
        assert_eq!(ig.triangles, enumerate_placements(&r, PieceSet::RIGHT_180));
    }

    #[test]
    fn claws() {
        assert_eq!(find_claw(&SimpleGraph::from_edges(0, [])), None);
        assert_eq!(
            find_claw(&SimpleGraph::star(3)),
            Some(Claw {
                center: 0,
                leaves: [1, 2, 3]
            })
        );
        assert_eq!(find_claw(&SimpleGraph::complete(4)), None);
        assert_eq!(find_claw(&SimpleGraph::cycle(6)), None);
    }

    #[test]
    fn edge_lists() {
        let g = build_region_graph(&Region::rectangle(2, 1));
        assert_eq!(g.to_edge_list(), "0,0 1,0\n");
        let ig = IntersectionGraph::from_region(&Region::rectangle(2, 2));
        assert_eq!(ig.to_edge_list(), "0 1\n");
    }
}
