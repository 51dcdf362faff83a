//! Detachability, decomposition into tree-shaped parts, and L-tromino tilings
//! of subdivided regions.

mod tags;
mod tile;

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::Write;

pub use tags::{classify_and_tag, Dir, VertexClass, VertexKind};
pub use tile::tile_boxplus;

use crate::error::{Error, Result};
use crate::region::{Cell, Region};

/// Cells joined by orthogonal adjacency only. Vertex ids follow sorted cell
/// order, so edge ids `(u, v)` with `u < v` sort lexicographically.
#[derive(Debug, Clone)]
pub struct AdjacencyGraph {
    pub vertices: Vec<Cell>,
    index: HashMap<Cell, usize>,
    adj: Vec<Vec<usize>>,
}

impl AdjacencyGraph {
    pub fn from_cells(cells: &BTreeSet<Cell>) -> Self {
        let vertices: Vec<Cell> = cells.iter().copied().collect();
        let index: HashMap<Cell, usize> = vertices.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let adj = vertices
            .iter()
            .map(|c| {
                let mut ns: Vec<usize> = c.neighbors().iter().filter_map(|n| index.get(n).copied()).collect();
                ns.sort_unstable();
                ns
            })
            .collect();
        AdjacencyGraph { vertices, index, adj }
    }

    pub fn from_region(r: &Region) -> Result<Self> {
        if !r.defects().is_empty() {
            return Err(Error::DefectsUnsupported);
        }
        Ok(AdjacencyGraph::from_cells(r.cells()))
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn index_of(&self, c: Cell) -> Option<usize> {
        self.index.get(&c).copied()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = (0..self.len())
            .flat_map(|u| self.adj[u].iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_connected(&self) -> bool {
        self.is_empty() || reachable(self.len(), 0, |v| self.adj[v].clone()).len() == self.len()
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() + 1 == self.len()
    }

    /// Parent of every vertex in a breadth-first tree from vertex 0 and the
    /// visit order.
    fn bfs_tree(&self) -> (Vec<usize>, Vec<usize>) {
        let mut parent = vec![usize::MAX; self.len()];
        let mut order = Vec::with_capacity(self.len());
        if self.is_empty() {
            return (parent, order);
        }
        parent[0] = 0;
        let mut queue = VecDeque::from([0]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &u in &self.adj[v] {
                if parent[u] == usize::MAX {
                    parent[u] = v;
                    queue.push_back(u);
                }
            }
        }
        (parent, order)
    }

    /// Subtree sizes for the breadth-first tree (only meaningful on trees).
    fn subtree_sizes(&self) -> (Vec<usize>, Vec<usize>) {
        let (parent, order) = self.bfs_tree();
        let mut size = vec![1; self.len()];
        for &v in order.iter().skip(1).rev() {
            size[parent[v]] += size[v];
        }
        (parent, size)
    }
}

fn reachable<F: Fn(usize) -> Vec<usize>>(n: usize, start: usize, next: F) -> BTreeSet<usize> {
    let mut seen = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for u in next(v) {
            if u < n && seen.insert(u) {
                queue.push_back(u);
            }
        }
    }
    seen
}

/// A cut splitting a graph into two connected, induced parts whose sizes are
/// multiples of 3. `edges` lists every edge between the parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DetachCut {
    pub edges: Vec<(Cell, Cell)>,
    pub parts: [BTreeSet<Cell>; 2],
}

impl DetachCut {
    fn from_parts(g: &AdjacencyGraph, first: BTreeSet<usize>) -> DetachCut {
        let edges = g
            .edges()
            .into_iter()
            .filter(|(u, v)| first.contains(u) != first.contains(v))
            .map(|(u, v)| (g.vertices[u], g.vertices[v]))
            .collect();
        let part = |inside: bool| -> BTreeSet<Cell> {
            (0..g.len())
                .filter(|v| first.contains(v) == inside)
                .map(|v| g.vertices[v])
                .collect()
        };
        DetachCut {
            edges,
            parts: [part(true), part(false)],
        }
    }

    /// Checks the cut invariants against the graph it was taken from.
    pub fn is_valid_for(&self, g: &AdjacencyGraph) -> bool {
        let [a, b] = &self.parts;
        let sizes_ok = !a.is_empty() && !b.is_empty() && a.len() % 3 == 0 && b.len() % 3 == 0;
        let partition_ok = a.is_disjoint(b) && a.len() + b.len() == g.len();
        let crossing: Vec<(Cell, Cell)> = g
            .edges()
            .into_iter()
            .map(|(u, v)| (g.vertices[u], g.vertices[v]))
            .filter(|(x, y)| a.contains(x) != a.contains(y))
            .collect();
        sizes_ok
            && partition_ok
            && crossing == self.edges
            && crate::region::is_connected(a)
            && crate::region::is_connected(b)
    }
}

fn check_size(n: usize) -> Result<()> {
    if !n.is_multiple_of(3) {
        return Err(Error::SizeNotDivisible(n));
    }
    Ok(())
}

/// Whether the region splits into two connected parts with sizes divisible
/// by 3. Any grid region with a cycle does (every grid cycle has length at
/// least 4); a tree does iff removing some edge leaves sizes divisible by 3.
pub fn is_detachable(r: &Region) -> Result<bool> {
    let g = AdjacencyGraph::from_region(r)?;
    check_size(g.len())?;
    Ok(graph_is_detachable(&g))
}

fn graph_is_detachable(g: &AdjacencyGraph) -> bool {
    if g.edge_count() >= g.len() {
        return true;
    }
    tree_split(g).is_some()
}

/// First edge (in sorted order) of a tree whose removal leaves a component
/// with size divisible by 3, with the vertices on its far side.
fn tree_split(g: &AdjacencyGraph) -> Option<BTreeSet<usize>> {
    let (parent, size) = g.subtree_sizes();
    let (u, v) = g.edges().into_iter().find(|&(u, v)| {
        let child = if parent[v] == u { v } else { u };
        size[child] % 3 == 0
    })?;
    let child = if parent[v] == u { v } else { u };
    let other = if child == v { u } else { v };
    Some(reachable(g.len(), child, |w| {
        g.neighbors(w)
            .iter()
            .copied()
            .filter(|&x| !(w == child && x == other))
            .collect()
    }))
}

/// Finds a detaching cut. On graphs with cycles: delete cycle edges until a
/// single cycle remains, cut that cycle at two edges so that both arcs with
/// their hanging trees have sizes divisible by 3, and restore the deleted
/// edges that fall inside either part. On trees: cut a single edge.
pub fn find_detaching_cut(g: &AdjacencyGraph) -> Result<DetachCut> {
    check_size(g.len())?;
    if g.edge_count() < g.len() {
        let side = tree_split(g).ok_or(Error::NotDetachable)?;
        return Ok(DetachCut::from_parts(g, side));
    }
    let n = g.len();
    let mut edges: BTreeSet<(usize, usize)> = g.edges().into_iter().collect();
    while edges.len() > n {
        let cycle = some_cycle(n, &edges);
        let smallest = cycle.into_iter().min().expect("cycles have edges");
        edges.remove(&smallest);
    }
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in &edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    for ns in &mut adj {
        ns.sort_unstable();
    }
    let ring = cycle_order(&adj);
    let on_ring: BTreeSet<usize> = ring.iter().copied().collect();
    let hanging: Vec<BTreeSet<usize>> = ring
        .iter()
        .map(|&c| {
            reachable(n, c, |w| {
                adj[w]
                    .iter()
                    .copied()
                    .filter(|x| !(on_ring.contains(&w) && on_ring.contains(x)))
                    .collect()
            })
        })
        .collect();
    let len = ring.len();
    let mut prefix = vec![0usize; len + 1];
    for i in 0..len {
        prefix[i + 1] = prefix[i] + hanging[i].len();
    }
    let (i, j) = (0..len)
        .flat_map(|i| (i + 1..=len).map(move |j| (i, j)))
        .find(|&(i, j)| (i, j) != (0, len) && (prefix[j] - prefix[i]).is_multiple_of(3))
        .ok_or(Error::NotDetachable)?;
    let first: BTreeSet<usize> = hanging[i..j].iter().flatten().copied().collect();
    Ok(DetachCut::from_parts(g, first))
}

/// Edges of some cycle: a breadth-first spanning tree plus its first non-tree
/// edge.
fn some_cycle(n: usize, edges: &BTreeSet<(usize, usize)>) -> Vec<(usize, usize)> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    parent[0] = 0;
    let mut queue = VecDeque::from([0]);
    while let Some(v) = queue.pop_front() {
        for &u in &adj[v] {
            if parent[u] == usize::MAX {
                parent[u] = v;
                depth[u] = depth[v] + 1;
                queue.push_back(u);
            }
        }
    }
    let &(a, b) = edges
        .iter()
        .find(|&&(u, v)| parent[u] != v && parent[v] != u)
        .expect("graph has more edges than a tree");
    let mut cycle = vec![(a, b)];
    let (mut x, mut y) = (a, b);
    while x != y {
        if depth[x] >= depth[y] {
            cycle.push((x.min(parent[x]), x.max(parent[x])));
            x = parent[x];
        } else {
            cycle.push((y.min(parent[y]), y.max(parent[y])));
            y = parent[y];
        }
    }
    cycle
}

/// Vertices of the unique cycle of a connected unicyclic graph, in cyclic
/// order from the smallest vertex towards its smaller cycle neighbour.
fn cycle_order(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut removed = vec![false; n];
    let mut stack: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    while let Some(v) = stack.pop() {
        if removed[v] {
            continue;
        }
        removed[v] = true;
        for &u in &adj[v] {
            if !removed[u] {
                degree[u] -= 1;
                if degree[u] == 1 {
                    stack.push(u);
                }
            }
        }
    }
    let start = (0..n).find(|&v| !removed[v]).expect("unicyclic graph has a cycle");
    let mut ring = vec![start];
    let mut prev = start;
    let mut cur = *adj[start]
        .iter()
        .find(|&&u| !removed[u])
        .expect("cycle vertex has cycle neighbours");
    while cur != start {
        ring.push(cur);
        let next = *adj[cur]
            .iter()
            .find(|&&u| !removed[u] && u != prev)
            .expect("cycle continues");
        prev = cur;
        cur = next;
    }
    ring
}

/// Recursive detachment of a region into non-detachable parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecompositionTree {
    Leaf(BTreeSet<Cell>),
    Split {
        cut: DetachCut,
        children: Box<[DecompositionTree; 2]>,
    },
}

impl DecompositionTree {
    pub fn leaves(&self) -> Vec<&BTreeSet<Cell>> {
        match self {
            DecompositionTree::Leaf(cells) => vec![cells],
            DecompositionTree::Split { children, .. } => children.iter().flat_map(|c| c.leaves()).collect(),
        }
    }

    pub fn cuts(&self) -> Vec<&DetachCut> {
        match self {
            DecompositionTree::Leaf(_) => Vec::new(),
            DecompositionTree::Split { cut, children } => std::iter::once(cut)
                .chain(children.iter().flat_map(|c| c.cuts()))
                .collect(),
        }
    }

    /// Indented outline: one line per node.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        self.write_text(0, &mut out);
        out
    }

    fn write_text(&self, depth: usize, out: &mut String) {
        let pad = "  ".repeat(depth);
        match self {
            DecompositionTree::Leaf(cells) => {
                let list: Vec<String> = cells.iter().map(|c| c.to_string()).collect();
                writeln!(out, "{pad}leaf {} cells: {}", cells.len(), list.join(" ")).expect("writing to a String");
            }
            DecompositionTree::Split { cut, children } => {
                let list: Vec<String> = cut.edges.iter().map(|(a, b)| format!("{a}-{b}")).collect();
                writeln!(
                    out,
                    "{pad}cut {}+{} along {}",
                    cut.parts[0].len(),
                    cut.parts[1].len(),
                    list.join(" ")
                )
                .expect("writing to a String");
                for c in children.iter() {
                    c.write_text(depth + 1, out);
                }
            }
        }
    }
}

pub fn decompose(r: &Region) -> Result<DecompositionTree> {
    let g = AdjacencyGraph::from_region(r)?;
    check_size(g.len())?;
    Ok(decompose_cells(r.cells().clone()))
}

fn decompose_cells(cells: BTreeSet<Cell>) -> DecompositionTree {
    let g = AdjacencyGraph::from_cells(&cells);
    if !graph_is_detachable(&g) {
        return DecompositionTree::Leaf(cells);
    }
    let cut = find_detaching_cut(&g).expect("detachable graphs have a detaching cut");
    let children = Box::new([
        decompose_cells(cut.parts[0].clone()),
        decompose_cells(cut.parts[1].clone()),
    ]);
    DecompositionTree::Split { cut, children }
}
