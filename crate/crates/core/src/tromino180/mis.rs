use std::collections::{HashMap, HashSet, VecDeque};

use super::graph::{find_claw, SimpleGraph};
use crate::error::{Error, Result};
use crate::solver::DEFAULT_BUDGET;

/// Maximum independent set by branch and bound: degree ≤ 1 vertices are
/// taken greedily, otherwise branch on a maximum-degree vertex; a greedy
/// clique cover bounds the remaining gain.
pub fn mis_exact(g: &SimpleGraph) -> Result<Vec<usize>> {
    mis_exact_with_budget(g, DEFAULT_BUDGET)
}

pub fn mis_exact_with_budget(g: &SimpleGraph, budget: u64) -> Result<Vec<usize>> {
    let words = g.len().div_ceil(64);
    let mut all = vec![0u64; words];
    for v in 0..g.len() {
        all[v / 64] |= 1 << (v % 64);
    }
    let mut s = Branch {
        g,
        best: Vec::new(),
        current: Vec::new(),
        nodes: 0,
        budget,
    };
    s.search(all)?;
    let mut best = s.best;
    best.sort_unstable();
    Ok(best)
}

struct Branch<'a> {
    g: &'a SimpleGraph,
    best: Vec<usize>,
    current: Vec<usize>,
    nodes: u64,
    budget: u64,
}

fn members(set: &[u64]) -> impl Iterator<Item = usize> + '_ {
    set.iter().enumerate().flat_map(|(w, &bits)| {
        let mut b = bits;
        std::iter::from_fn(move || {
            if b == 0 {
                return None;
            }
            let t = b.trailing_zeros() as usize;
            b &= b - 1;
            Some(w * 64 + t)
        })
    })
}

fn popcount_and(a: &[u64], b: &[u64]) -> usize {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones() as usize).sum()
}

impl Branch<'_> {
    fn remove_closed_neighborhood(&self, set: &mut [u64], v: usize) {
        for (s, r) in set.iter_mut().zip(self.g.row(v)) {
            *s &= !r;
        }
        set[v / 64] &= !(1 << (v % 64));
    }

    /// Number of cliques in a greedy clique cover of `set`.
    fn clique_bound(&self, set: &[u64]) -> usize {
        let mut cliques: Vec<Vec<u64>> = Vec::new();
        for v in members(set) {
            let row = self.g.row(v);
            match cliques.iter_mut().find(|c| c.iter().zip(row).all(|(m, r)| m & !r == 0)) {
                Some(c) => c[v / 64] |= 1 << (v % 64),
                None => {
                    let mut c = vec![0u64; set.len()];
                    c[v / 64] |= 1 << (v % 64);
                    cliques.push(c);
                }
            }
        }
        cliques.len()
    }

    fn search(&mut self, mut set: Vec<u64>) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::ResourceLimit { budget: self.budget });
        }
        let taken_before = self.current.len();
        loop {
            let low = members(&set).find(|&v| popcount_and(&set, self.g.row(v)) <= 1);
            match low {
                Some(v) => {
                    self.current.push(v);
                    self.remove_closed_neighborhood(&mut set, v);
                }
                None => break,
            }
        }
        if set.iter().all(|&w| w == 0) {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
        } else if self.current.len() + self.clique_bound(&set) > self.best.len() {
            let v = members(&set)
                .max_by_key(|&v| (popcount_and(&set, self.g.row(v)), std::cmp::Reverse(v)))
                .expect("set is nonempty");
            let mut with = set.clone();
            self.remove_closed_neighborhood(&mut with, v);
            self.current.push(v);
            self.search(with)?;
            self.current.pop();
            set[v / 64] &= !(1 << (v % 64));
            self.search(set)?;
        }
        self.current.truncate(taken_before);
        Ok(())
    }
}

/// Maximum independent set of a claw-free graph by repeated augmentation.
///
/// Starting from a greedy maximal set S, the search looks for an alternating
/// path x b₁ w₁ … b_k y where the b's are distinct members of S, x and y
/// have a single neighbour in S, interior w's have exactly the two path
/// neighbours in S, and consecutive whites are non-adjacent. Swapping such a
/// path grows S by one; in a claw-free graph S is maximum when none exists.
/// Paths are found by breadth-first search over (member, incoming vertex)
/// states; if every walk found repeats a member, an exhaustive depth-first
/// search over simple paths from the same start decides.
pub fn mis_claw_free(g: &SimpleGraph) -> Result<Vec<usize>> {
    if find_claw(g).is_some() {
        return Err(Error::NotClawFree);
    }
    let n = g.len();
    let mut in_s = vec![false; n];
    loop {
        for v in 0..n {
            if !in_s[v] && g.neighbors(v).iter().all(|&u| !in_s[u]) {
                in_s[v] = true;
            }
        }
        match Augmenter::new(g, &in_s).find() {
            Some(path) => {
                for v in path {
                    in_s[v] = !in_s[v];
                }
            }
            None => break,
        }
    }
    Ok((0..n).filter(|&v| in_s[v]).collect())
}

enum Walk {
    Path(Vec<usize>),
    Unreachable,
    OnlyRepeating,
}

struct Augmenter<'a> {
    g: &'a SimpleGraph,
    in_s: &'a [bool],
    /// Members of S adjacent to each non-member.
    blacks: Vec<Vec<usize>>,
}

impl<'a> Augmenter<'a> {
    fn new(g: &'a SimpleGraph, in_s: &'a [bool]) -> Self {
        let blacks = (0..g.len())
            .map(|v| {
                if in_s[v] {
                    Vec::new()
                } else {
                    g.neighbors(v).iter().copied().filter(|&u| in_s[u]).collect()
                }
            })
            .collect();
        Augmenter { g, in_s, blacks }
    }

    fn is_free(&self, v: usize) -> bool {
        !self.in_s[v] && self.blacks[v].len() == 1
    }

    fn other_black(&self, w: usize, b: usize) -> Option<usize> {
        match self.blacks[w].as_slice() {
            [x, y] if *x == b => Some(*y),
            [x, y] if *y == b => Some(*x),
            _ => None,
        }
    }

    /// Whites reachable from member `b` after arriving from white `u`.
    fn steps(&self, x: usize, b: usize, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.g
            .neighbors(b)
            .iter()
            .copied()
            .filter(move |&v| v != u && v != x && !self.g.adjacent(u, v) && !self.g.adjacent(x, v))
    }

    fn find(&self) -> Option<Vec<usize>> {
        (0..self.g.len())
            .filter(|&x| self.is_free(x))
            .find_map(|x| match self.bfs(x) {
                Walk::Path(p) => Some(p),
                Walk::Unreachable => None,
                Walk::OnlyRepeating => self.dfs(x),
            })
    }

    fn is_valid(&self, path: &[usize]) -> bool {
        let blacks: HashSet<usize> = path.iter().skip(1).step_by(2).copied().collect();
        let whites: Vec<usize> = path.iter().step_by(2).copied().collect();
        blacks.len() * 2 + 1 == path.len() && self.g.is_independent(&whites)
    }

    fn bfs(&self, x: usize) -> Walk {
        let b0 = self.blacks[x][0];
        let mut parent: HashMap<(usize, usize), (usize, usize)> = HashMap::new();
        let mut queue = VecDeque::from([(b0, x)]);
        parent.insert((b0, x), (usize::MAX, usize::MAX));
        let mut repeating = false;
        while let Some((b, u)) = queue.pop_front() {
            for v in self.steps(x, b, u) {
                if self.is_free(v) {
                    let mut path = vec![v, b, u];
                    let mut state = (b, u);
                    while let Some(&(pb, pu)) = parent.get(&state) {
                        if pb == usize::MAX {
                            break;
                        }
                        path.extend([pb, pu]);
                        state = (pb, pu);
                    }
                    path.reverse();
                    if self.is_valid(&path) {
                        return Walk::Path(path);
                    }
                    repeating = true;
                } else if let Some(b2) = self.other_black(v, b) {
                    if let std::collections::hash_map::Entry::Vacant(e) = parent.entry((b2, v)) {
                        e.insert((b, u));
                        queue.push_back((b2, v));
                    }
                }
            }
        }
        if repeating {
            Walk::OnlyRepeating
        } else {
            Walk::Unreachable
        }
    }

    fn dfs(&self, x: usize) -> Option<Vec<usize>> {
        let mut path = vec![x, self.blacks[x][0]];
        if self.extend(x, &mut path) {
            Some(path)
        } else {
            None
        }
    }

    fn extend(&self, x: usize, path: &mut Vec<usize>) -> bool {
        let b = path[path.len() - 1];
        let u = path[path.len() - 2];
        let steps: Vec<usize> = self.steps(x, b, u).collect();
        for v in steps {
            if path.iter().step_by(2).any(|&w| w == v || self.g.adjacent(w, v)) {
                continue;
            }
            if self.is_free(v) {
                path.push(v);
                return true;
            }
            if let Some(b2) = self.other_black(v, b) {
                if path.iter().skip(1).step_by(2).any(|&c| c == b2) {
                    continue;
                }
                path.extend([v, b2]);
                if self.extend(x, path) {
                    return true;
                }
                path.truncate(path.len() - 2);
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_small_graphs() {
        assert_eq!(mis_exact(&SimpleGraph::from_edges(1, [])).unwrap(), vec![0]);
        assert_eq!(mis_exact(&SimpleGraph::path(2)).unwrap().len(), 1);
        assert_eq!(mis_exact(&SimpleGraph::path(5)).unwrap().len(), 3);
        assert_eq!(mis_exact(&SimpleGraph::cycle(7)).unwrap().len(), 3);
        assert_eq!(mis_exact(&SimpleGraph::star(5)).unwrap().len(), 5);
        assert_eq!(mis_exact(&SimpleGraph::complete(6)).unwrap().len(), 1);
        assert!(mis_exact(&SimpleGraph::from_edges(0, [])).unwrap().is_empty());
    }

    #[test]
    fn claw_free_small_graphs() {
        assert_eq!(mis_claw_free(&SimpleGraph::path(5)).unwrap().len(), 3);
        assert_eq!(mis_claw_free(&SimpleGraph::cycle(6)).unwrap().len(), 3);
        assert_eq!(mis_claw_free(&SimpleGraph::path(2)).unwrap().len(), 1);
        assert_eq!(mis_claw_free(&SimpleGraph::complete(5)).unwrap().len(), 1);
    }

    #[test]
    fn claw_free_rejects_claws() {
        assert_eq!(mis_claw_free(&SimpleGraph::star(3)), Err(Error::NotClawFree));
    }

    #[test]
    fn greedy_start_needs_augmenting() {
        // A five-vertex path labelled so that the greedy start takes the
        // second and fourth vertices.
        let g = SimpleGraph::from_edges(5, [(2, 0), (0, 3), (3, 1), (1, 4)]);
        let s = mis_claw_free(&g).unwrap();
        assert_eq!(s.len(), 3);
        assert!(g.is_independent(&s));
    }

    #[test]
    fn exact_budget() {
        let g = SimpleGraph::cycle(40);
        assert_eq!(mis_exact_with_budget(&g, 2), Err(Error::ResourceLimit { budget: 2 }));
    }
}
