//! Simple undirected graphs with dense 0-based vertex ids, plus the
//! classical subroutines the rank solvers lean on.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

mod alg;
mod generate;
mod io;
mod line;

pub use alg::{
    bipartite_matching_size, bipartite_max_independent_set, blocks, max_clique, split_partition,
    BlockDecomposition, SplitPartition,
};
pub use generate::{
    all_connected, generate, is_cactus, is_chordal, random_cactus, random_chordal,
    random_connected, random_split, random_tree, GenKind, ALL_CONNECTED_CAP,
};
pub use line::{line_graph, line_graph_root, verify_line_mapping};

/// Sorted vertex set; every set-valued result in this crate uses it so that
/// outputs are deterministic.
pub type VertexSet = BTreeSet<usize>;

/// A simple, finite, undirected graph. Vertex ids are exactly `0..n`.
/// Immutable once built (all operations take `&self`).
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<BTreeSet<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            adj: vec![BTreeSet::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n {
            return Err(Error::VertexOutOfRange { vertex: u, n: self.n });
        }
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        if u == v {
            return Err(Error::Invalid(format!("self-loop at vertex {u}")));
        }
        if self.adj[u].contains(&v) {
            return Err(Error::Invalid(format!("duplicate edge {u} {v}")));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn adj(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|a| a.len()).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(&v)
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            for &v in self.adj[u].range(u + 1..) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn vertices(&self) -> VertexSet {
        (0..self.n).collect()
    }

    /// Connected components of the graph restricted to `V - removed`,
    /// each sorted, listed by minimum element.
    pub fn components(&self, removed: &VertexSet) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n];
        for &v in removed {
            if v < self.n {
                seen[v] = true;
            }
        }
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = VertexSet::new();
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.insert(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components(&VertexSet::new()).len() == 1
    }

    /// True iff every pair in `s` is adjacent; the empty set and singletons
    /// count as cliques.
    pub fn is_clique(&self, s: &VertexSet) -> bool {
        let verts: Vec<usize> = s.iter().copied().collect();
        for (i, &u) in verts.iter().enumerate() {
            for &v in &verts[i + 1..] {
                if !self.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }

    /// True iff no pair in `s` is adjacent.
    pub fn is_independent_set(&self, s: &VertexSet) -> bool {
        let verts: Vec<usize> = s.iter().copied().collect();
        for (i, &u) in verts.iter().enumerate() {
            for &v in &verts[i + 1..] {
                if self.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }

    /// Induced subgraph on `verts` with relabeled ids, plus the map from
    /// new id to original id (sorted order).
    pub fn induced(&self, verts: &VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = verts.iter().copied().collect();
        let mut inv = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            inv[v] = i;
        }
        let mut g = Graph::new(map.len());
        for (i, &v) in map.iter().enumerate() {
            for &w in &self.adj[v] {
                if inv[w] != usize::MAX && inv[w] > i {
                    g.adj[i].insert(inv[w]);
                    g.adj[inv[w]].insert(i);
                }
            }
        }
        (g, map)
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.adj[u].contains(&v) {
                    g.adj[u].insert(v);
                    g.adj[v].insert(u);
                }
            }
        }
        g
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m() == self.n - 1 && self.is_connected()
    }

    /// Leaves (degree-1 vertices); for K1 the single vertex counts.
    pub fn leaves(&self) -> VertexSet {
        if self.n == 1 {
            return [0].into_iter().collect();
        }
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Two-coloring if bipartite, otherwise an odd-cycle witness.
    pub fn two_coloring(&self) -> std::result::Result<Vec<u8>, Vec<usize>> {
        let mut color = vec![u8::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for start in 0..self.n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        parent[w] = v;
                        queue.push_back(w);
                    } else if color[w] == color[v] {
                        return Err(odd_cycle(&parent, v, w));
                    }
                }
            }
        }
        Ok(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_ok()
    }

    /// Maximum clique size.
    pub fn clique_number(&self) -> usize {
        max_clique(self, None).len()
    }

    /// BFS distances from `src` within `within` (or the whole graph);
    /// `usize::MAX` marks unreachable vertices.
    pub fn bfs_distances(&self, src: usize, within: Option<&VertexSet>) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        if let Some(w) = within {
            if !w.contains(&src) {
                return dist;
            }
        }
        dist[src] = 0;
        let mut queue = std::collections::VecDeque::from([src]);
        while let Some(v) = queue.pop_front() {
            for &u in &self.adj[v] {
                if within.map_or(true, |w| w.contains(&u)) && dist[u] == usize::MAX {
                    dist[u] = dist[v] + 1;
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    /// Diameter of a connected graph.
    pub fn diameter(&self) -> Result<usize> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let mut best = 0;
        for v in 0..self.n {
            for d in self.bfs_distances(v, None) {
                if d != usize::MAX {
                    best = best.max(d);
                }
            }
        }
        Ok(best)
    }
}

fn odd_cycle(parent: &[usize], v: usize, w: usize) -> Vec<usize> {
    // Walk both endpoints up to the root; the paths plus edge vw close an
    // odd cycle through their lowest common ancestor.
    let path_up = |mut x: usize| {
        let mut p = vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            p.push(x);
        }
        p
    };
    let pv = path_up(v);
    let pw = path_up(w);
    // trim the common tail
    let mut i = pv.len();
    let mut j = pw.len();
    while i > 1 && j > 1 && pv[i - 2] == pw[j - 2] {
        i -= 1;
        j -= 1;
    }
    let mut cycle: Vec<usize> = pv[..i].to_vec();
    cycle.extend(pw[..j - 1].iter().rev());
    cycle
}

pub use io::{load_graph, save_graph};

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn k3_pendant() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap()
    }

    pub(crate) fn c5() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
    }

    #[test]
    fn components_basic() {
        let c5 = c5();
        assert_eq!(c5.components(&VertexSet::new()).len(), 1);
        assert_eq!(c5.components(&VertexSet::new())[0].len(), 5);

        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let comps = p3.components(&[1].into_iter().collect());
        assert_eq!(comps, vec![[0].into_iter().collect(), [2].into_iter().collect()]);

        let g = k3_pendant();
        let comps = g.components(&[0].into_iter().collect());
        assert_eq!(
            comps,
            vec![[1, 2].into_iter().collect(), [3].into_iter().collect()]
        );
    }

    #[test]
    fn clique_checks() {
        let g = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert!(g.is_clique(&[0, 1, 2].into_iter().collect()));
        assert!(g.is_clique(&VertexSet::new()));
        let c5 = c5();
        assert!(!c5.is_clique(&[0, 1, 2].into_iter().collect()));
    }

    #[test]
    fn odd_cycle_witness() {
        let c5 = c5();
        let cyc = c5.two_coloring().unwrap_err();
        assert_eq!(cyc.len() % 2, 1);
        // witness really is a cycle
        for i in 0..cyc.len() {
            assert!(c5.has_edge(cyc[i], cyc[(i + 1) % cyc.len()]));
        }
    }

    #[test]
    fn self_loop_and_duplicate_rejected() {
        let mut g = Graph::new(2);
        assert!(g.add_edge(0, 0).is_err());
        g.add_edge(0, 1).unwrap();
        assert!(g.add_edge(1, 0).is_err());
    }
}
