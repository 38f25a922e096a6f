//! Deterministic instance generators for test corpora. Class generators
//! verify membership with the matching recognizer before emitting.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

use super::{alg, Graph, VertexSet};

/// Hard cap on exhaustive enumeration; 2^C(n,2) edge subsets are scanned.
pub const ALL_CONNECTED_CAP: usize = 7;

#[derive(Debug, Clone, PartialEq)]
pub enum GenKind {
    AllConnected { n: usize },
    Random { n: usize, p: f64, seed: u64 },
    Tree { n: usize, seed: u64 },
    Split { n: usize, seed: u64 },
    Cactus { n: usize, seed: u64 },
    Chordal { n: usize, seed: u64 },
}

/// Stream of graphs for `kind`; `count` bounds the non-exhaustive kinds.
pub fn generate(kind: GenKind, count: usize) -> Result<Vec<Graph>> {
    match kind {
        GenKind::AllConnected { n } => Ok(all_connected(n)?.collect()),
        GenKind::Random { n, p, seed } => {
            check_n(n)?;
            Ok((0..count as u64)
                .map(|i| random_connected(n, p, seed.wrapping_add(i)))
                .collect())
        }
        GenKind::Tree { n, seed } => {
            check_n(n)?;
            Ok((0..count as u64)
                .map(|i| random_tree(n, seed.wrapping_add(i)))
                .collect())
        }
        GenKind::Split { n, seed } => {
            check_n(n)?;
            Ok((0..count as u64)
                .map(|i| random_split(n, seed.wrapping_add(i)))
                .collect())
        }
        GenKind::Cactus { n, seed } => {
            check_n(n)?;
            Ok((0..count as u64)
                .map(|i| random_cactus(n, seed.wrapping_add(i)))
                .collect())
        }
        GenKind::Chordal { n, seed } => {
            check_n(n)?;
            Ok((0..count as u64)
                .map(|i| random_chordal(n, seed.wrapping_add(i)))
                .collect())
        }
    }
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Invalid("n must be at least 1".into()));
    }
    Ok(())
}

/// Every connected graph on n labeled vertices, exactly once, in edge-mask
/// order.
pub fn all_connected(n: usize) -> Result<impl Iterator<Item = Graph>> {
    check_n(n)?;
    if n > ALL_CONNECTED_CAP {
        return Err(Error::CapExceeded {
            what: "all-connected enumeration",
            cap: ALL_CONNECTED_CAP,
            got: n,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let total: u64 = 1 << pairs.len();
    Ok((0..total).filter_map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edges(n, &edges).expect("pairs are valid");
        g.is_connected().then_some(g)
    }))
}

/// Connected random graph: a uniform random spanning tree plus each extra
/// pair independently with probability `p`.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = random_tree_with(n, &mut rng);
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) && rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Uniform random labeled tree via a Prüfer sequence.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = random_tree_with(n, &mut rng);
    debug_assert!(g.is_tree());
    g
}

fn random_tree_with(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut g = Graph::new(n);
    if n <= 1 {
        return g;
    }
    if n == 2 {
        g.add_edge(0, 1).unwrap();
        return g;
    }
    let prufer: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &v in &prufer {
        degree[v] += 1;
    }
    let mut leaves: std::collections::BTreeSet<usize> =
        (0..n).filter(|&v| degree[v] == 1).collect();
    for &v in &prufer {
        let leaf = *leaves.iter().next().unwrap();
        leaves.remove(&leaf);
        g.add_edge(leaf, v).unwrap();
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.insert(v);
        }
    }
    let mut it = leaves.iter();
    let (a, b) = (*it.next().unwrap(), *it.next().unwrap());
    g.add_edge(a, b).unwrap();
    g
}

/// Random connected split graph; `split_partition` succeeds on every output.
pub fn random_split(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = rng.gen_range(1..=n);
    let mut g = Graph::new(n);
    for u in 0..k {
        for v in u + 1..k {
            g.add_edge(u, v).unwrap();
        }
    }
    for v in k..n {
        let deg = rng.gen_range(1..=k);
        let mut picks: Vec<usize> = (0..k).collect();
        picks.shuffle(&mut rng);
        for &c in picks.iter().take(deg) {
            g.add_edge(v, c).unwrap();
        }
    }
    debug_assert!(alg::split_partition(&g).is_some());
    debug_assert!(g.is_connected());
    g
}

/// Random connected cactus: grow by attaching cycles or edges at random
/// existing vertices.
pub fn random_cactus(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    let mut built = 1usize;
    while built < n {
        let anchor = rng.gen_range(0..built);
        let room = n - built;
        // cycle of c new vertices (c=1 means a pendant edge)
        let c = if room == 1 { 1 } else { rng.gen_range(1..=room.min(4)) };
        if c == 1 {
            g.add_edge(anchor, built).unwrap();
            built += 1;
        } else {
            let first = built;
            for i in 0..c - 1 {
                g.add_edge(built + i, built + i + 1).unwrap();
            }
            g.add_edge(anchor, first).unwrap();
            g.add_edge(anchor, built + c - 1).unwrap();
            built += c;
        }
    }
    debug_assert!(is_cactus(&g));
    g
}

/// Every block is an edge or an induced cycle.
pub fn is_cactus(g: &Graph) -> bool {
    if !g.is_connected() {
        return false;
    }
    let Ok(b) = alg::blocks(g) else { return false };
    b.blocks.iter().all(|blk| {
        let (sub, _) = g.induced(blk);
        blk.len() <= 2 || (sub.m() == blk.len() && sub.adj_all_two())
    })
}

impl Graph {
    fn adj_all_two(&self) -> bool {
        (0..self.n()).all(|v| self.degree(v) == 2)
    }
}

/// Random connected chordal graph via a reverse perfect elimination order:
/// each new vertex attaches to a clique among the earlier vertices.
pub fn random_chordal(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    for v in 1..n {
        let pivot = rng.gen_range(0..v);
        let mut clique: VertexSet = [pivot].into_iter().collect();
        let mut pool: Vec<usize> = g.adj(pivot).range(..v).copied().collect();
        pool.shuffle(&mut rng);
        for w in pool {
            if rng.gen_bool(0.5) && clique.iter().all(|&c| g.has_edge(w, c)) {
                clique.insert(w);
            }
        }
        for &c in &clique {
            g.add_edge(v, c).unwrap();
        }
    }
    debug_assert!(is_chordal(&g));
    debug_assert!(g.is_connected());
    g
}

/// Maximum cardinality search followed by a perfect elimination order check.
pub fn is_chordal(g: &Graph) -> bool {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut numbered = vec![false; n];
    let mut order = Vec::with_capacity(n); // reverse elimination order
    for _ in 0..n {
        let x = (0..n)
            .filter(|&v| !numbered[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .unwrap();
        numbered[x] = true;
        order.push(x);
        for &y in g.adj(x) {
            if !numbered[y] {
                weight[y] += 1;
            }
        }
    }
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    // earlier-numbered neighbors of each vertex must form a clique through
    // the latest of them
    for &v in order.iter().rev() {
        let earlier: Vec<usize> = g.adj(v).iter().copied().filter(|&u| pos[u] < pos[v]).collect();
        if let Some(&pivot) = earlier.iter().max_by_key(|&&u| pos[u]) {
            for &u in &earlier {
                if u != pivot && !g.has_edge(u, pivot) {
                    return false;
                }
            }
        }
    }
    true
}
