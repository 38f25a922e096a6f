//! Maximal-prime-subgraph (atom) decomposition, the petal/flower machinery
//! built on top of it, and the characterization-based independence test.

mod flower;
mod mcsm;

pub use flower::{
    enumerate_flowers, is_gamma1, is_gamma2, is_independent_charac, minimal_flower_containing,
    stamen_for, stamen_max, Flower, StamenResult, DEFAULT_FLOWER_CAP,
};
pub use mcsm::{clique_minimal_separators, mcs_m};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Cap for the exhaustive atom oracle.
pub const ATOMS_BRUTE_CAP: usize = 12;

/// A maximal prime induced subgraph. `border` is what it shares with other
/// atoms, `inner` the rest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Atom {
    pub vertices: VertexSet,
    pub border: VertexSet,
    pub inner: VertexSet,
}

/// The full atom decomposition: atoms sorted lexicographically, per-vertex
/// membership, and the atom intersection graph.
#[derive(Debug, Clone)]
pub struct AtomDecomposition {
    pub atoms: Vec<Atom>,
    pub membership: Vec<Vec<usize>>,
    pub intersection_graph: Graph,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AtomClass {
    pub is_petal: bool,
    pub is_extreme: bool,
}

impl AtomDecomposition {
    fn from_vertex_sets(g: &Graph, mut sets: Vec<VertexSet>) -> AtomDecomposition {
        sets.sort();
        sets.dedup();
        // drop anything contained in another piece
        let keep: Vec<VertexSet> = sets
            .iter()
            .filter(|a| !sets.iter().any(|b| *a != b && a.is_subset(b)))
            .cloned()
            .collect();
        let mut membership: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
        for (i, a) in keep.iter().enumerate() {
            for &v in a {
                membership[v].push(i);
            }
        }
        let mut ig = Graph::new(keep.len());
        for (i, a) in keep.iter().enumerate() {
            for (j, b) in keep.iter().enumerate().skip(i + 1) {
                if a.intersection(b).next().is_some() {
                    ig.add_edge(i, j).expect("distinct indices");
                }
            }
        }
        let atoms = keep
            .into_iter()
            .enumerate()
            .map(|(i, vertices)| {
                let border: VertexSet = vertices
                    .iter()
                    .copied()
                    .filter(|&v| membership[v].len() > 1)
                    .collect();
                let inner: VertexSet = vertices.difference(&border).copied().collect();
                let _ = i;
                Atom {
                    vertices,
                    border,
                    inner,
                }
            })
            .collect();
        AtomDecomposition {
            atoms,
            membership,
            intersection_graph: ig,
        }
    }
}

/// Atom decomposition via clique minimal separators over a minimal-fill
/// ordering; polynomial, cross-checked against `atoms_bruteforce`.
pub fn atoms(g: &Graph) -> Result<AtomDecomposition> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let seps = clique_minimal_separators(g);
    let mut pieces: Vec<VertexSet> = Vec::new();
    let mut work: Vec<VertexSet> = vec![g.vertices()];
    'next: while let Some(piece) = work.pop() {
        for s in &seps {
            if !s.is_subset(&piece) || s.len() >= piece.len() {
                continue;
            }
            let full = mcsm::full_components(g, s, Some(&piece));
            if full.len() >= 2 {
                // split off one full component; the separator stays on both
                // sides
                let c = &full[0];
                let half: VertexSet = c.union(s).copied().collect();
                let rest: VertexSet = piece.difference(c).copied().collect();
                work.push(half);
                work.push(rest);
                continue 'next;
            }
        }
        pieces.push(piece);
    }
    Ok(AtomDecomposition::from_vertex_sets(g, pieces))
}

/// Exhaustive atom oracle: every maximal vertex set that induces a connected
/// prime subgraph. Exponential; capped.
pub fn atoms_bruteforce(g: &Graph) -> Result<AtomDecomposition> {
    if g.n() > ATOMS_BRUTE_CAP {
        return Err(Error::CapExceeded {
            what: "atoms_bruteforce",
            cap: ATOMS_BRUTE_CAP,
            got: g.n(),
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let mut primes: Vec<VertexSet> = Vec::new();
    for mask in 1u32..(1 << n) {
        let a: VertexSet = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if is_prime_subset(g, &a) {
            primes.push(a);
        }
    }
    let maximal: Vec<VertexSet> = primes
        .iter()
        .filter(|a| !primes.iter().any(|b| *a != b && a.is_subset(b)))
        .cloned()
        .collect();
    Ok(AtomDecomposition::from_vertex_sets(g, maximal))
}

/// Connected with no clique separator.
fn is_prime_subset(g: &Graph, a: &VertexSet) -> bool {
    let (sub, _) = g.induced(a);
    if !sub.is_connected() {
        return false;
    }
    let k = sub.n();
    if k <= 2 {
        return true;
    }
    for mask in 1u32..(1 << k) {
        let s: VertexSet = (0..k).filter(|&v| mask >> v & 1 == 1).collect();
        if s.len() > k - 2 {
            continue;
        }
        if sub.is_clique(&s) && sub.components(&s).len() >= 2 {
            return false;
        }
    }
    true
}

/// Petal/extreme classification of atom `i`.
pub fn classify_atom(g: &Graph, d: &AtomDecomposition, i: usize) -> Result<AtomClass> {
    let atom = d.atoms.get(i).ok_or(Error::BadAtomIndex(i))?;
    let is_petal = !atom.inner.is_empty() && g.is_clique(&atom.border);
    let is_extreme = is_petal
        && d.atoms
            .iter()
            .enumerate()
            .any(|(j, other)| j != i && atom.border.is_subset(&other.border));
    Ok(AtomClass { is_petal, is_extreme })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sets(d: &AtomDecomposition) -> Vec<VertexSet> {
        d.atoms.iter().map(|a| a.vertices.clone()).collect()
    }

    fn vs(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn atoms_of_small_graphs() {
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let d = atoms(&c5).unwrap();
        assert_eq!(sets(&d), vec![vs(&[0, 1, 2, 3, 4])]);
        assert!(d.atoms[0].border.is_empty());

        let k3p = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap();
        let d = atoms(&k3p).unwrap();
        assert_eq!(sets(&d), vec![vs(&[0, 1, 2]), vs(&[0, 3])]);
        assert_eq!(d.atoms[0].border, vs(&[0]));
        assert_eq!(d.atoms[1].border, vs(&[0]));
        assert_eq!(d.atoms[1].inner, vs(&[3]));

        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let d = atoms(&p4).unwrap();
        assert_eq!(sets(&d), vec![vs(&[0, 1]), vs(&[1, 2]), vs(&[2, 3])]);
        assert!(d.intersection_graph.is_tree());
    }

    #[test]
    fn brute_oracle_matches_on_examples() {
        for g in [
            Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap(),
            Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap(),
            Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap(),
            Graph::from_edges(1, &[]).unwrap(),
        ] {
            assert_eq!(sets(&atoms(&g).unwrap()), sets(&atoms_bruteforce(&g).unwrap()));
        }
    }

    #[test]
    fn atoms_match_oracle_exhaustively_n5() {
        for g in crate::graph::all_connected(5).unwrap() {
            assert_eq!(
                sets(&atoms(&g).unwrap()),
                sets(&atoms_bruteforce(&g).unwrap()),
                "{g:?}"
            );
        }
    }

    #[test]
    fn atoms_match_oracle_on_random_graphs() {
        for seed in 0..150 {
            let n = 4 + (seed as usize % 6);
            let g = crate::graph::random_connected(n, 0.35, seed);
            assert_eq!(
                sets(&atoms(&g).unwrap()),
                sets(&atoms_bruteforce(&g).unwrap()),
                "{g:?}"
            );
        }
    }

    #[test]
    fn decomposition_covers_vertices_and_edges() {
        for seed in 0..60 {
            let g = crate::graph::random_connected(9, 0.3, seed);
            let d = atoms(&g).unwrap();
            for v in 0..g.n() {
                assert!(!d.membership[v].is_empty());
            }
            for (u, v) in g.edges() {
                assert!(
                    d.atoms
                        .iter()
                        .any(|a| a.vertices.contains(&u) && a.vertices.contains(&v)),
                    "edge ({u},{v}) outside every atom of {g:?}"
                );
            }
            for a in &d.atoms {
                if a.vertices.len() <= ATOMS_BRUTE_CAP {
                    assert!(is_prime_subset(&g, &a.vertices));
                }
            }
        }
    }

    #[test]
    fn classify_examples() {
        let k3p = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap();
        let d = atoms(&k3p).unwrap();
        let edge = classify_atom(&k3p, &d, 1).unwrap();
        assert!(edge.is_petal && edge.is_extreme);

        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let d = atoms(&p4).unwrap();
        let middle = classify_atom(&p4, &d, 1).unwrap();
        assert!(!middle.is_petal);

        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let d = atoms(&c5).unwrap();
        let only = classify_atom(&c5, &d, 0).unwrap();
        assert!(only.is_petal);
        assert!(!only.is_extreme);

        assert!(matches!(
            classify_atom(&c5, &d, 7),
            Err(Error::BadAtomIndex(7))
        ));
    }

    #[test]
    fn atoms_of_max_clique_free_line_graph_structure() {
        use crate::graph::{blocks, line_graph};
        // atoms of L(H) are the line graphs of H's blocks plus the edge
        // stars at cut vertices (maximal members only)
        for seed in 0..40 {
            let h = crate::graph::random_connected(7, 0.25, seed);
            let (lg, emap) = line_graph(&h).unwrap();
            let b = blocks(&h).unwrap();
            let mut expected: Vec<VertexSet> = Vec::new();
            for blk in &b.blocks {
                let (sub, map) = h.induced(blk);
                expected.push(
                    sub.edges()
                        .iter()
                        .map(|&(x, y)| {
                            let (a, c) = (map[x].min(map[y]), map[x].max(map[y]));
                            emap[&(a, c)]
                        })
                        .collect(),
                );
            }
            for &cv in &b.cut_vertices {
                expected.push(h.adj(cv).iter().map(|&w| emap[&(cv.min(w), cv.max(w))]).collect());
            }
            let maximal: Vec<VertexSet> = expected
                .iter()
                .filter(|a| !expected.iter().any(|b2| *a != b2 && a.is_subset(b2)))
                .cloned()
                .collect();
            let mut maximal = maximal;
            maximal.sort();
            maximal.dedup();
            assert_eq!(sets(&atoms(&lg).unwrap()), maximal, "H = {h:?}");
        }
    }
}
