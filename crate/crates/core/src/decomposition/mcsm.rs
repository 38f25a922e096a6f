//! MCS-M minimal triangulation and the clique minimal separators derived
//! from it.

use crate::graph::{Graph, VertexSet};

/// Result of a minimal-fill ordering pass: the triangulated graph and the
/// elimination order (position i is eliminated i-th).
pub struct Triangulation {
    pub filled: Graph,
    pub meo: Vec<usize>,
}

/// MCS-M: maximum-cardinality search where a vertex's weight also rises when
/// it is reachable through strictly lower-weight unnumbered vertices; the
/// recorded fill edges give a minimal triangulation.
pub fn mcs_m(g: &Graph) -> Triangulation {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut numbered = vec![false; n];
    let mut fill: Vec<(usize, usize)> = Vec::new();
    // picked[i] holds the vertex numbered n - i, so reversing yields the meo
    let mut picked = Vec::with_capacity(n);

    for _ in 0..n {
        let x = (0..n)
            .filter(|&v| !numbered[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .unwrap();
        numbered[x] = true;
        picked.push(x);

        // dist[y]: minimum over x..y paths through unnumbered internal
        // vertices of the maximum internal weight; NONE = unreached,
        // neighbors of x start at "no internal vertex".
        const UNREACHED: usize = usize::MAX;
        const EMPTY: usize = 0; // max over empty set, weights offset by +1
        let mut dist = vec![UNREACHED; n];
        let mut done = vec![false; n];
        for &y in g.adj(x) {
            if !numbered[y] {
                dist[y] = EMPTY;
            }
        }
        loop {
            let Some(y) = (0..n)
                .filter(|&v| !done[v] && !numbered[v] && dist[v] != UNREACHED)
                .min_by_key(|&v| (dist[v], v))
            else {
                break;
            };
            done[y] = true;
            let through = dist[y].max(weight[y] + 1);
            for &z in g.adj(y) {
                if !numbered[z] && !done[z] && through < dist[z] {
                    dist[z] = through;
                }
            }
        }
        for y in 0..n {
            if !numbered[y] && dist[y] != UNREACHED && dist[y] < weight[y] + 1 {
                weight[y] += 1;
                if !g.has_edge(x, y) {
                    fill.push((x, y));
                }
            }
        }
    }

    picked.reverse();
    let mut filled = g.clone();
    for (u, v) in fill {
        filled.add_edge(u, v).expect("fill edges are new non-loops");
    }
    Triangulation { filled, meo: picked }
}

/// Clique minimal separators of `g`: candidates are the later-neighborhoods
/// madj(x) in a minimal triangulation, kept when they are cliques of `g`
/// with at least two full components.
pub fn clique_minimal_separators(g: &Graph) -> Vec<VertexSet> {
    let tri = mcs_m(g);
    let n = g.n();
    let mut pos = vec![0usize; n];
    for (i, &v) in tri.meo.iter().enumerate() {
        pos[v] = i;
    }
    let mut seps: Vec<VertexSet> = Vec::new();
    for &x in &tri.meo {
        let s: VertexSet = tri
            .filled
            .adj(x)
            .iter()
            .copied()
            .filter(|&y| pos[y] > pos[x])
            .collect();
        if s.is_empty() || !g.is_clique(&s) || seps.contains(&s) {
            continue;
        }
        if full_components(g, &s, None).len() >= 2 {
            seps.push(s);
        }
    }
    seps.sort();
    seps
}

/// Components of g[within] − s whose attachment covers all of s ∩ within.
pub fn full_components(g: &Graph, s: &VertexSet, within: Option<&VertexSet>) -> Vec<VertexSet> {
    let removed: VertexSet = match within {
        Some(w) => (0..g.n()).filter(|v| !w.contains(v)).chain(s.iter().copied()).collect(),
        None => s.clone(),
    };
    let active: VertexSet = match within {
        Some(w) => s.intersection(w).copied().collect(),
        None => s.clone(),
    };
    g.components(&removed)
        .into_iter()
        .filter(|comp| {
            active
                .iter()
                .all(|&v| g.adj(v).iter().any(|w| comp.contains(w)))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangulation_is_chordal_and_minimal_fill_is_zero_on_chordal() {
        use crate::graph::{is_chordal, random_chordal, random_connected};
        for seed in 0..30 {
            let g = random_connected(9, 0.3, seed);
            let tri = mcs_m(&g);
            assert!(is_chordal(&tri.filled), "{g:?}");
            assert_eq!(tri.filled.n(), g.n());
        }
        for seed in 0..30 {
            let g = random_chordal(9, seed);
            let tri = mcs_m(&g);
            assert_eq!(tri.filled.m(), g.m(), "chordal input must get no fill: {g:?}");
        }
    }

    #[test]
    fn separators_of_small_graphs() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let seps = clique_minimal_separators(&p4);
        assert_eq!(
            seps,
            vec![[1].into_iter().collect::<VertexSet>(), [2].into_iter().collect()]
        );

        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert!(clique_minimal_separators(&c5).is_empty());

        let k3p = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap();
        assert_eq!(
            clique_minimal_separators(&k3p),
            vec![[0].into_iter().collect::<VertexSet>()]
        );
    }
}
