//! Constructive reductions used as instance generators: split-graph rank to
//! bipartite independence, the independence-threshold clique/twin gadget,
//! and the two-atom composition gadget.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{max_clique, split_partition, Graph, VertexSet};

/// Cap for the exact independent-set oracle.
pub const ALPHA_CAP: usize = 20;

/// A generated instance plus everything needed to interpret it: the
/// decision threshold (when the construction has one), a human-readable
/// provenance line, and a role label per vertex.
#[derive(Debug, Clone, Serialize)]
pub struct GadgetInstance {
    #[serde(skip)]
    pub graph: Graph,
    pub threshold: Option<usize>,
    pub provenance: String,
    pub vertex_legend: BTreeMap<usize, String>,
}

/// Delete the clique-side edges of a split graph; the rank of the input
/// equals the independence number of the bipartite result.
pub fn split_to_bipartite(g: &Graph) -> Result<GadgetInstance> {
    let Some(part) = split_partition(g) else {
        return Err(Error::NotInClass("split graph"));
    };
    let mut out = Graph::new(g.n());
    for (u, v) in g.edges() {
        if !(part.clique_side.contains(&u) && part.clique_side.contains(&v)) {
            out.add_edge(u, v)?;
        }
    }
    let mut legend = BTreeMap::new();
    for &v in &part.clique_side {
        legend.insert(v, format!("C'{v}"));
    }
    for &v in &part.independent_side {
        legend.insert(v, format!("I'{v}"));
    }
    Ok(GadgetInstance {
        graph: out,
        threshold: None,
        provenance: format!(
            "split-reduction of n={} m={} (clique side {:?})",
            g.n(),
            g.m(),
            part.clique_side
        ),
        vertex_legend: legend,
    })
}

/// ⌈(n+1)/2⌉, the half threshold of the independence question the gadget
/// encodes.
pub fn half_threshold(n: usize) -> usize {
    (n + 2) / 2
}

/// Independence-threshold gadget. For k = 2: per source vertex i, a column
/// of 2n+1 u-vertices (all u's form one clique U) and 2n w-vertices in n
/// adjacent twin pairs; the last pair also sees u_i^{2n+1}; a source edge
/// v_i v_j connects every u_i^p (p ≤ 2n) with every w_j^q and vice versa.
/// Then the output has rank ≥ threshold iff the source has an independent
/// set of ⌈(n+1)/2⌉ vertices. For k > 2 the pairs become twin k-cliques.
pub fn npc_gadget(g: &Graph, k: usize) -> Result<GadgetInstance> {
    let n = g.n();
    if n < 2 {
        return Err(Error::Invalid("source must have at least 2 vertices".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if k < 2 {
        return Err(Error::Invalid("k must be at least 2".into()));
    }
    let u_per = 2 * n + 1;
    let w_per = k * n;
    let total = n * u_per + n * w_per;
    let u_id = |i: usize, p: usize| i * u_per + (p - 1); // p in 1..=2n+1
    let w_id = |i: usize, q: usize| n * u_per + i * w_per + (q - 1); // q in 1..=kn

    let mut out = Graph::new(total);
    let mut legend = BTreeMap::new();
    for i in 0..n {
        for p in 1..=u_per {
            legend.insert(u_id(i, p), format!("u_{i}^{p}"));
        }
        for q in 1..=w_per {
            legend.insert(w_id(i, q), format!("w_{i}^{q}"));
        }
    }
    // U is a clique
    for a in 0..n * u_per {
        for b in a + 1..n * u_per {
            out.add_edge(a, b)?;
        }
    }
    // twin groups of k w's; the last group also sees u_i^{2n+1}
    for i in 0..n {
        for grp in 0..n {
            let members: Vec<usize> = (1..=k).map(|t| w_id(i, grp * k + t)).collect();
            for (x, &a) in members.iter().enumerate() {
                for &b in &members[x + 1..] {
                    out.add_edge(a, b)?;
                }
            }
            if grp == n - 1 {
                for &b in &members {
                    out.add_edge(u_id(i, u_per), b)?;
                }
            }
        }
    }
    // source edges join u-columns to w-groups crosswise
    for (i, j) in g.edges() {
        for p in 1..=2 * n {
            for q in 1..=w_per {
                out.add_edge(u_id(i, p), w_id(j, q))?;
                out.add_edge(u_id(j, p), w_id(i, q))?;
            }
        }
    }
    let threshold = if k == 2 {
        n + (4 * n - 1) * half_threshold(n)
    } else {
        n + k * n * half_threshold(n)
    };
    Ok(GadgetInstance {
        graph: out,
        threshold: Some(threshold),
        provenance: format!("independence-threshold gadget, source n={} m={}, k={k}", n, g.m()),
        vertex_legend: legend,
    })
}

/// Two-atom composition gadget: two disjoint copies of the source (V2, V4),
/// two n-cliques (V1, V3) privately matched to them, and a hub adjacent to
/// both copies. The result has exactly two atoms and rank
/// max(n, 2·ω(source)).
pub fn gamma3_gadget(g: &Graph) -> Result<GadgetInstance> {
    let n = g.n();
    if n < 2 {
        return Err(Error::Invalid("source must have at least 2 vertices".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if (0..n).any(|v| g.degree(v) == n - 1) {
        return Err(Error::Invalid("source has a universal vertex".into()));
    }
    let total = 4 * n + 1;
    let hub = 4 * n;
    let mut out = Graph::new(total);
    let mut legend = BTreeMap::new();
    // parts: V1 = 0..n, V2 = n..2n, V3 = 2n..3n, V4 = 3n..4n
    for v in 0..n {
        legend.insert(v, format!("V1_{v}"));
        legend.insert(n + v, format!("V2_{v}"));
        legend.insert(2 * n + v, format!("V3_{v}"));
        legend.insert(3 * n + v, format!("V4_{v}"));
    }
    legend.insert(hub, "w".into());
    for a in 0..n {
        for b in a + 1..n {
            out.add_edge(a, b)?;
            out.add_edge(2 * n + a, 2 * n + b)?;
        }
    }
    for (a, b) in g.edges() {
        out.add_edge(n + a, n + b)?;
        out.add_edge(3 * n + a, 3 * n + b)?;
    }
    for v in 0..n {
        out.add_edge(v, n + v)?; // private matching V1 -> V2
        out.add_edge(2 * n + v, 3 * n + v)?; // V3 -> V4
        out.add_edge(hub, n + v)?;
        out.add_edge(hub, 3 * n + v)?;
    }
    Ok(GadgetInstance {
        graph: out,
        threshold: None,
        provenance: format!("two-atom composition of source n={} m={}", n, g.m()),
        vertex_legend: legend,
    })
}

/// Exact independence number via maximum clique of the complement.
pub fn alpha(g: &Graph) -> Result<usize> {
    if g.n() > ALPHA_CAP {
        return Err(Error::CapExceeded {
            what: "alpha",
            cap: ALPHA_CAP,
            got: g.n(),
        });
    }
    Ok(max_clique(&g.complement(), None).len())
}

/// Exact independence number by subset enumeration (cross-check oracle).
pub fn alpha_bruteforce(g: &Graph) -> Result<usize> {
    if g.n() > ALPHA_CAP {
        return Err(Error::CapExceeded {
            what: "alpha_bruteforce",
            cap: ALPHA_CAP,
            got: g.n(),
        });
    }
    let n = g.n();
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        let s: VertexSet = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if s.len() > best && g.is_independent_set(&s) {
            best = s.len();
        }
    }
    Ok(best)
}
