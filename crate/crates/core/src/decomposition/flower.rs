//! Flowers (iterated petal peeling), stamen optimization, and the
//! decomposition-based independence characterization.

use std::collections::BTreeSet;

use crate::convexity::hull;
use crate::error::{Error, Result};
use crate::graph::{max_clique, Graph, VertexSet};

use super::{atoms, classify_atom, AtomDecomposition};

/// Default cap on distinct flowers per graph during enumeration.
pub const DEFAULT_FLOWER_CAP: usize = 20_000;

/// A flower subgraph: what is left of the input after a sequence of petal
/// peels. Vertex ids stay in the original graph's numbering.
#[derive(Debug, Clone)]
pub struct Flower {
    pub alive: VertexSet,
    pub decomposition: AtomDecomposition,
    pub peel_history: Vec<VertexSet>,
}

impl Flower {
    /// The trivial flower: the whole graph.
    pub fn new(g: &Graph) -> Result<Flower> {
        Ok(Flower {
            alive: g.vertices(),
            decomposition: decompose_alive(g, &g.vertices())?,
            peel_history: Vec::new(),
        })
    }

    /// Indices of atoms that are petals of this flower.
    pub fn petals(&self, g: &Graph) -> Vec<usize> {
        (0..self.decomposition.atoms.len())
            .filter(|&i| classify_atom(g, &self.decomposition, i).map_or(false, |c| c.is_petal))
            .collect()
    }

    /// Peel petal `i`: remove its inner and redecompose. Refused when the
    /// atom is not a petal or when the flower would become empty.
    pub fn peel(&self, g: &Graph, i: usize) -> Result<Flower> {
        let atom = self
            .decomposition
            .atoms
            .get(i)
            .ok_or(Error::BadAtomIndex(i))?;
        if !classify_atom(g, &self.decomposition, i)?.is_petal {
            return Err(Error::NotAPetal(i));
        }
        if atom.inner == self.alive {
            return Err(Error::PeelWouldEmpty(i));
        }
        let next_alive: VertexSet = self.alive.difference(&atom.inner).copied().collect();
        let mut history = self.peel_history.clone();
        history.push(atom.inner.clone());
        Ok(Flower {
            decomposition: decompose_alive(g, &next_alive)?,
            alive: next_alive,
            peel_history: history,
        })
    }
}

/// Atom decomposition of g[alive], reported in original vertex ids.
fn decompose_alive(g: &Graph, alive: &VertexSet) -> Result<AtomDecomposition> {
    let (sub, map) = g.induced(alive);
    let d = atoms(&sub)?;
    let sets: Vec<VertexSet> = d
        .atoms
        .iter()
        .map(|a| a.vertices.iter().map(|&v| map[v]).collect())
        .collect();
    Ok(AtomDecomposition::from_vertex_sets(g, sets))
}

/// Every distinct flower of `g` (by alive set), depth-first over peel
/// choices, starting with `g` itself.
pub fn enumerate_flowers(g: &Graph, cap: usize) -> Result<Vec<Flower>> {
    let root = Flower::new(g)?;
    let mut seen: BTreeSet<VertexSet> = BTreeSet::new();
    seen.insert(root.alive.clone());
    let mut stack = vec![root];
    let mut out = Vec::new();
    while let Some(f) = stack.pop() {
        for i in (0..f.decomposition.atoms.len()).rev() {
            match f.peel(g, i) {
                Ok(child) => {
                    if seen.insert(child.alive.clone()) {
                        if seen.len() > cap {
                            return Err(Error::CapExceeded {
                                what: "flower enumeration",
                                cap,
                                got: seen.len(),
                            });
                        }
                        stack.push(child);
                    }
                }
                Err(Error::NotAPetal(_)) | Err(Error::PeelWouldEmpty(_)) => {}
                Err(e) => return Err(e),
            }
        }
        out.push(f);
    }
    Ok(out)
}

/// Greedy fixpoint: peel, in atom-index order, any petal whose inner avoids
/// `x`, until nothing peels.
pub fn minimal_flower_containing(g: &Graph, x: &VertexSet) -> Result<Flower> {
    let mut f = Flower::new(g)?;
    'outer: loop {
        for i in 0..f.decomposition.atoms.len() {
            if f.decomposition.atoms[i].inner.is_disjoint(x) {
                match f.peel(g, i) {
                    Ok(next) => {
                        f = next;
                        continue 'outer;
                    }
                    Err(Error::NotAPetal(_)) | Err(Error::PeelWouldEmpty(_)) => {}
                    Err(e) => return Err(e),
                }
            }
        }
        return Ok(f);
    }
}

/// A maximum stamen set of a petal: Type 1 is any inner singleton, Type 2 a
/// pair of inner vertices dominating the border, Type 3 an inner clique that
/// extends the border to a clique.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StamenResult {
    pub stamen: VertexSet,
    pub stype: u8,
    pub size: usize,
}

pub fn stamen_max(g: &Graph, f: &Flower, i: usize) -> Result<StamenResult> {
    let atom = f
        .decomposition
        .atoms
        .get(i)
        .ok_or(Error::BadAtomIndex(i))?;
    if !classify_atom(g, &f.decomposition, i)?.is_petal {
        return Err(Error::NotAPetal(i));
    }
    Ok(stamen_for(g, &atom.inner, &atom.border))
}

/// Maximum stamen of a hypothetical petal with the given inner and border;
/// `size` 0 when the inner is empty.
pub fn stamen_for(g: &Graph, inner: &VertexSet, border: &VertexSet) -> StamenResult {
    if inner.is_empty() {
        return StamenResult {
            stamen: VertexSet::new(),
            stype: 0,
            size: 0,
        };
    }
    // inner vertices adjacent to the whole border (the border may be empty)
    let dom: VertexSet = inner
        .iter()
        .copied()
        .filter(|&u| border.iter().all(|&b| g.has_edge(u, b)))
        .collect();

    let mut candidates: Vec<StamenResult> = Vec::new();
    let first = *inner.iter().next().expect("inner is nonempty");
    candidates.push(StamenResult {
        stamen: [first].into_iter().collect(),
        stype: 1,
        size: 1,
    });
    if dom.len() >= 2 {
        let pair: VertexSet = dom.iter().copied().take(2).collect();
        candidates.push(StamenResult {
            stamen: pair,
            stype: 2,
            size: 2,
        });
    }
    let clique = max_clique(g, Some(&dom));
    if clique.len() >= 2 {
        candidates.push(StamenResult {
            size: clique.len(),
            stamen: clique,
            stype: 3,
        });
    }
    // largest wins; ties prefer the higher type, then the lex-smaller set
    candidates.sort_by(|a, b| {
        b.size
            .cmp(&a.size)
            .then(b.stype.cmp(&a.stype))
            .then(a.stamen.cmp(&b.stamen))
    });
    candidates.remove(0)
}

/// K4-free, and every atom that contains a triangle is exactly a triangle.
pub fn is_gamma1(g: &Graph) -> Result<bool> {
    let d = atoms(g)?;
    Ok(d.atoms.iter().all(|a| {
        let w = max_clique(g, Some(&a.vertices)).len();
        w <= 2 || (w == 3 && a.vertices.len() == 3)
    }))
}

/// Every vertex belongs to at most two atoms (equivalently, the atom
/// intersection graph is a tree).
pub fn is_gamma2(g: &Graph) -> Result<bool> {
    let d = atoms(g)?;
    let ans = d.membership.iter().all(|m| m.len() <= 2);
    debug_assert_eq!(ans, d.intersection_graph.is_tree());
    Ok(ans)
}

/// Independence via the decomposition characterization: in the minimal
/// flower containing the hull of `s`, each petal's share of `s` must fit in
/// one stamen set, and non-petal atoms must miss `s` entirely.
pub fn is_independent_charac(g: &Graph, s: &VertexSet) -> Result<bool> {
    let (hs, _) = hull(g, s)?;
    let f = minimal_flower_containing(g, &hs)?;
    for (i, atom) in f.decomposition.atoms.iter().enumerate() {
        let sm: VertexSet = s.intersection(&atom.vertices).copied().collect();
        if sm.is_empty() {
            continue;
        }
        if !classify_atom(g, &f.decomposition, i)?.is_petal {
            return Ok(false);
        }
        if sm.iter().any(|v| atom.border.contains(v)) {
            return Ok(false);
        }
        if sm.len() <= 1 {
            continue; // inside a Type-1 stamen
        }
        let dominating = sm
            .iter()
            .all(|&u| atom.border.iter().all(|&b| g.has_edge(u, b)));
        let type2 = sm.len() == 2 && dominating;
        let type3 = dominating && g.is_clique(&sm);
        if !(type2 || type3) {
            return Ok(false);
        }
    }
    Ok(true)
}
