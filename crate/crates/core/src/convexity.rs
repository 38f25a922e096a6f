//! Monophonic-convexity operators: the exhaustive interval oracle, the
//! polynomial hull closure, the convexity test, and the definition-level
//! independence test.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Cap for the exhaustive induced-path search.
pub const INTERVAL_CAP: usize = 14;

/// One vertex added by the hull closure, with the non-adjacent attachment
/// pair that forced it and the component the connecting path ran through.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HullAddition {
    pub vertex: usize,
    pub witness: (usize, usize),
    pub component: VertexSet,
}

/// Hull computation transcript; the trace depends on scan order, the
/// resulting set does not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HullTrace {
    pub start: VertexSet,
    pub additions: Vec<HullAddition>,
    pub result: VertexSet,
}

/// Monophonic interval [s]: s plus every vertex on some chordless path
/// between two vertices of s. Exhaustive search; oracle-grade only.
pub fn interval_bruteforce(g: &Graph, s: &VertexSet) -> Result<VertexSet> {
    if g.n() > INTERVAL_CAP {
        return Err(Error::CapExceeded {
            what: "interval_bruteforce (use hull instead)",
            cap: INTERVAL_CAP,
            got: g.n(),
        });
    }
    let mut result = s.clone();
    let pairs: Vec<(usize, usize)> = s
        .iter()
        .flat_map(|&a| s.range(a + 1..).map(move |&b| (a, b)))
        .collect();
    for (a, b) in pairs {
        let mut on_path = vec![false; g.n()];
        let mut path = vec![a];
        induced_paths(g, b, &mut path, &mut on_path);
        for (v, hit) in on_path.iter().enumerate() {
            if *hit {
                result.insert(v);
            }
        }
    }
    Ok(result)
}

/// Extend `path` by vertices adjacent to the last vertex only; record the
/// vertices of every chordless path reaching `target`.
fn induced_paths(g: &Graph, target: usize, path: &mut Vec<usize>, on_path: &mut [bool]) {
    let last = *path.last().unwrap();
    for &w in g.adj(last) {
        if path.contains(&w) {
            continue;
        }
        // chord check against everything before `last`
        if path[..path.len() - 1].iter().any(|&p| g.has_edge(p, w)) {
            continue;
        }
        if w == target {
            for &v in path.iter() {
                on_path[v] = true;
            }
            on_path[w] = true;
        } else {
            path.push(w);
            induced_paths(g, target, path, on_path);
            path.pop();
        }
    }
}

/// Monophonic convex hull of `s` with a trace. Closure loop: while some
/// component of G−C sees two non-adjacent vertices of C, pull in the
/// interior of a shortest path between them through that component.
pub fn hull(g: &Graph, s: &VertexSet) -> Result<(VertexSet, HullTrace)> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut current = s.clone();
    let mut additions = Vec::new();
    'closure: loop {
        for comp in g.components(&current) {
            let attach: VertexSet = current
                .iter()
                .copied()
                .filter(|&c| g.adj(c).iter().any(|w| comp.contains(w)))
                .collect();
            if let Some((u, v)) = first_nonadjacent_pair(g, &attach) {
                let interior = shortest_path_interior(g, &comp, u, v);
                for &x in &interior {
                    additions.push(HullAddition {
                        vertex: x,
                        witness: (u, v),
                        component: comp.clone(),
                    });
                    current.insert(x);
                }
                continue 'closure;
            }
        }
        break;
    }
    let trace = HullTrace {
        start: s.clone(),
        additions,
        result: current.clone(),
    };
    Ok((current, trace))
}

fn first_nonadjacent_pair(g: &Graph, set: &VertexSet) -> Option<(usize, usize)> {
    let verts: Vec<usize> = set.iter().copied().collect();
    for (i, &u) in verts.iter().enumerate() {
        for &v in &verts[i + 1..] {
            if !g.has_edge(u, v) {
                return Some((u, v));
            }
        }
    }
    None
}

/// Interior of the shortest u–v path inside comp ∪ {u, v}. Breadth-first
/// from the smaller endpoint, parent ties broken by smallest id.
fn shortest_path_interior(g: &Graph, comp: &VertexSet, u: usize, v: usize) -> Vec<usize> {
    let (src, dst) = (u.min(v), u.max(v));
    let mut within = comp.clone();
    within.insert(src);
    within.insert(dst);
    let mut parent = vec![usize::MAX; g.n()];
    let mut dist = vec![usize::MAX; g.n()];
    dist[src] = 0;
    let mut queue = VecDeque::from([src]);
    while let Some(x) = queue.pop_front() {
        for &y in g.adj(x) {
            // smallest-id parent: BTreeSet iteration plus FIFO order gives it
            if within.contains(&y) && dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    let mut interior = Vec::new();
    let mut x = parent[dst];
    while x != src && x != usize::MAX {
        interior.push(x);
        x = parent[x];
    }
    interior.reverse();
    interior
}

/// A set is monophonically convex iff the attachment of every component of
/// G−c is a clique.
pub fn is_convex(g: &Graph, c: &VertexSet) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    for comp in g.components(c) {
        let attach: VertexSet = c
            .iter()
            .copied()
            .filter(|&x| g.adj(x).iter().any(|w| comp.contains(w)))
            .collect();
        if !g.is_clique(&attach) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Definition-level m-convex independence: v ∉ ⟨s − {v}⟩ for every v ∈ s.
pub fn is_independent_def(g: &Graph, s: &VertexSet) -> Result<bool> {
    for &v in s {
        let mut rest = s.clone();
        rest.remove(&v);
        let (h, _) = hull(g, &rest)?;
        if h.contains(&v) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff ⟨s⟩ = V.
pub fn is_hull_set(g: &Graph, s: &VertexSet) -> Result<bool> {
    let (h, _) = hull(g, s)?;
    Ok(h.len() == g.n())
}

/// Iterated interval closure; the oracle counterpart of `hull`.
pub fn hull_bruteforce(g: &Graph, s: &VertexSet) -> Result<VertexSet> {
    let mut current = s.clone();
    loop {
        let next = interval_bruteforce(g, &current)?;
        if next == current {
            return Ok(current);
        }
        current = next;
    }
}
