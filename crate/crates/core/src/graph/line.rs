//! Line graphs and root reconstruction.
//!
//! The root finder grows a Krausz partition (edge cliques covering every
//! edge once with each vertex in at most two cliques) from a starting cell
//! and verifies the reconstruction by explicit relabeling, so any returned
//! root is correct by construction.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

use super::{Graph, VertexSet};

/// Line graph of `h` plus the map edge-of-h -> vertex id. Edges of `h` are
/// numbered in sorted `(u, v)` order.
pub fn line_graph(h: &Graph) -> Result<(Graph, BTreeMap<(usize, usize), usize>)> {
    let edges = h.edges();
    if edges.is_empty() {
        return Err(Error::Edgeless);
    }
    let mapping: BTreeMap<(usize, usize), usize> =
        edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut lg = Graph::new(edges.len());
    for (i, &(a, b)) in edges.iter().enumerate() {
        for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
            if a == c || a == d || b == c || b == d {
                lg.add_edge(i, j)?;
            }
        }
    }
    Ok((lg, mapping))
}

/// If `g` is a connected line graph, return a root `H` together with the
/// map vertex-of-g -> edge-of-H. For g = K3 the star K1,3 is returned
/// (the Whitney-exceptional root). Returns `None` when g is not a line graph.
pub fn line_graph_root(g: &Graph) -> Result<Option<(Graph, BTreeMap<usize, (usize, usize)>)>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    if n == 0 {
        return Ok(None);
    }
    if n == 1 {
        // L(K2) = K1
        let h = Graph::from_edges(2, &[(0, 1)])?;
        return Ok(Some((h, [(0, (0, 1))].into_iter().collect())));
    }
    if n == 3 && g.m() == 3 {
        // K3: both K3 and K1,3 are roots; the star is the one whose rank
        // formula evaluates correctly, so it is returned.
        let h = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)])?;
        let mapping = [(0, (0, 1)), (1, (0, 2)), (2, (0, 3))].into_iter().collect();
        return Ok(Some((h, mapping)));
    }

    let (a, b) = g.edges()[0];
    // Every Krausz cell containing edge (a, b) is a clique on {a, b} plus
    // triangle completers; candidate cells are {a,b} joined with each
    // maximal clique among the completers, largest first.
    let completers: VertexSet = g
        .adj(a)
        .iter()
        .copied()
        .filter(|&c| g.has_edge(b, c))
        .collect();
    let mut candidates: Vec<VertexSet> = Vec::new();
    for m in maximal_cliques_within(g, &completers) {
        let mut cell: VertexSet = [a, b].into_iter().collect();
        cell.extend(m);
        candidates.push(cell);
    }
    candidates.sort_by(|x, y| y.len().cmp(&x.len()).then(x.cmp(y)));
    candidates.push([a, b].into_iter().collect());

    for cell in candidates {
        if let Some(result) = try_partition(g, cell) {
            return Ok(Some(result));
        }
    }
    Ok(None)
}

/// Maximal cliques of the induced subgraph on `within` (small sets only).
fn maximal_cliques_within(g: &Graph, within: &VertexSet) -> Vec<VertexSet> {
    let verts: Vec<usize> = within.iter().copied().collect();
    let mut cliques: Vec<VertexSet> = Vec::new();
    let k = verts.len();
    if k > 20 {
        // a line graph never has this many triangles on one edge
        return cliques;
    }
    for mask in 1u32..(1 << k) {
        let s: VertexSet = verts
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        if g.is_clique(&s) {
            cliques.retain(|c| !c.is_subset(&s));
            if !cliques.iter().any(|c| s.is_subset(c)) {
                cliques.push(s);
            }
        }
    }
    cliques
}

/// Grow the forced Krausz partition from `start`; on success build the root
/// and verify it by relabeling.
fn try_partition(
    g: &Graph,
    start: VertexSet,
) -> Option<(Graph, BTreeMap<usize, (usize, usize)>)> {
    let n = g.n();
    let mut cell_of: Vec<Vec<usize>> = vec![Vec::new(); n]; // cell ids per vertex
    let mut cells: Vec<VertexSet> = Vec::new();
    let mut covered: Vec<VertexSet> = vec![VertexSet::new(); n]; // covered neighbors

    let add_cell = |cell: VertexSet,
                        cells: &mut Vec<VertexSet>,
                        cell_of: &mut Vec<Vec<usize>>,
                        covered: &mut Vec<VertexSet>|
     -> bool {
        let id = cells.len();
        for &v in &cell {
            if cell_of[v].len() >= 2 {
                return false;
            }
            cell_of[v].push(id);
        }
        let verts: Vec<usize> = cell.iter().copied().collect();
        for (i, &u) in verts.iter().enumerate() {
            for &v in &verts[i + 1..] {
                if covered[u].contains(&v) {
                    return false; // edge covered twice
                }
                covered[u].insert(v);
                covered[v].insert(u);
            }
        }
        cells.push(cell);
        true
    };

    if !g.is_clique(&start) {
        return None;
    }
    let mut queue: Vec<usize> = start.iter().copied().collect();
    if !add_cell(start, &mut cells, &mut cell_of, &mut covered) {
        return None;
    }
    while let Some(u) = queue.pop() {
        let remaining: VertexSet = g.adj(u).difference(&covered[u]).copied().collect();
        if remaining.is_empty() {
            continue;
        }
        // all uncovered edges at u must share u's second cell
        let mut cell: VertexSet = remaining;
        cell.insert(u);
        if !g.is_clique(&cell) {
            return None;
        }
        queue.extend(cell.iter().copied().filter(|&v| v != u));
        if !add_cell(cell, &mut cells, &mut cell_of, &mut covered) {
            return None;
        }
    }
    // every edge covered and every vertex in some cell
    for u in 0..n {
        if covered[u].len() != g.degree(u) || cell_of[u].is_empty() {
            return None;
        }
    }

    // root: one node per cell plus a private node for each vertex in only
    // one cell; g-vertex v becomes the edge between its cells
    let mut root_n = cells.len();
    let mut mapping: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for v in 0..n {
        let e = match cell_of[v][..] {
            [c1, c2] => (c1.min(c2), c1.max(c2)),
            [c1] => {
                let pendant = root_n;
                root_n += 1;
                (c1.min(pendant), c1.max(pendant))
            }
            _ => return None,
        };
        mapping.insert(v, e);
        edges.push(e);
    }
    let mut root = Graph::new(root_n);
    for &(u, v) in &edges {
        if u == v || root.has_edge(u, v) {
            return None; // two g-vertices collapsed onto one root edge
        }
        root.add_edge(u, v).ok()?;
    }

    if verify_line_mapping(g, &root, &mapping) {
        Some((root, mapping))
    } else {
        None
    }
}

/// Explicit relabeling check: adjacency of g matches edge-intersection of
/// the mapped root edges.
pub fn verify_line_mapping(
    g: &Graph,
    root: &Graph,
    mapping: &BTreeMap<usize, (usize, usize)>,
) -> bool {
    if mapping.len() != g.n() || root.m() != g.n() {
        return false;
    }
    for (&v, &(a, b)) in mapping {
        if !root.has_edge(a, b) || v >= g.n() {
            return false;
        }
    }
    for u in 0..g.n() {
        let (a, b) = mapping[&u];
        for v in u + 1..g.n() {
            let (c, d) = mapping[&v];
            let share = a == c || a == d || b == c || b == d;
            if share != g.has_edge(u, v) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn line_graph_examples() {
        let (lp4, _) = line_graph(&path(4)).unwrap();
        assert_eq!(lp4.n(), 3);
        assert_eq!(lp4.m(), 2); // P3

        let claw = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let (lclaw, _) = line_graph(&claw).unwrap();
        assert_eq!(lclaw.m(), 3); // K3

        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let (lc5, _) = line_graph(&c5).unwrap();
        assert_eq!((lc5.n(), lc5.m()), (5, 5));
        assert!(lc5.is_connected());

        assert!(matches!(line_graph(&Graph::new(3)), Err(Error::Edgeless)));
    }

    #[test]
    fn root_of_p3_is_p4() {
        let p3 = path(3);
        let (root, mapping) = line_graph_root(&p3).unwrap().unwrap();
        assert_eq!((root.n(), root.m()), (4, 3));
        assert!(verify_line_mapping(&p3, &root, &mapping));
    }

    #[test]
    fn root_of_k3_is_star() {
        let k3 = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let (root, mapping) = line_graph_root(&k3).unwrap().unwrap();
        assert_eq!((root.n(), root.m()), (4, 3));
        assert_eq!(root.max_degree(), 3); // the star, not the triangle
        assert!(verify_line_mapping(&k3, &root, &mapping));
    }

    #[test]
    fn claw_is_not_a_line_graph() {
        let claw = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(line_graph_root(&claw).unwrap().is_none());
    }

    #[test]
    fn octahedron_root_is_k4() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let (lk4, _) = line_graph(&k4).unwrap();
        let (root, mapping) = line_graph_root(&lk4).unwrap().unwrap();
        assert_eq!((root.n(), root.m()), (4, 6));
        assert!(verify_line_mapping(&lk4, &root, &mapping));
    }

    #[test]
    fn roots_round_trip_on_random_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(21);
        let mut found = 0;
        for _ in 0..200 {
            let n = rng.gen_range(2..=7);
            let mut g = Graph::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.45) {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            if !g.is_connected() || g.m() == 0 {
                continue;
            }
            let (lg, _) = line_graph(&g).unwrap();
            let (root, mapping) = line_graph_root(&lg)
                .unwrap()
                .expect("line graph of a connected graph must be recognized");
            assert!(verify_line_mapping(&lg, &root, &mapping));
            found += 1;
        }
        assert!(found > 100);
    }
}
