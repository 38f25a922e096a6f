//! Classical subroutines: exact maximum clique, biconnected components,
//! bipartite maximum independent set, split-graph recognition.



use crate::error::{Error, Result};

use super::{Graph, VertexSet};

/// Exact maximum clique of the subgraph induced on `restrict` (or all of V),
/// ties broken by lexicographically smallest sorted vertex list.
/// Branch and bound; exponential worst case.
pub fn max_clique(g: &Graph, restrict: Option<&VertexSet>) -> VertexSet {
    let verts: Vec<usize> = match restrict {
        Some(r) => r.iter().copied().collect(),
        None => (0..g.n()).collect(),
    };
    let mut best: Vec<usize> = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    extend_clique(g, &verts, &mut current, &mut best);
    best.into_iter().collect()
}

fn extend_clique(g: &Graph, candidates: &[usize], current: &mut Vec<usize>, best: &mut Vec<usize>) {
    if current.len() > best.len() || (current.len() == best.len() && current[..] < best[..]) {
        *best = current.clone();
    }
    for (i, &v) in candidates.iter().enumerate() {
        // strict prune keeps equal-size cliques reachable for the lex tie-break
        if current.len() + (candidates.len() - i) < best.len() {
            return;
        }
        let next: Vec<usize> = candidates[i + 1..]
            .iter()
            .copied()
            .filter(|&w| g.has_edge(v, w))
            .collect();
        current.push(v);
        extend_clique(g, &next, current, best);
        current.pop();
    }
}

/// Blocks (maximal 2-connected subgraphs or bridge edges) and cut vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<VertexSet>,
    pub cut_vertices: VertexSet,
    pub leaf_block_count: usize,
}

/// Standard low-point biconnected-component decomposition. Iterative DFS so
/// that path graphs of any length are safe. Requires a connected graph.
pub fn blocks(g: &Graph) -> Result<BlockDecomposition> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    if n == 1 {
        return Ok(BlockDecomposition {
            blocks: vec![[0].into_iter().collect()],
            cut_vertices: VertexSet::new(),
            leaf_block_count: 1,
        });
    }

    let mut disc = vec![usize::MAX; n];
    let mut low = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut timer = 0usize;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut raw_blocks: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut cut = vec![false; n];

    // iterative DFS from vertex 0; iters[v] walks adj(v)
    let mut iters: Vec<std::collections::btree_set::Iter<usize>> =
        (0..n).map(|v| g.adj(v).iter()).collect();
    let mut stack = vec![0usize];
    disc[0] = timer;
    low[0] = timer;
    timer += 1;
    let mut root_children = 0usize;

    while let Some(&v) = stack.last() {
        if let Some(&w) = iters[v].next() {
            if disc[w] == usize::MAX {
                parent[w] = v;
                disc[w] = timer;
                low[w] = timer;
                timer += 1;
                edge_stack.push((v, w));
                if v == 0 {
                    root_children += 1;
                }
                stack.push(w);
            } else if w != parent[v] && disc[w] < disc[v] {
                edge_stack.push((v, w));
                low[v] = low[v].min(disc[w]);
            }
        } else {
            stack.pop();
            if let Some(&u) = stack.last() {
                low[u] = low[u].min(low[v]);
                if low[v] >= disc[u] {
                    // u closes a block containing edge (u, v)
                    let mut blk = Vec::new();
                    while let Some(&(a, b)) = edge_stack.last() {
                        if disc[a] >= disc[v] || (a, b) == (u, v) {
                            blk.push(edge_stack.pop().unwrap());
                            if (a, b) == (u, v) {
                                break;
                            }
                        } else {
                            break;
                        }
                    }
                    raw_blocks.push(blk);
                    if u != 0 {
                        cut[u] = true;
                    }
                }
            }
        }
    }
    if root_children >= 2 {
        cut[0] = true;
    }

    let mut block_sets: Vec<VertexSet> = raw_blocks
        .into_iter()
        .map(|edges| edges.into_iter().flat_map(|(a, b)| [a, b]).collect())
        .collect();
    block_sets.sort();

    let cut_vertices: VertexSet = (0..n).filter(|&v| cut[v]).collect();
    let leaf_block_count = if block_sets.len() == 1 {
        1
    } else {
        block_sets
            .iter()
            .filter(|b| b.iter().filter(|v| cut_vertices.contains(v)).count() <= 1)
            .count()
    };

    Ok(BlockDecomposition {
        blocks: block_sets,
        cut_vertices,
        leaf_block_count,
    })
}

/// Maximum independent set of a bipartite graph via maximum matching and
/// the complement of a König vertex cover. Errors with an odd-cycle witness
/// on non-bipartite input.
pub fn bipartite_max_independent_set(g: &Graph) -> Result<VertexSet> {
    let color = g.two_coloring().map_err(|cycle| Error::NotBipartite { cycle })?;
    let left: Vec<usize> = (0..g.n()).filter(|&v| color[v] == 0).collect();

    // Kuhn's augmenting paths from the left side.
    let mut match_of = vec![usize::MAX; g.n()];
    for &u in &left {
        let mut visited = vec![false; g.n()];
        try_augment(g, u, &mut visited, &mut match_of);
    }

    // König: Z = unmatched left vertices plus everything reachable by
    // alternating paths; cover = (L - Z) ∪ (R ∩ Z); MIS = complement.
    let mut in_z = vec![false; g.n()];
    let mut queue: Vec<usize> = left
        .iter()
        .copied()
        .filter(|&u| match_of[u] == usize::MAX)
        .collect();
    for &u in &queue {
        in_z[u] = true;
    }
    while let Some(u) = queue.pop() {
        if color[u] == 0 {
            for &w in g.adj(u) {
                if !in_z[w] && match_of[u] != w {
                    in_z[w] = true;
                    queue.push(w);
                }
            }
        } else if match_of[u] != usize::MAX && !in_z[match_of[u]] {
            in_z[match_of[u]] = true;
            queue.push(match_of[u]);
        }
    }

    Ok((0..g.n())
        .filter(|&v| if color[v] == 0 { in_z[v] } else { !in_z[v] })
        .collect())
}

fn try_augment(g: &Graph, u: usize, visited: &mut [bool], match_of: &mut [usize]) -> bool {
    for &w in g.adj(u) {
        if visited[w] {
            continue;
        }
        visited[w] = true;
        if match_of[w] == usize::MAX || try_augment(g, match_of[w], visited, match_of) {
            match_of[w] = u;
            match_of[u] = w;
            return true;
        }
    }
    false
}

/// Maximum matching size of a bipartite graph (König check helper).
pub fn bipartite_matching_size(g: &Graph) -> Result<usize> {
    let color = g.two_coloring().map_err(|cycle| Error::NotBipartite { cycle })?;
    let mut match_of = vec![usize::MAX; g.n()];
    let mut size = 0;
    for u in (0..g.n()).filter(|&v| color[v] == 0) {
        let mut visited = vec![false; g.n()];
        if try_augment(g, u, &mut visited, &mut match_of) {
            size += 1;
        }
    }
    Ok(size)
}

/// Clique/independent split of a split graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPartition {
    pub clique_side: VertexSet,
    pub independent_side: VertexSet,
}

/// Degree-sequence split recognition (Hammer–Simeone). When the graph is
/// split, the m highest-degree vertices form a maximum clique; any
/// independent-side vertex adjacent to all of C is moved into C.
pub fn split_partition(g: &Graph) -> Option<SplitPartition> {
    let n = g.n();
    if n == 0 {
        return None;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let degs: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();
    let m = (1..=n).filter(|&i| degs[i - 1] >= i - 1).max().unwrap_or(0);
    let lhs: usize = degs[..m].iter().sum();
    let rhs: usize = m * (m - 1) + degs[m..].iter().sum::<usize>();
    if lhs != rhs {
        return None;
    }
    let mut clique: VertexSet = order[..m].iter().copied().collect();
    let mut indep: VertexSet = order[m..].iter().copied().collect();
    if !g.is_clique(&clique) || !g.is_independent_set(&indep) {
        return None;
    }
    // make C maximal
    loop {
        let movable = indep
            .iter()
            .copied()
            .find(|&v| clique.iter().all(|&c| g.has_edge(v, c)));
        match movable {
            Some(v) => {
                indep.remove(&v);
                clique.insert(v);
            }
            None => break,
        }
    }
    Some(SplitPartition {
        clique_side: clique,
        independent_side: indep,
    })
}
