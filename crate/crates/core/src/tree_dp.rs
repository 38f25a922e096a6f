//! Tree meta-algorithm: compute a value per directed tree edge and per node,
//! where each directed-edge value depends only on the values entering its
//! tail from the other neighbors. Two phases — peel leaves inward, then
//! regrow outward — give every directed edge exactly once (2k−2 calls) and
//! every node exactly once (k calls).

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Completed tables: `edge_values[(v, w)]` is the message from v into w.
#[derive(Debug, Clone)]
pub struct MessageTables<V> {
    pub edge_values: BTreeMap<(usize, usize), V>,
    pub node_values: BTreeMap<usize, V>,
    pub edge_calls: usize,
    pub node_calls: usize,
}

/// Messages entering a node, as (source, value) pairs sorted by source.
pub type Inbox<'a, V> = Vec<(usize, &'a V)>;

/// Run with leaves peeled in id order.
pub fn tree_dp_run<V: Clone>(
    tree: &Graph,
    edge_fn: &mut dyn FnMut(usize, usize, &Inbox<V>) -> V,
    node_fn: &mut dyn FnMut(usize, &Inbox<V>) -> V,
) -> Result<MessageTables<V>> {
    let order: Vec<usize> = (0..tree.n()).collect();
    tree_dp_run_with_order(tree, &order, edge_fn, node_fn)
}

/// Run with a custom leaf preference: among current leaves, the one earliest
/// in `order` is peeled first. For order-independent functions the resulting
/// tables do not depend on `order`.
pub fn tree_dp_run_with_order<V: Clone>(
    tree: &Graph,
    order: &[usize],
    edge_fn: &mut dyn FnMut(usize, usize, &Inbox<V>) -> V,
    node_fn: &mut dyn FnMut(usize, &Inbox<V>) -> V,
) -> Result<MessageTables<V>> {
    if !tree.is_tree() || order.len() != tree.n() {
        return Err(Error::NotATree);
    }
    let k = tree.n();
    let mut tables = MessageTables {
        edge_values: BTreeMap::new(),
        node_values: BTreeMap::new(),
        edge_calls: 0,
        node_calls: 0,
    };
    if k == 1 {
        let v = node_fn(0, &Vec::new());
        tables.node_values.insert(0, v);
        tables.node_calls = 1;
        return Ok(tables);
    }

    let mut pos = vec![0usize; k];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut deg: Vec<usize> = (0..k).map(|v| tree.degree(v)).collect();
    let mut alive = vec![true; k];

    fn inbox<'a, V>(
        tree: &Graph,
        tables: &'a MessageTables<V>,
        w: usize,
        except: Option<usize>,
    ) -> Inbox<'a, V> {
        tree.adj(w)
            .iter()
            .copied()
            .filter(|&v| Some(v) != except)
            .map(|v| {
                let val = tables
                    .edge_values
                    .get(&(v, w))
                    .expect("dependency computed before use");
                (v, val)
            })
            .collect()
    }

    // phase 1: peel leaves until two nodes remain, sending messages inward
    let mut peeled: Vec<(usize, usize)> = Vec::new(); // (leaf, its neighbor)
    for _ in 0..k - 2 {
        let w = (0..k)
            .filter(|&v| alive[v] && deg[v] == 1)
            .min_by_key(|&v| pos[v])
            .expect("a tree with >2 nodes has a leaf");
        let u = tree
            .adj(w)
            .iter()
            .copied()
            .find(|&v| alive[v])
            .expect("leaf has an alive neighbor");
        let msgs = inbox(tree, &tables, w, Some(u));
        let val = edge_fn(w, u, &msgs);
        tables.edge_calls += 1;
        tables.edge_values.insert((w, u), val);
        alive[w] = false;
        deg[u] -= 1;
        peeled.push((w, u));
    }

    // the two crossing messages between the surviving pair
    let rest: Vec<usize> = (0..k).filter(|&v| alive[v]).collect();
    let (a, b) = (rest[0], rest[1]);
    for (x, y) in [(a, b), (b, a)] {
        let msgs = inbox(tree, &tables, x, Some(y));
        let val = edge_fn(x, y, &msgs);
        tables.edge_calls += 1;
        tables.edge_values.insert((x, y), val);
    }

    // phase 2: regrow, sending messages outward
    for &(w, u) in peeled.iter().rev() {
        let msgs = inbox(tree, &tables, u, Some(w));
        let val = edge_fn(u, w, &msgs);
        tables.edge_calls += 1;
        tables.edge_values.insert((u, w), val);
    }

    for w in 0..k {
        let msgs = inbox(tree, &tables, w, None);
        let val = node_fn(w, &msgs);
        tables.node_calls += 1;
        tables.node_values.insert(w, val);
    }
    Ok(tables)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::random_tree;

    fn degree_run(tree: &Graph, order: &[usize]) -> MessageTables<usize> {
        tree_dp_run_with_order(
            tree,
            order,
            &mut |_, _, msgs: &Inbox<usize>| msgs.len(),
            &mut |_, msgs: &Inbox<usize>| msgs.len(),
        )
        .unwrap()
    }

    #[test]
    fn single_node() {
        let t = Graph::new(1);
        let tables = tree_dp_run(&t, &mut |_, _, _: &Inbox<i64>| 0, &mut |_, m| m.len() as i64)
            .unwrap();
        assert_eq!(tables.edge_calls, 0);
        assert_eq!(tables.node_calls, 1);
        assert_eq!(tables.node_values[&0], 0);
    }

    #[test]
    fn path_three_nodes() {
        let t = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let tables = degree_run(&t, &[0, 1, 2]);
        assert_eq!(tables.edge_values.len(), 4);
        assert_eq!(tables.node_values.len(), 3);
        // node value = count of inbound messages = degree
        assert_eq!(tables.node_values[&1], 2);
        assert_eq!(tables.node_values[&0], 1);
    }

    #[test]
    fn node_values_equal_degrees() {
        for seed in 0..20 {
            let t = random_tree(12, seed);
            let tables = degree_run(&t, &(0..12).collect::<Vec<_>>());
            for v in 0..12 {
                assert_eq!(tables.node_values[&v], t.degree(v));
            }
        }
    }

    #[test]
    fn call_counts_are_exact() {
        for &n in &[2usize, 3, 17, 1000] {
            let t = random_tree(n, n as u64);
            let tables = degree_run(&t, &(0..n).collect::<Vec<_>>());
            assert_eq!(tables.edge_calls, 2 * n - 2);
            assert_eq!(tables.node_calls, n);
        }
    }

    #[test]
    fn tables_invariant_under_leaf_order() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for seed in 0..20 {
            let n = 10;
            let t = random_tree(n, seed);
            // subtree-sum: an order-independent edge function
            let run = |order: &[usize]| {
                tree_dp_run_with_order(
                    &t,
                    order,
                    &mut |w, _, msgs: &Inbox<usize>| 1 + msgs.iter().map(|(_, &v)| v).sum::<usize>() + w * 0,
                    &mut |_, msgs: &Inbox<usize>| msgs.iter().map(|(_, &v)| v).sum(),
                )
                .unwrap()
            };
            let base = run(&(0..n).collect::<Vec<_>>());
            for _ in 0..5 {
                let mut order: Vec<usize> = (0..n).collect();
                order.shuffle(&mut rng);
                let other = run(&order);
                assert_eq!(base.edge_values, other.edge_values);
                assert_eq!(base.node_values, other.node_values);
            }
            // subtree sizes over an edge partition the tree
            for (&(v, w), &s) in &base.edge_values {
                assert_eq!(s + base.edge_values[&(w, v)], n);
            }
        }
    }

    #[test]
    fn non_tree_rejected() {
        let c3 = Graph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(matches!(
            tree_dp_run(&c3, &mut |_, _, _: &Inbox<usize>| 0, &mut |_, _| 0),
            Err(Error::NotATree)
        ));
    }
}
