//! Shared instance builders for the solver benchmarks.

use mrank_core::graph::{random_connected, random_split, random_tree};
use mrank_core::Graph;

pub fn medium_sparse(n: usize) -> Graph {
    random_connected(n, 0.08, 42)
}

pub fn medium_dense(n: usize) -> Graph {
    random_connected(n, 0.4, 42)
}

pub fn big_tree(n: usize) -> Graph {
    random_tree(n, 42)
}

pub fn split_instance(n: usize) -> Graph {
    random_split(n, 42)
}
