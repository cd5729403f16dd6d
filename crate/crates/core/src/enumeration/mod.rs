//! Isomorphism-free generation of free trees and small connected graphs.

mod canon;
mod graphs;
mod trees;

use thiserror::Error;

pub use canon::{canonical_code, CanonicalCode, MAX_CANONICAL_ORDER};
pub use graphs::{connected_graphs, MAX_GRAPH_ORDER};
pub use trees::{free_trees, free_trees_capped, level_sequence_to_tree, TreeStream, MAX_TREE_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("order must be at least 1")]
    EmptyOrder,
    #[error("order {n} exceeds the supported cap {cap}")]
    CapExceeded { n: usize, cap: usize },
}
