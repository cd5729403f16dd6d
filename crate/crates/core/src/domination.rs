//! Exact domination numbers: a linear dynamic program on trees and a
//! cardinality-ordered subset search for small general graphs.

use thiserror::Error;

use crate::graph::{Graph, Tree};

/// Default order limit for [`domination_number_exact`].
pub const EXACT_DOMINATION_CAP: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DominationError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("subset search limited to {cap} vertices, got {n}")]
    CapExceeded { n: usize, cap: usize },
}

/// A minimum dominating set and its size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominationResult {
    pub gamma: usize,
    /// Sorted; lexicographically smallest among minimum dominating sets.
    pub witness: Vec<usize>,
}

/// True iff every vertex is in `set` or adjacent to it.
pub fn is_dominating(graph: &Graph, set: &[usize]) -> Result<bool, DominationError> {
    let n = graph.order();
    let mut covered = vec![false; n];
    for &v in set {
        if v >= n {
            return Err(DominationError::VertexOutOfRange { vertex: v, n });
        }
        covered[v] = true;
        for &w in graph.neighbors(v) {
            covered[w] = true;
        }
    }
    Ok(covered.into_iter().all(|c| c))
}

const INF: u32 = u32::MAX / 4;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Choice {
    Free,
    In,
    Out,
}

/// Minimum dominating-set size of a tree rooted at vertex 0, with some
/// vertices forced into or out of the set. Returns `INF` when infeasible.
///
/// Per vertex the DP tracks three costs for its subtree: `v` in the set,
/// `v` outside but dominated by a child, `v` outside and still undominated
/// (its parent must then be in the set).
fn tree_dp(tree: &Tree, choice: &[Choice], order: &[usize], parent: &[usize]) -> u32 {
    let n = tree.order();
    let mut inside = vec![INF; n];
    let mut dominated = vec![INF; n];
    let mut undominated = vec![INF; n];
    for &v in order.iter().rev() {
        let mut cost_in = 1u32;
        let mut cost_dom = 0u32;
        let mut best_gap = INF;
        let mut cost_und = 0u32;
        for &c in tree.neighbors(v) {
            if c == parent[v] {
                continue;
            }
            cost_in = cost_in.saturating_add(inside[c].min(dominated[c]).min(undominated[c]));
            let cheapest = inside[c].min(dominated[c]);
            cost_dom = cost_dom.saturating_add(cheapest);
            best_gap = best_gap.min(inside[c].saturating_sub(cheapest));
            cost_und = cost_und.saturating_add(dominated[c]);
        }
        cost_dom = cost_dom.saturating_add(best_gap);
        inside[v] = if choice[v] == Choice::Out { INF } else { cost_in.min(INF) };
        dominated[v] = if choice[v] == Choice::In { INF } else { cost_dom.min(INF) };
        undominated[v] = if choice[v] == Choice::In { INF } else { cost_und.min(INF) };
    }
    inside[0].min(dominated[0])
}

/// γ(T) without a witness.
pub fn tree_domination_number(tree: &Tree) -> usize {
    let (order, parent) = tree.bfs_order(0);
    tree_dp(tree, &vec![Choice::Free; tree.order()], &order, &parent) as usize
}

/// γ(T) with the lexicographically smallest minimum dominating set.
///
/// The witness is fixed vertex by vertex in increasing id order: each vertex is
/// forced into the set when a minimum dominating set extending the decisions so
/// far still exists, and forced out otherwise.
pub fn domination_number_tree(tree: &Tree) -> DominationResult {
    let n = tree.order();
    let (order, parent) = tree.bfs_order(0);
    let mut choice = vec![Choice::Free; n];
    let gamma = tree_dp(tree, &choice, &order, &parent);
    for v in 0..n {
        choice[v] = Choice::In;
        if tree_dp(tree, &choice, &order, &parent) != gamma {
            choice[v] = Choice::Out;
        }
    }
    let witness = (0..n).filter(|&v| choice[v] == Choice::In).collect();
    DominationResult { gamma: gamma as usize, witness }
}

/// γ(G) by subset search in increasing cardinality; the first dominating set
/// found is the lexicographically smallest minimum one.
pub fn domination_number_exact(graph: &Graph) -> Result<DominationResult, DominationError> {
    domination_number_exact_capped(graph, EXACT_DOMINATION_CAP)
}

pub fn domination_number_exact_capped(graph: &Graph, cap: usize) -> Result<DominationResult, DominationError> {
    let n = graph.order();
    if n > cap || n > 63 {
        return Err(DominationError::CapExceeded { n, cap });
    }
    let full: u64 = (1u64 << n) - 1;
    let closed: Vec<u64> = (0..n).map(|v| graph.neighbors(v).iter().fold(1u64 << v, |m, &w| m | 1u64 << w)).collect();
    for k in 1..=n {
        let mut combo: Vec<usize> = (0..k).collect();
        loop {
            let cover = combo.iter().fold(0u64, |m, &v| m | closed[v]);
            if cover == full {
                return Ok(DominationResult { gamma: k, witness: combo });
            }
            // next k-combination in lexicographic order
            let Some(i) = (0..k).rev().find(|&i| combo[i] < n - k + i) else {
                break;
            };
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
        }
    }
    unreachable!("the whole vertex set dominates")
}
