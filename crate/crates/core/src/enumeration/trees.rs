//! Free trees via canonical level sequences (Wright, Richmond, Odlyzko and
//! McKay). Each tree is represented by the level sequence of a rooted tree,
//! rooted at a center; successive sequences are produced in constant
//! amortized time and every isomorphism class appears exactly once.

use crate::graph::Tree;

use super::EnumerationError;

/// Largest order accepted by [`free_trees`].
pub const MAX_TREE_ORDER: usize = 22;

/// Every free tree of one order, each isomorphism class once, in generation order.
#[derive(Clone, Debug)]
pub struct TreeStream {
    order: usize,
    layout: Option<Vec<usize>>,
    single: bool,
}

pub fn free_trees(n: usize) -> Result<TreeStream, EnumerationError> {
    free_trees_capped(n, MAX_TREE_ORDER)
}

pub fn free_trees_capped(n: usize, cap: usize) -> Result<TreeStream, EnumerationError> {
    if n == 0 {
        return Err(EnumerationError::EmptyOrder);
    }
    if n > cap {
        return Err(EnumerationError::CapExceeded { n, cap });
    }
    if n == 1 {
        return Ok(TreeStream { order: 1, layout: None, single: true });
    }
    // path rooted at its center
    let layout: Vec<usize> = (0..=n / 2).chain(1..n.div_ceil(2)).collect();
    Ok(TreeStream { order: n, layout: Some(layout), single: false })
}

impl TreeStream {
    pub fn order(&self) -> usize {
        self.order
    }

    /// Next level sequence, without building the tree.
    pub fn next_level_sequence(&mut self) -> Option<Vec<usize>> {
        if self.single {
            self.single = false;
            return Some(vec![0]);
        }
        let layout = self.layout.take()?;
        let valid = next_free_tree(layout)?;
        self.layout = next_rooted_tree(&valid, None);
        Some(valid)
    }

    /// Consecutive fixed-size batches; boundaries depend only on `size`.
    pub fn batches(mut self, size: usize) -> impl Iterator<Item = Vec<Tree>> {
        assert!(size > 0, "batch size must be positive");
        std::iter::from_fn(move || {
            let batch: Vec<Tree> = self.by_ref().take(size).collect();
            (!batch.is_empty()).then_some(batch)
        })
    }
}

impl Iterator for TreeStream {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        self.next_level_sequence().map(|l| level_sequence_to_tree(&l))
    }
}

/// Builds the tree whose preorder depths are `levels` (root at depth 0).
/// Vertex `i` is the `i`-th vertex in preorder.
pub fn level_sequence_to_tree(levels: &[usize]) -> Tree {
    let mut parents = Vec::with_capacity(levels.len().saturating_sub(1));
    let mut stack: Vec<usize> = Vec::new();
    for (i, &level) in levels.iter().enumerate() {
        while let Some(&top) = stack.last() {
            if levels[top] >= level {
                stack.pop();
            } else {
                break;
            }
        }
        if let Some(&top) = stack.last() {
            parents.push(top);
        }
        stack.push(i);
    }
    Tree::from_parents_unchecked(&parents)
}

/// Successor of a rooted level sequence; `p` overrides the position that is
/// decremented (default: the last entry above level 1).
fn next_rooted_tree(pred: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = pred.len() - 1;
            while pred[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while pred[q] + 1 != pred[p] {
        q -= 1;
    }
    let mut next = pred.to_vec();
    for i in p..next.len() {
        next[i] = next[i - p + q];
    }
    Some(next)
}

/// Splits at the second vertex on level 1: the first subtree of the root
/// (levels shifted down by one) and the rest of the tree.
fn split_tree(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = layout.iter().enumerate().filter(|&(_, &l)| l == 1).nth(1).map_or(layout.len(), |(i, _)| i);
    let left = layout[1..m].iter().map(|&l| l - 1).collect();
    let rest = std::iter::once(0).chain(layout[m..].iter().copied()).collect();
    (left, rest)
}

/// Returns `candidate` when it is the canonical center-rooted sequence of its
/// free tree, otherwise jumps to the next sequence that is.
fn next_free_tree(candidate: Vec<usize>) -> Option<Vec<usize>> {
    let (left, rest) = split_tree(&candidate);
    let left_height = left.iter().copied().max().unwrap_or(0);
    let rest_height = rest.iter().copied().max().unwrap_or(0);
    let valid = rest_height > left_height
        || (rest_height == left_height && (left.len() < rest.len() || (left.len() == rest.len() && left <= rest)));
    if valid {
        return Some(candidate);
    }
    let p = left.len();
    let mut next = next_rooted_tree(&candidate, Some(p))?;
    if candidate[p] > 2 {
        let (new_left, _) = split_tree(&next);
        let new_left_height = new_left.iter().copied().max().unwrap_or(0);
        let len = next.len();
        let suffix_len = new_left_height + 1;
        for (k, slot) in next[len - suffix_len..].iter_mut().enumerate() {
            *slot = k + 1;
        }
    }
    Some(next)
}
