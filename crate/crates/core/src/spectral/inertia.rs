use crate::graph::Graph;
use crate::scalar::Field;

use super::{InertiaTriple, SymMatrix};

fn classify<T: Field>(values: impl IntoIterator<Item = T>) -> InertiaTriple {
    let mut t = InertiaTriple::default();
    for v in values {
        if v.is_negative() {
            t.below += 1;
        } else if v.is_zero() {
            t.equal += 1;
        } else {
            t.above += 1;
        }
    }
    t
}

/// Inertia of `L(F) - αI` for a forest `F` in linear time.
///
/// Each component is rooted at its smallest vertex (vertex 0 for a tree) and
/// processed in reverse BFS order. A vertex starts at `deg(v) - α`; once its
/// children are final it subtracts `1/a(c)` for every attached child, unless
/// some attached child is zero, in which case that child becomes `2`, the
/// vertex becomes `-1/2`, and the vertex is cut from its own parent.
///
/// # Panics
/// If `graph` contains a cycle.
pub fn forest_inertia<T: Field>(graph: &Graph, alpha: &T) -> InertiaTriple {
    assert!(graph.is_forest(), "forest_inertia requires an acyclic graph");
    let n = graph.order();
    let mut value: Vec<T> = (0..n).map(|v| T::from_int(graph.degree(v) as i64) - alpha.clone()).collect();
    let mut detached = vec![false; n];
    let mut visited = vec![false; n];
    let two = T::from_int(2);
    let neg_half = -(T::one() / two.clone());

    for root in 0..n {
        if visited[root] {
            continue;
        }
        let (order, parent) = graph.bfs_order(root);
        for &v in &order {
            visited[v] = true;
        }
        for &v in order.iter().rev() {
            let children = graph.neighbors(v).iter().copied().filter(|&c| c != parent[v] && !detached[c]);
            let mut zero_child = None;
            let mut sum = T::zero();
            for c in children {
                if value[c].is_zero() {
                    zero_child.get_or_insert(c);
                } else if zero_child.is_none() {
                    sum = sum + T::one() / value[c].clone();
                }
            }
            match zero_child {
                Some(c) => {
                    value[c] = two.clone();
                    value[v] = neg_half.clone();
                    detached[v] = true;
                }
                None => value[v] = value[v].clone() - sum,
            }
        }
    }
    classify(value)
}

/// Inertia of a symmetric matrix by symmetric Gaussian congruence.
///
/// A zero pivot is repaired from its row: a later index with nonzero diagonal
/// is swapped in, otherwise a row/column with nonzero coupling is added onto
/// the pivot, giving pivot `2·a_kj`. A pivot whose row is entirely zero is a
/// zero eigenvalue of the remaining block and is counted as such.
pub fn dense_inertia<T: Field>(matrix: SymMatrix<T>) -> InertiaTriple {
    let n = matrix.order();
    let mut a = matrix.into_rows();
    let mut pivots = Vec::with_capacity(n);

    for k in 0..n {
        if a[k][k].is_zero() {
            let coupled = (k + 1..n).filter(|&j| !a[k][j].is_zero());
            let mut add_from = None;
            let mut swap_with = None;
            for j in coupled {
                if !a[j][j].is_zero() {
                    swap_with = Some(j);
                    break;
                }
                add_from.get_or_insert(j);
            }
            if let Some(j) = swap_with {
                a.swap(k, j);
                for row in a.iter_mut() {
                    row.swap(k, j);
                }
            } else if let Some(j) = add_from {
                for c in 0..n {
                    let x = a[j][c].clone();
                    a[k][c] = a[k][c].clone() + x;
                }
                for r in 0..n {
                    let x = a[r][j].clone();
                    a[r][k] = a[r][k].clone() + x;
                }
            }
        }
        let pivot = a[k][k].clone();
        if !pivot.is_zero() {
            for i in k + 1..n {
                if a[i][k].is_zero() {
                    continue;
                }
                let factor = a[i][k].clone() / pivot.clone();
                for c in k..n {
                    let x = factor.clone() * a[k][c].clone();
                    a[i][c] = a[i][c].clone() - x;
                }
            }
            for row in a.iter_mut().skip(k + 1) {
                row[k] = T::zero();
            }
            for c in k + 1..n {
                a[k][c] = T::zero();
            }
        }
        pivots.push(pivot);
    }
    classify(pivots)
}
