use std::collections::BTreeMap;

use crate::graph::Graph;

use super::canon::{canonical_form, CanonicalCode};
use super::EnumerationError;

/// Largest order accepted by [`connected_graphs`].
pub const MAX_GRAPH_ORDER: usize = 7;

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, canonically labelled and sorted by canonical code.
///
/// Every connected graph has a vertex whose removal leaves it connected (a
/// leaf of a spanning tree), so all classes on `n` vertices arise by joining a
/// new vertex to a nonempty subset of a connected graph on `n - 1` vertices.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>, EnumerationError> {
    if n == 0 {
        return Err(EnumerationError::EmptyOrder);
    }
    if n > MAX_GRAPH_ORDER {
        return Err(EnumerationError::CapExceeded { n, cap: MAX_GRAPH_ORDER });
    }
    let mut level = vec![Graph::empty(1).expect("one vertex")];
    for order in 2..=n {
        let mut next: BTreeMap<CanonicalCode, Graph> = BTreeMap::new();
        for base in &level {
            for mask in 1u32..(1 << (order - 1)) {
                let mut edges = base.edges().to_vec();
                edges.extend((0..order - 1).filter(|&v| mask >> v & 1 == 1).map(|v| (v, order - 1)));
                let g = Graph::from_edge_list(order, &edges).expect("new vertex adds fresh edges");
                let (code, labeling) = canonical_form(&g);
                next.entry(code).or_insert_with(|| g.relabel(&labeling).expect("labeling is a permutation"));
            }
        }
        level = next.into_values().collect();
    }
    Ok(level)
}
