use std::collections::BTreeMap;
use std::fmt;

use crate::graph::Graph;

use super::EnumerationError;

/// Largest order accepted by [`canonical_code`].
pub const MAX_CANONICAL_ORDER: usize = 10;

/// Isomorphism-invariant byte string: the order, then the upper triangle of
/// the adjacency matrix under the canonical labeling, packed MSB first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode(")?;
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        write!(f, ")")
    }
}

pub fn canonical_code(graph: &Graph) -> Result<CanonicalCode, EnumerationError> {
    let n = graph.order();
    if n > MAX_CANONICAL_ORDER {
        return Err(EnumerationError::CapExceeded { n, cap: MAX_CANONICAL_ORDER });
    }
    Ok(canonical_form(graph).0)
}

/// Canonical code together with a canonical labeling (`labeling[v]` is the new
/// id of vertex `v`).
///
/// Vertices are colored by iterated neighborhood refinement; while a color
/// class has more than one vertex, each of its members is individualized in
/// turn and the search recurses. Members that are twins of an already tried
/// vertex are skipped, since swapping twins is an automorphism. The smallest
/// code over all discrete colorings reached is canonical.
pub(crate) fn canonical_form(graph: &Graph) -> (CanonicalCode, Vec<usize>) {
    let colors = refine(graph, vec![0; graph.order()]);
    let mut best = None;
    search(graph, colors, &mut best);
    best.expect("search reaches at least one discrete coloring")
}

/// Equitable refinement: recolor each vertex by its color and the multiset of
/// its neighbors' colors until the number of classes stops growing. Colors
/// are ranks of sorted signatures, so the result only depends on the input up
/// to isomorphism.
fn refine(graph: &Graph, mut colors: Vec<usize>) -> Vec<usize> {
    let mut classes = count_classes(&colors);
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..graph.order())
            .map(|v| {
                let mut around: Vec<usize> = graph.neighbors(v).iter().map(|&w| colors[w]).collect();
                around.sort_unstable();
                (colors[v], around)
            })
            .collect();
        colors = rank(&signatures);
        let next = count_classes(&colors);
        if next == classes {
            return colors;
        }
        classes = next;
    }
}

fn rank<K: Ord + Clone>(keys: &[K]) -> Vec<usize> {
    let mut distinct: BTreeMap<K, usize> = keys.iter().map(|k| (k.clone(), 0)).collect();
    for (i, slot) in distinct.values_mut().enumerate() {
        *slot = i;
    }
    keys.iter().map(|k| distinct[k]).collect()
}

fn count_classes(colors: &[usize]) -> usize {
    colors.iter().copied().max().map_or(0, |m| m + 1)
}

fn twins(graph: &Graph, u: usize, v: usize) -> bool {
    let a = graph.neighbors(u).iter().filter(|&&w| w != v);
    let b = graph.neighbors(v).iter().filter(|&&w| w != u);
    a.eq(b)
}

fn search(graph: &Graph, colors: Vec<usize>, best: &mut Option<(CanonicalCode, Vec<usize>)>) {
    let n = graph.order();
    let classes = count_classes(&colors);
    if classes == n {
        let code = encode(graph, &colors);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            *best = Some((code, colors));
        }
        return;
    }
    let mut sizes = vec![0usize; classes];
    for &c in &colors {
        sizes[c] += 1;
    }
    let target = sizes.iter().position(|&s| s > 1).expect("non-discrete coloring");
    let cell: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cell {
        if tried.iter().any(|&t| twins(graph, t, v)) {
            continue;
        }
        tried.push(v);
        let keys: Vec<(usize, bool)> = (0..n).map(|u| (colors[u], u != v)).collect();
        search(graph, refine(graph, rank(&keys)), best);
    }
}

fn encode(graph: &Graph, labeling: &[usize]) -> CanonicalCode {
    let n = graph.order();
    let mut inverse = vec![0; n];
    for (v, &l) in labeling.iter().enumerate() {
        inverse[l] = v;
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut out = vec![0u8; 1 + bits.div_ceil(8)];
    out[0] = n as u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if graph.has_edge(inverse[i], inverse[j]) {
                out[1 + k / 8] |= 0x80 >> (k % 8);
            }
            k += 1;
        }
    }
    CanonicalCode(out)
}
