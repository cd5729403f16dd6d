//! Named tree families and the structural recognizer for the extremal family.
//!
//! A [`GammaSpec`] `(d; n_1, …, n_k)` with `d ≡ 2 (mod 3)` and `k = (d+1)/3`
//! describes the tree built from a path `v_1 … v_{d+1}` by hanging `n_i` leaves
//! on `v_{3i-1}`. These are exactly the trees with `(d+1)/3` Laplacian
//! eigenvalues below one.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::domination::tree_domination_number;
use crate::graph::Tree;
use crate::spectral::inertia_at;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("diameter {0} is not congruent to 2 mod 3")]
    DiameterResidue(usize),
    #[error("expected {expected} parts for diameter {d}, got {got}")]
    PartCount { d: usize, expected: usize, got: usize },
    #[error("double starlike tree needs d >= 2, p >= 1, q >= 1 (got d={d}, p={p}, q={q})")]
    DoubleStar { d: usize, p: usize, q: usize },
    #[error("order must be at least 1")]
    EmptyOrder,
}

/// `H_d(n_1, …, n_k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GammaSpec {
    d: usize,
    parts: Vec<usize>,
}

impl GammaSpec {
    pub fn new(d: usize, parts: Vec<usize>) -> Result<Self, FamilyError> {
        if d % 3 != 2 {
            return Err(FamilyError::DiameterResidue(d));
        }
        let expected = (d + 1) / 3;
        if parts.len() != expected {
            return Err(FamilyError::PartCount { d, expected, got: parts.len() });
        }
        Ok(GammaSpec { d, parts })
    }

    pub fn diameter(&self) -> usize {
        self.d
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `d + 1 + Σ n_i`.
    pub fn order(&self) -> usize {
        self.d + 1 + self.parts.iter().sum::<usize>()
    }

    /// The lexicographically smaller of the parts and their reversal;
    /// both describe the same tree.
    pub fn normalized(&self) -> GammaSpec {
        let reversed: Vec<usize> = self.parts.iter().rev().copied().collect();
        GammaSpec { d: self.d, parts: reversed.min(self.parts.clone()) }
    }
}

impl fmt::Display for GammaSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "H_{}({})", self.d, parts.join(","))
    }
}

/// `T(d, p, q)`: a path on `d - 1` vertices with `p` leaves on one end and `q`
/// on the other.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DoubleStarSpec {
    d: usize,
    p: usize,
    q: usize,
}

impl DoubleStarSpec {
    pub fn new(d: usize, p: usize, q: usize) -> Result<Self, FamilyError> {
        if d < 2 || p < 1 || q < 1 {
            return Err(FamilyError::DoubleStar { d, p, q });
        }
        Ok(DoubleStarSpec { d, p, q })
    }

    pub fn diameter(&self) -> usize {
        self.d
    }

    pub fn order(&self) -> usize {
        self.d - 1 + self.p + self.q
    }
}

/// `P_n` on `0..n` in path order.
pub fn path(n: usize) -> Result<Tree, FamilyError> {
    if n == 0 {
        return Err(FamilyError::EmptyOrder);
    }
    Ok(Tree::from_parents_unchecked(&(0..n - 1).collect::<Vec<_>>()))
}

/// `K_{1,n-1}` with center 0.
pub fn star(n: usize) -> Result<Tree, FamilyError> {
    if n == 0 {
        return Err(FamilyError::EmptyOrder);
    }
    Ok(Tree::from_parents_unchecked(&vec![0; n - 1]))
}

/// Complete binary tree of height `h` (`2^{h+1} - 1` vertices) in heap order:
/// the children of `i` are `2i + 1` and `2i + 2`.
pub fn perfect_binary_tree(h: u32) -> Tree {
    let n = (1usize << (h + 1)) - 1;
    let parents: Vec<usize> = (1..n).map(|v| (v - 1) / 2).collect();
    Tree::from_parents_unchecked(&parents)
}

/// Path vertices get ids `0..=d`; leaves follow, grouped by attachment point.
pub fn gamma_tree(spec: &GammaSpec) -> Tree {
    let mut parents: Vec<usize> = (0..spec.d).collect();
    for (i, &count) in spec.parts.iter().enumerate() {
        // v_{3i-1} in 1-indexed path labels
        let anchor = 3 * i + 1;
        parents.extend(std::iter::repeat_n(anchor, count));
    }
    Tree::from_parents_unchecked(&parents)
}

/// All members of Γ(n, d), one per isomorphism class, in lexicographic order
/// of their normalized parts. Empty when `d ≢ 2 (mod 3)` or `n < d + 1`.
pub fn enumerate_gamma(n: usize, d: usize) -> Vec<GammaSpec> {
    if d % 3 != 2 || n < d + 1 {
        return Vec::new();
    }
    let k = (d + 1) / 3;
    let mut out = Vec::new();
    let mut parts = vec![0; k];
    compositions(n - d - 1, 0, &mut parts, &mut |p| {
        let reversed: Vec<usize> = p.iter().rev().copied().collect();
        if p <= reversed.as_slice() {
            out.push(GammaSpec { d, parts: p.to_vec() });
        }
    });
    out
}

/// Visits every composition of `total` into `parts.len() - index` nonnegative
/// parts, in lexicographic order.
fn compositions(total: usize, index: usize, parts: &mut [usize], visit: &mut impl FnMut(&[usize])) {
    if index + 1 == parts.len() {
        parts[index] = total;
        visit(parts);
        return;
    }
    for first in 0..=total {
        parts[index] = first;
        compositions(total - first, index + 1, parts, visit);
    }
}

/// Recovers the normalized [`GammaSpec`] of a tree in Γ(n, d), or `None`.
///
/// Uses a single diameter path; every vertex off the path must be a leaf hung
/// on a path vertex at 1-indexed position `≡ 2 (mod 3)`. Those positions are
/// symmetric under reversing the path because the path has `3k` vertices.
pub fn is_gamma_member(tree: &Tree) -> Option<GammaSpec> {
    let trace = tree.diameter_path();
    let d = trace.len() - 1;
    if d % 3 != 2 {
        return None;
    }
    let mut position = vec![usize::MAX; tree.order()];
    for (i, &v) in trace.vertices().iter().enumerate() {
        position[v] = i;
    }
    let mut parts = vec![0; (d + 1) / 3];
    for v in 0..tree.order() {
        if position[v] != usize::MAX {
            continue;
        }
        if tree.degree(v) != 1 {
            return None;
        }
        let p = position[tree.neighbors(v)[0]];
        if p == usize::MAX || p % 3 != 1 {
            return None;
        }
        parts[p / 3] += 1;
    }
    Some(GammaSpec { d, parts }.normalized())
}

/// `T(d, p, q)` with path vertices `0..d-1` first, then the `p` leaves on
/// vertex 0, then the `q` leaves on vertex `d - 2`.
pub fn double_starlike(spec: &DoubleStarSpec) -> Tree {
    let spine = spec.d - 1;
    let mut parents: Vec<usize> = (0..spine - 1).collect();
    parents.extend(std::iter::repeat_n(0, spec.p));
    parents.extend(std::iter::repeat_n(spine - 1, spec.q));
    Tree::from_parents_unchecked(&parents)
}

/// Measured quantities and the five properties shared by every tree in Γ(n, d).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub order: usize,
    pub diameter: usize,
    pub gamma: usize,
    pub pendant_count: usize,
    /// Distinct residues mod 3 of the pairwise pendant distances.
    pub pendant_distance_residues: Vec<usize>,
    pub one_multiplicity: usize,
    /// Diameter equals the expected `d`.
    pub p1: bool,
    /// `γ = (d+1)/3`.
    pub p2: bool,
    /// `n - d + 1` pendant vertices.
    pub p3: bool,
    /// Every pendant pair lies at distance `≡ 2 (mod 3)`.
    pub p4: bool,
    /// Eigenvalue 1 has multiplicity `n - d`.
    pub p5: bool,
}

impl PropertyReport {
    pub fn all_hold(&self) -> bool {
        self.p1 && self.p2 && self.p3 && self.p4 && self.p5
    }
}

/// Evaluates P1–P5 on `tree`. P1 compares against `spec` when given and
/// otherwise only asks for `d ≡ 2 (mod 3)`. The remaining properties use their
/// literal formulas, so P2 fails whenever `(d+1)/3` is not an integer.
pub fn check_properties(tree: &Tree, spec: Option<&GammaSpec>) -> PropertyReport {
    let n = tree.order();
    let diameter = tree.diameter();
    let gamma = tree_domination_number(tree);
    let pendants = tree.pendant_vertices();
    let mut residues = Vec::new();
    for (i, &u) in pendants.iter().enumerate() {
        let dist = tree.bfs_distances(u);
        for &w in &pendants[i + 1..] {
            let r = dist[w].expect("trees are connected") % 3;
            if !residues.contains(&r) {
                residues.push(r);
            }
        }
    }
    residues.sort_unstable();
    let one_multiplicity = inertia_at(tree, &crate::scalar::rational_one()).equal;

    PropertyReport {
        order: n,
        diameter,
        gamma,
        pendant_count: pendants.len(),
        p1: match spec {
            Some(s) => s.d == diameter,
            None => diameter % 3 == 2,
        },
        p2: 3 * gamma == diameter + 1,
        p3: pendants.len() + diameter == n + 1,
        p4: residues.iter().all(|&r| r == 2),
        p5: one_multiplicity + diameter == n,
        pendant_distance_residues: residues,
        one_multiplicity,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_families() {
        let p1 = path(1).unwrap();
        assert_eq!((p1.order(), p1.size()), (1, 0));
        assert_eq!(star(6).unwrap().pendant_vertices().len(), 5);
        assert_eq!(path(0), Err(FamilyError::EmptyOrder));
        for h in 0..6 {
            let t = perfect_binary_tree(h);
            assert_eq!(t.order(), (1 << (h + 1)) - 1);
            assert_eq!(t.diameter(), 2 * h as usize);
            let n = t.order() as f64;
            assert_eq!(t.diameter() as f64, 2.0 * ((n + 1.0).log2() - 1.0));
        }
    }

    #[test]
    fn gamma_spec_validation() {
        assert!(GammaSpec::new(8, vec![1, 1, 1]).is_ok());
        assert_eq!(GammaSpec::new(7, vec![1, 1]), Err(FamilyError::DiameterResidue(7)));
        assert!(matches!(GammaSpec::new(8, vec![1, 1]), Err(FamilyError::PartCount { .. })));
        assert_eq!(GammaSpec::new(8, vec![3, 0, 1]).unwrap().normalized().parts(), &[1, 0, 3]);
    }

    #[test]
    fn gamma_tree_shapes() {
        let bare = gamma_tree(&GammaSpec::new(8, vec![0, 0, 0]).unwrap());
        assert_eq!(bare, path(9).unwrap());
        let s = gamma_tree(&GammaSpec::new(2, vec![4]).unwrap());
        assert_eq!(s.order(), 7);
        assert_eq!(s.degree(1), 6);
        let t = gamma_tree(&GammaSpec::new(8, vec![1, 1, 1]).unwrap());
        assert_eq!(t.order(), 12);
        assert_eq!(t.pendant_vertices().len(), 5);
        assert_eq!(t.diameter(), 8);
        assert_eq!(t.neighbors(10), &[4]);
    }

    #[test]
    fn gamma_enumeration() {
        let specs = enumerate_gamma(12, 8);
        assert_eq!(specs.len(), 6);
        let parts: Vec<_> = specs.iter().map(|s| s.parts().to_vec()).collect();
        assert_eq!(
            parts,
            vec![vec![0, 0, 3], vec![0, 1, 2], vec![0, 2, 1], vec![0, 3, 0], vec![1, 0, 2], vec![1, 1, 1]]
        );
        assert_eq!(enumerate_gamma(9, 8).len(), 1);
        assert_eq!(enumerate_gamma(6, 5), vec![GammaSpec::new(5, vec![0, 0]).unwrap()]);
        assert!(enumerate_gamma(10, 7).is_empty());
        assert!(enumerate_gamma(5, 8).is_empty());
    }

    #[test]
    fn recognizer_examples() {
        let p9 = path(9).unwrap();
        assert_eq!(is_gamma_member(&p9), Some(GammaSpec::new(8, vec![0, 0, 0]).unwrap()));
        assert_eq!(is_gamma_member(&star(9).unwrap()), Some(GammaSpec::new(2, vec![6]).unwrap()));
        // leaf on the third path vertex
        let bad = Tree::from_edge_list(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (2, 6)]).unwrap();
        assert_eq!(is_gamma_member(&bad), None);
        assert_eq!(is_gamma_member(&path(8).unwrap()), None);
        assert_eq!(is_gamma_member(&path(1).unwrap()), None);
        // two-edge branch hanging off v_5 of a diameter-8 path
        let mut edges: Vec<_> = (1..9).map(|i| (i - 1, i)).collect();
        edges.extend([(4, 9), (9, 10)]);
        let deep = Tree::from_edge_list(11, &edges).unwrap();
        assert_eq!(deep.diameter(), 8);
        assert_eq!(is_gamma_member(&deep), None);
    }

    #[test]
    fn recognizer_round_trip() {
        for n in 3..=20 {
            for d in (2..n).filter(|d| d % 3 == 2) {
                for spec in enumerate_gamma(n, d) {
                    assert_eq!(is_gamma_member(&gamma_tree(&spec)), Some(spec.normalized()));
                    let reversed = GammaSpec::new(d, spec.parts().iter().rev().copied().collect()).unwrap();
                    assert_eq!(is_gamma_member(&gamma_tree(&reversed)), Some(spec.normalized()));
                }
            }
        }
    }

    #[test]
    fn double_starlike_shapes() {
        let s = double_starlike(&DoubleStarSpec::new(2, 2, 3).unwrap());
        assert_eq!(s.order(), 6);
        assert_eq!(s.degree(0), 5);
        let t = double_starlike(&DoubleStarSpec::new(7, 3, 4).unwrap());
        assert_eq!(t.diameter(), 7);
        assert_eq!(t.order(), 13);
        assert_eq!(double_starlike(&DoubleStarSpec::new(5, 2, 2).unwrap()).order(), 8);
        assert!(DoubleStarSpec::new(1, 1, 1).is_err());
        assert!(DoubleStarSpec::new(4, 0, 1).is_err());
        let three = double_starlike(&DoubleStarSpec::new(3, 1, 1).unwrap());
        assert_eq!(three.diameter(), 3);
        assert!((0..4).all(|v| three.degree(v) <= 2));
    }

    #[test]
    fn properties_on_gamma_12_8() {
        for spec in enumerate_gamma(12, 8) {
            let t = gamma_tree(&spec);
            let r = check_properties(&t, Some(&spec));
            assert!(r.all_hold(), "{spec}: {r:?}");
            assert_eq!(r.gamma, 3);
            assert_eq!(r.one_multiplicity, 4);
            assert_eq!(r.pendant_count, 5);
        }
    }

    #[test]
    fn properties_on_non_member() {
        let r = check_properties(&path(5).unwrap(), None);
        assert_eq!(r.diameter, 4);
        assert_eq!(r.gamma, 2);
        assert!(!r.p1 && !r.p2);
        assert_eq!(r.pendant_distance_residues, vec![1]);
        assert!(!r.all_hold());
    }
}
