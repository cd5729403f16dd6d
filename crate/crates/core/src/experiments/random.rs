use rand::Rng;

use crate::families::GammaSpec;
use crate::graph::Tree;

/// Uniform labeled tree on `n` vertices, decoded from a random Prüfer sequence.
pub fn random_tree<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Tree {
    assert!(n > 0, "trees have at least one vertex");
    if n <= 2 {
        let edges: Vec<(usize, usize)> = (1..n).map(|v| (0, v)).collect();
        return Tree::from_edge_list(n, &edges).expect("valid small tree");
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf always remains");
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Tree::from_edge_list(n, &edges).expect("Prüfer decoding yields a tree")
}

/// Random member of Γ(n, d) with `n <= max_order`: `d ≡ 2 (mod 3)`, extra
/// pendants distributed uniformly over the attachment points.
pub fn random_gamma_spec<R: Rng + ?Sized>(rng: &mut R, max_order: usize) -> GammaSpec {
    assert!(max_order >= 3, "the smallest member has three vertices");
    let max_k = (max_order - 1) / 3;
    let k = rng.gen_range(1..=max_k);
    let d = 3 * k - 1;
    let extra = rng.gen_range(0..=max_order - d - 1);
    let mut parts = vec![0; k];
    for _ in 0..extra {
        parts[rng.gen_range(0..k)] += 1;
    }
    GammaSpec::new(d, parts).expect("residue and part count hold by construction")
}
