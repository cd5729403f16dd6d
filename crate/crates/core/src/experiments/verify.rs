use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::domination::{domination_number_exact, domination_number_tree, is_dominating, tree_domination_number};
use crate::enumeration::{connected_graphs, free_trees};
use crate::families::{check_properties, double_starlike, gamma_tree, path, DoubleStarSpec};
use crate::graph::Tree;
use crate::scalar::{ceil_div, rational_from_int};
use crate::spectral::{
    det_m, det_m_closed_form, eigenvalues_dense, exact_determinant, forest_inertia, inertia_at, m_matrix,
};
use crate::{Error, Rational};

use super::reference::{census_reference, match_unordered, unmatched, SIX_VERTEX_COUNTEREXAMPLE_SPECTRA};
use super::{census, counterexamples, random_gamma_spec, random_tree, table1_check, TreeAudit};

/// Sizes and seed for [`verify`].
#[derive(Clone, Debug)]
pub struct VerifyConfig {
    /// Exhaustive theorem checks on all trees up to this order.
    pub tree_max: usize,
    /// Oracle comparisons on all trees up to this order.
    pub oracle_max: usize,
    /// Bound checks on all connected graphs up to this order.
    pub graph_max: usize,
    pub path_max: usize,
    pub gamma_samples: usize,
    pub gamma_max_order: usize,
    pub random_instances: usize,
    pub det_max: usize,
    pub det_exact_max: usize,
    pub seed: u64,
    pub workers: Option<usize>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            tree_max: 14,
            oracle_max: 12,
            graph_max: 6,
            path_max: 300,
            gamma_samples: 50,
            gamma_max_order: 40,
            random_instances: 200,
            det_max: 1000,
            det_exact_max: 40,
            seed: 0x5eed,
            workers: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn new(name: &str, failures: usize, detail: String) -> Self {
        CheckOutcome { name: name.to_string(), passed: failures == 0, detail }
    }
}

type Check = fn(&VerifyConfig) -> Result<CheckOutcome, Error>;

/// Runs every check; a check that errors is reported as failed.
pub fn verify(config: &VerifyConfig) -> Vec<CheckOutcome> {
    let checks: Vec<(&str, Check)> = vec![
        ("census", check_census),
        ("table1", check_table1),
        ("counterexamples", check_counterexamples),
        ("tree-theorems", check_tree_theorems),
        ("path-formula", check_paths),
        ("double-starlike", check_double_starlike),
        ("gamma-properties", check_gamma_properties),
        ("detm", check_detm),
        ("domination-oracle", check_domination_oracle),
        ("graph-bounds", check_graph_bounds),
        ("dp-witness", check_dp_witness),
        ("dense-agreement", check_dense_agreement),
        ("interlacing", check_interlacing),
        ("pendant-monotonicity", check_pendant_monotonicity),
    ];
    checks
        .into_iter()
        .map(|(name, f)| f(config).unwrap_or_else(|e| CheckOutcome::new(name, 1, format!("error: {e}"))))
        .collect()
}

fn check_census(c: &VerifyConfig) -> Result<CheckOutcome, Error> {
    let hi = c.tree_max.min(20);
    let rows = census(5..=hi, c.workers, |_| Ok(()))?;
    let mut bad = Vec::new();
    for row in &rows {
        let (total, extremal, ratio) = census_reference(row.n).expect("tabulated");
        if row.trees_total != total || row.trees_extremal != extremal || (row.ratio - ratio).abs() > 1e-9 {
            bad.push(row.n);
        }
    }
    Ok(CheckOutcome::new("census", bad.len(), format!("orders 5..={hi}, mismatched orders {bad:?}")))
}

fn check_table1(_: &VerifyConfig) -> Result<CheckOutcome, Error> {
    let check = table1_check(1e-3)?;
    let detail = format!(
        "{} spectra, matched={}, counts at one hold={}",
        check.rows.len(),
        check.assignment.is_some(),
        check.counts_hold
    );
    Ok(CheckOutcome::new("table1", usize::from(!check.passed()), detail))
}

fn check_counterexamples(c: &VerifyConfig) -> Result<CheckOutcome, Error> {
    let small: usize = (1..=5).map(|n| counterexamples(n, c.workers).map(|v| v.len())).sum::<Result<_, _>>()?;
    let six = counterexamples(6, c.workers)?;
    let shape_ok = six.iter().all(|r| r.diameter == 3 && r.m_below_1 == 1);
    let spectra: Vec<Vec<f64>> = six.iter().map(|r| r.spectrum.clone()).collect();
    let tol = 1e-3 + 1e-9;
    let matched = match_unordered(&spectra, &SIX_VERTEX_COUNTEREXAMPLE_SPECTRA, tol).is_some();
    let orphans: Vec<String> = unmatched(&spectra, &SIX_VERTEX_COUNTEREXAMPLE_SPECTRA, tol)
        .into_iter()
        .map(|i| format!("{} {:?}", six[i].graph6, six[i].spectrum))
        .collect();
    let failures = small + usize::from(six.len() != 9) + usize::from(!shape_ok) + usize::from(!matched);
    let detail = format!(
        "n<=5: {small}, n=6: {} (d=3, m=1: {shape_ok}; spectra matched: {matched}; without a reference row: {orphans:?})",
        six.len()
    );
    Ok(CheckOutcome::new("counterexamples", failures, detail))
}

fn check_tree_theorems(c: &VerifyConfig) -> Result<CheckOutcome, Error> {
    let mut counts = [0usize; 6];
    let mut trees = 0;
    for n in 1..=c.tree_max {
        for tree in free_trees(n)? {
            let a = TreeAudit::of(&tree);
            trees += 1;
            let flags = [
                a.violates_domination_bound(),
                a.violates_diameter_bound(),
                a.violates_domination_diameter(),
                a.violates_equality_transfer(),
                a.violates_characterization(),
                a.violates_upper_band(),
            ];
            for (k, f) in flags.into_iter().enumerate() {
                counts[k] += usize::from(f);
            }
        }
    }
    let detail = format!(
        "{trees} trees; violations: m<=gamma {}, m>=ceil((d+1)/3) {}, gamma>=(d+1)/3 {}, equality transfer {}, membership {}, m[0,2)<=n-gamma {}",
        counts[0], counts[1], counts[2], counts[3], counts[4], counts[5]
    );
    Ok(CheckOutcome::new("tree-theorems", counts.iter().sum(), detail))
}

fn check_paths(c: &VerifyConfig) -> Result<CheckOutcome, Error> {
    let one = rational_from_int(1);
    let mut bad = Vec::new();
    for n in 1..=c.path_max {
        let i = forest_inertia(path(n)?.as_graph(), &one);
        if i.below != ceil_div(n, 3) || (i.equal == 1) != (n % 3 == 0) || i.equal > 1 {
            bad.push(n);
        }
    }
    Ok(CheckOutcome::new("path-formula", bad.len(), format!("n=1..={}, failing {bad:?}", c.path_max)))
}

fn check_double_starlike(_: &VerifyConfig) -> Result<CheckOutcome, Error> {
    let one = rational_from_int(1);
    let mut bad = Vec::new();
    let mut total = 0;
    for d in 2..=20 {
        for p in 1..=6 {
            for q in 1..=6 {
                let tree = double_starlike(&DoubleStarSpec::new(d, p, q)?);
                total += 1;
                if forest_inertia(&tree, &one).below != ceil_div(d + 1, 3) {
                    bad.push((d, p, q));
                }
            }
        }
    }
    Ok(CheckOutcome::new("double-starlike", bad.len(), format!("{total} trees, failing {bad:?}")))
}

fn check_gamma_properties(c: &VerifyConfig) -> Result<CheckOutcome, Error> {
    let mut rng = StdRng::seed_from_u64(c.seed);
    let mut bad = Vec::new();
    for _ in 0..c.gamma_samples {
        let spec = random_gamma_spec(&mut rng, c.gamma_max_order);
        if !check_properties(&gamma_tree(&spec), Some(&spec)).all_hold() {
            bad.push(spec.to_string());
        }
    }
    Ok(CheckOutcome::new("gamma-properties", bad.len(), format!("{} specs, failing {bad:?}", c.gamma_samples)))
}

fn check_detm(c: &VerifyConfig) -> Result<CheckOutcome, Error> {
    let closed = (1..=c.det_max).filter(|&n| det_m(n) != det_m_closed_form(n)).count();
    let exact = (1..=c.det_exact_max)
        .filter(|&n| exact_determinant(m_matrix::<Rational>(n)) != rational_from_int(det_m(n)))
        .count();
    let detail = format!("closed form n<={}: {closed} mismatches; exact n<={}: {exact}", c.det_max, c.det_exact_max);
    Ok(CheckOutcome::new("detm", closed + exact, detail))
}

fn check_domination_oracle(c: &VerifyConfig) -> Result<CheckOutcome, Error> {
    let mut bad = 0;
    let mut trees = 0;
    for n in 1..=c.oracle_max {
        for tree in free_trees(n)? {
            trees += 1;
            bad += usize::from(tree_domination_number(&tree) != domination_number_exact(&tree)?.gamma);
        }
    }
    Ok(CheckOutcome::new("domination-oracle", bad, format!("{trees} trees, {bad} disagreements")))
}

fn check_graph_bounds(c: &VerifyConfig) -> Result<CheckOutcome, Error> {
    let (one, two) = (rational_from_int(1), rational_from_int(2));
    let (mut upper, mut band, mut graphs) = (0, 0, 0);
    for n in 2..=c.graph_max {
        for graph in connected_graphs(n)? {
            graphs += 1;
            let gamma = domination_number_exact(&graph)?.gamma;
            upper += usize::from(inertia_at(&graph, &one).below > gamma);
            band += usize::from(inertia_at(&graph, &two).below + gamma > n);
        }
    }
    let detail = format!(
        "{graphs} connected graphs n<={}; violations: m[0,1)<=gamma {upper}, m[0,2)<=n-gamma {band}",
        c.graph_max
    );
    Ok(CheckOutcome::new("graph-bounds", upper + band, detail))
}

fn check_dp_witness(c: &VerifyConfig) -> Result<CheckOutcome, Error> {
    let mut bad = 0;
    for n in 1..=c.oracle_max {
        for tree in free_trees(n)? {
            let r = domination_number_tree(&tree);
            bad += usize::from(r.witness.len() != r.gamma || !is_dominating(&tree, &r.witness)?);
        }
    }
    Ok(CheckOutcome::new("dp-witness", bad, format!("trees n<={}, {bad} invalid witnesses", c.oracle_max)))
}

const GUARD: f64 = 1e-6;

fn check_dense_agreement(c: &VerifyConfig) -> Result<CheckOutcome, Error> {
    let alphas = [(1, 2), (1, 1), (3, 2), (2, 1), (3, 1)];
    let (mut bad, mut guarded, mut cases) = (0, 0, 0);
    for n in 1..=c.oracle_max {
        for tree in free_trees(n)? {
            let spectrum = eigenvalues_dense(&tree, 1e-10)?;
            for &(p, q) in &alphas {
                cases += 1;
                let alpha = Rational::new(BigInt::from(p), BigInt::from(q));
                let exact = inertia_at(&tree, &alpha);
                let a = p as f64 / q as f64;
                let lo = spectrum.values().iter().filter(|&&x| x < a - GUARD).count();
                let hi = spectrum.values().iter().filter(|&&x| x <= a + GUARD).count();
                if lo == hi {
                    bad += usize::from(exact.below != lo || exact.equal != 0);
                } else {
                    guarded += 1;
                    bad += usize::from(exact.below < lo || exact.below + exact.equal > hi);
                }
            }
        }
    }
    let detail = format!("{cases} cases, {guarded} near-threshold (exact count authoritative), {bad} disagreements");
    Ok(CheckOutcome::new("dense-agreement", bad, detail))
}

fn non_edge<R: Rng>(rng: &mut R, tree: &Tree) -> (usize, usize) {
    let n = tree.order();
    loop {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v && !tree.has_edge(u, v) {
            return (u, v);
        }
    }
}

fn check_interlacing(c: &VerifyConfig) -> Result<CheckOutcome, Error> {
    let mut rng = StdRng::seed_from_u64(c.seed ^ 0x1);
    let tol = 1e-8;
    let mut bad = 0;
    for _ in 0..c.random_instances {
        let n = rng.gen_range(3..=30);
        let tree = random_tree(&mut rng, n);
        let (u, v) = non_edge(&mut rng, &tree);
        let before = eigenvalues_dense(&tree, 1e-10)?;
        let after = eigenvalues_dense(&tree.with_edge(u, v)?, 1e-10)?;
        let ordered = before.values().iter().zip(after.values()).all(|(b, a)| *a >= b - tol);
        let zero = after.values()[0].abs() <= tol;
        bad += usize::from(!(ordered && zero));
    }
    Ok(CheckOutcome::new("interlacing", bad, format!("{} instances, {bad} failing", c.random_instances)))
}

fn check_pendant_monotonicity(c: &VerifyConfig) -> Result<CheckOutcome, Error> {
    let one = rational_from_int(1);
    let holds = |tree: &Tree| -> Result<bool, Error> {
        let m = forest_inertia(tree, &one).below;
        for v in tree.pendant_vertices() {
            if tree.order() > 1 && forest_inertia(&tree.remove_vertex(v)?, &one).below > m {
                return Ok(false);
            }
        }
        Ok(true)
    };
    let mut exhaustive_bad = 0;
    for n in 2..=c.oracle_max {
        for tree in free_trees(n)? {
            exhaustive_bad += usize::from(!holds(&tree)?);
        }
    }
    let mut rng = StdRng::seed_from_u64(c.seed ^ 0x2);
    let mut random_bad = 0;
    for _ in 0..c.random_instances {
        let n = rng.gen_range(2..=40);
        random_bad += usize::from(!holds(&random_tree(&mut rng, n))?);
    }
    let detail = format!(
        "all trees n<={}: {exhaustive_bad} failing; {} random trees: {random_bad} failing",
        c.oracle_max, c.random_instances
    );
    Ok(CheckOutcome::new("pendant-monotonicity", exhaustive_bad + random_bad, detail))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_suite_passes() {
        let config = VerifyConfig {
            tree_max: 9,
            oracle_max: 8,
            graph_max: 5,
            path_max: 60,
            gamma_samples: 10,
            gamma_max_order: 20,
            random_instances: 20,
            det_max: 100,
            det_exact_max: 12,
            ..VerifyConfig::default()
        };
        for outcome in verify(&config) {
            if outcome.name == "census" {
                // the published row for n = 5 lists 2 extremal trees, the true count is 3
                assert!(outcome.detail.ends_with("mismatched orders [5]"), "{}", outcome.detail);
            } else if outcome.name == "counterexamples" {
                // EQlw has largest eigenvalue 5.343 (trace 18), published as 5.543
                assert!(outcome.detail.contains("without a reference row: [\"EQlw [5.343"), "{}", outcome.detail);
            } else {
                assert!(outcome.passed, "{}: {}", outcome.name, outcome.detail);
            }
        }
    }
}
