//! Acceptance checks. Each test prints one `PASS`/`FAIL` line to stderr and
//! asserts the criterion at its stated tolerance.

use std::io::Write;

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use lapdist::domination::{domination_number_exact, tree_domination_number};
use lapdist::enumeration::free_trees;
use lapdist::experiments::{census, counterexamples, gamma_spectra, random_gamma_spec, random_tree, CensusRow};
use lapdist::families::{check_properties, double_starlike, gamma_tree, is_gamma_member, path, DoubleStarSpec};
use lapdist::spectral::{
    det_m, det_m_closed_form, eigenvalues_dense, exact_determinant, forest_inertia, inertia_at, m_matrix,
};
use lapdist::{Rational, Tree};

fn report(criterion: &str, pass: bool, detail: &str) {
    let line = format!("criterion {criterion}: {} ({detail})\n", if pass { "PASS" } else { "FAIL" });
    let _ = std::io::stderr().write_all(line.as_bytes());
}

fn int(k: i64) -> Rational {
    Rational::from_integer(BigInt::from(k))
}

fn ceil3(x: usize) -> usize {
    x.div_ceil(3)
}

/// Published `(n, #T_n, #T*_n, ratio)`.
const PUBLISHED_CENSUS: [(usize, usize, usize, f64); 16] = [
    (5, 3, 2, 0.666666667),
    (6, 6, 5, 0.833333333),
    (7, 11, 7, 0.636363636),
    (8, 23, 12, 0.521739130),
    (9, 47, 20, 0.425531915),
    (10, 106, 33, 0.311320755),
    (11, 235, 52, 0.221276596),
    (12, 551, 86, 0.156079855),
    (13, 1301, 137, 0.105303613),
    (14, 3159, 222, 0.070275404),
    (15, 7741, 353, 0.045601343),
    (16, 19320, 568, 0.029399586),
    (17, 48629, 900, 0.018507475),
    (18, 123867, 1433, 0.011568860),
    (19, 317955, 2260, 0.007107924),
    (20, 823065, 3574, 0.004342306),
];

const PUBLISHED_GAMMA_12_8: [[f64; 12]; 6] = [
    [6.055, 3.814, 3.301, 2.572, 1.760, 1.0, 1.0, 1.0, 1.0, 0.414, 0.084, 0.0],
    [6.107, 3.532, 3.438, 2.347, 2.195, 1.0, 1.0, 1.0, 1.0, 0.260, 0.121, 0.0],
    [5.187, 4.172, 3.464, 2.600, 2.200, 1.0, 1.0, 1.0, 1.0, 0.274, 0.102, 0.0],
    [5.103, 4.335, 3.420, 2.641, 2.094, 1.0, 1.0, 1.0, 1.0, 0.316, 0.091, 0.0],
    [5.098, 4.233, 3.582, 2.773, 1.847, 1.0, 1.0, 1.0, 1.0, 0.388, 0.078, 0.0],
    [4.461, 4.199, 4.000, 2.714, 2.239, 1.0, 1.0, 1.0, 1.0, 0.300, 0.088, 0.0],
];

const PUBLISHED_SIX_VERTEX: [[f64; 6]; 9] = [
    [5.562, 5.000, 5.000, 3.000, 1.438, 0.0],
    [5.562, 3.000, 3.000, 3.000, 1.438, 0.0],
    [5.562, 5.000, 3.000, 3.000, 1.438, 0.0],
    [5.000, 4.000, 3.000, 3.000, 1.000, 0.0],
    [5.000, 3.000, 3.000, 2.000, 1.000, 0.0],
    [5.543, 5.000, 3.471, 3.000, 1.186, 0.0],
    [5.278, 4.317, 3.000, 2.295, 1.109, 0.0],
    [4.414, 4.000, 3.000, 1.586, 1.000, 0.0],
    [4.000, 3.000, 3.000, 1.000, 1.000, 0.0],
];

/// Perfect matching between computed and published spectra, each pair
/// entrywise within `tol` after sorting descending. Returns the unmatched
/// computed rows of a maximum matching.
fn unordered_match<const K: usize>(computed: &[Vec<f64>], published: &[[f64; K]], tol: f64) -> Vec<usize> {
    let fits = |c: &Vec<f64>, p: &[f64; K]| {
        let mut c = c.clone();
        c.sort_by(|a, b| b.partial_cmp(a).unwrap());
        c.len() == K && c.iter().zip(p).all(|(x, y)| (x - y).abs() <= tol)
    };
    // augmenting paths
    let mut owner: Vec<Option<usize>> = vec![None; published.len()];
    fn augment<const K: usize>(
        i: usize,
        seen: &mut [bool],
        owner: &mut [Option<usize>],
        ok: &dyn Fn(usize, usize) -> bool,
    ) -> bool {
        for j in 0..owner.len() {
            if ok(i, j) && !seen[j] {
                seen[j] = true;
                if owner[j].is_none_or(|o| augment::<K>(o, seen, owner, ok)) {
                    owner[j] = Some(i);
                    return true;
                }
            }
        }
        false
    }
    let ok = |i: usize, j: usize| fits(&computed[i], &published[j]);
    let mut unmatched = Vec::new();
    for i in 0..computed.len() {
        let mut seen = vec![false; published.len()];
        if !augment::<K>(i, &mut seen, &mut owner, &ok) {
            unmatched.push(i);
        }
    }
    unmatched
}

fn census_agrees(rows: &[CensusRow]) -> Vec<String> {
    let mut problems = Vec::new();
    for row in rows {
        let &(_, total, extremal, ratio) = PUBLISHED_CENSUS.iter().find(|r| r.0 == row.n).unwrap();
        let exact_ratio = row.trees_extremal as f64 / row.trees_total as f64;
        if row.trees_total != total || row.trees_extremal != extremal || (exact_ratio - ratio).abs() > 1e-9 {
            problems.push(format!(
                "n={} computed ({}, {}) published ({total}, {extremal})",
                row.n, row.trees_total, row.trees_extremal
            ));
        }
    }
    problems
}

#[test]
fn criterion_1_census_up_to_14() {
    let rows = census(5..=14, None, |_| Ok(())).unwrap();
    let problems = census_agrees(&rows);
    let detail = if problems.is_empty() { "orders 5..=14 exact".to_string() } else { problems.join("; ") };
    report("1", problems.is_empty(), &detail);
    assert!(problems.is_empty(), "{detail}");
}

#[test]
#[ignore = "slow: about a second optimized, longer in debug builds"]
fn criterion_1_census_extended_16() {
    let rows = census(15..=16, None, |_| Ok(())).unwrap();
    let problems = census_agrees(&rows);
    let detail = if problems.is_empty() { "orders 15..=16 exact".to_string() } else { problems.join("; ") };
    report("1 (n<=16)", problems.is_empty(), &detail);
    assert!(problems.is_empty(), "{problems:?}");
}

#[test]
#[ignore = "slow: tens of seconds optimized"]
fn criterion_1_census_extended_20() {
    let rows = census(17..=20, None, |_| Ok(())).unwrap();
    let problems = census_agrees(&rows);
    let detail = if problems.is_empty() { "orders 17..=20 exact".to_string() } else { problems.join("; ") };
    report("1 (n<=20)", problems.is_empty(), &detail);
    assert!(problems.is_empty(), "{problems:?}");
}

#[test]
fn criterion_2_gamma_12_8_spectra() {
    let rows = gamma_spectra(12, 8).unwrap();
    let spectra: Vec<Vec<f64>> = rows.iter().map(|r| r.spectrum.clone()).collect();
    let unmatched = unordered_match(&spectra, &PUBLISHED_GAMMA_12_8, 1e-3);
    let one = int(1);
    let counts_ok = rows.iter().all(|r| {
        let spec = lapdist::families::GammaSpec::new(8, r.parts.clone()).unwrap();
        let i = inertia_at(&gamma_tree(&spec), &one);
        i.equal == 4 && i.below == 3
    });
    let pass = rows.len() == 6 && unmatched.is_empty() && counts_ok;
    report("2", pass, &format!("{} trees, unmatched {unmatched:?}, counts at one ok: {counts_ok}", rows.len()));
    assert!(pass);
}

#[test]
fn criterion_3_small_graph_counterexamples() {
    let small: usize = (1..=5).map(|n| counterexamples(n, None).unwrap().len()).sum();
    let six = counterexamples(6, None).unwrap();
    let shape = six.iter().all(|r| r.diameter == 3 && r.m_below_1 == 1);
    let spectra: Vec<Vec<f64>> = six.iter().map(|r| r.spectrum.clone()).collect();
    // records carry three-decimal values, so allow for one rounding step
    let unmatched = unordered_match(&spectra, &PUBLISHED_SIX_VERTEX, 1e-3 + 1e-9);
    let pass = small == 0 && six.len() == 9 && shape && unmatched.is_empty();
    let orphans: Vec<String> = unmatched.iter().map(|&i| format!("{} {:?}", six[i].graph6, six[i].spectrum)).collect();
    report(
        "3",
        pass,
        &format!("n<=5: {small}, n=6: {} classes, d=3 and m=1: {shape}, no published row for {orphans:?}", six.len()),
    );
    assert!(pass, "unmatched spectra {orphans:?}");
}

#[test]
fn criterion_4_theorem_suite() {
    let mut trees = 0;
    let mut violations = [0usize; 6];
    let (one, two) = (int(1), int(2));
    for n in 1..=14 {
        for t in free_trees(n).unwrap() {
            trees += 1;
            let d = t.diameter();
            let gamma = tree_domination_number(&t);
            let m = forest_inertia(&t, &one).below;
            let m2 = forest_inertia(&t, &two).below;
            let member = is_gamma_member(&t).is_some();
            violations[0] += usize::from(m > gamma);
            violations[1] += usize::from(m < ceil3(d + 1));
            violations[2] += usize::from(3 * gamma < d + 1);
            violations[3] += usize::from((3 * gamma == d + 1) != (3 * m == d + 1));
            violations[4] += usize::from((3 * m == d + 1) != member);
            // the upper band bound assumes no isolated vertex
            violations[5] += usize::from(n > 1 && m2 > n - gamma);
        }
    }
    let pass = violations.iter().all(|&v| v == 0);
    report("4", pass, &format!("{trees} trees, violations (a..f) {violations:?}"));
    assert!(pass);
}

#[test]
fn criterion_5_path_formula() {
    let one = int(1);
    let bad: Vec<usize> = (1..=300)
        .filter(|&n| {
            let i = forest_inertia(&path(n).unwrap(), &one);
            i.below != ceil3(n) || (i.equal == 1) != (n % 3 == 0) || i.equal > 1
        })
        .collect();
    report("5", bad.is_empty(), &format!("n=1..=300, failing {bad:?}"));
    assert!(bad.is_empty());
}

#[test]
fn criterion_6_double_starlike() {
    let one = int(1);
    let mut bad = Vec::new();
    for d in 2..=20 {
        for p in 1..=6 {
            for q in 1..=6 {
                let t = double_starlike(&DoubleStarSpec::new(d, p, q).unwrap());
                assert_eq!(t.diameter(), d);
                if inertia_at(&t, &one).below != ceil3(d + 1) {
                    bad.push((d, p, q));
                }
            }
        }
    }
    report("6", bad.is_empty(), &format!("684 trees, failing {bad:?}"));
    assert!(bad.is_empty());
}

#[test]
fn criterion_7_gamma_properties() {
    let mut rng = StdRng::seed_from_u64(7);
    let one = int(1);
    let mut bad = Vec::new();
    for _ in 0..50 {
        let spec = random_gamma_spec(&mut rng, 40);
        let t = gamma_tree(&spec);
        let report = check_properties(&t, Some(&spec));
        let (n, d) = (t.order(), spec.diameter());
        let multiplicity = inertia_at(&t, &one).equal;
        if !report.all_hold() || multiplicity != n - d || t.pendant_vertices().len() != n - d + 1 {
            bad.push(spec.to_string());
        }
    }
    report("7", bad.is_empty(), &format!("50 specs with n<=40, failing {bad:?}"));
    assert!(bad.is_empty());
}

#[test]
fn criterion_8_det_m() {
    let closed: Vec<usize> = (1..=1000).filter(|&n| det_m(n) != det_m_closed_form(n)).collect();
    let exact: Vec<usize> = (1..=40).filter(|&n| exact_determinant(m_matrix::<Rational>(n)) != int(det_m(n))).collect();
    let pass = closed.is_empty() && exact.is_empty();
    report("8", pass, &format!("closed-form mismatches {closed:?}, exact mismatches {exact:?}"));
    assert!(pass);
}

fn random_non_edge(rng: &mut StdRng, t: &Tree) -> (usize, usize) {
    loop {
        let (u, v) = (rng.gen_range(0..t.order()), rng.gen_range(0..t.order()));
        if u != v && !t.has_edge(u, v) {
            return (u, v);
        }
    }
}

#[test]
fn criterion_9_oracle_equivalences() {
    let mut dp_bad = 0;
    let mut dense_bad = 0;
    let mut guarded = 0;
    let alphas = [(1, 2), (1, 1), (3, 2), (2, 1), (3, 1)];
    for n in 1..=12 {
        for t in free_trees(n).unwrap() {
            dp_bad += usize::from(tree_domination_number(&t) != domination_number_exact(&t).unwrap().gamma);
            let s = eigenvalues_dense(&t, 1e-10).unwrap();
            for &(p, q) in &alphas {
                let exact = inertia_at(&t, &Rational::new(BigInt::from(p), BigInt::from(q)));
                let a = p as f64 / q as f64;
                if s.values().iter().any(|&x| (x - a).abs() < 1e-6) {
                    guarded += 1;
                } else {
                    dense_bad += usize::from(exact.below != s.count_below(a, 1e-6) || exact.equal != 0);
                }
            }
        }
    }

    let mut rng = StdRng::seed_from_u64(9);
    let mut interlace_bad = 0;
    for _ in 0..200 {
        let n = rng.gen_range(3..=30);
        let t = random_tree(&mut rng, n);
        let (u, v) = random_non_edge(&mut rng, &t);
        let before = eigenvalues_dense(&t, 1e-10).unwrap();
        let after = eigenvalues_dense(&t.with_edge(u, v).unwrap(), 1e-10).unwrap();
        let ok =
            before.values().iter().zip(after.values()).all(|(b, a)| *a >= b - 1e-8) && after.values()[0].abs() < 1e-8;
        interlace_bad += usize::from(!ok);
    }

    let one = int(1);
    let mut deletion_bad = 0;
    for _ in 0..200 {
        let n = rng.gen_range(2..=40);
        let t = random_tree(&mut rng, n);
        let m = forest_inertia(&t, &one).below;
        for v in t.pendant_vertices() {
            deletion_bad += usize::from(forest_inertia(&t.remove_vertex(v).unwrap(), &one).below > m);
        }
    }

    let pass = dp_bad + dense_bad + interlace_bad + deletion_bad == 0;
    report(
        "9",
        pass,
        &format!(
            "dp vs subset {dp_bad}, exact vs dense {dense_bad} ({guarded} near-threshold cases logged), interlacing {interlace_bad}, pendant deletion {deletion_bad}"
        ),
    );
    assert!(pass);
}
