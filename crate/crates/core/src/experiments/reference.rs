//! Published reference values the experiments are checked against.

/// Laplacian spectra (descending, three decimals) of the six trees in Γ(12, 8).
pub const GAMMA_12_8_SPECTRA: [[f64; 12]; 6] = [
    [6.055, 3.814, 3.301, 2.572, 1.760, 1.0, 1.0, 1.0, 1.0, 0.414, 0.084, 0.0],
    [6.107, 3.532, 3.438, 2.347, 2.195, 1.0, 1.0, 1.0, 1.0, 0.260, 0.121, 0.0],
    [5.187, 4.172, 3.464, 2.600, 2.200, 1.0, 1.0, 1.0, 1.0, 0.274, 0.102, 0.0],
    [5.103, 4.335, 3.420, 2.641, 2.094, 1.0, 1.0, 1.0, 1.0, 0.316, 0.091, 0.0],
    [5.098, 4.233, 3.582, 2.773, 1.847, 1.0, 1.0, 1.0, 1.0, 0.388, 0.078, 0.0],
    [4.461, 4.199, 4.000, 2.714, 2.239, 1.0, 1.0, 1.0, 1.0, 0.300, 0.088, 0.0],
];

/// Laplacian spectra (descending) of the nine connected six-vertex graphs
/// with fewer than `⌈(d+1)/3⌉` eigenvalues below one.
pub const SIX_VERTEX_COUNTEREXAMPLE_SPECTRA: [[f64; 6]; 9] = [
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

/// `(n, #trees, #trees with m[0,1) = ⌈(d+1)/3⌉, ratio)` for `5 <= n <= 20`.
pub const TREE_CENSUS: [(usize, usize, usize, f64); 16] = [
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

/// Reference census entry for order `n`, if tabulated.
pub fn census_reference(n: usize) -> Option<(usize, usize, f64)> {
    TREE_CENSUS.iter().find(|r| r.0 == n).map(|&(_, t, e, r)| (t, e, r))
}

/// Matches each computed spectrum to a distinct reference row, comparing
/// descending values entrywise within `tol`. Returns `assignment[i]`, the
/// reference row used for computed spectrum `i`, or `None` if no perfect
/// matching exists.
pub fn match_unordered<R: AsRef<[f64]>>(computed: &[Vec<f64>], reference: &[R], tol: f64) -> Option<Vec<usize>> {
    if computed.len() != reference.len() {
        return None;
    }
    let fits = |c: &[f64], r: &[f64]| c.len() == r.len() && c.iter().zip(r).all(|(a, b)| (a - b).abs() <= tol);
    let compatible: Vec<Vec<usize>> =
        computed.iter().map(|c| (0..reference.len()).filter(|&j| fits(c, reference[j].as_ref())).collect()).collect();
    let mut used = vec![false; reference.len()];
    let mut assignment = Vec::with_capacity(computed.len());
    fn assign(i: usize, compatible: &[Vec<usize>], used: &mut [bool], out: &mut Vec<usize>) -> bool {
        if i == compatible.len() {
            return true;
        }
        for &j in &compatible[i] {
            if !used[j] {
                used[j] = true;
                out.push(j);
                if assign(i + 1, compatible, used, out) {
                    return true;
                }
                out.pop();
                used[j] = false;
            }
        }
        false
    }
    assign(0, &compatible, &mut used, &mut assignment).then_some(assignment)
}

/// Indices of computed spectra that fit no reference row within `tol`.
pub fn unmatched<R: AsRef<[f64]>>(computed: &[Vec<f64>], reference: &[R], tol: f64) -> Vec<usize> {
    (0..computed.len())
        .filter(|&i| {
            !reference.iter().any(|r| {
                let r = r.as_ref();
                r.len() == computed[i].len() && computed[i].iter().zip(r).all(|(a, b)| (a - b).abs() <= tol)
            })
        })
        .collect()
}
