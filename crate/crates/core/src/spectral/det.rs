use crate::scalar::Field;

use super::SymMatrix;

/// The order-`n` tridiagonal matrix with diagonal `1, …, 1, 0` and `-1` on
/// both off-diagonals (the `[0]` matrix for `n = 1`).
pub fn m_matrix<T: Field>(n: usize) -> SymMatrix<T> {
    let mut m = SymMatrix::zeros(n);
    for i in 0..n {
        m.set(i, i, if i + 1 == n { T::zero() } else { T::one() });
        if i + 1 < n {
            m.set(i, i + 1, -T::one());
        }
    }
    m
}

/// `|M_n|` by the recurrence `|M_n| = |M_{n-1}| - |M_{n-2}|`, `|M_0| = 1`, `|M_1| = 0`.
pub fn det_m(n: usize) -> i64 {
    let (mut prev, mut cur) = (1i64, 0i64);
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        (prev, cur) = (cur, cur - prev);
    }
    cur
}

/// Closed form of `|M_n|`: `0` for `n ≡ 1 (mod 3)`, `-1` for `n ≡ 2, 3 (mod 6)`,
/// `1` for `n ≡ 0, 5 (mod 6)`.
pub fn det_m_closed_form(n: usize) -> i64 {
    match n % 6 {
        1 | 4 => 0,
        2 | 3 => -1,
        _ => 1,
    }
}

/// Determinant by Gaussian elimination with row pivoting over an exact field.
pub fn exact_determinant<T: Field>(matrix: SymMatrix<T>) -> T {
    let n = matrix.order();
    let mut a = matrix.into_rows();
    let mut det = T::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return T::zero();
        };
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        let pivot = a[k][k].clone();
        det = det * pivot.clone();
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
    }
    det
}
