use num_traits::Float;

use super::{SpectralError, SymMatrix};

/// Settings for the dense cyclic Jacobi solver.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DenseConfig<F> {
    /// Iteration stops once the off-diagonal Frobenius norm drops below this.
    pub tol: F,
    pub max_sweeps: usize,
    /// Largest accepted matrix order.
    pub cap: usize,
}

impl<F: Float> Default for DenseConfig<F> {
    fn default() -> Self {
        DenseConfig { tol: F::from(1e-10).unwrap(), max_sweeps: 100, cap: 64 }
    }
}

fn off_norm<F: Float>(a: &[Vec<F>]) -> F {
    let mut s = F::zero();
    for (i, row) in a.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            if i != j {
                s = s + x * x;
            }
        }
    }
    s.sqrt()
}

/// Eigenvalues (unsorted) of a real symmetric matrix by cyclic Jacobi rotations.
///
/// On return the off-diagonal Frobenius norm is below `config.tol`, so by
/// Weyl's inequality every returned value is within `tol` of an eigenvalue.
pub fn jacobi_eigenvalues<F: Float>(matrix: SymMatrix<F>, config: &DenseConfig<F>) -> Result<Vec<F>, SpectralError> {
    if !(config.tol > F::zero()) {
        return Err(SpectralError::BadTolerance);
    }
    let n = matrix.order();
    let mut a = matrix.into_rows();
    let two = F::one() + F::one();

    let mut sweeps = 0;
    loop {
        let off = off_norm(&a);
        if off < config.tol {
            break;
        }
        if sweeps == config.max_sweeps {
            return Err(SpectralError::NonConvergence { sweeps, off_norm: off.to_f64().unwrap_or(f64::NAN) });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq == F::zero() {
                    continue;
                }
                // rotation angle zeroing a[p][q]
                let theta = (a[q][q] - a[p][p]) / (two * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + F::one()).sqrt());
                let c = F::one() / (t * t + F::one()).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                a[p][q] = F::zero();
                a[q][p] = F::zero();
            }
        }
    }
    Ok((0..n).map(|i| a[i][i]).collect())
}
