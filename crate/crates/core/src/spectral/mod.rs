//! Laplacian construction and eigenvalue counting.
//!
//! Interval counts are exact: the inertia of `L(G) - αI` (counts of negative,
//! zero and positive eigenvalues) is invariant under congruence, so symmetric
//! elimination in exact arithmetic gives `#{μ < α}`, `#{μ = α}` and `#{μ > α}`
//! with no tolerance. Forests take a linear-time leaf elimination; other
//! graphs go through dense symmetric elimination.

mod det;
mod inertia;
mod jacobi;

use std::cmp::Ordering;
use std::fmt;

use num_traits::{Float, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::scalar::Field;
use crate::Rational;

pub use det::{det_m, det_m_closed_form, exact_determinant, m_matrix};
pub use inertia::{dense_inertia, forest_inertia};
pub use jacobi::{jacobi_eigenvalues, DenseConfig};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("dense solver limited to {cap} vertices, got {n}")]
    DenseCapExceeded { n: usize, cap: usize },
    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NonConvergence { sweeps: usize, off_norm: f64 },
    #[error("tolerance must be positive")]
    BadTolerance,
    #[error("interval lower bound exceeds upper bound")]
    MalformedInterval,
    #[error("interval syntax: {0}")]
    IntervalSyntax(String),
}

/// Dense symmetric matrix, stored row-major in full.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: Clone + Zero> SymMatrix<T> {
    pub fn zeros(n: usize) -> Self {
        SymMatrix { n, data: vec![T::zero(); n * n] }
    }
}

impl<T: Clone> SymMatrix<T> {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.n + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, value: T) {
        self.data[i * self.n + j] = value.clone();
        self.data[j * self.n + i] = value;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn map<U, F: Fn(&T) -> U>(&self, f: F) -> SymMatrix<U> {
        SymMatrix { n: self.n, data: self.data.iter().map(f).collect() }
    }

    pub(crate) fn into_rows(self) -> Vec<Vec<T>> {
        self.data.chunks(self.n.max(1)).map(<[T]>::to_vec).collect()
    }
}

/// `L(G) = D(G) - A(G)`.
pub fn laplacian(graph: &Graph) -> SymMatrix<i64> {
    let n = graph.order();
    let mut l = SymMatrix::zeros(n);
    for v in 0..n {
        l.set(v, v, graph.degree(v) as i64);
    }
    for &(u, v) in graph.edges() {
        l.set(u, v, -1);
    }
    l
}

/// `L(G) - αI` over any field.
pub fn shifted_laplacian<T: Field>(graph: &Graph, alpha: &T) -> SymMatrix<T> {
    let n = graph.order();
    let mut m = laplacian(graph).map(|&x| T::from_int(x));
    for v in 0..n {
        let d = m.get(v, v).clone() - alpha.clone();
        m.set(v, v, d);
    }
    m
}

/// Counts of Laplacian eigenvalues below, equal to and above a threshold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct InertiaTriple {
    pub below: usize,
    pub equal: usize,
    pub above: usize,
}

impl InertiaTriple {
    pub fn total(&self) -> usize {
        self.below + self.equal + self.above
    }
}

impl fmt::Display for InertiaTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "below={} equal={} above={}", self.below, self.equal, self.above)
    }
}

/// Exact inertia of `L(G) - αI`; forests use leaf elimination, other graphs
/// dense congruence.
pub fn inertia_at(graph: &Graph, alpha: &Rational) -> InertiaTriple {
    inertia_at_generic(graph, alpha)
}

/// [`inertia_at`] over an arbitrary field.
pub fn inertia_at_generic<T: Field>(graph: &Graph, alpha: &T) -> InertiaTriple {
    if graph.is_forest() {
        forest_inertia(graph, alpha)
    } else {
        dense_inertia(shifted_laplacian(graph, alpha))
    }
}

/// `m_G[0,1)`, the number of Laplacian eigenvalues strictly below one.
pub fn count_below_one(graph: &Graph) -> usize {
    inertia_at(graph, &crate::scalar::rational_one()).below
}

/// One end of an interval on the real line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Endpoint {
    NegInfinity,
    PosInfinity,
    Finite { value: Rational, closed: bool },
}

impl Endpoint {
    pub fn closed(value: Rational) -> Self {
        Endpoint::Finite { value, closed: true }
    }

    pub fn open(value: Rational) -> Self {
        Endpoint::Finite { value, closed: false }
    }
}

/// An interval with exact rational (or infinite) endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalSpec {
    lower: Endpoint,
    upper: Endpoint,
}

impl IntervalSpec {
    pub fn new(lower: Endpoint, upper: Endpoint) -> Result<Self, SpectralError> {
        use Endpoint::*;
        let ok = match (&lower, &upper) {
            (PosInfinity, _) | (_, NegInfinity) => false,
            (NegInfinity, _) | (_, PosInfinity) => true,
            (Finite { value: a, .. }, Finite { value: b, .. }) => a <= b,
        };
        if ok {
            Ok(IntervalSpec { lower, upper })
        } else {
            Err(SpectralError::MalformedInterval)
        }
    }

    /// `[0, 1)`.
    pub fn below_one() -> Self {
        IntervalSpec { lower: Endpoint::closed(Rational::zero()), upper: Endpoint::open(crate::scalar::rational_one()) }
    }

    pub fn lower(&self) -> &Endpoint {
        &self.lower
    }

    pub fn upper(&self) -> &Endpoint {
        &self.upper
    }

    /// Parses interval notation such as `[0,1)`, `(1/2, 3]` or `(-inf, 2]`.
    pub fn parse(text: &str) -> Result<Self, SpectralError> {
        let syntax = |m: &str| SpectralError::IntervalSyntax(format!("{m} in {text:?}"));
        let s = text.trim();
        let lower_closed = match s.chars().next() {
            Some('[') => true,
            Some('(') => false,
            _ => return Err(syntax("expected '[' or '('")),
        };
        let upper_closed = match s.chars().last() {
            Some(']') => true,
            Some(')') => false,
            _ => return Err(syntax("expected ']' or ')'")),
        };
        let inner = &s[1..s.len() - 1];
        let (a, b) = inner.split_once(',').ok_or_else(|| syntax("missing ','"))?;
        let endpoint = |t: &str, closed: bool| -> Result<Endpoint, SpectralError> {
            match t.trim() {
                "-inf" | "-infinity" => Ok(Endpoint::NegInfinity),
                "inf" | "+inf" | "infinity" => Ok(Endpoint::PosInfinity),
                other => crate::scalar::parse_rational(other)
                    .map(|value| Endpoint::Finite { value, closed })
                    .map_err(|e| SpectralError::IntervalSyntax(e.to_string())),
            }
        };
        IntervalSpec::new(endpoint(a, lower_closed)?, endpoint(b, upper_closed)?)
    }
}

impl fmt::Display for IntervalSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.lower {
            Endpoint::Finite { value, closed } => write!(f, "{}{}", if *closed { '[' } else { '(' }, value)?,
            _ => write!(f, "(-inf")?,
        }
        match &self.upper {
            Endpoint::Finite { value, closed } => write!(f, ",{}{}", value, if *closed { ']' } else { ')' }),
            _ => write!(f, ",inf)"),
        }
    }
}

/// Number of Laplacian eigenvalues of `graph` inside `interval`, exactly.
pub fn m_interval(graph: &Graph, interval: &IntervalSpec) -> usize {
    let n = graph.order();
    // eigenvalues not exceeding the upper end
    let upto = match &interval.upper {
        Endpoint::PosInfinity => n,
        Endpoint::NegInfinity => 0,
        Endpoint::Finite { value, closed } => {
            let t = inertia_at(graph, value);
            if *closed {
                t.below + t.equal
            } else {
                t.below
            }
        }
    };
    // eigenvalues strictly left of the lower end
    let left = match &interval.lower {
        Endpoint::NegInfinity => 0,
        Endpoint::PosInfinity => n,
        Endpoint::Finite { value, closed } => {
            let t = inertia_at(graph, value);
            if *closed {
                t.below
            } else {
                t.below + t.equal
            }
        }
    };
    upto.saturating_sub(left)
}

/// Ascending Laplacian eigenvalues with the accuracy bound they were computed to.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum<F> {
    values: Vec<F>,
    tolerance: F,
}

impl<F: Float> Spectrum<F> {
    /// Sorts `values` ascending.
    pub fn new(mut values: Vec<F>, tolerance: F) -> Self {
        values.sort_by(|a, b| a.partial_cmp(b).unwrap_or(Ordering::Equal));
        Spectrum { values, tolerance }
    }

    pub fn values(&self) -> &[F] {
        &self.values
    }

    pub fn tolerance(&self) -> F {
        self.tolerance
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Eigenvalues below `alpha - guard`.
    pub fn count_below(&self, alpha: F, guard: F) -> usize {
        self.values.iter().filter(|&&v| v < alpha - guard).count()
    }

    /// Values rounded to three decimals, descending, as printed in reports.
    pub fn rounded_descending(&self) -> Vec<f64> {
        self.values
            .iter()
            .rev()
            .map(|v| {
                let x = v.to_f64().unwrap_or(f64::NAN);
                let r = (x * 1000.0).round() / 1000.0;
                if r == 0.0 {
                    0.0
                } else {
                    r
                }
            })
            .collect()
    }

    /// Compact rendering like `0, 1×10, 12`: three decimals, trailing zeros
    /// dropped, repeated values collapsed.
    pub fn compact(&self) -> String {
        let mut groups: Vec<(String, usize)> = Vec::new();
        for v in self.values.iter() {
            let x = v.to_f64().unwrap_or(f64::NAN);
            let s = format_compact(x);
            match groups.last_mut() {
                Some((last, count)) if *last == s => *count += 1,
                _ => groups.push((s, 1)),
            }
        }
        groups.into_iter().map(|(s, c)| if c > 1 { format!("{s}×{c}") } else { s }).collect::<Vec<_>>().join(", ")
    }
}

fn format_compact(x: f64) -> String {
    let s = format!("{:.3}", x);
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

/// Laplacian spectrum by cyclic Jacobi with the default configuration
/// (64-vertex cap, 100 sweeps) and the supplied tolerance.
pub fn eigenvalues_dense(graph: &Graph, tol: f64) -> Result<Spectrum<f64>, SpectralError> {
    eigenvalues_dense_with(graph, &DenseConfig { tol, ..DenseConfig::default() })
}

/// Laplacian spectrum over any floating type.
pub fn eigenvalues_dense_with<F: Float>(graph: &Graph, config: &DenseConfig<F>) -> Result<Spectrum<F>, SpectralError> {
    if graph.order() > config.cap {
        return Err(SpectralError::DenseCapExceeded { n: graph.order(), cap: config.cap });
    }
    let m = laplacian(graph).map(|&x| F::from(x).expect("small integers are representable"));
    let values = jacobi_eigenvalues(m, config)?;
    Ok(Spectrum::new(values, config.tol))
}
