//! Exact Laplacian eigenvalue distributions of trees and small graphs.
//!
//! The crate counts Laplacian eigenvalues in intervals exactly (by inertia of
//! `L(G) - αI` under congruence), relates those counts to the diameter and the
//! domination number of trees, and ships the exhaustive enumerators and
//! experiment drivers used to check the bounds over every tree of a given order.
//!
//! Numeric engines are generic over their scalar: exact inertia and
//! determinants accept any ordered field (`Rational`, `Ratio<i64>`, `f64`), and
//! the dense Jacobi solver accepts any [`num_traits::Float`]. The aliases below
//! pin the types used by the high-level API.

pub mod domination;
pub mod enumeration;
pub mod error;
pub mod experiments;
pub mod families;
pub mod graph;
pub mod io;
pub mod scalar;
pub mod spectral;

pub use error::Error;
pub use graph::{Graph, GraphError, PathTrace, Tree};
pub use scalar::{parse_rational, Field};
pub use spectral::{InertiaTriple, IntervalSpec, Spectrum, SymMatrix};

/// Exact arbitrary-precision rational used for thresholds and interval endpoints.
pub type Rational = num_rational::BigRational;

/// Fixed-width rational, adequate for small matrices with bounded entries.
pub type SmallRational = num_rational::Ratio<i64>;

/// Double-precision Laplacian spectrum.
pub type Spectrum64 = Spectrum<f64>;

/// Single-precision Laplacian spectrum.
pub type Spectrum32 = Spectrum<f32>;

/// Exact rational symmetric matrix.
pub type RationalMatrix = SymMatrix<Rational>;

/// Integer symmetric matrix, as produced by [`spectral::laplacian`].
pub type IntMatrix = SymMatrix<i64>;
