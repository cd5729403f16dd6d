use thiserror::Error;

use crate::domination::DominationError;
use crate::enumeration::EnumerationError;
use crate::families::FamilyError;
use crate::graph::GraphError;
use crate::io::FormatError;
use crate::scalar::ParseRationalError;
use crate::spectral::SpectralError;

/// Any error raised by the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Domination(#[from] DominationError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error(transparent)]
    Rational(#[from] ParseRationalError),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
