//! Coset-complex high-dimensional expanders from Chevalley-group quotients,
//! with exact group-level checks and spectral certificates.

pub mod algebra;
pub mod cli;
pub mod complex;
pub mod groups;
pub mod rootdata;
pub mod spectra;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum HdxError {
    #[error(transparent)]
    Algebra(#[from] algebra::AlgebraError),
    #[error(transparent)]
    RootData(#[from] rootdata::RootDataError),
    #[error(transparent)]
    Group(#[from] groups::GroupError),
    #[error(transparent)]
    Complex(#[from] complex::ComplexError),
    #[error(transparent)]
    Spectra(#[from] spectra::SpectraError),
    #[error("invalid instance: {0}")]
    Spec(String),
    #[error("resource budget: {0}")]
    Budget(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl HdxError {
    /// Process exit code: 3 for budget exhaustion, 4 for invalid input, 1 otherwise.
    pub fn exit_code(&self) -> u8 {
        use groups::GroupError;
        match self {
            Self::Budget(_)
            | Self::Group(GroupError::Budget { .. })
            | Self::Complex(complex::ComplexError::Group(GroupError::Budget { .. })) => 3,
            Self::Algebra(_)
            | Self::RootData(_)
            | Self::Spec(_)
            | Self::Group(GroupError::Invalid(_) | GroupError::Algebra(_))
            | Self::Complex(complex::ComplexError::Format { .. })
            | Self::Json(_) => 4,
            _ => 1,
        }
    }
}
