//! Generalized Cartan matrices, spherical subsets, rank-2 subsystems and
//! their Chevalley commutator data.

mod affine;
mod cartan;
mod roots;
mod structure;

pub use affine::{affinize, AffinizationData};
pub use cartan::{CartanMatrix, NodeSet};
pub use roots::{positive_roots, positive_roots_of, Root};
pub use structure::{CommTerm, StructureConstantTable};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootDataError {
    #[error("invalid generalized Cartan matrix: {0}")]
    Invalid(String),
    #[error("nodes {i} and {j} span a non-spherical pair (A_ij * A_ji = {product})")]
    NonSpherical { i: usize, j: usize, product: i64 },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("unknown preset {0:?}")]
    UnknownPreset(String),
}

/// Type of the rank-2 subsystem spanned by two nodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum Rank2Type {
    A1xA1,
    A2,
    B2,
    G2,
}

impl Rank2Type {
    pub fn from_product(product: i64) -> Option<Self> {
        match product {
            0 => Some(Self::A1xA1),
            1 => Some(Self::A2),
            2 => Some(Self::B2),
            3 => Some(Self::G2),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::A1xA1 => "A1xA1",
            Self::A2 => "A2",
            Self::B2 => "B2",
            Self::G2 => "G2",
        }
    }

    pub fn num_positive_roots(self) -> usize {
        match self {
            Self::A1xA1 => 2,
            Self::A2 => 3,
            Self::B2 => 4,
            Self::G2 => 6,
        }
    }

    /// Upper bound on `lambda_2` of the coset graph `CC(U, (U_a, U_b))` over a
    /// field of order `q = p^m`.
    pub fn lambda_bound(self, p: u64, m: usize) -> f64 {
        let pf = p as f64;
        match self {
            Self::A1xA1 => 0.0,
            Self::A2 => 1.0 / pf.sqrt(),
            Self::B2 => (2.0 / pf).sqrt(),
            Self::G2 if m == 1 => ((3.0 / pf).sqrt() + 1.0 / (pf * pf)).sqrt(),
            Self::G2 => {
                let q = pf.powi(m as i32);
                (188.0 / q).powf(1.0 / 16.0)
            }
        }
    }
}

impl std::fmt::Display for Rank2Type {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Classifies the pair `{i, j}` by `A_ij * A_ji`.
pub fn classify_pair(gcm: &CartanMatrix, i: usize, j: usize) -> Result<Rank2Type, RootDataError> {
    if i == j {
        return Err(RootDataError::Invalid(format!(
            "pair ({i},{j}) is not a pair"
        )));
    }
    let product = gcm.get(i, j) * gcm.get(j, i);
    Rank2Type::from_product(product).ok_or(RootDataError::NonSpherical { i, j, product })
}

/// The pair `(short, long)` ordering of `{i, j}`: the first node carries the
/// short root, or is the smaller index when both roots have the same length.
pub fn oriented_pair(gcm: &CartanMatrix, i: usize, j: usize) -> (usize, usize) {
    let (a, b) = (i.min(j), i.max(j));
    if gcm.get(b, a).abs() > gcm.get(a, b).abs() {
        (b, a)
    } else {
        (a, b)
    }
}

/// The worst rank-2 bound over all pairs of nodes.
pub fn gamma_bound(gcm: &CartanMatrix, p: u64, m: usize) -> Result<f64, RootDataError> {
    let n = gcm.size();
    let mut gamma: f64 = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            gamma = gamma.max(classify_pair(gcm, i, j)?.lambda_bound(p, m));
        }
    }
    Ok(gamma)
}
