//! Finite groups given by explicit multiplication: `SL_{n+1}` over a
//! quotient ring `k[t]/(f)`, and rank-2 unipotent groups `U(k)` in
//! collected normal form. Subgroups are fully enumerated and sorted by
//! canonical key.

mod dump;
mod kms;
mod matrix;
mod subgroup;
mod unipotent;

pub use dump::{read_dump, write_dump, DumpHeader};
pub use kms::{sl_order, KmsMap, RootImage, SurjectivityReport};
pub use matrix::SlGroup;
pub use subgroup::{
    closure, coset_labels, intersect, ip_check, local_injectivity_check, CosetLabels, IpOutcome,
    Subgroup, DEFAULT_BUDGET,
};
pub use unipotent::UnipotentGroup;

use std::fmt::Debug;
use std::hash::Hash;

use thiserror::Error;

use crate::algebra::{AlgebraError, Elem};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("enumeration budget of {limit} elements exceeded after {partial} elements")]
    Budget { limit: usize, partial: usize },
    #[error("integrity violation: {0}")]
    Integrity(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Canonical form of a group element: matrix entries row-major, or the
/// normal-form coordinates of a unipotent element. Ordering is that of the
/// big-endian byte key.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement(pub Box<[Elem]>);

impl GroupElement {
    pub fn entries(&self) -> &[Elem] {
        &self.0
    }

    pub fn key_bytes(&self) -> Vec<u8> {
        self.0.iter().flat_map(|e| e.to_be_bytes()).collect()
    }
}

pub trait FiniteGroup: Sync {
    type Element: Clone + Ord + Hash + Debug + Send + Sync;

    fn identity(&self) -> Self::Element;

    fn mul(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;

    fn inverse(&self, a: &Self::Element) -> Self::Element;

    /// `a^-1 b^-1 a b`
    fn commutator(&self, a: &Self::Element, b: &Self::Element) -> Self::Element {
        let ai = self.inverse(a);
        let bi = self.inverse(b);
        self.mul(&self.mul(&ai, &bi), &self.mul(a, b))
    }
}
