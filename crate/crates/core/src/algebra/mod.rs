//! Exact arithmetic over prime fields, their extensions, and the quotient
//! rings `k[t]/(f)` used as coefficient rings of the Chevalley groups.
//!
//! Every field element is a [`Elem`] code: the base-`p` digits of the code
//! are the coefficients of the element's residue polynomial, flattened
//! through the whole tower. Codes are therefore canonical, and addition is
//! digit-wise modulo `p` at every level.

mod extension;
mod field;
mod poly;
mod text;

pub use extension::{BaseField, ExtensionField, QuotientRing, TABLE_LIMIT};
pub use field::{digit_add, digit_neg, Elem, Field, PrimeField};
pub use poly::{
    enumerate_irreducibles, enumerate_monic, find_factor, first_irreducible, is_irreducible, Poly,
};
pub use text::{format_poly, parse_poly, PolyText};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("division by the zero polynomial")]
    ZeroModulus,
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("irreducibility is undefined for constant polynomials")]
    ConstantPolynomial,
    #[error("modulus {poly} is reducible; it has the factor {factor}")]
    Reducible { poly: String, factor: String },
    #[error("coefficient {0} is not an element of a field of order {1}")]
    BadCoefficient(i64, u64),
    #[error("cannot parse polynomial {text:?}: {reason}")]
    Parse { text: String, reason: String },
    #[error("field order {0} exceeds the supported 62-bit range")]
    TooLarge(String),
}
