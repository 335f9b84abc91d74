use std::fmt;

use super::{AlgebraError, Elem, Field};

/// Univariate polynomial with coefficients in some [`Field`], stored
/// ascending by degree without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Poly {
    coeffs: Vec<Elem>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Elem>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: Elem) -> Self {
        Self::new(vec![c])
    }

    /// `t^n`
    pub fn monomial(n: usize) -> Self {
        let mut coeffs = vec![0; n + 1];
        coeffs[n] = 1;
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Elem {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    pub fn add<F: Field + ?Sized>(&self, other: &Poly, field: &F) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(
            (0..n)
                .map(|i| field.add(self.coeff(i), other.coeff(i)))
                .collect(),
        )
    }

    pub fn neg<F: Field + ?Sized>(&self, field: &F) -> Poly {
        Poly::new(self.coeffs.iter().map(|&c| field.neg(c)).collect())
    }

    pub fn sub<F: Field + ?Sized>(&self, other: &Poly, field: &F) -> Poly {
        self.add(&other.neg(field), field)
    }

    pub fn scale<F: Field + ?Sized>(&self, c: Elem, field: &F) -> Poly {
        Poly::new(self.coeffs.iter().map(|&a| field.mul(a, c)).collect())
    }

    pub fn mul<F: Field + ?Sized>(&self, other: &Poly, field: &F) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = field.add(out[i + j], field.mul(a, b));
            }
        }
        Poly::new(out)
    }

    /// Long division; returns `(quotient, remainder)`.
    pub fn divrem<F: Field + ?Sized>(
        &self,
        divisor: &Poly,
        field: &F,
    ) -> Result<(Poly, Poly), AlgebraError> {
        let dd = divisor.degree().ok_or(AlgebraError::ZeroModulus)?;
        let lead_inv = field.inv(divisor.leading())?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0; self.coeffs.len().saturating_sub(dd).max(1)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let c = field.mul(*rem.last().unwrap(), lead_inv);
            if c != 0 {
                let shift = top - dd;
                quot[shift] = c;
                for (j, &b) in divisor.coeffs.iter().enumerate() {
                    rem[shift + j] = field.sub(rem[shift + j], field.mul(c, b));
                }
            }
            rem.pop();
        }
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Reduction modulo `modulus`; the result has degree below `deg(modulus)`.
    pub fn rem<F: Field + ?Sized>(&self, modulus: &Poly, field: &F) -> Result<Poly, AlgebraError> {
        Ok(self.divrem(modulus, field)?.1)
    }

    pub fn monic<F: Field + ?Sized>(&self, field: &F) -> Result<Poly, AlgebraError> {
        if self.is_zero() {
            return Ok(Poly::zero());
        }
        Ok(self.scale(field.inv(self.leading())?, field))
    }

    pub fn gcd<F: Field + ?Sized>(&self, other: &Poly, field: &F) -> Result<Poly, AlgebraError> {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b, field)?;
            a = b;
            b = r;
        }
        a.monic(field)
    }

    /// Inverse of `self` modulo `modulus` via the extended Euclidean algorithm.
    pub fn inv_mod<F: Field + ?Sized>(
        &self,
        modulus: &Poly,
        field: &F,
    ) -> Result<Poly, AlgebraError> {
        let a = self.rem(modulus, field)?;
        if a.is_zero() {
            return Err(AlgebraError::ZeroInverse);
        }
        let (mut r0, mut r1) = (modulus.clone(), a);
        let (mut s0, mut s1) = (Poly::zero(), Poly::constant(1));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1, field)?;
            let s = s0.sub(&q.mul(&s1, field), field);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        if r0.degree() != Some(0) {
            // modulus not irreducible and self shares a factor with it
            return Err(AlgebraError::ZeroInverse);
        }
        let c = field.inv(r0.leading())?;
        s0.scale(c, field).rem(modulus, field)
    }

    pub fn eval<F: Field + ?Sized>(&self, x: Elem, field: &F) -> Elem {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| field.add(field.mul(acc, x), c))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::format_poly(self, 't'))
    }
}

/// All monic polynomials of the given degree, in increasing order of the code
/// `sum c_i q^i` of their lower coefficients.
pub fn enumerate_monic<F: Field + ?Sized>(
    field: &F,
    degree: usize,
) -> impl Iterator<Item = Poly> + '_ {
    let q = field.order();
    let count = q.checked_pow(degree as u32).unwrap_or(u64::MAX);
    (0..count).map(move |mut idx| {
        let mut coeffs = Vec::with_capacity(degree + 1);
        for _ in 0..degree {
            coeffs.push(idx % q);
            idx /= q;
        }
        coeffs.push(1);
        Poly { coeffs }
    })
}

/// A monic nonconstant proper factor of `g`, if one exists, found by trial
/// division by every monic polynomial of degree `<= deg(g)/2`.
pub fn find_factor<F: Field + ?Sized>(g: &Poly, field: &F) -> Result<Option<Poly>, AlgebraError> {
    let deg = match g.degree() {
        None | Some(0) => return Err(AlgebraError::ConstantPolynomial),
        Some(d) => d,
    };
    for d in 1..=deg / 2 {
        for cand in enumerate_monic(field, d) {
            if g.rem(&cand, field)?.is_zero() {
                return Ok(Some(cand));
            }
        }
    }
    Ok(None)
}

pub fn is_irreducible<F: Field + ?Sized>(g: &Poly, field: &F) -> Result<bool, AlgebraError> {
    Ok(find_factor(g, field)?.is_none())
}

/// The first monic irreducible of `degree` in [`enumerate_monic`] order.
pub fn first_irreducible<F: Field + ?Sized>(field: &F, degree: usize) -> Option<Poly> {
    if degree == 0 {
        return None;
    }
    enumerate_monic(field, degree).find(|g| matches!(find_factor(g, field), Ok(None)))
}

/// Every monic irreducible of `degree`, in [`enumerate_monic`] order.
pub fn enumerate_irreducibles<F: Field + ?Sized>(field: &F, degree: usize) -> Vec<Poly> {
    if degree == 0 {
        return Vec::new();
    }
    enumerate_monic(field, degree)
        .filter(|g| matches!(find_factor(g, field), Ok(None)))
        .collect()
}
