use std::fmt::Debug;

use super::AlgebraError;

/// Canonical code of a field element.
pub type Elem = u64;

/// Arithmetic on a finite field whose elements are encoded as [`Elem`] codes
/// in `0..order()`, with `0` the zero and `1` the identity.
pub trait Field: Debug + Send + Sync {
    fn characteristic(&self) -> u64;

    fn order(&self) -> u64;

    fn add(&self, a: Elem, b: Elem) -> Elem {
        digit_add(self.characteristic(), a, b)
    }

    fn neg(&self, a: Elem) -> Elem {
        digit_neg(self.characteristic(), a)
    }

    fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    fn mul(&self, a: Elem, b: Elem) -> Elem;

    fn inv(&self, a: Elem) -> Result<Elem, AlgebraError>;

    fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Image of the integer `n` under `Z -> F`.
    #[allow(clippy::wrong_self_convention)]
    fn from_int(&self, n: i64) -> Elem {
        let p = self.characteristic() as i64;
        n.rem_euclid(p) as Elem
    }

    fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order()
    }
}

/// Digit-wise sum of two base-`p` codes.
pub fn digit_add(p: u64, mut a: Elem, mut b: Elem) -> Elem {
    if p == 2 {
        return a ^ b;
    }
    let mut out = 0;
    let mut place = 1;
    while a > 0 || b > 0 {
        let d = (a % p + b % p) % p;
        out += d * place;
        a /= p;
        b /= p;
        place *= p;
    }
    out
}

pub fn digit_neg(p: u64, mut a: Elem) -> Elem {
    if p == 2 {
        return a;
    }
    let mut out = 0;
    let mut place = 1;
    while a > 0 {
        let d = a % p;
        out += ((p - d) % p) * place;
        a /= p;
        place *= p;
    }
    out
}

/// The field `Z/pZ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, AlgebraError> {
        if !is_prime(p) {
            return Err(AlgebraError::NotPrime(p));
        }
        Ok(Self { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field for PrimeField {
    fn characteristic(&self) -> u64 {
        self.p
    }

    fn order(&self) -> u64 {
        self.p
    }

    fn add(&self, a: Elem, b: Elem) -> Elem {
        ((a as u128 + b as u128) % self.p as u128) as Elem
    }

    fn neg(&self, a: Elem) -> Elem {
        (self.p - a % self.p) % self.p
    }

    fn mul(&self, a: Elem, b: Elem) -> Elem {
        ((a as u128 * b as u128) % self.p as u128) as Elem
    }

    fn inv(&self, a: Elem) -> Result<Elem, AlgebraError> {
        if a.is_multiple_of(self.p) {
            return Err(AlgebraError::ZeroInverse);
        }
        // extended Euclid over the integers
        let (mut r0, mut r1) = (self.p as i128, a as i128);
        let (mut s0, mut s1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        Ok(s0.rem_euclid(self.p as i128) as Elem)
    }
}
