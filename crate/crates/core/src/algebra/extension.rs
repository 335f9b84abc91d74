use std::sync::Arc;

use super::{find_factor, first_irreducible, AlgebraError, Elem, Field, Poly, PrimeField};

/// Fields of at most this many elements get log/exp tables.
pub const TABLE_LIMIT: u64 = 1 << 16;

const MAX_ORDER: u64 = 1 << 62;

/// `F_{p^m}` as `F_p[x]/(g)`.
pub type BaseField = ExtensionField<PrimeField>;

/// `k[t]/(f)` for irreducible `f`, itself a finite field.
pub type QuotientRing = ExtensionField<BaseField>;

#[derive(Debug)]
struct Tables {
    log: Vec<u32>,
    exp: Vec<u32>,
}

/// Simple extension `B[t]/(modulus)` of a finite field `B` by a monic
/// irreducible polynomial. Element codes are `sum c_i q^i` with `q = |B|`
/// and `c_i` the base codes of the residue coefficients.
#[derive(Debug, Clone)]
pub struct ExtensionField<B: Field> {
    base: B,
    modulus: Poly,
    degree: usize,
    base_order: u64,
    order: u64,
    tables: Option<Arc<Tables>>,
}

impl<B: Field + Clone> ExtensionField<B> {
    /// Fails if `modulus` is constant, not monic after scaling, or reducible.
    pub fn new(base: B, modulus: Poly) -> Result<Self, AlgebraError> {
        let modulus = modulus.monic(&base)?;
        let degree = match modulus.degree() {
            None | Some(0) => return Err(AlgebraError::ConstantPolynomial),
            Some(d) => d,
        };
        if let Some(factor) = find_factor(&modulus, &base)? {
            return Err(AlgebraError::Reducible {
                poly: modulus.to_string(),
                factor: factor.to_string(),
            });
        }
        let base_order = base.order();
        let order = (0..degree)
            .try_fold(1u64, |acc, _| {
                acc.checked_mul(base_order).filter(|&o| o <= MAX_ORDER)
            })
            .ok_or_else(|| AlgebraError::TooLarge(format!("{base_order}^{degree}")))?;
        let mut field = Self {
            base,
            modulus,
            degree,
            base_order,
            order,
            tables: None,
        };
        if order <= TABLE_LIMIT {
            field.tables = Some(Arc::new(field.build_tables()));
        }
        Ok(field)
    }

    pub fn base(&self) -> &B {
        &self.base
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Residue polynomial of `a`, coefficients as base codes.
    pub fn to_poly(&self, mut a: Elem) -> Poly {
        let mut coeffs = Vec::with_capacity(self.degree);
        for _ in 0..self.degree {
            coeffs.push(a % self.base_order);
            a /= self.base_order;
        }
        Poly::new(coeffs)
    }

    /// Code of `g mod modulus`.
    pub fn from_poly(&self, g: &Poly) -> Elem {
        let r = g
            .rem(&self.modulus, &self.base)
            .expect("modulus is nonzero");
        self.pack(&r)
    }

    fn pack(&self, reduced: &Poly) -> Elem {
        reduced
            .coeffs()
            .iter()
            .rev()
            .fold(0, |acc, &c| acc * self.base_order + c)
    }

    /// Embedding of a base element as a constant residue.
    pub fn embed(&self, c: Elem) -> Elem {
        c
    }

    /// The class of the adjoined variable.
    pub fn generator(&self) -> Elem {
        self.from_poly(&Poly::monomial(1))
    }

    fn slow_mul(&self, a: Elem, b: Elem) -> Elem {
        let prod = self.to_poly(a).mul(&self.to_poly(b), &self.base);
        self.from_poly(&prod)
    }

    fn build_tables(&self) -> Tables {
        let n = self.order - 1;
        let primes = prime_factors(n);
        let gen = (1..self.order)
            .find(|&g| primes.iter().all(|&r| self.slow_pow(g, n / r) != 1))
            .expect("multiplicative group of a finite field is cyclic");
        let mut exp = Vec::with_capacity(n as usize);
        let mut log = vec![0u32; self.order as usize];
        let mut x = 1;
        for i in 0..n {
            exp.push(x as u32);
            log[x as usize] = i as u32;
            x = self.slow_mul(x, gen);
        }
        Tables { log, exp }
    }

    fn slow_pow(&self, a: Elem, mut e: u64) -> Elem {
        let (mut base, mut acc) = (a, 1);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.slow_mul(acc, base);
            }
            base = self.slow_mul(base, base);
            e >>= 1;
        }
        acc
    }
}

impl BaseField {
    /// `F_{p^m}` with the first monic irreducible of degree `m` as modulus.
    pub fn with_default_modulus(p: u64, m: usize) -> Result<Self, AlgebraError> {
        let prime = PrimeField::new(p)?;
        let g = first_irreducible(&prime, m).ok_or(AlgebraError::ConstantPolynomial)?;
        Self::new(prime, g)
    }

    /// Base-`p` digits of `a`, lowest first, padded to the extension degree.
    pub fn digits(&self, a: Elem) -> Vec<u64> {
        let p = self.characteristic();
        let mut a = a;
        (0..self.degree)
            .map(|_| {
                let d = a % p;
                a /= p;
                d
            })
            .collect()
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl<B: Field + Clone> Field for ExtensionField<B> {
    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }

    fn order(&self) -> u64 {
        self.order
    }

    fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            return 0;
        }
        match &self.tables {
            Some(t) => {
                let n = t.exp.len();
                let i = t.log[a as usize] as usize + t.log[b as usize] as usize;
                t.exp[if i >= n { i - n } else { i }] as Elem
            }
            None => self.slow_mul(a, b),
        }
    }

    fn inv(&self, a: Elem) -> Result<Elem, AlgebraError> {
        if a == 0 {
            return Err(AlgebraError::ZeroInverse);
        }
        match &self.tables {
            Some(t) => {
                let n = t.exp.len();
                let l = t.log[a as usize] as usize;
                Ok(t.exp[(n - l) % n] as Elem)
            }
            None => {
                let r = self.to_poly(a).inv_mod(&self.modulus, &self.base)?;
                Ok(self.pack(&r))
            }
        }
    }
}
