use crate::algebra::{Elem, Field, QuotientRing};

use super::{FiniteGroup, GroupElement};

/// `SL_n(R)` for a finite field `R`, elements as row-major entry codes.
#[derive(Debug, Clone)]
pub struct SlGroup {
    n: usize,
    ring: QuotientRing,
}

impl SlGroup {
    pub fn new(n: usize, ring: QuotientRing) -> Self {
        Self { n, ring }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ring(&self) -> &QuotientRing {
        &self.ring
    }

    /// Identity plus `s` at `(r, c)`, zero-indexed.
    pub fn elementary(&self, r: usize, c: usize, s: Elem) -> GroupElement {
        assert!(r != c && r < self.n && c < self.n);
        let mut m = self.identity();
        m.0[r * self.n + c] = s;
        m
    }

    pub fn entry(&self, m: &GroupElement, r: usize, c: usize) -> Elem {
        m.0[r * self.n + c]
    }

    pub fn from_rows(&self, rows: &[Vec<Elem>]) -> GroupElement {
        GroupElement(rows.iter().flatten().copied().collect())
    }

    pub fn det(&self, m: &GroupElement) -> Elem {
        let f = &self.ring;
        let n = self.n;
        let mut a = m.0.to_vec();
        let mut det = 1;
        for k in 0..n {
            let Some(piv) = (k..n).find(|&r| a[r * n + k] != 0) else {
                return 0;
            };
            if piv != k {
                for c in 0..n {
                    a.swap(k * n + c, piv * n + c);
                }
                det = f.neg(det);
            }
            let d = a[k * n + k];
            det = f.mul(det, d);
            let dinv = f.inv(d).expect("pivot is nonzero");
            for r in k + 1..n {
                let factor = f.mul(a[r * n + k], dinv);
                if factor == 0 {
                    continue;
                }
                for c in k..n {
                    a[r * n + c] = f.sub(a[r * n + c], f.mul(factor, a[k * n + c]));
                }
            }
        }
        det
    }
}

impl FiniteGroup for SlGroup {
    type Element = GroupElement;

    fn identity(&self) -> GroupElement {
        let n = self.n;
        GroupElement((0..n * n).map(|i| Elem::from(i % (n + 1) == 0)).collect())
    }

    fn mul(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        let n = self.n;
        let f = &self.ring;
        let mut out = vec![0; n * n];
        for r in 0..n {
            for k in 0..n {
                let x = a.0[r * n + k];
                if x == 0 {
                    continue;
                }
                for c in 0..n {
                    let y = b.0[k * n + c];
                    if y != 0 {
                        out[r * n + c] = f.add(out[r * n + c], f.mul(x, y));
                    }
                }
            }
        }
        GroupElement(out.into_boxed_slice())
    }

    /// Gauss-Jordan on `[a | I]`.
    fn inverse(&self, a: &GroupElement) -> GroupElement {
        let n = self.n;
        let f = &self.ring;
        let w = 2 * n;
        let mut m = vec![0; n * w];
        for r in 0..n {
            m[r * w..r * w + n].copy_from_slice(&a.0[r * n..r * n + n]);
            m[r * w + n + r] = 1;
        }
        for k in 0..n {
            let piv = (k..n)
                .find(|&r| m[r * w + k] != 0)
                .expect("element of SL_n is invertible");
            if piv != k {
                for c in 0..w {
                    m.swap(k * w + c, piv * w + c);
                }
            }
            let inv = f.inv(m[k * w + k]).expect("pivot is nonzero");
            for c in 0..w {
                m[k * w + c] = f.mul(m[k * w + c], inv);
            }
            for r in 0..n {
                let factor = m[r * w + k];
                if r == k || factor == 0 {
                    continue;
                }
                for c in 0..w {
                    m[r * w + c] = f.sub(m[r * w + c], f.mul(factor, m[k * w + c]));
                }
            }
        }
        GroupElement(
            (0..n)
                .flat_map(|r| m[r * w + n..r * w + w].to_vec())
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{BaseField, Poly};

    fn sl3_f4() -> SlGroup {
        let k = BaseField::with_default_modulus(2, 1).unwrap();
        let r = QuotientRing::new(k, Poly::new(vec![1, 1, 1])).unwrap();
        SlGroup::new(3, r)
    }

    #[test]
    fn inverse_and_det() {
        let g = sl3_f4();
        let t = g.ring().generator();
        let a = g.mul(&g.elementary(0, 1, t), &g.elementary(2, 0, 3));
        let b = g.mul(&a, &g.elementary(1, 2, 1));
        assert_eq!(g.det(&b), 1);
        assert_eq!(g.mul(&b, &g.inverse(&b)), g.identity());
        assert_eq!(g.mul(&g.inverse(&b), &b), g.identity());
    }

    #[test]
    fn elementary_commutator() {
        // [E + a e_12, E + b e_23] = E + ab e_13
        let g = sl3_f4();
        for a in 1..4 {
            for b in 1..4 {
                let c = g.commutator(&g.elementary(0, 1, a), &g.elementary(1, 2, b));
                assert_eq!(c, g.elementary(0, 2, g.ring().mul(a, b)));
            }
        }
    }
}
