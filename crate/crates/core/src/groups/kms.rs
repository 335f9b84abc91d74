use crate::algebra::{BaseField, Elem, Field, Poly, QuotientRing};
use crate::rootdata::{oriented_pair, CartanMatrix, NodeSet, Rank2Type, StructureConstantTable};

use super::{closure, FiniteGroup, GroupElement, GroupError, SlGroup, Subgroup};

/// `|SL_n(F_q)| = q^{n(n-1)/2} prod_{i=2}^{n} (q^i - 1)`, `None` on overflow.
pub fn sl_order(n: usize, q: u64) -> Option<u128> {
    let q = u128::from(q);
    let mut order = q.checked_pow((n * (n.saturating_sub(1)) / 2) as u32)?;
    for i in 2..=n {
        order = order.checked_mul(q.checked_pow(i as u32)? - 1)?;
    }
    Some(order)
}

/// Image of a positive root of a rank-2 subsystem: `lambda` maps to
/// `sign * lambda * t^t_power` at matrix position `pos`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RootImage {
    pub pos: (usize, usize),
    pub sign: i64,
    pub t_power: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurjectivityReport {
    /// `F_p`-dimension reached at each off-diagonal position, row-major.
    pub dims: Vec<((usize, usize), usize)>,
    pub full_dim: usize,
    pub surjective: bool,
}

/// The map from the affine KMS group of type `A~n` onto `SL_{n+1}(k[t]/(f))`:
/// node `i > 0` sends `u_i(lambda)` to `x_{alpha_i}(lambda)`, node `0` sends
/// it to `x_{-gamma}(lambda t)`.
#[derive(Debug, Clone)]
pub struct KmsMap {
    n: usize,
    group: SlGroup,
    gcm: CartanMatrix,
    t: Elem,
}

impl KmsMap {
    pub fn new(n: usize, k: BaseField, f: Poly) -> Result<Self, GroupError> {
        if n < 2 {
            return Err(GroupError::Invalid(format!("A~{n} needs n >= 2")));
        }
        let ring = QuotientRing::new(k, f)?;
        let t = ring.generator();
        let gcm = CartanMatrix::preset(&format!("A~{n}"))
            .map_err(|e| GroupError::Invalid(e.to_string()))?;
        Ok(Self {
            n,
            group: SlGroup::new(n + 1, ring),
            gcm,
            t,
        })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn group(&self) -> &SlGroup {
        &self.group
    }

    pub fn ring(&self) -> &QuotientRing {
        self.group.ring()
    }

    pub fn base(&self) -> &BaseField {
        self.group.ring().base()
    }

    pub fn gcm(&self) -> &CartanMatrix {
        &self.gcm
    }

    pub fn nodes(&self) -> NodeSet {
        NodeSet::full(self.n + 1)
    }

    /// Matrix position of the root attached to node `i`, zero-indexed.
    pub fn node_position(&self, i: usize) -> (usize, usize) {
        if i == 0 {
            (self.n, 0)
        } else {
            (i - 1, i)
        }
    }

    fn scalar(&self, lambda: Elem, t_power: u32, sign: i64) -> Elem {
        let r = self.ring();
        let v = r.mul(r.embed(lambda), r.pow(self.t, u64::from(t_power)));
        if sign < 0 {
            r.neg(v)
        } else {
            v
        }
    }

    pub fn root_element(&self, pos: (usize, usize), s: Elem) -> GroupElement {
        self.group.elementary(pos.0, pos.1, s)
    }

    /// `phi_f(u_i(lambda))` for `lambda` in `k`.
    pub fn kms_image(&self, i: usize, lambda: Elem) -> GroupElement {
        let t_power = u32::from(i == 0);
        self.root_element(self.node_position(i), self.scalar(lambda, t_power, 1))
    }

    /// Images of `u_i(p^j)`, which generate `phi(U_i)`.
    pub fn node_generators(&self, i: usize) -> Vec<GroupElement> {
        let p = self.base().characteristic();
        (0..self.base().degree())
            .map(|j| self.kms_image(i, p.pow(j as u32)))
            .collect()
    }

    /// `phi(U_J) = <phi(U_j) : j in J>`.
    pub fn local_image(
        &self,
        j: NodeSet,
        budget: usize,
    ) -> Result<Subgroup<GroupElement>, GroupError> {
        let gens: Vec<GroupElement> = j.iter().flat_map(|i| self.node_generators(i)).collect();
        closure(&self.group, &gens, budget)
    }

    /// Root images of the rank-2 subsystem on `{i, j}`, in root order.
    pub fn rank2_root_images(&self, i: usize, j: usize) -> (Rank2Type, Vec<RootImage>) {
        let (a, b) = oriented_pair(&self.gcm, i, j);
        let ty = crate::rootdata::classify_pair(&self.gcm, a, b).expect("A~n is 2-spherical");
        let img = |node: usize| RootImage {
            pos: self.node_position(node),
            sign: 1,
            t_power: u32::from(node == 0),
        };
        let (ia, ib) = (img(a), img(b));
        let mut out = vec![ia, ib];
        if ty == Rank2Type::A2 {
            let t_power = ia.t_power + ib.t_power;
            let sum = if ia.pos.1 == ib.pos.0 {
                RootImage {
                    pos: (ia.pos.0, ib.pos.1),
                    sign: 1,
                    t_power,
                }
            } else {
                RootImage {
                    pos: (ib.pos.0, ia.pos.1),
                    sign: -1,
                    t_power,
                }
            };
            out.push(sum);
        }
        (ty, out)
    }

    pub fn root_image(&self, img: RootImage, lambda: Elem) -> GroupElement {
        self.root_element(img.pos, self.scalar(lambda, img.t_power, img.sign))
    }

    /// Checks the commutator relations of the pair `{i, j}` on the images,
    /// over all `lambda, mu` in `k`. Returns the first violated relation.
    pub fn check_rank2_relations(&self, i: usize, j: usize) -> Result<(), String> {
        let (ty, imgs) = self.rank2_root_images(i, j);
        let table = StructureConstantTable::new(ty);
        let k = self.base();
        for (ra, &ia) in imgs.iter().enumerate() {
            for (rb, &ib) in imgs.iter().enumerate() {
                if ra == rb {
                    continue;
                }
                for s in k.elements() {
                    for t in k.elements() {
                        let lhs = self
                            .group
                            .commutator(&self.root_image(ia, s), &self.root_image(ib, t));
                        let rhs = table.commutator(ra, rb).iter().fold(
                            self.group.identity(),
                            |acc, term| {
                                let v = k.mul(
                                    k.from_int(term.c),
                                    k.mul(k.pow(s, u64::from(term.i)), k.pow(t, u64::from(term.j))),
                                );
                                self.group.mul(&acc, &self.root_image(imgs[term.root], v))
                            },
                        );
                        if lhs != rhs {
                            return Err(format!(
                                "pair ({i},{j}), roots {ra},{rb}, lambda={s}, mu={t}"
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Sound certificate that the node images generate `SL_{n+1}(K)`.
    ///
    /// Tracks for every position `(r, c)` an `F_p`-subspace `S_rc` of `K` with
    /// `x_rc(S_rc)` inside the generated group, closing under
    /// `[x_rs(a), x_sc(b)] = x_rc(ab)`. Elementary matrices generate `SL` over
    /// a field, so full subspaces everywhere imply surjectivity.
    pub fn surjectivity(&self) -> SurjectivityReport {
        let size = self.n + 1;
        let ring = self.ring();
        let p = ring.characteristic();
        let full_dim = ring.degree() * ring.base().degree();
        let mut spans: Vec<Span> = (0..size * size).map(|_| Span::new(p, full_dim)).collect();
        for i in 0..=self.n {
            let (r, c) = self.node_position(i);
            for g in self.node_generators(i) {
                spans[r * size + c].insert(self.group.entry(&g, r, c));
            }
        }
        let mut changed = true;
        while changed {
            changed = false;
            for r in 0..size {
                for c in 0..size {
                    if r == c || spans[r * size + c].dim() == full_dim {
                        continue;
                    }
                    for s in 0..size {
                        if s == r || s == c {
                            continue;
                        }
                        let left = spans[r * size + s].basis_codes();
                        let right = spans[s * size + c].basis_codes();
                        for &a in &left {
                            for &b in &right {
                                changed |= spans[r * size + c].insert(ring.mul(a, b));
                            }
                        }
                    }
                }
            }
        }
        let dims: Vec<((usize, usize), usize)> = (0..size)
            .flat_map(|r| (0..size).filter(move |&c| c != r).map(move |c| (r, c)))
            .map(|(r, c)| ((r, c), spans[r * size + c].dim()))
            .collect();
        let surjective = dims.iter().all(|&(_, d)| d == full_dim);
        SurjectivityReport {
            dims,
            full_dim,
            surjective,
        }
    }
}

/// Row-echelon basis of an `F_p`-subspace of digit vectors.
#[derive(Debug, Clone)]
struct Span {
    p: u64,
    len: usize,
    rows: Vec<(usize, Vec<u64>)>,
}

impl Span {
    fn new(p: u64, len: usize) -> Self {
        Self {
            p,
            len,
            rows: Vec::new(),
        }
    }

    fn dim(&self) -> usize {
        self.rows.len()
    }

    fn digits(&self, mut code: Elem) -> Vec<u64> {
        (0..self.len)
            .map(|_| {
                let d = code % self.p;
                code /= self.p;
                d
            })
            .collect()
    }

    fn basis_codes(&self) -> Vec<Elem> {
        self.rows
            .iter()
            .map(|(_, v)| v.iter().rev().fold(0, |acc, &d| acc * self.p + d))
            .collect()
    }

    /// Adds `code` to the span; `true` if the dimension grew.
    fn insert(&mut self, code: Elem) -> bool {
        let p = self.p;
        let mut v = self.digits(code);
        for (piv, row) in &self.rows {
            let c = v[*piv];
            if c != 0 {
                for (x, &y) in v.iter_mut().zip(row) {
                    *x = (*x + (p - c) * y) % p;
                }
            }
        }
        let Some(piv) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = mod_inv(v[piv], p);
        for x in v.iter_mut() {
            *x = *x * inv % p;
        }
        for (_, row) in self.rows.iter_mut() {
            let c = row[piv];
            if c != 0 {
                for (x, &y) in row.iter_mut().zip(&v) {
                    *x = (*x + (p - c) * y) % p;
                }
            }
        }
        self.rows.push((piv, v));
        true
    }
}

fn mod_inv(a: u64, p: u64) -> u64 {
    (1..p)
        .find(|&x| a * x % p == 1)
        .expect("nonzero residue mod a prime")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sl3(p: u64, m: usize, f: Vec<Elem>) -> KmsMap {
        KmsMap::new(
            2,
            BaseField::with_default_modulus(p, m).unwrap(),
            Poly::new(f),
        )
        .unwrap()
    }

    #[test]
    fn order_formula() {
        assert_eq!(sl_order(3, 4), Some(60480));
        assert_eq!(sl_order(2, 3), Some(24));
        assert_eq!(sl_order(1, 7), Some(1));
    }

    #[test]
    fn images_match_worked_example() {
        let phi = sl3(2, 1, vec![1, 1, 1]);
        let g = phi.group();
        let t = phi.ring().generator();
        assert_eq!(phi.kms_image(1, 1), g.elementary(0, 1, 1));
        assert_eq!(phi.kms_image(2, 1), g.elementary(1, 2, 1));
        assert_eq!(phi.kms_image(0, 1), g.elementary(2, 0, t));
        assert_eq!(phi.kms_image(0, 0), g.identity());
        let (_, imgs) = phi.rank2_root_images(0, 1);
        assert_eq!(
            imgs[2],
            RootImage {
                pos: (2, 1),
                sign: 1,
                t_power: 1
            }
        );
        let (_, imgs) = phi.rank2_root_images(0, 2);
        assert_eq!(
            imgs[2],
            RootImage {
                pos: (1, 0),
                sign: -1,
                t_power: 1
            }
        );
        let (_, imgs) = phi.rank2_root_images(1, 2);
        assert_eq!(
            imgs[2],
            RootImage {
                pos: (0, 2),
                sign: 1,
                t_power: 0
            }
        );
    }

    #[test]
    fn relations_hold_on_images() {
        for (p, f) in [(2, vec![1, 1, 1]), (3, vec![1, 0, 1]), (5, vec![2, 0, 1])] {
            let phi = sl3(p, 1, f);
            for (i, j) in [(0, 1), (0, 2), (1, 2)] {
                phi.check_rank2_relations(i, j).unwrap();
            }
        }
    }

    #[test]
    fn local_group_orders() {
        let phi = sl3(2, 1, vec![1, 1, 1]);
        for j in [
            NodeSet::from_iter([1, 2]),
            NodeSet::from_iter([0, 1]),
            NodeSet::from_iter([0, 2]),
        ] {
            assert_eq!(phi.local_image(j, 1 << 20).unwrap().order(), 8);
        }
        assert_eq!(
            phi.local_image(NodeSet::single(0), 1 << 20)
                .unwrap()
                .order(),
            2
        );
    }

    #[test]
    fn surjectivity_certificate() {
        assert!(sl3(2, 1, vec![1, 1, 1]).surjectivity().surjective);
        assert!(sl3(5, 1, vec![1, 1, 0, 1]).surjectivity().surjective);
        // deg f = 1 still reaches SL_3(k)
        assert!(sl3(3, 1, vec![1, 1]).surjectivity().surjective);
    }

    #[test]
    fn a3_relations() {
        let phi = KmsMap::new(
            3,
            BaseField::with_default_modulus(3, 1).unwrap(),
            Poly::new(vec![1, 0, 1]),
        )
        .unwrap();
        for i in 0..4 {
            for j in i + 1..4 {
                phi.check_rank2_relations(i, j).unwrap();
            }
        }
        assert!(phi.surjectivity().surjective);
    }
}
