use crate::algebra::{BaseField, Elem, Field};
use crate::rootdata::{Rank2Type, StructureConstantTable};

use super::{FiniteGroup, GroupElement, Subgroup};

/// The unipotent group `U(k)` of a rank-2 root system. Elements are the
/// coordinates `(lambda_r)` of the normal form `prod_r u_r(lambda_r)` taken in
/// root order; products are collected with the commutator relations.
#[derive(Debug, Clone)]
pub struct UnipotentGroup {
    field: BaseField,
    table: StructureConstantTable,
    /// Structure constants as field elements, by (pair, term).
    constants: Vec<Vec<Vec<Elem>>>,
}

impl UnipotentGroup {
    pub fn new(ty: Rank2Type, field: BaseField) -> Self {
        let table = StructureConstantTable::new(ty);
        let n = table.roots().len();
        let constants = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| {
                        table
                            .commutator(a, b)
                            .iter()
                            .map(|t| field.from_int(t.c))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Self {
            field,
            table,
            constants,
        }
    }

    pub fn rank2_type(&self) -> Rank2Type {
        self.table.rank2_type()
    }

    pub fn field(&self) -> &BaseField {
        &self.field
    }

    pub fn table(&self) -> &StructureConstantTable {
        &self.table
    }

    pub fn num_roots(&self) -> usize {
        self.table.roots().len()
    }

    pub fn order(&self) -> u128 {
        u128::from(self.field.order()).pow(self.num_roots() as u32)
    }

    /// `u_r(lambda)` for the root with index `r` in root order.
    pub fn root_element(&self, r: usize, lambda: Elem) -> GroupElement {
        let mut c = vec![0; self.num_roots()];
        c[r] = lambda;
        GroupElement(c.into_boxed_slice())
    }

    /// `U_r = { u_r(lambda) }`.
    pub fn root_subgroup(&self, r: usize) -> Subgroup<GroupElement> {
        let elements = self
            .field
            .elements()
            .map(|l| self.root_element(r, l))
            .collect();
        Subgroup::from_elements(self.additive_generators(r), elements)
    }

    /// `u_r(p^j)` for `j < m`: generators of `U_r` as an abelian group.
    pub fn additive_generators(&self, r: usize) -> Vec<GroupElement> {
        let p = self.field.characteristic();
        (0..self.field.degree())
            .map(|j| self.root_element(r, p.pow(j as u32)))
            .collect()
    }

    /// Every normal form, in key order.
    pub fn all_elements(&self) -> Subgroup<GroupElement> {
        let q = self.field.order();
        let n = self.num_roots();
        let total = q.pow(n as u32);
        let elements = (0..total)
            .map(|mut idx| {
                let mut c = vec![0; n];
                for slot in c.iter_mut().rev() {
                    *slot = idx % q;
                    idx /= q;
                }
                GroupElement(c.into_boxed_slice())
            })
            .collect();
        let gens = [0, 1]
            .iter()
            .flat_map(|&r| self.additive_generators(r))
            .collect();
        Subgroup::from_elements(gens, elements)
    }

    fn term_value(&self, a: usize, b: usize, k: usize, s: Elem, t: Elem) -> (usize, Elem) {
        let term = self.table.commutator(a, b)[k];
        let f = &self.field;
        let v = f.mul(
            self.constants[a][b][k],
            f.mul(f.pow(s, u64::from(term.i)), f.pow(t, u64::from(term.j))),
        );
        (term.root, v)
    }

    /// Rewrites a word of root factors to normal form: equal neighbours merge,
    /// and an inversion `u_B(s) u_A(t)` with `A < B` becomes
    /// `u_A(t) u_B(s) [u_B(s), u_A(t)]`.
    pub fn collect(&self, mut word: Vec<(usize, Elem)>) -> GroupElement {
        let f = &self.field;
        word.retain(|&(_, v)| v != 0);
        let mut i = 0;
        while i + 1 < word.len() {
            let (b, s) = word[i];
            let (a, t) = word[i + 1];
            if b < a {
                i += 1;
                continue;
            }
            if a == b {
                let v = f.add(s, t);
                if v == 0 {
                    word.drain(i..i + 2);
                } else {
                    word[i] = (a, v);
                    word.remove(i + 1);
                }
            } else {
                word[i] = (a, t);
                word[i + 1] = (b, s);
                let extra: Vec<(usize, Elem)> = (0..self.table.commutator(b, a).len())
                    .map(|k| self.term_value(b, a, k, s, t))
                    .filter(|&(_, v)| v != 0)
                    .collect();
                word.splice(i + 2..i + 2, extra);
            }
            i = i.saturating_sub(1);
        }
        let mut c = vec![0; self.num_roots()];
        for (r, v) in word {
            c[r] = v;
        }
        GroupElement(c.into_boxed_slice())
    }

    fn word(&self, x: &GroupElement) -> impl Iterator<Item = (usize, Elem)> + '_ {
        x.0.iter()
            .copied()
            .enumerate()
            .filter(|&(_, v)| v != 0)
            .collect::<Vec<_>>()
            .into_iter()
    }
}

impl FiniteGroup for UnipotentGroup {
    type Element = GroupElement;

    fn identity(&self) -> GroupElement {
        GroupElement(vec![0; self.num_roots()].into_boxed_slice())
    }

    fn mul(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.collect(self.word(a).chain(self.word(b)).collect())
    }

    fn inverse(&self, a: &GroupElement) -> GroupElement {
        let mut w: Vec<(usize, Elem)> = self.word(a).map(|(r, v)| (r, self.field.neg(v))).collect();
        w.reverse();
        self.collect(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{closure, DEFAULT_BUDGET};

    fn group(ty: Rank2Type, p: u64, m: usize) -> UnipotentGroup {
        UnipotentGroup::new(ty, BaseField::with_default_modulus(p, m).unwrap())
    }

    #[test]
    fn orders() {
        assert_eq!(group(Rank2Type::A2, 2, 1).all_elements().order(), 8);
        assert_eq!(group(Rank2Type::A1xA1, 2, 2).all_elements().order(), 16);
        assert_eq!(group(Rank2Type::G2, 3, 1).all_elements().order(), 729);
    }

    #[test]
    fn simple_root_groups_generate() {
        let generated = |ty, p, m| {
            let u = group(ty, p, m);
            let gens: Vec<_> = [0, 1]
                .iter()
                .flat_map(|&r| u.additive_generators(r))
                .collect();
            closure(&u, &gens, DEFAULT_BUDGET).unwrap().order() as u128 == u.order()
        };
        for (ty, p, m) in [
            (Rank2Type::A2, 2, 1),
            (Rank2Type::A2, 3, 1),
            (Rank2Type::B2, 3, 1),
            (Rank2Type::B2, 2, 2),
            (Rank2Type::G2, 5, 1),
            (Rank2Type::G2, 2, 2),
        ] {
            assert!(generated(ty, p, m), "{ty} p={p} m={m}");
        }
        // the small-field exceptions B2(2), G2(2), G2(3)
        assert!(!generated(Rank2Type::B2, 2, 1));
        assert!(!generated(Rank2Type::G2, 2, 1));
        assert!(!generated(Rank2Type::G2, 3, 1));
    }

    #[test]
    fn associativity_exhaustive_small() {
        for (ty, p) in [
            (Rank2Type::A2, 2),
            (Rank2Type::A2, 3),
            (Rank2Type::B2, 2),
            (Rank2Type::B2, 3),
        ] {
            let u = group(ty, p, 1);
            let all = u.all_elements();
            for x in all.elements() {
                for y in all.elements() {
                    let xy = u.mul(x, y);
                    for z in all.elements() {
                        assert_eq!(u.mul(&xy, z), u.mul(x, &u.mul(y, z)), "{ty} p={p}");
                    }
                }
            }
        }
    }

    #[test]
    fn associativity_sampled() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for ty in [Rank2Type::A2, Rank2Type::B2, Rank2Type::G2] {
            for (p, m) in [(2, 1), (3, 1), (2, 2), (5, 1)] {
                let u = group(ty, p, m);
                let q = u.field().order();
                let mut pick =
                    || GroupElement((0..u.num_roots()).map(|_| rng.gen_range(0..q)).collect());
                for _ in 0..1000 {
                    let (x, y, z) = (pick(), pick(), pick());
                    assert_eq!(
                        u.mul(&u.mul(&x, &y), &z),
                        u.mul(&x, &u.mul(&y, &z)),
                        "{ty} q={q}"
                    );
                }
            }
        }
    }

    #[test]
    fn a1xa1_is_abelian() {
        let u = group(Rank2Type::A1xA1, 2, 2);
        let all = u.all_elements();
        for x in all.elements() {
            for y in all.elements() {
                assert_eq!(u.mul(x, y), u.mul(y, x));
            }
        }
    }

    #[test]
    fn commutator_of_simple_roots() {
        let u = group(Rank2Type::A2, 5, 1);
        let c = u.commutator(&u.root_element(0, 2), &u.root_element(1, 3));
        assert_eq!(c, u.root_element(2, 1));
    }

    #[test]
    fn inverses() {
        for ty in [Rank2Type::A2, Rank2Type::B2, Rank2Type::G2] {
            let u = group(ty, 3, 1);
            for x in u.all_elements().elements().iter().step_by(7) {
                assert_eq!(u.mul(x, &u.inverse(x)), u.identity());
                assert_eq!(u.mul(&u.inverse(x), x), u.identity());
            }
        }
    }
}
