use std::collections::HashSet;

use rayon::prelude::*;

use super::{FiniteGroup, GroupError};

/// Default cap on the number of elements enumerated by [`closure`].
pub const DEFAULT_BUDGET: usize = 1 << 27;

/// A fully enumerated subgroup, elements sorted by canonical key.
#[derive(Debug, Clone)]
pub struct Subgroup<E> {
    pub generators: Vec<E>,
    elements: Vec<E>,
}

/// Equality of element sets; generators are ignored.
impl<E: PartialEq> PartialEq for Subgroup<E> {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl<E: Eq> Eq for Subgroup<E> {}

impl<E: Ord + Clone> Subgroup<E> {
    /// Wraps an already closed element set.
    pub fn from_elements(generators: Vec<E>, mut elements: Vec<E>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        Self {
            generators,
            elements,
        }
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, e: &E) -> bool {
        self.elements.binary_search(e).is_ok()
    }

    pub fn position(&self, e: &E) -> Option<usize> {
        self.elements.binary_search(e).ok()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.elements.iter().all(|e| other.contains(e))
    }
}

/// Breadth-first closure of `gens` under left multiplication.
pub fn closure<G: FiniteGroup>(
    group: &G,
    gens: &[G::Element],
    budget: usize,
) -> Result<Subgroup<G::Element>, GroupError> {
    let id = group.identity();
    let mut seen: HashSet<G::Element> = HashSet::new();
    seen.insert(id.clone());
    let mut frontier = vec![id];
    while !frontier.is_empty() {
        let products: Vec<G::Element> = frontier
            .par_iter()
            .flat_map_iter(|x| gens.iter().map(move |g| group.mul(g, x)))
            .collect();
        frontier = Vec::new();
        for y in products {
            if !seen.contains(&y) {
                if seen.len() >= budget {
                    return Err(GroupError::Budget {
                        limit: budget,
                        partial: seen.len(),
                    });
                }
                seen.insert(y.clone());
                frontier.push(y);
            }
        }
    }
    Ok(Subgroup::from_elements(
        gens.to_vec(),
        seen.into_iter().collect(),
    ))
}

pub fn intersect<E: Ord + Clone>(s: &Subgroup<E>, t: &Subgroup<E>) -> Subgroup<E> {
    let (small, large) = if s.order() <= t.order() {
        (s, t)
    } else {
        (t, s)
    };
    let elements = small
        .elements
        .iter()
        .filter(|e| large.contains(e))
        .cloned()
        .collect();
    Subgroup::from_elements(Vec::new(), elements)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IpOutcome<E> {
    pub holds: bool,
    /// An element of the symmetric difference between the computed and the
    /// expected intersection.
    pub witness: Option<E>,
    pub intersection_order: usize,
    pub expected_order: usize,
}

/// Compares `S ∩ T` with the subgroup it is expected to equal.
pub fn ip_check<E: Ord + Clone>(
    s: &Subgroup<E>,
    t: &Subgroup<E>,
    expected: &Subgroup<E>,
) -> IpOutcome<E> {
    let inter = intersect(s, t);
    let witness = inter
        .elements
        .iter()
        .find(|e| !expected.contains(e))
        .or_else(|| expected.elements.iter().find(|e| !inter.contains(e)))
        .cloned();
    IpOutcome {
        holds: witness.is_none(),
        witness,
        intersection_order: inter.order(),
        expected_order: expected.order(),
    }
}

/// `|image| == q^{num_roots}`: the image of a local group has the order of
/// the abstract group, so the map is injective on it.
pub fn local_injectivity_check<E>(image: &Subgroup<E>, q: u64, num_roots: usize) -> bool {
    u128::from(q).checked_pow(num_roots as u32) == Some(image.elements.len() as u128)
}

/// Left coset partition `G/H` of an enumerated group.
#[derive(Debug, Clone)]
pub struct CosetLabels {
    /// Coset id of every element of `G`, indexed like `G`'s sorted elements.
    pub label: Vec<u32>,
    /// Index in `G` of each coset's minimal element.
    pub reps: Vec<usize>,
}

/// Labels the left cosets `gH`. Walking `G` in key order makes the first
/// element seen in each coset its minimum.
pub fn coset_labels<G: FiniteGroup>(
    group: &G,
    g: &Subgroup<G::Element>,
    h: &Subgroup<G::Element>,
) -> Result<CosetLabels, GroupError> {
    if h.order() == 0 || g.order() % h.order() != 0 {
        return Err(GroupError::Integrity(format!(
            "subgroup order {} does not divide group order {}",
            h.order(),
            g.order()
        )));
    }
    let mut label = vec![u32::MAX; g.order()];
    let mut reps = Vec::with_capacity(g.order() / h.order());
    for (idx, x) in g.elements.iter().enumerate() {
        if label[idx] != u32::MAX {
            continue;
        }
        let id = reps.len() as u32;
        reps.push(idx);
        let members: Vec<usize> = h
            .elements
            .par_iter()
            .map(|y| g.position(&group.mul(x, y)))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| GroupError::Integrity("coset leaves the enumerated group".into()))?;
        for m in members {
            if label[m] != u32::MAX {
                return Err(GroupError::Integrity("cosets overlap".into()));
            }
            label[m] = id;
        }
    }
    Ok(CosetLabels { label, reps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::BaseField;
    use crate::groups::{GroupElement, UnipotentGroup};
    use crate::rootdata::Rank2Type;

    fn heis(q_p: u64) -> UnipotentGroup {
        UnipotentGroup::new(
            Rank2Type::A2,
            BaseField::with_default_modulus(q_p, 1).unwrap(),
        )
    }

    #[test]
    fn trivial_closure() {
        let u = heis(2);
        let s = closure(&u, &[u.identity()], DEFAULT_BUDGET).unwrap();
        assert_eq!(s.order(), 1);
    }

    #[test]
    fn budget_error_reports_partial() {
        let u = heis(3);
        let gens = vec![u.root_element(0, 1), u.root_element(1, 1)];
        match closure(&u, &gens, 5) {
            Err(GroupError::Budget { limit: 5, partial }) => assert_eq!(partial, 5),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn cosets_and_intersections() {
        let u = heis(3);
        let all = u.all_elements();
        let ua = u.root_subgroup(0);
        let ub = u.root_subgroup(1);
        let labels = coset_labels(&u, &all, &ua).unwrap();
        assert_eq!(labels.reps.len(), 9);
        assert_eq!(labels.reps[0], 0);
        assert_eq!(intersect(&ua, &ub).order(), 1);
        assert_eq!(intersect(&all, &ua), ua);
        let one = Subgroup::from_elements(vec![], vec![u.identity()]);
        assert!(ip_check(&ua, &ub, &one).holds);
        let out = ip_check(&all, &ua, &one);
        assert!(!out.holds);
        assert!(ua.contains(out.witness.as_ref().unwrap()));
        assert!(local_injectivity_check(&all, 3, 3));
        let whole = coset_labels(&u, &all, &all).unwrap();
        assert_eq!(whole.reps, vec![0]);
        assert_eq!(all.elements()[0], GroupElement(vec![0; 3].into()));
    }

    #[test]
    fn non_divisor_is_integrity_error() {
        let u = heis(2);
        let all = u.all_elements();
        let bogus = Subgroup::from_elements(vec![], all.elements()[..3].to_vec());
        assert!(matches!(
            coset_labels(&u, &all, &bogus),
            Err(GroupError::Integrity(_))
        ));
    }
}
