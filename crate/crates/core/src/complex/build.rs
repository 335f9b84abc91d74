use std::collections::hash_map::Entry;

use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use crate::groups::{
    closure, coset_labels, intersect, CosetLabels, FiniteGroup, GroupElement, Subgroup,
};
use crate::rootdata::NodeSet;

use super::{ComplexError, ComplexMeta, CosetComplex};

/// Coset labels of every element of `G` for each `H_i`, with the vertex-id
/// offset of each type.
#[derive(Debug, Clone)]
pub struct CosetIndex {
    pub labels: Vec<CosetLabels>,
    pub offsets: Vec<u32>,
}

impl CosetIndex {
    /// Vertex id of `g H_i`, where `g` has index `idx` in `G`.
    pub fn vertex(&self, i: usize, idx: usize) -> u32 {
        self.offsets[i] + self.labels[i].label[idx]
    }
}

/// `CC(G, (H_0, .., H_d))`: vertices are the cosets `gH_i`, keyed by their
/// minimal element, and each `g` spans the face `{gH_0, .., gH_d}`.
pub fn build_complex<G: FiniteGroup<Element = GroupElement>>(
    group: &G,
    g: &Subgroup<GroupElement>,
    hs: &[Subgroup<GroupElement>],
) -> Result<(CosetComplex, CosetIndex), ComplexError> {
    let labels = hs
        .iter()
        .map(|h| coset_labels(group, g, h))
        .collect::<Result<Vec<_>, _>>()?;
    let mut offsets = Vec::with_capacity(hs.len());
    let mut vertex_type = Vec::new();
    let mut vertex_key = Vec::new();
    for (i, l) in labels.iter().enumerate() {
        offsets.push(vertex_type.len() as u32);
        for &rep in &l.reps {
            vertex_type.push(i as u8);
            vertex_key.push(g.elements()[rep].key_bytes());
        }
    }
    let index = CosetIndex { labels, offsets };
    let faces = (0..g.order())
        .map(|idx| (0..hs.len()).map(|i| index.vertex(i, idx)).collect())
        .collect();
    let complex = CosetComplex::from_faces(
        (0..hs.len()).collect(),
        vertex_type,
        vertex_key,
        faces,
        ComplexMeta {
            group_order: g.order() as u128,
            params: Vec::new(),
        },
    );
    Ok((complex, index))
}

/// `<H_0 ∪ .. ∪ H_d> = G`.
pub fn subgroups_generate<G: FiniteGroup<Element = GroupElement>>(
    group: &G,
    g: &Subgroup<GroupElement>,
    hs: &[Subgroup<GroupElement>],
    budget: usize,
) -> Result<bool, ComplexError> {
    let gens: Vec<GroupElement> = hs
        .iter()
        .flat_map(|h| {
            if h.generators.is_empty() {
                h.elements().to_vec()
            } else {
                h.generators.clone()
            }
        })
        .collect();
    Ok(closure(group, &gens, budget)?.order() == g.order())
}

/// `H_0 ∩ .. ∩ H_d = {1}` and one maximal face per group element.
pub fn sharp_transitivity_check(
    group_order: usize,
    hs: &[Subgroup<GroupElement>],
    complex: &CosetComplex,
) -> bool {
    let Some(first) = hs.first() else {
        return false;
    };
    let meet = hs[1..]
        .iter()
        .fold(first.clone(), |acc, h| intersect(&acc, h));
    meet.order() == 1 && complex.maximal_faces().len() == group_order
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkIsoReport {
    pub sampled: usize,
    pub mismatches: usize,
    pub first_mismatch: Option<Vec<u32>>,
}

fn invariants(x: &CosetComplex) -> (Vec<usize>, Vec<usize>) {
    let counts = (-1..=x.dim()).map(|k| x.faces(k).len()).collect();
    let mut degrees: Vec<usize> = (0..x.num_vertices() as u32)
        .map(|v| x.containing(&[v]).len())
        .collect();
    degrees.sort_unstable();
    (counts, degrees)
}

/// Compares, on `samples` seeded random non-maximal faces `sigma` of type `T`,
/// the link of `sigma` with `CC(H_T, (H_T ∩ H_i)_{i ∉ T})` by face counts in
/// every dimension and sorted vertex degrees.
pub fn link_isomorphism_check<G: FiniteGroup<Element = GroupElement>>(
    group: &G,
    hs: &[Subgroup<GroupElement>],
    complex: &CosetComplex,
    samples: usize,
    seed: u64,
) -> Result<LinkIsoReport, ComplexError> {
    let d = complex.rank();
    let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
    let mut expected: std::collections::HashMap<NodeSet, (Vec<usize>, Vec<usize>)> =
        std::collections::HashMap::new();
    let mut report = LinkIsoReport {
        sampled: 0,
        mismatches: 0,
        first_mismatch: None,
    };
    for _ in 0..samples {
        let f = &complex.maximal_faces()[rng.gen_range(0..complex.maximal_faces().len())];
        let size = rng.gen_range(0..d);
        let mut positions: Vec<usize> = (0..d).collect();
        for i in 0..size {
            let j = rng.gen_range(i..d);
            positions.swap(i, j);
        }
        let mut sigma: Vec<u32> = positions[..size].iter().map(|&p| f[p]).collect();
        sigma.sort_unstable();
        let t: NodeSet = sigma.iter().map(|&v| complex.vertex_type(v)).collect();
        if let Entry::Vacant(e) = expected.entry(t) {
            let h_t = t
                .iter()
                .fold(None::<Subgroup<GroupElement>>, |acc, i| {
                    Some(match acc {
                        None => hs[i].clone(),
                        Some(a) => intersect(&a, &hs[i]),
                    })
                })
                .unwrap_or_else(|| {
                    // H_emptyset = G, the group generated by all H_i
                    let gens: Vec<GroupElement> =
                        hs.iter().flat_map(|h| h.elements().to_vec()).collect();
                    closure(group, &gens, usize::MAX).expect("finite group")
                });
            let rest: Vec<Subgroup<GroupElement>> = (0..d)
                .filter(|&i| !t.contains(i))
                .map(|i| intersect(&h_t, &hs[i]))
                .collect();
            let (direct, _) = build_complex(group, &h_t, &rest)?;
            e.insert(invariants(&direct));
        }
        let link = complex.link(&sigma)?;
        report.sampled += 1;
        if invariants(&link) != expected[&t] {
            report.mismatches += 1;
            report.first_mismatch.get_or_insert(sigma);
        }
    }
    Ok(report)
}

/// For `samples` seeded random `g`, checks that `xH_i -> gxH_i` preserves
/// types and maps every maximal face to a maximal face. Returns the number
/// of elements for which it fails.
pub fn action_check<G: FiniteGroup<Element = GroupElement>>(
    group: &G,
    g: &Subgroup<GroupElement>,
    index: &CosetIndex,
    complex: &CosetComplex,
    samples: usize,
    seed: u64,
) -> usize {
    let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
    let picks: Vec<usize> = (0..samples).map(|_| rng.gen_range(0..g.order())).collect();
    let reps: Vec<usize> = index
        .labels
        .iter()
        .flat_map(|l| l.reps.iter().copied())
        .collect();
    picks
        .par_iter()
        .filter(|&&pick| {
            let x = &g.elements()[pick];
            let image: Vec<u32> = (0..complex.num_vertices())
                .map(|v| {
                    let ty = complex.vertex_type(v as u32);
                    let y = group.mul(x, &g.elements()[reps[v]]);
                    let idx = g.position(&y).expect("G is closed");
                    index.vertex(ty, idx)
                })
                .collect();
            let types_ok = (0..complex.num_vertices())
                .all(|v| complex.vertex_type(image[v]) == complex.vertex_type(v as u32));
            let faces_ok = complex.maximal_faces().iter().all(|f| {
                let mut mapped: Vec<u32> = f.iter().map(|&v| image[v as usize]).collect();
                mapped.sort_unstable();
                complex
                    .maximal_faces()
                    .binary_search(&mapped.into_boxed_slice())
                    .is_ok()
            });
            !(types_ok && faces_ok)
        })
        .count()
}
