//! Coset complexes `CC(G, (H_i))`: typed vertices, maximal faces, the
//! balanced weight `w(t) = (d-k)! * #{maximal faces containing t}`, links and
//! the structural checks on them.

mod build;
mod graph;
mod io;

pub use build::{
    action_check, build_complex, link_isomorphism_check, sharp_transitivity_check,
    subgroups_generate, CosetIndex, LinkIsoReport,
};
pub use graph::{UnionFind, WeightedGraph};
pub use io::{read_complex, write_complex};

use std::collections::HashMap;

use thiserror::Error;

use crate::groups::GroupError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("{0:?} is not a face of the complex")]
    NotAFace(Vec<u32>),
    #[error("malformed complex file, line {line}: {reason}")]
    Format { line: usize, reason: String },
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Group parameters carried along with a complex.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ComplexMeta {
    pub group_order: u128,
    pub params: Vec<(String, String)>,
}

/// A pure, partite simplicial complex given by its maximal faces.
///
/// Vertex ids are grouped by type in the order of `types`, so each sorted
/// maximal face lists one vertex per type in that order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetComplex {
    types: Vec<usize>,
    vertex_type: Vec<u8>,
    vertex_key: Vec<Vec<u8>>,
    faces: Vec<Box<[u32]>>,
    incidence: Vec<Vec<u32>>,
    pub meta: ComplexMeta,
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

impl CosetComplex {
    /// `vertex_type[v]` indexes into `types`; faces are deduplicated.
    pub fn from_faces(
        types: Vec<usize>,
        vertex_type: Vec<u8>,
        vertex_key: Vec<Vec<u8>>,
        faces: Vec<Box<[u32]>>,
        meta: ComplexMeta,
    ) -> Self {
        let mut faces: Vec<Box<[u32]>> = faces
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f
            })
            .collect();
        faces.sort_unstable();
        faces.dedup();
        let mut incidence = vec![Vec::new(); vertex_type.len()];
        for (id, f) in faces.iter().enumerate() {
            for &v in f.iter() {
                incidence[v as usize].push(id as u32);
            }
        }
        Self {
            types,
            vertex_type,
            vertex_key,
            faces,
            incidence,
            meta,
        }
    }

    /// Number of vertices in a maximal face.
    pub fn rank(&self) -> usize {
        self.types.len()
    }

    /// `rank - 1`; `-1` for the complex `{emptyset}`.
    pub fn dim(&self) -> isize {
        self.rank() as isize - 1
    }

    pub fn types(&self) -> &[usize] {
        &self.types
    }

    pub fn num_vertices(&self) -> usize {
        self.vertex_type.len()
    }

    /// Type label of `v`.
    pub fn vertex_type(&self, v: u32) -> usize {
        self.types[self.vertex_type[v as usize] as usize]
    }

    pub fn vertex_key(&self, v: u32) -> &[u8] {
        &self.vertex_key[v as usize]
    }

    pub fn vertices_of_type(&self, ty: usize) -> impl Iterator<Item = u32> + '_ {
        (0..self.num_vertices() as u32).filter(move |&v| self.vertex_type(v) == ty)
    }

    pub fn maximal_faces(&self) -> &[Box<[u32]>] {
        &self.faces
    }

    /// Ids of the maximal faces containing `tau`.
    pub fn containing(&self, tau: &[u32]) -> Vec<u32> {
        let Some(&pivot) = tau
            .iter()
            .min_by_key(|&&v| self.incidence.get(v as usize).map_or(0, Vec::len))
        else {
            return (0..self.faces.len() as u32).collect();
        };
        let Some(list) = self.incidence.get(pivot as usize) else {
            return Vec::new();
        };
        list.iter()
            .copied()
            .filter(|&f| {
                let face = &self.faces[f as usize];
                tau.iter().all(|v| face.binary_search(v).is_ok())
            })
            .collect()
    }

    /// `X(k)` as sorted vertex tuples; `X(-1) = {emptyset}`.
    pub fn faces(&self, k: isize) -> Vec<Vec<u32>> {
        if k < -1 || k > self.dim() {
            return Vec::new();
        }
        let size = (k + 1) as usize;
        let mut out: Vec<Vec<u32>> = Vec::new();
        for f in &self.faces {
            for_each_subset(f, size, |s| out.push(s.to_vec()));
        }
        out.sort_unstable();
        out.dedup();
        if size == 0 && out.is_empty() {
            out.push(Vec::new());
        }
        out
    }

    /// Maximal-face counts of every face of size `size`.
    pub fn face_counts(&self, size: usize) -> HashMap<Vec<u32>, u64> {
        let mut counts: HashMap<Vec<u32>, u64> = HashMap::new();
        for f in &self.faces {
            for_each_subset(f, size, |s| *counts.entry(s.to_vec()).or_insert(0) += 1);
        }
        counts
    }

    /// `(d - k)! * #{sigma in X(d) : tau ⊆ sigma}` for `tau` in `X(k)`.
    pub fn weight(&self, tau: &[u32]) -> Result<u128, ComplexError> {
        let mut tau = tau.to_vec();
        tau.sort_unstable();
        let count = self.containing(&tau).len();
        if count == 0 {
            return Err(ComplexError::NotAFace(tau));
        }
        Ok(factorial(self.rank() - tau.len()) * count as u128)
    }

    /// `{ f \ sigma : sigma ⊆ f }` with vertices renumbered in id order.
    pub fn link(&self, sigma: &[u32]) -> Result<CosetComplex, ComplexError> {
        let mut sigma = sigma.to_vec();
        sigma.sort_unstable();
        let ids = self.containing(&sigma);
        if ids.is_empty() {
            return Err(ComplexError::NotAFace(sigma));
        }
        let sigma_types: Vec<u8> = sigma
            .iter()
            .map(|&v| self.vertex_type[v as usize])
            .collect();
        let keep: Vec<u8> = (0..self.rank() as u8)
            .filter(|t| !sigma_types.contains(t))
            .collect();
        let mut verts: Vec<u32> = ids
            .iter()
            .flat_map(|&f| self.faces[f as usize].iter().copied())
            .filter(|v| sigma.binary_search(v).is_err())
            .collect();
        verts.sort_unstable();
        verts.dedup();
        let local = |v: u32| verts.binary_search(&v).expect("vertex of the link") as u32;
        let faces = ids
            .iter()
            .map(|&f| {
                self.faces[f as usize]
                    .iter()
                    .copied()
                    .filter(|v| sigma.binary_search(v).is_err())
                    .map(local)
                    .collect()
            })
            .collect();
        let vertex_type = verts
            .iter()
            .map(|&v| {
                let t = self.vertex_type[v as usize];
                keep.iter().position(|&k| k == t).expect("type survives") as u8
            })
            .collect();
        let vertex_key = verts
            .iter()
            .map(|&v| self.vertex_key[v as usize].clone())
            .collect();
        Ok(CosetComplex::from_faces(
            keep.iter().map(|&t| self.types[t as usize]).collect(),
            vertex_type,
            vertex_key,
            faces,
            ComplexMeta::default(),
        ))
    }

    /// 1-skeleton with `w({u,v}) = (D-1)! * #{maximal faces containing u, v}`.
    pub fn one_skeleton(&self) -> WeightedGraph {
        if self.rank() < 2 {
            return WeightedGraph::new(self.num_vertices(), []);
        }
        let scale = factorial(self.rank() - 2) as u64;
        let edges = self.faces.iter().flat_map(|f| {
            let f = f.clone();
            (0..f.len()).flat_map(move |i| {
                let f = f.clone();
                (i + 1..f.len()).map(move |j| (f[i], f[j], scale))
            })
        });
        WeightedGraph::new(self.num_vertices(), edges)
    }

    /// Whether the 1-skeleton of the link of `sigma` is connected, without
    /// materializing the link.
    pub fn link_connected(&self, sigma: &[u32]) -> bool {
        let ids = self.containing(sigma);
        let mut verts: Vec<u32> = ids
            .iter()
            .flat_map(|&f| self.faces[f as usize].iter().copied())
            .filter(|v| !sigma.contains(v))
            .collect();
        verts.sort_unstable();
        verts.dedup();
        if verts.is_empty() {
            return false;
        }
        let mut uf = UnionFind::new(verts.len());
        for &f in &ids {
            let mut first = None;
            for v in self.faces[f as usize].iter().filter(|v| !sigma.contains(v)) {
                let i = verts.binary_search(v).expect("link vertex");
                match first {
                    None => first = Some(i),
                    Some(j) => uf.union(i, j),
                }
            }
        }
        uf.components() == 1
    }

    /// Connectivity of the links of all faces of dimension `-1..=d-2`: for
    /// each dimension, the number of faces checked and the first face whose
    /// link is disconnected.
    pub fn connectivity_report(&self) -> ConnectivityReport {
        use rayon::prelude::*;
        let mut per_dim = Vec::new();
        for k in -1..=self.dim() - 2 {
            let faces = self.faces(k);
            let failure = faces
                .par_iter()
                .find_first(|s| !self.link_connected(s))
                .cloned();
            per_dim.push(DimConnectivity {
                dim: k,
                faces: faces.len(),
                first_disconnected: failure,
            });
        }
        ConnectivityReport { per_dim }
    }

    /// Minimum and maximum number of maximal faces at a vertex, per type.
    pub fn degree_profile(&self) -> Vec<TypeDegrees> {
        (0..self.rank())
            .map(|t| {
                let degs: Vec<usize> = (0..self.num_vertices())
                    .filter(|&v| self.vertex_type[v] as usize == t)
                    .map(|v| self.incidence[v].len())
                    .collect();
                TypeDegrees {
                    ty: self.types[t],
                    vertices: degs.len(),
                    min: degs.iter().copied().min().unwrap_or(0),
                    max: degs.iter().copied().max().unwrap_or(0),
                }
            })
            .collect()
    }

    /// Every maximal face has one vertex of each type.
    pub fn is_partite(&self) -> bool {
        self.faces.iter().all(|f| {
            f.len() == self.rank()
                && f.iter()
                    .enumerate()
                    .all(|(i, &v)| self.vertex_type[v as usize] as usize == i)
        })
    }

    /// Exhaustive check of `sum_{sigma ⊃ tau, |sigma| = |tau|+1} w(sigma) = w(tau)`
    /// for every non-maximal face `tau`, in exact integers.
    pub fn balance_report(&self) -> BalanceReport {
        let r = self.rank();
        let mut report = BalanceReport::default();
        let mut upper = self.face_counts(r);
        for size in (0..r).rev() {
            let lower = self.face_counts(size);
            let mut sums: HashMap<&[u32], u128> = HashMap::new();
            let w_up = factorial(r - size - 1);
            for (sigma, &c) in &upper {
                let w = w_up * u128::from(c);
                for skip in 0..sigma.len() {
                    let tau: Vec<u32> = sigma
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| i != skip)
                        .map(|(_, &v)| v)
                        .collect();
                    let key = lower
                        .get_key_value(&tau)
                        .expect("facet of a face is a face")
                        .0;
                    *sums.entry(key.as_slice()).or_insert(0) += w;
                }
            }
            let w_low = factorial(r - size);
            for (tau, &c) in &lower {
                report.faces_checked += 1;
                if sums.get(tau.as_slice()).copied().unwrap_or(0) != w_low * u128::from(c) {
                    report.violations += 1;
                    report.first_violation.get_or_insert_with(|| tau.clone());
                }
            }
            upper = lower;
        }
        report
    }
}

fn for_each_subset(f: &[u32], size: usize, mut visit: impl FnMut(&[u32])) {
    fn rec(
        f: &[u32],
        start: usize,
        size: usize,
        cur: &mut Vec<u32>,
        visit: &mut dyn FnMut(&[u32]),
    ) {
        if cur.len() == size {
            visit(cur);
            return;
        }
        for i in start..f.len() {
            if f.len() - i < size - cur.len() {
                break;
            }
            cur.push(f[i]);
            rec(f, i + 1, size, cur, visit);
            cur.pop();
        }
    }
    if size <= f.len() {
        rec(f, 0, size, &mut Vec::with_capacity(size), &mut visit);
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimConnectivity {
    pub dim: isize,
    pub faces: usize,
    pub first_disconnected: Option<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectivityReport {
    pub per_dim: Vec<DimConnectivity>,
}

impl ConnectivityReport {
    pub fn all_connected(&self) -> bool {
        self.per_dim.iter().all(|d| d.first_disconnected.is_none())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TypeDegrees {
    pub ty: usize,
    pub vertices: usize,
    pub min: usize,
    pub max: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BalanceReport {
    pub faces_checked: usize,
    pub violations: usize,
    pub first_violation: Option<Vec<u32>>,
}

impl BalanceReport {
    pub fn balanced(&self) -> bool {
        self.violations == 0
    }
}
