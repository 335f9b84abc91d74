//! Spectra of weighted random walks on the graphs produced by the complex
//! module: `lambda_2`, representation angles and the link bounds feeding
//! the trickling-down certificate.

mod certificate;
mod lanczos;

pub use certificate::{
    global_lambda2, link_bound_check, rank2_link, trickling, LinkBoundReport, LinkResult,
    LinkSpectrum, RankTwoLink, SpectralCertificate, Trickling, BOUND_SLACK,
};
pub use lanczos::{lanczos_top, LanczosResult, SymOp};

use nalgebra::{DMatrix, SymmetricEigen};
use thiserror::Error;

use crate::complex::{build_complex, subgroups_generate, ComplexError, WeightedGraph};
use crate::groups::{FiniteGroup, GroupElement, Subgroup};

/// Graphs up to this size use the dense eigensolver.
pub const DENSE_LIMIT: usize = 4096;
pub const DENSE_TOL: f64 = 1e-9;
pub const ITERATIVE_TOL: f64 = 1e-7;
/// Threshold below which a Laplacian eigenvalue counts as zero.
pub const POSITIVE_THRESHOLD: f64 = 1e-9;

const LANCZOS_MAX_ITER: usize = 3000;
const LANCZOS_SEED: u64 = 0x5eed;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectraError {
    #[error("graph with {0} vertices has no second eigenvalue")]
    TooSmall(usize),
    #[error("graph is disconnected ({0} components)")]
    Disconnected(usize),
    #[error("the two subgroups do not generate the group")]
    NotGenerating,
    #[error("eigensolver did not reach tolerance {tol} (residual {residual})")]
    NotConverged { tol: f64, residual: f64 },
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// `D^{-1/2} W D^{-1/2}`, similar to the walk matrix `M = D^{-1} W`.
pub struct NormalizedAdjacency {
    n: usize,
    edges: Vec<(usize, usize, f64)>,
    inv_sqrt_deg: Vec<f64>,
}

impl NormalizedAdjacency {
    pub fn new(g: &WeightedGraph) -> Self {
        let deg = g.degrees();
        Self {
            n: g.num_vertices(),
            edges: g
                .edges()
                .iter()
                .map(|&(u, v, w)| (u as usize, v as usize, w as f64))
                .collect(),
            inv_sqrt_deg: deg
                .iter()
                .map(|&d| if d == 0 { 0.0 } else { 1.0 / (d as f64).sqrt() })
                .collect(),
        }
    }

    /// Unit eigenvector `D^{1/2} 1` of eigenvalue 1.
    pub fn top_vector(&self) -> Vec<f64> {
        let v: Vec<f64> = self
            .inv_sqrt_deg
            .iter()
            .map(|&x| if x == 0.0 { 0.0 } else { 1.0 / x })
            .collect();
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        v.into_iter().map(|x| x / norm).collect()
    }

    pub fn dense(&self) -> DMatrix<f64> {
        let mut m = DMatrix::zeros(self.n, self.n);
        for &(u, v, w) in &self.edges {
            let s = w * self.inv_sqrt_deg[u] * self.inv_sqrt_deg[v];
            m[(u, v)] += s;
            m[(v, u)] += s;
        }
        m
    }
}

impl SymOp for NormalizedAdjacency {
    fn dim(&self) -> usize {
        self.n
    }

    fn apply(&self, x: &[f64], y: &mut [f64]) {
        y.iter_mut().for_each(|v| *v = 0.0);
        for &(u, v, w) in &self.edges {
            let s = w * self.inv_sqrt_deg[u] * self.inv_sqrt_deg[v];
            y[u] += s * x[v];
            y[v] += s * x[u];
        }
    }
}

/// Row-stochastic walk matrix `M[u][v] = w(u,v) / sum_x w(u,x)`.
pub fn walk_matrix(g: &WeightedGraph) -> DMatrix<f64> {
    let n = g.num_vertices();
    let deg = g.degrees();
    let mut m = DMatrix::zeros(n, n);
    for &(u, v, w) in g.edges() {
        let (u, v) = (u as usize, v as usize);
        m[(u, v)] += w as f64 / deg[u] as f64;
        m[(v, u)] += w as f64 / deg[v] as f64;
    }
    m
}

/// Full walk spectrum, descending, by dense symmetric eigendecomposition.
pub fn spectrum(g: &WeightedGraph) -> Vec<f64> {
    let op = NormalizedAdjacency::new(g);
    let mut ev: Vec<f64> = SymmetricEigen::new(op.dense())
        .eigenvalues
        .iter()
        .copied()
        .collect();
    ev.sort_by(|a, b| b.total_cmp(a));
    ev
}

fn check_input(g: &WeightedGraph) -> Result<(), SpectraError> {
    if g.num_vertices() < 2 {
        return Err(SpectraError::TooSmall(g.num_vertices()));
    }
    let c = g.num_components();
    if c > 1 {
        return Err(SpectraError::Disconnected(c));
    }
    Ok(())
}

pub fn lambda2_dense(g: &WeightedGraph) -> Result<f64, SpectraError> {
    check_input(g)?;
    Ok(spectrum(g)[1])
}

pub fn lambda2_lanczos(g: &WeightedGraph, tol: f64) -> Result<f64, SpectraError> {
    check_input(g)?;
    let op = NormalizedAdjacency::new(g);
    let top = op.top_vector();
    let r = lanczos_top(&op, &[top], tol, LANCZOS_MAX_ITER, LANCZOS_SEED);
    if r.residual > tol {
        return Err(SpectraError::NotConverged {
            tol,
            residual: r.residual,
        });
    }
    Ok(r.value)
}

/// Second-largest eigenvalue of the walk on a connected graph: dense up to
/// [`DENSE_LIMIT`] vertices, Lanczos with deflation of the top eigenvector above.
pub fn lambda2(g: &WeightedGraph, tol: Option<f64>) -> Result<f64, SpectraError> {
    if g.num_vertices() <= DENSE_LIMIT {
        lambda2_dense(g)
    } else {
        lambda2_lanczos(g, tol.unwrap_or(ITERATIVE_TOL))
    }
}

/// `lambda_2`, or `1` when the graph is disconnected.
pub fn lambda2_or_one(g: &WeightedGraph, tol: Option<f64>) -> Result<f64, SpectraError> {
    match lambda2(g, tol) {
        Err(SpectraError::Disconnected(_)) => Ok(1.0),
        other => other,
    }
}

/// Smallest eigenvalue of `L = I - M` above [`POSITIVE_THRESHOLD`].
pub fn smallest_positive_laplacian(g: &WeightedGraph) -> Option<f64> {
    let op = NormalizedAdjacency::new(g);
    let n = g.num_vertices();
    let l = DMatrix::identity(n, n) - op.dense();
    SymmetricEigen::new(l)
        .eigenvalues
        .iter()
        .copied()
        .filter(|&x| x > POSITIVE_THRESHOLD)
        .min_by(f64::total_cmp)
}

/// `epsilon_G(A, B) = 1 - (smallest strictly positive eigenvalue of L)` on the
/// coset graph `CC(G, {A, B})`.
pub fn representation_angle<G: FiniteGroup<Element = GroupElement>>(
    group: &G,
    g: &Subgroup<GroupElement>,
    a: &Subgroup<GroupElement>,
    b: &Subgroup<GroupElement>,
) -> Result<f64, SpectraError> {
    let pair = [a.clone(), b.clone()];
    if !subgroups_generate(group, g, &pair, usize::MAX)? {
        return Err(SpectraError::NotGenerating);
    }
    let (x, _) = build_complex(group, g, &pair)?;
    let graph = x.one_skeleton();
    let mu = if graph.num_vertices() <= DENSE_LIMIT {
        smallest_positive_laplacian(&graph).ok_or(SpectraError::TooSmall(graph.num_vertices()))?
    } else {
        1.0 - lambda2_lanczos(&graph, ITERATIVE_TOL)?
    };
    Ok(1.0 - mu)
}
