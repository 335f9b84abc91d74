use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::BaseField;
use crate::complex::{build_complex, CosetComplex};
use crate::groups::UnipotentGroup;
use crate::rootdata::Rank2Type;

use super::{lambda2, lambda2_or_one, SpectraError};

/// Slack allowed when comparing a measured `lambda_2` with a bound it may
/// attain exactly.
pub const BOUND_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct LinkResult {
    pub face: Vec<u32>,
    /// Types of the link's vertices.
    pub cotype: Vec<usize>,
    pub vertices: usize,
    pub lambda2: f64,
    pub bipartite: bool,
    pub regular: bool,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LinkBoundReport {
    pub gamma: f64,
    pub links: Vec<LinkResult>,
}

impl LinkBoundReport {
    pub fn all_pass(&self) -> bool {
        self.links.iter().all(|l| l.pass)
    }

    pub fn first_failure(&self) -> Option<&LinkResult> {
        self.links.iter().find(|l| !l.pass)
    }

    pub fn max_lambda2(&self) -> f64 {
        self.links
            .iter()
            .map(|l| l.lambda2)
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// One summary per cotype: (cotype, vertices, count, max lambda_2).
    pub fn by_cotype(&self) -> Vec<LinkSpectrum> {
        let mut out: Vec<LinkSpectrum> = Vec::new();
        for l in &self.links {
            match out.iter_mut().find(|s| s.cotype == l.cotype) {
                Some(s) => {
                    s.count = s.count.map(|c| c + 1);
                    s.lambda2 = s.lambda2.max(l.lambda2);
                    s.size = s.size.max(l.vertices);
                    s.pass &= l.pass;
                }
                None => out.push(LinkSpectrum {
                    cotype: l.cotype.clone(),
                    rank2_type: None,
                    size: l.vertices,
                    count: Some(1),
                    lambda2: l.lambda2,
                    bound: self.gamma,
                    pass: l.pass,
                }),
            }
        }
        out.sort_by(|a, b| a.cotype.cmp(&b.cotype));
        out
    }
}

/// `lambda_2` of the link of every face of dimension `d - 2`, against `gamma`.
pub fn link_bound_check(
    x: &CosetComplex,
    gamma: f64,
    tol: Option<f64>,
) -> Result<LinkBoundReport, SpectraError> {
    let faces = x.faces(x.dim() - 2);
    let links = faces
        .into_par_iter()
        .map(|face| {
            let link = x.link(&face)?;
            let graph = link.one_skeleton();
            let l2 = lambda2_or_one(&graph, tol)?;
            let val = graph.valencies();
            Ok(LinkResult {
                cotype: link.types().to_vec(),
                vertices: graph.num_vertices(),
                lambda2: l2,
                bipartite: graph.bipartition().is_some(),
                regular: val.windows(2).all(|w| w[0] == w[1]),
                pass: l2 <= gamma + BOUND_SLACK,
                face,
            })
        })
        .collect::<Result<Vec<_>, SpectraError>>()?;
    Ok(LinkBoundReport { gamma, links })
}

/// Coset graph `CC(U, (U_a, U_b))` of a rank-2 unipotent group.
#[derive(Debug, Clone, PartialEq)]
pub struct RankTwoLink {
    pub ty: Rank2Type,
    pub q: u64,
    pub vertices: usize,
    pub edges: usize,
    pub connected: bool,
    /// `1` when the graph is disconnected.
    pub lambda2: f64,
}

pub fn rank2_link(
    ty: Rank2Type,
    field: &BaseField,
    tol: Option<f64>,
) -> Result<RankTwoLink, SpectraError> {
    use crate::algebra::Field;
    let u = UnipotentGroup::new(ty, field.clone());
    let all = u.all_elements();
    let (x, _) = build_complex(&u, &all, &[u.root_subgroup(0), u.root_subgroup(1)])?;
    let graph = x.one_skeleton();
    let connected = graph.is_connected();
    Ok(RankTwoLink {
        ty,
        q: field.order(),
        vertices: graph.num_vertices(),
        edges: graph.edges().len(),
        connected,
        lambda2: lambda2_or_one(&graph, tol)?,
    })
}

/// Outcome of the trickling-down step.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Trickling {
    Certified { gamma: f64, gamma_prime: f64 },
    NotApplicable { gamma: f64, threshold: f64 },
    Failed { clauses: Vec<String> },
}

/// With all hypotheses in place and `0 <= gamma <= 1/d`, the complex is a
/// `gamma / (1 - (d-1) gamma)` expander.
pub fn trickling(d: usize, gamma: f64, failed: Vec<String>) -> Trickling {
    if !failed.is_empty() {
        return Trickling::Failed { clauses: failed };
    }
    let threshold = 1.0 / d as f64;
    if gamma <= threshold {
        Trickling::Certified {
            gamma,
            gamma_prime: gamma / (1.0 - (d as f64 - 1.0) * gamma),
        }
    } else {
        Trickling::NotApplicable { gamma, threshold }
    }
}

/// Spectral data of one link cotype.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LinkSpectrum {
    pub cotype: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank2_type: Option<Rank2Type>,
    pub size: usize,
    /// Number of links of this cotype, when known.
    pub count: Option<u128>,
    pub lambda2: f64,
    pub bound: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralCertificate {
    pub mode: String,
    pub d: usize,
    pub gamma: f64,
    pub gamma_applicable: bool,
    pub gamma_prime: Option<f64>,
    pub links: Vec<LinkSpectrum>,
    pub trickling: Trickling,
}

impl SpectralCertificate {
    pub fn new(
        mode: &str,
        d: usize,
        gamma: f64,
        links: Vec<LinkSpectrum>,
        mut failed: Vec<String>,
    ) -> Self {
        for l in &links {
            if !l.pass {
                failed.push(format!(
                    "link of cotype {:?} has lambda2 {:.12} above {:.12}",
                    l.cotype, l.lambda2, l.bound
                ));
            }
        }
        let trickling = trickling(d, gamma, failed);
        let gamma_prime = match trickling {
            Trickling::Certified { gamma_prime, .. } => Some(gamma_prime),
            _ => None,
        };
        Self {
            mode: mode.to_string(),
            d,
            gamma,
            gamma_applicable: gamma <= 1.0 / d as f64,
            gamma_prime,
            links,
            trickling,
        }
    }
}

/// `lambda_2` of the whole 1-skeleton: `Some(1)` when disconnected, `None`
/// when above `vertex_limit`.
pub fn global_lambda2(
    x: &CosetComplex,
    vertex_limit: usize,
    tol: Option<f64>,
) -> Result<Option<f64>, SpectraError> {
    let g = x.one_skeleton();
    if !g.is_connected() {
        return Ok(Some(1.0));
    }
    if g.num_vertices() > vertex_limit {
        return Ok(None);
    }
    lambda2(&g, tol).map(Some)
}
