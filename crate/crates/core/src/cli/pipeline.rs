use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{
    action_check, build_complex, link_isomorphism_check, sharp_transitivity_check, CosetComplex,
};
use crate::groups::{
    closure, intersect, ip_check, local_injectivity_check, sl_order, GroupElement, KmsMap, Subgroup,
};
use crate::rootdata::{classify_pair, gamma_bound, positive_roots_of, CartanMatrix, NodeSet};
use crate::spectra::{
    global_lambda2, link_bound_check, rank2_link, LinkSpectrum, SpectralCertificate, Trickling,
    BOUND_SLACK,
};
use crate::HdxError;

use super::instance::{Instance, InstanceText, Mode};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone)]
pub struct Options {
    pub budget: usize,
    /// Residual tolerance for the iterative eigensolver.
    pub tol: Option<f64>,
    pub link_samples: usize,
    pub action_samples: usize,
    /// Largest 1-skeleton for the global `lambda_2` diagnostic.
    pub global_limit: usize,
    pub seed: u64,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            budget: crate::groups::DEFAULT_BUDGET,
            tol: None,
            link_samples: 200,
            action_samples: 100,
            global_limit: 50_000,
            seed: 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

fn check(name: &str, pass: bool, detail: impl Into<String>) -> Check {
    Check {
        name: name.to_string(),
        pass,
        detail: detail.into(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Hypotheses {
    pub surjective: Option<bool>,
    pub local_injective: Option<bool>,
    pub ip: Option<bool>,
    pub sharp_transitive: Option<bool>,
}

impl Hypotheses {
    pub fn unverified() -> Self {
        Self {
            surjective: None,
            local_injective: None,
            ip: None,
            sharp_transitive: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InstanceSummary {
    pub preset: Option<String>,
    pub gcm: Vec<Vec<i64>>,
    pub p: u64,
    pub m: usize,
    pub q: u64,
    pub g: String,
    pub f: String,
    pub deg_f: usize,
}

/// The verification report written by `verify` and `certify`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Certificate {
    pub schema_version: u32,
    pub mode: String,
    pub instance: InstanceSummary,
    pub d: usize,
    pub group_order: Option<u128>,
    pub degree_bound: u128,
    pub gamma: f64,
    pub gamma_applicable: bool,
    pub gamma_prime: Option<f64>,
    pub links: Vec<LinkSpectrum>,
    pub hypotheses: Hypotheses,
    pub checks: Vec<Check>,
    pub global_lambda2: Option<f64>,
    pub failed_clauses: Vec<String>,
    pub verdict: String,
}

impl Certificate {
    /// 0 when every check passed, 2 otherwise.
    pub fn exit_code(&self) -> u8 {
        if self.failed_clauses.is_empty() {
            0
        } else {
            2
        }
    }
}

/// Data recorded by `build` in certificate mode.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Bundle {
    pub schema_version: u32,
    pub kind: String,
    pub instance: InstanceText,
    pub d: usize,
    pub group_order: Option<u128>,
    /// `|phi(U_J)|` for every spherical `J`, type `A~n` only.
    pub local_group_orders: Vec<LocalOrder>,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LocalOrder {
    pub nodes: Vec<usize>,
    pub order: usize,
}

pub const BUNDLE_KIND: &str = "hdx-bundle";

fn summary(inst: &Instance) -> InstanceSummary {
    InstanceSummary {
        preset: inst.text.preset.clone(),
        gcm: inst.gcm.rows().to_vec(),
        p: inst.text.p,
        m: inst.text.m,
        q: inst.q(),
        g: inst.g_text(),
        f: inst.f_text(),
        deg_f: inst.deg_f(),
    }
}

pub fn kms_map(inst: &Instance) -> Result<Option<KmsMap>, HdxError> {
    match inst.affine_a {
        Some(n) => Ok(Some(KmsMap::new(n, inst.k.clone(), inst.f.clone())?)),
        None => Ok(None),
    }
}

/// `|SL_{n+1}(k[t]/(f))|` for type `A~n`.
pub fn predicted_order(inst: &Instance) -> Option<u128> {
    let n = inst.affine_a?;
    let big_q = inst.q().checked_pow(inst.deg_f() as u32)?;
    sl_order(n + 1, big_q)
}

/// `q^{|Phi^+_{I \ {i}}|}` for every node `i`.
pub fn expected_degrees(inst: &Instance) -> Result<Vec<u128>, HdxError> {
    let all = inst.gcm.nodes();
    (0..inst.gcm.size())
        .map(|i| {
            let roots = positive_roots_of(&inst.gcm, all.without(i))?;
            Ok(u128::from(inst.q()).pow(roots.len() as u32))
        })
        .collect()
}

/// Subgroup-level results for type `A~n`.
pub struct LocalData {
    pub images: HashMap<NodeSet, Subgroup<GroupElement>>,
    pub checks: Vec<Check>,
    pub hypotheses: Hypotheses,
}

/// Local injectivity, IP, sharp transitivity, surjectivity and the
/// generation of each link group by its vertex stabilizers, all on the
/// images of local groups.
pub fn local_checks(inst: &Instance, kms: &KmsMap, opts: &Options) -> Result<LocalData, HdxError> {
    let gcm = &inst.gcm;
    let all = gcm.nodes();
    let spherical = gcm.spherical_subsets();
    let images: HashMap<NodeSet, Subgroup<GroupElement>> = spherical
        .par_iter()
        .map(|&j| Ok((j, kms.local_image(j, opts.budget)?)))
        .collect::<Result<_, HdxError>>()?;
    let mut checks = Vec::new();

    let mut bad_inj = Vec::new();
    for &j in &spherical {
        let roots = positive_roots_of(gcm, j)?.len();
        if !local_injectivity_check(&images[&j], inst.q(), roots) {
            bad_inj.push(format!(
                "|phi(U_{j})| = {} != {}^{roots}",
                images[&j].order(),
                inst.q()
            ));
        }
    }
    let inj = bad_inj.is_empty();
    checks.push(check(
        "local_injectivity",
        inj,
        if inj {
            format!(
                "|phi(U_J)| = q^|Phi_J^+| for all {} spherical J",
                spherical.len()
            )
        } else {
            bad_inj.join("; ")
        },
    ));

    let pairs: Vec<(NodeSet, NodeSet)> = spherical
        .iter()
        .flat_map(|&a| spherical.iter().map(move |&b| (a, b)))
        .filter(|(a, b)| a < b)
        .collect();
    let ip_fail = pairs
        .par_iter()
        .find_first(|(a, b)| !ip_check(&images[a], &images[b], &images[&a.intersection(*b)]).holds);
    checks.push(check(
        "intersection_property",
        ip_fail.is_none(),
        match ip_fail {
            None => format!(
                "phi(U_J) ∩ phi(U_K) = phi(U_(J∩K)) for all {} pairs",
                pairs.len()
            ),
            Some((a, b)) => format!("fails for J={a}, K={b}"),
        },
    ));

    let hs: Vec<&Subgroup<GroupElement>> =
        (0..gcm.size()).map(|i| &images[&all.without(i)]).collect();
    let meet = hs[1..]
        .iter()
        .fold(hs[0].clone(), |acc, h| intersect(&acc, h));
    let sharp = meet.order() == 1;
    checks.push(check(
        "sharp_transitivity",
        sharp,
        format!("|H_0 ∩ .. ∩ H_d| = {}", meet.order()),
    ));

    let surj = kms.surjectivity();
    checks.push(check(
        "surjectivity",
        surj.surjective,
        format!(
            "root subspaces reach F_p-dimension {} at {} of {} positions",
            surj.full_dim,
            surj.dims
                .iter()
                .filter(|(_, d)| *d == surj.full_dim)
                .count(),
            surj.dims.len()
        ),
    ));

    // H_T = phi(U_{I \ T}) is generated by the H_{T ∪ {i}}, so links are connected
    let d = inst.d();
    let mut gen_fail = None;
    let mut gen_count = 0;
    for t in all.subsets().filter(|t| !t.is_empty() && t.len() < d) {
        let rest = all.minus(t);
        let gens: Vec<GroupElement> = rest
            .iter()
            .flat_map(|i| images[&rest.without(i)].elements().to_vec())
            .collect();
        gen_count += 1;
        if closure(kms.group(), &gens, opts.budget)?.order() != images[&rest].order() {
            gen_fail.get_or_insert(t);
        }
    }
    checks.push(check(
        "link_generation",
        gen_fail.is_none(),
        match gen_fail {
            None => format!("H_T = <H_(T∪i)> for all {gen_count} types T with 0 < |T| < d"),
            Some(t) => format!("H_T is not generated by the H_(T∪i) for T={t}"),
        },
    ));

    let mut rel_fail = None;
    for i in 0..gcm.size() {
        for j in i + 1..gcm.size() {
            if let Err(e) = kms.check_rank2_relations(i, j) {
                rel_fail.get_or_insert(e);
            }
        }
    }
    checks.push(check(
        "commutator_relations",
        rel_fail.is_none(),
        rel_fail.unwrap_or_else(|| "images satisfy all rank-2 relations over k".into()),
    ));

    Ok(LocalData {
        images,
        hypotheses: Hypotheses {
            surjective: Some(surj.surjective),
            local_injective: Some(inj),
            ip: Some(ip_fail.is_none()),
            sharp_transitive: Some(sharp),
        },
        checks,
    })
}

/// One representative link per cotype `{i, j}`, from `U_ij(k)` directly.
pub fn cotype_links(
    inst: &Instance,
    gamma: f64,
    group_order: Option<u128>,
    tol: Option<f64>,
) -> Result<Vec<LinkSpectrum>, HdxError> {
    let n = inst.gcm.size();
    let all = inst.gcm.nodes();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let ty = classify_pair(&inst.gcm, i, j)?;
            let link = rank2_link(ty, &inst.k, tol)?;
            let t = all.without(i).without(j);
            let count = match group_order {
                Some(order) => {
                    let roots = positive_roots_of(&inst.gcm, t)?.len();
                    Some(order / u128::from(inst.q()).pow(roots as u32))
                }
                None => None,
            };
            out.push(LinkSpectrum {
                cotype: vec![i, j],
                rank2_type: Some(ty),
                size: link.vertices,
                count,
                lambda2: link.lambda2,
                bound: gamma,
                pass: link.lambda2 <= gamma + BOUND_SLACK,
            });
        }
    }
    Ok(out)
}

/// Structural and spectral checks that need only the complex.
pub fn complex_checks(
    x: &CosetComplex,
    gcm: &CartanMatrix,
    expected_degrees: &[u128],
    gamma: f64,
    tol: Option<f64>,
) -> Result<(Vec<Check>, Vec<LinkSpectrum>), HdxError> {
    let mut checks = Vec::new();
    checks.push(check(
        "partite",
        x.is_partite(),
        format!("{} maximal faces", x.maximal_faces().len()),
    ));

    let conn = x.connectivity_report();
    let detail: Vec<String> = conn
        .per_dim
        .iter()
        .map(|d| {
            format!(
                "dim {}: {} links{}",
                d.dim,
                d.faces,
                if d.first_disconnected.is_some() {
                    " (disconnected link found)"
                } else {
                    ""
                }
            )
        })
        .collect();
    checks.push(check(
        "connectivity",
        conn.all_connected(),
        detail.join(", "),
    ));

    let profile = x.degree_profile();
    let deg_ok = profile
        .iter()
        .all(|t| t.min == t.max && expected_degrees.get(t.ty).copied() == Some(t.min as u128));
    let detail: Vec<String> = profile
        .iter()
        .map(|t| {
            format!(
                "type {}: {} vertices, degree {}..{}",
                t.ty, t.vertices, t.min, t.max
            )
        })
        .collect();
    checks.push(check("degree", deg_ok, detail.join("; ")));

    let balance = x.balance_report();
    let link_faces: Vec<Vec<u32>> = (0..x.dim()).flat_map(|k| x.faces(k)).collect();
    let link_balance_fail = link_faces
        .par_iter()
        .map(|s| x.link(s).map(|l| l.balance_report().balanced()))
        .collect::<Result<Vec<bool>, _>>()?
        .iter()
        .filter(|b| !**b)
        .count();
    checks.push(check(
        "balanced_weights",
        balance.balanced() && link_balance_fail == 0,
        format!(
            "{} faces of X and links of {} faces checked, {} violations",
            balance.faces_checked,
            link_faces.len(),
            balance.violations + link_balance_fail
        ),
    ));

    let report = link_bound_check(x, gamma, tol)?;
    let shape_ok = report.links.iter().all(|l| l.bipartite && l.regular);
    checks.push(check(
        "link_shape",
        shape_ok,
        format!(
            "{} codimension-2 links, all bipartite and regular: {shape_ok}",
            report.links.len()
        ),
    ));
    let mut links: Vec<LinkSpectrum> = report.by_cotype();
    for l in &mut links {
        if let [i, j] = l.cotype[..] {
            l.rank2_type = classify_pair(gcm, i, j).ok();
        }
    }
    Ok((checks, links))
}

struct Findings {
    group_order: Option<u128>,
    gamma: f64,
    links: Vec<LinkSpectrum>,
    hypotheses: Hypotheses,
    checks: Vec<Check>,
    global: Option<f64>,
    failed: Vec<String>,
}

fn finish(inst: &Instance, mode: Mode, found: Findings) -> Result<Certificate, HdxError> {
    let Findings {
        group_order,
        gamma,
        links,
        hypotheses,
        checks,
        global,
        mut failed,
    } = found;
    failed.extend(
        checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| format!("{}: {}", c.name, c.detail)),
    );
    let spectral = SpectralCertificate::new(mode.name(), inst.d(), gamma, links, failed);
    let failed = match &spectral.trickling {
        Trickling::Failed { clauses } => clauses.clone(),
        _ => Vec::new(),
    };
    let verdict = match &spectral.trickling {
        Trickling::Certified { .. } => "certified",
        Trickling::NotApplicable { .. } => "hypotheses_verified_trickling_not_applicable",
        Trickling::Failed { .. } => "failed",
    };
    let degree_bound = expected_degrees(inst)?.into_iter().max().unwrap_or(0);
    Ok(Certificate {
        schema_version: SCHEMA_VERSION,
        mode: mode.name().into(),
        instance: summary(inst),
        d: inst.d(),
        group_order,
        degree_bound,
        gamma,
        gamma_applicable: spectral.gamma_applicable,
        gamma_prime: spectral.gamma_prime,
        links: spectral.links,
        hypotheses,
        checks,
        global_lambda2: global,
        failed_clauses: failed,
        verdict: verdict.into(),
    })
}

const NO_MATRIX_MODEL: &str =
    "no matrix model for this diagram: surjectivity, local injectivity and IP are unverified";

/// Certificate mode: local groups and one link per cotype.
pub fn certify_local(
    inst: &Instance,
    opts: &Options,
) -> Result<(Certificate, Option<LocalData>), HdxError> {
    let gamma = gamma_bound(&inst.gcm, inst.text.p, inst.text.m)?;
    let order = predicted_order(inst);
    let links = cotype_links(inst, gamma, order, opts.tol)?;
    match kms_map(inst)? {
        Some(kms) => {
            let local = local_checks(inst, &kms, opts)?;
            let found = Findings {
                group_order: order,
                gamma,
                links,
                hypotheses: local.hypotheses.clone(),
                checks: local.checks.clone(),
                global: None,
                failed: Vec::new(),
            };
            let cert = finish(inst, Mode::Certificate, found)?;
            Ok((cert, Some(local)))
        }
        None => {
            let found = Findings {
                group_order: None,
                gamma,
                links,
                hypotheses: Hypotheses::unverified(),
                checks: Vec::new(),
                global: None,
                failed: vec![NO_MATRIX_MODEL.into()],
            };
            let cert = finish(inst, Mode::Certificate, found)?;
            Ok((cert, None))
        }
    }
}

/// Builds the complex of a type `A~n` instance by enumerating `G`.
pub fn build_explicit(
    inst: &Instance,
    opts: &Options,
) -> Result<(CosetComplex, ExplicitData), HdxError> {
    let kms = kms_map(inst)?.ok_or_else(|| {
        HdxError::Spec("explicit mode needs a type A~n diagram; use --mode certificate".into())
    })?;
    let predicted = predicted_order(inst);
    match predicted {
        Some(order) if order <= opts.budget as u128 => {}
        _ => return Err(HdxError::Budget(format!(
            "|G| = |SL_{}(F_{}^{})| = {} exceeds the budget of {} elements; use --mode certificate",
            kms.rank() + 1,
            inst.q(),
            inst.deg_f(),
            predicted.map_or("more than 2^128".into(), |o| o.to_string()),
            opts.budget
        ))),
    }
    let all = inst.gcm.nodes();
    let gens: Vec<GroupElement> = all.iter().flat_map(|i| kms.node_generators(i)).collect();
    let g = closure(kms.group(), &gens, opts.budget)?;
    let hs: Vec<Subgroup<GroupElement>> = (0..inst.gcm.size())
        .map(|i| kms.local_image(all.without(i), opts.budget))
        .collect::<Result<_, _>>()?;
    let (mut x, index) = build_complex(kms.group(), &g, &hs)?;
    x.meta.params = inst.params();
    Ok((
        x,
        ExplicitData {
            kms,
            g,
            hs,
            index,
            predicted,
        },
    ))
}

pub struct ExplicitData {
    pub kms: KmsMap,
    pub g: Subgroup<GroupElement>,
    pub hs: Vec<Subgroup<GroupElement>>,
    pub index: crate::complex::CosetIndex,
    pub predicted: Option<u128>,
}

/// Explicit mode: every check on the enumerated group and complex, plus the
/// subgroup-level hypotheses.
pub fn certify_explicit(
    inst: &Instance,
    opts: &Options,
) -> Result<(Certificate, CosetComplex), HdxError> {
    let (x, data) = build_explicit(inst, opts)?;
    let gamma = gamma_bound(&inst.gcm, inst.text.p, inst.text.m)?;
    let local = local_checks(inst, &data.kms, opts)?;
    let mut checks = local.checks.clone();
    let order = data.g.order() as u128;
    checks.push(check(
        "group_order",
        Some(order) == data.predicted,
        format!(
            "closure has {order} elements, order formula gives {:?}",
            data.predicted
        ),
    ));
    let (cx_checks, links) =
        complex_checks(&x, &inst.gcm, &expected_degrees(inst)?, gamma, opts.tol)?;
    checks.extend(cx_checks);
    checks.push(check(
        "sharp_transitivity_faces",
        sharp_transitivity_check(data.g.order(), &data.hs, &x),
        format!(
            "{} maximal faces for |G| = {}",
            x.maximal_faces().len(),
            data.g.order()
        ),
    ));
    let iso = link_isomorphism_check(data.kms.group(), &data.hs, &x, opts.link_samples, opts.seed)?;
    checks.push(check(
        "link_isomorphism",
        iso.mismatches == 0,
        format!(
            "{} sampled faces, {} mismatches",
            iso.sampled, iso.mismatches
        ),
    ));
    let bad = action_check(
        data.kms.group(),
        &data.g,
        &data.index,
        &x,
        opts.action_samples,
        opts.seed,
    );
    checks.push(check(
        "left_action",
        bad == 0,
        format!("{} sampled elements, {bad} failures", opts.action_samples),
    ));
    let global = global_lambda2(&x, opts.global_limit, opts.tol)?;
    let mut hyp = local.hypotheses.clone();
    hyp.surjective = Some(hyp.surjective == Some(true) && Some(order) == data.predicted);
    let found = Findings {
        group_order: Some(order),
        gamma,
        links,
        hypotheses: hyp,
        checks,
        global,
        failed: Vec::new(),
    };
    let cert = finish(inst, Mode::Explicit, found)?;
    Ok((cert, x))
}

/// Verification of a complex read from disk: complex-level checks on the
/// file, group-level hypotheses recomputed from its recorded parameters.
pub fn certify_complex_file(x: &CosetComplex, opts: &Options) -> Result<Certificate, HdxError> {
    let inst = Instance::from_params(&x.meta.params)?;
    if x.rank() != inst.gcm.size() {
        return Err(HdxError::Spec(format!(
            "complex has rank {} but the diagram has {} nodes",
            x.rank(),
            inst.gcm.size()
        )));
    }
    let gamma = gamma_bound(&inst.gcm, inst.text.p, inst.text.m)?;
    let (mut checks, links) =
        complex_checks(x, &inst.gcm, &expected_degrees(&inst)?, gamma, opts.tol)?;
    let mut failed = Vec::new();
    let hyp = match kms_map(&inst)? {
        Some(kms) => {
            let local = local_checks(&inst, &kms, opts)?;
            checks.extend(local.checks);
            local.hypotheses
        }
        None => {
            failed.push(NO_MATRIX_MODEL.into());
            Hypotheses::unverified()
        }
    };
    let faces = x.maximal_faces().len() as u128;
    checks.push(check(
        "face_count",
        faces == x.meta.group_order,
        format!(
            "{faces} maximal faces, recorded |G| = {}",
            x.meta.group_order
        ),
    ));
    let global = global_lambda2(x, opts.global_limit, opts.tol)?;
    let found = Findings {
        group_order: Some(x.meta.group_order),
        gamma,
        links,
        hypotheses: hyp,
        checks,
        global,
        failed,
    };
    finish(&inst, Mode::Explicit, found)
}

pub fn make_bundle(inst: &Instance, local: Option<&LocalData>) -> Bundle {
    let mut orders: Vec<LocalOrder> = local
        .map(|l| {
            l.images
                .iter()
                .map(|(j, s)| LocalOrder {
                    nodes: j.iter().collect(),
                    order: s.order(),
                })
                .collect()
        })
        .unwrap_or_default();
    orders.sort();
    Bundle {
        schema_version: SCHEMA_VERSION,
        kind: BUNDLE_KIND.into(),
        instance: inst.text.clone(),
        d: inst.d(),
        group_order: predicted_order(inst),
        local_group_orders: orders,
    }
}

/// Reruns certificate mode for a bundle and compares the recorded local
/// group orders.
pub fn certify_bundle(bundle: &Bundle, opts: &Options) -> Result<Certificate, HdxError> {
    if bundle.kind != BUNDLE_KIND || bundle.schema_version != SCHEMA_VERSION {
        return Err(HdxError::Spec("not a version 1 hdx bundle".into()));
    }
    let inst = Instance::resolve(bundle.instance.clone())?;
    let (mut cert, local) = certify_local(&inst, opts)?;
    let fresh = make_bundle(&inst, local.as_ref());
    if fresh.local_group_orders != bundle.local_group_orders
        || fresh.group_order != bundle.group_order
    {
        let clause = "bundle: recorded subgroup orders differ from recomputed ones".to_string();
        cert.checks
            .push(check("bundle_consistency", false, clause.clone()));
        cert.failed_clauses.push(clause);
        cert.verdict = "failed".into();
        cert.gamma_prime = None;
    }
    Ok(cert)
}

/// One row of the `family` table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FamilyRow {
    pub deg_f: usize,
    pub f: String,
    pub group_order: Option<u128>,
    pub degree_bound: u128,
    pub gamma: f64,
    pub gamma_prime: Option<f64>,
    pub verdict: String,
}

pub fn family(
    base: &InstanceText,
    degrees: &[usize],
    opts: &Options,
) -> Result<Vec<FamilyRow>, HdxError> {
    if degrees.windows(2).any(|w| w[0] >= w[1]) {
        return Err(HdxError::Spec("degrees must be strictly ascending".into()));
    }
    if let Some(&d) = degrees.iter().find(|&&d| d < 2) {
        return Err(HdxError::Spec(format!(
            "degree {d} is too small: family members need deg f >= 2"
        )));
    }
    degrees
        .iter()
        .map(|&deg| {
            let inst = Instance::resolve(InstanceText {
                f: format!("auto:{deg}"),
                ..base.clone()
            })?;
            let (cert, _) = certify_local(&inst, opts)?;
            Ok(FamilyRow {
                deg_f: deg,
                f: inst.f_text(),
                group_order: cert.group_order,
                degree_bound: cert.degree_bound,
                gamma: cert.gamma,
                gamma_prime: cert.gamma_prime,
                verdict: cert.verdict,
            })
        })
        .collect()
}
