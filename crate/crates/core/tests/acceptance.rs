//! One line per acceptance criterion; exits nonzero if any fails.

use std::collections::{HashSet, VecDeque};
use std::process::ExitCode;
use std::time::Instant;

use hdx_core::algebra::BaseField;
use hdx_core::cli::{certify_explicit, certify_local, kms_map, Instance, InstanceText, Options};
use hdx_core::complex::{build_complex, subgroups_generate, write_complex, WeightedGraph};
use hdx_core::groups::{
    closure, ip_check, FiniteGroup, GroupElement, KmsMap, Subgroup, UnipotentGroup,
};
use hdx_core::rootdata::{positive_roots_of, NodeSet, Rank2Type};
use hdx_core::spectra::{lambda2_dense, lambda2_lanczos, rank2_link};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn text(p: u64, f: &str) -> InstanceText {
    InstanceText {
        preset: Some("A~2".into()),
        gcm: None,
        p,
        m: 1,
        f: f.into(),
    }
}

fn sl3_f4() -> Instance {
    Instance::resolve(text(2, "1,1,1")).unwrap()
}

/// Plain sequential breadth-first search over right multiplication.
fn bfs_order<G: FiniteGroup<Element = GroupElement>>(group: &G, gens: &[GroupElement]) -> usize {
    let mut seen: HashSet<GroupElement> = HashSet::new();
    let mut queue = VecDeque::from([group.identity()]);
    seen.insert(group.identity());
    while let Some(x) = queue.pop_front() {
        for s in gens {
            let y = group.mul(&x, s);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen.len()
}

fn rank2_graph(ty: Rank2Type, k: &BaseField) -> WeightedGraph {
    let u = UnipotentGroup::new(ty, k.clone());
    let all = u.all_elements();
    let (x, _) = build_complex(&u, &all, &[u.root_subgroup(0), u.root_subgroup(1)]).unwrap();
    x.one_skeleton()
}

fn prime(p: u64) -> BaseField {
    BaseField::with_default_modulus(p, 1).unwrap()
}

fn criterion_1() -> Outcome {
    let inst = sl3_f4();
    let opts = Options::default();
    let (cert, x) = certify_explicit(&inst, &opts).map_err(|e| e.to_string())?;
    let kms = kms_map(&inst).unwrap().unwrap();
    let gens: Vec<GroupElement> = kms
        .nodes()
        .iter()
        .flat_map(|i| kms.node_generators(i))
        .collect();
    let bfs = bfs_order(kms.group(), &gens);
    let formula = 4u128.pow(3) * (4u128.pow(3) - 1) * (4u128.pow(2) - 1);
    ensure(
        cert.group_order == Some(60480),
        format!("closure order {:?}", cert.group_order),
    )?;
    ensure(
        bfs == 60480 && formula == 60480,
        format!("bfs {bfs}, formula {formula}"),
    )?;
    let profile = x.degree_profile();
    ensure(
        profile
            .iter()
            .all(|t| t.vertices == 7560 && t.min == 8 && t.max == 8),
        format!("{profile:?}"),
    )?;
    ensure(x.maximal_faces().len() == 60480, "triangle count")?;
    ensure(x.is_partite(), "not 3-partite")?;
    ensure(
        x.connectivity_report().all_connected(),
        "a link is disconnected",
    )?;
    Ok("|G| = 60480 (closure, BFS, formula), 3 x 7560 vertices, 60480 triangles, partite, links connected, degree 8".to_string())
}

fn criterion_2() -> Outcome {
    let mut notes = Vec::new();
    for p in [2u64, 3, 5, 7] {
        let k = prime(p);
        let a2 = rank2_link(Rank2Type::A2, &k, None)
            .map_err(|e| e.to_string())?
            .lambda2;
        let b2 = rank2_link(Rank2Type::B2, &k, None)
            .map_err(|e| e.to_string())?
            .lambda2;
        let (ba, bb) = (1.0 / (p as f64).sqrt(), (2.0 / p as f64).sqrt());
        if p >= 5 {
            ensure((a2 - ba).abs() < 1e-9, format!("A2 p={p}: {a2} vs {ba}"))?;
            ensure((b2 - bb).abs() < 1e-9, format!("B2 p={p}: {b2} vs {bb}"))?;
        } else {
            ensure(a2 <= ba + 1e-9, format!("A2 p={p}: {a2} above {ba}"))?;
            ensure(b2 <= bb + 1e-9, format!("B2 p={p}: {b2} above {bb}"))?;
        }
        notes.push(format!("p={p}: A2 {a2:.9}, B2 {b2:.9}"));
    }
    Ok(notes.join("; "))
}

fn criterion_3() -> Outcome {
    let mut notes = Vec::new();
    for (p, n) in [(3u64, 486usize), (5, 6250)] {
        let link = rank2_link(Rank2Type::G2, &prime(p), None).map_err(|e| e.to_string())?;
        let pf = p as f64;
        let bound = ((3.0 / pf).sqrt() + 1.0 / (pf * pf)).sqrt();
        ensure(
            link.vertices == n,
            format!("p={p}: {} vertices", link.vertices),
        )?;
        ensure(
            link.lambda2 <= bound + 1e-9,
            format!("p={p}: {} above {bound}", link.lambda2),
        )?;
        notes.push(format!(
            "p={p}: {n} vertices, lambda2 {:.9} <= {bound:.9}{}",
            link.lambda2,
            if link.connected {
                ""
            } else {
                " (disconnected)"
            }
        ));
    }
    Ok(notes.join("; "))
}

fn criterion_4() -> Outcome {
    let mut notes = Vec::new();
    for (p, m) in [(2u64, 1usize), (3, 1), (2, 2), (5, 1)] {
        let k = BaseField::with_default_modulus(p, m).unwrap();
        let q = p.pow(m as u32) as usize;
        let g = rank2_graph(Rank2Type::A1xA1, &k);
        let bip = g.bipartition().ok_or("not bipartite")?;
        let sides = bip.iter().filter(|&&s| s == 0).count();
        ensure(
            g.num_vertices() == 2 * q && sides == q && g.edges().len() == q * q,
            format!("q={q}: not K_q,q"),
        )?;
        let l2 = rank2_link(Rank2Type::A1xA1, &k, None)
            .map_err(|e| e.to_string())?
            .lambda2;
        ensure(l2.abs() < 1e-12, format!("q={q}: lambda2 {l2}"))?;
        notes.push(format!("K_{q},{q}"));
    }
    Ok(format!("{} with lambda2 = 0", notes.join(", ")))
}

fn as_set(s: &Subgroup<GroupElement>) -> HashSet<GroupElement> {
    s.elements().iter().cloned().collect()
}

fn criterion_5() -> Outcome {
    let inst = sl3_f4();
    let kms = kms_map(&inst).unwrap().unwrap();
    let spherical = inst.gcm.spherical_subsets();
    let mut pairs = 0;
    for &j in &spherical {
        let img = kms.local_image(j, 1 << 20).map_err(|e| e.to_string())?;
        let roots = positive_roots_of(&inst.gcm, j).unwrap().len();
        ensure(
            img.order() == (inst.q() as usize).pow(roots as u32),
            format!("|phi(U_{j})| = {}", img.order()),
        )?;
        for &k in &spherical {
            let other = kms.local_image(k, 1 << 20).unwrap();
            let meet = kms.local_image(j.intersection(k), 1 << 20).unwrap();
            let a = as_set(&img);
            let inter: HashSet<GroupElement> = as_set(&other)
                .into_iter()
                .filter(|e| a.contains(e))
                .collect();
            ensure(inter == as_set(&meet), format!("IP fails at J={j}, K={k}"))?;
            pairs += 1;
        }
    }
    let hs: Vec<HashSet<GroupElement>> = (0..3)
        .map(|i| {
            as_set(
                &kms.local_image(inst.gcm.nodes().without(i), 1 << 20)
                    .unwrap(),
            )
        })
        .collect();
    let meet: Vec<&GroupElement> = hs[0]
        .iter()
        .filter(|e| hs[1].contains(e) && hs[2].contains(e))
        .collect();
    ensure(
        meet.len() == 1 && *meet[0] == kms.group().identity(),
        "H_0 ∩ H_1 ∩ H_2 is not trivial",
    )?;
    Ok(format!(
        "local injectivity on {} spherical J, IP on {pairs} ordered pairs, H_0 ∩ H_1 ∩ H_2 = 1",
        spherical.len()
    ))
}

fn criterion_6() -> Outcome {
    let opts = Options::default();
    let f5 = Instance::resolve(text(5, "auto:2")).unwrap();
    let (c5, _) = certify_local(&f5, &opts).map_err(|e| e.to_string())?;
    let g = 1.0 / 5f64.sqrt();
    let expected = g / (1.0 - g);
    ensure(
        c5.failed_clauses.is_empty(),
        format!("{:?}", c5.failed_clauses),
    )?;
    ensure(
        (c5.gamma - g).abs() < 1e-12 && g <= 0.5,
        format!("gamma {}", c5.gamma),
    )?;
    let gp = c5.gamma_prime.ok_or("no gamma'")?;
    ensure(
        (gp - expected).abs() < 1e-12 && (gp - 0.8090).abs() < 1e-4,
        format!("gamma' {gp}"),
    )?;
    let f2 = Instance::resolve(text(2, "auto:2")).unwrap();
    let (c2, _) = certify_local(&f2, &opts).map_err(|e| e.to_string())?;
    ensure(
        c2.failed_clauses.is_empty(),
        format!("{:?}", c2.failed_clauses),
    )?;
    ensure(
        (c2.gamma - 0.5f64.sqrt()).abs() < 1e-12 && c2.gamma > 0.5,
        format!("gamma {}", c2.gamma),
    )?;
    ensure(c2.gamma_prime.is_none(), "F_2 certified")?;
    ensure(c2.verdict.contains("not_applicable"), c2.verdict.clone())?;
    Ok(format!(
        "F_5: gamma {:.9}, gamma' {gp:.9}, hypotheses verified on |G| = {}; F_2: NotApplicable, gamma {:.9}",
        c5.gamma,
        c5.group_order.unwrap(),
        c2.gamma
    ))
}

fn check_named(cert: &hdx_core::cli::Certificate, name: &str) -> Result<String, String> {
    let c = cert
        .checks
        .iter()
        .find(|c| c.name == name)
        .ok_or(format!("no check {name}"))?;
    ensure(c.pass, format!("{name}: {}", c.detail))?;
    Ok(c.detail.clone())
}

fn criterion_7() -> Outcome {
    let inst = sl3_f4();
    let opts = Options::default();
    let (cert, x) = certify_explicit(&inst, &opts).map_err(|e| e.to_string())?;
    let balance = check_named(&cert, "balanced_weights")?;
    let iso = check_named(&cert, "link_isomorphism")?;
    ensure(iso.starts_with("200 "), iso.clone())?;

    for p in [2u64, 3, 5] {
        for n in [2usize, 3] {
            let k = prime(p);
            let f = hdx_core::algebra::first_irreducible(&k, 2).unwrap();
            let kms = KmsMap::new(n, k, f).map_err(|e| e.to_string())?;
            for i in 0..=n {
                for j in i + 1..=n {
                    kms.check_rank2_relations(i, j)
                        .map_err(|e| format!("A~{n} p={p}: {e}"))?;
                }
            }
        }
    }

    let mut worst: f64 = 0.0;
    let mut sizes = Vec::new();
    for (ty, p) in [
        (Rank2Type::A2, 11u64),
        (Rank2Type::B2, 5),
        (Rank2Type::A2, 17),
        (Rank2Type::B2, 7),
        (Rank2Type::A2, 31),
    ] {
        let g = rank2_graph(ty, &prime(p));
        let n = g.num_vertices();
        ensure((100..=4096).contains(&n), format!("{n} vertices"))?;
        let d = lambda2_dense(&g).map_err(|e| e.to_string())?;
        let l = lambda2_lanczos(&g, 1e-9).map_err(|e| e.to_string())?;
        worst = worst.max((d - l).abs());
        sizes.push(n);
    }
    ensure(worst < 1e-6, format!("dense and Lanczos differ by {worst}"))?;

    let mut first = Vec::new();
    write_complex(&mut first, &x).unwrap();
    let (cert2, x2) = certify_explicit(&inst, &opts).map_err(|e| e.to_string())?;
    let mut second = Vec::new();
    write_complex(&mut second, &x2).unwrap();
    ensure(first == second, "complex files differ")?;
    ensure(
        serde_json::to_string(&cert).unwrap() == serde_json::to_string(&cert2).unwrap(),
        "certificates differ",
    )?;
    Ok(format!(
        "balance ({balance}); link isomorphism ({iso}); relations over F_2, F_3, F_5; dense vs Lanczos max gap {worst:.1e} on {sizes:?} vertices; byte-identical reruns"
    ))
}

fn criterion_8() -> Outcome {
    let inst = sl3_f4();
    let kms = kms_map(&inst).unwrap().unwrap();
    let all = kms.nodes();
    let budget = 1 << 20;
    let gens: Vec<GroupElement> = all.iter().flat_map(|i| kms.node_generators(i)).collect();
    let g = closure(kms.group(), &gens, budget).unwrap();
    let local = |j: NodeSet| kms.local_image(j, budget).unwrap();
    let full: Vec<Subgroup<GroupElement>> = (0..3).map(|i| local(all.without(i))).collect();

    let mut cases = vec![("full", full.clone())];
    for drop in 0..3 {
        let hs: Vec<Subgroup<GroupElement>> = (0..3)
            .map(|i| local(all.without(i).without(drop)))
            .collect();
        cases.push(("node dropped everywhere", hs));
        let mut hs = full.clone();
        hs[drop] = local(all.without(drop).without((drop + 1) % 3));
        cases.push(("one H_i truncated", hs));
    }
    let mut connected = 0;
    for (name, hs) in &cases {
        let generates =
            subgroups_generate(kms.group(), &g, hs, budget).map_err(|e| e.to_string())?;
        let (x, _) = build_complex(kms.group(), &g, hs).map_err(|e| e.to_string())?;
        let is_conn = x.one_skeleton().is_connected();
        ensure(
            generates == is_conn,
            format!("{name}: generates {generates}, connected {is_conn}"),
        )?;
        connected += usize::from(is_conn);
    }
    ensure(
        connected > 0 && connected < cases.len(),
        "controls do not separate",
    )?;

    let a = local(NodeSet::from_iter([0, 1]));
    let b = local(NodeSet::from_iter([1, 2]));
    let truncated = Subgroup::from_elements(Vec::new(), vec![kms.group().identity()]);
    let out = ip_check(&a, &b, &truncated);
    ensure(
        !out.holds && out.witness.is_some(),
        "truncated intersection accepted",
    )?;
    let exact = ip_check(&a, &b, &local(NodeSet::single(1)));
    ensure(exact.holds, "true intersection rejected")?;
    Ok(format!(
        "connectivity matches generation in {} configurations ({connected} connected); truncated IP rejected with witness ({} vs {} elements)",
        cases.len(),
        out.intersection_order,
        out.expected_order
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 explicit SL3(F4) complex", criterion_1),
        ("2 rank-2 link equalities", criterion_2),
        ("3 G2 link bound", criterion_3),
        ("4 non-adjacent pair", criterion_4),
        ("5 IP and local injectivity", criterion_5),
        ("6 trickling-down certificate", criterion_6),
        ("7 property suites", criterion_7),
        ("8 negative controls", criterion_8),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {name}: PASS ({secs:.1}s) {detail}"),
            Err(detail) => {
                failed += 1;
                println!("criterion {name}: FAIL ({secs:.1}s) {detail}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
