use std::path::Path;
use std::process::{Command, Output};

fn hdx(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hdx"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn certificate_bundle_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let build = hdx(
        &[
            "build",
            "--preset",
            "A~2",
            "--p",
            "5",
            "--f",
            "auto:2",
            "--mode",
            "certificate",
            "--out",
            "b.json",
        ],
        dir.path(),
    );
    assert_eq!(
        code(&build),
        0,
        "{}",
        String::from_utf8_lossy(&build.stderr)
    );
    let verify = hdx(&["verify", "b.json", "--format", "json"], dir.path());
    assert_eq!(code(&verify), 0);
    let cert: serde_json::Value = serde_json::from_slice(&verify.stdout).unwrap();
    assert_eq!(cert["verdict"], "certified");
    assert!((cert["gamma_prime"].as_f64().unwrap() - 0.8090).abs() < 1e-4);
    assert_eq!(cert["degree_bound"], 125);
}

#[test]
fn negative_control_bundle_fails() {
    let dir = tempfile::tempdir().unwrap();
    let build = hdx(
        &[
            "build", "--preset", "A~2", "--p", "3", "--f", "auto:1", "--out", "neg.json",
        ],
        dir.path(),
    );
    assert_eq!(code(&build), 0);
    let verify = hdx(&["verify", "neg.json"], dir.path());
    assert_eq!(code(&verify), 2);
    assert!(String::from_utf8_lossy(&verify.stdout).contains("failed: local_injectivity"));
}

#[test]
fn tampered_bundle_fails() {
    let dir = tempfile::tempdir().unwrap();
    hdx(
        &["build", "--preset", "A~2", "--p", "5", "--out", "b.json"],
        dir.path(),
    );
    let text = std::fs::read_to_string(dir.path().join("b.json")).unwrap();
    std::fs::write(
        dir.path().join("b.json"),
        text.replace("\"order\": 125", "\"order\": 124"),
    )
    .unwrap();
    assert_eq!(code(&hdx(&["verify", "b.json"], dir.path())), 2);
}

#[test]
fn explicit_complex_is_deterministic_and_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let args = |out: &'static str| {
        [
            "build", "--preset", "A~2", "--p", "2", "--f", "t^2+t+1", "--mode", "explicit",
            "--out", out,
        ]
    };
    let first = hdx(&args("a.cc"), dir.path());
    assert_eq!(
        code(&first),
        0,
        "{}",
        String::from_utf8_lossy(&first.stderr)
    );
    assert!(String::from_utf8_lossy(&first.stdout).contains("maximal_faces: 60480"));
    assert_eq!(code(&hdx(&args("b.cc"), dir.path())), 0);
    let a = std::fs::read(dir.path().join("a.cc")).unwrap();
    assert_eq!(a, std::fs::read(dir.path().join("b.cc")).unwrap());

    let v1 = hdx(&["verify", "a.cc", "--format", "json"], dir.path());
    let v2 = hdx(&["verify", "b.cc", "--format", "json"], dir.path());
    assert_eq!(code(&v1), 0);
    assert_eq!(v1.stdout, v2.stdout);
    let cert: serde_json::Value = serde_json::from_slice(&v1.stdout).unwrap();
    assert_eq!(
        cert["verdict"],
        "hypotheses_verified_trickling_not_applicable"
    );
    assert_eq!(cert["group_order"], 60480);
}

#[test]
fn reducible_modulus_names_a_factor() {
    let dir = tempfile::tempdir().unwrap();
    let out = hdx(
        &["build", "--preset", "A~2", "--p", "5", "--f", "t^2+1"],
        dir.path(),
    );
    assert_eq!(code(&out), 4);
    assert!(String::from_utf8_lossy(&out.stderr).contains("factor t+"));
}

#[test]
fn budget_exhaustion_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let out = hdx(
        &["build", "--preset", "A~2", "--p", "5", "--mode", "explicit"],
        dir.path(),
    );
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("152334000000"));
}

#[test]
fn g2_without_matrix_model_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let out = hdx(
        &["certify", "--preset", "G~2", "--p", "5", "--format", "json"],
        dir.path(),
    );
    assert_eq!(code(&out), 2);
    let cert: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(cert["links"].as_array().unwrap().len(), 3);
    assert_eq!(
        code(&hdx(
            &["build", "--preset", "G~2", "--p", "5", "--mode", "explicit"],
            dir.path()
        )),
        4
    );
}

#[test]
fn gcm_input_matches_preset() {
    let dir = tempfile::tempdir().unwrap();
    let a = hdx(
        &["certify", "--preset", "A~2", "--p", "3", "--format", "json"],
        dir.path(),
    );
    let b = hdx(
        &[
            "certify",
            "--gcm",
            "[[2,-1,-1],[-1,2,-1],[-1,-1,2]]",
            "--p",
            "3",
            "--format",
            "json",
        ],
        dir.path(),
    );
    assert_eq!(code(&a), 0);
    let (a, b): (serde_json::Value, serde_json::Value) = (
        serde_json::from_slice(&a.stdout).unwrap(),
        serde_json::from_slice(&b.stdout).unwrap(),
    );
    assert_eq!(a["links"], b["links"]);
    assert_eq!(a["verdict"], b["verdict"]);
    let bad = hdx(
        &["certify", "--gcm", "[[2,-1],[-1,2]]", "--p", "3"],
        dir.path(),
    );
    assert_eq!(code(&bad), 4);
}

#[test]
fn family_table() {
    let dir = tempfile::tempdir().unwrap();
    let out = hdx(
        &[
            "family",
            "--preset",
            "A~2",
            "--p",
            "5",
            "--degrees",
            "2,3,4,5",
            "--format",
            "json",
        ],
        dir.path(),
    );
    assert_eq!(code(&out), 0);
    let rows: Vec<serde_json::Value> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(rows.len(), 4);
    assert!(rows
        .iter()
        .all(|r| r["degree_bound"] == 125 && r["gamma_prime"] == rows[0]["gamma_prime"]));
    let orders: Vec<f64> = rows
        .iter()
        .map(|r| r["group_order"].as_f64().unwrap())
        .collect();
    assert!(orders.windows(2).all(|w| w[0] < w[1]));

    let empty = hdx(
        &["family", "--preset", "A~2", "--p", "5", "--format", "json"],
        dir.path(),
    );
    assert_eq!(code(&empty), 0);
    assert_eq!(
        serde_json::from_slice::<Vec<serde_json::Value>>(&empty.stdout)
            .unwrap()
            .len(),
        0
    );
    assert_eq!(
        code(&hdx(
            &["family", "--preset", "A~2", "--p", "5", "--degrees", "1"],
            dir.path()
        )),
        4
    );
}
