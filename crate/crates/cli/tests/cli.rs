use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_terwilliger"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = run(&full);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn temp_file(name: &str, contents: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("terwilliger-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn group_info_builtin_and_file() {
    let v = json(&["group-info", "--group", "II"]);
    assert_eq!(v["order"], 192);
    assert_eq!(v["classCount"], 32);
    assert_eq!(v["publishedAgrees"]["order"]["agrees"], true);
    let v = json(&["group-info", "--group", "IV"]);
    assert_eq!(
        (v["order"].as_u64(), v["classCount"].as_u64()),
        (Some(12), Some(6))
    );

    let path = temp_file("identity.json", r#"[[["1","0"],["0","1"]]]"#);
    let v = json(&["group-info", "--generators", path.to_str().unwrap()]);
    assert_eq!(v["order"], 1);
    assert_eq!(v["classCount"], 1);
    assert!(v["publishedAgrees"].as_object().unwrap().is_empty());
}

#[test]
fn bad_generator_file_reports_position() {
    let path = temp_file("broken.json", "[[[\"1\",\"0\"],\n[\"0\" \"1\"]]]");
    let out = run(&["group-info", "--generators", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 2"), "{err}");

    let path = temp_file("entry.json", r#"[[["1","0"],["0","sqrt(5)"]]]"#);
    let out = run(&["group-info", "--generators", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_flags_and_missing_group_are_rejected() {
    assert!(!run(&["group-info", "--group", "I", "--bogus"])
        .status
        .success());
    assert!(!run(&["group-info", "--group", "V"]).status.success());
    assert_eq!(run(&["group-info"]).status.code(), Some(2));
}

#[test]
fn molien_terms() {
    let v = json(&["molien", "--group", "I", "--terms", "9"]);
    let c: Vec<&str> = v["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_str().unwrap())
        .collect();
    assert_eq!(c, ["1", "0", "1", "0", "1", "0", "1", "0", "2"]);
    assert_eq!(v["matchesProduct"], true);
}

#[test]
fn scheme_triples() {
    let out = run(&["scheme", "--group", "I", "--triples"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "64");
    let v = json(&["scheme", "--group", "IV", "--tensor"]);
    assert_eq!(v["intersectionNumbers"].as_array().unwrap().len(), 6);
    assert_eq!(v["dimBoundUpper"], 44);
}

#[test]
fn terwilliger_reports() {
    let v = json(&["terwilliger", "--group", "I"]);
    assert_eq!(v["dimT"], 64);
    assert_eq!(v["centerDim"], 5);
    assert_eq!(v["degrees"], serde_json::json!([1, 1, 2, 3, 7]));
    assert_eq!(v["structure"], "M1 + M1 + M2 + M3 + M7");

    let v = json(&["terwilliger", "--group", "IV"]);
    assert_eq!(v["dimT"], 44);
    assert_eq!(v["degrees"], serde_json::json!([2, 2, 6]));

    let v = json(&["terwilliger", "--group", "III"]);
    assert_eq!(v["dimT"], 300);
    let claim = &v["publishedAgrees"]["degrees"];
    assert_eq!(claim["agrees"], false);
    assert!(claim["note"].as_str().unwrap().contains("360"));
}

#[test]
fn terwilliger_depth_must_be_at_least_two() {
    let out = run(&["terwilliger", "--group", "I", "--max-depth", "1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn invariants_certificate() {
    let v = json(&["invariants", "--group", "III"]);
    let cert = &v["certificate"];
    assert_eq!(cert["generatorsDegrees"], serde_json::json!([4, 12]));
    assert_eq!(cert["jacobianNonzero"], true);
    assert_eq!(cert["molienMatch"], true);
    assert!(v["printedExpressions"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["matches"] == true));
}

#[test]
fn epoly_text() {
    let out = run(&["epoly", "--group", "I", "--k", "2"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("polynomial: 1/2 * x^2 + 1/2 * y^2"));
}

#[test]
fn code_fixture_and_file() {
    let v = json(&["code", "--fixture", "hamming8"]);
    assert_eq!(v["type"], "II");
    assert_eq!(v["enumerator"], "1 * x^8 + 14 * x^4 y^4 + 1 * y^8");
    assert_eq!(v["invariance"]["fixed"], 192);

    let path = temp_file("tetra.json", "[[1,0,1,1],[0,1,1,2]]");
    let v = json(&["code", "--file", path.to_str().unwrap(), "--q", "3"]);
    assert_eq!(v["type"], "III");
    assert_eq!(v["enumerator"], "1 * x^4 + 8 * x y^3");

    let v = json(&["code", "--fixture", "hexacode"]);
    assert_eq!(v["type"], "none");
    let v = json(&["code", "--fixture", "hexacode", "--hermitian"]);
    assert_eq!(v["type"], "IV");

    assert_eq!(
        run(&["code", "--file", path.to_str().unwrap(), "--q", "5"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_all_is_thread_independent() {
    let outputs: Vec<Vec<u8>> = ["1", "2", "8"]
        .iter()
        .map(|t| {
            let out = run(&[
                "verify-all",
                "--group",
                "I",
                "--format",
                "json",
                "--threads",
                t,
            ]);
            assert!(out.status.success());
            out.stdout
        })
        .collect();
    assert_eq!(outputs[0], outputs[1]);
    assert_eq!(outputs[0], outputs[2]);

    let env = Command::new(env!("CARGO_BIN_EXE_terwilliger"))
        .args(["verify-all", "--group", "I", "--format", "json"])
        .env("TERWILLIGER_THREADS", "3")
        .output()
        .unwrap();
    assert_eq!(env.stdout, outputs[0]);
}
