use std::process::{Command, Output};

use serde_json::Value;

fn bnquot(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bnquot"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = bnquot(args);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn linear_coeff(element: &Value, generator: &str) -> Option<String> {
    element["terms"].as_array()?.iter().find_map(|t| {
        let m = t["monomial"].as_array()?;
        (m.len() == 1 && m[0]["gen"] == generator && m[0]["exp"] == 1)
            .then(|| t["coeff"].as_str().unwrap().to_string())
    })
}

#[test]
fn elliptic_class_report() {
    let r = json(&[
        "class", "--genus", "1", "--degree", "4", "--segre", "0", "--format", "json",
    ]);
    assert_eq!(r["codim"]["expected"], 1);
    assert_eq!(r["ranks"]["pushforward"], 8);
    assert_eq!(r["existence"]["status"], "non-empty");
    assert_eq!(r["existence"]["rule"], "elliptic-low-segre");
    let class = &r["class"]["minus_chern"];
    assert_eq!(linear_coeff(class, "t1").as_deref(), Some("-6"));
    assert_eq!(linear_coeff(class, "u1").as_deref(), Some("1"));

    // key order of the raw output, not of the parsed map
    let raw = String::from_utf8(
        bnquot(&[
            "class", "--genus", "1", "--degree", "4", "--segre", "0", "--format", "json",
        ])
        .stdout,
    )
    .unwrap();
    let top: Vec<usize> = [
        "params",
        "codim",
        "ranks",
        "existence",
        "pushforward",
        "class",
        "note",
    ]
    .iter()
    .map(|k| {
        raw.find(&format!("\n  \"{k}\": "))
            .unwrap_or_else(|| panic!("missing {k}"))
    })
    .collect();
    assert!(top.windows(2).all(|w| w[0] < w[1]), "{top:?}");
}

#[test]
fn parity_violation_exits_two_with_rule() {
    let out = bnquot(&["class", "--genus", "1", "--degree", "4", "--segre", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("s(E) = deg(E) mod 2"));
}

#[test]
fn segre_above_genus_is_empty() {
    let r = json(&[
        "class", "--genus", "2", "--degree", "7", "--segre", "3", "--format", "json",
    ]);
    assert_eq!(r["existence"]["status"], "empty");
    assert_eq!(r["existence"]["rule"], "segre-above-genus");
    assert!(r["class"].is_null());
}

#[test]
fn negative_segre_and_truncation_errors() {
    let r = json(&[
        "class", "--genus", "1", "--degree", "5", "--segre", "-1", "--format", "json",
    ]);
    assert_eq!(r["class"]["codimension"], 2);
    let out = bnquot(&[
        "class",
        "--genus",
        "1",
        "--degree",
        "5",
        "--segre",
        "-1",
        "--truncate",
        "4",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let out = bnquot(&["class", "--genus", "0", "--degree", "4", "--segre", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn surveys() {
    let r = json(&[
        "lab", "survey", "--degree", "4", "--trials", "100", "--seed", "7", "--format", "json",
    ]);
    assert_eq!(
        r,
        serde_json::json!({"d": 4, "trials": 100, "counts": {"(2,2)": 100}})
    );
    let r = json(&[
        "lab", "survey", "--degree", "3", "--trials", "60", "--seed", "7", "--format", "json",
    ]);
    let counts = r["counts"].as_object().unwrap();
    let dominant = counts.iter().max_by_key(|(_, n)| n.as_u64()).unwrap().0;
    assert_eq!(dominant, "(1,2)");
    let out = bnquot(&[
        "lab", "survey", "--degree", "13", "--trials", "1", "--seed", "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sample_and_dimension() {
    let r = json(&[
        "lab", "sample", "--degree", "3", "--seed", "1", "--format", "json",
    ]);
    assert_eq!(r["kernel"]["column_degrees"], serde_json::json!([2, 1]));
    assert_eq!(r["kernel"]["entries"].as_array().unwrap().len(), 4);
    assert_eq!(r["splitting"], "(1,2)");
    assert_eq!(r["euler_check"], true);
    let r = json(&[
        "lab",
        "dimension",
        "--degree",
        "5",
        "--a",
        "1",
        "--format",
        "json",
    ]);
    assert_eq!(r["formula"], 22);
    assert_eq!(r["agree"], true);
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("bnquot-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.txt");
    let out = bnquot(&[
        "class",
        "--genus",
        "1",
        "--degree",
        "6",
        "--segre",
        "0",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert!(std::fs::read_to_string(&path)
        .unwrap()
        .contains("existence     non-empty"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_relations_and_mutation() {
    let clean = bnquot(&["verify", "--criterion", "1"]);
    assert_eq!(clean.status.code(), Some(0));
    let text = String::from_utf8_lossy(&clean.stdout);
    assert!(text.contains("[PASS]  1."));
    assert!(text.contains("1/6*c1^3 - 1/2*c1*c2 + 1/2*c3"));

    let flipped = bnquot(&["verify", "--criterion", "1", "--flip-pairing"]);
    assert_eq!(flipped.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&flipped.stdout).contains("[FAIL]  1."));
}

#[test]
fn unknown_flags_rejected() {
    assert_eq!(
        bnquot(&["class", "--genus", "1", "--degree", "4", "--segre", "0", "--bogus"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        bnquot(&["verify", "--criterion", "12"]).status.code(),
        Some(2)
    );
}
