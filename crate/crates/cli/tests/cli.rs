use std::process::{Command, Output};

use serde_json::Value;

fn tiltstab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tiltstab")).args(args).env_remove("TILTSTAB_GRID").output().expect("binary runs")
}

fn tiltstab_env(args: &[&str], key: &str, val: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tiltstab")).args(args).env(key, val).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    assert!(o.status.success(), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(&tiltstab(args))).unwrap()
}

#[test]
fn xi_exact_output() {
    assert_eq!(stdout(&tiltstab(&["xi", "--t", "1/4"])), "{\"t\":\"1/4\",\"value\":\"-3/16\"}\n");
}

#[test]
fn clifford_anchor_at_two() {
    let v = json(&["clifford", "--variety", "triple", "--t", "2"]);
    assert_eq!(v["bound"], "9");
    assert!(v["argmax_label"].is_string());
    assert!(v["candidates"].as_array().is_some_and(|c| !c.is_empty()));
}

#[test]
fn weights_three_solutions() {
    let v = json(&["weights", "--max", "30"]);
    let ws: Vec<Value> = v.as_array().unwrap().iter().map(|w| w["weights"].clone()).collect();
    assert_eq!(ws, vec![serde_json::json!([1, 1, 1, 1, 1]), serde_json::json!([1, 1, 1, 1, 2]), serde_json::json!([1, 1, 1, 1, 4])]);
}

#[test]
fn support_interval_example() {
    let v = json(&["support-interval", "--alpha", "1", "--a", "2", "--b", "1/2", "--gamma", "2/9"]);
    assert_eq!(v["verified_midpoint"], true);
    assert!(v["K_lo"].is_string() && v["K_hi"].is_string());
}

#[test]
fn qgamma_and_constants() {
    let v = json(&["qgamma", "--variety", "triple", "--ch", "3,3,3/2,1/2", "--alpha", "0", "--beta", "0"]);
    assert!(v["value"].is_string());
    let d = json(&["delta", "--variety", "double", "--literal"]);
    assert_eq!(d["value"], d["report"]["literal"]);
    assert_eq!(json(&["gamma", "--variety", "triple"])["gamma"], "2/9");
    assert_eq!(json(&["ugamma", "--alpha", "1", "--a", "2", "--b", "1/2"]), Value::Bool(true));
    assert_eq!(json(&["reduction-region", "--alpha", "1", "--beta", "-1/4"])["inside"], true);
}

#[test]
fn numbers_are_exact_strings() {
    fn walk(v: &Value) {
        match v {
            Value::Number(n) => assert!(n.is_u64(), "non-integer number {n}"),
            Value::Array(a) => a.iter().for_each(walk),
            Value::Object(o) => o.values().for_each(walk),
            _ => {}
        }
    }
    walk(&json(&["wall", "--t", "3/2"]));
    walk(&json(&["clifford", "--t", "3/8"]));
    walk(&json(&["central-charge", "--ch", "1,1/2,0,0", "--alpha", "1", "--a", "2", "--b", "1/2"]));
    walk(&json(&["kernel-check", "--alpha", "1", "--beta", "1/4"]));
}

#[test]
fn exit_codes() {
    assert_eq!(tiltstab(&["xi", "--t", "1/2x"]).status.code(), Some(2));
    assert_eq!(tiltstab(&["xi", "--bogus"]).status.code(), Some(2));
    assert_eq!(tiltstab(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(tiltstab(&["xi", "--t", "2"]).status.code(), Some(1));
    assert_eq!(tiltstab(&["clifford", "--t", "1"]).status.code(), Some(1));
    assert_eq!(tiltstab(&["weights", "--format", "svg"]).status.code(), Some(2));
    assert_eq!(tiltstab_env(&["verify-all"], "TILTSTAB_GRID", "lots").status.code(), Some(2));
    assert_eq!(tiltstab(&["--help"]).status.code(), Some(0));
}

#[test]
fn negative_scalars_parse() {
    let v = json(&["upsilon", "--x", "-3/2"]);
    assert_eq!(v["value"], "1");
}

#[test]
fn csv_has_version_header() {
    let out = stdout(&tiltstab(&["clifford", "--sweep", "0:1/2:1/4", "--format", "csv"]));
    let lines: Vec<&str> = out.lines().collect();
    assert!(lines[0].starts_with("# tiltstab "));
    assert_eq!(lines[1], "t,bound,argmax_label");
    assert_eq!(lines.len(), 2 + 3);
    assert!(lines[4].starts_with("1/2,2,"));
}

#[test]
fn fig3_carries_the_wall() {
    let csv = stdout(&tiltstab(&["figure", "fig3", "--format", "csv"]));
    // -3/2 x + 13/4 at x = -2.
    assert!(csv.lines().any(|l| l == "0,wall,-2,25/4"));
    let svg = stdout(&tiltstab(&["figure", "fig3"]));
    assert!(svg.starts_with("<!-- tiltstab "));
    assert!(svg.contains(r#"viewBox="0 0 640 480""#));
    assert!(svg.contains(r#"stroke="green""#));
}

#[test]
fn every_figure_renders() {
    for v in ["triple", "double"] {
        for f in ["fig1", "fig2", "fig3", "fig4", "fig5"] {
            let svg = stdout(&tiltstab(&["--variety", v, "figure", f]));
            assert!(svg.trim_end().ends_with("</svg>"), "{v} {f}");
        }
    }
    assert_eq!(tiltstab(&["figure", "fig6"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    for args in [&["figure", "fig2"][..], &["verify-all"][..], &["clifford", "--sweep", "3/2:2:1/16", "--format", "csv"][..]] {
        assert_eq!(tiltstab(args).stdout, tiltstab(args).stdout, "{args:?}");
    }
}

#[test]
fn grid_env_controls_sampling() {
    let coarse = stdout(&tiltstab_env(&["figure", "fig1", "--format", "csv"], "TILTSTAB_GRID", "8"));
    let fine = stdout(&tiltstab_env(&["figure", "fig1", "--format", "csv"], "TILTSTAB_GRID", "16"));
    assert!(fine.lines().count() > coarse.lines().count());
    assert_eq!(tiltstab_env(&["figure", "fig1"], "TILTSTAB_GRID", "4").status.code(), Some(2));
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("tiltstab-cli-test-{}.json", std::process::id()));
    let o = tiltstab(&["xi", "--t", "1/2", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "{\"t\":\"1/2\",\"value\":\"0\"}\n");
    let _ = std::fs::remove_file(path);
}

#[test]
fn verify_all_reports_named_checks() {
    for v in ["triple", "double"] {
        let r = json(&["--variety", v, "verify-all"]);
        let names: Vec<&str> = r["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
        for n in ["gamma_constants", "support_property", "kernel_seminegativity", "ch2ch3_certificate", "weight_tuples"] {
            assert!(names.contains(&n), "{v} missing {n}");
        }
        assert_eq!(r["warnings"].as_array().unwrap().len(), 1);
    }
}

#[test]
fn bruteforce_never_exceeds_closed_form() {
    let v = json(&["clifford", "--t", "3/8", "--bruteforce", "16"]);
    let bound: tiltstab_core::Scalar = v["bound"].as_str().unwrap().parse().unwrap();
    let brute: tiltstab_core::Scalar = v["bruteforce"]["value"].as_str().unwrap().parse().unwrap();
    assert!(brute <= bound);
}
