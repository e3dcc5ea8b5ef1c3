use std::path::PathBuf;
use std::process::{Command, Output};

use brauer_cli::CommandResult;
use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_cubic-brauer"));
    c.env_remove(brauer_cli::PRECISION_CAP_ENV);
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn schema(command: &str) -> Value {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("schemas").join(format!("{command}.schema.json"));
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn assert_valid(command: &str, v: &Value) {
    let validator = jsonschema::validator_for(&schema(command)).expect("schema compiles");
    let errors: Vec<String> = validator.iter_errors(v).map(|e| format!("{} at {}", e, e.instance_path())).collect();
    assert!(errors.is_empty(), "{command}: {errors:?}");
}

fn group(free: u64, factors: &[u64]) -> Value {
    serde_json::json!({ "free_rank": free, "factors": factors })
}

const CASES: &[&[&str]] = &[
    &["lines"],
    &["trios"],
    &["weyl"],
    &["tables", "--case", "3"],
    &["classify", "--boundary", r#"{"type":"three_lines","galois":{"s3":-3},"eckardt":false}"#],
    &["classify", "--boundary", r#"{"type":"irreducible","kind":"cuspidal"}"#],
    &["invariants", "--d", "-1", "--n", "4"],
    &["example", "--poly", "-2,-2,1,1", "--auto-a", "20"],
    &["example", "--poly", "1,1,1,1", "--a", "2"],
];

#[test]
fn outputs_validate_against_schemas() {
    for args in CASES {
        let v = json(args);
        assert_eq!(v["command"], args[0]);
        assert_valid(args[0], &v);
    }
}

#[test]
fn json_is_deterministic_and_round_trips() {
    for args in CASES {
        let a = run(args).stdout;
        let b = run(args).stdout;
        assert_eq!(a, b, "{args:?}");
        let parsed: CommandResult = serde_json::from_slice(&a).unwrap();
        let again = serde_json::to_string_pretty(&parsed).unwrap() + "\n";
        assert_eq!(again.as_bytes(), &a[..]);
    }
}

#[test]
fn text_is_a_rendering_of_the_json_payload() {
    for args in CASES {
        let v = json(args);
        let mut text_args = args.to_vec();
        text_args.extend(["--format", "text"]);
        let out = run(&text_args);
        assert!(out.status.success());
        assert_eq!(String::from_utf8(out.stdout).unwrap(), brauer_cli::render_text(&v));
    }
}

#[test]
fn tables_case_three_has_ten_pairs_with_trivial_pair() {
    let v = json(&["tables", "--case", "3", "--format", "json"]);
    let pairs = v["result"]["pairs"].as_array().unwrap();
    assert_eq!(pairs.len(), 10);
    assert!(pairs.contains(&serde_json::json!({ "br1": group(0, &[]), "brx": group(0, &[]) })));
}

#[test]
fn invariants_minus_one_mod_four() {
    let v = json(&["invariants", "--d", "-1", "--n", "4"]);
    assert_eq!(v["result"]["invariants"], group(0, &[4]));
}

#[test]
fn auto_a_example_reports_shift() {
    let v = json(&["example", "--poly", "-2,-2,1,1", "--auto-a", "20"]);
    assert_eq!(v["result"]["brauer"], group(0, &[2]));
    let found = v["result"]["search"]["found_a"].as_str().unwrap().parse::<u32>().unwrap();
    assert!((1..=20).contains(&found));
    assert_eq!(v["result"]["a"], v["result"]["search"]["found_a"]);
    // the reported shift reproduces the result directly
    let direct = json(&["example", "--poly", "-2,-2,1,1", "--a", &found.to_string()]);
    assert_eq!(direct["result"]["brauer"], group(0, &[2]));
}

#[test]
fn classify_reports_bound() {
    let v = json(&["classify", "--boundary", r#"{"type":"line_conic","intersection":{"quadratic":-1}}"#]);
    assert_eq!(v["result"]["geometric_brauer"], serde_json::json!({"type": "d_twist", "d": -1}));
    assert_eq!(v["result"]["transcendental_bound"], group(0, &[4]));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &[][..],
        &["frobnicate"],
        &["tables"],
        &["tables", "--case", "4"],
        &["invariants", "--d", "x", "--n", "4"],
        &["classify", "--boundary", r#"{"type":"line_conic"}"#],
        &["example", "--poly", "1,a,1,1", "--a", "1"],
        &["example", "--poly", "1,1,1,1"],
        &["example", "--poly", "1,1,1,1", "--a", "1", "--auto-a", "3"],
        &["lines", "--format", "yaml"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn computation_errors_exit_one_naming_precondition() {
    for (args, needle) in [
        (&["invariants", "--d", "2", "--n", "12"][..], "prime power"),
        (&["invariants", "--d", "0", "--n", "4"], "squarefree"),
        (&["example", "--poly", "0,0,1,1", "--a", "1"], "separable"),
        (&["example", "--poly", "1,0,1", "--a", "1"], "degree"),
        (&["example", "--poly", "1,0,1,1", "--a", "1"], "general position"),
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        let err = String::from_utf8(out.stderr).unwrap();
        assert!(err.contains(needle), "{args:?}: {err}");
    }
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
}

#[test]
fn config_file_supplies_flags() {
    let dir = std::env::temp_dir().join(format!("cubic-brauer-config-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("config.toml");
    std::fs::write(&path, "format = \"json\"\n[invariants]\nd = -3\nn = 9\n[example]\npoly = \"3,3,1,1\"\nauto-a = 20\n")
        .unwrap();
    let p = path.to_str().unwrap();
    let v = json(&["invariants", "--config", p]);
    assert_eq!(v["result"]["invariants"], group(0, &[3]));
    // command-line flags win over the file
    let v = json(&["invariants", "--config", p, "--n", "4"]);
    assert_eq!(v["result"]["invariants"], group(0, &[2]));
    let v = json(&["example", "--config", p]);
    assert_eq!(v["result"]["brauer"], group(0, &[6]));

    std::fs::write(&path, "colour = 1\n").unwrap();
    assert_eq!(run(&["lines", "--config", p]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn precision_cap_from_environment() {
    let out = bin()
        .args(["example", "--poly", "-2,-2,1,1", "--a", "3"])
        .env(brauer_cli::PRECISION_CAP_ENV, "256")
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["inputs"]["precision_cap"], 256);
    let out = bin().args(["example", "--poly", "-2,-2,1,1", "--a", "3"]).env(brauer_cli::PRECISION_CAP_ENV, "lots").output();
    assert_eq!(out.unwrap().status.code(), Some(2));
}
