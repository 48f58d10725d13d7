use std::io::Write;
use std::process::{Command, Output, Stdio};

use vcm_cli::{golden, scenarios};
use vcm_core::PrimeField;

fn vcm(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_vcm"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn scenarios_match_their_goldens() {
    for name in scenarios::NAMES {
        let report = scenarios::run(name, PrimeField::default()).unwrap();
        let text = golden::canonical(&report).unwrap();
        let path = golden::path_for(&golden::default_dir(), name);
        if let Some(diff) = golden::compare(&path, &text).unwrap() {
            panic!("{name} differs from its golden:\n{diff}");
        }
    }
}

#[test]
fn run_example_all_through_the_binary() {
    let out = vcm(&["run-example", "all"], "");
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    for name in scenarios::NAMES {
        assert!(text.contains(&format!("{name}: matches golden")), "{text}");
    }
}

#[test]
fn a_changed_golden_is_reported_with_a_diff() {
    let dir = std::env::temp_dir().join(format!("vcm-golden-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    std::fs::write(dir.join("tangent_bundles.json"), "{}\n").unwrap();
    let out = vcm(&["run-example", "tangent_bundles", "--golden-dir", dir.to_str().unwrap()], "");
    std::fs::remove_dir_all(&dir).unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("+"));
}

#[test]
fn certifying_the_cylinder() {
    let out = vcm(
        &["vcm", "--json"],
        r#"{"blocks":[3,3],"facets":[["x_1_0","x_1_1","x_2_1"],["x_1_0","x_2_0","x_2_1"],["x_1_0","x_1_2","x_2_0"],["x_1_2","x_2_0","x_2_2"],["x_1_1","x_1_2","x_2_2"],["x_1_1","x_2_1","x_2_2"]]}"#,
    );
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["branch"], "delta-union-br");
    assert_eq!(v["length"], 3);
}

#[test]
fn exit_codes() {
    // not vCM
    assert_eq!(vcm(&["classify"], r#"{"blocks":[3],"ideal":["x0^2","x0*x1"]}"#).status.code(), Some(2));
    // relevant Ext^3 blocks the cone
    let lines = r#"{"blocks":[5],"ideal":["x0*x2","x0*x3","x1*x2","x1*x3"]}"#;
    assert_eq!(vcm(&["mapcone"], lines).status.code(), Some(2));
    // a lower-dimensional relevant facet
    let mixed = r#"{"blocks":[2,2],"facets":[["x_1_0","x_1_1","x_2_0"],["x_1_0","x_2_1"]]}"#;
    assert_eq!(vcm(&["vcm"], mixed).status.code(), Some(3));
    // dimension below the number of factors
    assert_eq!(vcm(&["vcm"], r#"{"blocks":[2,2],"facets":[["x_1_0","x_2_0"]]}"#).status.code(), Some(3));
    // malformed input
    assert_eq!(vcm(&["vcm"], "not json").status.code(), Some(1));
}

#[test]
fn errors_are_json_with_the_flag() {
    let out = vcm(&["vcm", "--json"], r#"{"blocks":[2,2],"facets":[["x_1_0","x_2_0"]]}"#);
    assert_eq!(out.status.code(), Some(3));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(v.get("error").is_some(), "{v}");
}

#[test]
fn betti_check_agrees_with_hochster() {
    let out = vcm(&["betti", "--check", "--json"], r#"{"blocks":[4],"facets":[["x0","x1"],["x2","x3"]]}"#);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    assert!(text.contains("\"1,2\": 4"), "{text}");
}

#[test]
fn characteristic_must_be_prime() {
    let out = vcm(&["--char", "12", "srideal"], r#"{"blocks":[2],"facets":[["x0"]]}"#);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not a supported prime"));
}
