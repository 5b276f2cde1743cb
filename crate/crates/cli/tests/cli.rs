use std::io::Write;
use std::process::{Command, Output, Stdio};

fn catena(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_catena"))
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
    String::from_utf8(o.stdout.clone()).unwrap()
}

const DOMAIN_EXAMPLE: &str = "ring Q[x,y,z,v]  ideal I = intersect((x),(y,z))  analyze I";

#[test]
fn domain_example_json() {
    let o = catena(&["--format", "json"], DOMAIN_EXAMPLE);
    assert_eq!(o.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(json["verdicts"]["noncat_domain"], true);
    assert_eq!(json["witnesses"]["P"], serde_json::json!(["y", "z"]));
    assert_eq!(json["dim"], 3);
    assert_eq!(json["profile"], serde_json::json!([3, 2]));
}

#[test]
fn text_is_the_default_format() {
    let o = catena(&[], DOMAIN_EXAMPLE);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("noncat_domain"));
    assert!(out.contains("(y,z) < (y,z,v) < (x,y,z,v)"), "{out}");
}

#[test]
fn chain_dot_has_four_nodes_and_three_edges() {
    let script = "ring Q[x,y1,y2,z1,z2] ideal I = intersect((x), (y1,y2)) chain I from (y1,y2)";
    let o = catena(&["--format", "dot"], script);
    assert_eq!(o.status.code(), Some(0));
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.lines().filter(|l| l.contains("label=")).count(), 4);
    assert_eq!(dot.lines().filter(|l| l.contains("->")).count(), 3);
}

#[test]
fn family_subcommand() {
    let o = catena(&["--format", "json"], "family example_ufd(2,3)");
    assert_eq!(o.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(json["dim"], 5);
    assert_eq!(json["verdicts"]["noncat_ufd"], true);
    assert_eq!(json["witnesses"]["ufd_witness_prime"], serde_json::json!(["y1", "y2", "z1", "z2", "z3"]));
}

#[test]
fn script_from_a_file() {
    let dir = std::env::temp_dir().join(format!("catena-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("example.cat");
    std::fs::write(&path, "# the catenary family, n = 3\nfamily example_catenary(3)\nprofile_check_is_separate: \n").unwrap();
    let o = catena(&[path.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(1), "the trailing line is not valid syntax");
    std::fs::write(&path, "# the catenary family, n = 3\nfamily example_catenary(3)\n").unwrap();
    let o = catena(&[path.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("expected values: all match"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes() {
    // parse errors
    let o = catena(&[], "ideal I = (x)");
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("no ring declared"));
    // unsupported input class
    assert_eq!(catena(&[], "ring Q[x,y] ideal I = (x^2 - y^3) poset I").status.code(), Some(2));
    assert_eq!(catena(&[], "ring Q[x] ideal I = (x - 1) analyze I").status.code(), Some(2));
    // resource budget
    let o = catena(
        &["--budget-gb-steps", "1"],
        "ring Q[x,y,z] ideal I = (x^3 - y*z, y^3 - x*z, z^3 - x*y) analyze I",
    );
    assert_eq!(o.status.code(), Some(3));
    let o = catena(&["--max-poset-vars", "2"], "ring Q[x,y,z] ideal I = (x*y) poset I");
    assert_eq!(o.status.code(), Some(3));
    // unknown format
    assert_ne!(catena(&["--format", "yaml"], DOMAIN_EXAMPLE).status.code(), Some(0));
}

#[test]
fn order_and_budget_flags_are_accepted() {
    let o = catena(
        &["--order", "lex", "--budget-gb-steps", "5000", "--budget-regular-candidates", "10", "--max-poset-vars", "8", "--format", "json"],
        DOMAIN_EXAMPLE,
    );
    assert_eq!(o.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(json["verdicts"]["noncat_domain"], true);
    assert_eq!(json["ring"], "Q[x,y,z,v]/(x*y, x*z)");
}

#[test]
fn zero_regular_candidates_leaves_depth_inconclusive() {
    let o = catena(&["--budget-regular-candidates", "0", "--format", "json"], DOMAIN_EXAMPLE);
    assert_eq!(o.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(json["conditions"]["depth_ge2"].is_null());
    assert!(json["inconclusive"].as_array().unwrap().iter().any(|s| s.as_str().unwrap().starts_with("depth_ge2")));
}

#[test]
fn several_commands_give_a_json_array() {
    let o = catena(&["--format", "json"], "ring Q[x,y] ideal I = (x*y) profile I poset I");
    assert_eq!(o.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(json[0]["profile"], serde_json::json!([1, 1]));
    assert_eq!(json[1]["nodes"].as_array().unwrap().len(), 3);
}

#[test]
fn schema_is_printable() {
    let o = catena(&["--print-schema"], "");
    assert_eq!(o.status.code(), Some(0));
    let schema: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(schema["type"], "object");
}
