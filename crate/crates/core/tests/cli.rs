use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn coordring(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coordring"))
        .args(args)
        .output()
        .unwrap()
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON document")
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("coordring-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn variety_of_system_from_problem_file() {
    let path = temp_file(
        "system.txt",
        "FIELD GF(2)\nVARS 2\nPOINTS FULL\nPOLY f = x\nPOLY g = y + 1\n",
    );
    let out = coordring(&["--problem", path.to_str().unwrap(), "--json", "variety"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json_of(&out);
    assert_eq!(doc["field"], "GF(2)");
    assert_eq!(doc["nvars"], 2);
    assert_eq!(doc["pointset"], "FULL");
    assert_eq!(doc["operation"], "variety");
    assert_eq!(doc["result"]["variety"], serde_json::json!([[[0], [1]]]));
}

#[test]
fn op_line_selects_the_subcommand() {
    let path = temp_file(
        "op.txt",
        "FIELD GF(3)\nVARS 1\nPOINTS\n0\n1\nPOLY f = x\nOP member --phi \"x^2\" --gens f\n",
    );
    let out = coordring(&["--problem", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("member: true"));
}

#[test]
fn member_with_certificate() {
    let out = coordring(&[
        "--field", "GF(2)", "--nvars", "1", "--json", "member", "--phi", "x^2+x", "--gens", "x",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json_of(&out);
    assert_eq!(doc["result"]["member"], true);
    assert_eq!(doc["certificate"]["exponent"], 1);
    assert_eq!(doc["certificate"]["cofactors"].as_array().unwrap().len(), 1);
}

#[test]
fn non_member_exits_one_with_witness() {
    let out = coordring(&[
        "--field", "GF(3)", "--nvars", "2", "--json", "member", "--phi", "y", "--gens", "x",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let doc = json_of(&out);
    assert_eq!(doc["result"]["member"], false);
    assert!(doc.get("certificate").is_none());
    let w = &doc["result"]["witness_point"];
    assert_eq!(w[0], serde_json::json!([0]));
    assert_ne!(w[1], serde_json::json!([0]));
}

#[test]
fn certify_and_unit_cert() {
    let out = coordring(&[
        "--field", "GF(4)", "--nvars", "1", "certify", "--phi", "x^3", "--gens", "t*x",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let out = coordring(&[
        "--field", "GF(4)", "--nvars", "1", "certify", "--phi", "1", "--gens", "t*x",
    ]);
    assert_eq!(out.status.code(), Some(1));

    let out = coordring(&[
        "--field",
        "GF(2)",
        "--nvars",
        "1",
        "--json",
        "unit-cert",
        "--gens",
        "x,x+1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json_of(&out);
    assert_eq!(doc["result"]["unit"], true);
    assert_eq!(doc["certificate"]["cofactors"].as_array().unwrap().len(), 2);
    let out = coordring(&[
        "--field",
        "GF(2)",
        "--nvars",
        "1",
        "unit-cert",
        "--gens",
        "x",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn ideal_operations() {
    let base = ["--field", "GF(3)", "--nvars", "1", "--json", "op"];
    let run = |op: &str| {
        let mut args = base.to_vec();
        args.extend([op, "--gens", "x", "--gens2", "x-1"]);
        let out = coordring(&args);
        assert_eq!(out.status.code(), Some(0), "{op}");
        json_of(&out)["result"]["variety"].clone()
    };
    assert_eq!(run("sum"), serde_json::json!([]));
    assert_eq!(run("product"), serde_json::json!([[[0]], [[1]]]));
    assert_eq!(run("intersect"), serde_json::json!([[[0]], [[1]]]));
    assert_eq!(run("quotient"), serde_json::json!([[[0]]]));
}

#[test]
fn equal_maximal_radical_reduce() {
    let ctx = ["--field", "GF(3)", "--nvars", "1"];
    let with = |rest: &[&str]| {
        let mut a = ctx.to_vec();
        a.extend_from_slice(rest);
        coordring(&a)
    };
    assert_eq!(
        with(&["equal", "--gens", "x^2", "--gens2", "x"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        with(&["equal", "--gens", "x", "--gens2", "x+1"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(with(&["maximal", "--gens", "x-2"]).status.code(), Some(0));
    assert_eq!(with(&["maximal", "--gens", "x^2-x"]).status.code(), Some(1));
    assert_eq!(with(&["radical", "--gens", "x^2"]).status.code(), Some(0));
    let out = with(&["reduce", "--phi", "x^5 + x^4"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("reduced: x^2 + x"));
}

#[test]
fn rabinowitsch_lift_from_cli() {
    let ctx = [
        "--field",
        "GF(2)",
        "--nvars",
        "1",
        "--json",
        "rabinowitsch",
        "--gens",
        "x",
    ];
    let mut member = ctx.to_vec();
    member.extend(["--phi", "x^2"]);
    let out = coordring(&member);
    assert_eq!(out.status.code(), Some(0));
    let doc = json_of(&out);
    assert_eq!(doc["result"]["lifted_variety_empty"], true);
    assert_eq!(doc["result"]["lifted_points"], 4);

    let mut non_member = ctx.to_vec();
    non_member.extend(["--phi", "x+1"]);
    assert_eq!(coordring(&non_member).status.code(), Some(1));
}

#[test]
fn ideal_of_point_set_and_subset() {
    let path = temp_file("points.txt", "FIELD GF(3)\nVARS 1\nPOINTS\n0\n2\n");
    let out = coordring(&["--points", path.to_str().unwrap(), "--json", "ideal-of"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json_of(&out);
    assert_eq!(doc["pointset"], serde_json::json!([[[0]], [[2]]]));
    assert!(!doc["result"]["generators"].as_array().unwrap().is_empty());

    let out = coordring(&[
        "--field",
        "GF(2)",
        "--nvars",
        "2",
        "--json",
        "ideal-of",
        "--subset",
        "(0,1);(1,1)",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json_of(&out);
    assert_eq!(
        doc["result"]["ideal"]["variety"],
        serde_json::json!([[[0], [1]], [[1], [1]]])
    );
}

#[test]
fn extension_field_coefficients_round_trip_through_cli() {
    let out = coordring(&[
        "--field",
        "GF(4)",
        "--nvars",
        "1",
        "reduce",
        "--phi",
        "(t+1)*x^4 + t",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("reduced: (t+1)*x + t"));
}

#[test]
fn verify_single_target() {
    let out = coordring(&[
        "--field",
        "GF(2)",
        "--nvars",
        "2",
        "--json",
        "verify",
        "correspondence",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json_of(&out);
    assert_eq!(doc["report"][0]["statement_id"], "correspondence");
    assert_eq!(doc["report"][0]["failure_count"], 0);
    assert!(doc["report"][0].get("elapsed").is_none());
}

#[test]
fn verify_all_small_grid() {
    let out = coordring(&[
        "verify", "all", "--q", "2", "--n", "1", "--trials", "10", "--seed", "3", "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json_of(&out);
    assert_eq!(doc["result"]["passed"], true);
    assert!(doc["report"]
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["instance_count"].as_u64().unwrap() > 0));
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = [
        "--field", "GF(9)", "--nvars", "2", "--json", "member", "--phi", "x*y + t", "--gens",
        "x, y - t",
    ];
    let a = coordring(&args);
    let b = coordring(&args);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), b.status.code());
}

#[test]
fn malformed_input_exits_two_without_output() {
    let bad: &[&[&str]] = &[
        &[
            "--field", "GF(2)", "--nvars", "1", "--json", "variety", "--gens", "x0^",
        ],
        &["--field", "GF(6)", "--nvars", "1", "variety", "--gens", "x"],
        &["--field", "GF(2)", "--nvars", "1", "variety", "--gens", "q"],
        &[
            "--field",
            "GF(2)",
            "--nvars",
            "1",
            "--points",
            "/nonexistent/points",
            "variety",
            "--gens",
            "x",
        ],
        &["--field", "GF(2)", "--nvars", "1", "frobnicate"],
        &["--field", "GF(2)", "--nvars", "1"],
    ];
    for args in bad {
        let out = coordring(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
    let path = temp_file("dup.txt", "FIELD GF(2)\nVARS 1\nPOINTS\n0\n0\n");
    let out = coordring(&["--points", path.to_str().unwrap(), "variety", "--gens", "x"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());

    let out = coordring(&[
        "--field", "GF(2)", "--nvars", "1", "variety", "--gens", "x0^",
    ]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("position 3"));
}
