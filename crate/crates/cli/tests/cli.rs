use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

fn run(args: &[&str], stdin: Option<&[u8]>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cotwist"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(bytes) = stdin {
            pipe.write_all(bytes).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn ok_json(args: &[&str], stdin: Option<&[u8]>) -> (Vec<u8>, Value) {
    let out = run(args, stdin);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = serde_json::from_slice(&out.stdout).unwrap();
    (out.stdout, v)
}

fn twisted(name: &str) -> (Vec<u8>, Value) {
    let (cat, _) = ok_json(&["catalog", name], None);
    ok_json(&["twist", "--cocycle", "builtin:sigma_V"], Some(&cat))
}

#[test]
fn tetrahedron_twist_gives_quartic() {
    let (_, v) = twisted("tetrahedron");
    let rels: Vec<&str> = v["relations"].as_array().unwrap().iter().map(|r| r.as_str().unwrap()).collect();
    assert!(rels.contains(
        &"Z^4 - 2*Y^2*Z^2 + Y^4 - 2*X^2*Z^2 - 2*X^2*Y^2 + X^4 - 8*X*Y*Z + 2*Z^2 + 2*Y^2 + 2*X^2 + 1"
    ));
    assert!(rels.contains(&"-Y*X - X*Y"));
    assert_eq!(v["provenance"]["cocycle_spec"], "builtin:sigma_V");
    assert_eq!(v["provenance"]["inputs"][0]["sha256"].as_str().unwrap().len(), 64);
}

#[test]
fn twist_is_byte_deterministic_and_reparses() {
    let (a, v) = twisted("sl2_coord");
    let (b, _) = twisted("sl2_coord");
    assert_eq!(a, b);
    let doc = cotwist::io::presentation_from_json(&v).unwrap();
    let entry = cotwist::catalog(cotwist::CatalogName::Sl2Coord, &Default::default()).unwrap();
    assert_eq!(doc.presentation, entry.twisted().unwrap());
    assert_eq!(
        doc.coproduct.unwrap(),
        cotwist::twist_coproduct(entry.coproduct.as_ref().unwrap(), &entry.twist).unwrap()
    );
}

#[test]
fn normalize_one_rewrite_step() {
    let (u, _) = twisted("u_sl2");
    let (_, v) = ok_json(&["normalize", "--expr", "B*A"], Some(&u));
    assert_eq!(v["details"]["normal_form"], "-A*B - 2*H");
    assert_eq!(v["details"]["confluent"], true);
}

#[test]
fn verify_twisted_coproduct() {
    let (p, _) = twisted("sl2_coord");
    let (_, v) = ok_json(&["verify"], Some(&p));
    assert_eq!(v["status"], "pass");
    assert_eq!(v["details"]["coproduct"]["holds"], true);
}

#[test]
fn verify_reports_non_confluence() {
    let doc = json!({
        "grading": { "free_rank": 0, "torsion": [] },
        "generators": [{ "name": "a" }, { "name": "b" }],
        "relations": ["b*a + a*b", "b*b - a"],
    });
    let out = run(&["verify"], Some(doc.to_string().as_bytes()));
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["details"]["confluent"], false);
}

#[test]
fn fourier_tensor_has_quarter_coefficients() {
    let (_, v) = ok_json(&["twist-to-tensor", "--cocycle", "builtin:sigma_V"], None);
    let terms = v["details"]["tensor"]["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 16);
    let coeff = |l: [i64; 2], r: [i64; 2]| {
        terms.iter().find(|t| t["left"] == json!(l) && t["right"] == json!(r)).unwrap()["coefficient"].clone()
    };
    assert_eq!(coeff([0, 0], [0, 0]), "1/4");
    assert_eq!(coeff([1, 0], [1, 0]), "-1/4");
    assert_eq!(coeff([1, 0], [0, 1]), "1/4");
    assert_eq!(coeff([0, 1], [1, 0]), "-1/4");
}

#[test]
fn corrupted_cocycle_exits_one_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    let doc = json!({
        "grading": { "free_rank": 0, "torsion": [2, 2] },
        "cocycle": { "kind": "table", "values": [[1, 1, 1, 1], [1, -1, 1, -1], [1, -1, -1, 1], [1, 1, 1, -1]] },
    });
    std::fs::write(&path, doc.to_string()).unwrap();
    let out = run(&["check-cocycle", "--cocycle", path.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["details"]["valid"], false);
    assert!(v["details"]["witness"].is_array());

    let out = run(&["check-cocycle", "--cocycle", "builtin:sigma_V"], None);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cat.json");
    let out = run(&["catalog", "torus", "--n", "2", "-o", path.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["generators"].as_array().unwrap().len(), 4);
}

#[test]
fn usage_and_schema_errors_exit_two() {
    assert_eq!(run(&["twist", "--bogus"], None).status.code(), Some(2));
    assert_eq!(run(&["catalog", "nope"], None).status.code(), Some(2));
    let out = run(&["verify"], Some(b"{\"grading\": {\"free_rank\": 1}, \"generators\": 3}"));
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("generators"));
    let out = run(&["verify"], Some(b"{\n  \"grading\": \n}"));
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("<stdin>:3:"));
}

#[test]
fn cocycle_group_must_match_grading() {
    let (cat, _) = ok_json(&["catalog", "poly_ring"], None);
    let out = run(&["twist", "--cocycle", "builtin:sigma_V"], Some(&cat));
    assert_eq!(out.status.code(), Some(2));
    let (_, v) = ok_json(&["twist", "--cocycle", "builtin:bilinear_q:[[0,1,0],[0,0,2],[0,0,0]]"], Some(&cat));
    assert!(v["relations"].as_array().unwrap().iter().any(|r| r == "-X2*X1 + q^-1*X1*X2"));
}

#[test]
fn suggested_cocycle_round_trip() {
    let (cat, _) = ok_json(&["catalog", "poly_ring_root_of_unity"], None);
    let (_, v) = ok_json(&["twist", "--cocycle", "builtin:suggested"], Some(&cat));
    assert_eq!(v["relations"].as_array().unwrap().len(), 1);
}

#[test]
fn modules_report() {
    let (_, v) = ok_json(&["modules", "--family", "b", "--n", "1", "--sign", "plus"], None);
    let m = &v["details"]["modules"][0];
    assert_eq!(m["dim"], 2);
    assert_eq!(m["matrices"]["X"], json!([["2", "0"], ["0", "0"]]));
    assert_eq!(m["ladder"]["case"], 2);
    let (_, all) = ok_json(&["modules", "--max-n", "3"], None);
    assert_eq!(all["status"], "pass");
}

#[test]
fn suite_runs_and_is_sorted() {
    let (_, v) = ok_json(&["suite"], None);
    let names: Vec<&str> = v["cases"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    assert_eq!(v["summary"]["pass"], 13);
}
