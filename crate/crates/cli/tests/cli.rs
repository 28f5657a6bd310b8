use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use kerov_core::exact::field::FieldElem;
use kerov_core::kerov::PolyDoc;
use serde_json::Value;
use sha2::{Digest, Sha256};

fn kerov(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kerov")).args(args).env_remove("KEROV_CACHE").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn k2_text() {
    let o = kerov(&["kerov", "--mu", "2", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "a^2*R3 + a*b*R2\n");
    let o = kerov(&["kerov", "--mu", "4"]);
    assert_eq!(
        stdout(&o),
        "a^4*R5 + a^3*b*(6*R4 + R2^2) + 5*a^3*R3 + 11*a^2*b^2*R3 + 7*a^2*b*R2 + 6*a*b^3*R2\n"
    );
}

#[test]
fn alpha_specialization_ties_beta() {
    let o = kerov(&["kerov", "--mu", "3", "--alpha", "2"]);
    assert_eq!(stdout(&o), "8*R4 - 12*R3 + 8*R2\n");
    let o = kerov(&["kerov", "--mu", "3", "--alpha", "2", "--independent-beta"]);
    assert_eq!(stdout(&o), "4*b^2*R2 + 12*b*R3 + 8*R4 + 4*R2\n");
}

#[test]
fn zeta_eta_point() {
    // ζ = −2, η = 1/3 gives α = 3/2, β = 5/2.
    let o = kerov(&["kerov", "--mu", "3", "--mode", "zeta-eta", "--zeta", "-2", "--eta", "1/3", "--format", "csv"]);
    assert_eq!(stdout(&o), "rho,coef\n4,\"27/8\"\n3,\"135/8\"\n2,\"21/1\"\n");
}

#[test]
fn theta_json_has_four_entries() {
    let o = kerov(&["theta", "--n", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 4);
    let top = entries.iter().find(|e| e["lambda"] == "[2]" && e["rho"] == "[2]").unwrap();
    let val: FieldElem = top["value"].as_str().unwrap().parse().unwrap();
    assert_eq!(val, FieldElem::alpha());
}

#[test]
fn verify_subset_passes() {
    let o = kerov(&["verify", "--claims", "thm7,thm8", "--rmax", "6", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let ids: Vec<&str> = v.as_array().unwrap().iter().map(|r| r["claim_id"].as_str().unwrap()).collect();
    assert_eq!(ids, ["thm7", "thm8"]);
    assert!(v.as_array().unwrap().iter().all(|r| r["status"] == "pass"));
}

#[test]
fn exit_codes() {
    assert_eq!(kerov(&["bogus"]).status.code(), Some(64));
    assert_eq!(kerov(&["kerov", "--nope"]).status.code(), Some(64));
    assert_eq!(kerov(&["kerov"]).status.code(), Some(64));
    assert_eq!(kerov(&["verify", "--claims", "thm99"]).status.code(), Some(64));
    assert_eq!(kerov(&["kerov", "--mu", "2,1"]).status.code(), Some(1));
    assert_eq!(kerov(&["kerov", "--mu", "2", "--zeta", "1"]).status.code(), Some(64));
    assert_eq!(kerov(&["--help"]).status.code(), Some(0));
}

#[test]
fn output_is_deterministic() {
    let args = ["table", "--rmax", "5", "--format", "json"];
    assert_eq!(stdout(&kerov(&args)), stdout(&kerov(&args)));
}

#[test]
fn json_round_trips() {
    let text = stdout(&kerov(&["kerov-tilde", "--mu", "3,2", "--format", "json"]));
    let doc: PolyDoc = serde_json::from_str(&text).unwrap();
    let k = doc.poly().unwrap();
    let again = serde_json::to_string_pretty(&PolyDoc::new(&"3,2".parse().unwrap(), "symbolic", doc.basis, &k)).unwrap();
    assert_eq!(again + "\n", text);
}

#[test]
fn empty_csv_keeps_header() {
    // α = 0 kills every term.
    let o = kerov(&["kerov", "--mu", "2", "--alpha", "0", "--format", "csv"]);
    assert_eq!(stdout(&o), "rho,coef\n");
}

#[test]
fn grade_and_qc() {
    let g = stdout(&kerov(&["grade", "--mu", "4"]));
    assert!(g.contains("(1,1) weight 4: 6*R4 + R2^2\n"));
    let q = stdout(&kerov(&["qc", "--mu", "4"]));
    assert!(q.contains("(1,1) R: 6*R4 + R2^2; Q: 2*Q4; C: 2*C4 - C2^2\n"));
    assert_eq!(kerov(&["grade", "--mu", "4", "--alpha", "2"]).status.code(), Some(64));
}

#[test]
fn fit_published_low_degree() {
    let o = kerov(&["fit", "--claims", "f10,g22", "--rmax", "8"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).lines().all(|l| l.contains(": match")));
    let o = kerov(&["fit", "--claims", "f33", "--rmax", "9"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("undetermined"));
}

#[test]
fn content_fit_row() {
    let o = kerov(&["content-fit", "--mu", "3"]);
    assert_eq!(stdout(&o), "3*a^2*p2 + 3*a*b*p1 - 3*a*C(n,2)\n");
}

fn single_entry(dir: &Path) -> std::path::PathBuf {
    let files: Vec<_> = fs::read_dir(dir).unwrap().map(|e| e.unwrap().path()).collect();
    assert_eq!(files.len(), 1, "{files:?}");
    files.into_iter().next().unwrap()
}

#[test]
fn cache_is_used_and_a_falsified_entry_fails_verification() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let first = stdout(&kerov(&["kerov", "--mu", "3", "--cache-dir", d]));
    let path = single_entry(dir.path());
    assert_eq!(stdout(&kerov(&["kerov", "--mu", "3", "--cache-dir", d])), first);

    // Double K_3 and re-sign the entry so that only the mathematics is wrong.
    let mut entry: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    let doc: PolyDoc = serde_json::from_str(entry["payload"].as_str().unwrap()).unwrap();
    let bad = doc.poly().unwrap().scale(&FieldElem::from_int(2));
    let payload = serde_json::to_string(&PolyDoc::new(&"3".parse().unwrap(), "symbolic", doc.basis, &bad)).unwrap();
    let sum: String = Sha256::digest(payload.as_bytes()).iter().map(|b| format!("{b:02x}")).collect();
    entry["payload"] = Value::String(payload);
    entry["checksum"] = Value::String(sum);
    fs::write(&path, serde_json::to_string(&entry).unwrap()).unwrap();

    let o = kerov(&["verify", "--claims", "thm7", "--rmax", "3", "--cache-dir", d]);
    assert_eq!(o.status.code(), Some(2), "{}", stdout(&o));
    assert!(stdout(&o).contains("fail"));

    // A tampered checksum is a miss, so the engine recomputes.
    let mut entry: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    entry["checksum"] = Value::String("0".repeat(64));
    fs::write(&path, serde_json::to_string(&entry).unwrap()).unwrap();
    let o = kerov(&["kerov", "--mu", "3", "--cache-dir", d]);
    assert_eq!(stdout(&o), first);
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
}
