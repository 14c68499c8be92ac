use std::path::{Path, PathBuf};

use eulersign_cli::run;
use eulersign_core::{
    padic_forms, real_forms, BwValue, CartanType, CenterModule, FieldSignature, GlobalDescriptor,
    InvariantFamily, LBehavior, Place,
};
use serde_json::{json, Value};

fn fixture(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/fixtures").join(name);
    p.to_str().unwrap().to_string()
}

fn call(args: &[&str]) -> (i32, Value) {
    let mut out = Vec::new();
    let code = run(std::iter::once("eulersign").chain(args.iter().copied()), &mut out);
    let text = String::from_utf8(out).unwrap();
    (code, serde_json::from_str(&text).unwrap_or(Value::String(text)))
}

fn write_json(dir: &Path, name: &str, value: &impl serde::Serialize) -> String {
    let path = dir.join(name);
    std::fs::write(&path, serde_json::to_string(value).unwrap()).unwrap();
    path.to_str().unwrap().to_string()
}

fn a1_descriptor(primes: &[u64]) -> GlobalDescriptor {
    let a1: CartanType = "A1".parse().unwrap();
    let sl2 = real_forms(a1).unwrap().into_iter().find(|r| r.dim_sym == Some(2)).unwrap();
    let split = padic_forms(a1, LBehavior::NotApplicable)
        .unwrap()
        .into_iter()
        .find(|r| r.rank == 1)
        .unwrap();
    let mut places = vec![(Place::real(LBehavior::NotApplicable), sl2)];
    places.extend(primes.iter().map(|&p| (Place::finite(p, LBehavior::NotApplicable), split.clone())));
    GlobalDescriptor {
        cartan: a1,
        k_sig: FieldSignature::new(1, 0).unwrap(),
        l_sig: None,
        places_in_s: places,
    }
}

#[test]
fn sign_verb() {
    let dir = tempfile::tempdir().unwrap();
    let pos = write_json(dir.path(), "pos.json", &a1_descriptor(&[7]));
    let (code, out) = call(&["sign", "--input", &pos]);
    assert_eq!(code, 0);
    assert_eq!(out, json!({"sign": "positive", "d_parity": 0}));
    let neg = write_json(dir.path(), "neg.json", &a1_descriptor(&[]));
    assert_eq!(call(&["sign", "--input", &neg]).1, json!({"sign": "negative", "d_parity": 1}));
}

#[test]
fn sign_output_is_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    let pos = write_json(dir.path(), "pos.json", &a1_descriptor(&[7]));
    let mut out = Vec::new();
    run(["eulersign", "sign", "--input", &pos], &mut out);
    assert_eq!(String::from_utf8(out).unwrap(), "{\"d_parity\":0,\"sign\":\"positive\"}\n");
}

#[test]
fn classify_verb() {
    let (code, out) = call(&["classify", "--type", "E8", "--max-real", "2", "--max-finite", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out, json!({"signs": ["zero", "positive"]}));
    let (code, out) = call(&["classify", "--type", "Q7"]);
    assert_eq!(code, 2);
    assert_eq!(out["error"]["kind"], "InvalidType");
}

#[test]
fn gassmann_verb() {
    let (code, out) = call(&[
        "gassmann",
        "--group",
        &fixture("psl27.json"),
        "--h",
        &fixture("stab.json"),
        "--h2",
        &fixture("twisted.json"),
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, json!({"equivalent": true, "conjugate": false}));
}

#[test]
fn too_large_exits_three() {
    let (code, out) = call(&[
        "--max-elements",
        "100",
        "gassmann",
        "--group",
        &fixture("psl27.json"),
        "--h",
        &fixture("stab.json"),
        "--h2",
        &fixture("twisted.json"),
    ]);
    assert_eq!(code, 3);
    assert_eq!(out["error"]["kind"], "TooLarge");
}

#[test]
fn search_verb_accepts_arrays_and_is_thread_independent() {
    let dir = tempfile::tempdir().unwrap();
    let twisted: Value = serde_json::from_str(&std::fs::read_to_string(fixture("twisted.json")).unwrap()).unwrap();
    let stab: Value = serde_json::from_str(&std::fs::read_to_string(fixture("stab.json")).unwrap()).unwrap();
    let cands = write_json(dir.path(), "cands.json", &json!([twisted, stab]));
    let args = |threads: &'static str| {
        vec![
            "--threads".to_string(),
            threads.to_string(),
            "search".into(),
            "--group".into(),
            fixture("psl27.json"),
            "--candidates".into(),
            cands.clone(),
        ]
    };
    let run_with = |a: Vec<String>| {
        let mut out = Vec::new();
        let code = run(std::iter::once("eulersign".to_string()).chain(a), &mut out);
        (code, out)
    };
    let (code, one) = run_with(args("1"));
    let (_, four) = run_with(args("4"));
    assert_eq!(code, 0);
    assert_eq!(one, four);
    let report: Value = serde_json::from_slice(&one).unwrap();
    assert_eq!(report["verdict"], "fails cycle-type condition");
    assert_eq!(report["candidates"][0]["conjugate"], false);
    assert_eq!(report["candidates"][1]["conjugate"], true);
    assert_eq!(report["pairs"].as_array().unwrap().len(), 1);

    let single = call(&["search", "--group", &fixture("psl27.json"), "--candidates", &fixture("twisted.json")]);
    assert_eq!(single.1["pairs"], report["pairs"]);
}

#[test]
fn search_rejects_intransitive_group() {
    let dir = tempfile::tempdir().unwrap();
    let g = write_json(dir.path(), "g.json", &json!({"degree": 4, "generators": [[1, 0, 2, 3]]}));
    let (code, out) = call(&["search", "--group", &g]);
    assert_eq!(code, 2);
    assert_eq!(out["error"]["kind"], "NotTransitive");
}

#[test]
fn realizable_verb() {
    let dir = tempfile::tempdir().unwrap();
    let na = LBehavior::NotApplicable;
    let f = InvariantFamily::from_pairs(
        CenterModule::Mu2,
        [
            (Place::real(na), BwValue::cyclic(2, 1)),
            (Place::finite(3, na), BwValue::cyclic(2, 1)),
        ],
    )
    .unwrap();
    let path = write_json(dir.path(), "f.json", &f);
    assert_eq!(
        call(&["realizable", "--input", &path]).1,
        json!({"realizable": true, "status": "realizable", "reduced_sum": 0})
    );
    let tri = write_json(dir.path(), "t.json", &InvariantFamily::empty(CenterModule::TrialityMu2));
    let (code, out) = call(&["realizable", "--input", &tri]);
    assert_eq!(code, 2);
    assert_eq!(out["error"]["kind"], "UnsupportedCenter");
}

#[test]
fn dump_tables_verb() {
    let (code, out) = call(&["dump-tables", "--max-rank", "2"]);
    assert_eq!(code, 0);
    let entries = out["entries"].as_array().unwrap();
    assert!(entries.iter().any(|e| e["label"] == "G2(2)"));
    assert!(!out["slices"].as_array().unwrap().is_empty());
}

#[test]
fn input_errors_are_json() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out) = call(&["sign", "--input", "/nonexistent/desc.json"]);
    assert_eq!(code, 2);
    assert_eq!(out["error"]["kind"], "InvalidInput");

    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"degree\": 3, \"generators\": [[0, 0, 1]]}").unwrap();
    let (code, out) = call(&["search", "--group", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert_eq!(out["error"]["kind"], "InvalidInput");

    let (code, out) = call(&["frobnicate"]);
    assert_eq!(code, 2);
    assert_eq!(out["error"]["kind"], "InvalidArguments");
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_eulersign");
    let out = std::process::Command::new(bin)
        .args(["classify", "--type", "G2"])
        .env("EULERSIGN_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "{\"signs\":[\"zero\",\"positive\"]}\n");
    let out = std::process::Command::new(bin).args(["sign"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
