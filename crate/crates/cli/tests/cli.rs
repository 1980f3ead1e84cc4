use std::path::PathBuf;
use std::process::{Command, Output};

use kfde::semantics::ModelFile;
use kfde::tableau::ProofTree;
use kfde::{Model, PointedModel};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/data").join(format!("{name}.json"))
}

fn kfde(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kfde")).args(args).env_remove("NO_COLOR").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn prove_exit_codes() {
    let proved = kfde(&["prove", "#p |- #~p"]);
    assert_eq!(proved.status.code(), Some(0));
    assert!(stdout(&proved).starts_with("PROVED"));

    let refuted = kfde(&["prove", "q | ~q |- #(q | ~q)"]);
    assert_eq!(refuted.status.code(), Some(1));
    let text = stdout(&refuted);
    assert!(text.starts_with("REFUTED"));
    assert!(text.contains("worlds: w0* w1 w2"));

    let bad = kfde(&["prove", "p |-"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).starts_with("error:"));
    assert!(bad.stdout.is_empty());
}

#[test]
fn prove_json_round_trips() {
    let out = kfde(&["--json", "prove", "q | ~q |- #(q | ~q)"]);
    let v = json(&out);
    assert_eq!(v["verdict"], "refuted");
    let tree: ProofTree = serde_json::from_value(v["tree"].clone()).unwrap();
    assert!(tree.nodes().count() > 1);
    let file: ModelFile = serde_json::from_value(v["countermodel"].clone()).unwrap();
    let m = PointedModel::from_file(&file, None).unwrap();
    assert!(!kfde::semantics::sequent_holds(&m.model, &kfde::parse_sequent("q | ~q |- #(q | ~q)").unwrap()));
}

#[test]
fn eval_prints_the_value() {
    let m = data("glut_successor");
    let out = kfde(&["eval", "--model", m.to_str().unwrap(), "--world", "w0", "--formula", "#p"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "F");
    let out = kfde(&["eval", "--model", m.to_str().unwrap(), "--formula", "[]p"]);
    assert_eq!(stdout(&out).trim(), "B");
    let missing = kfde(&["eval", "--model", m.to_str().unwrap(), "--world", "nowhere", "--formula", "p"]);
    assert_eq!(missing.status.code(), Some(2));
    let no_file = kfde(&["eval", "--model", "/nonexistent.json", "--formula", "p"]);
    assert_eq!(no_file.status.code(), Some(2));
}

#[test]
fn valid_on_frame_verdicts() {
    let single = data("single_edge_frame");
    let out = kfde(&["valid-on-frame", "--frame", single.to_str().unwrap(), "@p |- ##p"]);
    assert_eq!((out.status.code(), stdout(&out).trim().to_owned()), (Some(0), "VALID".to_owned()));
    let refl = data("reflexive_point_frame");
    let out = kfde(&["valid-on-frame", "--frame", refl.to_str().unwrap(), "#p"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).starts_with("NOT VALID"));
    let out = kfde(&["valid-on-frame", "--frame", refl.to_str().unwrap(), "--max-cells", "0", "#p"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dual_output_loads_back() {
    let out = kfde(&["dual", "--model", data("glut_gap_point").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let file = ModelFile::from_json(&stdout(&out)).unwrap();
    let m = Model::from_file(&file).unwrap();
    assert_eq!(m.value_at(0, "p"), kfde::FourValue::N);
    assert_eq!(m.value_at(0, "q"), kfde::FourValue::B);
    assert_eq!(file.designated.as_deref(), Some("w"));
}

#[test]
fn countermodel_search() {
    let out = kfde(&["countermodel", "#p |- p", "--max-worlds", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).starts_with("FOUND"));
    let out = kfde(&["countermodel", "#p |- #~p"]);
    assert_eq!(out.status.code(), Some(0));
    let out = kfde(&["countermodel", "p |- q", "--max-worlds", "9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn definability_verdicts() {
    let out = kfde(&["definability", "--property", "T"]);
    assert_eq!(out.status.code(), Some(0));
    let dir = tempfile::tempdir().unwrap();
    let set = dir.path().join("four.txt");
    std::fs::write(&set, "// transitivity candidate\n#p |- ##p\n").unwrap();
    let out = kfde(&["--json", "definability", "--property", "transitive", "--sequents", set.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["verdict"]["verdict"], "refuted");
    let out = kfde(&["definability", "--property", "transitive"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn separate_verdicts() {
    let a = data("classical_point");
    let b = data("classical_gap_cluster");
    let base = ["separate", "--model-a", a.to_str().unwrap(), "--model-b", b.to_str().unwrap()];
    let out = kfde(&[&base[..], &["--language", "box", "--criterion", "transfer", "--max-size", "7"]].concat());
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("NOT SEPARATED"));
    let out = kfde(&[&base[..], &["--language", "tri", "--max-size", "3"]].concat());
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("SEPARATED by #p"));
}

#[test]
fn figures_are_deterministic_and_export() {
    let first = kfde(&["figures"]);
    let second = kfde(&["figures"]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let dir = tempfile::tempdir().unwrap();
    let out = kfde(&["figures", "--export", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    for entry in std::fs::read_dir(dir.path()).unwrap() {
        let text = std::fs::read_to_string(entry.unwrap().path()).unwrap();
        ModelFile::from_json(&text).unwrap();
    }
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), kfde::analysis::figures::BUNDLED.len());
}

#[test]
fn no_color_switches_to_ascii() {
    let fancy = kfde(&["prove", "#p |- #~p"]);
    assert!(stdout(&fancy).contains('▲'));
    let plain = Command::new(env!("CARGO_BIN_EXE_kfde")).args(["prove", "#p |- #~p"]).env("NO_COLOR", "1").output().unwrap();
    let text = stdout(&plain);
    assert!(text.is_ascii(), "{text}");
    assert_eq!(plain.status.code(), fancy.status.code());
    let ascii = kfde(&["--ascii", "prove", "#p |- #~p"]);
    assert_eq!(ascii.stdout, plain.stdout);
}
