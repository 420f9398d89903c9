use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_whittaker"));
    c.env_remove("WHITTAKER_KL_CACHE");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn mult_principal_atypical_weight_has_two_factors() {
    let out = run(&["mult", "--algebra", "gl,1,2", "--lambda", "0,0,0", "--zeta", "1:1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    let total: u64 = v["result"]["factors"].as_array().unwrap().iter().map(|f| f["mult"].as_u64().unwrap()).sum();
    assert_eq!(total, 2);
    assert_eq!(v["result"]["status"], "ok");
}

#[test]
fn single_multiplicity() {
    let out = run(&["mult", "--algebra", "gl,1,2", "--lambda", "0,0,0", "--zeta", "1:1", "--mu", "0,-1,1"]);
    assert_eq!(json_of(&out)["result"]["multiplicity"], 1);
}

#[test]
fn typical_pe2() {
    let v = json_of(&run(&["typical", "--algebra", "pe,2", "--lambda", "1,0"]));
    assert_eq!(v["result"]["typical"], true);
    let v = json_of(&run(&["typical", "--algebra", "pe,2", "--lambda", "1,1"]));
    assert_eq!(v["result"]["typical"], false);
}

#[test]
fn kl_single_polynomial() {
    let out = run(&["kl", "--group", "A3", "--x", "s2", "--w", "s2s1s3s2"]);
    assert_eq!(json_of(&out)["result"]["P"], "1+q");
    let csv = run(&["kl", "--group", "A3", "--x", "s2", "--w", "s2s1s3s2", "--format", "csv"]);
    assert!(String::from_utf8_lossy(&csv.stdout).ends_with(",1+q\n"));
}

#[test]
fn kl_table_and_block_csv() {
    let out = run(&["kl", "--group", "A2", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("x,w,P\n"));
    assert_eq!(text.lines().count(), 1 + 19);
    let out = run(&["kl", "--algebra", "even:gl,1,2", "--lambda", "0,0,0", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 3);
}

#[test]
fn simple_and_orbit() {
    let v = json_of(&run(&["simple", "--algebra", "gl,1,2", "--lambda", "0,3,0", "--zeta", "1:1"]));
    assert_eq!(v["result"]["simple"], true);
    let v = json_of(&run(&["simple", "--algebra", "gl,1,2", "--lambda", "0,0,0", "--zeta", "1:1"]));
    assert_eq!(v["result"]["simple"], false);
    let v = json_of(&run(&["orbit", "--algebra", "gl,1,2", "--lambda", "-1,0,3", "--zeta", "1:1"]));
    assert_eq!(v["result"]["size"], 2);
}

#[test]
fn whvec_prints_model_elements() {
    let v = json_of(&run(&["whvec", "--algebra", "gl,1,2", "--lambda", "0,0,0", "--zeta", "1:1"]));
    assert_eq!(v["result"]["dim"], 2);
    assert_eq!(v["result"]["stable"], true);
    let texts: Vec<&str> = v["result"]["vectors"].as_array().unwrap().iter().map(|x| x["text"].as_str().unwrap()).collect();
    assert!(texts.contains(&"F21^0 F31^0 ⊗ (1)"));
    let v = json_of(&run(&["whvec", "--algebra", "pe,2", "--lambda", "2,0", "--zeta", "1:1"]));
    assert_eq!(v["result"]["dim"], 1);
    let v = json_of(&run(&["whvec", "--algebra", "gl,1,2", "--lambda", "1,2,0", "--zeta", "1:2", "--scope", "even"]));
    assert_eq!(v["result"]["dim"], 4);
}

#[test]
fn echo_round_trips() {
    let cases: &[&[&str]] = &[
        &["mult", "--algebra", " GL,1,2", "--lambda", "0, 2/4,-0", "--zeta", "1:1"],
        &["mult", "--algebra", "gl,2,2", "--lambda", "0,0,0,0", "--zeta", "1:1,2:2"],
        &["orbit", "--algebra", "osp,2", "--lambda", "1,-1,1/3"],
        &["simple", "--algebra", "pe,3", "--lambda", "1,0,-1", "--zeta", "1:1", "--strict"],
        &["kl", "--group", "c2", "--x", "s1", "--w", "s1s2s1"],
        &["whvec", "--algebra", "pe,2", "--lambda", "1/2,0", "--zeta", "1:3", "--bound", "2"],
    ];
    for args in cases {
        let out = run(args);
        let v = json_of(&out);
        let echo = &v["request"];
        let reparsed: Value = serde_json::from_str(&serde_json::to_string(echo).unwrap()).unwrap();
        assert_eq!(&reparsed, echo);
        let again = bin()
            .args(["replay", &serde_json::to_string(&v).unwrap()])
            .output()
            .expect("spawn");
        assert_eq!(again.stdout, out.stdout, "{args:?}");
        assert_eq!(again.status.code(), out.status.code());
    }
    let v = json_of(&run(cases[0]));
    assert_eq!(v["request"]["algebra"], "gl,1,2");
    assert_eq!(v["request"]["lambda"], "0,1/2,0");
}

#[test]
fn exit_codes() {
    let out = run(&["mult", "--algebra", "gl,1,2", "--lambda", "0,x,0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("--lambda"));
    let out = run(&["mult", "--algebra", "gl,1,2", "--lambda", "0,0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("--lambda"));
    let out = run(&["mult", "--algebra", "sl,3", "--lambda", "0,0,0"]);
    assert!(stderr(&out).contains("--algebra"));
    let out = run(&["mult", "--algebra", "gl,1,2", "--lambda", "0,0,0", "--zeta", "7:1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("--zeta"));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));

    let args = ["mult", "--algebra", "gl,2,2", "--lambda", "0,0,0,0", "--zeta", "1:1"];
    let out = run(&args);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["result"]["status"], "unsupported");
    let out = run(&[&args[..], &["--strict"]].concat());
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json_of(&out)["result"]["status"], "unsupported");
}

#[test]
fn kl_cache_hits_and_survives_corruption() {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("kl-cache-test");
    let _ = std::fs::remove_dir_all(&dir);
    let go = || {
        bin()
            .env("WHITTAKER_KL_CACHE", &dir)
            .args(["kl", "--group", "B3", "--x", "e", "--w", "s3s2s3"])
            .output()
            .expect("spawn")
    };
    let first = go();
    assert!(stderr(&first).contains("Miss"));
    let second = go();
    assert!(stderr(&second).contains("Hit"));
    assert_eq!(first.stdout, second.stdout);
    let file = dir.join("kl-B3.json");
    let text = std::fs::read_to_string(&file).unwrap();
    std::fs::write(&file, text.replacen("\"1\"", "\"2\"", 1)).unwrap();
    let third = go();
    assert!(stderr(&third).contains("Corrupt"));
    assert_eq!(third.stdout, first.stdout);
    std::fs::write(&file, "not json").unwrap();
    assert_eq!(go().stdout, first.stdout);
    assert!(stderr(&go()).contains("Hit"));
}

#[test]
fn verify_subset() {
    let out = run(&["verify", "--criteria", "2,3,7", "--sequential"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    let crit = v["result"]["criteria"].as_array().unwrap();
    assert_eq!(crit.len(), 3);
    assert!(crit.iter().all(|c| c["passed"] == true));
    assert_eq!(stderr(&out).lines().filter(|l| l.starts_with("criterion")).count(), 3);
    assert_eq!(run(&["verify", "--criteria", "11"]).status.code(), Some(1));
}
