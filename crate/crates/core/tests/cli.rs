use std::process::Command;

use serde_json::Value;
use skewhook::cli::run;

fn call(args: &[&str]) -> (i32, Value) {
    let out = run(std::iter::once("skewhook").chain(args.iter().copied()));
    let v = serde_json::from_str(&out.stdout).unwrap_or(Value::Null);
    (out.code, v)
}

#[test]
fn reference_invocations() {
    let (code, v) = call(&["syt", "count", "--shape", "[3,3,2]/[2,1]", "--method", "nhlf"]);
    assert_eq!(code, 0);
    assert_eq!(v["value"]["count"], "16");

    let (code, v) = call(&["schubert", "upsilon", "--perm", "1432"]);
    assert_eq!(code, 0);
    assert_eq!(v["value"]["upsilon"], "5");

    let (code, v) = call(&["lozenge", "zf", "--hexagon", "1,1,1", "--weights", "uniform"]);
    assert_eq!(code, 0);
    assert_eq!(v["value"]["z"], "2");
}

#[test]
fn methods_agree() {
    let counts: Vec<Value> = ["nhlf", "backtrack", "determinant"]
        .iter()
        .map(|m| call(&["syt", "count", "--shape", "[4,3,2]/[2,1]", "--method", m]).1["value"]["count"].clone())
        .collect();
    assert!(counts.iter().all(|c| *c == counts[0]), "{counts:?}");
    let (a, b) = (
        call(&["syt", "qseries", "--shape", "[3,2]/[1]", "--order", "8"]).1,
        call(&["syt", "qseries", "--shape", "[3,2]/[1]", "--order", "8", "--method", "oracle"]).1,
    );
    assert_eq!(a["value"]["series"], b["value"]["series"]);
    for m in ["enumerate", "determinant"] {
        let (_, v) = call(&["excited", "count", "--shape", "[3,3,2]/[2,1]", "--method", m]);
        assert_eq!(v["value"]["count"], "5", "{m}");
    }
    let slim: Vec<Value> = ["enumerate", "determinant", "hook-content"]
        .iter()
        .map(|m| call(&["excited", "count", "--shape", "[5,5,5]/[2,1]", "--method", m]).1["value"]["count"].clone())
        .collect();
    assert!(slim[0].is_string() && slim.iter().all(|c| *c == slim[0]), "{slim:?}");
    assert_eq!(call(&["excited", "count", "--shape", "[3,3,2]/[2,1]", "--method", "hook-content"]).0, 1);
}

#[test]
fn checks_pass_with_exit_zero() {
    let cases: &[&[&str]] = &[
        &["lozenge", "zf", "--mu", "[2,1]", "--d", "2", "--weights", "hook", "--check"],
        &["lozenge", "zf", "--lambda", "[3,3,2]", "--mu", "[2,1]", "--weights", "x=7,5,3;y=0,1,2", "--check"],
        &["lozenge", "zf", "--hexagon", "2,2,2", "--check"],
        &["lozenge", "prob", "--hexagon", "3,2,3", "--path", "1,1,2,2,1,1", "--check"],
        &["lozenge", "prob", "--hexagon", "2,2,2", "--path", "0,1,1,0,0", "--weights", "uniform", "--check"],
        &["lozenge", "qvolume", "--mu", "[2,2]", "--d", "2", "--check"],
        &["lozenge", "zigzag", "--a", "1"],
        &["lozenge", "frozen", "--abc", "1,1,1"],
        &["lozenge", "racah", "--abc", "2,1,2", "--q", "2", "--u", "1/3"],
        &["lozenge", "racah", "--abc", "2,2,1", "--h", "7/2"],
        &["lozenge", "racah", "--abc", "1,1,1", "--random", "3", "--seed", "9"],
        &["product", "verify", "--params", "1,1,1,1,1,1"],
        &["product", "verify", "--params", "1,0,1,1,0,1", "--q-order", "30"],
        &["schubert", "family", "--kind", "w0", "--n", "4", "--c", "2", "--check"],
        &["multivar", "verify", "--kind", "rect_symmetry", "--shape", "[3,3]/[1]", "--trials", "3"],
    ];
    for args in cases {
        let (code, v) = call(args);
        assert_eq!(code, 0, "{args:?}: {v}");
        assert_eq!(v["ok"], true, "{args:?}");
    }
}

#[test]
fn zigzag_values() {
    let (_, v) = call(&["lozenge", "zigzag", "--a", "1"]);
    let z = &v["value"];
    assert_eq!(z["weighted"], "246/4375");
    assert_eq!(z["uniform"], "1/7");
    assert_eq!(z["c_a"], "54/35");
}

#[test]
fn errors_exit_one() {
    for args in [
        &["syt", "count", "--shape", "[3,2"][..],
        &["syt", "count", "--shape", "[2,3]"],
        &["syt", "count", "--shape", "[2]/[3]"],
        &["schubert", "upsilon", "--perm", "1132"],
        &["lozenge", "zf", "--hexagon", "1,1"],
        &["lozenge", "zf", "--mu", "[1]"],
        &["lozenge", "zf", "--hexagon", "1,1,1", "--weights", "bogus"],
        &["lozenge", "sample", "--mu", "[1]", "--d", "1", "--weights", "x=1,0;y=0,0"],
        &["verify", "criterion", "--id", "11"],
        &["nonsense"],
    ] {
        let out = run(std::iter::once("skewhook").chain(args.iter().copied()));
        assert_eq!(out.code, 1, "{args:?}: {}", out.stdout);
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn help_goes_to_stdout() {
    let out = run(["skewhook", "--help"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("lozenge"));
}

#[test]
fn sampler_output_is_reproducible() {
    let args = ["lozenge", "sample", "--hexagon", "3,3,3", "--steps", "5000", "--seed", "42", "--weights", "hook"];
    let a = run(std::iter::once("skewhook").chain(args));
    let b = run(std::iter::once("skewhook").chain(args));
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
    let c = run(std::iter::once("skewhook").chain(args.map(|s| if s == "42" { "43" } else { s })));
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn binary_round_trip() {
    let bin = env!("CARGO_BIN_EXE_skewhook");
    let run_bin = || Command::new(bin).args(["lozenge", "render", "--hexagon", "2,2,2", "--steps", "300", "--seed", "5"]).output().unwrap();
    let (a, b) = (run_bin(), run_bin());
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    let svg = v["value"]["svg"].as_str().unwrap();
    assert_eq!(skewhook::lozenge::lozenge_count(svg), 12);

    let bad = Command::new(bin).args(["syt", "count", "--shape", "[1,2]"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(1));
}
