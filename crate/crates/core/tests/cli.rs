use std::fs;
use std::process::Command;

use serde_json::Value;

fn qcstab(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qcstab")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn lines(s: &str) -> Vec<Value> {
    s.lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

const STEANE: &[&str] = &[
    "check",
    "--n",
    "7",
    "--f",
    "x^3 + x + 1",
    "--g",
    "x^3 + x + 1",
    "--h",
    "x + 1",
];

#[test]
fn cosets_listing() {
    let (code, out, _) = qcstab(&["cosets", "--n", "7"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("3 cyclotomic cosets"));
    let (_, out, _) = qcstab(&["cosets", "--n", "3", "--p", "2", "--r", "2", "--json"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    let sizes: Vec<u64> = v["cosets"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["size"].as_u64().unwrap())
        .collect();
    assert_eq!(sizes, [1, 1, 1]);
    let (_, out, _) = qcstab(&["cosets", "--n", "151", "--json"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert!(v["cosets"]
        .as_array()
        .unwrap()
        .iter()
        .any(|c| c["size"] == 15 && c["representative"] == 1));
    let (code, _, err) = qcstab(&["cosets", "--n", "6"]);
    assert_eq!(code, 2);
    assert!(err.contains("gcd"));
}

#[test]
fn check_steane() {
    let (code, out, _) = qcstab(STEANE);
    assert_eq!(code, 0);
    let r = &lines(&out)[0];
    assert_eq!(r["params"], "[[7, 1, >=3]]_2");
    assert_eq!(r["d_exact"], 3);
    assert_eq!(r["condition_branch"], "ii");
    assert_eq!(r["oracle"]["dual_contained"], true);
    for key in [
        "input",
        "n",
        "q",
        "form",
        "dim",
        "k",
        "d_lower",
        "d_method",
        "condition_branch",
        "oracle",
        "terms",
    ] {
        assert!(r.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn exit_codes() {
    // x^2 + 1 does not divide x^7 - 1
    let (code, _, err) = qcstab(&["check", "--n", "7", "--g", "x^2 + 1"]);
    assert_eq!(code, 2);
    assert!(err.contains("does not divide"), "{err}");
    let (code, out, _) = qcstab(&["check", "--n", "7", "--g", "x^6+x^5+x^4+x^3+x^2+x+1", "--h", "x + 1"]);
    assert_eq!(code, 1);
    assert_eq!(lines(&out)[0]["certified"], false);
    assert_eq!(qcstab(&["check", "--n", "7", "--form", "hermitian"]).0, 2);
    assert_eq!(qcstab(&["check"]).0, 2);
    assert_eq!(qcstab(&["frobnicate"]).0, 2);
    assert_eq!(qcstab(&["--help"]).0, 0);
}

#[test]
fn config_file_and_overrides_reproduce() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("steane.cfg");
    fs::write(
        &cfg,
        "# steane\nn = 7\nf = x^3 + x + 1\ng = x^3 + x + 1\nh = x\nform = symplectic\n",
    )
    .unwrap();
    let c = cfg.to_str().unwrap();
    let (_, a, _) = qcstab(&["check", "--config", c, "--h", "x + 1"]);
    let (_, b, _) = qcstab(STEANE);
    let strip = |s: &str| {
        let mut v = lines(s).remove(0);
        v.as_object_mut().unwrap().remove("timings");
        v
    };
    assert_eq!(strip(&a), strip(&b));

    let out = dir.path().join("r.json");
    let fixtures = dir.path().join("fx");
    let (code, stdout, _) = qcstab(&[
        "check",
        "--config",
        c,
        "--out",
        out.to_str().unwrap(),
        "--fixtures",
        fixtures.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    assert_eq!(fs::read_dir(&fixtures).unwrap().count(), 1);
    let first = strip(&fs::read_to_string(&out).unwrap());
    let (_, again, _) = qcstab(&["check", "--config", c]);
    assert_eq!(first, strip(&again));
}

#[test]
fn search_rediscovers_steane() {
    let (code, out, _) = qcstab(&["search", "--n", "7", "--h", "linear"]);
    assert_eq!(code, 0);
    let rs = lines(&out);
    assert!(rs.iter().any(|r| r["params"] == "[[7, 1, >=3]]_2"), "{out}");
    let keys: Vec<_> = rs
        .iter()
        .map(|r| (r["n"].clone(), r["k"].clone(), r["d_lower"].clone()))
        .collect();
    let mut dedup = keys.clone();
    dedup.dedup();
    assert_eq!(keys.len(), dedup.len());
    let (_, one, _) = qcstab(&["search", "--n", "7", "--h", "linear", "--workers", "1"]);
    let (_, four, _) = qcstab(&["search", "--n", "7", "--h", "linear", "--workers", "4"]);
    let strip = |s: &str| {
        lines(s)
            .into_iter()
            .map(|mut v| {
                v.as_object_mut().unwrap().remove("timings");
                v
            })
            .collect::<Vec<_>>()
    };
    assert_eq!(strip(&one), strip(&four));
}

#[test]
fn search_edges() {
    let (code, out, _) = qcstab(&["search", "--n", "7", "--g-cosets", ""]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let (code, _, err) = qcstab(&["search", "--n", "151"]);
    assert_eq!(code, 2);
    assert!(err.contains("narrow"), "{err}");
    let (code, out, _) = qcstab(&[
        "search",
        "--n",
        "73",
        "--p",
        "2",
        "--r",
        "3",
        "--g-cosets",
        "1,2,3,7",
        "--f-cosets",
        "1,2,3",
    ]);
    assert_eq!(code, 0);
    assert!(lines(&out).iter().any(|r| r["n"] == 73 && r["k"] == 52), "{out}");
}
