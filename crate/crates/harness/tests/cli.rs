use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn pcomplex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pcomplex"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("pcomplex-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn verify_json_report() {
    let o = pcomplex(&[
        "--format",
        "json",
        "verify",
        "--theorem",
        "T4.12",
        "--group",
        "sym5",
        "--prime",
        "2",
        "--t",
        "(1,2)",
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    for field in ["target", "hypotheses", "steps", "verdict", "timing_ms", "config"] {
        assert!(v.get(field).is_some(), "missing {field}");
    }
    assert_eq!(v["verdict"], "pass");
    assert_eq!(v["strength"], "certificates");
    assert!(v["timing_ms"].is_null());
    assert_eq!(v["target"]["theorem"], "T4.12");
}

#[test]
fn timings_flag_records_time() {
    let o = pcomplex(&[
        "--format",
        "json",
        "--timings",
        "verify",
        "--theorem",
        "P3.4",
        "--group",
        "sym4",
        "--prime",
        "2",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["timing_ms"].is_u64());
}

#[test]
fn not_applicable_exits_zero() {
    let o = pcomplex(&["verify", "--theorem", "P3.4", "--group", "sym5", "--prime", "2"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("not-applicable"));
}

#[test]
fn usage_errors_exit_two() {
    let o = pcomplex(&["verify", "--theorem", "P9.9", "--group", "sym5", "--prime", "2"]);
    assert_eq!(o.status.code(), Some(2));
    let o = pcomplex(&["collections", "--group", "klein", "--prime", "2", "--kind", "S"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("gl32"));
    let o = pcomplex(&["collections", "--group", "co3", "--prime", "2", "--kind", "S"]);
    assert_eq!(o.status.code(), Some(2));
    let o = pcomplex(&[
        "fixed",
        "--group",
        "sym4",
        "--prime",
        "2",
        "--kind",
        "S",
        "--subgroup",
        "(1,5)",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn max_order_cap() {
    let o = pcomplex(&[
        "--max-order",
        "100",
        "collections",
        "--group",
        "sym5",
        "--prime",
        "2",
        "--kind",
        "S",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("max_order"));
}

#[test]
fn collections_fixed_lefschetz() {
    let o = pcomplex(&["collections", "--group", "sym5", "--prime", "2", "--kind", "hatB"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("parabolic characteristic 2: true"));
    let o = pcomplex(&[
        "--format",
        "json",
        "fixed",
        "--group",
        "sym5",
        "--prime",
        "2",
        "--kind",
        "hatB",
        "--subgroup",
        "(1,2)",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["homology"]["groups"][1]["rank"], 2);
    let o = pcomplex(&[
        "--format",
        "json",
        "lefschetz",
        "--group",
        "sym4",
        "--prime",
        "2",
        "--kind",
        "S",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["routes_agree"], true);
}

#[test]
fn suite_writes_both_reports() {
    let cfg = scratch("suite.cfg");
    fs::write(&cfg, "[run]\ngroup = sym4\nprime = 2\ntheorem = P3.1, P3.4\n[run]\ngroup = sym5\nprime = 2\ntheorem = T4.12\nt = (1,2)\n").unwrap();
    let stem = scratch("out");
    let o = pcomplex(&[
        "suite",
        "--config",
        cfg.to_str().unwrap(),
        "--out",
        stem.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let txt = fs::read_to_string(stem.with_extension("txt")).unwrap();
    assert!(txt.contains("summary: 3 pass, 0 fail"));
    let json: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(stem.with_extension("json")).unwrap()).unwrap();
    assert_eq!(json["reports"].as_array().unwrap().len(), 3);
    // Byte-identical on a second run.
    let first = fs::read(stem.with_extension("json")).unwrap();
    let o = pcomplex(&[
        "suite",
        "--config",
        cfg.to_str().unwrap(),
        "--out",
        stem.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert_eq!(fs::read(stem.with_extension("json")).unwrap(), first);
}

#[test]
fn suite_exit_status() {
    let empty = scratch("empty.cfg");
    fs::write(&empty, "# nothing\n").unwrap();
    let o = pcomplex(&["suite", "--config", empty.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("summary: 0 pass"));

    let fi22 = scratch("fi22.cfg");
    fs::write(&fi22, "[run]\ngroup = Fi22\nprime = 2\ntheorem = P3.1\n").unwrap();
    let o = pcomplex(&["suite", "--config", fi22.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("out of scope"));

    let bad = scratch("bad.cfg");
    fs::write(&bad, "[run]\ngroup = sym4\nprime = 2\ntheorem = Q1\n").unwrap();
    let o = pcomplex(&["suite", "--config", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 4"));

    // A resource cap makes an applicable run fail.
    let capped = scratch("capped.cfg");
    fs::write(
        &capped,
        "max_order = 50\n[run]\ngroup = sym5\nprime = 2\ntheorem = P3.1\n",
    )
    .unwrap();
    let o = pcomplex(&["suite", "--config", capped.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));

    // Exploratory failures are reported but do not change the status.
    let explore = scratch("explore.cfg");
    fs::write(
        &explore,
        "max_order = 50\n[run]\ngroup = sym5\nprime = 2\ntheorem = P3.1\nexploratory = true\n",
    )
    .unwrap();
    let o = pcomplex(&["suite", "--config", explore.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("1 exploratory failures"));
}
