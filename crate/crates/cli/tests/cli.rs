use std::io::Write;
use std::process::{Command, Output, Stdio};

use vcrit_core::{canonical_form, NamedGraph};

fn vcrit(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_vcrit"));
    cmd.args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped());
    cmd.env_remove("VCRIT_MAX_NODES").env_remove("VCRIT_MAX_SECONDS");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("spawn vcrit");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn g6(name: &str) -> String {
    name.parse::<NamedGraph>().unwrap().build().unwrap().to_graph6()
}

#[test]
fn generate_odd_cycles() {
    let o = vcrit(&["generate", "--k", "3", "--seed", "k1", "--max-order", "7"], "", &[]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    let mut want: Vec<String> =
        ["c3", "c5", "c7"].iter().map(|n| canonical_form(&n.parse::<NamedGraph>().unwrap().build().unwrap()).to_string()).collect();
    want.sort();
    assert_eq!(lines, want);
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("stop=order_cap") && err.contains("max_order=7"));
}

#[test]
fn generate_is_identical_across_worker_counts() {
    let base = ["generate", "--k", "4", "--family", "p6", "--seed", "k1", "--max-order", "7"];
    let one = vcrit(&[&base[..], &["--workers", "1"]].concat(), "", &[]);
    let two = vcrit(&[&base[..], &["--workers", "3"]].concat(), "", &[]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, two.stdout);
    assert!(!one.stdout.is_empty());
}

#[test]
fn oracle_matches_generate_on_small_orders() {
    let gen = vcrit(&["generate", "--k", "4", "--seed", "k1", "--max-order", "6"], "", &[]);
    let ora = vcrit(&["oracle", "--k", "4", "--max-order", "6"], "", &[]);
    assert_eq!(ora.status.code(), Some(0));
    assert_eq!(gen.stdout, ora.stdout);
}

#[test]
fn budget_and_usage_exit_codes() {
    let o = vcrit(&["generate", "--k", "4", "--seed", "k1"], "", &[("VCRIT_MAX_NODES", "3")]);
    assert_eq!(o.status.code(), Some(3));
    let o = vcrit(&["generate", "--k", "5", "--seed", "not_a_graph!"], "", &[]);
    assert_eq!(o.status.code(), Some(2));
    let o = vcrit(&["generate", "--k", "5", "--family", "bull", "--seed", "bull"], "", &[]);
    assert_eq!(o.status.code(), Some(2));
    let o = vcrit(&["frobnicate"], "", &[]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn certify_and_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cat = dir.path().join("cat.g6");
    let made = vcrit(&["catalog", "make", "--prefix", "m"], &format!("{}\n{}\n", g6("k5"), g6("c5_join_k2")), &[]);
    assert_eq!(made.status.code(), Some(0));
    std::fs::write(&cat, &made.stdout).unwrap();
    assert_eq!(vcrit(&["catalog", "check", cat.to_str().unwrap()], "", &[]).status.code(), Some(0));

    let o = vcrit(&["certify", "--catalog", cat.to_str().unwrap()], "Dhc\n", &[]);
    assert_eq!(o.status.code(), Some(0));
    let cert = stdout(&o);
    assert!(cert.contains("verdict four_colourable"));
    let path = dir.path().join("c5.cert");
    std::fs::write(&path, &cert).unwrap();
    let v = vcrit(&["verify", "--certificate", path.to_str().unwrap()], "Dhc\n", &[]);
    assert_eq!(v.status.code(), Some(0));
    let v = vcrit(&["verify", "--certificate", path.to_str().unwrap()], &format!("{}\n", g6("k5")), &[]);
    assert_eq!(v.status.code(), Some(1));

    let o = vcrit(&["certify", "--catalog", cat.to_str().unwrap()], &format!("{}\n", g6("c5_join_k2")), &[]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verdict not_four_colourable"));

    let o = vcrit(&["certify", "--catalog", cat.to_str().unwrap()], &format!("{}\n", g6("co_c9")), &[]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn bad_catalog_fails_check() {
    let dir = tempfile::tempdir().unwrap();
    let cat = dir.path().join("bad.g6");
    std::fs::write(&cat, format!("k4\t{}\n", g6("k4"))).unwrap();
    let o = vcrit(&["catalog", "check", cat.to_str().unwrap()], "", &[]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn reduce_join() {
    let o = vcrit(&["reduce"], &format!("{}\n", g6("c5_join_k2")), &[]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let mut lines = out.lines();
    let k5 = vcrit_core::decode_graph6(lines.next().unwrap()).unwrap();
    assert!(vcrit_core::are_isomorphic(&k5, &NamedGraph::Complete(5).build().unwrap()));
    assert_eq!(lines.next(), Some("steps=1"));
}

#[test]
fn audit_reports_claim_lines() {
    let o = vcrit(&["audit", "--cycle", "0,1,2,3,4"], &format!("{}\n", g6("c5_join_k2")), &[]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("claim05\tassume-class\t5,6"));
    assert_eq!(out.lines().filter(|l| l.starts_with("claim")).count(), 44);
    let o = vcrit(&["audit", "--cycle", "0,1,2,3,3"], "Dhc\n", &[]);
    assert_eq!(o.status.code(), Some(2));
}
