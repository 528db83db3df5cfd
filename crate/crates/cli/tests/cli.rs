use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn fmc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fmc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn gen_to(dir: &Path, name: &str, args: &[&str]) -> PathBuf {
    let o = fmc(&[&["gen"], args].concat());
    assert!(o.status.success());
    let path = dir.join(name);
    fs::write(&path, &o.stdout).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn pathwidth_of_k5() {
    let dir = TempDir::new().unwrap();
    let k5 = gen_to(dir.path(), "k5", &["complete", "5"]);
    let o = fmc(&["pw", s(&k5)]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("pathwidth 4"));
    assert_eq!(lines.next(), Some("pathdecomp 5 4"));
    assert_eq!(lines.count(), 5);
}

#[test]
fn k4_against_p5_is_a_decomposition_and_verifies() {
    let dir = TempDir::new().unwrap();
    let k4 = gen_to(dir.path(), "k4", &["complete", "4"]);
    let p5 = gen_to(dir.path(), "p5", &["path", "5"]);
    let o = fmc(&["decide", s(&k4), s(&p5)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("certificate decomposition 5 3\n"));
    let cert = dir.path().join("cert");
    fs::write(&cert, &o.stdout).unwrap();
    let v = fmc(&["verify", s(&k4), s(&p5), s(&cert)]);
    assert_eq!(v.status.code(), Some(0));
    assert_eq!(stdout(&v), "ok\n");
}

#[test]
fn tampered_certificate_is_rejected() {
    let dir = TempDir::new().unwrap();
    let k4 = gen_to(dir.path(), "k4", &["complete", "4"]);
    let p5 = gen_to(dir.path(), "p5", &["path", "5"]);
    let text = stdout(&fmc(&["decide", s(&k4), s(&p5)]));
    // Delete vertex 3 from the last bag.
    let last = text.lines().last().unwrap();
    let tampered = text.replace(&format!("{last}\n"), "0 1 2\n");
    assert_ne!(tampered, text);
    let cert = dir.path().join("cert");
    fs::write(&cert, tampered).unwrap();
    let v = fmc(&["verify", s(&k4), s(&p5), s(&cert)]);
    assert_eq!(v.status.code(), Some(1));
    assert!(stdout(&v).contains("violation"));
}

#[test]
fn model_certificates_verify_and_tampering_is_caught() {
    let dir = TempDir::new().unwrap();
    let g = gen_to(dir.path(), "g", &["gnp", "8", "0.7", "--seed", "2"]);
    let t = gen_to(dir.path(), "t", &["tree", "4", "--seed", "5"]);
    let o = fmc(&["decide", s(&g), s(&t), "--seed", "9"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("certificate model 4 2\n"));
    let cert = dir.path().join("cert");
    fs::write(&cert, &text).unwrap();
    assert_eq!(
        fmc(&["verify", s(&g), s(&t), s(&cert)]).status.code(),
        Some(0)
    );
    fs::write(
        &cert,
        text.replace("certificate model 4 2", "certificate model 4 1"),
    )
    .unwrap();
    assert_eq!(
        fmc(&["verify", s(&g), s(&t), s(&cert)]).status.code(),
        Some(1)
    );
}

#[test]
fn gen_round_trips_in_both_formats() {
    let dir = TempDir::new().unwrap();
    for args in [
        vec!["gnp", "9", "0.4", "--seed", "1"],
        vec!["tree", "12", "--seed", "4"],
        vec!["cycle", "6"],
        vec!["star", "5"],
    ] {
        let el = stdout(&fmc(&[&["gen"], args.as_slice()].concat()));
        let g6 = stdout(&fmc(
            &[&["gen"], args.as_slice(), &["--format", "graph6"]].concat()
        ));
        let g6_path = dir.path().join("g.g6");
        fs::write(&g6_path, &g6).unwrap();
        // Decomposing the graph6 copy and the edge-list copy agrees.
        let el_path = dir.path().join("g.txt");
        fs::write(&el_path, &el).unwrap();
        assert_eq!(
            stdout(&fmc(&["pw", s(&g6_path)])),
            stdout(&fmc(&["pw", s(&el_path)]))
        );
        assert_eq!(
            stdout(&fmc(&["pw", "--format", "graph6", s(&g6_path)])),
            stdout(&fmc(&["pw", s(&el_path)]))
        );
        let again = stdout(&fmc(&[&["gen"], args.as_slice()].concat()));
        assert_eq!(el, again);
    }
}

#[test]
fn decide_is_byte_deterministic() {
    let dir = TempDir::new().unwrap();
    let g = gen_to(dir.path(), "g", &["gnp", "9", "0.5", "--seed", "8"]);
    let f = gen_to(dir.path(), "f", &["path", "5"]);
    let a = fmc(&["decide", s(&g), s(&f)]);
    let b = fmc(&["decide", s(&g), s(&f)]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn sweep_with_oracle_has_no_failures() {
    let o = fmc(&["sweep", "--n", "5", "--forest-max", "4", "--oracle"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("failures        0"), "{text}");
    let again = fmc(&["sweep", "--n", "5", "--forest-max", "4", "--oracle"]);
    assert_eq!(o.stdout, again.stdout);
    let sampled = fmc(&[
        "sweep",
        "--n",
        "9",
        "--forest-max",
        "5",
        "--samples",
        "10",
        "--oracle",
    ]);
    assert_eq!(sampled.status.code(), Some(0));
}

#[test]
fn bad_input_exits_with_two() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad");
    fs::write(&bad, "3\n0 7\n").unwrap();
    assert_eq!(fmc(&["pw", s(&bad)]).status.code(), Some(2));
    assert_eq!(fmc(&["pw", "/nonexistent/file"]).status.code(), Some(2));
    assert_eq!(fmc(&["frobnicate"]).status.code(), Some(2));
    let k4 = gen_to(dir.path(), "k4", &["complete", "4"]);
    let c4 = gen_to(dir.path(), "c4", &["cycle", "4"]);
    assert_eq!(fmc(&["decide", s(&k4), s(&c4)]).status.code(), Some(2));
}

#[test]
fn limit_override_is_honoured() {
    let dir = TempDir::new().unwrap();
    let k5 = gen_to(dir.path(), "k5", &["complete", "5"]);
    let o = Command::new(env!("CARGO_BIN_EXE_fmc"))
        .args(["pw", s(&k5)])
        .env("FMC_LIMIT_N", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn reads_stdin() {
    use std::io::Write;
    let mut child = Command::new(env!("CARGO_BIN_EXE_fmc"))
        .args(["pw", "--format", "graph6", "-"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"IheA@GUAo\n")
        .unwrap();
    let o = child.wait_with_output().unwrap();
    assert!(stdout(&o).starts_with("pathwidth 5\n"));
}
