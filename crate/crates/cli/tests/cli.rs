use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_akblocks"))
        .args(args)
        .output()
        .unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_akblocks"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn eta_prints_quotient_and_charges() {
    let out = stdout(&run(&[
        "eta",
        "--e",
        "3",
        "--partition",
        "4,3,2,1",
        "--charge",
        "6",
    ]));
    assert_eq!(
        out.trim(),
        r#"{"quotient":[[1],[1],[1]],"charges":[3,2,1]}"#
    );
}

#[test]
fn block_generate_writes_header_and_members() {
    let out = stdout(&run(&[
        "block",
        "generate",
        "--e",
        "3",
        "--components",
        "2,2,1,1|3,1,1,1,1,1",
        "--charges",
        "7,9",
    ]));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 9);
    assert_eq!(lines[0], r#"{"e":3,"bs":[7,9],"n":14,"residues":[3,6,5]}"#);
}

#[test]
fn fuse_output_feeds_split() {
    let fused = stdout(&run(&[
        "uglov",
        "fuse",
        "--e",
        "3",
        "--components",
        "2,2,1,1|3,1,1,1,1,1",
        "--charges",
        "7,9",
    ]));
    assert_eq!(
        fused.trim(),
        r#"{"partition":[5,3,3,2,2,2,2,2,1,1],"charge":16}"#
    );
    let back = stdout(&run_stdin(
        &["uglov", "split", "--e", "3", "--r", "2", "--input", "-"],
        &fused,
    ));
    assert_eq!(
        back.trim(),
        r#"{"components":[[2,2,1,1],[3,1,1,1,1,1]],"charges":[7,9]}"#
    );
}

#[test]
fn normalize_output_replays() {
    let out = stdout(&run(&[
        "reduce",
        "normalize",
        "--e",
        "3",
        "--components",
        "1,1|",
        "--charges",
        "0,2",
    ]));
    let chain = out.lines().next().unwrap();
    assert!(chain.contains(r#""steps":[{"recharge":[0,-1]}"#));
    stdout(&run_stdin(&["reduce", "replay", "--input", "-"], chain));
}

#[test]
fn domain_errors_exit_one() {
    let o = run(&[
        "block",
        "same",
        "--e",
        "3",
        "--components",
        "1|",
        "--charges",
        "0,0",
        "--other",
        "|1",
        "--other-charges",
        "0,1",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("ChargeMismatch"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(
        run(&["eta", "--e", "3", "--partition", "4,a", "--charge", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["eta", "--e", "3", "--partition", "1,2", "--charge", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
}

#[test]
fn verify_small_bounds_passes() {
    let out = stdout(&run(&[
        "verify", "--suite", "oracle", "--e", "2", "--r", "1", "--n", "4",
    ]));
    assert!(out.lines().all(|l| !l.starts_with("FAIL")), "{out}");
}

#[test]
fn info_reports_recharged_base_tuple() {
    let out = stdout(&run(&[
        "block",
        "info",
        "--e",
        "3",
        "--components",
        "1,1|",
        "--charges",
        "0,2",
    ]));
    assert!(out.contains(r#""base_tuple":null"#), "{out}");
    assert!(
        out.contains(r#""recharged_base_tuple":[[0,-1],[0,-1,-1]]"#),
        "{out}"
    );
}
