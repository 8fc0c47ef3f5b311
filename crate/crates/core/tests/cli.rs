use std::process::{Command, Output};

fn binomsum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_binomsum"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_prints_report() {
    let o = binomsum(&["verify", "S3", "--m", "2", "--n", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("lhs=3 rhs=3"));

    let o = binomsum(&["verify", "thm1", "--m", "2", "--n", "1", "--alpha", "1/2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).trim(),
        r#"{"identity":"thm1","params":{"m":"2","n":"1","alpha":"1/2"},"lhs":"3","rhs":"3","equal":true,"micros":0}"#
    );
}

#[test]
fn verify_domain_violation() {
    let o = binomsum(&["verify", "thm1", "--m", "1", "--n", "1", "--alpha", "-1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("alpha = -1 outside domain"));
}

#[test]
fn sweep_counts_and_summary() {
    let o = binomsum(&["sweep", "thm1", "--m", "0..4", "--n", "0..4", "--alpha", "1", "--alpha", "2/3", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<_> = out.lines().collect();
    assert_eq!(lines.len(), 51);
    assert_eq!(*lines.last().unwrap(), r#"{"pass":48,"fail":0,"skip":2,"error":0}"#);
    assert!(lines.iter().filter(|l| l.contains(r#""status":"skip""#)).count() == 2);
}

#[test]
fn sweep_is_thread_independent() {
    let args = ["sweep", "S4", "thm2", "--m", "0..6", "--n", "2..6", "--r", "0..2", "--alpha", "5/3", "--json"];
    let one = binomsum(&[&args[..], &["--jobs", "1"]].concat());
    let four = binomsum(&[&args[..], &["--jobs", "4"]].concat());
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(one.status.code(), Some(0));
}

#[test]
fn sweep_failures_set_exit_code() {
    // unknown ids are error records, never silently dropped
    let o = binomsum(&["sweep", "S3", "nope", "--m", "1", "--n", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("pass 1 fail 0 skip 0 error 1"));
}

#[test]
fn series_dumps() {
    let o = binomsum(&["series", "revert", "--alpha", "1", "--N", "4"]);
    assert_eq!(stdout(&o), "1 1\n2 2\n3 5\n4 14\n");

    let o = binomsum(&["series", "pde", "--alpha", "1", "--N", "8"]);
    assert_eq!((o.status.code(), stdout(&o).trim()), (Some(0), "pass"));

    let o = binomsum(&["series", "Gr", "--alpha", "1", "--r", "2", "--N", "6"]);
    let out = stdout(&o);
    assert!(out.lines().any(|l| l.starts_with("-1 -1 ")));
    assert_eq!(out.lines().count(), 9 * 9);

    let o = binomsum(&["series", "F", "--alpha", "1", "--order", "2"]);
    assert!(stdout(&o).lines().any(|l| l == "2 2 18"));

    let o = binomsum(&["series", "routine", "--alpha", "7/2", "--r", "2"]);
    assert_eq!(stdout(&o).trim(), "pass");

    let o = binomsum(&["series", "F", "--alpha", "-1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn list_shows_catalog() {
    let o = binomsum(&["list"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    for id in ["S3", "S4", "thm1", "thm2", "thm3", "cor6", "pm-r-3", "doub-xab"] {
        assert!(out.lines().any(|l| l.starts_with(id)), "{id} missing");
    }
}
