//! Contract tests for the command-line surface: flags, exit codes, file
//! formats, determinism on small ranges.

use std::path::Path;
use std::process::{Command, Output};

fn falt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_falt"))
        .args(args)
        .env_remove("FALT_BITS")
        .output()
        .expect("failed to spawn falt")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn compute_json_fields() {
    let out = falt(&["compute", "--n", "9", "--json"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("n=9\n"));
    assert!(text.contains("g=4\n"));
    assert!(text.contains("bits=128\n"));
    // finite_sum = (5/12) log 3
    assert!(text.contains("finite_sum=4.577551202783790380"), "{text}");
    assert!(text.contains("h_fal=-4.763134120715428350"), "{text}");
}

#[test]
fn compute_human_readable() {
    let out = falt(&["compute", "--n", "3", "--bits", "192"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("genus 1"));
    assert!(text.contains("-1.321117428428037915"), "{text}");
}

#[test]
fn compute_rejects_bad_n() {
    for bad in [["compute", "--n", "4"], ["compute", "--n", "1"]] {
        let out = falt(&bad);
        assert_eq!(out.status.code(), Some(2), "{bad:?}");
        assert!(stderr(&out).contains("odd n >= 3"));
    }
}

#[test]
fn unknown_flag_is_usage_error() {
    let out = falt(&["compute", "--n", "9", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn env_var_sets_default_bits() {
    let out = Command::new(env!("CARGO_BIN_EXE_falt"))
        .args(["compute", "--n", "5", "--json"])
        .env("FALT_BITS", "96")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(stdout(&out).contains("bits=96\n"));
    // explicit flag wins over the environment
    let out = Command::new(env!("CARGO_BIN_EXE_falt"))
        .args(["compute", "--n", "5", "--json", "--bits", "160"])
        .env("FALT_BITS", "96")
        .output()
        .unwrap();
    assert!(stdout(&out).contains("bits=160\n"));
}

#[test]
fn sweep_single_row_and_clamping() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("one.csv");
    let out = falt(&["sweep", "--from", "5", "--to", "5", "--out", csv.to_str().unwrap()]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = std::fs::read_to_string(&csv).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(
        lines[0],
        "n,h_fal,finite_sum,log_n_term,pi_term,two_term,gamma_term,lower_bound,upper_bound"
    );
    assert!(lines[1].starts_with("5,-2.597239125495044824"), "{}", lines[1]);
    // h_fal is the sum of the five term columns
    let f: Vec<f64> = lines[1].split(',').skip(1).map(|v| v.parse().unwrap()).collect();
    let sum = f[1] + f[2] + f[3] + f[4] + f[5];
    assert!((sum - f[0]).abs() <= 1e-12 * f[0].abs().max(1.0));

    // even endpoints clamp inward
    let csv2 = dir.path().join("clamped.csv");
    let out = falt(&["sweep", "--from", "4", "--to", "8", "--out", csv2.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&csv2).unwrap();
    let ns: Vec<&str> = text.lines().skip(1).map(|l| l.split(',').next().unwrap()).collect();
    assert_eq!(ns, vec!["5", "7"]);
}

#[test]
fn sweep_rejects_empty_range_and_budget() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("x.csv");
    let out = falt(&["sweep", "--from", "8", "--to", "8", "--out", csv.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!csv.exists());
    let out = falt(&["sweep", "--from", "3", "--to", "200001", "--out", csv.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("budget"));
}

#[test]
fn sweep_small_range_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for p in [&a, &b] {
        let out = falt(&["sweep", "--from", "3", "--to", "99", "--out", p.to_str().unwrap()]);
        assert!(out.status.success());
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

fn write_file(path: &Path, content: &str) {
    std::fs::write(path, content).unwrap();
}

#[test]
fn plot_accepts_sweep_output() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("h.csv");
    let svg = dir.path().join("h.svg");
    let out = falt(&["sweep", "--from", "3", "--to", "41", "--out", csv.to_str().unwrap()]);
    assert!(out.status.success());
    let out = falt(&[
        "plot",
        "--in",
        csv.to_str().unwrap(),
        "--out",
        svg.to_str().unwrap(),
        "--envelope",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = std::fs::read_to_string(&svg).unwrap();
    assert!(text.starts_with("<svg"));
    assert_eq!(text.matches("<circle").count(), 20);
    assert_eq!(text.matches("<path").count(), 2, "two envelope curves");

    // plotting the same CSV twice gives identical bytes
    let svg2 = dir.path().join("h2.svg");
    let out = falt(&[
        "plot",
        "--in",
        csv.to_str().unwrap(),
        "--out",
        svg2.to_str().unwrap(),
        "--envelope",
    ]);
    assert!(out.status.success());
    assert_eq!(std::fs::read(&svg).unwrap(), std::fs::read(&svg2).unwrap());
}

#[test]
fn plot_rejects_bad_schema_with_line_numbers() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("x.svg");

    let bad_header = dir.path().join("bad_header.csv");
    write_file(&bad_header, "a,b,c\n1,2,3\n");
    let out = falt(&["plot", "--in", bad_header.to_str().unwrap(), "--out", svg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 1"));
    assert!(!svg.exists());

    let bad_row = dir.path().join("bad_row.csv");
    write_file(
        &bad_row,
        "n,h_fal,finite_sum,log_n_term,pi_term,two_term,gamma_term,lower_bound,upper_bound\n5,1,2\n",
    );
    let out = falt(&["plot", "--in", bad_row.to_str().unwrap(), "--out", svg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 2"));

    let empty = dir.path().join("empty.csv");
    write_file(
        &empty,
        "n,h_fal,finite_sum,log_n_term,pi_term,two_term,gamma_term,lower_bound,upper_bound\n",
    );
    let out = falt(&["plot", "--in", empty.to_str().unwrap(), "--out", svg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("no data rows"));
    assert!(!svg.exists());
}

#[test]
fn clusters_dump_format() {
    let out = falt(&["clusters", "--n", "9", "--p", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("root-zero 1 inf inf\n"));
    assert!(text.contains("s_1_0 3 1/2 1/3\n"));
    assert!(text.contains("s_2_0 9 1/6 1/6\n"));
    assert!(text.contains("full-set 10 0 -\n"));

    let out = falt(&["clusters", "--n", "9", "--p", "5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn arch_report_keys() {
    let out = falt(&["arch", "--n", "5", "--bits", "128"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for key in ["n=5", "g=2", "bits=128", "log_norm_closed=", "log_det_numeric=", "rel_err=", "gram_pd=true"] {
        assert!(text.contains(key), "missing {key} in {text}");
    }
    assert!(text.contains("log_norm_closed=5.1944782509900896489"), "{text}");
}

#[test]
fn verify_small_suites_pass() {
    let out = falt(&["verify", "--suite", "clusters", "--from", "3", "--to", "51"]);
    assert!(out.status.success(), "{}", stdout(&out));
    let out = falt(&["verify", "--suite", "bounds", "--from", "3", "--to", "99"]);
    assert!(out.status.success(), "{}", stdout(&out));
    let out = falt(&["verify", "--suite", "archimedean", "--set", "2,3", "--bits", "128"]);
    assert!(out.status.success(), "{}", stdout(&out));
    let out = falt(&["verify", "--suite", "constants", "--bits", "96"]);
    assert!(out.status.success(), "{}", stdout(&out));
}

#[test]
fn verify_rejects_unknown_suite() {
    let out = falt(&["verify", "--suite", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}
