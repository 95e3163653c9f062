use std::path::PathBuf;
use std::process::{Command, Output};

fn xiroots() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_xiroots"));
    cmd.env_remove("XIROOTS_ZERO_FILE");
    cmd
}

fn run(args: &[&str]) -> Output {
    xiroots().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn reference_zeros() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/data/zeta_zeros_500.txt")
}

fn field(line: &str, key: &str) -> f64 {
    line.split_whitespace()
        .find_map(|kv| kv.strip_prefix(&format!("{key}=")))
        .unwrap_or_else(|| panic!("{key} missing in {line}"))
        .parse()
        .unwrap()
}

#[test]
fn xi_eval_at_center() {
    let out = run(&["xi-eval", "--z", "0"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "xi=0.497121 ln_xi=-0.69892");
}

#[test]
fn xi_eval_reports_asymptotic_deviation() {
    let out = run(&["xi-eval", "--z", "40,-3"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let line = stdout(&out);
    assert!(field(&line, "asym_dev") <= field(&line, "asym_bound"));
}

#[test]
fn xi_eval_accepts_negative_real_part() {
    let a = stdout(&run(&["xi-eval", "--z", "-3"]));
    let b = stdout(&run(&["xi-eval", "--z", "3"]));
    assert_eq!(a, b);
}

#[test]
fn verify_table_all_rows_agree() {
    let out = run(&["verify-table"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines.len(), 9);
    for (i, line) in lines.iter().enumerate() {
        assert!(line.starts_with(&format!("row={} ", i + 1)), "{line}");
        assert!(line.ends_with("agree=true"), "{line}");
    }
}

#[test]
fn verify_table_unit_rows_reject_other_cutoffs() {
    let out = run(&["verify-table", "--rows", "3", "--a", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).starts_with("error:"));
}

#[test]
fn cosh_demo_passes() {
    let out = run(&["cosh-demo", "--z", "1.5", "--terms", "40"]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(field(&stdout(&out), "diff") < 1e-6);
}

#[test]
fn count_at_fifty() {
    let out = run(&["count", "--t-max", "50"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    let first = text.lines().next().unwrap();
    assert_eq!(first, "actual=10 formula=9.4228 diff=0.577");
    assert_eq!(text.lines().nth(1), Some("contour=10"));
}

#[test]
fn tolerance_override_turns_a_pass_into_a_failure() {
    let out = run(&["count", "--t-max", "50", "--tol", "count=0.1"]);
    assert_eq!(out.status.code(), Some(1));
    let err = stderr(&out);
    assert!(err.contains("FAIL check=count value=0.577"), "{err}");
    assert!(err.contains("limit=0.1"), "{err}");
    assert!(err.contains("FAILED checks=1"), "{err}");
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&["count"]).status.code(), Some(2));
    assert_eq!(
        run(&["count", "--t-max", "50", "--tol", "nope=1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["count", "--t-max", "5000"]).status.code(), Some(2));
    assert_eq!(run(&["xi-eval", "--z", "a,b"]).status.code(), Some(2));
    assert_eq!(
        run(&["verify-table", "--rows", "10"]).status.code(),
        Some(2)
    );
}

#[test]
fn find_zeros_writes_a_file_that_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("zeros.txt");
    let out = run(&[
        "find-zeros",
        "--t-max",
        "60",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).starts_with("zeros=13 "));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("# t_max=60"));
    let first: f64 = text
        .lines()
        .find(|l| !l.starts_with('#'))
        .unwrap()
        .parse()
        .unwrap();
    assert!((first - 14.1347).abs() < 1e-3);

    let from_file = run(&[
        "--zero-file",
        path.to_str().unwrap(),
        "count",
        "--t-max",
        "50",
    ]);
    assert!(from_file.status.success());
    assert_eq!(
        stdout(&from_file).trim(),
        "actual=10 formula=9.4228 diff=0.577"
    );
}

#[test]
fn zero_file_from_environment() {
    let out = xiroots()
        .env("XIROOTS_ZERO_FILE", reference_zeros())
        .args(["count", "--t-max", "400"])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", stderr(&out));
    let expected = std::fs::read_to_string(reference_zeros())
        .unwrap()
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .filter(|l| l.trim().parse::<f64>().unwrap() <= 400.0)
        .count();
    let line = stdout(&out);
    assert!(line.starts_with(&format!("actual={expected} ")), "{line}");
}

#[test]
fn short_zero_file_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("short.txt");
    std::fs::write(
        &path,
        "# t_max=30\n14.134725141805\n21.022039638772\n25.010857580146\n",
    )
    .unwrap();
    let out = run(&[
        "--zero-file",
        path.to_str().unwrap(),
        "count",
        "--t-max",
        "50",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("error:"));
}

#[test]
fn predict_csv() {
    let out = run(&["predict", "--n", "10"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,predicted_k,actual_k,deviation"));
    let rows: Vec<Vec<f64>> = lines
        .map(|l| l.split(',').map(|v| v.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 10);
    for (i, r) in rows.iter().enumerate() {
        assert_eq!(r[0], (i + 1) as f64);
        assert!((r[1] - r[2] - r[3]).abs() < 1e-8);
        assert!(r[3].abs() <= 2.0);
    }
}

#[test]
fn residual_csv_with_reference_zeros() {
    let out = run(&[
        "--zero-file",
        reference_zeros().to_str().unwrap(),
        "residual",
        "--z",
        "100,150,200",
        "--t-max",
        "500",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("z,residual,tail_estimate"));
    for _ in 0..3 {
        let r: f64 = lines
            .next()
            .unwrap()
            .split(',')
            .nth(1)
            .unwrap()
            .parse()
            .unwrap();
        assert!((r + 0.0464).abs() < 0.02, "{r}");
    }
    assert!(lines
        .next()
        .unwrap()
        .starts_with("# derived_constant=-0.0463"));
}

#[test]
fn omega_csv_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("omega.csv");
    let out = run(&[
        "--zero-file",
        reference_zeros().to_str().unwrap(),
        "--out",
        path.to_str().unwrap(),
        "omega",
        "--t-max",
        "100",
        "--step",
        "0.1",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("k,omega,running_mean\n"));
    let last: Vec<f64> = text
        .lines()
        .last()
        .unwrap()
        .split(',')
        .map(|v| v.parse().unwrap())
        .collect();
    assert_eq!(last[0], 100.0);
    assert!(last[2].abs() <= 0.25);
}

#[test]
fn report_csv() {
    let out = run(&[
        "--zero-file",
        reference_zeros().to_str().unwrap(),
        "report",
        "--t-max",
        "60",
        "--step",
        "1",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("k,phi_smooth,phi_actual,phi_predicted"));
    let rows: Vec<Vec<f64>> = lines
        .map(|l| l.split(',').map(|v| v.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 61);
    let last = rows.last().unwrap();
    assert_eq!(last[0], 60.0);
    assert_eq!(last[2], 13.0);
    for r in &rows {
        assert!((r[2] - r[3]).abs() <= 2.0);
    }
}

#[test]
fn csv_output_is_deterministic() {
    let file = reference_zeros();
    let args = [
        "--zero-file",
        file.to_str().unwrap(),
        "omega",
        "--t-max",
        "60",
        "--step",
        "0.1",
    ];
    let first = run(&args);
    let second = run(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}
