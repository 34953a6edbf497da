use std::fs;

use pathdom_cli::{dispatch, ExpectReport, EXIT_INVALID, EXIT_OK, EXIT_RESOURCE};
use pathdom_core::montecarlo::HistogramSummary;
use pathdom_core::{BoundKind, ExtremalReport, Method};

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn run(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("pathdom").chain(args.iter().copied());
    let code = dispatch(argv, &mut out, &mut err);
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

#[test]
fn simulate_reports_set_and_order() {
    let r = run(&["simulate", "--n", "5", "--order", "31524"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    assert_eq!(r.out, "gamma: 3\nset: {1, 3, 5}\nadded in order: 3, 1, 5\n");
}

#[test]
fn simulate_rejects_wrong_length_order() {
    let r = run(&["simulate", "--n", "5", "--order", "1234"]);
    assert_eq!(r.code, EXIT_INVALID);
    assert!(!r.err.is_empty());
}

#[test]
fn expect_path_four() {
    let plain = run(&["expect", "--family", "path", "--n", "4"]);
    assert_eq!(plain.code, EXIT_OK);
    assert_eq!(plain.out.trim(), "2");

    let rational = run(&["expect", "--family", "path", "--n", "4", "--rational"]);
    assert_eq!(rational.out.trim(), "2/1");

    let closed = run(&["expect", "--family", "path", "--n", "4", "--method", "closed-form"]);
    assert_eq!(closed.out.trim(), "2");
}

#[test]
fn expect_json_round_trips() {
    let r = run(&["--format", "json", "expect", "--family", "path", "--n", "3"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    let report: ExpectReport = serde_json::from_str(&r.out).unwrap();
    assert_eq!(report.value.to_string(), "5/3");
    assert!((report.approx - 5.0 / 3.0).abs() < 1e-12);
    assert!(r.out.contains("\"5/3\""));
    let again = serde_json::to_string(&report).unwrap();
    assert_eq!(serde_json::from_str::<ExpectReport>(&again).unwrap(), report);
}

#[test]
fn expect_as_printed_only_for_path_and_wheel() {
    let wheel = run(&["expect", "--family", "wheel", "--n", "5", "--as-printed"]);
    assert_eq!(wheel.code, EXIT_OK);
    assert!(wheel.out.starts_with("11/6"), "{}", wheel.out);
    assert!(wheel.out.contains("differs"));

    let cycle = run(&["expect", "--family", "cycle", "--n", "5", "--as-printed"]);
    assert_eq!(cycle.code, EXIT_INVALID);
}

#[test]
fn extremal_methods_agree() {
    let r = run(&["--format", "json", "extremal", "--n", "8", "--method", "all"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    let reports: Vec<ExtremalReport> = serde_json::from_str(&r.out).unwrap();
    assert_eq!(reports.len(), 3);
    for rep in &reports {
        assert_eq!(rep.count.to_string(), "30464");
        assert_eq!(rep.bound_kind, BoundKind::Worst);
        assert_eq!(rep.extremal_size, 4);
    }
    assert!(r.out.contains("\"30464\""));
}

#[test]
fn extremal_best_formula_skips_with_note() {
    let r = run(&["extremal", "--n", "4", "--bound", "best"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    assert!(r.out.contains("brute_force: 2"), "{}", r.out);
    assert!(!r.err.is_empty());
}

#[test]
fn extremal_witnesses_round_trip() {
    let r = run(&[
        "--format",
        "json",
        "extremal",
        "--n",
        "3",
        "--method",
        "brute-force",
        "--witnesses",
        "10",
    ]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    let rep: ExtremalReport = serde_json::from_str(&r.out).unwrap();
    assert_eq!(rep.method, Method::BruteForce);
    let listed: Vec<String> = rep.witnesses.unwrap().iter().map(|p| p.to_string()).collect();
    assert_eq!(listed, ["123", "132", "312", "321"]);
}

#[test]
fn extremal_guard_needs_override() {
    let r = run(&["extremal", "--n", "12", "--method", "brute-force"]);
    assert_eq!(r.code, EXIT_RESOURCE);
    assert!(r.err.contains("--allow-large"), "{}", r.err);
}

#[test]
fn invalid_input_exit_codes() {
    assert_eq!(run(&["frobnicate"]).code, EXIT_INVALID);
    assert_eq!(run(&["expect", "--bogus"]).code, EXIT_INVALID);
    assert_eq!(run(&["expect", "--family", "path", "--n", "0"]).code, EXIT_INVALID);
    assert_eq!(
        run(&["extremal", "--n", "3", "--method", "formula", "--bound", "worst"]).code,
        EXIT_INVALID
    );
}

#[test]
fn help_exits_zero() {
    let r = run(&["--help"]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.out.contains("extremal"));
}

#[test]
fn series_csv_has_lf_rows() {
    let r = run(&["--format", "csv", "series", "--order", "8"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    assert!(!r.out.contains('\r'));
    let mut lines = r.out.lines();
    assert_eq!(lines.next(), Some("n,D,f"));
    let rows: Vec<&str> = lines.collect();
    assert!(rows.contains(&"4,9,24"), "{rows:?}");
}

#[test]
fn sample_writes_histogram_sidecar_and_plot() {
    let dir = tempfile::tempdir().unwrap();
    let csv_path = dir.path().join("hist.csv");
    let plot_path = dir.path().join("plot.dat");
    let r = run(&[
        "--format",
        "csv",
        "--output",
        csv_path.to_str().unwrap(),
        "sample",
        "--n",
        "50",
        "--samples",
        "2000",
        "--seed",
        "7",
        "--plot-data",
        plot_path.to_str().unwrap(),
    ]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);

    let csv = fs::read_to_string(&csv_path).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("gamma,count"));
    let total: u64 = lines
        .map(|l| l.split(',').nth(1).unwrap().parse::<u64>().unwrap())
        .sum();
    assert_eq!(total, 2000);

    let sidecar = fs::read_to_string(dir.path().join("hist.json")).unwrap();
    let summary: HistogramSummary = serde_json::from_str(&sidecar).unwrap();
    assert_eq!((summary.n, summary.samples, summary.seed), (50, 2000, 7));
    assert!(summary.min >= 17 && summary.max <= 25);

    let plot = fs::read_to_string(&plot_path).unwrap();
    assert!(plot.starts_with('#'));
    let weight: f64 = plot
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| l.split_whitespace().nth(1).unwrap().parse::<f64>().unwrap())
        .sum();
    assert!((weight - 1.0).abs() < 1e-9);
}

#[test]
fn sample_is_worker_independent() {
    let one = run(&[
        "--format",
        "json",
        "sample",
        "--n",
        "100",
        "--samples",
        "3000",
        "--seed",
        "1",
        "--workers",
        "1",
    ]);
    let three = run(&[
        "--format",
        "json",
        "sample",
        "--n",
        "100",
        "--samples",
        "3000",
        "--seed",
        "1",
        "--workers",
        "3",
    ]);
    assert_eq!(one.code, EXIT_OK);
    assert_eq!(one.out, three.out);
}

#[test]
fn verify_quick_passes() {
    let r = run(&["verify", "--quick"]);
    assert_eq!(r.code, EXIT_OK, "{}{}", r.out, r.err);
    assert!(r.out.contains("10/10"));
}
