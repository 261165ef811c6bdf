//! End-to-end checks of the command line: wrapped operations, output
//! shapes, exit codes, and the measure-spec round trip.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hilbertmu"))
}

fn configs() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../configs")
}

fn tmp(name: &str) -> PathBuf {
    Path::new(env!("CARGO_TARGET_TMPDIR")).join(name)
}

fn run_ok(args: &[&str]) -> String {
    let out = bin().args(args).output().expect("binary runs");
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8 output")
}

fn run_err(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

/// Extracts the column values of a CSV body row (comments skipped).
fn csv_rows(text: &str) -> Vec<Vec<String>> {
    text.lines()
        .filter(|l| !l.starts_with('#') && !l.is_empty())
        .skip(1)
        .map(|l| l.split(',').map(|s| s.to_string()).collect())
        .collect()
}

fn parse(field: &str) -> f64 {
    field
        .parse::<f64>()
        .unwrap_or_else(|_| panic!("not a number: {field}"))
}

#[test]
fn moments_tables() {
    let leb = configs().join("measures/lebesgue.json");
    let rows = csv_rows(&run_ok(&["moments", leb.to_str().unwrap(), "--n", "2"]));
    assert_eq!(rows.len(), 3);
    assert_eq!(parse(&rows[0][1]), 1.0);
    assert_eq!(parse(&rows[1][1]), 0.5);
    assert!((parse(&rows[2][1]) - 1.0 / 3.0).abs() < 1e-14);

    let atom = configs().join("measures/atom_half.json");
    let rows = csv_rows(&run_ok(&["moments", atom.to_str().unwrap(), "--n", "1"]));
    assert_eq!(parse(&rows[0][1]), 1.0);
    assert_eq!(parse(&rows[1][1]), 0.5);

    let linear = configs().join("measures/linear.json");
    let rows = csv_rows(&run_ok(&["moments", linear.to_str().unwrap(), "--n", "1"]));
    assert_eq!(parse(&rows[0][1]), 1.0);
    assert!((parse(&rows[1][1]) - 1.0 / 3.0).abs() < 1e-14);
}

#[test]
fn carleson_flags() {
    let cal = configs().join("measures/calibrated_s2.json");
    let out = run_ok(&["carleson", cal.to_str().unwrap(), "--a", "0", "--s", "2"]);
    assert!(out.contains("# divergent = false"));
    assert!(out.contains("# vanishing = false"));
    assert!(out.contains("# constant = 1.00000000000000e0"));

    let atom = configs().join("measures/atom_half.json");
    let out = run_ok(&["carleson", atom.to_str().unwrap(), "--a", "0", "--s", "1"]);
    assert!(out.contains("# vanishing = true"));

    let out = run_ok(&["carleson", cal.to_str().unwrap(), "--a", "1", "--s", "2"]);
    assert!(out.contains("# divergent = true"));
}

#[test]
fn apply_examples() {
    let atom = configs().join("measures/atom_half.json");
    let ones = configs().join("coeffs_const.json");
    let rows = csv_rows(&run_ok(&[
        "apply",
        atom.to_str().unwrap(),
        "--alpha",
        "2",
        "--f",
        ones.to_str().unwrap(),
        "--z",
        "0,0",
        "--truncation",
        "64",
    ]));
    assert_eq!(rows.len(), 1);
    assert_eq!(parse(&rows[0][2]), 1.0); // series value
    assert_eq!(parse(&rows[0][4]), 1.0); // integral value
    assert!(parse(&rows[0][6]) < 1e-12);

    let leb = configs().join("measures/lebesgue.json");
    let rows = csv_rows(&run_ok(&[
        "apply",
        leb.to_str().unwrap(),
        "--alpha",
        "1",
        "--f",
        ones.to_str().unwrap(),
        "--z",
        "0.5,0",
        "--truncation",
        "512",
    ]));
    let two_ln2 = 2.0 * std::f64::consts::LN_2;
    assert!((parse(&rows[0][4]) - two_ln2).abs() < 1e-10);

    let z = configs().join("coeffs_z.json");
    let rows = csv_rows(&run_ok(&[
        "apply",
        leb.to_str().unwrap(),
        "--alpha",
        "1",
        "--f",
        z.to_str().unwrap(),
        "--z",
        "0,0",
        "--truncation",
        "64",
    ]));
    assert_eq!(parse(&rows[0][2]), 0.5);
    assert!((parse(&rows[0][4]) - 0.5).abs() < 1e-11);

    // grid mode emits 24 rows
    let rows = csv_rows(&run_ok(&[
        "apply",
        atom.to_str().unwrap(),
        "--alpha",
        "2",
        "--f",
        ones.to_str().unwrap(),
        "--grid",
        "--truncation",
        "64",
    ]));
    assert_eq!(rows.len(), 24);
}

#[test]
fn verify_verdicts_and_plot_data() {
    let cal = configs().join("measures/calibrated_s2.json");
    let out = run_ok(&[
        "verify",
        cal.to_str().unwrap(),
        "--p",
        "1",
        "--q",
        "2",
        "--alpha",
        "2",
        "--mode",
        "bounded",
    ]);
    let rows = csv_rows(&out);
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0][11], "bounded");

    let leb = configs().join("measures/lebesgue.json");
    let out = run_ok(&[
        "verify",
        leb.to_str().unwrap(),
        "--p",
        "1",
        "--q",
        "2",
        "--alpha",
        "2",
        "--mode",
        "bounded",
        "--format",
        "json",
    ]);
    assert!(out.contains("\"verdict\": \"unbounded\""));

    // out-of-range triple is data, not an error
    let out = run_ok(&[
        "verify",
        leb.to_str().unwrap(),
        "--p",
        "1",
        "--q",
        "0.5",
        "--alpha",
        "2",
        "--mode",
        "bounded",
    ]);
    assert!(csv_rows(&out)[0][11] == "out-of-range");

    // Bloch target through --q inf
    let atom = configs().join("measures/atom_half.json");
    let plot = tmp("phi_series.csv");
    let out = run_ok(&[
        "verify",
        atom.to_str().unwrap(),
        "--p",
        "1",
        "--q",
        "inf",
        "--alpha",
        "2",
        "--mode",
        "compact",
        "--plot-data",
        plot.to_str().unwrap(),
    ]);
    let rows = csv_rows(&out);
    assert_eq!(rows[0][4], "bloch");
    assert_eq!(rows[0][11], "compact");
    let plot_text = std::fs::read_to_string(&plot).expect("plot data written");
    assert!(plot_text.starts_with("a,phi\n"));
    assert_eq!(plot_text.lines().count(), 13); // header + 12 levels
}

#[test]
fn sweep_runs_and_summarizes() {
    let cfg = configs().join("sweep_demo.json");
    let out_file = tmp("sweep_once.csv");
    let stdout = run_ok(&[
        "sweep",
        cfg.to_str().unwrap(),
        "--out",
        out_file.to_str().unwrap(),
    ]);
    assert!(stdout.contains("sweep: 12 rows"));
    let table = std::fs::read_to_string(&out_file).expect("table written");
    let rows = csv_rows(&table);
    assert_eq!(rows.len(), 12);
    // calibrated 1.5/2.0/2.5 on the (1,2,2) cell: unbounded/bounded/bounded
    assert_eq!(rows[0][11], "unbounded");
    assert_eq!(rows[3][11], "bounded");
    assert_eq!(rows[6][11], "bounded");
    // atom family loaded from a relative path, bounded everywhere
    for (r, row) in rows.iter().enumerate().skip(9) {
        assert_eq!(row[11], "bounded", "row {r}");
    }
}

#[test]
fn exit_codes() {
    // 2: clap usage error
    let out = run_err(&[
        "carleson",
        "nowhere.json",
        "--a",
        "0",
        "--s",
        "1",
        "--bogus",
    ]);
    assert_eq!(out.status.code(), Some(2));

    // 2: domain error in a flag value
    let leb = configs().join("measures/lebesgue.json");
    let out = run_err(&["carleson", leb.to_str().unwrap(), "--a", "-1", "--s", "1"]);
    assert_eq!(out.status.code(), Some(2));

    // 3: missing input file
    let out = run_err(&["moments", "does_not_exist.json", "--n", "2"]);
    assert_eq!(out.status.code(), Some(3));

    // 3: structurally valid JSON violating measure invariants
    let bad = tmp("bad_measure.json");
    std::fs::write(
        &bad,
        "{\"label\": \"zero\", \"atoms\": [], \"density\": []}",
    )
    .unwrap();
    let out = run_err(&["moments", bad.to_str().unwrap(), "--n", "2"]);
    assert_eq!(out.status.code(), Some(3));

    // 3: malformed JSON
    let garbled = tmp("garbled.json");
    std::fs::write(&garbled, "not json at all").unwrap();
    let out = run_err(&["moments", garbled.to_str().unwrap(), "--n", "2"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn measure_round_trip_through_files() {
    use hilbertmu::measures::{DensityTerm, MeasureSpec};
    let m = MeasureSpec::new(
        "trip",
        vec![(0.123456789012345, 0.7)],
        vec![DensityTerm {
            c: 1.25,
            gamma: 2.75,
            beta: 0.5,
        }],
    )
    .unwrap();
    let path = tmp("round_trip.json");
    std::fs::write(&path, m.to_json()).unwrap();

    let rows = csv_rows(&run_ok(&["moments", path.to_str().unwrap(), "--n", "6"]));
    for (n, row) in rows.iter().enumerate() {
        let want = m.moment(n);
        let got = parse(&row[1]);
        assert!(
            (got - want).abs() <= 1e-14 * want.abs(),
            "moment {n}: {got} vs {want}"
        );
    }
}
