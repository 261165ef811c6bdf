//! `hilbertmu` command line: file-based measure specs in, CSV/JSON
//! reports out.
//!
//! Subcommands: `moments`, `carleson`, `apply`, `verify`, `sweep`.
//! Verdicts are emitted as data, never as exit codes, so sweeps with
//! unbounded cells still exit 0. Exit codes: 0 success, 2 usage error,
//! 3 input parse error, 4 numerical non-convergence.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use hilbertmu::analyzer::{self, AnalyzerConfig, SweepMode, SweepRow, SweepTable, VerdictReport};
use hilbertmu::measures::MeasureSpec;
use hilbertmu::numfmt;
use hilbertmu::operator::{self, OperatorConfig};
use hilbertmu::spaces::PowerSeries;

mod sweep_config;

use sweep_config::SweepConfigFile;

#[derive(Parser)]
#[command(
    name = "hilbertmu",
    version,
    about = "Moment Hankel matrices of measures on [0,1) and the operators they induce"
)]
struct Cli {
    /// Reserved for future sampling-based commands; all current
    /// operations are deterministic and ignore it.
    #[arg(long, global = true)]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Moment table of a measure.
    Moments {
        /// Measure spec file (JSON).
        measure: PathBuf,
        /// Largest moment index.
        #[arg(long, default_value_t = 16)]
        n: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Carleson quotient profile of a measure.
    Carleson {
        measure: PathBuf,
        /// Logarithmic exponent of the quotient.
        #[arg(long)]
        a: f64,
        /// Power exponent of the quotient.
        #[arg(long)]
        s: f64,
        /// Dyadic grid depth.
        #[arg(long, default_value_t = 40)]
        depth: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Apply the operator to a coefficient file: series route, integral
    /// route, and their difference.
    Apply {
        measure: PathBuf,
        /// Kernel exponent.
        #[arg(long)]
        alpha: f64,
        /// Coefficient file: JSON array of [re, im] pairs.
        #[arg(long)]
        f: PathBuf,
        /// Single evaluation point "x,y"; mutually exclusive with --grid.
        #[arg(long, conflicts_with = "grid")]
        z: Option<String>,
        /// Evaluate on the default grid of 24 points with |z| <= 0.7.
        #[arg(long)]
        grid: bool,
        /// Truncation order of the series route.
        #[arg(long, default_value_t = 1024)]
        truncation: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Boundedness or compactness verdict for one (p, q, alpha) triple.
    Verify {
        measure: PathBuf,
        #[arg(long)]
        p: f64,
        /// Target exponent; a number, or "inf" for the Bloch target.
        #[arg(long)]
        q: String,
        #[arg(long)]
        alpha: f64,
        /// bounded | compact
        #[arg(long)]
        mode: String,
        /// Dyadic grid depth for the quotient profile.
        #[arg(long, default_value_t = 40)]
        depth: usize,
        /// Also write the (a, Phi(a)) pairing series as CSV.
        #[arg(long)]
        plot_data: Option<PathBuf>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Cross product of verdicts from a sweep config file.
    Sweep {
        /// JSON config: {"families": [...], "params": [...], "mode": ...}.
        config: PathBuf,
        #[command(flatten)]
        output: OutputArgs,
    },
}

/// Process failure carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn parse(message: impl Into<String>) -> Self {
        Failure {
            code: 3,
            message: message.into(),
        }
    }
}

impl From<hilbertmu::Error> for Failure {
    fn from(e: hilbertmu::Error) -> Self {
        use hilbertmu::Error::*;
        let code = match &e {
            QuadratureNonConvergence(_) => 4,
            InvalidMeasure(_) | Parse(_) => 3,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::parse(format!("cannot read {}: {e}", path.display())))
}

fn load_measure(path: &Path) -> Result<MeasureSpec, Failure> {
    MeasureSpec::from_json(&read_file(path)?).map_err(Failure::from)
}

fn load_series(path: &Path) -> Result<PowerSeries, Failure> {
    let pairs: Vec<(f64, f64)> = serde_json::from_str(&read_file(path)?)
        .map_err(|e| Failure::parse(format!("coefficient file {}: {e}", path.display())))?;
    let coeffs = pairs
        .iter()
        .map(|&(re, im)| Complex64::new(re, im))
        .collect();
    PowerSeries::new(path.display().to_string(), coeffs).map_err(Failure::from)
}

fn emit(output: &OutputArgs, text: &str) -> Result<(), Failure> {
    match &output.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::parse(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn parse_q(text: &str) -> Result<f64, Failure> {
    if text.eq_ignore_ascii_case("inf") || text.eq_ignore_ascii_case("infinity") {
        return Ok(f64::INFINITY);
    }
    text.parse::<f64>()
        .map_err(|_| Failure::usage(format!("--q must be a number or 'inf', got '{text}'")))
}

fn parse_point(text: &str) -> Result<Complex64, Failure> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 2 {
        return Err(Failure::usage(format!("--z expects 'x,y', got '{text}'")));
    }
    let x = parts[0].trim().parse::<f64>();
    let y = parts[1].trim().parse::<f64>();
    match (x, y) {
        (Ok(x), Ok(y)) => Ok(Complex64::new(x, y)),
        _ => Err(Failure::usage(format!(
            "--z expects 'x,y' numbers, got '{text}'"
        ))),
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Moments { measure, n, output } => {
            let m = load_measure(&measure)?;
            let moments = m.moments_upto(n);
            let text = match output.format {
                Format::Csv => {
                    let mut out = String::new();
                    out.push_str(&format!("# measure = {}\n", m.label()));
                    out.push_str(&format!(
                        "# total_mass = {}\n",
                        numfmt::float(m.total_mass())
                    ));
                    out.push_str(&format!("# n_max = {n}\n"));
                    out.push_str("n,moment\n");
                    for (i, v) in moments.iter().enumerate() {
                        out.push_str(&format!("{i},{}\n", numfmt::float(*v)));
                    }
                    out
                }
                Format::Json => {
                    #[derive(serde::Serialize)]
                    struct MomentsReport<'a> {
                        measure: &'a str,
                        total_mass: f64,
                        n_max: usize,
                        moments: &'a [f64],
                    }
                    serde_json::to_string_pretty(&MomentsReport {
                        measure: m.label(),
                        total_mass: m.total_mass(),
                        n_max: n,
                        moments: &moments,
                    })
                    .expect("serialization cannot fail")
                        + "\n"
                }
            };
            emit(&output, &text)
        }
        Command::Carleson {
            measure,
            a,
            s,
            depth,
            output,
        } => {
            if !(a.is_finite() && a >= 0.0) {
                return Err(Failure::usage(format!("--a must be >= 0, got {a}")));
            }
            if !(s.is_finite() && s > 0.0) {
                return Err(Failure::usage(format!("--s must be > 0, got {s}")));
            }
            if !(8..=52).contains(&depth) {
                return Err(Failure::usage(format!(
                    "--depth must lie in 8..=52, got {depth}"
                )));
            }
            let m = load_measure(&measure)?;
            let report = m.carleson_report(a, s, depth);
            let text = match output.format {
                Format::Csv => report.to_csv(),
                Format::Json => report.to_json() + "\n",
            };
            emit(&output, &text)
        }
        Command::Apply {
            measure,
            alpha,
            f,
            z,
            grid,
            truncation,
            output,
        } => {
            let m = load_measure(&measure)?;
            let series = load_series(&f)?;
            let cfg = OperatorConfig::new(alpha)
                .and_then(|c| c.with_truncation(truncation))
                .map_err(Failure::from)?;
            if series.order() > cfg.truncation {
                return Err(Failure::usage(format!(
                    "coefficient file has order {}, above the truncation {}",
                    series.order(),
                    cfg.truncation
                )));
            }
            let points = if let Some(text) = z {
                vec![parse_point(&text)?]
            } else if grid {
                operator::default_z_grid()
            } else {
                return Err(Failure::usage("apply needs either --z or --grid"));
            };
            for pt in &points {
                if pt.norm_sqr() >= 1.0 {
                    return Err(Failure::usage(format!(
                        "evaluation point {pt} lies outside the open unit disk"
                    )));
                }
            }
            let matrix = operator::hankel_matrix(&m, &cfg);
            let image = operator::apply_hankel(&matrix, &series).map_err(Failure::from)?;
            let mut rows = Vec::with_capacity(points.len());
            for pt in &points {
                let series_value = image.eval(*pt).map_err(Failure::from)?;
                let integral_value = operator::apply_integral(&m, alpha, &series, *pt, &cfg.quad)
                    .map_err(Failure::from)?;
                rows.push((*pt, series_value, integral_value));
            }
            let text = match output.format {
                Format::Csv => {
                    let mut out = String::new();
                    out.push_str(&format!("# measure = {}\n", m.label()));
                    out.push_str(&format!("# alpha = {}\n", numfmt::float(alpha)));
                    out.push_str(&format!("# truncation = {}\n", cfg.truncation));
                    out.push_str(&format!("# quad_tol = {}\n", numfmt::float(cfg.quad.tol)));
                    out.push_str(
                        "z_re,z_im,series_re,series_im,integral_re,integral_im,abs_diff\n",
                    );
                    for (pt, sv, iv) in &rows {
                        out.push_str(&format!(
                            "{},{},{},{},{},{},{}\n",
                            numfmt::float(pt.re),
                            numfmt::float(pt.im),
                            numfmt::float(sv.re),
                            numfmt::float(sv.im),
                            numfmt::float(iv.re),
                            numfmt::float(iv.im),
                            numfmt::float((sv - iv).norm())
                        ));
                    }
                    out
                }
                Format::Json => {
                    #[derive(serde::Serialize)]
                    struct ApplyRow {
                        z: (f64, f64),
                        series: (f64, f64),
                        integral: (f64, f64),
                        abs_diff: f64,
                    }
                    #[derive(serde::Serialize)]
                    struct ApplyReport<'a> {
                        measure: &'a str,
                        alpha: f64,
                        truncation: usize,
                        quad_tol: f64,
                        rows: Vec<ApplyRow>,
                    }
                    let report = ApplyReport {
                        measure: m.label(),
                        alpha,
                        truncation: cfg.truncation,
                        quad_tol: cfg.quad.tol,
                        rows: rows
                            .iter()
                            .map(|(pt, sv, iv)| ApplyRow {
                                z: (pt.re, pt.im),
                                series: (sv.re, sv.im),
                                integral: (iv.re, iv.im),
                                abs_diff: (sv - iv).norm(),
                            })
                            .collect(),
                    };
                    serde_json::to_string_pretty(&report).expect("serialization cannot fail") + "\n"
                }
            };
            emit(&output, &text)
        }
        Command::Verify {
            measure,
            p,
            q,
            alpha,
            mode,
            depth,
            plot_data,
            output,
        } => {
            let q = parse_q(&q)?;
            let mode: SweepMode = mode.parse().map_err(Failure::from)?;
            if !(8..=52).contains(&depth) {
                return Err(Failure::usage(format!(
                    "--depth must lie in 8..=52, got {depth}"
                )));
            }
            let m = load_measure(&measure)?;
            let cfg = AnalyzerConfig {
                depth,
                ..AnalyzerConfig::default()
            };
            let report = match mode {
                SweepMode::Bounded => analyzer::boundedness_verdict(&m, p, q, alpha, &cfg),
                SweepMode::Compact => analyzer::compactness_verdict(&m, p, q, alpha, &cfg),
            }
            .map_err(Failure::from)?;
            if let Some(path) = plot_data {
                let mut out = String::new();
                out.push_str("a,phi\n");
                for (a, phi) in &report.pairing {
                    out.push_str(&format!("{},{}\n", numfmt::float(*a), numfmt::float(*phi)));
                }
                std::fs::write(&path, out)
                    .map_err(|e| Failure::parse(format!("cannot write {}: {e}", path.display())))?;
            }
            let text = match output.format {
                Format::Csv => single_row_table(&report, mode, &cfg),
                Format::Json => report.to_json() + "\n",
            };
            emit(&output, &text)
        }
        Command::Sweep { config, output } => {
            let parsed = SweepConfigFile::load(&config)?;
            let cfg = AnalyzerConfig {
                depth: parsed.depth,
                ..AnalyzerConfig::default()
            };
            let table = analyzer::sweep(&parsed.families, &parsed.params, parsed.mode, &cfg)
                .map_err(Failure::from)?;
            let text = match output.format {
                Format::Csv => table.to_csv(&cfg),
                Format::Json => table.to_json() + "\n",
            };
            if output.out.is_some() {
                emit(&output, &text)?;
                print_sweep_summary(&table);
                Ok(())
            } else {
                emit(&output, &text)
            }
        }
    }
}

fn single_row_table(report: &VerdictReport, mode: SweepMode, cfg: &AnalyzerConfig) -> String {
    let row = SweepRow::from_verdict(report);
    let table = SweepTable {
        mode,
        depth: cfg.depth,
        rows: vec![row],
    };
    table.to_csv(cfg)
}

fn print_sweep_summary(table: &SweepTable) {
    let mut counts: Vec<(String, usize)> = Vec::new();
    for row in &table.rows {
        match counts.iter_mut().find(|(v, _)| *v == row.verdict) {
            Some((_, n)) => *n += 1,
            None => counts.push((row.verdict.clone(), 1)),
        }
    }
    let summary: Vec<String> = counts.iter().map(|(v, n)| format!("{v}: {n}")).collect();
    println!("sweep: {} rows ({})", table.rows.len(), summary.join(", "));
}
