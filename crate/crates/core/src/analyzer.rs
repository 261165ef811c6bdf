//! Executable verdicts: which measures make the operator bounded or
//! compact from a Hardy space into a weighted Bergman target or the Bloch
//! space, decided through Carleson quotient profiles and corroborated by
//! extremal pairings.
//!
//! The parameter triple `(p, q, alpha)` selects one of three regimes:
//!
//! - `q > 1` and `q >= alpha p`: Bergman target, quotient exponents
//!   `(a, s) = (0, 1/p + alpha/q')`;
//! - `q = 1 >= p`: endpoint Bergman target, exponents `(1, 1/p)`;
//! - `q = inf`: Bloch target, exponents `(0, 1/p + alpha)`.
//!
//! Everything else is out of range by design: no classification is claimed
//! there. Boundedness is decided by the quotient profile (the measure
//! condition is an equivalence); the fitted divergence rate of the
//! extremal pairing is recorded as corroboration only. Compactness
//! additionally requires the pairing values to decay along the
//! concentrating sequence, and the two signals are surfaced separately
//! when they disagree.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::measures::{CarlesonReport, CarlesonThresholds, MeasureSpec};
use crate::numfmt;
use crate::operator::QuadConfig;
use crate::spaces::{self, GridSpec, PowerSeries};

/// Target-space regime of a parameter triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TargetBranch {
    /// Bergman target with `q > 1`.
    Bergman,
    /// Bergman target at the endpoint `q = 1`.
    BergmanEndpoint,
    /// Bloch target, selected by `q = inf`.
    Bloch,
}

impl fmt::Display for TargetBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TargetBranch::Bergman => "bergman",
            TargetBranch::BergmanEndpoint => "bergman-endpoint",
            TargetBranch::Bloch => "bloch",
        };
        f.write_str(s)
    }
}

/// Outcome of a classification run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Bounded,
    Unbounded,
    Compact,
    NotCompact,
    OutOfRange,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Bounded => "bounded",
            Verdict::Unbounded => "unbounded",
            Verdict::Compact => "compact",
            Verdict::NotCompact => "not-compact",
            Verdict::OutOfRange => "out-of-range",
        };
        f.write_str(s)
    }
}

/// Which classification a verdict run performs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SweepMode {
    Bounded,
    Compact,
}

impl fmt::Display for SweepMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SweepMode::Bounded => "bounded",
            SweepMode::Compact => "compact",
        })
    }
}

impl std::str::FromStr for SweepMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bounded" => Ok(SweepMode::Bounded),
            "compact" => Ok(SweepMode::Compact),
            other => Err(Error::InvalidParameter(format!(
                "mode must be 'bounded' or 'compact', got '{other}'"
            ))),
        }
    }
}

/// Conjugate exponent `q' = q/(q-1)` for `q > 1`.
pub fn conjugate_exponent(q: f64) -> f64 {
    q / (q - 1.0)
}

/// Maps `(p, q, alpha)` to its branch and required quotient exponents
/// `(a, s)`. `q = f64::INFINITY` selects the Bloch target. Returns `None`
/// for the uncharacterized ranges (`0 < q < 1`, `q = 1 < p`, and
/// `1 < q < alpha p`).
pub fn classify_branch(p: f64, q: f64, alpha: f64) -> Option<(TargetBranch, f64, f64)> {
    if q.is_infinite() && q > 0.0 {
        return Some((TargetBranch::Bloch, 0.0, 1.0 / p + alpha));
    }
    if q == 1.0 && p <= 1.0 {
        return Some((TargetBranch::BergmanEndpoint, 1.0, 1.0 / p));
    }
    if q > 1.0 && q >= alpha * p {
        return Some((
            TargetBranch::Bergman,
            0.0,
            1.0 / p + alpha / conjugate_exponent(q),
        ));
    }
    None
}

/// Configuration of the verdict computations.
#[derive(Clone, Debug)]
pub struct AnalyzerConfig {
    /// Depth of the dyadic Carleson grid.
    pub depth: usize,
    /// Quotient divergence/vanishing thresholds.
    pub thresholds: CarlesonThresholds,
    /// Quadrature budget for the extremal pairings.
    pub quad: QuadConfig,
    /// Pairing sequence `a_j = 1 - 2^{-j}` for `j = 1..=pairing_levels`.
    pub pairing_levels: usize,
    /// Trailing points used by the least-squares rate fit.
    pub fit_window: usize,
    /// The pairing counts as decaying to zero once its final value drops
    /// below this fraction of its maximum.
    pub pairing_null_ratio: f64,
}

impl Default for AnalyzerConfig {
    fn default() -> Self {
        AnalyzerConfig {
            depth: 40,
            thresholds: CarlesonThresholds::default(),
            quad: QuadConfig::default(),
            pairing_levels: 12,
            fit_window: 6,
            // small enough to reject pairings approaching a positive limit
            // (never observed below ~0.8 relative), large enough to accept
            // the slowest compact calibration (decay 2^{-j/2}, final value
            // ~0.02 relative at level 12)
            pairing_null_ratio: 5e-2,
        }
    }
}

impl AnalyzerConfig {
    fn validate(&self) -> Result<()> {
        if !(8..=52).contains(&self.depth) {
            return Err(Error::InvalidParameter(format!(
                "carleson grid depth must lie in 8..=52, got {}",
                self.depth
            )));
        }
        if self.pairing_levels < 2 || self.fit_window < 2 {
            return Err(Error::InvalidParameter(
                "pairing sequence and fit window need at least two points".into(),
            ));
        }
        self.quad.validate()
    }
}

fn ser_q<S: Serializer>(q: &f64, ser: S) -> std::result::Result<S::Ok, S::Error> {
    if q.is_infinite() {
        ser.serialize_str("inf")
    } else {
        ser.serialize_f64(*q)
    }
}

/// Full record of one classification.
#[derive(Clone, Debug, Serialize)]
pub struct VerdictReport {
    pub measure: String,
    pub p: f64,
    #[serde(serialize_with = "ser_q")]
    pub q: f64,
    pub alpha: f64,
    pub mode: SweepMode,
    pub branch: Option<TargetBranch>,
    /// Required logarithmic exponent `a` of the quotient.
    pub required_a: Option<f64>,
    /// Required power exponent `s` of the quotient.
    pub required_s: Option<f64>,
    pub carleson: Option<CarlesonReport>,
    /// Extremal pairing samples `(a_j, Phi(a_j))`.
    pub pairing: Vec<(f64, f64)>,
    /// Least-squares slope of `log Phi` against `log(1/(1-a))` over the
    /// trailing fit window.
    pub fitted_slope: Option<f64>,
    /// Whether the pairing decayed below the null ratio.
    pub pairing_null: Option<bool>,
    pub verdict: Verdict,
    pub notes: Vec<String>,
}

impl VerdictReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

/// Extremal pairing value `Phi(a)` for one branch.
///
/// The concentrating factor is always `((1-a^2)/(1-a t)^2)^{1/p}`; the
/// partner is the branch's dual test function, evaluated at `r^2 t` with
/// `r = a` where the argument requires an inner radius.
fn pairing_value(
    m: &MeasureSpec,
    branch: TargetBranch,
    p: f64,
    q: f64,
    alpha: f64,
    a: f64,
    quad: &QuadConfig,
) -> Result<f64> {
    let one_minus_a2 = (1.0 + a) * (1.0 - a);
    let fa = move |t: f64| {
        let d = 1.0 - a * t;
        (one_minus_a2 / (d * d)).powf(1.0 / p)
    };
    let a3 = a * a * a;
    match branch {
        TargetBranch::Bergman => {
            let e = alpha / conjugate_exponent(q);
            m.integrate(quad.tol, quad.max_panels, move |t| {
                let d = 1.0 - a * t;
                fa(t) * (one_minus_a2 / (d * d)).powf(e)
            })
        }
        TargetBranch::BergmanEndpoint => m.integrate(quad.tol, quad.max_panels, move |t| {
            fa(t) * (2.0 / (1.0 - a3 * t)).ln()
        }),
        TargetBranch::Bloch => m.integrate(quad.tol, quad.max_panels, move |t| {
            let d = 1.0 - a3 * t;
            fa(t) * (one_minus_a2 / (d * d)).powf(alpha)
        }),
    }
}

/// Least-squares slope of `ln phi` against `ln(1/(1-a))` over the last
/// `window` points with positive pairing values.
fn fit_slope(pairing: &[(f64, f64)], window: usize) -> Option<f64> {
    let usable: Vec<(f64, f64)> = pairing
        .iter()
        .filter(|(_, phi)| *phi > 0.0 && phi.is_finite())
        .map(|&(a, phi)| (-(1.0 - a).ln(), phi.ln()))
        .collect();
    if usable.len() < 2 {
        return None;
    }
    let tail = &usable[usable.len().saturating_sub(window)..];
    let n = tail.len() as f64;
    let sx: f64 = tail.iter().map(|(x, _)| x).sum();
    let sy: f64 = tail.iter().map(|(_, y)| y).sum();
    let sxx: f64 = tail.iter().map(|(x, _)| x * x).sum();
    let sxy: f64 = tail.iter().map(|(x, y)| x * y).sum();
    let denom = n * sxx - sx * sx;
    if denom.abs() < 1e-30 {
        return None;
    }
    Some((n * sxy - sx * sy) / denom)
}

fn verdict_impl(
    m: &MeasureSpec,
    p: f64,
    q: f64,
    alpha: f64,
    cfg: &AnalyzerConfig,
    mode: SweepMode,
) -> Result<VerdictReport> {
    cfg.validate()?;
    if !(p.is_finite() && p > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "source exponent p must be positive, got {p}"
        )));
    }
    if q.is_nan() || q <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "target exponent q must be positive (or inf for the Bloch target), got {q}"
        )));
    }
    if !(alpha.is_finite() && alpha > 1.0) {
        return Err(Error::InvalidParameter(format!(
            "classification requires alpha > 1, got {alpha}"
        )));
    }

    let mut notes = Vec::new();
    // well-definedness gate of the underlying series representation
    let gate_s = if p <= 1.0 { 1.0 / p } else { 1.0 };
    let gate = m.carleson_report_with(0.0, gate_s, cfg.depth, &cfg.thresholds);
    if gate.divergent {
        notes.push(format!(
            "well-definedness gate violated: quotient with s = {} diverges",
            numfmt::float(gate_s)
        ));
    } else {
        notes.push(format!(
            "well-definedness gate satisfied (s = {}, constant = {})",
            numfmt::float(gate_s),
            numfmt::float(gate.constant)
        ));
    }

    let Some((branch, req_a, req_s)) = classify_branch(p, q, alpha) else {
        notes.push(
            "parameter triple lies outside the characterized ranges; no classification claimed"
                .into(),
        );
        return Ok(VerdictReport {
            measure: m.label().to_string(),
            p,
            q,
            alpha,
            mode,
            branch: None,
            required_a: None,
            required_s: None,
            carleson: None,
            pairing: Vec::new(),
            fitted_slope: None,
            pairing_null: None,
            verdict: Verdict::OutOfRange,
            notes,
        });
    };

    let carleson = m.carleson_report_with(req_a, req_s, cfg.depth, &cfg.thresholds);

    let mut pairing = Vec::with_capacity(cfg.pairing_levels);
    for j in 1..=cfg.pairing_levels {
        let a = 1.0 - (-(j as f64)).exp2();
        let phi = pairing_value(m, branch, p, q, alpha, a, &cfg.quad)?;
        pairing.push((a, phi));
    }
    let fitted_slope = fit_slope(&pairing, cfg.fit_window);

    let phi_max = pairing.iter().map(|(_, v)| *v).fold(0.0f64, f64::max);
    let phi_last = pairing.last().map(|(_, v)| *v).unwrap_or(0.0);
    let pairing_null = phi_max > 0.0 && phi_last <= cfg.pairing_null_ratio * phi_max;

    let verdict = match mode {
        SweepMode::Bounded => {
            if carleson.divergent {
                Verdict::Unbounded
            } else {
                Verdict::Bounded
            }
        }
        SweepMode::Compact => {
            if carleson.divergent {
                notes.push("quotient divergent: operator is not even bounded".into());
            }
            match (carleson.vanishing, pairing_null) {
                (true, true) => Verdict::Compact,
                (true, false) => {
                    notes.push(
                        "signals disagree: quotient vanishes but the extremal pairing did not decay"
                            .into(),
                    );
                    Verdict::NotCompact
                }
                (false, true) => {
                    notes.push(
                        "signals disagree: extremal pairing decayed but the quotient is not vanishing"
                            .into(),
                    );
                    Verdict::NotCompact
                }
                (false, false) => Verdict::NotCompact,
            }
        }
    };

    Ok(VerdictReport {
        measure: m.label().to_string(),
        p,
        q,
        alpha,
        mode,
        branch: Some(branch),
        required_a: Some(req_a),
        required_s: Some(req_s),
        carleson: Some(carleson),
        pairing,
        fitted_slope,
        pairing_null: Some(pairing_null),
        verdict,
        notes,
    })
}

/// Classifies boundedness of the operator for the triple `(p, q, alpha)`.
pub fn boundedness_verdict(
    m: &MeasureSpec,
    p: f64,
    q: f64,
    alpha: f64,
    cfg: &AnalyzerConfig,
) -> Result<VerdictReport> {
    verdict_impl(m, p, q, alpha, cfg, SweepMode::Bounded)
}

/// Classifies compactness. Requires both the vanishing quotient profile and
/// decay of the extremal pairing; the two signals are computed
/// independently because their agreement is itself a check.
pub fn compactness_verdict(
    m: &MeasureSpec,
    p: f64,
    q: f64,
    alpha: f64,
    cfg: &AnalyzerConfig,
) -> Result<VerdictReport> {
    verdict_impl(m, p, q, alpha, cfg, SweepMode::Compact)
}

/// Ratio `(int |f|^q dmu)^{1/q} / ||f||_{H^p}` for a single function.
pub fn embedding_ratio_hardy(
    m: &MeasureSpec,
    p: f64,
    q: f64,
    f: &PowerSeries,
    grid: &GridSpec,
    quad: &QuadConfig,
) -> Result<f64> {
    let num = m
        .integrate(quad.tol, quad.max_panels, |t| f.eval_real(t).norm().powf(q))?
        .powf(1.0 / q);
    let den = spaces::hardy_norm(f, p, grid)?;
    Ok(num / den)
}

/// Ratio with the weighted Bergman norm in the denominator.
pub fn embedding_ratio_bergman(
    m: &MeasureSpec,
    p: f64,
    q: f64,
    beta: f64,
    f: &PowerSeries,
    grid: &GridSpec,
    quad: &QuadConfig,
) -> Result<f64> {
    let num = m
        .integrate(quad.tol, quad.max_panels, |t| f.eval_real(t).norm().powf(q))?
        .powf(1.0 / q);
    let den = spaces::bergman_norm(f, p, beta, grid)?;
    Ok(num / den)
}

/// Embedding diagnostics along a concentrating family.
#[derive(Clone, Debug, Serialize)]
pub struct EmbeddingReport {
    /// `(a, ratio)` pairs in the order supplied.
    pub ratios: Vec<(f64, f64)>,
    pub max_ratio: f64,
    /// Least-squares slope of `ln ratio` against `ln(1-a)`.
    pub slope: f64,
    /// No ratio grew beyond a factor of 4 over the start of the sweep;
    /// decaying sweeps count as stable.
    pub stable: bool,
}

/// Spread factor below which a ratio sweep counts as stable.
const STABILITY_FACTOR: f64 = 4.0;

fn embedding_report(ratios: Vec<(f64, f64)>) -> Result<EmbeddingReport> {
    if ratios.len() < 2 {
        return Err(Error::EmptyInput(
            "embedding check needs at least two family members".into(),
        ));
    }
    let max_ratio = ratios
        .iter()
        .map(|(_, r)| *r)
        .fold(f64::NEG_INFINITY, f64::max);
    let first_ratio = ratios[0].1;
    let pts: Vec<(f64, f64)> = ratios
        .iter()
        .map(|&(a, r)| ((1.0 - a).ln(), r.ln()))
        .collect();
    let n = pts.len() as f64;
    let sx: f64 = pts.iter().map(|(x, _)| x).sum();
    let sy: f64 = pts.iter().map(|(_, y)| y).sum();
    let sxx: f64 = pts.iter().map(|(x, _)| x * x).sum();
    let sxy: f64 = pts.iter().map(|(x, y)| x * y).sum();
    let slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    Ok(EmbeddingReport {
        ratios,
        max_ratio,
        slope,
        stable: max_ratio <= STABILITY_FACTOR * first_ratio,
    })
}

/// Checks the Hardy embedding `H^p -> L^q(mu)` along a concentrating
/// family `(a, f_a)` sorted by increasing `a`. A stable ratio certifies
/// the `q/p` Carleson behavior on this family; growth is reported with
/// its fitted rate.
pub fn embedding_check_hardy(
    m: &MeasureSpec,
    p: f64,
    q: f64,
    family: &[(f64, PowerSeries)],
    grid: &GridSpec,
    quad: &QuadConfig,
) -> Result<EmbeddingReport> {
    if !(0.0 < p && p <= q) {
        return Err(Error::InvalidParameter(format!(
            "embedding requires 0 < p <= q, got p={p}, q={q}"
        )));
    }
    let mut ratios = Vec::with_capacity(family.len());
    for (a, f) in family {
        ratios.push((*a, embedding_ratio_hardy(m, p, q, f, grid, quad)?));
    }
    embedding_report(ratios)
}

/// Bergman-source analogue of [`embedding_check_hardy`].
pub fn embedding_check_bergman(
    m: &MeasureSpec,
    p: f64,
    q: f64,
    beta: f64,
    family: &[(f64, PowerSeries)],
    grid: &GridSpec,
    quad: &QuadConfig,
) -> Result<EmbeddingReport> {
    if !(0.0 < p && p <= q) {
        return Err(Error::InvalidParameter(format!(
            "embedding requires 0 < p <= q, got p={p}, q={q}"
        )));
    }
    let mut ratios = Vec::with_capacity(family.len());
    for (a, f) in family {
        ratios.push((*a, embedding_ratio_bergman(m, p, q, beta, f, grid, quad)?));
    }
    embedding_report(ratios)
}

/// One `(p, q, alpha)` cell of a sweep; `q` may be `inf`.
#[derive(Clone, Copy, Debug)]
pub struct SweepParam {
    pub p: f64,
    pub q: f64,
    pub alpha: f64,
}

/// One row of a sweep table. Cells that failed carry the error text
/// instead of aborting the sweep.
#[derive(Clone, Debug, Serialize)]
pub struct SweepRow {
    pub family: String,
    pub p: f64,
    #[serde(serialize_with = "ser_q")]
    pub q: f64,
    pub alpha: f64,
    pub branch: Option<TargetBranch>,
    pub required_a: Option<f64>,
    pub required_s: Option<f64>,
    pub constant: Option<f64>,
    pub divergent: Option<bool>,
    pub vanishing: Option<bool>,
    pub fitted_slope: Option<f64>,
    pub verdict: String,
    pub error: Option<String>,
}

impl SweepRow {
    /// Flattens a verdict report into one table row.
    pub fn from_verdict(rep: &VerdictReport) -> SweepRow {
        SweepRow {
            family: rep.measure.clone(),
            p: rep.p,
            q: rep.q,
            alpha: rep.alpha,
            branch: rep.branch,
            required_a: rep.required_a,
            required_s: rep.required_s,
            constant: rep.carleson.as_ref().map(|c| c.constant),
            divergent: rep.carleson.as_ref().map(|c| c.divergent),
            vanishing: rep.carleson.as_ref().map(|c| c.vanishing),
            fitted_slope: rep.fitted_slope,
            verdict: rep.verdict.to_string(),
            error: None,
        }
    }
}

/// Deterministically ordered sweep output.
#[derive(Clone, Debug, Serialize)]
pub struct SweepTable {
    pub mode: SweepMode,
    pub depth: usize,
    pub rows: Vec<SweepRow>,
}

impl SweepTable {
    /// CSV rendering with the run configuration in header comments.
    pub fn to_csv(&self, cfg: &AnalyzerConfig) -> String {
        let mut out = String::new();
        out.push_str(&format!("# mode = {}\n", self.mode));
        out.push_str(&format!("# depth = {}\n", cfg.depth));
        out.push_str(&format!("# pairing_levels = {}\n", cfg.pairing_levels));
        out.push_str(&format!("# fit_window = {}\n", cfg.fit_window));
        out.push_str(&format!(
            "# divergence_factor = {}\n",
            numfmt::float(cfg.thresholds.divergence_factor)
        ));
        out.push_str(&format!(
            "# vanishing_ratio = {}\n",
            numfmt::float(cfg.thresholds.vanishing_ratio)
        ));
        out.push_str(&format!(
            "# pairing_null_ratio = {}\n",
            numfmt::float(cfg.pairing_null_ratio)
        ));
        out.push_str(&format!("# quad_tol = {}\n", numfmt::float(cfg.quad.tol)));
        out.push_str(&format!("# quad_max_panels = {}\n", cfg.quad.max_panels));
        out.push_str(
            "family,p,q,alpha,branch,required_a,required_s,constant,divergent,vanishing,fitted_slope,verdict,error\n",
        );
        for row in &self.rows {
            let opt_f = |v: Option<f64>| v.map(numfmt::float).unwrap_or_default();
            let opt_b = |v: Option<bool>| {
                v.map(|b| numfmt::boolean(b).to_string())
                    .unwrap_or_default()
            };
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
                row.family,
                numfmt::float(row.p),
                numfmt::float(row.q),
                numfmt::float(row.alpha),
                row.branch.map(|b| b.to_string()).unwrap_or_default(),
                opt_f(row.required_a),
                opt_f(row.required_s),
                opt_f(row.constant),
                opt_b(row.divergent),
                opt_b(row.vanishing),
                opt_f(row.fitted_slope),
                row.verdict,
                // keep error text CSV-safe
                row.error.as_deref().unwrap_or_default().replace(',', ";"),
            ));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("table serialization cannot fail")
    }
}

/// Cross product of verdicts over families and parameter triples, in
/// deterministic (family, then parameter) order. Individual cell failures
/// are recorded in the row and never abort the sweep.
pub fn sweep(
    families: &[MeasureSpec],
    params: &[SweepParam],
    mode: SweepMode,
    cfg: &AnalyzerConfig,
) -> Result<SweepTable> {
    if families.is_empty() {
        return Err(Error::EmptyInput(
            "sweep needs at least one measure family".into(),
        ));
    }
    if params.is_empty() {
        return Err(Error::EmptyInput(
            "sweep needs at least one parameter triple".into(),
        ));
    }
    cfg.validate()?;
    let mut rows = Vec::with_capacity(families.len() * params.len());
    for family in families {
        for param in params {
            let result = match mode {
                SweepMode::Bounded => {
                    boundedness_verdict(family, param.p, param.q, param.alpha, cfg)
                }
                SweepMode::Compact => {
                    compactness_verdict(family, param.p, param.q, param.alpha, cfg)
                }
            };
            let row = match result {
                Ok(rep) => SweepRow::from_verdict(&rep),
                Err(e) => SweepRow {
                    family: family.label().to_string(),
                    p: param.p,
                    q: param.q,
                    alpha: param.alpha,
                    branch: None,
                    required_a: None,
                    required_s: None,
                    constant: None,
                    divergent: None,
                    vanishing: None,
                    fitted_slope: None,
                    verdict: "error".to_string(),
                    error: Some(e.to_string()),
                },
            };
            rows.push(row);
        }
    }
    Ok(SweepTable {
        mode,
        depth: cfg.depth,
        rows,
    })
}
