//! Truncated power series on the unit disk, their Hardy / weighted Bergman
//! / Bloch norms, and the extremal test-function families.
//!
//! Norms are computed by sampling the series on circles with an FFT
//! (oversampled 8x relative to the truncation order, which keeps aliasing
//! below 1e-12 for the families used here) and combining the angular means
//! radially. The radial supremum for the Hardy norm uses the fact that
//! integral means are nondecreasing in the radius, so for a polynomial the
//! circle `r = 1` itself is included and no extrapolation is needed.

use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::error::{Error, Result};
use crate::numeric::quad::{self, GaussLegendre};

/// Truncated Taylor series `sum_{k<=N} a_k z^k` of an analytic function.
#[derive(Clone, Debug)]
pub struct PowerSeries {
    label: String,
    coeffs: Vec<Complex64>,
}

impl PowerSeries {
    pub fn new(label: impl Into<String>, coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidParameter(
                "a power series needs at least the constant coefficient".into(),
            ));
        }
        if coeffs
            .iter()
            .any(|c| !c.re.is_finite() || !c.im.is_finite())
        {
            return Err(Error::InvalidParameter(
                "power series coefficients must be finite".into(),
            ));
        }
        Ok(PowerSeries {
            label: label.into(),
            coeffs,
        })
    }

    pub fn from_real(label: impl Into<String>, coeffs: &[f64]) -> Result<Self> {
        Self::new(
            label,
            coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
        )
    }

    /// The constant series `c`.
    pub fn constant(c: f64) -> Self {
        Self::from_real(format!("const({c})"), &[c]).expect("constant is valid")
    }

    /// The identity series `z`.
    pub fn identity() -> Self {
        Self::from_real("z", &[0.0, 1.0]).expect("identity is valid")
    }

    /// The monomial `z^n`.
    pub fn monomial(n: usize) -> Self {
        let mut coeffs = vec![0.0; n + 1];
        coeffs[n] = 1.0;
        Self::from_real(format!("z^{n}"), &coeffs).expect("monomial is valid")
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Truncation order `N` (degree of the last stored coefficient).
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Horner evaluation inside the open unit disk.
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        if z.norm_sqr() >= 1.0 {
            return Err(Error::InvalidParameter(format!(
                "evaluation point {z} lies outside the open unit disk"
            )));
        }
        Ok(self.horner(z))
    }

    fn horner(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// Horner evaluation at a real point of `[-1, 1]`; hot path for measure
    /// integrals. The closed interval is deliberate: a truncated series is
    /// a polynomial, and the tail substitution `t = 1 - e^{-x}` rounds to
    /// `t = 1` for large `x`.
    pub fn eval_real(&self, t: f64) -> Complex64 {
        debug_assert!(t.abs() <= 1.0);
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = Complex64::new(acc.re * t + c.re, acc.im * t + c.im);
        }
        acc
    }

    /// Series of the derivative `f'`.
    pub fn derivative(&self) -> PowerSeries {
        let coeffs = if self.coeffs.len() == 1 {
            vec![Complex64::new(0.0, 0.0)]
        } else {
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(k, c)| c * (k as f64 + 1.0))
                .collect()
        };
        PowerSeries {
            label: format!("{}'", self.label),
            coeffs,
        }
    }

    /// Scales every coefficient by a complex factor.
    pub fn scaled(&self, factor: Complex64) -> PowerSeries {
        PowerSeries {
            label: format!("scaled({})", self.label),
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Serializes the coefficients as a JSON array of `[re, im]` pairs.
    pub fn to_pairs_json(&self) -> String {
        let pairs: Vec<(f64, f64)> = self.coeffs.iter().map(|c| (c.re, c.im)).collect();
        serde_json::to_string(&pairs).expect("coefficient serialization cannot fail")
    }

    /// Parses a JSON array of `[re, im]` pairs.
    pub fn from_pairs_json(label: impl Into<String>, text: &str) -> Result<Self> {
        let pairs: Vec<(f64, f64)> = serde_json::from_str(text)
            .map_err(|e| Error::Parse(format!("coefficient array: {e}")))?;
        Self::new(
            label,
            pairs
                .iter()
                .map(|&(re, im)| Complex64::new(re, im))
                .collect(),
        )
    }
}

/// Sampling grid for norm computations.
#[derive(Clone, Debug)]
pub struct GridSpec {
    /// Radii for radial suprema, strictly increasing inside `(0, 1)`.
    pub radii: Vec<f64>,
    /// Angular sample count; a power of two, at least `8 (N+1)` for a
    /// series of order `N`.
    pub angular_size: usize,
    /// Node count of the radial Gauss-Legendre rule used by the Bergman
    /// norm (applied in the `u = r^2` variable).
    pub bergman_radial_nodes: usize,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            radii: (1..=20).map(|j| 1.0 - (-(j as f64)).exp2()).collect(),
            angular_size: 8192,
            bergman_radial_nodes: 256,
        }
    }
}

impl GridSpec {
    /// Default grid with the angular size raised to cover series of the
    /// given order.
    pub fn for_order(order: usize) -> Self {
        GridSpec {
            angular_size: angular_size_for(order),
            ..GridSpec::default()
        }
    }

    fn validate(&self) -> Result<()> {
        if self.radii.is_empty() {
            return Err(Error::InvalidParameter("grid has no radii".into()));
        }
        let increasing = self.radii.windows(2).all(|w| w[0] < w[1]);
        if !increasing || self.radii[0] <= 0.0 || *self.radii.last().unwrap() >= 1.0 {
            return Err(Error::InvalidParameter(
                "grid radii must be strictly increasing inside (0, 1)".into(),
            ));
        }
        if !self.angular_size.is_power_of_two() {
            return Err(Error::InvalidParameter(format!(
                "angular size {} is not a power of two",
                self.angular_size
            )));
        }
        if self.bergman_radial_nodes < 4 {
            return Err(Error::InvalidParameter(
                "bergman radial rule needs at least 4 nodes".into(),
            ));
        }
        Ok(())
    }

    fn check_order(&self, order: usize) -> Result<()> {
        self.validate()?;
        let needed = 8 * (order + 1);
        if self.angular_size < needed {
            return Err(Error::GridTooCoarse {
                needed,
                got: self.angular_size,
            });
        }
        Ok(())
    }
}

impl GridSpec {
    /// Deterministic digest of the grid parameters, recorded alongside
    /// norm values so reports pin the grid they were computed on.
    pub fn digest(&self) -> String {
        // FNV-1a over the raw parameter bits
        let mut h: u64 = 0xcbf29ce484222325;
        let mut eat = |byte: u8| {
            h ^= byte as u64;
            h = h.wrapping_mul(0x100000001b3);
        };
        for r in &self.radii {
            for b in r.to_bits().to_le_bytes() {
                eat(b);
            }
        }
        for b in (self.angular_size as u64).to_le_bytes() {
            eat(b);
        }
        for b in (self.bergman_radial_nodes as u64).to_le_bytes() {
            eat(b);
        }
        format!("{h:016x}")
    }
}

/// Smallest power of two giving 8x angular oversampling for the order.
pub fn angular_size_for(order: usize) -> usize {
    (8 * (order + 1)).next_power_of_two()
}

/// One computed norm value, tagged with the grid digest it came from.
#[derive(Clone, Debug)]
pub struct NormRecord {
    pub label: String,
    /// Which norm: "hardy", "bergman", or "bloch".
    pub kind: String,
    /// Integrability exponent `p` (1.0 for the Bloch norm).
    pub p: f64,
    /// Bergman weight exponent, when applicable.
    pub weight: Option<f64>,
    pub value: f64,
    pub grid_digest: String,
}

/// CSV rendering of norm records: one row per value.
pub fn norm_records_to_csv(records: &[NormRecord]) -> String {
    let mut out = String::from("label,kind,p,weight,value,grid\n");
    for r in records {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.label,
            r.kind,
            crate::numfmt::float(r.p),
            r.weight.map(crate::numfmt::float).unwrap_or_default(),
            crate::numfmt::float(r.value),
            r.grid_digest
        ));
    }
    out
}

/// Values of `f` on the `m` angular samples of the circle of radius `r`.
fn circle_samples(f: &PowerSeries, r: f64, m: usize) -> Vec<Complex64> {
    let mut buf = vec![Complex64::new(0.0, 0.0); m];
    let mut rk = 1.0;
    for (k, c) in f.coeffs().iter().enumerate() {
        buf[k] = c * rk;
        rk *= r;
    }
    FftPlanner::new().plan_fft_forward(m).process(&mut buf);
    buf
}

/// Integral mean `M_p(r, f)` over `m` uniform angles.
///
/// `r = 1` is accepted: a truncated series is a polynomial, continuous up
/// to the boundary.
pub fn integral_means(f: &PowerSeries, r: f64, p: f64, m: usize) -> Result<f64> {
    if !(r.is_finite() && 0.0 < r && r <= 1.0) {
        return Err(Error::InvalidParameter(format!(
            "integral mean radius must lie in (0, 1], got {r}"
        )));
    }
    if !(p.is_finite() && p > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "integral mean exponent must be positive, got {p}"
        )));
    }
    let needed = 8 * (f.order() + 1);
    if !m.is_power_of_two() || m < needed {
        return Err(Error::GridTooCoarse { needed, got: m });
    }
    let samples = circle_samples(f, r, m);
    let mean: f64 = samples.iter().map(|v| v.norm().powf(p)).sum::<f64>() / m as f64;
    Ok(mean.powf(1.0 / p))
}

/// Hardy norm: supremum of the integral means over the grid radii and the
/// boundary circle itself.
pub fn hardy_norm(f: &PowerSeries, p: f64, grid: &GridSpec) -> Result<f64> {
    grid.check_order(f.order())?;
    let mut best = 0.0f64;
    for &r in grid.radii.iter().chain(std::iter::once(&1.0)) {
        best = best.max(integral_means(f, r, p, grid.angular_size)?);
    }
    Ok(best)
}

/// Weighted Bergman norm
/// `((beta+1) int_D |f|^p (1-|z|^2)^beta dA)^{1/p}` via angular FFT means
/// and a radial Gauss-Legendre rule in `u = r^2`.
pub fn bergman_norm(f: &PowerSeries, p: f64, beta: f64, grid: &GridSpec) -> Result<f64> {
    grid.check_order(f.order())?;
    if !(beta.is_finite() && beta > -1.0) {
        return Err(Error::InvalidParameter(format!(
            "bergman weight exponent must exceed -1, got {beta}"
        )));
    }
    if !(p.is_finite() && p > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "bergman exponent must be positive, got {p}"
        )));
    }
    let rule = GaussLegendre::new(grid.bergman_radial_nodes);
    let value = rule.integrate(0.0, 1.0, &mut |u: f64| {
        let mp = integral_means(f, u.sqrt(), p, grid.angular_size)
            .expect("radius and exponent validated above");
        (1.0 - u).powf(beta) * mp.powf(p)
    });
    Ok(((beta + 1.0) * value).powf(1.0 / p))
}

/// Bloch norm `|f(0)| + sup (1-r^2) |f'(r e^{i theta})|` over the grid
/// augmented with `r = 0` (where the supremum for low-degree series lives).
pub fn bloch_norm(f: &PowerSeries, grid: &GridSpec) -> Result<f64> {
    grid.check_order(f.order())?;
    let d = f.derivative();
    let mut sup = d.coeffs()[0].norm(); // r = 0
    for &r in &grid.radii {
        let peak = circle_samples(&d, r, grid.angular_size)
            .iter()
            .map(|v| v.norm())
            .fold(0.0f64, f64::max);
        sup = sup.max((1.0 - r * r) * peak);
    }
    Ok(f.coeffs()[0].norm() + sup)
}

fn check_truncation(a: f64, order: usize) -> Result<()> {
    if !(0.0..1.0).contains(&a) || !a.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "kernel parameter must lie in [0, 1), got {a}"
        )));
    }
    if a > 0.0 && a.powi(order as i32) >= 1e-12 {
        return Err(Error::TruncationInsufficient(format!(
            "order {order} leaves a^N = {:.3e} >= 1e-12 for a = {a}",
            a.powi(order as i32)
        )));
    }
    Ok(())
}

/// Coefficients of `((1-a^2)/(1-a z)^2)^e` by the binomial ratio
/// recurrence `b_{k+1} = b_k a (k + 2e)/(k + 1)`; relative coefficient
/// error stays near machine precision, unlike sampling + FFT.
pub fn extremal_power(a: f64, e: f64, order: usize) -> Result<PowerSeries> {
    check_truncation(a, order)?;
    if !(e.is_finite() && e > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "kernel exponent must be positive, got {e}"
        )));
    }
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut b = (1.0 - a * a).powf(e);
    coeffs.push(b);
    for k in 0..order {
        let kf = k as f64;
        b = b * a * (kf + 2.0 * e) / (kf + 1.0);
        coeffs.push(b);
    }
    PowerSeries::from_real(format!("kernel(a={a},e={e})"), &coeffs)
}

/// The unit-norm concentrating family `((1-a^2)/(1-a z)^2)^{1/p}` of the
/// Hardy space `H^p`.
pub fn extremal_hardy(a: f64, p: f64, order: usize) -> Result<PowerSeries> {
    if !(p.is_finite() && p > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "hardy exponent must be positive, got {p}"
        )));
    }
    Ok(extremal_power(a, 1.0 / p, order)?.with_label(format!("extremal_hardy(a={a},p={p})")))
}

/// The logarithmic kernel `log(2/(1-a z)) = log 2 + sum_{k>=1} a^k z^k / k`,
/// a norm-bounded family in the Bloch space.
pub fn extremal_log(a: f64, order: usize) -> Result<PowerSeries> {
    check_truncation(a, order)?;
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(std::f64::consts::LN_2);
    let mut apow = 1.0;
    for k in 1..=order {
        apow *= a;
        coeffs.push(apow / k as f64);
    }
    PowerSeries::from_real(format!("logkernel(a={a})"), &coeffs)
}

/// Coefficient-decay diagnostics for a series measured against a Hardy
/// exponent `p` in `(0, 2]`.
#[derive(Clone, Debug)]
pub struct CoeffBounds {
    /// `max_n |a_n| (n+1)^{1 - 1/p}`.
    pub max_ratio: f64,
    /// Index attaining the maximum (smallest on ties).
    pub argmax: usize,
    /// `sum_n (n+1)^{p-2} |a_n|^p`.
    pub weighted_sum: f64,
}

/// Evaluates the coefficient-size and coefficient-sum bounds that control
/// membership diagnostics for `p in (0, 2]`.
pub fn coefficient_bounds(f: &PowerSeries, p: f64) -> Result<CoeffBounds> {
    if !(p.is_finite() && 0.0 < p && p <= 2.0) {
        return Err(Error::InvalidParameter(format!(
            "coefficient bounds require p in (0, 2], got {p}"
        )));
    }
    let mut max_ratio = f64::NEG_INFINITY;
    let mut argmax = 0;
    let mut weighted_sum = 0.0;
    for (n, c) in f.coeffs().iter().enumerate() {
        let np1 = (n + 1) as f64;
        let ratio = c.norm() * np1.powf(1.0 - 1.0 / p);
        if ratio > max_ratio {
            max_ratio = ratio;
            argmax = n;
        }
        weighted_sum += np1.powf(p - 2.0) * c.norm().powf(p);
    }
    Ok(CoeffBounds {
        max_ratio,
        argmax,
        weighted_sum,
    })
}

/// Weighted area pairing
/// `int_D conj(F(rz)) G(rz) (1-|z|^2)^beta dA(z)` for `0 < r < 1` and
/// `beta > -1`.
///
/// The angular integral of `conj(F) G` over a circle keeps only matching
/// Fourier modes, so the pairing reduces to the radial integral of the
/// diagonal series `A(u) = sum_n conj(F_n) G_n r^{2n} u^n` against
/// `(1-u)^beta`; the endpoint weight is handled by dyadic radial panels.
pub fn weighted_area_pairing(
    f: &PowerSeries,
    g: &PowerSeries,
    r: f64,
    beta: f64,
    rel_tol: f64,
) -> Result<Complex64> {
    if !(r.is_finite() && 0.0 < r && r < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "pairing radius must lie in (0, 1), got {r}"
        )));
    }
    if !(beta.is_finite() && beta > -1.0) {
        return Err(Error::InvalidParameter(format!(
            "pairing weight exponent must exceed -1, got {beta}"
        )));
    }
    let len = f.coeffs().len().min(g.coeffs().len());
    let mut diag = Vec::with_capacity(len);
    let r2 = r * r;
    let mut r2k = 1.0;
    for k in 0..len {
        diag.push(f.coeffs()[k].conj() * g.coeffs()[k] * r2k);
        r2k *= r2;
    }
    let rule = GaussLegendre::new(32);
    let est = quad::radial_dyadic(
        &rule,
        |u: f64, omu: f64| {
            let mut acc = Complex64::new(0.0, 0.0);
            for c in diag.iter().rev() {
                acc = acc * u + c;
            }
            acc * omu.powf(beta)
        },
        rel_tol,
        256,
    );
    if !est.converged {
        return Err(Error::QuadratureNonConvergence(format!(
            "weighted area pairing at beta = {beta} did not stabilize"
        )));
    }
    Ok(est.value)
}
