//! Gauss-Legendre panel quadrature with adaptive bisection.
//!
//! Two drivers cover every integral in the crate:
//!
//! - [`decay_tail`] integrates `h(x) * e^{-gamma (x - x0)} * (x + ln 2)^{-beta}`
//!   over `[x0, inf)` on panels of doubling width. This is the image of a
//!   `[t0, 1)` integral against a power-log density under the substitution
//!   `t = 1 - e^{-x}`, which removes the endpoint singularity.
//! - [`radial_dyadic`] integrates over `u in [0, 1)` on panels that halve
//!   their distance to `u = 1`, so algebraic endpoint weights `(1-u)^beta`
//!   with `beta > -1` converge geometrically.

use std::f64::consts::{LN_2, PI};

use num_complex::Complex64;

/// Scalar-like values the quadrature drivers can accumulate.
pub(crate) trait QuadValue: Copy {
    const ZERO: Self;
    fn add(self, other: Self) -> Self;
    fn sub(self, other: Self) -> Self;
    fn scale(self, k: f64) -> Self;
    fn magnitude(self) -> f64;
}

impl QuadValue for f64 {
    const ZERO: Self = 0.0;
    fn add(self, other: Self) -> Self {
        self + other
    }
    fn sub(self, other: Self) -> Self {
        self - other
    }
    fn scale(self, k: f64) -> Self {
        self * k
    }
    fn magnitude(self) -> f64 {
        self.abs()
    }
}

impl QuadValue for Complex64 {
    const ZERO: Self = Complex64::new(0.0, 0.0);
    fn add(self, other: Self) -> Self {
        self + other
    }
    fn sub(self, other: Self) -> Self {
        self - other
    }
    fn scale(self, k: f64) -> Self {
        self * k
    }
    fn magnitude(self) -> f64 {
        self.norm()
    }
}

/// Quadrature outcome; `converged` is false when a budget was exhausted.
pub(crate) struct Estimate<T> {
    pub value: T,
    pub converged: bool,
}

/// Gauss-Legendre rule on `[-1, 1]`, nodes by Newton iteration on the
/// Legendre recurrence.
pub(crate) struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    pub fn new(n: usize) -> Self {
        assert!(n >= 2);
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let nf = n as f64;
        for i in 0..n.div_ceil(2) {
            let mut x = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let mut p0 = 1.0;
                let mut p1 = x;
                for k in 2..=n {
                    let kf = k as f64;
                    let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                    p0 = p1;
                    p1 = p2;
                }
                dp = nf * (x * p1 - p0) / (x * x - 1.0);
                let dx = -p1 / dp;
                x += dx;
                if dx.abs() < 1e-15 {
                    break;
                }
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = x;
            nodes[n - 1 - i] = -x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        GaussLegendre { nodes, weights }
    }

    pub fn integrate<T: QuadValue, F: FnMut(f64) -> T>(&self, a: f64, b: f64, f: &mut F) -> T {
        let mid = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        let mut acc = T::ZERO;
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            acc = acc.add(f(mid + half * x).scale(*w));
        }
        acc.scale(half)
    }
}

fn adaptive_rec<T: QuadValue, F: FnMut(f64) -> T>(
    rule: &GaussLegendre,
    a: f64,
    b: f64,
    f: &mut F,
    whole: T,
    tol_abs: f64,
    depth: usize,
) -> Estimate<T> {
    let mid = 0.5 * (a + b);
    let left = rule.integrate(a, mid, f);
    let right = rule.integrate(mid, b, f);
    let refined = left.add(right);
    let err = refined.sub(whole).magnitude();
    // The second branch stops refinement once the bisection difference sits
    // at the rounding floor of the panel value itself.
    if err <= tol_abs || err <= 1e-15 * refined.magnitude() {
        return Estimate {
            value: refined,
            converged: true,
        };
    }
    if depth == 0 {
        return Estimate {
            value: refined,
            converged: false,
        };
    }
    let l = adaptive_rec(rule, a, mid, f, left, 0.5 * tol_abs, depth - 1);
    let r = adaptive_rec(rule, mid, b, f, right, 0.5 * tol_abs, depth - 1);
    Estimate {
        value: l.value.add(r.value),
        converged: l.converged && r.converged,
    }
}

/// Integrates `f` over `[a, b]`, bisecting panels until the refinement
/// difference drops below `tol_abs`.
#[cfg(test)]
pub(crate) fn adaptive_panel<T: QuadValue, F: FnMut(f64) -> T>(
    rule: &GaussLegendre,
    a: f64,
    b: f64,
    f: &mut F,
    tol_abs: f64,
    max_depth: usize,
) -> Estimate<T> {
    let whole = rule.integrate(a, b, f);
    adaptive_rec(rule, a, b, f, whole, tol_abs, max_depth)
}

/// Upper bound for `int_x^inf e^{-gamma (u - x0)} (u + ln 2)^{-beta} du`.
fn weight_tail_bound(gamma: f64, beta: f64, x: f64, x0: f64) -> f64 {
    let decay = (-gamma * (x - x0)).exp();
    if beta >= 0.0 {
        decay * (x + LN_2).powf(-beta) / gamma
    } else {
        let m = -beta;
        if gamma * (x + LN_2) >= 2.0 * m {
            // integration by parts gains a factor <= 1/2 per step here,
            // so the series is dominated by twice its leading term
            2.0 * decay * (x + LN_2).powf(m) / gamma
        } else {
            f64::INFINITY
        }
    }
}

/// Integrates `h(x) * e^{-gamma (x - x0)} * (x + ln 2)^{-beta}` over
/// `[x0, inf)`.
///
/// Panels double in width; the loop stops once a bound on the remaining
/// mass (weight tail times the largest `|h|` seen so far) is negligible
/// against the accumulated value.
pub(crate) fn decay_tail<T: QuadValue, F: FnMut(f64) -> T>(
    rule: &GaussLegendre,
    gamma: f64,
    beta: f64,
    x0: f64,
    mut h: F,
    rel_tol: f64,
    max_panels: usize,
) -> Estimate<T> {
    debug_assert!(gamma > 0.0);
    let h_seen = std::cell::Cell::new(0.0f64);
    let mut g = |x: f64| {
        let hv = h(x);
        let m = hv.magnitude();
        if m > h_seen.get() {
            h_seen.set(m);
        }
        hv.scale((-gamma * (x - x0)).exp() * (x + LN_2).powf(-beta))
    };

    let mut accum = T::ZERO;
    let mut converged_all = true;
    let mut start = x0;
    let mut width = (1.0 / gamma).clamp(1.0, 64.0);
    for _ in 0..max_panels {
        let end = start + width;
        let whole = rule.integrate(start, end, &mut g);
        let tol_abs = rel_tol * accum.magnitude().max(whole.magnitude()) + f64::MIN_POSITIVE;
        let est = adaptive_rec(rule, start, end, &mut g, whole, tol_abs, 32);
        accum = accum.add(est.value);
        converged_all &= est.converged;
        let wbound = weight_tail_bound(gamma, beta, end, x0);
        // While |h| has only evaluated to zero the remaining-mass product
        // says nothing: h may simply not have risen yet (high powers of t
        // underflow near x = 0). Only the weight tail itself vanishing may
        // end the loop in that state.
        let done = if h_seen.get() > 0.0 {
            wbound * h_seen.get() <= rel_tol * accum.magnitude()
        } else {
            wbound <= 1e-320
        };
        if done {
            return Estimate {
                value: accum,
                converged: converged_all,
            };
        }
        start = end;
        width *= 2.0;
    }
    Estimate {
        value: accum,
        converged: false,
    }
}

/// Integrates `f(u, 1 - u)` over `u in [0, 1)` with panels accumulating
/// dyadically toward `u = 1`.
///
/// `f` receives both `u` and `1 - u`; the second argument stays exact far
/// beyond the resolution of `1.0 - u`, which matters for endpoint weights.
pub(crate) fn radial_dyadic<T: QuadValue, F: FnMut(f64, f64) -> T>(
    rule: &GaussLegendre,
    mut f: F,
    rel_tol: f64,
    max_panels: usize,
) -> Estimate<T> {
    let mut accum = T::ZERO;
    let mut tiny_streak = 0;
    for k in 0..max_panels {
        let scale = (-(k as f64) - 1.0).exp2(); // 2^{-k-1}
                                                // panel: 1 - u in [scale, 2 scale]
        let val = rule.integrate(scale, 2.0 * scale, &mut |omu| f(1.0 - omu, omu));
        accum = accum.add(val);
        if k >= 8 {
            if val.magnitude() <= rel_tol * accum.magnitude() {
                tiny_streak += 1;
                if tiny_streak >= 2 {
                    return Estimate {
                        value: accum,
                        converged: true,
                    };
                }
            } else {
                tiny_streak = 0;
            }
        }
    }
    Estimate {
        value: accum,
        converged: false,
    }
}
