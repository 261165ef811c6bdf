//! Minimal double-double arithmetic for long multiplicative recurrences.
//!
//! Moment vectors are built by recurrences of the form
//! `m_{n+1} = m_n * a / b` with thousands of steps; plain f64 accumulates a
//! rounding error proportional to the step count, which is too much when
//! entries are compared at 1e-14 relative accuracy. Carrying a compensated
//! low-order word keeps the accumulated error at the level of a single final
//! rounding.

/// Unevaluated sum `hi + lo` with `|lo| <= ulp(hi)/2`.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Dd {
    hi: f64,
    lo: f64,
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

impl Dd {
    pub fn new(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    pub fn value(self) -> f64 {
        self.hi + self.lo
    }

    pub fn mul(self, b: f64) -> Self {
        let (p, mut e) = two_prod(self.hi, b);
        e += self.lo * b;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    pub fn div(self, b: f64) -> Self {
        let q1 = self.hi / b;
        // remainder of the leading quotient, exact via fused multiply-add
        let r = (-q1).mul_add(b, self.hi) + self.lo;
        let q2 = r / b;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo }
    }
}
