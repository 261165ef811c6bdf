//! Property tests for the structural invariants: moment/tail monotonicity,
//! additivity, norm homogeneity, Hankel row structure, and flag exclusivity.

mod common;

use num_complex::Complex64;
use proptest::prelude::*;

use hilbertmu::measures::{DensityTerm, MeasureSpec};
use hilbertmu::operator::{self, OperatorConfig};
use hilbertmu::spaces::{self, GridSpec, PowerSeries};

fn arb_density() -> impl Strategy<Value = DensityTerm> {
    (
        0.05..3.0f64,
        0.2..4.0f64,
        prop_oneof![Just(0.0f64), -1.5..2.5f64],
    )
        .prop_map(|(c, gamma, beta)| DensityTerm { c, gamma, beta })
}

fn arb_measure() -> impl Strategy<Value = MeasureSpec> {
    (
        prop::collection::vec((0.0..0.95f64, 0.01..2.0f64), 0..3),
        prop::collection::vec(arb_density(), 1..3),
    )
        .prop_map(|(atoms, density)| MeasureSpec::new("prop", atoms, density).unwrap())
}

fn arb_series() -> impl Strategy<Value = PowerSeries> {
    prop::collection::vec((-1.0..1.0f64, -1.0..1.0f64), 1..24).prop_map(|pairs| {
        PowerSeries::new(
            "prop",
            pairs
                .iter()
                .map(|&(re, im)| Complex64::new(re, im))
                .collect(),
        )
        .unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn moments_nonincreasing(m in arb_measure()) {
        let v = m.moments_upto(24);
        for n in 0..24 {
            prop_assert!(v[n + 1] <= v[n] * (1.0 + 1e-12));
        }
    }

    #[test]
    fn tail_nonincreasing(m in arb_measure()) {
        let ts = [0.0, 0.1, 0.35, 0.6, 0.85, 0.97];
        for w in ts.windows(2) {
            prop_assert!(m.tail_mass(w[1]) <= m.tail_mass(w[0]) * (1.0 + 1e-12));
        }
    }

    #[test]
    fn measure_additivity(a in arb_measure(), b in arb_measure()) {
        let combined = MeasureSpec::new(
            "combined",
            a.atoms().iter().chain(b.atoms()).copied().collect(),
            a.density().iter().chain(b.density()).copied().collect(),
        ).unwrap();
        for n in [0usize, 1, 7] {
            let want = a.moment(n) + b.moment(n);
            prop_assert!((combined.moment(n) - want).abs() <= 1e-12 * want.abs().max(1.0));
        }
        for t in [0.0, 0.5, 0.9] {
            let want = a.tail_mass(t) + b.tail_mass(t);
            prop_assert!((combined.tail_mass(t) - want).abs() <= 1e-12 * want.abs().max(1.0));
        }
    }

    #[test]
    fn carleson_flags_and_argmax(m in arb_measure(), a in 0.0..2.0f64, s in 0.1..3.0f64) {
        let rep = m.carleson_report(a, s, 24);
        prop_assert!(rep.quotients.iter().all(|&q| q >= 0.0));
        let max = rep.quotients.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        prop_assert_eq!(rep.constant, max);
        // smallest maximizer
        let first = rep
            .grid
            .iter()
            .zip(&rep.quotients)
            .find(|(_, &q)| q == max)
            .map(|(t, _)| *t)
            .unwrap();
        prop_assert_eq!(rep.argmax_t, first);
        prop_assert!(!(rep.divergent && rep.vanishing));
    }

    #[test]
    fn hankel_rows_decay_and_factor(m in arb_measure(), alpha in 0.2..4.0f64) {
        let cfg = OperatorConfig::new(alpha).unwrap().with_truncation(12).unwrap();
        let h = operator::hankel_matrix(&m, &cfg);
        for n in 0..=12usize {
            for k in 0..12usize {
                prop_assert!(h.entry(n, k + 1) <= h.entry(n, k) * (1.0 + 1e-12));
                // entries factor through the shared moment vector exactly
                prop_assert_eq!(h.entry(n, k), h.row_weights()[n] * h.moments()[n + k]);
            }
        }
    }

    #[test]
    fn hankel_application_preserves_positivity(
        m in arb_measure(),
        alpha in 0.2..4.0f64,
        coeffs in prop::collection::vec(0.0..2.0f64, 1..10),
    ) {
        let cfg = OperatorConfig::new(alpha).unwrap().with_truncation(16).unwrap();
        let h = operator::hankel_matrix(&m, &cfg);
        let f = PowerSeries::from_real("pos", &coeffs).unwrap();
        let image = operator::apply_hankel(&h, &f).unwrap();
        prop_assert!(image.coeffs().iter().all(|c| c.re >= 0.0 && c.im == 0.0));
    }

    #[test]
    fn norm_homogeneity(f in arb_series(), c in 0.1..20.0f64) {
        let grid = GridSpec::for_order(f.order());
        let scaled = f.scaled(Complex64::new(c, 0.0));
        for p in [0.7, 1.0, 2.0] {
            let lhs = spaces::hardy_norm(&scaled, p, &grid).unwrap();
            let rhs = c * spaces::hardy_norm(&f, p, &grid).unwrap();
            prop_assert!((lhs - rhs).abs() <= 1e-12 * rhs.abs().max(1e-12));
        }
        let lhs = spaces::bloch_norm(&scaled, &grid).unwrap();
        let rhs = c * spaces::bloch_norm(&f, &grid).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-12 * rhs.abs().max(1e-12));
    }

    #[test]
    fn hardy_parseval_on_random_series(f in arb_series()) {
        let grid = GridSpec::for_order(f.order());
        let norm = spaces::hardy_norm(&f, 2.0, &grid).unwrap();
        let sum: f64 = f.coeffs().iter().map(|c| c.norm_sqr()).sum();
        prop_assert!((norm - sum.sqrt()).abs() <= 1e-10 * sum.sqrt().max(1e-12));
    }

    #[test]
    fn measure_json_round_trip(m in arb_measure()) {
        let back = MeasureSpec::from_json(&m.to_json()).unwrap();
        for n in [0usize, 1, 5] {
            let want = m.moment(n);
            prop_assert!((back.moment(n) - want).abs() <= 1e-14 * want.abs().max(1e-300));
        }
    }
}
