//! Cross-checks of the library's quadrature paths against an independent
//! adaptive-Simpson oracle working in the original `t` variable, plus the
//! growth and containment bounds that the norm machinery must satisfy.

mod common;

use common::{adaptive_simpson, order_for, rel_err};
use num_complex::Complex64;

use hilbertmu::measures::{DensityTerm, MeasureSpec};
use hilbertmu::operator::QuadConfig;
use hilbertmu::spaces::{self, GridSpec, PowerSeries};

#[test]
fn tail_mass_log_density_vs_simpson() {
    let m = MeasureSpec::power_log_density(1.0, 1.0, 2.0).unwrap();
    for t0 in [0.0, 0.5, 0.9, 0.999] {
        // integrand vanishes like 1/log^2 toward u = 1; cut at 1 - 1e-13
        // and bound the remainder by the cut width
        let oracle = adaptive_simpson(
            &|u: f64| (2.0 / (1.0 - u)).ln().powi(-2),
            t0,
            1.0 - 1e-13,
            1e-13,
        );
        assert!(
            rel_err(m.tail_mass(t0), oracle) < 1e-8,
            "t0={t0}: got {} want {oracle}",
            m.tail_mass(t0)
        );
    }
}

#[test]
fn log_weighted_tail_vs_simpson() {
    let nu = MeasureSpec::lebesgue().log_weighted();
    for t0 in [0.0, 0.5, 0.9, 0.99] {
        let oracle = adaptive_simpson(&|u: f64| (2.0 / (1.0 - u)).ln(), t0, 1.0 - 1e-14, 1e-13);
        assert!(
            rel_err(nu.tail_mass(t0), oracle) < 1e-8,
            "t0={t0}: got {} want {oracle}",
            nu.tail_mass(t0)
        );
    }
}

#[test]
fn power_log_moments_vs_simpson() {
    let m = MeasureSpec::new(
        "powlog",
        vec![],
        vec![DensityTerm {
            c: 1.3,
            gamma: 1.5,
            beta: 1.5,
        }],
    )
    .unwrap();
    for n in [0usize, 3, 10] {
        let oracle = adaptive_simpson(
            &|u: f64| {
                1.3 * u.powi(n as i32) * (1.0 - u).powf(0.5) * (2.0 / (1.0 - u)).ln().powf(-1.5)
            },
            0.0,
            1.0 - 1e-13,
            1e-13,
        );
        assert!(
            rel_err(m.moment(n), oracle) < 1e-9,
            "n={n}: got {} want {oracle}",
            m.moment(n)
        );
    }
}

#[test]
fn high_moments_of_log_density_vs_simpson() {
    // t^n underflows to zero on the first tail panels once n is large; the
    // integrator must keep going until the mass near t = 1 is found
    let m = MeasureSpec::power_log_density(1.0, 1.0, 1.0).unwrap();
    for n in [512usize, 2048] {
        let got = m.moment(n);
        assert!(got > 0.0, "n={n}: moment collapsed to {got}");
        let oracle = adaptive_simpson(
            &|u: f64| u.powi(n as i32) / (2.0 / (1.0 - u)).ln(),
            0.0,
            1.0 - 1e-13,
            1e-15,
        );
        assert!(
            rel_err(got, oracle) < 1e-8,
            "n={n}: got {got} want {oracle}"
        );
    }
}

#[test]
fn beta_moment_vs_simpson() {
    let m = MeasureSpec::power_density(2.0, 2.0).unwrap();
    for n in [0usize, 2, 7, 40] {
        let oracle = adaptive_simpson(
            &|u: f64| 2.0 * u.powi(n as i32) * (1.0 - u),
            0.0,
            1.0,
            1e-14,
        );
        assert!(rel_err(m.moment(n), oracle) < 1e-10, "n={n}");
    }
}

#[test]
fn measure_integral_of_kernel_vs_simpson() {
    // same integrand the operator's integral route uses, real z
    let m = MeasureSpec::power_density(3.0, 3.0).unwrap();
    let z = 0.6;
    let alpha = 1.7;
    let quad = QuadConfig::default();
    let got = m
        .integrate_complex(quad.tol, quad.max_panels, |t| {
            Complex64::new(1.0 - z * t, 0.0).powf(-alpha)
        })
        .unwrap();
    let oracle = adaptive_simpson(
        &|u: f64| 3.0 * (1.0 - u).powi(2) * (1.0 - z * u).powf(-alpha),
        0.0,
        1.0,
        1e-13,
    );
    assert!(rel_err(got.re, oracle) < 1e-10);
    assert!(got.im.abs() < 1e-14);
}

#[test]
fn hardy_growth_bound_over_corpus() {
    // |f(z)| (1-|z|)^{1/p} <= C ||f||_{H^p} with one corpus-wide constant
    let corpus: Vec<(f64, PowerSeries)> = vec![
        (
            1.0,
            spaces::extremal_hardy(0.5, 1.0, order_for(0.5)).unwrap(),
        ),
        (
            1.0,
            spaces::extremal_hardy(0.9, 1.0, order_for(0.9)).unwrap(),
        ),
        (
            2.0,
            spaces::extremal_hardy(0.9, 2.0, order_for(0.9)).unwrap(),
        ),
        (
            2.0,
            spaces::extremal_hardy(0.99, 2.0, order_for(0.99)).unwrap(),
        ),
        (1.0, PowerSeries::from_real("ones", &vec![1.0; 64]).unwrap()),
    ];
    const C: f64 = 3.0;
    for (p, f) in &corpus {
        let grid = GridSpec::for_order(f.order());
        let norm = spaces::hardy_norm(f, *p, &grid).unwrap();
        let mut worst: f64 = 0.0;
        for &r in &grid.radii {
            for k in 0..64 {
                let theta = 2.0 * std::f64::consts::PI * k as f64 / 64.0;
                let v = f.eval(Complex64::from_polar(r, theta)).unwrap().norm();
                worst = worst.max(v * (1.0 - r).powf(1.0 / p));
            }
        }
        assert!(
            worst <= C * norm,
            "{}: growth {worst} vs C*norm {}",
            f.label(),
            C * norm
        );
    }
}

#[test]
fn bloch_growth_bound_over_corpus() {
    // |g(z)| <= C ||g||_B log(2/(1-|z|))
    const C: f64 = 3.0;
    for a in [0.3, 0.9, 0.99] {
        let g = spaces::extremal_log(a, order_for(a)).unwrap();
        let grid = GridSpec::for_order(g.order());
        let norm = spaces::bloch_norm(&g, &grid).unwrap();
        for &r in &grid.radii {
            for k in 0..32 {
                let theta = 2.0 * std::f64::consts::PI * k as f64 / 32.0;
                let v = g.eval(Complex64::from_polar(r, theta)).unwrap().norm();
                assert!(v <= C * norm * (2.0 / (1.0 - r)).ln(), "a={a} r={r} v={v}");
            }
        }
    }
}

#[test]
fn bergman_containment_in_weight() {
    // heavier weight means smaller norm
    let corpus = vec![
        PowerSeries::identity(),
        PowerSeries::monomial(4),
        spaces::extremal_hardy(0.9, 2.0, order_for(0.9)).unwrap(),
        PowerSeries::from_real("mix", &[0.3, -0.7, 0.0, 1.1, 0.25]).unwrap(),
    ];
    for f in &corpus {
        let grid = GridSpec::for_order(f.order());
        for (lo, hi) in [(0.0, 0.5), (0.5, 2.0), (0.0, 2.5)] {
            let big = spaces::bergman_norm(f, 2.0, lo, &grid).unwrap();
            let small = spaces::bergman_norm(f, 2.0, hi, &grid).unwrap();
            assert!(
                small <= big * (1.0 + 1e-9),
                "{}: beta {lo}->{hi}: {big} -> {small}",
                f.label()
            );
        }
    }
}

#[test]
fn hankel_image_matches_taylor_coefficients_of_integral_route() {
    // extract the Taylor coefficients of z -> int f(t)(1-tz)^{-alpha} dmu
    // by a hand-rolled DFT over a circle of radius 1/2 and compare them
    // with the matrix image
    use hilbertmu::operator::{self, OperatorConfig};

    let m = MeasureSpec::power_density(2.0, 2.0).unwrap();
    let alpha = 2.0;
    let f = spaces::extremal_hardy(0.5, 1.0, 64).unwrap();
    let cfg = OperatorConfig::new(alpha)
        .unwrap()
        .with_truncation(128)
        .unwrap();
    let image = operator::apply_hankel(&operator::hankel_matrix(&m, &cfg), &f).unwrap();

    let radius = 0.5;
    let samples = 64usize;
    let values: Vec<Complex64> = (0..samples)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / samples as f64;
            operator::apply_integral(&m, alpha, &f, Complex64::from_polar(radius, theta), &cfg.quad)
                .unwrap()
        })
        .collect();
    for n in 0..=12usize {
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, v) in values.iter().enumerate() {
            let theta = -2.0 * std::f64::consts::PI * (n * k) as f64 / samples as f64;
            acc += v * Complex64::from_polar(1.0, theta);
        }
        let coeff = acc / samples as f64 / radius.powi(n as i32);
        let want = image.coeffs()[n];
        assert!(
            (coeff - want).norm() <= 1e-8 * want.norm().max(1.0),
            "n={n}: dft {coeff} vs matrix {want}"
        );
    }
}

#[test]
fn equivalence_residual_nonincreasing_when_order_doubles() {
    use hilbertmu::operator::{self, OperatorConfig};

    let measures = [
        MeasureSpec::dirac(0.5, 1.0).unwrap(),
        MeasureSpec::power_density(2.0, 2.0).unwrap(),
        MeasureSpec::power_density(3.0, 3.0).unwrap(),
    ];
    let functions = [
        PowerSeries::constant(1.0),
        spaces::extremal_hardy(0.5, 1.0, 64).unwrap(),
    ];
    let grid = operator::default_z_grid();
    for m in &measures {
        for &alpha in &[1.0, 2.0] {
            for f in &functions {
                let res_512 = operator::equivalence_residual(
                    m,
                    &OperatorConfig::new(alpha).unwrap().with_truncation(512).unwrap(),
                    f,
                    &grid,
                    None,
                )
                .unwrap()
                .residual;
                let res_1024 = operator::equivalence_residual(
                    m,
                    &OperatorConfig::new(alpha).unwrap().with_truncation(1024).unwrap(),
                    f,
                    &grid,
                    None,
                )
                .unwrap()
                .residual;
                assert!(
                    res_1024 <= res_512,
                    "{} alpha={alpha} f={}: {res_512:e} -> {res_1024:e}",
                    m.label(),
                    f.label()
                );
            }
        }
    }
}

#[test]
fn parseval_identity_on_polynomials() {
    // deterministic pseudo-random coefficients
    let mut state = 0x9e3779b97f4a7c15u64;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        (state >> 11) as f64 / (1u64 << 53) as f64 - 0.5
    };
    for order in [16usize, 127, 512] {
        let coeffs: Vec<Complex64> = (0..=order)
            .map(|_| Complex64::new(next(), next()))
            .collect();
        let sum: f64 = coeffs.iter().map(|c| c.norm_sqr()).sum();
        let f = PowerSeries::new(format!("rand{order}"), coeffs).unwrap();
        let grid = GridSpec::for_order(order);
        let norm = spaces::hardy_norm(&f, 2.0, &grid).unwrap();
        assert!(
            rel_err(norm, sum.sqrt()) < 1e-10,
            "order {order}: {norm} vs {}",
            sum.sqrt()
        );
    }
}
