use confrac_core::calculus::{Alpha, ConformableFn, Interval, QuadratureConfig};
use confrac_core::expr::EvalEnv;
use confrac_core::family::{e_k, STANDARD_TEXTS};
use confrac_core::taylor::*;
use proptest::prelude::*;

fn al(v: f64) -> Alpha {
    Alpha::new(v).unwrap()
}

fn func(s: &str) -> ConformableFn {
    ConformableFn::parse(s).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn expansion_plus_remainder_rebuilds_f(
        idx in 0..STANDARD_TEXTS.len(),
        alpha in prop::sample::select(vec![0.25, 0.5, 1.0]),
        n in 0usize..=4,
        s in 0.5f64..3.0,
        t in 0.5f64..3.0,
    ) {
        let f = func(STANDARD_TEXTS[idx]);
        let alpha = al(alpha);
        let cfg = QuadratureConfig::default();
        let value = f.value(t, alpha).unwrap();
        let poly = taylor_poly(&f, alpha, n, s, t).unwrap();
        let rem = taylor_remainder(&f, alpha, n as i32, s, t, &cfg).unwrap();
        prop_assert!((value - poly - rem).abs() < 1e-7, "{}: {} {} {}", STANDARD_TEXTS[idx], value, poly, rem);
    }

    #[test]
    fn kernel_solves_its_initial_value_problem(
        n in 1usize..=6,
        s in 0.1f64..3.0,
        alpha in 0.05f64..=1.0,
    ) {
        let mut e = cauchy_kernel_expr(n, s).unwrap();
        let env = EvalEnv::new(s, alpha).unwrap();
        for i in 0..n {
            let v = e.eval(&env).unwrap();
            let want = if i + 1 == n { 1.0 } else { 0.0 };
            prop_assert!((v - want).abs() < 1e-12, "i = {}: {}", i, v);
            e = e.conformable_diff();
        }
        // L y = D^n y vanishes identically.
        for &t in &[0.5 * s + 0.01, s + 0.7, 2.0 * s + 1.0] {
            let v = e.eval(&EvalEnv::new(t, alpha).unwrap()).unwrap();
            prop_assert!(v.abs() < 1e-9, "D^n kernel at {} = {}", t, v);
        }
    }

    #[test]
    fn binomial_identity(
        n in 1usize..=6,
        alpha in 0.05f64..=1.0,
        t in 0.0f64..5.0,
        s in 0.0f64..5.0,
        r in 0.0f64..5.0,
    ) {
        let lhs = alpha_span(alpha, r, t).powi(n as i32) / (1..=n).product::<usize>() as f64;
        let res = binomial_identity_residual(n, al(alpha), t, s, r).unwrap();
        prop_assert!(res.abs() <= 1e-12 * (1.0 + lhs.abs()), "{}", res);
    }

    #[test]
    fn split_and_endpoint_identities(
        idx in 0..STANDARD_TEXTS.len(),
        alpha in prop::sample::select(vec![0.25, 0.5, 0.75, 1.0]),
        n in -1i32..=3,
        a in 0.1f64..2.0,
        width in 0.2f64..2.0,
        frac in 0.0f64..=1.0,
    ) {
        let f = func(STANDARD_TEXTS[idx]);
        let alpha = al(alpha);
        let win = Interval::new(a, a + width).unwrap();
        let t = a + frac * width;
        let cfg = QuadratureConfig::default();
        let r = remainder_split_residual(&f, alpha, n, win, t, &cfg).unwrap();
        prop_assert!(r.abs() < 1e-7, "split {}", r);
        for which in [Endpoint::A, Endpoint::B] {
            let e = remainder_endpoint_integral(&f, alpha, n, win, which, &cfg).unwrap();
            prop_assert!(e.residual().abs() < 1e-7, "{:?}: {}", which, e.residual());
        }
    }
}

fn alpha_span(alpha: f64, s: f64, t: f64) -> f64 {
    (t.powf(alpha) - s.powf(alpha)) / alpha
}

#[test]
fn kernel_examples() {
    for &(t, s) in &[(0.0, 3.0), (2.0, 1.0), (5.0, 5.0)] {
        assert_eq!(cauchy_kernel(1, al(0.4), t, s).unwrap(), 1.0);
    }
    assert_eq!(cauchy_kernel(3, al(0.3), 2.0, 2.0).unwrap(), 0.0);
    assert!((cauchy_kernel(3, al(0.5), 4.0, 1.0).unwrap() - 2.0).abs() < 1e-15);
    assert!(cauchy_kernel(0, al(0.5), 4.0, 1.0).is_err());
}

#[test]
fn polynomial_examples() {
    let f = func("sin(t) + t^alpha");
    assert_eq!(
        taylor_poly(&f, al(0.5), 3, 1.3, 1.3).unwrap(),
        f.value(1.3, al(0.5)).unwrap()
    );
    let e2 = e_k(2);
    for &(s, t) in &[(0.5, 2.5), (3.0, 1.0)] {
        let p = taylor_poly(&e2, al(0.5), 2, s, t).unwrap();
        assert!((p - e2.value(t, al(0.5)).unwrap()).abs() < 1e-12);
    }
    let p = taylor_poly(&func("exp(t)"), Alpha::ONE, 4, 0.0, 1.0).unwrap();
    assert!((p - 65.0 / 24.0).abs() < 1e-14);
    let exp = TaylorExpansion::new(&func("exp(t)"), Alpha::ONE, 4, 0.0).unwrap();
    assert_eq!(exp.degree(), 4);
    assert_eq!(exp.coefficients().len(), 5);
    assert_eq!(exp.eval(0.0), 1.0);
}

#[test]
fn remainder_examples() {
    let cfg = QuadratureConfig::default();
    let f = func("cos(t)*t");
    assert_eq!(
        taylor_remainder(&f, al(0.5), -1, 9.0, 1.5, &cfg).unwrap(),
        f.value(1.5, al(0.5)).unwrap()
    );
    for n in 0..4 {
        let r = taylor_remainder(&e_k(n), al(0.5), n as i32, 0.7, 2.9, &cfg).unwrap();
        assert!(r.abs() < 1e-14, "{r}");
    }
    let g = func("exp(t^alpha/alpha)");
    let r = remainder_split_residual(&g, al(0.5), 1, Interval::new(1.0, 2.0).unwrap(), 1.5, &cfg)
        .unwrap();
    assert!(r.abs() < 1e-7);
    let r = remainder_split_residual(&g, al(0.5), -1, Interval::new(1.0, 2.0).unwrap(), 1.5, &cfg)
        .unwrap();
    assert!(r.abs() < 1e-10);
    let sin = func("sin(t)");
    for which in [Endpoint::A, Endpoint::B] {
        let e = remainder_endpoint_integral(
            &sin,
            Alpha::ONE,
            0,
            Interval::new(0.0, 1.0).unwrap(),
            which,
            &cfg,
        )
        .unwrap();
        assert!(e.residual().abs() < 1e-9);
    }
    // n = -1: both sides are the plain integral.
    let e = remainder_endpoint_integral(
        &sin,
        al(0.5),
        -1,
        Interval::new(0.0, 1.0).unwrap(),
        Endpoint::B,
        &cfg,
    )
    .unwrap();
    let plain = confrac_core::calculus::frac_integral(&sin, al(0.5), 0.0, 1.0, &cfg).unwrap();
    assert!((e.value() - plain).abs() < 1e-10);
}

#[test]
fn binomial_examples() {
    assert_eq!(
        binomial_identity_residual(4, al(0.3), 3.0, 1.5, 1.5).unwrap(),
        0.0
    );
    assert_eq!(
        binomial_identity_residual(1, al(0.3), 3.0, 1.5, 0.2).unwrap(),
        0.0
    );
    assert!(
        binomial_identity_residual(3, al(0.5), 4.0, 2.0, 1.0)
            .unwrap()
            .abs()
            < 1e-12
    );
}
