use confrac_core::calculus::{
    frac_deriv, frac_deriv_n, frac_integral, weighted_integral, Alpha, ConformableFn,
    QuadratureConfig, QuadratureMode,
};
use confrac_core::family::{e_k, STANDARD_TEXTS};
use confrac_core::Error;
use proptest::prelude::*;

fn al(v: f64) -> Alpha {
    Alpha::new(v).unwrap()
}

fn func(s: &str) -> ConformableFn {
    ConformableFn::parse(s).unwrap()
}

fn alphas() -> impl Strategy<Value = f64> {
    prop::sample::select(vec![0.25, 0.5, 0.75, 1.0])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn integral_of_derivative_is_the_increment(
        idx in 0..STANDARD_TEXTS.len(),
        alpha in alphas(),
        a in 0.0f64..4.5,
        width in 0.05f64..3.0,
        from_zero in any::<bool>(),
    ) {
        let f = func(STANDARD_TEXTS[idx]);
        let alpha = al(alpha);
        let a = if from_zero { 0.0 } else { a };
        let b = (a + width).min(5.0);
        let cfg = QuadratureConfig::default();
        let lhs = weighted_integral(|t| frac_deriv(&f, alpha, t), alpha, a, b, &cfg).unwrap();
        let rhs = f.value(b, alpha).unwrap() - f.value(a, alpha).unwrap();
        let scale = 1.0 + f.value(b, alpha).unwrap().abs().max(f.value(a, alpha).unwrap().abs());
        prop_assert!((lhs - rhs).abs() < 1e-9 * scale, "{} on [{}, {}]: {} vs {}", STANDARD_TEXTS[idx], a, b, lhs, rhs);
    }

    #[test]
    fn quadrature_modes_agree_away_from_zero(
        idx in 0..STANDARD_TEXTS.len(),
        alpha in 0.05f64..=1.0,
        a in 0.1f64..4.0,
        width in 0.05f64..3.0,
    ) {
        let f = func(STANDARD_TEXTS[idx]);
        let alpha = al(alpha);
        let b = a + width;
        let t = QuadratureConfig::default();
        let d = t.with_mode(QuadratureMode::Direct);
        let x = frac_integral(&f, alpha, a, b, &t).unwrap();
        let y = frac_integral(&f, alpha, a, b, &d).unwrap();
        prop_assert!((x - y).abs() <= 2e-10 * (1.0 + x.abs()), "{} vs {}", x, y);
    }

    #[test]
    fn operators_are_linear(
        i in 0..STANDARD_TEXTS.len(),
        j in 0..STANDARD_TEXTS.len(),
        c1 in -3.0f64..3.0,
        c2 in -3.0f64..3.0,
        alpha in 0.05f64..=1.0,
        t in 0.2f64..3.0,
    ) {
        let (f, g) = (func(STANDARD_TEXTS[i]), func(STANDARD_TEXTS[j]));
        let combo = func(&format!("{c1}*({}) + {c2}*({})", STANDARD_TEXTS[i], STANDARD_TEXTS[j]));
        let alpha = al(alpha);
        let lhs = frac_deriv(&combo, alpha, t).unwrap();
        let rhs = c1 * frac_deriv(&f, alpha, t).unwrap() + c2 * frac_deriv(&g, alpha, t).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-12 * (1.0 + lhs.abs()));
        let cfg = QuadratureConfig::default();
        let lhs = frac_integral(&combo, alpha, 0.5, t + 0.5, &cfg).unwrap();
        let rhs = c1 * frac_integral(&f, alpha, 0.5, t + 0.5, &cfg).unwrap()
            + c2 * frac_integral(&g, alpha, 0.5, t + 0.5, &cfg).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-12 * (1.0 + lhs.abs()));
    }
}

#[test]
fn weight_is_nonincreasing() {
    for &alpha in &[0.1, 0.25, 0.5, 0.9, 1.0] {
        let w: Vec<f64> = (1..=500)
            .map(|i| (i as f64 * 0.01).powf(alpha - 1.0))
            .collect();
        assert!(w.windows(2).all(|p| p[1] <= p[0]));
    }
}

#[test]
fn derivative_examples() {
    assert!((frac_deriv(&func("t"), al(0.5), 4.0).unwrap() - 2.0).abs() < 1e-14);
    for &a in &[0.2, 0.5, 1.0] {
        for &t in &[0.3, 1.0, 7.0] {
            let v = frac_deriv(&func("t^alpha/alpha"), al(a), t).unwrap();
            assert!((v - 1.0).abs() < 1e-14);
        }
    }
    let f = func("sin(3*t)");
    assert!((frac_deriv(&f, Alpha::ONE, 0.4).unwrap() - 3.0 * 1.2f64.cos()).abs() < 1e-14);
    for k in 0..6 {
        let v = frac_deriv_n(&e_k(k), al(0.5), k, 2.3).unwrap();
        assert!((v - 1.0).abs() < 1e-12, "E_{k}: {v}");
    }
    let g = func("exp(t^alpha/alpha)");
    for n in 0..5 {
        let v = frac_deriv_n(&g, al(0.5), n, 1.0).unwrap();
        assert!((v - 2f64.exp()).abs() < 1e-12);
    }
    assert_eq!(
        frac_deriv_n(&f, al(0.3), 0, 1.1).unwrap(),
        f.value(1.1, al(0.3)).unwrap()
    );
}

#[test]
fn derivative_at_zero_is_the_right_limit() {
    // D_0.5 of t^0.5 is 0.5 everywhere, including the limit at 0.
    let v = frac_deriv(&func("t^0.5"), al(0.5), 0.0).unwrap();
    assert!((v - 0.5).abs() < 1e-8);
    // D_0.5 sin(t) = t^0.5 cos(t) -> 0.
    assert!(frac_deriv(&func("sin(t)"), al(0.5), 0.0).unwrap().abs() < 1e-8);
    // D_1 of t^0.5 blows up at 0.
    assert!(matches!(
        frac_deriv(&func("t^0.5"), Alpha::ONE, 0.0),
        Err(Error::LimitDiverged) | Err(Error::Domain(_))
    ));
    assert!(matches!(
        frac_deriv(&func("t"), al(0.5), -1.0),
        Err(Error::NegativePoint(_))
    ));
}

#[test]
fn integral_examples() {
    let cfg = QuadratureConfig::default();
    let one = ConformableFn::constant(1.0);
    assert!((frac_integral(&one, al(0.5), 0.0, 1.0, &cfg).unwrap() - 2.0).abs() < 1e-12);
    assert!((frac_integral(&func("t"), Alpha::ONE, 0.0, 1.0, &cfg).unwrap() - 0.5).abs() < 1e-14);
    for &(a, b, alpha) in &[(0.0, 3.0, 0.3), (1.0, 4.0, 0.5), (0.5, 0.7, 0.9)] {
        let want = (f64::powf(b, alpha) - f64::powf(a, alpha)) / alpha;
        let got = frac_integral(&one, al(alpha), a, b, &cfg).unwrap();
        assert!((got - want).abs() < 1e-12);
        let back = frac_integral(&one, al(alpha), b, a, &cfg).unwrap();
        assert_eq!(back, -got);
    }
    assert_eq!(
        frac_integral(&func("exp(t)"), al(0.5), 2.0, 2.0, &cfg).unwrap(),
        0.0
    );
}

#[test]
fn closure_without_derivatives_uses_differences() {
    let f = ConformableFn::from_fn(|t: f64| t.sin());
    let v = frac_deriv(&f, al(0.5), 1.2).unwrap();
    let want = 1.2f64.sqrt() * 1.2f64.cos();
    assert!((v - want).abs() < 1e-8);
    assert!(matches!(
        frac_deriv_n(&f, al(0.5), 4, 1.2),
        Err(Error::InsufficientSmoothness { .. })
    ));
}
