mod common;

use common::{any_expr, bx, safe_expr};
use confrac_core::expr::{parse, EvalEnv, Expr};
use proptest::prelude::*;

fn eval(e: &Expr, t: f64, alpha: f64) -> f64 {
    e.eval(&EvalEnv::new(t, alpha).unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn printed_text_parses_back_to_the_same_tree(e in any_expr()) {
        let text = e.to_text();
        let back = parse(&text).unwrap();
        prop_assert_eq!(back, e, "text: {}", text);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn symbolic_derivative_matches_central_difference(
        e in safe_expr(),
        t in 0.5f64..3.0,
        alpha in 0.05f64..=1.0,
    ) {
        let h = 1e-5 * t.abs().max(1.0);
        let fd = (eval(&e, t + h, alpha) - eval(&e, t - h, alpha)) / (2.0 * h);
        let exact = eval(&e.diff(), t, alpha);
        let err = (exact - fd).abs() / (1.0 + exact.abs());
        prop_assert!(err < 1e-6, "{}: exact {} fd {} err {}", e, exact, fd, err);
    }

    #[test]
    fn differentiation_is_linear(
        e1 in safe_expr(),
        e2 in safe_expr(),
        a in -3.0f64..3.0,
        b in -3.0f64..3.0,
        t in 0.5f64..3.0,
        alpha in 0.05f64..=1.0,
    ) {
        let combo = Expr::Add(
            bx(Expr::Mul(bx(Expr::Num(a)), bx(e1.clone()))),
            bx(Expr::Mul(bx(Expr::Num(b)), bx(e2.clone()))),
        );
        let lhs = eval(&combo.diff(), t, alpha);
        let rhs = a * eval(&e1.diff(), t, alpha) + b * eval(&e2.diff(), t, alpha);
        prop_assert!((lhs - rhs).abs() <= 1e-12 * (1.0 + lhs.abs().max(rhs.abs())), "{} vs {}", lhs, rhs);
    }
}

#[test]
fn documented_derivatives() {
    let check = |src: &str, t: f64, alpha: f64, want: f64| {
        let d = parse(src).unwrap().diff();
        let got = eval(&d, t, alpha);
        assert!(
            (got - want).abs() < 1e-13 * (1.0 + want.abs()),
            "{src}: {got} vs {want}"
        );
    };
    check("sin(t)", 0.7, 1.0, 0.7f64.cos());
    check("t*exp(t)", 1.0, 1.0, 2.0 * 1f64.exp());
    check("t^alpha", 2.0, 0.5, 0.5 * 2f64.powf(-0.5));
}

#[test]
fn evaluation_examples() {
    assert_eq!(eval(&parse("t^2").unwrap(), 3.0, 1.0), 9.0);
    assert!((eval(&parse("t^alpha/alpha").unwrap(), 4.0, 0.5) - 4.0).abs() < 1e-15);
    let inv = parse("1/t").unwrap();
    assert!(matches!(
        inv.eval(&EvalEnv::new(0.0, 1.0).unwrap()),
        Err(confrac_core::Error::Domain(_))
    ));
}
