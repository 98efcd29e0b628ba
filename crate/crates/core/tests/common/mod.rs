use confrac_core::expr::{Expr, Func};
use proptest::prelude::*;

pub fn bx(e: Expr) -> Box<Expr> {
    Box::new(e)
}

pub fn any_expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        Just(Expr::T),
        Just(Expr::Alpha),
        Just(Expr::Pi),
        Just(Expr::E),
        (0u32..1000).prop_map(|k| Expr::Num(k as f64)),
        (0.0f64..1e6).prop_map(Expr::Num),
    ];
    leaf.prop_recursive(5, 40, 2, |inner| {
        let func = prop::sample::select(Func::ALL.to_vec());
        prop_oneof![
            inner.clone().prop_map(|a| Expr::Neg(bx(a))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Add(bx(a), bx(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Sub(bx(a), bx(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Mul(bx(a), bx(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Div(bx(a), bx(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Pow(bx(a), bx(b))),
            (func, inner).prop_map(|(f, a)| Expr::Call(f, bx(a))),
        ]
    })
}

fn one_plus_square(a: Expr) -> Expr {
    Expr::Add(bx(Expr::Num(1.0)), bx(Expr::Mul(bx(a.clone()), bx(a))))
}

// Expressions that are smooth and finite for t in [0.5, 3], alpha in (0, 1].
pub fn safe_expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        Just(Expr::T),
        Just(Expr::Alpha),
        Just(Expr::Pow(bx(Expr::T), bx(Expr::Alpha))),
        (1u32..12).prop_map(|k| Expr::Num(k as f64 / 4.0)),
    ];
    leaf.prop_recursive(3, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Add(bx(a), bx(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Sub(bx(a), bx(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Mul(bx(a), bx(b))),
            (inner.clone(), inner.clone())
                .prop_map(|(a, b)| Expr::Div(bx(a), bx(one_plus_square(b)))),
            (inner.clone(), 2u32..4).prop_map(|(a, k)| Expr::Pow(bx(a), bx(Expr::Num(k as f64)))),
            inner.clone().prop_map(|a| Expr::Call(Func::Sin, bx(a))),
            inner.clone().prop_map(|a| Expr::Call(Func::Cos, bx(a))),
            inner.clone().prop_map(|a| Expr::Call(
                Func::Exp,
                bx(Expr::Div(bx(a.clone()), bx(one_plus_square(a))))
            )),
            inner
                .clone()
                .prop_map(|a| Expr::Call(Func::Ln, bx(one_plus_square(a)))),
            inner.prop_map(|a| Expr::Call(Func::Sqrt, bx(one_plus_square(a)))),
        ]
    })
}
