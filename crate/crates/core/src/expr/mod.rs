//! A small expression language for real functions of `t`.
//!
//! Expressions are parsed from text, printed back, evaluated in IEEE double
//! precision and differentiated symbolically. The reserved identifier
//! `alpha` is a free parameter bound at evaluation time, so one expression
//! can serve a whole sweep over the fractional order.
//!
//! ```
//! use confrac_core::expr::{EvalEnv, Expr};
//!
//! let e: Expr = "t^alpha/alpha".parse().unwrap();
//! let v = e.eval(&EvalEnv::new(4.0, 0.5).unwrap()).unwrap();
//! assert!((v - 4.0).abs() < 1e-15);
//! ```

mod diff;
mod eval;
mod parse;
mod print;

pub use eval::{EvalEnv, Program};
pub use parse::parse;

use std::fmt;

/// Built-in unary functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Func {
    Sin,
    Cos,
    Exp,
    Ln,
    Sqrt,
    Abs,
    /// Sign function with `sgn(0) = 0`; appears as the derivative of `abs`.
    Sgn,
}

impl Func {
    pub const ALL: [Func; 7] = [
        Func::Sin,
        Func::Cos,
        Func::Exp,
        Func::Ln,
        Func::Sqrt,
        Func::Abs,
        Func::Sgn,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Exp => "exp",
            Func::Ln => "ln",
            Func::Sqrt => "sqrt",
            Func::Abs => "abs",
            Func::Sgn => "sgn",
        }
    }

    pub fn from_name(name: &str) -> Option<Func> {
        Func::ALL.iter().copied().find(|f| f.name() == name)
    }
}

impl fmt::Display for Func {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Abstract syntax tree of a univariate expression in `t`.
///
/// Binary nodes own exactly two children and calls exactly one argument,
/// so well-arity holds by construction.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(f64),
    /// The independent variable.
    T,
    /// The fractional order, supplied by [`EvalEnv`].
    Alpha,
    Pi,
    /// Euler's number.
    E,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Box<Expr>),
    Call(Func, Box<Expr>),
}

impl std::str::FromStr for Expr {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

// Folding constructors used when building derivatives. The parser never
// calls these, so parsed trees keep exactly the shape of their source text.
impl Expr {
    pub fn num(v: f64) -> Expr {
        Expr::Num(v)
    }

    fn as_num(&self) -> Option<f64> {
        match self {
            Expr::Num(v) => Some(*v),
            _ => None,
        }
    }

    fn is_num(&self, v: f64) -> bool {
        self.as_num() == Some(v)
    }

    fn folded(v: f64) -> Option<Expr> {
        v.is_finite().then_some(Expr::Num(v))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(a: Expr) -> Expr {
        match a {
            Expr::Num(v) => Expr::Num(-v),
            Expr::Neg(inner) => *inner,
            other => Expr::Neg(Box::new(other)),
        }
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(a: Expr, b: Expr) -> Expr {
        if let (Some(x), Some(y)) = (a.as_num(), b.as_num()) {
            if let Some(e) = Expr::folded(x + y) {
                return e;
            }
        }
        if a.is_num(0.0) {
            return b;
        }
        if b.is_num(0.0) {
            return a;
        }
        if let Expr::Neg(inner) = b {
            return Expr::sub(a, *inner);
        }
        Expr::Add(Box::new(a), Box::new(b))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn sub(a: Expr, b: Expr) -> Expr {
        if let (Some(x), Some(y)) = (a.as_num(), b.as_num()) {
            if let Some(e) = Expr::folded(x - y) {
                return e;
            }
        }
        if b.is_num(0.0) {
            return a;
        }
        if a.is_num(0.0) {
            return Expr::neg(b);
        }
        Expr::Sub(Box::new(a), Box::new(b))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(a: Expr, b: Expr) -> Expr {
        if let (Some(x), Some(y)) = (a.as_num(), b.as_num()) {
            if let Some(e) = Expr::folded(x * y) {
                return e;
            }
        }
        if a.is_num(0.0) || b.is_num(0.0) {
            return Expr::Num(0.0);
        }
        if a.is_num(1.0) {
            return b;
        }
        if b.is_num(1.0) {
            return a;
        }
        if a.is_num(-1.0) {
            return Expr::neg(b);
        }
        if b.is_num(-1.0) {
            return Expr::neg(a);
        }
        Expr::Mul(Box::new(a), Box::new(b))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn div(a: Expr, b: Expr) -> Expr {
        if let (Some(x), Some(y)) = (a.as_num(), b.as_num()) {
            if y != 0.0 {
                if let Some(e) = Expr::folded(x / y) {
                    return e;
                }
            }
        }
        if a.is_num(0.0) {
            return Expr::Num(0.0);
        }
        if b.is_num(1.0) {
            return a;
        }
        Expr::Div(Box::new(a), Box::new(b))
    }

    pub fn pow(a: Expr, b: Expr) -> Expr {
        if b.is_num(0.0) {
            return Expr::Num(1.0);
        }
        if b.is_num(1.0) {
            return a;
        }
        if let (Some(x), Some(y)) = (a.as_num(), b.as_num()) {
            if x > 0.0 || (y.fract() == 0.0 && (x != 0.0 || y > 0.0)) {
                if let Some(e) = Expr::folded(x.powf(y)) {
                    return e;
                }
            }
        }
        Expr::Pow(Box::new(a), Box::new(b))
    }

    pub fn call(func: Func, a: Expr) -> Expr {
        match (func, &a) {
            (Func::Ln, Expr::E) => Expr::Num(1.0),
            (Func::Exp, e) if e.is_num(0.0) => Expr::Num(1.0),
            _ => Expr::Call(func, Box::new(a)),
        }
    }

    /// True when the value of the expression changes with `t`.
    pub fn depends_on_t(&self) -> bool {
        match self {
            Expr::T => true,
            Expr::Num(_) | Expr::Alpha | Expr::Pi | Expr::E => false,
            Expr::Neg(a) | Expr::Call(_, a) => a.depends_on_t(),
            Expr::Add(a, b)
            | Expr::Sub(a, b)
            | Expr::Mul(a, b)
            | Expr::Div(a, b)
            | Expr::Pow(a, b) => a.depends_on_t() || b.depends_on_t(),
        }
    }

    /// Number of nodes in the tree.
    pub fn size(&self) -> usize {
        match self {
            Expr::Num(_) | Expr::T | Expr::Alpha | Expr::Pi | Expr::E => 1,
            Expr::Neg(a) | Expr::Call(_, a) => 1 + a.size(),
            Expr::Add(a, b)
            | Expr::Sub(a, b)
            | Expr::Mul(a, b)
            | Expr::Div(a, b)
            | Expr::Pow(a, b) => 1 + a.size() + b.size(),
        }
    }

    /// Replace every occurrence of `t` by `arg`.
    pub fn substitute_t(&self, arg: &Expr) -> Expr {
        let go = |e: &Expr| Box::new(e.substitute_t(arg));
        match self {
            Expr::T => arg.clone(),
            Expr::Num(_) | Expr::Alpha | Expr::Pi | Expr::E => self.clone(),
            Expr::Neg(a) => Expr::Neg(go(a)),
            Expr::Call(f, a) => Expr::Call(*f, go(a)),
            Expr::Add(a, b) => Expr::Add(go(a), go(b)),
            Expr::Sub(a, b) => Expr::Sub(go(a), go(b)),
            Expr::Mul(a, b) => Expr::Mul(go(a), go(b)),
            Expr::Div(a, b) => Expr::Div(go(a), go(b)),
            Expr::Pow(a, b) => Expr::Pow(go(a), go(b)),
        }
    }
}
