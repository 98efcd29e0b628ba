use super::{Expr, Func};
use crate::error::{Error, Result};
use std::collections::HashMap;

/// Binding for the two free symbols of an expression.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalEnv {
    pub t: f64,
    pub alpha: f64,
}

impl EvalEnv {
    pub fn new(t: f64, alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(Error::InvalidAlpha(alpha));
        }
        if !t.is_finite() {
            return Err(Error::InvalidArgument(format!("t must be finite, got {t}")));
        }
        Ok(EvalEnv { t, alpha })
    }
}

fn domain(msg: String) -> Error {
    Error::Domain(msg)
}

fn finite(v: f64, what: &str) -> Result<f64> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(domain(format!("{what} overflowed")))
    }
}

impl Func {
    pub(crate) fn apply(self, x: f64) -> Result<f64> {
        let v = match self {
            Func::Sin => x.sin(),
            Func::Cos => x.cos(),
            Func::Exp => finite(x.exp(), "exp")?,
            Func::Ln => {
                if x <= 0.0 {
                    return Err(domain(format!("ln of nonpositive value {x}")));
                }
                x.ln()
            }
            Func::Sqrt => {
                if x < 0.0 {
                    return Err(domain(format!("sqrt of negative value {x}")));
                }
                x.sqrt()
            }
            Func::Abs => x.abs(),
            Func::Sgn => {
                if x == 0.0 {
                    0.0
                } else {
                    x.signum()
                }
            }
        };
        Ok(v)
    }
}

fn divide(x: f64, y: f64) -> Result<f64> {
    if y == 0.0 {
        return Err(domain("division by zero".into()));
    }
    finite(x / y, "quotient")
}

// Principal real branch only.
fn power(x: f64, y: f64) -> Result<f64> {
    if x < 0.0 && y.fract() != 0.0 {
        return Err(domain(format!(
            "negative base {x} with non-integer exponent {y}"
        )));
    }
    if x == 0.0 && y < 0.0 {
        return Err(domain(format!("zero raised to negative power {y}")));
    }
    finite(x.powf(y), "power")
}

impl Expr {
    /// Evaluate by walking the tree.
    pub fn eval(&self, env: &EvalEnv) -> Result<f64> {
        match self {
            Expr::Num(v) => Ok(*v),
            Expr::T => Ok(env.t),
            Expr::Alpha => Ok(env.alpha),
            Expr::Pi => Ok(std::f64::consts::PI),
            Expr::E => Ok(std::f64::consts::E),
            Expr::Neg(a) => Ok(-a.eval(env)?),
            Expr::Add(a, b) => finite(a.eval(env)? + b.eval(env)?, "sum"),
            Expr::Sub(a, b) => finite(a.eval(env)? - b.eval(env)?, "difference"),
            Expr::Mul(a, b) => finite(a.eval(env)? * b.eval(env)?, "product"),
            Expr::Div(a, b) => divide(a.eval(env)?, b.eval(env)?),
            Expr::Pow(a, b) => power(a.eval(env)?, b.eval(env)?),
            Expr::Call(f, a) => f.apply(a.eval(env)?),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Op {
    Const(u64),
    T,
    Alpha,
    Neg(u32),
    Add(u32, u32),
    Sub(u32, u32),
    Mul(u32, u32),
    Div(u32, u32),
    Pow(u32, u32),
    Call(Func, u32),
}

/// An expression flattened into a hash-consed instruction list.
///
/// Identical subtrees are stored once, which matters for iterated
/// derivatives where the product rule duplicates whole branches.
#[derive(Debug, Clone)]
pub struct Program {
    ops: Vec<Op>,
}

impl Program {
    pub fn compile(e: &Expr) -> Program {
        let mut b = Builder::default();
        b.visit(e);
        Program { ops: b.ops }
    }

    /// Number of distinct nodes after sharing.
    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    pub fn eval(&self, t: f64, alpha: f64) -> Result<f64> {
        let mut slots: Vec<f64> = Vec::with_capacity(self.ops.len());
        for op in &self.ops {
            let v = match *op {
                Op::Const(bits) => f64::from_bits(bits),
                Op::T => t,
                Op::Alpha => alpha,
                Op::Neg(a) => -slots[a as usize],
                Op::Add(a, b) => finite(slots[a as usize] + slots[b as usize], "sum")?,
                Op::Sub(a, b) => finite(slots[a as usize] - slots[b as usize], "difference")?,
                Op::Mul(a, b) => finite(slots[a as usize] * slots[b as usize], "product")?,
                Op::Div(a, b) => divide(slots[a as usize], slots[b as usize])?,
                Op::Pow(a, b) => power(slots[a as usize], slots[b as usize])?,
                Op::Call(f, a) => f.apply(slots[a as usize])?,
            };
            slots.push(v);
        }
        Ok(*slots.last().expect("program has at least one op"))
    }
}

#[derive(Default)]
struct Builder {
    ops: Vec<Op>,
    index: HashMap<Op, u32>,
}

impl Builder {
    fn intern(&mut self, op: Op) -> u32 {
        if let Some(&i) = self.index.get(&op) {
            return i;
        }
        let i = self.ops.len() as u32;
        self.ops.push(op);
        self.index.insert(op, i);
        i
    }

    fn visit(&mut self, e: &Expr) -> u32 {
        let op = match e {
            Expr::Num(v) => Op::Const(v.to_bits()),
            Expr::Pi => Op::Const(std::f64::consts::PI.to_bits()),
            Expr::E => Op::Const(std::f64::consts::E.to_bits()),
            Expr::T => Op::T,
            Expr::Alpha => Op::Alpha,
            Expr::Neg(a) => Op::Neg(self.visit(a)),
            Expr::Call(f, a) => Op::Call(*f, self.visit(a)),
            Expr::Add(a, b) => Op::Add(self.visit(a), self.visit(b)),
            Expr::Sub(a, b) => Op::Sub(self.visit(a), self.visit(b)),
            Expr::Mul(a, b) => Op::Mul(self.visit(a), self.visit(b)),
            Expr::Div(a, b) => Op::Div(self.visit(a), self.visit(b)),
            Expr::Pow(a, b) => Op::Pow(self.visit(a), self.visit(b)),
        };
        self.intern(op)
    }
}

#[cfg(test)]
mod tests {
    use super::super::parse;
    use super::*;

    fn ev(src: &str, t: f64, alpha: f64) -> Result<f64> {
        parse(src).unwrap().eval(&EvalEnv::new(t, alpha).unwrap())
    }

    #[test]
    fn basic_values() {
        assert_eq!(ev("t^2", 3.0, 1.0).unwrap(), 9.0);
        let v = ev("t^alpha/alpha", 4.0, 0.5).unwrap();
        assert!((v - 4.0).abs() < 1e-15);
        assert!((ev("ln(e)", 0.0, 1.0).unwrap() - 1.0).abs() < 1e-15);
        assert!((ev("cos(pi)", 0.0, 1.0).unwrap() + 1.0).abs() < 1e-15);
        assert_eq!(ev("(-2)^3", 0.0, 1.0).unwrap(), -8.0);
        assert_eq!(ev("sgn(t - 1)", 1.0, 1.0).unwrap(), 0.0);
        assert_eq!(ev("t^0", 0.0, 1.0).unwrap(), 1.0);
    }

    #[test]
    fn domain_errors_are_distinct() {
        assert!(matches!(ev("1/t", 0.0, 1.0), Err(Error::Domain(_))));
        assert!(matches!(ev("ln(t)", 0.0, 1.0), Err(Error::Domain(_))));
        assert!(matches!(ev("ln(t - 1)", 0.5, 1.0), Err(Error::Domain(_))));
        assert!(matches!(ev("sqrt(-t)", 1.0, 1.0), Err(Error::Domain(_))));
        assert!(matches!(ev("(-t)^0.5", 2.0, 1.0), Err(Error::Domain(_))));
        assert!(matches!(
            ev("t^(alpha - 1)", 0.0, 0.5),
            Err(Error::Domain(_))
        ));
        assert!(matches!(ev("exp(t)", 1e6, 1.0), Err(Error::Domain(_))));
    }

    #[test]
    fn env_validation() {
        assert!(matches!(
            EvalEnv::new(1.0, 0.0),
            Err(Error::InvalidAlpha(_))
        ));
        assert!(matches!(
            EvalEnv::new(1.0, 1.5),
            Err(Error::InvalidAlpha(_))
        ));
        assert!(EvalEnv::new(f64::NAN, 0.5).is_err());
    }

    #[test]
    fn program_matches_tree_walk_and_shares_nodes() {
        let e = parse("sin(t)*sin(t) + sin(t)^alpha - 1/(t + 2)").unwrap();
        let p = Program::compile(&e);
        assert!(p.len() < e.size());
        for &t in &[0.3, 1.0, 2.7] {
            let env = EvalEnv::new(t, 0.75).unwrap();
            assert_eq!(p.eval(t, 0.75).unwrap(), e.eval(&env).unwrap());
        }
        assert!(matches!(
            Program::compile(&parse("1/t").unwrap()).eval(0.0, 1.0),
            Err(Error::Domain(_))
        ));
    }
}
