use super::Expr;
use std::fmt;

// Binding strength, loosest first.
const SUM: u8 = 1;
const PRODUCT: u8 = 2;
const UNARY: u8 = 3;
const POWER: u8 = 4;
const ATOM: u8 = 5;

fn prec(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => SUM,
        Expr::Mul(..) | Expr::Div(..) => PRODUCT,
        Expr::Neg(_) => UNARY,
        Expr::Num(v) if v.is_sign_negative() => UNARY,
        Expr::Pow(..) => POWER,
        _ => ATOM,
    }
}

fn is_negation(e: &Expr) -> bool {
    prec(e) == UNARY
}

fn child(f: &mut fmt::Formatter<'_>, e: &Expr, min: u8) -> fmt::Result {
    if prec(e) < min {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

// Right operands of binary operators get parentheses around a leading minus
// for readability: `t*(-2)` rather than `t*-2`.
fn right(f: &mut fmt::Formatter<'_>, e: &Expr, min: u8) -> fmt::Result {
    if is_negation(e) {
        write!(f, "({e})")
    } else {
        child(f, e, min)
    }
}

/// Prints with the minimum parentheses needed for the text to parse back
/// into the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(v) => write!(f, "{v}"),
            Expr::T => f.write_str("t"),
            Expr::Alpha => f.write_str("alpha"),
            Expr::Pi => f.write_str("pi"),
            Expr::E => f.write_str("e"),
            Expr::Neg(a) => {
                f.write_str("-")?;
                if is_negation(a) {
                    write!(f, "({a})")
                } else {
                    child(f, a, UNARY)
                }
            }
            Expr::Add(a, b) => {
                child(f, a, SUM)?;
                f.write_str(" + ")?;
                right(f, b, PRODUCT)
            }
            Expr::Sub(a, b) => {
                child(f, a, SUM)?;
                f.write_str(" - ")?;
                right(f, b, PRODUCT)
            }
            Expr::Mul(a, b) => {
                child(f, a, PRODUCT)?;
                f.write_str("*")?;
                right(f, b, UNARY)
            }
            Expr::Div(a, b) => {
                child(f, a, PRODUCT)?;
                f.write_str("/")?;
                right(f, b, UNARY)
            }
            Expr::Pow(a, b) => {
                child(f, a, ATOM)?;
                f.write_str("^")?;
                right(f, b, UNARY)
            }
            Expr::Call(func, a) => write!(f, "{func}({a})"),
        }
    }
}

impl Expr {
    /// Canonical text form; `parse(&e.to_text())` rebuilds `e`.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}
