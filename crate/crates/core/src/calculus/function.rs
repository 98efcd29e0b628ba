use super::Alpha;
use crate::error::{Error, Result};
use crate::expr::{Expr, Program};
use std::fmt;
use std::sync::{Arc, OnceLock};

/// Exact derivative order prepared for expression-backed functions.
pub const DEFAULT_SYMBOLIC_ORDER: usize = 10;

pub type RealFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

struct Level {
    expr: Expr,
    program: Program,
}

impl Level {
    fn new(expr: Expr) -> Level {
        let program = Program::compile(&expr);
        Level { expr, program }
    }
}

struct Symbolic {
    order: usize,
    // Index k holds d^k/dt^k f and D^k_alpha f respectively; both start at f.
    classical: Vec<OnceLock<Level>>,
    fractional: Vec<OnceLock<Level>>,
}

impl Symbolic {
    fn classical(&self, k: usize) -> &Level {
        self.classical[k].get_or_init(|| Level::new(self.classical(k - 1).expr.diff()))
    }

    fn fractional(&self, k: usize) -> &Level {
        self.fractional[k]
            .get_or_init(|| Level::new(self.fractional(k - 1).expr.conformable_diff()))
    }
}

struct Closure {
    f: RealFn,
    derivatives: Vec<RealFn>,
}

enum Repr {
    Symbolic(Symbolic),
    Closure(Closure),
}

/// A real function on `[0, inf)` that the conformable operators act on.
///
/// Built from an [`Expr`], it carries exact classical and conformable
/// derivatives (constructed lazily by symbolic differentiation). Built from
/// a closure, it may carry user-supplied classical derivatives; otherwise
/// derivatives fall back to finite differences.
///
/// Cloning is cheap and the value is shareable across threads.
#[derive(Clone)]
pub struct ConformableFn {
    repr: Arc<Repr>,
}

impl fmt::Debug for ConformableFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.repr {
            Repr::Symbolic(s) => write!(f, "ConformableFn({})", s.classical(0).expr),
            Repr::Closure(c) => write!(
                f,
                "ConformableFn(<closure>, {} derivatives)",
                c.derivatives.len()
            ),
        }
    }
}

fn check_finite(v: f64, t: f64) -> Result<f64> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Domain(format!(
            "function value not finite at t = {t}"
        )))
    }
}

impl ConformableFn {
    pub fn from_expr(expr: Expr) -> Self {
        Self::from_expr_with_order(expr, DEFAULT_SYMBOLIC_ORDER)
    }

    pub fn from_expr_with_order(expr: Expr, order: usize) -> Self {
        let mk = |e: &Expr| {
            let v: Vec<OnceLock<Level>> = (0..=order).map(|_| OnceLock::new()).collect();
            let _ = v[0].set(Level::new(e.clone()));
            v
        };
        let sym = Symbolic {
            order,
            classical: mk(&expr),
            fractional: mk(&expr),
        };
        ConformableFn {
            repr: Arc::new(Repr::Symbolic(sym)),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        Ok(Self::from_expr(crate::expr::parse(text)?))
    }

    pub fn constant(c: f64) -> Self {
        Self::from_expr(Expr::num(c))
    }

    /// A closure without derivative information.
    pub fn from_fn<F>(f: F) -> Self
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        Self::with_derivatives(f, Vec::new())
    }

    /// A closure together with its classical derivatives `f', f'', ...`.
    pub fn with_derivatives<F>(f: F, derivatives: Vec<RealFn>) -> Self
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        ConformableFn {
            repr: Arc::new(Repr::Closure(Closure {
                f: Arc::new(f),
                derivatives,
            })),
        }
    }

    pub fn expr(&self) -> Option<&Expr> {
        match &*self.repr {
            Repr::Symbolic(s) => Some(&s.classical(0).expr),
            Repr::Closure(_) => None,
        }
    }

    /// Highest derivative order available exactly; 0 for bare closures.
    pub fn smoothness(&self) -> usize {
        match &*self.repr {
            Repr::Symbolic(s) => s.order,
            Repr::Closure(c) => c.derivatives.len(),
        }
    }

    pub fn value(&self, t: f64, alpha: Alpha) -> Result<f64> {
        match &*self.repr {
            Repr::Symbolic(s) => s.classical(0).program.eval(t, alpha.get()),
            Repr::Closure(c) => check_finite((c.f)(t), t),
        }
    }

    /// Exact classical derivative `d^k f/dt^k` at `t`.
    pub fn classical(&self, k: usize, t: f64, alpha: Alpha) -> Result<f64> {
        let available = self.smoothness();
        if k > available {
            return Err(Error::InsufficientSmoothness {
                requested: k,
                available,
            });
        }
        match &*self.repr {
            Repr::Symbolic(s) => s.classical(k).program.eval(t, alpha.get()),
            Repr::Closure(c) if k == 0 => check_finite((c.f)(t), t),
            Repr::Closure(c) => check_finite((c.derivatives[k - 1])(t), t),
        }
    }

    /// Symbolic `D^k_alpha f`, when the function carries an expression.
    pub fn conformable_expr(&self, k: usize) -> Option<&Expr> {
        match &*self.repr {
            Repr::Symbolic(s) if k <= s.order => Some(&s.fractional(k).expr),
            _ => None,
        }
    }

    /// `D^k_alpha f(t)` for `t > 0` from exact derivative information.
    ///
    /// Expressions use the symbolic chain `t^(1-alpha) d/dt` applied `k`
    /// times; closures expand `D^k_alpha` into classical derivatives.
    pub(crate) fn conformable_exact(&self, k: usize, t: f64, alpha: Alpha) -> Result<f64> {
        let available = self.smoothness();
        if k > available {
            return Err(Error::InsufficientSmoothness {
                requested: k,
                available,
            });
        }
        match &*self.repr {
            // D_1 is d/dt; the classical chain avoids 0 * t^(-1) terms at t = 0.
            Repr::Symbolic(s) if alpha == Alpha::ONE => s.classical(k).program.eval(t, 1.0),
            Repr::Symbolic(s) => s.fractional(k).program.eval(t, alpha.get()),
            Repr::Closure(_) => {
                let mut sum = 0.0;
                for term in expand_conformable(k, alpha) {
                    sum += term.coefficient
                        * t.powf(term.power)
                        * self.classical(term.order, t, alpha)?;
                }
                check_finite(sum, t)
            }
        }
    }
}

impl From<Expr> for ConformableFn {
    fn from(e: Expr) -> Self {
        ConformableFn::from_expr(e)
    }
}

/// One term `coefficient * t^power * f^(order)(t)` of an expanded `D^n_alpha`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExpansionTerm {
    pub coefficient: f64,
    pub power: f64,
    pub order: usize,
}

/// Expand `D^n_alpha f` as a combination of classical derivatives, using
/// `D_alpha (c t^p f^(k)) = c p t^(p-alpha) f^(k) + c t^(p+1-alpha) f^(k+1)`.
pub fn expand_conformable(n: usize, alpha: Alpha) -> Vec<ExpansionTerm> {
    let a = alpha.get();
    let mut terms = vec![ExpansionTerm {
        coefficient: 1.0,
        power: 0.0,
        order: 0,
    }];
    for _ in 0..n {
        let mut next: Vec<ExpansionTerm> = Vec::with_capacity(2 * terms.len());
        let mut push = |term: ExpansionTerm| {
            if term.coefficient == 0.0 {
                return;
            }
            match next
                .iter_mut()
                .find(|x| x.order == term.order && (x.power - term.power).abs() < 1e-12)
            {
                Some(x) => x.coefficient += term.coefficient,
                None => next.push(term),
            }
        };
        for term in &terms {
            push(ExpansionTerm {
                coefficient: term.coefficient * term.power,
                power: term.power - a,
                order: term.order,
            });
            push(ExpansionTerm {
                coefficient: term.coefficient,
                power: term.power + 1.0 - a,
                order: term.order + 1,
            });
        }
        next.retain(|x| x.coefficient != 0.0);
        terms = next;
    }
    terms
}
