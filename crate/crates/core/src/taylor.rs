//! Conformable Taylor expansions and their integral remainders.
//!
//! The remainder `R_n(center, at)` is `f(at)` minus the degree-`n`
//! expansion about `center`; it also equals
//! `(1/n!) ∫_center^at ((at^α - τ^α)/α)^n D^{n+1}_α f(τ) d_ατ`.

use crate::calculus::{
    frac_deriv_n, weighted_integral, Alpha, ConformableFn, Interval, QuadratureConfig,
};
use crate::error::{Error, Result};
use crate::expr::Expr;

fn factorial(n: usize) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * k as f64)
}

fn check_order(n: i32) -> Result<()> {
    if n < -1 {
        return Err(Error::InvalidArgument(format!(
            "remainder order must be at least -1, got {n}"
        )));
    }
    Ok(())
}

/// Cauchy function of `D^n_alpha y = 0`: `((t^α - s^α)/α)^(n-1) / (n-1)!`.
pub fn cauchy_kernel(n: usize, alpha: Alpha, t: f64, s: f64) -> Result<f64> {
    if n < 1 {
        return Err(Error::InvalidArgument(
            "kernel order must be at least 1".into(),
        ));
    }
    Ok(alpha.span(s, t).powi(n as i32 - 1) / factorial(n - 1))
}

/// The same kernel as an expression in `t` (and `alpha`) for fixed `s`.
pub fn cauchy_kernel_expr(n: usize, s: f64) -> Result<Expr> {
    if n < 1 {
        return Err(Error::InvalidArgument(
            "kernel order must be at least 1".into(),
        ));
    }
    let span = Expr::div(
        Expr::sub(
            Expr::pow(Expr::T, Expr::Alpha),
            Expr::pow(Expr::num(s), Expr::Alpha),
        ),
        Expr::Alpha,
    );
    Ok(Expr::div(
        Expr::pow(span, Expr::num((n - 1) as f64)),
        Expr::num(factorial(n - 1)),
    ))
}

/// Degree-`n` expansion `Σ c_k ((t^α - s^α)/α)^k / k!` with `c_k = D^k_α f(s)`.
#[derive(Debug, Clone, PartialEq)]
pub struct TaylorExpansion {
    center: f64,
    alpha: Alpha,
    coefficients: Vec<f64>,
}

impl TaylorExpansion {
    pub fn new(f: &ConformableFn, alpha: Alpha, n: usize, center: f64) -> Result<Self> {
        let coefficients = (0..=n)
            .map(|k| frac_deriv_n(f, alpha, k, center))
            .collect::<Result<Vec<_>>>()?;
        Ok(TaylorExpansion {
            center,
            alpha,
            coefficients,
        })
    }

    /// Build from known coefficients `D^k_α f(center)`, `k = 0..=n`.
    pub fn from_coefficients(alpha: Alpha, center: f64, coefficients: Vec<f64>) -> Result<Self> {
        if coefficients.is_empty() {
            return Err(Error::InvalidArgument(
                "expansion needs at least one coefficient".into(),
            ));
        }
        Ok(TaylorExpansion {
            center,
            alpha,
            coefficients,
        })
    }

    pub fn center(&self) -> f64 {
        self.center
    }

    pub fn alpha(&self) -> Alpha {
        self.alpha
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    /// Value at `t`; at `t = center` this is exactly `c_0`.
    pub fn eval(&self, t: f64) -> f64 {
        self.derivative(0, t)
    }

    /// `D^m_α` of the expansion at `t`.
    pub fn derivative(&self, m: usize, t: f64) -> f64 {
        let x = self.alpha.span(self.center, t);
        let mut sum = 0.0;
        let mut power = 1.0;
        for (j, c) in self.coefficients.iter().skip(m).enumerate() {
            sum += c * power;
            power *= x / (j + 1) as f64;
        }
        sum
    }
}

/// `Σ_{k=0}^n ((at^α - center^α)/α)^k D^k_α f(center) / k!`.
pub fn taylor_poly(f: &ConformableFn, alpha: Alpha, n: usize, center: f64, at: f64) -> Result<f64> {
    Ok(TaylorExpansion::new(f, alpha, n, center)?.eval(at))
}

/// `R_n(center, at)` from its integral form; `R_{-1}(·, at) = f(at)`.
pub fn taylor_remainder(
    f: &ConformableFn,
    alpha: Alpha,
    n: i32,
    center: f64,
    at: f64,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    check_order(n)?;
    if n == -1 {
        return f.value(at, alpha);
    }
    let n = n as usize;
    let scale = 1.0 / factorial(n);
    let v = weighted_integral(
        |tau| Ok(alpha.span(tau, at).powi(n as i32) * frac_deriv_n(f, alpha, n + 1, tau)?),
        alpha,
        center,
        at,
        cfg,
    )?;
    Ok(scale * v)
}

/// `R_n(center, at)` as `f(at)` minus the expansion; no quadrature.
pub fn taylor_remainder_difference(
    f: &ConformableFn,
    alpha: Alpha,
    n: i32,
    center: f64,
    at: f64,
) -> Result<f64> {
    check_order(n)?;
    let value = f.value(at, alpha)?;
    if n == -1 {
        return Ok(value);
    }
    Ok(value - taylor_poly(f, alpha, n as usize, center, at)?)
}

/// A remainder function `s ↦ R_n(center, s)` with the expansion cached.
pub(crate) struct Remainder<'a> {
    f: &'a ConformableFn,
    alpha: Alpha,
    expansion: Option<TaylorExpansion>,
}

impl<'a> Remainder<'a> {
    pub fn new(f: &'a ConformableFn, alpha: Alpha, n: i32, center: f64) -> Result<Self> {
        check_order(n)?;
        let expansion = if n >= 0 {
            Some(TaylorExpansion::new(f, alpha, n as usize, center)?)
        } else {
            None
        };
        Ok(Remainder {
            f,
            alpha,
            expansion,
        })
    }

    pub fn at(&self, s: f64) -> Result<f64> {
        let v = self.f.value(s, self.alpha)?;
        Ok(match &self.expansion {
            Some(e) => v - e.eval(s),
            None => v,
        })
    }
}

/// `∫_from^to R_n(center, s) d_α s`, with the remainder taken in difference form.
pub fn remainder_integral(
    f: &ConformableFn,
    alpha: Alpha,
    n: i32,
    center: f64,
    from: f64,
    to: f64,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    let r = Remainder::new(f, alpha, n, center)?;
    weighted_integral(|s| r.at(s), alpha, from, to, cfg)
}

// ∫_a^b D^{n+1}_α f(s) / (n+1)! * ((anchor^α - s^α)/α)^(n+1) d_α s
fn kernel_integral(
    f: &ConformableFn,
    alpha: Alpha,
    n: i32,
    win: Interval,
    anchor: f64,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    let m = (n + 1) as usize;
    let scale = 1.0 / factorial(m);
    weighted_integral(
        |s| Ok(frac_deriv_n(f, alpha, m, s)? * alpha.span(s, anchor).powi(m as i32)),
        alpha,
        win.a(),
        win.b(),
        cfg,
    )
    .map(|v| scale * v)
}

/// Left side minus right side of the split identity
/// `∫_a^b D^{n+1}f(s)/(n+1)! ((t^α-s^α)/α)^{n+1} d_αs
///   = ∫_a^t R_n(a,s) d_αs + ∫_t^b R_n(b,s) d_αs`.
pub fn remainder_split_residual(
    f: &ConformableFn,
    alpha: Alpha,
    n: i32,
    win: Interval,
    t: f64,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    check_order(n)?;
    if !win.contains(t) {
        return Err(Error::InvalidArgument(format!(
            "t = {t} lies outside [{}, {}]",
            win.a(),
            win.b()
        )));
    }
    let lhs = kernel_integral(f, alpha, n, win, t, cfg)?;
    let left = remainder_integral(f, alpha, n, win.a(), win.a(), t, cfg)?;
    let right = remainder_integral(f, alpha, n, win.b(), t, win.b(), cfg)?;
    Ok(lhs - (left + right))
}

/// Which endpoint anchors the kernel in [`remainder_endpoint_integral`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Endpoint {
    /// `∫ D^{n+1}f/(n+1)! ((a^α-s^α)/α)^{n+1} d_αs = ∫_a^b R_n(b,s) d_αs`
    A,
    /// `∫ D^{n+1}f/(n+1)! ((b^α-s^α)/α)^{n+1} d_αs = ∫_a^b R_n(a,s) d_αs`
    B,
}

/// Both sides of one endpoint identity, computed independently.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EndpointIdentity {
    pub kernel_side: f64,
    pub remainder_side: f64,
}

impl EndpointIdentity {
    pub fn value(&self) -> f64 {
        self.kernel_side
    }

    pub fn residual(&self) -> f64 {
        self.kernel_side - self.remainder_side
    }
}

pub fn remainder_endpoint_integral(
    f: &ConformableFn,
    alpha: Alpha,
    n: i32,
    win: Interval,
    which: Endpoint,
    cfg: &QuadratureConfig,
) -> Result<EndpointIdentity> {
    check_order(n)?;
    let (anchor, center) = match which {
        Endpoint::A => (win.a(), win.b()),
        Endpoint::B => (win.b(), win.a()),
    };
    Ok(EndpointIdentity {
        kernel_side: kernel_integral(f, alpha, n, win, anchor, cfg)?,
        remainder_side: remainder_integral(f, alpha, n, center, win.a(), win.b(), cfg)?,
    })
}

/// Double-double arithmetic (an unevaluated sum `hi + lo`).
#[derive(Debug, Clone, Copy)]
struct Dd {
    hi: f64,
    lo: f64,
}

impl Dd {
    const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    fn from(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    fn two_sum(a: f64, b: f64) -> Dd {
        let s = a + b;
        let bb = s - a;
        let e = (a - (s - bb)) + (b - bb);
        Dd { hi: s, lo: e }
    }

    fn quick(a: f64, b: f64) -> Dd {
        let s = a + b;
        Dd {
            hi: s,
            lo: b - (s - a),
        }
    }

    fn add(self, o: Dd) -> Dd {
        let s = Dd::two_sum(self.hi, o.hi);
        let t = Dd::two_sum(self.lo, o.lo);
        let r = Dd::quick(s.hi, s.lo + t.hi);
        Dd::quick(r.hi, r.lo + t.lo)
    }

    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    fn mul(self, o: Dd) -> Dd {
        let p = self.hi * o.hi;
        let e = self.hi.mul_add(o.hi, -p);
        Dd::quick(p, e + self.hi * o.lo + self.lo * o.hi)
    }

    fn div(self, o: Dd) -> Dd {
        let q1 = self.hi / o.hi;
        let r = self.add(o.mul(Dd::from(q1)).neg());
        let q2 = r.hi / o.hi;
        let r = r.add(o.mul(Dd::from(q2)).neg());
        let q3 = r.hi / o.hi;
        Dd::quick(q1, q2).add(Dd::from(q3))
    }

    fn powi(self, n: usize) -> Dd {
        (0..n).fold(Dd::ONE, |acc, _| acc.mul(self))
    }
}

/// Residual of the binomial identity
/// `((t^α-r^α)/α)^n / n! = Σ_k ((t^α-s^α)/α)^k ((s^α-r^α)/α)^{n-k} / (k!(n-k)!)`,
/// evaluated in double-double arithmetic.
pub fn binomial_identity_residual(n: usize, alpha: Alpha, t: f64, s: f64, r: f64) -> Result<f64> {
    if n < 1 {
        return Err(Error::InvalidArgument(
            "binomial order must be at least 1".into(),
        ));
    }
    for p in [t, s, r] {
        if !p.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "point must be finite, got {p}"
            )));
        }
        if p < 0.0 {
            return Err(Error::NegativePoint(p));
        }
    }
    let a = alpha.get();
    let (pt, ps, pr) = (t.powf(a), s.powf(a), r.powf(a));
    let span = |x: f64, y: f64| Dd::two_sum(x, -y).div(Dd::from(a));
    let (x, y, z) = (span(pt, ps), span(ps, pr), span(pt, pr));
    let fact = |k: usize| Dd::from(factorial(k));
    let lhs = z.powi(n).div(fact(n));
    let mut rhs = Dd::ZERO;
    for k in 0..=n {
        let term = x.powi(k).mul(y.powi(n - k)).div(fact(k).mul(fact(n - k)));
        rhs = rhs.add(term);
    }
    let d = lhs.add(rhs.neg());
    Ok(d.hi + d.lo)
}
