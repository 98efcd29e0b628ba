//! Conformable derivatives and the weighted integral `∫ f(t) t^(alpha-1) dt`.
//!
//! ```
//! use confrac_core::calculus::{frac_deriv, frac_integral, Alpha, ConformableFn, QuadratureConfig};
//!
//! let a = Alpha::new(0.5).unwrap();
//! let f = ConformableFn::parse("t").unwrap();
//! assert!((frac_deriv(&f, a, 4.0).unwrap() - 2.0).abs() < 1e-14);
//!
//! let one = ConformableFn::constant(1.0);
//! let v = frac_integral(&one, a, 0.0, 1.0, &QuadratureConfig::default()).unwrap();
//! assert!((v - 2.0).abs() < 1e-12);
//! ```

pub(crate) mod fd;
mod function;
mod limit;
mod quadrature;

pub use fd::FD_MAX_ORDER;
pub use function::{
    expand_conformable, ConformableFn, ExpansionTerm, RealFn, DEFAULT_SYMBOLIC_ORDER,
};
pub use quadrature::{QuadratureConfig, QuadratureMode};

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// The order `alpha` of a conformable operator, validated to lie in `(0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct Alpha(f64);

impl Alpha {
    pub const ONE: Alpha = Alpha(1.0);

    pub fn new(value: f64) -> Result<Alpha> {
        if value > 0.0 && value <= 1.0 {
            Ok(Alpha(value))
        } else {
            Err(Error::InvalidAlpha(value))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }

    /// The substitution variable `u = t^alpha / alpha`, under which
    /// `D_alpha` becomes `d/du` and `d_alpha t` becomes `du`.
    pub fn time(self, t: f64) -> f64 {
        t.powf(self.0) / self.0
    }

    /// Inverse of [`Alpha::time`]: `t = (alpha u)^(1/alpha)`.
    pub fn inverse_time(self, u: f64) -> f64 {
        if self.0 == 1.0 {
            u
        } else {
            (self.0 * u).powf(1.0 / self.0)
        }
    }

    /// `(t^alpha - s^alpha) / alpha`.
    pub fn span(self, s: f64, t: f64) -> f64 {
        if self.0 == 1.0 {
            t - s
        } else {
            (t.powf(self.0) - s.powf(self.0)) / self.0
        }
    }
}

impl TryFrom<f64> for Alpha {
    type Error = Error;
    fn try_from(v: f64) -> Result<Alpha> {
        Alpha::new(v)
    }
}

impl From<Alpha> for f64 {
    fn from(a: Alpha) -> f64 {
        a.0
    }
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A window `[a, b]` with `0 <= a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    a: f64,
    b: f64,
}

impl Interval {
    pub fn new(a: f64, b: f64) -> Result<Interval> {
        if a.is_finite() && b.is_finite() && 0.0 <= a && a < b {
            Ok(Interval { a, b })
        } else {
            Err(Error::InvalidInterval { a, b })
        }
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn len(&self) -> f64 {
        self.b - self.a
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.a + self.b)
    }

    pub fn contains(&self, t: f64) -> bool {
        self.a <= t && t <= self.b
    }

    /// `∫_a^b 1 d_alpha t = (b^alpha - a^alpha) / alpha`.
    pub fn weighted_length(&self, alpha: Alpha) -> f64 {
        alpha.span(self.a, self.b)
    }

    /// `n + 1` equally spaced points from `a` to `b` inclusive.
    pub fn grid(&self, n: usize) -> Vec<f64> {
        let n = n.max(1);
        (0..=n)
            .map(|i| {
                if i == n {
                    self.b
                } else {
                    self.a + (self.b - self.a) * i as f64 / n as f64
                }
            })
            .collect()
    }
}

fn check_point(t: f64) -> Result<()> {
    if !t.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "point must be finite, got {t}"
        )));
    }
    if t < 0.0 {
        return Err(Error::NegativePoint(t));
    }
    Ok(())
}

/// `D^n_alpha f(t)` for `t > 0`. Exact derivatives are used when available;
/// otherwise finite differences, whose estimate is returned alongside.
fn conformable_positive(
    f: &ConformableFn,
    alpha: Alpha,
    n: usize,
    t: f64,
) -> Result<(f64, Option<f64>)> {
    if n == 0 {
        return Ok((f.value(t, alpha)?, None));
    }
    if n <= f.smoothness() {
        return Ok((f.conformable_exact(n, t, alpha)?, None));
    }
    if f.expr().is_some() {
        return Err(Error::InsufficientSmoothness {
            requested: n,
            available: f.smoothness(),
        });
    }
    let e = fd::conformable(f, alpha, n, t)?;
    let scale = f.value(t, alpha)?;
    Ok((e.value, Some(e.relative_error(scale))))
}

/// Conformable derivative `D_alpha f(t) = t^(1-alpha) f'(t)`; the right limit at `t = 0`.
pub fn frac_deriv(f: &ConformableFn, alpha: Alpha, t: f64) -> Result<f64> {
    frac_deriv_n(f, alpha, 1, t)
}

/// Iterated conformable derivative `D^n_alpha f(t)`.
///
/// At `t = 0` the value is the right limit, extrapolated from samples at
/// `1e-2 * 2^-k`; a limit that does not settle is [`Error::LimitDiverged`].
/// Closures without derivatives fall back to finite differences up to order
/// [`FD_MAX_ORDER`], failing with [`Error::Instability`] when the error
/// estimate exceeds `1e-4` relative.
pub fn frac_deriv_n(f: &ConformableFn, alpha: Alpha, n: usize, t: f64) -> Result<f64> {
    check_point(t)?;
    if n == 0 {
        return f.value(t, alpha);
    }
    if t == 0.0 {
        let lim = limit::right_limit(|x| conformable_positive(f, alpha, n, x).map(|(v, _)| v))?;
        // An exact expression that happens to evaluate at 0 is preferred
        // when it agrees with the limit; it carries no extrapolation error.
        if n <= f.smoothness() {
            if let Ok(direct) = f.conformable_exact(n, 0.0, alpha) {
                if (direct - lim).abs() <= 1e-6 * direct.abs().max(1.0) {
                    return Ok(direct);
                }
            }
        }
        return Ok(lim);
    }
    let (value, estimate) = conformable_positive(f, alpha, n, t)?;
    match estimate {
        Some(e) if !(e <= 1e-4) => Err(Error::Instability { estimate: e }),
        _ => Ok(value),
    }
}

/// `∫_a^b g(t) d_alpha t` for an arbitrary integrand.
///
/// The window is orientation-signed: `a > b` negates, `a = b` gives 0.
pub fn weighted_integral<G>(
    mut g: G,
    alpha: Alpha,
    a: f64,
    b: f64,
    cfg: &QuadratureConfig,
) -> Result<f64>
where
    G: FnMut(f64) -> Result<f64>,
{
    cfg.validate()?;
    check_point(a)?;
    check_point(b)?;
    if a == b {
        return Ok(0.0);
    }
    if a > b {
        return weighted_integral(g, alpha, b, a, cfg).map(|v| -v);
    }
    let singular = a == 0.0 && alpha.get() < 1.0;
    match cfg.mode {
        QuadratureMode::Direct if !singular => {
            let p = alpha.get() - 1.0;
            quadrature::integrate(
                |t| Ok(g(t)? * if p == 0.0 { 1.0 } else { t.powf(p) }),
                a,
                b,
                cfg,
            )
        }
        _ => {
            let (lo, hi) = (alpha.time(a), alpha.time(b));
            quadrature::integrate(|u| g(alpha.inverse_time(u)), lo, hi, cfg)
        }
    }
}

/// `∫_a^b f(t) d_alpha t = ∫_a^b f(t) t^(alpha-1) dt`, orientation-signed.
pub fn frac_integral(
    f: &ConformableFn,
    alpha: Alpha,
    a: f64,
    b: f64,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    weighted_integral(|t| f.value(t, alpha), alpha, a, b, cfg)
}
