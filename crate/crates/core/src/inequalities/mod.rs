//! Numerical verification of conformable integral inequalities.
//!
//! Every checker computes the two sides of its inequality by quadrature,
//! checks the theorem's hypotheses on a sampling grid and returns an
//! [`InequalityReport`]. Grid checks are evidence, not proof.

mod checks;

pub use checks::*;

use crate::calculus::{frac_deriv_n, Alpha, ConformableFn, Interval};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Default number of grid intervals for hypothesis checks.
pub const DEFAULT_GRID: usize = 256;

/// Grid used to estimate `sup |D_α f|` for the Ostrowski bound.
pub const SUP_GRID: usize = 1024;

/// Inflation applied to a grid estimate of a supremum.
pub const SUP_INFLATION: f64 = 1.01;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theorem {
    Steffensen,
    Sandwich,
    RemSteffensen,
    Hh1,
    MmBounds,
    Cebysev,
    RemCebysev,
    Hh2,
    Montgomery,
    Ostrowski,
    Jensen,
    Gruss,
    GrussMontgomery,
    Hh3,
}

impl Theorem {
    pub const ALL: [Theorem; 14] = [
        Theorem::Steffensen,
        Theorem::Sandwich,
        Theorem::RemSteffensen,
        Theorem::Hh1,
        Theorem::MmBounds,
        Theorem::Cebysev,
        Theorem::RemCebysev,
        Theorem::Hh2,
        Theorem::Montgomery,
        Theorem::Ostrowski,
        Theorem::Jensen,
        Theorem::Gruss,
        Theorem::GrussMontgomery,
        Theorem::Hh3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::Steffensen => "steffensen",
            Theorem::Sandwich => "sandwich",
            Theorem::RemSteffensen => "rem-steffensen",
            Theorem::Hh1 => "hh1",
            Theorem::MmBounds => "mm-bounds",
            Theorem::Cebysev => "cebysev",
            Theorem::RemCebysev => "rem-cebysev",
            Theorem::Hh2 => "hh2",
            Theorem::Montgomery => "montgomery",
            Theorem::Ostrowski => "ostrowski",
            Theorem::Jensen => "jensen",
            Theorem::Gruss => "gruss",
            Theorem::GrussMontgomery => "gruss-montgomery",
            Theorem::Hh3 => "hh3",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Theorem> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown inequality `{s}`")))
    }
}

/// Bounds `m <= h <= M` on a function or derivative.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundsPair {
    pub m: f64,
    #[serde(rename = "M")]
    pub big_m: f64,
}

impl BoundsPair {
    /// Requires `m <= M`; see [`BoundsPair::strict`] for `m < M`.
    pub fn new(m: f64, big_m: f64) -> Result<BoundsPair> {
        if !(m.is_finite() && big_m.is_finite()) {
            return Err(Error::InvalidArgument("bounds must be finite".into()));
        }
        if m > big_m {
            return Err(Error::Hypothesis(format!(
                "need m <= M, got m = {m}, M = {big_m}"
            )));
        }
        Ok(BoundsPair { m, big_m })
    }

    pub fn strict(m: f64, big_m: f64) -> Result<BoundsPair> {
        let b = BoundsPair::new(m, big_m)?;
        if m >= big_m {
            return Err(Error::Hypothesis(format!(
                "need m < M, got m = {m}, M = {big_m}"
            )));
        }
        Ok(b)
    }

    pub fn width(&self) -> f64 {
        self.big_m - self.m
    }
}

/// The Steffensen window length `ℓ = α(b-a)/(b^α-a^α) ∫_a^b g d_αt`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SteffensenEll {
    pub ell: f64,
    pub alpha: Alpha,
    pub window: Interval,
}

/// A grid-sampled property.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Property {
    Nonnegative,
    Range01,
    Increasing,
    Decreasing,
    /// Convexity of an outer function, tested with second differences.
    ConvexOuter,
    Bounded {
        m: f64,
        big_m: f64,
    },
}

/// Outcome of sampling a property on a grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Verification {
    pub verified: bool,
    /// First grid point where the property fails.
    pub witness: Option<f64>,
}

/// One hypothesis of a theorem and its grid evidence.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HypothesisCheck {
    pub name: String,
    pub verified: bool,
    pub witness: Option<f64>,
    /// Number of grid intervals sampled; 0 when not grid based.
    pub grid: usize,
}

impl HypothesisCheck {
    fn from_verification(name: impl Into<String>, v: Verification, grid: usize) -> Self {
        HypothesisCheck {
            name: name.into(),
            verified: v.verified,
            witness: v.witness,
            grid,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InequalityReport {
    pub theorem: Theorem,
    pub alpha: f64,
    pub a: f64,
    pub b: f64,
    pub hypotheses: Vec<HypothesisCheck>,
    pub lower: Option<f64>,
    pub actual: f64,
    pub upper: Option<f64>,
    /// `actual - lower`.
    pub slack_low: Option<f64>,
    /// `upper - actual`.
    pub slack_high: Option<f64>,
    pub holds: bool,
    /// Window length used by the Steffensen-type bounds.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ell: Option<f64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

/// Reporting tolerance `1e-9 * (1 + max |side|)`.
pub fn report_tolerance(lower: Option<f64>, actual: f64, upper: Option<f64>) -> f64 {
    let scale = [lower, Some(actual), upper]
        .into_iter()
        .flatten()
        .fold(0.0f64, |m, v| m.max(v.abs()));
    1e-9 * (1.0 + scale)
}

impl InequalityReport {
    pub(crate) fn new(
        theorem: Theorem,
        alpha: Alpha,
        win: Interval,
        hypotheses: Vec<HypothesisCheck>,
        lower: Option<f64>,
        actual: f64,
        upper: Option<f64>,
    ) -> Self {
        let tau = report_tolerance(lower, actual, upper);
        let slack_low = lower.map(|l| actual - l);
        let slack_high = upper.map(|u| u - actual);
        let holds = slack_low.map_or(true, |s| s >= -tau) && slack_high.map_or(true, |s| s >= -tau);
        InequalityReport {
            theorem,
            alpha: alpha.get(),
            a: win.a(),
            b: win.b(),
            hypotheses,
            lower,
            actual,
            upper,
            slack_low,
            slack_high,
            holds,
            ell: None,
            notes: Vec::new(),
        }
    }

    pub fn hypotheses_verified(&self) -> bool {
        self.hypotheses.iter().all(|h| h.verified)
    }

    /// Holds and every hypothesis was verified on its grid.
    pub fn guaranteed(&self) -> bool {
        self.holds && self.hypotheses_verified()
    }

    /// Largest violation of either side, 0 when the sandwich holds exactly.
    pub fn violation(&self) -> f64 {
        let low = self.slack_low.map_or(0.0, |s| (-s).max(0.0));
        let high = self.slack_high.map_or(0.0, |s| (-s).max(0.0));
        low.max(high)
    }

    /// `1 + max |side|`, the scale used by the reporting tolerance.
    pub fn scale(&self) -> f64 {
        report_tolerance(self.lower, self.actual, self.upper) / 1e-9
    }
}

fn sample_tolerance(values: &[f64]) -> f64 {
    let scale = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    1e-10 * (1.0 + scale)
}

/// Check a property on sampled values `values[i] = h(points[i])`.
pub(crate) fn check_values(points: &[f64], values: &[f64], property: Property) -> Verification {
    let tol = sample_tolerance(values);
    let fail = |i: usize| Verification {
        verified: false,
        witness: Some(points[i]),
    };
    let n = values.len();
    for i in 0..n {
        let v = values[i];
        let bad = match property {
            Property::Nonnegative => v < -tol,
            Property::Range01 => v < -tol || v > 1.0 + tol,
            Property::Bounded { m, big_m } => v < m - tol || v > big_m + tol,
            Property::Increasing => i > 0 && v < values[i - 1] - tol,
            Property::Decreasing => i > 0 && v > values[i - 1] + tol,
            Property::ConvexOuter => {
                i > 0 && i + 1 < n && values[i - 1] - 2.0 * v + values[i + 1] < -tol
            }
        };
        if bad {
            return fail(i);
        }
    }
    Verification {
        verified: true,
        witness: None,
    }
}

pub(crate) fn sample<G>(mut h: G, points: &[f64]) -> Result<Vec<f64>>
where
    G: FnMut(f64) -> Result<f64>,
{
    points.iter().map(|&t| h(t)).collect()
}

/// Sample `f` on `grid_n + 1` uniform points of the window and test `property`.
pub fn verify_hypothesis(
    f: &ConformableFn,
    alpha: Alpha,
    win: Interval,
    property: Property,
    grid_n: usize,
) -> Result<Verification> {
    verify_derivative(f, alpha, 0, win, property, grid_n)
}

/// As [`verify_hypothesis`] for `D^k_α f`.
pub fn verify_derivative(
    f: &ConformableFn,
    alpha: Alpha,
    k: usize,
    win: Interval,
    property: Property,
    grid_n: usize,
) -> Result<Verification> {
    if grid_n < 8 {
        return Err(Error::InvalidArgument(format!(
            "hypothesis grid needs at least 8 intervals, got {grid_n}"
        )));
    }
    let points = win.grid(grid_n);
    let values = sample(|t| frac_deriv_n(f, alpha, k, t), &points)?;
    Ok(check_values(&points, &values, property))
}

/// Direction of a sampled function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Monotonicity {
    Constant,
    Increasing,
    Decreasing,
    Neither,
}

impl Monotonicity {
    pub(crate) fn classify(points: &[f64], values: &[f64]) -> Monotonicity {
        let inc = check_values(points, values, Property::Increasing).verified;
        let dec = check_values(points, values, Property::Decreasing).verified;
        match (inc, dec) {
            (true, true) => Monotonicity::Constant,
            (true, false) => Monotonicity::Increasing,
            (false, true) => Monotonicity::Decreasing,
            (false, false) => Monotonicity::Neither,
        }
    }

    pub fn is_monotone(self) -> bool {
        self != Monotonicity::Neither
    }
}
