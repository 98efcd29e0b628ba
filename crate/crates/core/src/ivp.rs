//! Linear conformable initial value problems
//! `D^n_α y + Σ p_i(t) D^{n-i}_α y = f(t)`.
//!
//! Under `u = t^α/α` the operator `D_α` is `d/du`, so every problem here is
//! a classical linear system in `u`, integrated with fixed-step RK4.

use crate::calculus::{weighted_integral, Alpha, ConformableFn, QuadratureConfig};
use crate::error::{Error, Result};
use crate::expr::Expr;
use crate::taylor::{cauchy_kernel, TaylorExpansion};

/// RK4 steps per unit of the substitution variable `u`.
pub const DEFAULT_STEPS: usize = 512;

/// Smallest accepted step density.
pub const MIN_STEPS: usize = 16;

/// `L = D^n_α + Σ_{i=1}^n p_i D^{n-i}_α`; no coefficients means `L = D^n_α`.
#[derive(Debug, Clone)]
pub struct LinearOperator {
    order: usize,
    coefficients: Vec<ConformableFn>,
    alpha: Alpha,
}

impl LinearOperator {
    pub fn new(alpha: Alpha, order: usize, coefficients: Vec<ConformableFn>) -> Result<Self> {
        if order < 1 {
            return Err(Error::InvalidArgument(
                "operator order must be at least 1".into(),
            ));
        }
        if !coefficients.is_empty() && coefficients.len() != order {
            return Err(Error::InvalidArgument(format!(
                "order {order} needs {order} coefficients, got {}",
                coefficients.len()
            )));
        }
        Ok(LinearOperator {
            order,
            coefficients,
            alpha,
        })
    }

    /// `D^n_α` alone.
    pub fn pure(alpha: Alpha, order: usize) -> Result<Self> {
        Self::new(alpha, order, Vec::new())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn alpha(&self) -> Alpha {
        self.alpha
    }

    pub fn coefficients(&self) -> &[ConformableFn] {
        &self.coefficients
    }

    /// True when there are no coefficients or all of them are the literal 0.
    pub fn is_pure(&self) -> bool {
        self.coefficients.iter().all(is_zero)
    }

    /// `(D^n_α y)` implied by `L y = forcing` for a state
    /// `(y, D_α y, ..., D^{n-1}_α y)` at `t`.
    fn highest(&self, t: f64, state: &[f64], forcing: f64) -> Result<f64> {
        let n = self.order;
        let mut v = forcing;
        for (i, p) in self.coefficients.iter().enumerate() {
            if is_zero(p) {
                continue;
            }
            // p_{i+1} multiplies D^{n-i-1}_α y.
            v -= p.value(t, self.alpha)? * state[n - i - 1];
        }
        Ok(v)
    }
}

fn is_zero(f: &ConformableFn) -> bool {
    matches!(f.expr(), Some(Expr::Num(v)) if *v == 0.0)
}

/// `L y = forcing`, starting from `D^i_α y(base) = initial[i]`.
#[derive(Debug, Clone)]
pub struct IvpSpec {
    operator: LinearOperator,
    forcing: ConformableFn,
    base: f64,
    initial: Vec<f64>,
}

impl IvpSpec {
    pub fn new(
        operator: LinearOperator,
        forcing: ConformableFn,
        base: f64,
        initial: Vec<f64>,
    ) -> Result<Self> {
        check_point(base)?;
        if initial.len() != operator.order() {
            return Err(Error::InvalidArgument(format!(
                "order {} needs {} initial values, got {}",
                operator.order(),
                operator.order(),
                initial.len()
            )));
        }
        if let Some(v) = initial.iter().find(|v| !v.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "initial value {v} is not finite"
            )));
        }
        Ok(IvpSpec {
            operator,
            forcing,
            base,
            initial,
        })
    }

    /// Zero initial data, as in the variation of constants formula.
    pub fn homogeneous_data(
        operator: LinearOperator,
        forcing: ConformableFn,
        base: f64,
    ) -> Result<Self> {
        let n = operator.order();
        Self::new(operator, forcing, base, vec![0.0; n])
    }

    pub fn operator(&self) -> &LinearOperator {
        &self.operator
    }

    pub fn forcing(&self) -> &ConformableFn {
        &self.forcing
    }

    pub fn base(&self) -> f64 {
        self.base
    }

    pub fn initial(&self) -> &[f64] {
        &self.initial
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

fn check_steps(steps: usize) -> Result<()> {
    if steps < MIN_STEPS {
        return Err(Error::InvalidArgument(format!(
            "need at least {MIN_STEPS} steps per unit u, got {steps}"
        )));
    }
    Ok(())
}

/// Number of RK4 steps covering a `u`-distance `du` at the given density.
fn step_count(steps: usize, du: f64) -> usize {
    steps.max((steps as f64 * du.abs()).ceil() as usize)
}

/// Integrate `Y' = (Y_1, ..., Y_{n-1}, D^n y)` in `u` from `s` to `t` with
/// exactly `count` RK4 steps.
fn integrate_state<F>(
    op: &LinearOperator,
    mut forcing: F,
    s: f64,
    t: f64,
    mut state: Vec<f64>,
    count: usize,
) -> Result<Vec<f64>>
where
    F: FnMut(f64) -> Result<f64>,
{
    let alpha = op.alpha();
    let (u0, u1) = (alpha.time(s), alpha.time(t));
    if u0 == u1 {
        return Ok(state);
    }
    let n = op.order();
    let h = (u1 - u0) / count as f64;
    let mut rhs = |u: f64, y: &[f64], out: &mut [f64]| -> Result<()> {
        let tt = alpha.inverse_time(u);
        out[..n - 1].copy_from_slice(&y[1..]);
        out[n - 1] = op.highest(tt, y, forcing(tt)?)?;
        Ok(())
    };
    let mut k1 = vec![0.0; n];
    let mut k2 = vec![0.0; n];
    let mut k3 = vec![0.0; n];
    let mut k4 = vec![0.0; n];
    let mut tmp = vec![0.0; n];
    for i in 0..count {
        let u = u0 + h * i as f64;
        rhs(u, &state, &mut k1)?;
        for j in 0..n {
            tmp[j] = state[j] + 0.5 * h * k1[j];
        }
        rhs(u + 0.5 * h, &tmp, &mut k2)?;
        for j in 0..n {
            tmp[j] = state[j] + 0.5 * h * k2[j];
        }
        rhs(u + 0.5 * h, &tmp, &mut k3)?;
        for j in 0..n {
            tmp[j] = state[j] + h * k3[j];
        }
        rhs(u + h, &tmp, &mut k4)?;
        for j in 0..n {
            state[j] += h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
        }
        if state.iter().any(|v| !v.is_finite()) {
            return Err(Error::StepFailure(u + h));
        }
    }
    Ok(state)
}

fn unit_state(n: usize) -> Vec<f64> {
    let mut v = vec![0.0; n];
    v[n - 1] = 1.0;
    v
}

/// Cauchy function `y(t, s)` of `op` by RK4, even when a closed form exists.
pub fn cauchy_function_numeric(op: &LinearOperator, s: f64, t: f64, steps: usize) -> Result<f64> {
    check_point(s)?;
    check_point(t)?;
    check_steps(steps)?;
    let du = op.alpha().time(t) - op.alpha().time(s);
    let state = integrate_state(
        op,
        |_| Ok(0.0),
        s,
        t,
        unit_state(op.order()),
        step_count(steps, du),
    )?;
    Ok(state[0])
}

/// Cauchy function `y(t, s)`: `L y = 0` with `D^i_α y(s, s) = 0` for
/// `i < n-1` and `D^{n-1}_α y(s, s) = 1`.
///
/// Without coefficients this is `((t^α - s^α)/α)^(n-1)/(n-1)!` exactly;
/// otherwise it is integrated with `steps` RK4 steps per unit of `u`.
pub fn cauchy_function(op: &LinearOperator, s: f64, t: f64, steps: usize) -> Result<f64> {
    check_point(s)?;
    check_point(t)?;
    check_steps(steps)?;
    if op.is_pure() {
        return cauchy_kernel(op.order(), op.alpha(), t, s);
    }
    cauchy_function_numeric(op, s, t, steps)
}

/// Forced solution with zero initial data,
/// `y(t) = ∫_s^t y(t, τ) f(τ) τ^(α-1) dτ`.
pub fn solve_voc(spec: &IvpSpec, t: f64, steps: usize, cfg: &QuadratureConfig) -> Result<f64> {
    if spec.initial().iter().any(|v| *v != 0.0) {
        return Err(Error::InvalidArgument(
            "variation of constants needs zero initial values; use solve_full".into(),
        ));
    }
    particular(spec, t, steps, cfg)
}

fn particular(spec: &IvpSpec, t: f64, steps: usize, cfg: &QuadratureConfig) -> Result<f64> {
    check_point(t)?;
    check_steps(steps)?;
    let op = spec.operator();
    let alpha = op.alpha();
    let s = spec.base();
    if is_zero(spec.forcing()) || s == t {
        return Ok(0.0);
    }
    let f = spec.forcing();
    if op.is_pure() {
        return weighted_integral(
            |tau| Ok(cauchy_kernel(op.order(), alpha, t, tau)? * f.value(tau, alpha)?),
            alpha,
            s,
            t,
            cfg,
        );
    }
    // One step count for every τ keeps the integrand smooth in τ.
    let count = step_count(steps, alpha.time(t) - alpha.time(s));
    weighted_integral(
        |tau| {
            let y = integrate_state(op, |_| Ok(0.0), tau, t, unit_state(op.order()), count)?[0];
            Ok(y * f.value(tau, alpha)?)
        },
        alpha,
        s,
        t,
        cfg,
    )
}

/// Homogeneous solution matching the initial data at the base point.
pub fn solve_homogeneous(spec: &IvpSpec, t: f64, steps: usize) -> Result<f64> {
    check_point(t)?;
    check_steps(steps)?;
    let op = spec.operator();
    let s = spec.base();
    if op.is_pure() {
        let w = TaylorExpansion::from_coefficients(op.alpha(), s, spec.initial().to_vec())?;
        return Ok(w.eval(t));
    }
    // The fundamental matrix at s is the identity, so the combination of the
    // n fundamental solutions is the solution started from the data itself.
    let du = op.alpha().time(t) - op.alpha().time(s);
    let state = integrate_state(
        op,
        |_| Ok(0.0),
        s,
        t,
        spec.initial().to_vec(),
        step_count(steps, du),
    )?;
    Ok(state[0])
}

/// Full solution: homogeneous part plus the variation of constants integral.
pub fn solve_full(spec: &IvpSpec, t: f64, steps: usize, cfg: &QuadratureConfig) -> Result<f64> {
    Ok(solve_homogeneous(spec, t, steps)? + particular(spec, t, steps, cfg)?)
}

/// Full solution by direct RK4 on the forced system; an independent route
/// used to cross-check [`solve_full`].
pub fn solve_direct(spec: &IvpSpec, t: f64, steps: usize) -> Result<f64> {
    check_point(t)?;
    check_steps(steps)?;
    let op = spec.operator();
    let alpha = op.alpha();
    let s = spec.base();
    let du = alpha.time(t) - alpha.time(s);
    let f = spec.forcing();
    let state = integrate_state(
        op,
        |tt| f.value(tt, alpha),
        s,
        t,
        spec.initial().to_vec(),
        step_count(steps, du),
    )?;
    Ok(state[0])
}
