use super::function::expand_conformable;
use super::{Alpha, ConformableFn};
use crate::error::{Error, Result};

/// Highest conformable order the finite-difference fallback will attempt.
pub const FD_MAX_ORDER: usize = 3;

/// A finite-difference value with an error estimate from halving the step.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Estimate {
    pub value: f64,
    pub error: f64,
}

impl Estimate {
    /// Error estimate relative to the size of the value (never below 1e-300).
    pub fn relative_error(&self, scale: f64) -> f64 {
        self.error / self.value.abs().max(scale.abs()).max(1e-300)
    }
}

// Central stencil for f^(k), k in 1..=3, and its half-width in steps.
fn stencil(k: usize) -> (&'static [(f64, f64)], f64, f64) {
    match k {
        1 => (&[(-1.0, -1.0), (1.0, 1.0)], 2.0, 1.0),
        2 => (&[(-1.0, 1.0), (0.0, -2.0), (1.0, 1.0)], 1.0, 1.0),
        3 => (
            &[(-2.0, -1.0), (-1.0, 2.0), (1.0, -2.0), (2.0, 1.0)],
            2.0,
            2.0,
        ),
        _ => unreachable!("stencils exist for orders 1 to 3"),
    }
}

fn classical_at(f: &ConformableFn, alpha: Alpha, k: usize, x: f64, h: f64) -> Result<f64> {
    if k == 0 {
        return f.value(x, alpha);
    }
    let (points, denom, _) = stencil(k);
    let mut sum = 0.0;
    for &(offset, weight) in points {
        sum += weight * f.value(x + offset * h, alpha)?;
    }
    Ok(sum / (denom * h.powi(k as i32)))
}

/// Step for the order-k stencil at x: `eps^(1/(k+2)) * max(1, |x|)`, shrunk
/// so the stencil stays inside `[x/2, inf)` when x is close to 0.
fn step(k: usize, x: f64) -> f64 {
    let h = f64::EPSILON.powf(1.0 / (k as f64 + 2.0)) * x.abs().max(1.0);
    let (_, _, reach) = stencil(k);
    h.min(0.5 * x / reach)
}

fn classical_estimate(f: &ConformableFn, alpha: Alpha, k: usize, x: f64) -> Result<Estimate> {
    if k == 0 {
        return Ok(Estimate {
            value: f.value(x, alpha)?,
            error: 0.0,
        });
    }
    let h = step(k, x);
    let coarse = classical_at(f, alpha, k, x, h)?;
    let fine = classical_at(f, alpha, k, x, 0.5 * h)?;
    Ok(Estimate {
        value: coarse,
        error: (coarse - fine).abs(),
    })
}

/// `D^n_alpha f(x)` for `x > 0` from function values alone.
pub(crate) fn conformable(f: &ConformableFn, alpha: Alpha, n: usize, x: f64) -> Result<Estimate> {
    if n > FD_MAX_ORDER {
        return Err(Error::InsufficientSmoothness {
            requested: n,
            available: FD_MAX_ORDER,
        });
    }
    let mut value = 0.0;
    let mut error = 0.0;
    for term in expand_conformable(n, alpha) {
        let w = term.coefficient * x.powf(term.power);
        let e = classical_estimate(f, alpha, term.order, x)?;
        value += w * e.value;
        error += w.abs() * e.error;
    }
    if !value.is_finite() {
        return Err(Error::Domain(format!(
            "finite-difference derivative not finite at t = {x}"
        )));
    }
    Ok(Estimate { value, error })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_order_matches_closed_form() {
        let f = ConformableFn::from_fn(|t| t.sin());
        let a = Alpha::new(0.5).unwrap();
        let e = conformable(&f, a, 1, 2.0).unwrap();
        let exact = 2f64.sqrt() * 2f64.cos();
        assert!((e.value - exact).abs() < 1e-9, "{} vs {exact}", e.value);
        assert!(e.error < 1e-7);
    }

    #[test]
    fn third_order_is_usable() {
        // exp(t^a/a) is a fixed point of D_alpha.
        let a = Alpha::new(0.5).unwrap();
        let f = ConformableFn::from_fn(move |t| (t.sqrt() / 0.5).exp());
        let e = conformable(&f, a, 3, 1.0).unwrap();
        let exact = 2f64.exp();
        assert!((e.value - exact).abs() / exact < 1e-4, "{}", e.value);
    }

    #[test]
    fn stencil_stays_on_the_half_line() {
        let f = ConformableFn::from_fn(|t| {
            assert!(t >= 0.0, "sampled at {t}");
            t.sqrt()
        });
        let a = Alpha::new(0.5).unwrap();
        // D_{1/2} sqrt(t) = 1/2 everywhere.
        let e = conformable(&f, a, 1, 1e-3).unwrap();
        // The shrunken step costs accuracy, which the estimate reports.
        assert!((e.value - 0.5).abs() < 1e-5, "{}", e.value);
        assert!((e.value - 0.5).abs() <= 2.0 * e.error);
    }

    #[test]
    fn order_cap() {
        let f = ConformableFn::from_fn(|t| t);
        assert!(matches!(
            conformable(&f, Alpha::ONE, 4, 1.0),
            Err(Error::InsufficientSmoothness { requested: 4, .. })
        ));
    }
}
