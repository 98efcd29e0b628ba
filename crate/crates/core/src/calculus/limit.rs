use crate::error::{Error, Result};

const START: f64 = 1e-2;
const LEVELS: i32 = 20;
const TOL: f64 = 1e-8;

/// One Δ² step on three consecutive terms. `None` when the differences do
/// not contract, which is how a divergent or logarithmic sequence shows up.
fn aitken(x0: f64, x1: f64, x2: f64) -> Option<f64> {
    let d1 = x1 - x0;
    let d2 = x2 - x1;
    if d2.abs() <= 4.0 * f64::EPSILON * x2.abs().max(x1.abs()) {
        return Some(x2);
    }
    if d1 == 0.0 {
        return None;
    }
    let ratio = d2 / d1;
    if !(ratio.abs() < 0.999) {
        return None;
    }
    Some(x2 - d2 * d2 / (d2 - d1))
}

// Two rounds of Δ² over the tail of the sequence; the second round removes
// a second power-law term such as the `t` in `1 + c t^(1/2) + d t`.
fn extrapolate(v: &[f64]) -> Option<f64> {
    let n = v.len();
    if n < 3 {
        return None;
    }
    let first: Vec<Option<f64>> = (n.saturating_sub(5)..n - 2)
        .map(|i| aitken(v[i], v[i + 1], v[i + 2]))
        .collect();
    let m = first.len();
    if m >= 3 {
        if let (Some(a), Some(b), Some(c)) = (first[m - 3], first[m - 2], first[m - 1]) {
            if let Some(e) = aitken(a, b, c) {
                return Some(e);
            }
        }
    }
    first[m - 1]
}

/// Right limit `lim_{t -> 0+} g(t)` from samples at `t_k = 1e-2 * 2^-k`,
/// `k = 0..=20`, accelerated with Aitken's Δ² process. Accepted once two
/// successive estimates differ by less than `1e-8` (relative above 1).
pub(crate) fn right_limit<G>(mut g: G) -> Result<f64>
where
    G: FnMut(f64) -> Result<f64>,
{
    let mut samples = Vec::with_capacity(LEVELS as usize + 1);
    let mut previous: Option<f64> = None;
    for k in 0..=LEVELS {
        let t = START * 0.5f64.powi(k);
        let v = g(t)?;
        if !v.is_finite() {
            return Err(Error::LimitDiverged);
        }
        samples.push(v);
        let estimate = extrapolate(&samples);
        if let (Some(e), Some(p)) = (estimate, previous) {
            if (e - p).abs() <= TOL * e.abs().max(1.0) {
                return Ok(e);
            }
        }
        previous = estimate;
    }
    Err(Error::LimitDiverged)
}
