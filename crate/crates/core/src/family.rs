//! A fixed family of smooth test functions with known conformable behaviour.

use crate::calculus::ConformableFn;

/// `E_k(t) = (t^α/α)^k / k!`, so that `D_α E_k = E_{k-1}`.
pub fn e_k(k: usize) -> ConformableFn {
    ConformableFn::parse(&e_k_text(k)).expect("E_k expression parses")
}

pub fn e_k_text(k: usize) -> String {
    match k {
        0 => "1".to_string(),
        1 => "t^alpha/alpha".to_string(),
        _ => {
            let fact: u64 = (1..=k as u64).product();
            format!("(t^alpha/alpha)^{k}/{fact}")
        }
    }
}

/// A named family member.
#[derive(Debug, Clone)]
pub struct Member {
    pub name: String,
    pub f: ConformableFn,
}

fn member(name: impl Into<String>, text: &str) -> Member {
    Member {
        name: name.into(),
        f: ConformableFn::parse(text).expect("family expression parses"),
    }
}

/// Source text of every member of [`standard`], in order.
pub const STANDARD_TEXTS: [&str; 11] = [
    "1",
    "t^alpha/alpha",
    "(t^alpha/alpha)^2/2",
    "(t^alpha/alpha)^3/6",
    "(t^alpha/alpha)^4/24",
    "exp(t^alpha/alpha)",
    "exp(-t^alpha/alpha)",
    "sin(t)",
    "exp(t)",
    "1 + 2*t - t^2/3 + t^3/5",
    "t^4 - 3*t",
];

/// `E_0..E_4`, `exp(±t^α/α)`, `sin`, `exp` and two polynomials.
pub fn standard() -> Vec<Member> {
    STANDARD_TEXTS.iter().map(|s| member(*s, s)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::{frac_deriv, Alpha};

    #[test]
    fn e_k_lowers_under_d_alpha() {
        let a = Alpha::new(0.3).unwrap();
        for k in 1..6 {
            for &t in &[0.4, 1.3, 2.9] {
                let d = frac_deriv(&e_k(k), a, t).unwrap();
                let lower = e_k(k - 1).value(t, a).unwrap();
                assert!((d - lower).abs() < 1e-12 * (1.0 + lower.abs()));
            }
        }
    }

    #[test]
    fn standard_texts_match_e_k() {
        for (k, text) in STANDARD_TEXTS.iter().take(5).enumerate() {
            assert_eq!(*text, e_k_text(k));
        }
        assert_eq!(standard().len(), STANDARD_TEXTS.len());
    }
}
