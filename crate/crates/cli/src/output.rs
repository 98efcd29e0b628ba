use confrac_core::{InequalityReport, Theorem};
use serde_json::{json, Value};
use std::collections::BTreeMap;

/// Significant digits of every printed float.
pub const DIGITS: usize = 12;

pub const CSV_HEADER: [&str; 12] = [
    "theorem",
    "alpha",
    "a",
    "b",
    "lower",
    "actual",
    "upper",
    "slack_low",
    "slack_high",
    "holds",
    "hypotheses_verified",
    "failed_hypotheses",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// `x` with [`DIGITS`] significant digits, trailing zeros dropped.
///
/// Plain notation for exponents in `-5..12`, otherwise `1.5e-7` style.
pub fn format_float(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.into();
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.*e}", DIGITS - 1, x.abs());
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    let sign = if x < 0.0 { "-" } else { "" };
    if (-5..DIGITS as i32).contains(&exp) {
        let (int, frac) = if exp >= 0 {
            let k = exp as usize + 1;
            (digits[..k].to_string(), digits[k..].to_string())
        } else {
            ("0".to_string(), "0".repeat((-exp - 1) as usize) + &digits)
        };
        let frac = frac.trim_end_matches('0');
        if frac.is_empty() {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{frac}")
        }
    } else {
        let (lead, rest) = digits.split_at(1);
        let rest = rest.trim_end_matches('0');
        if rest.is_empty() {
            format!("{sign}{lead}e{exp}")
        } else {
            format!("{sign}{lead}.{rest}e{exp}")
        }
    }
}

fn number(x: Option<f64>) -> Value {
    match x {
        Some(v) if v.is_finite() => json!(format_float(v).parse::<f64>().expect("round trip")),
        _ => Value::Null,
    }
}

fn cell(x: Option<f64>) -> String {
    x.map(format_float).unwrap_or_default()
}

#[derive(Debug, Clone, PartialEq)]
pub struct Hypothesis {
    pub name: String,
    pub verified: bool,
    pub witness: Option<f64>,
}

/// One output record: an evaluated report, or an instance that could not be
/// evaluated (then `actual` is `None` and the reason is a failed hypothesis).
#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub theorem: Theorem,
    pub alpha: f64,
    pub a: f64,
    pub b: f64,
    pub lower: Option<f64>,
    pub actual: Option<f64>,
    pub upper: Option<f64>,
    pub slack_low: Option<f64>,
    pub slack_high: Option<f64>,
    pub holds: bool,
    pub hypotheses: Vec<Hypothesis>,
}

impl Row {
    pub fn from_report(r: &InequalityReport) -> Row {
        Row {
            theorem: r.theorem,
            alpha: r.alpha,
            a: r.a,
            b: r.b,
            lower: r.lower,
            actual: Some(r.actual),
            upper: r.upper,
            slack_low: r.slack_low,
            slack_high: r.slack_high,
            holds: r.holds,
            hypotheses: r
                .hypotheses
                .iter()
                .map(|h| Hypothesis {
                    name: h.name.clone(),
                    verified: h.verified,
                    witness: h.witness,
                })
                .collect(),
        }
    }

    pub fn unevaluated(theorem: Theorem, alpha: f64, a: f64, b: f64, reason: &str) -> Row {
        Row {
            theorem,
            alpha,
            a,
            b,
            lower: None,
            actual: None,
            upper: None,
            slack_low: None,
            slack_high: None,
            holds: false,
            hypotheses: vec![Hypothesis {
                name: reason.to_string(),
                verified: false,
                witness: None,
            }],
        }
    }

    pub fn hypotheses_verified(&self) -> bool {
        self.hypotheses.iter().all(|h| h.verified)
    }

    pub fn to_json(&self) -> String {
        let hyps: Vec<Value> = self
            .hypotheses
            .iter()
            .map(|h| {
                let mut m = BTreeMap::new();
                m.insert("name", json!(h.name));
                m.insert("verified", json!(h.verified));
                m.insert("witness", number(h.witness));
                json!(m)
            })
            .collect();
        let mut m = BTreeMap::new();
        m.insert("theorem", json!(self.theorem.name()));
        m.insert("alpha", number(Some(self.alpha)));
        m.insert("a", number(Some(self.a)));
        m.insert("b", number(Some(self.b)));
        m.insert("hypotheses", Value::Array(hyps));
        m.insert("lower", number(self.lower));
        m.insert("actual", number(self.actual));
        m.insert("upper", number(self.upper));
        m.insert("slack_low", number(self.slack_low));
        m.insert("slack_high", number(self.slack_high));
        m.insert("holds", json!(self.holds));
        serde_json::to_string(&m).expect("serializable")
    }

    pub fn csv_record(&self) -> Vec<String> {
        let failed: Vec<String> = self
            .hypotheses
            .iter()
            .filter(|h| !h.verified)
            .map(|h| match h.witness {
                Some(w) => format!("{} (t = {})", h.name, format_float(w)),
                None => h.name.clone(),
            })
            .collect();
        vec![
            self.theorem.name().to_string(),
            format_float(self.alpha),
            format_float(self.a),
            format_float(self.b),
            cell(self.lower),
            cell(self.actual),
            cell(self.upper),
            cell(self.slack_low),
            cell(self.slack_high),
            self.holds.to_string(),
            self.hypotheses_verified().to_string(),
            failed.join("; "),
        ]
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match self.actual {
            Some(actual) => {
                let verdict = if self.holds { "HOLDS" } else { "VIOLATED" };
                let lower = self.lower.map_or("-inf".into(), format_float);
                let upper = self.upper.map_or("inf".into(), format_float);
                out += &format!("{verdict}  {lower} ≤ {} ≤ {upper}\n", format_float(actual));
            }
            None => out += "NOT EVALUATED\n",
        }
        out += &format!(
            "{}  alpha = {}  [{}, {}]\n",
            self.theorem,
            format_float(self.alpha),
            format_float(self.a),
            format_float(self.b)
        );
        for h in &self.hypotheses {
            let status = match (h.verified, h.witness) {
                (true, _) => "verified".to_string(),
                (false, Some(w)) => format!("NOT VERIFIED at t = {}", format_float(w)),
                (false, None) => "NOT VERIFIED".to_string(),
            };
            out += &format!("  {}: {status}\n", h.name);
        }
        out
    }
}

/// Rows in one format; CSV gets a single header line, JSON one object per line.
pub fn emit_rows(rows: &[Row], format: Format) -> String {
    match format {
        Format::Text => rows.iter().map(Row::to_text).collect::<Vec<_>>().join("\n"),
        Format::Json => rows.iter().map(|r| r.to_json() + "\n").collect(),
        Format::Csv => {
            let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
            w.write_record(CSV_HEADER).expect("in-memory write");
            for r in rows {
                w.write_record(r.csv_record()).expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
        }
    }
}

pub fn emit_report(r: &InequalityReport, format: Format) -> String {
    emit_rows(&[Row::from_report(r)], format)
}
