//! Command-line front end for `confrac-core`.
//!
//! [`run`] parses an argument vector, dispatches to the library and returns
//! the exit status together with the text for stdout and stderr.
//!
//! Exit status: 0 success or inequality holds, 1 inequality violated,
//! 2 hypothesis check failed, 3 usage or parse error, 4 numeric failure.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod output;

pub use output::{
    emit_report, emit_rows, format_float, Format, Hypothesis, Row, CSV_HEADER, DIGITS,
};

use clap::builder::{PossibleValuesParser, TypedValueParser};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use confrac_core::calculus::{frac_deriv_n, frac_integral};
use confrac_core::inequalities::*;
use confrac_core::ivp::{solve_full, IvpSpec, LinearOperator, DEFAULT_STEPS};
use confrac_core::taylor::{taylor_poly, taylor_remainder};
use confrac_core::{Alpha, ConformableFn, Error, Interval, QuadratureConfig};
use std::ffi::OsString;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATED: i32 = 1;
pub const EXIT_HYPOTHESIS: i32 = 2;
pub const EXIT_USAGE: i32 = 3;
pub const EXIT_NUMERIC: i32 = 4;

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Hypothesis(String),
    Numeric(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Hypothesis(_) => EXIT_HYPOTHESIS,
            Failure::Numeric(_) => EXIT_NUMERIC,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Hypothesis(m) | Failure::Numeric(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        if e.is_usage() {
            Failure::Usage(e.to_string())
        } else if matches!(e, Error::Hypothesis(_)) {
            Failure::Hypothesis(e.to_string())
        } else {
            Failure::Numeric(e.to_string())
        }
    }
}

type CliResult<T> = Result<T, Failure>;

#[derive(Parser)]
#[command(name = "confrac", version, about = "Conformable fractional calculus")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Conformable derivative of order N at a point.
    Deriv(DerivArgs),
    /// Weighted integral over [a, b].
    Integrate(IntegrateArgs),
    /// Taylor polynomial, optionally with the integral remainder.
    Taylor(TaylorArgs),
    /// Linear initial value problem D^N y + p1 D^{N-1} y + ... + pN y = rhs.
    Solve(SolveArgs),
    /// Steffensen length for a weight with values in [0, 1].
    Ell(EllArgs),
    /// Check one inequality.
    Check(CheckArgs),
    /// Check one inequality over a grid of alpha values and windows.
    Sweep(SweepArgs),
}

#[derive(Args)]
struct DerivArgs {
    #[arg(long, allow_hyphen_values = true)]
    expr: String,
    #[arg(long, allow_hyphen_values = true)]
    alpha: f64,
    #[arg(long, allow_hyphen_values = true)]
    at: f64,
    #[arg(long, default_value_t = 1)]
    order: usize,
}

#[derive(Args)]
struct IntegrateArgs {
    #[arg(long, allow_hyphen_values = true)]
    expr: String,
    #[arg(long, allow_hyphen_values = true)]
    alpha: f64,
    #[arg(long, allow_hyphen_values = true)]
    a: f64,
    #[arg(long, allow_hyphen_values = true)]
    b: f64,
    /// Absolute and relative quadrature tolerance.
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Args)]
struct TaylorArgs {
    #[arg(long, allow_hyphen_values = true)]
    expr: String,
    #[arg(long, allow_hyphen_values = true)]
    alpha: f64,
    #[arg(long, allow_hyphen_values = true)]
    center: f64,
    #[arg(long)]
    degree: usize,
    #[arg(long, allow_hyphen_values = true)]
    at: f64,
    /// Also print the integral remainder and f(at).
    #[arg(long)]
    remainder: bool,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long)]
    order: usize,
    /// Coefficients p1;...;pN. Omitted means the pure operator D^N.
    #[arg(long, allow_hyphen_values = true)]
    coeffs: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    rhs: String,
    #[arg(long, allow_hyphen_values = true)]
    alpha: f64,
    #[arg(long, allow_hyphen_values = true)]
    from: f64,
    #[arg(long, allow_hyphen_values = true)]
    to: f64,
    /// Initial values y, D y, ..., D^{N-1} y at `from`. Omitted means zeros.
    #[arg(long, allow_hyphen_values = true)]
    init: Option<String>,
    /// Integration steps per unit of t^alpha/alpha.
    #[arg(long, default_value_t = DEFAULT_STEPS)]
    steps: usize,
}

#[derive(Args)]
struct EllArgs {
    #[arg(long, allow_hyphen_values = true)]
    g: String,
    #[arg(long, allow_hyphen_values = true)]
    alpha: f64,
    #[arg(long, allow_hyphen_values = true)]
    a: f64,
    #[arg(long, allow_hyphen_values = true)]
    b: f64,
}

fn theorem_parser() -> impl TypedValueParser<Value = Theorem> {
    PossibleValuesParser::new(Theorem::ALL.map(Theorem::name))
        .map(|s| s.parse::<Theorem>().expect("listed name"))
}

/// Inputs shared by `check` and `sweep`; which ones are needed depends on the inequality.
#[derive(Args)]
struct Inputs {
    #[arg(long, value_parser = theorem_parser())]
    ineq: Theorem,
    #[arg(long, allow_hyphen_values = true)]
    f: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    g: Option<String>,
    /// Weight (jensen).
    #[arg(long, allow_hyphen_values = true)]
    w: Option<String>,
    /// Convex outer function (jensen).
    #[arg(long = "F", allow_hyphen_values = true)]
    outer: Option<String>,
    /// Remainder order.
    #[arg(long)]
    n: Option<usize>,
    /// Lower bound.
    #[arg(long, allow_hyphen_values = true)]
    m: Option<f64>,
    /// Upper bound; for ostrowski, a bound on |D_alpha f|.
    #[arg(long = "M", allow_hyphen_values = true)]
    big_m: Option<f64>,
    /// Lower bound for g (gruss).
    #[arg(long, allow_hyphen_values = true)]
    m2: Option<f64>,
    /// Upper bound for g (gruss).
    #[arg(long = "M2", allow_hyphen_values = true)]
    big_m2: Option<f64>,
    /// Evaluation point.
    #[arg(long, allow_hyphen_values = true)]
    t: Option<f64>,
    /// Quadrature tolerance.
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Args)]
#[group(multiple = false)]
struct FormatFlags {
    #[arg(long)]
    json: bool,
    #[arg(long)]
    csv: bool,
}

#[derive(Args)]
struct CheckArgs {
    #[command(flatten)]
    inputs: Inputs,
    #[arg(long, allow_hyphen_values = true)]
    alpha: f64,
    #[arg(long, allow_hyphen_values = true)]
    a: f64,
    #[arg(long, allow_hyphen_values = true)]
    b: f64,
    #[command(flatten)]
    format: FormatFlags,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    inputs: Inputs,
    /// `start:stop:step` (stop included) or a comma-separated list.
    #[arg(long)]
    alphas: String,
    #[arg(
        long,
        allow_hyphen_values = true,
        requires = "b",
        conflicts_with = "windows"
    )]
    a: Option<f64>,
    #[arg(long, allow_hyphen_values = true, requires = "a")]
    b: Option<f64>,
    /// Windows `a1,b1;a2,b2;...`.
    #[arg(long)]
    windows: Option<String>,
    /// JSON lines instead of CSV.
    #[arg(long)]
    json: bool,
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: EXIT_OK,
                    stdout: e.to_string(),
                    stderr: String::new(),
                },
                _ => {
                    let text = e.to_string();
                    let line = text.lines().next().unwrap_or("invalid usage");
                    let line = line.strip_prefix("error: ").unwrap_or(line);
                    failure(&Failure::Usage(line.to_string()), String::new())
                }
            };
        }
    };
    let result = match cli.command {
        Command::Deriv(a) => deriv(a),
        Command::Integrate(a) => integrate(a),
        Command::Taylor(a) => taylor(a),
        Command::Solve(a) => solve(a),
        Command::Ell(a) => ell(a),
        Command::Check(a) => return check(a),
        Command::Sweep(a) => return sweep(a),
    };
    match result {
        Ok(stdout) => Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        },
        Err(f) => failure(&f, String::new()),
    }
}

fn failure(f: &Failure, stdout: String) -> Outcome {
    let kind = match f {
        Failure::Usage(_) => "usage error",
        Failure::Hypothesis(_) => "hypothesis failed",
        Failure::Numeric(_) => "numeric failure",
    };
    Outcome {
        code: f.code(),
        stdout,
        stderr: format!("confrac: {kind}: {}\n", f.message()),
    }
}

fn function(text: &str, flag: &str) -> CliResult<ConformableFn> {
    ConformableFn::parse(text).map_err(|e| Failure::Usage(format!("{flag}: {e}")))
}

fn line(x: f64) -> String {
    format_float(x) + "\n"
}

fn quadrature(tol: Option<f64>) -> CliResult<QuadratureConfig> {
    let cfg = match tol {
        Some(t) => QuadratureConfig::with_tolerance(t),
        None => QuadratureConfig::default(),
    };
    cfg.validate()?;
    Ok(cfg)
}

fn deriv(args: DerivArgs) -> CliResult<String> {
    let alpha = Alpha::new(args.alpha)?;
    let f = function(&args.expr, "--expr")?;
    Ok(line(frac_deriv_n(&f, alpha, args.order, args.at)?))
}

fn integrate(args: IntegrateArgs) -> CliResult<String> {
    let alpha = Alpha::new(args.alpha)?;
    let win = Interval::new(args.a, args.b)?;
    let cfg = quadrature(args.tol)?;
    let f = function(&args.expr, "--expr")?;
    Ok(line(frac_integral(&f, alpha, win.a(), win.b(), &cfg)?))
}

fn taylor(args: TaylorArgs) -> CliResult<String> {
    let alpha = Alpha::new(args.alpha)?;
    let f = function(&args.expr, "--expr")?;
    let poly = taylor_poly(&f, alpha, args.degree, args.center, args.at)?;
    if !args.remainder {
        return Ok(line(poly));
    }
    let n = i32::try_from(args.degree).map_err(|_| Failure::Usage("--degree too large".into()))?;
    let rem = taylor_remainder(
        &f,
        alpha,
        n,
        args.center,
        args.at,
        &QuadratureConfig::default(),
    )?;
    Ok(format!(
        "polynomial {}\nremainder {}\nvalue {}\n",
        format_float(poly),
        format_float(rem),
        format_float(f.value(args.at, alpha)?)
    ))
}

fn split_list(text: &str, sep: char) -> impl Iterator<Item = &str> {
    text.split(sep).map(str::trim).filter(|s| !s.is_empty())
}

fn number(text: &str, flag: &str) -> CliResult<f64> {
    text.parse::<f64>()
        .map_err(|_| Failure::Usage(format!("{flag}: `{text}` is not a number")))
}

fn solve(args: SolveArgs) -> CliResult<String> {
    let alpha = Alpha::new(args.alpha)?;
    let rhs = function(&args.rhs, "--rhs")?;
    let op = match &args.coeffs {
        None => LinearOperator::pure(alpha, args.order)?,
        Some(text) => {
            let coeffs = split_list(text, ';')
                .map(|c| function(c, "--coeffs"))
                .collect::<CliResult<Vec<_>>>()?;
            LinearOperator::new(alpha, args.order, coeffs)?
        }
    };
    let init = match &args.init {
        None => vec![0.0; args.order],
        Some(text) => split_list(text, ',')
            .map(|v| number(v, "--init"))
            .collect::<CliResult<Vec<_>>>()?,
    };
    let spec = IvpSpec::new(op, rhs, args.from, init)?;
    Ok(line(solve_full(
        &spec,
        args.to,
        args.steps,
        &QuadratureConfig::default(),
    )?))
}

fn ell(args: EllArgs) -> CliResult<String> {
    let alpha = Alpha::new(args.alpha)?;
    let win = Interval::new(args.a, args.b)?;
    let g = function(&args.g, "--g")?;
    Ok(line(
        steffensen_ell(&g, alpha, win, &QuadratureConfig::default())?.ell,
    ))
}

/// Parsed and validated inequality inputs.
struct Prepared {
    theorem: Theorem,
    f: Option<ConformableFn>,
    g: Option<ConformableFn>,
    w: Option<ConformableFn>,
    outer: Option<ConformableFn>,
    n: Option<usize>,
    bounds: Option<BoundsPair>,
    bounds2: Option<BoundsPair>,
    sup: Option<f64>,
    t: Option<f64>,
    cfg: QuadratureConfig,
}

fn required(theorem: Theorem) -> &'static [&'static str] {
    use Theorem::*;
    match theorem {
        Steffensen | Cebysev => &["--f", "--g"],
        Sandwich => &["--g"],
        RemSteffensen | RemCebysev => &["--f", "--n"],
        Hh1 | Hh2 => &["--f"],
        MmBounds => &["--f", "--n", "--m", "--M"],
        Montgomery | Ostrowski => &["--f", "--t"],
        Jensen => &["--w", "--g", "--F"],
        Gruss => &["--f", "--g", "--m", "--M", "--m2", "--M2"],
        GrussMontgomery => &["--f", "--t", "--m", "--M"],
        Hh3 => &["--f", "--m", "--M"],
    }
}

/// Bounds in the order the user gave them; `m > M` is reported when the
/// inequality is evaluated, as a failed hypothesis.
fn bounds_from(m: Option<f64>, big_m: Option<f64>, flags: &str) -> CliResult<RawBounds> {
    match (m, big_m) {
        (Some(m), Some(big_m)) if m.is_finite() && big_m.is_finite() => Ok(Some((m, big_m))),
        (Some(_), Some(_)) => Err(Failure::Usage(format!("{flags} must be finite"))),
        _ => Ok(None),
    }
}

type RawBounds = Option<(f64, f64)>;

fn prepare(inputs: &Inputs) -> CliResult<(Prepared, RawBounds, RawBounds)> {
    let theorem = inputs.ineq;
    let given = |flag: &str| match flag {
        "--f" => inputs.f.is_some(),
        "--g" => inputs.g.is_some(),
        "--w" => inputs.w.is_some(),
        "--F" => inputs.outer.is_some(),
        "--n" => inputs.n.is_some(),
        "--m" => inputs.m.is_some(),
        "--M" => inputs.big_m.is_some(),
        "--m2" => inputs.m2.is_some(),
        "--M2" => inputs.big_m2.is_some(),
        "--t" => inputs.t.is_some(),
        _ => unreachable!("{flag}"),
    };
    let missing: Vec<&str> = required(theorem)
        .iter()
        .copied()
        .filter(|f| !given(f))
        .collect();
    if !missing.is_empty() {
        return Err(Failure::Usage(format!(
            "{theorem} needs {}",
            missing.join(" ")
        )));
    }
    let parse =
        |text: &Option<String>, flag: &str| text.as_deref().map(|s| function(s, flag)).transpose();
    let b1 = bounds_from(inputs.m, inputs.big_m, "--m/--M")?;
    let b2 = bounds_from(inputs.m2, inputs.big_m2, "--m2/--M2")?;
    let sup = match (theorem, inputs.big_m) {
        (Theorem::Ostrowski, Some(m)) if !(m >= 0.0 && m.is_finite()) => {
            return Err(Failure::Usage(format!(
                "--M must be a finite bound >= 0, got {m}"
            )))
        }
        (Theorem::Ostrowski, m) => m,
        _ => None,
    };
    if let Some(t) = inputs.t {
        if !t.is_finite() {
            return Err(Failure::Usage(format!("--t must be finite, got {t}")));
        }
    }
    Ok((
        Prepared {
            theorem,
            f: parse(&inputs.f, "--f")?,
            g: parse(&inputs.g, "--g")?,
            w: parse(&inputs.w, "--w")?,
            outer: parse(&inputs.outer, "--F")?,
            n: inputs.n,
            bounds: None,
            bounds2: None,
            sup,
            t: inputs.t,
            cfg: quadrature(inputs.tol)?,
        },
        b1,
        b2,
    ))
}

impl Prepared {
    fn evaluate(&self, alpha: Alpha, win: Interval) -> confrac_core::Result<InequalityReport> {
        use Theorem::*;
        let cfg = &self.cfg;
        let f = || self.f.as_ref().expect("checked");
        let g = || self.g.as_ref().expect("checked");
        let n = || self.n.expect("checked");
        let t = || self.t.expect("checked");
        let bounds = || self.bounds.expect("checked");
        match self.theorem {
            Steffensen => steffensen(f(), g(), alpha, win, cfg),
            Sandwich => check_sandwich_lemma(g(), alpha, win, cfg),
            RemSteffensen => remainder_steffensen(f(), alpha, n(), win, cfg),
            Hh1 => hermite_hadamard_1(f(), alpha, win, cfg),
            MmBounds => remainder_mm_bounds(f(), alpha, n(), bounds(), win, cfg),
            Cebysev => cebysev(f(), g(), alpha, win, cfg),
            RemCebysev => remainder_cebysev(f(), alpha, n(), win, cfg),
            Hh2 => hermite_hadamard_2(f(), alpha, win, cfg),
            Montgomery => montgomery(f(), alpha, win, t(), cfg),
            Ostrowski => ostrowski(f(), alpha, win, t(), self.sup, cfg),
            Jensen => jensen(
                self.w.as_ref().expect("checked"),
                g(),
                self.outer.as_ref().expect("checked"),
                alpha,
                win,
                cfg,
            ),
            Gruss => gruss(
                f(),
                g(),
                alpha,
                win,
                bounds(),
                self.bounds2.expect("checked"),
                cfg,
            ),
            GrussMontgomery => gruss_montgomery(f(), alpha, win, t(), bounds(), cfg),
            Hh3 => hermite_hadamard_3(f(), alpha, win, bounds(), cfg),
        }
    }
}

/// Everything needed to evaluate instances; bound-order problems surface as
/// a hypothesis failure rather than a usage error.
fn setup(inputs: &Inputs) -> CliResult<Result<Prepared, String>> {
    let (mut p, b1, b2) = prepare(inputs)?;
    if p.theorem == Theorem::Ostrowski {
        return Ok(Ok(p));
    }
    let strict = p.theorem == Theorem::MmBounds;
    let pair = |b: RawBounds| {
        b.map(|(m, big_m)| {
            if strict {
                BoundsPair::strict(m, big_m)
            } else {
                BoundsPair::new(m, big_m)
            }
        })
        .transpose()
    };
    match (pair(b1), pair(b2)) {
        (Ok(x), Ok(y)) => {
            p.bounds = x;
            p.bounds2 = y;
            Ok(Ok(p))
        }
        (Err(e), _) | (_, Err(e)) => match Failure::from(e) {
            Failure::Hypothesis(msg) => Ok(Err(msg)),
            other => Err(other),
        },
    }
}

/// Evaluates one instance; hypothesis errors become unevaluated rows.
fn instance(
    setup: &Result<Prepared, String>,
    theorem: Theorem,
    alpha: Alpha,
    win: Interval,
) -> CliResult<Row> {
    let unevaluated = |msg: &str| Row::unevaluated(theorem, alpha.get(), win.a(), win.b(), msg);
    let p = match setup {
        Ok(p) => p,
        Err(msg) => return Ok(unevaluated(msg)),
    };
    match p.evaluate(alpha, win) {
        Ok(r) => Ok(Row::from_report(&r)),
        Err(e) => match Failure::from(e) {
            Failure::Hypothesis(msg) => Ok(unevaluated(&msg)),
            other => Err(other),
        },
    }
}

fn row_code(row: &Row) -> i32 {
    if !row.hypotheses_verified() {
        EXIT_HYPOTHESIS
    } else if !row.holds {
        EXIT_VIOLATED
    } else {
        EXIT_OK
    }
}

fn check(args: CheckArgs) -> Outcome {
    let format = if args.format.json {
        Format::Json
    } else if args.format.csv {
        Format::Csv
    } else {
        Format::Text
    };
    let theorem = args.inputs.ineq;
    let row = (|| {
        let alpha = Alpha::new(args.alpha)?;
        let win = Interval::new(args.a, args.b)?;
        let s = setup(&args.inputs)?;
        instance(&s, theorem, alpha, win)
    })();
    match row {
        Ok(row) => {
            let code = row_code(&row);
            let stdout = emit_rows(std::slice::from_ref(&row), format);
            if row.actual.is_none() {
                let msg = row.hypotheses[0].name.clone();
                return failure(&Failure::Hypothesis(msg), stdout);
            }
            Outcome {
                code,
                stdout,
                stderr: String::new(),
            }
        }
        Err(f) => failure(&f, String::new()),
    }
}

/// `start:stop:step` with `stop` included, or a comma-separated list.
fn parse_alphas(text: &str) -> CliResult<Vec<Alpha>> {
    let bad = || Failure::Usage(format!("--alphas: cannot read `{text}`"));
    let values: Vec<f64> = if text.contains(':') {
        let parts = text
            .split(':')
            .map(|p| number(p.trim(), "--alphas"))
            .collect::<CliResult<Vec<_>>>()?;
        let [start, stop, step] = parts[..] else {
            return Err(bad());
        };
        if !(step > 0.0) || !(stop >= start) {
            return Err(Failure::Usage(
                "--alphas: need step > 0 and stop >= start".into(),
            ));
        }
        let count = ((stop - start) / step + 1e-9).floor() as usize;
        if count > 100_000 {
            return Err(Failure::Usage("--alphas: too many values".into()));
        }
        // Rounded like printed output, so 0.1:1.0:0.1 gives 0.3 rather than 0.30000000000000004.
        (0..=count)
            .map(|i| {
                format_float(start + i as f64 * step)
                    .parse()
                    .expect("round trip")
            })
            .collect()
    } else {
        split_list(text, ',')
            .map(|v| number(v, "--alphas"))
            .collect::<CliResult<_>>()?
    };
    if values.is_empty() {
        return Err(bad());
    }
    values
        .into_iter()
        .map(|v| Alpha::new(v).map_err(Failure::from))
        .collect()
}

fn parse_windows(args: &SweepArgs) -> CliResult<Vec<Interval>> {
    match (&args.windows, args.a, args.b) {
        (Some(text), _, _) => {
            let windows = split_list(text, ';')
                .map(|w| {
                    let ends = split_list(w, ',')
                        .map(|v| number(v, "--windows"))
                        .collect::<CliResult<Vec<_>>>()?;
                    match ends[..] {
                        [a, b] => Ok(Interval::new(a, b)?),
                        _ => Err(Failure::Usage(format!("--windows: `{w}` is not `a,b`"))),
                    }
                })
                .collect::<CliResult<Vec<_>>>()?;
            if windows.is_empty() {
                return Err(Failure::Usage("--windows is empty".into()));
            }
            Ok(windows)
        }
        (None, Some(a), Some(b)) => Ok(vec![Interval::new(a, b)?]),
        _ => Err(Failure::Usage(
            "sweep needs --a and --b, or --windows".into(),
        )),
    }
}

fn sweep(args: SweepArgs) -> Outcome {
    let format = if args.json { Format::Json } else { Format::Csv };
    let theorem = args.inputs.ineq;
    let plan = (|| {
        Ok((
            parse_alphas(&args.alphas)?,
            parse_windows(&args)?,
            setup(&args.inputs)?,
        ))
    })();
    let (alphas, windows, s) = match plan {
        Ok(p) => p,
        Err(f) => return failure(&f, String::new()),
    };
    let mut rows = Vec::new();
    let mut errors = Vec::new();
    for win in &windows {
        for &alpha in &alphas {
            match instance(&s, theorem, alpha, *win) {
                Ok(row) => rows.push(row),
                Err(f) => errors.push(format!(
                    "alpha = {}, [{}, {}]: {}",
                    format_float(alpha.get()),
                    format_float(win.a()),
                    format_float(win.b()),
                    f.message()
                )),
            }
        }
    }
    let stdout = emit_rows(&rows, format);
    let code = if !errors.is_empty() {
        EXIT_NUMERIC
    } else {
        rows.iter()
            .map(row_code)
            .fold(EXIT_OK, |c, r| match (c, r) {
                (EXIT_HYPOTHESIS, _) | (_, EXIT_HYPOTHESIS) => EXIT_HYPOTHESIS,
                (EXIT_VIOLATED, _) | (_, EXIT_VIOLATED) => EXIT_VIOLATED,
                _ => EXIT_OK,
            })
    };
    let stderr = errors
        .iter()
        .map(|e| format!("confrac: numeric failure: {e}\n"))
        .collect();
    Outcome {
        code,
        stdout,
        stderr,
    }
}
