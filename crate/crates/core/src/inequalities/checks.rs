use super::{
    check_values, sample, BoundsPair, HypothesisCheck, InequalityReport, Monotonicity, Property,
    SteffensenEll, Theorem, Verification, DEFAULT_GRID, SUP_GRID, SUP_INFLATION,
};
use crate::calculus::{
    frac_deriv_n, frac_integral, weighted_integral, Alpha, ConformableFn, Interval,
    QuadratureConfig,
};
use crate::error::{Error, Result};
use crate::taylor::remainder_integral;

fn factorial(n: usize) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * k as f64)
}

struct Ctx<'a> {
    alpha: Alpha,
    win: Interval,
    cfg: &'a QuadratureConfig,
    points: Vec<f64>,
}

impl<'a> Ctx<'a> {
    fn new(alpha: Alpha, win: Interval, cfg: &'a QuadratureConfig) -> Self {
        Ctx {
            alpha,
            win,
            cfg,
            points: win.grid(DEFAULT_GRID),
        }
    }

    /// `(b^α - a^α)/α`.
    fn x(&self) -> f64 {
        self.win.weighted_length(self.alpha)
    }

    fn integral(&self, f: &ConformableFn) -> Result<f64> {
        frac_integral(f, self.alpha, self.win.a(), self.win.b(), self.cfg)
    }

    fn integral_on(&self, f: &ConformableFn, lo: f64, hi: f64) -> Result<f64> {
        frac_integral(f, self.alpha, lo, hi, self.cfg)
    }

    fn product_integral(&self, f: &ConformableFn, g: &ConformableFn) -> Result<f64> {
        let a = self.alpha;
        weighted_integral(
            |t| Ok(f.value(t, a)? * g.value(t, a)?),
            a,
            self.win.a(),
            self.win.b(),
            self.cfg,
        )
    }

    fn d(&self, f: &ConformableFn, k: usize, t: f64) -> Result<f64> {
        frac_deriv_n(f, self.alpha, k, t)
    }

    fn samples(&self, f: &ConformableFn, k: usize) -> Result<Vec<f64>> {
        sample(|t| self.d(f, k, t), &self.points)
    }

    fn hypothesis(&self, name: &str, values: &[f64], property: Property) -> HypothesisCheck {
        HypothesisCheck::from_verification(
            name,
            check_values(&self.points, values, property),
            DEFAULT_GRID,
        )
    }

    fn check(
        &self,
        name: &str,
        f: &ConformableFn,
        k: usize,
        property: Property,
    ) -> Result<HypothesisCheck> {
        Ok(self.hypothesis(name, &self.samples(f, k)?, property))
    }

    fn classify(&self, f: &ConformableFn, k: usize) -> Result<Monotonicity> {
        Ok(Monotonicity::classify(&self.points, &self.samples(f, k)?))
    }

    fn report(
        &self,
        theorem: Theorem,
        hypotheses: Vec<HypothesisCheck>,
        lower: Option<f64>,
        actual: f64,
        upper: Option<f64>,
    ) -> InequalityReport {
        InequalityReport::new(
            theorem, self.alpha, self.win, hypotheses, lower, actual, upper,
        )
    }

    /// Clamp a window length into `[0, b-a]`, noting when it moved.
    fn clamp_ell(&self, ell: f64, notes: &mut Vec<String>) -> f64 {
        let len = self.win.len();
        let slack = 1e-12 * (1.0 + len);
        if ell < -slack || ell > len + slack || !ell.is_finite() {
            notes.push(format!("ell = {ell} lies outside [0, {len}]; clamped"));
        }
        if ell.is_finite() {
            ell.clamp(0.0, len)
        } else {
            0.0
        }
    }
}

fn monotone_name(subject: &str, m: Monotonicity) -> String {
    match m {
        Monotonicity::Constant => format!("{subject} constant"),
        Monotonicity::Increasing => format!("{subject} increasing"),
        Monotonicity::Decreasing => format!("{subject} decreasing"),
        Monotonicity::Neither => format!("{subject} monotone"),
    }
}

fn monotone_check(subject: &str, m: Monotonicity) -> Result<HypothesisCheck> {
    if !m.is_monotone() {
        return Err(Error::Hypothesis(format!(
            "{subject} is not monotone on the window"
        )));
    }
    Ok(HypothesisCheck {
        name: monotone_name(subject, m),
        verified: true,
        witness: None,
        grid: DEFAULT_GRID,
    })
}

fn dname(k: usize) -> String {
    match k {
        0 => "f".to_string(),
        1 => "D_alpha f".to_string(),
        _ => format!("D^{k}_alpha f"),
    }
}

fn raw_ell(ctx: &Ctx, g: &ConformableFn) -> Result<f64> {
    Ok(ctx.win.len() / ctx.x() * ctx.integral(g)?)
}

/// `ℓ` for a weight `g` with values in `[0, 1]`.
pub fn steffensen_ell(
    g: &ConformableFn,
    alpha: Alpha,
    win: Interval,
    cfg: &QuadratureConfig,
) -> Result<SteffensenEll> {
    let ctx = Ctx::new(alpha, win, cfg);
    let v: Verification = check_values(&ctx.points, &ctx.samples(g, 0)?, Property::Range01);
    if !v.verified {
        return Err(Error::Hypothesis(format!(
            "g must take values in [0, 1]; fails at t = {}",
            v.witness.unwrap_or(f64::NAN)
        )));
    }
    let ell = raw_ell(&ctx, g)?.clamp(0.0, win.len());
    Ok(SteffensenEll {
        ell,
        alpha,
        window: win,
    })
}

/// `∫_{b-ℓ}^b d_α ≤ ∫_a^b g d_α ≤ ∫_a^{a+ℓ} d_α` for `0 ≤ g ≤ 1`.
pub fn check_sandwich_lemma(
    g: &ConformableFn,
    alpha: Alpha,
    win: Interval,
    cfg: &QuadratureConfig,
) -> Result<InequalityReport> {
    let ctx = Ctx::new(alpha, win, cfg);
    let hyp = vec![ctx.check("0 <= g <= 1", g, 0, Property::Range01)?];
    let mut notes = Vec::new();
    let ell = ctx.clamp_ell(raw_ell(&ctx, g)?, &mut notes);
    let (a, b) = (win.a(), win.b());
    let lower = alpha.span(b - ell, b);
    let upper = alpha.span(a, a + ell);
    let actual = ctx.integral(g)?;
    let mut r = ctx.report(Theorem::Sandwich, hyp, Some(lower), actual, Some(upper));
    r.notes = notes;
    r.ell = Some(ell);
    Ok(r)
}

/// `∫_{b-ℓ}^b f d_α ≤ ∫_a^b f g d_α ≤ ∫_a^{a+ℓ} f d_α` for decreasing `f ≥ 0`
/// and `0 ≤ g ≤ 1`. Computed even when a hypothesis fails.
pub fn steffensen(
    f: &ConformableFn,
    g: &ConformableFn,
    alpha: Alpha,
    win: Interval,
    cfg: &QuadratureConfig,
) -> Result<InequalityReport> {
    let ctx = Ctx::new(alpha, win, cfg);
    let fs = ctx.samples(f, 0)?;
    let hyp = vec![
        ctx.hypothesis("f >= 0", &fs, Property::Nonnegative),
        ctx.hypothesis("f decreasing", &fs, Property::Decreasing),
        ctx.check("0 <= g <= 1", g, 0, Property::Range01)?,
    ];
    let mut notes = Vec::new();
    let ell = ctx.clamp_ell(raw_ell(&ctx, g)?, &mut notes);
    let (a, b) = (win.a(), win.b());
    let lower = ctx.integral_on(f, b - ell, b)?;
    let upper = ctx.integral_on(f, a, a + ell)?;
    let actual = ctx.product_integral(f, g)?;
    let mut r = ctx.report(Theorem::Steffensen, hyp, Some(lower), actual, Some(upper));
    r.notes = notes;
    r.ell = Some(ell);
    Ok(r)
}

/// Window version of the remainder bound with `ℓ = (b-a)/(n+2)`, for
/// `D^{n+1}_α f` increasing and `D^n_α f` decreasing. The middle term is
/// `(n+1)! (α/(b^α-a^α))^{n+1} ∫_a^b R_n(a, s) d_α s`.
pub fn remainder_steffensen(
    f: &ConformableFn,
    alpha: Alpha,
    n: usize,
    win: Interval,
    cfg: &QuadratureConfig,
) -> Result<InequalityReport> {
    let ctx = Ctx::new(alpha, win, cfg);
    let hyp = vec![
        ctx.check(
            &format!("{} increasing", dname(n + 1)),
            f,
            n + 1,
            Property::Increasing,
        )?,
        ctx.check(
            &format!("{} decreasing", dname(n)),
            f,
            n,
            Property::Decreasing,
        )?,
    ];
    let (a, b) = (win.a(), win.b());
    let ell = win.len() / (n as f64 + 2.0);
    let lower = ctx.d(f, n, a + ell)? - ctx.d(f, n, a)?;
    let upper = ctx.d(f, n, b)? - ctx.d(f, n, b - ell)?;
    let rem = remainder_integral(f, alpha, n as i32, a, a, b, cfg)?;
    let actual = factorial(n + 1) * ctx.x().powi(-(n as i32 + 1)) * rem;
    let mut r = ctx.report(
        Theorem::RemSteffensen,
        hyp,
        Some(lower),
        actual,
        Some(upper),
    );
    r.ell = Some(ell);
    Ok(r)
}

/// `f((a+b)/2) ≤ weighted mean of f ≤ f(a) + f(b) - f((a+b)/2)` for
/// `D_α f` increasing and `f` decreasing.
pub fn hermite_hadamard_1(
    f: &ConformableFn,
    alpha: Alpha,
    win: Interval,
    cfg: &QuadratureConfig,
) -> Result<InequalityReport> {
    let ctx = Ctx::new(alpha, win, cfg);
    let hyp = vec![
        ctx.check("D_alpha f increasing", f, 1, Property::Increasing)?,
        ctx.check("f decreasing", f, 0, Property::Decreasing)?,
    ];
    let (a, b, mid) = (win.a(), win.b(), win.midpoint());
    let fm = f.value(mid, alpha)?;
    let upper = f.value(a, alpha)? + f.value(b, alpha)? - fm;
    let actual = ctx.integral(f)? / ctx.x();
    Ok(ctx.report(Theorem::Hh1, hyp, Some(fm), actual, Some(upper)))
}

/// Bounds on `∫_a^b R_n(a, t) d_α t` when `m ≤ D^{n+1}_α f ≤ M`, `m < M`.
pub fn remainder_mm_bounds(
    f: &ConformableFn,
    alpha: Alpha,
    n: usize,
    bounds: BoundsPair,
    win: Interval,
    cfg: &QuadratureConfig,
) -> Result<InequalityReport> {
    let BoundsPair { m, big_m } = BoundsPair::strict(bounds.m, bounds.big_m)?;
    let ctx = Ctx::new(alpha, win, cfg);
    let hyp = vec![ctx.check(
        &format!("m <= {} <= M", dname(n + 1)),
        f,
        n + 1,
        Property::Bounded { m, big_m },
    )?];
    let (a, b) = (win.a(), win.b());
    let x = ctx.x();
    let k = n as i32 + 2;
    let fact = factorial(n + 2);
    let rise = ctx.d(f, n, b)? - ctx.d(f, n, a)?;
    let mut notes = Vec::new();
    let ell = ctx.clamp_ell(win.len() / (x * (big_m - m)) * (rise - m * x), &mut notes);
    let lower = m / fact * x.powi(k) + (big_m - m) / fact * alpha.span(b - ell, b).powi(k);
    let upper = big_m / fact * x.powi(k) + (m - big_m) / fact * alpha.span(a + ell, b).powi(k);
    let actual = remainder_integral(f, alpha, n as i32, a, a, b, cfg)?;
    let mut r = ctx.report(Theorem::MmBounds, hyp, Some(lower), actual, Some(upper));
    r.notes = notes;
    r.ell = Some(ell);
    Ok(r)
}

/// `∫ f g d_α` against `(α/(b^α-a^α)) ∫ f d_α ∫ g d_α`; the direction follows
/// the detected monotonicity of `f` and `g`.
pub fn cebysev(
    f: &ConformableFn,
    g: &ConformableFn,
    alpha: Alpha,
    win: Interval,
    cfg: &QuadratureConfig,
) -> Result<InequalityReport> {
    let ctx = Ctx::new(alpha, win, cfg);
    let mf = ctx.classify(f, 0)?;
    let mg = ctx.classify(g, 0)?;
    let hyp = vec![monotone_check("f", mf)?, monotone_check("g", mg)?];
    let bound = ctx.integral(f)? * ctx.integral(g)? / ctx.x();
    let actual = ctx.product_integral(f, g)?;
    use Monotonicity::*;
    let opposite = matches!(
        (mf, mg),
        (Increasing, Decreasing) | (Decreasing, Increasing)
    );
    Ok(if opposite {
        ctx.report(Theorem::Cebysev, hyp, None, actual, Some(bound))
    } else {
        ctx.report(Theorem::Cebysev, hyp, Some(bound), actual, None)
    })
}

/// For `D^{n+1}_α f` increasing:
/// `(D^{n+1}f(a) - D^{n+1}f(b)) X^{n+2}/(n+2)! ≤ ∫ R_n(a,t) d_α t - (D^n f(b) - D^n f(a)) X^{n+1}/(n+2)! ≤ 0`
/// with `X = (b^α-a^α)/α`. Reversed when decreasing.
pub fn remainder_cebysev(
    f: &ConformableFn,
    alpha: Alpha,
    n: usize,
    win: Interval,
    cfg: &QuadratureConfig,
) -> Result<InequalityReport> {
    let ctx = Ctx::new(alpha, win, cfg);
    let mono = ctx.classify(f, n + 1)?;
    let hyp = vec![monotone_check(&dname(n + 1), mono)?];
    let (a, b) = (win.a(), win.b());
    let x = ctx.x();
    let fact = factorial(n + 2);
    let k = n as i32 + 1;
    let rem = remainder_integral(f, alpha, n as i32, a, a, b, cfg)?;
    let actual = rem - (ctx.d(f, n, b)? - ctx.d(f, n, a)?) / fact * x.powi(k);
    let end = (ctx.d(f, n + 1, a)? - ctx.d(f, n + 1, b)?) / fact * x.powi(k + 1);
    Ok(if mono == Monotonicity::Decreasing {
        ctx.report(Theorem::RemCebysev, hyp, Some(0.0), actual, Some(end))
    } else {
        ctx.report(Theorem::RemCebysev, hyp, Some(end), actual, Some(0.0))
    })
}

/// Weighted mean of `f` against `(f(a) + f(b))/2`, direction by the
/// monotonicity of `D_α f`.
pub fn hermite_hadamard_2(
    f: &ConformableFn,
    alpha: Alpha,
    win: Interval,
    cfg: &QuadratureConfig,
) -> Result<InequalityReport> {
    let ctx = Ctx::new(alpha, win, cfg);
    let mono = ctx.classify(f, 1)?;
    let hyp = vec![monotone_check("D_alpha f", mono)?];
    let ends = 0.5 * (f.value(win.a(), alpha)? + f.value(win.b(), alpha)?);
    let actual = ctx.integral(f)? / ctx.x();
    Ok(if mono == Monotonicity::Decreasing {
        ctx.report(Theorem::Hh2, hyp, Some(ends), actual, None)
    } else {
        ctx.report(Theorem::Hh2, hyp, None, actual, Some(ends))
    })
}

/// Right-hand side of the Montgomery identity at `t`:
/// `mean(f) + (α/(b^α-a^α)) ∫_a^b p(t,s) D_α f(s) d_α s`.
fn montgomery_rhs(ctx: &Ctx, f: &ConformableFn, t: f64) -> Result<f64> {
    let (alpha, a, b) = (ctx.alpha, ctx.win.a(), ctx.win.b());
    let left = weighted_integral(
        |s| Ok(alpha.span(a, s) * frac_deriv_n(f, alpha, 1, s)?),
        alpha,
        a,
        t,
        ctx.cfg,
    )?;
    let right = weighted_integral(
        |s| Ok(alpha.span(b, s) * frac_deriv_n(f, alpha, 1, s)?),
        alpha,
        t,
        b,
        ctx.cfg,
    )?;
    let x = ctx.x();
    Ok(ctx.integral(f)? / x + (left + right) / x)
}

fn check_in_window(win: Interval, t: f64) -> Result<()> {
    if win.contains(t) {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "t = {t} outside [{}, {}]",
            win.a(),
            win.b()
        )))
    }
}

/// `f(t)` minus the right-hand side of the Montgomery identity.
pub fn montgomery_residual(
    f: &ConformableFn,
    alpha: Alpha,
    win: Interval,
    t: f64,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    check_in_window(win, t)?;
    let ctx = Ctx::new(alpha, win, cfg);
    Ok(f.value(t, alpha)? - montgomery_rhs(&ctx, f, t)?)
}

/// The Montgomery identity as a report with `lower = upper = RHS` and
/// `actual = f(t)`.
pub fn montgomery(
    f: &ConformableFn,
    alpha: Alpha,
    win: Interval,
    t: f64,
    cfg: &QuadratureConfig,
) -> Result<InequalityReport> {
    check_in_window(win, t)?;
    let ctx = Ctx::new(alpha, win, cfg);
    let rhs = montgomery_rhs(&ctx, f, t)?;
    Ok(ctx.report(
        Theorem::Montgomery,
        Vec::new(),
        Some(rhs),
        f.value(t, alpha)?,
        Some(rhs),
    ))
}

/// `|f(t) - mean(f)| ≤ M/(2α(b^α-a^α)) [(t^α-a^α)^2 + (b^α-t^α)^2]` with
/// `M = sup |D_α f|`. Without `sup`, `M` is estimated on a grid and inflated.
pub fn ostrowski(
    f: &ConformableFn,
    alpha: Alpha,
    win: Interval,
    t: f64,
    sup: Option<f64>,
    cfg: &QuadratureConfig,
) -> Result<InequalityReport> {
    check_in_window(win, t)?;
    let ctx = Ctx::new(alpha, win, cfg);
    let mut notes = Vec::new();
    let (big_m, hyp) = match sup {
        Some(m) => {
            if !(m >= 0.0 && m.is_finite()) {
                return Err(Error::InvalidArgument(format!(
                    "sup bound must be >= 0, got {m}"
                )));
            }
            let h = ctx.check(
                "|D_alpha f| <= M",
                f,
                1,
                Property::Bounded { m: -m, big_m: m },
            )?;
            (m, h)
        }
        None => {
            let pts = win.grid(SUP_GRID);
            let vals = sample(|s| frac_deriv_n(f, alpha, 1, s), &pts)?;
            let max = vals.iter().fold(0.0f64, |m, v| m.max(v.abs()));
            let m = max * SUP_INFLATION;
            notes.push(format!(
                "M = {m} estimated from a {SUP_GRID}-interval grid, inflated by 1%"
            ));
            if max == 0.0 {
                notes.push("D_alpha f vanished on the grid; the estimate may be unreliable".into());
            }
            let h = HypothesisCheck {
                name: "|D_alpha f| <= M".into(),
                verified: true,
                witness: None,
                grid: SUP_GRID,
            };
            (m, h)
        }
    };
    let (a, b, al) = (
        win.a().powf(alpha.get()),
        win.b().powf(alpha.get()),
        alpha.get(),
    );
    let tp = t.powf(al);
    let big_b = b - a;
    let upper = big_m / (2.0 * al * big_b) * ((tp - a).powi(2) + (b - tp).powi(2));
    let actual = (f.value(t, alpha)? - ctx.integral(f)? / ctx.x()).abs();
    let mut r = ctx.report(Theorem::Ostrowski, vec![hyp], None, actual, Some(upper));
    r.notes = notes;
    Ok(r)
}

/// `F(∫ w g d_α / ∫ w d_α) ≤ ∫ w F(g) d_α / ∫ w d_α` for `w, g ≥ 0` and `F`
/// convex on the range of `g`.
pub fn jensen(
    w: &ConformableFn,
    g: &ConformableFn,
    outer: &ConformableFn,
    alpha: Alpha,
    win: Interval,
    cfg: &QuadratureConfig,
) -> Result<InequalityReport> {
    let ctx = Ctx::new(alpha, win, cfg);
    let gs = ctx.samples(g, 0)?;
    let lo = gs.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = gs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let convex = if hi > lo {
        let pts: Vec<f64> = (0..=DEFAULT_GRID)
            .map(|i| lo + (hi - lo) * i as f64 / DEFAULT_GRID as f64)
            .collect();
        let vals = sample(|x| outer.value(x, alpha), &pts)?;
        check_values(&pts, &vals, Property::ConvexOuter)
    } else {
        Verification {
            verified: true,
            witness: None,
        }
    };
    let hyp = vec![
        ctx.check("w >= 0", w, 0, Property::Nonnegative)?,
        ctx.hypothesis("g >= 0", &gs, Property::Nonnegative),
        HypothesisCheck::from_verification("F convex on the range of g", convex, DEFAULT_GRID),
    ];
    let total = ctx.integral(w)?;
    if !(total > 0.0) {
        return Err(Error::Hypothesis(format!(
            "weight integral must be positive, got {total}"
        )));
    }
    let mean = ctx.product_integral(w, g)? / total;
    let lower = outer.value(mean, alpha)?;
    let actual = weighted_integral(
        |t| Ok(w.value(t, alpha)? * outer.value(g.value(t, alpha)?, alpha)?),
        alpha,
        win.a(),
        win.b(),
        cfg,
    )? / total;
    Ok(ctx.report(Theorem::Jensen, hyp, Some(lower), actual, None))
}

/// `|mean(fg) - mean(f) mean(g)| ≤ (M1-m1)(M2-m2)/4` under the weighted mean.
pub fn gruss(
    f: &ConformableFn,
    g: &ConformableFn,
    alpha: Alpha,
    win: Interval,
    f_bounds: BoundsPair,
    g_bounds: BoundsPair,
    cfg: &QuadratureConfig,
) -> Result<InequalityReport> {
    let f_bounds = BoundsPair::new(f_bounds.m, f_bounds.big_m)?;
    let g_bounds = BoundsPair::new(g_bounds.m, g_bounds.big_m)?;
    let ctx = Ctx::new(alpha, win, cfg);
    let hyp = vec![
        ctx.check(
            "m1 <= f <= M1",
            f,
            0,
            Property::Bounded {
                m: f_bounds.m,
                big_m: f_bounds.big_m,
            },
        )?,
        ctx.check(
            "m2 <= g <= M2",
            g,
            0,
            Property::Bounded {
                m: g_bounds.m,
                big_m: g_bounds.big_m,
            },
        )?,
    ];
    let x = ctx.x();
    let actual =
        (ctx.product_integral(f, g)? / x - ctx.integral(f)? * ctx.integral(g)? / (x * x)).abs();
    let upper = 0.25 * f_bounds.width() * g_bounds.width();
    Ok(ctx.report(Theorem::Gruss, hyp, None, actual, Some(upper)))
}

fn derivative_bounds(
    ctx: &Ctx,
    f: &ConformableFn,
    bounds: BoundsPair,
) -> Result<(BoundsPair, HypothesisCheck)> {
    let b = BoundsPair::new(bounds.m, bounds.big_m)?;
    let h = ctx.check(
        "m <= D_alpha f <= M",
        f,
        1,
        Property::Bounded {
            m: b.m,
            big_m: b.big_m,
        },
    )?;
    Ok((b, h))
}

/// `|f(t) - mean(f) - (2t^α-a^α-b^α)/(2(b^α-a^α)) (f(b)-f(a))| ≤ X(M-m)/4`
/// for `m ≤ D_α f ≤ M`.
pub fn gruss_montgomery(
    f: &ConformableFn,
    alpha: Alpha,
    win: Interval,
    t: f64,
    bounds: BoundsPair,
    cfg: &QuadratureConfig,
) -> Result<InequalityReport> {
    check_in_window(win, t)?;
    let ctx = Ctx::new(alpha, win, cfg);
    let (bounds, hyp) = derivative_bounds(&ctx, f, bounds)?;
    let al = alpha.get();
    let (ap, bp, tp) = (win.a().powf(al), win.b().powf(al), t.powf(al));
    let x = ctx.x();
    let coef = (2.0 * tp - ap - bp) / (2.0 * (bp - ap));
    let fa = f.value(win.a(), alpha)?;
    let fb = f.value(win.b(), alpha)?;
    let actual = (f.value(t, alpha)? - ctx.integral(f)? / x - coef * (fb - fa)).abs();
    let upper = 0.25 * x * bounds.width();
    Ok(ctx.report(
        Theorem::GrussMontgomery,
        vec![hyp],
        None,
        actual,
        Some(upper),
    ))
}

/// `|(f(a)+f(b))/2 - mean(f)| ≤ X(M-m)/4` for `m ≤ D_α f ≤ M`.
pub fn hermite_hadamard_3(
    f: &ConformableFn,
    alpha: Alpha,
    win: Interval,
    bounds: BoundsPair,
    cfg: &QuadratureConfig,
) -> Result<InequalityReport> {
    let ctx = Ctx::new(alpha, win, cfg);
    let (bounds, hyp) = derivative_bounds(&ctx, f, bounds)?;
    let x = ctx.x();
    let ends = 0.5 * (f.value(win.a(), alpha)? + f.value(win.b(), alpha)?);
    let actual = (ends - ctx.integral(f)? / x).abs();
    let upper = 0.25 * x * bounds.width();
    Ok(ctx.report(Theorem::Hh3, vec![hyp], None, actual, Some(upper)))
}
