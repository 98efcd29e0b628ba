use super::{Expr, Func};

impl Expr {
    /// Exact classical derivative d/dt. `alpha` is treated as a constant.
    ///
    /// `abs` differentiates to `sgn(u)*u'`, taking the value 0 where `u = 0`.
    pub fn diff(&self) -> Expr {
        match self {
            Expr::Num(_) | Expr::Alpha | Expr::Pi | Expr::E => Expr::num(0.0),
            Expr::T => Expr::num(1.0),
            Expr::Neg(a) => Expr::neg(a.diff()),
            Expr::Add(a, b) => Expr::add(a.diff(), b.diff()),
            Expr::Sub(a, b) => Expr::sub(a.diff(), b.diff()),
            Expr::Mul(a, b) => Expr::add(
                Expr::mul(a.diff(), (**b).clone()),
                Expr::mul((**a).clone(), b.diff()),
            ),
            Expr::Div(a, b) => {
                let (a, b) = (&**a, &**b);
                if !b.depends_on_t() {
                    return Expr::div(a.diff(), b.clone());
                }
                Expr::div(
                    Expr::sub(
                        Expr::mul(a.diff(), b.clone()),
                        Expr::mul(a.clone(), b.diff()),
                    ),
                    Expr::pow(b.clone(), Expr::num(2.0)),
                )
            }
            Expr::Pow(a, b) => diff_pow(a, b),
            Expr::Call(f, a) => {
                let inner = a.diff();
                let a = (**a).clone();
                let outer = match f {
                    Func::Sin => Expr::call(Func::Cos, a),
                    Func::Cos => Expr::neg(Expr::call(Func::Sin, a)),
                    Func::Exp => Expr::call(Func::Exp, a),
                    Func::Ln => return Expr::div(inner, a),
                    Func::Sqrt => {
                        return Expr::div(
                            inner,
                            Expr::mul(Expr::num(2.0), Expr::call(Func::Sqrt, a)),
                        )
                    }
                    Func::Abs => Expr::call(Func::Sgn, a),
                    Func::Sgn => return Expr::num(0.0),
                };
                Expr::mul(outer, inner)
            }
        }
    }

    /// One conformable derivative, `t^(1 - alpha) * d/dt`.
    pub fn conformable_diff(&self) -> Expr {
        Expr::mul(
            Expr::pow(Expr::T, Expr::sub(Expr::num(1.0), Expr::Alpha)),
            self.diff(),
        )
    }
}

fn diff_pow(base: &Expr, exp: &Expr) -> Expr {
    let db = base.diff();
    match (base.depends_on_t(), exp.depends_on_t()) {
        (_, false) => Expr::mul(
            Expr::mul(
                exp.clone(),
                Expr::pow(base.clone(), Expr::sub(exp.clone(), Expr::num(1.0))),
            ),
            db,
        ),
        (false, true) => Expr::mul(
            Expr::mul(
                Expr::pow(base.clone(), exp.clone()),
                Expr::call(Func::Ln, base.clone()),
            ),
            exp.diff(),
        ),
        (true, true) => Expr::mul(
            Expr::pow(base.clone(), exp.clone()),
            Expr::add(
                Expr::mul(exp.diff(), Expr::call(Func::Ln, base.clone())),
                Expr::div(Expr::mul(exp.clone(), db), base.clone()),
            ),
        ),
    }
}
