//! Closed-form recognition for series table entries.
//!
//! The recognizable shapes are exactly the ones the deformed tables
//! produce: exact constants, `coeff·s^k·g` monomials, and the four
//! elementary trigonometric/hyperbolic functions of `s` times a single
//! momentum generator. Recognition is verified against every stored series
//! order, so `expand ∘ recognize` is the identity wherever it succeeds.

use crate::expr::NcExpr;
use crate::generator::Generator;
use crate::scalar::Scalar;
use crate::series::Series;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TrigKind {
    Sin,
    Cos,
    Sinh,
    Cosh,
}

impl TrigKind {
    pub fn name(&self) -> &'static str {
        match self {
            TrigKind::Sin => "sin",
            TrigKind::Cos => "cos",
            TrigKind::Sinh => "sinh",
            TrigKind::Cosh => "cosh",
        }
    }

    pub fn is_odd(&self) -> bool {
        matches!(self, TrigKind::Sin | TrigKind::Sinh)
    }

    /// Taylor coefficient of `z^n`.
    pub fn taylor(&self, n: u32) -> Scalar {
        assert!(n <= 20, "factorial overflow");
        let parity_ok = if self.is_odd() {
            n % 2 == 1
        } else {
            n.is_multiple_of(2)
        };
        if !parity_ok {
            return Scalar::zero();
        }
        let mut fact: i64 = 1;
        for k in 2..=n as i64 {
            fact *= k;
        }
        let sign = match self {
            TrigKind::Sinh | TrigKind::Cosh => 1,
            TrigKind::Sin | TrigKind::Cos => {
                if (n / 2).is_multiple_of(2) {
                    1
                } else {
                    -1
                }
            }
        };
        Scalar::ratio(sign, fact)
    }

    pub fn derivative(&self) -> (Scalar, TrigKind) {
        match self {
            TrigKind::Sin => (Scalar::one(), TrigKind::Cos),
            TrigKind::Cos => (Scalar::from_int(-1), TrigKind::Sin),
            TrigKind::Sinh => (Scalar::one(), TrigKind::Cosh),
            TrigKind::Cosh => (Scalar::one(), TrigKind::Sinh),
        }
    }

    pub fn eval_f64(&self, z: f64) -> f64 {
        match self {
            TrigKind::Sin => z.sin(),
            TrigKind::Cos => z.cos(),
            TrigKind::Sinh => z.sinh(),
            TrigKind::Cosh => z.cosh(),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ClosedForm {
    /// An exact constant.
    Constant(Scalar),
    /// `coeff · s^k · g`.
    Linear {
        coeff: Scalar,
        s_power: u32,
        gen: Generator,
    },
    /// `prefactor · f(s·arg) · factor`, `factor` an optional extra letter.
    Trig {
        prefactor: Scalar,
        kind: TrigKind,
        arg: Generator,
        factor: Option<Generator>,
    },
}

/// `f(s·g)` expanded through `s^order`, as an expression in powers of `g`.
pub fn trig_expr(kind: TrigKind, g: Generator, order: u32) -> NcExpr {
    let mut e = NcExpr::zero();
    for n in 0..=order {
        let t = kind.taylor(n);
        if t.is_zero() {
            continue;
        }
        e.add_term(vec![g; n as usize], Series::s_power(n, t));
    }
    e.truncated(order)
}

/// `f(s·g) - 1` (only meaningful for the even kinds).
pub fn trig_expr_minus_one(kind: TrigKind, g: Generator, order: u32) -> NcExpr {
    trig_expr(kind, g, order).sub(&NcExpr::one().truncated(order))
}

impl ClosedForm {
    pub fn expand(&self, order: u32) -> NcExpr {
        match self {
            ClosedForm::Constant(c) => NcExpr::scalar(c.clone()),
            ClosedForm::Linear {
                coeff,
                s_power,
                gen,
            } => NcExpr::term(vec![*gen], Series::s_power(*s_power, coeff.clone())),
            ClosedForm::Trig {
                prefactor,
                kind,
                arg,
                factor,
            } => {
                let base = trig_expr(*kind, *arg, order).scale(prefactor);
                match factor {
                    None => base,
                    Some(g) => base.mul_raw(&NcExpr::gen(*g)),
                }
            }
        }
    }

    /// Try to recognize `e` as a closed form, verifying every coefficient
    /// through `order`. Distinguishing sin from sinh needs `order >= 3`,
    /// cos from cosh `order >= 2`; below that the circular kind wins.
    pub fn recognize(e: &NcExpr, order: u32) -> Option<ClosedForm> {
        if e.is_zero() {
            return Some(ClosedForm::Constant(Scalar::zero()));
        }
        // Constant?
        if e.num_terms() == 1 {
            let (w, s) = e.terms().next().unwrap();
            if w.is_empty() {
                if let Some(c) = s.as_scalar() {
                    return Some(ClosedForm::Constant(c));
                }
            } else if w.len() == 1 {
                if let Some((s_pow, 0, c)) = s.as_monomial() {
                    return Some(ClosedForm::Linear {
                        coeff: c,
                        s_power: s_pow,
                        gen: w[0],
                    });
                }
            }
        }
        // Trig of a single generator: the word g^n must carry coefficient
        // prefactor·t_n·s^n for every n <= order.
        let mut arg: Option<Generator> = None;
        for (w, _) in e.terms() {
            for &g in w {
                match arg {
                    None => arg = Some(g),
                    Some(a) if a == g => {}
                    _ => return None,
                }
            }
        }
        let arg = arg?;
        for kind in [TrigKind::Cos, TrigKind::Cosh, TrigKind::Sin, TrigKind::Sinh] {
            if let Some(pref) = match_trig(e, kind, arg, order) {
                return Some(ClosedForm::Trig {
                    prefactor: pref,
                    kind,
                    arg,
                    factor: None,
                });
            }
        }
        None
    }

    /// Render with a concrete argument scale already fixed to `s`.
    pub fn display_str(&self) -> String {
        match self {
            ClosedForm::Constant(c) => format!("{c}"),
            ClosedForm::Linear {
                coeff,
                s_power,
                gen,
            } => {
                let s_str = match s_power {
                    0 => String::new(),
                    1 => "*s".to_string(),
                    k => format!("*s^{k}"),
                };
                format!("{coeff}{s_str}*{gen}")
            }
            ClosedForm::Trig {
                prefactor,
                kind,
                arg,
                factor,
            } => {
                let f = match factor {
                    None => String::new(),
                    Some(g) => format!("*{g}"),
                };
                format!("{prefactor}*{}(s*{arg}){f}", kind.name())
            }
        }
    }
}

fn match_trig(e: &NcExpr, kind: TrigKind, arg: Generator, order: u32) -> Option<Scalar> {
    // Prefactor from the lowest nonzero Taylor order.
    let n0 = if kind.is_odd() { 1 } else { 0 };
    let lead = e.coeff(&vec![arg; n0 as usize]);
    let (s_pow, c_pow, c0) = lead.as_monomial()?;
    if s_pow != n0 || c_pow != 0 {
        return None;
    }
    let t0 = kind.taylor(n0);
    let pref = &c0 * &t0.recip();
    // Verify every order.
    for n in 0..=order {
        let want = Series::s_power(n, &kind.taylor(n) * &pref);
        let got = e.coeff(&vec![arg; n as usize]);
        if !got.eq_to_order(&want, order) {
            return None;
        }
    }
    // No stray words of mixed length.
    for (w, _) in e.terms() {
        if w.iter().any(|&g| g != arg) {
            return None;
        }
    }
    Some(pref)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generator::Generator::*;

    #[test]
    fn taylor_values() {
        assert_eq!(TrigKind::Cos.taylor(0), Scalar::one());
        assert_eq!(TrigKind::Cos.taylor(2), Scalar::ratio(-1, 2));
        assert_eq!(TrigKind::Cos.taylor(4), Scalar::ratio(1, 24));
        assert_eq!(TrigKind::Sin.taylor(1), Scalar::one());
        assert_eq!(TrigKind::Sin.taylor(3), Scalar::ratio(-1, 6));
        assert_eq!(TrigKind::Sinh.taylor(3), Scalar::ratio(1, 6));
        assert_eq!(TrigKind::Cosh.taylor(8), Scalar::ratio(1, 40320));
        assert!(TrigKind::Cos.taylor(3).is_zero());
    }

    #[test]
    fn recognizes_scaled_cosine() {
        // {0: i, 2: -i/2 p3^2, 4: i/24 p3^4} -> i*cos(s*p3)
        let e = trig_expr(TrigKind::Cos, Px(3), 8).scale(&Scalar::i());
        let cf = ClosedForm::recognize(&e, 8).unwrap();
        assert_eq!(
            cf,
            ClosedForm::Trig {
                prefactor: Scalar::i(),
                kind: TrigKind::Cos,
                arg: Px(3),
                factor: None
            }
        );
        assert_eq!(cf.expand(8), e);
    }

    #[test]
    fn recognizes_constant_and_linear() {
        let c = ClosedForm::recognize(&NcExpr::scalar(Scalar::minus_i()), 8).unwrap();
        assert_eq!(c, ClosedForm::Constant(Scalar::minus_i()));
        let lin = NcExpr::term(vec![Px(2)], Series::s_power(1, Scalar::i()));
        assert_eq!(
            ClosedForm::recognize(&lin, 8).unwrap(),
            ClosedForm::Linear {
                coeff: Scalar::i(),
                s_power: 1,
                gen: Px(2)
            }
        );
    }

    #[test]
    fn rejects_irregular_series() {
        // i*s*p0 + s^2*p0^3 does not match any library shape.
        let mut e = NcExpr::term(vec![Px(0)], Series::s_power(1, Scalar::i()));
        e.add_term(vec![Px(0); 3], Series::s_power(2, Scalar::one()));
        assert_eq!(ClosedForm::recognize(&e, 8), None);
    }

    #[test]
    fn distinguishes_circular_from_hyperbolic() {
        let sin = trig_expr(TrigKind::Sin, Px(0), 8);
        let sinh = trig_expr(TrigKind::Sinh, Px(0), 8);
        let a = ClosedForm::recognize(&sin, 8).unwrap();
        let b = ClosedForm::recognize(&sinh, 8).unwrap();
        match (a, b) {
            (
                ClosedForm::Trig {
                    kind: TrigKind::Sin,
                    ..
                },
                ClosedForm::Trig {
                    kind: TrigKind::Sinh,
                    ..
                },
            ) => {}
            other => panic!("wrong kinds: {other:?}"),
        }
    }

    #[test]
    fn roundtrip_on_expansion() {
        for kind in [TrigKind::Sin, TrigKind::Cos, TrigKind::Sinh, TrigKind::Cosh] {
            let cf = ClosedForm::Trig {
                prefactor: Scalar::imag_ratio(-1, 1),
                kind,
                arg: Px(1),
                factor: None,
            };
            let e = cf.expand(8);
            assert_eq!(ClosedForm::recognize(&e, 8), Some(cf));
        }
    }
}
