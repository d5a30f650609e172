//! Nonrelativistic contraction of phase-space tables.
//!
//! The rescaling trades `x_0` for `c·t` and `p_0` for `π_0/c`, keeps the
//! spatial variables, and re-expresses the deformation parameter per case:
//! unchanged for the rotation-gamma carrier, `ξ = ξ̂/c` for the
//! rotation-zero carrier (each `s` power gains one `c`), `ξ = c·ξ̄` for the
//! boost carrier (each `s` power loses one). The limit keeps the `c^0`
//! grade, drops negative powers and treats any surviving positive power as
//! an error. `c` is symbolic throughout; limits are exact leading-order
//! extraction.

use crate::double::{PhaseSpaceTable, Regime};
use crate::error::{EngineError, Result};
use crate::expr::NcExpr;
use crate::generator::Generator;
use crate::poincare::{CarrierCase, TwistCarrier};
use crate::series::Series;
use std::collections::BTreeMap;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ContractionScheme {
    pub case: CarrierCase,
}

impl ContractionScheme {
    pub fn for_carrier(carrier: &TwistCarrier) -> Self {
        ContractionScheme { case: carrier.case }
    }

    /// Power of `c` acquired by each power of `s` under the parameter map.
    pub fn s_shift(&self) -> i32 {
        match self.case {
            CarrierCase::RotationGamma => 0,
            CarrierCase::RotationZero => 1,
            CarrierCase::Boost => -1,
        }
    }

    /// `(c-grade, image letters)` of one variable.
    fn map_gen(g: Generator) -> (i32, Vec<Generator>) {
        match g {
            Generator::X(0) => (1, vec![Generator::T]),
            Generator::X(i) => (0, vec![Generator::Y(i)]),
            Generator::Px(0) => (-1, vec![Generator::Pi(0)]),
            Generator::Px(i) => (0, vec![Generator::Pi(i)]),
            other => (0, vec![other]),
        }
    }
}

/// Rewrite a relativistic table in the Galilean variables with explicit
/// `c` grading on every coefficient.
pub fn rescale(table: &PhaseSpaceTable, scheme: &ContractionScheme) -> Result<PhaseSpaceTable> {
    if table.regime != Regime::Relativistic {
        return Err(EngineError::SchemeMismatch {
            expected: "relativistic",
            got: "galilean",
        });
    }
    if table.carrier.case != scheme.case {
        return Err(EngineError::SchemeMismatch {
            expected: scheme.case.numeral(),
            got: table.carrier.case.numeral(),
        });
    }
    let shift = scheme.s_shift();
    let mut out = PhaseSpaceTable {
        carrier: table.carrier,
        regime: Regime::CGraded(scheme.case),
        order: table.order,
        entries: BTreeMap::new(),
    };
    for (&(a, b), entry) in table.entries.iter() {
        let (ga, la) = ContractionScheme::map_gen(a);
        let (gb, lb) = ContractionScheme::map_gen(b);
        assert!(la.len() == 1 && lb.len() == 1);
        // Substitute variables (each contributes its grade), re-express the
        // series parameter, then divide by the grades of the left-hand side.
        let substituted = entry.series.substitute(|g| {
            let (grade, letters) = ContractionScheme::map_gen(g);
            (
                Series::monomial(0, grade, crate::scalar::Scalar::one()),
                letters,
            )
        });
        let regraded =
            substituted.map_coeffs(|s| s.map_c(|s_pow, c| c + shift * s_pow as i32 - ga - gb));
        out.set(la[0], lb[0], regraded);
    }
    Ok(out)
}

/// Per-relation outcome of the large-`c` limit.
#[derive(Clone, Debug)]
pub struct LimitDetail {
    pub pair: (Generator, Generator),
    /// Terms kept at grade zero.
    pub finite: NcExpr,
    /// True when some terms were suppressed as negative powers of `c`.
    pub suppressed: bool,
}

/// Keep the `c^0` part of every relation; negative powers are suppressed,
/// positive powers are a hard error.
pub fn take_limit(graded: &PhaseSpaceTable) -> Result<(PhaseSpaceTable, Vec<LimitDetail>)> {
    let case = match graded.regime {
        Regime::CGraded(c) => c,
        _ => {
            return Err(EngineError::SchemeMismatch {
                expected: "c-graded",
                got: "other",
            });
        }
    };
    let mut out = PhaseSpaceTable {
        carrier: graded.carrier,
        regime: Regime::Galilean(case),
        order: graded.order,
        entries: BTreeMap::new(),
    };
    let mut details = Vec::new();
    for (&(a, b), entry) in graded.entries.iter() {
        let mut finite = NcExpr::zero();
        let mut suppressed = false;
        for (w, s) in entry.series.terms() {
            if let Some((_, hi)) = s.c_support() {
                if hi > 0 {
                    return Err(EngineError::DivergentLimit {
                        pair: (a, b),
                        power: hi,
                    });
                }
            }
            let kept = s.keep_c0();
            if kept != *s {
                suppressed = true;
            }
            finite.add_term(w.clone(), kept);
        }
        details.push(LimitDetail {
            pair: (a, b),
            finite: finite.clone(),
            suppressed,
        });
        out.set(a, b, finite);
    }
    Ok((out, details))
}

/// Rescale and take the limit in one step.
pub fn contract(table: &PhaseSpaceTable) -> Result<PhaseSpaceTable> {
    let scheme = ContractionScheme::for_carrier(&table.carrier);
    let graded = rescale(table, &scheme)?;
    Ok(take_limit(&graded)?.0)
}

/// Derive, contract and classify against the printed Galilean block.
pub fn verify_contraction(
    carrier: &TwistCarrier,
    order: u32,
) -> Result<crate::reference::DiscrepancyLedger> {
    let table = crate::double::build_phase_space(carrier, order)?;
    crate::reference::compare_with_reference(&contract(&table)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_form::{trig_expr, TrigKind};
    use crate::double::build_phase_space;
    use crate::generator::Generator::*;
    use crate::scalar::Scalar;

    #[test]
    fn canonical_row_survives_unscaled() {
        // [x0, p0] = -i contracts to [t, pi0] = -i for every case.
        for carrier in TwistCarrier::all_defaults() {
            let table = build_phase_space(&carrier, 6).unwrap();
            let galilean = contract(&table).unwrap();
            let want = NcExpr::scalar(Scalar::minus_i()).truncated(6);
            assert_eq!(galilean.bracket(T, Pi(0)), want, "{:?}", carrier.case);
        }
    }

    #[test]
    fn boost_position_row_keeps_time() {
        // [x_l, x_k] = -(i/ξ)x_0 -> [y_l, y_k] = -(i/ξ̄)t.
        let carrier = TwistCarrier::boost(1, 2).unwrap();
        let table = build_phase_space(&carrier, 6).unwrap();
        let galilean = contract(&table).unwrap();
        assert_eq!(
            galilean.bracket(Y(2), Y(1)),
            NcExpr::term(vec![T], Series::s_power(1, Scalar::imag_ratio(-2, 1))).truncated(6)
        );
    }

    #[test]
    fn time_position_row_is_suppressed_in_boost_case() {
        // [x_0, x_l] = (i/ξ)x_k carries a net 1/c^2 -> [t, y_l] = 0.
        let carrier = TwistCarrier::boost(1, 2).unwrap();
        let table = build_phase_space(&carrier, 6).unwrap();
        let galilean = contract(&table).unwrap();
        assert!(galilean.bracket(T, Y(2)).is_zero());
    }

    #[test]
    fn rotation_zero_mixes_scales_to_finite_sine() {
        // sin(s p_0) -> sin(ŝ π_0): the c's cancel between s and p_0.
        let carrier = TwistCarrier::rotation_zero(1, 2).unwrap();
        let table = build_phase_space(&carrier, 8).unwrap();
        let galilean = contract(&table).unwrap();
        let want = trig_expr(TrigKind::Sin, Pi(0), 8).scale(&Scalar::minus_i());
        assert_eq!(galilean.bracket(Y(1), Pi(2)), want);
    }

    #[test]
    fn scheme_case_must_match() {
        let carrier = TwistCarrier::boost(1, 2).unwrap();
        let table = build_phase_space(&carrier, 4).unwrap();
        let wrong = ContractionScheme {
            case: CarrierCase::RotationGamma,
        };
        assert!(matches!(
            rescale(&table, &wrong),
            Err(EngineError::SchemeMismatch { .. })
        ));
    }

    #[test]
    fn divergent_grades_are_refused() {
        // A synthetic entry with a surviving positive power of c.
        let carrier = TwistCarrier::rotation_gamma(1, 2, 3).unwrap();
        let mut graded = PhaseSpaceTable {
            carrier,
            regime: Regime::CGraded(CarrierCase::RotationGamma),
            order: 4,
            entries: Default::default(),
        };
        graded.set(
            T,
            Pi(0),
            NcExpr::term(vec![Pi(1)], Series::monomial(0, 2, Scalar::i())),
        );
        assert!(matches!(
            take_limit(&graded),
            Err(EngineError::DivergentLimit { power: 2, .. })
        ));
    }

    #[test]
    fn contraction_commutes_with_classical_limit() {
        for carrier in TwistCarrier::all_defaults() {
            let table = build_phase_space(&carrier, 6).unwrap();
            let a = contract(&table.truncated(0)).unwrap();
            let b = contract(&table).unwrap().truncated(0);
            for (&(x, y), e) in a.entries.iter() {
                assert_eq!(
                    e.series,
                    b.entries[&(x, y)].series,
                    "{x} {y} {:?}",
                    carrier.case
                );
            }
        }
    }
}
