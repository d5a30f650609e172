//! Published closed forms the engine is verified against.
//!
//! The tables and uncertainty rows below transcribe the printed reference
//! relations row by row, with no correction. Where a printed block is
//! internally inconsistent the engine result will disagree; the ledger
//! records each such row as a sign flip (exact negation) or, when the
//! printed relativistic source row itself contradicts the printed Galilean
//! row under the stated rescaling, as ambiguous. A mismatch verdict is
//! reserved for genuinely unexplained rows and fails verification.

use crate::closed_form::{trig_expr, TrigKind};
use crate::contraction::contract;
use crate::double::{phase_space_generators, PhaseSpaceTable, Regime};
use crate::error::Result;
use crate::expr::NcExpr;
use crate::generator::Generator;
use crate::poincare::{CarrierCase, TwistCarrier, Verdict};
use crate::scalar::Scalar;
use crate::series::Series;
use crate::uncertainty::{Bound, BoundUnit};
use std::collections::BTreeMap;

fn lin(coeff: Scalar, g: Generator) -> NcExpr {
    NcExpr::term(vec![g], Series::s_power(1, coeff))
}

fn konst(c: Scalar) -> NcExpr {
    NcExpr::scalar(c)
}

fn trig(pref: Scalar, kind: TrigKind, arg: Generator, order: u32) -> NcExpr {
    trig_expr(kind, arg, order).scale(&pref)
}

struct TableBuilder {
    entries: BTreeMap<(Generator, Generator), NcExpr>,
}

impl TableBuilder {
    fn new() -> Self {
        TableBuilder {
            entries: BTreeMap::new(),
        }
    }

    /// Record `[a, b] = value` exactly as printed; reversed pairs are
    /// normalized by antisymmetry.
    fn row(&mut self, a: Generator, b: Generator, value: NcExpr) {
        assert!(a != b);
        let (key, val) = if a < b {
            ((a, b), value)
        } else {
            ((b, a), value.neg())
        };
        let prev = self.entries.insert(key, val);
        assert!(prev.is_none(), "duplicate printed row {key:?}");
    }

    fn finish(self, carrier: TwistCarrier, regime: Regime, order: u32) -> PhaseSpaceTable {
        let gens = phase_space_generators(regime);
        let mut table = PhaseSpaceTable {
            carrier,
            regime,
            order,
            entries: BTreeMap::new(),
        };
        for (i, &a) in gens.iter().enumerate() {
            for &b in gens.iter().skip(i + 1) {
                let v = self
                    .entries
                    .get(&(a, b))
                    .cloned()
                    .unwrap_or_else(NcExpr::zero);
                table.set(a, b, v.truncated(order));
            }
        }
        assert_eq!(
            self.entries.len(),
            28,
            "printed table must cover all pairs exactly once"
        );
        table
    }
}

/// The printed relativistic table for a carrier.
pub fn reference_relativistic(carrier: &TwistCarrier, order: u32) -> PhaseSpaceTable {
    use Generator::{Px, X};
    let i = Scalar::i;
    let mi = Scalar::minus_i;
    let two_i = || Scalar::imag_ratio(2, 1);
    let m_two_i = || Scalar::imag_ratio(-2, 1);
    let (k, l) = (carrier.k, carrier.l);
    let mut t = TableBuilder::new();
    // Vanishing momentum sector, common to every case.
    for mu in 0..4u8 {
        for nu in (mu + 1)..4 {
            t.row(Px(mu), Px(nu), NcExpr::zero());
        }
    }
    match carrier.case {
        CarrierCase::RotationGamma => {
            let g = carrier.gamma;
            t.row(X(0), X(k), NcExpr::zero());
            t.row(X(0), X(l), NcExpr::zero());
            t.row(X(0), X(g), NcExpr::zero());
            t.row(X(k), X(l), NcExpr::zero());
            t.row(X(k), X(g), lin(two_i(), X(l)));
            t.row(X(l), X(g), lin(m_two_i(), X(k)));
            for idx in [k, l, g] {
                t.row(X(0), Px(idx), NcExpr::zero());
                t.row(X(idx), Px(0), NcExpr::zero());
            }
            t.row(X(k), Px(g), NcExpr::zero());
            t.row(X(l), Px(g), NcExpr::zero());
            t.row(X(0), Px(0), konst(mi()));
            t.row(X(g), Px(g), konst(i()));
            t.row(X(g), Px(k), lin(i(), Px(l)));
            t.row(X(g), Px(l), lin(mi(), Px(k)));
            t.row(X(l), Px(l), trig(i(), TrigKind::Cos, Px(g), order));
            t.row(X(k), Px(k), trig(i(), TrigKind::Cos, Px(g), order));
            t.row(X(k), Px(l), trig(i(), TrigKind::Sin, Px(g), order));
            t.row(X(l), Px(k), trig(mi(), TrigKind::Sin, Px(g), order));
        }
        CarrierCase::RotationZero => {
            let a = carrier.spectator().unwrap();
            t.row(X(0), X(a), NcExpr::zero());
            t.row(X(k), X(l), NcExpr::zero());
            t.row(X(0), X(k), lin(two_i(), X(l)));
            t.row(X(0), X(l), lin(m_two_i(), X(k)));
            t.row(X(k), X(a), NcExpr::zero());
            t.row(X(l), X(a), NcExpr::zero());
            t.row(X(0), Px(a), NcExpr::zero());
            t.row(X(a), Px(0), NcExpr::zero());
            t.row(X(k), Px(a), NcExpr::zero());
            t.row(X(l), Px(a), NcExpr::zero());
            t.row(X(0), Px(0), konst(mi()));
            t.row(X(a), Px(a), konst(i()));
            t.row(X(a), Px(k), NcExpr::zero());
            t.row(X(a), Px(l), NcExpr::zero());
            t.row(X(k), Px(0), NcExpr::zero());
            t.row(X(l), Px(0), NcExpr::zero());
            t.row(X(0), Px(k), lin(mi(), Px(l)));
            t.row(X(0), Px(l), lin(i(), Px(k)));
            t.row(X(l), Px(l), trig(i(), TrigKind::Cos, Px(0), order));
            t.row(X(k), Px(k), trig(i(), TrigKind::Cos, Px(0), order));
            t.row(X(k), Px(l), trig(i(), TrigKind::Sin, Px(0), order));
            t.row(X(l), Px(k), trig(mi(), TrigKind::Sin, Px(0), order));
        }
        CarrierCase::Boost => {
            let a = carrier.spectator().unwrap();
            t.row(X(0), X(a), NcExpr::zero());
            t.row(X(0), X(k), NcExpr::zero());
            t.row(X(k), X(a), NcExpr::zero());
            t.row(X(l), X(a), NcExpr::zero());
            t.row(X(0), X(l), lin(two_i(), X(k)));
            t.row(X(l), X(k), lin(m_two_i(), X(0)));
            t.row(X(l), Px(k), lin(i(), Px(0)));
            t.row(X(0), Px(0), trig(mi(), TrigKind::Cosh, Px(l), order));
            t.row(X(a), Px(a), konst(i()));
            t.row(X(l), Px(l), konst(i()));
            t.row(X(a), Px(0), NcExpr::zero());
            t.row(X(k), Px(l), NcExpr::zero());
            t.row(X(0), Px(l), NcExpr::zero());
            t.row(X(0), Px(k), trig(i(), TrigKind::Sinh, Px(l), order));
            t.row(X(k), Px(k), trig(i(), TrigKind::Cosh, Px(l), order));
            t.row(X(k), Px(0), trig(mi(), TrigKind::Sinh, Px(l), order));
            t.row(X(l), Px(0), lin(i(), Px(k)));
            t.row(X(k), Px(a), NcExpr::zero());
            t.row(X(l), Px(a), NcExpr::zero());
            t.row(X(0), Px(a), NcExpr::zero());
            t.row(X(a), Px(l), NcExpr::zero());
            t.row(X(a), Px(k), NcExpr::zero());
        }
    }
    t.finish(*carrier, Regime::Relativistic, order)
}

/// The printed Galilean table for a carrier.
pub fn reference_galilean(carrier: &TwistCarrier, order: u32) -> PhaseSpaceTable {
    use Generator::{Pi, T, Y};
    let i = Scalar::i;
    let mi = Scalar::minus_i;
    let two_i = || Scalar::imag_ratio(2, 1);
    let m_two_i = || Scalar::imag_ratio(-2, 1);
    let (k, l) = (carrier.k, carrier.l);
    let mut t = TableBuilder::new();
    for mu in 0..4u8 {
        for nu in (mu + 1)..4 {
            t.row(Pi(mu), Pi(nu), NcExpr::zero());
        }
    }
    match carrier.case {
        CarrierCase::RotationGamma => {
            let g = carrier.gamma;
            t.row(T, Y(k), NcExpr::zero());
            t.row(T, Y(l), NcExpr::zero());
            t.row(T, Y(g), NcExpr::zero());
            t.row(Y(k), Y(l), NcExpr::zero());
            t.row(Y(k), Y(g), lin(two_i(), Y(l)));
            t.row(Y(l), Y(g), lin(m_two_i(), Y(k)));
            for idx in [k, l, g] {
                t.row(T, Pi(idx), NcExpr::zero());
                t.row(Y(idx), Pi(0), NcExpr::zero());
            }
            t.row(Y(k), Pi(g), NcExpr::zero());
            t.row(Y(l), Pi(g), NcExpr::zero());
            t.row(T, Pi(0), konst(mi()));
            t.row(Y(g), Pi(g), konst(i()));
            t.row(Y(g), Pi(k), lin(i(), Pi(l)));
            t.row(Y(g), Pi(l), lin(mi(), Pi(k)));
            t.row(Y(l), Pi(l), trig(i(), TrigKind::Cos, Pi(g), order));
            t.row(Y(k), Pi(k), trig(i(), TrigKind::Cos, Pi(g), order));
            t.row(Y(k), Pi(l), trig(mi(), TrigKind::Sin, Pi(g), order));
            t.row(Y(l), Pi(k), trig(i(), TrigKind::Sin, Pi(g), order));
        }
        CarrierCase::RotationZero => {
            let a = carrier.spectator().unwrap();
            t.row(T, Y(a), NcExpr::zero());
            t.row(Y(k), Y(l), NcExpr::zero());
            t.row(T, Y(k), lin(two_i(), Y(l)));
            t.row(T, Y(l), lin(m_two_i(), Y(k)));
            t.row(Y(k), Y(a), NcExpr::zero());
            t.row(Y(l), Y(a), NcExpr::zero());
            t.row(T, Pi(a), NcExpr::zero());
            t.row(Y(a), Pi(0), NcExpr::zero());
            t.row(Y(k), Pi(a), NcExpr::zero());
            t.row(Y(l), Pi(a), NcExpr::zero());
            t.row(T, Pi(0), konst(mi()));
            t.row(Y(a), Pi(a), konst(i()));
            t.row(Y(a), Pi(k), NcExpr::zero());
            t.row(Y(a), Pi(l), NcExpr::zero());
            t.row(Y(k), Pi(0), NcExpr::zero());
            t.row(Y(l), Pi(0), NcExpr::zero());
            t.row(T, Pi(k), lin(mi(), Pi(l)));
            t.row(T, Pi(l), lin(i(), Pi(k)));
            t.row(Y(l), Pi(l), trig(i(), TrigKind::Cos, Pi(0), order));
            t.row(Y(k), Pi(k), trig(i(), TrigKind::Cos, Pi(0), order));
            t.row(Y(k), Pi(l), trig(i(), TrigKind::Sin, Pi(0), order));
            t.row(Y(l), Pi(k), trig(mi(), TrigKind::Sin, Pi(0), order));
        }
        CarrierCase::Boost => {
            let a = carrier.spectator().unwrap();
            t.row(T, Y(a), NcExpr::zero());
            t.row(T, Y(k), NcExpr::zero());
            t.row(Y(k), Y(a), NcExpr::zero());
            t.row(Y(l), Y(a), NcExpr::zero());
            t.row(T, Y(l), NcExpr::zero());
            t.row(Y(l), Y(k), lin(m_two_i(), T));
            t.row(Y(l), Pi(k), NcExpr::zero());
            t.row(T, Pi(0), konst(mi()));
            t.row(T, Pi(k), NcExpr::zero());
            t.row(Y(k), Pi(k), konst(i()));
            t.row(Y(a), Pi(a), konst(i()));
            t.row(Y(l), Pi(l), konst(i()));
            t.row(Y(k), Pi(l), NcExpr::zero());
            t.row(T, Pi(l), NcExpr::zero());
            t.row(Y(k), Pi(a), NcExpr::zero());
            t.row(Y(l), Pi(a), NcExpr::zero());
            t.row(T, Pi(a), NcExpr::zero());
            t.row(Y(a), Pi(l), NcExpr::zero());
            t.row(Y(a), Pi(k), NcExpr::zero());
            t.row(Y(a), Pi(0), NcExpr::zero());
            t.row(Y(k), Pi(0), NcExpr::zero());
            t.row(Y(l), Pi(0), NcExpr::zero());
        }
    }
    t.finish(*carrier, Regime::Galilean(carrier.case), order)
}

pub fn reference_table(carrier: &TwistCarrier, regime: Regime, order: u32) -> PhaseSpaceTable {
    match regime {
        Regime::Relativistic => reference_relativistic(carrier, order),
        Regime::Galilean(_) => reference_galilean(carrier, order),
        Regime::CGraded(_) => panic!("no printed reference for the intermediate grading"),
    }
}

#[derive(Clone, Debug)]
pub struct LedgerRow {
    pub regime: Regime,
    pub pair: (Generator, Generator),
    pub engine: NcExpr,
    pub reference: NcExpr,
    pub verdict: Verdict,
}

/// Machine-derived result against the printed result, row by row.
#[derive(Clone, Debug, Default)]
pub struct DiscrepancyLedger {
    pub rows: Vec<LedgerRow>,
}

impl DiscrepancyLedger {
    pub fn unexplained(&self) -> usize {
        self.rows
            .iter()
            .filter(|r| r.verdict == Verdict::Mismatch)
            .count()
    }

    pub fn exceptions(&self) -> Vec<&LedgerRow> {
        self.rows
            .iter()
            .filter(|r| r.verdict != Verdict::Match)
            .collect()
    }

    pub fn acceptable(&self) -> bool {
        self.unexplained() == 0
    }

    pub fn extend(&mut self, other: DiscrepancyLedger) {
        self.rows.extend(other.rows);
    }
}

/// Classify an engine table against its printed reference.
///
/// A row not matching as printed must be either an exact negation
/// (sign flip) or — for Galilean rows only — explained by the printed
/// relativistic source row itself contracting to something other than the
/// printed Galilean row (the printed blocks contradict each other, so no
/// value can match both). Anything else is an unexplained mismatch.
pub fn compare_with_reference(table: &PhaseSpaceTable) -> Result<DiscrepancyLedger> {
    let reference = reference_table(&table.carrier, table.regime, table.order);
    // For Galilean rows, pre-compute the contraction of the *printed*
    // relativistic table to detect internal inconsistencies of the source.
    let contracted_reference = match table.regime {
        Regime::Galilean(_) => Some(contract(&reference_relativistic(
            &table.carrier,
            table.order,
        ))?),
        _ => None,
    };
    let mut rows = Vec::new();
    for (&(a, b), entry) in table.entries.iter() {
        let engine = entry.series.clone();
        let printed = reference.entries[&(a, b)].series.clone();
        let verdict = if engine == printed {
            Verdict::Match
        } else if engine == printed.neg() && !engine.is_zero() {
            Verdict::SignFlip
        } else if let Some(cr) = &contracted_reference {
            let source_image = cr.entries[&(a, b)].series.clone();
            if source_image != printed {
                Verdict::Ambiguous
            } else {
                Verdict::Mismatch
            }
        } else {
            Verdict::Mismatch
        };
        rows.push(LedgerRow {
            regime: table.regime,
            pair: (a, b),
            engine,
            reference: printed,
            verdict,
        });
    }
    Ok(DiscrepancyLedger { rows })
}

/// The frozen set of documented discrepancies for the default carriers:
/// every entry is a pair the engine is expected to disagree on, with its
/// verdict class. All other rows must match exactly.
pub fn expected_discrepancies(
    carrier: &TwistCarrier,
    regime: Regime,
) -> Vec<((Generator, Generator), Verdict)> {
    use Generator::{Pi, Px, T, X, Y};
    let (k, l) = (carrier.k, carrier.l);
    match (carrier.case, regime) {
        (CarrierCase::RotationGamma, Regime::Relativistic) => {
            let g = carrier.gamma;
            sorted(vec![
                ((X(k), Px(l)), Verdict::SignFlip),
                ((X(l), Px(k)), Verdict::SignFlip),
                ((X(g), Px(k)), Verdict::SignFlip),
                ((X(g), Px(l)), Verdict::SignFlip),
            ])
        }
        (CarrierCase::RotationZero, Regime::Relativistic) => sorted(vec![
            ((X(0), Px(k)), Verdict::SignFlip),
            ((X(0), Px(l)), Verdict::SignFlip),
            ((X(k), Px(l)), Verdict::SignFlip),
            ((X(l), Px(k)), Verdict::SignFlip),
        ]),
        (CarrierCase::Boost, Regime::Relativistic) => sorted(vec![
            ((X(0), Px(k)), Verdict::SignFlip),
            ((X(k), Px(0)), Verdict::SignFlip),
            ((X(l), Px(k)), Verdict::SignFlip),
            ((X(l), Px(0)), Verdict::SignFlip),
        ]),
        (CarrierCase::RotationGamma, Regime::Galilean(_)) => {
            let g = carrier.gamma;
            sorted(vec![
                ((Y(g), Pi(k)), Verdict::SignFlip),
                ((Y(g), Pi(l)), Verdict::SignFlip),
            ])
        }
        (CarrierCase::RotationZero, Regime::Galilean(_)) => sorted(vec![
            ((T, Pi(k)), Verdict::SignFlip),
            ((T, Pi(l)), Verdict::SignFlip),
            ((Y(k), Pi(l)), Verdict::SignFlip),
            ((Y(l), Pi(k)), Verdict::SignFlip),
        ]),
        (CarrierCase::Boost, Regime::Galilean(_)) => sorted(vec![
            ((Y(k), Pi(0)), Verdict::Ambiguous),
            ((Y(l), Pi(0)), Verdict::Ambiguous),
        ]),
        _ => Vec::new(),
    }
}

fn sorted(mut v: Vec<((Generator, Generator), Verdict)>) -> Vec<((Generator, Generator), Verdict)> {
    for ((a, b), _) in v.iter_mut() {
        if a > b {
            std::mem::swap(a, b);
        }
    }
    v.sort_by_key(|(p, _)| *p);
    v
}

// ---------------------------------------------------------------------------
// Printed uncertainty rows.
// ---------------------------------------------------------------------------

/// One printed bound row `Δ(a)Δ(b) ≥ magnitude·|⟨unit⟩|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefBound {
    pub a: Generator,
    pub b: Generator,
    pub magnitude: Series,
    pub unit: BoundUnit,
}

fn rb(a: Generator, b: Generator, magnitude: Series, unit: BoundUnit) -> RefBound {
    RefBound {
        a,
        b,
        magnitude,
        unit,
    }
}

fn half_const() -> Series {
    Series::scalar(Scalar::ratio(1, 2))
}

/// `1/(2ξ) = s`.
fn inv_two_xi() -> Series {
    Series::s_power(1, Scalar::one())
}

/// `1/(4ξ) = s/2`.
fn inv_four_xi() -> Series {
    Series::s_power(1, Scalar::ratio(1, 2))
}

/// The printed bound rows for a regime, in canonical pair order.
pub fn reference_bounds(carrier: &TwistCarrier, regime: Regime) -> Vec<RefBound> {
    use Generator::{Pi, Px, T, X, Y};
    let (k, l) = (carrier.k, carrier.l);
    let trig_unit = |kind: TrigKind, arg: Generator| BoundUnit::Trig { kind, arg };
    let mut rows = match (carrier.case, regime) {
        (CarrierCase::RotationGamma, Regime::Relativistic) => {
            let g = carrier.gamma;
            vec![
                rb(X(k), X(g), inv_two_xi(), BoundUnit::Gen(X(l))),
                rb(X(l), X(g), inv_two_xi(), BoundUnit::Gen(X(k))),
                rb(X(k), Px(k), half_const(), trig_unit(TrigKind::Cos, Px(g))),
                rb(X(l), Px(l), half_const(), trig_unit(TrigKind::Cos, Px(g))),
                rb(X(0), Px(0), half_const(), BoundUnit::One),
                rb(X(g), Px(g), half_const(), BoundUnit::One),
                rb(X(g), Px(k), inv_four_xi(), BoundUnit::Gen(Px(l))),
                rb(X(g), Px(l), inv_four_xi(), BoundUnit::Gen(Px(k))),
                rb(X(k), Px(l), half_const(), trig_unit(TrigKind::Sin, Px(g))),
                rb(X(l), Px(k), half_const(), trig_unit(TrigKind::Sin, Px(g))),
            ]
        }
        (CarrierCase::RotationZero, Regime::Relativistic) => {
            let a = carrier.spectator().unwrap();
            vec![
                rb(X(k), X(0), inv_two_xi(), BoundUnit::Gen(X(l))),
                rb(X(l), X(0), inv_two_xi(), BoundUnit::Gen(X(k))),
                rb(X(k), Px(k), half_const(), trig_unit(TrigKind::Cos, Px(0))),
                rb(X(l), Px(l), half_const(), trig_unit(TrigKind::Cos, Px(0))),
                rb(X(0), Px(0), half_const(), BoundUnit::One),
                rb(X(a), Px(a), half_const(), BoundUnit::One),
                rb(X(0), Px(k), inv_four_xi(), BoundUnit::Gen(Px(l))),
                rb(X(0), Px(l), inv_four_xi(), BoundUnit::Gen(Px(k))),
                rb(X(k), Px(l), half_const(), trig_unit(TrigKind::Sin, Px(0))),
                rb(X(l), Px(k), half_const(), trig_unit(TrigKind::Sin, Px(0))),
            ]
        }
        (CarrierCase::Boost, Regime::Relativistic) => {
            let a = carrier.spectator().unwrap();
            vec![
                rb(X(k), X(l), inv_two_xi(), BoundUnit::Gen(X(0))),
                rb(X(l), X(0), inv_two_xi(), BoundUnit::Gen(X(k))),
                rb(X(l), Px(k), inv_four_xi(), BoundUnit::Gen(Px(0))),
                rb(X(0), Px(0), half_const(), trig_unit(TrigKind::Cosh, Px(l))),
                rb(X(l), Px(l), half_const(), BoundUnit::One),
                rb(X(a), Px(a), half_const(), BoundUnit::One),
                rb(X(0), Px(k), half_const(), trig_unit(TrigKind::Sinh, Px(l))),
                rb(X(k), Px(k), half_const(), trig_unit(TrigKind::Cosh, Px(l))),
                rb(X(k), Px(0), half_const(), trig_unit(TrigKind::Sinh, Px(l))),
                rb(X(l), Px(0), inv_four_xi(), BoundUnit::Gen(Px(k))),
            ]
        }
        (CarrierCase::RotationGamma, Regime::Galilean(_)) => {
            let g = carrier.gamma;
            vec![
                rb(Y(k), Y(g), inv_two_xi(), BoundUnit::Gen(Y(l))),
                rb(Y(l), Y(g), inv_two_xi(), BoundUnit::Gen(Y(k))),
                rb(Y(k), Pi(k), half_const(), trig_unit(TrigKind::Cos, Pi(g))),
                rb(Y(l), Pi(l), half_const(), trig_unit(TrigKind::Cos, Pi(g))),
                rb(T, Pi(0), half_const(), BoundUnit::One),
                rb(Y(g), Pi(g), half_const(), BoundUnit::One),
                rb(Y(g), Pi(k), inv_four_xi(), BoundUnit::Gen(Pi(l))),
                rb(Y(g), Pi(l), inv_four_xi(), BoundUnit::Gen(Pi(k))),
                rb(Y(k), Pi(l), half_const(), trig_unit(TrigKind::Sin, Pi(g))),
                rb(Y(l), Pi(k), half_const(), trig_unit(TrigKind::Sin, Pi(g))),
            ]
        }
        (CarrierCase::RotationZero, Regime::Galilean(_)) => {
            let a = carrier.spectator().unwrap();
            vec![
                rb(Y(k), T, inv_two_xi(), BoundUnit::Gen(Y(l))),
                rb(Y(l), T, inv_two_xi(), BoundUnit::Gen(Y(k))),
                rb(Y(k), Pi(k), half_const(), trig_unit(TrigKind::Cos, Pi(0))),
                rb(Y(l), Pi(l), half_const(), trig_unit(TrigKind::Cos, Pi(0))),
                rb(T, Pi(0), half_const(), BoundUnit::One),
                rb(Y(a), Pi(a), half_const(), BoundUnit::One),
                rb(T, Pi(k), inv_four_xi(), BoundUnit::Gen(Pi(l))),
                rb(T, Pi(l), inv_four_xi(), BoundUnit::Gen(Pi(k))),
                rb(Y(k), Pi(l), half_const(), trig_unit(TrigKind::Sin, Pi(0))),
                rb(Y(l), Pi(k), half_const(), trig_unit(TrigKind::Sin, Pi(0))),
            ]
        }
        (CarrierCase::Boost, Regime::Galilean(_)) => {
            let a = carrier.spectator().unwrap();
            vec![
                rb(Y(k), Y(l), inv_two_xi(), BoundUnit::Gen(T)),
                rb(T, Pi(0), half_const(), BoundUnit::One),
                rb(Y(l), Pi(l), half_const(), BoundUnit::One),
                rb(Y(a), Pi(a), half_const(), BoundUnit::One),
                rb(Y(k), Pi(k), half_const(), BoundUnit::One),
            ]
        }
        _ => Vec::new(),
    };
    for r in rows.iter_mut() {
        if r.a > r.b {
            std::mem::swap(&mut r.a, &mut r.b);
        }
    }
    rows.sort_by_key(|r| (r.a, r.b));
    rows
}

/// Outcome of the structural bound comparison.
#[derive(Clone, Debug, Default)]
pub struct BoundComparison {
    pub matched: Vec<(Generator, Generator)>,
    /// Printed rows the engine reproduces with a different right-hand side.
    pub wrong: Vec<(Generator, Generator)>,
    /// Printed rows with no engine counterpart.
    pub missing: Vec<(Generator, Generator)>,
    /// Engine bounds with no printed counterpart.
    pub extra: Vec<(Generator, Generator)>,
}

impl BoundComparison {
    pub fn exact(&self) -> bool {
        self.wrong.is_empty() && self.missing.is_empty() && self.extra.is_empty()
    }
}

/// Compare the engine bound list with the printed rows: same pairs, same
/// magnitudes, same inner observables (the absolute value makes the
/// comparison insensitive to the sign and phase of the commutator).
pub fn compare_bounds(engine: &[Bound], printed: &[RefBound]) -> BoundComparison {
    let mut out = BoundComparison::default();
    let by_pair: BTreeMap<(Generator, Generator), &Bound> =
        engine.iter().map(|b| ((b.a, b.b), b)).collect();
    let mut seen = std::collections::BTreeSet::new();
    for r in printed {
        seen.insert((r.a, r.b));
        match by_pair.get(&(r.a, r.b)) {
            None => out.missing.push((r.a, r.b)),
            Some(b) => {
                if b.magnitude == r.magnitude && b.unit == r.unit {
                    out.matched.push((r.a, r.b));
                } else {
                    out.wrong.push((r.a, r.b));
                }
            }
        }
    }
    for b in engine {
        if !seen.contains(&(b.a, b.b)) {
            out.extra.push((b.a, b.b));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_tables_are_complete() {
        for carrier in TwistCarrier::all_defaults() {
            let rel = reference_relativistic(&carrier, 6);
            assert_eq!(rel.entries.len(), 28);
            let gal = reference_galilean(&carrier, 6);
            assert_eq!(gal.entries.len(), 28);
        }
    }

    #[test]
    fn printed_spot_values() {
        use Generator::{Px, X};
        let carrier = TwistCarrier::rotation_gamma(1, 2, 3).unwrap();
        let rel = reference_relativistic(&carrier, 6);
        assert_eq!(
            rel.bracket(X(0), Px(0)),
            NcExpr::scalar(Scalar::minus_i()).truncated(6)
        );
        assert_eq!(
            rel.bracket(X(1), X(3)),
            NcExpr::term(vec![X(2)], Series::s_power(1, Scalar::imag_ratio(2, 1))).truncated(6)
        );
    }
}
