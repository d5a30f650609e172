//! Python bindings: carriers, phase-space tables, contraction, bounds and
//! a one-call verification summary.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use twistspace::contraction::contract;
use twistspace::double::{build_phase_space, jacobi_check, PhaseSpaceTable};
use twistspace::emit;
use twistspace::generator::Generator;
use twistspace::poincare::{check_hopf, verify_coproducts, CarrierCase, TwistCarrier};
use twistspace::reference::{compare_with_reference, expected_discrepancies};
use twistspace::uncertainty::bounds;

fn engine_err(e: twistspace::EngineError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A twist carrier: the pair of generators defining the deformation.
#[pyclass(frozen, from_py_object)]
#[derive(Clone)]
struct Carrier {
    inner: TwistCarrier,
}

#[pymethods]
impl Carrier {
    /// Carrier("rotation-gamma", k=1, l=2, gamma=3) etc.
    #[new]
    #[pyo3(signature = (case, k=None, l=None, gamma=None))]
    fn new(case: &str, k: Option<u8>, l: Option<u8>, gamma: Option<u8>) -> PyResult<Self> {
        let case = CarrierCase::parse(case)
            .ok_or_else(|| PyValueError::new_err(format!("unknown carrier case '{case}'")))?;
        let defaults = TwistCarrier::default_for(case);
        let k = k.unwrap_or(defaults.k);
        let l = l.unwrap_or(defaults.l);
        let inner = match case {
            CarrierCase::RotationGamma => {
                TwistCarrier::rotation_gamma(k, l, gamma.unwrap_or(defaults.gamma))
            }
            CarrierCase::RotationZero => TwistCarrier::rotation_zero(k, l),
            CarrierCase::Boost => TwistCarrier::boost(k, l),
        }
        .map_err(engine_err)?;
        Ok(Carrier { inner })
    }

    fn __repr__(&self) -> String {
        let c = &self.inner;
        match c.case {
            CarrierCase::RotationGamma => {
                format!(
                    "Carrier('rotation-gamma', k={}, l={}, gamma={})",
                    c.k, c.l, c.gamma
                )
            }
            _ => format!("Carrier('{}', k={}, l={})", c.case.name(), c.k, c.l),
        }
    }
}

/// A derived commutator table with closed forms attached.
#[pyclass(frozen)]
struct PhaseSpace {
    table: PhaseSpaceTable,
}

#[pymethods]
impl PhaseSpace {
    /// Derive the relativistic table of a carrier at the given order.
    #[staticmethod]
    #[pyo3(signature = (carrier, order=8))]
    fn derive(carrier: &Carrier, order: u32) -> PyResult<Self> {
        build_phase_space(&carrier.inner, order)
            .map(|table| PhaseSpace { table })
            .map_err(engine_err)
    }

    /// The commutator `[a, b]` as a display string, e.g. "-i*cosh(s*p2)".
    fn bracket(&self, a: &str, b: &str) -> PyResult<String> {
        let parse = |s: &str| {
            Generator::parse(s)
                .ok_or_else(|| PyValueError::new_err(format!("unknown generator '{s}'")))
        };
        let e = self.table.bracket(parse(a)?, parse(b)?);
        Ok(display_entry(&e, self.table.order))
    }

    /// Contract to the Galilean table.
    fn galilean(&self) -> PyResult<Self> {
        contract(&self.table)
            .map(|table| PhaseSpace { table })
            .map_err(engine_err)
    }

    /// All 56 Jacobi triples close exactly.
    fn jacobi_ok(&self) -> PyResult<bool> {
        jacobi_check(&self.table, self.table.order)
            .map(|r| r.all_ok())
            .map_err(engine_err)
    }

    fn json(&self) -> PyResult<String> {
        let ledger = compare_with_reference(&self.table).map_err(engine_err)?;
        Ok(emit::table_to_json(&self.table, Some(&ledger)))
    }

    fn latex(&self) -> String {
        emit::table_to_latex(&self.table, None)
    }

    fn text(&self) -> String {
        emit::table_to_text(&self.table, None)
    }

    fn bounds_json(&self) -> String {
        emit::bounds_to_json(&bounds(&self.table))
    }

    fn __repr__(&self) -> String {
        format!(
            "PhaseSpace(regime='{}', carrier='{}', order={})",
            self.table.regime.name(),
            self.table.carrier.case.name(),
            self.table.order
        )
    }
}

fn display_entry(e: &twistspace::NcExpr, order: u32) -> String {
    match twistspace::ClosedForm::recognize(e, order) {
        Some(cf) => cf.display_str(),
        None => emit::expr_str(e),
    }
}

/// Run the symbolic verification pipeline and return a JSON summary.
#[pyfunction]
#[pyo3(signature = (order=6))]
fn verify_summary(order: u32) -> PyResult<String> {
    let mut lines = Vec::new();
    let mut pass = true;
    for carrier in TwistCarrier::all_defaults() {
        let cop = verify_coproducts(&carrier, order).map_err(engine_err)?;
        let hopf = check_hopf(&carrier, order).map_err(engine_err)?;
        let table = build_phase_space(&carrier, order).map_err(engine_err)?;
        let gal = contract(&table).map_err(engine_err)?;
        let jac = jacobi_check(&table, order).map_err(engine_err)?.all_ok()
            && jacobi_check(&gal, order).map_err(engine_err)?.all_ok();
        let rel_ledger = compare_with_reference(&table).map_err(engine_err)?;
        let gal_ledger = compare_with_reference(&gal).map_err(engine_err)?;
        let rel_ok = rel_ledger.unexplained() == 0
            && rel_ledger
                .exceptions()
                .iter()
                .map(|r| (r.pair, r.verdict))
                .collect::<Vec<_>>()
                == expected_discrepancies(&carrier, table.regime);
        let gal_ok = gal_ledger.unexplained() == 0
            && gal_ledger
                .exceptions()
                .iter()
                .map(|r| (r.pair, r.verdict))
                .collect::<Vec<_>>()
                == expected_discrepancies(&carrier, gal.regime);
        let ok = cop.all_match() && hopf.all_ok() && jac && rel_ok && gal_ok;
        pass &= ok;
        lines.push(format!(
            "{{\"carrier\": \"{}\", \"coproducts\": {}, \"hopf\": {}, \"jacobi\": {}, \"tables\": {}, \"contraction\": {}}}",
            carrier.case.name(),
            cop.all_match(),
            hopf.all_ok(),
            jac,
            rel_ok,
            gal_ok
        ));
    }
    Ok(format!(
        "{{\"order\": {order}, \"carriers\": [{}], \"pass\": {pass}}}",
        lines.join(", ")
    ))
}

#[pymodule]
fn twistspace_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Carrier>()?;
    m.add_class::<PhaseSpace>()?;
    m.add_function(wrap_pyfunction!(verify_summary, m)?)?;
    Ok(())
}
