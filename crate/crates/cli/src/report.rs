//! Command bodies and the verification pipeline.

use crate::{OutFormat, RunConfig};
use std::fmt::Write as _;
use twistspace::contraction::contract;
use twistspace::double::{build_phase_space, jacobi_check, PhaseSpaceTable};
use twistspace::emit;
use twistspace::poincare::{
    check_hopf, poincare_generators, twisted_coproduct, verify_coproducts, TwistCarrier, Verdict,
};
use twistspace::reference::{
    compare_bounds, compare_with_reference, expected_discrepancies, reference_bounds,
    DiscrepancyLedger,
};
use twistspace::rng::SplitMix64;
use twistspace::uncertainty::{
    bounds, numeric_check, realization_position_check, realize, GaussianState, GridSpec,
};

fn grid_for(cfg: &RunConfig) -> GridSpec {
    GridSpec {
        points: cfg.grid_points,
        ..GridSpec::default()
    }
}

pub fn run_phase_space(cfg: &RunConfig, format: OutFormat) -> Result<String, String> {
    let table = build_phase_space(&cfg.carrier, cfg.order).map_err(|e| e.to_string())?;
    let ledger = compare_with_reference(&table).map_err(|e| e.to_string())?;
    Ok(render_table(&table, &ledger, format))
}

pub fn run_contract(cfg: &RunConfig, format: OutFormat) -> Result<String, String> {
    let table = build_phase_space(&cfg.carrier, cfg.order).map_err(|e| e.to_string())?;
    let galilean = contract(&table).map_err(|e| e.to_string())?;
    let ledger = compare_with_reference(&galilean).map_err(|e| e.to_string())?;
    Ok(render_table(&galilean, &ledger, format))
}

fn render_table(table: &PhaseSpaceTable, ledger: &DiscrepancyLedger, format: OutFormat) -> String {
    match format {
        OutFormat::Text => emit::table_to_text(table, Some(ledger)),
        OutFormat::Json => emit::table_to_json(table, Some(ledger)),
        OutFormat::Latex => emit::table_to_latex(table, Some(ledger)),
    }
}

pub fn run_coproducts(cfg: &RunConfig, format: OutFormat) -> Result<String, String> {
    let report = verify_coproducts(&cfg.carrier, cfg.order).map_err(|e| e.to_string())?;
    let mut rows = Vec::new();
    for g in poincare_generators() {
        let d = twisted_coproduct(g, &cfg.carrier, cfg.order).map_err(|e| e.to_string())?;
        let verdict = report
            .entries
            .iter()
            .find(|e| e.gen == g)
            .map(|e| e.verdict)
            .unwrap_or(Verdict::Mismatch);
        rows.push((g, d, verdict));
    }
    let mut out = String::new();
    match format {
        OutFormat::Json => {
            let body: Vec<String> = rows
                .iter()
                .map(|(g, d, v)| {
                    format!(
                        "  {{\"gen\": \"{}\", \"verdict\": \"{}\", \"coproduct\": \"{}\"}}",
                        g,
                        v.name(),
                        emit::tensor_str(d)
                    )
                })
                .collect();
            let _ = writeln!(
                out,
                "{{\n\"carrier\": \"{}\", \"order\": {},\n\"coproducts\": [\n{}\n]\n}}",
                cfg.carrier.case.name(),
                cfg.order,
                body.join(",\n")
            );
        }
        _ => {
            let _ = writeln!(
                out,
                "deformed coproducts (carrier {}, order {}); conjugation vs closed form",
                cfg.carrier.case.name(),
                cfg.order
            );
            for (g, d, v) in rows {
                let _ = writeln!(out, "D({g}) = {}", emit::tensor_str(&d));
                let _ = writeln!(out, "  closed-form verdict: {}", v.name());
            }
        }
    }
    Ok(out)
}

pub fn run_uncertainty(cfg: &RunConfig, format: OutFormat) -> Result<String, String> {
    let table = build_phase_space(&cfg.carrier, cfg.order).map_err(|e| e.to_string())?;
    let galilean = contract(&table).map_err(|e| e.to_string())?;
    let rel = bounds(&table);
    let gal = bounds(&galilean);
    let mut out = String::new();
    match format {
        OutFormat::Json => {
            let _ = writeln!(
                out,
                "{{\n\"carrier\": \"{}\", \"order\": {},\n\"relativistic\": {},\n\"galilean\": {}\n}}",
                cfg.carrier.case.name(),
                cfg.order,
                emit::bounds_to_json(&rel).trim_end(),
                emit::bounds_to_json(&gal).trim_end()
            );
        }
        OutFormat::Latex => {
            let _ = writeln!(out, "% relativistic bounds");
            out.push_str(&emit::bounds_to_latex(&rel, table.regime));
            let _ = writeln!(out, "% galilean bounds");
            out.push_str(&emit::bounds_to_latex(&gal, galilean.regime));
        }
        OutFormat::Text => {
            let _ = writeln!(
                out,
                "uncertainty bounds (carrier {}, order {})",
                cfg.carrier.case.name(),
                cfg.order
            );
            let _ = writeln!(out, "relativistic:");
            out.push_str(&emit::bounds_to_text(&rel));
            let _ = writeln!(out, "galilean:");
            out.push_str(&emit::bounds_to_text(&gal));
        }
    }
    Ok(out)
}

pub struct VerifySelection {
    pub coproducts: bool,
    pub hopf: bool,
    pub tables: bool,
    pub jacobi: bool,
    pub contraction: bool,
    pub bounds: bool,
    pub numeric: bool,
    pub all_carriers: bool,
}

struct CheckLine {
    name: String,
    carrier: &'static str,
    pass: bool,
    detail: String,
}

/// A ledger passes when nothing is unexplained and every exception sits
/// on a documented row with the documented class. (At low truncation
/// orders documented exception rows degenerate to matches, so the
/// exception list may be any subset of the documented one.)
fn ledger_ok(ledger: &DiscrepancyLedger, table: &PhaseSpaceTable) -> (bool, String) {
    let expected = expected_discrepancies(&table.carrier, table.regime);
    let got: Vec<_> = ledger
        .exceptions()
        .iter()
        .map(|r| (r.pair, r.verdict))
        .collect();
    let pass = ledger.unexplained() == 0 && got.iter().all(|x| expected.contains(x));
    let detail = format!(
        "{} rows, {} documented exceptions, {} unexplained",
        ledger.rows.len(),
        got.len(),
        ledger.unexplained()
    );
    (pass, detail)
}

pub fn run_verify(
    cfg: &RunConfig,
    format: OutFormat,
    sel: &VerifySelection,
) -> Result<(String, bool), String> {
    let carriers: Vec<TwistCarrier> = if sel.all_carriers {
        TwistCarrier::all_defaults().to_vec()
    } else {
        vec![cfg.carrier]
    };
    let mut lines: Vec<CheckLine> = Vec::new();
    let mut ledger_rows: Vec<String> = Vec::new();
    let mut exception_rows: Vec<String> = Vec::new();

    for carrier in &carriers {
        let tag = carrier.case.name();
        if sel.coproducts {
            let rep = verify_coproducts(carrier, cfg.order).map_err(|e| e.to_string())?;
            let pass = rep.translation_sector_ok() && rep.acceptable();
            let n_match = rep
                .entries
                .iter()
                .filter(|e| e.verdict == Verdict::Match)
                .count();
            lines.push(CheckLine {
                name: "coproducts".into(),
                carrier: tag,
                pass,
                detail: format!(
                    "{}/{} generators match the closed forms",
                    n_match,
                    rep.entries.len()
                ),
            });
        }
        if sel.hopf {
            let h = check_hopf(carrier, cfg.order).map_err(|e| e.to_string())?;
            lines.push(CheckLine {
                name: "hopf".into(),
                carrier: tag,
                pass: h.all_ok(),
                detail: format!(
                    "F*Finv {} cocycle {} coassoc {} counit {} homomorphism {} abelian-carrier {}",
                    h.f_times_f_inv_ok,
                    h.cocycle_ok,
                    h.coassociativity_ok,
                    h.counit_ok,
                    h.homomorphism_ok,
                    h.carrier_abelian_ok
                ),
            });
        }

        let table = build_phase_space(carrier, cfg.order).map_err(|e| e.to_string())?;
        let galilean = contract(&table).map_err(|e| e.to_string())?;

        if sel.tables {
            let ledger = compare_with_reference(&table).map_err(|e| e.to_string())?;
            let (pass, detail) = ledger_ok(&ledger, &table);
            collect_rows(&ledger, tag, &mut ledger_rows, &mut exception_rows);
            lines.push(CheckLine {
                name: "tables".into(),
                carrier: tag,
                pass,
                detail,
            });
        }
        if sel.jacobi {
            let jr = jacobi_check(&table, cfg.order).map_err(|e| e.to_string())?;
            let jg = jacobi_check(&galilean, cfg.order).map_err(|e| e.to_string())?;
            lines.push(CheckLine {
                name: "jacobi".into(),
                carrier: tag,
                pass: jr.all_ok() && jg.all_ok(),
                detail: format!(
                    "relativistic {}/{}, galilean {}/{}",
                    jr.triples_checked - jr.violations.len(),
                    jr.triples_checked,
                    jg.triples_checked - jg.violations.len(),
                    jg.triples_checked
                ),
            });
        }
        if sel.contraction {
            let ledger = compare_with_reference(&galilean).map_err(|e| e.to_string())?;
            let (pass, detail) = ledger_ok(&ledger, &galilean);
            collect_rows(&ledger, tag, &mut ledger_rows, &mut exception_rows);
            lines.push(CheckLine {
                name: "contraction".into(),
                carrier: tag,
                pass,
                detail,
            });
        }
        if sel.bounds {
            let (pass, detail) = if cfg.order == 0 {
                // Undeformed limit: exactly the four canonical bounds of 1/2.
                let ok = [&table, &galilean].iter().all(|t| {
                    let bs = bounds(t);
                    bs.len() == 4
                        && bs.iter().all(|b| {
                            b.unit == twistspace::uncertainty::BoundUnit::One
                                && b.a.is_position_like()
                                && b.b.is_momentum_like()
                        })
                });
                (
                    ok,
                    "undeformed limit: four canonical bounds per table".to_string(),
                )
            } else {
                let rel_cmp =
                    compare_bounds(&bounds(&table), &reference_bounds(carrier, table.regime));
                let gal_cmp = compare_bounds(
                    &bounds(&galilean),
                    &reference_bounds(carrier, galilean.regime),
                );
                let expected_extra: Vec<_> = expected_discrepancies(carrier, galilean.regime)
                    .into_iter()
                    .filter(|(_, v)| *v == Verdict::Ambiguous)
                    .map(|(p, _)| p)
                    .collect();
                let pass = rel_cmp.exact()
                    && gal_cmp.wrong.is_empty()
                    && gal_cmp.missing.is_empty()
                    && gal_cmp.extra.iter().all(|p| expected_extra.contains(p));
                let detail = format!(
                    "relativistic {} matched; galilean {} matched, {} documented extra",
                    rel_cmp.matched.len(),
                    gal_cmp.matched.len(),
                    gal_cmp.extra.len()
                );
                (pass, detail)
            };
            lines.push(CheckLine {
                name: "bounds".into(),
                carrier: tag,
                pass,
                detail,
            });
        }
        if sel.numeric {
            let grid = grid_for(cfg);
            let mut pass = true;
            let mut worst_slack = f64::INFINITY;
            let mut worst_rel = 0.0f64;
            for t in [&table, &galilean] {
                let r = realize(t, grid).map_err(|e| e.to_string())?;
                if !realization_position_check(&r, t).is_empty() {
                    pass = false;
                }
                let mut rng = SplitMix64::new(cfg.seed);
                let pairs: Vec<_> = bounds(t).iter().map(|b| (b.a, b.b)).collect();
                for _ in 0..10 {
                    let state = GaussianState::random(&mut rng);
                    for &(a, b) in &pairs {
                        let row = numeric_check(&r, t, &state, a, b).map_err(|e| e.to_string())?;
                        worst_slack = worst_slack.min(row.slack);
                        worst_rel = worst_rel.max(row.rel_err);
                        if row.slack < -1e-9 || row.rel_err > 1e-8 {
                            pass = false;
                        }
                    }
                }
            }
            lines.push(CheckLine {
                name: "numeric".into(),
                carrier: tag,
                pass,
                detail: format!(
                    "worst Robertson slack {:.3e}, worst relative deviation {:.3e}",
                    worst_slack, worst_rel
                ),
            });
        }
    }

    let pass = lines.iter().all(|l| l.pass);
    let mut out = String::new();
    match format {
        OutFormat::Json => {
            let body: Vec<String> = lines
                .iter()
                .map(|l| {
                    format!(
                        "  {{\"check\": \"{}\", \"carrier\": \"{}\", \"pass\": {}, \"detail\": \"{}\"}}",
                        l.name, l.carrier, l.pass, l.detail
                    )
                })
                .collect();
            let _ = writeln!(
                out,
                "{{\n\"order\": {},\n\"checks\": [\n{}\n],\n\"ledger\": [{}],\n\"exceptions\": [{}],\n\"pass\": {}\n}}",
                cfg.order,
                body.join(",\n"),
                ledger_rows.join(", "),
                exception_rows.join(", "),
                pass
            );
        }
        _ => {
            for l in &lines {
                let _ = writeln!(
                    out,
                    "{} {:12} {:14} {}",
                    if l.pass { "PASS" } else { "FAIL" },
                    l.name,
                    l.carrier,
                    l.detail
                );
            }
            if !exception_rows.is_empty() {
                let _ = writeln!(out, "documented exceptions:");
                for e in &exception_rows {
                    let _ = writeln!(out, "  {e}");
                }
            }
            let _ = writeln!(out, "overall: {}", if pass { "PASS" } else { "FAIL" });
        }
    }
    Ok((out, pass))
}

fn collect_rows(
    ledger: &DiscrepancyLedger,
    carrier: &str,
    all: &mut Vec<String>,
    exceptions: &mut Vec<String>,
) {
    for r in &ledger.rows {
        let row = format!(
            "{{\"carrier\": \"{}\", \"regime\": \"{}\", \"pair\": \"[{},{}]\", \"verdict\": \"{}\"}}",
            carrier,
            r.regime.name(),
            r.pair.0,
            r.pair.1,
            r.verdict.name()
        );
        if r.verdict != twistspace::poincare::Verdict::Match {
            exceptions.push(row.clone());
        }
        all.push(row);
    }
}
