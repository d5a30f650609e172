//! The dual quantum group on the generators `{Λ^μ_ν, a^μ}`.
//!
//! The algebra relations close on `a`-linear terms in the translation
//! sector and on `Λ`-bilinear plus `Λ`-linear terms in the mixed sector,
//! with all `Λ` entries mutually commuting. Coproducts are the matrix-group
//! ones. The relations are taken as axioms and consistency-checked (Jacobi,
//! homomorphism, coassociativity) rather than re-derived.

use crate::error::Result;
use crate::expr::NcExpr;
use crate::generator::{Generator, Word};
use crate::poincare::{Metric, TwistCarrier};
use crate::rewrite::{commutator, Ruleset};
use crate::scalar::Scalar;
use crate::series::Series;
use crate::tensor::TensorExpr;

fn delta(a: u8, b: u8) -> Scalar {
    Scalar::from_int(i64::from(a == b))
}

/// `1/ξ = 2s` times `i`.
fn two_i_s() -> Series {
    Series::s_power(1, Scalar::imag_ratio(2, 1))
}

/// Lowered group translation `a_β = η_{βρ} a^ρ`.
fn a_lower(beta: u8) -> NcExpr {
    NcExpr::gen(Generator::A(beta)).scale(&Metric::eta_scalar(beta, beta))
}

/// Lowered first index `Λ_{αρ} = η_{ασ} Λ^σ_ρ`.
fn lam_lower(alpha: u8, rho: u8) -> NcExpr {
    NcExpr::gen(Generator::Lam(alpha, rho)).scale(&Metric::eta_scalar(alpha, alpha))
}

/// `[a^μ, a^ν]` — `a`-linear, proportional to `1/ξ`.
pub fn bracket_a_a(mu: u8, nu: u8, carrier: &TwistCarrier) -> NcExpr {
    let (alpha, beta) = carrier.alpha_beta();
    let znu = carrier.zeta(nu);
    let zmu = carrier.zeta(mu);
    let first = a_lower(beta)
        .scale(&delta(mu, alpha))
        .sub(&a_lower(alpha).scale(&delta(mu, beta)))
        .scale(&znu);
    let second = a_lower(alpha)
        .scale(&delta(nu, beta))
        .sub(&a_lower(beta).scale(&delta(nu, alpha)))
        .scale(&zmu);
    first.add(&second).scale_series(&two_i_s())
}

/// `[a^μ, Λ^ν_ρ]` — `Λ`-bilinear plus `Λ`-linear.
pub fn bracket_a_lam(mu: u8, nu: u8, rho: u8, carrier: &TwistCarrier) -> NcExpr {
    let (alpha, beta) = carrier.alpha_beta();
    let lam_c = carrier.lambda_index();
    // ζ^λ Λ^μ_λ (η_{βρ}Λ^ν_α − η_{αρ}Λ^ν_β): ζ picks the carrier component.
    let inner = NcExpr::gen(Generator::Lam(nu, alpha))
        .scale(&Metric::eta_scalar(beta, rho))
        .sub(&NcExpr::gen(Generator::Lam(nu, beta)).scale(&Metric::eta_scalar(alpha, rho)));
    let bilinear = NcExpr::gen(Generator::Lam(mu, lam_c)).mul_raw(&inner);
    // Λ letters commute; store the words sorted.
    let bilinear = sort_commuting_lambdas(&bilinear);
    let linear = lam_lower(alpha, rho)
        .scale(&delta(nu, beta))
        .sub(&lam_lower(beta, rho).scale(&delta(nu, alpha)))
        .scale(&carrier.zeta(mu));
    bilinear.add(&linear).scale_series(&two_i_s())
}

fn sort_commuting_lambdas(e: &NcExpr) -> NcExpr {
    let mut out = NcExpr::zero();
    for (w, c) in e.terms() {
        let mut word = w.clone();
        word.sort();
        out.add_term(word, c.clone());
    }
    out
}

pub fn group_generators() -> Vec<Generator> {
    let mut v = Vec::new();
    for mu in 0..4u8 {
        for nu in 0..4u8 {
            v.push(Generator::Lam(mu, nu));
        }
    }
    for mu in 0..4u8 {
        v.push(Generator::A(mu));
    }
    v
}

/// Rewrite rules over `{Λ, a}`, parameterized by the carrier.
pub fn group_rules(carrier: &TwistCarrier) -> Ruleset {
    let mut r = Ruleset::new();
    let lams: Vec<Generator> = group_generators()
        .into_iter()
        .filter(|g| matches!(g, Generator::Lam(_, _)))
        .collect();
    for (i, &l1) in lams.iter().enumerate() {
        for &l2 in &lams[..i] {
            r.insert(l1, l2, NcExpr::zero());
        }
    }
    for mu in 0..4u8 {
        for &lam in &lams {
            if let Generator::Lam(nu, rho) = lam {
                r.insert(Generator::A(mu), lam, bracket_a_lam(mu, nu, rho, carrier));
            }
        }
    }
    for mu in 0..4u8 {
        for nu in 0..mu {
            r.insert(
                Generator::A(mu),
                Generator::A(nu),
                bracket_a_a(mu, nu, carrier),
            );
        }
    }
    r
}

/// `Δ(Λ^μ_ν) = Λ^μ_ρ ⊗ Λ^ρ_ν`, `Δ(a^μ) = Λ^μ_ν ⊗ a^ν + a^μ ⊗ 1`.
pub fn group_coproduct(g: Generator) -> TensorExpr {
    match g {
        Generator::Lam(mu, nu) => {
            let mut t = TensorExpr::zero(2);
            for rho in 0..4u8 {
                t.add_term(
                    vec![vec![Generator::Lam(mu, rho)], vec![Generator::Lam(rho, nu)]],
                    Series::one(),
                );
            }
            t
        }
        Generator::A(mu) => {
            let mut t = TensorExpr::zero(2);
            for nu in 0..4u8 {
                t.add_term(
                    vec![vec![Generator::Lam(mu, nu)], vec![Generator::A(nu)]],
                    Series::one(),
                );
            }
            t.add_term(vec![vec![Generator::A(mu)], Vec::new()], Series::one());
            t
        }
        _ => panic!("group coproduct is defined on the Λ/a alphabet only"),
    }
}

/// `ε(Λ^μ_ν) = δ^μ_ν`, `ε(a^μ) = 0`, extended multiplicatively to words.
pub fn group_counit(w: &Word) -> Scalar {
    let mut out = Scalar::one();
    for &g in w {
        let e = match g {
            Generator::Lam(mu, nu) => delta(mu, nu),
            Generator::A(_) => Scalar::zero(),
            _ => panic!("group counit is defined on the Λ/a alphabet only"),
        };
        out = &out * &e;
        if out.is_zero() {
            return out;
        }
    }
    out
}

/// `Δ` extended to a word as an algebra map (legs ordered with the group
/// rules).
pub fn group_coproduct_word(w: &Word, rules: &Ruleset) -> Result<TensorExpr> {
    let mut acc = TensorExpr::unit(2);
    for &g in w {
        acc = acc.mul(&group_coproduct(g), rules)?;
    }
    Ok(acc)
}

pub struct GroupReport {
    pub carrier: TwistCarrier,
    pub jacobi_failures: Vec<(Generator, Generator, Generator)>,
    pub homomorphism_failures: Vec<(Generator, Generator)>,
    pub coassociativity_ok: bool,
    pub counit_ok: bool,
}

impl GroupReport {
    pub fn all_ok(&self) -> bool {
        self.jacobi_failures.is_empty()
            && self.homomorphism_failures.is_empty()
            && self.coassociativity_ok
            && self.counit_ok
    }
}

/// Jacobi identities over the group relations, coproduct homomorphism and
/// coassociativity, all exact at every series order.
pub fn group_consistency(carrier: &TwistCarrier) -> Result<GroupReport> {
    let rules = group_rules(carrier);
    let a_gens: Vec<Generator> = (0..4u8).map(Generator::A).collect();
    let lam_gens: Vec<Generator> = group_generators()
        .into_iter()
        .filter(|g| matches!(g, Generator::Lam(_, _)))
        .collect();

    let mut jacobi_failures = Vec::new();
    let check_triple = |a: Generator,
                        b: Generator,
                        c: Generator,
                        failures: &mut Vec<(Generator, Generator, Generator)>|
     -> Result<()> {
        let ea = NcExpr::gen(a);
        let eb = NcExpr::gen(b);
        let ec = NcExpr::gen(c);
        let t1 = commutator(&commutator(&ea, &eb, &rules)?, &ec, &rules)?;
        let t2 = commutator(&commutator(&eb, &ec, &rules)?, &ea, &rules)?;
        let t3 = commutator(&commutator(&ec, &ea, &rules)?, &eb, &rules)?;
        if !t1.add(&t2).add(&t3).is_zero() {
            failures.push((a, b, c));
        }
        Ok(())
    };
    for i in 0..a_gens.len() {
        for j in (i + 1)..a_gens.len() {
            for k in (j + 1)..a_gens.len() {
                check_triple(a_gens[i], a_gens[j], a_gens[k], &mut jacobi_failures)?;
            }
            for &lam in &lam_gens {
                check_triple(a_gens[i], a_gens[j], lam, &mut jacobi_failures)?;
            }
        }
    }

    // Δ([g, g']) == [Δg, Δg'] over representative pairs.
    let mut homomorphism_failures = Vec::new();
    let mut pairs: Vec<(Generator, Generator)> = Vec::new();
    for i in 0..a_gens.len() {
        for j in (i + 1)..a_gens.len() {
            pairs.push((a_gens[i], a_gens[j]));
        }
        for &lam in &lam_gens {
            pairs.push((a_gens[i], lam));
        }
    }
    for (g1, g2) in pairs {
        let bracket = commutator(&NcExpr::gen(g1), &NcExpr::gen(g2), &rules)?;
        let mut lhs = TensorExpr::zero(2);
        for (w, c) in bracket.terms() {
            lhs = lhs.add(&group_coproduct_word(w, &rules)?.scale_series(c));
        }
        let d1 = group_coproduct(g1);
        let d2 = group_coproduct(g2);
        let rhs = d1.mul(&d2, &rules)?.sub(&d2.mul(&d1, &rules)?);
        if lhs != rhs {
            homomorphism_failures.push((g1, g2));
        }
    }

    let mut coassociativity_ok = true;
    let mut counit_ok = true;
    for g in group_generators() {
        let d = group_coproduct(g);
        let left = d.map_slot(0, 2, |w| group_coproduct_word(w, &rules))?;
        let right = d.map_slot(1, 2, |w| group_coproduct_word(w, &rules))?;
        if left != right {
            coassociativity_ok = false;
        }
        let eps_left = d.counit_slot(0, group_counit).into_expr();
        let eps_right = d.counit_slot(1, group_counit).into_expr();
        if eps_left != NcExpr::gen(g) || eps_right != NcExpr::gen(g) {
            counit_ok = false;
        }
    }

    Ok(GroupReport {
        carrier: *carrier,
        jacobi_failures,
        homomorphism_failures,
        coassociativity_ok,
        counit_ok,
    })
}
