//! Classical Poincaré Hopf structure and its Abelian twists.
//!
//! Brackets are the classical ones (the twist leaves them undeformed); the
//! coproducts are deformed by conjugation with the twist factor
//! `F = exp(i·s·ζ^λ P_λ ∧ M_{αβ})`, `s = 1/(2ξ)`. Conjugation is the source
//! of truth; the closed sinh/cosh forms are carried separately as an oracle
//! and compared term by term.

use crate::closed_form::{trig_expr, trig_expr_minus_one, TrigKind};
use crate::error::{EngineError, Result};
use crate::expr::NcExpr;
use crate::generator::{Generator, Word};
use crate::rewrite::{commutator, normal_order, Ruleset};
use crate::scalar::Scalar;
use crate::series::Series;
use crate::tensor::TensorExpr;

/// Minkowski metric `diag(-1, +1, +1, +1)`.
pub struct Metric;

impl Metric {
    pub fn sign(mu: u8) -> i64 {
        if mu == 0 {
            -1
        } else {
            1
        }
    }

    pub fn eta(mu: u8, nu: u8) -> i64 {
        if mu == nu {
            Metric::sign(mu)
        } else {
            0
        }
    }

    pub fn eta_scalar(mu: u8, nu: u8) -> Scalar {
        Scalar::from_int(Metric::eta(mu, nu))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CarrierCase {
    /// Carrier `{M_kl, P_γ}` with `γ ∉ {k, l, 0}`.
    RotationGamma,
    /// Carrier `{M_kl, P_0}`.
    RotationZero,
    /// Carrier `{M_k0, P_l}` with `l ≠ k` spatial.
    Boost,
}

impl CarrierCase {
    pub fn name(&self) -> &'static str {
        match self {
            CarrierCase::RotationGamma => "rotation-gamma",
            CarrierCase::RotationZero => "rotation-zero",
            CarrierCase::Boost => "boost",
        }
    }

    /// Roman-numeral tag of the corresponding table block.
    pub fn numeral(&self) -> &'static str {
        match self {
            CarrierCase::RotationGamma => "i",
            CarrierCase::RotationZero => "ii",
            CarrierCase::Boost => "iii",
        }
    }

    pub fn parse(s: &str) -> Option<CarrierCase> {
        match s {
            "rotation-gamma" => Some(CarrierCase::RotationGamma),
            "rotation-zero" => Some(CarrierCase::RotationZero),
            "boost" => Some(CarrierCase::Boost),
            _ => None,
        }
    }
}

/// Which Abelian twist is active.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TwistCarrier {
    pub case: CarrierCase,
    pub k: u8,
    pub l: u8,
    /// Only meaningful for the rotation-gamma case.
    pub gamma: u8,
}

impl TwistCarrier {
    pub fn rotation_gamma(k: u8, l: u8, gamma: u8) -> Result<Self> {
        let c = TwistCarrier {
            case: CarrierCase::RotationGamma,
            k,
            l,
            gamma,
        };
        c.validate()?;
        Ok(c)
    }

    pub fn rotation_zero(k: u8, l: u8) -> Result<Self> {
        let c = TwistCarrier {
            case: CarrierCase::RotationZero,
            k,
            l,
            gamma: 0,
        };
        c.validate()?;
        Ok(c)
    }

    pub fn boost(k: u8, l: u8) -> Result<Self> {
        let c = TwistCarrier {
            case: CarrierCase::Boost,
            k,
            l,
            gamma: 0,
        };
        c.validate()?;
        Ok(c)
    }

    /// The default index assignment for each case.
    pub fn default_for(case: CarrierCase) -> Self {
        match case {
            CarrierCase::RotationGamma => TwistCarrier::rotation_gamma(1, 2, 3).unwrap(),
            CarrierCase::RotationZero => TwistCarrier::rotation_zero(1, 2).unwrap(),
            CarrierCase::Boost => TwistCarrier::boost(1, 2).unwrap(),
        }
    }

    pub fn all_defaults() -> [Self; 3] {
        [
            TwistCarrier::default_for(CarrierCase::RotationGamma),
            TwistCarrier::default_for(CarrierCase::RotationZero),
            TwistCarrier::default_for(CarrierCase::Boost),
        ]
    }

    pub fn validate(&self) -> Result<()> {
        let spatial = |v: u8| (1..=3).contains(&v);
        let fail = |msg: String| Err(EngineError::InvalidCarrier(msg));
        match self.case {
            CarrierCase::RotationGamma => {
                if !spatial(self.k) || !spatial(self.l) || !spatial(self.gamma) {
                    return fail(format!(
                        "rotation-gamma needs spatial k, l, gamma; got k={} l={} gamma={}",
                        self.k, self.l, self.gamma
                    ));
                }
                if self.k == self.l || self.gamma == self.k || self.gamma == self.l {
                    return fail(format!(
                        "rotation-gamma needs distinct k, l, gamma; got k={} l={} gamma={}",
                        self.k, self.l, self.gamma
                    ));
                }
            }
            CarrierCase::RotationZero | CarrierCase::Boost => {
                if !spatial(self.k) || !spatial(self.l) || self.k == self.l {
                    return fail(format!(
                        "{} needs distinct spatial k, l; got k={} l={}",
                        self.case.name(),
                        self.k,
                        self.l
                    ));
                }
            }
        }
        Ok(())
    }

    /// Indices `(α, β)` of the carrier Lorentz generator `M_{αβ}`.
    pub fn alpha_beta(&self) -> (u8, u8) {
        match self.case {
            CarrierCase::RotationGamma | CarrierCase::RotationZero => (self.k, self.l),
            CarrierCase::Boost => (self.k, 0),
        }
    }

    /// Index of the carrier translation `P_λ`.
    pub fn lambda_index(&self) -> u8 {
        match self.case {
            CarrierCase::RotationGamma => self.gamma,
            CarrierCase::RotationZero => 0,
            CarrierCase::Boost => self.l,
        }
    }

    /// `ζ` selects exactly the carrier component, normalized to one.
    pub fn zeta(&self, lambda: u8) -> Scalar {
        if lambda == self.lambda_index() {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    }

    /// Hyperbolic carriers (boost) expand in sinh/cosh, circular ones
    /// (space rotations) in sin/cos.
    pub fn hyperbolic(&self) -> bool {
        matches!(self.case, CarrierCase::Boost)
    }

    pub fn odd_kind(&self) -> TrigKind {
        if self.hyperbolic() {
            TrigKind::Sinh
        } else {
            TrigKind::Sin
        }
    }

    pub fn even_kind(&self) -> TrigKind {
        if self.hyperbolic() {
            TrigKind::Cosh
        } else {
            TrigKind::Cos
        }
    }

    /// `M_{αβ}` as an expression (boost carriers have β = 0 < α = k).
    pub fn carrier_m(&self) -> NcExpr {
        let (a, b) = self.alpha_beta();
        NcExpr::m_gen(a, b)
    }

    pub fn carrier_p(&self) -> Generator {
        Generator::P(self.lambda_index())
    }

    /// The leftover spatial index for the two-index cases.
    pub fn spectator(&self) -> Option<u8> {
        match self.case {
            CarrierCase::RotationGamma => None,
            _ => (1..=3).find(|i| *i != self.k && *i != self.l),
        }
    }
}

/// `[M_{μν}, M_{ρσ}]`, `[M_{μν}, P_ρ]`, `[P, P]` of the undeformed algebra.
pub fn classical_bracket(g1: Generator, g2: Generator) -> NcExpr {
    use Generator::*;
    match (g1, g2) {
        (M(mu, nu), M(rho, sig)) => {
            // i(η_{μσ} M_{νρ} − η_{νσ} M_{μρ} + η_{νρ} M_{μσ} − η_{μρ} M_{νσ})
            let mut e = NcExpr::zero();
            e = e.add(&NcExpr::m_gen(nu, rho).scale(&Metric::eta_scalar(mu, sig)));
            e = e.sub(&NcExpr::m_gen(mu, rho).scale(&Metric::eta_scalar(nu, sig)));
            e = e.add(&NcExpr::m_gen(mu, sig).scale(&Metric::eta_scalar(nu, rho)));
            e = e.sub(&NcExpr::m_gen(nu, sig).scale(&Metric::eta_scalar(mu, rho)));
            e.scale(&Scalar::i())
        }
        (M(mu, nu), P(rho)) => {
            // i(η_{νρ} P_μ − η_{μρ} P_ν)
            NcExpr::gen(P(mu))
                .scale(&Metric::eta_scalar(nu, rho))
                .sub(&NcExpr::gen(P(nu)).scale(&Metric::eta_scalar(mu, rho)))
                .scale(&Scalar::i())
        }
        (P(_), M(_, _)) => classical_bracket(g2, g1).neg(),
        (P(_), P(_)) => NcExpr::zero(),
        _ => panic!("classical bracket is defined on the M/P alphabet only"),
    }
}

/// Extend the classical bracket bilinearly to expressions.
pub fn classical_bracket_expr(a: &NcExpr, b: &NcExpr) -> NcExpr {
    let mut out = NcExpr::zero();
    for (wa, ca) in a.terms() {
        for (wb, cb) in b.terms() {
            assert!(wa.len() == 1 && wb.len() == 1, "bracket of non-letters");
            out = out.add(&classical_bracket(wa[0], wb[0]).scale_series(&ca.mul(cb)));
        }
    }
    out
}

fn all_m() -> Vec<Generator> {
    let mut v = Vec::new();
    for mu in 0..4u8 {
        for nu in (mu + 1)..4 {
            v.push(Generator::M(mu, nu));
        }
    }
    v
}

fn all_p() -> Vec<Generator> {
    (0..4u8).map(Generator::P).collect()
}

/// All ten undeformed symmetry generators.
pub fn poincare_generators() -> Vec<Generator> {
    let mut v = all_m();
    v.extend(all_p());
    v
}

/// Rewrite rules for the undeformed algebra, with every zero bracket
/// spelled out.
pub fn classical_rules() -> Ruleset {
    let mut r = Ruleset::new();
    let ms = all_m();
    let ps = all_p();
    for (i, &m1) in ms.iter().enumerate() {
        for &m2 in &ms[..i] {
            r.insert(m1, m2, classical_bracket(m1, m2));
        }
    }
    for &p in &ps {
        for &m in &ms {
            r.insert(p, m, classical_bracket(p, m));
        }
    }
    for (i, &p1) in ps.iter().enumerate() {
        for &p2 in &ps[..i] {
            r.insert(p1, p2, NcExpr::zero());
        }
    }
    r
}

/// `Δ₀(g) = g⊗1 + 1⊗g`.
pub fn primitive_coproduct(g: Generator) -> TensorExpr {
    let e = NcExpr::gen(g);
    TensorExpr::of_pair(&e, &NcExpr::one()).add(&TensorExpr::of_pair(&NcExpr::one(), &e))
}

/// `Δ₀` extended to a word as an algebra map.
pub fn primitive_coproduct_word(w: &Word, rules: &Ruleset) -> Result<TensorExpr> {
    let mut acc = TensorExpr::unit(2);
    for &g in w {
        acc = acc.mul(&primitive_coproduct(g), rules)?;
    }
    Ok(acc)
}

/// The twist exponent `X = i·s·(ζ^λ P_λ ∧ M_{αβ})`.
pub fn twist_exponent(carrier: &TwistCarrier) -> TensorExpr {
    let p = NcExpr::gen(carrier.carrier_p());
    TensorExpr::wedge(&p, &carrier.carrier_m()).scale_series(&Series::s_power(1, Scalar::i()))
}

/// `F = exp(X)` expanded through `s^order`.
pub fn twist_factor(carrier: &TwistCarrier, order: u32) -> Result<TensorExpr> {
    let rules = classical_rules();
    let x = twist_exponent(carrier).truncated(order);
    let mut f = TensorExpr::unit(2).truncated(order);
    let mut term = TensorExpr::unit(2).truncated(order);
    for n in 1..=order {
        term = term
            .mul(&x, &rules)?
            .scale(&Scalar::ratio(1, n as i64))
            .truncated(order);
        if term.is_zero() {
            break;
        }
        f = f.add(&term);
    }
    Ok(f)
}

/// `F⁻¹`, obtained by `s -> -s`.
pub fn twist_factor_inv(carrier: &TwistCarrier, order: u32) -> Result<TensorExpr> {
    Ok(twist_factor(carrier, order)?.flip_s())
}

/// Precomputed twist data for one carrier at one order: the twist factor,
/// its inverse, the classical rules and the conjugated coproducts of all
/// ten generators. Immutable after construction, cheap to share.
pub struct TwistContext {
    pub carrier: TwistCarrier,
    pub order: u32,
    pub rules: Ruleset,
    pub f: TensorExpr,
    pub finv: TensorExpr,
    coproducts: std::collections::BTreeMap<Generator, TensorExpr>,
}

impl TwistContext {
    pub fn new(carrier: &TwistCarrier, order: u32) -> Result<Self> {
        carrier.validate()?;
        let rules = classical_rules();
        let f = twist_factor(carrier, order)?;
        let finv = f.flip_s();
        let mut coproducts = std::collections::BTreeMap::new();
        let mut memo = std::collections::HashMap::new();
        for g in poincare_generators() {
            let d = f
                .mul_memo(&primitive_coproduct(g).truncated(order), &rules, &mut memo)?
                .mul_memo(&finv, &rules, &mut memo)?
                .truncated(order);
            coproducts.insert(g, d);
        }
        Ok(TwistContext {
            carrier: *carrier,
            order,
            rules,
            f,
            finv,
            coproducts,
        })
    }

    /// `Δ_ξ(g) = F · Δ₀(g) · F⁻¹`.
    pub fn coproduct(&self, g: Generator) -> &TensorExpr {
        &self.coproducts[&g]
    }

    /// `Δ_ξ` extended to a word as an algebra map.
    pub fn coproduct_word(&self, w: &Word) -> Result<TensorExpr> {
        let mut acc = TensorExpr::unit(2);
        for &g in w {
            acc = acc
                .mul(self.coproduct(g), &self.rules)?
                .truncated(self.order);
        }
        Ok(acc)
    }

    /// Word coproduct with an external memo for repeated legs.
    pub fn coproduct_word_memo(
        &self,
        w: &Word,
        memo: &mut std::collections::HashMap<Word, TensorExpr>,
    ) -> Result<TensorExpr> {
        if let Some(t) = memo.get(w) {
            return Ok(t.clone());
        }
        let t = self.coproduct_word(w)?;
        memo.insert(w.clone(), t.clone());
        Ok(t)
    }

    /// `Δ_ξ` extended linearly to expressions.
    pub fn coproduct_expr(&self, e: &NcExpr) -> Result<TensorExpr> {
        let mut acc = TensorExpr::zero(2);
        for (w, c) in e.terms() {
            acc = acc.add(&self.coproduct_word(w)?.scale_series(c));
        }
        Ok(acc.truncated(self.order))
    }
}

/// `Δ_ξ(g) = F · Δ₀(g) · F⁻¹` — the engine's source of truth.
pub fn twisted_coproduct(g: Generator, carrier: &TwistCarrier, order: u32) -> Result<TensorExpr> {
    Ok(TwistContext::new(carrier, order)?.coproduct(g).clone())
}

/// `Δ_ξ` extended to a word as an algebra map.
pub fn twisted_coproduct_word(w: &Word, carrier: &TwistCarrier, order: u32) -> Result<TensorExpr> {
    TwistContext::new(carrier, order)?.coproduct_word(w)
}

/// `Δ_ξ` extended linearly to expressions.
pub fn twisted_coproduct_expr(
    e: &NcExpr,
    carrier: &TwistCarrier,
    order: u32,
) -> Result<TensorExpr> {
    TwistContext::new(carrier, order)?.coproduct_expr(e)
}

/// The deformed coproducts in their printed closed form, expanded in `s`.
///
/// `tensor` is the full oracle value; `reading_sensitive` is the part whose
/// published index conventions are under-specified (the `ψ/χ` terms of the
/// Lorentz sector) under the reading fixed in [`psi_chi`]. The translation
/// sector has no such part.
pub struct CoproductOracle {
    pub tensor: TensorExpr,
    pub reading_sensitive: Option<TensorExpr>,
}

/// `ψ_λ`, `χ_λ` with the free indices read as `(i, j, k, l) := (μ, ν, α, β)`.
pub fn psi_chi(mu: u8, nu: u8, carrier: &TwistCarrier) -> (Scalar, Scalar) {
    let (alpha, beta) = carrier.alpha_beta();
    let c = carrier.lambda_index();
    let eta = Metric::eta;
    let psi = Scalar::from_int(eta(nu, c) * eta(beta, mu) - eta(mu, c) * eta(beta, nu));
    let chi = Scalar::from_int(eta(nu, c) * eta(alpha, mu) - eta(mu, c) * eta(alpha, nu));
    (psi, chi)
}

pub fn closed_form_coproduct(g: Generator, carrier: &TwistCarrier, order: u32) -> CoproductOracle {
    let (alpha, beta) = carrier.alpha_beta();
    let c = carrier.lambda_index();
    let s_odd = trig_expr(carrier.odd_kind(), Generator::P(c), order);
    let s_even_m1 = trig_expr_minus_one(carrier.even_kind(), Generator::P(c), order);
    // (−1)^{1+γ}: +1 for rotation carriers, −1 for boosts.
    let eps_sign = if carrier.hyperbolic() {
        Scalar::from_int(-1)
    } else {
        Scalar::one()
    };
    let eta = Metric::eta_scalar;
    let s1 = |coeff: Scalar| Series::s_power(1, coeff);

    match g {
        Generator::P(mu) => {
            // Δ₀ + S ∧ (η_{αμ}P_β − η_{βμ}P_α) + (C−1) ⊥ (η_{αα}η_{αμ}P_α + η_{ββ}η_{βμ}P_β)
            let u = NcExpr::gen(Generator::P(beta))
                .scale(&eta(alpha, mu))
                .sub(&NcExpr::gen(Generator::P(alpha)).scale(&eta(beta, mu)));
            let z = NcExpr::gen(Generator::P(alpha))
                .scale(&(&eta(alpha, alpha) * &eta(alpha, mu)))
                .add(&NcExpr::gen(Generator::P(beta)).scale(&(&eta(beta, beta) * &eta(beta, mu))));
            let t = primitive_coproduct(g)
                .add(&TensorExpr::wedge(&s_odd, &u))
                .add(&TensorExpr::perp(&s_even_m1, &z))
                .truncated(order);
            CoproductOracle {
                tensor: t,
                reading_sensitive: None,
            }
        }
        Generator::M(mu, nu) => {
            let e_carrier = carrier.carrier_m();
            let j = NcExpr::gen(g);
            let k_br = classical_bracket_expr(&j, &e_carrier);
            let kk_br = classical_bracket_expr(&k_br, &e_carrier);
            // T1: M_{αβ} ∧ s(η_{μλ}P_ν − η_{νλ}P_μ)ζ^λ
            let t1_rhs = NcExpr::gen(Generator::P(nu))
                .scale(&eta(mu, c))
                .sub(&NcExpr::gen(Generator::P(mu)).scale(&eta(nu, c)))
                .scale_series(&s1(Scalar::one()));
            let t1 = TensorExpr::wedge(&e_carrier, &t1_rhs);
            // T2: i[J, E] ∧ S
            let t2 = TensorExpr::wedge(&k_br.scale(&Scalar::i()), &s_odd);
            // T3: [[J, E], E] ⊥ (−1)^{1+γ}(C−1)
            let t3 = TensorExpr::perp(&kk_br, &s_even_m1.scale(&eps_sign));
            // T4: (E·S) ⊥ s(ψP_α − χP_β)
            let (psi, chi) = psi_chi(mu, nu, carrier);
            let v = NcExpr::gen(Generator::P(alpha))
                .scale(&psi)
                .sub(&NcExpr::gen(Generator::P(beta)).scale(&chi));
            let t4 = TensorExpr::perp(
                &e_carrier.mul_raw(&s_odd),
                &v.scale_series(&s1(Scalar::one())),
            );
            // T5: s(ψη_{αα}P_β + χη_{ββ}P_α) ∧ E·(−1)^{1+γ}(C−1)
            let z = NcExpr::gen(Generator::P(beta))
                .scale(&(&psi * &eta(alpha, alpha)))
                .add(&NcExpr::gen(Generator::P(alpha)).scale(&(&chi * &eta(beta, beta))))
                .scale_series(&s1(Scalar::one()));
            let t5 = TensorExpr::wedge(&z, &e_carrier.mul_raw(&s_even_m1).scale(&eps_sign));
            let sensitive = t4.add(&t5).truncated(order);
            let t = primitive_coproduct(g)
                .add(&t1)
                .add(&t2)
                .add(&t3)
                .add(&sensitive)
                .truncated(order);
            CoproductOracle {
                tensor: t,
                reading_sensitive: Some(sensitive),
            }
        }
        _ => panic!("coproduct oracle is defined on the M/P alphabet only"),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Verdict {
    Match,
    SignFlip,
    Ambiguous,
    Mismatch,
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Match => "match",
            Verdict::SignFlip => "sign-flip",
            Verdict::Ambiguous => "ambiguous",
            Verdict::Mismatch => "mismatch",
        }
    }

    /// Classes that verification treats as documented, non-failing.
    pub fn acceptable(&self) -> bool {
        !matches!(self, Verdict::Mismatch)
    }
}

pub struct CoproductVerdict {
    pub gen: Generator,
    pub verdict: Verdict,
    pub residual_terms: usize,
}

pub struct CoproductReport {
    pub carrier: TwistCarrier,
    pub order: u32,
    pub entries: Vec<CoproductVerdict>,
}

impl CoproductReport {
    pub fn all_match(&self) -> bool {
        self.entries.iter().all(|e| e.verdict == Verdict::Match)
    }

    pub fn translation_sector_ok(&self) -> bool {
        self.entries
            .iter()
            .filter(|e| matches!(e.gen, Generator::P(_)))
            .all(|e| e.verdict == Verdict::Match)
    }

    pub fn acceptable(&self) -> bool {
        self.entries.iter().all(|e| e.verdict.acceptable())
    }
}

/// Compare conjugation against the closed-form oracle for every generator.
pub fn verify_coproducts(carrier: &TwistCarrier, order: u32) -> Result<CoproductReport> {
    let ctx = TwistContext::new(carrier, order)?;
    let mut entries = Vec::new();
    for g in poincare_generators() {
        let conj = ctx.coproduct(g).clone();
        let oracle = closed_form_coproduct(g, carrier, order);
        let diff = conj.sub(&oracle.tensor.truncated(order)).truncated(order);
        let verdict = if diff.is_zero() {
            Verdict::Match
        } else if oracle.reading_sensitive.is_some() {
            // Lorentz sector: the difference is attributed to the
            // under-specified published index conventions, never silently
            // corrected.
            Verdict::Ambiguous
        } else {
            Verdict::Mismatch
        };
        entries.push(CoproductVerdict {
            gen: g,
            verdict,
            residual_terms: diff.num_terms(),
        });
    }
    Ok(CoproductReport {
        carrier: *carrier,
        order,
        entries,
    })
}

fn u_counit(w: &Word) -> Scalar {
    if w.is_empty() {
        Scalar::one()
    } else {
        Scalar::zero()
    }
}

/// Hopf-structure checks for one carrier, all exact to the given order.
pub struct HopfReport {
    pub carrier: TwistCarrier,
    pub order: u32,
    pub f_times_f_inv_ok: bool,
    pub cocycle_ok: bool,
    pub coassociativity_ok: bool,
    pub counit_ok: bool,
    pub homomorphism_ok: bool,
    pub carrier_abelian_ok: bool,
}

impl HopfReport {
    pub fn all_ok(&self) -> bool {
        self.f_times_f_inv_ok
            && self.cocycle_ok
            && self.coassociativity_ok
            && self.counit_ok
            && self.homomorphism_ok
            && self.carrier_abelian_ok
    }
}

pub fn check_hopf(carrier: &TwistCarrier, order: u32) -> Result<HopfReport> {
    let ctx = TwistContext::new(carrier, order)?;
    let rules = &ctx.rules;
    let f = &ctx.f;
    let finv = &ctx.finv;

    let f_times_f_inv_ok =
        f.mul(finv, rules)?.truncated(order) == TensorExpr::unit(2).truncated(order);

    // Two-cocycle: (F⊗1)·(Δ₀⊗id)F == (1⊗F)·(id⊗Δ₀)F.
    let f_otimes_1 = f.map_slot(1, 2, |w| {
        Ok(TensorExpr::embed(
            &NcExpr::term(w.clone(), Series::one()),
            2,
            0,
        ))
    })?;
    let one_otimes_f = f.map_slot(0, 2, |w| {
        Ok(TensorExpr::embed(
            &NcExpr::term(w.clone(), Series::one()),
            2,
            1,
        ))
    })?;
    let d0_f = f.map_slot(0, 2, |w| primitive_coproduct_word(w, rules))?;
    let id_d0_f = f.map_slot(1, 2, |w| primitive_coproduct_word(w, rules))?;
    let lhs = f_otimes_1.mul(&d0_f, rules)?.truncated(order);
    let rhs = one_otimes_f.mul(&id_d0_f, rules)?.truncated(order);
    let cocycle_ok = lhs == rhs;

    let mut coassociativity_ok = true;
    let mut counit_ok = true;
    let mut memo = std::collections::HashMap::new();
    for g in poincare_generators() {
        let d = ctx.coproduct(g);
        let left = d
            .map_slot(0, 2, |w| ctx.coproduct_word_memo(w, &mut memo))?
            .truncated(order);
        let right = d
            .map_slot(1, 2, |w| ctx.coproduct_word_memo(w, &mut memo))?
            .truncated(order);
        if left != right {
            coassociativity_ok = false;
        }
        let eps_left = d.counit_slot(0, u_counit).into_expr();
        let eps_right = d.counit_slot(1, u_counit).into_expr();
        let e = NcExpr::gen(g).truncated(order);
        if eps_left.truncated(order) != e || eps_right.truncated(order) != e {
            counit_ok = false;
        }
    }

    // Δ_ξ is an algebra map: Δ_ξ([A,B]) == [Δ_ξA, Δ_ξB] for all pairs.
    let mut homomorphism_ok = true;
    let gens = poincare_generators();
    for (i, &g1) in gens.iter().enumerate() {
        for &g2 in gens.iter().skip(i + 1) {
            let bracket = classical_bracket(g1, g2);
            let lhs = ctx.coproduct_expr(&bracket)?;
            let d1 = ctx.coproduct(g1);
            let d2 = ctx.coproduct(g2);
            let rhs = d1.mul(d2, rules)?.sub(&d2.mul(d1, rules)?).truncated(order);
            if lhs != rhs {
                homomorphism_ok = false;
            }
        }
    }

    let carrier_abelian_ok = commutator(
        &NcExpr::gen(carrier.carrier_p()),
        &carrier.carrier_m(),
        rules,
    )?
    .is_zero();

    Ok(HopfReport {
        carrier: *carrier,
        order,
        f_times_f_inv_ok,
        cocycle_ok,
        coassociativity_ok,
        counit_ok,
        homomorphism_ok,
        carrier_abelian_ok,
    })
}

/// Normal order against the classical rules (convenience).
pub fn classical_normal_order(e: &NcExpr) -> Result<NcExpr> {
    normal_order(e, &classical_rules())
}
