//! Deformed uncertainty bounds and their numeric validation.
//!
//! Every nonzero table commutator `c = [a, b]` yields the bound
//! `Δ(a)Δ(b) ≥ ½|⟨c⟩|`. The bounds are checked against a concrete
//! momentum-space realization `X_μ = i Σ_ν Φ_{μν}(p) ∂/∂p_ν` with
//! `Φ` read off the table; this is one consistent model of the abstract
//! relations, and every realization-dependent statement is confined to
//! this module. Floating point enters here and only here.

use crate::closed_form::{ClosedForm, TrigKind};
use crate::double::{PhaseSpaceTable, Regime};
use crate::error::{EngineError, Result};
use crate::expr::NcExpr;
use crate::generator::Generator;
use crate::rng::SplitMix64;
use crate::scalar::Scalar;
use crate::series::Series;
use std::collections::BTreeMap;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BoundUnit {
    /// Constant right-hand side: `Δ(a)Δ(b) ≥ magnitude`.
    One,
    /// `Δ(a)Δ(b) ≥ magnitude·|⟨g⟩|`.
    Gen(Generator),
    /// `Δ(a)Δ(b) ≥ magnitude·|⟨f(s·g)⟩|`.
    Trig { kind: TrigKind, arg: Generator },
    /// Unnormalized fallback for entries without a closed form.
    Raw(NcExpr),
}

/// One deformed Heisenberg bound.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Bound {
    pub a: Generator,
    pub b: Generator,
    /// Nonnegative real prefactor including the Robertson ½ (a monomial in
    /// `s`, e.g. `1/(4ξ) = s/2`).
    pub magnitude: Series,
    pub unit: BoundUnit,
    /// The exact table commutator the bound came from.
    pub commutator: NcExpr,
}

fn half(r: num_rational::BigRational) -> Series {
    use num_bigint::BigInt;
    let h = num_rational::BigRational::new(BigInt::from(1), BigInt::from(2));
    Series::scalar(Scalar::from_parts(r * h, num_traits::Zero::zero()))
}

/// One bound per nonzero commutator; zero commutators yield none.
pub fn bounds(table: &PhaseSpaceTable) -> Vec<Bound> {
    let mut out = Vec::new();
    for (&(a, b), entry) in table.entries.iter() {
        if entry.series.is_zero() {
            continue;
        }
        let (magnitude, unit) = match &entry.closed {
            Some(ClosedForm::Constant(c)) => match c.axis_magnitude() {
                Some(m) => (half(m), BoundUnit::One),
                None => (
                    half(num_traits::One::one()),
                    BoundUnit::Raw(entry.series.clone()),
                ),
            },
            Some(ClosedForm::Linear {
                coeff,
                s_power,
                gen,
            }) => match coeff.axis_magnitude() {
                Some(m) => (
                    half(m).mul(&Series::s_power(*s_power, Scalar::one())),
                    BoundUnit::Gen(*gen),
                ),
                None => (
                    half(num_traits::One::one()),
                    BoundUnit::Raw(entry.series.clone()),
                ),
            },
            Some(ClosedForm::Trig {
                prefactor,
                kind,
                arg,
                factor: None,
            }) => match prefactor.axis_magnitude() {
                Some(m) => (
                    half(m),
                    BoundUnit::Trig {
                        kind: *kind,
                        arg: *arg,
                    },
                ),
                None => (
                    half(num_traits::One::one()),
                    BoundUnit::Raw(entry.series.clone()),
                ),
            },
            _ => (
                half(num_traits::One::one()),
                BoundUnit::Raw(entry.series.clone()),
            ),
        };
        out.push(Bound {
            a,
            b,
            magnitude,
            unit,
            commutator: entry.series.clone(),
        });
    }
    out
}

// ---------------------------------------------------------------------------
// Momentum-space realization.
// ---------------------------------------------------------------------------

/// Quadrature controls. Floating point enters only through this gate.
#[derive(Clone, Copy, Debug)]
pub struct GridSpec {
    /// Points per active axis.
    pub points: usize,
    /// Half-width of the integration window in state widths.
    pub span_sigmas: f64,
    /// Numeric value of the deformation scale ξ (so `s = 1/(2ξ)`).
    pub xi: f64,
    /// Doublings allowed before declaring non-convergence.
    pub refinements: u32,
    /// Relative stabilization target between successive refinements.
    pub tolerance: f64,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            points: 2048,
            span_sigmas: 8.0,
            xi: 1.0,
            refinements: 3,
            tolerance: 1e-10,
        }
    }
}

/// Numeric form of one `Φ_{μν}` entry.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PhiForm {
    Zero,
    Const(f64),
    /// `coef · p_axis` (the `s` factor is already folded into `coef`).
    LinearP {
        coef: f64,
        axis: u8,
    },
    /// `coef · f(s·p_axis)`.
    Trig {
        coef: f64,
        kind: TrigKind,
        axis: u8,
    },
}

/// Position operators `X_μ = i Σ_ν Φ_{μν}(p) ∂/∂p_ν` with
/// `[X_μ, p_ν] = iΦ_{μν}(p)` by construction.
pub struct Realization {
    pub regime: Regime,
    pub order: u32,
    pub grid: GridSpec,
    /// Axes carrying any non-canonical structure.
    pub active_axes: Vec<u8>,
    /// Symbolic `Φ_{μν}` (momentum alphabet), exact.
    pub phi_series: BTreeMap<(u8, u8), NcExpr>,
    /// Numeric `Φ_{μν}`.
    pub phi_forms: BTreeMap<(u8, u8), PhiForm>,
}

fn position_gens(regime: Regime) -> Vec<(u8, Generator)> {
    match regime {
        Regime::Relativistic => (0..4u8).map(|i| (i, Generator::X(i))).collect(),
        _ => {
            let mut v = vec![(0u8, Generator::T)];
            v.extend((1..4u8).map(|i| (i, Generator::Y(i))));
            v
        }
    }
}

fn momentum_gen(regime: Regime, i: u8) -> Generator {
    match regime {
        Regime::Relativistic => Generator::Px(i),
        _ => Generator::Pi(i),
    }
}

fn scalar_to_real_f64(c: &Scalar) -> Result<f64> {
    if !c.is_real() {
        return Err(EngineError::QuadratureNonConvergence);
    }
    Ok(c.to_f64_pair().0)
}

/// Read `Φ` off the table. Every cross entry must carry a recognized
/// closed form, otherwise the realization is refused.
pub fn realize(table: &PhaseSpaceTable, grid: GridSpec) -> Result<Realization> {
    let mut phi_series = BTreeMap::new();
    let mut phi_forms = BTreeMap::new();
    let mut active = std::collections::BTreeSet::new();
    let s = 1.0 / (2.0 * grid.xi);
    for (mu, xg) in position_gens(table.regime) {
        for nu in 0..4u8 {
            let pg = momentum_gen(table.regime, nu);
            let entry = table.entries.get(&(xg, pg)).cloned().unwrap_or_else(|| {
                crate::double::TableEntry {
                    series: NcExpr::zero(),
                    closed: None,
                }
            });
            // Φ = entry / i.
            let phi_expr = entry.series.scale(&Scalar::minus_i());
            let closed = if entry.series.is_zero() {
                Some(ClosedForm::Constant(Scalar::zero()))
            } else {
                entry.closed.clone()
            };
            let form = match closed {
                Some(ClosedForm::Constant(c)) => {
                    let v = scalar_to_real_f64(&(&c * &Scalar::minus_i()))
                        .map_err(|_| EngineError::UnrecognizedEntry { pair: (xg, pg) })?;
                    if v == 0.0 {
                        PhiForm::Zero
                    } else {
                        PhiForm::Const(v)
                    }
                }
                Some(ClosedForm::Linear {
                    coeff,
                    s_power,
                    gen,
                }) => {
                    let base = scalar_to_real_f64(&(&coeff * &Scalar::minus_i()))
                        .map_err(|_| EngineError::UnrecognizedEntry { pair: (xg, pg) })?;
                    let axis = gen.index().unwrap();
                    active.insert(axis);
                    PhiForm::LinearP {
                        coef: base * s.powi(s_power as i32),
                        axis,
                    }
                }
                Some(ClosedForm::Trig {
                    prefactor,
                    kind,
                    arg,
                    factor: None,
                }) => {
                    let coef = scalar_to_real_f64(&(&prefactor * &Scalar::minus_i()))
                        .map_err(|_| EngineError::UnrecognizedEntry { pair: (xg, pg) })?;
                    let axis = arg.index().unwrap();
                    active.insert(axis);
                    PhiForm::Trig { coef, kind, axis }
                }
                _ => return Err(EngineError::UnrecognizedEntry { pair: (xg, pg) }),
            };
            phi_series.insert((mu, nu), phi_expr);
            phi_forms.insert((mu, nu), form);
        }
    }
    Ok(Realization {
        regime: table.regime,
        order: table.order,
        grid,
        active_axes: active.into_iter().collect(),
        phi_series,
        phi_forms,
    })
}

/// Commutative product of momentum-alphabet expressions.
fn comm_mul(a: &NcExpr, b: &NcExpr) -> NcExpr {
    let mut out = NcExpr::zero();
    for (w1, c1) in a.terms() {
        for (w2, c2) in b.terms() {
            let mut w = Vec::with_capacity(w1.len() + w2.len());
            w.extend_from_slice(w1);
            w.extend_from_slice(w2);
            w.sort();
            out.add_term(w, c1.mul(c2));
        }
    }
    out
}

/// Symbolic check that the vector-field brackets `[X_μ, X_ν]` reproduce the
/// position–position rows of the table under `x -> X`, exactly to the
/// table order. Uses unsymmetrized fields.
pub fn realization_position_check(r: &Realization, table: &PhaseSpaceTable) -> Vec<(u8, u8)> {
    let mut failures = Vec::new();
    let order = table.order;
    let positions = position_gens(table.regime);
    for (ai, &(mu, xg_mu)) in positions.iter().enumerate() {
        for &(nu, xg_nu) in positions.iter().skip(ai + 1) {
            // θ^ρ from [x_μ, x_ν] = Σ iθ^ρ x_ρ.
            let entry = table.bracket(xg_mu, xg_nu);
            let mut theta: BTreeMap<u8, Series> = BTreeMap::new();
            for (w, c) in entry.terms() {
                assert!(w.len() == 1);
                let rho = match w[0] {
                    Generator::X(r) => r,
                    Generator::T => 0,
                    Generator::Y(r) => r,
                    _ => unreachable!(),
                };
                theta.insert(rho, c.mul(&Series::scalar(Scalar::minus_i())));
            }
            for sigma in 0..4u8 {
                let mut lhs = NcExpr::zero();
                for rho in 0..4u8 {
                    let p_rho = momentum_gen(table.regime, rho);
                    let d_nu_sigma = r.phi_series[&(nu, sigma)].derivative(p_rho);
                    let d_mu_sigma = r.phi_series[&(mu, sigma)].derivative(p_rho);
                    lhs = lhs
                        .add(&comm_mul(&r.phi_series[&(mu, rho)], &d_nu_sigma))
                        .sub(&comm_mul(&r.phi_series[&(nu, rho)], &d_mu_sigma));
                }
                let mut rhs = NcExpr::zero();
                for (rho, th) in theta.iter() {
                    rhs = rhs.add(&r.phi_series[&(*rho, sigma)].scale_series(th));
                }
                if !lhs.eq_to_order(&rhs, order) {
                    failures.push((mu, nu));
                    break;
                }
            }
        }
    }
    failures
}

/// The symmetrizing addition `(i/2) Σ_ν ∂Φ_{μν}/∂p_ν` as a symbolic
/// expression. It is a plain multiplication operator, so it commutes with
/// every momentum and leaves all `[X, p]` commutators untouched.
pub fn symmetrization_term(r: &Realization, mu: u8) -> NcExpr {
    let mut acc = NcExpr::zero();
    for nu in 0..4u8 {
        let p = momentum_gen(r.regime, nu);
        acc = acc.add(&r.phi_series[&(mu, nu)].derivative(p));
    }
    acc.scale(&Scalar::imag_ratio(1, 2))
}

// ---------------------------------------------------------------------------
// Separable quadrature.
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Cx {
    pub re: f64,
    pub im: f64,
}

impl Cx {
    pub const ZERO: Cx = Cx { re: 0.0, im: 0.0 };
    pub const ONE: Cx = Cx { re: 1.0, im: 0.0 };
    pub const I: Cx = Cx { re: 0.0, im: 1.0 };

    fn mul(self, o: Cx) -> Cx {
        Cx {
            re: self.re * o.re - self.im * o.im,
            im: self.re * o.im + self.im * o.re,
        }
    }

    fn scale(self, r: f64) -> Cx {
        Cx {
            re: self.re * r,
            im: self.im * r,
        }
    }

    fn add(self, o: Cx) -> Cx {
        Cx {
            re: self.re + o.re,
            im: self.im + o.im,
        }
    }

    fn sub(self, o: Cx) -> Cx {
        Cx {
            re: self.re - o.re,
            im: self.im - o.im,
        }
    }

    pub fn abs(self) -> f64 {
        self.re.hypot(self.im)
    }
}

/// A primitive single-axis factor.
#[derive(Clone, Copy, Debug, PartialEq)]
enum NPrim {
    /// `p`
    P,
    /// `h(p) = -(p - mean)/(2 width²)` — the logarithmic derivative of the
    /// state on this axis.
    H,
    /// `f(scale·p)`
    Trig { kind: TrigKind, scale: f64 },
}

/// One separable term `coeff · Π_axis Π factors(p_axis)`.
#[derive(Clone, Debug)]
struct NTerm {
    coeff: Cx,
    factors: BTreeMap<u8, Vec<NPrim>>,
}

/// A function of momenta written in separable form; represents `(Opψ)/ψ`.
type NOp = Vec<NTerm>;

fn nop_one() -> NOp {
    vec![NTerm {
        coeff: Cx::ONE,
        factors: BTreeMap::new(),
    }]
}

fn term_push(term: &NTerm, axis: u8, prim: NPrim, coeff: Cx) -> NTerm {
    let mut t = term.clone();
    t.coeff = t.coeff.mul(coeff);
    t.factors.entry(axis).or_default().push(prim);
    t
}

/// Multiply a term by one `Φ` entry (`s` is the numeric series variable).
fn term_mul_phi(term: &NTerm, phi: &PhiForm, s: f64) -> Option<NTerm> {
    match *phi {
        PhiForm::Zero => None,
        PhiForm::Const(c) => {
            let mut t = term.clone();
            t.coeff = t.coeff.scale(c);
            Some(t)
        }
        PhiForm::LinearP { coef, axis } => {
            Some(term_push(term, axis, NPrim::P, Cx { re: coef, im: 0.0 }))
        }
        PhiForm::Trig { coef, kind, axis } => Some(term_push(
            term,
            axis,
            NPrim::Trig { kind, scale: s },
            Cx { re: coef, im: 0.0 },
        )),
    }
}

/// State with per-axis mean and width; `L²`-normalized by construction.
#[derive(Clone, Debug)]
pub struct GaussianState {
    pub mean: [f64; 4],
    pub width: [f64; 4],
}

impl GaussianState {
    pub fn standard() -> Self {
        GaussianState {
            mean: [0.0; 4],
            width: [1.0; 4],
        }
    }

    pub fn random(rng: &mut SplitMix64) -> Self {
        let mut mean = [0.0; 4];
        let mut width = [0.0; 4];
        for i in 0..4 {
            mean[i] = rng.range_f64(-3.0, 3.0);
            width[i] = rng.range_f64(0.4, 2.5);
        }
        GaussianState { mean, width }
    }
}

struct Quadrature<'a> {
    state: &'a GaussianState,
    grid: &'a GridSpec,
}

impl<'a> Quadrature<'a> {
    /// `∫ Π prims(p) · |ψ_axis(p)|² dp` by Simpson with refinement.
    fn axis_integral(&self, axis: u8, prims: &[NPrim]) -> Result<f64> {
        let m = self.state.mean[axis as usize];
        let w = self.state.width[axis as usize];
        let lo = m - self.grid.span_sigmas * w;
        let hi = m + self.grid.span_sigmas * w;
        let f = |p: f64| -> f64 {
            let mut v = 1.0;
            for prim in prims {
                v *= match *prim {
                    NPrim::P => p,
                    NPrim::H => -(p - m) / (2.0 * w * w),
                    NPrim::Trig { kind, scale } => kind.eval_f64(scale * p),
                };
            }
            let z = (p - m) / w;
            v * (-0.5 * z * z).exp() / (w * (2.0 * std::f64::consts::PI).sqrt())
        };
        let mut n = self.grid.points;
        let mut prev = simpson(&f, lo, hi, n);
        for _ in 0..self.grid.refinements {
            n *= 2;
            let next = simpson(&f, lo, hi, n);
            if (next - prev).abs() <= self.grid.tolerance * (1.0 + next.abs()) {
                return Ok(next);
            }
            prev = next;
        }
        Err(EngineError::QuadratureNonConvergence)
    }

    fn expectation(&self, op: &NOp) -> Result<Cx> {
        let mut acc = Cx::ZERO;
        for term in op {
            let mut v = term.coeff;
            for (&axis, prims) in term.factors.iter() {
                v = v.scale(self.axis_integral(axis, prims)?);
            }
            acc = acc.add(v);
        }
        Ok(acc)
    }
}

fn simpson(f: &impl Fn(f64) -> f64, lo: f64, hi: f64, n: usize) -> f64 {
    let n = if n.is_multiple_of(2) { n } else { n + 1 };
    let h = (hi - lo) / n as f64;
    let mut acc = f(lo) + f(hi);
    for i in 1..n {
        let x = lo + h * i as f64;
        acc += f(x) * if i % 2 == 1 { 4.0 } else { 2.0 };
    }
    acc * h / 3.0
}

/// Differentiate a separable term along one axis (product rule over the
/// factors on that axis).
fn diff_term(term: &NTerm, axis: u8, state: &GaussianState) -> NOp {
    let mut out = NOp::new();
    let prims = match term.factors.get(&axis) {
        None => return out,
        Some(p) => p.clone(),
    };
    let w = state.width[axis as usize];
    for (i, prim) in prims.iter().enumerate() {
        let mut rest: Vec<NPrim> = Vec::with_capacity(prims.len());
        rest.extend_from_slice(&prims[..i]);
        rest.extend_from_slice(&prims[i + 1..]);
        let (coeff, replacement): (Cx, Option<NPrim>) = match *prim {
            NPrim::P => (Cx::ONE, None),
            NPrim::H => (
                Cx {
                    re: -1.0 / (2.0 * w * w),
                    im: 0.0,
                },
                None,
            ),
            NPrim::Trig { kind, scale } => {
                let (sign, dkind) = kind.derivative();
                let (re, im) = sign.to_f64_pair();
                (
                    Cx {
                        re: re * scale,
                        im: im * scale,
                    },
                    Some(NPrim::Trig { kind: dkind, scale }),
                )
            }
        };
        let mut t = term.clone();
        t.coeff = t.coeff.mul(coeff);
        let slot = t.factors.get_mut(&axis).unwrap();
        *slot = rest;
        if let Some(p) = replacement {
            slot.push(p);
        }
        if slot.is_empty() {
            t.factors.remove(&axis);
        }
        out.push(t);
    }
    out
}

/// Operators available for dispersion checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RealOp {
    /// Position operator `X_μ` (symmetrized).
    Pos(u8),
    /// Multiplication by `p_ν`.
    Mom(u8),
}

impl RealOp {
    pub fn from_gen(g: Generator) -> RealOp {
        match g {
            Generator::X(i) => RealOp::Pos(i),
            Generator::T => RealOp::Pos(0),
            Generator::Y(i) => RealOp::Pos(i),
            Generator::Px(i) | Generator::Pi(i) => RealOp::Mom(i),
            _ => panic!("not a phase-space generator"),
        }
    }
}

/// Apply an operator to `u·ψ`, returning `(Op(uψ))/ψ` in separable form.
fn apply(r: &Realization, state: &GaussianState, op: RealOp, u: &NOp, s: f64) -> NOp {
    match op {
        RealOp::Mom(nu) => u
            .iter()
            .map(|t| term_push(t, nu, NPrim::P, Cx::ONE))
            .collect(),
        RealOp::Pos(mu) => {
            // X(uψ)/ψ = Σ_ν iΦ_{μν}[∂_ν u + u·h_ν] + u·sym_μ,
            // sym_μ = (i/2)Σ_ν ∂_νΦ_{μν} (zero for all the tables here but
            // kept for generality).
            let mut out = NOp::new();
            for nu in 0..4u8 {
                let phi = &r.phi_forms[&(mu, nu)];
                if *phi == PhiForm::Zero {
                    continue;
                }
                for t in u {
                    // iΦ·∂_ν t
                    for dt in diff_term(t, nu, state) {
                        if let Some(mut x) = term_mul_phi(&dt, phi, s) {
                            x.coeff = x.coeff.mul(Cx::I);
                            out.push(x);
                        }
                    }
                    // iΦ·t·h_ν
                    let th = term_push(t, nu, NPrim::H, Cx::I);
                    if let Some(x) = term_mul_phi(&th, phi, s) {
                        out.push(x);
                    }
                }
                // Symmetrization correction from this Φ entry:
                // (i/2)·dΦ/dp_ν is nonzero only if Φ_{μν} depends on p_ν.
                match *phi {
                    PhiForm::LinearP { coef, axis } if axis == nu => {
                        for t in u {
                            let mut x = t.clone();
                            x.coeff = x.coeff.mul(Cx::I).scale(0.5 * coef);
                            out.push(x);
                        }
                    }
                    PhiForm::Trig { coef, kind, axis } if axis == nu => {
                        let (sign, dkind) = kind.derivative();
                        let (re, im) = sign.to_f64_pair();
                        for t in u {
                            let mut x = term_push(
                                t,
                                axis,
                                NPrim::Trig {
                                    kind: dkind,
                                    scale: s,
                                },
                                Cx::I,
                            );
                            x.coeff = x.coeff.scale(0.5 * coef * s).mul(Cx { re, im });
                            out.push(x);
                        }
                    }
                    _ => {}
                }
            }
            out
        }
    }
}

/// Expectation of a symbolic momentum-function/position-linear commutator
/// under the realization.
fn realize_expr_op(r: &Realization, state: &GaussianState, e: &NcExpr, s: f64) -> Result<NOp> {
    let mut out = NOp::new();
    for (w, c) in e.terms() {
        if let Some((s_pow, c_pow, sc)) = c.as_monomial() {
            assert_eq!(c_pow, 0);
            let (re, im) = sc.to_f64_pair();
            let base = Cx { re, im }.scale(s.powi(s_pow as i32));
            if w.iter().all(|g| g.is_momentum_like()) {
                let mut t = NTerm {
                    coeff: base,
                    factors: BTreeMap::new(),
                };
                for g in w {
                    t = term_push(&t, g.index().unwrap(), NPrim::P, Cx::ONE);
                }
                out.push(t);
            } else if w.len() == 1 && w[0].is_position_like() {
                let op = RealOp::from_gen(w[0]);
                for mut t in apply(r, state, op, &nop_one(), s) {
                    t.coeff = t.coeff.mul(base);
                    out.push(t);
                }
            } else {
                return Err(EngineError::UnrecognizedEntry { pair: (w[0], w[0]) });
            }
        } else {
            // Non-monomial coefficients: expand term by term.
            for (&(s_pow, c_pow), sc) in c.terms() {
                assert_eq!(c_pow, 0);
                let (re, im) = sc.to_f64_pair();
                let base = Cx { re, im }.scale(s.powi(s_pow as i32));
                let mut t = NTerm {
                    coeff: base,
                    factors: BTreeMap::new(),
                };
                for g in w {
                    t = term_push(&t, g.index().unwrap(), NPrim::P, Cx::ONE);
                }
                out.push(t);
            }
        }
    }
    Ok(out)
}

/// Evaluate the closed form of a table entry as an exact function (not the
/// truncated series) in separable form. Position-linear entries realize
/// their positions as operators.
fn closed_entry_op(
    r: &Realization,
    state: &GaussianState,
    entry: &crate::double::TableEntry,
    s: f64,
) -> Result<NOp> {
    match &entry.closed {
        Some(ClosedForm::Constant(c)) => {
            let (re, im) = c.to_f64_pair();
            Ok(vec![NTerm {
                coeff: Cx { re, im },
                factors: BTreeMap::new(),
            }])
        }
        Some(ClosedForm::Linear {
            coeff,
            s_power,
            gen,
        }) => {
            let (re, im) = coeff.to_f64_pair();
            let base = Cx { re, im }.scale(s.powi(*s_power as i32));
            if gen.is_momentum_like() {
                Ok(vec![NTerm {
                    coeff: base,
                    factors: BTreeMap::from([(gen.index().unwrap(), vec![NPrim::P])]),
                }])
            } else {
                let op = RealOp::from_gen(*gen);
                Ok(apply(r, state, op, &nop_one(), s)
                    .into_iter()
                    .map(|mut t| {
                        t.coeff = t.coeff.mul(base);
                        t
                    })
                    .collect())
            }
        }
        Some(ClosedForm::Trig {
            prefactor,
            kind,
            arg,
            factor: None,
        }) => {
            let (re, im) = prefactor.to_f64_pair();
            Ok(vec![NTerm {
                coeff: Cx { re, im },
                factors: BTreeMap::from([(
                    arg.index().unwrap(),
                    vec![NPrim::Trig {
                        kind: *kind,
                        scale: s,
                    }],
                )]),
            }])
        }
        _ => realize_expr_op(r, state, &entry.series, s),
    }
}

/// Result of one numeric bound check.
#[derive(Clone, Debug)]
pub struct NumericRow {
    pub a: Generator,
    pub b: Generator,
    pub delta_a: f64,
    pub delta_b: f64,
    /// `⟨[A,B]⟩` from operator composition.
    pub realized: Cx,
    /// `⟨[A,B]⟩` from the symbolic table entry.
    pub symbolic: Cx,
    /// `Δ(A)Δ(B) − ½|⟨[A,B]⟩|`.
    pub slack: f64,
    /// `|realized − symbolic|` relative to scale.
    pub rel_err: f64,
}

fn dispersion(
    r: &Realization,
    state: &GaussianState,
    quad: &Quadrature,
    op: RealOp,
    s: f64,
) -> Result<f64> {
    let u1 = apply(r, state, op, &nop_one(), s);
    let mean = quad.expectation(&u1)?;
    let u2 = apply(r, state, op, &u1, s);
    let second = quad.expectation(&u2)?;
    let var = second.re - (mean.re * mean.re - mean.im * mean.im);
    // Hermitian operators on a real Gaussian: mean is real, variance real
    // nonnegative up to quadrature noise.
    Ok(var.max(0.0).sqrt())
}

/// Check one bound in one state.
pub fn numeric_check(
    r: &Realization,
    table: &PhaseSpaceTable,
    state: &GaussianState,
    a: Generator,
    b: Generator,
) -> Result<NumericRow> {
    let s = 1.0 / (2.0 * r.grid.xi);
    let quad = Quadrature {
        state,
        grid: &r.grid,
    };
    let op_a = RealOp::from_gen(a);
    let op_b = RealOp::from_gen(b);
    let da = dispersion(r, state, &quad, op_a, s)?;
    let db = dispersion(r, state, &quad, op_b, s)?;
    // Realized ⟨[A,B]⟩ by operator composition.
    let ub = apply(r, state, op_b, &nop_one(), s);
    let uab = apply(r, state, op_a, &ub, s);
    let ua = apply(r, state, op_a, &nop_one(), s);
    let uba = apply(r, state, op_b, &ua, s);
    let realized = quad.expectation(&uab)?.sub(quad.expectation(&uba)?);
    // Symbolic ⟨[A,B]⟩ from the table entry's closed form.
    let key = if a < b { (a, b) } else { (b, a) };
    let sign = if a < b { 1.0 } else { -1.0 };
    let entry = &table.entries[&key];
    let sym_op = closed_entry_op(r, state, entry, s)?;
    let symbolic = quad.expectation(&sym_op)?.scale(sign);
    let rhs = 0.5 * realized.abs();
    let slack = da * db - rhs;
    // Relative agreement, with an absolute floor below which both values
    // count as numerically zero.
    let scale = realized.abs().max(symbolic.abs());
    let rel_err = if scale < 1e-9 {
        0.0
    } else {
        realized.sub(symbolic).abs() / scale
    };
    Ok(NumericRow {
        a,
        b,
        delta_a: da,
        delta_b: db,
        realized,
        symbolic,
        slack,
        rel_err,
    })
}
