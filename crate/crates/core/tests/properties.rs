//! Seeded property suites for the algebra invariants.

use twistspace::contraction::contract;
use twistspace::double::{build_phase_space, cross_relation};
use twistspace::dual::{bracket_a_a, bracket_a_lam, group_rules};
use twistspace::expr::NcExpr;
use twistspace::generator::Generator;
use twistspace::pairing::{pair_ctx, pair_words_ctx};
use twistspace::poincare::{
    classical_bracket, classical_rules, poincare_generators, TwistCarrier, TwistContext,
};
use twistspace::rewrite::{commutator, mul, normal_order};
use twistspace::rng::SplitMix64;
use twistspace::scalar::Scalar;
use twistspace::series::Series;

fn random_scalar(rng: &mut SplitMix64) -> Scalar {
    let n = rng.int_in(-3, 3);
    let d = rng.int_in(1, 3);
    if rng.below(2) == 0 {
        Scalar::ratio(n, d)
    } else {
        Scalar::imag_ratio(n, d)
    }
}

fn random_word(rng: &mut SplitMix64, letters: &[Generator], max_len: usize) -> Vec<Generator> {
    let len = rng.below(max_len as u64 + 1) as usize;
    (0..len)
        .map(|_| letters[rng.below(letters.len() as u64) as usize])
        .collect()
}

fn random_expr(rng: &mut SplitMix64, letters: &[Generator]) -> NcExpr {
    let mut e = NcExpr::zero();
    let terms = 1 + rng.below(3);
    for _ in 0..terms {
        let w = random_word(rng, letters, 3);
        let s_pow = rng.below(3) as u32;
        e.add_term(w, Series::s_power(s_pow, random_scalar(rng)));
    }
    e
}

#[test]
fn multiplication_is_associative_on_random_triples() {
    let rules = classical_rules();
    let letters = poincare_generators();
    let mut rng = SplitMix64::new(0xA550C);
    for case in 0..200 {
        let a = random_expr(&mut rng, &letters);
        let b = random_expr(&mut rng, &letters);
        let c = random_expr(&mut rng, &letters);
        let ab_c = mul(&mul(&a, &b, &rules).unwrap(), &c, &rules).unwrap();
        let a_bc = mul(&a, &mul(&b, &c, &rules).unwrap(), &rules).unwrap();
        assert_eq!(ab_c, a_bc, "case {case}");
    }
}

#[test]
fn normal_order_is_idempotent_on_random_expressions() {
    let rules = classical_rules();
    let letters = poincare_generators();
    let mut rng = SplitMix64::new(0x1D3);
    for _ in 0..100 {
        let e = random_expr(&mut rng, &letters);
        let once = normal_order(&e, &rules).unwrap();
        assert_eq!(normal_order(&once, &rules).unwrap(), once);
    }
    let carrier = TwistCarrier::rotation_gamma(1, 2, 3).unwrap();
    let grules = group_rules(&carrier);
    let gletters: Vec<Generator> = twistspace::dual::group_generators();
    for _ in 0..100 {
        let e = random_expr(&mut rng, &gletters);
        let once = normal_order(&e, &grules).unwrap();
        assert_eq!(normal_order(&once, &grules).unwrap(), once);
    }
}

#[test]
fn commutator_is_antisymmetric_and_bilinear() {
    let rules = classical_rules();
    let letters = poincare_generators();
    let mut rng = SplitMix64::new(0xB1);
    for _ in 0..50 {
        let a = random_expr(&mut rng, &letters);
        let b = random_expr(&mut rng, &letters);
        let c = random_expr(&mut rng, &letters);
        let ab = commutator(&a, &b, &rules).unwrap();
        let ba = commutator(&b, &a, &rules).unwrap();
        assert_eq!(ab, ba.neg());
        // [a+b, c] = [a,c] + [b,c]
        let sum = commutator(&a.add(&b), &c, &rules).unwrap();
        let parts = commutator(&a, &c, &rules)
            .unwrap()
            .add(&commutator(&b, &c, &rules).unwrap());
        assert_eq!(sum, parts);
    }
}

#[test]
fn truncation_coherence_of_table_builds() {
    // Building at order 8 then truncating to n equals building at order n.
    for carrier in TwistCarrier::all_defaults() {
        let full = build_phase_space(&carrier, 8).unwrap();
        for n in [0u32, 2, 5] {
            let direct = build_phase_space(&carrier, n).unwrap();
            let cut = full.truncated(n);
            for (k, e) in direct.entries.iter() {
                assert_eq!(
                    e.series, cut.entries[k].series,
                    "{:?} {:?} order {n}",
                    carrier.case, k
                );
            }
        }
    }
}

#[test]
fn closed_forms_roundtrip_on_all_table_entries() {
    for carrier in TwistCarrier::all_defaults() {
        let rel = build_phase_space(&carrier, 8).unwrap();
        let gal = contract(&rel).unwrap();
        for table in [&rel, &gal] {
            for (k, e) in table.entries.iter() {
                let cf = e.closed.as_ref().unwrap_or_else(|| {
                    panic!("entry {:?} of {:?} lacks a closed form", k, table.regime)
                });
                assert_eq!(
                    cf.expand(8).truncated(8),
                    e.series.truncated(8),
                    "{:?} {:?}",
                    table.regime,
                    k
                );
            }
        }
    }
}

#[test]
fn cross_relations_are_canonical_at_zeroth_order() {
    for carrier in TwistCarrier::all_defaults() {
        for mu in 0..4u8 {
            for nu in 0..4u8 {
                let b = cross_relation(Generator::A(mu), Generator::P(nu), &carrier, 0).unwrap();
                let want = if mu == nu {
                    NcExpr::scalar(Scalar::i()).truncated(0)
                } else {
                    NcExpr::zero()
                };
                assert_eq!(b, want, "case {:?} mu={mu} nu={nu}", carrier.case);
            }
        }
    }
}

#[test]
fn cross_entries_have_definite_parity() {
    // Every position-momentum series has pure parity in s, matching its
    // closed form (cos/cosh even, sin/sinh odd, constants even, linear odd).
    for carrier in TwistCarrier::all_defaults() {
        let table = build_phase_space(&carrier, 8).unwrap();
        for (&(a, b), e) in table.entries.iter() {
            if !(a.is_position_like() && b.is_momentum_like()) || e.series.is_zero() {
                continue;
            }
            let mut parities = std::collections::BTreeSet::new();
            for (_, series) in e.series.terms() {
                for (&(s_pow, _), _) in series.terms() {
                    parities.insert(s_pow % 2);
                }
            }
            assert_eq!(
                parities.len(),
                1,
                "mixed parity in [{a},{b}] of {:?}",
                carrier.case
            );
        }
    }
}

/// Pairing annihilates the defining relations of the symmetry algebra:
/// `⟨q, [R,R'] − (RR' − R'R)⟩ = 0`.
#[test]
fn pairing_respects_algebra_relations() {
    let carrier = TwistCarrier::rotation_gamma(1, 2, 3).unwrap();
    let ctx = TwistContext::new(&carrier, 6).unwrap();
    let gens = poincare_generators();
    let qletters = twistspace::dual::group_generators();
    let mut rng = SplitMix64::new(0x9A1);
    for _ in 0..50 {
        let r1 = gens[rng.below(gens.len() as u64) as usize];
        let r2 = gens[rng.below(gens.len() as u64) as usize];
        let rel = classical_bracket(r1, r2)
            .sub(&NcExpr::gen(r1).mul_raw(&NcExpr::gen(r2)))
            .add(&NcExpr::gen(r2).mul_raw(&NcExpr::gen(r1)));
        let q = random_word(&mut rng, &qletters, 2);
        let mut total = Series::zero();
        for (w, c) in rel.terms() {
            total = total.add(&pair_words_ctx(&q, w, &ctx).unwrap().mul(c));
        }
        assert!(total.is_zero(), "⟨{q:?}, relation({r1},{r2})⟩ = {total:?}");
    }
}

/// Dually, the pairing kills the dual-group relations:
/// `⟨q q' − q' q − [q, q'], u⟩ = 0` for words `u` in the algebra.
#[test]
fn pairing_respects_group_relations() {
    let carrier = TwistCarrier::rotation_gamma(1, 2, 3).unwrap();
    let ctx = TwistContext::new(&carrier, 6).unwrap();
    use Generator::{Lam, A, M, P};
    let spot_relations: Vec<(Generator, Generator)> = vec![
        (A(1), A(3)),
        (A(0), A(3)),
        (A(1), A(2)),
        (A(1), Lam(1, 2)),
        (A(0), Lam(0, 0)),
        (A(2), Lam(3, 1)),
        (Lam(1, 2), Lam(2, 1)),
    ];
    let u_words: Vec<Vec<Generator>> = vec![
        vec![],
        vec![P(1)],
        vec![P(3)],
        vec![P(1), P(3)],
        vec![M(1, 2)],
        vec![M(1, 2), P(3)],
        vec![P(2), P(2)],
        vec![M(0, 1), P(0)],
    ];
    for (q1, q2) in spot_relations {
        let bracket = match (q1, q2) {
            (A(m), A(n)) => bracket_a_a(m, n, &carrier),
            (A(m), Lam(n, r)) => bracket_a_lam(m, n, r, &carrier),
            (Lam(_, _), Lam(_, _)) => NcExpr::zero(),
            _ => unreachable!(),
        };
        let rel = NcExpr::gen(q1)
            .mul_raw(&NcExpr::gen(q2))
            .sub(&NcExpr::gen(q2).mul_raw(&NcExpr::gen(q1)))
            .sub(&bracket);
        for u in &u_words {
            let val = pair_ctx(&rel, &NcExpr::term(u.clone(), Series::one()), &ctx).unwrap();
            assert!(val.is_zero(), "⟨rel({q1},{q2}), {u:?}⟩ = {val:?}");
        }
    }
}

#[test]
fn substitution_examples() {
    // x0 -> c·t and p0 -> π0/c as used by the contraction.
    let e = NcExpr::gen(Generator::X(0));
    let sub = e.substitute(|g| match g {
        Generator::X(0) => (Series::monomial(0, 1, Scalar::one()), vec![Generator::T]),
        other => (Series::one(), vec![other]),
    });
    assert_eq!(
        sub,
        NcExpr::term(vec![Generator::T], Series::monomial(0, 1, Scalar::one()))
    );
    let p = NcExpr::gen(Generator::Px(0)).scale(&Scalar::i());
    let sub_p = p.substitute(|g| match g {
        Generator::Px(0) => (
            Series::monomial(0, -1, Scalar::one()),
            vec![Generator::Pi(0)],
        ),
        other => (Series::one(), vec![other]),
    });
    assert_eq!(
        sub_p,
        NcExpr::term(vec![Generator::Pi(0)], Series::monomial(0, -1, Scalar::i()))
    );
    // The identity map is the identity.
    let any = NcExpr::term(
        vec![Generator::X(1), Generator::Px(2)],
        Series::s_power(1, Scalar::i()),
    );
    assert_eq!(any.substitute(|g| (Series::one(), vec![g])), any);
}

#[test]
fn tensor_square_of_wedge_matches_hand_expansion() {
    // (P1 ∧ M12)² expanded by brute force over the four leg products.
    use twistspace::tensor::TensorExpr;
    use Generator::{M, P};
    let rules = classical_rules();
    let w = TensorExpr::wedge(&NcExpr::gen(P(1)), &NcExpr::gen(M(1, 2)));
    let sq = w.mul(&w, &rules).unwrap();
    let mut want = TensorExpr::zero(2);
    want.add_term(
        vec![vec![P(1), P(1)], vec![M(1, 2), M(1, 2)]],
        Series::one(),
    );
    want.add_term(
        vec![vec![M(1, 2), M(1, 2)], vec![P(1), P(1)]],
        Series::one(),
    );
    want.add_term(
        vec![vec![M(1, 2), P(1)], vec![M(1, 2), P(1)]],
        Series::scalar(Scalar::from_int(-2)),
    );
    want.add_term(
        vec![vec![P(2)], vec![M(1, 2), P(1)]],
        Series::scalar(Scalar::minus_i()),
    );
    want.add_term(
        vec![vec![M(1, 2), P(1)], vec![P(2)]],
        Series::scalar(Scalar::minus_i()),
    );
    assert_eq!(sq, want);
}
