//! Hopf pairing between the dual group and the symmetry algebra.
//!
//! The generator table pairs `Λ` with `1` and the Lorentz sector, and `a`
//! with translations. It extends to products by duality: a group letter
//! against an algebra product uses the group coproduct; a group product
//! against an algebra word uses the deformed algebra coproduct.

use crate::dual::{group_coproduct, group_counit};
use crate::error::Result;
use crate::expr::NcExpr;
use crate::generator::{Generator, Word};
use crate::poincare::{Metric, TwistCarrier, TwistContext};
use crate::scalar::Scalar;
use crate::series::Series;

fn delta(a: u8, b: u8) -> Scalar {
    Scalar::from_int(i64::from(a == b))
}

/// Generator-level pairing. Unlisted pairs are zero.
pub fn pair_base(q: Generator, u: Generator) -> Scalar {
    match (q, u) {
        // ⟨Λ^μ_ν, M_{ρσ}⟩ = i(δ^μ_ρ η_{σν} − δ^μ_σ η_{ρν}), the lowered-index
        // form of the upper-index table entry.
        (Generator::Lam(mu, nu), Generator::M(rho, sig)) => {
            let a = &delta(mu, rho) * &Metric::eta_scalar(sig, nu);
            let b = &delta(mu, sig) * &Metric::eta_scalar(rho, nu);
            (&a - &b).times_i()
        }
        // ⟨a^μ, P_ν⟩ = iδ^μ_ν
        (Generator::A(mu), Generator::P(nu)) => delta(mu, nu).times_i(),
        (Generator::Lam(_, _), Generator::P(_)) | (Generator::A(_), Generator::M(_, _)) => {
            Scalar::zero()
        }
        _ => panic!("pairing is defined between the Λ/a and M/P alphabets"),
    }
}

/// `ε` on the algebra side: 1 on the empty word, 0 otherwise.
pub fn u_counit(w: &Word) -> Scalar {
    if w.is_empty() {
        Scalar::one()
    } else {
        Scalar::zero()
    }
}

/// `⟨q_word, u_word⟩` against a prepared twist context.
pub fn pair_words_ctx(q: &Word, u: &Word, ctx: &TwistContext) -> Result<Series> {
    let order = ctx.order;
    if q.is_empty() {
        return Ok(Series::scalar(u_counit(u)));
    }
    if u.is_empty() {
        return Ok(Series::scalar(group_counit(q)));
    }
    if q.len() == 1 {
        if u.len() == 1 {
            return Ok(Series::scalar(pair_base(q[0], u[0])));
        }
        // ⟨q, u0·rest⟩ = Σ ⟨q(1), u0⟩⟨q(2), rest⟩ over Δ(q).
        let rest: Word = u[1..].to_vec();
        let mut acc = Series::zero();
        for (legs, c) in group_coproduct(q[0]).terms() {
            let first = pair_words_ctx(&legs[0], &u[..1].to_vec(), ctx)?;
            if first.is_zero() {
                continue;
            }
            let second = pair_words_ctx(&legs[1], &rest, ctx)?;
            acc = acc.add(&c.mul(&first).mul(&second));
        }
        return Ok(acc.truncated(order));
    }
    // ⟨q0·qrest, u⟩ = Σ ⟨q0, u(1)⟩⟨qrest, u(2)⟩ over Δ_ξ(u).
    let q0: Word = q[..1].to_vec();
    let qrest: Word = q[1..].to_vec();
    let du = ctx.coproduct_word(u)?;
    let mut acc = Series::zero();
    for (legs, c) in du.terms() {
        let first = pair_words_ctx(&q0, &legs[0], ctx)?;
        if first.is_zero() {
            continue;
        }
        let second = pair_words_ctx(&qrest, &legs[1], ctx)?;
        acc = acc.add(&c.mul(&first).mul(&second));
    }
    Ok(acc.truncated(order))
}

/// `⟨q_word, u_word⟩`, recursive through the duality extension laws.
pub fn pair_words(q: &Word, u: &Word, carrier: &TwistCarrier, order: u32) -> Result<Series> {
    pair_words_ctx(q, u, &TwistContext::new(carrier, order)?)
}

/// Bilinear extension to expressions on both sides.
pub fn pair(q: &NcExpr, u: &NcExpr, carrier: &TwistCarrier, order: u32) -> Result<Series> {
    let ctx = TwistContext::new(carrier, order)?;
    pair_ctx(q, u, &ctx)
}

/// Bilinear extension against a prepared context.
pub fn pair_ctx(q: &NcExpr, u: &NcExpr, ctx: &TwistContext) -> Result<Series> {
    let mut acc = Series::zero();
    for (qw, qc) in q.terms() {
        for (uw, uc) in u.terms() {
            let p = pair_words_ctx(qw, uw, ctx)?;
            acc = acc.add(&p.mul(qc).mul(uc));
        }
    }
    Ok(acc.truncated(ctx.order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generator::Generator::*;

    fn carrier() -> TwistCarrier {
        TwistCarrier::rotation_gamma(1, 2, 3).unwrap()
    }

    #[test]
    fn generator_table() {
        // ⟨a^1, P_1⟩ = i
        assert_eq!(pair_base(A(1), P(1)), Scalar::i());
        assert_eq!(pair_base(A(1), P(2)), Scalar::zero());
        // ⟨Λ^1_2, M^{12}⟩ = i with upper indices; M^{12} = M_{12} spatially.
        assert_eq!(pair_base(Lam(1, 2), M(1, 2)), Scalar::i());
        // ⟨Λ^0_1, M_{01}⟩ = i(δ^0_0 η_{11}) = i.
        assert_eq!(pair_base(Lam(0, 1), M(0, 1)), Scalar::i());
        assert_eq!(pair_base(Lam(1, 2), P(0)), Scalar::zero());
    }

    #[test]
    fn unit_pairings_are_counits() {
        let c = carrier();
        // ⟨Λ^μ_ν, 1⟩ = δ^μ_ν
        assert_eq!(
            pair_words(&vec![Lam(2, 2)], &vec![], &c, 8).unwrap(),
            Series::one()
        );
        assert!(pair_words(&vec![Lam(1, 2)], &vec![], &c, 8)
            .unwrap()
            .is_zero());
        // ⟨a^μ, 1⟩ = 0, ⟨1, P⟩ = ε(P) = 0
        assert!(pair_words(&vec![A(0)], &vec![], &c, 8).unwrap().is_zero());
        assert!(pair_words(&vec![], &vec![P(1)], &c, 8).unwrap().is_zero());
    }

    #[test]
    fn translation_against_momentum_square_vanishes() {
        // ⟨a^1, P_1 P_2⟩ = 0: the Λ leg pairs to zero with P and ε kills the rest.
        let c = carrier();
        let s = pair_words(&vec![A(1)], &vec![P(1), P(2)], &c, 8).unwrap();
        assert!(s.is_zero());
    }

    #[test]
    fn lambda_against_momentum_word_vanishes() {
        let c = carrier();
        for n in 1..4usize {
            let s = pair_words(&vec![Lam(1, 1)], &vec![P(3); n], &c, 8).unwrap();
            assert!(s.is_zero(), "length {n}");
        }
    }
}
