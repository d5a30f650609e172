//! Tensor-leg expressions.
//!
//! A [`TensorExpr`] of width `k` is a sum of `k`-fold tensor products of
//! words, with one series coefficient per term. Width 2 carries coproducts,
//! the twist and the r-matrix; width 3 appears in coassociativity and
//! cocycle checks. Products act slotwise and every slot is normal ordered
//! independently.

use crate::error::Result;
use crate::expr::NcExpr;
use crate::generator::{word_name, Word};
use crate::rewrite::{normal_order, Ruleset};
use crate::scalar::Scalar;
use crate::series::Series;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct TensorExpr {
    width: usize,
    terms: BTreeMap<Vec<Word>, Series>,
}

impl TensorExpr {
    pub fn zero(width: usize) -> Self {
        TensorExpr {
            width,
            terms: BTreeMap::new(),
        }
    }

    /// `1 ⊗ 1 ⊗ ... ⊗ 1`.
    pub fn unit(width: usize) -> Self {
        let mut t = TensorExpr::zero(width);
        t.add_term(vec![Vec::new(); width], Series::one());
        t
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Word>, &Series)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, legs: Vec<Word>, coeff: Series) {
        assert_eq!(legs.len(), self.width);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(legs) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&coeff);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// `a ⊗ b` for expressions.
    pub fn of_pair(a: &NcExpr, b: &NcExpr) -> Self {
        let mut t = TensorExpr::zero(2);
        for (wa, ca) in a.terms() {
            for (wb, cb) in b.terms() {
                t.add_term(vec![wa.clone(), wb.clone()], ca.mul(cb));
            }
        }
        t
    }

    /// `a ∧ b = a⊗b − b⊗a`.
    pub fn wedge(a: &NcExpr, b: &NcExpr) -> Self {
        TensorExpr::of_pair(a, b).sub(&TensorExpr::of_pair(b, a))
    }

    /// `a ⊥ b = a⊗b + b⊗a`.
    pub fn perp(a: &NcExpr, b: &NcExpr) -> Self {
        TensorExpr::of_pair(a, b).add(&TensorExpr::of_pair(b, a))
    }

    /// Place `e` in slot `slot`, identities elsewhere.
    pub fn embed(e: &NcExpr, width: usize, slot: usize) -> Self {
        assert!(slot < width);
        let mut t = TensorExpr::zero(width);
        for (w, c) in e.terms() {
            let mut legs = vec![Vec::new(); width];
            legs[slot] = w.clone();
            t.add_term(legs, c.clone());
        }
        t
    }

    pub fn add(&self, rhs: &TensorExpr) -> TensorExpr {
        assert_eq!(self.width, rhs.width);
        let mut out = self.clone();
        for (l, c) in rhs.terms.iter() {
            out.add_term(l.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &TensorExpr) -> TensorExpr {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> TensorExpr {
        TensorExpr {
            width: self.width,
            terms: self
                .terms
                .iter()
                .map(|(l, c)| (l.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> TensorExpr {
        self.scale_series(&Series::scalar(c.clone()))
    }

    pub fn scale_series(&self, s: &Series) -> TensorExpr {
        let mut out = TensorExpr::zero(self.width);
        for (l, c) in self.terms.iter() {
            out.add_term(l.clone(), c.mul(s));
        }
        out
    }

    /// Slotwise product with independent normal ordering per slot.
    ///
    /// Raw leg concatenations are collected (with their coefficients
    /// summed, and dead coefficients dropped) before any rewriting, and
    /// each distinct slot word is normal ordered exactly once.
    pub fn mul(&self, rhs: &TensorExpr, rules: &Ruleset) -> Result<TensorExpr> {
        self.mul_memo(rhs, rules, &mut HashMap::new())
    }

    /// As [`TensorExpr::mul`], sharing a normal-form memo across calls.
    pub fn mul_memo(
        &self,
        rhs: &TensorExpr,
        rules: &Ruleset,
        memo: &mut HashMap<Word, NcExpr>,
    ) -> Result<TensorExpr> {
        assert_eq!(self.width, rhs.width);
        let mut raw: BTreeMap<Vec<Word>, Series> = BTreeMap::new();
        for (l1, c1) in self.terms.iter() {
            for (l2, c2) in rhs.terms.iter() {
                let c = c1.mul(c2);
                if c.is_zero() {
                    continue;
                }
                let legs: Vec<Word> = (0..self.width)
                    .map(|s| {
                        let mut w = Vec::with_capacity(l1[s].len() + l2[s].len());
                        w.extend_from_slice(&l1[s]);
                        w.extend_from_slice(&l2[s]);
                        w
                    })
                    .collect();
                match raw.entry(legs) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let sum = e.get().add(&c);
                        if sum.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = sum;
                        }
                    }
                }
            }
        }
        let mut out = TensorExpr::zero(self.width);
        for (legs, coeff) in raw {
            let mut partial: Vec<(Vec<Word>, Series)> = vec![(Vec::new(), coeff)];
            for w in &legs {
                let nf = match memo.get(w) {
                    Some(e) => e.clone(),
                    None => {
                        let e = normal_order(&NcExpr::term(w.clone(), Series::one()), rules)?;
                        memo.insert(w.clone(), e.clone());
                        e
                    }
                };
                let mut next = Vec::with_capacity(partial.len() * nf.num_terms());
                for (ls, c) in &partial {
                    for (nw, nc) in nf.terms() {
                        let cc = c.mul(nc);
                        if cc.is_zero() {
                            continue;
                        }
                        let mut l = ls.clone();
                        l.push(nw.clone());
                        next.push((l, cc));
                    }
                }
                partial = next;
            }
            for (l, c) in partial {
                out.add_term(l, c);
            }
        }
        Ok(out)
    }

    /// Replace slot `slot` by the image of its word under `f`, splicing the
    /// image tensor's slots in place. Used for `(Δ ⊗ id)` and `(id ⊗ Δ)`.
    pub fn map_slot(
        &self,
        slot: usize,
        image_width: usize,
        mut f: impl FnMut(&Word) -> Result<TensorExpr>,
    ) -> Result<TensorExpr> {
        assert!(slot < self.width);
        let mut out = TensorExpr::zero(self.width - 1 + image_width);
        for (legs, coeff) in self.terms.iter() {
            let image = f(&legs[slot])?;
            assert_eq!(image.width(), image_width);
            for (img_legs, img_coeff) in image.terms.iter() {
                let mut l = Vec::with_capacity(out.width);
                l.extend_from_slice(&legs[..slot]);
                l.extend_from_slice(img_legs);
                l.extend_from_slice(&legs[slot + 1..]);
                out.add_term(l, coeff.mul(img_coeff));
            }
        }
        Ok(out)
    }

    /// Apply a counit to slot `slot` and drop it.
    pub fn counit_slot(&self, slot: usize, eps: impl Fn(&Word) -> Scalar) -> TensorExpr {
        assert!(slot < self.width);
        let mut out = TensorExpr::zero(self.width - 1);
        for (legs, coeff) in self.terms.iter() {
            let e = eps(&legs[slot]);
            if e.is_zero() {
                continue;
            }
            let mut l = Vec::with_capacity(self.width - 1);
            l.extend_from_slice(&legs[..slot]);
            l.extend_from_slice(&legs[slot + 1..]);
            out.add_term(l, coeff.scale(&e));
        }
        out
    }

    /// Collapse a width-1 tensor back to an expression.
    pub fn into_expr(self) -> NcExpr {
        assert_eq!(self.width, 1);
        let mut e = NcExpr::zero();
        for (legs, coeff) in self.terms {
            e.add_term(legs.into_iter().next().unwrap(), coeff);
        }
        e
    }

    pub fn truncated(&self, n: u32) -> TensorExpr {
        let mut out = TensorExpr::zero(self.width);
        for (l, c) in self.terms.iter() {
            out.add_term(l.clone(), c.truncated(n));
        }
        out
    }

    /// Flip the sign of the series variable in every coefficient.
    pub fn flip_s(&self) -> TensorExpr {
        let mut out = TensorExpr::zero(self.width);
        for (l, c) in self.terms.iter() {
            out.add_term(l.clone(), c.flip_s());
        }
        out
    }

    pub fn eq_to_order(&self, rhs: &TensorExpr, n: u32) -> bool {
        self.truncated(n) == rhs.truncated(n)
    }
}

impl fmt::Debug for TensorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(legs, c)| {
                let legs_str: Vec<String> = legs.iter().map(word_name).collect();
                format!("({:?})*{}", c, legs_str.join(" (x) "))
            })
            .collect();
        write!(f, "{}", parts.join("  +  "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generator::Generator::*;

    #[test]
    fn wedge_of_equal_elements_vanishes() {
        let a = NcExpr::gen(P(1)).add(&NcExpr::gen(M(0, 2)));
        assert!(TensorExpr::wedge(&a, &a).is_zero());
    }

    #[test]
    fn perp_is_symmetric() {
        let a = NcExpr::gen(P(1));
        let b = NcExpr::gen(M(1, 2));
        assert_eq!(TensorExpr::perp(&a, &b), TensorExpr::perp(&b, &a));
    }

    #[test]
    fn unit_is_multiplicative_identity() {
        let t = TensorExpr::wedge(&NcExpr::gen(P(3)), &NcExpr::gen(M(1, 2)));
        let u = TensorExpr::unit(2);
        let rules = Ruleset::new();
        assert_eq!(u.mul(&t, &rules).unwrap(), t);
        assert_eq!(t.mul(&u, &rules).unwrap(), t);
    }

    #[test]
    fn counit_slot_projects_empty_words() {
        let t = TensorExpr::of_pair(&NcExpr::one(), &NcExpr::gen(P(2)))
            .add(&TensorExpr::of_pair(&NcExpr::gen(P(1)), &NcExpr::one()));
        let eps = |w: &Word| {
            if w.is_empty() {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        };
        let left = t.counit_slot(0, eps);
        assert_eq!(left.into_expr(), NcExpr::gen(P(2)));
    }
}
