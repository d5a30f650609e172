//! Noncommutative polynomial expressions.
//!
//! An [`NcExpr`] is a finite sum of words in [`Generator`] letters with
//! [`Series`] coefficients. Words are only meaningful relative to a rewrite
//! system; [`crate::rewrite::normal_order`] brings them to canonical form.
//! Zero coefficients are pruned eagerly so the zero expression is the empty
//! map and equality is structural.

use crate::generator::{word_name, Generator, Word};
use crate::scalar::Scalar;
use crate::series::Series;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Default)]
pub struct NcExpr {
    terms: BTreeMap<Word, Series>,
}

impl NcExpr {
    pub fn zero() -> Self {
        NcExpr::default()
    }

    pub fn one() -> Self {
        NcExpr::term(vec![], Series::one())
    }

    pub fn scalar(c: Scalar) -> Self {
        NcExpr::term(vec![], Series::scalar(c))
    }

    pub fn series(s: Series) -> Self {
        NcExpr::term(vec![], s)
    }

    pub fn gen(g: Generator) -> Self {
        NcExpr::term(vec![g], Series::one())
    }

    pub fn term(word: Word, coeff: Series) -> Self {
        let mut e = NcExpr::zero();
        e.add_term(word, coeff);
        e
    }

    /// `M_{μν}` as an expression: antisymmetric in its indices and zero on
    /// the diagonal, so any index pair is accepted.
    pub fn m_gen(mu: u8, nu: u8) -> Self {
        use std::cmp::Ordering::*;
        match mu.cmp(&nu) {
            Equal => NcExpr::zero(),
            Less => NcExpr::gen(Generator::M(mu, nu)),
            Greater => NcExpr::gen(Generator::M(nu, mu)).neg(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Series)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, word: &Word) -> Series {
        self.terms.get(word).cloned().unwrap_or_else(Series::zero)
    }

    /// Coefficient of the empty word.
    pub fn counit(&self) -> Series {
        self.coeff(&vec![])
    }

    pub fn add_term(&mut self, word: Word, coeff: Series) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(word) {
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

    pub fn add(&self, rhs: &NcExpr) -> NcExpr {
        let mut out = self.clone();
        for (w, c) in rhs.terms.iter() {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &NcExpr) -> NcExpr {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> NcExpr {
        NcExpr {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> NcExpr {
        self.scale_series(&Series::scalar(c.clone()))
    }

    pub fn scale_series(&self, s: &Series) -> NcExpr {
        let mut out = NcExpr::zero();
        for (w, c) in self.terms.iter() {
            out.add_term(w.clone(), c.mul(s));
        }
        out
    }

    /// Word-concatenation product. No reordering happens here.
    pub fn mul_raw(&self, rhs: &NcExpr) -> NcExpr {
        let mut out = NcExpr::zero();
        for (w1, c1) in self.terms.iter() {
            for (w2, c2) in rhs.terms.iter() {
                let mut w = Vec::with_capacity(w1.len() + w2.len());
                w.extend_from_slice(w1);
                w.extend_from_slice(w2);
                out.add_term(w, c1.mul(c2));
            }
        }
        out
    }

    pub fn truncated(&self, n: u32) -> NcExpr {
        let mut out = NcExpr::zero();
        for (w, c) in self.terms.iter() {
            out.add_term(w.clone(), c.truncated(n));
        }
        out
    }

    pub fn eq_to_order(&self, rhs: &NcExpr, n: u32) -> bool {
        self.truncated(n) == rhs.truncated(n)
    }

    /// Letter-by-letter substitution. Each letter maps to a series scale and
    /// a (possibly empty) replacement letter list; the caller is responsible
    /// for choosing images that preserve the canonical relative order when
    /// the result is to be used without re-ordering.
    pub fn substitute(&self, map: impl Fn(Generator) -> (Series, Vec<Generator>)) -> NcExpr {
        let mut out = NcExpr::zero();
        for (w, c) in self.terms.iter() {
            let mut word = Vec::with_capacity(w.len());
            let mut coeff = c.clone();
            for &g in w {
                let (scale, letters) = map(g);
                coeff = coeff.mul(&scale);
                word.extend(letters);
            }
            out.add_term(word, coeff);
        }
        out
    }

    /// Rename letters one-for-one.
    pub fn rename(&self, map: impl Fn(Generator) -> Generator) -> NcExpr {
        self.substitute(|g| (Series::one(), vec![map(g)]))
    }

    /// Formal derivative with respect to the single-index generator `g`,
    /// valid for words over a mutually commuting alphabet.
    pub fn derivative(&self, g: Generator) -> NcExpr {
        let mut out = NcExpr::zero();
        for (w, c) in self.terms.iter() {
            let count = w.iter().filter(|&&x| x == g).count();
            if count == 0 {
                continue;
            }
            let mut word = w.clone();
            let pos = word.iter().position(|&x| x == g).unwrap();
            word.remove(pos);
            out.add_term(word, c.scale(&Scalar::from_int(count as i64)));
        }
        out
    }

    /// True when every letter satisfies the predicate.
    pub fn alphabet_within(&self, pred: impl Fn(Generator) -> bool) -> bool {
        self.terms.keys().all(|w| w.iter().all(|&g| pred(g)))
    }

    pub fn map_coeffs(&self, f: impl Fn(&Series) -> Series) -> NcExpr {
        let mut out = NcExpr::zero();
        for (w, c) in self.terms.iter() {
            out.add_term(w.clone(), f(c));
        }
        out
    }
}

impl fmt::Debug for NcExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| format!("({:?})*{}", c, word_name(w)))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generator::Generator::*;

    #[test]
    fn zero_has_empty_term_map() {
        let e = NcExpr::gen(P(1)).sub(&NcExpr::gen(P(1)));
        assert!(e.is_zero());
        assert_eq!(e.num_terms(), 0);
    }

    #[test]
    fn m_gen_normalizes_antisymmetrically() {
        assert_eq!(NcExpr::m_gen(2, 1), NcExpr::gen(M(1, 2)).neg());
        assert!(NcExpr::m_gen(1, 1).is_zero());
        assert_eq!(NcExpr::m_gen(1, 2), NcExpr::gen(M(1, 2)));
    }

    #[test]
    fn raw_product_concatenates_words() {
        let e = NcExpr::gen(P(1)).mul_raw(&NcExpr::gen(M(1, 2)));
        assert_eq!(e.coeff(&vec![P(1), M(1, 2)]), Series::one());
    }

    #[test]
    fn derivative_counts_multiplicity() {
        let w = NcExpr::term(vec![Px(3), Px(3), Px(3)], Series::one());
        let d = w.derivative(Px(3));
        assert_eq!(
            d.coeff(&vec![Px(3), Px(3)]),
            Series::scalar(Scalar::from_int(3))
        );
    }

    #[test]
    fn substitution_scales_coefficients() {
        let e = NcExpr::gen(X(0));
        let sub = e.substitute(|g| match g {
            X(0) => (Series::monomial(0, 1, Scalar::one()), vec![T]),
            other => (Series::one(), vec![other]),
        });
        assert_eq!(sub.coeff(&vec![T]), Series::monomial(0, 1, Scalar::one()));
    }
}
