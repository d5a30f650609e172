//! Rewrite rules and normal ordering.
//!
//! A rule set maps an out-of-order adjacent pair `(hi, lo)` (with
//! `hi > lo` in the canonical letter order) to the bracket `[hi, lo]`, so
//! that `hi·lo -> lo·hi + [hi, lo]`. Pairs of equal letters never rewrite.
//! A missing entry for a genuinely out-of-order pair is an error rather
//! than an implicit commutation; every rule set spells out its zero
//! brackets explicitly.

use crate::error::{EngineError, Result};
use crate::expr::NcExpr;
use crate::generator::{Generator, Word};
use crate::series::Series;
use std::collections::BTreeMap;

/// Upper bound on elementary rewrite steps for a single normal ordering.
pub const REWRITE_BUDGET: u64 = 20_000_000;

#[derive(Clone, Default)]
pub struct Ruleset {
    rules: BTreeMap<(Generator, Generator), NcExpr>,
}

impl Ruleset {
    pub fn new() -> Self {
        Ruleset::default()
    }

    /// Register `[hi, lo]`. The right-hand side must already be canonical.
    pub fn insert(&mut self, hi: Generator, lo: Generator, bracket: NcExpr) {
        assert!(hi > lo, "rule key must be an out-of-order pair: {hi} {lo}");
        debug_assert!(
            bracket.terms().all(|(w, _)| first_inversion(w).is_none()),
            "rule rhs for {hi}{lo} is not canonical"
        );
        self.rules.insert((hi, lo), bracket);
    }

    pub fn get(&self, hi: Generator, lo: Generator) -> Option<&NcExpr> {
        self.rules.get(&(hi, lo))
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    /// Merge two rule sets over disjoint alphabets.
    pub fn union(mut self, other: Ruleset) -> Ruleset {
        for (k, v) in other.rules {
            let prev = self.rules.insert(k, v);
            assert!(prev.is_none(), "conflicting rule for {:?}", k);
        }
        self
    }
}

fn first_inversion(w: &Word) -> Option<usize> {
    (0..w.len().saturating_sub(1)).find(|&i| w[i] > w[i + 1])
}

/// Bring every word of `e` to canonical order modulo the rewrite relations.
pub fn normal_order(e: &NcExpr, rules: &Ruleset) -> Result<NcExpr> {
    let mut out = NcExpr::zero();
    let mut queue: Vec<(Word, Series)> = e.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
    let mut budget = REWRITE_BUDGET;
    while let Some((w, c)) = queue.pop() {
        if c.is_zero() {
            continue;
        }
        if budget == 0 {
            return Err(EngineError::RewriteBudgetExceeded);
        }
        budget -= 1;
        match first_inversion(&w) {
            None => out.add_term(w, c),
            Some(i) => {
                let (hi, lo) = (w[i], w[i + 1]);
                let rhs = rules
                    .get(hi, lo)
                    .ok_or(EngineError::MissingRule(hi, lo))?
                    .clone();
                let mut swapped = w.clone();
                swapped.swap(i, i + 1);
                queue.push((swapped, c.clone()));
                for (rw, rc) in rhs.terms() {
                    let mut word = Vec::with_capacity(w.len() - 2 + rw.len());
                    word.extend_from_slice(&w[..i]);
                    word.extend_from_slice(rw);
                    word.extend_from_slice(&w[i + 2..]);
                    queue.push((word, c.mul(rc)));
                }
            }
        }
    }
    Ok(out)
}

/// Product with normal ordering.
pub fn mul(a: &NcExpr, b: &NcExpr, rules: &Ruleset) -> Result<NcExpr> {
    normal_order(&a.mul_raw(b), rules)
}

/// `[a, b] = ab - ba`, normal ordered.
pub fn commutator(a: &NcExpr, b: &NcExpr, rules: &Ruleset) -> Result<NcExpr> {
    normal_order(&a.mul_raw(b).sub(&b.mul_raw(a)), rules)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generator::Generator::*;
    use crate::scalar::Scalar;

    /// Toy rule: `[B, A] = 1` on a two-letter alphabet (A = P0, B = P1).
    fn heisenberg_toy() -> Ruleset {
        let mut r = Ruleset::new();
        r.insert(P(1), P(0), NcExpr::one());
        r
    }

    #[test]
    fn single_swap_with_remainder() {
        let e = NcExpr::term(vec![P(1), P(0)], Series::one());
        let n = normal_order(&e, &heisenberg_toy()).unwrap();
        assert_eq!(n.coeff(&vec![P(0), P(1)]), Series::one());
        assert_eq!(n.counit(), Series::one());
    }

    #[test]
    fn already_canonical_is_untouched() {
        let e = NcExpr::term(vec![P(0), P(1)], Series::scalar(Scalar::i()));
        assert_eq!(normal_order(&e, &Ruleset::new()).unwrap(), e);
    }

    #[test]
    fn missing_rule_is_an_error() {
        let e = NcExpr::term(vec![P(1), P(0)], Series::one());
        assert_eq!(
            normal_order(&e, &Ruleset::new()),
            Err(EngineError::MissingRule(P(1), P(0)))
        );
    }

    #[test]
    fn normal_order_is_idempotent() {
        let rules = heisenberg_toy();
        let e = NcExpr::term(vec![P(1), P(1), P(0), P(0)], Series::one());
        let once = normal_order(&e, &rules).unwrap();
        let twice = normal_order(&once, &rules).unwrap();
        assert_eq!(once, twice);
    }

    #[test]
    fn commutator_is_antisymmetric() {
        let rules = heisenberg_toy();
        let a = NcExpr::gen(P(0)).add(&NcExpr::gen(P(1)));
        let b = NcExpr::term(vec![P(0), P(1)], Series::one());
        let ab = commutator(&a, &b, &rules).unwrap();
        let ba = commutator(&b, &a, &rules).unwrap();
        assert_eq!(ab, ba.neg());
        assert!(commutator(&a, &a, &rules).unwrap().is_zero());
    }
}
