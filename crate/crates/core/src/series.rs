//! Truncated power series in the deformation variable `s = 1/(2ξ)`.
//!
//! A series is a finite map from `(s_power, c_power)` to an exact scalar.
//! The `c` grade tracks powers of the formal light-speed symbol and is only
//! populated inside the contraction pipeline; everywhere else it stays `0`.
//! The truncation order is carried with the value: `None` means the series
//! is an exact polynomial, `Some(n)` means coefficients above `s^n` are
//! unknown and have been dropped. Combining two series truncates to the
//! smaller order.

use crate::scalar::Scalar;
use std::collections::BTreeMap;
use std::fmt;

pub type SeriesKey = (u32, i32);

#[derive(Clone, PartialEq, Eq, Default)]
pub struct Series {
    terms: BTreeMap<SeriesKey, Scalar>,
    order: Option<u32>,
}

fn min_order(a: Option<u32>, b: Option<u32>) -> Option<u32> {
    match (a, b) {
        (None, x) => x,
        (x, None) => x,
        (Some(x), Some(y)) => Some(x.min(y)),
    }
}

impl Series {
    pub fn zero() -> Self {
        Series::default()
    }

    pub fn one() -> Self {
        Series::scalar(Scalar::one())
    }

    pub fn scalar(c: Scalar) -> Self {
        Series::monomial(0, 0, c)
    }

    pub fn s_power(k: u32, c: Scalar) -> Self {
        Series::monomial(k, 0, c)
    }

    pub fn monomial(s_pow: u32, c_pow: i32, coeff: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((s_pow, c_pow), coeff);
        }
        Series { terms, order: None }
    }

    pub fn order(&self) -> Option<u32> {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SeriesKey, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, s_pow: u32, c_pow: i32) -> Scalar {
        self.terms
            .get(&(s_pow, c_pow))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    /// The scalar part of an order-zero, c-free series. `None` when any
    /// genuine `s` or `c` dependence remains.
    pub fn as_scalar(&self) -> Option<Scalar> {
        if self.terms.is_empty() {
            return Some(Scalar::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&(0, 0)) {
                return Some(c.clone());
            }
        }
        None
    }

    /// The single `(s_pow, c_pow, coeff)` term of a monomial series.
    pub fn as_monomial(&self) -> Option<(u32, i32, Scalar)> {
        if self.terms.len() == 1 {
            let ((s, c), v) = self.terms.iter().next().unwrap();
            Some((*s, *c, v.clone()))
        } else {
            None
        }
    }

    fn insert(&mut self, key: SeriesKey, coeff: Scalar) {
        if let Some(n) = self.order {
            if key.0 > n {
                return;
            }
        }
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, rhs: &Series) -> Series {
        let mut out = Series {
            terms: self.terms.clone(),
            order: min_order(self.order, rhs.order),
        };
        out.retrim();
        for (k, v) in rhs.terms.iter() {
            out.insert(*k, v.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Series) -> Series {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Series {
        Series {
            terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect(),
            order: self.order,
        }
    }

    pub fn mul(&self, rhs: &Series) -> Series {
        let mut out = Series {
            terms: BTreeMap::new(),
            order: min_order(self.order, rhs.order),
        };
        for ((s1, c1), v1) in self.terms.iter() {
            for ((s2, c2), v2) in rhs.terms.iter() {
                out.insert((s1 + s2, c1 + c2), v1 * v2);
            }
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Series {
        if c.is_zero() {
            return Series {
                terms: BTreeMap::new(),
                order: self.order,
            };
        }
        Series {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
            order: self.order,
        }
    }

    fn retrim(&mut self) {
        if let Some(n) = self.order {
            self.terms.retain(|k, _| k.0 <= n);
        }
    }

    pub fn truncated(&self, n: u32) -> Series {
        let mut out = self.clone();
        out.order = min_order(self.order, Some(n));
        out.retrim();
        out
    }

    /// Flip the sign of the series variable, `s -> -s`.
    pub fn flip_s(&self) -> Series {
        Series {
            terms: self
                .terms
                .iter()
                .map(|(&(s, c), v)| ((s, c), if s % 2 == 1 { -v } else { v.clone() }))
                .collect(),
            order: self.order,
        }
    }

    /// Remap the `c` grade of every term.
    pub fn map_c(&self, f: impl Fn(u32, i32) -> i32) -> Series {
        let mut out = Series {
            terms: BTreeMap::new(),
            order: self.order,
        };
        for (&(s, c), v) in self.terms.iter() {
            out.insert((s, f(s, c)), v.clone());
        }
        out
    }

    /// Split into the `c^0` part, and the extreme c-powers present.
    pub fn c_support(&self) -> Option<(i32, i32)> {
        let mut lo = i32::MAX;
        let mut hi = i32::MIN;
        for &(_, c) in self.terms.keys() {
            lo = lo.min(c);
            hi = hi.max(c);
        }
        if self.terms.is_empty() {
            None
        } else {
            Some((lo, hi))
        }
    }

    pub fn keep_c0(&self) -> Series {
        Series {
            terms: self
                .terms
                .iter()
                .filter(|((_, c), _)| *c == 0)
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
            order: self.order,
        }
    }

    pub fn eq_to_order(&self, rhs: &Series, n: u32) -> bool {
        self.truncated(n).terms == rhs.truncated(n).terms
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&(s, c), v)| {
                let mut t = format!("{v}");
                if s > 0 {
                    t.push_str(&format!("*s^{s}"));
                }
                if c != 0 {
                    t.push_str(&format!("*c^{c}"));
                }
                t
            })
            .collect();
        write!(f, "{}", parts.join(" + "))?;
        if let Some(n) = self.order {
            write!(f, " [O({n})]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s() -> Series {
        Series::s_power(1, Scalar::one())
    }

    #[test]
    fn truncation_is_coherent_with_multiplication() {
        // truncate(a*b, n) == truncate(truncate(a,n)*truncate(b,n), n)
        let a = Series::one()
            .add(&s())
            .add(&Series::s_power(3, Scalar::from_int(2)));
        let b = Series::s_power(2, Scalar::ratio(1, 3)).add(&Series::one());
        for n in 0..6 {
            let lhs = a.mul(&b).truncated(n);
            let rhs = a.truncated(n).mul(&b.truncated(n)).truncated(n);
            assert_eq!(lhs.terms, rhs.terms, "order {n}");
        }
    }

    #[test]
    fn order_propagates_through_products() {
        let a = Series::one().add(&s()).truncated(4);
        let b = s().truncated(6);
        let p = a.mul(&b);
        assert_eq!(p.order(), Some(4));
        assert!(p.coeff(2, 0) == Scalar::one());
    }

    #[test]
    fn flip_s_negates_odd_powers() {
        let a = s().add(&Series::s_power(2, Scalar::one()));
        let f = a.flip_s();
        assert_eq!(f.coeff(1, 0), Scalar::from_int(-1));
        assert_eq!(f.coeff(2, 0), Scalar::one());
    }

    #[test]
    fn c_grading_bookkeeping() {
        let a = Series::monomial(1, 2, Scalar::one()).add(&Series::monomial(0, 0, Scalar::i()));
        assert_eq!(a.c_support(), Some((0, 2)));
        assert_eq!(a.keep_c0().coeff(0, 0), Scalar::i());
        let shifted = a.map_c(|s_pow, c| c - 2 * s_pow as i32);
        assert_eq!(shifted.coeff(1, 0), Scalar::one());
    }
}
