//! Generators and words.
//!
//! The variant order of [`Generator`] *is* the canonical (PBW) letter order
//! used by normal ordering: Lorentz generators before translations on the
//! algebra side, group matrix entries before group translations on the dual
//! side, and positions before momenta on every phase-space side. Within a
//! kind, letters sort by their spacetime indices.

use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    /// Lorentz generator `M_{μν}`, kept with `μ < ν`.
    M(u8, u8),
    /// Translation `P_μ` of the deformed symmetry algebra.
    P(u8),
    /// Quantum-group matrix entry `Λ^μ_ν`.
    Lam(u8, u8),
    /// Quantum-group translation `a^μ`.
    A(u8),
    /// Relativistic position `x_μ`.
    X(u8),
    /// Relativistic momentum `p_μ`.
    Px(u8),
    /// Galilean time `t`.
    T,
    /// Galilean position `y_i`.
    Y(u8),
    /// Galilean momentum `π_μ`.
    Pi(u8),
}

pub type Word = Vec<Generator>;

impl Generator {
    /// Index arity sanity check; `M` and `Λ` carry two indices, `t` none.
    pub fn valid(&self) -> bool {
        match *self {
            Generator::M(a, b) => a < b && b <= 3,
            Generator::Lam(a, b) => a <= 3 && b <= 3,
            Generator::P(a)
            | Generator::A(a)
            | Generator::X(a)
            | Generator::Px(a)
            | Generator::Pi(a) => a <= 3,
            Generator::Y(a) => (1..=3).contains(&a),
            Generator::T => true,
        }
    }

    pub fn name(&self) -> String {
        match *self {
            Generator::M(a, b) => format!("M{a}{b}"),
            Generator::P(a) => format!("P{a}"),
            Generator::Lam(a, b) => format!("L{a}_{b}"),
            Generator::A(a) => format!("a{a}"),
            Generator::X(a) => format!("x{a}"),
            Generator::Px(a) => format!("p{a}"),
            Generator::T => "t".to_string(),
            Generator::Y(a) => format!("y{a}"),
            Generator::Pi(a) => format!("pi{a}"),
        }
    }

    pub fn parse(s: &str) -> Option<Generator> {
        let idx = |t: &str| t.parse::<u8>().ok();
        let g = if s == "t" {
            Generator::T
        } else if let Some(rest) = s.strip_prefix("pi") {
            Generator::Pi(idx(rest)?)
        } else if let Some(rest) = s.strip_prefix('x') {
            Generator::X(idx(rest)?)
        } else if let Some(rest) = s.strip_prefix('p') {
            Generator::Px(idx(rest)?)
        } else if let Some(rest) = s.strip_prefix('y') {
            Generator::Y(idx(rest)?)
        } else if let Some(rest) = s.strip_prefix('a') {
            Generator::A(idx(rest)?)
        } else if let Some(rest) = s.strip_prefix('M') {
            let b: Vec<u8> = rest.bytes().collect();
            if b.len() != 2 {
                return None;
            }
            Generator::M(
                (b[0] as char).to_digit(10)? as u8,
                (b[1] as char).to_digit(10)? as u8,
            )
        } else if let Some(rest) = s.strip_prefix('L') {
            let (up, lo) = rest.split_once('_')?;
            Generator::Lam(idx(up)?, idx(lo)?)
        } else {
            let rest = s.strip_prefix('P')?;
            Generator::P(idx(rest)?)
        };
        g.valid().then_some(g)
    }

    /// The spacetime index of a single-index generator.
    pub fn index(&self) -> Option<u8> {
        match *self {
            Generator::P(a)
            | Generator::A(a)
            | Generator::X(a)
            | Generator::Px(a)
            | Generator::Y(a)
            | Generator::Pi(a) => Some(a),
            _ => None,
        }
    }

    pub fn is_position_like(&self) -> bool {
        matches!(self, Generator::X(_) | Generator::T | Generator::Y(_))
    }

    pub fn is_momentum_like(&self) -> bool {
        matches!(self, Generator::Px(_) | Generator::Pi(_))
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl fmt::Debug for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

pub fn word_name(w: &Word) -> String {
    if w.is_empty() {
        return "1".to_string();
    }
    let mut out = String::new();
    let mut i = 0;
    while i < w.len() {
        let mut j = i;
        while j < w.len() && w[j] == w[i] {
            j += 1;
        }
        if !out.is_empty() {
            out.push('*');
        }
        out.push_str(&w[i].name());
        if j - i > 1 {
            out.push_str(&format!("^{}", j - i));
        }
        i = j;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_letter_order() {
        // Lorentz before translations, matrix entries before group
        // translations, positions before momenta, time before space.
        assert!(Generator::M(0, 1) < Generator::P(0));
        assert!(Generator::Lam(3, 3) < Generator::A(0));
        assert!(Generator::P(3) < Generator::Lam(0, 0));
        assert!(Generator::X(3) < Generator::Px(0));
        assert!(Generator::T < Generator::Y(1));
        assert!(Generator::Y(3) < Generator::Pi(0));
        assert!(Generator::X(1) < Generator::X(2));
    }

    #[test]
    fn parse_roundtrip() {
        for g in [
            Generator::M(1, 2),
            Generator::P(0),
            Generator::Lam(1, 2),
            Generator::A(3),
            Generator::X(0),
            Generator::Px(2),
            Generator::T,
            Generator::Y(1),
            Generator::Pi(0),
        ] {
            assert_eq!(Generator::parse(&g.name()), Some(g));
        }
        assert_eq!(Generator::parse("q7"), None);
    }

    #[test]
    fn word_display_groups_powers() {
        let w = vec![Generator::M(1, 2), Generator::P(3), Generator::P(3)];
        assert_eq!(word_name(&w), "M12*P3^2");
        assert_eq!(word_name(&vec![]), "1");
    }
}
