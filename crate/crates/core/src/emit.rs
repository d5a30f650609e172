//! Deterministic emitters and the coefficient-string grammar.
//!
//! All machine output flows through these renderers: identical inputs give
//! byte-identical strings (every map is ordered, nothing depends on hash
//! order or time). The JSON writer is hand-rolled so the key order is
//! fixed; `parse_poly` inverts the coefficient grammar exactly, which is
//! what the structured-output round-trip leans on.

use crate::closed_form::ClosedForm;
use crate::double::{PhaseSpaceTable, Regime};
use crate::expr::NcExpr;
use crate::generator::Generator;
use crate::poincare::CarrierCase;
use crate::reference::DiscrepancyLedger;
use crate::scalar::Scalar;
use crate::series::Series;
use crate::uncertainty::{Bound, BoundUnit};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::Neg;

// ---------------------------------------------------------------------------
// Coefficient polynomials: "<scalar>*<word>" terms joined by " + ".
// ---------------------------------------------------------------------------

fn word_factor_str(w: &[Generator]) -> String {
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
            let _ = write!(out, "^{}", j - i);
        }
        i = j;
    }
    out
}

fn scalar_word_str(c: &Scalar, w: &[Generator]) -> String {
    if w.is_empty() {
        return c.to_string();
    }
    let word = word_factor_str(w);
    if *c == Scalar::one() {
        word
    } else if *c == Scalar::from_int(-1) {
        format!("-{word}")
    } else {
        format!("{c}*{word}")
    }
}

/// Render the fixed-`s`-power slice of an expression (a polynomial in the
/// momenta with exact scalar coefficients).
pub fn poly_str(terms: &[(Vec<Generator>, Scalar)]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    terms
        .iter()
        .map(|(w, c)| scalar_word_str(c, w))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Series view of an entry: s-power -> polynomial-in-momenta slice.
pub fn series_view(e: &NcExpr) -> BTreeMap<u32, Vec<(Vec<Generator>, Scalar)>> {
    let mut out: BTreeMap<u32, Vec<(Vec<Generator>, Scalar)>> = BTreeMap::new();
    for (w, series) in e.terms() {
        for (&(s_pow, c_pow), c) in series.terms() {
            assert_eq!(c_pow, 0, "c-graded values are not emitted");
            out.entry(s_pow).or_default().push((w.clone(), c.clone()));
        }
    }
    for v in out.values_mut() {
        v.sort_by(|a, b| a.0.cmp(&b.0));
    }
    out
}

/// Whole-expression rendering (series flattened with explicit s powers).
pub fn expr_str(e: &NcExpr) -> String {
    if e.is_zero() {
        return "0".to_string();
    }
    let mut parts = Vec::new();
    for (s_pow, slice) in series_view(e) {
        let p = poly_str(&slice);
        if s_pow == 0 {
            parts.push(p);
        } else {
            let s = if s_pow == 1 {
                "s".to_string()
            } else {
                format!("s^{s_pow}")
            };
            parts.push(format!("{s}*({p})"));
        }
    }
    parts.join(" + ")
}

// ---------------------------------------------------------------------------
// Parsing (inverse of poly_str).
// ---------------------------------------------------------------------------

fn parse_rational(tok: &str) -> Option<BigRational> {
    let (num, den) = match tok.split_once('/') {
        Some((n, d)) => (n, d),
        None => (tok, "1"),
    };
    let n: BigInt = num.parse().ok()?;
    let d: BigInt = den.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(BigRational::new(n, d))
}

/// Parse one polynomial slice back into `(word, scalar)` terms.
pub fn parse_poly(input: &str) -> Option<Vec<(Vec<Generator>, Scalar)>> {
    let input = input.trim();
    if input == "0" {
        return Some(Vec::new());
    }
    let mut out = Vec::new();
    for raw_term in input.split(" + ") {
        let mut scalar = Scalar::one();
        let mut word: Vec<Generator> = Vec::new();
        for (i, tok) in raw_term.split('*').enumerate() {
            let tok = tok.trim();
            if tok == "i" {
                scalar = scalar.times_i();
            } else if tok == "-i" {
                scalar = scalar.times_i().neg();
            } else if tok.starts_with('(') {
                // "(a+b*i)" never appears in emitted tables; reject.
                return None;
            } else if tok.chars().next()? == '-'
                && !tok[1..].starts_with(|c: char| c.is_ascii_digit())
            {
                scalar = scalar.neg();
                let (g, pow) = parse_gen_power(&tok[1..])?;
                word.extend(std::iter::repeat_n(g, pow));
            } else if tok.starts_with(|c: char| c.is_ascii_digit() || c == '-') {
                if i > 0 && !word.is_empty() {
                    return None;
                }
                scalar = &scalar * &Scalar::from_parts(parse_rational(tok)?, BigRational::zero());
            } else {
                let (g, pow) = parse_gen_power(tok)?;
                word.extend(std::iter::repeat_n(g, pow));
            }
        }
        out.push((word, scalar));
    }
    Some(out)
}

fn parse_gen_power(tok: &str) -> Option<(Generator, usize)> {
    let (name, pow) = match tok.split_once('^') {
        Some((n, p)) => (n, p.parse().ok()?),
        None => (tok, 1),
    };
    Generator::parse(name).map(|g| (g, pow))
}

/// Rebuild an expression from its emitted series view.
pub fn poly_map_to_expr(view: &BTreeMap<u32, String>, order: u32) -> Option<NcExpr> {
    let mut e = NcExpr::zero();
    for (&s_pow, slice) in view {
        for (w, c) in parse_poly(slice)? {
            e.add_term(w, Series::s_power(s_pow, c));
        }
    }
    Some(e.truncated(order))
}

// ---------------------------------------------------------------------------
// JSON (hand-rolled, ordered).
// ---------------------------------------------------------------------------

fn json_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out
}

pub struct JsonWriter {
    buf: String,
}

impl JsonWriter {
    pub fn new() -> Self {
        JsonWriter { buf: String::new() }
    }

    pub fn raw(&mut self, s: &str) -> &mut Self {
        self.buf.push_str(s);
        self
    }

    pub fn string(&mut self, s: &str) -> &mut Self {
        let _ = write!(self.buf, "\"{}\"", json_escape(s));
        self
    }

    pub fn finish(self) -> String {
        self.buf
    }
}

impl Default for JsonWriter {
    fn default() -> Self {
        Self::new()
    }
}

fn carrier_json(t: &PhaseSpaceTable) -> String {
    let c = &t.carrier;
    let mut s = format!(
        "{{\"case\": \"{}\", \"k\": {}, \"l\": {}",
        c.case.name(),
        c.k,
        c.l
    );
    if c.case == CarrierCase::RotationGamma {
        let _ = write!(s, ", \"gamma\": {}", c.gamma);
    }
    s.push('}');
    s
}

fn closed_form_json(cf: &Option<ClosedForm>) -> String {
    match cf {
        None => "null".to_string(),
        Some(c) => format!("\"{}\"", json_escape(&c.display_str())),
    }
}

pub fn ledger_json_rows(ledger: &DiscrepancyLedger) -> String {
    let mut rows = Vec::new();
    for r in &ledger.rows {
        rows.push(format!(
            "{{\"pair\": \"[{},{}]\", \"engine\": \"{}\", \"reference\": \"{}\", \"verdict\": \"{}\"}}",
            r.pair.0,
            r.pair.1,
            json_escape(&entry_display(&r.engine)),
            json_escape(&entry_display(&r.reference)),
            r.verdict.name()
        ));
    }
    format!("[{}]", rows.join(", "))
}

fn entry_display(e: &NcExpr) -> String {
    match ClosedForm::recognize(e, crate::DEFAULT_ORDER) {
        Some(cf) => cf.display_str(),
        None => {
            let view = series_view(e);
            let parts: Vec<String> = view
                .iter()
                .map(|(s_pow, slice)| format!("s^{}:({})", s_pow, poly_str(slice)))
                .collect();
            parts.join(" + ")
        }
    }
}

/// The structured table format:
/// `{carrier, order, regime, relations: [{lhs, series, closed_form}], ledger: [...]}`.
pub fn table_to_json(table: &PhaseSpaceTable, ledger: Option<&DiscrepancyLedger>) -> String {
    let mut w = JsonWriter::new();
    w.raw("{\n");
    w.raw("  \"carrier\": ")
        .raw(&carrier_json(table))
        .raw(",\n");
    w.raw(&format!("  \"order\": {},\n", table.order));
    w.raw("  \"regime\": ")
        .string(&table.regime.name())
        .raw(",\n");
    w.raw("  \"relations\": [\n");
    let n = table.entries.len();
    for (idx, (&(a, b), entry)) in table.entries.iter().enumerate() {
        let view = series_view(&entry.series);
        let series_parts: Vec<String> = view
            .iter()
            .map(|(s_pow, slice)| format!("\"{}\": \"{}\"", s_pow, json_escape(&poly_str(slice))))
            .collect();
        w.raw("    {\"lhs\": [");
        w.string(&a.name()).raw(", ").string(&b.name());
        w.raw("], \"series\": {")
            .raw(&series_parts.join(", "))
            .raw("}, \"closed_form\": ");
        w.raw(&closed_form_json(&entry.closed));
        w.raw("}");
        if idx + 1 < n {
            w.raw(",");
        }
        w.raw("\n");
    }
    w.raw("  ],\n");
    w.raw("  \"ledger\": ");
    match ledger {
        Some(l) => {
            w.raw(&ledger_json_rows(l));
        }
        None => {
            w.raw("[]");
        }
    }
    w.raw("\n}\n");
    w.finish()
}

/// Parse the structured format back to a table (inverse of
/// [`table_to_json`] up to recomputed closed forms).
pub fn table_from_json(input: &str) -> Option<PhaseSpaceTable> {
    // A tiny purpose-built reader: the format is fixed and machine-written.
    let case = CarrierCase::parse(&json_field_str(input, "case")?)?;
    let k = json_field_u8(input, "k")?;
    let l = json_field_u8(input, "l")?;
    let order: u32 = json_field_str_raw(input, "order")?.parse().ok()?;
    let carrier = match case {
        CarrierCase::RotationGamma => {
            crate::poincare::TwistCarrier::rotation_gamma(k, l, json_field_u8(input, "gamma")?)
                .ok()?
        }
        CarrierCase::RotationZero => crate::poincare::TwistCarrier::rotation_zero(k, l).ok()?,
        CarrierCase::Boost => crate::poincare::TwistCarrier::boost(k, l).ok()?,
    };
    let regime_name = json_field_str(input, "regime")?;
    let regime = if regime_name == "relativistic" {
        Regime::Relativistic
    } else {
        let tag = regime_name.strip_prefix("galilean-")?;
        let c = match tag {
            "i" => CarrierCase::RotationGamma,
            "ii" => CarrierCase::RotationZero,
            "iii" => CarrierCase::Boost,
            _ => return None,
        };
        Regime::Galilean(c)
    };
    let mut table = PhaseSpaceTable {
        carrier,
        regime,
        order,
        entries: BTreeMap::new(),
    };
    // Scan relation objects.
    let mut rest = input;
    while let Some(pos) = rest.find("{\"lhs\": [") {
        rest = &rest[pos..];
        let obj_end = rest.find('}')?;
        // lhs
        let lhs_start = rest.find('[')? + 1;
        let lhs_end = rest.find(']')?;
        let lhs: Vec<Generator> = rest[lhs_start..lhs_end]
            .split(',')
            .map(|t| Generator::parse(t.trim().trim_matches('"')))
            .collect::<Option<Vec<_>>>()?;
        if lhs.len() != 2 {
            return None;
        }
        // series map
        let ser_key = "\"series\": {";
        let ser_start = rest.find(ser_key)? + ser_key.len();
        let ser_end = ser_start + rest[ser_start..].find('}')?;
        let mut view = BTreeMap::new();
        let body = &rest[ser_start..ser_end];
        if !body.trim().is_empty() {
            for kv in body.split("\", \"") {
                let kv = kv.trim_matches(|c| c == '"' || c == ' ');
                let (key, val) = kv.split_once("\": \"")?;
                view.insert(
                    key.trim_matches('"').parse().ok()?,
                    val.trim_matches('"').to_string(),
                );
            }
        }
        let expr = poly_map_to_expr(&view, order)?;
        table.set(lhs[0], lhs[1], expr);
        rest = &rest[obj_end + 1..];
        if rest.trim_start().starts_with("],") {
            break;
        }
    }
    Some(table)
}

fn json_field_str(input: &str, key: &str) -> Option<String> {
    let pat = format!("\"{key}\": \"");
    let start = input.find(&pat)? + pat.len();
    let end = start + input[start..].find('"')?;
    Some(input[start..end].to_string())
}

fn json_field_str_raw(input: &str, key: &str) -> Option<String> {
    let pat = format!("\"{key}\": ");
    let start = input.find(&pat)? + pat.len();
    let end = input[start..].find([',', '\n', '}'])? + start;
    Some(input[start..end].trim().to_string())
}

fn json_field_u8(input: &str, key: &str) -> Option<u8> {
    json_field_str_raw(input, key)?.parse().ok()
}

// ---------------------------------------------------------------------------
// Text.
// ---------------------------------------------------------------------------

/// Display name of the deformation scale in a regime.
pub fn xi_name(regime: Regime) -> &'static str {
    match regime {
        Regime::Relativistic => "xi",
        Regime::CGraded(_) => "xi",
        Regime::Galilean(CarrierCase::RotationGamma) => "xi",
        Regime::Galilean(CarrierCase::RotationZero) => "xi-hat",
        Regime::Galilean(CarrierCase::Boost) => "xi-bar",
    }
}

pub fn table_to_text(table: &PhaseSpaceTable, ledger: Option<&DiscrepancyLedger>) -> String {
    let c = &table.carrier;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "phase space ({}; carrier {} k={} l={}{}; order {}; deformation parameter {}; s = 1/(2*{}))",
        table.regime.name(),
        c.case.name(),
        c.k,
        c.l,
        if c.case == CarrierCase::RotationGamma { format!(" gamma={}", c.gamma) } else { String::new() },
        table.order,
        xi_name(table.regime),
        xi_name(table.regime),
    );
    for (&(a, b), entry) in table.entries.iter() {
        let _ = writeln!(out, "[{}, {}] = {}", a, b, entry_display(&entry.series));
    }
    if let Some(l) = ledger {
        let _ = writeln!(out, "ledger:");
        for r in &l.rows {
            let _ = writeln!(
                out,
                "  [{}, {}]: engine = {} | reference = {} | {}",
                r.pair.0,
                r.pair.1,
                entry_display(&r.engine),
                entry_display(&r.reference),
                r.verdict.name()
            );
        }
    }
    out
}

// ---------------------------------------------------------------------------
// LaTeX.
// ---------------------------------------------------------------------------

fn gen_latex(g: Generator) -> String {
    match g {
        Generator::X(i) => format!("x_{i}"),
        Generator::Px(i) => format!("p_{i}"),
        Generator::T => "t".to_string(),
        Generator::Y(i) => format!("y_{i}"),
        Generator::Pi(i) => format!("\\pi_{i}"),
        Generator::M(a, b) => format!("M_{{{a}{b}}}"),
        Generator::P(i) => format!("P_{i}"),
        Generator::Lam(a, b) => format!("\\Lambda^{a}_{{\\ {b}}}"),
        Generator::A(i) => format!("a^{i}"),
    }
}

fn xi_latex(regime: Regime) -> &'static str {
    match regime {
        Regime::Galilean(CarrierCase::RotationZero) => "\\hat{\\xi}",
        Regime::Galilean(CarrierCase::Boost) => "\\bar{\\xi}",
        _ => "\\xi",
    }
}

fn rational_latex(r: &BigRational) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

/// Scalar as a LaTeX coefficient, e.g. `-i`, `\frac{1}{2}`.
fn scalar_latex(c: &Scalar) -> String {
    if c.is_real() {
        return rational_latex(c.re());
    }
    if c.is_imaginary() {
        let im = c.im();
        if im.is_one() {
            return "i".to_string();
        }
        if (-im).is_one() {
            return "-i".to_string();
        }
        return format!("{} i", rational_latex(im));
    }
    format!(
        "({} + {} i)",
        rational_latex(c.re()),
        rational_latex(c.im())
    )
}

/// `coeff·s^k·g` rendered in the `1/ξ` style of the source tables:
/// `2i·s·x_2` prints as `(i/\xi) x_2`, `i·s·p_2` as `\frac{i}{2\xi} p_2`.
fn linear_latex(coeff: &Scalar, s_power: u32, g: Generator, regime: Regime) -> String {
    let xi = xi_latex(regime);
    let mag = coeff.axis_magnitude().expect("pure-axis coefficient");
    let sign = if (coeff.is_real() && coeff.re().is_negative())
        || (coeff.is_imaginary() && coeff.im().is_negative())
    {
        "-"
    } else {
        ""
    };
    let unit = if coeff.is_imaginary() { "i" } else { "" };
    if s_power == 0 {
        return format!("{sign}{}{unit} {}", rational_latex(&mag), gen_latex(g));
    }
    // magnitude / (2ξ)^k reduced to n/d · 1/ξ^k
    let two_pow = BigRational::from(BigInt::from(1i64 << s_power));
    let reduced = mag / two_pow;
    let xi_pow = if s_power == 1 {
        xi.to_string()
    } else {
        format!("{xi}^{s_power}")
    };
    if reduced.is_one() {
        format!("{sign}({unit}/{xi_pow}) {}", gen_latex(g))
    } else if reduced.numer().is_one() {
        format!(
            "{sign}\\frac{{{unit}}}{{{} {xi_pow}}} {}",
            reduced.denom(),
            gen_latex(g)
        )
    } else {
        format!(
            "{sign}\\frac{{{} {unit}}}{{{} {xi_pow}}} {}",
            reduced.numer(),
            reduced.denom(),
            gen_latex(g)
        )
    }
}

fn closed_latex(cf: &ClosedForm, regime: Regime) -> String {
    let xi = xi_latex(regime);
    match cf {
        ClosedForm::Constant(c) => scalar_latex(c),
        ClosedForm::Linear {
            coeff,
            s_power,
            gen,
        } => linear_latex(coeff, *s_power, *gen, regime),
        ClosedForm::Trig {
            prefactor,
            kind,
            arg,
            factor,
        } => {
            let f = match factor {
                None => String::new(),
                Some(g) => format!(" {}", gen_latex(*g)),
            };
            format!(
                "{} \\{}\\left(\\frac{{{}}}{{2{}}}\\right){}",
                scalar_latex(prefactor),
                kind.name(),
                gen_latex(*arg),
                xi,
                f
            )
        }
    }
}

pub fn table_to_latex(table: &PhaseSpaceTable, ledger: Option<&DiscrepancyLedger>) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "% {} table, carrier {}, order {}",
        table.regime.name(),
        table.carrier.case.name(),
        table.order
    );
    let _ = writeln!(out, "\\begin{{array}}{{l}}");
    for (&(a, b), entry) in table.entries.iter() {
        let rhs = match &entry.closed {
            Some(cf) => closed_latex(cf, table.regime),
            None => entry_display(&entry.series),
        };
        let _ = writeln!(out, "[{}, {}] = {} \\\\", gen_latex(a), gen_latex(b), rhs);
    }
    let _ = writeln!(out, "\\end{{array}}");
    if let Some(l) = ledger {
        let _ = writeln!(out, "% ledger");
        for r in &l.rows {
            let _ = writeln!(
                out,
                "% [{}, {}]: engine {} vs reference {} => {}",
                r.pair.0,
                r.pair.1,
                entry_display(&r.engine),
                entry_display(&r.reference),
                r.verdict.name()
            );
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Tensors.
// ---------------------------------------------------------------------------

/// Deterministic flat rendering of a tensor expression:
/// `coeff[*s^k] (w1 (x) w2 ...)` terms joined by " + ".
pub fn tensor_str(t: &crate::tensor::TensorExpr) -> String {
    if t.is_zero() {
        return "0".to_string();
    }
    let mut parts = Vec::new();
    for (legs, series) in t.terms() {
        let legs_str: Vec<String> = legs.iter().map(|w| leg_str(w)).collect();
        for (&(s_pow, c_pow), c) in series.terms() {
            assert_eq!(c_pow, 0);
            let s_str = match s_pow {
                0 => String::new(),
                1 => "*s".to_string(),
                k => format!("*s^{k}"),
            };
            parts.push(format!("{c}{s_str}*({})", legs_str.join(" (x) ")));
        }
    }
    parts.join(" + ")
}

fn leg_str(w: &[Generator]) -> String {
    if w.is_empty() {
        "1".to_string()
    } else {
        word_factor_str(w)
    }
}

// ---------------------------------------------------------------------------
// Bounds.
// ---------------------------------------------------------------------------

fn series_monomial_str(s: &Series) -> String {
    match s.as_monomial() {
        Some((0, 0, c)) => c.to_string(),
        Some((k, 0, c)) => {
            let s_str = if k == 1 {
                "s".to_string()
            } else {
                format!("s^{k}")
            };
            if c == Scalar::one() {
                s_str
            } else {
                format!("{c}*{s_str}")
            }
        }
        _ => format!("{:?}", s),
    }
}

pub fn bound_unit_str(u: &BoundUnit) -> String {
    match u {
        BoundUnit::One => "1".to_string(),
        BoundUnit::Gen(g) => format!("|<{g}>|"),
        BoundUnit::Trig { kind, arg } => format!("|<{}(s*{arg})>|", kind.name()),
        BoundUnit::Raw(e) => format!("|<{}>|/2-form", entry_display(e)),
    }
}

pub fn bounds_to_text(bounds: &[Bound]) -> String {
    let mut out = String::new();
    for b in bounds {
        let unit = match &b.unit {
            BoundUnit::One => String::new(),
            other => format!("*{}", bound_unit_str(other)),
        };
        let _ = writeln!(
            out,
            "D({})*D({}) >= {}{}",
            b.a,
            b.b,
            series_monomial_str(&b.magnitude),
            unit
        );
    }
    out
}

pub fn bounds_to_json(bounds: &[Bound]) -> String {
    let rows: Vec<String> = bounds
        .iter()
        .map(|b| {
            format!(
                "{{\"pair\": [\"{}\", \"{}\"], \"magnitude\": \"{}\", \"unit\": \"{}\"}}",
                b.a,
                b.b,
                json_escape(&series_monomial_str(&b.magnitude)),
                json_escape(&bound_unit_str(&b.unit))
            )
        })
        .collect();
    format!("[{}]\n", rows.join(",\n "))
}

pub fn bounds_to_latex(bounds: &[Bound], regime: Regime) -> String {
    let xi = xi_latex(regime);
    let mut out = String::new();
    for b in bounds {
        let rhs = match (&b.unit, b.magnitude.as_monomial()) {
            (BoundUnit::One, Some((0, 0, c))) => rational_latex(&c.axis_magnitude().unwrap()),
            (unit, Some((k, 0, c))) => {
                let mag = c.axis_magnitude().unwrap();
                let denom_pow = BigRational::from(BigInt::from(1i64 << k));
                let reduced = mag.clone() * denom_pow.recip();
                let inner = match unit {
                    BoundUnit::Gen(g) => format!("|\\langle {}\\rangle|", gen_latex(*g)),
                    BoundUnit::Trig { kind, arg } => format!(
                        "|\\langle \\{}\\left(\\frac{{{}}}{{2{}}}\\right)\\rangle|",
                        kind.name(),
                        gen_latex(*arg),
                        xi
                    ),
                    BoundUnit::One => "1".to_string(),
                    BoundUnit::Raw(_) => "(\\text{series})".to_string(),
                };
                if k == 0 {
                    format!("\\frac{{{inner}}}{{{}}}", (mag.recip()).to_integer())
                } else {
                    let xi_pow = if k == 1 {
                        xi.to_string()
                    } else {
                        format!("{xi}^{k}")
                    };
                    format!(
                        "\\frac{{{inner}}}{{{} {xi_pow}}}",
                        reduced.recip().to_integer()
                    )
                }
            }
            _ => bound_unit_str(&b.unit),
        };
        let _ = writeln!(
            out,
            "\\Delta({})\\Delta({}) \\geq {} \\\\",
            gen_latex(b.a),
            gen_latex(b.b),
            rhs
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generator::Generator::*;

    #[test]
    fn poly_roundtrip() {
        let terms = vec![
            (vec![], Scalar::minus_i()),
            (vec![Px(3)], Scalar::imag_ratio(1, 6)),
            (vec![Px(3), Px(3)], Scalar::ratio(-1, 2)),
        ];
        let s = poly_str(&terms);
        assert_eq!(s, "-i + 1/6*i*p3 + -1/2*p3^2");
        let back = parse_poly(&s).unwrap();
        assert_eq!(back, terms);
    }

    #[test]
    fn poly_unit_coefficients() {
        let terms = vec![
            (vec![X(2)], Scalar::one()),
            (vec![Y(1)], Scalar::from_int(-1)),
        ];
        let s = poly_str(&terms);
        assert_eq!(s, "x2 + -y1");
        assert_eq!(parse_poly(&s).unwrap(), terms);
    }

    #[test]
    fn latex_linear_style() {
        // 2i·s·x2 -> (i/\xi) x_2, the printed style.
        let s = linear_latex(&Scalar::imag_ratio(2, 1), 1, X(2), Regime::Relativistic);
        assert_eq!(s, "(i/\\xi) x_2");
        let s2 = linear_latex(&Scalar::i(), 1, Px(2), Regime::Relativistic);
        assert_eq!(s2, "\\frac{i}{2 \\xi} p_2");
    }
}
