//! Text and LaTeX rendering of elements, operators and reports.

use std::fmt::Write;

use num_traits::{One, Signed};

use crate::hopf::{AlgebraElement, BasisKey};
use crate::operator::OperatorPoly;
use crate::partition::{BicoloredSetPartition, Color, Part};
use crate::scalar::Rational;
use crate::verify::VerificationReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Style {
    Text,
    Latex,
}

/// Joins signed terms as `c1*k1 - c2*k2 + …`; unit coefficients are dropped.
fn join_terms<'a>(terms: impl Iterator<Item = (&'a Rational, String)>, style: Style) -> String {
    let mut out = String::new();
    for (i, (c, body)) in terms.enumerate() {
        let negative = c.is_negative();
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let abs = c.abs();
        if abs.is_one() {
            out.push_str(&body);
        } else if body == "1" {
            out.push_str(&coefficient(&abs, style));
        } else {
            out.push_str(&coefficient(&abs, style));
            if style == Style::Text {
                out.push('*');
            }
            out.push_str(&body);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn coefficient(c: &Rational, style: Style) -> String {
    match style {
        Style::Text => c.to_string(),
        Style::Latex if c.is_integer() => c.to_string(),
        Style::Latex => format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom()),
    }
}

fn parts_list(parts: &[Part]) -> String {
    parts.iter().map(|(s, c)| format!("({s},{c})")).collect::<Vec<_>>().join(",")
}

fn set_partition_latex(p: &BicoloredSetPartition) -> String {
    let blocks: Vec<String> = p
        .blocks()
        .iter()
        .map(|b| {
            let elems: Vec<String> = b.elems.iter().map(u32::to_string).collect();
            format!("(\\{{{}\\}},{})", elems.join(","), b.color)
        })
        .collect();
    format!("\\{{{}\\}}", blocks.join(","))
}

pub fn key_latex(k: &BasisKey) -> String {
    match k {
        BasisKey::Sym(p) => format!("p^{{\\{{{}\\}}}}", parts_list(p.parts())),
        BasisKey::Ncsf(c) => format!("\\Psi^{{[{}]}}", parts_list(c.parts())),
        BasisKey::Word(w) => format!("\\Phi^{{{}}}", set_partition_latex(w)),
    }
}

fn key_body(k: &BasisKey, style: Style) -> String {
    if k.is_unit() {
        return "1".into();
    }
    match style {
        Style::Text => k.to_string(),
        Style::Latex => key_latex(k),
    }
}

/// The element in its basis, e.g. `2*Psi[(2,1),(1,2)] - 1/3*Psi[(3,2)]`.
pub fn element_text(e: &AlgebraElement) -> String {
    join_terms(e.terms().iter().map(|(k, c)| (c, key_body(k, Style::Text))), Style::Text)
}

pub fn element_latex(e: &AlgebraElement) -> String {
    join_terms(e.terms().iter().map(|(k, c)| (c, key_body(k, Style::Latex))), Style::Latex)
}

/// Sym²/NCSF² keys as products of generators, e.g. `a2 a1 b1^2`. WSym² keys
/// are left in the Φ basis.
pub fn key_generators(k: &BasisKey, style: Style) -> String {
    let parts = match k {
        BasisKey::Sym(p) => p.parts(),
        BasisKey::Ncsf(c) => c.parts(),
        BasisKey::Word(_) => return key_body(k, style),
    };
    if parts.is_empty() {
        return "1".into();
    }
    let mut runs: Vec<(Part, usize)> = Vec::new();
    for &p in parts {
        match runs.last_mut() {
            Some((q, n)) if *q == p => *n += 1,
            _ => runs.push((p, 1)),
        }
    }
    let mut out = String::new();
    for (i, ((size, color), n)) in runs.into_iter().enumerate() {
        let letter = match color {
            Color::One => 'a',
            Color::Two => 'b',
        };
        match style {
            Style::Text => {
                if i > 0 {
                    out.push(' ');
                }
                write!(out, "{letter}{size}").unwrap();
                if n > 1 {
                    write!(out, "^{n}").unwrap();
                }
            }
            Style::Latex => {
                write!(out, "{letter}_{{{size}}}").unwrap();
                if n > 1 {
                    write!(out, "^{{{n}}}").unwrap();
                }
            }
        }
    }
    out
}

pub fn element_generators(e: &AlgebraElement, style: Style) -> String {
    join_terms(e.terms().iter().map(|(k, c)| (c, key_generators(k, style))), style)
}

pub fn poly_text(p: &OperatorPoly) -> String {
    join_terms(
        p.terms().iter().map(|(w, c)| (c, if w.is_empty() { "1".to_string() } else { w.to_string() })),
        Style::Text,
    )
}

pub fn poly_latex(p: &OperatorPoly) -> String {
    let body = |w: &crate::operator::OperatorWord| {
        if w.is_empty() {
            return "1".to_string();
        }
        w.to_string().replace('D', "\\partial ").replace('B', "b_{1} ").trim_end().to_string()
    };
    join_terms(p.terms().iter().map(|(w, c)| (c, body(w))), Style::Latex)
}

/// One summary line, then one line per mismatch (at most `limit`).
pub fn report_text(r: &VerificationReport, limit: usize) -> String {
    let caps: Vec<String> = r.caps.iter().map(u32::to_string).collect();
    let mut out = format!(
        "{} [{}]: {} ({} mismatches)\n",
        r.identity,
        caps.join(","),
        if r.pass { "PASS" } else { "FAIL" },
        r.mismatches.len()
    );
    for m in r.mismatches.iter().take(limit) {
        writeln!(out, "  at {:?}: expected {} got {}", m.exp, m.expected, m.actual).unwrap();
    }
    if r.mismatches.len() > limit {
        writeln!(out, "  ... {} more", r.mismatches.len() - limit).unwrap();
    }
    out
}
