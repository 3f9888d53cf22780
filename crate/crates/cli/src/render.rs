//! Canonical text rendering, readable back by [`crate::parse`].

use closedpoly::{Monomial, MultiPoly, OrderSpec, Rational, UniPoly};
use num_traits::{One, Signed};

/// Appends `c * body` to `out`, where `body` is empty for a constant term.
fn push_term(out: &mut String, c: &Rational, body: &str) {
    let first = out.is_empty();
    let mag = c.abs();
    match (first, c.is_negative()) {
        (true, true) => out.push('-'),
        (true, false) => {}
        (false, true) => out.push_str(" - "),
        (false, false) => out.push_str(" + "),
    }
    if body.is_empty() {
        out.push_str(&mag.to_string());
    } else if mag.is_one() {
        out.push_str(body);
    } else {
        out.push_str(&format!("{mag}*{body}"));
    }
}

/// Terms in descending `order`, e.g. `x1^2 + 3/2*x2 - 1`; the zero polynomial
/// renders as `0`. An order with invalid weights falls back to graded-lex.
pub fn render_poly(f: &MultiPoly, order: &OrderSpec) -> String {
    let terms = order
        .sorted_terms(f)
        .or_else(|_| OrderSpec::GradedLex.sorted_terms(f))
        .expect("graded-lex accepts every polynomial");
    let mut out = String::new();
    for (m, c) in terms {
        let body = if m.is_one() {
            String::new()
        } else {
            m.to_string()
        };
        push_term(&mut out, c, &body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn render_monomial(m: &Monomial) -> String {
    m.to_string()
}

/// Univariate polynomial in `t`, highest degree first.
pub fn render_uni(p: &UniPoly) -> String {
    let mut out = String::new();
    for (i, c) in p.coeffs().iter().enumerate().rev() {
        if c == &Rational::from_integer(0.into()) {
            continue;
        }
        let body = match i {
            0 => String::new(),
            1 => "t".to_string(),
            _ => format!("t^{i}"),
        };
        push_term(&mut out, c, &body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
