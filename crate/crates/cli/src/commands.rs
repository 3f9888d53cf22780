//! Command implementations: each takes already-read text and returns a JSON
//! document plus a human-readable summary.

use std::collections::BTreeSet;

use closedpoly::decompose::{closedness, generative};
use closedpoly::dependence::{alg_dependent, in_all_kernels, jacobian_minors};
use closedpoly::family::{exceptional_image, factor_shift, stein_check, SteinMode};
use closedpoly::monoid::{is_saturated, saturation_generators, MonoidGens};
use closedpoly::newton::{newton_summary, realizing_weights};
use closedpoly::{DecompositionResult, MultiPoly, OrderSpec, Outcome, Rational};
use num_traits::Signed;
use serde_json::{json, Value};

use crate::data::{parse_rational, parse_stein_data};
use crate::parse::{parse_poly, ParseError};
use crate::render::{render_poly, render_uni};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{name}: {error}")]
    Parse { name: String, error: ParseError },
    #[error("{0}")]
    Domain(String),
    #[error("internal verification failure: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } => 1,
            CliError::Domain(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

impl From<closedpoly::Error> for CliError {
    fn from(e: closedpoly::Error) -> Self {
        if e.is_internal() {
            CliError::Internal(e.to_string())
        } else {
            CliError::Domain(e.to_string())
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub json: Value,
    pub summary: String,
}

/// Polynomial text together with a name used in diagnostics.
#[derive(Clone, Copy, Debug)]
pub struct Input<'a> {
    pub name: &'a str,
    pub text: &'a str,
}

fn read_poly(input: Input) -> Result<MultiPoly, CliError> {
    parse_poly(input.text)
        .map(|p| p.poly)
        .map_err(|error| CliError::Parse {
            name: input.name.to_string(),
            error,
        })
}

fn rat(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn order_name(order: &OrderSpec) -> &'static str {
    match order {
        OrderSpec::GradedLex => "grlex",
        OrderSpec::GradedRevLex => "grevlex",
        OrderSpec::Weighted(_) => "weighted",
    }
}

fn trace_json(res: &DecompositionResult) -> Value {
    res.trace
        .iter()
        .map(|t| {
            let outcome = match t.outcome {
                Outcome::Verified => "verified",
                Outcome::Mismatch => "mismatch",
            };
            json!({ "divisor": t.divisor, "outcome": outcome })
        })
        .collect()
}

pub fn decompose(input: Input, order: &OrderSpec, pruned: bool) -> Result<Report, CliError> {
    let f = read_poly(input)?;
    let res = generative(&f, order, pruned)?;
    let h = render_poly(&res.h, order);
    let outer = render_uni(&res.outer);
    let trace: Vec<String> = res
        .trace
        .iter()
        .map(|t| {
            format!(
                "({}, {})",
                t.divisor,
                if t.outcome == Outcome::Verified {
                    "verified"
                } else {
                    "mismatch"
                }
            )
        })
        .collect();
    let summary = format!(
        "h = {h}\nF(t) = {outer}\nclosed: {}\ntrace: [{}]",
        res.closed,
        trace.join(", ")
    );
    let json = json!({
        "command": "decompose",
        "order": order_name(order),
        "pruned": pruned,
        "h": h,
        "F": outer,
        "closed": res.closed,
        "trace": trace_json(&res),
    });
    Ok(Report { json, summary })
}

pub fn is_closed(input: Input, order: &OrderSpec) -> Result<Report, CliError> {
    let f = read_poly(input)?;
    let (closed, fast_path) = closedness(&f, order)?;
    let summary = format!(
        "closed: {closed}{}",
        if fast_path {
            " (leading monomial has multiplicity 1)"
        } else {
            ""
        }
    );
    let json = json!({ "command": "is-closed", "closed": closed, "fast_path": fast_path });
    Ok(Report { json, summary })
}

pub fn newton(input: Input, order: &OrderSpec) -> Result<Report, CliError> {
    let f = read_poly(input)?;
    let s = newton_summary(&f, order)?;
    let mut weights = Vec::new();
    let mut lines = Vec::new();
    for v in s.v0.iter().rev() {
        let w = realizing_weights(&f, v)?;
        let ws: Vec<String> = w.weights().iter().map(ToString::to_string).collect();
        lines.push(format!("  {v}: weights ({})", ws.join(", ")));
        weights.push(json!({ "monomial": v.to_string(), "weights": ws }));
    }
    let names = |set: &BTreeSet<closedpoly::Monomial>| -> Vec<String> {
        set.iter().rev().map(ToString::to_string).collect()
    };
    let summary = format!(
        "support: {}\nleading multiplicity: {}\npruned multiplicity: {}\ndivisors: {:?}\npruned divisors: {:?}\npotential leading terms:\n{}",
        names(&s.support).join(", "),
        s.d_leading,
        s.d1,
        s.divisors_plain,
        s.divisors_pruned,
        lines.join("\n")
    );
    let json = json!({
        "command": "newton",
        "order": order_name(order),
        "support": names(&s.support),
        "v0": names(&s.v0),
        "d_leading": s.d_leading,
        "d1": s.d1,
        "divisors": s.divisors_plain,
        "divisors_pruned": s.divisors_pruned,
        "realizing_weights": weights,
    });
    Ok(Report { json, summary })
}

pub fn depend(f: Input, g: Input) -> Result<Report, CliError> {
    let pf = read_poly(f)?;
    let pg = read_poly(g)?;
    let n = pf.nvars().max(pg.nvars());
    let pf = pf.with_nvars(n)?;
    let pg = pg.with_nvars(n)?;
    let grid = jacobian_minors(&pf, &pg)?;
    let dependent = alg_dependent(&pf, &pg)?;
    let in_kernels = in_all_kernels(&pf, &pg)?;
    let nonzero: Vec<Value> = grid
        .nonzero()
        .map(|(&(i, j), m)| json!({ "i": i, "j": j, "minor": render_poly(m, &OrderSpec::GradedLex) }))
        .collect();
    let mut summary =
        format!("dependent: {dependent}\ng in every kernel of the derivations of f: {in_kernels}");
    for (&(i, j), m) in grid.nonzero() {
        summary.push_str(&format!(
            "\n  minor ({i},{j}) = {}",
            render_poly(m, &OrderSpec::GradedLex)
        ));
    }
    let json = json!({
        "command": "depend",
        "dependent": dependent,
        "in_all_kernels": in_kernels,
        "nonzero_minors": nonzero,
    });
    Ok(Report { json, summary })
}

pub fn family(
    input: Input,
    order: &OrderSpec,
    mu: &Rational,
    exceptional_h: Option<&[Rational]>,
) -> Result<Report, CliError> {
    let f = read_poly(input)?;
    let res = generative(&f, order, true)?;
    let fac = factor_shift(&res, mu)?;
    let h = render_poly(&res.h, order);
    let shifts: Vec<Value> = fac
        .shifts
        .iter()
        .map(|(l, e)| json!({ "lambda": rat(l), "multiplicity": e }))
        .collect();
    let mut factors: Vec<String> = fac
        .shifts
        .iter()
        .map(|(l, e)| {
            let shifted = &res.h + &MultiPoly::constant(res.h.nvars(), l.clone());
            let base = format!("({})", render_poly(&shifted, order));
            if *e == 1 {
                base
            } else {
                format!("{base}^{e}")
            }
        })
        .collect();
    if fac.residual.degree() != Some(0) {
        factors.push(format!("R(h) with R(t) = {}", render_uni(&fac.residual)));
    }
    let mut summary = format!(
        "h = {h}\nF(t) = {}\nf {} = {} * {}\nverified: {}",
        render_uni(&res.outer),
        if mu.is_negative() {
            format!("- {}", -mu)
        } else {
            format!("+ {mu}")
        },
        fac.alpha,
        factors.join(" * "),
        fac.verified
    );
    let mut json = json!({
        "command": "family",
        "h": h,
        "F": render_uni(&res.outer),
        "mu": rat(&fac.mu),
        "alpha": rat(&fac.alpha),
        "shifts": shifts,
        "residual": render_uni(&fac.residual),
        "verified": fac.verified,
    });
    if let Some(eh) = exceptional_h {
        let eh: BTreeSet<Rational> = eh.iter().cloned().collect();
        let image = exceptional_image(&res.outer, &eh);
        let values: Vec<String> = image.iter().rev().map(ToString::to_string).collect();
        summary.push_str(&format!("\nE(f) = {{{}}}", values.join(", ")));
        json["exceptional_image"] = values.into();
    }
    Ok(Report { json, summary })
}

pub fn stein(input: Input, mode: SteinMode, d: Option<u32>) -> Result<Report, CliError> {
    let data = parse_stein_data(input.text, d).map_err(|error| CliError::Parse {
        name: input.name.to_string(),
        error,
    })?;
    let r = stein_check(&data, mode)?;
    let mode_name = match mode {
        SteinMode::HForm => "h",
        SteinMode::FForm => "f",
    };
    let summary = format!("lhs = {}, rhs = {}, holds: {}", r.lhs, r.rhs, r.holds);
    let json = json!({ "command": "stein", "mode": mode_name, "lhs": r.lhs, "rhs": r.rhs, "holds": r.holds });
    Ok(Report { json, summary })
}

/// Parses `"a1,b1;a2,b2;..."` into integer vectors.
pub fn parse_gens(text: &str) -> Result<Vec<Vec<u32>>, String> {
    text.split(';')
        .filter(|g| !g.trim().is_empty())
        .map(|g| {
            g.split(',')
                .map(|x| {
                    x.trim()
                        .parse::<u32>()
                        .map_err(|_| format!("bad coordinate {:?} in {:?}", x.trim(), g.trim()))
                })
                .collect()
        })
        .collect()
}

pub fn saturate(gens: &[Vec<u32>], bound: Option<u32>) -> Result<Report, CliError> {
    let nvars = gens.first().map_or(0, Vec::len);
    let mg = MonoidGens::new(nvars, gens.to_vec(), bound)?;
    let basis = saturation_generators(&mg)?;
    let saturated = is_saturated(&mg)?;
    let fmt_vec = |v: &Vec<u32>| {
        format!(
            "({})",
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        )
    };
    let mut summary = format!(
        "saturation generators ({}): {}\nsaturated: {saturated}",
        basis.len(),
        basis.iter().map(fmt_vec).collect::<Vec<_>>().join(" ")
    );
    let mut json = json!({
        "command": "saturate",
        "bound": mg.bound(),
        "bound_exact": mg.bound_is_exact(),
        "generators": basis,
        "saturated": saturated,
    });
    if !mg.bound_is_exact() {
        let warning = format!(
            "with {nvars} variables the search stops at coordinate sum {}; generators beyond it are not found",
            mg.bound()
        );
        summary.push_str(&format!("\nwarning: {warning}"));
        json["warning"] = warning.into();
    }
    Ok(Report { json, summary })
}

/// Parses a comma-separated list of rationals.
pub fn parse_rational_list(text: &str) -> Result<Vec<Rational>, String> {
    text.split(',')
        .map(|s| parse_rational(s).ok_or_else(|| format!("bad rational {:?}", s.trim())))
        .collect()
}
