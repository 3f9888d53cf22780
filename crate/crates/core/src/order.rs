//! Monomial orders, leading terms, and enumeration of the monomials below a
//! given one.

use std::cmp::Ordering;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::MultiPoly;
use crate::Rational;

/// Default cap on the number of monomials [`monomials_below`] may enumerate.
pub const DEFAULT_MONOMIAL_CAP: usize = 200_000;

/// A monomial order on `x1 > x2 > ... > xn`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub enum OrderSpec {
    /// Total degree, ties broken lexicographically.
    #[default]
    GradedLex,
    /// Total degree, ties broken by reverse lexicographic order.
    GradedRevLex,
    /// Weight functional `<w, m>` with positive rational weights, ties broken
    /// by [`OrderSpec::GradedLex`]. Not degree-compatible in general.
    Weighted(Vec<Rational>),
}

impl OrderSpec {
    pub fn is_graded(&self) -> bool {
        !matches!(self, OrderSpec::Weighted(_))
    }

    fn check_weights(&self, nvars: usize) -> Result<()> {
        if let OrderSpec::Weighted(w) = self {
            if w.is_empty() {
                return Err(Error::InvalidWeights(
                    "weighted order without weights".into(),
                ));
            }
            if w.len() != nvars {
                return Err(Error::InvalidWeights(format!(
                    "{} weights for {} variables",
                    w.len(),
                    nvars
                )));
            }
            if w.iter().any(|x| !x.is_positive()) {
                return Err(Error::InvalidWeights("weights must be positive".into()));
            }
        }
        Ok(())
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != b.nvars() {
            return Err(Error::NvarsMismatch {
                left: a.nvars(),
                right: b.nvars(),
            });
        }
        self.check_weights(a.nvars())?;
        Ok(self.cmp_unchecked(a, b))
    }

    /// Comparison for monomials already known to be compatible with `self`.
    pub(crate) fn cmp_unchecked(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            OrderSpec::GradedLex => a.degree().cmp(&b.degree()).then_with(|| lex(a, b)),
            OrderSpec::GradedRevLex => a.degree().cmp(&b.degree()).then_with(|| revlex(a, b)),
            OrderSpec::Weighted(w) => weight(w, a)
                .cmp(&weight(w, b))
                .then_with(|| a.degree().cmp(&b.degree()))
                .then_with(|| lex(a, b)),
        }
    }

    /// The maximal monomial of the support and its coefficient.
    pub fn leading_term(&self, f: &MultiPoly) -> Result<(Monomial, Rational)> {
        self.check_weights(f.nvars())?;
        f.terms()
            .max_by(|(a, _), (b, _)| self.cmp_unchecked(a, b))
            .map(|(m, c)| (m.clone(), c.clone()))
            .ok_or(Error::ZeroPolynomial)
    }

    /// Terms of `f` sorted strictly descending under this order.
    pub fn sorted_terms<'a>(&self, f: &'a MultiPoly) -> Result<Vec<(&'a Monomial, &'a Rational)>> {
        self.check_weights(f.nvars())?;
        let mut terms: Vec<_> = f.terms().collect();
        terms.sort_by(|(a, _), (b, _)| self.cmp_unchecked(b, a));
        Ok(terms)
    }
}

fn lex(a: &Monomial, b: &Monomial) -> Ordering {
    a.exponents().cmp(b.exponents())
}

fn revlex(a: &Monomial, b: &Monomial) -> Ordering {
    for (x, y) in a.exponents().iter().zip(b.exponents()).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

fn weight(w: &[Rational], m: &Monomial) -> Rational {
    w.iter()
        .zip(m.exponents())
        .filter(|(_, &e)| e > 0)
        .fold(Rational::zero(), |acc, (x, &e)| {
            acc + x * Rational::from_integer(e.into())
        })
}

pub fn leading_monomial(f: &MultiPoly, order: &OrderSpec) -> Result<(Monomial, Rational)> {
    order.leading_term(f)
}

/// Number of monomials in `nvars` variables of total degree at most `degree`,
/// i.e. `C(degree + nvars, nvars)`.
pub fn count_monomials_up_to(degree: u64, nvars: usize) -> u128 {
    let mut acc: u128 = 1;
    for i in 1..=nvars as u128 {
        acc = acc.saturating_mul(u128::from(degree) + i) / i;
    }
    acc
}

/// All monomials `m` with `top > m > 1`, strictly descending.
pub fn monomials_below(top: &Monomial, order: &OrderSpec, nvars: usize) -> Result<Vec<Monomial>> {
    monomials_below_capped(top, order, nvars, DEFAULT_MONOMIAL_CAP)
}

pub fn monomials_below_capped(
    top: &Monomial,
    order: &OrderSpec,
    nvars: usize,
    cap: usize,
) -> Result<Vec<Monomial>> {
    if !order.is_graded() {
        return Err(Error::OrderNotGraded);
    }
    if top.nvars() != nvars {
        return Err(Error::NvarsMismatch {
            left: nvars,
            right: top.nvars(),
        });
    }
    let degree = top.degree();
    let estimated = count_monomials_up_to(degree, nvars);
    if estimated > cap as u128 {
        return Err(Error::EnumerationCap { estimated, cap });
    }
    let mut out = Vec::new();
    for_each_exponent_vector(nvars, degree as u32, &mut |exps| {
        let m = Monomial::new(exps.to_vec()).expect("degree bounded by top");
        if !m.is_one() && order.cmp_unchecked(&m, top) == Ordering::Less {
            out.push(m);
        }
    });
    out.sort_by(|a, b| order.cmp_unchecked(b, a));
    Ok(out)
}

/// Visits every exponent vector of length `nvars` with coordinate sum at most
/// `max_degree`.
pub(crate) fn for_each_exponent_vector(
    nvars: usize,
    max_degree: u32,
    visit: &mut dyn FnMut(&[u32]),
) {
    fn rec(exps: &mut Vec<u32>, pos: usize, remaining: u32, visit: &mut dyn FnMut(&[u32])) {
        if pos == exps.len() {
            visit(exps);
            return;
        }
        for e in 0..=remaining {
            exps[pos] = e;
            rec(exps, pos + 1, remaining - e, visit);
        }
        exps[pos] = 0;
    }
    let mut exps = vec![0; nvars];
    rec(&mut exps, 0, max_degree, visit);
}
