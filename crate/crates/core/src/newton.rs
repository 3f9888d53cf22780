//! Newton-polytope analysis of a support: which terms can lead under some
//! monomial order, and the divisor sequences used to prune decomposition.
//!
//! A support point `v` is a *potential leading term* when some positive weight
//! vector `w` makes `<w, v>` strictly larger than `<w, u>` for every other
//! support point `u`. Two independent routes compute that set:
//!
//! * [`v0_by_weights`] solves the weight LP directly for each point;
//! * [`v0_by_hull`] keeps the vertices of the Newton polytope that are not
//!   coordinatewise dominated by any other point of the polytope.
//!
//! By LP duality the two agree; [`v0_set`] computes both and checks.

use std::collections::BTreeSet;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lp::{find_feasible_point, Constraint, Relation};
use crate::monomial::Monomial;
use crate::order::OrderSpec;
use crate::poly::MultiPoly;
use crate::Rational;

/// Positive rational weights, one per variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightVector(Vec<Rational>);

impl WeightVector {
    pub fn new(weights: Vec<Rational>) -> Result<Self> {
        if weights.is_empty() || weights.iter().any(|w| *w <= Rational::zero()) {
            return Err(Error::InvalidWeights(
                "weights must be nonempty and positive".into(),
            ));
        }
        Ok(WeightVector(weights))
    }

    pub fn weights(&self) -> &[Rational] {
        &self.0
    }

    pub fn pairing(&self, m: &Monomial) -> Rational {
        self.0
            .iter()
            .zip(m.exponents())
            .map(|(w, &e)| w * Rational::from_integer(e.into()))
            .sum()
    }

    /// The weighted monomial order induced by these weights.
    pub fn order(&self) -> OrderSpec {
        OrderSpec::Weighted(self.0.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonSummary {
    pub support: BTreeSet<Monomial>,
    pub v0: BTreeSet<Monomial>,
    /// Multiplicity of the leading monomial under the active order.
    pub d_leading: u32,
    /// GCD of the multiplicities over `v0`.
    pub d1: u32,
    pub divisors_plain: Vec<u32>,
    pub divisors_pruned: Vec<u32>,
}

pub fn multiplicity(m: &Monomial) -> Result<u32> {
    m.multiplicity().ok_or(Error::UnitMonomial)
}

/// Divisors of `n` greater than 1, descending.
pub fn divisors_desc(n: u32) -> Vec<u32> {
    let mut out: Vec<u32> = (2..=n).filter(|d| n.is_multiple_of(*d)).collect();
    out.reverse();
    out
}

fn rat(e: i64) -> Rational {
    Rational::from_integer(e.into())
}

fn diff(a: &Monomial, b: &Monomial, s: usize) -> Rational {
    rat(i64::from(a.exponent(s)) - i64::from(b.exponent(s)))
}

/// Weight LP: `w_i >= 1` and `<w, v - u> >= 1` for every other support point.
fn weight_lp(support: &[Monomial], v: &Monomial) -> Option<Vec<Rational>> {
    let n = v.nvars();
    let mut cons = Vec::with_capacity(n + support.len());
    for i in 0..n {
        let mut row = vec![Rational::zero(); n];
        row[i] = Rational::one();
        cons.push(Constraint::new(row, Relation::Ge, Rational::one()));
    }
    for u in support.iter().filter(|u| *u != v) {
        let row = (0..n).map(|s| diff(v, u, s)).collect();
        cons.push(Constraint::new(row, Relation::Ge, Rational::one()));
    }
    find_feasible_point(n, &cons)
}

/// True iff `p` is not a convex combination of the other support points.
pub fn is_hull_vertex(support: &[Monomial], p: &Monomial) -> bool {
    let others: Vec<&Monomial> = support.iter().filter(|u| *u != p).collect();
    if others.is_empty() {
        return true;
    }
    let mut cons = Vec::with_capacity(p.nvars() + 1);
    cons.push(Constraint::new(
        vec![Rational::one(); others.len()],
        Relation::Eq,
        Rational::one(),
    ));
    for s in 0..p.nvars() {
        let row = others.iter().map(|u| rat(u.exponent(s).into())).collect();
        cons.push(Constraint::new(
            row,
            Relation::Eq,
            rat(p.exponent(s).into()),
        ));
    }
    find_feasible_point(others.len(), &cons).is_none()
}

/// True iff some point of the Newton polytope other than `v` is
/// coordinatewise `>= v`; solved on the cone spanned by `u - v`.
fn dominated_in_hull(support: &[Monomial], v: &Monomial) -> bool {
    let others: Vec<&Monomial> = support.iter().filter(|u| *u != v).collect();
    if others.is_empty() {
        return false;
    }
    let n = v.nvars();
    let mut cons = Vec::with_capacity(n + 1);
    let mut total = vec![Rational::zero(); others.len()];
    for s in 0..n {
        let row: Vec<Rational> = others.iter().map(|u| diff(u, v, s)).collect();
        for (t, r) in total.iter_mut().zip(&row) {
            *t += r;
        }
        cons.push(Constraint::new(row, Relation::Ge, Rational::zero()));
    }
    cons.push(Constraint::new(total, Relation::Ge, Rational::one()));
    find_feasible_point(others.len(), &cons).is_some()
}

pub fn v0_by_weights(support: &[Monomial]) -> BTreeSet<Monomial> {
    support
        .iter()
        .filter(|v| weight_lp(support, v).is_some())
        .cloned()
        .collect()
}

pub fn v0_by_hull(support: &[Monomial]) -> BTreeSet<Monomial> {
    support
        .iter()
        .filter(|v| is_hull_vertex(support, v) && !dominated_in_hull(support, v))
        .cloned()
        .collect()
}

/// Hull vertices not dominated coordinatewise by another *vertex*.
///
/// This is a superset of the potential leading terms: for the support
/// `{(3,0), (0,3), (1,1)}` it keeps `(1,1)`, which is dominated by the
/// midpoint `(3/2, 3/2)` and never leads.
pub fn v0_vertex_dominance(support: &[Monomial]) -> BTreeSet<Monomial> {
    let vertices: Vec<&Monomial> = support
        .iter()
        .filter(|p| is_hull_vertex(support, p))
        .collect();
    vertices
        .iter()
        .filter(|v| !vertices.iter().any(|u| u != *v && v.divides(u)))
        .map(|v| (*v).clone())
        .collect()
}

/// Support points that lead under at least one monomial order.
pub fn v0_set(f: &MultiPoly) -> Result<BTreeSet<Monomial>> {
    let support: Vec<Monomial> = f.support().cloned().collect();
    let by_weights = v0_by_weights(&support);
    let by_hull = v0_by_hull(&support);
    if by_weights != by_hull {
        return Err(Error::Verification(format!(
            "potential leading terms disagree: weights {by_weights:?}, hull {by_hull:?}"
        )));
    }
    Ok(by_weights)
}

/// A weight vector under which `v` is the strict leader of `f`'s support.
pub fn realizing_weights(f: &MultiPoly, v: &Monomial) -> Result<WeightVector> {
    let support: Vec<Monomial> = f.support().cloned().collect();
    if !support.contains(v) {
        return Err(Error::NotInSupport);
    }
    let w = weight_lp(&support, v).ok_or(Error::NotPotentialLeading)?;
    WeightVector::new(w)
}

/// GCD of multiplicities over the potential leading terms.
pub fn d1(f: &MultiPoly) -> Result<u32> {
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let mut g = 0u32;
    for v in v0_set(f)? {
        g = g.gcd(&multiplicity(&v)?);
    }
    Ok(g)
}

/// `D(f)` (divisors of the leading multiplicity) or, with `pruned`, `D1(f)`
/// (divisors of [`d1`]). Both descending, entries `> 1`.
pub fn divisor_sequence(f: &MultiPoly, order: &OrderSpec, pruned: bool) -> Result<Vec<u32>> {
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let (lead, _) = order.leading_term(f)?;
    let d_leading = multiplicity(&lead)?;
    if d_leading == 1 {
        return Ok(Vec::new());
    }
    let d = if pruned { d1(f)? } else { d_leading };
    Ok(divisors_desc(d))
}

pub fn newton_summary(f: &MultiPoly, order: &OrderSpec) -> Result<NewtonSummary> {
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let (lead, _) = order.leading_term(f)?;
    let d_leading = multiplicity(&lead)?;
    let v0 = v0_set(f)?;
    let mut d1 = 0u32;
    for v in &v0 {
        d1 = d1.gcd(&multiplicity(v)?);
    }
    if d_leading % d1 != 0 {
        return Err(Error::Verification(format!(
            "d1 = {d1} does not divide {d_leading}"
        )));
    }
    Ok(NewtonSummary {
        support: f.support().cloned().collect(),
        v0,
        d_leading,
        d1,
        divisors_plain: divisors_desc(d_leading),
        divisors_pruned: divisors_desc(d1),
    })
}
