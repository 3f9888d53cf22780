//! Generative polynomials: the closed `h` and univariate `F` with `f = F(h)`.
//!
//! For a normalized `f` (leading coefficient 1, no constant term) and each
//! candidate degree `k` of `F`, the candidate `h` is solved coefficient by
//! coefficient over the monomials below `m1 = lead(f)^(1/k)`, then `F` is
//! solved from the coefficients of the powers `m1^(k-l)`, and finally
//! `f = F(h)` is checked by full expansion. Candidates are tried in
//! descending order and the first verified one is the generative polynomial.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::newton::{divisor_sequence, multiplicity};
use crate::order::{monomials_below_capped, OrderSpec, DEFAULT_MONOMIAL_CAP};
use crate::poly::{compose_uni, normalize, MultiPoly};
use crate::unipoly::UniPoly;
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Outcome {
    Verified,
    Mismatch,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TraceEntry {
    pub divisor: u32,
    pub outcome: Outcome,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionResult {
    /// Generative polynomial: closed, `h(0) = 0`, leading coefficient 1.
    pub h: MultiPoly,
    /// Outer polynomial with `f = outer(h)` for the original input.
    pub outer: UniPoly,
    pub closed: bool,
    /// Divisors attempted, in the order they were tried.
    pub trace: Vec<TraceEntry>,
    pub order: OrderSpec,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecomposeOptions {
    /// Use the Newton-pruned divisor sequence.
    pub pruned: bool,
    pub monomial_cap: usize,
}

impl Default for DecomposeOptions {
    fn default() -> Self {
        DecomposeOptions {
            pruned: true,
            monomial_cap: DEFAULT_MONOMIAL_CAP,
        }
    }
}

/// Coefficient of `target` in `p^k`, memoized on `(k, target)`.
struct PowerCoefficients<'a> {
    terms: Vec<(&'a Monomial, &'a Rational)>,
    memo: HashMap<(u32, Monomial), Rational>,
}

impl<'a> PowerCoefficients<'a> {
    fn new(p: &'a MultiPoly) -> Self {
        PowerCoefficients {
            terms: p.terms().collect(),
            memo: HashMap::new(),
        }
    }

    fn get(&mut self, k: u32, target: &Monomial) -> Rational {
        if k == 0 {
            return if target.is_one() {
                Rational::one()
            } else {
                Rational::zero()
            };
        }
        if let Some(c) = self.memo.get(&(k, target.clone())) {
            return c.clone();
        }
        let mut acc = Rational::zero();
        for i in 0..self.terms.len() {
            let (m, c) = self.terms[i];
            if let Some(rest) = m.quotient_of(target) {
                let sub = self.get(k - 1, &rest);
                if !sub.is_zero() {
                    acc += c * sub;
                }
            }
        }
        self.memo.insert((k, target.clone()), acc.clone());
        acc
    }
}

fn check_normalized(f_norm: &MultiPoly, order: &OrderSpec) -> Result<Monomial> {
    if f_norm.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let (lead, c) = order.leading_term(f_norm)?;
    if !c.is_one() || !f_norm.constant_term().is_zero() {
        return Err(Error::NotNormalized);
    }
    Ok(lead)
}

/// Tries to write `f_norm = F(h)` with `deg F = k`. Returns `None` when the
/// candidate built from the coefficient recursion fails verification.
pub fn attempt_divisor(
    f_norm: &MultiPoly,
    k: u32,
    order: &OrderSpec,
) -> Result<Option<(MultiPoly, UniPoly)>> {
    attempt_divisor_capped(f_norm, k, order, DEFAULT_MONOMIAL_CAP)
}

pub fn attempt_divisor_capped(
    f_norm: &MultiPoly,
    k: u32,
    order: &OrderSpec,
    cap: usize,
) -> Result<Option<(MultiPoly, UniPoly)>> {
    if !order.is_graded() {
        return Err(Error::OrderNotGraded);
    }
    let lead = check_normalized(f_norm, order)?;
    let mult = multiplicity(&lead)?;
    let m1 = match lead.root(k) {
        Some(m1) if k > 1 => m1,
        _ => {
            return Err(Error::InvalidDivisor {
                k,
                multiplicity: mult,
            })
        }
    };
    let k_rat = Rational::from_integer(k.into());

    let h = solve_generator(f_norm, &m1, k, &k_rat, order, cap)?;
    let outer = solve_outer(f_norm, &h, &m1, k)?;

    Ok((compose_uni(&outer, &h) == *f_norm).then_some((h, outer)))
}

/// Candidate `h = m1 + sum a_j m_j`: the coefficient of `m1^(k-1) m_j` in
/// `h^k` is `k a_j` plus terms involving only earlier (larger) `m_i`.
fn solve_generator(
    f_norm: &MultiPoly,
    m1: &Monomial,
    k: u32,
    k_rat: &Rational,
    order: &OrderSpec,
    cap: usize,
) -> Result<MultiPoly> {
    let nvars = f_norm.nvars();
    let below = monomials_below_capped(m1, order, nvars, cap)?;
    let m1_pow = m1.pow(k - 1)?;
    let mut h = MultiPoly::monomial(m1.clone(), Rational::one());
    for mj in below {
        let target = m1_pow.mul_unchecked(&mj);
        let b = f_norm.coefficient_of(&target);
        let known = PowerCoefficients::new(&h).get(k, &target);
        let alpha = (b - known) / k_rat;
        h.add_term(mj, alpha);
    }
    Ok(h)
}

/// Monic `F` with `F(0) = 0`, matching the coefficients of `m1^(k-l)`.
fn solve_outer(f_norm: &MultiPoly, h: &MultiPoly, m1: &Monomial, k: u32) -> Result<UniPoly> {
    let mut powers = PowerCoefficients::new(h);
    let mut beta: Vec<Rational> = Vec::with_capacity(k as usize);
    for l in 1..k {
        let target = m1.pow(k - l)?;
        let mut acc = powers.get(k, &target);
        for (i, b) in beta.iter().enumerate() {
            acc += b * powers.get(k - 1 - i as u32, &target);
        }
        let unit = powers.get(k - l, &target);
        if !unit.is_one() {
            return Err(Error::Verification(format!(
                "coefficient of m1^{} in h^{} is {unit}, expected 1",
                k - l,
                k - l
            )));
        }
        beta.push(f_norm.coefficient_of(&target) - acc);
    }
    // coeffs[k - l] = beta_l, coeffs[k] = 1, coeffs[0] = 0
    let mut coeffs = vec![Rational::zero(); k as usize + 1];
    coeffs[k as usize] = Rational::one();
    for (i, b) in beta.into_iter().enumerate() {
        coeffs[k as usize - 1 - i] = b;
    }
    Ok(UniPoly::new(coeffs))
}

pub fn generative(f: &MultiPoly, order: &OrderSpec, pruned: bool) -> Result<DecompositionResult> {
    generative_with(
        f,
        order,
        &DecomposeOptions {
            pruned,
            ..DecomposeOptions::default()
        },
    )
}

pub fn generative_with(
    f: &MultiPoly,
    order: &OrderSpec,
    options: &DecomposeOptions,
) -> Result<DecompositionResult> {
    if !order.is_graded() {
        return Err(Error::OrderNotGraded);
    }
    let nf = normalize(f, order)?;
    let divisors = divisor_sequence(&nf.core, order, options.pruned)?;

    let mut trace = Vec::with_capacity(divisors.len());
    let mut found = None;
    for k in divisors {
        match attempt_divisor_capped(&nf.core, k, order, options.monomial_cap)? {
            Some(pair) => {
                trace.push(TraceEntry {
                    divisor: k,
                    outcome: Outcome::Verified,
                });
                found = Some(pair);
                break;
            }
            None => trace.push(TraceEntry {
                divisor: k,
                outcome: Outcome::Mismatch,
            }),
        }
    }

    let (h, outer_norm) = found.unwrap_or_else(|| (nf.core.clone(), UniPoly::identity()));
    let outer = outer_norm
        .scale(&nf.leading_scalar)
        .add_constant(&nf.constant_term);
    if compose_uni(&outer, &h) != *f {
        return Err(Error::Verification(
            "reconstruction F(h) differs from the input".into(),
        ));
    }
    Ok(DecompositionResult {
        closed: outer.degree() == Some(1),
        h,
        outer,
        trace,
        order: order.clone(),
    })
}

/// Whether `f` is closed (non-composite).
pub fn is_closed(f: &MultiPoly, order: &OrderSpec) -> Result<bool> {
    Ok(closedness(f, order)?.0)
}

/// `(closed, fast_path)`, where `fast_path` means the leading monomial of
/// `f` has multiplicity 1 and no divisor needed to be tried.
pub fn closedness(f: &MultiPoly, order: &OrderSpec) -> Result<(bool, bool)> {
    if !order.is_graded() {
        return Err(Error::OrderNotGraded);
    }
    let nf = normalize(f, order)?;
    let (lead, _) = order.leading_term(&nf.core)?;
    if multiplicity(&lead)? == 1 {
        return Ok((true, true));
    }
    Ok((generative(f, order, true)?.closed, false))
}
