//! Sparse multivariate polynomials with exact rational coefficients.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MAX_DEGREE};
use crate::order::OrderSpec;
use crate::unipoly::UniPoly;
use crate::Rational;

/// A polynomial in `x1, ..., xn` over the rationals.
///
/// No stored coefficient is ever zero, so the key set is exactly the support.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = MultiPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(nvars), c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        MultiPoly::constant(nvars, Rational::one())
    }

    /// The variable `x_index`, with `index` counted from 1.
    pub fn var(nvars: usize, index: usize) -> Result<Self> {
        Ok(MultiPoly::monomial(
            Monomial::var(nvars, index)?,
            Rational::one(),
        ))
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let nvars = m.nvars();
        let mut p = MultiPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, combining
    /// like terms and dropping zeros.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut p = MultiPoly::zero(nvars);
        for (exps, c) in terms {
            if exps.len() != nvars {
                return Err(Error::NvarsMismatch {
                    left: nvars,
                    right: exps.len(),
                });
            }
            p.add_term(Monomial::new(exps)?, c);
        }
        Ok(p)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Terms in ascending canonical (graded reverse lex) order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + '_ {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Monomial> + '_ {
        self.terms.keys()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for the zero polynomial and nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn coefficient_of(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient_of(&Monomial::one(self.nvars))
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn checked_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_nvars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_nvars(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(MultiPoly::zero(self.nvars));
        }
        let deg = self.total_degree().unwrap_or(0) + other.total_degree().unwrap_or(0);
        if deg > MAX_DEGREE {
            return Err(Error::DegreeOverflow { max: MAX_DEGREE });
        }
        let mut out = MultiPoly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul_unchecked(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Result<MultiPoly> {
        let mut acc = MultiPoly::one(self.nvars);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Formal partial derivative with respect to `x_index` (1-based).
    pub fn partial_derivative(&self, index: usize) -> Result<MultiPoly> {
        if index == 0 || index > self.nvars {
            return Err(Error::VariableIndex {
                index,
                nvars: self.nvars,
            });
        }
        let k = index - 1;
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exponent(k);
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[k] -= 1;
            out.add_term(Monomial::new(exps)?, c * Rational::from_integer(e.into()));
        }
        Ok(out)
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                got: point.len(),
            });
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Re-embeds the polynomial in a ring with at least as many variables.
    pub fn with_nvars(&self, nvars: usize) -> Result<MultiPoly> {
        if nvars < self.nvars
            && self
                .terms
                .keys()
                .any(|m| m.exponents()[nvars..].iter().any(|&e| e > 0))
        {
            return Err(Error::NvarsMismatch {
                left: self.nvars,
                right: nvars,
            });
        }
        Ok(MultiPoly {
            nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.extended(nvars), c.clone()))
                .collect(),
        })
    }

    fn check_nvars(&self, other: &MultiPoly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::NvarsMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }
}

/// `F(h)` by Horner's rule.
pub fn compose_uni(outer: &UniPoly, h: &MultiPoly) -> MultiPoly {
    let nvars = h.nvars();
    let mut acc = MultiPoly::zero(nvars);
    for c in outer.coeffs().iter().rev() {
        acc = &(&acc * h) + &MultiPoly::constant(nvars, c.clone());
    }
    acc
}

/// `original = leading_scalar * core + constant_term`, with `core` monic
/// under the active order and free of a constant term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedForm {
    pub core: MultiPoly,
    pub leading_scalar: Rational,
    pub constant_term: Rational,
}

impl NormalizedForm {
    pub fn denormalize(&self) -> MultiPoly {
        let nvars = self.core.nvars();
        &self.core.scale(&self.leading_scalar)
            + &MultiPoly::constant(nvars, self.constant_term.clone())
    }
}

pub fn normalize(f: &MultiPoly, order: &OrderSpec) -> Result<NormalizedForm> {
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let constant_term = f.constant_term();
    let mut shifted = f.clone();
    shifted.terms.remove(&Monomial::one(f.nvars()));
    let (_, lead) = order.leading_term(&shifted)?;
    let core = shifted.scale(&lead.recip());
    Ok(NormalizedForm {
        core,
        leading_scalar: lead,
        constant_term,
    })
}

fn expect_same_nvars(a: &MultiPoly, b: &MultiPoly) {
    assert_eq!(
        a.nvars, b.nvars,
        "variable count mismatch in polynomial arithmetic"
    );
}

impl Add for &MultiPoly {
    type Output = MultiPoly;

    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        expect_same_nvars(self, rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        expect_same_nvars(self, rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

/// Panics on a variable-count mismatch or degree overflow; use
/// [`MultiPoly::checked_mul`] for a fallible product.
impl Mul for &MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        expect_same_nvars(self, rhs);
        self.checked_mul(rhs)
            .expect("degree overflow in polynomial product")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}](", self.nvars)?;
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*{m}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{poly, q};

    #[test]
    fn difference_of_squares() {
        let a = poly(2, &[(1, &[1, 0]), (1, &[0, 1])]);
        let b = poly(2, &[(1, &[1, 0]), (-1, &[0, 1])]);
        assert_eq!(&a * &b, poly(2, &[(1, &[2, 0]), (-1, &[0, 2])]));
    }

    #[test]
    fn product_with_zero() {
        let a = poly(2, &[(3, &[1, 2]), (1, &[0, 0])]);
        assert!((&a * &MultiPoly::zero(2)).is_zero());
    }

    #[test]
    fn mismatched_nvars_is_an_error() {
        let a = MultiPoly::one(2);
        let b = MultiPoly::one(3);
        assert_eq!(
            a.checked_mul(&b),
            Err(Error::NvarsMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn section_four_square() {
        // h = x1*x2^2 - x1*x2 + x2; h^2 = f - 1
        let h = poly(2, &[(1, &[1, 2]), (-1, &[1, 1]), (1, &[0, 1])]);
        let f_minus_one = poly(
            2,
            &[
                (1, &[2, 4]),
                (-2, &[2, 3]),
                (1, &[2, 2]),
                (2, &[1, 3]),
                (-2, &[1, 2]),
                (1, &[0, 2]),
            ],
        );
        assert_eq!(&h * &h, f_minus_one);
    }

    #[test]
    fn compose_examples() {
        let h = poly(2, &[(1, &[2, 0]), (1, &[0, 1])]);
        let sq = UniPoly::from_ints(&[0, 0, 1]);
        assert_eq!(
            compose_uni(&sq, &h),
            poly(2, &[(1, &[4, 0]), (2, &[2, 1]), (1, &[0, 2])])
        );
        assert_eq!(compose_uni(&UniPoly::from_ints(&[0, 1]), &h), h);

        let h4 = poly(2, &[(1, &[1, 2]), (-1, &[1, 1]), (1, &[0, 1])]);
        let f = compose_uni(&UniPoly::from_ints(&[1, 0, 1]), &h4);
        assert_eq!(f.num_terms(), 7);
        assert_eq!(f.constant_term(), q(1, 1));
        assert_eq!(
            f.coefficient_of(&Monomial::new(vec![2, 4]).unwrap()),
            q(1, 1)
        );
    }

    #[test]
    fn derivatives() {
        let f = poly(2, &[(1, &[2, 1])]);
        assert_eq!(f.partial_derivative(1).unwrap(), poly(2, &[(2, &[1, 1])]));
        let g = poly(2, &[(1, &[4, 0]), (2, &[2, 1]), (1, &[0, 2])]);
        assert_eq!(
            g.partial_derivative(2).unwrap(),
            poly(2, &[(2, &[2, 0]), (2, &[0, 1])])
        );
        assert!(MultiPoly::constant(2, q(7, 1))
            .partial_derivative(1)
            .unwrap()
            .is_zero());
        assert_eq!(
            g.partial_derivative(3),
            Err(Error::VariableIndex { index: 3, nvars: 2 })
        );
        assert!(g.partial_derivative(0).is_err());
    }

    #[test]
    fn normalize_examples() {
        let order = OrderSpec::default();
        let f = poly(2, &[(2, &[2, 0]), (4, &[0, 1]), (6, &[0, 0])]);
        let n = normalize(&f, &order).unwrap();
        assert_eq!(n.core, poly(2, &[(1, &[2, 0]), (2, &[0, 1])]));
        assert_eq!(n.leading_scalar, q(2, 1));
        assert_eq!(n.constant_term, q(6, 1));

        let g = poly(2, &[(1, &[2, 0]), (1, &[0, 1])]);
        let n = normalize(&g, &order).unwrap();
        assert_eq!(n.core, g);
        assert_eq!(n.leading_scalar, q(1, 1));
        assert_eq!(n.constant_term, q(0, 1));

        assert_eq!(
            normalize(&MultiPoly::constant(2, q(3, 1)), &order),
            Err(Error::ConstantPolynomial)
        );
        assert_eq!(
            normalize(&MultiPoly::zero(2), &order),
            Err(Error::ConstantPolynomial)
        );
    }

    #[test]
    fn coefficient_lookup() {
        let f = poly(2, &[(1, &[4, 0]), (2, &[2, 1]), (1, &[0, 2])]);
        assert_eq!(
            f.coefficient_of(&Monomial::new(vec![2, 1]).unwrap()),
            q(2, 1)
        );
        assert_eq!(
            f.coefficient_of(&Monomial::new(vec![1, 1]).unwrap()),
            q(0, 1)
        );
        let g = MultiPoly::monomial(Monomial::var(1, 1).unwrap(), q(3, 2));
        assert_eq!(g.coefficient_of(&Monomial::var(1, 1).unwrap()), q(3, 2));
    }

    #[test]
    fn with_nvars_extends_and_guards() {
        let f = poly(2, &[(1, &[1, 1])]);
        let g = f.with_nvars(3).unwrap();
        assert_eq!(g.nvars(), 3);
        assert_eq!(g.with_nvars(2).unwrap(), f);
        assert!(f.with_nvars(1).is_err());
    }
}
