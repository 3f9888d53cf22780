use num_traits::{One, Zero};

use crate::Rational;

/// Dense univariate polynomial; `coeffs[i]` is the coefficient of `t^i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        UniPoly::new(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    /// The identity `t`.
    pub fn identity() -> Self {
        UniPoly::new(vec![Rational::zero(), Rational::one()])
    }

    /// `a*t + b`.
    pub fn linear(a: Rational, b: Rational) -> Self {
        UniPoly::new(vec![b, a])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * t + c)
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn add_constant(&self, c: &Rational) -> UniPoly {
        let mut coeffs = self.coeffs.clone();
        if coeffs.is_empty() {
            coeffs.push(Rational::zero());
        }
        coeffs[0] += c;
        UniPoly::new(coeffs)
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    /// Divides by `t - root`, returning the quotient if the division is exact.
    pub fn deflate(&self, root: &Rational) -> Option<UniPoly> {
        let n = self.coeffs.len();
        if n < 2 {
            return None;
        }
        let mut quotient = vec![Rational::zero(); n - 1];
        let mut carry = Rational::zero();
        for i in (1..n).rev() {
            carry = &self.coeffs[i] + carry * root;
            quotient[i - 1] = carry.clone();
        }
        let remainder = &self.coeffs[0] + carry * root;
        remainder.is_zero().then(|| UniPoly::new(quotient))
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading_coeff() {
            Some(lc) => self.scale(&lc.recip()),
            None => UniPoly::zero(),
        }
    }
}
