use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Largest accepted total degree of a monomial.
pub const MAX_DEGREE: u64 = 1 << 31;

/// Exponent vector `x1^e1 * ... * xn^en`.
///
/// The derived `Ord` is the canonical storage order used by
/// [`MultiPoly`](crate::MultiPoly): total degree first, then reverse
/// colexicographic (graded reverse lex). Algorithms that depend on a
/// particular monomial order take an [`OrderSpec`](crate::OrderSpec) instead.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Result<Self> {
        let degree: u64 = exps.iter().map(|&e| u64::from(e)).sum();
        if degree > MAX_DEGREE {
            return Err(Error::DegreeOverflow { max: MAX_DEGREE });
        }
        Ok(Monomial { exps })
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
        }
    }

    /// The variable `x_index`, with `index` counted from 1.
    pub fn var(nvars: usize, index: usize) -> Result<Self> {
        if index == 0 || index > nvars {
            return Err(Error::VariableIndex { index, nvars });
        }
        let mut exps = vec![0; nvars];
        exps[index - 1] = 1;
        Ok(Monomial { exps })
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.exps[index]
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        if self.nvars() != other.nvars() {
            return Err(Error::NvarsMismatch {
                left: self.nvars(),
                right: other.nvars(),
            });
        }
        if self.degree() + other.degree() > MAX_DEGREE {
            return Err(Error::DegreeOverflow { max: MAX_DEGREE });
        }
        Ok(self.mul_unchecked(other))
    }

    /// Product of two monomials of equal length whose degree sum is known to
    /// be in range.
    pub(crate) fn mul_unchecked(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Result<Monomial> {
        if self.degree() * u64::from(k) > MAX_DEGREE {
            return Err(Error::DegreeOverflow { max: MAX_DEGREE });
        }
        Ok(Monomial {
            exps: self.exps.iter().map(|e| e * k).collect(),
        })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.len() == other.exps.len()
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            exps: other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(b, a)| b - a)
                .collect(),
        })
    }

    /// Divides every exponent by `k`; `None` unless all are multiples of `k`.
    pub fn root(&self, k: u32) -> Option<Monomial> {
        if k == 0 || self.exps.iter().any(|e| e % k != 0) {
            return None;
        }
        Some(Monomial {
            exps: self.exps.iter().map(|e| e / k).collect(),
        })
    }

    /// GCD of the exponents; `None` for the unit monomial.
    pub fn multiplicity(&self) -> Option<u32> {
        let g = self.exps.iter().fold(0u32, |g, &e| g.gcd(&e));
        (g > 0).then_some(g)
    }

    pub(crate) fn extended(&self, nvars: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps.resize(nvars, 0);
        Monomial { exps }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for (a, b) in self.exps.iter().zip(&other.exps).rev() {
                if a != b {
                    return b.cmp(a);
                }
            }
            self.exps.len().cmp(&other.exps.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
