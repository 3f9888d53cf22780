//! The family `f + mu` through a generative pair `(h, F)`: rational splitting
//! of `F(t) + mu`, images of exceptional sets, and the factor-count
//! inequality checked on supplied factorization data.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::decompose::DecompositionResult;
use crate::error::{Error, Result};
use crate::poly::{compose_uni, MultiPoly};
use crate::unipoly::UniPoly;
use crate::Rational;

/// `f + mu = alpha * prod (h + lambda_i)^e_i * residual(h)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyFactorization {
    pub mu: Rational,
    pub alpha: Rational,
    /// `(lambda, multiplicity)`, descending in `lambda`.
    pub shifts: Vec<(Rational, u32)>,
    /// Monic factor of `F + mu` without rational roots; `1` if it splits.
    pub residual: UniPoly,
    pub verified: bool,
}

/// Rational roots with multiplicities, descending by value.
pub fn rational_roots(g: &UniPoly) -> Result<Vec<(Rational, u32)>> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut rest = g.monic();
    let mut roots = Vec::new();

    let zero = Rational::zero();
    let mut m0 = 0;
    while let Some(q) = rest.deflate(&zero) {
        rest = q;
        m0 += 1;
    }
    if m0 > 0 {
        roots.push((zero, m0));
    }

    if rest.degree().unwrap_or(0) > 0 {
        let ints = integer_coefficients(&rest);
        let a0 = ints.first().expect("nonzero").magnitude().clone();
        let an = ints.last().expect("nonzero").magnitude().clone();
        let nums = divisors(&a0);
        let dens = divisors(&an);
        let mut candidates = BTreeSet::new();
        for p in &nums {
            for q in &dens {
                let r = Rational::new(BigInt::from(p.clone()), BigInt::from(q.clone()));
                candidates.insert(-r.clone());
                candidates.insert(r);
            }
        }
        for r in candidates {
            let mut mult = 0;
            while let Some(q) = rest.deflate(&r) {
                rest = q;
                mult += 1;
            }
            if mult > 0 {
                roots.push((r, mult));
            }
            if rest.degree() == Some(0) {
                break;
            }
        }
    }
    roots.sort_by(|a, b| b.0.cmp(&a.0));
    Ok(roots)
}

/// Scales away denominators, returning integer coefficients.
fn integer_coefficients(p: &UniPoly) -> Vec<BigInt> {
    let lcm = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    p.coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect()
}

fn divisors(n: &BigUint) -> Vec<BigUint> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = BigUint::one();
    while &i * &i <= *n {
        if (n % &i).is_zero() {
            let other = n / &i;
            if other != i {
                large.push(other);
            }
            small.push(i.clone());
        }
        i += 1u32;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Splits `F(t) + mu` over the rationals and checks the resulting
/// factorization of `f + mu` by expansion.
pub fn factor_shift(result: &DecompositionResult, mu: &Rational) -> Result<FamilyFactorization> {
    let shifted = result.outer.add_constant(mu);
    let alpha = shifted
        .leading_coeff()
        .cloned()
        .ok_or(Error::ZeroPolynomial)?;
    let roots = rational_roots(&shifted)?;

    let mut residual = shifted.monic();
    for (r, e) in &roots {
        for _ in 0..*e {
            residual = residual
                .deflate(r)
                .ok_or_else(|| Error::Verification(format!("root {r} does not deflate")))?;
        }
    }
    let shifts: Vec<(Rational, u32)> = roots.into_iter().rev().map(|(r, e)| (-r, e)).collect();

    let h = &result.h;
    let nvars = h.nvars();
    let mut product = compose_uni(&residual, h).scale(&alpha);
    for (lambda, e) in &shifts {
        let factor = h + &MultiPoly::constant(nvars, lambda.clone());
        product = &product * &factor.pow(*e)?;
    }
    let target = &compose_uni(&result.outer, h) + &MultiPoly::constant(nvars, mu.clone());
    if product != target {
        return Err(Error::Verification(format!(
            "factorization of f + {mu} does not expand back"
        )));
    }
    let count: usize =
        shifts.iter().map(|(_, e)| *e as usize).sum::<usize>() + residual.degree().unwrap_or(0);
    if Some(count) != result.outer.degree() {
        return Err(Error::Verification(
            "shift multiplicities do not add up to deg F".into(),
        ));
    }
    Ok(FamilyFactorization {
        mu: mu.clone(),
        alpha,
        shifts,
        residual,
        verified: true,
    })
}

/// `E(f) = { -F(-lambda) : lambda in E(h) }`.
pub fn exceptional_image(
    outer: &UniPoly,
    exceptional_h: &BTreeSet<Rational>,
) -> BTreeSet<Rational> {
    exceptional_h.iter().map(|l| -outer.eval(&-l)).collect()
}

/// Factorization pattern of `h + lambda` (or `f + mu`) for one shift value:
/// `(degree, multiplicity)` per distinct irreducible factor. A `None` shift
/// marks a generic member of the family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftEntry {
    pub shift: Option<Rational>,
    pub factors: Vec<(u32, u32)>,
}

impl ShiftEntry {
    fn total_degree(&self) -> u64 {
        self.factors
            .iter()
            .map(|&(d, m)| u64::from(d) * u64::from(m))
            .sum()
    }

    fn distinct_degree_sum(&self) -> u64 {
        self.factors.iter().map(|&(d, _)| u64::from(d)).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DecompositionData {
    pub entries: Vec<ShiftEntry>,
    /// Generic factor degree, required for [`SteinMode::FForm`].
    pub d: Option<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SteinMode {
    /// `sum (n(lambda, h) - 1) < min sum deg h_i` for closed `h`.
    HForm,
    /// `sum (n(mu, f) - deg f / d) < min sum deg f_i`.
    FForm,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SteinReport {
    pub lhs: i64,
    pub rhs: i64,
    pub holds: bool,
}

pub fn stein_check(data: &DecompositionData, mode: SteinMode) -> Result<SteinReport> {
    let malformed = |msg: String| Err(Error::MalformedData(msg));
    if data.entries.is_empty() {
        return malformed("no entries".into());
    }
    for e in &data.entries {
        if e.factors.is_empty() {
            return malformed("entry without factors".into());
        }
        if e.factors.iter().any(|&(d, m)| d == 0 || m == 0) {
            return malformed("degrees and multiplicities must be positive".into());
        }
    }
    let total = data.entries[0].total_degree();
    if let Some(e) = data.entries.iter().find(|e| e.total_degree() != total) {
        return malformed(format!(
            "entries disagree on the total degree ({} vs {total})",
            e.total_degree()
        ));
    }
    let mut seen = BTreeSet::new();
    for s in data.entries.iter().filter_map(|e| e.shift.as_ref()) {
        if !seen.insert(s) {
            return malformed(format!("shift {s} listed twice"));
        }
    }

    let baseline = match mode {
        SteinMode::HForm => 1,
        SteinMode::FForm => {
            let Some(d) = data.d.filter(|&d| d > 0) else {
                return malformed("f-form requires a positive generic degree d".into());
            };
            if data
                .entries
                .iter()
                .any(|e| e.factors.iter().any(|&(deg, _)| deg > d))
            {
                return malformed(format!("factor degree exceeds d = {d}"));
            }
            if !total.is_multiple_of(u64::from(d)) {
                return malformed(format!("d = {d} does not divide the total degree {total}"));
            }
            (total / u64::from(d)) as i64
        }
    };

    let lhs = data
        .entries
        .iter()
        .filter(|e| e.shift.is_some())
        .map(|e| e.factors.len() as i64 - baseline)
        .sum();
    let rhs = data
        .entries
        .iter()
        .map(ShiftEntry::distinct_degree_sum)
        .min()
        .expect("nonempty") as i64;
    Ok(SteinReport {
        lhs,
        rhs,
        holds: lhs < rhs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::generative;
    use crate::order::OrderSpec;
    use crate::testutil::{poly, q};

    fn section4() -> DecompositionResult {
        let f = poly(
            2,
            &[
                (1, &[2, 4]),
                (-2, &[2, 3]),
                (1, &[2, 2]),
                (2, &[1, 3]),
                (-2, &[1, 2]),
                (1, &[0, 2]),
                (1, &[0, 0]),
            ],
        );
        generative(&f, &OrderSpec::GradedLex, true).unwrap()
    }

    #[test]
    fn roots_examples() {
        assert_eq!(
            rational_roots(&UniPoly::from_ints(&[-1, 0, 1])).unwrap(),
            vec![(q(1, 1), 1), (q(-1, 1), 1)]
        );
        assert_eq!(
            rational_roots(&UniPoly::from_ints(&[0, 0, 1])).unwrap(),
            vec![(q(0, 1), 2)]
        );
        assert!(rational_roots(&UniPoly::from_ints(&[1, 0, 1]))
            .unwrap()
            .is_empty());
        assert_eq!(rational_roots(&UniPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn roots_with_fractions_and_multiplicity() {
        // 4 (t - 1/2)^2 (t + 3) t
        let p = UniPoly::from_ints(&[0, 1, -4, 4])
            .mul(&UniPoly::from_ints(&[3, 1]))
            .mul(&UniPoly::from_ints(&[1, 0, 1]));
        let roots = rational_roots(&p).unwrap();
        assert_eq!(roots, vec![(q(1, 2), 2), (q(0, 1), 1), (q(-3, 1), 1)]);
        let p = UniPoly::new(vec![q(-1, 3), q(1, 1)]);
        assert_eq!(rational_roots(&p).unwrap(), vec![(q(1, 3), 1)]);
    }

    #[test]
    fn section4_family() {
        let r = section4();
        let fam = factor_shift(&r, &q(-2, 1)).unwrap();
        assert_eq!(fam.alpha, q(1, 1));
        assert_eq!(fam.shifts, vec![(q(1, 1), 1), (q(-1, 1), 1)]);
        assert_eq!(fam.residual, UniPoly::from_ints(&[1]));
        assert!(fam.verified);

        let fam = factor_shift(&r, &q(-1, 1)).unwrap();
        assert_eq!(fam.shifts, vec![(q(0, 1), 2)]);

        let fam = factor_shift(&r, &q(5, 1)).unwrap();
        assert!(fam.shifts.is_empty());
        assert_eq!(fam.residual, UniPoly::from_ints(&[6, 0, 1]));
    }

    #[test]
    fn exceptional_image_examples() {
        let e: BTreeSet<_> = [q(0, 1), q(-1, 1)].into_iter().collect();
        let img = exceptional_image(&UniPoly::from_ints(&[1, 0, 1]), &e);
        assert_eq!(img, [q(-1, 1), q(-2, 1)].into_iter().collect());
        assert_eq!(exceptional_image(&UniPoly::identity(), &e), e);
        let one: BTreeSet<_> = [q(1, 1)].into_iter().collect();
        assert_eq!(
            exceptional_image(&UniPoly::from_ints(&[0, 0, 1]), &one),
            [q(-1, 1)].into_iter().collect()
        );
    }

    fn entry(shift: Option<i64>, factors: &[(u32, u32)]) -> ShiftEntry {
        ShiftEntry {
            shift: shift.map(|s| q(s, 1)),
            factors: factors.to_vec(),
        }
    }

    #[test]
    fn stein_on_worked_example() {
        let data = DecompositionData {
            entries: vec![
                entry(Some(-1), &[(1, 2), (2, 2)]),
                entry(Some(-2), &[(1, 1), (2, 1), (3, 1)]),
                entry(None, &[(3, 1), (3, 1)]),
            ],
            d: Some(3),
        };
        assert_eq!(
            stein_check(&data, SteinMode::FForm).unwrap(),
            SteinReport {
                lhs: 1,
                rhs: 3,
                holds: true
            }
        );
    }

    #[test]
    fn stein_trivial_and_violated() {
        let generic = DecompositionData {
            entries: vec![entry(None, &[(3, 1)])],
            d: Some(3),
        };
        assert_eq!(
            stein_check(&generic, SteinMode::FForm).unwrap(),
            SteinReport {
                lhs: 0,
                rhs: 3,
                holds: true
            }
        );
        assert_eq!(
            stein_check(&generic, SteinMode::HForm).unwrap(),
            SteinReport {
                lhs: 0,
                rhs: 3,
                holds: true
            }
        );

        let bad = DecompositionData {
            entries: vec![
                entry(Some(0), &[(1, 1), (1, 1)]),
                entry(Some(1), &[(1, 1), (1, 1)]),
            ],
            d: None,
        };
        assert_eq!(
            stein_check(&bad, SteinMode::HForm).unwrap(),
            SteinReport {
                lhs: 2,
                rhs: 2,
                holds: false
            }
        );
    }

    #[test]
    fn stein_malformed() {
        let no_d = DecompositionData {
            entries: vec![entry(None, &[(3, 1)])],
            d: None,
        };
        assert!(matches!(
            stein_check(&no_d, SteinMode::FForm),
            Err(Error::MalformedData(_))
        ));
        let too_big = DecompositionData {
            entries: vec![entry(Some(1), &[(4, 1)])],
            d: Some(2),
        };
        assert!(stein_check(&too_big, SteinMode::FForm).is_err());
        let mixed = DecompositionData {
            entries: vec![entry(Some(1), &[(2, 1)]), entry(Some(2), &[(1, 1)])],
            d: None,
        };
        assert!(stein_check(&mixed, SteinMode::HForm).is_err());
        assert!(stein_check(&DecompositionData::default(), SteinMode::HForm).is_err());
        let zero = DecompositionData {
            entries: vec![entry(Some(1), &[(0, 1)])],
            d: None,
        };
        assert!(stein_check(&zero, SteinMode::HForm).is_err());
    }
}
