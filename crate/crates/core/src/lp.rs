//! Exact rational linear feasibility by phase-1 simplex.
//!
//! Every variable is implicitly constrained to be nonnegative. Pivoting uses
//! Bland's rule, so the method terminates on degenerate problems too.

use std::cmp::Ordering;

use num_traits::{One, Signed, Zero};

use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

/// `coeffs . x  (rel)  rhs`
#[derive(Clone, Debug)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub rel: Relation,
    pub rhs: Rational,
}

impl Constraint {
    pub fn new(coeffs: Vec<Rational>, rel: Relation, rhs: Rational) -> Self {
        Constraint { coeffs, rel, rhs }
    }

    pub fn is_satisfied_by(&self, x: &[Rational]) -> bool {
        let lhs: Rational = self.coeffs.iter().zip(x).map(|(a, b)| a * b).sum();
        match self.rel {
            Relation::Le => lhs <= self.rhs,
            Relation::Ge => lhs >= self.rhs,
            Relation::Eq => lhs == self.rhs,
        }
    }
}

/// Returns a point `x >= 0` satisfying every constraint, or `None` if the
/// system is infeasible.
///
/// # Panics
///
/// Panics if a constraint does not have exactly `nvars` coefficients.
pub fn find_feasible_point(nvars: usize, constraints: &[Constraint]) -> Option<Vec<Rational>> {
    for c in constraints {
        assert_eq!(
            c.coeffs.len(),
            nvars,
            "constraint width must equal the variable count"
        );
    }
    if constraints.is_empty() {
        return Some(vec![Rational::zero(); nvars]);
    }

    let rows = constraints.len();
    let slack_count = constraints.iter().filter(|c| c.rel != Relation::Eq).count();
    let artificial_start = nvars + slack_count;
    let cols = artificial_start + rows;

    // tableau rows carry the right-hand side in the last column
    let mut tableau: Vec<Vec<Rational>> = Vec::with_capacity(rows);
    let mut slack = nvars;
    for (i, c) in constraints.iter().enumerate() {
        let mut row = vec![Rational::zero(); cols + 1];
        row[..nvars].clone_from_slice(&c.coeffs);
        match c.rel {
            Relation::Le => {
                row[slack] = Rational::one();
                slack += 1;
            }
            Relation::Ge => {
                row[slack] = -Rational::one();
                slack += 1;
            }
            Relation::Eq => {}
        }
        row[cols] = c.rhs.clone();
        if row[cols].is_negative() {
            for v in row.iter_mut() {
                *v = -v.clone();
            }
        }
        row[artificial_start + i] = Rational::one();
        tableau.push(row);
    }
    let mut basis: Vec<usize> = (artificial_start..cols).collect();

    // reduced costs of the phase-1 objective (sum of artificials)
    let mut cost = vec![Rational::zero(); cols + 1];
    for row in &tableau {
        for j in 0..artificial_start {
            cost[j] -= &row[j];
        }
    }

    while let Some(enter) = (0..cols).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, Rational)> = None;
        for (i, row) in tableau.iter().enumerate() {
            if !row[enter].is_positive() {
                continue;
            }
            let ratio = &row[cols] / &row[enter];
            let better = match &leave {
                None => true,
                Some((r, best)) => match ratio.cmp(best) {
                    Ordering::Less => true,
                    Ordering::Equal => basis[i] < basis[*r],
                    Ordering::Greater => false,
                },
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        // the phase-1 objective is bounded below by zero, so a pivot row exists
        let (r, _) = leave.expect("phase-1 objective is bounded");
        pivot(&mut tableau, &mut cost, r, enter);
        basis[r] = enter;
    }

    let residual: Rational = basis
        .iter()
        .zip(&tableau)
        .filter(|(&b, _)| b >= artificial_start)
        .map(|(_, row)| row[cols].clone())
        .sum();
    if !residual.is_zero() {
        return None;
    }

    let mut x = vec![Rational::zero(); nvars];
    for (&b, row) in basis.iter().zip(&tableau) {
        if b < nvars {
            x[b] = row[cols].clone();
        }
    }
    debug_assert!(constraints.iter().all(|c| c.is_satisfied_by(&x)));
    Some(x)
}

fn pivot(tableau: &mut [Vec<Rational>], cost: &mut [Rational], r: usize, col: usize) {
    let p = tableau[r][col].clone();
    for v in tableau[r].iter_mut() {
        *v /= &p;
    }
    let pivot_row = tableau[r].clone();
    for (i, row) in tableau.iter_mut().enumerate() {
        if i == r || row[col].is_zero() {
            continue;
        }
        let factor = row[col].clone();
        for (v, pv) in row.iter_mut().zip(&pivot_row) {
            if !pv.is_zero() {
                *v -= &factor * pv;
            }
        }
    }
    if !cost[col].is_zero() {
        let factor = cost[col].clone();
        for (v, pv) in cost.iter_mut().zip(&pivot_row) {
            if !pv.is_zero() {
                *v -= &factor * pv;
            }
        }
    }
}
