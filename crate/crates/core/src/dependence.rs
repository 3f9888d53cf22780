//! Jacobian test for algebraic dependence of two polynomials, and the
//! derivations `D_ij = (df/dx_i) d/dx_j - (df/dx_j) d/dx_i` built from `f`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::poly::MultiPoly;

/// The 2x2 minors of the Jacobian of `(f, g)`, keyed by `(i, j)` with
/// `1 <= i < j <= nvars`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorGrid {
    pub entries: BTreeMap<(usize, usize), MultiPoly>,
}

impl MinorGrid {
    pub fn all_zero(&self) -> bool {
        self.entries.values().all(MultiPoly::is_zero)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = (&(usize, usize), &MultiPoly)> + '_ {
        self.entries.iter().filter(|(_, p)| !p.is_zero())
    }
}

fn check_pair(f: &MultiPoly, g: &MultiPoly) -> Result<()> {
    if f.nvars() != g.nvars() {
        return Err(Error::NvarsMismatch {
            left: f.nvars(),
            right: g.nvars(),
        });
    }
    if f.is_constant() || g.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    Ok(())
}

fn gradient(f: &MultiPoly) -> Result<Vec<MultiPoly>> {
    (1..=f.nvars()).map(|i| f.partial_derivative(i)).collect()
}

pub fn jacobian_minors(f: &MultiPoly, g: &MultiPoly) -> Result<MinorGrid> {
    check_pair(f, g)?;
    let df = gradient(f)?;
    let dg = gradient(g)?;
    let n = f.nvars();
    let mut entries = BTreeMap::new();
    for i in 0..n {
        for j in i + 1..n {
            let minor = &(&df[i] * &dg[j]) - &(&df[j] * &dg[i]);
            entries.insert((i + 1, j + 1), minor);
        }
    }
    Ok(MinorGrid { entries })
}

/// Over the rationals, `f` and `g` are algebraically dependent iff every
/// Jacobian minor vanishes identically.
pub fn alg_dependent(f: &MultiPoly, g: &MultiPoly) -> Result<bool> {
    Ok(jacobian_minors(f, g)?.all_zero())
}

/// `D_ij(g)` for the derivation determined by `f`; indices are 1-based.
pub fn apply_derivation(f: &MultiPoly, i: usize, j: usize, g: &MultiPoly) -> Result<MultiPoly> {
    if f.nvars() != g.nvars() {
        return Err(Error::NvarsMismatch {
            left: f.nvars(),
            right: g.nvars(),
        });
    }
    let n = f.nvars();
    if i == 0 || i > n {
        return Err(Error::VariableIndex { index: i, nvars: n });
    }
    if j <= i || j > n {
        return Err(Error::VariableIndex { index: j, nvars: n });
    }
    let fi = f.partial_derivative(i)?;
    let fj = f.partial_derivative(j)?;
    let gi = g.partial_derivative(i)?;
    let gj = g.partial_derivative(j)?;
    Ok(&(&fi * &gj) - &(&fj * &gi))
}

/// True iff `g` lies in the kernel of every `D_ij` built from `f`.
pub fn in_all_kernels(f: &MultiPoly, g: &MultiPoly) -> Result<bool> {
    let n = f.nvars();
    for i in 1..=n {
        for j in i + 1..=n {
            if !apply_derivation(f, i, j, g)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
