//! Saturation of affine monoids in `Z>=0^n`: the lattice points of the
//! rational cone spanned by a set of exponent vectors, and its minimal
//! generators up to a coordinate-sum bound.

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::lp::{find_feasible_point, Constraint, Relation};
use crate::order::{count_monomials_up_to, for_each_exponent_vector};
use crate::Rational;

/// Default cap on the number of lattice points enumerated.
pub const DEFAULT_LATTICE_CAP: usize = 200_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidGens {
    nvars: usize,
    gens: Vec<Vec<u32>>,
    bound: u32,
}

fn coord_sum(v: &[u32]) -> u64 {
    v.iter().map(|&x| u64::from(x)).sum()
}

impl MonoidGens {
    /// `bound` defaults to the largest coordinate sum among the generators.
    pub fn new(nvars: usize, gens: Vec<Vec<u32>>, bound: Option<u32>) -> Result<Self> {
        if nvars == 0 {
            return Err(Error::InvalidGenerators(
                "need at least one variable".into(),
            ));
        }
        if gens.is_empty() {
            return Err(Error::InvalidGenerators("no generators".into()));
        }
        for g in &gens {
            if g.len() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    got: g.len(),
                });
            }
            if g.iter().all(|&x| x == 0) {
                return Err(Error::InvalidGenerators("zero vector".into()));
            }
        }
        let max_sum = gens.iter().map(|g| coord_sum(g)).max().expect("nonempty");
        let max_sum = u32::try_from(max_sum)
            .map_err(|_| Error::InvalidGenerators("coordinate sum out of range".into()))?;
        let bound = bound.unwrap_or(max_sum);
        if bound < max_sum {
            return Err(Error::InvalidGenerators(format!(
                "bound {bound} is below the largest generator coordinate sum {max_sum}"
            )));
        }
        let gens: BTreeSet<Vec<u32>> = gens.into_iter().collect();
        Ok(MonoidGens {
            nvars,
            gens: gens.into_iter().collect(),
            bound,
        })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Vec<u32>] {
        &self.gens
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn with_bound(&self, bound: u32) -> Result<Self> {
        MonoidGens::new(self.nvars, self.gens.clone(), Some(bound))
    }

    /// Whether the bounded enumeration is guaranteed to find the whole
    /// Hilbert basis. True in dimension at most 2, where every Hilbert basis
    /// element lies in the triangle spanned by 0 and the two extreme rays.
    pub fn bound_is_exact(&self) -> bool {
        self.nvars <= 2
    }

    fn lattice_points(&self) -> Result<Vec<Vec<u32>>> {
        let estimated = count_monomials_up_to(self.bound.into(), self.nvars);
        if estimated > DEFAULT_LATTICE_CAP as u128 {
            return Err(Error::EnumerationCap {
                estimated,
                cap: DEFAULT_LATTICE_CAP,
            });
        }
        let mut out = Vec::new();
        for_each_exponent_vector(self.nvars, self.bound, &mut |v| {
            if v.iter().any(|&x| x > 0) {
                out.push(v.to_vec());
            }
        });
        Ok(out)
    }

    /// Elements of the monoid generated by `gens` with coordinate sum at most
    /// the bound.
    fn monoid_elements(&self) -> Result<HashSet<Vec<u32>>> {
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        let mut frontier = vec![vec![0u32; self.nvars]];
        seen.insert(frontier[0].clone());
        while let Some(v) = frontier.pop() {
            for g in &self.gens {
                let w: Vec<u32> = v.iter().zip(g).map(|(a, b)| a + b).collect();
                if coord_sum(&w) <= u64::from(self.bound) && seen.insert(w.clone()) {
                    if seen.len() > DEFAULT_LATTICE_CAP {
                        return Err(Error::EnumerationCap {
                            estimated: seen.len() as u128,
                            cap: DEFAULT_LATTICE_CAP,
                        });
                    }
                    frontier.push(w);
                }
            }
        }
        Ok(seen)
    }
}

/// True iff `v` is a nonnegative rational combination of the generators.
pub fn cone_member(v: &[u32], gens: &MonoidGens) -> Result<bool> {
    if v.len() != gens.nvars {
        return Err(Error::DimensionMismatch {
            expected: gens.nvars,
            got: v.len(),
        });
    }
    let cons: Vec<Constraint> = (0..gens.nvars)
        .map(|s| {
            let row = gens
                .gens
                .iter()
                .map(|g| Rational::from_integer(g[s].into()))
                .collect();
            Constraint::new(row, Relation::Eq, Rational::from_integer(v[s].into()))
        })
        .collect();
    Ok(find_feasible_point(gens.gens.len(), &cons).is_some())
}

/// Minimal generators of the saturated monoid among lattice points with
/// coordinate sum at most the bound, sorted by coordinate sum then
/// lexicographically.
pub fn saturation_generators(gens: &MonoidGens) -> Result<Vec<Vec<u32>>> {
    let mut in_cone = Vec::new();
    for p in gens.lattice_points()? {
        if cone_member(&p, gens)? {
            in_cone.push(p);
        }
    }
    let lookup: HashSet<&Vec<u32>> = in_cone.iter().collect();
    let mut basis: Vec<Vec<u32>> = in_cone
        .iter()
        .filter(|p| {
            !in_cone.iter().any(|a| {
                a != *p
                    && a.iter().zip(p.iter()).all(|(x, y)| x <= y)
                    && lookup.contains(&p.iter().zip(a).map(|(y, x)| y - x).collect::<Vec<u32>>())
            })
        })
        .cloned()
        .collect();
    basis.sort_by(|a, b| coord_sum(a).cmp(&coord_sum(b)).then_with(|| a.cmp(b)));
    Ok(basis)
}

/// True iff every saturation generator already lies in the monoid.
pub fn is_saturated(gens: &MonoidGens) -> Result<bool> {
    let elements = gens.monoid_elements()?;
    Ok(saturation_generators(gens)?
        .iter()
        .all(|p| elements.contains(p)))
}

/// Whether `v` is a nonnegative integer combination of `gens`, searching up to
/// `v`'s own coordinate sum.
pub fn monoid_member(v: &[u32], gens: &[Vec<u32>]) -> bool {
    fn rec(rest: &mut Vec<u32>, gens: &[Vec<u32>], from: usize) -> bool {
        if rest.iter().all(|&x| x == 0) {
            return true;
        }
        for (i, g) in gens.iter().enumerate().skip(from) {
            if g.iter().zip(rest.iter()).all(|(a, b)| a <= b) && g.iter().any(|&a| a > 0) {
                for (r, a) in rest.iter_mut().zip(g) {
                    *r -= a;
                }
                let ok = rec(rest, gens, i);
                for (r, a) in rest.iter_mut().zip(g) {
                    *r += a;
                }
                if ok {
                    return true;
                }
            }
        }
        false
    }
    let mut rest = v.to_vec();
    rec(&mut rest, gens, 0)
}
