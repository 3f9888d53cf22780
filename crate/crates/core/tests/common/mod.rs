#![allow(dead_code)]

use closedpoly::{is_closed, normalize, MultiPoly, OrderSpec, Rational, UniPoly};
use proptest::prelude::*;
use rand::Rng;

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn poly(nvars: usize, terms: &[(i64, &[u32])]) -> MultiPoly {
    MultiPoly::from_terms(nvars, terms.iter().map(|(c, e)| (e.to_vec(), q(*c, 1)))).unwrap()
}

/// Small nonzero rational with numerator in [-9, 9] and denominator in [1, 4].
pub fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let n = rng.gen_range(-9i64..=9);
        if n != 0 {
            return q(n, rng.gen_range(1i64..=4));
        }
    }
}

pub fn random_exponents<R: Rng>(rng: &mut R, nvars: usize, max_degree: u32) -> Vec<u32> {
    let degree = rng.gen_range(0..=max_degree);
    let mut exps = vec![0u32; nvars];
    for _ in 0..degree {
        exps[rng.gen_range(0..nvars)] += 1;
    }
    exps
}

pub fn random_poly<R: Rng>(
    rng: &mut R,
    nvars: usize,
    max_terms: usize,
    max_degree: u32,
) -> MultiPoly {
    let count = rng.gen_range(1..=max_terms);
    let terms = (0..count).map(|_| {
        (
            random_exponents(rng, nvars, max_degree),
            random_rational(rng),
        )
    });
    MultiPoly::from_terms(nvars, terms).unwrap()
}

/// A normalized closed polynomial of total degree exactly `degree`, found by
/// rejection sampling.
pub fn random_closed_h<R: Rng>(
    rng: &mut R,
    nvars: usize,
    degree: u32,
    order: &OrderSpec,
) -> MultiPoly {
    loop {
        let mut top = vec![0u32; nvars];
        for _ in 0..degree {
            top[rng.gen_range(0..nvars)] += 1;
        }
        let mut terms = vec![(top, random_rational(rng))];
        for _ in 0..rng.gen_range(0..=4) {
            terms.push((random_exponents(rng, nvars, degree), random_rational(rng)));
        }
        let p = MultiPoly::from_terms(nvars, terms).unwrap();
        if p.is_constant() || p.total_degree() != Some(u64::from(degree)) {
            continue;
        }
        let h = normalize(&p, order).unwrap().core;
        if is_closed(&h, order).unwrap() {
            return h;
        }
    }
}

/// Monic `F` of the given degree with `F(0) = 0`.
pub fn random_outer<R: Rng>(rng: &mut R, degree: usize) -> UniPoly {
    let mut coeffs = vec![q(0, 1)];
    for _ in 1..degree {
        coeffs.push(if rng.gen_bool(0.3) {
            q(0, 1)
        } else {
            random_rational(rng)
        });
    }
    coeffs.push(q(1, 1));
    UniPoly::new(coeffs)
}

pub fn random_point<R: Rng>(rng: &mut R, nvars: usize) -> Vec<Rational> {
    (0..nvars)
        .map(|_| q(rng.gen_range(-5i64..=5), rng.gen_range(1i64..=3)))
        .collect()
}

pub fn arb_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| q(n, d))
}

pub fn arb_poly(
    nvars: usize,
    max_terms: usize,
    max_degree: u32,
) -> impl Strategy<Value = MultiPoly> {
    let term = (
        proptest::collection::vec(0..=max_degree, nvars),
        arb_rational(),
    );
    proptest::collection::vec(term, 0..=max_terms).prop_map(move |terms| {
        let terms = terms.into_iter().map(|(mut e, c)| {
            // keep the total degree within max_degree
            while e.iter().sum::<u32>() > max_degree {
                let i = e.iter().position(|&x| x > 0).unwrap();
                e[i] -= 1;
            }
            (e, c)
        });
        MultiPoly::from_terms(nvars, terms).unwrap()
    })
}

/// Three polynomials sharing a variable count in 1..=4.
pub fn arb_poly_triple(
    max_terms: usize,
    max_degree: u32,
) -> impl Strategy<Value = (MultiPoly, MultiPoly, MultiPoly)> {
    (1usize..=4).prop_flat_map(move |n| {
        (
            arb_poly(n, max_terms, max_degree),
            arb_poly(n, max_terms, max_degree),
            arb_poly(n, max_terms, max_degree),
        )
    })
}
