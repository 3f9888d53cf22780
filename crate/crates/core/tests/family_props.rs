mod common;

use std::collections::BTreeSet;

use closedpoly::family::{exceptional_image, factor_shift};
use closedpoly::{compose_uni, generative, OrderSpec, Rational, UniPoly};
use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `prod (t + lambda_i) - shift`, so that `mu = shift` splits completely.
fn splitting_outer<R: Rng>(rng: &mut R, degree: usize) -> (UniPoly, Rational) {
    let mut p = UniPoly::new(vec![q(1, 1)]);
    for _ in 0..degree {
        let lambda = q(rng.gen_range(-4..=4), rng.gen_range(1..=2));
        p = p.mul(&UniPoly::new(vec![lambda, q(1, 1)]));
    }
    let shift = p.eval(&q(0, 1));
    (p.add_constant(&-shift.clone()), shift)
}

#[test]
fn product_identity_and_shift_count() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_000d);
    for _ in 0..100 {
        let nvars = rng.gen_range(2..=3);
        let deg_h = rng.gen_range(1..=3);
        let h = random_closed_h(&mut rng, nvars, deg_h, &OrderSpec::GradedLex);
        let deg_outer = rng.gen_range(1..=3);
        let (outer, split_mu) = splitting_outer(&mut rng, deg_outer);
        let f = compose_uni(&outer, &h);
        let res = generative(&f, &OrderSpec::GradedLex, true).unwrap();
        let deg_f = res.outer.degree().unwrap();
        let mus = [split_mu, random_rational(&mut rng), q(0, 1)];
        let mut seen: Vec<BTreeSet<Rational>> = Vec::new();
        for mu in &mus {
            let fac = factor_shift(&res, mu).unwrap();
            assert!(fac.verified);
            let count: usize = fac.shifts.iter().map(|(_, e)| *e as usize).sum();
            assert_eq!(count + fac.residual.degree().unwrap(), deg_f);
            let shifts: BTreeSet<Rational> = fac.shifts.iter().map(|(l, _)| l.clone()).collect();
            for l in &shifts {
                assert_eq!(res.outer.eval(&-l.clone()), -mu.clone());
            }
            seen.push(shifts);
        }
        assert_eq!(
            factor_shift(&res, &mus[0]).unwrap().residual.degree(),
            Some(0)
        );
        for a in 0..seen.len() {
            for b in a + 1..seen.len() {
                if mus[a] != mus[b] {
                    assert!(seen[a].is_disjoint(&seen[b]));
                }
            }
        }
        let eh: BTreeSet<Rational> = (0..3).map(|_| random_rational(&mut rng)).collect();
        assert!(exceptional_image(&res.outer, &eh).len() <= eh.len());
    }
}

#[test]
fn worked_example_image_bound() {
    let h = poly(2, &[(1, &[1, 2]), (-1, &[1, 1]), (1, &[0, 1])]);
    let outer = UniPoly::from_ints(&[1, 0, 1]);
    let f = compose_uni(&outer, &h);
    let res = generative(&f, &OrderSpec::GradedLex, true).unwrap();
    let eh: BTreeSet<Rational> = [q(0, 1), q(-1, 1)].into_iter().collect();
    let image = exceptional_image(&res.outer, &eh);
    let deg_f = f.total_degree().unwrap() as usize;
    let deg_h = h.total_degree().unwrap() as usize;
    assert!(eh.len() < deg_h);
    assert!(2 * image.len() < deg_f);
    assert_eq!(image, [q(-1, 1), q(-2, 1)].into_iter().collect());
}
