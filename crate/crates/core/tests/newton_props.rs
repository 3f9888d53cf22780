mod common;

use std::collections::BTreeSet;

use closedpoly::newton::{
    d1, divisor_sequence, multiplicity, realizing_weights, v0_by_hull, v0_by_weights, v0_set,
    v0_vertex_dominance, WeightVector,
};
use closedpoly::{Monomial, MultiPoly, OrderSpec, Rational};
use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_support<R: Rng>(rng: &mut R) -> (usize, Vec<Monomial>) {
    let nvars = rng.gen_range(1..=4);
    let count = rng.gen_range(1..=12);
    let set: BTreeSet<Monomial> = (0..count)
        .map(|_| Monomial::new(random_exponents(rng, nvars, 6)).unwrap())
        .collect();
    (nvars, set.into_iter().collect())
}

fn support_poly<R: Rng>(rng: &mut R, nvars: usize, support: &[Monomial]) -> MultiPoly {
    MultiPoly::from_terms(
        nvars,
        support
            .iter()
            .map(|m| (m.exponents().to_vec(), random_rational(rng))),
    )
    .unwrap()
}

fn random_weights<R: Rng>(rng: &mut R, nvars: usize) -> Vec<Rational> {
    (0..nvars)
        .map(|_| q(rng.gen_range(1..=20), rng.gen_range(1..=5)))
        .collect()
}

#[test]
fn lp_and_hull_routes_agree_and_contain_every_weight_argmax() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    for _ in 0..200 {
        let (nvars, support) = random_support(&mut rng);
        let by_lp = v0_by_weights(&support);
        let by_hull = v0_by_hull(&support);
        assert_eq!(by_lp, by_hull, "support {support:?}");
        for _ in 0..500 {
            let w = WeightVector::new(random_weights(&mut rng, nvars)).unwrap();
            let values: Vec<Rational> = support.iter().map(|m| w.pairing(m)).collect();
            let best = values.iter().max().unwrap();
            let winners: Vec<usize> = (0..support.len()).filter(|&i| values[i] == *best).collect();
            if winners.len() == 1 {
                assert!(by_lp.contains(&support[winners[0]]));
            }
        }
    }
}

#[test]
fn vertex_dominance_alone_overcounts() {
    let support: Vec<Monomial> = [[3, 0], [0, 3], [1, 1]]
        .iter()
        .map(|e| Monomial::new(e.to_vec()).unwrap())
        .collect();
    let literal = v0_vertex_dominance(&support);
    let exact = v0_by_weights(&support);
    assert!(literal.contains(&support[2]));
    assert!(!exact.contains(&support[2]));
    assert_eq!(exact, v0_by_hull(&support));
}

#[test]
fn pruned_multiplicity_divides_every_leading_multiplicity() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
    let mut checked = 0;
    while checked < 100 {
        let (nvars, support) = random_support(&mut rng);
        let f = support_poly(&mut rng, nvars, &support);
        if f.is_constant() {
            continue;
        }
        checked += 1;
        let g = d1(&f).unwrap();
        let v0 = v0_set(&f).unwrap();
        let mut orders = vec![OrderSpec::GradedLex, OrderSpec::GradedRevLex];
        orders.extend((0..20).map(|_| OrderSpec::Weighted(random_weights(&mut rng, nvars))));
        for order in &orders {
            let (lead, _) = order.leading_term(&f).unwrap();
            assert!(v0.contains(&lead));
            assert_eq!(multiplicity(&lead).unwrap() % g, 0);
        }
        for order in &orders[..2] {
            let plain = divisor_sequence(&f, order, false).unwrap();
            let pruned = divisor_sequence(&f, order, true).unwrap();
            assert!(pruned.iter().all(|k| plain.contains(k)));
        }
    }
}

#[test]
fn realizing_weights_make_the_point_lead() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    for _ in 0..100 {
        let (nvars, support) = random_support(&mut rng);
        let f = support_poly(&mut rng, nvars, &support);
        let v0 = v0_set(&f).unwrap();
        for m in &support {
            match realizing_weights(&f, m) {
                Ok(w) => {
                    assert!(v0.contains(m));
                    assert_eq!(w.order().leading_term(&f).unwrap().0, *m);
                    let top = w.pairing(m);
                    assert!(support
                        .iter()
                        .filter(|u| *u != m)
                        .all(|u| w.pairing(u) < top));
                }
                Err(_) => assert!(!v0.contains(m)),
            }
        }
    }
}
