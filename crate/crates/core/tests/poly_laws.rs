mod common;

use closedpoly::{compose_uni, normalize, OrderSpec, UniPoly};
use common::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_laws((a, b, c) in arb_poly_triple(30, 4)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn product_rule((a, b, _) in arb_poly_triple(12, 5)) {
        for i in 1..=a.nvars() {
            let lhs = (&a * &b).partial_derivative(i).unwrap();
            let rhs = &(&a * &b.partial_derivative(i).unwrap()) + &(&b * &a.partial_derivative(i).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn normalize_round_trip((a, _, _) in arb_poly_triple(15, 5)) {
        prop_assume!(!a.is_constant());
        for order in [OrderSpec::GradedLex, OrderSpec::GradedRevLex] {
            let n = normalize(&a, &order).unwrap();
            prop_assert_eq!(n.denormalize(), a.clone());
            prop_assert!(n.core.constant_term() == q(0, 1));
            prop_assert_eq!(order.leading_term(&n.core).unwrap().1, q(1, 1));
        }
    }

    #[test]
    fn no_zero_coefficients_survive((a, b, _) in arb_poly_triple(10, 3)) {
        let d = &(&a + &b) - &b;
        prop_assert_eq!(&d, &a);
        prop_assert!(d.terms().all(|(_, c)| *c != q(0, 1)));
    }
}

#[test]
fn composition_is_an_evaluation_homomorphism() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    for _ in 0..100 {
        let nvars = rand::Rng::gen_range(&mut rng, 1..=4);
        let h = random_poly(&mut rng, nvars, 6, 3);
        let deg = rand::Rng::gen_range(&mut rng, 0..=4);
        let outer = UniPoly::new((0..=deg).map(|_| random_rational(&mut rng)).collect());
        let point = random_point(&mut rng, nvars);
        let composed = compose_uni(&outer, &h);
        assert_eq!(
            composed.eval(&point).unwrap(),
            outer.eval(&h.eval(&point).unwrap())
        );
    }
}
