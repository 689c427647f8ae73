use proptest::prelude::*;

use rotint_core::kneading::{compare_exact, nu_lower, nu_prime, nu_real, nu_rho, nu_upper, rho_from_kneading};
use rotint_core::pattern::{enumerate_unimodal_patterns, over_rotation_pair};
use rotint_core::{PlMap, Rational, UnimodalMap};
use std::cmp::Ordering;

fn coprime_fraction() -> impl Strategy<Value = (i64, i64)> {
    (2i64..=40).prop_flat_map(|q| (1..=q / 2, Just(q))).prop_filter("coprime", |(p, q)| num_integer::gcd(*p, *q) == 1)
}

fn pl_map() -> impl Strategy<Value = PlMap> {
    prop::collection::vec(0i64..=12, 3..7).prop_map(|ys| {
        let n = ys.len() as i64 - 1;
        PlMap::from_xy((0..=n).map(|i| Rational::new(i, n)).collect(), ys.into_iter().map(|y| Rational::new(y, 12)).collect())
            .unwrap()
    })
}

proptest! {
    #[test]
    fn rotation_sequences_are_ordered((p, q) in coprime_fraction()) {
        let seqs = [nu_lower(p, q).unwrap(), nu_rho(p, q).unwrap(), nu_prime(p, q).unwrap(), nu_upper(p, q).unwrap()];
        for w in seqs.windows(2) {
            prop_assert_ne!(compare_exact(&w[0], &w[1], 400), Some(Ordering::Greater));
        }
    }

    #[test]
    fn kneading_bracket_contains_the_rotation((p, q) in (3i64..=60).prop_flat_map(|q| (1..=q / 2, Just(q)))) {
        let x = Rational::new(p, q);
        let k = nu_real(&x, 300).unwrap();
        let res = rho_from_kneading(&k, &Rational::new(1, 10_000), 300).unwrap();
        prop_assert!(res.contains(&x), "{} not in {:?}", x, res);
    }

    #[test]
    fn composition_agrees_with_evaluation(f in pl_map(), g in pl_map(), k in 0i64..=60) {
        let x = Rational::new(k, 60);
        prop_assert_eq!(f.compose(&g).eval(&x), f.eval(&g.eval(&x)));
    }

    #[test]
    fn a_pattern_bounds_its_map(n in 3usize..=8, pick in any::<prop::sample::Index>()) {
        let all = enumerate_unimodal_patterns(n).unwrap();
        let pat = pick.get(&all);
        let Ok(orp) = over_rotation_pair(pat) else { return Ok(()) };
        let m = UnimodalMap::piecewise_linear(pat.realize().map().clone()).unwrap();
        if let Ok(res) = m.rho_markov() {
            prop_assert!(res.lo() <= &orp.rho());
        }
    }
}
