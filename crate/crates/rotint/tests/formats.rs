use proptest::prelude::*;

use rotint::formats::{parse_pattern, parse_pl_map, write_pattern, write_pl_map};
use rotint_core::{PlMap, Rational};

proptest! {
    #[test]
    fn patterns_round_trip(perm in Just((1..=9usize).collect::<Vec<_>>()).prop_shuffle()) {
        prop_assert_eq!(parse_pattern(&write_pattern(&perm)).unwrap(), perm);
    }

    #[test]
    fn maps_round_trip(ys in prop::collection::vec((0i64..=50, 1i64..=50), 2..8)) {
        let n = ys.len() as i64 - 1;
        let xs = (0..=n).map(|i| Rational::new(i, n)).collect();
        let ys = ys.into_iter().map(|(a, b)| Rational::new(a.min(b), b)).collect();
        let m = PlMap::from_xy(xs, ys).unwrap();
        prop_assert_eq!(parse_pl_map(&write_pl_map(&m)).unwrap(), m);
    }
}
