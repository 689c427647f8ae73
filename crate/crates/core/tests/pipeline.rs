use rotint_core::families::{class_check, compare_lemma32, includes, repellence_check, Class, Region};
use rotint_core::graph::{min_mean_cycle, transition_graph};
use rotint_core::kneading::nu_rho;
use rotint_core::pattern::{gamma, gamma_prime, over_rotation_pair};
use rotint_core::unimodal::rho_exact_markov;
use rotint_core::{PlMap, Rational, UnimodalMap, WeightKind};

fn r(p: i64, q: i64) -> Rational {
    Rational::new(p, q)
}

fn coprime(max_q: i64) -> impl Iterator<Item = (i64, i64)> {
    (2..=max_q).flat_map(|q| (1..=q / 2).filter(move |&p| num_integer::gcd(p, q) == 1).map(move |p| (p, q)))
}

fn tent(h: Rational) -> UnimodalMap {
    UnimodalMap::piecewise_linear(PlMap::new(vec![(r(0, 1), r(0, 1)), (r(1, 2), h), (r(1, 1), r(0, 1))]).unwrap()).unwrap()
}

#[test]
fn gamma_maps_sit_at_their_rotation_number() {
    let tol = r(1, 1_000_000);
    for (p, q) in coprime(10) {
        let m = UnimodalMap::piecewise_linear(gamma(p, q).unwrap().realize().map().clone()).unwrap();
        let want = r(p, q);
        assert_eq!(m.rho_kneading(&tol, 400).unwrap().value(), Some(&want), "kneading {p}/{q}");
        if 2 * p < q {
            assert_eq!(m.rho_markov().unwrap().value(), Some(&want), "markov {p}/{q}");
            assert_eq!(m.rho_lift(&tol).unwrap().value(), Some(&want), "lift {p}/{q}");
        } else {
            // the core is a single decreasing branch
            assert!(m.rho_markov().is_err());
            assert_eq!(m.over_rotation_interval(&tol).unwrap().left().unwrap().value(), Some(&want));
        }
        assert_eq!(m.kneading(3 * q as usize).symbols(3 * q as usize), nu_rho(p, q).unwrap().symbols(3 * q as usize));
    }
}

#[test]
fn gamma_prime_maps_keep_the_endpoint() {
    let tol = r(1, 1_000_000);
    for (p, q) in coprime(9) {
        let map = gamma_prime(p, q).unwrap().realize().map().clone();
        let m = UnimodalMap::piecewise_linear(map.clone()).unwrap();
        let want = r(p, q);
        assert_eq!(rho_exact_markov(&map).unwrap().value(), Some(&want), "{p}/{q}");
        assert_eq!(m.rho_kneading(&tol, 400).unwrap().value(), Some(&want), "{p}/{q}");
    }
}

#[test]
fn pattern_graph_minimum_matches_pair() {
    for (p, q) in coprime(9) {
        let g = gamma(p, q).unwrap();
        let pl = g.realize();
        let graph = transition_graph(pl.map(), &[pl.a().unwrap()]).unwrap();
        let rho = over_rotation_pair(&g).unwrap().rho();
        for kind in [WeightKind::Crossing, WeightKind::OutOfRight] {
            assert_eq!(min_mean_cycle(&graph, kind).unwrap().value(), Some(&rho));
        }
    }
}

#[test]
fn taller_tents_contain_shorter_ones() {
    let tol = r(1, 1000);
    let heights: Vec<Rational> = (12..=20).map(|k| r(k, 20)).collect();
    let ivs: Vec<_> = heights.iter().map(|h| tent(h.clone()).over_rotation_interval(&tol).unwrap()).collect();
    for w in ivs.windows(2) {
        assert!(includes(&w[1], &w[0], &(&tol + &tol)), "{:?} vs {:?}", w[1], w[0]);
    }
    assert!(ivs[0].is_trivial() || ivs[0].left().unwrap().lo() >= &r(0, 1));
    assert_eq!(ivs.last().unwrap().left().unwrap().value(), Some(&r(0, 1)));
}

#[test]
fn every_map_repels_itself() {
    let maps = [
        tent(r(9, 10)),
        UnimodalMap::piecewise_linear(gamma(2, 5).unwrap().realize().map().clone()).unwrap(),
        UnimodalMap::piecewise_linear(
            PlMap::new(vec![(r(0, 1), r(0, 1)), (r(1, 4), r(3, 5)), (r(1, 2), r(4, 5)), (r(3, 4), r(3, 5)), (r(1, 1), r(0, 1))])
                .unwrap(),
        )
        .unwrap(),
    ];
    for m in &maps {
        let v = repellence_check(m, m, &Region::Core, 200).unwrap();
        assert!(v.holds && v.exact, "{m:?}: {:?}", v.ledger);
    }
}

#[test]
fn exact_verdicts_do_not_depend_on_the_grid() {
    let f = tent(r(1, 1));
    let g = tent(r(4, 5));
    for grid in [10, 100, 1000] {
        let v = class_check(&f, Class::S, grid);
        assert!(v.holds && v.exact);
        let v = compare_lemma32(&f, &g, grid).unwrap();
        assert!(v.holds && v.exact, "{:?}", v.ledger);
        let v = compare_lemma32(&g, &f, grid).unwrap();
        assert!(!v.holds);
    }
}
