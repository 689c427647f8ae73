//! Cyclic and non-cyclic patterns, their piecewise-linear realizations,
//! over-rotation pairs and codes.
//!
//! Patterns are stored with 0-based images internally; constructors and
//! [`CyclicPattern::one_based`] use the 1-based convention of the text format.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::graph::{graph_on_cuts, orbit_side_changes, periodic_orbits};
use crate::orders::OverRotationPair;
use crate::pl::PlMap;
use crate::rational::{gcd_u64, Rational};

fn to_zero_based(images: &[usize]) -> Result<Vec<usize>> {
    let n = images.len();
    if n == 0 {
        return Err(Error::InvalidPattern("empty pattern".into()));
    }
    images
        .iter()
        .map(|&i| {
            if i == 0 || i > n {
                Err(Error::InvalidPattern(format!("image {i} out of range 1..={n}")))
            } else {
                Ok(i - 1)
            }
        })
        .collect()
}

/// A self-map of `{1, ..., n}`, optionally placed on explicit anchor points.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NonCyclicPattern {
    images: Vec<usize>,
    anchors: Option<Vec<Rational>>,
}

impl NonCyclicPattern {
    pub fn new(one_based: &[usize]) -> Result<Self> {
        Ok(NonCyclicPattern { images: to_zero_based(one_based)?, anchors: None })
    }

    /// Pattern realized on the given increasing anchor points.
    pub fn with_anchors(one_based: &[usize], anchors: Vec<Rational>) -> Result<Self> {
        let images = to_zero_based(one_based)?;
        if anchors.len() != images.len() || anchors.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPattern("anchors must be strictly increasing, one per point".into()));
        }
        Ok(NonCyclicPattern { images, anchors: Some(anchors) })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.images.iter().map(|i| i + 1).collect()
    }

    pub fn anchors(&self) -> Vec<Rational> {
        match &self.anchors {
            Some(a) => a.clone(),
            None => default_anchors(self.len()),
        }
    }

    pub fn realize(&self) -> PLinearMap {
        PLinearMap::build(self.anchors(), self.images.clone())
    }
}

/// A cyclic permutation of `{1, ..., n}`: the order type of a periodic orbit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicPattern {
    images: Vec<usize>,
}

impl CyclicPattern {
    pub fn new(one_based: &[usize]) -> Result<Self> {
        let images = to_zero_based(one_based)?;
        Self::from_zero_based(images)
    }

    pub fn from_zero_based(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 || images.iter().any(|&i| i >= n) {
            return Err(Error::InvalidPattern("images out of range".into()));
        }
        let mut seen = vec![false; n];
        let mut x = 0;
        for _ in 0..n {
            if seen[x] {
                return Err(Error::InvalidPattern("not a single cycle".into()));
            }
            seen[x] = true;
            x = images[x];
        }
        if x != 0 || seen.iter().any(|s| !s) {
            return Err(Error::InvalidPattern("not a single cycle".into()));
        }
        Ok(CyclicPattern { images })
    }

    pub fn period(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.images.iter().map(|i| i + 1).collect()
    }

    pub fn as_non_cyclic(&self) -> NonCyclicPattern {
        NonCyclicPattern { images: self.images.clone(), anchors: None }
    }

    /// The mirror image under `x -> -x`.
    pub fn reversed(&self) -> CyclicPattern {
        let n = self.period();
        let images = (0..n).map(|i| n - 1 - self.images[n - 1 - i]).collect();
        CyclicPattern { images }
    }

    /// Pattern of a finite invariant set visited as a cycle by `map`.
    pub fn of_orbit(map: &PlMap, points: &[Rational]) -> Result<CyclicPattern> {
        let mut sorted = points.to_vec();
        sorted.sort();
        let images = sorted
            .iter()
            .map(|x| {
                let y = map.eval(x);
                sorted.binary_search(&y).map_err(|_| Error::InvalidPattern("set is not invariant".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        CyclicPattern::from_zero_based(images)
    }

    pub fn realize(&self) -> PLinearMap {
        PLinearMap::build(default_anchors(self.period()), self.images.clone())
    }
}

impl fmt::Display for CyclicPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.one_based();
        write!(f, "[")?;
        for (k, i) in v.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "]")
    }
}

/// Anchor points `0, 1/n, ..., (n-1)/n`.
pub fn default_anchors(n: usize) -> Vec<Rational> {
    (0..n).map(|i| Rational::new(i as i64, n as i64)).collect()
}

/// The piecewise-linear map interpolating a pattern on its anchor points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PLinearMap {
    map: PlMap,
    points: Vec<Rational>,
    images: Vec<usize>,
}

impl PLinearMap {
    fn build(points: Vec<Rational>, images: Vec<usize>) -> PLinearMap {
        let pts = points.iter().zip(&images).map(|(x, &j)| (x.clone(), points[j].clone())).collect();
        let map = PlMap::new(pts).expect("anchors are strictly increasing");
        PLinearMap { map, points, images }
    }

    pub fn map(&self) -> &PlMap {
        &self.map
    }

    pub fn points(&self) -> &[Rational] {
        &self.points
    }

    /// 0-based image of the `i`-th point.
    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn fixed_points(&self) -> Vec<Rational> {
        self.map.fixed_points()
    }

    /// The fixed point, when it is unique.
    pub fn a(&self) -> Option<Rational> {
        let f = self.fixed_points();
        if f.len() == 1 {
            f.into_iter().next()
        } else {
            None
        }
    }

    /// The rightmost preimage of `a` below `a` on an increasing piece.
    pub fn a_prime(&self) -> Option<Rational> {
        let a = self.a()?;
        let m = &self.map;
        m.preimages(&a)
            .into_iter()
            .filter(|x| x < &a)
            .filter(|x| {
                (0..m.pieces()).any(|i| &m.xs()[i] <= x && x <= &m.xs()[i + 1] && m.slope(i).is_positive())
            })
            .max()
    }

    pub fn turning_points(&self) -> Vec<Rational> {
        self.map.turning_points()
    }
}

/// Free-standing form of [`CyclicPattern::realize`] / [`NonCyclicPattern::realize`].
pub fn realize_p_linear(pattern: &NonCyclicPattern) -> PLinearMap {
    pattern.realize()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeReport {
    pub convergent: bool,
    pub max_unimodal: bool,
    /// The fixed point of the realization; present iff convergent.
    pub a: Option<Rational>,
}

/// `true` when the image sequence strictly rises and then strictly falls.
pub fn is_max_unimodal(images: &[usize]) -> bool {
    let n = images.len();
    let mut i = 0;
    while i + 1 < n && images[i] < images[i + 1] {
        i += 1;
    }
    while i + 1 < n && images[i] > images[i + 1] {
        i += 1;
    }
    i + 1 >= n
}

fn is_convergent(images: &[usize]) -> bool {
    // no x < y with f(x) < x and f(y) > y
    let mut seen_down = false;
    for (i, &j) in images.iter().enumerate() {
        if j > i && seen_down {
            return false;
        }
        if j < i {
            seen_down = true;
        }
    }
    true
}

pub fn classify_shape(pattern: &CyclicPattern) -> ShapeReport {
    let convergent = is_convergent(&pattern.images);
    let a = if convergent { pattern.realize().a() } else { None };
    ShapeReport { convergent, max_unimodal: is_max_unimodal(&pattern.images), a }
}

fn fixed_point_of_convergent(pattern: &CyclicPattern) -> Result<Rational> {
    if !is_convergent(&pattern.images) {
        return Err(Error::Horseshoe);
    }
    pattern.realize().a().ok_or_else(|| Error::InvalidPattern("realization has no unique fixed point".into()))
}

/// `l` counted by direction switches: `χ = 1/2` wherever `(f(x)-x)(f²(x)-f(x)) <= 0`.
fn chi_crossings(pattern: &CyclicPattern) -> u64 {
    let f = &pattern.images;
    let switches = (0..f.len())
        .filter(|&x| {
            let d1 = f[x] as i64 - x as i64;
            let d2 = f[f[x]] as i64 - f[x] as i64;
            d1 * d2 <= 0
        })
        .count() as u64;
    switches / 2
}

/// Over-rotation pair of a convergent cycle of period at least 2.
pub fn over_rotation_pair(pattern: &CyclicPattern) -> Result<OverRotationPair> {
    if pattern.period() == 1 {
        return Err(Error::FixedPointPattern);
    }
    let a = fixed_point_of_convergent(pattern)?;
    let l = chi_crossings(pattern);
    let pts = default_anchors(pattern.period());
    let orbit: Vec<Rational> = {
        let mut v = Vec::with_capacity(pts.len());
        let mut i = 0;
        for _ in 0..pts.len() {
            v.push(pts[i].clone());
            i = pattern.images[i];
        }
        v
    };
    let crossings = orbit_side_changes(&orbit, &a) as u64;
    assert_eq!(2 * l, crossings, "direction switches and crossings of a disagree for {pattern}");
    OverRotationPair::new(l, pattern.period() as u64)
}

/// Code values at the points of a cycle, left to right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Code {
    pub values: Vec<Rational>,
    pub well_defined: bool,
    pub monotone: bool,
}

/// `L(leftmost) = 0`, `L(f(y)) = L(y) + rho - phi(y)` with `phi = 1` right of `a`.
pub fn code_of(pattern: &CyclicPattern) -> Result<Code> {
    let n = pattern.period();
    let a = fixed_point_of_convergent(pattern)?;
    let pts = default_anchors(n);
    if n == 1 {
        return Ok(Code { values: vec![Rational::zero()], well_defined: true, monotone: true });
    }
    let l = chi_crossings(pattern) as i64;
    let rho = Rational::new(l, n as i64);
    let right: Vec<bool> = pts.iter().map(|x| x > &a).collect();
    let mut values = vec![Rational::zero(); n];
    let mut y = 0;
    for _ in 0..n - 1 {
        let next = pattern.images[y];
        let phi = if right[y] { Rational::one() } else { Rational::zero() };
        values[next] = &values[y] + &rho - phi;
        y = next;
    }
    let well_defined = right.iter().filter(|&&r| r).count() as i64 == l;
    let monotone = well_defined
        && (0..n).all(|x| {
            (0..n).all(|z| {
                // x farther from a than z on the same side
                let farther = (right[x] && right[z] && x > z) || (!right[x] && !right[z] && x < z);
                !farther || values[x] < values[z]
            })
        });
    Ok(Code { values, well_defined, monotone })
}

/// Convergent with a well-defined monotone code.
pub fn is_overtwist(pattern: &CyclicPattern) -> bool {
    if pattern.period() < 2 || !is_convergent(&pattern.images) {
        return false;
    }
    match code_of(pattern) {
        Ok(code) => code.well_defined && code.monotone,
        Err(_) => false,
    }
}

fn check_rotation(p: i64, q: i64) -> Result<()> {
    if p <= 0 || q <= 0 || 2 * p > q || gcd_u64(p as u64, q as u64) != 1 {
        return Err(Error::RotationDomain { p, q });
    }
    Ok(())
}

/// The unimodal over-twist pattern of rotation number `p/q`.
pub fn gamma(p: i64, q: i64) -> Result<CyclicPattern> {
    check_rotation(p, q)?;
    let (p, q) = (p as usize, q as usize);
    let images = (0..q)
        .map(|j| {
            if j + 2 * p < q {
                j + p
            } else if j + p < q {
                2 * q - 2 * p - 1 - j
            } else {
                q - 1 - j
            }
        })
        .collect();
    CyclicPattern::from_zero_based(images)
}

/// The non-cyclic pattern obtained from `gamma(p, q)` by sending the preimage
/// of the turning point to `a'`, and `a'` and `a` to `a`.
pub fn gamma_prime(p: i64, q: i64) -> Result<NonCyclicPattern> {
    check_rotation(p, q)?;
    if 2 * p == q {
        let anchors = default_anchors(4);
        return NonCyclicPattern::with_anchors(&[3, 4, 3, 1], anchors);
    }
    let g = gamma(p, q)?;
    let (pu, qu) = (p as usize, q as usize);
    let qq = 2 * q;
    let a_prime = Rational::new(2 * q - 4 * p - 1, qq);
    let a = Rational::new(2 * q - 2 * p - 1, qq);
    let c_index = qu - 2 * pu;
    let j = (0..qu).find(|&i| g.image(i) == c_index).unwrap();
    // (label, position) for every point, then sort by position
    #[derive(Clone, Copy, PartialEq)]
    enum Pt {
        Grid(usize),
        APrime,
        A,
    }
    let mut pts: Vec<(Rational, Pt)> = (0..qu).map(|i| (Rational::new(i as i64, q), Pt::Grid(i))).collect();
    pts.push((a_prime, Pt::APrime));
    pts.push((a, Pt::A));
    pts.sort_by(|x, y| x.0.cmp(&y.0));
    let index_of = |target: Pt| pts.iter().position(|(_, t)| *t == target).unwrap();
    let images: Vec<usize> = pts
        .iter()
        .map(|(_, t)| match *t {
            Pt::Grid(i) if i == j => index_of(Pt::APrime) + 1,
            Pt::Grid(i) => index_of(Pt::Grid(g.image(i))) + 1,
            Pt::APrime | Pt::A => index_of(Pt::A) + 1,
        })
        .collect();
    NonCyclicPattern::with_anchors(&images, pts.into_iter().map(|(x, _)| x).collect())
}

pub const CENSUS_MAX_PERIOD: usize = 12;

/// All max-unimodal cyclic patterns of period `n`, in lexicographic order.
pub fn enumerate_unimodal_patterns(n: usize) -> Result<Vec<CyclicPattern>> {
    if !(2..=CENSUS_MAX_PERIOD).contains(&n) {
        return Err(Error::CensusBound { n });
    }
    let mut out = Vec::new();
    // values before the peak form an increasing run drawn from 0..n-1
    for mask in 0u32..(1 << (n - 1)) {
        let mut seq: Vec<usize> = (0..n - 1).filter(|v| mask & (1 << v) != 0).collect();
        seq.push(n - 1);
        seq.extend((0..n - 1).rev().filter(|v| mask & (1 << v) == 0));
        if let Ok(p) = CyclicPattern::from_zero_based(seq) {
            out.push(p);
        }
    }
    out.sort();
    Ok(out)
}

/// Patterns of periodic orbits of the realization of `pattern`, up to
/// `max_period`, that share its over-rotation number. Always contains `pattern`.
pub fn exhibited_same_rho(pattern: &CyclicPattern, max_period: usize) -> Result<Vec<CyclicPattern>> {
    if max_period > CENSUS_MAX_PERIOD {
        return Err(Error::Precondition(format!("max_period {max_period} exceeds {CENSUS_MAX_PERIOD}")));
    }
    let rho = over_rotation_pair(pattern)?.rho();
    let real = pattern.realize();
    let a = real.a().ok_or(Error::Horseshoe)?;
    let mut markers = vec![a.clone()];
    markers.extend(real.a_prime());
    let graph = graph_on_cuts(real.map(), &markers, &a);
    let mut found: BTreeSet<CyclicPattern> = BTreeSet::new();
    found.insert(pattern.clone());
    for orbit in periodic_orbits(real.map(), &graph, max_period, Some(&rho)) {
        let Ok(pat) = CyclicPattern::of_orbit(real.map(), &orbit) else { continue };
        let mut cyc = Vec::with_capacity(orbit.len());
        let mut x = orbit[0].clone();
        for _ in 0..orbit.len() {
            cyc.push(x.clone());
            x = real.map().eval(&x);
        }
        let changes = orbit_side_changes(&cyc, &a) as i64;
        if Rational::new(changes, 2 * orbit.len() as i64) == rho {
            found.insert(pat);
        }
    }
    Ok(found.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn cp(v: &[usize]) -> CyclicPattern {
        CyclicPattern::new(v).unwrap()
    }

    #[test]
    fn validation() {
        assert!(CyclicPattern::new(&[2, 1, 3]).is_err());
        assert!(CyclicPattern::new(&[0, 1]).is_err());
        assert!(CyclicPattern::new(&[]).is_err());
        assert!(NonCyclicPattern::new(&[1, 1, 4]).is_err());
        assert!(NonCyclicPattern::new(&[1, 1, 3]).is_ok());
    }

    #[test]
    fn realizations() {
        let g = gamma(1, 3).unwrap().realize();
        assert_eq!(g.map().xs(), &[r(0, 1), r(1, 3), r(2, 3)]);
        assert_eq!(g.map().ys(), &[r(1, 3), r(2, 3), r(0, 1)]);
        assert_eq!(g.a(), Some(r(4, 9)));
        assert_eq!(g.a_prime(), Some(r(1, 9)));
        let flip = cp(&[2, 1]).realize();
        assert_eq!(flip.a(), Some(r(1, 4)));
        assert_eq!(flip.a_prime(), None);
        let one = cp(&[1]).realize();
        assert_eq!(one.fixed_points(), vec![r(0, 1)]);
    }

    #[test]
    fn shapes() {
        let s = classify_shape(&cp(&[3, 5, 4, 2, 1]));
        assert!(s.convergent && s.max_unimodal);
        assert_eq!(s.a, Some(r(7, 15)));
        let d = classify_shape(&cp(&[3, 1, 4, 2]));
        assert!(!d.convergent && d.a.is_none());
        let f = classify_shape(&cp(&[2, 1]));
        assert!(f.convergent && f.max_unimodal);
        assert!(classify_shape(&cp(&[1])).convergent);
    }

    #[test]
    fn pairs() {
        let pair = |v: &[usize]| over_rotation_pair(&cp(v)).unwrap();
        assert_eq!(pair(&[2, 3, 1]), OverRotationPair::new(1, 3).unwrap());
        assert_eq!(pair(&[2, 1]), OverRotationPair::new(1, 2).unwrap());
        assert_eq!(pair(&[3, 5, 4, 2, 1]), OverRotationPair::new(2, 5).unwrap());
        assert_eq!(pair(&[3, 4, 2, 1]), OverRotationPair::new(2, 4).unwrap());
        assert_eq!(over_rotation_pair(&cp(&[3, 1, 4, 2])), Err(Error::Horseshoe));
        assert_eq!(over_rotation_pair(&cp(&[1])), Err(Error::FixedPointPattern));
    }

    #[test]
    fn codes() {
        let c = code_of(&gamma(2, 5).unwrap()).unwrap();
        assert_eq!(c.values, vec![r(0, 1), r(1, 5), r(2, 5), r(4, 5), r(3, 5)]);
        assert!(c.well_defined && c.monotone);
        let c = code_of(&cp(&[2, 3, 1])).unwrap();
        assert_eq!(c.values, vec![r(0, 1), r(1, 3), r(2, 3)]);
        assert!(c.monotone);
        let c = code_of(&cp(&[3, 1, 2])).unwrap();
        assert!(!c.well_defined && !c.monotone);
    }

    #[test]
    fn overtwists() {
        assert!(is_overtwist(&cp(&[2, 1])));
        assert!(!is_overtwist(&cp(&[3, 4, 2, 1])));
        assert!(!is_overtwist(&cp(&[1])));
        for q in 2..=12 {
            for p in 1..=q / 2 {
                if gcd_u64(p as u64, q as u64) == 1 {
                    assert!(is_overtwist(&gamma(p, q).unwrap()), "{p}/{q}");
                }
            }
        }
    }

    #[test]
    fn gamma_values() {
        assert_eq!(gamma(2, 5).unwrap().one_based(), vec![3, 5, 4, 2, 1]);
        assert_eq!(gamma(1, 3).unwrap().one_based(), vec![2, 3, 1]);
        assert_eq!(gamma(1, 2).unwrap().one_based(), vec![2, 1]);
        assert!(gamma(2, 4).is_err());
        assert!(gamma(3, 5).is_err());
        assert!(gamma(0, 5).is_err());
    }

    #[test]
    fn gamma_prime_values() {
        let g = gamma_prime(1, 2).unwrap();
        assert_eq!(g.one_based(), vec![3, 4, 3, 1]);
        let g = gamma_prime(2, 5).unwrap();
        assert_eq!(g.one_based(), vec![4, 5, 7, 6, 5, 2, 1]);
        assert_eq!(g.anchors(), vec![r(0, 1), r(1, 10), r(1, 5), r(2, 5), r(1, 2), r(3, 5), r(4, 5)]);
        let g = gamma_prime(1, 3).unwrap();
        assert_eq!(g.one_based(), vec![2, 4, 5, 4, 1]);
        // realizations are unimodal with a single fixed point at a
        for (p, q) in [(1, 3), (2, 5), (1, 4), (3, 7), (2, 7)] {
            let m = gamma_prime(p, q).unwrap().realize();
            assert_eq!(m.turning_points().len(), 1, "{p}/{q}");
            assert_eq!(m.fixed_points(), vec![Rational::new(2 * q - 2 * p - 1, 2 * q)]);
        }
    }

    #[test]
    fn census_small() {
        let ones = |n| enumerate_unimodal_patterns(n).unwrap().iter().map(|p| p.one_based()).collect::<Vec<_>>();
        assert_eq!(ones(2), vec![vec![2, 1]]);
        assert_eq!(ones(3), vec![vec![2, 3, 1]]);
        assert_eq!(ones(4), vec![vec![2, 3, 4, 1], vec![3, 4, 2, 1]]);
        assert_eq!(enumerate_unimodal_patterns(13), Err(Error::CensusBound { n: 13 }));
        assert_eq!(enumerate_unimodal_patterns(1), Err(Error::CensusBound { n: 1 }));
    }

    #[test]
    fn reversal_keeps_pair() {
        for n in 2..=6 {
            for p in all_cyclic(n) {
                if let Ok(pair) = over_rotation_pair(&p) {
                    assert_eq!(over_rotation_pair(&p.reversed()).unwrap(), pair);
                }
            }
        }
    }

    fn all_cyclic(n: usize) -> Vec<CyclicPattern> {
        // cyclic permutations from orderings of 1..n after the fixed start 0
        let mut out = Vec::new();
        let mut rest: Vec<usize> = (1..n).collect();
        permute(&mut rest, 0, &mut |order| {
            let mut images = vec![0; n];
            let mut prev = 0;
            for &x in order {
                images[prev] = x;
                prev = x;
            }
            images[prev] = 0;
            out.push(CyclicPattern::from_zero_based(images).unwrap());
        });
        out
    }

    fn permute<F: FnMut(&[usize])>(v: &mut Vec<usize>, k: usize, f: &mut F) {
        if k == v.len() {
            f(v);
            return;
        }
        for i in k..v.len() {
            v.swap(k, i);
            permute(v, k + 1, f);
            v.swap(k, i);
        }
    }

    #[test]
    fn chi_and_crossings_agree_exhaustively() {
        // over_rotation_pair asserts the agreement internally
        for n in 2..=7 {
            for p in all_cyclic(n) {
                let _ = over_rotation_pair(&p);
            }
        }
    }

    #[test]
    fn same_rho_oracle() {
        let g13 = gamma(1, 3).unwrap();
        assert_eq!(exhibited_same_rho(&g13, 6).unwrap(), vec![g13.clone()]);
        let v = exhibited_same_rho(&cp(&[3, 4, 2, 1]), 4).unwrap();
        assert!(v.contains(&cp(&[2, 1])));
        let g12 = gamma(1, 2).unwrap();
        assert_eq!(exhibited_same_rho(&g12, 2).unwrap(), vec![g12]);
        assert_eq!(exhibited_same_rho(&cp(&[3, 1, 4, 2]), 4), Err(Error::Horseshoe));
    }
}
