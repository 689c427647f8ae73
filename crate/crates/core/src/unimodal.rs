//! Unimodal maps: landmarks, the core, truncations, and the left endpoint of
//! the over-rotation interval `I_f = [rho_f, 1/2]`.
//!
//! Piecewise-linear maps with rational breakpoints are handled exactly.
//! Polynomials get exact answers where the dynamics is decided by root
//! counting (trivial dynamics, horseshoes, `rho_f = 1/2`) and a floating-point
//! lift otherwise; maps known only by evaluation always get brackets.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::graph::{self, Certificate, RhoResult, WeightKind, Witness};
use crate::kneading::{self, Itinerary};
use crate::lift::{self, ApproxLift, MonotoneLift};
use crate::orders::RotationInterval;
use crate::pl::PlMap;
use crate::poly::{Polynomial, Root};
use crate::rational::Rational;

/// Points allowed in a Markov partition before the critical data is declared infinite.
pub const DEFAULT_MARKOV_BUDGET: usize = 256;

/// Largest denominator tried by the floating-point lift.
pub const DEFAULT_MAX_DENOMINATOR: i64 = 20_000;

/// A map of `[0, 1]` known by evaluation, with its turning point.
#[derive(Clone)]
pub struct Evaluable {
    f: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
    c: f64,
    lipschitz: f64,
    label: String,
}

impl Evaluable {
    pub fn new<F>(label: &str, f: F, c: f64, lipschitz: f64) -> Self
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        Evaluable { f: Arc::new(f), c, lipschitz, label: label.into() }
    }

    pub fn eval(&self, x: f64) -> f64 {
        (self.f)(x)
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn lipschitz(&self) -> f64 {
        self.lipschitz
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Rounding allowance used when checking the map on grids.
    pub fn precision(&self) -> f64 {
        1e-12 * self.lipschitz.max(1.0)
    }
}

impl fmt::Debug for Evaluable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Evaluable").field("label", &self.label).field("c", &self.c).finish()
    }
}

/// A unimodal map: nondecreasing left of the turning set, nonincreasing right of it.
#[derive(Debug, Clone)]
pub enum UnimodalMap {
    /// Exact piecewise-linear map; the turning set may be a plateau.
    PiecewiseLinear { map: PlMap, c_lo: Rational, c_hi: Rational },
    /// Polynomial on `[0, 1]` with a single interior critical point.
    Polynomial { poly: Polynomial, c: Option<Rational>, c_f64: f64 },
    Evaluable(Evaluable),
}

/// The turning set `[c_lo, c_hi]` of a piecewise-linear map that is
/// nondecreasing and then nonincreasing.
pub fn pl_turning_set(map: &PlMap) -> Result<(Rational, Rational)> {
    let mut seen_down = false;
    for i in 0..map.pieces() {
        let s = map.slope(i);
        if s.is_negative() {
            seen_down = true;
        } else if s.is_positive() && seen_down {
            return Err(Error::NotUnimodal(alloc::format!("increases again after {}", map.xs()[i])));
        }
    }
    let top = map.ys().iter().max().unwrap().clone();
    let at_top: Vec<&Rational> = map.points().filter(|(_, y)| **y == top).map(|(x, _)| x).collect();
    Ok((at_top[0].clone(), at_top[at_top.len() - 1].clone()))
}

impl UnimodalMap {
    pub fn piecewise_linear(map: PlMap) -> Result<Self> {
        if map.pieces() == 0 {
            return Err(Error::InvalidMap("a map needs at least two breakpoints".into()));
        }
        if map.ys().iter().any(|y| !map.contains(y)) {
            return Err(Error::InvalidMap("map leaves its domain".into()));
        }
        let (c_lo, c_hi) = pl_turning_set(&map)?;
        Ok(UnimodalMap::PiecewiseLinear { map, c_lo, c_hi })
    }

    pub fn polynomial(poly: Polynomial) -> Result<Self> {
        let zero = Rational::zero();
        let one = Rational::one();
        let dp = poly.derivative();
        let crit = dp.roots_in(&zero, &one);
        let interior: Vec<&Root> = crit
            .iter()
            .filter(|r| !matches!(r, Root::Exact(x) if x.is_zero() || x == &one))
            .collect();
        if interior.len() != 1 {
            return Err(Error::NotUnimodal(alloc::format!("{} interior critical points", interior.len())));
        }
        let root = interior[0];
        let (c, c_f64) = match root {
            Root::Exact(x) => (Some(x.clone()), x.to_f64()),
            r => (None, dp.refine(r, &Rational::new(1, 1 << 52)).approx()),
        };
        // sign of the derivative on either side
        let (l, r) = match root {
            Root::Exact(x) => (x.clone(), x.clone()),
            Root::Between(l, r) => (l.clone(), r.clone()),
        };
        if !dp.eval(&l.midpoint(&zero)).is_positive() || !dp.eval(&r.midpoint(&one)).is_negative() {
            return Err(Error::NotUnimodal("critical point is not a maximum".into()));
        }
        let top = match &c {
            Some(x) => poly.eval(x).to_f64(),
            None => poly.eval_f64(c_f64),
        };
        if poly.eval(&zero).is_negative() || poly.eval(&one).is_negative() || top > 1.0 + 1e-15 {
            return Err(Error::InvalidMap("polynomial does not map [0, 1] into itself".into()));
        }
        Ok(UnimodalMap::Polynomial { poly, c, c_f64 })
    }

    pub fn evaluable(e: Evaluable) -> Result<Self> {
        let n = 2000;
        let eps = e.precision();
        let mut prev = e.eval(0.0);
        for i in 1..=n {
            let x = i as f64 / n as f64;
            let y = e.eval(x);
            if !(-eps..=1.0 + eps).contains(&y) {
                return Err(Error::InvalidMap(alloc::format!("value {y} at {x} outside [0, 1]")));
            }
            let rising = x <= e.c;
            let prev_x = (i - 1) as f64 / n as f64;
            if prev_x >= e.c && y > prev + eps || rising && y < prev - eps {
                return Err(Error::NotUnimodal(alloc::format!("{} is not monotone near {x}", e.label)));
            }
            prev = y;
        }
        Ok(UnimodalMap::Evaluable(e))
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, UnimodalMap::PiecewiseLinear { .. })
    }

    pub fn as_pl(&self) -> Option<&PlMap> {
        match self {
            UnimodalMap::PiecewiseLinear { map, .. } => Some(map),
            _ => None,
        }
    }

    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        match self {
            UnimodalMap::Polynomial { poly, .. } => Some(poly),
            _ => None,
        }
    }

    pub fn domain_f64(&self) -> (f64, f64) {
        match self {
            UnimodalMap::PiecewiseLinear { map, .. } => (map.lo().to_f64(), map.hi().to_f64()),
            _ => (0.0, 1.0),
        }
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        match self {
            UnimodalMap::PiecewiseLinear { map, .. } => match Rational::from_f64(x) {
                Some(r) => map.eval(&r).to_f64(),
                None => f64::NAN,
            },
            UnimodalMap::Polynomial { poly, .. } => poly.eval_f64(x),
            UnimodalMap::Evaluable(e) => e.eval(x),
        }
    }

    /// Turning point (left end of the turning set for plateaus).
    pub fn c_f64(&self) -> f64 {
        match self {
            UnimodalMap::PiecewiseLinear { c_lo, .. } => c_lo.to_f64(),
            UnimodalMap::Polynomial { c_f64, .. } => *c_f64,
            UnimodalMap::Evaluable(e) => e.c,
        }
    }

    fn closure(&self) -> Arc<dyn Fn(f64) -> f64 + Send + Sync> {
        match self {
            UnimodalMap::PiecewiseLinear { map, .. } => {
                let m = map.clone();
                Arc::new(move |x| match Rational::from_f64(x) {
                    Some(r) => m.eval(&r).to_f64(),
                    None => f64::NAN,
                })
            }
            UnimodalMap::Polynomial { poly, .. } => {
                let p = poly.clone();
                Arc::new(move |x| p.eval_f64(x))
            }
            UnimodalMap::Evaluable(e) => e.f.clone(),
        }
    }

    /// `y -> min(f(y), f(x))`.
    pub fn truncate(&self, x: &Rational) -> Result<UnimodalMap> {
        match self {
            UnimodalMap::PiecewiseLinear { map, .. } => {
                if !map.contains(x) {
                    return Err(Error::Precondition(alloc::format!("{x} outside the domain")));
                }
                UnimodalMap::piecewise_linear(map.cap(&map.eval(x)))
            }
            other => {
                let level = other.eval_f64(x.to_f64());
                let f = other.closure();
                let label = match other {
                    UnimodalMap::Evaluable(e) => alloc::format!("{} truncated at {x}", e.label),
                    _ => alloc::format!("polynomial truncated at {x}"),
                };
                let lip = match other {
                    UnimodalMap::Evaluable(e) => e.lipschitz,
                    _ => lipschitz_estimate(&*f),
                };
                Ok(UnimodalMap::Evaluable(Evaluable {
                    f: Arc::new(move |y| f(y).min(level)),
                    c: other.c_f64(),
                    lipschitz: lip,
                    label,
                }))
            }
        }
    }

    /// Itinerary of `x`; floating-point maps stop at iterates within `band` of `c`.
    pub fn itinerary_f64(&self, x: f64, length: usize, band: f64) -> Itinerary {
        let f = self.closure();
        kneading::itinerary_f64(|y| f(y), self.c_f64(), band, x, length)
    }

    /// Kneading sequence `nu(f)`, the itinerary of `f(c)`.
    pub fn kneading(&self, length: usize) -> Itinerary {
        self.kneading_with_band(length, 1e-12)
    }

    pub fn kneading_with_band(&self, length: usize, band: f64) -> Itinerary {
        match self {
            UnimodalMap::PiecewiseLinear { map, c_lo, c_hi } => {
                kneading::itinerary_pl(map, c_lo, c_hi, &map.eval(c_lo), length)
            }
            other => {
                let c = other.c_f64();
                other.itinerary_f64(other.eval_f64(c), length, band)
            }
        }
    }

    pub fn landmarks(&self, tolerance: f64) -> Result<LandmarkSet> {
        match self {
            UnimodalMap::PiecewiseLinear { map, c_lo, c_hi } => {
                let original = exact_landmarks(map, c_lo, c_hi)?;
                let normalized = normalize(map, c_lo, c_hi)?;
                Ok(LandmarkSet::Exact { original, normalized })
            }
            other => {
                let mut lm = approx_landmarks(&*other.closure(), other.c_f64(), tolerance)?;
                if let UnimodalMap::Polynomial { poly, c: Some(c), .. } = other {
                    lm.horseshoe = polynomial_horseshoe(poly, c).map(|(l, h)| l.midpoint(&h).to_f64());
                }
                Ok(LandmarkSet::Approx(lm))
            }
        }
    }

    /// `I_f`, with the left endpoint exact for piecewise-linear maps.
    pub fn over_rotation_interval(&self, tolerance: &Rational) -> Result<RotationInterval> {
        match self {
            UnimodalMap::PiecewiseLinear { map, c_lo, c_hi } => pl_interval(map, c_lo, c_hi, tolerance),
            UnimodalMap::Polynomial { poly, c: Some(c), .. } => match polynomial_shortcut(poly, c)? {
                Some(iv) => Ok(iv),
                None => self.approx_interval(tolerance),
            },
            _ => self.approx_interval(tolerance),
        }
    }

    fn approx_interval(&self, tolerance: &Rational) -> Result<RotationInterval> {
        let f = self.closure();
        let tol = tolerance.to_f64();
        let c = self.c_f64();
        let fc = f(c);
        if fc <= c {
            return Ok(RotationInterval::Trivial);
        }
        let lo = f(fc);
        let locked = |v: Rational| RotationInterval::Interval {
            left: RhoResult::Bracket { lo: v.clone(), hi: v, lower: Certificate::Range, upper: Certificate::Range, depth: 0 },
        };
        if lo >= c {
            // the core lies on the decreasing branch: only period two can occur
            let core = (lo, fc);
            let a = bisect(|x| f(x) - x, c, 1.0, 1e-15);
            let n = 4000;
            let g = |x: f64| f(f(x)) - x;
            let mut prev = g(core.0);
            for i in 1..=n {
                let x = core.0 + (core.1 - core.0) * i as f64 / n as f64;
                let v = g(x);
                if (x - a).abs() > 1e-6 && prev.signum() != v.signum() {
                    return Ok(locked(Rational::half()));
                }
                prev = v;
            }
            return Ok(RotationInterval::Trivial);
        }
        let lm = approx_landmarks(&*f, c, 1e-14).map_err(|e| e.at("landmarks"))?;
        if lm.horseshoe.is_some() {
            return Ok(locked(Rational::zero()));
        }
        if f(lo) >= lm.a {
            return Ok(locked(Rational::half()));
        }
        let lift = approx_lift(&f, c, &lm).map_err(|e| e.at("lift"))?;
        Ok(RotationInterval::Interval { left: lift::rotation_number_f64(&lift, tol, DEFAULT_MAX_DENOMINATOR) })
    }

    /// `rho_f` from the Markov partition of a piecewise-linear map.
    pub fn rho_markov(&self) -> Result<RhoResult> {
        let (map, c_lo, c_hi) = self.pl_parts()?;
        let norm = normalize(map, c_lo, c_hi)?;
        rho_markov_normalized(&norm.map, &norm.c_lo, &norm.c_hi, DEFAULT_MARKOV_BUDGET)
    }

    /// `rho_f` as the rotation number of the water-poured lift of the normalized core.
    pub fn rho_lift(&self, tolerance: &Rational) -> Result<RhoResult> {
        let lift = self.water_lift()?;
        lift::rotation_number(lift.minorant(), tolerance, lift::DEFAULT_LIFT_DEPTH).map_err(|e| e.at("lift"))
    }

    /// `rho_f` recovered from the kneading sequence.
    pub fn rho_kneading(&self, tolerance: &Rational, depth: usize) -> Result<RhoResult> {
        let k = self.kneading(depth);
        kneading::rho_from_kneading(&k, tolerance, depth).map_err(|e| e.at("kneading"))
    }

    /// The lifting pipeline on the normalized core.
    pub fn water_lift(&self) -> Result<MonotoneLift> {
        let (map, c_lo, c_hi) = self.pl_parts()?;
        let norm = normalize(map, c_lo, c_hi).map_err(|e| e.at("landmarks"))?;
        lift::water_lift(&norm.map, &norm.c_lo).map_err(|e| e.at("lift"))
    }

    fn pl_parts(&self) -> Result<(&PlMap, &Rational, &Rational)> {
        match self {
            UnimodalMap::PiecewiseLinear { map, c_lo, c_hi } => Ok((map, c_lo, c_hi)),
            _ => Err(Error::Precondition("exact pipeline needs a piecewise-linear map".into())),
        }
    }

    /// Values `p/2n` certified to lie in `I_f`: one for each `n <= budget`
    /// with `f^n(c) <= c`, where `p` counts the side changes of `a` along
    /// `c, f(c), ..., f^n(c)`.
    pub fn membership_witness(&self, budget: usize) -> Result<Vec<Rational>> {
        match self {
            UnimodalMap::PiecewiseLinear { map, c_lo, c_hi } => {
                let lm = exact_landmarks(map, c_lo, c_hi)?;
                if map.eval(c_lo) <= lm.a {
                    return Err(Error::Precondition("membership witnesses need f(c) > a".into()));
                }
                let mut out = Vec::new();
                let side = |x: &Rational| x.cmp(&lm.a);
                let mut x = c_lo.clone();
                let mut changes = 0i64;
                for n in 1..=budget {
                    let y = map.eval(&x);
                    if side(&x) != side(&y) && side(&x) != core::cmp::Ordering::Equal && side(&y) != core::cmp::Ordering::Equal {
                        changes += 1;
                    }
                    if &y <= c_lo {
                        out.push(Rational::new(changes, 2 * n as i64));
                    }
                    x = y;
                }
                Ok(out)
            }
            other => {
                let f = other.closure();
                let c = other.c_f64();
                let lm = approx_landmarks(&*f, c, 1e-14)?;
                if f(c) <= lm.a {
                    return Err(Error::Precondition("membership witnesses need f(c) > a".into()));
                }
                let mut out = Vec::new();
                let (mut x, mut changes) = (c, 0i64);
                for n in 1..=budget {
                    let y = f(x);
                    if (x < lm.a && y > lm.a) || (x > lm.a && y < lm.a) {
                        changes += 1;
                    }
                    if y <= c {
                        out.push(Rational::new(changes, 2 * n as i64));
                    }
                    x = y;
                }
                Ok(out)
            }
        }
    }

    /// `K' = K1 ∪ K2' ∪ K3` on the normalized core and a periodic orbit inside
    /// it realizing `rho_f`.
    pub fn minimal_orbit_region(&self) -> Result<OrbitRegion> {
        let (map, c_lo, c_hi) = self.pl_parts()?;
        let norm = normalize(map, c_lo, c_hi)?;
        minimal_orbit_region(&norm)
    }
}

fn lipschitz_estimate(f: &dyn Fn(f64) -> f64) -> f64 {
    let n = 1000;
    (0..n)
        .map(|i| {
            let (x, y) = (i as f64 / n as f64, (i + 1) as f64 / n as f64);
            ((f(y) - f(x)) * n as f64).abs()
        })
        .fold(0.0, f64::max)
}

/// Landmarks of a unimodal map. `c` is the left end of the turning set.
#[derive(Debug, Clone, PartialEq)]
pub struct Landmarks<T> {
    pub c: T,
    pub c_hi: T,
    /// The fixed point right of `c`.
    pub a: T,
    /// `f(a') = a`, `a' <= c`.
    pub a_prime: Option<T>,
    /// `f(d) = f(lo)`, `d >= a`.
    pub d: Option<T>,
    /// `f(d') = d`, `c <= d' <= a`.
    pub d_prime: Option<T>,
    /// `[f^2(c), f(c)]`.
    pub core: (T, T),
    /// A fixed point in `[f^2(c), c)`, when there is one.
    pub horseshoe: Option<T>,
}

/// The core restricted and rescaled to `[0, 1]`, with `f(c) = 1` and `f(1) = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalizedCore {
    pub map: PlMap,
    pub c_lo: Rational,
    pub c_hi: Rational,
    /// The core `[lo, hi]` in original coordinates.
    pub lo: Rational,
    pub hi: Rational,
    pub landmarks: Landmarks<Rational>,
}

impl NormalizedCore {
    /// Back to original coordinates.
    pub fn to_original(&self, x: &Rational) -> Rational {
        &self.lo + x * (&self.hi - &self.lo)
    }
}

#[derive(Debug, Clone)]
pub enum LandmarkSet {
    Exact { original: Landmarks<Rational>, normalized: NormalizedCore },
    Approx(Landmarks<f64>),
}

pub fn exact_landmarks(map: &PlMap, c_lo: &Rational, c_hi: &Rational) -> Result<Landmarks<Rational>> {
    let fc = map.eval(c_lo);
    if &fc <= c_hi {
        return Err(Error::TrivialDynamics);
    }
    let right: Vec<Rational> = map.fixed_points().into_iter().filter(|x| x > c_hi).collect();
    if right.len() != 1 {
        return Err(Error::FixedPointAmbiguity(alloc::format!("{} fixed points right of c", right.len())));
    }
    let a = right.into_iter().next().unwrap();
    let a_prime = map.preimages(&a).into_iter().filter(|x| x <= c_lo).max();
    let f_lo = map.eval(map.lo());
    let d = map.preimages(&f_lo).into_iter().filter(|x| x >= &a && x != map.lo()).max();
    let d_prime = d
        .as_ref()
        .and_then(|d| map.preimages(d).into_iter().filter(|x| x >= c_hi && x <= &a).max());
    let lo = map.eval(&fc);
    let horseshoe = map.fixed_points().into_iter().find(|x| x >= &lo && x < c_lo);
    Ok(Landmarks { c: c_lo.clone(), c_hi: c_hi.clone(), a, a_prime, d, d_prime, core: (lo, fc), horseshoe })
}

/// Restricts to the core and rescales it onto `[0, 1]`. Needs `f^2(c) < c < f(c)`.
pub fn normalize(map: &PlMap, c_lo: &Rational, c_hi: &Rational) -> Result<NormalizedCore> {
    let fc = map.eval(c_lo);
    if &fc <= c_hi {
        return Err(Error::TrivialDynamics);
    }
    let lo = map.eval(&fc);
    if &lo >= c_lo {
        return Err(Error::Precondition("core lies on the decreasing branch".into()));
    }
    let core = map.restrict(&lo, &fc)?.rescale(&lo, &fc);
    let w = &fc - &lo;
    let (n_lo, n_hi) = ((c_lo - &lo) / &w, (c_hi - &lo) / &w);
    let landmarks = exact_landmarks(&core, &n_lo, &n_hi)?;
    Ok(NormalizedCore { map: core, c_lo: n_lo, c_hi: n_hi, lo, hi: fc, landmarks })
}

/// Forward-invariant cut set: orbits of every breakpoint and of `extra`.
fn markov_cuts(map: &PlMap, extra: &[Rational], budget: usize) -> Result<Vec<Rational>> {
    let mut set: BTreeSet<Rational> = BTreeSet::new();
    let mut stack: Vec<Rational> = map.xs().iter().chain(extra).cloned().collect();
    while let Some(x) = stack.pop() {
        if set.contains(&x) {
            continue;
        }
        if set.len() >= budget {
            return Err(Error::InfiniteCriticalData { budget });
        }
        stack.push(map.eval(&x));
        set.insert(x);
    }
    Ok(set.into_iter().collect())
}

/// Minimum mean crossing weight over the Markov graph of a normalized core.
pub fn rho_markov_normalized(map: &PlMap, c_lo: &Rational, c_hi: &Rational, budget: usize) -> Result<RhoResult> {
    let lm = exact_landmarks(map, c_lo, c_hi)?;
    let extra: Vec<Rational> = [Some(lm.a.clone()), lm.a_prime.clone()].into_iter().flatten().collect();
    let cuts = markov_cuts(map, &extra, budget)?;
    let g = graph::graph_on_cuts(map, &cuts, &lm.a);
    graph::min_mean_cycle(&g, WeightKind::Crossing)
}

/// `rho_f` of a piecewise-linear unimodal map from its Markov partition.
/// A fixed point left of the turning point gives the horseshoe value `0`.
pub fn rho_exact_markov(map: &PlMap) -> Result<RhoResult> {
    rho_exact_markov_with_budget(map, DEFAULT_MARKOV_BUDGET)
}

pub fn rho_exact_markov_with_budget(map: &PlMap, budget: usize) -> Result<RhoResult> {
    let (c_lo, c_hi) = pl_turning_set(map)?;
    let norm = normalize(map, &c_lo, &c_hi)?;
    if let Some(x) = &norm.landmarks.horseshoe {
        let x = norm.to_original(x);
        return Ok(RhoResult::exact(Rational::zero(), Witness::Horseshoe { lo: x.clone(), hi: x }));
    }
    rho_markov_normalized(&norm.map, &norm.c_lo, &norm.c_hi, budget)
}

fn period_two_orbit(core: &PlMap, a: &Rational) -> Option<Vec<Rational>> {
    let ff = core.compose(core);
    ff.fixed_points()
        .into_iter()
        .filter(|x| x != a)
        .find_map(|x| graph::periodic_orbit(core, &x, 2).filter(|o| o.len() == 2))
}

fn pl_interval(map: &PlMap, c_lo: &Rational, c_hi: &Rational, tolerance: &Rational) -> Result<RotationInterval> {
    let fc = map.eval(c_lo);
    if &fc <= c_hi {
        return Ok(RotationInterval::Trivial);
    }
    let lo = map.eval(&fc);
    if lo == fc {
        return Ok(RotationInterval::Trivial);
    }
    if &lo >= c_lo {
        let core = map.restrict(&lo, &fc)?;
        let a = core.fixed_points().into_iter().next().ok_or(Error::TrivialDynamics)?;
        return Ok(match period_two_orbit(&core, &a) {
            Some(orbit) => RotationInterval::Interval { left: RhoResult::exact(Rational::half(), Witness::Orbit(orbit)) },
            None => RotationInterval::Trivial,
        });
    }
    let norm = normalize(map, c_lo, c_hi).map_err(|e| e.at("landmarks"))?;
    let lm = &norm.landmarks;
    if let Some(x) = &lm.horseshoe {
        let x = norm.to_original(x);
        let left = RhoResult::exact(Rational::zero(), Witness::Horseshoe { lo: x.clone(), hi: x });
        return Ok(RotationInterval::Interval { left });
    }
    if norm.map.eval(&Rational::zero()) >= lm.a {
        let orbit = period_two_orbit(&norm.map, &lm.a).ok_or(Error::TrivialDynamics)?;
        let orbit = orbit.iter().map(|x| norm.to_original(x)).collect();
        return Ok(RotationInterval::Interval { left: RhoResult::exact(Rational::half(), Witness::Orbit(orbit)) });
    }
    let left = match rho_markov_normalized(&norm.map, &norm.c_lo, &norm.c_hi, DEFAULT_MARKOV_BUDGET) {
        Ok(r) => r,
        Err(Error::InfiniteCriticalData { .. }) => {
            let lift = lift::water_lift(&norm.map, &norm.c_lo).map_err(|e| e.at("lift"))?;
            lift::rotation_number(lift.minorant(), tolerance, lift::DEFAULT_LIFT_DEPTH).map_err(|e| e.at("lift"))?
        }
        Err(e) => return Err(e.at("markov")),
    };
    Ok(RotationInterval::Interval { left })
}

fn bisect<F: Fn(f64) -> f64>(g: F, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    let glo = g(lo);
    for _ in 0..200 {
        if hi - lo <= tol {
            break;
        }
        let m = 0.5 * (lo + hi);
        let gm = g(m);
        if gm == 0.0 {
            return m;
        }
        if (gm > 0.0) == (glo > 0.0) {
            lo = m;
        } else {
            hi = m;
        }
    }
    0.5 * (lo + hi)
}

pub fn approx_landmarks(f: &dyn Fn(f64) -> f64, c: f64, tol: f64) -> Result<Landmarks<f64>> {
    let fc = f(c);
    if fc <= c {
        return Err(Error::TrivialDynamics);
    }
    let (lo_dom, hi_dom) = (0.0, 1.0);
    if f(hi_dom) - hi_dom > 0.0 {
        return Err(Error::FixedPointAmbiguity("no fixed point right of c".into()));
    }
    // a single sign change of f(x) - x right of c
    let n = 4000;
    let mut changes = 0;
    let mut prev = fc - c;
    for i in 1..=n {
        let x = c + (hi_dom - c) * i as f64 / n as f64;
        let v = f(x) - x;
        if (v <= 0.0) != (prev <= 0.0) {
            changes += 1;
        }
        prev = v;
    }
    if changes > 1 {
        return Err(Error::FixedPointAmbiguity(alloc::format!("{changes} fixed points right of c")));
    }
    let a = bisect(|x| f(x) - x, c, hi_dom, tol);
    let a_prime = (f(lo_dom) <= a).then(|| bisect(|x| f(x) - a, lo_dom, c, tol));
    let f0 = f(lo_dom);
    let d = (f0 <= a).then(|| bisect(|x| f(x) - f0, a, hi_dom, tol));
    let d_prime = d.filter(|d| *d <= fc).map(|d| bisect(|x| f(x) - d, c, a, tol));
    let lo = f(fc);
    let horseshoe = (lo < c).then(|| {
        (0..=n).map(|i| lo + (c - lo) * i as f64 / n as f64).find(|&x| x < c && f(x) - x <= 0.0)
    });
    Ok(Landmarks { c, c_hi: c, a, a_prime, d, d_prime, core: (lo, fc), horseshoe: horseshoe.flatten() })
}

/// The floating-point lift of the normalized core.
fn approx_lift(f: &Arc<dyn Fn(f64) -> f64 + Send + Sync>, c: f64, lm: &Landmarks<f64>) -> Result<ApproxLift> {
    let (lo, hi) = lm.core;
    let w = hi - lo;
    let g = f.clone();
    let norm: Arc<dyn Fn(f64) -> f64 + Send + Sync> = Arc::new(move |x| (g(lo + w * x) - lo) / w);
    let cn = (c - lo) / w;
    let nl = approx_landmarks(&*norm, cn, 1e-15)?;
    let a_prime = nl.a_prime.ok_or_else(|| Error::Precondition("no a' on the core".into()))?;
    let d = nl.d.ok_or_else(|| Error::Precondition("no d on the core".into()))?;
    ApproxLift::new(norm, cn, nl.a, a_prime, d)
}

fn polynomial_horseshoe(poly: &Polynomial, c: &Rational) -> Option<(Rational, Rational)> {
    let fc = poly.eval(c);
    let lo = poly.eval(&fc);
    if &lo >= c {
        return None;
    }
    let fix = poly.minus_identity();
    if fix.eval(&lo).is_zero() {
        return Some((lo.clone(), lo));
    }
    fix.roots_in(&lo, c).into_iter().find_map(|r| match r {
        Root::Exact(x) if &x < c => Some((x.clone(), x)),
        Root::Between(l, h) => Some((l, h)),
        _ => None,
    })
}

/// Exact answers for a polynomial with rational turning point, when the
/// dynamics is settled by root counting.
fn polynomial_shortcut(poly: &Polynomial, c: &Rational) -> Result<Option<RotationInterval>> {
    let fc = poly.eval(c);
    if &fc <= c {
        return Ok(Some(RotationInterval::Trivial));
    }
    let lo = poly.eval(&fc);
    let fix = poly.minus_identity();
    let two = poly.compose(poly).minus_identity();
    let not_fixed = |r: &Root| match r {
        Root::Exact(x) => !fix.eval(x).is_zero(),
        Root::Between(l, h) => fix.count_roots_open(l, h) == 0 && !fix.eval(l).is_zero() && !fix.eval(h).is_zero(),
    };
    let isolated = |r: Root| {
        let (l, h) = match r {
            Root::Exact(x) => (x.clone(), x),
            Root::Between(l, h) => (l, h),
        };
        RhoResult::exact(Rational::half(), Witness::IsolatedOrbit { period: 2, lo: l, hi: h })
    };
    if &lo >= c {
        let roots = two.roots_in(&lo, &fc);
        return Ok(Some(match roots.into_iter().find(not_fixed) {
            Some(r) => RotationInterval::Interval { left: isolated(r) },
            None => RotationInterval::Trivial,
        }));
    }
    if let Some((l, h)) = polynomial_horseshoe(poly, c) {
        return Ok(Some(RotationInterval::Interval { left: RhoResult::exact(Rational::zero(), Witness::Horseshoe { lo: l, hi: h }) }));
    }
    // f(lo) >= a exactly when f(lo) lies right of c and f(x) - x <= 0 there
    let s = poly.eval(&lo);
    if &s > c && !fix.eval(&s).is_positive() {
        if let Some(r) = two.roots_in(&lo, c).into_iter().find(not_fixed) {
            return Ok(Some(RotationInterval::Interval { left: isolated(r) }));
        }
    }
    Ok(None)
}

/// The region `K' = K1 ∪ K2' ∪ K3` of the normalized core and an orbit inside it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitRegion {
    pub k1: (Rational, Rational),
    pub k2: (Rational, Rational),
    pub k3: (Rational, Rational),
    /// Orbit in iteration order (normalized coordinates); for a horseshoe this
    /// is the critical orbit up to its first repetition.
    pub orbit: Vec<Rational>,
    pub rho: Rational,
}

impl OrbitRegion {
    pub fn contains(&self, x: &Rational) -> bool {
        [&self.k1, &self.k2, &self.k3].iter().any(|(l, r)| l <= x && x <= r)
    }
}

fn minimal_orbit_region(norm: &NormalizedCore) -> Result<OrbitRegion> {
    let lm = &norm.landmarks;
    let map = &norm.map;
    let zero = Rational::zero();
    let one = Rational::one();
    let a_prime = lm.a_prime.clone().ok_or_else(|| Error::Precondition("no a' on the core".into()))?;
    let d = lm.d.clone().ok_or_else(|| Error::Precondition("no d on the core".into()))?;
    let d_prime = lm.d_prime.clone().ok_or_else(|| Error::Precondition("no d' on the core".into()))?;
    let k1 = (zero.clone(), a_prime.clone());
    let k2 = (norm.c_lo.clone(), d_prime.clone());
    let k3 = (d.clone(), one.clone());
    if lm.horseshoe.is_some() {
        let mut orbit = vec![norm.c_lo.clone()];
        loop {
            let y = map.eval(orbit.last().unwrap());
            let repeat = orbit.contains(&y);
            orbit.push(y);
            if repeat || orbit.len() > DEFAULT_MARKOV_BUDGET {
                break;
            }
        }
        return Ok(OrbitRegion { k1, k2, k3, orbit, rho: zero });
    }
    let extra = [lm.a.clone(), a_prime, d, d_prime];
    let cuts = markov_cuts(map, &extra, DEFAULT_MARKOV_BUDGET)?;
    let full = graph::graph_on_cuts(map, &cuts, &lm.a);
    let region = OrbitRegion { k1, k2, k3, orbit: Vec::new(), rho: zero };
    let (g, _) = full.restrict(|(l, r)| region.contains(l) && region.contains(r) && region.contains(&l.midpoint(r)));
    let res = graph::min_mean_cycle(&g, WeightKind::Crossing).map_err(|e| e.at("orbit-region"))?;
    let Some(RhoResult::Exact { value, witness: Witness::Cycle { vertices, .. } }) = Some(res) else {
        return Err(Error::Precondition("no witness cycle in K'".into()));
    };
    let x = graph::walk_fixed_points(map, &g, &vertices)
        .into_iter()
        .next()
        .ok_or_else(|| Error::Precondition("witness loop has no periodic point".into()))?;
    let orbit = graph::periodic_orbit(map, &x, DEFAULT_MARKOV_BUDGET)
        .ok_or_else(|| Error::Precondition("witness point is not periodic".into()))?;
    Ok(OrbitRegion { orbit, rho: value, ..region })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::{gamma, gamma_prime};

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn pl(pts: &[(i64, i64, i64, i64)]) -> UnimodalMap {
        UnimodalMap::piecewise_linear(PlMap::new(pts.iter().map(|&(a, b, c, d)| (r(a, b), r(c, d))).collect()).unwrap())
            .unwrap()
    }

    fn tent() -> UnimodalMap {
        pl(&[(0, 1, 0, 1), (1, 2, 1, 1), (1, 1, 0, 1)])
    }

    fn gamma25() -> UnimodalMap {
        UnimodalMap::piecewise_linear(gamma(2, 5).unwrap().realize().map().clone()).unwrap()
    }

    fn quadratic(nu: Rational) -> UnimodalMap {
        UnimodalMap::polynomial(Polynomial::new(vec![Rational::zero(), nu.clone(), -nu])).unwrap()
    }

    fn left(iv: RotationInterval) -> RhoResult {
        iv.left().cloned().expect("non-trivial interval")
    }

    #[test]
    fn gamma25_landmarks() {
        let LandmarkSet::Exact { original, normalized } = gamma25().landmarks(0.0).unwrap() else { panic!() };
        assert_eq!(original.c, r(1, 5));
        assert_eq!(original.a, r(7, 15));
        assert_eq!(original.a_prime, Some(r(1, 30)));
        assert_eq!(original.d, Some(r(1, 2)));
        assert_eq!(original.d_prime, Some(r(9, 20)));
        assert_eq!(original.horseshoe, None);
        assert_eq!(normalized.map.eval(&normalized.c_lo), r(1, 1));
        assert_eq!(normalized.map.eval(&r(1, 1)), r(0, 1));
        assert_eq!(normalized.landmarks.a, r(7, 12));
    }

    #[test]
    fn quadratic_and_tent_landmarks() {
        let LandmarkSet::Approx(q) = quadratic(r(4, 1)).landmarks(1e-13).unwrap() else { panic!() };
        assert!((q.c - 0.5).abs() < 1e-12);
        assert!((q.a - 0.75).abs() < 1e-12);
        assert!((q.a_prime.unwrap() - 0.25).abs() < 1e-12);
        assert!((q.d.unwrap() - 1.0).abs() < 1e-12);
        assert!(q.horseshoe.is_some());
        let LandmarkSet::Exact { original, .. } = tent().landmarks(0.0).unwrap() else { panic!() };
        assert_eq!((original.c, original.a, original.a_prime, original.d), (r(1, 2), r(2, 3), Some(r(1, 3)), Some(r(1, 1))));
        assert_eq!(original.horseshoe, Some(r(0, 1)));
    }

    #[test]
    fn trivial_dynamics() {
        let low = pl(&[(0, 1, 0, 1), (1, 2, 2, 5), (1, 1, 0, 1)]);
        assert!(low.over_rotation_interval(&r(1, 100)).unwrap().is_trivial());
        assert_eq!(low.landmarks(0.0).unwrap_err(), Error::TrivialDynamics);
        let q = quadratic(r(3, 2));
        assert!(q.over_rotation_interval(&r(1, 100)).unwrap().is_trivial());
    }

    #[test]
    fn interval_dispatch() {
        let tol = r(1, 1000);
        let g = left(gamma25().over_rotation_interval(&tol).unwrap());
        assert_eq!(g.value(), Some(&r(2, 5)));
        let t = left(tent().over_rotation_interval(&tol).unwrap());
        assert_eq!(t.value(), Some(&r(0, 1)));
        assert!(matches!(t, RhoResult::Exact { witness: Witness::Horseshoe { .. }, .. }));
        let q4 = left(quadratic(r(4, 1)).over_rotation_interval(&tol).unwrap());
        assert_eq!(q4.value(), Some(&r(0, 1)));
        let gp = UnimodalMap::piecewise_linear(gamma_prime(2, 5).unwrap().realize().map().clone()).unwrap();
        assert_eq!(left(gp.over_rotation_interval(&tol).unwrap()).value(), Some(&r(2, 5)));
        let gp = UnimodalMap::piecewise_linear(gamma_prime(1, 2).unwrap().realize().map().clone()).unwrap();
        assert_eq!(left(gp.over_rotation_interval(&tol).unwrap()).value(), Some(&r(1, 2)));
    }

    #[test]
    fn three_routes_agree_on_gamma25() {
        let m = gamma25();
        let tol = r(1, 100_000);
        assert_eq!(m.rho_markov().unwrap().value(), Some(&r(2, 5)));
        assert_eq!(m.rho_lift(&tol).unwrap().value(), Some(&r(2, 5)));
        assert_eq!(m.rho_kneading(&tol, 256).unwrap().value(), Some(&r(2, 5)));
        assert_eq!(rho_exact_markov(m.as_pl().unwrap()).unwrap().value(), Some(&r(2, 5)));
        assert_eq!(rho_exact_markov(tent().as_pl().unwrap()).unwrap().value(), Some(&r(0, 1)));
    }

    #[test]
    fn truncation() {
        let t = tent().truncate(&r(9, 20)).unwrap();
        let m = t.as_pl().unwrap();
        assert_eq!(m.eval(&r(1, 2)), r(9, 10));
        for k in 0..=40 {
            let x = r(k, 40);
            let f = tent().as_pl().unwrap().eval(&x);
            if f <= r(9, 10) {
                assert_eq!(m.eval(&x), f);
            }
        }
        let rho = left(t.over_rotation_interval(&r(1, 1000)).unwrap());
        assert!(rho.lo() >= &r(0, 1));
    }

    #[test]
    fn membership_witnesses() {
        let w = gamma25().membership_witness(5).unwrap();
        assert_eq!(w, vec![r(1, 2), r(2, 5)]);
        let w = gamma25().membership_witness(1).unwrap();
        assert!(w.is_empty());
    }

    #[test]
    fn orbit_region_gamma25() {
        let reg = gamma25().minimal_orbit_region().unwrap();
        assert_eq!(reg.k1, (r(0, 1), r(1, 24)));
        assert_eq!(reg.k2, (r(1, 4), r(9, 16)));
        assert_eq!(reg.k3, (r(5, 8), r(1, 1)));
        assert_eq!(reg.rho, r(2, 5));
        assert_eq!(reg.orbit.len(), 5);
        assert!(reg.orbit.iter().all(|x| reg.contains(x)));
    }

    #[test]
    fn orbit_region_tent() {
        let reg = tent().minimal_orbit_region().unwrap();
        assert_eq!(reg.k2, (r(1, 2), r(1, 2)));
        assert_eq!(reg.k3, (r(1, 1), r(1, 1)));
        assert_eq!(reg.orbit, vec![r(1, 2), r(1, 1), r(0, 1), r(0, 1)]);
        assert_eq!(reg.rho, r(0, 1));
    }

    #[test]
    fn quadratic_period_three_window() {
        let q = quadratic(r(384, 100));
        let res = left(q.over_rotation_interval(&r(1, 1000)).unwrap());
        assert!(res.contains(&r(1, 3)), "{res:?}");
        assert!(res.width() <= r(1, 1000));
    }

    #[test]
    fn evaluable_maps_are_bracketed() {
        let e = Evaluable::new("logistic 3.9", |x| 3.9 * x * (1.0 - x), 0.5, 3.9);
        let m = UnimodalMap::evaluable(e).unwrap();
        let res = left(m.over_rotation_interval(&r(1, 1000)).unwrap());
        assert!(!res.is_exact());
        let p = quadratic(r(39, 10));
        let exact_route = left(p.over_rotation_interval(&r(1, 1000)).unwrap());
        assert!(res.lo() <= exact_route.hi() && exact_route.lo() <= res.hi());
    }

    #[test]
    fn rejects_non_unimodal() {
        let w = PlMap::new(vec![(r(0, 1), r(0, 1)), (r(1, 4), r(1, 1)), (r(1, 2), r(0, 1)), (r(3, 4), r(1, 1)), (r(1, 1), r(0, 1))])
            .unwrap();
        assert!(matches!(UnimodalMap::piecewise_linear(w), Err(Error::NotUnimodal(_))));
        let cubic = Polynomial::new(vec![r(1, 2), r(-3, 1), r(0, 1), r(4, 1)]);
        assert!(UnimodalMap::polynomial(cubic).is_err());
    }
}
