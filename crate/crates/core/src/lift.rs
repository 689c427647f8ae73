//! Degree-one liftings of unimodal maps and rotation numbers of monotone
//! degree-one maps of the line.
//!
//! For a unimodal `f` on `[0, 1]` with `f(c) = 1`, `f(1) = 0` and fixed point
//! `a > c`, the flip `sigma` on `[a, 1]` turns `f` into a map `g` whose
//! degree-one lifting `F` has the over-rotation numbers of `f` as classical
//! rotation numbers. The greatest continuous nondecreasing degree-one
//! minorant `G` of `F` has a single rotation number, the left end of the
//! over-rotation interval.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::float::FloatCore;

use crate::error::{Error, Result};
use crate::graph::{Certificate, RhoResult, Witness};
use crate::pl::PlMap;
use crate::rational::Rational;

/// `x` on `[0, a)`, `a + 1 - x` on `[a, 1]`.
pub fn sigma(a: &Rational, x: &Rational) -> Rational {
    if x < a {
        x.clone()
    } else {
        a + Rational::one() - x
    }
}

pub fn sigma_f64(a: f64, x: f64) -> f64 {
    if x < a {
        x
    } else {
        a + 1.0 - x
    }
}

/// A continuous degree-one map of the line, stored on one period:
/// `G(x + n) = G(x) + n` with `G` given on `[0, 1]` by `base`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicLift {
    base: PlMap,
}

impl PeriodicLift {
    pub fn new(base: PlMap) -> Result<Self> {
        if base.lo() != &Rational::zero() || base.hi() != &Rational::one() {
            return Err(Error::InvalidMap("lift must be given on [0, 1]".into()));
        }
        let jump = base.eval(&Rational::one()) - base.eval(&Rational::zero());
        if jump != Rational::one() {
            return Err(Error::InvalidMap("lift is not of degree one".into()));
        }
        Ok(PeriodicLift { base: base.simplified() })
    }

    /// `x -> x + t`.
    pub fn translation(t: &Rational) -> Self {
        let base = PlMap::new(vec![(Rational::zero(), t.clone()), (Rational::one(), t + Rational::one())]).unwrap();
        PeriodicLift { base }
    }

    pub fn base(&self) -> &PlMap {
        &self.base
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let n = x.floor();
        self.base.eval(&(x - &n)) + n
    }

    pub fn is_nondecreasing(&self) -> bool {
        self.base.ys().windows(2).all(|w| w[0] <= w[1])
    }

    /// `self ∘ inner`. Exact for nondecreasing `inner`.
    pub fn compose(&self, inner: &PeriodicLift) -> PeriodicLift {
        let ix = inner.base.xs();
        let iy = inner.base.ys();
        let mut xs: Vec<Rational> = ix.to_vec();
        for i in 0..ix.len() - 1 {
            let (y0, y1) = (&iy[i], &iy[i + 1]);
            if y0 == y1 {
                continue;
            }
            let (lo, hi) = if y0 < y1 { (y0, y1) } else { (y1, y0) };
            let k0 = lo.floor_i64().expect("lift values fit in i64");
            let k1 = hi.floor_i64().expect("lift values fit in i64");
            for k in k0 - 1..=k1 {
                let shift = Rational::from_integer(k);
                for b in self.base.xs() {
                    let t = &shift + b;
                    if lo < &t && &t < hi {
                        xs.push(&ix[i] + (&t - y0) / inner.base.slope(i));
                    }
                }
            }
        }
        xs.sort();
        xs.dedup();
        let pts = xs.into_iter().map(|x| {
            let y = self.eval(&inner.base.eval(&x));
            (x, y)
        });
        PeriodicLift { base: PlMap::new(pts.collect()).expect("sorted breakpoints").simplified() }
    }

    /// Minimum and maximum of `G(x) - x`, attained at breakpoints.
    pub fn displacement_range(&self) -> (Rational, Rational) {
        let mut it = self.base.points().map(|(x, y)| y - x);
        let first = it.next().unwrap();
        it.fold((first.clone(), first), |(lo, hi), v| {
            let lo = if v < lo { v.clone() } else { lo };
            let hi = if v > hi { v } else { hi };
            (lo, hi)
        })
    }

    /// A point with `G(x) = x + p`, when one exists.
    pub fn solve_displacement(&self, p: &Rational) -> Option<Rational> {
        let h: Vec<Rational> = self.base.points().map(|(x, y)| y - x - p).collect();
        let xs = self.base.xs();
        for i in 0..h.len() {
            if h[i].is_zero() {
                return Some(xs[i].clone());
            }
            if i + 1 < h.len() && h[i].signum() != h[i + 1].signum() && !h[i + 1].is_zero() {
                let t = &h[i] / (&h[i] - &h[i + 1]);
                return Some(&xs[i] + t * (&xs[i + 1] - &xs[i]));
            }
        }
        None
    }

    /// Flat pieces inside `[0, 1]`.
    pub fn flat_spots(&self) -> Vec<(Rational, Rational)> {
        let xs = self.base.xs();
        let ys = self.base.ys();
        let mut out: Vec<(Rational, Rational)> = Vec::new();
        for i in 0..xs.len() - 1 {
            if ys[i] == ys[i + 1] {
                match out.last_mut() {
                    Some(last) if last.1 == xs[i] => last.1 = xs[i + 1].clone(),
                    _ => out.push((xs[i].clone(), xs[i + 1].clone())),
                }
            }
        }
        out
    }
}

/// One affine piece of a possibly discontinuous map, given by its values at
/// (or limits towards) both ends.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment {
    pub x0: Rational,
    pub x1: Rational,
    pub y0: Rational,
    pub y1: Rational,
}

impl Segment {
    fn at(&self, x: &Rational) -> Rational {
        if self.x0 == self.x1 {
            return self.y0.clone();
        }
        &self.y0 + (&self.y1 - &self.y0) * (x - &self.x0) / (&self.x1 - &self.x0)
    }
}

/// The lifting pipeline for one normalized unimodal map.
#[derive(Debug, Clone)]
pub struct MonotoneLift {
    f: PlMap,
    c: Rational,
    a: Rational,
    a_prime: Rational,
    d: Rational,
    /// `F` on `[0, a']`, `(a', a)` and `[a, 1)`, in order.
    lifting: [Vec<Segment>; 3],
    g: PeriodicLift,
}

fn segments_of(map: &PlMap) -> Vec<Segment> {
    let xs = map.xs();
    let ys = map.ys();
    (0..xs.len().saturating_sub(1))
        .map(|i| Segment { x0: xs[i].clone(), x1: xs[i + 1].clone(), y0: ys[i].clone(), y1: ys[i + 1].clone() })
        .collect()
}

/// Builds `g`, `F` and the water-poured `G` for a unimodal map on `[0, 1]`
/// with `f(c) = 1`, `f(1) = 0`, no fixed point in `[0, c)` and `f(0) < a`.
/// `c` is the left end of the turning set.
pub fn water_lift(f: &PlMap, c: &Rational) -> Result<MonotoneLift> {
    let zero = Rational::zero();
    let one = Rational::one();
    if f.lo() != &zero || f.hi() != &one {
        return Err(Error::Precondition("lift needs a map on [0, 1]".into()));
    }
    if f.eval(c) != one {
        return Err(Error::Precondition("lift needs f(c) = 1".into()));
    }
    if f.eval(&one) != zero {
        return Err(Error::Precondition("lift needs f(1) = 0".into()));
    }
    let fixed = f.fixed_points();
    if let Some(x) = fixed.iter().find(|x| *x < c) {
        return Err(Error::Precondition(alloc::format!("fixed point {x} left of the turning point")));
    }
    let right: Vec<&Rational> = fixed.iter().filter(|x| *x > c).collect();
    if right.len() != 1 {
        return Err(Error::FixedPointAmbiguity(alloc::format!("{} fixed points right of c", right.len())));
    }
    let a = right[0].clone();
    let f0 = f.eval(&zero);
    if f0 >= a {
        return Err(Error::Precondition("lift needs f(0) < a".into()));
    }
    let a_prime = f.preimages(&a).into_iter().filter(|x| x <= c).max().expect("f(c) > a > f(0)");
    let d = f.preimages(&f0).into_iter().filter(|x| x >= &a).max().expect("f(1) <= f(0)");

    let left = segments_of(&f.restrict(&zero, &a_prime)?);
    let flip = |s: &Segment| Segment { x0: s.x0.clone(), x1: s.x1.clone(), y0: &a + &one - &s.y0, y1: &a + &one - &s.y1 };
    let middle: Vec<Segment> = segments_of(&f.restrict(&a_prime, &a)?).iter().map(flip).collect();
    // x in [a, 1] reads f at a + 1 - x, shifted up by one
    let tail = f.restrict(&a, &one)?;
    let mut pts: Vec<(Rational, Rational)> =
        tail.points().map(|(x, y)| (&a + &one - x, y + &one)).collect();
    pts.reverse();
    let right_part = segments_of(&PlMap::new(pts)?);
    let lifting = [left, middle, right_part];
    let g = greatest_minorant(&lifting)?;
    Ok(MonotoneLift { f: f.clone(), c: c.clone(), a, a_prime, d, lifting, g })
}

/// `x -> inf_{y >= x} F(y)` for `F` given by segments covering `[0, 1)` and
/// extended by `F(x + 1) = F(x) + 1`.
fn greatest_minorant(pieces: &[Vec<Segment>]) -> Result<PeriodicLift> {
    let segs: Vec<&Segment> = pieces.iter().flatten().collect();
    let m0 = segs.iter().flat_map(|s| [&s.y0, &s.y1]).min().expect("non-empty lifting").clone();
    let mut level = m0 + Rational::one();
    let mut out: Vec<(Rational, Rational)> = vec![(Rational::one(), level.clone())];
    for s in segs.iter().rev() {
        if s.x0 == s.x1 {
            continue;
        }
        if s.y1 < level {
            return Err(Error::Precondition("water level jumps: the minorant is discontinuous".into()));
        }
        if s.y0 >= level {
            out.push((s.x0.clone(), level.clone()));
            continue;
        }
        // F rises through the current level inside the segment
        let t = &s.x0 + (&level - &s.y0) * (&s.x1 - &s.x0) / (&s.y1 - &s.y0);
        if t < out.last().unwrap().0 {
            out.push((t, level.clone()));
        }
        out.push((s.x0.clone(), s.y0.clone()));
        level = s.y0.clone();
    }
    out.reverse();
    out.dedup_by(|b, a| a.0 == b.0);
    PeriodicLift::new(PlMap::new(out)?)
}

impl MonotoneLift {
    pub fn map(&self) -> &PlMap {
        &self.f
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn a_prime(&self) -> &Rational {
        &self.a_prime
    }

    pub fn d(&self) -> &Rational {
        &self.d
    }

    /// The water-poured minorant `G`.
    pub fn minorant(&self) -> &PeriodicLift {
        &self.g
    }

    /// `sigma ∘ f ∘ sigma` with `g(a') = g(1) = a`.
    pub fn g(&self, x: &Rational) -> Rational {
        if x == &Rational::one() {
            return self.a.clone();
        }
        let v = self.lifting_unit(x);
        if x >= &self.a {
            v - Rational::one()
        } else {
            v
        }
    }

    fn lifting_unit(&self, y: &Rational) -> Rational {
        let [left, middle, right] = &self.lifting;
        let pick = |segs: &[Segment]| {
            segs.iter().find(|s| &s.x0 <= y && y <= &s.x1).map(|s| s.at(y))
        };
        if y <= &self.a_prime {
            pick(left)
        } else if y < &self.a {
            pick(middle)
        } else {
            pick(right)
        }
        .expect("segments cover [0, 1)")
    }

    /// The degree-one lifting `F`.
    pub fn lifting(&self, x: &Rational) -> Rational {
        let n = x.floor();
        self.lifting_unit(&(x - &n)) + n
    }

    /// Flat spots of `G` inside `[0, 1]`.
    pub fn flat_spots(&self) -> Vec<(Rational, Rational)> {
        self.g.flat_spots()
    }

    /// The two flat-spot families `[a', c]` and `[a + 1 - d, 1]` as the
    /// explicit construction predicts them.
    pub fn predicted_flat_spots(&self) -> [(Rational, Rational); 2] {
        [
            (self.a_prime.clone(), self.c.clone()),
            (&self.a + Rational::one() - &self.d, Rational::one()),
        ]
    }

    /// `G` from the explicit two-flat-spot formula.
    pub fn explicit_minorant(&self, x: &Rational) -> Rational {
        let n = x.floor();
        let y = x - &n;
        let one = Rational::one();
        let v = if y <= self.a_prime {
            self.f.eval(&y)
        } else if y <= self.c {
            self.a.clone()
        } else if y <= self.a {
            &self.a + &one - self.f.eval(&y)
        } else if y <= &self.a + &one - &self.d {
            self.f.eval(&(&self.a + &one - &y)) + &one
        } else {
            self.f.eval(&Rational::zero()) + &one
        };
        v + n
    }
}

/// Default Stern–Brocot depth for [`rotation_number`].
pub const DEFAULT_LIFT_DEPTH: usize = 400;

/// Sign of `G^q(x) - x - p` over a period: `Equal` when it vanishes somewhere.
fn classify(power: &PeriodicLift, p: i64) -> (Ordering, Option<Rational>) {
    let p = Rational::from_integer(p);
    let (lo, hi) = power.displacement_range();
    if lo > p {
        (Ordering::Greater, None)
    } else if hi < p {
        (Ordering::Less, None)
    } else {
        (Ordering::Equal, power.solve_displacement(&p))
    }
}

/// Rotation number of a continuous nondecreasing degree-one lift by
/// Stern–Brocot descent. `rho > p/q` iff `G^q(x) > x + p` everywhere, and
/// `rho = p/q` iff `G^q(x) = x + p` somewhere, so a vanishing displacement
/// gives the exact value.
pub fn rotation_number(lift: &PeriodicLift, tolerance: &Rational, depth: usize) -> Result<RhoResult> {
    if !lift.is_nondecreasing() {
        return Err(Error::Precondition("lift is not nondecreasing".into()));
    }
    let exact = |x: Rational, p: i64, q: i64| RhoResult::exact(Rational::new(p, q), Witness::LiftPoint { x, p, q });
    let (dlo, dhi) = lift.displacement_range();
    let mut lo_p = dlo.floor_i64().ok_or_else(|| Error::Precondition("displacement out of range".into()))?;
    let mut hi_p = dhi.floor_i64().ok_or_else(|| Error::Precondition("displacement out of range".into()))? + 1;
    // narrow to consecutive integers
    loop {
        for k in [lo_p, hi_p] {
            let (ord, x) = classify(lift, k);
            if ord == Ordering::Equal {
                return Ok(exact(x.unwrap(), k, 1));
            }
        }
        if hi_p - lo_p <= 1 {
            break;
        }
        let mid = lo_p + (hi_p - lo_p) / 2;
        match classify(lift, mid) {
            (Ordering::Equal, x) => return Ok(exact(x.unwrap(), mid, 1)),
            (Ordering::Greater, _) => lo_p = mid,
            (Ordering::Less, _) => hi_p = mid,
        }
    }
    let (mut lo, mut hi) = ((lo_p, 1i64), (hi_p, 1i64));
    let (mut lo_pow, mut hi_pow) = (lift.clone(), lift.clone());
    for step in 0..depth {
        let width = Rational::new(hi.0, hi.1) - Rational::new(lo.0, lo.1);
        if &width <= tolerance {
            return Ok(lift_bracket(lo, hi, step));
        }
        let m = (lo.0 + hi.0, lo.1 + hi.1);
        let m_pow = lo_pow.compose(&hi_pow);
        match classify(&m_pow, m.0) {
            (Ordering::Equal, x) => return Ok(exact(x.unwrap(), m.0, m.1)),
            (Ordering::Greater, _) => {
                lo = m;
                lo_pow = m_pow;
            }
            (Ordering::Less, _) => {
                hi = m;
                hi_pow = m_pow;
            }
        }
    }
    Ok(lift_bracket(lo, hi, depth))
}

fn lift_bracket(lo: (i64, i64), hi: (i64, i64), depth: usize) -> RhoResult {
    RhoResult::Bracket {
        lo: Rational::new(lo.0, lo.1),
        hi: Rational::new(hi.0, hi.1),
        lower: Certificate::Lift { p: lo.0, q: lo.1, exact: true },
        upper: Certificate::Lift { p: hi.0, q: hi.1, exact: true },
        depth,
    }
}

/// Floating-point counterpart of [`MonotoneLift`] for maps known only by
/// evaluation, normalized to `f(c) = 1`, `f(1) = 0`.
#[derive(Clone)]
pub struct ApproxLift {
    f: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
    pub c: f64,
    pub a: f64,
    pub a_prime: f64,
    pub d: f64,
    f0: f64,
}

impl core::fmt::Debug for ApproxLift {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("ApproxLift")
            .field("c", &self.c)
            .field("a", &self.a)
            .field("a_prime", &self.a_prime)
            .field("d", &self.d)
            .finish()
    }
}

impl ApproxLift {
    pub fn new(f: Arc<dyn Fn(f64) -> f64 + Send + Sync>, c: f64, a: f64, a_prime: f64, d: f64) -> Result<Self> {
        let f0 = f(0.0);
        if f0 >= a {
            return Err(Error::Precondition("lift needs f(0) < a".into()));
        }
        if !(0.0 <= a_prime && a_prime <= c && c < a && a <= d && d <= 1.0) {
            return Err(Error::Precondition("landmarks out of order".into()));
        }
        Ok(ApproxLift { f, c, a, a_prime, d, f0 })
    }

    /// `G` by the explicit formula.
    pub fn eval(&self, x: f64) -> f64 {
        let n = FloatCore::floor(x);
        let y = x - n;
        let v = if y <= self.a_prime {
            (self.f)(y)
        } else if y <= self.c {
            self.a
        } else if y <= self.a {
            self.a + 1.0 - (self.f)(y)
        } else if y <= self.a + 1.0 - self.d {
            (self.f)(self.a + 1.0 - y) + 1.0
        } else {
            self.f0 + 1.0
        };
        v + n
    }

    pub fn iterate(&self, x: f64, n: usize) -> f64 {
        (0..n).fold(x, |y, _| self.eval(y))
    }
}

/// Rotation number of an [`ApproxLift`] by Stern–Brocot descent on sampled
/// evidence.
///
/// A single point with `G^q(x) >= x + p` proves `rho >= p/q`, and one with
/// `G^q(x) <= x + p` proves `rho <= p/q`; both (to rounding) lock `rho` at
/// `p/q`, reported as the bracket `[p/q, p/q]` with floating-point
/// certificates. Descent stops when the bracket is narrower than `tolerance`
/// or the next denominator would exceed `max_q`.
pub fn rotation_number_f64(lift: &ApproxLift, tolerance: f64, max_q: i64) -> RhoResult {
    const SAMPLES: usize = 1000;
    const EPS: f64 = 1e-10;
    let probes: Vec<f64> = [lift.a, lift.f0, lift.a_prime, lift.c]
        .into_iter()
        .chain((0..SAMPLES).map(|i| i as f64 / SAMPLES as f64))
        .collect();
    let test = |p: i64, q: i64| -> Ordering {
        let (mut max, mut min) = (f64::NEG_INFINITY, f64::INFINITY);
        for &x in &probes {
            let h = lift.iterate(x, q as usize) - x - p as f64;
            max = max.max(h);
            min = min.min(h);
        }
        if max >= -EPS && min <= EPS {
            Ordering::Equal
        } else if min > EPS {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    };
    let locked = |p: i64, q: i64, depth: usize| {
        let r = Rational::new(p, q);
        RhoResult::Bracket {
            lo: r.clone(),
            hi: r,
            lower: Certificate::Lift { p, q, exact: false },
            upper: Certificate::Lift { p, q, exact: false },
            depth,
        }
    };
    let disp: Vec<f64> = probes.iter().map(|&x| lift.eval(x) - x).collect();
    let dmin = disp.iter().cloned().fold(f64::INFINITY, f64::min);
    let dmax = disp.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let mut lo = (FloatCore::floor(dmin) as i64, 1i64);
    let mut hi = (FloatCore::floor(dmax) as i64 + 1, 1i64);
    while hi.0 - lo.0 > 1 {
        let mid = lo.0 + (hi.0 - lo.0) / 2;
        match test(mid, 1) {
            Ordering::Equal => return locked(mid, 1, 0),
            Ordering::Greater => lo.0 = mid,
            Ordering::Less => hi.0 = mid,
        }
    }
    for k in [lo.0, hi.0] {
        if test(k, 1) == Ordering::Equal {
            return locked(k, 1, 0);
        }
    }
    let mut depth = 0;
    while (hi.0 as f64 / hi.1 as f64) - (lo.0 as f64 / lo.1 as f64) > tolerance && lo.1 + hi.1 <= max_q {
        let m = (lo.0 + hi.0, lo.1 + hi.1);
        depth += 1;
        match test(m.0, m.1) {
            Ordering::Equal => return locked(m.0, m.1, depth),
            Ordering::Greater => lo = m,
            Ordering::Less => hi = m,
        }
    }
    RhoResult::Bracket {
        lo: Rational::new(lo.0, lo.1),
        hi: Rational::new(hi.0, hi.1),
        lower: Certificate::Lift { p: lo.0, q: lo.1, exact: false },
        upper: Certificate::Lift { p: hi.0, q: hi.1, exact: false },
        depth,
    }
}
