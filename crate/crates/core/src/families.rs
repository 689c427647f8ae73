//! Comparing over-rotation intervals without computing them, and sweeping
//! one-parameter families.
//!
//! Class `S`: concave-down maps of `[0, 1]` with `f(0) = f(1) = 0`, one
//! turning point `c` and `f(c) > c`. Class `G`: members of `S` that are
//! polynomials of degree at most three. Concavity is non-strict, so tent-like
//! piecewise-linear maps belong to `S`.
//!
//! Every check returns a [`Verdict`]. Piecewise-linear and polynomial inputs
//! are decided exactly; anything else is sampled on a grid and the verdict is
//! marked inexact.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::orders::RotationInterval;
use crate::pl::PlMap;
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::unimodal::{self, Evaluable, UnimodalMap};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Class {
    S,
    G,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypothesis {
    pub name: &'static str,
    pub holds: bool,
    /// `false` when only checked on sample points.
    pub exact: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Verdict {
    pub holds: bool,
    /// Points where some hypothesis fails.
    pub witnesses: Vec<Rational>,
    pub ledger: Vec<Hypothesis>,
    /// `false` for semi-decisions made on a grid.
    pub exact: bool,
    /// Recorded when the verdict holds.
    pub conclusion: Option<String>,
    pub notes: Vec<String>,
}

impl Verdict {
    fn new() -> Self {
        Verdict { holds: true, exact: true, ..Default::default() }
    }

    fn check(&mut self, name: &'static str, exact: bool, outcome: core::result::Result<(), Vec<Rational>>) -> bool {
        let holds = outcome.is_ok();
        if let Err(w) = outcome {
            self.witnesses.extend(w);
        }
        self.ledger.push(Hypothesis { name, holds, exact });
        self.holds &= holds;
        self.exact &= exact;
        holds
    }

    /// Folds a sub-verdict in as a single hypothesis.
    fn absorb(&mut self, name: &'static str, sub: Verdict) -> bool {
        let exact = sub.exact;
        let out = if sub.holds { Ok(()) } else { Err(sub.witnesses) };
        self.check(name, exact, out)
    }

    fn conclude(mut self, text: &str) -> Self {
        if self.holds {
            self.conclusion = Some(text.into());
        }
        self
    }

    pub fn hypothesis(&self, name: &str) -> Option<&Hypothesis> {
        self.ledger.iter().find(|h| h.name == name)
    }
}

/// Grid `0, 1/n, ..., 1`.
fn unit_grid(n: usize) -> impl Iterator<Item = Rational> {
    let n = n.max(1) as i64;
    (0..=n).map(move |k| Rational::new(k, n))
}

fn sampled<F: Fn(f64) -> bool>(grid: usize, lo: f64, hi: f64, ok: F) -> core::result::Result<(), Vec<Rational>> {
    let bad: Vec<Rational> = unit_grid(grid)
        .filter_map(|t| {
            let x = lo + (hi - lo) * t.to_f64();
            (!ok(x)).then(|| Rational::from_f64(x).unwrap_or(t))
        })
        .collect();
    if bad.is_empty() {
        Ok(())
    } else {
        Err(bad)
    }
}

fn to_result(bad: Vec<Rational>) -> core::result::Result<(), Vec<Rational>> {
    if bad.is_empty() {
        Ok(())
    } else {
        Err(bad)
    }
}

/// Derivative in floating point: exact for polynomials and piecewise-linear
/// maps away from breakpoints, central differences otherwise.
pub fn derivative_f64(map: &UnimodalMap, x: f64) -> f64 {
    match map {
        UnimodalMap::Polynomial { poly, .. } => poly.derivative().eval_f64(x),
        UnimodalMap::Evaluable(e) => {
            let h = (1e-6 / e.lipschitz().max(1.0)).max(1e-9);
            let (l, r) = ((x - h).max(0.0), (x + h).min(1.0));
            (e.eval(r) - e.eval(l)) / (r - l)
        }
        UnimodalMap::PiecewiseLinear { .. } => {
            let h = 1e-9;
            let (l, r) = ((x - h).max(0.0), (x + h).min(1.0));
            (map.eval_f64(r) - map.eval_f64(l)) / (r - l)
        }
    }
}

fn on_unit_interval(map: &UnimodalMap) -> bool {
    match map {
        UnimodalMap::PiecewiseLinear { map, .. } => map.lo().is_zero() && map.hi() == &Rational::one(),
        _ => true,
    }
}

/// Breakpoints of both maps, sorted and deduplicated.
fn common_cuts(f: &PlMap, g: &PlMap, extra: &[Rational]) -> Vec<Rational> {
    let mut cuts: Vec<Rational> = f.xs().iter().chain(g.xs()).chain(extra).cloned().collect();
    cuts.sort();
    cuts.dedup();
    cuts
}

fn cell_slope(f: &PlMap, l: &Rational, r: &Rational) -> Rational {
    (f.eval(r) - f.eval(l)) / (r - l)
}

/// `true` when `f(x) = f(1 - x)` on `[0, 1]`, and whether that was decided exactly.
pub fn is_even(map: &UnimodalMap, grid: usize) -> (bool, bool) {
    match map {
        UnimodalMap::PiecewiseLinear { map, .. } => {
            let one = Rational::one();
            let even = on_unit_interval(&UnimodalMap::PiecewiseLinear {
                map: map.clone(),
                c_lo: Rational::zero(),
                c_hi: Rational::zero(),
            }) && map.xs().iter().all(|x| map.eval(x) == map.eval(&(&one - x)));
            (even, true)
        }
        UnimodalMap::Polynomial { poly, .. } => {
            let mirror = Polynomial::new(vec![Rational::one(), Rational::from_integer(-1)]);
            (poly.compose(&mirror).sub(poly).is_zero(), true)
        }
        UnimodalMap::Evaluable(e) => (sampled(grid, 0.0, 1.0, |x| (e.eval(x) - e.eval(1.0 - x)).abs() <= e.precision()).is_ok(), false),
    }
}

/// Membership in `S` or `G`.
pub fn class_check(map: &UnimodalMap, class: Class, grid: usize) -> Verdict {
    let mut v = Verdict::new();
    let zero = Rational::zero();
    let one = Rational::one();
    match map {
        UnimodalMap::PiecewiseLinear { map: m, c_lo, c_hi } => {
            let ends = on_unit_interval(map) && m.eval(&zero).is_zero() && m.eval(&one).is_zero();
            v.check("endpoints map to 0", true, if ends { Ok(()) } else { Err(Vec::new()) });
            v.check("single turning point", true, if c_lo == c_hi { Ok(()) } else { Err(vec![c_lo.clone(), c_hi.clone()]) });
            let kinks: Vec<Rational> = (1..m.pieces()).filter(|&i| m.slope(i) > m.slope(i - 1)).map(|i| m.xs()[i].clone()).collect();
            v.check("concave", true, to_result(kinks));
            v.check("f(c) > c", true, if &m.eval(c_lo) > c_hi { Ok(()) } else { Err(vec![c_lo.clone()]) });
            let smooth = (1..m.pieces()).all(|i| &m.xs()[i] == c_lo || m.slope(i) == m.slope(i - 1));
            if !smooth {
                v.notes.push("branches are piecewise smooth; derivatives are compared almost everywhere".into());
            }
            if (1..m.pieces()).any(|i| m.slope(i) == m.slope(i - 1) || &m.xs()[i] == c_lo) {
                v.notes.push("concavity is not strict".into());
            }
        }
        UnimodalMap::Polynomial { poly, c, c_f64 } => {
            let ends = poly.eval(&zero).is_zero() && poly.eval(&one).is_zero();
            v.check("endpoints map to 0", true, if ends { Ok(()) } else { Err(Vec::new()) });
            v.check("single turning point", true, Ok(()));
            let curvature = poly.derivative().derivative().scale(&Rational::from_integer(-1));
            v.check("concave", true, curvature.nonnegative_on(&zero, &one).map_err(|x| vec![x]));
            match c {
                Some(c) => v.check("f(c) > c", true, if &poly.eval(c) > c { Ok(()) } else { Err(vec![c.clone()]) }),
                None => v.check("f(c) > c", false, if poly.eval_f64(*c_f64) > *c_f64 { Ok(()) } else { Err(Vec::new()) }),
            };
        }
        UnimodalMap::Evaluable(e) => {
            let eps = e.precision();
            let ends = e.eval(0.0).abs() <= eps && e.eval(1.0).abs() <= eps;
            v.check("endpoints map to 0", false, if ends { Ok(()) } else { Err(Vec::new()) });
            v.check("single turning point", false, Ok(()));
            let n = grid.max(2) as f64;
            let h = 1.0 / n;
            v.check("concave", false, sampled(grid, h, 1.0 - h, |x| e.eval(x - h) + e.eval(x + h) - 2.0 * e.eval(x) <= 4.0 * eps));
            v.check("f(c) > c", false, if e.eval(e.c()) > e.c() { Ok(()) } else { Err(Vec::new()) });
        }
    }
    if class == Class::G {
        let cubic = matches!(map, UnimodalMap::Polynomial { poly, .. } if poly.degree().is_some_and(|d| d <= 3));
        v.check("polynomial of degree at most 3", true, if cubic { Ok(()) } else { Err(Vec::new()) });
    }
    v
}

/// Turning points of two maps, compared exactly when both are known exactly.
fn same_turning_point(f: &UnimodalMap, g: &UnimodalMap) -> Result<()> {
    let exact = |m: &UnimodalMap| match m {
        UnimodalMap::PiecewiseLinear { c_lo, .. } => Some(c_lo.clone()),
        UnimodalMap::Polynomial { c, .. } => c.clone(),
        UnimodalMap::Evaluable(_) => None,
    };
    let same = match (exact(f), exact(g)) {
        (Some(a), Some(b)) => a == b,
        _ => (f.c_f64() - g.c_f64()).abs() <= 1e-9,
    };
    if same {
        Ok(())
    } else {
        Err(Error::TurningPointMismatch(alloc::format!("{}", f.c_f64()), alloc::format!("{}", g.c_f64())))
    }
}

/// `|f'| >= |g'|` on `[0, 1]`.
fn steeper(f: &UnimodalMap, g: &UnimodalMap, grid: usize) -> (bool, core::result::Result<(), Vec<Rational>>) {
    match (f, g) {
        (UnimodalMap::PiecewiseLinear { map: fm, .. }, UnimodalMap::PiecewiseLinear { map: gm, .. }) => {
            let cuts = common_cuts(fm, gm, &[]);
            let bad = cuts
                .windows(2)
                .filter(|w| cell_slope(fm, &w[0], &w[1]).abs() < cell_slope(gm, &w[0], &w[1]).abs())
                .map(|w| w[0].midpoint(&w[1]))
                .collect();
            (true, to_result(bad))
        }
        (UnimodalMap::Polynomial { poly: fp, .. }, UnimodalMap::Polynomial { poly: gp, .. }) => {
            let (df, dg) = (fp.derivative(), gp.derivative());
            let gap = df.sub(&dg).mul(&df.add(&dg));
            (true, gap.nonnegative_on(&Rational::zero(), &Rational::one()).map_err(|x| vec![x]))
        }
        _ => (
            false,
            sampled(grid, 0.0, 1.0, |x| derivative_f64(f, x).abs() >= derivative_f64(g, x).abs() - 1e-9),
        ),
    }
}

/// `|c - a| / |c - a'|`, exactly for piecewise-linear maps.
fn repulsion_ratio(map: &UnimodalMap) -> Result<(Option<Rational>, f64)> {
    match map {
        UnimodalMap::PiecewiseLinear { map: m, c_lo, c_hi } => {
            let lm = unimodal::exact_landmarks(m, c_lo, c_hi)?;
            let ap = lm.a_prime.ok_or_else(|| Error::Precondition("no preimage of a left of c".into()))?;
            let r = (&lm.a - c_lo).abs() / (c_lo - &ap).abs();
            let f = r.to_f64();
            Ok((Some(r), f))
        }
        other => {
            let f = |x: f64| other.eval_f64(x);
            let lm = unimodal::approx_landmarks(&f, other.c_f64(), 1e-14)?;
            let ap = lm.a_prime.ok_or_else(|| Error::Precondition("no preimage of a left of c".into()))?;
            Ok((None, (lm.a - lm.c).abs() / (lm.c - ap).abs()))
        }
    }
}

/// Steepness comparison: if `|f'| >= |g'|`, the turning points agree and
/// `|c - a_f| / |c - a'_f| >= |c - a_g| / |c - a'_g|`, then `I_f ⊇ I_g`.
pub fn compare_lemma32(f: &UnimodalMap, g: &UnimodalMap, grid: usize) -> Result<Verdict> {
    same_turning_point(f, g)?;
    let mut v = Verdict::new();
    let in_f = v.absorb("f in S", class_check(f, Class::S, grid));
    let in_g = v.absorb("g in S", class_check(g, Class::S, grid));
    let (exact, out) = steeper(f, g, grid);
    v.check("|f'| >= |g'|", exact, out);
    let (fe, fe_exact) = is_even(f, grid);
    let (ge, ge_exact) = is_even(g, grid);
    if fe && ge {
        v.notes.push("both maps are even; the ratios are both 1".into());
        v.check("repulsion ratio", fe_exact && ge_exact, Ok(()));
    } else if in_f && in_g {
        let (rf, rg) = (repulsion_ratio(f)?, repulsion_ratio(g)?);
        match (rf.0, rg.0) {
            (Some(a), Some(b)) => v.check("repulsion ratio", true, if a >= b { Ok(()) } else { Err(Vec::new()) }),
            _ => v.check("repulsion ratio", false, if rf.1 >= rg.1 - 1e-9 { Ok(()) } else { Err(Vec::new()) }),
        };
    } else {
        v.check("repulsion ratio", true, Err(Vec::new()));
    }
    Ok(v.conclude("I_f contains I_g"))
}

/// `|g'(x)(x - c)| <= |g'(x')(x' - c)|` for `x >= c`, where `x' <= c` has
/// `g(x') = g(x)`. When it holds, `I_{νg} ⊇ I_g` for every `ν > 1`.
pub fn scaling_check(g: &UnimodalMap, grid: usize) -> Verdict {
    let mut v = Verdict::new();
    let member = v.absorb("g in S", class_check(g, Class::S, grid));
    let name = "|g'(x)(x-c)| <= |g'(x')(x'-c)|";
    if !member {
        v.check(name, true, Err(Vec::new()));
        return v;
    }
    match g {
        UnimodalMap::PiecewiseLinear { map, c_lo: c, .. } => {
            v.check(name, true, scaling_exact(map, c));
        }
        _ if is_even(g, grid) == (true, true) => {
            v.notes.push("g is even; both sides agree".into());
            v.check(name, true, Ok(()));
        }
        _ => {
            let c = g.c_f64();
            let out = sampled(grid, c, 1.0, |x| {
                let y = g.eval_f64(x);
                let xp = bisect_increasing(|t| g.eval_f64(t), 0.0, c, y);
                (derivative_f64(g, x) * (x - c)).abs() <= (derivative_f64(g, xp) * (xp - c)).abs() + 1e-9
            });
            v.check(name, false, out);
        }
    }
    v.conclude("I_{nu g} contains I_g for every nu > 1")
}

fn bisect_increasing<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, level: f64) -> f64 {
    for _ in 0..200 {
        let m = 0.5 * (lo + hi);
        if f(m) < level {
            lo = m;
        } else {
            hi = m;
        }
    }
    0.5 * (lo + hi)
}

/// On each cell of the right branch both sides are affine in `x`, so the
/// inequality holds on the cell iff it holds at the cell's ends.
fn scaling_exact(map: &PlMap, c: &Rational) -> core::result::Result<(), Vec<Rational>> {
    let left_pre = |y: &Rational| map.preimages(y).into_iter().filter(|x| x <= c).max();
    let mut cuts: Vec<Rational> = map.xs().iter().filter(|x| *x >= c).cloned().collect();
    for b in map.xs().iter().filter(|x| *x < c) {
        cuts.extend(map.preimages(&map.eval(b)).into_iter().filter(|x| x >= c));
    }
    cuts.push(c.clone());
    cuts.sort();
    cuts.dedup();
    let mut bad = Vec::new();
    for w in cuts.windows(2) {
        let (u, v) = (&w[0], &w[1]);
        let s_r = cell_slope(map, u, v).abs();
        let (Some(up), Some(vp)) = (left_pre(&map.eval(u)), left_pre(&map.eval(v))) else {
            bad.push(u.midpoint(v));
            continue;
        };
        if up == vp {
            continue;
        }
        let s_l = cell_slope(map, &vp, &up).abs();
        for (x, xp) in [(u, &up), (v, &vp)] {
            if &s_r * (x - c) > &s_l * (c - xp) {
                bad.push(x.clone());
            }
        }
    }
    bad.dedup();
    to_result(bad)
}

/// Pointwise dominance `f >= g` for members of `G`; then `I_f ⊇ I_g`.
pub fn dominance_check(f: &UnimodalMap, g: &UnimodalMap, grid: usize) -> Verdict {
    let mut v = Verdict::new();
    v.absorb("f in G", class_check(f, Class::G, grid));
    v.absorb("g in G", class_check(g, Class::G, grid));
    let (exact, out) = dominates(f, g, &Rational::zero(), &Rational::one(), grid);
    v.check("f >= g", exact, out);
    v.conclude("I_f contains I_g")
}

/// `f >= g` on `[l, r]`.
fn dominates(
    f: &UnimodalMap,
    g: &UnimodalMap,
    l: &Rational,
    r: &Rational,
    grid: usize,
) -> (bool, core::result::Result<(), Vec<Rational>>) {
    if l > r {
        return (true, Ok(()));
    }
    match (f, g) {
        (UnimodalMap::Polynomial { poly: fp, .. }, UnimodalMap::Polynomial { poly: gp, .. }) => {
            (true, fp.sub(gp).nonnegative_on(l, r).map_err(|x| vec![x]))
        }
        (UnimodalMap::PiecewiseLinear { map: fm, .. }, UnimodalMap::PiecewiseLinear { map: gm, .. }) => {
            let mut pts: Vec<Rational> = common_cuts(fm, gm, &[l.clone(), r.clone()]).into_iter().filter(|x| l <= x && x <= r).collect();
            pts.dedup();
            let bad = pts.into_iter().filter(|x| fm.eval(x) < gm.eval(x)).collect();
            (true, to_result(bad))
        }
        _ => (false, sampled(grid, l.to_f64(), r.to_f64(), |x| f.eval_f64(x) >= g.eval_f64(x) - 1e-12)),
    }
}

/// Where the repellence comparison is made.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Region {
    /// `B = ψ_g(I)` with `I = [g²(c), g(c)]`.
    Core,
    /// `B = ψ_g([lo, hi])`.
    Interval(Rational, Rational),
    /// The three pointwise inequalities `f <= g` on `[g²(c), a']`,
    /// `f >= g` on `[c, a]`, `f <= g` on `[a, g(c)]`.
    Hypotheses,
}

/// `[f(x), a] ⊇ [g(x), a]` on `B = ψ_g(I)`, where `ψ_g(x)` is the point of
/// `[x, a]` closest to `a` with the same `g`-value. When it holds, `I_f ⊇ I_g`.
pub fn repellence_check(f: &UnimodalMap, g: &UnimodalMap, region: &Region, grid: usize) -> Result<Verdict> {
    let mut v = Verdict::new();
    match (f, g) {
        (UnimodalMap::PiecewiseLinear { map: fm, .. }, UnimodalMap::PiecewiseLinear { map: gm, c_lo, c_hi }) => {
            let lm = repelling_point(gm, c_lo, c_hi, region)?;
            let (lo, hi) = region_bounds(region, &lm.core);
            let ap = lm.a_prime.clone().ok_or_else(|| Error::Precondition("no preimage of a left of c".into()))?;
            if *region == Region::Hypotheses {
                let fu = UnimodalMap::PiecewiseLinear { map: fm.clone(), c_lo: c_lo.clone(), c_hi: c_hi.clone() };
                let gu = UnimodalMap::PiecewiseLinear { map: gm.clone(), c_lo: c_lo.clone(), c_hi: c_hi.clone() };
                let (_, o) = dominates(&gu, &fu, &lo, &ap, grid);
                v.check("f <= g on [g^2(c), a']", true, o);
                let (_, o) = dominates(&fu, &gu, c_hi, &lm.a, grid);
                v.check("f >= g on [c, a]", true, o);
                let (_, o) = dominates(&gu, &fu, &lm.a, &hi, grid);
                v.check("f <= g on [a, g(c)]", true, o);
                return Ok(v.conclude("I_f contains I_g"));
            }
            let right_pre = |y: &Rational| gm.preimages(y).into_iter().filter(|x| x >= c_hi && x <= &lm.a).min();
            let mut pieces: Vec<(Rational, Rational)> = Vec::new();
            let clip = |l: &Rational, r: &Rational| {
                let (l, r) = (l.max_of(&lo).clone(), r.min_of(&hi).clone());
                (l <= r).then_some((l, r))
            };
            pieces.extend(clip(&Rational::zero(), &ap));
            pieces.extend(clip(c_hi, &Rational::one()));
            if let Some((l, r)) = clip(&ap, c_hi) {
                if let (Some(pl), Some(pr)) = (right_pre(&gm.eval(&l)), right_pre(&gm.eval(&r))) {
                    pieces.push((pr.min_of(&pl).clone(), pr.max_of(&pl).clone()));
                }
            }
            let mut bad = Vec::new();
            for (l, r) in &pieces {
                bad.extend(repels_exact(fm, gm, &lm.a, l, r));
            }
            bad.sort();
            bad.dedup();
            v.check("f more repellent than g on B", true, to_result(bad));
        }
        _ => {
            let gf = |x: f64| g.eval_f64(x);
            let c = g.c_f64();
            let lm = unimodal::approx_landmarks(&gf, c, 1e-14)?;
            if let Some(x) = lm.horseshoe.filter(|x| *x > 1e-12) {
                return Err(Error::FixedPointAmbiguity(alloc::format!("g has a second fixed point near {x}")));
            }
            let ap = lm.a_prime.ok_or_else(|| Error::Precondition("no preimage of a left of c".into()))?;
            let (lo, hi) = match region {
                Region::Interval(l, h) => (l.to_f64(), h.to_f64()),
                _ => lm.core,
            };
            if *region == Region::Hypotheses {
                let ff = |x: f64| f.eval_f64(x);
                v.check("f <= g on [g^2(c), a']", false, sampled(grid, lo, ap, |x| ff(x) <= gf(x) + 1e-12));
                v.check("f >= g on [c, a]", false, sampled(grid, c, lm.a, |x| ff(x) >= gf(x) - 1e-12));
                v.check("f <= g on [a, g(c)]", false, sampled(grid, lm.a, hi, |x| ff(x) <= gf(x) + 1e-12));
                return Ok(v.conclude("I_f contains I_g"));
            }
            let a = lm.a;
            let psi = |x: f64| {
                if (ap..c).contains(&x) {
                    let y = gf(x);
                    bisect_increasing(|t| -gf(t), c, a, -y)
                } else {
                    x
                }
            };
            let out = sampled(grid, lo, hi, |x| {
                let y = psi(x);
                let (fy, gy) = (f.eval_f64(y), gf(y));
                if (gy - a).abs() <= 1e-12 {
                    true
                } else if gy < a {
                    fy <= gy + 1e-12
                } else {
                    fy >= gy - 1e-12
                }
            });
            v.check("f more repellent than g on B", false, out);
        }
    }
    Ok(v.conclude("I_f contains I_g"))
}

fn region_bounds(region: &Region, core: &(Rational, Rational)) -> (Rational, Rational) {
    match region {
        Region::Interval(l, h) => (l.clone(), h.clone()),
        _ => core.clone(),
    }
}

/// The unique fixed point of `g` right of `c`, checked to be a crossing.
fn repelling_point(g: &PlMap, c_lo: &Rational, c_hi: &Rational, region: &Region) -> Result<unimodal::Landmarks<Rational>> {
    let lm = unimodal::exact_landmarks(g, c_lo, c_hi)?;
    let (lo, hi) = region_bounds(region, &lm.core);
    let others: Vec<Rational> = g.fixed_points().into_iter().filter(|x| x != &lm.a && &lo <= x && x <= &hi && x != g.lo()).collect();
    if !others.is_empty() {
        return Err(Error::FixedPointAmbiguity(alloc::format!("g also fixes {}", others[0])));
    }
    let eps_side = |x: &Rational| {
        g.xs().windows(2).position(|w| &w[0] <= x && x <= &w[1]).map(|i| g.slope(i))
    };
    let idx: Vec<usize> = (0..g.pieces()).filter(|&i| g.xs()[i] <= lm.a && lm.a <= g.xs()[i + 1]).collect();
    let flat = idx.iter().any(|&i| g.slope(i).is_zero()) || eps_side(&lm.a).is_none();
    if flat {
        return Err(Error::FixedPointAmbiguity(alloc::format!("fixed point {} is a local extremum", lm.a)));
    }
    Ok(lm)
}

/// Points of `[l, r]` where `g(y)` does not lie between `f(y)` and `a`.
fn repels_exact(f: &PlMap, g: &PlMap, a: &Rational, l: &Rational, r: &Rational) -> Vec<Rational> {
    let mut cuts: Vec<Rational> = common_cuts(f, g, &g.preimages(a)).into_iter().filter(|x| l < x && x < r).collect();
    cuts.insert(0, l.clone());
    cuts.push(r.clone());
    cuts.dedup();
    let mut bad = Vec::new();
    let cells: Vec<(Rational, Rational)> = if cuts.len() == 1 {
        vec![(l.clone(), r.clone())]
    } else {
        cuts.windows(2).map(|w| (w[0].clone(), w[1].clone())).collect()
    };
    for (u, v) in cells {
        let side = (g.eval(&u.midpoint(&v)) - a).signum();
        for x in [&u, &v] {
            let gap = f.eval(x) - g.eval(x);
            let ok = match side {
                core::cmp::Ordering::Less => !gap.is_positive(),
                core::cmp::Ordering::Greater => !gap.is_negative(),
                core::cmp::Ordering::Equal => true,
            };
            if !ok {
                bad.push(x.clone());
            }
        }
    }
    bad
}

/// `I_big ⊇ I_small`, allowing `slack` when either endpoint is a bracket.
pub fn includes(big: &RotationInterval, small: &RotationInterval, slack: &Rational) -> bool {
    match (big.left(), small.left()) {
        (_, None) => true,
        (None, Some(_)) => false,
        (Some(b), Some(s)) => match (b.value(), s.value()) {
            (Some(x), Some(y)) => x <= y,
            _ => b.hi() <= &(s.lo() + slack),
        },
    }
}

#[derive(Debug, Clone)]
pub enum FamilyKind {
    /// `ν x (1 - x)`.
    Quadratic,
    /// `ν f` for a fixed base map.
    Scaled(UnimodalMap),
    /// `(1 - ν) f + ν g` for two piecewise-linear maps on the same domain.
    Interpolated { base: PlMap, target: PlMap },
}

#[derive(Debug, Clone)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub lo: Rational,
    pub hi: Rational,
    pub steps: usize,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, lo: Rational, hi: Rational, steps: usize) -> Result<Self> {
        if steps == 0 || lo > hi || (steps == 1 && lo != hi) {
            return Err(Error::Precondition(alloc::format!("bad parameter grid {lo}..{hi} in {steps} steps")));
        }
        if let FamilyKind::Interpolated { base, target } = &kind {
            if base.lo() != target.lo() || base.hi() != target.hi() {
                return Err(Error::InvalidMap("interpolated maps need a common domain".into()));
            }
        }
        Ok(FamilySpec { kind, lo, hi, steps })
    }

    /// `steps` evenly spaced parameters from `lo` to `hi`.
    pub fn grid(&self) -> Vec<Rational> {
        if self.steps == 1 {
            return vec![self.lo.clone()];
        }
        let n = (self.steps - 1) as i64;
        (0..=n).map(|k| &self.lo + (&self.hi - &self.lo) * Rational::new(k, n)).collect()
    }

    pub fn member(&self, nu: &Rational) -> Result<UnimodalMap> {
        match &self.kind {
            FamilyKind::Quadratic => UnimodalMap::polynomial(Polynomial::new(vec![Rational::zero(), nu.clone(), -nu])),
            FamilyKind::Scaled(base) => match base {
                UnimodalMap::PiecewiseLinear { map, .. } => UnimodalMap::piecewise_linear(map.scale_values(nu)),
                UnimodalMap::Polynomial { poly, .. } => UnimodalMap::polynomial(poly.scale(nu)),
                UnimodalMap::Evaluable(e) => {
                    let (e2, k) = (e.clone(), nu.to_f64());
                    let label = alloc::format!("{} scaled by {nu}", e.label());
                    UnimodalMap::evaluable(Evaluable::new(&label, move |x| k * e2.eval(x), e.c(), k * e.lipschitz()))
                }
            },
            FamilyKind::Interpolated { base, target } => {
                let one = Rational::one();
                let xs = common_cuts(base, target, &[]);
                let ys = xs.iter().map(|x| (&one - nu) * base.eval(x) + nu * target.eval(x)).collect();
                UnimodalMap::piecewise_linear(PlMap::from_xy(xs, ys)?.simplified())
            }
        }
    }

    /// Checks the hypotheses of the monotonicity theorem between consecutive
    /// parameters. Returns the branch that holds and the parameters where it failed.
    pub fn branch_check(&self, members: &[(Rational, Result<UnimodalMap>)], grid: usize) -> (Branch, Vec<Rational>) {
        let ok: Vec<(&Rational, &UnimodalMap)> = members.iter().filter_map(|(nu, m)| m.as_ref().ok().map(|m| (nu, m))).collect();
        let mut failed = Vec::new();
        match &self.kind {
            FamilyKind::Scaled(_) => {
                let base_ok = ok.first().is_some_and(|(_, m)| scaling_check(m, grid).holds);
                if !base_ok || self.lo <= Rational::zero() {
                    failed.push(self.lo.clone());
                }
                (Branch::Scaling, failed)
            }
            FamilyKind::Quadratic => {
                for w in ok.windows(2) {
                    if !dominance_check(w[1].1, w[0].1, grid).holds {
                        failed.push(w[1].0.clone());
                    }
                }
                (Branch::Dominance, failed)
            }
            FamilyKind::Interpolated { .. } => {
                for w in ok.windows(2) {
                    if !compare_lemma32(w[1].1, w[0].1, grid).is_ok_and(|v| v.holds) {
                        failed.push(w[1].0.clone());
                    }
                }
                (Branch::Steepness, failed)
            }
        }
    }
}

/// Which sufficient condition for `I_{f_ν} ⊇ I_{f_μ}` (`ν > μ`) is checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// Members of `S` that get steeper with a growing repulsion ratio.
    Steepness,
    /// Multiples `ν f` of one map satisfying [`scaling_check`].
    Scaling,
    /// Pointwise increasing members of `G`.
    Dominance,
}

impl Branch {
    pub fn number(self) -> u8 {
        match self {
            Branch::Steepness => 1,
            Branch::Scaling => 2,
            Branch::Dominance => 3,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SweepRow {
    pub nu: Rational,
    pub interval: Result<RotationInterval>,
}

impl SweepRow {
    pub fn flags(&self) -> Vec<&'static str> {
        match &self.interval {
            Err(_) => vec!["error"],
            Ok(RotationInterval::Trivial) => vec!["trivial"],
            Ok(RotationInterval::Interval { left }) => {
                let mut f = vec![if left.is_exact() { "exact" } else { "bracket" }];
                if let crate::graph::RhoResult::Exact { witness: crate::graph::Witness::Horseshoe { .. }, .. } = left {
                    f.push("horseshoe");
                }
                f
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct SweepReport {
    pub rows: Vec<SweepRow>,
    /// Every later interval contains every earlier one.
    pub monotone: bool,
    /// Parameter pairs `(μ, ν)`, `μ < ν`, breaking containment.
    pub violations: Vec<(Rational, Rational)>,
    pub branch: Branch,
    /// `true` when the branch hypotheses held at every parameter.
    pub branch_holds: bool,
    pub branch_failures: Vec<Rational>,
    pub note: Option<String>,
}

/// Intervals along the parameter grid, with the monotonicity verdict.
/// Failures at single parameters are recorded in their rows.
pub fn sweep(spec: &FamilySpec, tolerance: &Rational) -> SweepReport {
    sweep_with(spec, tolerance, 400, |m| m.over_rotation_interval(tolerance))
}

/// [`sweep`] with a custom interval routine and hypothesis grid.
pub fn sweep_with<F>(spec: &FamilySpec, tolerance: &Rational, grid: usize, interval: F) -> SweepReport
where
    F: Fn(&UnimodalMap) -> Result<RotationInterval>,
{
    let members: Vec<(Rational, Result<UnimodalMap>)> = spec.grid().into_iter().map(|nu| {
        let m = spec.member(&nu);
        (nu, m)
    }).collect();
    let rows: Vec<SweepRow> = members
        .iter()
        .map(|(nu, m)| SweepRow { nu: nu.clone(), interval: m.clone().and_then(|m| interval(&m)) })
        .collect();
    let slack = tolerance * Rational::from_integer(2);
    let mut violations = Vec::new();
    for (i, small) in rows.iter().enumerate() {
        for big in &rows[i + 1..] {
            if let (Ok(s), Ok(b)) = (&small.interval, &big.interval) {
                if big.nu > small.nu && !includes(b, s, &slack) {
                    violations.push((small.nu.clone(), big.nu.clone()));
                }
            }
        }
    }
    let (branch, branch_failures) = spec.branch_check(&members, grid);
    let branch_holds = branch_failures.is_empty() && members.iter().all(|(_, m)| m.is_ok());
    let odd = rows.first().and_then(|r| r.interval.as_ref().ok()).and_then(|iv| iv.left()).is_some_and(|l| l.hi() < &Rational::half());
    let note = (branch_holds && odd).then(|| {
        alloc::format!("f at {} has a point of odd period, so the period sets grow with the parameter", spec.lo)
    });
    SweepReport { monotone: violations.is_empty(), rows, violations, branch, branch_holds, branch_failures, note }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::RhoResult;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn pl(pts: &[(i64, i64, i64, i64)]) -> UnimodalMap {
        UnimodalMap::piecewise_linear(PlMap::new(pts.iter().map(|&(a, b, c, d)| (r(a, b), r(c, d))).collect()).unwrap())
            .unwrap()
    }

    fn quad(nu: Rational) -> UnimodalMap {
        UnimodalMap::polynomial(Polynomial::new(vec![Rational::zero(), nu.clone(), -nu])).unwrap()
    }

    fn tent(h: Rational) -> UnimodalMap {
        UnimodalMap::piecewise_linear(PlMap::new(vec![(r(0, 1), r(0, 1)), (r(1, 2), h), (r(1, 1), r(0, 1))]).unwrap()).unwrap()
    }

    #[test]
    fn classes() {
        let q = quad(r(4, 1));
        assert!(class_check(&q, Class::S, 100).holds);
        assert!(class_check(&q, Class::G, 100).holds);
        assert!(class_check(&q, Class::G, 100).exact);
        let t = tent(r(1, 1));
        assert!(class_check(&t, Class::S, 100).holds);
        assert!(!class_check(&t, Class::G, 100).holds);
        let lifted = pl(&[(0, 1, 0, 1), (1, 2, 1, 1), (1, 1, 1, 5)]);
        let v = class_check(&lifted, Class::S, 100);
        assert!(!v.holds);
        assert!(!v.hypothesis("endpoints map to 0").unwrap().holds);
        let bumpy = pl(&[(0, 1, 0, 1), (1, 4, 1, 5), (1, 2, 1, 1), (1, 1, 0, 1)]);
        let v = class_check(&bumpy, Class::S, 100);
        assert_eq!(v.witnesses, vec![r(1, 4)]);
    }

    #[test]
    fn lemma32_examples() {
        let (f, g) = (quad(r(4, 1)), quad(r(7, 2)));
        let v = compare_lemma32(&f, &g, 100).unwrap();
        assert!(v.holds && v.exact, "{v:?}");
        assert!(compare_lemma32(&g, &g, 100).unwrap().holds);
        let v = compare_lemma32(&g, &f, 100).unwrap();
        assert!(!v.holds);
        assert!(!v.witnesses.is_empty());
        assert!(v.witnesses.iter().all(|x| x != &r(1, 2)));
        let off = UnimodalMap::polynomial(Polynomial::new(vec![r(0, 1), r(2, 1), r(0, 1), r(-2, 1)])).unwrap();
        assert!(matches!(compare_lemma32(&f, &off, 100), Err(Error::TurningPointMismatch(..))));
    }

    #[test]
    fn lemma32_on_tents() {
        let v = compare_lemma32(&tent(r(1, 1)), &tent(r(4, 5)), 100).unwrap();
        assert!(v.holds && v.exact);
        let v = compare_lemma32(&tent(r(4, 5)), &tent(r(1, 1)), 100).unwrap();
        assert!(!v.holds);
    }

    #[test]
    fn scaling_examples() {
        assert!(scaling_check(&quad(r(3, 1)), 100).holds);
        let v = scaling_check(&tent(r(1, 1)), 100);
        assert!(v.holds && v.exact);
        assert!(scaling_check(&pl(&[(0, 1, 0, 1), (1, 3, 1, 1), (1, 1, 0, 1)]), 100).holds);
        let even = pl(&[(0, 1, 0, 1), (1, 4, 4, 5), (1, 2, 1, 1), (3, 4, 4, 5), (1, 1, 0, 1)]);
        assert!(scaling_check(&even, 100).holds);
        // the right branch steepens sooner than the left one mirrored
        let skew = pl(&[(0, 1, 0, 1), (1, 2, 1, 1), (3, 4, 4, 5), (1, 1, 0, 1)]);
        let v = scaling_check(&skew, 100);
        assert!(!v.holds && v.exact);
        assert!(v.witnesses.contains(&r(3, 4)), "{v:?}");
    }

    #[test]
    fn dominance_examples() {
        let (f, g) = (quad(r(4, 1)), quad(r(7, 2)));
        assert!(dominance_check(&f, &g, 100).holds);
        assert!(dominance_check(&f, &f, 100).holds);
        // x(1-x)(3 + x) and x(1-x)(4 - 2x) cross at x = 1/3
        let p = Polynomial::new(vec![r(0, 1), r(1, 1), r(-1, 1)]);
        let f = UnimodalMap::polynomial(p.mul(&Polynomial::new(vec![r(3, 1), r(1, 1)]))).unwrap();
        let g = UnimodalMap::polynomial(p.mul(&Polynomial::new(vec![r(4, 1), r(-2, 1)]))).unwrap();
        let v = dominance_check(&f, &g, 100);
        assert!(!v.holds);
        assert!(v.witnesses.iter().all(|x| x < &r(1, 3)), "{v:?}");
        assert!(!dominance_check(&tent(r(1, 1)), &tent(r(1, 2)), 100).holds);
    }

    #[test]
    fn repellence_examples() {
        let g = tent(r(9, 10));
        assert!(repellence_check(&g, &g, &Region::Core, 100).unwrap().holds);
        assert!(repellence_check(&g, &g, &Region::Hypotheses, 100).unwrap().holds);
        // conjugate of a steeper tent by the contraction toward c taking a_f to a_g
        let f = tent(r(1, 1));
        let (af, ag) = (r(2, 3), r(9, 14));
        let c = r(1, 2);
        let q = (&ag - &c) / (&af - &c);
        let h = f.as_pl().unwrap().conjugate_affine(&q, &(&c - &q * &c));
        let hu = UnimodalMap::piecewise_linear(h).unwrap();
        let v = repellence_check(&hu, &g, &Region::Core, 100).unwrap();
        assert!(v.holds, "{v:?}");
        let v = repellence_check(&g, &hu, &Region::Core, 100).unwrap();
        assert!(!v.holds);
        assert!(repellence_check(&f, &f, &Region::Core, 100).unwrap().holds);
        let two = pl(&[(0, 1, 1, 10), (1, 5, 1, 10), (1, 2, 1, 1), (1, 1, 0, 1)]);
        let e = repellence_check(&two, &two, &Region::Core, 100);
        assert!(matches!(e, Err(Error::FixedPointAmbiguity(_))));
    }

    #[test]
    fn sampled_repellence_for_polynomials() {
        let g = quad(r(37, 10));
        let f = quad(r(39, 10));
        let v = repellence_check(&g, &g, &Region::Core, 200).unwrap();
        assert!(v.holds && !v.exact);
        let v = repellence_check(&f, &g, &Region::Hypotheses, 200).unwrap();
        assert!(!v.holds && !v.witnesses.is_empty());
        assert!(!v.hypothesis("f <= g on [g^2(c), a']").unwrap().holds);
    }

    #[test]
    fn grid_and_members() {
        let spec = FamilySpec::new(FamilyKind::Quadratic, r(7, 2), r(4, 1), 3).unwrap();
        assert_eq!(spec.grid(), vec![r(7, 2), r(15, 4), r(4, 1)]);
        let base = PlMap::new(vec![(r(0, 1), r(0, 1)), (r(1, 2), r(1, 2)), (r(1, 1), r(0, 1))]).unwrap();
        let target = PlMap::new(vec![(r(0, 1), r(0, 1)), (r(1, 4), r(3, 4)), (r(1, 2), r(1, 1)), (r(1, 1), r(0, 1))]).unwrap();
        let spec = FamilySpec::new(FamilyKind::Interpolated { base, target }, r(0, 1), r(1, 1), 5).unwrap();
        let m = spec.member(&r(1, 2)).unwrap();
        assert_eq!(m.as_pl().unwrap().eval(&r(1, 4)), r(1, 2));
        assert!(FamilySpec::new(FamilyKind::Quadratic, r(4, 1), r(3, 1), 3).is_err());
    }

    #[test]
    fn quadratic_sweep() {
        let spec = FamilySpec::new(FamilyKind::Quadratic, r(92, 25), r(4, 1), 3).unwrap();
        let tol = r(1, 1000);
        let rep = sweep(&spec, &tol);
        assert!(rep.monotone, "{rep:?}");
        assert!(rep.branch_holds);
        let last = rep.rows[2].interval.as_ref().unwrap().left().unwrap();
        assert_eq!(last.value(), Some(&r(0, 1)));
        let mid = rep.rows[1].interval.as_ref().unwrap().left().unwrap();
        assert!(mid.contains(&r(1, 3)) || (mid.lo() - r(1, 3)).abs() <= tol);
        assert!(rep.note.is_some());
    }

    #[test]
    fn constant_and_scaled_sweeps() {
        let spec = FamilySpec::new(FamilyKind::Scaled(tent(r(1, 1))), r(9, 10), r(9, 10), 4).unwrap();
        let rep = sweep(&spec, &r(1, 1000));
        assert!(rep.monotone);
        let first = rep.rows[0].interval.as_ref().unwrap();
        assert!(rep.rows.iter().all(|row| row.interval.as_ref().unwrap() == first));
        let spec = FamilySpec::new(FamilyKind::Scaled(tent(r(1, 1))), r(3, 4), r(1, 1), 6).unwrap();
        let rep = sweep(&spec, &r(1, 1000));
        assert_eq!(rep.branch, Branch::Scaling);
        assert!(rep.branch_holds);
        assert!(rep.monotone, "{:?}", rep.violations);
    }

    #[test]
    fn inclusion_semantics() {
        let exact = |v: Rational| RotationInterval::Interval { left: RhoResult::exact(v, crate::graph::Witness::Kneading { p: 0, q: 1 }) };
        let slack = r(1, 100);
        assert!(includes(&exact(r(1, 5)), &exact(r(1, 3)), &slack));
        assert!(!includes(&exact(r(1, 3)), &exact(r(1, 5)), &slack));
        assert!(includes(&exact(r(1, 3)), &RotationInterval::Trivial, &slack));
        assert!(!includes(&RotationInterval::Trivial, &exact(r(1, 3)), &slack));
    }
}
