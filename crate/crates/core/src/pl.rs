//! Exact piecewise-linear maps with rational breakpoints.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Continuous piecewise-affine map given by its breakpoints `(x, f(x))`.
///
/// The domain is `[x_0, x_last]`; between consecutive breakpoints the map is
/// the affine interpolation. A single breakpoint describes a map on a point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlMap {
    xs: Vec<Rational>,
    ys: Vec<Rational>,
}

impl PlMap {
    pub fn new(points: Vec<(Rational, Rational)>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidMap("no breakpoints".into()));
        }
        let (xs, ys): (Vec<_>, Vec<_>) = points.into_iter().unzip();
        if xs.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidMap("x-coordinates must be strictly increasing".into()));
        }
        Ok(PlMap { xs, ys })
    }

    pub fn from_xy(xs: Vec<Rational>, ys: Vec<Rational>) -> Result<Self> {
        if xs.len() != ys.len() {
            return Err(Error::InvalidMap("coordinate lists differ in length".into()));
        }
        Self::new(xs.into_iter().zip(ys).collect())
    }

    pub fn xs(&self) -> &[Rational] {
        &self.xs
    }

    pub fn ys(&self) -> &[Rational] {
        &self.ys
    }

    pub fn points(&self) -> impl Iterator<Item = (&Rational, &Rational)> {
        self.xs.iter().zip(self.ys.iter())
    }

    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }

    pub fn lo(&self) -> &Rational {
        &self.xs[0]
    }

    pub fn hi(&self) -> &Rational {
        self.xs.last().unwrap()
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.lo() <= x && x <= self.hi()
    }

    /// Index `i` of the piece `[x_i, x_{i+1}]` containing `x` (the left one at breakpoints).
    fn piece(&self, x: &Rational) -> usize {
        match self.xs.binary_search(x) {
            Ok(i) => i.min(self.xs.len().saturating_sub(2)),
            Err(0) => 0,
            Err(i) => (i - 1).min(self.xs.len().saturating_sub(2)),
        }
    }

    pub fn slope(&self, i: usize) -> Rational {
        (&self.ys[i + 1] - &self.ys[i]) / (&self.xs[i + 1] - &self.xs[i])
    }

    pub fn pieces(&self) -> usize {
        self.xs.len().saturating_sub(1)
    }

    /// Exact value at `x`; points outside the domain are clamped to it.
    pub fn eval(&self, x: &Rational) -> Rational {
        if self.xs.len() == 1 {
            return self.ys[0].clone();
        }
        if x <= self.lo() {
            return self.ys[0].clone();
        }
        if x >= self.hi() {
            return self.ys.last().unwrap().clone();
        }
        let i = self.piece(x);
        if &self.xs[i] == x {
            return self.ys[i].clone();
        }
        &self.ys[i] + self.slope(i) * (x - &self.xs[i])
    }

    /// Minimum and maximum of the map over `[l, r]`.
    pub fn range_on(&self, l: &Rational, r: &Rational) -> (Rational, Rational) {
        let mut lo = self.eval(l);
        let mut hi = lo.clone();
        let mut take = |v: Rational| {
            if v < lo {
                lo = v.clone();
            }
            if v > hi {
                hi = v;
            }
        };
        take(self.eval(r));
        for (x, y) in self.points() {
            if l < x && x < r {
                take(y.clone());
            }
        }
        (lo, hi)
    }

    /// Solutions of `f(x) = level`. Flat pieces at that level contribute their endpoints.
    pub fn preimages(&self, level: &Rational) -> Vec<Rational> {
        let mut out: Vec<Rational> = Vec::new();
        let mut push = |x: Rational| {
            if out.last() != Some(&x) {
                out.push(x);
            }
        };
        if self.xs.len() == 1 {
            if &self.ys[0] == level {
                push(self.xs[0].clone());
            }
            return out;
        }
        for i in 0..self.pieces() {
            let (y0, y1) = (&self.ys[i], &self.ys[i + 1]);
            if y0 == level {
                push(self.xs[i].clone());
            }
            if y0 != y1 {
                let inside = (y0 < level && level < y1) || (y1 < level && level < y0);
                if inside {
                    push(&self.xs[i] + (level - y0) / self.slope(i));
                }
            }
            if i + 1 == self.pieces() && y1 == level {
                push(self.xs[i + 1].clone());
            }
        }
        out
    }

    /// Solutions of `f(x) = x`, with identity pieces reported by their endpoints.
    pub fn fixed_points(&self) -> Vec<Rational> {
        let diff = self.sub_identity();
        diff.preimages(&Rational::zero())
    }

    /// The map `x -> f(x) - x` on the same breakpoints.
    pub fn sub_identity(&self) -> PlMap {
        let ys = self.xs.iter().zip(&self.ys).map(|(x, y)| y - x).collect();
        PlMap { xs: self.xs.clone(), ys }
    }

    /// Interior local extrema (breakpoints where the slope changes sign,
    /// including both ends of flat extremal plateaus).
    pub fn turning_points(&self) -> Vec<Rational> {
        let mut out = Vec::new();
        let signs: Vec<Ordering> = (0..self.pieces()).map(|i| self.ys[i + 1].cmp(&self.ys[i])).collect();
        // collapse flat runs: a turn happens between two non-flat pieces of opposite sign
        let mut last_dir: Option<(usize, Ordering)> = None;
        for (i, s) in signs.iter().enumerate() {
            if *s == Ordering::Equal {
                continue;
            }
            if let Some((j, d)) = last_dir {
                if d != *s {
                    // plateau between pieces j and i spans x_{j+1} .. x_i
                    out.push(self.xs[j + 1].clone());
                    if i > j + 1 {
                        out.push(self.xs[i].clone());
                    }
                }
            }
            last_dir = Some((i, *s));
        }
        out
    }

    /// `f` restricted to `[l, r]`, which must lie inside the domain.
    pub fn restrict(&self, l: &Rational, r: &Rational) -> Result<PlMap> {
        if !(self.contains(l) && self.contains(r)) || l > r {
            return Err(Error::InvalidMap("restriction outside the domain".into()));
        }
        let mut pts = alloc::vec![(l.clone(), self.eval(l))];
        for (x, y) in self.points() {
            if l < x && x < r {
                pts.push((x.clone(), y.clone()));
            }
        }
        if r != l {
            pts.push((r.clone(), self.eval(r)));
        }
        PlMap::new(pts)
    }

    /// Conjugate by the affine map sending `[lo, hi]` onto `[0, 1]`.
    pub fn rescale(&self, lo: &Rational, hi: &Rational) -> PlMap {
        let w = hi - lo;
        let t = |v: &Rational| (v - lo) / &w;
        PlMap { xs: self.xs.iter().map(t).collect(), ys: self.ys.iter().map(t).collect() }
    }

    /// Conjugate by an arbitrary affine change of variables `x -> scale*x + shift`.
    pub fn conjugate_affine(&self, scale: &Rational, shift: &Rational) -> PlMap {
        let t = |v: &Rational| scale * v + shift;
        let mut xs: Vec<Rational> = self.xs.iter().map(t).collect();
        let mut ys: Vec<Rational> = self.ys.iter().map(t).collect();
        if scale.is_negative() {
            xs.reverse();
            ys.reverse();
        }
        PlMap { xs, ys }
    }

    /// `x -> min(f(x), level)`, with the plateau inserted exactly.
    pub fn cap(&self, level: &Rational) -> PlMap {
        let mut pts: Vec<(Rational, Rational)> = Vec::new();
        for i in 0..self.len() {
            if i > 0 {
                let (y0, y1) = (&self.ys[i - 1], &self.ys[i]);
                if (y0 < level && level < y1) || (y1 < level && level < y0) {
                    let x = &self.xs[i - 1] + (level - y0) / self.slope(i - 1);
                    pts.push((x, level.clone()));
                }
            }
            pts.push((self.xs[i].clone(), self.ys[i].min_of(level).clone()));
        }
        PlMap::new(pts).expect("capping keeps breakpoints ordered").simplified()
    }

    /// Multiplies every value by `k`.
    pub fn scale_values(&self, k: &Rational) -> PlMap {
        PlMap { xs: self.xs.clone(), ys: self.ys.iter().map(|y| k * y).collect() }
    }

    /// Drops breakpoints where the slope does not change.
    pub fn simplified(&self) -> PlMap {
        if self.len() <= 2 {
            return self.clone();
        }
        let mut xs = alloc::vec![self.xs[0].clone()];
        let mut ys = alloc::vec![self.ys[0].clone()];
        for i in 1..self.len() - 1 {
            let s0 = (&self.ys[i] - ys.last().unwrap()) / (&self.xs[i] - xs.last().unwrap());
            let s1 = self.slope(i);
            if s0 != s1 {
                xs.push(self.xs[i].clone());
                ys.push(self.ys[i].clone());
            }
        }
        xs.push(self.hi().clone());
        ys.push(self.ys.last().unwrap().clone());
        PlMap { xs, ys }
    }

    /// `true` when `f` is monotone (non-strictly) on `[l, r]`.
    pub fn is_monotone_on(&self, l: &Rational, r: &Rational) -> bool {
        let mut vals = alloc::vec![self.eval(l)];
        for (x, y) in self.points() {
            if l < x && x < r {
                vals.push(y.clone());
            }
        }
        vals.push(self.eval(r));
        let up = vals.windows(2).all(|w| w[0] <= w[1]);
        let down = vals.windows(2).all(|w| w[0] >= w[1]);
        up || down
    }

    /// `self ∘ inner` on the domain of `inner`; values of `inner` outside the
    /// domain of `self` are clamped.
    pub fn compose(&self, inner: &PlMap) -> PlMap {
        let mut xs: Vec<Rational> = inner.xs.clone();
        for b in &self.xs {
            xs.extend(inner.preimages(b));
        }
        xs.sort();
        xs.dedup();
        let ys = xs.iter().map(|x| self.eval(&inner.eval(x))).collect();
        PlMap { xs, ys }.simplified()
    }

    /// Iterates `f` `n` times from `x`.
    pub fn iterate(&self, x: &Rational, n: usize) -> Rational {
        let mut y = x.clone();
        for _ in 0..n {
            y = self.eval(&y);
        }
        y
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn gamma13() -> PlMap {
        PlMap::new(vec![(r(0, 1), r(1, 3)), (r(1, 3), r(2, 3)), (r(2, 3), r(0, 1))]).unwrap()
    }

    #[test]
    fn eval_and_fixed_points() {
        let f = gamma13();
        assert_eq!(f.eval(&r(1, 9)), r(4, 9));
        assert_eq!(f.fixed_points(), vec![r(4, 9)]);
        assert_eq!(f.preimages(&r(4, 9)), vec![r(1, 9), r(4, 9)]);
        assert_eq!(f.turning_points(), vec![r(1, 3)]);
    }

    #[test]
    fn rejects_unsorted() {
        assert!(PlMap::new(vec![(r(1, 2), r(0, 1)), (r(1, 3), r(0, 1))]).is_err());
        assert!(PlMap::new(vec![]).is_err());
    }

    #[test]
    fn cap_inserts_plateau() {
        let tent = PlMap::new(vec![(r(0, 1), r(0, 1)), (r(1, 2), r(1, 1)), (r(1, 1), r(0, 1))]).unwrap();
        let t = tent.cap(&r(9, 10));
        assert_eq!(t.eval(&r(1, 2)), r(9, 10));
        assert_eq!(t.xs(), &[r(0, 1), r(9, 20), r(11, 20), r(1, 1)]);
        assert_eq!(t.eval(&r(1, 4)), r(1, 2));
        assert_eq!(t.turning_points(), vec![r(9, 20), r(11, 20)]);
    }

    #[test]
    fn compose_matches_pointwise() {
        let f = gamma13();
        let g = f.compose(&f);
        for k in 0..=60 {
            let x = r(k, 90);
            assert_eq!(g.eval(&x), f.eval(&f.eval(&x)));
        }
    }

    #[test]
    fn range_and_restrict() {
        let f = gamma13();
        assert_eq!(f.range_on(&r(0, 1), &r(2, 3)), (r(0, 1), r(2, 3)));
        let g = f.restrict(&r(1, 9), &r(1, 2)).unwrap();
        assert_eq!(g.xs(), &[r(1, 9), r(1, 3), r(1, 2)]);
        assert!(f.is_monotone_on(&r(1, 3), &r(2, 3)));
        assert!(!f.is_monotone_on(&r(0, 1), &r(2, 3)));
    }
}
