//! Univariate polynomials with rational coefficients and exact real-root
//! isolation by Sturm sequences.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::rational::Rational;

/// `c[0] + c[1] x + c[2] x^2 + ...`, with no trailing zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

/// Location of one real root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Root {
    Exact(Rational),
    /// Exactly one root lies in the open interval.
    Between(Rational, Rational),
}

impl Root {
    pub fn approx(&self) -> f64 {
        match self {
            Root::Exact(r) => r.to_f64(),
            Root::Between(l, r) => l.midpoint(r).to_f64(),
        }
    }
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c.to_f64())
    }

    pub fn derivative(&self) -> Polynomial {
        Polynomial::new(
            self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * Rational::from_integer(i as i64)).collect(),
        )
    }

    pub fn scale(&self, k: &Rational) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = Rational::zero();
        Polynomial::new(
            (0..n).map(|i| self.coeffs.get(i).unwrap_or(&z) - other.coeffs.get(i).unwrap_or(&z)).collect(),
        )
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.sub(&other.scale(&Rational::from_integer(-1)))
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Polynomial::new(out)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&Polynomial::new(vec![c.clone()]));
        }
        acc
    }

    /// `self - x`.
    pub fn minus_identity(&self) -> Polynomial {
        self.sub(&Polynomial::new(vec![Rational::zero(), Rational::one()]))
    }

    fn lead(&self) -> &Rational {
        self.coeffs.last().expect("non-zero polynomial")
    }

    /// Remainder of division by a non-zero `d`.
    pub fn rem(&self, d: &Polynomial) -> Polynomial {
        let mut r = self.coeffs.clone();
        let dd = d.degree().expect("division by zero polynomial");
        let lead = d.lead().clone();
        while r.len() > dd && !r.is_empty() {
            let shift = r.len() - 1 - dd;
            let factor = r.last().unwrap() / &lead;
            for (i, c) in d.coeffs.iter().enumerate() {
                r[i + shift] = &r[i + shift] - &factor * c;
            }
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        Polynomial::new(r)
    }

    /// Quotient by `x - root`, assuming `root` is a root.
    fn deflate(&self, root: &Rational) -> Polynomial {
        let n = self.coeffs.len();
        let mut q = vec![Rational::zero(); n - 1];
        let mut carry = Rational::zero();
        for i in (1..n).rev() {
            carry = &carry * root + &self.coeffs[i];
            q[i - 1] = carry.clone();
        }
        Polynomial::new(q)
    }

    fn sturm_chain(&self) -> Vec<Polynomial> {
        let mut chain = vec![self.clone(), self.derivative()];
        while !chain.last().unwrap().is_zero() {
            let k = chain.len();
            let r = chain[k - 2].rem(&chain[k - 1]);
            chain.push(r.scale(&Rational::from_integer(-1)));
        }
        chain.pop();
        chain
    }

    fn variations(chain: &[Polynomial], x: &Rational) -> usize {
        let mut last = Ordering::Equal;
        let mut v = 0;
        for p in chain {
            let s = p.eval(x).signum();
            if s == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    /// Number of distinct real roots in the open interval `(a, b)`.
    pub fn count_roots_open(&self, a: &Rational, b: &Rational) -> usize {
        if self.is_zero() || a >= b {
            return 0;
        }
        let mut q = self.clone();
        while q.degree().unwrap_or(0) > 0 && q.eval(a).is_zero() {
            q = q.deflate(a);
        }
        while q.degree().unwrap_or(0) > 0 && q.eval(b).is_zero() {
            q = q.deflate(b);
        }
        if q.degree().unwrap_or(0) == 0 {
            return 0;
        }
        let chain = q.sturm_chain();
        Self::variations(&chain, a) - Self::variations(&chain, b)
    }

    /// Every distinct real root in `[a, b]`, left to right, each exact or
    /// isolated in an open interval with non-root rational endpoints.
    pub fn roots_in(&self, a: &Rational, b: &Rational) -> Vec<Root> {
        let mut out = Vec::new();
        if self.is_zero() || a > b {
            return out;
        }
        if self.eval(a).is_zero() {
            out.push(Root::Exact(a.clone()));
        }
        if a < b {
            self.isolate(a.clone(), b.clone(), &mut out);
            if self.eval(b).is_zero() {
                out.push(Root::Exact(b.clone()));
            }
        }
        out
    }

    fn isolate(&self, a: Rational, b: Rational, out: &mut Vec<Root>) {
        let n = self.count_roots_open(&a, &b);
        if n == 0 {
            return;
        }
        if n == 1 {
            if self.degree() == Some(1) {
                let c = self.coeffs();
                out.push(Root::Exact(-(&c[0] / &c[1])));
                return;
            }
            out.push(Root::Between(a, b));
            return;
        }
        let m = a.midpoint(&b);
        self.isolate(a, m.clone(), out);
        if self.eval(&m).is_zero() {
            out.push(Root::Exact(m.clone()));
        }
        self.isolate(m, b, out);
    }

    /// Shrinks an isolating interval until its width is at most `width`.
    pub fn refine(&self, root: &Root, width: &Rational) -> Root {
        let Root::Between(l, r) = root else { return root.clone() };
        let (mut l, mut r) = (l.clone(), r.clone());
        while &(&r - &l) > width {
            let m = l.midpoint(&r);
            if self.eval(&m).is_zero() {
                return Root::Exact(m);
            }
            if self.count_roots_open(&l, &m) > 0 {
                r = m;
            } else {
                l = m;
            }
        }
        Root::Between(l, r)
    }

    /// `Ok(())` when `self >= 0` on `[a, b]`; otherwise a point where it is negative.
    pub fn nonnegative_on(&self, a: &Rational, b: &Rational) -> Result<(), Rational> {
        for x in [a, b] {
            if self.eval(x).is_negative() {
                return Err(x.clone());
            }
        }
        if a < b && !self.is_zero() {
            self.nonnegative_inside(a, b)
        } else {
            Ok(())
        }
    }

    /// Endpoints already checked. Between consecutive roots the sign is constant.
    fn nonnegative_inside(&self, a: &Rational, b: &Rational) -> Result<(), Rational> {
        let n = self.count_roots_open(a, b);
        let (fa, fb) = (self.eval(a), self.eval(b));
        if n == 0 || (n == 1 && !fa.is_zero() && !fb.is_zero()) {
            let m = a.midpoint(b);
            return if n == 0 && self.eval(&m).is_negative() { Err(m) } else { Ok(()) };
        }
        let m = a.midpoint(b);
        if self.eval(&m).is_negative() {
            return Err(m);
        }
        self.nonnegative_inside(a, &m)?;
        self.nonnegative_inside(&m, b)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})x^{i}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn poly(c: &[(i64, i64)]) -> Polynomial {
        Polynomial::new(c.iter().map(|&(n, d)| r(n, d)).collect())
    }

    #[test]
    fn counts_and_isolates() {
        // (x - 1/3)(x - 1/2)(x - 3/4)
        let p = poly(&[(-1, 8), (19, 24), (-19, 12), (1, 1)]);
        assert_eq!(p.eval(&r(1, 3)), Rational::zero());
        assert_eq!(p.count_roots_open(&r(0, 1), &r(1, 1)), 3);
        assert_eq!(p.count_roots_open(&r(1, 3), &r(3, 4)), 1);
        let roots = p.roots_in(&r(0, 1), &r(1, 1));
        assert_eq!(roots.len(), 3);
        assert!(roots.contains(&Root::Exact(r(1, 2))));
        let approx: Vec<f64> = roots.iter().map(|x| p.refine(x, &r(1, 1 << 30)).approx()).collect();
        for (a, b) in approx.iter().zip([1.0 / 3.0, 0.5, 0.75]) {
            assert!((a - b).abs() < 1e-8);
        }
    }

    #[test]
    fn irrational_roots() {
        // x^2 - 2 on [0, 2]
        let p = poly(&[(-2, 1), (0, 1), (1, 1)]);
        let roots = p.roots_in(&r(0, 1), &r(2, 1));
        assert_eq!(roots.len(), 1);
        let x = p.refine(&roots[0], &r(1, 1_000_000_000)).approx();
        assert!((x - 2f64.sqrt()).abs() < 1e-8);
    }

    #[test]
    fn composition() {
        let f = poly(&[(0, 1), (4, 1), (-4, 1)]);
        let ff = f.compose(&f);
        assert_eq!(ff.degree(), Some(4));
        for k in 0..=10 {
            let x = r(k, 10);
            assert_eq!(ff.eval(&x), f.eval(&f.eval(&x)));
        }
        // period-two points of 4x(1-x): (5 ± √5)/8
        let roots = ff.minus_identity().roots_in(&r(0, 1), &r(1, 1));
        assert_eq!(roots.len(), 4);
    }

    #[test]
    fn nonnegativity() {
        // 4x(1-x) - 7/2 x(1-x) = x(1-x)/2 >= 0 on [0, 1]
        let f = poly(&[(0, 1), (4, 1), (-4, 1)]);
        let g = poly(&[(0, 1), (7, 2), (-7, 2)]);
        assert_eq!(f.sub(&g).nonnegative_on(&r(0, 1), &r(1, 1)), Ok(()));
        let w = g.sub(&f).nonnegative_on(&r(0, 1), &r(1, 1)).unwrap_err();
        assert!(g.sub(&f).eval(&w).is_negative());
        // double root touches zero without changing sign
        let sq = poly(&[(1, 4), (-1, 1), (1, 1)]);
        assert_eq!(sq.nonnegative_on(&r(0, 1), &r(1, 1)), Ok(()));
        assert_eq!(Polynomial::zero().nonnegative_on(&r(0, 1), &r(1, 1)), Ok(()));
    }
}
