//! Sharkovskii ordering, over-rotation pairs and the forcing order between
//! pairs.

use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::graph::RhoResult;
use crate::rational::{gcd_u64, Rational};

/// Splits `m` as `2^a * b` with `b` odd.
fn two_adic(m: u64) -> (u32, u64) {
    let a = m.trailing_zeros();
    (a, m >> a)
}

/// `true` iff `m` is strictly sharper than `n` in the Sharkovskii ordering
///
/// `3, 5, 7, ..., 2*3, 2*5, ..., 4*3, ..., 8, 4, 2, 1`.
pub fn sharkovskii_sharper(m: u64, n: u64) -> bool {
    assert!(m >= 1 && n >= 1, "Sharkovskii ordering is defined on positive integers");
    if m == n {
        return false;
    }
    let (a, b) = two_adic(m);
    let (c, d) = two_adic(n);
    match (b == 1, d == 1) {
        // both powers of two: larger exponent first
        (true, true) => a > c,
        (false, true) => true,
        (true, false) => false,
        (false, false) => a < c || (a == c && b < d),
    }
}

/// Total order comparator: `Ordering::Greater` means `m` is sharper.
pub fn sharkovskii_cmp(m: u64, n: u64) -> Ordering {
    if m == n {
        Ordering::Equal
    } else if sharkovskii_sharper(m, n) {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

/// A tail `Sh(k)` of the Sharkovskii ordering.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PeriodSet {
    /// `{m : k ⪰ m}`.
    Tail(u64),
    /// `{1, 2, 4, 8, ...}`.
    PowersOfTwo,
    /// Every positive integer (the same set as `Tail(3)`).
    All,
}

impl PeriodSet {
    pub fn contains(&self, m: u64) -> bool {
        if m == 0 {
            return false;
        }
        match *self {
            PeriodSet::Tail(k) => k == m || sharkovskii_sharper(k, m),
            PeriodSet::PowersOfTwo => m.is_power_of_two(),
            PeriodSet::All => true,
        }
    }
}

/// Token accepted by [`sharkovskii_tail`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShTail {
    Finite(u64),
    TwoToInfinity,
}

pub fn sharkovskii_tail(k: ShTail) -> PeriodSet {
    match k {
        ShTail::Finite(3) => PeriodSet::All,
        ShTail::Finite(k) => PeriodSet::Tail(k),
        ShTail::TwoToInfinity => PeriodSet::PowersOfTwo,
    }
}

/// `(l, p)`: half the number of direction switches along a cycle, and its period.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OverRotationPair {
    crossings: u64,
    period: u64,
}

impl OverRotationPair {
    pub fn new(crossings: u64, period: u64) -> Result<Self> {
        if crossings == 0 || 2 * crossings > period {
            return Err(Error::InvalidPair { crossings, period });
        }
        Ok(OverRotationPair { crossings, period })
    }

    pub fn crossings(&self) -> u64 {
        self.crossings
    }

    pub fn period(&self) -> u64 {
        self.period
    }

    pub fn rho(&self) -> Rational {
        Rational::new(self.crossings as i64, self.period as i64)
    }

    pub fn is_coprime(&self) -> bool {
        gcd_u64(self.crossings, self.period) == 1
    }
}

impl fmt::Display for OverRotationPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.crossings, self.period)
    }
}

/// Whether a cycle with pair `strong` forces one with pair `weak`.
///
/// Either `rho(weak)` lies in `(rho(strong), 1/2]`, or both reduce to the same
/// `m/n` and the multiplicities compare in the Sharkovskii order.
pub fn pair_forces(strong: &OverRotationPair, weak: &OverRotationPair) -> bool {
    let s = strong.rho();
    let w = weak.rho();
    match s.cmp(&w) {
        Ordering::Less => w <= Rational::half(),
        Ordering::Greater => false,
        Ordering::Equal => {
            let m = gcd_u64(strong.crossings, strong.period);
            let reduced = strong.crossings / m;
            sharkovskii_sharper(strong.crossings / reduced, weak.crossings / reduced)
        }
    }
}

/// `I_f = [rho_f, 1/2]`, or the degenerate case where every periodic point is fixed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RotationInterval {
    Trivial,
    Interval { left: RhoResult },
}

impl RotationInterval {
    pub fn right() -> Rational {
        Rational::half()
    }

    pub fn is_trivial(&self) -> bool {
        matches!(self, RotationInterval::Trivial)
    }

    pub fn left(&self) -> Option<&RhoResult> {
        match self {
            RotationInterval::Trivial => None,
            RotationInterval::Interval { left } => Some(left),
        }
    }
}
