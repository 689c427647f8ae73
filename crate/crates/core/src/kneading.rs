//! Itineraries over `L < C < R`, the parity-lexicographic order, the
//! rotation kneading sequences `nu_rho` / `nu'_rho`, and recovery of the
//! left endpoint of the over-rotation interval from a kneading sequence.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::graph::{Certificate, RhoResult, Witness};
use crate::pl::PlMap;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    L,
    C,
    R,
}

impl Symbol {
    pub fn as_char(self) -> char {
        match self {
            Symbol::L => 'L',
            Symbol::C => 'C',
            Symbol::R => 'R',
        }
    }

    pub fn from_char(c: char) -> Option<Symbol> {
        match c {
            'L' => Some(Symbol::L),
            'C' => Some(Symbol::C),
            'R' => Some(Symbol::R),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Tail {
    /// The cycle repeats forever.
    Periodic(Vec<Symbol>),
    /// `R` forever.
    AllR,
    /// Nothing is known past the prefix.
    Truncated,
}

/// A symbol sequence: a finite prefix followed by a structured tail.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Itinerary {
    prefix: Vec<Symbol>,
    tail: Tail,
}

impl Itinerary {
    pub fn periodic(cycle: Vec<Symbol>) -> Self {
        Self::eventually_periodic(Vec::new(), cycle)
    }

    pub fn eventually_periodic(prefix: Vec<Symbol>, cycle: Vec<Symbol>) -> Self {
        assert!(!cycle.is_empty(), "empty cycle");
        Itinerary { prefix, tail: Tail::Periodic(cycle) }.normalized()
    }

    pub fn then_all_r(prefix: Vec<Symbol>) -> Self {
        Itinerary { prefix, tail: Tail::AllR }.normalized()
    }

    pub fn truncated(symbols: Vec<Symbol>) -> Self {
        Itinerary { prefix: symbols, tail: Tail::Truncated }
    }

    pub fn prefix(&self) -> &[Symbol] {
        &self.prefix
    }

    pub fn tail(&self) -> &Tail {
        &self.tail
    }

    pub fn is_truncated(&self) -> bool {
        matches!(self.tail, Tail::Truncated)
    }

    /// Number of known symbols for truncated itineraries.
    pub fn depth(&self) -> Option<usize> {
        match self.tail {
            Tail::Truncated => Some(self.prefix.len()),
            _ => None,
        }
    }

    fn cycle(&self) -> Option<&[Symbol]> {
        match &self.tail {
            Tail::Periodic(c) => Some(c),
            Tail::AllR => Some(&[Symbol::R]),
            Tail::Truncated => None,
        }
    }

    pub fn symbol(&self, i: usize) -> Option<Symbol> {
        if i < self.prefix.len() {
            return Some(self.prefix[i]);
        }
        self.cycle().map(|c| c[(i - self.prefix.len()) % c.len()])
    }

    pub fn symbols(&self, n: usize) -> Vec<Symbol> {
        (0..n).map_while(|i| self.symbol(i)).collect()
    }

    /// `sigma^j`.
    pub fn shift(&self, j: usize) -> Itinerary {
        if j <= self.prefix.len() {
            return Itinerary { prefix: self.prefix[j..].to_vec(), tail: self.tail.clone() }.normalized();
        }
        match &self.tail {
            Tail::Truncated => Itinerary::truncated(Vec::new()),
            Tail::AllR => Itinerary::then_all_r(Vec::new()),
            Tail::Periodic(c) => {
                let k = (j - self.prefix.len()) % c.len();
                let mut cyc = c[k..].to_vec();
                cyc.extend_from_slice(&c[..k]);
                Itinerary::periodic(cyc)
            }
        }
    }

    /// Symbols after which two non-truncated sequences must agree forever.
    fn agreement_bound(&self, other: &Itinerary) -> Option<usize> {
        let (a, b) = (self.cycle()?, other.cycle()?);
        Some(self.prefix.len().max(other.prefix.len()) + a.len().lcm(&b.len()))
    }

    /// Primitive cycle, shortest prefix, `R` cycles as the all-`R` tail.
    fn normalized(mut self) -> Self {
        if let Tail::Periodic(c) = &mut self.tail {
            let n = c.len();
            if let Some(d) = (1..=n).find(|&d| n % d == 0 && (0..n).all(|i| c[i] == c[i % d])) {
                c.truncate(d);
            }
            while let Some(&last) = self.prefix.last() {
                if last != *c.last().unwrap() {
                    break;
                }
                self.prefix.pop();
                c.rotate_right(1);
            }
            if c.as_slice() == [Symbol::R] {
                self.tail = Tail::AllR;
            }
        }
        if self.tail == Tail::AllR {
            while self.prefix.last() == Some(&Symbol::R) {
                self.prefix.pop();
            }
        }
        self
    }
}

impl fmt::Display for Itinerary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.prefix {
            write!(f, "{}", s.as_char())?;
        }
        match &self.tail {
            Tail::Periodic(c) => {
                write!(f, "(")?;
                for s in c {
                    write!(f, "{}", s.as_char())?;
                }
                write!(f, ")*")
            }
            Tail::AllR => write!(f, "R*"),
            Tail::Truncated => write!(f, "…@{}", self.prefix.len()),
        }
    }
}

impl FromStr for Itinerary {
    type Err = Error;

    /// `RL(RRC)*`, `RLR*`, `RLRRL…@5` (or `...@5`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(alloc::format!("not an itinerary: {s:?}"));
        let syms = |t: &str| t.chars().map(Symbol::from_char).collect::<Option<Vec<_>>>().ok_or_else(bad);
        if let Some((head, depth)) = s.split_once('@') {
            let head = head.trim_end_matches('…').trim_end_matches("...");
            let prefix = syms(head)?;
            let d: usize = depth.trim().parse().map_err(|_| bad())?;
            if d != prefix.len() {
                return Err(bad());
            }
            return Ok(Itinerary::truncated(prefix));
        }
        if let Some(body) = s.strip_suffix(")*") {
            let (head, cyc) = body.split_once('(').ok_or_else(bad)?;
            let cyc = syms(cyc)?;
            if cyc.is_empty() {
                return Err(bad());
            }
            return Ok(Itinerary::eventually_periodic(syms(head)?, cyc));
        }
        if let Some(head) = s.strip_suffix("R*") {
            return Ok(Itinerary::then_all_r(syms(head)?));
        }
        if let Some(head) = s.strip_suffix('*') {
            // single-symbol cycle such as `RL*`
            let mut v = syms(head)?;
            let last = v.pop().ok_or_else(bad)?;
            return Ok(Itinerary::eventually_periodic(v, vec![last]));
        }
        Err(bad())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    AGreater,
    BGreater,
    EqualToDepth,
}

/// Parity-lexicographic comparison of the first `depth` symbols.
pub fn mt_compare(a: &Itinerary, b: &Itinerary, depth: usize) -> Comparison {
    let mut odd = false;
    for j in 0..depth {
        let (Some(x), Some(y)) = (a.symbol(j), b.symbol(j)) else {
            return Comparison::EqualToDepth;
        };
        if x != y {
            let a_bigger = (x > y) != odd;
            return if a_bigger { Comparison::AGreater } else { Comparison::BGreater };
        }
        if x == Symbol::R {
            odd = !odd;
        }
    }
    Comparison::EqualToDepth
}

/// Decides the order when both are eventually periodic, or when a difference
/// shows up within the known symbols.
pub fn compare_exact(a: &Itinerary, b: &Itinerary, budget: usize) -> Option<Ordering> {
    match a.agreement_bound(b) {
        Some(bound) if bound <= budget => Some(match mt_compare(a, b, bound) {
            Comparison::AGreater => Ordering::Greater,
            Comparison::BGreater => Ordering::Less,
            Comparison::EqualToDepth => Ordering::Equal,
        }),
        _ => match mt_compare(a, b, budget) {
            Comparison::AGreater => Some(Ordering::Greater),
            Comparison::BGreater => Some(Ordering::Less),
            Comparison::EqualToDepth => None,
        },
    }
}

/// `A ⪰ sigma^j(A)` for every `0 < j < depth`, compared to `depth` symbols.
pub fn is_shift_maximal(a: &Itinerary, depth: usize) -> bool {
    (1..depth).all(|j| mt_compare(a, &a.shift(j), depth) != Comparison::BGreater)
}

fn rotation_symbol(k: i64, p: i64) -> Symbol {
    if k == 0 {
        Symbol::C
    } else if k < 2 * p {
        Symbol::R
    } else {
        Symbol::L
    }
}

fn check_rho(p: i64, q: i64) -> Result<()> {
    if p <= 0 || q <= 0 || 2 * p > q {
        return Err(Error::RhoOutOfRange);
    }
    Ok(())
}

/// `nu_{p/q}`: symbol `n` read off `(n+1)p mod q`.
pub fn nu_rho(p: i64, q: i64) -> Result<Itinerary> {
    check_rho(p, q)?;
    let g = p.gcd(&q);
    let (p, q) = (p / g, q / g);
    let cycle = (0..q).map(|n| rotation_symbol((n + 1) * p % q, p)).collect();
    Ok(Itinerary::periodic(cycle))
}

/// First `len` symbols of `nu_x` for a real `x` given exactly, as a truncated itinerary.
pub fn nu_real(x: &Rational, len: usize) -> Result<Itinerary> {
    if !x.is_positive() || x > &Rational::half() {
        return Err(Error::RhoOutOfRange);
    }
    let two_x = x + x;
    let mut syms = Vec::with_capacity(len);
    for n in 0..len {
        let t = (x * Rational::from_integer(n as i64 + 1)).fract_pos();
        syms.push(if t.is_zero() {
            Symbol::C
        } else if t < two_x {
            Symbol::R
        } else {
            Symbol::L
        });
    }
    Ok(Itinerary::truncated(syms))
}

/// `nu'_{p/q}`: the first `q-1` symbols of `nu_{p/q}`, then `L`, then `R` forever.
pub fn nu_prime(p: i64, q: i64) -> Result<Itinerary> {
    check_rho(p, q)?;
    if p.gcd(&q) != 1 {
        return Err(Error::RotationDomain { p, q });
    }
    let nu = nu_rho(p, q)?;
    let mut prefix = nu.symbols(q as usize - 1);
    prefix.push(Symbol::L);
    Ok(Itinerary::then_all_r(prefix))
}

/// Limit of `nu_x` as `x` decreases to `p/q`: `C` becomes whichever of
/// `L`, `R` makes the sequence smaller. The `gamma_{p/q}` orbit exists iff the
/// kneading sequence is at least this.
pub fn nu_lower(p: i64, q: i64) -> Result<Itinerary> {
    check_rho(p, q)?;
    if p.gcd(&q) != 1 {
        return Err(Error::RotationDomain { p, q });
    }
    let cycle = (0..q).map(|n| if (n + 1) * p % q < 2 * p { Symbol::R } else { Symbol::L }).collect();
    Ok(Itinerary::periodic(cycle))
}

/// Limit of `nu_x` as `x` increases to `p/q`. Kneading sequences above it
/// have some over-rotation number below `p/q`.
pub fn nu_upper(p: i64, q: i64) -> Result<Itinerary> {
    check_rho(p, q)?;
    if p.gcd(&q) != 1 {
        return Err(Error::RotationDomain { p, q });
    }
    let symbol = |n: i64| {
        let k = match (n + 1) * p % q {
            0 => q,
            k => k,
        };
        if k < 2 * p || (k == 2 * p && n > 1) {
            Symbol::R
        } else {
            Symbol::L
        }
    };
    let prefix = (0..2).map(symbol).collect();
    let cycle = (2..q + 2).map(symbol).collect();
    Ok(Itinerary::eventually_periodic(prefix, cycle))
}

/// Itinerary of `x` under a piecewise-linear map whose turning set is
/// `[c_lo, c_hi]` (a point, or the top plateau of a truncation). Periodicity
/// is detected exactly; after `length` iterates without repetition the result
/// is truncated.
pub fn itinerary_pl(map: &PlMap, c_lo: &Rational, c_hi: &Rational, x: &Rational, length: usize) -> Itinerary {
    let mut seen: BTreeMap<Rational, usize> = BTreeMap::new();
    let mut syms = Vec::new();
    let mut y = x.clone();
    for i in 0..length {
        if let Some(&j) = seen.get(&y) {
            let cycle = syms.split_off(j);
            return Itinerary::eventually_periodic(syms, cycle);
        }
        seen.insert(y.clone(), i);
        syms.push(if &y < c_lo {
            Symbol::L
        } else if &y > c_hi {
            Symbol::R
        } else {
            Symbol::C
        });
        y = map.eval(&y);
    }
    Itinerary::truncated(syms)
}

/// Itinerary under a floating-point map; stops (truncated) when an iterate
/// falls within `band` of the turning point.
pub fn itinerary_f64<F: Fn(f64) -> f64>(f: F, c: f64, band: f64, x: f64, length: usize) -> Itinerary {
    let mut syms = Vec::with_capacity(length);
    let mut y = x;
    for _ in 0..length {
        if !y.is_finite() || (y - c).abs() <= band {
            break;
        }
        syms.push(if y < c { Symbol::L } else { Symbol::R });
        y = f(y);
    }
    Itinerary::truncated(syms)
}

/// Default comparison budget for [`rho_from_kneading`].
pub const DEFAULT_DEPTH: usize = 4096;

/// Left endpoint of the over-rotation interval determined by a kneading
/// sequence, by Stern–Brocot descent on `[0, 1/2]`.
///
/// At a mediant `m`, `K ≻ nu_upper(m)` puts the endpoint below `m`,
/// `K ≺ nu_lower(m)` puts it above, and anything in between is exactly `m`.
/// Both `nu_m` and `nu'_m` lie in that range. Undecidable comparisons or a
/// bracket narrower than `tolerance` end the search with a bracket.
pub fn rho_from_kneading(k: &Itinerary, tolerance: &Rational, depth: usize) -> Result<RhoResult> {
    match k.symbol(0) {
        Some(Symbol::R) => {}
        _ => return Err(Error::TrivialKneading(alloc::format!("{k} does not start with R"))),
    }
    let full = Itinerary::eventually_periodic(vec![Symbol::R], vec![Symbol::L]);
    if k == &full {
        return Ok(RhoResult::exact(Rational::zero(), Witness::Kneading { p: 0, q: 1 }));
    }
    let bracket = |lo: (i64, i64), hi: (i64, i64), lower: Certificate, upper: Certificate, d: usize| {
        RhoResult::Bracket {
            lo: Rational::new(lo.0, lo.1),
            hi: Rational::new(hi.0, hi.1),
            lower,
            upper,
            depth: d,
        }
    };
    // the top of the range first
    let half_nu = nu_rho(1, 2)?;
    let half_prime = nu_prime(1, 2)?;
    let mut lo = (0i64, 1i64);
    let mut hi = (1i64, 2i64);
    let mut lower = Certificate::Range;
    let mut upper = Certificate::Range;
    match compare_exact(k, &half_prime, depth) {
        None => return Ok(bracket(lo, hi, lower, upper, depth)),
        Some(Ordering::Greater) => upper = Certificate::Kneading { p: 1, q: 2 },
        Some(_) => match compare_exact(k, &half_nu, depth) {
            None => return Ok(bracket(lo, hi, lower, upper, depth)),
            Some(Ordering::Less) => {
                return Err(Error::TrivialKneading(alloc::format!("{k} is below nu_1/2: every periodic point is fixed")))
            }
            Some(_) => return Ok(RhoResult::exact(Rational::half(), Witness::Kneading { p: 1, q: 2 })),
        },
    }
    loop {
        if Rational::new(hi.0, hi.1) - Rational::new(lo.0, lo.1) <= *tolerance {
            return Ok(bracket(lo, hi, lower, upper, depth));
        }
        let m = (lo.0 + hi.0, lo.1 + hi.1);
        if m.1 as usize > depth {
            return Ok(bracket(lo, hi, lower, upper, depth));
        }
        let upper_m = nu_upper(m.0, m.1)?;
        match compare_exact(k, &upper_m, depth) {
            None => return Ok(bracket(lo, hi, lower, upper, depth)),
            Some(Ordering::Greater) => {
                hi = m;
                upper = Certificate::Kneading { p: m.0, q: m.1 };
                continue;
            }
            Some(_) => {}
        }
        let lower_m = nu_lower(m.0, m.1)?;
        match compare_exact(k, &lower_m, depth) {
            None => return Ok(bracket(lo, hi, lower, upper, depth)),
            Some(Ordering::Less) => {
                lo = m;
                lower = Certificate::Kneading { p: m.0, q: m.1 };
            }
            Some(_) => return Ok(RhoResult::exact(Rational::new(m.0, m.1), Witness::Kneading { p: m.0, q: m.1 })),
        }
    }
}

/// Text of an itinerary's first `n` symbols.
pub fn symbols_string(it: &Itinerary, n: usize) -> String {
    it.symbols(n).into_iter().map(Symbol::as_char).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::gcd_u64;
    use alloc::string::ToString;
    use num_bigint::BigInt;

    fn it(s: &str) -> Itinerary {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        for s in ["(RLRRC)*", "RLRRLR*", "R(L)*", "R(C)*", "RLR…@3"] {
            assert_eq!(it(s).to_string(), s);
        }
        assert_eq!(it("RL*"), it("RL(L)*"));
        assert_eq!(it("RL(L)*").to_string(), "R(L)*");
        assert_eq!(it("(RLRLRL)*").to_string(), "(RL)*");
        assert_eq!(it("RL(RL)*").to_string(), "(RL)*");
        assert_eq!(it("RLR(R)*").to_string(), "RLR*");
        assert_eq!(it("RLR...@3"), it("RLR…@3"));
        assert!("RX*".parse::<Itinerary>().is_err());
        assert!("RL@5".parse::<Itinerary>().is_err());
        assert!("()*".parse::<Itinerary>().is_err());
    }

    #[test]
    fn comparisons() {
        assert_eq!(mt_compare(&it("RLRRLR*"), &it("(RLRRC)*"), 50), Comparison::AGreater);
        assert_eq!(mt_compare(&it("(RLC)*"), &it("(RLRRC)*"), 50), Comparison::AGreater);
        let x = it("(RLRRC)*");
        assert_eq!(mt_compare(&x, &x, 100), Comparison::EqualToDepth);
        assert_eq!(compare_exact(&x, &x, 100), Some(Ordering::Equal));
        assert_eq!(compare_exact(&it("RLR…@3"), &it("RLR*"), 100), None);
    }

    #[test]
    fn shift_maximality() {
        assert!(is_shift_maximal(&it("(RLRRC)*"), 20));
        assert!(is_shift_maximal(&it("(RC)*"), 20));
        assert!(!is_shift_maximal(&it("(LRC)*"), 20));
        assert!(!is_shift_maximal(&it("(LR)*"), 20));
    }

    #[test]
    fn rotation_sequences() {
        assert_eq!(nu_rho(1, 2).unwrap().to_string(), "(RC)*");
        assert_eq!(nu_rho(2, 5).unwrap().to_string(), "(RLRRC)*");
        assert_eq!(nu_rho(1, 3).unwrap().to_string(), "(RLC)*");
        assert_eq!(nu_prime(1, 2).unwrap().to_string(), "RLR*");
        assert_eq!(nu_prime(2, 5).unwrap().to_string(), "RLRRLR*");
        assert_eq!(nu_prime(1, 3).unwrap().to_string(), "RLLR*");
        assert!(nu_rho(3, 5).is_err());
        assert!(nu_rho(0, 5).is_err());
    }

    /// Independent ν for irrational ρ: floor arithmetic on a big-integer
    /// approximation of (3 - √5)/2 with 60 decimal digits.
    #[test]
    fn golden_rotation_prefix() {
        let scale = num_traits::pow(BigInt::from(10u32), 60);
        let s5 = (BigInt::from(5) * &scale * &scale).sqrt();
        let numer = BigInt::from(3) * &scale - s5;
        let x = Rational::from_bigs(numer, BigInt::from(2) * &scale).unwrap();
        let nu = nu_real(&x, 5).unwrap();
        assert_eq!(symbols_string(&nu, 5), "RLRRL");
        // rigid-rotation oracle in f64 for the first 30 symbols
        let rho = (3.0 - 5f64.sqrt()) / 2.0;
        let long = nu_real(&x, 30).unwrap();
        for n in 0..30 {
            let t = ((n + 1) as f64 * rho).fract();
            let expect = if t < 2.0 * rho - 1e-12 { 'R' } else { 'L' };
            if (t - 2.0 * rho).abs() > 1e-9 {
                assert_eq!(long.symbol(n).unwrap().as_char(), expect, "n={n}");
            }
        }
    }

    #[test]
    fn rotation_sequences_are_ordered() {
        let mut rats = Vec::new();
        for q in 2..=20i64 {
            for p in 1..=q / 2 {
                if gcd_u64(p as u64, q as u64) == 1 {
                    rats.push((p, q));
                }
            }
        }
        for &(p, q) in &rats {
            let nu = nu_rho(p, q).unwrap();
            let pr = nu_prime(p, q).unwrap();
            assert_eq!(compare_exact(&pr, &nu, 10_000), Some(Ordering::Greater));
            for &(s, t) in &rats {
                if p * t < s * q {
                    let other = nu_rho(s, t).unwrap();
                    assert_eq!(compare_exact(&nu, &other, 10_000), Some(Ordering::Greater), "{p}/{q} vs {s}/{t}");
                }
            }
        }
    }

    #[test]
    fn classifier_endpoints() {
        let tol = Rational::new(1, 1_000_000);
        let rho = |s: &str| rho_from_kneading(&it(s), &tol, DEFAULT_DEPTH).unwrap();
        assert_eq!(rho("(RLRRC)*").value(), Some(&Rational::new(2, 5)));
        assert_eq!(rho("RLRRLR*").value(), Some(&Rational::new(2, 5)));
        assert_eq!(rho("RL*").value(), Some(&Rational::zero()));
        assert_eq!(rho("(RC)*").value(), Some(&Rational::half()));
        assert_eq!(rho("RLR*").value(), Some(&Rational::half()));
        assert!(matches!(rho_from_kneading(&it("R*"), &tol, 100), Err(Error::TrivialKneading(_))));
        assert!(matches!(rho_from_kneading(&it("L*"), &tol, 100), Err(Error::TrivialKneading(_))));
        for q in 2..=20i64 {
            for p in 1..=q / 2 {
                if gcd_u64(p as u64, q as u64) == 1 {
                    let want = Rational::new(p, q);
                    let a = rho_from_kneading(&nu_rho(p, q).unwrap(), &tol, DEFAULT_DEPTH).unwrap();
                    let b = rho_from_kneading(&nu_prime(p, q).unwrap(), &tol, DEFAULT_DEPTH).unwrap();
                    assert_eq!(a.value(), Some(&want));
                    assert_eq!(b.value(), Some(&want));
                }
            }
        }
    }

    #[test]
    fn one_sided_limits() {
        assert_eq!(nu_lower(1, 3).unwrap().to_string(), "(RLR)*");
        assert_eq!(nu_upper(1, 3).unwrap().to_string(), "RL(LRR)*");
        assert_eq!(symbols_string(&nu_upper(1, 2).unwrap(), 12), symbols_string(&nu_prime(1, 2).unwrap(), 12));
        let eps = Rational::new(1, 1_000_000_000);
        for q in 2..=15i64 {
            for p in 1..=q / 2 {
                if gcd_u64(p as u64, q as u64) != 1 {
                    continue;
                }
                let m = Rational::new(p, q);
                let (lo, hi) = (nu_lower(p, q).unwrap(), nu_upper(p, q).unwrap());
                let n = 6 * q as usize;
                let below = nu_real(&(&m - &eps), n).unwrap();
                assert_eq!(symbols_string(&hi, n), symbols_string(&below, n), "{p}/{q}");
                if 2 * p < q {
                    let above = nu_real(&(&m + &eps), n).unwrap();
                    assert_eq!(symbols_string(&lo, n), symbols_string(&above, n), "{p}/{q}");
                }
                let nu = nu_rho(p, q).unwrap();
                let nu_p = nu_prime(p, q).unwrap();
                assert_ne!(compare_exact(&lo, &nu, 200), Some(Ordering::Greater));
                assert_ne!(compare_exact(&nu, &nu_p, 200), Some(Ordering::Greater));
                assert_ne!(compare_exact(&nu_p, &hi, 200), Some(Ordering::Greater));
            }
        }
    }

    #[test]
    fn window_edges_keep_the_rotation_number() {
        // saddle-node side of the period-3 window, and a period-6 map above nu'_{1/3}
        let tol = Rational::new(1, 1_000_000);
        for s in ["(RLR)*", "(RLL)*", "(RLLRRC)*", "RL(LRR)*"] {
            let res = rho_from_kneading(&it(s), &tol, DEFAULT_DEPTH).unwrap();
            assert_eq!(res.value(), Some(&Rational::new(1, 3)), "{s}");
        }
        let res = rho_from_kneading(&it("RLLLR*"), &tol, DEFAULT_DEPTH).unwrap();
        assert!(res.hi() < &Rational::new(1, 3));
    }

    #[test]
    fn irrational_gives_bracket() {
        let scale = num_traits::pow(BigInt::from(10u32), 40);
        let s5 = (BigInt::from(5) * &scale * &scale).sqrt();
        let x = Rational::from_bigs(BigInt::from(3) * &scale - s5, BigInt::from(2) * &scale).unwrap();
        let k = nu_real(&x, 200).unwrap();
        let tol = Rational::new(1, 1000);
        let res = rho_from_kneading(&k, &tol, 200).unwrap();
        assert!(!res.is_exact());
        assert!(res.contains(&x));
        assert!(res.width() <= tol);
    }

    #[test]
    fn pl_itineraries() {
        let r = |a, b| Rational::new(a, b);
        let tent = PlMap::new(vec![(r(0, 1), r(0, 1)), (r(1, 2), r(1, 1)), (r(1, 1), r(0, 1))]).unwrap();
        let c = r(1, 2);
        assert_eq!(itinerary_pl(&tent, &c, &c, &r(1, 1), 50).to_string(), "R(L)*");
        assert_eq!(itinerary_pl(&tent, &c, &c, &c, 50).symbol(0), Some(Symbol::C));
        let g = PlMap::new((0..5).map(|i| (r(i, 5), r([2, 4, 3, 1, 0][i as usize], 5))).collect()).unwrap();
        let c = r(1, 5);
        assert_eq!(symbols_string(&itinerary_pl(&g, &c, &c, &r(2, 5), 50), 3), "RRC");
        assert_eq!(itinerary_pl(&g, &c, &c, &r(4, 5), 50).to_string(), "(RLRRC)*");
    }
}
