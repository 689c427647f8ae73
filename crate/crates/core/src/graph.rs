//! Transition graphs of piecewise-linear maps, minimum mean cycles, and the
//! periodic points generated by closed walks.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::error::{Error, Result};
use crate::orders::OverRotationPair;
use crate::pl::PlMap;
use crate::rational::Rational;

/// Which arcs carry weight 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightKind {
    /// Arcs from a vertex right of `a` to a vertex left of `a`.
    Crossing,
    /// Every arc leaving a vertex right of `a`.
    OutOfRight,
}

/// Covering graph over a partition of the domain: `i -> j` iff `f(I_i) ⊇ I_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionGraph {
    vertices: Vec<(Rational, Rational)>,
    right: Vec<bool>,
    succ: Vec<Vec<usize>>,
    a: Rational,
}

impl TransitionGraph {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex(&self, i: usize) -> &(Rational, Rational) {
        &self.vertices[i]
    }

    pub fn vertices(&self) -> &[(Rational, Rational)] {
        &self.vertices
    }

    pub fn fixed_point(&self) -> &Rational {
        &self.a
    }

    pub fn is_right(&self, i: usize) -> bool {
        self.right[i]
    }

    pub fn successors(&self, i: usize) -> &[usize] {
        &self.succ[i]
    }

    pub fn has_arc(&self, i: usize, j: usize) -> bool {
        self.succ[i].binary_search(&j).is_ok()
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.succ.iter().enumerate().flat_map(|(i, s)| s.iter().map(move |&j| (i, j)))
    }

    pub fn weight(&self, i: usize, j: usize, kind: WeightKind) -> i64 {
        match kind {
            WeightKind::Crossing => (self.right[i] && !self.right[j]) as i64,
            WeightKind::OutOfRight => self.right[i] as i64,
        }
    }

    /// One arc per line, `i j w_cross w_right`, vertices numbered from 1 left to right.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (i, j) in self.arcs() {
            let _ = writeln!(
                out,
                "{} {} {} {}",
                i + 1,
                j + 1,
                self.weight(i, j, WeightKind::Crossing),
                self.weight(i, j, WeightKind::OutOfRight)
            );
        }
        out
    }

    /// Subgraph on the vertices accepted by `keep`, renumbered in order.
    pub fn restrict<F: Fn(&(Rational, Rational)) -> bool>(&self, keep: F) -> (TransitionGraph, Vec<usize>) {
        let kept: Vec<usize> = (0..self.len()).filter(|&i| keep(&self.vertices[i])).collect();
        let mut index = vec![usize::MAX; self.len()];
        for (new, &old) in kept.iter().enumerate() {
            index[old] = new;
        }
        let succ = kept
            .iter()
            .map(|&i| self.succ[i].iter().filter(|&&j| index[j] != usize::MAX).map(|&j| index[j]).collect())
            .collect();
        let g = TransitionGraph {
            vertices: kept.iter().map(|&i| self.vertices[i].clone()).collect(),
            right: kept.iter().map(|&i| self.right[i]).collect(),
            succ,
            a: self.a.clone(),
        };
        (g, kept)
    }

    /// Vertex containing `x` (the leftmost one when `x` is a cut point).
    pub fn locate(&self, x: &Rational) -> Option<usize> {
        self.vertices.iter().position(|(l, r)| l <= x && x <= r)
    }
}

/// Builds the covering graph of `map` over the partition cut at its breakpoints
/// and at `markers`. The fixed point `a` (the rightmost fixed point of the map)
/// must be a breakpoint or a marker.
pub fn transition_graph(map: &PlMap, markers: &[Rational]) -> Result<TransitionGraph> {
    let a = map
        .fixed_points()
        .into_iter()
        .max()
        .ok_or_else(|| Error::MissingFixedPoint(String::from("map has no fixed point")))?;
    if !markers.contains(&a) && !map.xs().contains(&a) {
        return Err(Error::MissingFixedPoint(alloc::format!("{a}")));
    }
    Ok(graph_on_cuts(map, markers, &a))
}

/// Covering graph with an explicitly chosen fixed point `a` (added as a cut).
pub fn graph_on_cuts(map: &PlMap, markers: &[Rational], a: &Rational) -> TransitionGraph {
    let mut cuts: BTreeSet<Rational> = map.xs().iter().cloned().collect();
    for m in markers.iter().chain(core::iter::once(a)) {
        if map.contains(m) {
            cuts.insert(m.clone());
        }
    }
    let cuts: Vec<Rational> = cuts.into_iter().collect();
    let vertices: Vec<(Rational, Rational)> = cuts.windows(2).map(|w| (w[0].clone(), w[1].clone())).collect();
    if vertices.is_empty() {
        // a single point: one degenerate self-covering vertex
        let p = cuts[0].clone();
        return TransitionGraph {
            vertices: vec![(p.clone(), p)],
            right: vec![false],
            succ: vec![vec![0]],
            a: a.clone(),
        };
    }
    let right: Vec<bool> = vertices.iter().map(|(l, _)| l >= a).collect();
    let succ = vertices
        .iter()
        .map(|(l, r)| {
            let (lo, hi) = map.range_on(l, r);
            vertices
                .iter()
                .enumerate()
                .filter(|(_, (u, v))| lo <= *u && *v <= hi)
                .map(|(j, _)| j)
                .collect()
        })
        .collect();
    TransitionGraph { vertices, right, succ, a: a.clone() }
}

/// Evidence attached to an exact rotation number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// Vertex cycle of a transition graph and its total weight.
    Cycle { vertices: Vec<usize>, weight: i64 },
    /// A periodic orbit in order of iteration.
    Orbit(Vec<Rational>),
    /// A fixed point in `[lo, hi]` left of the turning point: every
    /// over-rotation number occurs.
    Horseshoe { lo: Rational, hi: Rational },
    /// A point of the given period in `[lo, hi]`, located by exact root counting.
    IsolatedOrbit { period: usize, lo: Rational, hi: Rational },
    /// `G^q(x) = x + p` for the monotone lift.
    LiftPoint { x: Rational, p: i64, q: i64 },
    /// The kneading sequence lies between `nu_{p/q}` and `nu'_{p/q}`.
    Kneading { p: i64, q: i64 },
}

/// Why one side of a bracket holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// Sign of `G^q(x) - x - p`; `exact` is false for sampled floating-point evidence.
    Lift { p: i64, q: i64, exact: bool },
    /// Comparison against `nu_{p/q}` or `nu'_{p/q}`.
    Kneading { p: i64, q: i64 },
    /// An end of the admissible range `[0, 1/2]`.
    Range,
}

/// An exact rotation number with a witness, or a closed bracket.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RhoResult {
    Exact { value: Rational, witness: Witness },
    Bracket { lo: Rational, hi: Rational, lower: Certificate, upper: Certificate, depth: usize },
}

impl RhoResult {
    pub fn exact(value: Rational, witness: Witness) -> Self {
        RhoResult::Exact { value, witness }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, RhoResult::Exact { .. })
    }

    pub fn value(&self) -> Option<&Rational> {
        match self {
            RhoResult::Exact { value, .. } => Some(value),
            RhoResult::Bracket { .. } => None,
        }
    }

    pub fn lo(&self) -> &Rational {
        match self {
            RhoResult::Exact { value, .. } => value,
            RhoResult::Bracket { lo, .. } => lo,
        }
    }

    pub fn hi(&self) -> &Rational {
        match self {
            RhoResult::Exact { value, .. } => value,
            RhoResult::Bracket { hi, .. } => hi,
        }
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.lo() <= x && x <= self.hi()
    }

    pub fn width(&self) -> Rational {
        self.hi() - self.lo()
    }
}

/// Mean weight of a vertex cycle (consecutive entries joined, last back to first).
pub fn cycle_mean(graph: &TransitionGraph, cycle: &[usize], kind: WeightKind) -> Rational {
    let w = cycle_weight(graph, cycle, kind);
    Rational::new(w, cycle.len() as i64)
}

fn cycle_weight(graph: &TransitionGraph, cycle: &[usize], kind: WeightKind) -> i64 {
    (0..cycle.len()).map(|i| graph.weight(cycle[i], cycle[(i + 1) % cycle.len()], kind)).sum()
}

/// Minimum over directed cycles of mean weight, with a cycle attaining it.
///
/// Karp's recurrence on integer weights gives the value; a witness is then any
/// cycle of tight arcs after reweighting by `q*w - p`.
pub fn min_mean_cycle(graph: &TransitionGraph, kind: WeightKind) -> Result<RhoResult> {
    let n = graph.len();
    if n == 0 {
        return Err(Error::AcyclicGraph);
    }
    // d[k][v]: least weight of a walk with exactly k arcs ending at v
    let mut d: Vec<Vec<Option<i64>>> = vec![vec![Some(0); n]];
    for k in 1..=n {
        let mut row = vec![None; n];
        for (u, v) in graph.arcs() {
            if let Some(du) = d[k - 1][u] {
                let cand = du + graph.weight(u, v, kind);
                if row[v].is_none_or(|cur| cand < cur) {
                    row[v] = Some(cand);
                }
            }
        }
        d.push(row);
    }
    let mut best: Option<Rational> = None;
    for v in 0..n {
        let Some(dn) = d[n][v] else { continue };
        let mut worst: Option<Rational> = None;
        for (k, row) in d.iter().enumerate().take(n) {
            if let Some(dk) = row[v] {
                let m = Rational::new(dn - dk, (n - k) as i64);
                if worst.as_ref().is_none_or(|w| &m > w) {
                    worst = Some(m);
                }
            }
        }
        if let Some(w) = worst {
            if best.as_ref().is_none_or(|b| &w < b) {
                best = Some(w);
            }
        }
    }
    let lambda = best.ok_or(Error::AcyclicGraph)?;
    let cycle = tight_cycle(graph, kind, &lambda).ok_or(Error::AcyclicGraph)?;
    let weight = cycle_weight(graph, &cycle, kind);
    debug_assert_eq!(Rational::new(weight, cycle.len() as i64), lambda);
    Ok(RhoResult::exact(lambda, Witness::Cycle { vertices: cycle, weight }))
}

/// A cycle all of whose arcs are tight for the potentials of `q*w - p`.
fn tight_cycle(graph: &TransitionGraph, kind: WeightKind, lambda: &Rational) -> Option<Vec<usize>> {
    let (p, q) = lambda.to_i64_pair()?;
    let n = graph.len();
    let w2 = |u: usize, v: usize| q * graph.weight(u, v, kind) - p;
    let mut dist = vec![0i64; n];
    for _ in 0..=n {
        let mut changed = false;
        for (u, v) in graph.arcs() {
            if dist[u] + w2(u, v) < dist[v] {
                dist[v] = dist[u] + w2(u, v);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let tight: Vec<Vec<usize>> = (0..n)
        .map(|u| graph.successors(u).iter().copied().filter(|&v| dist[u] + w2(u, v) == dist[v]).collect())
        .collect();
    find_cycle(&tight)
}

/// Any directed cycle of an adjacency list, via iterative depth-first search.
fn find_cycle(adj: &[Vec<usize>]) -> Option<Vec<usize>> {
    let n = adj.len();
    let mut state = vec![0u8; n];
    for s in 0..n {
        if state[s] != 0 {
            continue;
        }
        let mut stack: Vec<(usize, usize)> = vec![(s, 0)];
        state[s] = 1;
        while let Some(&mut (u, ref mut next)) = stack.last_mut() {
            if *next < adj[u].len() {
                let v = adj[u][*next];
                *next += 1;
                match state[v] {
                    0 => {
                        state[v] = 1;
                        stack.push((v, 0));
                    }
                    1 => {
                        let start = stack.iter().position(|&(x, _)| x == v).unwrap();
                        return Some(stack[start..].iter().map(|&(x, _)| x).collect());
                    }
                    _ => {}
                }
            } else {
                state[u] = 2;
                stack.pop();
            }
        }
    }
    None
}

/// Side sequence of a loop of intervals: 0 left of `a`, 1 right of it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibleLoop {
    signs: Vec<u8>,
}

impl AdmissibleLoop {
    pub fn new(signs: Vec<u8>) -> Result<Self> {
        if signs.len() < 2 {
            return Err(Error::LoopTooShort);
        }
        if signs.iter().any(|&s| s > 1) {
            return Err(Error::Precondition(String::from("loop signs must be 0 or 1")));
        }
        Ok(AdmissibleLoop { signs })
    }

    pub fn signs(&self) -> &[u8] {
        &self.signs
    }
}

/// Over-rotation pair `(changes/2, length)` of a loop and whether its sign
/// sequence is non-repetitive.
pub fn loop_orp(lp: &AdmissibleLoop) -> Result<(OverRotationPair, bool)> {
    let s = &lp.signs;
    let k = s.len();
    let changes = (0..k).filter(|&i| s[i] != s[(i + 1) % k]).count() as u64;
    assert!(changes.is_multiple_of(2), "side changes along a closed loop are even");
    let pair = OverRotationPair::new(changes / 2, k as u64)?;
    let repetitive = (1..k).any(|d| k.is_multiple_of(d) && (0..k).all(|i| s[i] == s[(i + d) % k]));
    Ok((pair, !repetitive))
}

/// Periodic points generated by a closed walk `I_0 -> ... -> I_{k-1} -> I_0`:
/// the solutions of `f^k(x) = x` with `f^j(x) ∈ I_j`.
///
/// When `f^k` is the identity on the admissible set, two interior sample points
/// are returned.
pub fn walk_fixed_points(map: &PlMap, graph: &TransitionGraph, walk: &[usize]) -> Vec<Rational> {
    let (l0, r0) = graph.vertex(walk[0]).clone();
    // admissible set [ml, mr] ⊆ I_0 and f^j = s*x + t on it
    let (mut ml, mut mr) = (l0, r0);
    let mut s = Rational::one();
    let mut t = Rational::zero();
    let k = walk.len();
    for j in 0..k {
        let (u, v) = graph.vertex(walk[j]).clone();
        // affine piece of f on I_j
        let (fu, fv) = (map.eval(&u), map.eval(&v));
        let (ps, pt) = if u == v {
            (Rational::zero(), fu)
        } else {
            let slope = (&fv - &fu) / (&v - &u);
            let icpt = &fu - &slope * &u;
            (slope, icpt)
        };
        s = &ps * &s;
        t = &ps * &t + pt;
        let (nl, nr) = graph.vertex(walk[(j + 1) % k]).clone();
        // keep x with s*x + t in [nl, nr]
        if s.is_zero() {
            if t < nl || t > nr {
                return Vec::new();
            }
        } else {
            let mut a = (&nl - &t) / &s;
            let mut b = (&nr - &t) / &s;
            if a > b {
                core::mem::swap(&mut a, &mut b);
            }
            if a > ml {
                ml = a;
            }
            if b < mr {
                mr = b;
            }
            if ml > mr {
                return Vec::new();
            }
        }
    }
    let one = Rational::one();
    if s != one {
        let x = &t / (&one - &s);
        if ml <= x && x <= mr {
            return vec![x];
        }
        return Vec::new();
    }
    if !t.is_zero() {
        return Vec::new();
    }
    if ml == mr {
        return vec![ml];
    }
    let w = &mr - &ml;
    vec![&ml + &w * Rational::new(1, 3), &ml + &w * Rational::new(1, 7)]
}

/// Orbit of a periodic point `x` of `map` in iteration order, or `None` when
/// `x` does not return within `bound` steps.
pub fn periodic_orbit(map: &PlMap, x: &Rational, bound: usize) -> Option<Vec<Rational>> {
    let mut orbit = vec![x.clone()];
    let mut y = map.eval(x);
    while &y != x {
        if orbit.len() >= bound {
            return None;
        }
        orbit.push(y.clone());
        y = map.eval(&y);
    }
    Some(orbit)
}

/// Number of side changes of `a` along a periodic orbit, counted cyclically.
pub fn orbit_side_changes(orbit: &[Rational], a: &Rational) -> usize {
    let n = orbit.len();
    (0..n)
        .filter(|&i| {
            let (x, y) = (&orbit[i], &orbit[(i + 1) % n]);
            (x < a && y > a) || (x > a && y < a)
        })
        .count()
}

/// All periodic orbits of period `2..=max_period` found through closed walks
/// of the graph, each reported once as its sorted point set. When `rho` is
/// given, only walks whose side changes match `2*rho*len` are explored.
pub fn periodic_orbits(
    map: &PlMap,
    graph: &TransitionGraph,
    max_period: usize,
    rho: Option<&Rational>,
) -> Vec<Vec<Rational>> {
    let mut found: BTreeSet<Vec<Rational>> = BTreeSet::new();
    let n = graph.len();
    for len in 1..=max_period {
        let target = match rho {
            Some(r) => {
                let t = r * Rational::from_integer(2 * len as i64);
                match t.to_i64_pair() {
                    Some((v, 1)) => Some(v as usize),
                    _ => continue,
                }
            }
            None => None,
        };
        for start in 0..n {
            let mut walk = vec![start];
            walks_from(graph, start, len, target, 0, &mut walk, &mut |w| {
                for x in walk_fixed_points(map, graph, w) {
                    if let Some(orbit) = periodic_orbit(map, &x, max_period) {
                        if orbit.len() >= 2 {
                            let mut pts = orbit;
                            pts.sort();
                            found.insert(pts);
                        }
                    }
                }
            });
        }
    }
    found.into_iter().collect()
}

/// Closed walks of exactly `len` arcs starting at `start` whose other vertices
/// are all `>= start`.
fn walks_from<F: FnMut(&[usize])>(
    graph: &TransitionGraph,
    start: usize,
    len: usize,
    target: Option<usize>,
    changes: usize,
    walk: &mut Vec<usize>,
    emit: &mut F,
) {
    let u = *walk.last().unwrap();
    let steps_left = len - (walk.len() - 1);
    for &v in graph.successors(u) {
        if v < start {
            continue;
        }
        let c = changes + (graph.is_right(u) != graph.is_right(v)) as usize;
        if let Some(t) = target {
            if c > t || c + (steps_left - 1) < t {
                continue;
            }
        }
        if steps_left == 1 {
            if v == start && target.is_none_or(|t| c == t) {
                emit(walk);
            }
            continue;
        }
        walk.push(v);
        walks_from(graph, start, len, target, c, walk, emit);
        walk.pop();
    }
}
