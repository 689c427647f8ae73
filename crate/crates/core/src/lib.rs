//! Over-rotation numbers and intervals of interval maps.
//!
//! Exact combinatorics for cyclic patterns, kneading sequences, transition
//! graphs and degree-one lifts of unimodal maps. Works without `std`; every
//! combinatorial quantity is an exact [`Rational`].

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod error;
pub mod families;
pub mod graph;
pub mod kneading;
pub mod lift;
pub mod orders;
pub mod pattern;
pub mod pl;
pub mod poly;
pub mod rational;
pub mod unimodal;

pub use error::{Error, Result};
pub use graph::{RhoResult, TransitionGraph, WeightKind};
pub use kneading::{Itinerary, Symbol};
pub use orders::{OverRotationPair, PeriodSet, RotationInterval};
pub use pattern::{CyclicPattern, NonCyclicPattern};
pub use pl::PlMap;
pub use rational::Rational;
pub use unimodal::UnimodalMap;

