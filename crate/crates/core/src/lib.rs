//! Exact enumeration of nondominated points for biobjective optimization.
//!
//! The crate is `no_std` (it needs `alloc`) and contains only the algorithmic
//! core: exact rational arithmetic, Pareto archives, 2-D hull geometry, the
//! scalarization oracle contract, an exact simplex, and the enumerators built
//! on top of them:
//!
//! * [`dichotomic`]: the dichotomic weighted-sum method in three variants
//!   (plain, lexicographic with incremental delay, and polynomial delay).
//! * [`epsfront`]: full Pareto-front enumeration by an ε-constraint sweep.
//! * [`lp::walk`]: the facet walk over the upper image of a biobjective LP,
//!   which runs with polynomial delay and keeps at most three points alive.
//! * [`problems`]: shortest path, spanning tree, min-cut and unconstrained
//!   binary instances with their oracles, plus the knapsack reduction gadget.
//! * [`brute`]: exhaustive ground-truth oracles for small instances.
//!
//! All enumerators are resumable state machines exposed as iterators, so the
//! caller observes every emission as soon as it is produced.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod brute;
pub mod dichotomic;
pub mod dominance;
pub mod epsfront;
pub mod error;
pub mod front;
pub mod hull;
pub mod log;
pub mod lp;
pub mod oracle;
pub mod point;
pub mod problems;
pub mod rational;

pub use error::Error;
pub use front::BiFront;
pub use log::{CallCounts, Emission, EnumerationLog, Enumerator, LogEvent};
pub use oracle::{CountingOracle, EpsBound, Optimum, ScalarizationOracle, Solution, Weight};
pub use point::Point;
pub use rational::Rational;
