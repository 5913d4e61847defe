//! Full Pareto-front enumeration for two objectives by an ε-constraint sweep.
//!
//! Starting from `ε = +∞`, each call minimizes `y₂` subject to `y₁ < ε` (ties
//! broken by `y₁`), emits the optimum `y`, and tightens the bound to `y₁`. The
//! first infeasible call ends the sweep, so a front of size `k` costs exactly
//! `k + 1` calls. Points come out in decreasing order of `y₁`.

use crate::error::{Error, Result};
use crate::front::BiFront;
use crate::log::{CallCounts, Emission, Enumerator};
use crate::oracle::{CountingOracle, EpsBound, ScalarizationOracle};
use crate::rational::Rational;

/// How the bound is tightened after an emission at `y₁ = v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EpsStep {
    /// Next bound is `y₁ < v`.
    Strict,
    /// Next bound is `y₁ ≤ v − δ`; `δ` must be positive and no larger than the
    /// smallest gap between distinct first objective values.
    Fixed(Rational),
}

pub fn eps_front_2d<O: ScalarizationOracle>(oracle: O) -> EpsSweep<O> {
    EpsSweep::new(oracle, EpsStep::Strict)
}

#[derive(Debug)]
pub struct EpsSweep<O> {
    oracle: CountingOracle<O>,
    step: EpsStep,
    bound: Option<EpsBound>,
    emitted: BiFront,
}

impl<O: ScalarizationOracle> EpsSweep<O> {
    pub fn new(oracle: O, step: EpsStep) -> Self {
        EpsSweep {
            oracle: CountingOracle::new(oracle),
            step,
            bound: Some(EpsBound::Unbounded),
            emitted: BiFront::new(),
        }
    }

    /// Points emitted so far.
    pub fn emitted(&self) -> &BiFront {
        &self.emitted
    }

    fn advance(&mut self) -> Result<Option<Emission>> {
        let Some(bound) = self.bound.take() else {
            return Ok(None);
        };
        let point = match self.oracle.eps(&bound) {
            Ok(opt) => opt.point,
            Err(Error::Infeasible) => return Ok(None),
            Err(e) => return Err(e),
        };
        if !bound.admits(point.x()) {
            return Err(Error::Internal("ε-oracle violated its bound".into()));
        }
        self.bound = Some(match &self.step {
            EpsStep::Strict => EpsBound::Below(point.x().clone()),
            EpsStep::Fixed(delta) => EpsBound::AtMost(point.x() - delta),
        });
        if !self.emitted.insert(point.clone())? {
            return Err(Error::Internal("ε-sweep produced a dominated point".into()));
        }
        Ok(Some(Emission {
            index: self.emitted.len(),
            point,
            calls: self.oracle.calls(),
        }))
    }
}

impl<O: ScalarizationOracle> Iterator for EpsSweep<O> {
    type Item = Result<Emission>;

    fn next(&mut self) -> Option<Self::Item> {
        self.advance().transpose()
    }
}

impl<O: ScalarizationOracle> Enumerator for EpsSweep<O> {
    fn calls(&self) -> CallCounts {
        self.oracle.calls()
    }
}
