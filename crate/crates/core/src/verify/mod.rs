//! Exhaustive checkers for monotonicity, strategy-proofness and coalitional
//! manipulation, structural axioms, and the theorem suites built on them.

mod axioms;
mod coalition;
mod domain;
mod monotonic;
mod par;
mod report;
mod strategy;
pub mod suites;

pub use axioms::{check_axioms, AxiomFailure, AxiomReport};
pub use coalition::{
    all_coalitional_manipulations, find_coalitional_manipulation, find_coalitional_manipulation_filtered,
    ManipulationWitness, SearchFilter, Semantics,
};
pub use domain::{Domain, DomainKind};
pub use monotonic::{is_b_monotonic, MonotonicityWitness};
pub use report::{CheckResult, VerificationReport};
pub use strategy::{is_strategy_proof, StrategyWitness};

use serde::Serialize;

/// Default bound on single rule evaluations for one exhaustive search.
pub const DEFAULT_EVAL_CAP: u128 = 100_000_000;

/// Outcome of an exhaustive check: either it holds or the first failure found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Check<W> {
    Holds,
    Fails(W),
}

impl<W> Check<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Check::Holds)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Check::Holds => None,
            Check::Fails(w) => Some(w),
        }
    }

    pub fn into_witness(self) -> Option<W> {
        match self {
            Check::Holds => None,
            Check::Fails(w) => Some(w),
        }
    }

    fn from_option(w: Option<W>) -> Self {
        w.map_or(Check::Holds, Check::Fails)
    }
}

/// Knobs shared by every search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub workers: usize,
    pub cap: u128,
    pub semantics: Semantics,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { workers: 1, cap: DEFAULT_EVAL_CAP, semantics: Semantics::Truthful, seed: 0 }
    }
}

impl VerifyOptions {
    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers.max(1);
        self
    }

    pub(crate) fn guard(&self, size: u128) -> Result<(), crate::error::VerifyError> {
        if size > self.cap {
            return Err(crate::error::VerifyError::TooLarge { size, cap: self.cap });
        }
        Ok(())
    }
}
