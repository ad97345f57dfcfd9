//! Seeded verification campaigns.
//!
//! Every campaign derives the generator of trial `i` from `seed ^ i` and
//! folds trial outcomes in index order, so reports depend only on the
//! parameters, never on the thread count.

mod fuzz;
mod suites;

pub use fuzz::{alignment_axioms_campaign, fuzz_theorem1, fuzz_theorem2, AlignmentReport};
pub use suites::{
    counterexample_suite, implication_geometry, representation_checks, small_geometry_sweep, ClassThreeScene,
    CounterexampleReport, ImplicationScene, RepresentationReport, SearchOutcome, SweepReport,
};

use crate::disc::Scene;
use crate::error::{Error, Result};
use crate::triangle::ClassId;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FuzzParams {
    pub trials: u64,
    pub seed: u64,
    /// Separation δ demanded of sampled scenes.
    pub margin: f64,
    /// Tolerance ε of the geometric predicates.
    pub tolerance: f64,
}

impl FuzzParams {
    pub fn new(trials: u64, seed: u64) -> FuzzParams {
        FuzzParams { trials, seed, margin: 1e-3, tolerance: 1e-9 }
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::BadParams("trials must be positive".into()));
        }
        if !(self.tolerance > 0.0 && self.margin > self.tolerance && self.margin.is_finite()) {
            return Err(Error::BadParams("need margin > tolerance > 0".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzCounts {
    pub trials_run: u64,
    pub accepted: u64,
    pub rejected_degenerate: u64,
    /// Accepted scenes whose projections share an endpoint, so they have no
    /// configuration code.
    pub coincident: u64,
    /// Accepted scenes in which one of a, b, c lies in the hull of the others.
    pub hull_shortcut: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub trial: u64,
    pub reason: String,
    pub scene: Scene,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FuzzReport {
    pub params: FuzzParams,
    pub counts: FuzzCounts,
    pub violations: Vec<Violation>,
    pub histogram: BTreeMap<ClassId, u64>,
}

impl FuzzReport {
    pub fn empty(params: FuzzParams) -> FuzzReport {
        FuzzReport { params, counts: FuzzCounts::default(), violations: Vec::new(), histogram: BTreeMap::new() }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Adds the counts of `other`; violations are kept sorted by trial.
    pub fn merge(mut self, other: FuzzReport) -> FuzzReport {
        let (a, b) = (&mut self.counts, other.counts);
        a.trials_run += b.trials_run;
        a.accepted += b.accepted;
        a.rejected_degenerate += b.rejected_degenerate;
        a.coincident += b.coincident;
        a.hull_shortcut += b.hull_shortcut;
        self.violations.extend(other.violations);
        self.violations.sort_by_key(|v| v.trial);
        for (k, n) in other.histogram {
            *self.histogram.entry(k).or_default() += n;
        }
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
