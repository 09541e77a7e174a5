use serde_json::{json, Value};

use super::{par, Check, VerifyOptions};
use crate::error::VerifyError;
use crate::lattice::{ElementId, Lattice};
use crate::rules::ExplicitRule;

/// A ballot tuple where voter `voter` switching to `deviation` moves the
/// outcome so that the original outcome leaves `[x_i, f(x′_i, x_{-i})]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonotonicityWitness {
    pub ballots: Vec<ElementId>,
    pub voter: usize,
    pub deviation: ElementId,
    pub outcome: ElementId,
    pub deviant_outcome: ElementId,
}

impl MonotonicityWitness {
    pub fn to_json(&self, l: &Lattice) -> Value {
        json!({
            "ballots": names(l, &self.ballots),
            "voter": self.voter + 1,
            "deviation": l.name(self.deviation),
            "outcome": l.name(self.outcome),
            "deviant_outcome": l.name(self.deviant_outcome),
        })
    }
}

pub(crate) fn names(l: &Lattice, xs: &[ElementId]) -> Vec<String> {
    xs.iter().map(|&x| l.name(x).to_string()).collect()
}

/// Checks `f(x) ∈ [x_i, f(x′_i, x_{-i})]` for every ballot tuple, voter and
/// alternative ballot. The first failure in row, voter, deviation order is
/// returned.
pub fn is_b_monotonic(
    rule: &ExplicitRule,
    l: &Lattice,
    opts: &VerifyOptions,
) -> Result<Check<MonotonicityWitness>, VerifyError> {
    let n = rule.voters();
    let fan: u128 = rule.spaces().iter().map(|s| s.len() as u128).sum();
    opts.guard(rule.len() as u128 * fan.max(1))?;
    let hit = par::first_hit(rule.len(), opts.workers, |row| {
        let out = rule.at(row);
        for i in 0..n {
            let space = &rule.spaces()[i];
            let stride = rule.strides()[i];
            let digit = row / stride % space.len();
            let base = row - digit * stride;
            let xi = space[digit];
            for (k, &alt) in space.iter().enumerate() {
                let dev = rule.at(base + k * stride);
                if !l.between(xi, out, dev) {
                    return Some((i, alt, dev));
                }
            }
        }
        None
    });
    Ok(Check::from_option(hit.map(|(row, (voter, deviation, deviant_outcome))| {
        MonotonicityWitness {
            ballots: rule.ballots_at(row),
            voter,
            deviation,
            outcome: rule.at(row),
            deviant_outcome,
        }
    })))
}
