use serde_json::{json, Value};

use super::monotonic::names;
use super::{par, Check, Domain, VerifyOptions};
use crate::error::VerifyError;
use crate::lattice::{ElementId, Lattice};
use crate::preorder::TotalPreorder;
use crate::rules::ExplicitRule;

/// A voter, a preference in their domain and a context in which reporting
/// `deviation` instead of the top is strictly better.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrategyWitness {
    pub voter: usize,
    pub preference: TotalPreorder,
    pub ballots: Vec<ElementId>,
    pub deviation: ElementId,
    pub outcome: ElementId,
    pub deviant_outcome: ElementId,
}

impl StrategyWitness {
    pub fn to_json(&self, l: &Lattice) -> Value {
        json!({
            "voter": self.voter + 1,
            "preference": self.preference.named_classes(l),
            "ballots": names(l, &self.ballots),
            "deviation": l.name(self.deviation),
            "outcome": l.name(self.outcome),
            "deviant_outcome": l.name(self.deviant_outcome),
        })
    }

    pub fn validate(&self, rule: &ExplicitRule) -> bool {
        let mut dev = self.ballots.clone();
        dev[self.voter] = self.deviation;
        self.ballots[self.voter] == self.preference.top()
            && rule.eval(&self.ballots).ok() == Some(self.outcome)
            && rule.eval(&dev).ok() == Some(self.deviant_outcome)
            && self.preference.prefers(self.deviant_outcome, self.outcome)
    }
}

/// Direct check: for every voter `i`, preference in `D_i`, context of the
/// other ballots and alternative ballot, the top must do at least as well.
pub fn is_strategy_proof(
    rule: &ExplicitRule,
    domain: &Domain,
    l: &Lattice,
    opts: &VerifyOptions,
) -> Result<Check<StrategyWitness>, VerifyError> {
    domain.validate(rule, l)?;
    let n = rule.voters();
    let widest = rule.spaces().iter().map(Vec::len).max().unwrap_or(1) as u128;
    opts.guard(rule.len() as u128 * domain.total() as u128 * widest)?;

    // Flattened (voter, preference, context) index, voter-major.
    let mut offsets = Vec::with_capacity(n + 1);
    offsets.push(0usize);
    for i in 0..n {
        let contexts = rule.len() / rule.spaces()[i].len();
        offsets.push(offsets[i] + domain.prefs(i).len() * contexts);
    }
    let hit = par::first_hit(offsets[n], opts.workers, |idx| {
        let i = offsets.partition_point(|&o| o <= idx) - 1;
        let local = idx - offsets[i];
        let space = &rule.spaces()[i];
        let stride = rule.strides()[i];
        let contexts = rule.len() / space.len();
        let p = &domain.prefs(i)[local / contexts];
        let c = local % contexts;
        let base = c / stride * stride * space.len() + c % stride;
        let truthful = base + rule.position(i, p.top())? * stride;
        let out = rule.at(truthful);
        space.iter().enumerate().find_map(|(k, &alt)| {
            let dev = rule.at(base + k * stride);
            p.prefers(dev, out).then_some((truthful, alt, dev))
        })
    });
    Ok(Check::from_option(hit.map(|(idx, (row, deviation, deviant_outcome))| {
        let i = offsets.partition_point(|&o| o <= idx) - 1;
        let contexts = rule.len() / rule.spaces()[i].len();
        StrategyWitness {
            voter: i,
            preference: domain.prefs(i)[(idx - offsets[i]) / contexts].clone(),
            ballots: rule.ballots_at(row),
            deviation,
            outcome: rule.at(row),
            deviant_outcome,
        }
    })))
}
