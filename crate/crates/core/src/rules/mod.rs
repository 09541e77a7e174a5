//! Voting rules as explicit tables, committee polynomials and median trees.

pub mod automaton;
mod committee;
mod explicit;
mod tree;

pub use automaton::{Signature, TermTree, TreeAutomaton};
pub use committee::CommitteeRule;
pub use explicit::{corner_profile, ExplicitRule, MAX_TABLE};
pub use tree::{MedianNode, MedianTree};

use crate::error::RuleError;
use crate::lattice::{ElementId, Lattice};

/// Any of the three rule representations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rule {
    Explicit(ExplicitRule),
    Committee(CommitteeRule),
    Tree(MedianTree),
}

impl Rule {
    pub fn voters(&self) -> usize {
        match self {
            Rule::Explicit(r) => r.voters(),
            Rule::Committee(r) => r.voters(),
            Rule::Tree(r) => r.voters(),
        }
    }

    pub fn eval(&self, l: &Lattice, ballots: &[ElementId]) -> Result<ElementId, RuleError> {
        match self {
            Rule::Explicit(r) => r.eval(ballots),
            Rule::Committee(r) => r.eval(l, ballots),
            Rule::Tree(r) => r.eval(l, ballots),
        }
    }

    /// The full table; committee and tree rules accept every element as a ballot.
    pub fn tabulate(&self, l: &Lattice) -> Result<ExplicitRule, RuleError> {
        match self {
            Rule::Explicit(r) => Ok(r.clone()),
            Rule::Committee(r) => ExplicitRule::unrestricted(l, r.voters(), |b| r.eval_unchecked(l, b)),
            Rule::Tree(r) => {
                let mut err = None;
                let t = ExplicitRule::unrestricted(l, r.voters(), |b| {
                    r.eval(l, b).unwrap_or_else(|e| {
                        err.get_or_insert(e);
                        l.bottom()
                    })
                })?;
                err.map_or(Ok(t), Err)
            }
        }
    }

    pub fn corners(&self, l: &Lattice) -> Result<Vec<ElementId>, RuleError> {
        match self {
            Rule::Explicit(r) => r.corners(l),
            Rule::Committee(r) => (0..1usize << r.voters())
                .map(|c| r.eval(l, &corner_profile(l, r.voters(), c)))
                .collect(),
            Rule::Tree(r) => r.corners(l),
        }
    }

    pub fn to_tree(&self, l: &Lattice) -> Result<MedianTree, RuleError> {
        Ok(MedianTree::canonical(&self.corners(l)?, self.voters()))
    }

    pub fn to_committee(&self, l: &Lattice) -> Result<CommitteeRule, RuleError> {
        match self {
            Rule::Committee(r) => Ok(r.clone()),
            _ => self.to_tree(l)?.to_committee(l),
        }
    }
}

impl From<ExplicitRule> for Rule {
    fn from(r: ExplicitRule) -> Self {
        Rule::Explicit(r)
    }
}

impl From<CommitteeRule> for Rule {
    fn from(r: CommitteeRule) -> Self {
        Rule::Committee(r)
    }
}

impl From<MedianTree> for Rule {
    fn from(r: MedianTree) -> Self {
        Rule::Tree(r)
    }
}

/// Join of meets over all strict-majority coalitions of the ballots.
pub fn extended_median(l: &Lattice, ballots: &[ElementId]) -> ElementId {
    CommitteeRule::extended_median(l, ballots.len()).eval_unchecked(l, ballots)
}

/// `x ↦ μ(f(x), g(x), h(x))`, over the common ballot spaces of the three tables.
pub fn pointwise_median(
    l: &Lattice,
    f: &ExplicitRule,
    g: &ExplicitRule,
    h: &ExplicitRule,
) -> Result<ExplicitRule, RuleError> {
    if f.spaces() != g.spaces() || f.spaces() != h.spaces() {
        return Err(RuleError::ArityMismatch { expected: f.voters(), got: g.voters().max(h.voters()) });
    }
    let table = (0..f.len())
        .map(|r| l.median(f.at(r), g.at(r), h.at(r)))
        .collect();
    ExplicitRule::new(l, f.spaces().to_vec(), table)
}

#[cfg(test)]
mod tests;
