use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::monotonic::names;
use super::{par, Domain, VerifyOptions};
use crate::error::VerifyError;
use crate::lattice::{ElementId, Lattice};
use crate::preorder::PreferenceProfile;
use crate::rules::ExplicitRule;

/// How coalition members' starting ballots are quantified.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Semantics {
    /// Members start from the tops of their preferences.
    #[default]
    Truthful,
    /// Members may start from any ballot in their space.
    Literal,
}

/// A profile, a coalition and a joint deviation that every member strictly
/// prefers to the starting outcome.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManipulationWitness {
    pub profile: PreferenceProfile,
    pub ballots: Vec<ElementId>,
    pub coalition: Vec<usize>,
    pub deviation: Vec<ElementId>,
    pub outcome_truthful: ElementId,
    pub outcome_deviant: ElementId,
    pub semantics: Semantics,
}

impl ManipulationWitness {
    pub fn deviated_ballots(&self) -> Vec<ElementId> {
        let mut b = self.ballots.clone();
        for (&i, &d) in self.coalition.iter().zip(&self.deviation) {
            b[i] = d;
        }
        b
    }

    /// Re-evaluates the rule and re-checks every member's strict preference.
    pub fn validate(&self, rule: &ExplicitRule, domain: &Domain) -> bool {
        let prefs = &self.profile.prefs;
        prefs.len() == rule.voters()
            && prefs.iter().enumerate().all(|(i, p)| domain.prefs(i).contains(p))
            && rule.eval(&self.ballots).ok() == Some(self.outcome_truthful)
            && rule.eval(&self.deviated_ballots()).ok() == Some(self.outcome_deviant)
            && !self.coalition.is_empty()
            && self.coalition.iter().all(|&i| {
                prefs[i].prefers(self.outcome_deviant, self.outcome_truthful)
                    && (self.semantics == Semantics::Literal || prefs[i].top() == self.ballots[i])
            })
    }

    pub fn to_json(&self, l: &Lattice) -> Value {
        json!({
            "profile": self.profile.prefs.iter().map(|p| p.named_classes(l)).collect::<Vec<_>>(),
            "ballots": names(l, &self.ballots),
            "coalition": self.coalition.iter().map(|i| i + 1).collect::<Vec<_>>(),
            "deviation": names(l, &self.deviation),
            "outcome_truthful": l.name(self.outcome_truthful),
            "outcome_deviant": l.name(self.outcome_deviant),
            "semantics": self.semantics,
        })
    }

    pub fn summary(&self, l: &Lattice) -> String {
        format!(
            "coalition {:?} at ({}) deviates to ({}): {} -> {}",
            self.coalition.iter().map(|i| i + 1).collect::<Vec<_>>(),
            names(l, &self.ballots).join(","),
            names(l, &self.deviation).join(","),
            l.name(self.outcome_truthful),
            l.name(self.outcome_deviant),
        )
    }
}

/// Restricts the manipulation search. Unset fields match anything.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchFilter {
    pub coalition_size: Option<usize>,
    /// Members, 0-based and ascending.
    pub coalition: Option<Vec<usize>>,
    pub ballots: Option<Vec<ElementId>>,
    pub outcome_truthful: Option<ElementId>,
    pub outcome_deviant: Option<ElementId>,
}

struct Search<'a> {
    rule: &'a ExplicitRule,
    domain: &'a Domain,
    semantics: Semantics,
    filter: &'a SearchFilter,
    m: usize,
    can: Vec<Vec<bool>>,
    can_any: Vec<Vec<bool>>,
    tops: Vec<Vec<bool>>,
    origin_row: Option<usize>,
}

impl<'a> Search<'a> {
    fn new(
        rule: &'a ExplicitRule,
        domain: &'a Domain,
        l: &Lattice,
        filter: &'a SearchFilter,
        opts: &VerifyOptions,
    ) -> Result<Self, VerifyError> {
        domain.validate(rule, l)?;
        if let Some(voter) = (0..domain.voters()).find(|&i| domain.prefs(i).is_empty()) {
            return Err(VerifyError::EmptyDomain { voter });
        }
        let m = l.size();
        let can = domain.preference_table(m);
        let can_any = can
            .iter()
            .map(|c| {
                (0..m * m)
                    .map(|ab| (0..m).any(|t| c[t * m * m + ab]))
                    .collect()
            })
            .collect();
        let tops = (0..rule.voters())
            .map(|i| l.elements().map(|x| domain.is_top(i, x)).collect())
            .collect();
        let origin_row = match &filter.ballots {
            Some(b) => Some(rule.row(b)?),
            None => None,
        };
        let search = Search {
            rule,
            domain,
            semantics: opts.semantics,
            filter,
            m,
            can,
            can_any,
            tops,
            origin_row,
        };
        let size: u128 = search
            .coalitions()
            .iter()
            .map(|&c| rule.len() as u128 * search.deviation_count(c))
            .sum();
        opts.guard(size)?;
        Ok(search)
    }

    /// Coalitions by ascending size, then bitmask (bit `i` is voter `i`).
    fn coalitions(&self) -> Vec<u64> {
        let n = self.rule.voters();
        let mut cs: Vec<u64> = (1u64..1 << n)
            .filter(|c| self.filter.coalition_size.map_or(true, |s| c.count_ones() as usize == s))
            .filter(|&c| {
                self.filter
                    .coalition
                    .as_ref()
                    .map_or(true, |m| m.iter().fold(0u64, |a, &i| a | 1 << i) == c)
            })
            .collect();
        cs.sort_by_key(|&c| (c.count_ones(), c));
        cs
    }

    fn members(&self, c: u64) -> Vec<usize> {
        (0..self.rule.voters()).filter(|i| c >> i & 1 == 1).collect()
    }

    fn deviation_count(&self, c: u64) -> u128 {
        self.members(c)
            .iter()
            .map(|&i| self.rule.spaces()[i].len() as u128)
            .product()
    }

    /// First deviation of coalition `members` from ballot row `row`.
    fn probe(&self, members: &[usize], row: usize) -> Option<(Vec<usize>, ElementId)> {
        let rule = self.rule;
        if self.origin_row.is_some_and(|r| r != row) {
            return None;
        }
        let m = self.m;
        let out = rule.at(row);
        if self.filter.outcome_truthful.is_some_and(|o| o != out) {
            return None;
        }
        let mut base = row;
        let mut origin = Vec::with_capacity(members.len());
        for &i in members {
            let space = &rule.spaces()[i];
            let stride = rule.strides()[i];
            let digit = row / stride % space.len();
            if self.semantics == Semantics::Truthful && !self.tops[i][space[digit].index()] {
                return None;
            }
            base -= digit * stride;
            origin.push(space[digit].index());
        }
        let mut digits = vec![0usize; members.len()];
        loop {
            let r = base
                + members
                    .iter()
                    .zip(&digits)
                    .map(|(&i, &k)| k * rule.strides()[i])
                    .sum::<usize>();
            let od = rule.at(r);
            if od != out
                && self.filter.outcome_deviant.map_or(true, |o| o == od)
                && members.iter().zip(&origin).all(|(&i, &x)| match self.semantics {
                    Semantics::Truthful => self.can[i][(x * m + od.index()) * m + out.index()],
                    Semantics::Literal => self.can_any[i][od.index() * m + out.index()],
                })
            {
                return Some((digits, od));
            }
            let mut k = members.len();
            loop {
                if k == 0 {
                    return None;
                }
                k -= 1;
                digits[k] += 1;
                if digits[k] < rule.spaces()[members[k]].len() {
                    break;
                }
                digits[k] = 0;
            }
        }
    }

    fn witness(&self, members: Vec<usize>, row: usize, digits: Vec<usize>, od: ElementId) -> ManipulationWitness {
        let rule = self.rule;
        let ballots = rule.ballots_at(row);
        let out = rule.at(row);
        let deviation: Vec<ElementId> = members
            .iter()
            .zip(&digits)
            .map(|(&i, &k)| rule.spaces()[i][k])
            .collect();
        let prefs = (0..rule.voters())
            .map(|j| {
                let d = self.domain.prefs(j);
                let pick = if members.contains(&j) {
                    d.iter().find(|p| {
                        p.prefers(od, out) && (self.semantics == Semantics::Literal || p.top() == ballots[j])
                    })
                } else {
                    d.iter().find(|p| p.top() == ballots[j])
                };
                pick.unwrap_or(&d[0]).clone()
            })
            .collect();
        ManipulationWitness {
            profile: PreferenceProfile::new(prefs),
            ballots,
            coalition: members,
            deviation,
            outcome_truthful: out,
            outcome_deviant: od,
            semantics: self.semantics,
        }
    }
}

/// First coalitional manipulation: coalitions by size then bitmask, then
/// starting ballots in table order, then deviations in table order.
pub fn find_coalitional_manipulation(
    rule: &ExplicitRule,
    domain: &Domain,
    l: &Lattice,
    opts: &VerifyOptions,
) -> Result<Option<ManipulationWitness>, VerifyError> {
    find_coalitional_manipulation_filtered(rule, domain, l, &SearchFilter::default(), opts)
}

pub fn find_coalitional_manipulation_filtered(
    rule: &ExplicitRule,
    domain: &Domain,
    l: &Lattice,
    filter: &SearchFilter,
    opts: &VerifyOptions,
) -> Result<Option<ManipulationWitness>, VerifyError> {
    let search = Search::new(rule, domain, l, filter, opts)?;
    for c in search.coalitions() {
        let members = search.members(c);
        if let Some((row, (digits, od))) =
            par::first_hit(rule.len(), opts.workers, |row| search.probe(&members, row))
        {
            return Ok(Some(search.witness(members, row, digits, od)));
        }
    }
    Ok(None)
}

/// One witness per (coalition, starting ballots) pair that admits a
/// manipulation, in search order, up to `limit`.
pub fn all_coalitional_manipulations(
    rule: &ExplicitRule,
    domain: &Domain,
    l: &Lattice,
    filter: &SearchFilter,
    opts: &VerifyOptions,
    limit: usize,
) -> Result<Vec<ManipulationWitness>, VerifyError> {
    let search = Search::new(rule, domain, l, filter, opts)?;
    let mut found = Vec::new();
    for c in search.coalitions() {
        let members = search.members(c);
        for row in 0..rule.len() {
            if found.len() >= limit {
                return Ok(found);
            }
            if let Some((digits, od)) = search.probe(&members, row) {
                found.push(search.witness(members.clone(), row, digits, od));
            }
        }
    }
    Ok(found)
}
