use serde_json::{json, Value};

use super::monotonic::names;
use super::{Domain, VerifyOptions};
use crate::error::VerifyError;
use crate::lattice::{ElementId, Lattice};
use crate::rules::ExplicitRule;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomFailure {
    /// Swapping voters `swap` and `swap + 1` changes the outcome.
    Anonymous { ballots: Vec<ElementId>, swap: usize, outcome: ElementId, swapped_outcome: ElementId },
    /// Exchanging `j` and `k` in the ballots does not exchange them in the outcome.
    JiNeutral { ballots: Vec<ElementId>, j: ElementId, k: ElementId, outcome: ElementId, permuted_outcome: ElementId },
    /// No profile over `Y` reaches this element of `Y`.
    Sovereign { unreached: ElementId },
    Idempotent { element: ElementId, outcome: ElementId },
    /// Every voter with these tops can rank `dominating` above the outcome.
    Efficient { tops: Vec<ElementId>, dominating: ElementId, outcome: ElementId },
    /// The axiom needs ballots the rule does not accept.
    OutsideBallots { voter: usize, element: ElementId },
}

impl AxiomFailure {
    pub fn to_json(&self, l: &Lattice) -> Value {
        match self {
            AxiomFailure::Anonymous { ballots, swap, outcome, swapped_outcome } => json!({
                "ballots": names(l, ballots),
                "swapped_voters": [swap + 1, swap + 2],
                "outcome": l.name(*outcome),
                "swapped_outcome": l.name(*swapped_outcome),
            }),
            AxiomFailure::JiNeutral { ballots, j, k, outcome, permuted_outcome } => json!({
                "ballots": names(l, ballots),
                "exchange": [l.name(*j), l.name(*k)],
                "outcome": l.name(*outcome),
                "permuted_outcome": l.name(*permuted_outcome),
            }),
            AxiomFailure::Sovereign { unreached } => json!({ "unreached": l.name(*unreached) }),
            AxiomFailure::Idempotent { element, outcome } => json!({
                "unanimous": l.name(*element),
                "outcome": l.name(*outcome),
            }),
            AxiomFailure::Efficient { tops, dominating, outcome } => json!({
                "tops": names(l, tops),
                "dominating": l.name(*dominating),
                "outcome": l.name(*outcome),
            }),
            AxiomFailure::OutsideBallots { voter, element } => json!({
                "voter": voter + 1,
                "missing_ballot": l.name(*element),
            }),
        }
    }
}

/// One entry per axiom; `None` means it holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub anonymous: Option<AxiomFailure>,
    pub locally_ji_neutral: Option<AxiomFailure>,
    pub locally_sovereign: Option<AxiomFailure>,
    pub locally_idempotent: Option<AxiomFailure>,
    pub efficient: Option<AxiomFailure>,
}

impl AxiomReport {
    pub fn entries(&self) -> [(&'static str, &Option<AxiomFailure>); 5] {
        [
            ("anonymous", &self.anonymous),
            ("locally_ji_neutral", &self.locally_ji_neutral),
            ("locally_sovereign", &self.locally_sovereign),
            ("locally_idempotent", &self.locally_idempotent),
            ("efficient", &self.efficient),
        ]
    }

    pub fn all_hold(&self) -> bool {
        self.entries().iter().all(|(_, f)| f.is_none())
    }
}

/// Rows of `Y^n` in table order, or the first voter missing an element of `Y`.
fn rows_over(rule: &ExplicitRule, y: &[ElementId]) -> Result<Vec<usize>, AxiomFailure> {
    let n = rule.voters();
    for i in 0..n {
        if let Some(&e) = y.iter().find(|&&e| !rule.in_space(i, e)) {
            return Err(AxiomFailure::OutsideBallots { voter: i, element: e });
        }
    }
    let mut rows = vec![0usize];
    for i in 0..n {
        let pos: Vec<usize> = y.iter().map(|&e| rule.position(i, e).unwrap()).collect();
        rows = rows
            .iter()
            .flat_map(|&r| pos.iter().map(move |&p| r + p * rule.strides()[i]))
            .collect();
    }
    rows.sort_unstable();
    Ok(rows)
}

fn anonymous(rule: &ExplicitRule) -> Option<AxiomFailure> {
    for row in 0..rule.len() {
        let ballots = rule.ballots_at(row);
        for s in 0..rule.voters().saturating_sub(1) {
            let mut swapped = ballots.clone();
            swapped.swap(s, s + 1);
            let Ok(r) = rule.row(&swapped) else {
                let voter = if rule.in_space(s, swapped[s]) { s + 1 } else { s };
                return Some(AxiomFailure::OutsideBallots { voter, element: swapped[voter] });
            };
            if rule.at(r) != rule.at(row) {
                return Some(AxiomFailure::Anonymous {
                    ballots,
                    swap: s,
                    outcome: rule.at(row),
                    swapped_outcome: rule.at(r),
                });
            }
        }
    }
    None
}

fn ji_neutral(rule: &ExplicitRule, l: &Lattice, y: &[ElementId], rows: &[usize]) -> Option<AxiomFailure> {
    let mut ji: Vec<ElementId> = l
        .join_irreducibles()
        .iter()
        .copied()
        .filter(|j| y.contains(j))
        .collect();
    ji.sort();
    for &row in rows {
        let ballots = rule.ballots_at(row);
        for (a, &j) in ji.iter().enumerate() {
            for &k in &ji[a + 1..] {
                let tau = |e: ElementId| if e == j { k } else if e == k { j } else { e };
                let permuted: Vec<ElementId> = ballots.iter().map(|&b| tau(b)).collect();
                let out = rule.at(row);
                let pout = rule.eval(&permuted).expect("Y^n is inside the ballot spaces");
                if pout != tau(out) {
                    return Some(AxiomFailure::JiNeutral { ballots, j, k, outcome: out, permuted_outcome: pout });
                }
            }
        }
    }
    None
}

fn efficient(rule: &ExplicitRule, l: &Lattice, domain: &Domain) -> Option<AxiomFailure> {
    let m = l.size();
    let can = domain.preference_table(m);
    for row in 0..rule.len() {
        let tops = rule.ballots_at(row);
        if (0..rule.voters()).any(|i| !domain.is_top(i, tops[i])) {
            continue;
        }
        let out = rule.at(row);
        let dominating = l.elements().find(|x| {
            tops.iter()
                .enumerate()
                .all(|(i, t)| can[i][(t.index() * m + x.index()) * m + out.index()])
        });
        if let Some(dominating) = dominating {
            return Some(AxiomFailure::Efficient { tops, dominating, outcome: out });
        }
    }
    None
}

/// Checks the five structural axioms. Neutrality, sovereignty and idempotence
/// are checked on `Y^n`; efficiency over the top-profiles of `domain`.
pub fn check_axioms(
    rule: &ExplicitRule,
    l: &Lattice,
    y: &[ElementId],
    domain: &Domain,
    opts: &VerifyOptions,
) -> Result<AxiomReport, VerifyError> {
    domain.validate(rule, l)?;
    let pairs = (y.len() * y.len()) as u128;
    opts.guard(rule.len() as u128 * (rule.voters() as u128 + pairs + l.size() as u128))?;
    let rows = rows_over(rule, y);
    let (ji, sov, idem) = match &rows {
        Err(f) => (Some(f.clone()), Some(f.clone()), Some(f.clone())),
        Ok(rows) => {
            let mut reached = vec![false; l.size()];
            for &r in rows {
                reached[rule.at(r).index()] = true;
            }
            let mut ys = y.to_vec();
            ys.sort();
            let sov = ys
                .iter()
                .find(|e| !reached[e.index()])
                .map(|&unreached| AxiomFailure::Sovereign { unreached });
            let idem = ys.iter().find_map(|&e| {
                let out = rule.eval(&vec![e; rule.voters()]).expect("Y^n is inside the ballot spaces");
                (out != e).then_some(AxiomFailure::Idempotent { element: e, outcome: out })
            });
            (ji_neutral(rule, l, y, rows), sov, idem)
        }
    };
    Ok(AxiomReport {
        anonymous: anonymous(rule),
        locally_ji_neutral: ji,
        locally_sovereign: sov,
        locally_idempotent: idem,
        efficient: efficient(rule, l, domain),
    })
}
