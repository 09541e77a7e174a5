use crate::error::VerifyError;
use crate::lattice::{ElementId, Lattice};
use crate::preorder::{enumerate_lsu, enumerate_unimodal, TotalPreorder};
use crate::rules::ExplicitRule;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DomainKind {
    FullUnimodal,
    FullLsu,
    Custom,
}

/// Per-voter admissible preferences `D_1, …, D_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Domain {
    prefs: Vec<Vec<TotalPreorder>>,
    kind: DomainKind,
}

impl Domain {
    /// `U^n`: every voter may hold any unimodal preorder.
    pub fn full_unimodal(l: &Lattice, n: usize) -> Result<Domain, VerifyError> {
        let u = enumerate_unimodal(l)?;
        Ok(Domain { prefs: vec![u; n], kind: DomainKind::FullUnimodal })
    }

    /// `S^n`: every voter may hold any locally strictly unimodal preorder.
    pub fn full_lsu(l: &Lattice, n: usize) -> Result<Domain, VerifyError> {
        let s = enumerate_lsu(l)?;
        Ok(Domain { prefs: vec![s; n], kind: DomainKind::FullLsu })
    }

    pub fn custom(prefs: Vec<Vec<TotalPreorder>>) -> Domain {
        Domain { prefs, kind: DomainKind::Custom }
    }

    pub fn kind(&self) -> DomainKind {
        self.kind
    }

    pub fn voters(&self) -> usize {
        self.prefs.len()
    }

    pub fn prefs(&self, voter: usize) -> &[TotalPreorder] {
        &self.prefs[voter]
    }

    pub fn total(&self) -> usize {
        self.prefs.iter().map(Vec::len).sum()
    }

    /// Drops every preference whose top is not a ballot of `rule` for that
    /// voter. The kind is kept so reports can still say where it came from.
    pub fn restrict_to(&self, rule: &ExplicitRule) -> Domain {
        let prefs = self
            .prefs
            .iter()
            .enumerate()
            .map(|(i, d)| {
                d.iter()
                    .filter(|p| i < rule.voters() && rule.in_space(i, p.top()))
                    .cloned()
                    .collect()
            })
            .collect();
        Domain { prefs, kind: self.kind }
    }

    pub fn validate(&self, rule: &ExplicitRule, l: &Lattice) -> Result<(), VerifyError> {
        if self.voters() != rule.voters() {
            return Err(VerifyError::ArityMismatch { expected: rule.voters(), got: self.voters() });
        }
        for (voter, d) in self.prefs.iter().enumerate() {
            for p in d {
                if p.len() != l.size() {
                    return Err(crate::error::PreorderError::CarrierMismatch {
                        expected: l.size(),
                        got: p.len(),
                    }
                    .into());
                }
                if !rule.in_space(voter, p.top()) {
                    return Err(VerifyError::TopOutsideBallots { voter });
                }
            }
        }
        Ok(())
    }

    /// `can[i][top][a][b]`: some preference of voter `i` with that top
    /// strictly prefers `a` to `b`. Flattened with stride `m`.
    pub(crate) fn preference_table(&self, m: usize) -> Vec<Vec<bool>> {
        self.prefs
            .iter()
            .map(|d| {
                let mut can = vec![false; m * m * m];
                for p in d {
                    let t = p.top().index();
                    for a in 0..m {
                        for b in 0..m {
                            if p.prefers(ElementId::new(a), ElementId::new(b)) {
                                can[(t * m + a) * m + b] = true;
                            }
                        }
                    }
                }
                can
            })
            .collect()
    }

    /// Is `x` the top of some preference of voter `i`?
    pub(crate) fn is_top(&self, voter: usize, x: ElementId) -> bool {
        self.prefs[voter].iter().any(|p| p.top() == x)
    }
}
