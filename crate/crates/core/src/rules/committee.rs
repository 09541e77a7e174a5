use crate::error::RuleError;
use crate::lattice::{ElementId, Lattice};

/// A generalized weak committee rule `⋁_S ((⋀_{i∈S} x_i) ∧ y_S)`.
///
/// Coalitions are bitmasks, bit `i` standing for voter `i` (0-based). The
/// meet over the empty coalition is `⊤`, the join over no terms is `⊥`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommitteeRule {
    n: usize,
    terms: Vec<(u64, ElementId)>,
}

impl CommitteeRule {
    pub fn new(n: usize, terms: Vec<(u64, ElementId)>) -> Result<Self, RuleError> {
        if n > 63 {
            return Err(RuleError::TooLarge { size: n as u128, cap: 63 });
        }
        for &(s, _) in &terms {
            if s >> n != 0 {
                let voter = 63 - s.leading_zeros() as usize;
                return Err(RuleError::ArityMismatch { expected: n, got: voter + 1 });
            }
        }
        Ok(CommitteeRule { n, terms })
    }

    /// `f(x) = x_i`
    pub fn projection(l: &Lattice, n: usize, voter: usize) -> Self {
        assert!(voter < n, "voter {voter} out of range for n = {n}");
        CommitteeRule { n, terms: vec![(1 << voter, l.top())] }
    }

    /// `f(x) = c`
    pub fn constant(n: usize, c: ElementId) -> Self {
        CommitteeRule { n, terms: vec![(0, c)] }
    }

    /// Anonymous rule with constant `y[s]` on every coalition of size `s`.
    pub fn quota(constants: &[ElementId]) -> Self {
        let n = constants.len() - 1;
        let terms = (0u64..1 << n)
            .map(|s| (s, constants[s.count_ones() as usize]))
            .collect();
        CommitteeRule { n, terms }
    }

    /// The simple-majority rule: every coalition of more than half the voters,
    /// with constant `⊤`.
    pub fn extended_median(l: &Lattice, n: usize) -> Self {
        let need = n / 2 + 1;
        let terms = (0u64..1 << n)
            .filter(|s| s.count_ones() as usize >= need)
            .map(|s| (s, l.top()))
            .collect();
        CommitteeRule { n, terms }
    }

    pub fn voters(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &[(u64, ElementId)] {
        &self.terms
    }

    pub fn eval(&self, l: &Lattice, ballots: &[ElementId]) -> Result<ElementId, RuleError> {
        if ballots.len() != self.n {
            return Err(RuleError::ArityMismatch { expected: self.n, got: ballots.len() });
        }
        if let Some(b) = ballots.iter().find(|b| !l.contains(**b)) {
            return Err(RuleError::BadElement(b.index()));
        }
        Ok(self.eval_unchecked(l, ballots))
    }

    pub(crate) fn eval_unchecked(&self, l: &Lattice, ballots: &[ElementId]) -> ElementId {
        let mut out = l.bottom();
        for &(s, c) in &self.terms {
            let mut v = c;
            let mut bits = s;
            while bits != 0 {
                let i = bits.trailing_zeros() as usize;
                v = l.meet(v, ballots[i]);
                bits &= bits - 1;
            }
            out = l.join(out, v);
        }
        out
    }

    /// Is the set of coalitions upward closed?
    pub fn is_order_filter(&self) -> bool {
        let present: std::collections::HashSet<u64> = self.terms.iter().map(|t| t.0).collect();
        present
            .iter()
            .all(|&s| (0..self.n).all(|i| present.contains(&(s | 1 << i))))
    }

    /// Do constants grow with the coalition (`S ⊆ T ⇒ y_S ≤ y_T`)?
    pub fn has_monotone_constants(&self, l: &Lattice) -> bool {
        self.terms.iter().all(|&(s, ys)| {
            self.terms
                .iter()
                .all(|&(t, yt)| s & !t != 0 || l.leq(ys, yt))
        })
    }
}
