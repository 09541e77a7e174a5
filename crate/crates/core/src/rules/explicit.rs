use crate::error::RuleError;
use crate::lattice::{ElementId, Lattice};

/// Largest ballot-space product an explicit table may cover.
pub const MAX_TABLE: usize = 1 << 20;

/// A voting rule given by its full table over `Y_1 × … × Y_n`.
///
/// Rows are indexed in mixed radix with voter 1 most significant and each
/// `Y_i` in its stored order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExplicitRule {
    spaces: Vec<Vec<ElementId>>,
    position: Vec<Vec<u32>>,
    strides: Vec<usize>,
    table: Vec<ElementId>,
}

const ABSENT: u32 = u32::MAX;

impl ExplicitRule {
    pub fn new(l: &Lattice, spaces: Vec<Vec<ElementId>>, table: Vec<ElementId>) -> Result<Self, RuleError> {
        let size = Self::table_size(&spaces)?;
        if table.len() != size {
            return Err(RuleError::TableSize { expected: size, got: table.len() });
        }
        if let Some(bad) = table.iter().chain(spaces.iter().flatten()).find(|x| !l.contains(**x)) {
            return Err(RuleError::BadElement(bad.index()));
        }
        let m = l.size();
        let mut position = Vec::with_capacity(spaces.len());
        for (voter, ys) in spaces.iter().enumerate() {
            let mut pos = vec![ABSENT; m];
            for (k, y) in ys.iter().enumerate() {
                if pos[y.index()] != ABSENT {
                    return Err(RuleError::DuplicateBallot { voter, ballot: y.index() });
                }
                pos[y.index()] = k as u32;
            }
            position.push(pos);
        }
        let n = spaces.len();
        let mut strides = vec![1usize; n];
        for i in (0..n.saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * spaces[i + 1].len();
        }
        Ok(ExplicitRule { spaces, position, strides, table })
    }

    fn table_size(spaces: &[Vec<ElementId>]) -> Result<usize, RuleError> {
        if let Some(i) = spaces.iter().position(Vec::is_empty) {
            return Err(RuleError::EmptyBallotSpace(i));
        }
        let size: u128 = spaces.iter().map(|s| s.len() as u128).product();
        if size > MAX_TABLE as u128 {
            return Err(RuleError::TooLarge { size, cap: MAX_TABLE as u128 });
        }
        Ok(size as usize)
    }

    /// Tabulates `f` over the given ballot spaces.
    pub fn from_fn(
        l: &Lattice,
        spaces: Vec<Vec<ElementId>>,
        mut f: impl FnMut(&[ElementId]) -> ElementId,
    ) -> Result<Self, RuleError> {
        let size = Self::table_size(&spaces)?;
        let mut table = Vec::with_capacity(size);
        let mut ballots: Vec<ElementId> = spaces.iter().map(|s| s[0]).collect();
        let mut digits = vec![0usize; spaces.len()];
        for _ in 0..size {
            table.push(f(&ballots));
            for i in (0..spaces.len()).rev() {
                digits[i] += 1;
                if digits[i] < spaces[i].len() {
                    ballots[i] = spaces[i][digits[i]];
                    break;
                }
                digits[i] = 0;
                ballots[i] = spaces[i][0];
            }
        }
        Self::new(l, spaces, table)
    }

    /// Tabulates `f` with every voter allowed to cast any element.
    pub fn unrestricted(l: &Lattice, n: usize, f: impl FnMut(&[ElementId]) -> ElementId) -> Result<Self, RuleError> {
        let all: Vec<ElementId> = l.elements().collect();
        Self::from_fn(l, vec![all; n], f)
    }

    pub fn voters(&self) -> usize {
        self.spaces.len()
    }

    pub fn spaces(&self) -> &[Vec<ElementId>] {
        &self.spaces
    }

    pub fn table(&self) -> &[ElementId] {
        &self.table
    }

    pub fn strides(&self) -> &[usize] {
        &self.strides
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    /// Position of `x` in `Y_i`, if present.
    #[inline]
    pub fn position(&self, voter: usize, x: ElementId) -> Option<usize> {
        match self.position[voter].get(x.index()) {
            Some(&p) if p != ABSENT => Some(p as usize),
            _ => None,
        }
    }

    pub fn in_space(&self, voter: usize, x: ElementId) -> bool {
        self.position(voter, x).is_some()
    }

    pub fn row(&self, ballots: &[ElementId]) -> Result<usize, RuleError> {
        if ballots.len() != self.voters() {
            return Err(RuleError::ArityMismatch { expected: self.voters(), got: ballots.len() });
        }
        let mut idx = 0;
        for (i, &b) in ballots.iter().enumerate() {
            let p = self.position(i, b).ok_or_else(|| RuleError::BallotOutOfSpace {
                voter: i,
                ballot: b.index(),
            })?;
            idx += p * self.strides[i];
        }
        Ok(idx)
    }

    pub fn ballots_at(&self, row: usize) -> Vec<ElementId> {
        (0..self.voters())
            .map(|i| self.spaces[i][row / self.strides[i] % self.spaces[i].len()])
            .collect()
    }

    pub fn eval(&self, ballots: &[ElementId]) -> Result<ElementId, RuleError> {
        Ok(self.table[self.row(ballots)?])
    }

    #[inline]
    pub fn at(&self, row: usize) -> ElementId {
        self.table[row]
    }

    /// Does every `Y_i` contain the whole carrier?
    pub fn is_unrestricted(&self, l: &Lattice) -> bool {
        self.spaces.iter().all(|s| s.len() == l.size())
    }

    /// Corner values `f(z)` for `z ∈ {⊥,⊤}^n` in binary order, voter 1 most
    /// significant and `⊥` as 0.
    pub fn corners(&self, l: &Lattice) -> Result<Vec<ElementId>, RuleError> {
        let n = self.voters();
        for i in 0..n {
            if !self.in_space(i, l.bottom()) || !self.in_space(i, l.top()) {
                return Err(RuleError::CornerNotInBallotSpace(i));
            }
        }
        (0..1usize << n)
            .map(|c| self.eval(&corner_profile(l, n, c)))
            .collect()
    }
}

/// The ballots of corner `c`: voter `i` (0-based) casts `⊤` iff bit `n-1-i` is set.
pub fn corner_profile(l: &Lattice, n: usize, c: usize) -> Vec<ElementId> {
    (0..n)
        .map(|i| if c >> (n - 1 - i) & 1 == 1 { l.top() } else { l.bottom() })
        .collect()
}
