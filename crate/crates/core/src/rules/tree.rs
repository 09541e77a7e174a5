use super::committee::CommitteeRule;
use crate::error::RuleError;
use crate::lattice::{ElementId, Lattice};

/// A ternary tree of medians over ballots and constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MedianNode {
    Median(Box<MedianNode>, Box<MedianNode>, Box<MedianNode>),
    Ballot(usize),
    Const(ElementId),
}

/// A median tree for `n` voters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MedianTree {
    n: usize,
    root: MedianNode,
}

impl MedianTree {
    pub fn new(n: usize, root: MedianNode) -> Self {
        MedianTree { n, root }
    }

    /// The nested median `μ(T⊥, x_1, T⊤)` where `T⊥`/`T⊤` are the trees for
    /// voters `2..n` with voter 1 fixed to `⊥`/`⊤`; leaves are the corner values.
    pub fn canonical(corners: &[ElementId], n: usize) -> Self {
        assert_eq!(corners.len(), 1 << n, "need 2^n corner values");
        fn build(corners: &[ElementId], n: usize, k: usize, prefix: usize) -> MedianNode {
            if k == n {
                return MedianNode::Const(corners[prefix]);
            }
            MedianNode::Median(
                Box::new(build(corners, n, k + 1, prefix << 1)),
                Box::new(MedianNode::Ballot(k)),
                Box::new(build(corners, n, k + 1, prefix << 1 | 1)),
            )
        }
        MedianTree { n, root: build(corners, n, 0, 0) }
    }

    pub fn voters(&self) -> usize {
        self.n
    }

    pub fn root(&self) -> &MedianNode {
        &self.root
    }

    pub fn eval(&self, l: &Lattice, ballots: &[ElementId]) -> Result<ElementId, RuleError> {
        if ballots.len() != self.n {
            return Err(RuleError::ArityMismatch { expected: self.n, got: ballots.len() });
        }
        fn go(node: &MedianNode, l: &Lattice, b: &[ElementId], n: usize) -> Result<ElementId, RuleError> {
            Ok(match node {
                MedianNode::Median(p, q, r) => l.median(go(p, l, b, n)?, go(q, l, b, n)?, go(r, l, b, n)?),
                MedianNode::Ballot(i) => *b.get(*i).ok_or(RuleError::BadLeafIndex { voter: *i, n })?,
                MedianNode::Const(c) => *c,
            })
        }
        go(&self.root, l, ballots, self.n)
    }

    /// Values at the `2^n` corners in binary order.
    pub fn corners(&self, l: &Lattice) -> Result<Vec<ElementId>, RuleError> {
        (0..1usize << self.n)
            .map(|c| self.eval(l, &super::corner_profile(l, self.n, c)))
            .collect()
    }

    /// The committee form with one term per coalition `S`, whose constant is
    /// the value at the corner where exactly the members of `S` vote `⊤`.
    pub fn to_committee(&self, l: &Lattice) -> Result<CommitteeRule, RuleError> {
        let corners = self.corners(l)?;
        let n = self.n;
        let terms = (0u64..1 << n)
            .map(|s| {
                let corner = (0..n)
                    .filter(|i| s >> i & 1 == 1)
                    .fold(0usize, |c, i| c | 1 << (n - 1 - i));
                (s, corners[corner])
            })
            .collect();
        CommitteeRule::new(n, terms)
    }
}
