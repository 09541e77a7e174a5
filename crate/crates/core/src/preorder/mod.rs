//! Topped total preorders over a lattice carrier, the domain predicates
//! (unimodal, locally strictly unimodal, separable) and their enumeration.

mod enumerate;
mod relation;

use std::fmt;

use crate::error::PreorderError;
use crate::lattice::{ElementId, Lattice};

pub use enumerate::{
    enumerate_lsu, enumerate_lsu_capped, enumerate_separable, enumerate_topped_preorders,
    enumerate_unimodal, enumerate_unimodal_capped, topped_preorders, DEFAULT_ENUMERATION_CAP,
};
pub use relation::{
    build_lsu_witness, build_three_class_witness, extend_to_total_preorder, strict_top_betweenness,
    StrictRelation,
};

/// A total preorder with a unique best element, stored as a rank per element
/// (0 is best). Ranks are always contiguous, so equal preorders compare equal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TotalPreorder {
    rank: Vec<u32>,
}

impl TotalPreorder {
    /// Accepts any rank vector with a unique minimum and normalizes it.
    pub fn from_ranks(ranks: &[u32]) -> Result<Self, PreorderError> {
        let mut distinct: Vec<u32> = ranks.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        let rank: Vec<u32> = ranks
            .iter()
            .map(|r| distinct.binary_search(r).unwrap() as u32)
            .collect();
        let tops = rank.iter().filter(|&&r| r == 0).count();
        if tops != 1 {
            return Err(PreorderError::NotTopped(tops));
        }
        Ok(TotalPreorder { rank })
    }

    /// Builds from indifference classes, best first. Every one of the `m`
    /// elements must appear exactly once.
    pub fn from_classes(classes: &[Vec<ElementId>], m: usize) -> Result<Self, PreorderError> {
        let mut rank = vec![u32::MAX; m];
        for (r, class) in classes.iter().enumerate() {
            for &x in class {
                if x.index() >= m {
                    return Err(PreorderError::CarrierMismatch { expected: m, got: x.index() + 1 });
                }
                if rank[x.index()] != u32::MAX {
                    return Err(PreorderError::Repeated(x.index().to_string()));
                }
                rank[x.index()] = r as u32;
            }
        }
        if let Some(missing) = rank.iter().position(|&r| r == u32::MAX) {
            return Err(PreorderError::Missing(missing.to_string()));
        }
        Self::from_ranks(&rank)
    }

    /// Parses classes of element names, e.g. `[["x"], ["1"], ["0", "y"]]`.
    pub fn from_named_classes<S: AsRef<str>>(classes: &[Vec<S>], l: &Lattice) -> Result<Self, PreorderError> {
        let mut rank = vec![u32::MAX; l.size()];
        for (r, class) in classes.iter().enumerate() {
            for name in class {
                let x = l.element(name.as_ref())?;
                if rank[x.index()] != u32::MAX {
                    return Err(PreorderError::Repeated(name.as_ref().to_string()));
                }
                rank[x.index()] = r as u32;
            }
        }
        if let Some(missing) = rank.iter().position(|&r| r == u32::MAX) {
            return Err(PreorderError::Missing(l.names()[missing].clone()));
        }
        Self::from_ranks(&rank)
    }

    /// Shorthand for tests and examples: `"a > b > c ~ d"`.
    pub fn parse(s: &str, l: &Lattice) -> Result<Self, PreorderError> {
        let classes: Vec<Vec<&str>> = s
            .split(['>', '≻'])
            .map(|class| class.split(['~', '∼']).map(str::trim).collect())
            .collect();
        Self::from_named_classes(&classes, l)
    }

    pub fn len(&self) -> usize {
        self.rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank.is_empty()
    }

    pub fn ranks(&self) -> &[u32] {
        &self.rank
    }

    #[inline]
    pub fn rank(&self, x: ElementId) -> u32 {
        self.rank[x.index()]
    }

    pub fn top(&self) -> ElementId {
        ElementId::new(self.rank.iter().position(|&r| r == 0).unwrap())
    }

    /// `x ≽ y`
    #[inline]
    pub fn weakly_prefers(&self, x: ElementId, y: ElementId) -> bool {
        self.rank(x) <= self.rank(y)
    }

    /// `x ≻ y`
    #[inline]
    pub fn prefers(&self, x: ElementId, y: ElementId) -> bool {
        self.rank(x) < self.rank(y)
    }

    pub fn classes(&self) -> Vec<Vec<ElementId>> {
        let depth = self.rank.iter().max().map_or(0, |&r| r as usize + 1);
        let mut out = vec![Vec::new(); depth];
        for (i, &r) in self.rank.iter().enumerate() {
            out[r as usize].push(ElementId::new(i));
        }
        out
    }

    pub fn named_classes(&self, l: &Lattice) -> Vec<Vec<String>> {
        self.classes()
            .iter()
            .map(|c| c.iter().map(|&x| l.name(x).to_string()).collect())
            .collect()
    }

    /// Renders as `x ≻ 1 ≻ 0 ∼ y`.
    pub fn display(&self, l: &Lattice) -> String {
        self.named_classes(l)
            .iter()
            .map(|c| c.join(" ∼ "))
            .collect::<Vec<_>>()
            .join(" ≻ ")
    }

    fn check_carrier(&self, l: &Lattice) -> Result<(), PreorderError> {
        if self.len() != l.size() {
            return Err(PreorderError::CarrierMismatch { expected: l.size(), got: self.len() });
        }
        Ok(())
    }

    /// Every element of `[x, y]` is weakly preferred to `x` or to `y`.
    pub fn is_unimodal(&self, l: &Lattice) -> Result<bool, PreorderError> {
        self.check_carrier(l)?;
        for x in l.elements() {
            for y in l.elements().filter(|&y| y > x) {
                let worst = self.rank(x).max(self.rank(y));
                if l.interval(x, y).into_iter().any(|z| self.rank(z) > worst) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Every `z` strictly on the way from the top to `y` is strictly preferred to `y`.
    pub fn is_locally_strictly_unimodal(&self, l: &Lattice) -> Result<bool, PreorderError> {
        self.check_carrier(l)?;
        let t = self.top();
        for y in l.elements() {
            if l
                .interval(t, y)
                .into_iter()
                .any(|z| z != y && self.rank(z) >= self.rank(y))
            {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// On a hypercube: every item is either good (`{a} ≻ ∅`) or bad
    /// (`∅ ≻ {a}`), and adding it to any set strictly improves or strictly
    /// worsens that set accordingly.
    pub fn is_separable(&self, l: &Lattice) -> Result<bool, PreorderError> {
        self.check_carrier(l)?;
        if l.hypercube_dimension().is_none() {
            return Err(crate::error::LatticeError::NotHypercube.into());
        }
        let bot = l.bottom();
        for &a in l.atoms() {
            if self.rank(a) == self.rank(bot) {
                return Ok(false);
            }
            let good = self.prefers(a, bot);
            for s in l.elements().filter(|&s| !l.leq(a, s)) {
                let with = l.join(s, a);
                let ok = if good { self.prefers(with, s) } else { self.prefers(s, with) };
                if !ok {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

impl fmt::Debug for TotalPreorder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TotalPreorder{:?}", self.rank)
    }
}

/// One preorder per voter.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PreferenceProfile {
    pub prefs: Vec<TotalPreorder>,
}

impl PreferenceProfile {
    pub fn new(prefs: Vec<TotalPreorder>) -> Self {
        PreferenceProfile { prefs }
    }

    pub fn voters(&self) -> usize {
        self.prefs.len()
    }

    pub fn tops(&self) -> Vec<ElementId> {
        self.prefs.iter().map(TotalPreorder::top).collect()
    }
}

#[cfg(test)]
mod tests;
