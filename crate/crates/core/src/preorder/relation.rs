use std::fmt;

use super::TotalPreorder;
use crate::bits::BitSet;
use crate::error::PreorderError;
use crate::lattice::{ElementId, Lattice};

/// A strict preference relation on `m` elements; `(a, b)` reads `a ≻ b`.
#[derive(Clone, PartialEq, Eq)]
pub struct StrictRelation {
    below: Vec<BitSet>,
}

impl StrictRelation {
    pub fn new(m: usize) -> Self {
        StrictRelation { below: vec![BitSet::new(m); m] }
    }

    pub fn from_pairs(m: usize, pairs: impl IntoIterator<Item = (ElementId, ElementId)>) -> Self {
        let mut r = StrictRelation::new(m);
        for (a, b) in pairs {
            r.insert(a, b);
        }
        r
    }

    pub fn carrier_size(&self) -> usize {
        self.below.len()
    }

    pub fn insert(&mut self, a: ElementId, b: ElementId) {
        self.below[a.index()].insert(b.index());
    }

    pub fn contains(&self, a: ElementId, b: ElementId) -> bool {
        self.below[a.index()].contains(b.index())
    }

    pub fn len(&self) -> usize {
        self.below.iter().map(BitSet::count).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn pairs(&self) -> impl Iterator<Item = (ElementId, ElementId)> + '_ {
        self.below
            .iter()
            .enumerate()
            .flat_map(|(a, row)| row.iter().map(move |b| (ElementId::new(a), ElementId::new(b))))
    }

    pub fn is_irreflexive(&self) -> bool {
        (0..self.below.len()).all(|a| !self.below[a].contains(a))
    }

    pub fn is_asymmetric(&self) -> bool {
        self.pairs().all(|(a, b)| !self.contains(b, a))
    }

    /// For a purely strict relation, S-consistency is acyclicity.
    pub fn is_s_consistent(&self) -> bool {
        self.cycle_member().is_none()
    }

    fn cycle_member(&self) -> Option<usize> {
        let all: Vec<usize> = (0..self.below.len()).collect();
        self.layers(&all).err()
    }

    /// Longest-path depth of each element of `subset`, counting only pairs
    /// inside `subset`. On a cycle, returns an element that cannot be layered.
    fn layers(&self, subset: &[usize]) -> Result<Vec<(usize, u32)>, usize> {
        let m = self.below.len();
        let mut inside = BitSet::new(m);
        subset.iter().for_each(|&v| inside.insert(v));
        let mut indeg = vec![0usize; m];
        for &a in subset {
            for b in self.below[a].intersection(&inside).iter() {
                indeg[b] += 1;
            }
        }
        let mut depth = vec![0u32; m];
        let mut ready: Vec<usize> = subset.iter().rev().copied().filter(|&v| indeg[v] == 0).collect();
        let mut done = 0;
        while let Some(a) = ready.pop() {
            done += 1;
            for b in self.below[a].intersection(&inside).iter() {
                depth[b] = depth[b].max(depth[a] + 1);
                indeg[b] -= 1;
                if indeg[b] == 0 {
                    ready.push(b);
                }
            }
        }
        if done < subset.len() {
            return Err(*subset.iter().find(|&&v| indeg[v] > 0).unwrap());
        }
        Ok(subset.iter().map(|&v| (v, depth[v])).collect())
    }
}

impl fmt::Debug for StrictRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set()
            .entries(self.pairs().map(|(a, b)| (a.index(), b.index())))
            .finish()
    }
}

/// `y ≻_x z` iff `y ∈ [x, z]` and `y ≠ z`.
pub fn strict_top_betweenness(l: &Lattice, x: ElementId) -> StrictRelation {
    let mut r = StrictRelation::new(l.size());
    for z in l.elements() {
        for y in l.interval(x, z) {
            if y != z {
                r.insert(y, z);
            }
        }
    }
    r
}

/// A topped total preorder whose strict part contains `r`: each element is
/// ranked by the longest chain of `r` above it. If several elements are
/// unbeaten, the lowest id is kept on top and everything else moves down one.
pub fn extend_to_total_preorder(r: &StrictRelation) -> Result<TotalPreorder, PreorderError> {
    let m = r.carrier_size();
    let all: Vec<usize> = (0..m).collect();
    let layered = r.layers(&all).map_err(PreorderError::NotConsistent)?;
    let mut rank: Vec<u32> = layered.iter().map(|&(_, d)| d).collect();
    let unbeaten: Vec<usize> = (0..m).filter(|&v| rank[v] == 0).collect();
    if unbeaten.len() > 1 {
        let top = unbeaten[0];
        for (v, r) in rank.iter_mut().enumerate() {
            if v != top {
                *r += 1;
            }
        }
    }
    TotalPreorder::from_ranks(&rank)
}

/// `{peak} ≻ [peak, ref] ∖ {peak} ≻ everything else`.
pub fn build_three_class_witness(l: &Lattice, peak: ElementId, reference: ElementId) -> TotalPreorder {
    let mut rank = vec![2u32; l.size()];
    for z in l.interval(peak, reference) {
        rank[z.index()] = 1;
    }
    rank[peak.index()] = 0;
    TotalPreorder::from_ranks(&rank).expect("peak is the unique best element")
}

/// Layer `[peak, ref]` by `≻_peak`, then layer the rest below it the same way.
pub fn build_lsu_witness(l: &Lattice, peak: ElementId, reference: ElementId) -> TotalPreorder {
    let r = strict_top_betweenness(l, peak);
    let inside: Vec<ElementId> = l.interval(peak, reference);
    let inner: Vec<usize> = inside.iter().map(|e| e.index()).collect();
    let outer: Vec<usize> = l
        .elements()
        .filter(|e| !inside.contains(e))
        .map(ElementId::index)
        .collect();
    let acyclic = "≻_peak is acyclic";
    let first = r.layers(&inner).expect(acyclic);
    let offset = first.iter().map(|&(_, d)| d).max().unwrap_or(0) + 1;
    let second = r.layers(&outer).expect(acyclic);
    let mut rank = vec![0u32; l.size()];
    for (v, d) in first {
        rank[v] = d;
    }
    for (v, d) in second {
        rank[v] = d + offset;
    }
    TotalPreorder::from_ranks(&rank).expect("peak beats everything in its interval")
}
