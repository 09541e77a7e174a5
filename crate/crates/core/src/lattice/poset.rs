use std::collections::HashMap;

use super::build::topological;
use crate::bits::BitSet;
use crate::error::LatticeError;

/// A finite partial order, used as the input to [`Lattice::ideals`](super::Lattice::ideals).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    names: Vec<String>,
    below: Vec<BitSet>,
}

impl Poset {
    /// The order generated by `relations` (pairs `a < b`). Redundant pairs are
    /// allowed here; cycles are not.
    pub fn new<S: AsRef<str>>(names: &[S], relations: &[(S, S)]) -> Result<Poset, LatticeError> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        let m = names.len();
        let mut index = HashMap::new();
        for (i, n) in names.iter().enumerate() {
            if index.insert(n.as_str(), i).is_some() {
                return Err(LatticeError::DuplicateName(n.clone()));
            }
        }
        let mut succ = vec![Vec::new(); m];
        for (a, b) in relations {
            let get = |s: &str| {
                index
                    .get(s)
                    .copied()
                    .ok_or_else(|| LatticeError::UnknownElement(s.to_string()))
            };
            let (a, b) = (get(a.as_ref())?, get(b.as_ref())?);
            if a == b {
                return Err(LatticeError::NotAPoset(names[a].clone()));
            }
            succ[a].push(b);
        }
        let order = topological(&succ).map_err(|v| LatticeError::NotAPoset(names[v].clone()))?;
        let mut below = vec![BitSet::new(m); m];
        for &v in &order {
            for &w in &succ[v] {
                let mut row = below[v].clone();
                row.insert(v);
                below[w].union_with(&row);
            }
        }
        Ok(Poset { names, below })
    }

    pub fn antichain(k: usize) -> Poset {
        let names: Vec<String> = (0..k).map(|i| format!("p{i}")).collect();
        Poset::new::<String>(&names, &[]).expect("antichain")
    }

    pub fn chain(k: usize) -> Poset {
        let names: Vec<String> = (0..k).map(|i| format!("p{i}")).collect();
        let rel: Vec<(String, String)> = names.windows(2).map(|w| (w[0].clone(), w[1].clone())).collect();
        Poset::new(&names, &rel).expect("chain")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        self.below[b].contains(a)
    }

    /// All down-closed subsets, at most `limit` of them, sorted by size and
    /// then by member list.
    pub(crate) fn ideals(&self, limit: usize) -> Result<Vec<BitSet>, LatticeError> {
        let m = self.len();
        let mut order: Vec<usize> = (0..m).collect();
        order.sort_by_key(|&v| (self.below[v].count(), v));
        let mut out = Vec::new();
        let mut current = BitSet::new(m);
        self.grow(&order, 0, &mut current, &mut out, limit)?;
        out.sort_by(|a, b| {
            a.count()
                .cmp(&b.count())
                .then_with(|| a.iter().cmp(b.iter()))
        });
        Ok(out)
    }

    fn grow(
        &self,
        order: &[usize],
        k: usize,
        current: &mut BitSet,
        out: &mut Vec<BitSet>,
        limit: usize,
    ) -> Result<(), LatticeError> {
        if k == order.len() {
            if out.len() == limit {
                return Err(LatticeError::TooLarge { size: limit + 1, limit });
            }
            out.push(current.clone());
            return Ok(());
        }
        let v = order[k];
        self.grow(order, k + 1, current, out, limit)?;
        if self.below[v].is_subset(current) {
            current.insert(v);
            self.grow(order, k + 1, current, out, limit)?;
            current.remove(v);
        }
        Ok(())
    }
}
