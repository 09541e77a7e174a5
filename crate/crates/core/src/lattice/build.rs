use std::collections::HashMap;

use super::{ElementId, Lattice, Poset, DEFAULT_MAX_ELEMENTS};
use crate::bits::BitSet;
use crate::error::LatticeError;

fn check_cap(size: usize, limit: usize) -> Result<(), LatticeError> {
    if size > limit {
        Err(LatticeError::TooLarge { size, limit })
    } else {
        Ok(())
    }
}

impl Lattice {
    /// Builds a lattice from its Hasse diagram. Every edge must be a genuine
    /// cover: an edge implied by a longer path is rejected.
    pub fn from_covers<S: AsRef<str>>(names: &[S], covers: &[(S, S)]) -> Result<Lattice, LatticeError> {
        Self::from_covers_capped(names, covers, DEFAULT_MAX_ELEMENTS)
    }

    pub fn from_covers_capped<S: AsRef<str>>(
        names: &[S],
        covers: &[(S, S)],
        limit: usize,
    ) -> Result<Lattice, LatticeError> {
        let m = names.len();
        if m == 0 {
            return Err(LatticeError::InvalidSize);
        }
        check_cap(m, limit)?;
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        let mut index = HashMap::new();
        for (i, n) in names.iter().enumerate() {
            if index.insert(n.as_str(), i).is_some() {
                return Err(LatticeError::DuplicateName(n.clone()));
            }
        }
        let lookup = |s: &str| {
            index
                .get(s)
                .copied()
                .ok_or_else(|| LatticeError::UnknownElement(s.to_string()))
        };
        let mut edges = Vec::with_capacity(covers.len());
        let mut succ = vec![Vec::new(); m];
        for (lo, hi) in covers {
            let (a, b) = (lookup(lo.as_ref())?, lookup(hi.as_ref())?);
            if a == b {
                return Err(LatticeError::NotAPoset(names[a].clone()));
            }
            if succ[a].contains(&b) {
                return Err(LatticeError::DuplicateCover {
                    lower: names[a].clone(),
                    upper: names[b].clone(),
                });
            }
            succ[a].push(b);
            edges.push((a, b));
        }

        let order = topological(&succ).map_err(|v| LatticeError::NotAPoset(names[v].clone()))?;
        let mut up = vec![BitSet::new(m); m];
        for &v in order.iter().rev() {
            let mut row = BitSet::new(m);
            row.insert(v);
            for &w in &succ[v] {
                row.union_with(&up[w]);
            }
            up[v] = row;
        }
        for &(a, b) in &edges {
            if succ[a].iter().any(|&w| w != b && up[w].contains(b)) {
                return Err(LatticeError::RedundantCover {
                    lower: names[a].clone(),
                    upper: names[b].clone(),
                });
            }
        }
        Lattice::from_up_sets(names, up)
    }

    /// The chain `0 < 1 < … < m-1`.
    pub fn chain(m: usize) -> Result<Lattice, LatticeError> {
        Self::chain_capped(m, DEFAULT_MAX_ELEMENTS)
    }

    pub fn chain_capped(m: usize, limit: usize) -> Result<Lattice, LatticeError> {
        if m == 0 {
            return Err(LatticeError::InvalidSize);
        }
        check_cap(m, limit)?;
        let names = (0..m).map(|i| i.to_string()).collect();
        let up = (0..m)
            .map(|i| {
                let mut row = BitSet::new(m);
                (i..m).for_each(|j| row.insert(j));
                row
            })
            .collect();
        Lattice::from_up_sets(names, up)
    }

    /// The hypercube `2^k`. Element `i` is the bit vector whose coordinate `c`
    /// (1-based) is bit `c-1` of `i`; names are written coordinate 1 first,
    /// so in `2^2` the element `10` is `(1,0)`.
    pub fn boolean(k: usize) -> Result<Lattice, LatticeError> {
        Self::boolean_capped(k, DEFAULT_MAX_ELEMENTS)
    }

    pub fn boolean_capped(k: usize, limit: usize) -> Result<Lattice, LatticeError> {
        if k == 0 {
            return Err(LatticeError::InvalidSize);
        }
        if k >= usize::BITS as usize - 1 || (1usize << k) > limit {
            return Err(LatticeError::TooLarge {
                size: 1usize.checked_shl(k as u32).unwrap_or(usize::MAX),
                limit,
            });
        }
        let m = 1usize << k;
        let names = (0..m)
            .map(|i| (0..k).map(|c| if i >> c & 1 == 1 { '1' } else { '0' }).collect())
            .collect();
        let up = (0..m)
            .map(|i| {
                let mut row = BitSet::new(m);
                (0..m).filter(|j| i & j == i).for_each(|j| row.insert(j));
                row
            })
            .collect();
        Lattice::from_up_sets(names, up)
    }

    /// `2^2` with its elements named `0, x, y, 1`.
    pub fn boolean_square() -> Lattice {
        Lattice::from_covers(
            &["0", "x", "y", "1"],
            &[("0", "x"), ("0", "y"), ("x", "1"), ("y", "1")],
        )
        .expect("the Boolean square is a distributive lattice")
    }

    /// Componentwise product; element `(i, j)` has id `i * |b| + j`.
    pub fn product(a: &Lattice, b: &Lattice) -> Result<Lattice, LatticeError> {
        Self::product_capped(a, b, DEFAULT_MAX_ELEMENTS)
    }

    pub fn product_capped(a: &Lattice, b: &Lattice, limit: usize) -> Result<Lattice, LatticeError> {
        let (p, q) = (a.size(), b.size());
        let m = p.checked_mul(q).unwrap_or(usize::MAX);
        check_cap(m, limit)?;
        let mut names = Vec::with_capacity(m);
        for x in a.elements() {
            for y in b.elements() {
                names.push(format!("({},{})", a.name(x), b.name(y)));
            }
        }
        let up = (0..m)
            .map(|i| {
                let (x, y) = (ElementId::new(i / q), ElementId::new(i % q));
                let mut row = BitSet::new(m);
                for x2 in a.up_set(x).iter() {
                    for y2 in b.up_set(y).iter() {
                        row.insert(x2 * q + y2);
                    }
                }
                row
            })
            .collect();
        Lattice::from_up_sets(names, up)
    }

    /// Order ideals (down-sets) of `poset` under inclusion. Ideals are ordered
    /// by size, then by their sorted member list; names are like `{a,b}`.
    pub fn ideals(poset: &Poset) -> Result<Lattice, LatticeError> {
        Self::ideals_capped(poset, DEFAULT_MAX_ELEMENTS)
    }

    pub fn ideals_capped(poset: &Poset, limit: usize) -> Result<Lattice, LatticeError> {
        let ideals = poset.ideals(limit)?;
        let m = ideals.len();
        let names = ideals
            .iter()
            .map(|s| {
                let members: Vec<&str> = s.iter().map(|i| poset.name(i)).collect();
                format!("{{{}}}", members.join(","))
            })
            .collect();
        let up = (0..m)
            .map(|i| {
                let mut row = BitSet::new(m);
                (0..m)
                    .filter(|&j| ideals[i].is_subset(&ideals[j]))
                    .for_each(|j| row.insert(j));
                row
            })
            .collect();
        Lattice::from_up_sets(names, up)
    }
}

/// Kahn's algorithm; on a cycle, returns a vertex lying on one.
pub(super) fn topological(succ: &[Vec<usize>]) -> Result<Vec<usize>, usize> {
    let m = succ.len();
    let mut indeg = vec![0usize; m];
    for s in succ {
        for &w in s {
            indeg[w] += 1;
        }
    }
    let mut stack: Vec<usize> = (0..m).rev().filter(|&v| indeg[v] == 0).collect();
    let mut out = Vec::with_capacity(m);
    while let Some(v) = stack.pop() {
        out.push(v);
        for &w in &succ[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                stack.push(w);
            }
        }
    }
    if out.len() == m {
        return Ok(out);
    }
    let stuck: Vec<usize> = (0..m).filter(|&v| indeg[v] > 0).collect();
    for &v in &stuck {
        let mut seen = vec![false; m];
        let mut todo: Vec<usize> = succ[v].clone();
        while let Some(w) = todo.pop() {
            if w == v {
                return Err(v);
            }
            if !seen[w] {
                seen[w] = true;
                todo.extend(&succ[w]);
            }
        }
    }
    Err(stuck[0])
}
