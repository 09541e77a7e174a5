//! Finite bounded distributive lattices with tabulated order, join and meet.

mod build;
mod poset;

use std::collections::{BinaryHeap, HashMap};
use std::cmp::Reverse;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::BitSet;
use crate::error::LatticeError;

pub use poset::Poset;

/// Default upper bound on the number of elements any constructor will build.
pub const DEFAULT_MAX_ELEMENTS: usize = 4096;

/// Dense index of a lattice element.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ElementId(u32);

impl ElementId {
    #[inline]
    pub const fn new(index: usize) -> Self {
        ElementId(index as u32)
    }

    #[inline]
    pub const fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Debug for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

impl From<usize> for ElementId {
    fn from(i: usize) -> Self {
        ElementId::new(i)
    }
}

/// A finite bounded distributive lattice.
///
/// All queries are table lookups; the tables are filled and checked once at
/// construction, so a `Lattice` value is always valid.
#[derive(Clone)]
pub struct Lattice {
    names: Vec<String>,
    index: HashMap<String, ElementId>,
    up: Vec<BitSet>,
    down: Vec<BitSet>,
    join: Vec<ElementId>,
    meet: Vec<ElementId>,
    bottom: ElementId,
    top: ElementId,
    atoms: Vec<ElementId>,
    join_irreducibles: Vec<ElementId>,
    covers: Vec<(ElementId, ElementId)>,
}

/// A strictly monotone valuation `v` with `v(x∨y) + v(x∧y) = v(x) + v(y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Valuation(Vec<i64>);

impl Valuation {
    pub fn get(&self, x: ElementId) -> i64 {
        self.0[x.index()]
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }
}

impl Lattice {
    /// Builds the lattice from up-sets (`up[a]` = elements above `a`).
    /// The order is checked, then joins, meets and distributivity.
    pub(crate) fn from_up_sets(names: Vec<String>, up: Vec<BitSet>) -> Result<Self, LatticeError> {
        let m = names.len();
        if m == 0 {
            return Err(LatticeError::InvalidSize);
        }
        let mut index = HashMap::with_capacity(m);
        for (i, n) in names.iter().enumerate() {
            if index.insert(n.clone(), ElementId::new(i)).is_some() {
                return Err(LatticeError::DuplicateName(n.clone()));
            }
        }
        for a in 0..m {
            if !up[a].contains(a) {
                return Err(LatticeError::NotAPoset(names[a].clone()));
            }
            for b in up[a].iter() {
                if b != a && up[b].contains(a) {
                    return Err(LatticeError::NotAPoset(names[a].clone()));
                }
                if !up[b].is_subset(&up[a]) {
                    return Err(LatticeError::NotAPoset(names[a].clone()));
                }
            }
        }
        let mut down = vec![BitSet::new(m); m];
        for a in 0..m {
            for b in up[a].iter() {
                down[b].insert(a);
            }
        }

        let bottom = (0..m).find(|&a| up[a].count() == m).ok_or(LatticeError::NotBounded)?;
        let top = (0..m).find(|&a| down[a].count() == m).ok_or(LatticeError::NotBounded)?;

        // A linear extension: strictly smaller elements have strictly smaller down-sets.
        let mut pos = vec![0usize; m];
        {
            let mut order: Vec<usize> = (0..m).collect();
            order.sort_by_key(|&a| (down[a].count(), a));
            for (p, &a) in order.iter().enumerate() {
                pos[a] = p;
            }
        }
        let extreme = |set: &BitSet, pick_min: bool| -> Option<usize> {
            let mut best: Option<usize> = None;
            for e in set.iter() {
                best = match best {
                    None => Some(e),
                    Some(b) if (pick_min && pos[e] < pos[b]) || (!pick_min && pos[e] > pos[b]) => Some(e),
                    keep => keep,
                };
            }
            best
        };

        let mut join = vec![ElementId(0); m * m];
        let mut meet = vec![ElementId(0); m * m];
        for a in 0..m {
            for b in a..m {
                let common_up = up[a].intersection(&up[b]);
                let lub = extreme(&common_up, true).expect("top is a common upper bound");
                if !common_up.is_subset(&up[lub]) {
                    return Err(LatticeError::NotALattice {
                        a: names[a].clone(),
                        b: names[b].clone(),
                        bound: "least upper bound",
                    });
                }
                let common_down = down[a].intersection(&down[b]);
                let glb = extreme(&common_down, false).expect("bottom is a common lower bound");
                if !common_down.is_subset(&down[glb]) {
                    return Err(LatticeError::NotALattice {
                        a: names[a].clone(),
                        b: names[b].clone(),
                        bound: "greatest lower bound",
                    });
                }
                join[a * m + b] = ElementId::new(lub);
                join[b * m + a] = ElementId::new(lub);
                meet[a * m + b] = ElementId::new(glb);
                meet[b * m + a] = ElementId::new(glb);
            }
        }

        let mut covers = Vec::new();
        let mut lower_cover_count = vec![0usize; m];
        for x in 0..m {
            let mut strict = down[x].clone();
            strict.remove(x);
            for y in strict.iter() {
                if up[y].intersection(&strict).count() == 1 {
                    covers.push((ElementId::new(y), ElementId::new(x)));
                    lower_cover_count[x] += 1;
                }
            }
        }
        covers.sort();

        let join_irreducibles: Vec<ElementId> = (0..m)
            .filter(|&x| lower_cover_count[x] == 1)
            .map(ElementId::new)
            .collect();
        let atoms: Vec<ElementId> = (0..m)
            .filter(|&x| x != bottom && down[x].count() == 2)
            .map(ElementId::new)
            .collect();

        let lattice = Lattice {
            names,
            index,
            up,
            down,
            join,
            meet,
            bottom: ElementId::new(bottom),
            top: ElementId::new(top),
            atoms,
            join_irreducibles,
            covers,
        };
        if let Some((a, b, c)) = lattice.distributivity_witness() {
            return Err(LatticeError::NotDistributive {
                a: lattice.names[a.index()].clone(),
                b: lattice.names[b.index()].clone(),
                c: lattice.names[c.index()].clone(),
            });
        }
        Ok(lattice)
    }

    /// Distributivity holds iff `x ↦ {j ∈ J : j ≤ x}` preserves joins.
    /// Only when that fails is the first failing triple searched for.
    fn distributivity_witness(&self) -> Option<(ElementId, ElementId, ElementId)> {
        let m = self.size();
        let mut jmask = BitSet::new(m);
        for j in &self.join_irreducibles {
            jmask.insert(j.index());
        }
        let phi: Vec<BitSet> = (0..m).map(|x| self.down[x].intersection(&jmask)).collect();
        let preserves = (0..m).all(|a| {
            (a..m).all(|b| {
                let mut u = phi[a].clone();
                u.union_with(&phi[b]);
                u == phi[self.join[a * m + b].index()]
            })
        });
        if preserves {
            return None;
        }
        for a in self.elements() {
            for b in self.elements() {
                for c in self.elements() {
                    let lhs = self.meet(a, self.join(b, c));
                    let rhs = self.join(self.meet(a, b), self.meet(a, c));
                    if lhs != rhs {
                        return Some((a, b, c));
                    }
                }
            }
        }
        unreachable!("a non-join-preserving Birkhoff map implies a failing triple")
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> + Clone {
        (0..self.size()).map(ElementId::new)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: ElementId) -> &str {
        &self.names[x.index()]
    }

    pub fn id(&self, name: &str) -> Option<ElementId> {
        self.index.get(name).copied()
    }

    pub fn element(&self, name: &str) -> Result<ElementId, LatticeError> {
        self.id(name)
            .ok_or_else(|| LatticeError::UnknownElement(name.to_string()))
    }

    pub fn contains(&self, x: ElementId) -> bool {
        x.index() < self.size()
    }

    #[inline]
    pub fn leq(&self, a: ElementId, b: ElementId) -> bool {
        self.up[a.index()].contains(b.index())
    }

    #[inline]
    pub fn lt(&self, a: ElementId, b: ElementId) -> bool {
        a != b && self.leq(a, b)
    }

    #[inline]
    pub fn join(&self, a: ElementId, b: ElementId) -> ElementId {
        self.join[a.index() * self.size() + b.index()]
    }

    #[inline]
    pub fn meet(&self, a: ElementId, b: ElementId) -> ElementId {
        self.meet[a.index() * self.size() + b.index()]
    }

    pub fn join_all(&self, xs: impl IntoIterator<Item = ElementId>) -> ElementId {
        xs.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    pub fn meet_all(&self, xs: impl IntoIterator<Item = ElementId>) -> ElementId {
        xs.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    pub fn bottom(&self) -> ElementId {
        self.bottom
    }

    pub fn top(&self) -> ElementId {
        self.top
    }

    pub fn atoms(&self) -> &[ElementId] {
        &self.atoms
    }

    pub fn join_irreducibles(&self) -> &[ElementId] {
        &self.join_irreducibles
    }

    /// Hasse diagram edges `(lower, upper)`, sorted by id.
    pub fn covers(&self) -> &[(ElementId, ElementId)] {
        &self.covers
    }

    pub fn is_cover(&self, lower: ElementId, upper: ElementId) -> bool {
        self.covers.binary_search(&(lower, upper)).is_ok()
    }

    /// `(a∧b) ∨ (b∧c) ∨ (a∧c)`
    #[inline]
    pub fn median(&self, a: ElementId, b: ElementId, c: ElementId) -> ElementId {
        let ab = self.meet(a, b);
        let bc = self.meet(b, c);
        let ac = self.meet(a, c);
        self.join(self.join(ab, bc), ac)
    }

    /// Is `z` in the interval `[x, y]`, i.e. `x∧y ≤ z ≤ x∨y`?
    #[inline]
    pub fn between(&self, x: ElementId, z: ElementId, y: ElementId) -> bool {
        self.leq(self.meet(x, y), z) && self.leq(z, self.join(x, y))
    }

    /// Elements of `[x, y]` in id order.
    pub fn interval(&self, x: ElementId, y: ElementId) -> Vec<ElementId> {
        let lo = self.meet(x, y).index();
        let hi = self.join(x, y).index();
        self.up[lo]
            .intersection(&self.down[hi])
            .iter()
            .map(ElementId::new)
            .collect()
    }

    /// `v(x)` = number of join-irreducibles below `x`.
    pub fn rank_valuation(&self) -> Valuation {
        Valuation(
            self.elements()
                .map(|x| {
                    self.join_irreducibles
                        .iter()
                        .filter(|&&j| self.leq(j, x))
                        .count() as i64
                })
                .collect(),
        )
    }

    pub fn metric_distance(&self, v: &Valuation, x: ElementId, y: ElementId) -> i64 {
        v.get(self.join(x, y)) - v.get(self.meet(x, y))
    }

    pub fn is_chain(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.leq(a, b) || self.leq(b, a)))
    }

    pub fn complement(&self, x: ElementId) -> Option<ElementId> {
        self.elements()
            .find(|&y| self.join(x, y) == self.top && self.meet(x, y) == self.bottom)
    }

    pub fn is_boolean(&self) -> bool {
        self.elements().all(|x| self.complement(x).is_some())
    }

    /// Number of coordinates if this is a Boolean hypercube: the
    /// join-irreducibles are exactly the atoms and there are `2^k` elements.
    pub fn hypercube_dimension(&self) -> Option<usize> {
        let k = self.atoms.len();
        (self.atoms == self.join_irreducibles && k < 63 && self.size() == 1usize << k).then_some(k)
    }

    /// Set of atoms below `x`, as a bitmask over `atoms()` in order.
    pub fn atom_mask(&self, x: ElementId) -> u64 {
        self.atoms
            .iter()
            .enumerate()
            .filter(|(_, &a)| self.leq(a, x))
            .fold(0u64, |m, (i, _)| m | (1 << i))
    }

    /// Element names in a topological order of the cover relation,
    /// ties broken by name.
    pub fn canonical_order(&self) -> Vec<ElementId> {
        let m = self.size();
        let mut indeg = vec![0usize; m];
        let mut succ = vec![Vec::new(); m];
        for &(lo, hi) in &self.covers {
            indeg[hi.index()] += 1;
            succ[lo.index()].push(hi);
        }
        let mut heap: BinaryHeap<Reverse<(&str, ElementId)>> = self
            .elements()
            .filter(|x| indeg[x.index()] == 0)
            .map(|x| Reverse((self.name(x), x)))
            .collect();
        let mut out = Vec::with_capacity(m);
        while let Some(Reverse((_, x))) = heap.pop() {
            out.push(x);
            for &s in &succ[x.index()] {
                indeg[s.index()] -= 1;
                if indeg[s.index()] == 0 {
                    heap.push(Reverse((self.name(s), s)));
                }
            }
        }
        out
    }

    /// The sublattice on `elements` (kept in the given order), which must be
    /// closed under join and meet.
    pub fn sublattice(&self, elements: &[ElementId]) -> Result<Lattice, LatticeError> {
        let mut local = HashMap::new();
        for (i, &e) in elements.iter().enumerate() {
            local.insert(e, i);
        }
        for &a in elements {
            for &b in elements {
                if !local.contains_key(&self.join(a, b)) || !local.contains_key(&self.meet(a, b)) {
                    let names: Vec<&str> = elements.iter().map(|&e| self.name(e)).collect();
                    return Err(LatticeError::NotASublattice(format!("{{{}}}", names.join(","))));
                }
            }
        }
        let k = elements.len();
        let up = elements
            .iter()
            .map(|&a| {
                let mut row = BitSet::new(k);
                for (j, &b) in elements.iter().enumerate() {
                    if self.leq(a, b) {
                        row.insert(j);
                    }
                }
                row
            })
            .collect();
        let names = elements.iter().map(|&e| self.names[e.index()].clone()).collect();
        Lattice::from_up_sets(names, up)
    }

    pub(crate) fn up_set(&self, a: ElementId) -> &BitSet {
        &self.up[a.index()]
    }
}

impl fmt::Debug for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers: Vec<(&str, &str)> = self
            .covers
            .iter()
            .map(|&(a, b)| (self.name(a), self.name(b)))
            .collect();
        f.debug_struct("Lattice")
            .field("names", &self.names)
            .field("covers", &covers)
            .finish()
    }
}

impl PartialEq for Lattice {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.up == other.up
    }
}

impl Eq for Lattice {}
