//! Lattices, rules and preference templates shared by the suites.

use rand::Rng;

use crate::error::{PreorderError, RuleError};
use crate::lattice::{ElementId, Lattice};
use crate::preorder::TotalPreorder;
use crate::rules::{CommitteeRule, ExplicitRule, MedianTree, Rule};

/// The chain `a < b < d < c`.
pub fn chain_abdc() -> Lattice {
    Lattice::from_covers(&["a", "b", "d", "c"], &[("a", "b"), ("b", "d"), ("d", "c")])
        .expect("a chain is a distributive lattice")
}

/// `3 × 3` grid, the product of two 3-chains.
pub fn grid3() -> Lattice {
    let c = Lattice::chain(3).expect("3 > 0");
    Lattice::product(&c, &c).expect("9 elements is within the cap")
}

/// The four lattices most suites sweep: `2^2`, `2^3`, a 4-chain, the 3×3 grid.
pub fn standard_lattices() -> Vec<(&'static str, Lattice)> {
    vec![
        ("2^2", Lattice::boolean_square()),
        ("2^3", Lattice::boolean(3).expect("8 elements")),
        ("4-chain", chain_abdc()),
        ("3x3 grid", grid3()),
    ]
}

/// Short description used in report names.
pub fn label(l: &Lattice) -> String {
    if l.is_chain() {
        format!("{}-chain", l.size())
    } else if let Some(k) = l.hypercube_dimension() {
        format!("2^{k}")
    } else {
        format!("{}-element lattice", l.size())
    }
}

pub fn ids(l: &Lattice, names: &[&str]) -> Vec<ElementId> {
    names
        .iter()
        .map(|n| l.id(n).unwrap_or_else(|| panic!("no element `{n}`")))
        .collect()
}

/// Ranks every element by the position of its class; unlisted elements share
/// one class at the bottom.
pub fn preorder(l: &Lattice, classes: &[&[ElementId]]) -> Result<TotalPreorder, PreorderError> {
    let rest = classes.len() as u32;
    let mut rank = vec![rest; l.size()];
    for (r, class) in classes.iter().enumerate() {
        for x in class.iter() {
            rank[x.index()] = r as u32;
        }
    }
    TotalPreorder::from_ranks(&rank)
}

/// First four-element chain `c0 < c1 < c2 < c3` in id order.
pub fn four_chain(l: &Lattice) -> Option<[ElementId; 4]> {
    let e: Vec<ElementId> = l.elements().collect();
    for &a in &e {
        for &b in e.iter().filter(|&&b| l.lt(a, b)) {
            for &d in e.iter().filter(|&&d| l.lt(b, d)) {
                if let Some(&c) = e.iter().find(|&&c| l.lt(d, c)) {
                    return Some([a, b, d, c]);
                }
            }
        }
    }
    None
}

/// First incomparable pair `(p, q)` in id order.
pub fn incomparable_pair(l: &Lattice) -> Option<(ElementId, ElementId)> {
    l.elements()
        .flat_map(|p| l.elements().map(move |q| (p, q)))
        .find(|&(p, q)| p < q && !l.leq(p, q) && !l.leq(q, p))
}

/// The two-voter rule on ballots `{a, d}` of a chain `a < b < d < c` with
/// `(a,a) → a`, `(a,d) → b`, `(d,a) → c`, `(d,d) → d`.
pub fn restricted_chain_rule(l: &Lattice, chain: [ElementId; 4]) -> Result<ExplicitRule, RuleError> {
    let [a, b, d, c] = chain;
    ExplicitRule::new(l, vec![vec![a, d], vec![a, d]], vec![a, b, c, d])
}

/// The same rule on full ballot spaces, reading every ballot as `a` or `d`
/// (elements at least `d` count as `d`).
pub fn embedded_chain_rule(l: &Lattice, chain: [ElementId; 4]) -> Result<ExplicitRule, RuleError> {
    let [a, b, d, c] = chain;
    let snap = |x: ElementId| if l.leq(d, x) { d } else { a };
    ExplicitRule::unrestricted(l, 2, |x| match (snap(x[0]) == a, snap(x[1]) == a) {
        (true, true) => a,
        (true, false) => b,
        (false, true) => c,
        (false, false) => d,
    })
}

/// The preferences `D` (unimodal) and `D′` (strict) for the chain rule, in
/// that order, each as `[top a, top d]`.
pub fn chain_rule_domains(l: &Lattice, chain: [ElementId; 4]) -> Result<[[TotalPreorder; 2]; 2], PreorderError> {
    let [a, b, d, c] = chain;
    Ok([
        [preorder(l, &[&[a], &[b], &[c, d]])?, preorder(l, &[&[d], &[b], &[c, a]])?],
        [preorder(l, &[&[a], &[b], &[c], &[d]])?, preorder(l, &[&[d], &[b], &[c], &[a]])?],
    ])
}

/// Two-voter rule on the square `{d < b, c < a}` with corners
/// `(d,d) → d`, `(d,a) → c`, `(a,d) → b`, `(a,a) → a`.
pub fn square_rule_tree(square: [ElementId; 4]) -> MedianTree {
    let [a, b, c, d] = square;
    MedianTree::canonical(&[d, c, b, a], 2)
}

/// Every nondecreasing constant sequence `y_0 ≤ … ≤ y_n`.
pub fn monotone_quotas(l: &Lattice, n: usize) -> Vec<Vec<ElementId>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n + 1);
    fn go(l: &Lattice, n: usize, cur: &mut Vec<ElementId>, out: &mut Vec<Vec<ElementId>>) {
        if cur.len() == n + 1 {
            out.push(cur.clone());
            return;
        }
        for y in l.elements() {
            if cur.last().map_or(true, |&p| l.leq(p, y)) {
                cur.push(y);
                go(l, n, cur, out);
                cur.pop();
            }
        }
    }
    go(l, n, &mut cur, &mut out);
    out
}

pub fn quota_table(l: &Lattice, constants: &[ElementId]) -> Result<ExplicitRule, RuleError> {
    Rule::from(CommitteeRule::quota(constants)).tabulate(l)
}

/// A uniformly random table on full ballot spaces.
pub fn random_table(l: &Lattice, n: usize, rng: &mut impl Rng) -> Result<ExplicitRule, RuleError> {
    let m = l.size();
    ExplicitRule::unrestricted(l, n, |_| ElementId::new(rng.gen_range(0..m)))
}

/// A random committee rule whose constants grow with the coalition, so it is
/// monotonic by construction.
pub fn random_monotone_committee(l: &Lattice, n: usize, rng: &mut impl Rng) -> CommitteeRule {
    let mut z = vec![l.bottom(); 1 << n];
    let mut order: Vec<u64> = (0..1u64 << n).collect();
    order.sort_by_key(|s| (s.count_ones(), *s));
    for s in order {
        let floor = l.join_all((0..n).filter(|i| s >> i & 1 == 1).map(|i| z[(s & !(1 << i)) as usize]));
        let above: Vec<ElementId> = l.elements().filter(|&y| l.leq(floor, y)).collect();
        z[s as usize] = above[rng.gen_range(0..above.len())];
    }
    CommitteeRule::new(n, z.into_iter().enumerate().map(|(s, y)| (s as u64, y)).collect())
        .expect("n is small")
}
