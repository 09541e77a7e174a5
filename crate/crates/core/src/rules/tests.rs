use std::collections::HashMap;

use super::automaton::{ballot_bindings, canonical_term, median_automaton};
use super::*;
use crate::lattice::Lattice;

fn ids(l: &Lattice, names: &str) -> Vec<ElementId> {
    names.split(',').map(|n| l.id(n.trim()).unwrap()).collect()
}

fn chain4() -> Lattice {
    Lattice::from_covers(&["a", "b", "d", "c"], &[("a", "b"), ("b", "d"), ("d", "c")]).unwrap()
}

/// Every ballot tuple over the carrier, voter 1 most significant.
fn all_profiles(m: usize, n: usize) -> Vec<Vec<ElementId>> {
    (0..m.pow(n as u32))
        .map(|mut c| {
            let mut v = vec![ElementId::new(0); n];
            for i in (0..n).rev() {
                v[i] = ElementId::new(c % m);
                c /= m;
            }
            v
        })
        .collect()
}

/// Join over all coalitions of size > n/2 of their meets, written out directly.
fn majority_oracle(l: &Lattice, b: &[ElementId]) -> ElementId {
    let n = b.len();
    let mut out = l.bottom();
    for s in 0u32..1 << n {
        if s.count_ones() as usize * 2 > n {
            let mut m = l.top();
            for (i, &x) in b.iter().enumerate() {
                if s >> i & 1 == 1 {
                    m = l.meet(m, x);
                }
            }
            out = l.join(out, m);
        }
    }
    out
}

#[test]
fn explicit_remark_rule() {
    let l = chain4();
    let y = ids(&l, "a,d");
    let table = ids(&l, "a,b,c,d");
    let f = ExplicitRule::new(&l, vec![y.clone(), y], table).unwrap();
    let e = |s| f.eval(&ids(&l, s)).unwrap();
    assert_eq!(e("a,d"), l.id("b").unwrap());
    assert_eq!(e("d,a"), l.id("c").unwrap());
    assert_eq!(e("a,a"), l.id("a").unwrap());
    assert_eq!(e("d,d"), l.id("d").unwrap());
    assert_eq!(
        f.eval(&ids(&l, "b,a")).unwrap_err(),
        RuleError::BallotOutOfSpace { voter: 0, ballot: l.id("b").unwrap().index() }
    );
    assert!(matches!(f.eval(&ids(&l, "a")).unwrap_err(), RuleError::ArityMismatch { .. }));
    assert_eq!(f.corners(&l).unwrap_err(), RuleError::CornerNotInBallotSpace(0));
    for r in 0..f.len() {
        assert_eq!(f.row(&f.ballots_at(r)).unwrap(), r);
    }
}

#[test]
fn explicit_validation() {
    let l = Lattice::boolean_square();
    let all: Vec<ElementId> = l.elements().collect();
    assert!(matches!(
        ExplicitRule::new(&l, vec![all.clone()], vec![l.top(); 3]).unwrap_err(),
        RuleError::TableSize { expected: 4, got: 3 }
    ));
    assert!(matches!(
        ExplicitRule::new(&l, vec![vec![l.top(), l.top()]], vec![l.top(); 2]).unwrap_err(),
        RuleError::DuplicateBallot { .. }
    ));
    assert!(matches!(
        ExplicitRule::unrestricted(&l, 11, |_| l.top()).unwrap_err(),
        RuleError::TooLarge { .. }
    ));
    let c = CommitteeRule::constant(3, l.id("x").unwrap());
    assert!(Rule::from(c).tabulate(&l).unwrap().table().iter().all(|&v| v == l.id("x").unwrap()));
    let p = Rule::from(CommitteeRule::projection(&l, 3, 0)).tabulate(&l).unwrap();
    for r in 0..p.len() {
        assert_eq!(p.at(r), p.ballots_at(r)[0]);
    }
}

#[test]
fn committee_majority() {
    let l = Lattice::boolean_square();
    let mu5 = CommitteeRule::extended_median(&l, 5);
    assert_eq!(mu5.eval(&l, &ids(&l, "x,x,y,y,0")).unwrap(), l.bottom());
    assert_eq!(mu5.eval(&l, &ids(&l, "1,1,1,1,0")).unwrap(), l.top());
    assert_eq!(extended_median(&l, &ids(&l, "1,x,y")), l.top());
    for b in all_profiles(4, 3) {
        assert_eq!(extended_median(&l, &b), l.median(b[0], b[1], b[2]));
    }
    for b in all_profiles(4, 5) {
        assert_eq!(mu5.eval(&l, &b).unwrap(), majority_oracle(&l, &b));
    }
    for x in l.elements() {
        assert_eq!(extended_median(&l, &[x; 4]), x);
    }
    assert!(mu5.is_order_filter());
    assert!(mu5.has_monotone_constants(&l));
    assert!(matches!(
        CommitteeRule::new(5, vec![(1 << 7, l.top())]).unwrap_err(),
        RuleError::ArityMismatch { .. }
    ));
    assert!(matches!(mu5.eval(&l, &ids(&l, "x,x")).unwrap_err(), RuleError::ArityMismatch { .. }));
    let empty = CommitteeRule::new(2, vec![]).unwrap();
    assert_eq!(empty.eval(&l, &ids(&l, "1,1")).unwrap(), l.bottom());
}

#[test]
fn quota_rules() {
    let l = Lattice::boolean_square();
    let (b, t) = (l.bottom(), l.top());
    let q = CommitteeRule::quota(&[b, b, t, t]);
    for p in all_profiles(4, 3) {
        assert_eq!(q.eval(&l, &p).unwrap(), l.median(p[0], p[1], p[2]));
    }
    let x = l.id("x").unwrap();
    let idem = CommitteeRule::quota(&[b, x, t]);
    assert!(!idem.is_order_filter() || idem.has_monotone_constants(&l));
    assert_eq!(idem.eval(&l, &[l.bottom(), l.bottom()]).unwrap(), b);
}

#[test]
fn theorem_two_corner_table() {
    // a = ⊤, d = ⊥, b = x, c = y
    let l = Lattice::boolean_square();
    let name = |s: &str| match s {
        "a" => "1",
        "b" => "x",
        "c" => "y",
        "d" => "0",
        _ => unreachable!(),
    };
    let e = |s: &str| l.id(name(s)).unwrap();
    let corners = vec![e("d"), e("c"), e("b"), e("a")];
    let t = MedianTree::canonical(&corners, 2);
    let f = |p: &str, q: &str| t.eval(&l, &[e(p), e(q)]).unwrap();
    for (p, q) in [("a", "c"), ("b", "a"), ("b", "c")] {
        assert_eq!(f(p, q), e("a"), "f({p},{q})");
    }
    for (p, q) in [("b", "b"), ("a", "b"), ("b", "d")] {
        assert_eq!(f(p, q), e("b"), "f({p},{q})");
    }
    for (p, q) in [("c", "c"), ("c", "a"), ("d", "c")] {
        assert_eq!(f(p, q), e("c"), "f({p},{q})");
    }
    for (p, q) in [("c", "d"), ("c", "b")] {
        assert_eq!(f(p, q), e("d"), "f({p},{q})");
    }
    let inner = l.median(l.median(e("d"), e("c"), e("c")), e("d"), l.median(e("b"), e("c"), e("a")));
    assert_eq!(f("d", "c"), inner);
    assert_eq!(Rule::from(t.clone()).corners(&l).unwrap(), corners);
}

#[test]
fn canonical_tree_shapes() {
    let l = Lattice::boolean_square();
    let (p, q) = (l.id("x").unwrap(), l.top());
    let t = MedianTree::canonical(&[p, q], 1);
    assert_eq!(
        t.root(),
        &MedianNode::Median(Box::new(MedianNode::Const(p)), Box::new(MedianNode::Ballot(0)), Box::new(MedianNode::Const(q)))
    );
    for x in l.elements() {
        assert_eq!(t.eval(&l, &[x]).unwrap(), l.join(p, l.meet(x, q)));
    }
    let c = t.to_committee(&l).unwrap();
    assert_eq!(c.terms(), &[(0, p), (1, q)]);
    for x in l.elements() {
        assert_eq!(c.eval(&l, &[x]).unwrap(), t.eval(&l, &[x]).unwrap());
    }
    // depth-3 layout: μ(μ(μ(c0, x3, c1), x2, μ(c2, x3, c3)), x1, …)
    let cs: Vec<ElementId> = (0..8).map(|i| ElementId::new(i % 4)).collect();
    let t3 = MedianTree::canonical(&cs, 3);
    let MedianNode::Median(left, mid, _) = t3.root() else { panic!() };
    assert_eq!(**mid, MedianNode::Ballot(0));
    let MedianNode::Median(ll, lm, _) = &**left else { panic!() };
    assert_eq!(**lm, MedianNode::Ballot(1));
    assert_eq!(
        **ll,
        MedianNode::Median(Box::new(MedianNode::Const(cs[0])), Box::new(MedianNode::Ballot(2)), Box::new(MedianNode::Const(cs[1])))
    );
    let k = l.id("y").unwrap();
    let flat = MedianTree::canonical(&[k; 8], 3);
    for b in all_profiles(4, 3) {
        assert_eq!(flat.eval(&l, &b).unwrap(), k);
    }
    let bad = MedianTree::new(1, MedianNode::Ballot(3));
    assert_eq!(bad.eval(&l, &[k]).unwrap_err(), RuleError::BadLeafIndex { voter: 3, n: 1 });
}

#[test]
fn majority_tree_and_committee() {
    let l = Lattice::boolean_square();
    let mu3 = Rule::from(CommitteeRule::extended_median(&l, 3));
    let corners = mu3.corners(&l).unwrap();
    for (c, &v) in corners.iter().enumerate() {
        let expect = if c.count_ones() >= 2 { l.top() } else { l.bottom() };
        assert_eq!(v, expect);
    }
    let via_tree = mu3.to_tree(&l).unwrap().to_committee(&l).unwrap();
    for &(s, z) in via_tree.terms() {
        assert_eq!(z, if s.count_ones() >= 2 { l.top() } else { l.bottom() });
    }
    let k = CommitteeRule::constant(2, l.id("x").unwrap());
    let kt = Rule::from(k).to_tree(&l).unwrap().to_committee(&l).unwrap();
    assert!(kt.terms().iter().all(|&(_, z)| z == l.id("x").unwrap()));
}

#[test]
fn committee_tree_round_trip() {
    for l in [Lattice::boolean_square(), Lattice::boolean(3).unwrap(), chain4()] {
        let m = l.size();
        for n in 1..=3 {
            let mut seeds = vec![
                CommitteeRule::extended_median(&l, n),
                CommitteeRule::projection(&l, n, n - 1),
                CommitteeRule::constant(n, ElementId::new(m / 2)),
            ];
            let terms: Vec<(u64, ElementId)> = (0u64..1 << n).map(|s| (s, ElementId::new((s as usize * 7 + 3) % m))).collect();
            seeds.push(CommitteeRule::new(n, terms).unwrap());
            for r in seeds {
                let rule = Rule::from(r.clone());
                let back = rule.to_tree(&l).unwrap().to_committee(&l).unwrap();
                for b in all_profiles(m, n) {
                    assert_eq!(back.eval(&l, &b).unwrap(), r.eval(&l, &b).unwrap());
                }
            }
        }
    }
}

#[test]
fn automaton_matches_tree() {
    let l = Lattice::boolean_square();
    for n in 1..=3 {
        for seed in 0..6usize {
            let corners: Vec<ElementId> = (0..1 << n).map(|c| ElementId::new((c * (seed + 1) + seed) % 4)).collect();
            let tree = MedianTree::canonical(&corners, n);
            let a = median_automaton(&l, &corners);
            let term = canonical_term(n);
            term.check(a.signature()).unwrap();
            assert_eq!(term.depth(), n);
            for b in all_profiles(4, n) {
                assert_eq!(a.run(&ballot_bindings(&b), &term).unwrap(), tree.eval(&l, &b).unwrap());
            }
        }
    }
}

#[test]
fn automaton_basics() {
    let l = Lattice::boolean_square();
    let lat = l.clone();
    let sig = Signature::new().with("∨", 2);
    let a = TreeAutomaton::new(sig.clone(), |q: &ElementId| *q).operation("∨", move |xs| lat.join(xs[0], xs[1]));
    let t = TermTree::op("∨", vec![TermTree::var("z1"), TermTree::var("z2")]);
    let init = HashMap::from([("z1".to_string(), l.id("x").unwrap()), ("z2".to_string(), l.id("y").unwrap())]);
    assert_eq!(a.run(&init, &t).unwrap(), l.top());
    let single = TermTree::var("z");
    let id = TreeAutomaton::new(Signature::new(), |q: &u32| *q);
    assert_eq!(id.run(&HashMap::from([("z".to_string(), 7)]), &single).unwrap(), 7);
    assert_eq!(
        id.run(&HashMap::new(), &single).unwrap_err(),
        RuleError::UnboundVariable("z".into())
    );
    let bad = TermTree::op("∨", vec![TermTree::var("z1")]);
    assert!(matches!(bad.check(&sig).unwrap_err(), RuleError::MalformedTree(_)));
    assert!(matches!(a.run(&init, &bad).unwrap_err(), RuleError::MalformedTree(_)));
    // homomorphism: the run on ∨(T1, T2) is the join of the runs on T1 and T2
    let t1 = TermTree::op("∨", vec![TermTree::var("z1"), TermTree::var("z1")]);
    let t2 = TermTree::var("z2");
    let whole = TermTree::op("∨", vec![t1.clone(), t2.clone()]);
    assert_eq!(
        a.run(&init, &whole).unwrap(),
        l.join(a.run(&init, &t1).unwrap(), a.run(&init, &t2).unwrap())
    );
}

#[test]
fn pointwise_median_of_tables() {
    let l = Lattice::boolean_square();
    let f = Rule::from(CommitteeRule::projection(&l, 3, 0)).tabulate(&l).unwrap();
    let g = Rule::from(CommitteeRule::projection(&l, 3, 1)).tabulate(&l).unwrap();
    let h = Rule::from(CommitteeRule::projection(&l, 3, 2)).tabulate(&l).unwrap();
    let m = pointwise_median(&l, &f, &g, &h).unwrap();
    let mu3 = Rule::from(CommitteeRule::extended_median(&l, 3)).tabulate(&l).unwrap();
    assert_eq!(m, mu3);
}
