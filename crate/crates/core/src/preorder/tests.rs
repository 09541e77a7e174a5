use std::collections::BTreeSet;

use super::*;
use crate::lattice::Lattice;

fn bsq() -> Lattice {
    Lattice::boolean_square()
}

fn p(s: &str, l: &Lattice) -> TotalPreorder {
    TotalPreorder::parse(s, l).unwrap()
}

/// Every rank vector over `0..m` that is contiguous and has a unique zero.
fn brute_topped(m: usize) -> BTreeSet<Vec<u32>> {
    let mut out = BTreeSet::new();
    let total = m.pow(m as u32);
    for code in 0..total {
        let mut c = code;
        let v: Vec<u32> = (0..m)
            .map(|_| {
                let d = (c % m) as u32;
                c /= m;
                d
            })
            .collect();
        let max = *v.iter().max().unwrap();
        let contiguous = (0..=max).all(|r| v.contains(&r));
        if contiguous && v.iter().filter(|&&r| r == 0).count() == 1 {
            out.insert(v);
        }
    }
    out
}

/// Definition-level filters, written against `between` directly.
fn brute_unimodal(p: &TotalPreorder, l: &Lattice) -> bool {
    l.elements().all(|x| {
        l.elements().all(|y| {
            l.elements()
                .all(|z| !l.between(x, z, y) || p.weakly_prefers(z, x) || p.weakly_prefers(z, y))
        })
    })
}

fn brute_lsu(p: &TotalPreorder, l: &Lattice) -> bool {
    let t = p.top();
    l.elements()
        .all(|y| l.elements().all(|z| !(l.between(t, z, y) && z != y) || p.prefers(z, y)))
}

#[test]
fn topped_counts_match_oracle() {
    for m in 1..=5 {
        let got = topped_preorders(m, DEFAULT_ENUMERATION_CAP).unwrap();
        let set: BTreeSet<Vec<u32>> = got.iter().map(|p| p.ranks().to_vec()).collect();
        assert_eq!(set.len(), got.len(), "duplicates for m={m}");
        assert_eq!(set, brute_topped(m), "m={m}");
    }
    assert_eq!(topped_preorders(2, 7).unwrap().len(), 2);
    assert_eq!(topped_preorders(3, 7).unwrap().len(), 9);
    assert_eq!(topped_preorders(4, 7).unwrap().len(), 52);
    assert!(matches!(
        topped_preorders(8, 7).unwrap_err(),
        PreorderError::TooLarge { size: 8, cap: 7 }
    ));
}

#[test]
fn enumeration_order_is_top_first_then_blocks() {
    let all = topped_preorders(3, 7).unwrap();
    let ranks: Vec<&[u32]> = all.iter().map(|p| p.ranks()).collect();
    assert_eq!(ranks[0], &[0, 1, 2]);
    assert_eq!(ranks[1], &[0, 2, 1]);
    assert_eq!(ranks[2], &[0, 1, 1]);
    assert_eq!(ranks[3], &[1, 0, 2]);
    assert!(all.iter().take(3).all(|p| p.top().index() == 0));
}

#[test]
fn square_domains_match_templates() {
    let l = bsq();
    let u = enumerate_unimodal(&l).unwrap();
    let s = enumerate_lsu(&l).unwrap();
    assert_eq!(u.len(), 12);
    assert_eq!(s.len(), 12);
    for a in l.elements() {
        let ac = l.complement(a).unwrap();
        let rest: Vec<_> = l.elements().filter(|&e| e != a && e != ac).collect();
        let (b, bc) = (rest[0], rest[1]);
        let n = |e| l.name(e);
        let uni: BTreeSet<TotalPreorder> = [
            format!("{} > {} > {} ~ {}", n(a), n(b), n(bc), n(ac)),
            format!("{} > {} > {} ~ {}", n(a), n(bc), n(b), n(ac)),
            format!("{} > {} ~ {} ~ {}", n(a), n(b), n(bc), n(ac)),
        ]
        .iter()
        .map(|t| p(t, &l))
        .collect();
        let lsu: BTreeSet<TotalPreorder> = [
            format!("{} > {} > {} > {}", n(a), n(b), n(bc), n(ac)),
            format!("{} > {} > {} > {}", n(a), n(bc), n(b), n(ac)),
            format!("{} > {} ~ {} > {}", n(a), n(b), n(bc), n(ac)),
        ]
        .iter()
        .map(|t| p(t, &l))
        .collect();
        let got_u: BTreeSet<_> = u.iter().filter(|q| q.top() == a).cloned().collect();
        let got_s: BTreeSet<_> = s.iter().filter(|q| q.top() == a).cloned().collect();
        assert_eq!(got_u, uni);
        assert_eq!(got_s, lsu);
    }
    let us: BTreeSet<_> = u.iter().collect();
    assert!(s.iter().all(|q| !us.contains(q)));
    let sep = enumerate_separable(&l).unwrap();
    assert_eq!(sep, s);
}

#[test]
fn predicates_agree_with_definitions() {
    let lattices = [
        bsq(),
        Lattice::chain(3).unwrap(),
        Lattice::chain(4).unwrap(),
        Lattice::chain(5).unwrap(),
        Lattice::from_covers(&["0", "a", "b", "ab", "c"], &[("0", "a"), ("0", "b"), ("a", "ab"), ("b", "ab"), ("ab", "c")]).unwrap(),
    ];
    for l in &lattices {
        for q in enumerate_topped_preorders(l).unwrap() {
            assert_eq!(q.is_unimodal(l).unwrap(), brute_unimodal(&q, l));
            assert_eq!(q.is_locally_strictly_unimodal(l).unwrap(), brute_lsu(&q, l));
        }
    }
    let c3 = Lattice::chain(3).unwrap();
    assert_eq!(enumerate_unimodal(&c3).unwrap().len(), 7);
    assert_eq!(enumerate_lsu(&c3).unwrap().len(), 5);
}

#[test]
fn single_examples() {
    let l = bsq();
    assert!(!p("x > y > 0 > 1", &l).is_unimodal(&l).unwrap());
    assert!(!p("x > y ~ 0 ~ 1", &l).is_separable(&l).unwrap());
    let c = Lattice::from_covers(&["a", "x", "y"], &[("a", "x"), ("x", "y")]).unwrap();
    let r = p("a > x ~ y", &c);
    assert!(r.is_unimodal(&c).unwrap());
    assert!(!r.is_locally_strictly_unimodal(&c).unwrap());
    let two = Lattice::chain(2).unwrap();
    for q in enumerate_topped_preorders(&two).unwrap() {
        assert!(q.is_locally_strictly_unimodal(&two).unwrap());
        assert!(q.is_separable(&two).unwrap());
    }
    assert!(matches!(
        p("a > x ~ y", &c).is_unimodal(&l).unwrap_err(),
        PreorderError::CarrierMismatch { .. }
    ));
    assert!(p("a > x ~ y", &c).is_separable(&c).is_err());
    assert_eq!(TotalPreorder::from_ranks(&[1, 1, 2]).unwrap_err(), PreorderError::NotTopped(2));
    assert_eq!(TotalPreorder::from_ranks(&[0, 1, 1, 0]).unwrap_err(), PreorderError::NotTopped(2));
    assert_eq!(TotalPreorder::from_ranks(&[3, 7, 7]).unwrap().ranks(), &[0, 1, 1]);
    assert_eq!(p("x > 1 > 0 ~ y", &l).display(&l), "x ≻ 1 ≻ 0 ∼ y");
}

#[test]
fn separable_equals_lsu_on_cube() {
    let c = Lattice::boolean(3).unwrap();
    let all = topped_preorders(8, 8).unwrap();
    let mut count = 0;
    for q in &all {
        let lsu = q.is_locally_strictly_unimodal(&c).unwrap();
        assert_eq!(q.is_separable(&c).unwrap(), lsu);
        count += lsu as usize;
    }
    assert_eq!(count, 1784);
}

#[test]
fn top_betweenness_relation() {
    let c = Lattice::chain(4).unwrap();
    let r = strict_top_betweenness(&c, c.bottom());
    for a in c.elements() {
        for b in c.elements() {
            assert_eq!(r.contains(a, b), a < b);
        }
    }
    let l = bsq();
    let x = l.id("x").unwrap();
    let r = strict_top_betweenness(&l, x);
    for (a, b) in [("x", "0"), ("x", "y"), ("x", "1"), ("0", "y"), ("1", "y")] {
        assert!(r.contains(l.id(a).unwrap(), l.id(b).unwrap()), "{a} ≻ {b}");
    }
    assert!(r.is_irreflexive() && r.is_asymmetric());
    for lat in [bsq(), Lattice::boolean(3).unwrap(), Lattice::chain(5).unwrap()] {
        for peak in lat.elements() {
            let r = strict_top_betweenness(&lat, peak);
            assert!(r.is_s_consistent());
            for y in lat.elements().filter(|&y| y != peak) {
                assert!(r.contains(peak, y));
            }
            let ext = extend_to_total_preorder(&r).unwrap();
            assert_eq!(ext.top(), peak);
            assert!(ext.is_locally_strictly_unimodal(&lat).unwrap());
            assert!(r.pairs().all(|(a, b)| ext.prefers(a, b)));
        }
    }
}

#[test]
fn extension_edge_cases() {
    let e = extend_to_total_preorder(&StrictRelation::new(4)).unwrap();
    assert_eq!(e.ranks(), &[0, 1, 1, 1]);
    assert!(StrictRelation::new(3).is_s_consistent());
    let (a, b) = (ElementId::new(0), ElementId::new(1));
    let cyc = StrictRelation::from_pairs(2, [(a, b), (b, a)]);
    assert!(!cyc.is_s_consistent());
    assert!(matches!(extend_to_total_preorder(&cyc), Err(PreorderError::NotConsistent(_))));
    let c3 = Lattice::chain(3).unwrap();
    let e = extend_to_total_preorder(&strict_top_betweenness(&c3, c3.bottom())).unwrap();
    assert_eq!(e.ranks(), &[0, 1, 2]);
    // two unbeaten elements: the lower id stays on top
    let r = StrictRelation::from_pairs(3, [(ElementId::new(2), ElementId::new(0))]);
    assert_eq!(extend_to_total_preorder(&r).unwrap().ranks(), &[2, 0, 1]);
}

#[test]
fn lemma_witness_preorders() {
    let l = bsq();
    let id = |n| l.id(n).unwrap();
    let w = build_three_class_witness(&l, id("x"), id("0"));
    assert_eq!(w, p("x > 0 > y ~ 1", &l));
    let w = build_three_class_witness(&l, id("y"), id("y"));
    assert_eq!(w.classes().len(), 2);
    let w = build_lsu_witness(&l, id("x"), id("0"));
    assert_eq!(w.top(), id("x"));
    assert!(w.prefers(id("0"), id("y")) && w.prefers(id("0"), id("1")));
    assert!(w.is_locally_strictly_unimodal(&l).unwrap());
    let c = Lattice::chain(5).unwrap();
    let w = build_lsu_witness(&c, c.top(), c.top());
    assert_eq!(w.ranks(), &[4, 3, 2, 1, 0]);
    for lat in [bsq(), Lattice::boolean(3).unwrap(), Lattice::chain(4).unwrap(),
                Lattice::product(&Lattice::chain(3).unwrap(), &Lattice::chain(3).unwrap()).unwrap()] {
        for peak in lat.elements() {
            for r in lat.elements() {
                let three = build_three_class_witness(&lat, peak, r);
                assert!(three.is_unimodal(&lat).unwrap());
                assert_eq!(three.top(), peak);
                let lsu = build_lsu_witness(&lat, peak, r);
                assert!(lsu.is_locally_strictly_unimodal(&lat).unwrap());
                assert_eq!(lsu.top(), peak);
                let inside = lat.interval(peak, r);
                for &i in &inside {
                    for o in lat.elements().filter(|o| !inside.contains(o)) {
                        assert!(lsu.prefers(i, o));
                    }
                }
            }
        }
    }
}
