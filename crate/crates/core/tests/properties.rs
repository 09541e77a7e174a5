use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use lattice_vote::format;
use lattice_vote::rules::pointwise_median;
use lattice_vote::verify::suites::fixtures::{random_monotone_committee, random_table};
use lattice_vote::verify::{find_coalitional_manipulation, is_b_monotonic, is_strategy_proof, Domain, VerifyOptions};
use lattice_vote::{ElementId, ExplicitRule, Lattice, Rule, TotalPreorder};

fn lattices() -> impl Strategy<Value = Lattice> {
    prop_oneof![
        (1usize..=6).prop_map(|m| Lattice::chain(m).unwrap()),
        (1usize..=3).prop_map(|k| Lattice::boolean(k).unwrap()),
        (2usize..=3, 2usize..=4).prop_map(|(a, b)| {
            Lattice::product(&Lattice::chain(a).unwrap(), &Lattice::chain(b).unwrap()).unwrap()
        }),
    ]
}

fn with_triple() -> impl Strategy<Value = (Lattice, [ElementId; 3])> {
    lattices().prop_flat_map(|l| {
        let m = l.size();
        (Just(l), [0..m, 0..m, 0..m]).prop_map(|(l, t)| (l, t.map(ElementId::new)))
    })
}

fn small() -> impl Strategy<Value = Lattice> {
    prop_oneof![
        Just(Lattice::boolean_square()),
        Just(Lattice::chain(3).unwrap()),
        Just(Lattice::chain(4).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn median_is_symmetric_and_picks_betweenness((l, [a, b, c]) in with_triple()) {
        let m = l.median(a, b, c);
        prop_assert_eq!(m, l.median(b, c, a));
        prop_assert_eq!(m, l.median(c, a, b));
        prop_assert!(l.between(a, m, b) && l.between(b, m, c) && l.between(a, m, c));
        prop_assert_eq!(l.between(a, c, b), l.median(a, b, c) == c);
    }

    #[test]
    fn metric_agrees_with_betweenness((l, [x, y, z]) in with_triple()) {
        let v = l.rank_valuation();
        let d = |p, q| l.metric_distance(&v, p, q);
        prop_assert_eq!(l.between(x, y, z), d(x, z) == d(x, y) + d(y, z));
    }

    #[test]
    fn lattice_files_round_trip(l in lattices()) {
        let s = format::lattice_to_json(&l);
        let back = format::parse_lattice(&s).unwrap();
        prop_assert_eq!(format::lattice_to_json(&back), s);
        prop_assert_eq!(back.size(), l.size());
    }

    #[test]
    fn preorder_files_round_trip(l in small(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let all = lattice_vote::preorder::enumerate_topped_preorders(&l).unwrap();
        let p: &TotalPreorder = &all[rand::Rng::gen_range(&mut rng, 0..all.len())];
        let text = format::preorder_to_value(&l, p).to_string();
        prop_assert_eq!(&format::parse_preorder(&text, &l).unwrap(), p);
    }

    #[test]
    fn rule_files_round_trip(l in small(), n in 1usize..=3, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = random_monotone_committee(&l, n, &mut rng);
        let t = random_table(&l, n, &mut rng).unwrap();
        for r in [Rule::from(c.clone()), Rule::from(Rule::from(c.clone()).to_tree(&l).unwrap()), Rule::from(t)] {
            let s = format::rule_to_json(&l, &r).unwrap();
            prop_assert_eq!(format::parse_rule(&s, &l).unwrap(), r);
        }
    }

    #[test]
    fn monotone_committees_are_strategy_proof(l in small(), n in 1usize..=3, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = Rule::from(random_monotone_committee(&l, n, &mut rng)).tabulate(&l).unwrap();
        let opts = VerifyOptions::default();
        prop_assert!(is_b_monotonic(&f, &l, &opts).unwrap().holds());
        prop_assert!(is_strategy_proof(&f, &Domain::full_unimodal(&l, n).unwrap(), &l, &opts).unwrap().holds());
        prop_assert!(is_strategy_proof(&f, &Domain::full_lsu(&l, n).unwrap(), &l, &opts).unwrap().holds());
    }

    #[test]
    fn monotonic_iff_strategy_proof(l in small(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_table(&l, 2, &mut rng).unwrap();
        let opts = VerifyOptions::default();
        let mono = is_b_monotonic(&f, &l, &opts).unwrap().holds();
        prop_assert_eq!(mono, is_strategy_proof(&f, &Domain::full_unimodal(&l, 2).unwrap(), &l, &opts).unwrap().holds());
        prop_assert_eq!(mono, is_strategy_proof(&f, &Domain::full_lsu(&l, 2).unwrap(), &l, &opts).unwrap().holds());
    }

    #[test]
    fn pointwise_median_keeps_monotonicity(n in 1usize..=3, seed in any::<u64>()) {
        let l = Lattice::boolean_square();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut draw = || Rule::from(random_monotone_committee(&l, n, &mut rng)).tabulate(&l).unwrap();
        let (f, g, h) = (draw(), draw(), draw());
        let m: ExplicitRule = pointwise_median(&l, &f, &g, &h).unwrap();
        prop_assert!(is_b_monotonic(&m, &l, &VerifyOptions::default()).unwrap().holds());
    }

    #[test]
    fn witnesses_validate_and_ignore_workers(seed in any::<u64>()) {
        let l = Lattice::boolean_square();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = Rule::from(random_monotone_committee(&l, 3, &mut rng)).tabulate(&l).unwrap();
        let d = Domain::full_unimodal(&l, 3).unwrap();
        let serial = find_coalitional_manipulation(&f, &d, &l, &VerifyOptions::default()).unwrap();
        let parallel = find_coalitional_manipulation(&f, &d, &l, &VerifyOptions::default().with_workers(3)).unwrap();
        prop_assert_eq!(&serial, &parallel);
        if let Some(w) = serial {
            prop_assert!(w.validate(&f, &d));
            prop_assert!(w.coalition.len() >= 2);
        }
    }
}
