//! One line per acceptance criterion. Library results are compared against
//! brute-force oracles written here over the bitmask encoding of the Boolean
//! square (`0, x, y, 1` = `0b00, 0b01, 0b10, 0b11`; meet is `&`, join is `|`).

use std::collections::BTreeSet;

use lattice_vote::preorder::{enumerate_lsu, enumerate_separable, enumerate_unimodal};
use lattice_vote::verify::suites::{self, fixtures, ste1_counterexample, ste_counterexample, ste_counts};
use lattice_vote::verify::{
    find_coalitional_manipulation, find_coalitional_manipulation_filtered, is_b_monotonic, is_strategy_proof,
    Domain, SearchFilter, VerificationReport, VerifyOptions,
};
use lattice_vote::{format, CommitteeRule, ElementId, Lattice, Rule, TotalPreorder};

type Outcome = Result<String, String>;

fn opts() -> VerifyOptions {
    VerifyOptions::default().with_workers(std::thread::available_parallelism().map_or(1, |n| n.get()))
}

fn e(i: usize) -> ElementId {
    ElementId::new(i)
}

fn data(name: &str) -> String {
    std::fs::read_to_string(format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

fn report_ok(r: &VerificationReport) -> Result<(), String> {
    match r.failures().next() {
        None => Ok(()),
        Some(f) => Err(format!("{}: {}", f.claim, f.witness.as_ref().map_or(String::new(), |w| w.to_string()))),
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

// Square oracles on bitmasks.

fn sq_between(a: usize, c: usize, b: usize) -> bool {
    a & b & !c == 0 && c & !(a | b) == 0
}

fn sq_median(a: usize, b: usize, c: usize) -> usize {
    (a & b) | (b & c) | (a & c)
}

fn sq_majority(xs: &[usize]) -> usize {
    let need = xs.len() / 2 + 1;
    (0..2).filter(|&bit| xs.iter().filter(|&&x| x >> bit & 1 == 1).count() >= need).map(|bit| 1 << bit).sum()
}

fn dense(ranks: &[u32]) -> Vec<u32> {
    let levels: BTreeSet<u32> = ranks.iter().copied().collect();
    ranks.iter().map(|r| levels.iter().position(|l| l == r).unwrap() as u32).collect()
}

/// Every topped total preorder on four elements, as dense rank vectors.
fn topped() -> BTreeSet<Vec<u32>> {
    let mut out = BTreeSet::new();
    for code in 0..256u32 {
        let r = dense(&(0..4).map(|i| code >> (2 * i) & 3).collect::<Vec<_>>());
        if r.iter().filter(|&&x| x == 0).count() == 1 {
            out.insert(r);
        }
    }
    out
}

fn oracle_unimodal(r: &[u32]) -> bool {
    (0..4).all(|a| (0..4).all(|b| (0..4).all(|c| !sq_between(a, c, b) || r[c] <= r[a] || r[c] <= r[b])))
}

fn oracle_lsu(r: &[u32]) -> bool {
    let t = r.iter().position(|&x| x == 0).unwrap();
    (0..4).all(|y| (0..4).all(|z| z == y || !sq_between(t, z, y) || r[z] < r[y]))
}

fn oracle_separable(r: &[u32]) -> bool {
    [1usize, 2].iter().all(|&a| {
        r[a] != r[0] && {
            let good = r[a] < r[0];
            (0..4).filter(|s| s & a == 0).all(|s| if good { r[s | a] < r[s] } else { r[s | a] > r[s] })
        }
    })
}

fn ranks(p: &TotalPreorder) -> Vec<u32> {
    p.ranks().to_vec()
}

/// Names of `0, x, y, 1` to bitmask.
fn bit(name: &str) -> usize {
    ["0", "x", "y", "1"].iter().position(|&n| n == name).unwrap()
}

fn from_names(classes: &[&[&str]]) -> Vec<u32> {
    let mut r = vec![classes.len() as u32; 4];
    for (k, c) in classes.iter().enumerate() {
        for n in c.iter() {
            r[bit(n)] = k as u32;
        }
    }
    dense(&r)
}

fn criterion1() -> Outcome {
    let l = Lattice::boolean_square();
    let all = topped();
    let want_u: BTreeSet<_> = all.iter().filter(|r| oracle_unimodal(r)).cloned().collect();
    let want_s: BTreeSet<_> = all.iter().filter(|r| oracle_lsu(r)).cloned().collect();
    let want_sep: BTreeSet<_> = all.iter().filter(|r| oracle_separable(r)).cloned().collect();
    let got_u: BTreeSet<_> = enumerate_unimodal(&l).unwrap().iter().map(ranks).collect();
    let got_s: BTreeSet<_> = enumerate_lsu(&l).unwrap().iter().map(ranks).collect();
    let got_sep: BTreeSet<_> = enumerate_separable(&l).unwrap().iter().map(ranks).collect();

    let mut tu = BTreeSet::new();
    let mut ts = BTreeSet::new();
    let names = ["0", "x", "y", "1"];
    for a in 0..4 {
        let ac = 3 - a;
        let rest: Vec<usize> = (0..4).filter(|&z| z != a && z != ac).collect();
        let (n, nc, b, bc) = (names[a], names[ac], names[rest[0]], names[rest[1]]);
        tu.insert(from_names(&[&[n], &[b], &[bc, nc]]));
        tu.insert(from_names(&[&[n], &[bc], &[b, nc]]));
        tu.insert(from_names(&[&[n], &[b, bc, nc]]));
        ts.insert(from_names(&[&[n], &[b], &[bc], &[nc]]));
        ts.insert(from_names(&[&[n], &[bc], &[b], &[nc]]));
        ts.insert(from_names(&[&[n], &[b, bc], &[nc]]));
    }
    let per_top = |s: &BTreeSet<Vec<u32>>| (0..4).map(|a| s.iter().filter(|r| r[a] == 0).count()).collect::<Vec<_>>();
    ensure(got_u == want_u && got_u == tu, || format!("unimodal mismatch: {} found", got_u.len()))?;
    ensure(got_s == want_s && got_s == ts, || format!("strict mismatch: {} found", got_s.len()))?;
    ensure(per_top(&got_u) == [3; 4] && per_top(&got_s) == [3; 4], || "not three per top".into())?;
    ensure(got_u.is_disjoint(&got_s), || "U and S overlap".into())?;
    ensure(got_sep == got_s && want_sep == got_s, || format!("separable set has {} elements", got_sep.len()))?;
    report_ok(&suites::boolean_square(&opts()).unwrap())?;
    Ok(format!("|U| = {}, |S| = {}, three per top, disjoint, separable = S", got_u.len(), got_s.len()))
}

const LISTED: [[&str; 3]; 32] = [
    ["0", "x", "1"], ["0", "y", "1"], ["0", "0", "1"], ["0", "1", "1"],
    ["1", "x", "0"], ["1", "y", "0"], ["1", "0", "0"], ["1", "1", "0"],
    ["x", "0", "y"], ["x", "1", "y"], ["x", "x", "y"], ["x", "y", "y"],
    ["y", "0", "x"], ["y", "1", "x"], ["y", "x", "x"], ["y", "y", "x"],
    ["0", "0", "x"], ["0", "x", "x"], ["x", "0", "0"], ["x", "x", "0"],
    ["0", "0", "y"], ["0", "y", "y"], ["y", "0", "0"], ["y", "y", "0"],
    ["x", "x", "1"], ["x", "1", "1"], ["1", "x", "x"], ["1", "1", "x"],
    ["y", "y", "1"], ["y", "1", "1"], ["1", "y", "y"], ["1", "1", "y"],
];

fn criterion2() -> Outcome {
    let l = Lattice::boolean_square();
    let mut expected: BTreeSet<[usize; 3]> = LISTED.iter().map(|t| [bit(t[0]), bit(t[1]), bit(t[2])]).collect();
    ensure(expected.len() == 32, || "listing has duplicates".into())?;
    for a in 0..4 {
        for b in 0..4 {
            expected.insert([a, a, b]);
            expected.insert([a, b, b]);
        }
    }
    let mut computed = BTreeSet::new();
    for a in 0..4 {
        for c in 0..4 {
            for b in 0..4 {
                if l.between(e(a), e(c), e(b)) {
                    computed.insert([a, c, b]);
                }
            }
        }
    }
    ensure(computed == expected, || format!("{:?}", computed.symmetric_difference(&expected).collect::<Vec<_>>()))?;
    Ok(format!("{} triples: the 32 listed plus the trivial ones", computed.len()))
}

fn criterion3() -> Outcome {
    let l = Lattice::boolean_square();
    let mu = format::parse_rule(&data("majority5.json"), &l).unwrap().tabulate(&l).unwrap();
    for row in 0..mu.len() {
        let b: Vec<usize> = mu.ballots_at(row).iter().map(|x| x.index()).collect();
        ensure(mu.at(row).index() == sq_majority(&b), || format!("table differs at {b:?}"))?;
    }
    let o = opts();
    let u = Domain::full_unimodal(&l, 5).unwrap();
    let s = Domain::full_lsu(&l, 5).unwrap();
    ensure(is_b_monotonic(&mu, &l, &o).unwrap().holds(), || "not monotonic".into())?;
    ensure(is_strategy_proof(&mu, &u, &l, &o).unwrap().holds(), || "not SP on U".into())?;
    ensure(is_strategy_proof(&mu, &s, &l, &o).unwrap().holds(), || "not SP on S".into())?;
    let first = find_coalitional_manipulation(&mu, &u, &l, &o).unwrap().ok_or("no witness")?;
    let filter = SearchFilter {
        coalition_size: Some(4),
        outcome_truthful: Some(e(0)),
        outcome_deviant: Some(e(3)),
        ..SearchFilter::default()
    };
    let w = find_coalitional_manipulation_filtered(&mu, &u, &l, &filter, &o).unwrap().ok_or("no size-4 witness")?;
    // Oracle re-check of the size-4 witness.
    let dev: Vec<usize> = w.deviated_ballots().iter().map(|x| x.index()).collect();
    let truthful: Vec<usize> = w.ballots.iter().map(|x| x.index()).collect();
    ensure(sq_majority(&truthful) == 0 && sq_majority(&dev) == 3, || "outcomes are not 0 -> 1".into())?;
    ensure(
        w.coalition.iter().all(|&i| {
            let r = ranks(&w.profile.prefs[i]);
            r[3] < r[0] && r[w.ballots[i].index()] == 0 && oracle_unimodal(&r)
        }),
        || "a member does not gain".into(),
    )?;
    let tops: Vec<usize> = w.coalition.iter().map(|&i| truthful[i]).collect();
    let mut sorted = tops.clone();
    sorted.sort();
    ensure(sorted == [1, 1, 2, 2], || format!("member tops {tops:?}"))?;
    let walk = suites::walkthrough_witness(&l, &mu).unwrap();
    ensure(walk.validate(&mu, &u), || "walkthrough witness does not validate".into())?;
    Ok(format!(
        "monotonic, SP on U and S; first witness {}; size-4 witness {}",
        first.summary(&l),
        w.summary(&l)
    ))
}

fn criterion4() -> Outcome {
    let l = format::parse_lattice(&data("chain4.json")).unwrap();
    let f = format::parse_rule(&data("remark3.json"), &l).unwrap().tabulate(&l).unwrap();
    let [a, b, d, c] = [0, 1, 2, 3].map(e);
    // Direct oracle: f(d,a) = c lies outside [d, a] = {a, b, d}.
    ensure(f.eval(&[d, a]).unwrap() == c && !l.between(d, c, a), || "monotonicity oracle".into())?;
    let weak = format::parse_preorders(&data("remark3_prefs.json"), &l).unwrap();
    let strict = format::parse_preorders(&data("remark3_strict_prefs.json"), &l).unwrap();
    for dom in [weak, strict] {
        // Both voters gain: voter 1 (top d) and voter 2 (top a) rank b above c.
        let dd = dom.iter().find(|p| p.top() == d).unwrap();
        let aa = dom.iter().find(|p| p.top() == a).unwrap();
        ensure(dd.prefers(b, c) && aa.prefers(b, c) && f.eval(&[a, d]).unwrap() == b, || "coalition oracle".into())?;
    }
    let r = suites::theorem2(&l, &opts()).unwrap();
    report_ok(&r)?;
    Ok(format!("{} checks: SP on D and D′, not monotonic, not SP on U, (d,a) -> (a,d) gives c -> b", r.checks.len()))
}

fn criterion5() -> Outcome {
    let l = Lattice::boolean_square();
    let f = format::parse_rule(&data("theorem2.json"), &l).unwrap().tabulate(&l).unwrap();
    let (a, b, c, d) = (3, 1, 2, 0);
    let oracle = |x: usize, y: usize| sq_median(sq_median(d, y, c), x, sq_median(b, y, a));
    for x in 0..4 {
        for y in 0..4 {
            ensure(f.eval(&[e(x), e(y)]).unwrap().index() == oracle(x, y), || format!("table at ({x},{y})"))?;
        }
    }
    let lines = [(a, [(a, c), (b, a), (b, c)]), (b, [(b, b), (a, b), (b, d)]), (c, [(c, c), (c, a), (d, c)])];
    for (out, cells) in lines {
        for (x, y) in cells {
            ensure(oracle(x, y) == out, || format!("f({x},{y}) != {out}"))?;
        }
    }
    ensure(oracle(c, d) == d && oracle(c, b) == d, || "f(c,d), f(c,b)".into())?;
    let r = suites::theorem2(&l, &opts()).unwrap();
    report_ok(&r)?;
    Ok("table agrees with the nested median, f(d,c) = c; SP on U and S; coalitional witness found".into())
}

fn criterion6() -> Outcome {
    let l = Lattice::boolean_square();
    let r = suites::theorem1(&l, 2, 200, &opts()).unwrap();
    report_ok(&r)?;
    let quota = r.checks.iter().filter(|c| c.claim.starts_with("quota rules") && c.claim.contains("agree")).count();
    ensure(quota == 3, || format!("{quota} quota groups"))?;
    Ok(format!("{} checks over 200 random tables, 200 committees and quota rules for n = 1, 2, 3", r.checks.len()))
}

fn criterion7() -> Outcome {
    let r = suites::run("lemma2", None, None, None, &opts()).unwrap();
    report_ok(&r)?;
    Ok(r.checks.iter().map(|c| c.claim.clone()).filter(|c| c.contains("triple")).collect::<Vec<_>>().join("; "))
}

fn criterion8() -> Outcome {
    let r = suites::run("claim1", None, None, None, &opts()).unwrap();
    report_ok(&r)?;
    // Independent check of the median identities on the square.
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                let m = Lattice::boolean_square().median(e(a), e(b), e(c)).index();
                ensure(m == sq_median(a, b, c), || format!("median({a},{b},{c})"))?;
                ensure((m == c) == sq_between(a, c, b), || "median betweenness".into())?;
            }
        }
    }
    Ok(format!("{} checks on 2^2, 2^3, the 4-chain and the 3x3 grid", r.checks.len()))
}

fn criterion9() -> Outcome {
    let l = Lattice::boolean_square();
    let ballots = [3, 1, 2];
    let m = sq_majority(&ballots);
    let below = ballots.iter().filter(|&&x| x & !m == 0).count();
    let above = ballots.iter().filter(|&&x| m & !x == 0).count();
    ensure((m, below, above) == (3, 3, 1), || format!("oracle counts {below} {above}"))?;
    ensure(ste_counts(&l, &[e(3), e(1), e(2)]) == (3, 1), || "library counts".into())?;
    let chain = Lattice::chain(4).unwrap();
    ensure(ste_counterexample(&chain, 3).is_none(), || "fails on the 4-chain".into())?;
    // b = x, a = 1, c = y, d = 0.
    let (a, b, c, d) = (3, 1, 2, 0);
    ensure(sq_between(a, b, d) && sq_between(b, a, c) && !sq_between(c, b, d), || "four-point oracle".into())?;
    let q = ste1_counterexample(&l).ok_or("no four-point counterexample")?;
    let [x, y, v, z] = q.map(|t| t.index());
    ensure(x != y && sq_between(y, x, v) && sq_between(x, y, z) && !sq_between(v, x, z), || "library quadruple".into())?;
    ensure(ste1_counterexample(&chain).is_none(), || "four-point property fails on the chain".into())?;
    Ok("counts 3 and 1 at (1,x,y); b in [a,d], a in [b,c], b not in [c,d]; both hold on the 4-chain".into())
}

fn criterion10() -> Outcome {
    let l = Lattice::boolean_square();
    let mut total = 0;
    for n in 3..=5 {
        let r = suites::theorem3(&l, n, &opts()).unwrap();
        report_ok(&r)?;
        total += r.checks.len();
    }
    Ok(format!("n = 3, 4, 5: every survivor manipulable, no fallback at strict majority ({total} checks)"))
}

fn criterion11() -> Outcome {
    let l = fixtures::chain_abdc();
    let r2 = suites::corollary1(&l, 2, 100, &opts()).unwrap();
    let r3 = suites::corollary1(&l, 3, 0, &opts()).unwrap();
    report_ok(&r2)?;
    report_ok(&r3)?;
    let mu = Rule::from(CommitteeRule::extended_median(&l, 3)).tabulate(&l).unwrap();
    let u = Domain::full_unimodal(&l, 3).unwrap();
    ensure(find_coalitional_manipulation(&mu, &u, &l, &opts()).unwrap().is_none(), || "majority manipulable".into())?;
    Ok("no coalitional witness for quota rules (n = 2, 3) or 100 random monotone rules (n = 2)".into())
}

fn criterion12() -> Outcome {
    let l = Lattice::boolean_square();
    let mu = Rule::from(CommitteeRule::extended_median(&l, 5)).tabulate(&l).unwrap();
    for row in 0..mu.len() {
        let b: Vec<usize> = mu.ballots_at(row).iter().map(|x| x.index()).collect();
        let out = sq_majority(&b);
        ensure(b.contains(&out) && mu.at(row).index() == out, || format!("{b:?} -> {out}"))?;
    }
    let cube = Lattice::boolean(3).unwrap();
    let t: Vec<ElementId> = ["110", "011", "101"].iter().map(|n| cube.id(n).unwrap()).collect();
    let m = lattice_vote::rules::extended_median(&cube, &t);
    ensure(cube.name(m) == "111" && !t.contains(&m), || format!("median is {}", cube.name(m)))?;
    Ok(format!("all {} profiles pick a cast ballot; on 2^3 (110,011,101) -> 111", mu.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("Boolean-square preference enumerations", criterion1),
        ("betweenness listing", criterion2),
        ("simple majority of five", criterion3),
        ("restricted-ballot chain rule", criterion4),
        ("two-voter square rule", criterion5),
        ("equivalence sweep", criterion6),
        ("pointwise medians stay monotonic", criterion7),
        ("median and betweenness axioms", criterion8),
        ("median counting properties", criterion9),
        ("anonymous quota rules are manipulable", criterion10),
        ("chains: no coalitional manipulation", criterion11),
        ("efficiency of the median", criterion12),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = std::time::Instant::now();
        let result = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let ms = start.elapsed().as_millis();
        match result {
            Ok(detail) => println!("criterion {:2} PASS  {name}: {detail} ({ms} ms)", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:2} FAIL  {name}: {why} ({ms} ms)", k + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
}
