use std::collections::BTreeSet;

use serde_json::json;

use super::fixtures::{ids, preorder};
use crate::error::VerifyError;
use crate::lattice::{ElementId, Lattice};
use crate::preorder::{enumerate_lsu, enumerate_separable, enumerate_unimodal, PreferenceProfile, TotalPreorder};
use crate::rules::{extended_median, CommitteeRule, ExplicitRule, Rule};
use crate::verify::{
    all_coalitional_manipulations, check_axioms, find_coalitional_manipulation,
    find_coalitional_manipulation_filtered, is_b_monotonic, is_strategy_proof, Domain, ManipulationWitness,
    SearchFilter, Semantics, VerificationReport, VerifyOptions,
};

/// How many ballots lie below and above the extended median of `ballots`.
pub fn ste_counts(l: &Lattice, ballots: &[ElementId]) -> (usize, usize) {
    let m = extended_median(l, ballots);
    let below = ballots.iter().filter(|&&x| l.leq(x, m)).count();
    let above = ballots.iter().filter(|&&x| l.leq(m, x)).count();
    (below, above)
}

/// First `n`-tuple (in id order) where fewer than a strict majority of ballots
/// lie below, or above, the extended median.
pub fn ste_counterexample(l: &Lattice, n: usize) -> Option<Vec<ElementId>> {
    let m = l.size();
    let need = n / 2 + 1;
    (0..m.pow(n as u32)).find_map(|mut t| {
        let mut xs = vec![ElementId::new(0); n];
        for x in xs.iter_mut().rev() {
            *x = ElementId::new(t % m);
            t /= m;
        }
        let (below, above) = ste_counts(l, &xs);
        (below.min(above) < need).then_some(xs)
    })
}

/// First `(x, y, v, z)` with `x ≠ y`, `x ∈ [y, v]`, `y ∈ [x, z]` but `x ∉ [v, z]`.
pub fn ste1_counterexample(l: &Lattice) -> Option<[ElementId; 4]> {
    let e: Vec<ElementId> = l.elements().collect();
    for &x in &e {
        for &y in e.iter().filter(|&&y| y != x) {
            for &v in e.iter().filter(|&&v| l.between(y, x, v)) {
                for &z in e.iter().filter(|&&z| l.between(x, y, z)) {
                    if !l.between(v, x, z) {
                        return Some([x, y, v, z]);
                    }
                }
            }
        }
    }
    None
}

/// The three unimodal and three strict templates for each top.
fn templates(l: &Lattice) -> Result<(BTreeSet<TotalPreorder>, BTreeSet<TotalPreorder>), VerifyError> {
    let mut u = BTreeSet::new();
    let mut s = BTreeSet::new();
    for a in l.elements() {
        let ac = l.complement(a).expect("every element of 2^2 has a complement");
        let others: Vec<ElementId> = l.elements().filter(|&e| e != a && e != ac).collect();
        for (b, bc) in [(others[0], others[1]), (others[1], others[0])] {
            u.insert(preorder(l, &[&[a], &[b], &[bc, ac]])?);
            s.insert(preorder(l, &[&[a], &[b], &[bc], &[ac]])?);
        }
        u.insert(preorder(l, &[&[a], &[others[0], others[1], ac]])?);
        s.insert(preorder(l, &[&[a], &[others[0], others[1]], &[ac]])?);
    }
    Ok((u, s))
}

/// The displayed betweenness listing on `{0, x, y, 1}`, as `(a, c, b)` with `c ∈ [a, b]`.
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

/// The five-voter profile where voters 1-4 jointly move the simple majority
/// from `0` to `1`.
pub fn walkthrough_witness(l: &Lattice, rule: &ExplicitRule) -> Result<ManipulationWitness, VerifyError> {
    let [o, x, y, one] = [0, 1, 2, 3].map(ElementId::new);
    let px = preorder(l, &[&[x], &[one], &[o, y]])?;
    let py = preorder(l, &[&[y], &[one], &[o, x]])?;
    let p0 = preorder(l, &[&[o], &[x], &[y, one]])?;
    let ballots = vec![x, x, y, y, o];
    let deviation = vec![one; 4];
    let mut dev = deviation.clone();
    dev.push(o);
    Ok(ManipulationWitness {
        profile: PreferenceProfile::new(vec![px.clone(), px, py.clone(), py, p0]),
        outcome_truthful: rule.eval(&ballots)?,
        outcome_deviant: rule.eval(&dev)?,
        ballots,
        coalition: vec![0, 1, 2, 3],
        deviation,
        semantics: Semantics::Truthful,
    })
}

fn set_json(l: &Lattice, s: &BTreeSet<TotalPreorder>) -> serde_json::Value {
    json!(s.iter().map(|p| p.display(l)).collect::<Vec<_>>())
}

/// Every golden value of the Boolean square: preference enumerations,
/// betweenness, the five-voter simple majority and its manipulation,
/// efficiency, and the two median counting properties.
pub fn boolean_square(opts: &VerifyOptions) -> Result<VerificationReport, VerifyError> {
    let l = Lattice::boolean_square();
    let mut r = VerificationReport::new("boolean-square");
    let [o, x, y, one] = [0, 1, 2, 3].map(ElementId::new);

    let u: BTreeSet<TotalPreorder> = enumerate_unimodal(&l)?.into_iter().collect();
    let s: BTreeSet<TotalPreorder> = enumerate_lsu(&l)?.into_iter().collect();
    let sep: BTreeSet<TotalPreorder> = enumerate_separable(&l)?.into_iter().collect();
    let (tu, ts) = templates(&l)?;
    let per_top = |set: &BTreeSet<TotalPreorder>| l.elements().map(|a| set.iter().filter(|p| p.top() == a).count()).collect::<Vec<_>>();
    r.expect(format!("{} unimodal preorders, three per top", u.len()), u.len() == 12 && per_top(&u) == [3; 4], || {
        json!({ "count": u.len(), "per_top": per_top(&u) })
    });
    r.expect(format!("{} locally strictly unimodal preorders, three per top", s.len()), s.len() == 12 && per_top(&s) == [3; 4], || {
        json!({ "count": s.len(), "per_top": per_top(&s) })
    });
    r.expect("unimodal preorders are exactly the templates", u == tu, || set_json(&l, &u));
    r.expect("strict preorders are exactly the templates", s == ts, || set_json(&l, &s));
    r.expect("unimodal and strict sets are disjoint", u.is_disjoint(&s), || set_json(&l, &u.intersection(&s).cloned().collect()));
    r.expect("separable preorders equal the strict ones", sep == s, || set_json(&l, &sep));

    let listed: BTreeSet<[ElementId; 3]> = LISTED.iter().map(|t| ids(&l, t).try_into().expect("three names")).collect();
    let mut computed = BTreeSet::new();
    let mut trivial = BTreeSet::new();
    for a in l.elements() {
        for c in l.elements() {
            for b in l.elements() {
                if l.between(a, c, b) {
                    if a == b {
                        trivial.insert([a, c, b]);
                    } else {
                        computed.insert([a, c, b]);
                    }
                }
            }
        }
    }
    r.expect(format!("betweenness with distinct endpoints is the listed {} triples", listed.len()), computed == listed, || {
        json!(computed.symmetric_difference(&listed).map(|t| ids_named(&l, t)).collect::<Vec<_>>())
    });
    r.expect("the remaining betweenness triples are (a, a, a)", trivial.iter().all(|[a, c, _]| a == c) && trivial.len() == 4, || {
        json!(trivial.iter().map(|t| ids_named(&l, t)).collect::<Vec<_>>())
    });

    let mu = Rule::from(CommitteeRule::extended_median(&l, 5)).tabulate(&l)?;
    let du = Domain::full_unimodal(&l, 5)?;
    let ds = Domain::full_lsu(&l, 5)?;
    r.check("simple majority of five: monotonic", is_b_monotonic(&mu, &l, opts)?.witness().map(|w| w.to_json(&l)));
    r.check(
        "simple majority of five: strategy-proof on the unimodal domain",
        is_strategy_proof(&mu, &du, &l, opts)?.witness().map(|w| w.to_json(&l)),
    );
    r.check(
        "simple majority of five: strategy-proof on the strict domain",
        is_strategy_proof(&mu, &ds, &l, opts)?.witness().map(|w| w.to_json(&l)),
    );
    match find_coalitional_manipulation(&mu, &du, &l, opts)? {
        Some(w) => r.pass_with("simple majority of five: first coalitional manipulation", w.to_json(&l)),
        None => r.fail("simple majority of five: first coalitional manipulation", json!("none found")),
    }
    let filter = SearchFilter {
        coalition_size: Some(4),
        outcome_truthful: Some(o),
        outcome_deviant: Some(one),
        ..SearchFilter::default()
    };
    let claim = "simple majority of five: four voters move the outcome from 0 to 1";
    match find_coalitional_manipulation_filtered(&mu, &du, &l, &filter, opts)? {
        Some(w) => r.expect(claim, w.validate(&mu, &du), || w.to_json(&l)),
        None => r.fail(claim, json!("none found")),
    }
    let walk = walkthrough_witness(&l, &mu)?;
    r.expect("walkthrough profile: (x,x,y,y,0) gives 0, voters 1-4 voting 1 gives 1", walk.validate(&mu, &du) && walk.outcome_truthful == o && walk.outcome_deviant == one, || walk.to_json(&l));
    let at_walk = SearchFilter { ballots: Some(walk.ballots.clone()), ..filter.clone() };
    let listed = all_coalitional_manipulations(&mu, &du, &l, &at_walk, opts, usize::MAX)?;
    r.expect("walkthrough coalition is among the reported manipulations", listed.iter().any(|w| w.coalition == walk.coalition), || {
        json!(listed.iter().map(|w| w.summary(&l)).collect::<Vec<_>>())
    });

    let outside = (0..mu.len()).find(|&row| {
        let b = mu.ballots_at(row);
        !b.contains(&mu.at(row))
    });
    r.check(
        format!("simple majority of five always picks a cast ballot ({} profiles)", mu.len()),
        outside.map(|row| json!({ "ballots": ids_named(&l, &mu.ballots_at(row)), "outcome": l.name(mu.at(row)) })),
    );
    let ax = check_axioms(&mu, &l, &[o, x, y, one], &du, opts)?;
    r.check("simple majority of five is efficient", ax.efficient.map(|f| f.to_json(&l)));
    let cube = Lattice::boolean(3)?;
    let triple = ids(&cube, &["110", "011", "101"]);
    let m3 = extended_median(&cube, &triple);
    r.expect(
        "on 2^3 the median of 110, 011, 101 is 111, which nobody voted for",
        cube.name(m3) == "111" && !triple.contains(&m3),
        || json!({ "median": cube.name(m3) }),
    );

    let (below, above) = ste_counts(&l, &[one, x, y]);
    r.expect("median of (1,x,y): 3 ballots below, 1 above, so the count property fails", (below, above) == (3, 1), || {
        json!({ "below": below, "above": above })
    });
    let chain = Lattice::chain(4)?;
    r.check(
        "count property holds for all 64 triples on the 4-chain",
        ste_counterexample(&chain, 3).map(|t| json!(ids_named(&chain, &t))),
    );
    // Theorem-labelled square: a = 1, b = x, c = y, d = 0.
    let (a, b, c, d) = (one, x, y, o);
    r.expect(
        "b in [a,d] and a in [b,c] but b not in [c,d]",
        l.between(a, b, d) && l.between(b, a, c) && !l.between(c, b, d),
        || json!("betweenness values differ"),
    );
    r.expect("first four-point counterexample exists on 2^2", ste1_counterexample(&l).is_some(), || json!(null));
    r.check(
        "no four-point counterexample on the 4-chain",
        ste1_counterexample(&chain).map(|q| json!(ids_named(&chain, &q))),
    );
    Ok(r.finish())
}

fn ids_named(l: &Lattice, xs: &[ElementId]) -> Vec<String> {
    xs.iter().map(|&x| l.name(x).to_string()).collect()
}
