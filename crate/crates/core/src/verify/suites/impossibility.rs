use serde_json::json;

use super::fixtures::{
    chain_rule_domains, four_chain, incomparable_pair, label, monotone_quotas, preorder, quota_table,
    restricted_chain_rule, square_rule_tree,
};
use crate::error::VerifyError;
use crate::lattice::{ElementId, Lattice};
use crate::preorder::{PreferenceProfile, TotalPreorder};
use crate::rules::{ExplicitRule, Rule};
use crate::verify::{
    check_axioms, find_coalitional_manipulation, find_coalitional_manipulation_filtered, is_b_monotonic,
    is_strategy_proof, Domain, ManipulationWitness, SearchFilter, Semantics, VerificationReport, VerifyOptions,
};

/// Strategy-proof but coalitionally manipulable rules: the two-voter rule on
/// a 4-chain with restricted ballots, and, off chains, a two-voter rule on a
/// Boolean-square sublattice.
pub fn theorem2(l: &Lattice, opts: &VerifyOptions) -> Result<VerificationReport, VerifyError> {
    if l.size() < 4 {
        return Err(VerifyError::NoSuitableSublattice(format!("only {} elements", l.size())));
    }
    let mut r = VerificationReport::new(format!("theorem2 {}", label(l)));
    match four_chain(l) {
        Some(chain) => restricted_part(l, chain, &mut r, opts)?,
        None => r.note("no 4-element chain; restricted-ballot part skipped"),
    }
    match incomparable_pair(l) {
        None => {
            r.pass("square part not applicable: the lattice is a chain");
            r.note("on a chain strategy-proofness and coalitional strategy-proofness coincide");
        }
        Some((p, q)) => square_part(l, p, q, &mut r, opts)?,
    }
    Ok(r.finish())
}

fn restricted_part(
    l: &Lattice,
    chain: [ElementId; 4],
    r: &mut VerificationReport,
    opts: &VerifyOptions,
) -> Result<(), VerifyError> {
    let sub = l.sublattice(&chain)?;
    let local = [0, 1, 2, 3].map(ElementId::new);
    let [a, b, d, c] = local;
    r.note(format!(
        "chain a<b<d<c is {}",
        chain.iter().map(|&x| l.name(x)).collect::<Vec<_>>().join("<")
    ));
    let f = restricted_chain_rule(&sub, local)?;
    let [weak, strict] = chain_rule_domains(&sub, local)?;
    let named = |p: &TotalPreorder| p.display(&sub);

    r.expect("chain rule: D templates are unimodal", weak.iter().all(|p| p.is_unimodal(&sub).unwrap_or(false)), || {
        json!(weak.iter().map(named).collect::<Vec<_>>())
    });
    let not_lsu: Vec<String> = strict
        .iter()
        .filter(|p| !p.is_locally_strictly_unimodal(&sub).unwrap_or(false))
        .map(named)
        .collect();
    if not_lsu.is_empty() {
        r.pass("chain rule: D′ templates are locally strictly unimodal");
    } else {
        r.pass_with("chain rule: D′ templates recorded (not locally strictly unimodal on this chain)", json!(not_lsu));
        r.note("some strict templates are not locally strictly unimodal on a<b<d<c; checks use them as given");
    }

    let dw = Domain::custom(vec![weak.to_vec(), weak.to_vec()]);
    let ds = Domain::custom(vec![strict.to_vec(), strict.to_vec()]);
    for (tag, dom) in [("D", &dw), ("D′", &ds)] {
        let sp = is_strategy_proof(&f, dom, &sub, opts)?;
        r.check(format!("chain rule: strategy-proof on {tag}×{tag}"), sp.witness().map(|w| w.to_json(&sub)));
    }

    match is_b_monotonic(&f, &sub, opts)?.into_witness() {
        None => r.fail("chain rule: not monotonic", json!("rule is monotonic")),
        Some(w) => r.expect(
            "chain rule: not monotonic, outcome c at (d,a) outside [d, a]",
            w.ballots == [d, a] && w.outcome == c && w.deviant_outcome == a,
            || w.to_json(&sub),
        ),
    }
    let full = Domain::full_unimodal(&sub, 2)?.restrict_to(&f);
    match is_strategy_proof(&f, &full, &sub, opts)?.into_witness() {
        None => r.fail("chain rule: not strategy-proof on the full unimodal domain", json!("no manipulation found")),
        Some(w) => r.pass_with("chain rule: not strategy-proof on the full unimodal domain", w.to_json(&sub)),
    }

    for (tag, dom) in [("D", &dw), ("D′", &ds)] {
        let claim = format!("chain rule: coalition {{1,2}} manipulates on {tag}×{tag} from (d,a) to (a,d), c -> b");
        match find_coalitional_manipulation(&f, dom, &sub, opts)? {
            None => r.fail(claim, json!("no coalitional manipulation found")),
            Some(w) => {
                let ok = w.validate(&f, dom)
                    && w.ballots == [d, a]
                    && w.coalition == [0, 1]
                    && w.deviation == [a, d]
                    && w.outcome_truthful == c
                    && w.outcome_deviant == b;
                r.expect(claim, ok, || w.to_json(&sub));
            }
        }
    }
    Ok(())
}

fn square_part(
    l: &Lattice,
    p: ElementId,
    q: ElementId,
    r: &mut VerificationReport,
    opts: &VerifyOptions,
) -> Result<(), VerifyError> {
    let (lo, hi) = (l.meet(p, q), l.join(p, q));
    let sub = l.sublattice(&[lo, p, q, hi])?;
    let [d, b, c, a] = [0, 1, 2, 3].map(ElementId::new);
    r.note(format!(
        "square a={}, b={}, c={}, d={}",
        l.name(hi),
        l.name(p),
        l.name(q),
        l.name(lo)
    ));
    let tree = square_rule_tree([a, b, c, d]);
    let f = Rule::from(tree).tabulate(&sub)?;
    let at = |x: ElementId, y: ElementId| f.eval(&[x, y]).expect("full ballots");

    let expected = [
        (a, [(a, c), (b, a), (b, c)]),
        (b, [(b, b), (a, b), (b, d)]),
        (c, [(c, c), (c, a), (d, c)]),
    ];
    let mut wrong = None;
    for (out, cells) in expected {
        for (x, y) in cells {
            if at(x, y) != out {
                wrong.get_or_insert_with(|| {
                    json!({ "ballots": [sub.name(x), sub.name(y)], "got": sub.name(at(x, y)), "expected": sub.name(out) })
                });
            }
        }
    }
    r.check("square rule: table matches the listed values", wrong);
    r.expect("square rule: f(c,d) = f(c,b) = d and f(d,c) = c", at(c, d) == d && at(c, b) == d && at(d, c) == c, || {
        json!({ "f(c,d)": sub.name(at(c, d)), "f(c,b)": sub.name(at(c, b)), "f(d,c)": sub.name(at(d, c)) })
    });
    r.check("square rule: monotonic", is_b_monotonic(&f, &sub, opts)?.witness().map(|w| w.to_json(&sub)));

    let u = Domain::full_unimodal(&sub, 2)?;
    let s = Domain::full_lsu(&sub, 2)?;
    for (tag, dom) in [("unimodal", &u), ("strict", &s)] {
        let sp = is_strategy_proof(&f, dom, &sub, opts)?;
        r.check(format!("square rule: strategy-proof on the full {tag} domain"), sp.witness().map(|w| w.to_json(&sub)));
        match find_coalitional_manipulation(&f, dom, &sub, opts)? {
            None => r.fail(format!("square rule: coalitionally manipulable on the {tag} domain"), json!("none found")),
            Some(w) => r.pass_with(format!("square rule: coalitionally manipulable on the {tag} domain"), w.to_json(&sub)),
        }
        let filter = SearchFilter {
            coalition: Some(vec![0, 1]),
            ballots: Some(vec![d, a]),
            outcome_deviant: Some(b),
            ..SearchFilter::default()
        };
        let claim = format!("square rule: tops (d,a) deviate to (a,d), c -> b, on the {tag} domain");
        match find_coalitional_manipulation_filtered(&f, dom, &sub, &filter, opts)? {
            None => r.fail(claim, json!("no manipulation from (d,a) to outcome b")),
            Some(w) => {
                let swapped = ManipulationWitness { deviation: vec![a, d], ..w.clone() };
                r.expect(claim, w.validate(&f, dom) && swapped.validate(&f, dom) && w.outcome_truthful == c, || {
                    json!({ "first": w.to_json(&sub), "swapped": swapped.to_json(&sub) })
                })
            }
        }
    }
    Ok(())
}

/// Smallest `t` with `f(x on voters 1..t, ⊥ elsewhere) ≥ x`.
fn quota_threshold(f: &ExplicitRule, l: &Lattice, x: ElementId) -> Option<usize> {
    let n = f.voters();
    (0..=n).find(|&t| {
        let ballots: Vec<ElementId> = (0..n).map(|i| if i < t { x } else { l.bottom() }).collect();
        f.eval(&ballots).is_ok_and(|o| l.leq(x, o))
    })
}

/// The targeted manipulation for an anonymous rule with threshold `q`.
fn targeted(
    f: &ExplicitRule,
    l: &Lattice,
    x: ElementId,
    z: ElementId,
    q: usize,
    strict: bool,
) -> Result<ManipulationWitness, VerifyError> {
    let n = f.voters();
    let k = n / 2;
    let (bot, xz) = (l.bottom(), l.join(x, z));
    let low = 2 * q <= n;
    let t = |classes: &[&[ElementId]]| preorder(l, classes);
    let (p1, p2, p3) = match (low, strict) {
        (true, false) => (t(&[&[x], &[bot]])?, t(&[&[z], &[bot]])?, t(&[&[bot]])?),
        (true, true) => (
            t(&[&[x], &[bot], &[xz], &[z]])?,
            t(&[&[z], &[bot], &[xz], &[x]])?,
            t(&[&[bot], &[x], &[z], &[xz]])?,
        ),
        (false, false) => (t(&[&[x], &[xz]])?, t(&[&[z], &[xz]])?, t(&[&[bot]])?),
        (false, true) => (
            t(&[&[x], &[xz], &[bot], &[z]])?,
            t(&[&[z], &[xz], &[bot], &[x]])?,
            t(&[&[bot], &[x], &[z], &[xz]])?,
        ),
    };
    let mut prefs = vec![p1; k];
    let second = if !low && n % 2 == 0 { k - 1 } else { k };
    prefs.extend(std::iter::repeat(p2).take(second));
    if prefs.len() < n {
        prefs.push(p3);
    }
    let coalition: Vec<usize> = if low && n % 2 == 0 { (0..n).collect() } else { (0..n - 1).collect() };
    let target = if low { bot } else { xz };
    let profile = PreferenceProfile::new(prefs);
    let ballots = profile.tops();
    let mut dev = ballots.clone();
    coalition.iter().for_each(|&i| dev[i] = target);
    Ok(ManipulationWitness {
        outcome_truthful: f.eval(&ballots)?,
        outcome_deviant: f.eval(&dev)?,
        deviation: vec![target; coalition.len()],
        coalition,
        ballots,
        profile,
        semantics: Semantics::Truthful,
    })
}

/// Every anonymous quota rule that is locally sovereign and locally neutral on
/// `{⊥, x, z, x∨z}` (first two atoms) is coalitionally manipulable on the full
/// unimodal and full strict domains.
pub fn theorem3(l: &Lattice, n: usize, opts: &VerifyOptions) -> Result<VerificationReport, VerifyError> {
    let atoms = l.atoms();
    if atoms.len() < 2 {
        return Err(crate::error::LatticeError::NotEnoughAtoms.into());
    }
    let (x, z) = (atoms[0], atoms[1]);
    let y = [l.bottom(), x, z, l.join(x, z)];
    let mut r = VerificationReport::new(format!("theorem3 {} n={n}", label(l)));
    let u = Domain::full_unimodal(l, n)?;
    let s = Domain::full_lsu(l, n)?;
    let quotas = monotone_quotas(l, n);
    let majority = n / 2 + 1;

    let mut survivors = 0;
    let mut fallbacks = Vec::new();
    let mut unmanipulated = None;
    let mut majority_fallback = None;
    let mut majority_seen = false;
    for constants in &quotas {
        let f = quota_table(l, constants)?;
        let ax = check_axioms(&f, l, &y, &u, opts)?;
        if ax.locally_sovereign.is_some() || ax.locally_ji_neutral.is_some() {
            continue;
        }
        survivors += 1;
        let name: Vec<&str> = constants.iter().map(|&c| l.name(c)).collect();
        let q = quota_threshold(&f, l, x);
        majority_seen |= q == Some(majority);
        for (tag, dom, strict) in [("unimodal", &u, false), ("strict", &s, true)] {
            let aimed = match q {
                Some(q) => Some(targeted(&f, l, x, z, q, strict)?).filter(|w| w.validate(&f, dom)),
                None => None,
            };
            if aimed.is_some() {
                continue;
            }
            if q == Some(majority) {
                majority_fallback.get_or_insert_with(|| json!({ "constants": name, "domain": tag }));
            }
            match find_coalitional_manipulation(&f, dom, l, opts)? {
                Some(_) => fallbacks.push(format!("[{}] on {tag}", name.join(","))),
                None => {
                    unmanipulated.get_or_insert_with(|| json!({ "constants": name, "domain": tag }));
                }
            }
        }
    }
    r.note(format!(
        "{} quota rules with nondecreasing constants enumerated, {survivors} locally sovereign and neutral",
        quotas.len()
    ));
    if !fallbacks.is_empty() {
        r.note(format!("general search needed for {}", fallbacks.join("; ")));
    }
    r.expect("some quota rule is locally sovereign and neutral", survivors > 0, || json!({ "survivors": 0 }));
    r.check(
        format!("every surviving rule is coalitionally manipulable on both domains ({survivors} rules)"),
        unmanipulated,
    );
    r.expect("a strict-majority threshold rule is among the survivors", majority_seen, || json!({ "threshold": majority }));
    r.check("targeted profiles suffice at the strict-majority threshold", majority_fallback);
    Ok(r.finish())
}
