use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::fixtures::{
    embedded_chain_rule, four_chain, label, monotone_quotas, quota_table, random_monotone_committee, random_table,
};
use crate::error::VerifyError;
use crate::lattice::Lattice;
use crate::rules::{ExplicitRule, MedianTree, Rule};
use crate::verify::{
    find_coalitional_manipulation, is_b_monotonic, is_strategy_proof, Domain, VerificationReport, VerifyOptions,
};

/// The five statements for one rule, in order: monotonic, strategy-proof on
/// the unimodal domain, on the strict domain, reproduced by its median tree,
/// reproduced by its committee form.
fn statements(
    f: &ExplicitRule,
    l: &Lattice,
    u: &Domain,
    s: &Domain,
    opts: &VerifyOptions,
) -> Result<([bool; 5], bool), VerifyError> {
    let mono = is_b_monotonic(f, l, opts)?.holds();
    let sp_u = is_strategy_proof(f, u, l, opts)?.holds();
    let sp_s = is_strategy_proof(f, s, l, opts)?.holds();
    let tree = MedianTree::canonical(&f.corners(l)?, f.voters());
    let tree_ok = Rule::from(tree.clone()).tabulate(l)? == *f;
    let committee_ok = Rule::from(tree.to_committee(l)?).tabulate(l)? == *f;
    let coalition_ok = find_coalitional_manipulation(f, u, l, opts)?.is_none();
    Ok(([mono, sp_u, sp_s, tree_ok, committee_ok], !coalition_ok || sp_u))
}

/// Seeded random tables, all quota rules, random monotone committees and,
/// when the lattice has a 4-chain, a non-monotonic rule built on it: the five
/// statements agree for each.
pub fn theorem1(l: &Lattice, n: usize, samples: usize, opts: &VerifyOptions) -> Result<VerificationReport, VerifyError> {
    let mut r = VerificationReport::new(format!("theorem1 {} n={n}", label(l)));
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut groups: Vec<(String, Vec<(String, ExplicitRule)>)> = Vec::new();

    let random = (0..samples)
        .map(|k| Ok((format!("random table {k}"), random_table(l, n, &mut rng)?)))
        .collect::<Result<Vec<_>, VerifyError>>()?;
    groups.push(("random tables".into(), random));
    let committees = (0..samples)
        .map(|k| Ok((format!("random committee {k}"), Rule::from(random_monotone_committee(l, n, &mut rng)).tabulate(l)?)))
        .collect::<Result<Vec<_>, VerifyError>>()?;
    groups.push(("random monotone committees".into(), committees));
    for k in 1..=n.max(3) {
        let quotas = monotone_quotas(l, k)
            .into_iter()
            .map(|q| {
                let name: Vec<&str> = q.iter().map(|&y| l.name(y)).collect();
                Ok((format!("quota [{}]", name.join(",")), quota_table(l, &q)?))
            })
            .collect::<Result<Vec<_>, VerifyError>>()?;
        groups.push((format!("quota rules n={k}"), quotas));
    }
    if let Some(chain) = four_chain(l) {
        groups.push(("embedded chain rule".into(), vec![("embedded chain rule".into(), embedded_chain_rule(l, chain)?)]));
    }

    let mut domains = std::collections::HashMap::new();
    for (group, rules) in groups {
        let mut disagree = None;
        let mut coalition_gap = None;
        let mut tally = [0usize; 5];
        for (name, f) in &rules {
            let k = f.voters();
            if !domains.contains_key(&k) {
                domains.insert(k, (Domain::full_unimodal(l, k)?, Domain::full_lsu(l, k)?));
            }
            let (u, s) = &domains[&k];
            let (st, implication) = statements(f, l, u, s, opts)?;
            for (t, &b) in tally.iter_mut().zip(&st) {
                *t += b as usize;
            }
            if st.iter().any(|&b| b != st[0]) {
                disagree.get_or_insert_with(|| json!({ "rule": name, "statements": st }));
            }
            if !implication {
                coalition_gap.get_or_insert_with(|| json!({ "rule": name }));
            }
        }
        r.check(format!("{group}: all five statements agree ({} rules, {} satisfy them)", rules.len(), tally[0]), disagree);
        r.check(format!("{group}: coalitional strategy-proofness implies strategy-proofness"), coalition_gap);
        if group.starts_with("quota") {
            r.expect(format!("{group}: every rule satisfies all five"), tally.iter().all(|&t| t == rules.len()), || {
                json!({ "tally": tally, "rules": rules.len() })
            });
        }
        if group == "embedded chain rule" {
            r.expect(format!("{group}: all five fail"), tally.iter().all(|&t| t == 0), || json!({ "tally": tally }));
        }
    }
    Ok(r.finish())
}
