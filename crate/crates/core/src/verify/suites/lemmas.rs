use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::fixtures::{label, monotone_quotas, quota_table, random_monotone_committee, random_table};
use crate::error::VerifyError;
use crate::lattice::Lattice;
use crate::preorder::{build_lsu_witness, build_three_class_witness};
use crate::rules::{pointwise_median, CommitteeRule, ExplicitRule, Rule};
use crate::verify::{is_b_monotonic, is_strategy_proof, Domain, VerificationReport, VerifyOptions};

/// Projections, constants and the simple-majority rule, tabulated.
pub(crate) fn basic_rules(l: &Lattice, n: usize) -> Result<Vec<(String, ExplicitRule)>, VerifyError> {
    let mut out = Vec::new();
    for i in 0..n {
        out.push((format!("projection {}", i + 1), Rule::from(CommitteeRule::projection(l, n, i)).tabulate(l)?));
    }
    for c in l.elements() {
        out.push((format!("constant {}", l.name(c)), Rule::from(CommitteeRule::constant(n, c)).tabulate(l)?));
    }
    out.push(("simple majority".to_string(), Rule::from(CommitteeRule::extended_median(l, n)).tabulate(l)?));
    Ok(out)
}

/// Monotonicity against strategy-proofness on the full unimodal and full
/// strict domains, over basic, quota and random rules; plus the preference
/// witnesses used to separate them.
pub fn lemma1(l: &Lattice, n: usize, samples: usize, opts: &VerifyOptions) -> Result<VerificationReport, VerifyError> {
    let mut r = VerificationReport::new(format!("lemma1 {} n={n}", label(l)));

    let mut bad_three = None;
    let mut bad_lsu = None;
    for peak in l.elements() {
        for reference in l.elements() {
            let w = build_three_class_witness(l, peak, reference);
            if !w.is_unimodal(l)? || w.top() != peak {
                bad_three.get_or_insert_with(|| json!({ "peak": l.name(peak), "ref": l.name(reference) }));
            }
            let w = build_lsu_witness(l, peak, reference);
            if !w.is_locally_strictly_unimodal(l)? || w.top() != peak {
                bad_lsu.get_or_insert_with(|| json!({ "peak": l.name(peak), "ref": l.name(reference) }));
            }
        }
    }
    r.check("three-class witnesses are unimodal", bad_three);
    r.check("layered witnesses are locally strictly unimodal", bad_lsu);

    let mut rules = basic_rules(l, n)?;
    for q in monotone_quotas(l, n) {
        let name: Vec<&str> = q.iter().map(|&y| l.name(y)).collect();
        rules.push((format!("quota [{}]", name.join(",")), quota_table(l, &q)?));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for k in 0..samples {
        rules.push((format!("random table {k}"), random_table(l, n, &mut rng)?));
        let c = random_monotone_committee(l, n, &mut rng);
        rules.push((format!("random committee {k}"), Rule::from(c).tabulate(l)?));
    }

    let u = Domain::full_unimodal(l, n)?;
    let s = Domain::full_lsu(l, n)?;
    let mut mismatch = None;
    let mut monotone = 0;
    for (name, f) in &rules {
        let a = is_b_monotonic(f, l, opts)?;
        let b = is_strategy_proof(f, &u, l, opts)?;
        let c = is_strategy_proof(f, &s, l, opts)?;
        monotone += a.holds() as usize;
        if a.holds() != b.holds() || a.holds() != c.holds() {
            mismatch.get_or_insert_with(|| {
                json!({
                    "rule": name,
                    "monotonic": a.witness().map(|w| w.to_json(l)),
                    "unimodal": b.witness().map(|w| w.to_json(l)),
                    "strict": c.witness().map(|w| w.to_json(l)),
                })
            });
        }
    }
    r.check(
        format!("monotonic iff strategy-proof on both domains ({} rules, {monotone} monotonic)", rules.len()),
        mismatch,
    );
    Ok(r.finish())
}

/// The pointwise median of any three rules drawn from projections, constants
/// and the simple-majority rule is monotonic.
pub fn lemma2(l: &Lattice, n: usize, opts: &VerifyOptions) -> Result<VerificationReport, VerifyError> {
    let mut r = VerificationReport::new(format!("lemma2 {} n={n}", label(l)));
    let base = basic_rules(l, n)?;
    let mut bad_base = None;
    for (name, f) in &base {
        if let Some(w) = is_b_monotonic(f, l, opts)?.into_witness() {
            bad_base.get_or_insert_with(|| json!({ "rule": name, "witness": w.to_json(l) }));
        }
    }
    r.check(format!("all {} base rules are monotonic", base.len()), bad_base);
    let mut bad = None;
    let mut count = 0;
    for i in 0..base.len() {
        for j in i..base.len() {
            for k in j..base.len() {
                let g = pointwise_median(l, &base[i].1, &base[j].1, &base[k].1)?;
                count += 1;
                if let Some(w) = is_b_monotonic(&g, l, opts)?.into_witness() {
                    bad.get_or_insert_with(|| {
                        json!({ "rules": [&base[i].0, &base[j].0, &base[k].0], "witness": w.to_json(l) })
                    });
                }
            }
        }
    }
    r.check(format!("pointwise median of every triple is monotonic ({count} triples)"), bad);
    Ok(r.finish())
}
