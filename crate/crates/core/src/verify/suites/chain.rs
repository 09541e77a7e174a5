use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::fixtures::{label, monotone_quotas, quota_table, random_monotone_committee};
use crate::error::{LatticeError, VerifyError};
use crate::lattice::Lattice;
use crate::rules::Rule;
use crate::verify::{find_coalitional_manipulation, is_strategy_proof, Domain, VerificationReport, VerifyOptions};

/// On a chain every strategy-proof rule is coalitionally strategy-proof:
/// quota rules and random monotone committees admit no coalitional
/// manipulation on the full unimodal or full strict domain.
pub fn corollary1(l: &Lattice, n: usize, samples: usize, opts: &VerifyOptions) -> Result<VerificationReport, VerifyError> {
    if !l.is_chain() {
        return Err(LatticeError::NotAChain.into());
    }
    let mut r = VerificationReport::new(format!("corollary1 {} n={n}", label(l)));
    let mut rules = Vec::new();
    for q in monotone_quotas(l, n) {
        let name: Vec<&str> = q.iter().map(|&y| l.name(y)).collect();
        rules.push((format!("quota [{}]", name.join(",")), quota_table(l, &q)?));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for k in 0..samples {
        let c = random_monotone_committee(l, n, &mut rng);
        rules.push((format!("random committee {k}"), Rule::from(c).tabulate(l)?));
    }

    let u = Domain::full_unimodal(l, n)?;
    let s = Domain::full_lsu(l, n)?;
    for (tag, dom) in [("unimodal", &u), ("strict", &s)] {
        let mut manipulable = None;
        let mut not_sp = None;
        for (name, f) in &rules {
            if let Some(w) = is_strategy_proof(f, dom, l, opts)?.into_witness() {
                not_sp.get_or_insert_with(|| json!({ "rule": name, "witness": w.to_json(l) }));
            }
            if let Some(w) = find_coalitional_manipulation(f, dom, l, opts)? {
                manipulable.get_or_insert_with(|| json!({ "rule": name, "witness": w.to_json(l) }));
            }
        }
        r.check(format!("every rule is strategy-proof on the {tag} domain ({} rules)", rules.len()), not_sp);
        r.check(format!("no coalitional manipulation on the {tag} domain"), manipulable);
    }
    Ok(r.finish())
}
