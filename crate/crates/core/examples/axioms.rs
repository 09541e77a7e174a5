//! Anonymity, neutrality, sovereignty, idempotence and efficiency of the
//! quota rules on 2^2 with three voters.

use lattice_vote::verify::suites::fixtures::{monotone_quotas, quota_table};
use lattice_vote::verify::{check_axioms, Domain, VerifyOptions};
use lattice_vote::Lattice;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let l = Lattice::boolean_square();
    let y: Vec<_> = l.elements().collect();
    let d = Domain::full_unimodal(&l, 3)?;
    for q in monotone_quotas(&l, 3) {
        let f = quota_table(&l, &q)?;
        let ax = check_axioms(&f, &l, &y, &d, &VerifyOptions::default())?;
        let held: Vec<&str> = ax.entries().iter().filter(|(_, f)| f.is_none()).map(|(n, _)| *n).collect();
        let names: Vec<&str> = q.iter().map(|&c| l.name(c)).collect();
        println!("{names:?}: {}", held.join(", "));
    }
    Ok(())
}
