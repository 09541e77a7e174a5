//! A two-voter rule on the chain a < b < d < c with ballots {a, d}: strategy-proof
//! on a small domain, not monotonic, and open to a joint swap.

use lattice_vote::verify::suites::fixtures::{chain_abdc, chain_rule_domains, restricted_chain_rule};
use lattice_vote::verify::{find_coalitional_manipulation, is_b_monotonic, is_strategy_proof, Domain, VerifyOptions};
use lattice_vote::ElementId;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let l = chain_abdc();
    let chain = [0, 1, 2, 3].map(ElementId::new);
    let f = restricted_chain_rule(&l, chain)?;
    let opts = VerifyOptions::default();
    for (tag, d) in ["weak", "strict"].into_iter().zip(chain_rule_domains(&l, chain)?) {
        let dom = Domain::custom(vec![d.to_vec(), d.to_vec()]);
        println!("{tag}: strategy-proof {}", is_strategy_proof(&f, &dom, &l, &opts)?.holds());
        if let Some(w) = find_coalitional_manipulation(&f, &dom, &l, &opts)? {
            println!("{tag}: {}", w.summary(&l));
        }
    }
    if let Some(w) = is_b_monotonic(&f, &l, &opts)?.into_witness() {
        println!("not monotonic: {}", w.to_json(&l));
    }
    Ok(())
}
