//! Simple majority with five voters on 2^2 is strategy-proof, but four
//! voters together can move it from 0 to 1.

use lattice_vote::verify::suites::walkthrough_witness;
use lattice_vote::verify::{
    find_coalitional_manipulation, find_coalitional_manipulation_filtered, is_b_monotonic, is_strategy_proof,
    Domain, SearchFilter, VerifyOptions,
};
use lattice_vote::{CommitteeRule, Lattice, Rule};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let l = Lattice::boolean_square();
    let mu = Rule::from(CommitteeRule::extended_median(&l, 5)).tabulate(&l)?;
    let u = Domain::full_unimodal(&l, 5)?;
    let opts = VerifyOptions::default().with_workers(4);

    println!("monotonic: {}", is_b_monotonic(&mu, &l, &opts)?.holds());
    println!("strategy-proof: {}", is_strategy_proof(&mu, &u, &l, &opts)?.holds());

    if let Some(w) = find_coalitional_manipulation(&mu, &u, &l, &opts)? {
        println!("first: {}", w.summary(&l));
    }
    let filter = SearchFilter {
        coalition_size: Some(4),
        outcome_truthful: l.id("0"),
        outcome_deviant: l.id("1"),
        ..SearchFilter::default()
    };
    if let Some(w) = find_coalitional_manipulation_filtered(&mu, &u, &l, &filter, &opts)? {
        println!("four voters: {}", w.summary(&l));
    }
    let w = walkthrough_witness(&l, &mu)?;
    println!("{} (valid: {})", w.summary(&l), w.validate(&mu, &u));
    for p in &w.profile.prefs {
        println!("  {}", p.display(&l));
    }
    Ok(())
}
