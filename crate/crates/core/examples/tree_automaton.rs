//! Evaluating the nested median as a run of a tree automaton.

use lattice_vote::rules::automaton::{ballot_bindings, canonical_term, median_automaton};
use lattice_vote::{Lattice, MedianTree, Rule};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let l = Lattice::boolean_square();
    let corners = ["0", "y", "x", "1"].map(|n| l.id(n).unwrap());
    let automaton = median_automaton(&l, &corners);
    let term = canonical_term(2);
    println!("term depth {}", term.depth());

    let table = Rule::from(MedianTree::canonical(&corners, 2)).tabulate(&l)?;
    for row in 0..table.len() {
        let ballots = table.ballots_at(row);
        let out = automaton.run(&ballot_bindings(&ballots), &term)?;
        let names: Vec<&str> = ballots.iter().map(|&b| l.name(b)).collect();
        println!("{names:?} -> {} (table {})", l.name(out), l.name(table.at(row)));
    }
    Ok(())
}
