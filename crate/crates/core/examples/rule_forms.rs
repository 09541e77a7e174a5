//! One rule, three representations: committee polynomial, median tree, table.

use lattice_vote::{CommitteeRule, Lattice, Rule};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let l = Lattice::boolean_square();
    let name = |x| l.name(x).to_string();
    let majority = Rule::from(CommitteeRule::extended_median(&l, 3));

    let corners = majority.corners(&l)?;
    println!("corners: {:?}", corners.iter().map(|&c| name(c)).collect::<Vec<_>>());

    let tree = majority.to_tree(&l)?;
    let table = majority.tabulate(&l)?;
    println!("tree agrees with table: {}", Rule::from(tree.clone()).tabulate(&l)? == table);

    let back = tree.to_committee(&l)?;
    for (s, y) in back.terms() {
        let members: Vec<usize> = (0..3).filter(|i| s >> i & 1 == 1).map(|i| i + 1).collect();
        println!("  coalition {members:?} -> {}", name(*y));
    }

    let ballots = ["x", "y", "1"].map(|n| l.id(n).unwrap());
    println!("f(x, y, 1) = {}", name(table.eval(&ballots)?));
    Ok(())
}
