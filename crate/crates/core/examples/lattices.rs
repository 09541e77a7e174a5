//! Building lattices and asking order questions about them.

use lattice_vote::{Lattice, Poset};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sq = Lattice::boolean_square();
    let [o, x, y, one] = ["0", "x", "y", "1"].map(|n| sq.id(n).unwrap());
    println!("x ∨ y = {}, x ∧ y = {}", sq.name(sq.join(x, y)), sq.name(sq.meet(x, y)));
    println!("median(1, x, y) = {}", sq.name(sq.median(one, x, y)));
    println!("x between 0 and 1: {}", sq.between(o, x, one));
    println!("1 between x and y: {}", sq.between(x, one, y));

    // Same square three ways.
    let two = Lattice::chain(2)?;
    let prod = Lattice::product(&two, &two)?;
    let ideals = Lattice::ideals(&Poset::antichain(2))?;
    println!("2x2 has {} elements, ideals of a 2-antichain: {}", prod.size(), ideals.size());

    let grid = Lattice::product(&Lattice::chain(3)?, &Lattice::chain(3)?)?;
    let v = grid.rank_valuation();
    let (a, b) = (grid.id("(0,2)").unwrap(), grid.id("(2,0)").unwrap());
    println!("3x3 grid: d((0,2), (2,0)) = {}", grid.metric_distance(&v, a, b));
    let interval: Vec<&str> = grid.interval(a, b).into_iter().map(|z| grid.name(z)).collect();
    println!("[(0,2), (2,0)] = {interval:?}");

    let cube = Lattice::boolean(3)?;
    println!("2^3 atoms: {:?}", cube.atoms().iter().map(|&a| cube.name(a)).collect::<Vec<_>>());
    Ok(())
}
