//! Unimodal, locally strictly unimodal and separable preferences on 2^2.

use lattice_vote::preorder::{
    enumerate_lsu, enumerate_separable, enumerate_unimodal, extend_to_total_preorder, strict_top_betweenness,
};
use lattice_vote::{Lattice, TotalPreorder};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let l = Lattice::boolean_square();
    let u = enumerate_unimodal(&l)?;
    let s = enumerate_lsu(&l)?;
    println!("{} unimodal:", u.len());
    for p in &u {
        println!("  {}", p.display(&l));
    }
    println!("{} locally strictly unimodal:", s.len());
    for p in &s {
        println!("  {}", p.display(&l));
    }
    println!("separable = strict: {}", enumerate_separable(&l)? == s);

    let p = TotalPreorder::parse(r#"[["x"],["1"],["0","y"]]"#, &l)?;
    println!("{}: unimodal {}, strict {}", p.display(&l), p.is_unimodal(&l)?, p.is_locally_strictly_unimodal(&l)?);

    let x = l.id("x").unwrap();
    let ext = extend_to_total_preorder(&strict_top_betweenness(&l, x))?;
    println!("extension of the relation around x: {}", ext.display(&l));
    Ok(())
}
