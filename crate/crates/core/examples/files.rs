//! Reading the bundled lattice, rule and preference files.

use lattice_vote::format;

fn read(name: &str) -> String {
    std::fs::read_to_string(format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let l = format::parse_lattice(&read("boolean_square.json"))?;
    let mu = format::parse_rule(&read("majority5.json"), &l)?;
    let ballots = format::parse_ballots("x,x,y,y,0", &l)?;
    println!("majority(x,x,y,y,0) = {}", l.name(mu.eval(&l, &ballots)?));

    let tree = format::parse_rule(&read("theorem2.json"), &l)?;
    println!("{}", format::rule_to_json(&l, &tree.to_committee(&l)?.into())?);

    for p in format::parse_preorders(&read("walkthrough_prefs.json"), &l)? {
        println!("{} -> {}", p.display(&l), format::preorder_to_value(&l, &p));
    }
    print!("{}", format::lattice_to_json(&format::parse_lattice(&read("chain4.json"))?));
    Ok(())
}
