//! Theorem suites. Each returns a [`VerificationReport`]; `all` runs every
//! suite on its default lattices.

mod algebra;
mod chain;
mod equivalence;
pub mod fixtures;
mod impossibility;
mod lemmas;
mod square;

pub use algebra::{claim1, claim2};
pub use chain::corollary1;
pub use equivalence::theorem1;
pub use impossibility::{theorem2, theorem3};
pub use lemmas::{lemma1, lemma2};
pub use square::{boolean_square, ste1_counterexample, ste_counterexample, ste_counts, walkthrough_witness};

use super::{VerificationReport, VerifyOptions};
use crate::error::VerifyError;
use crate::lattice::Lattice;

/// Suite names accepted by [`run`].
pub const SUITES: [&str; 9] = [
    "claim1",
    "lemma1",
    "lemma2",
    "theorem1",
    "theorem2",
    "theorem3",
    "corollary1",
    "boolean-square",
    "all",
];

/// Runs one suite by name. `lattice` overrides the default lattice where the
/// suite takes one; `voters` and `samples` likewise.
pub fn run(
    name: &str,
    lattice: Option<&Lattice>,
    voters: Option<usize>,
    samples: Option<usize>,
    opts: &VerifyOptions,
) -> Result<VerificationReport, VerifyError> {
    let square = Lattice::boolean_square();
    let chain = fixtures::chain_abdc();
    let l = |default: &Lattice| lattice.cloned().unwrap_or_else(|| default.clone());
    Ok(match name {
        "claim1" => match lattice {
            Some(l) => claim1(l),
            None => {
                let mut r = VerificationReport::new("claim1");
                for (_, l) in fixtures::standard_lattices() {
                    r.absorb(claim1(&l));
                }
                r.finish()
            }
        },
        "lemma1" => lemma1(&l(&square), voters.unwrap_or(2), samples.unwrap_or(100), opts)?,
        "lemma2" => match lattice {
            Some(l) => lemma2(l, voters.unwrap_or(3), opts)?,
            None => {
                let mut r = VerificationReport::new("lemma2");
                r.absorb(lemma2(&square, voters.unwrap_or(3), opts)?);
                r.absorb(lemma2(&Lattice::boolean(3)?, voters.unwrap_or(3), opts)?);
                r.finish()
            }
        },
        "theorem1" => theorem1(&l(&square), voters.unwrap_or(2), samples.unwrap_or(200), opts)?,
        "theorem2" => theorem2(&l(&square), opts)?,
        "theorem3" => match voters {
            Some(n) => theorem3(&l(&square), n, opts)?,
            None => {
                let mut r = VerificationReport::new("theorem3");
                for n in 3..=5 {
                    r.absorb(theorem3(&l(&square), n, opts)?);
                }
                r.finish()
            }
        },
        "corollary1" => match voters {
            Some(n) => corollary1(&l(&chain), n, samples.unwrap_or(100), opts)?,
            None => {
                let mut r = VerificationReport::new("corollary1");
                r.absorb(corollary1(&l(&chain), 2, samples.unwrap_or(100), opts)?);
                r.absorb(corollary1(&l(&chain), 3, 0, opts)?);
                r.finish()
            }
        },
        "boolean-square" => boolean_square(opts)?,
        "all" => all(opts)?,
        other => return Err(VerifyError::UnknownSuite(other.to_string())),
    })
}

/// Every suite on its default inputs.
pub fn all(opts: &VerifyOptions) -> Result<VerificationReport, VerifyError> {
    let mut r = VerificationReport::new("all");
    for name in SUITES.iter().filter(|&&s| s != "all") {
        r.absorb(run(name, None, None, None, opts)?);
    }
    let chain = fixtures::chain_abdc();
    r.absorb(theorem1(&chain, 2, 50, opts)?);
    r.absorb(claim2(&Lattice::boolean(3)?));
    r.absorb(theorem2(&chain, opts)?);
    r.absorb(theorem2(&Lattice::boolean(3)?, opts)?);
    Ok(r.finish())
}
