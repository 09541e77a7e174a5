//! Voting rules on finite bounded distributive lattices.
//!
//! The crate builds small distributive lattices, represents preferences as
//! topped total preorders, expresses voting rules as tables, lattice
//! polynomials or nested median trees, and checks strategy-proofness
//! properties by exhaustive search.

pub mod bits;
pub mod cli;
pub mod error;
pub mod format;
pub mod lattice;
pub mod preorder;
pub mod rules;
pub mod verify;

pub use error::{FormatError, LatticeError, PreorderError, RuleError, VerifyError};
pub use lattice::{ElementId, Lattice, Poset, Valuation};
pub use preorder::{PreferenceProfile, StrictRelation, TotalPreorder};
pub use rules::{CommitteeRule, ExplicitRule, MedianTree, Rule};
