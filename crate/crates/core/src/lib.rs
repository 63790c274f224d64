//! Exact bounds on the order of regular induced subgraphs of strongly
//! regular graphs.

pub mod bip;
pub mod bounds;
pub mod error;
pub mod exact;
pub mod graphs;
pub mod identities;
pub mod oracle;
pub mod srg;
pub mod strictness;
pub mod sweep;

pub use error::{Error, Result};
pub use exact::{QuadraticSurd, Rational, SignDecision, SurdSum};
pub use srg::{FeasibilityReport, Level, SrgParams, TypeClass};
