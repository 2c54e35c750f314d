//! Braid groups and singular braid monoids in handlebodies, the Vassiliev
//! algebra, Markov traces from enhanced Yang–Baxter operators, and the
//! finite-type link invariants they produce.

pub mod braid;
pub mod cli;
pub mod error;
pub mod eyb;
pub mod free_group;
pub mod invariants;
pub mod laurent;
pub mod matrix;
pub mod random;
pub mod relations;
pub mod report;
pub mod rewrite;
pub mod series;
pub mod singular;
pub mod suites;
pub mod trace;
pub mod vassiliev;

pub use error::{Error, Result};
