//! Statistics of two-point prospects: closed-form moments of gambles and
//! their repeated-play sample means, entropy of the associated outcome
//! schemes, choice-fraction modeling between pairs of prospects, certainty
//! equivalent elicitation, and expected-value analysis of lottery games.

pub mod bounds;
pub mod choice;
pub mod datasets;
pub mod elicitation;
pub mod entropy;
pub mod error;
pub mod fitting;
pub mod lottery;
pub mod montecarlo;
pub mod numeric;
pub mod prospect;

pub use error::{Error, Result};
pub use prospect::{MomentSet, Prospect, TrialCount};
