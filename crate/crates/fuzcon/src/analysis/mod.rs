//! Classification, law checking and theorem verification.

pub mod classify;
pub mod continuity;
mod laws;
mod theorems;

pub use classify::{classify_negation, NegationClassReport, PropertyVerdict};
pub use continuity::{
    detect_continuity_2d, unary_continuity, BinaryContinuity, JumpWitness, Side, UnaryContinuity,
};
pub use laws::{check_law, extracted_negation_continuous, AnalysisError, LawId, LawOperands};
pub use theorems::{verify_theorem, TheoremId};
