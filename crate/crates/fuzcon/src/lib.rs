//! A workbench for fuzzy connectives on the unit square.
//!
//! The crate constructs the objects that conjunctions, disjunctions and
//! implications induce in one another — natural negations as suprema/infima
//! of zero/one sets, `(D, N)`-implications `D(N(x), y)`, extracted negations
//! `I(x, 0)`, pseudo-inverses and their patched variant — and verifies the
//! algebraic laws and characterization theorems that tie them together,
//! numerically, with reproducible witnesses for every failure.
//!
//! The pieces:
//!
//! * [`expr`] — a small piecewise expression language in which every bundled
//!   connective is written;
//! * [`connective`] — evaluable unary/binary maps behind a uniform surface,
//!   whether expression-backed, grid-backed or composed;
//! * [`catalog`] — the bundled fixtures with their expected induced objects
//!   and verdicts;
//! * [`induce`] — the constructions themselves, realized by bisection on
//!   monotone predicates;
//! * [`analysis`] — negation classification, the law registry and the
//!   theorem registry;
//! * [`validate`] — boundary/monotonicity/flag verification;
//! * [`fuzz`] — random monotone connectives and counterexample search;
//! * [`report`] — verdict records and their serialized forms.
//!
//! ```
//! use fuzcon::{catalog, induce, NumericConfig};
//!
//! let cfg = NumericConfig { grid_1d: 257, grid_2d: 65, ..NumericConfig::default() };
//! let cat = catalog::load_catalog().unwrap();
//! let t_l = cat.binary("T_L").unwrap();
//! let n = induce::natural_negation_of_conjunction(t_l, &cfg).unwrap();
//! assert!(n.is_negation);
//! assert!((n.function.eval(0.25) - 0.75).abs() < 1e-9);
//! ```

pub mod analysis;
pub mod catalog;
pub mod config;
pub mod connective;
pub mod expr;
pub mod fuzz;
pub mod induce;
pub mod report;
pub mod validate;

pub use analysis::{
    check_law, classify_negation, detect_continuity_2d, verify_theorem, LawId, LawOperands,
    NegationClassReport, TheoremId,
};
pub use catalog::{load_catalog, Catalog, ExpectedNegation, Fixture};
pub use config::NumericConfig;
pub use connective::{BinaryConnective, ConnectiveKind, DeclaredFlags, UnaryFunction};
pub use expr::{parse_connective, Expr};
pub use induce::{InducedNegation, InduceError};
pub use report::{CheckResult, Verdict, Witness};
pub use validate::{validate_connective, validate_negation};

// The guide's code blocks double as integration tests: each chapter is
// included as a doc comment here so `cargo test` keeps the book honest.
#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            pub struct $name;
        };
    }

    chapter!(Introduction, "../../../book/src/introduction.md");
    chapter!(Expressions, "../../../book/src/expressions.md");
    chapter!(Connectives, "../../../book/src/connectives.md");
    chapter!(NaturalNegations, "../../../book/src/natural-negations.md");
    chapter!(Implications, "../../../book/src/implications.md");
    chapter!(LawsAndTheorems, "../../../book/src/laws-and-theorems.md");
    chapter!(Fuzzing, "../../../book/src/fuzzing.md");
    chapter!(Cli, "../../../book/src/cli.md");
    chapter!(Grammar, "../../../book/src/grammar.md");
}
