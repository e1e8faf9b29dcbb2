//! Reasoning engine for flat assumption-based argumentation with
//! preferences.
//!
//! A framework is a set of inference rules, a non-empty set of assumptions,
//! a contrary map and a preference preorder over the assumptions. The engine
//! computes:
//!
//! - conclusion closures and inclusion-minimal supports of deductions;
//! - the plain attack relation and the preference-aware relation, where an
//!   attack mounted from strictly less preferred assumptions reverses onto
//!   the attacker;
//! - extensions under stable, complete, preferred, grounded and ideal
//!   semantics for both relations, and the defence fixed-point operator;
//! - decision procedures for contraposition, weak contraposition and four
//!   preference-handling principles;
//! - cumulative-transitivity and cautious-monotonicity checks under two
//!   framework transformations that promote a concluded sentence to a fact.
//!
//! The `naive` module re-implements the predicates by raw powerset
//! enumeration and serves as an independent cross-check for the optimized
//! paths; `dsl` and `emit` provide the textual input format and the JSON and
//! DOT outputs used by the command-line interface.

pub mod attacks;
pub mod axioms;
pub mod deduction;
pub mod dsl;
pub mod emit;
pub mod framework;
pub mod naive;
pub mod nmr;
pub mod preorder;
pub mod random;
pub mod semantics;
pub mod set;
pub mod symbols;

#[cfg(test)]
pub(crate) mod examples;

pub use attacks::{attack_graph, attacks, lt_attacks, AttackEdge, AttackKind};
pub use framework::{BuildError, Framework, FrameworkBuilder, Rule};
pub use semantics::{
    def_operator, extensions, grounded_via_lfp, Extension, Family, SemanticsId,
    DEFAULT_MAX_ASSUMPTIONS,
};
pub use set::AsmSet;
pub use symbols::SentenceId;
