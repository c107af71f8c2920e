//! Primitive/Seifert positions of Seifert fibered surgeries.
//!
//! Two families are covered: twisted torus knots `K(p, q, p+q, n)` and the
//! knots `k(A, B, C)` obtained from rational tangle triples. For each
//! surgery the crate computes the exceptional fibers of the result, the
//! index sets of its two primitive/Seifert positions and, where available,
//! their Seifert halves, then decides whether the positions are distinct.
//!
//! All arithmetic is exact.

pub mod cli;
pub mod distinctness;
pub mod exact_arith;
pub mod families;
pub mod report;
pub mod seifert;
pub mod tangle;

pub use distinctness::{decide_distinct, decide_surgery, Verdict, VerdictKind};
pub use exact_arith::{cf_to_rational, mod_one, rational_to_cf, ContinuedFraction, ExtRational};
pub use families::{EmKnotParams, PsPosition, SurgeryRecord, TwistedTorusKnotParams};
pub use seifert::{IndexSet, SfsDescriptor};
pub use tangle::{FamilyCase, RationalTangle, TangleTriple};
