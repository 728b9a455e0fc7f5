//! Exact extremal weight enumerators for Type I-IV self-dual codes.
//!
//! - [`polyarith`]: dense bivariate integer polynomials on a weight lattice.
//! - [`gleason`]: generator data per type and the triangular extremal solve.
//! - [`oracle`]: an independent dense rational solve for cross-checking.
//! - [`analysis`]: coefficient signs, nonexistence verdicts, claim checks.
//! - [`cli`]: the `extremal` command-line front end and its result cache.

pub mod analysis;
pub mod cli;
pub mod gleason;
pub mod oracle;
pub mod polyarith;

pub use analysis::{analyze, classify, scan, sign_report, ClaimId, Sign, SignReport, Verdict};
pub use gleason::{extremal_enumerator, CodeType, ExtremalEnumerator};
pub use polyarith::{BigCoeff, StepPoly};
