//! Exact verification of zero counts for Wronskians of orthogonal polynomials.
//!
//! Everything is computed over ℚ: polynomials are built from recurrences or from
//! a moment sequence, Wronskians by fraction-free elimination, and real roots are
//! counted with Sturm sequences.

pub mod error;
pub mod families;
pub mod partition;
pub mod polyalg;
pub mod rational;
pub mod report;
pub mod theorems;
pub mod wronskian;

pub use error::{Error, Result};
pub use families::{Family, FamilyKind};
pub use partition::{MultiIndex, Partition};
pub use polyalg::{Bound, Interval, RatPoly};
pub use rational::Rational;
pub use report::{sweep, SweepOutcome, SweepSummary};
pub use theorems::{Prediction, Status, VerificationReport, Verifier};
pub use wronskian::{WronskianEngine, WronskianResult};
