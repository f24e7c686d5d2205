//! Representation, instantiation and dual-route verification of the
//! integral identities: instance model, verifier, integral representations
//! of classical functions, and the curated built-in suites.

pub mod instance;
pub mod reps;
pub mod suites;
pub mod verify;

pub use instance::{parse_instances, IdentityFamily, IdentityInstance, Scalars};
pub use reps::{rep_eval, rep_oracle, RepTarget};
pub use suites::{builtin_suite, SUITE_NAMES};
pub use verify::{moment_sum, scaled_diff, verify, GammaLedger, InnerSeries, VerificationReport, VerifyOptions};
