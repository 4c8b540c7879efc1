//! Exact symbolic engine for semigroup determinants.
//!
//! A finite semigroup given by its multiplication table has a determinant:
//! the determinant of the matrix whose (s, t) entry is the variable x_{st}.
//! This crate computes it exactly, decides non-vanishing, and implements the
//! structure theory that factors it when idempotents commute: unit maps and
//! unit classes, the sandwich order with its zeta/Moebius transforms, the
//! star algebra obtained by conjugating the semigroup algebra product, and
//! the per-idempotent block factorization together with the product formula
//! for central idempotents.
//!
//! The determinant engines (memoized Laplace expansion, fraction-free
//! Bareiss elimination, and a seeded modular probe) operate on sparse
//! integer polynomials and never approximate. A corpus layer parses table
//! files, generates sweep and random corpora, and scans them for
//! orthogonality counterexamples with deterministic, parallelism-independent
//! output.

pub mod analyze;
pub mod cayley;
pub mod corpus;
pub mod det;
pub mod ecom;
pub mod factor;
pub mod gen;
pub mod poly;
pub mod poset;
pub mod semigroup;
pub mod star;
pub mod suite;

/// Seed used when the caller does not supply one.
pub const DEFAULT_SEED: u64 = 0x00EC_0DE7;

pub use analyze::{analyze, scan, summarize, write_jsonl, Flags, ScanResult, ScanSummary};
pub use cayley::{cayley, contracted_cayley, star_cayley, theta, theta_tilde, theta_verdict};
pub use corpus::{parse_corpus, reference, write_corpus, CorpusError, CorpusRecord};
pub use det::{bareiss, laplace, probe_nonzero, Method, PolyMatrix};
pub use ecom::{EcomProfile, ProfileError, Side, Sigma};
pub use factor::{factor_central_idempotent, factor_main_theorem, FactorError, FactorReport};
pub use poly::Poly;
pub use poset::Poset;
pub use semigroup::{MulTable, TableError};
pub use star::{check_orthogonality, StarError, StarTable, Verdict, ZetaTransform};
pub use suite::{run_acceptance, CriterionReport};
