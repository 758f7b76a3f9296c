//! Referee assignment by block design.
//!
//! Given `n` proposals and referees who can each read at most `k` of them, the
//! goal is an assignment in which every pair of proposals lands on at least
//! one common referee, so that all pairwise comparisons are possible. When
//! `q = n/k` is a prime power and `n` divides `k²`, a `(q², q, 1)` balanced
//! incomplete block design — built from a complete set of `q−1` mutually
//! orthogonal Latin squares over GF(q) — yields such an assignment with
//! `q(q+1)` referees, which is optimal when `k = √n`.
//!
//! The crate provides:
//!
//! - [`field`]: exact arithmetic in GF(p^m),
//! - [`latin`]: Latin squares, orthogonality, complete MOLS,
//! - [`design`]: `(q², q, 1)` design construction and an exhaustive validator,
//! - [`assignment`]: lifting a design to a referee assignment and verifying
//!   pair coverage,
//! - [`bounds`]: the referee-count lower bound, two upper bounds, and their
//!   exact-rational ratios,
//! - [`oracle`]: branch-and-bound minimum coverings for tiny instances.
//!
//! All computation is exact integer/rational arithmetic and every operation
//! is deterministic across runs.

pub mod assignment;
pub mod bounds;
pub mod design;
mod error;
pub mod field;
pub mod latin;
pub mod oracle;

pub use assignment::{
    assign, make_instance, referee_count, verify_cover, Assignment, CoverReport, ProblemInstance,
};
pub use bounds::{
    compare, lower_bound, upper_bound_new, upper_bound_prior, BoundsReport, Method, Rational,
};
pub use design::{
    bibd_params, construct_q2_bibd, remark2_identity, validate_bibd, BibdParams, BibdReport,
    BibdViolation, Block, Design,
};
pub use error::{Error, Result};
pub use field::{is_prime_power, FieldElement, FieldSpec};
pub use latin::{
    are_orthogonal, check_disjoint_lines, is_latin, juxtapose, max_cell_intersection,
    mols_complete, Juxtaposition, LatinSquare,
};
pub use oracle::{
    cover_count_exact, min_cover_exact, LimitKind, PairCounts, SearchBudget, SearchResult,
};
