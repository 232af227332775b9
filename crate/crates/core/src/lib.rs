//! Verification engine for the mod-2 cohomology of orbit spaces of free
//! involutions on products of projective spaces (and on single projective
//! spaces of odd dimension).
//!
//! The pipeline has four layers, one per module:
//!
//! * [`gf2`] — dense bit-packed linear algebra over GF(2): ranks, kernels,
//!   images, and subquotient dimensions, with a brute-force span oracle for
//!   cross-checking.
//! * [`algebra`] — truncated graded-commutative GF(2) algebras: monomial
//!   bases, Hilbert series, Künneth products, nilpotency orders, and the
//!   involutive-substitution analysis used to pin down induced actions.
//! * [`spectral`] — the Borel-fibration spectral sequence: transgressive
//!   differentials via the Leibniz rule, page computation, collapse
//!   detection, totalization, and the co-index of the action.
//! * [`theorems`] — the top-level checks: admissibility of a free action,
//!   candidate orbit-space presentations, degree-by-degree comparison of
//!   computed totals against those presentations, known-answer fixtures,
//!   and the equivariant-map nonexistence bound.
//!
//! All coefficients are in GF(2); every computation here is exact.

// Parity tests and truncation exponents keep the closed-form shape they
// have in the statements being verified: `n % 2 == 0`, `(n + 1) / 2`.
#![allow(clippy::manual_is_multiple_of, clippy::manual_div_ceil)]

pub mod algebra;
pub mod gf2;
pub mod spectral;
pub mod theorems;

pub use algebra::{
    build_space_algebra, AlgebraError, Element, GeneratorSpec, HilbertSeries, Monomial,
    RewriteRule, SpaceKind, Substitution, TruncatedAlgebra,
};
pub use gf2::{subquotient_dim, GF2Matrix, GF2Vector, Gf2Error};
pub use spectral::{
    compute_pages, coindex, degenerate_case_contradiction, enumerate_cases, leibniz_differential,
    permanent_cocycles, relation_consistency, totalize, verify_collapse, Admissibility,
    BorelSetup, CaseLabel, DifferentialCase, EInfinityTable, PageColumn, SpectralError,
    TransgressionTerm,
};
pub use theorems::{
    candidate_presentation, free_action_admissible, known_answer_examples, map_nonexistence_bound,
    presentation_family_text, presentation_text, verify_case, verify_space, CaseReport,
    InducedActionReport, KnownAnswer, MapBound, RewriteParams, SpaceSpec, TheoremError,
    VerificationReport,
};
