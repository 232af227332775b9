//! The Borel-fibration spectral sequence with GF(2) coefficients.
//!
//! The base is the classifying space of the order-2 group, whose cohomology
//! is the polynomial algebra on one degree-1 class `t`; the fiber is a
//! truncated algebra on one or two generators of a common degree 1 or 2.
//! With a trivial action on fiber cohomology the starting page is
//! `H^k(base) ⊗ H^l(fiber)`, and the only possible nonzero differential is
//! the transgression on page `r0 = deg(generator) + 1`, sending a chosen
//! set of fiber generators to `t^{r0} ⊗ 1` and extending by the Leibniz
//! rule.
//!
//! Because the differential is linear over the base polynomial algebra, its
//! matrix is the same in every column `k`; a page is therefore stored as
//! one [`PageColumn`] per fiber degree with two column classes — `k < r0`
//! (kernel only, nothing maps in from the left) and `k ≥ r0` (kernel modulo
//! image) — instead of a full two-dimensional grid.

use crate::algebra::{Element, Monomial, TruncatedAlgebra};
use crate::gf2::{subquotient_dim, GF2Matrix, GF2Vector, Gf2Error};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use thiserror::Error;

/// Errors from page construction and the collapse checks.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpectralError {
    /// The fiber algebra is not of the supported shape.
    #[error("unsupported fiber: {0}")]
    BadFiber(String),
    /// The case was built for a different transgression page.
    #[error("case acts on page {case_page} but the setup transgresses on page {setup_page}")]
    PageMismatch { case_page: usize, setup_page: usize },
    /// The case violates its parity constraints for this fiber.
    #[error("case is not admissible: {0}")]
    CaseInadmissible(String),
    /// The image entering a fiber degree escapes the kernel there, i.e.
    /// the composite of two differentials failed to vanish. Internal bug.
    #[error("composite differential fails to vanish entering fiber degree {fiber_degree}")]
    InternalDSquared { fiber_degree: usize },
    /// A class survives in the columns at or past the transgression page,
    /// so the page has not collapsed.
    #[error("surviving class past the transgression columns in fiber degree {fiber_degree}")]
    NotCollapsed { fiber_degree: usize },
    /// A class expected to survive to the limit fails to be a cocycle,
    /// which signals a case/fiber mismatch.
    #[error("class `{class}` is not a cocycle in case {case}")]
    NotACocycle { class: String, case: String },
    /// Totals leak past the fiber's top degree.
    #[error("dimension {dim} survives in total degree {degree}, beyond the window {window}")]
    VanishingViolated { degree: usize, dim: usize, window: usize },
}

/// Paper-style case names for the possible transgression patterns.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum CaseLabel {
    /// Only the first generator transgresses.
    #[serde(rename = "i")]
    I,
    /// Only the second generator transgresses.
    #[serde(rename = "ii")]
    II,
    /// Both generators transgress.
    #[serde(rename = "iii")]
    III,
}

impl CaseLabel {
    /// The report token for this label.
    pub fn as_str(self) -> &'static str {
        match self {
            CaseLabel::I => "i",
            CaseLabel::II => "ii",
            CaseLabel::III => "iii",
        }
    }
}

impl std::fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for CaseLabel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "i" => Ok(CaseLabel::I),
            "ii" => Ok(CaseLabel::II),
            "iii" => Ok(CaseLabel::III),
            other => Err(format!("unknown case label `{other}` (expected i, ii, or iii)")),
        }
    }
}

/// The spectral-sequence input: a fiber algebra over the fixed base
/// `Z2[t]`, with the transgression page and degree window derived from it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BorelSetup {
    fiber: TruncatedAlgebra,
    page: usize,
    window: usize,
}

impl BorelSetup {
    /// Wraps a fiber algebra. The fiber must have one or two generators of
    /// a common degree 1 or 2 and pure-power relations only; generators of
    /// degree d transgress on page d + 1.
    pub fn new(fiber: TruncatedAlgebra) -> Result<Self, SpectralError> {
        let gens = fiber.generators();
        if gens.is_empty() || gens.len() > 2 {
            return Err(SpectralError::BadFiber(format!(
                "expected one or two generators, found {}",
                gens.len()
            )));
        }
        let degree = gens[0].degree;
        if gens.iter().any(|g| g.degree != degree) {
            return Err(SpectralError::BadFiber(
                "generators must share a degree".to_string(),
            ));
        }
        if degree != 1 && degree != 2 {
            return Err(SpectralError::BadFiber(format!(
                "generator degree must be 1 or 2, found {degree}"
            )));
        }
        if fiber.rewrite().is_some() {
            return Err(SpectralError::BadFiber(
                "fiber must have pure-power relations only".to_string(),
            ));
        }
        let window = fiber.top_degree();
        Ok(BorelSetup {
            fiber,
            page: degree + 1,
            window,
        })
    }

    /// The fiber algebra.
    pub fn fiber(&self) -> &TruncatedAlgebra {
        &self.fiber
    }

    /// The transgression page r0 (2 for degree-1 fibers, 3 for degree-2).
    pub fn page(&self) -> usize {
        self.page
    }

    /// Top nonvanishing fiber degree D; totals must vanish above it.
    pub fn window(&self) -> usize {
        self.window
    }
}

/// One assignment of transgression images: each fiber generator either
/// maps to `t^{r0} ⊗ 1` or dies.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DifferentialCase {
    /// The page on which the differential acts.
    pub page: usize,
    /// Per generator: true when it transgresses to `t^{page} ⊗ 1`.
    pub transgresses: Vec<bool>,
    /// Paper-style name of this pattern.
    pub label: CaseLabel,
}

/// One summand `t^{t_power} ⊗ monomial` of a differential value.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TransgressionTerm {
    /// Exponent of the base class; always the acting page.
    pub t_power: usize,
    /// Fiber part of the summand.
    pub monomial: Monomial,
}

/// Whether a case (or space) passes its parity constraints, with the
/// failing parameters named when it does not.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Admissibility {
    /// True when no constraint fails.
    pub admissible: bool,
    /// Human-readable failure, e.g. `n even`; absent when admissible.
    pub reason: Option<String>,
}

impl Admissibility {
    /// The passing verdict.
    pub fn yes() -> Self {
        Admissibility {
            admissible: true,
            reason: None,
        }
    }

    /// A failing verdict with its reason.
    pub fn no(reason: String) -> Self {
        Admissibility {
            admissible: false,
            reason: Some(reason),
        }
    }
}

/// Surviving dimensions at one fiber degree of the page after the
/// transgression has acted.
///
/// The differential matrix does not depend on the column `k`, so only two
/// column classes exist: `k < page` receives nothing from the left and
/// keeps the full kernel, while `k ≥ page` also quotients by the incoming
/// image. Kernel and image bases are kept in the coordinates of the
/// fiber-degree basis for downstream rank checks.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PageColumn {
    /// The fiber degree l this column class describes.
    pub fiber_degree: usize,
    /// Dimensions at columns k = 0..page−1; entries are equal by
    /// construction.
    pub dim_low: Vec<usize>,
    /// Dimension at every column k ≥ page.
    pub dim_high: usize,
    /// Basis of the kernel of the differential leaving this fiber degree.
    pub kernel: Vec<GF2Vector>,
    /// Basis of the image of the differential entering this fiber degree.
    pub image: Vec<GF2Vector>,
}

/// The totalized limit page: graded dimensions of the total space
/// cohomology, with the per-bidegree breakdown.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EInfinityTable {
    /// Top fiber degree D; totals vanish above it.
    pub window: usize,
    /// Total dimension per degree p in 0..=2D.
    pub totals: Vec<usize>,
    /// Nonzero cells (k, l, dim) with k + l = p, per degree p.
    pub cells: Vec<Vec<(usize, usize, usize)>>,
}

/// The possible transgression patterns for this fiber: one per nonempty
/// subset shape the underlying results allow — a single generator has one
/// pattern; two generators have patterns i (first only), ii (second only),
/// and iii (both). The all-zero pattern is excluded because the sequence
/// of a free action cannot degenerate.
pub fn enumerate_cases(setup: &BorelSetup) -> Vec<DifferentialCase> {
    let page = setup.page();
    match setup.fiber().arity() {
        1 => vec![DifferentialCase {
            page,
            transgresses: vec![true],
            label: CaseLabel::I,
        }],
        2 => vec![
            DifferentialCase {
                page,
                transgresses: vec![true, false],
                label: CaseLabel::I,
            },
            DifferentialCase {
                page,
                transgresses: vec![false, true],
                label: CaseLabel::II,
            },
            DifferentialCase {
                page,
                transgresses: vec![true, true],
                label: CaseLabel::III,
            },
        ],
        _ => unreachable!("setup construction enforces one or two generators"),
    }
}

/// The transgressive differential of one basis monomial, extended by the
/// Leibniz rule: each transgressing generator with odd exponent
/// contributes `t^{page} ⊗ (monomial with that exponent lowered by one)`,
/// and even exponents contribute nothing. Terms are canonical (sorted,
/// cancelled mod 2).
pub fn leibniz_differential(
    setup: &BorelSetup,
    case: &DifferentialCase,
    mono: &Monomial,
) -> Vec<TransgressionTerm> {
    let fiber = setup.fiber();
    debug_assert_eq!(case.transgresses.len(), fiber.arity());
    let mut parts = Vec::new();
    for (i, &hits) in case.transgresses.iter().enumerate() {
        if !hits {
            continue;
        }
        let p = mono.exponent(i);
        if p % 2 == 1 {
            let mut exps = mono.exponents.clone();
            exps[i] = p - 1;
            parts.push(Monomial::new(exps));
        }
    }
    Element::from_monomials(parts)
        .terms()
        .iter()
        .map(|m| TransgressionTerm {
            t_power: case.page,
            monomial: m.clone(),
        })
        .collect()
}

/// Checks the parity constraints: a transgressing generator must have an
/// even truncation exponent, otherwise the differential of the vanishing
/// power `g^{trunc}` would be a nonzero class, a contradiction. Failing
/// parameters are reported by name (`n` for the first generator, `m` for
/// the second).
pub fn relation_consistency(case: &DifferentialCase, setup: &BorelSetup) -> Admissibility {
    let fiber = setup.fiber();
    let mut failures = Vec::new();
    for (i, &hits) in case.transgresses.iter().enumerate() {
        if !hits {
            continue;
        }
        // trunc = parameter + 1, so an odd truncation means an even
        // parameter, which is the rejected parity.
        let trunc = fiber.generators()[i].trunc;
        if trunc % 2 == 1 {
            let name = if i == 0 { "n" } else { "m" };
            failures.push(format!("{name} even"));
        }
    }
    if failures.is_empty() {
        Admissibility::yes()
    } else {
        Admissibility::no(failures.join(" and "))
    }
}

/// Builds the differential matrix leaving fiber degree l, in the bases of
/// the source and target fiber degrees; fiber degrees below the drop get a
/// zero-row matrix (everything is a cocycle there).
fn differential_matrix(setup: &BorelSetup, case: &DifferentialCase, l: usize) -> GF2Matrix {
    let fiber = setup.fiber();
    let drop = case.page - 1;
    let source = fiber.basis_of_degree(l);
    if l < drop {
        return GF2Matrix::zeros(0, source.len());
    }
    let target = fiber.basis_of_degree(l - drop);
    let target_index: HashMap<&Monomial, usize> =
        target.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut matrix = GF2Matrix::zeros(target.len(), source.len());
    for (col, mono) in source.iter().enumerate() {
        for term in leibniz_differential(setup, case, mono) {
            let row = target_index[&term.monomial];
            matrix.set(row, col, true);
        }
    }
    matrix
}

/// Computes the page after the transgression acts: for every fiber degree
/// l in 0..=D, the kernel of the outgoing differential (columns k < page)
/// and the kernel modulo the incoming image (columns k ≥ page).
///
/// The case must match the setup's page and pass its parity constraints;
/// the containment image ⊆ kernel is verified at every degree, so a
/// failure of the composite differential to vanish cannot pass silently.
pub fn compute_pages(
    setup: &BorelSetup,
    case: &DifferentialCase,
) -> Result<Vec<PageColumn>, SpectralError> {
    if case.page != setup.page() {
        return Err(SpectralError::PageMismatch {
            case_page: case.page,
            setup_page: setup.page(),
        });
    }
    let verdict = relation_consistency(case, setup);
    if !verdict.admissible {
        return Err(SpectralError::CaseInadmissible(
            verdict.reason.unwrap_or_default(),
        ));
    }
    let fiber = setup.fiber();
    if setup.page() == 3 {
        // Degree-2 generators populate only even fiber degrees, which is
        // what makes the page-2 differential vanish identically and lets
        // the transgression act on page 3.
        debug_assert!((0..=setup.window())
            .filter(|l| l % 2 == 1)
            .all(|l| fiber.basis_of_degree(l).is_empty()));
    }
    let drop = case.page - 1;
    let window = setup.window();
    let matrices: Vec<GF2Matrix> = (0..=window)
        .map(|l| differential_matrix(setup, case, l))
        .collect();
    let mut columns = Vec::with_capacity(window + 1);
    for l in 0..=window {
        let kernel = matrices[l].kernel_basis();
        let image = if l + drop <= window {
            matrices[l + drop].image_basis()
        } else {
            Vec::new()
        };
        let dim_high = subquotient_dim(&kernel, &image).map_err(|e| match e {
            Gf2Error::ImageNotInKernel => SpectralError::InternalDSquared { fiber_degree: l },
            other => unreachable!("bases share the fiber-degree coordinates: {other}"),
        })?;
        columns.push(PageColumn {
            fiber_degree: l,
            dim_low: vec![kernel.len(); case.page],
            dim_high,
            kernel,
            image,
        });
    }
    Ok(columns)
}

/// True when every column class at or past the transgression page has
/// died, which forces all later differentials to vanish: the limit page
/// has been reached.
pub fn verify_collapse(page: &[PageColumn]) -> bool {
    page.iter().all(|col| col.dim_high == 0)
}

/// Reassembles total-degree dimensions from a collapsed page: the degree-p
/// dimension is the sum of the surviving cells (k, p−k) over k < page.
/// Verified up to twice the window; any survivor past the window is an
/// error, as is an uncollapsed page.
pub fn totalize(page: &[PageColumn], setup: &BorelSetup) -> Result<EInfinityTable, SpectralError> {
    if let Some(col) = page.iter().find(|col| col.dim_high != 0) {
        return Err(SpectralError::NotCollapsed {
            fiber_degree: col.fiber_degree,
        });
    }
    let window = setup.window();
    let r0 = setup.page();
    let mut totals = vec![0usize; 2 * window + 1];
    let mut cells = vec![Vec::new(); 2 * window + 1];
    for p in 0..=2 * window {
        for k in 0..r0 {
            let Some(l) = p.checked_sub(k) else { break };
            if l > window {
                continue;
            }
            let dim = page[l].dim_low[k];
            if dim > 0 {
                totals[p] += dim;
                cells[p].push((k, l, dim));
            }
        }
    }
    if let Some(p) = (window + 1..=2 * window).find(|&p| totals[p] != 0) {
        return Err(SpectralError::VanishingViolated {
            degree: p,
            dim: totals[p],
            window,
        });
    }
    Ok(EInfinityTable {
        window,
        totals,
        cells,
    })
}

/// The classes expected to survive to the limit for this case: squares of
/// transgressing generators, untouched generators, and — when both
/// generators transgress — their sum, whose two transgression images
/// cancel mod 2. Each candidate's differential is recomputed and must
/// vanish; a failure signals a case/fiber mismatch.
pub fn permanent_cocycles(
    setup: &BorelSetup,
    case: &DifferentialCase,
) -> Result<Vec<Element>, SpectralError> {
    let fiber = setup.fiber();
    let mut candidates: Vec<Element> = Vec::new();
    let square = |i: usize| {
        let g = fiber.generator_element(i);
        fiber.multiply(&g, &g)
    };
    match (fiber.arity(), case.label) {
        (1, CaseLabel::I) => candidates.push(square(0)),
        (2, CaseLabel::I) => {
            candidates.push(square(0));
            candidates.push(fiber.generator_element(1));
        }
        (2, CaseLabel::II) => {
            candidates.push(fiber.generator_element(0));
            candidates.push(square(1));
        }
        (2, CaseLabel::III) => {
            candidates.push(square(0));
            candidates.push(square(1));
            candidates.push(fiber.generator_element(0).add(&fiber.generator_element(1)));
        }
        _ => {
            return Err(SpectralError::BadFiber(format!(
                "case {} does not apply to a fiber with {} generator(s)",
                case.label,
                fiber.arity()
            )))
        }
    }
    for class in &candidates {
        let mut images = Vec::new();
        for mono in class.terms() {
            for term in leibniz_differential(setup, case, mono) {
                images.push(term.monomial);
            }
        }
        if !Element::from_monomials(images).is_zero() {
            return Err(SpectralError::NotACocycle {
                class: fiber.format_element(class),
                case: case.label.to_string(),
            });
        }
    }
    Ok(candidates)
}

/// The largest base column surviving at fiber degree zero: the nilpotency
/// exponent, minus one, of the image of `t` in the limit. Requires a
/// collapsed page; on one, the unit survives at exactly the columns below
/// the transgression page, giving page − 1.
pub fn coindex(page: &[PageColumn]) -> Result<usize, SpectralError> {
    let zero = page
        .iter()
        .find(|col| col.fiber_degree == 0)
        .expect("a page always carries fiber degree 0");
    if zero.dim_high != 0 {
        return Err(SpectralError::NotCollapsed { fiber_degree: 0 });
    }
    Ok(zero
        .dim_low
        .iter()
        .rposition(|&dim| dim > 0)
        .expect("the unit class survives at fiber degree 0"))
}

/// The contradiction witness for a fully degenerate sequence: if every
/// differential vanished, the base column would survive in every degree,
/// so the total degree D + 1 would be nonzero — impossible for a free
/// action, whose totals die above the window D. Returns that witness
/// degree.
pub fn degenerate_case_contradiction(setup: &BorelSetup) -> usize {
    setup.window() + 1
}
