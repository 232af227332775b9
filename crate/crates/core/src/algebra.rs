//! Truncated graded-commutative algebras over GF(2).
//!
//! An algebra here is a list of generators, each with a degree and a
//! truncation exponent (the smallest power that vanishes), plus at most one
//! rewrite rule expressing the square of a distinguished generator `w` in
//! terms of lower `w`-degree monomials. This is exactly enough to model the
//! mod-2 cohomology of products of projective spaces and the candidate
//! orbit-space presentations the engine verifies against.
//!
//! Everything is exact: elements are canonical sorted sums of monomials with
//! coefficients in GF(2), so equality is structural, and Hilbert series are
//! computed both in closed form and by monomial enumeration so the two can
//! be cross-checked.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Errors from algebra construction and the substitution analysis.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    /// Parameters violate a documented precondition.
    #[error("invalid parameters: {0}")]
    BadParams(String),
    /// Two generators share a name.
    #[error("generator name `{0}` appears more than once")]
    NameClash(String),
    /// The rewrite rule is malformed for this generator list.
    #[error("invalid rewrite rule: {0}")]
    BadRewrite(String),
    /// Substitution enumeration is defined only for two generators of
    /// equal degree.
    #[error("substitution enumeration requires exactly two generators of equal degree")]
    NotApplicable,
    /// The obstruction test received a class of the wrong shape.
    #[error("obstruction test rejected its input: {0}")]
    BadDegree(String),
}

/// Which family of spaces an algebra models.
///
/// Product kinds carry two generators; single kinds model the one-generator
/// degenerations obtained by dropping the second factor.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum SpaceKind {
    /// Product of two real projective spaces: two degree-1 generators.
    #[serde(rename = "real")]
    RealProduct,
    /// Product of two complex projective spaces: two degree-2 generators.
    #[serde(rename = "complex")]
    ComplexProduct,
    /// A single real projective space: one degree-1 generator.
    #[serde(rename = "real-single")]
    RealSingle,
    /// A single complex projective space: one degree-2 generator.
    #[serde(rename = "complex-single")]
    ComplexSingle,
}

impl SpaceKind {
    /// True for the two-factor kinds.
    pub fn is_product(self) -> bool {
        matches!(self, SpaceKind::RealProduct | SpaceKind::ComplexProduct)
    }

    /// True when the model generators sit in degree 2 rather than 1.
    pub fn is_complex(self) -> bool {
        matches!(self, SpaceKind::ComplexProduct | SpaceKind::ComplexSingle)
    }

    /// Degree of the model generators (1 real, 2 complex).
    pub fn generator_degree(self) -> usize {
        if self.is_complex() {
            2
        } else {
            1
        }
    }

    /// The flag/report token for this kind.
    pub fn as_str(self) -> &'static str {
        match self {
            SpaceKind::RealProduct => "real",
            SpaceKind::ComplexProduct => "complex",
            SpaceKind::RealSingle => "real-single",
            SpaceKind::ComplexSingle => "complex-single",
        }
    }
}

impl std::fmt::Display for SpaceKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for SpaceKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "real" => Ok(SpaceKind::RealProduct),
            "complex" => Ok(SpaceKind::ComplexProduct),
            "real-single" => Ok(SpaceKind::RealSingle),
            "complex-single" => Ok(SpaceKind::ComplexSingle),
            other => Err(format!(
                "unknown kind `{other}` (expected real, complex, real-single, or complex-single)"
            )),
        }
    }
}

/// One generator of a truncated algebra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GeneratorSpec {
    /// Symbol used in formatted output.
    pub name: String,
    /// Grading degree; at least 1.
    pub degree: usize,
    /// Smallest power equal to zero; at least 1. A truncation of 1 means
    /// the generator itself is zero, which presentations use freely.
    pub trunc: usize,
}

impl GeneratorSpec {
    /// Convenience constructor.
    pub fn new(name: &str, degree: usize, trunc: usize) -> Self {
        GeneratorSpec {
            name: name.to_string(),
            degree,
            trunc,
        }
    }
}

/// A product of generator powers, stored as one exponent per generator.
///
/// The derived ordering is lexicographic on exponent vectors and is used to
/// keep element terms canonical.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial {
    /// One exponent per generator, in generator order.
    pub exponents: Vec<u32>,
}

impl Monomial {
    /// Builds a monomial from explicit exponents.
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial { exponents }
    }

    /// The empty product (the algebra unit) on `arity` generators.
    pub fn unit(arity: usize) -> Self {
        Monomial {
            exponents: vec![0; arity],
        }
    }

    /// Exponent of generator `i`.
    pub fn exponent(&self, i: usize) -> u32 {
        self.exponents[i]
    }
}

/// A formal sum of monomials with GF(2) coefficients, kept canonical:
/// terms are sorted and distinct, so structural equality is semantic
/// equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Element {
    terms: Vec<Monomial>,
}

impl Element {
    /// The zero element.
    pub fn zero() -> Self {
        Element { terms: Vec::new() }
    }

    /// The element with a single term.
    pub fn from_monomial(mono: Monomial) -> Self {
        Element { terms: vec![mono] }
    }

    /// Canonicalizes an arbitrary term list: monomials appearing an even
    /// number of times cancel.
    pub fn from_monomials(mut monos: Vec<Monomial>) -> Self {
        monos.sort();
        let mut terms = Vec::with_capacity(monos.len());
        let mut iter = monos.into_iter().peekable();
        while let Some(m) = iter.next() {
            let mut count = 1usize;
            while iter.peek() == Some(&m) {
                iter.next();
                count += 1;
            }
            if count % 2 == 1 {
                terms.push(m);
            }
        }
        Element { terms }
    }

    /// The canonical term list, sorted ascending.
    pub fn terms(&self) -> &[Monomial] {
        &self.terms
    }

    /// True for the zero element.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum over GF(2): the symmetric difference of term sets.
    pub fn add(&self, other: &Element) -> Element {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match self.terms[i].cmp(&other.terms[j]) {
                std::cmp::Ordering::Less => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Element { terms: out }
    }

    /// In-place sum over GF(2).
    pub fn add_assign(&mut self, other: &Element) {
        *self = self.add(other);
    }
}

/// The square of one generator expressed as a sum of monomials of strictly
/// smaller exponent in that generator.
///
/// This is the only non-pure-power relation the engine supports; it covers
/// the `w² = α·(x-term)·w + β·y + γ·z` shape of the orbit-space
/// presentations, and nothing more general. Rewriting terminates because
/// every right-hand monomial has `w`-exponent at most 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RewriteRule {
    /// Index of the generator whose square is being rewritten.
    pub target: usize,
    /// Canonical term list of the square.
    pub rhs: Vec<Monomial>,
}

/// A graded-commutative GF(2) algebra on finitely many truncated
/// generators, with an optional rewrite rule for one generator square.
///
/// The basis consists of all monomials with every exponent below its
/// generator's truncation; over GF(2) graded-commutative means commutative
/// on the nose, so this basis is closed under multiplication followed by
/// truncation and rewriting.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedAlgebra {
    generators: Vec<GeneratorSpec>,
    rewrite: Option<RewriteRule>,
}

/// Graded dimensions per degree, starting at degree 0.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct HilbertSeries {
    /// `coeffs[l]` is the dimension in degree `l`.
    pub coeffs: Vec<usize>,
}

/// A degree-preserving substitution sending each generator to an element
/// of the algebra (in practice, a combination of same-degree generators).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Substitution {
    /// Image of each generator, in generator order.
    pub images: Vec<Element>,
}

impl TruncatedAlgebra {
    /// Builds an algebra with pure-power relations only.
    pub fn new(generators: Vec<GeneratorSpec>) -> Result<Self, AlgebraError> {
        for g in &generators {
            if g.degree < 1 {
                return Err(AlgebraError::BadParams(format!(
                    "generator `{}` must have degree at least 1",
                    g.name
                )));
            }
            if g.trunc < 1 {
                return Err(AlgebraError::BadParams(format!(
                    "generator `{}` must have truncation at least 1",
                    g.name
                )));
            }
        }
        for (i, g) in generators.iter().enumerate() {
            if generators[..i].iter().any(|h| h.name == g.name) {
                return Err(AlgebraError::NameClash(g.name.clone()));
            }
        }
        Ok(TruncatedAlgebra {
            generators,
            rewrite: None,
        })
    }

    /// Builds an algebra with one rewritten generator square.
    ///
    /// The target generator must truncate at exponent 2 (its basis powers
    /// are 1 and itself); the right-hand side must be homogeneous of the
    /// square's degree and must not contain the target at exponent above 1.
    pub fn with_rewrite(
        generators: Vec<GeneratorSpec>,
        rule: RewriteRule,
    ) -> Result<Self, AlgebraError> {
        let mut alg = TruncatedAlgebra::new(generators)?;
        if rule.target >= alg.arity() {
            return Err(AlgebraError::BadRewrite(format!(
                "target index {} out of range for {} generators",
                rule.target,
                alg.arity()
            )));
        }
        let target = &alg.generators[rule.target];
        if target.trunc != 2 {
            return Err(AlgebraError::BadRewrite(format!(
                "target `{}` must truncate at exponent 2, found {}",
                target.name, target.trunc
            )));
        }
        let square_degree = 2 * target.degree;
        for mono in &rule.rhs {
            if mono.exponents.len() != alg.arity() {
                return Err(AlgebraError::BadRewrite(format!(
                    "right-hand monomial has {} exponents, expected {}",
                    mono.exponents.len(),
                    alg.arity()
                )));
            }
            if mono.exponent(rule.target) > 1 {
                return Err(AlgebraError::BadRewrite(format!(
                    "right-hand monomial repeats `{}`; rewriting would not terminate",
                    target.name
                )));
            }
            let d = alg.degree_of(mono);
            if d != square_degree {
                return Err(AlgebraError::BadRewrite(format!(
                    "right-hand monomial has degree {d}, expected {square_degree}"
                )));
            }
        }
        // Canonicalize so duplicate right-hand terms cancel mod 2.
        let rhs = Element::from_monomials(rule.rhs).terms.clone();
        alg.rewrite = Some(RewriteRule {
            target: rule.target,
            rhs,
        });
        Ok(alg)
    }

    /// Number of generators.
    pub fn arity(&self) -> usize {
        self.generators.len()
    }

    /// The generator list.
    pub fn generators(&self) -> &[GeneratorSpec] {
        &self.generators
    }

    /// The rewrite rule, if any.
    pub fn rewrite(&self) -> Option<&RewriteRule> {
        self.rewrite.as_ref()
    }

    /// Total degree of a monomial.
    pub fn degree_of(&self, mono: &Monomial) -> usize {
        assert_eq!(mono.exponents.len(), self.arity(), "monomial arity mismatch");
        mono.exponents
            .iter()
            .zip(&self.generators)
            .map(|(&e, g)| e as usize * g.degree)
            .sum()
    }

    /// The unit element.
    pub fn unit_element(&self) -> Element {
        Element::from_monomial(Monomial::unit(self.arity()))
    }

    /// Generator `i` as an element.
    pub fn generator_element(&self, i: usize) -> Element {
        let mut exps = vec![0u32; self.arity()];
        exps[i] = 1;
        Element::from_monomial(Monomial::new(exps))
    }

    /// Top degree carrying a nonzero basis monomial: the sum over
    /// generators of degree·(trunc − 1).
    pub fn top_degree(&self) -> usize {
        self.generators
            .iter()
            .map(|g| g.degree * (g.trunc - 1))
            .sum()
    }

    /// All basis monomials of total degree `l`, ordered with higher
    /// earlier-generator exponents first (so for two degree-1 generators
    /// the degree-l list reads a^l, a^{l-1}b, …, b^l).
    pub fn basis_of_degree(&self, l: usize) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut exps = vec![0u32; self.arity()];
        self.enumerate_basis(0, l, &mut exps, &mut out);
        out
    }

    fn enumerate_basis(
        &self,
        idx: usize,
        remaining: usize,
        exps: &mut Vec<u32>,
        out: &mut Vec<Monomial>,
    ) {
        if idx == self.arity() {
            if remaining == 0 {
                out.push(Monomial::new(exps.clone()));
            }
            return;
        }
        let g = &self.generators[idx];
        let max_e = (g.trunc - 1).min(remaining / g.degree);
        for e in (0..=max_e).rev() {
            exps[idx] = e as u32;
            self.enumerate_basis(idx + 1, remaining - e * g.degree, exps, out);
        }
        exps[idx] = 0;
    }

    /// Graded dimensions up to `maxdeg`, in closed form: the product over
    /// generators of truncated geometric series 1 + q^d + … + q^{d(trunc−1)}.
    /// A rewrite target truncates at 2, so it contributes 1 + q^d — the
    /// rewrite changes products, never the basis.
    pub fn hilbert_series(&self, maxdeg: usize) -> HilbertSeries {
        let mut coeffs = vec![0usize; maxdeg + 1];
        coeffs[0] = 1;
        for g in &self.generators {
            let mut next = vec![0usize; maxdeg + 1];
            for power in 0..g.trunc {
                let shift = power * g.degree;
                if shift > maxdeg {
                    break;
                }
                for l in 0..=maxdeg - shift {
                    next[l + shift] += coeffs[l];
                }
            }
            coeffs = next;
        }
        HilbertSeries { coeffs }
    }

    /// Alternating sum of graded dimensions over the whole grading range.
    pub fn euler_characteristic(&self) -> i64 {
        self.hilbert_series(self.top_degree())
            .coeffs
            .iter()
            .enumerate()
            .map(|(l, &d)| if l % 2 == 0 { d as i64 } else { -(d as i64) })
            .sum()
    }

    /// Tensor product of two algebras: generator lists concatenate and
    /// graded dimensions convolve. At most one factor may carry a rewrite
    /// rule; names must stay distinct.
    pub fn kunneth_product(&self, other: &TruncatedAlgebra) -> Result<TruncatedAlgebra, AlgebraError> {
        let left_arity = self.arity();
        let right_arity = other.arity();
        let mut generators = self.generators.clone();
        generators.extend(other.generators.iter().cloned());
        let pad = |mono: &Monomial, left: bool| {
            let mut exps = vec![0u32; left_arity + right_arity];
            let offset = if left { 0 } else { left_arity };
            for (i, &e) in mono.exponents.iter().enumerate() {
                exps[offset + i] = e;
            }
            Monomial::new(exps)
        };
        let rule = match (&self.rewrite, &other.rewrite) {
            (Some(_), Some(_)) => {
                return Err(AlgebraError::BadRewrite(
                    "both factors carry a rewrite rule".to_string(),
                ))
            }
            (Some(r), None) => Some(RewriteRule {
                target: r.target,
                rhs: r.rhs.iter().map(|m| pad(m, true)).collect(),
            }),
            (None, Some(r)) => Some(RewriteRule {
                target: left_arity + r.target,
                rhs: r.rhs.iter().map(|m| pad(m, false)).collect(),
            }),
            (None, None) => None,
        };
        match rule {
            Some(rule) => TruncatedAlgebra::with_rewrite(generators, rule),
            None => TruncatedAlgebra::new(generators),
        }
    }

    /// Normal form of a raw monomial whose exponents may exceed the
    /// truncations: zero if any non-target exponent hits its truncation,
    /// otherwise repeated rewriting of the target square until every
    /// exponent is below its truncation.
    fn reduce_monomial(&self, mono: Monomial) -> Element {
        for (i, g) in self.generators.iter().enumerate() {
            let is_target = self.rewrite.as_ref().is_some_and(|r| r.target == i);
            if !is_target && mono.exponent(i) as usize >= g.trunc {
                return Element::zero();
            }
        }
        if let Some(rule) = &self.rewrite {
            let e = mono.exponent(rule.target);
            if e >= 2 {
                // w^e = w^{e-2} · (w² expansion); target exponent strictly
                // drops each pass, so this terminates.
                let mut base = mono.clone();
                base.exponents[rule.target] = e - 2;
                let mut acc = Element::zero();
                for rhs in &rule.rhs {
                    let mut raw = base.clone();
                    for (i, &re) in rhs.exponents.iter().enumerate() {
                        raw.exponents[i] += re;
                    }
                    acc.add_assign(&self.reduce_monomial(raw));
                }
                return acc;
            }
        }
        Element::from_monomial(mono)
    }

    /// Product of two formal sums: distribute, add exponents, truncate,
    /// rewrite, and cancel mod 2.
    pub fn multiply(&self, u: &Element, v: &Element) -> Element {
        let mut acc = Element::zero();
        for mu in u.terms() {
            for mv in v.terms() {
                let exps = mu
                    .exponents
                    .iter()
                    .zip(&mv.exponents)
                    .map(|(&a, &b)| a + b)
                    .collect();
                acc.add_assign(&self.reduce_monomial(Monomial::new(exps)));
            }
        }
        acc
    }

    /// `u` raised to the `k`-th power (`k = 0` gives the unit).
    pub fn power(&self, u: &Element, k: usize) -> Element {
        let mut acc = self.unit_element();
        for _ in 0..k {
            acc = self.multiply(&acc, u);
        }
        acc
    }

    /// Smallest `k ≥ 1` with `u^k = 0`.
    ///
    /// Requires `u` homogeneous of positive degree, so powers eventually
    /// exceed the top degree and the search terminates.
    pub fn nilpotency_order(&self, u: &Element) -> usize {
        if u.is_zero() {
            return 1;
        }
        let degree = self.degree_of(&u.terms()[0]);
        assert!(
            degree > 0 && u.terms().iter().all(|m| self.degree_of(m) == degree),
            "nilpotency order requires a homogeneous class of positive degree"
        );
        let mut acc = u.clone();
        let mut k = 1;
        while !acc.is_zero() {
            acc = self.multiply(&acc, u);
            k += 1;
        }
        k
    }

    /// Image of a formal sum under a generator substitution.
    pub fn apply_substitution(&self, s: &Substitution, u: &Element) -> Element {
        assert_eq!(s.images.len(), self.arity(), "substitution arity mismatch");
        let mut acc = Element::zero();
        for mono in u.terms() {
            let mut term = self.unit_element();
            for (i, &e) in mono.exponents.iter().enumerate() {
                if e > 0 {
                    term = self.multiply(&term, &self.power(&s.images[i], e as usize));
                }
            }
            acc.add_assign(&term);
        }
        acc
    }

    /// True when the substitution fixes every generator.
    pub fn is_identity(&self, s: &Substitution) -> bool {
        (0..self.arity()).all(|i| s.images[i] == self.generator_element(i))
    }

    /// All involutive degree-preserving substitutions on the span of two
    /// equal-degree generators that preserve the truncation relations.
    ///
    /// Candidates send each generator to one of a, b, a+b (the nonzero
    /// elements of the span), with distinct images for invertibility; a
    /// candidate survives when each image's trunc-th power vanishes and the
    /// substitution squares to the identity. The identity comes first and
    /// the order is deterministic.
    pub fn involutive_automorphism_candidates(&self) -> Result<Vec<Substitution>, AlgebraError> {
        if self.arity() != 2 || self.generators[0].degree != self.generators[1].degree {
            return Err(AlgebraError::NotApplicable);
        }
        let a = self.generator_element(0);
        let b = self.generator_element(1);
        let span = [a.clone(), b.clone(), a.add(&b)];
        let mut out = Vec::new();
        for (ia, ib) in [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)] {
            let sub = Substitution {
                images: vec![span[ia].clone(), span[ib].clone()],
            };
            let preserves_truncations = (0..2)
                .all(|g| self.power(&sub.images[g], self.generators[g].trunc).is_zero());
            if !preserves_truncations {
                continue;
            }
            let involutive = (0..2).all(|g| {
                self.apply_substitution(&sub, &sub.images[g]) == self.generator_element(g)
            });
            if involutive {
                out.push(sub);
            }
        }
        Ok(out)
    }

    /// Fixed-point obstruction for a substitution: true iff `c · T(c) ≠ 0`
    /// for the given middle-degree class, which certifies that `T` cannot
    /// be induced by a free involution.
    ///
    /// Requires the top degree to be even and one-dimensional and `c` to be
    /// homogeneous of half the top degree; the zero class never obstructs.
    pub fn fixed_point_obstruction(
        &self,
        t: &Substitution,
        c: &Element,
    ) -> Result<bool, AlgebraError> {
        let top = self.top_degree();
        if self.basis_of_degree(top).len() != 1 {
            return Err(AlgebraError::BadDegree(format!(
                "top degree {top} is not one-dimensional"
            )));
        }
        if top % 2 != 0 {
            return Err(AlgebraError::BadDegree(format!(
                "top degree {top} is odd, so there is no middle degree"
            )));
        }
        if c.is_zero() {
            return Ok(false);
        }
        let half = top / 2;
        if c.terms().iter().any(|m| self.degree_of(m) != half) {
            return Err(AlgebraError::BadDegree(format!(
                "class is not homogeneous of degree {half}"
            )));
        }
        let image = self.apply_substitution(t, c);
        Ok(!self.multiply(c, &image).is_zero())
    }

    /// Renders a monomial with generator names, e.g. `a^3 b`.
    pub fn format_monomial(&self, mono: &Monomial) -> String {
        let parts: Vec<String> = mono
            .exponents
            .iter()
            .zip(&self.generators)
            .filter(|(&e, _)| e > 0)
            .map(|(&e, g)| {
                if e == 1 {
                    g.name.clone()
                } else {
                    format!("{}^{}", g.name, e)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join(" ")
        }
    }

    /// Renders a formal sum with generator names, e.g. `a^2 + a b`.
    pub fn format_element(&self, u: &Element) -> String {
        if u.is_zero() {
            return "0".to_string();
        }
        // Canonical term order is ascending; display descending so sums
        // read like the degree-l basis listing (a^2 + a b, not a b + a^2).
        u.terms()
            .iter()
            .rev()
            .map(|m| self.format_monomial(m))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Builds the cohomology model of a space of the given kind: one or two
/// truncated generators named `a` (and `b`), of degree 1 (real) or 2
/// (complex), truncating at n+1 (and m+1). Product parameters normalize to
/// n ≤ m by swapping.
pub fn build_space_algebra(
    kind: SpaceKind,
    n: usize,
    m: Option<usize>,
) -> Result<TruncatedAlgebra, AlgebraError> {
    if n < 1 {
        return Err(AlgebraError::BadParams(format!(
            "n must be at least 1, found {n}"
        )));
    }
    let degree = kind.generator_degree();
    if kind.is_product() {
        let Some(m) = m else {
            return Err(AlgebraError::BadParams(format!(
                "kind `{kind}` requires m"
            )));
        };
        if m < 1 {
            return Err(AlgebraError::BadParams(format!(
                "m must be at least 1, found {m}"
            )));
        }
        let (n, m) = if n <= m { (n, m) } else { (m, n) };
        TruncatedAlgebra::new(vec![
            GeneratorSpec::new("a", degree, n + 1),
            GeneratorSpec::new("b", degree, m + 1),
        ])
    } else {
        if m.is_some() {
            return Err(AlgebraError::BadParams(format!(
                "kind `{kind}` takes no m"
            )));
        }
        TruncatedAlgebra::new(vec![GeneratorSpec::new("a", degree, n + 1)])
    }
}
