//! Dense bit-packed linear algebra over GF(2).
//!
//! Vectors and matrices pack 64 field elements per machine word, so row
//! operations in Gaussian elimination are word-parallel XORs. This module
//! carries every rank, kernel, and image computation in the engine; the
//! spectral layer reduces each differential to a [`GF2Matrix`] and reads
//! page dimensions off the results here.
//!
//! [`GF2Matrix::brute_force_rank`] is a deliberately naive oracle — it
//! enumerates every column combination and counts the span — kept around so
//! the elimination code can be cross-checked exhaustively on small inputs.

use thiserror::Error;

const WORD_BITS: usize = 64;

/// Errors from GF(2) linear algebra.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Gf2Error {
    /// An operand's length does not match the expected dimension.
    #[error("dimension mismatch: expected length {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    /// A vector presented as lying in a subspace does not. When a
    /// differential's image fails to land in the next kernel this signals
    /// d∘d ≠ 0, which is an internal bug, never a property of the input.
    #[error("image vector lies outside the span of the kernel vectors")]
    ImageNotInKernel,
    /// The exhaustive-enumeration oracle refuses inputs whose span it
    /// cannot afford to materialize.
    #[error("matrix has {cols} columns; exhaustive enumeration is limited to {max}")]
    TooLarge { cols: usize, max: usize },
}

fn words_for(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

/// A vector over GF(2), packed 64 entries per word.
///
/// Invariant: bits at positions `>= len` are zero, so whole-word equality
/// and hashing agree with entrywise equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GF2Vector {
    words: Vec<u64>,
    len: usize,
}

impl GF2Vector {
    /// The zero vector of the given dimension.
    pub fn zeros(len: usize) -> Self {
        GF2Vector {
            words: vec![0; words_for(len)],
            len,
        }
    }

    /// Builds a vector from explicit entries.
    pub fn from_bits(bits: &[bool]) -> Self {
        let mut v = GF2Vector::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Dimension of the vector.
    pub fn len(&self) -> usize {
        self.len
    }

    /// True when the dimension is zero.
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Entry at position `i`. Panics if `i >= len`.
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "index {i} out of range for length {}", self.len);
        self.words[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
    }

    /// Sets the entry at position `i`. Panics if `i >= len`.
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "index {i} out of range for length {}", self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    /// Adds `other` into `self` (addition over GF(2) is XOR).
    ///
    /// Panics on dimension mismatch: vector addition in mismatched
    /// dimensions is always a caller bug, never data-dependent.
    pub fn xor_assign(&mut self, other: &GF2Vector) {
        assert_eq!(self.len, other.len, "xor_assign length mismatch");
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w ^= o;
        }
    }

    /// True when every entry is zero.
    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Number of nonzero entries.
    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Inner product over GF(2): the parity of the overlap.
    pub fn dot(&self, other: &GF2Vector) -> bool {
        assert_eq!(self.len, other.len, "dot length mismatch");
        let mut acc = 0u64;
        for (w, o) in self.words.iter().zip(&other.words) {
            acc ^= w & o;
        }
        acc.count_ones() % 2 == 1
    }
}

/// A dense matrix over GF(2), rows packed 64 entries per word.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GF2Matrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    data: Vec<u64>,
}

impl GF2Matrix {
    /// The zero matrix of the given shape. Shapes with zero rows or zero
    /// columns are legal and behave as rank 0.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words_per_row = words_for(cols);
        GF2Matrix {
            rows,
            cols,
            words_per_row,
            data: vec![0; rows * words_per_row],
        }
    }

    /// The identity matrix of size `n`.
    pub fn identity(n: usize) -> Self {
        let mut m = GF2Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Stacks row vectors into a matrix. Every row must have length `cols`
    /// (passed explicitly so an empty stack still has a well-defined shape).
    pub fn from_rows(cols: usize, rows: &[GF2Vector]) -> Result<Self, Gf2Error> {
        let mut m = GF2Matrix::zeros(rows.len(), cols);
        for (r, v) in rows.iter().enumerate() {
            if v.len() != cols {
                return Err(Gf2Error::DimensionMismatch {
                    expected: cols,
                    found: v.len(),
                });
            }
            let base = r * m.words_per_row;
            m.data[base..base + m.words_per_row].copy_from_slice(&v.words);
        }
        Ok(m)
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry at `(r, c)`.
    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of range");
        self.data[r * self.words_per_row + c / WORD_BITS] >> (c % WORD_BITS) & 1 == 1
    }

    /// Sets the entry at `(r, c)`.
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of range");
        let mask = 1u64 << (c % WORD_BITS);
        let word = &mut self.data[r * self.words_per_row + c / WORD_BITS];
        if value {
            *word |= mask;
        } else {
            *word &= !mask;
        }
    }

    /// Copy of row `r` as a vector of length `cols`.
    pub fn row(&self, r: usize) -> GF2Vector {
        let base = r * self.words_per_row;
        GF2Vector {
            words: self.data[base..base + self.words_per_row].to_vec(),
            len: self.cols,
        }
    }

    /// Copy of column `c` as a vector of length `rows`.
    pub fn column(&self, c: usize) -> GF2Vector {
        let mut v = GF2Vector::zeros(self.rows);
        for r in 0..self.rows {
            if self.get(r, c) {
                v.set(r, true);
            }
        }
        v
    }

    /// Matrix-vector product; `v` must have length `cols`.
    pub fn mat_vec(&self, v: &GF2Vector) -> Result<GF2Vector, Gf2Error> {
        if v.len() != self.cols {
            return Err(Gf2Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        let mut out = GF2Vector::zeros(self.rows);
        for r in 0..self.rows {
            let base = r * self.words_per_row;
            let mut acc = 0u64;
            for (w, vw) in self.data[base..base + self.words_per_row].iter().zip(&v.words) {
                acc ^= w & vw;
            }
            if acc.count_ones() % 2 == 1 {
                out.set(r, true);
            }
        }
        Ok(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for w in 0..self.words_per_row {
            self.data.swap(a * self.words_per_row + w, b * self.words_per_row + w);
        }
    }

    /// XORs row `src` into row `dst` word-parallel.
    fn xor_row_into(&mut self, src: usize, dst: usize) {
        let s = src * self.words_per_row;
        let d = dst * self.words_per_row;
        for w in 0..self.words_per_row {
            let x = self.data[s + w];
            self.data[d + w] ^= x;
        }
    }

    /// In-place reduction to reduced row echelon form; returns the pivot
    /// positions as `(row, col)` pairs in column order.
    fn echelonize(&mut self) -> Vec<(usize, usize)> {
        let mut pivots = Vec::new();
        let mut next_row = 0;
        for col in 0..self.cols {
            if next_row == self.rows {
                break;
            }
            let Some(r) = (next_row..self.rows).find(|&r| self.get(r, col)) else {
                continue;
            };
            self.swap_rows(r, next_row);
            for other in 0..self.rows {
                if other != next_row && self.get(other, col) {
                    self.xor_row_into(next_row, other);
                }
            }
            pivots.push((next_row, col));
            next_row += 1;
        }
        pivots
    }

    /// Row rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        self.clone().echelonize().len()
    }

    /// A basis of the null space `{v : M v = 0}`.
    ///
    /// Contains exactly `cols − rank` vectors: one per free column, with a 1
    /// in the free position and the matching pivot-column corrections.
    pub fn kernel_basis(&self) -> Vec<GF2Vector> {
        let mut rref = self.clone();
        let pivots = rref.echelonize();
        let mut is_pivot = vec![false; self.cols];
        for &(_, c) in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::with_capacity(self.cols - pivots.len());
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = GF2Vector::zeros(self.cols);
            v.set(free, true);
            for &(r, c) in &pivots {
                if rref.get(r, free) {
                    v.set(c, true);
                }
            }
            basis.push(v);
        }
        basis
    }

    /// A basis of the column space: the columns of the original matrix at
    /// the pivot positions of its echelon form. Contains `rank` vectors.
    pub fn image_basis(&self) -> Vec<GF2Vector> {
        let pivots = self.clone().echelonize();
        pivots.iter().map(|&(_, c)| self.column(c)).collect()
    }

    /// Rank by definition: enumerate all `2^cols` column combinations and
    /// count the distinct sums; the span of a rank-r space has `2^r`
    /// elements. Only for cross-checking — refuses more than 16 columns.
    pub fn brute_force_rank(&self) -> Result<usize, Gf2Error> {
        const MAX_COLS: usize = 16;
        if self.cols > MAX_COLS {
            return Err(Gf2Error::TooLarge {
                cols: self.cols,
                max: MAX_COLS,
            });
        }
        let columns: Vec<GF2Vector> = (0..self.cols).map(|c| self.column(c)).collect();
        let mut span = std::collections::HashSet::new();
        for mask in 0u32..1 << self.cols {
            let mut sum = GF2Vector::zeros(self.rows);
            for (j, col) in columns.iter().enumerate() {
                if mask >> j & 1 == 1 {
                    sum.xor_assign(col);
                }
            }
            span.insert(sum);
        }
        debug_assert!(span.len().is_power_of_two());
        Ok(span.len().ilog2() as usize)
    }
}

/// Dimension of the quotient span(kernel) / span(image).
///
/// In the spectral sequence this is the surviving dimension of a bidegree
/// with both an incoming and an outgoing differential. The containment
/// span(image) ⊆ span(kernel) is checked, not assumed: a violation means a
/// composite differential failed to vanish somewhere upstream.
pub fn subquotient_dim(kernel: &[GF2Vector], image: &[GF2Vector]) -> Result<usize, Gf2Error> {
    let len = match kernel.first().or_else(|| image.first()) {
        Some(v) => v.len(),
        None => return Ok(0),
    };
    let mut kernel_stack = GF2Matrix::from_rows(len, kernel)?;
    let pivots = kernel_stack.echelonize();
    for v in image {
        if v.len() != len {
            return Err(Gf2Error::DimensionMismatch {
                expected: len,
                found: v.len(),
            });
        }
        let mut residue = v.clone();
        for &(r, c) in &pivots {
            if residue.get(c) {
                residue.xor_assign(&kernel_stack.row(r));
            }
        }
        if !residue.is_zero() {
            return Err(Gf2Error::ImageNotInKernel);
        }
    }
    let image_rank = GF2Matrix::from_rows(len, image)?.rank();
    Ok(pivots.len() - image_rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn matrix_from_bits(rows: &[&[u8]]) -> GF2Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = GF2Matrix::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            for (c, &bit) in row.iter().enumerate() {
                m.set(r, c, bit == 1);
            }
        }
        m
    }

    fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> GF2Matrix {
        let mut m = GF2Matrix::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, rng.gen());
            }
        }
        m
    }

    #[test]
    fn rank_of_empty_matrix_is_zero() {
        assert_eq!(GF2Matrix::zeros(0, 0).rank(), 0);
        assert_eq!(GF2Matrix::zeros(0, 5).rank(), 0);
        assert_eq!(GF2Matrix::zeros(5, 0).rank(), 0);
    }

    #[test]
    fn rank_of_identity_is_size() {
        assert_eq!(GF2Matrix::identity(3).rank(), 3);
    }

    #[test]
    fn rank_of_repeated_column() {
        // Both rows are (1); the single column is nonzero, so rank 1.
        let m = matrix_from_bits(&[&[1], &[1]]);
        assert_eq!(m.rank(), 1);
        assert_eq!(m.brute_force_rank().unwrap(), 1);
    }

    #[test]
    fn kernel_of_zero_matrix_is_everything() {
        let basis = GF2Matrix::zeros(2, 2).kernel_basis();
        assert_eq!(basis.len(), 2);
    }

    #[test]
    fn kernel_of_identity_is_trivial() {
        assert!(GF2Matrix::identity(2).kernel_basis().is_empty());
    }

    #[test]
    fn kernel_of_sum_functional() {
        // (1 1) kills exactly the vectors of even weight: {0, (1,1)}.
        let m = matrix_from_bits(&[&[1, 1]]);
        let basis = m.kernel_basis();
        assert_eq!(basis.len(), 1);
        assert_eq!(basis[0], GF2Vector::from_bits(&[true, true]));
    }

    #[test]
    fn image_of_zero_matrix_is_empty() {
        assert!(GF2Matrix::zeros(3, 2).image_basis().is_empty());
    }

    #[test]
    fn image_of_identity_is_full() {
        let basis = GF2Matrix::identity(2).image_basis();
        assert_eq!(basis.len(), 2);
        assert_eq!(GF2Matrix::from_rows(2, &basis).unwrap().rank(), 2);
    }

    #[test]
    fn image_of_rank_one_matrix() {
        let m = matrix_from_bits(&[&[1, 1], &[0, 0]]);
        let basis = m.image_basis();
        assert_eq!(basis.len(), 1);
        assert_eq!(basis[0], GF2Vector::from_bits(&[true, false]));
    }

    #[test]
    fn subquotient_of_full_image_is_zero() {
        let kernel = GF2Matrix::identity(3).image_basis();
        let image = kernel.clone();
        assert_eq!(subquotient_dim(&kernel, &image).unwrap(), 0);
    }

    #[test]
    fn subquotient_with_empty_image() {
        let kernel = vec![
            GF2Vector::from_bits(&[true, false]),
            GF2Vector::from_bits(&[false, true]),
        ];
        assert_eq!(subquotient_dim(&kernel, &[]).unwrap(), 2);
    }

    #[test]
    fn subquotient_of_diagonal_in_plane() {
        let kernel = vec![
            GF2Vector::from_bits(&[true, false]),
            GF2Vector::from_bits(&[false, true]),
        ];
        let image = vec![GF2Vector::from_bits(&[true, true])];
        assert_eq!(subquotient_dim(&kernel, &image).unwrap(), 1);
    }

    #[test]
    fn subquotient_rejects_escaping_image() {
        let kernel = vec![GF2Vector::from_bits(&[true, false, false])];
        let image = vec![GF2Vector::from_bits(&[false, true, false])];
        assert_eq!(
            subquotient_dim(&kernel, &image),
            Err(Gf2Error::ImageNotInKernel)
        );
    }

    #[test]
    fn subquotient_of_empty_spaces_is_zero() {
        assert_eq!(subquotient_dim(&[], &[]).unwrap(), 0);
    }

    #[test]
    fn brute_force_rank_matches_examples() {
        assert_eq!(GF2Matrix::zeros(0, 0).brute_force_rank().unwrap(), 0);
        assert_eq!(GF2Matrix::identity(3).brute_force_rank().unwrap(), 3);
    }

    #[test]
    fn brute_force_rank_refuses_wide_matrices() {
        assert_eq!(
            GF2Matrix::zeros(1, 17).brute_force_rank(),
            Err(Gf2Error::TooLarge { cols: 17, max: 16 })
        );
    }

    #[test]
    fn mat_vec_checks_dimension() {
        let m = GF2Matrix::identity(2);
        let v = GF2Vector::zeros(3);
        assert_eq!(
            m.mat_vec(&v),
            Err(Gf2Error::DimensionMismatch {
                expected: 2,
                found: 3
            })
        );
    }

    #[test]
    fn packing_is_correct_across_word_boundaries() {
        // A 1×130 matrix exercises three words per row.
        let mut m = GF2Matrix::zeros(1, 130);
        for c in [0, 63, 64, 127, 128, 129] {
            m.set(0, c, true);
        }
        let row = m.row(0);
        assert_eq!(row.count_ones(), 6);
        for c in [0, 63, 64, 127, 128, 129] {
            assert!(row.get(c));
        }
        assert!(!row.get(1));
        assert_eq!(m.rank(), 1);
        assert_eq!(m.kernel_basis().len(), 129);
    }

    #[test]
    fn rank_matches_brute_force_on_random_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
        for _ in 0..200 {
            let rows = rng.gen_range(0..=10);
            let cols = rng.gen_range(0..=12);
            let m = random_matrix(&mut rng, rows, cols);
            assert_eq!(m.rank(), m.brute_force_rank().unwrap());
        }
    }

    #[test]
    fn rank_nullity_holds_on_random_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
        for _ in 0..200 {
            let rows = rng.gen_range(0..=12);
            let cols = rng.gen_range(0..=20);
            let m = random_matrix(&mut rng, rows, cols);
            assert_eq!(m.rank() + m.kernel_basis().len(), cols);
        }
    }

    #[test]
    fn kernel_vectors_are_annihilated_and_independent() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
        for _ in 0..200 {
            let rows = rng.gen_range(0..=10);
            let cols = rng.gen_range(1..=14);
            let m = random_matrix(&mut rng, rows, cols);
            let basis = m.kernel_basis();
            for v in &basis {
                assert!(m.mat_vec(v).unwrap().is_zero());
            }
            let stacked = GF2Matrix::from_rows(cols, &basis).unwrap();
            assert_eq!(stacked.rank(), basis.len());
        }
    }

    #[test]
    fn image_vectors_are_independent_and_span_the_columns() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
        for _ in 0..200 {
            let rows = rng.gen_range(1..=10);
            let cols = rng.gen_range(0..=12);
            let m = random_matrix(&mut rng, rows, cols);
            let basis = m.image_basis();
            assert_eq!(basis.len(), m.rank());
            let stacked = GF2Matrix::from_rows(rows, &basis).unwrap();
            assert_eq!(stacked.rank(), basis.len());
            // Every column reduces to zero against the image basis, i.e.
            // the basis really spans the column space.
            for c in 0..cols {
                assert!(subquotient_dim(&basis, &[m.column(c)]).is_ok());
            }
        }
    }

    #[test]
    fn subquotient_matches_rank_difference_on_random_subspaces() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
        for _ in 0..200 {
            let cols = rng.gen_range(1..=12);
            let rows = rng.gen_range(0..=8);
            let m = random_matrix(&mut rng, rows, cols);
            let kernel = m.kernel_basis();
            // Random combinations of kernel vectors form a subspace of it.
            let mut image = Vec::new();
            for _ in 0..rng.gen_range(0..=4) {
                let mut v = GF2Vector::zeros(cols);
                for k in &kernel {
                    if rng.gen() {
                        v.xor_assign(k);
                    }
                }
                image.push(v);
            }
            let expected = GF2Matrix::from_rows(cols, &kernel).unwrap().rank()
                - GF2Matrix::from_rows(cols, &image).unwrap().rank();
            assert_eq!(subquotient_dim(&kernel, &image).unwrap(), expected);
        }
    }
}
