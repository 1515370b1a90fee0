//! F2F4-additive codes: F2-subspaces of F2^alpha x F4^beta given by
//! independent generator rows.
//!
//! Binary codes are the `beta == 0` case and additive codes over GF(4) the
//! `alpha == 0` case; both use the same [`AdditiveCode`] type.

mod standard;

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::{BinaryMatrix, BitVector, MixedWord, F4};

pub use standard::{compute_type, type_report, CodeType, StandardForm, TypeReport};

/// Default bound on the number of words any brute-force pass may visit.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1 << 24;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AdditiveCode {
    alpha: usize,
    beta: usize,
    rows: Vec<MixedWord>,
}

impl AdditiveCode {
    /// Builds a code from possibly dependent rows. Dependent rows are dropped,
    /// keeping the earliest independent ones in input order.
    pub fn from_rows(alpha: usize, beta: usize, rows: Vec<MixedWord>) -> Result<Self> {
        for (row, w) in rows.iter().enumerate() {
            if w.shape() != (alpha, beta) {
                return Err(Error::ShapeMismatch {
                    row,
                    alpha,
                    beta,
                    found_alpha: w.alpha(),
                    found_beta: w.beta(),
                });
            }
        }
        let mut kept = Vec::with_capacity(rows.len());
        let mut basis = Echelon::new(alpha + 2 * beta);
        for w in rows {
            if basis.insert(w.linearize()) {
                kept.push(w);
            }
        }
        Ok(AdditiveCode {
            alpha,
            beta,
            rows: kept,
        })
    }

    pub fn zero(alpha: usize, beta: usize) -> Self {
        AdditiveCode {
            alpha,
            beta,
            rows: Vec::new(),
        }
    }

    /// The whole space F2^alpha x F4^beta.
    pub fn ambient(alpha: usize, beta: usize) -> Self {
        let n = alpha + 2 * beta;
        let rows = (0..n)
            .map(|i| MixedWord::delinearize(alpha, beta, &BitVector::unit(n, i)))
            .collect();
        AdditiveCode { alpha, beta, rows }
    }

    /// Builds a code from a linearized basis. Rows must be independent.
    pub(crate) fn from_linear_basis(alpha: usize, beta: usize, basis: &[BitVector]) -> Self {
        let rows = basis
            .iter()
            .map(|v| MixedWord::delinearize(alpha, beta, v))
            .collect();
        let code = AdditiveCode { alpha, beta, rows };
        debug_assert_eq!(code.linear_matrix().rank(), code.dimension());
        code
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn beta(&self) -> usize {
        self.beta
    }

    /// Length n = alpha + beta.
    pub fn length(&self) -> usize {
        self.alpha + self.beta
    }

    /// Dimension of the linearized ambient space, alpha + 2 beta.
    pub fn linear_length(&self) -> usize {
        self.alpha + 2 * self.beta
    }

    pub fn rows(&self) -> &[MixedWord] {
        &self.rows
    }

    /// F2-dimension k; the code has 2^k words.
    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    /// |C| = 2^k, saturating at `u128::MAX`.
    pub fn cardinality(&self) -> u128 {
        1u128
            .checked_shl(self.dimension() as u32)
            .unwrap_or(u128::MAX)
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// Generator rows linearized as `(a | c1 | cw)`.
    pub fn linear_matrix(&self) -> BinaryMatrix {
        BinaryMatrix::from_rows(
            self.linear_length(),
            self.rows.iter().map(MixedWord::linearize).collect(),
        )
    }

    /// Binary parts of the generators, `G_X` (k x alpha). Rows may be dependent.
    pub fn binary_generator(&self) -> BinaryMatrix {
        BinaryMatrix::from_rows(
            self.alpha,
            self.rows.iter().map(|r| r.binary_part().clone()).collect(),
        )
    }

    /// Quaternary parts of the generators, `G_Y` (k x beta).
    pub fn quaternary_generator(&self) -> Vec<Vec<F4>> {
        self.rows.iter().map(MixedWord::quaternary_part).collect()
    }

    /// The F2-combination of generators selected by `coeffs`.
    pub fn combination(&self, coeffs: &BitVector) -> MixedWord {
        assert_eq!(coeffs.len(), self.dimension());
        let mut w = MixedWord::zero(self.alpha, self.beta);
        for i in coeffs.ones() {
            w += &self.rows[i];
        }
        w
    }

    pub fn contains(&self, word: &MixedWord) -> bool {
        word.shape() == (self.alpha, self.beta)
            && self.linear_matrix().row_space_contains(&word.linearize())
    }

    /// Equality as sets of words.
    pub fn same_code(&self, other: &AdditiveCode) -> bool {
        (self.alpha, self.beta) == (other.alpha, other.beta)
            && self.dimension() == other.dimension()
            && other.rows.iter().all(|r| self.contains(r))
    }

    pub fn is_subcode_of(&self, other: &AdditiveCode) -> bool {
        (self.alpha, self.beta) == (other.alpha, other.beta)
            && self.rows.iter().all(|r| other.contains(r))
    }

    /// Every codeword, starting with zero, in Gray-code order.
    pub fn codewords(&self, cap: u64) -> Result<Codewords<'_>> {
        check_cap(self.dimension(), cap)?;
        Ok(Codewords {
            code: self,
            current: MixedWord::zero(self.alpha, self.beta),
            index: 0,
            total: 1u64 << self.dimension(),
        })
    }

    /// Applies coordinate permutations within the X block and the Y block.
    pub fn permuted(&self, perm_x: &[usize], perm_y: &[usize]) -> AdditiveCode {
        AdditiveCode {
            alpha: self.alpha,
            beta: self.beta,
            rows: self
                .rows
                .iter()
                .map(|r| r.permuted(perm_x, perm_y))
                .collect(),
        }
    }

    /// C_X: projection onto the binary coordinates, shape (alpha, 0).
    pub fn puncture_x(&self) -> AdditiveCode {
        let rows = self.rows.iter().map(MixedWord::project_x).collect();
        AdditiveCode::from_rows(self.alpha, 0, rows).expect("projected shapes agree")
    }

    /// C_Y: projection onto the quaternary coordinates, shape (0, beta).
    pub fn puncture_y(&self) -> AdditiveCode {
        let rows = self.rows.iter().map(MixedWord::project_y).collect();
        AdditiveCode::from_rows(0, self.beta, rows).expect("projected shapes agree")
    }

    /// Subcode of words on which the F2-linear map `f` vanishes.
    pub(crate) fn subcode_where(&self, f: impl Fn(&MixedWord) -> BitVector) -> AdditiveCode {
        let images: Vec<BitVector> = self.rows.iter().map(&f).collect();
        let width = images.first().map_or(0, BitVector::len);
        // Coefficient vectors lambda with sum lambda_i f(row_i) = 0.
        let lambdas = BinaryMatrix::from_rows(width, images).transpose().kernel();
        let rows = lambdas.iter().map(|l| self.combination(l)).collect();
        AdditiveCode {
            alpha: self.alpha,
            beta: self.beta,
            rows,
        }
    }

    /// C_b: the codewords whose quaternary coordinates all lie in {0, 1}.
    pub fn binary_subcode(&self) -> AdditiveCode {
        self.subcode_where(|w| w.cw_plane().clone())
    }

    /// Codewords with zero binary part.
    pub fn zero_x_subcode(&self) -> AdditiveCode {
        self.subcode_where(|w| w.binary_part().clone())
    }

    /// Codewords with zero quaternary part.
    pub fn zero_y_subcode(&self) -> AdditiveCode {
        self.subcode_where(|w| BitVector::concat(&[w.c1_plane(), w.cw_plane()]))
    }

    /// True iff every nonzero codeword has a nonzero binary part.
    pub fn binary_part_always_nonzero(&self) -> bool {
        self.puncture_x().dimension() == self.dimension()
    }

    /// True iff every nonzero codeword has a nonzero quaternary part.
    pub fn quaternary_part_always_nonzero(&self) -> bool {
        self.puncture_y().dimension() == self.dimension()
    }

    /// C = C_X x C_Y, decided by |C| = |C_X| |C_Y|.
    pub fn is_separable(&self) -> bool {
        self.dimension() == self.puncture_x().dimension() + self.puncture_y().dimension()
    }

    /// Closed under multiplication by w (only possible when `alpha == 0`,
    /// or when the code is the zero code).
    pub fn is_f4_linear(&self) -> bool {
        if self.is_zero() {
            return true;
        }
        self.alpha == 0 && self.rows.iter().all(|r| self.contains(&r.omega_times_y()))
    }

    /// Product code C_X x C_Y from a binary and a quaternary code.
    pub fn product(cx: &AdditiveCode, cy: &AdditiveCode) -> Result<AdditiveCode> {
        if cx.beta != 0 || cy.alpha != 0 {
            return Err(Error::Inapplicable(
                "product needs a binary first factor and a quaternary second factor",
            ));
        }
        let (alpha, beta) = (cx.alpha, cy.beta);
        let mut rows = Vec::with_capacity(cx.dimension() + cy.dimension());
        for r in &cx.rows {
            rows.push(MixedWord::from_planes(
                r.binary_part().clone(),
                BitVector::zeros(beta),
                BitVector::zeros(beta),
            ));
        }
        for r in &cy.rows {
            rows.push(MixedWord::from_planes(
                BitVector::zeros(alpha),
                r.c1_plane().clone(),
                r.cw_plane().clone(),
            ));
        }
        AdditiveCode::from_rows(alpha, beta, rows)
    }

    pub fn standard_form(&self) -> StandardForm {
        StandardForm::of(self)
    }

    pub fn code_type(&self) -> CodeType {
        self.standard_form().code_type()
    }
}

impl fmt::Debug for AdditiveCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AdditiveCode({},{}) ", self.alpha, self.beta)?;
        f.debug_list().entries(&self.rows).finish()
    }
}

pub(crate) fn check_cap(dimension: usize, cap: u64) -> Result<()> {
    let required = 1u128.checked_shl(dimension as u32).unwrap_or(u128::MAX);
    if dimension >= 64 || required > cap as u128 {
        return Err(Error::CapExceeded { required, cap });
    }
    Ok(())
}

/// Iterator over all 2^k codewords. Consecutive words differ by one
/// generator, so each step costs a single addition.
pub struct Codewords<'a> {
    code: &'a AdditiveCode,
    current: MixedWord,
    index: u64,
    total: u64,
}

impl Iterator for Codewords<'_> {
    type Item = MixedWord;

    fn next(&mut self) -> Option<MixedWord> {
        if self.index >= self.total {
            return None;
        }
        if self.index > 0 {
            let flip = self.index.trailing_zeros() as usize;
            self.current += &self.code.rows[flip];
        }
        self.index += 1;
        Some(self.current.clone())
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.index) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for Codewords<'_> {}

/// Incremental row echelon basis used to test independence.
#[derive(Clone, Debug)]
pub(crate) struct Echelon {
    width: usize,
    rows: Vec<(usize, BitVector)>,
}

impl Echelon {
    pub(crate) fn new(width: usize) -> Self {
        Echelon {
            width,
            rows: Vec::new(),
        }
    }

    pub(crate) fn reduce(&self, v: &BitVector) -> BitVector {
        let mut r = v.clone();
        for (pivot, row) in &self.rows {
            if r.get(*pivot) {
                r.xor_assign(row);
            }
        }
        r
    }

    pub(crate) fn contains(&self, v: &BitVector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` if independent; returns whether it was added.
    pub(crate) fn insert(&mut self, v: BitVector) -> bool {
        assert_eq!(v.len(), self.width);
        let r = self.reduce(&v);
        match r.first_one() {
            Some(pivot) => {
                self.rows.push((pivot, r));
                true
            }
            None => false,
        }
    }
}
