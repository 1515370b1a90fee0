//! Exact arithmetic over GF(2) and GF(4): scalars, packed vectors, mixed
//! words of F2^alpha x F4^beta, and dense matrices.

mod bits;
mod f4;
mod matrix;
mod word;

pub use bits::BitVector;
pub use f4::F4;
pub use matrix::{BinaryMatrix, F4Matrix};
pub use word::MixedWord;

/// Raw coordinate expansion of a mixed word onto F2^(alpha + 2 beta).
pub fn linearize_word(w: &MixedWord) -> BitVector {
    w.linearize()
}

/// GF(2) row rank.
pub fn rank_f2(m: &BinaryMatrix) -> usize {
    m.rank()
}

/// Basis of the right kernel of `m` over GF(2).
pub fn kernel_f2(m: &BinaryMatrix) -> alloc::vec::Vec<BitVector> {
    m.kernel()
}

/// Multiplication in GF(4).
pub fn f4_mul(a: F4, b: F4) -> F4 {
    a * b
}
