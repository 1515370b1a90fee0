use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign};

use super::{BitVector, F4};

/// An element of F2^alpha x F4^beta: `alpha` binary coordinates followed by
/// `beta` quaternary coordinates.
///
/// The quaternary block is stored as two bit planes: quaternary coordinate
/// `j` equals `c1[j] + w * cw[j]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MixedWord {
    binary: BitVector,
    c1: BitVector,
    cw: BitVector,
}

impl MixedWord {
    pub fn zero(alpha: usize, beta: usize) -> Self {
        MixedWord {
            binary: BitVector::zeros(alpha),
            c1: BitVector::zeros(beta),
            cw: BitVector::zeros(beta),
        }
    }

    pub fn new(binary: &[u8], quaternary: &[F4]) -> Self {
        Self::from_parts(BitVector::from_bits(binary), quaternary.iter().copied())
    }

    pub fn from_parts<I: IntoIterator<Item = F4>>(binary: BitVector, quaternary: I) -> Self {
        let (c1, cw): (Vec<bool>, Vec<bool>) =
            quaternary.into_iter().map(|z| (z.c1(), z.cw())).unzip();
        MixedWord {
            binary,
            c1: BitVector::from_bools(c1),
            cw: BitVector::from_bools(cw),
        }
    }

    pub fn from_planes(binary: BitVector, c1: BitVector, cw: BitVector) -> Self {
        assert_eq!(c1.len(), cw.len(), "quaternary planes differ in length");
        MixedWord { binary, c1, cw }
    }

    pub fn alpha(&self) -> usize {
        self.binary.len()
    }

    pub fn beta(&self) -> usize {
        self.c1.len()
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.alpha(), self.beta())
    }

    pub fn binary_part(&self) -> &BitVector {
        &self.binary
    }

    /// Coefficients of 1 in the quaternary block.
    pub fn c1_plane(&self) -> &BitVector {
        &self.c1
    }

    /// Coefficients of w in the quaternary block.
    pub fn cw_plane(&self) -> &BitVector {
        &self.cw
    }

    pub fn binary(&self, i: usize) -> bool {
        self.binary.get(i)
    }

    pub fn quaternary(&self, j: usize) -> F4 {
        F4::from_bits(self.c1.get(j), self.cw.get(j))
    }

    pub fn quaternary_part(&self) -> Vec<F4> {
        (0..self.beta()).map(|j| self.quaternary(j)).collect()
    }

    pub fn set_binary(&mut self, i: usize, bit: bool) {
        self.binary.set(i, bit);
    }

    pub fn set_quaternary(&mut self, j: usize, z: F4) {
        self.c1.set(j, z.c1());
        self.cw.set(j, z.cw());
    }

    pub fn is_zero(&self) -> bool {
        self.binary.is_zero() && self.c1.is_zero() && self.cw.is_zero()
    }

    /// True when every quaternary coordinate lies in {0, 1}.
    pub fn is_binary_word(&self) -> bool {
        self.cw.is_zero()
    }

    /// The word restricted to its binary block, as a word of shape (alpha, 0).
    pub fn project_x(&self) -> MixedWord {
        MixedWord::from_planes(
            self.binary.clone(),
            BitVector::zeros(0),
            BitVector::zeros(0),
        )
    }

    /// The word restricted to its quaternary block, as a word of shape (0, beta).
    pub fn project_y(&self) -> MixedWord {
        MixedWord::from_planes(BitVector::zeros(0), self.c1.clone(), self.cw.clone())
    }

    /// Multiplies every quaternary coordinate by w. Only meaningful as a
    /// field operation when `alpha == 0`.
    pub fn omega_times_y(&self) -> MixedWord {
        // w * (c1 + w cw) = cw + w (c1 + cw)
        MixedWord {
            binary: self.binary.clone(),
            c1: self.cw.clone(),
            cw: self.c1.xor(&self.cw),
        }
    }

    /// Raw coordinate expansion `(a | c1 | cw)` onto F2^(alpha + 2 beta).
    ///
    /// This is the F2-linear bijection used for linear algebra; it is not the
    /// map W (see [`crate::wmap::w_map_word`]).
    pub fn linearize(&self) -> BitVector {
        BitVector::concat(&[&self.binary, &self.c1, &self.cw])
    }

    /// Inverse of [`MixedWord::linearize`].
    pub fn delinearize(alpha: usize, beta: usize, v: &BitVector) -> MixedWord {
        assert_eq!(v.len(), alpha + 2 * beta, "linearized length mismatch");
        MixedWord {
            binary: v.slice(0, alpha),
            c1: v.slice(alpha, beta),
            cw: v.slice(alpha + beta, beta),
        }
    }

    /// Permutes binary coordinates by `perm_x` and quaternary coordinates by
    /// `perm_y` (entry `i` of the result is entry `perm[i]` of `self`).
    pub fn permuted(&self, perm_x: &[usize], perm_y: &[usize]) -> MixedWord {
        MixedWord {
            binary: self.binary.permuted(perm_x),
            c1: self.c1.permuted(perm_y),
            cw: self.cw.permuted(perm_y),
        }
    }
}

impl AddAssign<&MixedWord> for MixedWord {
    fn add_assign(&mut self, rhs: &MixedWord) {
        assert_eq!(self.shape(), rhs.shape(), "shape mismatch in addition");
        self.binary.xor_assign(&rhs.binary);
        self.c1.xor_assign(&rhs.c1);
        self.cw.xor_assign(&rhs.cw);
    }
}

impl Add<&MixedWord> for &MixedWord {
    type Output = MixedWord;
    fn add(self, rhs: &MixedWord) -> MixedWord {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

/// Renders as `(1,1|w,1)`; `w` is w and `W` is w^2.
impl fmt::Display for MixedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for i in 0..self.alpha() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(if self.binary(i) { "1" } else { "0" })?;
        }
        f.write_str("|")?;
        for j in 0..self.beta() {
            if j > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", self.quaternary(j))?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for MixedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
