use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

const WORD: usize = 64;

/// Fixed-length vector over GF(2), packed into `u64` words.
///
/// Bits past `len` in the last word are always zero, so derived equality and
/// hashing agree with equality of the logical bit sequence.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        BitVector {
            len,
            words: alloc::vec![0; len.div_ceil(WORD)],
        }
    }

    /// Unit vector `e_index`.
    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(index, true);
        v
    }

    pub fn from_bools<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let mut words = Vec::new();
        let mut len = 0;
        for bit in bits {
            if len % WORD == 0 {
                words.push(0);
            }
            if bit {
                words[len / WORD] |= 1 << (len % WORD);
            }
            len += 1;
        }
        BitVector { len, words }
    }

    /// Convenience constructor from 0/1 integers; any nonzero entry is a one.
    pub fn from_bits(bits: &[u8]) -> Self {
        Self::from_bools(bits.iter().map(|&b| b != 0))
    }

    /// Builds a vector of length `len` from the low bits of `value`
    /// (bit `i` of `value` becomes entry `i`). `len` must be at most 64.
    pub fn from_u64(len: usize, value: u64) -> Self {
        assert!(len <= WORD);
        let mut v = Self::zeros(len);
        if len > 0 {
            let mask = if len == WORD {
                u64::MAX
            } else {
                (1u64 << len) - 1
            };
            v.words[0] = value & mask;
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, index: usize) -> bool {
        assert!(
            index < self.len,
            "bit index {index} out of range {}",
            self.len
        );
        (self.words[index / WORD] >> (index % WORD)) & 1 == 1
    }

    pub fn set(&mut self, index: usize, bit: bool) {
        assert!(
            index < self.len,
            "bit index {index} out of range {}",
            self.len
        );
        let mask = 1u64 << (index % WORD);
        if bit {
            self.words[index / WORD] |= mask;
        } else {
            self.words[index / WORD] &= !mask;
        }
    }

    pub fn flip(&mut self, index: usize) {
        assert!(index < self.len);
        self.words[index / WORD] ^= 1 << (index % WORD);
    }

    pub fn xor_assign(&mut self, other: &BitVector) {
        assert_eq!(self.len, other.len, "length mismatch in xor");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    pub fn xor(&self, other: &BitVector) -> BitVector {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    pub fn and(&self, other: &BitVector) -> BitVector {
        assert_eq!(self.len, other.len, "length mismatch in and");
        BitVector {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    /// Standard dot product over GF(2).
    pub fn dot(&self, other: &BitVector) -> bool {
        assert_eq!(self.len, other.len, "length mismatch in dot");
        let ones: u32 = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum();
        ones & 1 == 1
    }

    /// Hamming weight.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Index of the leftmost one.
    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }

    /// Copies out `len` bits starting at `start`.
    pub fn slice(&self, start: usize, len: usize) -> BitVector {
        assert!(start + len <= self.len);
        BitVector::from_bools((start..start + len).map(|i| self.get(i)))
    }

    pub fn concat(parts: &[&BitVector]) -> BitVector {
        BitVector::from_bools(parts.iter().flat_map(|p| p.iter()))
    }

    /// Applies a coordinate permutation: entry `i` of the result is entry
    /// `perm[i]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> BitVector {
        assert_eq!(perm.len(), self.len);
        BitVector::from_bools(perm.iter().map(|&p| self.get(p)))
    }

    /// Lexicographic comparison in coordinate order, index 0 first, 0 < 1.
    pub fn cmp_lex(&self, other: &BitVector) -> Ordering {
        for (a, b) in self.iter().zip(other.iter()) {
            if a != b {
                return if a { Ordering::Greater } else { Ordering::Less };
            }
        }
        self.len.cmp(&other.len)
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for bit in self.iter() {
            f.write_str(if bit { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crossing_word_boundary() {
        let mut v = BitVector::zeros(130);
        v.set(0, true);
        v.set(64, true);
        v.set(129, true);
        assert_eq!(v.weight(), 3);
        assert_eq!(v.ones().collect::<Vec<_>>(), alloc::vec![0, 64, 129]);
        assert_eq!(v.slice(60, 10).first_one(), Some(4));
    }

    #[test]
    fn dot_and_xor() {
        let a = BitVector::from_bits(&[1, 1, 0, 1]);
        let b = BitVector::from_bits(&[1, 0, 1, 1]);
        assert!(!a.dot(&b));
        assert_eq!(a.xor(&b), BitVector::from_bits(&[0, 1, 1, 0]));
    }

    #[test]
    fn lex_order_prefers_late_leading_one() {
        let a = BitVector::from_bits(&[0, 0, 1]);
        let b = BitVector::from_bits(&[0, 1, 0]);
        assert_eq!(a.cmp_lex(&b), Ordering::Less);
    }

    #[test]
    fn from_u64_masks_excess_bits() {
        let v = BitVector::from_u64(3, 0xff);
        assert_eq!(v, BitVector::from_bits(&[1, 1, 1]));
        assert_eq!(v.weight(), 3);
    }
}
