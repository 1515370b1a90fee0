//! GF(4) = F2[x]/(x^2 + x + 1) = {0, 1, w, w^2}.
//!
//! An element is stored as two bits over the basis {1, w}:
//!
//! ```text
//!  value | c1 cw | byte
//!  ------+-------+-----
//!    0   |  0  0 |  0
//!    1   |  1  0 |  1
//!    w   |  0  1 |  2
//!    w^2 |  1  1 |  3      (w^2 = 1 + w)
//! ```
//!
//! Addition is XOR of the two bits. Multiplication uses a 4x4 table.

use core::fmt;
use core::iter::Sum;
use core::ops::{Add, AddAssign, Mul, MulAssign};

const MUL: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];
const INV: [u8; 4] = [0, 1, 3, 2];

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct F4(u8);

impl F4 {
    pub const ZERO: F4 = F4(0);
    pub const ONE: F4 = F4(1);
    /// The primitive element w, a root of x^2 + x + 1.
    pub const OMEGA: F4 = F4(2);
    /// w^2 = w + 1.
    pub const OMEGA2: F4 = F4(3);

    pub const ALL: [F4; 4] = [F4::ZERO, F4::ONE, F4::OMEGA, F4::OMEGA2];

    /// Builds `c1 + cw * w`.
    pub const fn from_bits(c1: bool, cw: bool) -> F4 {
        F4((c1 as u8) | ((cw as u8) << 1))
    }

    /// Raw encoding in `0..4`; bit 0 is the coefficient of 1, bit 1 that of w.
    pub const fn to_byte(self) -> u8 {
        self.0
    }

    pub const fn from_byte(byte: u8) -> F4 {
        F4(byte & 3)
    }

    /// Coefficient of 1.
    pub const fn c1(self) -> bool {
        self.0 & 1 == 1
    }

    /// Coefficient of w.
    pub const fn cw(self) -> bool {
        self.0 & 2 == 2
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// True for 0 and 1, the copy of F2 inside F4.
    pub const fn is_binary(self) -> bool {
        self.0 < 2
    }

    pub const fn inverse(self) -> Option<F4> {
        if self.0 == 0 {
            None
        } else {
            Some(F4(INV[self.0 as usize]))
        }
    }

    /// Parses the single-character symbols `0`, `1`, `w` (w) and `W` (w^2).
    pub const fn from_symbol(symbol: char) -> Option<F4> {
        match symbol {
            '0' => Some(F4::ZERO),
            '1' => Some(F4::ONE),
            'w' => Some(F4::OMEGA),
            'W' => Some(F4::OMEGA2),
            _ => None,
        }
    }

    pub const fn symbol(self) -> char {
        match self.0 {
            0 => '0',
            1 => '1',
            2 => 'w',
            _ => 'W',
        }
    }
}

impl Add for F4 {
    type Output = F4;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: F4) -> F4 {
        F4(self.0 ^ rhs.0)
    }
}

impl AddAssign for F4 {
    #[allow(clippy::suspicious_op_assign_impl)]
    fn add_assign(&mut self, rhs: F4) {
        self.0 ^= rhs.0;
    }
}

impl Mul for F4 {
    type Output = F4;
    fn mul(self, rhs: F4) -> F4 {
        F4(MUL[self.0 as usize][rhs.0 as usize])
    }
}

impl MulAssign for F4 {
    fn mul_assign(&mut self, rhs: F4) {
        *self = *self * rhs;
    }
}

impl Sum for F4 {
    fn sum<I: Iterator<Item = F4>>(iter: I) -> F4 {
        iter.fold(F4::ZERO, |acc, x| acc + x)
    }
}

impl From<bool> for F4 {
    fn from(bit: bool) -> F4 {
        F4(bit as u8)
    }
}

impl fmt::Display for F4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

impl fmt::Debug for F4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.0 {
            0 => "0",
            1 => "1",
            2 => "ω",
            _ => "ω²",
        };
        f.write_str(name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn omega_squared_is_omega_plus_one() {
        assert_eq!(F4::OMEGA * F4::OMEGA, F4::OMEGA2);
        assert_eq!(F4::OMEGA2, F4::OMEGA + F4::ONE);
    }

    #[test]
    fn omega_times_omega_squared_is_one() {
        assert_eq!(F4::OMEGA * F4::OMEGA2, F4::ONE);
    }

    #[test]
    fn zero_absorbs() {
        assert_eq!(F4::ZERO * F4::OMEGA, F4::ZERO);
        for a in F4::ALL {
            assert_eq!(a * F4::ZERO, F4::ZERO);
        }
    }

    #[test]
    fn nonzero_elements_have_inverses() {
        assert_eq!(F4::ZERO.inverse(), None);
        for a in &F4::ALL[1..] {
            assert_eq!(*a * a.inverse().unwrap(), F4::ONE);
        }
    }

    #[test]
    fn minimal_polynomial_vanishes() {
        let w = F4::OMEGA;
        assert_eq!(w * w + w + F4::ONE, F4::ZERO);
    }

    #[test]
    fn symbols_round_trip() {
        for a in F4::ALL {
            assert_eq!(F4::from_symbol(a.symbol()), Some(a));
        }
        assert_eq!(F4::from_symbol('x'), None);
    }

    fn any_f4() -> impl Strategy<Value = F4> {
        (0u8..4).prop_map(F4::from_byte)
    }

    proptest! {
        #[test]
        fn field_axioms(a in any_f4(), b in any_f4(), c in any_f4()) {
            prop_assert_eq!(a * (b + c), a * b + a * c);
            prop_assert_eq!((a * b) * c, a * (b * c));
            prop_assert_eq!(a * b, b * a);
            prop_assert_eq!(a + a, F4::ZERO);
            prop_assert_eq!(a * F4::ONE, a);
        }
    }
}
