use alloc::vec::Vec;
use core::fmt;

use super::{BitVector, F4};

/// Dense matrix over GF(2), stored as packed rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryMatrix {
    cols: usize,
    rows: Vec<BitVector>,
}

impl BinaryMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        BinaryMatrix {
            cols,
            rows: (0..rows).map(|_| BitVector::zeros(cols)).collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        BinaryMatrix {
            cols: n,
            rows: (0..n).map(|i| BitVector::unit(n, i)).collect(),
        }
    }

    /// Panics if a row's length differs from `cols`.
    pub fn from_rows(cols: usize, rows: Vec<BitVector>) -> Self {
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(
                r.len(),
                cols,
                "row {i} has length {} (expected {cols})",
                r.len()
            );
        }
        BinaryMatrix { cols, rows }
    }

    /// Row-major 0/1 literal, handy in tests.
    pub fn from_literal(rows: &[&[u8]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(cols, rows.iter().map(|r| BitVector::from_bits(r)).collect())
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[BitVector] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<BitVector> {
        self.rows
    }

    pub fn row(&self, i: usize) -> &BitVector {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, bit: bool) {
        self.rows[i].set(j, bit);
    }

    pub fn push_row(&mut self, row: BitVector) {
        assert_eq!(row.len(), self.cols);
        self.rows.push(row);
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BitVector::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.nrows() == self.cols
            && self
                .rows
                .iter()
                .enumerate()
                .all(|(i, r)| r.weight() == 1 && r.get(i))
    }

    pub fn transpose(&self) -> BinaryMatrix {
        let rows = (0..self.cols)
            .map(|j| BitVector::from_bools(self.rows.iter().map(|r| r.get(j))))
            .collect();
        BinaryMatrix {
            cols: self.nrows(),
            rows,
        }
    }

    /// `self * other^t`: entry (i, j) is the dot product of row i of `self`
    /// and row j of `other`.
    pub fn mul_transpose(&self, other: &BinaryMatrix) -> BinaryMatrix {
        assert_eq!(self.cols, other.cols, "inner dimension mismatch");
        let rows = self
            .rows
            .iter()
            .map(|a| BitVector::from_bools(other.rows.iter().map(|b| a.dot(b))))
            .collect();
        BinaryMatrix {
            cols: other.nrows(),
            rows,
        }
    }

    pub fn mul(&self, other: &BinaryMatrix) -> BinaryMatrix {
        self.mul_transpose(&other.transpose())
    }

    /// `self * self^t`.
    pub fn gram(&self) -> BinaryMatrix {
        self.mul_transpose(self)
    }

    pub fn add(&self, other: &BinaryMatrix) -> BinaryMatrix {
        assert_eq!((self.nrows(), self.cols), (other.nrows(), other.cols));
        BinaryMatrix {
            cols: self.cols,
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(a, b)| a.xor(b))
                .collect(),
        }
    }

    /// Reduced row echelon form with the leftmost available pivot in each
    /// step. Returns the nonzero rows and their pivot columns.
    pub fn rref(&self) -> (BinaryMatrix, Vec<usize>) {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(p) = (rank..rows.len()).find(|&i| rows[i].get(col)) else {
                continue;
            };
            rows.swap(rank, p);
            let pivot_row = rows[rank].clone();
            for (i, r) in rows.iter_mut().enumerate() {
                if i != rank && r.get(col) {
                    r.xor_assign(&pivot_row);
                }
            }
            pivots.push(col);
            rank += 1;
        }
        rows.truncate(rank);
        (
            BinaryMatrix {
                cols: self.cols,
                rows,
            },
            pivots,
        )
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel `{v : M v = 0}`, one vector per free column
    /// in increasing column order.
    pub fn kernel(&self) -> Vec<BitVector> {
        let (reduced, pivots) = self.rref();
        let mut is_pivot = alloc::vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = BitVector::unit(self.cols, free);
                for (row, &p) in reduced.rows.iter().zip(&pivots) {
                    if row.get(free) {
                        v.set(p, true);
                    }
                }
                v
            })
            .collect()
    }

    /// Nonzero determinant over GF(2). Panics unless square.
    pub fn is_invertible(&self) -> bool {
        assert_eq!(
            self.nrows(),
            self.cols,
            "determinant of a non-square matrix"
        );
        self.rank() == self.cols
    }

    /// Determinant over GF(2) as 0/1.
    pub fn determinant(&self) -> u8 {
        self.is_invertible() as u8
    }

    /// True if `v` lies in the row space.
    pub fn row_space_contains(&self, v: &BitVector) -> bool {
        let (reduced, pivots) = self.rref();
        let mut r = v.clone();
        for (row, &p) in reduced.rows.iter().zip(&pivots) {
            if r.get(p) {
                r.xor_assign(row);
            }
        }
        r.is_zero()
    }
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{r:?}")?;
        }
        f.write_str("]")
    }
}

/// Dense matrix over GF(4).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F4Matrix {
    rows: usize,
    cols: usize,
    data: Vec<F4>,
}

impl F4Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        F4Matrix {
            rows,
            cols,
            data: alloc::vec![F4::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F4::ONE);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<F4>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "row {i} has wrong length");
            data.extend_from_slice(r);
        }
        F4Matrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F4) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        F4Matrix { rows, cols, data }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> F4 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, z: F4) {
        self.data[i * self.cols + j] = z;
    }

    pub fn row(&self, i: usize) -> &[F4] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<F4>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> F4Matrix {
        F4Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    pub fn is_diagonal(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn diagonal(&self) -> Vec<F4> {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i))
            .collect()
    }

    pub fn off_diagonal(&self) -> impl Iterator<Item = F4> + '_ {
        (0..self.rows).flat_map(move |i| {
            (0..self.cols)
                .filter(move |&j| j != i)
                .map(move |j| self.get(i, j))
        })
    }

    pub fn scale(&self, z: F4) -> F4Matrix {
        F4Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| x * z).collect(),
        }
    }

    pub fn add(&self, other: &F4Matrix) -> F4Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        F4Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| a + b)
                .collect(),
        }
    }

    pub fn mul(&self, other: &F4Matrix) -> F4Matrix {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        F4Matrix::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols)
                .map(|l| self.get(i, l) * other.get(l, j))
                .sum()
        })
    }

    /// Determinant over GF(4). The empty matrix has determinant 1.
    pub fn determinant(&self) -> F4 {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = F4::ONE;
        for col in 0..n {
            let Some(p) = (col..n).find(|&i| !m.get(i, col).is_zero()) else {
                return F4::ZERO;
            };
            if p != col {
                // Row swaps do not change the sign in characteristic 2.
                for j in 0..n {
                    let t = m.get(p, j);
                    m.set(p, j, m.get(col, j));
                    m.set(col, j, t);
                }
            }
            let pivot = m.get(col, col);
            det *= pivot;
            let inv = pivot.inverse().expect("nonzero pivot");
            for i in col + 1..n {
                let factor = m.get(i, col) * inv;
                if factor.is_zero() {
                    continue;
                }
                for j in col..n {
                    let v = m.get(i, j) + factor * m.get(col, j);
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    /// Row rank over GF(4).
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&i| !m.get(i, col).is_zero()) else {
                continue;
            };
            for j in 0..self.cols {
                let t = m.get(p, j);
                m.set(p, j, m.get(rank, j));
                m.set(rank, j, t);
            }
            let inv = m.get(rank, col).inverse().expect("nonzero pivot");
            for i in 0..self.rows {
                if i == rank {
                    continue;
                }
                let factor = m.get(i, col) * inv;
                if factor.is_zero() {
                    continue;
                }
                for j in 0..self.cols {
                    let v = m.get(i, j) + factor * m.get(rank, j);
                    m.set(i, j, v);
                }
            }
            rank += 1;
        }
        rank
    }
}

impl fmt::Debug for F4Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str("; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rank_examples() {
        assert_eq!(BinaryMatrix::identity(5).rank(), 5);
        assert_eq!(
            BinaryMatrix::from_literal(&[&[1, 0, 1], &[1, 0, 1]]).rank(),
            1
        );
        assert_eq!(BinaryMatrix::zeros(3, 4).rank(), 0);
    }

    #[test]
    fn kernel_examples() {
        assert!(BinaryMatrix::identity(4).kernel().is_empty());
        let k = BinaryMatrix::zeros(2, 3).kernel();
        assert_eq!(k, (0..3).map(|i| BitVector::unit(3, i)).collect::<Vec<_>>());
        assert_eq!(
            BinaryMatrix::from_literal(&[&[1, 1]]).kernel(),
            alloc::vec![BitVector::from_bits(&[1, 1])]
        );
    }

    #[test]
    fn f4_determinants() {
        let w = F4::OMEGA;
        let d = F4Matrix::from_rows(&[
            alloc::vec![F4::OMEGA2, F4::ZERO, F4::ZERO],
            alloc::vec![F4::ZERO, w, F4::ZERO],
            alloc::vec![F4::ZERO, F4::ZERO, w],
        ]);
        assert_eq!(d.determinant(), w);
        let singular = F4Matrix::from_rows(&[alloc::vec![F4::ONE, w], alloc::vec![w, F4::OMEGA2]]);
        assert_eq!(singular.determinant(), F4::ZERO);
        assert_eq!(singular.rank(), 1);
        assert_eq!(F4Matrix::zeros(0, 0).determinant(), F4::ONE);
    }

    /// Leibniz expansion; characteristic 2 makes every sign +1.
    fn det_by_permutations(m: &F4Matrix) -> F4 {
        fn go(m: &F4Matrix, row: usize, used: &mut Vec<bool>) -> F4 {
            if row == m.nrows() {
                return F4::ONE;
            }
            let mut acc = F4::ZERO;
            for c in 0..m.ncols() {
                if !used[c] {
                    used[c] = true;
                    acc += m.get(row, c) * go(m, row + 1, used);
                    used[c] = false;
                }
            }
            acc
        }
        go(m, 0, &mut alloc::vec![false; m.ncols()])
    }

    fn binary_matrix() -> impl Strategy<Value = BinaryMatrix> {
        (0usize..7, 0usize..9).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(any::<bool>(), c), r).prop_map(
                move |rows| {
                    BinaryMatrix::from_rows(
                        c,
                        rows.into_iter().map(BitVector::from_bools).collect(),
                    )
                },
            )
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in binary_matrix()) {
            let kernel = m.kernel();
            prop_assert_eq!(m.rank() + kernel.len(), m.ncols());
            for v in &kernel {
                prop_assert!(m.rows().iter().all(|r| !r.dot(v)));
            }
            let k = BinaryMatrix::from_rows(m.ncols(), kernel.clone());
            prop_assert_eq!(k.rank(), kernel.len());
        }

        #[test]
        fn f4_determinant_matches_leibniz(
            n in 0usize..5,
            seed in proptest::collection::vec(0u8..4, 16)
        ) {
            let m = F4Matrix::from_fn(n, n, |i, j| F4::from_byte(seed[i * 4 + j]));
            prop_assert_eq!(m.determinant(), det_by_permutations(&m));
            prop_assert_eq!(m.determinant().is_zero(), m.rank() < n);
        }
    }
}
