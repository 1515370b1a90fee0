use alloc::vec::Vec;
use core::fmt;

use super::{AdditiveCode, Echelon};
use crate::field::{BinaryMatrix, BitVector, MixedWord, F4};

/// The tuple (alpha, beta; k1, k2', k2'') classifying an additive code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CodeType {
    pub alpha: usize,
    pub beta: usize,
    pub k1: usize,
    /// k2': number of (1, w) row pairs in the quaternary block.
    pub k2p: usize,
    /// k2'': number of single rows pivoting in the quaternary block.
    pub k2pp: usize,
}

impl CodeType {
    /// F2-dimension k1 + 2 k2' + k2''.
    pub fn dimension(&self) -> usize {
        self.k1 + 2 * self.k2p + self.k2pp
    }

    /// k2 = k2'' + 2 k2'.
    pub fn k2(&self) -> usize {
        self.k2pp + 2 * self.k2p
    }
}

/// Renders as `(alpha,beta;k1,k2',k2'')`, e.g. `(2,2;0,1,0)`.
impl fmt::Display for CodeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{};{},{},{})",
            self.alpha, self.beta, self.k1, self.k2p, self.k2pp
        )
    }
}

/// The type together with two alternative quantities that are sometimes used
/// to define k1 and k2''. They agree with the block sizes on separable
/// codes but may differ otherwise, so they are reported, not asserted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TypeReport {
    pub code_type: CodeType,
    pub dim_cx: usize,
    pub dim_cb_x: usize,
}

/// A block generator matrix obtained with F2 row operations and coordinate
/// permutations inside each block. Rows (after applying the permutations)
/// are laid out as:
///
/// ```text
///   k1   rows:  (I_k1  A | * )
///   k2'  rows:  (0?   * | 1 at pair column j, 0 at earlier pair columns)
///   k2'  rows:  (0?   * | w at pair column j, 0 at earlier pair columns)
///   k2'' rows:  (*    * | single pivots)
/// ```
///
/// Rows are never scaled by w, since that is not an equivalence of additive
/// codes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardForm {
    alpha: usize,
    beta: usize,
    rows: Vec<MixedWord>,
    perm_x: Vec<usize>,
    perm_y: Vec<usize>,
    k1: usize,
    k2p: usize,
    k2pp: usize,
}

impl StandardForm {
    pub fn of(code: &AdditiveCode) -> StandardForm {
        let (alpha, beta) = (code.alpha(), code.beta());

        // Echelon over the column order (cw | c1 | X): rows pivoting in the
        // w-plane carry a non-binary quaternary part, rows pivoting in the
        // 1-plane a nonzero binary-valued quaternary part, the rest are
        // purely binary.
        let m = BinaryMatrix::from_rows(
            alpha + 2 * beta,
            code.rows()
                .iter()
                .map(|r| BitVector::concat(&[r.cw_plane(), r.c1_plane(), r.binary_part()]))
                .collect(),
        );
        let (reduced, pivots) = m.rref();
        let mut nonbinary = Vec::new();
        let mut binary_y = Vec::new();
        let mut pure_x = Vec::new();
        for (v, &p) in reduced.rows().iter().zip(&pivots) {
            let w = MixedWord::from_planes(
                v.slice(2 * beta, alpha),
                v.slice(beta, beta),
                v.slice(0, beta),
            );
            if p < beta {
                nonbinary.push(w);
            } else if p < 2 * beta {
                binary_y.push(w);
            } else {
                pure_x.push(w);
            }
        }

        // Pair phase: a quaternary column whose values over the non-binary
        // rows span all of F4 yields a (1, w) pair.
        let mut pairs: Vec<(usize, MixedWord, MixedWord)> = Vec::new();
        for j in 0..beta {
            let Some(a) = nonbinary.iter().position(|r| !r.quaternary(j).is_zero()) else {
                continue;
            };
            let va = nonbinary[a].quaternary(j);
            let Some(b) = nonbinary.iter().position(|r| {
                let v = r.quaternary(j);
                !v.is_zero() && v != va
            }) else {
                continue;
            };
            let sum = &nonbinary[a] + &nonbinary[b];
            let candidates = [&nonbinary[a], &nonbinary[b], &sum];
            let pick = |z: F4| {
                (*candidates
                    .iter()
                    .find(|r| r.quaternary(j) == z)
                    .expect("three nonzero values"))
                .clone()
            };
            let (p, q) = (pick(F4::ONE), pick(F4::OMEGA));
            for (i, r) in nonbinary.iter_mut().enumerate() {
                if i == a || i == b {
                    continue;
                }
                let v = r.quaternary(j);
                if v.c1() {
                    *r += &p;
                }
                if v.cw() {
                    *r += &q;
                }
            }
            let (hi, lo) = if a > b { (a, b) } else { (b, a) };
            nonbinary.remove(hi);
            nonbinary.remove(lo);
            pairs.push((j, p, q));
        }

        // X phase: leftover non-binary rows join the k1 block when their
        // binary part (possibly corrected by a binary-valued row) is new.
        let mut x_basis = Echelon::new(alpha);
        for r in &pure_x {
            x_basis.insert(r.binary_part().clone());
        }
        let mut top = pure_x;
        let mut singles = Vec::new();
        for r in nonbinary {
            if x_basis.insert(r.binary_part().clone()) {
                top.push(r);
                continue;
            }
            let helper = binary_y.iter().find(|b| !x_basis.contains(b.binary_part()));
            match helper {
                Some(b) => {
                    let r = &r + b;
                    x_basis.insert(r.binary_part().clone());
                    top.push(r);
                }
                None => singles.push(r),
            }
        }

        // Reduce the k1 block so that its binary part is an identity on its
        // pivot columns.
        let (top_reduced, top_pivots) = BinaryMatrix::from_rows(
            alpha + 2 * beta,
            top.iter().map(MixedWord::linearize).collect(),
        )
        .rref();
        debug_assert!(top_pivots.iter().all(|&p| p < alpha));
        let top: Vec<MixedWord> = top_reduced
            .rows()
            .iter()
            .map(|v| MixedWord::delinearize(alpha, beta, v))
            .collect();

        let perm_x = complete_permutation(alpha, top_pivots.iter().copied());
        let y_lead = pairs
            .iter()
            .map(|(j, _, _)| *j)
            .chain(binary_y.iter().filter_map(|r| r.c1_plane().first_one()))
            .chain(singles.iter().filter_map(first_nonzero_y));
        let perm_y = complete_permutation(beta, y_lead);

        let (k1, k2p, k2pp) = (top.len(), pairs.len(), binary_y.len() + singles.len());
        let mut rows = top;
        rows.extend(pairs.iter().map(|(_, p, _)| p.clone()));
        rows.extend(pairs.iter().map(|(_, _, q)| q.clone()));
        rows.extend(binary_y);
        rows.extend(singles);
        let rows = rows.iter().map(|r| r.permuted(&perm_x, &perm_y)).collect();

        StandardForm {
            alpha,
            beta,
            rows,
            perm_x,
            perm_y,
            k1,
            k2p,
            k2pp,
        }
    }

    /// Rows of the block matrix, already permuted.
    pub fn rows(&self) -> &[MixedWord] {
        &self.rows
    }

    /// Entry `i` is the original binary coordinate placed at position `i`.
    pub fn permutation_x(&self) -> &[usize] {
        &self.perm_x
    }

    /// Entry `j` is the original quaternary coordinate placed at position `j`.
    pub fn permutation_y(&self) -> &[usize] {
        &self.perm_y
    }

    /// (k1, k2', k2'').
    pub fn block_sizes(&self) -> (usize, usize, usize) {
        (self.k1, self.k2p, self.k2pp)
    }

    /// The code generated by the block matrix, in permuted coordinates.
    pub fn code(&self) -> AdditiveCode {
        AdditiveCode::from_rows(self.alpha, self.beta, self.rows.clone())
            .expect("standard form rows have the code's shape")
    }

    pub fn code_type(&self) -> CodeType {
        CodeType {
            alpha: self.alpha,
            beta: self.beta,
            k1: self.k1,
            k2p: self.k2p,
            k2pp: self.k2pp,
        }
    }
}

fn first_nonzero_y(r: &MixedWord) -> Option<usize> {
    (0..r.beta()).find(|&j| !r.quaternary(j).is_zero())
}

/// Lists `lead` (skipping repeats) followed by the remaining indices in
/// increasing order.
fn complete_permutation(n: usize, lead: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut used = alloc::vec![false; n];
    let mut perm = Vec::with_capacity(n);
    for i in lead.chain(0..n) {
        if !used[i] {
            used[i] = true;
            perm.push(i);
        }
    }
    perm
}

/// Type of `code` read off its standard form.
///
/// Panics if the block sizes disagree with the dimension, which would mean
/// the reduction lost or invented rows.
pub fn compute_type(code: &AdditiveCode) -> CodeType {
    let t = code.code_type();
    assert_eq!(
        t.dimension(),
        code.dimension(),
        "standard form block sizes {t} disagree with dimension {}",
        code.dimension()
    );
    t
}

/// The type plus dim C_X and dim (C_b)_X.
pub fn type_report(code: &AdditiveCode) -> TypeReport {
    TypeReport {
        code_type: compute_type(code),
        dim_cx: code.puncture_x().dimension(),
        dim_cb_x: code.binary_subcode().puncture_x().dimension(),
    }
}
