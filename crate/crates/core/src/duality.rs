//! The mixed inner product
//!
//! ```text
//!   <u, v> = w * sum a_i a'_i  +  sum b_j b'_j      (u = (a|b), v = (a'|b'))
//! ```
//!
//! with the binary sum taken mod 2 before scaling by w, together with dual
//! codes, hulls, the complementary-dual (ACD) test and the sufficient and
//! necessary conditions for it.

use alloc::vec::Vec;
use core::fmt;

use crate::code::AdditiveCode;
use crate::error::{Error, Result};
use crate::field::{BinaryMatrix, BitVector, F4Matrix, MixedWord, F4};
use crate::wmap;

fn check_shapes(u: &MixedWord, v: &MixedWord) -> Result<()> {
    if u.shape() != v.shape() {
        return Err(Error::WordShapeMismatch(
            u.alpha(),
            u.beta(),
            v.alpha(),
            v.beta(),
        ));
    }
    Ok(())
}

/// Splits `<u, v> = s + w t` into its two bits `(s, t)`.
///
/// Writing quaternary coordinates as `c + w q`:
/// `s = sum (c c' + q q')` and `t = sum a a' + sum (c q' + q c' + q q')`.
pub fn decompose_inner_product(u: &MixedWord, v: &MixedWord) -> Result<(bool, bool)> {
    check_shapes(u, v)?;
    Ok(decompose(u, v))
}

fn decompose(u: &MixedWord, v: &MixedWord) -> (bool, bool) {
    let (c, q) = (u.c1_plane(), u.cw_plane());
    let (c2, q2) = (v.c1_plane(), v.cw_plane());
    let qq = q.dot(q2);
    let s = c.dot(c2) ^ qq;
    let t = u.binary_part().dot(v.binary_part()) ^ c.dot(q2) ^ q.dot(c2) ^ qq;
    (s, t)
}

pub fn inner_product4(u: &MixedWord, v: &MixedWord) -> Result<F4> {
    let (s, t) = decompose_inner_product(u, v)?;
    Ok(F4::from_bits(s, t))
}

fn inner(u: &MixedWord, v: &MixedWord) -> F4 {
    let (s, t) = decompose(u, v);
    F4::from_bits(s, t)
}

/// Pairwise inner products of the generator rows of a code.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GramMatrix {
    entries: F4Matrix,
}

impl GramMatrix {
    pub fn size(&self) -> usize {
        self.entries.nrows()
    }

    pub fn get(&self, i: usize, j: usize) -> F4 {
        self.entries.get(i, j)
    }

    pub fn matrix(&self) -> &F4Matrix {
        &self.entries
    }

    pub fn determinant(&self) -> F4 {
        self.entries.determinant()
    }

    pub fn is_zero(&self) -> bool {
        (0..self.size()).all(|i| (0..self.size()).all(|j| self.get(i, j).is_zero()))
    }

    /// Diagonal with every diagonal entry nonzero.
    pub fn is_invertible_diagonal(&self) -> bool {
        self.size() > 0
            && self.entries.is_diagonal()
            && self.entries.diagonal().iter().all(|z| !z.is_zero())
    }
}

impl fmt::Display for GramMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.size() {
            if i > 0 {
                f.write_str("\n")?;
            }
            for j in 0..self.size() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        Ok(())
    }
}

pub fn gram_matrix(c: &AdditiveCode) -> GramMatrix {
    let rows = c.rows();
    GramMatrix {
        entries: F4Matrix::from_fn(rows.len(), rows.len(), |i, j| inner(&rows[i], &rows[j])),
    }
}

/// Euclidean Gram matrix over F4 of the quaternary parts of the generators.
pub fn quaternary_gram(c: &AdditiveCode) -> F4Matrix {
    let y = F4Matrix::from_rows(&c.quaternary_generator());
    if c.dimension() == 0 {
        return F4Matrix::zeros(0, 0);
    }
    y.mul(&y.transpose())
}

/// The two linear constraints `s = 0`, `t = 0` that orthogonality to `g`
/// imposes on a linearized word `(a | c | q)`.
fn constraint_rows(g: &MixedWord) -> [BitVector; 2] {
    let zeros = BitVector::zeros(g.alpha());
    let s = BitVector::concat(&[&zeros, g.c1_plane(), g.cw_plane()]);
    let t = BitVector::concat(&[
        g.binary_part(),
        g.cw_plane(),
        &g.c1_plane().xor(g.cw_plane()),
    ]);
    [s, t]
}

/// The 2k x (alpha + 2 beta) system whose kernel is the dual code.
pub fn dual_constraints(c: &AdditiveCode) -> BinaryMatrix {
    BinaryMatrix::from_rows(
        c.linear_length(),
        c.rows().iter().flat_map(constraint_rows).collect(),
    )
}

/// C-perp = { v : <v, u> = 0 for all u in C }.
pub fn dual_code(c: &AdditiveCode) -> AdditiveCode {
    let kernel = dual_constraints(c).kernel();
    AdditiveCode::from_linear_basis(c.alpha(), c.beta(), &kernel)
}

/// C intersected with its dual, with a reduced echelon basis in linearized
/// coordinates.
pub fn hull(c: &AdditiveCode) -> AdditiveCode {
    let rows = c.rows();
    let k = rows.len();
    // Column i of the system is generator i; each generator j contributes
    // the s- and t-bit of sum_i lambda_i <g_i, g_j>.
    let mut system = BinaryMatrix::zeros(2 * k, k);
    for (i, gi) in rows.iter().enumerate() {
        for (j, gj) in rows.iter().enumerate() {
            let (s, t) = decompose(gi, gj);
            system.set(2 * j, i, s);
            system.set(2 * j + 1, i, t);
        }
    }
    let words: Vec<BitVector> = system
        .kernel()
        .iter()
        .map(|l| c.combination(l).linearize())
        .collect();
    let (reduced, _) = BinaryMatrix::from_rows(c.linear_length(), words).rref();
    AdditiveCode::from_linear_basis(c.alpha(), c.beta(), reduced.rows())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Acd,
    NotAcd,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Acd => "ACD",
            Verdict::NotAcd => "not-ACD",
        })
    }
}

/// Named sufficient conditions for a code to be ACD.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    CaseI,
    CaseII,
    CaseIII,
    ZeroOffDiagonal,
    InvertibleDiagonalGram,
    Th23,
    Th27,
    Prop28,
    Prop29,
    Cor35,
    Th37,
    Prop38,
    ImageLcd,
}

impl Condition {
    pub const ALL: [Condition; 13] = [
        Condition::CaseI,
        Condition::CaseII,
        Condition::CaseIII,
        Condition::ZeroOffDiagonal,
        Condition::InvertibleDiagonalGram,
        Condition::Th23,
        Condition::Th27,
        Condition::Prop28,
        Condition::Prop29,
        Condition::Cor35,
        Condition::Th37,
        Condition::Prop38,
        Condition::ImageLcd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Condition::CaseI => "CaseI",
            Condition::CaseII => "CaseII",
            Condition::CaseIII => "CaseIII",
            Condition::ZeroOffDiagonal => "ZeroOffDiagonal",
            Condition::InvertibleDiagonalGram => "InvertibleDiagonalGram",
            Condition::Th23 => "Th23",
            Condition::Th27 => "Th27",
            Condition::Prop28 => "Prop28",
            Condition::Prop29 => "Prop29",
            Condition::Cor35 => "Cor35",
            Condition::Th37 => "Th37",
            Condition::Prop38 => "Prop38",
            Condition::ImageLcd => "ImageLCD",
        }
    }

    pub fn from_name(name: &str) -> Option<Condition> {
        Condition::ALL.into_iter().find(|c| c.name() == name)
    }

    /// Evaluates this condition on `c`.
    pub fn holds(self, c: &AdditiveCode) -> bool {
        match self {
            Condition::CaseI | Condition::CaseII | Condition::CaseIII => {
                classify_three_cases(c) == Some(self)
            }
            Condition::ZeroOffDiagonal => classify_zero_offdiagonal(c),
            Condition::InvertibleDiagonalGram => classify_invertible_diagonal_gram(c),
            Condition::Th23 => predicate_th23(c),
            Condition::Th27 => predicate_th27(c),
            Condition::Prop28 => predicate_prop28(c),
            Condition::Prop29 => predicate_prop29(c),
            Condition::Cor35 => predicate_cor35(c),
            Condition::Th37 => predicate_th37(c),
            Condition::Prop38 => predicate_prop38(c),
            Condition::ImageLcd => wmap::is_image_lcd(&wmap::w_map_code(c)),
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of the ACD test. A witness is present exactly when the verdict
/// is not-ACD.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AcdCertificate {
    pub verdict: Verdict,
    pub witness: Option<MixedWord>,
    pub matched_conditions: Vec<Condition>,
    pub hull_dimension: usize,
}

impl AcdCertificate {
    pub fn is_acd(&self) -> bool {
        self.verdict == Verdict::Acd
    }
}

/// Decides ACD from the hull and records every sufficient condition that
/// holds. The reported witness is the lexicographically smallest nonzero
/// hull word in linearized coordinates.
pub fn is_acd(c: &AdditiveCode) -> AcdCertificate {
    let h = hull(c);
    // The hull basis is in reduced echelon form, so its last row is the
    // smallest nonzero word.
    let witness = h.rows().last().cloned();
    let matched_conditions = if c.is_zero() {
        Vec::new()
    } else {
        Condition::ALL
            .into_iter()
            .filter(|cond| cond.holds(c))
            .collect()
    };
    AcdCertificate {
        verdict: if witness.is_none() {
            Verdict::Acd
        } else {
            Verdict::NotAcd
        },
        witness,
        matched_conditions,
        hull_dimension: h.dimension(),
    }
}

/// True iff the hull is trivial, without running the classifiers.
pub fn hull_is_trivial(c: &AdditiveCode) -> bool {
    hull(c).is_zero()
}

/// Cases I-III: off-diagonal Gram entries in {0, x} and diagonal entries
/// outside {0, x}, for x = 1, w, w^2 in that order.
pub fn classify_three_cases(c: &AdditiveCode) -> Option<Condition> {
    if c.is_zero() {
        return None;
    }
    let g = gram_matrix(c);
    let cases = [
        (F4::ONE, Condition::CaseI),
        (F4::OMEGA, Condition::CaseII),
        (F4::OMEGA2, Condition::CaseIII),
    ];
    let n = g.size();
    cases.into_iter().find_map(|(x, case)| {
        let inside = |z: F4| z.is_zero() || z == x;
        let ok = (0..n).all(|i| {
            (0..n).all(|j| {
                if i == j {
                    !inside(g.get(i, j))
                } else {
                    inside(g.get(i, j))
                }
            })
        });
        ok.then_some(case)
    })
}

/// Gram matrix diagonal with nonzero diagonal.
pub fn classify_zero_offdiagonal(c: &AdditiveCode) -> bool {
    gram_matrix(c).is_invertible_diagonal()
}

/// Gram matrix diagonal with nonzero determinant. Over a field this is the
/// same test as [`classify_zero_offdiagonal`], computed via the determinant.
pub fn classify_invertible_diagonal_gram(c: &AdditiveCode) -> bool {
    let g = gram_matrix(c);
    g.size() > 0 && g.matrix().is_diagonal() && !g.determinant().is_zero()
}

/// Every pair of generators, including a generator with itself, is
/// orthogonal.
pub fn is_self_orthogonal(c: &AdditiveCode) -> bool {
    let rows = c.rows();
    rows.iter()
        .enumerate()
        .all(|(i, u)| rows[i..].iter().all(|v| inner(u, v).is_zero()))
}

/// LCD test via a nonsingular Gram matrix for codes that are linear over
/// their field: binary codes (beta = 0) and F4-linear codes (alpha = 0).
pub fn is_lcd_linear(c: &AdditiveCode) -> Result<bool> {
    if c.beta() == 0 {
        return Ok(c.binary_generator().gram().is_invertible());
    }
    if c.alpha() != 0 || !c.is_f4_linear() {
        return Err(Error::Inapplicable("code is not linear over its field"));
    }
    let basis = f4_basis(c);
    let y = F4Matrix::from_rows(&basis);
    if basis.is_empty() {
        return Ok(true);
    }
    Ok(!y.mul(&y.transpose()).determinant().is_zero())
}

/// An F4-basis of an F4-linear quaternary code.
fn f4_basis(c: &AdditiveCode) -> Vec<Vec<F4>> {
    let mut span = crate::code::Echelon::new(c.linear_length());
    let mut basis = Vec::new();
    for r in c.rows() {
        if span.insert(r.linearize()) {
            span.insert(r.omega_times_y().linearize());
            basis.push(r.quaternary_part());
        }
    }
    basis
}

/// C_X is LCD, C_Y is self-orthogonal, and every nonzero codeword has a
/// nonzero binary part.
pub fn predicate_th23(c: &AdditiveCode) -> bool {
    let cx = c.puncture_x();
    is_lcd_linear(&cx).unwrap_or(false)
        && is_self_orthogonal(&c.puncture_y())
        && c.binary_part_always_nonzero()
}

/// C_X is self-orthogonal, C_Y is ACD, and every nonzero codeword has a
/// nonzero quaternary part.
pub fn predicate_th27(c: &AdditiveCode) -> bool {
    is_self_orthogonal(&c.puncture_x())
        && hull_is_trivial(&c.puncture_y())
        && c.quaternary_part_always_nonzero()
}

/// `G_X G_X^t = I` and the quaternary parts are self-orthogonal, so the
/// Gram matrix is `w I`.
pub fn predicate_prop28(c: &AdditiveCode) -> bool {
    !c.is_zero()
        && c.binary_generator().gram().is_identity()
        && quaternary_gram(c)
            .to_rows()
            .iter()
            .flatten()
            .all(|z| z.is_zero())
}

/// `G = (I_alpha | G_Y)` with `G_Y` self-orthogonal.
pub fn predicate_prop29(c: &AdditiveCode) -> bool {
    c.alpha() > 0
        && c.dimension() == c.alpha()
        && c.binary_generator().is_identity()
        && quaternary_gram(c)
            .to_rows()
            .iter()
            .flatten()
            .all(|z| z.is_zero())
}

/// C_X is self-dual, C_Y is ACD, and every nonzero codeword has a nonzero
/// quaternary part.
pub fn predicate_cor35(c: &AdditiveCode) -> bool {
    let cx = c.puncture_x();
    c.alpha() > 0 && 2 * cx.dimension() == c.alpha() && predicate_th27(c)
}

/// `G_X G_X^t = 0` and `G_Y G_Y^t` is an invertible diagonal matrix.
pub fn predicate_th37(c: &AdditiveCode) -> bool {
    let yg = quaternary_gram(c);
    !c.is_zero()
        && c.binary_generator().gram().is_zero()
        && yg.is_diagonal()
        && yg.diagonal().iter().all(|z| !z.is_zero())
}

/// `G_X` self-orthogonal and `G_Y = (I_beta ; w I_beta)` exactly.
pub fn predicate_prop38(c: &AdditiveCode) -> bool {
    let beta = c.beta();
    beta > 0
        && c.dimension() == 2 * beta
        && c.binary_generator().gram().is_zero()
        && c.rows().iter().enumerate().all(|(i, r)| {
            let (scale, pos) = if i < beta {
                (F4::ONE, i)
            } else {
                (F4::OMEGA, i - beta)
            };
            (0..beta).all(|j| r.quaternary(j) == if j == pos { scale } else { F4::ZERO })
        })
}

/// C_X is not LCD and C_Y is self-orthogonal. When this holds the code is
/// not ACD.
pub fn predicate_cor25(c: &AdditiveCode) -> bool {
    !is_lcd_linear(&c.puncture_x()).unwrap_or(true) && is_self_orthogonal(&c.puncture_y())
}

/// C_X is self-orthogonal and C_Y is not ACD. When this holds the code is
/// not ACD.
pub fn predicate_cor33(c: &AdditiveCode) -> bool {
    is_self_orthogonal(&c.puncture_x()) && !hull_is_trivial(&c.puncture_y())
}

/// `|C| |C-perp| <= 2^(alpha + 2 beta)`.
pub fn check_cardinality_bound(c: &AdditiveCode) -> bool {
    c.dimension() + dual_code(c).dimension() <= c.linear_length()
}

/// For separable C, every word of `C_X-perp x C_Y-perp` lies in C-perp.
pub fn check_separable_containment(c: &AdditiveCode) -> Result<bool> {
    if !c.is_separable() {
        return Err(Error::Inapplicable("code is not separable"));
    }
    let product = AdditiveCode::product(&dual_code(&c.puncture_x()), &dual_code(&c.puncture_y()))?;
    Ok(product
        .rows()
        .iter()
        .all(|u| c.rows().iter().all(|g| inner(u, g).is_zero())))
}
