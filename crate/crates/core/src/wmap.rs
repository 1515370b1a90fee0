//! The F2-linear bijection
//!
//! ```text
//!   W(a | b + w q) = (a | b + q | q)
//! ```
//!
//! from F2^alpha x F4^beta onto F2^(alpha + 2 beta), and the binary
//! complementary-dual (LCD) analysis of images.
//!
//! For words u, v the binary dot product satisfies `W(u).W(v) = s + t`
//! where `<u, v> = s + w t`, so a nonzero hull word of C maps to a nonzero
//! hull word of W(C).

use core::fmt;

use crate::code::AdditiveCode;
use crate::duality::{self, Verdict};
use crate::error::{Error, Result};
use crate::field::{BinaryMatrix, BitVector, MixedWord, F4};

pub fn w_map_word(u: &MixedWord) -> BitVector {
    BitVector::concat(&[
        u.binary_part(),
        &u.c1_plane().xor(u.cw_plane()),
        u.cw_plane(),
    ])
}

/// A code together with its binary image; row i of the image is W of row
/// i of the source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WImage {
    source: AdditiveCode,
    image: AdditiveCode,
}

impl WImage {
    pub fn source(&self) -> &AdditiveCode {
        &self.source
    }

    /// The image as a binary code (beta = 0) of length alpha + 2 beta.
    pub fn image(&self) -> &AdditiveCode {
        &self.image
    }

    /// Image generators, one per source generator.
    pub fn generator_matrix(&self) -> BinaryMatrix {
        self.image.binary_generator()
    }

    pub fn length(&self) -> usize {
        self.image.alpha()
    }

    pub fn dimension(&self) -> usize {
        self.image.dimension()
    }
}

pub fn w_map_code(c: &AdditiveCode) -> WImage {
    let n = c.linear_length();
    let rows = c
        .rows()
        .iter()
        .map(|r| MixedWord::from_planes(w_map_word(r), BitVector::zeros(0), BitVector::zeros(0)))
        .collect();
    let image = AdditiveCode::from_rows(n, 0, rows).expect("image rows have length alpha + 2 beta");
    debug_assert_eq!(image.dimension(), c.dimension());
    WImage {
        source: c.clone(),
        image,
    }
}

/// `G' G'^t` for the image generator matrix `G'`.
pub fn image_gram(w: &WImage) -> BinaryMatrix {
    w.generator_matrix().gram()
}

/// Nonsingular image Gram matrix.
pub fn is_image_lcd(w: &WImage) -> bool {
    image_gram(w).is_invertible()
}

/// Checks `W(C-perp)` is orthogonal to `W(C)` generator by generator.
pub fn check_w_dual_containment(c: &AdditiveCode) -> bool {
    let image = w_map_code(c);
    let dual_image = w_map_code(&duality::dual_code(c));
    dual_image.image().rows().iter().all(|u| {
        image
            .image()
            .rows()
            .iter()
            .all(|v| !u.binary_part().dot(v.binary_part()))
    })
}

/// `G_Y = G1 + w G2` with binary `G1`, `G2` (each k x beta).
pub fn split_quaternary_generators(c: &AdditiveCode) -> (BinaryMatrix, BinaryMatrix) {
    let g1 = c.rows().iter().map(|r| r.c1_plane().clone()).collect();
    let g2 = c.rows().iter().map(|r| r.cw_plane().clone()).collect();
    (
        BinaryMatrix::from_rows(c.beta(), g1),
        BinaryMatrix::from_rows(c.beta(), g2),
    )
}

/// For a self-orthogonal quaternary code:
/// `G1 G1^t + G2 G2^t = 0` and `G1 G2^t + G2 G1^t + G2 G2^t = 0`.
pub fn check_lemma30_identities(c: &AdditiveCode) -> Result<bool> {
    if c.alpha() != 0 {
        return Err(Error::Inapplicable(
            "identities apply to quaternary codes (alpha = 0)",
        ));
    }
    if !duality::is_self_orthogonal(c) {
        return Err(Error::Inapplicable("code is not self-orthogonal"));
    }
    let (g1, g2) = split_quaternary_generators(c);
    let g11 = g1.mul_transpose(&g1);
    let g12 = g1.mul_transpose(&g2);
    let g21 = g2.mul_transpose(&g1);
    let g22 = g2.mul_transpose(&g2);
    Ok(g11.add(&g22).is_zero() && g12.add(&g21).add(&g22).is_zero())
}

/// Result of a check whose hypotheses may not hold.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    Satisfied,
    Unsatisfied,
    HypothesisUnmet(&'static str),
}

impl Check {
    pub fn holds(self) -> bool {
        self == Check::Satisfied
    }

    fn from_bool(b: bool) -> Check {
        if b {
            Check::Satisfied
        } else {
            Check::Unsatisfied
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Check::Satisfied => f.write_str("satisfied"),
            Check::Unsatisfied => f.write_str("unsatisfied"),
            Check::HypothesisUnmet(why) => write!(f, "hypothesis unmet: {why}"),
        }
    }
}

/// `G1 G1^t + G1 G2^t + G2 G1^t`, the image Gram matrix when `G_X` is
/// self-orthogonal.
pub fn th44_matrix(c: &AdditiveCode) -> BinaryMatrix {
    let (g1, g2) = split_quaternary_generators(c);
    g1.mul_transpose(&g1)
        .add(&g1.mul_transpose(&g2))
        .add(&g2.mul_transpose(&g1))
}

/// With `G_X` self-orthogonal, a nonsingular [`th44_matrix`] makes W(C) LCD.
pub fn predicate_th44(c: &AdditiveCode) -> Check {
    if !c.binary_generator().gram().is_zero() {
        return Check::HypothesisUnmet("binary part does not generate a self-orthogonal code");
    }
    Check::from_bool(th44_matrix(c).is_invertible())
}

/// With `G_X` self-orthogonal and `G_Y = (I_beta ; w I_beta)`, the image
/// Gram matrix is `(I I ; I 0)`, which is nonsingular.
pub fn predicate_prop_th30(c: &AdditiveCode) -> Check {
    if !c.binary_generator().gram().is_zero() {
        return Check::HypothesisUnmet("binary part does not generate a self-orthogonal code");
    }
    let beta = c.beta();
    if beta == 0 || c.dimension() != 2 * beta {
        return Check::HypothesisUnmet("quaternary block is not (I ; wI)");
    }
    let structured = c.rows().iter().enumerate().all(|(i, r)| {
        let (scale, pos) = if i < beta {
            (F4::ONE, i)
        } else {
            (F4::OMEGA, i - beta)
        };
        (0..beta).all(|j| r.quaternary(j) == if j == pos { scale } else { F4::ZERO })
    });
    if !structured {
        return Check::HypothesisUnmet("quaternary block is not (I ; wI)");
    }
    Check::from_bool(is_image_lcd(&w_map_code(c)))
}

/// An LCD image certifies that C is ACD. A singular image Gram matrix
/// decides nothing, so `None` is returned.
pub fn infer_acd_from_image(c: &AdditiveCode) -> Option<Verdict> {
    is_image_lcd(&w_map_code(c)).then_some(Verdict::Acd)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::tests::{code, w, I, O, W, W2};
    use crate::field::testing::word;
    use proptest::prelude::*;

    fn bits(b: &[u8]) -> BitVector {
        BitVector::from_bits(b)
    }

    #[test]
    fn word_examples() {
        assert_eq!(w_map_word(&w(&[1, 1], &[W, I])), bits(&[1, 1, 1, 1, 1, 0]));
        assert_eq!(w_map_word(&w(&[0, 1], &[W2, W])), bits(&[0, 1, 0, 1, 1, 1]));
        assert!(w_map_word(&MixedWord::zero(2, 3)).is_zero());
    }

    #[test]
    fn code_image_rows() {
        let c = code(3, 2, &[w(&[1, 1, 1], &[W, W2]), w(&[0, 0, 0], &[W, W])]);
        let img = w_map_code(&c);
        assert_eq!(img.generator_matrix().row(0), &bits(&[1, 1, 1, 1, 0, 1, 1]));
        assert_eq!(img.generator_matrix().row(1), &bits(&[0, 0, 0, 1, 1, 1, 1]));
        let zero = w_map_code(&AdditiveCode::zero(2, 2));
        assert_eq!((zero.length(), zero.dimension()), (6, 0));
        assert_eq!(image_gram(&zero).nrows(), 0);
    }

    #[test]
    fn split_examples() {
        let c = code(2, 2, &[w(&[1, 1], &[W, W2]), w(&[0, 0], &[O, I])]);
        let (g1, g2) = split_quaternary_generators(&c);
        assert_eq!(g1, BinaryMatrix::from_literal(&[&[0, 1], &[0, 1]]));
        assert_eq!(g2, BinaryMatrix::from_literal(&[&[1, 1], &[0, 0]]));
        assert!(th44_matrix(&c).is_identity());
        assert_eq!(predicate_th44(&c), Check::Satisfied);
        let binary = code(0, 2, &[w(&[], &[I, O]), w(&[], &[I, I])]);
        assert!(split_quaternary_generators(&binary).1.is_zero());
        let omega = code(0, 2, &[w(&[], &[W, O]), w(&[], &[O, W])]);
        let (g1, g2) = split_quaternary_generators(&omega);
        assert!(g1.is_zero() && g2.is_identity());
    }

    #[test]
    fn th44_with_second_plane_zeroed() {
        // G1 = (0 1; 0 1) alone gives G1 G1^t = (1 1; 1 1), which is singular.
        let c = code(2, 2, &[w(&[1, 1], &[O, I]), w(&[0, 0], &[O, I])]);
        assert_eq!(predicate_th44(&c), Check::Unsatisfied);
        let bad = code(2, 1, &[w(&[1, 0], &[I])]);
        assert!(matches!(predicate_th44(&bad), Check::HypothesisUnmet(_)));
    }

    #[test]
    fn lemma30_examples() {
        let cy = code(0, 2, &[w(&[], &[I, I]), w(&[], &[W, W])]);
        assert_eq!(check_lemma30_identities(&cy), Ok(true));
        assert_eq!(
            check_lemma30_identities(&AdditiveCode::zero(0, 3)),
            Ok(true)
        );
        assert!(check_lemma30_identities(&code(0, 1, &[w(&[], &[I])])).is_err());
    }

    #[test]
    fn prop_th30_small_instance() {
        let c = code(2, 1, &[w(&[1, 1], &[I]), w(&[0, 0], &[W])]);
        assert_eq!(predicate_prop_th30(&c), Check::Satisfied);
        assert_eq!(
            image_gram(&w_map_code(&c)),
            BinaryMatrix::from_literal(&[&[1, 1], &[1, 0]])
        );
        let only_identity = code(2, 1, &[w(&[1, 1], &[I])]);
        assert!(matches!(
            predicate_prop_th30(&only_identity),
            Check::HypothesisUnmet(_)
        ));
    }

    fn codes() -> impl Strategy<Value = AdditiveCode> {
        (0usize..=6, 0usize..=4)
            .prop_flat_map(|(a, b)| {
                (
                    Just(a),
                    Just(b),
                    proptest::collection::vec(word(a, b), 0..=8),
                )
            })
            .prop_map(|(a, b, rows)| AdditiveCode::from_rows(a, b, rows).unwrap())
    }

    proptest! {
        #[test]
        fn w_is_linear_and_injective(
            (u, v) in (0usize..6, 0usize..5).prop_flat_map(|(a, b)| (word(a, b), word(a, b)))
        ) {
            prop_assert_eq!(w_map_word(&(&u + &v)), w_map_word(&u).xor(&w_map_word(&v)));
            if u != v {
                prop_assert_ne!(w_map_word(&u), w_map_word(&v));
            }
        }

        #[test]
        fn dot_of_images_is_s_plus_t(
            (u, v) in (0usize..6, 0usize..5).prop_flat_map(|(a, b)| (word(a, b), word(a, b)))
        ) {
            let (s, t) = duality::decompose_inner_product(&u, &v).unwrap();
            prop_assert_eq!(w_map_word(&u).dot(&w_map_word(&v)), s ^ t);
        }

        #[test]
        fn image_properties(c in codes()) {
            prop_assert!(check_w_dual_containment(&c));
            let img = w_map_code(&c);
            prop_assert_eq!(img.dimension(), c.dimension());
            if is_image_lcd(&img) {
                prop_assert!(duality::hull_is_trivial(&c));
            }
            if predicate_th44(&c).holds() || predicate_prop_th30(&c).holds() {
                prop_assert!(is_image_lcd(&img));
            }
        }

        #[test]
        fn lemma30_holds_for_self_orthogonal_codes(
            (beta, rows) in (1usize..=4)
                .prop_flat_map(|b| (Just(b), proptest::collection::vec(word(0, b), 0..=6)))
        ) {
            let c = AdditiveCode::from_rows(0, beta, rows).unwrap();
            let so = duality::hull(&c);
            prop_assert_eq!(check_lemma30_identities(&so), Ok(true));
        }
    }
}
