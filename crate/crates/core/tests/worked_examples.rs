use acd_core::duality::{self, Condition, Verdict};
use acd_core::metrics::{image_distance, BestKnownTable, Optimality};
use acd_core::wmap;
use acd_core::{AdditiveCode, BinaryMatrix, CodeType, F4Matrix, MixedWord, F4};

/// Parses rows like `"11|w1"`: binary digits, a bar, then 0/1/w/W.
fn code(rows: &[&str]) -> AdditiveCode {
    let words: Vec<MixedWord> = rows.iter().map(|r| word(r)).collect();
    let (alpha, beta) = words[0].shape();
    AdditiveCode::from_rows(alpha, beta, words).unwrap()
}

fn word(text: &str) -> MixedWord {
    let (x, y) = text.split_once('|').unwrap();
    let x: Vec<u8> = x.bytes().map(|b| b - b'0').collect();
    let y: Vec<F4> = y.chars().map(|c| F4::from_symbol(c).unwrap()).collect();
    MixedWord::new(&x, &y)
}

fn ty(s: &str) -> CodeType {
    let nums: Vec<usize> = s
        .split(|c: char| !c.is_ascii_digit())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().unwrap())
        .collect();
    CodeType {
        alpha: nums[0],
        beta: nums[1],
        k1: nums[2],
        k2p: nums[3],
        k2pp: nums[4],
    }
}

fn f4m(rows: &[&str]) -> F4Matrix {
    F4Matrix::from_rows(
        &rows
            .iter()
            .map(|r| r.chars().map(|c| F4::from_symbol(c).unwrap()).collect())
            .collect::<Vec<_>>(),
    )
}

const MIXED: &[&str] = &["11|w1", "01|Ww"];
const CASE2: &[&str] = &["10|1", "01|w"];
const CASE3: &[&str] = &["1010|1w", "0101|wW"];
const NO_CASE: &[&str] = &["10|00w", "01|1w0", "00|ww0"];
const ZERO_OFF: &[&str] = &["10|wW1", "01|W1w"];
const INVERTIBLE: &[&str] = &["11|1", "01|w"];
const EXA11: &[&str] = &["11|11", "01|ww"];
const COR25: &[&str] = &["101|11", "010|ww"];
const PROP29: &[&str] = &["10|11", "01|ww"];
const TH27: &[&str] = &["1111|1", "1100|w"];
const COR33: &[&str] = &["1111|1wW", "0101|wW1"];
const COR35: &[&str] = &["1010|wW", "0101|W1"];
const TH37: &[&str] = &["11|00w", "00|1w0", "00|w10"];
const PROP38: &[&str] = &["111111|10", "110000|01", "001100|w0", "111100|0w"];
const COUNTER: &[&str] = &["11|00ww", "01|1w10", "00|w000"];
const TH44: &[&str] = &["11|wW", "00|01"];
const LEN16: &[&str] = &[
    "1011|0000w0",
    "0101|0000ww",
    "0010|10w011",
    "0001|010w10",
    "0000|w0ww10",
    "0000|0ww001",
];
const LEN7_LCD: &[&str] = &["111|wW", "000|ww"];
const LEN7_SINGULAR: &[&str] = &["111|1W", "111|W1"];
const IMAGE_NOT_LCD: &[&str] = &["11|00w", "01|1w1", "00|w00"];

#[test]
fn stated_types() {
    let cases: &[(&[&str], &str)] = &[
        (MIXED, "(2,2;0,1,0)"),
        (CASE2, "(2,1;1,0,1)"),
        (CASE3, "(4,2;0,1,0)"),
        (NO_CASE, "(2,3;1,1,0)"),
        (ZERO_OFF, "(2,3;0,1,0)"),
        (INVERTIBLE, "(2,1;1,0,1)"),
        (EXA11, "(2,2;1,0,1)"),
        (COR25, "(3,2;1,0,1)"),
        (PROP29, "(2,2;1,0,1)"),
        (TH27, "(4,1;1,0,1)"),
        (COR33, "(4,3;0,1,0)"),
        (COR35, "(4,2;0,1,0)"),
        (TH37, "(2,3;1,1,0)"),
        (PROP38, "(6,2;2,0,2)"),
        (COUNTER, "(2,4;1,1,0)"),
        (TH44, "(2,2;1,0,1)"),
        (LEN16, "(4,6;2,2,0)"),
        (LEN7_LCD, "(3,2;1,0,1)"),
        (LEN7_SINGULAR, "(3,2;0,1,0)"),
        (IMAGE_NOT_LCD, "(2,3;1,1,0)"),
    ];
    for (rows, expected) in cases {
        let c = code(rows);
        assert_eq!(acd_core::compute_type(&c), ty(expected), "{rows:?}");
        assert_eq!(acd_core::compute_type(&c).to_string(), *expected);
    }
}

#[test]
fn mixed_example_dual_and_image_cardinalities() {
    let c = code(MIXED);
    let d = duality::dual_code(&c);
    assert!(d.same_code(&code(&["00|1w", "00|wW"])));
    let wd = wmap::w_map_code(&d);
    assert_eq!(wd.image().cardinality(), 4);
    let wc = wmap::w_map_code(&c);
    let wc_perp = duality::dual_code(wc.image());
    assert_eq!(wc_perp.cardinality(), 16);
    assert!(wd.image().is_subcode_of(&wc_perp));
    assert!(!wd.image().same_code(&wc_perp));
    assert!(wd.image().same_code(&code(&["001101|", "001011|"])));
    assert!(duality::check_cardinality_bound(&c));
    assert!(wmap::check_w_dual_containment(&c));
}

#[test]
fn three_case_examples() {
    assert_eq!(
        duality::classify_three_cases(&code(MIXED)),
        Some(Condition::CaseI)
    );
    assert_eq!(
        duality::classify_three_cases(&code(CASE2)),
        Some(Condition::CaseII)
    );
    assert_eq!(
        duality::classify_three_cases(&code(CASE3)),
        Some(Condition::CaseIII)
    );
    assert_eq!(
        duality::gram_matrix(&code(MIXED)).matrix(),
        &f4m(&["w1", "1W"])
    );
    assert_eq!(
        duality::gram_matrix(&code(CASE2)).matrix(),
        &f4m(&["Ww", "w1"])
    );
    assert_eq!(
        duality::gram_matrix(&code(CASE3)).matrix(),
        &f4m(&["wW", "W1"])
    );
    for rows in [MIXED, CASE2, CASE3] {
        assert!(duality::is_acd(&code(rows)).is_acd());
    }
}

#[test]
fn no_case_example_is_acd() {
    let c = code(NO_CASE);
    let cert = duality::is_acd(&c);
    assert_eq!(cert.verdict, Verdict::Acd);
    assert_eq!(duality::classify_three_cases(&c), None);
    assert!(!cert
        .matched_conditions
        .iter()
        .any(|m| matches!(m, Condition::CaseI | Condition::CaseII | Condition::CaseIII)));
    assert_eq!(
        duality::gram_matrix(&c).matrix(),
        &f4m(&["100", "001", "010"])
    );
}

#[test]
fn diagonal_gram_examples() {
    let z = code(ZERO_OFF);
    assert!(duality::classify_zero_offdiagonal(&z));
    assert_eq!(duality::gram_matrix(&z).matrix(), &f4m(&["w0", "0w"]));
    let inv = code(INVERTIBLE);
    assert_eq!(duality::gram_matrix(&inv).matrix(), &F4Matrix::identity(2));
    assert!(duality::is_acd(&inv)
        .matched_conditions
        .contains(&Condition::InvertibleDiagonalGram));
}

#[test]
fn punctured_code_verdicts() {
    let named: &[(&[&str], Condition)] = &[
        (EXA11, Condition::Th23),
        (PROP29, Condition::Prop29),
        (TH27, Condition::Th27),
        (COR35, Condition::Cor35),
        (TH37, Condition::Th37),
        (PROP38, Condition::Prop38),
    ];
    for (rows, cond) in named {
        let cert = duality::is_acd(&code(rows));
        assert!(cert.is_acd(), "{rows:?}");
        assert!(
            cert.matched_conditions.contains(cond),
            "{rows:?}: {:?}",
            cert.matched_conditions
        );
    }
    for rows in [COR25, COR33] {
        assert_eq!(duality::is_acd(&code(rows)).verdict, Verdict::NotAcd);
    }
    assert!(duality::predicate_cor25(&code(COR25)));
    assert!(duality::predicate_cor33(&code(COR33)));
}

#[test]
fn punctured_codes_of_exa11() {
    let c = code(EXA11);
    assert!(c.puncture_x().same_code(&AdditiveCode::ambient(2, 0)));
    assert!(duality::is_self_orthogonal(&c.puncture_y()));
    assert_eq!(duality::is_lcd_linear(&c.puncture_x()), Ok(true));
    assert_eq!(duality::is_lcd_linear(&code(COR25).puncture_x()), Ok(false));
    assert!(!c.is_separable());
    assert_eq!(wmap::check_lemma30_identities(&c.puncture_y()), Ok(true));
}

#[test]
fn cor33_quaternary_part() {
    let c = code(COR33);
    let cy = c.puncture_y();
    assert!(cy.contains(&word("|1wW")));
    assert!(duality::dual_code(&cy).contains(&word("|1wW")));
    // The first generator is orthogonal to both generators, so it is a
    // nonzero hull word.
    assert!(duality::dual_code(&c).contains(&word("1111|1wW")));
    assert!(duality::hull(&c).contains(&word("1111|1wW")));
}

#[test]
fn counterexample_with_acd_punctured_codes() {
    let c = code(COUNTER);
    let cert = duality::is_acd(&c);
    assert_eq!(cert.verdict, Verdict::NotAcd);
    assert_eq!(cert.witness, Some(word("11|00ww")));
    assert_eq!(duality::is_lcd_linear(&c.puncture_x()), Ok(true));
    assert!(duality::hull_is_trivial(&c.puncture_y()));
    assert!(!wmap::is_image_lcd(&wmap::w_map_code(&c)));
}

#[test]
fn th37_quaternary_gram() {
    let g = duality::quaternary_gram(&code(TH37));
    assert_eq!(g, f4m(&["W00", "0w0", "00w"]));
    assert_eq!(g.determinant(), F4::OMEGA);
}

#[test]
fn th44_example() {
    let c = code(TH44);
    let (g1, g2) = wmap::split_quaternary_generators(&c);
    assert_eq!(g1, BinaryMatrix::from_literal(&[&[0, 1], &[0, 1]]));
    assert_eq!(g2, BinaryMatrix::from_literal(&[&[1, 1], &[0, 0]]));
    assert_eq!(wmap::predicate_th44(&c), wmap::Check::Satisfied);
    assert!(wmap::is_image_lcd(&wmap::w_map_code(&c)));
}

#[test]
fn prop46_quaternary_block_is_self_orthogonal() {
    let cy = code(ZERO_OFF).puncture_y();
    assert!(duality::is_self_orthogonal(&cy));
    assert_eq!(wmap::check_lemma30_identities(&cy), Ok(true));
    assert!(wmap::is_image_lcd(&wmap::w_map_code(&code(ZERO_OFF))));
}

#[test]
fn two_pair_example_image() {
    let c = code(PROP38);
    assert_eq!(wmap::predicate_prop_th30(&c), wmap::Check::Satisfied);
    assert_eq!(wmap::image_gram(&wmap::w_map_code(&c)).determinant(), 1);
}

#[test]
fn length_sixteen_image() {
    let c = code(LEN16);
    let img = wmap::w_map_code(&c);
    let gram = wmap::image_gram(&img);
    assert_eq!(gram.determinant(), 1);
    let expected = BinaryMatrix::from_literal(&[
        &[1, 1, 0, 0, 1, 0],
        &[1, 0, 0, 0, 1, 1],
        &[0, 0, 0, 1, 0, 1],
        &[0, 0, 1, 1, 1, 1],
        &[1, 1, 0, 1, 1, 0],
        &[0, 1, 1, 1, 0, 1],
    ]);
    assert_eq!(gram, expected);
    let image_rows = BinaryMatrix::from_literal(&[
        &[1, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0],
        &[0, 1, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 1],
        &[0, 0, 1, 0, 1, 0, 1, 0, 1, 1, 0, 0, 1, 0, 0, 0],
        &[0, 0, 0, 1, 0, 1, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0],
        &[0, 0, 0, 0, 1, 0, 1, 1, 1, 0, 1, 0, 1, 1, 0, 0],
        &[0, 0, 0, 0, 0, 1, 1, 0, 0, 1, 0, 1, 1, 0, 0, 0],
    ]);
    assert_eq!(img.generator_matrix(), image_rows);
    let r = image_distance(&c, &BestKnownTable::builtin(), 1 << 24).unwrap();
    assert_eq!((r.n, r.k, r.d), (16, 6, Some(5)));
    assert_eq!(r.best_known, Some(6));
    assert_eq!(r.optimality, Optimality::NearOptimal(1));
    assert_eq!(wmap::infer_acd_from_image(&c), Some(Verdict::Acd));
}

#[test]
fn length_seven_images() {
    let table = BestKnownTable::builtin();
    let lcd = code(LEN7_LCD);
    assert_eq!(wmap::image_gram(&wmap::w_map_code(&lcd)).determinant(), 1);
    let r = image_distance(&lcd, &table, 1 << 24).unwrap();
    assert_eq!(
        (r.n, r.k, r.d, r.optimality),
        (7, 2, Some(4), Optimality::Optimal)
    );

    let singular = code(LEN7_SINGULAR);
    assert_eq!(
        wmap::image_gram(&wmap::w_map_code(&singular)).determinant(),
        0
    );
    assert_eq!(
        image_distance(&singular, &table, 1 << 24).unwrap().d,
        Some(4)
    );
    assert!(duality::is_acd(&singular).is_acd());
    assert_eq!(wmap::infer_acd_from_image(&singular), None);
    assert_eq!(
        duality::classify_three_cases(&singular),
        Some(Condition::CaseII)
    );
}

#[test]
fn acd_code_with_singular_image() {
    let c = code(IMAGE_NOT_LCD);
    let gram = wmap::image_gram(&wmap::w_map_code(&c));
    assert_eq!(
        gram,
        BinaryMatrix::from_literal(&[&[0, 0, 0], &[0, 1, 1], &[0, 1, 0]])
    );
    assert_eq!(gram.determinant(), 0);
    assert!(duality::is_acd(&c).is_acd());
    assert_eq!(wmap::infer_acd_from_image(&c), None);
}

#[test]
fn binary_subcode_of_small_code() {
    let c = code(&["1|w", "0|1"]);
    assert!(c.binary_subcode().same_code(&code(&["0|1"])));
}
