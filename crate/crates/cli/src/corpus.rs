//! Worked-example corpus: code files whose `expect:` lines are checked
//! against freshly computed reports.

use std::collections::BTreeSet;
use std::fs;
use std::path::Path;

use acd_core::duality;
use acd_core::metrics::BestKnownTable;
use acd_core::wmap;
use acd_core::{AdditiveCode, MixedWord};
use serde::Serialize;

use crate::codefile::{parse_row, CodeFile};
use crate::report::{binary_rows, f4_rows, AnalysisReport};

macro_rules! corpus {
    ($($id:literal),* $(,)?) => {
        &[$(($id, include_str!(concat!("../corpus/", $id, ".acd")))),*]
    };
}

/// The embedded corpus as `(id, file text)` pairs.
pub const EMBEDDED: &[(&str, &str)] = corpus![
    "mixed-dual",
    "case-one",
    "case-two",
    "case-three",
    "no-case",
    "zero-offdiagonal",
    "identity-gram",
    "lcd-binary-part",
    "binary-part-not-lcd",
    "identity-binary-block",
    "self-orthogonal-binary-part",
    "non-acd-quaternary-part",
    "self-dual-binary-part",
    "diagonal-quaternary-gram",
    "two-pair-block",
    "punctured-acd-counterexample",
    "self-orthogonal-quaternary-part",
    "th44-block",
    "omega-identity-image",
    "acd-with-singular-image",
    "length-sixteen-image",
    "length-seven-lcd-image",
    "length-seven-singular-image",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Example {
    pub id: String,
    pub text: String,
}

pub fn embedded() -> Vec<Example> {
    EMBEDDED
        .iter()
        .map(|(id, text)| Example {
            id: id.to_string(),
            text: text.to_string(),
        })
        .collect()
}

/// Reads every `*.acd` file of `dir`, sorted by name.
pub fn load_dir(dir: &Path) -> Result<Vec<Example>, String> {
    let entries = fs::read_dir(dir)
        .map_err(|e| format!("cannot read corpus directory {}: {e}", dir.display()))?;
    let mut out = Vec::new();
    for entry in entries {
        let path = entry.map_err(|e| format!("{}: {e}", dir.display()))?.path();
        if path.extension().is_some_and(|x| x == "acd") {
            let text = fs::read_to_string(&path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            let id = path
                .file_stem()
                .unwrap_or_default()
                .to_string_lossy()
                .into_owned();
            out.push(Example { id, text });
        }
    }
    if out.is_empty() {
        return Err(format!(
            "no .acd files in corpus directory {}",
            dir.display()
        ));
    }
    out.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExampleResult {
    pub id: String,
    pub pass: bool,
    pub checked: usize,
    pub failures: Vec<String>,
}

/// Checks every expectation of `example`. A file without expectations fails.
pub fn check(example: &Example, table: &BestKnownTable, cap: u64) -> ExampleResult {
    let mut failures = Vec::new();
    let mut checked = 0;
    match CodeFile::parse(&example.text) {
        Err(e) => failures.push(format!("parse error: {e}")),
        Ok(file) if file.expectations.is_empty() => failures.push("no expectations".to_string()),
        Ok(file) => {
            let code = file.code();
            match AnalysisReport::of(&code, table, cap) {
                Err(e) => failures.push(format!("analysis failed: {e}")),
                Ok(report) => {
                    let ctx = Context { code, report };
                    for (key, expected) in &file.expectations {
                        checked += 1;
                        if let Err(msg) = ctx.expect(key, expected) {
                            failures.push(format!("{key}: {msg}"));
                        }
                    }
                }
            }
        }
    }
    ExampleResult {
        id: example.id.clone(),
        pass: failures.is_empty(),
        checked,
        failures,
    }
}

struct Context {
    code: AdditiveCode,
    report: AnalysisReport,
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

fn tri(b: Option<bool>) -> String {
    b.map_or_else(|| "na".to_string(), yes_no)
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "none".to_string(), |x| x.to_string())
}

fn compact(rows: &[String]) -> String {
    rows.iter()
        .map(|r| r.replace(' ', ""))
        .collect::<Vec<_>>()
        .join(";")
}

fn equal(expected: &str, found: String) -> Result<(), String> {
    if expected == found {
        Ok(())
    } else {
        Err(format!("expected {expected}, found {found}"))
    }
}

impl Context {
    fn word(&self, alpha: usize, beta: usize, text: &str) -> Result<MixedWord, String> {
        parse_row(text, alpha, beta, 1).map_err(|e| format!("bad word {text:?}: {}", e.message))
    }

    fn words(&self, alpha: usize, beta: usize, list: &str) -> Result<AdditiveCode, String> {
        let rows = list
            .split(';')
            .map(|w| self.word(alpha, beta, w))
            .collect::<Result<Vec<_>, _>>()?;
        AdditiveCode::from_rows(alpha, beta, rows).map_err(|e| e.to_string())
    }

    fn same_code(&self, expected: &str, found: &AdditiveCode) -> Result<(), String> {
        let want = self.words(found.alpha(), found.beta(), expected)?;
        if want.same_code(found) {
            Ok(())
        } else {
            let rows: Vec<String> = found.rows().iter().map(|r| r.to_string()).collect();
            Err(format!(
                "expected span of {expected}, found span of {}",
                rows.join(" ")
            ))
        }
    }

    fn contains(&self, expected: &str, c: &AdditiveCode) -> Result<(), String> {
        for w in expected.split(';') {
            if !c.contains(&self.word(c.alpha(), c.beta(), w)?) {
                return Err(format!("{w} is not a codeword"));
            }
        }
        Ok(())
    }

    fn expect(&self, key: &str, v: &str) -> Result<(), String> {
        let r = &self.report;
        let c = &self.code;
        let a = &r.acd;
        let img = &r.image;
        let dist = &img.distance;
        match key {
            "type" => equal(v, r.code_type.display.clone()),
            "size" => equal(v, r.cardinality.to_string()),
            "acd" => equal(v, yes_no(a.acd)),
            "witness" => equal(v, opt(a.witness.clone())),
            "hull_dim" => equal(v, a.hull_dimension.to_string()),
            "cases" => equal(v, opt(a.three_cases.clone())),
            "matched" if v == "none" => equal(
                v,
                if a.matched.is_empty() {
                    "none".into()
                } else {
                    a.matched.join(",")
                },
            ),
            "matched" => {
                let have: BTreeSet<&str> = a.matched.iter().map(String::as_str).collect();
                match v.split(',').find(|m| !have.contains(m)) {
                    None => Ok(()),
                    Some(m) => Err(format!(
                        "{m} not among matched conditions {}",
                        a.matched.join(",")
                    )),
                }
            }
            "not_matched" => match v.split(',').find(|m| a.matched.iter().any(|x| x == m)) {
                None => Ok(()),
                Some(m) => Err(format!("{m} unexpectedly matched")),
            },
            "gram" => equal(v, compact(&r.gram)),
            "gram_det" => equal(v, r.gram_det.clone()),
            "y_gram" => equal(v, compact(&f4_rows(&duality::quaternary_gram(c)))),
            "y_gram_det" => equal(v, duality::quaternary_gram(c).determinant().to_string()),
            "dual" => self.same_code(v, &duality::dual_code(c)),
            "dual_contains" => self.contains(v, &duality::dual_code(c)),
            "hull_contains" => self.contains(v, &duality::hull(c)),
            "dual_size" => equal(v, r.dual.cardinality.to_string()),
            "wdual" => self.same_code(v, wmap::w_map_code(&duality::dual_code(c)).image()),
            "wdual_size" => equal(v, r.dual.image_of_dual_cardinality.to_string()),
            "wperp_size" => equal(v, r.dual.dual_of_image_cardinality.to_string()),
            "cx" => self.same_code(v, &c.puncture_x()),
            "cy" => self.same_code(v, &c.puncture_y()),
            "cy_contains" => self.contains(v, &c.puncture_y()),
            "cy_dual_contains" => self.contains(v, &duality::dual_code(&c.puncture_y())),
            "cx_lcd" => equal(v, tri(r.punctured.x.lcd)),
            "cx_so" => equal(v, yes_no(r.punctured.x.self_orthogonal)),
            "cx_acd" => equal(v, yes_no(r.punctured.x.acd)),
            "cy_lcd" => equal(v, tri(r.punctured.y.lcd)),
            "cy_so" => equal(v, yes_no(r.punctured.y.self_orthogonal)),
            "cy_acd" => equal(v, yes_no(r.punctured.y.acd)),
            "cy_lemma30" => equal(v, tri(wmap::check_lemma30_identities(&c.puncture_y()).ok())),
            "separable" => equal(v, yes_no(r.separable)),
            "cor25" => equal(v, yes_no(duality::predicate_cor25(c))),
            "cor33" => equal(v, yes_no(duality::predicate_cor33(c))),
            "wimage" => equal(v, compact(&img.rows)),
            "image_gram" => equal(v, compact(&img.gram)),
            "image_gram_det" => equal(v, img.gram_det.to_string()),
            "image_lcd" => equal(v, yes_no(img.lcd)),
            "image_n" => equal(v, dist.n.to_string()),
            "image_k" => equal(v, dist.k.to_string()),
            "image_d" => equal(v, opt(dist.d)),
            "best_known" => equal(v, opt(dist.best_known)),
            "optimality" => equal(v, dist.optimality.clone()),
            "gap" => equal(v, opt(dist.gap)),
            "th44" => equal(v, check_word(&img.th44)),
            "th44_matrix" => equal(v, compact(&binary_rows(&wmap::th44_matrix(c)))),
            "prop_th30" => equal(v, check_word(&img.prop_th30)),
            "infer" => equal(v, opt(img.inferred.clone())),
            "g1" => equal(
                v,
                compact(&binary_rows(&wmap::split_quaternary_generators(c).0)),
            ),
            "g2" => equal(
                v,
                compact(&binary_rows(&wmap::split_quaternary_generators(c).1)),
            ),
            _ => Err("unknown expectation key".to_string()),
        }
    }
}

/// `satisfied`, `unsatisfied` or `unmet`.
fn check_word(rendered: &str) -> String {
    if rendered.starts_with("hypothesis unmet") {
        "unmet".to_string()
    } else {
        rendered.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(text: &str) -> ExampleResult {
        let ex = Example {
            id: "t".into(),
            text: text.into(),
        };
        check(&ex, &BestKnownTable::builtin(), 1 << 20)
    }

    #[test]
    fn passing_and_failing_expectations() {
        let ok = run("alpha=1 beta=1\n1 | 1\nexpect: acd=yes size=2 wimage=110\n");
        assert!(ok.pass, "{:?}", ok.failures);
        assert_eq!(ok.checked, 3);
        let bad = run("alpha=1 beta=1\n1 | 1\nexpect: acd=no bogus=1\n");
        assert!(!bad.pass);
        assert_eq!(bad.failures.len(), 2);
        assert!(bad.failures[1].contains("unknown expectation key"));
    }

    #[test]
    fn files_without_expectations_fail() {
        assert!(!run("alpha=1 beta=1\n1 | 1\n").pass);
        assert!(!run("alpha=1 beta=1\n1 | 2\nexpect: acd=yes\n").pass);
    }

    #[test]
    fn embedded_corpus_passes() {
        for ex in embedded() {
            let r = check(&ex, &BestKnownTable::builtin(), 1 << 24);
            assert!(r.pass, "{}: {:?}", r.id, r.failures);
        }
    }
}
