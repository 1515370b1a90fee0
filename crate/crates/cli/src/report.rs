//! Analysis, dual and image reports with matching text and JSON renderings.

use std::fmt::{self, Write as _};

use acd_core::code::type_report;
use acd_core::duality::{self, Condition};
use acd_core::metrics::{image_distance, BestKnownTable, DistanceReport, Optimality};
use acd_core::wmap::{self, WImage};
use acd_core::{AdditiveCode, BinaryMatrix, F4Matrix, Result};
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub alpha: usize,
    pub beta: usize,
    pub dimension: usize,
    pub cardinality: u128,
    pub rows: Vec<String>,
    #[serde(rename = "type")]
    pub code_type: TypeSummary,
    pub gram: Vec<String>,
    pub gram_det: String,
    pub acd: AcdSummary,
    pub dual: DualReport,
    pub punctured: Punctured,
    pub separable: bool,
    pub image: ImageReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypeSummary {
    pub display: String,
    pub k1: usize,
    pub k2p: usize,
    pub k2pp: usize,
    pub dim_cx: usize,
    pub dim_cb_x: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AcdSummary {
    pub verdict: String,
    pub acd: bool,
    pub trivial: bool,
    pub witness: Option<String>,
    pub matched: Vec<String>,
    pub three_cases: Option<String>,
    pub hull_dimension: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualReport {
    pub dimension: usize,
    pub cardinality: u128,
    pub rows: Vec<String>,
    /// |W(C^perp)|.
    pub image_of_dual_cardinality: u128,
    /// |W(C)^perp|.
    pub dual_of_image_cardinality: u128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Punctured {
    pub x: PuncturedSummary,
    pub y: PuncturedSummary,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PuncturedSummary {
    pub length: usize,
    pub dimension: usize,
    /// `None` when LCD is undefined: a quaternary part that is not F4-linear.
    pub lcd: Option<bool>,
    pub self_orthogonal: bool,
    pub acd: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ImageReport {
    pub length: usize,
    pub dimension: usize,
    pub rows: Vec<String>,
    pub gram: Vec<String>,
    pub gram_det: u8,
    pub lcd: bool,
    pub th44: String,
    pub prop_th30: String,
    pub inferred: Option<String>,
    pub distance: DistanceSummary,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistanceSummary {
    pub n: usize,
    pub k: usize,
    pub d: Option<usize>,
    pub weight_distribution: Vec<u64>,
    pub best_known: Option<usize>,
    pub optimality: String,
    pub gap: Option<usize>,
}

impl From<&DistanceReport> for DistanceSummary {
    fn from(r: &DistanceReport) -> Self {
        let (optimality, gap) = match r.optimality {
            Optimality::Optimal => ("optimal", None),
            Optimality::NearOptimal(g) => ("near-optimal", Some(g)),
            Optimality::Unknown => ("unknown", None),
        };
        DistanceSummary {
            n: r.n,
            k: r.k,
            d: r.d,
            weight_distribution: r.weight_distribution.clone(),
            best_known: r.best_known,
            optimality: optimality.to_string(),
            gap,
        }
    }
}

pub fn binary_rows(m: &BinaryMatrix) -> Vec<String> {
    m.rows().iter().map(|r| r.to_string()).collect()
}

pub fn f4_rows(m: &F4Matrix) -> Vec<String> {
    (0..m.nrows())
        .map(|i| {
            m.row(i)
                .iter()
                .map(|z| z.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect()
}

fn word_rows(c: &AdditiveCode) -> Vec<String> {
    c.rows().iter().map(|r| r.to_string()).collect()
}

impl DualReport {
    pub fn of(c: &AdditiveCode) -> DualReport {
        let d = duality::dual_code(c);
        DualReport {
            dimension: d.dimension(),
            cardinality: d.cardinality(),
            rows: word_rows(&d),
            image_of_dual_cardinality: wmap::w_map_code(&d).image().cardinality(),
            dual_of_image_cardinality: duality::dual_code(wmap::w_map_code(c).image())
                .cardinality(),
        }
    }
}

fn punctured(c: &AdditiveCode) -> PuncturedSummary {
    PuncturedSummary {
        length: c.length(),
        dimension: c.dimension(),
        lcd: duality::is_lcd_linear(c).ok(),
        self_orthogonal: duality::is_self_orthogonal(c),
        acd: duality::hull_is_trivial(c),
    }
}

impl ImageReport {
    pub fn of(c: &AdditiveCode, table: &BestKnownTable, cap: u64) -> Result<ImageReport> {
        let image: WImage = wmap::w_map_code(c);
        let gram = wmap::image_gram(&image);
        let distance = image_distance(c, table, cap)?;
        Ok(ImageReport {
            length: image.length(),
            dimension: image.dimension(),
            rows: binary_rows(&image.generator_matrix()),
            gram: binary_rows(&gram),
            gram_det: gram.determinant(),
            lcd: wmap::is_image_lcd(&image),
            th44: wmap::predicate_th44(c).to_string(),
            prop_th30: wmap::predicate_prop_th30(c).to_string(),
            inferred: wmap::infer_acd_from_image(c).map(|v| v.to_string()),
            distance: DistanceSummary::from(&distance),
        })
    }
}

impl AnalysisReport {
    pub fn of(c: &AdditiveCode, table: &BestKnownTable, cap: u64) -> Result<AnalysisReport> {
        let tr = type_report(c);
        let gram = duality::gram_matrix(c);
        let cert = duality::is_acd(c);
        let three = duality::classify_three_cases(c);
        Ok(AnalysisReport {
            alpha: c.alpha(),
            beta: c.beta(),
            dimension: c.dimension(),
            cardinality: c.cardinality(),
            rows: word_rows(c),
            code_type: TypeSummary {
                display: tr.code_type.to_string(),
                k1: tr.code_type.k1,
                k2p: tr.code_type.k2p,
                k2pp: tr.code_type.k2pp,
                dim_cx: tr.dim_cx,
                dim_cb_x: tr.dim_cb_x,
            },
            gram: f4_rows(gram.matrix()),
            gram_det: gram.determinant().to_string(),
            acd: AcdSummary {
                verdict: cert.verdict.to_string(),
                acd: cert.is_acd(),
                trivial: c.is_zero(),
                witness: cert.witness.as_ref().map(|w| w.to_string()),
                matched: cert
                    .matched_conditions
                    .iter()
                    .map(|m| Condition::name(*m).to_string())
                    .collect(),
                three_cases: three.map(|m| m.name().to_string()),
                hull_dimension: cert.hull_dimension,
            },
            dual: DualReport::of(c),
            punctured: Punctured {
                x: punctured(&c.puncture_x()),
                y: punctured(&c.puncture_y()),
            },
            separable: c.is_separable(),
            image: ImageReport::of(c, table, cap)?,
        })
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn opt<T: fmt::Display>(v: &Option<T>) -> String {
    v.as_ref()
        .map_or_else(|| "-".to_string(), |x| x.to_string())
}

fn list(items: &[String], sep: &str) -> String {
    if items.is_empty() {
        "-".to_string()
    } else {
        items.join(sep)
    }
}

impl fmt::Display for DistanceSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let weights: Vec<String> = self
            .weight_distribution
            .iter()
            .map(u64::to_string)
            .collect();
        write!(
            f,
            "[{},{},{}] best known {}, {}",
            self.n,
            self.k,
            opt(&self.d),
            opt(&self.best_known),
            self.optimality
        )?;
        if let Some(g) = self.gap {
            write!(f, " (gap {g})")?;
        }
        write!(f, "; weights {}", weights.join(" "))
    }
}

impl fmt::Display for DualReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "dual: dimension {}, {} words; generators {}",
            self.dimension,
            self.cardinality,
            list(&self.rows, " ")
        )?;
        write!(
            f,
            "|W(dual)| = {}, |dual of W(C)| = {}",
            self.image_of_dual_cardinality, self.dual_of_image_cardinality
        )
    }
}

impl fmt::Display for ImageReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "W image: length {}, dimension {}, LCD {}, gram det {}",
            self.length,
            self.dimension,
            yes_no(self.lcd),
            self.gram_det
        )?;
        writeln!(f, "W image rows: {}", list(&self.rows, " "))?;
        writeln!(f, "W image gram: {}", list(&self.gram, " "))?;
        writeln!(f, "th44: {}", self.th44)?;
        writeln!(f, "prop_th30: {}", self.prop_th30)?;
        writeln!(f, "inferred from image: {}", opt(&self.inferred))?;
        write!(f, "distance: {}", self.distance)
    }
}

impl fmt::Display for PuncturedSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "length {}, dimension {}, LCD {}, self-orthogonal {}, ACD {}",
            self.length,
            self.dimension,
            self.lcd.map_or("n/a", yes_no),
            yes_no(self.self_orthogonal),
            yes_no(self.acd)
        )
    }
}

impl fmt::Display for AnalysisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = &self.code_type;
        let a = &self.acd;
        writeln!(
            f,
            "code: alpha {}, beta {}, dimension {}, {} words",
            self.alpha, self.beta, self.dimension, self.cardinality
        )?;
        writeln!(f, "rows: {}", list(&self.rows, " "))?;
        writeln!(
            f,
            "type: {} (k1 {}, k2' {}, k2'' {}; dim C_X {}, dim (C_b)_X {})",
            t.display, t.k1, t.k2p, t.k2pp, t.dim_cx, t.dim_cb_x
        )?;
        writeln!(f, "gram: {}; det {}", list(&self.gram, "; "), self.gram_det)?;
        let mut line = String::new();
        if a.acd && a.trivial {
            line.push_str("ACD: yes (trivially)");
        } else if a.acd {
            write!(line, "ACD: yes; matched: {}", list(&a.matched, ", ")).unwrap();
        } else {
            write!(line, "ACD: no; witness: {}", opt(&a.witness)).unwrap();
            if !a.matched.is_empty() {
                write!(line, "; matched: {}", a.matched.join(", ")).unwrap();
            }
        }
        writeln!(f, "{line}")?;
        writeln!(
            f,
            "verdict: {}; three cases: {}; hull dimension {}",
            a.verdict,
            opt(&a.three_cases),
            a.hull_dimension
        )?;
        writeln!(f, "{}", self.dual)?;
        writeln!(f, "C_X: {}", self.punctured.x)?;
        writeln!(f, "C_Y: {}", self.punctured.y)?;
        writeln!(f, "separable: {}", yes_no(self.separable))?;
        write!(f, "{}", self.image)
    }
}
