//! Text format for generator matrices.
//!
//! ```text
//! # comment
//! alpha=2 beta=2
//! 1 1 | w 1
//! 0 1 | W w
//! expect: acd=yes type=(2,2;0,1,0)
//! ```
//!
//! The first non-comment line is the header. Each further line is either a
//! generator row or an `expect:` line of `key=value` pairs. In a row, `w`
//! is w and `W` is w^2; spaces and `|` are ignored; binary positions accept
//! only `0` and `1`.

use std::fmt;

use acd_core::{AdditiveCode, BitVector, MixedWord, F4};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeFile {
    pub alpha: usize,
    pub beta: usize,
    pub rows: Vec<MixedWord>,
    pub expectations: Vec<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

fn error(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        message: message.into(),
    }
}

impl CodeFile {
    pub fn new(alpha: usize, beta: usize, rows: Vec<MixedWord>) -> Self {
        CodeFile {
            alpha,
            beta,
            rows,
            expectations: Vec::new(),
        }
    }

    pub fn from_code(code: &AdditiveCode) -> Self {
        CodeFile::new(code.alpha(), code.beta(), code.rows().to_vec())
    }

    pub fn parse(text: &str) -> Result<CodeFile, ParseError> {
        let mut header = None;
        let mut rows = Vec::new();
        let mut expectations = Vec::new();
        for (index, raw) in text.lines().enumerate() {
            let line_no = index + 1;
            let content = raw.split('#').next().unwrap_or("");
            if content.trim().is_empty() {
                continue;
            }
            let Some((alpha, beta)) = header else {
                header = Some(parse_header(content, line_no)?);
                continue;
            };
            let trimmed = content.trim_start();
            if let Some(rest) = trimmed.strip_prefix("expect:") {
                let offset = content.len() - rest.len();
                expectations.extend(parse_expectations(rest, line_no, offset)?);
            } else {
                rows.push(parse_row(content, alpha, beta, line_no)?);
            }
        }
        let (alpha, beta) =
            header.ok_or_else(|| error(1, 1, "missing header \"alpha=<int> beta=<int>\""))?;
        Ok(CodeFile {
            alpha,
            beta,
            rows,
            expectations,
        })
    }

    /// The code spanned by the rows; dependent rows are dropped.
    pub fn code(&self) -> AdditiveCode {
        AdditiveCode::from_rows(self.alpha, self.beta, self.rows.clone())
            .expect("parsed rows have the header shape")
    }

    pub fn expectation(&self, key: &str) -> Option<&str> {
        self.expectations
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }
}

fn parse_header(content: &str, line: usize) -> Result<(usize, usize), ParseError> {
    let mut alpha = None;
    let mut beta = None;
    let mut column = 1;
    for token in content.split(' ') {
        if !token.trim().is_empty() {
            let token = token.trim();
            let (key, value) = token.split_once('=').ok_or_else(|| {
                error(
                    line,
                    column,
                    format!("expected key=value in header, found {token:?}"),
                )
            })?;
            let value: usize = value.parse().map_err(|_| {
                error(
                    line,
                    column + key.len() + 1,
                    format!("{value:?} is not a nonnegative integer"),
                )
            })?;
            let slot = match key {
                "alpha" => &mut alpha,
                "beta" => &mut beta,
                _ => return Err(error(line, column, format!("unknown header key {key:?}"))),
            };
            if slot.replace(value).is_some() {
                return Err(error(line, column, format!("duplicate header key {key:?}")));
            }
        }
        column += token.chars().count() + 1;
    }
    match (alpha, beta) {
        (Some(a), Some(b)) => Ok((a, b)),
        _ => Err(error(line, 1, "header must be \"alpha=<int> beta=<int>\"")),
    }
}

pub(crate) fn parse_row(
    content: &str,
    alpha: usize,
    beta: usize,
    line: usize,
) -> Result<MixedWord, ParseError> {
    let mut binary = Vec::with_capacity(alpha);
    let mut quaternary = Vec::with_capacity(beta);
    let mut last_column = 1;
    for (i, ch) in content.chars().enumerate() {
        let column = i + 1;
        if ch.is_whitespace() || ch == '|' {
            continue;
        }
        last_column = column;
        if binary.len() < alpha {
            match ch {
                '0' => binary.push(false),
                '1' => binary.push(true),
                _ => {
                    return Err(error(
                        line,
                        column,
                        format!("binary position accepts 0 or 1, found {ch:?}"),
                    ))
                }
            }
        } else if quaternary.len() < beta {
            let z = F4::from_symbol(ch).ok_or_else(|| {
                error(
                    line,
                    column,
                    format!("expected one of 0 1 w W, found {ch:?}"),
                )
            })?;
            quaternary.push(z);
        } else {
            return Err(error(
                line,
                column,
                format!("row has more than alpha + beta = {} symbols", alpha + beta),
            ));
        }
    }
    if binary.len() + quaternary.len() < alpha + beta {
        return Err(error(
            line,
            last_column,
            format!(
                "row has {} symbols, expected alpha + beta = {}",
                binary.len() + quaternary.len(),
                alpha + beta
            ),
        ));
    }
    Ok(MixedWord::from_parts(
        BitVector::from_bools(binary),
        quaternary,
    ))
}

fn parse_expectations(
    rest: &str,
    line: usize,
    offset: usize,
) -> Result<Vec<(String, String)>, ParseError> {
    let mut out = Vec::new();
    let mut column = offset + 1;
    for token in rest.split(' ') {
        let t = token.trim();
        if !t.is_empty() {
            match t.split_once('=') {
                Some((k, v)) if !k.is_empty() && !v.is_empty() => {
                    out.push((k.to_string(), v.to_string()))
                }
                _ => {
                    return Err(error(
                        line,
                        column,
                        format!("expected key=value, found {t:?}"),
                    ))
                }
            }
        }
        column += token.chars().count() + 1;
    }
    Ok(out)
}

/// A row as `1 1 | w 1`.
pub fn format_row(w: &MixedWord) -> String {
    let x: Vec<String> = (0..w.alpha())
        .map(|i| u8::from(w.binary(i)).to_string())
        .collect();
    let y: Vec<String> = (0..w.beta()).map(|j| w.quaternary(j).to_string()).collect();
    match (x.is_empty(), y.is_empty()) {
        (false, false) => format!("{} | {}", x.join(" "), y.join(" ")),
        (true, _) => format!("| {}", y.join(" ")),
        (false, true) => format!("{} |", x.join(" ")),
    }
}

/// Serializes in the format read by [`CodeFile::parse`].
impl fmt::Display for CodeFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "alpha={} beta={}", self.alpha, self.beta)?;
        for r in &self.rows {
            writeln!(f, "{}", format_row(r))?;
        }
        for (k, v) in &self.expectations {
            writeln!(f, "expect: {k}={v}")?;
        }
        Ok(())
    }
}
