//! Plain-text, JSON and CSV forms of qubit operators.
//!
//! The text format has one term per line, `<re> [<im>] <PAULI_STRING>`.
//! Lines starting with `#` are comments, blank lines are ignored, and a
//! `# qubits: n` comment fixes the qubit count, padding shorter strings with
//! identities on the high qubits.
//!
//! ```text
//! # H2, minimal basis
//! -0.0988 IIII
//! 0.1712 IIIZ
//! -0.0453 XXYY
//! ```

use std::fmt;
use std::str::FromStr;

use indexmap::IndexMap;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::pauli::{PauliKey, PauliString, PauliSum};

/// A parsed operator file: terms in first-appearance order plus comments.
#[derive(Debug, Clone, PartialEq)]
pub struct HamiltonianDocument {
    pub n: usize,
    pub entries: Vec<(Complex64, PauliString)>,
    /// Comment lines other than the `# qubits:` header, without the `#`.
    pub metadata: Vec<String>,
    /// Non-fatal findings such as merged duplicate terms.
    pub warnings: Vec<String>,
}

impl HamiltonianDocument {
    pub fn to_sum(&self) -> PauliSum {
        let mut sum = PauliSum::new(self.n).expect("document qubit count is validated");
        for (c, p) in &self.entries {
            sum.add_string(p, *c);
        }
        sum
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

fn qubits_header(comment: &str) -> Option<&str> {
    let rest = comment.trim_start_matches('#').trim();
    rest.strip_prefix("qubits:").map(str::trim)
}

fn parse_number(token: &str, line: usize) -> Result<f64> {
    let v: f64 = token.parse().map_err(|_| Error::Parse {
        line,
        message: format!("malformed number '{token}'"),
    })?;
    if !v.is_finite() {
        return Err(Error::Parse {
            line,
            message: format!("coefficient '{token}' is not finite"),
        });
    }
    Ok(v)
}

/// Parses the text term-list format.
pub fn parse(text: &str) -> Result<HamiltonianDocument> {
    let mut declared: Option<usize> = None;
    let mut metadata = Vec::new();
    let mut warnings = Vec::new();
    let mut raw: Vec<(usize, Complex64, String)> = Vec::new();

    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if trimmed.starts_with('#') {
            if let Some(value) = qubits_header(trimmed) {
                let n: usize = value.parse().map_err(|_| Error::Parse {
                    line: lineno,
                    message: format!("malformed qubit count '{value}'"),
                })?;
                declared = Some(n);
            } else {
                metadata.push(trimmed.trim_start_matches('#').trim().to_string());
            }
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        let (re, im, label) = match tokens.as_slice() {
            [re, label] => (parse_number(re, lineno)?, 0.0, *label),
            [re, im, label] => (parse_number(re, lineno)?, parse_number(im, lineno)?, *label),
            _ => {
                return Err(Error::Parse {
                    line: lineno,
                    message: format!("expected '<re> [<im>] <PAULI_STRING>', got '{trimmed}'"),
                })
            }
        };
        if let Some((pos, bad)) = label
            .chars()
            .enumerate()
            .find(|(_, c)| !matches!(c, 'I' | 'X' | 'Y' | 'Z'))
        {
            return Err(Error::Parse {
                line: lineno,
                message: format!("invalid Pauli character '{bad}' at position {pos}"),
            });
        }
        raw.push((lineno, Complex64::new(re, im), label.to_string()));
    }

    let first = raw
        .first()
        .ok_or_else(|| Error::Empty("document contains no terms".into()))?;
    let n = declared.unwrap_or(first.2.len());
    let mut merged: IndexMap<PauliKey, (usize, Complex64, PauliString)> = IndexMap::new();
    for (lineno, c, label) in raw {
        let len = label.chars().count();
        let fits = match declared {
            Some(d) => len <= d,
            None => len == n,
        };
        if !fits {
            return Err(Error::Parse {
                line: lineno,
                message: format!("string '{label}' has {len} qubits, expected {n}"),
            });
        }
        let padded = format!("{}{}", "I".repeat(n - len), label);
        let p: PauliString = padded.parse().map_err(|e: Error| Error::Parse {
            line: lineno,
            message: e.to_string(),
        })?;
        match merged.get_mut(&p.key()) {
            Some((first_line, acc, _)) => {
                *acc += c;
                warnings.push(format!(
                    "line {lineno}: duplicate term {padded} merged into line {first_line}"
                ));
            }
            None => {
                merged.insert(p.key(), (lineno, c, p));
            }
        }
    }

    Ok(HamiltonianDocument {
        n,
        entries: merged.into_values().map(|(_, c, p)| (c, p)).collect(),
        metadata,
        warnings,
    })
}

/// Output encodings for operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(Error::Format(format!("unknown format '{s}'"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Format::Text => "text",
            Format::Json => "json",
            Format::Csv => "csv",
        })
    }
}

/// Shortest decimal that parses back to the same `f64`.
fn format_number(v: f64) -> String {
    let a = v.abs();
    if a == 0.0 || (1e-4..1e15).contains(&a) {
        format!("{v}")
    } else {
        format!("{v:e}")
    }
}

/// Text form, terms ordered by descending magnitude.
pub fn emit_text(sum: &PauliSum) -> String {
    let mut out = String::new();
    if sum.is_empty() {
        out.push_str(&format!("# qubits: {}\n# 0 terms\n", sum.n()));
        return out;
    }
    for (k, c) in sum.sorted_terms() {
        let label = sum.label(&k);
        if c.im == 0.0 {
            out.push_str(&format!("{} {label}\n", format_number(c.re)));
        } else {
            out.push_str(&format!(
                "{} {} {label}\n",
                format_number(c.re),
                format_number(c.im)
            ));
        }
    }
    out
}

pub fn emit_json(sum: &PauliSum) -> String {
    let mut s = sum.to_json();
    s.push('\n');
    s
}

/// `string,re,im` rows after a header line.
pub fn emit_csv(sum: &PauliSum) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["string", "re", "im"]).expect("in-memory write");
    for (k, c) in sum.sorted_terms() {
        w.write_record([sum.label(&k), format_number(c.re), format_number(c.im)])
            .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii output")
}

pub fn emit(sum: &PauliSum, format: Format) -> String {
    match format {
        Format::Text => emit_text(sum),
        Format::Json => emit_json(sum),
        Format::Csv => emit_csv(sum),
    }
}

pub fn emit_document(doc: &HamiltonianDocument, format: Format) -> String {
    emit(&doc.to_sum(), format)
}

pub fn parse_csv(text: &str) -> Result<PauliSum> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let mut sum: Option<PauliSum> = None;
    for (i, rec) in r.records().enumerate() {
        let line = i + 2;
        let rec = rec.map_err(|e| Error::Parse {
            line,
            message: e.to_string(),
        })?;
        let label = rec.get(0).unwrap_or_default();
        let re = parse_number(rec.get(1).unwrap_or_default(), line)?;
        let im = match rec.get(2) {
            Some(t) if !t.is_empty() => parse_number(t, line)?,
            _ => 0.0,
        };
        let p: PauliString = label.parse().map_err(|e: Error| Error::Parse {
            line,
            message: e.to_string(),
        })?;
        let s = sum.get_or_insert(PauliSum::new(p.n())?);
        if s.n() != p.n() {
            return Err(Error::Parse {
                line,
                message: format!("string '{label}' has {} qubits, expected {}", p.n(), s.n()),
            });
        }
        s.add_string(&p, Complex64::new(re, im));
    }
    sum.ok_or_else(|| Error::Empty("CSV document contains no terms".into()))
}

/// An operator read from any supported encoding.
#[derive(Debug, Clone)]
pub struct OperatorInput {
    pub sum: PauliSum,
    pub warnings: Vec<String>,
}

/// Detects JSON (leading `{`), CSV (`string,` header) or the text format.
pub fn read_operator(text: &str) -> Result<OperatorInput> {
    let head = text.trim_start();
    if head.starts_with('{') {
        return Ok(OperatorInput {
            sum: PauliSum::from_json(text)?,
            warnings: Vec::new(),
        });
    }
    if head.starts_with("string,") {
        return Ok(OperatorInput {
            sum: parse_csv(text)?,
            warnings: Vec::new(),
        });
    }
    let doc = parse(text)?;
    Ok(OperatorInput {
        sum: doc.to_sum(),
        warnings: doc.warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projector::{build_projector, ProjectorSpec};

    #[test]
    fn parses_simple_document() {
        let doc = parse("0.5 IZ\n-0.25 XX\n").unwrap();
        assert_eq!(doc.n, 2);
        assert_eq!(doc.len(), 2);
        assert!(doc.warnings.is_empty());
        assert_eq!(doc.to_sum().coefficient_of("XX").unwrap().re, -0.25);
    }

    #[test]
    fn duplicates_merge_with_warning() {
        let doc = parse("1.0 IZ\n1.0 IZ\n").unwrap();
        assert_eq!(doc.len(), 1);
        assert_eq!(doc.entries[0].0, Complex64::new(2.0, 0.0));
        assert_eq!(doc.warnings.len(), 1);
    }

    #[test]
    fn bad_character_names_line_and_char() {
        let err = parse("0.5 IZQ\n").unwrap_err();
        match err {
            Error::Parse { line, message } => {
                assert_eq!(line, 1);
                assert!(message.contains("'Q'"), "{message}");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn other_errors() {
        assert!(matches!(parse("0.5 IZ\n0.1 X\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse("abc IZ\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse("inf IZ\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse("# only a comment\n\n"), Err(Error::Empty(_))));
        assert!(matches!(parse("1 2 3 IZ\n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn complex_and_scientific_coefficients() {
        let doc = parse("# name: test\n1.5e-3 -2E2 XY\n").unwrap();
        assert_eq!(doc.entries[0].0, Complex64::new(1.5e-3, -200.0));
        assert_eq!(doc.metadata, vec!["name: test".to_string()]);
    }

    #[test]
    fn qubit_header_pads_on_the_left() {
        let doc = parse("# qubits: 4\n0.5 Z\n0.25 XX\n").unwrap();
        assert_eq!(doc.n, 4);
        assert_eq!(doc.entries[0].1.to_string(), "IIIZ");
        assert!(parse("# qubits: 1\n0.5 ZZ\n").is_err());
    }

    #[test]
    fn projector_emission() {
        let p = build_projector(ProjectorSpec::new(3, 1).unwrap()).unwrap();
        let text = emit_text(&p);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 8);
        assert_eq!(lines[0], "0.375 III");
        assert_eq!(lines[1], "-0.375 ZZZ");
        assert!(lines[2..].iter().all(|l| l.starts_with("0.125 ") || l.starts_with("-0.125 ")));
    }

    #[test]
    fn empty_sum_has_header() {
        let text = emit_text(&PauliSum::new(3).unwrap());
        assert_eq!(text, "# qubits: 3\n# 0 terms\n");
    }

    #[test]
    fn all_formats_read_back() {
        let mut s = PauliSum::from_labels(&[(0.1, "XYZ"), (-1e-7, "IIZ"), (3e20, "ZZZ")]).unwrap();
        s.add_key(PauliKey::new(1, 0), Complex64::new(0.0, 0.7));
        for f in [Format::Text, Format::Json, Format::Csv] {
            let back = read_operator(&emit(&s, f)).unwrap().sum;
            assert!(back.approx_eq(&s, 0.0), "{f}");
        }
    }
}
