//! Rule-base documents.
//!
//! A document is TOML with the following layout (format version `"1"`):
//!
//! ```toml
//! version = "1"
//! dimension = 1
//! observation = [[4.2, 5.2, 5.2, 6.7]]   # optional, one set per dimension
//!
//! [metadata]                               # optional
//! name = "core inversion"
//! notes = "free text"
//!
//! [[rules]]
//! antecedents = [[1, 2, 3, 4]]             # one set per dimension
//! consequent = [1.5, 2.5, 2.5, 3.8]
//! ```
//!
//! A set is written with 1 number (singleton), 3 numbers (triangle
//! `[a b c]` = `[a b b c]`) or 4 numbers (trapezoid), non-decreasing. In
//! memory every set is held in four-point form alongside the arity it was
//! written with. [`save_document`] always emits four-point arrays; when a set
//! was written with a shorter form, its arity is recorded in the optional
//! keys `observation_arity`, `antecedent_arity` (per rule, one entry per
//! dimension) and `consequent_arity`, so that loading the saved text gives
//! back the same document.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::benchmark::BenchmarkCase;
use crate::fuzzy::TrapezoidSet;
use crate::kh::{Observation, Rule, RuleBase};

pub const FORMAT_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DocumentError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("invalid document: {0}")]
    Validation(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Arity {
    Singleton,
    Triangle,
    Trapezoid,
}

impl Arity {
    pub fn count(self) -> u8 {
        match self {
            Arity::Singleton => 1,
            Arity::Triangle => 3,
            Arity::Trapezoid => 4,
        }
    }

    fn from_count(n: usize) -> Option<Self> {
        match n {
            1 => Some(Arity::Singleton),
            3 => Some(Arity::Triangle),
            4 => Some(Arity::Trapezoid),
            _ => None,
        }
    }

    /// Shortest encoding able to express `set`.
    pub fn minimal(set: &TrapezoidSet) -> Self {
        if set.is_singleton() {
            Arity::Singleton
        } else if set.is_triangle() {
            Arity::Triangle
        } else {
            Arity::Trapezoid
        }
    }

    fn admits(self, set: &TrapezoidSet) -> bool {
        match self {
            Arity::Singleton => set.is_singleton(),
            Arity::Triangle => set.is_triangle(),
            Arity::Trapezoid => true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SetEntry {
    pub set: TrapezoidSet,
    pub arity: Arity,
}

impl SetEntry {
    pub fn minimal(set: TrapezoidSet) -> Self {
        Self {
            set,
            arity: Arity::minimal(&set),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DocumentRule {
    pub antecedents: Vec<SetEntry>,
    pub consequent: SetEntry,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Metadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub notes: Option<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RuleBaseDocument {
    pub format_version: String,
    pub dimension: usize,
    pub rules: Vec<DocumentRule>,
    pub observation: Option<Vec<SetEntry>>,
    pub metadata: Option<Metadata>,
}

impl RuleBaseDocument {
    pub fn rule_base(&self) -> crate::Result<RuleBase> {
        let rules = self
            .rules
            .iter()
            .map(|r| Rule::new(r.antecedents.iter().map(|e| e.set).collect(), r.consequent.set))
            .collect::<crate::Result<Vec<_>>>()?;
        RuleBase::new(rules)
    }

    pub fn observation(&self) -> Option<Observation> {
        self.observation
            .as_ref()
            .map(|sets| Observation::new(sets.iter().map(|e| e.set).collect()).expect("validated non-empty"))
    }

    /// Document for a benchmark case; sets use their shortest encoding.
    pub fn from_case(case: &BenchmarkCase) -> Self {
        let rule = |r: &Rule| DocumentRule {
            antecedents: r.antecedents().iter().copied().map(SetEntry::minimal).collect(),
            consequent: SetEntry::minimal(*r.consequent()),
        };
        RuleBaseDocument {
            format_version: FORMAT_VERSION.to_owned(),
            dimension: 1,
            rules: vec![rule(&case.lower), rule(&case.upper)],
            observation: Some(case.observation.sets().iter().copied().map(SetEntry::minimal).collect()),
            metadata: Some(Metadata {
                name: Some(format!("Example {}: {}", case.id, case.name)),
                notes: Some(case.provenance_note.to_owned()),
            }),
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    version: String,
    dimension: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    observation: Option<Vec<Vec<f64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    observation_arity: Option<Vec<u8>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    metadata: Option<Metadata>,
    rules: Vec<RawRule>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRule {
    antecedents: Vec<Vec<f64>>,
    consequent: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    antecedent_arity: Option<Vec<u8>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    consequent_arity: Option<u8>,
}

fn invalid(msg: impl Into<String>) -> DocumentError {
    DocumentError::Validation(msg.into())
}

fn line_column(text: &str, offset: usize) -> (usize, usize) {
    let offset = offset.min(text.len());
    let before = &text[..offset];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

fn parse_set(values: &[f64], note: Option<u8>, at: &str) -> Result<SetEntry, DocumentError> {
    let written = Arity::from_count(values.len())
        .ok_or_else(|| invalid(format!("{at}: a set needs 1, 3 or 4 numbers, found {}", values.len())))?;
    if let Some(v) = values.iter().find(|v| !v.is_finite()) {
        return Err(invalid(format!("{at}: non-finite value {v}")));
    }
    if let Some(w) = values.windows(2).find(|w| w[0] > w[1]) {
        return Err(invalid(format!(
            "{at}: ordering violation, {} is followed by smaller {}",
            w[0], w[1]
        )));
    }
    let set = TrapezoidSet::from_slice(values).map_err(|e| invalid(format!("{at}: {e}")))?;
    let arity = match note {
        None => written,
        Some(n) => {
            let noted = Arity::from_count(n as usize)
                .ok_or_else(|| invalid(format!("{at}: arity note must be 1, 3 or 4, found {n}")))?;
            if written != Arity::Trapezoid && noted != written {
                return Err(invalid(format!(
                    "{at}: arity note {n} contradicts the {} numbers written",
                    values.len()
                )));
            }
            if !noted.admits(&set) {
                return Err(invalid(format!("{at}: set {set} cannot be written with {n} numbers")));
            }
            noted
        }
    };
    Ok(SetEntry { set, arity })
}

fn parse_sets(
    arrays: &[Vec<f64>],
    notes: Option<&[u8]>,
    dimension: usize,
    at: &str,
) -> Result<Vec<SetEntry>, DocumentError> {
    if arrays.len() != dimension {
        return Err(invalid(format!(
            "{at}: dimension mismatch, expected {dimension} sets, found {}",
            arrays.len()
        )));
    }
    if let Some(notes) = notes {
        if notes.len() != arrays.len() {
            return Err(invalid(format!(
                "{at}: {} arity notes for {} sets",
                notes.len(),
                arrays.len()
            )));
        }
    }
    arrays
        .iter()
        .enumerate()
        .map(|(d, values)| parse_set(values, notes.map(|n| n[d]), &format!("{at}[{d}]")))
        .collect()
}

/// Parses and validates a document. Sets are canonicalised to four points.
pub fn load_document(text: &[u8]) -> Result<RuleBaseDocument, DocumentError> {
    let text = std::str::from_utf8(text).map_err(|e| {
        let valid = &text[..e.valid_up_to()];
        let valid = std::str::from_utf8(valid).unwrap_or_default();
        let (line, column) = line_column(valid, valid.len());
        DocumentError::Parse {
            line,
            column,
            message: "invalid UTF-8".to_owned(),
        }
    })?;
    load_str(text)
}

pub fn load_str(text: &str) -> Result<RuleBaseDocument, DocumentError> {
    let raw: RawDocument = toml::from_str(text).map_err(|e| {
        let (line, column) = e.span().map_or((1, 1), |span| line_column(text, span.start));
        DocumentError::Parse {
            line,
            column,
            message: e.message().trim().to_owned(),
        }
    })?;

    if raw.version != FORMAT_VERSION {
        return Err(invalid(format!(
            "unknown format version {:?} (supported: {FORMAT_VERSION:?})",
            raw.version
        )));
    }
    if raw.dimension == 0 {
        return Err(invalid("dimension must be at least 1"));
    }
    if raw.rules.is_empty() {
        return Err(invalid("a document needs at least one rule"));
    }
    let rules = raw
        .rules
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let at = format!("rules[{i}]");
            Ok(DocumentRule {
                antecedents: parse_sets(
                    &r.antecedents,
                    r.antecedent_arity.as_deref(),
                    raw.dimension,
                    &format!("{at}.antecedents"),
                )?,
                consequent: parse_set(&r.consequent, r.consequent_arity, &format!("{at}.consequent"))?,
            })
        })
        .collect::<Result<Vec<_>, DocumentError>>()?;
    let observation = raw
        .observation
        .as_ref()
        .map(|obs| parse_sets(obs, raw.observation_arity.as_deref(), raw.dimension, "observation"))
        .transpose()?;

    Ok(RuleBaseDocument {
        format_version: raw.version,
        dimension: raw.dimension,
        rules,
        observation,
        metadata: raw.metadata,
    })
}

fn arity_notes(entries: &[SetEntry]) -> Option<Vec<u8>> {
    entries
        .iter()
        .any(|e| e.arity != Arity::Trapezoid)
        .then(|| entries.iter().map(|e| e.arity.count()).collect())
}

/// Serialises a document; numbers use the shortest representation that
/// reads back to the same `f64`.
pub fn save_document(doc: &RuleBaseDocument) -> String {
    let points = |e: &SetEntry| e.set.points().to_vec();
    let raw = RawDocument {
        version: doc.format_version.clone(),
        dimension: doc.dimension,
        observation: doc.observation.as_ref().map(|o| o.iter().map(points).collect()),
        observation_arity: doc.observation.as_deref().and_then(arity_notes),
        metadata: doc.metadata.clone(),
        rules: doc
            .rules
            .iter()
            .map(|r| RawRule {
                antecedents: r.antecedents.iter().map(points).collect(),
                consequent: points(&r.consequent),
                antecedent_arity: arity_notes(&r.antecedents),
                consequent_arity: (r.consequent.arity != Arity::Trapezoid).then(|| r.consequent.arity.count()),
            })
            .collect(),
    };
    toml::to_string(&raw).expect("document serialises")
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE1: &str = r#"
version = "1"
dimension = 1
observation = [[4, 5, 5, 6]]

[metadata]
name = "Example 1"

[[rules]]
antecedents = [[1, 2, 3]]
consequent = [2, 2, 2]

[[rules]]
antecedents = [[7, 8, 9]]
consequent = [8]
"#;

    #[test]
    fn loads_example() {
        let doc = load_str(EXAMPLE1).unwrap();
        assert_eq!(doc.rules.len(), 2);
        assert_eq!(doc.dimension, 1);
        assert_eq!(doc.rules[0].antecedents[0].set.points(), [1.0, 2.0, 2.0, 3.0]);
        assert_eq!(doc.rules[0].antecedents[0].arity, Arity::Triangle);
        assert_eq!(doc.rules[1].consequent.arity, Arity::Singleton);
        assert_eq!(doc.observation().unwrap().sets()[0].points(), [4.0, 5.0, 5.0, 6.0]);
        assert_eq!(doc.rule_base().unwrap().len(), 2);
    }

    #[test]
    fn rejects_unordered_array() {
        let text = EXAMPLE1.replace("[[1, 2, 3]]", "[[1, 3, 2, 4]]");
        match load_str(&text) {
            Err(DocumentError::Validation(msg)) => assert!(msg.contains("ordering"), "{msg}"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn rejects_mixed_dimension() {
        let text = EXAMPLE1.replace("[[7, 8, 9]]", "[[7, 8, 9], [1, 2, 3]]");
        match load_str(&text) {
            Err(DocumentError::Validation(msg)) => assert!(msg.contains("dimension mismatch"), "{msg}"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn rejects_unknown_version_and_bad_arity() {
        let text = EXAMPLE1.replace("version = \"1\"", "version = \"7\"");
        assert!(matches!(load_str(&text), Err(DocumentError::Validation(_))));
        let text = EXAMPLE1.replace("consequent = [8]", "consequent = [8, 9]");
        assert!(matches!(load_str(&text), Err(DocumentError::Validation(_))));
    }

    #[test]
    fn parse_error_has_position() {
        let text = "version = \"1\"\ndimension = 1\nrules = [ oops ]\n";
        match load_str(text) {
            Err(DocumentError::Parse { line, column, .. }) => {
                assert_eq!(line, 3);
                assert!(column > 1);
            }
            other => panic!("{other:?}"),
        }
        match load_document(b"version = \"1\"\n\xff") {
            Err(DocumentError::Parse { line, column, .. }) => assert_eq!((line, column), (2, 1)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn save_emits_four_points_with_arity_note() {
        let doc = load_str(EXAMPLE1).unwrap();
        let text = save_document(&doc);
        assert!(text.contains("antecedents = [[1.0, 2.0, 2.0, 3.0]]"), "{text}");
        assert!(text.contains("antecedent_arity = [3]"), "{text}");
        assert!(text.contains("consequent_arity = 1"), "{text}");
        assert!(!text.contains("observation_arity"), "{text}");
        assert_eq!(load_str(&text).unwrap(), doc);
    }

    #[test]
    fn full_precision_survives() {
        let mut doc = load_str(EXAMPLE1).unwrap();
        doc.observation = Some(vec![SetEntry::minimal(
            TrapezoidSet::new(0.1 + 0.2, 4.0 + 1.0 / 3.0, 5.0, 6.0).unwrap(),
        )]);
        assert_eq!(load_str(&save_document(&doc)).unwrap(), doc);
    }
}
