//! The plain-text matrix format.
//!
//! ```text
//! # type: bipolar
//! # title: Example
//!    E1          E2
//! a  (0.2,-0.3)  -
//! b  (0.4,-0.5)  (0.4,-0.5)
//! ```
//!
//! * `# key: value` lines before the header carry metadata; other `#` lines are comments.
//!   Recognized keys are `type` (`bipolar`, `crisp` or `partition`), `tolerance` (for
//!   partitions) and anything else, which is kept verbatim.
//! * The first other nonblank line lists the edge (class) labels.
//! * Every following nonblank line is a vertex label followed by one cell per edge:
//!   `(p,n)` or `-` for `(0,0)` in bipolar and partition documents, `0` or `1` in crisp
//!   documents. Spaces inside the parentheses are allowed.
//! * Without a `type` line a document whose cells are all `0`/`1` is crisp, otherwise
//!   bipolar.
//!
//! [`parse`] reports every problem it finds as a [`Diagnostic`] with a 1-based line and
//! column. [`Document::emit`] writes the canonical form: `type` first, columns
//! left-aligned with two spaces between them, no trailing whitespace.

use std::fmt;

use crate::crisp::CrispHypergraph;
use crate::fuzzy_set::VertexSet;
use crate::hypergraph::{BFHypergraph, BipolarMatrix};
use crate::partition::{classify, BipolarPartition, DEFAULT_TOLERANCE};
use crate::value::{BipolarValue, Label, ValueParseError};

/// The structure a document describes.
#[derive(Clone, Debug, PartialEq)]
pub enum Structure {
    Bipolar(BFHypergraph),
    Partition(BipolarPartition),
    Crisp(CrispHypergraph),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DocumentType {
    Bipolar,
    Partition,
    Crisp,
}

impl DocumentType {
    pub fn name(self) -> &'static str {
        match self {
            DocumentType::Bipolar => "bipolar",
            DocumentType::Partition => "partition",
            DocumentType::Crisp => "crisp",
        }
    }

    fn from_name(name: &str) -> Option<Self> {
        match name {
            "bipolar" => Some(DocumentType::Bipolar),
            "partition" => Some(DocumentType::Partition),
            "crisp" => Some(DocumentType::Crisp),
            _ => None,
        }
    }
}

/// A parsed document: metadata in source order plus the structure.
#[derive(Clone, Debug, PartialEq)]
pub struct Document {
    metadata: Vec<(String, String)>,
    structure: Structure,
}

impl Document {
    pub fn new(structure: Structure) -> Self {
        let mut metadata = Vec::new();
        if let Structure::Partition(p) = &structure {
            if p.tolerance() != DEFAULT_TOLERANCE {
                metadata.push(("tolerance".to_owned(), p.tolerance().to_string()));
            }
        }
        Document { metadata, structure }
    }

    /// A new document for `structure` carrying this document's metadata (except `type`).
    pub fn derive(&self, structure: Structure) -> Document {
        let mut doc = Document::new(structure);
        for (key, value) in &self.metadata {
            if key != "type" && doc.get(key).is_none() {
                doc.metadata.push((key.clone(), value.clone()));
            }
        }
        doc
    }

    pub fn with_metadata(mut self, key: &str, value: &str) -> Self {
        match self.metadata.iter_mut().find(|(k, _)| k == key) {
            Some(entry) => entry.1 = value.to_owned(),
            None => self.metadata.push((key.to_owned(), value.to_owned())),
        }
        self
    }

    pub fn metadata(&self) -> &[(String, String)] {
        &self.metadata
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.metadata
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn structure(&self) -> &Structure {
        &self.structure
    }

    pub fn into_structure(self) -> Structure {
        self.structure
    }

    pub fn kind(&self) -> DocumentType {
        match self.structure {
            Structure::Bipolar(_) => DocumentType::Bipolar,
            Structure::Partition(_) => DocumentType::Partition,
            Structure::Crisp(_) => DocumentType::Crisp,
        }
    }

    /// The canonical text of this document.
    pub fn emit(&self) -> String {
        let mut out = format!("# type: {}\n", self.kind().name());
        for (key, value) in &self.metadata {
            if key != "type" {
                out.push_str(format!("# {key}: {value}").trim_end());
                out.push('\n');
            }
        }
        let (vertices, names, rows): (&[Label], &[Label], Vec<Vec<String>>) = match &self.structure {
            Structure::Bipolar(h) => (h.vertices(), h.edge_names(), bipolar_cells(h.matrix())),
            Structure::Partition(p) => (p.matrix().vertices(), p.matrix().names(), bipolar_cells(p.matrix())),
            Structure::Crisp(h) => (
                h.vertices(),
                h.edge_names(),
                h.incidence()
                    .into_iter()
                    .map(|row| row.into_iter().map(|b| if b { "1" } else { "0" }.to_owned()).collect())
                    .collect(),
            ),
        };
        if names.is_empty() {
            return out;
        }
        let label_width = vertices.iter().map(|v| v.as_str().chars().count()).max().unwrap_or(0);
        let widths: Vec<usize> = names
            .iter()
            .enumerate()
            .map(|(j, name)| {
                rows.iter()
                    .map(|r| r[j].chars().count())
                    .chain([name.as_str().chars().count()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let line = |first: &str, cells: Vec<&str>| {
            let mut text = if label_width > 0 {
                format!("{first:<label_width$}  ")
            } else {
                String::new()
            };
            for (cell, width) in cells.iter().zip(&widths) {
                text.push_str(&format!("{cell:<width$}  "));
            }
            text.trim_end().to_owned() + "\n"
        };
        out.push_str(&line("", names.iter().map(Label::as_str).collect()));
        for (vertex, row) in vertices.iter().zip(&rows) {
            out.push_str(&line(vertex.as_str(), row.iter().map(String::as_str).collect()));
        }
        out
    }
}

impl From<BFHypergraph> for Document {
    fn from(h: BFHypergraph) -> Self {
        Document::new(Structure::Bipolar(h))
    }
}

impl From<CrispHypergraph> for Document {
    fn from(h: CrispHypergraph) -> Self {
        Document::new(Structure::Crisp(h))
    }
}

impl From<BipolarPartition> for Document {
    fn from(p: BipolarPartition) -> Self {
        Document::new(Structure::Partition(p))
    }
}

fn bipolar_cells(m: &BipolarMatrix) -> Vec<Vec<String>> {
    m.rows()
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|v| if v.is_neutral() { "-".to_owned() } else { v.to_string() })
                .collect()
        })
        .collect()
}

/// What went wrong at a diagnostic position.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiagnosticKind {
    Metadata,
    InvalidLabel,
    DuplicateLabel,
    MalformedCell,
    Range,
    Precision,
    DimensionMismatch,
    TrivialEdge,
    EmptyEdge,
    CoveringViolation,
}

/// A problem found while parsing, with its 1-based source position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub line: usize,
    pub column: usize,
    pub kind: DiagnosticKind,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

/// All diagnostics of a failed parse, in source order.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    pub diagnostics: Vec<Diagnostic>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.diagnostics.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

#[derive(Debug)]
struct Token<'a> {
    text: &'a str,
    column: usize,
}

struct Row<'a> {
    line: usize,
    label: Token<'a>,
    cells: Vec<Token<'a>>,
}

/// Splits a line into tokens; a token starting with `(` runs to the matching `)`.
fn tokenize(line: &str) -> Vec<Token<'_>> {
    let mut tokens = Vec::new();
    let chars: Vec<(usize, char)> = line.char_indices().collect();
    let mut k = 0;
    while k < chars.len() {
        if chars[k].1.is_whitespace() {
            k += 1;
            continue;
        }
        let start = k;
        if chars[k].1 == '(' {
            while k < chars.len() && chars[k].1 != ')' {
                k += 1;
            }
            k = (k + 1).min(chars.len());
        }
        while k < chars.len() && !chars[k].1.is_whitespace() {
            k += 1;
        }
        let from = chars[start].0;
        let to = chars.get(k).map_or(line.len(), |c| c.0);
        tokens.push(Token {
            text: &line[from..to],
            column: start + 1,
        });
    }
    tokens
}

struct Parser {
    diagnostics: Vec<Diagnostic>,
}

impl Parser {
    fn report(&mut self, line: usize, column: usize, kind: DiagnosticKind, message: String) {
        self.diagnostics.push(Diagnostic {
            line,
            column,
            kind,
            message,
        });
    }

    fn labels(&mut self, line_of: impl Fn(usize) -> usize, tokens: &[&Token<'_>], what: &str) -> Vec<Option<Label>> {
        let mut seen = std::collections::HashMap::new();
        tokens
            .iter()
            .enumerate()
            .map(|(k, token)| {
                let line = line_of(k);
                match Label::new(token.text) {
                    Ok(label) => {
                        if let Some((first_line, first_col)) = seen.insert(token.text, (line, token.column)) {
                            self.report(
                                line,
                                token.column,
                                DiagnosticKind::DuplicateLabel,
                                format!("duplicate {what} label `{}` (first at {first_line}:{first_col})", token.text),
                            );
                            None
                        } else {
                            Some(label)
                        }
                    }
                    Err(_) => {
                        self.report(
                            line,
                            token.column,
                            DiagnosticKind::InvalidLabel,
                            format!("invalid {what} label `{}`", token.text),
                        );
                        None
                    }
                }
            })
            .collect()
    }

    fn bipolar_cell(&mut self, line: usize, token: &Token<'_>) -> Option<BipolarValue> {
        if token.text == "-" {
            return Some(BipolarValue::NEUTRAL);
        }
        match token.text.parse::<BipolarValue>() {
            Ok(v) => Some(v),
            Err(e) => {
                let kind = match e {
                    ValueParseError::Range => DiagnosticKind::Range,
                    ValueParseError::Precision => DiagnosticKind::Precision,
                    ValueParseError::Syntax | ValueParseError::Decimal => DiagnosticKind::MalformedCell,
                };
                self.report(line, token.column, kind, format!("cell `{}`: {e}", token.text));
                None
            }
        }
    }

    fn crisp_cell(&mut self, line: usize, token: &Token<'_>) -> Option<bool> {
        match token.text {
            "0" => Some(false),
            "1" => Some(true),
            other => {
                self.report(
                    line,
                    token.column,
                    DiagnosticKind::MalformedCell,
                    format!("cell `{other}`: expected 0 or 1"),
                );
                None
            }
        }
    }
}

/// Parses a document, collecting every diagnostic.
pub fn parse(text: &str) -> Result<Document, ParseError> {
    let mut parser = Parser {
        diagnostics: Vec::new(),
    };
    let mut metadata: Vec<(String, String)> = Vec::new();
    let mut meta_lines: Vec<usize> = Vec::new();
    let mut header: Option<(usize, Vec<Token<'_>>)> = None;
    let mut rows: Vec<Row<'_>> = Vec::new();

    for (index, raw) in text.lines().enumerate() {
        let line_no = index + 1;
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(comment) = trimmed.strip_prefix('#') {
            if header.is_none() {
                if let Some((key, value)) = comment.split_once(':') {
                    let key = key.trim();
                    if !key.is_empty() && !key.contains(char::is_whitespace) {
                        let column = line.find(key).map_or(1, |b| line[..b].chars().count() + 1);
                        if metadata.iter().any(|(k, _)| k == key) {
                            parser.report(
                                line_no,
                                column,
                                DiagnosticKind::Metadata,
                                format!("metadata key `{key}` repeated"),
                            );
                        } else {
                            metadata.push((key.to_owned(), value.trim().to_owned()));
                            meta_lines.push(line_no);
                        }
                    }
                }
            }
            continue;
        }
        let tokens = tokenize(line);
        if header.is_none() {
            header = Some((line_no, tokens));
        } else {
            let mut tokens = tokens.into_iter();
            let label = tokens.next().expect("nonblank line has a token");
            rows.push(Row {
                line: line_no,
                label,
                cells: tokens.collect(),
            });
        }
    }

    let meta_line = |key: &str| {
        metadata
            .iter()
            .position(|(k, _)| k == key)
            .map_or(1, |i| meta_lines[i])
    };
    let declared = match metadata.iter().find(|(k, _)| k == "type") {
        Some((_, value)) => match DocumentType::from_name(value) {
            Some(t) => Some(t),
            None => {
                parser.report(
                    meta_line("type"),
                    1,
                    DiagnosticKind::Metadata,
                    format!("unknown document type `{value}` (expected bipolar, crisp or partition)"),
                );
                None
            }
        },
        None => None,
    };
    let tolerance = match metadata.iter().find(|(k, _)| k == "tolerance") {
        Some((_, value)) => match value.parse::<f64>() {
            Ok(t) if t >= 0.0 && t.is_finite() => t,
            _ => {
                parser.report(
                    meta_line("tolerance"),
                    1,
                    DiagnosticKind::Metadata,
                    format!("tolerance `{value}` is not a nonnegative number"),
                );
                DEFAULT_TOLERANCE
            }
        },
        None => DEFAULT_TOLERANCE,
    };
    metadata.retain(|(k, _)| k != "type");
    let doc_type = declared.unwrap_or_else(|| {
        let all_binary = rows
            .iter()
            .flat_map(|r| r.cells.iter())
            .all(|c| c.text == "0" || c.text == "1");
        if all_binary {
            DocumentType::Crisp
        } else {
            DocumentType::Bipolar
        }
    });

    let (header_line, header_tokens) = header.unwrap_or((1, Vec::new()));
    let header_refs: Vec<&Token<'_>> = header_tokens.iter().collect();
    let names = parser.labels(|_| header_line, &header_refs, "edge");
    let label_refs: Vec<&Token<'_>> = rows.iter().map(|r| &r.label).collect();
    let vertices = parser.labels(|k| rows[k].line, &label_refs, "vertex");

    let width = header_tokens.len();
    let mut bipolar_rows: Vec<Vec<BipolarValue>> = Vec::new();
    let mut crisp_rows: Vec<Vec<bool>> = Vec::new();
    for row in &rows {
        if row.cells.len() != width {
            let (column, message) = match row.cells.get(width) {
                Some(extra) => (extra.column, format!("row `{}` has {} cells, header has {width}", row.label.text, row.cells.len())),
                None => (row.label.column, format!("row `{}` has {} cells, header has {width}", row.label.text, row.cells.len())),
            };
            parser.report(row.line, column, DiagnosticKind::DimensionMismatch, message);
        }
        match doc_type {
            DocumentType::Crisp => {
                let cells: Vec<bool> = row
                    .cells
                    .iter()
                    .filter_map(|c| parser.crisp_cell(row.line, c))
                    .collect();
                crisp_rows.push(cells);
            }
            _ => {
                let cells: Vec<BipolarValue> = row
                    .cells
                    .iter()
                    .filter_map(|c| parser.bipolar_cell(row.line, c))
                    .collect();
                bipolar_rows.push(cells);
            }
        }
    }
    if !parser.diagnostics.is_empty() {
        return Err(ParseError {
            diagnostics: parser.diagnostics,
        });
    }
    let names: Vec<Label> = names.into_iter().flatten().collect();
    let vertices: Vec<Label> = vertices.into_iter().flatten().collect();

    let structure = match doc_type {
        DocumentType::Crisp => {
            let mut edges = Vec::with_capacity(width);
            for (j, name) in names.iter().enumerate() {
                let members: VertexSet = (0..vertices.len()).filter(|&i| crisp_rows[i][j]).collect();
                if members.is_empty() {
                    parser.report(
                        header_line,
                        header_tokens[j].column,
                        DiagnosticKind::EmptyEdge,
                        format!("edge `{name}` has no vertices"),
                    );
                }
                edges.push((name.clone(), members));
            }
            if !parser.diagnostics.is_empty() {
                return Err(ParseError {
                    diagnostics: parser.diagnostics,
                });
            }
            Structure::Crisp(CrispHypergraph::new(vertices, edges).expect("validated above"))
        }
        DocumentType::Bipolar | DocumentType::Partition => {
            let matrix = BipolarMatrix::from_rows(vertices, names, bipolar_rows).expect("validated above");
            if doc_type == DocumentType::Partition {
                Structure::Partition(classify(&matrix, tolerance).expect("tolerance validated"))
            } else {
                for (j, column) in matrix.columns().iter().enumerate() {
                    if !column.is_nontrivial() {
                        parser.report(
                            header_line,
                            header_tokens[j].column,
                            DiagnosticKind::TrivialEdge,
                            format!("edge `{}` has empty support", matrix.names()[j]),
                        );
                    }
                }
                for (i, row) in rows.iter().enumerate() {
                    if matrix.row(i).iter().all(|v| v.is_neutral()) {
                        parser.report(
                            row.line,
                            row.label.column,
                            DiagnosticKind::CoveringViolation,
                            format!("vertex `{}` lies in the support of no edge", row.label.text),
                        );
                    }
                }
                if !parser.diagnostics.is_empty() {
                    return Err(ParseError {
                        diagnostics: parser.diagnostics,
                    });
                }
                Structure::Bipolar(BFHypergraph::from_matrix(matrix).expect("validated above"))
            }
        }
    };
    Ok(Document { metadata, structure })
}
