//! The structured text formats for graphs, digraphs, and representations,
//! plus DOT export. The exact grammar lives in `docs/FORMAT.md`.
//!
//! Rationals travel as strings like `3/2` or `5` and are parsed exactly;
//! binary floats never appear in a document. Vertex names map to dense
//! indices by sorted order, which keeps every conversion deterministic.

use std::collections::BTreeMap;

use num_rational::Rational64;
use num_traits::Zero;
use thiserror::Error;

use crate::digraph::Digraph;
use crate::graph::UndirectedGraph;
use crate::order::{IntervalRep, Rat, SemiorderRep};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DocError {
    #[error("line {line}: syntax error: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: duplicate vertex name {name:?}")]
    DuplicateName { line: usize, name: String },
    #[error("line {line}: reference to undeclared vertex {name:?}")]
    UnknownName { line: usize, name: String },
    #[error("line {line}: loop at vertex {name:?}")]
    LoopPair { line: usize, name: String },
    #[error("line {line}: duplicate pair {a:?}, {b:?}")]
    DuplicatePair { line: usize, a: String, b: String },
    #[error("line {line}: invalid rational {text:?}")]
    BadRational { line: usize, text: String },
    #[error("line {line}: empty interval [{lo}, {hi}]")]
    EmptyInterval { line: usize, lo: Rat, hi: Rat },
    #[error("line {line}: delta must be positive, got {delta}")]
    NonPositiveDelta { line: usize, delta: Rat },
    #[error("missing field {field:?} in {kind} document")]
    MissingField { kind: &'static str, field: &'static str },
    #[error("expected a {expected} document, found {found}")]
    WrongKind { expected: &'static str, found: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphKind {
    Graph,
    Digraph,
}

/// A named graph or digraph, as it appears on disk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedGraphDocument {
    pub kind: GraphKind,
    /// Sorted unique names.
    pub vertices: Vec<String>,
    /// Name pairs; for graphs each pair is stored smaller-name-first.
    pub pairs: Vec<(String, String)>,
}

/// A semiorder or interval representation, as it appears on disk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RepresentationDocument {
    Semiorder { delta: Rat, f: BTreeMap<String, Rat> },
    Interval { j: BTreeMap<String, (Rat, Rat)> },
}

/// Any parseable document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Named(NamedGraphDocument),
    Representation(RepresentationDocument),
}

fn valid_name(s: &str) -> bool {
    !s.is_empty()
        && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '.')
}

pub fn parse_rational(text: &str, line: usize) -> Result<Rat, DocError> {
    let bad = || DocError::BadRational { line, text: text.to_string() };
    let (numer, denom) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let n: i64 = numer.trim().parse().map_err(|_| bad())?;
    let d: i64 = denom.trim().parse().map_err(|_| bad())?;
    if d == 0 {
        return Err(bad());
    }
    Ok(Rational64::new(n, d))
}

struct Parser<'a> {
    lines: std::iter::Peekable<std::iter::Enumerate<std::str::Lines<'a>>>,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser { lines: text.lines().enumerate().peekable() }
    }

    /// Next meaningful line as (1-based number, trimmed text).
    fn next_line(&mut self) -> Option<(usize, &'a str)> {
        loop {
            let (idx, raw) = self.lines.next()?;
            let t = raw.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            return Some((idx + 1, t));
        }
    }
}

/// Parses any document; the header keyword selects the kind.
pub fn parse_document(text: &str) -> Result<Document, DocError> {
    let mut p = Parser::new(text);
    let (line, header) = p
        .next_line()
        .ok_or(DocError::Syntax { line: 1, msg: "empty document".into() })?;
    let kind = header.strip_suffix('{').map(str::trim).unwrap_or(header);
    if !header.ends_with('{') {
        return Err(DocError::Syntax {
            line,
            msg: format!("expected `<kind> {{`, got {header:?}"),
        });
    }
    match kind {
        "graph" => parse_named(&mut p, GraphKind::Graph).map(Document::Named),
        "digraph" => parse_named(&mut p, GraphKind::Digraph).map(Document::Named),
        "semiorder" => parse_semiorder(&mut p).map(Document::Representation),
        "interval" => parse_interval(&mut p).map(Document::Representation),
        other => Err(DocError::Syntax {
            line,
            msg: format!("unknown document kind {other:?}"),
        }),
    }
}

pub fn parse_named_graph(text: &str) -> Result<NamedGraphDocument, DocError> {
    match parse_document(text)? {
        Document::Named(d) => Ok(d),
        Document::Representation(r) => Err(DocError::WrongKind {
            expected: "graph or digraph",
            found: match r {
                RepresentationDocument::Semiorder { .. } => "semiorder".into(),
                RepresentationDocument::Interval { .. } => "interval".into(),
            },
        }),
    }
}

pub fn parse_representation(text: &str) -> Result<RepresentationDocument, DocError> {
    match parse_document(text)? {
        Document::Representation(r) => Ok(r),
        Document::Named(d) => Err(DocError::WrongKind {
            expected: "semiorder or interval",
            found: match d.kind {
                GraphKind::Graph => "graph".into(),
                GraphKind::Digraph => "digraph".into(),
            },
        }),
    }
}

fn parse_vertices(line: usize, rest: &str) -> Result<Vec<String>, DocError> {
    let mut names = Vec::new();
    for tok in rest.split_whitespace() {
        if !valid_name(tok) {
            return Err(DocError::Syntax {
                line,
                msg: format!("invalid vertex name {tok:?}"),
            });
        }
        if names.contains(&tok.to_string()) {
            return Err(DocError::DuplicateName { line, name: tok.into() });
        }
        names.push(tok.to_string());
    }
    Ok(names)
}

fn parse_named(p: &mut Parser, kind: GraphKind) -> Result<NamedGraphDocument, DocError> {
    let (sep, field, kind_name) = match kind {
        GraphKind::Graph => ("-", "edges", "graph"),
        GraphKind::Digraph => ("->", "arcs", "digraph"),
    };
    let mut vertices: Option<Vec<String>> = None;
    let mut pairs: Vec<(String, String)> = Vec::new();
    loop {
        let (line, t) = p.next_line().ok_or(DocError::Syntax {
            line: 0,
            msg: "unterminated document, expected `}`".into(),
        })?;
        if t == "}" {
            break;
        }
        let (key, rest) = t.split_once(':').ok_or(DocError::Syntax {
            line,
            msg: format!("expected `key: ...`, got {t:?}"),
        })?;
        match key.trim() {
            "vertices" => vertices = Some(parse_vertices(line, rest)?),
            k if k == field => {
                let names = vertices.as_ref().ok_or(DocError::Syntax {
                    line,
                    msg: format!("{field} listed before vertices"),
                })?;
                for tok in rest.split_whitespace() {
                    let (a, b) = tok.split_once(sep).ok_or(DocError::Syntax {
                        line,
                        msg: format!("expected `a{sep}b`, got {tok:?}"),
                    })?;
                    for name in [a, b] {
                        if !names.iter().any(|v| v == name) {
                            return Err(DocError::UnknownName { line, name: name.into() });
                        }
                    }
                    if a == b {
                        return Err(DocError::LoopPair { line, name: a.into() });
                    }
                    let pair = match kind {
                        GraphKind::Graph if a > b => (b.to_string(), a.to_string()),
                        _ => (a.to_string(), b.to_string()),
                    };
                    if pairs.contains(&pair) {
                        return Err(DocError::DuplicatePair { line, a: pair.0, b: pair.1 });
                    }
                    pairs.push(pair);
                }
            }
            other => {
                return Err(DocError::Syntax {
                    line,
                    msg: format!("unknown field {other:?} in {kind_name} document"),
                })
            }
        }
    }
    // an omitted edge/arc list means "none"
    let mut vertices = vertices.ok_or(DocError::MissingField {
        kind: kind_name,
        field: "vertices",
    })?;
    vertices.sort();
    pairs.sort();
    Ok(NamedGraphDocument { kind, vertices, pairs })
}

fn parse_semiorder(p: &mut Parser) -> Result<RepresentationDocument, DocError> {
    let mut delta: Option<Rat> = None;
    let mut f: BTreeMap<String, Rat> = BTreeMap::new();
    loop {
        let (line, t) = p.next_line().ok_or(DocError::Syntax {
            line: 0,
            msg: "unterminated document, expected `}`".into(),
        })?;
        if t == "}" {
            break;
        }
        let (key, rest) = t.split_once(':').ok_or(DocError::Syntax {
            line,
            msg: format!("expected `key: ...`, got {t:?}"),
        })?;
        match key.trim() {
            "delta" => {
                let d = parse_rational(rest.trim(), line)?;
                if d <= Rat::zero() {
                    return Err(DocError::NonPositiveDelta { line, delta: d });
                }
                delta = Some(d);
            }
            "f" => {
                for tok in rest.split_whitespace() {
                    let (name, val) = tok.split_once('=').ok_or(DocError::Syntax {
                        line,
                        msg: format!("expected `name=value`, got {tok:?}"),
                    })?;
                    if !valid_name(name) {
                        return Err(DocError::Syntax {
                            line,
                            msg: format!("invalid vertex name {name:?}"),
                        });
                    }
                    if f.contains_key(name) {
                        return Err(DocError::DuplicateName { line, name: name.into() });
                    }
                    f.insert(name.to_string(), parse_rational(val, line)?);
                }
            }
            other => {
                return Err(DocError::Syntax {
                    line,
                    msg: format!("unknown field {other:?} in semiorder document"),
                })
            }
        }
    }
    let delta = delta.ok_or(DocError::MissingField { kind: "semiorder", field: "delta" })?;
    Ok(RepresentationDocument::Semiorder { delta, f })
}

fn parse_interval(p: &mut Parser) -> Result<RepresentationDocument, DocError> {
    let mut j: BTreeMap<String, (Rat, Rat)> = BTreeMap::new();
    let mut saw_j = false;
    loop {
        let (line, t) = p.next_line().ok_or(DocError::Syntax {
            line: 0,
            msg: "unterminated document, expected `}`".into(),
        })?;
        if t == "}" {
            break;
        }
        let (key, rest) = t.split_once(':').ok_or(DocError::Syntax {
            line,
            msg: format!("expected `key: ...`, got {t:?}"),
        })?;
        match key.trim() {
            "J" => {
                saw_j = true;
                for tok in rest.split_whitespace() {
                    let (name, val) = tok.split_once('=').ok_or(DocError::Syntax {
                        line,
                        msg: format!("expected `name=[lo,hi]`, got {tok:?}"),
                    })?;
                    if !valid_name(name) {
                        return Err(DocError::Syntax {
                            line,
                            msg: format!("invalid vertex name {name:?}"),
                        });
                    }
                    if j.contains_key(name) {
                        return Err(DocError::DuplicateName { line, name: name.into() });
                    }
                    let inner = val
                        .strip_prefix('[')
                        .and_then(|v| v.strip_suffix(']'))
                        .ok_or(DocError::Syntax {
                            line,
                            msg: format!("expected `[lo,hi]`, got {val:?}"),
                        })?;
                    let (lo, hi) = inner.split_once(',').ok_or(DocError::Syntax {
                        line,
                        msg: format!("expected `[lo,hi]`, got {val:?}"),
                    })?;
                    let lo = parse_rational(lo, line)?;
                    let hi = parse_rational(hi, line)?;
                    if lo > hi {
                        return Err(DocError::EmptyInterval { line, lo, hi });
                    }
                    j.insert(name.to_string(), (lo, hi));
                }
            }
            other => {
                return Err(DocError::Syntax {
                    line,
                    msg: format!("unknown field {other:?} in interval document"),
                })
            }
        }
    }
    if !saw_j {
        return Err(DocError::MissingField { kind: "interval", field: "J" });
    }
    Ok(RepresentationDocument::Interval { j })
}

/// Canonical serialization: sorted vertices, sorted pairs.
pub fn serialize_named_graph(doc: &NamedGraphDocument) -> String {
    let (kind, sep, field) = match doc.kind {
        GraphKind::Graph => ("graph", "-", "edges"),
        GraphKind::Digraph => ("digraph", "->", "arcs"),
    };
    let mut vertices = doc.vertices.clone();
    vertices.sort();
    let mut pairs = doc.pairs.clone();
    pairs.sort();
    let mut out = format!("{kind} {{\n  vertices: {}\n", vertices.join(" "));
    if !pairs.is_empty() {
        let body: Vec<String> = pairs.iter().map(|(a, b)| format!("{a}{sep}{b}")).collect();
        out.push_str(&format!("  {field}: {}\n", body.join(" ")));
    }
    out.push_str("}\n");
    out
}

pub fn serialize_representation(doc: &RepresentationDocument) -> String {
    match doc {
        RepresentationDocument::Semiorder { delta, f } => {
            let body: Vec<String> = f.iter().map(|(k, v)| format!("{k}={v}")).collect();
            format!("semiorder {{\n  delta: {delta}\n  f: {}\n}}\n", body.join(" "))
        }
        RepresentationDocument::Interval { j } => {
            let body: Vec<String> = j
                .iter()
                .map(|(k, (lo, hi))| format!("{k}=[{lo},{hi}]"))
                .collect();
            format!("interval {{\n  J: {}\n}}\n", body.join(" "))
        }
    }
}

/// DOT output for human inspection; emit-only.
pub fn emit_dot(doc: &NamedGraphDocument) -> String {
    let (kind, sep) = match doc.kind {
        GraphKind::Graph => ("graph", "--"),
        GraphKind::Digraph => ("digraph", "->"),
    };
    let mut out = format!("{kind} G {{\n");
    for v in &doc.vertices {
        out.push_str(&format!("  \"{v}\";\n"));
    }
    for (a, b) in &doc.pairs {
        out.push_str(&format!("  \"{a}\" {sep} \"{b}\";\n"));
    }
    out.push_str("}\n");
    out
}

/// Name-to-index mapping (sorted order of names) plus the core value.
pub fn graph_from_document(
    doc: &NamedGraphDocument,
) -> Result<(UndirectedGraph, Vec<String>), DocError> {
    let names = sorted_names(&doc.vertices);
    let index = index_of(&names);
    let mut g = UndirectedGraph::new(names.len());
    for (a, b) in &doc.pairs {
        g.add_edge(index[a], index[b]);
    }
    Ok((g, names))
}

pub fn digraph_from_document(
    doc: &NamedGraphDocument,
) -> Result<(Digraph, Vec<String>), DocError> {
    let names = sorted_names(&doc.vertices);
    let index = index_of(&names);
    let mut d = Digraph::new(names.len());
    for (a, b) in &doc.pairs {
        d.add_arc(index[a], index[b]);
    }
    Ok((d, names))
}

pub fn graph_to_document(g: &UndirectedGraph, names: &[String]) -> NamedGraphDocument {
    let pairs = g
        .edges()
        .into_iter()
        .map(|(u, v)| order_pair(names[u].clone(), names[v].clone()))
        .collect();
    NamedGraphDocument {
        kind: GraphKind::Graph,
        vertices: names.to_vec(),
        pairs,
    }
}

pub fn digraph_to_document(d: &Digraph, names: &[String]) -> NamedGraphDocument {
    let mut pairs: Vec<(String, String)> = d
        .arcs()
        .into_iter()
        .map(|(x, y)| (names[x].clone(), names[y].clone()))
        .collect();
    pairs.sort();
    NamedGraphDocument {
        kind: GraphKind::Digraph,
        vertices: names.to_vec(),
        pairs,
    }
}

pub fn semiorder_from_document(
    delta: Rat,
    f: &BTreeMap<String, Rat>,
) -> (SemiorderRep, Vec<String>) {
    let names: Vec<String> = f.keys().cloned().collect();
    let values = names.iter().map(|n| f[n]).collect();
    (SemiorderRep::new(values, delta), names)
}

pub fn interval_from_document(
    j: &BTreeMap<String, (Rat, Rat)>,
) -> (IntervalRep, Vec<String>) {
    let names: Vec<String> = j.keys().cloned().collect();
    let intervals = names.iter().map(|n| j[n]).collect();
    (IntervalRep::new(intervals), names)
}

fn sorted_names(names: &[String]) -> Vec<String> {
    let mut out = names.to_vec();
    out.sort();
    out
}

fn index_of(names: &[String]) -> BTreeMap<String, usize> {
    names
        .iter()
        .enumerate()
        .map(|(i, n)| (n.clone(), i))
        .collect()
}

fn order_pair(a: String, b: String) -> (String, String) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}
