//! The `.qv` text format.
//!
//! ```text
//! # comments run to the end of the line
//! quiver C3
//! vertex 1 2 3
//! weight 1 = 1
//! arrow 1 -> 2
//! arrow 2 -> 3 [1,1]
//! arrow 3 -> 1
//! ```
//!
//! `quiver` and `weight` lines are optional; a missing valuation means
//! `(1,1)`. Vertex labels are any run of characters other than whitespace,
//! `[`, `]`, `,`, `=`, `#` and the arrow `->`.

use std::fmt::{self, Write as _};

use radzero_core::{QuiverError, RawArrow, RawQuiver, Valuation, ValuedQuiver, VertexId};
use thiserror::Error;

pub const DEFAULT_NAME: &str = "untitled";

/// 1-based line and column (in characters).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{pos}: {message}")]
pub struct ParseError {
    pub pos: Pos,
    pub kind: ParseErrorKind,
    pub message: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    Lexical,
    Syntax,
    UnknownVertex,
    DuplicateArrow,
    Validation,
}

impl ParseErrorKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ParseErrorKind::Lexical => "lexical",
            ParseErrorKind::Syntax => "syntax",
            ParseErrorKind::UnknownVertex => "unknown_vertex",
            ParseErrorKind::DuplicateArrow => "duplicate_arrow",
            ParseErrorKind::Validation => "validation",
        }
    }
}

fn error(pos: Pos, kind: ParseErrorKind, message: impl Into<String>) -> ParseError {
    ParseError { pos, kind, message: message.into() }
}

#[derive(Debug, Clone, Copy)]
pub struct ArrowSpan {
    pub line: Pos,
    pub source: Pos,
    pub target: Pos,
    pub valuation: Option<Pos>,
}

/// Where each declaration came from, indexed like the [`RawQuiver`] built
/// during parsing.
#[derive(Debug, Clone, Default)]
pub struct SourceMap {
    pub name: Option<Pos>,
    pub vertices: Vec<Pos>,
    pub weights: Vec<Pos>,
    pub arrows: Vec<ArrowSpan>,
}

/// A parsed quiver file. Equality ignores source positions.
#[derive(Debug, Clone)]
pub struct QuiverDocument {
    pub name: String,
    pub body: ValuedQuiver,
    pub spans: SourceMap,
}

impl PartialEq for QuiverDocument {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.body == other.body
    }
}

impl Eq for QuiverDocument {}

impl QuiverDocument {
    pub fn new(name: impl Into<String>, body: ValuedQuiver) -> Self {
        QuiverDocument { name: name.into(), body, spans: SourceMap::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Word(String),
    Arrow,
    Open,
    Close,
    Comma,
    Equals,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Word(w) => write!(f, "`{w}`"),
            Tok::Arrow => f.write_str("`->`"),
            Tok::Open => f.write_str("`[`"),
            Tok::Close => f.write_str("`]`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Equals => f.write_str("`=`"),
        }
    }
}

fn lex_line(line_no: usize, text: &str) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line: line_no, column: i + 1 };
        if c == '#' {
            break;
        }
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_control() {
            return Err(error(pos, ParseErrorKind::Lexical, format!("unexpected control character {c:?}")));
        }
        let single = match c {
            '[' => Some(Tok::Open),
            ']' => Some(Tok::Close),
            ',' => Some(Tok::Comma),
            '=' => Some(Tok::Equals),
            '-' if chars.get(i + 1) == Some(&'>') => Some(Tok::Arrow),
            _ => None,
        };
        if let Some(tok) = single {
            i += if tok == Tok::Arrow { 2 } else { 1 };
            out.push((tok, pos));
            continue;
        }
        let start = i;
        while i < chars.len() {
            let d = chars[i];
            let stop = d.is_whitespace()
                || matches!(d, '[' | ']' | ',' | '=' | '#')
                || (d == '-' && chars.get(i + 1) == Some(&'>'))
                || d.is_control();
            if stop {
                break;
            }
            i += 1;
        }
        out.push((Tok::Word(chars[start..i].iter().collect()), pos));
    }
    Ok(out)
}

struct Line {
    toks: Vec<(Tok, Pos)>,
    at: usize,
    end: Pos,
}

impl Line {
    fn next(&mut self, what: &str) -> Result<(Tok, Pos), ParseError> {
        let t =
            self.toks.get(self.at).cloned().ok_or_else(|| {
                error(self.end, ParseErrorKind::Syntax, format!("expected {what}, found end of line"))
            })?;
        self.at += 1;
        Ok(t)
    }

    fn word(&mut self, what: &str) -> Result<(String, Pos), ParseError> {
        match self.next(what)? {
            (Tok::Word(w), p) => Ok((w, p)),
            (t, p) => Err(error(p, ParseErrorKind::Syntax, format!("expected {what}, found {t}"))),
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<Pos, ParseError> {
        let what = tok.to_string();
        match self.next(&what)? {
            (t, p) if t == tok => Ok(p),
            (t, p) => Err(error(p, ParseErrorKind::Syntax, format!("expected {what}, found {t}"))),
        }
    }

    fn number(&mut self, what: &str) -> Result<(u64, Pos), ParseError> {
        let (w, p) = self.word(what)?;
        w.parse::<u64>()
            .map(|n| (n, p))
            .map_err(|_| error(p, ParseErrorKind::Syntax, format!("expected {what}, found `{w}`")))
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(t, _)| t)
    }

    fn finish(&self) -> Result<(), ParseError> {
        match self.toks.get(self.at) {
            Some((t, p)) => Err(error(*p, ParseErrorKind::Syntax, format!("unexpected {t}"))),
            None => Ok(()),
        }
    }
}

pub fn parse(text: &str) -> Result<QuiverDocument, ParseError> {
    let mut raw = RawQuiver::new();
    let mut spans = SourceMap::default();
    let mut name: Option<String> = None;
    for (idx, line_text) in text.lines().enumerate() {
        let line_no = idx + 1;
        let toks = lex_line(line_no, line_text)?;
        let end = Pos { line: line_no, column: line_text.chars().count() + 1 };
        let mut line = Line { toks, at: 0, end };
        let Some((Tok::Word(keyword), kpos)) = line.toks.first().cloned() else {
            if let Some((t, p)) = line.toks.first() {
                return Err(error(*p, ParseErrorKind::Syntax, format!("expected a keyword, found {t}")));
            }
            continue;
        };
        line.at = 1;
        match keyword.as_str() {
            "quiver" => {
                if name.is_some() {
                    return Err(error(kpos, ParseErrorKind::Syntax, "second `quiver` line"));
                }
                let (n, p) = line.word("a quiver name")?;
                name = Some(n);
                spans.name = Some(p);
            }
            "vertex" => {
                let (first, p) = line.word("a vertex label")?;
                raw.vertices.push(VertexId::new(first));
                spans.vertices.push(p);
                while line.peek().is_some() {
                    let (v, p) = line.word("a vertex label")?;
                    raw.vertices.push(VertexId::new(v));
                    spans.vertices.push(p);
                }
            }
            "weight" => {
                let (v, p) = line.word("a vertex label")?;
                line.expect(Tok::Equals)?;
                let (f, _) = line.number("a weight")?;
                raw.weights.push((VertexId::new(v), f));
                spans.weights.push(p);
            }
            "arrow" => {
                let (s, sp) = line.word("a source vertex")?;
                line.expect(Tok::Arrow)?;
                let (t, tp) = line.word("a target vertex")?;
                let (valuation, vpos) = if line.peek() == Some(&Tok::Open) {
                    let open = line.expect(Tok::Open)?;
                    let (a, _) = line.number("a valuation component")?;
                    line.expect(Tok::Comma)?;
                    let (b, _) = line.number("a valuation component")?;
                    line.expect(Tok::Close)?;
                    (Some(Valuation::new(a, b)), Some(open))
                } else {
                    (None, None)
                };
                raw.arrows.push(RawArrow { source: VertexId::new(s), target: VertexId::new(t), valuation });
                spans.arrows.push(ArrowSpan { line: kpos, source: sp, target: tp, valuation: vpos });
            }
            other => {
                return Err(error(kpos, ParseErrorKind::Syntax, format!("unknown keyword `{other}`")));
            }
        }
        line.finish()?;
    }
    let body = raw.validate().map_err(|e| locate(&e, &raw, &spans))?;
    Ok(QuiverDocument { name: name.unwrap_or_else(|| DEFAULT_NAME.to_owned()), body, spans })
}

fn locate(e: &QuiverError, raw: &RawQuiver, spans: &SourceMap) -> ParseError {
    let origin = Pos { line: 1, column: 1 };
    let vertex_pos =
        |id: &VertexId| raw.vertices.iter().position(|v| v == id).map(|i| spans.vertices[i]).unwrap_or(origin);
    let (pos, kind) = match e {
        QuiverError::DuplicateVertex { index, .. } => (spans.vertices[*index], ParseErrorKind::Validation),
        QuiverError::DanglingEndpoint { arrow, id } => {
            let span = spans.arrows[*arrow];
            let pos = if raw.arrows[*arrow].source == *id { span.source } else { span.target };
            (pos, ParseErrorKind::UnknownVertex)
        }
        QuiverError::DuplicateArrow { arrow, .. } => (spans.arrows[*arrow].line, ParseErrorKind::DuplicateArrow),
        QuiverError::NonPositiveValuation { arrow, .. } | QuiverError::LoopMismatch { arrow, .. } => {
            let span = spans.arrows[*arrow];
            (span.valuation.unwrap_or(span.line), ParseErrorKind::Validation)
        }
        QuiverError::SymmetrizerInconsistent { arrow } => (spans.arrows[*arrow].line, ParseErrorKind::Validation),
        QuiverError::UnknownWeightVertex { index, .. } => (spans.weights[*index], ParseErrorKind::UnknownVertex),
        QuiverError::DuplicateWeight { index, .. } | QuiverError::NonPositiveWeight { index, .. } => {
            (spans.weights[*index], ParseErrorKind::Validation)
        }
        QuiverError::NonIntegralWeight { id } => (vertex_pos(id), ParseErrorKind::Validation),
        QuiverError::Overflow => (origin, ParseErrorKind::Validation),
    };
    error(pos, kind, e.to_string())
}

/// Canonical text: vertices in declaration order (the order every report
/// uses), arrows sorted by endpoint indices, `weight` lines only where
/// `f ≠ 1`, valuations only where not `(1,1)`.
pub fn serialize(doc: &QuiverDocument) -> String {
    serialize_quiver(&doc.name, &doc.body)
}

pub fn serialize_quiver(name: &str, q: &ValuedQuiver) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "quiver {name}");
    if !q.is_empty() {
        let labels: Vec<&str> = q.vertices().iter().map(VertexId::as_str).collect();
        let _ = writeln!(out, "vertex {}", labels.join(" "));
    }
    for (i, &f) in q.weights().iter().enumerate() {
        if f != 1 {
            let _ = writeln!(out, "weight {} = {f}", q.vertex(i));
        }
    }
    for (s, t, v) in q.arrows() {
        let _ = write!(out, "arrow {} -> {}", q.vertex(s), q.vertex(t));
        if !v.is_trivial() {
            let _ = write!(out, " [{},{}]", v.a, v.b);
        }
        out.push('\n');
    }
    out
}

/// Whether a label survives a serialize/parse round trip.
pub fn is_valid_label(label: &str) -> bool {
    !label.is_empty()
        && !label.contains("->")
        && !label.chars().any(|c| c.is_whitespace() || c.is_control() || matches!(c, '[' | ']' | ',' | '=' | '#'))
}
