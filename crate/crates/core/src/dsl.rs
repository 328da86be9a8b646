//! Text format for presentations.
//!
//! ```text
//! # Γ(1,1;1)
//! algebra { char = 0
//!   vertices = [1]
//!   arrows = [ a: 1 -> 1, b: 1 -> 1 ]
//!   relations = [ a*b - b*a, a*a, b*b ]
//! }
//! ```
//!
//! A term is `[coeff '*'] arrow ('*' arrow)*`, paths read left to right.
//! Coefficients are integers or fractions `n/d`. A family string such as
//! `gamma(2,3,1)` is accepted wherever a document is.

use std::fmt::Write as _;

use num_bigint::BigInt;

use crate::engine::{Arrow, Presentation, Quiver, Relation};
use crate::error::{Result, SsbError};
use crate::families::FamilySpec;
use crate::kernel::{is_prime, Field};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Span {
    pub line: usize,
    pub col: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SourceContent {
    Presentation(Presentation),
    Family(FamilySpec),
}

/// Parsed input with the positions of its arrows and relations.
#[derive(Clone, Debug)]
pub struct SourceDocument {
    pub text: String,
    pub content: SourceContent,
    /// Characteristic written in the document, if any.
    pub declared_char: Option<u64>,
    pub arrow_spans: Vec<Span>,
    pub relation_spans: Vec<Span>,
}

impl SourceDocument {
    /// The presentation over the declared characteristic, or over `ch` for
    /// family strings and documents without a `char` line.
    pub fn presentation(&self, ch: u64) -> Result<Presentation> {
        match &self.content {
            SourceContent::Presentation(p) => Ok(p.clone()),
            SourceContent::Family(f) => f.presentation(Field::new(ch)?),
        }
    }

    pub fn family(&self) -> Option<FamilySpec> {
        match &self.content {
            SourceContent::Family(f) => Some(*f),
            SourceContent::Presentation(p) => p.family,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Sym(&'static str),
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    span: Span,
}

fn err(span: Span, msg: impl Into<String>) -> SsbError {
    SsbError::ParseError { line: span.line, col: span.col, msg: msg.into() }
}

fn lex(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let span = Span { line: ln + 1, col: i + 1 };
            if c == '#' {
                break;
            } else if c.is_whitespace() {
                i += 1;
            } else if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push(Token { tok: Tok::Int(s.parse().expect("digits")), span });
            } else if c.is_alphabetic() || c == '_' {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
                    i += 1;
                }
                out.push(Token { tok: Tok::Ident(chars[start..i].iter().collect()), span });
            } else if c == '-' && chars.get(i + 1) == Some(&'>') {
                out.push(Token { tok: Tok::Sym("->"), span });
                i += 2;
            } else {
                let sym = match c {
                    '{' => "{",
                    '}' => "}",
                    '[' => "[",
                    ']' => "]",
                    '=' => "=",
                    ',' => ",",
                    ':' => ":",
                    '*' => "*",
                    '+' => "+",
                    '-' => "-",
                    '/' => "/",
                    _ => return Err(err(span, format!("unexpected character {c:?}"))),
                };
                out.push(Token { tok: Tok::Sym(sym), span });
                i += 1;
            }
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    end: Span,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn span(&self) -> Span {
        self.toks.get(self.pos).map_or(self.end, |t| t.span)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn is_sym(&self, s: &str) -> bool {
        matches!(self.peek(), Some(Tok::Sym(x)) if *x == s)
    }

    fn expect_sym(&mut self, s: &str) -> Result<Span> {
        let span = self.span();
        if self.is_sym(s) {
            self.pos += 1;
            Ok(span)
        } else {
            Err(err(span, format!("expected '{s}'")))
        }
    }

    fn ident(&mut self, what: &str) -> Result<(String, Span)> {
        let span = self.span();
        match self.next().map(|t| t.tok) {
            Some(Tok::Ident(s)) => Ok((s, span)),
            _ => Err(err(span, format!("expected {what}"))),
        }
    }

    /// Identifier or bare integer (vertex labels may be numbers).
    fn label(&mut self, what: &str) -> Result<(String, Span)> {
        let span = self.span();
        match self.next().map(|t| t.tok) {
            Some(Tok::Ident(s)) => Ok((s, span)),
            Some(Tok::Int(n)) => Ok((n.to_string(), span)),
            _ => Err(err(span, format!("expected {what}"))),
        }
    }

    /// `[ item (, item)* ]`, allowing an empty list and a trailing comma.
    fn list<T>(&mut self, mut item: impl FnMut(&mut Parser) -> Result<T>) -> Result<Vec<T>> {
        self.expect_sym("[")?;
        let mut out = Vec::new();
        while !self.is_sym("]") {
            out.push(item(self)?);
            if !self.is_sym("]") {
                self.expect_sym(",")?;
            }
        }
        self.expect_sym("]")?;
        Ok(out)
    }
}

struct RawTerm {
    negative: bool,
    coeff: Option<(BigInt, BigInt)>,
    arrows: Vec<(String, Span)>,
}

fn parse_term(ps: &mut Parser, negative: bool) -> Result<RawTerm> {
    let mut coeff = None;
    if let Some(Tok::Int(n)) = ps.peek().cloned() {
        ps.pos += 1;
        let mut d = BigInt::from(1);
        if ps.is_sym("/") {
            ps.pos += 1;
            let span = ps.span();
            match ps.next().map(|t| t.tok) {
                Some(Tok::Int(x)) => d = x,
                _ => return Err(err(span, "expected a denominator")),
            }
        }
        coeff = Some((n, d));
        ps.expect_sym("*")?;
    }
    let mut arrows = vec![ps.ident("an arrow name")?];
    while ps.is_sym("*") {
        ps.pos += 1;
        arrows.push(ps.ident("an arrow name")?);
    }
    Ok(RawTerm { negative, coeff, arrows })
}

fn parse_relation(ps: &mut Parser) -> Result<(Vec<RawTerm>, Span)> {
    let span = ps.span();
    let mut negative = false;
    if ps.is_sym("-") {
        ps.pos += 1;
        negative = true;
    }
    let mut terms = vec![parse_term(ps, negative)?];
    while ps.is_sym("+") || ps.is_sym("-") {
        let neg = ps.is_sym("-");
        ps.pos += 1;
        terms.push(parse_term(ps, neg)?);
    }
    Ok((terms, span))
}

/// Parse a presentation document. `default_char` is used when the document has
/// no `char` line.
pub fn parse_presentation(text: &str, default_char: u64) -> Result<Presentation> {
    match parse_document(text, default_char)?.content {
        SourceContent::Presentation(p) => Ok(p),
        SourceContent::Family(f) => f.presentation(Field::new(default_char)?),
    }
}

/// Parse either a family string or a presentation document.
pub fn parse_document(text: &str, default_char: u64) -> Result<SourceDocument> {
    let trimmed = text.trim();
    let looks_like_family = ["gamma", "lambda", "nakayama"]
        .iter()
        .any(|f| trimmed.to_lowercase().starts_with(f) && trimmed[f.len()..].trim_start().starts_with('('));
    if looks_like_family {
        let f: FamilySpec = trimmed.parse()?;
        f.canonical()?;
        return Ok(SourceDocument {
            text: text.to_string(),
            content: SourceContent::Family(f),
            declared_char: None,
            arrow_spans: Vec::new(),
            relation_spans: Vec::new(),
        });
    }

    let toks = lex(text)?;
    let end = Span { line: text.lines().count().max(1), col: text.lines().last().map_or(1, |l| l.chars().count() + 1) };
    let mut ps = Parser { toks, pos: 0, end };
    let (kw, span) = ps.ident("'algebra'")?;
    if kw != "algebra" {
        return Err(err(span, "expected 'algebra'"));
    }
    ps.expect_sym("{")?;

    let mut ch: Option<(u64, Span)> = None;
    let mut vertices: Option<Vec<(String, Span)>> = None;
    let mut arrows: Option<Vec<(String, String, String, Span)>> = None;
    let mut relations: Option<Vec<(Vec<RawTerm>, Span)>> = None;
    while !ps.is_sym("}") {
        let (key, kspan) = ps.ident("a field name")?;
        ps.expect_sym("=")?;
        let dup = || err(kspan, format!("'{key}' given twice"));
        match key.as_str() {
            "char" => {
                let span = ps.span();
                let n = match ps.next().map(|t| t.tok) {
                    Some(Tok::Int(n)) => n,
                    _ => return Err(err(span, "expected an integer characteristic")),
                };
                let n: u64 = n.try_into().map_err(|_| err(span, "characteristic too large"))?;
                if n != 0 && !is_prime(n) {
                    return Err(err(span, format!("characteristic must be 0 or a prime, got {n}")));
                }
                Field::new(n).map_err(|e| err(span, e.to_string()))?;
                if ch.replace((n, span)).is_some() {
                    return Err(dup());
                }
            }
            "vertices" => {
                let v = ps.list(|p| p.label("a vertex label"))?;
                if vertices.replace(v).is_some() {
                    return Err(dup());
                }
            }
            "arrows" => {
                let a = ps.list(|p| {
                    let (name, span) = p.ident("an arrow name")?;
                    p.expect_sym(":")?;
                    let (s, _) = p.label("a source vertex")?;
                    p.expect_sym("->")?;
                    let (t, _) = p.label("a target vertex")?;
                    Ok((name, s, t, span))
                })?;
                if arrows.replace(a).is_some() {
                    return Err(dup());
                }
            }
            "relations" => {
                let r = ps.list(parse_relation)?;
                if relations.replace(r).is_some() {
                    return Err(dup());
                }
            }
            _ => return Err(err(kspan, format!("unknown field '{key}'"))),
        }
    }
    ps.expect_sym("}")?;
    if ps.pos < ps.toks.len() {
        return Err(err(ps.span(), "unexpected input after the closing brace"));
    }

    let here = ps.span();
    let vertices = vertices.ok_or_else(|| err(here, "missing 'vertices'"))?;
    let arrows = arrows.unwrap_or_default();
    let relations = relations.unwrap_or_default();
    let declared_char = ch.map(|(c, _)| c);
    let field = Field::new(declared_char.unwrap_or(default_char))?;

    let mut labels: Vec<String> = Vec::new();
    for (v, span) in &vertices {
        if labels.contains(v) {
            return Err(SsbError::ValidationError(format!("{}:{}: duplicate vertex {v}", span.line, span.col)));
        }
        labels.push(v.clone());
    }
    let vertex = |name: &str, span: Span| {
        labels.iter().position(|l| l == name).ok_or_else(|| {
            SsbError::ValidationError(format!("{}:{}: arrow uses undeclared vertex {name}", span.line, span.col))
        })
    };
    let mut qarrows = Vec::new();
    for (name, s, t, span) in &arrows {
        qarrows.push(Arrow { name: name.clone(), source: vertex(s, *span)?, target: vertex(t, *span)? });
    }
    let quiver = Quiver::new(labels.clone(), qarrows)?;

    let mut rels = Vec::new();
    for (terms, span) in &relations {
        let mut out = Vec::new();
        for t in terms {
            let mut ids = Vec::new();
            for (name, aspan) in &t.arrows {
                ids.push(quiver.arrow_index(name).ok_or_else(|| err(*aspan, format!("unknown arrow '{name}'")))?);
            }
            let path = quiver.path_of(&ids).ok_or_else(|| {
                SsbError::ValidationError(format!("{}:{}: arrows do not compose into a path", span.line, span.col))
            })?;
            let mut c = match &t.coeff {
                None => field.one(),
                Some((n, d)) => {
                    let dinv =
                        field.from_bigint(d).inv().ok_or_else(|| err(*span, "coefficient denominator is zero"))?;
                    field.from_bigint(n) * dinv
                }
            };
            if t.negative {
                c = -c;
            }
            if !c.is_zero() {
                out.push((c, path));
            }
        }
        if out.is_empty() {
            return Err(err(*span, "relation has no nonzero term"));
        }
        rels.push(Relation { terms: out });
    }
    let pres = Presentation::new(quiver, rels, field).map_err(|e| match e {
        SsbError::NonAdmissible(m) => SsbError::ValidationError(format!("non-admissible relation: {m}")),
        other => other,
    })?;
    Ok(SourceDocument {
        text: text.to_string(),
        content: SourceContent::Presentation(pres),
        declared_char,
        arrow_spans: arrows.iter().map(|a| a.3).collect(),
        relation_spans: relations.iter().map(|r| r.1).collect(),
    })
}

/// Document text for a presentation; parses back to an identical structure.
pub fn emit(pres: &Presentation) -> String {
    pres.to_string()
}

/// Graphviz rendering of the quiver, vertices carrying their labels.
pub fn to_dot(pres: &Presentation, name: &str) -> String {
    let q = &pres.quiver;
    let mut s = String::new();
    let _ = writeln!(s, "digraph \"{}\" {{", name.replace('"', "'"));
    for v in q.vertex_labels() {
        let _ = writeln!(s, "  \"{v}\";");
    }
    for a in q.arrows() {
        let _ = writeln!(
            s,
            "  \"{}\" -> \"{}\" [label=\"{}\"];",
            q.vertex_label(a.source),
            q.vertex_label(a.target),
            a.name
        );
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    const G111: &str = "# Γ(1,1;1)
algebra { char = 0
  vertices = [1]
  arrows = [ a: 1 -> 1, b: 1 -> 1 ]
  relations = [ a*b - b*a, a*a, b*b ]
}
";

    #[test]
    fn gamma_document() {
        let p = parse_presentation(G111, 0).unwrap();
        assert_eq!(p.quiver.num_vertices(), 1);
        assert_eq!(p.quiver.arrows().len(), 2);
        assert_eq!(p.relations.len(), 3);
        assert_eq!(crate::engine::build_algebra(&p).unwrap().dim(), 4);
    }

    #[test]
    fn round_trip() {
        for ch in [0, 3] {
            let p = parse_presentation(G111, ch).unwrap();
            assert_eq!(parse_presentation(&emit(&p), ch).unwrap(), p);
        }
        let f = FamilySpec::Lambda { p: 2, q: 3, s: 2, t: 3 }.presentation(Field::new(5).unwrap()).unwrap();
        let mut back = parse_presentation(&emit(&f), 0).unwrap();
        back.family = f.family;
        assert_eq!(back, f);
        let doc = "algebra { vertices = [x, y]\n arrows = [u: x -> y, v: y -> x]\n relations = [1/2*u*v*u - 3*u*v*u*v*u, v*u*v] }";
        let p = parse_presentation(doc, 0).unwrap();
        assert_eq!(parse_presentation(&emit(&p), 0).unwrap(), p);
    }

    #[test]
    fn errors() {
        let bad_end =
            "algebra { vertices = [1, 2]\n arrows = [a: 1 -> 2, b: 2 -> 1, c: 2 -> 2]\n relations = [ a*b - b*a*c ] }";
        assert!(matches!(parse_presentation(bad_end, 0), Err(SsbError::ValidationError(_))));
        let bad_char = "algebra {\n  char = 4\n vertices = [1] }";
        match parse_presentation(bad_char, 0) {
            Err(SsbError::ParseError { line, col, .. }) => assert_eq!((line, col), (2, 10)),
            other => panic!("{other:?}"),
        }
        let dangling = "algebra { vertices = [1, 2]\n arrows = [a: 1 -> 1] }";
        assert!(matches!(parse_presentation(dangling, 0), Err(SsbError::ValidationError(_))));
        let short = "algebra { vertices = [1]\n arrows = [a: 1 -> 1]\n relations = [a] }";
        assert!(matches!(parse_presentation(short, 0), Err(SsbError::ValidationError(_))));
        assert!(matches!(parse_presentation("algebra { vertices = [1] ", 0), Err(SsbError::ParseError { .. })));
        assert!(matches!(parse_document("gamma(1,2)", 0), Err(SsbError::ParseError { .. })));
    }

    #[test]
    fn dot_labels() {
        let p = FamilySpec::Gamma { p: 2, q: 3, r: 1 }.presentation(Field::rationals()).unwrap();
        let d = to_dot(&p, "gamma(2,3,1)");
        for v in 1..=4 {
            assert!(d.contains(&format!("\"{v}\";")));
        }
        assert_eq!(d.matches("->").count(), 5);
    }
}
