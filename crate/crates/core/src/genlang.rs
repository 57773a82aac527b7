//! A small graph-construction expression language.
//!
//! Grammar (whitespace-insensitive, ASCII keywords):
//!
//! ```text
//! expr := term { "+" term } ;            // join, left-assoc, binds loosest
//! term := atom { "u" atom } ;            // disjoint union, left-assoc
//! atom := "K(" int ")" | "K(" int "," int ")" | "C(" int ")" | "petersen"
//!       | "T(" int "," int ")" | "c5(" int "," int ")"
//!       | "g7(" int "," int "," int ")" | "line(" expr ")"
//!       | "cart(" expr "," expr ")" | "dir(" expr "," expr ")"
//!       | "file(" path ")" | "(" expr ")" ;
//! ```
//!
//! `K(1) u K(2) + H` parses as `(K(1) u K(2)) + H`.

use crate::generators::{
    c5_family, disjoint_union, g7_family, join, petersen, try_complete, try_complete_bipartite,
    try_cycle, try_turan_graph,
};
use crate::graph::Graph;
use crate::io::load_graph_file;
use crate::products::{cartesian_product, direct_product, line_graph};
use std::fmt;
use std::path::PathBuf;
use thiserror::Error;

/// Any evaluated expression is capped at this many vertices.
pub const MAX_EVAL_VERTICES: usize = 4096;

/// Byte offset of a node in its source text. Spans compare equal so that
/// parsed ASTs compare structurally.
#[derive(Debug, Clone, Copy, Default)]
pub struct Span(pub usize);

impl PartialEq for Span {
    fn eq(&self, _: &Self) -> bool {
        true
    }
}
impl Eq for Span {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphExpr {
    Complete(Span, u64),
    CompleteBipartite(Span, u64, u64),
    Cycle(Span, u64),
    Petersen(Span),
    Turan(Span, u64, u64),
    C5Fam(Span, u64, u64),
    G7Fam(Span, u64, u64, u64),
    Line(Span, Box<GraphExpr>),
    Cartesian(Span, Box<GraphExpr>, Box<GraphExpr>),
    Direct(Span, Box<GraphExpr>, Box<GraphExpr>),
    Join(Span, Box<GraphExpr>, Box<GraphExpr>),
    Union(Span, Box<GraphExpr>, Box<GraphExpr>),
    File(Span, PathBuf),
}

impl GraphExpr {
    fn precedence(&self) -> u8 {
        match self {
            GraphExpr::Join(..) => 1,
            GraphExpr::Union(..) => 2,
            _ => 3,
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let me = self.precedence();
        if me < min {
            write!(f, "(")?;
        }
        match self {
            GraphExpr::Complete(_, n) => write!(f, "K({n})")?,
            GraphExpr::CompleteBipartite(_, m, n) => write!(f, "K({m},{n})")?,
            GraphExpr::Cycle(_, n) => write!(f, "C({n})")?,
            GraphExpr::Petersen(_) => write!(f, "petersen")?,
            GraphExpr::Turan(_, n, r) => write!(f, "T({n},{r})")?,
            GraphExpr::C5Fam(_, i, j) => write!(f, "c5({i},{j})")?,
            GraphExpr::G7Fam(_, i, j, k) => write!(f, "g7({i},{j},{k})")?,
            GraphExpr::Line(_, e) => {
                write!(f, "line(")?;
                e.fmt_prec(f, 1)?;
                write!(f, ")")?;
            }
            GraphExpr::Cartesian(_, a, b) => {
                write!(f, "cart(")?;
                a.fmt_prec(f, 1)?;
                write!(f, ",")?;
                b.fmt_prec(f, 1)?;
                write!(f, ")")?;
            }
            GraphExpr::Direct(_, a, b) => {
                write!(f, "dir(")?;
                a.fmt_prec(f, 1)?;
                write!(f, ",")?;
                b.fmt_prec(f, 1)?;
                write!(f, ")")?;
            }
            GraphExpr::Join(_, a, b) => {
                a.fmt_prec(f, 1)?;
                write!(f, " + ")?;
                b.fmt_prec(f, 2)?;
            }
            GraphExpr::Union(_, a, b) => {
                a.fmt_prec(f, 2)?;
                write!(f, " u ")?;
                b.fmt_prec(f, 3)?;
            }
            GraphExpr::File(_, p) => write!(f, "file({})", p.display())?,
        }
        if me < min {
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Display for GraphExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("parse error at offset {offset}: expected {}, found {found}", expected.join(" or "))]
pub struct ParseError {
    pub offset: usize,
    pub expected: Vec<&'static str>,
    pub found: String,
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("at offset {offset}: {msg}")]
pub struct EvalError {
    pub offset: usize,
    pub msg: String,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(u64),
    Ident(String),
    Path(String),
    LParen,
    RParen,
    Comma,
    Plus,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "integer {n}"),
            Tok::Ident(s) => write!(f, "{s:?}"),
            Tok::Path(p) => write!(f, "path {p:?}"),
            Tok::LParen => write!(f, "\"(\""),
            Tok::RParen => write!(f, "\")\""),
            Tok::Comma => write!(f, "\",\""),
            Tok::Plus => write!(f, "\"+\""),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '(' => {
                toks.push((i, Tok::LParen));
                i += 1;
            }
            ')' => {
                toks.push((i, Tok::RParen));
                i += 1;
            }
            ',' => {
                toks.push((i, Tok::Comma));
                i += 1;
            }
            '+' => {
                toks.push((i, Tok::Plus));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: u64 = text[start..i].parse().map_err(|_| ParseError {
                    offset: start,
                    expected: vec!["integer"],
                    found: format!("{:?} (out of range)", &text[start..i]),
                })?;
                toks.push((start, Tok::Int(n)));
            }
            'a'..='z' | 'A'..='Z' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric()) {
                    i += 1;
                }
                let ident = &text[start..i];
                toks.push((start, Tok::Ident(ident.to_string())));
                if ident == "file" {
                    // Lex the path raw: file( <anything but ')'> )
                    while i < bytes.len() && (bytes[i] as char).is_whitespace() {
                        i += 1;
                    }
                    if i >= bytes.len() || bytes[i] != b'(' {
                        return Err(ParseError {
                            offset: i.min(bytes.len()),
                            expected: vec!["\"(\""],
                            found: found_at(text, i),
                        });
                    }
                    toks.push((i, Tok::LParen));
                    i += 1;
                    let pstart = i;
                    while i < bytes.len() && bytes[i] != b')' {
                        i += 1;
                    }
                    if i >= bytes.len() {
                        return Err(ParseError {
                            offset: i,
                            expected: vec!["\")\""],
                            found: "end of input".to_string(),
                        });
                    }
                    toks.push((pstart, Tok::Path(text[pstart..i].trim().to_string())));
                    toks.push((i, Tok::RParen));
                    i += 1;
                }
            }
            _ => {
                return Err(ParseError {
                    offset: i,
                    expected: vec!["token"],
                    found: format!("{c:?}"),
                })
            }
        }
    }
    Ok(toks)
}

fn found_at(text: &str, i: usize) -> String {
    if i >= text.len() {
        "end of input".to_string()
    } else {
        format!("{:?}", &text[i..text.len().min(i + 1)])
    }
}

struct Parser<'a> {
    toks: &'a [(usize, Tok)],
    pos: usize,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&(usize, Tok)> {
        self.toks.get(self.pos)
    }

    fn err(&self, expected: Vec<&'static str>) -> ParseError {
        match self.peek() {
            Some((off, tok)) => ParseError {
                offset: *off,
                expected,
                found: tok.to_string(),
            },
            None => ParseError {
                offset: self.end,
                expected,
                found: "end of input".to_string(),
            },
        }
    }

    fn eat(&mut self, want: &Tok, name: &'static str) -> Result<usize, ParseError> {
        match self.peek() {
            Some((off, tok)) if tok == want => {
                let off = *off;
                self.pos += 1;
                Ok(off)
            }
            _ => Err(self.err(vec![name])),
        }
    }

    fn eat_int(&mut self) -> Result<u64, ParseError> {
        match self.peek() {
            Some((_, Tok::Int(n))) => {
                let n = *n;
                self.pos += 1;
                Ok(n)
            }
            _ => Err(self.err(vec!["integer"])),
        }
    }

    fn expr(&mut self) -> Result<GraphExpr, ParseError> {
        let mut lhs = self.term()?;
        while matches!(self.peek(), Some((_, Tok::Plus))) {
            let (off, _) = self.toks[self.pos];
            self.pos += 1;
            let rhs = self.term()?;
            lhs = GraphExpr::Join(Span(off), Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<GraphExpr, ParseError> {
        let mut lhs = self.atom()?;
        while matches!(self.peek(), Some((_, Tok::Ident(id))) if id == "u") {
            let (off, _) = self.toks[self.pos];
            self.pos += 1;
            let rhs = self.atom()?;
            lhs = GraphExpr::Union(Span(off), Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn atom(&mut self) -> Result<GraphExpr, ParseError> {
        let (off, tok) = match self.peek() {
            Some(t) => (t.0, t.1.clone()),
            None => return Err(self.err(vec!["expression"])),
        };
        let span = Span(off);
        match tok {
            Tok::LParen => {
                self.pos += 1;
                let e = self.expr()?;
                self.eat(&Tok::RParen, "\")\"")?;
                Ok(e)
            }
            Tok::Ident(id) => match id.as_str() {
                "petersen" => {
                    self.pos += 1;
                    Ok(GraphExpr::Petersen(span))
                }
                "K" => {
                    self.pos += 1;
                    self.eat(&Tok::LParen, "\"(\"")?;
                    let a = self.eat_int()?;
                    if matches!(self.peek(), Some((_, Tok::Comma))) {
                        self.pos += 1;
                        let b = self.eat_int()?;
                        self.eat(&Tok::RParen, "\")\"")?;
                        Ok(GraphExpr::CompleteBipartite(span, a, b))
                    } else {
                        self.eat(&Tok::RParen, "\")\"")?;
                        Ok(GraphExpr::Complete(span, a))
                    }
                }
                "C" => {
                    self.pos += 1;
                    self.eat(&Tok::LParen, "\"(\"")?;
                    let n = self.eat_int()?;
                    self.eat(&Tok::RParen, "\")\"")?;
                    Ok(GraphExpr::Cycle(span, n))
                }
                "T" => {
                    self.pos += 1;
                    self.eat(&Tok::LParen, "\"(\"")?;
                    let n = self.eat_int()?;
                    self.eat(&Tok::Comma, "\",\"")?;
                    let r = self.eat_int()?;
                    self.eat(&Tok::RParen, "\")\"")?;
                    Ok(GraphExpr::Turan(span, n, r))
                }
                "c5" => {
                    self.pos += 1;
                    self.eat(&Tok::LParen, "\"(\"")?;
                    let i = self.eat_int()?;
                    self.eat(&Tok::Comma, "\",\"")?;
                    let j = self.eat_int()?;
                    self.eat(&Tok::RParen, "\")\"")?;
                    Ok(GraphExpr::C5Fam(span, i, j))
                }
                "g7" => {
                    self.pos += 1;
                    self.eat(&Tok::LParen, "\"(\"")?;
                    let i = self.eat_int()?;
                    self.eat(&Tok::Comma, "\",\"")?;
                    let j = self.eat_int()?;
                    self.eat(&Tok::Comma, "\",\"")?;
                    let k = self.eat_int()?;
                    self.eat(&Tok::RParen, "\")\"")?;
                    Ok(GraphExpr::G7Fam(span, i, j, k))
                }
                "line" => {
                    self.pos += 1;
                    self.eat(&Tok::LParen, "\"(\"")?;
                    let e = self.expr()?;
                    self.eat(&Tok::RParen, "\")\"")?;
                    Ok(GraphExpr::Line(span, Box::new(e)))
                }
                "cart" | "dir" => {
                    self.pos += 1;
                    self.eat(&Tok::LParen, "\"(\"")?;
                    let a = self.expr()?;
                    self.eat(&Tok::Comma, "\",\"")?;
                    let b = self.expr()?;
                    self.eat(&Tok::RParen, "\")\"")?;
                    Ok(if id == "cart" {
                        GraphExpr::Cartesian(span, Box::new(a), Box::new(b))
                    } else {
                        GraphExpr::Direct(span, Box::new(a), Box::new(b))
                    })
                }
                "file" => {
                    self.pos += 1;
                    self.eat(&Tok::LParen, "\"(\"")?;
                    let path = match self.peek() {
                        Some((_, Tok::Path(p))) => {
                            let p = p.clone();
                            self.pos += 1;
                            p
                        }
                        _ => return Err(self.err(vec!["path"])),
                    };
                    self.eat(&Tok::RParen, "\")\"")?;
                    Ok(GraphExpr::File(span, PathBuf::from(path)))
                }
                _ => Err(ParseError {
                    offset: off,
                    expected: vec!["generator"],
                    found: format!("unknown identifier {id:?}"),
                }),
            },
            _ => Err(self.err(vec!["expression"])),
        }
    }
}

/// Parse a DSL string into an AST.
pub fn parse_spec(text: &str) -> Result<GraphExpr, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks: &toks,
        pos: 0,
        end: text.len(),
    };
    let e = p.expr()?;
    if p.pos != toks.len() {
        return Err(p.err(vec!["end of input"]));
    }
    Ok(e)
}

fn as_usize(span: Span, n: u64) -> Result<usize, EvalError> {
    usize::try_from(n).map_err(|_| EvalError {
        offset: span.0,
        msg: format!("integer {n} out of range"),
    })
}

fn check_order(span: Span, n: usize) -> Result<(), EvalError> {
    if n > MAX_EVAL_VERTICES {
        Err(EvalError {
            offset: span.0,
            msg: format!("graph would have {n} vertices (limit {MAX_EVAL_VERTICES})"),
        })
    } else {
        Ok(())
    }
}

/// Evaluate an AST to a graph. Deterministic vertex ordering: the left
/// operand of a product/join/union comes first.
pub fn eval(expr: &GraphExpr) -> Result<Graph, EvalError> {
    let fail = |span: Span, msg: String| EvalError {
        offset: span.0,
        msg,
    };
    let g = match expr {
        GraphExpr::Complete(s, n) => {
            let n = as_usize(*s, *n)?;
            check_order(*s, n)?;
            try_complete(n).map_err(|e| fail(*s, e.to_string()))?
        }
        GraphExpr::CompleteBipartite(s, m, n) => {
            let (m, n) = (as_usize(*s, *m)?, as_usize(*s, *n)?);
            check_order(*s, m.saturating_add(n))?;
            try_complete_bipartite(m, n).map_err(|e| fail(*s, e.to_string()))?
        }
        GraphExpr::Cycle(s, n) => {
            let n = as_usize(*s, *n)?;
            check_order(*s, n)?;
            try_cycle(n).map_err(|e| fail(*s, e.to_string()))?
        }
        GraphExpr::Petersen(_) => petersen(),
        GraphExpr::Turan(s, n, r) => {
            let (n, r) = (as_usize(*s, *n)?, as_usize(*s, *r)?);
            check_order(*s, n)?;
            try_turan_graph(n, r).map_err(|e| fail(*s, e.to_string()))?
        }
        GraphExpr::C5Fam(s, i, j) => {
            let (i, j) = (as_usize(*s, *i)?, as_usize(*s, *j)?);
            check_order(*s, 5 + i + j)?;
            c5_family(i, j)
        }
        GraphExpr::G7Fam(s, i, j, k) => {
            let (i, j, k) = (as_usize(*s, *i)?, as_usize(*s, *j)?, as_usize(*s, *k)?);
            check_order(*s, 7 + i + j + k)?;
            g7_family(i, j, k)
        }
        GraphExpr::Line(s, e) => {
            let g = eval(e)?;
            check_order(*s, g.m())?;
            line_graph(&g).map_err(|e| fail(*s, e.to_string()))?.0
        }
        GraphExpr::Cartesian(s, a, b) => {
            let (ga, gb) = (eval(a)?, eval(b)?);
            check_order(*s, ga.n().saturating_mul(gb.n()))?;
            cartesian_product(&ga, &gb).map_err(|e| fail(*s, e.to_string()))?
        }
        GraphExpr::Direct(s, a, b) => {
            let (ga, gb) = (eval(a)?, eval(b)?);
            check_order(*s, ga.n().saturating_mul(gb.n()))?;
            direct_product(&ga, &gb).map_err(|e| fail(*s, e.to_string()))?
        }
        GraphExpr::Join(s, a, b) => {
            let (ga, gb) = (eval(a)?, eval(b)?);
            check_order(*s, ga.n() + gb.n())?;
            join(&ga, &gb)
        }
        GraphExpr::Union(s, a, b) => {
            let (ga, gb) = (eval(a)?, eval(b)?);
            check_order(*s, ga.n() + gb.n())?;
            disjoint_union(&ga, &gb)
        }
        GraphExpr::File(s, path) => {
            load_graph_file(path).map_err(|e| fail(*s, e.to_string()))?
        }
    };
    Ok(g)
}
