//! Concrete syntax: a recursive-descent parser and a minimal-parenthesis printer.
//!
//! Precedence, tightest first: `!` (prefix), `&`, `@` (IAND, left to right),
//! `|`, `->` (IMPLY, right to left). Atoms are `0`, `1`, identifiers and
//! parenthesized expressions. `@` and `->` may not share a parenthesis level.

use thiserror::Error;

use crate::expr::{is_identifier, Expr, VarId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("mixed '@' and '->' at {pos}: parenthesize mixed asymmetric operators, e.g. \"(A @ B) -> C\"")]
    MixedChain { pos: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Not,
    And,
    Iand,
    Or,
    Imply,
    LParen,
    RParen,
    Const(bool),
    Ident(String),
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'!' => Tok::Not,
            b'&' => Tok::And,
            b'@' => Tok::Iand,
            b'|' => Tok::Or,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'-' if bytes.get(i + 1) == Some(&b'>') => {
                i += 1;
                Tok::Imply
            }
            b'0' | b'1' if !bytes.get(i + 1).is_some_and(|b| b.is_ascii_alphanumeric() || *b == b'_') => {
                Tok::Const(c == b'1')
            }
            _ if c.is_ascii_alphanumeric() || c == b'_' => {
                while i + 1 < bytes.len() && (bytes[i + 1].is_ascii_alphanumeric() || bytes[i + 1] == b'_') {
                    i += 1;
                }
                let word = &text[start..=i];
                if !is_identifier(word) {
                    return Err(ParseError::Syntax { pos: start, message: format!("invalid identifier {word:?}") });
                }
                Tok::Ident(word.to_string())
            }
            _ => {
                return Err(ParseError::Syntax {
                    pos: start,
                    message: format!("unexpected character {:?}", text[start..].chars().next().unwrap()),
                })
            }
        };
        toks.push((tok, start));
        i += 1;
    }
    Ok(toks)
}

#[derive(Default, Clone, Copy)]
struct Level {
    iand: bool,
    imply: bool,
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
    levels: Vec<Level>,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(_, p)| *p)
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn mark(&mut self, tok: &Tok) -> Result<(), ParseError> {
        let pos = self.toks[self.pos - 1].1;
        let level = self.levels.last_mut().unwrap();
        match tok {
            Tok::Iand => level.iand = true,
            Tok::Imply => level.imply = true,
            _ => {}
        }
        if level.iand && level.imply {
            Err(ParseError::MixedChain { pos })
        } else {
            Ok(())
        }
    }

    fn imply(&mut self) -> Result<Expr, ParseError> {
        let mut operands = vec![self.or()?];
        while self.eat(&Tok::Imply) {
            self.mark(&Tok::Imply)?;
            operands.push(self.or()?);
        }
        Ok(if operands.len() == 1 { operands.pop().unwrap() } else { Expr::imply_chain(operands).unwrap() })
    }

    fn or(&mut self) -> Result<Expr, ParseError> {
        let mut children = vec![self.iand()?];
        while self.eat(&Tok::Or) {
            children.push(self.iand()?);
        }
        Ok(if children.len() == 1 { children.pop().unwrap() } else { Expr::Or(children) })
    }

    fn iand(&mut self) -> Result<Expr, ParseError> {
        let mut operands = vec![self.and()?];
        while self.eat(&Tok::Iand) {
            self.mark(&Tok::Iand)?;
            operands.push(self.and()?);
        }
        Ok(if operands.len() == 1 { operands.pop().unwrap() } else { Expr::iand_chain(operands).unwrap() })
    }

    fn and(&mut self) -> Result<Expr, ParseError> {
        let mut children = vec![self.unary()?];
        while self.eat(&Tok::And) {
            children.push(self.unary()?);
        }
        Ok(if children.len() == 1 { children.pop().unwrap() } else { Expr::And(children) })
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.eat(&Tok::Not) {
            return Ok(Expr::not(self.unary()?));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let at = self.offset();
        let tok = self.peek().cloned();
        match tok {
            Some(Tok::Const(b)) => {
                self.pos += 1;
                Ok(Expr::Const(b))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                Ok(Expr::Var(VarId::new(name).expect("tokenizer validated identifier")))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                self.levels.push(Level::default());
                let inner = self.imply()?;
                self.levels.pop();
                if !self.eat(&Tok::RParen) {
                    return Err(ParseError::Syntax { pos: self.offset(), message: "expected ')'".into() });
                }
                Ok(inner)
            }
            Some(t) => Err(ParseError::Syntax { pos: at, message: format!("unexpected {}", describe(&t)) }),
            None => Err(ParseError::Syntax { pos: at, message: "unexpected end of input".into() }),
        }
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Not => "'!'".into(),
        Tok::And => "'&'".into(),
        Tok::Iand => "'@'".into(),
        Tok::Or => "'|'".into(),
        Tok::Imply => "'->'".into(),
        Tok::LParen => "'('".into(),
        Tok::RParen => "')'".into(),
        Tok::Const(b) => format!("'{}'", u8::from(*b)),
        Tok::Ident(s) => format!("identifier {s:?}"),
    }
}

/// Parse an expression in the concrete syntax.
pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(ParseError::Syntax { pos: 0, message: "empty expression".into() });
    }
    let mut p = Parser { toks, pos: 0, end: text.len(), levels: vec![Level::default()] };
    let e = p.imply()?;
    if p.pos != p.toks.len() {
        let (t, pos) = &p.toks[p.pos];
        return Err(ParseError::Syntax { pos: *pos, message: format!("unexpected {}", describe(t)) });
    }
    Ok(e)
}

const PREC_IMPLY: u8 = 0;
const PREC_OR: u8 = 1;
const PREC_IAND: u8 = 2;
const PREC_AND: u8 = 3;
const PREC_UNARY: u8 = 4;
const PREC_ATOM: u8 = 5;

struct Piece {
    text: String,
    prec: u8,
    /// An `@` is visible at this piece's outermost parenthesis level.
    iand_exposed: bool,
}

impl Piece {
    fn wrapped(self) -> Piece {
        Piece { text: format!("({})", self.text), prec: PREC_ATOM, iand_exposed: false }
    }
}

fn piece(e: &Expr) -> Piece {
    let join = |children: &[Expr], sep: &str, wrap: &dyn Fn(&Piece) -> bool| {
        let mut exposed = false;
        let parts: Vec<String> = children
            .iter()
            .map(|c| {
                let p = piece(c);
                let p = if wrap(&p) { p.wrapped() } else { p };
                exposed |= p.iand_exposed;
                p.text
            })
            .collect();
        (parts.join(sep), exposed)
    };
    match e {
        Expr::Const(b) => Piece { text: if *b { "1" } else { "0" }.into(), prec: PREC_ATOM, iand_exposed: false },
        Expr::Var(v) => Piece { text: v.to_string(), prec: PREC_ATOM, iand_exposed: false },
        Expr::Not(c) => {
            let p = piece(c);
            let p = if p.prec < PREC_UNARY { p.wrapped() } else { p };
            Piece { text: format!("!{}", p.text), prec: PREC_UNARY, iand_exposed: false }
        }
        Expr::And(cs) => {
            let (text, _) = join(cs, " & ", &|p| p.prec <= PREC_AND);
            Piece { text, prec: PREC_AND, iand_exposed: false }
        }
        Expr::Iand(cs) => {
            let (text, _) = join(cs, " @ ", &|p| p.prec <= PREC_IAND);
            Piece { text, prec: PREC_IAND, iand_exposed: true }
        }
        Expr::Or(cs) => {
            let (text, exposed) = join(cs, " | ", &|p| p.prec <= PREC_OR);
            Piece { text, prec: PREC_OR, iand_exposed: exposed }
        }
        Expr::Imply(cs) => {
            let (text, _) = join(cs, " -> ", &|p| p.prec == PREC_IMPLY || p.iand_exposed);
            Piece { text, prec: PREC_IMPLY, iand_exposed: false }
        }
    }
}

/// Print an expression so that [`parse`] reads back the same tree.
pub fn format(e: &Expr) -> String {
    piece(e).text
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(n: &str) -> Expr {
        Expr::var(n)
    }

    #[test]
    fn precedence_table() {
        assert_eq!(parse("A @ B | C").unwrap(), Expr::Or(vec![Expr::iand(v("A"), v("B")), v("C")]));
        assert_eq!(parse("A -> B -> C").unwrap(), Expr::Imply(vec![v("A"), v("B"), v("C")]));
        assert_eq!(parse("A @ B @ C").unwrap(), Expr::Iand(vec![v("A"), v("B"), v("C")]));
        assert_eq!(parse("!A & B @ C").unwrap(), Expr::iand(Expr::And(vec![Expr::not(v("A")), v("B")]), v("C")));
        assert_eq!(parse("A | B -> C").unwrap(), Expr::imply(Expr::Or(vec![v("A"), v("B")]), v("C")));
    }

    #[test]
    fn chain_nesting() {
        assert_eq!(parse("(A @ B) @ C").unwrap(), parse("A @ B @ C").unwrap());
        assert_eq!(parse("A @ (B @ C)").unwrap(), Expr::Iand(vec![v("A"), Expr::iand(v("B"), v("C"))]));
        assert_eq!(parse("A -> (B -> C)").unwrap(), parse("A -> B -> C").unwrap());
        assert_eq!(parse("(A -> B) -> C").unwrap(), Expr::Imply(vec![Expr::imply(v("A"), v("B")), v("C")]));
    }

    #[test]
    fn mixed_chains_rejected() {
        let err = parse("A @ B -> C").unwrap_err();
        assert_eq!(err, ParseError::MixedChain { pos: 6 });
        assert!(err.to_string().contains("parenthesize mixed asymmetric operators"));
        assert!(parse("A @ B | C -> D").is_err());
        assert!(parse("(A @ B) -> C").is_ok());
        assert!(parse("A -> (B @ C)").is_ok());
    }

    #[test]
    fn syntax_errors_carry_position() {
        assert_eq!(parse(""), Err(ParseError::Syntax { pos: 0, message: "empty expression".into() }));
        assert!(matches!(parse("A &"), Err(ParseError::Syntax { pos: 3, .. })));
        assert!(matches!(parse("(A | B"), Err(ParseError::Syntax { pos: 6, .. })));
        assert!(matches!(parse("A B"), Err(ParseError::Syntax { pos: 2, .. })));
        assert!(matches!(parse("A $ B"), Err(ParseError::Syntax { pos: 2, .. })));
        assert!(matches!(parse("2A"), Err(ParseError::Syntax { pos: 0, .. })));
    }

    #[test]
    fn constants_and_identifiers() {
        assert_eq!(parse("!1").unwrap(), Expr::not(Expr::Const(true)));
        assert_eq!(parse("x_1 | 0").unwrap(), Expr::Or(vec![v("x_1"), Expr::Const(false)]));
    }

    #[test]
    fn printer_examples() {
        assert_eq!(format(&Expr::Iand(vec![v("A"), v("B"), v("C")])), "A @ B @ C");
        assert_eq!(format(&Expr::Imply(vec![v("A"), v("B"), v("C")])), "A -> B -> C");
        assert_eq!(format(&Expr::Or(vec![Expr::iand(v("A"), v("B")), v("C")])), "A @ B | C");
        assert_eq!(
            format(&Expr::imply(Expr::Or(vec![Expr::iand(v("A"), v("B")), v("C")]), v("D"))),
            "(A @ B | C) -> D"
        );
        assert_eq!(format(&Expr::Iand(vec![v("A"), Expr::iand(v("B"), v("C"))])), "A @ (B @ C)");
        assert_eq!(format(&Expr::not(Expr::And(vec![v("A"), v("B")]))), "!(A & B)");
        assert_eq!(format(&Expr::And(vec![Expr::And(vec![v("A"), v("B")]), v("C")])), "(A & B) & C");
    }
}
