//! Parser for the concrete ASCII syntax.
//!
//! ```text
//! Program := Rule* ; Rule := Expr "<-" Expr "." | Expr "."
//! Expr := Elem | "and" "[" (Expr ("," Expr)*)? "]" | "or" "(" (Expr ("," Expr)*)? ")"
//! Elem := "top" | "bot" | Lit | "not" Lit | "~" InnerElem
//! InnerElem := Lit | "not" Lit | "top" | "bot"
//! Lit := "-"? Ident ; Ident := [a-zA-Z_][a-zA-Z0-9_]*
//! ```
//!
//! `H.` is sugar for `H <- top.`; `#` starts a line comment; whitespace is
//! insignificant. Overlines are rejected in bodies, bare default literals
//! in heads, and `bot` in bodies.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use super::{
    Elementary, Literal, NestedExpr, Position, PositionViolation, Program, Rule, Symbols, TOP,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    Syntax {
        line: u32,
        col: u32,
        msg: String,
    },
    Position {
        line: u32,
        col: u32,
        violation: PositionViolation,
    },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Syntax { line, col, msg } => {
                write!(f, "syntax error at {line}:{col}: {msg}")
            }
            ParseError::Position {
                line,
                col,
                violation,
            } => {
                write!(f, "position error at {line}:{col}: {violation}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    KwAnd,
    KwOr,
    KwNot,
    KwTop,
    KwBot,
    LBracket,
    RBracket,
    LParen,
    RParen,
    Comma,
    Dot,
    Tilde,
    Minus,
    Arrow,
    Eof,
}

impl Tok {
    fn describe(&self) -> &'static str {
        match self {
            Tok::Ident(_) => "identifier",
            Tok::KwAnd => "`and`",
            Tok::KwOr => "`or`",
            Tok::KwNot => "`not`",
            Tok::KwTop => "`top`",
            Tok::KwBot => "`bot`",
            Tok::LBracket => "`[`",
            Tok::RBracket => "`]`",
            Tok::LParen => "`(`",
            Tok::RParen => "`)`",
            Tok::Comma => "`,`",
            Tok::Dot => "`.`",
            Tok::Tilde => "`~`",
            Tok::Minus => "`-`",
            Tok::Arrow => "`<-`",
            Tok::Eof => "end of input",
        }
    }
}

struct Lexer<'s> {
    src: &'s str,
    bytes: &'s [u8],
    at: usize,
    line: u32,
    col: u32,
}

impl<'s> Lexer<'s> {
    fn new(src: &'s str) -> Self {
        Lexer {
            src,
            bytes: src.as_bytes(),
            at: 0,
            line: 1,
            col: 1,
        }
    }

    fn bump(&mut self) {
        if self.bytes[self.at] == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        self.at += 1;
    }

    fn tokens(mut self) -> Result<Vec<(Tok, u32, u32)>, ParseError> {
        let mut out = Vec::new();
        while self.at < self.bytes.len() {
            let b = self.bytes[self.at];
            if b.is_ascii_whitespace() {
                self.bump();
                continue;
            }
            if b == b'#' {
                while self.at < self.bytes.len() && self.bytes[self.at] != b'\n' {
                    self.bump();
                }
                continue;
            }
            let (line, col) = (self.line, self.col);
            let tok = match b {
                b'[' => {
                    self.bump();
                    Tok::LBracket
                }
                b']' => {
                    self.bump();
                    Tok::RBracket
                }
                b'(' => {
                    self.bump();
                    Tok::LParen
                }
                b')' => {
                    self.bump();
                    Tok::RParen
                }
                b',' => {
                    self.bump();
                    Tok::Comma
                }
                b'.' => {
                    self.bump();
                    Tok::Dot
                }
                b'~' => {
                    self.bump();
                    Tok::Tilde
                }
                b'-' => {
                    self.bump();
                    Tok::Minus
                }
                b'<' => {
                    self.bump();
                    if self.at < self.bytes.len() && self.bytes[self.at] == b'-' {
                        self.bump();
                        Tok::Arrow
                    } else {
                        return Err(ParseError::Syntax {
                            line,
                            col,
                            msg: "expected `<-`".to_string(),
                        });
                    }
                }
                b'_' | b'a'..=b'z' | b'A'..=b'Z' => {
                    let start = self.at;
                    while self.at < self.bytes.len()
                        && (self.bytes[self.at] == b'_'
                            || self.bytes[self.at].is_ascii_alphanumeric())
                    {
                        self.bump();
                    }
                    match &self.src[start..self.at] {
                        "and" => Tok::KwAnd,
                        "or" => Tok::KwOr,
                        "not" => Tok::KwNot,
                        "top" => Tok::KwTop,
                        "bot" => Tok::KwBot,
                        ident => Tok::Ident(ident.to_string()),
                    }
                }
                other => {
                    return Err(ParseError::Syntax {
                        line,
                        col,
                        msg: format!("unexpected character `{}`", other as char),
                    });
                }
            };
            out.push((tok, line, col));
        }
        out.push((Tok::Eof, self.line, self.col));
        Ok(out)
    }
}

struct Parser<'s> {
    toks: Vec<(Tok, u32, u32)>,
    at: usize,
    symbols: &'s mut Symbols,
}

impl<'s> Parser<'s> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> (u32, u32) {
        (self.toks[self.at].1, self.toks[self.at].2)
    }

    fn next(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn syntax_err(&self, msg: String) -> ParseError {
        let (line, col) = self.pos();
        ParseError::Syntax { line, col, msg }
    }

    fn position_err(&self, at: (u32, u32), violation: PositionViolation) -> ParseError {
        ParseError::Position {
            line: at.0,
            col: at.1,
            violation,
        }
    }

    fn expect(&mut self, want: Tok) -> Result<(), ParseError> {
        if *self.peek() == want {
            self.next();
            Ok(())
        } else {
            Err(self.syntax_err(format!(
                "expected {}, found {}",
                want.describe(),
                self.peek().describe()
            )))
        }
    }

    fn literal(&mut self) -> Result<Literal, ParseError> {
        let positive = if *self.peek() == Tok::Minus {
            self.next();
            false
        } else {
            true
        };
        match self.next() {
            Tok::Ident(name) => Ok(Literal {
                atom: self.symbols.intern(&name),
                positive,
            }),
            other => Err({
                self.at -= 1;
                self.syntax_err(format!("expected identifier, found {}", other.describe()))
            }),
        }
    }

    fn inner_elementary(&mut self) -> Result<Elementary, ParseError> {
        match self.peek() {
            Tok::KwTop => {
                self.next();
                Ok(Elementary::Top)
            }
            Tok::KwBot => {
                self.next();
                Ok(Elementary::Bot)
            }
            Tok::KwNot => {
                self.next();
                Ok(Elementary::Default(self.literal()?))
            }
            _ => Ok(Elementary::Lit(self.literal()?)),
        }
    }

    fn expr(&mut self, pos: Position) -> Result<NestedExpr, ParseError> {
        let at = self.pos();
        match self.peek() {
            Tok::KwAnd => {
                self.next();
                self.expect(Tok::LBracket)?;
                let cs = self.expr_list(pos, Tok::RBracket)?;
                Ok(NestedExpr::And(cs))
            }
            Tok::KwOr => {
                self.next();
                self.expect(Tok::LParen)?;
                let cs = self.expr_list(pos, Tok::RParen)?;
                Ok(NestedExpr::Or(cs))
            }
            Tok::KwTop => {
                self.next();
                Ok(NestedExpr::Elem(Elementary::Top))
            }
            Tok::KwBot => {
                self.next();
                if pos == Position::Body {
                    return Err(self.position_err(at, PositionViolation::BotInBody));
                }
                Ok(NestedExpr::Elem(Elementary::Bot))
            }
            Tok::KwNot => {
                self.next();
                if pos == Position::Head {
                    return Err(self.position_err(at, PositionViolation::BareDefaultInHead));
                }
                Ok(NestedExpr::Elem(Elementary::Default(self.literal()?)))
            }
            Tok::Tilde => {
                self.next();
                if pos == Position::Body {
                    return Err(self.position_err(at, PositionViolation::OverInBody));
                }
                Ok(NestedExpr::Over(self.inner_elementary()?))
            }
            Tok::Minus | Tok::Ident(_) => Ok(NestedExpr::Elem(Elementary::Lit(self.literal()?))),
            other => {
                Err(self.syntax_err(format!("expected expression, found {}", other.describe())))
            }
        }
    }

    fn expr_list(&mut self, pos: Position, close: Tok) -> Result<Vec<NestedExpr>, ParseError> {
        let mut out = Vec::new();
        if *self.peek() == close {
            self.next();
            return Ok(out);
        }
        loop {
            out.push(self.expr(pos)?);
            match self.peek() {
                Tok::Comma => {
                    self.next();
                }
                t if *t == close => {
                    self.next();
                    return Ok(out);
                }
                other => {
                    let msg = format!(
                        "expected `,` or {}, found {}",
                        close.describe(),
                        other.describe()
                    );
                    return Err(self.syntax_err(msg));
                }
            }
        }
    }

    fn rule(&mut self) -> Result<Rule, ParseError> {
        let head = self.expr(Position::Head)?;
        let body = if *self.peek() == Tok::Arrow {
            self.next();
            self.expr(Position::Body)?
        } else {
            TOP
        };
        self.expect(Tok::Dot)?;
        Ok(Rule { head, body })
    }
}

/// Parse a whole program. Atoms are interned into `symbols` in order of
/// first occurrence.
pub fn parse_program(src: &str, symbols: &mut Symbols) -> Result<Program, ParseError> {
    let toks = Lexer::new(src).tokens()?;
    let mut p = Parser {
        toks,
        at: 0,
        symbols,
    };
    let mut rules = Vec::new();
    while *p.peek() != Tok::Eof {
        rules.push(p.rule()?);
    }
    Ok(Program { rules })
}

/// Parse a single expression in the given position.
pub fn parse_expr(
    src: &str,
    pos: Position,
    symbols: &mut Symbols,
) -> Result<NestedExpr, ParseError> {
    let toks = Lexer::new(src).tokens()?;
    let mut p = Parser {
        toks,
        at: 0,
        symbols,
    };
    let e = p.expr(pos)?;
    if *p.peek() != Tok::Eof {
        return Err(p.syntax_err(format!("trailing {}", p.peek().describe())));
    }
    Ok(e)
}
