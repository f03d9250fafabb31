use std::fmt;

use super::ast::Expr;
use crate::logic::{Evidence, PBit, TruthPair};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based.
    pub line: usize,
    /// 1-based, in characters.
    pub column: usize,
    pub expected: Vec<String>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: expected {}, found {}", self.line, self.column, self.expected.join(" or "), self.found)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    LParen,
    RParen,
    Lt,
    Gt,
    LBrace,
    RBrace,
    Comma,
    Tilde,
    Amp,
    Pipe,
    Arrow,
    Num(String),
    Ident(String),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::LParen => f.write_str("\"(\""),
            Tok::RParen => f.write_str("\")\""),
            Tok::Lt => f.write_str("\"<\""),
            Tok::Gt => f.write_str("\">\""),
            Tok::LBrace => f.write_str("\"{\""),
            Tok::RBrace => f.write_str("\"}\""),
            Tok::Comma => f.write_str("\",\""),
            Tok::Tilde => f.write_str("\"~\""),
            Tok::Amp => f.write_str("\"&\""),
            Tok::Pipe => f.write_str("\"|\""),
            Tok::Arrow => f.write_str("\"->\""),
            Tok::Num(n) => write!(f, "number `{n}`"),
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn error_at(line: usize, column: usize, expected: &[&str], found: String) -> ParseError {
    ParseError { line, column, expected: expected.iter().map(|s| s.to_string()).collect(), found }
}

fn lex(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let (start_line, start_col) = (line, col);
        let mut push = |tok, len: usize, i: &mut usize, col: &mut usize| {
            out.push(Spanned { tok, line: start_line, column: start_col });
            *i += len;
            *col += len;
        };
        match c {
            '\n' => {
                i += 1;
                line += 1;
                col = 1;
            }
            c if c.is_whitespace() => {
                i += 1;
                col += 1;
            }
            '(' => push(Tok::LParen, 1, &mut i, &mut col),
            ')' => push(Tok::RParen, 1, &mut i, &mut col),
            '<' => push(Tok::Lt, 1, &mut i, &mut col),
            '>' => push(Tok::Gt, 1, &mut i, &mut col),
            '{' => push(Tok::LBrace, 1, &mut i, &mut col),
            '}' => push(Tok::RBrace, 1, &mut i, &mut col),
            ',' => push(Tok::Comma, 1, &mut i, &mut col),
            '~' => push(Tok::Tilde, 1, &mut i, &mut col),
            '&' => push(Tok::Amp, 1, &mut i, &mut col),
            '|' => push(Tok::Pipe, 1, &mut i, &mut col),
            '-' if chars.get(i + 1) == Some(&'>') => push(Tok::Arrow, 2, &mut i, &mut col),
            c if c.is_ascii_digit() => {
                let mut j = i;
                while j < chars.len() && chars[j].is_ascii_digit() {
                    j += 1;
                }
                if j + 1 < chars.len() && chars[j] == '.' && chars[j + 1].is_ascii_digit() {
                    j += 1;
                    while j < chars.len() && chars[j].is_ascii_digit() {
                        j += 1;
                    }
                }
                if j < chars.len() && (chars[j] == 'e' || chars[j] == 'E') {
                    let mut k = j + 1;
                    if k < chars.len() && (chars[k] == '+' || chars[k] == '-') {
                        k += 1;
                    }
                    if k < chars.len() && chars[k].is_ascii_digit() {
                        while k < chars.len() && chars[k].is_ascii_digit() {
                            k += 1;
                        }
                        j = k;
                    }
                }
                let s: String = chars[i..j].iter().collect();
                push(Tok::Num(s), j - i, &mut i, &mut col);
            }
            c if c.is_alphabetic() || c == '_' => {
                let mut j = i;
                while j < chars.len() && (chars[j].is_alphanumeric() || chars[j] == '_') {
                    j += 1;
                }
                let s: String = chars[i..j].iter().collect();
                push(Tok::Ident(s), j - i, &mut i, &mut col);
            }
            other => {
                return Err(error_at(line, col, &["token"], format!("character `{other}`")));
            }
        }
    }
    out.push(Spanned { tok: Tok::Eof, line, column: col });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &[&str]) -> Result<T, ParseError> {
        let t = self.peek();
        Err(error_at(t.line, t.column, expected, t.tok.to_string()))
    }

    fn expect(&mut self, tok: Tok) -> Result<Spanned, ParseError> {
        if self.peek().tok == tok {
            Ok(self.bump())
        } else {
            self.fail(&[&tok.to_string()])
        }
    }

    fn implication(&mut self) -> Result<Expr, ParseError> {
        let lhs = self.disjunction()?;
        if self.peek().tok == Tok::Arrow {
            self.bump();
            let rhs = self.implication()?;
            return Ok(Expr::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.conjunction()?;
        while self.peek().tok == Tok::Pipe {
            self.bump();
            lhs = Expr::or(lhs, self.conjunction()?);
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        while self.peek().tok == Tok::Amp {
            self.bump();
            lhs = Expr::and(lhs, self.unary()?);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.peek().tok == Tok::Tilde {
            self.bump();
            return Ok(Expr::not(self.unary()?));
        }
        self.primary()
    }

    fn unit_number(&mut self) -> Result<f64, ParseError> {
        let t = self.peek().clone();
        match &t.tok {
            Tok::Num(s) => match s.parse::<f64>() {
                Ok(v) if (0.0..=1.0).contains(&v) => {
                    self.bump();
                    Ok(v)
                }
                _ => self.fail(&["number in [0, 1]"]),
            },
            _ => self.fail(&["number"]),
        }
    }

    fn count(&mut self) -> Result<u64, ParseError> {
        let t = self.peek().clone();
        match &t.tok {
            Tok::Num(s) => match s.parse::<u64>() {
                Ok(v) => {
                    self.bump();
                    Ok(v)
                }
                Err(_) => self.fail(&["integer"]),
            },
            _ => self.fail(&["integer"]),
        }
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        let start = self.peek().clone();
        match &start.tok {
            Tok::LParen => {
                self.bump();
                let e = self.implication()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Tok::Lt => {
                self.bump();
                let plus = self.unit_number()?;
                self.expect(Tok::Comma)?;
                let minus = self.unit_number()?;
                self.expect(Tok::Gt)?;
                Ok(Expr::Pair(TruthPair::new(plus, minus).expect("components checked")))
            }
            Tok::LBrace => {
                self.bump();
                let plus = self.count()?;
                self.expect(Tok::Comma)?;
                let minus = self.count()?;
                self.expect(Tok::Comma)?;
                let total = self.count()?;
                self.expect(Tok::RBrace)?;
                Evidence::new(plus, minus, total).map(Expr::Counts).map_err(|e| {
                    error_at(
                        start.line,
                        start.column,
                        &["counts with plus, minus <= total and total >= 1"],
                        e.to_string(),
                    )
                })
            }
            Tok::Ident(name) => {
                let name = name.clone();
                self.bump();
                match name.as_str() {
                    "T" => Ok(Expr::Crisp(PBit::TRUE)),
                    "F" => Ok(Expr::Crisp(PBit::FALSE)),
                    "B" => Ok(Expr::Crisp(PBit::BOTH)),
                    "N" => Ok(Expr::Crisp(PBit::NEITHER)),
                    "random" => {
                        self.expect(Tok::LParen)?;
                        let rho = self.unit_number()?;
                        self.expect(Tok::RParen)?;
                        Ok(Expr::Random(rho))
                    }
                    _ => Ok(Expr::Atom(name)),
                }
            }
            _ => self.fail(&["primary"]),
        }
    }
}

pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    let e = p.implication()?;
    if p.peek().tok != Tok::Eof {
        return p.fail(&["\"&\"", "\"|\"", "\"->\"", "end of input"]);
    }
    Ok(e)
}
