//! Recursive-descent parser for the connective DSL.
//!
//! Grammar (EBNF, whitespace free between tokens):
//!
//! ```text
//! expr       = sum ;
//! sum        = product { ("+" | "-") product } ;
//! product    = unary { ("*" | "/") unary } ;
//! unary      = "-" unary | atom ;
//! atom       = number | "x" | "y" | "(" expr ")" | piecewise
//!            | "min" "(" expr "," expr ")" | "max" "(" expr "," expr ")"
//!            | "sqrt" "(" expr ")" | "pow" "(" expr "," expr ")" ;
//! piecewise  = "piece" "(" branch { ";" branch } [ ";" "else" ":" expr ] ")" ;
//! branch     = guard ":" expr ;
//! guard      = comparison { "&&" comparison } ;
//! comparison = sum cmpop sum ;
//! cmpop      = "<=" | ">=" | "<" | ">" | "=" ;
//! number     = digits [ "." digits ] ;
//! ```
//!
//! Rational constants: `number` literals and any `+ - * /` combination of
//! constants fold to exact rationals, so `1/2` and `0.5` denote the same
//! constant. The second argument of `pow` must fold to a rational.

use super::{Arity, Axis, BinOp, Branch, CmpOp, Comparison, Node, Rational};
use thiserror::Error;

/// Parse or registration failure for a connective definition.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {position}: expected {expected}")]
    Syntax { position: usize, expected: String },
    #[error("piecewise branches leave the domain uncovered at ({x}, {y})")]
    Coverage { x: f64, y: f64 },
    #[error("value {value} at ({x}, {y}) escapes [0, 1]")]
    Range { x: f64, y: f64, value: f64 },
    #[error("constant arithmetic overflows a 64-bit rational at byte {position}")]
    ConstantOverflow { position: usize },
    #[error("expression on line {line}: {source}")]
    InFile {
        line: usize,
        #[source]
        source: Box<ParseError>,
    },
}

impl ParseError {
    pub(super) fn on_line(self, line: usize) -> ParseError {
        ParseError::InFile {
            line,
            source: Box::new(self),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Rational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    LParen,
    RParen,
    Comma,
    Semi,
    Colon,
    AndAnd,
    Lt,
    Le,
    Eq,
    Gt,
    Ge,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn tokens(mut self) -> Result<Vec<(usize, Tok)>, ParseError> {
        let mut out = Vec::new();
        while let Some(t) = self.next_token()? {
            out.push(t);
        }
        Ok(out)
    }

    fn next_token(&mut self) -> Result<Option<(usize, Tok)>, ParseError> {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        if self.pos >= self.src.len() {
            return Ok(None);
        }
        let start = self.pos;
        let c = self.src[self.pos];
        let tok = match c {
            b'+' => {
                self.pos += 1;
                Tok::Plus
            }
            b'-' => {
                self.pos += 1;
                Tok::Minus
            }
            b'*' => {
                self.pos += 1;
                Tok::Star
            }
            b'/' => {
                self.pos += 1;
                Tok::Slash
            }
            b'(' => {
                self.pos += 1;
                Tok::LParen
            }
            b')' => {
                self.pos += 1;
                Tok::RParen
            }
            b',' => {
                self.pos += 1;
                Tok::Comma
            }
            b';' => {
                self.pos += 1;
                Tok::Semi
            }
            b':' => {
                self.pos += 1;
                Tok::Colon
            }
            b'&' => {
                if self.src.get(self.pos + 1) == Some(&b'&') {
                    self.pos += 2;
                    Tok::AndAnd
                } else {
                    return Err(ParseError::Syntax {
                        position: start,
                        expected: "`&&`".into(),
                    });
                }
            }
            b'<' => {
                if self.src.get(self.pos + 1) == Some(&b'=') {
                    self.pos += 2;
                    Tok::Le
                } else {
                    self.pos += 1;
                    Tok::Lt
                }
            }
            b'>' => {
                if self.src.get(self.pos + 1) == Some(&b'=') {
                    self.pos += 2;
                    Tok::Ge
                } else {
                    self.pos += 1;
                    Tok::Gt
                }
            }
            b'=' => {
                self.pos += 1;
                Tok::Eq
            }
            b'0'..=b'9' => return self.lex_number().map(Some),
            c if c.is_ascii_alphabetic() || c == b'_' => {
                let mut end = self.pos;
                while end < self.src.len()
                    && (self.src[end].is_ascii_alphanumeric() || self.src[end] == b'_')
                {
                    end += 1;
                }
                let ident = std::str::from_utf8(&self.src[self.pos..end])
                    .expect("ascii")
                    .to_string();
                self.pos = end;
                Tok::Ident(ident)
            }
            _ => {
                return Err(ParseError::Syntax {
                    position: start,
                    expected: "a token".into(),
                })
            }
        };
        Ok(Some((start, tok)))
    }

    fn lex_number(&mut self) -> Result<(usize, Tok), ParseError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let int_part: i64 = std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii")
            .parse()
            .map_err(|_| ParseError::ConstantOverflow { position: start })?;
        // decimal point followed by digits makes the literal a decimal fraction
        if self.src.get(self.pos) == Some(&b'.')
            && self.src.get(self.pos + 1).is_some_and(u8::is_ascii_digit)
        {
            self.pos += 1;
            let frac_start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let digits = &self.src[frac_start..self.pos];
            if digits.len() > 18 {
                return Err(ParseError::ConstantOverflow { position: start });
            }
            let frac: i64 = std::str::from_utf8(digits)
                .expect("ascii")
                .parse()
                .map_err(|_| ParseError::ConstantOverflow { position: start })?;
            let den = 10i64
                .checked_pow(digits.len() as u32)
                .ok_or(ParseError::ConstantOverflow { position: start })?;
            let num = int_part
                .checked_mul(den)
                .and_then(|v| v.checked_add(frac))
                .ok_or(ParseError::ConstantOverflow { position: start })?;
            Ok((start, Tok::Num(Rational::new(num, den))))
        } else {
            Ok((start, Tok::Num(Rational::integer(int_part))))
        }
    }
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    idx: usize,
    len: usize,
}

pub(super) fn parse(source: &str) -> Result<Node, ParseError> {
    let toks = Lexer {
        src: source.as_bytes(),
        pos: 0,
    }
    .tokens()?;
    let mut p = Parser {
        toks,
        idx: 0,
        len: source.len(),
    };
    let node = p.expr()?;
    if let Some((pos, _)) = p.peek_raw() {
        return Err(ParseError::Syntax {
            position: pos,
            expected: "end of input".into(),
        });
    }
    Ok(node)
}

impl Parser {
    fn peek_raw(&self) -> Option<(usize, &Tok)> {
        self.toks.get(self.idx).map(|(p, t)| (*p, t))
    }

    fn pos(&self) -> usize {
        self.toks.get(self.idx).map_or(self.len, |(p, _)| *p)
    }

    fn eat(&mut self, want: &Tok, expected: &str) -> Result<(), ParseError> {
        match self.toks.get(self.idx) {
            Some((_, t)) if t == want => {
                self.idx += 1;
                Ok(())
            }
            _ => Err(ParseError::Syntax {
                position: self.pos(),
                expected: expected.into(),
            }),
        }
    }

    fn eat_if(&mut self, want: &Tok) -> bool {
        if self.toks.get(self.idx).map(|(_, t)| t) == Some(want) {
            self.idx += 1;
            true
        } else {
            false
        }
    }

    fn peek_ident(&self) -> Option<&str> {
        match self.toks.get(self.idx) {
            Some((_, Tok::Ident(name))) => Some(name),
            _ => None,
        }
    }

    fn expr(&mut self) -> Result<Node, ParseError> {
        self.sum()
    }

    fn piecewise(&mut self) -> Result<Node, ParseError> {
        self.eat(&Tok::LParen, "`(` after `piece`")?;
        let mut branches = Vec::new();
        let mut otherwise = None;
        loop {
            if self.peek_ident() == Some("else") {
                self.idx += 1;
                self.eat(&Tok::Colon, "`:` after `else`")?;
                otherwise = Some(Box::new(self.expr()?));
                break;
            }
            let guard = self.guard()?;
            self.eat(&Tok::Colon, "`:` after a guard")?;
            let value = self.expr()?;
            branches.push(Branch { guard, value });
            if !self.eat_if(&Tok::Semi) {
                break;
            }
        }
        self.eat(&Tok::RParen, "`)` closing `piece(...)`")?;
        if branches.is_empty() && otherwise.is_none() {
            return Err(ParseError::Syntax {
                position: self.pos(),
                expected: "at least one branch".into(),
            });
        }
        Ok(Node::Piecewise(branches, otherwise))
    }

    fn guard(&mut self) -> Result<Vec<Comparison>, ParseError> {
        let mut cmps = vec![self.comparison()?];
        while self.eat_if(&Tok::AndAnd) {
            cmps.push(self.comparison()?);
        }
        Ok(cmps)
    }

    fn comparison(&mut self) -> Result<Comparison, ParseError> {
        let lhs = self.sum()?;
        let op = match self.toks.get(self.idx) {
            Some((_, Tok::Lt)) => CmpOp::Lt,
            Some((_, Tok::Le)) => CmpOp::Le,
            Some((_, Tok::Eq)) => CmpOp::Eq,
            Some((_, Tok::Gt)) => CmpOp::Gt,
            Some((_, Tok::Ge)) => CmpOp::Ge,
            _ => {
                return Err(ParseError::Syntax {
                    position: self.pos(),
                    expected: "a comparison operator".into(),
                })
            }
        };
        self.idx += 1;
        let rhs = self.sum()?;
        Ok(Comparison { lhs, op, rhs })
    }

    fn sum(&mut self) -> Result<Node, ParseError> {
        let mut node = self.product()?;
        loop {
            let op = if self.eat_if(&Tok::Plus) {
                BinOp::Add
            } else if self.eat_if(&Tok::Minus) {
                BinOp::Sub
            } else {
                break;
            };
            let rhs = self.product()?;
            node = fold(op, node, rhs, self.pos())?;
        }
        Ok(node)
    }

    fn product(&mut self) -> Result<Node, ParseError> {
        let mut node = self.unary()?;
        loop {
            let op = if self.eat_if(&Tok::Star) {
                BinOp::Mul
            } else if self.eat_if(&Tok::Slash) {
                BinOp::Div
            } else {
                break;
            };
            let rhs = self.unary()?;
            node = fold(op, node, rhs, self.pos())?;
        }
        Ok(node)
    }

    fn unary(&mut self) -> Result<Node, ParseError> {
        if self.eat_if(&Tok::Minus) {
            let inner = self.unary()?;
            return Ok(match inner {
                Node::Const(r) => Node::Const(Rational::new(-r.num, r.den)),
                other => Node::Neg(Box::new(other)),
            });
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Node, ParseError> {
        let position = self.pos();
        match self.toks.get(self.idx).cloned() {
            Some((_, Tok::Num(r))) => {
                self.idx += 1;
                Ok(Node::Const(r))
            }
            Some((_, Tok::LParen)) => {
                self.idx += 1;
                let node = self.expr()?;
                self.eat(&Tok::RParen, "`)`")?;
                Ok(node)
            }
            Some((_, Tok::Ident(name))) => {
                self.idx += 1;
                match name.as_str() {
                    "x" => Ok(Node::Var(Axis::X)),
                    "y" => Ok(Node::Var(Axis::Y)),
                    "piece" => self.piecewise(),
                    "min" | "max" => {
                        self.eat(&Tok::LParen, "`(`")?;
                        let a = self.expr()?;
                        self.eat(&Tok::Comma, "`,` between arguments")?;
                        let b = self.expr()?;
                        self.eat(&Tok::RParen, "`)`")?;
                        Ok(if name == "min" {
                            Node::Min(Box::new(a), Box::new(b))
                        } else {
                            Node::Max(Box::new(a), Box::new(b))
                        })
                    }
                    "sqrt" => {
                        self.eat(&Tok::LParen, "`(`")?;
                        let a = self.expr()?;
                        self.eat(&Tok::RParen, "`)`")?;
                        Ok(Node::Sqrt(Box::new(a)))
                    }
                    "pow" => {
                        self.eat(&Tok::LParen, "`(`")?;
                        let base = self.expr()?;
                        self.eat(&Tok::Comma, "`,` between arguments")?;
                        let exp_pos = self.pos();
                        let exp = self.expr()?;
                        self.eat(&Tok::RParen, "`)`")?;
                        match exp {
                            Node::Const(r) => Ok(Node::Pow(Box::new(base), r)),
                            _ => Err(ParseError::Syntax {
                                position: exp_pos,
                                expected: "a rational exponent".into(),
                            }),
                        }
                    }
                    _ => Err(ParseError::Syntax {
                        position,
                        expected: "`x`, `y`, `min`, `max`, `sqrt`, `pow` or `piece`".into(),
                    }),
                }
            }
            _ => Err(ParseError::Syntax {
                position,
                expected: "a number, variable or `(`".into(),
            }),
        }
    }
}

/// Builds a binary node, folding constant operands into an exact rational.
fn fold(op: BinOp, lhs: Node, rhs: Node, position: usize) -> Result<Node, ParseError> {
    if let (Node::Const(a), Node::Const(b)) = (&lhs, &rhs) {
        let (n, d) = match op {
            BinOp::Add => (
                (a.num as i128) * (b.den as i128) + (b.num as i128) * (a.den as i128),
                (a.den as i128) * (b.den as i128),
            ),
            BinOp::Sub => (
                (a.num as i128) * (b.den as i128) - (b.num as i128) * (a.den as i128),
                (a.den as i128) * (b.den as i128),
            ),
            BinOp::Mul => ((a.num as i128) * (b.num as i128), (a.den as i128) * (b.den as i128)),
            BinOp::Div => {
                if b.num == 0 {
                    return Err(ParseError::Syntax {
                        position,
                        expected: "a non-zero constant divisor".into(),
                    });
                }
                ((a.num as i128) * (b.den as i128), (a.den as i128) * (b.num as i128))
            }
        };
        let g = gcd_i128(n.unsigned_abs(), d.unsigned_abs()) as i128;
        let (n, d) = (n / g, d / g);
        let (n, d) = if d < 0 { (-n, -d) } else { (n, d) };
        if n > i64::MAX as i128 || n < i64::MIN as i128 || d > i64::MAX as i128 {
            return Err(ParseError::ConstantOverflow { position });
        }
        return Ok(Node::Const(Rational {
            num: n as i64,
            den: d as i64,
        }));
    }
    Ok(Node::Bin(op, Box::new(lhs), Box::new(rhs)))
}

fn gcd_i128(a: u128, b: u128) -> u128 {
    if a == 0 && b == 0 {
        return 1;
    }
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Deduces arity the same way [`super::parse_connective`] does, exposed for
/// tests.
#[allow(dead_code)]
pub(super) fn deduced_arity(node: &Node) -> Arity {
    if node.uses(Axis::Y) {
        Arity::Binary
    } else {
        Arity::Unary
    }
}

#[cfg(test)]
mod tests {
    use super::super::parse_connective;
    use super::*;

    #[test]
    fn reports_position_and_expectation() {
        let err = parse_connective("min(x, ").unwrap_err();
        match err {
            ParseError::Syntax { position, expected } => {
                assert_eq!(position, 7);
                assert!(expected.contains("number") || expected.contains("variable"));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn trailing_garbage_rejected() {
        assert!(matches!(
            parse_connective("x + y )"),
            Err(ParseError::Syntax { .. })
        ));
    }

    #[test]
    fn decimal_literals_are_exact_rationals() {
        let e = parse_connective("0.1 + 0.2 + x*0").unwrap();
        // folded as 1/10 + 2/10 = 3/10 before any float arithmetic
        assert_eq!(e.eval1(0.0).unwrap(), 0.3);
        let e = parse_connective("0.125 + x*0").unwrap();
        assert_eq!(e.eval1(0.0).unwrap(), 0.125);
    }

    #[test]
    fn pow_requires_rational_exponent() {
        assert!(parse_connective("pow(x, y)").is_err());
        assert!(parse_connective("pow(x, 1/2)").is_ok());
    }

    #[test]
    fn division_by_constant_zero_rejected() {
        assert!(matches!(
            parse_connective("1/0"),
            Err(ParseError::Syntax { .. })
        ));
    }

    #[test]
    fn guard_conjunction_parses() {
        let e = parse_connective("piece(x = 1 && y = 1 : 1 ; else : 0)").unwrap();
        assert_eq!(e.eval2(1.0, 1.0).unwrap(), 1.0);
        assert_eq!(e.eval2(1.0, 0.5).unwrap(), 0.0);
    }
}
