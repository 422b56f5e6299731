//! Product expressions such as `(K3 + K2) o K1` or `C5 box file(g.el)`.
//!
//! Atoms: `P<n>`, `C<n>`, `K<n>`, `K<m>,<n>` or `K{m,n}`, `S<m>` for the
//! star `K_{1,m}`, `E<n>` for `n` isolated vertices, and `file(<path>)` for
//! an edge-list file. Operators are binary, share one precedence level and
//! associate to the left:
//!
//! | spelling      | product   |
//! |---------------|-----------|
//! | `+`           | join      |
//! | `box`, `□`    | Cartesian |
//! | `strong`, `⊠` | strong    |
//! | `x`, `×`      | tensor    |
//! | `o`, `⊙`      | corona    |

use std::fmt;
use std::path::PathBuf;

use curling_core::{Family, ProductKind};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProductExpr {
    Atom(Family),
    File(PathBuf),
    Binary {
        op: ProductKind,
        left: Box<ProductExpr>,
        right: Box<ProductExpr>,
    },
}

impl ProductExpr {
    pub fn binary(op: ProductKind, left: ProductExpr, right: ProductExpr) -> Self {
        ProductExpr::Binary {
            op,
            left: Box::new(left),
            right: Box::new(right),
        }
    }
}

/// ASCII spelling of an operator.
pub fn operator_symbol(kind: ProductKind) -> &'static str {
    match kind {
        ProductKind::Join => "+",
        ProductKind::Cartesian => "box",
        ProductKind::Strong => "strong",
        ProductKind::Tensor => "x",
        ProductKind::Corona => "o",
    }
}

impl fmt::Display for ProductExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProductExpr::Atom(family) => write!(f, "{family}"),
            ProductExpr::File(path) => write!(f, "file({})", path.display()),
            ProductExpr::Binary { op, left, right } => {
                write!(f, "{left} {} ", operator_symbol(*op))?;
                match **right {
                    ProductExpr::Binary { .. } => write!(f, "({right})"),
                    _ => write!(f, "{right}"),
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown graph family `{name}` at byte {offset}")]
    UnknownFamily { offset: usize, name: String },
    #[error("bad parameter at byte {offset}: {message}")]
    BadParameter { offset: usize, message: String },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match self {
            ParseError::Syntax { offset, .. }
            | ParseError::UnknownFamily { offset, .. }
            | ParseError::BadParameter { offset, .. } => *offset,
        }
    }
}

fn syntax(offset: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        offset,
        message: message.into(),
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Open,
    Close,
    Op(ProductKind),
    Atom(ProductExpr),
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn peek_char(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek_char()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn skip_ws(&mut self) {
        while self.peek_char().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn eat(&mut self, expected: char) -> bool {
        self.skip_ws();
        if self.peek_char() == Some(expected) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek_char().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        if start == self.pos {
            return Err(syntax(start, "expected a number"));
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| ParseError::BadParameter {
                offset: start,
                message: "number too large".into(),
            })
    }

    /// Parameters after a family letter: `<n>`, `<m>,<n>`, `{n}` or `{m,n}`.
    fn parameters(&mut self, allow_pair: bool) -> Result<(usize, Option<usize>), ParseError> {
        let braced = self.eat('{');
        let first = self.number()?;
        let second = if allow_pair && self.eat(',') {
            Some(self.number()?)
        } else {
            None
        };
        if braced && !self.eat('}') {
            return Err(syntax(self.pos, "expected `}`"));
        }
        Ok((first, second))
    }

    fn family(&mut self, letter: char, start: usize) -> Result<ProductExpr, ParseError> {
        let (first, second) = self.parameters(letter == 'K')?;
        let family = match (letter, second) {
            ('P', _) => Family::Path(first),
            ('C', _) => Family::Cycle(first),
            ('K', None) => Family::Complete(first),
            ('K', Some(n)) => Family::CompleteBipartite(first, n),
            ('S', _) => Family::Star(first),
            ('E', _) => Family::Empty(first),
            _ => unreachable!("family letters are filtered by the caller"),
        };
        family.validate().map_err(|e| ParseError::BadParameter {
            offset: start,
            message: e.to_string(),
        })?;
        Ok(ProductExpr::Atom(family))
    }

    fn file(&mut self, start: usize) -> Result<ProductExpr, ParseError> {
        if !self.eat('(') {
            return Err(syntax(self.pos, "expected `(` after `file`"));
        }
        let rest = &self.src[self.pos..];
        let close = rest
            .find(')')
            .ok_or_else(|| syntax(start, "unterminated `file(`"))?;
        let path = rest[..close].trim();
        if path.is_empty() {
            return Err(syntax(self.pos, "empty file path"));
        }
        self.pos += close + 1;
        Ok(ProductExpr::File(PathBuf::from(path)))
    }

    fn next_token(&mut self) -> Result<Option<(usize, Token)>, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let Some(c) = self.bump() else {
            return Ok(None);
        };
        let token = match c {
            '(' => Token::Open,
            ')' => Token::Close,
            '+' => Token::Op(ProductKind::Join),
            '□' => Token::Op(ProductKind::Cartesian),
            '⊠' => Token::Op(ProductKind::Strong),
            '×' => Token::Op(ProductKind::Tensor),
            '⊙' => Token::Op(ProductKind::Corona),
            'P' | 'C' | 'K' | 'S' | 'E' => Token::Atom(self.family(c, start)?),
            c if c.is_ascii_lowercase() => {
                while self.peek_char().is_some_and(|c| c.is_ascii_lowercase()) {
                    self.bump();
                }
                let word = &self.src[start..self.pos];
                match word {
                    "box" => Token::Op(ProductKind::Cartesian),
                    "strong" => Token::Op(ProductKind::Strong),
                    "x" => Token::Op(ProductKind::Tensor),
                    "o" => Token::Op(ProductKind::Corona),
                    "file" => Token::Atom(self.file(start)?),
                    _ if self
                        .peek_char()
                        .is_some_and(|c| c.is_ascii_digit() || c == '{') =>
                    {
                        return Err(ParseError::UnknownFamily {
                            offset: start,
                            name: word.to_string(),
                        })
                    }
                    _ => return Err(syntax(start, format!("unknown operator `{word}`"))),
                }
            }
            c if c.is_alphabetic() => {
                return Err(ParseError::UnknownFamily {
                    offset: start,
                    name: c.to_string(),
                })
            }
            c => return Err(syntax(start, format!("unexpected character `{c}`"))),
        };
        Ok(Some((start, token)))
    }
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&(usize, Token)> {
        self.tokens.get(self.pos)
    }

    fn offset(&self) -> usize {
        self.peek().map_or(self.end, |(o, _)| *o)
    }

    fn expr(&mut self) -> Result<ProductExpr, ParseError> {
        let mut left = self.primary()?;
        while let Some((_, Token::Op(op))) = self.peek() {
            let op = *op;
            self.pos += 1;
            let right = self.primary()?;
            left = ProductExpr::binary(op, left, right);
        }
        Ok(left)
    }

    fn primary(&mut self) -> Result<ProductExpr, ParseError> {
        let offset = self.offset();
        match self.tokens.get(self.pos).cloned() {
            Some((_, Token::Atom(atom))) => {
                self.pos += 1;
                Ok(atom)
            }
            Some((_, Token::Open)) => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some((_, Token::Close)) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => Err(syntax(self.offset(), "expected `)`")),
                }
            }
            Some((_, Token::Close)) => Err(syntax(offset, "unexpected `)`")),
            Some((_, Token::Op(_))) => Err(syntax(offset, "expected a graph, found an operator")),
            None => Err(syntax(offset, "expected a graph at end of input")),
        }
    }
}

pub fn parse_expression(text: &str) -> Result<ProductExpr, ParseError> {
    let mut lexer = Lexer { src: text, pos: 0 };
    let mut tokens = Vec::new();
    while let Some(tok) = lexer.next_token()? {
        tokens.push(tok);
    }
    let mut parser = Parser {
        tokens,
        pos: 0,
        end: text.len(),
    };
    let expr = parser.expr()?;
    match parser.peek() {
        None => Ok(expr),
        Some((offset, Token::Close)) => Err(syntax(*offset, "unbalanced `)`")),
        Some((offset, _)) => Err(syntax(*offset, "expected an operator")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ProductKind::*;

    fn atom(f: Family) -> ProductExpr {
        ProductExpr::Atom(f)
    }

    #[test]
    fn simple_binary() {
        assert_eq!(
            parse_expression("C5 box P7").unwrap(),
            ProductExpr::binary(Cartesian, atom(Family::Cycle(5)), atom(Family::Path(7)))
        );
    }

    #[test]
    fn parentheses_and_left_association() {
        let join = ProductExpr::binary(Join, atom(Family::Complete(3)), atom(Family::Complete(2)));
        let expected = ProductExpr::binary(Corona, join.clone(), atom(Family::Complete(1)));
        assert_eq!(parse_expression("(K3 + K2) o K1").unwrap(), expected);
        assert_eq!(parse_expression("K3 + K2 o K1").unwrap(), expected);
        let right = ProductExpr::binary(
            Join,
            atom(Family::Complete(3)),
            ProductExpr::binary(Corona, atom(Family::Complete(2)), atom(Family::Complete(1))),
        );
        assert_eq!(parse_expression("K3 + (K2 o K1)").unwrap(), right);
    }

    #[test]
    fn atoms() {
        let cases = [
            ("K{2,3}", Family::CompleteBipartite(2, 3)),
            ("K2,3", Family::CompleteBipartite(2, 3)),
            ("K { 2 , 3 }", Family::CompleteBipartite(2, 3)),
            ("K{4}", Family::Complete(4)),
            ("S4", Family::Star(4)),
            ("E3", Family::Empty(3)),
            ("P1", Family::Path(1)),
        ];
        for (text, family) in cases {
            assert_eq!(parse_expression(text).unwrap(), atom(family), "{text}");
        }
        assert_eq!(
            parse_expression(" file( data/g.el ) x P2").unwrap(),
            ProductExpr::binary(
                Tensor,
                ProductExpr::File(PathBuf::from("data/g.el")),
                atom(Family::Path(2))
            )
        );
    }

    #[test]
    fn compact_and_unicode_spellings() {
        let expected = parse_expression("C5 x P2 o K1 strong P3 box C4").unwrap();
        assert_eq!(parse_expression("C5xP2oK1strongP3boxC4").unwrap(), expected);
        assert_eq!(
            parse_expression("C5 × P2 ⊙ K1 ⊠ P3 □ C4").unwrap(),
            expected
        );
    }

    #[test]
    fn trailing_operator() {
        assert_eq!(
            parse_expression("P4 box"),
            Err(syntax(6, "expected a graph at end of input"))
        );
    }

    #[test]
    fn error_kinds() {
        assert!(matches!(
            parse_expression("Q4"),
            Err(ParseError::UnknownFamily { offset: 0, .. })
        ));
        assert!(matches!(
            parse_expression("P4 + q4"),
            Err(ParseError::UnknownFamily { offset: 5, .. })
        ));
        assert!(matches!(
            parse_expression("C2"),
            Err(ParseError::BadParameter { offset: 0, .. })
        ));
        assert!(matches!(
            parse_expression("P0 + P3"),
            Err(ParseError::BadParameter { offset: 0, .. })
        ));
        assert!(matches!(
            parse_expression("P99999999999999999999999"),
            Err(ParseError::BadParameter { .. })
        ));
        assert!(matches!(
            parse_expression("P4 P5"),
            Err(ParseError::Syntax { offset: 3, .. })
        ));
        assert!(matches!(
            parse_expression("(P4 + P5"),
            Err(ParseError::Syntax { offset: 8, .. })
        ));
        assert!(matches!(
            parse_expression("P4)"),
            Err(ParseError::Syntax { offset: 2, .. })
        ));
        assert!(matches!(
            parse_expression(""),
            Err(ParseError::Syntax { offset: 0, .. })
        ));
        assert!(matches!(
            parse_expression("P4 bx P2"),
            Err(ParseError::Syntax { offset: 3, .. })
        ));
        assert!(matches!(
            parse_expression("K{2,3"),
            Err(ParseError::Syntax { .. })
        ));
        assert!(matches!(
            parse_expression("file(x"),
            Err(ParseError::Syntax { .. })
        ));
        assert!(matches!(
            parse_expression("P"),
            Err(ParseError::Syntax { offset: 1, .. })
        ));
    }

    #[test]
    fn display_round_trips() {
        for text in [
            "(K3 + K2) o K1",
            "K3 + (K2 o K1)",
            "K{2,3} x file(a.el)",
            "S3 strong E2",
        ] {
            let e = parse_expression(text).unwrap();
            assert_eq!(
                parse_expression(&e.to_string()).unwrap(),
                e,
                "{text} -> {e}"
            );
        }
        assert_eq!(
            parse_expression("(K3+K2)oK1").unwrap().to_string(),
            "K3 + K2 o K1"
        );
    }
}
