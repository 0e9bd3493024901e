//! Expression parsing for the polynomial grammar shared by the CLI and
//! the algebra config format: identifiers, integer/rational literals,
//! the reserved coefficient symbol `h`, the operators `+ - * ^` and
//! parentheses. `^` binds tightest and takes nonnegative integer
//! exponents; unary minus is accepted so printed output parses back.
//!
//! The same grammar is evaluated in two modes: commutatively over the
//! coordinate functions `x<name>` (producing a [`Poly`]) and
//! noncommutatively over the generator names themselves (producing a
//! formal sum of tensor words for the PBW normalizer).

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::poly::Poly;
use crate::scalars::{HPoly, Rational};
use crate::uh::Word;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Number(Rational),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Eof,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    pos: usize,
}

fn tokenize(src: &str) -> Result<Vec<Token>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let pos = i;
        let tok = match c {
            '+' => {
                i += 1;
                Tok::Plus
            }
            '-' => {
                i += 1;
                Tok::Minus
            }
            '*' => {
                i += 1;
                Tok::Star
            }
            '^' => {
                i += 1;
                Tok::Caret
            }
            '(' => {
                i += 1;
                Tok::LParen
            }
            ')' => {
                i += 1;
                Tok::RParen
            }
            _ if c.is_ascii_digit() => {
                let start = i;
                while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                    i += 1;
                }
                let mut text = &src[start..i];
                // rational literal p/q
                if i < bytes.len()
                    && bytes[i] as char == '/'
                    && i + 1 < bytes.len()
                    && (bytes[i + 1] as char).is_ascii_digit()
                {
                    i += 1;
                    while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                        i += 1;
                    }
                    text = &src[start..i];
                }
                let value: Rational = text.parse().map_err(|_| Error::SyntaxError {
                    pos,
                    expected: "integer or rational literal".into(),
                })?;
                Tok::Number(value)
            }
            _ if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] as char == '_')
                {
                    i += 1;
                }
                Tok::Ident(src[start..i].to_string())
            }
            _ => {
                return Err(Error::SyntaxError {
                    pos,
                    expected: "identifier, literal, operator or parenthesis".into(),
                })
            }
        };
        out.push(Token { tok, pos });
    }
    out.push(Token {
        tok: Tok::Eof,
        pos: bytes.len(),
    });
    Ok(out)
}

#[derive(Clone, Debug)]
enum Ast {
    Num(Rational),
    H,
    Ident(String, usize),
    Neg(Box<Ast>),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Pow(Box<Ast>, u32),
}

struct Parser {
    tokens: Vec<Token>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.tokens[self.at].tok
    }

    fn pos(&self) -> usize {
        self.tokens[self.at].pos
    }

    fn bump(&mut self) -> Tok {
        let t = self.tokens[self.at].tok.clone();
        self.at += 1;
        t
    }

    fn expr(&mut self) -> Result<Ast> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Ast::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Ast::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Ast> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::Star {
            self.bump();
            lhs = Ast::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Ast> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Ast::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Ast> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let pos = self.pos();
        match self.bump() {
            Tok::Number(r) => {
                if !num_traits::One::is_one(r.denom()) || r.is_negative() {
                    return Err(Error::SyntaxError {
                        pos,
                        expected: "nonnegative integer exponent".into(),
                    });
                }
                let exp: u32 = r
                    .numer()
                    .to_string()
                    .parse()
                    .map_err(|_| Error::SyntaxError {
                        pos,
                        expected: "exponent small enough to fit in 32 bits".into(),
                    })?;
                Ok(Ast::Pow(Box::new(base), exp))
            }
            _ => Err(Error::SyntaxError {
                pos,
                expected: "nonnegative integer exponent".into(),
            }),
        }
    }

    fn atom(&mut self) -> Result<Ast> {
        let pos = self.pos();
        match self.bump() {
            Tok::Number(r) => Ok(Ast::Num(r)),
            Tok::Ident(name) => {
                if name == "h" {
                    Ok(Ast::H)
                } else {
                    Ok(Ast::Ident(name, pos))
                }
            }
            Tok::LParen => {
                let inner = self.expr()?;
                let pos = self.pos();
                match self.bump() {
                    Tok::RParen => Ok(inner),
                    _ => Err(Error::SyntaxError {
                        pos,
                        expected: "closing parenthesis".into(),
                    }),
                }
            }
            _ => Err(Error::SyntaxError {
                pos,
                expected: "identifier, literal, unary minus or parenthesized expression".into(),
            }),
        }
    }
}

fn parse_ast(src: &str) -> Result<Ast> {
    if src.trim().is_empty() {
        return Err(Error::SyntaxError {
            pos: 0,
            expected: "nonempty expression".into(),
        });
    }
    let mut parser = Parser {
        tokens: tokenize(src)?,
        at: 0,
    };
    let ast = parser.expr()?;
    if *parser.peek() != Tok::Eof {
        return Err(Error::SyntaxError {
            pos: parser.pos(),
            expected: "operator or end of input".into(),
        });
    }
    Ok(ast)
}

fn eval_poly(ast: &Ast, names: &[String], n: usize) -> Result<Poly> {
    Ok(match ast {
        Ast::Num(r) => Poly::constant(n, HPoly::constant(r.clone())),
        Ast::H => Poly::constant(n, HPoly::h()),
        Ast::Ident(name, pos) => {
            let idx =
                names
                    .iter()
                    .position(|c| c == name)
                    .ok_or_else(|| Error::UnknownIdentifier {
                        name: name.clone(),
                        pos: *pos,
                    })?;
            Poly::var(idx, n)
        }
        Ast::Neg(a) => -&eval_poly(a, names, n)?,
        Ast::Add(a, b) => &eval_poly(a, names, n)? + &eval_poly(b, names, n)?,
        Ast::Sub(a, b) => &eval_poly(a, names, n)? - &eval_poly(b, names, n)?,
        Ast::Mul(a, b) => &eval_poly(a, names, n)? * &eval_poly(b, names, n)?,
        Ast::Pow(a, e) => {
            let base = eval_poly(a, names, n)?;
            let mut acc = Poly::one(n);
            for _ in 0..*e {
                acc = &acc * &base;
            }
            acc
        }
    })
}

/// Parse a commutative polynomial over the coordinate functions of the
/// algebra (`xH`, `xX`, ... for sl2).
pub fn parse_poly(src: &str, algebra: &LieAlgebra) -> Result<Poly> {
    let names = algebra.coordinate_names();
    eval_poly(&parse_ast(src)?, &names, algebra.dim())
}

/// Parse a polynomial against an explicit list of coordinate names
/// (used by the config loader before the algebra is fully assembled).
pub fn parse_poly_with_names(src: &str, coordinate_names: &[String]) -> Result<Poly> {
    eval_poly(&parse_ast(src)?, coordinate_names, coordinate_names.len())
}

/// Parse a scalar in `Q[h]` (no coordinates allowed).
pub fn parse_hpoly(src: &str) -> Result<HPoly> {
    let p = eval_poly(&parse_ast(src)?, &[], 0)?;
    Ok(p.coeff(&crate::poly::Monomial::one(0)))
}

type NcSum = Vec<(Word, HPoly)>;

fn nc_mul(a: &NcSum, b: &NcSum) -> NcSum {
    let mut out = Vec::new();
    for (wa, ca) in a {
        for (wb, cb) in b {
            let mut w = wa.clone();
            w.extend_from_slice(wb);
            out.push((w, ca * cb));
        }
    }
    out
}

fn nc_neg(a: &NcSum) -> NcSum {
    a.iter().map(|(w, c)| (w.clone(), -c)).collect()
}

fn eval_words(ast: &Ast, names: &[String]) -> Result<NcSum> {
    Ok(match ast {
        Ast::Num(r) => vec![(Vec::new(), HPoly::constant(r.clone()))],
        Ast::H => vec![(Vec::new(), HPoly::h())],
        Ast::Ident(name, pos) => {
            let idx =
                names
                    .iter()
                    .position(|c| c == name)
                    .ok_or_else(|| Error::UnknownIdentifier {
                        name: name.clone(),
                        pos: *pos,
                    })?;
            vec![(vec![idx], HPoly::one())]
        }
        Ast::Neg(a) => nc_neg(&eval_words(a, names)?),
        Ast::Add(a, b) => {
            let mut out = eval_words(a, names)?;
            out.extend(eval_words(b, names)?);
            out
        }
        Ast::Sub(a, b) => {
            let mut out = eval_words(a, names)?;
            out.extend(nc_neg(&eval_words(b, names)?));
            out
        }
        Ast::Mul(a, b) => nc_mul(&eval_words(a, names)?, &eval_words(b, names)?),
        Ast::Pow(a, e) => {
            let base = eval_words(a, names)?;
            let mut acc: NcSum = vec![(Vec::new(), HPoly::one())];
            for _ in 0..*e {
                acc = nc_mul(&acc, &base);
            }
            acc
        }
    })
}

/// Parse a noncommutative expression in the generator names themselves
/// (`H`, `X`, `Y` for sl2): the formal sum of tensor words it denotes,
/// ready for PBW normalization. Products preserve order.
pub fn parse_word_expr(src: &str, algebra: &LieAlgebra) -> Result<Vec<(Word, HPoly)>> {
    eval_words(&parse_ast(src)?, algebra.names())
}
