//! Expression parser for polynomials over a declared VarSet.
//!
//! Grammar, loosest binding first:
//!
//! ```text
//! quotient := expr ('/' expr)?          (rational-function mode only)
//! expr     := term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := '-' factor | power
//! power    := primary ('^' INT)?
//! primary  := INT ('/' INT)? | IDENT | '(' expr ')'
//! ```
//!
//! Multiplication is always explicit and `/` only forms rational literals.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{Coeff, Polynomial, RationalFunction, VarSet};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    col: usize,
    end: usize,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Int(n) => format!("`{n}`"),
        Tok::Plus => "`+`".into(),
        Tok::Minus => "`-`".into(),
        Tok::Star => "`*`".into(),
        Tok::Caret => "`^`".into(),
        Tok::Slash => "`/`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
    }
}

fn tokenize(text: &str, line: usize) -> Result<Vec<Spanned>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let tok = if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Spanned {
                tok: Tok::Ident(chars[start..i].iter().collect()),
                col,
                end: i + 1,
            });
            continue;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push(Spanned {
                tok: Tok::Int(digits.parse().expect("ascii digits")),
                col,
                end: i + 1,
            });
            continue;
        } else {
            match c {
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '^' => Tok::Caret,
                '/' => Tok::Slash,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                _ => {
                    return Err(Error::ParseError {
                        line,
                        column: col,
                        message: format!("unexpected character `{c}`"),
                    })
                }
            }
        };
        out.push(Spanned {
            tok,
            col,
            end: col + 1,
        });
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Spanned>,
    pos: usize,
    vars: &'a VarSet,
    line: usize,
    end_col: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    fn peek_at(&self, k: usize) -> Option<&Tok> {
        self.toks.get(self.pos + k).map(|s| &s.tok)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |s| s.col)
    }

    fn err_at<T>(&self, column: usize, message: impl Into<String>) -> Result<T> {
        Err(Error::ParseError {
            line: self.line,
            column,
            message: message.into(),
        })
    }

    fn bump(&mut self) -> Option<Spanned> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn constant(&self, c: Coeff) -> Polynomial {
        Polynomial::constant(self.vars, c)
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while let Some(Tok::Star) = self.peek() {
            self.bump();
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        if let Some(Tok::Minus) = self.peek() {
            self.bump();
            return Ok(-self.factor()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.primary()?;
        if let Some(Tok::Caret) = self.peek() {
            let caret_col = self.col();
            self.bump();
            let exp = match self.bump() {
                Some(Spanned {
                    tok: Tok::Int(n),
                    col,
                    end,
                }) => {
                    // `x^1/2` reads as a fractional exponent; `x^2 / y` is a quotient
                    if self.peek() == Some(&Tok::Slash) && self.col() == end {
                        return self.err_at(self.col(), "fractional exponents are not allowed");
                    }
                    match u32::try_from(n) {
                        Ok(e) => e,
                        Err(_) => return self.err_at(col, "exponent too large"),
                    }
                }
                Some(Spanned {
                    tok: Tok::Minus,
                    col,
                    ..
                }) => return self.err_at(col, "negative exponents are not allowed"),
                Some(Spanned { tok, col, .. }) => {
                    return self.err_at(
                        col,
                        format!(
                            "expected a nonnegative integer exponent, found {}",
                            describe(&tok)
                        ),
                    )
                }
                None => return self.err_at(caret_col, "dangling `^` with no exponent"),
            };
            if let Some(Tok::Caret) = self.peek() {
                return self.err_at(self.col(), "chained exponents need parentheses");
            }
            return Ok(base.pow(exp));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Polynomial> {
        let col = self.col();
        match self.bump() {
            Some(Spanned {
                tok: Tok::Int(n), ..
            }) => {
                if let (Some(Tok::Slash), Some(Tok::Int(_))) = (self.peek(), self.peek_at(1)) {
                    self.bump();
                    let dcol = self.col();
                    let Some(Spanned {
                        tok: Tok::Int(d), ..
                    }) = self.bump()
                    else {
                        unreachable!()
                    };
                    if d.is_zero() {
                        return self.err_at(dcol, "zero denominator in rational literal");
                    }
                    return Ok(self.constant(Coeff::new(n, d)));
                }
                Ok(self.constant(Coeff::from_integer(n)))
            }
            Some(Spanned {
                tok: Tok::Ident(name),
                ..
            }) => match self.vars.index_of(&name) {
                Some(i) => Ok(Polynomial::var_at(self.vars, i)),
                None => Err(Error::UnknownVariable(name)),
            },
            Some(Spanned {
                tok: Tok::LParen, ..
            }) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Spanned {
                        tok: Tok::RParen, ..
                    }) => Ok(inner),
                    Some(Spanned { tok, col, .. }) => {
                        self.err_at(col, format!("expected `)`, found {}", describe(&tok)))
                    }
                    None => self.err_at(self.end_col, "missing `)`"),
                }
            }
            Some(Spanned { tok, col, .. }) => self.err_at(
                col,
                format!("expected an operand, found {}", describe(&tok)),
            ),
            None => self.err_at(col, "unexpected end of input"),
        }
    }

    fn expect_end(&self) -> Result<()> {
        match self.toks.get(self.pos) {
            None => Ok(()),
            Some(Spanned {
                tok: Tok::Slash,
                col,
                ..
            }) => self.err_at(*col, "`/` is only allowed between integer literals"),
            Some(Spanned {
                tok: tok @ (Tok::Ident(_) | Tok::Int(_) | Tok::LParen),
                col,
                ..
            }) => self.err_at(
                *col,
                format!(
                    "unexpected {}; multiplication needs an explicit `*`",
                    describe(tok)
                ),
            ),
            Some(Spanned { tok, col, .. }) => {
                self.err_at(*col, format!("unexpected {}", describe(tok)))
            }
        }
    }
}

fn parser<'a>(text: &str, vars: &'a VarSet, line: usize) -> Result<Parser<'a>> {
    let toks = tokenize(text, line)?;
    if toks.is_empty() {
        return Err(Error::ParseError {
            line,
            column: 1,
            message: "empty expression".into(),
        });
    }
    Ok(Parser {
        toks,
        pos: 0,
        vars,
        line,
        end_col: text.chars().count() + 1,
    })
}

pub fn parse_polynomial(text: &str, vars: &VarSet) -> Result<Polynomial> {
    parse_polynomial_at(text, vars, 1)
}

/// Same as [`parse_polynomial`], reporting errors on line `line`.
pub fn parse_polynomial_at(text: &str, vars: &VarSet, line: usize) -> Result<Polynomial> {
    let mut p = parser(text, vars, line)?;
    let poly = p.expr()?;
    p.expect_end()?;
    Ok(poly)
}

/// `expr` or `expr / expr`, the split being at the single top-level `/`.
pub fn parse_rational_function_at(
    text: &str,
    vars: &VarSet,
    line: usize,
) -> Result<RationalFunction> {
    let mut p = parser(text, vars, line)?;
    let num = p.expr()?;
    let den = if let Some(Tok::Slash) = p.peek() {
        let col = p.col();
        p.bump();
        let den = p.expr()?;
        if den.is_zero() {
            return p.err_at(col, "denominator is identically zero");
        }
        den
    } else {
        Polynomial::one(vars)
    };
    p.expect_end()?;
    RationalFunction::new(num, den)
}

/// A rational literal `p`, `-p` or `p/q`.
pub fn parse_rational(text: &str, line: usize) -> Result<Coeff> {
    let t = text.trim();
    let bad = || Error::ParseError {
        line,
        column: 1,
        message: format!("`{t}` is not a rational literal"),
    };
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest.trim_start()),
        None => (false, t),
    };
    let int = |s: &str| -> Result<BigInt> {
        if s.is_empty() || !s.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        Ok(s.parse().expect("digits"))
    };
    let value = match body.split_once('/') {
        Some((n, d)) => {
            let d = int(d.trim())?;
            if d.is_zero() {
                return Err(bad());
            }
            Coeff::new(int(n.trim())?, d)
        }
        None => Coeff::from_integer(int(body)?),
    };
    Ok(if neg { -value } else { value })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::frac;

    fn vars(n: usize) -> VarSet {
        VarSet::indexed("x", n).unwrap()
    }

    fn column_of(e: Error) -> usize {
        match e {
            Error::ParseError { column, .. } => column,
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn three_terms() {
        let p = parse_polynomial("x1^2 + 3/2*x2 - 1", &vars(2)).unwrap();
        assert_eq!(p.num_terms(), 3);
        assert_eq!(p.to_string(), "x1^2 + 3/2*x2 - 1");
    }

    #[test]
    fn quartic_fixture() {
        let p = parse_polynomial(
            "x1^4 + x2^4 + x3^4 + x4^4 + x1*x5^3 + x4^3*x5 - 6*x2^2*x3^2",
            &vars(5),
        )
        .unwrap();
        assert_eq!(p.num_terms(), 7);
        assert_eq!(p.is_homogeneous().map(|h| h.degree), Some(4));
    }

    #[test]
    fn dangling_caret() {
        let e = parse_polynomial("x1^", &vars(1)).unwrap_err();
        assert_eq!(column_of(e), 3);
    }

    #[test]
    fn precedence_and_unary_minus() {
        let v = vars(2);
        let p = parse_polynomial("-x1^2 + 2*(x1 + x2)^2", &v).unwrap();
        assert_eq!(p.to_string(), "x1^2 + 4*x1*x2 + 2*x2^2");
        assert_eq!(parse_polynomial("2*-x1", &v).unwrap().to_string(), "-2*x1");
    }

    #[test]
    fn rejected_inputs() {
        let v = vars(2);
        assert_eq!(column_of(parse_polynomial("2x1", &v).unwrap_err()), 2);
        assert!(
            matches!(parse_polynomial("y + 1", &v), Err(Error::UnknownVariable(n)) if n == "y")
        );
        assert_eq!(column_of(parse_polynomial("x1^-1", &v).unwrap_err()), 4);
        assert_eq!(column_of(parse_polynomial("x1^1/2", &v).unwrap_err()), 5);
        assert_eq!(column_of(parse_polynomial("x1/x2", &v).unwrap_err()), 3);
        assert!(parse_polynomial("1/0", &v).is_err());
        assert!(parse_polynomial("(x1 + 1", &v).is_err());
        assert!(parse_polynomial("   ", &v).is_err());
        assert!(parse_polynomial("x1 # x2", &v).is_err());
        assert!(parse_polynomial("x1^2^3", &v).is_err());
        assert_eq!(
            parse_polynomial("1.5", &v)
                .map(|_| ())
                .unwrap_err()
                .to_string(),
            "parse error at line 1, column 2: unexpected character `.`"
        );
    }

    #[test]
    fn rational_functions() {
        let v = VarSet::new(["x", "y"]).unwrap();
        let f = parse_rational_function_at("x/y", &v, 1).unwrap();
        assert_eq!(f.to_string(), "(x) / (y)");
        let g = parse_rational_function_at("3/2*x^2 / (2*x*y)", &v, 1).unwrap();
        assert_eq!(g.to_string(), "(3/4*x) / (y)");
        assert_eq!(
            parse_rational_function_at("x + 1", &v, 1)
                .unwrap()
                .to_string(),
            "x + 1"
        );
        assert!(parse_rational_function_at("x / (y - y)", &v, 1).is_err());
    }

    #[test]
    fn rational_literals() {
        assert_eq!(parse_rational("-3/6", 1).unwrap(), frac(-1, 2));
        assert_eq!(parse_rational(" 7 ", 1).unwrap(), frac(7, 1));
        assert!(parse_rational("1/0", 1).is_err());
        assert!(parse_rational("x", 1).is_err());
    }
}
