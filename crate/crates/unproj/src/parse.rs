//! Text grammar for polynomials.
//!
//! `expr := ['+'|'-'] term (('+'|'-') term)*`
//! `term := factor ('*' factor)*`
//! `factor := atom ['^' uint]`
//! `atom := ['-'] (int ['/' uint] | variable | '(' expr ')')`
//!
//! Whitespace is insignificant, multiplication is always explicit. Integer
//! literals are arbitrary precision; `p/q` rational coefficients are accepted
//! so canonical printing round-trips.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::poly::Poly;
use crate::ring::GradedRing;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("malformed syntax at position {pos}: {detail}")]
    Syntax { pos: usize, detail: String },
    #[error("exponent at position {pos} must be a non-negative integer")]
    BadExponent { pos: usize },
    #[error("division by zero at position {pos}")]
    ZeroDenominator { pos: usize },
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\r' | '\n' => i += 1,
            '+' => {
                toks.push((Tok::Plus, i));
                i += 1;
            }
            '-' => {
                toks.push((Tok::Minus, i));
                i += 1;
            }
            '*' => {
                toks.push((Tok::Star, i));
                i += 1;
            }
            '^' => {
                toks.push((Tok::Caret, i));
                i += 1;
            }
            '/' => {
                toks.push((Tok::Slash, i));
                i += 1;
            }
            '(' => {
                toks.push((Tok::LParen, i));
                i += 1;
            }
            ')' => {
                toks.push((Tok::RParen, i));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("digits parse");
                toks.push((Tok::Int(n), start));
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                toks.push((Tok::Ident(text[start..i].to_string()), start));
            }
            _ => {
                return Err(ParseError::Syntax {
                    pos: i,
                    detail: format!("unexpected character {c:?}"),
                })
            }
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    at: usize,
    ring: &'a GradedRing,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(t, _)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(_, p)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|(t, _)| t.clone());
        self.at += 1;
        t
    }

    fn expr(&mut self) -> Result<Poly, ParseError> {
        let mut negate = false;
        match self.peek() {
            Some(Tok::Plus) => {
                self.bump();
            }
            Some(Tok::Minus) => {
                negate = true;
                self.bump();
            }
            _ => {}
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.factor()?;
        while matches!(self.peek(), Some(Tok::Star)) {
            self.bump();
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly, ParseError> {
        let base = self.atom()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.bump();
            let pos = self.pos();
            match self.bump() {
                Some(Tok::Int(n)) => {
                    let e = u32::try_from(&n).map_err(|_| ParseError::BadExponent { pos })?;
                    if e > 60_000 {
                        return Err(ParseError::BadExponent { pos });
                    }
                    Ok(base.pow(e))
                }
                _ => Err(ParseError::BadExponent { pos }),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Poly, ParseError> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Minus) => Ok(self.atom()?.neg()),
            Some(Tok::Int(n)) => {
                // optional /q for rational coefficients
                if matches!(self.peek(), Some(Tok::Slash)) {
                    self.bump();
                    let dpos = self.pos();
                    match self.bump() {
                        Some(Tok::Int(d)) => {
                            if d.is_zero() {
                                return Err(ParseError::ZeroDenominator { pos: dpos });
                            }
                            Ok(Poly::constant(self.ring, BigRational::new(n, d)))
                        }
                        _ => Err(ParseError::Syntax {
                            pos: dpos,
                            detail: "expected integer denominator".to_string(),
                        }),
                    }
                } else {
                    Ok(Poly::constant(self.ring, BigRational::from_integer(n)))
                }
            }
            Some(Tok::Ident(name)) => match Poly::var_named(self.ring, &name) {
                Some(p) => Ok(p),
                None => Err(ParseError::UnknownVariable { name, pos }),
            },
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(ParseError::Syntax {
                        pos,
                        detail: "unclosed parenthesis".to_string(),
                    }),
                }
            }
            other => Err(ParseError::Syntax {
                pos,
                detail: format!("expected a literal, variable or `(`, got {other:?}"),
            }),
        }
    }
}

/// Parse `text` into a polynomial of `ring`.
pub fn parse_poly(text: &str, ring: &GradedRing) -> Result<Poly, ParseError> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        at: 0,
        ring,
        end: text.len(),
    };
    let out = p.expr()?;
    if p.at != p.toks.len() {
        return Err(ParseError::Syntax {
            pos: p.pos(),
            detail: "trailing input".to_string(),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::WeightedDegree;

    fn ring_xyzt() -> GradedRing {
        GradedRing::new(vec!["x", "y", "z", "t"], vec![4, 5, 6, 9]).unwrap()
    }

    #[test]
    fn parses_image_curve_equation() {
        let r = ring_xyzt();
        let f = parse_poly("x^3*z + x*y*t - z^3 + t^2", &r).unwrap();
        assert_eq!(f.num_terms(), 4);
        assert_eq!(f.weighted_degree(), WeightedDegree::Homogeneous(18));
    }

    #[test]
    fn zero_and_constants() {
        let r = ring_xyzt();
        assert!(parse_poly("0", &r).unwrap().is_zero());
        assert!(parse_poly("  -0 ", &r).unwrap().is_zero());
        let c = parse_poly("-7/2", &r).unwrap();
        assert!(c.is_constant());
    }

    #[test]
    fn unknown_variable_position() {
        let r = ring_xyzt();
        match parse_poly("x + w", &r) {
            Err(ParseError::UnknownVariable { name, pos }) => {
                assert_eq!(name, "w");
                assert_eq!(pos, 4);
            }
            other => panic!("expected unknown-variable error, got {other:?}"),
        }
    }

    #[test]
    fn rejects_bad_exponent_and_syntax() {
        let r = ring_xyzt();
        assert!(matches!(
            parse_poly("x^y", &r),
            Err(ParseError::BadExponent { .. })
        ));
        assert!(matches!(
            parse_poly("x^-2", &r),
            Err(ParseError::BadExponent { .. })
        ));
        assert!(matches!(
            parse_poly("x +", &r),
            Err(ParseError::Syntax { .. })
        ));
        assert!(matches!(
            parse_poly("(x", &r),
            Err(ParseError::Syntax { .. })
        ));
        assert!(matches!(
            parse_poly("x x", &r),
            Err(ParseError::Syntax { .. })
        ));
        assert!(matches!(
            parse_poly("1/0", &r),
            Err(ParseError::ZeroDenominator { .. })
        ));
    }

    #[test]
    fn parentheses_and_signs() {
        let r = ring_xyzt();
        let p = parse_poly("-(x - y)*(x + y)", &r).unwrap();
        let q = parse_poly("y^2 - x^2", &r).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn print_parse_roundtrip() {
        let r = ring_xyzt();
        for text in [
            "x^3*z + x*y*t - z^3 + t^2",
            "x^5 - x^2*z^2 + 2*x*y^2*z - y^4",
            "0",
            "3/2*x - 1/7",
        ] {
            let p = parse_poly(text, &r).unwrap();
            let q = parse_poly(&p.to_string(), &r).unwrap();
            assert_eq!(p, q);
        }
    }
}
