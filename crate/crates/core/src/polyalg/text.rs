//! Plain-text polynomial syntax: `x1^6 + 3/2*x1*y1 - 2`. The printer emits
//! terms in descending graded-lex order; the parser accepts both explicit `*`
//! and juxtaposition with whitespace, and only the ring's variable names.

use super::{PolyRing, Polynomial};
use crate::exactnum::{rat_int, Rational};
use num_traits::{One, Signed};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("unexpected character {0:?} at byte {1}")]
    UnexpectedChar(char, usize),
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("malformed number {0:?}")]
    BadNumber(String),
    #[error("exponent must be a nonnegative integer, got {0:?}")]
    BadExponent(String),
    #[error("division by zero in a coefficient")]
    ZeroDenominator,
    #[error("empty term at byte {0}")]
    EmptyTerm(usize),
}

pub fn format_polynomial(poly: &Polynomial, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if poly.is_zero() {
        return write!(f, "0");
    }
    let names = poly.ring().names();
    for (i, (mono, coeff)) in poly.terms().enumerate() {
        let negative = coeff.is_negative();
        if i == 0 {
            if negative {
                write!(f, "-")?;
            }
        } else if negative {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        let mag = coeff.abs();
        let constant_term = mono.total_degree() == 0;
        let mut wrote_factor = false;
        if !mag.is_one() || constant_term {
            write!(f, "{mag}")?;
            wrote_factor = true;
        }
        for (v, e) in mono.0.iter().enumerate() {
            if *e == 0 {
                continue;
            }
            if wrote_factor {
                write!(f, "*")?;
            }
            write!(f, "{}", names[v])?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
            wrote_factor = true;
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    Number(String),
    Ident(String),
}

fn tokenize(src: &str) -> Result<Vec<(Token, usize)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = src.char_indices().peekable();
    while let Some(&(pos, ch)) = chars.peek() {
        match ch {
            c if c.is_whitespace() => {
                chars.next();
            }
            '+' => {
                chars.next();
                out.push((Token::Plus, pos));
            }
            '-' => {
                chars.next();
                out.push((Token::Minus, pos));
            }
            '*' => {
                chars.next();
                out.push((Token::Star, pos));
            }
            '^' => {
                chars.next();
                out.push((Token::Caret, pos));
            }
            '/' => {
                chars.next();
                out.push((Token::Slash, pos));
            }
            c if c.is_ascii_digit() => {
                let mut text = String::new();
                while let Some(&(_, d)) = chars.peek() {
                    if d.is_ascii_digit() {
                        text.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push((Token::Number(text), pos));
            }
            c if c.is_alphabetic() || c == '_' => {
                let mut text = String::new();
                while let Some(&(_, d)) = chars.peek() {
                    if d.is_alphanumeric() || d == '_' {
                        text.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push((Token::Ident(text), pos));
            }
            other => return Err(ParseError::UnexpectedChar(other, pos)),
        }
    }
    Ok(out)
}

/// Parses a sum of terms; each term is a product of rational constants and
/// powers of ring variables.
pub fn parse_polynomial(src: &str, ring: &PolyRing) -> Result<Polynomial, ParseError> {
    let tokens = tokenize(src)?;
    let mut acc = Polynomial::zero(ring);
    let mut i = 0;
    loop {
        // Leading sign(s) of the term.
        let mut sign = Rational::one();
        let term_start = tokens.get(i).map_or(src.len(), |(_, p)| *p);
        while let Some((tok, _)) = tokens.get(i) {
            match tok {
                Token::Plus => i += 1,
                Token::Minus => {
                    sign = -sign;
                    i += 1;
                }
                _ => break,
            }
        }
        if i == tokens.len() {
            if acc.is_zero() && sign.is_one() && tokens.is_empty() {
                return Err(ParseError::EmptyTerm(0));
            }
            if tokens
                .last()
                .is_some_and(|(t, _)| matches!(t, Token::Plus | Token::Minus))
            {
                return Err(ParseError::EmptyTerm(term_start));
            }
            break;
        }
        let mut coeff = sign;
        let mut exps = vec![0u32; ring.nvars()];
        let mut saw_factor = false;
        loop {
            match tokens.get(i) {
                Some((Token::Number(text), _)) => {
                    i += 1;
                    let mut value: Rational = text
                        .parse::<i64>()
                        .map(rat_int)
                        .map_err(|_| ParseError::BadNumber(text.clone()))?;
                    if let Some((Token::Slash, _)) = tokens.get(i) {
                        i += 1;
                        let Some((Token::Number(den), _)) = tokens.get(i) else {
                            return Err(ParseError::BadNumber(format!("{text}/")));
                        };
                        i += 1;
                        let d: i64 = den
                            .parse()
                            .map_err(|_| ParseError::BadNumber(den.clone()))?;
                        if d == 0 {
                            return Err(ParseError::ZeroDenominator);
                        }
                        value /= rat_int(d);
                    }
                    coeff *= value;
                    saw_factor = true;
                }
                Some((Token::Ident(name), _)) => {
                    i += 1;
                    let Some(v) = ring.var_index(name) else {
                        return Err(ParseError::UnknownVariable(name.clone()));
                    };
                    let mut exp = 1u32;
                    if let Some((Token::Caret, _)) = tokens.get(i) {
                        i += 1;
                        let Some((Token::Number(e), _)) = tokens.get(i) else {
                            let got = tokens
                                .get(i)
                                .map_or(String::new(), |(t, _)| format!("{t:?}"));
                            return Err(ParseError::BadExponent(got));
                        };
                        i += 1;
                        exp = e.parse().map_err(|_| ParseError::BadExponent(e.clone()))?;
                    }
                    exps[v] += exp;
                    saw_factor = true;
                }
                Some((Token::Star, _)) => {
                    i += 1; // explicit product separator, next factor follows
                }
                _ => break,
            }
        }
        if !saw_factor {
            return Err(ParseError::EmptyTerm(term_start));
        }
        let term = Polynomial::monomial(ring, exps, coeff);
        acc = acc.add(&term).expect("same ring");
        if i == tokens.len() {
            break;
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use crate::polyalg::Monomial;

    fn ring() -> PolyRing {
        PolyRing::unweighted(&["x1", "y1", "x2", "y2"])
    }

    #[test]
    fn parse_and_print_round_trip() {
        let r = ring();
        let samples = [
            "x1^6 - 2*x1^3*y1^3 + y1^6",
            "-x1 + 1/2",
            "3/4*x2^2*y2 - y2^3 + x1 - 5",
            "0",
        ];
        for src in samples {
            let p = parse_polynomial(src, &r).unwrap();
            assert_eq!(p.to_string(), src, "round trip for {src:?}");
        }
    }

    #[test]
    fn juxtaposition_equals_star() {
        let r = ring();
        let a = parse_polynomial("2 x1 y1^2", &r).unwrap();
        let b = parse_polynomial("2*x1*y1^2", &r).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn repeated_variable_accumulates() {
        let r = ring();
        let a = parse_polynomial("x1*x1*x1", &r).unwrap();
        let b = parse_polynomial("x1^3", &r).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn coefficient_fractions_multiply() {
        let r = ring();
        let p = parse_polynomial("1/2*3*x1", &r).unwrap();
        assert_eq!(p.coefficient(&Monomial(vec![1, 0, 0, 0])), rat(3, 2));
    }

    #[test]
    fn like_terms_merge() {
        let r = ring();
        let p = parse_polynomial("x1 + x1 - 2*x1", &r).unwrap();
        assert!(p.is_zero());
        assert_eq!(p.to_string(), "0");
    }

    #[test]
    fn unknown_variable_rejected() {
        let r = ring();
        assert_eq!(
            parse_polynomial("q^2", &r),
            Err(ParseError::UnknownVariable("q".to_string()))
        );
    }

    #[test]
    fn dangling_operator_rejected() {
        let r = ring();
        assert!(matches!(
            parse_polynomial("x1 +", &r),
            Err(ParseError::EmptyTerm(_))
        ));
        assert!(matches!(
            parse_polynomial("", &r),
            Err(ParseError::EmptyTerm(_))
        ));
    }

    #[test]
    fn stray_character_rejected() {
        let r = ring();
        assert!(matches!(
            parse_polynomial("x1 @ y1", &r),
            Err(ParseError::UnexpectedChar('@', _))
        ));
    }
}
