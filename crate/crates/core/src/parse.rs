//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr   := ('-' | '+')? term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' natural)?
//! base   := integer ('/' integer)? | variable | '(' expr ')'
//! ```
//!
//! Whitespace is insignificant. The `integer '/' integer` form is a rational
//! literal so that printed polynomials with fractional coefficients parse
//! back unchanged.

use std::sync::Arc;

use num_bigint::{BigInt, BigUint};

use crate::error::{Error, Result};
use crate::poly::{Polynomial, Ring};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigUint),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    End,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Int(text[start..i].parse().unwrap())));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            _ => {
                // report the character, not a byte, for non-ASCII input
                let ch = text[start..].chars().next().unwrap();
                return Err(Error::Syntax { pos: start, msg: format!("unexpected character `{}`", ch) });
            }
        };
        out.push((start, tok));
        i += 1;
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    ring: &'a Arc<Ring>,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.pos(), msg: msg.into() })
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let negate = match self.peek() {
            Tok::Minus => {
                self.bump();
                true
            }
            Tok::Plus => {
                self.bump();
                false
            }
            _ => false,
        };
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.base()?;
        if *self.peek() == Tok::Caret {
            self.bump();
            let pos = self.pos();
            match self.bump() {
                Tok::Int(k) => base.pow(&k).map_err(|e| match e {
                    Error::InvalidArgument(msg) => Error::Syntax { pos, msg },
                    e => e,
                }),
                _ => Err(Error::Syntax { pos, msg: "expected a natural number after `^`".into() }),
            }
        } else {
            Ok(base)
        }
    }

    fn base(&mut self) -> Result<Polynomial> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                let num = BigInt::from(n);
                if *self.peek() == Tok::Slash {
                    self.bump();
                    let Tok::Int(d) = self.peek().clone() else {
                        return self.error("expected an integer denominator after `/`");
                    };
                    self.bump();
                    let c = self.ring.field.from_fraction(&num, &BigInt::from(d))?;
                    Ok(Polynomial::constant(self.ring, c))
                } else {
                    Ok(Polynomial::constant(self.ring, self.ring.field.from_bigint(&num)))
                }
            }
            Tok::Ident(name) => {
                self.bump();
                let i = self.ring.var_index(&name).ok_or(Error::UnknownVariable(name))?;
                Ok(Polynomial::var(self.ring, i))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return self.error("expected `)`");
                }
                self.bump();
                Ok(inner)
            }
            Tok::End => self.error("unexpected end of input"),
            t => self.error(format!("unexpected token {:?}", t)),
        }
    }
}

/// Parse `text` as a polynomial in `ring`.
pub fn parse_polynomial(text: &str, ring: &Arc<Ring>) -> Result<Polynomial> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, at: 0, ring };
    let f = p.expr()?;
    if *p.peek() != Tok::End {
        return p.error("trailing input");
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Coeff, CoefficientField};
    use crate::monomial::Monomial;
    use crate::ordering::TermOrdering;
    use proptest::prelude::*;

    fn qq() -> Arc<Ring> {
        Ring::new(["x", "y"], CoefficientField::Rationals)
    }

    #[test]
    fn running_example_generator() {
        let r = qq();
        let f = parse_polynomial("y^4 + x^3 - x^2 + x", &r).unwrap();
        assert_eq!(f.len(), 4);
        let q = CoefficientField::Rationals;
        let expect = [([0, 4], 1), ([3, 0], 1), ([2, 0], -1), ([1, 0], 1)];
        for (e, c) in expect {
            assert_eq!(f.coeff(&Monomial::from_exponents(&e)), Some(&q.from_i64(c)));
        }
    }

    #[test]
    fn cancellation_and_products() {
        let r = qq();
        assert!(parse_polynomial("x - x", &r).unwrap().is_zero());
        let f = parse_polynomial("(x + y)*(x - y)", &r).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f, parse_polynomial("x^2-y^2", &r).unwrap());
        assert_eq!(parse_polynomial("-(x+1)^2", &r).unwrap(), parse_polynomial("-x^2 - 2*x - 1", &r).unwrap());
    }

    #[test]
    fn errors_carry_positions() {
        let r = qq();
        assert_eq!(parse_polynomial("x + z", &r), Err(Error::UnknownVariable("z".into())));
        match parse_polynomial("x + * y", &r) {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{:?}", other),
        }
        match parse_polynomial("(x + y", &r) {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 6),
            other => panic!("{:?}", other),
        }
        assert!(matches!(parse_polynomial("x^y", &r), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse_polynomial("x y", &r), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse_polynomial("", &r), Err(Error::Syntax { pos: 0, .. })));
        assert!(matches!(parse_polynomial("x ? 2", &r), Err(Error::Syntax { pos: 2, .. })));
    }

    #[test]
    fn coefficient_not_in_field() {
        let r = Ring::new(["x"], CoefficientField::prime(5).unwrap());
        assert!(matches!(parse_polynomial("1/5*x", &r), Err(Error::InvalidCoefficient(_))));
        assert_eq!(
            parse_polynomial("1/2*x", &r).unwrap(),
            Polynomial::term(&r, Monomial::var(1, 0), Coeff::Modular(3))
        );
        assert!(matches!(parse_polynomial("1/0", &qq()), Err(Error::InvalidCoefficient(_))));
    }

    fn arb_poly_text() -> impl Strategy<Value = String> {
        let term = (-20i64..20, 1i64..6, 0u32..5, 0u32..5)
            .prop_map(|(n, d, a, b)| format!("({}/{})*x^{}*y^{}", n, d, a, b));
        prop::collection::vec(term, 0..6).prop_map(|ts| if ts.is_empty() { "0".into() } else { ts.join(" + ") })
    }

    proptest! {
        #[test]
        fn format_then_parse_is_identity(text in arb_poly_text(), prime in prop::bool::ANY) {
            let field = if prime { CoefficientField::prime(11863279).unwrap() } else { CoefficientField::Rationals };
            let r = Ring::new(["x", "y"], field);
            let f = parse_polynomial(&text, &r).unwrap();
            for ord in [TermOrdering::lex(2), TermOrdering::degrevlex(2)] {
                let printed = f.format_with(&ord);
                let g = parse_polynomial(&printed, &r).unwrap();
                prop_assert_eq!(&g, &f);
                prop_assert_eq!(g.format_with(&ord), printed);
            }
        }
    }
}
