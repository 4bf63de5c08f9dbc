//! Scalars: polynomials in `q` with rational coefficients, written with
//! `+ - * / ^` and parentheses. Division is only by nonzero constants.

use novikov_core::exactcore::poly::fmt_rational;
use novikov_core::{Poly, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Tok {
    Num(u64),
    Q,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Open,
    Close,
}

fn lex(s: &str) -> Result<Vec<Tok>, String> {
    let mut out = Vec::new();
    let cs: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        i += 1;
        let t = match c {
            ' ' | '\t' => continue,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::Open,
            ')' => Tok::Close,
            'q' => Tok::Q,
            d if d.is_ascii_digit() => {
                let start = i - 1;
                while i < cs.len() && cs[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = cs[start..i].iter().collect();
                Tok::Num(digits.parse().map_err(|_| format!("integer `{digits}` is too large"))?)
            }
            other => return Err(format!("unexpected character `{other}`")),
        };
        out.push(t);
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<Tok> {
        self.toks.get(self.pos).copied()
    }

    fn eat(&mut self, t: Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly, String> {
        let mut acc = self.term()?;
        loop {
            if self.eat(Tok::Plus) {
                acc = &acc + &self.term()?;
            } else if self.eat(Tok::Minus) {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly, String> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(Tok::Star) {
                acc = &acc * &self.unary()?;
            } else if self.eat(Tok::Slash) {
                let d = self.unary()?;
                let c = d.as_constant().ok_or("division by a polynomial in q")?;
                if c == Rational::from_integer(0.into()) {
                    return Err("division by zero".into());
                }
                acc = acc.scale(&(Rational::from_integer(1.into()) / c));
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Poly, String> {
        if self.eat(Tok::Minus) {
            return Ok(-self.unary()?);
        }
        if self.eat(Tok::Plus) {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Poly, String> {
        let base = self.atom()?;
        if self.eat(Tok::Caret) {
            match self.peek() {
                Some(Tok::Num(e)) if e <= 64 => {
                    self.pos += 1;
                    return Ok(base.pow(e as u32));
                }
                _ => return Err("exponent must be an integer between 0 and 64".into()),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly, String> {
        match self.peek() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Poly::constant(Rational::from_integer(n.into())))
            }
            Some(Tok::Q) => {
                self.pos += 1;
                Ok(Poly::q())
            }
            Some(Tok::Open) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(Tok::Close) {
                    return Err("unbalanced parentheses".into());
                }
                Ok(e)
            }
            Some(_) => Err("expected a number, `q` or `(`".into()),
            None => Err("expression ends early".into()),
        }
    }
}

/// Parses a scalar such as `-3/2`, `q^2 - 1` or `2*(1+3*q)`.
pub fn parse_scalar(s: &str) -> Result<Poly, String> {
    let toks = lex(s).map_err(|e| format!("malformed scalar `{}`: {e}", s.trim()))?;
    if toks.is_empty() {
        return Err("empty scalar".into());
    }
    let mut p = Parser { toks, pos: 0 };
    let v = p.expr().map_err(|e| format!("malformed scalar `{}`: {e}", s.trim()))?;
    if p.pos != p.toks.len() {
        return Err(format!("malformed scalar `{}`: trailing input", s.trim()));
    }
    Ok(v)
}

/// A value of `--q`: a rational, or `sym` for the symbol itself.
pub fn parse_q(s: &str) -> Result<Poly, String> {
    if s.trim() == "sym" {
        return Ok(Poly::q());
    }
    parse_rational_arg(s).map(Poly::constant)
}

pub fn parse_rational_arg(s: &str) -> Result<Rational, String> {
    let v = parse_scalar(s).map_err(|_| format!("`{s}` is not a rational number"))?;
    v.as_constant().ok_or_else(|| format!("`{s}` is not a rational number"))
}

/// `(negative, magnitude)` of a coefficient written in front of a basis
/// vector: `""` for 1, `"3/2*"`, or `"(1 + q)*"` which never carries the sign.
pub fn coefficient(c: &Poly) -> (bool, String) {
    match c.as_constant() {
        Some(r) => {
            let neg = r < Rational::from_integer(0.into());
            let mag = if neg { -r } else { r };
            let text = if mag == Rational::from_integer(1.into()) {
                String::new()
            } else {
                format!("{}*", fmt_rational(&mag))
            };
            (neg, text)
        }
        None => (false, format!("({c})*")),
    }
}

/// Joins signed terms as `a - b + c`; `"0"` when there are none.
pub fn join_terms(terms: &[(bool, String)]) -> String {
    let mut out = String::new();
    for (i, (neg, t)) in terms.iter().enumerate() {
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(t);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use novikov_core::exactcore::rat;

    #[test]
    fn scalars() {
        assert_eq!(parse_scalar("2*(1+3*q)").unwrap(), Poly::from_ints(&[2, 6]));
        assert_eq!(parse_scalar("-3/2").unwrap(), Poly::constant(rat(-3, 2)));
        assert_eq!(parse_scalar("q^2 - 2").unwrap(), Poly::from_ints(&[-2, 0, 1]));
        assert_eq!(parse_scalar("1/2*q").unwrap(), Poly::linear(rat(0, 1), rat(1, 2)));
        assert_eq!(parse_scalar("--1").unwrap(), Poly::one());
        for bad in ["", "1/q", "(1", "2x", "1/0", "q^"] {
            assert!(parse_scalar(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn display_round_trips() {
        for p in [Poly::from_ints(&[1, -3, 0, 2]), Poly::linear(rat(-1, 2), rat(5, 3)), Poly::from_ints(&[0, 0, -1])] {
            assert_eq!(parse_scalar(&p.to_string()).unwrap(), p);
        }
    }

    #[test]
    fn q_argument() {
        assert_eq!(parse_q("sym").unwrap(), Poly::q());
        assert_eq!(parse_q("-1/2").unwrap(), Poly::constant(rat(-1, 2)));
        assert!(parse_q("q").is_err());
    }
}
