//! Parsing of rational expressions in `z`.
//!
//! Grammar: sums and differences of products and quotients of powers with
//! integer exponents; atoms are decimal numbers, `z`, `i`, `pi`, `exp(c)` for a
//! constant `c`, and parenthesised expressions. Juxtaposition multiplies, so
//! `(1+z)/2`, `0.5z^2` and `2i z` are all accepted.

use crate::{Error, Poly, RationalFn, Result, C64};

/// Parse an expression such as `(1+z)/2` into a rational function.
pub fn parse_rational(src: &str) -> Result<RationalFn> {
    let (num, den) = Parser::new(src).parse()?;
    RationalFn::new(num, den)
}

/// Parse an expression that must be a polynomial in `z`.
pub fn parse_poly(src: &str) -> Result<Poly> {
    let (num, den) = Parser::new(src).parse()?;
    if den.degree() > 0 {
        return Err(Error::Parse { pos: 0, msg: "expected a polynomial".into() });
    }
    Ok(num.scale(den.coeff(0).inv()))
}

/// Parse a constant complex number such as `0.5-0.5i` or `exp(i pi/3)`.
pub fn parse_complex(src: &str) -> Result<C64> {
    let p = parse_poly(src)?;
    if p.degree() > 0 {
        return Err(Error::Parse { pos: 0, msg: "expected a constant".into() });
    }
    Ok(p.coeff(0))
}

/// Parse a `;` or `,` separated list of complex constants.
pub fn parse_complex_list(src: &str) -> Result<Vec<C64>> {
    src.split([';', ','])
        .filter(|s| !s.trim().is_empty())
        .map(parse_complex)
        .collect()
}

type Frac = (Poly, Poly);

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        let chars = src
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .map(|(i, c)| match c {
                '\u{2212}' => (i, '-'),
                '\u{00b7}' => (i, '*'),
                _ => (i, c),
            })
            .collect();
        Self { chars, pos: 0, src }
    }

    fn parse(mut self) -> Result<Frac> {
        if self.chars.is_empty() {
            return Err(self.error("empty expression"));
        }
        let v = self.expr()?;
        if self.pos < self.chars.len() {
            return Err(self.error("unexpected character"));
        }
        Ok(v)
    }

    fn error(&self, msg: &str) -> Error {
        let pos = self.chars.get(self.pos).map(|c| c.0).unwrap_or(self.src.len());
        Error::Parse { pos, msg: msg.into() }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|c| c.1)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Frac> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = add(&acc, &self.term()?);
            } else if self.eat('-') {
                let t = self.term()?;
                acc = add(&acc, &(-&t.0, t.1));
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Frac> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = mul(&acc, &self.unary()?);
            } else if self.eat('/') {
                let d = self.unary()?;
                if d.0.is_zero() {
                    return Err(self.error("division by zero"));
                }
                acc = mul(&acc, &(d.1, d.0));
            } else if self.starts_atom() {
                acc = mul(&acc, &self.power()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek(), Some(c) if c.is_ascii_digit() || c == '.' || c == '(' || c.is_ascii_alphabetic())
    }

    fn unary(&mut self) -> Result<Frac> {
        if self.eat('-') {
            let v = self.unary()?;
            return Ok((-&v.0, v.1));
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Frac> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let negative = self.eat('-');
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer exponent"));
        }
        let digits: String = self.chars[start..self.pos].iter().map(|c| c.1).collect();
        let k: u32 = digits.parse().map_err(|_| self.error("exponent too large"))?;
        let mut out = (Poly::one(), Poly::one());
        for _ in 0..k {
            out = mul(&out, &base);
        }
        if negative {
            if out.0.is_zero() {
                return Err(self.error("division by zero"));
            }
            out = (out.1, out.0);
        }
        Ok(out)
    }

    fn atom(&mut self) -> Result<Frac> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() || c == '.' => self.number(),
            Some(c) if c.is_ascii_alphabetic() => self.word(),
            _ => Err(self.error("expected a number, 'z' or '('")),
        }
    }

    fn number(&mut self) -> Result<Frac> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit() || c == '.') {
            self.pos += 1;
        }
        if matches!(self.peek(), Some('e') | Some('E'))
            && matches!(self.chars.get(self.pos + 1).map(|c| c.1), Some(c) if c.is_ascii_digit() || c == '-' || c == '+')
        {
            self.pos += 2;
            while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                self.pos += 1;
            }
        }
        let text: String = self.chars[start..self.pos].iter().map(|c| c.1).collect();
        let v: f64 = text.parse().map_err(|_| Error::Parse {
            pos: self.chars[start].0,
            msg: format!("bad number '{text}'"),
        })?;
        Ok(constant(C64::new(v, 0.0)))
    }

    fn word(&mut self) -> Result<Frac> {
        let start = self.pos;
        // single letters multiply implicitly, so only known names are read greedily
        let rest: String = self.chars[start..].iter().map(|c| c.1).collect();
        if rest.starts_with("pi") {
            self.pos += 2;
            return Ok(constant(C64::new(std::f64::consts::PI, 0.0)));
        }
        if rest.starts_with("exp(") {
            self.pos += 3;
            let arg = self.atom()?;
            if arg.0.degree() > 0 || arg.1.degree() > 0 {
                self.pos = start;
                return Err(self.error("exp takes a constant argument"));
            }
            return Ok(constant((arg.0.coeff(0) / arg.1.coeff(0)).exp()));
        }
        self.pos += 1;
        match rest.chars().next() {
            Some('z') => Ok((Poly::z(), Poly::one())),
            Some('i') => Ok(constant(C64::new(0.0, 1.0))),
            _ => {
                self.pos = start;
                Err(self.error("unknown symbol"))
            }
        }
    }
}

fn constant(c: C64) -> Frac {
    (Poly::constant(c), Poly::one())
}

fn add(x: &Frac, y: &Frac) -> Frac {
    if x.1 == y.1 {
        return (&x.0 + &y.0, x.1.clone());
    }
    (&(&x.0 * &y.1) + &(&y.0 * &x.1), &x.1 * &y.1)
}

fn mul(x: &Frac, y: &Frac) -> Frac {
    (&x.0 * &y.0, &x.1 * &y.1)
}
