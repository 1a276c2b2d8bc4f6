//! Laurent polynomials over named variables, with a strict little grammar:
//!
//! ```text
//! expression  := ['-'] term (('+'|'-') term)*
//! term        := factor ('*' factor)*
//! factor      := variable ['^' integer] | coefficient
//! coefficient := integer ['/' positive-integer]
//! variable    := [A-Za-z][A-Za-z0-9_]*
//! ```
//!
//! Whitespace is insignificant. Integers are signed only in exponents and in
//! the leading position of the expression; every other sign comes from the
//! `+`/`-` separators. Like terms combine; terms cancelling to zero drop out,
//! and a polynomial with no terms left is rejected (it has no Newton
//! polytope). Printing is canonical, so parse-print-parse is a fixed point.

use crate::error::{Error, Result};
use crate::lattice::{PointSet, Polytope};
use num::{BigInt, BigRational, One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPolynomial {
    variables: Vec<String>,
    terms: BTreeMap<Vec<i64>, BigRational>,
}

impl LaurentPolynomial {
    pub fn parse(text: &str, variables: &[&str]) -> Result<Self> {
        let vars: Vec<String> = variables.iter().map(|s| s.to_string()).collect();
        Parser::new(text, &vars)?.parse()
    }

    /// Build from an explicit term map; zero coefficients are dropped.
    pub fn from_terms(
        variables: Vec<String>,
        terms: BTreeMap<Vec<i64>, BigRational>,
    ) -> Result<Self> {
        let n = variables.len();
        let terms: BTreeMap<Vec<i64>, BigRational> = terms
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        if terms.is_empty() {
            return Err(Error::ZeroPolynomial);
        }
        for exp in terms.keys() {
            if exp.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: exp.len(),
                });
            }
        }
        Ok(LaurentPolynomial { variables, terms })
    }

    /// Polynomial with unit coefficients on the given support.
    pub fn from_support(support: &PointSet, variables: &[&str]) -> Result<Self> {
        if variables.len() != support.dim() {
            return Err(Error::DimensionMismatch {
                expected: support.dim(),
                got: variables.len(),
            });
        }
        let mut terms = BTreeMap::new();
        for p in support.points() {
            let exp: Vec<i64> = p
                .iter()
                .map(|c| i64::try_from(c).expect("desk-scale exponent"))
                .collect();
            terms.insert(exp, BigRational::one());
        }
        LaurentPolynomial::from_terms(variables.iter().map(|s| s.to_string()).collect(), terms)
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i64>, BigRational> {
        &self.terms
    }

    /// The support as a lattice point set in exponent space.
    pub fn support(&self) -> PointSet {
        let pts = self
            .terms
            .keys()
            .map(|e| e.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        PointSet::new(self.variables.len(), pts).expect("nonempty support")
    }

    /// Newton polytope: the convex hull of the support.
    pub fn newton_polytope(&self) -> Polytope {
        self.support().hull()
    }
}

pub fn newton_polytope(f: &LaurentPolynomial) -> Polytope {
    f.newton_polytope()
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one = BigRational::one();
        for (i, (exp, coeff)) in self.terms.iter().enumerate() {
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
            let abs = coeff.abs();
            let mut parts: Vec<String> = Vec::new();
            if abs != one || exp.iter().all(|&e| e == 0) {
                parts.push(abs.to_string());
            }
            for (v, &e) in self.variables.iter().zip(exp) {
                match e {
                    0 => {}
                    1 => parts.push(v.clone()),
                    _ => parts.push(format!("{v}^{e}")),
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
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
}

struct Parser {
    tokens: Vec<(Tok, usize, usize)>, // token, line, column (1-based)
    pos: usize,
    vars: Vec<String>,
    end: (usize, usize),
}

impl Parser {
    fn new(text: &str, vars: &[String]) -> Result<Self> {
        let mut tokens = Vec::new();
        let mut line = 1usize;
        let mut col = 1usize;
        let mut chars = text.chars().peekable();
        while let Some(&c) = chars.peek() {
            let (tl, tc) = (line, col);
            match c {
                '\n' => {
                    chars.next();
                    line += 1;
                    col = 1;
                }
                _ if c.is_whitespace() => {
                    chars.next();
                    col += 1;
                }
                '+' | '-' | '*' | '^' | '/' => {
                    chars.next();
                    col += 1;
                    let t = match c {
                        '+' => Tok::Plus,
                        '-' => Tok::Minus,
                        '*' => Tok::Star,
                        '^' => Tok::Caret,
                        _ => Tok::Slash,
                    };
                    tokens.push((t, tl, tc));
                }
                _ if c.is_ascii_digit() => {
                    let mut s = String::new();
                    while let Some(&d) = chars.peek() {
                        if d.is_ascii_digit() {
                            s.push(d);
                            chars.next();
                            col += 1;
                        } else {
                            break;
                        }
                    }
                    let value = s.parse::<BigInt>().expect("digits only");
                    tokens.push((Tok::Int(value), tl, tc));
                }
                _ if c.is_ascii_alphabetic() => {
                    let mut s = String::new();
                    while let Some(&d) = chars.peek() {
                        if d.is_ascii_alphanumeric() || d == '_' {
                            s.push(d);
                            chars.next();
                            col += 1;
                        } else {
                            break;
                        }
                    }
                    tokens.push((Tok::Ident(s), tl, tc));
                }
                other => {
                    return Err(Error::Parse {
                        line,
                        column: col,
                        message: format!("unexpected character `{other}`"),
                    });
                }
            }
        }
        Ok(Parser {
            tokens,
            pos: 0,
            vars: vars.to_vec(),
            end: (line, col),
        })
    }

    fn here(&self) -> (usize, usize) {
        self.tokens
            .get(self.pos)
            .map(|&(_, l, c)| (l, c))
            .unwrap_or(self.end)
    }

    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|(t, _, _)| t)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.tokens.get(self.pos).map(|(t, _, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn fail(&self, message: impl Into<String>) -> Error {
        let (line, column) = self.here();
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    fn parse(mut self) -> Result<LaurentPolynomial> {
        let n = self.vars.len();
        let mut terms: BTreeMap<Vec<i64>, BigRational> = BTreeMap::new();
        let mut sign = BigRational::one();
        if self.peek() == Some(&Tok::Minus) {
            self.bump();
            sign = -sign;
        }
        loop {
            let (exp, coeff) = self.term(n)?;
            let entry = terms.entry(exp).or_insert_with(BigRational::zero);
            *entry += &sign * coeff;
            match self.bump() {
                None => break,
                Some(Tok::Plus) => sign = BigRational::one(),
                Some(Tok::Minus) => sign = -BigRational::one(),
                Some(_) => {
                    self.pos -= 1;
                    return Err(self.fail("expected `+`, `-`, or end of input"));
                }
            }
        }
        terms.retain(|_, c| !c.is_zero());
        if terms.is_empty() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(LaurentPolynomial {
            variables: self.vars.clone(),
            terms,
        })
    }

    fn term(&mut self, n: usize) -> Result<(Vec<i64>, BigRational)> {
        let mut exp = vec![0i64; n];
        let mut coeff = BigRational::one();
        loop {
            self.factor(&mut exp, &mut coeff)?;
            if self.peek() == Some(&Tok::Star) {
                self.bump();
            } else {
                return Ok((exp, coeff));
            }
        }
    }

    fn factor(&mut self, exp: &mut [i64], coeff: &mut BigRational) -> Result<()> {
        let (line, column) = self.here();
        match self.bump() {
            Some(Tok::Ident(name)) => {
                let Some(ix) = self.vars.iter().position(|v| *v == name) else {
                    return Err(Error::UnknownVariable { name, line, column });
                };
                let mut power = 1i64;
                if self.peek() == Some(&Tok::Caret) {
                    self.bump();
                    power = self.exponent()?;
                }
                exp[ix] += power;
                Ok(())
            }
            Some(Tok::Int(numer)) => {
                let mut value = BigRational::from_integer(numer);
                if self.peek() == Some(&Tok::Slash) {
                    self.bump();
                    let (l, c) = self.here();
                    match self.bump() {
                        Some(Tok::Int(denom)) if denom.is_positive() => {
                            value /= BigRational::from_integer(denom);
                        }
                        _ => {
                            return Err(Error::Parse {
                                line: l,
                                column: c,
                                message: "expected a positive integer denominator".into(),
                            });
                        }
                    }
                }
                *coeff *= value;
                Ok(())
            }
            _ => Err(Error::Parse {
                line,
                column,
                message: "expected a variable or a coefficient".into(),
            }),
        }
    }

    fn exponent(&mut self) -> Result<i64> {
        let negative = if self.peek() == Some(&Tok::Minus) {
            self.bump();
            true
        } else {
            false
        };
        let (line, column) = self.here();
        match self.bump() {
            Some(Tok::Int(v)) => {
                let v = i64::try_from(&v).map_err(|_| Error::Parse {
                    line,
                    column,
                    message: "exponent out of range".into(),
                })?;
                Ok(if negative { -v } else { v })
            }
            _ => Err(Error::Parse {
                line,
                column,
                message: "expected an integer exponent".into(),
            }),
        }
    }
}
