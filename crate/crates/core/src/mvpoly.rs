//! Multivariate polynomials with exact rational coefficients over the fixed
//! variable alphabet {λ, x, y, X, Y, q}.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num::{One, Zero};

use crate::rational::{format_rational, parse_rational, Rational};
use crate::Error;

/// The fixed variable alphabet, in canonical order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Var {
    Lambda,
    X,
    Y,
    BigX,
    BigY,
    Q,
}

pub const VARS: [Var; 6] = [Var::Lambda, Var::X, Var::Y, Var::BigX, Var::BigY, Var::Q];

impl Var {
    pub fn name(&self) -> &'static str {
        match self {
            Var::Lambda => "λ",
            Var::X => "x",
            Var::Y => "y",
            Var::BigX => "X",
            Var::BigY => "Y",
            Var::Q => "q",
        }
    }

    pub fn index(&self) -> usize {
        match self {
            Var::Lambda => 0,
            Var::X => 1,
            Var::Y => 2,
            Var::BigX => 3,
            Var::BigY => 4,
            Var::Q => 5,
        }
    }

    pub fn from_name(name: &str) -> Option<Var> {
        match name {
            "λ" | "lambda" => Some(Var::Lambda),
            "x" => Some(Var::X),
            "y" => Some(Var::Y),
            "X" => Some(Var::BigX),
            "Y" => Some(Var::BigY),
            "q" => Some(Var::Q),
            _ => None,
        }
    }
}

/// Exponent vector over the fixed alphabet.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(pub [u16; 6]);

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: Var, exp: u16) -> Self {
        let mut m = Monomial::default();
        m.0[v.index()] = exp;
        m
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for i in 0..6 {
            m.0[i] += other.0[i];
        }
        m
    }

    pub fn exp(&self, v: Var) -> u16 {
        self.0[v.index()]
    }
}

// Canonical term order: total degree first, then lexicographic on the
// exponent vector in alphabet order.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.total_degree(), self.0).cmp(&(other.total_degree(), other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial as a canonical map from monomials to nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MVPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MVPoly {
    pub fn zero() -> Self {
        MVPoly::default()
    }

    pub fn one() -> Self {
        MVPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        MVPoly { terms }
    }

    pub fn var(v: Var) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, exp: u16) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(v, exp), Rational::one());
        MVPoly { terms }
    }

    pub fn term(coeff: Rational, mono: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(mono, coeff);
        }
        MVPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, mono: &Monomial) -> Rational {
        self.terms.get(mono).cloned().unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, mono: Monomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(mono).or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&mono);
        }
    }

    pub fn scale(&self, c: &Rational) -> MVPoly {
        if c.is_zero() {
            return MVPoly::zero();
        }
        MVPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (*m, v.clone() * c))
                .collect(),
        }
    }

    pub fn pow(&self, mut exp: u32) -> MVPoly {
        let mut base = self.clone();
        let mut acc = MVPoly::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact substitution of bound variables; unbound variables stay free.
    pub fn substitute(&self, bindings: &BTreeMap<Var, MVPoly>) -> MVPoly {
        let mut out = MVPoly::zero();
        for (mono, coeff) in &self.terms {
            let mut term = MVPoly::constant(coeff.clone());
            for v in VARS {
                let e = mono.exp(v);
                if e == 0 {
                    continue;
                }
                match bindings.get(&v) {
                    Some(rep) => term = &term * &rep.pow(e as u32),
                    None => term = &term * &MVPoly::var_pow(v, e),
                }
            }
            out = &out + &term;
        }
        out
    }

    pub fn variables(&self) -> Vec<Var> {
        VARS.into_iter()
            .filter(|v| self.terms.keys().any(|m| m.exp(*v) > 0))
            .collect()
    }

    pub fn degree_in(&self, v: Var) -> u16 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    /// Coefficients c_0..c_k of a polynomial univariate in `v`.
    pub fn univariate_coeffs(&self, v: Var) -> Result<Vec<Rational>, Error> {
        if self.variables().iter().any(|w| *w != v) {
            return Err(Error::NotUnivariate(v.name()));
        }
        let deg = self.degree_in(v) as usize;
        let mut coeffs = vec![Rational::zero(); deg + 1];
        for (mono, c) in &self.terms {
            coeffs[mono.exp(v) as usize] = c.clone();
        }
        Ok(coeffs)
    }

    /// JSON form: list of {"coeff": "p/q", "monomial": {"λ": 4}}.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .rev()
            .map(|(mono, coeff)| {
                let mut m = serde_json::Map::new();
                for v in VARS {
                    if mono.exp(v) > 0 {
                        m.insert(v.name().to_string(), mono.exp(v).into());
                    }
                }
                serde_json::json!({
                    "coeff": format_rational(coeff),
                    "monomial": serde_json::Value::Object(m),
                })
            })
            .collect();
        serde_json::Value::Array(terms)
    }

    pub fn from_json(value: &serde_json::Value) -> Result<MVPoly, Error> {
        let arr = value
            .as_array()
            .ok_or_else(|| Error::Parse("polynomial JSON must be a list".into()))?;
        let mut out = MVPoly::zero();
        for item in arr {
            let coeff = parse_rational(
                item.get("coeff")
                    .and_then(|c| c.as_str())
                    .ok_or_else(|| Error::Parse("term missing \"coeff\"".into()))?,
            )?;
            let mut mono = Monomial::one();
            if let Some(obj) = item.get("monomial").and_then(|m| m.as_object()) {
                for (name, exp) in obj {
                    let v = Var::from_name(name)
                        .ok_or_else(|| Error::Parse(format!("unknown variable `{name}`")))?;
                    let e = exp
                        .as_u64()
                        .ok_or_else(|| Error::Parse("exponent must be a non-negative int".into()))?;
                    mono.0[v.index()] = e as u16;
                }
            }
            out.add_term(mono, coeff);
        }
        Ok(out)
    }
}

impl Add for &MVPoly {
    type Output = MVPoly;
    fn add(self, rhs: &MVPoly) -> MVPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &MVPoly {
    type Output = MVPoly;
    fn sub(self, rhs: &MVPoly) -> MVPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Mul for &MVPoly {
    type Output = MVPoly;
    fn mul(self, rhs: &MVPoly) -> MVPoly {
        let mut out = MVPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb);
            }
        }
        out
    }
}

impl Neg for &MVPoly {
    type Output = MVPoly;
    fn neg(self) -> MVPoly {
        MVPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

fn format_monomial(mono: &Monomial) -> String {
    let mut parts = Vec::new();
    for v in VARS {
        match mono.exp(v) {
            0 => {}
            1 => parts.push(v.name().to_string()),
            e => parts.push(format!("{}^{}", v.name(), e)),
        }
    }
    parts.join("*")
}

impl fmt::Display for MVPoly {
    /// Canonical text form: terms by total degree (descending) then
    /// lexicographic variable order, e.g. "λ^4 - 3*λ^3 + 3*λ^2".
    fn fmt(&self, fmt: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(fmt, "0");
        }
        for (i, (mono, coeff)) in self.terms.iter().rev().enumerate() {
            let neg = crate::rational::is_negative(coeff);
            let abs = if neg { -coeff.clone() } else { coeff.clone() };
            if i == 0 {
                if neg {
                    write!(fmt, "-")?;
                }
            } else if neg {
                write!(fmt, " - ")?;
            } else {
                write!(fmt, " + ")?;
            }
            let mono_str = format_monomial(mono);
            if mono_str.is_empty() {
                write!(fmt, "{}", format_rational(&abs))?;
            } else if abs.is_one() {
                write!(fmt, "{mono_str}")?;
            } else {
                write!(fmt, "{}*{}", format_rational(&abs), mono_str)?;
            }
        }
        Ok(())
    }
}

impl FromStr for MVPoly {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self, Error> {
        let mut parser = Parser {
            chars: input.chars().collect(),
            pos: 0,
        };
        let poly = parser.parse_poly()?;
        parser.skip_ws();
        if parser.pos != parser.chars.len() {
            return Err(Error::Parse(format!(
                "trailing input at position {}",
                parser.pos
            )));
        }
        Ok(poly)
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn parse_poly(&mut self) -> Result<MVPoly, Error> {
        let mut out = MVPoly::zero();
        self.skip_ws();
        let mut sign = 1i64;
        if self.peek() == Some('-') {
            sign = -1;
            self.pos += 1;
        } else if self.peek() == Some('+') {
            self.pos += 1;
        }
        loop {
            let term = self.parse_term()?;
            out = if sign < 0 { &out - &term } else { &out + &term };
            self.skip_ws();
            match self.peek() {
                Some('+') => {
                    sign = 1;
                    self.pos += 1;
                }
                Some('-') => {
                    sign = -1;
                    self.pos += 1;
                }
                _ => break,
            }
        }
        Ok(out)
    }

    fn parse_term(&mut self) -> Result<MVPoly, Error> {
        self.skip_ws();
        let mut coeff = Rational::one();
        let mut mono = Monomial::one();
        let mut saw_factor = false;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    coeff *= self.parse_rational_token()?;
                    saw_factor = true;
                }
                Some(c) if c.is_alphabetic() || c == 'λ' => {
                    let (v, e) = self.parse_var_pow()?;
                    mono.0[v.index()] += e;
                    saw_factor = true;
                }
                _ => break,
            }
            self.skip_ws();
            if self.peek() == Some('*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        if !saw_factor {
            return Err(Error::Parse(format!("empty term at position {}", self.pos)));
        }
        Ok(MVPoly::term(coeff, mono))
    }

    fn parse_rational_token(&mut self) -> Result<Rational, Error> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        // optional "/den"
        if self.peek() == Some('/') {
            self.pos += 1;
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
        }
        let tok: String = self.chars[start..self.pos].iter().collect();
        parse_rational(&tok)
    }

    fn parse_var_pow(&mut self) -> Result<(Var, u16), Error> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_alphabetic() || c == 'λ') {
            self.pos += 1;
        }
        let name: String = self.chars[start..self.pos].iter().collect();
        let v = Var::from_name(&name)
            .ok_or_else(|| Error::Parse(format!("unknown variable `{name}`")))?;
        let mut exp = 1u16;
        if self.peek() == Some('^') {
            self.pos += 1;
            let estart = self.pos;
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            let etok: String = self.chars[estart..self.pos].iter().collect();
            exp = etok
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent `{etok}`")))?;
        }
        Ok((v, exp))
    }
}
