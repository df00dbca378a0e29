//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Terms live in a `BTreeMap` keyed by [`Monomial`], whose ordering is
//! graded-lexicographic, so printing is deterministic.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::expr::{parse_expr, Expr, ExprError};

pub type Rational = BigRational;

pub const MAX_VARIABLES: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error(transparent)]
    Parse(#[from] ExprError),
    #[error("unknown variable '{name}' at position {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("function calls are not allowed in polynomials (position {pos})")]
    UnexpectedCall { pos: usize },
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("variable index {index} out of range for {count} variables")]
    IndexOutOfRange { index: usize, count: usize },
    #[error("expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("at most {MAX_VARIABLES} variables are supported, got {0}")]
    TooManyVariables(usize),
    #[error("duplicate variable name '{0}'")]
    DuplicateVariable(String),
}

/// Exponent vector, one entry per declared variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All exponent vectors in `nvars` variables of total degree exactly `deg`,
/// in descending lexicographic order.
pub fn monomials_of_degree(nvars: usize, deg: u32) -> Vec<Monomial> {
    fn rec(nvars: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == nvars {
            prefix.push(left);
            out.push(Monomial(prefix.clone()));
            prefix.pop();
            return;
        }
        for a in (0..=left).rev() {
            prefix.push(a);
            rec(nvars, left - a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if deg == 0 {
            out.push(Monomial(Vec::new()));
        }
        return out;
    }
    rec(nvars, deg, &mut Vec::with_capacity(nvars), &mut out);
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero<S: AsRef<str>>(vars: &[S]) -> Self {
        Poly { vars: vars.iter().map(|v| v.as_ref().to_string()).collect(), terms: BTreeMap::new() }
    }

    pub fn constant<S: AsRef<str>>(vars: &[S], c: Rational) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(Monomial::one(vars.len()), c);
        p
    }

    pub fn var<S: AsRef<str>>(vars: &[S], i: usize) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(Monomial::var(vars.len(), i), Rational::one());
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing
    /// repeated exponents.
    pub fn from_terms<S: AsRef<str>>(vars: &[S], terms: impl IntoIterator<Item = (Vec<u32>, Rational)>) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent vector length");
            p.add_term(Monomial(e), c);
        }
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms.get(&Monomial(exps.to_vec())).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.vars);
        }
        Poly { vars: self.vars.clone(), terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::constant(&self.vars, Rational::one());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self, i: usize) -> Poly {
        let mut out = Poly::zero(&self.vars);
        for (m, c) in &self.terms {
            let a = m.0[i];
            if a == 0 {
                continue;
            }
            let mut e = m.0.clone();
            e[i] -= 1;
            out.add_term(Monomial(e), c * Rational::from_integer(BigInt::from(a)));
        }
        out
    }

    /// Partial derivatives in declared variable order.
    pub fn gradient(&self) -> Vec<Poly> {
        (0..self.nvars()).map(|i| self.derivative(i)).collect()
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Rational, PolyError> {
        if point.len() != self.nvars() {
            return Err(PolyError::DimensionMismatch { expected: self.nvars(), got: point.len() });
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &a) in point.iter().zip(&m.0) {
                if a > 0 {
                    t *= num_traits::pow(x.clone(), a as usize);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Sets the `chart` variable to 1 and drops it from the variable list.
    pub fn dehomogenize(&self, chart: usize) -> Result<Poly, PolyError> {
        if chart >= self.nvars() {
            return Err(PolyError::IndexOutOfRange { index: chart, count: self.nvars() });
        }
        if !self.is_homogeneous() {
            return Err(PolyError::NotHomogeneous);
        }
        let vars: Vec<String> =
            self.vars.iter().enumerate().filter(|(i, _)| *i != chart).map(|(_, v)| v.clone()).collect();
        let mut out = Poly::zero(&vars);
        for (m, c) in &self.terms {
            let e: Vec<u32> = m.0.iter().enumerate().filter(|(i, _)| *i != chart).map(|(_, &a)| a).collect();
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Substitutes `x_i -> sum_j rows[i][j] * x_j`.
    pub fn linear_substitute(&self, rows: &[Vec<Rational>]) -> Result<Poly, PolyError> {
        let n = self.nvars();
        if rows.len() != n {
            return Err(PolyError::DimensionMismatch { expected: n, got: rows.len() });
        }
        let mut images = Vec::with_capacity(n);
        for row in rows {
            if row.len() != n {
                return Err(PolyError::DimensionMismatch { expected: n, got: row.len() });
            }
            let mut img = Poly::zero(&self.vars);
            for (j, a) in row.iter().enumerate() {
                img.add_term(Monomial::var(n, j), a.clone());
            }
            images.push(img);
        }
        Ok(self.compose(&images))
    }

    /// Substitutes polynomial `images[i]` for variable `i`.
    fn compose(&self, images: &[Poly]) -> Poly {
        let mut out = Poly::zero(&self.vars);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(&self.vars, c.clone());
            for (img, &a) in images.iter().zip(&m.0) {
                if a > 0 {
                    t = &t * &img.pow(a);
                }
            }
            out = &out + &t;
        }
        out
    }

    /// Drops every term of total degree `>= bound`.
    pub fn truncate_below(&self, bound: u32) -> Poly {
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().filter(|(m, _)| m.degree() < bound).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    fn check_same_vars(&self, other: &Poly) {
        assert_eq!(self.vars, other.vars, "polynomials over different variable lists");
    }
}

/// Returns `f(x + p)`; the constant term of the result is `f(p)`.
pub fn translate_to_origin(f: &Poly, p: &[Rational]) -> Result<Poly, PolyError> {
    if p.len() != f.nvars() {
        return Err(PolyError::DimensionMismatch { expected: f.nvars(), got: p.len() });
    }
    let n = f.nvars();
    let images: Vec<Poly> = (0..n)
        .map(|i| {
            let mut img = Poly::var(&f.vars, i);
            img.add_term(Monomial::one(n), p[i].clone());
            img
        })
        .collect();
    Ok(f.compose(&images))
}

pub fn gradient(f: &Poly) -> Vec<Poly> {
    f.gradient()
}

pub fn dehomogenize(f: &Poly, chart: usize) -> Result<Poly, PolyError> {
    f.dehomogenize(chart)
}

fn check_variables<S: AsRef<str>>(variables: &[S]) -> Result<(), PolyError> {
    if variables.len() > MAX_VARIABLES {
        return Err(PolyError::TooManyVariables(variables.len()));
    }
    for (i, v) in variables.iter().enumerate() {
        if variables[..i].iter().any(|w| w.as_ref() == v.as_ref()) {
            return Err(PolyError::DuplicateVariable(v.as_ref().to_string()));
        }
    }
    Ok(())
}

/// Parses polynomial text over the given variables into canonical form.
pub fn parse_poly<S: AsRef<str>>(text: &str, variables: &[S]) -> Result<Poly, PolyError> {
    check_variables(variables)?;
    let expr = parse_expr(text)?;
    eval_expr(&expr, variables)
}

fn eval_expr<S: AsRef<str>>(e: &Expr, vars: &[S]) -> Result<Poly, PolyError> {
    Ok(match e {
        Expr::Num(q) => Poly::constant(vars, q.clone()),
        Expr::Ident { name, pos } => match vars.iter().position(|v| v.as_ref() == name) {
            Some(i) => Poly::var(vars, i),
            None => return Err(PolyError::UnknownVariable { name: name.clone(), pos: *pos }),
        },
        Expr::Call { pos, .. } => return Err(PolyError::UnexpectedCall { pos: *pos }),
        Expr::Neg(a) => -&eval_expr(a, vars)?,
        Expr::Add(a, b) => &eval_expr(a, vars)? + &eval_expr(b, vars)?,
        Expr::Sub(a, b) => &eval_expr(a, vars)? - &eval_expr(b, vars)?,
        Expr::Mul(a, b) => &eval_expr(a, vars)? * &eval_expr(b, vars)?,
        Expr::Pow(a, k) => eval_expr(a, vars)?.pow(*k),
    })
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        self.check_same_vars(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        self.check_same_vars(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        self.check_same_vars(rhs);
        let mut out = Poly::zero(&self.vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { vars: self.vars.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

pub(crate) fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Poly {
    /// Terms in descending graded-lex order, e.g. `x^2*z - y^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let factors: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .map(|(i, &a)| if a == 1 { self.vars[i].clone() } else { format!("{}^{}", self.vars[i], a) })
                .collect();
            if factors.is_empty() {
                write!(f, "{}", fmt_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", fmt_rational(&abs), factors.join("*"))?;
            }
        }
        Ok(())
    }
}
