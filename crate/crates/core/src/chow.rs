//! Chow rings of projective space and of projective space blown up at points.
//!
//! A class on `BlPt(P(n), m)` is stored in the basis `h^k` (`0 <= k <= n`)
//! together with `e_i^k` (`1 <= k <= n`) for every exceptional divisor, under
//! the relations `h*e_i = 0` and `e_i*e_j = 0` for `i != j`. Degrees are
//! `deg h^n = 1` and `deg e_i^n = (-1)^(n-1)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::expr::{parse_expr, Expr, ExprError};
use crate::poly::{fmt_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChowError {
    #[error("ambient mismatch: {0} vs {1}")]
    AmbientMismatch(Ambient, Ambient),
    #[error("class is not a unit: constant term is {0}")]
    NotUnit(String),
    #[error("expected a blown-up ambient, got {0}")]
    NotBlowup(Ambient),
    #[error("class is not a divisor (nonzero components outside codimension 1)")]
    NotDivisor,
    #[error("{what} has non-integer coefficients: {class}")]
    NonIntegral { what: String, class: String },
    #[error("invalid ambient: {0}")]
    InvalidAmbient(String),
    #[error(transparent)]
    Parse(#[from] ExprError),
    #[error("unknown generator '{name}' at position {pos}")]
    UnknownGenerator { name: String, pos: usize },
    #[error("unknown function '{name}' at position {pos}")]
    UnknownFunction { name: String, pos: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ambient {
    ProjectiveSpace { n: usize },
    BlowupAtPoints { n: usize, m: usize },
}

impl Ambient {
    pub fn projective(n: usize) -> Result<Self, ChowError> {
        if n == 0 {
            return Err(ChowError::InvalidAmbient("dimension must be at least 1".into()));
        }
        Ok(Ambient::ProjectiveSpace { n })
    }

    pub fn blowup(n: usize, m: usize) -> Result<Self, ChowError> {
        if n == 0 {
            return Err(ChowError::InvalidAmbient("dimension must be at least 1".into()));
        }
        Ok(Ambient::BlowupAtPoints { n, m })
    }

    pub fn dim(&self) -> usize {
        match *self {
            Ambient::ProjectiveSpace { n } | Ambient::BlowupAtPoints { n, .. } => n,
        }
    }

    /// Number of exceptional divisors.
    pub fn points(&self) -> usize {
        match *self {
            Ambient::ProjectiveSpace { .. } => 0,
            Ambient::BlowupAtPoints { m, .. } => m,
        }
    }

    pub fn base(&self) -> Ambient {
        Ambient::ProjectiveSpace { n: self.dim() }
    }

    /// Topological Euler characteristic: `n + 1` for `P(n)`, plus `n - 1`
    /// per blown-up point.
    pub fn euler_characteristic(&self) -> i64 {
        let n = self.dim() as i64;
        n + 1 + self.points() as i64 * (n - 1)
    }
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Ambient::ProjectiveSpace { n } => write!(f, "P({n})"),
            Ambient::BlowupAtPoints { n, m } => write!(f, "BlPt(P({n}), {m})"),
        }
    }
}

impl Serialize for Ambient {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn parse_projective(s: &str) -> Option<usize> {
    let s = s.trim();
    let rest = s.strip_prefix('P')?.trim();
    let rest = rest.strip_prefix('^').unwrap_or(rest).trim();
    let digits = match rest.strip_prefix('(') {
        Some(inner) => inner.strip_suffix(')')?.trim(),
        None => rest,
    };
    digits.parse().ok()
}

impl FromStr for Ambient {
    type Err = ChowError;

    /// Accepts `P2`, `P(2)`, `P^2`, `BlPt(P2,1)` and `BlPt(P(2), 1)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ChowError::InvalidAmbient(s.to_string());
        let t = s.trim();
        if let Some(inner) = t.strip_prefix("BlPt") {
            let inner = inner.trim().strip_prefix('(').and_then(|x| x.strip_suffix(')')).ok_or_else(bad)?;
            let (base, count) = inner.rsplit_once(',').ok_or_else(bad)?;
            let n = parse_projective(base).ok_or_else(bad)?;
            let m = count.trim().parse().map_err(|_| bad())?;
            return Ambient::blowup(n, m);
        }
        Ambient::projective(parse_projective(t).ok_or_else(bad)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChowClass {
    ambient: Ambient,
    /// Coefficient of `h^k`, `k = 0..=n`.
    h: Vec<Rational>,
    /// `e[i][k - 1]` is the coefficient of `e_i^k`, `k = 1..=n`.
    e: Vec<Vec<Rational>>,
}

fn int(k: i64) -> Rational {
    Rational::from_integer(BigInt::from(k))
}

fn sign(k: usize) -> Rational {
    if k.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

impl ChowClass {
    pub fn zero(ambient: Ambient) -> Self {
        let n = ambient.dim();
        ChowClass { ambient, h: vec![Rational::zero(); n + 1], e: vec![vec![Rational::zero(); n]; ambient.points()] }
    }

    pub fn one(ambient: Ambient) -> Self {
        Self::scalar(ambient, Rational::one())
    }

    pub fn scalar(ambient: Ambient, c: Rational) -> Self {
        let mut z = Self::zero(ambient);
        z.h[0] = c;
        z
    }

    /// `h^k`; zero when `k > n`.
    pub fn h_pow(ambient: Ambient, k: usize) -> Self {
        let mut z = Self::zero(ambient);
        if k <= ambient.dim() {
            z.h[k] = Rational::one();
        }
        z
    }

    /// `e_i^k` for the exceptional divisor `i` (0-based); `k = 0` gives 1.
    pub fn e_pow(ambient: Ambient, i: usize, k: usize) -> Result<Self, ChowError> {
        if i >= ambient.points() {
            return Err(ChowError::NotBlowup(ambient));
        }
        if k == 0 {
            return Ok(Self::one(ambient));
        }
        let mut z = Self::zero(ambient);
        if k <= ambient.dim() {
            z.e[i][k - 1] = Rational::one();
        }
        Ok(z)
    }

    /// `sum_k coeffs[k] * h^k`; entries beyond codimension `n` are dropped.
    pub fn from_h_coeffs(ambient: Ambient, coeffs: &[i64]) -> Self {
        let mut z = Self::zero(ambient);
        for (k, &c) in coeffs.iter().enumerate().take(ambient.dim() + 1) {
            z.h[k] = int(c);
        }
        z
    }

    /// `d * h`.
    pub fn hyperplane_multiple(ambient: Ambient, d: i64) -> Self {
        Self::h_pow(ambient, 1).scale(&int(d))
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn h_coeffs(&self) -> &[Rational] {
        &self.h
    }

    pub fn e_coeffs(&self) -> &[Vec<Rational>] {
        &self.e
    }

    pub fn h_coeff(&self, k: usize) -> Rational {
        self.h.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficient of `e_i^k`.
    pub fn e_coeff(&self, i: usize, k: usize) -> Rational {
        if k == 0 {
            return Rational::zero();
        }
        self.e.get(i).and_then(|v| v.get(k - 1)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.h.iter().chain(self.e.iter().flatten()).all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.h.iter().chain(self.e.iter().flatten()).all(|c| c.is_integer())
    }

    /// Fails with `NonIntegral` unless every coefficient is an integer.
    pub fn ensure_integral(&self, what: &str) -> Result<(), ChowError> {
        if self.is_integral() {
            Ok(())
        } else {
            Err(ChowError::NonIntegral { what: what.to_string(), class: self.to_string() })
        }
    }

    pub fn constant_term(&self) -> &Rational {
        &self.h[0]
    }

    /// Codimension-`p` component.
    pub fn component(&self, p: usize) -> ChowClass {
        let mut z = Self::zero(self.ambient);
        if p <= self.ambient.dim() {
            z.h[p] = self.h[p].clone();
            if p >= 1 {
                for (zi, si) in z.e.iter_mut().zip(&self.e) {
                    zi[p - 1] = si[p - 1].clone();
                }
            }
        }
        z
    }

    /// True when only the codimension-`p` component can be nonzero.
    pub fn is_pure(&self, p: usize) -> bool {
        (0..=self.ambient.dim()).filter(|&k| k != p).all(|k| self.component(k).is_zero())
    }

    pub fn scale(&self, c: &Rational) -> ChowClass {
        ChowClass {
            ambient: self.ambient,
            h: self.h.iter().map(|x| x * c).collect(),
            e: self.e.iter().map(|v| v.iter().map(|x| x * c).collect()).collect(),
        }
    }

    fn map_by_codim(&self, f: impl Fn(usize, &Rational) -> Rational) -> ChowClass {
        ChowClass {
            ambient: self.ambient,
            h: self.h.iter().enumerate().map(|(k, x)| f(k, x)).collect(),
            e: self.e.iter().map(|v| v.iter().enumerate().map(|(k, x)| f(k + 1, x)).collect()).collect(),
        }
    }

    fn check_ambient(&self, other: &ChowClass) -> Result<(), ChowError> {
        if self.ambient != other.ambient {
            return Err(ChowError::AmbientMismatch(self.ambient, other.ambient));
        }
        Ok(())
    }

    fn add_unchecked(&self, other: &ChowClass) -> ChowClass {
        ChowClass {
            ambient: self.ambient,
            h: self.h.iter().zip(&other.h).map(|(a, b)| a + b).collect(),
            e: self.e.iter().zip(&other.e).map(|(u, v)| u.iter().zip(v).map(|(a, b)| a + b).collect()).collect(),
        }
    }

    fn mul_unchecked(&self, other: &ChowClass) -> ChowClass {
        let n = self.ambient.dim();
        let mut out = Self::zero(self.ambient);
        for a in 0..=n {
            if self.h[a].is_zero() {
                continue;
            }
            for b in 0..=(n - a) {
                out.h[a + b] += &self.h[a] * &other.h[b];
            }
        }
        for (i, (sa, sb)) in self.e.iter().zip(&other.e).enumerate() {
            let dst = &mut out.e[i];
            for k in 1..=n {
                dst[k - 1] += &self.h[0] * &sb[k - 1] + &sa[k - 1] * &other.h[0];
            }
            for a in 1..n {
                if sa[a - 1].is_zero() {
                    continue;
                }
                for b in 1..=(n - a) {
                    dst[a + b - 1] += &sa[a - 1] * &sb[b - 1];
                }
            }
        }
        out
    }

    pub fn try_add(&self, other: &ChowClass) -> Result<ChowClass, ChowError> {
        self.check_ambient(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn try_sub(&self, other: &ChowClass) -> Result<ChowClass, ChowError> {
        self.check_ambient(other)?;
        Ok(self.add_unchecked(&-other))
    }

    pub fn pow(&self, k: u32) -> ChowClass {
        let mut acc = Self::one(self.ambient);
        for _ in 0..k {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    /// Total degree: pairs the codimension-`n` part with the point class.
    pub fn degree(&self) -> Rational {
        let n = self.ambient.dim();
        let mut d = self.h[n].clone();
        let s = sign(n - 1);
        for v in &self.e {
            d += &v[n - 1] * &s;
        }
        d
    }
}

/// Intersection product.
pub fn chow_mul(a: &ChowClass, b: &ChowClass) -> Result<ChowClass, ChowError> {
    a.check_ambient(b)?;
    Ok(a.mul_unchecked(b))
}

/// Multiplicative inverse of a class with constant term 1.
pub fn inv_unit(a: &ChowClass) -> Result<ChowClass, ChowError> {
    if !a.constant_term().is_one() {
        return Err(ChowError::NotUnit(fmt_rational(a.constant_term())));
    }
    // 1/(1+x) = sum (-x)^k; x is nilpotent of order n+1.
    let neg_x = a.add_unchecked(&ChowClass::scalar(a.ambient, -Rational::one())).scale(&-Rational::one());
    let mut acc = ChowClass::one(a.ambient);
    let mut term = ChowClass::one(a.ambient);
    for _ in 0..a.ambient.dim() {
        term = term.mul_unchecked(&neg_x);
        acc = acc.add_unchecked(&term);
    }
    Ok(acc)
}

/// Graded dual: the codimension-`p` component is multiplied by `(-1)^p`.
pub fn class_dual(a: &ChowClass) -> ChowClass {
    a.map_by_codim(|k, x| x * sign(k))
}

/// Total Chern class of the dual sheaf, from the total Chern class `c`.
pub fn chern_dual(c: &ChowClass) -> Result<ChowClass, ChowError> {
    if !c.constant_term().is_one() {
        return Err(ChowError::NotUnit(fmt_rational(c.constant_term())));
    }
    Ok(c.map_by_codim(|k, x| x * sign(k)))
}

/// A line bundle, recorded through its first Chern class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineBundleClass {
    divisor: ChowClass,
}

impl LineBundleClass {
    pub fn new(divisor: ChowClass) -> Result<Self, ChowError> {
        if !divisor.is_pure(1) {
            return Err(ChowError::NotDivisor);
        }
        Ok(LineBundleClass { divisor })
    }

    /// `O(d)` pulled back from the hyperplane class.
    pub fn hyperplane(ambient: Ambient, d: i64) -> Self {
        LineBundleClass { divisor: ChowClass::hyperplane_multiple(ambient, d) }
    }

    pub fn divisor(&self) -> &ChowClass {
        &self.divisor
    }

    pub fn ambient(&self) -> Ambient {
        self.divisor.ambient
    }

    /// Total Chern class `1 + c_1`.
    pub fn chern(&self) -> ChowClass {
        ChowClass::one(self.ambient()).add_unchecked(&self.divisor)
    }
}

/// Tensor by a line bundle: the codimension-`p` component is divided by
/// `c(L)^p`.
pub fn class_tensor(a: &ChowClass, l: &LineBundleClass) -> Result<ChowClass, ChowError> {
    a.check_ambient(l.divisor())?;
    let inv = inv_unit(&l.chern())?;
    let mut out = ChowClass::zero(a.ambient);
    let mut inv_pow = ChowClass::one(a.ambient);
    for p in 0..=a.ambient.dim() {
        if p > 0 {
            inv_pow = inv_pow.mul_unchecked(&inv);
        }
        let part = a.component(p);
        if !part.is_zero() {
            out = out.add_unchecked(&part.mul_unchecked(&inv_pow));
        }
    }
    Ok(out)
}

/// Integral over the ambient.
pub fn degree_int(a: &ChowClass) -> Rational {
    a.degree()
}

/// Proper pushforward along the blowdown `BlPt(P(n), m) -> P(n)`.
pub fn pushforward(a: &ChowClass) -> Result<ChowClass, ChowError> {
    let Ambient::BlowupAtPoints { n, .. } = a.ambient else {
        return Err(ChowError::NotBlowup(a.ambient));
    };
    let base = a.ambient.base();
    let mut out = ChowClass::zero(base);
    out.h.clone_from(&a.h);
    let s = sign(n - 1);
    for v in &a.e {
        out.h[n] += &v[n - 1] * &s;
    }
    Ok(out)
}

/// Pullback from `P(n)` to a point blowup of it.
pub fn pullback(a: &ChowClass, target: Ambient) -> Result<ChowClass, ChowError> {
    match (a.ambient, target) {
        (Ambient::ProjectiveSpace { n }, Ambient::BlowupAtPoints { n: tn, .. }) if n == tn => {
            let mut out = ChowClass::zero(target);
            out.h.clone_from(&a.h);
            Ok(out)
        }
        _ => Err(ChowError::AmbientMismatch(a.ambient, target)),
    }
}

/// Exceptional part of `c(T Bl_p P(n))`: the difference between the toric
/// product `(1+h)(1+h-e)^n(1+e)` and `(1+h)^(n+1)`, in `BlPt(P(n), 1)`.
pub fn exceptional_tangent_correction(n: usize) -> ChowClass {
    let amb = Ambient::BlowupAtPoints { n, m: 1 };
    let one = ChowClass::one(amb);
    let h = ChowClass::h_pow(amb, 1);
    let e = ChowClass::e_pow(amb, 0, 1).expect("one exceptional divisor");
    let one_h = &one + &h;
    let toric = &(&one_h * &(&one_h - &e).pow(n as u32)) * &(&one + &e);
    &toric - &one_h.pow(n as u32 + 1)
}

/// Total Chern class of the tangent bundle of the ambient.
pub fn chern_tangent(ambient: Ambient) -> ChowClass {
    let n = ambient.dim();
    let base = ambient.base();
    let c_base = (&ChowClass::one(base) + &ChowClass::h_pow(base, 1)).pow(n as u32 + 1);
    match ambient {
        Ambient::ProjectiveSpace { .. } => c_base,
        Ambient::BlowupAtPoints { m, .. } => {
            let delta = exceptional_tangent_correction(n);
            assert!(delta.h.iter().all(Zero::is_zero), "exceptional tangent correction has h-terms");
            let mut out = pullback(&c_base, ambient).expect("compatible ambients");
            for i in 0..m {
                out.e[i].clone_from(&delta.e[0]);
            }
            out
        }
    }
}

impl<'a> Add<&'a ChowClass> for &'a ChowClass {
    type Output = ChowClass;
    fn add(self, rhs: &'a ChowClass) -> ChowClass {
        self.try_add(rhs).expect("ambient mismatch in Chow addition")
    }
}

impl<'a> Sub<&'a ChowClass> for &'a ChowClass {
    type Output = ChowClass;
    fn sub(self, rhs: &'a ChowClass) -> ChowClass {
        self.try_sub(rhs).expect("ambient mismatch in Chow subtraction")
    }
}

impl<'a> Mul<&'a ChowClass> for &'a ChowClass {
    type Output = ChowClass;
    fn mul(self, rhs: &'a ChowClass) -> ChowClass {
        chow_mul(self, rhs).expect("ambient mismatch in Chow product")
    }
}

impl Neg for &ChowClass {
    type Output = ChowClass;
    fn neg(self) -> ChowClass {
        self.scale(&-Rational::one())
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, first: &mut bool, c: &Rational, gen: &str, k: usize) -> fmt::Result {
    if c.is_zero() {
        return Ok(());
    }
    let neg = c.is_negative();
    let abs = c.abs();
    if *first {
        if neg {
            write!(f, "-")?;
        }
    } else {
        write!(f, " {} ", if neg { '-' } else { '+' })?;
    }
    *first = false;
    let mono = match k {
        0 => String::new(),
        1 => gen.to_string(),
        _ => format!("{gen}^{k}"),
    };
    if mono.is_empty() {
        write!(f, "{}", fmt_rational(&abs))
    } else if abs.is_one() {
        write!(f, "{mono}")
    } else {
        write!(f, "{}*{mono}", fmt_rational(&abs))
    }
}

impl fmt::Display for ChowClass {
    /// `c0 + c1*h + ... + d1*e1 + d2*e1^2 + ...`, zero terms omitted. A single
    /// exceptional generator is written `e`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.h.iter().enumerate() {
            write_term(f, &mut first, c, "h", k)?;
        }
        for (i, v) in self.e.iter().enumerate() {
            let gen = if self.e.len() == 1 { "e".to_string() } else { format!("e{}", i + 1) };
            for (k, c) in v.iter().enumerate() {
                write_term(f, &mut first, c, &gen, k + 1)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// JSON shape of a class: `h` indexed by codimension `0..=n`, and one
/// exceptional block per blown-up point indexed by codimension `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassVector {
    pub h: Vec<String>,
    pub exceptional: Vec<Vec<String>>,
}

impl From<&ChowClass> for ClassVector {
    fn from(c: &ChowClass) -> Self {
        ClassVector {
            h: c.h.iter().map(fmt_rational).collect(),
            exceptional: c.e.iter().map(|v| v.iter().map(fmt_rational).collect()).collect(),
        }
    }
}

/// Evaluates an expression over the generators `h`, `e1..em` (or `e` when
/// `m = 1`) with `+ - * ^` and `inv(...)`.
pub fn eval_chow_expr(text: &str, ambient: Ambient) -> Result<ChowClass, ChowError> {
    let expr = parse_expr(text)?;
    eval(&expr, ambient)
}

fn generator(name: &str, pos: usize, ambient: Ambient) -> Result<ChowClass, ChowError> {
    let unknown = || ChowError::UnknownGenerator { name: name.to_string(), pos };
    if name == "h" {
        return Ok(ChowClass::h_pow(ambient, 1));
    }
    if name == "e" && ambient.points() == 1 {
        return ChowClass::e_pow(ambient, 0, 1);
    }
    let idx: usize = name.strip_prefix('e').and_then(|s| s.parse().ok()).ok_or_else(unknown)?;
    if idx == 0 || idx > ambient.points() {
        return Err(unknown());
    }
    ChowClass::e_pow(ambient, idx - 1, 1)
}

fn eval(e: &Expr, amb: Ambient) -> Result<ChowClass, ChowError> {
    Ok(match e {
        Expr::Num(q) => ChowClass::scalar(amb, q.clone()),
        Expr::Ident { name, pos } => generator(name, *pos, amb)?,
        Expr::Call { name, arg, pos } => match name.as_str() {
            "inv" => inv_unit(&eval(arg, amb)?)?,
            _ => return Err(ChowError::UnknownFunction { name: name.clone(), pos: *pos }),
        },
        Expr::Neg(a) => -&eval(a, amb)?,
        Expr::Add(a, b) => &eval(a, amb)? + &eval(b, amb)?,
        Expr::Sub(a, b) => &eval(a, amb)? - &eval(b, amb)?,
        Expr::Mul(a, b) => &eval(a, amb)? * &eval(b, amb)?,
        Expr::Pow(a, k) => eval(a, amb)?.pow(*k),
    })
}
