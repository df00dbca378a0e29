//! Buchberger completion in graded reverse-lexicographic order, used to count
//! standard monomials of zero-dimensional ideals.

use std::cmp::Ordering;

use num_traits::{One, Zero};
use crate::poly::{Poly, Rational};

pub type Exps = Vec<u32>;

pub fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

/// Polynomial as terms sorted by descending grevlex, no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GPoly {
    terms: Vec<(Exps, Rational)>,
}

impl GPoly {
    pub fn from_poly(p: &Poly) -> Self {
        let mut terms: Vec<(Exps, Rational)> = p.terms().iter().map(|(m, c)| (m.0.clone(), c.clone())).collect();
        terms.sort_by(|a, b| grevlex(&b.0, &a.0));
        GPoly { terms }
    }

    pub fn terms(&self) -> &[(Exps, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(Exps, Rational)> {
        self.terms.first()
    }

    fn monic(mut self) -> Self {
        if let Some((_, lc)) = self.terms.first() {
            let inv = lc.recip();
            for (_, c) in &mut self.terms {
                *c *= &inv;
            }
        }
        self
    }

    /// `self - c * x^shift * other`.
    fn sub_scaled(&self, c: &Rational, shift: &[u32], other: &GPoly) -> GPoly {
        let shifted = other.terms.iter().map(|(e, a)| (add_exps(e, shift), a * c));
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut lhs = self.terms.iter().cloned().peekable();
        let mut rhs = shifted.peekable();
        loop {
            let ord = match (lhs.peek(), rhs.peek()) {
                (Some(a), Some(b)) => grevlex(&a.0, &b.0),
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (None, None) => break,
            };
            match ord {
                Ordering::Greater => out.push(lhs.next().unwrap()),
                Ordering::Less => {
                    let (e, a) = rhs.next().unwrap();
                    out.push((e, -a));
                }
                Ordering::Equal => {
                    let (e, a) = lhs.next().unwrap();
                    let (_, b) = rhs.next().unwrap();
                    let d = a - b;
                    if !d.is_zero() {
                        out.push((e, d));
                    }
                }
            }
        }
        GPoly { terms: out }
    }
}

fn add_exps(a: &[u32], b: &[u32]) -> Exps {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &[u32], b: &[u32]) -> Exps {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn quotient(a: &[u32], b: &[u32]) -> Exps {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Fully reduces `f` by `basis`.
pub fn normal_form(f: &GPoly, basis: &[GPoly]) -> GPoly {
    let mut rest = f.clone();
    let mut out: Vec<(Exps, Rational)> = Vec::new();
    while let Some((lm, lc)) = rest.terms.first().cloned() {
        let reducer = basis.iter().find(|g| g.leading().is_some_and(|(gm, _)| divides(gm, &lm)));
        match reducer {
            Some(g) => {
                let (gm, gc) = g.leading().unwrap();
                rest = rest.sub_scaled(&(&lc / gc), &quotient(&lm, gm), g);
            }
            None => {
                out.push((lm, lc));
                rest.terms.remove(0);
            }
        }
    }
    GPoly { terms: out }
}

#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    nvars: usize,
    polys: Vec<GPoly>,
}

impl GroebnerBasis {
    /// Reduced Groebner basis of the ideal generated by `gens`.
    pub fn compute(gens: &[Poly]) -> Self {
        let nvars = gens.first().map(Poly::nvars).unwrap_or(0);
        let mut basis: Vec<GPoly> = Vec::new();
        for g in gens {
            let r = normal_form(&GPoly::from_poly(g), &basis);
            if !r.is_zero() {
                basis.push(r.monic());
            }
        }
        let mut pairs: Vec<(usize, usize)> =
            (0..basis.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        while let Some((i, j)) = pairs.pop() {
            let (mi, _) = basis[i].leading().unwrap().clone();
            let (mj, _) = basis[j].leading().unwrap().clone();
            // coprime leading monomials reduce to zero
            if mi.iter().zip(&mj).all(|(a, b)| *a == 0 || *b == 0) {
                continue;
            }
            let l = lcm(&mi, &mj);
            let s = GPoly { terms: Vec::new() }
                .sub_scaled(&-Rational::one(), &quotient(&l, &mi), &basis[i])
                .sub_scaled(&Rational::one(), &quotient(&l, &mj), &basis[j]);
            let r = normal_form(&s, &basis);
            if r.is_zero() {
                continue;
            }
            let k = basis.len();
            basis.push(r.monic());
            pairs.extend((0..k).map(|i| (i, k)));
        }
        GroebnerBasis { nvars, polys: reduce(basis) }
    }

    pub fn polys(&self) -> &[GPoly] {
        &self.polys
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.polys.iter().any(|g| g.leading().is_some_and(|(m, _)| m.iter().all(|&a| a == 0)))
    }

    /// For each variable, the smallest pure power among leading monomials.
    fn pure_power_bounds(&self) -> Option<Vec<u32>> {
        (0..self.nvars)
            .map(|i| {
                self.polys
                    .iter()
                    .filter_map(|g| g.leading())
                    .filter(|(m, _)| m.iter().enumerate().all(|(j, &a)| j == i || a == 0) && m[i] > 0)
                    .map(|(m, _)| m[i])
                    .min()
            })
            .collect()
    }

    pub fn is_zero_dimensional(&self) -> bool {
        self.is_unit_ideal() || self.pure_power_bounds().is_some()
    }

    /// Monomials outside the leading-term ideal; `None` when infinitely many.
    pub fn standard_monomials(&self) -> Option<Vec<Exps>> {
        if self.is_unit_ideal() {
            return Some(Vec::new());
        }
        let bounds = self.pure_power_bounds()?;
        let lms: Vec<&Exps> = self.polys.iter().filter_map(|g| g.leading().map(|(m, _)| m)).collect();
        let mut out = Vec::new();
        let mut cur = vec![0u32; self.nvars];
        loop {
            if !lms.iter().any(|m| divides(m, &cur)) {
                out.push(cur.clone());
            }
            // odometer over the box bounded by the pure powers
            let mut i = 0;
            loop {
                if i == self.nvars {
                    out.sort_by(|a, b| grevlex(a, b));
                    return Some(out);
                }
                cur[i] += 1;
                if cur[i] < bounds[i] {
                    break;
                }
                cur[i] = 0;
                i += 1;
            }
        }
    }

    pub fn normal_form(&self, f: &Poly) -> GPoly {
        normal_form(&GPoly::from_poly(f), &self.polys)
    }
}

fn reduce(mut basis: Vec<GPoly>) -> Vec<GPoly> {
    // drop elements whose leading monomial is divisible by another's
    let mut keep: Vec<GPoly> = Vec::new();
    basis.sort_by(|a, b| grevlex(&a.leading().unwrap().0, &b.leading().unwrap().0));
    for g in basis {
        let lm = &g.leading().unwrap().0;
        if !keep.iter().any(|k| divides(&k.leading().unwrap().0, lm)) {
            keep.push(g);
        }
    }
    let mut out = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let others: Vec<GPoly> = keep.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, g)| g.clone()).collect();
        let (lm, lc) = keep[i].leading().unwrap().clone();
        let tail = GPoly { terms: keep[i].terms[1..].to_vec() };
        let mut r = normal_form(&tail, &others);
        r.terms.insert(0, (lm, lc));
        out.push(r.monic());
    }
    out
}
