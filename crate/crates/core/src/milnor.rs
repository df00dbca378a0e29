//! Local Milnor numbers of isolated hypersurface singularities.
//!
//! `milnor_at` works in the truncated local algebra `O / (J + m^D)`: the
//! Jacobian ideal `J` is spanned, modulo `m^D`, by the truncations of
//! `x^a * df/dx_i`. Once every monomial of degree `D - 1` lies in that span,
//! Nakayama gives `m^(D-1) ⊂ J` and the truncated dimension is exact.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::groebner::GroebnerBasis;
use crate::poly::{dehomogenize, fmt_rational, monomials_of_degree, translate_to_origin, Monomial, Poly, PolyError, Rational};

pub const DEFAULT_MAX_CUTOFF: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MilnorError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("the zero vector is not a projective point")]
    ZeroPoint,
    #[error("point {0} does not lie on the hypersurface")]
    NotOnHypersurface(String),
    #[error("point {0} is not singular")]
    NotSingular(String),
    #[error("chart {chart} is invalid for point {point}")]
    BadChart { chart: usize, point: String },
    #[error("point {0} is listed twice")]
    DuplicatePoint(String),
    #[error("invalid point '{0}'")]
    InvalidPoint(String),
    #[error("origin is not a singular point of the affine equation")]
    NotSingularAtOrigin,
    #[error("no certificate up to cutoff {cutoff}: possibly non-isolated singularity at this point")]
    NotIsolated { cutoff: usize },
    #[error("non-isolated singular locus in this chart")]
    NonIsolatedLocus,
    #[error("Milnor number at {0} is not certified")]
    Uncertified(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MilnorResult {
    pub mu: u64,
    /// Truncation degree used; 0 marks a Milnor number supplied by the caller.
    pub cutoff: usize,
    pub certified: bool,
}

impl MilnorResult {
    /// A Milnor number asserted by the caller rather than computed.
    pub fn asserted(mu: u64) -> Self {
        MilnorResult { mu, cutoff: 0, certified: true }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularPoint {
    pub point: Vec<Rational>,
    pub chart: usize,
    pub milnor: MilnorResult,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SingularityData {
    points: Vec<SingularPoint>,
}

pub fn format_point(p: &[Rational]) -> String {
    p.iter().map(fmt_rational).collect::<Vec<_>>().join(":")
}

/// Parses `a:b:c;d:e:f`; the empty string is the empty list.
pub fn parse_points(text: &str) -> Result<Vec<Vec<Rational>>, MilnorError> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(';')
        .map(|pt| {
            pt.split(':')
                .map(|c| c.trim().parse::<Rational>().map_err(|_| MilnorError::InvalidPoint(pt.trim().to_string())))
                .collect()
        })
        .collect()
}

fn proportional(a: &[Rational], b: &[Rational]) -> bool {
    a.len() == b.len()
        && (0..a.len()).all(|i| (i..a.len()).all(|j| &a[i] * &b[j] == &a[j] * &b[i]))
}

impl SingularityData {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(points: Vec<SingularPoint>) -> Result<Self, MilnorError> {
        for (i, p) in points.iter().enumerate() {
            if points[..i].iter().any(|q| proportional(&q.point, &p.point)) {
                return Err(MilnorError::DuplicatePoint(format_point(&p.point)));
            }
        }
        Ok(SingularityData { points })
    }

    /// Verifies each point on `f` and computes its Milnor number.
    pub fn compute(
        f: &Poly,
        points: &[Vec<Rational>],
        chart: Option<usize>,
        max_cutoff: usize,
    ) -> Result<Self, MilnorError> {
        let mut out = Vec::with_capacity(points.len());
        for p in points {
            let chart = match chart {
                Some(c) => verify_singular_point_in_chart(f, p, c)?,
                None => verify_singular_point(f, p)?,
            };
            let local = local_equation(f, p, chart)?;
            let milnor = milnor_at(&local, max_cutoff)?;
            out.push(SingularPoint { point: p.clone(), chart, milnor });
        }
        Self::new(out)
    }

    /// Points with caller-supplied Milnor numbers (no polynomial attached).
    pub fn asserted(points: &[Vec<Rational>], mus: &[u64]) -> Result<Self, MilnorError> {
        let recs = points
            .iter()
            .zip(mus)
            .map(|(p, &mu)| {
                let chart = p.iter().position(|c| !c.is_zero()).ok_or(MilnorError::ZeroPoint)?;
                Ok(SingularPoint { point: p.clone(), chart, milnor: MilnorResult::asserted(mu) })
            })
            .collect::<Result<Vec<_>, MilnorError>>()?;
        Self::new(recs)
    }

    pub fn points(&self) -> &[SingularPoint] {
        &self.points
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn total_milnor(&self) -> u64 {
        self.points.iter().map(|p| p.milnor.mu).sum()
    }

    pub fn ensure_certified(&self) -> Result<(), MilnorError> {
        match self.points.iter().find(|p| !p.milnor.certified) {
            Some(p) => Err(MilnorError::Uncertified(format_point(&p.point))),
            None => Ok(()),
        }
    }
}

impl fmt::Display for SingularityData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.points.iter().map(|p| format_point(&p.point)).collect();
        write!(f, "{}", parts.join(";"))
    }
}

fn affine_coords(p: &[Rational], chart: usize) -> Vec<Rational> {
    p.iter().enumerate().filter(|(i, _)| *i != chart).map(|(_, c)| c / &p[chart]).collect()
}

/// Checks that `p` is a singular point of the hypersurface `f = 0` in the
/// given chart.
pub fn verify_singular_point_in_chart(f: &Poly, p: &[Rational], chart: usize) -> Result<usize, MilnorError> {
    if p.len() != f.nvars() {
        return Err(PolyError::DimensionMismatch { expected: f.nvars(), got: p.len() }.into());
    }
    if p.iter().all(Zero::is_zero) {
        return Err(MilnorError::ZeroPoint);
    }
    if chart >= p.len() || p[chart].is_zero() {
        return Err(MilnorError::BadChart { chart, point: format_point(p) });
    }
    let g = dehomogenize(f, chart)?;
    let a = affine_coords(p, chart);
    if !g.eval(&a)?.is_zero() {
        return Err(MilnorError::NotOnHypersurface(format_point(p)));
    }
    for d in g.gradient() {
        if !d.eval(&a)?.is_zero() {
            return Err(MilnorError::NotSingular(format_point(p)));
        }
    }
    Ok(chart)
}

/// Like [`verify_singular_point_in_chart`] using the first nonzero coordinate.
pub fn verify_singular_point(f: &Poly, p: &[Rational]) -> Result<usize, MilnorError> {
    let chart = p.iter().position(|c| !c.is_zero()).ok_or(MilnorError::ZeroPoint)?;
    verify_singular_point_in_chart(f, p, chart)
}

/// Affine equation of `f` centred at `p` in the given chart.
pub fn local_equation(f: &Poly, p: &[Rational], chart: usize) -> Result<Poly, MilnorError> {
    let g = dehomogenize(f, chart)?;
    Ok(translate_to_origin(&g, &affine_coords(p, chart))?)
}

/// Sparse row echelon form over the rationals. Rows are keyed by their
/// leading column; each stored row is monic.
#[derive(Default)]
struct Echelon {
    pivots: HashMap<usize, BTreeMap<usize, Rational>>,
}

impl Echelon {
    fn reduce_leading(&self, mut row: BTreeMap<usize, Rational>) -> BTreeMap<usize, Rational> {
        while let Some((&lead, c)) = row.iter().next() {
            let Some(piv) = self.pivots.get(&lead) else { break };
            let c = c.clone();
            for (col, a) in piv {
                let v = row.entry(*col).or_insert_with(Rational::zero);
                *v -= &c * a;
                if v.is_zero() {
                    row.remove(col);
                }
            }
        }
        row
    }

    fn insert(&mut self, row: BTreeMap<usize, Rational>) {
        let row = self.reduce_leading(row);
        if let Some((&lead, c)) = row.iter().next() {
            let inv = c.recip();
            let row = row.into_iter().map(|(k, v)| (k, v * &inv)).collect();
            self.pivots.insert(lead, row);
        }
    }

    fn contains(&self, row: BTreeMap<usize, Rational>) -> bool {
        self.reduce_leading(row).is_empty()
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }
}

fn check_singular_origin(f: &Poly) -> Result<(), MilnorError> {
    let zero = vec![Rational::zero(); f.nvars()];
    if !f.eval(&zero)?.is_zero() || f.gradient().iter().any(|d| !d.eval(&zero).unwrap().is_zero()) {
        return Err(MilnorError::NotSingularAtOrigin);
    }
    Ok(())
}

/// `dim O/(J + m^cutoff)` together with the certificate at that level.
pub fn milnor_at_level(f: &Poly, cutoff: usize) -> Result<MilnorResult, MilnorError> {
    check_singular_origin(f)?;
    let k = f.nvars();
    let bound = cutoff as u32;
    let mut index: HashMap<Monomial, usize> = HashMap::new();
    let mut top: Vec<usize> = Vec::new();
    for d in 0..bound {
        for m in monomials_of_degree(k, d) {
            if d + 1 == bound {
                top.push(index.len());
            }
            index.insert(m, index.len());
        }
    }
    let mut ech = Echelon::default();
    for df in f.gradient() {
        let df = df.truncate_below(bound);
        let low = df.min_degree().unwrap_or(bound);
        // x^a * df vanishes mod m^bound once |a| + low >= bound
        for d in 0..bound.saturating_sub(low) {
            for a in monomials_of_degree(k, d) {
                let row: BTreeMap<usize, Rational> = df
                    .terms()
                    .iter()
                    .filter(|(m, _)| m.degree() + d < bound)
                    .map(|(m, c)| (index[&m.mul(&a)], c.clone()))
                    .collect();
                if !row.is_empty() {
                    ech.insert(row);
                }
            }
        }
    }
    let mu = (index.len() - ech.rank()) as u64;
    let certified = top.iter().all(|&col| ech.contains(BTreeMap::from([(col, Rational::from_integer(1.into()))])));
    Ok(MilnorResult { mu, cutoff, certified })
}

/// Milnor number of the affine equation `f` at the origin: the first
/// certified truncation level from 2 up to `max_cutoff`.
pub fn milnor_at(f: &Poly, max_cutoff: usize) -> Result<MilnorResult, MilnorError> {
    check_singular_origin(f)?;
    for d in 2..=max_cutoff {
        let r = milnor_at_level(f, d)?;
        if r.certified {
            return Ok(r);
        }
    }
    Err(MilnorError::NotIsolated { cutoff: max_cutoff })
}

/// Total Milnor number of the affine hypersurface `f = 0`: the sum of the
/// local Milnor numbers over all its singular points in this chart.
///
/// Critical points of `f` off the hypersurface are cut away by working with
/// `(J, f^K)`: at a singular point `f` is nilpotent modulo `J`, and elsewhere
/// it is a unit. `K` grows until `dim k[x]/(J, f^K)` stops changing, at which
/// point `f^K` lies in `J` locally at every singular point.
pub fn total_milnor_affine(f: &Poly, max_cutoff: usize) -> Result<u64, MilnorError> {
    let mut prev: Option<u64> = None;
    for k in 1..=max_cutoff.max(2) as u32 {
        let mut gens = f.gradient();
        gens.push(f.pow(k));
        let gb = GroebnerBasis::compute(&gens);
        let dim = gb.standard_monomials().ok_or(MilnorError::NonIsolatedLocus)?.len() as u64;
        if prev == Some(dim) {
            return Ok(dim);
        }
        prev = Some(dim);
    }
    Err(MilnorError::NonIsolatedLocus)
}
