//! Executable identity checks: both sides of each CSM formula are computed on
//! a concrete geometry and compared coefficient by coefficient.

use serde::Serialize;

use crate::chow::{chern_tangent, pushforward, Ambient, ChowClass, ClassVector};
use crate::classes::{
    chi_complement, csm_hypersurface, csm_nc_union, csm_smooth_ci, euler, log_chern_dual, milnor_correction,
    milnor_correction_isolated, multilog_chern_dual, nc_log_chern_dual, ClassError, HypersurfaceSpec,
};
use crate::milnor::SingularityData;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub scenario: String,
    pub lhs: ChowClass,
    pub rhs: ChowClass,
    pub equal: bool,
    /// `lhs - rhs`, identically zero iff `equal`.
    pub diff: ChowClass,
}

impl VerificationReport {
    pub fn new(scenario: impl Into<String>, lhs: ChowClass, rhs: ChowClass) -> Self {
        let diff = &lhs - &rhs;
        VerificationReport { scenario: scenario.into(), equal: diff.is_zero(), lhs, rhs, diff }
    }

    /// Nonzero entries of the difference as `(codimension, generator, value)`.
    pub fn diff_by_codimension(&self) -> Vec<(usize, String, String)> {
        let mut out = Vec::new();
        for (k, c) in self.diff.h_coeffs().iter().enumerate() {
            if !num_traits::Zero::is_zero(c) {
                out.push((k, "h".to_string(), c.to_string()));
            }
        }
        for (i, v) in self.diff.e_coeffs().iter().enumerate() {
            for (k, c) in v.iter().enumerate() {
                if !num_traits::Zero::is_zero(c) {
                    out.push((k + 1, format!("e{}", i + 1), c.to_string()));
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportJson {
    pub scenario: String,
    pub lhs: ClassVector,
    pub rhs: ClassVector,
    pub equal: bool,
    pub diff: ClassVector,
}

impl From<&VerificationReport> for ReportJson {
    fn from(r: &VerificationReport) -> Self {
        ReportJson {
            scenario: r.scenario.clone(),
            lhs: (&r.lhs).into(),
            rhs: (&r.rhs).into(),
            equal: r.equal,
            diff: (&r.diff).into(),
        }
    }
}

/// Blowup of `P(n)` at a point `X`: the exceptional divisor is smooth, so the
/// formula reads `[pt] = c(TP^n) - π_*(c(TM̃)/(1+e))`.
pub fn verify_thm12_point_blowup(n: usize) -> Result<VerificationReport, ClassError> {
    let base = Ambient::projective(n)?;
    let blown = Ambient::blowup(n, 1)?;
    let lhs = ChowClass::h_pow(base, n);
    let exceptional = HypersurfaceSpec::new(ChowClass::e_pow(blown, 0, 1)?, SingularityData::empty())?;
    let rhs = &chern_tangent(base) - &pushforward(&log_chern_dual(&exceptional)?)?;
    Ok(VerificationReport::new(format!("thm12-blowup n={n}"), lhs, rhs))
}

/// Identity blowdown on a degree-`d` hypersurface of `P(n)` with isolated
/// singularities: the CSM class against
/// `c(TP^n) - c(Ω¹(log X)^∨) + (-1)^n sum m_i [x_i]`.
pub fn verify_thm12_identity_map(n: usize, d: i64, sing: SingularityData) -> Result<VerificationReport, ClassError> {
    if n < 3 {
        return Err(ClassError::Unsupported(format!(
            "identity-map instances need n >= 3 so that the singular locus has codimension >= 3, got n = {n}"
        )));
    }
    let spec = HypersurfaceSpec::of_degree(n, d, sing)?;
    let amb = spec.ambient();
    let lhs = csm_hypersurface(&spec)?;

    // c_*(1_{M \ X}) = c(Ω¹(log X)^∨) - c(L)^dim X (μ^∨ ⊗ L) = c(TM) - c_SM(X)
    let complement = &log_chern_dual(&spec)? - &milnor_correction(&spec)?;
    let additivity = &chern_tangent(amb) - &lhs;
    if complement != additivity {
        return Err(ClassError::Inconsistent {
            what: "CSM class of the complement".into(),
            lhs: complement.to_string(),
            rhs: additivity.to_string(),
        });
    }

    let rhs = &(&chern_tangent(amb) - &log_chern_dual(&spec)?) + &milnor_correction_isolated(&spec)?;
    let mus: Vec<String> = spec.singularities().points().iter().map(|p| p.milnor.mu.to_string()).collect();
    Ok(VerificationReport::new(format!("thm12-identity n={n} d={d} mu=[{}]", mus.join(",")), lhs, rhs))
}

/// Normal crossing union of one or two smooth hypersurfaces: CSM class by
/// inclusion-exclusion against `c(TM) - c(Ω¹(log D)^∨)`.
pub fn verify_aluffi_nc(n: usize, degrees: &[i64]) -> Result<VerificationReport, ClassError> {
    let amb = Ambient::projective(n)?;
    let lhs = csm_nc_union(amb, degrees)?;
    let rhs = &chern_tangent(amb) - &nc_log_chern_dual(amb, degrees)?;
    let ds: Vec<String> = degrees.iter().map(i64::to_string).collect();
    Ok(VerificationReport::new(format!("aluffi-nc n={n} d=[{}]", ds.join(",")), lhs, rhs))
}

/// Complete intersection `C = D1 ∩ D2` against
/// `c(TM) - c(Ω¹(log C)^∨) + c_SM(C) - c_SM(D1 ∪ D2)`.
pub fn verify_multilog(n: usize, d1: i64, d2: i64) -> Result<VerificationReport, ClassError> {
    let amb = Ambient::projective(n)?;
    let lhs = csm_smooth_ci(amb, &[d1, d2])?;
    let rhs = &(&(&chern_tangent(amb) - &multilog_chern_dual(amb, d1, d2)?) + &csm_smooth_ci(amb, &[d1, d2])?)
        - &csm_nc_union(amb, &[d1, d2])?;
    Ok(VerificationReport::new(format!("multilog n={n} d1={d1} d2={d2}"), lhs, rhs))
}

/// Euler characteristic of `P(n) \ X`, from the logarithmic formula and from
/// `χ(P^n) - χ(X)`. Both sides are reported as multiples of the point class.
pub fn verify_cor13(n: usize, d: i64, sing: SingularityData) -> Result<VerificationReport, ClassError> {
    let spec = HypersurfaceSpec::of_degree(n, d, sing)?;
    let amb = spec.ambient();
    let via_formula = chi_complement(&spec)?;
    let via_csm = amb.euler_characteristic() - euler(&csm_hypersurface(&spec)?)?;
    let pt = ChowClass::h_pow(amb, n);
    let lhs = pt.scale(&crate::poly::Rational::from_integer(via_formula.into()));
    let rhs = pt.scale(&crate::poly::Rational::from_integer(via_csm.into()));
    Ok(VerificationReport::new(format!("cor13 n={n} d={d}"), lhs, rhs))
}
