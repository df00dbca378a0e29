//! Fulton, Milnor, Chern-Schwartz-MacPherson and logarithmic Chern classes.
//!
//! Every class supported on a subvariety is represented by its image in the
//! Chow ring of the ambient.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::chow::{
    chern_dual, chern_tangent, class_dual, class_tensor, inv_unit, Ambient, ChowClass, ChowError, LineBundleClass,
};
use crate::milnor::{MilnorError, SingularityData};
use crate::poly::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassError {
    #[error(transparent)]
    Chow(#[from] ChowError),
    #[error(transparent)]
    Milnor(#[from] MilnorError),
    #[error("divisor class must be a nonzero integral codimension-1 class")]
    BadDivisor,
    #[error("expected a projective space ambient, got {0}")]
    NotProjectiveSpace(Ambient),
    #[error("degrees must be positive")]
    NonPositiveDegree,
    #[error("expected one or two degrees, got {0}")]
    DegreeCount(usize),
    #[error("internal consistency failure in {what}: {lhs} != {rhs}")]
    Inconsistent { what: String, lhs: String, rhs: String },
    #[error("{0} is not an integer")]
    NonIntegralNumber(String),
    #[error("unsupported instance: {0}")]
    Unsupported(String),
}

/// A hypersurface given by its divisor class and its isolated singular points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypersurfaceSpec {
    ambient: Ambient,
    divisor: ChowClass,
    singularities: SingularityData,
}

impl HypersurfaceSpec {
    pub fn new(divisor: ChowClass, singularities: SingularityData) -> Result<Self, ClassError> {
        if !divisor.is_pure(1) || !divisor.is_integral() {
            return Err(ClassError::BadDivisor);
        }
        Ok(HypersurfaceSpec { ambient: divisor.ambient(), divisor, singularities })
    }

    /// Degree-`d` hypersurface of `P(n)`.
    pub fn of_degree(n: usize, d: i64, singularities: SingularityData) -> Result<Self, ClassError> {
        Self::new(ChowClass::hyperplane_multiple(Ambient::projective(n)?, d), singularities)
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn divisor(&self) -> &ChowClass {
        &self.divisor
    }

    pub fn singularities(&self) -> &SingularityData {
        &self.singularities
    }

    pub fn line_bundle(&self) -> LineBundleClass {
        LineBundleClass::new(self.divisor.clone()).expect("validated divisor")
    }
}

fn exported(c: ChowClass, what: &str) -> Result<ChowClass, ClassError> {
    c.ensure_integral(what)?;
    Ok(c)
}

fn ensure_equal(what: &str, lhs: &ChowClass, rhs: &ChowClass) -> Result<(), ClassError> {
    if lhs != rhs {
        return Err(ClassError::Inconsistent { what: what.into(), lhs: lhs.to_string(), rhs: rhs.to_string() });
    }
    Ok(())
}

fn to_i64(q: &Rational) -> Result<i64, ClassError> {
    if !q.is_integer() {
        return Err(ClassError::NonIntegralNumber(q.to_string()));
    }
    q.to_integer().to_i64().ok_or_else(|| ClassError::NonIntegralNumber(q.to_string()))
}

/// `c(TM) * D / (1 + D)`: the Fulton class of the divisor `D`, pushed into
/// the ambient.
pub fn fulton_divisor(spec: &HypersurfaceSpec) -> Result<ChowClass, ClassError> {
    if spec.divisor.is_zero() {
        return Err(ClassError::BadDivisor);
    }
    let one = ChowClass::one(spec.ambient);
    let segre = &spec.divisor * &inv_unit(&(&one + &spec.divisor))?;
    exported(&chern_tangent(spec.ambient) * &segre, "Fulton class")
}

/// `sum m_i [x_i]` for isolated singular points.
pub fn mu_class_isolated(sing: &SingularityData, ambient: Ambient) -> Result<ChowClass, ClassError> {
    sing.ensure_certified()?;
    let n = ambient.dim();
    Ok(ChowClass::h_pow(ambient, n).scale(&Rational::from_integer(BigInt::from(sing.total_milnor()))))
}

/// `c(L)^dim X * (mu^∨ ⊗ L)`, the correction term between the Fulton and CSM
/// classes.
pub fn milnor_correction(spec: &HypersurfaceSpec) -> Result<ChowClass, ClassError> {
    let mu = mu_class_isolated(&spec.singularities, spec.ambient)?;
    let l = spec.line_bundle();
    let dim_x = spec.ambient.dim() as u32 - 1;
    Ok(&l.chern().pow(dim_x) * &class_tensor(&class_dual(&mu), &l)?)
}

/// `(-1)^dim M * sum m_i [x_i]`, the closed form of [`milnor_correction`] for
/// isolated points.
pub fn milnor_correction_isolated(spec: &HypersurfaceSpec) -> Result<ChowClass, ClassError> {
    let mu = mu_class_isolated(&spec.singularities, spec.ambient)?;
    let n = spec.ambient.dim();
    Ok(if n.is_multiple_of(2) { mu } else { -&mu })
}

/// CSM class of a hypersurface with isolated singularities. Both forms of the
/// Milnor correction are computed and must agree.
pub fn csm_hypersurface(spec: &HypersurfaceSpec) -> Result<ChowClass, ClassError> {
    let general = milnor_correction(spec)?;
    let isolated = milnor_correction_isolated(spec)?;
    ensure_equal("Milnor correction", &general, &isolated)?;
    exported(&fulton_divisor(spec)? + &general, "CSM class")
}

fn check_degrees(ambient: Ambient, degrees: &[i64], max: usize) -> Result<(), ClassError> {
    if !matches!(ambient, Ambient::ProjectiveSpace { .. }) {
        return Err(ClassError::NotProjectiveSpace(ambient));
    }
    if degrees.is_empty() || degrees.len() > max {
        return Err(ClassError::DegreeCount(degrees.len()));
    }
    if degrees.iter().any(|&d| d <= 0) {
        return Err(ClassError::NonPositiveDegree);
    }
    Ok(())
}

/// CSM class of a smooth complete intersection of one or two hypersurfaces of
/// the given degrees in `P(n)`.
pub fn csm_smooth_ci(ambient: Ambient, degrees: &[i64]) -> Result<ChowClass, ClassError> {
    check_degrees(ambient, degrees, 2)?;
    let one = ChowClass::one(ambient);
    let mut out = chern_tangent(ambient);
    for &d in degrees {
        let dh = ChowClass::hyperplane_multiple(ambient, d);
        out = &(&out * &dh) * &inv_unit(&(&one + &dh))?;
    }
    exported(out, "CSM class")
}

/// CSM class of a union of one or two smooth transversal hypersurfaces, by
/// inclusion-exclusion.
pub fn csm_nc_union(ambient: Ambient, degrees: &[i64]) -> Result<ChowClass, ClassError> {
    check_degrees(ambient, degrees, 2)?;
    match *degrees {
        [d] => csm_smooth_ci(ambient, &[d]),
        [d1, d2] => {
            let sum = &csm_smooth_ci(ambient, &[d1])? + &csm_smooth_ci(ambient, &[d2])?;
            exported(&sum - &csm_smooth_ci(ambient, &[d1, d2])?, "CSM class")
        }
        _ => unreachable!(),
    }
}

/// `c(Ω¹(log X)^∨) = c(TM) / (1 + X)`.
pub fn log_chern_dual(spec: &HypersurfaceSpec) -> Result<ChowClass, ClassError> {
    log_chern_dual_of(spec.ambient, &spec.divisor)
}

fn log_chern_dual_of(ambient: Ambient, divisor: &ChowClass) -> Result<ChowClass, ClassError> {
    let one = ChowClass::one(ambient);
    exported(&chern_tangent(ambient) * &inv_unit(&(&one + divisor))?, "logarithmic Chern class")
}

/// `c(Ω¹_M)`, the dual of the tangent class.
pub fn chern_cotangent(ambient: Ambient) -> ChowClass {
    chern_dual(&chern_tangent(ambient)).expect("tangent class is a unit")
}

/// `c(O_D) = 1 / c(O(-D))` for a divisor class `D`.
pub fn chern_structure_sheaf(divisor: &ChowClass) -> Result<ChowClass, ClassError> {
    let one = ChowClass::one(divisor.ambient());
    Ok(inv_unit(&(&one - divisor))?)
}

fn hyperplane_divisors(ambient: Ambient, degrees: &[i64]) -> Vec<ChowClass> {
    degrees.iter().map(|&d| ChowClass::hyperplane_multiple(ambient, d)).collect()
}

/// Dual of `c(Ω¹(log D))` for a normal crossing union of smooth hypersurfaces
/// of the given degrees, via the residue sequence:
/// `c(Ω¹(log D)) = c(Ω¹) * prod c(O_{D_i})`.
pub fn nc_log_chern_dual(ambient: Ambient, degrees: &[i64]) -> Result<ChowClass, ClassError> {
    if !matches!(ambient, Ambient::ProjectiveSpace { .. }) {
        return Err(ClassError::NotProjectiveSpace(ambient));
    }
    if degrees.iter().any(|&d| d <= 0) {
        return Err(ClassError::NonPositiveDegree);
    }
    let mut c = chern_cotangent(ambient);
    for d in hyperplane_divisors(ambient, degrees) {
        c = &c * &chern_structure_sheaf(&d)?;
    }
    exported(chern_dual(&c)?, "logarithmic Chern class")
}

/// Dual of the Chern class of multi-logarithmic forms along `D1 ∩ D2`.
///
/// Follows the sum-of-sheaves route: `c(Ω¹(D_i)) = c(Ω¹) c(O_{D_i})`, and
/// `c(Ω¹(D1) + Ω¹(D2)) = c(Ω¹(D1)) c(Ω¹(D2)) / c(Ω¹)`. The result is checked
/// against [`nc_log_chern_dual`].
pub fn multilog_chern_dual(ambient: Ambient, d1: i64, d2: i64) -> Result<ChowClass, ClassError> {
    check_degrees(ambient, &[d1, d2], 2)?;
    let omega = chern_cotangent(ambient);
    let twisted: Vec<ChowClass> = hyperplane_divisors(ambient, &[d1, d2])
        .iter()
        .map(|d| Ok(&omega * &chern_structure_sheaf(d)?))
        .collect::<Result<_, ClassError>>()?;
    let sum_sheaf = &(&twisted[0] * &twisted[1]) * &inv_unit(&omega)?;
    let multilog = exported(chern_dual(&sum_sheaf)?, "multi-logarithmic Chern class")?;
    let residue = nc_log_chern_dual(ambient, &[d1, d2])?;
    ensure_equal("multi-logarithmic vs residue route", &multilog, &residue)?;
    Ok(multilog)
}

/// Degree of the dimension-zero component.
pub fn euler(c: &ChowClass) -> Result<i64, ClassError> {
    to_i64(&c.degree())
}

/// Euler characteristic of the complement `M \ X`, from the logarithmic
/// Chern class and the Milnor numbers. Cross-checked against
/// `χ(M) - χ(X)`.
pub fn chi_complement(spec: &HypersurfaceSpec) -> Result<i64, ClassError> {
    let n = spec.ambient.dim();
    spec.singularities.ensure_certified()?;
    let total_mu = spec.singularities.total_milnor() as i64;
    let sign = if (n + 1).is_multiple_of(2) { 1 } else { -1 };
    let via_log = euler(&log_chern_dual(spec)?)? + sign * total_mu;
    if spec.divisor.is_zero() {
        let chi = chi_ambient(spec.ambient)?;
        if via_log != chi {
            return Err(ClassError::Inconsistent {
                what: "Euler characteristic of the complement".into(),
                lhs: via_log.to_string(),
                rhs: chi.to_string(),
            });
        }
        return Ok(chi);
    }

    // c_*(1_{M \ X}) = c(Ω¹(log X)^∨) - correction
    let complement_class = &log_chern_dual(spec)? - &milnor_correction(spec)?;
    let additivity = &chern_tangent(spec.ambient) - &csm_hypersurface(spec)?;
    ensure_equal("CSM class of the complement", &complement_class, &additivity)?;
    let via_csm = spec.ambient.euler_characteristic() - euler(&csm_hypersurface(spec)?)?;
    if via_log != via_csm {
        return Err(ClassError::Inconsistent {
            what: "Euler characteristic of the complement".into(),
            lhs: via_log.to_string(),
            rhs: via_csm.to_string(),
        });
    }
    Ok(via_log)
}

/// χ of the complement of the empty hypersurface: `χ(M)`.
pub fn chi_ambient(ambient: Ambient) -> Result<i64, ClassError> {
    let chi = euler(&chern_tangent(ambient))?;
    debug_assert_eq!(chi, ambient.euler_characteristic());
    Ok(chi)
}
