//! Exact characteristic classes of singular projective hypersurfaces.
//!
//! The crate models the Chow rings of `P(n)` and of `P(n)` blown up at
//! points, computes local Milnor numbers by exact linear algebra, and
//! assembles Fulton, Milnor, Chern-Schwartz-MacPherson and logarithmic Chern
//! classes from them. The [`verify`] module checks the blowup and
//! logarithmic formulas for CSM classes as exact identities.

pub mod chow;
pub mod classes;
pub mod cli;
pub mod expr;
pub mod groebner;
pub mod milnor;
pub mod poly;
pub mod verify;

pub use chow::{Ambient, ChowClass, ChowError, LineBundleClass};
pub use classes::{ClassError, HypersurfaceSpec};
pub use milnor::{MilnorError, MilnorResult, SingularPoint, SingularityData};
pub use poly::{parse_poly, Poly, PolyError, Rational};
pub use verify::VerificationReport;
