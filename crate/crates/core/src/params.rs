//! Validated parameter records for the Jacobi and Gegenbauer families.
//!
//! All downstream modules take these types by value; once constructed they
//! cannot hold an out-of-domain parameter. The magnitude guard (1e4 on
//! |alpha|, |beta|, |lambda| and on the degree) keeps the three-term
//! recurrence inside double range.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest admissible degree.
pub const MAX_DEGREE: u32 = 10_000;

/// Magnitude guard on |alpha|, |beta|, |lambda|.
pub const MAX_PARAM_MAGNITUDE: f64 = 1.0e4;

/// Distance to the domain boundary below which conditioning degrades and
/// results are flagged in diagnostics.
pub const BOUNDARY_FLAG_DISTANCE: f64 = 1.0e-6;

/// Jacobi weight parameters: alpha > -1, beta > -1, both finite.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JacobiParams {
    alpha: f64,
    beta: f64,
}

impl JacobiParams {
    /// Validates `alpha, beta > -1`, finiteness and the magnitude guard.
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !alpha.is_finite() || alpha <= -1.0 {
            return Err(Error::AlphaOutOfDomain(alpha));
        }
        if !beta.is_finite() || beta <= -1.0 {
            return Err(Error::BetaOutOfDomain(beta));
        }
        for v in [alpha, beta] {
            if v.abs() > MAX_PARAM_MAGNITUDE {
                return Err(Error::MagnitudeGuard(v));
            }
        }
        Ok(Self { alpha, beta })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// The reflected parameter pair (beta, alpha); zeros mirror accordingly.
    pub fn swapped(&self) -> Self {
        Self {
            alpha: self.beta,
            beta: self.alpha,
        }
    }

    /// True when either parameter is within 1e-6 of the boundary -1.
    /// Such inputs are accepted but flagged: conditioning degrades there.
    pub fn near_boundary(&self) -> bool {
        self.alpha + 1.0 <= BOUNDARY_FLAG_DISTANCE || self.beta + 1.0 <= BOUNDARY_FLAG_DISTANCE
    }
}

/// Gegenbauer (ultraspherical) weight parameter: lambda > -1/2, finite.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GegenbauerParams {
    lambda: f64,
}

impl GegenbauerParams {
    /// Validates `lambda > -1/2`, finiteness and the magnitude guard.
    pub fn new(lambda: f64) -> Result<Self> {
        if !lambda.is_finite() || lambda <= -0.5 {
            return Err(Error::LambdaOutOfDomain(lambda));
        }
        if lambda.abs() > MAX_PARAM_MAGNITUDE {
            return Err(Error::MagnitudeGuard(lambda));
        }
        Ok(Self { lambda })
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// True when lambda is within 1e-6 of the boundary -1/2.
    pub fn near_boundary(&self) -> bool {
        self.lambda + 0.5 <= BOUNDARY_FLAG_DISTANCE
    }

    /// The Jacobi parameters alpha = beta = lambda - 1/2.
    ///
    /// The zero sets of the degree-n Gegenbauer polynomial with parameter
    /// lambda and of the Jacobi polynomial with alpha = beta = lambda - 1/2
    /// coincide for every lambda > -1/2. This includes lambda = 0 (Chebyshev
    /// first kind), where the proportionality constant between the two
    /// normalizations degenerates but both polynomials still vanish at
    /// cos((2k-1)pi/(2n)).
    pub fn to_jacobi(&self) -> JacobiParams {
        JacobiParams {
            alpha: self.lambda - 0.5,
            beta: self.lambda - 0.5,
        }
    }
}

/// Polynomial degree, guarded to 1..=10000.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Degree(u32);

impl Degree {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 || n > MAX_DEGREE {
            return Err(Error::DegreeOutOfRange(u64::from(n)));
        }
        Ok(Self(n))
    }

    pub fn get(&self) -> u32 {
        self.0
    }

    pub fn as_f64(&self) -> f64 {
        f64::from(self.0)
    }
}

/// Parameters of either family, as accepted by the bound catalogue and the
/// certification sweep.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum FamilyParams {
    Jacobi(JacobiParams),
    Gegenbauer(GegenbauerParams),
}

impl FamilyParams {
    pub fn family_name(&self) -> &'static str {
        match self {
            FamilyParams::Jacobi(_) => "jacobi",
            FamilyParams::Gegenbauer(_) => "gegenbauer",
        }
    }

    /// Jacobi parameters whose zero set matches this entry
    /// (identity for Jacobi, alpha = beta = lambda - 1/2 for Gegenbauer).
    pub fn zero_equivalent_jacobi(&self) -> JacobiParams {
        match self {
            FamilyParams::Jacobi(p) => *p,
            FamilyParams::Gegenbauer(g) => g.to_jacobi(),
        }
    }
}

/// The Gegenbauer -> Jacobi parameter map alpha = beta = lambda - 1/2.
pub fn gegenbauer_to_jacobi(g: GegenbauerParams) -> JacobiParams {
    g.to_jacobi()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_out_of_domain() {
        assert!(matches!(
            JacobiParams::new(-1.0, 0.0),
            Err(Error::AlphaOutOfDomain(_))
        ));
        assert!(matches!(
            JacobiParams::new(0.0, -1.5),
            Err(Error::BetaOutOfDomain(_))
        ));
        assert!(matches!(
            JacobiParams::new(f64::NAN, 0.0),
            Err(Error::AlphaOutOfDomain(_))
        ));
        assert!(matches!(
            JacobiParams::new(2.0e4, 0.0),
            Err(Error::MagnitudeGuard(_))
        ));
        assert!(matches!(
            GegenbauerParams::new(-0.5),
            Err(Error::LambdaOutOfDomain(_))
        ));
        assert!(matches!(
            GegenbauerParams::new(f64::INFINITY),
            Err(Error::LambdaOutOfDomain(_))
        ));
        assert!(matches!(Degree::new(0), Err(Error::DegreeOutOfRange(0))));
        assert!(matches!(
            Degree::new(10_001),
            Err(Error::DegreeOutOfRange(_))
        ));
    }

    #[test]
    fn gegenbauer_map_examples() {
        // Legendre, Chebyshev-T and Chebyshev-U cases.
        let legendre = GegenbauerParams::new(0.5).unwrap().to_jacobi();
        assert_eq!((legendre.alpha(), legendre.beta()), (0.0, 0.0));
        let cheb_t = GegenbauerParams::new(0.0).unwrap().to_jacobi();
        assert_eq!((cheb_t.alpha(), cheb_t.beta()), (-0.5, -0.5));
        let cheb_u = GegenbauerParams::new(1.0).unwrap().to_jacobi();
        assert_eq!((cheb_u.alpha(), cheb_u.beta()), (0.5, 0.5));
    }

    #[test]
    fn boundary_proximity_is_flagged() {
        assert!(JacobiParams::new(-1.0 + 1.0e-7, 0.0).unwrap().near_boundary());
        assert!(!JacobiParams::new(-0.99, 0.0).unwrap().near_boundary());
        assert!(GegenbauerParams::new(-0.5 + 1.0e-7).unwrap().near_boundary());
        assert!(!GegenbauerParams::new(-0.49).unwrap().near_boundary());
    }
}
