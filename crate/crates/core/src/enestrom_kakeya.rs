//! Coefficient-ratio annulus bounds on *all* zeros at once.
//!
//! In the variable `z = (x-1)/(x+1)` the Jacobi polynomial becomes, up to a
//! nonvanishing prefactor, a polynomial with positive coefficients
//!
//! ```text
//! a_k = C(n, k) (n+beta-k+1)_k / (alpha+1)_k,
//! ```
//!
//! and for such polynomials every root modulus lies between the smallest and
//! largest consecutive-coefficient ratio `a_{k-1}/a_k`. The ratio has the
//! closed form `k(alpha+k) / ((n+1-k)(n+beta+1-k))` and increases with `k`,
//! so the extremes are attained at `k = 1` and `k = n`. On (-1, 1) the map
//! satisfies `|z| = (1-x)/(1+x)`, which turns the annulus into a two-sided
//! constraint on every zero; specialized to the extreme zeros it reproduces
//! the coefficient-ratio outer pair of the bound catalogue exactly.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::params::{Degree, JacobiParams};

/// Degree guard for materializing the coefficient vector: the entries grow
/// combinatorially and overflow doubles well before the general degree
/// guard. Ratio and annulus computations use the closed formula and carry no
/// such limit.
pub const MAX_COEFFICIENT_DEGREE: u32 = 500;

/// The positive coefficients of the transformed polynomial.
#[derive(Debug, Clone, Serialize)]
pub struct EkCoefficients {
    pub n: u32,
    pub params: JacobiParams,
    /// `a_0 ..= a_n`, all strictly positive for alpha, beta > -1.
    pub a: Vec<f64>,
}

/// Two-sided constraint `rho_min <= (1-x)/(1+x) <= rho_max` satisfied by
/// every zero `x` of `P_n^(alpha,beta)`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ZeroAnnulus {
    pub n: u32,
    pub params: JacobiParams,
    pub rho_min: f64,
    pub rho_max: f64,
}

/// Consecutive-coefficient ratio `a_{k-1}/a_k` in closed form.
fn ratio(n: f64, alpha: f64, beta: f64, k: f64) -> f64 {
    k * (alpha + k) / ((n + 1.0 - k) * (n + beta + 1.0 - k))
}

/// Materialize the coefficient vector, as running products of the closed
/// ratios (`a_k = a_{k-1} / ratio(k)`); this avoids forming factorials but
/// entries can still overflow for extreme beta, hence the degree guard.
pub fn ek_coefficients(n: Degree, p: JacobiParams) -> Result<EkCoefficients> {
    if n.get() > MAX_COEFFICIENT_DEGREE {
        return Err(Error::CoefficientOverflow {
            n: n.get(),
            max: MAX_COEFFICIENT_DEGREE,
        });
    }
    let nn = n.as_f64();
    let mut a = Vec::with_capacity(n.get() as usize + 1);
    a.push(1.0);
    for k in 1..=n.get() {
        let prev = *a.last().unwrap();
        let next = prev / ratio(nn, p.alpha(), p.beta(), f64::from(k));
        if !next.is_finite() {
            return Err(Error::CoefficientOverflow {
                n: n.get(),
                max: MAX_COEFFICIENT_DEGREE,
            });
        }
        a.push(next);
    }
    Ok(EkCoefficients {
        n: n.get(),
        params: p,
        a,
    })
}

/// The extreme consecutive-coefficient ratios
/// `(a_0/a_1, a_{n-1}/a_n) = ((alpha+1)/(n(n+beta)), n(n+alpha)/(beta+1))`.
///
/// The ratio sequence increases with k, so these are the annulus radii.
pub fn ratio_extremes(n: Degree, p: JacobiParams) -> (f64, f64) {
    let nn = n.as_f64();
    (
        (p.alpha() + 1.0) / (nn * (nn + p.beta())),
        nn * (nn + p.alpha()) / (p.beta() + 1.0),
    )
}

/// The annulus constraint on every zero of `P_n^(alpha,beta)`.
pub fn ek_zero_annulus(n: Degree, p: JacobiParams) -> ZeroAnnulus {
    let (rho_min, rho_max) = ratio_extremes(n, p);
    ZeroAnnulus {
        n: n.get(),
        params: p,
        rho_min,
        rho_max,
    }
}

impl ZeroAnnulus {
    /// Whether a zero `x` in (-1, 1) satisfies the two-sided constraint,
    /// with a relative slack on both comparisons.
    pub fn contains(&self, x: f64, relative_slack: f64) -> bool {
        let z = (1.0 - x) / (1.0 + x);
        z >= self.rho_min * (1.0 - relative_slack) && z <= self.rho_max * (1.0 + relative_slack)
    }

    /// The endpoint specializations as gap bounds: a lower bound on
    /// `1 - x_max` from `rho_min` and a lower bound on `1 + x_min` from
    /// `rho_max`. Algebraically identical to the coefficient-ratio outer
    /// pair of the bound catalogue.
    pub fn endpoint_gap_bounds(&self) -> (f64, f64) {
        (
            2.0 * self.rho_min / (1.0 + self.rho_min),
            2.0 / (1.0 + self.rho_max),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{evaluate_bound, BoundId};
    use crate::params::FamilyParams;
    use crate::polyeval::{eval_jacobi, pochhammer};
    use crate::zeros::all_zeros;

    fn deg(n: u32) -> Degree {
        Degree::new(n).unwrap()
    }

    fn jac(a: f64, b: f64) -> JacobiParams {
        JacobiParams::new(a, b).unwrap()
    }

    /// Direct evaluation of the coefficient formula, as an oracle for the
    /// running-product construction.
    fn coefficient_direct(n: u32, p: JacobiParams, k: u32) -> f64 {
        let binom = pochhammer(f64::from(n - k) + 1.0, k) / pochhammer(1.0, k);
        binom * pochhammer(f64::from(n) + p.beta() - f64::from(k) + 1.0, k)
            / pochhammer(p.alpha() + 1.0, k)
    }

    #[test]
    fn coefficients_low_degree() {
        let c = ek_coefficients(deg(1), jac(0.0, 0.0)).unwrap();
        assert_eq!(c.a, vec![1.0, 1.0]);

        // Brute-force check for the Legendre quadratic: in the transformed
        // variable, (3x^2-1)/2 * 4/(x+1)^2 expands to 1 + 4z + z^2.
        let c = ek_coefficients(deg(2), jac(0.0, 0.0)).unwrap();
        assert_eq!(c.a.len(), 3);
        assert!((c.a[0] - 1.0).abs() < 1e-14);
        assert!((c.a[1] - 4.0).abs() < 1e-14);
        assert!((c.a[2] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn coefficients_match_direct_formula_and_stay_positive() {
        for &(a, b) in &[(-0.99, -0.99), (0.0, 0.0), (1.0, 2.0), (10.0, -0.5)] {
            for &n in &[1u32, 2, 5, 10, 20] {
                let c = ek_coefficients(deg(n), jac(a, b)).unwrap();
                for (k, &coeff) in c.a.iter().enumerate() {
                    assert!(coeff > 0.0, "a={a} b={b} n={n} k={k}");
                    let direct = coefficient_direct(n, jac(a, b), k as u32);
                    assert!(
                        (coeff - direct).abs() <= 1e-11 * direct.abs(),
                        "a={a} b={b} n={n} k={k}: {coeff} vs {direct}"
                    );
                }
            }
        }
    }

    #[test]
    fn reconstruction_matches_recurrence_evaluation() {
        // sum a_k z^k times the prefactor ((x+1)/2)^n C(n+alpha, n) must
        // reproduce the recurrence value.
        for &(a, b) in &[(0.0, 0.0), (0.5, 1.5), (-0.25, 2.0)] {
            for n in 1..=10u32 {
                let c = ek_coefficients(deg(n), jac(a, b)).unwrap();
                let binom = pochhammer(a + 1.0, n) / pochhammer(1.0, n);
                for i in 0..=10 {
                    let x = -0.95 + 0.19 * f64::from(i);
                    let z = (x - 1.0) / (x + 1.0);
                    let series: f64 = c
                        .a
                        .iter()
                        .rev()
                        .fold(0.0, |acc: f64, &coeff| acc.mul_add(z, coeff));
                    let prefactor = (0.5 * (x + 1.0)).powi(n as i32) * binom;
                    let value = prefactor * series;
                    let reference = eval_jacobi(deg(n), jac(a, b), x);
                    // near zeros of P the relative comparison needs a floor
                    // set by the cancellation scale of the series
                    let series_mag: f64 =
                        c.a.iter()
                            .enumerate()
                            .map(|(k, &coeff)| (coeff * z.powi(k as i32)).abs())
                            .sum();
                    let tol = 1e-9 * reference.abs().max(value.abs())
                        + 1e-12 * (prefactor * series_mag).abs();
                    assert!(
                        (value - reference).abs() <= tol,
                        "a={a} b={b} n={n} x={x}: {value} vs {reference}"
                    );
                }
            }
        }
    }

    #[test]
    fn coefficient_guard_triggers() {
        assert!(matches!(
            ek_coefficients(deg(501), jac(0.0, 0.0)),
            Err(Error::CoefficientOverflow { .. })
        ));
    }

    #[test]
    fn ratio_extreme_values() {
        // Single ratio at n = 1: (alpha+1)/(beta+1) on both ends.
        let (lo, hi) = ratio_extremes(deg(1), jac(1.0, 3.0));
        assert!((lo - 0.5).abs() < 1e-15);
        assert!((hi - 0.5).abs() < 1e-15);

        // Closed-formula values at k = 1 and k = n. (The ratio formula gives
        // a_1/a_2 = 4 for the Legendre quadratic [1, 4, 1].)
        let (lo, hi) = ratio_extremes(deg(2), jac(0.0, 0.0));
        assert!((lo - 0.25).abs() < 1e-15);
        assert!((hi - 4.0).abs() < 1e-15);

        let (lo, hi) = ratio_extremes(deg(5), jac(1.0, 2.0));
        assert!((lo - 2.0 / 35.0).abs() < 1e-15);
        assert!((hi - 10.0).abs() < 1e-15);
    }

    #[test]
    fn ratio_sequence_increases_and_matches_coefficients() {
        for &(a, b) in &[(-0.9, 0.0), (0.0, 0.0), (2.5, 10.0), (100.0, -0.5)] {
            for &n in &[2u32, 5, 10, 20, 50] {
                let nn = f64::from(n);
                let mut prev = 0.0;
                for k in 1..=n {
                    let r = super::ratio(nn, a, b, f64::from(k));
                    assert!(r > prev, "ratio not increasing at a={a} b={b} n={n} k={k}");
                    prev = r;
                }
                if n <= 20 {
                    let c = ek_coefficients(deg(n), jac(a, b)).unwrap();
                    for k in 1..=(n as usize) {
                        let from_coeffs = c.a[k - 1] / c.a[k];
                        let closed = super::ratio(nn, a, b, k as f64);
                        assert!((from_coeffs - closed).abs() <= 1e-11 * closed);
                    }
                }
            }
        }
    }

    #[test]
    fn annulus_contains_every_oracle_zero() {
        for &(a, b) in &[(-0.99, -0.99), (0.0, 0.0), (0.5, 2.5), (10.0, 100.0)] {
            for &n in &[1u32, 2, 3, 8, 20, 50] {
                let annulus = ek_zero_annulus(deg(n), jac(a, b));
                let zs = all_zeros(deg(n), jac(a, b)).unwrap();
                for &z in &zs.zeros {
                    assert!(
                        annulus.contains(z, 1e-11),
                        "zero {z} escapes annulus at a={a} b={b} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn legendre_quadratic_annulus() {
        let annulus = ek_zero_annulus(deg(2), jac(0.0, 0.0));
        assert!((annulus.rho_min - 0.25).abs() < 1e-15);
        assert!((annulus.rho_max - 4.0).abs() < 1e-15);
        let root = 1.0 / 3f64.sqrt();
        // (1-x)/(1+x) is about 0.26795 at +root and 3.73205 at -root.
        for z in [root, -root] {
            assert!(annulus.contains(z, 1e-11));
        }

        // n = 1 Legendre: rho_min = rho_max = 1 forces the zero to be 0.
        let exact = ek_zero_annulus(deg(1), jac(0.0, 0.0));
        assert_eq!((exact.rho_min, exact.rho_max), (1.0, 1.0));
        assert!(exact.contains(0.0, 0.0));
    }

    #[test]
    fn endpoint_specialization_reproduces_outer_pair() {
        for &(a, b) in &[(-0.99, -0.99), (0.0, 0.0), (0.5, 2.5), (100.0, 10.0)] {
            for &n in &[1u32, 2, 7, 20, 100] {
                let (max_gap, min_gap) = ek_zero_annulus(deg(n), jac(a, b)).endpoint_gap_bounds();
                let rows = evaluate_bound(
                    BoundId::Thm1Outer,
                    deg(n),
                    FamilyParams::Jacobi(jac(a, b)),
                )
                .unwrap();
                assert!(
                    (max_gap - rows[0].value).abs() <= 1e-13 * rows[0].value,
                    "a={a} b={b} n={n}"
                );
                assert!(
                    (min_gap - rows[1].value).abs() <= 1e-13 * rows[1].value,
                    "a={a} b={b} n={n}"
                );
            }
        }
    }
}
