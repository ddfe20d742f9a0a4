//! High-accuracy zeros of Jacobi polynomials, independent of any bound.
//!
//! The zeros of `P_n^(a,b)` are the eigenvalues of the symmetric tridiagonal
//! Jacobi matrix built from the monic recurrence coefficients. Eigenvalues
//! are found by bisection on Sturm-sequence counts, which is deterministic,
//! gives a certified bracketing interval per zero, and has no iteration-order
//! sensitivity; each zero then gets at most two Newton polish steps that are
//! rejected if they leave the certified interval.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::params::{Degree, JacobiParams};
use crate::polyeval::{eval_jacobi, eval_jacobi_derivative};

/// Symmetric tridiagonal matrix with nonnegative off-diagonal.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SymTridiag {
    diag: Vec<f64>,
    offdiag: Vec<f64>,
}

impl SymTridiag {
    pub fn order(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn offdiag(&self) -> &[f64] {
        &self.offdiag
    }
}

/// All zeros of one polynomial, sorted ascending, with accuracy diagnostics.
#[derive(Debug, Clone, Serialize)]
pub struct ZeroSet {
    pub degree: u32,
    pub params: JacobiParams,
    /// Strictly increasing zeros, all inside (-1, 1).
    pub zeros: Vec<f64>,
    /// Per-zero scaled residual |P(x)/P'(x)| (the Newton correction length;
    /// invariant under rescaling of the polynomial). Zero for closed forms.
    pub residuals: Vec<f64>,
    /// Parameters within 1e-6 of the domain boundary: accepted, but
    /// conditioning degrades.
    pub near_boundary: bool,
}

impl ZeroSet {
    /// Largest per-zero scaled residual.
    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }

    /// Smallest and largest zero.
    pub fn extremes(&self) -> (f64, f64) {
        (self.zeros[0], self.zeros[self.zeros.len() - 1])
    }
}

/// Chebyshev polynomial kind for the closed-form oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChebyshevKind {
    /// lambda = 0 (alpha = beta = -1/2); zeros cos((2k-1)pi/(2n)).
    First,
    /// lambda = 1 (alpha = beta = 1/2); zeros cos(k pi/(n+1)).
    Second,
}

/// Jacobi matrix of the three-term recurrence: its eigenvalues are exactly
/// the zeros of `P_n^(alpha,beta)`. All entries have magnitude at most 1.
pub fn jacobi_matrix(n: Degree, p: JacobiParams) -> SymTridiag {
    let (a, b) = (p.alpha(), p.beta());
    let n = n.get() as usize;
    let mut diag = Vec::with_capacity(n);
    let mut offdiag = Vec::with_capacity(n.saturating_sub(1));
    diag.push((b - a) / (a + b + 2.0));
    for k in 1..n {
        let k = k as f64;
        let c = 2.0 * k + a + b;
        diag.push((b * b - a * a) / (c * (c + 2.0)));
        // Monic recurrence coefficient b_k; k = 1 needs the dedicated form
        // (the general one is 0/0 when a + b = -1).
        let bk = if k == 1.0 {
            4.0 * (a + 1.0) * (b + 1.0) / ((a + b + 2.0).powi(2) * (a + b + 3.0))
        } else {
            4.0 * k * (k + a) * (k + b) * (k + a + b) / (c * c * (c + 1.0) * (c - 1.0))
        };
        offdiag.push(bk.sqrt());
    }
    SymTridiag { diag, offdiag }
}

/// Number of eigenvalues of `t` strictly below `x`, from the signs of the
/// LDL^T pivots (Sturm sequence).
fn sturm_count(t: &SymTridiag, x: f64) -> usize {
    // Pivot floor, in the spirit of LAPACK's pivmin; entries are O(1).
    let pivmin = f64::MIN_POSITIVE / f64::EPSILON;
    let mut count = 0usize;
    let mut q = t.diag[0] - x;
    if q < 0.0 {
        count += 1;
    }
    for i in 1..t.diag.len() {
        let q_safe = if q.abs() < pivmin {
            if q < 0.0 {
                -pivmin
            } else {
                pivmin
            }
        } else {
            q
        };
        let e = t.offdiag[i - 1];
        q = (t.diag[i] - x) - e * e / q_safe;
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// Width at which bisection stops: 8 machine epsilons (absolute; all
/// eigenvalues lie in (-1, 1)).
const BISECTION_WIDTH: f64 = 8.0 * f64::EPSILON;

/// Compute all zeros of `P_n^(alpha,beta)` to near machine precision.
///
/// Eigen-bisection on the Jacobi matrix, then at most two Newton steps per
/// zero using the recurrence evaluation; a Newton step is rejected if it
/// leaves the certified bisection bracket. Fails only on an internal fault
/// (which guarded inputs must not produce).
pub fn all_zeros(n: Degree, p: JacobiParams) -> Result<ZeroSet> {
    let t = jacobi_matrix(n, p);
    let order = t.order();

    // Gershgorin bounds; the zeros also all lie in (-1, 1).
    let mut lo = f64::MAX;
    let mut hi = f64::MIN;
    for i in 0..order {
        let left = if i > 0 { t.offdiag[i - 1] } else { 0.0 };
        let right = if i < order - 1 { t.offdiag[i] } else { 0.0 };
        lo = lo.min(t.diag[i] - left - right);
        hi = hi.max(t.diag[i] + left + right);
    }
    lo = lo.max(-1.0) - 1e-3;
    hi = hi.min(1.0) + 1e-3;

    let mut zeros = Vec::with_capacity(order);
    let mut residuals = Vec::with_capacity(order);
    for k in 0..order {
        let (a, b) = bisect_eigenvalue(&t, k, lo, hi)?;
        let mut x = 0.5 * (a + b);
        // Newton polish, capped at two steps, confined to the bracket.
        let mut residual = newton_residual(n, p, x);
        for _ in 0..2 {
            let value = eval_jacobi(n, p, x);
            let slope = eval_jacobi_derivative(n, p, x, 1)?;
            if slope == 0.0 || !slope.is_finite() || !value.is_finite() {
                break;
            }
            let next = x - value / slope;
            if !(a..=b).contains(&next) {
                break;
            }
            let next_residual = newton_residual(n, p, next);
            if next_residual >= residual {
                break;
            }
            x = next;
            residual = next_residual;
        }
        zeros.push(x);
        residuals.push(residual);
    }

    // Zeros of Jacobi polynomials are simple for alpha, beta > -1; a cluster
    // narrower than 4 eps is an eigensolver fault, not a genuine merge.
    for w in zeros.windows(2) {
        if w[1] - w[0] < 4.0 * f64::EPSILON * w[0].abs().max(1.0) {
            return Err(Error::OracleFault(format!(
                "eigenvalue cluster at {} and {} for n={}, alpha={}, beta={}",
                w[0],
                w[1],
                n.get(),
                p.alpha(),
                p.beta()
            )));
        }
    }
    if zeros.iter().any(|z| z.abs() >= 1.0) {
        return Err(Error::OracleFault(format!(
            "zero outside (-1, 1) for n={}, alpha={}, beta={}",
            n.get(),
            p.alpha(),
            p.beta()
        )));
    }

    Ok(ZeroSet {
        degree: n.get(),
        params: p,
        zeros,
        residuals,
        near_boundary: p.near_boundary(),
    })
}

/// The extreme zeros `(x_min, x_max)` of `P_n^(alpha,beta)`.
pub fn extreme_zeros(n: Degree, p: JacobiParams) -> Result<(f64, f64)> {
    Ok(all_zeros(n, p)?.extremes())
}

/// Closed-form Chebyshev zeros, ascending: an oracle independent of the
/// eigensolver.
pub fn chebyshev_closed_form(n: Degree, kind: ChebyshevKind) -> ZeroSet {
    let count = n.get();
    let params = match kind {
        ChebyshevKind::First => JacobiParams::new(-0.5, -0.5).unwrap(),
        ChebyshevKind::Second => JacobiParams::new(0.5, 0.5).unwrap(),
    };
    let mut zeros: Vec<f64> = (1..=count)
        .map(|k| match kind {
            ChebyshevKind::First => {
                (f64::from(2 * k - 1) * std::f64::consts::PI / f64::from(2 * count)).cos()
            }
            ChebyshevKind::Second => {
                (f64::from(k) * std::f64::consts::PI / f64::from(count + 1)).cos()
            }
        })
        .collect();
    zeros.reverse();
    let residuals = vec![0.0; count as usize];
    ZeroSet {
        degree: count,
        params,
        zeros,
        residuals,
        near_boundary: false,
    }
}

fn bisect_eigenvalue(t: &SymTridiag, k: usize, mut lo: f64, mut hi: f64) -> Result<(f64, f64)> {
    for _ in 0..200 {
        if hi - lo <= BISECTION_WIDTH {
            return Ok((lo, hi));
        }
        let mid = 0.5 * (lo + hi);
        if sturm_count(t, mid) <= k {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    if hi - lo <= BISECTION_WIDTH {
        Ok((lo, hi))
    } else {
        Err(Error::OracleFault(format!(
            "bisection for eigenvalue {k} did not converge: [{lo}, {hi}]"
        )))
    }
}

fn newton_residual(n: Degree, p: JacobiParams, x: f64) -> f64 {
    let value = eval_jacobi(n, p, x);
    let slope = eval_jacobi_derivative(n, p, x, 1).unwrap_or(f64::NAN);
    if slope == 0.0 {
        return value.abs();
    }
    let r = (value / slope).abs();
    if r.is_finite() {
        r
    } else {
        value.abs()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::GegenbauerParams;

    fn jac(alpha: f64, beta: f64) -> JacobiParams {
        JacobiParams::new(alpha, beta).unwrap()
    }

    fn deg(n: u32) -> Degree {
        Degree::new(n).unwrap()
    }

    #[test]
    fn matrix_low_order_forms() {
        let t = jacobi_matrix(deg(1), jac(0.0, 0.0));
        assert_eq!(t.diag(), &[0.0]);
        assert!(t.offdiag().is_empty());

        // single zero of P_1^(2,5) at (beta-alpha)/(alpha+beta+2) = 1/3
        let zs = all_zeros(deg(1), jac(2.0, 5.0)).unwrap();
        assert!((zs.zeros[0] - 1.0 / 3.0).abs() < 1e-15);

        // symmetric weight: zero diagonal
        let t = jacobi_matrix(deg(2), jac(1.25, 1.25));
        assert_eq!(t.diag(), &[0.0, 0.0]);

        // Legendre n=2 eigenvalues are +-1/sqrt(3)
        let zs = all_zeros(deg(2), jac(0.0, 0.0)).unwrap();
        let root = 1.0 / 3f64.sqrt();
        assert!((zs.zeros[0] + root).abs() < 1e-14);
        assert!((zs.zeros[1] - root).abs() < 1e-14);
    }

    #[test]
    fn matrix_entries_bounded_by_one() {
        for &(a, b) in &[(-0.99, -0.99), (0.0, 0.0), (100.0, -0.5), (10.0, 100.0)] {
            let t = jacobi_matrix(deg(40), jac(a, b));
            assert!(t.diag().iter().all(|d| d.abs() <= 1.0));
            assert!(t.offdiag().iter().all(|e| (0.0..=1.0).contains(e)));
        }
    }

    #[test]
    fn legendre_five_matches_reference() {
        let zs = all_zeros(deg(5), jac(0.0, 0.0)).unwrap();
        let expected = [
            -0.9061798459386640,
            -0.5384693101056831,
            0.0,
            0.5384693101056831,
            0.9061798459386640,
        ];
        for (z, e) in zs.zeros.iter().zip(expected) {
            assert!((z - e).abs() < 1e-12, "{z} vs {e}");
        }
        assert!(zs.max_residual() <= 1e-12);
    }

    #[test]
    fn chebyshev_first_kind_closed_form_agreement() {
        let p = jac(-0.5, -0.5);
        for n in 1..=50u32 {
            let zs = all_zeros(deg(n), p).unwrap();
            let cf = chebyshev_closed_form(deg(n), ChebyshevKind::First);
            for (z, e) in zs.zeros.iter().zip(&cf.zeros) {
                assert!((z - e).abs() < 1e-12, "n={n}: {z} vs {e}");
            }
        }
    }

    #[test]
    fn chebyshev_second_kind_closed_form_agreement() {
        let p = jac(0.5, 0.5);
        for n in 1..=50u32 {
            let zs = all_zeros(deg(n), p).unwrap();
            let cf = chebyshev_closed_form(deg(n), ChebyshevKind::Second);
            for (z, e) in zs.zeros.iter().zip(&cf.zeros) {
                assert!((z - e).abs() < 1e-12, "n={n}: {z} vs {e}");
            }
        }
    }

    #[test]
    fn closed_form_spec_values() {
        // cos(pi/2) evaluates to ~6e-17 in floating point
        let t1 = chebyshev_closed_form(deg(1), ChebyshevKind::First);
        assert!(t1.zeros[0].abs() < 1e-16);

        let t5 = chebyshev_closed_form(deg(5), ChebyshevKind::First);
        let largest = t5.zeros[4];
        assert!((largest - 0.9510565162951535).abs() < 1e-15);
        assert!((1.0 - largest * largest - 0.09549150281252629).abs() < 1e-15);

        let u5 = chebyshev_closed_form(deg(5), ChebyshevKind::Second);
        let largest = u5.zeros[4];
        assert!((largest - 0.8660254037844387).abs() < 1e-15);
        assert!((1.0 - largest * largest - 0.25).abs() < 1e-15);
    }

    #[test]
    fn extreme_zeros_examples() {
        let (lo, hi) = extreme_zeros(deg(1), jac(0.0, 0.0)).unwrap();
        assert_eq!((lo, hi), (0.0, 0.0));
        let (lo, hi) = extreme_zeros(deg(2), jac(0.0, 0.0)).unwrap();
        assert!((hi - 0.5773502691896258).abs() < 1e-14);
        assert!((lo + 0.5773502691896258).abs() < 1e-14);
        // lambda = 0 maps to alpha = beta = -1/2
        let g = GegenbauerParams::new(0.0).unwrap();
        let (lo, hi) = extreme_zeros(deg(5), g.to_jacobi()).unwrap();
        assert!((hi - 0.9510565162951535).abs() < 1e-13);
        assert!((lo + 0.9510565162951535).abs() < 1e-13);
    }

    #[test]
    fn zeros_sorted_inside_interval_with_small_residuals() {
        let grid = [
            (-0.99, -0.99),
            (-0.5, 0.0),
            (0.0, 0.0),
            (0.5, 2.5),
            (10.0, 100.0),
            (100.0, 100.0),
        ];
        for &(a, b) in &grid {
            for &n in &[1u32, 2, 3, 7, 20, 50] {
                let zs = all_zeros(deg(n), jac(a, b)).unwrap();
                assert!(zs.zeros.windows(2).all(|w| w[0] < w[1]));
                assert!(zs.zeros.iter().all(|z| z.abs() < 1.0));
                assert!(
                    zs.max_residual() <= 1e-12,
                    "a={a} b={b} n={n}: residual {}",
                    zs.max_residual()
                );
            }
        }
    }

    #[test]
    fn interlacing_holds() {
        for &(a, b) in &[(-0.9, 1.0), (0.0, 0.0), (2.5, -0.5), (100.0, 10.0)] {
            for n in 2..=50u32 {
                let coarse = all_zeros(deg(n - 1), jac(a, b)).unwrap();
                let fine = all_zeros(deg(n), jac(a, b)).unwrap();
                for (k, z) in coarse.zeros.iter().enumerate() {
                    assert!(
                        fine.zeros[k] < *z && *z < fine.zeros[k + 1],
                        "interlacing broken at a={a} b={b} n={n} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn reflection_symmetry_of_extremes() {
        for &(a, b) in &[(0.0, 1.0), (-0.5, 2.5), (10.0, -0.99)] {
            for &n in &[1u32, 2, 5, 20] {
                let (lo, _) = extreme_zeros(deg(n), jac(a, b)).unwrap();
                let (_, hi) = extreme_zeros(deg(n), jac(b, a)).unwrap();
                assert!((lo + hi).abs() < 1e-12, "a={a} b={b} n={n}");
            }
        }
    }

    #[test]
    fn near_boundary_flagging() {
        let zs = all_zeros(deg(3), jac(-1.0 + 1e-8, 0.0)).unwrap();
        assert!(zs.near_boundary);
        let zs = all_zeros(deg(3), jac(-0.5, 0.0)).unwrap();
        assert!(!zs.near_boundary);
    }
}
