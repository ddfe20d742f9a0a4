//! Evaluation of Jacobi polynomials and their derivatives.
//!
//! Values follow the Szegő normalization, i.e. the one fixed by the explicit
//! sum
//!
//! ```text
//! P_n^(a,b)(x) = 2^-n * sum_k C(n+a, n-k) C(n+b, k) (x-1)^(n-k) (x+1)^k,
//! ```
//!
//! so that `P_n^(a,b)(1) = C(n+a, n)`. Zeros do not depend on normalization;
//! the choice only matters when values or derivatives are compared across
//! routines. Evaluation runs the standard three-term recurrence, which is
//! stable on [-1, 1]; the explicit sum loses accuracy to cancellation for
//! larger n and is used only as a cross-check (see the tests).
//!
//! Derivatives use the parameter-shift identity
//! `d/dx P_n^(a,b) = (n+a+b+1)/2 * P_{n-1}^(a+1,b+1)` applied q times.

use crate::error::{Error, Result};
use crate::params::{Degree, GegenbauerParams, JacobiParams};

/// Evaluate `P_n^(alpha,beta)(x)` by the three-term recurrence.
///
/// `x` must be finite; values for |x| moderately outside [-1, 1] are fine
/// (the recurrence does not require orthogonality-range arguments).
pub fn eval_jacobi(n: Degree, p: JacobiParams, x: f64) -> f64 {
    eval_jacobi_usize(n.get(), p.alpha(), p.beta(), x)
}

/// Evaluate the q-th derivative of `P_n^(alpha,beta)` at `x`.
///
/// Uses the parameter-shift identity q times; `q = 0` agrees with
/// [`eval_jacobi`] and `q > n` yields 0. Orders above `n + 2` are rejected:
/// they are never needed and usually indicate a caller bug.
pub fn eval_jacobi_derivative(n: Degree, p: JacobiParams, x: f64, q: u32) -> Result<f64> {
    if q > n.get() + 2 {
        return Err(Error::DerivativeOrder { n: n.get(), q });
    }
    if !x.is_finite() {
        return Err(Error::NonFinitePoint(x));
    }
    Ok(derivative_unchecked(n.get(), p.alpha(), p.beta(), x, q))
}

/// Scaled residual of the differential equation satisfied by the q-th
/// derivative of the degree-n Gegenbauer polynomial,
///
/// ```text
/// (1-x^2) y^(q+2) - (2*lambda+2q+1) x y^(q+1) + (n-q)(n+2*lambda+q) y^(q),
/// ```
///
/// evaluated with y = the Jacobi polynomial with alpha = beta = lambda - 1/2
/// (any solution of the equation works; this one is available for every
/// lambda > -1/2). The raw residual is divided by
/// `max(1, |y^(q)|, |y^(q+1)|, |y^(q+2)|)` so tolerances are
/// parameter-independent.
pub fn ode_residual(n: Degree, g: GegenbauerParams, x: f64, q: u32) -> Result<f64> {
    if n.get() < 2 || q > n.get() - 2 {
        return Err(Error::OdeOrder { n: n.get(), q });
    }
    if !x.is_finite() {
        return Err(Error::NonFinitePoint(x));
    }
    if x.abs() > 1.0 {
        return Err(Error::PointOutOfRange(x));
    }
    let lambda = g.lambda();
    let p = g.to_jacobi();
    let nn = n.as_f64();
    let qq = f64::from(q);
    let y0 = derivative_unchecked(n.get(), p.alpha(), p.beta(), x, q);
    let y1 = derivative_unchecked(n.get(), p.alpha(), p.beta(), x, q + 1);
    let y2 = derivative_unchecked(n.get(), p.alpha(), p.beta(), x, q + 2);
    let residual = (1.0 - x * x) * y2 - (2.0 * lambda + 2.0 * qq + 1.0) * x * y1
        + (nn - qq) * (nn + 2.0 * lambda + qq) * y0;
    let scale = 1.0_f64.max(y0.abs()).max(y1.abs()).max(y2.abs());
    Ok(residual / scale)
}

/// Pochhammer symbol (rising factorial) `(b)_k = b (b+1) ... (b+k-1)`,
/// with `(b)_0 = 1`.
pub fn pochhammer(b: f64, k: u32) -> f64 {
    let mut acc = 1.0;
    for j in 0..k {
        acc *= b + f64::from(j);
    }
    acc
}

fn derivative_unchecked(n: u32, alpha: f64, beta: f64, x: f64, q: u32) -> f64 {
    if q > n {
        return 0.0;
    }
    if q == 0 {
        return eval_jacobi_usize(n, alpha, beta, x);
    }
    // d^q/dx^q P_n^(a,b) = 2^-q (n+a+b+1)_q P_{n-q}^(a+q, b+q)
    let shift = f64::from(q);
    let factor = pochhammer(f64::from(n) + alpha + beta + 1.0, q) / 2f64.powi(q as i32);
    factor * eval_jacobi_usize(n - q, alpha + shift, beta + shift, x)
}

fn eval_jacobi_usize(n: u32, a: f64, b: f64, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 0.5 * (a + b + 2.0) * x + 0.5 * (a - b);
    for k in 2..=n {
        let k = f64::from(k);
        let c = 2.0 * k + a + b;
        // 2k(k+a+b)(c-2) P_k = (c-1)[c(c-2)x + a^2-b^2] P_{k-1}
        //                      - 2(k+a-1)(k+b-1)c P_{k-2}
        let denom = 2.0 * k * (k + a + b) * (c - 2.0);
        let t1 = (c - 1.0) * ((c * (c - 2.0)) * x + (a * a - b * b));
        let t2 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * c;
        let next = (t1 * cur - t2 * prev) / denom;
        prev = cur;
        cur = next;
    }
    cur
}
