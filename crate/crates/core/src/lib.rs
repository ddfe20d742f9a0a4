//! Extreme-zero machinery for Jacobi and Gegenbauer polynomials.
//!
//! The crate has three layers:
//!
//! * evaluation and ground truth — [`polyeval`] (three-term recurrence,
//!   derivatives, ODE residuals) and [`zeros`] (an eigenvalue-based zero
//!   oracle accurate to near machine precision);
//! * closed-form bounds — [`bounds`] (a typed catalogue of inner/outer
//!   bounds on the distance between the extreme zeros and the interval
//!   endpoints) and [`enestrom_kakeya`] (coefficient-ratio annulus bounds
//!   covering *all* zeros at once);
//! * certification — [`certify`] sweeps parameter grids, compares every
//!   bound against the oracle, and traces the derivative-ratio inequality
//!   chain behind the sharpest Gegenbauer bounds.
//!
//! All operations are pure functions of their arguments and safe to call
//! concurrently.

pub mod bounds;
pub mod certify;
pub mod enestrom_kakeya;
mod error;
pub mod params;
pub mod polyeval;
pub mod zeros;

pub use error::{Error, Result};
pub use params::{gegenbauer_to_jacobi, Degree, FamilyParams, GegenbauerParams, JacobiParams};
pub use zeros::{all_zeros, chebyshev_closed_form, extreme_zeros, ChebyshevKind, ZeroSet};
