//! Catalogue of closed-form bounds on the extreme zeros.
//!
//! Every bound is a statement about one of three gap quantities:
//! `1 - x_max`, `1 + x_min` (distance of an extreme zero to the nearest
//! endpoint of [-1, 1]) or `1 - x_max^2`. An *outer* bound pushes the zero
//! towards the interior (it is a lower bound on the gap), an *inner* bound
//! pushes it towards the endpoint (an upper bound on the gap). Keeping the
//! quantity and direction as data prevents category errors when constraints
//! are converted into intervals on the zero itself.
//!
//! Jacobi-family bounds produce two constraints (one per extreme zero, the
//! second via the alpha/beta swap); Gegenbauer bounds target the largest
//! zero only, which by symmetry also covers the smallest.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::params::{Degree, FamilyParams, GegenbauerParams, JacobiParams};

/// Identifier of one bound family member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundId {
    /// Newton-iteration outer pair; all n >= 1, alpha, beta > -1.
    NewtonOuter,
    /// Coefficient-ratio outer pair: 2(a+1)/(n(n+b)+a+1) and its twin.
    Thm1Outer,
    /// Sturm-comparison outer pair; needs alpha, beta >= -1/2.
    NemOuter,
    /// Refinement of the above for alpha, beta > 0.
    NemOuterRefined,
    /// Laguerre-theorem inner pair.
    LaguerreInner,
    /// Driver-Jordaan inner pair.
    DjInner,
    /// Gegenbauer inner bound on 1 - x_max (not squared).
    Gn14Inner,
    /// Gegenbauer outer bound on 1 - x_max^2.
    Gn15Outer,
    /// Slightly sharper, less simple outer bound on 1 - x_max^2.
    DimnikOuter,
    /// Inner bound on 1 - x_max^2 for n >= 4.
    Thm2Inner,
    /// Inner bound on 1 - x_max^2 for n >= 5, with the degree-dependent
    /// constant [`c_lambda`].
    Thm3Inner,
}

/// Polynomial family a bound belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Jacobi,
    Gegenbauer,
}

/// Which side of the sandwich a bound sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    /// Lower bound on the gap (pushes the zero away from the endpoint).
    Outer,
    /// Upper bound on the gap (pushes the zero towards the endpoint).
    Inner,
}

/// The gap quantity a bound constrains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    /// 1 - x_max.
    GapMax,
    /// 1 + x_min.
    GapMin,
    /// 1 - x_max^2.
    SqGapMax,
}

/// Which extreme zero an interval refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtremeZero {
    Min,
    Max,
}

impl BoundId {
    /// All catalogue entries, in report order.
    pub const ALL: [BoundId; 11] = [
        BoundId::NewtonOuter,
        BoundId::Thm1Outer,
        BoundId::NemOuter,
        BoundId::NemOuterRefined,
        BoundId::LaguerreInner,
        BoundId::DjInner,
        BoundId::Gn14Inner,
        BoundId::Gn15Outer,
        BoundId::DimnikOuter,
        BoundId::Thm2Inner,
        BoundId::Thm3Inner,
    ];

    /// The snake-case name used on the CLI and in reports.
    pub fn name(self) -> &'static str {
        match self {
            BoundId::NewtonOuter => "newton_outer",
            BoundId::Thm1Outer => "thm1_outer",
            BoundId::NemOuter => "nem_outer",
            BoundId::NemOuterRefined => "nem_outer_refined",
            BoundId::LaguerreInner => "laguerre_inner",
            BoundId::DjInner => "dj_inner",
            BoundId::Gn14Inner => "gn14_inner",
            BoundId::Gn15Outer => "gn15_outer",
            BoundId::DimnikOuter => "dimnik_outer",
            BoundId::Thm2Inner => "thm2_inner",
            BoundId::Thm3Inner => "thm3_inner",
        }
    }

    /// Parse a CLI/report name. `krasikov` is a separate envelope, not a
    /// catalogue entry, and is handled by [`krasikov_interval`].
    pub fn parse(name: &str) -> Option<BoundId> {
        BoundId::ALL.iter().copied().find(|id| id.name() == name)
    }

    pub fn family(self) -> Family {
        match self {
            BoundId::NewtonOuter
            | BoundId::Thm1Outer
            | BoundId::NemOuter
            | BoundId::NemOuterRefined
            | BoundId::LaguerreInner
            | BoundId::DjInner => Family::Jacobi,
            _ => Family::Gegenbauer,
        }
    }

    pub fn direction(self) -> Direction {
        match self {
            BoundId::NewtonOuter
            | BoundId::Thm1Outer
            | BoundId::NemOuter
            | BoundId::NemOuterRefined
            | BoundId::Gn15Outer
            | BoundId::DimnikOuter => Direction::Outer,
            _ => Direction::Inner,
        }
    }
}

/// One evaluated bound: value, target quantity, direction and whether the
/// bound's stated hypotheses hold at these parameters.
#[derive(Debug, Clone, Serialize)]
pub struct BoundConstraint {
    pub id: BoundId,
    pub n: u32,
    pub params: FamilyParams,
    pub quantity: Quantity,
    pub direction: Direction,
    /// The formula value. Also computed outside the applicability range
    /// whenever arithmetically defined (NaN otherwise), so sweeps can chart
    /// where a bound actually fails.
    pub value: f64,
    pub applicable: bool,
    /// Why `applicable` is false, when it is.
    pub note: Option<&'static str>,
}

/// Two-sided localization of the largest Gegenbauer zero from the
/// Bethe-ansatz envelope `x = S(1 - delta * err)` with `delta` between 3
/// and 9: `x_low` is the delta = 9 endpoint, `x_high` the delta = 3 one.
///
/// The source imposes its own validity regime, which the quoting paper does
/// not restate; empirically the effective delta grows like
/// `(2*lambda+1)^(-1/3)` and exceeds 9 as lambda approaches -1/2, so the
/// certification sweep only asserts containment for n >= 5 and
/// lambda >= -1/4 (see [`krasikov_containment_applicable`]).
#[derive(Debug, Clone, Copy, Serialize)]
pub struct KrasikovEnvelope {
    pub s: f64,
    pub r: f64,
    pub x_low: f64,
    pub x_high: f64,
}

/// CLI/report name of the Krasikov envelope.
pub const KRASIKOV_NAME: &str = "krasikov";

/// All names accepted by the CLI `--bound` flag.
pub fn all_bound_names() -> Vec<&'static str> {
    let mut names: Vec<&'static str> = BoundId::ALL.iter().map(|id| id.name()).collect();
    names.push(KRASIKOV_NAME);
    names
}

/// The degree-dependent constant of the sharpest inner bound:
/// `c(lambda) = 3 + sqrt(5 + 32/((2*lambda+3)(2*lambda+5)))`,
/// strictly decreasing, always inside (3 + sqrt(5), 6).
pub fn c_lambda(g: GegenbauerParams) -> f64 {
    let l = g.lambda();
    3.0 + (5.0 + 32.0 / ((2.0 * l + 3.0) * (2.0 * l + 5.0))).sqrt()
}

/// Evaluate one catalogue entry at `(n, params)`.
///
/// Jacobi-family ids return two constraints (largest-zero gap, then
/// smallest-zero gap); Gegenbauer ids return one. Gegenbauer ids demand
/// Gegenbauer parameters; Jacobi ids accept either family (a Gegenbauer
/// input is mapped to alpha = beta = lambda - 1/2).
pub fn evaluate_bound(id: BoundId, n: Degree, params: FamilyParams) -> Result<Vec<BoundConstraint>> {
    match id.family() {
        Family::Jacobi => {
            let p = params.zero_equivalent_jacobi();
            Ok(vec![
                jacobi_side(id, n, params, p, Quantity::GapMax),
                jacobi_side(id, n, params, p.swapped(), Quantity::GapMin),
            ])
        }
        Family::Gegenbauer => {
            let g = match params {
                FamilyParams::Gegenbauer(g) => g,
                FamilyParams::Jacobi(_) => {
                    return Err(Error::FamilyMismatch {
                        id: id.name(),
                        family: "jacobi",
                    })
                }
            };
            Ok(vec![gegenbauer_constraint(id, n, params, g)])
        }
    }
}

/// The Bethe-ansatz localization of the largest zero.
pub fn krasikov_interval(n: Degree, g: GegenbauerParams) -> KrasikovEnvelope {
    let l = g.lambda();
    let nn = n.as_f64();
    let q = nn * (nn + 2.0 * l);
    let w = 4.0 * q + (2.0 * l + 1.0) * (2.0 * l + 1.0);
    let s = (4.0 * q / w).sqrt();
    let r = 2.0 * (q * w).sqrt();
    let err = (1.0 - s * s).powf(2.0 / 3.0) / ((2.0 * r).cbrt() * s);
    KrasikovEnvelope {
        s,
        r,
        x_low: s * (1.0 - 9.0 * err),
        x_high: s * (1.0 - 3.0 * err),
    }
}

/// Whether the certification sweep asserts envelope containment at these
/// parameters. The quoted display carries no validity conditions; the
/// effective delta exceeds 9 as lambda approaches -1/2 (measured 18.6 at
/// lambda = -0.49 for every n on the grid), so containment is only claimed
/// for n >= 5 and lambda >= -1/4, where the measured delta stays below 7.2.
pub fn krasikov_containment_applicable(n: Degree, g: GegenbauerParams) -> bool {
    n.get() >= 5 && g.lambda() >= -0.25
}

/// Interval implied for one extreme zero by an applicable constraint.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ZeroInterval {
    pub target: ExtremeZero,
    pub lower: f64,
    pub upper: f64,
    /// Set when a squared-gap value of at least 1 only supports the trivial
    /// statement x >= -1 (or x <= 1).
    pub degenerate: bool,
}

/// Convert a gap statement into an interval on the extreme zero itself.
///
/// For squared-gap constraints the positive square root is the relevant
/// branch (the implied 1 - x^2 lies in (0, 1) whenever the largest zero is
/// positive); values >= 1 degrade to the trivial interval and are flagged.
pub fn constraint_to_zero_interval(b: &BoundConstraint) -> Result<ZeroInterval> {
    if !b.applicable {
        return Err(Error::NotApplicable(b.id.name()));
    }
    let v = b.value;
    let interval = match (b.quantity, b.direction) {
        // 1 - x_max >= v  =>  x_max <= 1 - v
        (Quantity::GapMax, Direction::Outer) => ZeroInterval {
            target: ExtremeZero::Max,
            lower: -1.0,
            upper: 1.0 - v,
            degenerate: false,
        },
        // 1 - x_max <= v  =>  x_max >= 1 - v
        (Quantity::GapMax, Direction::Inner) => ZeroInterval {
            target: ExtremeZero::Max,
            lower: 1.0 - v,
            upper: 1.0,
            degenerate: false,
        },
        // 1 + x_min >= v  =>  x_min >= -1 + v
        (Quantity::GapMin, Direction::Outer) => ZeroInterval {
            target: ExtremeZero::Min,
            lower: -1.0 + v,
            upper: 1.0,
            degenerate: false,
        },
        // 1 + x_min <= v  =>  x_min <= -1 + v
        (Quantity::GapMin, Direction::Inner) => ZeroInterval {
            target: ExtremeZero::Min,
            lower: -1.0,
            upper: -1.0 + v,
            degenerate: false,
        },
        // 1 - x_max^2 >= v  =>  x_max <= sqrt(1 - v)
        (Quantity::SqGapMax, Direction::Outer) => {
            if v < 1.0 {
                ZeroInterval {
                    target: ExtremeZero::Max,
                    lower: -1.0,
                    upper: (1.0 - v).sqrt(),
                    degenerate: false,
                }
            } else {
                ZeroInterval {
                    target: ExtremeZero::Max,
                    lower: -1.0,
                    upper: 1.0,
                    degenerate: true,
                }
            }
        }
        // 1 - x_max^2 <= v  =>  x_max >= sqrt(1 - v)
        (Quantity::SqGapMax, Direction::Inner) => {
            if v < 1.0 {
                ZeroInterval {
                    target: ExtremeZero::Max,
                    lower: (1.0 - v).sqrt(),
                    upper: 1.0,
                    degenerate: false,
                }
            } else {
                ZeroInterval {
                    target: ExtremeZero::Max,
                    lower: -1.0,
                    upper: 1.0,
                    degenerate: true,
                }
            }
        }
    };
    Ok(interval)
}

// ---------------------------------------------------------------------------
// Raw formulas. These take the degree as f64 so that asymptotic claims can
// evaluate them far beyond the oracle's degree guard.
// ---------------------------------------------------------------------------

pub(crate) fn newton_outer_gap(n: f64, a: f64, b: f64) -> f64 {
    2.0 * (a + 1.0) / (n * (n + a + b + 1.0))
}

pub(crate) fn thm1_outer_gap(n: f64, a: f64, b: f64) -> f64 {
    2.0 * (a + 1.0) / (n * (n + b) + a + 1.0)
}

pub(crate) fn nem_outer_gap(n: f64, a: f64, b: f64) -> f64 {
    let d = 2.0 * n + a + b + 1.0;
    2.0 * a * a / (d * d)
}

pub(crate) fn nem_refined_outer_gap(n: f64, a: f64, b: f64) -> f64 {
    2.0 * a * a / ((2.0 * n + a) * (2.0 * n + a + 2.0 * b + 2.0))
}

pub(crate) fn laguerre_inner_gap(n: f64, a: f64, b: f64) -> f64 {
    2.0 * (a + 1.0) / (2.0 * n + a + b)
}

pub(crate) fn dj_inner_gap(n: f64, a: f64, b: f64) -> f64 {
    2.0 * (a + 1.0) * (a + 3.0) / (2.0 * n * (n + a + b + 1.0) + (a + 1.0) * (a + b + 2.0))
}

pub(crate) fn gn14_inner_gap(n: f64, l: f64) -> f64 {
    (2.0 * l + 1.0) * (2.0 * l + 3.0) * (2.0 * l + 7.0)
        / ((10.0 * l + 17.0) * (n * (n + 2.0 * l) + 0.125 * (2.0 * l + 1.0) * (2.0 * l + 1.0)))
}

pub(crate) fn gn15_outer_sqgap(n: f64, l: f64) -> f64 {
    (2.0 * l + 1.0) * (2.0 * l + 9.0)
        / (4.0 * n * (n + 2.0 * l) + (2.0 * l + 1.0) * (2.0 * l + 5.0))
}

pub(crate) fn dimnik_outer_sqgap(n: f64, l: f64) -> f64 {
    (2.0 * l + 1.0) * ((2.0 * l + 9.0) * n + 4.0 * (2.0 * l - 3.0))
        / (4.0 * (n + l - 1.0) * (n * (n + l - 1.0) + 4.0 * (l + 1.0)))
}

pub(crate) fn dimnik_outer_denominator(n: f64, l: f64) -> f64 {
    4.0 * (n + l - 1.0) * (n * (n + l - 1.0) + 4.0 * (l + 1.0))
}

pub(crate) fn thm2_inner_sqgap(n: f64, l: f64) -> f64 {
    (2.0 * l + 1.0) * (2.0 * l + 5.0)
        / (2.0 * n * (n + 2.0 * l) + (2.0 * l + 1.0) * (2.0 * l + 2.0))
}

pub(crate) fn thm3_inner_sqgap(n: f64, l: f64) -> f64 {
    let c = 3.0 + (5.0 + 32.0 / ((2.0 * l + 3.0) * (2.0 * l + 5.0))).sqrt();
    2.0 * (2.0 * l + 1.0) * (2.0 * l + 7.0)
        / (c * n * (n + 2.0 * l) + 4.0 * (l + 2.0) * (2.0 * l + 7.0 - 2.0 * c))
}

// ---------------------------------------------------------------------------

fn jacobi_side(
    id: BoundId,
    n: Degree,
    params: FamilyParams,
    side: JacobiParams,
    quantity: Quantity,
) -> BoundConstraint {
    let nn = n.as_f64();
    let (a, b) = (side.alpha(), side.beta());
    let (value, mut applicable, mut note): (f64, bool, Option<&'static str>) = match id {
        BoundId::NewtonOuter => (newton_outer_gap(nn, a, b), true, None),
        BoundId::Thm1Outer => (thm1_outer_gap(nn, a, b), true, None),
        BoundId::NemOuter => {
            let ok = side.alpha() >= -0.5 && side.beta() >= -0.5;
            (
                nem_outer_gap(nn, a, b),
                ok,
                (!ok).then_some("requires alpha, beta >= -1/2"),
            )
        }
        BoundId::NemOuterRefined => {
            let ok = side.alpha() > 0.0 && side.beta() > 0.0;
            (
                nem_refined_outer_gap(nn, a, b),
                ok,
                (!ok).then_some("requires alpha, beta > 0"),
            )
        }
        BoundId::LaguerreInner => {
            let ok = 2.0 * nn + a + b > 0.0;
            (
                laguerre_inner_gap(nn, a, b),
                ok,
                (!ok).then_some("requires 2n + alpha + beta > 0"),
            )
        }
        BoundId::DjInner => (dj_inner_gap(nn, a, b), true, None),
        _ => unreachable!("gegenbauer id routed to jacobi_side"),
    };
    if applicable && !(value > 0.0 && value.is_finite()) {
        applicable = false;
        note = Some("vacuous: bound value is not strictly positive");
    }
    BoundConstraint {
        id,
        n: n.get(),
        params,
        quantity,
        direction: id.direction(),
        value,
        applicable,
        note,
    }
}

fn gegenbauer_constraint(
    id: BoundId,
    n: Degree,
    params: FamilyParams,
    g: GegenbauerParams,
) -> BoundConstraint {
    let nn = n.as_f64();
    let l = g.lambda();
    let (value, quantity, mut applicable, mut note): (f64, Quantity, bool, Option<&'static str>) =
        match id {
            BoundId::Gn14Inner => (gn14_inner_gap(nn, l), Quantity::GapMax, true, None),
            BoundId::Gn15Outer => (gn15_outer_sqgap(nn, l), Quantity::SqGapMax, true, None),
            BoundId::DimnikOuter => {
                let denom_ok = dimnik_outer_denominator(nn, l) > 0.0;
                let value = if denom_ok {
                    dimnik_outer_sqgap(nn, l)
                } else {
                    f64::NAN
                };
                (
                    value,
                    Quantity::SqGapMax,
                    denom_ok,
                    (!denom_ok).then_some("nonpositive denominator"),
                )
            }
            BoundId::Thm2Inner => {
                let ok = n.get() >= 4;
                (
                    thm2_inner_sqgap(nn, l),
                    Quantity::SqGapMax,
                    ok,
                    (!ok).then_some("stated for n >= 4"),
                )
            }
            BoundId::Thm3Inner => {
                let ok = n.get() >= 5;
                (
                    thm3_inner_sqgap(nn, l),
                    Quantity::SqGapMax,
                    ok,
                    (!ok).then_some("stated for n >= 5"),
                )
            }
            _ => unreachable!("jacobi id routed to gegenbauer_constraint"),
        };
    if applicable && !(value > 0.0 && value.is_finite()) {
        applicable = false;
        note = Some("vacuous: bound value is not strictly positive");
    }
    BoundConstraint {
        id,
        n: n.get(),
        params,
        quantity,
        direction: id.direction(),
        value,
        applicable,
        note,
    }
}
