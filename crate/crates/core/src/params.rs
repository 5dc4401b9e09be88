//! The parameter calculus tying the part count `t` to the degree bound `s`.
//!
//! For a given `t`, the engine needs an edge-density parameter `r` with two
//! properties: every minor of the input class has at most `r·|V|` edges, and
//! `r > t/2`. From `r` it derives the strict degree bound
//! `s = floor(r(2r − t + 2)) + 1`, the least integer greater than
//! `r(2r − t + 2)`. Graphs with no K_{t+1} minor then always admit a
//! reduction step, which is what makes the peel in [`crate::engine`] total
//! on that class.
//!
//! The density coefficient `C` (default 4, natural logarithm) encodes the
//! bound "K_{t+1}-minor-free graphs have at most `C(t+1)·sqrt(ln(t+1))·|V|`
//! edges". Callers who know a sharper per-class density (1 for forests, 3
//! for planar graphs, k for k-trees) can pass it as `density_override` and
//! obtain a much smaller `s`; validity of the override is their
//! responsibility.
//!
//! Floating-point caveat: `r` and `x = r(2r − t + 2)` are evaluated in f64.
//! The mapping `x -> floor(x) + 1` is exact for every `x < 2^53`, and the
//! computation self-checks `s − 1 ≤ x < s` after rounding. For the supported
//! ranges the nearest integer boundary is far beyond the accumulated
//! rounding error (verified against 60-digit arithmetic for
//! t ≤ 64, C ∈ {1,2,4}); exactly-integer `x` takes the larger value, e.g.
//! `x = 8` gives `s = 9`.

use core::fmt;

/// Default density coefficient `C`, used with the natural logarithm.
pub const DEFAULT_DENSITY_COEFFICIENT: f64 = 4.0;

/// Derived parameters for one engine run.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct Params {
    /// Number of parts; the forbidden clique is K_{t+1}.
    pub t: u32,
    /// Density coefficient `C` behind the default `r`.
    pub coefficient: f64,
    /// Optional caller-supplied density bound replacing the `C`-based one.
    pub density_override: Option<f64>,
    /// Effective density parameter: `max(base, (t+1)/2)`.
    pub r: f64,
    /// Strict induced-degree bound: parts certify maximum degree `< s`.
    pub s: u64,
}

/// Errors from parameter derivation.
#[derive(Clone, Copy, PartialEq, Debug)]
pub enum ParamError {
    /// `C` must be positive (and not NaN).
    CoefficientNotPositive { c: f64 },
    /// `density_override` must be positive (and not NaN) when present.
    OverrideNotPositive { d: f64 },
    /// `compute_s` needs `r > t/2`; otherwise `r(2r − t + 2)` can be
    /// non-positive and the degree bound meaningless.
    RTooSmall { r: f64, t: u32 },
    /// `r(2r − t + 2)` exceeds the exactly-representable integer range.
    STooLarge { x: f64 },
    /// Post-rounding self-check `s − 1 ≤ x < s` failed; unreachable for
    /// finite `x` below the size guard, kept as a hard stop.
    SInconsistent { x: f64, s: u64 },
}

impl fmt::Display for ParamError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ParamError::CoefficientNotPositive { c } => {
                write!(f, "density coefficient must be positive, got {c}")
            }
            ParamError::OverrideNotPositive { d } => {
                write!(f, "density override must be positive, got {d}")
            }
            ParamError::RTooSmall { r, t } => {
                write!(f, "degree-bound derivation needs r > t/2, got r = {r} with t = {t}")
            }
            ParamError::STooLarge { x } => {
                write!(f, "degree bound target {x} exceeds the exact integer range")
            }
            ParamError::SInconsistent { x, s } => {
                write!(f, "rounding self-check failed: s = {s} does not straddle {x}")
            }
        }
    }
}

impl core::error::Error for ParamError {}

/// Values of `x = r(2r − t + 2)` at or above this bound are rejected: past
/// 2^53 the `floor(x) + 1` arithmetic stops being exact in f64.
const MAX_EXACT: f64 = 9_007_199_254_740_992.0; // 2^53

/// Computes the density parameter `r = max(base, (t+1)/2)` where `base` is
/// `density_override` if given, else `C(t+1)·sqrt(ln(t+1))`.
///
/// The `(t+1)/2` floor guarantees `r > t/2` strictly without an epsilon;
/// it is what kicks in at `t = 0`, where `ln 1 = 0` zeroes the base.
pub fn compute_r(t: u32, c: f64, density_override: Option<f64>) -> Result<f64, ParamError> {
    if !(c > 0.0) {
        return Err(ParamError::CoefficientNotPositive { c });
    }
    let base = match density_override {
        Some(d) => {
            if !(d > 0.0) {
                return Err(ParamError::OverrideNotPositive { d });
            }
            d
        }
        None => {
            let tp1 = t as f64 + 1.0;
            c * tp1 * libm::sqrt(libm::log(tp1))
        }
    };
    Ok(base.max((t as f64 + 1.0) / 2.0))
}

/// Computes the strict degree bound: the least integer greater than
/// `x = r(2r − t + 2)`, i.e. `floor(x) + 1`.
pub fn compute_s(r: f64, t: u32) -> Result<u64, ParamError> {
    if !(r > t as f64 / 2.0) {
        return Err(ParamError::RTooSmall { r, t });
    }
    let x = r * (2.0 * r - t as f64 + 2.0);
    if !x.is_finite() || x >= MAX_EXACT {
        return Err(ParamError::STooLarge { x });
    }
    let s = libm::floor(x) as u64 + 1;
    // Strictness recheck after rounding: the returned s must be the unique
    // integer with s − 1 ≤ x < s.
    if !((s - 1) as f64 <= x && x < s as f64) {
        return Err(ParamError::SInconsistent { x, s });
    }
    Ok(s)
}

impl Params {
    /// Derives the full parameter set for `t` from a coefficient and an
    /// optional density override.
    pub fn derive(t: u32, coefficient: f64, density_override: Option<f64>) -> Result<Params, ParamError> {
        let r = compute_r(t, coefficient, density_override)?;
        let s = compute_s(r, t)?;
        Ok(Params { t, coefficient, density_override, r, s })
    }
}
