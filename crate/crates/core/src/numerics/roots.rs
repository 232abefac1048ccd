//! Bisection root finding.

use crate::error::{Error, Result};

/// Finds a root of `g` on `[lo, hi]` by bisection.
///
/// Requires a sign change between the endpoints. Stops once `|g| <= tol`
/// at the midpoint or the bracket width drops below `tol`.
pub fn bisect(g: impl Fn(f64) -> f64, lo: f64, hi: f64, tol: f64) -> Result<f64> {
    if !(lo < hi) || !tol.is_finite() || tol <= 0.0 {
        return Err(Error::Domain(format!(
            "bisect needs lo < hi and tol > 0, got [{lo}, {hi}], tol {tol}"
        )));
    }
    let g_lo = g(lo);
    let g_hi = g(hi);
    if g_lo == 0.0 {
        return Ok(lo);
    }
    if g_hi == 0.0 {
        return Ok(hi);
    }
    if g_lo.signum() == g_hi.signum() {
        return Err(Error::NoBracket { lo, hi });
    }
    let (mut a, mut b, mut g_a) = (lo, hi, g_lo);
    for _ in 0..200 {
        let mid = 0.5 * (a + b);
        let g_mid = g(mid);
        if g_mid == 0.0 || g_mid.abs() <= tol || b - a <= tol {
            return Ok(mid);
        }
        if g_mid.signum() == g_a.signum() {
            a = mid;
            g_a = g_mid;
        } else {
            b = mid;
        }
    }
    Ok(0.5 * (a + b))
}
