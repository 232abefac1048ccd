//! The three special functions the model needs: erf, the sine integral
//! and the digamma function at positive integer arguments.

use crate::error::{Error, Result};

/// Euler–Mascheroni constant.
pub const EULER_MASCHERONI: f64 = 0.577_215_664_901_532_9;

/// Error function. Backed by libm's double-precision implementation,
/// accurate to about 1 ulp (far below the 1e-10 requirement).
#[inline]
pub fn erf(x: f64) -> f64 {
    libm::erf(x)
}

/// Sine integral `Si(x) = ∫₀ˣ sin(t)/t dt` for `x ≥ 0`.
///
/// Power series up to `x = 20`, asymptotic auxiliary expansion beyond;
/// absolute error stays below 1e-8 everywhere (well below it for small `x`).
pub fn sine_integral(x: f64) -> Result<f64> {
    if !x.is_finite() || x < 0.0 {
        return Err(Error::Domain(format!("sine_integral needs x >= 0, got {x}")));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    if x <= 20.0 {
        // Si(x) = Σ (-1)^k x^(2k+1) / ((2k+1)(2k+1)!)
        let x2 = x * x;
        let mut term = x; // x^(2k+1)/(2k+1)! at k = 0
        let mut sum = term;
        let mut k = 0u32;
        loop {
            k += 1;
            let m = 2 * k;
            term *= -x2 / ((m * (m + 1)) as f64);
            let contrib = term / (m + 1) as f64;
            sum += contrib;
            if contrib.abs() < 1e-17 * sum.abs().max(1.0) || k > 200 {
                break;
            }
        }
        Ok(sum)
    } else {
        // Si(x) = π/2 - f(x) cos x - g(x) sin x with the asymptotic series
        //   f(x) ~ (1/x) Σ (-1)^m (2m)!  / x^(2m)
        //   g(x) ~ (1/x²) Σ (-1)^m (2m+1)! / x^(2m)
        // summed to the smallest term.
        let x2 = x * x;
        let mut f = 0.0;
        let mut g = 0.0;
        let mut term_f = 1.0; // (2m)!/x^(2m)
        let mut term_g = 1.0; // (2m+1)!/x^(2m)
        let mut sign = 1.0;
        let mut m = 0u32;
        loop {
            f += sign * term_f;
            g += sign * term_g;
            let next_f = term_f * ((2 * m + 1) * (2 * m + 2)) as f64 / x2;
            if next_f >= term_f || m > 60 {
                break;
            }
            term_g *= ((2 * m + 2) * (2 * m + 3)) as f64 / x2;
            term_f = next_f;
            sign = -sign;
            m += 1;
        }
        Ok(std::f64::consts::FRAC_PI_2 - f / x * x.cos() - g / x2 * x.sin())
    }
}

/// Digamma function at a positive integer:
/// `Ψ(n) = -γ + Σ_{j=1}^{n-1} 1/j`, via the harmonic sum (agents are
/// counted, so only integer arguments occur).
pub fn digamma(n: u64) -> Result<f64> {
    if n == 0 {
        return Err(Error::Domain("digamma needs n >= 1".into()));
    }
    let mut sum = 0.0;
    // Ascending magnitude keeps the rounding of the long sum small.
    for j in (1..n).rev() {
        sum += 1.0 / j as f64;
    }
    Ok(sum - EULER_MASCHERONI)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::integrate_adaptive;
    use std::f64::consts::PI;

    /// Taylor-series oracle: erf(x) = 2/√π Σ (-1)^n x^(2n+1)/(n!(2n+1)).
    fn erf_series(x: f64) -> f64 {
        let mut term = x;
        let mut sum = x / 1.0;
        let mut n = 0u32;
        loop {
            n += 1;
            term *= -x * x / n as f64;
            let contrib = term / (2 * n + 1) as f64;
            sum += contrib;
            if contrib.abs() < 1e-18 {
                break;
            }
        }
        2.0 / PI.sqrt() * sum
    }

    #[test]
    fn erf_at_zero_and_large() {
        assert_eq!(erf(0.0), 0.0);
        assert!((erf(6.0) - 1.0).abs() < 1e-10);
        assert!((erf(40.0) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn erf_matches_series_oracle() {
        let x = 1.0 / 2f64.sqrt();
        assert!((erf(x) - 0.682_689_492_1).abs() < 1e-9);
        for &x in &[0.1, 0.5, 1.0 / 2f64.sqrt(), 1.0, 2.0, 3.0] {
            assert!((erf(x) - erf_series(x)).abs() < 1e-12, "x={x}");
        }
    }

    #[test]
    fn erf_is_odd_and_monotone() {
        let mut prev = erf(-6.0);
        let mut x = -6.0;
        while x <= 6.0 {
            assert!((erf(-x) + erf(x)).abs() < 1e-15);
            let y = erf(x);
            assert!(y >= prev);
            prev = y;
            x += 0.125;
        }
    }

    #[test]
    fn sine_integral_reference_values() {
        assert_eq!(sine_integral(0.0).unwrap(), 0.0);
        // Oracle: adaptive quadrature of sin(t)/t.
        let oracle = |x: f64| integrate_adaptive(&|t: f64| if t == 0.0 { 1.0 } else { t.sin() / t }, 0.0, x, 1e-13);
        assert!((sine_integral(PI).unwrap() - 1.851_937_0).abs() < 1e-6);
        assert!((sine_integral(PI).unwrap() - oracle(PI)).abs() < 1e-10);
        assert!((sine_integral(PI / 2.0).unwrap() - 1.370_762_1).abs() < 1e-6);
        assert!((sine_integral(PI / 2.0).unwrap() - oracle(PI / 2.0)).abs() < 1e-10);
    }

    #[test]
    fn sine_integral_rejects_negative() {
        assert!(sine_integral(-0.5).is_err());
    }

    #[test]
    fn sine_integral_is_monotone_on_first_arch() {
        let mut prev = 0.0;
        for k in 1..=100 {
            let x = PI * k as f64 / 100.0;
            let y = sine_integral(x).unwrap();
            assert!(y > prev, "x={x}");
            prev = y;
        }
    }

    #[test]
    fn sine_integral_branches_agree() {
        // The series is still convergent at the switch point; the asymptotic
        // branch must agree with it there.
        let series_side = sine_integral(20.0).unwrap();
        let oracle = integrate_adaptive(&|t: f64| t.sin() / t, 1e-12, 20.4, 1e-13);
        assert!((sine_integral(20.4).unwrap() - oracle).abs() < 1e-8);
        let oracle20 = integrate_adaptive(&|t: f64| t.sin() / t, 1e-12, 20.0, 1e-13);
        assert!((series_side - oracle20).abs() < 1e-10);
    }

    #[test]
    fn sine_integral_large_argument_limit() {
        // |Si(x) - π/2| <= 1/x + 1/x² for large x.
        let x = 1.0e4;
        let si = sine_integral(x).unwrap();
        assert!((si - PI / 2.0).abs() <= 1.0 / x + 1.0 / (x * x));
    }

    #[test]
    fn digamma_reference_values() {
        assert!((digamma(1).unwrap() + EULER_MASCHERONI).abs() < 1e-15);
        assert!((digamma(2).unwrap() - (1.0 - EULER_MASCHERONI)).abs() < 1e-15);
        // Asymptotically Ψ(n) ≈ ln n - 1/(2n).
        let got = digamma(1000).unwrap();
        assert!((got - (1000f64.ln() - 1.0 / 2000.0)).abs() < 1e-6);
    }

    #[test]
    fn digamma_recurrence() {
        for &n in &[1u64, 2, 7, 10, 100, 1_000, 99_999, 1_000_000] {
            let lhs = digamma(n + 1).unwrap() - digamma(n).unwrap();
            assert!((lhs - 1.0 / n as f64).abs() < 1e-12, "n={n}");
        }
    }

    #[test]
    fn digamma_rejects_zero() {
        assert!(digamma(0).is_err());
    }
}
