//! Analytic log-gamma on the cut plane C \ (-inf, 0].
//!
//! The imaginary part is the continuous argument of Gamma, unbounded for large
//! |Im z|. Principal-branch arg would wrap at pi and cannot represent the
//! phase-shift magnitudes this library produces.

use crate::error::{Error, Result};
use num_complex::Complex64;

/// Stirling series coefficients B_{2n} / (2n (2n-1)).
const STIRLING: [f64; 9] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
    43_867.0 / 244_188.0,
];

const LN_TWO_PI: f64 = 1.837_877_066_409_345_5;

fn is_nonpositive_integer(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0
}

/// Analytic continuation of log Gamma(z).
///
/// Stirling's asymptotic series after an exact upward recurrence shift into
/// |z| >= 16, Re z >= 0.5, where nine terms reach machine accuracy. Satisfies
/// log_gamma(z+1) = log_gamma(z) + Log z with the principal Log, and the
/// Schwarz reflection log_gamma(conj z) = conj(log_gamma(z)).
pub fn log_gamma(z: Complex64) -> Result<Complex64> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::Domain(format!("log_gamma requires finite z, got {z}")));
    }
    if is_nonpositive_integer(z) {
        return Err(Error::GammaPole { re: z.re, im: z.im });
    }

    let mut w = z;
    let mut shift = Complex64::new(0.0, 0.0);
    while w.re < 0.5 || w.norm_sqr() < 256.0 {
        shift += w.ln();
        w += 1.0;
    }

    // log Gamma(w) = (w - 1/2) Log w - w + ln(2 pi)/2 + sum c_n w^{1-2n}
    let ln_w = w.ln();
    let mut series = Complex64::new(0.0, 0.0);
    let w2 = w * w;
    let mut pw = w.inv();
    for c in STIRLING {
        series += c * pw;
        pw /= w2;
    }
    let lg_w = (w - 0.5) * ln_w - w + 0.5 * LN_TWO_PI + series;
    Ok(lg_w - shift)
}

/// Continuous argument of Gamma(z): the imaginary part of [`log_gamma`],
/// not reduced modulo 2 pi.
pub fn arg_gamma(z: Complex64) -> Result<f64> {
    Ok(log_gamma(z)?.im)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    // References computed with a 40-digit independent evaluation.
    #[test]
    fn frozen_values() {
        let cases = [
            (c(1.0, 0.0), c(0.0, 0.0)),
            (c(2.0, 0.0), c(0.0, 0.0)),
            (c(0.5, 0.0), c(0.572_364_942_924_700_1, 0.0)),
            (c(1.0, 1.0), c(-0.650_923_199_301_856_3, -0.301_640_320_467_533_2)),
            (c(0.0, 2.0), c(-2.569_225_966_990_875, -1.441_150_010_485_108_3)),
            (c(12.5, 3.0), c(18.363_363_050_212_957, 7.486_216_974_382_090)),
            (c(0.3, -4.0), c(-5.641_063_534_820_528_7, -1.236_449_121_549_806_6)),
            (c(0.1, 50.0), c(-79.185_684_608_589_47, 144.972_065_057_198_42)),
            (c(21.0, 32.5), c(22.455_093_538_960_692, 106.749_361_418_310_31)),
            (c(0.25, -0.75), c(-0.169_725_085_677_073, 1.339_643_442_992_360_3)),
        ];
        for (z, want) in cases {
            let got = log_gamma(z).unwrap();
            let scale = 1.0 + want.norm();
            assert!(
                (got - want).norm() < 1e-13 * scale,
                "log_gamma({z}) = {got}, want {want}"
            );
        }
    }

    #[test]
    fn poles_rejected() {
        for z in [c(0.0, 0.0), c(-1.0, 0.0), c(-7.0, 0.0)] {
            assert!(matches!(log_gamma(z), Err(Error::GammaPole { .. })));
        }
        // near-pole but off-axis is fine
        assert!(log_gamma(c(-1.0, 1e-8)).is_ok());
    }

    #[test]
    fn arg_gamma_examples() {
        // real positive z: Gamma is real positive
        for x in [0.3, 1.0, 4.5, 17.0] {
            assert_eq!(arg_gamma(c(x, 0.0)).unwrap(), 0.0);
        }
        // Schwarz reflection
        for z in [c(0.7, 2.3), c(3.0, -11.0), c(0.1, 40.0)] {
            let a = arg_gamma(z).unwrap();
            let b = arg_gamma(z.conj()).unwrap();
            assert_eq!(a, -b);
        }
        // |Gamma(2i)|^2 = pi / (2 sinh 2pi), and the frozen continuous argument
        let lg = log_gamma(c(0.0, 2.0)).unwrap();
        let modulus_sq = (2.0 * lg.re).exp();
        let expect = std::f64::consts::PI / (2.0 * (2.0 * std::f64::consts::PI).sinh());
        assert!((modulus_sq / expect - 1.0).abs() < 1e-13);
        assert!((lg.im - -1.441_150_010_485_108_3).abs() < 1e-13);
    }

    #[test]
    fn recurrence_shift_is_exact() {
        // values straddling the internal shift boundary agree through the identity
        for &z in &[c(0.1, 0.2), c(0.5, 15.9), c(15.9, 0.1), c(0.4, -3.0)] {
            let lhs = log_gamma(z + 1.0).unwrap();
            let rhs = log_gamma(z).unwrap() + z.ln();
            assert!((lhs - rhs).norm() < 1e-12 * (1.0 + lhs.norm()));
        }
    }

    #[test]
    fn continuous_argument_grows_unbounded() {
        // far beyond principal-branch range
        let a = arg_gamma(c(0.0, 40.0)).unwrap();
        assert!(a > 100.0, "continuous arg should be ~109, got {a}");
    }
}
