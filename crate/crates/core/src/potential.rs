//! The Varshni potential, the screened centrifugal approximation, and the
//! effective radial-equation coefficient in exact and approximated form.

use crate::error::{Error, Result};
use crate::kinematics::{relativistic_coefficient, KinematicContext};

/// Varshni potential parameters: V(r) = a [1 - (b/r) e^{-beta r}].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VarshniParams {
    /// Energy-dimension strength; V -> a as r -> infinity.
    pub a: f64,
    /// Length-dimension strength.
    pub b: f64,
    /// Inverse-length screening parameter.
    pub beta: f64,
}

impl VarshniParams {
    pub fn new(a: f64, b: f64, beta: f64) -> Result<Self> {
        if !a.is_finite() || !b.is_finite() {
            return Err(Error::Domain(format!("potential strengths must be finite: a = {a}, b = {b}")));
        }
        if !(beta > 0.0 && beta.is_finite()) {
            return Err(Error::Domain(format!("screening parameter must be positive, got beta = {beta}")));
        }
        Ok(Self { a, b, beta })
    }
}

/// V(r) = a (1 - (b/r) e^{-beta r})
pub fn varshni(p: &VarshniParams, r: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::Domain(format!("varshni requires r > 0, got {r}")));
    }
    Ok(p.a * (1.0 - p.b / r * (-p.beta * r).exp()))
}

/// Screened replacement for the centrifugal kernel: beta^2 / (1 - e^{-beta r})^2.
///
/// Approximates 1/r^2 for beta r << 1; tends to beta^2 as r -> infinity.
pub fn centrifugal_approx(beta: f64, r: f64) -> f64 {
    debug_assert!(r > 0.0 && beta > 0.0);
    let d = -(-beta * r).exp_m1(); // 1 - e^{-beta r}, accurate for small beta r
    beta * beta / (d * d)
}

/// Relative deviation of the screened kernel from 1/r^2, the quantity that is
/// small in the regime where the closed-form solution is trustworthy.
pub fn centrifugal_deviation(beta: f64, r: f64) -> f64 {
    centrifugal_approx(beta, r) * r * r - 1.0
}

/// Which form of the radial coefficient to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoefficientMode {
    /// Eq. with the true 1/r^2 and 1/r.
    Exact,
    /// Both 1/r^2 and the 1/r inside V replaced by their screened forms;
    /// this is the model the closed-form solution solves exactly.
    Approximated,
}

/// The full bracket multiplying psi in psi'' + [..] psi = 0:
/// -l(l+1)/r^2 + 2 mu (E - V) + sigma (E - V)^2.
pub fn radial_coefficient(
    ctx: &KinematicContext,
    p: &VarshniParams,
    l: u32,
    r: f64,
    mode: CoefficientMode,
) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::Domain(format!("radial coefficient requires r > 0, got {r}")));
    }
    let sigma = relativistic_coefficient(ctx);
    let ll = f64::from(l) * f64::from(l + 1);
    let (inv_r2, inv_r) = match mode {
        CoefficientMode::Exact => (1.0 / (r * r), 1.0 / r),
        CoefficientMode::Approximated => {
            let d = -(-p.beta * r).exp_m1();
            (p.beta * p.beta / (d * d), p.beta / d)
        }
    };
    let v = p.a * (1.0 - p.b * inv_r * (-p.beta * r).exp());
    let ev = ctx.energy - v;
    Ok(-ll * inv_r2 + 2.0 * ctx.mu * ev + sigma * ev * ev)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kinematics::MassPreset;

    fn table_params() -> VarshniParams {
        VarshniParams::new(0.15, 0.15, 0.05).unwrap()
    }

    #[test]
    fn varshni_examples() {
        let p = table_params();
        // exponential term gone at large r
        assert!((varshni(&p, 1e9).unwrap() - 0.15).abs() < 1e-15);
        // overall factor a
        let p0 = VarshniParams::new(0.0, 3.0, 0.1).unwrap();
        assert_eq!(varshni(&p0, 0.7).unwrap(), 0.0);
        // direct arithmetic at r = 1
        assert!((varshni(&p, 1.0).unwrap() - 0.128_597_337_948_733_93).abs() < 1e-15);
        assert!(varshni(&p, 0.0).is_err());
        assert!(varshni(&p, -1.0).is_err());
    }

    #[test]
    fn varshni_monotone_for_positive_ab() {
        let p = table_params();
        let mut prev = varshni(&p, 0.01).unwrap();
        for i in 1..2000 {
            let r = 0.01 + 0.05 * i as f64;
            let v = varshni(&p, r).unwrap();
            assert!(v > prev, "not monotone at r = {r}");
            prev = v;
        }
    }

    #[test]
    fn centrifugal_examples() {
        // small-argument limit: within ~1e-4 of 1/r^2 at beta r = 1e-4
        let dev = centrifugal_deviation(1e-4, 1.0);
        assert!(dev.abs() <= 1.01e-4, "dev = {dev}");
        let dev5 = centrifugal_deviation(1e-5, 1.0);
        assert!(dev5.abs() <= 1.01e-5, "dev = {dev5}");
        // 1% agreement at beta r = 0.01
        assert!(centrifugal_deviation(0.05, 0.2).abs() < 1.01e-2);
        // r -> infinity limit is beta^2
        assert!((centrifugal_approx(0.05, 1e9) - 0.0025).abs() < 1e-18);
        // direct arithmetic at beta = 0.05, r = 1
        assert!((centrifugal_approx(0.05, 1.0) - 1.051_052_108_938_415_3).abs() < 1e-12);
    }

    #[test]
    fn radial_coefficient_free_particle_is_constant() {
        let ctx = MassPreset::Equal.context(1.0);
        let p = VarshniParams::new(0.0, 0.15, 0.05).unwrap(); // a = 0: V vanishes
        for r in [0.1, 1.0, 10.0, 300.0] {
            let w = radial_coefficient(&ctx, &p, 0, r, CoefficientMode::Exact).unwrap();
            let expect = 2.0 * ctx.mu * ctx.energy + 0.25 * ctx.energy * ctx.energy;
            assert!((w - expect).abs() < 1e-14);
        }
    }

    #[test]
    fn approximated_mode_tends_to_wave_number_squared() {
        let ctx = MassPreset::Equal.context(1.0);
        let p = table_params();
        for l in [0u32, 1, 3] {
            let ll = f64::from(l) * f64::from(l + 1);
            let d = ctx.energy - p.a;
            let k2 = 2.0 * ctx.mu * d + 0.25 * d * d - ll * p.beta * p.beta;
            let w = radial_coefficient(&ctx, &p, l, 2000.0, CoefficientMode::Approximated).unwrap();
            assert!((w - k2).abs() < 1e-12, "l = {l}: {w} vs {k2}");
        }
    }

    #[test]
    fn exact_vs_approximated_at_small_beta_r() {
        let ctx = MassPreset::Equal.context(1.0);
        let p = table_params();
        let r = 0.01 / p.beta; // beta r = 0.01
        // l = 0: only the 1/r inside V is replaced; agreement at the 0.5% level
        let we = radial_coefficient(&ctx, &p, 0, r, CoefficientMode::Exact).unwrap();
        let wa = radial_coefficient(&ctx, &p, 0, r, CoefficientMode::Approximated).unwrap();
        assert!(((wa - we) / we).abs() < 5e-3, "l=0 rel = {}", ((wa - we) / we).abs());
        // l = 2: the centrifugal replacement deviates by ~beta r
        let we = radial_coefficient(&ctx, &p, 2, r, CoefficientMode::Exact).unwrap();
        let wa = radial_coefficient(&ctx, &p, 2, r, CoefficientMode::Approximated).unwrap();
        assert!(((wa - we) / we).abs() < 1.5e-2, "l=2 rel = {}", ((wa - we) / we).abs());
    }

    #[test]
    fn rejects_non_positive_radius() {
        let ctx = MassPreset::Equal.context(1.0);
        let p = table_params();
        assert!(radial_coefficient(&ctx, &p, 0, 0.0, CoefficientMode::Exact).is_err());
    }

    #[test]
    fn bad_params_rejected() {
        assert!(VarshniParams::new(0.15, 0.15, 0.0).is_err());
        assert!(VarshniParams::new(0.15, 0.15, -0.1).is_err());
        assert!(VarshniParams::new(f64::INFINITY, 0.15, 0.1).is_err());
    }
}
