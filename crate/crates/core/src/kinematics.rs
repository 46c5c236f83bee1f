//! Two-body mass arithmetic: reduced mass, mass index, and the relativistic
//! coefficient sigma = (mu/eta)^3 that weights the squared-potential term.
//!
//! Natural units (hbar = c = 1) throughout.

use crate::error::{Error, Result};

/// Masses of the two interacting particles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoBodyMasses {
    pub m1: f64,
    pub m2: f64,
}

impl TwoBodyMasses {
    pub fn new(m1: f64, m2: f64) -> Result<Self> {
        if !(m1 > 0.0 && m1.is_finite()) || !(m2 > 0.0 && m2.is_finite()) {
            return Err(Error::Domain(format!(
                "masses must be positive and finite, got m1 = {m1}, m2 = {m2}"
            )));
        }
        Ok(Self { m1, m2 })
    }
}

/// mu = m1 m2 / (m1 + m2)
pub fn reduced_mass(masses: &TwoBodyMasses) -> f64 {
    masses.m1 * masses.m2 / (masses.m1 + masses.m2)
}

/// eta = mu [m1 m2 / (m1 m2 - 3 mu^2)]^(1/3)
///
/// The denominator is always positive: 3 mu^2 <= 3 m1 m2 / 4.
pub fn mass_index(masses: &TwoBodyMasses) -> f64 {
    let mu = reduced_mass(masses);
    let mm = masses.m1 * masses.m2;
    mu * (mm / (mm - 3.0 * mu * mu)).cbrt()
}

/// Kinematic state of one two-body channel: masses, derived quantities, the
/// semi-relativistic energy, and an optional override of sigma = (mu/eta)^3.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KinematicContext {
    pub masses: TwoBodyMasses,
    pub mu: f64,
    pub eta: f64,
    /// (mu/eta)^3 from the mass formula; equals 1 - 3 mu^2/(m1 m2).
    pub sigma: f64,
    /// Semi-relativistic energy E of the channel.
    pub energy: f64,
    /// When set, replaces sigma everywhere downstream.
    pub sigma_override: Option<f64>,
}

impl KinematicContext {
    pub fn new(masses: TwoBodyMasses, energy: f64) -> Result<Self> {
        if !energy.is_finite() {
            return Err(Error::Domain(format!("energy must be finite, got {energy}")));
        }
        let mu = reduced_mass(&masses);
        let eta = mass_index(&masses);
        let sigma = 1.0 - 3.0 * mu * mu / (masses.m1 * masses.m2);
        Ok(Self { masses, mu, eta, sigma, energy, sigma_override: None })
    }

    pub fn with_sigma_override(mut self, sigma: f64) -> Result<Self> {
        if !(sigma > 0.0 && sigma.is_finite()) {
            return Err(Error::Domain(format!(
                "sigma override must be positive and finite, got {sigma}"
            )));
        }
        self.sigma_override = Some(sigma);
        Ok(self)
    }

    pub fn with_energy(mut self, energy: f64) -> Self {
        self.energy = energy;
        self
    }
}

/// The coefficient multiplying (E - V)^2 in the radial equation: the override
/// when set, otherwise (mu/eta)^3.
pub fn relativistic_coefficient(ctx: &KinematicContext) -> f64 {
    ctx.sigma_override.unwrap_or(ctx.sigma)
}

/// Mass configurations used for the published table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MassPreset {
    /// m1 = m2 = 1, sigma = 1/4 (exact from the formula).
    Equal,
    /// m1 = 99, m2 = 1 with sigma overridden to 1.
    Unequal,
}

impl MassPreset {
    pub fn context(self, energy: f64) -> KinematicContext {
        match self {
            MassPreset::Equal => {
                let m = TwoBodyMasses::new(1.0, 1.0).expect("static masses");
                KinematicContext::new(m, energy).expect("static context")
            }
            MassPreset::Unequal => {
                let m = TwoBodyMasses::new(99.0, 1.0).expect("static masses");
                KinematicContext::new(m, energy)
                    .expect("static context")
                    .with_sigma_override(1.0)
                    .expect("static override")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn masses(m1: f64, m2: f64) -> TwoBodyMasses {
        TwoBodyMasses::new(m1, m2).unwrap()
    }

    #[test]
    fn reduced_mass_examples() {
        assert_eq!(reduced_mass(&masses(1.0, 1.0)), 0.5);
        assert!((reduced_mass(&masses(99.0, 1.0)) - 0.99).abs() < 1e-15);
        assert!((reduced_mass(&masses(2.0, 3.0)) - 1.2).abs() < 1e-15);
    }

    #[test]
    fn non_positive_mass_rejected() {
        assert!(TwoBodyMasses::new(0.0, 1.0).is_err());
        assert!(TwoBodyMasses::new(1.0, -2.0).is_err());
        assert!(TwoBodyMasses::new(f64::NAN, 1.0).is_err());
    }

    #[test]
    fn mass_index_examples() {
        // equal masses: eta = m * 4^(1/3) / 2
        assert!((mass_index(&masses(1.0, 1.0)) - 0.793_700_525_984_099_7).abs() < 1e-15);
        assert!((mass_index(&masses(99.0, 1.0)) - 0.999_999_656_463_518_7).abs() < 1e-12);
        for m in [0.5, 1.0, 7.3] {
            let expect = m * 4f64.cbrt() / 2.0;
            assert!((mass_index(&masses(m, m)) - expect).abs() < 1e-14 * expect);
        }
    }

    #[test]
    fn sigma_examples() {
        let eq = KinematicContext::new(masses(1.0, 1.0), 1.0).unwrap();
        assert_eq!(relativistic_coefficient(&eq), 0.25);

        let un = KinematicContext::new(masses(99.0, 1.0), 1.0).unwrap();
        assert!((relativistic_coefficient(&un) - 0.9703).abs() < 1e-12);

        let un = un.with_sigma_override(1.0).unwrap();
        assert_eq!(relativistic_coefficient(&un), 1.0);
    }

    #[test]
    fn sigma_override_must_be_positive() {
        let ctx = KinematicContext::new(masses(1.0, 1.0), 1.0).unwrap();
        assert!(ctx.with_sigma_override(0.0).is_err());
        assert!(ctx.with_sigma_override(-0.5).is_err());
    }

    #[test]
    fn sigma_matches_mass_index_cube() {
        for (m1, m2) in [(1.0, 1.0), (99.0, 1.0), (2.0, 3.0), (0.3, 11.0)] {
            let m = masses(m1, m2);
            let ctx = KinematicContext::new(m, 1.0).unwrap();
            let cube = (ctx.mu / ctx.eta).powi(3);
            assert!((ctx.sigma - cube).abs() < 1e-14, "sigma vs (mu/eta)^3 at {m1},{m2}");
            // eta^3 (m1 m2 - 3 mu^2) = mu^3 m1 m2
            let lhs = ctx.eta.powi(3) * (m1 * m2 - 3.0 * ctx.mu * ctx.mu);
            let rhs = ctx.mu.powi(3) * m1 * m2;
            assert!((lhs - rhs).abs() < 1e-12 * rhs.abs());
        }
    }

    #[test]
    fn sigma_range_and_swap_symmetry() {
        for (m1, m2) in [(1.0, 2.0), (0.1, 40.0), (5.0, 5.0), (99.0, 1.0)] {
            let c12 = KinematicContext::new(masses(m1, m2), 1.0).unwrap();
            let c21 = KinematicContext::new(masses(m2, m1), 1.0).unwrap();
            assert!(c12.sigma >= 0.25 && c12.sigma < 1.0);
            assert_eq!(c12.sigma, c21.sigma);
            assert_eq!(c12.mu, c21.mu);
            assert_eq!(c12.eta, c21.eta);
        }
        let eqm = KinematicContext::new(masses(3.7, 3.7), 1.0).unwrap();
        assert!((eqm.sigma - 0.25).abs() < 1e-15);
    }

    #[test]
    fn presets_match_published_setup() {
        let eq = MassPreset::Equal.context(1.0);
        assert_eq!((eq.masses.m1, eq.masses.m2), (1.0, 1.0));
        assert_eq!(relativistic_coefficient(&eq), 0.25);
        let un = MassPreset::Unequal.context(1.0);
        assert_eq!((un.masses.m1, un.masses.m2), (99.0, 1.0));
        assert_eq!(relativistic_coefficient(&un), 1.0);
        assert!((un.mu - 0.99).abs() < 1e-15);
    }
}
