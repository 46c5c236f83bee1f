//! Screening-parameter scan against the embedded reference table.
//!
//! The reference's beta is unpublished, and the printed transformed-equation
//! coefficients disagree internally (see [`crate::scattering`]), so the scan
//! evaluates every feasible beta under both readings: the derived coefficient
//! set the library certifies, and the as-printed variant with the sign of the
//! square-root radicand flipped.

use crate::error::{Error, Result};
use crate::kinematics::{relativistic_coefficient, KinematicContext, MassPreset};
use crate::potential::VarshniParams;
use crate::scattering::{lambda, phase_shift, w_coefficients, wave_number, Channel};
use crate::specfun::log_gamma;
use num_complex::Complex64;
use rayon::prelude::*;
use std::f64::consts::FRAC_PI_2;

use super::table1;

/// Which reading of the transformed-equation coefficients to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoefficientConvention {
    /// Derived by substitution and certified by the ODE residual.
    Derived,
    /// Radicand sign as printed in the source's coefficient listing.
    PrintedVariant,
}

/// delta_l under either convention.
pub fn phase_shift_with_convention(
    ctx: &KinematicContext,
    p: &VarshniParams,
    channel: Channel,
    convention: CoefficientConvention,
) -> Result<f64> {
    match convention {
        CoefficientConvention::Derived => Ok(phase_shift(ctx, p, channel)?.delta),
        CoefficientConvention::PrintedVariant => {
            let k = wave_number(ctx, p, channel)?;
            let lam = lambda(ctx, p, channel)?;
            let w = w_coefficients(ctx, p, channel, k);
            let s = Complex64::new(-w.w1, 0.0).sqrt();
            let base = Complex64::new(lam, -k / p.beta);
            let eta1 = base - s;
            let eta2 = base + s;
            let top = log_gamma(Complex64::new(0.0, 2.0 * k / p.beta))?;
            let g1 = log_gamma(eta1.conj())?;
            let g2 = log_gamma(eta2.conj())?;
            Ok((channel.l_f64() + 1.0) * FRAC_PI_2 + top.im - g1.im - g2.im)
        }
    }
}

/// Largest beta keeping every channel l <= l_max open.
pub fn feasible_beta_bound(ctx: &KinematicContext, a: f64, l_max: u32) -> f64 {
    let sigma = relativistic_coefficient(ctx);
    let d = ctx.energy - a;
    let k0_sq = 2.0 * ctx.mu * d + sigma * d * d;
    let ll = f64::from(l_max) * f64::from(l_max + 1);
    (k0_sq / ll).sqrt()
}

/// Comparison of one computed column against the reference.
#[derive(Debug, Clone)]
pub struct ColumnFit {
    pub beta: f64,
    pub deltas: Vec<f64>,
    pub max_abs_dev: f64,
    pub mean_abs_dev: f64,
    pub sign_mismatches: u32,
    pub pattern_match: bool,
}

/// Qualitative shape of the reference's equal-mass column: signs
/// (-, -, +, +) for l = 0..3, negative from l = 4 on, strictly decreasing
/// over l = 5..20, and an endpoint near -78.
pub fn table_pattern_match(deltas: &[f64]) -> bool {
    if deltas.len() != 21 {
        return false;
    }
    let signs_ok = deltas[0] < 0.0
        && deltas[1] < 0.0
        && deltas[2] > 0.0
        && deltas[3] > 0.0
        && deltas[4..].iter().all(|&d| d < 0.0);
    let monotone_tail = deltas[5..].windows(2).all(|w| w[1] < w[0]);
    let endpoint = (deltas[20] - table1::EQUAL[20]).abs() <= 2.0;
    signs_ok && monotone_tail && endpoint
}

fn fit_column(
    ctx: &KinematicContext,
    a: f64,
    b: f64,
    beta: f64,
    reference: &[f64; 21],
    convention: CoefficientConvention,
) -> Result<ColumnFit> {
    let p = VarshniParams::new(a, b, beta)?;
    let mut deltas = Vec::with_capacity(21);
    for l in 0..=table1::L_MAX as u32 {
        deltas.push(phase_shift_with_convention(ctx, &p, Channel::new(l), convention)?);
    }
    let mut max_abs = 0.0f64;
    let mut sum_abs = 0.0f64;
    let mut mismatches = 0u32;
    for (d, r) in deltas.iter().zip(reference) {
        let dev = (d - r).abs();
        max_abs = max_abs.max(dev);
        sum_abs += dev;
        if (*d > 0.0) != (*r > 0.0) {
            mismatches += 1;
        }
    }
    let pattern = table_pattern_match(&deltas);
    Ok(ColumnFit {
        beta,
        deltas,
        max_abs_dev: max_abs,
        mean_abs_dev: sum_abs / 21.0,
        sign_mismatches: mismatches,
        pattern_match: pattern,
    })
}

/// Full scan output.
#[derive(Debug, Clone)]
pub struct BetaScanReport {
    pub preset: MassPreset,
    pub reference: &'static [f64; 21],
    pub feasible_bound: f64,
    pub grid: Vec<ColumnFit>,
    pub printed_grid: Vec<ColumnFit>,
    /// Index into `grid` of the best fit (fewest sign mismatches, then
    /// smallest max-abs deviation).
    pub best: usize,
    pub printed_best: usize,
    /// Any beta on the grid whose derived column matches the table pattern.
    pub pattern_beta: Option<f64>,
}

fn best_index(grid: &[ColumnFit]) -> usize {
    let mut best = 0;
    for (i, fit) in grid.iter().enumerate() {
        let better = (fit.sign_mismatches, fit.max_abs_dev)
            < (grid[best].sign_mismatches, grid[best].max_abs_dev);
        if better {
            best = i;
        }
    }
    best
}

/// Scan `count` betas uniformly over [beta_min, beta_max] (defaults: 0.002 up
/// to 99.95% of the open-channel bound) for the given preset.
pub fn run_beta_scan(
    preset: MassPreset,
    energy: f64,
    a: f64,
    b: f64,
    beta_min: Option<f64>,
    beta_max: Option<f64>,
    count: usize,
) -> Result<BetaScanReport> {
    let ctx = preset.context(energy);
    let reference: &'static [f64; 21] = match preset {
        MassPreset::Equal => &table1::EQUAL,
        MassPreset::Unequal => &table1::UNEQUAL,
    };
    let bound = feasible_beta_bound(&ctx, a, table1::L_MAX as u32);
    let lo = beta_min.unwrap_or(0.002);
    let hi = beta_max.unwrap_or(bound * 0.9995);
    if !(lo > 0.0 && lo < hi && hi < bound) || count < 2 {
        return Err(Error::Domain(format!(
            "infeasible beta grid [{lo}, {hi}] (open-channel bound {bound:.6}, count {count})"
        )));
    }
    let betas: Vec<f64> = (0..count)
        .map(|i| lo + (hi - lo) * i as f64 / (count - 1) as f64)
        .collect();
    let grid: Result<Vec<ColumnFit>> = betas
        .par_iter()
        .map(|&beta| fit_column(&ctx, a, b, beta, reference, CoefficientConvention::Derived))
        .collect();
    let grid = grid?;
    let printed_grid: Result<Vec<ColumnFit>> = betas
        .par_iter()
        .map(|&beta| {
            fit_column(&ctx, a, b, beta, reference, CoefficientConvention::PrintedVariant)
        })
        .collect();
    let printed_grid = printed_grid?;
    let best = best_index(&grid);
    let printed_best = best_index(&printed_grid);
    let pattern_beta = grid.iter().find(|f| f.pattern_match).map(|f| f.beta);
    Ok(BetaScanReport {
        preset,
        reference,
        feasible_bound: bound,
        grid,
        printed_grid,
        best,
        printed_best,
        pattern_beta,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn feasible_bounds_match_presets() {
        let eq = MassPreset::Equal.context(1.0);
        let un = MassPreset::Unequal.context(1.0);
        assert!((feasible_beta_bound(&eq, 0.15, 20) - 0.049_536_5).abs() < 1e-6);
        assert!((feasible_beta_bound(&un, 0.15, 20) - 0.075_679_5).abs() < 1e-6);
    }

    #[test]
    fn scan_produces_ordered_grid_and_best_fit() {
        let rep = run_beta_scan(MassPreset::Equal, 1.0, 0.15, 0.15, None, None, 24).unwrap();
        assert_eq!(rep.grid.len(), 24);
        assert!(rep.grid.windows(2).all(|w| w[0].beta < w[1].beta));
        let b = &rep.grid[rep.best];
        assert!(rep.grid.iter().all(|f| {
            (b.sign_mismatches, b.max_abs_dev) <= (f.sign_mismatches, f.max_abs_dev)
        }));
        assert_eq!(b.deltas.len(), 21);
    }

    #[test]
    fn infeasible_grid_is_domain_error() {
        assert!(run_beta_scan(MassPreset::Equal, 1.0, 0.15, 0.15, Some(0.06), None, 10).is_err());
        assert!(run_beta_scan(MassPreset::Equal, 1.0, 0.15, 0.15, None, Some(0.2), 10).is_err());
    }

    #[test]
    fn pattern_matcher_accepts_the_reference_itself() {
        assert!(table_pattern_match(&table1::EQUAL));
        let mut broken = table1::EQUAL;
        broken[0] = 0.1;
        assert!(!table_pattern_match(&broken));
    }
}
