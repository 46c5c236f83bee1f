//! Bound states from the pole structure of the scattering solution.
//!
//! On the closed-channel side (k^2 < 0) the physical-sheet continuation is
//! k = +i kappa, kappa = sqrt(-k^2) > 0, so e^{ikr} = e^{-kappa r} decays. The
//! z -> 1-z connection formula then splits the wavefunction into a decaying
//! and a growing exponential; the growing coefficient carries 1/(G(eta1)
//! G(eta2)), so normalizable states sit exactly at the first-order gamma poles
//! eta1 = -n, where the hypergeometric series terminates. With
//! s = sqrt(w1) that reads
//!
//!   f(E) = lambda + n + kappa(E)/beta - s(E) = 0,      n = 0, 1, 2, ...
//!
//! Squaring reproduces the closed-form energy equation
//! k^2 = -beta^2 [((n+lambda)^2 - c1 + l(l+1)) / (2(n+lambda))]^2 with
//! c1 = 2 mu a b/beta + 2 sigma (E-a) a b/beta - sigma a^2 b^2; the solver
//! works with the equivalent explicit residual
//!
//!   g(E) = kappa(E)/beta - (c1(E) - l(l+1) - (n+lambda)^2) / (2(n+lambda)),
//!
//! whose roots are exactly the poles (no extraneous branch: kappa >= 0 forces
//! the right sign). In the sigma -> 0 limit this reduces to the textbook
//! screened-potential spectrum kappa/beta = (2 mu a b/beta - n'^2)/(2n'),
//! n' = n + l + 1, which the shooting oracle in [`crate::oracle`] confirms.

use crate::error::{Error, Result};
use crate::kinematics::{relativistic_coefficient, KinematicContext};
use crate::potential::VarshniParams;
use crate::scattering::{lambda, w_coefficients, wave_number_squared, Channel};
use crate::specfun::log_gamma;
use num_complex::Complex64;

/// Number of points in the deterministic bracket scan.
const SCAN_POINTS: usize = 2000;
/// Fixed bisection iteration count (interval shrinks below f64 resolution).
const BISECT_ITERS: usize = 200;
/// Residual bound every accepted state must satisfy.
pub const RESIDUAL_TOL: f64 = 1e-10;

/// One bound state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundState {
    /// Radial quantum number (number of interior nodes).
    pub n: u32,
    pub channel: Channel,
    /// Semi-relativistic energy E_{n,l} < a.
    pub energy: f64,
    /// |lambda + n + kappa/beta - s| at the returned energy.
    pub residual: f64,
}

fn continued_kappa(ctx: &KinematicContext, p: &VarshniParams, channel: Channel, energy: f64) -> Result<f64> {
    let k2 = wave_number_squared(&ctx.with_energy(energy), p, channel);
    if k2 >= 0.0 {
        return Err(Error::Domain(format!(
            "pole condition needs a closed channel, got k^2 = {k2} >= 0 at E = {energy}"
        )));
    }
    Ok((-k2).sqrt())
}

/// Real residual of the pole condition at a trial energy:
/// f(E) = lambda + n + kappa/beta - Re s, with s = sqrt(w1).
///
/// When w1 < 0 the root s is imaginary and no pole can occur; the returned
/// real part is still useful to a scanner, and [`solve_bound_energy`] rejects
/// any such crossing through the full complex residual.
pub fn pole_condition(
    ctx: &KinematicContext,
    p: &VarshniParams,
    channel: Channel,
    n: u32,
    energy: f64,
) -> Result<f64> {
    let lam = lambda(ctx, p, channel)?;
    let kappa = continued_kappa(ctx, p, channel, energy)?;
    let ctx_e = ctx.with_energy(energy);
    // w1 is evaluated with k^2 < 0: the -k^2/beta^2 term enters as +kappa^2/beta^2
    let w = w_coefficients(&ctx_e, p, channel, 0.0);
    let w1 = w.w1 + kappa * kappa / (p.beta * p.beta);
    let s = Complex64::new(w1, 0.0).sqrt();
    Ok(lam + f64::from(n) + kappa / p.beta - s.re)
}

/// Full complex pole residual |lambda + n + kappa/beta - s|.
fn complex_residual(
    ctx: &KinematicContext,
    p: &VarshniParams,
    channel: Channel,
    n: u32,
    energy: f64,
) -> Result<f64> {
    let lam = lambda(ctx, p, channel)?;
    let kappa = continued_kappa(ctx, p, channel, energy)?;
    let ctx_e = ctx.with_energy(energy);
    let w = w_coefficients(&ctx_e, p, channel, 0.0);
    let w1 = w.w1 + kappa * kappa / (p.beta * p.beta);
    let s = Complex64::new(w1, 0.0).sqrt();
    let f = Complex64::new(lam + f64::from(n) + kappa / p.beta, 0.0) - s;
    Ok(f.norm())
}

/// Reciprocal magnitude of the gamma factor multiplying the growing
/// exponential, 1/|Gamma(eta1)| under the physical-sheet continuation.
/// Tends to zero as E approaches a bound-state energy.
pub fn growing_wave_suppression(
    ctx: &KinematicContext,
    p: &VarshniParams,
    channel: Channel,
    energy: f64,
) -> Result<f64> {
    let lam = lambda(ctx, p, channel)?;
    let kappa = continued_kappa(ctx, p, channel, energy)?;
    let ctx_e = ctx.with_energy(energy);
    let w = w_coefficients(&ctx_e, p, channel, 0.0);
    let w1 = w.w1 + kappa * kappa / (p.beta * p.beta);
    let s = Complex64::new(w1, 0.0).sqrt();
    // eta1 continued to k = +i kappa
    let eta1 = Complex64::new(lam + kappa / p.beta, 0.0) - s;
    match log_gamma(eta1) {
        Ok(lg) => Ok((-lg.re).exp()),
        Err(Error::GammaPole { .. }) => Ok(0.0),
        Err(e) => Err(e),
    }
}

/// Largest kappa reachable inside the closed-channel window:
/// -k^2 = -sigma D^2 - 2 mu D + l(l+1) beta^2 peaks at D = -mu/sigma.
fn kappa_window_max(ctx: &KinematicContext, p: &VarshniParams, channel: Channel) -> f64 {
    let sigma = relativistic_coefficient(ctx);
    let ll = channel.centrifugal_factor();
    (ctx.mu * ctx.mu / sigma + ll * p.beta * p.beta).sqrt()
}

/// Energy on the chosen closed-channel branch for a given kappa:
/// sigma D^2 + 2 mu D + kappa^2 - l(l+1) beta^2 = 0.
/// `deep = false` is the branch continuously connected to the threshold E = a.
fn energy_at_kappa(
    ctx: &KinematicContext,
    p: &VarshniParams,
    channel: Channel,
    kappa: f64,
    deep: bool,
) -> Option<f64> {
    let sigma = relativistic_coefficient(ctx);
    let ll = channel.centrifugal_factor();
    let c = kappa * kappa - ll * p.beta * p.beta;
    let disc = ctx.mu * ctx.mu - sigma * c;
    if disc < 0.0 {
        return None;
    }
    // near branch via the numerically stable quotient form
    let d = if deep {
        (-ctx.mu - disc.sqrt()) / sigma
    } else {
        -c / (ctx.mu + disc.sqrt())
    };
    Some(p.a + d)
}

/// g(E) = kappa/beta - rhs(E); roots coincide with the pole condition.
fn explicit_residual(
    ctx: &KinematicContext,
    p: &VarshniParams,
    channel: Channel,
    lam: f64,
    n: u32,
    energy: f64,
) -> Option<f64> {
    let k2 = wave_number_squared(&ctx.with_energy(energy), p, channel);
    if k2 >= 0.0 {
        return None;
    }
    let kappa = (-k2).sqrt();
    let sigma = relativistic_coefficient(ctx);
    let ab = p.a * p.b;
    let c1 = 2.0 * ctx.mu * ab / p.beta + 2.0 * sigma * (energy - p.a) * ab / p.beta - sigma * ab * ab;
    let nl = f64::from(n) + lam;
    let rhs = (c1 - channel.centrifugal_factor() - nl * nl) / (2.0 * nl);
    Some(kappa / p.beta - rhs)
}

/// Locate the bound-state energy for quantum numbers (n, l) by a fixed
/// 2000-point bracket scan over the closed-channel window followed by
/// bisection, then verify the full complex pole residual. Returns `None`
/// when the well binds no such state.
///
/// The scan grid is uniform in kappa, not E: for small sigma the closed
/// window stretches to E ~ a - 2 mu / sigma while every root sits within
/// kappa <= beta * rhs_max of the threshold, so a kappa grid resolves the
/// physical region at any sigma. Both energy branches at each kappa are
/// visited (the deep branch only matters for exotic sign choices of a*b).
pub fn solve_bound_energy(
    ctx: &KinematicContext,
    p: &VarshniParams,
    channel: Channel,
    n: u32,
) -> Result<Option<BoundState>> {
    let lam = lambda(ctx, p, channel)?;
    let kappa_win = kappa_window_max(ctx, p, channel);
    if !(kappa_win > 0.0) || !kappa_win.is_finite() {
        return Ok(None);
    }
    // every root satisfies kappa/beta = rhs(E); rhs is linear in E, so its
    // maximum over the window sits at an endpoint, bounding the scan range
    let sigma = relativistic_coefficient(ctx);
    let ab = p.a * p.b;
    let nl = f64::from(n) + lam;
    let rhs_at = |e: f64| {
        let c1 = 2.0 * ctx.mu * ab / p.beta + 2.0 * sigma * (e - p.a) * ab / p.beta
            - sigma * ab * ab;
        (c1 - channel.centrifugal_factor() - nl * nl) / (2.0 * nl)
    };
    let e_deepest = p.a - 2.0 * ctx.mu / sigma;
    let rhs_max = rhs_at(p.a).max(rhs_at(e_deepest));
    if rhs_max <= 0.0 {
        return Ok(None);
    }
    let kappa_max = (p.beta * rhs_max * 1.05 + 1e-3 * p.beta).min(kappa_win * (1.0 - 1e-9));
    let eval = |e: f64| explicit_residual(ctx, p, channel, lam, n, e);

    let per_branch = SCAN_POINTS / 2;
    let mut best: Option<BoundState> = None;
    for deep in [false, true] {
        let mut prev: Option<(f64, f64)> = None;
        let mut bracket = None;
        for i in 0..per_branch {
            let kappa = kappa_max * (i as f64 + 0.5) / (per_branch as f64 + 0.5);
            let Some(e) = energy_at_kappa(ctx, p, channel, kappa, deep) else {
                prev = None;
                continue;
            };
            let Some(g) = eval(e) else {
                prev = None;
                continue;
            };
            if let Some((ep, gp)) = prev {
                if gp.signum() != g.signum() {
                    // order the bracket by energy, keeping the sign at the low end
                    bracket = if ep < e { Some((ep, gp, e)) } else { Some((e, g, ep)) };
                    break;
                }
            }
            prev = Some((e, g));
        }
        let Some((mut lo, g_lo, mut hi)) = bracket else {
            continue;
        };
        let lo_sign = g_lo.signum();
        for _ in 0..BISECT_ITERS {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break; // interval below f64 resolution
            }
            match eval(mid) {
                Some(g) if g.signum() == lo_sign => lo = mid,
                _ => hi = mid,
            }
        }
        let energy = 0.5 * (lo + hi);
        let residual = complex_residual(ctx, p, channel, n, energy)?;
        if residual <= RESIDUAL_TOL && energy < p.a && best.is_none() {
            best = Some(BoundState { n, channel, energy, residual });
        }
    }
    Ok(best)
}
