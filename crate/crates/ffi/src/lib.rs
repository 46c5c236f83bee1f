//! C ABI for the vscat scattering library.
//!
//! The surface is a single opaque model handle (masses + potential + energy)
//! with value-returning calls for phase shifts, bound states, and sampled
//! wavefunctions. Every function returns a [`VscatStatus`] code; out-pointers
//! are written only on `Ok`. The generated header lives at
//! `include/vscat.h`.

use std::ffi::{c_char, c_double, c_uint};
use std::ptr;

use vscat::bound::solve_bound_energy;
use vscat::error::Error;
use vscat::kinematics::{KinematicContext, TwoBodyMasses};
use vscat::potential::VarshniParams;
use vscat::scattering::{phase_shift, radial_wavefunction, Channel};

/// Status codes returned by every vscat call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VscatStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ClosedChannel = 3,
    SupercriticalCoupling = 4,
    GammaPole = 5,
    NoConvergence = 6,
    NoBoundState = 7,
    InternalError = 8,
}

fn status_of(e: &Error) -> VscatStatus {
    match e {
        Error::Domain(_) | Error::Config(_) => VscatStatus::InvalidArgument,
        Error::EvanescentChannel { .. } => VscatStatus::ClosedChannel,
        Error::SupercriticalStrength { .. } => VscatStatus::SupercriticalCoupling,
        Error::GammaPole { .. } => VscatStatus::GammaPole,
        Error::Convergence { .. } | Error::DegenerateConnection(_) => VscatStatus::NoConvergence,
        Error::AsymptoticRegimeNotReached { .. } => VscatStatus::InternalError,
    }
}

/// Opaque scattering model: two masses, the potential, and the energy.
pub struct VscatModel {
    ctx: KinematicContext,
    potential: VarshniParams,
}

/// Phase-shift output record.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct VscatPhaseShift {
    /// Phase shift delta_l (radians, continuous-argument convention).
    pub delta: c_double,
    /// Asymptotic wave number.
    pub k: c_double,
    /// Amplitude-matched normalization constant.
    pub normalization: c_double,
    /// Indicial exponent lambda.
    pub lambda: c_double,
}

/// Bound-state output record.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct VscatBoundState {
    /// Energy E_{n,l} (below the potential asymptote a).
    pub energy: c_double,
    /// Magnitude of the pole-condition residual at the solution.
    pub residual: c_double,
}

/// Create a model. `sigma_override` replaces (mu/eta)^3 when it is a finite
/// positive number; pass NaN to use the mass formula. Returns a handle through
/// `out`; free it with [`vscat_model_free`].
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn vscat_model_new(
    m1: c_double,
    m2: c_double,
    sigma_override: c_double,
    a: c_double,
    b: c_double,
    beta: c_double,
    energy: c_double,
    out: *mut *mut VscatModel,
) -> VscatStatus {
    if out.is_null() {
        return VscatStatus::NullPointer;
    }
    let model = (|| -> Result<VscatModel, Error> {
        let masses = TwoBodyMasses::new(m1, m2)?;
        let mut ctx = KinematicContext::new(masses, energy)?;
        if !sigma_override.is_nan() {
            ctx = ctx.with_sigma_override(sigma_override)?;
        }
        let potential = VarshniParams::new(a, b, beta)?;
        Ok(VscatModel { ctx, potential })
    })();
    match model {
        Ok(m) => {
            unsafe { *out = Box::into_raw(Box::new(m)) };
            VscatStatus::Ok
        }
        Err(e) => {
            unsafe { *out = ptr::null_mut() };
            status_of(&e)
        }
    }
}

/// Destroy a model handle. A null handle is a no-op.
///
/// # Safety
/// `model` must be null or a pointer from [`vscat_model_new`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn vscat_model_free(model: *mut VscatModel) {
    if !model.is_null() {
        drop(unsafe { Box::from_raw(model) });
    }
}

/// Phase shift, wave number, normalization and lambda for channel l.
///
/// # Safety
/// `model` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn vscat_phase_shift(
    model: *const VscatModel,
    l: c_uint,
    out: *mut VscatPhaseShift,
) -> VscatStatus {
    if model.is_null() || out.is_null() {
        return VscatStatus::NullPointer;
    }
    let m = unsafe { &*model };
    let ch = Channel::new(l);
    let lam = match vscat::scattering::lambda(&m.ctx, &m.potential, ch) {
        Ok(v) => v,
        Err(e) => return status_of(&e),
    };
    match phase_shift(&m.ctx, &m.potential, ch) {
        Ok(res) => {
            unsafe {
                *out = VscatPhaseShift {
                    delta: res.delta,
                    k: res.k,
                    normalization: res.normalization,
                    lambda: lam,
                };
            }
            VscatStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Bound-state energy for quantum numbers (n, l). Returns `NoBoundState`
/// when the well binds no such state (not an error condition).
///
/// # Safety
/// `model` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn vscat_bound_state(
    model: *const VscatModel,
    n: c_uint,
    l: c_uint,
    out: *mut VscatBoundState,
) -> VscatStatus {
    if model.is_null() || out.is_null() {
        return VscatStatus::NullPointer;
    }
    let m = unsafe { &*model };
    match solve_bound_energy(&m.ctx, &m.potential, Channel::new(l), n) {
        Ok(Some(state)) => {
            unsafe {
                *out = VscatBoundState { energy: state.energy, residual: state.residual };
            }
            VscatStatus::Ok
        }
        Ok(None) => VscatStatus::NoBoundState,
        Err(e) => status_of(&e),
    }
}

/// Sample the normalized radial wavefunction on `len` radii, writing real and
/// imaginary parts to `out_re` / `out_im`.
///
/// # Safety
/// `model`, `r`, `out_re`, `out_im` must be valid for `len` elements.
#[no_mangle]
pub unsafe extern "C" fn vscat_radial_wavefunction(
    model: *const VscatModel,
    l: c_uint,
    r: *const c_double,
    len: usize,
    out_re: *mut c_double,
    out_im: *mut c_double,
) -> VscatStatus {
    if model.is_null() || r.is_null() || out_re.is_null() || out_im.is_null() {
        return VscatStatus::NullPointer;
    }
    if len == 0 {
        return VscatStatus::InvalidArgument;
    }
    let m = unsafe { &*model };
    let grid = unsafe { std::slice::from_raw_parts(r, len) };
    match radial_wavefunction(&m.ctx, &m.potential, Channel::new(l), grid) {
        Ok(sol) => {
            for (i, z) in sol.psi.iter().enumerate() {
                unsafe {
                    *out_re.add(i) = z.re;
                    *out_im.add(i) = z.im;
                }
            }
            VscatStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Static, NUL-terminated description of a status code.
#[no_mangle]
pub extern "C" fn vscat_status_message(status: VscatStatus) -> *const c_char {
    let s: &'static [u8] = match status {
        VscatStatus::Ok => b"ok\0",
        VscatStatus::NullPointer => b"null pointer argument\0",
        VscatStatus::InvalidArgument => b"invalid argument\0",
        VscatStatus::ClosedChannel => b"closed (evanescent) channel\0",
        VscatStatus::SupercriticalCoupling => b"supercritical coupling strength\0",
        VscatStatus::GammaPole => b"gamma-function pole at a physical point\0",
        VscatStatus::NoConvergence => b"series did not converge\0",
        VscatStatus::NoBoundState => b"no bound state with those quantum numbers\0",
        VscatStatus::InternalError => b"internal error\0",
    };
    s.as_ptr().cast()
}
