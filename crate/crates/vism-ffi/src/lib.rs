//! C ABI for the spectral solver: opaque handles, status codes, decimal
//! strings through caller-provided buffers.
//!
//! All functions are safe to call from any thread; the last error message
//! is thread-local. Decimal strings keep the full requested precision, so
//! binding layers never round through binary floats.

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::ptr;
use vism::basis::{BoundaryMode, Parity};
use vism::eigen::Spectrum;
use vism::numeric::PrecisionContext;
use vism::optimize::{find_l_hat, LHatMethod};
use vism::potential::PotentialSpec;
use vism::run::{resolve_l, LChoice};
use vism::solution::{delta_e_hat, eval_psi};
use vism::VismError;

/// Status codes returned by every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VismStatus {
    Ok = 0,
    /// Bad input: unparsable potential, unknown mode, precision too low...
    Config = 2,
    /// The computation itself failed (no convergence, invalid bracket...).
    Numerical = 3,
    /// A required pointer argument was null.
    NullArgument = 4,
    /// The caller's buffer cannot hold the result (including the NUL).
    BufferTooSmall = 5,
    /// A state or argument index is out of range.
    OutOfRange = 6,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::new("").unwrap());
}

fn set_error(msg: &str) {
    let clean = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = clean);
}

fn status_of(err: &VismError) -> VismStatus {
    match err.exit_code() {
        2 => VismStatus::Config,
        _ => VismStatus::Numerical,
    }
}

/// Message of the most recent error on this thread. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn vism_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Solved eigenproblem handle.
pub struct VismSolution {
    spectrum: Spectrum,
    digits: u32,
    half_length: String,
}

unsafe fn read_str<'a>(ptr: *const c_char, what: &str) -> Result<&'a str, VismStatus> {
    if ptr.is_null() {
        set_error(&format!("{what} is null"));
        return Err(VismStatus::NullArgument);
    }
    match unsafe { CStr::from_ptr(ptr) }.to_str() {
        Ok(s) => Ok(s),
        Err(_) => {
            set_error(&format!("{what} is not valid UTF-8"));
            Err(VismStatus::Config)
        }
    }
}

fn write_str(out: *mut c_char, len: usize, value: &str) -> VismStatus {
    if out.is_null() {
        set_error("output buffer is null");
        return VismStatus::NullArgument;
    }
    let bytes = value.as_bytes();
    if bytes.len() + 1 > len {
        set_error(&format!(
            "buffer of {len} bytes cannot hold {} bytes plus NUL",
            bytes.len()
        ));
        return VismStatus::BufferTooSmall;
    }
    unsafe {
        ptr::copy_nonoverlapping(bytes.as_ptr(), out as *mut u8, bytes.len());
        *out.add(bytes.len()) = 0;
    }
    VismStatus::Ok
}

fn parse_mode(s: &str) -> Result<BoundaryMode, VismStatus> {
    match s {
        "periodic" => Ok(BoundaryMode::Periodic),
        "confinement" => Ok(BoundaryMode::Confinement),
        other => {
            set_error(&format!("mode must be periodic or confinement, got '{other}'"));
            Err(VismStatus::Config)
        }
    }
}

/// Solve for the lowest `states` eigenpairs.
///
/// `half_length` is a decimal string or "auto" (built-in calibration).
/// On success `*out` owns the solution; release it with
/// [`vism_solution_free`].
///
/// # Safety
/// `potential`, `mode` and `half_length` must be NUL-terminated strings;
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn vism_solve(
    potential: *const c_char,
    mode: *const c_char,
    n: u32,
    half_length: *const c_char,
    precision_digits: u32,
    states: u32,
    out: *mut *mut VismSolution,
) -> VismStatus {
    if out.is_null() {
        set_error("out is null");
        return VismStatus::NullArgument;
    }
    let potential = match unsafe { read_str(potential, "potential") } {
        Ok(s) => s,
        Err(st) => return st,
    };
    let mode = match unsafe { read_str(mode, "mode") }.and_then(|s| parse_mode(s)) {
        Ok(m) => m,
        Err(st) => return st,
    };
    let l = match unsafe { read_str(half_length, "half_length") } {
        Ok(s) => LChoice::parse(s),
        Err(st) => return st,
    };
    let solve = (|| -> vism::Result<(Spectrum, String)> {
        let ctx = PrecisionContext::new(precision_digits)?;
        let pot = PotentialSpec::parse(potential, &ctx)?;
        if states == 0 {
            return Err(VismError::Config("need at least one state".into()));
        }
        let l_val = resolve_l(&pot, n, &l, None, &ctx)?;
        let spectrum = vism::solve_potential(&pot, mode, n, &l_val, &ctx)?;
        if states as usize > spectrum.len() {
            return Err(VismError::Config(format!(
                "{states} states requested but the basis holds only {}",
                spectrum.len()
            )));
        }
        let l_text = l_val.to_decimal_string(ctx.digits());
        Ok((spectrum, l_text))
    })();
    match solve {
        Ok((spectrum, half_length)) => {
            let handle = Box::new(VismSolution {
                spectrum,
                digits: precision_digits,
                half_length,
            });
            unsafe { *out = Box::into_raw(handle) };
            VismStatus::Ok
        }
        Err(e) => {
            set_error(&e.to_string());
            status_of(&e)
        }
    }
}

/// Release a solution handle. Null is a no-op.
///
/// # Safety
/// `s` must come from [`vism_solve`] and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn vism_solution_free(s: *mut VismSolution) {
    if !s.is_null() {
        drop(unsafe { Box::from_raw(s) });
    }
}

/// Number of eigenpairs held by the solution.
///
/// # Safety
/// `s` must be a live handle from [`vism_solve`].
#[no_mangle]
pub unsafe extern "C" fn vism_solution_states(s: *const VismSolution) -> u32 {
    if s.is_null() {
        return 0;
    }
    unsafe { &*s }.spectrum.len() as u32
}

/// Eigenvalue of one state as a decimal string.
///
/// # Safety
/// `s` must be a live handle; `buf` must point to `len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn vism_solution_energy(
    s: *const VismSolution,
    state: u32,
    buf: *mut c_char,
    len: usize,
) -> VismStatus {
    if s.is_null() {
        set_error("solution is null");
        return VismStatus::NullArgument;
    }
    let sol = unsafe { &*s };
    if state as usize >= sol.spectrum.len() {
        set_error(&format!("state {state} out of range"));
        return VismStatus::OutOfRange;
    }
    let text = sol.spectrum.eigenvalues[state as usize].to_decimal_string(sol.digits);
    write_str(buf, len, &text)
}

/// Parity label of one state: 0 even, 1 odd, -1 unknown (not solved
/// blockwise).
///
/// # Safety
/// `s` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn vism_solution_parity(
    s: *const VismSolution,
    state: u32,
    out: *mut c_int,
) -> VismStatus {
    if s.is_null() || out.is_null() {
        set_error("null argument");
        return VismStatus::NullArgument;
    }
    let sol = unsafe { &*s };
    if state as usize >= sol.spectrum.len() {
        set_error(&format!("state {state} out of range"));
        return VismStatus::OutOfRange;
    }
    let value = match sol.spectrum.parity.as_ref().map(|p| p[state as usize]) {
        Some(Parity::Even) => 0,
        Some(Parity::Odd) => 1,
        None => -1,
    };
    unsafe { *out = value };
    VismStatus::Ok
}

/// Half-length the solution was computed at, as a decimal string (useful
/// with "auto").
///
/// # Safety
/// `s` must be a live handle; `buf` must point to `len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn vism_solution_half_length(
    s: *const VismSolution,
    buf: *mut c_char,
    len: usize,
) -> VismStatus {
    if s.is_null() {
        set_error("solution is null");
        return VismStatus::NullArgument;
    }
    let sol = unsafe { &*s };
    write_str(buf, len, &sol.half_length.clone())
}

/// Wavefunction value ψ_state(x); `x` is a decimal string inside the
/// solve domain.
///
/// # Safety
/// `s` must be a live handle; `x` a NUL-terminated string; `buf` must
/// point to `len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn vism_solution_eval_psi(
    s: *const VismSolution,
    state: u32,
    x: *const c_char,
    buf: *mut c_char,
    len: usize,
) -> VismStatus {
    if s.is_null() {
        set_error("solution is null");
        return VismStatus::NullArgument;
    }
    let sol = unsafe { &*s };
    if state as usize >= sol.spectrum.len() {
        set_error(&format!("state {state} out of range"));
        return VismStatus::OutOfRange;
    }
    let x = match unsafe { read_str(x, "x") } {
        Ok(v) => v,
        Err(st) => return st,
    };
    let result = (|| -> vism::Result<String> {
        let ctx = PrecisionContext::new(sol.digits)?;
        let point = ctx.from_str(x)?;
        let state = sol.spectrum.state(state as usize)?;
        Ok(eval_psi(&state, &point)?.to_decimal_string(sol.digits))
    })();
    match result {
        Ok(text) => write_str(buf, len, &text),
        Err(e) => {
            set_error(&e.to_string());
            status_of(&e)
        }
    }
}

/// Reference-free error estimate δ̂_E of one state: the relative change of
/// its eigenvalue between truncations N and N+1, both on the calibrated
/// L̂(N) curve. Requires a built-in calibration for the potential.
///
/// # Safety
/// `potential` and `mode` must be NUL-terminated strings; `buf` must point
/// to `len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn vism_delta_e_hat(
    potential: *const c_char,
    mode: *const c_char,
    n: u32,
    state: u32,
    precision_digits: u32,
    buf: *mut c_char,
    len: usize,
) -> VismStatus {
    let potential = match unsafe { read_str(potential, "potential") } {
        Ok(s) => s,
        Err(st) => return st,
    };
    let mode = match unsafe { read_str(mode, "mode") }.and_then(|s| parse_mode(s)) {
        Ok(m) => m,
        Err(st) => return st,
    };
    let result = (|| -> vism::Result<String> {
        let ctx = PrecisionContext::new(precision_digits)?;
        let pot = PotentialSpec::parse(potential, &ctx)?;
        let anchors = vism::calibration::builtin_anchors(&pot, &ctx)
            .ok_or_else(|| {
                VismError::Config(format!(
                    "no built-in calibration for '{}'",
                    pot.canonical_text()
                ))
            })??;
        let interp = vism::optimize::build_interpolant(anchors)?;
        let d = delta_e_hat(&pot, mode, n, state as usize, &interp, &ctx)?;
        Ok(d.to_decimal_string(ctx.digits()))
    })();
    match result {
        Ok(text) => write_str(buf, len, &text),
        Err(e) => {
            set_error(&e.to_string());
            status_of(&e)
        }
    }
}

/// Locate the optimal half-length L̂(N) by a reference-free method
/// ("energy-min-confinement" or "energy-inflection-periodic").
///
/// # Safety
/// `potential`, `method` and `tol_l` must be NUL-terminated strings; `buf`
/// must point to `len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn vism_find_l_hat(
    potential: *const c_char,
    method: *const c_char,
    n: u32,
    precision_digits: u32,
    tol_l: *const c_char,
    buf: *mut c_char,
    len: usize,
) -> VismStatus {
    let potential = match unsafe { read_str(potential, "potential") } {
        Ok(s) => s,
        Err(st) => return st,
    };
    let method_text = match unsafe { read_str(method, "method") } {
        Ok(s) => s,
        Err(st) => return st,
    };
    let tol_text = match unsafe { read_str(tol_l, "tol_l") } {
        Ok(s) => s,
        Err(st) => return st,
    };
    let result = (|| -> vism::Result<String> {
        let method = LHatMethod::parse(method_text)?;
        if matches!(
            method,
            LHatMethod::EnergyErrorMin | LHatMethod::WavefunctionErrorMin
        ) {
            return Err(VismError::Config(
                "reference-based methods are not exposed over the C ABI; \
                 use the library or the CLI"
                    .into(),
            ));
        }
        let ctx = PrecisionContext::new(precision_digits)?;
        let pot = PotentialSpec::parse(potential, &ctx)?;
        let tol = ctx.from_str(tol_text)?;
        let anchor = find_l_hat(&pot, method, n, 0, None, None, &ctx, &tol)?;
        Ok(anchor.l_hat.to_decimal_string(ctx.digits()))
    })();
    match result {
        Ok(text) => write_str(buf, len, &text),
        Err(e) => {
            set_error(&e.to_string());
            status_of(&e)
        }
    }
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn vism_version() -> *const c_char {
    static VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");
    VERSION.as_ptr() as *const c_char
}
