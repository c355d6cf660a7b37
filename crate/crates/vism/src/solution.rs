//! Bound-state reconstruction and error metrics.
//!
//! δ_E compares an eigenvalue against an exact reference, δ_ψ compares the
//! wavefunction on a uniform grid, and δ̂_E is the reference-free estimate:
//! the relative change of an eigenvalue between truncations N and N+1, both
//! taken on the optimal-length curve L̂(N).

use crate::basis::{eval_basis, BasisSpec, BoundaryMode, Parity};
use crate::eigen::{solve_potential, Spectrum};
use crate::error::{Result, VismError};
use crate::numeric::{HPReal, PrecisionContext};
use crate::optimize::LHatInterpolant;
use crate::potential::PotentialSpec;
use std::io::Write;

/// One eigenstate with its coefficient vector.
#[derive(Clone, Debug)]
pub struct BoundState {
    /// Index in the sorted spectrum.
    pub n: usize,
    pub energy: HPReal,
    pub coefficients: Vec<HPReal>,
    pub spec: BasisSpec,
    pub parity: Option<Parity>,
}

impl Spectrum {
    /// Extract one state; requires the spectrum to know its basis.
    pub fn state(&self, n: usize) -> Result<BoundState> {
        let spec = self.source.clone().ok_or(VismError::Config(
            "spectrum carries no basis information".into(),
        ))?;
        if n >= self.len() {
            return Err(VismError::Config(format!(
                "state {n} requested from a spectrum of {} states",
                self.len()
            )));
        }
        Ok(BoundState {
            n,
            energy: self.eigenvalues[n].clone(),
            coefficients: self.eigenvectors[n].clone(),
            spec,
            parity: self.parity.as_ref().map(|p| p[n]),
        })
    }
}

/// Error metrics for one state.
#[derive(Clone, Debug, Default)]
pub struct ErrorReport {
    pub delta_e: Option<HPReal>,
    pub delta_psi: Option<HPReal>,
    pub delta_e_hat: Option<HPReal>,
    /// Grid size used for delta_psi.
    pub grid_points: usize,
}

/// Bundle whatever error metrics the available references allow.
pub fn error_report(
    state: &BoundState,
    exact_e: Option<&HPReal>,
    exact_psi: Option<&dyn Fn(&HPReal) -> HPReal>,
    grid_points: usize,
    delta_e_hat: Option<HPReal>,
) -> Result<ErrorReport> {
    let delta_e = match exact_e {
        Some(e) => Some(delta_e_exact(state, e)?),
        None => None,
    };
    let delta_psi = match exact_psi {
        Some(psi) => Some(delta_psi_exact(state, psi, grid_points)?),
        None => None,
    };
    Ok(ErrorReport {
        delta_e,
        delta_psi,
        delta_e_hat,
        grid_points,
    })
}

/// ψ(x) = Σ A_flat·g_flat(x).
pub fn eval_psi(state: &BoundState, x: &HPReal) -> Result<HPReal> {
    if !state.spec.contains(x) {
        return Err(VismError::OutOfDomain(x.to_decimal_string(6)));
    }
    let mut acc = x - x; // zero at the right precision
    for (flat, coeff) in state.coefficients.iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let idx = state.spec.index(flat)?;
        acc = &acc + &(coeff * &eval_basis(&state.spec, &idx, x)?);
    }
    Ok(acc)
}

/// Relative eigenvalue error |E_exact − E| / |E_exact|.
pub fn delta_e_exact(state: &BoundState, exact_e: &HPReal) -> Result<HPReal> {
    if exact_e.is_zero() {
        return Err(VismError::DivisionByZero);
    }
    Ok((&(exact_e - &state.energy) / exact_e).abs())
}

/// Grid-averaged wavefunction error: the square root of
/// Σ|ψ_exact(x_i) − ψ(x_i)|² / Σ|ψ_exact(x_i)|² over a uniform M-point grid
/// spanning the state's domain. The approximate state's global sign is
/// flipped first if that reduces the metric, since the eigenvector phase is
/// arbitrary.
pub fn delta_psi_exact(
    state: &BoundState,
    exact_psi: impl Fn(&HPReal) -> HPReal,
    m: usize,
) -> Result<HPReal> {
    if m < 2 {
        return Err(VismError::Config("delta_psi grid needs at least 2 points".into()));
    }
    let (lo, hi) = state.spec.domain();
    let prec_zero = &lo - &lo;
    let step = &(&hi - &lo) / &ctx_like(&lo, (m - 1) as u32);
    let mut denom = prec_zero.clone();
    let mut sum_minus = prec_zero.clone();
    let mut sum_plus = prec_zero;
    for i in 0..m {
        // pin the last node to the endpoint so rounding cannot push the
        // grid outside the domain
        let x = if i == m - 1 {
            hi.clone()
        } else {
            &lo + &(&step * &ctx_like(&lo, i as u32))
        };
        let ex = exact_psi(&x);
        let ap = eval_psi(state, &x)?;
        denom = &denom + &ex.square();
        sum_minus = &sum_minus + &(&ex - &ap).square();
        sum_plus = &sum_plus + &(&ex + &ap).square();
    }
    if denom.is_zero() {
        return Err(VismError::ZeroReference);
    }
    let best = sum_minus.min(&sum_plus);
    Ok((&best / &denom).sqrt())
}

fn ctx_like(template: &HPReal, v: u32) -> HPReal {
    HPReal::raw(rug::Float::with_val(template.prec(), v))
}

/// Reference-free error estimate: solve at (N, L̂(N)) and (N+1, L̂(N+1)) and
/// return |E(N) − E(N+1)| / |E(N+1)| for the requested state.
pub fn delta_e_hat(
    pot: &PotentialSpec,
    mode: BoundaryMode,
    n: u32,
    state_index: usize,
    interpolant: &LHatInterpolant,
    ctx: &PrecisionContext,
) -> Result<HPReal> {
    Ok(delta_e_hat_batch(pot, mode, n, state_index + 1, interpolant, ctx)?
        .pop()
        .expect("batch returns state_index+1 entries"))
}

/// δ̂_E for states 0..count, from a single pair of solves.
pub fn delta_e_hat_batch(
    pot: &PotentialSpec,
    mode: BoundaryMode,
    n: u32,
    count: usize,
    interpolant: &LHatInterpolant,
    ctx: &PrecisionContext,
) -> Result<Vec<HPReal>> {
    let l_n = interpolant.evaluate(n, ctx)?;
    let l_n1 = interpolant.evaluate(n + 1, ctx)?;
    let coarse = solve_potential(pot, mode, n, &l_n, ctx)?;
    let fine = solve_potential(pot, mode, n + 1, &l_n1, ctx)?;
    let mut out = Vec::with_capacity(count);
    for s in 0..count {
        if s >= coarse.len() || s >= fine.len() {
            return Err(VismError::Config(format!(
                "state {s} not available at truncation N={n}"
            )));
        }
        let denom = fine.eigenvalues[s].abs();
        if denom.is_zero() {
            // exact zero eigenvalue: report the absolute change
            out.push((&coarse.eigenvalues[s] - &fine.eigenvalues[s]).abs());
        } else {
            out.push(
                (&(&coarse.eigenvalues[s] - &fine.eigenvalues[s]) / &fine.eigenvalues[s]).abs(),
            );
        }
    }
    Ok(out)
}

/// Plot-ready wavefunction samples: CSV `x,psi` decimal strings on a
/// uniform grid over the state's domain.
pub fn write_psi_csv(
    state: &BoundState,
    samples: usize,
    digits: u32,
    mut w: impl Write,
) -> Result<()> {
    if samples < 2 {
        return Err(VismError::Config("need at least 2 samples".into()));
    }
    let (lo, hi) = state.spec.domain();
    let step = &(&hi - &lo) / &ctx_like(&lo, (samples - 1) as u32);
    writeln!(w, "x,psi").map_err(VismError::Io)?;
    for i in 0..samples {
        let x = if i == samples - 1 {
            hi.clone()
        } else {
            &lo + &(&step * &ctx_like(&lo, i as u32))
        };
        let psi = eval_psi(state, &x)?;
        writeln!(
            w,
            "{},{}",
            x.to_decimal_string(digits),
            psi.to_decimal_string(digits)
        )
        .map_err(VismError::Io)?;
    }
    Ok(())
}
