//! Exact and perturbative reference solutions.
//!
//! Everything here is expressed in the dimensionless units of the solver:
//! −ψ″ + x²ψ = Eψ has eigenvalues E_n = 2n+1 and Gaussian–Hermite
//! eigenfunctions. The quartic references tabulate zeroth- and first-order
//! perturbation theory for −ψ″ + x²ψ + ε′x⁴ψ = Eψ, with the x⁴ matrix
//! element taken from a ladder-operator expansion rather than a transcribed
//! formula, so the table cross-checks itself.

use crate::error::{Result, VismError};
use crate::numeric::{hermite, HPReal, PrecisionContext};

/// E_n of the dimensionless oscillator: exactly 2n+1.
pub fn sho_energy(n: u32, ctx: &PrecisionContext) -> HPReal {
    ctx.from_u32(2 * n + 1)
}

/// Normalized oscillator eigenfunction
/// ψ_n(x) = π^{-1/4}·H_n(x)·e^{-x²/2}/√(2ⁿ·n!).
pub fn sho_psi(n: u32, x: &HPReal, ctx: &PrecisionContext) -> HPReal {
    let quarter = &ctx.one() / &ctx.from_u32(4);
    let norm0 = ctx.pi().pow(&quarter).recip();
    // 2ⁿ·n! accumulated exactly
    let mut scale = ctx.one();
    for k in 1..=n {
        scale = &scale * &ctx.from_u32(2 * k);
    }
    let gauss = (-&(&x.square() / &ctx.from_u32(2))).exp();
    &(&(&norm0 * &hermite(n, x)) / &scale.sqrt()) * &gauss
}

/// ⟨n|x⁴|n⟩ by brute-force expansion of (a+a†)⁴/4 acting on |n⟩.
///
/// States are kept as coefficient vectors over the number basis; applying
/// (a+a†) four times and projecting back onto |n⟩ gives the matrix element
/// without quoting any closed form.
pub fn x4_diagonal_ladder(n: u32, ctx: &PrecisionContext) -> HPReal {
    let offset = 4usize; // (a+a†)⁴ reaches at most n±4
    let dim = n as usize + offset + 1 + offset;
    let mut coeffs = vec![ctx.zero(); dim];
    coeffs[n as usize + offset] = ctx.one();
    for _ in 0..4 {
        let mut next = vec![ctx.zero(); dim];
        for (slot, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            // slot s holds the occupation number s − offset; slots below
            // offset stay zero because a|0⟩ vanishes
            let occ = (slot - offset) as u32;
            // a|m⟩ = √m|m−1⟩
            if occ > 0 {
                let amp = ctx.from_u32(occ).sqrt();
                next[slot - 1] = &next[slot - 1] + &(c * &amp);
            }
            // a†|m⟩ = √(m+1)|m+1⟩
            if slot + 1 < dim {
                let amp = ctx.from_u32(occ + 1).sqrt();
                next[slot + 1] = &next[slot + 1] + &(c * &amp);
            }
        }
        coeffs = next;
    }
    // x = (a+a†)/√2 so x⁴ = (a+a†)⁴/4
    &coeffs[n as usize + offset] / &ctx.from_u32(4)
}

/// Zeroth- or first-order perturbative energy of the quartic oscillator:
/// order 0 gives 2n+1, order 1 adds eps·⟨n|x⁴|n⟩.
pub fn quartic_perturbation_energy(
    n: u32,
    order: u32,
    eps: &HPReal,
    ctx: &PrecisionContext,
) -> Result<HPReal> {
    match order {
        0 => Ok(sho_energy(n, ctx)),
        1 => Ok(&sho_energy(n, ctx) + &(eps * &x4_diagonal_ladder(n, ctx))),
        other => Err(VismError::UnsupportedOrder(other)),
    }
}
