//! Full eigen-decomposition of dense symmetric matrices at arbitrary
//! precision, by cyclic Jacobi rotations.
//!
//! Jacobi is unconditionally stable for symmetric matrices and carries no
//! precision-dependent magic constants, which makes it the right tool when
//! the working precision is a runtime parameter. Rotation order is fixed,
//! so results are deterministic.

use crate::basis::{BasisSpec, Parity};
use crate::error::{Result, VismError};
use crate::hamiltonian::HamiltonianMatrix;
use crate::matrix::DenseMatrix;
use crate::numeric::{HPReal, PrecisionContext};
use rug::ops::CompleteRound;
use rug::Float;

/// Sweep limit. Cyclic Jacobi converges quadratically; needing more than
/// this many sweeps at any precision signals a bug, not a hard matrix.
const MAX_SWEEPS: u32 = 50;

/// Sorted eigenpairs of a symmetric matrix.
#[derive(Clone, Debug)]
pub struct Spectrum {
    /// Ascending eigenvalues.
    pub eigenvalues: Vec<HPReal>,
    /// Unit-norm eigenvectors, aligned with `eigenvalues`; the
    /// largest-magnitude component of each is positive (ties broken by
    /// lowest index).
    pub eigenvectors: Vec<Vec<HPReal>>,
    /// Per-state parity labels when solved blockwise.
    pub parity: Option<Vec<Parity>>,
    /// The basis the coefficient vectors refer to, when known.
    pub source: Option<BasisSpec>,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn energy(&self, n: usize) -> &HPReal {
        &self.eigenvalues[n]
    }
}

/// Eigen-decomposition of a symmetric matrix.
///
/// Sweeps run until the off-diagonal Frobenius norm drops below
/// 10^-(digits+guard/2) relative to ‖M‖_F.
pub fn eigh(m: &DenseMatrix, ctx: &PrecisionContext) -> Result<Spectrum> {
    let sym_tol = ctx.pow10(-(ctx.digits() as i32 - 10));
    m.require_symmetric(&sym_tol)?;
    let (values, vectors) = jacobi(m, ctx)?;
    Ok(sorted_spectrum(values, vectors, ctx))
}

fn jacobi(m: &DenseMatrix, ctx: &PrecisionContext) -> Result<(Vec<Float>, Vec<Float>)> {
    let prec = ctx.prec_bits();
    let n = m.dim();
    // working copy (upper triangle is authoritative) and eigenvector matrix
    let mut a: Vec<Float> = (0..n * n)
        .map(|i| Float::with_val(prec, &m.get(i / n, i % n).0))
        .collect();
    let mut v: Vec<Float> = (0..n * n)
        .map(|i| Float::with_val(prec, u32::from(i / n == i % n)))
        .collect();
    let mut d: Vec<Float> = (0..n).map(|i| a[i * n + i].clone()).collect();
    let mut b = d.clone();
    let mut z: Vec<Float> = (0..n).map(|_| Float::new(prec)).collect();

    let norm_f = {
        let mut acc = Float::new(prec);
        for x in &a {
            acc += x.clone().square();
        }
        acc.sqrt()
    };
    if norm_f.is_zero() {
        return Ok((d, v));
    }
    // 10^-(digits + guard/2) · ‖M‖_F
    let thresh = {
        let e = -(ctx.digits() as i32) - (ctx.guard_digits() as i32) / 2;
        Float::with_val(prec, rug::ops::Pow::pow(&Float::with_val(prec, 10), e)) * &norm_f
    };

    let one = Float::with_val(prec, 1);
    for _sweep in 0..MAX_SWEEPS {
        let mut off2 = Float::new(prec);
        for p in 0..n {
            for q in (p + 1)..n {
                off2 += a[p * n + q].clone().square();
            }
        }
        let off = (off2 * 2u32).sqrt();
        if off <= thresh {
            return Ok((d, v));
        }

        for p in 0..(n - 1) {
            for q in (p + 1)..n {
                if a[p * n + q].is_zero() {
                    continue;
                }
                let apq = a[p * n + q].clone();
                // rotation angle via the stable half-angle form
                let theta = Float::with_val(prec, (&d[q] - &d[p]).complete(prec) / &apq) / 2u32;
                let mut t = (theta.clone().square() + &one).sqrt() + theta.clone().abs();
                t.recip_mut();
                if theta.is_sign_negative() && !theta.is_zero() {
                    t = -t;
                }
                let c = ((t.clone().square() + &one).sqrt()).recip();
                let s = Float::with_val(prec, &t * &c);

                let h = Float::with_val(prec, &t * &apq);
                z[p] -= &h;
                z[q] += &h;
                d[p] -= &h;
                d[q] += &h;
                a[p * n + q] = Float::new(prec);

                // a'_x = c·a_x − s·a_y ; a'_y = s·a_x + c·a_y
                let rotate = |arr: &mut Vec<Float>, x: usize, y: usize| {
                    let new_x = Float::with_val(prec, arr[x].mul_sub_mul_ref(&c, &arr[y], &s));
                    let new_y = Float::with_val(prec, arr[y].mul_add_mul_ref(&c, &arr[x], &s));
                    arr[x] = new_x;
                    arr[y] = new_y;
                };
                for j in 0..p {
                    rotate(&mut a, j * n + p, j * n + q);
                }
                for j in (p + 1)..q {
                    rotate(&mut a, p * n + j, j * n + q);
                }
                for j in (q + 1)..n {
                    rotate(&mut a, p * n + j, q * n + j);
                }
                for j in 0..n {
                    rotate(&mut v, j * n + p, j * n + q);
                }
            }
        }

        for i in 0..n {
            b[i] += &z[i];
            d[i] = b[i].clone();
            z[i] = Float::new(prec);
        }
    }
    Err(VismError::NoConvergence(MAX_SWEEPS))
}

/// Sort ascending, normalize, fix signs.
fn sorted_spectrum(d: Vec<Float>, v: Vec<Float>, ctx: &PrecisionContext) -> Spectrum {
    let prec = ctx.prec_bits();
    let n = d.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| d[i].partial_cmp(&d[j]).expect("finite").then(i.cmp(&j)));

    let mut eigenvalues = Vec::with_capacity(n);
    let mut eigenvectors = Vec::with_capacity(n);
    for &col in &order {
        eigenvalues.push(HPReal::raw(d[col].clone()));
        let mut comp: Vec<Float> = (0..n).map(|r| v[r * n + col].clone()).collect();
        let mut norm = Float::new(prec);
        for x in &comp {
            norm += x.clone().square();
        }
        let norm = norm.sqrt();
        if !norm.is_zero() {
            for x in comp.iter_mut() {
                *x /= &norm;
            }
        }
        // sign: largest-magnitude component positive, first maximum wins
        let mut best = 0usize;
        for (j, x) in comp.iter().enumerate() {
            if x.clone().abs() > comp[best].clone().abs() {
                best = j;
            }
        }
        if comp[best].is_sign_negative() && !comp[best].is_zero() {
            for x in comp.iter_mut() {
                *x = (-&*x).complete(prec);
            }
        }
        eigenvectors.push(comp.into_iter().map(HPReal::raw).collect());
    }
    Spectrum {
        eigenvalues,
        eigenvectors,
        parity: None,
        source: None,
    }
}

/// Solve each parity block separately and merge: eigenvalues ascending,
/// block eigenvectors mapped back to flat indexing (zero-padded), parity
/// labels attached. Equal eigenvalues order even before odd.
pub fn eigh_blockwise(h: &HamiltonianMatrix, ctx: &PrecisionContext) -> Result<Spectrum> {
    let blocks = h.parity_blocks(ctx)?;
    let even = eigh(&blocks.even, ctx)?;
    let odd = eigh(&blocks.odd, ctx)?;
    let dim = h.dim();

    let pad = |vec: &[HPReal], map: &[usize]| -> Vec<HPReal> {
        let mut full = vec![ctx.zero(); dim];
        for (block_pos, &flat) in map.iter().enumerate() {
            full[flat] = vec[block_pos].clone();
        }
        full
    };

    let mut eigenvalues = Vec::with_capacity(dim);
    let mut eigenvectors = Vec::with_capacity(dim);
    let mut parity = Vec::with_capacity(dim);
    let (mut i, mut j) = (0usize, 0usize);
    while i < even.len() || j < odd.len() {
        let take_even = if i >= even.len() {
            false
        } else if j >= odd.len() {
            true
        } else {
            even.eigenvalues[i].cmp_total(&odd.eigenvalues[j]) != std::cmp::Ordering::Greater
        };
        if take_even {
            eigenvalues.push(even.eigenvalues[i].clone());
            eigenvectors.push(pad(&even.eigenvectors[i], &blocks.even_map));
            parity.push(Parity::Even);
            i += 1;
        } else {
            eigenvalues.push(odd.eigenvalues[j].clone());
            eigenvectors.push(pad(&odd.eigenvectors[j], &blocks.odd_map));
            parity.push(Parity::Odd);
            j += 1;
        }
    }
    Ok(Spectrum {
        eigenvalues,
        eigenvectors,
        parity: Some(parity),
        source: Some(h.spec().clone()),
    })
}

/// Full-matrix solve, always available as a cross-check.
pub fn eigh_full(h: &HamiltonianMatrix, ctx: &PrecisionContext) -> Result<Spectrum> {
    let mut s = eigh(h.matrix(), ctx)?;
    s.source = Some(h.spec().clone());
    Ok(s)
}

/// Blockwise when the parity blocks exist, full-matrix otherwise.
pub fn solve_hamiltonian(h: &HamiltonianMatrix, ctx: &PrecisionContext) -> Result<Spectrum> {
    if h.blocks().is_some() {
        eigh_blockwise(h, ctx)
    } else {
        eigh_full(h, ctx)
    }
}

/// Assemble and solve in one step.
pub fn solve_potential(
    pot: &crate::potential::PotentialSpec,
    mode: crate::basis::BoundaryMode,
    n: u32,
    l: &HPReal,
    ctx: &PrecisionContext,
) -> Result<Spectrum> {
    let spec = BasisSpec::new(mode, n, l.clone())?;
    let h = crate::hamiltonian::assemble(&spec, pot, ctx)?;
    solve_hamiltonian(&h, ctx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hamiltonian::assemble;
    use crate::potential::PotentialSpec;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn ctx(digits: u32) -> PrecisionContext {
        PrecisionContext::new(digits).unwrap()
    }

    fn random_symmetric(n: usize, c: &PrecisionContext, seed: u64) -> DenseMatrix {
        let mut rng = StdRng::seed_from_u64(seed);
        let vals: Vec<Vec<f64>> = (0..n)
            .map(|_| (0..n).map(|_| rng.random_range(-2.0..2.0)).collect())
            .collect();
        DenseMatrix::from_fn(n, |i, j| {
            let (i, j) = if i <= j { (i, j) } else { (j, i) };
            c.from_f64(vals[i][j])
        })
    }

    #[test]
    fn identity_matrix() {
        let c = ctx(30);
        let m = DenseMatrix::from_fn(3, |i, j| if i == j { c.one() } else { c.zero() });
        let s = eigh(&m, &c).unwrap();
        for v in &s.eigenvalues {
            assert_eq!(*v, c.one());
        }
    }

    #[test]
    fn two_by_two_closed_form() {
        // [[a,b],[b,a]] has eigenvalues a∓b with vectors (1,∓1)/√2
        let c = ctx(30);
        let m = DenseMatrix::from_fn(2, |i, j| if i == j { c.from_u32(2) } else { c.one() });
        let s = eigh(&m, &c).unwrap();
        let tol = &c.working_epsilon() * &c.from_u32(100);
        assert!((&s.eigenvalues[0] - &c.one()).abs() <= tol);
        assert!((&s.eigenvalues[1] - &c.from_u32(3)).abs() <= tol);
        let isq2 = c.from_u32(2).sqrt().recip();
        // sign convention: tie on magnitude → first component positive
        assert!((&s.eigenvectors[0][0] - &isq2).abs() <= tol);
        assert!((&s.eigenvectors[0][1] + &isq2).abs() <= tol);
        assert!((&s.eigenvectors[1][0] - &isq2).abs() <= tol);
        assert!((&s.eigenvectors[1][1] - &isq2).abs() <= tol);
    }

    #[test]
    fn reconstruction_trace_residual_orthogonality() {
        let c = ctx(40);
        let n = 8;
        let m = random_symmetric(n, &c, 99);
        let s = eigh(&m, &c).unwrap();
        let scale = m.max_abs().max(&c.one());
        let tol = &c.pow10(-(c.digits() as i32 - c.guard_digits() as i32)) * &scale;

        // Σ ε v vᵀ reconstructs M entrywise
        for i in 0..n {
            for j in 0..n {
                let mut acc = c.zero();
                for k in 0..n {
                    acc = &acc
                        + &(&(&s.eigenvalues[k] * &s.eigenvectors[k][i]) * &s.eigenvectors[k][j]);
                }
                assert!((&acc - m.get(i, j)).abs() <= tol, "({i},{j})");
            }
        }

        // trace preservation
        let sum: HPReal = s
            .eigenvalues
            .iter()
            .fold(c.zero(), |acc, v| &acc + v);
        assert!((&sum - &m.trace()).abs() <= tol);

        // residual ‖Mv − εv‖∞
        for k in 0..n {
            for i in 0..n {
                let mut mv = c.zero();
                for j in 0..n {
                    mv = &mv + &(m.get(i, j) * &s.eigenvectors[k][j]);
                }
                let r = (&mv - &(&s.eigenvalues[k] * &s.eigenvectors[k][i])).abs();
                assert!(r <= tol, "state {k} component {i} residual {r}");
            }
        }

        // pairwise orthogonality
        let otol = c.pow10(-(c.digits() as i32 / 2));
        for k in 0..n {
            for l in (k + 1)..n {
                let mut dot = c.zero();
                for i in 0..n {
                    dot = &dot + &(&s.eigenvectors[k][i] * &s.eigenvectors[l][i]);
                }
                assert!(dot.abs() <= otol, "states {k},{l} overlap {dot}");
            }
        }
    }

    #[test]
    fn rejects_asymmetric_matrix() {
        let c = ctx(30);
        let mut m = DenseMatrix::zeros(2, &c);
        m.set(0, 1, c.one());
        m.set(1, 0, c.from_f64(0.5));
        assert!(matches!(eigh(&m, &c), Err(VismError::NotSymmetric { .. })));
    }

    #[test]
    fn sho_lowest_eigenvalue_near_one() {
        // even 5×5 block of the N=5, L=4 oscillator problem
        let c = ctx(30);
        let spec = BasisSpec::periodic(5, c.from_u32(4)).unwrap();
        let pot = PotentialSpec::parse("x^2", &c).unwrap();
        let h = assemble(&spec, &pot, &c).unwrap();
        let blocks = h.parity_blocks(&c).unwrap();
        assert_eq!(blocks.even.dim(), 5);
        let s = eigh(&blocks.even, &c).unwrap();
        assert!(
            (&s.eigenvalues[0] - &c.one()).abs() < c.from_f64(1e-2),
            "E0 = {}",
            s.eigenvalues[0]
        );
    }

    #[test]
    fn sho_parity_alternation_and_block_union() {
        let c = ctx(30);
        let spec = BasisSpec::periodic(10, c.from_u32(5)).unwrap();
        let pot = PotentialSpec::parse("x^2", &c).unwrap();
        let h = assemble(&spec, &pot, &c).unwrap();
        let s = eigh_blockwise(&h, &c).unwrap();
        let parities = s.parity.as_ref().unwrap();
        assert_eq!(
            &parities[..4],
            &[Parity::Even, Parity::Odd, Parity::Even, Parity::Odd]
        );

        // merged block spectrum equals the full-matrix spectrum as multisets
        let full = eigh_full(&h, &c).unwrap();
        let scale = h.matrix().max_abs();
        let tol = &c.pow10(-(c.digits() as i32 - 10)) * &scale;
        for (a, b) in s.eigenvalues.iter().zip(full.eigenvalues.iter()) {
            assert!((a - b).abs() <= tol, "{a} vs {b}");
        }

        // vectors map back to flat indexing: odd states have no cosine weight
        for (k, p) in parities.iter().enumerate() {
            if *p == Parity::Odd {
                for flat in 0..5 {
                    assert!(s.eigenvectors[k][flat].is_zero());
                }
            }
        }
    }

    #[test]
    fn free_particle_degeneracy_structure() {
        let c = ctx(30);
        let spec = BasisSpec::periodic(4, c.from_f64(1.5)).unwrap();
        let h = assemble(&spec, &PotentialSpec::zero(), &c).unwrap();
        let s = eigh_blockwise(&h, &c).unwrap();
        let tol = &c.working_epsilon() * &c.from_u32(1000);
        // zero appears once
        assert!(s.eigenvalues[0].abs() <= tol);
        assert!(s.eigenvalues[1].abs() > tol.abs());
        // each (mπ/L)², m = 1..3, appears exactly twice (sine and cosine)
        for m in 1..=3u32 {
            let want = (&(&c.from_u32(m) * &c.pi()) / &c.from_f64(1.5)).square();
            let hits = s
                .eigenvalues
                .iter()
                .filter(|v| (*v - &want).abs() <= &tol * &want)
                .count();
            assert_eq!(hits, 2, "m={m}");
        }
    }

    #[test]
    fn rayleigh_ritz_monotonicity_in_n() {
        // growing the basis can only lower or preserve each sorted Ritz value
        let c = ctx(30);
        let pot = PotentialSpec::parse("x^2", &c).unwrap();
        for mode in [crate::basis::BoundaryMode::Periodic, crate::basis::BoundaryMode::Confinement] {
            let l = c.from_u32(6);
            let small = BasisSpec::new(mode, 6, l.clone()).unwrap();
            let large = BasisSpec::new(mode, 7, l).unwrap();
            let s_small =
                solve_hamiltonian(&assemble(&small, &pot, &c).unwrap(), &c).unwrap();
            let s_large =
                solve_hamiltonian(&assemble(&large, &pot, &c).unwrap(), &c).unwrap();
            let slack = &c.pow10(-(c.digits() as i32 - 10))
                * &s_small.eigenvalues.last().unwrap().abs();
            for (n, small_v) in s_small.eigenvalues.iter().enumerate() {
                assert!(
                    s_large.eigenvalues[n] <= small_v + &slack,
                    "{mode:?} state {n}: {} vs {small_v}",
                    s_large.eigenvalues[n]
                );
            }
        }
    }
}
