//! Adaptive high-order quadrature at working precision.
//!
//! Composite Gauss–Legendre rule: a fixed 32-node rule per panel, with the
//! panel count doubled until two successive refinements agree within the
//! requested tolerance. Node and weight tables are computed once per binary
//! precision and cached process-wide.

use crate::error::{Result, VismError};
use crate::numeric::{HPReal, PrecisionContext};
use rug::ops::{CompleteRound, Pow};
use rug::Float;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Nodes per panel. Exact for polynomials of degree ≤ 2·NODES − 1.
pub(crate) const NODES_PER_PANEL: usize = 32;

/// Refinement (panel-doubling) limit before giving up.
const MAX_REFINEMENTS: u32 = 20;

type NodeTable = Arc<Vec<(Float, Float)>>;

fn node_cache() -> &'static Mutex<HashMap<(u32, usize), NodeTable>> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, usize), NodeTable>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Gauss–Legendre nodes and weights on [-1, 1], computed by Newton iteration
/// on the Legendre recurrence from float64 seed guesses.
fn legendre_rule(n: usize, prec: u32) -> NodeTable {
    if let Some(t) = node_cache().lock().unwrap().get(&(prec, n)) {
        return Arc::clone(t);
    }

    let tol = Float::with_val(prec, Float::with_val(prec, 2).pow(-(prec as i32) + 6));
    let mut table = Vec::with_capacity(n);
    for i in 0..(n + 1) / 2 {
        // seed: Chebyshev-like estimate of the i-th root
        let seed = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut x = Float::with_val(prec, seed);
        let mut dp = Float::new(prec);
        for _ in 0..200 {
            // evaluate P_n and P_n' at x via the three-term recurrence
            let mut p_prev = Float::with_val(prec, 1);
            let mut p = x.clone();
            for k in 1..n {
                // P_{k+1} = ((2k+1)·x·P_k − k·P_{k−1}) / (k+1)
                let next = (Float::with_val(prec, 2 * k + 1) * &x * &p
                    - Float::with_val(prec, k) * &p_prev)
                    / Float::with_val(prec, k + 1);
                p_prev = p;
                p = next;
            }
            // P_n'(x) = n·(x·P_n − P_{n−1}) / (x² − 1)
            dp = Float::with_val(prec, n) * (x.clone() * &p - &p_prev)
                / (x.clone().square() - 1u32);
            let step = p / &dp;
            x -= &step;
            if step.abs() < tol {
                break;
            }
        }
        // w = 2 / ((1 − x²)·P_n'(x)²)
        let w = Float::with_val(prec, 2)
            / ((Float::with_val(prec, 1) - x.clone().square()) * dp.square());
        table.push((x, w));
    }
    // mirror to the full, symmetric rule (ascending nodes)
    let mut full = Vec::with_capacity(n);
    for (x, w) in table.iter() {
        full.push(((-x).complete(prec), w.clone()));
    }
    if n % 2 == 1 {
        // the middle node is x = 0; the half table above includes it, drop dup
        full.pop();
    }
    for (x, w) in table.iter().rev() {
        full.push((x.clone(), w.clone()));
    }
    debug_assert_eq!(full.len(), n);

    let arc = Arc::new(full);
    node_cache()
        .lock()
        .unwrap()
        .insert((prec, n), Arc::clone(&arc));
    arc
}

fn composite_pass<F>(
    f: &mut F,
    a: &Float,
    len: &Float,
    panels: usize,
    rule: &NodeTable,
    prec: u32,
) -> Float
where
    F: FnMut(&HPReal) -> HPReal,
{
    let panel_len = Float::with_val(prec, len / &Float::with_val(prec, panels));
    let half = Float::with_val(prec, &panel_len / &Float::with_val(prec, 2));
    let mut total = Float::new(prec);
    for p in 0..panels {
        let lo = a.clone() + panel_len.clone() * Float::with_val(prec, p);
        let mid = lo + &half;
        let mut acc = Float::new(prec);
        for (x, w) in rule.iter() {
            let point = HPReal::raw(mid.clone() + (&half * x).complete(prec));
            let val = f(&point);
            acc += (w * &val.0).complete(prec);
        }
        total += acc * &half;
    }
    total
}

/// ∫_a^b f dx with estimated absolute error below `tol`.
///
/// Returns `NonConvergence` if the refinement limit is reached before two
/// successive panel refinements agree within the tolerance.
pub fn gauss_quadrature<F>(
    f: F,
    a: &HPReal,
    b: &HPReal,
    ctx: &PrecisionContext,
    tol: &HPReal,
) -> Result<HPReal>
where
    F: FnMut(&HPReal) -> HPReal,
{
    gauss_quadrature_with_limit(f, a, b, ctx, tol, MAX_REFINEMENTS)
}

/// Same as [`gauss_quadrature`] with an explicit refinement limit.
pub fn gauss_quadrature_with_limit<F>(
    mut f: F,
    a: &HPReal,
    b: &HPReal,
    ctx: &PrecisionContext,
    tol: &HPReal,
    max_refinements: u32,
) -> Result<HPReal>
where
    F: FnMut(&HPReal) -> HPReal,
{
    let prec = ctx.prec_bits();
    let rule = legendre_rule(NODES_PER_PANEL, prec);
    let len = (&b.0 - &a.0).complete(prec);
    if len.is_zero() {
        return Ok(ctx.zero());
    }

    let mut panels = 1usize;
    let mut prev = composite_pass(&mut f, &a.0, &len, panels, &rule, prec);
    let mut last_change = Float::with_val(prec, rug::float::Special::Infinity);
    for r in 0..max_refinements {
        panels *= 2;
        let cur = composite_pass(&mut f, &a.0, &len, panels, &rule, prec);
        last_change = (&cur - &prev).complete(prec).abs();
        if HPReal::raw(last_change.clone()) < *tol {
            return Ok(HPReal::raw(cur));
        }
        prev = cur;
        let _ = r;
    }
    Err(VismError::NonConvergence {
        refinements: max_refinements,
        last_change: HPReal::raw(last_change).to_decimal_string(3),
    })
}
