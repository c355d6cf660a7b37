//! Optimal half-length determination L̂(N) and its interpolation.
//!
//! For a fixed truncation N, the ground-state energy as a function of the
//! half-length L has an inflection point under the periodic boundary
//! condition and a minimum under the confinement boundary condition, and
//! the error metrics against a reference dip at the same place. Any of
//! these features locates L̂(N); anchors collected over several N are then
//! interpolated (monotone piecewise-cubic inside the anchor range,
//! power-law a·N^b beyond it).
//!
//! Scan samples are independent solves and may run concurrently; the
//! golden-section and bisection refinements are sequential by nature.

use crate::basis::BoundaryMode;
use crate::eigen::solve_potential;
use crate::error::{Result, VismError};
use crate::numeric::{HPReal, PrecisionContext};
use crate::potential::PotentialSpec;
use crate::solution::{delta_psi_exact, BoundState};
use std::fmt;
use std::io::{BufRead, Write};

/// How an anchor was located.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LHatMethod {
    /// Minimum of E(L) under the confinement boundary condition.
    EnergyMinConfinement,
    /// Inflection point of E(L) under the periodic boundary condition.
    EnergyInflectionPeriodic,
    /// Minimum of the relative eigenvalue error against a reference energy.
    EnergyErrorMin,
    /// Minimum of the grid wavefunction error against a reference function.
    WavefunctionErrorMin,
    /// Experimental: minimum of the N-vs-N+1 self-estimate δ̂_E(L), for
    /// problems with no reference at all. Not used by default. Caveat: far
    /// beyond the valley the N and N+1 truncations fail together, so δ̂
    /// shrinks spuriously; pass a bracket that ends near the valley.
    DeltaHatMin,
}

impl LHatMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            LHatMethod::EnergyMinConfinement => "energy-min-confinement",
            LHatMethod::EnergyInflectionPeriodic => "energy-inflection-periodic",
            LHatMethod::EnergyErrorMin => "energy-error-min",
            LHatMethod::WavefunctionErrorMin => "wavefunction-error-min",
            LHatMethod::DeltaHatMin => "delta-hat-min",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "energy-min-confinement" => LHatMethod::EnergyMinConfinement,
            "energy-inflection-periodic" => LHatMethod::EnergyInflectionPeriodic,
            "energy-error-min" => LHatMethod::EnergyErrorMin,
            "wavefunction-error-min" => LHatMethod::WavefunctionErrorMin,
            "delta-hat-min" => LHatMethod::DeltaHatMin,
            other => {
                return Err(VismError::Config(format!(
                    "unknown optimization method '{other}'"
                )))
            }
        })
    }
}

impl fmt::Display for LHatMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_str())
    }
}

/// One calibration point (N, L̂).
#[derive(Clone, Debug)]
pub struct LHatAnchor {
    pub n: u32,
    pub l_hat: HPReal,
    pub method: LHatMethod,
    pub state_index: usize,
}

/// Reference data for the error-based methods.
pub struct ErrorReference<'a> {
    /// Exact (or surrogate) energy of the optimized state.
    pub energy: Option<HPReal>,
    /// Exact (or surrogate) wavefunction of the optimized state.
    pub psi: Option<&'a (dyn Fn(&HPReal) -> HPReal + 'a)>,
    /// Grid size for the wavefunction metric.
    pub grid_points: usize,
}

/// E_state(L) over a sampled range; the raw material of the L-scans.
pub fn scan_e_vs_l(
    pot: &PotentialSpec,
    mode: BoundaryMode,
    n: u32,
    state_index: usize,
    l_range: (&HPReal, &HPReal),
    samples: usize,
    ctx: &PrecisionContext,
) -> Result<Vec<(HPReal, HPReal)>> {
    if samples < 5 {
        return Err(VismError::Config(format!(
            "scan needs at least 5 samples, got {samples}"
        )));
    }
    let (lo, hi) = l_range;
    if !(hi > lo) {
        return Err(VismError::Config("scan range must be increasing".into()));
    }
    let step = &(hi - lo) / &ctx.from_u32(samples as u32 - 1);
    let mut out = Vec::with_capacity(samples);
    for i in 0..samples {
        let l = lo + &(&step * &ctx.from_u32(i as u32));
        let e = energy_at(pot, mode, n, state_index, &l, ctx)?;
        out.push((l, e));
    }
    Ok(out)
}

fn energy_at(
    pot: &PotentialSpec,
    mode: BoundaryMode,
    n: u32,
    state_index: usize,
    l: &HPReal,
    ctx: &PrecisionContext,
) -> Result<HPReal> {
    let s = solve_potential(pot, mode, n, l, ctx)?;
    if state_index >= s.len() {
        return Err(VismError::Config(format!(
            "state {state_index} not available at truncation N={n}"
        )));
    }
    Ok(s.eigenvalues[state_index].clone())
}

/// Locate L̂ for one truncation by the requested method.
///
/// The bracket defaults to [0.5·√(2s+2), 10·√(2s+2)] around the spatial
/// spread of state s; a coarse scan inside it isolates the feature before
/// golden-section (minima) or bisection on the second difference
/// (inflection) refines to `tol_l`.
pub fn find_l_hat(
    pot: &PotentialSpec,
    method: LHatMethod,
    n: u32,
    state_index: usize,
    bracket: Option<(HPReal, HPReal)>,
    reference: Option<&ErrorReference>,
    ctx: &PrecisionContext,
    tol_l: &HPReal,
) -> Result<LHatAnchor> {
    let (lo, hi) = match bracket {
        Some(b) => b,
        None => {
            let spread = ctx.from_u32(2 * state_index as u32 + 2).sqrt();
            (
                &ctx.from_str("0.5").unwrap() * &spread,
                &ctx.from_u32(10) * &spread,
            )
        }
    };
    if !(hi > lo) || lo.is_sign_negative() || lo.is_zero() {
        return Err(VismError::BracketInvalid {
            lo: lo.to_decimal_string(6),
            hi: hi.to_decimal_string(6),
            reason: "bracket must be positive and increasing".into(),
        });
    }

    let l_hat = match method {
        LHatMethod::EnergyMinConfinement => {
            let f = |l: &HPReal| energy_at(pot, BoundaryMode::Confinement, n, state_index, l, ctx);
            golden_min(&f, &lo, &hi, tol_l, ctx)?
        }
        LHatMethod::EnergyInflectionPeriodic => {
            let f = |l: &HPReal| energy_at(pot, BoundaryMode::Periodic, n, state_index, l, ctx);
            inflection_by_bisection(&f, &lo, &hi, tol_l, ctx)?
        }
        LHatMethod::EnergyErrorMin => {
            let e_ref = reference
                .and_then(|r| r.energy.clone())
                .ok_or(VismError::ReferenceRequired("energy-error-min"))?;
            if e_ref.is_zero() {
                return Err(VismError::DivisionByZero);
            }
            let f = |l: &HPReal| -> Result<HPReal> {
                let e = energy_at(pot, BoundaryMode::Periodic, n, state_index, l, ctx)?;
                Ok((&(&e - &e_ref) / &e_ref).abs())
            };
            golden_min(&f, &lo, &hi, tol_l, ctx)?
        }
        LHatMethod::WavefunctionErrorMin => {
            let r = reference.ok_or(VismError::ReferenceRequired("wavefunction-error-min"))?;
            let psi_ref = r
                .psi
                .ok_or(VismError::ReferenceRequired("wavefunction-error-min"))?;
            let m = r.grid_points.max(2);
            let f = |l: &HPReal| -> Result<HPReal> {
                let s = solve_potential(pot, BoundaryMode::Periodic, n, l, ctx)?;
                let state: BoundState = s.state(state_index)?;
                delta_psi_exact(&state, psi_ref, m)
            };
            golden_min(&f, &lo, &hi, tol_l, ctx)?
        }
        LHatMethod::DeltaHatMin => {
            let f = |l: &HPReal| -> Result<HPReal> {
                let coarse = energy_at(pot, BoundaryMode::Periodic, n, state_index, l, ctx)?;
                let fine = energy_at(pot, BoundaryMode::Periodic, n + 1, state_index, l, ctx)?;
                if fine.is_zero() {
                    return Ok((&coarse - &fine).abs());
                }
                Ok((&(&coarse - &fine) / &fine).abs())
            };
            golden_min(&f, &lo, &hi, tol_l, ctx)?
        }
    };
    Ok(LHatAnchor {
        n,
        l_hat,
        method,
        state_index,
    })
}

const COARSE_SAMPLES: usize = 17;

/// Coarse scan to isolate an interior minimum, then golden-section down to
/// tol. Fails with BracketInvalid when the sampled minimum sits on the
/// bracket boundary.
fn golden_min(
    f: &dyn Fn(&HPReal) -> Result<HPReal>,
    lo: &HPReal,
    hi: &HPReal,
    tol: &HPReal,
    ctx: &PrecisionContext,
) -> Result<HPReal> {
    let k = COARSE_SAMPLES;
    let step = &(hi - lo) / &ctx.from_u32(k as u32 - 1);
    let mut xs = Vec::with_capacity(k);
    let mut ys = Vec::with_capacity(k);
    for i in 0..k {
        let x = lo + &(&step * &ctx.from_u32(i as u32));
        ys.push(f(&x)?);
        xs.push(x);
    }
    let mut best = 0usize;
    for i in 1..k {
        if ys[i] < ys[best] {
            best = i;
        }
    }
    if best == 0 || best == k - 1 {
        return Err(VismError::BracketInvalid {
            lo: lo.to_decimal_string(6),
            hi: hi.to_decimal_string(6),
            reason: "no interior minimum in the bracket".into(),
        });
    }

    // golden-section inside [xs[best-1], xs[best+1]]
    let invphi = &(&ctx.from_u32(5).sqrt() - &ctx.one()) / &ctx.from_u32(2);
    let mut a = xs[best - 1].clone();
    let mut b = xs[best + 1].clone();
    let mut c = &b - &(&invphi * &(&b - &a));
    let mut d = &a + &(&invphi * &(&b - &a));
    let mut fc = f(&c)?;
    let mut fd = f(&d)?;
    while (&b - &a).abs() > *tol {
        if fc < fd {
            b = d;
            d = c.clone();
            fd = fc;
            c = &b - &(&invphi * &(&b - &a));
            fc = f(&c)?;
        } else {
            a = c;
            c = d.clone();
            fc = fd;
            d = &a + &(&invphi * &(&b - &a));
            fd = f(&d)?;
        }
    }
    Ok(&(&a + &b) / &ctx.from_u32(2))
}

/// Locate the zero of the second finite difference of f: a coarse scan for
/// a sign change, then bisection down to tol. The difference step is
/// h = √tol·L, tied to the target resolution.
fn inflection_by_bisection(
    f: &dyn Fn(&HPReal) -> Result<HPReal>,
    lo: &HPReal,
    hi: &HPReal,
    tol: &HPReal,
    ctx: &PrecisionContext,
) -> Result<HPReal> {
    let second = |l: &HPReal| -> Result<HPReal> {
        let h = &tol.sqrt() * l;
        let plus = f(&(l + &h))?;
        let minus = f(&(l - &h))?;
        let mid = f(l)?;
        Ok(&(&plus + &minus) - &(&ctx.from_u32(2) * &mid))
    };
    let k = COARSE_SAMPLES;
    let step = &(hi - lo) / &ctx.from_u32(k as u32 - 1);
    let mut prev_x = lo.clone();
    let mut prev_s = second(&prev_x)?;
    // E(L) bends convex→concave early (the constant mode pins E(0)=0) and
    // can wiggle again far past the valley; the relevant inflection is the
    // first concave→convex transition, where the descent flattens out
    let mut found: Option<(HPReal, HPReal, HPReal, HPReal)> = None;
    for i in 1..k {
        let x = lo + &(&step * &ctx.from_u32(i as u32));
        let s = second(&x)?;
        if prev_s.is_sign_negative() && !s.is_sign_negative() {
            found = Some((prev_x.clone(), prev_s.clone(), x.clone(), s.clone()));
            break;
        }
        prev_x = x;
        prev_s = s;
    }
    let (mut a, mut fa, mut b, _) = found.ok_or_else(|| VismError::BracketInvalid {
        lo: lo.to_decimal_string(6),
        hi: hi.to_decimal_string(6),
        reason: "second difference has no negative-to-positive sign change in the bracket".into(),
    })?;
    while (&b - &a).abs() > *tol {
        let mid = &(&a + &b) / &ctx.from_u32(2);
        let fm = second(&mid)?;
        if fm.is_zero() {
            return Ok(mid);
        }
        if (&fa * &fm) < ctx.zero() {
            b = mid;
        } else {
            a = mid;
            fa = fm;
        }
    }
    Ok(&(&a + &b) / &ctx.from_u32(2))
}

/// Monotone interpolation of anchors with power-law extrapolation above
/// the anchor range.
#[derive(Clone, Debug)]
pub struct LHatInterpolant {
    anchors: Vec<LHatAnchor>,
    tangents: Vec<HPReal>,
    /// Exponent of the a·N^b tail, fitted to the last three anchors in
    /// log-log space; the prefactor pins the tail to the last anchor so the
    /// interpolant stays continuous at the range boundary.
    power_b: HPReal,
}

/// Build the interpolant: at least 3 anchors, strictly increasing N,
/// non-decreasing L̂.
pub fn build_interpolant(anchors: Vec<LHatAnchor>) -> Result<LHatInterpolant> {
    if anchors.len() < 3 {
        return Err(VismError::InsufficientAnchors(anchors.len()));
    }
    for w in anchors.windows(2) {
        if w[1].n <= w[0].n {
            return Err(VismError::NonMonotoneAnchors(w[1].n));
        }
        if w[1].l_hat < w[0].l_hat {
            return Err(VismError::NonMonotoneAnchors(w[1].n));
        }
    }
    let prec_template = anchors[0].l_hat.clone();
    let hp = |v: f64| HPReal::raw(rug::Float::with_val(prec_template.prec(), v));
    let hp_u = |v: u32| HPReal::raw(rug::Float::with_val(prec_template.prec(), v));

    // Fritsch–Butland tangents: harmonic mean of adjacent secants keeps the
    // cubic monotone wherever the data are monotone
    let m = anchors.len();
    let mut h = Vec::with_capacity(m - 1);
    let mut delta = Vec::with_capacity(m - 1);
    for w in anchors.windows(2) {
        let dx = &hp_u(w[1].n) - &hp_u(w[0].n);
        let dy = &w[1].l_hat - &w[0].l_hat;
        delta.push(&dy / &dx);
        h.push(dx);
    }
    let mut tangents = Vec::with_capacity(m);
    tangents.push(delta[0].clone());
    for i in 1..(m - 1) {
        let (d0, d1) = (&delta[i - 1], &delta[i]);
        if d0.is_zero() || d1.is_zero() || (d0 * d1).is_sign_negative() {
            tangents.push(hp(0.0));
        } else {
            let w1 = &(&hp(2.0) * &h[i]) + &h[i - 1];
            let w2 = &h[i] + &(&hp(2.0) * &h[i - 1]);
            let denom = &(&w1 / d0) + &(&w2 / d1);
            tangents.push(&(&w1 + &w2) / &denom);
        }
    }
    tangents.push(delta[m - 2].clone());

    // power-law slope from the last three anchors in log-log space
    let tail: Vec<(HPReal, HPReal)> = anchors[m - 3..]
        .iter()
        .map(|a| (hp_u(a.n).ln(), a.l_hat.ln()))
        .collect();
    let three = hp(3.0);
    let xbar = tail.iter().fold(hp(0.0), |s, (x, _)| &s + x) / &three;
    let ybar = tail.iter().fold(hp(0.0), |s, (_, y)| &s + y) / &three;
    let mut num = hp(0.0);
    let mut den = hp(0.0);
    for (x, y) in &tail {
        num = &num + &(&(x - &xbar) * &(y - &ybar));
        den = &den + &(x - &xbar).square();
    }
    let power_b = if den.is_zero() { hp(0.0) } else { &num / &den };

    Ok(LHatInterpolant {
        anchors,
        tangents,
        power_b,
    })
}

impl LHatInterpolant {
    pub fn anchors(&self) -> &[LHatAnchor] {
        &self.anchors
    }

    pub fn first_n(&self) -> u32 {
        self.anchors[0].n
    }

    pub fn last_n(&self) -> u32 {
        self.anchors[self.anchors.len() - 1].n
    }

    pub fn power_law_exponent(&self) -> &HPReal {
        &self.power_b
    }

    /// Prefactor of the a·N^b tail.
    pub fn power_law_prefactor(&self, ctx: &PrecisionContext) -> HPReal {
        let last = &self.anchors[self.anchors.len() - 1];
        &last.l_hat / &ctx.from_u32(last.n).pow(&self.power_b)
    }

    /// L̂ at integer N.
    pub fn evaluate(&self, n: u32, ctx: &PrecisionContext) -> Result<HPReal> {
        self.evaluate_real(&ctx.from_u32(n), ctx)
    }

    /// L̂ at real-valued N: exact at anchors, monotone cubic between them,
    /// power law above the last anchor. Below the first anchor there is no
    /// data to interpolate and the call fails.
    pub fn evaluate_real(&self, n: &HPReal, ctx: &PrecisionContext) -> Result<HPReal> {
        let first = ctx.from_u32(self.first_n());
        let last = ctx.from_u32(self.last_n());
        if *n < first {
            return Err(VismError::InterpolantRange {
                n: n.to_f64() as u32,
                first: self.first_n(),
            });
        }
        if *n > last {
            let last_anchor = &self.anchors[self.anchors.len() - 1];
            let ratio = n / &ctx.from_u32(last_anchor.n);
            return Ok(&last_anchor.l_hat * &ratio.pow(&self.power_b));
        }
        // locate the segment
        let mut seg = 0usize;
        for (i, a) in self.anchors.iter().enumerate() {
            let xa = ctx.from_u32(a.n);
            if *n >= xa {
                seg = i;
            }
        }
        if seg == self.anchors.len() - 1 {
            return Ok(self.anchors[seg].l_hat.clone());
        }
        let x0 = ctx.from_u32(self.anchors[seg].n);
        let x1 = ctx.from_u32(self.anchors[seg + 1].n);
        let y0 = &self.anchors[seg].l_hat;
        let y1 = &self.anchors[seg + 1].l_hat;
        let (m0, m1) = (&self.tangents[seg], &self.tangents[seg + 1]);
        let hseg = &x1 - &x0;
        let s = &(n - &x0) / &hseg;
        let s2 = s.square();
        let s3 = &s2 * &s;
        let two = ctx.from_u32(2);
        let three = ctx.from_u32(3);
        // Hermite basis
        let h00 = &(&(&two * &s3) - &(&three * &s2)) + &ctx.one();
        let h10 = &(&s3 - &(&two * &s2)) + &s;
        let h01 = &(&three * &s2) - &(&two * &s3);
        let h11 = &s3 - &s2;
        Ok(&(&(&h00 * y0) + &(&(&h10 * &hseg) * m0))
            + &(&(&h01 * y1) + &(&(&h11 * &hseg) * m1)))
    }
}

/// Anchor table serialization: `N,L_hat,method,state_index` rows.
pub fn write_anchors_csv(anchors: &[LHatAnchor], digits: u32, mut w: impl Write) -> Result<()> {
    writeln!(w, "N,L_hat,method,state_index").map_err(VismError::Io)?;
    for a in anchors {
        writeln!(
            w,
            "{},{},{},{}",
            a.n,
            a.l_hat.to_decimal_string(digits),
            a.method.as_str(),
            a.state_index
        )
        .map_err(VismError::Io)?;
    }
    Ok(())
}

/// Read an anchor table; `#`-prefixed lines and the header are skipped.
pub fn read_anchors_csv(r: impl BufRead, ctx: &PrecisionContext) -> Result<Vec<LHatAnchor>> {
    let mut out = Vec::new();
    for line in r.lines() {
        let line = line.map_err(VismError::Io)?;
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') || t.starts_with("N,") {
            continue;
        }
        let parts: Vec<&str> = t.split(',').collect();
        if parts.len() != 4 {
            return Err(VismError::Config(format!("bad anchor row '{t}'")));
        }
        out.push(LHatAnchor {
            n: parts[0]
                .trim()
                .parse()
                .map_err(|_| VismError::Config(format!("bad N in '{t}'")))?,
            l_hat: ctx.from_str(parts[1])?,
            method: LHatMethod::parse(parts[2].trim())?,
            state_index: parts[3]
                .trim()
                .parse()
                .map_err(|_| VismError::Config(format!("bad state index in '{t}'")))?,
        });
    }
    Ok(out)
}
