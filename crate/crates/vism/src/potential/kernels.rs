//! Closed-form trigonometric moment integrals.
//!
//! Every coupling entry reduces, after product-to-sum identities, to sums of
//!
//!   ∫_{-L}^{L} t^k cos(w t) dt   and   ∫_{-L}^{L} t^k sin(w t) dt
//!
//! with k ≤ 4 and frequencies w built from integer multiples of π/(2L) plus
//! optional multiples of βπ from trigonometric potential terms. The moments
//! are evaluated from explicit antiderivatives when |wL| ≥ 1/2 and from the
//! Taylor expansion in wL otherwise, so vanishing and near-vanishing
//! frequency combinations (resonances) cost no accuracy.

use crate::basis::{BasisSpec, BoundaryMode, Trig};
use crate::numeric::{HPReal, PrecisionContext};
use rug::float::Constant;
use rug::ops::{CompleteRound, Pow};
use rug::Float;
use std::collections::HashMap;

/// Trig kind of a harmonic factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) enum Wave {
    Sin,
    Cos,
}

/// A basis function rewritten in the symmetric integration variable
/// t ∈ [−L, L]: value = coeff · wave(c·π/(2L) · t).
///
/// Periodic mode uses t = x directly (c = 2m). Confinement mode uses
/// t = x − L, which turns sin(mπx/2L) into ±sin/±cos of (mπ/2L)t depending
/// on m mod 4.
pub(crate) struct Atom {
    pub wave: Wave,
    pub c: i64,
    pub coeff: HPReal,
}

pub(crate) fn atom_for(spec: &BasisSpec, flat: usize, ctx: &PrecisionContext) -> Atom {
    let idx = spec.index(flat).expect("flat index in range");
    let l = spec.half_length();
    match spec.mode() {
        BoundaryMode::Periodic => {
            let r_m: u32 = if idx.m == 0 { 2 } else { 1 };
            let coeff = (l * &ctx.from_u32(r_m)).sqrt().recip();
            Atom {
                wave: match idx.kind {
                    Trig::Sine => Wave::Sin,
                    Trig::Cosine => Wave::Cos,
                },
                c: 2 * idx.m as i64,
                coeff,
            }
        }
        BoundaryMode::Confinement => {
            // sin(mπ(t+L)/2L) = sin(mπt/2L + mπ/2)
            let (wave, sign) = match idx.m % 4 {
                0 => (Wave::Sin, 1),
                1 => (Wave::Cos, 1),
                2 => (Wave::Sin, -1),
                _ => (Wave::Cos, -1),
            };
            let norm = l.sqrt().recip();
            let coeff = if sign < 0 { -&norm } else { norm };
            Atom {
                wave,
                c: idx.m as i64,
                coeff,
            }
        }
    }
}

/// A harmonic potential term amp·wave(β·π·t) in the integration variable.
#[derive(Clone, Debug)]
pub(crate) struct HarmonicTerm {
    pub wave: Wave,
    pub amplitude: HPReal,
    pub beta: HPReal,
}

/// Frequency descriptor: w = c·π/(2L) + beta_sign·β_h·π where h indexes a
/// harmonic term. Used as the moment cache key.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct MomentKey {
    k: u32,
    wave: Wave,
    c: i64,
    harmonic: Option<(usize, i8)>,
}

/// Shared moment evaluator with memoization. One instance per coupling
/// matrix assembly; all frequencies in one assembly share the same L.
pub(crate) struct MomentTable {
    prec: u32,
    l: Float,
    pi: Float,
    betas: Vec<Float>,
    cache: HashMap<MomentKey, HPReal>,
}

impl MomentTable {
    pub fn new(spec: &BasisSpec, harmonics: &[HarmonicTerm], ctx: &PrecisionContext) -> Self {
        // extra bits absorb the mild cancellation of the antiderivative
        // branch near |wL| = 1/2
        let prec = ctx.prec_bits() + 32;
        MomentTable {
            prec,
            l: Float::with_val(prec, &spec.half_length().0),
            pi: Float::with_val(prec, Constant::Pi),
            betas: harmonics
                .iter()
                .map(|h| Float::with_val(prec, &h.beta.0))
                .collect(),
            cache: HashMap::new(),
        }
    }

    fn moment(&mut self, key: MomentKey) -> HPReal {
        if let Some(v) = self.cache.get(&key) {
            return v.clone();
        }
        // u = wL = cπ/2 + s·βπL
        let mut u = Float::with_val(self.prec, &self.pi);
        u *= Float::with_val(self.prec, key.c);
        u /= 2u32;
        if let Some((h, s)) = key.harmonic {
            let shift = Float::with_val(self.prec, &self.betas[h] * &self.pi) * &self.l;
            if s >= 0 {
                u += shift;
            } else {
                u -= shift;
            }
        }
        let value = HPReal::raw(moment_value(key.k, key.wave, &u, &self.l, self.prec));
        self.cache.insert(key, value.clone());
        value
    }
}

/// ∫_{-L}^{L} t^k wave(w t) dt given u = wL.
fn moment_value(k: u32, wave: Wave, u: &Float, l: &Float, prec: u32) -> Float {
    // parity kills half the moments outright
    match wave {
        Wave::Cos if k % 2 == 1 => return Float::new(prec),
        Wave::Sin if k % 2 == 0 => return Float::new(prec),
        _ => {}
    }
    let half = Float::with_val(prec, 0.5f32);
    if u.clone().abs() < half {
        moment_series(k, wave, u, l, prec)
    } else {
        moment_antiderivative(k, wave, u, l, prec)
    }
}

/// Taylor expansion in u, exact at working precision for |u| < 1/2.
fn moment_series(k: u32, wave: Wave, u: &Float, l: &Float, prec: u32) -> Float {
    let u2 = (u * u).complete(prec);
    let mut acc = Float::new(prec);
    let stop = Float::with_val(prec, Float::with_val(prec, 2).pow(-(prec as i32) - 10))
        * (Float::with_val(prec, 1) + u.clone().abs());
    match wave {
        Wave::Cos => {
            // Σ_j (−1)^j u^{2j} / ((2j)!·(k+2j+1))
            let mut base = Float::with_val(prec, 1);
            let mut j = 0u32;
            loop {
                acc += (&base / &Float::with_val(prec, k + 2 * j + 1)).complete(prec);
                base *= &u2;
                base /= Float::with_val(prec, (2 * j + 1) * (2 * j + 2));
                base = -base;
                j += 1;
                if base.clone().abs() < stop {
                    break;
                }
            }
        }
        Wave::Sin => {
            // Σ_j (−1)^j u^{2j+1} / ((2j+1)!·(k+2j+2))
            if u.is_zero() {
                return Float::new(prec);
            }
            let mut base = u.clone();
            let mut j = 0u32;
            loop {
                acc += (&base / &Float::with_val(prec, k + 2 * j + 2)).complete(prec);
                base *= &u2;
                base /= Float::with_val(prec, (2 * j + 2) * (2 * j + 3));
                base = -base;
                j += 1;
                if base.clone().abs() < stop {
                    break;
                }
            }
        }
    }
    // × 2·L^{k+1}
    acc * Float::with_val(prec, l.pow(k + 1).complete(prec)) * 2u32
}

/// Explicit antiderivative forms, stable for |u| ≥ 1/2.
fn moment_antiderivative(k: u32, wave: Wave, u: &Float, l: &Float, prec: u32) -> Float {
    let w = (u / l).complete(prec);
    let (s, c) = u.clone().sin_cos(Float::new(prec));
    let two = Float::with_val(prec, 2);
    match (k, wave) {
        (0, Wave::Cos) => two * s / w,
        (1, Wave::Sin) => {
            // 2(sin u − u cos u)/w²
            let num = s - (u * &c).complete(prec);
            two * num / w.square()
        }
        (2, Wave::Cos) => {
            // 2(2u cos u + (u²−2) sin u)/w³
            let u2 = u.clone().square();
            let num = Float::with_val(prec, 2 * u) * &c + (u2 - 2u32) * s;
            two * num / w.pow(3u32)
        }
        (3, Wave::Sin) => {
            // 2((3u²−6) sin u − (u³−6u) cos u)/w⁴
            let u2 = u.clone().square();
            let u3 = Float::with_val(prec, &u2 * u);
            let num = (Float::with_val(prec, 3 * &u2) - 6u32) * s
                - (u3 - Float::with_val(prec, 6 * u)) * c;
            two * num / w.pow(4u32)
        }
        (4, Wave::Cos) => {
            // 2((u⁴−12u²+24) sin u + (4u³−24u) cos u)/w⁵
            let u2 = u.clone().square();
            let u3 = Float::with_val(prec, &u2 * u);
            let u4 = u2.clone().square();
            let num = (u4 - Float::with_val(prec, 12 * &u2) + 24u32) * s
                + (Float::with_val(prec, 4 * &u3) - Float::with_val(prec, 24 * u)) * c;
            two * num / w.pow(5u32)
        }
        _ => unreachable!("moment exponent {k} with {wave:?} has no closed form"),
    }
}

/// Signed harmonic produced by product-to-sum reduction: prefactor
/// sign·(1/2) per reduction level is applied by the caller.
#[derive(Clone, Copy)]
struct PairHarmonic {
    wave: Wave,
    c: i64,
    sign: i8,
}

fn pair_product(a: &Atom, b: &Atom) -> [PairHarmonic; 2] {
    let d = a.c - b.c;
    let s = a.c + b.c;
    match (a.wave, b.wave) {
        (Wave::Sin, Wave::Sin) => [
            PairHarmonic { wave: Wave::Cos, c: d, sign: 1 },
            PairHarmonic { wave: Wave::Cos, c: s, sign: -1 },
        ],
        (Wave::Cos, Wave::Cos) => [
            PairHarmonic { wave: Wave::Cos, c: d, sign: 1 },
            PairHarmonic { wave: Wave::Cos, c: s, sign: 1 },
        ],
        (Wave::Sin, Wave::Cos) => [
            PairHarmonic { wave: Wave::Sin, c: s, sign: 1 },
            PairHarmonic { wave: Wave::Sin, c: d, sign: 1 },
        ],
        (Wave::Cos, Wave::Sin) => [
            PairHarmonic { wave: Wave::Sin, c: s, sign: 1 },
            PairHarmonic { wave: Wave::Sin, c: d, sign: -1 },
        ],
    }
}

/// ∫ g_a(t)·t^k·g_b(t) dt over [−L, L], exact closed form.
pub(crate) fn pair_monomial_integral(
    table: &mut MomentTable,
    a: &Atom,
    b: &Atom,
    k: u32,
    ctx: &PrecisionContext,
) -> HPReal {
    let mut acc = ctx.zero();
    for ph in pair_product(a, b) {
        let m = table.moment(MomentKey {
            k,
            wave: ph.wave,
            c: ph.c,
            harmonic: None,
        });
        acc = if ph.sign > 0 { &acc + &m } else { &acc - &m };
    }
    let half = &ctx.one() / &ctx.from_u32(2);
    &(&acc * &half) * &(&a.coeff * &b.coeff)
}

/// ∫ g_a(t)·amp·wave(βπt)·g_b(t) dt over [−L, L], exact closed form. The
/// potential harmonic is identified by its index so resonant frequency
/// combinations stay exactly representable in the cache key.
pub(crate) fn pair_harmonic_integral(
    table: &mut MomentTable,
    a: &Atom,
    b: &Atom,
    term: &HarmonicTerm,
    term_idx: usize,
    ctx: &PrecisionContext,
) -> HPReal {
    let mut acc = ctx.zero();
    for ph in pair_product(a, b) {
        // combine wave(c·π/2L · t) with term.wave(βπ t); only cosine
        // combinations survive the symmetric k=0 integral
        let combos: [(Wave, i8, i8); 2] = match (ph.wave, term.wave) {
            (Wave::Cos, Wave::Cos) => [(Wave::Cos, -1, 1), (Wave::Cos, 1, 1)],
            (Wave::Sin, Wave::Sin) => [(Wave::Cos, -1, 1), (Wave::Cos, 1, -1)],
            (Wave::Cos, Wave::Sin) => [(Wave::Sin, 1, 1), (Wave::Sin, -1, -1)],
            (Wave::Sin, Wave::Cos) => [(Wave::Sin, 1, 1), (Wave::Sin, -1, 1)],
        };
        for (wave, beta_sign, sign) in combos {
            if wave == Wave::Sin {
                continue; // odd integrand over symmetric domain
            }
            let m = table.moment(MomentKey {
                k: 0,
                wave,
                c: ph.c,
                harmonic: Some((term_idx, beta_sign)),
            });
            let signed = if sign * ph.sign > 0 { m } else { -m };
            acc = &acc + &signed;
        }
    }
    let quarter = &ctx.one() / &ctx.from_u32(4);
    &(&acc * &quarter) * &(&(&a.coeff * &b.coeff) * &term.amplitude)
}
