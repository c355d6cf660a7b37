//! The two Fourier basis families used by the solver.
//!
//! Periodic mode spans [−L, L] with normalized cosines m = 0..N−1 and sines
//! m = 1..N (2N functions in total). Confinement mode spans [0, 2L] with
//! sin(mπx/2L)/√L for m = 1..2N, which forces the solution to vanish at the
//! walls.

use crate::error::{Result, VismError};
use crate::numeric::{gauss_quadrature, HPReal, PrecisionContext};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Boundary condition selecting the basis family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundaryMode {
    Periodic,
    Confinement,
}

impl fmt::Display for BoundaryMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundaryMode::Periodic => write!(f, "periodic"),
            BoundaryMode::Confinement => write!(f, "confinement"),
        }
    }
}

/// Sine or cosine member of the periodic family. Confinement functions are
/// all sines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Trig {
    Sine = 1,
    Cosine = 2,
}

/// Parity of a basis function (or of an eigenstate assembled from one
/// parity block).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => write!(f, "even"),
            Parity::Odd => write!(f, "odd"),
        }
    }
}

/// One basis function: mode number `m`, trig kind, and the flat ordinal into
/// the 2N-dimensional coefficient vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BasisIndex {
    pub m: u32,
    pub kind: Trig,
    pub flat: usize,
}

/// Truncated basis: mode, truncation index N (size 2N), half-length L.
#[derive(Clone, Debug)]
pub struct BasisSpec {
    mode: BoundaryMode,
    n: u32,
    half_length: HPReal,
}

impl BasisSpec {
    pub fn new(mode: BoundaryMode, n: u32, half_length: HPReal) -> Result<Self> {
        if n < 1 {
            return Err(VismError::Config("truncation N must be ≥ 1".into()));
        }
        if half_length.is_zero() || half_length.is_sign_negative() || !half_length.is_finite() {
            return Err(VismError::Config(format!(
                "half-length L must be positive, got {half_length}"
            )));
        }
        Ok(BasisSpec {
            mode,
            n,
            half_length,
        })
    }

    pub fn periodic(n: u32, half_length: HPReal) -> Result<Self> {
        Self::new(BoundaryMode::Periodic, n, half_length)
    }

    pub fn confinement(n: u32, half_length: HPReal) -> Result<Self> {
        Self::new(BoundaryMode::Confinement, n, half_length)
    }

    pub fn mode(&self) -> BoundaryMode {
        self.mode
    }

    pub fn truncation(&self) -> u32 {
        self.n
    }

    pub fn half_length(&self) -> &HPReal {
        &self.half_length
    }

    /// Total number of basis functions, 2N in both modes.
    pub fn size(&self) -> usize {
        2 * self.n as usize
    }

    /// Domain endpoints: [−L, L] in periodic mode, [0, 2L] in confinement.
    pub fn domain(&self) -> (HPReal, HPReal) {
        match self.mode {
            BoundaryMode::Periodic => (-&self.half_length, self.half_length.clone()),
            BoundaryMode::Confinement => {
                let two = HPReal::raw(rug::Float::with_val(self.half_length.prec(), 2));
                (
                    HPReal::raw(rug::Float::new(self.half_length.prec())),
                    &two * &self.half_length,
                )
            }
        }
    }

    pub fn contains(&self, x: &HPReal) -> bool {
        let (lo, hi) = self.domain();
        *x >= lo && *x <= hi
    }

    /// Flat ordinal → basis index. Periodic: cosines m=0..N−1 first, then
    /// sines m=1..N. Confinement: sines m=1..2N.
    pub fn index(&self, flat: usize) -> Result<BasisIndex> {
        if flat >= self.size() {
            return Err(VismError::IndexOutOfRange {
                flat,
                size: self.size(),
            });
        }
        let n = self.n as usize;
        Ok(match self.mode {
            BoundaryMode::Periodic => {
                if flat < n {
                    BasisIndex {
                        m: flat as u32,
                        kind: Trig::Cosine,
                        flat,
                    }
                } else {
                    BasisIndex {
                        m: (flat - n + 1) as u32,
                        kind: Trig::Sine,
                        flat,
                    }
                }
            }
            BoundaryMode::Confinement => BasisIndex {
                m: (flat + 1) as u32,
                kind: Trig::Sine,
                flat,
            },
        })
    }

    pub fn indices(&self) -> impl Iterator<Item = BasisIndex> + '_ {
        (0..self.size()).map(|flat| self.index(flat).expect("flat in range"))
    }

    /// Parity of a periodic basis function as a function of x: sines are
    /// odd, cosines even. Confinement functions have no x-parity.
    pub fn parity(&self, idx: &BasisIndex) -> Option<Parity> {
        match self.mode {
            BoundaryMode::Periodic => Some(match idx.kind {
                Trig::Sine => Parity::Odd,
                Trig::Cosine => Parity::Even,
            }),
            BoundaryMode::Confinement => None,
        }
    }
}

/// Normalized basis value at `x`.
///
/// Periodic: sin(mπx/L)/√(L·R_m) or cos(mπx/L)/√(L·R_m) with R_0 = 2 and
/// R_m = 1 otherwise. Confinement: sin(mπx/2L)/√L.
pub fn eval_basis(spec: &BasisSpec, idx: &BasisIndex, x: &HPReal) -> Result<HPReal> {
    if idx.flat >= spec.size() {
        return Err(VismError::IndexOutOfRange {
            flat: idx.flat,
            size: spec.size(),
        });
    }
    let prec = spec.half_length.prec().max(x.prec());
    let pi = HPReal::raw(rug::Float::with_val(prec, rug::float::Constant::Pi));
    let l = &spec.half_length;
    let m = HPReal::raw(rug::Float::with_val(prec, idx.m));
    Ok(match spec.mode {
        BoundaryMode::Periodic => {
            let r_m: u32 = if idx.m == 0 { 2 } else { 1 };
            let norm = (l * &HPReal::raw(rug::Float::with_val(prec, r_m)))
                .sqrt()
                .recip();
            let arg = &(&m * &pi) * x / l;
            match idx.kind {
                Trig::Sine => &arg.sin() * &norm,
                Trig::Cosine => &arg.cos() * &norm,
            }
        }
        BoundaryMode::Confinement => {
            let two = HPReal::raw(rug::Float::with_val(prec, 2));
            let norm = l.sqrt().recip();
            let arg = &(&m * &pi) * x / &(&two * l);
            &arg.sin() * &norm
        }
    })
}

/// Eigenvalue of −d²/dx² on the basis function: (mπ/L)² in periodic mode,
/// (mπ/2L)² in confinement mode.
pub fn kinetic_eigenvalue(spec: &BasisSpec, idx: &BasisIndex) -> Result<HPReal> {
    if idx.flat >= spec.size() {
        return Err(VismError::IndexOutOfRange {
            flat: idx.flat,
            size: spec.size(),
        });
    }
    let prec = spec.half_length.prec();
    let pi = HPReal::raw(rug::Float::with_val(prec, rug::float::Constant::Pi));
    let m = HPReal::raw(rug::Float::with_val(prec, idx.m));
    let freq = match spec.mode {
        BoundaryMode::Periodic => &(&m * &pi) / &spec.half_length,
        BoundaryMode::Confinement => {
            let two = HPReal::raw(rug::Float::with_val(prec, 2));
            &(&m * &pi) / &(&two * &spec.half_length)
        }
    };
    Ok(freq.square())
}

/// Numerically integrate all pairwise inner products over the domain and
/// return the maximum deviation of the Gram matrix from the identity.
pub fn gram_check(spec: &BasisSpec, ctx: &PrecisionContext) -> Result<HPReal> {
    let (lo, hi) = spec.domain();
    let tol = ctx.pow10(-(ctx.digits() as i32 - 5));
    let mut max_dev = ctx.zero();
    for a in spec.indices() {
        for flat_b in a.flat..spec.size() {
            let b = spec.index(flat_b)?;
            let inner = gauss_quadrature(
                |x| {
                    let ga = eval_basis(spec, &a, x).expect("index in range");
                    let gb = eval_basis(spec, &b, x).expect("index in range");
                    &ga * &gb
                },
                &lo,
                &hi,
                ctx,
                &tol,
            )?;
            let expected = if a.flat == flat_b { ctx.one() } else { ctx.zero() };
            let dev = (&inner - &expected).abs();
            max_dev = max_dev.max(&dev);
        }
    }
    Ok(max_dev)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn ctx(digits: u32) -> PrecisionContext {
        PrecisionContext::new(digits).unwrap()
    }

    #[test]
    fn periodic_enumeration_and_bijection() {
        let c = ctx(30);
        let spec = BasisSpec::periodic(3, c.from_u32(1)).unwrap();
        let got: Vec<(u32, Trig)> = spec.indices().map(|i| (i.m, i.kind)).collect();
        assert_eq!(
            got,
            vec![
                (0, Trig::Cosine),
                (1, Trig::Cosine),
                (2, Trig::Cosine),
                (1, Trig::Sine),
                (2, Trig::Sine),
                (3, Trig::Sine),
            ]
        );
        for (flat, idx) in spec.indices().enumerate() {
            assert_eq!(idx.flat, flat);
        }
        assert!(spec.index(6).is_err());
    }

    #[test]
    fn confinement_enumeration() {
        let c = ctx(30);
        let spec = BasisSpec::confinement(2, c.from_u32(1)).unwrap();
        let got: Vec<u32> = spec.indices().map(|i| i.m).collect();
        assert_eq!(got, vec![1, 2, 3, 4]);
    }

    #[test]
    fn eval_examples() {
        let c = ctx(30);
        // constant mode: 1/√(2L) with L = 2 at any x
        let spec = BasisSpec::periodic(1, c.from_u32(2)).unwrap();
        let idx = spec.index(0).unwrap();
        let v = eval_basis(&spec, &idx, &c.from_f64(1.3)).unwrap();
        assert!((&v - &c.from_f64(0.5)).abs() < c.epsilon());

        // first periodic sine at its peak: sin(π/2)/√1 = 1
        let spec = BasisSpec::periodic(1, c.one()).unwrap();
        let sine = spec.index(1).unwrap();
        let v = eval_basis(&spec, &sine, &c.from_f64(0.5)).unwrap();
        assert!((&v - &c.one()).abs() < &c.epsilon() * &c.from_u32(10));

        // confinement m=2, L=1 at x=0.5: sin(π·0.5) = 1
        let spec = BasisSpec::confinement(1, c.one()).unwrap();
        let m2 = spec.index(1).unwrap();
        assert_eq!(m2.m, 2);
        let v = eval_basis(&spec, &m2, &c.from_f64(0.5)).unwrap();
        assert!((&v - &c.one()).abs() < &c.epsilon() * &c.from_u32(10));
    }

    #[test]
    fn kinetic_examples() {
        let c = ctx(30);
        let spec = BasisSpec::periodic(3, c.pi()).unwrap();
        // m=0 cosine
        assert!(kinetic_eigenvalue(&spec, &spec.index(0).unwrap())
            .unwrap()
            .is_zero());
        // m=3 sine with L=π: (3π/π)² = 9
        let m3 = spec.index(5).unwrap();
        assert_eq!(m3.m, 3);
        let v = kinetic_eigenvalue(&spec, &m3).unwrap();
        assert!((&v - &c.from_u32(9)).abs() < &c.epsilon() * &c.from_u32(100));

        // confinement m=2, L=1: (2π/2)² = π²
        let spec = BasisSpec::confinement(1, c.one()).unwrap();
        let v = kinetic_eigenvalue(&spec, &spec.index(1).unwrap()).unwrap();
        assert!((&v - &c.pi().square()).abs() < &c.epsilon() * &c.from_u32(100));
    }

    #[test]
    fn gram_matrix_is_identity() {
        let c = ctx(30);
        for spec in [
            BasisSpec::periodic(3, c.one()).unwrap(),
            BasisSpec::confinement(3, c.one()).unwrap(),
        ] {
            let dev = gram_check(&spec, &c).unwrap();
            assert!(
                dev < c.pow10(-25),
                "{} deviation {dev}",
                spec.mode()
            );
        }
    }

    #[test]
    fn gram_smallest_case() {
        let c = ctx(30);
        let spec = BasisSpec::periodic(1, c.from_f64(1.5)).unwrap();
        let dev = gram_check(&spec, &c).unwrap();
        assert!(dev < c.pow10(-25));
    }

    #[test]
    fn second_derivative_matches_kinetic_eigenvalue() {
        // central finite differences at random interior points
        // h balances FD truncation (h²·k⁴) against roundoff (ε/h²), both
        // below the 10^(-digits/2) assertion at 40 digits.
        let c = ctx(40);
        let mut rng = StdRng::seed_from_u64(11);
        let h = c.pow10(-13);
        for spec in [
            BasisSpec::periodic(3, c.from_f64(1.7)).unwrap(),
            BasisSpec::confinement(3, c.from_f64(1.7)).unwrap(),
        ] {
            let (lo, hi) = spec.domain();
            for idx in spec.indices() {
                if idx.m == 0 {
                    continue;
                }
                for _ in 0..10 {
                    let t = c.from_f64(rng.random_range(0.1..0.9));
                    let x = &lo + &(&t * &(&hi - &lo));
                    let g = |y: &HPReal| eval_basis(&spec, &idx, y).unwrap();
                    let second = (&(&g(&(&x + &h)) + &g(&(&x - &h))) - &(&c.from_u32(2) * &g(&x)))
                        / &h.square();
                    let want = -&(&kinetic_eigenvalue(&spec, &idx).unwrap() * &g(&x));
                    let scale = want.abs().max(&c.one());
                    let rel = (&second - &want).abs() / scale;
                    assert!(
                        rel < c.pow10(-(c.digits() as i32 / 2)),
                        "mode {:?} m={} rel={rel}",
                        spec.mode(),
                        idx.m
                    );
                }
            }
        }
    }

    #[test]
    fn periodic_parity_pointwise() {
        let c = ctx(30);
        let spec = BasisSpec::periodic(4, c.from_f64(2.3)).unwrap();
        let mut rng = StdRng::seed_from_u64(5);
        for idx in spec.indices() {
            for _ in 0..5 {
                let x = c.from_f64(rng.random_range(0.0..2.3));
                let plus = eval_basis(&spec, &idx, &x).unwrap();
                let minus = eval_basis(&spec, &idx, &(-&x)).unwrap();
                let (want, label) = match spec.parity(&idx).unwrap() {
                    Parity::Even => (plus.clone(), "even"),
                    Parity::Odd => (-&plus, "odd"),
                };
                assert!(
                    (&minus - &want).abs() <= &c.epsilon() * &c.from_u32(100),
                    "{label} m={} kind={:?}",
                    idx.m,
                    idx.kind
                );
            }
        }
    }
}
