//! Symbolic potentials f(x) and their coupling integrals against the basis.
//!
//! A potential is a sum of monomials c·x^k and trigonometric terms
//! α·cos(βπx), optionally translated as f(x − shift). Coupling matrices
//! C_ab = ∫ g_a f g_b dx come in closed form for k ≤ 4 and for the cosine
//! terms (product-to-sum identities against the moment kernels); anything
//! else falls back to adaptive quadrature.
//!
//! The canonical text form accepted by the CLI is a sum of `c*x^k` and
//! `a*cos(b*pi*x)` terms with decimal-string coefficients, e.g.
//! `x^2 + 0.1*x^4` or `x^2 + 10*cos(10*pi*x)`.
//!
//! Everything here is a pure function of its inputs; matrix entries are
//! independent computations, so callers may evaluate them concurrently
//! with deterministic results.

mod kernels;
mod parse;

pub(crate) use kernels::{atom_for, Atom, HarmonicTerm, MomentTable, Wave};

use crate::basis::{BasisSpec, BoundaryMode};
use crate::error::{Result, VismError};
use crate::matrix::DenseMatrix;
use crate::numeric::{gauss_quadrature, HPReal, PrecisionContext};
use crate::basis::eval_basis;
use std::fmt;

/// One monomial term c·x^k.
#[derive(Clone, Debug)]
pub struct MonomialTerm {
    pub exponent: u32,
    pub coefficient: HPReal,
    /// Canonical decimal text of the coefficient, used for exact matching
    /// and round-trip printing.
    pub coefficient_text: String,
}

/// One trigonometric term α·cos(βπx).
#[derive(Clone, Debug)]
pub struct CosineTerm {
    pub amplitude: HPReal,
    pub amplitude_text: String,
    pub frequency_factor: HPReal,
    pub frequency_text: String,
}

/// Symbolic potential: Σ c·x^k + Σ α·cos(βπx), evaluated as f(x − shift).
#[derive(Clone, Debug)]
pub struct PotentialSpec {
    monomials: Vec<MonomialTerm>,
    cosines: Vec<CosineTerm>,
    shift: Option<HPReal>,
}

impl PotentialSpec {
    /// The zero potential (free particle).
    pub fn zero() -> Self {
        PotentialSpec {
            monomials: Vec::new(),
            cosines: Vec::new(),
            shift: None,
        }
    }

    /// Parse the canonical text form under the given precision context.
    pub fn parse(text: &str, ctx: &PrecisionContext) -> Result<Self> {
        parse::parse_potential(text, ctx)
    }

    pub fn push_monomial(&mut self, exponent: u32, coefficient_text: &str, ctx: &PrecisionContext) -> Result<()> {
        let coefficient = ctx.from_str(coefficient_text)?;
        self.monomials.push(MonomialTerm {
            exponent,
            coefficient,
            coefficient_text: parse::normalize_decimal(coefficient_text)
                .ok_or_else(|| VismError::NumberParse { text: coefficient_text.into() })?,
        });
        self.sort_terms();
        Ok(())
    }

    pub fn push_cosine(&mut self, amplitude_text: &str, frequency_text: &str, ctx: &PrecisionContext) -> Result<()> {
        let amplitude = ctx.from_str(amplitude_text)?;
        let frequency_factor = ctx.from_str(frequency_text)?;
        if frequency_factor.is_zero() || frequency_factor.is_sign_negative() {
            return Err(VismError::PotentialParse(format!(
                "cosine frequency factor must be positive, got {frequency_text}"
            )));
        }
        self.cosines.push(CosineTerm {
            amplitude,
            amplitude_text: parse::normalize_decimal(amplitude_text)
                .ok_or_else(|| VismError::NumberParse { text: amplitude_text.into() })?,
            frequency_factor,
            frequency_text: parse::normalize_decimal(frequency_text)
                .ok_or_else(|| VismError::NumberParse { text: frequency_text.into() })?,
        });
        self.sort_terms();
        Ok(())
    }

    /// Translate the potential: evaluates as f(x − shift).
    pub fn with_shift(mut self, shift: HPReal) -> Self {
        self.shift = if shift.is_zero() { None } else { Some(shift) };
        self
    }

    fn sort_terms(&mut self) {
        self.monomials.sort_by_key(|t| t.exponent);
        self.cosines.sort_by(|a, b| {
            a.frequency_factor
                .cmp_total(&b.frequency_factor)
                .then_with(|| a.amplitude.cmp_total(&b.amplitude))
        });
    }

    pub fn monomials(&self) -> &[MonomialTerm] {
        &self.monomials
    }

    pub fn cosines(&self) -> &[CosineTerm] {
        &self.cosines
    }

    pub fn shift(&self) -> Option<&HPReal> {
        self.shift.as_ref()
    }

    pub fn is_zero_potential(&self) -> bool {
        self.monomials.is_empty() && self.cosines.is_empty()
    }

    /// True iff f(−x) = f(x): all monomial exponents even, no translation.
    /// Cosine terms are even by themselves.
    pub fn is_even(&self) -> bool {
        self.shift.is_none() && self.monomials.iter().all(|t| t.exponent % 2 == 0)
    }

    /// f(x) at the value's precision.
    pub fn eval(&self, x: &HPReal, ctx: &PrecisionContext) -> HPReal {
        let arg = match &self.shift {
            Some(s) => x - s,
            None => x.clone(),
        };
        let mut acc = ctx.zero();
        for t in &self.monomials {
            acc = &acc + &(&t.coefficient * &arg.powi(t.exponent as i32));
        }
        if !self.cosines.is_empty() {
            let pi = ctx.pi();
            for t in &self.cosines {
                let phase = &(&t.frequency_factor * &pi) * &arg;
                acc = &acc + &(&t.amplitude * &phase.cos());
            }
        }
        acc
    }

    /// Canonical text rendering; parses back to an equivalent potential.
    pub fn canonical_text(&self) -> String {
        if self.is_zero_potential() {
            return "0".to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        for t in &self.monomials {
            let body = match t.exponent {
                0 => parse::strip_sign(&t.coefficient_text).to_string(),
                k => {
                    let var = if k == 1 { "x".to_string() } else { format!("x^{k}") };
                    match parse::strip_sign(&t.coefficient_text) {
                        "1" => var,
                        c => format!("{c}*{var}"),
                    }
                }
            };
            parts.push(render_term(&t.coefficient_text, body, parts.is_empty()));
        }
        for t in &self.cosines {
            let cos = format!("cos({}*pi*x)", t.frequency_text);
            let body = match parse::strip_sign(&t.amplitude_text) {
                "1" => cos,
                a => format!("{a}*{cos}"),
            };
            parts.push(render_term(&t.amplitude_text, body, parts.is_empty()));
        }
        parts.join(" ")
    }

    /// Reduced form in the symmetric integration variable t (t = x in
    /// periodic mode, t = x − L in confinement mode): the user shift is
    /// expanded symbolically (binomial theorem for monomials, angle
    /// addition for cosines) so closed forms stay exact.
    pub(crate) fn reduced_terms(
        &self,
        ctx: &PrecisionContext,
    ) -> (Vec<(u32, HPReal)>, Vec<HarmonicTerm>) {
        let mut poly: Vec<HPReal> = Vec::new();
        let grow = |k: usize, v: HPReal, poly: &mut Vec<HPReal>| {
            while poly.len() <= k {
                poly.push(ctx.zero());
            }
            poly[k] = &poly[k] + &v;
        };
        for t in &self.monomials {
            match &self.shift {
                None => grow(t.exponent as usize, t.coefficient.clone(), &mut poly),
                Some(s) => {
                    // c·(t − s)^k = c·Σ_j C(k,j)·(−s)^{k−j}·t^j
                    let k = t.exponent;
                    for j in 0..=k {
                        let binom = ctx.from_str(&binomial(k, j).to_string()).expect("integer");
                        let pow = (-s).powi((k - j) as i32);
                        grow(j as usize, &(&t.coefficient * &binom) * &pow, &mut poly);
                    }
                }
            }
        }
        let mut harmonics = Vec::new();
        for t in &self.cosines {
            match &self.shift {
                None => harmonics.push(HarmonicTerm {
                    wave: Wave::Cos,
                    amplitude: t.amplitude.clone(),
                    beta: t.frequency_factor.clone(),
                }),
                Some(s) => {
                    // α·cos(βπ(t − s)) = α·cos(βπs)·cos(βπt) + α·sin(βπs)·sin(βπt)
                    let phase = &(&t.frequency_factor * &ctx.pi()) * s;
                    let (sp, cp) = phase.sin_cos();
                    harmonics.push(HarmonicTerm {
                        wave: Wave::Cos,
                        amplitude: &t.amplitude * &cp,
                        beta: t.frequency_factor.clone(),
                    });
                    harmonics.push(HarmonicTerm {
                        wave: Wave::Sin,
                        amplitude: &t.amplitude * &sp,
                        beta: t.frequency_factor.clone(),
                    });
                }
            }
        }
        let poly = poly
            .into_iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(k, v)| (k as u32, v))
            .collect();
        (poly, harmonics)
    }
}

impl fmt::Display for PotentialSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical_text())
    }
}

fn render_term(signed_text: &str, body: String, first: bool) -> String {
    let negative = signed_text.starts_with('-');
    match (first, negative) {
        (true, false) => body,
        (true, true) => format!("-{body}"),
        (false, false) => format!("+ {body}"),
        (false, true) => format!("- {body}"),
    }
}

fn binomial(n: u32, k: u32) -> u64 {
    let k = k.min(n - k.min(n));
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc
}

/// Symmetric coupling matrix C_ab = ∫ g_a f g_b dx, indexed by flat basis
/// ordinals.
#[derive(Clone, Debug)]
pub struct CouplingMatrix(pub(crate) DenseMatrix);

impl CouplingMatrix {
    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn get(&self, a: usize, b: usize) -> &HPReal {
        self.0.get(a, b)
    }

    pub fn as_matrix(&self) -> &DenseMatrix {
        &self.0
    }

    /// Entrywise a + s·b.
    pub fn add_scaled(&self, other: &CouplingMatrix, s: &HPReal) -> CouplingMatrix {
        let n = self.dim();
        CouplingMatrix(DenseMatrix::from_fn(n, |i, j| {
            self.get(i, j) + &(s * other.get(i, j))
        }))
    }
}

/// Exact closed-form matrix of ∫ g_a x^k g_b dx over the mode's domain.
/// Supported for k ≤ 4; higher exponents go through [`coupling_quadrature`].
pub fn coupling_monomial(
    spec: &BasisSpec,
    k: u32,
    ctx: &PrecisionContext,
) -> Result<CouplingMatrix> {
    if k > 4 {
        return Err(VismError::UnsupportedExponent(k));
    }
    // x^k in the integration variable: t^k in periodic mode, (t + L)^k in
    // confinement mode
    let poly: Vec<(u32, HPReal)> = match spec.mode() {
        BoundaryMode::Periodic => vec![(k, ctx.one())],
        BoundaryMode::Confinement => {
            let l = spec.half_length();
            (0..=k)
                .map(|j| {
                    let b = ctx.from_str(&binomial(k, j).to_string()).expect("integer");
                    (j, &b * &l.powi((k - j) as i32))
                })
                .collect()
        }
    };
    Ok(closed_form_coupling(spec, &poly, &[], ctx))
}

/// Exact closed-form matrix of ∫ g_a α·cos(βπx) g_b dx over the mode's
/// domain. Resonant frequency combinations are evaluated by their analytic
/// limits, so no special casing is needed at any β.
pub fn coupling_cosine(
    spec: &BasisSpec,
    alpha: &HPReal,
    beta: &HPReal,
    ctx: &PrecisionContext,
) -> Result<CouplingMatrix> {
    let harmonics: Vec<HarmonicTerm> = match spec.mode() {
        BoundaryMode::Periodic => vec![HarmonicTerm {
            wave: Wave::Cos,
            amplitude: alpha.clone(),
            beta: beta.clone(),
        }],
        BoundaryMode::Confinement => {
            // cos(βπ(t + L)) = cos(βπL)cos(βπt) − sin(βπL)sin(βπt)
            let phase = &(beta * &ctx.pi()) * spec.half_length();
            let (sp, cp) = phase.sin_cos();
            vec![
                HarmonicTerm {
                    wave: Wave::Cos,
                    amplitude: alpha * &cp,
                    beta: beta.clone(),
                },
                HarmonicTerm {
                    wave: Wave::Sin,
                    amplitude: -&(alpha * &sp),
                    beta: beta.clone(),
                },
            ]
        }
    };
    Ok(closed_form_coupling(spec, &[], &harmonics, ctx))
}

fn closed_form_coupling(
    spec: &BasisSpec,
    poly: &[(u32, HPReal)],
    harmonics: &[HarmonicTerm],
    ctx: &PrecisionContext,
) -> CouplingMatrix {
    let n = spec.size();
    let atoms: Vec<Atom> = (0..n).map(|flat| atom_for(spec, flat, ctx)).collect();
    let mut table = MomentTable::new(spec, harmonics, ctx);
    let mut m = DenseMatrix::zeros(n, ctx);
    for a in 0..n {
        for b in a..n {
            let mut acc = ctx.zero();
            for (k, coeff) in poly {
                let v = kernels::pair_monomial_integral(&mut table, &atoms[a], &atoms[b], *k, ctx);
                acc = &acc + &(coeff * &v);
            }
            for (idx, h) in harmonics.iter().enumerate() {
                if h.amplitude.is_zero() {
                    continue;
                }
                let v = kernels::pair_harmonic_integral(&mut table, &atoms[a], &atoms[b], h, idx, ctx);
                acc = &acc + &v;
            }
            m.set(a, b, acc.clone());
            if a != b {
                m.set(b, a, acc);
            }
        }
    }
    CouplingMatrix(m)
}

/// Every entry ∫ g_a f g_b dx computed by adaptive quadrature to `tol`,
/// then symmetrized by averaging C_ab and C_ba.
pub fn coupling_quadrature(
    spec: &BasisSpec,
    pot: &PotentialSpec,
    ctx: &PrecisionContext,
    tol: &HPReal,
) -> Result<CouplingMatrix> {
    let n = spec.size();
    let (lo, hi) = spec.domain();
    let mut raw = DenseMatrix::zeros(n, ctx);
    for a in 0..n {
        let ia = spec.index(a)?;
        for b in 0..n {
            let ib = spec.index(b)?;
            let v = gauss_quadrature(
                |x| {
                    let ga = eval_basis(spec, &ia, x).expect("index in range");
                    let gb = eval_basis(spec, &ib, x).expect("index in range");
                    &(&ga * &pot.eval(x, ctx)) * &gb
                },
                &lo,
                &hi,
                ctx,
                tol,
            )
            .map_err(|e| VismError::CouplingQuadrature {
                row: a,
                col: b,
                source: Box::new(e),
            })?;
            raw.set(a, b, v);
        }
    }
    let half = &ctx.one() / &ctx.from_u32(2);
    let m = DenseMatrix::from_fn(n, |i, j| &(raw.get(i, j) + raw.get(j, i)) * &half);
    Ok(CouplingMatrix(m))
}

/// Full coupling matrix of a potential as it enters the eigenproblem:
/// closed forms for monomials with k ≤ 4 and for cosine terms, quadrature
/// for anything else. In confinement mode the equation couples through the
/// translated potential f(x − L); that translation is identically absorbed
/// by rewriting the integrals in t = x − L, with the user shift expanded
/// symbolically.
pub fn assemble_coupling(
    spec: &BasisSpec,
    pot: &PotentialSpec,
    ctx: &PrecisionContext,
) -> Result<CouplingMatrix> {
    let (poly, harmonics) = pot.reduced_terms(ctx);
    let closed: Vec<(u32, HPReal)> = poly.iter().filter(|(k, _)| *k <= 4).cloned().collect();
    let rest: Vec<(u32, HPReal)> = poly.into_iter().filter(|(k, _)| *k > 4).collect();
    let mut matrix = closed_form_coupling(spec, &closed, &harmonics, ctx);
    if !rest.is_empty() {
        // quadrature fallback in t-coordinates, folded back to x
        let l = spec.half_length().clone();
        let conf = spec.mode() == BoundaryMode::Confinement;
        let mut tail = PotentialSpec::zero();
        for (k, coeff) in &rest {
            tail.monomials.push(MonomialTerm {
                exponent: *k,
                coefficient: coeff.clone(),
                coefficient_text: coeff.to_decimal_string(ctx.digits()),
            });
        }
        let tail = if conf { tail.with_shift(l) } else { tail };
        let scale = tail
            .monomials
            .iter()
            .fold(ctx.one(), |m, t| m.max(&t.coefficient.abs()));
        let tol = &ctx.epsilon() * &scale;
        let q = coupling_quadrature(spec, &tail, ctx, &tol)?;
        matrix = matrix.add_scaled(&q, &ctx.one());
    }
    Ok(matrix)
}
