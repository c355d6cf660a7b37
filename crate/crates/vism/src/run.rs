//! Batch command layer: the operations behind the CLI, reusable from other
//! front ends.
//!
//! Output files are deterministic: identical configurations produce
//! bit-identical bytes (energies as decimal strings, fixed column order,
//! no timestamps). Wall times go to stderr only.

use crate::basis::{BasisSpec, BoundaryMode};
use crate::calibration;
use crate::eigen::{solve_hamiltonian, solve_potential};
use crate::error::{Result, VismError};
use crate::hamiltonian::assemble;
use crate::numeric::{HPReal, PrecisionContext};
use crate::optimize::{
    build_interpolant, find_l_hat, read_anchors_csv, scan_e_vs_l, write_anchors_csv,
    ErrorReference, LHatAnchor, LHatInterpolant, LHatMethod,
};
use crate::potential::PotentialSpec;
use crate::reference::{quartic_perturbation_energy, sho_energy, sho_psi};
use crate::solution::{delta_e_hat_batch, delta_e_exact, delta_psi_exact, write_psi_csv};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::fs;
use std::io::BufReader;
use std::path::{Path, PathBuf};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
}

impl OutputFormat {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(VismError::Config(format!("unknown format '{other}'"))),
        }
    }
}

/// Half-length choice: a decimal string or "auto" through a calibration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LChoice {
    Auto,
    Explicit(String),
}

impl LChoice {
    pub fn parse(s: &str) -> Self {
        if s.trim().eq_ignore_ascii_case("auto") {
            LChoice::Auto
        } else {
            LChoice::Explicit(s.trim().to_string())
        }
    }
}

impl fmt::Display for LChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LChoice::Auto => write!(f, "auto"),
            LChoice::Explicit(s) => write!(f, "{s}"),
        }
    }
}

/// Reference solutions the CLI can compare against.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReferenceKind {
    /// Exact oscillator spectrum/eigenfunctions; potential must be x^2.
    Exact,
    /// Zeroth-order perturbative energies for x^2 + eps*x^4.
    Perturbation0,
    /// First-order perturbative energies for x^2 + eps*x^4.
    Perturbation1,
}

impl ReferenceKind {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(ReferenceKind::Exact),
            "perturbation0" => Ok(ReferenceKind::Perturbation0),
            "perturbation1" => Ok(ReferenceKind::Perturbation1),
            other => Err(VismError::Config(format!("unknown reference '{other}'"))),
        }
    }
}

/// Solve-command configuration. The JSON config file mirrors this.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub potential: String,
    pub mode: BoundaryMode,
    pub n: u32,
    pub l: LChoice,
    pub precision: u32,
    pub states: usize,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
    pub lhat_anchors: Option<PathBuf>,
    pub reference: Option<ReferenceKind>,
    pub delta_e_hat: bool,
    pub psi_out: Option<PathBuf>,
    pub psi_state: usize,
    pub psi_samples: usize,
    pub dump_matrix: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            potential: "x^2".into(),
            mode: BoundaryMode::Periodic,
            n: 10,
            l: LChoice::Auto,
            precision: 30,
            states: 10,
            format: OutputFormat::Csv,
            out: None,
            lhat_anchors: None,
            reference: None,
            delta_e_hat: false,
            psi_out: None,
            psi_state: 0,
            psi_samples: 1001,
            dump_matrix: None,
        }
    }
}

/// JSON mirror of [`RunConfig`] for `--config` files.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfigFile {
    pub potential: Option<String>,
    pub mode: Option<BoundaryMode>,
    pub n: Option<u32>,
    pub l: Option<String>,
    pub precision: Option<u32>,
    pub states: Option<usize>,
    pub format: Option<OutputFormat>,
    pub out: Option<PathBuf>,
    pub lhat_anchors: Option<PathBuf>,
    pub reference: Option<String>,
    pub delta_e_hat: Option<bool>,
}

impl RunConfig {
    pub fn from_json(text: &str) -> Result<RunConfig> {
        let file: RunConfigFile = serde_json::from_str(text)
            .map_err(|e| VismError::Config(format!("config file: {e}")))?;
        let mut cfg = RunConfig::default();
        cfg.apply_file(file)?;
        Ok(cfg)
    }

    pub fn apply_file(&mut self, file: RunConfigFile) -> Result<()> {
        if let Some(v) = file.potential {
            self.potential = v;
        }
        if let Some(v) = file.mode {
            self.mode = v;
        }
        if let Some(v) = file.n {
            self.n = v;
        }
        if let Some(v) = file.l {
            self.l = LChoice::parse(&v);
        }
        if let Some(v) = file.precision {
            self.precision = v;
        }
        if let Some(v) = file.states {
            self.states = v;
        }
        if let Some(v) = file.format {
            self.format = v;
        }
        if file.out.is_some() {
            self.out = file.out;
        }
        if file.lhat_anchors.is_some() {
            self.lhat_anchors = file.lhat_anchors;
        }
        if let Some(v) = file.reference {
            self.reference = Some(ReferenceKind::parse(&v)?);
        }
        if let Some(v) = file.delta_e_hat {
            self.delta_e_hat = v;
        }
        Ok(())
    }
}

/// One output row of a solve/compare run.
#[derive(Clone, Debug, Serialize)]
pub struct StateRow {
    pub n: usize,
    pub energy: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parity: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta_e_hat: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta_e: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta_psi: Option<String>,
}

/// Full result of a solve run. `wall_ms` never enters the serialized
/// output, so files stay reproducible bit for bit.
#[derive(Clone, Debug, Serialize)]
pub struct ResultRecord {
    pub potential: String,
    pub mode: String,
    pub n: u32,
    pub l: String,
    pub precision: u32,
    pub states: Vec<StateRow>,
    #[serde(skip)]
    pub wall_ms: u128,
}

/// Resolve the half-length: an explicit decimal, a user anchor table, or a
/// built-in calibration for the canonical potential.
pub fn resolve_l(
    pot: &PotentialSpec,
    n: u32,
    choice: &LChoice,
    anchors: Option<&Path>,
    ctx: &PrecisionContext,
) -> Result<HPReal> {
    match choice {
        LChoice::Explicit(text) => {
            let l = ctx.from_str(text)?;
            if l.is_zero() || l.is_sign_negative() {
                return Err(VismError::Config(format!("L must be positive, got {text}")));
            }
            Ok(l)
        }
        LChoice::Auto => {
            let interp = auto_interpolant(pot, anchors, ctx)?;
            interp.evaluate(n, ctx)
        }
    }
}

fn auto_interpolant(
    pot: &PotentialSpec,
    anchors: Option<&Path>,
    ctx: &PrecisionContext,
) -> Result<LHatInterpolant> {
    if let Some(path) = anchors {
        let file = fs::File::open(path)?;
        let anchors = read_anchors_csv(BufReader::new(file), ctx)?;
        return build_interpolant(anchors);
    }
    match calibration::builtin_anchors(pot, ctx) {
        Some(anchors) => build_interpolant(anchors?),
        None => Err(VismError::Config(format!(
            "no built-in calibration for '{}'; run `calibrate` and pass --anchors",
            pot.canonical_text()
        ))),
    }
}

/// Assemble, solve, and report the lowest `states` eigenpairs in one run.
pub fn cmd_solve(cfg: &RunConfig) -> Result<ResultRecord> {
    let start = std::time::Instant::now();
    let ctx = PrecisionContext::new(cfg.precision)?;
    let pot = PotentialSpec::parse(&cfg.potential, &ctx)?;
    if cfg.states == 0 {
        return Err(VismError::Config("need at least one state".into()));
    }
    let l = resolve_l(&pot, cfg.n, &cfg.l, cfg.lhat_anchors.as_deref(), &ctx)?;
    let spec = BasisSpec::new(cfg.mode, cfg.n, l.clone())?;
    if cfg.states > spec.size() {
        return Err(VismError::Config(format!(
            "{} states requested but the basis holds only {}",
            cfg.states,
            spec.size()
        )));
    }
    let h = assemble(&spec, &pot, &ctx)?;
    if let Some(path) = &cfg.dump_matrix {
        let mut f = fs::File::create(path)?;
        h.write_csv(&mut f, ctx.digits())?;
    }
    let spectrum = solve_hamiltonian(&h, &ctx)?;

    let delta_hats = if cfg.delta_e_hat {
        let interp = auto_interpolant(&pot, cfg.lhat_anchors.as_deref(), &ctx)?;
        Some(delta_e_hat_batch(
            &pot, cfg.mode, cfg.n, cfg.states, &interp, &ctx,
        )?)
    } else {
        None
    };

    let digits = ctx.digits();
    let mut rows = Vec::with_capacity(cfg.states);
    for s in 0..cfg.states {
        let state = spectrum.state(s)?;
        let (delta_e, delta_psi) = match cfg.reference {
            Some(ReferenceKind::Exact) => {
                require_sho(&pot)?;
                let exact = sho_energy(s as u32, &ctx);
                let de = delta_e_exact(&state, &exact)?;
                // in confinement mode the problem is translated by L, so the
                // reference eigenfunction is evaluated at x − L
                let shift = match cfg.mode {
                    BoundaryMode::Periodic => ctx.zero(),
                    BoundaryMode::Confinement => l.clone(),
                };
                let dp = delta_psi_exact(
                    &state,
                    |x| sho_psi(s as u32, &(x - &shift), &ctx),
                    1001,
                )?;
                (
                    Some(de.to_decimal_string(digits)),
                    Some(dp.to_decimal_string(digits)),
                )
            }
            Some(kind) => {
                let eps = quartic_epsilon(&pot)?;
                let order = if kind == ReferenceKind::Perturbation0 { 0 } else { 1 };
                let exact = quartic_perturbation_energy(s as u32, order, &eps, &ctx)?;
                let de = delta_e_exact(&state, &exact)?;
                (Some(de.to_decimal_string(digits)), None)
            }
            None => (None, None),
        };
        rows.push(StateRow {
            n: s,
            energy: state.energy.to_decimal_string(digits),
            parity: state.parity.map(|p| p.to_string()),
            delta_e_hat: delta_hats
                .as_ref()
                .map(|d| d[s].to_decimal_string(digits)),
            delta_e,
            delta_psi,
        });
    }

    if let Some(path) = &cfg.psi_out {
        let state = spectrum.state(cfg.psi_state)?;
        let mut f = fs::File::create(path)?;
        write_psi_csv(&state, cfg.psi_samples, digits, &mut f)?;
    }

    let record = ResultRecord {
        potential: pot.canonical_text(),
        mode: cfg.mode.to_string(),
        n: cfg.n,
        l: l.to_decimal_string(digits),
        precision: cfg.precision,
        states: rows,
        wall_ms: start.elapsed().as_millis(),
    };
    if let Some(path) = &cfg.out {
        fs::write(path, render_result(&record, cfg.format))?;
    }
    Ok(record)
}

fn require_sho(pot: &PotentialSpec) -> Result<()> {
    if pot.canonical_text() != "x^2" {
        return Err(VismError::ReferenceUnavailable(format!(
            "exact reference exists only for x^2, not '{}'",
            pot.canonical_text()
        )));
    }
    Ok(())
}

/// The quartic coupling ε of a potential of the exact form x^2 + ε·x^4.
fn quartic_epsilon(pot: &PotentialSpec) -> Result<HPReal> {
    let m = pot.monomials();
    let pure_quartic = pot.cosines().is_empty()
        && pot.shift().is_none()
        && m.len() == 2
        && m[0].exponent == 2
        && m[0].coefficient_text == "1"
        && m[1].exponent == 4;
    if !pure_quartic {
        return Err(VismError::ReferenceUnavailable(format!(
            "perturbative reference needs x^2 + eps*x^4, not '{}'",
            pot.canonical_text()
        )));
    }
    Ok(m[1].coefficient.clone())
}

pub fn render_result(r: &ResultRecord, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            serde_json::to_string_pretty(r).expect("record serializes") + "\n"
        }
        OutputFormat::Csv => {
            let mut out = String::new();
            out.push_str(&format!("# potential: {}\n", r.potential));
            out.push_str(&format!("# mode: {}\n", r.mode));
            out.push_str(&format!("# N: {}\n", r.n));
            out.push_str(&format!("# L: {}\n", r.l));
            out.push_str(&format!("# precision: {}\n", r.precision));
            out.push_str("n,energy,parity,delta_e_hat,delta_e,delta_psi\n");
            for row in &r.states {
                out.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    row.n,
                    row.energy,
                    row.parity.as_deref().unwrap_or(""),
                    row.delta_e_hat.as_deref().unwrap_or(""),
                    row.delta_e.as_deref().unwrap_or(""),
                    row.delta_psi.as_deref().unwrap_or(""),
                ));
            }
            out
        }
    }
}

/// scan-l configuration.
#[derive(Clone, Debug)]
pub struct ScanConfig {
    pub potential: String,
    pub mode: BoundaryMode,
    pub n_list: Vec<u32>,
    pub state: usize,
    pub l_min: String,
    pub l_max: String,
    pub samples: usize,
    pub precision: u32,
    pub reference: Option<ReferenceKind>,
    pub out: Option<PathBuf>,
}

#[derive(Clone, Debug)]
pub struct ScanRow {
    pub n: u32,
    pub l: String,
    pub energy: String,
    pub delta_e: Option<String>,
}

#[derive(Clone, Debug)]
pub struct ScanTable {
    pub rows: Vec<ScanRow>,
    /// Detected landscape features, one comment line each.
    pub features: Vec<String>,
    pub wall_ms: u128,
}

/// E(L) tables for plotting, with detected minima/inflections in the
/// metadata. Passing several N values produces the 2-D (N, L) sweep.
pub fn cmd_scan_l(cfg: &ScanConfig) -> Result<ScanTable> {
    let start = std::time::Instant::now();
    let ctx = PrecisionContext::new(cfg.precision)?;
    let pot = PotentialSpec::parse(&cfg.potential, &ctx)?;
    if cfg.n_list.is_empty() {
        return Err(VismError::Config("scan needs at least one N".into()));
    }
    let lo = ctx.from_str(&cfg.l_min)?;
    let hi = ctx.from_str(&cfg.l_max)?;
    let e_ref = match cfg.reference {
        Some(ReferenceKind::Exact) => {
            require_sho(&pot)?;
            Some(sho_energy(cfg.state as u32, &ctx))
        }
        Some(_) => {
            let eps = quartic_epsilon(&pot)?;
            Some(quartic_perturbation_energy(cfg.state as u32, 1, &eps, &ctx)?)
        }
        None => None,
    };

    let digits = ctx.digits();
    let mut rows = Vec::new();
    let mut features = Vec::new();
    for &n in &cfg.n_list {
        let table = scan_e_vs_l(&pot, cfg.mode, n, cfg.state, (&lo, &hi), cfg.samples, &ctx)?;
        // interior minima
        for w in table.windows(3) {
            if w[1].1 < w[0].1 && w[1].1 < w[2].1 {
                features.push(format!(
                    "N={n} interior-minimum near L={}",
                    w[1].0.to_decimal_string(6)
                ));
            }
        }
        // inflections: sign change of the discrete second difference
        let mut prev: Option<(bool, HPReal)> = None;
        for w in table.windows(3) {
            let second = &(&w[2].1 + &w[0].1) - &(&ctx.from_u32(2) * &w[1].1);
            if second.is_zero() {
                continue;
            }
            let neg = second.is_sign_negative();
            if let Some((pneg, _)) = &prev {
                if *pneg != neg {
                    features.push(format!(
                        "N={n} inflection near L={}",
                        w[1].0.to_decimal_string(6)
                    ));
                }
            }
            prev = Some((neg, second));
        }
        for (l, e) in table {
            let delta_e = e_ref.as_ref().map(|exact| {
                (&(&e - exact) / exact).abs().to_decimal_string(digits)
            });
            rows.push(ScanRow {
                n,
                l: l.to_decimal_string(digits),
                energy: e.to_decimal_string(digits),
                delta_e,
            });
        }
    }
    let table = ScanTable {
        rows,
        features,
        wall_ms: start.elapsed().as_millis(),
    };
    if let Some(path) = &cfg.out {
        fs::write(path, render_scan_csv(&table))?;
    }
    Ok(table)
}

pub fn render_scan_csv(t: &ScanTable) -> String {
    let mut out = String::new();
    for f in &t.features {
        out.push_str(&format!("# {f}\n"));
    }
    out.push_str("N,L,energy,delta_e\n");
    for r in &t.rows {
        out.push_str(&format!(
            "{},{},{},{}\n",
            r.n,
            r.l,
            r.energy,
            r.delta_e.as_deref().unwrap_or("")
        ));
    }
    out
}

/// calibrate configuration.
#[derive(Clone, Debug)]
pub struct CalibrateConfig {
    pub potential: String,
    pub method: LHatMethod,
    pub n_list: Vec<u32>,
    pub state: usize,
    pub precision: u32,
    pub tol_l: String,
    pub bracket: Option<(String, String)>,
    pub reference: Option<ReferenceKind>,
    pub out: Option<PathBuf>,
}

#[derive(Clone, Debug)]
pub struct CalibrationOutput {
    pub anchors: Vec<LHatAnchor>,
    /// Per-N failures; anchors computed before and after are preserved.
    pub failures: Vec<(u32, String)>,
    /// Power-law tail parameters of the interpolant, when buildable.
    pub power_law: Option<(String, String)>,
    pub wall_ms: u128,
}

/// Run find_l_hat over an ascending list of truncations.
pub fn cmd_calibrate(cfg: &CalibrateConfig) -> Result<CalibrationOutput> {
    let start = std::time::Instant::now();
    let ctx = PrecisionContext::new(cfg.precision)?;
    let pot = PotentialSpec::parse(&cfg.potential, &ctx)?;
    if cfg.n_list.is_empty() {
        return Err(VismError::Config("calibrate needs at least one N".into()));
    }
    if cfg.n_list.windows(2).any(|w| w[1] <= w[0]) {
        return Err(VismError::Config("N list must be strictly ascending".into()));
    }
    let tol = ctx.from_str(&cfg.tol_l)?;
    let bracket = match &cfg.bracket {
        Some((lo, hi)) => Some((ctx.from_str(lo)?, ctx.from_str(hi)?)),
        None => None,
    };

    // reference, when the method needs one
    let exact_energy = match cfg.reference {
        Some(ReferenceKind::Exact) => {
            require_sho(&pot)?;
            Some(sho_energy(cfg.state as u32, &ctx))
        }
        Some(_) => Some(quartic_perturbation_energy(
            cfg.state as u32,
            1,
            &quartic_epsilon(&pot)?,
            &ctx,
        )?),
        None => None,
    };
    let state_n = cfg.state as u32;
    let psi = |x: &HPReal| sho_psi(state_n, x, &ctx);
    let psi_available = matches!(cfg.reference, Some(ReferenceKind::Exact));

    let mut anchors = Vec::new();
    let mut failures = Vec::new();
    for &n in &cfg.n_list {
        let reference = ErrorReference {
            energy: exact_energy.clone(),
            psi: if psi_available { Some(&psi) } else { None },
            grid_points: 1001,
        };
        match find_l_hat(
            &pot,
            cfg.method,
            n,
            cfg.state,
            bracket.clone(),
            Some(&reference),
            &ctx,
            &tol,
        ) {
            Ok(a) => anchors.push(a),
            Err(e) => failures.push((n, e.to_string())),
        }
    }

    // the power-law summary is best effort: a non-monotone anchor set
    // still deserves its table
    let power_law = if anchors.len() >= 3 {
        match build_interpolant(anchors.clone()) {
            Ok(interp) => Some((
                interp.power_law_prefactor(&ctx).to_decimal_string(12),
                interp.power_law_exponent().to_decimal_string(12),
            )),
            Err(e) => {
                failures.push((0, format!("interpolant: {e}")));
                None
            }
        }
    } else {
        None
    };

    let out = CalibrationOutput {
        anchors,
        failures,
        power_law,
        wall_ms: start.elapsed().as_millis(),
    };
    if let Some(path) = &cfg.out {
        fs::write(path, render_anchors_csv(&out, ctx.digits())?)?;
    }
    Ok(out)
}

pub fn render_anchors_csv(out: &CalibrationOutput, digits: u32) -> Result<String> {
    let mut buf = Vec::new();
    write_anchors_csv(&out.anchors, digits, &mut buf)?;
    let mut text = String::from_utf8(buf).expect("csv is utf8");
    if let Some((a, b)) = &out.power_law {
        text.push_str(&format!("# power-law tail: a={a}, b={b}\n"));
    }
    for (n, why) in &out.failures {
        text.push_str(&format!("# failed N={n}: {why}\n"));
    }
    Ok(text)
}

/// compare configuration.
#[derive(Clone, Debug)]
pub struct CompareConfig {
    pub potential: String,
    pub reference: ReferenceKind,
    pub mode: BoundaryMode,
    pub n: u32,
    pub l: LChoice,
    pub precision: u32,
    pub states: usize,
    pub format: OutputFormat,
    pub lhat_anchors: Option<PathBuf>,
    pub out: Option<PathBuf>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CompareRow {
    pub n: usize,
    pub energy: String,
    pub reference: String,
    pub relative_difference: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CompareTable {
    pub potential: String,
    pub reference_kind: String,
    pub n: u32,
    pub l: String,
    pub precision: u32,
    pub rows: Vec<CompareRow>,
    #[serde(skip)]
    pub wall_ms: u128,
}

/// Per-state comparison against a reference: E, E_ref, |E_ref − E|/E.
pub fn cmd_compare(cfg: &CompareConfig) -> Result<CompareTable> {
    let start = std::time::Instant::now();
    let ctx = PrecisionContext::new(cfg.precision)?;
    let pot = PotentialSpec::parse(&cfg.potential, &ctx)?;
    let l = resolve_l(&pot, cfg.n, &cfg.l, cfg.lhat_anchors.as_deref(), &ctx)?;
    let spectrum = solve_potential(&pot, cfg.mode, cfg.n, &l, &ctx)?;
    if cfg.states > spectrum.len() {
        return Err(VismError::Config(format!(
            "{} states requested but the basis holds only {}",
            cfg.states,
            spectrum.len()
        )));
    }
    let digits = ctx.digits();
    let mut rows = Vec::new();
    for s in 0..cfg.states {
        let e_sm = &spectrum.eigenvalues[s];
        let e_ref = match cfg.reference {
            ReferenceKind::Exact => {
                require_sho(&pot)?;
                sho_energy(s as u32, &ctx)
            }
            ReferenceKind::Perturbation0 => {
                quartic_perturbation_energy(s as u32, 0, &quartic_epsilon(&pot)?, &ctx)?
            }
            ReferenceKind::Perturbation1 => {
                quartic_perturbation_energy(s as u32, 1, &quartic_epsilon(&pot)?, &ctx)?
            }
        };
        let rel = (&(&e_ref - e_sm) / e_sm).abs();
        rows.push(CompareRow {
            n: s,
            energy: e_sm.to_decimal_string(digits),
            reference: e_ref.to_decimal_string(digits),
            relative_difference: rel.to_decimal_string(digits),
        });
    }
    let kind = match cfg.reference {
        ReferenceKind::Exact => "exact",
        ReferenceKind::Perturbation0 => "perturbation0",
        ReferenceKind::Perturbation1 => "perturbation1",
    };
    let table = CompareTable {
        potential: pot.canonical_text(),
        reference_kind: kind.to_string(),
        n: cfg.n,
        l: l.to_decimal_string(digits),
        precision: cfg.precision,
        rows,
        wall_ms: start.elapsed().as_millis(),
    };
    if let Some(path) = &cfg.out {
        fs::write(path, render_compare(&table, cfg.format))?;
    }
    Ok(table)
}

pub fn render_compare(t: &CompareTable, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            serde_json::to_string_pretty(t).expect("table serializes") + "\n"
        }
        OutputFormat::Csv => {
            let mut out = String::new();
            out.push_str(&format!("# potential: {}\n", t.potential));
            out.push_str(&format!("# reference: {}\n", t.reference_kind));
            out.push_str(&format!("# N: {}\n# L: {}\n# precision: {}\n", t.n, t.l, t.precision));
            out.push_str("n,energy,reference,relative_difference\n");
            for r in &t.rows {
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    r.n, r.energy, r.reference, r.relative_difference
                ));
            }
            out
        }
    }
}
