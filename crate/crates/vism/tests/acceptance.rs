//! Acceptance suite: one test per shipped accuracy claim, each printing a
//! PASS line with the measured numbers (run with --nocapture to see them).
//!
//! Reference eigenvalues quoted as digit strings are independently
//! tabulated high-accuracy values for these standard problems. Where a
//! claim is labeled by the truncation convention that counts cosine modes
//! 0..N (one fewer than this library's BasisSpec::N, which also carries
//! sine N), the tests evaluate at N+1 so the even sector contents match.

use vism::basis::BoundaryMode;
use vism::calibration::builtin_anchors;
use vism::eigen::{eigh, eigh_blockwise, eigh_full, solve_potential};
use vism::hamiltonian::assemble;
use vism::matrix::DenseMatrix;
use vism::numeric::{gauss_quadrature, HPReal, PrecisionContext};
use vism::optimize::{build_interpolant, find_l_hat, ErrorReference, LHatInterpolant, LHatMethod};
use vism::potential::{assemble_coupling, PotentialSpec};
use vism::reference::{quartic_perturbation_energy, sho_energy, sho_psi};
use vism::run::{cmd_solve, render_result, RunConfig};
use vism::solution::{delta_e_hat_batch, delta_psi_exact, eval_psi};
use vism::{BasisSpec, Parity};

fn ctx(digits: u32) -> PrecisionContext {
    PrecisionContext::new(digits).unwrap()
}

fn sho(c: &PrecisionContext) -> PotentialSpec {
    PotentialSpec::parse("x^2", c).unwrap()
}

fn builtin_interpolant(pot: &PotentialSpec, c: &PrecisionContext) -> LHatInterpolant {
    build_interpolant(builtin_anchors(pot, c).expect("builtin exists").unwrap()).unwrap()
}

fn log10(v: &HPReal) -> f64 {
    v.log10().to_f64()
}

/// Criterion 1: the confinement basis diagonalizes the free box exactly,
/// so eigenvalues equal (mπ/2L)² at working precision for any L.
#[test]
fn a01_free_particle_box_oracle() {
    let c = ctx(30);
    for l_text in ["1.3", "2.7"] {
        let l = c.from_str(l_text).unwrap();
        let s = solve_potential(&PotentialSpec::zero(), BoundaryMode::Confinement, 4, &l, &c)
            .unwrap();
        for (i, e) in s.eigenvalues.iter().enumerate() {
            let m = c.from_u32(i as u32 + 1);
            let want = (&(&m * &c.pi()) / &(&c.from_u32(2) * &l)).square();
            let rel = (&(e - &want) / &want).abs();
            assert!(
                rel <= c.pow10(-35),
                "L={l_text} m={} rel={rel}",
                i + 1
            );
        }
    }
    println!("ACCEPTANCE a01 free-particle box oracle: PASS (exact at working precision)");
}

/// Criterion 2: desk-scale oscillator accuracy at 40 digits.
#[test]
fn a02_sho_desk_scale_accuracy() {
    let c = ctx(40);
    let pot = sho(&c);
    let interp = builtin_interpolant(&pot, &c);
    let n = 31; // even sector holds cosines 0..30
    let l = interp.evaluate(n, &c).unwrap();
    let s = solve_potential(&pot, BoundaryMode::Periodic, n, &l, &c).unwrap();
    let delta = (&(&s.eigenvalues[0] - &c.one()) / &c.one()).abs();
    assert!(
        delta <= c.pow10(-14),
        "delta_E0 = {delta} exceeds 1e-14"
    );
    println!(
        "ACCEPTANCE a02 SHO desk scale: PASS (delta_E0 = {:.3e} at L={:.6})",
        delta.to_f64(),
        l.to_f64()
    );
}

/// Criterion 3 (slow suite): extreme-precision spot check at 170 digits.
#[test]
#[ignore = "slow suite: run with --ignored"]
fn a03_sho_extreme_precision_slow() {
    let c = ctx(170);
    let pot = sho(&c);
    let interp = builtin_interpolant(&pot, &c);
    let n = 101; // even sector holds cosines 0..100
    let l = interp.evaluate(n, &c).unwrap();
    let s = solve_potential(&pot, BoundaryMode::Periodic, n, &l, &c).unwrap();
    let delta_e = (&(&s.eigenvalues[0] - &c.one()) / &c.one()).abs();
    assert!(
        delta_e <= c.pow10(-130),
        "delta_E0 = 1e{:.1} exceeds 1e-130",
        log10(&delta_e)
    );
    let state = s.state(0).unwrap();
    let delta_psi = delta_psi_exact(&state, |x| sho_psi(0, x, &c), 1001).unwrap();
    assert!(
        delta_psi <= c.pow10(-60),
        "delta_psi0 = 1e{:.1} exceeds 1e-60",
        log10(&delta_psi)
    );
    // the ground-state peak matches π^(-1/4) at a comparable scale
    let quarter = &c.one() / &c.from_u32(4);
    let peak_dev = (&eval_psi(&state, &c.zero()).unwrap() - &c.pi().pow(&quarter).recip()).abs();
    assert!(peak_dev <= c.pow10(-55));
    println!(
        "ACCEPTANCE a03 SHO extreme precision: PASS (delta_E0 = 1e{:.1}, delta_psi0 = 1e{:.1})",
        log10(&delta_e),
        log10(&delta_psi)
    );
}

/// Criterion 4: the self-estimate along the calibrated curve lands within
/// one order of magnitude of {2e-4, 4e-6, 9e-9, 2e-13} at the quoted
/// truncations.
#[test]
fn a04_vism_improvement_curve() {
    let c = ctx(50);
    let pot = sho(&c);
    let interp = builtin_interpolant(&pot, &c);
    // quoted truncations 2,3,5,7 count cosines 0..N: evaluate at N+1
    let cases: [(u32, f64); 4] = [(3, 2e-4), (4, 4e-6), (6, 9e-9), (8, 2e-13)];
    let mut report = Vec::new();
    let mut failures = Vec::new();
    for (n, target) in cases {
        let dh = delta_e_hat_batch(&pot, BoundaryMode::Periodic, n, 1, &interp, &c).unwrap()
            .pop()
            .unwrap();
        let value = dh.to_f64();
        report.push(format!("N={}→{:.2e} (target {target:.0e})", n - 1, value));
        if !(value >= target / 10.0 && value <= target * 10.0) {
            failures.push(format!(
                "delta_hat at truncation {} is {value:.2e}, outside one order of {target:.0e}",
                n - 1
            ));
        }
    }
    println!("ACCEPTANCE a04 improvement curve: {}", report.join(", "));
    assert!(failures.is_empty(), "{}", failures.join("; "));
    println!("ACCEPTANCE a04 improvement curve: PASS");
}

/// Criterion 5: the published anchor values 2.52479 and 3.04635 to four
/// significant digits.
#[test]
fn a05_lhat_anchor_values() {
    let c = ctx(30);
    let pot = sho(&c);
    let tol = c.pow10(-8);
    // the quoted values are the periodic-inflection feature; confinement
    // minima for the same sectors are printed for the record
    let mut got = Vec::new();
    for (n, want) in [(2u32, 2.52479f64), (3u32, 3.04635f64)] {
        let a = find_l_hat(
            &pot,
            LHatMethod::EnergyInflectionPeriodic,
            n,
            0,
            None,
            None,
            &c,
            &tol,
        )
        .unwrap();
        let value = a.l_hat.to_f64();
        assert!(
            (value - want).abs() / want < 5e-5,
            "inflection at N={n}: {value} vs {want}"
        );
        got.push(value);
    }
    for n in [1u32, 2] {
        let a = find_l_hat(
            &pot,
            LHatMethod::EnergyMinConfinement,
            n,
            0,
            None,
            None,
            &c,
            &tol,
        )
        .unwrap();
        println!(
            "ACCEPTANCE a05 note: confinement minimum at N={n} sits at {:.5}",
            a.l_hat.to_f64()
        );
    }
    println!(
        "ACCEPTANCE a05 anchors: PASS (inflection values {:.6}, {:.6})",
        got[0], got[1]
    );
}

/// Criterion 6: all four optimization methods agree pairwise within 1%.
#[test]
fn a06_cross_method_coincidence() {
    let c = ctx(35);
    let pot = sho(&c);
    let tol = c.pow10(-7);
    let psi0 = |x: &HPReal| sho_psi(0, x, &c);
    let reference = ErrorReference {
        energy: Some(sho_energy(0, &c)),
        psi: Some(&psi0),
        grid_points: 1001,
    };
    let methods = [
        LHatMethod::EnergyMinConfinement,
        LHatMethod::EnergyInflectionPeriodic,
        LHatMethod::EnergyErrorMin,
        LHatMethod::WavefunctionErrorMin,
    ];
    let mut failures = Vec::new();
    // quoted truncations 3,5,7 count cosines 0..N: evaluate at N+1
    for n in [4u32, 6, 8] {
        let mut values = Vec::new();
        for method in methods {
            let a = find_l_hat(&pot, method, n, 0, None, Some(&reference), &c, &tol).unwrap();
            values.push((method, a.l_hat.to_f64()));
        }
        let line = values
            .iter()
            .map(|(m, v)| format!("{m}={v:.5}"))
            .collect::<Vec<_>>()
            .join(" ");
        println!("ACCEPTANCE a06 values at truncation {}: {line}", n - 1);
        for (m1, v1) in &values {
            for (m2, v2) in &values {
                let rel = (v1 - v2).abs() / v1;
                if rel > 0.01 {
                    failures.push(format!(
                        "truncation {}: {m1}={v1:.5} vs {m2}={v2:.5} differ {:.2}%",
                        n - 1,
                        100.0 * rel
                    ));
                }
            }
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("; "));
    println!("ACCEPTANCE a06 cross-method coincidence: PASS");
}

/// Criterion 7: δ̂ tracks δ within a factor of 3 for the first ten states.
#[test]
fn a07_estimator_consistency() {
    let c = ctx(60);
    let pot = sho(&c);
    let interp = builtin_interpolant(&pot, &c);
    let n = 31;
    let l_n = interp.evaluate(n, &c).unwrap();
    let s = solve_potential(&pot, BoundaryMode::Periodic, n, &l_n, &c).unwrap();
    let hats = delta_e_hat_batch(&pot, BoundaryMode::Periodic, n, 10, &interp, &c).unwrap();
    let mut worst = 1.0f64;
    for state in 0..10usize {
        let exact = sho_energy(state as u32, &c);
        let delta = (&(&s.eigenvalues[state] - &exact) / &exact).abs();
        let ratio = hats[state].to_f64() / delta.to_f64();
        assert!(
            (1.0 / 3.0..=3.0).contains(&ratio),
            "state {state}: delta_hat {:.3e} vs delta {:.3e} (ratio {ratio:.2})",
            hats[state].to_f64(),
            delta.to_f64()
        );
        if (ratio - 1.0).abs() > (worst - 1.0).abs() {
            worst = ratio;
        }
    }
    println!(
        "ACCEPTANCE a07 estimator consistency: PASS (worst ratio {:.3} over 10 states)",
        worst
    );
}

/// Independently tabulated 50-digit eigenvalues of the quartic problem at
/// ε' = 1/10 (units with exact harmonic levels 2n+1).
const QUARTIC_REFERENCE: [&str; 10] = [
    "1.0652855095437176888570916287890930843044864178189",
    "3.3068720131529135071281216846928690495946552097516",
    "5.7479592688335633047335031184771312788809760663913",
    "8.3526778257857547121552577346436977053951052605059",
    "11.098595622633043011086458749297403250621831282348",
    "13.969926197742799300973433956842133961140713634295",
    "16.954794686144151337692616508817134375549987258361",
    "20.043863604188461233641421107385111570572266905826",
    "23.229552179939289070647087434323318243534938599487",
    "26.505554752536617417469503006738723676057932189542",
];

/// Criterion 8: the quartic oscillator at 80 digits reproduces the
/// tabulated values — 40 digits for the ground state, 30 for the first
/// ten.
#[test]
fn a08_quartic_oscillator() {
    let c = ctx(80);
    let pot = PotentialSpec::parse("x^2 + 0.1*x^4", &c).unwrap();
    let interp = builtin_interpolant(&pot, &c);
    let n = 61; // quoted truncation 60 counts cosines 0..60
    let l = interp.evaluate(n, &c).unwrap();
    let s = solve_potential(&pot, BoundaryMode::Periodic, n, &l, &c).unwrap();
    let mut worst_digits = f64::INFINITY;
    for (state, text) in QUARTIC_REFERENCE.iter().enumerate() {
        let reference = c.from_str(text).unwrap();
        let rel = (&(&s.eigenvalues[state] - &reference) / &reference).abs();
        let digits = -log10(&rel);
        let need = if state == 0 { 40.0 } else { 30.0 };
        assert!(
            digits >= need,
            "state {state}: {digits:.1} matching digits < {need}"
        );
        worst_digits = worst_digits.min(digits);
    }
    println!(
        "ACCEPTANCE a08 quartic oscillator: PASS (E0 matches {:.0} digits; worst state {:.0})",
        -log10(&(&(&s.eigenvalues[0] - &c.from_str(QUARTIC_REFERENCE[0]).unwrap())
            / &c.from_str(QUARTIC_REFERENCE[0]).unwrap())
            .abs()),
        worst_digits
    );
}

/// Criterion 9: perturbative reference columns.
#[test]
fn a09_perturbation_columns() {
    let c = ctx(50);
    let eps = c.from_str("0.1").unwrap();
    // order-0 and order-1 ground values
    let e0_0 = quartic_perturbation_energy(0, 0, &eps, &c).unwrap();
    assert_eq!(e0_0, c.one());
    let e0_1 = quartic_perturbation_energy(0, 1, &eps, &c).unwrap();
    assert!((&e0_1 - &c.from_str("1.075").unwrap()).abs() <= c.pow10(-30));

    // relative differences against a converged solve
    let pot = PotentialSpec::parse("x^2 + 0.1*x^4", &c).unwrap();
    let interp = builtin_interpolant(&pot, &c);
    let n = 41;
    let l = interp.evaluate(n, &c).unwrap();
    let s = solve_potential(&pot, BoundaryMode::Periodic, n, &l, &c).unwrap();
    let e_sm = &s.eigenvalues[0];
    let d0 = (&(&e0_0 - e_sm) / e_sm).abs().to_f64();
    let d1 = (&(&e0_1 - e_sm) / e_sm).abs().to_f64();
    assert!((d0 - 0.0613).abs() < 1e-3, "order-0 difference {d0}");
    assert!((d1 - 0.0091).abs() < 1e-3, "order-1 difference {d1}");

    // rows n ≥ 1 of the first-order column against the ladder oracle
    // (closed form (3/4)(2n²+2n+1) per unit ε)
    for state in 1..10u32 {
        let got = quartic_perturbation_energy(state, 1, &eps, &c).unwrap();
        let shift = &c.from_str("0.075").unwrap()
            * &c.from_u32(2 * state * state + 2 * state + 1);
        let want = &sho_energy(state, &c) + &shift;
        assert!(
            (&got - &want).abs() <= c.pow10(-30),
            "state {state}: {got} vs {want}"
        );
    }
    // the n=1 first-order value from the oracle is 3.375 — a tabulation
    // that lists 3.450 there disagrees with the operator algebra and is
    // documented, not reproduced
    let e1_1 = quartic_perturbation_energy(1, 1, &eps, &c).unwrap();
    assert!((&e1_1 - &c.from_str("3.375").unwrap()).abs() <= c.pow10(-30));
    println!(
        "ACCEPTANCE a09 perturbation columns: PASS (differences {d0:.4} / {d1:.4}, E1(1) = 3.375)"
    );
}

/// Criterion 10: rapid-oscillation threshold behavior of
/// x² + 10·cos(10πx): an unperturbed-looking plateau while the basis
/// cannot resolve the ripples, a sharp drop once it can, and a tiny
/// self-estimate at truncation 150.
#[test]
fn a10_rapid_oscillation_threshold() {
    let c = ctx(60);
    let pot = PotentialSpec::parse("x^2 + 10*cos(10*pi*x)", &c).unwrap();
    let sho_interp = builtin_interpolant(&sho(&c), &c);
    let osc_interp = builtin_interpolant(&pot, &c);

    // plateau: resolution k_max = Nπ/L stays below the ripple wavenumber
    // 10π, so the spectrum looks unperturbed
    let beta = 10.0;
    let mut plateau_values = Vec::new();
    for n in [30u32, 45, 60] {
        let l = sho_interp.evaluate(n, &c).unwrap();
        assert!(
            (n as f64) < beta * l.to_f64(),
            "N={n} would already resolve the ripples at L={}",
            l.to_f64()
        );
        let s = solve_potential(&pot, BoundaryMode::Periodic, n, &l, &c).unwrap();
        plateau_values.push(s.eigenvalues[0].to_f64());
    }
    let plateau = plateau_values.iter().sum::<f64>() / plateau_values.len() as f64;
    for (i, v) in plateau_values.iter().enumerate() {
        assert!(
            (v - plateau).abs() <= 1e-3,
            "plateau point {i} = {v} vs mean {plateau}"
        );
    }
    assert!(
        (plateau - 1.0).abs() < 5e-2,
        "plateau {plateau} is not unperturbed-like"
    );

    // past the threshold the energy drops sharply
    let n_drop = 150u32;
    let l_drop = osc_interp.evaluate(n_drop, &c).unwrap();
    assert!(
        (n_drop as f64) > beta * l_drop.to_f64(),
        "N=150 should exceed the resolution threshold β·L̂ = {}",
        beta * l_drop.to_f64()
    );
    let s = solve_potential(&pot, BoundaryMode::Periodic, n_drop, &l_drop, &c).unwrap();
    let e_drop = s.eigenvalues[0].to_f64();
    assert!(
        e_drop <= plateau - 1e-2,
        "E0(150) = {e_drop} did not drop below the plateau {plateau}"
    );

    // and the self-estimate certifies the post-drop convergence
    let dh = delta_e_hat_batch(&pot, BoundaryMode::Periodic, n_drop, 1, &osc_interp, &c)
        .unwrap()
        .pop()
        .unwrap();
    assert!(
        dh <= c.pow10(-20),
        "delta_hat(150) = 1e{:.1} exceeds 1e-20",
        log10(&dh)
    );
    println!(
        "ACCEPTANCE a10 rapid oscillation: PASS (plateau {plateau:.6}, drop to {e_drop:.6}, delta_hat(150) = 1e{:.1})",
        log10(&dh)
    );
}

/// Criterion 11: exponential convergence along the calibrated curve.
#[test]
fn a11_exponential_convergence() {
    let c = ctx(60);
    let pot = sho(&c);
    let interp = builtin_interpolant(&pot, &c);
    // quoted truncations 5..30 step 5, evaluated at N+1
    let ns = [6u32, 11, 16, 21, 26, 31];
    let mut points = Vec::new();
    for &n in &ns {
        let l = interp.evaluate(n, &c).unwrap();
        let s = solve_potential(&pot, BoundaryMode::Periodic, n, &l, &c).unwrap();
        let delta = (&(&s.eigenvalues[0] - &c.one()) / &c.one()).abs();
        points.push((n as f64, log10(&delta) * std::f64::consts::LN_10));
    }
    let n_pts = points.len() as f64;
    let xbar = points.iter().map(|p| p.0).sum::<f64>() / n_pts;
    let ybar = points.iter().map(|p| p.1).sum::<f64>() / n_pts;
    let sxy: f64 = points.iter().map(|p| (p.0 - xbar) * (p.1 - ybar)).sum();
    let sxx: f64 = points.iter().map(|p| (p.0 - xbar).powi(2)).sum();
    let syy: f64 = points.iter().map(|p| (p.1 - ybar).powi(2)).sum();
    let r = sxy / (sxx * syy).sqrt();
    assert!(
        r.abs() > 0.99,
        "correlation {r:.4} too weak for exponential decay: {points:?}"
    );
    println!(
        "ACCEPTANCE a11 exponential convergence: PASS (|r| = {:.5}, slope {:.2} per N)",
        r.abs(),
        sxy / sxx
    );
}

/// Criterion 12: the no-magic-numbers property battery.
#[test]
fn a12_property_suites() {
    let c = ctx(30);

    // Gram orthonormality in both modes
    for spec in [
        BasisSpec::periodic(3, c.from_f64(1.4)).unwrap(),
        BasisSpec::confinement(3, c.from_f64(1.4)).unwrap(),
    ] {
        let dev = vism::basis::gram_check(&spec, &c).unwrap();
        assert!(dev < c.pow10(-24), "gram deviation {dev}");
    }

    // coupling symmetry and parity sparsity
    let spec = BasisSpec::periodic(4, c.from_f64(2.2)).unwrap();
    let pot = PotentialSpec::parse("x^2 + 0.1*x^4", &c).unwrap();
    let coupling = assemble_coupling(&spec, &pot, &c).unwrap();
    let (_, _, dev) = coupling.as_matrix().symmetry_deviation();
    assert!(dev.is_zero());
    for a in 0..4 {
        for b in 4..8 {
            assert!(coupling.get(a, b).is_zero());
        }
    }

    // parity-block spectrum union
    let spec = BasisSpec::periodic(6, c.from_u32(4)).unwrap();
    let h = assemble(&spec, &sho(&c), &c).unwrap();
    let blockwise = eigh_blockwise(&h, &c).unwrap();
    let full = eigh_full(&h, &c).unwrap();
    let tol = &c.pow10(-20) * &h.matrix().max_abs();
    for (a, b) in blockwise.eigenvalues.iter().zip(full.eigenvalues.iter()) {
        assert!((a - b).abs() <= tol);
    }

    // Jacobi reconstruction, trace, residual on a random-ish dense matrix
    let m = DenseMatrix::from_fn(8, |i, j| {
        let (i, j) = (i.min(j) as u32, i.max(j) as u32);
        c.from_u32(1 + i * 3 + j * 7) / c.from_u32(3 + i + 2 * j)
    });
    let s = eigh(&m, &c).unwrap();
    let scale = m.max_abs();
    let tol = &c.pow10(-(c.digits() as i32 - c.guard_digits() as i32)) * &scale;
    let mut trace_sum = c.zero();
    for k in 0..8 {
        trace_sum = &trace_sum + &s.eigenvalues[k];
        for i in 0..8 {
            let mut mv = c.zero();
            for j in 0..8 {
                mv = &mv + &(m.get(i, j) * &s.eigenvectors[k][j]);
            }
            let resid = (&mv - &(&s.eigenvalues[k] * &s.eigenvectors[k][i])).abs();
            assert!(resid <= tol, "residual {resid} at state {k}");
        }
    }
    assert!((&trace_sum - &m.trace()).abs() <= tol);

    // Rayleigh–Ritz monotonicity in N
    for mode in [BoundaryMode::Periodic, BoundaryMode::Confinement] {
        let l = c.from_u32(5);
        let small = solve_potential(&sho(&c), mode, 5, &l, &c).unwrap();
        let large = solve_potential(&sho(&c), mode, 6, &l, &c).unwrap();
        let slack = &c.pow10(-20) * &small.eigenvalues.last().unwrap().abs();
        for (k, sv) in small.eigenvalues.iter().enumerate() {
            assert!(large.eigenvalues[k] <= sv + &slack, "{mode:?} state {k}");
        }
    }

    // delta_psi phase invariance
    let s = solve_potential(&sho(&c), BoundaryMode::Periodic, 8, &c.from_u32(5), &c).unwrap();
    let state = s.state(0).unwrap();
    let direct = delta_psi_exact(&state, |x| sho_psi(0, x, &c), 201).unwrap();
    let flipped = delta_psi_exact(&state, |x| -&sho_psi(0, x, &c), 201).unwrap();
    assert!((&direct - &flipped).abs() <= &c.working_epsilon() * &c.from_u32(1000));

    // determinism: identical configs render identical bytes
    let cfg = RunConfig {
        potential: "x^2 + 0.1*x^4".into(),
        mode: BoundaryMode::Periodic,
        n: 6,
        l: vism::run::LChoice::Explicit("3.5".into()),
        precision: 35,
        states: 5,
        ..RunConfig::default()
    };
    let first = render_result(&cmd_solve(&cfg).unwrap(), vism::run::OutputFormat::Json);
    let second = render_result(&cmd_solve(&cfg).unwrap(), vism::run::OutputFormat::Json);
    assert_eq!(first, second);

    // normalization spot check through quadrature
    let (lo, hi) = state.spec.domain();
    let norm = gauss_quadrature(
        |x| eval_psi(&state, x).unwrap().square(),
        &lo,
        &hi,
        &c,
        &c.pow10(-20),
    )
    .unwrap();
    assert!((&norm - &c.one()).abs() < c.pow10(-15));

    // parity labels on the oscillator alternate
    let parities = s.parity.as_ref().unwrap();
    assert_eq!(parities[0], Parity::Even);
    assert_eq!(parities[1], Parity::Odd);

    println!("ACCEPTANCE a12 property suites: PASS");
}
