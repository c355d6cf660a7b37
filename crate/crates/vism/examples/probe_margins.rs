use std::io::BufReader;
use vism::basis::BoundaryMode;
use vism::eigen::solve_potential;
use vism::numeric::PrecisionContext;
use vism::optimize::{build_interpolant, read_anchors_csv};
use vism::potential::PotentialSpec;
use vism::reference::sho_energy;
use vism::solution::delta_e_hat_batch;

fn main() {
    let c50 = PrecisionContext::new(50).unwrap();
    let mut anchors = Vec::new();
    for f in ["/tmp/cal/sho_a.csv", "/tmp/cal/sho_b.csv", "/tmp/cal/sho_c.csv"] {
        let file = std::fs::File::open(f).unwrap();
        anchors.extend(read_anchors_csv(BufReader::new(file), &c50).unwrap());
    }
    println!("anchors: {} rows N=2..32", anchors.len());
    let interp = build_interpolant(anchors.clone()).unwrap();
    let pot = PotentialSpec::parse("x^2", &c50).unwrap();

    // a04 windows
    for (n, target) in [(3u32, 2e-4), (4, 4e-6), (6, 9e-9), (8, 2e-13)] {
        let dh = delta_e_hat_batch(&pot, BoundaryMode::Periodic, n, 1, &interp, &c50).unwrap().pop().unwrap();
        println!("a04 N={} delta_hat={:.3e} target={:.0e} ratio={:.2}", n - 1, dh.to_f64(), target, dh.to_f64() / target);
    }

    // a02
    let c40 = PrecisionContext::new(40).unwrap();
    let anchors40 = {
        let mut a = Vec::new();
        for f in ["/tmp/cal/sho_a.csv", "/tmp/cal/sho_b.csv", "/tmp/cal/sho_c.csv"] {
            a.extend(read_anchors_csv(BufReader::new(std::fs::File::open(f).unwrap()), &c40).unwrap());
        }
        build_interpolant(a).unwrap()
    };
    let l31 = anchors40.evaluate(31, &c40).unwrap();
    let s = solve_potential(&PotentialSpec::parse("x^2", &c40).unwrap(), BoundaryMode::Periodic, 31, &l31, &c40).unwrap();
    let d = (&(&s.eigenvalues[0] - &c40.one()) / &c40.one()).abs();
    println!("a02 delta_E0(31) = {:.3e} (gate 1e-14)", d.to_f64());

    // a07 ratios at digits 60
    let c60 = PrecisionContext::new(60).unwrap();
    let interp60 = {
        let mut a = Vec::new();
        for f in ["/tmp/cal/sho_a.csv", "/tmp/cal/sho_b.csv", "/tmp/cal/sho_c.csv"] {
            a.extend(read_anchors_csv(BufReader::new(std::fs::File::open(f).unwrap()), &c60).unwrap());
        }
        build_interpolant(a).unwrap()
    };
    let pot60 = PotentialSpec::parse("x^2", &c60).unwrap();
    let l31 = interp60.evaluate(31, &c60).unwrap();
    let s = solve_potential(&pot60, BoundaryMode::Periodic, 31, &l31, &c60).unwrap();
    let hats = delta_e_hat_batch(&pot60, BoundaryMode::Periodic, 31, 10, &interp60, &c60).unwrap();
    for state in 0..10usize {
        let exact = sho_energy(state as u32, &c60);
        let delta = (&(&s.eigenvalues[state] - &exact) / &exact).abs();
        println!("a07 n={state}: delta_hat={:.2e} delta={:.2e} ratio={:.2}", hats[state].to_f64(), delta.to_f64(), hats[state].to_f64() / delta.to_f64());
    }

    // a11 correlation
    let mut pts = Vec::new();
    for n in [6u32, 11, 16, 21, 26, 31] {
        let l = interp60.evaluate(n, &c60).unwrap();
        let s = solve_potential(&pot60, BoundaryMode::Periodic, n, &l, &c60).unwrap();
        let delta = (&(&s.eigenvalues[0] - &c60.one()) / &c60.one()).abs();
        pts.push((n as f64, delta.log10().to_f64()));
        println!("a11 N={n} delta=1e{:.2}", delta.log10().to_f64());
    }
    let m = pts.len() as f64;
    let xb = pts.iter().map(|p| p.0).sum::<f64>() / m;
    let yb = pts.iter().map(|p| p.1).sum::<f64>() / m;
    let sxy: f64 = pts.iter().map(|p| (p.0 - xb) * (p.1 - yb)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - xb) * (p.0 - xb)).sum();
    let syy: f64 = pts.iter().map(|p| (p.1 - yb) * (p.1 - yb)).sum();
    println!("a11 |r| = {:.5}", (sxy / (sxx * syy).sqrt()).abs());
}
