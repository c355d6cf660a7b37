use std::io::BufReader;
use vism::basis::BoundaryMode;
use vism::eigen::solve_potential;
use vism::numeric::PrecisionContext;
use vism::optimize::{build_interpolant, read_anchors_csv};
use vism::potential::PotentialSpec;

fn main() {
    let c = PrecisionContext::new(60).unwrap();
    let mut anchors = Vec::new();
    for f in ["/tmp/cal/sho_a.csv", "/tmp/cal/sho_b.csv", "/tmp/cal/sho_c.csv"] {
        anchors.extend(read_anchors_csv(BufReader::new(std::fs::File::open(f).unwrap()), &c).unwrap());
    }
    let sho_interp = build_interpolant(anchors).unwrap();
    let pot = PotentialSpec::parse("x^2 + 10*cos(10*pi*x)", &c).unwrap();
    for n in [30u32, 45, 60] {
        let l = sho_interp.evaluate(n, &c).unwrap();
        let t0 = std::time::Instant::now();
        let s = solve_potential(&pot, BoundaryMode::Periodic, n, &l, &c).unwrap();
        println!(
            "plateau N={n} L={:.4} E0={:.10} ({} ms)",
            l.to_f64(),
            s.eigenvalues[0].to_f64(),
            t0.elapsed().as_millis()
        );
    }
    // post-drop sanity at a hand-placed L near the expected optimum
    for (n, l) in [(150u32, 9.4f64)] {
        let t0 = std::time::Instant::now();
        let s = solve_potential(&pot, BoundaryMode::Periodic, n, &c.from_f64(l), &c).unwrap();
        println!(
            "drop N={n} L={l} E0={:.12} ({} ms)",
            s.eigenvalues[0].to_f64(),
            t0.elapsed().as_millis()
        );
    }
}
