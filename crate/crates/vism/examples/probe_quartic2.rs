use vism::basis::BoundaryMode;
use vism::eigen::solve_potential;
use vism::numeric::PrecisionContext;
use vism::potential::PotentialSpec;

const REFS: [&str; 10] = [
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

fn main() {
    let c = PrecisionContext::new(80).unwrap();
    let pot = PotentialSpec::parse("x^2 + 0.1*x^4", &c).unwrap();
    let l = c.from_str("9.02085318252595748812308653386").unwrap();
    let t0 = std::time::Instant::now();
    let s = solve_potential(&pot, BoundaryMode::Periodic, 61, &l, &c).unwrap();
    for (n, r) in REFS.iter().enumerate() {
        let want = c.from_str(r).unwrap();
        let rel = (&(&s.eigenvalues[n] - &want) / &want).abs();
        println!("n={n}: matching digits = {:.1}", -rel.log10().to_f64());
    }
    println!("solve took {} ms", t0.elapsed().as_millis());
    println!("E0 = {}", s.eigenvalues[0].to_decimal_string(60));
}
