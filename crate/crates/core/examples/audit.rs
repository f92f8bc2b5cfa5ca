//! Samples every cataloged identity and prints the report. Pass a sample
//! count and seed to override the defaults: `cargo run --example audit -- 2000 7`.

use quatforms::audit::{self, catalog};

fn main() -> quatforms::Result<()> {
    let mut args = std::env::args().skip(1);
    let samples = args.next().and_then(|s| s.parse().ok()).unwrap_or(5_000);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(42);

    let report = audit::audit(&catalog(), samples, seed)?;
    for r in &report.results {
        let mark = if r.as_expected() { " " } else { "!" };
        println!("{mark} {:<32} {:<5} {:>10.3e}  {}", r.id, r.verdict.tag(), r.max_residual, r.statement);
    }
    let cex = report.get("de_moivre.full").and_then(|r| r.counterexample.as_ref());
    if let Some(e) = cex {
        println!("\nde_moivre.full worst sample: q = {} n = {:?}", e.inputs[0], e.exponent);
        println!("  rho^n Cjs(n alpha) = {}", e.lhs);
        println!("  q^n                = {}", e.rhs);
    }
    println!("\nall as expected: {}", report.all_as_expected());
    Ok(())
}
