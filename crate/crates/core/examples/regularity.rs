//! Derivative candidates and Cauchy-Riemann chains for a few functions.

use quatforms::calculus::{self, Axis, GridSpec, HyperFunction};
use quatforms::Quaternion;

fn main() -> quatforms::Result<()> {
    let functions = [
        HyperFunction::identity(),
        HyperFunction::square_plus_five(),
        HyperFunction::conj(),
        HyperFunction::parse("i*z")?,
        HyperFunction::parse("z*i")?,
    ];
    let at = Quaternion::new(1.0, 0.5, -0.25, 2.0);
    for f in &functions {
        let r = calculus::regularity(f, at, 1e-5, 1e-6)?;
        println!("{} at {at}: {}", f.name(), if r.regular { "regular" } else { "not regular" });
        for (name, d) in ["D_a", "D_b", "D_c", "D_d"].iter().zip(r.candidates.as_array()) {
            println!("  {name} = {d}");
        }
        println!("  max residual {:.3e}", r.residuals.max_residual);
    }

    // z^2 + 5 is regular only on the real axis.
    let line = GridSpec::at(Quaternion::ZERO, 1e-5, 1e-6).with_axis(1, Axis::Range { start: -0.4, end: 0.4, step: 0.2 });
    print!("\n{}", calculus::grid_scan(&HyperFunction::square_plus_five(), &line)?.to_csv());
    Ok(())
}
