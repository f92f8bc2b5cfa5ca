//! Shell-sampling limits.

use quatforms::calculus::{limit_probe, HyperFunction, Limit};
use quatforms::Quaternion;

fn main() -> quatforms::Result<()> {
    let radii = [1e-1, 1e-3, 1e-6, 1e-9];
    let cases = [
        (HyperFunction::square_plus_five(), Quaternion::I),
        (HyperFunction::polynomial(vec![1.0, -2.0, 0.0, 0.5]), Quaternion::new(0.3, 1.0, -1.0, 0.0)),
        (HyperFunction::custom("z/|z|", |z| Ok(z.scalar_mul(1.0 / z.modulus()))), Quaternion::ZERO),
    ];
    for (f, q0) in &cases {
        let probe = limit_probe(f, *q0, &radii, 12, 1)?;
        let spreads: Vec<String> = probe.shells.iter().map(|(r, s)| format!("r={r:.0e}: {s:.1e}")).collect();
        match probe.limit {
            Limit::Value(v) => println!("{} -> {v} as z -> {q0}", f.name()),
            Limit::NoLimit => println!("{} has no limit at {q0}", f.name()),
        }
        println!("  spreads {}", spreads.join(", "));
    }
    Ok(())
}
