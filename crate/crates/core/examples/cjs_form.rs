//! The complex-angle form q = rho Cjs(alpha) = rho (cos alpha + sin alpha j),
//! with complex rho and alpha.

use quatforms::complex::catan;
use quatforms::forms::{self, alpha_log_form, angle_dist_mod_pi};
use quatforms::Quaternion;

fn show(q: Quaternion) -> quatforms::Result<()> {
    let f = forms::to_cjs(q)?;
    println!("q = {q}");
    println!("  {f}");
    println!("  rebuilt: {}", forms::from_cjs(&f));
    println!("  |rho| = {:.6}, |q| = {:.6}", f.rho.abs(), q.modulus());
    let p = q.to_complex_pair();
    if let (Ok(closed), Ok(direct)) = (alpha_log_form(q), catan(p.z2 / p.z1)) {
        println!("  log-form alpha differs from atan(z2/z1) by {:.1e} (mod pi)", angle_dist_mod_pi(closed, direct));
    }
    Ok(())
}

fn main() {
    // b = d = 0: rho is real and equals the modulus.
    for q in [Quaternion::new(3.0, 0.0, 4.0, 0.0), Quaternion::new(1.0, 2.0, 3.0, 4.0), Quaternion::new(-1.0, 0.5, 0.0, 2.0)] {
        if let Err(e) = show(q) {
            println!("{q}: {}", e.name());
        }
    }
    // z2 = i z1 gives z1^2 + z2^2 = 0.
    let q = Quaternion::new(1.0, 0.0, 0.0, 1.0);
    println!("{q}: {:?}", forms::to_cjs(q).map_err(|e| e.name()));
}
