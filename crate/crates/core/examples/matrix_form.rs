//! The 2x2 complex matrix picture: products become matrix products and the
//! determinant is the squared norm.

use quatforms::forms::{self, basis_matrices};
use quatforms::Quaternion;

fn main() -> quatforms::Result<()> {
    for (name, m) in ["1", "i", "j", "k"].iter().zip(basis_matrices()) {
        println!("{name:>2} -> {m}");
    }

    let p = Quaternion::new(1.0, 2.0, 3.0, 4.0);
    let q = Quaternion::new(-0.5, 0.0, 2.0, 1.0);
    let product = forms::to_matrix(p) * forms::to_matrix(q);
    println!("Omega(p) Omega(q) = {product}");
    println!("back to H: {}   p q = {}", forms::from_matrix(&product)?, p * q);
    println!("det Omega(p) = {}   |p|^2 = {}", forms::to_matrix(p).det(), p.norm_sq());
    Ok(())
}
