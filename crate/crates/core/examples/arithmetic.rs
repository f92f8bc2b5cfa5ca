//! Hamilton products, conjugates, norms and the two divisions.

use quatforms::Quaternion;

fn main() -> quatforms::Result<()> {
    let (i, j, k) = (Quaternion::I, Quaternion::J, Quaternion::K);
    println!("ij = {}   ji = {}", i * j, j * i);
    println!("ijk = {}", i * j * k);

    let p = Quaternion::new(1.0, 2.0, 3.0, 4.0);
    let q = Quaternion::new(5.0, 6.0, 7.0, 8.0);
    println!("p q = {}", p * q);
    println!("q p = {}", q * p);
    println!("conj(p q) = {}  = conj(q) conj(p) = {}", (p * q).conj(), q.conj() * p.conj());
    println!("|p q| = {}  |p| |q| = {}", (p * q).modulus(), p.modulus() * q.modulus());

    // p / q is p * inv(q); the left quotient inv(q) * p is a different number.
    let right = p.div_right(q)?;
    let left = q.inverse()? * p;
    println!("p / q = {right}");
    println!("q \\ p = {left}");
    println!("(p / q) q = {}", right * q);

    match Quaternion::ZERO.inverse() {
        Err(e) => println!("inverse of 0: {}", e.name()),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
