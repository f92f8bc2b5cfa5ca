//! Four ways to compute q^n, and where they agree.

use quatforms::powers::{power, relative_dist, PowMethod};
use quatforms::Quaternion;

fn main() {
    let methods = [PowMethod::Oracle, PowMethod::Cjs, PowMethod::Binomial, PowMethod::Factored];
    let points = [
        ("b = d = 0", Quaternion::new(1.0, 0.0, 1.0, 0.0)),
        ("b = 0", Quaternion::new(2.0, 0.0, 3.0, -1.0)),
        ("general", Quaternion::new(1.0, 1.0, 1.0, 0.0)),
    ];
    for (label, q) in points {
        println!("{label}: q = {q}");
        for n in [2, 4] {
            let oracle = power(q, n, PowMethod::Oracle).expect("oracle always works");
            for m in methods {
                match power(q, n, m) {
                    Ok(r) => println!("  n={n} {:<9} {r}   rel err {:.1e}", m.name(), relative_dist(r, oracle)),
                    Err(e) => println!("  n={n} {:<9} {}", m.name(), e.name()),
                }
            }
        }
    }
}
