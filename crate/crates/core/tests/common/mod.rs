//! Reference arithmetic written independently of the library, on plain
//! arrays.

#![allow(dead_code)]

use quatforms::Quaternion;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Q = [f64; 4];
pub type C = (f64, f64);

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn uniform(rng: &mut ChaCha8Rng, r: f64) -> Q {
    [0; 4].map(|_| rng.random_range(-r..r))
}

/// Hamilton product as the left-multiplication matrix of `p` applied to `q`.
pub fn mul(p: Q, q: Q) -> Q {
    let [a, b, c, d] = p;
    let l = [[a, -b, -c, -d], [b, a, -d, c], [c, d, a, -b], [d, -c, b, a]];
    let mut out = [0.0; 4];
    for (row, o) in l.iter().zip(out.iter_mut()) {
        *o = row.iter().zip(q).map(|(x, y)| x * y).sum();
    }
    out
}

pub fn add(p: Q, q: Q) -> Q {
    [p[0] + q[0], p[1] + q[1], p[2] + q[2], p[3] + q[3]]
}

pub fn sub(p: Q, q: Q) -> Q {
    [p[0] - q[0], p[1] - q[1], p[2] - q[2], p[3] - q[3]]
}

pub fn norm(p: Q) -> f64 {
    p.iter().map(|x| x * x).sum::<f64>().sqrt()
}

pub fn pow(p: Q, n: u32) -> Q {
    (0..n).fold([1.0, 0.0, 0.0, 0.0], |acc, _| mul(acc, p))
}

pub fn to_q(p: Q) -> Quaternion {
    Quaternion::from_array(p)
}

/// `|x - y| / (1 + |x| + |y|)`.
pub fn scaled(x: Q, y: Q) -> f64 {
    norm(sub(x, y)) / (1.0 + norm(x) + norm(y))
}

/// `|x - y| / max(|y|, 1)`.
pub fn rel(x: Q, y: Q) -> f64 {
    norm(sub(x, y)) / norm(y).max(1.0)
}

pub fn cmul(x: C, y: C) -> C {
    (x.0 * y.0 - x.1 * y.1, x.0 * y.1 + x.1 * y.0)
}

pub fn cadd(x: C, y: C) -> C {
    (x.0 + y.0, x.1 + y.1)
}

pub fn cabs(x: C) -> f64 {
    x.0.hypot(x.1)
}

/// `[[a+bi, c+di], [-c+di, a-bi]]`.
pub fn omega(p: Q) -> [[C; 2]; 2] {
    let [a, b, c, d] = p;
    [[(a, b), (c, d)], [(-c, d), (a, -b)]]
}

pub fn mat_mul(x: [[C; 2]; 2], y: [[C; 2]; 2]) -> [[C; 2]; 2] {
    let mut out = [[(0.0, 0.0); 2]; 2];
    for (r, row) in out.iter_mut().enumerate() {
        for (c, cell) in row.iter_mut().enumerate() {
            *cell = cadd(cmul(x[r][0], y[0][c]), cmul(x[r][1], y[1][c]));
        }
    }
    out
}

pub fn mat_dist(x: [[C; 2]; 2], y: [[C; 2]; 2]) -> f64 {
    let mut worst = 0.0_f64;
    for r in 0..2 {
        for c in 0..2 {
            worst = worst.max(cabs((x[r][c].0 - y[r][c].0, x[r][c].1 - y[r][c].1)));
        }
    }
    worst
}

/// Distance between two complex angles after removing the nearest
/// multiple of pi from the real part of the difference.
pub fn dist_mod_pi(x: C, y: C) -> f64 {
    let re = x.0 - y.0;
    let k = (re / std::f64::consts::PI).round();
    (re - k * std::f64::consts::PI).hypot(x.1 - y.1)
}

/// Exact partials `[component][axis]` of
/// `(a^2 - b^2 - c^2 - d^2 + 5, 2ab, 2ac, 2ad)`.
pub fn example_one_partials(p: Q) -> [[f64; 4]; 4] {
    let [a, b, c, d] = p;
    [
        [2.0 * a, -2.0 * b, -2.0 * c, -2.0 * d],
        [2.0 * b, 2.0 * a, 0.0, 0.0],
        [2.0 * c, 0.0, 2.0 * a, 0.0],
        [2.0 * d, 0.0, 0.0, 2.0 * a],
    ]
}

pub fn example_one(p: Q) -> Q {
    let [a, b, c, d] = p;
    [a * a - b * b - c * c - d * d + 5.0, 2.0 * a * b, 2.0 * a * c, 2.0 * a * d]
}
