//! Hamilton quaternions `a + bi + cj + dk` with `i^2 = j^2 = k^2 = ijk = -1`.
//!
//! Arithmetic is plain `f64`; every operation is a pure function of its
//! inputs. Equality through `==` is componentwise and exact, and
//! [`Quaternion::approx_eq`] is the tolerance-based comparison.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::complex::Complex;
use crate::error::{Error, Result};

/// Default tolerance for [`Quaternion::approx_eq`].
pub const DEFAULT_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Quaternion {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Quaternion = Quaternion::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Quaternion = Quaternion::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Quaternion = Quaternion::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 1.0);

    pub const fn new(a: f64, b: f64, c: f64, d: f64) -> Self {
        Quaternion { a, b, c, d }
    }

    /// Embeds a real scalar as `(x, 0, 0, 0)`.
    pub const fn real(x: f64) -> Self {
        Quaternion::new(x, 0.0, 0.0, 0.0)
    }

    /// Embeds a complex number as `(re, im, 0, 0)`.
    pub const fn from_complex(z: Complex) -> Self {
        Quaternion::new(z.re, z.im, 0.0, 0.0)
    }

    pub fn from_array(v: [f64; 4]) -> Self {
        Quaternion::new(v[0], v[1], v[2], v[3])
    }

    /// The vector form `(a, b, c, d)`.
    pub fn to_array(self) -> [f64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn is_zero(self) -> bool {
        self == Quaternion::ZERO
    }

    pub fn is_pure_imaginary(self) -> bool {
        self.a == 0.0
    }

    pub fn conj(self) -> Self {
        Quaternion::new(self.a, -self.b, -self.c, -self.d)
    }

    /// `q * conj(q) = a^2 + b^2 + c^2 + d^2`.
    pub fn mul_conj(self) -> f64 {
        self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d
    }

    /// Squared norm. Identical to [`mul_conj`](Self::mul_conj); kept under
    /// its own name because division is written in terms of it.
    pub fn norm_sq(self) -> f64 {
        self.mul_conj()
    }

    pub fn modulus(self) -> f64 {
        self.mul_conj().sqrt()
    }

    pub fn scalar_mul(self, alpha: f64) -> Self {
        Quaternion::new(alpha * self.a, alpha * self.b, alpha * self.c, alpha * self.d)
    }

    pub fn inverse(self) -> Result<Self> {
        let n = self.norm_sq();
        if n == 0.0 {
            return Err(Error::ZeroDivisor);
        }
        Ok(self.conj().scalar_mul(1.0 / n))
    }

    /// Right division `self * other^-1`.
    pub fn div_right(self, other: Quaternion) -> Result<Self> {
        Ok(self * other.inverse()?)
    }

    pub fn is_unit(self, tol: f64) -> bool {
        (self.norm_sq() - 1.0).abs() <= tol
    }

    /// Largest componentwise absolute difference.
    pub fn max_abs_diff(self, other: Quaternion) -> f64 {
        let d = self - other;
        d.a.abs().max(d.b.abs()).max(d.c.abs()).max(d.d.abs())
    }

    pub fn approx_eq(self, other: Quaternion, tol: f64) -> bool {
        self.max_abs_diff(other) <= tol
    }

    pub fn dist(self, other: Quaternion) -> f64 {
        (self - other).modulus()
    }

    pub fn to_complex_pair(self) -> ComplexPair {
        ComplexPair {
            z1: Complex::new(self.a, self.b),
            z2: Complex::new(self.c, self.d),
        }
    }

    pub fn from_complex_pair(p: ComplexPair) -> Self {
        p.to_quaternion()
    }

    pub fn to_scalar_vector(self) -> ScalarVector {
        ScalarVector {
            s: self.a,
            v: [self.b, self.c, self.d],
        }
    }

    pub fn from_scalar_vector(p: ScalarVector) -> Self {
        Quaternion::new(p.s, p.v[0], p.v[1], p.v[2])
    }

    pub fn is_finite(self) -> bool {
        self.to_array().iter().all(|x| x.is_finite())
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, o: Quaternion) -> Quaternion {
        Quaternion::new(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, o: Quaternion) -> Quaternion {
        Quaternion::new(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-self.a, -self.b, -self.c, -self.d)
    }
}

/// Hamilton product.
impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, o: Quaternion) -> Quaternion {
        let (a, b, c, d) = (self.a, self.b, self.c, self.d);
        let (a2, b2, c2, d2) = (o.a, o.b, o.c, o.d);
        Quaternion::new(
            a * a2 - b * b2 - c * c2 - d * d2,
            a * b2 + a2 * b + c * d2 - c2 * d,
            a * c2 + a2 * c - b * d2 + b2 * d,
            a * d2 + a2 * d + b * c2 - b2 * c,
        )
    }
}

impl Mul<f64> for Quaternion {
    type Output = Quaternion;
    fn mul(self, alpha: f64) -> Quaternion {
        self.scalar_mul(alpha)
    }
}

impl Mul<Quaternion> for f64 {
    type Output = Quaternion;
    fn mul(self, q: Quaternion) -> Quaternion {
        q.scalar_mul(self)
    }
}

impl From<f64> for Quaternion {
    fn from(x: f64) -> Self {
        Quaternion::real(x)
    }
}

impl From<Complex> for Quaternion {
    fn from(z: Complex) -> Self {
        Quaternion::from_complex(z)
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::format::quaternion(*self))
    }
}

/// `q = z1 + z2 j` with `z1 = a + bi`, `z2 = c + di`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ComplexPair {
    pub z1: Complex,
    pub z2: Complex,
}

impl ComplexPair {
    pub fn new(z1: Complex, z2: Complex) -> Self {
        ComplexPair { z1, z2 }
    }

    pub fn to_quaternion(self) -> Quaternion {
        Quaternion::new(self.z1.re, self.z1.im, self.z2.re, self.z2.im)
    }
}

/// `j z = conj(z) j`, computed through the Hamilton product. Returned as the
/// quaternion `j * z`.
pub fn j_times(z: Complex) -> Quaternion {
    Quaternion::J * Quaternion::from_complex(z)
}

/// Scalar plus 3-vector view `(s, v)`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ScalarVector {
    pub s: f64,
    pub v: [f64; 3],
}

impl ScalarVector {
    pub fn new(s: f64, v: [f64; 3]) -> Self {
        ScalarVector { s, v }
    }

    pub fn conj(self) -> Self {
        ScalarVector::new(self.s, [-self.v[0], -self.v[1], -self.v[2]])
    }
}

pub fn dot(u: [f64; 3], v: [f64; 3]) -> f64 {
    u[0] * v[0] + u[1] * v[1] + u[2] * v[2]
}

pub fn cross(u: [f64; 3], v: [f64; 3]) -> [f64; 3] {
    [
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    ]
}

/// `(s, v)(s', v') = (ss' - v.v', s v' + s' v + v x v')`.
pub fn mul_scalar_vector(p: ScalarVector, q: ScalarVector) -> ScalarVector {
    let x = cross(p.v, q.v);
    ScalarVector::new(
        p.s * q.s - dot(p.v, q.v),
        [
            p.s * q.v[0] + q.s * p.v[0] + x[0],
            p.s * q.v[1] + q.s * p.v[1] + x[1],
            p.s * q.v[2] + q.s * p.v[2] + x[2],
        ],
    )
}

impl Mul for ScalarVector {
    type Output = ScalarVector;
    fn mul(self, rhs: ScalarVector) -> ScalarVector {
        mul_scalar_vector(self, rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q1: Quaternion = Quaternion::new(1.0, 2.0, 3.0, 4.0);
    const Q2: Quaternion = Quaternion::new(5.0, 6.0, 7.0, 8.0);

    #[test]
    fn add_and_sub() {
        assert_eq!(Q1 + Q2, Quaternion::new(6.0, 8.0, 10.0, 12.0));
        assert_eq!(Q1 + Quaternion::ZERO, Q1);
        assert_eq!(Q1 + (-Q1), Quaternion::ZERO);
        assert_eq!(Quaternion::new(6.0, 8.0, 10.0, 12.0) - Q2, Q1);
        assert_eq!(Q1 - Q1, Quaternion::ZERO);
        assert_eq!(Q1 - Quaternion::ZERO, Q1);
        assert_eq!(Q1 - Q2, Q1 + (-Q2));
    }

    #[test]
    fn hamilton_product() {
        assert_eq!(Quaternion::I * Quaternion::J, Quaternion::K);
        assert_eq!(Quaternion::J * Quaternion::I, -Quaternion::K);
        assert_eq!(Q1 * Q2, Quaternion::new(-60.0, 12.0, 30.0, 24.0));
        let ones = Quaternion::new(1.0, 1.0, 1.0, 1.0);
        assert_eq!(ones * ones, Quaternion::new(-2.0, 2.0, 2.0, 2.0));
    }

    #[test]
    fn conjugate() {
        assert_eq!(Q1.conj(), Quaternion::new(1.0, -2.0, -3.0, -4.0));
        assert_eq!(Q1.conj().conj(), Q1);
        assert_eq!(Q1 + Q1.conj(), Quaternion::real(2.0));
        assert_eq!(Q1 - Q1.conj(), Quaternion::new(0.0, 4.0, 6.0, 8.0));
        assert_eq!((Q1 * Q2).conj(), Q2.conj() * Q1.conj());
    }

    #[test]
    fn modulus_and_norm() {
        assert_eq!(Q1.mul_conj(), 30.0);
        assert_eq!(Quaternion::ZERO.mul_conj(), 0.0);
        assert_eq!(Quaternion::I.mul_conj(), 1.0);
        assert_eq!(Q1 * Q1.conj(), Quaternion::real(30.0));
        assert_eq!(Q1.modulus(), 30.0_f64.sqrt());
        assert_eq!(Quaternion::ZERO.modulus(), 0.0);
        assert_eq!(Q1.conj().modulus(), Q1.modulus());
        assert_eq!(Q1.norm_sq(), 30.0);
        assert_eq!(Quaternion::new(0.5, 0.5, 0.5, 0.5).norm_sq(), 1.0);
    }

    #[test]
    fn inverse_and_division() {
        let ones = Quaternion::new(1.0, 1.0, 1.0, 1.0);
        assert_eq!(ones.inverse().unwrap(), Quaternion::new(0.25, -0.25, -0.25, -0.25));
        assert_eq!(Quaternion::ONE.inverse().unwrap(), Quaternion::ONE);
        assert_eq!(Quaternion::ZERO.inverse(), Err(Error::ZeroDivisor));
        assert!((Q1 * Q1.inverse().unwrap()).approx_eq(Quaternion::ONE, 1e-15));
        assert!((Q1.inverse().unwrap() * Q1).approx_eq(Quaternion::ONE, 1e-15));

        assert!(Q1.div_right(Q1).unwrap().approx_eq(Quaternion::ONE, 1e-15));
        let p = Quaternion::new(-60.0, 12.0, 30.0, 24.0);
        assert!(p.div_right(Q2).unwrap().approx_eq(Q1, 1e-13));
        assert_eq!(Q1.div_right(Quaternion::ONE).unwrap(), Q1);
        assert_eq!(Q1.div_right(Quaternion::ZERO), Err(Error::ZeroDivisor));
        // Equivalent conjugate form with the squared modulus.
        let alt = (Q1 * Q2.conj()).scalar_mul(1.0 / Q2.norm_sq());
        assert!(Q1.div_right(Q2).unwrap().approx_eq(alt, 1e-15));
    }

    #[test]
    fn scalar_multiplication() {
        assert_eq!(Q1.scalar_mul(2.0), Quaternion::new(2.0, 4.0, 6.0, 8.0));
        assert_eq!(Q1.scalar_mul(0.0), Quaternion::ZERO);
        assert_eq!(Q1.scalar_mul(-1.0), -Q1);
        assert_eq!(Quaternion::real(2.0) * Q1, Q1.scalar_mul(2.0));
    }

    #[test]
    fn scalar_vector_product() {
        let i = ScalarVector::new(0.0, [1.0, 0.0, 0.0]);
        let j = ScalarVector::new(0.0, [0.0, 1.0, 0.0]);
        assert_eq!(i * j, ScalarVector::new(0.0, [0.0, 0.0, 1.0]));
        let p = ScalarVector::new(-1.5, [2.0, 0.25, 7.0]);
        assert_eq!(ScalarVector::new(1.0, [0.0; 3]) * p, p);
        let prod = Q1.to_scalar_vector() * Q2.to_scalar_vector();
        assert_eq!(Quaternion::from_scalar_vector(prod), Q1 * Q2);
        assert_eq!(p.conj(), ScalarVector::new(-1.5, [-2.0, -0.25, -7.0]));
    }

    #[test]
    fn complex_pair_round_trip() {
        let p = Q1.to_complex_pair();
        assert_eq!(p.z1, Complex::new(1.0, 2.0));
        assert_eq!(p.z2, Complex::new(3.0, 4.0));
        assert_eq!(Quaternion::ZERO.to_complex_pair(), ComplexPair::default());
        assert_eq!(Quaternion::from_complex_pair(p), Q1);
        // z2 j expands to c j + d k.
        let z2j = Quaternion::from_complex(p.z2) * Quaternion::J;
        assert_eq!(z2j, Quaternion::new(0.0, 0.0, 3.0, 4.0));
        // j z = conj(z) j
        let z = Complex::new(2.0, -5.0);
        assert_eq!(j_times(z), Quaternion::from_complex(z.conj()) * Quaternion::J);
    }

    #[test]
    fn unit_test_predicate() {
        assert!(Quaternion::new(0.5, 0.5, 0.5, 0.5).is_unit(1e-12));
        assert!(!Quaternion::new(1.0, 1.0, 0.0, 0.0).is_unit(1e-12));
        for t in [0.0_f64, 0.3, 1.7, -2.9, 100.0] {
            assert!(Quaternion::new(t.cos(), t.sin(), 0.0, 0.0).is_unit(1e-12));
        }
    }
}
