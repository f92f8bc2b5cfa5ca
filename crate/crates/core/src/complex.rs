//! Complex scalars and the principal-branch kernel used by the
//! trigonometric and Cjs forms.
//!
//! Branches are fixed once: `Arg` lies in (-pi, pi], the square root has a
//! nonnegative real part (and a nonnegative imaginary part when the real part
//! is zero), and the arctangent is the logarithmic expression
//! `(i/2) Ln((i + z)/(i - z))` evaluated with that `Ln`.

use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Complex {
    pub re: f64,
    pub im: f64,
}

impl Complex {
    pub const ZERO: Complex = Complex { re: 0.0, im: 0.0 };
    pub const ONE: Complex = Complex { re: 1.0, im: 0.0 };
    pub const I: Complex = Complex { re: 0.0, im: 1.0 };

    pub const fn new(re: f64, im: f64) -> Self {
        Complex { re, im }
    }

    pub const fn real(re: f64) -> Self {
        Complex { re, im: 0.0 }
    }

    pub fn conj(self) -> Self {
        Complex::new(self.re, -self.im)
    }

    pub fn norm_sq(self) -> f64 {
        self.re * self.re + self.im * self.im
    }

    pub fn abs(self) -> f64 {
        self.re.hypot(self.im)
    }

    pub fn is_zero(self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }

    /// Principal argument in (-pi, pi].
    pub fn arg(self) -> f64 {
        let t = self.im.atan2(self.re);
        // atan2(-0.0, x < 0) yields -pi, which is outside the half-open range.
        if t == -PI {
            PI
        } else {
            t
        }
    }

    pub fn scale(self, k: f64) -> Self {
        Complex::new(self.re * k, self.im * k)
    }

    /// Principal square root.
    pub fn sqrt(self) -> Self {
        if self.is_zero() {
            return Complex::ZERO;
        }
        let r = self.abs();
        let t = ((r + self.re.abs()) / 2.0).sqrt();
        if self.re >= 0.0 {
            Complex::new(t, self.im / (2.0 * t))
        } else {
            // im == -0.0 counts as the upper side so that sqrt(-r) = i*sqrt(r).
            let im = if self.im >= 0.0 { t } else { -t };
            Complex::new(self.im.abs() / (2.0 * t), im)
        }
    }

    /// Principal logarithm `ln|z| + i Arg(z)`.
    pub fn ln(self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::LogOfZero);
        }
        Ok(Complex::new(self.abs().ln(), self.arg()))
    }

    /// `e^(x+iy) = e^x cis(y)`.
    pub fn exp(self) -> Self {
        cis(self.im).scale(self.re.exp())
    }

    /// `sin(x+iy) = sin x cosh y + i cos x sinh y`.
    pub fn sin(self) -> Self {
        let (x, y) = (self.re, self.im);
        Complex::new(x.sin() * y.cosh(), x.cos() * y.sinh())
    }

    /// `cos(x+iy) = cos x cosh y - i sin x sinh y`.
    pub fn cos(self) -> Self {
        let (x, y) = (self.re, self.im);
        Complex::new(x.cos() * y.cosh(), -(x.sin() * y.sinh()))
    }

    pub fn tan(self) -> Self {
        self.sin() / self.cos()
    }

    /// Arctangent through the logarithm, `(i/2) Ln((i + z)/(i - z))`.
    pub fn atan(self) -> Result<Self> {
        if self == Complex::I || self == -Complex::I {
            return Err(Error::AtanPole);
        }
        let ratio = (Complex::I + self) / (Complex::I - self);
        let log = ratio.ln().map_err(|_| Error::AtanPole)?;
        Ok(Complex::new(0.0, 0.5) * log)
    }

    /// Nonnegative integer power by repeated squaring.
    pub fn powu(self, n: u32) -> Self {
        let mut base = self;
        let mut acc = Complex::ONE;
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    pub fn dist(self, other: Complex) -> f64 {
        (self - other).abs()
    }
}

/// `cis(t) = cos t + i sin t`.
pub fn cis(t: f64) -> Complex {
    Complex::new(t.cos(), t.sin())
}

pub fn csqrt(z: Complex) -> Complex {
    z.sqrt()
}

pub fn cln(z: Complex) -> Result<Complex> {
    z.ln()
}

pub fn catan(z: Complex) -> Result<Complex> {
    z.atan()
}

pub fn csin(z: Complex) -> Complex {
    z.sin()
}

pub fn ccos(z: Complex) -> Complex {
    z.cos()
}

impl From<f64> for Complex {
    fn from(re: f64) -> Self {
        Complex::real(re)
    }
}

impl Add for Complex {
    type Output = Complex;
    fn add(self, rhs: Complex) -> Complex {
        Complex::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for Complex {
    type Output = Complex;
    fn sub(self, rhs: Complex) -> Complex {
        Complex::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul for Complex {
    type Output = Complex;
    fn mul(self, rhs: Complex) -> Complex {
        Complex::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

impl Mul<f64> for Complex {
    type Output = Complex;
    fn mul(self, rhs: f64) -> Complex {
        self.scale(rhs)
    }
}

impl Div for Complex {
    type Output = Complex;
    // Smith's algorithm; avoids overflow in the denominator's squared modulus.
    fn div(self, rhs: Complex) -> Complex {
        if rhs.re.abs() >= rhs.im.abs() {
            let r = rhs.im / rhs.re;
            let den = rhs.re + rhs.im * r;
            Complex::new((self.re + self.im * r) / den, (self.im - self.re * r) / den)
        } else {
            let r = rhs.re / rhs.im;
            let den = rhs.re * r + rhs.im;
            Complex::new((self.re * r + self.im) / den, (self.im * r - self.re) / den)
        }
    }
}

impl Neg for Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex::new(-self.re, -self.im)
    }
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::format::complex(*self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Complex, b: Complex, tol: f64) -> bool {
        a.dist(b) <= tol
    }

    #[test]
    fn sqrt_principal_branch() {
        assert_eq!(Complex::real(-4.0).sqrt(), Complex::new(0.0, 2.0));
        assert_eq!(Complex::new(-4.0, -0.0).sqrt(), Complex::new(0.0, 2.0));
        assert!(close(Complex::new(0.0, 2.0).sqrt(), Complex::new(1.0, 1.0), 1e-15));
        assert_eq!(Complex::ZERO.sqrt(), Complex::ZERO);
        let r = Complex::new(-3.0, -4.0).sqrt();
        assert!(r.re >= 0.0);
        assert!(close(r * r, Complex::new(-3.0, -4.0), 1e-14));
    }

    #[test]
    fn ln_values() {
        assert_eq!(Complex::ONE.ln().unwrap(), Complex::ZERO);
        assert!(close(Complex::real(-1.0).ln().unwrap(), Complex::new(0.0, PI), 1e-15));
        assert!(close(Complex::new(-1.0, -0.0).ln().unwrap(), Complex::new(0.0, PI), 1e-15));
        assert!(close((-Complex::I).ln().unwrap(), Complex::new(0.0, -PI / 2.0), 1e-15));
        assert_eq!(Complex::ZERO.ln(), Err(Error::LogOfZero));
    }

    #[test]
    fn atan_values() {
        assert_eq!(Complex::ZERO.atan().unwrap(), Complex::ZERO);
        assert!(close(Complex::ONE.atan().unwrap(), Complex::real(PI / 4.0), 1e-15));
        assert_eq!(Complex::I.atan(), Err(Error::AtanPole));
        assert_eq!((-Complex::I).atan(), Err(Error::AtanPole));
        // Near the pole the formula still returns a finite value.
        let near = Complex::new(0.0, 1.0 + 1e-9).atan().unwrap();
        assert!(near.re.is_finite() && near.im.is_finite());
    }

    #[test]
    fn sin_cos_expansions() {
        assert_eq!(Complex::ZERO.sin(), Complex::ZERO);
        assert_eq!(Complex::ZERO.cos(), Complex::ONE);
        let s = Complex::I.sin();
        assert!(close(s, Complex::new(0.0, 1.0_f64.sinh()), 1e-15));
        assert!((s.im - 1.1752).abs() < 1e-4);
        assert!(Complex::real(PI / 2.0).cos().abs() < 1e-15);
        for x in [-2.0, -0.3, 0.0, 1.1, 3.0] {
            assert_eq!(Complex::real(x).sin(), Complex::real(x.sin()));
            assert_eq!(Complex::real(x).cos(), Complex::new(x.cos(), -0.0));
        }
    }

    #[test]
    fn cis_values() {
        assert_eq!(cis(0.0), Complex::ONE);
        assert!(close(cis(PI / 2.0), Complex::I, 1e-15));
        let h = 2.0_f64.sqrt() / 2.0;
        assert!(close(cis(PI / 4.0), Complex::new(h, h), 1e-15));
        assert!((cis(1.234).abs() - 1.0).abs() <= 1e-15);
    }

    #[test]
    fn division_matches_definition() {
        let a = Complex::new(1.0, 2.0);
        let b = Complex::new(3.0, -4.0);
        let q = a / b;
        assert!(close(q * b, a, 1e-15));
        let b2 = Complex::new(0.5, 7.0);
        assert!(close((a / b2) * b2, a, 1e-14));
    }

    #[test]
    fn integer_powers() {
        assert_eq!(Complex::I.powu(4), Complex::ONE);
        assert_eq!(Complex::new(1.0, 1.0).powu(2), Complex::new(0.0, 2.0));
        assert_eq!(Complex::new(2.0, 3.0).powu(0), Complex::ONE);
    }
}
