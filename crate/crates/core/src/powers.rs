//! Nonnegative integer powers, computed four ways.
//!
//! [`pow_oracle`] is the ground truth (repeated squaring is valid because the
//! Hamilton product is associative). The other three evaluate closed forms
//! literally: the complex-angle De Moivre rule `rho^n Cjs(n alpha)`, the
//! Newton binomial over `rho e^{i theta} + rho0 e^{i beta} j`, and the same
//! binomial with `(rho e^{i theta})^n` factored out on the left. They agree
//! with the oracle only on subspaces where the noncommuting parts vanish:
//! `b = d = 0` for the Cjs rule and `b = 0` for both binomial forms.

use crate::complex::cis;
use crate::error::{Error, Result};
use crate::forms::{from_cjs, to_cjs, to_exp, CjsForm};
use crate::quaternion::Quaternion;

pub fn pow_oracle(q: Quaternion, n: u32) -> Quaternion {
    let mut base = q;
    let mut acc = Quaternion::ONE;
    let mut e = n;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base;
        }
        e >>= 1;
        if e > 0 {
            base = base * base;
        }
    }
    acc
}

/// `q * q * ... * q`, left to right, `n - 1` products.
pub fn pow_sequential(q: Quaternion, n: u32) -> Quaternion {
    (0..n).fold(Quaternion::ONE, |acc, _| acc * q)
}

/// `(rho Cjs(alpha))^n` evaluated as `rho^n Cjs(n alpha)`.
pub fn pow_cjs(q: Quaternion, n: u32) -> Result<Quaternion> {
    let f = to_cjs(q)?;
    Ok(from_cjs(&CjsForm::new(f.rho.powu(n), f.alpha * n as f64)))
}

/// `C(n, h)` as a float; exact for the small `n` used here.
pub fn binomial_coefficient(n: u32, h: u32) -> f64 {
    let h = h.min(n - h);
    (0..h).fold(1.0, |acc, i| acc * f64::from(n - i) / f64::from(i + 1))
}

/// `sum_h C(n,h) (rho e^{i theta})^{n-h} (rho0 e^{i beta} j)^h`, each term
/// multiplied in the written order.
pub fn pow_binomial(q: Quaternion, n: u32) -> Quaternion {
    let e = to_exp(q);
    let (lead, trail) = (e.leading(), e.trailing());
    (0..=n).fold(Quaternion::ZERO, |acc, h| {
        let term = pow_oracle(lead, n - h) * pow_oracle(trail, h);
        acc + term.scalar_mul(binomial_coefficient(n, h))
    })
}

/// `(rho e^{i theta})^n sum_h C(n,h) ((rho0/rho) e^{i(beta - theta)} j)^h`.
pub fn pow_binomial_factored(q: Quaternion, n: u32) -> Result<Quaternion> {
    let e = to_exp(q);
    if e.rho == 0.0 {
        return Err(Error::ZeroLeadingComplex);
    }
    let ratio = Quaternion::from_complex(cis(e.beta - e.theta) * (e.rho0 / e.rho)) * Quaternion::J;
    let sum = (0..=n).fold(Quaternion::ZERO, |acc, h| {
        acc + pow_oracle(ratio, h).scalar_mul(binomial_coefficient(n, h))
    });
    Ok(pow_oracle(e.leading(), n) * sum)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PowMethod {
    Oracle,
    Cjs,
    Binomial,
    Factored,
}

impl PowMethod {
    pub fn name(self) -> &'static str {
        match self {
            PowMethod::Oracle => "oracle",
            PowMethod::Cjs => "cjs",
            PowMethod::Binomial => "binomial",
            PowMethod::Factored => "factored",
        }
    }
}

impl std::str::FromStr for PowMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        [PowMethod::Oracle, PowMethod::Cjs, PowMethod::Binomial, PowMethod::Factored]
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown power method {s:?}")))
    }
}

pub fn power(q: Quaternion, n: u32, method: PowMethod) -> Result<Quaternion> {
    match method {
        PowMethod::Oracle => Ok(pow_oracle(q, n)),
        PowMethod::Cjs => pow_cjs(q, n),
        PowMethod::Binomial => Ok(pow_binomial(q, n)),
        PowMethod::Factored => pow_binomial_factored(q, n),
    }
}

/// `|x - y| / |y|` with `|y|` floored at 1, so values near zero compare
/// absolutely.
pub fn relative_dist(x: Quaternion, y: Quaternion) -> f64 {
    x.dist(y) / y.modulus().max(1.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: f64, b: f64, c: f64, d: f64) -> Quaternion {
        Quaternion::new(a, b, c, d)
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(pow_oracle(q(1.0, 0.0, 1.0, 0.0), 2), q(0.0, 0.0, 2.0, 0.0));
        assert_eq!(pow_oracle(q(1.3, -2.0, 0.1, 4.0), 0), Quaternion::ONE);
        assert_eq!(pow_oracle(Quaternion::I, 4), Quaternion::ONE);
        let x = q(0.5, -1.25, 0.75, 1.0);
        for n in 0..12 {
            assert!(relative_dist(pow_oracle(x, n), pow_sequential(x, n)) <= 1e-12);
        }
    }

    #[test]
    fn cjs_examples() {
        assert!(pow_cjs(q(1.0, 0.0, 1.0, 0.0), 4).unwrap().approx_eq(q(-4.0, 0.0, 0.0, 0.0), 1e-13));
        assert!(pow_cjs(q(3.0, 0.0, 4.0, 0.0), 2).unwrap().approx_eq(q(-7.0, 0.0, 24.0, 0.0), 1e-13));
        // Off the b = d = 0 subspace the rule and the true power differ.
        let x = q(1.0, 1.0, 1.0, 0.0);
        assert!(pow_cjs(x, 2).unwrap().approx_eq(q(-1.0, 2.0, 2.0, 2.0), 1e-13));
        assert_eq!(pow_oracle(x, 2), q(-1.0, 2.0, 2.0, 0.0));
        assert_eq!(pow_cjs(q(1.0, 0.0, 0.0, 1.0), 3), Err(Error::CjsDegenerate));
    }

    #[test]
    fn binomial_examples() {
        assert!(pow_binomial(q(2.0, 0.0, 3.0, 0.0), 2).approx_eq(q(-5.0, 0.0, 12.0, 0.0), 1e-13));
        for n in 0..6 {
            assert!(pow_binomial(Quaternion::ONE, n).approx_eq(Quaternion::ONE, 1e-15));
        }
        let x = q(1.0, 1.0, 1.0, 0.0);
        assert!(pow_binomial(x, 2).approx_eq(q(-1.0, 2.0, 2.0, 2.0), 1e-13));
    }

    #[test]
    fn factored_examples() {
        assert!(pow_binomial_factored(q(2.0, 0.0, 3.0, 0.0), 2)
            .unwrap()
            .approx_eq(q(-5.0, 0.0, 12.0, 0.0), 1e-13));
        assert_eq!(pow_binomial_factored(Quaternion::J, 2), Err(Error::ZeroLeadingComplex));
        assert!(pow_binomial_factored(Quaternion::ONE, 3).unwrap().approx_eq(Quaternion::ONE, 1e-15));
        // Negative real leading part (theta = pi).
        let x = q(-2.0, 0.0, 1.0, -0.5);
        for n in 0..8 {
            let f = pow_binomial_factored(x, n).unwrap();
            assert!(relative_dist(f, pow_oracle(x, n)) <= 1e-12, "n = {n}");
        }
    }

    #[test]
    fn coefficients() {
        assert_eq!(binomial_coefficient(0, 0), 1.0);
        assert_eq!(binomial_coefficient(5, 2), 10.0);
        assert_eq!(binomial_coefficient(10, 7), 120.0);
        assert_eq!(binomial_coefficient(12, 12), 1.0);
    }

    #[test]
    fn method_names() {
        for m in [PowMethod::Oracle, PowMethod::Cjs, PowMethod::Binomial, PowMethod::Factored] {
            assert_eq!(m.name().parse::<PowMethod>().unwrap(), m);
        }
        assert!("newton".parse::<PowMethod>().is_err());
    }
}
