//! Sampling auditor for the algebraic identities around the quaternion forms.
//!
//! Each [`IdentityClaim`] pairs two evaluable sides with a sampling domain
//! and an expectation. Some claims are deliberately stated in a form that
//! is false (an exponent in the wrong place, a missing conjugate, a
//! commutation the algebra does not allow); those are expected to FAIL and
//! the report keeps the sample that shows it.
//!
//! Every sample draws from its own generator, seeded from
//! `(seed, claim id, sample index)`. Samples are evaluated in parallel and
//! reduced in index order, so a report depends only on `(seed, samples)`.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::complex::Complex;
use crate::forms;
use crate::format;
use crate::powers::{pow_binomial, pow_binomial_factored, pow_cjs, pow_oracle};
use crate::quaternion::Quaternion;

/// A claim passes when every scaled residual is at most this.
pub const PASS_THRESHOLD: f64 = 1e-8;

/// Half-width of the component range for FULL_H and its subspaces.
pub const COMPONENT_RANGE: f64 = 3.0;

/// Largest exponent drawn by the power claims.
pub const MAX_POWER: u32 = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    /// Components uniform in [-3, 3].
    FullH,
    /// `(a, 0, c, 0)`: both complex halves real.
    BEqDEq0,
    /// `(a, 0, c, d)`: leading complex half real.
    BEq0,
    /// Components uniform in (0, 3].
    PositiveComponents,
    /// FULL_H samples normalized to modulus 1.
    UnitSphere,
}

impl Domain {
    pub fn tag(self) -> &'static str {
        match self {
            Domain::FullH => "FULL_H",
            Domain::BEqDEq0 => "B_EQ_D_EQ_0",
            Domain::BEq0 => "B_EQ_0",
            Domain::PositiveComponents => "POSITIVE_COMPONENTS",
            Domain::UnitSphere => "UNIT_SPHERE",
        }
    }

    pub fn sample<R: Rng + ?Sized>(self, rng: &mut R) -> Quaternion {
        let mut comp = || rng.random_range(-COMPONENT_RANGE..COMPONENT_RANGE);
        match self {
            Domain::FullH => Quaternion::new(comp(), comp(), comp(), comp()),
            Domain::BEqDEq0 => {
                let (a, c) = (comp(), comp());
                Quaternion::new(a, 0.0, c, 0.0)
            }
            Domain::BEq0 => {
                let (a, c, d) = (comp(), comp(), comp());
                Quaternion::new(a, 0.0, c, d)
            }
            Domain::PositiveComponents => {
                let mut pos = || COMPONENT_RANGE * (1.0 - rng.random::<f64>());
                Quaternion::new(pos(), pos(), pos(), pos())
            }
            Domain::UnitSphere => loop {
                let q = Quaternion::new(comp(), comp(), comp(), comp());
                let m = q.modulus();
                if m > 1e-6 {
                    break q.scalar_mul(1.0 / m);
                }
            },
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expectation {
    Holds,
    /// Expected to fail on the claim's domain.
    FailsAsPrinted,
}

impl Expectation {
    pub fn tag(self) -> &'static str {
        match self {
            Expectation::Holds => "HOLDS",
            Expectation::FailsAsPrinted => "FAILS_AS_PRINTED",
        }
    }
}

/// One evaluated sample: the drawn inputs, the exponent for power claims,
/// and both sides of the identity.
#[derive(Debug, Clone, PartialEq)]
pub struct Evaluation {
    pub inputs: Vec<Quaternion>,
    pub exponent: Option<u32>,
    pub lhs: Quaternion,
    pub rhs: Quaternion,
}

impl Evaluation {
    fn new(inputs: Vec<Quaternion>, lhs: Quaternion, rhs: Quaternion) -> Self {
        Evaluation { inputs, exponent: None, lhs, rhs }
    }

    fn with_exponent(mut self, n: u32) -> Self {
        self.exponent = Some(n);
        self
    }

    /// `|lhs - rhs| / (1 + |lhs| + |rhs|)`; non-finite values count as
    /// infinitely wrong.
    pub fn residual(&self) -> f64 {
        let r = self.lhs.dist(self.rhs) / (1.0 + self.lhs.modulus() + self.rhs.modulus());
        if r.is_nan() {
            f64::INFINITY
        } else {
            r
        }
    }

    /// Componentwise `lhs - rhs`.
    pub fn deviation(&self) -> Quaternion {
        self.lhs - self.rhs
    }
}

type Evaluator = fn(&mut ChaCha8Rng, Domain) -> Option<Evaluation>;

#[derive(Clone)]
pub struct IdentityClaim {
    pub id: &'static str,
    pub statement: &'static str,
    pub domain: Domain,
    pub expected: Expectation,
    evaluate: Evaluator,
}

impl IdentityClaim {
    pub fn new(
        id: &'static str,
        statement: &'static str,
        domain: Domain,
        expected: Expectation,
        evaluate: Evaluator,
    ) -> Self {
        IdentityClaim { id, statement, domain, expected, evaluate }
    }

    /// Evaluates sample `index` under `seed`. `None` is a skip (the sample
    /// fell where one side is undefined).
    pub fn evaluate_sample(&self, seed: u64, index: u64) -> Option<Evaluation> {
        let mut rng = sample_rng(seed, self.id, index);
        (self.evaluate)(&mut rng, self.domain)
    }
}

impl fmt::Debug for IdentityClaim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityClaim")
            .field("id", &self.id)
            .field("domain", &self.domain)
            .field("expected", &self.expected)
            .finish()
    }
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

fn fnv1a(s: &str) -> u64 {
    s.bytes()
        .fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3))
}

/// Generator for one sample of one claim.
pub fn sample_rng(seed: u64, claim_id: &str, index: u64) -> ChaCha8Rng {
    let mixed = splitmix64(splitmix64(seed) ^ fnv1a(claim_id)) ^ splitmix64(index.wrapping_mul(0x2545_f491_4f6c_dd1d));
    ChaCha8Rng::seed_from_u64(splitmix64(mixed))
}

fn real(x: f64) -> Quaternion {
    Quaternion::real(x)
}

fn cplx(z: Complex) -> Quaternion {
    Quaternion::from_complex(z)
}

fn draw2(rng: &mut ChaCha8Rng, d: Domain) -> (Quaternion, Quaternion) {
    (d.sample(rng), d.sample(rng))
}

fn draw3(rng: &mut ChaCha8Rng, d: Domain) -> (Quaternion, Quaternion, Quaternion) {
    (d.sample(rng), d.sample(rng), d.sample(rng))
}

fn exponent(rng: &mut ChaCha8Rng) -> u32 {
    rng.random_range(1..=MAX_POWER)
}

/// Left division `p \ q = p^-1 q`.
fn div_left(q: Quaternion, p: Quaternion) -> Option<Quaternion> {
    p.inverse().ok().map(|inv| inv * q)
}

/// The full catalog, in report order.
pub fn catalog() -> Vec<IdentityClaim> {
    use Domain::*;
    use Expectation::*;
    vec![
        IdentityClaim::new("add.associative", "(q1+q2)+q3 = q1+(q2+q3)", FullH, Holds, |r, d| {
            let (x, y, z) = draw3(r, d);
            Some(Evaluation::new(vec![x, y, z], (x + y) + z, x + (y + z)))
        }),
        IdentityClaim::new("add.commutative", "q1+q2 = q2+q1", FullH, Holds, |r, d| {
            let (x, y) = draw2(r, d);
            Some(Evaluation::new(vec![x, y], x + y, y + x))
        }),
        IdentityClaim::new("mul.associative", "(q1 q2) q3 = q1 (q2 q3)", FullH, Holds, |r, d| {
            let (x, y, z) = draw3(r, d);
            Some(Evaluation::new(vec![x, y, z], (x * y) * z, x * (y * z)))
        }),
        IdentityClaim::new("mul.commutative", "q1 q2 = q2 q1", FullH, FailsAsPrinted, |r, d| {
            let (x, y) = draw2(r, d);
            Some(Evaluation::new(vec![x, y], x * y, y * x))
        }),
        IdentityClaim::new("distributive.left", "q1 (q2+q3) = q1 q2 + q1 q3", FullH, Holds, |r, d| {
            let (x, y, z) = draw3(r, d);
            Some(Evaluation::new(vec![x, y, z], x * (y + z), x * y + x * z))
        }),
        IdentityClaim::new("distributive.right", "(q1+q2) q3 = q1 q3 + q2 q3", FullH, Holds, |r, d| {
            let (x, y, z) = draw3(r, d);
            Some(Evaluation::new(vec![x, y, z], (x + y) * z, x * z + y * z))
        }),
        IdentityClaim::new(
            "distributive.printed",
            "(q1+q2) q3 = (q1+q3)(q2+q3)",
            FullH,
            FailsAsPrinted,
            |r, d| {
                let (x, y, z) = draw3(r, d);
                Some(Evaluation::new(vec![x, y, z], (x + y) * z, (x + z) * (y + z)))
            },
        ),
        IdentityClaim::new("conj.involution", "conj(conj(q)) = q", FullH, Holds, |r, d| {
            let x = d.sample(r);
            Some(Evaluation::new(vec![x], x.conj().conj(), x))
        }),
        IdentityClaim::new("conj.additive", "conj(q1+q2) = conj(q1)+conj(q2)", FullH, Holds, |r, d| {
            let (x, y) = draw2(r, d);
            Some(Evaluation::new(vec![x, y], (x + y).conj(), x.conj() + y.conj()))
        }),
        IdentityClaim::new(
            "conj.multiplicative",
            "conj(q1 q2) = conj(q2) conj(q1)",
            FullH,
            Holds,
            |r, d| {
                let (x, y) = draw2(r, d);
                Some(Evaluation::new(vec![x, y], (x * y).conj(), y.conj() * x.conj()))
            },
        ),
        IdentityClaim::new(
            "conj.divisibility.printed",
            "conj(q1/q2) = conj(q1)/conj(q2)",
            FullH,
            FailsAsPrinted,
            |r, d| {
                let (x, y) = draw2(r, d);
                let lhs = x.div_right(y).ok()?.conj();
                let rhs = x.conj().div_right(y.conj()).ok()?;
                Some(Evaluation::new(vec![x, y], lhs, rhs))
            },
        ),
        IdentityClaim::new(
            "conj.divisibility",
            "conj(q1/q2) = conj(q2) \\ conj(q1)",
            FullH,
            Holds,
            |r, d| {
                let (x, y) = draw2(r, d);
                let lhs = x.div_right(y).ok()?.conj();
                let rhs = div_left(x.conj(), y.conj())?;
                Some(Evaluation::new(vec![x, y], lhs, rhs))
            },
        ),
        IdentityClaim::new("mul_conj.real", "q conj(q) = a^2+b^2+c^2+d^2", FullH, Holds, |r, d| {
            let x = d.sample(r);
            Some(Evaluation::new(vec![x], x * x.conj(), real(x.mul_conj())))
        }),
        IdentityClaim::new("modulus.conj", "|conj(q)| = |q|", FullH, Holds, |r, d| {
            let x = d.sample(r);
            Some(Evaluation::new(vec![x], real(x.conj().modulus()), real(x.modulus())))
        }),
        IdentityClaim::new("modulus.multiplicative", "|q1 q2| = |q1| |q2|", FullH, Holds, |r, d| {
            let (x, y) = draw2(r, d);
            Some(Evaluation::new(vec![x, y], real((x * y).modulus()), real(x.modulus() * y.modulus())))
        }),
        IdentityClaim::new(
            "modulus.squared.multiplicative",
            "|q1 q2|^2 = |q1|^2 |q2|^2",
            FullH,
            Holds,
            |r, d| {
                let (x, y) = draw2(r, d);
                Some(Evaluation::new(vec![x, y], real((x * y).norm_sq()), real(x.norm_sq() * y.norm_sq())))
            },
        ),
        IdentityClaim::new(
            "norm.multiplicative.printed",
            "||q1 q2|| = ||q1|| ||q2||^2",
            FullH,
            FailsAsPrinted,
            |r, d| {
                let (x, y) = draw2(r, d);
                let rhs = x.modulus() * y.modulus().powi(2);
                Some(Evaluation::new(vec![x, y], real((x * y).modulus()), real(rhs)))
            },
        ),
        IdentityClaim::new(
            "norm.squared.printed",
            "||q1 q2||^2 = ||q1||^2 ||q2||",
            FullH,
            FailsAsPrinted,
            |r, d| {
                let (x, y) = draw2(r, d);
                let rhs = x.modulus().powi(2) * y.modulus();
                Some(Evaluation::new(vec![x, y], real((x * y).modulus().powi(2)), real(rhs)))
            },
        ),
        IdentityClaim::new("norm.multiplicative", "||q1 q2|| = ||q1|| ||q2||", FullH, Holds, |r, d| {
            let (x, y) = draw2(r, d);
            Some(Evaluation::new(vec![x, y], real((x * y).modulus()), real(x.modulus() * y.modulus())))
        }),
        IdentityClaim::new("inverse.right", "q q^-1 = 1", FullH, Holds, |r, d| {
            let x = d.sample(r);
            Some(Evaluation::new(vec![x], x * x.inverse().ok()?, Quaternion::ONE))
        }),
        IdentityClaim::new("inverse.left", "q^-1 q = 1", FullH, Holds, |r, d| {
            let x = d.sample(r);
            Some(Evaluation::new(vec![x], x.inverse().ok()? * x, Quaternion::ONE))
        }),
        IdentityClaim::new(
            "division.conjugate.printed",
            "q1/q2 = q1 conj(q2) / ||q2||",
            FullH,
            FailsAsPrinted,
            |r, d| {
                let (x, y) = draw2(r, d);
                let rhs = (x * y.conj()).scalar_mul(1.0 / y.modulus());
                Some(Evaluation::new(vec![x, y], x.div_right(y).ok()?, rhs))
            },
        ),
        IdentityClaim::new(
            "division.conjugate",
            "q1/q2 = q1 conj(q2) / ||q2||^2",
            FullH,
            Holds,
            |r, d| {
                let (x, y) = draw2(r, d);
                let rhs = (x * y.conj()).scalar_mul(1.0 / y.norm_sq());
                Some(Evaluation::new(vec![x, y], x.div_right(y).ok()?, rhs))
            },
        ),
        IdentityClaim::new("unit.closed", "|q1| = |q2| = 1 => ||q1 q2||^2 = 1", UnitSphere, Holds, |r, d| {
            let (x, y) = draw2(r, d);
            Some(Evaluation::new(vec![x, y], real((x * y).norm_sq()), Quaternion::ONE))
        }),
        IdentityClaim::new("unit.inverse", "|q| = 1 => q^-1 = conj(q)", UnitSphere, Holds, |r, d| {
            let x = d.sample(r);
            Some(Evaluation::new(vec![x], x.inverse().ok()?, x.conj()))
        }),
        IdentityClaim::new(
            "matrix.homomorphism",
            "Omega(q1) Omega(q2) = Omega(q1 q2)",
            FullH,
            Holds,
            |r, d| {
                let (x, y) = draw2(r, d);
                let prod = forms::to_matrix(x) * forms::to_matrix(y);
                // A product that left the quaternionic matrices counts as infinitely wrong.
                let lhs = forms::from_matrix(&prod).unwrap_or(Quaternion::real(f64::NAN));
                Some(Evaluation::new(vec![x, y], lhs, x * y))
            },
        ),
        IdentityClaim::new("matrix.determinant", "det Omega(q) = ||q||^2", FullH, Holds, |r, d| {
            let x = d.sample(r);
            Some(Evaluation::new(vec![x], cplx(forms::to_matrix(x).det()), real(x.norm_sq())))
        }),
        IdentityClaim::new("trig.round_trip", "rho cis(theta) + rho0 cis(beta) j = q", FullH, Holds, |r, d| {
            let x = d.sample(r);
            Some(Evaluation::new(vec![x], forms::from_trig(&forms::to_trig(x)), x))
        }),
        IdentityClaim::new(
            "trigmatrix.lower_left.printed",
            "-rho0 cis(beta) = -c + di",
            FullH,
            FailsAsPrinted,
            |r, d| {
                let x = d.sample(r);
                let expected = forms::to_matrix(x).m.0[1][0];
                Some(Evaluation::new(vec![x], cplx(forms::trig_matrix_lower_left_as_printed(x)), cplx(expected)))
            },
        ),
        IdentityClaim::new(
            "trigmatrix.lower_left",
            "-rho0 cis(-beta) = -c + di",
            FullH,
            Holds,
            |r, d| {
                let x = d.sample(r);
                let expected = forms::to_matrix(x).m.0[1][0];
                Some(Evaluation::new(vec![x], cplx(forms::to_trig_matrix(x).m.0[1][0]), cplx(expected)))
            },
        ),
        IdentityClaim::new("cjs.round_trip", "rho Cjs(alpha) = q", FullH, Holds, |r, d| {
            let x = d.sample(r);
            let f = forms::to_cjs(x).ok()?;
            Some(Evaluation::new(vec![x], forms::from_cjs(&f), x))
        }),
        IdentityClaim::new(
            "cjs.alpha_log_form",
            "(i/2) Ln((a+d+(b-c)i)/(a-d+(b+c)i)) = atan(z2/z1) mod pi",
            FullH,
            Holds,
            |r, d| {
                let x = d.sample(r);
                let closed = forms::alpha_log_form(x).ok()?;
                let p = x.to_complex_pair();
                let via_atan = (p.z2 / p.z1).atan().ok()?;
                // Shift by the nearest multiple of pi before comparing.
                let k = ((closed.re - via_atan.re) / std::f64::consts::PI).round();
                let aligned = via_atan + Complex::real(k * std::f64::consts::PI);
                Some(Evaluation::new(vec![x], cplx(closed), cplx(aligned)))
            },
        ),
        IdentityClaim::new("cjs.rho_modulus.real_plane", "|rho| = |q|", BEqDEq0, Holds, |r, d| {
            let x = d.sample(r);
            let f = forms::to_cjs(x).ok()?;
            Some(Evaluation::new(vec![x], real(f.rho.abs()), real(x.modulus())))
        }),
        IdentityClaim::new("cjs.rho_modulus.full", "|rho| = |q|", FullH, FailsAsPrinted, |r, d| {
            let x = d.sample(r);
            let f = forms::to_cjs(x).ok()?;
            Some(Evaluation::new(vec![x], real(f.rho.abs()), real(x.modulus())))
        }),
        IdentityClaim::new("de_moivre.real_plane", "(rho Cjs(alpha))^n = rho^n Cjs(n alpha)", BEqDEq0, Holds, |r, d| {
            let x = d.sample(r);
            let n = exponent(r);
            Some(Evaluation::new(vec![x], pow_cjs(x, n).ok()?, pow_oracle(x, n)).with_exponent(n))
        }),
        IdentityClaim::new(
            "de_moivre.full",
            "(rho Cjs(alpha))^n = rho^n Cjs(n alpha)",
            FullH,
            FailsAsPrinted,
            |r, d| {
                let x = d.sample(r);
                let n = exponent(r);
                Some(Evaluation::new(vec![x], pow_cjs(x, n).ok()?, pow_oracle(x, n)).with_exponent(n))
            },
        ),
        IdentityClaim::new(
            "binomial.real_leading",
            "q^n = sum C(n,h) (rho e^{i theta})^{n-h} (rho0 e^{i beta} j)^h",
            BEq0,
            Holds,
            |r, d| {
                let x = d.sample(r);
                let n = exponent(r);
                Some(Evaluation::new(vec![x], pow_binomial(x, n), pow_oracle(x, n)).with_exponent(n))
            },
        ),
        IdentityClaim::new(
            "binomial.full",
            "q^n = sum C(n,h) (rho e^{i theta})^{n-h} (rho0 e^{i beta} j)^h",
            FullH,
            FailsAsPrinted,
            |r, d| {
                let x = d.sample(r);
                let n = exponent(r);
                Some(Evaluation::new(vec![x], pow_binomial(x, n), pow_oracle(x, n)).with_exponent(n))
            },
        ),
        IdentityClaim::new(
            "binomial_factored.real_leading",
            "q^n = (rho e^{i theta})^n sum C(n,h) ((rho0/rho) e^{i(beta-theta)} j)^h",
            BEq0,
            Holds,
            |r, d| {
                let x = d.sample(r);
                let n = exponent(r);
                let lhs = pow_binomial_factored(x, n).ok()?;
                Some(Evaluation::new(vec![x], lhs, pow_oracle(x, n)).with_exponent(n))
            },
        ),
        IdentityClaim::new(
            "binomial_factored.full",
            "q^n = (rho e^{i theta})^n sum C(n,h) ((rho0/rho) e^{i(beta-theta)} j)^h",
            FullH,
            FailsAsPrinted,
            |r, d| {
                let x = d.sample(r);
                let n = exponent(r);
                let lhs = pow_binomial_factored(x, n).ok()?;
                Some(Evaluation::new(vec![x], lhs, pow_oracle(x, n)).with_exponent(n))
            },
        ),
        IdentityClaim::new("log.round_trip", "exp(ln a) + ... = q", PositiveComponents, Holds, |r, d| {
            let x = d.sample(r);
            let l = forms::to_log(x).ok()?;
            Some(Evaluation::new(vec![x], forms::from_log(&l), x))
        }),
        IdentityClaim::new("spherical.round_trip", "spherical(q) reconstructs q", FullH, Holds, |r, d| {
            let x = d.sample(r);
            Some(Evaluation::new(vec![x], forms::from_spherical(&forms::to_spherical(x)), x))
        }),
    ]
}

pub fn find_claim(id: &str) -> Option<IdentityClaim> {
    catalog().into_iter().find(|c| c.id == id)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn tag(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClaimResult {
    pub id: &'static str,
    pub statement: &'static str,
    pub domain: Domain,
    pub expected: Expectation,
    pub samples: u64,
    pub skips: u64,
    pub max_residual: f64,
    pub mean_residual: f64,
    pub verdict: Verdict,
    /// The evaluated sample with the largest residual.
    pub counterexample: Option<Evaluation>,
}

impl ClaimResult {
    pub fn as_expected(&self) -> bool {
        matches!(
            (self.expected, self.verdict),
            (Expectation::Holds, Verdict::Pass) | (Expectation::FailsAsPrinted, Verdict::Fail)
        )
    }

    /// One tab-separated report line.
    pub fn to_line(&self) -> String {
        let witness = match (&self.counterexample, self.verdict) {
            (Some(e), Verdict::Fail) => format::point(e.inputs[0]),
            _ => "-".to_string(),
        };
        format!(
            "{}\t{}\t{}\t{}\t{:.5e}\t{}\t{}",
            self.id,
            self.domain.tag(),
            self.samples,
            self.skips,
            self.max_residual,
            self.verdict.tag(),
            witness
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AuditReport {
    pub seed: u64,
    pub samples: u64,
    pub results: Vec<ClaimResult>,
}

impl AuditReport {
    pub fn get(&self, id: &str) -> Option<&ClaimResult> {
        self.results.iter().find(|r| r.id == id)
    }

    pub fn all_as_expected(&self) -> bool {
        self.results.iter().all(ClaimResult::as_expected)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            out.push_str(&r.to_line());
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for AuditReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

pub fn audit_claim(claim: &IdentityClaim, samples: u64, seed: u64) -> ClaimResult {
    let evaluated: Vec<Option<(f64, Evaluation)>> = (0..samples)
        .into_par_iter()
        .map(|i| claim.evaluate_sample(seed, i).map(|e| (e.residual(), e)))
        .collect();

    let mut skips = 0;
    let mut count = 0u64;
    let mut sum = 0.0;
    let mut worst: Option<(f64, Evaluation)> = None;
    for item in evaluated {
        match item {
            None => skips += 1,
            Some((r, e)) => {
                count += 1;
                sum += r;
                if worst.as_ref().is_none_or(|(w, _)| r > *w) {
                    worst = Some((r, e));
                }
            }
        }
    }
    let max_residual = worst.as_ref().map_or(0.0, |(r, _)| *r);
    ClaimResult {
        id: claim.id,
        statement: claim.statement,
        domain: claim.domain,
        expected: claim.expected,
        samples,
        skips,
        max_residual,
        mean_residual: if count == 0 { 0.0 } else { sum / count as f64 },
        verdict: if max_residual <= PASS_THRESHOLD { Verdict::Pass } else { Verdict::Fail },
        counterexample: worst.map(|(_, e)| e),
    }
}

/// Audits `claims` with `samples` draws each.
pub fn audit(claims: &[IdentityClaim], samples: u64, seed: u64) -> crate::Result<AuditReport> {
    if samples == 0 {
        return Err(crate::Error::InvalidArgument("samples must be at least 1".into()));
    }
    Ok(AuditReport {
        seed,
        samples,
        results: claims.iter().map(|c| audit_claim(c, samples, seed)).collect(),
    })
}
