//! Representation forms of a quaternion and the conversions among them.
//!
//! | form | parameters | inverse exists |
//! |---|---|---|
//! | matrix | `[[a+bi, c+di], [-c+di, a-bi]]` | always |
//! | trigonometric | `rho cis(theta) + rho0 cis(beta) j` | always |
//! | exponential | `rho e^{i theta} + rho0 e^{i beta} j` | always |
//! | Cjs | `rho (cos(alpha) + sin(alpha) j)`, `rho`, `alpha` complex | unless `z1^2 + z2^2 = 0`, `q != 0` |
//! | spherical | Hamilton's four angles | always (angles default to 0 at poles) |
//! | logarithmic | `ln` of each component | only for positive components |
//! | trigonometric matrix | matrix with polar entries | always |

use std::f64::consts::{FRAC_PI_2, PI, TAU};
use std::fmt;
use std::ops::{Add, Mul};

use crate::complex::{cis, Complex};
use crate::error::{Error, Result};
use crate::format;
use crate::quaternion::{ComplexPair, Quaternion};

/// Tolerance for the structural checks in [`from_matrix`].
pub const MATRIX_STRUCTURE_TOL: f64 = 1e-9;

/// Relative threshold below which `z1^2 + z2^2` counts as zero in [`to_cjs`].
pub const CJS_DEGENERACY_TOL: f64 = 1e-12;

/// A 2x2 complex matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Matrix2(pub [[Complex; 2]; 2]);

impl Matrix2 {
    pub const IDENTITY: Matrix2 = Matrix2([[Complex::ONE, Complex::ZERO], [Complex::ZERO, Complex::ONE]]);
    pub const ZERO: Matrix2 = Matrix2([[Complex::ZERO; 2]; 2]);

    pub fn det(&self) -> Complex {
        let m = &self.0;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    pub fn max_abs_diff(&self, other: &Matrix2) -> f64 {
        let mut worst = 0.0_f64;
        for r in 0..2 {
            for c in 0..2 {
                worst = worst.max(self.0[r][c].dist(other.0[r][c]));
            }
        }
        worst
    }
}

impl Mul for Matrix2 {
    type Output = Matrix2;
    fn mul(self, rhs: Matrix2) -> Matrix2 {
        let (x, y) = (&self.0, &rhs.0);
        let mut out = [[Complex::ZERO; 2]; 2];
        for (r, row) in out.iter_mut().enumerate() {
            for (c, cell) in row.iter_mut().enumerate() {
                *cell = x[r][0] * y[0][c] + x[r][1] * y[1][c];
            }
        }
        Matrix2(out)
    }
}

impl Add for Matrix2 {
    type Output = Matrix2;
    fn add(self, rhs: Matrix2) -> Matrix2 {
        let mut out = self.0;
        for (r, row) in out.iter_mut().enumerate() {
            for (c, cell) in row.iter_mut().enumerate() {
                *cell = *cell + rhs.0[r][c];
            }
        }
        Matrix2(out)
    }
}

impl fmt::Display for Matrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.0;
        write!(f, "[[{}, {}], [{}, {}]]", m[0][0], m[0][1], m[1][0], m[1][1])
    }
}

/// Matrix form `[[a+bi, c+di], [-c+di, a-bi]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MatrixForm {
    pub m: Matrix2,
}

impl MatrixForm {
    pub fn det(&self) -> Complex {
        self.m.det()
    }
}

impl Mul for MatrixForm {
    type Output = MatrixForm;
    fn mul(self, rhs: MatrixForm) -> MatrixForm {
        MatrixForm { m: self.m * rhs.m }
    }
}

impl fmt::Display for MatrixForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.m.fmt(f)
    }
}

pub fn to_matrix(q: Quaternion) -> MatrixForm {
    let ComplexPair { z1, z2 } = q.to_complex_pair();
    MatrixForm {
        m: Matrix2([[z1, z2], [-z2.conj(), z1.conj()]]),
    }
}

pub fn from_matrix(f: &MatrixForm) -> Result<Quaternion> {
    let m = &f.m.0;
    if m[1][1].dist(m[0][0].conj()) > MATRIX_STRUCTURE_TOL
        || m[1][0].dist(-m[0][1].conj()) > MATRIX_STRUCTURE_TOL
    {
        return Err(Error::NotQuaternionic);
    }
    Ok(ComplexPair::new(m[0][0], m[0][1]).to_quaternion())
}

/// The images of `1, i, j, k` under the matrix map.
pub fn basis_matrices() -> [MatrixForm; 4] {
    [Quaternion::ONE, Quaternion::I, Quaternion::J, Quaternion::K].map(to_matrix)
}

/// `q = rho cis(theta) + rho0 cis(beta) j`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrigForm {
    pub rho: f64,
    pub theta: f64,
    pub rho0: f64,
    pub beta: f64,
}

/// Same parameters as [`TrigForm`], read as `rho e^{i theta} + rho0 e^{i beta} j`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExpForm {
    pub rho: f64,
    pub theta: f64,
    pub rho0: f64,
    pub beta: f64,
}

fn polar(z: Complex) -> (f64, f64) {
    let r = z.abs();
    if r == 0.0 {
        (0.0, 0.0)
    } else {
        (r, z.arg())
    }
}

pub fn to_trig(q: Quaternion) -> TrigForm {
    let p = q.to_complex_pair();
    let (rho, theta) = polar(p.z1);
    let (rho0, beta) = polar(p.z2);
    TrigForm { rho, theta, rho0, beta }
}

pub fn from_trig(t: &TrigForm) -> Quaternion {
    ComplexPair::new(cis(t.theta) * t.rho, cis(t.beta) * t.rho0).to_quaternion()
}

pub fn to_exp(q: Quaternion) -> ExpForm {
    let TrigForm { rho, theta, rho0, beta } = to_trig(q);
    ExpForm { rho, theta, rho0, beta }
}

pub fn from_exp(e: &ExpForm) -> Quaternion {
    let z1 = Complex::new(0.0, e.theta).exp() * e.rho;
    let z2 = Complex::new(0.0, e.beta).exp() * e.rho0;
    ComplexPair::new(z1, z2).to_quaternion()
}

impl ExpForm {
    pub fn new(rho: f64, theta: f64, rho0: f64, beta: f64) -> Self {
        ExpForm { rho, theta, rho0, beta }
    }

    /// `rho e^{i theta}` as a quaternion.
    pub fn leading(&self) -> Quaternion {
        Quaternion::from_complex(Complex::new(0.0, self.theta).exp() * self.rho)
    }

    /// `rho0 e^{i beta} j` as a quaternion.
    pub fn trailing(&self) -> Quaternion {
        Quaternion::from_complex(Complex::new(0.0, self.beta).exp() * self.rho0) * Quaternion::J
    }
}

impl fmt::Display for TrigForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "rho = {}, theta = {}, rho0 = {}, beta = {}",
            format::real(self.rho),
            format::real(self.theta),
            format::real(self.rho0),
            format::real(self.beta)
        )
    }
}

impl fmt::Display for ExpForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} e^(i {}) + {} e^(i {}) j",
            format::real(self.rho),
            format::real(self.theta),
            format::real(self.rho0),
            format::real(self.beta)
        )
    }
}

/// `q = rho Cjs(alpha) = rho (cos(alpha) + sin(alpha) j)` with complex
/// radius and angle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CjsForm {
    pub rho: Complex,
    pub alpha: Complex,
}

impl CjsForm {
    pub fn new(rho: Complex, alpha: Complex) -> Self {
        CjsForm { rho, alpha }
    }
}

impl fmt::Display for CjsForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rho = {}, alpha = {}", self.rho, self.alpha)
    }
}

/// True when `z1^2 + z2^2` vanishes relative to `|z1|^2 + |z2|^2` for a
/// nonzero quaternion; the Cjs form does not exist there.
pub fn is_cjs_degenerate(q: Quaternion) -> bool {
    if q.is_zero() {
        return false;
    }
    let ComplexPair { z1, z2 } = q.to_complex_pair();
    let s = z1 * z1 + z2 * z2;
    s.abs() <= CJS_DEGENERACY_TOL * (z1.norm_sq() + z2.norm_sq())
}

pub fn to_cjs(q: Quaternion) -> Result<CjsForm> {
    if q.is_zero() {
        return Ok(CjsForm::new(Complex::ZERO, Complex::ZERO));
    }
    if is_cjs_degenerate(q) {
        return Err(Error::CjsDegenerate);
    }
    let ComplexPair { z1, z2 } = q.to_complex_pair();
    let rho = (z1 * z1 + z2 * z2).sqrt();

    if z1.is_zero() {
        // rho = csqrt(z2^2) is +z2 or -z2; sin(+-pi/2) = +-1 picks the sign.
        let alpha = if rho.dist(z2) <= rho.dist(-z2) { FRAC_PI_2 } else { -FRAC_PI_2 };
        return Ok(CjsForm::new(rho, Complex::real(alpha)));
    }

    // The arctangent fixes alpha only modulo pi. Both rho cos(alpha) = z1 and
    // rho sin(alpha) = z2 must hold, which selects one of the two.
    let mut alpha = (z2 / z1).atan().map_err(|_| Error::CjsDegenerate)?;
    let c = rho * alpha.cos();
    if c.dist(z1) > c.dist(-z1) {
        alpha = alpha + Complex::real(PI);
    }
    Ok(CjsForm::new(rho, alpha))
}

pub fn from_cjs(f: &CjsForm) -> Quaternion {
    ComplexPair::new(f.rho * f.alpha.cos(), f.rho * f.alpha.sin()).to_quaternion()
}

/// The closed form `alpha = (i/2) Ln((a+d + (b-c)i) / (a-d + (b+c)i))`.
///
/// Agrees with `catan(z2/z1)` modulo pi; it is the same logarithm after
/// multiplying numerator and denominator by `i z1`.
pub fn alpha_log_form(q: Quaternion) -> Result<Complex> {
    let Quaternion { a, b, c, d } = q;
    let num = Complex::new(a + d, b - c);
    let den = Complex::new(a - d, b + c);
    if den.is_zero() || q.to_complex_pair().z1.is_zero() {
        return Err(Error::DegenerateAlpha);
    }
    let log = (num / den).ln().map_err(|_| Error::DegenerateAlpha)?;
    Ok(Complex::new(0.0, 0.5) * log)
}

/// Distance between two complex angles once their real parts are reduced
/// modulo pi.
pub fn angle_dist_mod_pi(x: Complex, y: Complex) -> f64 {
    let d = x - y;
    let re = d.re - PI * (d.re / PI).round();
    re.hypot(d.im)
}

/// `rho1 cis(beta) (cos(x+iy) + sin(x+iy) j)` by full quaternion products.
pub fn cjs_component_decomposition(rho1: f64, beta: f64, x: f64, y: f64) -> Quaternion {
    let alpha = Complex::new(x, y);
    let radius = Quaternion::from_complex(cis(beta) * rho1);
    let cjs = Quaternion::from_complex(alpha.cos())
        + Quaternion::from_complex(alpha.sin()) * Quaternion::J;
    radius * cjs
}

/// Hamilton's spherical coordinates:
/// `a = rho cos(theta)`, `b = rho sin(theta) cos(vartheta)`,
/// `c = rho sin(theta) sin(vartheta) cos(psi)`,
/// `d = rho sin(theta) sin(vartheta) sin(psi)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphericalForm {
    pub rho: f64,
    pub theta: f64,
    pub vartheta: f64,
    pub psi: f64,
}

impl fmt::Display for SphericalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "rho = {}, theta = {}, vartheta = {}, psi = {}",
            format::real(self.rho),
            format::real(self.theta),
            format::real(self.vartheta),
            format::real(self.psi)
        )
    }
}

pub fn to_spherical(q: Quaternion) -> SphericalForm {
    let rho = q.modulus();
    if rho == 0.0 {
        return SphericalForm { rho, theta: 0.0, vartheta: 0.0, psi: 0.0 };
    }
    // atan2 forms of acos(a/rho) and acos(b/(rho sin theta)), exact at the poles.
    let r3 = (q.b * q.b + q.c * q.c + q.d * q.d).sqrt();
    let theta = r3.atan2(q.a);
    let r2 = q.c.hypot(q.d);
    let vartheta = if r3 == 0.0 { 0.0 } else { r2.atan2(q.b) };
    let psi = if r2 == 0.0 {
        0.0
    } else {
        let p = q.d.atan2(q.c);
        let p = if p < 0.0 { p + TAU } else { p };
        if p >= TAU {
            0.0
        } else {
            p
        }
    };
    SphericalForm { rho, theta, vartheta, psi }
}

pub fn from_spherical(s: &SphericalForm) -> Quaternion {
    let st = s.theta.sin();
    let sv = s.vartheta.sin();
    Quaternion::new(
        s.rho * s.theta.cos(),
        s.rho * st * s.vartheta.cos(),
        s.rho * st * sv * s.psi.cos(),
        s.rho * st * sv * s.psi.sin(),
    )
}

/// Componentwise natural logarithms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogForm {
    pub la: f64,
    pub lb: f64,
    pub lc: f64,
    pub ld: f64,
}

impl fmt::Display for LogForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ln a = {}, ln b = {}, ln c = {}, ln d = {}",
            format::real(self.la),
            format::real(self.lb),
            format::real(self.lc),
            format::real(self.ld)
        )
    }
}

pub fn to_log(q: Quaternion) -> Result<LogForm> {
    if q.to_array().iter().any(|&x| x.is_nan() || x <= 0.0) {
        return Err(Error::LogDomain);
    }
    Ok(LogForm {
        la: q.a.ln(),
        lb: q.b.ln(),
        lc: q.c.ln(),
        ld: q.d.ln(),
    })
}

pub fn from_log(l: &LogForm) -> Quaternion {
    Quaternion::new(l.la.exp(), l.lb.exp(), l.lc.exp(), l.ld.exp())
}

/// `[[rho cis(theta), rho0 cis(beta)], [-rho0 cis(-beta), rho cis(-theta)]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrigMatrixForm {
    pub trig: TrigForm,
    pub m: Matrix2,
}

impl fmt::Display for TrigMatrixForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let TrigForm { rho, theta, rho0, beta } = self.trig;
        let (r, t, r0, b) = (format::real(rho), format::real(theta), format::real(rho0), format::real(beta));
        writeln!(f, "[[{r} cis({t}), {r0} cis({b})], [-{r0} cis(-{b}), {r} cis(-{t})]]")?;
        write!(f, "= {}", self.m)
    }
}

pub fn to_trig_matrix(q: Quaternion) -> TrigMatrixForm {
    let trig = to_trig(q);
    let TrigForm { rho, theta, rho0, beta } = trig;
    let m = Matrix2([
        [cis(theta) * rho, cis(beta) * rho0],
        [-(cis(-beta) * rho0), cis(-theta) * rho],
    ]);
    TrigMatrixForm { trig, m }
}

/// The lower-left entry with `cis(beta)` in place of `cis(-beta)`. Differs
/// from `-c + di` whenever `d != 0`.
pub fn trig_matrix_lower_left_as_printed(q: Quaternion) -> Complex {
    let t = to_trig(q);
    -(cis(t.beta) * t.rho0)
}

/// Splits a trigonometric matrix into its diagonal cosine, diagonal
/// `i`-sine, off-diagonal cosine and off-diagonal sine parts.
pub fn decompose4(t: &TrigMatrixForm) -> [Matrix2; 4] {
    let TrigForm { rho, theta, rho0, beta } = t.trig;
    let z = Complex::ZERO;
    let re = Complex::real;
    let im = |x: f64| Complex::new(0.0, x);
    [
        Matrix2([[re(rho * theta.cos()), z], [z, re(rho * (-theta).cos())]]),
        Matrix2([[im(rho * theta.sin()), z], [z, im(rho * (-theta).sin())]]),
        Matrix2([[z, re(rho0 * beta.cos())], [re(-rho0 * beta.cos()), z]]),
        Matrix2([[z, im(rho0 * beta.sin())], [im(rho0 * beta.sin()), z]]),
    ]
}

/// Target of [`convert`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormKind {
    Vector,
    Pair,
    Matrix,
    Trig,
    Cjs,
    Exp,
    Log,
    Spherical,
    TrigMatrix,
}

impl FormKind {
    pub const ALL: [FormKind; 9] = [
        FormKind::Vector,
        FormKind::Pair,
        FormKind::Matrix,
        FormKind::Trig,
        FormKind::Cjs,
        FormKind::Exp,
        FormKind::Log,
        FormKind::Spherical,
        FormKind::TrigMatrix,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FormKind::Vector => "vector",
            FormKind::Pair => "pair",
            FormKind::Matrix => "matrix",
            FormKind::Trig => "trig",
            FormKind::Cjs => "cjs",
            FormKind::Exp => "exp",
            FormKind::Log => "log",
            FormKind::Spherical => "spherical",
            FormKind::TrigMatrix => "trigmatrix",
        }
    }
}

impl std::str::FromStr for FormKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        FormKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown form {s:?}")))
    }
}

/// Renders `q` in the requested form.
pub fn convert(q: Quaternion, kind: FormKind) -> Result<String> {
    Ok(match kind {
        FormKind::Vector => format!(
            "({}, {}, {}, {})",
            format::real(q.a),
            format::real(q.b),
            format::real(q.c),
            format::real(q.d)
        ),
        FormKind::Pair => {
            let p = q.to_complex_pair();
            format!("z1 = {}, z2 = {}", p.z1, p.z2)
        }
        FormKind::Matrix => to_matrix(q).to_string(),
        FormKind::Trig => to_trig(q).to_string(),
        FormKind::Cjs => to_cjs(q)?.to_string(),
        FormKind::Exp => to_exp(q).to_string(),
        FormKind::Log => to_log(q)?.to_string(),
        FormKind::Spherical => to_spherical(q).to_string(),
        FormKind::TrigMatrix => to_trig_matrix(q).to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{E, FRAC_PI_4, SQRT_2};

    fn q(a: f64, b: f64, c: f64, d: f64) -> Quaternion {
        Quaternion::new(a, b, c, d)
    }

    #[test]
    fn matrix_basis_and_product() {
        let [one, i, j, k] = basis_matrices();
        assert_eq!(one.m, Matrix2::IDENTITY);
        assert_eq!(i.m, Matrix2([[Complex::I, Complex::ZERO], [Complex::ZERO, -Complex::I]]));
        assert_eq!(j.m, Matrix2([[Complex::ZERO, Complex::ONE], [-Complex::ONE, Complex::ZERO]]));
        assert_eq!(k.m, Matrix2([[Complex::ZERO, Complex::I], [Complex::I, Complex::ZERO]]));
        assert_eq!((i * j).m, k.m);
        assert_eq!(to_matrix(q(1.0, 2.0, 3.0, 4.0)).det(), Complex::real(30.0));
    }

    #[test]
    fn matrix_round_trip_and_rejection() {
        let x = q(1.0, -2.0, 0.5, 4.0);
        assert_eq!(from_matrix(&to_matrix(x)).unwrap(), x);
        let mut bad = to_matrix(x);
        bad.m.0[1][1] = Complex::new(7.0, 0.0);
        assert_eq!(from_matrix(&bad), Err(Error::NotQuaternionic));
        let mut bad = to_matrix(x);
        bad.m.0[1][0] = Complex::new(0.5, 4.0);
        assert_eq!(from_matrix(&bad), Err(Error::NotQuaternionic));
    }

    #[test]
    fn trig_form() {
        let t = to_trig(q(1.0, 1.0, 0.0, 0.0));
        assert!((t.rho - SQRT_2).abs() < 1e-15 && (t.theta - FRAC_PI_4).abs() < 1e-15);
        assert_eq!((t.rho0, t.beta), (0.0, 0.0));
        let t = to_trig(q(0.0, 0.0, 0.0, 1.0));
        assert_eq!((t.rho, t.theta, t.rho0), (0.0, 0.0, 1.0));
        assert!((t.beta - FRAC_PI_2).abs() < 1e-15);
        let x = q(1.0, 2.0, 3.0, 4.0);
        assert!(from_trig(&to_trig(x)).approx_eq(x, 1e-12));
    }

    #[test]
    fn exp_form() {
        let e = to_exp(q(1.0, 1.0, 0.0, 0.0));
        assert!((e.rho - SQRT_2).abs() < 1e-15 && (e.theta - FRAC_PI_4).abs() < 1e-15);
        assert_eq!(from_exp(&ExpForm::new(1.0, 0.0, 1.0, 0.0)), q(1.0, 0.0, 1.0, 0.0));
        let x = q(-2.5, 0.25, -1.0, 3.0);
        assert!(from_exp(&to_exp(x)).approx_eq(x, 1e-12));
        let e = to_exp(x);
        assert!((e.leading() + e.trailing()).approx_eq(x, 1e-12));
    }

    #[test]
    fn cjs_examples() {
        let f = to_cjs(q(3.0, 0.0, 4.0, 0.0)).unwrap();
        assert!(f.rho.dist(Complex::real(5.0)) < 1e-15);
        assert!(f.alpha.dist(Complex::real((4.0_f64 / 3.0).atan())) < 1e-15);
        assert!((f.alpha.re - 0.9273).abs() < 1e-4);

        let f = to_cjs(q(1.0, 0.0, 1.0, 0.0)).unwrap();
        assert!(f.rho.dist(Complex::real(SQRT_2)) < 1e-15);
        assert!(f.alpha.dist(Complex::real(FRAC_PI_4)) < 1e-15);

        assert_eq!(to_cjs(q(1.0, 0.0, 0.0, 1.0)), Err(Error::CjsDegenerate));
        assert_eq!(to_cjs(Quaternion::ZERO).unwrap(), CjsForm::new(Complex::ZERO, Complex::ZERO));
    }

    #[test]
    fn cjs_sign_and_pure_j() {
        // rho cos(alpha) = -3 forces the pi shift.
        let x = q(-3.0, 0.0, 4.0, 0.0);
        let f = to_cjs(x).unwrap();
        assert!(from_cjs(&f).approx_eq(x, 1e-14));
        for x in [q(0.0, 0.0, 2.0, 1.0), q(0.0, 0.0, -2.0, 1.0), q(0.0, 0.0, 0.0, -3.0)] {
            let f = to_cjs(x).unwrap();
            assert!(from_cjs(&f).approx_eq(x, 1e-14), "{x:?} -> {f:?}");
        }
    }

    #[test]
    fn from_cjs_examples() {
        let alpha = (4.0_f64 / 3.0).atan();
        let x = from_cjs(&CjsForm::new(Complex::real(5.0), Complex::real(alpha)));
        assert!(x.approx_eq(q(3.0, 0.0, 4.0, 0.0), 1e-10));
        assert!(from_cjs(&CjsForm::new(Complex::ZERO, Complex::new(1.3, -0.2))).approx_eq(Quaternion::ZERO, 0.0));
        let x = from_cjs(&CjsForm::new(Complex::real(SQRT_2), Complex::real(FRAC_PI_4)));
        assert!(x.approx_eq(q(1.0, 0.0, 1.0, 0.0), 1e-15));
    }

    #[test]
    fn cjs_rho_squared() {
        let x = q(0.3, -1.2, 2.0, 0.7);
        let f = to_cjs(x).unwrap();
        let p = x.to_complex_pair();
        let s = p.z1 * p.z1 + p.z2 * p.z2;
        assert!((f.rho * f.rho).dist(s) <= 1e-12 * s.abs());
    }

    #[test]
    fn alpha_closed_form() {
        let a = alpha_log_form(q(1.0, 0.0, 1.0, 0.0)).unwrap();
        assert!(a.dist(Complex::real(FRAC_PI_4)) < 1e-15);
        assert_eq!(alpha_log_form(q(1.0, 0.0, 0.0, 0.0)).unwrap(), Complex::ZERO);
        assert_eq!(alpha_log_form(Quaternion::ZERO), Err(Error::DegenerateAlpha));
        assert_eq!(alpha_log_form(q(0.0, 0.0, 1.0, 2.0)), Err(Error::DegenerateAlpha));
        let x = q(0.4, 1.3, -2.0, 0.9);
        let p = x.to_complex_pair();
        let via_atan = (p.z2 / p.z1).atan().unwrap();
        assert!(angle_dist_mod_pi(alpha_log_form(x).unwrap(), via_atan) < 1e-12);
    }

    #[test]
    fn angle_distance_ignores_multiples_of_pi() {
        let x = Complex::new(0.3, 0.1);
        assert!(angle_dist_mod_pi(x + Complex::real(PI), x) < 1e-15);
        assert!(angle_dist_mod_pi(x - Complex::real(3.0 * PI), x) < 1e-14);
        assert!((angle_dist_mod_pi(Complex::new(0.0, 0.5), Complex::ZERO) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn component_decomposition_examples() {
        assert!(cjs_component_decomposition(1.0, 0.0, 0.0, 0.0).approx_eq(Quaternion::ONE, 1e-15));
        assert!(cjs_component_decomposition(2.0, 0.0, FRAC_PI_2, 0.0).approx_eq(q(0.0, 0.0, 2.0, 0.0), 1e-15));
        let x = cjs_component_decomposition(1.0, 0.0, 0.0, 1.0);
        assert!(x.approx_eq(q(1.0_f64.cosh(), 0.0, 0.0, 1.0_f64.sinh()), 1e-15));
    }

    #[test]
    fn component_decomposition_matches_cjs_form() {
        // rho1 cis(beta) is the complex radius of the Cjs form.
        let (rho1, beta, x, y) = (1.5, 0.7, -0.4, 0.9);
        let direct = from_cjs(&CjsForm::new(cis(beta) * rho1, Complex::new(x, y)));
        assert!(cjs_component_decomposition(rho1, beta, x, y).approx_eq(direct, 1e-14));
    }

    #[test]
    fn spherical_examples() {
        let s = to_spherical(Quaternion::I);
        assert_eq!(s.rho, 1.0);
        assert!((s.theta - FRAC_PI_2).abs() < 1e-15);
        assert_eq!((s.vartheta, s.psi), (0.0, 0.0));
        let s = to_spherical(Quaternion::ONE);
        assert_eq!((s.rho, s.theta, s.vartheta, s.psi), (1.0, 0.0, 0.0, 0.0));
        let x = from_spherical(&SphericalForm { rho: 2.0, theta: FRAC_PI_2, vartheta: FRAC_PI_2, psi: FRAC_PI_2 });
        assert!(x.approx_eq(q(0.0, 0.0, 0.0, 2.0), 1e-15));
        assert_eq!(from_spherical(&to_spherical(Quaternion::ZERO)), Quaternion::ZERO);
        let x = q(0.3, -1.0, -2.0, -0.5);
        let s = to_spherical(x);
        assert!((0.0..TAU).contains(&s.psi));
        assert!(from_spherical(&s).approx_eq(x, 1e-12));
    }

    #[test]
    fn log_form() {
        let l = to_log(q(1.0, E, E * E, E * E * E)).unwrap();
        assert!((l.la - 0.0).abs() < 1e-15);
        assert!((l.lb - 1.0).abs() < 1e-15);
        assert!((l.lc - 2.0).abs() < 1e-15);
        assert!((l.ld - 3.0).abs() < 1e-15);
        assert_eq!(to_log(q(1.0, 1.0, 1.0, 1.0)).unwrap(), LogForm { la: 0.0, lb: 0.0, lc: 0.0, ld: 0.0 });
        assert_eq!(to_log(q(1.0, -1.0, 1.0, 1.0)), Err(Error::LogDomain));
        assert_eq!(to_log(q(0.0, 1.0, 1.0, 1.0)), Err(Error::LogDomain));
        let x = q(0.2, 3.0, 17.5, 1e-3);
        let back = from_log(&to_log(x).unwrap());
        for (u, v) in back.to_array().iter().zip(x.to_array()) {
            assert!((u - v).abs() <= 1e-14 * v);
        }
    }

    #[test]
    fn trig_matrix() {
        let t = to_trig_matrix(Quaternion::ONE);
        assert!(t.m.max_abs_diff(&Matrix2::IDENTITY) < 1e-15);
        let parts = decompose4(&t);
        assert!(parts[0].max_abs_diff(&Matrix2::IDENTITY) < 1e-15);
        for p in &parts[1..] {
            assert!(p.max_abs_diff(&Matrix2::ZERO) < 1e-15);
        }
        let t = to_trig_matrix(Quaternion::J);
        assert!(t.m.max_abs_diff(&to_matrix(Quaternion::J).m) < 1e-15);
        let x = q(1.0, -2.0, 3.0, -4.0);
        let t = to_trig_matrix(x);
        assert!(t.m.max_abs_diff(&to_matrix(x).m) < 1e-12);
        let [p0, p1, p2, p3] = decompose4(&t);
        assert!((p0 + p1 + p2 + p3).max_abs_diff(&t.m) < 1e-12);
        // The cis(beta) variant of the lower-left entry misses -c + di.
        assert!(trig_matrix_lower_left_as_printed(x).dist(Complex::new(-3.0, -4.0)) > 1.0);
    }

    #[test]
    fn convert_renders_every_form() {
        let x = q(1.0, 2.0, 3.0, 4.0);
        assert_eq!(convert(x, FormKind::Vector).unwrap(), "(1, 2, 3, 4)");
        assert_eq!(convert(x, FormKind::Pair).unwrap(), "z1 = 1 + 2i, z2 = 3 + 4i");
        assert_eq!(convert(x, FormKind::Matrix).unwrap(), "[[1 + 2i, 3 + 4i], [-3 + 4i, 1 - 2i]]");
        assert_eq!(convert(q(1.0, 0.0, 0.0, 1.0), FormKind::Cjs), Err(Error::CjsDegenerate));
        assert_eq!(convert(q(1.0, 0.0, -1.0, 1.0), FormKind::Log), Err(Error::LogDomain));
        for kind in FormKind::ALL {
            assert_eq!(kind.name().parse::<FormKind>().unwrap(), kind);
            assert!(convert(x, kind).is_ok());
        }
        assert!("polar".parse::<FormKind>().is_err());
    }
}
