//! Functions of a quaternion variable, numerical partial derivatives, the
//! four directional derivative candidates and the generalized
//! Cauchy-Riemann regularity test.
//!
//! For `f(a + bi + cj + dk) = u + vi + sj + tk`, differentiating along each
//! real axis and dividing by the matching unit gives four candidates:
//!
//! ```text
//! D_a = u_a + v_a i + s_a j + t_a k
//! D_b = v_b - u_b i - t_b j + s_b k
//! D_c = s_c + t_c i - u_c j - v_c k
//! D_d = t_d - s_d i + v_d j - u_d k
//! ```
//!
//! `f` is regular at a point when all four coincide. Equating them
//! component by component yields four chains of equalities, one per
//! output component.

use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::expr::Expr;
use crate::format;
use crate::quaternion::Quaternion;

/// Index of an output component (`u, v, s, t`) or an input axis (`a, b, c, d`).
pub const COMPONENT_NAMES: [char; 4] = ['u', 'v', 's', 't'];
pub const AXIS_NAMES: [char; 4] = ['a', 'b', 'c', 'd'];

/// `partials[m][x]` is `d(component m)/d(axis x)`.
pub type Partials = [[f64; 4]; 4];

#[derive(Clone)]
enum Body {
    Identity,
    Constant(Quaternion),
    Conj,
    Square,
    SquarePlusFive,
    Cube,
    /// Real coefficients, lowest degree first.
    Polynomial(Vec<f64>),
    Expr(Arc<Expr>),
    Custom(Arc<dyn Fn(Quaternion) -> Result<Quaternion> + Send + Sync>),
}

/// An evaluable map from quaternions to quaternions.
#[derive(Clone)]
pub struct HyperFunction {
    name: String,
    body: Body,
}

impl fmt::Debug for HyperFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HyperFunction").field("name", &self.name).finish()
    }
}

impl HyperFunction {
    fn new(name: impl Into<String>, body: Body) -> Self {
        HyperFunction { name: name.into(), body }
    }

    pub fn identity() -> Self {
        Self::new("z", Body::Identity)
    }

    pub fn constant(c: Quaternion) -> Self {
        Self::new(format!("const({})", format::quaternion(c)), Body::Constant(c))
    }

    pub fn conj() -> Self {
        Self::new("conj(z)", Body::Conj)
    }

    pub fn square() -> Self {
        Self::new("z^2", Body::Square)
    }

    /// `z^2 + 5`.
    pub fn square_plus_five() -> Self {
        Self::new("z^2+5", Body::SquarePlusFive)
    }

    pub fn cube() -> Self {
        Self::new("z^3", Body::Cube)
    }

    /// `sum_k coeffs[k] z^k` with real coefficients.
    pub fn polynomial(coeffs: Vec<f64>) -> Self {
        Self::new(format!("poly{coeffs:?}"), Body::Polynomial(coeffs))
    }

    pub fn from_expr(source: impl Into<String>, expr: Expr) -> Self {
        Self::new(source, Body::Expr(Arc::new(expr)))
    }

    /// Parses `text` (an expression in `z`) into a function.
    pub fn parse(text: &str) -> Result<Self> {
        Ok(Self::from_expr(text, crate::expr::parse_str(text)?))
    }

    pub fn custom<F>(name: impl Into<String>, f: F) -> Self
    where
        F: Fn(Quaternion) -> Result<Quaternion> + Send + Sync + 'static,
    {
        Self::new(name, Body::Custom(Arc::new(f)))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn eval(&self, q: Quaternion) -> Result<Quaternion> {
        Ok(match &self.body {
            Body::Identity => q,
            Body::Constant(c) => *c,
            Body::Conj => q.conj(),
            Body::Square => q * q,
            Body::SquarePlusFive => q * q + Quaternion::real(5.0),
            Body::Cube => q * q * q,
            Body::Polynomial(coeffs) => {
                // Horner; real coefficients commute with q.
                coeffs
                    .iter()
                    .rev()
                    .fold(Quaternion::ZERO, |acc, &k| acc * q + Quaternion::real(k))
            }
            Body::Expr(e) => e.eval(Some(q))?,
            Body::Custom(f) => f(q)?,
        })
    }

    /// Component functions `(u, v, s, t)` at `q`.
    pub fn components(&self, q: Quaternion) -> Result<[f64; 4]> {
        self.eval(q).map(Quaternion::to_array)
    }

    pub fn has_symbolic_partials(&self) -> bool {
        matches!(
            self.body,
            Body::Identity | Body::Constant(_) | Body::Conj | Body::Square | Body::SquarePlusFive
        )
    }

    /// Exact partial derivatives where they are known in closed form.
    pub fn symbolic_partials(&self, q: Quaternion) -> Option<Partials> {
        let id = [[1.0, 0.0, 0.0, 0.0], [0.0, 1.0, 0.0, 0.0], [0.0, 0.0, 1.0, 0.0], [0.0, 0.0, 0.0, 1.0]];
        match self.body {
            Body::Identity => Some(id),
            Body::Constant(_) => Some([[0.0; 4]; 4]),
            Body::Conj => Some([
                [1.0, 0.0, 0.0, 0.0],
                [0.0, -1.0, 0.0, 0.0],
                [0.0, 0.0, -1.0, 0.0],
                [0.0, 0.0, 0.0, -1.0],
            ]),
            // u = a^2 - b^2 - c^2 - d^2 (+5), v = 2ab, s = 2ac, t = 2ad
            Body::Square | Body::SquarePlusFive => {
                let Quaternion { a, b, c, d } = q;
                Some([
                    [2.0 * a, -2.0 * b, -2.0 * c, -2.0 * d],
                    [2.0 * b, 2.0 * a, 0.0, 0.0],
                    [2.0 * c, 0.0, 2.0 * a, 0.0],
                    [2.0 * d, 0.0, 0.0, 2.0 * a],
                ])
            }
            _ => None,
        }
    }
}

/// Central-difference partials `(g(x+h) - g(x-h)) / 2h` of each component
/// along each axis.
pub fn partials(f: &HyperFunction, q: Quaternion, h: f64) -> Result<Partials> {
    if h.is_nan() || h <= 0.0 {
        return Err(Error::InvalidArgument("step h must be positive".into()));
    }
    let mut out = [[0.0; 4]; 4];
    let base = q.to_array();
    for axis in 0..4 {
        let mut plus = base;
        let mut minus = base;
        plus[axis] += h;
        minus[axis] -= h;
        // The step actually taken, which differs from 2h by rounding.
        let step = plus[axis] - minus[axis];
        let fp = f.components(Quaternion::from_array(plus))?;
        let fm = f.components(Quaternion::from_array(minus))?;
        for m in 0..4 {
            out[m][axis] = (fp[m] - fm[m]) / step;
        }
    }
    Ok(out)
}

/// Sign pattern of each candidate: `SIGNS[x][m] = (component, sign)` gives
/// the partial along axis `x` that lands in output slot `m` of `D_x`.
///
/// Row `x` of this table is read directly off the candidate formulas in the
/// module documentation.
pub const CANDIDATE_PATTERN: [[(usize, f64); 4]; 4] = [
    [(0, 1.0), (1, 1.0), (2, 1.0), (3, 1.0)],   // D_a = u_a + v_a i + s_a j + t_a k
    [(1, 1.0), (0, -1.0), (3, -1.0), (2, 1.0)], // D_b = v_b - u_b i - t_b j + s_b k
    [(2, 1.0), (3, 1.0), (0, -1.0), (1, -1.0)], // D_c = s_c + t_c i - u_c j - v_c k
    [(3, 1.0), (2, -1.0), (1, 1.0), (0, -1.0)], // D_d = t_d - s_d i + v_d j - u_d k
];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivativeCandidates {
    pub d_a: Quaternion,
    pub d_b: Quaternion,
    pub d_c: Quaternion,
    pub d_d: Quaternion,
}

impl DerivativeCandidates {
    pub fn from_partials(p: &Partials) -> Self {
        let build = |axis: usize| {
            let mut out = [0.0; 4];
            for (slot, &(m, sign)) in CANDIDATE_PATTERN[axis].iter().enumerate() {
                out[slot] = sign * p[m][axis];
            }
            Quaternion::from_array(out)
        };
        DerivativeCandidates { d_a: build(0), d_b: build(1), d_c: build(2), d_d: build(3) }
    }

    pub fn as_array(&self) -> [Quaternion; 4] {
        [self.d_a, self.d_b, self.d_c, self.d_d]
    }
}

pub fn derivative_candidates(f: &HyperFunction, q: Quaternion, h: f64) -> Result<DerivativeCandidates> {
    Ok(DerivativeCandidates::from_partials(&partials(f, q, h)?))
}

/// Adjacent differences within each of the four equality chains.
///
/// Chain `m` holds slot `m` of `D_a, D_b, D_c, D_d` in order:
/// 1. `u_a = v_b = s_c = t_d`
/// 2. `v_a = -u_b = t_c = -s_d`
/// 3. `s_a = -t_b = -u_c = v_d`
/// 4. `t_a = s_b = -v_c = -u_d`
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CrResiduals {
    pub chains: [[f64; 3]; 4],
    pub max_residual: f64,
}

impl CrResiduals {
    pub fn from_candidates(c: &DerivativeCandidates) -> Self {
        let members = c.as_array().map(Quaternion::to_array);
        let mut chains = [[0.0; 3]; 4];
        for (m, chain) in chains.iter_mut().enumerate() {
            for (k, r) in chain.iter_mut().enumerate() {
                *r = (members[k][m] - members[k + 1][m]).abs();
            }
        }
        let max_residual = chains.iter().flatten().fold(0.0_f64, |acc, &x| acc.max(x));
        CrResiduals { chains, max_residual }
    }
}

pub fn cr_residuals(f: &HyperFunction, q: Quaternion, h: f64) -> Result<CrResiduals> {
    Ok(CrResiduals::from_candidates(&derivative_candidates(f, q, h)?))
}

/// Full result of a regularity check at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Regularity {
    pub partials: Partials,
    pub candidates: DerivativeCandidates,
    pub residuals: CrResiduals,
    /// `tol * (1 + max |partial|)`.
    pub threshold: f64,
    pub regular: bool,
}

pub fn regularity(f: &HyperFunction, q: Quaternion, h: f64, tol: f64) -> Result<Regularity> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidArgument("tolerance must be positive".into()));
    }
    // f must be defined at q itself, not only at the stencil points.
    f.eval(q)?;
    let p = partials(f, q, h)?;
    let candidates = DerivativeCandidates::from_partials(&p);
    let residuals = CrResiduals::from_candidates(&candidates);
    let scale = p.iter().flatten().fold(0.0_f64, |acc, &x| acc.max(x.abs()));
    let threshold = tol * (1.0 + scale);
    Ok(Regularity {
        partials: p,
        candidates,
        residuals,
        threshold,
        regular: residuals.max_residual <= threshold,
    })
}

pub fn is_regular(f: &HyperFunction, q: Quaternion, h: f64, tol: f64) -> Result<bool> {
    regularity(f, q, h, tol).map(|r| r.regular)
}

/// One axis of a scan grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Axis {
    Fixed(f64),
    /// `start, start + step, ...` up to `end` inclusive (with a small slack
    /// for rounding). Empty when `start > end`.
    Range { start: f64, end: f64, step: f64 },
}

impl Axis {
    pub fn values(&self) -> Vec<f64> {
        match *self {
            Axis::Fixed(v) => vec![v],
            Axis::Range { start, end, step } => {
                if start > end {
                    return Vec::new();
                }
                let count = ((end - start) / step + 1e-9).floor() as usize + 1;
                (0..count).map(|i| start + i as f64 * step).collect()
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    /// Axes in `a, b, c, d` order.
    pub axes: [Axis; 4],
    pub h: f64,
    pub tol: f64,
}

impl GridSpec {
    /// A grid with every axis pinned to `base`.
    pub fn at(base: Quaternion, h: f64, tol: f64) -> Self {
        GridSpec { axes: base.to_array().map(Axis::Fixed), h, tol }
    }

    pub fn with_axis(mut self, index: usize, axis: Axis) -> Self {
        self.axes[index] = axis;
        self
    }

    pub fn points(&self) -> Vec<Quaternion> {
        let [va, vb, vc, vd] = self.axes.map(|a| a.values());
        let mut out = Vec::with_capacity(va.len() * vb.len() * vc.len() * vd.len());
        for &a in &va {
            for &b in &vb {
                for &c in &vc {
                    for &d in &vd {
                        out.push(Quaternion::new(a, b, c, d));
                    }
                }
            }
        }
        out
    }

    fn validate(&self) -> Result<()> {
        for axis in &self.axes {
            match *axis {
                Axis::Fixed(v) if !v.is_finite() => {
                    return Err(Error::InvalidArgument("grid values must be finite".into()))
                }
                Axis::Range { start, end, step } if !(step > 0.0 && start.is_finite() && end.is_finite()) => {
                    return Err(Error::InvalidArgument("grid ranges need finite bounds and step > 0".into()))
                }
                _ => {}
            }
        }
        if !(self.h > 0.0 && self.tol > 0.0) {
            return Err(Error::InvalidArgument("h and tol must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridPoint {
    pub point: Quaternion,
    pub max_residual: f64,
    pub regular: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RegularityMap {
    pub spec: GridSpec,
    pub points: Vec<GridPoint>,
}

impl RegularityMap {
    /// CSV rows `a,b,c,d,max_residual,regular` under a header line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("a,b,c,d,max_residual,regular\n");
        for p in &self.points {
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                format::real(p.point.a),
                format::real(p.point.b),
                format::real(p.point.c),
                format::real(p.point.d),
                format::real(p.max_residual),
                u8::from(p.regular)
            ));
        }
        out
    }
}

/// Regularity at every grid point. Points are evaluated in parallel and
/// returned in grid order.
pub fn grid_scan(f: &HyperFunction, spec: &GridSpec) -> Result<RegularityMap> {
    spec.validate()?;
    let points = spec
        .points()
        .into_par_iter()
        .map(|q| {
            regularity(f, q, spec.h, spec.tol).map(|r| GridPoint {
                point: q,
                max_residual: r.residuals.max_residual,
                regular: r.regular,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RegularityMap { spec: *spec, points })
}

/// Relative spread below which shell samples count as one value.
pub const LIMIT_SPREAD_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Limit {
    Value(Quaternion),
    NoLimit,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LimitProbe {
    /// `(radius, spread)` for each shell, in the order given.
    pub shells: Vec<(f64, f64)>,
    pub limit: Limit,
}

fn random_unit<R: Rng>(rng: &mut R) -> Quaternion {
    loop {
        let q = Quaternion::new(
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
        );
        let m = q.modulus();
        if m > 1e-3 && m <= 1.0 {
            return q.scalar_mul(1.0 / m);
        }
    }
}

/// Samples `f` on shells `|z - q0| = r` along seeded random directions.
///
/// At the smallest radius the samples must agree to within
/// `1e-6 (1 + |mean|)` in modulus distance; the mean is then returned as the
/// limit. Any evaluation failure or non-finite value on a shell gives
/// [`Limit::NoLimit`].
pub fn limit_probe(
    f: &HyperFunction,
    q0: Quaternion,
    radii: &[f64],
    directions: usize,
    seed: u64,
) -> Result<LimitProbe> {
    let Some(&smallest) = radii.last() else {
        return Err(Error::InvalidArgument("at least one radius is required".into()));
    };
    if radii.iter().any(|&r| r.is_nan() || r <= 0.0) || radii.windows(2).any(|w| w[1] >= w[0]) || smallest >= 1e-8 {
        return Err(Error::InvalidArgument(
            "radii must be positive, strictly decreasing, and end below 1e-8".into(),
        ));
    }
    if directions == 0 {
        return Err(Error::InvalidArgument("at least one direction is required".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dirs: Vec<Quaternion> = (0..directions).map(|_| random_unit(&mut rng)).collect();

    let mut shells = Vec::with_capacity(radii.len());
    let mut last: Option<Vec<Quaternion>> = None;
    for &r in radii {
        let values: Option<Vec<Quaternion>> = dirs
            .iter()
            .map(|&u| f.eval(q0 + u.scalar_mul(r)).ok().filter(|w| w.is_finite()))
            .collect();
        let Some(values) = values else {
            shells.push((r, f64::INFINITY));
            return Ok(LimitProbe { shells, limit: Limit::NoLimit });
        };
        shells.push((r, spread(&values)));
        last = Some(values);
    }
    let values = last.expect("radii is nonempty");
    let mean = values
        .iter()
        .fold(Quaternion::ZERO, |acc, &w| acc + w)
        .scalar_mul(1.0 / values.len() as f64);
    let spread = shells.last().map_or(f64::INFINITY, |s| s.1);
    let limit = if spread <= LIMIT_SPREAD_TOL * (1.0 + mean.modulus()) {
        Limit::Value(mean)
    } else {
        Limit::NoLimit
    };
    Ok(LimitProbe { shells, limit })
}

/// Largest pairwise modulus distance.
fn spread(values: &[Quaternion]) -> f64 {
    let mut worst = 0.0_f64;
    for (i, x) in values.iter().enumerate() {
        for y in &values[i + 1..] {
            worst = worst.max(x.dist(*y));
        }
    }
    worst
}
