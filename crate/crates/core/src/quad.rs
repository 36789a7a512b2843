//! Adaptive quadrature primitives.
//!
//! Three engines cover every integral in the crate:
//!
//! * [`adaptive_gk`] — adaptive Gauss–Kronrod (G7/K15) bisection for smooth
//!   or mildly singular integrands on a finite interval;
//! * [`tanh_sinh`] — double-exponential rule for integrable endpoint
//!   singularities such as (1−s²)^{ν−1/2} with ν < 1/2;
//! * [`semi_infinite`] — geometric panels over [a, ∞) for integrands with
//!   (super-)exponential tails.
//!
//! All engines work for real and complex integrands through [`QuadValue`]
//! and report the last-refinement difference as their error estimate.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Scalar types a quadrature rule can accumulate.
pub trait QuadValue: Copy {
    fn zero() -> Self;
    fn add(self, other: Self) -> Self;
    fn sub(self, other: Self) -> Self;
    fn scale(self, f: f64) -> Self;
    fn norm(self) -> f64;
}

impl QuadValue for f64 {
    fn zero() -> Self {
        0.0
    }
    fn add(self, other: Self) -> Self {
        self + other
    }
    fn sub(self, other: Self) -> Self {
        self - other
    }
    fn scale(self, f: f64) -> Self {
        self * f
    }
    fn norm(self) -> f64 {
        self.abs()
    }
}

impl QuadValue for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn add(self, other: Self) -> Self {
        self + other
    }
    fn sub(self, other: Self) -> Self {
        self - other
    }
    fn scale(self, f: f64) -> Self {
        self * f
    }
    fn norm(self) -> f64 {
        self.norm()
    }
}

/// Quadrature rule families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum QuadRule {
    GaussLegendreAdaptive,
    DoubleExponentialEndpoint,
    TruncatedSemiInfinite,
}

/// One integral evaluation request: rule, budget, tolerances and an optional
/// endpoint-singularity exponent in (−1, 0).
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct QuadratureSpec {
    pub rule: QuadRule,
    pub max_nodes: usize,
    pub rel_tol: f64,
    pub abs_floor: f64,
    pub singularity_hint: Option<f64>,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            rule: QuadRule::GaussLegendreAdaptive,
            max_nodes: 400_000,
            rel_tol: 1e-10,
            abs_floor: 1e-14,
            singularity_hint: None,
        }
    }
}

impl QuadratureSpec {
    pub fn with_rel_tol(mut self, rel_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0) {
            return Err(Error::Domain("rel_tol must be > 0".into()));
        }
        if self.max_nodes < 8 {
            return Err(Error::Domain("max_nodes must be >= 8".into()));
        }
        if let Some(h) = self.singularity_hint {
            if !(-1.0 < h && h < 0.0) {
                return Err(Error::Domain(
                    "singularity_hint must lie in (-1, 0)".into(),
                ));
            }
        }
        Ok(())
    }
}

/// A scalar special-function evaluation: value, absolute error estimate and
/// node count. `scaled` marks values returned on an e^{−z} scale to avoid
/// overflow (only used by the modified Bessel function).
#[derive(Debug, Clone, Copy)]
pub struct SpecEval {
    pub value: f64,
    pub err_est: f64,
    pub nodes_used: usize,
    pub scaled: bool,
}

impl SpecEval {
    pub fn new(value: f64, err_est: f64, nodes_used: usize) -> Self {
        Self {
            value,
            err_est,
            nodes_used,
            scaled: false,
        }
    }
}

// 15-point Kronrod nodes/weights with embedded 7-point Gauss rule
// (the classical QUADPACK qk15 constants).
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

/// One G7/K15 application on [a, b]. Returns (kronrod, |kronrod − gauss|).
fn gk15<V: QuadValue>(f: &mut impl FnMut(f64) -> V, a: f64, b: f64) -> (V, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kron = fc.scale(WGK[7]);
    let mut gauss = fc.scale(WG[3]);
    for j in 0..7 {
        let x = h * XGK[j];
        let f1 = f(c - x);
        let f2 = f(c + x);
        let sum = f1.add(f2);
        kron = kron.add(sum.scale(WGK[j]));
        if j % 2 == 1 {
            gauss = gauss.add(sum.scale(WG[j / 2]));
        }
    }
    let kron = kron.scale(h);
    let gauss = gauss.scale(h);
    (kron, kron.sub(gauss).norm())
}

/// Adaptive Gauss–Kronrod bisection on [a, b].
///
/// Stops when the summed interval error drops below
/// `max(rel_tol * |I|, abs_tol)`; exceeding `max_nodes` returns
/// [`Error::QuadratureNonConvergence`] carrying the best value.
pub fn adaptive_gk<V: QuadValue>(
    f: &mut impl FnMut(f64) -> V,
    a: f64,
    b: f64,
    rel_tol: f64,
    abs_tol: f64,
    max_nodes: usize,
) -> Result<(V, f64, usize)> {
    if a == b {
        return Ok((V::zero(), 0.0, 0));
    }
    struct Seg<V> {
        a: f64,
        b: f64,
        val: V,
        err: f64,
    }
    let (v0, e0) = gk15(f, a, b);
    let mut nodes = 15usize;
    let mut segs = vec![Seg {
        a,
        b,
        val: v0,
        err: e0,
    }];
    loop {
        let mut total = V::zero();
        let mut err = 0.0;
        let mut worst = 0usize;
        let mut worst_err = -1.0;
        for (i, s) in segs.iter().enumerate() {
            total = total.add(s.val);
            err += s.err;
            if s.err > worst_err {
                worst_err = s.err;
                worst = i;
            }
        }
        let tol = (rel_tol * total.norm()).max(abs_tol);
        if err <= tol {
            return Ok((total, err, nodes));
        }
        if nodes + 30 > max_nodes {
            return Err(Error::QuadratureNonConvergence {
                value: total.norm(),
                err_est: err,
                nodes,
            });
        }
        // Split the worst segment; the minimum width guard breaks genuinely
        // non-integrable requests instead of looping forever.
        let Seg { a: sa, b: sb, .. } = segs[worst];
        let mid = 0.5 * (sa + sb);
        if !(mid > sa && mid < sb) {
            let total_n = total.norm();
            return Err(Error::QuadratureNonConvergence {
                value: total_n,
                err_est: err,
                nodes,
            });
        }
        let (v1, e1) = gk15(f, sa, mid);
        let (v2, e2) = gk15(f, mid, sb);
        nodes += 30;
        segs[worst] = Seg {
            a: sa,
            b: mid,
            val: v1,
            err: e1,
        };
        segs.push(Seg {
            a: mid,
            b: sb,
            val: v2,
            err: e2,
        });
    }
}

/// Double-exponential (tanh-sinh) quadrature on [a, b].
///
/// Designed for integrable endpoint singularities: the substitution
/// x = c + h·tanh((π/2)·sinh u) clusters nodes double-exponentially at both
/// endpoints. Nodes never touch a or b; the offsets are computed in
/// cancellation-free form so σ-type weights (b−x)^σ stay accurate.
pub fn tanh_sinh<V: QuadValue>(
    f: &mut impl FnMut(f64) -> V,
    a: f64,
    b: f64,
    rel_tol: f64,
    abs_tol: f64,
    max_level: usize,
) -> Result<(V, f64, usize)> {
    assert!(b > a);
    let half = 0.5 * (b - a);
    let center = 0.5 * (a + b);
    let t_max = 4.3f64;
    let pi_2 = std::f64::consts::FRAC_PI_2;
    let mut nodes = 0usize;

    // weighted f at transform parameter u (node + mirrored node)
    let mut eval_pair = |u: f64, nodes: &mut usize| -> V {
        let s = pi_2 * u.sinh();
        // 1 - tanh(s) = 2 e^{-2s} / (1 + e^{-2s}), computed stably
        let em = (-2.0 * s).exp();
        let delta = half * 2.0 * em / (1.0 + em); // distance from the + endpoint
        let w = half * pi_2 * u.cosh() * 4.0 * em / ((1.0 + em) * (1.0 + em));
        if w == 0.0 || delta == 0.0 {
            return V::zero();
        }
        if u == 0.0 {
            *nodes += 1;
            return f(center).scale(half * pi_2);
        }
        *nodes += 2;
        let x_hi = b - delta;
        let x_lo = a + delta;
        f(x_hi).add(f(x_lo)).scale(w)
    };

    // level 0: h = 1
    let mut h = 1.0f64;
    let mut sum = eval_pair(0.0, &mut nodes);
    let mut k = 1;
    while (k as f64) * h <= t_max {
        sum = sum.add(eval_pair(k as f64 * h, &mut nodes));
        k += 1;
    }
    let mut prev = sum.scale(h);
    let mut err = prev.norm();

    for _level in 1..=max_level {
        h *= 0.5;
        // new points are the odd multiples of the new h
        let mut add = V::zero();
        let mut k = 1;
        while (k as f64) * h <= t_max {
            add = add.add(eval_pair(k as f64 * h, &mut nodes));
            k += 2;
        }
        let cur = prev.scale(0.5).add(add.scale(h));
        err = cur.sub(prev).norm();
        prev = cur;
        if err <= (rel_tol * cur.norm()).max(abs_tol) {
            return Ok((prev, err, nodes));
        }
    }
    Err(Error::QuadratureNonConvergence {
        value: prev.norm(),
        err_est: err,
        nodes,
    })
}

/// Integral over [a, ∞) for integrands that decay at least exponentially:
/// geometric panels, each integrated adaptively, stopping once a panel
/// contributes less than `abs_floor` relative to the running value.
pub fn semi_infinite<V: QuadValue>(
    f: &mut impl FnMut(f64) -> V,
    a: f64,
    first_len: f64,
    rel_tol: f64,
    abs_floor: f64,
    max_nodes: usize,
) -> Result<(V, f64, usize)> {
    let mut lo = a;
    let mut len = first_len.max(1e-8);
    let mut total = V::zero();
    let mut err = 0.0;
    let mut nodes = 0usize;
    let mut idle = 0;
    for _ in 0..200 {
        let hi = lo + len;
        let budget = (max_nodes - nodes).max(31);
        let (v, e, n) = adaptive_gk(f, lo, hi, rel_tol, abs_floor, budget)?;
        total = total.add(v);
        err += e;
        nodes += n;
        let scale = total.norm().max(abs_floor);
        if v.norm() < rel_tol * scale || v.norm() < abs_floor {
            idle += 1;
            if idle >= 2 {
                return Ok((total, err, nodes));
            }
        } else {
            idle = 0;
        }
        if nodes >= max_nodes {
            return Err(Error::QuadratureNonConvergence {
                value: total.norm(),
                err_est: err,
                nodes,
            });
        }
        lo = hi;
        len *= 2.0;
    }
    Ok((total, err, nodes))
}

/// Neumaier-compensated accumulator, used for mode sums so that results are
/// robust to summation order at the 1e-13 level.
#[derive(Debug, Clone, Copy)]
pub struct CompensatedSum {
    sum: Complex64,
    comp: Complex64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self {
            sum: Complex64::new(0.0, 0.0),
            comp: Complex64::new(0.0, 0.0),
        }
    }

    pub fn add(&mut self, v: Complex64) {
        let add_part = |s: f64, c: f64, x: f64| -> (f64, f64) {
            let t = s + x;
            let c2 = if s.abs() >= x.abs() {
                c + ((s - t) + x)
            } else {
                c + ((x - t) + s)
            };
            (t, c2)
        };
        let (sre, cre) = add_part(self.sum.re, self.comp.re, v.re);
        let (sim, cim) = add_part(self.sum.im, self.comp.im, v.im);
        self.sum = Complex64::new(sre, sim);
        self.comp = Complex64::new(cre, cim);
    }

    pub fn value(&self) -> Complex64 {
        self.sum + self.comp
    }
}

impl Default for CompensatedSum {
    fn default() -> Self {
        Self::new()
    }
}

/// Nodes and weights of the n-point Gauss–Legendre rule on [-1, 1],
/// computed by Newton iteration on the Legendre recurrence.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Chebyshev-like initial guess
        let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        loop {
            let (mut p0, mut p1) = (1.0f64, 0.0f64);
            for j in 0..n {
                let p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j as f64 + 1.0) * z * p1 - j as f64 * p2) / (j as f64 + 1.0);
            }
            // p0 = P_n(z), derivative via recurrence
            let dp = n as f64 * (z * p0 - p1) / (z * z - 1.0);
            let dz = p0 / dp;
            z -= dz;
            if dz.abs() < 1e-15 {
                let (mut p0, mut p1) = (1.0f64, 0.0f64);
                for j in 0..n {
                    let p2 = p1;
                    p1 = p0;
                    p0 = ((2.0 * j as f64 + 1.0) * z * p1 - j as f64 * p2) / (j as f64 + 1.0);
                }
                let dp = n as f64 * (z * p0 - p1) / (z * z - 1.0);
                x[i] = -z;
                x[n - 1 - i] = z;
                let wi = 2.0 / ((1.0 - z * z) * dp * dp);
                w[i] = wi;
                w[n - 1 - i] = wi;
                break;
            }
        }
    }
    (x, w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn gk_polynomial_and_oscillatory() {
        let (v, e, _) = adaptive_gk(&mut |x: f64| x * x, 0.0, 1.0, 1e-12, 1e-15, 10_000).unwrap();
        assert_relative_eq!(v, 1.0 / 3.0, epsilon = 1e-13);
        assert!(e < 1e-12);

        let (v, _, _) =
            adaptive_gk(&mut |x: f64| (50.0 * x).cos(), 0.0, 2.0 * std::f64::consts::PI, 1e-12, 1e-14, 100_000)
                .unwrap();
        assert!(v.abs() < 1e-12);
    }

    #[test]
    fn tanh_sinh_endpoint_singularity() {
        // ∫_0^1 x^{-1/2} dx = 2
        let (v, _, _) =
            tanh_sinh(&mut |x: f64| 1.0 / x.sqrt(), 0.0, 1.0, 1e-12, 1e-15, 12).unwrap();
        assert_relative_eq!(v, 2.0, epsilon = 1e-11);

        // ∫_{-1}^{1} (1-s^2)^{-1/4} ds = √π Γ(3/4)/Γ(5/4)
        let (v, _, _) = tanh_sinh(
            &mut |s: f64| (1.0 - s * s).powf(-0.25),
            -1.0,
            1.0,
            1e-12,
            1e-15,
            12,
        )
        .unwrap();
        assert_relative_eq!(v, 2.3962804694711844, epsilon = 1e-11);
    }

    #[test]
    fn semi_infinite_gaussian_tail() {
        // ∫_0^∞ e^{-x^2} dx = √π/2
        let (v, _, _) = semi_infinite(
            &mut |x: f64| (-x * x).exp(),
            0.0,
            1.0,
            1e-12,
            1e-16,
            100_000,
        )
        .unwrap();
        assert_relative_eq!(v, std::f64::consts::PI.sqrt() / 2.0, epsilon = 1e-12);
    }

    #[test]
    fn complex_integrand() {
        use num_complex::Complex64;
        // ∫_0^π e^{ix} dx = 2i
        let (v, _, _) = adaptive_gk(
            &mut |x: f64| Complex64::new(0.0, x).exp(),
            0.0,
            std::f64::consts::PI,
            1e-13,
            1e-15,
            10_000,
        )
        .unwrap();
        assert_relative_eq!(v.re, 0.0, epsilon = 1e-12);
        assert_relative_eq!(v.im, 2.0, epsilon = 1e-12);
    }

    #[test]
    fn gauss_legendre_exactness() {
        let (x, w) = gauss_legendre(8);
        // degree-15 polynomial integrated exactly
        let integral: f64 = x
            .iter()
            .zip(&w)
            .map(|(&xi, &wi)| wi * (xi.powi(14) + 3.0 * xi.powi(7)))
            .sum();
        assert_relative_eq!(integral, 2.0 / 15.0, epsilon = 1e-13);
    }

    #[test]
    fn spec_validation() {
        let mut q = QuadratureSpec::default();
        assert!(q.validate().is_ok());
        q.singularity_hint = Some(-0.5);
        assert!(q.validate().is_ok());
        q.singularity_hint = Some(0.5);
        assert!(q.validate().is_err());
        q.singularity_hint = None;
        q.max_nodes = 4;
        assert!(q.validate().is_err());
    }
}
