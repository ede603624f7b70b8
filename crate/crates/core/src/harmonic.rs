//! Dirichlet solver, power-series expansion and finite-difference measurements.

use crate::boundary::BoundaryFunction;
use crate::error::{Error, Result};
use crate::exec::{self, Exec};
use crate::json::fmt17;
use crate::kernel::{kernel_u, AlphaBeta};
use crate::specfun::{gauss_2f1, gauss_2f1_at_one, HypParams};
use num_complex::Complex64;
use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::io::Write;

pub use crate::kernel::DiskPoint;

/// Default finite-difference step.
pub const DEFAULT_H: f64 = 1e-3;
/// Smallest node count accepted by the Poisson integral.
pub const MIN_NODES: usize = 64;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Truncated two-sided coefficients `c_{-K} … c_K` of the series expansion.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesCoefficients {
    /// `c_0, c_1, …, c_K`
    pub pos: Vec<Complex64>,
    /// `c_{-1}, …, c_{-K}`
    pub neg: Vec<Complex64>,
}

impl SeriesCoefficients {
    /// Coefficients from a sparse map; the order is at least 1.
    pub fn from_map(map: &BTreeMap<i64, Complex64>) -> Self {
        let k = map
            .keys()
            .map(|k| k.unsigned_abs() as usize)
            .max()
            .unwrap_or(0)
            .max(1);
        let mut pos = vec![Complex64::default(); k + 1];
        let mut neg = vec![Complex64::default(); k];
        for (&j, &v) in map {
            if j >= 0 {
                pos[j as usize] = v;
            } else {
                neg[(-j) as usize - 1] = v;
            }
        }
        Self { pos, neg }
    }

    pub fn order(&self) -> usize {
        self.neg.len().max(self.pos.len().saturating_sub(1))
    }

    /// `c_k`, zero beyond the truncation.
    pub fn get(&self, k: i64) -> Complex64 {
        let v = if k >= 0 {
            self.pos.get(k as usize)
        } else {
            self.neg.get((-k) as usize - 1)
        };
        v.copied().unwrap_or_default()
    }

    pub fn to_map(&self) -> BTreeMap<i64, Complex64> {
        let o = self.order() as i64;
        (-o..=o).map(|k| (k, self.get(k))).collect()
    }

    /// `{"order": K, "coefficients": {"k": [re, im], ...}}` for `|k| <= K`.
    pub fn to_json(&self) -> String {
        let body: Vec<String> = self
            .to_map()
            .iter()
            .map(|(k, c)| format!("\"{k}\":[{},{}]", fmt17(c.re), fmt17(c.im)))
            .collect();
        format!(
            "{{\"order\":{},\"coefficients\":{{{}}}}}",
            self.order(),
            body.join(",")
        )
    }
}

/// Coefficients `A_k(r)`, `B_k(r)` of the harmonic function `g_r(rz)` that
/// agrees with `u` on `|z| = r`.
#[derive(Debug, Clone, PartialEq)]
pub struct HarmonicSnapshot {
    pub r: f64,
    /// `A_0(r), …, A_K(r)`
    pub a: Vec<Complex64>,
    /// `B_1(r), …, B_K(r)`
    pub b: Vec<Complex64>,
}

impl HarmonicSnapshot {
    /// `Σ A_k ζ^k + Σ B_k ζ̄^k`.
    pub fn eval(&self, zeta: Complex64) -> Complex64 {
        let mut acc = Complex64::default();
        let mut pw = Complex64::new(1.0, 0.0);
        for k in 0..=self.a.len().max(self.b.len() + 1) {
            if let Some(a) = self.a.get(k) {
                acc += a * pw;
            }
            if let Some(b) = k.checked_sub(1).and_then(|k| self.b.get(k)) {
                acc += b * pw.conj();
            }
            pw *= zeta;
        }
        acc
    }

    /// `F_r(ζ) = g_r(rζ)/A_1(r)`.
    pub fn eval_normalized(&self, zeta: Complex64) -> Result<Complex64> {
        let a1 = self.a.get(1).copied().unwrap_or_default();
        if a1 == Complex64::default() {
            return Err(Error::Domain("A_1(r) vanishes".into()));
        }
        Ok(self.eval(zeta) / a1)
    }
}

fn hyp_pos(p: &AlphaBeta, k: usize) -> Result<HypParams> {
    HypParams::new(-p.alpha(), k as f64 - p.beta(), k as f64 + 1.0)
}

fn hyp_neg(p: &AlphaBeta, k: usize) -> Result<HypParams> {
    HypParams::new(-p.beta(), k as f64 - p.alpha(), k as f64 + 1.0)
}

/// `Σ c_k F(-α, k-β; k+1; |z|²) z^k + Σ c_{-k} F(-β, k-α; k+1; |z|²) z̄^k`.
pub fn evaluate_expansion(
    p: &AlphaBeta,
    c: &SeriesCoefficients,
    z: DiskPoint,
) -> Result<Complex64> {
    let z = z.z();
    let x = z.norm_sqr();
    let mut acc = Complex64::default();
    let mut pw = Complex64::new(1.0, 0.0);
    for k in 0..=c.order() {
        let ck = c.get(k as i64);
        if ck != Complex64::default() {
            acc += ck * gauss_2f1(hyp_pos(p, k)?, x)? * pw;
        }
        if k >= 1 {
            let cm = c.get(-(k as i64));
            if cm != Complex64::default() {
                acc += cm * gauss_2f1(hyp_neg(p, k)?, x)? * pw.conj();
            }
        }
        pw *= z;
    }
    Ok(acc)
}

/// `c_k = f̂(k)/F(-α, k-β; k+1; 1)` and `c_{-k} = f̂(-k)/F(-β, k-α; k+1; 1)`.
pub fn coefficients_from_boundary(
    p: &AlphaBeta,
    f: &BoundaryFunction,
) -> Result<SeriesCoefficients> {
    let k = f.order().max(1);
    let mut pos = Vec::with_capacity(k + 1);
    let mut neg = Vec::with_capacity(k);
    for j in 0..=k {
        pos.push(f.coeff(j as i64) / gauss_2f1_at_one(hyp_pos(p, j)?)?);
        if j >= 1 {
            neg.push(f.coeff(-(j as i64)) / gauss_2f1_at_one(hyp_neg(p, j)?)?);
        }
    }
    Ok(SeriesCoefficients { pos, neg })
}

/// `A_k(r)` and `B_k(r)`; at `r = 1` the hypergeometric factors are their limits.
pub fn snapshot(p: &AlphaBeta, c: &SeriesCoefficients, r: f64) -> Result<HarmonicSnapshot> {
    if !(r > 0.0 && r <= 1.0) {
        return Err(Error::Domain(format!("snapshot radius {r} outside (0, 1]")));
    }
    let f = |hp: HypParams| {
        if r == 1.0 {
            gauss_2f1_at_one(hp)
        } else {
            gauss_2f1(hp, r * r)
        }
    };
    let mut a = Vec::new();
    let mut b = Vec::new();
    for k in 0..=c.order() {
        let rk = r.powi(k as i32);
        a.push(c.get(k as i64) * f(hyp_pos(p, k)?)? * rk);
        if k >= 1 {
            b.push(c.get(-(k as i64)) * f(hyp_neg(p, k)?)? * rk);
        }
    }
    Ok(HarmonicSnapshot { r, a, b })
}

pub(crate) fn check_nodes(nodes: usize) -> Result<()> {
    if nodes < MIN_NODES || !nodes.is_power_of_two() {
        return Err(Error::Domain(format!(
            "{nodes} nodes; need a power of two >= {MIN_NODES}"
        )));
    }
    Ok(())
}

/// Poisson integral of fixed boundary samples, reusable across points.
#[derive(Debug, Clone)]
pub struct PoissonSolver {
    params: AlphaBeta,
    samples: Vec<Complex64>,
}

impl PoissonSolver {
    pub fn new(p: &AlphaBeta, f: &BoundaryFunction, nodes: usize) -> Result<Self> {
        check_nodes(nodes)?;
        Ok(Self {
            params: *p,
            samples: f.sample(nodes),
        })
    }

    pub fn nodes(&self) -> usize {
        self.samples.len()
    }

    /// `(1/2π) ∫ P(z e^{-it}) f(e^{it}) dt` by the trapezoid rule.
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        let n = self.samples.len();
        let (r, th) = z.to_polar();
        let mut acc = Complex64::default();
        for (j, f) in self.samples.iter().enumerate() {
            let t = 2.0 * PI * j as f64 / n as f64;
            acc += kernel_u(&self.params, Complex64::from_polar(r, th - t))? * f;
        }
        Ok(self.params.c_norm() * acc / n as f64)
    }
}

pub fn poisson_integral(
    p: &AlphaBeta,
    f: &BoundaryFunction,
    z: DiskPoint,
    nodes: usize,
) -> Result<Complex64> {
    PoissonSolver::new(p, f, nodes)?.eval(z.z())
}

/// Discrete Poisson moments `m_k(z) = (1/N) Σ_j P(z e^{-it_j}) e^{ik t_j}`
/// for `|k| <= order`, indexed by `k + order`.
///
/// For a trigonometric polynomial of order at most `order`, `Σ f̂(k) m_k(z)`
/// equals the trapezoid Poisson integral on the same nodes.
pub fn poisson_moments(
    p: &AlphaBeta,
    z: Complex64,
    nodes: usize,
    order: usize,
) -> Result<Vec<Complex64>> {
    check_nodes(nodes)?;
    let (r, th) = z.to_polar();
    let mut m = vec![Complex64::default(); 2 * order + 1];
    for j in 0..nodes {
        let t = 2.0 * PI * j as f64 / nodes as f64;
        let w = kernel_u(p, Complex64::from_polar(r, th - t))?;
        let e = Complex64::from_polar(1.0, t);
        let mut up = w;
        let mut down = w;
        m[order] += w;
        for k in 1..=order {
            up *= e;
            down *= e.conj();
            m[order + k] += up;
            m[order - k] += down;
        }
    }
    let scale = p.c_norm() / nodes as f64;
    Ok(m.into_iter().map(|v| v * scale).collect())
}

fn stencil_check(z: Complex64, reach: f64) -> Result<()> {
    if !(z.norm() + reach < 1.0) {
        return Err(Error::Stencil(format!("z = {z}, reach {reach}")));
    }
    Ok(())
}

/// Central-difference `(u_z, u_z̄)` with spacing `h`.
pub fn wirtinger_derivatives<F>(u: F, z: DiskPoint, h: f64) -> Result<(Complex64, Complex64)>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    let z = z.z();
    stencil_check(z, h)?;
    let ux = (u(z + h)? - u(z - h)?) / (2.0 * h);
    let uy = (u(z + I * h)? - u(z - I * h)?) / (2.0 * h);
    Ok(((ux - I * uy) * 0.5, (ux + I * uy) * 0.5))
}

/// Wirtinger derivatives with one Richardson step: `(4 D(h/2) - D(h))/3`.
pub fn wirtinger_richardson<F>(u: F, z: DiskPoint, h: f64) -> Result<(Complex64, Complex64)>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    let (a1, b1) = wirtinger_derivatives(&u, z, h)?;
    let (a2, b2) = wirtinger_derivatives(&u, z, 0.5 * h)?;
    Ok(((4.0 * a2 - a1) / 3.0, (4.0 * b2 - b1) / 3.0))
}

/// `|u_z| + |u_z̄|`.
pub fn jacobian_norm<F>(u: F, z: DiskPoint, h: f64) -> Result<f64>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    let (a, b) = wirtinger_derivatives(u, z, h)?;
    Ok(a.norm() + b.norm())
}

/// Central-difference `(u_r, u_θ)`.
pub fn radial_angular_derivatives<F>(u: F, z: DiskPoint, h: f64) -> Result<(Complex64, Complex64)>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    let (r, th) = (z.r(), z.theta());
    if r < h {
        return Err(Error::Stencil(format!("r = {r} below step {h}")));
    }
    stencil_check(z.z(), h)?;
    let ur =
        (u(Complex64::from_polar(r + h, th))? - u(Complex64::from_polar(r - h, th))?) / (2.0 * h);
    let ut =
        (u(Complex64::from_polar(r, th + h))? - u(Complex64::from_polar(r, th - h))?) / (2.0 * h);
    Ok((ur, ut))
}

/// `(u_r, u_θ)` with one Richardson step.
pub fn radial_angular_richardson<F>(u: F, z: DiskPoint, h: f64) -> Result<(Complex64, Complex64)>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    let (r1, t1) = radial_angular_derivatives(&u, z, h)?;
    let (r2, t2) = radial_angular_derivatives(&u, z, 0.5 * h)?;
    Ok(((4.0 * r2 - r1) / 3.0, (4.0 * t2 - t1) / 3.0))
}

/// Five-point approximation of
/// `(1-|z|²)[(1-|z|²) u_{zz̄} + α z u_z + β z̄ u_z̄ - αβ u]`.
pub fn operator_residual<F>(p: &AlphaBeta, u: F, z: DiskPoint, h: f64) -> Result<Complex64>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    let z = z.z();
    if !(h > 0.0) {
        return Err(Error::Stencil(format!("step {h} must be positive")));
    }
    stencil_check(z, 2.0 * h)?;
    let c = u(z)?;
    let (e, w, n, s) = (u(z + h)?, u(z - h)?, u(z + I * h)?, u(z - I * h)?);
    let lap = (e + w + n + s - 4.0 * c) / (h * h);
    let ux = (e - w) / (2.0 * h);
    let uy = (n - s) / (2.0 * h);
    let uz = (ux - I * uy) * 0.5;
    let uzb = (ux + I * uy) * 0.5;
    let wgt = 1.0 - z.norm_sqr();
    let (a, b) = (p.alpha(), p.beta());
    Ok(wgt * (wgt * lap * 0.25 + a * z * uz + b * z.conj() * uzb - a * b * c))
}

/// `M_p(r, u) = ((1/2π) ∫ |u(re^{iθ})|^p dθ)^{1/p}`; `p = ∞` gives the grid maximum.
pub fn integral_means<F>(u: F, r: f64, p: f64, nodes: usize) -> Result<f64>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    let mut acc = 0.0f64;
    for j in 0..nodes {
        let v = u(Complex64::from_polar(r, 2.0 * PI * j as f64 / nodes as f64))?.norm();
        if p.is_infinite() {
            acc = acc.max(v);
        } else {
            acc += v.powf(p);
        }
    }
    Ok(if p.is_infinite() {
        acc
    } else {
        (acc / nodes as f64).powf(1.0 / p)
    })
}

/// Polar grid `r_i = (i+1)/(nr+1)`, `θ_j = 2πj/nt`, radius-major.
pub fn polar_grid(nr: usize, nt: usize) -> Vec<Complex64> {
    let mut pts = Vec::with_capacity(nr * nt);
    for i in 0..nr {
        let r = (i + 1) as f64 / (nr + 1) as f64;
        for j in 0..nt {
            pts.push(Complex64::from_polar(r, 2.0 * PI * j as f64 / nt as f64));
        }
    }
    pts
}

/// Evaluates `u` at every point, in input order.
pub fn evaluate_grid<F>(exec: Exec, points: &[Complex64], u: F) -> Result<Vec<Complex64>>
where
    F: Fn(Complex64) -> Result<Complex64> + Sync + Send,
{
    exec::try_map(exec, points, |&z| u(z))
}

/// CSV with columns `x,y,re,im`.
pub fn write_grid_csv<W: Write>(
    mut w: W,
    points: &[Complex64],
    values: &[Complex64],
) -> Result<()> {
    writeln!(w, "x,y,re,im")?;
    for (z, v) in points.iter().zip(values) {
        writeln!(
            w,
            "{},{},{},{}",
            fmt17(z.re),
            fmt17(z.im),
            fmt17(v.re),
            fmt17(v.im)
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::make_params;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn pt(re: f64, im: f64) -> DiskPoint {
        DiskPoint::new(c(re, im)).unwrap()
    }

    fn single(k: i64) -> BoundaryFunction {
        BoundaryFunction::from_fourier(BTreeMap::from([(k, c(1.0, 0.0))]))
    }

    #[test]
    fn classical_poisson() {
        let p = make_params(0.0, 0.0).unwrap();
        for z in [pt(0.0, 0.0), pt(0.5, -0.3), pt(-0.8, 0.1)] {
            let one = poisson_integral(&p, &single(0), z, 1024).unwrap();
            assert!((one - c(1.0, 0.0)).norm() < 1e-12);
            let e = poisson_integral(&p, &single(1), z, 1024).unwrap();
            assert!((e - z.z()).norm() < 1e-12);
        }
        assert!(poisson_integral(&p, &single(0), pt(0.1, 0.0), 100).is_err());
        assert!(poisson_integral(&p, &single(0), pt(0.1, 0.0), 32).is_err());
    }

    #[test]
    fn expansion_examples() {
        let p = make_params(0.0, 0.0).unwrap();
        let c1 = SeriesCoefficients::from_map(&BTreeMap::from([(1, c(1.0, 0.0))]));
        let z = pt(0.3, 0.4);
        assert!((evaluate_expansion(&p, &c1, z).unwrap() - z.z()).norm() < 1e-15);
        let c0 = SeriesCoefficients::from_map(&BTreeMap::from([(0, c(1.0, 0.0))]));
        let q = make_params(0.7, -0.2).unwrap();
        assert_eq!(
            evaluate_expansion(&q, &c0, pt(0.0, 0.0)).unwrap(),
            c(1.0, 0.0)
        );
        let cm = SeriesCoefficients::from_map(&BTreeMap::from([(-1, c(1.0, 0.0))]));
        let q = make_params(0.0, 1.0).unwrap();
        assert!(
            (evaluate_expansion(&q, &cm, pt(0.5, 0.0)).unwrap() - c(0.4375, 0.0)).norm() < 1e-15
        );
    }

    #[test]
    fn coefficients() {
        let p = make_params(0.0, 0.0).unwrap();
        let f =
            BoundaryFunction::from_fourier(BTreeMap::from([(2, c(0.5, 1.0)), (-1, c(0.0, 2.0))]));
        let s = coefficients_from_boundary(&p, &f).unwrap();
        assert_eq!(s.get(2), c(0.5, 1.0));
        assert_eq!(s.get(-1), c(0.0, 2.0));
        let q = make_params(0.4, 0.9).unwrap();
        let s = coefficients_from_boundary(&q, &single(1)).unwrap();
        let g = crate::specfun::gamma;
        let want = g(1.9).unwrap() * g(2.4).unwrap() / (g(2.3).unwrap() * g(2.0).unwrap());
        assert!((s.get(1).re - want).abs() < 1e-13);
    }

    #[test]
    fn snapshots() {
        let p = make_params(0.0, 0.0).unwrap();
        let c1 = SeriesCoefficients::from_map(&BTreeMap::from([(1, c(1.0, 0.0))]));
        let s = snapshot(&p, &c1, 0.3).unwrap();
        assert!((s.a[1] - c(0.3, 0.0)).norm() < 1e-15);
        assert!(s.a[0].norm() == 0.0 && s.b.iter().all(|b| b.norm() == 0.0));
        let q = make_params(0.5, 0.5).unwrap();
        let s = snapshot(&q, &c1, 1.0).unwrap();
        assert!((s.a[1].re - 0.848_826_363_156_775).abs() < 1e-12);
        assert!(snapshot(&q, &c1, 0.0).is_err());
        let small = snapshot(&q, &c1, 1e-6).unwrap();
        assert!((small.a[1].re / 1e-6 - 1.0).abs() < 1e-10);
    }

    #[test]
    fn snapshot_matches_expansion_on_circle() {
        let p = make_params(-0.3, 0.8).unwrap();
        let f = crate::boundary::random_suite(3, 1, 6).remove(0);
        let cs = coefficients_from_boundary(&p, &f).unwrap();
        let r = 0.7;
        let s = snapshot(&p, &cs, r).unwrap();
        for th in [0.0, 1.0, 2.5, 4.0] {
            let z = DiskPoint::from_polar(r, th).unwrap();
            let want = evaluate_expansion(&p, &cs, z).unwrap();
            assert!((s.eval(Complex64::from_polar(1.0, th)) - want).norm() < 1e-12);
        }
        assert!(s.eval_normalized(c(1.0, 0.0)).is_ok());
    }

    #[test]
    fn moments_reproduce_solver() {
        let p = make_params(0.5, -0.2).unwrap();
        let f = crate::boundary::random_suite(9, 1, 4).remove(0);
        let z = c(0.35, -0.6);
        let m = poisson_moments(&p, z, 512, 4).unwrap();
        let via: Complex64 = (-4..=4).map(|k| f.coeff(k) * m[(k + 4) as usize]).sum();
        let direct = PoissonSolver::new(&p, &f, 512).unwrap().eval(z).unwrap();
        assert!((via - direct).norm() < 1e-13);
    }

    #[test]
    fn residual_examples() {
        let p = make_params(0.0, 0.0).unwrap();
        let r = operator_residual(&p, Ok, pt(0.3, 0.2), 1e-3).unwrap();
        assert!(r.norm() < 1e-9);
        let q = make_params(0.5, -0.3).unwrap();
        let z = pt(0.4, -0.1);
        let r = operator_residual(&q, |_| Ok(c(1.0, 0.0)), z, 1e-3).unwrap();
        let w = 1.0 - z.z().norm_sqr();
        assert!((r - c(-w * 0.5 * -0.3, 0.0)).norm() < 1e-8);
        assert!(matches!(
            operator_residual(&q, Ok, pt(0.95, 0.0), 0.03),
            Err(Error::Stencil(_))
        ));
    }

    #[test]
    fn derivative_examples() {
        let (a, b) = wirtinger_derivatives(Ok, pt(0.2, 0.1), 1e-3).unwrap();
        assert!((a - c(1.0, 0.0)).norm() < 1e-10 && b.norm() < 1e-10);
        let (a, b) =
            wirtinger_derivatives(|z: Complex64| Ok(z.conj() * z.conj()), pt(0.5, 0.0), 1e-3)
                .unwrap();
        assert!(a.norm() < 1e-10 && (b - c(1.0, 0.0)).norm() < 1e-6);
        let u = |z: Complex64| Ok(z + 0.5 * z.conj() * z.conj());
        assert!((jacobian_norm(u, pt(0.0, 0.0), 1e-3).unwrap() - 1.0).abs() < 1e-9);
        assert!((jacobian_norm(u, pt(0.5, 0.0), 1e-3).unwrap() - 1.5).abs() < 1e-6);
        let z = DiskPoint::from_polar(0.6, 0.9).unwrap();
        let (ur, ut) = radial_angular_derivatives(Ok, z, 1e-3).unwrap();
        let e = Complex64::from_polar(1.0, 0.9);
        assert!((ur - e).norm() < 1e-9 && (ut - I * 0.6 * e).norm() < 1e-6);
        let (ur, ut) = radial_angular_derivatives(|_| Ok(c(1.0, 0.0)), z, 1e-3).unwrap();
        assert_eq!((ur, ut), (Complex64::default(), Complex64::default()));
        assert!(radial_angular_derivatives(Ok, pt(1e-4, 0.0), 1e-3).is_err());
        let p = make_params(0.0, 1.0).unwrap();
        let cs = SeriesCoefficients::from_map(&BTreeMap::from([(1, c(1.0, 0.0))]));
        let (a, _) = wirtinger_richardson(
            |z| evaluate_expansion(&p, &cs, DiskPoint::new(z)?),
            pt(0.0, 0.0),
            1e-3,
        )
        .unwrap();
        assert!((a - c(1.0, 0.0)).norm() < 1e-10);
    }

    #[test]
    fn means_examples() {
        assert!((integral_means(Ok, 0.5, 2.0, 256).unwrap() - 0.5).abs() < 1e-15);
        for p in [1.0, 3.0, f64::INFINITY] {
            assert!(
                (integral_means(|_| Ok(c(2.5, 0.0)), 0.7, p, 256).unwrap() - 2.5).abs() < 1e-14
            );
        }
        let u = |z: Complex64| Ok(z + z.conj());
        assert!((integral_means(u, 0.5, 2.0, 256).unwrap() - 0.5f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn grid_csv() {
        let pts = polar_grid(2, 3);
        assert_eq!(pts.len(), 6);
        assert!((pts[3].norm() - 2.0 / 3.0).abs() < 1e-15);
        let vals = evaluate_grid(Exec::Sequential, &pts, Ok).unwrap();
        let mut out = Vec::new();
        write_grid_csv(&mut out, &pts, &vals).unwrap();
        let text = String::from_utf8(out).unwrap();
        assert_eq!(text.lines().count(), 7);
        assert!(text.starts_with("x,y,re,im\n"));
    }
}
