//! Quadrature rules on the circle and on intervals.

use crate::error::{Error, Result};
use std::f64::consts::{FRAC_PI_2, PI};
use std::sync::OnceLock;

/// Default node count for circle integrals.
pub const DEFAULT_NODES: usize = 4096;

/// Mean `(1/2pi) int_0^{2pi} f(t) dt` by the periodic trapezoid rule.
pub fn circle_mean(nodes: usize, f: impl Fn(f64) -> f64) -> f64 {
    let h = 2.0 * PI / nodes as f64;
    (0..nodes).map(|j| f(h * j as f64)).sum::<f64>() / nodes as f64
}

/// Maximum of `f` over the uniform circle grid.
pub fn circle_max(nodes: usize, f: impl Fn(f64) -> f64) -> f64 {
    let h = 2.0 * PI / nodes as f64;
    (0..nodes)
        .map(|j| f(h * j as f64))
        .fold(f64::NEG_INFINITY, f64::max)
}

const GL_ORDER: usize = 16;

fn legendre_16() -> &'static [(f64, f64)] {
    static RULE: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    RULE.get_or_init(|| gauss_legendre(GL_ORDER))
}

/// Gauss-Legendre nodes and weights on `[-1, 1]`, by Newton iteration on `P_n`.
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut rule = Vec::with_capacity(n);
    let nf = n as f64;
    for i in 0..n {
        let mut x = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 1.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = nf * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        rule.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
    }
    rule
}

/// Composite 16-point Gauss-Legendre over `[a, b]` with `panels` equal panels.
pub fn gauss_panels(a: f64, b: f64, panels: usize, f: &impl Fn(f64) -> f64) -> f64 {
    let rule = legendre_16();
    let w = (b - a) / panels as f64;
    let mut sum = 0.0;
    for i in 0..panels {
        let mid = a + w * (i as f64 + 0.5);
        let half = 0.5 * w;
        sum += rule
            .iter()
            .map(|&(x, wt)| wt * f(mid + half * x))
            .sum::<f64>()
            * half;
    }
    sum
}

/// Integral over `[a, b]` split at `breaks` (kinks of the integrand), using
/// about `nodes` evaluations in total, distributed by length.
pub fn piecewise(a: f64, b: f64, breaks: &[f64], nodes: usize, f: impl Fn(f64) -> f64) -> f64 {
    let mut cuts: Vec<f64> = breaks.iter().copied().filter(|&x| x > a && x < b).collect();
    cuts.push(a);
    cuts.push(b);
    cuts.sort_by(f64::total_cmp);
    cuts.dedup();
    let panels_total = (nodes / GL_ORDER).max(1) as f64;
    cuts.windows(2)
        .map(|w| {
            let panels = ((w[1] - w[0]) / (b - a) * panels_total).ceil().max(1.0) as usize;
            gauss_panels(w[0], w[1], panels, &f)
        })
        .sum()
}

/// Mean over the circle of an integrand whose kinks are the zeros of
/// `cos(t - shift)` and `sin(t - shift)`.
pub fn circle_mean_kinked(shift: f64, nodes: usize, f: impl Fn(f64) -> f64) -> f64 {
    let breaks: Vec<f64> = (-1..=5).map(|j| shift + FRAC_PI_2 * j as f64).collect();
    piecewise(0.0, 2.0 * PI, &breaks, nodes, f) / (2.0 * PI)
}

/// Value of an adaptive quadrature with its number of integrand evaluations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integral {
    pub value: f64,
    pub evals: usize,
}

const TS_TMAX: f64 = 6.5;
const TS_LEVELS: usize = 14;

/// Tanh-sinh (double exponential) quadrature on `[a, b]`.
///
/// The integrand receives `(x, x - a, b - x)` with the endpoint distances
/// computed without cancellation, so endpoint singularities can be written
/// in terms of them.
pub fn tanh_sinh(a: f64, b: f64, tol: f64, f: impl Fn(f64, f64, f64) -> f64) -> Result<Integral> {
    let len = b - a;
    let mid = 0.5 * (a + b);
    let evals = std::cell::Cell::new(0usize);
    let term = |t: f64| -> f64 {
        let u = FRAC_PI_2 * t.sinh();
        let da = len / (1.0 + (-2.0 * u).exp());
        let db = len / (1.0 + (2.0 * u).exp());
        if da == 0.0 || db == 0.0 || !da.is_finite() || !db.is_finite() {
            return 0.0;
        }
        let ch = u.cosh();
        let w = 0.5 * len * FRAC_PI_2 * t.cosh() / (ch * ch);
        if w == 0.0 {
            return 0.0;
        }
        let x = if t < 0.0 { a + da } else { b - db };
        let x = if t == 0.0 { mid } else { x };
        evals.set(evals.get() + 1);
        let v = f(x, da, db);
        if v.is_finite() {
            w * v
        } else {
            0.0
        }
    };
    let mut h = 1.0;
    let mut sum = term(0.0);
    let mut k = 1;
    while k as f64 * h <= TS_TMAX {
        let t = k as f64 * h;
        sum += term(t) + term(-t);
        k += 1;
    }
    let mut prev = sum * h;
    for _ in 0..TS_LEVELS {
        h *= 0.5;
        let mut k = 1;
        while k as f64 * h <= TS_TMAX {
            let t = k as f64 * h;
            sum += term(t) + term(-t);
            k += 2;
        }
        let est = sum * h;
        if (est - prev).abs() <= tol * est.abs().max(1e-300) {
            return Ok(Integral {
                value: est,
                evals: evals.get(),
            });
        }
        prev = est;
    }
    Err(Error::Convergence {
        terms: 1 << TS_LEVELS,
    })
}

/// `∫_0^{2π} (1+r²+2r cos b)^m h(b) db` for `0 <= r <= 1`.
///
/// The range is split at `kinks` (points where `h` is not smooth) and at
/// `π`, where the weight degenerates as `r → 1`; the weight is evaluated from
/// the distance to `π` so the endpoint behaviour is resolved. At `r = 1` with
/// `m <= -1/2` the integral diverges and `+∞` is returned.
pub fn weighted_circle_integral(
    r: f64,
    m: f64,
    kinks: &[f64],
    h: impl Fn(f64) -> f64,
) -> Result<Integral> {
    if r >= 1.0 && m <= -0.5 {
        return Ok(Integral {
            value: f64::INFINITY,
            evals: 0,
        });
    }
    let mut cuts: Vec<f64> = kinks
        .iter()
        .map(|k| k.rem_euclid(2.0 * PI))
        .filter(|&k| k > 0.0)
        .collect();
    cuts.extend([0.0, PI, 2.0 * PI]);
    cuts.sort_by(f64::total_cmp);
    cuts.dedup_by(|a, b| (*a - *b).abs() < 1e-15);
    let weight = |d: f64| {
        let s = (0.5 * d).sin();
        ((1.0 - r) * (1.0 - r) + 4.0 * r * s * s).powf(m)
    };
    let mut total = Integral {
        value: 0.0,
        evals: 0,
    };
    for w in cuts.windows(2) {
        let (a, b) = (w[0], w[1]);
        let part = tanh_sinh(a, b, 1e-13, |x, da, db| {
            let d = if b == PI {
                db
            } else if a == PI {
                da
            } else {
                (PI - x).abs()
            };
            weight(d) * h(x)
        })?;
        total.value += part.value;
        total.evals += part.evals;
    }
    Ok(total)
}
