//! Explicit constants of the growth, distortion, derivative, integral-means
//! and coefficient estimates.
//!
//! Closed forms are evaluated directly. Where an estimate is stated as a
//! supremum over `r`, the value is also maximized over a 512-point grid on
//! `[0, 1]` (the endpoint taken as a limit); the grid value is authoritative
//! and the printed closed form is kept as a reference.

use crate::error::{Error, Result};
use crate::json;
use crate::kernel::AlphaBeta;
use crate::quad::{weighted_circle_integral, Integral};
use crate::specfun::{beta as beta_fn, gamma, gauss_2f1_at_one, hyp2f1, HypParams};
use num_complex::Complex64;
use serde::Serialize;
use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;

/// Number of points of the `r`-grid used for suprema and infima.
pub const SUP_GRID: usize = 512;
/// Discrepancy between a grid supremum and its printed closed form above
/// which the report entry is flagged.
pub const FLAG_TOL: f64 = 1e-6;

/// Hölder exponents `p` and `q = p/(p-1)`.
///
/// Stored through `1/p`; `1/q` is `1 - 1/p`, so the conjugacy identity is exact.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum HolderPair {
    /// `p = 1`, `q = ∞`.
    One,
    /// `1 < p < ∞`, holding `1/p`.
    Finite(f64),
    /// `p = ∞`, `q = 1`.
    Infinity,
}

impl HolderPair {
    pub fn new(p: f64) -> Result<Self> {
        if p == 1.0 {
            Ok(Self::One)
        } else if p == f64::INFINITY {
            Ok(Self::Infinity)
        } else if p > 1.0 && p.is_finite() {
            Ok(Self::Finite(1.0 / p))
        } else {
            Err(Error::Constraint(format!("p = {p} is not in [1, inf]")))
        }
    }

    pub fn inv_p(&self) -> f64 {
        match self {
            Self::One => 1.0,
            Self::Finite(ip) => *ip,
            Self::Infinity => 0.0,
        }
    }

    pub fn inv_q(&self) -> f64 {
        1.0 - self.inv_p()
    }

    pub fn p(&self) -> f64 {
        1.0 / self.inv_p()
    }

    pub fn q(&self) -> f64 {
        1.0 / self.inv_q()
    }
}

impl fmt::Display for HolderPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Infinity => write!(f, "inf"),
            _ => write!(f, "{}", self.p()),
        }
    }
}

impl std::str::FromStr for HolderPair {
    type Err = Error;

    /// Accepts a number `>= 1` or `inf` / `infinity`.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "inf" | "infinity" | "∞" => Ok(Self::Infinity),
            t => Self::new(
                t.parse()
                    .map_err(|_| Error::Constraint(format!("cannot parse p = {s:?}")))?,
            ),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    ClosedForm,
    Quadrature,
    /// Extremum over the `r`-grid (a supremum, or an infimum for coefficient ratios).
    SupOverGrid,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundEntry {
    pub name: String,
    #[serde(serialize_with = "json::num")]
    pub value: f64,
    pub source: String,
    pub method: Method,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nodes: Option<usize>,
    #[serde(
        skip_serializing_if = "Option::is_none",
        serialize_with = "json::opt_num"
    )]
    pub reference: Option<f64>,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub flagged: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
#[serde(transparent)]
pub struct BoundReport {
    pub entries: Vec<BoundEntry>,
}

impl BoundReport {
    pub fn push(
        &mut self,
        name: &str,
        value: f64,
        source: &str,
        method: Method,
    ) -> &mut BoundEntry {
        self.entries.push(BoundEntry {
            name: name.to_string(),
            value,
            source: source.to_string(),
            method,
            nodes: None,
            reference: None,
            flagged: false,
        });
        self.entries.last_mut().expect("just pushed")
    }

    fn push_sup(&mut self, name: &str, sup: &SupConstant, source: &str) {
        let e = self.push(name, sup.grid, source, Method::SupOverGrid);
        e.nodes = Some(SUP_GRID);
        e.reference = sup.printed;
        e.flagged = sup.flagged;
        if let Some(v) = sup.printed {
            self.push(&format!("{name}_printed"), v, source, Method::ClosedForm);
        }
    }

    pub fn get(&self, name: &str) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn extend(&mut self, other: BoundReport) {
        self.entries.extend(other.entries);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Radius at which an `r`-dependent constant is evaluated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Radius {
    At(f64),
    Sup,
}

/// A supremum over `r` computed on the grid, with the printed closed form if any.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SupConstant {
    pub grid: f64,
    pub argmax: f64,
    pub printed: Option<f64>,
    pub flagged: bool,
}

impl SupConstant {
    fn new((grid, argmax): (f64, f64), printed: Option<f64>) -> Self {
        let flagged =
            printed.is_some_and(|v| !((v - grid).abs() <= FLAG_TOL * grid.abs().max(1.0)));
        Self {
            grid,
            argmax,
            printed,
            flagged,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Partial {
    Radial,
    Angular,
    Wirtinger,
    /// `u_z̄`, bounded with the parameters swapped.
    WirtingerConj,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoefficientKind {
    TypicallyReal,
    CMinus2,
    C2,
    StarlikeCk,
    StarlikeCmk,
    ConjectureCk,
    ConjectureCmk,
}

/// `r_i = i/(SUP_GRID-1)`.
pub fn sup_grid() -> Vec<f64> {
    (0..SUP_GRID)
        .map(|i| i as f64 / (SUP_GRID - 1) as f64)
        .collect()
}

fn grid_max(f: impl Fn(f64) -> Result<f64>) -> Result<(f64, f64)> {
    let mut best = (f64::NEG_INFINITY, 0.0);
    for r in sup_grid() {
        let v = f(r)?;
        if v > best.0 || v.is_nan() {
            best = (v, r);
        }
    }
    Ok(best)
}

fn check_radius(r: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&r) {
        return Err(Error::Domain(format!("radius {r} outside [0, 1]")));
    }
    Ok(())
}

fn g(r: f64, t: f64) -> f64 {
    1.0 + r * r + 2.0 * r * t.cos()
}

/// `Γ(2e+1)/Γ(e+1)² = F(-e, -e; 1; 1)`, infinite for `e <= -1/2`.
fn gamma_ratio(e: f64) -> Result<f64> {
    if e <= -0.5 {
        return Ok(f64::INFINITY);
    }
    Ok(gamma(2.0 * e + 1.0)? / gamma(e + 1.0)?.powi(2))
}

/// `(1/2π) ∫ g^e = F(-e, -e; 1; r²)`, with the `r = 1` limit.
fn weight_mean(e: f64, r: f64) -> Result<f64> {
    if r >= 1.0 {
        gamma_ratio(e)
    } else {
        hyp2f1(-e, -e, 1.0, r * r)
    }
}

const COS_KINKS: [f64; 2] = [FRAC_PI_2, 3.0 * FRAC_PI_2];
const SIN_KINKS: [f64; 1] = [PI];

/// `(1/2π) ∫ g^m h`.
fn weighted_mean(r: f64, m: f64, kinks: &[f64], h: impl Fn(f64) -> f64) -> Result<f64> {
    Ok(weighted_circle_integral(r, m, kinks, h)?.value / (2.0 * PI))
}

/// Maximum of a `2π`-periodic function: a dense scan refined by golden-section
/// search around the best cell.
fn circle_sup(f: impl Fn(f64) -> f64) -> f64 {
    const N: usize = 4096;
    let h = 2.0 * PI / N as f64;
    let (mut best, mut at) = (f64::NEG_INFINITY, 0.0);
    for j in 0..N {
        let t = h * j as f64;
        let v = f(t);
        if v > best {
            best = v;
            at = t;
        }
    }
    let (mut a, mut b) = (at - h, at + h);
    let phi = 0.5 * (5f64.sqrt() - 1.0);
    for _ in 0..80 {
        let x1 = b - phi * (b - a);
        let x2 = a + phi * (b - a);
        if f(x1) >= f(x2) {
            b = x2;
        } else {
            a = x1;
        }
    }
    best.max(f(0.5 * (a + b)))
}

// ---------------------------------------------------------------- growth

/// `A_{α,β,p}(r)`, bounding `|u(z)|(1-r²)^{1/p}/‖f‖_p`.
pub fn growth_constant(p: &AlphaBeta, hp: HolderPair, r: Radius) -> Result<f64> {
    match r {
        Radius::At(r) => growth_at(p, hp, r),
        Radius::Sup => Ok(growth_sup(p, hp)?.grid),
    }
}

fn growth_at(p: &AlphaBeta, hp: HolderPair, r: f64) -> Result<f64> {
    check_radius(r)?;
    let c = p.c_norm().abs();
    let s = p.sum();
    if hp == HolderPair::One {
        return Ok(c * (1.0 + r).powf(s + 2.0));
    }
    let q = hp.q();
    let m = q * (1.0 + 0.5 * s) - 1.0;
    let x = 4.0 * r * r / (1.0 + r * r).powi(2);
    let inner = if r >= 1.0 || x >= 1.0 - 1e-15 {
        gamma_ratio(m)?
    } else {
        (1.0 + r * r).powf(m) * hyp2f1(0.5 * (1.0 - m), -0.5 * m, 1.0, x)?
    };
    Ok(c * inner.powf(hp.inv_q()))
}

/// The defining integral of the growth constant, `|c|((1/2π) ∫ g^m)^{1/q}`.
pub fn growth_integral(p: &AlphaBeta, hp: HolderPair, r: f64) -> Result<Integral> {
    check_radius(r)?;
    let c = p.c_norm().abs();
    let s = p.sum();
    if hp == HolderPair::One {
        return Ok(Integral {
            value: c * circle_sup(|t| g(r, t).powf(0.5 * s + 1.0)),
            evals: 4096,
        });
    }
    let m = hp.q() * (1.0 + 0.5 * s) - 1.0;
    let i = weighted_circle_integral(r, m, &[], |_| 1.0)?;
    Ok(Integral {
        value: c * (i.value / (2.0 * PI)).powf(hp.inv_q()),
        evals: i.evals,
    })
}

/// Printed closed form of the growth supremum; absent at `p = 1`.
pub fn growth_sup_printed(p: &AlphaBeta, hp: HolderPair) -> Result<Option<f64>> {
    if hp == HolderPair::One {
        return Ok(None);
    }
    let m = hp.q() * (1.0 + 0.5 * p.sum()) - 1.0;
    let inner = 2f64.powf(m) * gamma(m + 0.5)? / (2.0 * PI.sqrt() * gamma(m + 1.0)?);
    Ok(Some(p.c_norm().abs() * inner.powf(hp.inv_q())))
}

pub fn growth_sup(p: &AlphaBeta, hp: HolderPair) -> Result<SupConstant> {
    Ok(SupConstant::new(
        grid_max(|r| growth_at(p, hp, r))?,
        growth_sup_printed(p, hp)?,
    ))
}

/// `|c| F(-(α+β)/2, -(α+β)/2; 1; r²)`, the sharp factor in `M_p(r,u) <= · ‖f‖_p`.
pub fn mp_growth_factor(p: &AlphaBeta, r: f64) -> Result<f64> {
    check_radius(r)?;
    Ok(p.c_norm().abs() * weight_mean(0.5 * p.sum(), r)?)
}

// ------------------------------------------------------------ distortion

/// Pieces of the distortion constant at finite `q`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DistortionParts {
    pub p_coef: f64,
    pub q_coef: f64,
    pub u_p: f64,
    pub l0: f64,
    pub lpi2: f64,
    /// `max(L(0), L(π/2))`.
    pub v: f64,
    /// The candidate selected by the threshold rule `m < 1 → L(0)`, `m >= 1 → L(π/2)`.
    pub threshold_choice: f64,
    pub value: f64,
}

fn distortion_regime(p: &AlphaBeta) -> Result<()> {
    if !(p.beta() > -1.0) {
        return Err(Error::Regime(format!(
            "distortion estimate needs beta > -1, got {}",
            p.beta()
        )));
    }
    Ok(())
}

fn distortion_exponent(p: &AlphaBeta, hp: HolderPair) -> f64 {
    hp.q() * (p.beta() + 1.0) - 1.0
}

/// `U_p = 2^{2m+1} √π Γ(m+1/2)/Γ(m+1)` with `m = qβ+q-1`; infinite for `m <= -1/2`.
pub fn u_p(p: &AlphaBeta, hp: HolderPair) -> Result<f64> {
    distortion_regime(p)?;
    let m = distortion_exponent(p, hp);
    if m <= -0.5 {
        return Ok(f64::INFINITY);
    }
    Ok(2f64.powf(2.0 * m + 1.0) * PI.sqrt() * gamma(m + 0.5)? / gamma(m + 1.0)?)
}

/// `∫_0^{2π} (2 - 2cos b)^{qβ+q-1} db` by quadrature.
pub fn u_p_quadrature(p: &AlphaBeta, hp: HolderPair) -> Result<Integral> {
    distortion_regime(p)?;
    weighted_circle_integral(1.0, distortion_exponent(p, hp), &[], |_| 1.0)
}

/// `L(η) = ∫_0^{2π} g(b)^m ((|β-α|+1)|cos(b+η)| + |β-α|π)^q db`.
pub fn distortion_l(p: &AlphaBeta, hp: HolderPair, r: f64, eta: f64) -> Result<Integral> {
    let d = (p.beta() - p.alpha()).abs();
    let q = hp.q();
    let kinks = [FRAC_PI_2 - eta, 1.5 * PI - eta];
    weighted_circle_integral(r, distortion_exponent(p, hp), &kinks, |b| {
        ((d + 1.0) * (b + eta).cos().abs() + d * PI).powf(q)
    })
}

pub fn distortion_parts(p: &AlphaBeta, hp: HolderPair, r: f64) -> Result<DistortionParts> {
    distortion_regime(p)?;
    check_radius(r)?;
    if hp == HolderPair::One {
        return Err(Error::Regime("p = 1 has no finite-q decomposition".into()));
    }
    let (a, b, q) = (p.alpha(), p.beta(), hp.q());
    let p_coef = q * (a * r + b + 1.0).abs().powf(q - 1.0) * a.abs() * r;
    let q_coef = (b + 1.0).abs().powf(q);
    let u = u_p(p, hp)?;
    let l0 = distortion_l(p, hp, r, 0.0)?.value;
    let lpi2 = distortion_l(p, hp, r, FRAC_PI_2)?.value;
    let v = l0.max(lpi2);
    let threshold_choice = if distortion_exponent(p, hp) < 1.0 {
        l0
    } else {
        lpi2
    };
    let pu = if p_coef == 0.0 { 0.0 } else { p_coef * u };
    let value = 2.0 * p.c_norm().abs() / (2.0 * PI).powf(hp.inv_q()) * (pu + q_coef * v);
    Ok(DistortionParts {
        p_coef,
        q_coef,
        u_p: u,
        l0,
        lpi2,
        v,
        threshold_choice,
        value,
    })
}

fn distortion_at(p: &AlphaBeta, hp: HolderPair, r: f64) -> Result<f64> {
    distortion_regime(p)?;
    check_radius(r)?;
    if hp != HolderPair::One {
        return Ok(distortion_parts(p, hp, r)?.value);
    }
    let (a, b) = (p.alpha(), p.beta());
    let d = (b - a).abs();
    let w = (1.0 + r).powf(2.0 * (b + 1.0));
    let first = if a == 0.0 {
        0.0
    } else {
        (a * r + b + 1.0).abs() * w
    };
    let second = (b + 1.0).abs() * w * (d + 1.0 + d * PI);
    Ok(2.0 * p.c_norm().abs() * first.max(second))
}

/// `B_{α,β,p}(r)`, bounding `(|u_z|+|u_z̄|)(1-r²)^{1+1/p}/‖f‖_p`; needs `β > -1`.
pub fn distortion_constant(p: &AlphaBeta, hp: HolderPair, r: Radius) -> Result<f64> {
    match r {
        Radius::At(r) => distortion_at(p, hp, r),
        Radius::Sup => Ok(distortion_sup(p, hp)?.grid),
    }
}

/// Grid supremum; the printed value is the `r = 1` constant with the
/// threshold choice of `V`.
pub fn distortion_sup(p: &AlphaBeta, hp: HolderPair) -> Result<SupConstant> {
    let grid = grid_max(|r| distortion_at(p, hp, r))?;
    let printed = match hp {
        HolderPair::One => None,
        _ => {
            let d = distortion_parts(p, hp, 1.0)?;
            let pu = if d.p_coef == 0.0 {
                0.0
            } else {
                d.p_coef * d.u_p
            };
            Some(
                2.0 * p.c_norm().abs() / (2.0 * PI).powf(hp.inv_q())
                    * (pu + d.q_coef * d.threshold_choice),
            )
        }
    };
    Ok(SupConstant::new(grid, printed))
}

// -------------------------------------------------------------- partials

struct PartialShape {
    c: f64,
    s: f64,
    d: f64,
}

impl PartialShape {
    fn new(p: &AlphaBeta) -> Self {
        Self {
            c: p.c_norm().abs(),
            s: p.sum(),
            d: (p.alpha() - p.beta()).abs(),
        }
    }

    fn exponent(&self, q: f64) -> f64 {
        0.5 * ((self.s + 2.0) * q - 2.0)
    }

    fn c1(&self, q: f64, r: f64) -> f64 {
        q * (self.s.abs() * r + (self.s + 2.0).abs() + self.d).powf(q - 1.0) * self.s.abs() * r
    }

    fn c2(&self, q: f64, r: f64) -> f64 {
        q * (self.d + (self.s + 2.0).abs() + self.d * r).powf(q - 1.0) * self.d * r
    }
}

fn wirtinger_lead(p: &AlphaBeta, r: f64) -> f64 {
    (p.alpha() + 1.0).abs() + p.beta().abs() * r
}

fn partial_at(p: &AlphaBeta, hp: HolderPair, which: Partial, r: f64) -> Result<f64> {
    check_radius(r)?;
    if which == Partial::WirtingerConj {
        return partial_at(&p.swapped(), hp, Partial::Wirtinger, r);
    }
    let sh = PartialShape::new(p);
    let k = sh.s + 2.0;
    if hp == HolderPair::One {
        let top = (1.0 + r).powf(k);
        return Ok(match which {
            Partial::Radial => {
                let x = circle_sup(|t| ((k * t.cos()).abs() + sh.d) * g(r, t).powf(0.5 * k));
                let tail = if sh.s == 0.0 {
                    0.0
                } else {
                    (sh.s.abs() * r + k.abs() + sh.d) * top
                };
                sh.c * x.max(tail)
            }
            Partial::Angular => {
                let y = circle_sup(|t| (sh.d + (k * t.sin()).abs()) * g(r, t).powf(0.5 * k));
                let tail = if sh.d == 0.0 {
                    0.0
                } else {
                    (sh.d + k.abs() + sh.d * r) * top
                };
                sh.c * r * y.max(tail)
            }
            _ => sh.c * wirtinger_lead(p, r) * top,
        });
    }
    let q = hp.q();
    let e = sh.exponent(q);
    let i12 = weight_mean(e, r)?;
    Ok(match which {
        Partial::Radial => {
            let i11 = weighted_mean(r, e, &COS_KINKS, |t| ((k * t.cos()).abs() + sh.d).powf(q))?;
            sh.c * (i11 + sh.c1(q, r) * i12).powf(hp.inv_q())
        }
        Partial::Angular => {
            let i13 = weighted_mean(r, e, &SIN_KINKS, |t| (sh.d + (k * t.sin()).abs()).powf(q))?;
            sh.c * r * (i13 + sh.c2(q, r) * i12).powf(hp.inv_q())
        }
        _ => sh.c * wirtinger_lead(p, r) * i12.powf(hp.inv_q()),
    })
}

/// Constants `C` (radial), `D` (angular) and `E` (Wirtinger) bounding the
/// partial derivatives times `(1-r²)^{1+1/p}/‖f‖_p`.
pub fn partial_constant(p: &AlphaBeta, hp: HolderPair, which: Partial, r: Radius) -> Result<f64> {
    match r {
        Radius::At(r) => partial_at(p, hp, which, r),
        Radius::Sup => Ok(partial_sup(p, hp, which)?.grid),
    }
}

/// Printed supremum of a partial-derivative constant; absent at `p = 1`.
pub fn partial_sup_printed(p: &AlphaBeta, hp: HolderPair, which: Partial) -> Result<Option<f64>> {
    if hp == HolderPair::One {
        return Ok(None);
    }
    if which == Partial::WirtingerConj {
        return partial_sup_printed(&p.swapped(), hp, Partial::Wirtinger);
    }
    let sh = PartialShape::new(p);
    let q = hp.q();
    let k = sh.s + 2.0;
    let e = sh.exponent(q);
    let gr = gamma_ratio(e)?;
    if which == Partial::Wirtinger {
        return Ok(Some(sh.c * wirtinger_lead(p, 1.0) * gr.powf(hp.inv_q())));
    }
    let x = if k * q <= 4.0 { FRAC_PI_2 } else { 0.0 };
    let gx = weighted_mean(1.0, e, &[FRAC_PI_2 + x, 1.5 * PI + x], |t| {
        (sh.d + (k * (t - x).cos()).abs()).powf(q)
    })?;
    let lead = if which == Partial::Radial {
        sh.c1(q, 1.0)
    } else {
        sh.c2(q, 1.0)
    };
    Ok(Some(sh.c * (lead * gr + gx).powf(hp.inv_q())))
}

pub fn partial_sup(p: &AlphaBeta, hp: HolderPair, which: Partial) -> Result<SupConstant> {
    Ok(SupConstant::new(
        grid_max(|r| partial_at(p, hp, which, r))?,
        partial_sup_printed(p, hp, which)?,
    ))
}

/// Closed form of the angular constant on the diagonal `α = β`:
/// `|c| r (2α+2) π^{-1/q} (B((1+q)/2, 1/2) F(1-(α+1)q, 1-(α+3/2)q; 1+q/2; r²))^{1/q}`.
pub fn d_alpha_alpha(p: &AlphaBeta, hp: HolderPair, r: f64) -> Result<f64> {
    check_radius(r)?;
    if p.alpha() != p.beta() {
        return Err(Error::Regime(format!(
            "needs alpha = beta, got ({}, {})",
            p.alpha(),
            p.beta()
        )));
    }
    if hp == HolderPair::One {
        return partial_at(p, hp, Partial::Angular, r);
    }
    let (a, q) = (p.alpha(), hp.q());
    let hyp = HypParams::new(1.0 - (a + 1.0) * q, 1.0 - (a + 1.5) * q, 1.0 + 0.5 * q)?;
    let f = if r >= 1.0 {
        gauss_2f1_at_one(hyp)?
    } else {
        hyp2f1(hyp.a, hyp.b, hyp.c, r * r)?
    };
    let inner = beta_fn(0.5 * (1.0 + q), 0.5)? * f;
    Ok(p.c_norm().abs() * r * (2.0 * a + 2.0) * PI.powf(-hp.inv_q()) * inner.powf(hp.inv_q()))
}

// ----------------------------------------------------------------- means

fn means_at(p: &AlphaBeta, which: Partial, r: f64) -> Result<f64> {
    check_radius(r)?;
    if which == Partial::WirtingerConj {
        return means_at(&p.swapped(), Partial::Wirtinger, r);
    }
    let sh = PartialShape::new(p);
    let m0 = weight_mean(0.5 * sh.s, r)?;
    if which == Partial::Wirtinger {
        return Ok(sh.c * wirtinger_lead(p, r) * m0);
    }
    let mc = weighted_mean(r, 0.5 * sh.s, &COS_KINKS, |t| t.cos().abs())?;
    let ms = weighted_mean(r, 0.5 * sh.s, &SIN_KINKS, |t| t.sin().abs())?;
    Ok(match which {
        Partial::Radial => sh.c * (sh.s.abs() * r * m0 + (sh.s + 2.0) * mc + sh.d * ms),
        _ => r * sh.c * (sh.d * r * m0 + (sh.s + 2.0) * ms + sh.d * mc),
    })
}

/// Constants `A`, `B`, `C` bounding `M_p(r, ∂u)(1-r²)/‖f‖_p` for every `p`.
pub fn means_constant(p: &AlphaBeta, which: Partial, r: Radius) -> Result<f64> {
    match r {
        Radius::At(r) => means_at(p, which, r),
        Radius::Sup => Ok(means_sup(p, which)?.grid),
    }
}

pub fn means_sup_printed(p: &AlphaBeta, which: Partial) -> Result<f64> {
    if which == Partial::WirtingerConj {
        return means_sup_printed(&p.swapped(), Partial::Wirtinger);
    }
    let sh = PartialShape::new(p);
    let gr = gamma_ratio(0.5 * sh.s)?;
    if which == Partial::Wirtinger {
        return Ok(sh.c * wirtinger_lead(p, 1.0) * gr);
    }
    // ∫ |trig| (1 + cos t)^{s/2} dt, from the (2 + 2cos t)^{s/2} weight
    let j = if sh.s >= 2.0 {
        weighted_circle_integral(1.0, 0.5 * sh.s, &COS_KINKS, |t| t.cos().abs())?.value
    } else {
        weighted_circle_integral(1.0, 0.5 * sh.s, &SIN_KINKS, |t| t.sin().abs())?.value
    } * 2f64.powf(-0.5 * sh.s);
    let lead = if which == Partial::Radial {
        sh.s.abs()
    } else {
        sh.d
    };
    Ok(sh.c * ((sh.s + 2.0 + sh.d) / PI * 2f64.powf(0.5 * sh.s - 1.0) * j + lead * gr))
}

pub fn means_sup(p: &AlphaBeta, which: Partial) -> Result<SupConstant> {
    Ok(SupConstant::new(
        grid_max(|r| means_at(p, which, r))?,
        Some(means_sup_printed(p, which)?),
    ))
}

// ---------------------------------------------------------- coefficients

pub fn heinz_rhs() -> f64 {
    27.0 / (4.0 * PI * PI)
}

/// `(1/c)² (|c₁|²/(1+α)² + (3√3/π)|c₀|² + |c₋₁|²/(1+β)²)`, bounded below by
/// `27/4π²` for maps of the disk onto itself.
pub fn heinz_functional(p: &AlphaBeta, c0: Complex64, c1: Complex64, cm1: Complex64) -> f64 {
    let (a, b) = (p.alpha(), p.beta());
    let body = c1.norm_sqr() / (1.0 + a).powi(2)
        + 3.0 * 3f64.sqrt() / PI * c0.norm_sqr()
        + cm1.norm_sqr() / (1.0 + b).powi(2);
    body / p.c_norm().powi(2)
}

fn negative_ordered(p: &AlphaBeta) -> bool {
    -1.0 < p.beta() && p.beta() < p.alpha() && p.alpha() < 0.0
}

fn factorial(k: u32) -> f64 {
    (1..=k).fold(1.0, |acc, i| acc * i as f64)
}

/// `inf_r num(r²)/den(r²)` over a log grid in `1 - r ∈ [1e-6, 1]`, plus the endpoints.
fn ratio_infimum(num: HypParams, den: HypParams) -> Result<f64> {
    let mut best = 1.0f64;
    for i in 0..SUP_GRID {
        let delta = 10f64.powf(-6.0 * i as f64 / (SUP_GRID - 1) as f64);
        let t = (1.0 - delta).powi(2);
        best = best.min(hyp2f1(num.a, num.b, num.c, t)? / hyp2f1(den.a, den.b, den.c, t)?);
    }
    Ok(best.min(gauss_2f1_at_one(num)? / gauss_2f1_at_one(den)?))
}

/// Ratio factor of the coefficient conjecture and how it was obtained.
pub fn conjecture_ratio(p: &AlphaBeta, analytic: bool, k: u32) -> Result<(f64, Method)> {
    let (a, b) = (p.alpha(), p.beta());
    let kf = k as f64;
    if negative_ordered(p) {
        let v = if analytic {
            gamma(kf + 1.0 + a)? / (factorial(k) * gamma(2.0 + a)?)
        } else {
            gamma(kf + 1.0 + b)? / ((1.0 + a) * factorial(k) * gamma(1.0 + b)?)
        };
        return Ok((v.abs(), Method::ClosedForm));
    }
    let num = HypParams::new(-a, 1.0 - b, 2.0)?;
    let den = if analytic {
        HypParams::new(-a, kf - b, kf + 1.0)?
    } else {
        HypParams::new(-b, kf - a, kf + 1.0)?
    };
    Ok((ratio_infimum(num, den)?, Method::SupOverGrid))
}

/// Bound of the given kind on the `k`-th coefficient (`k` is ignored for
/// `CMinus2` and `C2`). `extra` is `c₋₁` for the typically-real bound.
pub fn coefficient_bound(
    p: &AlphaBeta,
    kind: CoefficientKind,
    k: u32,
    extra: Option<Complex64>,
) -> Result<f64> {
    let (a, b) = (p.alpha(), p.beta());
    let kf = k as f64;
    if k < 2 && !matches!(kind, CoefficientKind::CMinus2 | CoefficientKind::C2) {
        return Err(Error::Regime(format!(
            "coefficient index {k} must be at least 2"
        )));
    }
    let ordered = || {
        if negative_ordered(p) {
            Ok(())
        } else {
            Err(Error::Regime(format!(
                "needs -1 < beta < alpha < 0, got ({a}, {b})"
            )))
        }
    };
    Ok(match kind {
        CoefficientKind::TypicallyReal => {
            let cm1 =
                extra.ok_or_else(|| Error::Regime("typically-real bound needs c_{-1}".into()))?;
            (Complex64::new(1.0 / (1.0 + a), 0.0) - cm1 / (1.0 + b)).norm() / factorial(k - 1)
        }
        CoefficientKind::CMinus2 => {
            ordered()?;
            (2.0 + b) * (1.0 + b) / (4.0 * (1.0 + a))
        }
        CoefficientKind::C2 => {
            ordered()?;
            20.9197 * (1.0 + 0.5 * a)
        }
        CoefficientKind::StarlikeCk => {
            (2.0 * kf + 1.0) * (kf + 1.0) / 6.0
                * (gamma(kf + 1.0 + a)? / (factorial(k) * gamma(2.0 + a)?)).abs()
        }
        CoefficientKind::StarlikeCmk => {
            (2.0 * kf - 1.0) * (kf - 1.0) / 6.0
                * (gamma(kf + 1.0 + b)? / ((1.0 + a) * factorial(k) * gamma(1.0 + b)?)).abs()
        }
        CoefficientKind::ConjectureCk => {
            (2.0 * kf + 1.0) * (kf + 1.0) / 6.0 * conjecture_ratio(p, true, k)?.0
        }
        CoefficientKind::ConjectureCmk => {
            (2.0 * kf - 1.0) * (kf - 1.0) / 6.0 * conjecture_ratio(p, false, k)?.0
        }
    })
}

fn analytic_scale(p: &AlphaBeta) -> Result<f64> {
    Ok(gamma(1.0 + p.sum())? / (gamma(2.0 + p.alpha())? * gamma(1.0 + p.beta())?).abs())
}

/// Upper bound on the radius `R` for which a map with these first
/// coefficients can be univalent from the disk onto `|w| < R`.
pub fn rado_radius_bound(p: &AlphaBeta, c1: Complex64, cm1: Complex64) -> Result<f64> {
    let g = gamma(1.0 + p.sum())?;
    let x = c1.norm() * analytic_scale(p)?;
    let y = cm1.norm() * g / (gamma(1.0 + p.alpha())? * gamma(2.0 + p.beta())?).abs();
    Ok(((x * x + y * y) / heinz_rhs()).sqrt())
}

/// Omitted-circle, covering and area constants for normalized univalent maps.
pub fn geometric_constants(p: &AlphaBeta) -> Result<BoundReport> {
    let f = analytic_scale(p)?;
    let mut rep = BoundReport::default();
    rep.push(
        "omit_s",
        2.0 * PI * 6f64.sqrt() / 9.0 * f,
        "omitted circle, univalent class",
        Method::ClosedForm,
    );
    rep.push(
        "omit_s0",
        2.0 * PI * 3f64.sqrt() / 9.0 * f,
        "omitted circle, normalized univalent class",
        Method::ClosedForm,
    );
    rep.push("covering", f / 16.0, "covering disk", Method::ClosedForm);
    rep.push(
        "area",
        0.5 * PI * f,
        "image area lower bound",
        Method::ClosedForm,
    );
    Ok(rep)
}

// ---------------------------------------------------------------- report

fn partial_name(which: Partial) -> &'static str {
    match which {
        Partial::Radial => "radial",
        Partial::Angular => "angular",
        Partial::Wirtinger => "wirtinger",
        Partial::WirtingerConj => "wirtinger_conj",
    }
}

const PARTIALS: [Partial; 4] = [
    Partial::Radial,
    Partial::Angular,
    Partial::Wirtinger,
    Partial::WirtingerConj,
];

/// Every constant for the parameter pair and exponent, in a fixed order.
pub fn full_report(p: &AlphaBeta, hp: HolderPair) -> Result<BoundReport> {
    let mut rep = BoundReport::default();
    rep.push(
        "c_norm",
        p.c_norm(),
        "kernel normalization",
        Method::ClosedForm,
    );
    rep.push(
        "heinz_rhs",
        heinz_rhs(),
        "Heinz lower bound",
        Method::ClosedForm,
    );
    rep.push(
        "heinz_identity",
        heinz_functional(
            p,
            Complex64::default(),
            Complex64::new(1.0, 0.0),
            Complex64::default(),
        ),
        "Heinz functional of the identity coefficients",
        Method::ClosedForm,
    );
    rep.extend(geometric_constants(p)?);
    rep.push(
        "rado_radius",
        rado_radius_bound(p, Complex64::new(1.0, 0.0), Complex64::default())?,
        "Radó radius bound",
        Method::ClosedForm,
    );
    rep.push(
        "starlike_ck_2",
        coefficient_bound(p, CoefficientKind::StarlikeCk, 2, None)?,
        "starlike coefficient bound",
        Method::ClosedForm,
    );
    rep.push(
        "starlike_cmk_2",
        coefficient_bound(p, CoefficientKind::StarlikeCmk, 2, None)?,
        "starlike coefficient bound",
        Method::ClosedForm,
    );
    if negative_ordered(p) {
        rep.push(
            "c_minus2",
            coefficient_bound(p, CoefficientKind::CMinus2, 2, None)?,
            "second co-analytic coefficient bound",
            Method::ClosedForm,
        );
        rep.push(
            "c2",
            coefficient_bound(p, CoefficientKind::C2, 2, None)?,
            "second analytic coefficient bound",
            Method::ClosedForm,
        );
    }
    for (name, analytic, lead) in [
        ("conjecture_ck_2", true, 2.5),
        ("conjecture_cmk_2", false, 0.5),
    ] {
        let (ratio, method) = conjecture_ratio(p, analytic, 2)?;
        let e = rep.push(name, lead * ratio, "coefficient conjecture", method);
        if method == Method::SupOverGrid {
            e.nodes = Some(SUP_GRID + 1);
        }
    }

    rep.push_sup("growth_sup", &growth_sup(p, hp)?, "growth estimate");
    let at_inf = growth_sup(p, HolderPair::Infinity)?;
    let e = rep.push(
        "growth_p_inf_bound",
        at_inf.grid,
        "growth estimate at p = inf against the bound ||f||_inf",
        Method::SupOverGrid,
    );
    e.nodes = Some(SUP_GRID);
    e.reference = Some(1.0);
    e.flagged = at_inf.grid > 1.0 + FLAG_TOL;
    rep.push(
        "mp_growth_factor_limit",
        mp_growth_factor(p, 1.0)?,
        "sharp integral-means growth",
        Method::ClosedForm,
    );

    if p.beta() > -1.0 {
        rep.push_sup(
            "distortion_sup",
            &distortion_sup(p, hp)?,
            "distortion estimate",
        );
        if hp != HolderPair::One {
            rep.push(
                "distortion_u_p",
                u_p(p, hp)?,
                "distortion estimate",
                Method::ClosedForm,
            );
            let d = distortion_parts(p, hp, 1.0)?;
            let l0 = distortion_l(p, hp, 1.0, 0.0)?;
            let lpi2 = distortion_l(p, hp, 1.0, FRAC_PI_2)?;
            rep.push(
                "distortion_l0_r1",
                d.l0,
                "distortion estimate",
                Method::Quadrature,
            )
            .nodes = Some(l0.evals);
            rep.push(
                "distortion_lpi2_r1",
                d.lpi2,
                "distortion estimate",
                Method::Quadrature,
            )
            .nodes = Some(lpi2.evals);
        }
    }
    for which in PARTIALS {
        let name = format!("partial_{}_sup", partial_name(which));
        rep.push_sup(
            &name,
            &partial_sup(p, hp, which)?,
            "partial derivative estimate",
        );
    }
    if p.alpha() == p.beta() {
        rep.push(
            "partial_angular_diagonal_r1",
            d_alpha_alpha(p, hp, 1.0)?,
            "partial derivative estimate, equal parameters",
            Method::ClosedForm,
        );
    }
    for which in PARTIALS {
        let name = format!("means_{}_sup", partial_name(which));
        rep.push_sup(
            &name,
            &means_sup(p, which)?,
            "integral means of derivatives",
        );
    }
    Ok(rep)
}
