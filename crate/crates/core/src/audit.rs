//! Numerical verification of the estimates against computed solutions.
//!
//! Every check compares a bound with an observed value and records the
//! margin `(bound - observed) / max(1, |bound|)` (reversed for lower
//! bounds). A case is a violation when its margin is below `-tolerance` and
//! numerical noise when it lies in `[-tolerance, 0)`.

use crate::boundary::{random_suite, BoundaryFunction};
use crate::bounds::{self, CoefficientKind, HolderPair, Partial, Radius};
use crate::error::{Error, Result};
use crate::exec::{self, Exec};
use crate::harmonic::{
    check_nodes, coefficients_from_boundary, evaluate_expansion, operator_residual,
    poisson_moments, radial_angular_richardson, wirtinger_richardson, PoissonSolver,
    SeriesCoefficients, DEFAULT_H,
};
use crate::json;
use crate::kernel::{kernel_abs_mean, kernel_abs_mean_closed, make_params, AlphaBeta, DiskPoint};
use crate::quad::{tanh_sinh, weighted_circle_integral, DEFAULT_NODES};
use crate::specfun::{beta as beta_fn, gamma, hyp2f1};
use num_complex::Complex64;
use serde::Serialize;
use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::f64::consts::{FRAC_PI_2, PI};
use std::io::Write;
use std::sync::Mutex;

/// Tolerance of checks on computed values.
pub const VALUE_TOL: f64 = 1e-8;
/// Tolerance of checks built on finite-difference derivatives.
pub const DERIV_TOL: f64 = 1e-4;
/// Tolerance of the maximizer and monotonicity scans.
pub const LEMMA_TOL: f64 = 1e-10;
/// Default trapezoid nodes for solutions in the audit.
pub const AUDIT_NODES: usize = 1024;
/// Points on each circle for integral means.
pub const THETA_NODES: usize = 128;

/// Margin of `observed <= bound`.
pub fn margin(bound: f64, observed: f64) -> f64 {
    if bound == f64::INFINITY {
        return 1.0;
    }
    (bound - observed) / bound.abs().max(1.0)
}

/// Margin of `observed >= bound`.
pub fn margin_lower(bound: f64, observed: f64) -> f64 {
    (observed - bound) / bound.abs().max(1.0)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditCase {
    pub id: String,
    #[serde(serialize_with = "json::num")]
    pub r: f64,
    #[serde(serialize_with = "json::num")]
    pub bound: f64,
    #[serde(serialize_with = "json::num")]
    pub observed: f64,
    #[serde(serialize_with = "json::num")]
    pub margin: f64,
}

impl AuditCase {
    pub fn upper(id: impl Into<String>, r: f64, bound: f64, observed: f64) -> Self {
        Self {
            id: id.into(),
            r,
            bound,
            observed,
            margin: margin(bound, observed),
        }
    }

    pub fn lower(id: impl Into<String>, r: f64, bound: f64, observed: f64) -> Self {
        Self {
            id: id.into(),
            r,
            bound,
            observed,
            margin: margin_lower(bound, observed),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditResult {
    pub name: String,
    pub cases_total: usize,
    pub cases_violated: usize,
    pub cases_within_noise: usize,
    /// Smallest margin; `null` in JSON when there are no cases.
    #[serde(serialize_with = "json::num")]
    pub worst_margin: f64,
    #[serde(serialize_with = "json::num")]
    pub tolerance: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub cases: Vec<AuditCase>,
}

impl AuditResult {
    pub fn new(name: impl Into<String>, tolerance: f64, cases: Vec<AuditCase>) -> Self {
        let violated = cases.iter().filter(|c| !(c.margin >= -tolerance)).count();
        let noise = cases
            .iter()
            .filter(|c| c.margin >= -tolerance && c.margin < 0.0)
            .count();
        Self {
            name: name.into(),
            cases_total: cases.len(),
            cases_violated: violated,
            cases_within_noise: noise,
            worst_margin: worst(&cases),
            tolerance,
            seed: None,
            cases,
        }
    }

    /// Folds labelled sub-results into one, keeping the worst case of each.
    pub fn summarize(
        name: impl Into<String>,
        tolerance: f64,
        parts: Vec<(String, AuditResult)>,
    ) -> Self {
        let mut out = Self::new(name, tolerance, Vec::new());
        for (label, part) in parts {
            out.cases_total += part.cases_total;
            out.cases_violated += part.cases_violated;
            out.cases_within_noise += part.cases_within_noise;
            out.worst_margin = out.worst_margin.min(part.worst_margin);
            if let Some(c) = part
                .cases
                .iter()
                .min_by(|a, b| a.margin.total_cmp(&b.margin))
            {
                out.cases.push(AuditCase {
                    id: format!("{label}/{}", c.id),
                    ..c.clone()
                });
            }
        }
        out
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn passed(&self) -> bool {
        self.cases_violated == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("audit result serializes")
    }

    /// CSV rows `case,r,margin`.
    pub fn write_csv<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "case,r,margin")?;
        self.write_rows(&mut w, None)
    }

    fn write_rows<W: Write>(&self, w: &mut W, check: Option<&str>) -> Result<()> {
        for c in &self.cases {
            if let Some(name) = check {
                write!(w, "{},", csv_field(name))?;
            }
            writeln!(
                w,
                "{},{},{}",
                csv_field(&c.id),
                json::fmt17(c.r),
                json::fmt17(c.margin)
            )?;
        }
        Ok(())
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Rows `check,case,r,margin` for several results under one header.
pub fn write_results_csv<W: Write>(mut w: W, results: &[AuditResult]) -> Result<()> {
    writeln!(w, "check,case,r,margin")?;
    for r in results {
        r.write_rows(&mut w, Some(&r.name))?;
    }
    Ok(())
}

/// A list of results as a pretty-printed JSON array.
pub fn results_to_json(results: &[AuditResult]) -> String {
    serde_json::to_string_pretty(results).expect("audit results serialize")
}

fn worst(cases: &[AuditCase]) -> f64 {
    cases.iter().map(|c| c.margin).fold(f64::INFINITY, f64::min)
}

// --------------------------------------------------------------- auditor

fn key(z: Complex64) -> (u64, u64) {
    (z.re.to_bits(), z.im.to_bits())
}

/// Points requested by `run` from the function it is given.
fn recorded(
    run: impl FnOnce(&dyn Fn(Complex64) -> Result<Complex64>) -> Result<()>,
) -> Result<Vec<Complex64>> {
    let pts = RefCell::new(Vec::new());
    let rec = |z: Complex64| {
        pts.borrow_mut().push(z);
        Ok(Complex64::default())
    };
    run(&rec)?;
    Ok(pts.into_inner())
}

/// `u_r`, `u_θ`, `u_z`, `u_z̄` at a point.
#[derive(Debug, Clone, Copy)]
pub struct Derivatives {
    pub ur: Complex64,
    pub ut: Complex64,
    pub uz: Complex64,
    pub uzb: Complex64,
}

fn circle_points(r: f64) -> Vec<Complex64> {
    (0..THETA_NODES)
        .map(|j| Complex64::from_polar(r, 2.0 * PI * j as f64 / THETA_NODES as f64))
        .collect()
}

/// Evaluates solutions for many boundaries at shared points.
///
/// The Poisson moments at each point are computed once and reused by every
/// boundary of order at most `order`; bound constants are memoized.
pub struct Auditor {
    params: AlphaBeta,
    nodes: usize,
    order: usize,
    exec: Exec,
    table: HashMap<(u64, u64), Vec<Complex64>>,
    memo: Mutex<HashMap<String, f64>>,
}

impl Auditor {
    pub fn new(params: AlphaBeta, nodes: usize, order: usize, exec: Exec) -> Result<Self> {
        check_nodes(nodes)?;
        Ok(Self {
            params,
            nodes,
            order,
            exec,
            table: HashMap::new(),
            memo: Mutex::new(HashMap::new()),
        })
    }

    pub fn params(&self) -> &AlphaBeta {
        &self.params
    }

    /// Precomputes moments at `points`.
    pub fn prepare(&mut self, points: &[Complex64]) -> Result<()> {
        let mut missing: Vec<Complex64> = points
            .iter()
            .copied()
            .filter(|z| !self.table.contains_key(&key(*z)))
            .collect();
        missing.sort_by_key(|z| key(*z));
        missing.dedup_by(|a, b| key(*a) == key(*b));
        let (p, n, o) = (self.params, self.nodes, self.order);
        let moments = exec::try_map(self.exec, &missing, |z| poisson_moments(&p, *z, n, o))?;
        self.table.extend(missing.into_iter().map(key).zip(moments));
        Ok(())
    }

    /// Points needed by the derivative checks at `z`.
    pub fn derivative_points(z: DiskPoint) -> Result<Vec<Complex64>> {
        recorded(|u| {
            wirtinger_richardson(u, z, DEFAULT_H)?;
            radial_angular_richardson(u, z, DEFAULT_H)?;
            Ok(())
        })
    }

    /// Prepares every point used by the checks on `z_grid` and `r_grid`.
    pub fn prepare_grids(&mut self, z_grid: &[DiskPoint], r_grid: &[f64]) -> Result<()> {
        let mut pts: Vec<Complex64> = z_grid.iter().map(|z| z.z()).collect();
        for z in z_grid {
            pts.extend(Self::derivative_points(*z)?);
        }
        for &r in r_grid {
            for w in circle_points(r) {
                pts.push(w);
                pts.extend(Self::derivative_points(DiskPoint::new(w)?)?);
            }
        }
        self.prepare(&pts)
    }

    /// The solution `u` for boundary `f` at `z`.
    pub fn eval(&self, f: &BoundaryFunction, z: Complex64) -> Result<Complex64> {
        let combine = |m: &[Complex64], order: usize| {
            f.fourier()
                .iter()
                .map(|(&k, &c)| c * m[(k + order as i64) as usize])
                .sum()
        };
        if f.order() <= self.order {
            if let Some(m) = self.table.get(&key(z)) {
                return Ok(combine(m, self.order));
            }
        }
        let order = f.order().max(self.order);
        Ok(combine(
            &poisson_moments(&self.params, z, self.nodes, order)?,
            order,
        ))
    }

    pub fn derivatives(&self, f: &BoundaryFunction, z: DiskPoint) -> Result<Derivatives> {
        let u = |w: Complex64| self.eval(f, w);
        let (uz, uzb) = wirtinger_richardson(u, z, DEFAULT_H)?;
        let (ur, ut) = radial_angular_richardson(u, z, DEFAULT_H)?;
        Ok(Derivatives { ur, ut, uz, uzb })
    }

    fn memo(&self, key: String, f: impl FnOnce() -> Result<f64>) -> Result<f64> {
        if let Some(v) = self.memo.lock().expect("memo lock").get(&key) {
            return Ok(*v);
        }
        let v = f()?;
        self.memo.lock().expect("memo lock").insert(key, v);
        Ok(v)
    }

    fn growth_c(&self, hp: HolderPair, r: f64) -> Result<f64> {
        self.memo(format!("growth/{hp}/{r}"), || {
            bounds::growth_constant(&self.params, hp, Radius::At(r))
        })
    }

    fn partial_c(&self, hp: HolderPair, which: Partial, r: f64) -> Result<f64> {
        self.memo(format!("partial/{hp}/{which:?}/{r}"), || {
            bounds::partial_constant(&self.params, hp, which, Radius::At(r))
        })
    }

    fn means_c(&self, which: Partial, r: f64) -> Result<f64> {
        self.memo(format!("means/{which:?}/{r}"), || {
            bounds::means_constant(&self.params, which, Radius::At(r))
        })
    }

    /// `|u(z)| <= A(r) ‖f‖_p / (1-r²)^{1/p}`.
    pub fn growth(
        &self,
        f: &BoundaryFunction,
        hp: HolderPair,
        z_grid: &[DiskPoint],
    ) -> Result<AuditResult> {
        let norm = f.lp_norm(hp.p());
        let mut cases = Vec::with_capacity(z_grid.len());
        for (i, z) in z_grid.iter().enumerate() {
            let r = z.r();
            let bound = self.growth_c(hp, r)? * norm / (1.0 - r * r).powf(hp.inv_p());
            cases.push(AuditCase::upper(
                format!("z{i}"),
                r,
                bound,
                self.eval(f, z.z())?.norm(),
            ));
        }
        Ok(AuditResult::new("growth", VALUE_TOL, cases))
    }

    fn means_of(&self, f: &BoundaryFunction, hp: HolderPair, r: f64) -> Result<f64> {
        let vals = circle_points(r)
            .into_iter()
            .map(|w| Ok(self.eval(f, w)?.norm()))
            .collect::<Result<Vec<f64>>>()?;
        Ok(lp_mean(&vals, hp))
    }

    /// `M_p(r, u) <= |c| F(-(α+β)/2, -(α+β)/2; 1; r²) ‖f‖_p`.
    pub fn integral_means(
        &self,
        f: &BoundaryFunction,
        hp: HolderPair,
        r_grid: &[f64],
    ) -> Result<AuditResult> {
        let norm = f.lp_norm(hp.p());
        let mut cases = Vec::with_capacity(r_grid.len());
        for (i, &r) in r_grid.iter().enumerate() {
            let bound = bounds::mp_growth_factor(&self.params, r)? * norm;
            cases.push(AuditCase::upper(
                format!("r{i}"),
                r,
                bound,
                self.means_of(f, hp, r)?,
            ));
        }
        Ok(AuditResult::new("integral_means", VALUE_TOL, cases))
    }

    /// Equality in the integral-means bound for a constant boundary.
    pub fn means_sharpness(
        &self,
        f: &BoundaryFunction,
        hp: HolderPair,
        r_grid: &[f64],
    ) -> Result<AuditResult> {
        if f.fourier()
            .iter()
            .any(|(&k, c)| k != 0 && *c != Complex64::default())
        {
            return Err(Error::Regime(
                "sharpness witness needs a constant boundary".into(),
            ));
        }
        let norm = f.lp_norm(hp.p());
        let mut cases = Vec::with_capacity(r_grid.len());
        for (i, &r) in r_grid.iter().enumerate() {
            let bound = bounds::mp_growth_factor(&self.params, r)? * norm;
            let m = self.means_of(f, hp, r)?;
            let gap = (bound - m).abs() / bound.abs().max(1.0);
            cases.push(AuditCase {
                id: format!("r{i}"),
                r,
                bound,
                observed: m,
                margin: -gap,
            });
        }
        Ok(AuditResult::new(
            "integral_means_sharpness",
            VALUE_TOL,
            cases,
        ))
    }

    /// `|u_z| + |u_z̄| <= B(r) ‖f‖_p / (1-r²)^{1+1/p}`.
    pub fn distortion(
        &self,
        f: &BoundaryFunction,
        hp: HolderPair,
        z_grid: &[DiskPoint],
    ) -> Result<AuditResult> {
        let norm = f.lp_norm(hp.p());
        let mut cases = Vec::with_capacity(z_grid.len());
        for (i, z) in z_grid.iter().enumerate() {
            let r = z.r();
            let b = self.memo(format!("distortion/{hp}/{r}"), || {
                bounds::distortion_constant(&self.params, hp, Radius::At(r))
            })?;
            let d = self.derivatives(f, *z)?;
            let bound = b * norm / (1.0 - r * r).powf(1.0 + hp.inv_p());
            cases.push(AuditCase::upper(
                format!("z{i}"),
                r,
                bound,
                d.uz.norm() + d.uzb.norm(),
            ));
        }
        Ok(AuditResult::new("distortion", DERIV_TOL, cases))
    }

    /// `|u_r|`, `|u_θ|`, `|u_z|`, `|u_z̄|` against `C`, `D`, `E` over `(1-r²)^{1+1/p}`.
    pub fn partials(
        &self,
        f: &BoundaryFunction,
        hp: HolderPair,
        z_grid: &[DiskPoint],
    ) -> Result<AuditResult> {
        let norm = f.lp_norm(hp.p());
        let mut cases = Vec::with_capacity(4 * z_grid.len());
        for (i, z) in z_grid.iter().enumerate() {
            let r = z.r();
            let d = self.derivatives(f, *z)?;
            let scale = norm / (1.0 - r * r).powf(1.0 + hp.inv_p());
            for (which, v) in [
                (Partial::Radial, d.ur),
                (Partial::Angular, d.ut),
                (Partial::Wirtinger, d.uz),
                (Partial::WirtingerConj, d.uzb),
            ] {
                let bound = self.partial_c(hp, which, r)? * scale;
                cases.push(AuditCase::upper(
                    format!("{}@z{i}", partial_label(which)),
                    r,
                    bound,
                    v.norm(),
                ));
            }
        }
        Ok(AuditResult::new("partials", DERIV_TOL, cases))
    }

    /// `M_p(r, ∂u) <= K(r) ‖f‖_p / (1-r²)` for the four derivatives.
    pub fn means_partials(
        &self,
        f: &BoundaryFunction,
        hp: HolderPair,
        r_grid: &[f64],
    ) -> Result<AuditResult> {
        let norm = f.lp_norm(hp.p());
        let mut cases = Vec::with_capacity(4 * r_grid.len());
        for (i, &r) in r_grid.iter().enumerate() {
            let mut vals = [const { Vec::new() }; 4];
            for w in circle_points(r) {
                let d = self.derivatives(f, DiskPoint::new(w)?)?;
                for (slot, v) in vals.iter_mut().zip([d.ur, d.ut, d.uz, d.uzb]) {
                    slot.push(v.norm());
                }
            }
            for (which, v) in PARTIALS.iter().zip(&vals) {
                let bound = self.means_c(*which, r)? * norm / (1.0 - r * r);
                cases.push(AuditCase::upper(
                    format!("{}@r{i}", partial_label(*which)),
                    r,
                    bound,
                    lp_mean(v, hp),
                ));
            }
        }
        Ok(AuditResult::new("means_partials", DERIV_TOL, cases))
    }
}

const PARTIALS: [Partial; 4] = [
    Partial::Radial,
    Partial::Angular,
    Partial::Wirtinger,
    Partial::WirtingerConj,
];

fn partial_label(which: Partial) -> &'static str {
    match which {
        Partial::Radial => "u_r",
        Partial::Angular => "u_theta",
        Partial::Wirtinger => "u_z",
        Partial::WirtingerConj => "u_zbar",
    }
}

fn lp_mean(vals: &[f64], hp: HolderPair) -> f64 {
    match hp {
        HolderPair::Infinity => vals.iter().copied().fold(0.0, f64::max),
        _ => {
            let p = hp.p();
            (vals.iter().map(|v| v.powf(p)).sum::<f64>() / vals.len() as f64).powf(1.0 / p)
        }
    }
}

fn single(
    p: &AlphaBeta,
    f: &BoundaryFunction,
    z_grid: &[DiskPoint],
    r_grid: &[f64],
) -> Result<Auditor> {
    let mut a = Auditor::new(*p, AUDIT_NODES, f.order(), Exec::default())?;
    a.prepare_grids(z_grid, r_grid)?;
    Ok(a)
}

pub fn check_growth(
    p: &AlphaBeta,
    f: &BoundaryFunction,
    hp: HolderPair,
    z_grid: &[DiskPoint],
) -> Result<AuditResult> {
    let mut a = Auditor::new(*p, AUDIT_NODES, f.order(), Exec::default())?;
    a.prepare(&z_grid.iter().map(|z| z.z()).collect::<Vec<_>>())?;
    a.growth(f, hp, z_grid)
}

pub fn check_integral_means(
    p: &AlphaBeta,
    f: &BoundaryFunction,
    hp: HolderPair,
    r_grid: &[f64],
) -> Result<AuditResult> {
    let mut a = Auditor::new(*p, AUDIT_NODES, f.order(), Exec::default())?;
    a.prepare(
        &r_grid
            .iter()
            .flat_map(|&r| circle_points(r))
            .collect::<Vec<_>>(),
    )?;
    a.integral_means(f, hp, r_grid)
}

pub fn check_distortion(
    p: &AlphaBeta,
    f: &BoundaryFunction,
    hp: HolderPair,
    z_grid: &[DiskPoint],
) -> Result<AuditResult> {
    single(p, f, z_grid, &[])?.distortion(f, hp, z_grid)
}

pub fn check_partials(
    p: &AlphaBeta,
    f: &BoundaryFunction,
    hp: HolderPair,
    z_grid: &[DiskPoint],
) -> Result<AuditResult> {
    single(p, f, z_grid, &[])?.partials(f, hp, z_grid)
}

pub fn check_means_partials(
    p: &AlphaBeta,
    f: &BoundaryFunction,
    hp: HolderPair,
    r_grid: &[f64],
) -> Result<AuditResult> {
    single(p, f, &[], r_grid)?.means_partials(f, hp, r_grid)
}

// ---------------------------------------------------------------- lemmas

fn monotone_cases(label: &str, t_grid: &[f64], vals: &[f64], direction: f64) -> Vec<AuditCase> {
    t_grid
        .windows(2)
        .zip(vals.windows(2))
        .map(|(t, v)| {
            let step = direction * (v[1] - v[0]) / v[0].abs().max(1.0);
            AuditCase {
                id: format!("{label}@t={}", t[1]),
                r: t[1],
                bound: v[0],
                observed: v[1],
                margin: step,
            }
        })
        .collect()
}

/// Monotonicity of `F_k/F_1` and `E_k/F_1` in each parameter regime, where
/// `F_k(t) = F(-α, k-β; k+1; t)` and `E_k(t) = F(-β, k-α; k+1; t)`.
///
/// Returns a regime error when no regime covers the parameters.
pub fn check_hypergeometric_ratio_lemma(
    p: &AlphaBeta,
    k: u32,
    t_grid: &[f64],
) -> Result<AuditResult> {
    let (a, b) = (p.alpha(), p.beta());
    let kf = k as f64;
    let fk = |t: f64| hyp2f1(-a, kf - b, kf + 1.0, t);
    let ek = |t: f64| hyp2f1(-b, kf - a, kf + 1.0, t);
    let f1 = |t: f64| hyp2f1(-a, 1.0 - b, 2.0, t);
    let series =
        |g: &dyn Fn(f64) -> Result<f64>| t_grid.iter().map(|&t| g(t)).collect::<Result<Vec<f64>>>();
    let mut cases = Vec::new();
    let mut covered = false;
    if a == 0.0 || k == 1 {
        covered = true;
        for (&t, v) in t_grid.iter().zip(series(&|t| Ok(fk(t)? / f1(t)?))?) {
            cases.push(AuditCase {
                id: format!("F_k/F_1=1@t={t}"),
                r: t,
                bound: 1.0,
                observed: v,
                margin: -(v - 1.0).abs(),
            });
        }
    }
    if a == 0.0 && k > 1 {
        let dir = if b <= 0.0 { 1.0 } else { -1.0 };
        let vals = series(&ek)?;
        if b == 0.0 {
            cases.extend(vals.iter().zip(t_grid).map(|(v, &t)| AuditCase {
                id: format!("E_k=1@t={t}"),
                r: t,
                bound: 1.0,
                observed: *v,
                margin: -(v - 1.0).abs(),
            }));
        } else {
            cases.extend(monotone_cases("E_k monotone", t_grid, &vals, dir));
        }
    }
    if a < 0.0 && a.fract() != 0.0 && -1.0 < b && b < 1.0 && k > 1 {
        covered = true;
        cases.extend(monotone_cases(
            "F_k/F_1 increasing",
            t_grid,
            &series(&|t| Ok(fk(t)? / f1(t)?))?,
            1.0,
        ));
    }
    if -1.0 < b && b < a && a < 0.0 && k > 1 {
        covered = true;
        cases.extend(monotone_cases(
            "E_k/F_1 increasing",
            t_grid,
            &series(&|t| Ok(ek(t)? / f1(t)?))?,
            1.0,
        ));
    }
    if !covered {
        return Err(Error::Regime(format!(
            "no monotone-ratio regime covers ({a}, {b}), k = {k}"
        )));
    }
    Ok(AuditResult::new("hypergeometric_ratio", LEMMA_TOL, cases))
}

/// Parameters of the oscillatory integrals `∫ (A + B|cos|)^k g^m`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Oscillatory {
    pub m: f64,
    pub k: f64,
    pub a: f64,
    pub b: f64,
}

fn cos_kinks(shift: f64) -> [f64; 2] {
    [shift + FRAC_PI_2, shift + 1.5 * PI]
}

/// `∫ |cos(b - x)|^k g(b)^m db` over a period.
pub fn cos_power_integral(o: Oscillatory, r: f64, x: f64) -> Result<f64> {
    Ok(weighted_circle_integral(r, o.m, &cos_kinks(x), |b| (b - x).cos().abs().powf(o.k))?.value)
}

/// `L(y) = ∫ (A + B|cos t|)^k g(t - y)^m dt` over a period.
pub fn offset_cos_integral(o: Oscillatory, r: f64, y: f64) -> Result<f64> {
    Ok(weighted_circle_integral(r, o.m, &cos_kinks(-y), |b| {
        (o.a + o.b * (b + y).cos().abs()).powf(o.k)
    })?
    .value)
}

/// `∫ (A + B|cos(b - x)|)^k g(b)^m db` over a period.
pub fn offset_cos_power_integral(o: Oscillatory, r: f64, x: f64) -> Result<f64> {
    Ok(weighted_circle_integral(r, o.m, &cos_kinks(x), |b| {
        (o.a + o.b * (b - x).cos().abs()).powf(o.k)
    })?
    .value)
}

fn claimed_shift(m: f64) -> f64 {
    if m > 1.0 {
        0.0
    } else {
        FRAC_PI_2
    }
}

/// `∫|cos(b-x)|^k g^m <= value at r = 1, x = 0` for `m > 1`, else at `x = π/2`.
pub fn check_cos_power_maximum(
    o: Oscillatory,
    r_grid: &[f64],
    x_grid: &[f64],
) -> Result<AuditResult> {
    let x0 = claimed_shift(o.m);
    let bound = cos_power_integral(o, 1.0, x0)?;
    let mut cases = Vec::new();
    for &r in r_grid {
        for &x in x_grid {
            cases.push(AuditCase::upper(
                format!("m={},k={},x={x}", o.m, o.k),
                r,
                bound,
                cos_power_integral(o, r, x)?,
            ));
        }
    }
    Ok(AuditResult::new("cos_power_maximum", LEMMA_TOL, cases))
}

/// Same claim for `∫(A + B|cos(b-x)|)^k g^m`.
pub fn check_offset_cos_power_maximum(
    o: Oscillatory,
    r_grid: &[f64],
    x_grid: &[f64],
) -> Result<AuditResult> {
    let x0 = claimed_shift(o.m);
    let bound = offset_cos_power_integral(o, 1.0, x0)?;
    let mut cases = Vec::new();
    for &r in r_grid {
        for &x in x_grid {
            let id = format!("m={},k={},A={},x={x}", o.m, o.k, o.a);
            cases.push(AuditCase::upper(
                id,
                r,
                bound,
                offset_cos_power_integral(o, r, x)?,
            ));
        }
    }
    Ok(AuditResult::new(
        "offset_cos_power_maximum",
        LEMMA_TOL,
        cases,
    ))
}

/// Claimed maximizer of `L(y)`: `y = 0` for `m < 1`, `y = π/2` for `m >= 1`,
/// and `L` constant for `m = 1`; compared with a scan over `y_grid`.
pub fn check_offset_cos_maximizer(
    o: Oscillatory,
    r_grid: &[f64],
    y_grid: &[f64],
) -> Result<AuditResult> {
    let mut ys: Vec<f64> = y_grid.to_vec();
    ys.extend([0.0, FRAC_PI_2]);
    ys.sort_by(f64::total_cmp);
    ys.dedup();
    let mut cases = Vec::new();
    for &r in r_grid {
        let vals = ys
            .iter()
            .map(|&y| offset_cos_integral(o, r, y))
            .collect::<Result<Vec<f64>>>()?;
        let (mut hi, mut at) = (f64::NEG_INFINITY, 0.0);
        for (&y, &v) in ys.iter().zip(&vals) {
            if v > hi {
                hi = v;
                at = y;
            }
        }
        let lo = vals.iter().copied().fold(f64::INFINITY, f64::min);
        let id = format!("m={},k={},A={},scan max at y={at}", o.m, o.k, o.a);
        if o.m == 1.0 {
            cases.push(AuditCase {
                id,
                r,
                bound: lo,
                observed: hi,
                margin: -(hi - lo) / hi.abs().max(1.0),
            });
        } else {
            let claimed = if o.m < 1.0 {
                vals[ys.iter().position(|&y| y == 0.0).unwrap()]
            } else {
                vals[ys.iter().position(|&y| y == FRAC_PI_2).unwrap()]
            };
            cases.push(AuditCase::upper(id, r, claimed, hi));
        }
    }
    Ok(AuditResult::new("offset_cos_maximizer", LEMMA_TOL, cases))
}

/// The three maximum claims on one parameter set, merged.
pub fn check_oscillatory_maximum_lemmas(
    o: Oscillatory,
    r_grid: &[f64],
    x_grid: &[f64],
) -> Result<AuditResult> {
    let parts = vec![
        check_cos_power_maximum(o, r_grid, x_grid)?,
        check_offset_cos_maximizer(o, r_grid, x_grid)?,
        check_offset_cos_power_maximum(o, r_grid, x_grid)?,
    ];
    let mut cases = Vec::new();
    for p in parts {
        cases.extend(p.cases.into_iter().map(|c| AuditCase {
            id: format!("{}:{}", p.name, c.id),
            ..c
        }));
    }
    Ok(AuditResult::new("oscillatory_maximum", LEMMA_TOL, cases))
}

/// `∫_0^π sin^{μ-1}t (1+r²-2r cos t)^{-ν} dt = B(μ/2, 1/2) F(ν, ν+(1-μ)/2; (1+μ)/2; r²)`
/// and `∫_0^π (1+r²-2r cos t)^{-ν} dt = π F(ν, ν; 1; r²)` for `0 <= r < 1`.
pub fn check_integral_identities(mu: f64, nu: f64, r_grid: &[f64]) -> Result<AuditResult> {
    if !(mu > 0.0) {
        return Err(Error::Domain(format!("mu = {mu} must be positive")));
    }
    let mut cases = Vec::new();
    for &r in r_grid {
        if !(0.0..1.0).contains(&r) {
            return Err(Error::Domain(format!("radius {r} outside [0, 1)")));
        }
        let w = |da: f64| {
            let s = (0.5 * da).sin();
            ((1.0 - r) * (1.0 - r) + 4.0 * r * s * s).powf(-nu)
        };
        let sin = |t: f64, da: f64, db: f64| if t < FRAC_PI_2 { da.sin() } else { db.sin() };
        let lhs = tanh_sinh(0.0, PI, 1e-13, |t, da, db| {
            sin(t, da, db).powf(mu - 1.0) * w(da)
        })?
        .value;
        let rhs =
            beta_fn(0.5 * mu, 0.5)? * hyp2f1(nu, nu + 0.5 * (1.0 - mu), 0.5 * (1.0 + mu), r * r)?;
        let gap = (lhs - rhs).abs() / rhs.abs().max(1.0);
        cases.push(AuditCase {
            id: format!("sin_power,mu={mu},nu={nu}"),
            r,
            bound: rhs,
            observed: lhs,
            margin: -gap,
        });
        let lhs = tanh_sinh(0.0, PI, 1e-13, |_, da, _| w(da))?.value;
        let rhs = PI * hyp2f1(nu, nu, 1.0, r * r)?;
        let gap = (lhs - rhs).abs() / rhs.abs().max(1.0);
        cases.push(AuditCase {
            id: format!("inverse_power,nu={nu}"),
            r,
            bound: rhs,
            observed: lhs,
            margin: -gap,
        });
    }
    Ok(AuditResult::new("integral_identities", VALUE_TOL, cases))
}

/// Steps used for the residual order.
pub const RESIDUAL_STEPS: [f64; 3] = [1e-2, 5e-3, 2.5e-3];
/// Accepted deviation of the observed residual order from 2.
pub const ORDER_TOL: f64 = 0.3;

/// Observed orders `log2(|R(h)| / |R(h/2)|)` of the operator residual, or
/// `None` when the residual is at rounding level (an exact discrete solution).
pub fn residual_orders<F>(p: &AlphaBeta, u: F, z: DiskPoint) -> Result<Option<[f64; 2]>>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    let res = RESIDUAL_STEPS
        .iter()
        .map(|&h| Ok(operator_residual(p, &u, z, h)?.norm()))
        .collect::<Result<Vec<f64>>>()?;
    if res[0] < 1e-10 {
        return Ok(None);
    }
    Ok(Some([(res[0] / res[1]).log2(), (res[1] / res[2]).log2()]))
}

type Field<'a> = dyn Fn(Complex64) -> Result<Complex64> + 'a;

fn interior_points() -> Vec<DiskPoint> {
    let mut pts = Vec::new();
    for r in [0.2, 0.35, 0.5, 0.65, 0.8] {
        for th in [0.4, 3.5] {
            pts.push(DiskPoint::from_polar(r, th).expect("interior"));
        }
    }
    pts
}

/// Kernel mean `(1/2π)∫|P|` against its closed form on `r = 0.1, …, 0.9`, and
/// second-order decay of the operator residual for both the Poisson integral
/// and the series expansion of `f` at ten interior points.
pub fn check_kernel_mean_and_residual(
    p: &AlphaBeta,
    f: &BoundaryFunction,
    samples: usize,
) -> Result<AuditResult> {
    let mut cases = Vec::new();
    for i in 1..=9 {
        let r = i as f64 / 10.0;
        let q = kernel_abs_mean(p, r, samples)?;
        let c = kernel_abs_mean_closed(p, r)?;
        cases.push(AuditCase {
            id: format!("kernel_mean@r{i}"),
            r,
            bound: c,
            observed: q,
            margin: -(q - c).abs() / c.abs().max(1.0),
        });
    }
    let solver = PoissonSolver::new(p, f, samples)?;
    let coeffs = coefficients_from_boundary(p, f)?;
    for (i, z) in interior_points().into_iter().enumerate() {
        let paths: [(&str, Box<Field>); 2] = [
            ("solver", Box::new(|w| solver.eval(w))),
            (
                "series",
                Box::new(|w| evaluate_expansion(p, &coeffs, DiskPoint::new(w)?)),
            ),
        ];
        for (label, u) in paths {
            let orders = residual_orders(p, u, z)?;
            for (j, o) in orders.map_or([2.0, 2.0], |o| o).into_iter().enumerate() {
                let id = format!("residual_order/{label}@z{i}/{j}");
                cases.push(AuditCase {
                    id,
                    r: z.r(),
                    bound: 2.0,
                    observed: o,
                    margin: ORDER_TOL - (o - 2.0).abs(),
                });
            }
        }
    }
    Ok(AuditResult::new(
        "kernel_mean_and_residual",
        VALUE_TOL,
        cases,
    ))
}

/// Caller-asserted properties of the map whose coefficients are audited.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CoefficientFlags {
    pub typically_real: bool,
    pub starlike: bool,
    pub in_s0: bool,
    /// The map takes the disk onto itself.
    pub onto_disk: bool,
}

/// Evaluates the coefficient inequalities selected by `flags` on `c`.
pub fn check_coefficient_inequalities(
    p: &AlphaBeta,
    c: &SeriesCoefficients,
    flags: CoefficientFlags,
) -> Result<AuditResult> {
    let (a, b) = (p.alpha(), p.beta());
    let order = c.order() as u32;
    let mut cases = Vec::new();
    let nan = f64::NAN;
    if flags.typically_real {
        for k in 2..=order {
            let kf = k as f64;
            let combo = c.get(k as i64) * (gamma(1.0 + a)? / gamma(kf + 1.0 + a)?)
                - c.get(-(k as i64)) * (gamma(1.0 + b)? / gamma(kf + 1.0 + b)?);
            let bound =
                bounds::coefficient_bound(p, CoefficientKind::TypicallyReal, k, Some(c.get(-1)))?;
            cases.push(AuditCase::upper(
                format!("typically_real@k{k}"),
                nan,
                bound,
                combo.norm(),
            ));
        }
    }
    if flags.starlike {
        for k in 2..=order {
            let bk = bounds::coefficient_bound(p, CoefficientKind::StarlikeCk, k, None)?;
            cases.push(AuditCase::upper(
                format!("starlike_ck@k{k}"),
                nan,
                bk,
                c.get(k as i64).norm(),
            ));
            let bmk = bounds::coefficient_bound(p, CoefficientKind::StarlikeCmk, k, None)?;
            cases.push(AuditCase::upper(
                format!("starlike_cmk@k{k}"),
                nan,
                bmk,
                c.get(-(k as i64)).norm(),
            ));
        }
    }
    if flags.in_s0 {
        if -1.0 < b && b < a && a < 0.0 && order >= 2 {
            let bm2 = bounds::coefficient_bound(p, CoefficientKind::CMinus2, 2, None)?;
            cases.push(AuditCase::upper("c_minus2", nan, bm2, c.get(-2).norm()));
            let b2 = bounds::coefficient_bound(p, CoefficientKind::C2, 2, None)?;
            cases.push(AuditCase::upper("c2", nan, b2, c.get(2).norm()));
        }
        for k in 2..=order {
            let bk = bounds::coefficient_bound(p, CoefficientKind::ConjectureCk, k, None)?;
            cases.push(AuditCase::upper(
                format!("conjecture_ck@k{k}"),
                nan,
                bk,
                c.get(k as i64).norm(),
            ));
            let bmk = bounds::coefficient_bound(p, CoefficientKind::ConjectureCmk, k, None)?;
            cases.push(AuditCase::upper(
                format!("conjecture_cmk@k{k}"),
                nan,
                bmk,
                c.get(-(k as i64)).norm(),
            ));
        }
    }
    if flags.onto_disk {
        let h = bounds::heinz_functional(p, c.get(0), c.get(1), c.get(-1));
        cases.push(AuditCase::lower("heinz", nan, bounds::heinz_rhs(), h));
    }
    Ok(AuditResult::new(
        "coefficient_inequalities",
        VALUE_TOL,
        cases,
    ))
}

// ----------------------------------------------------------------- suites

/// Parameter pairs of the standard suite.
pub const STANDARD_PARAMS: [(f64, f64); 5] =
    [(0.0, 0.0), (0.5, 0.5), (-0.5, 1.0), (0.3, -0.2), (0.0, 1.0)];

/// Names accepted by [`run_suite`].
pub const SUITES: [&str; 12] = [
    "growth",
    "integral_means",
    "means",
    "distortion",
    "partials",
    "means_partials",
    "inequalities",
    "sharpness",
    "lemmas",
    "kernel",
    "identities",
    "coefficients",
];

pub fn standard_exponents() -> Vec<HolderPair> {
    vec![
        HolderPair::One,
        HolderPair::new(2.0).expect("p = 2"),
        HolderPair::new(4.0).expect("p = 4"),
        HolderPair::Infinity,
    ]
}

/// `r ∈ {0.1, 0.3, 0.5, 0.7, 0.9}` times `θ ∈ {0.3, 2.2, 4.4}`.
pub fn standard_z_grid() -> Vec<DiskPoint> {
    let mut pts = Vec::new();
    for r in standard_r_grid() {
        for th in [0.3, 2.2, 4.4] {
            pts.push(DiskPoint::from_polar(r, th).expect("interior"));
        }
    }
    pts
}

pub fn standard_r_grid() -> Vec<f64> {
    vec![0.1, 0.3, 0.5, 0.7, 0.9]
}

/// `t = 0.01, 0.02, …, 0.99`.
pub fn standard_t_grid() -> Vec<f64> {
    (1..=99).map(|i| i as f64 / 100.0).collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteConfig {
    pub params: Vec<(f64, f64)>,
    pub exponents: Vec<HolderPair>,
    pub seed: u64,
    pub boundaries: usize,
    pub max_order: usize,
    pub nodes: usize,
    pub exec: Exec,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            params: STANDARD_PARAMS.to_vec(),
            exponents: standard_exponents(),
            seed: 1,
            boundaries: 100,
            max_order: 8,
            nodes: AUDIT_NODES,
            exec: Exec::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Inequality {
    Growth,
    IntegralMeans,
    Distortion,
    Partials,
    MeansPartials,
}

impl Inequality {
    const ALL: [Inequality; 5] = [
        Self::Growth,
        Self::IntegralMeans,
        Self::Distortion,
        Self::Partials,
        Self::MeansPartials,
    ];

    fn name(self) -> &'static str {
        match self {
            Self::Growth => "growth",
            Self::IntegralMeans => "integral_means",
            Self::Distortion => "distortion",
            Self::Partials => "partials",
            Self::MeansPartials => "means_partials",
        }
    }

    fn tolerance(self) -> f64 {
        match self {
            Self::Growth | Self::IntegralMeans => VALUE_TOL,
            _ => DERIV_TOL,
        }
    }

    fn run(
        self,
        a: &Auditor,
        f: &BoundaryFunction,
        hp: HolderPair,
        z: &[DiskPoint],
        r: &[f64],
    ) -> Result<AuditResult> {
        match self {
            Self::Growth => a.growth(f, hp, z),
            Self::IntegralMeans => a.integral_means(f, hp, r),
            Self::Distortion => a.distortion(f, hp, z),
            Self::Partials => a.partials(f, hp, z),
            Self::MeansPartials => a.means_partials(f, hp, r),
        }
    }
}

fn label(p: &AlphaBeta, hp: HolderPair) -> String {
    format!("a={},b={},p={hp}", p.alpha(), p.beta())
}

fn inequality_suite(checks: &[Inequality], cfg: &SuiteConfig) -> Result<Vec<AuditResult>> {
    let z_grid = standard_z_grid();
    let r_grid = standard_r_grid();
    let fs = random_suite(cfg.seed, cfg.boundaries, cfg.max_order);
    let indexed: Vec<(usize, &BoundaryFunction)> = fs.iter().enumerate().collect();
    let mut parts: Vec<Vec<(String, AuditResult)>> = vec![Vec::new(); checks.len()];
    for &(a, b) in &cfg.params {
        let p = make_params(a, b)?;
        let mut auditor = Auditor::new(p, cfg.nodes, cfg.max_order, cfg.exec)?;
        let needs_derivs = checks
            .iter()
            .any(|c| !matches!(c, Inequality::Growth | Inequality::IntegralMeans));
        if needs_derivs {
            let r = if checks.contains(&Inequality::MeansPartials) {
                r_grid.clone()
            } else {
                Vec::new()
            };
            auditor.prepare_grids(&z_grid, &r)?;
        }
        if checks.contains(&Inequality::IntegralMeans) {
            auditor.prepare(
                &r_grid
                    .iter()
                    .flat_map(|&r| circle_points(r))
                    .collect::<Vec<_>>(),
            )?;
        }
        auditor.prepare(&z_grid.iter().map(|z| z.z()).collect::<Vec<_>>())?;
        for (slot, check) in parts.iter_mut().zip(checks) {
            for &hp in &cfg.exponents {
                if *check == Inequality::Distortion && p.beta() <= -1.0 {
                    continue;
                }
                let results = exec::try_map(cfg.exec, &indexed, |(i, f)| {
                    Ok::<_, Error>((
                        format!("{},f{i}", label(&p, hp)),
                        check.run(&auditor, f, hp, &z_grid, &r_grid)?,
                    ))
                })?;
                slot.extend(results);
            }
        }
    }
    Ok(checks
        .iter()
        .zip(parts)
        .map(|(c, part)| AuditResult::summarize(c.name(), c.tolerance(), part).with_seed(cfg.seed))
        .collect())
}

fn sharpness_suite(cfg: &SuiteConfig) -> Result<Vec<AuditResult>> {
    let f = BoundaryFunction::constant(Complex64::new(3.0, 0.0));
    let r_grid = standard_r_grid();
    let mut parts = Vec::new();
    for &(a, b) in &cfg.params {
        let p = make_params(a, b)?;
        let mut auditor = Auditor::new(p, cfg.nodes, 0, cfg.exec)?;
        auditor.prepare(
            &r_grid
                .iter()
                .flat_map(|&r| circle_points(r))
                .collect::<Vec<_>>(),
        )?;
        for &hp in &cfg.exponents {
            parts.push((label(&p, hp), auditor.means_sharpness(&f, hp, &r_grid)?));
        }
    }
    Ok(vec![AuditResult::summarize(
        "integral_means_sharpness",
        VALUE_TOL,
        parts,
    )])
}

fn lemma_suite() -> Result<Vec<AuditResult>> {
    let t_grid = standard_t_grid();
    let mut ratio = Vec::new();
    for (a, b, ks) in [
        (0.0, 0.5, vec![1, 2, 3]),
        (0.0, -0.5, vec![2, 4]),
        (-0.5, 0.5, vec![2, 3, 5]),
        (-0.7, 0.4, vec![2, 3]),
        (-0.3, -0.6, vec![2, 3, 4]),
    ] {
        let p = make_params(a, b)?;
        for k in ks {
            ratio.push((
                format!("a={a},b={b},k={k}"),
                check_hypergeometric_ratio_lemma(&p, k, &t_grid)?,
            ));
        }
    }
    let r_grid = [0.2, 0.5, 0.8, 0.95, 1.0];
    let x_grid: Vec<f64> = (0..=32).map(|i| PI * i as f64 / 32.0).collect();
    let y_grid: Vec<f64> = (0..=32).map(|i| FRAC_PI_2 * i as f64 / 32.0).collect();
    let (mut cos_max, mut maximizer, mut offset_max) = (Vec::new(), Vec::new(), Vec::new());
    for m in [-0.5, 0.5, 1.0, 2.0, 3.0] {
        for k in [1.0, 2.0] {
            for a in [0.0, 1.0] {
                let o = Oscillatory { m, k, a, b: 1.0 };
                let id = format!("m={m},k={k},A={a}");
                if a == 0.0 {
                    cos_max.push((id.clone(), check_cos_power_maximum(o, &r_grid, &x_grid)?));
                }
                maximizer.push((
                    id.clone(),
                    check_offset_cos_maximizer(o, &r_grid[..4], &y_grid)?,
                ));
                offset_max.push((id, check_offset_cos_power_maximum(o, &r_grid, &x_grid)?));
            }
        }
    }
    Ok(vec![
        AuditResult::summarize("hypergeometric_ratio", LEMMA_TOL, ratio),
        AuditResult::summarize("cos_power_maximum", LEMMA_TOL, cos_max),
        AuditResult::summarize("offset_cos_maximizer", LEMMA_TOL, maximizer),
        AuditResult::summarize("offset_cos_power_maximum", LEMMA_TOL, offset_max),
        identity_suite()?,
    ])
}

fn identity_suite() -> Result<AuditResult> {
    let mut identities = Vec::new();
    for (mu, nu) in [
        (1.0, 0.0),
        (1.0, 1.0),
        (2.0, 0.5),
        (0.5, 0.3),
        (3.0, -0.7),
        (1.5, 1.2),
    ] {
        identities.push((
            format!("mu={mu},nu={nu}"),
            check_integral_identities(mu, nu, &[0.0, 0.3, 0.5, 0.8, 0.95])?,
        ));
    }
    Ok(AuditResult::summarize(
        "integral_identities",
        VALUE_TOL,
        identities,
    ))
}

fn kernel_suite(cfg: &SuiteConfig) -> Result<Vec<AuditResult>> {
    let f = random_suite(cfg.seed, 1, cfg.max_order).remove(0);
    let mut parts = Vec::new();
    for &(a, b) in &cfg.params {
        let p = make_params(a, b)?;
        parts.push((
            format!("a={a},b={b}"),
            check_kernel_mean_and_residual(&p, &f, DEFAULT_NODES)?,
        ));
    }
    Ok(vec![AuditResult::summarize(
        "kernel_mean_and_residual",
        VALUE_TOL,
        parts,
    )
    .with_seed(cfg.seed)])
}

/// Harmonic Koebe-type coefficients `c_k = (2k+1)(k+1)/6`, `c_{-k} = (2k-1)(k-1)/6`.
pub fn koebe_coefficients(order: usize) -> SeriesCoefficients {
    let mut map = BTreeMap::new();
    for k in 1..=order as i64 {
        let kf = k as f64;
        map.insert(k, Complex64::new((2.0 * kf + 1.0) * (kf + 1.0) / 6.0, 0.0));
        map.insert(-k, Complex64::new((2.0 * kf - 1.0) * (kf - 1.0) / 6.0, 0.0));
    }
    SeriesCoefficients::from_map(&map)
}

fn coefficient_suite(cfg: &SuiteConfig) -> Result<Vec<AuditResult>> {
    use rand::{Rng, SeedableRng};
    let mut parts = Vec::new();
    let p0 = make_params(0.0, 0.0)?;
    let starlike = CoefficientFlags {
        starlike: true,
        ..Default::default()
    };
    parts.push((
        "koebe".to_string(),
        check_coefficient_inequalities(&p0, &koebe_coefficients(8), starlike)?,
    ));
    let identity = SeriesCoefficients::from_map(&BTreeMap::from([(1, Complex64::new(1.0, 0.0))]));
    let onto = CoefficientFlags {
        onto_disk: true,
        ..Default::default()
    };
    parts.push((
        "identity".to_string(),
        check_coefficient_inequalities(&p0, &identity, onto)?,
    ));
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(cfg.seed);
    for &(a, b) in cfg.params.iter().chain(&[(-0.25, -0.5), (-0.3, -0.6)]) {
        let p = make_params(a, b)?;
        for flags in [
            CoefficientFlags {
                starlike: true,
                ..Default::default()
            },
            CoefficientFlags {
                in_s0: true,
                ..Default::default()
            },
            CoefficientFlags {
                typically_real: true,
                ..Default::default()
            },
        ] {
            let c = scaled_inside(&p, flags, &mut rng, 8)?;
            parts.push((
                format!("a={a},b={b},{flags:?}"),
                check_coefficient_inequalities(&p, &c, flags)?,
            ));
        }
        let _ = rng.gen::<u32>();
    }
    Ok(vec![AuditResult::summarize(
        "coefficient_inequalities",
        VALUE_TOL,
        parts,
    )
    .with_seed(cfg.seed)])
}

/// Random coefficients placed strictly inside the bounds selected by `flags`.
fn scaled_inside(
    p: &AlphaBeta,
    flags: CoefficientFlags,
    rng: &mut impl rand::Rng,
    order: u32,
) -> Result<SeriesCoefficients> {
    let mut map = BTreeMap::new();
    let phase = |rng: &mut dyn rand::RngCore| {
        Complex64::from_polar(1.0, 2.0 * PI * rand::Rng::gen::<f64>(rng))
    };
    let scale = |rng: &mut dyn rand::RngCore| 0.9 * rand::Rng::gen::<f64>(rng);
    map.insert(1, Complex64::new(1.0, 0.0));
    map.insert(-1, scale(rng) * phase(rng) * 0.5);
    let (a, b) = (p.alpha(), p.beta());
    let ordered = -1.0 < b && b < a && a < 0.0;
    for k in 2..=order {
        let ki = k as i64;
        let kf = k as f64;
        let (ck, cmk) = if flags.typically_real {
            let bound =
                bounds::coefficient_bound(p, CoefficientKind::TypicallyReal, k, Some(map[&-1]))?;
            let ck = scale(rng) * phase(rng);
            let target =
                ck * (gamma(1.0 + a)? / gamma(kf + 1.0 + a)?) - bound * scale(rng) * phase(rng);
            (ck, target * (gamma(kf + 1.0 + b)? / gamma(1.0 + b)?))
        } else {
            let (kp, km) = if flags.starlike {
                (CoefficientKind::StarlikeCk, CoefficientKind::StarlikeCmk)
            } else {
                (
                    CoefficientKind::ConjectureCk,
                    CoefficientKind::ConjectureCmk,
                )
            };
            let mut bp = bounds::coefficient_bound(p, kp, k, None)?;
            let mut bm = bounds::coefficient_bound(p, km, k, None)?;
            if flags.in_s0 && ordered && k == 2 {
                bp = bp.min(bounds::coefficient_bound(p, CoefficientKind::C2, 2, None)?);
                bm = bm.min(bounds::coefficient_bound(
                    p,
                    CoefficientKind::CMinus2,
                    2,
                    None,
                )?);
            }
            (bp * scale(rng) * phase(rng), bm * scale(rng) * phase(rng))
        };
        map.insert(ki, ck);
        map.insert(-ki, cmk);
    }
    Ok(SeriesCoefficients::from_map(&map))
}

/// Runs a named suite (see [`SUITES`]) or `all`.
pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<Vec<AuditResult>> {
    let one = |c: Inequality| inequality_suite(&[c], cfg);
    match name {
        "growth" => one(Inequality::Growth),
        "integral_means" => one(Inequality::IntegralMeans),
        "distortion" => one(Inequality::Distortion),
        "partials" => one(Inequality::Partials),
        "means_partials" => one(Inequality::MeansPartials),
        "means" => inequality_suite(&[Inequality::IntegralMeans, Inequality::MeansPartials], cfg),
        "inequalities" => inequality_suite(&Inequality::ALL, cfg),
        "sharpness" => sharpness_suite(cfg),
        "lemmas" => lemma_suite(),
        "kernel" => kernel_suite(cfg),
        "identities" => {
            let mut out = kernel_suite(cfg)?;
            out.push(identity_suite()?);
            Ok(out)
        }
        "coefficients" => coefficient_suite(cfg),
        "all" => {
            let mut out = inequality_suite(&Inequality::ALL, cfg)?;
            out.extend(sharpness_suite(cfg)?);
            out.extend(lemma_suite()?);
            out.extend(kernel_suite(cfg)?);
            out.extend(coefficient_suite(cfg)?);
            Ok(out)
        }
        _ => Err(Error::Parameter(format!(
            "unknown suite {name:?}; expected one of {SUITES:?} or \"all\""
        ))),
    }
}
