//! Boundary data on the unit circle.

use crate::error::{Error, Result};
use crate::json::fmt17;
use crate::quad::DEFAULT_NODES;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;
use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::io::Write;

/// Smallest grid used for `L^p` norms.
pub const MIN_NORM_NODES: usize = 1024;

/// A boundary function given by Fourier coefficients `f̂(k)`, `|k| <= order`,
/// optionally together with the uniform samples it was computed from.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryFunction {
    fourier: BTreeMap<i64, Complex64>,
    samples: Option<Vec<Complex64>>,
    order: usize,
}

/// `e^{-i 2π m / n}` on the exact grid angle.
fn root(m: usize, n: usize) -> Complex64 {
    Complex64::from_polar(1.0, -2.0 * PI * ((m % n) as f64) / n as f64)
}

/// DFT coefficients `(1/N) Σ_j f_j e^{-ik t_j}` for `|k| <= order`.
pub fn fourier_from_samples(
    samples: &[Complex64],
    order: usize,
) -> Result<BTreeMap<i64, Complex64>> {
    let n = samples.len();
    if n == 0 || 2 * order >= n {
        return Err(Error::Aliasing { order, samples: n });
    }
    let table: Vec<Complex64> = (0..n).map(|m| root(m, n)).collect();
    let mut out = BTreeMap::new();
    for k in -(order as i64)..=order as i64 {
        let kk = k.rem_euclid(n as i64) as usize;
        let sum: Complex64 = samples
            .iter()
            .enumerate()
            .map(|(j, f)| f * table[(kk * j) % n])
            .sum();
        out.insert(k, sum / n as f64);
    }
    Ok(out)
}

impl BoundaryFunction {
    /// Trigonometric polynomial `Σ f̂(k) e^{ikt}`.
    pub fn from_fourier(coeffs: BTreeMap<i64, Complex64>) -> Self {
        let order = coeffs
            .keys()
            .map(|k| k.unsigned_abs() as usize)
            .max()
            .unwrap_or(0);
        Self {
            fourier: coeffs,
            samples: None,
            order,
        }
    }

    /// Uniform samples at `t_j = 2πj/N` (`N` a power of two), band-limited to `order`.
    pub fn from_samples(samples: Vec<Complex64>, order: usize) -> Result<Self> {
        let n = samples.len();
        if !n.is_power_of_two() {
            return Err(Error::Format(format!(
                "{n} samples; a power of two is required"
            )));
        }
        let fourier = fourier_from_samples(&samples, order)?;
        Ok(Self {
            fourier,
            samples: Some(samples),
            order,
        })
    }

    pub fn constant(c: Complex64) -> Self {
        Self::from_fourier(BTreeMap::from([(0, c)]))
    }

    pub fn fourier(&self) -> &BTreeMap<i64, Complex64> {
        &self.fourier
    }

    /// `f̂(k)`, zero outside the stored range.
    pub fn coeff(&self, k: i64) -> Complex64 {
        self.fourier.get(&k).copied().unwrap_or_default()
    }

    pub fn samples(&self) -> Option<&[Complex64]> {
        self.samples.as_deref()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn eval(&self, t: f64) -> Complex64 {
        self.fourier
            .iter()
            .map(|(&k, c)| c * Complex64::from_polar(1.0, k as f64 * t))
            .sum()
    }

    /// Values on the grid `t_j = 2πj/n`; stored samples are reused when they match.
    pub fn sample(&self, n: usize) -> Vec<Complex64> {
        if let Some(s) = &self.samples {
            if s.len() == n {
                return s.clone();
            }
        }
        (0..n)
            .map(|j| {
                self.fourier
                    .iter()
                    .map(|(&k, c)| c * root(k.rem_euclid(n as i64) as usize * j, n).conj())
                    .sum()
            })
            .collect()
    }

    /// `((1/2π) ∫ |f|^p dt)^{1/p}`; `p = ∞` gives the grid maximum.
    pub fn lp_norm(&self, p: f64) -> f64 {
        self.lp_norm_with(p, DEFAULT_NODES)
    }

    pub fn lp_norm_with(&self, p: f64, nodes: usize) -> f64 {
        let n = nodes.max(MIN_NORM_NODES);
        let vals = self.sample(n);
        if p.is_infinite() {
            vals.iter().map(|v| v.norm()).fold(0.0, f64::max)
        } else {
            let mean = vals.iter().map(|v| v.norm().powf(p)).sum::<f64>() / n as f64;
            mean.powf(1.0 / p)
        }
    }

    /// `Σ |f̂(k)|²`.
    pub fn energy(&self) -> f64 {
        self.fourier.values().map(|c| c.norm_sqr()).sum()
    }

    pub fn conj(&self) -> Self {
        Self {
            fourier: self.fourier.iter().map(|(&k, c)| (-k, c.conj())).collect(),
            samples: self
                .samples
                .as_ref()
                .map(|s| s.iter().map(|v| v.conj()).collect()),
            order: self.order,
        }
    }

    /// Parses `{"fourier": {"k": [re, im], ...}}` or
    /// `{"samples": [[re, im], ...]}`, each with an optional `"order"`.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: Value = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        let obj = doc
            .as_object()
            .ok_or_else(|| Error::Format("top level must be an object".into()))?;
        let order = match obj.get("order") {
            None => None,
            Some(v) => Some(
                v.as_u64()
                    .ok_or_else(|| Error::Format("order must be a non-negative integer".into()))?
                    as usize,
            ),
        };
        match (obj.get("fourier"), obj.get("samples")) {
            (Some(f), None) => {
                let map = f
                    .as_object()
                    .ok_or_else(|| Error::Format("fourier must be an object".into()))?;
                let mut coeffs = BTreeMap::new();
                for (k, v) in map {
                    let k: i64 = k
                        .trim()
                        .parse()
                        .map_err(|_| Error::Format(format!("bad frequency key {k:?}")))?;
                    coeffs.insert(k, pair(v)?);
                }
                let f = Self::from_fourier(coeffs);
                match order {
                    Some(o) if o < f.order => Err(Error::Format(format!(
                        "order {o} below largest frequency {}",
                        f.order
                    ))),
                    Some(o) => Ok(Self { order: o, ..f }),
                    None => Ok(f),
                }
            }
            (None, Some(s)) => {
                let arr = s
                    .as_array()
                    .ok_or_else(|| Error::Format("samples must be an array".into()))?;
                let vals = arr.iter().map(pair).collect::<Result<Vec<_>>>()?;
                let order = order.unwrap_or((vals.len() / 2).saturating_sub(1));
                Self::from_samples(vals, order).map_err(|e| match e {
                    Error::Aliasing { .. } => Error::Format(e.to_string()),
                    other => other,
                })
            }
            (Some(_), Some(_)) => Err(Error::Format(
                "give either fourier or samples, not both".into(),
            )),
            (None, None) => Err(Error::Format("missing fourier or samples".into())),
        }
    }

    pub fn read_json(path: &std::path::Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    /// Serializes the Fourier data as a boundary document.
    pub fn to_json(&self) -> String {
        let body: Vec<String> = self
            .fourier
            .iter()
            .map(|(k, c)| format!("\"{k}\":[{},{}]", fmt17(c.re), fmt17(c.im)))
            .collect();
        format!(
            "{{\"order\":{},\"fourier\":{{{}}}}}",
            self.order,
            body.join(",")
        )
    }

    /// CSV with columns `t,re,im` on an `n`-point grid.
    pub fn write_csv<W: Write>(&self, mut w: W, n: usize) -> Result<()> {
        writeln!(w, "t,re,im")?;
        for (j, v) in self.sample(n).iter().enumerate() {
            let t = 2.0 * PI * j as f64 / n as f64;
            writeln!(w, "{},{},{}", fmt17(t), fmt17(v.re), fmt17(v.im))?;
        }
        Ok(())
    }
}

fn pair(v: &Value) -> Result<Complex64> {
    let bad = || Error::Format(format!("expected [re, im], got {v}"));
    let a = v.as_array().ok_or_else(bad)?;
    if a.len() != 2 {
        return Err(bad());
    }
    let re = a[0].as_f64().ok_or_else(bad)?;
    let im = a[1].as_f64().ok_or_else(bad)?;
    Ok(Complex64::new(re, im))
}

/// Random trigonometric polynomial of the given order: each `f̂(k)` is uniform
/// in the unit disk, scaled by `1/(1+|k|)`.
pub fn random_trig_polynomial(rng: &mut impl Rng, order: usize) -> BoundaryFunction {
    let mut coeffs = BTreeMap::new();
    for k in -(order as i64)..=order as i64 {
        let rad = rng.gen::<f64>().sqrt() / (1.0 + k.unsigned_abs() as f64);
        let th = 2.0 * PI * rng.gen::<f64>();
        coeffs.insert(k, Complex64::from_polar(rad, th));
    }
    BoundaryFunction::from_fourier(coeffs)
}

/// `count` random boundaries from a seed; orders cycle through `1..=max_order`.
pub fn random_suite(seed: u64, count: usize, max_order: usize) -> Vec<BoundaryFunction> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| random_trig_polynomial(&mut rng, 1 + i % max_order.max(1)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn evaluation() {
        let f =
            BoundaryFunction::from_fourier(BTreeMap::from([(3, c(1.0, 0.0)), (-2, c(0.5, 0.0))]));
        assert_eq!(f.order(), 3);
        assert!((f.eval(0.0) - c(1.5, 0.0)).norm() < 1e-15);
        let e = BoundaryFunction::from_fourier(BTreeMap::from([(1, c(1.0, 0.0))]));
        assert!((e.eval(0.7) - Complex64::from_polar(1.0, 0.7)).norm() < 1e-15);
    }

    #[test]
    fn dft() {
        let n = 16;
        let s: Vec<_> = (0..n)
            .map(|j| Complex64::from_polar(1.0, 2.0 * 2.0 * PI * j as f64 / n as f64))
            .collect();
        let f = fourier_from_samples(&s, 7).unwrap();
        for (k, v) in f {
            let want = if k == 2 { 1.0 } else { 0.0 };
            assert!((v - c(want, 0.0)).norm() < 1e-12, "{k}");
        }
        let cosine: Vec<_> = (0..64)
            .map(|j| c((2.0 * PI * j as f64 / 64.0).cos(), 0.0))
            .collect();
        let f = fourier_from_samples(&cosine, 4).unwrap();
        assert!((f[&1] - c(0.5, 0.0)).norm() < 1e-14 && (f[&-1] - c(0.5, 0.0)).norm() < 1e-14);
        assert!(matches!(
            fourier_from_samples(&s, 8),
            Err(Error::Aliasing {
                order: 8,
                samples: 16
            })
        ));
    }

    #[test]
    fn norms() {
        let two = BoundaryFunction::constant(c(2.0, 0.0));
        for p in [1.0, 2.0, 3.5, f64::INFINITY] {
            assert!((two.lp_norm(p) - 2.0).abs() < 1e-14);
        }
        let e = BoundaryFunction::from_fourier(BTreeMap::from([(1, c(1.0, 0.0))]));
        assert!((e.lp_norm(2.0) - 1.0).abs() < 1e-14);
        let cosine =
            BoundaryFunction::from_fourier(BTreeMap::from([(1, c(0.5, 0.0)), (-1, c(0.5, 0.0))]));
        assert!((cosine.lp_norm(2.0) - 0.5f64.sqrt()).abs() < 1e-14);
        assert!((cosine.lp_norm(f64::INFINITY) - 1.0).abs() < 1e-14);
    }

    #[test]
    fn json_round_trip() {
        let f = BoundaryFunction::from_json(r#"{"fourier": {"0": [1, 0], "-2": [0.5, -0.25]}}"#)
            .unwrap();
        assert_eq!(f.order(), 2);
        assert_eq!(f.coeff(-2), c(0.5, -0.25));
        let g = BoundaryFunction::from_json(&f.to_json()).unwrap();
        assert_eq!(f, g);
        let s = BoundaryFunction::from_json(r#"{"samples": [[1,0],[1,0],[1,0],[1,0]]}"#).unwrap();
        assert_eq!(s.order(), 1);
        assert!((s.coeff(0) - c(1.0, 0.0)).norm() < 1e-15);
        for bad in [
            "not json",
            "[]",
            r#"{"fourier": {"x": [1, 0]}}"#,
            r#"{"fourier": {"1": [1]}}"#,
            r#"{"samples": [[1,0],[1,0],[1,0]]}"#,
            r#"{"samples": [[1,0],[1,0]], "order": 1}"#,
            r#"{"fourier": {"3": [1, 0]}, "order": 2}"#,
            r#"{}"#,
        ] {
            assert!(
                matches!(BoundaryFunction::from_json(bad), Err(Error::Format(_))),
                "{bad}"
            );
        }
    }

    #[test]
    fn csv_export() {
        let mut out = Vec::new();
        BoundaryFunction::constant(c(1.0, 0.0))
            .write_csv(&mut out, 4)
            .unwrap();
        let text = String::from_utf8(out).unwrap();
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines.len(), 5);
        assert_eq!(lines[0], "t,re,im");
        assert!(lines[1].starts_with("0.0000000000000000e0,1.0000000000000000e0,"));
    }

    #[test]
    fn seeded_suite_is_reproducible() {
        let a = random_suite(7, 5, 8);
        let b = random_suite(7, 5, 8);
        assert_eq!(a, b);
        assert_ne!(a, random_suite(8, 5, 8));
        for f in &a {
            for (&k, v) in f.fourier() {
                assert!(v.norm() <= 1.0 / (1.0 + k.unsigned_abs() as f64));
            }
        }
    }
}
