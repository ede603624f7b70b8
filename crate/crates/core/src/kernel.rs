//! The (α,β)-Poisson kernel and its normalizing constant.

use crate::error::{Error, Result};
use crate::quad;
use crate::specfun::{gamma, hyp2f1, POLE_TOL};
use num_complex::Complex64;
use serde::Serialize;

/// Tolerance on `|ζ| = 1` for boundary points.
pub const UNIT_TOL: f64 = 1e-12;

/// A validated parameter pair with its cached normalizing constant
/// `c = Γ(α+1)Γ(β+1)/Γ(α+β+1)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AlphaBeta {
    alpha: f64,
    beta: f64,
    c_norm: f64,
}

fn near_negative_integer(x: f64) -> bool {
    x.round() <= -1.0 && (x - x.round()).abs() <= POLE_TOL
}

impl AlphaBeta {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha.is_finite() && beta.is_finite()) {
            return Err(Error::Constraint(format!(
                "non-finite parameters ({alpha}, {beta})"
            )));
        }
        if alpha + beta <= -1.0 {
            return Err(Error::Constraint(format!(
                "alpha + beta = {} must exceed -1",
                alpha + beta
            )));
        }
        if near_negative_integer(alpha) || near_negative_integer(beta) {
            return Err(Error::Constraint(format!(
                "({alpha}, {beta}) contains a negative integer"
            )));
        }
        Ok(Self {
            alpha,
            beta,
            c_norm: Self::norm(alpha, beta)?,
        })
    }

    fn norm(alpha: f64, beta: f64) -> Result<f64> {
        Ok(gamma(alpha + 1.0)? * gamma(beta + 1.0)? / gamma(alpha + beta + 1.0)?)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// `c_{α,β}`; may be negative when `α` or `β` is below -1.
    pub fn c_norm(&self) -> f64 {
        self.c_norm
    }

    /// Recomputes `c_{α,β}` from the parameters.
    pub fn recompute_c_norm(&self) -> Result<f64> {
        Self::norm(self.alpha, self.beta)
    }

    /// `α + β`.
    pub fn sum(&self) -> f64 {
        self.alpha + self.beta
    }

    /// The pair `(β, α)`, which governs conjugated functions.
    pub fn swapped(&self) -> Self {
        Self {
            alpha: self.beta,
            beta: self.alpha,
            c_norm: self.c_norm,
        }
    }
}

pub fn make_params(alpha: f64, beta: f64) -> Result<AlphaBeta> {
    AlphaBeta::new(alpha, beta)
}

/// A point of the open unit disk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskPoint(Complex64);

impl DiskPoint {
    pub fn new(z: Complex64) -> Result<Self> {
        if !(z.norm() < 1.0) {
            return Err(Error::Domain(format!("|z| = {} is not below 1", z.norm())));
        }
        Ok(Self(z))
    }

    pub fn from_polar(r: f64, theta: f64) -> Result<Self> {
        Self::new(Complex64::from_polar(r, theta))
    }

    pub fn z(&self) -> Complex64 {
        self.0
    }

    pub fn r(&self) -> f64 {
        self.0.norm()
    }

    pub fn theta(&self) -> f64 {
        self.0.arg()
    }
}

fn check_disk(w: Complex64) -> Result<()> {
    if !(w.norm() < 1.0) {
        return Err(Error::Domain(format!("|w| = {} is not below 1", w.norm())));
    }
    Ok(())
}

/// `ln` of the modulus and the argument of `u_{α,β}(w)`.
fn log_kernel(alpha: f64, beta: f64, w: Complex64) -> (f64, f64) {
    let one_minus = Complex64::new(1.0, 0.0) - w;
    let ln_mod = one_minus.norm().ln();
    let ln_weight = (-w.norm_sqr()).ln_1p();
    let s = alpha + beta;
    (
        (s + 1.0) * ln_weight - (s + 2.0) * ln_mod,
        (beta - alpha) * one_minus.arg(),
    )
}

/// `u_{α,β}(w) = (1-|w|²)^{α+β+1} / ((1-w)^{α+1} (1-w̄)^{β+1})`, principal branches.
pub fn kernel_u(p: &AlphaBeta, w: Complex64) -> Result<Complex64> {
    check_disk(w)?;
    let (re, im) = log_kernel(p.alpha, p.beta, w);
    Ok(Complex64::from_polar(re.exp(), im))
}

/// `|P_{α,β}(w)|`.
pub fn kernel_abs(p: &AlphaBeta, w: Complex64) -> Result<f64> {
    check_disk(w)?;
    Ok(p.c_norm.abs() * log_kernel(p.alpha, p.beta, w).0.exp())
}

/// `P_{α,β}(z ζ̄)` for `|ζ| = 1`.
pub fn poisson_kernel(p: &AlphaBeta, z: DiskPoint, zeta: Complex64) -> Result<Complex64> {
    if (zeta.norm() - 1.0).abs() > UNIT_TOL {
        return Err(Error::Domain(format!("|zeta| = {} is not 1", zeta.norm())));
    }
    Ok(p.c_norm * kernel_u(p, z.z() * zeta.conj())?)
}

/// `(1/2π) ∫ P_{α,β}(r e^{-it}) dt` by the trapezoid rule.
pub fn kernel_mean(p: &AlphaBeta, r: f64, nodes: usize) -> Result<Complex64> {
    check_disk(Complex64::new(r, 0.0))?;
    let h = 2.0 * std::f64::consts::PI / nodes as f64;
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..nodes {
        acc += kernel_u(p, Complex64::from_polar(r, -h * j as f64))?;
    }
    Ok(p.c_norm * acc / nodes as f64)
}

/// Closed form of [`kernel_mean`]: `c F(-α, -β; 1; r²)`.
pub fn kernel_mean_closed(p: &AlphaBeta, r: f64) -> Result<f64> {
    Ok(p.c_norm * hyp2f1(-p.alpha, -p.beta, 1.0, r * r)?)
}

/// `(1/2π) ∫ |P_{α,β}(r e^{-it})| dt` by the trapezoid rule.
pub fn kernel_abs_mean(p: &AlphaBeta, r: f64, nodes: usize) -> Result<f64> {
    check_disk(Complex64::new(r, 0.0))?;
    let (a, b) = (p.alpha, p.beta);
    let c = p.c_norm.abs();
    Ok(c * quad::circle_mean(nodes, |t| {
        log_kernel(a, b, Complex64::from_polar(r, -t)).0.exp()
    }))
}

/// Closed form of [`kernel_abs_mean`]: `|c| F(-(α+β)/2, -(α+β)/2; 1; r²)`.
pub fn kernel_abs_mean_closed(p: &AlphaBeta, r: f64) -> Result<f64> {
    let h = -0.5 * p.sum();
    Ok(p.c_norm.abs() * hyp2f1(h, h, 1.0, r * r)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn params() {
        assert_eq!(make_params(0.0, 0.0).unwrap().c_norm(), 1.0);
        assert!((make_params(1.0, 1.0).unwrap().c_norm() - 0.5).abs() < 1e-15);
        assert!(make_params(-1.0, 0.0).is_err());
        assert!(make_params(-0.5, -0.5).is_err());
        assert!(make_params(2.0, -3.0 + 1e-13).is_err());
        let p = make_params(-1.5, 1.0).unwrap();
        assert!(p.c_norm() < 0.0);
        assert_eq!(p.recompute_c_norm().unwrap(), p.c_norm());
    }

    #[test]
    fn kernel_values() {
        for &(a, b) in &[(0.0, 0.0), (0.5, 1.5), (-0.3, 0.2)] {
            let p = make_params(a, b).unwrap();
            assert_eq!(kernel_u(&p, c(0.0, 0.0)).unwrap(), c(1.0, 0.0));
        }
        let p = make_params(0.0, 0.0).unwrap();
        assert!((kernel_u(&p, c(0.5, 0.0)).unwrap() - c(3.0, 0.0)).norm() < 1e-14);
        let p = make_params(0.5, 0.5).unwrap();
        let w = c(0.0, 0.3);
        let want = (1.0 - 0.09f64).powi(2) * (c(1.0, 0.0) - w).norm().powi(-3);
        assert!((kernel_u(&p, w).unwrap() - c(want, 0.0)).norm() < 1e-14);
        assert!(kernel_u(&p, c(1.0, 0.0)).is_err());
    }

    #[test]
    fn direct_complex_powers() {
        let p = make_params(0.7, -0.4).unwrap();
        let w = c(0.3, -0.55);
        let one = c(1.0, 0.0);
        let want =
            (1.0 - w.norm_sqr()).powf(1.3) / ((one - w).powf(1.7) * (one - w.conj()).powf(0.6));
        assert!((kernel_u(&p, w).unwrap() - want).norm() < 1e-13 * want.norm());
    }

    #[test]
    fn boundary_point_tolerance() {
        let p = make_params(0.2, 0.1).unwrap();
        let z = DiskPoint::new(c(0.2, 0.1)).unwrap();
        assert!(poisson_kernel(&p, z, c(1.0 + 1e-13, 0.0)).is_ok());
        assert!(poisson_kernel(&p, z, c(1.0 + 1e-9, 0.0)).is_err());
        let z0 = DiskPoint::new(c(0.0, 0.0)).unwrap();
        assert!((poisson_kernel(&p, z0, c(0.0, 1.0)).unwrap().re - p.c_norm()).abs() < 1e-15);
    }

    #[test]
    fn means() {
        let p = make_params(1.0, 1.0).unwrap();
        assert!((kernel_abs_mean_closed(&p, 0.6).unwrap() - 0.68).abs() < 1e-14);
        assert!((kernel_abs_mean(&p, 0.6, 4096).unwrap() - 0.68).abs() < 1e-12);
        let p = make_params(-0.5, 1.0).unwrap();
        let m = kernel_mean(&p, 0.7, 4096).unwrap();
        assert!((m.re - kernel_mean_closed(&p, 0.7).unwrap()).abs() < 1e-12);
        assert!(m.im.abs() < 1e-12);
    }
}
