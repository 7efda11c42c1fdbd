//! Scalar special functions and combinatorial constants: normalized Jacobi and
//! Gegenbauer polynomials, disk polynomials, sphere areas, harmonic dimensions
//! and orthogonality constants.

use crate::error::{Error, Result};
use crate::gamma::ln_gamma;
use num_complex::Complex64;

/// Tolerance up to which `|z| > 1` is clamped rather than rejected.
pub const DISK_CLAMP_TOL: f64 = 1e-12;

/// Index triple (m, n, q) for the disk polynomial R_{m,n} on the disk of the
/// ambient space of complex dimension `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DiskIndex {
    pub m: u32,
    pub n: u32,
    pub q: u32,
}

impl DiskIndex {
    /// Requires q >= 2; disk polynomials are undefined below that.
    pub fn new(m: u32, n: u32, q: u32) -> Result<Self> {
        if q < 2 {
            return Err(Error::parameter(format!("DiskIndex requires q >= 2, got q = {q}")));
        }
        Ok(DiskIndex { m, n, q })
    }

    pub fn min_mn(&self) -> u32 {
        self.m.min(self.n)
    }

    /// |m - n|
    pub fn abs_diff(&self) -> u32 {
        self.m.abs_diff(self.n)
    }

    /// The index with m and n swapped.
    pub fn swapped(&self) -> DiskIndex {
        DiskIndex { m: self.n, n: self.m, q: self.q }
    }
}

/// Degree and exponents of a Jacobi polynomial; alpha, beta > -1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiParams {
    pub degree: u32,
    pub alpha: f64,
    pub beta: f64,
}

impl JacobiParams {
    pub fn new(degree: u32, alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha.is_finite() && alpha > -1.0) {
            return Err(Error::parameter(format!("Jacobi alpha must be > -1, got {alpha}")));
        }
        if !(beta.is_finite() && beta > -1.0) {
            return Err(Error::parameter(format!("Jacobi beta must be > -1, got {beta}")));
        }
        Ok(JacobiParams { degree, alpha, beta })
    }
}

/// Classical Jacobi polynomial value at `x` by the ascending three-term
/// recurrence (not normalized).
fn jacobi_classical(k: u32, alpha: f64, beta: f64, x: f64) -> f64 {
    if k == 0 {
        return 1.0;
    }
    let mut p_prev = 1.0;
    let mut p = 0.5 * (alpha + beta + 2.0) * x + 0.5 * (alpha - beta);
    for j in 2..=k {
        let j = f64::from(j);
        let c = 2.0 * j + alpha + beta;
        let a1 = 2.0 * j * (j + alpha + beta) * (c - 2.0);
        let a2 = (c - 1.0) * (alpha * alpha - beta * beta);
        let a3 = (c - 2.0) * (c - 1.0) * c;
        let a4 = 2.0 * (j + alpha - 1.0) * (j + beta - 1.0) * c;
        let next = ((a2 + a3 * x) * p - a4 * p_prev) / a1;
        p_prev = p;
        p = next;
    }
    p
}

/// Value of the classical Jacobi polynomial at 1: binom(k + alpha, k),
/// computed from the Gamma-ratio product rather than the recurrence.
fn jacobi_at_one(k: u32, alpha: f64) -> f64 {
    let mut v = 1.0;
    for j in 1..=k {
        let j = f64::from(j);
        v *= (alpha + j) / j;
    }
    v
}

/// Jacobi polynomial normalized to 1 at x = 1.
pub fn jacobi_normalized(p: JacobiParams, x: f64) -> f64 {
    jacobi_classical(p.degree, p.alpha, p.beta, x) / jacobi_at_one(p.degree, p.alpha)
}

/// Gegenbauer polynomial C_n^lambda(t) / C_n^lambda(1), evaluated through the
/// Jacobi polynomial with alpha = beta = lambda - 1/2.
pub fn gegenbauer_normalized(n: u32, lambda: f64, t: f64) -> Result<f64> {
    if !(lambda.is_finite() && lambda > 0.0) {
        return Err(Error::parameter(format!("Gegenbauer lambda must be > 0, got {lambda}")));
    }
    let p = JacobiParams::new(n, lambda - 0.5, lambda - 0.5)?;
    Ok(jacobi_normalized(p, t))
}

/// Disk polynomial R_{m,n} at z, |z| <= 1 (clamped up to 1 + 1e-12).
///
/// For z = 0 with m != n the value is exactly 0; no phase is evaluated there.
pub fn disk_poly(idx: DiskIndex, z: Complex64) -> Result<Complex64> {
    let r = z.norm();
    if r > 1.0 + DISK_CLAMP_TOL {
        return Err(Error::domain(format!("disk polynomial argument |z| = {r} exceeds 1")));
    }
    let r = r.min(1.0);
    let k = idx.min_mn();
    let s = idx.abs_diff();
    let alpha = f64::from(idx.q) - 2.0;
    if r == 0.0 && idx.m != idx.n {
        return Ok(Complex64::ZERO);
    }
    let radial = jacobi_classical(k, alpha, f64::from(s), 2.0 * r * r - 1.0) / jacobi_at_one(k, alpha);
    if idx.m == idx.n {
        return Ok(Complex64::new(radial, 0.0));
    }
    let phase_order = i64::from(idx.m) - i64::from(idx.n);
    let phase = Complex64::from_polar(1.0, phase_order as f64 * z.arg());
    Ok(r.powi(s as i32) * radial * phase)
}

/// Surface measure omega_q = 2 pi^q / (q-1)! of the unit sphere of C^q.
pub fn sphere_area(q: u32) -> Result<f64> {
    if q < 1 {
        return Err(Error::parameter("sphere_area requires q >= 1"));
    }
    Ok(2.0 * std::f64::consts::PI.powi(q as i32) / factorial_f64(q - 1))
}

/// Lebesgue volume pi^q / q! of the unit ball of C^q.
pub fn ball_volume(q: u32) -> Result<f64> {
    if q < 1 {
        return Err(Error::parameter("ball_volume requires q >= 1"));
    }
    Ok(std::f64::consts::PI.powi(q as i32) / factorial_f64(q))
}

fn factorial_f64(k: u32) -> f64 {
    if k > 20 {
        return ln_gamma(f64::from(k) + 1.0).exp();
    }
    let mut v = 1.0f64;
    for j in 2..=k {
        v *= f64::from(j);
    }
    v
}

/// Dimension d(m,n) of the spherical harmonic space of bidegree (m, n),
///
///     d(m,n) = (m+n+q-1) (m+q-2)! (n+q-2)! / ((q-1)! m! n! (q-2)!),
///
/// computed in u128 through binomial products so that desk-scale indices
/// never overflow.
pub fn harmonic_dim(idx: DiskIndex) -> Result<u64> {
    let (m, n, q) = (u128::from(idx.m), u128::from(idx.n), u128::from(idx.q));
    let c_m = binomial_u128(m + q - 2, q - 2)?;
    let c_n = binomial_u128(n + q - 2, q - 2)?;
    let num = (m + n + q - 1)
        .checked_mul(c_m)
        .and_then(|v| v.checked_mul(c_n))
        .ok_or_else(|| Error::parameter("harmonic_dim overflow"))?;
    // (m+n+q-1) C(m+q-2, q-2) C(n+q-2, q-2) is always divisible by q-1.
    debug_assert_eq!(num % (q - 1), 0);
    let d = num / (q - 1);
    u64::try_from(d).map_err(|_| Error::parameter("harmonic_dim exceeds u64"))
}

fn binomial_u128(n: u128, k: u128) -> Result<u128> {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for j in 0..k {
        acc = acc
            .checked_mul(n - j)
            .ok_or_else(|| Error::parameter("binomial overflow"))?
            / (j + 1);
    }
    Ok(acc)
}

/// Orthogonality constant over the cylinder,
///
///     c(m,n,q) = 2 pi^q m! n! (q-2)! / ((m+n+q-1) (m+q-2)! (n+q-2)!),
///
/// evaluated from the formula itself (exact integer products below 20,
/// log-gamma above), independently of `harmonic_dim`.
pub fn ortho_constant(idx: DiskIndex) -> f64 {
    let (m, n, q) = (idx.m, idx.n, idx.q);
    let two_pi_q = 2.0 * std::f64::consts::PI.powi(q as i32);
    if m + q - 2 <= 20 && n + q - 2 <= 20 {
        // m!/(m+q-2)! = 1 / prod_{j=1}^{q-2} (m+j), all exact in integers
        let mut den: u128 = u128::from(m + n + q - 1);
        for j in 1..=(q - 2) {
            den *= u128::from(m + j);
            den *= u128::from(n + j);
        }
        let num: u128 = (2..=u128::from(q - 2).max(1)).product::<u128>().max(1);
        two_pi_q * (num as f64) / (den as f64)
    } else {
        let lg = ln_gamma(f64::from(m) + 1.0) + ln_gamma(f64::from(n) + 1.0)
            + ln_gamma(f64::from(q) - 1.0)
            - (f64::from(m + n + q) - 1.0).ln()
            - ln_gamma(f64::from(m + q) - 1.0)
            - ln_gamma(f64::from(n + q) - 1.0);
        two_pi_q * lg.exp()
    }
}
