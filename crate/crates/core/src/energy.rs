//! Graph energy by three independent routes: exact roots of the
//! characteristic polynomial, a Jacobi eigensolver, and the Coulson integral.
//!
//! Coulson's formula for a graph with `phi(G, x) = sum a_k x^(n-k)` reads
//!
//! ```text
//! E = (1/pi) int_0^inf x^-2 log T(x) dx,   T(x) = |sum_k a_k (ix)^k|^2
//! ```
//!
//! For a real spectrum `T(x) = prod (1 + lambda^2 x^2)`, so `T` has
//! nonnegative coefficients and `T(0) = 1`. The half line is split at 1;
//! on `[1, inf)` the substitution `x = 1/y` gives
//! `int_0^1 log T(1/y) dy = 2d + int_0^1 log Trev(y) dy` with `d = deg T / 2`
//! and `Trev(y) = y^(2d) T(1/y)`. Both pieces are smooth on `[0, 1]`, and
//! evaluating the positive-coefficient polynomials never cancels.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::charpoly::charpoly;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::jacobi::symmetric_eigenvalues;
use crate::poly::IntPolynomial;
use crate::quadrature::integrate;
use crate::roots::{energy_of_poly, EnergyValue};

/// Default tolerance: tables print five decimals, this keeps a guard digit.
pub const DEFAULT_TOL: f64 = 1e-7;

/// Subinterval cap for the adaptive quadrature.
const MAX_PIECES: usize = 4000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Exact,
    Eig,
    Coulson,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Exact, Method::Eig, Method::Coulson];

    pub fn name(self) -> &'static str {
        match self {
            Method::Exact => "exact",
            Method::Eig => "eig",
            Method::Coulson => "coulson",
        }
    }
}

pub fn energy(g: &Graph, method: Method, tol: f64) -> Result<EnergyValue> {
    match method {
        Method::Exact => energy_of_poly(&charpoly(g), tol),
        Method::Eig => energy_eigensolver_oracle(g, tol),
        Method::Coulson => energy_coulson(g, tol),
    }
}

pub fn energy_eigensolver_oracle(g: &Graph, tol: f64) -> Result<EnergyValue> {
    let n = g.order();
    if n == 0 {
        return Err(Error::Domain("the empty graph has no spectrum".into()));
    }
    let eig = symmetric_eigenvalues(g.adjacency_matrix())?;
    let value: f64 = eig.values.iter().map(|v| v.abs()).sum();
    // Hoffman-Wielandt: the diagonal is within off-norm of the spectrum in
    // the 2-norm, hence within sqrt(n) off in the 1-norm. The second term
    // covers rounding in the rotations.
    let fro = (2.0 * g.size() as f64).sqrt();
    let nf = n as f64;
    let radius = nf.sqrt() * eig.off + nf * (nf + eig.sweeps as f64) * f64::EPSILON * fro.max(1.0);
    if radius > tol {
        return Err(Error::Convergence {
            what: "eigensolver energy",
            estimate: value,
            error: radius,
        });
    }
    Ok(EnergyValue { value, radius })
}

fn to_f64(p: &IntPolynomial) -> Vec<f64> {
    p.to_f64_coeffs()
}

fn horner(c: &[f64], x: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, &v| acc * x + v)
}

fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("tolerance must be positive, got {tol}")))
    }
}

/// `T(x) = |sum a_k (ix)^k|^2` for the coefficients `a_k` of `p` read from
/// the top.
fn coulson_t(p: &IntPolynomial) -> IntPolynomial {
    p.reversed().modulus_sq_on_imaginary_axis()
}

pub fn energy_coulson(g: &Graph, tol: f64) -> Result<EnergyValue> {
    if g.order() == 0 {
        return Err(Error::Domain("the empty graph has no spectrum".into()));
    }
    energy_coulson_poly(&charpoly(g), tol)
}

/// Coulson integral for an arbitrary real-rooted monic polynomial.
pub fn energy_coulson_poly(p: &IntPolynomial, tol: f64) -> Result<EnergyValue> {
    check_tol(tol)?;
    let t = coulson_t(p);
    let two_d = t.degree().unwrap_or(0);
    if two_d == 0 {
        return Ok(EnergyValue { value: 0.0, radius: 0.0 });
    }
    // T - 1 = x^2 U
    let u = to_f64(&(&t - &IntPolynomial::one()).shift_down(2));
    let trev = to_f64(&t.reversed());
    let near = move |x: f64| {
        if x == 0.0 {
            u[0]
        } else {
            (x * x * horner(&u, x)).ln_1p() / (x * x)
        }
    };
    let far = move |y: f64| horner(&trev, y).ln();
    let budget = PI * tol / 3.0;
    let q1 = integrate(near, 0.0, 1.0, budget, MAX_PIECES)?;
    let q2 = integrate(far, 0.0, 1.0, budget, MAX_PIECES)?;
    let sum = q1.value + two_d as f64 + q2.value;
    let value = sum / PI;
    let rounding = 16.0 * (two_d as f64 + 2.0) * f64::EPSILON * (q1.value.abs() + two_d as f64 + q2.value.abs());
    let radius = (q1.error + q2.error + rounding) / PI;
    Ok(EnergyValue { value, radius })
}

/// `E(G1) - E(G2)` from the difference integral
/// `(1/pi) int_R log |phi(G1, ix) / phi(G2, ix)| dx`.
///
/// With `M = |phi(ix)|^2 = x^(2k) Mt(x)` (`k` zero eigenvalues), the piece
/// on `[0, 1]` is `-2(k1 - k2) + int_0^1 log(Mt1 / Mt2)`, the `log x`
/// singularity being integrated by hand. On `[1, inf)`, `x = 1/y` turns the
/// ratio into `Mrev1 / Mrev2` with `Mrev(0) = 1`, and the `1/y^2` weight
/// is absorbed by writing `Mrev = 1 + y^2 V`.
pub fn energy_diff_coulson(g1: &Graph, g2: &Graph, tol: f64) -> Result<EnergyValue> {
    if g1.order() != g2.order() {
        return Err(Error::Domain(format!(
            "difference integral needs equal orders, got {} and {}",
            g1.order(),
            g2.order()
        )));
    }
    energy_diff_coulson_poly(&charpoly(g1), &charpoly(g2), tol)
}

pub fn energy_diff_coulson_poly(p1: &IntPolynomial, p2: &IntPolynomial, tol: f64) -> Result<EnergyValue> {
    check_tol(tol)?;
    if p1.degree() != p2.degree() {
        return Err(Error::Domain("difference integral needs equal degrees".into()));
    }
    let split = |p: &IntPolynomial| {
        let m = p.modulus_sq_on_imaginary_axis();
        let k2 = m.zero_root_multiplicity();
        let mt = to_f64(&m.shift_down(k2));
        let v = to_f64(&(&m.reversed() - &IntPolynomial::one()).shift_down(2));
        (k2 / 2, mt, v)
    };
    let (k1, mt1, v1) = split(p1);
    let (k2, mt2, v2) = split(p2);
    let near = move |x: f64| horner(&mt1, x).ln() - horner(&mt2, x).ln();
    let far = move |y: f64| {
        if y == 0.0 {
            v1.first().copied().unwrap_or(0.0) - v2.first().copied().unwrap_or(0.0)
        } else {
            let y2 = y * y;
            ((y2 * horner(&v1, y)).ln_1p() - (y2 * horner(&v2, y)).ln_1p()) / y2
        }
    };
    let budget = PI * tol / 3.0;
    let q1 = integrate(near, 0.0, 1.0, budget, MAX_PIECES)?;
    let q2 = integrate(far, 0.0, 1.0, budget, MAX_PIECES)?;
    let jump = -2.0 * (k1 as f64 - k2 as f64);
    let value = (jump + q1.value + q2.value) / PI;
    let deg = p1.degree().unwrap_or(0) as f64;
    let rounding = 64.0 * (deg + 2.0) * f64::EPSILON * (q1.value.abs() + q2.value.abs());
    let radius = (q1.error + q2.error + rounding) / PI;
    Ok(EnergyValue { value, radius })
}

/// `sum_j |2 cos(2 pi j / n)|`, the energy of `C_n` from its known spectrum.
pub fn cycle_energy_reference(n: usize) -> f64 {
    debug_assert!(n >= 3);
    (0..n)
        .map(|j| (2.0 * (2.0 * PI * j as f64 / n as f64).cos()).abs())
        .sum()
}
