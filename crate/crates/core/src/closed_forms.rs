//! Closed forms for `|phi(P_n^6, ix)|^2` and `|phi(P_n^t, ix)|^2` (odd `t`)
//! and the auxiliary quantities built from them.
//!
//! With `Z1, Z2 = (x +- sqrt(x^2 + 4)) / 2` (so `Z1 + Z2 = x`, `Z1 Z2 = -1`):
//!
//! ```text
//! |phi(P_n^6, ix)|^2 = A1^2 Z1^2n + A2^2 Z2^2n + (-1)^n 2 A1 A2
//! |phi(P_n^t, ix)|^2 = (B11^2 + B12^2) Z1^2n + (B21^2 + B22^2) Z2^2n
//!                      + (-1)^n 2 (B11 B21 + B12 B22)
//! ```
//!
//! Everything is generic over [`Scalar`]: `f64` for quick samples and
//! [`QuadSurd`] for exact evaluation at rational `x`, where every quantity
//! lies in `Q(sqrt(x^2 + 4))`.

use num_rational::BigRational;
use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;

use crate::charpoly::charpoly;
use crate::error::{Error, Result};
use crate::field::{Field, QuadSurd, RatFunc, Scalar};
use crate::graph::make_lollipop;
use crate::poly::IntPolynomial;

/// `f8(x) = phi(P_8^6, ix)`, ascending coefficients.
const F8: [i64; 9] = [4, 0, 16, 0, 19, 0, 8, 0, 1];
/// `f7(x) = i phi(P_7^6, ix)`.
const F7: [i64; 8] = [0, 7, 0, 13, 0, 7, 0, 1];

fn horner<S: Field>(x: &S, c: &[i64]) -> S {
    c.iter()
        .rev()
        .fold(x.lift(0), |acc, &v| acc * x.clone() + x.lift(v))
}

fn check_t(t: u32) -> Result<()> {
    if t < 3 || t.is_multiple_of(2) {
        return Err(Error::Domain(format!("t must be odd and at least 3, got {t}")));
    }
    Ok(())
}

/// Every scalar of the closed-form analysis at one `(x, t, n)`.
#[derive(Clone, Debug, Serialize)]
pub struct ClosedForms<S> {
    pub x: S,
    pub t: u32,
    pub n: u32,
    pub z1: S,
    pub z2: S,
    pub a1: S,
    pub a2: S,
    pub b11: S,
    pub b12: S,
    pub b21: S,
    pub b22: S,
    pub g1: S,
    pub g2: S,
    pub m1: S,
    pub m2: S,
    pub h: S,
    pub alpha: S,
    pub beta: S,
    pub gamma: S,
    /// `alpha_0..alpha_4` of the expansion in powers of `Z1`, `Z2`.
    pub alpha_i: [S; 5],
    /// `beta_0..beta_4`; `beta_3` is identically zero.
    pub beta_i: [S; 5],
    /// `gamma_0..gamma_4`; `gamma_4` is identically zero.
    pub gamma_i: [S; 5],
    pub d: [S; 5],
    /// `K(n, t, x)` from the alpha/beta/gamma expansion.
    pub k_val: S,
    pub f_val: S,
}

/// Float evaluation.
pub type ClosedFormSample = ClosedForms<f64>;

/// The quantities needed for `alpha`, `beta`, `gamma` and nothing more.
struct Core<S> {
    x2: S,
    z1: S,
    z2: S,
    a1: S,
    a2: S,
    g1: S,
    g2: S,
    m1: S,
    m2: S,
    h: S,
    b11: S,
    b12: S,
    b21: S,
    b22: S,
    alpha: S,
    beta: S,
    gamma: S,
}

impl<S: Field> Core<S> {
    fn new(x: &S, r: S, t: u32) -> Result<Self> {
        check_t(t)?;
        let c = |v: i64| x.lift(v);
        let z1 = (x.clone() + r.clone()) / c(2);
        let z2 = (x.clone() - r) / c(2);
        let (z1s, z2s) = (z1.square(), z2.square());
        let x2 = x.square();
        let f8 = horner(x, &F8);
        let f7 = horner(x, &F7);
        let a1 = -((z1.clone() * f8.clone() + f7.clone()) / (z1s.clone() + c(1))) * z2.powu(7);
        let a2 = -((z2.clone() * f8 + f7) / (z2s.clone() + c(1))) * z1.powu(7);
        let h = c(1) / (x2.clone() + c(4));
        let g1 = z1s.clone() * (z1s.clone() + c(2)) / (z1s.clone() + c(1)).square();
        let g2 = z2s.clone() * (z2s.clone() + c(2)) / (z2s.clone() + c(1)).square();
        let m1 = c(-2) / (z1s.clone() + c(1));
        let m2 = c(-2) / (z2s + c(1));
        let b11 = g1.clone() - z2.powu(2 * t - 2) * h.clone();
        let b12 = m1.clone() * z2.powu(t - 2);
        let b21 = g2.clone() - z1.powu(2 * t - 2) * h.clone();
        let b22 = m2.clone() * z1.powu(t - 2);

        let s1 = b11.square() + b12.square();
        let s2 = b21.square() + b22.square();
        let cross = b11.clone() * b21.clone() + b12.clone() * b22.clone();
        let (a1s, a2s, a12) = (a1.square(), a2.square(), a1.clone() * a2.clone());
        let alpha = a2s * s1.clone() - a1s.clone() * s2.clone();
        let beta = c(2) * a1s * cross.clone() - c(2) * a12.clone() * s1;
        let gamma = c(2) * a12 * s2 - c(2) * a2.square() * cross;
        Ok(Core {
            x2,
            z1,
            z2,
            a1,
            a2,
            g1,
            g2,
            m1,
            m2,
            h,
            b11,
            b12,
            b21,
            b22,
            alpha,
            beta,
            gamma,
        })
    }

    /// `alpha (Z1^4 - Z2^4) + beta Z1^2m (Z1^4 - 1) + gamma Z2^2m (1 - Z2^4)`.
    fn expand(&self, m: u32) -> S {
        let one = self.z1.lift(1);
        let (z1q, z2q) = (self.z1.powu(4), self.z2.powu(4));
        self.alpha.clone() * (z1q.clone() - z2q.clone())
            + self.beta.clone() * self.z1.powu(2 * m) * (z1q - one.clone())
            + self.gamma.clone() * self.z2.powu(2 * m) * (one - z2q)
    }
}

impl<S: Field> ClosedForms<S> {
    /// Evaluates at `x`, given `r = sqrt(x^2 + 4)` in the same field.
    pub fn evaluate(x: S, r: S, t: u32, n: u32) -> Result<Self> {
        let core = Core::new(&x, r, t)?;
        let k_val = core.expand(n);
        let f_val = core.expand(t);
        let Core {
            x2,
            z1,
            z2,
            a1,
            a2,
            g1,
            g2,
            m1,
            m2,
            h,
            b11,
            b12,
            b21,
            b22,
            alpha,
            beta,
            gamma,
        } = core;
        let c = |v: i64| x.lift(v);
        let (z1s, z2s) = (z1.square(), z2.square());
        let (a1s, a2s, a12) = (a1.square(), a2.square(), a1.clone() * a2.clone());

        let hh = h.square();
        let cc = c(2) * (x2.clone() + c(3)) / (x2 + c(4)).square();
        let alpha_i = [
            a2s.clone() * g1.square() - a1s.clone() * g2.square(),
            c(2) * a1s.clone() * g2.clone() * h.clone() * z1s.clone() - a1s.clone() * m2.square(),
            a2s.clone() * m1.square() - c(2) * a2s.clone() * g1.clone() * h.clone() * z2s.clone(),
            -(a1s.clone() * hh.clone()),
            a2s.clone() * hh.clone(),
        ];
        let beta_i = [
            c(-2) * a1.clone() * (cc.clone() * a1.clone() + a2.clone() * g1.square()),
            c(-2) * a1s.clone() * g1.clone() * h.clone(),
            c(2) * a1.clone()
                * (c(2) * a2.clone() * g1.clone() * h.clone()
                    - a1.clone() * g2.clone() * h.clone()
                    - a2.clone() * m1.square() * z1s.clone()),
            c(0),
            c(-2) * a12.clone() * hh.clone(),
        ];
        let gamma_i = [
            c(2) * a2.clone() * (a1.clone() * g2.square() + cc * a2.clone()),
            c(2) * a2.clone()
                * (a1.clone() * m2.square() * z2s.clone() + a2.clone() * g1.clone() * h.clone()
                    - c(2) * a1.clone() * g2.clone() * h.clone()),
            c(2) * a2s * g2.clone() * h.clone(),
            c(2) * a12 * hh,
            c(0),
        ];

        let (z1q, z2q) = (z1s.square(), z2s.square());
        let (z1o, z2o) = (z1q.square(), z2q.square());
        let [al0, al1, al2, al3, al4] = alpha_i.clone();
        let [be0, be1, be2, _, be4] = beta_i.clone();
        let [ga0, ga1, ga2, ga3, _] = gamma_i.clone();
        let d = [
            al0 * (z1q.clone() - z2q.clone())
                + be2 * (z1q.clone() - c(1)) * z1s.clone()
                + ga1 * (c(1) - z2q.clone()) * z2s.clone(),
            al1 * (c(1) - z2o.clone()) + be0 * (z1q.clone() - c(1)) + ga3 * (z2q.clone() - z2o.clone()),
            al2 * (z1o.clone() - c(1)) + ga0 * (c(1) - z2q.clone()) + be4 * (z1o.clone() - z1q.clone()),
            al3 * (c(1) - z2o) + be1 * (z1s.clone() - z2s.clone()),
            al4 * (z1o - c(1)) + ga2 * (z1s - z2s),
        ];

        Ok(ClosedForms {
            x,
            t,
            n,
            z1,
            z2,
            a1,
            a2,
            b11,
            b12,
            b21,
            b22,
            g1,
            g2,
            m1,
            m2,
            h,
            alpha,
            beta,
            gamma,
            alpha_i,
            beta_i,
            gamma_i,
            d,
            k_val,
            f_val,
        })
    }

    /// `alpha` reassembled from `alpha_0..alpha_4`.
    pub fn alpha_expanded(&self) -> S {
        let t = self.t;
        let a = &self.alpha_i;
        a[0].clone()
            + a[1].clone() * self.z1.powu(2 * t - 4)
            + a[2].clone() * self.z2.powu(2 * t - 4)
            + a[3].clone() * self.z1.powu(4 * t - 4)
            + a[4].clone() * self.z2.powu(4 * t - 4)
    }

    pub fn beta_expanded(&self) -> S {
        let t = self.t;
        let b = &self.beta_i;
        b[0].clone()
            + b[1].clone() * self.z1.powu(2 * t - 2)
            + b[2].clone() * self.z2.powu(2 * t - 2)
            + b[4].clone() * self.z2.powu(4 * t - 4)
    }

    pub fn gamma_expanded(&self) -> S {
        let t = self.t;
        let g = &self.gamma_i;
        g[0].clone()
            + g[1].clone() * self.z1.powu(2 * t - 2)
            + g[2].clone() * self.z2.powu(2 * t - 2)
            + g[3].clone() * self.z1.powu(4 * t - 4)
    }

    /// `f(t, x)` from `d_0..d_4`.
    pub fn f_from_d(&self) -> S {
        let t = self.t;
        let d = &self.d;
        d[0].clone()
            + d[1].clone() * self.z1.powu(2 * t)
            + d[2].clone() * self.z2.powu(2 * t)
            + d[3].clone() * self.z1.powu(4 * t)
            + d[4].clone() * self.z2.powu(4 * t)
    }

    /// The bracket of `df/dt = [d1 Z1^2t - d2 Z2^2t + 2 d3 Z1^4t - 2 d4 Z2^4t] log Z1^2`
    /// (using `Z1^-2 = Z2^2`).
    pub fn df_dt_bracket(&self) -> S {
        let t = self.t;
        let d = &self.d;
        let two = self.x.lift(2);
        d[1].clone() * self.z1.powu(2 * t) - d[2].clone() * self.z2.powu(2 * t)
            + two.clone() * d[3].clone() * self.z1.powu(4 * t)
            - two * d[4].clone() * self.z2.powu(4 * t)
    }

    /// `|phi(P_n^6, ix)|^2` for this sample's `x` (independent of `t`).
    pub fn modulus_sq_p6(&self, n: u32) -> S {
        let sign = if n.is_multiple_of(2) { 2 } else { -2 };
        self.a1.square() * self.z1.powu(2 * n)
            + self.a2.square() * self.z2.powu(2 * n)
            + self.x.lift(sign) * self.a1.clone() * self.a2.clone()
    }

    /// `|phi(P_n^t, ix)|^2` for this sample's `x` and `t`.
    pub fn modulus_sq_pt(&self, n: u32) -> S {
        let sign = if n.is_multiple_of(2) { 2 } else { -2 };
        (self.b11.square() + self.b12.square()) * self.z1.powu(2 * n)
            + (self.b21.square() + self.b22.square()) * self.z2.powu(2 * n)
            + self.x.lift(sign) * (self.b11.clone() * self.b21.clone() + self.b12.clone() * self.b22.clone())
    }

}

impl<S: Scalar> ClosedForms<S> {
    /// Sign of `df/dt`: the bracket times `log Z1^2`, whose sign is that of `x`.
    pub fn df_dt_sign(&self) -> i8 {
        self.df_dt_bracket().signum() * self.x.signum()
    }

    /// Large-`n` limit of `|phi(P_n^t, ix) / phi(P_n^6, ix)|^2` along even
    /// `n`: `(B11^2 + B12^2) / A1^2` for `x > 0`, `(B21^2 + B22^2) / A2^2`
    /// for `x < 0`.
    pub fn limit_ratio(&self) -> S {
        if self.x.signum() >= 0 {
            (self.b11.square() + self.b12.square()) / self.a1.square()
        } else {
            (self.b21.square() + self.b22.square()) / self.a2.square()
        }
    }
}

pub fn eval_sample(x: f64, t: u32, n: u32) -> Result<ClosedFormSample> {
    ClosedForms::evaluate(x, (x * x + 4.0).sqrt(), t, n)
}

/// Exact evaluation at a rational point.
pub fn eval_exact(x: &BigRational, t: u32, n: u32) -> Result<ClosedForms<QuadSurd>> {
    let (xs, r) = QuadSurd::with_radical(x);
    ClosedForms::evaluate(xs, r, t, n)
}

/// The short decimal a grid point was written as: `x` rounded to a multiple
/// of `1e-6`, in lowest terms. Keeps exact arithmetic on `-9.8` working with
/// `-49/5` rather than the 53-bit binary value.
pub fn exact_rational(x: f64) -> BigRational {
    let scaled = (x * 1e6).round();
    assert!(scaled.is_finite() && scaled.abs() < 9e15, "grid point out of range: {x}");
    BigRational::new(BigInt::from(scaled as i64), BigInt::from(1_000_000))
}

#[allow(non_snake_case)]
pub fn modulus_sq_P6(n: u32, x: f64) -> Result<f64> {
    if n < 7 {
        return Err(Error::Domain(format!("the P_n^6 closed form needs n >= 7, got {n}")));
    }
    Ok(eval_sample(x, 3, n)?.modulus_sq_p6(n))
}

#[allow(non_snake_case)]
pub fn modulus_sq_Pt(n: u32, t: u32, x: f64) -> Result<f64> {
    check_t(t)?;
    if t > n {
        return Err(Error::Domain(format!("need t <= n, got t={t}, n={n}")));
    }
    Ok(eval_sample(x, t, n)?.modulus_sq_pt(n))
}

/// `(p_i, Q_i)` with `q_i = Q_i sqrt(x^2 + 4)`, for `i = 0..4`.
pub fn pq_polynomials(index: usize) -> Result<(IntPolynomial, IntPolynomial)> {
    let d = IntPolynomial::from_descending;
    let pair = match index {
        0 => (
            d(&[1, 0, 19, 0, 146, 0, 584, 0, 1300, 0, 1582, 0, 928, 0, 160]),
            d(&[1, 0, 17, 0, 116, 0, 404, 0, 756, 0, 722, 0, 272, 0]),
        ),
        1 => (d(&[1, 0, 6, 0]), d(&[3, 0, 4])),
        2 => (d(&[1, 0, 9, 0, 24, 0, 18, 0]), d(&[1, 0, 7, 0, 12, 0, 4])),
        3 => (
            d(&[1, 0, 15, 0, 89, 0, 264, 0, 405, 0, 288, 0, 56, 0]),
            d(&[1, 0, 15, 0, 85, 0, 234, 0, 331, 0, 220, 0, 48]),
        ),
        4 => (
            d(&[1, 0, 14, 0, 83, 0, 274, 0, 551, 0, 686, 0, 507, 0, 190, 0, 22]),
            d(&[1, 0, 12, 0, 61, 0, 172, 0, 291, 0, 296, 0, 167, 0, 40, 0]),
        ),
        _ => return Err(Error::Domain(format!("p/q index must be 0..4, got {index}"))),
    };
    Ok(pair)
}

/// `(p_i(x), q_i(x))` with the radical included in `q_i`.
pub fn eval_pq(index: usize, x: f64) -> Result<(f64, f64)> {
    let (p, q) = pq_polynomials(index)?;
    Ok((p.eval_f64(x), q.eval_f64(x) * (x * x + 4.0).sqrt()))
}

/// Factored right-hand sides: `f(5, x)` for `t = 5`, and for `t = 3` the
/// bound `alpha(3,x)(Z1^4 - Z2^4) + beta(3,x) Z1^10 (Z1^4 - 1) + gamma(3,x) Z2^10 (1 - Z2^4)`.
/// Returned as `(sign, factors)`: the product of the factors, negated.
pub fn f_factored_parts(t: u32) -> Result<Vec<(IntPolynomial, u32)>> {
    let d = IntPolynomial::from_descending;
    let x2 = d(&[1, 0, 0]);
    match t {
        5 => Ok(vec![
            (x2, 1),
            (d(&[1, 0, 1]), 2),
            (d(&[1, 0, 3, 0, 1]), 1),
            (d(&[2, 0, 31, 0, 189, 0, 574, 0, 899, 0, 661, 0, 160]), 1),
        ]),
        3 => Ok(vec![
            (x2, 1),
            (d(&[1, 0, 1]), 3),
            (d(&[1, 0, 5]), 1),
            (d(&[2, 0, 23, 0, 104, 0, 238, 0, 290, 0, 171, 0, 32]), 1),
        ]),
        _ => Err(Error::Domain(format!("factored form exists for t = 3 or 5, got {t}"))),
    }
}

/// The expanded factored polynomial (negated product of the parts).
pub fn f_factored_poly(t: u32) -> Result<IntPolynomial> {
    let parts = f_factored_parts(t)?;
    let prod = parts
        .iter()
        .fold(IntPolynomial::one(), |acc, (p, e)| acc * p.pow(*e));
    Ok(-prod)
}

pub fn eval_f_factored(t: u32, x: f64) -> Result<f64> {
    Ok(f_factored_poly(t)?.eval_f64(x))
}

/// The closed-form value that the factored polynomial for `t` reproduces:
/// `f(5, x)` or the `t = 3` bound (the K expansion at `n = 5`).
pub fn f_assembled<S: Field>(x: S, r: S, t: u32) -> Result<S> {
    match t {
        5 => Ok(Core::new(&x, r, 5)?.expand(5)),
        3 => Ok(Core::new(&x, r, 3)?.expand(5)),
        _ => Err(Error::Domain(format!("factored form exists for t = 3 or 5, got {t}"))),
    }
}

/// `|a - b| / max(|b|, 1)` computed exactly, then rounded.
pub fn rel_dev_exact(a: &QuadSurd, b: &QuadSurd) -> f64 {
    let diff = (a.clone() - b.clone()).abs().to_f64();
    diff / b.abs().to_f64().max(1.0)
}

pub fn rel_dev(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1.0)
}

/// 50 points spread over `[-10, 10]`, avoiding 0 and +-2.
pub fn standard_grid() -> Vec<f64> {
    (0..50).map(|k| -9.8 + 0.4 * k as f64).collect()
}

/// `|phi(G, ix)|^2` from the exact characteristic polynomial.
fn direct_modulus_sq(n: u32, l: u32) -> IntPolynomial {
    let g = make_lollipop(n as usize, l as usize).expect("valid lollipop");
    charpoly(&g).modulus_sq_on_imaginary_axis()
}

#[derive(Clone, Debug, Serialize)]
pub struct ModulusIdentityReport {
    pub n: u32,
    pub points: usize,
    /// Worst relative deviation with the closed forms evaluated exactly.
    pub max_rel_dev: f64,
    /// The same comparison with the closed forms in double precision.
    pub max_rel_dev_float: f64,
    /// `(x, t)` of the worst exact deviation; `t = 6` means the `P_n^6` form.
    pub worst: Option<(f64, u32)>,
    pub passed: bool,
}

/// Compares the closed forms for `P_n^6` and every `P_n^t` (odd `t <= n`)
/// against `|phi(., ix)|^2` from the exact characteristic polynomials.
pub fn check_lemma6_identity(n: u32, xgrid: &[f64]) -> Result<ModulusIdentityReport> {
    if n < 7 {
        return Err(Error::Domain(format!("the closed forms need n >= 7, got {n}")));
    }
    let mut ls: Vec<u32> = vec![6];
    ls.extend((3..=n).step_by(2));
    let direct: Vec<IntPolynomial> = ls.iter().map(|&l| direct_modulus_sq(n, l)).collect();
    let mut max_exact: f64 = 0.0;
    let mut max_float: f64 = 0.0;
    let mut worst = None;
    for &x in xgrid {
        if x == 2.0 || x == -2.0 {
            continue;
        }
        let xr = exact_rational(x);
        for (&l, poly) in ls.iter().zip(&direct) {
            let t = if l == 6 { 3 } else { l };
            let exact = eval_exact(&xr, t, n)?;
            let closed = if l == 6 { exact.modulus_sq_p6(n) } else { exact.modulus_sq_pt(n) };
            let want = closed.rational(poly.eval_rational(&xr));
            let dev = rel_dev_exact(&closed, &want);
            if dev > max_exact || worst.is_none() {
                max_exact = max_exact.max(dev);
                worst = Some((x, l));
            }
            let float = eval_sample(x, t, n)?;
            let fc = if l == 6 { float.modulus_sq_p6(n) } else { float.modulus_sq_pt(n) };
            max_float = max_float.max(rel_dev(fc, want.to_f64()));
        }
    }
    Ok(ModulusIdentityReport {
        n,
        points: xgrid.len(),
        max_rel_dev: max_exact,
        max_rel_dev_float: max_float,
        worst,
        passed: max_exact <= 1e-9,
    })
}

/// `K(n, t, x)` from its definition
/// `|phi(P_{n+2}^t) phi(P_n^6)|^2 - |phi(P_{n+2}^6) phi(P_n^t)|^2` at `ix`,
/// exactly.
pub fn k_definition_exact(n: u32, t: u32, x: &BigRational) -> BigRational {
    let m = |k: u32, l: u32| direct_modulus_sq(k, l).eval_rational(x);
    m(n + 2, t) * m(n, 6) - m(n + 2, 6) * m(n, t)
}

/// Worst relative deviation between the K definition and its expansion.
pub fn check_k_expansion(n: u32, t: u32, xgrid: &[f64]) -> Result<f64> {
    check_t(t)?;
    let mut worst: f64 = 0.0;
    for &x in xgrid {
        let xr = exact_rational(x);
        let cf = eval_exact(&xr, t, n)?;
        let def = cf.k_val.rational(k_definition_exact(n, t, &xr));
        worst = worst.max(rel_dev_exact(&cf.k_val, &def));
    }
    Ok(worst)
}

/// Worst relative deviation between the alpha/beta/gamma assembly and the
/// factored polynomial for `t` in {3, 5}, evaluated exactly at each grid
/// point.
pub fn check_f_factored(t: u32, xgrid: &[f64]) -> Result<f64> {
    let poly = f_factored_poly(t)?;
    let mut worst: f64 = 0.0;
    for &x in xgrid {
        let xr = exact_rational(x);
        let (xs, r) = QuadSurd::with_radical(&xr);
        let assembled = f_assembled(xs, r, t)?;
        let want = assembled.rational(poly.eval_rational(&xr));
        worst = worst.max(rel_dev_exact(&assembled, &want));
    }
    Ok(worst)
}

/// The alpha/beta/gamma assembly for `t` in {3, 5} minus the factored
/// polynomial, as a rational function of `z` with `x = z - 1/z`. Zero means
/// the two agree identically: `z -> z - 1/z` maps `(0, inf)` onto `R`.
pub fn f_factored_residual(t: u32) -> Result<RatFunc> {
    let z = RatFunc::var();
    let inv = z.lift(1) / z.clone();
    let x = z.clone() - inv.clone();
    let r = z + inv;
    let assembled = f_assembled(x, r, t)?;
    Ok(assembled - RatFunc::compose_x(&f_factored_poly(t)?))
}

/// `x = z - 1/z` for rational `z > 0`; the radical is then `z + 1/z`.
pub fn x_of_z(z: &BigRational) -> (BigRational, BigRational) {
    let inv = z.recip();
    (z - &inv, z + inv)
}

/// Worst relative deviation between the assembly and the factored
/// polynomial at rational `z`, evaluated exactly in `Q`.
pub fn check_f_factored_at_z(t: u32, zs: &[BigRational]) -> Result<f64> {
    let poly = f_factored_poly(t)?;
    let mut worst: f64 = 0.0;
    for z in zs {
        let (x, r) = x_of_z(z);
        let got = f_assembled(x.clone(), r, t)?;
        let want = poly.eval_rational(&x);
        let dev = Scalar::to_f64(&Signed::abs(&(got - want.clone()))) / Scalar::to_f64(&want).abs().max(1.0);
        worst = worst.max(dev);
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * b.abs().max(1.0)
    }

    #[test]
    fn origin_values() {
        let s = eval_sample(0.0, 3, 8).unwrap();
        assert!(close(s.z1, 1.0, 1e-15) && close(s.z2, -1.0, 1e-15));
        assert!(close(s.a1, 2.0, 1e-14) && close(s.a2, 2.0, 1e-14));
        assert!(close(s.b11, 0.5, 1e-14));
        assert!(close(s.b12, 1.0, 1e-14));
        assert!(close(s.b21, 0.5, 1e-14));
        assert!(close(s.b22, -1.0, 1e-14));
        let s = eval_sample(2.0, 3, 8).unwrap();
        assert!(close(s.z1, 2.414_213_56, 1e-8));
        assert!(matches!(eval_sample(1.0, 4, 8), Err(Error::Domain(_))));
    }

    #[test]
    fn moduli_examples() {
        assert!(close(modulus_sq_P6(8, 1.0).unwrap(), 2304.0, 1e-12));
        assert!(close(modulus_sq_P6(8, 0.0).unwrap(), 16.0, 1e-12));
        assert!(close(modulus_sq_Pt(5, 3, 0.0).unwrap(), 4.0, 1e-12));
        assert!(modulus_sq_P6(6, 1.0).is_err());
        assert!(modulus_sq_Pt(5, 7, 1.0).is_err());
    }

    #[test]
    fn pq_examples() {
        assert_eq!(eval_pq(1, 0.0).unwrap(), (0.0, 8.0));
        assert_eq!(eval_pq(3, 0.0).unwrap(), (0.0, 96.0));
        assert_eq!(eval_pq(4, 1.0).unwrap().0, 2328.0);
        assert!(eval_pq(5, 0.0).is_err());
    }

    #[test]
    fn factored_examples() {
        assert_eq!(eval_f_factored(5, 1.0).unwrap(), -50320.0);
        assert_eq!(eval_f_factored(3, 1.0).unwrap(), -41280.0);
        assert_eq!(eval_f_factored(5, 0.0).unwrap(), 0.0);
        assert!(eval_f_factored(7, 1.0).is_err());
        let one = exact_rational(1.0);
        let (x, r) = QuadSurd::with_radical(&one);
        let f5 = f_assembled(x.clone(), r.clone(), 5).unwrap();
        assert_eq!(f5.signum(), -1);
        assert!((f5 + x.lift(50320)).is_zero());
        let b3 = f_assembled(x.clone(), r, 3).unwrap();
        assert!((b3 + x.lift(41280)).is_zero());
    }

    #[test]
    fn moduli_small() {
        let grid = [3.0, -3.0, 1.5, -1.5, 0.5];
        let r = check_lemma6_identity(8, &grid).unwrap();
        assert!(r.passed, "{r:?}");
        assert_eq!(r.max_rel_dev, 0.0);
        let r = check_lemma6_identity(7, &[0.0]).unwrap();
        assert!(r.passed);
        assert_eq!(direct_modulus_sq(7, 6).eval_f64(0.0), 0.0);
        assert_eq!(modulus_sq_P6(7, 0.0).unwrap().abs(), 0.0);
    }

    #[test]
    fn expansions_agree_exactly() {
        for xv in [0.75, -1.25, 3.0] {
            let xr = exact_rational(xv);
            for t in [3, 5, 7] {
                let cf = eval_exact(&xr, t, 9).unwrap();
                assert!((cf.alpha_expanded() - cf.alpha.clone()).is_zero());
                assert!((cf.beta_expanded() - cf.beta.clone()).is_zero());
                assert!((cf.gamma_expanded() - cf.gamma.clone()).is_zero());
                assert!((cf.f_from_d() - cf.f_val.clone()).is_zero());
            }
        }
    }

    #[test]
    fn symbolic_residual_vanishes() {
        for t in [3, 5] {
            assert!(f_factored_residual(t).unwrap().is_zero());
        }
    }

    #[test]
    fn k_definition_matches_expansion() {
        let worst = check_k_expansion(17, 3, &[0.5, -1.2, 2.5]).unwrap();
        assert_eq!(worst, 0.0);
    }
}
