//! Globally adaptive Gauss-Kronrod (7, 15) quadrature on finite intervals.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_728_0,
];
/// Gauss weights for the nodes `XGK[1], XGK[3], XGK[5], XGK[7]`.
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// Result of one quadrature: the estimate and an error estimate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Quadrature {
    pub value: f64,
    pub error: f64,
    pub evaluations: usize,
}

fn kronrod<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = WGK[7] * fc;
    let mut g = WG[3] * fc;
    for j in 0..7 {
        let d = h * XGK[j];
        let s = f(c - d) + f(c + d);
        k += WGK[j] * s;
        if j % 2 == 1 {
            g += WG[j / 2] * s;
        }
    }
    let err = (h * (k - g)).abs();
    // The usual (200 err / |I|)^1.5 sharpening is skipped: plain |K - G| is
    // pessimistic, which is what a tolerance contract wants.
    (h * k, err)
}

struct Piece {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Piece {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Piece {}
impl PartialOrd for Piece {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Piece {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

/// Integrates `f` over `[a, b]` until the summed error estimate is at most
/// `tol`, splitting the worst piece each round.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64, max_pieces: usize) -> Result<Quadrature> {
    let (value, error) = kronrod(&f, a, b);
    let mut heap = BinaryHeap::new();
    heap.push(Piece { a, b, value, error });
    let mut total = value;
    let mut total_err = error;
    let mut evaluations = 15;
    while total_err > tol {
        if heap.len() >= max_pieces {
            return Err(Error::Convergence {
                what: "adaptive quadrature",
                estimate: total,
                error: total_err,
            });
        }
        let worst = heap.pop().expect("heap is never empty");
        let m = 0.5 * (worst.a + worst.b);
        if m <= worst.a || m >= worst.b {
            return Err(Error::Convergence {
                what: "adaptive quadrature (interval exhausted)",
                estimate: total,
                error: total_err,
            });
        }
        let (v1, e1) = kronrod(&f, worst.a, m);
        let (v2, e2) = kronrod(&f, m, worst.b);
        evaluations += 30;
        heap.push(Piece { a: worst.a, b: m, value: v1, error: e1 });
        heap.push(Piece { a: m, b: worst.b, value: v2, error: e2 });
        // Re-sum instead of updating incrementally so cancellation in the
        // running totals cannot hide error.
        total = heap.iter().map(|p| p.value).sum();
        total_err = heap.iter().map(|p| p.error).sum();
    }
    if !total.is_finite() {
        return Err(Error::Convergence {
            what: "adaptive quadrature (non-finite integrand)",
            estimate: total,
            error: total_err,
        });
    }
    Ok(Quadrature {
        value: total,
        error: total_err,
        evaluations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomials_are_exact() {
        let q = integrate(|x| x.powi(10) - 3.0 * x * x, 0.0, 2.0, 1e-12, 10).unwrap();
        assert!((q.value - (2f64.powi(11) / 11.0 - 8.0)).abs() < 1e-11);
    }

    #[test]
    fn smooth_and_peaked() {
        let q = integrate(|x: f64| (1.0 + x * x).ln(), 0.0, 1.0, 1e-13, 1000).unwrap();
        let exact = 2f64.ln() - 2.0 + std::f64::consts::FRAC_PI_2;
        assert!((q.value - exact).abs() < 1e-12);
        let q = integrate(|x: f64| 1e-2 / (1e-4 + x * x), -1.0, 1.0, 1e-10, 1000).unwrap();
        let exact = 2.0 * (100f64).atan();
        assert!((q.value - exact).abs() < 1e-9);
    }

    #[test]
    fn gives_up_with_estimate() {
        let r = integrate(|x: f64| x.sin() * 1e6, 0.0, 1000.0, 1e-14, 4);
        assert!(matches!(r, Err(Error::Convergence { .. })));
    }
}
