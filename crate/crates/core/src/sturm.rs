//! Sturm sequences over the integers.
//!
//! `s_0 = p`, `s_1 = p'`, and `s_{k+1}` is the negated remainder of
//! `s_{k-1}` by `s_k`, computed by pseudo-division and rescaled by positive
//! integers only so that signs are preserved. For a square-free `p`,
//! `V(a) - V(b)` counts the distinct real roots in `(a, b]`. For a
//! non-square-free `p` the count of distinct roots is still right as long as
//! neither endpoint is a root, since every chain member shares the factor
//! `gcd(p, p')`.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::poly::IntPolynomial;

/// Evaluation point for sign-variation counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Point {
    NegInf,
    PosInf,
    Rational(BigRational),
    /// `m / 2^e`
    Dyadic(BigInt, u32),
}

impl Point {
    pub fn integer(v: i64) -> Self {
        Point::Rational(BigRational::from_integer(BigInt::from(v)))
    }
}

/// Sign of `p` at a point (at infinity: the limiting sign).
pub fn sign_at(p: &IntPolynomial, at: &Point) -> Sign {
    let Some(d) = p.degree() else {
        return Sign::NoSign;
    };
    let lc = p.leading().unwrap().sign();
    match at {
        Point::PosInf => lc,
        Point::NegInf => {
            if d % 2 == 0 {
                lc
            } else {
                -lc
            }
        }
        Point::Rational(x) => p.sign_at_rational(x),
        Point::Dyadic(m, e) => p.sign_at_dyadic(m, *e),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SturmChain {
    pub polys: Vec<IntPolynomial>,
}

fn divide_positive_content(p: IntPolynomial) -> IntPolynomial {
    let g = p.content();
    if g.is_zero() || g == BigInt::from(1) {
        return p;
    }
    IntPolynomial::new(p.coeffs().iter().map(|c| c / &g).collect())
}

/// Sign correction for a pseudo-remainder: `prem = lc^(delta+1) * rem`.
fn prem_sign(divisor: &IntPolynomial, dividend_deg: usize) -> Sign {
    let db = divisor.degree().unwrap();
    let lc = divisor.leading().unwrap().sign();
    if lc == Sign::Minus && (dividend_deg + 1 - db) % 2 == 1 {
        Sign::Minus
    } else {
        Sign::Plus
    }
}

impl SturmChain {
    pub fn new(p: &IntPolynomial) -> Self {
        assert!(!p.is_zero(), "Sturm chain of the zero polynomial");
        let mut polys = vec![p.clone()];
        let d = p.derivative();
        if d.is_zero() {
            return SturmChain { polys };
        }
        polys.push(divide_positive_content(d));
        loop {
            let n = polys.len();
            let (a, b) = (&polys[n - 2], &polys[n - 1]);
            if b.degree() == Some(0) {
                break;
            }
            let r = a.pseudo_rem(b);
            if r.is_zero() {
                break;
            }
            let next = match prem_sign(b, a.degree().unwrap()) {
                Sign::Minus => r,
                _ => -r,
            };
            polys.push(divide_positive_content(next));
        }
        SturmChain { polys }
    }

    pub fn variations(&self, at: &Point) -> usize {
        let mut count = 0;
        let mut last = Sign::NoSign;
        for p in &self.polys {
            let s = sign_at(p, at);
            if s == Sign::NoSign {
                continue;
            }
            if last != Sign::NoSign && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Distinct real roots in `(a, b]`.
    pub fn count_between(&self, a: &Point, b: &Point) -> usize {
        self.variations(a).saturating_sub(self.variations(b))
    }

    /// Distinct real roots.
    pub fn count_real(&self) -> usize {
        self.count_between(&Point::NegInf, &Point::PosInf)
    }

    /// Checks that the stored chain really is the Sturm chain of its first
    /// member: `s_1` is a positive multiple of `s_0'`, each `s_{k+1}` is a
    /// negative multiple of the remainder of `s_{k-1}` by `s_k`, and the
    /// chain stops exactly when the next remainder vanishes.
    pub fn verify(&self) -> bool {
        let Some(p) = self.polys.first() else {
            return false;
        };
        if p.is_zero() {
            return false;
        }
        let d = p.derivative();
        if d.is_zero() {
            return self.polys.len() == 1;
        }
        if self.polys.len() < 2 || !positive_multiple(&self.polys[1], &d) {
            return false;
        }
        for k in 1..self.polys.len() {
            let (a, b) = (&self.polys[k - 1], &self.polys[k]);
            let Some(db) = b.degree() else {
                return false;
            };
            let r = if db == 0 {
                IntPolynomial::zero()
            } else {
                a.pseudo_rem(b)
            };
            match self.polys.get(k + 1) {
                None => {
                    if !r.is_zero() {
                        return false;
                    }
                }
                Some(next) => {
                    if r.is_zero() {
                        return false;
                    }
                    let rem = match prem_sign(b, a.degree().unwrap()) {
                        Sign::Minus => -r,
                        _ => r,
                    };
                    // next must be a positive multiple of -rem
                    if !positive_multiple(next, &-rem) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// True when `a = c * b` for some rational `c > 0`.
fn positive_multiple(a: &IntPolynomial, b: &IntPolynomial) -> bool {
    if a.degree() != b.degree() || a.is_zero() {
        return false;
    }
    let (la, lb) = (a.leading().unwrap(), b.leading().unwrap());
    if la.is_positive() != lb.is_positive() {
        return false;
    }
    // a * lb == b * la coefficientwise
    a.coeffs()
        .iter()
        .zip(b.coeffs())
        .all(|(x, y)| x * lb == y * la)
}

/// Cauchy bound rounded up to a power of two: every real root lies in
/// `(-2^k, 2^k)`.
pub fn root_bound_log2(p: &IntPolynomial) -> u32 {
    let lc = p.leading().expect("nonzero polynomial").abs();
    let max = p
        .coeffs()
        .iter()
        .take(p.coeffs().len() - 1)
        .map(Signed::abs)
        .max()
        .unwrap_or_default();
    // 1 + max/lc <= 2^k
    let bound = BigInt::from(1) + (max + &lc - 1u32) / &lc;
    let mut k = 0u32;
    while (BigInt::from(1) << k as usize) <= bound {
        k += 1;
    }
    k
}
