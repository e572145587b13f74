//! Number types for the closed-form evaluations: plain `f64`, rationals,
//! exact numbers `a + b sqrt(D)`, and rational functions of one variable.
//!
//! The closed forms only ever involve one radical, `sqrt(x^2 + 4)`, so at a
//! rational `x` every quantity lives in `Q(sqrt(D))` with `D = x^2 + 4`.
//! Writing `x = z - 1/z` makes the radical `z + 1/z`, so symbolically every
//! quantity is a rational function of `z`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::poly::IntPolynomial;

pub trait Field:
    Clone
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// The integer `v`, in the same field as `self`.
    fn lift(&self, v: i64) -> Self;

    fn powu(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.lift(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }

    fn square(&self) -> Self {
        self.clone() * self.clone()
    }
}

/// A field with an order: values can be rounded and their sign decided.
pub trait Scalar: Field {
    fn to_f64(&self) -> f64;

    /// -1, 0 or 1.
    fn signum(&self) -> i8;
}

impl Field for f64 {
    fn lift(&self, v: i64) -> Self {
        v as f64
    }

    fn powu(&self, e: u32) -> Self {
        self.powi(e as i32)
    }
}

impl Scalar for f64 {
    fn to_f64(&self) -> f64 {
        *self
    }

    fn signum(&self) -> i8 {
        if *self > 0.0 {
            1
        } else if *self < 0.0 {
            -1
        } else {
            0
        }
    }
}

impl Field for BigRational {
    fn lift(&self, v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}

impl Scalar for BigRational {
    fn to_f64(&self) -> f64 {
        rat_f64(self)
    }

    fn signum(&self) -> i8 {
        rat_sign(self)
    }
}

/// `a + b sqrt(d)`, `d > 0` rational. Values with different `d` must not be
/// mixed.
#[derive(Clone, PartialEq, Eq)]
pub struct QuadSurd {
    pub a: BigRational,
    pub b: BigRational,
    d: Arc<BigRational>,
}

impl QuadSurd {
    /// `x` and `sqrt(x^2 + 4)` as elements of `Q(sqrt(x^2 + 4))`.
    pub fn with_radical(x: &BigRational) -> (QuadSurd, QuadSurd) {
        let d = Arc::new(x * x + BigRational::from_integer(4.into()));
        let xs = QuadSurd {
            a: x.clone(),
            b: BigRational::zero(),
            d: d.clone(),
        };
        let r = QuadSurd {
            a: BigRational::zero(),
            b: BigRational::one(),
            d,
        };
        (xs, r)
    }

    pub fn rational(&self, q: BigRational) -> QuadSurd {
        QuadSurd {
            a: q,
            b: BigRational::zero(),
            d: self.d.clone(),
        }
    }

    pub fn radicand(&self) -> &BigRational {
        &self.d
    }

    /// `a^2 - b^2 d`, the field norm.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.b * &self.b * &*self.d
    }

    pub fn is_zero(&self) -> bool {
        self.signum() == 0
    }

    pub fn abs(&self) -> QuadSurd {
        if self.signum() < 0 {
            -self.clone()
        } else {
            self.clone()
        }
    }

    pub fn cmp_value(&self, other: &QuadSurd) -> Ordering {
        (self.clone() - other.clone()).signum().cmp(&0)
    }
}

fn rat_f64(q: &BigRational) -> f64 {
    ToPrimitive::to_f64(q).unwrap_or(f64::NAN)
}

fn rat_sign(q: &BigRational) -> i8 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

impl Field for QuadSurd {
    fn lift(&self, v: i64) -> Self {
        self.rational(BigRational::from_integer(BigInt::from(v)))
    }
}

impl Scalar for QuadSurd {
    /// Accurate to a few ulps: when `a` and `b sqrt(d)` have opposite signs
    /// the value is computed as `norm / (a - b sqrt(d))`, which does not
    /// cancel.
    fn to_f64(&self) -> f64 {
        let sd = rat_f64(&self.d).sqrt();
        let (fa, fb) = (rat_f64(&self.a), rat_f64(&self.b));
        if rat_sign(&self.a) * rat_sign(&self.b) >= 0 {
            fa + fb * sd
        } else {
            rat_f64(&self.norm()) / (fa - fb * sd)
        }
    }

    fn signum(&self) -> i8 {
        let (sa, sb) = (rat_sign(&self.a), rat_sign(&self.b));
        if sa >= 0 && sb >= 0 {
            return (sa + sb).signum();
        }
        if sa <= 0 && sb <= 0 {
            return -((-sa - sb).signum());
        }
        // opposite signs: the larger of a^2 and b^2 d wins
        match rat_sign(&self.norm()) {
            1 => sa,
            -1 => sb,
            _ => 0,
        }
    }
}

impl Add for QuadSurd {
    type Output = QuadSurd;
    fn add(self, o: QuadSurd) -> QuadSurd {
        debug_assert!(self.d == o.d);
        QuadSurd {
            a: self.a + o.a,
            b: self.b + o.b,
            d: self.d,
        }
    }
}

impl Sub for QuadSurd {
    type Output = QuadSurd;
    fn sub(self, o: QuadSurd) -> QuadSurd {
        debug_assert!(self.d == o.d);
        QuadSurd {
            a: self.a - o.a,
            b: self.b - o.b,
            d: self.d,
        }
    }
}

impl Mul for QuadSurd {
    type Output = QuadSurd;
    fn mul(self, o: QuadSurd) -> QuadSurd {
        debug_assert!(self.d == o.d);
        let a = &self.a * &o.a + &self.b * &o.b * &*self.d;
        let b = &self.a * &o.b + &self.b * &o.a;
        QuadSurd { a, b, d: self.d }
    }
}

impl Div for QuadSurd {
    type Output = QuadSurd;
    fn div(self, o: QuadSurd) -> QuadSurd {
        let n = o.norm();
        assert!(!n.is_zero(), "division by zero in Q(sqrt d)");
        let conj = QuadSurd {
            a: o.a.clone(),
            b: -o.b.clone(),
            d: o.d.clone(),
        };
        let p = self * conj;
        QuadSurd {
            a: p.a / &n,
            b: p.b / &n,
            d: p.d,
        }
    }
}

impl Neg for QuadSurd {
    type Output = QuadSurd;
    fn neg(self) -> QuadSurd {
        QuadSurd {
            a: -self.a,
            b: -self.b,
            d: self.d,
        }
    }
}

impl fmt::Debug for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {} sqrt({})) ~ {:e}", self.a, self.b, self.d, self.to_f64())
    }
}

/// `num / den` with integer polynomial numerator and denominator in one
/// variable `z`. Only common factors `z` and `z^2 + 1` and integer content
/// are cancelled: those are the only denominators the closed forms produce,
/// and equality tests go through cross-multiplication anyway.
#[derive(Clone)]
pub struct RatFunc {
    pub num: IntPolynomial,
    pub den: IntPolynomial,
}

/// `p / (z^2 + 1)` when the division is exact.
fn div_z2_plus_1(p: &IntPolynomial) -> Option<IntPolynomial> {
    let c = p.coeffs();
    if c.len() < 3 {
        return None;
    }
    // p = (z^2 + 1) q: q_k = p_{k+2} - q_{k+2}, from the top down
    let n = c.len() - 2;
    let mut q = vec![BigInt::zero(); n];
    for k in (0..n).rev() {
        let above = if k + 2 < n { q[k + 2].clone() } else { BigInt::zero() };
        q[k] = &c[k + 2] - above;
    }
    let r0 = &c[0] - &q[0];
    let r1 = &c[1] - if n > 1 { q[1].clone() } else { BigInt::zero() };
    (r0.is_zero() && r1.is_zero()).then(|| IntPolynomial::new(q))
}

fn divide_content(p: &IntPolynomial, g: &BigInt) -> IntPolynomial {
    IntPolynomial::new(p.coeffs().iter().map(|c| c / g).collect())
}

impl RatFunc {
    /// The variable `z`.
    pub fn var() -> RatFunc {
        RatFunc::poly(IntPolynomial::x())
    }

    pub fn poly(p: IntPolynomial) -> RatFunc {
        RatFunc {
            num: p,
            den: IntPolynomial::one(),
        }
    }

    fn reduced(mut num: IntPolynomial, mut den: IntPolynomial) -> RatFunc {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RatFunc::poly(num);
        }
        let k = num.zero_root_multiplicity().min(den.zero_root_multiplicity());
        if k > 0 {
            num = num.shift_down(k);
            den = den.shift_down(k);
        }
        while let (Some(a), Some(b)) = (div_z2_plus_1(&num), div_z2_plus_1(&den)) {
            num = a;
            den = b;
        }
        let g = num.content().gcd(&den.content());
        let g = if den.leading().is_some_and(|l| l.is_negative()) { -g } else { g };
        if g != BigInt::one() {
            num = divide_content(&num, &g);
            den = divide_content(&den, &g);
        }
        RatFunc { num, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Substitutes `x = z - 1/z` into `p(x)`.
    pub fn compose_x(p: &IntPolynomial) -> RatFunc {
        let x = RatFunc::var() - RatFunc::var().lift(1) / RatFunc::var();
        p.coeffs()
            .iter()
            .rev()
            .fold(x.lift(0), |acc, c| acc * x.clone() + RatFunc::poly(IntPolynomial::constant(c.clone())))
    }
}

impl Field for RatFunc {
    fn lift(&self, v: i64) -> Self {
        RatFunc::poly(IntPolynomial::constant(BigInt::from(v)))
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, o: RatFunc) -> RatFunc {
        if self.den == o.den {
            return RatFunc::reduced(&self.num + &o.num, self.den);
        }
        RatFunc::reduced(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, o: RatFunc) -> RatFunc {
        self + (-o)
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, o: RatFunc) -> RatFunc {
        RatFunc::reduced(&self.num * &o.num, &self.den * &o.den)
    }
}

impl Div for RatFunc {
    type Output = RatFunc;
    fn div(self, o: RatFunc) -> RatFunc {
        assert!(!o.num.is_zero(), "division by the zero rational function");
        RatFunc::reduced(&self.num * &o.den, &self.den * &o.num)
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -self.num,
            den: self.den,
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}
