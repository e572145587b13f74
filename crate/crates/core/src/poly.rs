//! Dense univariate polynomials with arbitrary-precision integer
//! coefficients, plus the rational-coefficient helpers needed for exact
//! gcds and square-free decomposition.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// `coeffs[k]` is the coefficient of `x^k`. Never carries trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    /// Convenience constructor, constant term first.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Constructor with the leading coefficient first, as polynomials are
    /// usually written.
    pub fn from_descending(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().rev().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplicity of 0 as a root (number of vanishing low coefficients).
    pub fn zero_root_multiplicity(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Divides by `x^k`, which must divide the polynomial.
    pub fn shift_down(&self, k: usize) -> Self {
        debug_assert!(self.coeffs.iter().take(k).all(Zero::is_zero));
        Self::new(self.coeffs.iter().skip(k).cloned().collect())
    }

    /// `x^d p(1/x)` for `d = deg p`.
    pub fn reversed(&self) -> Self {
        Self::new(self.coeffs.iter().rev().cloned().collect())
    }

    /// `|p(ix)|^2` as a polynomial in real `x`.
    ///
    /// Writing `p(ix) = R(x) + i I(x)`, the real part collects the even
    /// powers with signs `(-1)^{k/2}` and the imaginary part the odd ones,
    /// so `R^2 + I^2` has integer coefficients.
    pub fn modulus_sq_on_imaginary_axis(&self) -> Self {
        let mut re = vec![BigInt::zero(); self.coeffs.len()];
        let mut im = vec![BigInt::zero(); self.coeffs.len()];
        for (k, c) in self.coeffs.iter().enumerate() {
            // i^k = 1, i, -1, -i
            match k % 4 {
                0 => re[k] = c.clone(),
                1 => im[k] = c.clone(),
                2 => re[k] = -c,
                _ => im[k] = -c,
            }
        }
        let re = Self::new(re);
        let im = Self::new(im);
        &(&re * &re) + &(&im * &im)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        // Homogenized Horner keeps everything integral until one final division.
        let (num, den) = (x.numer(), x.denom());
        let Some(d) = self.degree() else {
            return BigRational::zero();
        };
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * num + c * &den_pow;
            den_pow *= den;
        }
        BigRational::new(acc, den.pow(d as u32))
    }

    /// Sign of `p(m / 2^e)`.
    pub fn sign_at_dyadic(&self, m: &BigInt, e: u32) -> Sign {
        let mut acc = BigInt::zero();
        for (i, c) in self.coeffs.iter().rev().enumerate() {
            // acc * m + c * 2^(e*i); i counts down from the leading term
            acc = acc * m + (c << (e as usize * i));
        }
        acc.sign()
    }

    pub fn sign_at_rational(&self, x: &BigRational) -> Sign {
        let v = self.eval_rational(x);
        if v.is_zero() {
            Sign::NoSign
        } else if v.is_positive() {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_f64().unwrap_or(f64::NAN);
        }
        acc
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::NAN))
            .collect()
    }

    /// Gcd of the coefficients (nonnegative).
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a mod b`.
    pub fn pseudo_rem(&self, b: &Self) -> Self {
        let db = b.degree().expect("pseudo-division by zero polynomial");
        let lb = b.leading().unwrap().clone();
        let mut r = self.clone();
        let mut remaining = match self.degree() {
            Some(da) if da >= db => da - db + 1,
            _ => return r,
        };
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.leading().unwrap().clone();
            let shift = dr - db;
            let mut coeffs: Vec<BigInt> = r.coeffs.iter().map(|c| c * &lb).collect();
            for (k, c) in b.coeffs.iter().enumerate() {
                coeffs[k + shift] -= &lr * c;
            }
            r = Self::new(coeffs);
            remaining -= 1;
        }
        r.scale(&lb.pow(remaining as u32))
    }

    /// Exact quotient and remainder over the rationals.
    pub fn div_rem_rational(&self, b: &Self) -> (RatPoly, RatPoly) {
        RatPoly::from_int(self).div_rem(&RatPoly::from_int(b))
    }

    /// Pretty form in descending powers, e.g. `x^3 - 3x - 2`.
    pub fn pretty(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let unit = mag.is_one() && k > 0;
            if !unit {
                s.push_str(&mag.to_string());
            }
            match k {
                0 => {}
                1 => s.push('x'),
                _ => s.push_str(&format!("x^{k}")),
            }
        }
        s
    }

    /// Coefficient `a_k` of `x^(n-k)` in the `x^n + a_1 x^(n-1) + ...`
    /// convention, with `n` the degree.
    pub fn descending_coeff(&self, k: usize) -> BigInt {
        match self.degree() {
            Some(n) if k <= n => self.coeffs[n - k].clone(),
            _ => BigInt::zero(),
        }
    }

    /// The bipartite coefficients `b_{2k} = (-1)^k a_{2k}`, or `None` when
    /// an odd-index coefficient is nonzero or some `b_{2k}` is negative.
    pub fn bipartite_coefficients(&self) -> Option<Vec<BigInt>> {
        let n = self.degree()?;
        if (1..=n).step_by(2).any(|k| !self.descending_coeff(k).is_zero()) {
            return None;
        }
        let b: Vec<BigInt> = (0..=n / 2)
            .map(|k| {
                let a = self.descending_coeff(2 * k);
                if k % 2 == 0 {
                    a
                } else {
                    -a
                }
            })
            .collect();
        b.iter().all(|c| !c.is_negative()).then_some(b)
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({})", self.pretty())
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

/// Serialized as a JSON array of decimal strings, constant term first.
impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let strs: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        strs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let strs = Vec::<String>::deserialize(d)?;
        let coeffs = strs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(D::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IntPolynomial::new(coeffs))
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        -&self
    }
}

/// Polynomial with rational coefficients; only used where exact division is
/// needed (gcds, square-free decomposition).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn from_int(p: &IntPolynomial) -> Self {
        Self::new(p.coeffs.iter().cloned().map(BigRational::from_integer).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigRational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let z = BigRational::zero();
        Self::new(
            (0..len)
                .map(|k| self.coeffs.get(k).unwrap_or(&z) - rhs.coeffs.get(k).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn div_rem(&self, b: &Self) -> (Self, Self) {
        let db = b.degree().expect("division by zero polynomial");
        let lb = b.coeffs[db].clone();
        let mut r = self.coeffs.clone();
        let qlen = self.coeffs.len().saturating_sub(db);
        let mut q = vec![BigRational::zero(); qlen];
        for i in (0..qlen).rev() {
            let c = &r[i + db] / &lb;
            if !c.is_zero() {
                for (k, bc) in b.coeffs.iter().enumerate() {
                    r[i + k] -= &c * bc;
                }
            }
            q[i] = c;
        }
        r.truncate(db);
        (Self::new(q), Self::new(r))
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => Self::default(),
            Some(l) => {
                let l = l.clone();
                Self::new(self.coeffs.iter().map(|c| c / &l).collect())
            }
        }
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Primitive integer polynomial with the same roots (positive leading
    /// coefficient).
    pub fn to_primitive_int(&self) -> IntPolynomial {
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        IntPolynomial::new(
            self.coeffs
                .iter()
                .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
                .collect(),
        )
        .primitive()
    }
}

/// Yun's square-free factorization: returns `(f_i, i)` with `p = c * prod f_i^i`,
/// each `f_i` primitive, square-free and pairwise coprime. Constant factors
/// are dropped.
pub fn squarefree_decomposition(p: &IntPolynomial) -> Vec<(IntPolynomial, usize)> {
    assert!(!p.is_zero(), "square-free decomposition of the zero polynomial");
    let f = RatPoly::from_int(p).monic();
    let fp = f.derivative();
    let mut out = Vec::new();
    if fp.is_zero() {
        return out;
    }
    let a0 = f.gcd(&fp);
    let (mut b, _) = f.div_rem(&a0);
    let (c, _) = fp.div_rem(&a0);
    let mut d = c.sub(&b.derivative());
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&d);
        if a.degree().unwrap_or(0) > 0 {
            out.push((a.to_primitive_int(), i));
        }
        let (nb, _) = b.div_rem(&a);
        let (c, _) = d.div_rem(&a);
        d = c.sub(&nb.derivative());
        b = nb;
        i += 1;
    }
    out
}

/// The product of the odd-multiplicity square-free factors: its real roots
/// are exactly the points where `p` changes sign.
pub fn odd_part(p: &IntPolynomial) -> IntPolynomial {
    squarefree_decomposition(p)
        .into_iter()
        .filter(|(_, m)| m % 2 == 1)
        .fold(IntPolynomial::one(), |acc, (f, _)| &acc * &f)
}

/// Square-free part `p / gcd(p, p')`, primitive.
pub fn squarefree_part(p: &IntPolynomial) -> IntPolynomial {
    squarefree_decomposition(p)
        .into_iter()
        .fold(IntPolynomial::one(), |acc, (f, _)| &acc * &f)
}
