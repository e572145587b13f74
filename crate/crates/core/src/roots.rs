//! Real-root isolation by Sturm sequences and bisection on dyadic intervals.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{squarefree_decomposition, IntPolynomial};
use crate::sturm::{root_bound_log2, Point, SturmChain};

/// An isolating interval `[lo, hi]` for one distinct real root, with the
/// root's multiplicity in the original polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootEnclosure {
    pub lo: BigRational,
    pub hi: BigRational,
    pub multiplicity: usize,
}

impl RootEnclosure {
    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint_f64(&self) -> f64 {
        ((&self.lo + &self.hi) / BigRational::from_integer(2.into()))
            .to_f64()
            .unwrap_or(f64::NAN)
    }
}

/// Energy (or any other real quantity) with a rigorous error radius.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct EnergyValue {
    pub value: f64,
    pub radius: f64,
}

impl EnergyValue {
    pub fn contains(&self, x: f64) -> bool {
        (x - self.value).abs() <= self.radius
    }

    pub fn overlaps(&self, other: &EnergyValue) -> bool {
        (self.value - other.value).abs() <= self.radius + other.radius
    }
}

/// `[a/2^e, b/2^e]` with `a <= b`, root of the square-free factor `factor`.
#[derive(Clone, Debug)]
struct Dyadic {
    factor: usize,
    a: BigInt,
    b: BigInt,
    e: u32,
    /// Sign of the factor at the left end; `NoSign` when `a == b` is the root.
    left: Sign,
}

impl Dyadic {
    fn exact(&self) -> bool {
        self.a == self.b
    }

    fn lo(&self) -> BigRational {
        BigRational::new(self.a.clone(), BigInt::from(1) << self.e as usize)
    }

    fn hi(&self) -> BigRational {
        BigRational::new(self.b.clone(), BigInt::from(1) << self.e as usize)
    }

    /// Halves the interval. Only valid for simple roots with a known left sign.
    fn bisect(&mut self, f: &IntPolynomial) {
        if self.exact() {
            return;
        }
        let m = &self.a + &self.b;
        self.a <<= 1;
        self.b <<= 1;
        self.e += 1;
        match f.sign_at_dyadic(&m, self.e) {
            Sign::NoSign => {
                self.a = m.clone();
                self.b = m;
                self.left = Sign::NoSign;
            }
            s if s == self.left => self.a = m,
            _ => self.b = m,
        }
    }

    /// True when this interval lies strictly left of `other`.
    fn left_of(&self, other: &Dyadic) -> bool {
        let e = self.e.max(other.e);
        (&self.b << (e - self.e) as usize) < (&other.a << (e - other.e) as usize)
    }
}

/// Every distinct real root of a polynomial, isolated and refinable.
#[derive(Clone, Debug)]
pub struct Spectrum {
    factors: Vec<(IntPolynomial, usize)>,
    roots: Vec<Dyadic>,
    degree: usize,
}

/// Cap on refinement depth; 2^-400 is far below anything a caller can ask for
/// in double precision.
const MAX_EXPONENT: u32 = 400;

impl Spectrum {
    pub fn new(p: &IntPolynomial) -> Result<Self> {
        let Some(degree) = p.degree() else {
            return Err(Error::Domain("roots of the zero polynomial".into()));
        };
        let factors = squarefree_decomposition(p);
        let mut roots = Vec::new();
        for (i, (f, _)) in factors.iter().enumerate() {
            isolate_squarefree(f, i, &mut roots);
        }
        let mut s = Spectrum {
            factors,
            roots,
            degree,
        };
        s.separate();
        Ok(s)
    }

    /// Sum of multiplicities of the real roots.
    pub fn real_root_count(&self) -> usize {
        self.roots.iter().map(|r| self.factors[r.factor].1).sum()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn enclosures(&self) -> Vec<RootEnclosure> {
        self.roots
            .iter()
            .map(|r| RootEnclosure {
                lo: r.lo(),
                hi: r.hi(),
                multiplicity: self.factors[r.factor].1,
            })
            .collect()
    }

    /// Refines until every enclosure has width at most `2^-bits`.
    pub fn refine_bits(&mut self, bits: u32) {
        for r in &mut self.roots {
            let f = &self.factors[r.factor].0;
            while !r.exact() && !width_at_most(r, bits) {
                r.bisect(f);
            }
        }
    }

    /// Sum of multiplicity-weighted absolute values, with every root
    /// refined so that the total radius is at most `tol`.
    pub fn energy(&mut self, tol: f64) -> Result<EnergyValue> {
        if !(tol > 0.0) {
            return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
        }
        if self.real_root_count() != self.degree {
            return Err(Error::Domain(
                "polynomial has non-real roots; energy needs a real spectrum".into(),
            ));
        }
        // Each root gets tol/(deg+1) of half-width; the last share covers
        // float rounding of the midpoints and the sum.
        let budget = tol / (self.degree + 1) as f64;
        let bits = (-(2.0 * budget).log2()).ceil().max(0.0) as u32;
        if bits > MAX_EXPONENT {
            return Err(Error::Convergence {
                what: "root refinement",
                estimate: f64::NAN,
                error: tol,
            });
        }
        self.refine_bits(bits);
        let mut value = 0.0;
        let mut radius = 0.0;
        let mut magnitude = 0.0;
        for r in &self.roots {
            let m = self.factors[r.factor].1 as f64;
            let (lo, hi) = (dyadic_f64(&r.a, r.e), dyadic_f64(&r.b, r.e));
            let mid = 0.5 * (lo + hi);
            value += m * mid.abs();
            radius += m * 0.5 * (hi - lo);
            magnitude += m * (lo.abs() + hi.abs());
        }
        radius += 4.0 * (self.degree + 2) as f64 * f64::EPSILON * magnitude;
        if radius > tol {
            return Err(Error::Convergence {
                what: "root refinement",
                estimate: value,
                error: radius,
            });
        }
        Ok(EnergyValue { value, radius })
    }

    /// Enclosures must be pairwise disjoint; roots of different square-free
    /// factors may start out overlapping.
    fn separate(&mut self) {
        loop {
            self.roots.sort_by(|x, y| {
                let l = BigRational::new(x.a.clone(), BigInt::from(1) << x.e as usize);
                let r = BigRational::new(y.a.clone(), BigInt::from(1) << y.e as usize);
                l.cmp(&r)
            });
            let mut clean = true;
            for i in 1..self.roots.len() {
                if !self.roots[i - 1].left_of(&self.roots[i]) {
                    clean = false;
                    for j in [i - 1, i] {
                        let f = &self.factors[self.roots[j].factor].0;
                        self.roots[j].bisect(f);
                    }
                }
            }
            if clean {
                return;
            }
        }
    }
}

fn width_at_most(r: &Dyadic, bits: u32) -> bool {
    // (b - a) / 2^e <= 2^-bits  <=>  (b - a) * 2^bits <= 2^e
    let w = &r.b - &r.a;
    (w << bits as usize) <= (BigInt::from(1) << r.e as usize)
}

fn dyadic_f64(m: &BigInt, e: u32) -> f64 {
    // Scale in two steps so that large exponents do not underflow early.
    let bits = m.bits();
    if bits > 900 {
        let s = (bits - 900) as u32;
        return dyadic_f64(&(m >> s as usize), e.saturating_sub(s));
    }
    m.to_f64().unwrap_or(f64::NAN) * 2f64.powi(-(e as i32))
}

/// Isolates the roots of a square-free polynomial into `out`.
fn isolate_squarefree(f: &IntPolynomial, factor: usize, out: &mut Vec<Dyadic>) {
    let chain = SturmChain::new(f);
    let k = root_bound_log2(f);
    let bound = BigInt::from(1) << k as usize;
    // (a, b] at exponent e, with count of roots inside
    let mut stack = vec![(-bound.clone(), bound, 0u32)];
    while let Some((a, b, e)) = stack.pop() {
        let pa = Point::Dyadic(a.clone(), e);
        let pb = Point::Dyadic(b.clone(), e);
        let count = chain.count_between(&pa, &pb);
        if count == 0 {
            continue;
        }
        let sb = f.sign_at_dyadic(&b, e);
        if count == 1 {
            if sb == Sign::NoSign {
                out.push(Dyadic {
                    factor,
                    a: b.clone(),
                    b,
                    e,
                    left: Sign::NoSign,
                });
            } else {
                // The root lies in (a, b). If a is itself a root of f (one
                // counted elsewhere), the sign just right of it is that of f'.
                let left = match f.sign_at_dyadic(&a, e) {
                    Sign::NoSign => f.derivative().sign_at_dyadic(&a, e),
                    s => s,
                };
                out.push(Dyadic { factor, a, b, e, left });
            }
            continue;
        }
        let m = &a + &b;
        let (a2, b2) = (a << 1, b << 1);
        stack.push((m.clone(), b2, e + 1));
        stack.push((a2, m, e + 1));
    }
}

/// Isolating enclosures for every distinct real root, in increasing order.
pub fn isolate_real_roots(p: &IntPolynomial) -> Result<Vec<RootEnclosure>> {
    Ok(Spectrum::new(p)?.enclosures())
}

/// Sum of `|lambda|` over the roots of `p`, counted with multiplicity.
pub fn energy_of_poly(p: &IntPolynomial, tol: f64) -> Result<EnergyValue> {
    Spectrum::new(p)?.energy(tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Signed, Zero};

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_descending(c)
    }

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn two_simple_roots() {
        let r = isolate_real_roots(&p(&[1, 0, -1])).unwrap();
        assert_eq!(r.len(), 2);
        assert!(r.iter().all(|e| e.multiplicity == 1));
        assert!(r[0].lo <= rat(-1) && rat(-1) <= r[0].hi);
        assert!(r[1].lo <= rat(1) && rat(1) <= r[1].hi);
    }

    #[test]
    fn cycle_four_roots() {
        let r = isolate_real_roots(&p(&[1, 0, -4, 0, 0])).unwrap();
        let mult: Vec<usize> = r.iter().map(|e| e.multiplicity).collect();
        assert_eq!(mult, vec![1, 2, 1]);
        assert!(r[1].lo <= BigRational::zero() && BigRational::zero() <= r[1].hi);
        let e = energy_of_poly(&p(&[1, 0, -4, 0, 0]), 1e-9).unwrap();
        assert!((e.value - 4.0).abs() <= 1e-9);
        assert!(e.radius <= 1e-9);
    }

    #[test]
    fn enclosures_are_disjoint_across_factors() {
        // (x^2 - 2)^2 (x^2 - 3) (x - 1): close roots from different factors
        let q = p(&[1, 0, -2]).pow(2) * p(&[1, 0, -3]) * p(&[1, -1]);
        let r = isolate_real_roots(&q).unwrap();
        assert_eq!(r.len(), 5);
        for w in r.windows(2) {
            assert!(w[0].hi < w[1].lo);
        }
        assert_eq!(r.iter().map(|e| e.multiplicity).sum::<usize>(), 7);
    }

    #[test]
    fn complex_roots_rejected_for_energy() {
        assert!(matches!(energy_of_poly(&p(&[1, 0, 1]), 1e-6), Err(Error::Domain(_))));
        assert!(matches!(isolate_real_roots(&IntPolynomial::zero()), Err(Error::Domain(_))));
        assert!(isolate_real_roots(&p(&[1, 0, 1])).unwrap().is_empty());
    }

    #[test]
    fn refinement_narrows() {
        let mut s = Spectrum::new(&p(&[1, 0, -2])).unwrap();
        s.refine_bits(60);
        let enc = s.enclosures();
        let two = rat(2);
        for e in &enc {
            assert!(e.width() <= BigRational::new(BigInt::one(), BigInt::one() << 60));
            // lo^2 <= 2 <= hi^2 on the positive root
            if e.lo.is_positive() {
                assert!(&e.lo * &e.lo <= two && two <= &e.hi * &e.hi);
            }
        }
        assert!((enc[1].midpoint_f64() - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn exact_dyadic_roots() {
        // roots 1/2, 3, -5/4
        let q = p(&[2, -1]) * p(&[1, -3]) * p(&[4, 5]);
        let r = isolate_real_roots(&q).unwrap();
        assert_eq!(r.len(), 3);
        let e = energy_of_poly(&q, 1e-12).unwrap();
        assert!((e.value - 4.75).abs() <= 1e-12);
    }
}
