//! Exact global-sign certificates for univariate integer polynomials, and for
//! expressions `a(x) + b(x) sqrt(x^2 + 4)`.
//!
//! A polynomial certificate stores a Sturm chain, the number of real roots
//! it counts on each open component of the domain, and the exact sign of the
//! polynomial at one sample point per component. Zero roots plus the sample
//! sign decide a strict claim. Non-strict claims use the chain of the odd
//! part instead: `p` only changes sign at roots of odd multiplicity.
//!
//! The radical rules, with `N = a^2 - (x^2 + 4) b^2`:
//!
//! - `N < 0`: `|a| < |b| sqrt(x^2 + 4)`, so the sign is the sign of `b`;
//! - `N > 0`: the sign is the sign of `a`;
//! - `a` and `b` share a strict sign: the sum has it too.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::closed_forms::{f_assembled, f_factored_parts, f_factored_poly, f_factored_residual, pq_polynomials, x_of_z};
use crate::error::{Error, Result};
use crate::field::{QuadSurd, Scalar};
use crate::poly::{odd_part, squarefree_part, IntPolynomial};
use crate::sturm::{root_bound_log2, sign_at, Point, SturmChain};

/// Witness intervals are narrowed to this width.
const WITNESS_BITS: u32 = 10;

/// Grid size for the corroboration pass.
pub const GRID_POINTS: usize = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Domain {
    #[serde(rename = "R")]
    Real,
    #[serde(rename = "R\\{0}")]
    NonZero,
    #[serde(rename = "(0,inf)")]
    Positive,
    #[serde(rename = "(-inf,0)")]
    Negative,
}

impl Domain {
    pub fn label(self) -> &'static str {
        match self {
            Domain::Real => "R",
            Domain::NonZero => "R\\{0}",
            Domain::Positive => "(0,inf)",
            Domain::Negative => "(-inf,0)",
        }
    }

    pub fn contains(self, x: &BigRational) -> bool {
        match self {
            Domain::Real => true,
            Domain::NonZero => !x.is_zero(),
            Domain::Positive => x.is_positive(),
            Domain::Negative => x.is_negative(),
        }
    }

    /// Open intervals making up the domain.
    fn components(self) -> Vec<(Point, Point)> {
        let zero = || Point::integer(0);
        match self {
            Domain::Real => vec![(Point::NegInf, Point::PosInf)],
            Domain::NonZero => vec![(Point::NegInf, zero()), (zero(), Point::PosInf)],
            Domain::Positive => vec![(zero(), Point::PosInf)],
            Domain::Negative => vec![(Point::NegInf, zero())],
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Asserted {
    Positive,
    Negative,
    Nonnegative,
    Nonpositive,
}

impl Asserted {
    pub fn is_strict(self) -> bool {
        matches!(self, Asserted::Positive | Asserted::Negative)
    }

    /// The sign the polynomial has away from its zeros: 1 or -1.
    pub fn direction(self) -> i8 {
        match self {
            Asserted::Positive | Asserted::Nonnegative => 1,
            Asserted::Negative | Asserted::Nonpositive => -1,
        }
    }

    pub fn admits(self, sign: i8) -> bool {
        sign == self.direction() || (!self.is_strict() && sign == 0)
    }

    fn strict_of(sign: i8) -> Asserted {
        if sign > 0 {
            Asserted::Positive
        } else {
            Asserted::Negative
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ChainOf {
    SquarefreePart,
    OddPart,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReductionRule {
    NormNegative,
    NormPositive,
    SameSign,
}

/// Root count and sample sign on one open component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentEvidence {
    pub lo: String,
    pub hi: String,
    pub roots: usize,
    pub sample: String,
    pub sample_sign: i8,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Evidence {
    Sturm {
        chain_of: ChainOf,
        chain: SturmChain,
        components: Vec<ComponentEvidence>,
    },
    Radical {
        rule: Option<ReductionRule>,
        norm: IntPolynomial,
        subs: Vec<SignCertificate>,
    },
}

/// `[lo, hi]` containing a zero or sign change; `lo == hi` for an exact
/// point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub lo: String,
    pub hi: String,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Verdict {
    Certified,
    Refuted { witness: Witness },
    Inconclusive { reason: String },
}

impl Verdict {
    pub fn is_certified(&self) -> bool {
        matches!(self, Verdict::Certified)
    }

    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Certified => "certified",
            Verdict::Refuted { .. } => "refuted",
            Verdict::Inconclusive { .. } => "inconclusive",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SignCertificate {
    pub claim_id: String,
    /// `[p]`, or `[a, b]` for `a + b sqrt(x^2 + 4)`.
    pub polynomials: Vec<IntPolynomial>,
    pub domain: Domain,
    pub asserted: Asserted,
    pub evidence: Evidence,
    pub verdict: Verdict,
}

impl SignCertificate {
    pub fn with_id(mut self, id: impl Into<String>) -> Self {
        self.claim_id = id.into();
        self
    }

    /// Real roots counted on the domain (summed over components; for
    /// radical claims, over the sub-certificates).
    pub fn root_count(&self) -> usize {
        match &self.evidence {
            Evidence::Sturm { components, .. } => components.iter().map(|c| c.roots).sum(),
            Evidence::Radical { subs, .. } => subs.iter().map(SignCertificate::root_count).sum(),
        }
    }

    pub fn is_radical(&self) -> bool {
        matches!(self.evidence, Evidence::Radical { .. })
    }

    /// Exact sign of the certified expression at `x`.
    pub fn sign_at(&self, x: &BigRational) -> i8 {
        match self.polynomials.as_slice() {
            [p] => sign_i8(p.sign_at_rational(x)),
            [a, b] => radical_value(a, b, x).signum(),
            _ => 0,
        }
    }
}

fn sign_i8(s: Sign) -> i8 {
    match s {
        Sign::Plus => 1,
        Sign::Minus => -1,
        Sign::NoSign => 0,
    }
}

fn point_label(p: &Point) -> String {
    match p {
        Point::NegInf => "-inf".into(),
        Point::PosInf => "inf".into(),
        Point::Rational(q) => q.to_string(),
        Point::Dyadic(m, e) => BigRational::new(m.clone(), BigInt::one() << *e as usize).to_string(),
    }
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn radicand() -> IntPolynomial {
    IntPolynomial::from_descending(&[1, 0, 4])
}

/// `a^2 - (x^2 + 4) b^2`.
pub fn radical_norm(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    &(a * a) - &(&radicand() * &(b * b))
}

fn radical_value(a: &IntPolynomial, b: &IntPolynomial, x: &BigRational) -> QuadSurd {
    let (xs, r) = QuadSurd::with_radical(x);
    xs.rational(a.eval_rational(x)) + xs.rational(b.eval_rational(x)) * r
}

/// Distinct roots of the chain's first member in the open interval `(lo, hi)`.
fn count_open(chain: &SturmChain, lo: &Point, hi: &Point) -> usize {
    let n = chain.count_between(lo, hi);
    let at_hi = matches!(hi, Point::Rational(_) | Point::Dyadic(..)) && sign_at(&chain.polys[0], hi) == Sign::NoSign;
    n - usize::from(at_hi)
}

/// Candidate sample points inside a component, at least `need` of them.
fn candidates(lo: &Point, hi: &Point, need: usize) -> Vec<BigRational> {
    match (lo, hi) {
        (Point::NegInf, Point::PosInf) => {
            let mut v = vec![rat(0)];
            for k in 1..=need as i64 {
                v.push(rat(k));
                v.push(rat(-k));
            }
            v
        }
        (_, Point::PosInf) => (1..=need as i64 + 1).map(rat).collect(),
        _ => (1..=need as i64 + 1).map(|k| rat(-k)).collect(),
    }
}

fn same_up_to_scalar(a: &IntPolynomial, b: &IntPolynomial) -> bool {
    if a.degree() != b.degree() || a.is_zero() {
        return false;
    }
    let (la, lb) = (a.leading().unwrap(), b.leading().unwrap());
    a.coeffs().iter().zip(b.coeffs()).all(|(x, y)| x * lb == y * la)
}

/// Narrows an open interval known to contain a root of the chain's first
/// member.
fn locate_root(chain: &SturmChain, lo: &Point, hi: &Point) -> (BigRational, BigRational) {
    let f = &chain.polys[0];
    let bound = rat(1 << root_bound_log2(f).min(60));
    let finite = |p: &Point, fallback: BigRational| match p {
        Point::Rational(q) => q.clone(),
        Point::Dyadic(m, e) => BigRational::new(m.clone(), BigInt::one() << *e as usize),
        _ => fallback,
    };
    let mut a = finite(lo, -bound.clone());
    let mut b = finite(hi, bound);
    let width = BigRational::new(BigInt::one(), BigInt::one() << WITNESS_BITS as usize);
    while &b - &a > width {
        let m = (&a + &b) / rat(2);
        if f.sign_at_rational(&m) == Sign::NoSign {
            return (m.clone(), m);
        }
        let (pa, pm) = (Point::Rational(a.clone()), Point::Rational(m.clone()));
        if count_open(chain, &pa, &pm) > 0 {
            b = m;
        } else {
            a = m;
        }
    }
    (a, b)
}

fn verdict_from_components(
    chain: &SturmChain,
    domain: Domain,
    asserted: Asserted,
    components: &[ComponentEvidence],
) -> Verdict {
    for (c, (lo, hi)) in components.iter().zip(domain.components()) {
        if c.roots > 0 {
            let (a, b) = locate_root(chain, &lo, &hi);
            let note = if asserted.is_strict() {
                "contains a real zero".to_string()
            } else {
                "contains a sign change".to_string()
            };
            return Verdict::Refuted {
                witness: Witness {
                    lo: a.to_string(),
                    hi: b.to_string(),
                    note,
                },
            };
        }
        if !asserted.admits(c.sample_sign) {
            return Verdict::Refuted {
                witness: Witness {
                    lo: c.sample.clone(),
                    hi: c.sample.clone(),
                    note: format!("sign {} at the sample point", c.sample_sign),
                },
            };
        }
    }
    Verdict::Certified
}

/// Certifies or refutes `sign(p) = asserted` on `domain`.
pub fn certify_poly_sign(p: &IntPolynomial, domain: Domain, asserted: Asserted) -> Result<SignCertificate> {
    if p.is_zero() {
        return Err(Error::Domain("sign certificate of the zero polynomial".into()));
    }
    let (chain_of, chain_poly) = if asserted.is_strict() {
        (ChainOf::SquarefreePart, squarefree_part(p))
    } else {
        (ChainOf::OddPart, odd_part(p))
    };
    let chain = SturmChain::new(&chain_poly);
    let need = p.degree().unwrap_or(0) + 1;
    let components: Vec<ComponentEvidence> = domain
        .components()
        .iter()
        .map(|(lo, hi)| {
            let roots = count_open(&chain, lo, hi);
            let sample = candidates(lo, hi, need)
                .into_iter()
                .find(|x| p.sign_at_rational(x) != Sign::NoSign)
                .expect("more candidates than roots");
            let sample_sign = sign_i8(p.sign_at_rational(&sample));
            ComponentEvidence {
                lo: point_label(lo),
                hi: point_label(hi),
                roots,
                sample: sample.to_string(),
                sample_sign,
            }
        })
        .collect();
    let verdict = verdict_from_components(&chain, domain, asserted, &components);
    Ok(SignCertificate {
        claim_id: String::new(),
        polynomials: vec![p.clone()],
        domain,
        asserted,
        evidence: Evidence::Sturm {
            chain_of,
            chain,
            components,
        },
        verdict,
    })
}

/// Certified strict sign of `p` on `domain`, trying both signs.
fn strict_sign(p: &IntPolynomial, domain: Domain) -> Result<Option<(i8, SignCertificate)>> {
    if p.is_zero() {
        return Ok(None);
    }
    for s in [1, -1] {
        let c = certify_poly_sign(p, domain, Asserted::strict_of(s))?;
        if c.verdict.is_certified() {
            return Ok(Some((s, c)));
        }
    }
    Ok(None)
}

/// Certifies or refutes `sign(a + b sqrt(x^2 + 4)) = asserted` on `domain`.
/// Only strict signs are supported.
pub fn certify_radical_sign(
    a: &IntPolynomial,
    b: &IntPolynomial,
    domain: Domain,
    asserted: Asserted,
) -> Result<SignCertificate> {
    if b.is_zero() {
        return Err(Error::Domain("radical part is identically zero".into()));
    }
    if !asserted.is_strict() {
        return Err(Error::Domain("radical claims must assert a strict sign".into()));
    }
    let norm = radical_norm(a, b);
    let mut attempted = Vec::new();
    let mut found: Option<(ReductionRule, i8, Vec<SignCertificate>)> = None;

    if !norm.is_zero() {
        let neg = certify_poly_sign(&norm, domain, Asserted::Negative)?;
        if neg.verdict.is_certified() {
            if let Some((s, cb)) = strict_sign(b, domain)? {
                found = Some((ReductionRule::NormNegative, s, vec![neg, cb]));
            }
        } else {
            attempted.push(neg);
        }
        if found.is_none() {
            let pos = certify_poly_sign(&norm, domain, Asserted::Positive)?;
            if pos.verdict.is_certified() {
                if let Some((s, ca)) = strict_sign(a, domain)? {
                    found = Some((ReductionRule::NormPositive, s, vec![pos, ca]));
                }
            } else {
                attempted.push(pos);
            }
        }
    }
    if found.is_none() {
        if let (Some((sa, ca)), Some((sb, cb))) = (strict_sign(a, domain)?, strict_sign(b, domain)?) {
            if sa == sb {
                found = Some((ReductionRule::SameSign, sa, vec![ca, cb]));
            }
        }
    }

    let (rule, subs, verdict) = match found {
        Some((rule, s, subs)) => {
            let verdict = if s == asserted.direction() {
                Verdict::Certified
            } else {
                let sample = sample_of(&subs[1]);
                Verdict::Refuted {
                    witness: Witness {
                        lo: sample.clone(),
                        hi: sample,
                        note: format!("the expression has sign {s} on the whole domain"),
                    },
                }
            };
            (Some(rule), subs, verdict)
        }
        None => (
            None,
            attempted,
            Verdict::Inconclusive {
                reason: "no reduction rule applies".into(),
            },
        ),
    };
    Ok(SignCertificate {
        claim_id: String::new(),
        polynomials: vec![a.clone(), b.clone()],
        domain,
        asserted,
        evidence: Evidence::Radical { rule, norm, subs },
        verdict,
    })
}

fn sample_of(c: &SignCertificate) -> String {
    match &c.evidence {
        Evidence::Sturm { components, .. } => components.first().map(|c| c.sample.clone()).unwrap_or_default(),
        Evidence::Radical { subs, .. } => subs.first().map(sample_of).unwrap_or_default(),
    }
}

/// Re-derives the verdict from the stored evidence. Sturm chains are only
/// checked for consistency (each member against the remainder of the two
/// before it) and evaluated, never rebuilt.
pub fn verify_certificate(c: &SignCertificate) -> bool {
    match &c.evidence {
        Evidence::Sturm {
            chain_of,
            chain,
            components,
        } => {
            let [p] = c.polynomials.as_slice() else {
                return false;
            };
            if p.is_zero() || !chain.verify() {
                return false;
            }
            let expected_first = match chain_of {
                ChainOf::SquarefreePart if c.asserted.is_strict() => squarefree_part(p),
                ChainOf::OddPart if !c.asserted.is_strict() => odd_part(p),
                _ => return false,
            };
            if !same_up_to_scalar(&chain.polys[0], &expected_first) {
                return false;
            }
            let comps = c.domain.components();
            if comps.len() != components.len() {
                return false;
            }
            for (e, (lo, hi)) in components.iter().zip(&comps) {
                if point_label(lo) != e.lo || point_label(hi) != e.hi || count_open(chain, lo, hi) != e.roots {
                    return false;
                }
                let Ok(x) = BigRational::from_str(&e.sample) else {
                    return false;
                };
                if !in_open(&x, lo, hi) || sign_i8(p.sign_at_rational(&x)) != e.sample_sign {
                    return false;
                }
            }
            let derived = verdict_from_components(chain, c.domain, c.asserted, components);
            derived.name() == c.verdict.name()
        }
        Evidence::Radical { rule, norm, subs } => {
            let [a, b] = c.polynomials.as_slice() else {
                return false;
            };
            if *norm != radical_norm(a, b) || !subs.iter().all(verify_certificate) {
                return false;
            }
            let Some(rule) = rule else {
                return matches!(c.verdict, Verdict::Inconclusive { .. });
            };
            let [s0, s1] = subs.as_slice() else {
                return false;
            };
            let ok_sub = |s: &SignCertificate, poly: &IntPolynomial| {
                s.verdict.is_certified() && s.domain == c.domain && s.asserted.is_strict() && s.polynomials == [poly.clone()]
            };
            let implied = match rule {
                ReductionRule::NormNegative => {
                    (ok_sub(s0, norm) && s0.asserted == Asserted::Negative && ok_sub(s1, b)).then(|| s1.asserted.direction())
                }
                ReductionRule::NormPositive => {
                    (ok_sub(s0, norm) && s0.asserted == Asserted::Positive && ok_sub(s1, a)).then(|| s1.asserted.direction())
                }
                ReductionRule::SameSign => (ok_sub(s0, a) && ok_sub(s1, b) && s0.asserted == s1.asserted)
                    .then(|| s0.asserted.direction()),
            };
            match implied {
                Some(s) if s == c.asserted.direction() => c.verdict.is_certified(),
                Some(_) => matches!(c.verdict, Verdict::Refuted { .. }),
                None => false,
            }
        }
    }
}

fn in_open(x: &BigRational, lo: &Point, hi: &Point) -> bool {
    let above = match lo {
        Point::Rational(q) => x > q,
        _ => true,
    };
    let below = match hi {
        Point::Rational(q) => x < q,
        _ => true,
    };
    above && below
}

/// `x_k = -10 + (2k + 1) / 100`, `k < 1000`: spans `(-10, 10)`, never 0.
pub fn corroboration_grid() -> Vec<BigRational> {
    (0..GRID_POINTS as i64)
        .map(|k| BigRational::new(BigInt::from(-1000 + 2 * k + 1), BigInt::from(100)))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GridCheck {
    pub points: usize,
    pub contradictions: usize,
}

/// Evaluates the certified expression exactly at every grid point in its
/// domain and counts sign contradictions.
pub fn corroborate(c: &SignCertificate, grid: &[BigRational]) -> GridCheck {
    let mut points = 0;
    let mut contradictions = 0;
    for x in grid.iter().filter(|x| c.domain.contains(x)) {
        points += 1;
        if !c.asserted.admits(c.sign_at(x)) {
            contradictions += 1;
        }
    }
    GridCheck { points, contradictions }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub name: String,
    pub holds: bool,
    /// Both sides at `x = 1`.
    pub lhs_at_1: String,
    pub rhs_at_1: String,
}

fn identity(name: &str, lhs: &IntPolynomial, rhs: &IntPolynomial) -> IdentityCheck {
    let one = BigInt::one();
    IdentityCheck {
        name: name.into(),
        holds: lhs == rhs,
        lhs_at_1: lhs.eval(&one).to_string(),
        rhs_at_1: rhs.eval(&one).to_string(),
    }
}

/// Closed-form-versus-factored comparison at rational grid points.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AssemblyCheck {
    pub name: String,
    pub points: usize,
    /// Evaluated exactly in `Q(sqrt(x^2 + 4))`.
    pub max_rel_dev: f64,
    /// The same assembly in double precision.
    pub max_rel_dev_float: f64,
    pub tolerance: f64,
    pub passed: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimStatus {
    Certified,
    Corroborated,
    Refuted,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub id: String,
    pub statement: String,
    pub status: ClaimStatus,
    pub evidence_level: String,
    pub certificates: Vec<SignCertificate>,
    pub identities: Vec<IdentityCheck>,
    pub assemblies: Vec<AssemblyCheck>,
    pub grid: GridCheck,
    /// Whether every certificate re-verified from its stored evidence.
    pub reverified: bool,
}

impl ClaimReport {
    pub fn root_counts(&self) -> Vec<(String, usize)> {
        self.certificates
            .iter()
            .map(|c| (c.claim_id.clone(), c.root_count()))
            .collect()
    }

    pub fn witness(&self) -> Option<(&str, &Witness)> {
        self.certificates.iter().find_map(|c| match &c.verdict {
            Verdict::Refuted { witness } => Some((c.claim_id.as_str(), witness)),
            _ => None,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub claims: Vec<ClaimReport>,
}

impl SuiteReport {
    /// True when nothing was refuted or left inconclusive.
    pub fn all_passed(&self) -> bool {
        self.claims
            .iter()
            .all(|c| matches!(c.status, ClaimStatus::Certified | ClaimStatus::Corroborated))
    }

    pub fn any_refuted(&self) -> bool {
        self.claims.iter().any(|c| c.status == ClaimStatus::Refuted)
    }
}

/// Every polynomial the suite uses; replace entries to test that tampering
/// is caught.
#[derive(Clone, Debug)]
pub struct ClaimInputs {
    /// `phi(P_8^6, ix)` and `i phi(P_7^6, ix)`.
    pub f8: IntPolynomial,
    pub f7: IntPolynomial,
    /// The degree-10 polynomial whose positivity gives `A1, A2 > 0`.
    pub c1: IntPolynomial,
    /// `(P, Q)` with `P^2 - (x^2 + 4) Q^2 < 0` claimed on R.
    pub c2: (IntPolynomial, IntPolynomial),
    /// `(p_i, Q_i)`, `q_i = Q_i sqrt(x^2 + 4)`, `i = 0..4`.
    pub pq: Vec<(IntPolynomial, IntPolynomial)>,
    /// `2x^10 + 24x^8 + 104x^6 + 225x^4 + 248x^2 + 121`.
    pub c4_factor: IntPolynomial,
}

impl ClaimInputs {
    pub fn standard() -> Self {
        let d = IntPolynomial::from_descending;
        ClaimInputs {
            f8: d(&[1, 0, 8, 0, 19, 0, 16, 0, 4]),
            f7: d(&[1, 0, 7, 0, 13, 0, 7, 0]),
            c1: d(&[1, 0, 10, 0, 36, 0, 62, 0, 51, 0, 16]),
            c2: (
                d(&[1, 0, 11, 0, 47, 0, 93, 0, 74, 0]),
                d(&[3, 0, 27, 0, 85, 0, 111, 0, 52]),
            ),
            pq: (0..5).map(|i| pq_polynomials(i).expect("index in range")).collect(),
            c4_factor: d(&[2, 0, 24, 0, 104, 0, 225, 0, 248, 0, 121]),
        }
    }
}

pub const CLAIM_IDS: [&str; 8] = ["C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8"];

fn cert(
    id: String,
    p: &IntPolynomial,
    domain: Domain,
    asserted: Asserted,
) -> Result<SignCertificate> {
    Ok(certify_poly_sign(p, domain, asserted)?.with_id(id))
}

fn rcert(
    id: String,
    a: &IntPolynomial,
    b: &IntPolynomial,
    domain: Domain,
    asserted: Asserted,
) -> Result<SignCertificate> {
    Ok(certify_radical_sign(a, b, domain, asserted)?.with_id(id))
}

fn statement(id: &str) -> &'static str {
    match id {
        "C1" => "x^10+10x^8+36x^6+62x^4+51x^2+16 > 0 on R, hence A1, A2 > 0",
        "C2" => "(x^9+11x^7+47x^5+93x^3+74x)^2 - (x^2+4)(3x^8+27x^6+85x^4+111x^2+52)^2 < 0 on R, hence beta2 < 0 and gamma1 > 0",
        "C3" => "p_i^2 - q_i^2 < 0 on R for i = 1, 2, 3, hence p_i + q_i > 0 and p_i - q_i < 0",
        "C4" => "p_4^2 - q_4^2 = 4(x^2+1)^2(2x^10+24x^8+104x^6+225x^4+248x^2+121) > 0, hence p_4 +- q_4 > 0 for x != 0",
        "C5" => "factors of f(5,x) positive on R\\{0}, hence f(5,x) < 0 for x != 0",
        "C6" => "factors of the t=3 bound positive on R\\{0}, hence the bound is < 0 for x != 0",
        "C7" => "p_0 + q_0 > 0 for x > 0 and p_0 - q_0 > 0 for x < 0",
        "C8" => "alpha/beta/gamma assembly of f(5,x) (and the t=3 bound) equals the factored polynomial",
        _ => "",
    }
}

/// Runs one claim of the suite.
pub fn run_claim(id: &str, inputs: &ClaimInputs) -> Result<ClaimReport> {
    use Asserted::{Negative as Neg, Positive as Pos};
    use Domain::{NonZero, Real};
    let mut certs = Vec::new();
    let mut identities = Vec::new();
    let mut assemblies = Vec::new();
    let four = IntPolynomial::constant(BigInt::from(4));
    let x = IntPolynomial::x();
    match id {
        "C1" => {
            certs.push(cert("C1/poly".into(), &inputs.c1, Real, Pos)?);
            // 2 (Z_j f8 + f7) = (x f8 + 2 f7) +- f8 sqrt(x^2 + 4)
            let two = IntPolynomial::constant(BigInt::from(2));
            let a = &(&x * &inputs.f8) + &(&two * &inputs.f7);
            identities.push(identity(
                "(x f8 + 2 f7)^2 - (x^2+4) f8^2 = -4 (x^10+...+16)",
                &radical_norm(&a, &inputs.f8),
                &-(&four * &inputs.c1),
            ));
            certs.push(rcert("C1/z1".into(), &a, &inputs.f8, Real, Pos)?);
            certs.push(rcert("C1/z2".into(), &a, &-&inputs.f8, Real, Neg)?);
        }
        "C2" => {
            let (p, q) = &inputs.c2;
            certs.push(cert("C2/poly".into(), &radical_norm(p, q), Real, Neg)?);
            certs.push(rcert("C2/plus".into(), p, q, Real, Pos)?);
            certs.push(rcert("C2/minus".into(), p, &-q, Real, Neg)?);
        }
        "C3" => {
            for i in 1..=3 {
                let (p, q) = &inputs.pq[i];
                certs.push(cert(format!("C3/i={i}"), &radical_norm(p, q), Real, Neg)?);
                certs.push(rcert(format!("C3/i={i}/plus"), p, q, Real, Pos)?);
                certs.push(rcert(format!("C3/i={i}/minus"), p, &-q, Real, Neg)?);
            }
        }
        "C4" => {
            let (p, q) = &inputs.pq[4];
            let xx1 = IntPolynomial::from_descending(&[1, 0, 1]);
            let rhs = &(&four * &(&xx1 * &xx1)) * &inputs.c4_factor;
            let norm = radical_norm(p, q);
            identities.push(identity("p_4^2 - q_4^2 = 4(x^2+1)^2(2x^10+...+121)", &norm, &rhs));
            certs.push(cert("C4/factor".into(), &inputs.c4_factor, Real, Pos)?);
            certs.push(cert("C4/norm".into(), &norm, NonZero, Pos)?);
            certs.push(rcert("C4/plus".into(), p, q, NonZero, Pos)?);
            certs.push(rcert("C4/minus".into(), p, &-q, NonZero, Pos)?);
        }
        "C5" | "C6" => {
            let t = if id == "C5" { 5 } else { 3 };
            for (k, (f, _)) in f_factored_parts(t)?.iter().enumerate().skip(1) {
                certs.push(cert(format!("{id}/factor{k}"), f, NonZero, Pos)?);
            }
            certs.push(cert(format!("{id}/product"), &f_factored_poly(t)?, NonZero, Neg)?);
        }
        "C7" => {
            let (p, q) = &inputs.pq[0];
            certs.push(cert("C7/p0".into(), p, Real, Pos)?);
            certs.push(rcert("C7/plus".into(), p, q, Domain::Positive, Pos)?);
            certs.push(rcert("C7/minus".into(), p, &-q, Domain::Negative, Pos)?);
        }
        "C8" => {
            for t in [5, 3] {
                let (ident, check) = assembly_check(t)?;
                identities.push(ident);
                assemblies.push(check);
            }
        }
        _ => return Err(Error::InvalidParameters(format!("unknown claim id {id:?}"))),
    }

    let grid = corroboration_grid();
    let mut gc = GridCheck {
        points: 0,
        contradictions: 0,
    };
    for c in certs.iter().filter(|c| c.verdict.is_certified()) {
        let g = corroborate(c, &grid);
        gc.points += g.points;
        gc.contradictions += g.contradictions;
    }
    if id == "C8" {
        gc.points = assemblies.iter().map(|a| a.points).sum();
    }
    let reverified = certs.iter().all(verify_certificate);

    let refuted = certs.iter().any(|c| matches!(c.verdict, Verdict::Refuted { .. }))
        || identities.iter().any(|i| !i.holds)
        || assemblies.iter().any(|a| !a.passed)
        || gc.contradictions > 0;
    let status = if refuted {
        ClaimStatus::Refuted
    } else if !reverified || certs.iter().any(|c| !c.verdict.is_certified()) {
        ClaimStatus::Inconclusive
    } else {
        ClaimStatus::Certified
    };
    let evidence_level = if id == "C8" {
        format!(
            "exact: rational-function identity in z with x = z - 1/z; corroborated by exact evaluation at {GRID_POINTS} rational points"
        )
    } else if identities.is_empty() {
        "exact: Sturm root counts and sample signs".to_string()
    } else {
        "exact: polynomial identity, Sturm root counts and sample signs".to_string()
    };
    Ok(ClaimReport {
        id: id.to_string(),
        statement: statement(id).to_string(),
        status,
        evidence_level,
        certificates: certs,
        identities,
        assemblies,
        grid: gc,
        reverified,
    })
}

/// `z_k = (k + 10) / 100`: `x = z - 1/z` runs from `-9.9` to about `10`.
pub fn z_grid() -> Vec<BigRational> {
    (0..GRID_POINTS as i64)
        .map(|k| BigRational::new(BigInt::from(k + 10), BigInt::from(100)))
        .collect()
}

fn assembly_check(t: u32) -> Result<(IdentityCheck, AssemblyCheck)> {
    let residual = f_factored_residual(t)?;
    let one = rat(1);
    let (xs, r) = QuadSurd::with_radical(&one);
    let at_one = f_assembled(xs, r, t)?;
    let name = if t == 5 { "f(5,x)" } else { "t=3 bound" };
    let ident = IdentityCheck {
        name: format!("{name}: alpha/beta/gamma assembly = factored form, as rational functions of z (x = z - 1/z)"),
        holds: residual.is_zero(),
        lhs_at_1: if at_one.b.is_zero() { at_one.a.to_string() } else { format!("{at_one:?}") },
        rhs_at_1: f_factored_poly(t)?.eval(&BigInt::one()).to_string(),
    };

    let poly = f_factored_poly(t)?;
    let zs = z_grid();
    let results: Vec<(f64, f64)> = zs
        .par_iter()
        .map(|z| -> Result<(f64, f64)> {
            let (x, r) = x_of_z(z);
            let got = f_assembled(x.clone(), r.clone(), t)?;
            let want = poly.eval_rational(&x);
            let wf = ToPrimitive::to_f64(&want).unwrap_or(f64::NAN);
            let scale = wf.abs().max(1.0);
            let exact = ToPrimitive::to_f64(&(got - want).abs()).unwrap_or(f64::NAN) / scale;
            let (xf, rf) = (
                ToPrimitive::to_f64(&x).unwrap_or(f64::NAN),
                ToPrimitive::to_f64(&r).unwrap_or(f64::NAN),
            );
            let ff = f_assembled(xf, rf, t)?;
            Ok((exact, (ff - wf).abs() / scale))
        })
        .collect::<Result<_>>()?;
    let max_exact = results.iter().map(|r| r.0).fold(0.0, f64::max);
    let max_float = results.iter().map(|r| r.1).fold(0.0, f64::max);
    let tolerance = 1e-9;
    let check = AssemblyCheck {
        name: name.into(),
        points: zs.len(),
        max_rel_dev: max_exact,
        max_rel_dev_float: max_float,
        tolerance,
        passed: max_exact <= tolerance,
    };
    Ok((ident, check))
}

pub fn run_claim_suite() -> Result<SuiteReport> {
    run_claim_suite_with(&ClaimInputs::standard())
}

/// Claims run concurrently; the report is in claim-id order.
pub fn run_claim_suite_with(inputs: &ClaimInputs) -> Result<SuiteReport> {
    let claims = CLAIM_IDS
        .par_iter()
        .map(|id| run_claim(id, inputs))
        .collect::<Result<Vec<_>>>()?;
    Ok(SuiteReport { claims })
}

/// The standard inputs with one coefficient of `Q_2` negated.
pub fn tampered_inputs() -> ClaimInputs {
    let mut inputs = ClaimInputs::standard();
    let q = &inputs.pq[2].1;
    let mut c = q.coeffs().to_vec();
    c[2] = -c[2].clone();
    inputs.pq[2].1 = IntPolynomial::new(c);
    inputs
}
