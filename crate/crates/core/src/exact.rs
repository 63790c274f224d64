//! Exact rational and quadratic-surd arithmetic.
//!
//! Every eigenvalue and spectral bound handled by this crate lives in a real
//! quadratic field Q(√D). Values are stored as `(a + b√D)/c` over
//! arbitrary-precision integers, and floor, fractional part, comparison and
//! sign are all decided with integer arithmetic. Expressions that mix
//! different radicands go through [`SurdSum`], whose sign decision is either
//! certified or reported as undecidable.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational number in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Number of decimal refinement rounds attempted by [`SurdSum::decide_sign`].
pub const REFINEMENT_ROUNDS: u32 = 64;

/// Radicands above this size are not split into square and square-free parts.
const SQUARE_FREE_SPLIT_LIMIT: u64 = 1 << 40;

/// Floor of the square root of a non-negative integer.
///
/// Panics on negative input.
pub fn isqrt(n: &BigInt) -> BigInt {
    assert!(!n.is_negative(), "isqrt of negative integer {n}");
    n.sqrt()
}

/// Returns `Some(r)` when `n = r²` for a non-negative integer `r`.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn floor_rational(r: &Rational) -> BigInt {
    r.numer().div_floor(r.denom())
}

pub fn ceil_rational(r: &Rational) -> BigInt {
    -(-r.numer()).div_floor(r.denom())
}

fn sign(n: &BigInt) -> Ordering {
    n.cmp(&BigInt::zero())
}

/// Sign of `a + b√d` for `d ≥ 0`.
fn linear_sign(a: &BigInt, b: &BigInt, d: &BigInt) -> Ordering {
    if b.is_zero() || d.is_zero() {
        return sign(a);
    }
    if a.is_zero() {
        return sign(b);
    }
    let (sa, sb) = (sign(a), sign(b));
    if sa == sb {
        return sa;
    }
    match (a * a).cmp(&(b * b * d)) {
        Ordering::Greater => sa,
        Ordering::Less => sb,
        Ordering::Equal => Ordering::Equal,
    }
}

/// Arithmetic shared by [`Rational`] and [`QuadraticSurd`], so that polynomial
/// evaluators can be written once.
pub trait ExactField:
    Clone
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + From<BigInt>
{
    fn from_i64(n: i64) -> Self {
        Self::from(BigInt::from(n))
    }
}

impl ExactField for Rational {}
impl ExactField for QuadraticSurd {}

/// The real number `(a + b√D)/c`.
///
/// Normal form: `c > 0`, `gcd(a, b, c) = 1`, and a perfect-square `D` is
/// folded into `a`. Rational values carry `b = 0` and `D = 0`. The radicand
/// is otherwise kept as given, not reduced to its square-free part.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticSurd {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    radicand: BigInt,
}

impl QuadraticSurd {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        radicand: impl Into<BigInt>,
    ) -> Self {
        Self::normalized(a.into(), b.into(), c.into(), radicand.into())
    }

    /// `√n`
    pub fn sqrt(n: impl Into<BigInt>) -> Self {
        Self::new(0, 1, 1, n)
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Self::new(n, 0, 1, 0)
    }

    pub fn from_rational(r: &Rational) -> Self {
        Self::new(r.numer().clone(), 0, r.denom().clone(), 0)
    }

    fn normalized(mut a: BigInt, mut b: BigInt, mut c: BigInt, mut d: BigInt) -> Self {
        assert!(!c.is_zero(), "quadratic surd with zero denominator");
        assert!(!d.is_negative(), "quadratic surd with negative radicand {d}");
        if let Some(r) = exact_sqrt(&d) {
            a += &b * r;
            b = BigInt::zero();
        }
        if b.is_zero() {
            d = BigInt::zero();
        }
        if c.is_negative() {
            a = -a;
            b = -b;
            c = -c;
        }
        let g = a.gcd(&b).gcd(&c);
        if !g.is_one() {
            a /= &g;
            b /= &g;
            c /= &g;
        }
        Self {
            a,
            b,
            c,
            radicand: d,
        }
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    pub fn radicand(&self) -> &BigInt {
        &self.radicand
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.b.is_zero() && self.c.is_one()
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational()
            .then(|| Rational::new(self.a.clone(), self.c.clone()))
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.a.clone())
    }

    /// `a/c`
    pub fn rational_part(&self) -> Rational {
        Rational::new(self.a.clone(), self.c.clone())
    }

    /// `b/c`, the coefficient of `√D`.
    pub fn surd_coefficient(&self) -> Rational {
        Rational::new(self.b.clone(), self.c.clone())
    }

    pub fn conjugate(&self) -> Self {
        Self::normalized(
            self.a.clone(),
            -self.b.clone(),
            self.c.clone(),
            self.radicand.clone(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Sign of the value, as its ordering against zero.
    pub fn signum(&self) -> Ordering {
        linear_sign(&self.a, &self.b, &self.radicand)
    }

    /// The unique integer `f` with `f ≤ self < f + 1`.
    pub fn floor(&self) -> BigInt {
        if self.b.is_zero() {
            return self.a.div_floor(&self.c);
        }
        // b√D lies strictly between two consecutive integers because D is
        // not a perfect square, so (a + b√D) sits in an open unit interval
        // (m, m + 1) that contains no multiple of c.
        let s = isqrt(&(&self.b * &self.b * &self.radicand));
        let m = if self.b.is_positive() {
            &self.a + s
        } else {
            &self.a - s - 1
        };
        m.div_floor(&self.c)
    }

    pub fn ceil(&self) -> BigInt {
        -(-self).floor()
    }

    /// `self - floor(self)`, always in `[0, 1)`.
    pub fn frac(&self) -> Self {
        self - &Self::integer(self.floor())
    }

    /// Exact ordering of `self` against a rational.
    pub fn compare_rational(&self, r: &Rational) -> Ordering {
        // (a + b√D)/c - p/q has the sign of (aq - pc) + bq√D.
        let (p, q) = (r.numer(), r.denom());
        linear_sign(
            &(&self.a * q - p * &self.c),
            &(&self.b * q),
            &self.radicand,
        )
    }

    pub fn compare_integer(&self, n: i64) -> Ordering {
        self.compare_rational(&Rational::from_integer(BigInt::from(n)))
    }

    /// Exact ordering of two surds, possibly with different radicands.
    /// `None` only when the sign decision is undecidable.
    pub fn compare(&self, other: &Self) -> Option<Ordering> {
        if self.is_rational() || other.is_rational() || self.radicand == other.radicand {
            return Some((self - other).signum());
        }
        SurdSum::from(self.clone())
            .minus(other.clone())
            .decide_sign()
            .ordering()
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        // c / (a + b√D) = c (a - b√D) / (a² - b²D)
        let norm = &self.a * &self.a - &self.b * &self.b * &self.radicand;
        Self::normalized(
            &self.c * &self.a,
            -(&self.c * &self.b),
            norm,
            self.radicand.clone(),
        )
    }

    /// Decimal rendering rounded half-up to `places` digits.
    pub fn to_decimal(&self, places: u32) -> String {
        let scale = BigInt::from(10).pow(places);
        // floor(s * 10^p + 1/2)
        let shifted = Self::normalized(
            &self.a * &scale * 2 + &self.c,
            &self.b * &scale * 2,
            &self.c * 2,
            self.radicand.clone(),
        );
        format_scaled(&shifted.floor(), places)
    }

    fn field_radicand(&self, other: &Self) -> BigInt {
        if other.b.is_zero() || self.radicand == other.radicand {
            self.radicand.clone()
        } else if self.b.is_zero() {
            other.radicand.clone()
        } else {
            panic!(
                "arithmetic across different radicands ({} and {}); use SurdSum",
                self.radicand, other.radicand
            )
        }
    }
}

/// Renders `n / 10^places` in fixed-point notation.
pub(crate) fn format_scaled(n: &BigInt, places: u32) -> String {
    let digits = n.abs().to_string();
    let places = places as usize;
    let padded = if digits.len() <= places {
        format!("{}{}", "0".repeat(places + 1 - digits.len()), digits)
    } else {
        digits
    };
    let (int, frac) = padded.split_at(padded.len() - places);
    let sign = if n.is_negative() { "-" } else { "" };
    if places == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}

impl fmt::Display for QuadraticSurd {
    /// Exact form `(a+b*sqrt(D))/c`, with the sign of `b` folded into the
    /// operator.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = if self.b.is_negative() { '-' } else { '+' };
        write!(
            f,
            "({}{}{}*sqrt({}))/{}",
            self.a,
            op,
            self.b.abs(),
            self.radicand,
            self.c
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseSurdError(String);

impl fmt::Display for ParseSurdError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cannot parse quadratic surd {:?}", self.0)
    }
}

impl std::error::Error for ParseSurdError {}

impl FromStr for QuadraticSurd {
    type Err = ParseSurdError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseSurdError(s.to_string());
        let t = s.trim();
        let (body, c) = t.rsplit_once(")/").ok_or_else(err)?;
        let body = body.strip_prefix('(').ok_or_else(err)?;
        let c: BigInt = c.parse().map_err(|_| err())?;
        let (head, radicand) = body.rsplit_once("*sqrt(").ok_or_else(err)?;
        let radicand = radicand.strip_suffix(')').ok_or_else(err)?;
        let radicand: BigInt = radicand.parse().map_err(|_| err())?;
        // the operator is the last '+' or '-' that is not a leading sign
        let split = head
            .char_indices()
            .skip(1)
            .filter(|&(_, ch)| ch == '+' || ch == '-')
            .last()
            .map(|(i, _)| i)
            .ok_or_else(err)?;
        let a: BigInt = head[..split].parse().map_err(|_| err())?;
        let b: BigInt = head[split..].trim_start_matches('+').parse().map_err(|_| err())?;
        if c.is_zero() || radicand.is_negative() {
            return Err(err());
        }
        Ok(Self::new(a, b, c, radicand))
    }
}

impl From<BigInt> for QuadraticSurd {
    fn from(n: BigInt) -> Self {
        Self::integer(n)
    }
}

impl From<i64> for QuadraticSurd {
    fn from(n: i64) -> Self {
        Self::integer(n)
    }
}

impl From<Rational> for QuadraticSurd {
    fn from(r: Rational) -> Self {
        Self::from_rational(&r)
    }
}

impl Neg for &QuadraticSurd {
    type Output = QuadraticSurd;
    fn neg(self) -> QuadraticSurd {
        QuadraticSurd {
            a: -self.a.clone(),
            b: -self.b.clone(),
            c: self.c.clone(),
            radicand: self.radicand.clone(),
        }
    }
}

impl Neg for QuadraticSurd {
    type Output = QuadraticSurd;
    fn neg(self) -> QuadraticSurd {
        -&self
    }
}

impl Add for &QuadraticSurd {
    type Output = QuadraticSurd;
    fn add(self, rhs: &QuadraticSurd) -> QuadraticSurd {
        let d = self.field_radicand(rhs);
        QuadraticSurd::normalized(
            &self.a * &rhs.c + &rhs.a * &self.c,
            &self.b * &rhs.c + &rhs.b * &self.c,
            &self.c * &rhs.c,
            d,
        )
    }
}

impl Sub for &QuadraticSurd {
    type Output = QuadraticSurd;
    fn sub(self, rhs: &QuadraticSurd) -> QuadraticSurd {
        self + &(-rhs)
    }
}

impl Mul for &QuadraticSurd {
    type Output = QuadraticSurd;
    fn mul(self, rhs: &QuadraticSurd) -> QuadraticSurd {
        let d = self.field_radicand(rhs);
        QuadraticSurd::normalized(
            &self.a * &rhs.a + &self.b * &rhs.b * &d,
            &self.a * &rhs.b + &self.b * &rhs.a,
            &self.c * &rhs.c,
            d,
        )
    }
}

impl Div for &QuadraticSurd {
    type Output = QuadraticSurd;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &QuadraticSurd) -> QuadraticSurd {
        self.field_radicand(rhs);
        self * &rhs.recip()
    }
}

macro_rules! forward_owned_binop {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for QuadraticSurd {
            type Output = QuadraticSurd;
            fn $method(self, rhs: QuadraticSurd) -> QuadraticSurd {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&QuadraticSurd> for QuadraticSurd {
            type Output = QuadraticSurd;
            fn $method(self, rhs: &QuadraticSurd) -> QuadraticSurd {
                (&self).$method(rhs)
            }
        }
        impl $tr<QuadraticSurd> for &QuadraticSurd {
            type Output = QuadraticSurd;
            fn $method(self, rhs: QuadraticSurd) -> QuadraticSurd {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_owned_binop!(Add add, Sub sub, Mul mul, Div div);

/// Outcome of a sign decision on a [`SurdSum`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignDecision {
    Negative,
    Zero,
    Positive,
    Undecidable,
}

impl SignDecision {
    pub fn ordering(self) -> Option<Ordering> {
        match self {
            SignDecision::Negative => Some(Ordering::Less),
            SignDecision::Zero => Some(Ordering::Equal),
            SignDecision::Positive => Some(Ordering::Greater),
            SignDecision::Undecidable => None,
        }
    }

    fn from_ordering(o: Ordering) -> Self {
        match o {
            Ordering::Less => SignDecision::Negative,
            Ordering::Equal => SignDecision::Zero,
            Ordering::Greater => SignDecision::Positive,
        }
    }
}

/// A finite sum of quadratic surds whose radicands may differ.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SurdSum {
    terms: Vec<QuadraticSurd>,
}

/// Splits `n = m² · s` with `s` square-free, when `n` is small enough to
/// factor by trial division.
fn split_square(n: &BigInt) -> (BigInt, BigInt) {
    let Some(mut rest) = n.to_u64().filter(|&n| n <= SQUARE_FREE_SPLIT_LIMIT) else {
        return (BigInt::one(), n.clone());
    };
    let mut square_root: u64 = 1;
    let mut kernel: u64 = 1;
    let mut p: u64 = 2;
    while p * p <= rest {
        let mut e = 0;
        while rest % p == 0 {
            rest /= p;
            e += 1;
        }
        square_root *= p.pow(e / 2);
        if e % 2 == 1 {
            kernel *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    kernel *= rest;
    (BigInt::from(square_root), BigInt::from(kernel))
}

impl SurdSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn terms(&self) -> &[QuadraticSurd] {
        &self.terms
    }

    pub fn plus(mut self, term: QuadraticSurd) -> Self {
        self.terms.push(term);
        self
    }

    pub fn minus(mut self, term: QuadraticSurd) -> Self {
        self.terms.push(-term);
        self
    }

    /// Rational part plus one coefficient per square-free kernel; zero
    /// coefficients are dropped. Square roots of distinct square-free
    /// integers are linearly independent over Q, so the sum is zero exactly
    /// when the map is empty and the rational part vanishes.
    fn reduce(&self) -> (Rational, BTreeMap<BigInt, Rational>) {
        let mut rational = Rational::zero();
        let mut by_kernel: BTreeMap<BigInt, Rational> = BTreeMap::new();
        for t in &self.terms {
            rational += t.rational_part();
            if !t.is_rational() {
                let (m, kernel) = split_square(t.radicand());
                let coeff = t.surd_coefficient() * Rational::from_integer(m);
                *by_kernel.entry(kernel).or_insert_with(Rational::zero) += coeff;
            }
        }
        by_kernel.retain(|_, q| !q.is_zero());
        (rational, by_kernel)
    }

    /// Integer bracket `[lo, hi]` of `self * 10^places`.
    fn bracket(rational: &Rational, kernels: &BTreeMap<BigInt, Rational>, places: u32) -> (BigInt, BigInt) {
        let scale = BigInt::from(10).pow(places);
        let scaled = rational * Rational::from_integer(scale.clone());
        let mut lo = floor_rational(&scaled);
        let mut hi = ceil_rational(&scaled);
        for (kernel, q) in kernels {
            let (p, r) = (q.numer(), q.denom());
            let m: BigInt = isqrt(&(p * p * kernel * &scale * &scale));
            if p.is_positive() {
                let above: BigInt = -(&m + 1u32);
                lo += Integer::div_floor(&m, r);
                hi -= Integer::div_floor(&above, r);
            } else {
                let below: BigInt = -(&m + 1u32);
                lo += Integer::div_floor(&below, r);
                hi -= Integer::div_floor(&m, r);
            }
        }
        (lo, hi)
    }

    /// Certified sign of the sum.
    ///
    /// Exact cancellation is detected algebraically; otherwise every term is
    /// bracketed at scales 10^1, 10^2, ... until the bracket excludes zero,
    /// giving up after [`REFINEMENT_ROUNDS`] rounds.
    pub fn decide_sign(&self) -> SignDecision {
        let (rational, kernels) = self.reduce();
        if kernels.is_empty() {
            return SignDecision::from_ordering(rational.cmp(&Rational::zero()));
        }
        if kernels.len() == 1 {
            let (kernel, q) = kernels.iter().next().unwrap();
            let s = QuadraticSurd::from_rational(&rational)
                + QuadraticSurd::from_rational(q) * QuadraticSurd::sqrt(kernel.clone());
            return SignDecision::from_ordering(s.signum());
        }
        for places in 1..=REFINEMENT_ROUNDS {
            let (lo, hi) = Self::bracket(&rational, &kernels, places);
            if lo.is_positive() {
                return SignDecision::Positive;
            }
            if hi.is_negative() {
                return SignDecision::Negative;
            }
        }
        SignDecision::Undecidable
    }

    /// Lower end of the decimal bracket at `places` digits, for display.
    pub fn approx_decimal(&self, places: u32) -> String {
        let (rational, kernels) = self.reduce();
        let (lo, _) = Self::bracket(&rational, &kernels, places);
        format_scaled(&lo, places)
    }
}

impl From<QuadraticSurd> for SurdSum {
    fn from(s: QuadraticSurd) -> Self {
        Self { terms: vec![s] }
    }
}

impl FromIterator<QuadraticSurd> for SurdSum {
    fn from_iter<I: IntoIterator<Item = QuadraticSurd>>(iter: I) -> Self {
        Self {
            terms: iter.into_iter().collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64, c: i64, d: i64) -> QuadraticSurd {
        QuadraticSurd::new(a, b, c, d)
    }

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn isqrt_values() {
        assert_eq!(isqrt(&big(0)), big(0));
        assert_eq!(isqrt(&big(16)), big(4));
        assert_eq!(isqrt(&big(17)), big(4));
    }

    #[test]
    #[should_panic]
    fn isqrt_negative_panics() {
        isqrt(&big(-1));
    }

    #[test]
    fn normalization() {
        assert_eq!(QuadraticSurd::sqrt(16), QuadraticSurd::integer(4));
        let s = q(2, 4, 6, 13);
        assert_eq!((s.a(), s.b(), s.c()), (&big(1), &big(2), &big(3)));
        let s = q(1, 1, -2, 5);
        assert_eq!((s.a(), s.b(), s.c()), (&big(-1), &big(-1), &big(2)));
        let r = q(3, 0, 6, 7);
        assert_eq!(r.radicand(), &big(0));
        assert_eq!(r.to_rational(), Some(rational(1, 2)));
    }

    #[test]
    fn floor_examples() {
        assert_eq!(q(1, 1, 2, 13).floor(), big(2));
        assert_eq!(QuadraticSurd::sqrt(16).floor(), big(4));
        assert_eq!(q(-1, -1, 2, 13).floor(), big(-3));
        assert_eq!(q(-7, 0, 2, 0).floor(), big(-4));
        assert_eq!(q(-1, -1, 2, 13).ceil(), big(-2));
    }

    #[test]
    fn frac_examples() {
        assert_eq!(q(1, 1, 2, 13).frac(), q(-3, 1, 2, 13));
        assert_eq!(q(13, 0, 5, 0).frac(), q(3, 0, 5, 0));
        assert!(QuadraticSurd::sqrt(16).frac().is_zero());
    }

    #[test]
    fn compare_examples() {
        assert_eq!(QuadraticSurd::sqrt(2).compare_rational(&rational(3, 2)), Ordering::Less);
        assert_eq!(QuadraticSurd::sqrt(4).compare_rational(&rational(2, 1)), Ordering::Equal);
        assert_eq!(q(1, 1, 2, 13).compare_rational(&rational(23, 10)), Ordering::Greater);
    }

    #[test]
    fn decide_sign_examples() {
        let s = SurdSum::new()
            .plus(QuadraticSurd::sqrt(13))
            .plus(QuadraticSurd::sqrt(5))
            .minus(QuadraticSurd::integer(6));
        assert_eq!(s.decide_sign(), SignDecision::Negative);
        let s = SurdSum::new()
            .plus(QuadraticSurd::sqrt(9))
            .minus(QuadraticSurd::integer(3));
        assert_eq!(s.decide_sign(), SignDecision::Zero);
        let s = SurdSum::new()
            .plus(QuadraticSurd::sqrt(5))
            .minus(QuadraticSurd::sqrt(3))
            .minus(QuadraticSurd::sqrt(2));
        assert_eq!(s.decide_sign(), SignDecision::Negative);
    }

    #[test]
    fn decide_sign_detects_cancellation_across_radicands() {
        // √8 - 2√2 = 0
        let s = SurdSum::new()
            .plus(QuadraticSurd::sqrt(8))
            .minus(q(0, 2, 1, 2));
        assert_eq!(s.decide_sign(), SignDecision::Zero);
        // √12 + √3 - √27 = 0
        let s = SurdSum::new()
            .plus(QuadraticSurd::sqrt(12))
            .plus(QuadraticSurd::sqrt(3))
            .minus(QuadraticSurd::sqrt(27));
        assert_eq!(s.decide_sign(), SignDecision::Zero);
    }

    #[test]
    fn field_arithmetic() {
        let rho = q(-1, 1, 2, 13);
        let sigma = q(-1, -1, 2, 13);
        assert_eq!(&rho + &sigma, QuadraticSurd::integer(-1));
        assert_eq!(&rho * &sigma, QuadraticSurd::integer(-3));
        let x = &rho / &sigma;
        assert_eq!(&x * &sigma, rho);
        assert_eq!(rho.recip() * &rho, QuadraticSurd::integer(1));
    }

    #[test]
    #[should_panic(expected = "different radicands")]
    fn mixed_radicands_panic() {
        let _ = QuadraticSurd::sqrt(2) + QuadraticSurd::sqrt(3);
    }

    #[test]
    fn display_and_parse() {
        let s = q(-1, -1, 2, 13);
        assert_eq!(s.to_string(), "(-1-1*sqrt(13))/2");
        assert_eq!(s.to_string().parse::<QuadraticSurd>().unwrap(), s);
        assert_eq!(QuadraticSurd::integer(12).to_string(), "(12+0*sqrt(0))/1");
        assert!("(1+2*sqrt(-3))/2".parse::<QuadraticSurd>().is_err());
        assert!("1+2".parse::<QuadraticSurd>().is_err());
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(QuadraticSurd::sqrt(2).to_decimal(6), "1.414214");
        assert_eq!(q(-1, -1, 2, 13).to_decimal(6), "-2.302776");
        assert_eq!(QuadraticSurd::integer(-5).to_decimal(6), "-5.000000");
        assert_eq!(q(1, 0, 2000, 0).to_decimal(6), "0.000500");
        assert_eq!(q(-1, 0, 2000, 0).to_decimal(6), "-0.000500");
    }

    #[test]
    fn split_square_kernels() {
        assert_eq!(split_square(&big(72)), (big(6), big(2)));
        assert_eq!(split_square(&big(13)), (big(1), big(13)));
        assert_eq!(split_square(&big(1)), (big(1), big(1)));
    }
}
