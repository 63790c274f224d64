//! Block intersection polynomials: the regular adjacency polynomial
//!
//! ```text
//! R(x,y,d) = x(x+1)(v-y) - 2xyk + (2x+λ-μ+1)yd + y(y-1)μ - yd²
//! ```
//!
//! and the clique adjacency polynomial
//!
//! ```text
//! C(x,y) = (v-y)x(x+1) - 2xy(k-y+1) + y(y-1)(λ-y+2)
//! ```
//!
//! Both are quadratic in `x` with leading coefficient `v - y`, so for
//! `y < v` the integer minimum sits at the nearest integer to the vertex.
//! Integer evaluators are the hot path of every bound; the generic evaluators
//! accept rationals or surds for identity checks.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::{ceil_rational, ExactField, Rational};
use crate::srg::SrgParams;

/// `R(x, y, d)` over any exact field.
pub fn rap_eval_in<T: ExactField>(p: &SrgParams, x: &T, y: &T, d: &T) -> T {
    let c = T::from_i64;
    let (x, y, d) = (x.clone(), y.clone(), d.clone());
    let one = c(1);
    let two = c(2);
    x.clone() * (x.clone() + one.clone()) * (c(p.v) - y.clone())
        - two.clone() * x.clone() * y.clone() * c(p.k)
        + (two * x + c(p.lambda) - c(p.mu) + one.clone()) * y.clone() * d.clone()
        + y.clone() * (y.clone() - one) * c(p.mu)
        - y * d.clone() * d
}

/// `R(x, y, d)` at rational arguments.
pub fn rap_eval(p: &SrgParams, x: &Rational, y: &Rational, d: i64) -> Rational {
    rap_eval_in(p, x, y, &Rational::from_integer(BigInt::from(d)))
}

/// Operands below this magnitude keep every term of either polynomial
/// under `2^60`, so `i64` arithmetic cannot overflow.
const SMALL: i64 = 1 << 19;

fn all_small(values: &[i64]) -> bool {
    values.iter().all(|n| n.unsigned_abs() < SMALL as u64)
}

/// `R(x, y, d)` at integer arguments.
pub fn rap_eval_int(p: &SrgParams, x: i64, y: i64, d: i64) -> i128 {
    if all_small(&[p.v, p.k, p.lambda, p.mu, x, y, d]) {
        let (v, k, l, m) = (p.v, p.k, p.lambda, p.mu);
        let value = x * (x + 1) * (v - y) - 2 * x * y * k + (2 * x + l - m + 1) * y * d
            + y * (y - 1) * m
            - y * d * d;
        return value as i128;
    }
    let (v, k, l, m) = (p.v as i128, p.k as i128, p.lambda as i128, p.mu as i128);
    let (x, y, d) = (x as i128, y as i128, d as i128);
    x * (x + 1) * (v - y) - 2 * x * y * k + (2 * x + l - m + 1) * y * d + y * (y - 1) * m
        - y * d * d
}

/// `C(x, y)` over any exact field, for the edge-regular triple `(v, k, λ)`.
pub fn cap_eval_in<T: ExactField>(v: i64, k: i64, lambda: i64, x: &T, y: &T) -> T {
    let c = T::from_i64;
    let (x, y) = (x.clone(), y.clone());
    let one = c(1);
    (c(v) - y.clone()) * x.clone() * (x.clone() + one.clone())
        - c(2) * x * y.clone() * (c(k) - y.clone() + one.clone())
        + y.clone() * (y.clone() - one) * (c(lambda) - y + c(2))
}

pub fn cap_eval(v: i64, k: i64, lambda: i64, x: &Rational, y: &Rational) -> Rational {
    cap_eval_in(v, k, lambda, x, y)
}

pub fn cap_eval_int(v: i64, k: i64, lambda: i64, x: i64, y: i64) -> i128 {
    if all_small(&[v, k, lambda, x, y]) {
        let value = (v - y) * x * (x + 1) - 2 * x * y * (k - y + 1) + y * (y - 1) * (lambda - y + 2);
        return value as i128;
    }
    let (v, k, l, x, y) = (v as i128, k as i128, lambda as i128, x as i128, y as i128);
    (v - y) * x * (x + 1) - 2 * x * y * (k - y + 1) + y * (y - 1) * (l - y + 2)
}

/// Vertex `x_y = (2y(k-d) - (v-y)) / (2(v-y))` of `R(·, y, d)`, for `0 < y < v`.
pub fn critical_x(p: &SrgParams, y: i64, d: i64) -> Result<Rational> {
    if !(0 < y && y < p.v) {
        return Err(Error::Precondition(format!(
            "critical point needs 0 < y < v, got y = {y} for {p}"
        )));
    }
    Ok(Rational::new(
        BigInt::from(2 * y * (p.k - d) - (p.v - y)),
        BigInt::from(2 * (p.v - y)),
    ))
}

/// `[r] = ⌈r - 1/2⌉`, the smallest nearest integer; half-integers round down.
pub fn nearest_int(r: &Rational) -> BigInt {
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    ceil_rational(&(r - half))
}

/// `[x_y]` computed in integers: `⌈(y(k-d) - (v-y)) / (v-y)⌉`.
pub fn nearest_critical_x(p: &SrgParams, y: i64, d: i64) -> i64 {
    debug_assert!(0 < y && y < p.v);
    let den = p.v - y;
    let num = y * (p.k - d) - den;
    -Integer::div_floor(&-num, &den)
}

/// Whether `R(m, y, d) ≥ 0` for every integer `m`.
///
/// For `y < v` only `m = [x_y]` needs checking. For `y = v` the polynomial
/// is affine in `x` and is non-negative everywhere exactly when its slope
/// `2v(d-k)` vanishes and its constant term is non-negative.
pub fn rap_nonneg_all_integers(p: &SrgParams, y: i64, d: i64) -> bool {
    assert!(0 < y && y <= p.v, "y = {y} outside 1..=v for {p}");
    if y < p.v {
        return rap_eval_int(p, nearest_critical_x(p, y, d), y, d) >= 0;
    }
    let slope = 2 * p.v * (d - p.k);
    slope == 0 && rap_eval_int(p, 0, y, d) >= 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational;

    fn p(v: i64, k: i64, l: i64, m: i64) -> SrgParams {
        SrgParams::new(v, k, l, m).unwrap()
    }

    fn r(n: i64) -> Rational {
        rational(n, 1)
    }

    #[test]
    fn wide_and_narrow_paths_agree() {
        let q = SrgParams { v: 1_000_000, k: 500, lambda: 0, mu: 0 };
        let big = rap_eval_int(&q, 700_000, 999_999, 3);
        let wide = {
            let (x, y, d) = (700_000i128, 999_999i128, 3i128);
            x * (x + 1) * (1_000_000 - y) - 2 * x * y * 500 + (2 * x + 1) * y * d - y * d * d
        };
        assert_eq!(big, wide);
        assert_eq!(rap_eval_int(&p(10, 3, 0, 1), -4, 7, 2), {
            let (x, y, d) = (-4i128, 7i128, 2i128);
            x * (x + 1) * 3 - 6 * x * y + 2 * x * y * d + y * (y - 1) - y * d * d
        });
        assert_eq!(cap_eval_int(600_000, 10, 2, -3, 5), {
            let (v, x, y) = (600_000i128, -3i128, 5i128);
            (v - y) * x * (x + 1) - 2 * x * y * 6 + y * (y - 1) * (2 - y + 2)
        });
    }

    #[test]
    fn rap_examples() {
        assert_eq!(rap_eval(&p(10, 3, 0, 1), &r(2), &r(5), 0), r(-10));
        assert_eq!(rap_eval(&p(10, 3, 0, 1), &r(0), &r(1), 0), r(0));
        assert_eq!(rap_eval(&p(16, 6, 2, 2), &r(3), &r(16), 6), r(0));
        assert_eq!(rap_eval_int(&p(10, 3, 0, 1), 2, 5, 0), -10);
    }

    #[test]
    fn cap_examples() {
        assert_eq!(cap_eval(10, 3, 0, &r(0), &r(3)), r(-6));
        assert_eq!(cap_eval(10, 3, 0, &r(2), &r(3)), r(24));
        assert_eq!(cap_eval(13, 6, 2, &r(0), &r(1)), r(0));
        assert_eq!(cap_eval(57, 14, 1, &r(0), &r(1)), r(0));
        assert_eq!(cap_eval_int(10, 3, 0, 2, 3), 24);
    }

    #[test]
    fn critical_x_examples() {
        assert_eq!(critical_x(&p(10, 3, 0, 1), 4, 0).unwrap(), rational(3, 2));
        assert_eq!(critical_x(&p(16, 6, 2, 2), 12, 4).unwrap(), rational(11, 2));
        assert_eq!(critical_x(&p(16, 6, 2, 2), 7, 6).unwrap(), rational(-1, 2));
        assert!(critical_x(&p(16, 6, 2, 2), 0, 1).is_err());
        assert!(critical_x(&p(16, 6, 2, 2), 16, 1).is_err());
    }

    #[test]
    fn nearest_int_rounds_half_down() {
        assert_eq!(nearest_int(&rational(3, 2)), BigInt::from(1));
        assert_eq!(nearest_int(&rational(11, 2)), BigInt::from(5));
        assert_eq!(nearest_int(&rational(-1, 2)), BigInt::from(-1));
        assert_eq!(nearest_int(&rational(8, 5)), BigInt::from(2));
        assert_eq!(nearest_int(&rational(-7, 5)), BigInt::from(-1));
    }

    #[test]
    fn nearest_critical_x_matches_rational_route() {
        for q in [p(10, 3, 0, 1), p(16, 6, 2, 2), p(13, 6, 2, 3)] {
            for d in 0..=q.k {
                for y in 1..q.v {
                    let exact = nearest_int(&critical_x(&q, y, d).unwrap());
                    assert_eq!(BigInt::from(nearest_critical_x(&q, y, d)), exact);
                }
            }
        }
    }

    #[test]
    fn nonneg_examples() {
        assert!(rap_nonneg_all_integers(&p(10, 3, 0, 1), 4, 0));
        assert!(!rap_nonneg_all_integers(&p(10, 3, 0, 1), 5, 0));
        assert!(rap_nonneg_all_integers(&p(16, 6, 2, 2), 16, 6));
        assert!(!rap_nonneg_all_integers(&p(16, 6, 2, 2), 16, 5));
    }
}
