//! Independent reference computations for the integration tests. Nothing
//! here calls the library's bound or polynomial code; each value is derived
//! from its definition with plain integer arithmetic.

#![allow(dead_code)]

use srgbound::SrgParams;

/// Coefficients `(a, b, c)` of `R(x, y, d) = a x² + b x + c`.
pub fn rap_coeffs(p: &SrgParams, y: i64, d: i64) -> (i128, i128, i128) {
    let (v, k, l, m) = (p.v as i128, p.k as i128, p.lambda as i128, p.mu as i128);
    let (y, d) = (y as i128, d as i128);
    let a = v - y;
    let b = (v - y) - 2 * y * k + 2 * y * d;
    let c = (l - m + 1) * y * d + y * (y - 1) * m - y * d * d;
    (a, b, c)
}

/// Minimum over integers of `a x² + b x + c`, or `None` if unbounded below.
pub fn integer_min(a: i128, b: i128, c: i128) -> Option<i128> {
    let f = |x: i128| a * x * x + b * x + c;
    if a == 0 {
        return (b == 0).then_some(c);
    }
    if a < 0 {
        return None;
    }
    let x0 = (-b).div_euclid(2 * a);
    Some(f(x0).min(f(x0 + 1)))
}

pub fn rap_nonneg(p: &SrgParams, y: i64, d: i64) -> bool {
    let (a, b, c) = rap_coeffs(p, y, d);
    integer_min(a, b, c).is_some_and(|m| m >= 0)
}

/// `(lower, upper)` regular adjacency bounds by scanning every order.
pub fn rab(p: &SrgParams, d: i64) -> (i64, i64) {
    let ys: Vec<i64> = (d + 1..=p.v).filter(|&y| rap_nonneg(p, y, d)).collect();
    match (ys.first(), ys.last()) {
        (Some(&lo), Some(&hi)) => (lo, hi),
        _ => (p.v + 1, 0),
    }
}

pub fn isqrt(n: i128) -> i128 {
    assert!(n >= 0);
    let mut r = (n as f64).sqrt() as i128;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

fn discriminant(p: &SrgParams) -> i128 {
    let e = (p.lambda - p.mu) as i128;
    e * e + 4 * (p.k - p.mu) as i128
}

/// `min(⌊v(d-σ)/(k-σ)⌋, v)`, from `ρ, σ = (e ± √D)/2`: `n ≤ h` iff
/// `n(2k-e) - v(2d-e) ≤ (v-n)√D`.
pub fn haem_upper_clamped(p: &SrgParams, d: i64) -> i64 {
    let e = (p.lambda - p.mu) as i128;
    let disc = discriminant(p);
    let (v, k, d) = (p.v as i128, p.k as i128, d as i128);
    (0..=p.v)
        .rev()
        .find(|&n| {
            let n = n as i128;
            let l = n * (2 * k - e) - v * (2 * d - e);
            let m = v - n;
            l <= 0 || l * l <= m * m * disc
        })
        .expect("n = 0 always qualifies")
}

/// `max(⌈v(d-ρ)/(k-ρ)⌉, d+1)`: `n ≥ h` iff `n(2k-e) - v(2d-e) ≥ -(v-n)√D`.
pub fn haem_lower_clamped(p: &SrgParams, d: i64) -> i64 {
    let e = (p.lambda - p.mu) as i128;
    let disc = discriminant(p);
    let (v, k, dd) = (p.v as i128, p.k as i128, d as i128);
    (d + 1..=p.v)
        .find(|&n| {
            let n = n as i128;
            let l = n * (2 * k - e) - v * (2 * dd - e);
            let m = v - n;
            l >= 0 || l * l <= m * m * disc
        })
        .expect("n = v always qualifies")
}

/// Integral restricted eigenvalues `(ρ, σ)`, if any.
pub fn integral_eigenvalues(p: &SrgParams) -> Option<(i64, i64)> {
    let disc = discriminant(p);
    let r = isqrt(disc);
    if r * r != disc {
        return None;
    }
    let e = (p.lambda - p.mu) as i128;
    ((e + r) % 2 == 0).then(|| (((e + r) / 2) as i64, ((e - r) / 2) as i64))
}

/// `⌊1 - k/σ⌋ = 1 + ⌊k/|σ|⌋` for integral `σ < 0`.
pub fn delsarte_integral(p: &SrgParams) -> Option<i64> {
    let (_, s) = integral_eigenvalues(p)?;
    (s < 0).then(|| 1 + p.k.div_euclid(-s))
}

/// `C(x, y) = (v-y)x(x+1) - 2xy(k-y+1) + y(y-1)(λ-y+2)` as `a x² + b x + c`.
pub fn cap_coeffs(v: i64, k: i64, l: i64, y: i64) -> (i128, i128, i128) {
    let (v, k, l, y) = (v as i128, k as i128, l as i128, y as i128);
    (v - y, (v - y) - 2 * y * (k - y + 1), y * (y - 1) * (l - y + 2))
}

/// Least `y ≥ 2` with `C(m, y+1) < 0` for some integer `m`, or `v` if none.
pub fn clique_bound(v: i64, k: i64, l: i64) -> i64 {
    (2..v)
        .find(|&y| {
            let (a, b, c) = cap_coeffs(v, k, l, y + 1);
            integer_min(a, b, c).is_none_or(|m| m < 0)
        })
        .unwrap_or(v)
}
