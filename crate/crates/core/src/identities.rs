//! Exact polynomial identities behind the bounds, checked numerically over
//! every enumerated tuple.
//!
//! Large grids use integer forms scaled to clear denominators; a slower
//! rational route re-derives the factorization for small orders so that
//! both evaluators are exercised.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::bip::{cap_eval_int, critical_x, rap_eval, rap_eval_in, rap_eval_int};
use crate::bounds::haemers_upper;
use crate::error::{Error, Result};
use crate::exact::{rational, QuadraticSurd, Rational};
use crate::srg::{enumerate_feasible, Level, SrgParams};

/// Largest order accepted by the suite; the scaled integer forms grow like
/// `v⁶`.
pub const IDENTITY_VMAX: i64 = 1000;

/// Largest order for which the rational factorization route runs.
pub const RATIONAL_ROUTE_VMAX: i64 = 40;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub cases: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub vmax: i64,
    pub tuples: usize,
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(IdentityCheck::holds)
    }

    pub fn check(&self, name: &str) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Default)]
struct Counter {
    cases: u64,
    failures: u64,
    first: Option<String>,
}

impl Counter {
    fn expect(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first.is_none() {
                self.first = Some(describe());
            }
        }
    }

    fn merge(mut self, other: Counter) -> Counter {
        self.cases += other.cases;
        self.failures += other.failures;
        self.first = self.first.or(other.first);
        self
    }
}

fn run(
    name: &'static str,
    tuples: &[SrgParams],
    f: impl Fn(&SrgParams, &mut Counter) + Sync,
) -> IdentityCheck {
    let total = tuples
        .par_iter()
        .map(|p| {
            let mut c = Counter::default();
            f(p, &mut c);
            c
        })
        .reduce(Counter::default, Counter::merge);
    IdentityCheck {
        name,
        cases: total.cases,
        failures: total.failures,
        first_failure: total.first,
    }
}

fn surd(n: i64) -> QuadraticSurd {
    QuadraticSurd::integer(n)
}

/// `R(x, v, k) = 0` for integer `x ∈ [-5, 5]`.
fn full_subgraph(p: &SrgParams, c: &mut Counter) {
    for x in -5..=5 {
        let value = rap_eval_int(p, x, p.v, p.k);
        c.expect(value == 0, || format!("{p}: R({x}, v, k) = {value}"));
    }
}

/// Relations between the tuple and its restricted eigenvalues:
/// `ρ+σ = λ-μ`, `ρσ = μ-k` and `vμ = (k-σ)(k-ρ)`.
fn eigenvalue_relations(p: &SrgParams, c: &mut Counter) {
    let ev = p.eigenvalues().expect("enumerated tuples satisfy the basic identity");
    let k = surd(p.k);
    let sum = &ev.rho + &ev.sigma;
    let product = &ev.rho * &ev.sigma;
    let vmu = (&k - &ev.sigma) * (&k - &ev.rho);
    c.expect(sum == surd(p.lambda - p.mu), || format!("{p}: rho + sigma = {sum}"));
    c.expect(product == surd(p.mu - p.k), || format!("{p}: rho sigma = {product}"));
    c.expect(vmu == surd(p.v * p.mu), || format!("{p}: (k-sigma)(k-rho) = {vmu}"));
}

/// `m² R(N/m, y, d)` with `N/m = x_y + 1/2`, `N = y(k-d)`, `m = v-y`.
/// Magnitudes stay below `v⁵`, within `i64` for `v ≤` [`IDENTITY_VMAX`].
fn scaled_rap_at_vertex(p: &SrgParams, y: i64, d: i64) -> (i64, i64) {
    let (v, k, l, mu) = (p.v, p.k, p.lambda, p.mu);
    let n = y * (k - d);
    let m = v - y;
    let value = n * (n + m) * m - 2 * n * y * k * m
        + (2 * n + (l - mu + 1) * m) * y * d * m
        + (y * (y - 1) * mu - y * d * d) * m * m;
    (value, m)
}

/// `S = A + B` and `P = AB` for `A = (d-ρ)(k-σ)`, `B = (d-σ)(k-ρ)`, from
/// `ρ, σ = (e ± √D)/2`: with `a = 2d-e`, `b = 2k-e`,
/// `4A = ab - D + (a-b)√D` and `4B = ab - D - (a-b)√D`.
/// `None` when either is not an integer.
fn surd_sum_product(p: &SrgParams, d: i64) -> Option<(i64, i64)> {
    let e = (p.lambda - p.mu) as i128;
    let disc = p.discriminant() as i128;
    let a = 2 * d as i128 - e;
    let b = 2 * p.k as i128 - e;
    let r = a * b - disc;
    let s4 = 2 * r;
    let p16 = r * r - (a - b) * (a - b) * disc;
    if s4 % 4 != 0 || p16 % 16 != 0 {
        return None;
    }
    Some(((s4 / 4).try_into().ok()?, (p16 / 16).try_into().ok()?))
}

/// `-((v-y)/y) μ R(x_y + 1/2, y, d) = (μy - (d-ρ)(k-σ))(μy - (d-σ)(k-ρ))`
/// for `0 ≤ d ≤ k`, `0 < y < v`, with the right side expanded as
/// `μ²y² - μSy + P`.
fn factorization(p: &SrgParams, c: &mut Counter) {
    if p.mu == 0 {
        return;
    }
    let mu = p.mu;
    for d in 0..=p.k {
        let Some((s, pr)) = surd_sum_product(p, d) else {
            c.expect(false, || format!("{p}, d = {d}: right side is not an integer polynomial"));
            continue;
        };
        for y in 1..p.v {
            let (scaled, m) = scaled_rap_at_vertex(p, y, d);
            let rhs = mu * mu * y * y - mu * s * y + pr;
            c.expect(-mu * scaled == y * m * rhs, || {
                format!("{p}, d = {d}, y = {y}: factorization fails")
            });
        }
    }
}

/// The factorization again, through the rational evaluator at the
/// rational vertex and full surd products on the right.
fn factorization_rational(p: &SrgParams, c: &mut Counter) {
    if p.mu == 0 || p.v > RATIONAL_ROUTE_VMAX {
        return;
    }
    let ev = p.eigenvalues().expect("enumerated tuples satisfy the basic identity");
    let k = surd(p.k);
    let half = rational(1, 2);
    for d in 0..=p.k {
        let ds = surd(d);
        for y in 1..p.v {
            let x = critical_x(p, y, d).expect("0 < y < v") + &half;
            let r = rap_eval(p, &x, &Rational::from_integer(BigInt::from(y)), d);
            let lhs = -r * rational(p.mu * (p.v - y), y);
            let muy = surd(p.mu * y);
            let rhs = (&muy - (&ds - &ev.rho) * (&k - &ev.sigma))
                * (&muy - (&ds - &ev.sigma) * (&k - &ev.rho));
            c.expect(QuadraticSurd::from_rational(&lhs) == rhs, || {
                format!("{p}, d = {d}, y = {y}: {lhs} != {rhs}")
            });
        }
    }
}

/// For `μ = 0`: `-((v-y)/y) R(x_y + 1/2, y, d) = (k-d)(k+1)y - v(k-d)(d+1)`.
fn mu_zero(p: &SrgParams, c: &mut Counter) {
    if p.mu != 0 {
        return;
    }
    let (v, k) = (p.v, p.k);
    for d in 0..=p.k {
        for y in 1..p.v {
            let (scaled, m) = scaled_rap_at_vertex(p, y, d);
            let rhs = (k - d) * (k + 1) * y - v * (k - d) * (d + 1);
            c.expect(-scaled == y * m * rhs, || {
                format!("{p}, d = {d}, y = {y}: mu = 0 identity fails")
            });
        }
    }
}

/// The complement tuple, built without validation so that imprimitive
/// tuples are covered too.
fn raw_complement(p: &SrgParams) -> SrgParams {
    SrgParams {
        v: p.v,
        k: p.v - p.k - 1,
        lambda: p.v - 2 - 2 * p.k + p.mu,
        mu: p.v - 2 * p.k + p.lambda,
    }
}

/// `R_complement(x, y, 0) = C(y-x-1, y)` on `x, y ∈ [-3, v+3]`.
fn complement_duality(p: &SrgParams, c: &mut Counter) {
    let q = raw_complement(p);
    for y in -3..=p.v + 3 {
        for x in -3..=p.v + 3 {
            let lhs = rap_eval_int(&q, x, y, 0);
            let rhs = cap_eval_int(p.v, p.k, p.lambda, y - x - 1, y);
            c.expect(lhs == rhs, || format!("{p}: x = {x}, y = {y}: {lhs} != {rhs}"));
        }
    }
}

/// `Q(y) = (v-2k+λ)y² + (k²+3k-λ-v(λ+2))y + v(λ+1-k)`.
fn cab_quadratic_value(p: &SrgParams, y: i64) -> i64 {
    let (v, k, l) = (p.v, p.k, p.lambda);
    (v - 2 * k + l) * y * y + (k * k + 3 * k - l - v * (l + 2)) * y + v * (l + 1 - k)
}

/// At `X = y(k-y+1)/(v-y)`: `(v-y) C(X, y) = -y Q(y)` for `0 < y < v`, and
/// the shifted form `Q(z+1) = (v-2k+λ)z² + (k²-k+λ-vλ)z - k(v-k-1)`.
fn cab_quadratic(p: &SrgParams, c: &mut Counter) {
    let (v, k, l) = (p.v, p.k, p.lambda);
    for y in 1..v {
        let n = y * (k - y + 1);
        let m = v - y;
        let scaled = n * (n + m) * m - 2 * n * y * m * (k - y + 1) + y * (y - 1) * (l - y + 2) * m * m;
        let q = cab_quadratic_value(p, y);
        c.expect(scaled == -y * q * m, || format!("{p}, y = {y}: clique vertex identity fails"));
    }
    for z in -3..=v + 3 {
        let shifted = (v - 2 * k + l) * z * z + (k * k - k + l - v * l) * z - k * (v - k - 1);
        let q = cab_quadratic_value(p, z + 1);
        c.expect(shifted == q, || format!("{p}, z = {z}: shifted quadratic fails"));
    }
}

/// Sample points for `t`: `frac(-σ)` and a few fixed rationals.
fn t_samples(sigma: &QuadraticSurd) -> Vec<QuadraticSurd> {
    let mut ts = vec![(-sigma).frac()];
    ts.extend(
        [(-1, 1), (0, 1), (1, 2), (1, 1), (3, 1), (-7, 3)]
            .map(|(n, d)| QuadraticSurd::from_rational(&rational(n, d))),
    );
    ts
}

/// For conference tuples, `R(d-σ-t, 2(d-σ-t)-a, d)` expands to
/// `-(d-σ-t)(2t² - (1-4σ)t + d - 3σ - 1) + a(t² + (2σ-1)t + 2σ² + d + aσ(σ+1))`.
fn conference_first(p: &SrgParams, c: &mut Counter) {
    if p.conference_n().is_none() {
        return;
    }
    let s = p.eigenvalues().expect("conference tuples are valid").sigma;
    let (one, two) = (surd(1), surd(2));
    for d in 0..=p.k {
        let ds = surd(d);
        for t in t_samples(&s) {
            for a in 0..=2 {
                let a = surd(a);
                let x = &ds - &s - &t;
                let y = &two * &x - &a;
                let lhs = rap_eval_in(p, &x, &y, &ds);
                let first = &two * &t * &t - (&one - surd(4) * &s) * &t + &ds - surd(3) * &s - &one;
                let second = &t * &t + (&two * &s - &one) * &t + &two * &s * &s + &ds
                    + &a * &s * (&s + &one);
                let rhs = -(&x * first) + &a * second;
                c.expect(lhs == rhs, || format!("{p}, d = {d}, t = {t}, a = {a}: {lhs} != {rhs}"));
            }
        }
    }
}

/// For conference tuples, `R(d-σ-t-1, 2(d-σ-t-1)-a+2, d)` expands to
/// `-(d-σ-t-1)(2t² + (3+4σ)t + d + σ) + (a-2)(t² + (2σ+1)t + aσ(σ+1) + d)`.
fn conference_second(p: &SrgParams, c: &mut Counter) {
    if p.conference_n().is_none() {
        return;
    }
    let s = p.eigenvalues().expect("conference tuples are valid").sigma;
    let (one, two) = (surd(1), surd(2));
    for d in 0..=p.k {
        let ds = surd(d);
        for t in t_samples(&s) {
            for a in 0..=2 {
                let a = surd(a);
                let x = &ds - &s - &t - &one;
                let y = &two * &x - &a + &two;
                let lhs = rap_eval_in(p, &x, &y, &ds);
                let first = &two * &t * &t + (surd(3) + surd(4) * &s) * &t + &ds + &s;
                let second = &t * &t + (&two * &s + &one) * &t + &a * &s * (&s + &one) + &ds;
                let rhs = -(&x * first) + (&a - &two) * second;
                c.expect(lhs == rhs, || format!("{p}, d = {d}, t = {t}, a = {a}: {lhs} != {rhs}"));
            }
        }
    }
}

/// For conference tuples the spectral upper bound is `2d - 2σ + d/σ - 1`.
fn conference_haemers(p: &SrgParams, c: &mut Counter) {
    if p.conference_n().is_none() {
        return;
    }
    let s = p.eigenvalues().expect("conference tuples are valid").sigma;
    for d in 0..=p.k {
        let ds = surd(d);
        let expected = surd(2) * &ds - surd(2) * &s + &ds / &s - surd(1);
        let h = haemers_upper(p, d).expect("0 <= d <= k");
        c.expect(h == expected, || format!("{p}, d = {d}: {h} != {expected}"));
    }
}

/// Runs every identity over all tuples with `v ≤ vmax` satisfying the basic
/// identity, imprimitive ones included.
pub fn run_identity_suite(vmax: i64) -> Result<IdentityReport> {
    check_vmax(vmax)?;
    let tuples = enumerate_feasible(vmax, Level::Basic, false);
    run_identity_suite_on(vmax, &tuples)
}

fn check_vmax(vmax: i64) -> Result<()> {
    if vmax > IDENTITY_VMAX {
        return Err(Error::InvalidParams(format!(
            "identity suite supports v <= {IDENTITY_VMAX}, got {vmax}"
        )));
    }
    Ok(())
}

pub fn run_identity_suite_on(vmax: i64, tuples: &[SrgParams]) -> Result<IdentityReport> {
    check_vmax(tuples.iter().map(|p| p.v).max().unwrap_or(0))?;
    let checks = vec![
        run("full_subgraph", tuples, full_subgraph),
        run("eigenvalue_relations", tuples, eigenvalue_relations),
        run("factorization", tuples, factorization),
        run("factorization_rational", tuples, factorization_rational),
        run("mu_zero", tuples, mu_zero),
        run("complement_duality", tuples, complement_duality),
        run("cab_quadratic", tuples, cab_quadratic),
        run("conference_first", tuples, conference_first),
        run("conference_second", tuples, conference_second),
        run("conference_haemers", tuples, conference_haemers),
    ];
    Ok(IdentityReport {
        vmax,
        tuples: tuples.len(),
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_holds_for_small_orders() {
        let report = run_identity_suite(30).unwrap();
        assert!(report.all_hold());
        for check in &report.checks {
            assert!(check.holds(), "{}: {:?}", check.name, check.first_failure);
            assert!(check.cases > 0, "{} ran no cases", check.name);
        }
    }

    #[test]
    fn detects_a_broken_tuple() {
        // R(x, v, k) = v(μ(v-k-1) - k(k-λ-1)), non-zero off the basic identity.
        let bad = SrgParams { v: 10, k: 4, lambda: 1, mu: 2 };
        let mut c = Counter::default();
        full_subgraph(&bad, &mut c);
        assert_eq!(c.failures, 11);
        assert!(c.failures > 0);
        assert!(c.first.is_some());
    }

    #[test]
    fn surd_sum_product_matches_surds() {
        for p in enumerate_feasible(60, Level::Basic, true) {
            let ev = p.eigenvalues().unwrap();
            let k = surd(p.k);
            for d in 0..=p.k {
                let a = (surd(d) - &ev.rho) * (&k - &ev.sigma);
                let b = (surd(d) - &ev.sigma) * (&k - &ev.rho);
                let (s, pr) = surd_sum_product(&p, d).unwrap();
                assert_eq!(&a + &b, surd(s), "{p}, d = {d}");
                assert_eq!(&a * &b, surd(pr), "{p}, d = {d}");
            }
        }
    }

    #[test]
    fn refuses_large_orders() {
        assert!(run_identity_suite(IDENTITY_VMAX + 1).is_err());
    }

    #[test]
    fn scaled_vertex_matches_rational_evaluation() {
        let p = SrgParams::new(16, 6, 2, 2).unwrap();
        for d in 0..=p.k {
            for y in 1..p.v {
                let (scaled, m) = scaled_rap_at_vertex(&p, y, d);
                let x = critical_x(&p, y, d).unwrap() + rational(1, 2);
                let r = rap_eval(&p, &x, &Rational::from_integer(BigInt::from(y)), d);
                assert_eq!(r * rational(m * m, 1), rational(scaled, 1));
            }
        }
    }
}
