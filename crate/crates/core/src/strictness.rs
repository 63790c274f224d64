//! Sufficient conditions for the regular adjacency upper bound to beat
//! `⌊h_d⌋`, where `h_d` is Haemers' upper bound, together with the Paley and
//! CY1 parameter families and a finite witness search over them.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use crate::bounds::{cab, haemers_clamped, haemers_upper, rab_upper};
use crate::error::{Error, Result};
use crate::exact::{floor_rational, Rational, QuadraticSurd, SignDecision, SurdSum};
use crate::srg::{SrgParams, TypeClass, MAX_ORDER};

/// Three-valued outcome of a predicate. `Unproven` arises only from an
/// undecidable sign and never counts as an improvement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Verdict {
    Holds,
    Fails,
    Unproven,
}

impl Verdict {
    fn from_signs(signs: &[SignDecision]) -> Verdict {
        if signs
            .iter()
            .any(|s| matches!(s, SignDecision::Negative | SignDecision::Zero))
        {
            Verdict::Fails
        } else if signs.iter().all(|s| *s == SignDecision::Positive) {
            Verdict::Holds
        } else {
            Verdict::Unproven
        }
    }

    fn from_bool(b: bool) -> Verdict {
        if b {
            Verdict::Holds
        } else {
            Verdict::Fails
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::Unproven => "unproven",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrictnessVerdict {
    pub predicate: Verdict,
    /// Direct computation of the improvement the predicate claims.
    pub verified_strict: bool,
    /// The tested inequality with its values filled in.
    pub window: String,
}

impl StrictnessVerdict {
    /// A `Holds` predicate must be backed by a direct improvement.
    pub fn is_sound(&self) -> bool {
        self.predicate != Verdict::Holds || self.verified_strict
    }
}

fn int(n: i64) -> QuadraticSurd {
    QuadraticSurd::integer(n)
}

fn ratio(n: i64, d: i64) -> QuadraticSurd {
    QuadraticSurd::new(n, 0, d, 0)
}

fn upper_is_strict(p: &SrgParams, d: i64) -> Result<bool> {
    Ok(rab_upper(p, d)? < haemers_clamped(p, d)?.0)
}

/// `σ` and `t = frac(-σ)` for a conference tuple with irrational spectrum,
/// after checking `0 ≤ d < -σ`.
struct TypeIData {
    sigma: QuadraticSurd,
    t: QuadraticSurd,
}

fn type1_data(p: &SrgParams, d: i64) -> Result<TypeIData> {
    if p.classify() != TypeClass::TypeIOnly {
        return Err(Error::Precondition(format!(
            "{p} is not a conference tuple with irrational eigenvalues"
        )));
    }
    let sigma = p.eigenvalues()?.sigma;
    let minus_sigma = -&sigma;
    if d < 0 || minus_sigma.compare_integer(d).is_le() {
        return Err(Error::Precondition(format!(
            "type I window needs 0 <= d < -sigma, got d = {d} for {p}"
        )));
    }
    Ok(TypeIData {
        t: minus_sigma.frac(),
        sigma,
    })
}

/// `d/(√v+1)`
fn d_over_root_v_plus_one(p: &SrgParams, d: i64) -> QuadraticSurd {
    int(d) / (QuadraticSurd::sqrt(p.v) + int(1))
}

/// `c + √v/2 - √(4v-8d+5)/4`, the common shape of the quadratic-root
/// endpoints (`√(v-2d+5/4) = √(4v-8d+5)/2`).
fn root_endpoint(p: &SrgParams, d: i64, c: QuadraticSurd) -> SurdSum {
    SurdSum::new()
        .plus(c)
        .plus(QuadraticSurd::new(0, 1, 2, p.v))
        .minus(QuadraticSurd::new(0, 1, 4, 4 * p.v - 8 * d + 5))
}

fn approx(s: &SurdSum) -> String {
    s.approx_decimal(6)
}

fn sum_minus(a: &SurdSum, b: &SurdSum) -> SurdSum {
    let mut out = a.clone();
    for t in b.terms() {
        out = out.minus(t.clone());
    }
    out
}

fn single(s: QuadraticSurd) -> SurdSum {
    SurdSum::from(s)
}

/// First type I window: `1/2 + d/(√v+1) < frac(-σ) < 3/4 + (√v - √(v-2d+5/4))/2`.
pub fn type1_window_1(p: &SrgParams, d: i64) -> Result<StrictnessVerdict> {
    let data = type1_data(p, d)?;
    let t = single(data.t.clone());
    let lower = single(ratio(1, 2) + d_over_root_v_plus_one(p, d));
    let upper = root_endpoint(p, d, ratio(3, 4));
    let signs = [
        sum_minus(&t, &lower).decide_sign(),
        sum_minus(&upper, &t).decide_sign(),
    ];
    Ok(StrictnessVerdict {
        predicate: Verdict::from_signs(&signs),
        verified_strict: upper_is_strict(p, d)?,
        window: format!(
            "{} < frac(-sigma) = {} < {}",
            approx(&lower),
            approx(&t),
            approx(&upper)
        ),
    })
}

/// Second type I window (`σ < -2`):
/// `frac(-σ) < min(d/(√v+1), -1/4 + (√v - √(v-2d+5/4))/2)`.
pub fn type1_window_2(p: &SrgParams, d: i64) -> Result<StrictnessVerdict> {
    let data = type1_data(p, d)?;
    if data.sigma.compare_integer(-2).is_ge() {
        return Err(Error::Precondition(format!(
            "second type I window needs sigma < -2 for {p}"
        )));
    }
    let t = single(data.t.clone());
    let first = single(d_over_root_v_plus_one(p, d));
    let second = root_endpoint(p, d, ratio(-1, 4));
    let signs = [
        sum_minus(&first, &t).decide_sign(),
        sum_minus(&second, &t).decide_sign(),
    ];
    Ok(StrictnessVerdict {
        predicate: Verdict::from_signs(&signs),
        verified_strict: upper_is_strict(p, d)?,
        window: format!(
            "frac(-sigma) = {} < min({}, {})",
            approx(&t),
            approx(&first),
            approx(&second)
        ),
    })
}

/// Third type I window (`σ < -3`):
/// `d/(√v+1) < frac(-σ) < min(1/2 + d/(√v+1), -1/4 + (√v - √(v-2d+5/4))/2)`.
pub fn type1_window_3(p: &SrgParams, d: i64) -> Result<StrictnessVerdict> {
    let data = type1_data(p, d)?;
    if data.sigma.compare_integer(-3).is_ge() {
        return Err(Error::Precondition(format!(
            "third type I window needs sigma < -3 for {p}"
        )));
    }
    let t = single(data.t.clone());
    let lower = single(d_over_root_v_plus_one(p, d));
    let first = single(ratio(1, 2) + d_over_root_v_plus_one(p, d));
    let second = root_endpoint(p, d, ratio(-1, 4));
    let signs = [
        sum_minus(&t, &lower).decide_sign(),
        sum_minus(&first, &t).decide_sign(),
        sum_minus(&second, &t).decide_sign(),
    ];
    Ok(StrictnessVerdict {
        predicate: Verdict::from_signs(&signs),
        verified_strict: upper_is_strict(p, d)?,
        window: format!(
            "{} < frac(-sigma) = {} < min({}, {})",
            approx(&lower),
            approx(&t),
            approx(&first),
            approx(&second)
        ),
    })
}

/// Which of the three expressions `f = 2t + d/σ + a - 1` gives
/// `f = frac(h_d)` for a type I tuple, where `t = frac(-σ)`.
///
/// Returns `(a, 2t + d/σ + a - 1)`. Fails when `t` sits exactly on a case
/// boundary.
pub fn type1_frac_case(p: &SrgParams, d: i64) -> Result<(u8, QuadraticSurd)> {
    let data = type1_data(p, d)?;
    let t = &data.t;
    let d_over_sigma = int(d) / &data.sigma;
    let half_ratio = &d_over_sigma * &ratio(-1, 2); // -d/(2σ)
    let low = t.compare(&half_ratio).expect("same radicand");
    let high = t
        .compare(&(ratio(1, 2) + &half_ratio))
        .expect("same radicand");
    let a: u8 = match (low, high) {
        (std::cmp::Ordering::Less, _) => 2,
        (std::cmp::Ordering::Greater, std::cmp::Ordering::Less) => 1,
        (_, std::cmp::Ordering::Greater) => 0,
        _ => {
            return Err(Error::Precondition(format!(
                "frac(-sigma) lies on a case boundary for {p}, d = {d}"
            )))
        }
    };
    let f = int(2) * t + d_over_sigma + int(a as i64 - 1);
    Ok((a, f))
}

struct TypeIIData {
    rho: Rational,
    sigma: Rational,
    h: Rational,
}

fn type2_data(p: &SrgParams, d: i64) -> Result<TypeIIData> {
    if !p.classify().is_type_ii() {
        return Err(Error::Precondition(format!("{p} has irrational eigenvalues")));
    }
    let ev = p.eigenvalues()?;
    let h = haemers_upper(p, d)?;
    Ok(TypeIIData {
        rho: ev.rho.to_rational().expect("integral eigenvalue"),
        sigma: ev.sigma.to_rational().expect("integral eigenvalue"),
        h: h.to_rational().expect("rational bound"),
    })
}

fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn frac_rational(r: &Rational) -> Rational {
    r - Rational::from_integer(floor_rational(r))
}

/// Whether `[x_⌊h_d⌋] = [x_{h_d}]`, decided by
/// `frac(h_d) < v(k-d)/((k-σ)(k-σ-1))`.
pub fn type2_x_stable(p: &SrgParams, d: i64) -> Result<bool> {
    let data = type2_data(p, d)?;
    let k_minus_sigma = rat(p.k) - &data.sigma;
    let bound = rat(p.v) * rat(p.k - d) / (&k_minus_sigma * (&k_minus_sigma - rat(1)));
    Ok(frac_rational(&data.h) < bound)
}

/// `0 < frac(h_d) < ((k-σ) - (d-σ)(ρ-σ))/μ`
pub fn type2_strict(p: &SrgParams, d: i64) -> Result<StrictnessVerdict> {
    let data = type2_data(p, d)?;
    if p.mu == 0 {
        return Err(Error::Imprimitive { params: *p });
    }
    let f = frac_rational(&data.h);
    let bound = ((rat(p.k) - &data.sigma) - (rat(d) - &data.sigma) * (&data.rho - &data.sigma))
        / rat(p.mu);
    let holds = f > rat(0) && f < bound;
    Ok(StrictnessVerdict {
        predicate: Verdict::from_bool(holds),
        verified_strict: upper_is_strict(p, d)?,
        window: format!("0 < frac(h_d) = {f} < {bound}"),
    })
}

/// `0 < frac(-k/σ) < 1 - ρ(ρ+1)/(v-2k+λ)`, which for integral spectra is
/// equivalent to `cab < ⌊1 - k/σ⌋`.
pub fn cab_strict(p: &SrgParams) -> Result<StrictnessVerdict> {
    if !p.is_primitive() {
        return Err(Error::Imprimitive { params: *p });
    }
    let data = type2_data(p, 0)?;
    let denom = p.v - 2 * p.k + p.lambda;
    if denom <= 0 {
        return Err(Error::Precondition(format!(
            "v - 2k + lambda = {denom} is not positive for {p}"
        )));
    }
    let ratio_k = -rat(p.k) / &data.sigma;
    let f = frac_rational(&ratio_k);
    let bound = rat(1) - &data.rho * (&data.rho + rat(1)) / rat(denom);
    let holds = f > rat(0) && f < bound;
    let delsarte = floor_rational(&(rat(1) + &ratio_k));
    let clique_bound = cab(p.v, p.k, p.lambda)?;
    Ok(StrictnessVerdict {
        predicate: Verdict::from_bool(holds),
        verified_strict: BigInt::from(clique_bound) < delsarte,
        window: format!("0 < frac(-k/sigma) = {f} < {bound}"),
    })
}

pub fn is_prime(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            return false;
        }
        p += 1;
    }
    true
}

pub fn is_prime_power(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    let p = (2..=n).find(|p| n % p == 0).unwrap();
    let mut m = n;
    while m % p == 0 {
        m /= p;
    }
    m == 1
}

/// `(q, (q-1)/2, (q-5)/4, (q-1)/4)`
pub fn paley_params(q: i64) -> Result<SrgParams> {
    if q % 4 != 1 || !is_prime_power(q) {
        return Err(Error::Precondition(format!(
            "Paley parameters need a prime power q = 1 (mod 4), got {q}"
        )));
    }
    SrgParams::new(q, (q - 1) / 2, (q - 5) / 4, (q - 1) / 4)
}

/// `(q⁴, (q-1)²(q²+1), μ+ρ+σ, (q-1)²((q-1)²+1))` with `ρ = (q-1)²`,
/// `σ = 1-2q`.
pub fn cy1_params(q: i64) -> Result<SrgParams> {
    if !is_prime_power(q) {
        return Err(Error::Precondition(format!(
            "CY1 parameters need a prime power q >= 2, got {q}"
        )));
    }
    let s = (q - 1) * (q - 1);
    let mu = s * (s + 1);
    let rho = s;
    let sigma = 1 - 2 * q;
    SrgParams::new(q.pow(4), s * (q * q + 1), mu + rho + sigma, mu)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    Paley,
    Cy1,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "paley" => Ok(Family::Paley),
            "cy1" => Ok(Family::Cy1),
            other => Err(Error::InvalidParams(format!("unknown family {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessEntry {
    pub q: i64,
    pub params: SrgParams,
    pub rab_upper: i64,
    pub haem_floor: i64,
    pub verdict: StrictnessVerdict,
}

type Window = fn(&SrgParams, i64) -> Result<StrictnessVerdict>;

/// Tries the three type I windows; the combined predicate holds when any
/// applicable window holds. Windows whose preconditions fail are noted in
/// the rendered text.
pub fn type1_combined(p: &SrgParams, d: i64) -> Result<StrictnessVerdict> {
    let windows: [(&str, Window); 3] = [
        ("W1", type1_window_1),
        ("W2", type1_window_2),
        ("W3", type1_window_3),
    ];
    let mut predicate = Verdict::Fails;
    let mut parts = Vec::new();
    for (name, window) in windows {
        match window(p, d) {
            Ok(v) => {
                match (predicate, v.predicate) {
                    (_, Verdict::Holds) => predicate = Verdict::Holds,
                    (Verdict::Fails, Verdict::Unproven) => predicate = Verdict::Unproven,
                    _ => {}
                }
                parts.push(format!("{name}[{}]: {}", v.predicate, v.window));
            }
            Err(Error::Precondition(_)) if name != "W1" => {
                parts.push(format!("{name}: not applicable"));
            }
            Err(e) => return Err(e),
        }
    }
    Ok(StrictnessVerdict {
        predicate,
        verified_strict: upper_is_strict(p, d)?,
        window: parts.join("; "),
    })
}

/// Scans the family up to `qmax`: primes `q = 1 (mod 4)` for Paley, prime
/// powers for CY1. Parameters where `d` is outside the predicate's range
/// are skipped, and CY1 stops at the largest `q` with `q⁴` within
/// [`MAX_ORDER`].
pub fn witness_search(family: Family, d: i64, qmax: i64) -> Result<Vec<WitnessEntry>> {
    if d < 0 {
        return Err(Error::Precondition(format!("d = {d} is negative")));
    }
    let mut out = Vec::new();
    match family {
        Family::Paley => {
            for q in (5..=qmax).filter(|&q| q % 4 == 1 && is_prime(q)) {
                let p = paley_params(q)?;
                let verdict = match type1_combined(&p, d) {
                    Ok(v) => v,
                    Err(Error::Precondition(_)) => continue,
                    Err(e) => return Err(e),
                };
                out.push(entry(q, p, d, verdict)?);
            }
        }
        Family::Cy1 => {
            for q in (2..=qmax)
                .take_while(|q| q.checked_pow(4).is_some_and(|v| v <= MAX_ORDER))
                .filter(|&q| is_prime_power(q))
            {
                let p = cy1_params(q)?;
                if d > p.k {
                    continue;
                }
                let verdict = type2_strict(&p, d)?;
                out.push(entry(q, p, d, verdict)?);
            }
        }
    }
    Ok(out)
}

fn entry(q: i64, params: SrgParams, d: i64, verdict: StrictnessVerdict) -> Result<WitnessEntry> {
    Ok(WitnessEntry {
        q,
        params,
        rab_upper: rab_upper(&params, d)?,
        haem_floor: haemers_clamped(&params, d)?.0,
        verdict,
    })
}
