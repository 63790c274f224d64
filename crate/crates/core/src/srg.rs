//! Strongly regular graph parameter tuples: restricted eigenvalues,
//! complementation, type classification and the arithmetic feasibility
//! battery.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{exact_sqrt, QuadraticSurd};

/// Largest order accepted by [`SrgParams::new`]. Keeps every integer
/// polynomial evaluation in this crate inside `i128`.
pub const MAX_ORDER: i64 = 1_000_000;

/// The tuple `(v, k, λ, μ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SrgParams {
    pub v: i64,
    pub k: i64,
    pub lambda: i64,
    pub mu: i64,
}

/// Restricted eigenvalues `ρ > σ` together with `D = (λ-μ)² + 4(k-μ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eigenvalues {
    pub rho: QuadraticSurd,
    pub sigma: QuadraticSurd,
    pub discriminant: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TypeClass {
    /// Conference parameters with irrational eigenvalues.
    TypeIOnly,
    /// Integral eigenvalues, not conference parameters.
    TypeIIOnly,
    /// Conference parameters with integral eigenvalues, e.g. `(9,4,1,2)`.
    Both,
    /// Neither; such a tuple cannot pass the integrality level.
    Neither,
}

impl TypeClass {
    pub fn is_type_i(self) -> bool {
        matches!(self, TypeClass::TypeIOnly | TypeClass::Both)
    }

    pub fn is_type_ii(self) -> bool {
        matches!(self, TypeClass::TypeIIOnly | TypeClass::Both)
    }

    pub fn label(self) -> &'static str {
        match self {
            TypeClass::TypeIOnly => "I",
            TypeClass::TypeIIOnly => "II",
            TypeClass::Both => "I+II",
            TypeClass::Neither => "none",
        }
    }
}

impl fmt::Display for TypeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl SrgParams {
    /// Validates the ranges `0 < k < v ≤ MAX_ORDER`, `0 ≤ λ < k`, `0 ≤ μ ≤ k`.
    /// The parameter identity is not checked here; see [`is_feasible`].
    pub fn new(v: i64, k: i64, lambda: i64, mu: i64) -> Result<Self> {
        let p = Self { v, k, lambda, mu };
        if !(0 < k && k < v && v <= MAX_ORDER) {
            return Err(Error::InvalidParams(format!("{p}: need 0 < k < v <= {MAX_ORDER}")));
        }
        if !(0 <= lambda && lambda < k) {
            return Err(Error::InvalidParams(format!("{p}: need 0 <= lambda < k")));
        }
        if !(0 <= mu && mu <= k) {
            return Err(Error::InvalidParams(format!("{p}: need 0 <= mu <= k")));
        }
        Ok(p)
    }

    /// `μ(v-k-1) = k(k-λ-1)`
    pub fn satisfies_basic_identity(&self) -> bool {
        self.mu * (self.v - self.k - 1) == self.k * (self.k - self.lambda - 1)
    }

    /// Imprimitive tuples (`μ ∈ {0, k}`) are disjoint unions of cliques or
    /// their complements.
    pub fn is_primitive(&self) -> bool {
        self.mu != 0 && self.mu != self.k
    }

    /// `(λ-μ)² + 4(k-μ)`
    pub fn discriminant(&self) -> i64 {
        let e = self.lambda - self.mu;
        e * e + 4 * (self.k - self.mu)
    }

    /// `Some(n)` when the tuple is `(4n+1, 2n, n-1, n)`.
    pub fn conference_n(&self) -> Option<i64> {
        let n = self.mu;
        (n >= 1 && self.v == 4 * n + 1 && self.k == 2 * n && self.lambda == n - 1).then_some(n)
    }

    pub fn classify(&self) -> TypeClass {
        let conference = self.conference_n().is_some();
        let integral = exact_sqrt(&BigInt::from(self.discriminant())).is_some();
        match (conference, integral) {
            (true, false) => TypeClass::TypeIOnly,
            (false, true) => TypeClass::TypeIIOnly,
            (true, true) => TypeClass::Both,
            (false, false) => TypeClass::Neither,
        }
    }

    /// `ρ, σ = ((λ-μ) ± √D)/2`.
    pub fn eigenvalues(&self) -> Result<Eigenvalues> {
        if !self.satisfies_basic_identity() {
            return Err(Error::BasicIdentity { params: *self });
        }
        let disc = self.discriminant();
        let e = self.lambda - self.mu;
        Ok(Eigenvalues {
            rho: QuadraticSurd::new(e, 1, 2, disc),
            sigma: QuadraticSurd::new(e, -1, 2, disc),
            discriminant: disc,
        })
    }

    /// `(v, v-k-1, v-2-2k+μ, v-2k+λ)`.
    pub fn complement(&self) -> Result<SrgParams> {
        let (v, k, l, m) = (self.v, self.k, self.lambda, self.mu);
        SrgParams::new(v, v - k - 1, v - 2 - 2 * k + m, v - 2 * k + l).map_err(|e| {
            Error::Infeasible {
                params: *self,
                reason: format!("complement is not a valid tuple ({e})"),
            }
        })
    }

    /// Multiplicities `(f, g)` of `ρ` and `σ`.
    ///
    /// Conference tuples give `((v-1)/2, (v-1)/2)`. Otherwise the
    /// eigenvalues must be integral and both multiplicities positive
    /// integers.
    pub fn multiplicities(&self) -> Result<(i64, i64)> {
        if self.conference_n().is_some() {
            let half = (self.v - 1) / 2;
            return Ok((half, half));
        }
        let infeasible = |reason: &str| Error::Infeasible {
            params: *self,
            reason: reason.to_string(),
        };
        if !self.satisfies_basic_identity() {
            return Err(Error::BasicIdentity { params: *self });
        }
        let root = exact_sqrt(&BigInt::from(self.discriminant()))
            .ok_or_else(|| infeasible("irrational eigenvalues outside the conference family"))?;
        let gap: i64 = root.try_into().expect("discriminant root fits i64");
        let num = 2 * self.k + (self.v - 1) * (self.lambda - self.mu);
        if gap == 0 || num % gap != 0 {
            return Err(infeasible("non-integral multiplicities"));
        }
        let diff = num / gap;
        if (self.v - 1 - diff) % 2 != 0 {
            return Err(infeasible("non-integral multiplicities"));
        }
        let f = (self.v - 1 - diff) / 2;
        let g = (self.v - 1 + diff) / 2;
        if f <= 0 || g <= 0 {
            return Err(infeasible("non-positive multiplicity"));
        }
        Ok((f, g))
    }
}

impl fmt::Display for SrgParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.v, self.k, self.lambda, self.mu)
    }
}

impl FromStr for SrgParams {
    type Err = Error;

    /// Accepts `v,k,lambda,mu`, optionally parenthesised.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = body
            .split(',')
            .map(|t| t.trim().parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::InvalidParams(format!("{s:?}: {e}")))?;
        match parts[..] {
            [v, k, l, m] => SrgParams::new(v, k, l, m),
            _ => Err(Error::InvalidParams(format!("{s:?}: expected v,k,lambda,mu"))),
        }
    }
}

/// Cumulative feasibility levels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Level {
    Basic,
    Integrality,
    Krein,
    Absolute,
}

impl Level {
    pub fn name(self) -> &'static str {
        match self {
            Level::Basic => "basic",
            Level::Integrality => "integrality",
            Level::Krein => "krein",
            Level::Absolute => "absolute",
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Level {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "basic" => Ok(Level::Basic),
            "integrality" => Ok(Level::Integrality),
            "krein" => Ok(Level::Krein),
            "absolute" => Ok(Level::Absolute),
            _ => Err(Error::InvalidParams(format!(
                "unknown level {s:?} (basic|integrality|krein|absolute)"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Check {
    Pass,
    Fail,
    NotRun,
}

/// The two Krein conditions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum KreinCondition {
    /// `(ρ+1)(k+ρ+2ρσ) ≤ (k+ρ)(σ+1)²`
    First,
    /// `(σ+1)(k+σ+2ρσ) ≤ (k+σ)(ρ+1)²`
    Second,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FeasibilityReport {
    pub params: SrgParams,
    pub basic_identity: Check,
    pub multiplicity_integrality: Check,
    pub krein: Check,
    pub absolute_bound: Check,
    pub primitive: bool,
    pub multiplicities: Option<(i64, i64)>,
    pub krein_violations: Vec<KreinCondition>,
}

impl FeasibilityReport {
    pub fn passes(&self, level: Level) -> bool {
        let checks = [
            self.basic_identity,
            self.multiplicity_integrality,
            self.krein,
            self.absolute_bound,
        ];
        checks[..=level as usize].iter().all(|&c| c == Check::Pass)
    }

    /// Highest level passed, if any.
    pub fn level(&self) -> Option<Level> {
        [Level::Absolute, Level::Krein, Level::Integrality, Level::Basic]
            .into_iter()
            .find(|&l| self.passes(l))
    }
}

fn pass(ok: bool) -> Check {
    if ok {
        Check::Pass
    } else {
        Check::Fail
    }
}

fn krein_violations(p: &SrgParams, ev: &Eigenvalues) -> Vec<KreinCondition> {
    let one = QuadraticSurd::integer(1);
    let k = QuadraticSurd::integer(p.k);
    let (r, s) = (&ev.rho, &ev.sigma);
    let two_rs = QuadraticSurd::integer(2) * (r * s);
    let s1 = s + &one;
    let r1 = r + &one;
    let first = (&r1 * &(&(&k + r) + &two_rs)) - (&k + r) * (&s1 * &s1);
    let second = (&s1 * &(&(&k + s) + &two_rs)) - (&k + s) * (&r1 * &r1);
    let mut out = Vec::new();
    if first.signum() == Ordering::Greater {
        out.push(KreinCondition::First);
    }
    if second.signum() == Ordering::Greater {
        out.push(KreinCondition::Second);
    }
    out
}

/// Runs the feasibility battery up to `level`; later checks are `NotRun`.
pub fn is_feasible(p: &SrgParams, level: Level) -> FeasibilityReport {
    let mut report = FeasibilityReport {
        params: *p,
        basic_identity: Check::NotRun,
        multiplicity_integrality: Check::NotRun,
        krein: Check::NotRun,
        absolute_bound: Check::NotRun,
        primitive: p.is_primitive(),
        multiplicities: None,
        krein_violations: Vec::new(),
    };
    // non-complete, and the complement's parameters are in range as well
    report.basic_identity =
        pass(p.satisfies_basic_identity() && p.k <= p.v - 2 && p.complement().is_ok());
    if level < Level::Integrality || report.basic_identity == Check::Fail {
        return report;
    }
    report.multiplicities = p.multiplicities().ok();
    report.multiplicity_integrality = pass(report.multiplicities.is_some());
    if level < Level::Krein || report.multiplicity_integrality == Check::Fail {
        return report;
    }
    let ev = p.eigenvalues().expect("basic identity checked");
    report.krein_violations = krein_violations(p, &ev);
    report.krein = pass(report.krein_violations.is_empty());
    if level < Level::Absolute || report.krein == Check::Fail {
        return report;
    }
    let (f, g) = report.multiplicities.expect("integrality checked");
    report.absolute_bound = pass(2 * p.v <= f * (f + 3) && 2 * p.v <= g * (g + 3));
    report
}

/// All tuples with `v ≤ vmax` passing `level`, sorted by `(v,k,λ,μ)`.
///
/// `μ` is solved from the basic identity for each `(v, k, λ)`.
pub fn enumerate_feasible(vmax: i64, level: Level, primitive_only: bool) -> Vec<SrgParams> {
    (3..=vmax.min(MAX_ORDER))
        .into_par_iter()
        .flat_map_iter(|v| {
            (1..v - 1).flat_map(move |k| {
                (0..k).filter_map(move |lambda| {
                    let num = k * (k - lambda - 1);
                    let den = v - k - 1;
                    if num % den != 0 {
                        return None;
                    }
                    let mu = num / den;
                    let p = SrgParams::new(v, k, lambda, mu).ok()?;
                    if primitive_only && !p.is_primitive() {
                        return None;
                    }
                    is_feasible(&p, level).passes(level).then_some(p)
                })
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: i64, k: i64, l: i64, m: i64) -> SrgParams {
        SrgParams::new(v, k, l, m).unwrap()
    }

    #[test]
    fn eigenvalue_examples() {
        let ev = p(10, 3, 0, 1).eigenvalues().unwrap();
        assert_eq!(ev.rho, QuadraticSurd::integer(1));
        assert_eq!(ev.sigma, QuadraticSurd::integer(-2));
        let ev = p(13, 6, 2, 3).eigenvalues().unwrap();
        assert_eq!(ev.rho, QuadraticSurd::new(-1, 1, 2, 13));
        assert_eq!(ev.sigma, QuadraticSurd::new(-1, -1, 2, 13));
        let ev = p(16, 6, 2, 2).eigenvalues().unwrap();
        assert_eq!((ev.rho, ev.sigma), (QuadraticSurd::integer(2), QuadraticSurd::integer(-2)));
        assert!(p(10, 4, 1, 2).eigenvalues().is_err());
    }

    #[test]
    fn classification() {
        assert_eq!(p(13, 6, 2, 3).classify(), TypeClass::TypeIOnly);
        assert_eq!(p(16, 6, 2, 2).classify(), TypeClass::TypeIIOnly);
        assert_eq!(p(25, 12, 5, 6).classify(), TypeClass::Both);
    }

    #[test]
    fn complement_examples() {
        assert_eq!(p(10, 3, 0, 1).complement().unwrap(), p(10, 6, 3, 4));
        assert_eq!(p(13, 6, 2, 3).complement().unwrap(), p(13, 6, 2, 3));
        assert_eq!(p(16, 5, 0, 2).complement().unwrap(), p(16, 10, 6, 6));
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(p(10, 3, 0, 1).multiplicities().unwrap(), (5, 4));
        assert_eq!(p(21, 10, 3, 6).multiplicities().unwrap(), (14, 6));
        assert_eq!(p(13, 6, 2, 3).multiplicities().unwrap(), (6, 6));
    }

    #[test]
    fn feasibility_examples() {
        let r = is_feasible(&p(10, 4, 1, 2), Level::Absolute);
        assert_eq!(r.basic_identity, Check::Fail);
        assert_eq!(r.level(), None);
        // complement would be (273,16,-1,1)
        let r = is_feasible(&p(273, 256, 240, 240), Level::Absolute);
        assert_eq!(r.basic_identity, Check::Fail);
        let r = is_feasible(&p(10, 3, 0, 1), Level::Absolute);
        assert!(r.passes(Level::Absolute));
        let r = is_feasible(&p(28, 9, 0, 4), Level::Absolute);
        assert!(r.passes(Level::Integrality));
        assert_eq!(r.krein, Check::Fail);
        assert_eq!(r.krein_violations, vec![KreinCondition::Second]);
        assert_eq!(r.absolute_bound, Check::NotRun);
    }

    #[test]
    fn complete_graph_rejected() {
        let r = is_feasible(&p(6, 5, 4, 2), Level::Basic);
        assert_eq!(r.basic_identity, Check::Fail);
    }

    #[test]
    fn parse_tuple() {
        assert_eq!("10,3,0,1".parse::<SrgParams>().unwrap(), p(10, 3, 0, 1));
        assert_eq!("(16, 6, 2, 2)".parse::<SrgParams>().unwrap(), p(16, 6, 2, 2));
        assert!("10,3,0".parse::<SrgParams>().is_err());
        assert!("10,12,0,1".parse::<SrgParams>().is_err());
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(
            enumerate_feasible(10, Level::Krein, true),
            vec![p(5, 2, 0, 1), p(9, 4, 1, 2), p(10, 3, 0, 1), p(10, 6, 3, 4)]
        );
        assert_eq!(enumerate_feasible(5, Level::Krein, true), vec![p(5, 2, 0, 1)]);
        for level in [Level::Basic, Level::Integrality, Level::Krein, Level::Absolute] {
            assert!(enumerate_feasible(4, level, true).is_empty());
        }
        assert_eq!(
            enumerate_feasible(4, Level::Basic, false),
            vec![p(4, 1, 0, 0), p(4, 2, 0, 2)]
        );
    }
}
