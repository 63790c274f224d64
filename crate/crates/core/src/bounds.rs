//! Bounds on the order of a `d`-regular induced subgraph: Haemers' spectral
//! bounds, the regular adjacency bounds, and the clique adjacency bound.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::bip::{cap_eval_int, rap_nonneg_all_integers};
use crate::error::{Error, Result};
use crate::exact::QuadraticSurd;
use crate::srg::SrgParams;

fn check_degree(p: &SrgParams, d: i64) -> Result<()> {
    if (0..=p.k).contains(&d) {
        Ok(())
    } else {
        Err(Error::DegreeOutOfRange { d, k: p.k })
    }
}

fn surd_to_i64(n: BigInt) -> i64 {
    n.to_i64().expect("bound outside i64")
}

/// `v(d-σ)/(k-σ)`
pub fn haemers_upper(p: &SrgParams, d: i64) -> Result<QuadraticSurd> {
    check_degree(p, d)?;
    let ev = p.eigenvalues()?;
    let v = QuadraticSurd::integer(p.v);
    let d = QuadraticSurd::integer(d);
    let k = QuadraticSurd::integer(p.k);
    Ok(&v * &(&d - &ev.sigma) / (&k - &ev.sigma))
}

/// `v(d-ρ)/(k-ρ)`; may be negative.
pub fn haemers_lower(p: &SrgParams, d: i64) -> Result<QuadraticSurd> {
    check_degree(p, d)?;
    let ev = p.eigenvalues()?;
    let k = QuadraticSurd::integer(p.k);
    let gap = &k - &ev.rho;
    if gap.is_zero() {
        return Err(Error::Imprimitive { params: *p });
    }
    let v = QuadraticSurd::integer(p.v);
    let d = QuadraticSurd::integer(d);
    Ok(&v * &(&d - &ev.rho) / gap)
}

/// `(min(⌊upper⌋, v), max(⌈lower⌉, d+1))`
pub fn haemers_clamped(p: &SrgParams, d: i64) -> Result<(i64, i64)> {
    let upper = surd_to_i64(haemers_upper(p, d)?.floor()).min(p.v);
    let lower = surd_to_i64(haemers_lower(p, d)?.ceil()).max(d + 1);
    Ok((upper, lower))
}

/// Largest `y ∈ {d+1..v}` not excluded by the regular adjacency polynomial,
/// or 0 when every such `y` is excluded.
pub fn rab_upper(p: &SrgParams, d: i64) -> Result<i64> {
    check_degree(p, d)?;
    Ok((d + 1..=p.v)
        .rev()
        .find(|&y| rap_nonneg_all_integers(p, y, d))
        .unwrap_or(0))
}

/// Smallest `y ∈ {d+1..v}` not excluded, or `v+1` when every `y` is excluded.
pub fn rab_lower(p: &SrgParams, d: i64) -> Result<i64> {
    check_degree(p, d)?;
    Ok((d + 1..=p.v)
        .find(|&y| rap_nonneg_all_integers(p, y, d))
        .unwrap_or(p.v + 1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Upper,
    Lower,
}

/// Moves `bound` inward to the nearest `y` with `yd` even, since a
/// `d`-regular graph on `y` vertices has `yd/2` edges.
pub fn divisibility_refine(bound: i64, d: i64, direction: Direction) -> i64 {
    if bound * d % 2 == 0 {
        return bound;
    }
    match direction {
        Direction::Upper => bound - 1,
        Direction::Lower => bound + 1,
    }
}

/// All bounds for one `(p, d)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundSet {
    #[serde(serialize_with = "serialize_surd")]
    pub haem_upper: QuadraticSurd,
    #[serde(serialize_with = "serialize_surd")]
    pub haem_lower: QuadraticSurd,
    pub haem_upper_clamped: i64,
    pub haem_lower_clamped: i64,
    pub rab_upper: i64,
    pub rab_lower: i64,
    pub sd_empty: bool,
}

fn serialize_surd<S: serde::Serializer>(s: &QuadraticSurd, ser: S) -> Result<S::Ok, S::Error> {
    ser.collect_str(s)
}

pub fn bound_set(p: &SrgParams, d: i64) -> Result<BoundSet> {
    let haem_upper = haemers_upper(p, d)?;
    let haem_lower = haemers_lower(p, d)?;
    let (haem_upper_clamped, haem_lower_clamped) = haemers_clamped(p, d)?;
    let rab_upper = rab_upper(p, d)?;
    let rab_lower = rab_lower(p, d)?;
    Ok(BoundSet {
        haem_upper,
        haem_lower,
        haem_upper_clamped,
        haem_lower_clamped,
        rab_upper,
        rab_lower,
        sd_empty: rab_upper == 0,
    })
}

fn check_edge_regular(v: i64, k: i64, lambda: i64) -> Result<()> {
    if v > k && k >= 1 && lambda >= 0 && lambda < k {
        Ok(())
    } else {
        Err(Error::InvalidParams(format!(
            "({v},{k},{lambda}) is not an edge-regular triple"
        )))
    }
}

/// The clique adjacency bound: the least `y ≥ 2` such that `C(m, y+1) < 0`
/// for some integer `m`.
pub fn cab(v: i64, k: i64, lambda: i64) -> Result<i64> {
    check_edge_regular(v, k, lambda)?;
    let mut y = 2;
    loop {
        let big_y = y + 1;
        if big_y > v {
            return Ok(y);
        }
        if big_y == v {
            // C(x, v) is affine in x with slope -2v(k-v+1).
            let slope = -2 * v * (k - v + 1);
            if slope != 0 || cap_eval_int(v, k, lambda, 0, v) < 0 {
                return Ok(y);
            }
        } else {
            let den = v - big_y;
            let num = big_y * (k - big_y + 1) - den;
            let centre = -num_integer::Integer::div_floor(&-num, &den);
            if (centre - 1..=centre + 1).any(|m| cap_eval_int(v, k, lambda, m, big_y) < 0) {
                return Ok(y);
            }
        }
        y += 1;
    }
}

/// `s + 1` for the largest root `s` of
/// `(v-2k+λ)z² + (k²-k+λ-vλ)z - k(v-k-1)`.
pub fn cab_spectral_root(v: i64, k: i64, lambda: i64) -> Result<QuadraticSurd> {
    check_edge_regular(v, k, lambda)?;
    let a = v - 2 * k + lambda;
    let b = k * k - k + lambda - v * lambda;
    let c = -k * (v - k - 1);
    let root = if a == 0 {
        if b == 0 {
            return Err(Error::Precondition(format!(
                "spectral quadratic for ({v},{k},{lambda}) is constant"
            )));
        }
        QuadraticSurd::new(-c, 0, b, 0)
    } else {
        let disc = b as i128 * b as i128 - 4 * a as i128 * c as i128;
        if disc < 0 {
            return Err(Error::Precondition(format!(
                "spectral quadratic for ({v},{k},{lambda}) has no real root"
            )));
        }
        if a > 0 {
            QuadraticSurd::new(-b, 1, 2 * a, disc)
        } else {
            QuadraticSurd::new(b, 1, -2 * a, disc)
        }
    };
    Ok(root + QuadraticSurd::integer(1))
}

/// [`cab_spectral_root`] for a parameter tuple; a disjoint union of cliques
/// (`μ = 0`) gives `k+1`.
pub fn cab_spectral_bound(p: &SrgParams) -> Result<QuadraticSurd> {
    if p.mu == 0 {
        return Ok(QuadraticSurd::integer(p.k + 1));
    }
    cab_spectral_root(p.v, p.k, p.lambda)
}

/// `⌊1 - k/σ⌋`
pub fn delsarte_bound(p: &SrgParams) -> Result<i64> {
    let ev = p.eigenvalues()?;
    let k = QuadraticSurd::integer(p.k);
    Ok(surd_to_i64((QuadraticSurd::integer(1) - &k / &ev.sigma).floor()))
}
