//! Exhaustive ground truth on concrete graphs: extremal orders of
//! `d`-regular induced subgraphs and the clique number.
//!
//! The searches use only degree counting, never the polynomial bounds they
//! are used to check.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphs::Graph;

/// Default largest order accepted by [`extremal_regular_induced`].
pub const DEFAULT_ORDER_LIMIT: usize = 22;

/// Largest order the subset search can represent.
pub const HARD_ORDER_LIMIT: usize = 64;

/// Largest order accepted by [`max_clique`].
pub const CLIQUE_ORDER_LIMIT: usize = 512;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ExtremalResult {
    pub min_order: Option<usize>,
    pub max_order: Option<usize>,
    pub witness_min: Vec<usize>,
    pub witness_max: Vec<usize>,
}

/// Whether the subgraph induced on `subset` is non-empty and `d`-regular.
pub fn is_d_regular_induced(g: &Graph, subset: &[usize], d: usize) -> bool {
    !subset.is_empty()
        && subset
            .iter()
            .all(|&u| subset.iter().filter(|&&w| g.adjacent(u, w)).count() == d)
}

struct Search {
    n: usize,
    d: u32,
    adj: Vec<u64>,
    degree: Vec<u32>,
    best_min: Option<u64>,
    best_max: Option<u64>,
}

impl Search {
    fn size(set: u64) -> u32 {
        set.count_ones()
    }

    fn run(&mut self, index: usize, set: u64) {
        let size = Self::size(set);
        let remaining = (self.n - index) as u32;
        let min_done = self.best_min.is_some_and(|m| size >= Self::size(m));
        let max_done = self.best_max.is_some_and(|m| size + remaining <= Self::size(m));
        if min_done && max_done {
            return;
        }
        let rest: u64 = if index >= 64 { 0 } else { !0u64 << index };
        let mut members = set;
        while members != 0 {
            let u = members.trailing_zeros() as usize;
            members &= members - 1;
            if self.degree[u] + (self.adj[u] & rest).count_ones() < self.d {
                return;
            }
        }
        if index == self.n {
            if set != 0 {
                self.record(set);
            }
            return;
        }
        let v = index;
        let into = self.adj[v] & set;
        let fits = into.count_ones() <= self.d && {
            let mut ns = into;
            let mut ok = true;
            while ns != 0 {
                let u = ns.trailing_zeros() as usize;
                ns &= ns - 1;
                ok &= self.degree[u] < self.d;
            }
            ok
        };
        if fits {
            self.degree[v] = into.count_ones();
            let mut ns = into;
            while ns != 0 {
                let u = ns.trailing_zeros() as usize;
                ns &= ns - 1;
                self.degree[u] += 1;
            }
            self.run(index + 1, set | 1 << v);
            let mut ns = into;
            while ns != 0 {
                let u = ns.trailing_zeros() as usize;
                ns &= ns - 1;
                self.degree[u] -= 1;
            }
            self.degree[v] = 0;
        }
        self.run(index + 1, set);
    }

    fn record(&mut self, set: u64) {
        let size = Self::size(set);
        if self.best_min.is_none_or(|m| size < Self::size(m)) {
            self.best_min = Some(set);
        }
        if self.best_max.is_none_or(|m| size > Self::size(m)) {
            self.best_max = Some(set);
        }
    }
}

fn members(set: u64) -> Vec<usize> {
    (0..64).filter(|i| set >> i & 1 == 1).collect()
}

pub fn extremal_regular_induced(g: &Graph, d: usize) -> Result<ExtremalResult> {
    extremal_regular_induced_with_limit(g, d, DEFAULT_ORDER_LIMIT)
}

/// Exact smallest and largest orders of non-empty `d`-regular induced
/// subgraphs, by include-first backtracking over vertices in index order.
///
/// Refuses graphs above `limit` vertices (capped at [`HARD_ORDER_LIMIT`]).
pub fn extremal_regular_induced_with_limit(
    g: &Graph,
    d: usize,
    limit: usize,
) -> Result<ExtremalResult> {
    let n = g.order();
    let limit = limit.min(HARD_ORDER_LIMIT);
    if n > limit {
        return Err(Error::OrderLimit { order: n, limit });
    }
    if d >= n.max(1) {
        return Err(Error::Precondition(format!(
            "degree {d} must be below the order {n}"
        )));
    }
    let mut search = Search {
        n,
        d: d as u32,
        adj: (0..n).map(|i| g.row(i)[0]).collect(),
        degree: vec![0; n],
        best_min: None,
        best_max: None,
    };
    search.run(0, 0);
    let result = ExtremalResult {
        min_order: search.best_min.map(|s| s.count_ones() as usize),
        max_order: search.best_max.map(|s| s.count_ones() as usize),
        witness_min: search.best_min.map(members).unwrap_or_default(),
        witness_max: search.best_max.map(members).unwrap_or_default(),
    };
    debug_assert!(result.witness_min.is_empty() || is_d_regular_induced(g, &result.witness_min, d));
    debug_assert!(result.witness_max.is_empty() || is_d_regular_induced(g, &result.witness_max, d));
    Ok(result)
}

struct CliqueSearch<'a> {
    g: &'a Graph,
    best: usize,
}

impl CliqueSearch<'_> {
    fn expand(&mut self, size: usize, candidates: Vec<u64>) {
        let count: usize = candidates.iter().map(|w| w.count_ones() as usize).sum();
        if count == 0 {
            self.best = self.best.max(size);
            return;
        }
        if size + count <= self.best {
            return;
        }
        let mut candidates = candidates;
        while let Some(v) = first_bit(&candidates) {
            let left: usize = candidates.iter().map(|w| w.count_ones() as usize).sum();
            if size + left <= self.best {
                return;
            }
            candidates[v / 64] &= !(1 << (v % 64));
            let next: Vec<u64> = candidates
                .iter()
                .zip(self.g.row(v))
                .map(|(c, r)| c & r)
                .collect();
            self.expand(size + 1, next);
        }
    }
}

fn first_bit(words: &[u64]) -> Option<usize> {
    words
        .iter()
        .enumerate()
        .find(|(_, w)| **w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

/// Clique number by branch and bound.
pub fn max_clique(g: &Graph) -> Result<usize> {
    let n = g.order();
    if n > CLIQUE_ORDER_LIMIT {
        return Err(Error::OrderLimit {
            order: n,
            limit: CLIQUE_ORDER_LIMIT,
        });
    }
    let words = n.div_ceil(64).max(1);
    let mut all = vec![0u64; words];
    for v in 0..n {
        all[v / 64] |= 1 << (v % 64);
    }
    let mut search = CliqueSearch { g, best: 0 };
    if n > 0 {
        search.expand(0, all);
    }
    Ok(search.best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{builtin, complete_graph, cycle_graph, paley_graph, square_lattice};

    /// Plain enumeration of every subset, for cross-checking the search.
    fn brute(g: &Graph, d: usize) -> (Option<usize>, Option<usize>) {
        let n = g.order();
        let mut lo = None;
        let mut hi = None;
        for mask in 1u64..(1 << n) {
            let set = members(mask);
            if is_d_regular_induced(g, &set, d) {
                let s = set.len();
                lo = Some(lo.map_or(s, |m: usize| m.min(s)));
                hi = Some(hi.map_or(s, |m: usize| m.max(s)));
            }
        }
        (lo, hi)
    }

    #[test]
    fn lattice_attains_both_spectral_bounds() {
        let r = extremal_regular_induced(&square_lattice(4).unwrap(), 4).unwrap();
        assert_eq!((r.min_order, r.max_order), (Some(8), Some(12)));
    }

    #[test]
    fn petersen_examples() {
        let g = builtin("petersen").unwrap();
        let r = extremal_regular_induced(&g, 0).unwrap();
        assert_eq!((r.min_order, r.max_order), (Some(1), Some(4)));
        let r = extremal_regular_induced(&g, 3).unwrap();
        assert_eq!((r.min_order, r.max_order), (Some(10), Some(10)));
        let r = extremal_regular_induced(&g, 2).unwrap();
        assert_eq!((r.min_order, r.max_order), (Some(5), Some(6)));
        assert!(is_d_regular_induced(&g, &r.witness_min, 2));
        assert!(is_d_regular_induced(&g, &r.witness_max, 2));
    }

    #[test]
    fn agrees_with_subset_enumeration() {
        let graphs = [
            builtin("petersen").unwrap(),
            paley_graph(13).unwrap(),
            square_lattice(3).unwrap(),
            cycle_graph(7),
        ];
        for g in &graphs {
            for d in 0..g.order().min(6) {
                let r = extremal_regular_induced(g, d).unwrap();
                assert_eq!((r.min_order, r.max_order), brute(g, d), "d = {d}");
            }
        }
    }

    #[test]
    fn no_regular_subgraph() {
        let r = extremal_regular_induced(&cycle_graph(5), 3).unwrap();
        assert_eq!(r, ExtremalResult::default());
        assert!(extremal_regular_induced(&cycle_graph(5), 5).is_err());
        let r = extremal_regular_induced(&cycle_graph(6), 2).unwrap();
        assert_eq!((r.min_order, r.max_order), (Some(6), Some(6)));
        let r = extremal_regular_induced(&builtin("petersen").unwrap(), 1).unwrap();
        assert_eq!(r.min_order, Some(2));
    }

    #[test]
    fn order_limit_enforced() {
        let g = paley_graph(29).unwrap();
        assert!(matches!(
            extremal_regular_induced(&g, 0),
            Err(Error::OrderLimit { order: 29, limit: 22 })
        ));
        assert!(extremal_regular_induced_with_limit(&g, 14, 29).is_ok());
        assert!(extremal_regular_induced_with_limit(&paley_graph(101).unwrap(), 0, 200).is_err());
    }

    #[test]
    fn clique_examples() {
        assert_eq!(max_clique(&builtin("petersen").unwrap()).unwrap(), 2);
        assert_eq!(max_clique(&square_lattice(4).unwrap()).unwrap(), 4);
        assert_eq!(max_clique(&complete_graph(5)).unwrap(), 5);
        assert_eq!(max_clique(&paley_graph(13).unwrap()).unwrap(), 3);
        assert_eq!(max_clique(&paley_graph(101).unwrap()).unwrap(), 5);
        assert_eq!(max_clique(&Graph::empty(0)).unwrap(), 0);
        assert_eq!(max_clique(&Graph::empty(3)).unwrap(), 1);
    }
}
