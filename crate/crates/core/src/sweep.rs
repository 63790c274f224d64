//! Parameter sweeps: one comparison row per `(tuple, d)`, CSV ingestion and
//! output, and the per-`d` aggregate tables.

use std::collections::{BTreeMap, HashSet};
use std::io;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{bound_set, divisibility_refine, Direction};
use crate::error::{Error, Result};
use crate::srg::{enumerate_feasible, is_feasible, Level, SrgParams, TypeClass};

/// Environment variable capping the number of worker threads.
pub const WORKERS_ENV: &str = "WORKERS";

/// All bounds and strictness flags for one `(tuple, d)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComparisonRow {
    pub params: SrgParams,
    pub d: i64,
    pub type_class: TypeClass,
    pub haem_upper_exact: String,
    pub haem_upper_decimal: String,
    pub haem_upper_clamped: i64,
    pub haem_lower_exact: String,
    pub haem_lower_decimal: String,
    pub haem_lower_clamped: i64,
    pub rab_upper: i64,
    pub rab_lower: i64,
    pub div_upper: i64,
    pub div_lower: i64,
    pub sd_empty: bool,
    pub strict_upper: bool,
    pub strict_lower: bool,
}

impl ComparisonRow {
    /// `haem_upper_clamped - rab_upper`, or `None` when `S_d` is empty.
    pub fn upper_gap(&self) -> Option<i64> {
        (!self.sd_empty).then_some(self.haem_upper_clamped - self.rab_upper)
    }

    /// `rab_lower - haem_lower_clamped`, or `None` when `S_d` is empty.
    pub fn lower_gap(&self) -> Option<i64> {
        (!self.sd_empty).then_some(self.rab_lower - self.haem_lower_clamped)
    }

    fn check_spectral_sandwich(&self) -> Result<()> {
        if self.rab_upper > self.haem_upper_clamped || self.rab_lower < self.haem_lower_clamped {
            return Err(Error::BoundViolation {
                params: self.params,
                d: self.d,
                detail: format!(
                    "rab = ({}, {}) outside spectral clamps ({}, {})",
                    self.rab_lower, self.rab_upper, self.haem_lower_clamped, self.haem_upper_clamped
                ),
            });
        }
        Ok(())
    }
}

pub fn compare_record(p: &SrgParams, d: i64) -> Result<ComparisonRow> {
    let b = bound_set(p, d)?;
    let (div_upper, div_lower) = if b.sd_empty {
        (b.rab_upper, b.rab_lower)
    } else {
        (
            divisibility_refine(b.rab_upper, d, Direction::Upper),
            divisibility_refine(b.rab_lower, d, Direction::Lower),
        )
    };
    Ok(ComparisonRow {
        params: *p,
        d,
        type_class: p.classify(),
        haem_upper_exact: b.haem_upper.to_string(),
        haem_upper_decimal: b.haem_upper.to_decimal(6),
        haem_upper_clamped: b.haem_upper_clamped,
        haem_lower_exact: b.haem_lower.to_string(),
        haem_lower_decimal: b.haem_lower.to_decimal(6),
        haem_lower_clamped: b.haem_lower_clamped,
        rab_upper: b.rab_upper,
        rab_lower: b.rab_lower,
        div_upper,
        div_lower,
        sd_empty: b.sd_empty,
        strict_upper: b.rab_upper < b.haem_upper_clamped,
        strict_lower: b.rab_lower > b.haem_lower_clamped,
    })
}

/// Worker count from `WORKERS`, or `None` when unset.
pub fn workers_from_env() -> Result<Option<usize>> {
    match std::env::var(WORKERS_ENV) {
        Err(_) => Ok(None),
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(Error::InvalidParams(format!(
                "{WORKERS_ENV} must be a positive integer, got {s:?}"
            ))),
        },
    }
}

/// Runs `f` on a pool sized by `WORKERS`, or on the global pool.
pub fn with_workers<T: Send>(f: impl FnOnce() -> T + Send) -> Result<T> {
    match workers_from_env()? {
        None => Ok(f()),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| Error::InvalidParams(format!("cannot start {n} workers: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

/// Rows for every tuple and every `0 ≤ d ≤ k` (or only `d = single`, for
/// tuples with `single ≤ k`), sorted by `(v, k, λ, μ, d)`.
///
/// Aborts with [`Error::BoundViolation`] if a row falls outside the
/// spectral bounds.
pub fn sweep_tuples(tuples: &[SrgParams], single: Option<i64>) -> Result<Vec<ComparisonRow>> {
    let mut tuples = tuples.to_vec();
    tuples.sort();
    tuples.dedup();
    let jobs: Vec<(SrgParams, i64)> = tuples
        .iter()
        .flat_map(|p| {
            let ds: Vec<i64> = match single {
                Some(d) if (0..=p.k).contains(&d) => vec![d],
                Some(_) => Vec::new(),
                None => (0..=p.k).collect(),
            };
            ds.into_iter().map(move |d| (*p, d))
        })
        .collect();
    with_workers(|| {
        jobs.par_iter()
            .map(|(p, d)| {
                let row = compare_record(p, *d)?;
                row.check_spectral_sandwich()?;
                Ok(row)
            })
            .collect::<Result<Vec<_>>>()
    })?
}

/// Sweep over every primitive tuple with `v ≤ vmax` passing `level`.
pub fn sweep(vmax: i64, level: Level, single: Option<i64>) -> Result<Vec<ComparisonRow>> {
    let tuples = with_workers(|| enumerate_feasible(vmax, level, true))?;
    sweep_tuples(&tuples, single)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RejectedRow {
    pub line: u64,
    pub params: SrgParams,
    pub reason: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct IngestReport {
    /// Distinct accepted tuples in file order.
    pub tuples: Vec<SrgParams>,
    pub rejected: Vec<RejectedRow>,
    /// Rows repeating an earlier accepted tuple.
    pub duplicates: usize,
}

/// Reads tuples from a CSV file with (at least) the columns `v,k,lambda,mu`.
///
/// Rows that fail the basic level are reported with their line numbers;
/// unparsable rows abort with [`Error::MalformedRow`].
pub fn ingest_tuples(path: impl AsRef<Path>) -> Result<IngestReport> {
    let path = path.as_ref();
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_path(path)?;
    let malformed = |line: u64, reason: String| Error::MalformedRow {
        path: PathBuf::from(path),
        line,
        reason,
    };
    let headers = reader.headers()?.clone();
    let mut columns = [0usize; 4];
    for (slot, name) in columns.iter_mut().zip(["v", "k", "lambda", "mu"]) {
        *slot = headers
            .iter()
            .position(|h| h.eq_ignore_ascii_case(name))
            .ok_or_else(|| malformed(1, format!("missing column {name:?}")))?;
    }
    let mut report = IngestReport::default();
    let mut seen = HashSet::new();
    for record in reader.records() {
        let record = record?;
        let line = record.position().map_or(0, |p| p.line());
        let mut values = [0i64; 4];
        for (value, &col) in values.iter_mut().zip(&columns) {
            let field = record.get(col).unwrap_or("");
            *value = field
                .parse()
                .map_err(|_| malformed(line, format!("{field:?} is not an integer")))?;
        }
        let [v, k, lambda, mu] = values;
        let raw = SrgParams { v, k, lambda, mu };
        let p = match SrgParams::new(v, k, lambda, mu) {
            Ok(p) => p,
            Err(e) => {
                report.rejected.push(RejectedRow {
                    line,
                    params: raw,
                    reason: e.to_string(),
                });
                continue;
            }
        };
        if !is_feasible(&p, Level::Basic).passes(Level::Basic) {
            report.rejected.push(RejectedRow {
                line,
                params: p,
                reason: "fails the basic identity or is complete".into(),
            });
            continue;
        }
        if seen.insert(p) {
            report.tuples.push(p);
        } else {
            report.duplicates += 1;
        }
    }
    Ok(report)
}

/// Column order of the comparison CSV.
pub const CSV_COLUMNS: [&str; 17] = [
    "v",
    "k",
    "lambda",
    "mu",
    "d",
    "type",
    "haem_up_exact",
    "haem_up",
    "haem_lo_exact",
    "haem_lo",
    "rab_up",
    "rab_lo",
    "div_up",
    "div_lo",
    "sd_empty",
    "strict_up",
    "strict_lo",
];

fn csv_record(row: &ComparisonRow) -> [String; 17] {
    let p = row.params;
    [
        p.v.to_string(),
        p.k.to_string(),
        p.lambda.to_string(),
        p.mu.to_string(),
        row.d.to_string(),
        row.type_class.label().to_string(),
        row.haem_upper_exact.clone(),
        row.haem_upper_clamped.to_string(),
        row.haem_lower_exact.clone(),
        row.haem_lower_clamped.to_string(),
        row.rab_upper.to_string(),
        row.rab_lower.to_string(),
        row.div_upper.to_string(),
        row.div_lower.to_string(),
        row.sd_empty.to_string(),
        row.strict_upper.to_string(),
        row.strict_lower.to_string(),
    ]
}

pub fn write_rows_csv<W: io::Write>(out: W, rows: &[ComparisonRow]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_COLUMNS)?;
    for row in rows {
        w.write_record(csv_record(row))?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_tuples_csv<W: io::Write>(out: W, tuples: &[SrgParams]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["v", "k", "lambda", "mu"])?;
    for p in tuples {
        w.write_record([p.v, p.k, p.lambda, p.mu].map(|x| x.to_string()))?;
    }
    w.flush()?;
    Ok(())
}

/// One line of an aggregate table: the number of rows at this `d` whose
/// gap is at least 2, and the largest such gap.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AggregateRow {
    pub d: i64,
    pub count: usize,
    pub max_gap: i64,
}

/// Rows only for the `d` values with a non-zero count, in increasing `d`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AggregateTable {
    pub rows: Vec<AggregateRow>,
}

impl AggregateTable {
    fn from_gaps(gaps: impl Iterator<Item = (i64, i64)>) -> Self {
        let mut by_d: BTreeMap<i64, AggregateRow> = BTreeMap::new();
        for (d, gap) in gaps.filter(|&(_, gap)| gap >= 2) {
            let row = by_d.entry(d).or_insert(AggregateRow {
                d,
                count: 0,
                max_gap: 0,
            });
            row.count += 1;
            row.max_gap = row.max_gap.max(gap);
        }
        Self {
            rows: by_d.into_values().collect(),
        }
    }

    pub fn get(&self, d: i64) -> Option<&AggregateRow> {
        self.rows.iter().find(|r| r.d == d)
    }

    pub fn total(&self) -> usize {
        self.rows.iter().map(|r| r.count).sum()
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub rows: usize,
    pub strict_upper: usize,
    pub strict_lower: usize,
    pub sd_empty: usize,
    pub wide_upper: usize,
    pub wide_lower: usize,
}

impl Tally {
    fn add(&mut self, row: &ComparisonRow) {
        self.rows += 1;
        self.strict_upper += row.strict_upper as usize;
        self.strict_lower += row.strict_lower as usize;
        self.sd_empty += row.sd_empty as usize;
        self.wide_upper += row.upper_gap().is_some_and(|g| g >= 2) as usize;
        self.wide_lower += row.lower_gap().is_some_and(|g| g >= 2) as usize;
    }
}

/// Counts over all rows (`d ≤ k`) and over rows with `d < k`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub tuples: usize,
    pub all: Tally,
    pub below_k: Tally,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Aggregates {
    pub upper: AggregateTable,
    pub lower: AggregateTable,
    pub summary: Summary,
}

/// Per-`d` tables of rows whose improvement over the clamped spectral
/// bound is at least 2, plus global tallies. Rows with empty `S_d` carry no
/// gap and only enter the `sd_empty` tally.
pub fn aggregate_tables(rows: &[ComparisonRow]) -> Aggregates {
    let mut summary = Summary {
        tuples: rows.iter().map(|r| r.params).collect::<HashSet<_>>().len(),
        ..Summary::default()
    };
    for row in rows {
        summary.all.add(row);
        if row.d < row.params.k {
            summary.below_k.add(row);
        }
    }
    Aggregates {
        upper: AggregateTable::from_gaps(rows.iter().filter_map(|r| Some((r.d, r.upper_gap()?)))),
        lower: AggregateTable::from_gaps(rows.iter().filter_map(|r| Some((r.d, r.lower_gap()?)))),
        summary,
    }
}
