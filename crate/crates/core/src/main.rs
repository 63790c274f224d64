use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use srgbound::bounds::{cab, cab_spectral_root, delsarte_bound};
use srgbound::graphs::{builtin, paley_graph, read_graph6_file, square_lattice, srg_parameters_of, Graph};
use srgbound::identities::run_identity_suite;
use srgbound::oracle::{extremal_regular_induced_with_limit, HARD_ORDER_LIMIT};
use srgbound::srg::{enumerate_feasible, is_feasible};
use srgbound::strictness::{witness_search, Family};
use srgbound::sweep::{
    aggregate_tables, compare_record, ingest_tuples, sweep, sweep_tuples, with_workers,
    write_rows_csv, write_tuples_csv, Aggregates, AggregateTable,
};
use srgbound::{Error, Level, Result, SrgParams};

#[derive(Parser)]
#[command(name = "srgbound", version, about = "Bounds on regular induced subgraphs of strongly regular graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List parameter tuples passing a feasibility level.
    Feasible {
        #[arg(long)]
        vmax: i64,
        #[arg(long, default_value = "krein")]
        level: Level,
        /// Include imprimitive tuples.
        #[arg(long)]
        all: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// All bounds for one tuple and degree.
    Bounds {
        #[arg(long)]
        params: SrgParams,
        #[arg(long)]
        d: i64,
        #[arg(long)]
        json: bool,
    },
    /// Comparison rows for every feasible primitive tuple.
    Sweep {
        #[arg(long)]
        vmax: Option<i64>,
        #[arg(long, default_value = "krein")]
        level: Level,
        #[arg(long)]
        d: Option<i64>,
        /// Read tuples from a CSV file instead of enumerating.
        #[arg(long)]
        tuples: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print per-degree aggregate tables.
        #[arg(long)]
        summary: bool,
    },
    /// Exhaustive extremal orders on a concrete graph.
    Oracle {
        /// builtin:NAME, paley:P, lattice:N or g6:FILE
        #[arg(long)]
        graph: String,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = HARD_ORDER_LIMIT)]
        max_order: usize,
    },
    /// Scan a graph family for provable strict improvements.
    Witness {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        d: i64,
        #[arg(long)]
        max_q: i64,
    },
    /// Clique adjacency bound of an edge-regular triple.
    Cab {
        /// V,K,L
        #[arg(long)]
        params: String,
    },
    /// Check the exact polynomial identities over all tuples up to vmax.
    Identities {
        #[arg(long)]
        vmax: i64,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse().command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn output(path: Option<&PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(File::create(p)?),
        None => Box::new(io::stdout().lock()),
    })
}

fn run(command: Command) -> Result<bool> {
    match command {
        Command::Feasible { vmax, level, all, out } => {
            let tuples = with_workers(|| enumerate_feasible(vmax, level, !all))?;
            write_tuples_csv(output(out.as_ref())?, &tuples)?;
            eprintln!("{} tuples with v <= {vmax} at level {level}", tuples.len());
            Ok(true)
        }
        Command::Bounds { params, d, json } => {
            let row = compare_record(&params, d)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&row).map_err(io::Error::other)?);
            } else {
                write_rows_csv(io::stdout().lock(), &[row])?;
            }
            Ok(true)
        }
        Command::Sweep { vmax, level, d, tuples, out, summary } => {
            let rows = match (tuples, vmax) {
                (Some(path), _) => {
                    let report = ingest_tuples(&path)?;
                    for r in &report.rejected {
                        eprintln!("{}:{}: rejected {}: {}", path.display(), r.line, r.params, r.reason);
                    }
                    let (kept, skipped): (Vec<SrgParams>, Vec<SrgParams>) =
                        report.tuples.into_iter().partition(|p| {
                            p.is_primitive() && is_feasible(p, level).passes(level)
                        });
                    if !skipped.is_empty() {
                        eprintln!("skipped {} imprimitive or below-level tuples", skipped.len());
                    }
                    sweep_tuples(&kept, d)?
                }
                (None, Some(vmax)) => sweep(vmax, level, d)?,
                (None, None) => {
                    return Err(Error::InvalidParams("sweep needs --vmax or --tuples".into()))
                }
            };
            let to_file = out.is_some();
            write_rows_csv(output(out.as_ref())?, &rows)?;
            if summary {
                let text = render_summary(&aggregate_tables(&rows));
                if to_file {
                    print!("{text}");
                } else {
                    eprint!("{text}");
                }
            }
            Ok(true)
        }
        Command::Oracle { graph, d, max_order } => {
            let g = load_graph(&graph)?;
            let params = srg_parameters_of(&g);
            match params {
                Some(p) => println!("graph: {graph} ({p})"),
                None => println!("graph: {graph} (order {}, not strongly regular)", g.order()),
            }
            let r = extremal_regular_induced_with_limit(&g, d, max_order)?;
            let show = |o: Option<usize>| o.map_or("none".to_string(), |n| n.to_string());
            println!("d = {d}: min order {}, max order {}", show(r.min_order), show(r.max_order));
            if r.max_order.is_some() {
                println!("witness min: {:?}", r.witness_min);
                println!("witness max: {:?}", r.witness_max);
            }
            if let Some(p) = params.filter(|p| p.is_primitive() && d as i64 <= p.k) {
                let row = compare_record(&p, d as i64)?;
                println!(
                    "rab: [{}, {}], spectral clamps: [{}, {}]",
                    row.rab_lower, row.rab_upper, row.haem_lower_clamped, row.haem_upper_clamped
                );
                let inside = [r.min_order, r.max_order]
                    .into_iter()
                    .flatten()
                    .all(|n| (row.rab_lower..=row.rab_upper).contains(&(n as i64)));
                println!("within rab bounds: {inside}");
                return Ok(inside);
            }
            Ok(true)
        }
        Command::Witness { family, d, max_q } => {
            let entries = witness_search(family, d, max_q)?;
            println!("q,v,k,lambda,mu,rab_up,haem_floor,predicate,verified_strict");
            for e in &entries {
                let p = e.params;
                println!(
                    "{},{},{},{},{},{},{},{},{}",
                    e.q, p.v, p.k, p.lambda, p.mu, e.rab_upper, e.haem_floor,
                    e.verdict.predicate, e.verdict.verified_strict
                );
            }
            Ok(entries.iter().all(|e| e.verdict.is_sound()))
        }
        Command::Cab { params } => {
            let parts: Vec<i64> = params
                .split(',')
                .map(|t| t.trim().parse())
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| Error::InvalidParams(format!("{params:?}: {e}")))?;
            let [v, k, l] = parts[..] else {
                return Err(Error::InvalidParams(format!("{params:?}: expected v,k,lambda")));
            };
            println!("cab: {}", cab(v, k, l)?);
            match cab_spectral_root(v, k, l) {
                Ok(root) => println!("spectral root: {root} ~ {}", root.to_decimal(6)),
                Err(e) => println!("spectral root: {e}"),
            }
            let rest = v - k - 1;
            if rest > 0 && (k * (k - l - 1)) % rest == 0 {
                let p = SrgParams::new(v, k, l, k * (k - l - 1) / rest)?;
                println!("delsarte ({p}): {}", delsarte_bound(&p)?);
            }
            Ok(true)
        }
        Command::Identities { vmax } => {
            let report = with_workers(|| run_identity_suite(vmax))??;
            println!("{} tuples with v <= {vmax}", report.tuples);
            for c in &report.checks {
                let status = if c.holds() { "ok" } else { "FAILED" };
                println!("{:<24} {status:<6} {} cases, {} failures", c.name, c.cases, c.failures);
                if let Some(f) = &c.first_failure {
                    println!("  first failure: {f}");
                }
            }
            Ok(report.all_hold())
        }
    }
}

fn load_graph(spec: &str) -> Result<Graph> {
    let (kind, arg) = spec
        .split_once(':')
        .ok_or_else(|| Error::Graph(format!("{spec:?}: expected KIND:ARG")))?;
    let number = || {
        arg.parse::<usize>()
            .map_err(|e| Error::Graph(format!("{spec:?}: {e}")))
    };
    match kind {
        "builtin" => builtin(arg),
        "paley" => paley_graph(number()?),
        "lattice" => square_lattice(number()?),
        "g6" => {
            let mut graphs = read_graph6_file(arg)?;
            match graphs.len() {
                1 => Ok(graphs.remove(0)),
                n => Err(Error::Graph(format!("{arg}: expected one graph, found {n}"))),
            }
        }
        _ => Err(Error::Graph(format!("unknown graph kind {kind:?}"))),
    }
}

fn render_table(title: &str, table: &AggregateTable) -> String {
    let mut s = format!("{title}\n  d  count  max_gap\n");
    for r in &table.rows {
        s += &format!("{:>3}  {:>5}  {:>7}\n", r.d, r.count, r.max_gap);
    }
    s
}

fn render_summary(agg: &Aggregates) -> String {
    let s = &agg.summary;
    let mut out = format!("tuples: {}\n", s.tuples);
    for (label, t) in [("0 <= d <= k", &s.all), ("0 <= d < k", &s.below_k)] {
        out += &format!(
            "{label}: {} rows, strict upper {}, strict lower {}, no possible order {}, upper gap >= 2 {}, lower gap >= 2 {}\n",
            t.rows, t.strict_upper, t.strict_lower, t.sd_empty, t.wide_upper, t.wide_lower
        );
    }
    out += &render_table("upper: rab_up < haem_up - 1", &agg.upper);
    out += &render_table("lower: rab_lo > haem_lo + 1", &agg.lower);
    out
}
