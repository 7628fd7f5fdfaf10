use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, ValueEnum};
use koenig::generators::{random_connected_bipartite, random_connected_graph, random_graph, rng};
use koenig::verify::{run_suite, Check, Outcome, SuiteOptions};
use koenig::{Error, Graph};
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::{emit, limits, Failure, Format};

/// Edge probabilities cycled through by graph index.
const DENSITIES: [f64; 6] = [0.05, 0.1, 0.2, 0.3, 0.5, 0.7];

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    /// Random spanning tree plus G(n, p) edges.
    Connected,
    /// Connected bipartite graphs.
    Bipartite,
    /// Plain G(n, p), possibly disconnected.
    Any,
}

#[derive(Args)]
pub struct VerifyArgs {
    #[arg(long)]
    seed: u64,
    /// Graphs per order.
    #[arg(long, default_value_t = 100)]
    count: usize,
    /// Orders to cover, `lo..hi` inclusive or a single order.
    #[arg(long = "n", default_value = "2..10", value_parser = parse_range)]
    n: (usize, usize),
    #[arg(long, value_enum, default_value_t = Kind::Connected)]
    kind: Kind,
    #[arg(long)]
    cap: Option<usize>,
    /// Checks to leave out, by name.
    #[arg(long, value_delimiter = ',')]
    skip: Vec<String>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Test mode: report every pass of this check as a failure.
    #[arg(long, hide = true)]
    break_check: Option<String>,
}

pub fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let bad = || format!("`{s}` is not an order or a range `lo..hi`");
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (lo, hi.strip_prefix('=').unwrap_or(hi)),
        None => (s, s),
    };
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().parse().map_err(|_| bad())?;
    if lo == 0 || lo > hi {
        return Err(format!("range `{s}` must satisfy 1 <= lo <= hi"));
    }
    Ok((lo, hi))
}

fn check_by_name(name: &str) -> Result<Check, Failure> {
    Check::from_name(name).ok_or_else(|| {
        let known: Vec<_> = Check::ALL.iter().map(|c| c.name()).collect();
        Failure::input(format!("unknown check `{name}`; known checks: {}", known.join(", ")))
    })
}

#[derive(Default, Serialize)]
struct Tally {
    pass: usize,
    fail: usize,
    not_applicable: usize,
    /// Failures are expected: the statement is known false as worded.
    refuted: bool,
    first_failure: Option<String>,
}

#[derive(Serialize)]
struct Summary {
    seed: u64,
    kind: String,
    orders: (usize, usize),
    graphs: usize,
    violations: usize,
    checks: BTreeMap<&'static str, Tally>,
}

fn corpus(args: &VerifyArgs) -> Vec<(usize, u64, f64)> {
    let mut r = rng(args.seed);
    let mut out = Vec::new();
    for n in args.n.0..=args.n.1 {
        for i in 0..args.count {
            out.push((n, r.gen::<u64>(), DENSITIES[i % DENSITIES.len()]));
        }
    }
    out
}

fn build(kind: Kind, n: usize, seed: u64, p: f64) -> Graph {
    match kind {
        Kind::Connected => random_connected_graph(n, p, seed),
        Kind::Bipartite => random_connected_bipartite(n, p, seed),
        Kind::Any => random_graph(n, p, seed),
    }
    .expect("corpus parameters are valid")
}

pub fn run(args: &VerifyArgs) -> Result<(), Failure> {
    let limits = limits(args.cap)?;
    let skip = args
        .skip
        .iter()
        .map(|s| check_by_name(s))
        .collect::<Result<Vec<_>, _>>()?;
    let broken = args.break_check.as_deref().map(check_by_name).transpose()?;
    let opts = SuiteOptions::default();

    let specs = corpus(args);
    let results: Vec<Result<(Graph, Vec<_>), Error>> = specs
        .par_iter()
        .map(|&(n, seed, p)| {
            let g = build(args.kind, n, seed, p);
            let r = run_suite(&g, &limits, &opts)?;
            Ok((g, r))
        })
        .collect();

    let mut checks: BTreeMap<&'static str, Tally> = BTreeMap::new();
    for c in Check::ALL.iter().filter(|c| !skip.contains(c)) {
        checks.insert(
            c.name(),
            Tally {
                refuted: c.is_refuted(),
                ..Tally::default()
            },
        );
    }
    let mut violations = 0;
    for result in results {
        let (g, outcomes) = result?;
        for r in outcomes {
            let Some(t) = checks.get_mut(r.check.name()) else {
                continue;
            };
            let outcome = match (&r.outcome, broken) {
                (Outcome::Pass, Some(b)) if b == r.check => Outcome::Fail("deliberately broken".into()),
                (o, _) => o.clone(),
            };
            match outcome {
                Outcome::Pass => t.pass += 1,
                Outcome::NotApplicable => t.not_applicable += 1,
                Outcome::Fail(why) => {
                    t.fail += 1;
                    violations += 1;
                    t.first_failure.get_or_insert_with(|| {
                        format!(
                            "{why} on edges {:?}",
                            g.edges().iter().map(|e| (e.0, e.1)).collect::<Vec<_>>()
                        )
                    });
                }
            }
        }
    }
    let summary = Summary {
        seed: args.seed,
        kind: format!("{:?}", args.kind).to_lowercase(),
        orders: args.n,
        graphs: specs.len(),
        violations,
        checks,
    };
    let text = match args.format {
        Format::Json => serde_json::to_string_pretty(&summary).expect("summary serializes") + "\n",
        Format::Text => table(&summary),
    };
    emit(args.out.as_deref(), &text)?;
    if violations > 0 {
        return Err(Failure::new(1, format!("{violations} check failures")));
    }
    Ok(())
}

fn table(s: &Summary) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{} {} graphs, orders {}..={}, seed {}",
        s.graphs, s.kind, s.orders.0, s.orders.1, s.seed
    );
    let _ = writeln!(out, "{:<28} {:>7} {:>7} {:>7}", "check", "pass", "fail", "n/a");
    for (name, t) in &s.checks {
        let note = if t.refuted { "  (refuted as worded)" } else { "" };
        let _ = writeln!(
            out,
            "{name:<28} {:>7} {:>7} {:>7}{note}",
            t.pass, t.fail, t.not_applicable
        );
    }
    for (name, t) in &s.checks {
        if let Some(first) = &t.first_failure {
            let _ = writeln!(out, "first {name} failure: {first}");
        }
    }
    let _ = writeln!(out, "violations: {}", s.violations);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("2..10"), Ok((2, 10)));
        assert_eq!(parse_range("2..=10"), Ok((2, 10)));
        assert_eq!(parse_range("7"), Ok((7, 7)));
        assert!(parse_range("5..2").is_err());
        assert!(parse_range("0..3").is_err());
        assert!(parse_range("a..b").is_err());
    }
}
