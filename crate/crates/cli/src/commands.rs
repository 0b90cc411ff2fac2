//! Subcommands of the `nzflow` binary.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use nzflow_core::abelian::{group_pairs_same_invariants, groups_up_to};
use nzflow_core::graph::signatures_equivalent;
use nzflow_core::num_bigint::{BigInt, BigUint};
use nzflow_core::oracle::{count_group_flows, count_integer_nflows};
use nzflow_core::{
    fit_quasipolynomial, flow_polynomial_family, Budget, FiniteAbelianGroup, IntPolynomial,
    RatPolynomial, SignedGraph,
};
use serde_json::{Map, Value};

use crate::format::{parse_graph, parse_group, parse_vertex_list, render_graph};
use crate::report::{integer, object, Report};
use crate::CliError;

#[derive(Debug, Parser)]
#[command(name = "nzflow", version, about = "Nowhere-zero group flows on signed graphs")]
pub struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count nowhere-zero flows over one group by exhaustive search.
    Count {
        #[arg(long)]
        graph: PathBuf,
        /// Comma-separated moduli, e.g. `4,2` for Z4 x Z2.
        #[arg(long, allow_hyphen_values = true)]
        group: String,
        /// Maximum number of search leaves.
        #[arg(long, default_value_t = Budget::DEFAULT_LEAVES)]
        budget: u64,
    },
    /// Print the flow polynomials f_0 .. f_K.
    Poly {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long = "d-max", default_value_t = 3)]
        d_max: u32,
    },
    /// Check the polynomials against exhaustive counts for every group up to an order.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long = "max-order", default_value_t = 9)]
        max_order: u64,
        #[arg(long, default_value_t = Budget::DEFAULT_LEAVES)]
        budget: u64,
    },
    /// Decide whether two signatures of the same multigraph are switching equivalent.
    Equiv {
        /// Pass exactly twice.
        #[arg(long, required = true)]
        graph: Vec<PathBuf>,
    },
    /// Switch signs on the edge cut of a vertex set and print the new graph.
    Switch {
        #[arg(long)]
        graph: PathBuf,
        /// Comma-separated vertex indices; may be empty.
        #[arg(long, default_value = "")]
        vertices: String,
    },
    /// Count integer nowhere-zero n-flows for n = 1..N, optionally fitting a quasipolynomial.
    Intflow {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long = "n-max", default_value_t = 10)]
        n_max: u64,
        #[arg(long)]
        fit: bool,
        #[arg(long, default_value_t = Budget::DEFAULT_LEAVES)]
        budget: u64,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Count { .. } => "count",
            Command::Poly { .. } => "poly",
            Command::Verify { .. } => "verify",
            Command::Equiv { .. } => "equiv",
            Command::Switch { .. } => "switch",
            Command::Intflow { .. } => "intflow",
        }
    }

    /// Echo of the parsed arguments, as it appears in the report.
    pub fn inputs(&self) -> Map<String, Value> {
        let path = |p: &Path| Value::String(p.display().to_string());
        let value = match self {
            Command::Count { graph, group, budget } => object([
                ("graph", path(graph)),
                ("group", Value::String(group.clone())),
                ("budget", integer(budget)),
            ]),
            Command::Poly { graph, d_max } => {
                object([("graph", path(graph)), ("d_max", integer(d_max))])
            }
            Command::Verify { graph, max_order, budget } => object([
                ("graph", path(graph)),
                ("max_order", integer(max_order)),
                ("budget", integer(budget)),
            ]),
            Command::Equiv { graph } => {
                object([("graphs", Value::Array(graph.iter().map(|p| path(p)).collect()))])
            }
            Command::Switch { graph, vertices } => object([
                ("graph", path(graph)),
                ("vertices", Value::String(vertices.clone())),
            ]),
            Command::Intflow { graph, n_max, fit, budget } => object([
                ("graph", path(graph)),
                ("n_max", integer(n_max)),
                ("fit", Value::Bool(*fit)),
                ("budget", integer(budget)),
            ]),
        };
        match value {
            Value::Object(map) => map,
            _ => unreachable!(),
        }
    }
}

/// Runs a command. Failures are folded into the report's status and exit code.
pub fn run(command: &Command) -> Report {
    let report = Report::new(command.name(), command.inputs());
    let outcome = match command {
        Command::Count { graph, group, budget } => count(report.clone(), graph, group, *budget),
        Command::Poly { graph, d_max } => poly(report.clone(), graph, *d_max),
        Command::Verify { graph, max_order, budget } => {
            verify(report.clone(), graph, *max_order, *budget)
        }
        Command::Equiv { graph } => equiv(report.clone(), graph),
        Command::Switch { graph, vertices } => switch(report.clone(), graph, vertices),
        Command::Intflow { graph, n_max, fit, budget } => {
            intflow(report.clone(), graph, *n_max, *fit, *budget)
        }
    };
    outcome.unwrap_or_else(|e| report.fail(e.exit_code(), e.to_string()))
}

fn load_graph(path: &Path) -> Result<SignedGraph, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    parse_graph(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn polynomial_json(p: &IntPolynomial) -> Value {
    Value::Array(p.coeffs().iter().map(integer).collect())
}

fn rational_json(p: &RatPolynomial) -> Value {
    Value::Array(p.coeffs().iter().map(|c| Value::String(c.to_string())).collect())
}

fn count(mut report: Report, graph: &Path, group: &str, budget: u64) -> Result<Report, CliError> {
    let g = load_graph(graph)?;
    let gamma = parse_group(group).map_err(CliError::Input)?;
    let n = count_group_flows(&g, &gamma, Budget::new(budget))?;
    report.result("count", integer(&n));
    report.result("group", Value::String(gamma.to_string()));
    report.result("order", integer(gamma.order()));
    report.result("epsilon2", integer(gamma.epsilon2()));
    report.line(format!("nowhere-zero {gamma} flows: {n}"));
    Ok(report)
}

fn poly(mut report: Report, graph: &Path, d_max: u32) -> Result<Report, CliError> {
    let g = load_graph(graph)?;
    let family = flow_polynomial_family(&g, d_max);
    let fingerprint = format!("{:016x}", family.graph_fingerprint);
    let entries = family
        .entries
        .iter()
        .map(|(d, f)| {
            report.line(format!("f_{d}(n) = {f}"));
            object([
                ("d", integer(d)),
                ("coefficients", polynomial_json(f)),
                ("polynomial", Value::String(f.to_string())),
            ])
        })
        .collect();
    report.result("fingerprint", Value::String(fingerprint));
    report.result("polynomials", Value::Array(entries));
    Ok(report)
}

fn verify(mut report: Report, graph: &Path, max_order: u64, budget: u64) -> Result<Report, CliError> {
    let g = load_graph(graph)?;
    let groups = groups_up_to(max_order);
    let d_max = groups.iter().map(FiniteAbelianGroup::epsilon2).max().unwrap_or(0);
    let family = flow_polynomial_family(&g, d_max);

    let mut counts: BTreeMap<Vec<u64>, BigUint> = BTreeMap::new();
    let mut rows = Vec::new();
    let mut failures = Vec::new();
    for gamma in &groups {
        let counted = count_group_flows(&g, gamma, Budget::new(budget))?;
        let predicted = family.count_for(gamma).expect("d_max covers every group");
        let pass = BigInt::from(counted.clone()) == predicted;
        let d = gamma.epsilon2();
        let n = gamma.reduced_order();
        report.line(format!(
            "{} {gamma}: oracle {counted}, f_{d}({n}) = {predicted}",
            if pass { "PASS" } else { "FAIL" }
        ));
        if !pass {
            failures.push(format!("{gamma}: oracle {counted}, polynomial {predicted}"));
        }
        rows.push(object([
            ("group", Value::String(gamma.to_string())),
            ("order", integer(gamma.order())),
            ("epsilon2", integer(d)),
            ("n", integer(n)),
            ("oracle", integer(&counted)),
            ("polynomial", integer(&predicted)),
            ("verdict", Value::String(if pass { "PASS" } else { "FAIL" }.into())),
        ]));
        counts.insert(gamma.moduli().to_vec(), counted);
    }

    let mut pair_rows = Vec::new();
    for (a, b) in group_pairs_same_invariants(max_order) {
        let (ca, cb) = (&counts[a.moduli()], &counts[b.moduli()]);
        let pass = ca == cb;
        report.line(format!(
            "{} {a} ~ {b}: {ca} {} {cb}",
            if pass { "PASS" } else { "FAIL" },
            if pass { "=" } else { "!=" }
        ));
        if !pass {
            failures.push(format!("{a} vs {b}: {ca} != {cb}"));
        }
        pair_rows.push(object([
            ("a", Value::String(a.to_string())),
            ("b", Value::String(b.to_string())),
            ("count_a", integer(ca)),
            ("count_b", integer(cb)),
            ("verdict", Value::String(if pass { "PASS" } else { "FAIL" }.into())),
        ]));
    }

    let checks = rows.len() + pair_rows.len();
    report.result("groups", Value::Array(rows));
    report.result("pairs", Value::Array(pair_rows));
    report.result("checks", integer(checks));
    report.result("failures", integer(failures.len()));
    if failures.is_empty() {
        report.line(format!("all {checks} checks PASS"));
        Ok(report)
    } else {
        report.line(format!("{} of {checks} checks FAIL", failures.len()));
        Ok(report.fail(1, format!("verification failed: {}", failures.join("; "))))
    }
}

fn equiv(mut report: Report, graphs: &[PathBuf]) -> Result<Report, CliError> {
    let [a, b] = graphs else {
        return Err(CliError::Input(format!(
            "equiv takes exactly two --graph arguments, got {}",
            graphs.len()
        )));
    };
    let (ga, gb) = (load_graph(a)?, load_graph(b)?);
    let equivalent = signatures_equivalent(&ga, &gb)?;
    report.result("equivalent", Value::Bool(equivalent));
    report.line(if equivalent { "equivalent" } else { "not equivalent" });
    Ok(report)
}

fn switch(mut report: Report, graph: &Path, vertices: &str) -> Result<Report, CliError> {
    let g = load_graph(graph)?;
    let x = parse_vertex_list(vertices).map_err(CliError::Input)?;
    let switched = g.switch(&x)?;
    let text = render_graph(&switched);
    report.result("graph", Value::String(text.clone()));
    report.line(text.trim_end());
    Ok(report)
}

fn intflow(
    mut report: Report,
    graph: &Path,
    n_max: u64,
    fit: bool,
    budget: u64,
) -> Result<Report, CliError> {
    let g = load_graph(graph)?;
    if n_max == 0 {
        return Err(CliError::Input("--n-max must be at least 1".into()));
    }
    let mut samples = Vec::new();
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let c = count_integer_nflows(&g, n, Budget::new(budget))?;
        report.line(format!("n = {n}: {c}"));
        rows.push(object([("n", integer(n)), ("count", integer(&c))]));
        samples.push((n, BigInt::from(c)));
    }
    report.result("counts", Value::Array(rows));
    if fit {
        let q = fit_quasipolynomial(&samples)?;
        report.line(format!("p_even(n) = {}", q.p_even));
        report.line(format!("p_odd(n) = {}", q.p_odd));
        report.line(format!(
            "fit {} (period {})",
            if q.validated { "validated" } else { "NOT validated" },
            if q.has_period_one() { 1 } else { 2 }
        ));
        report.result(
            "fit",
            object([
                ("p_even", rational_json(&q.p_even)),
                ("p_odd", rational_json(&q.p_odd)),
                ("p_even_text", Value::String(q.p_even.to_string())),
                ("p_odd_text", Value::String(q.p_odd.to_string())),
                ("period", integer(if q.has_period_one() { 1 } else { 2 })),
                ("validated", Value::Bool(q.validated)),
                (
                    "sample_range",
                    Value::Array(vec![integer(q.sample_range.0), integer(q.sample_range.1)]),
                ),
            ]),
        );
    }
    Ok(report)
}
