use std::io::{self, BufRead, BufWriter, Write};
use std::path::PathBuf;

use clap::Args;
use dcoal_core::{d_x2, dc_number, gamma_x2, parse_graph6, to_graph6, Error, Graph, SearchLimits};
use serde::Serialize;
use serde_json::Value;

use crate::input::{self, GraphFormat};
use crate::{CmdResult, Failure};

#[derive(Args)]
pub struct SolveArgs {
    /// Graph file, or `-` for standard input.
    #[arg(long, default_value = "-")]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "graph6")]
    format: GraphFormat,
    /// Comma list of gamma2, domatic2, dc, all.
    #[arg(long, default_value = "all")]
    what: String,
    /// Largest order the DC search accepts.
    #[arg(long, env = "DCOAL_LIMIT_N", default_value_t = dcoal_core::coalition::DEFAULT_LIMIT_N)]
    limit_n: usize,
    /// DC search node budget.
    #[arg(long)]
    budget: Option<u64>,
    /// Worker threads inside the DC search.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Clone, Copy, Default)]
struct Wanted {
    gamma: bool,
    domatic: bool,
    dc: bool,
}

fn parse_what(list: &str) -> Result<Wanted, Failure> {
    let mut w = Wanted::default();
    for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        match item {
            "gamma2" => w.gamma = true,
            "domatic2" => w.domatic = true,
            "dc" => w.dc = true,
            "all" => w = Wanted { gamma: true, domatic: true, dc: true },
            other => return Err(Failure::Input(format!("--what: unknown invariant {other:?}"))),
        }
    }
    Ok(w)
}

#[derive(Serialize, Default)]
struct Stats {
    n: usize,
    m: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    gamma_nodes: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    domatic_nodes: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    dc_nodes: Option<u64>,
}

/// Witnesses appear only for requested, solvable invariants.
#[derive(Serialize, Default)]
struct SolveOutput {
    graph: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    gamma_x2: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    gamma_x2_witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    d_x2: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    d_x2_witness: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    dc: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    dc_witness: Option<Vec<Vec<usize>>>,
    stats: Stats,
}

fn solve_one(g: &Graph, wanted: Wanted, limits: &SearchLimits) -> Result<SolveOutput, Error> {
    let mut out = SolveOutput {
        graph: to_graph6(g),
        stats: Stats { n: g.n(), m: g.edge_count(), ..Stats::default() },
        ..SolveOutput::default()
    };
    if wanted.gamma {
        match gamma_x2(g) {
            Ok(r) => {
                out.gamma_x2 = Some(r.value.into());
                out.gamma_x2_witness = Some(r.witness.to_vec());
                out.stats.gamma_nodes = Some(r.nodes_explored);
            }
            Err(Error::NoDds { .. }) => out.gamma_x2 = Some(Value::Null),
            Err(e) => return Err(e),
        }
    }
    if wanted.domatic {
        match d_x2(g) {
            Ok(r) => {
                out.d_x2 = Some(r.value.into());
                out.d_x2_witness = Some(r.witness.to_vecs());
                out.stats.domatic_nodes = Some(r.nodes_explored);
            }
            Err(Error::NoDds { .. }) => out.d_x2 = Some(Value::Null),
            Err(e) => return Err(e),
        }
    }
    if wanted.dc {
        let r = dc_number(g, limits)?;
        out.dc = Some(r.value);
        out.dc_witness = r.witness.map(|w| w.canonical().to_vecs());
        out.stats.dc_nodes = Some(r.nodes_explored);
    }
    Ok(out)
}

pub fn run(args: SolveArgs) -> CmdResult {
    let wanted = parse_what(&args.what)?;
    let limits = SearchLimits {
        max_n: args.limit_n,
        node_budget: args.budget,
        jobs: args.jobs.max(1),
    };
    let mut out = BufWriter::new(io::stdout().lock());
    let mut emit = |g: &Graph, line: Option<usize>| -> CmdResult {
        let result = solve_one(g, wanted, &limits).map_err(|e| {
            let at = line.map(|l| format!("line {l}: ")).unwrap_or_default();
            match Failure::from(e) {
                Failure::Resource(m) => Failure::Resource(format!("{at}{m}")),
                Failure::Input(m) => Failure::Input(format!("{at}{m}")),
                Failure::Invalid(m) => Failure::Invalid(format!("{at}{m}")),
            }
        })?;
        serde_json::to_writer(&mut out, &result).map_err(|e| Failure::Input(e.to_string()))?;
        writeln!(out)?;
        Ok(())
    };

    let format = if args.format == GraphFormat::Auto { GraphFormat::Graph6 } else { args.format };
    if format == GraphFormat::Edgelist {
        let g = input::read_graph(&args.input, GraphFormat::Edgelist)?;
        emit(&g, None)?;
    } else {
        for (i, line) in input::open(&args.input)?.lines().enumerate() {
            let line = line?;
            let record = line.trim();
            if record.is_empty() || record == dcoal_core::graph6::HEADER {
                continue;
            }
            let g = parse_graph6(record).map_err(|e| Failure::Input(format!("line {}: {e}", i + 1)))?;
            emit(&g, Some(i + 1))?;
        }
    }
    Ok(out.flush()?)
}
