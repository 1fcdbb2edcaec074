use std::io::{self, BufWriter, Write};

use clap::{Args, ValueEnum};
use dcoal_core::{enumerate_labeled_graphs, gen_family, gen_random, to_graph6, Family, Graph};

use crate::{CmdResult, Failure};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenFamily {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Star,
    Random,
    AllLabeled,
}

#[derive(Args)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    family: GenFamily,
    /// Order (path, cycle, complete, star, random, all-labeled).
    #[arg(long)]
    n: Option<usize>,
    /// First part size of a complete bipartite graph.
    #[arg(long)]
    r: Option<usize>,
    /// Second part size of a complete bipartite graph.
    #[arg(long)]
    s: Option<usize>,
    /// Edge probability for random graphs.
    #[arg(long)]
    p: Option<f64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn need(v: Option<usize>, flag: &str) -> Result<usize, Failure> {
    v.ok_or_else(|| Failure::Input(format!("--{flag} is required for this family")))
}

pub fn run(args: GenArgs) -> CmdResult {
    let mut out = BufWriter::new(io::stdout().lock());
    let mut emit = |g: &Graph| writeln!(out, "{}", to_graph6(g));
    let family = match args.family {
        GenFamily::Path => Family::Path(need(args.n, "n")?),
        GenFamily::Cycle => Family::Cycle(need(args.n, "n")?),
        GenFamily::Complete => Family::Complete(need(args.n, "n")?),
        GenFamily::Star => Family::Star(need(args.n, "n")?),
        GenFamily::CompleteBipartite => Family::CompleteBipartite(need(args.r, "r")?, need(args.s, "s")?),
        GenFamily::Random => {
            let p = args.p.ok_or_else(|| Failure::Input("--p is required for random graphs".into()))?;
            emit(&gen_random(need(args.n, "n")?, p, args.seed)?)?;
            return Ok(out.flush()?);
        }
        GenFamily::AllLabeled => {
            for g in enumerate_labeled_graphs(need(args.n, "n")?).map_err(|e| Failure::Input(e.to_string()))? {
                emit(&g)?;
            }
            return Ok(out.flush()?);
        }
    };
    emit(&gen_family(family)?)?;
    Ok(out.flush()?)
}
