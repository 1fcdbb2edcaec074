use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, ValueEnum};
use dcoal_core::scan::{
    complete_bipartite_sweep, family_sweep, graph6_source, labeled_source, random_corpus, scan_to_csv, ScanChecks,
    ScanItem, ScanOptions,
};
use dcoal_core::{Family, Result as CoreResult, SearchLimits};

use crate::{input, CmdResult, Failure};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SweepFamily {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Star,
    Random,
    AllLabeled,
}

#[derive(Args)]
pub struct ScanArgs {
    /// Family to sweep. Mutually exclusive with --input.
    #[arg(long, value_enum, conflicts_with = "input")]
    family: Option<SweepFamily>,
    /// graph6 stream (file or `-`).
    #[arg(long)]
    input: Option<PathBuf>,
    /// Order for all-labeled.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    n_min: Option<usize>,
    /// Largest order; for complete-bipartite the largest r + s.
    #[arg(long)]
    n_max: Option<usize>,
    /// Smallest part for complete-bipartite sweeps (pairs s_min <= s <= r).
    #[arg(long, default_value_t = 1)]
    s_min: usize,
    /// Number of random graphs.
    #[arg(long, default_value_t = 100)]
    count: usize,
    /// Comma list of edge probabilities for random graphs.
    #[arg(long, default_value = "0.5")]
    p: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Comma list of bounds, closed-forms, construct, lemma-partner-cap, all.
    #[arg(long, default_value = "bounds")]
    check: String,
    /// CSV destination; `-` for standard output.
    #[arg(long, default_value = "-")]
    csv: PathBuf,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Emit records in input order. Records are always written in input order,
    /// so this only documents intent.
    #[arg(long)]
    sort: bool,
    /// Exit 3 if any graph was skipped for a resource limit.
    #[arg(long)]
    strict: bool,
    /// Fill runtime_ms (otherwise 0, which keeps output byte-stable).
    #[arg(long)]
    timing: bool,
    #[arg(long, env = "DCOAL_LIMIT_N", default_value_t = dcoal_core::coalition::DEFAULT_LIMIT_N)]
    limit_n: usize,
    #[arg(long)]
    budget: Option<u64>,
}

type Source = Box<dyn Iterator<Item = CoreResult<ScanItem>>>;

fn range(args: &ScanArgs, min_default: usize) -> Result<std::ops::RangeInclusive<usize>, Failure> {
    let hi = args.n_max.ok_or_else(|| Failure::Input("--n-max is required for family sweeps".into()))?;
    Ok(args.n_min.unwrap_or(min_default)..=hi)
}

fn source(args: &ScanArgs) -> Result<Source, Failure> {
    if let Some(path) = &args.input {
        return Ok(Box::new(graph6_source(input::open(path)?)));
    }
    let family = args
        .family
        .ok_or_else(|| Failure::Input("give either --family or --input".into()))?;
    Ok(match family {
        SweepFamily::Path => Box::new(family_sweep(range(args, 2)?, Family::Path)),
        SweepFamily::Cycle => Box::new(family_sweep(range(args, 3)?, Family::Cycle)),
        SweepFamily::Complete => Box::new(family_sweep(range(args, 2)?, Family::Complete)),
        SweepFamily::Star => Box::new(family_sweep(range(args, 2)?, Family::Star)),
        SweepFamily::CompleteBipartite => {
            let hi = args
                .n_max
                .ok_or_else(|| Failure::Input("--n-max is required for family sweeps".into()))?;
            Box::new(complete_bipartite_sweep(args.s_min.max(1), hi))
        }
        SweepFamily::Random => {
            let ps = args
                .p
                .split(',')
                .map(|t| t.trim().parse::<f64>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| Failure::Input(format!("--p: {e}")))?;
            let n_max = args.n_max.or(args.n).ok_or_else(|| Failure::Input("--n-max is required".into()))?;
            let n_min = args.n_min.unwrap_or(n_max);
            Box::new(random_corpus(args.count, n_min, n_max, ps, args.seed)?)
        }
        SweepFamily::AllLabeled => {
            let n = args.n.ok_or_else(|| Failure::Input("--n is required for all-labeled".into()))?;
            Box::new(labeled_source(n).map_err(|e| Failure::Input(e.to_string()))?)
        }
    })
}

pub fn run(args: ScanArgs) -> CmdResult {
    let checks = ScanChecks::parse(&args.check)?;
    let opts = ScanOptions {
        checks,
        limits: SearchLimits {
            max_n: args.limit_n,
            node_budget: args.budget,
            jobs: 1,
        },
        timing: args.timing,
    };
    let items = source(&args)?;
    let out: Box<dyn Write> = if args.csv.as_os_str() == "-" {
        Box::new(BufWriter::new(io::stdout().lock()))
    } else {
        let file = File::create(&args.csv).map_err(|e| Failure::Input(format!("{}: {e}", args.csv.display())))?;
        Box::new(BufWriter::new(file))
    };
    let (summary, flagged) = scan_to_csv(items, &opts, args.jobs.max(1), out)?;

    for o in &flagged {
        let tag = format!("{} [{}]", o.record.graph_id, o.graph6);
        for v in &o.violations {
            eprintln!("VIOLATION {tag}: {v}");
        }
        for d in &o.diagnostics {
            eprintln!("NOTE {tag}: {d}");
        }
        if let Some(why) = &o.skipped {
            eprintln!("SKIPPED {tag}: {why}");
        }
    }
    eprintln!(
        "scanned {} graphs: {} violations in {} graphs, {} skipped",
        summary.records, summary.violations, summary.violating_graphs, summary.skipped
    );
    if summary.violations > 0 {
        Err(Failure::Invalid(String::new()))
    } else if args.strict && summary.skipped > 0 {
        Err(Failure::Resource(String::new()))
    } else {
        Ok(())
    }
}
