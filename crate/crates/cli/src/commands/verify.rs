use std::path::PathBuf;

use clap::{Args, ValueEnum};
use dcoal_core::{validate_dc_partition, DcReason, PartitionJson};
use serde::Serialize;

use crate::input::{self, GraphFormat};
use crate::{CmdResult, Failure};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// Double coalition partition.
    Dc,
    /// Partition into double dominating sets.
    Domatic2,
}

#[derive(Args)]
pub struct VerifyArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, value_enum, default_value = "auto")]
    format: GraphFormat,
    /// JSON file `{"n": .., "parts": [[..], ..]}`.
    #[arg(long)]
    partition: PathBuf,
    #[arg(long, value_enum, default_value = "dc")]
    mode: Mode,
}

#[derive(Serialize)]
struct DomaticValidation {
    valid: bool,
    offending_part: Option<usize>,
    reason: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<String>,
}

fn structural(detail: String) -> DomaticValidation {
    DomaticValidation {
        valid: false,
        offending_part: None,
        reason: Some("structural"),
        detail: Some(detail),
    }
}

pub fn run(args: VerifyArgs) -> CmdResult {
    let g = input::read_graph(&args.graph, args.format)?;
    let text = input::read_to_string(&args.partition)?;
    let json = PartitionJson::parse(&text).map_err(|e| Failure::Input(format!("{}: {e}", args.partition.display())))?;
    let partition = json.to_partition(&g);

    let (printed, valid, is_structural) = match args.mode {
        Mode::Dc => {
            let report = match &partition {
                Ok(p) => validate_dc_partition(&g, p),
                Err(e) => dcoal_core::DcValidation {
                    valid: false,
                    offending_part: None,
                    reason: Some(DcReason::Structural),
                    partner_map: Vec::new(),
                    detail: Some(e.to_string()),
                },
            };
            let is_structural = report.reason == Some(DcReason::Structural);
            (serde_json::to_string(&report), report.valid, is_structural)
        }
        Mode::Domatic2 => {
            let report = match &partition {
                Ok(p) => {
                    let bad = p.parts().iter().position(|&s| !dcoal_core::is_double_dominating(&g, s));
                    DomaticValidation {
                        valid: bad.is_none(),
                        offending_part: bad,
                        reason: bad.map(|_| "part_not_dds"),
                        detail: None,
                    }
                }
                Err(e) => structural(e.to_string()),
            };
            let is_structural = report.reason == Some("structural");
            (serde_json::to_string(&report), report.valid, is_structural)
        }
    };
    println!("{}", printed.map_err(|e| Failure::Input(e.to_string()))?);
    if is_structural {
        Err(Failure::Input(String::new()))
    } else if valid {
        Ok(())
    } else {
        Err(Failure::Invalid(String::new()))
    }
}
