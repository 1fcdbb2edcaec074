use std::path::PathBuf;

use clap::Args;
use dcoal_core::coalition::LastClassStep;
use dcoal_core::{construct_dc_partition, validate_dc_partition, Error};
use serde::Serialize;

use crate::input::{self, GraphFormat};
use crate::{CmdResult, Failure};

#[derive(Args)]
pub struct ConstructArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, value_enum, default_value = "auto")]
    format: GraphFormat,
}

#[derive(Serialize)]
struct ConstructOutput {
    n: usize,
    parts: Vec<Vec<usize>>,
    part_count: usize,
    /// `2·d×2(G)`, the guaranteed minimum part count.
    floor: usize,
    last_step: LastClassStep,
}

pub fn run(args: ConstructArgs) -> CmdResult {
    let g = input::read_graph(&args.graph, args.format)?;
    let c = construct_dc_partition(&g).map_err(|e| match e {
        Error::NoDds { vertex } => Failure::Invalid(format!(
            "vertex {vertex} is isolated, so DC(G) = 0 and no dc-partition exists"
        )),
        other => other.into(),
    })?;
    let partition = c.partition.canonical();
    let check = validate_dc_partition(&g, &partition);
    if !check.valid {
        return Err(Failure::Invalid(format!("constructed partition failed validation: {check:?}")));
    }
    let out = ConstructOutput {
        n: g.n(),
        parts: partition.to_vecs(),
        part_count: partition.len(),
        floor: 2 * c.domatic,
        last_step: c.last_step,
    };
    println!("{}", serde_json::to_string(&out).map_err(|e| Failure::Input(e.to_string()))?);
    Ok(())
}
