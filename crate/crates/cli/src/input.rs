use std::fs::File;
use std::io::{self, BufRead, BufReader, Read};
use std::path::Path;

use clap::ValueEnum;
use dcoal_core::{parse_edge_list, parse_graph6, Graph};

use crate::Failure;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Graph6,
    Edgelist,
    /// Edge list if the first line is `n m`, graph6 otherwise.
    Auto,
}

/// Opens a file, or standard input for `-`.
pub fn open(path: &Path) -> Result<Box<dyn BufRead>, Failure> {
    if path.as_os_str() == "-" {
        return Ok(Box::new(BufReader::new(io::stdin())));
    }
    let file = File::open(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Ok(Box::new(BufReader::new(file)))
}

pub fn read_to_string(path: &Path) -> Result<String, Failure> {
    let mut text = String::new();
    open(path)?
        .read_to_string(&mut text)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Ok(text)
}

fn looks_like_edge_list(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .is_some_and(|l| {
            let toks: Vec<&str> = l.split_whitespace().collect();
            toks.len() == 2 && toks.iter().all(|t| t.parse::<usize>().is_ok())
        })
}

/// Reads a single graph from a file.
pub fn read_graph(path: &Path, format: GraphFormat) -> Result<Graph, Failure> {
    let text = read_to_string(path)?;
    let edge_list = match format {
        GraphFormat::Edgelist => true,
        GraphFormat::Graph6 => false,
        GraphFormat::Auto => looks_like_edge_list(&text),
    };
    let graph = if edge_list {
        parse_edge_list(&text)
    } else {
        let line = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty() && *l != dcoal_core::graph6::HEADER)
            .ok_or_else(|| Failure::Input(format!("{}: no graph6 record", path.display())))?;
        parse_graph6(line)
    };
    graph.map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}
