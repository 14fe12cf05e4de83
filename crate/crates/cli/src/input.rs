use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Args, ValueEnum};
use prism_fixer::graph::{parse_edge_list, parse_graph6, Graph};

use crate::Failure;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    G6,
    Edges,
}

#[derive(Args, Debug)]
#[group(skip)]
#[command(group(ArgGroup::new("source").required(true).multiple(false)))]
pub struct GraphInput {
    /// Graph as a graph6 string.
    #[arg(long, group = "source")]
    pub g6: Option<String>,

    /// Edge-list file (`-` for stdin): vertex count, then one pair per line.
    #[arg(long, group = "source", value_name = "PATH")]
    pub edges: Option<PathBuf>,

    /// Graph file (`-` for stdin), read according to --format.
    #[arg(group = "source", value_name = "FILE")]
    pub file: Option<PathBuf>,

    /// Format of FILE. graph6 files use their first non-blank line.
    #[arg(long, value_enum, default_value_t = Format::G6)]
    pub format: Format,
}

pub fn read_source(path: &Path) -> Result<String, Failure> {
    let mut text = String::new();
    if path == Path::new("-") {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::usage(format!("reading stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(path)
            .map_err(|e| Failure::usage(format!("reading {}: {e}", path.display())))?;
    }
    Ok(text)
}

fn first_graph6_line(text: &str) -> &str {
    text.lines()
        .map(|l| l.strip_prefix(">>graph6<<").unwrap_or(l))
        .find(|l| !l.trim().is_empty())
        .unwrap_or("")
}

impl GraphInput {
    pub fn load(&self) -> Result<Graph, Failure> {
        let parsed = if let Some(s) = &self.g6 {
            parse_graph6(s)
        } else if let Some(p) = &self.edges {
            parse_edge_list(&read_source(p)?)
        } else if let Some(p) = &self.file {
            let text = read_source(p)?;
            match self.format {
                Format::G6 => parse_graph6(first_graph6_line(&text)),
                Format::Edges => parse_edge_list(&text),
            }
        } else {
            unreachable!("clap requires one graph source")
        };
        parsed.map_err(Failure::from)
    }
}
