use std::fs::File;
use std::io::{self, BufReader, Read};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use conegraph::construction::build;
use conegraph::corpus::{search_counterexample, SearchOutcome};
use conegraph::io::{graph_to_json, node_set_to_json, read_node_set, Format};
use conegraph::render::{render_svg, RenderOptions};
use conegraph::routing::{greedy_route_by_id, RouteResult};
use conegraph::voidcheck::{check_void_free, verdict_to_json};
use conegraph::{Directedness, Family, GeometricGraph};
use serde_json::json;

/// Build Yao and Theta graphs, check void-freeness and route greedily.
#[derive(Parser)]
#[command(name = "conegraph", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the graph as JSON.
    Build {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        directed: bool,
    },
    /// Report void witnesses. Exit 0 if void-free, 1 if voids exist.
    Check {
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// Greedily route between two node ids. Exit 0 if delivered, 1 if stuck.
    Route {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Randomly search for a node set whose graph is not void-free (k in 1..=5).
    Search {
        #[arg(long, default_value = "yao")]
        family: Family,
        #[arg(long)]
        k: u32,
        /// Node count, either `n` or an inclusive range `lo..hi`.
        #[arg(long, default_value = "4..8", value_parser = parse_node_counts)]
        nodes: RangeInclusive<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
    },
    /// Write the graph as SVG.
    Render {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        directed: bool,
        #[arg(long)]
        out: PathBuf,
        /// Draw the circle centred at V with radius d(U, V).
        #[arg(long, num_args = 2, value_names = ["U", "V"])]
        highlight_pair: Option<Vec<String>>,
    },
}

#[derive(Args)]
struct GraphArgs {
    #[arg(long, default_value = "yao")]
    family: Family,
    #[arg(long)]
    k: u32,
    /// Node-set file; stdin when omitted.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, default_value = "json")]
    format: Format,
}

impl GraphArgs {
    fn graph(&self, directedness: Directedness) -> Result<GeometricGraph> {
        let reader: Box<dyn Read> = match &self.input {
            Some(path) => Box::new(BufReader::new(
                File::open(path).with_context(|| format!("cannot open {}", path.display()))?,
            )),
            None => Box::new(io::stdin().lock()),
        };
        let nodes = read_node_set(reader, self.format).context("invalid node set")?;
        let graph = build(&nodes, self.family, self.k, directedness)?;
        if let Some(warning) = graph.warning() {
            eprintln!("warning: {warning}");
        }
        Ok(graph)
    }
}

fn parse_node_counts(text: &str) -> Result<RangeInclusive<usize>, String> {
    let parse = |s: &str| s.trim().parse::<usize>().map_err(|e| format!("{s:?}: {e}"));
    match text.split_once("..") {
        Some((lo, hi)) => Ok(parse(lo)?..=parse(hi.trim_start_matches('='))?),
        None => parse(text).map(|n| n..=n),
    }
}

fn directedness(directed: bool) -> Directedness {
    if directed {
        Directedness::Directed
    } else {
        Directedness::Undirected
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Build { graph, directed } => {
            println!("{}", graph_to_json(&graph.graph(directedness(directed))?)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { graph } => {
            let graph = graph.graph(Directedness::Undirected)?;
            let verdict = check_void_free(&graph)?;
            println!("{}", verdict_to_json(&graph, &verdict)?);
            Ok(ExitCode::from(u8::from(!verdict.is_void_free())))
        }
        Command::Route { graph, from, to } => {
            let graph = graph.graph(Directedness::Undirected)?;
            let result = greedy_route_by_id(&graph, &from, &to)?;
            let ids = |path: &[usize]| path.iter().map(|&i| graph.nodes().id(i)).collect::<Vec<_>>();
            let report = match &result {
                RouteResult::Delivered { path } => json!({ "delivered": true, "path": ids(path) }),
                RouteResult::Void {
                    path,
                    stuck,
                    best_neighbor_distance,
                } => json!({
                    "delivered": false,
                    "path": ids(path),
                    "stuck": graph.nodes().id(*stuck),
                    "best_neighbor_d": best_neighbor_distance,
                }),
            };
            println!("{}", serde_json::to_string_pretty(&report)?);
            Ok(ExitCode::from(u8::from(!result.is_delivered())))
        }
        Command::Search {
            family,
            k,
            nodes,
            seed,
            budget,
        } => match search_counterexample(family, k, nodes, seed, budget)? {
            SearchOutcome::Found { trial, nodes, witness } => {
                eprintln!(
                    "found at trial {trial}: no neighbor of {} is closer to {}",
                    nodes.id(witness.u),
                    nodes.id(witness.v)
                );
                println!("{}", node_set_to_json(&nodes)?);
                Ok(ExitCode::SUCCESS)
            }
            SearchOutcome::NotFound { trials } => {
                eprintln!("no counter-example for {family} k={k} in {trials} trials");
                Ok(ExitCode::from(1))
            }
        },
        Command::Render {
            graph,
            directed,
            out,
            highlight_pair,
        } => {
            let graph = graph.graph(directedness(directed))?;
            let highlight = match highlight_pair.as_deref() {
                Some([u, v]) => Some((graph.nodes().index_of(u)?, graph.nodes().index_of(v)?)),
                Some(_) => bail!("--highlight-pair takes two ids"),
                None => None,
            };
            let svg = render_svg(&graph, &RenderOptions { highlight })?;
            std::fs::write(&out, svg).with_context(|| format!("cannot write {}", out.display()))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn configure_threads() -> Result<()> {
    if let Ok(value) = std::env::var("CONEGRAPH_THREADS") {
        let threads: usize = value
            .parse()
            .with_context(|| format!("CONEGRAPH_THREADS must be a positive integer, got {value:?}"))?;
        rayon::ThreadPoolBuilder::new().num_threads(threads).build_global()?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match configure_threads().and_then(|()| run(cli.command)) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
