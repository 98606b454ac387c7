use std::io::Read as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use induced_free::{
    decode_graph6_lines, encode_graph6, feasible_pairs, tnf_infeasible_region, witness, FamilySpec,
    Graph, TnfKind,
};
use induced_free_cli::{
    BoundsReport, ClassifyReport, CliError, DecodeEntry, EncodeEntry, GraphSpecifier, PairsReport,
    WitnessReport,
};
use serde::Serialize;

/// Witnesses and feasibility tables for families of induced-H-free graphs.
///
/// Graphs are given as graph6, as an edge list "n;u-v,u-w,...", or by name:
/// complete:k, empty:k, path:k (k vertices), cycle:k, star:k (k leaves),
/// matching:k (k edges), claw, paw, diamond, H:p,q,r, S:p,r, Q:p,r,x,y.
#[derive(Parser)]
#[command(name = "feasible", version)]
struct Cli {
    /// Print JSON instead of human-readable text.
    #[arg(long, global = true)]
    json: bool,

    /// Write output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a forbidden graph and report whether its family is feasible.
    Classify(OneGraph),
    /// Build a graph on n vertices and m edges with no induced copy of the forbidden graph.
    Witness {
        #[command(flatten)]
        graph: OneGraph,
        /// Number of vertices.
        #[arg(short, long)]
        n: usize,
        /// Number of edges.
        #[arg(short, long)]
        m: usize,
        /// Check the result with the embedding search before printing it.
        #[arg(long)]
        verify: bool,
    },
    /// Exhaustive feasible-pair table for a family at n <= 8 vertices.
    Pairs {
        /// Forbidden graphs.
        specs: Vec<String>,
        /// Forbidden graph as an edge list; may be repeated.
        #[arg(long, value_name = "EDGES")]
        edges: Vec<String>,
        /// Number of vertices.
        #[arg(short, long)]
        n: usize,
        /// Print CSV rows n,m,feasible.
        #[arg(long)]
        csv: bool,
    },
    /// Known infeasible edge counts for a trivially non-feasible family.
    Bounds {
        /// Clique, CliqueMinusEdge, Empty or EmptyPlusEdge.
        kind: String,
        k: usize,
        n: usize,
    },
    /// Print graph6 for each graph.
    Encode {
        specs: Vec<String>,
        #[arg(long, value_name = "EDGES")]
        edges: Vec<String>,
    },
    /// Decode graph6 strings into edge lists.
    Decode {
        #[arg(required_unless_present = "file")]
        graph6: Vec<String>,
        /// Read newline-delimited graph6 from FILE ("-" for stdin).
        #[arg(long, value_name = "FILE", conflicts_with = "graph6")]
        file: Option<PathBuf>,
    },
}

#[derive(Args)]
struct OneGraph {
    /// Forbidden graph: graph6, edge list or catalog name.
    #[arg(required_unless_present = "edges", conflicts_with = "edges")]
    spec: Option<String>,
    /// Forbidden graph as an edge list "n;u-v,...".
    #[arg(long, value_name = "EDGES")]
    edges: Option<String>,
}

impl OneGraph {
    fn resolve(&self) -> Result<GraphSpecifier, CliError> {
        let text = self
            .spec
            .as_deref()
            .or(self.edges.as_deref())
            .unwrap_or_default();
        spec_from(text)
    }
}

fn spec_from(text: &str) -> Result<GraphSpecifier, CliError> {
    text.parse::<GraphSpecifier>().map_err(|e| match e {
        induced_free::Error::Parse { offset, message } => {
            CliError::Lib(induced_free::Error::Parse {
                offset,
                message: format!("{message} (in '{text}')"),
            })
        }
        other => CliError::Lib(other),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(cli: &Cli) -> Result<(), CliError> {
    let text = render(cli)?;
    match &cli.out {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn render(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Classify(graph) => {
            let report = ClassifyReport::new(&graph.resolve()?);
            Ok(if cli.json {
                json(&report)
            } else {
                report.human()
            })
        }
        Command::Witness {
            graph,
            n,
            m,
            verify,
        } => {
            let spec = graph.resolve()?;
            let cert = witness(&spec.graph, *n, *m, *verify)?;
            let report = WitnessReport::new(&cert);
            Ok(if cli.json {
                json(&report)
            } else {
                report.human()
            })
        }
        Command::Pairs {
            specs,
            edges,
            n,
            csv,
        } => {
            if *csv && cli.json {
                return Err(CliError::Usage(
                    "--csv and --json cannot be combined".into(),
                ));
            }
            let graphs = resolve_all(specs, edges)?;
            if graphs.is_empty() {
                return Err(CliError::Usage(
                    "pairs needs at least one forbidden graph".into(),
                ));
            }
            let family = FamilySpec::new(graphs.iter().cloned())?;
            let table = feasible_pairs(&family, *n)?;
            Ok(if *csv {
                table.to_csv()
            } else if cli.json {
                json(&PairsReport::new(&graphs, &table))
            } else {
                PairsReport::new(&graphs, &table).human()
            })
        }
        Command::Bounds { kind, k, n } => {
            let kind: TnfKind = kind.parse()?;
            let report = BoundsReport::new(&tnf_infeasible_region(kind, *k, *n)?);
            Ok(if cli.json {
                json(&report)
            } else {
                report.human()
            })
        }
        Command::Encode { specs, edges } => {
            let inputs: Vec<&String> = specs.iter().chain(edges).collect();
            let mut entries = Vec::with_capacity(inputs.len());
            for input in inputs {
                let g = spec_from(input)?.graph;
                entries.push(EncodeEntry {
                    input: input.clone(),
                    graph6: encode_graph6(&g)?,
                    order: g.order(),
                    edge_count: g.edge_count(),
                });
            }
            Ok(if cli.json {
                json(&entries)
            } else {
                entries.iter().map(|e| format!("{}\n", e.graph6)).collect()
            })
        }
        Command::Decode { graph6, file } => {
            let text = match file {
                Some(path) => read_input(path)?,
                None => graph6.join("\n"),
            };
            let graphs = decode_graph6_lines(&text)?;
            let entries: Vec<DecodeEntry> = graphs.iter().map(DecodeEntry::new).collect();
            Ok(if cli.json {
                json(&entries)
            } else {
                entries
                    .iter()
                    .map(|e| format!("{}\n", e.edge_list))
                    .collect()
            })
        }
    }
}

fn resolve_all(specs: &[String], edges: &[String]) -> Result<Vec<Graph>, CliError> {
    specs
        .iter()
        .chain(edges)
        .map(|s| Ok(spec_from(s)?.graph))
        .collect()
}

fn read_input(path: &PathBuf) -> Result<String, CliError> {
    let io = |source| CliError::Io {
        path: path.display().to_string(),
        source,
    };
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}
