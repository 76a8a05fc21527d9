//! Command-line front end: construct the classified graphs, analyze edge
//! lists, test transitivity, and run the verification suites.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use geodex::census::{self, Budgets};
use geodex::constructions::{self, Params};
use geodex::symmetry::{self, TransitivityMode};
use geodex::{aut, io};

#[derive(Parser)]
#[command(name = "geodex", version, about = "graph census toolkit", long_about = None)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named graph and write an edge-list file plus a label file
    Construct {
        /// construction name; see `construct --list`
        #[arg(required_unless_present = "list")]
        name: Option<String>,
        /// construction parameters, repeatable: --param d=5
        #[arg(long = "param", value_name = "KEY=VALUE")]
        params: Vec<String>,
        /// output edge-list path; labels go to <out>.labels
        #[arg(long)]
        out: Option<PathBuf>,
        /// list available constructions
        #[arg(long)]
        list: bool,
    },
    /// Invariants of an edge-list file
    Analyze {
        file: PathBuf,
        /// emit JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Transitivity report for a graph under a group
    Transitivity {
        file: PathBuf,
        /// generator JSON path, or `auto` for the computed automorphism group
        #[arg(long, default_value = "auto")]
        group: String,
        #[arg(long, value_enum)]
        mode: ModeArg,
        /// largest level to test
        #[arg(long)]
        s: usize,
    },
    /// Verify the classification of 2-arc-transitive strongly regular graphs
    #[command(name = "verify-theorem2")]
    VerifyTheorem2,
    /// Verify the quotient/cover table
    #[command(name = "verify-table1")]
    VerifyTable1,
    /// Verify the small-b forcing instances
    #[command(name = "verify-forcing")]
    VerifyForcing,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Arc,
    Geodesic,
    Distance,
}

impl From<ModeArg> for TransitivityMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Arc => TransitivityMode::Arc,
            ModeArg::Geodesic => TransitivityMode::Geodesic,
            ModeArg::Distance => TransitivityMode::Distance,
        }
    }
}

fn parse_params(pairs: &[String]) -> Result<Params, String> {
    let mut params = Params::new();
    for pair in pairs {
        let (k, v) = pair
            .split_once('=')
            .ok_or_else(|| format!("--param wants KEY=VALUE, got `{pair}`"))?;
        params.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(params)
}

fn run_suite(report: census::SuiteReport) -> ExitCode {
    for line in report.summary_lines() {
        eprintln!("{line}");
    }
    eprintln!(
        "{}: {} pass, {} fail, {} skipped in {} ms",
        report.suite, report.pass, report.fail, report.skipped, report.wall_ms
    );
    println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    ExitCode::from(report.exit_code() as u8)
}

fn real_main() -> Result<ExitCode, String> {
    let cli = Cli::parse();
    let budgets = Budgets::from_env();
    match cli.command {
        Command::Construct { name, params, out, list } => {
            if list {
                for (name, params) in constructions::REGISTRY {
                    if params.is_empty() {
                        println!("{name}");
                    } else {
                        println!("{name}  (params: {params})");
                    }
                }
                println!("rgd_incidence  (params: file=<design.json>)");
                return Ok(ExitCode::SUCCESS);
            }
            let name = name.expect("clap enforces name unless --list");
            let params = parse_params(&params)?;
            let built = if name == "rgd_incidence" {
                // incidence graph of a user-supplied resolvable divisible design
                let path = params.get("file").ok_or("rgd_incidence needs --param file=<json>")?;
                let text = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
                let design = io::parse_rgd_json(&text).map_err(|e| e.to_string())?;
                constructions::rgd_incidence_graph(&design).map_err(|e| e.to_string())?
            } else {
                constructions::construct(&name, &params).map_err(|e| e.to_string())?
            };
            let out = out.ok_or("--out <file> is required")?;
            std::fs::write(&out, io::write_edge_list(&built.graph)).map_err(|e| e.to_string())?;
            let label_path = out.with_extension(format!(
                "{}labels",
                out.extension().map(|e| format!("{}.", e.to_string_lossy())).unwrap_or_default()
            ));
            std::fs::write(&label_path, io::write_labels(&built.labels))
                .map_err(|e| e.to_string())?;
            eprintln!(
                "wrote {} ({} vertices, {} edges) and {}",
                out.display(),
                built.graph.n(),
                built.graph.edge_count(),
                label_path.display()
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Analyze { file, json } => {
            let text = std::fs::read_to_string(&file).map_err(|e| e.to_string())?;
            let graph = io::parse_edge_list(&text).map_err(|e| e.to_string())?;
            let report = census::analyze(&graph);
            if json {
                println!("{}", serde_json::to_string_pretty(&report).expect("serializes"));
            } else {
                println!("vertices:  {}", report.n);
                println!("edges:     {}", report.edge_count);
                match report.regular_valency {
                    Some(k) => println!("valency:   {k} (regular)"),
                    None => println!("valency:   irregular"),
                }
                match report.girth {
                    Some(g) => println!("girth:     {g}"),
                    None => println!("girth:     infinite"),
                }
                match report.diameter {
                    Some(d) => println!("diameter:  {d}"),
                    None => println!("diameter:  disconnected"),
                }
                println!("bipartite: {}", report.bipartite);
                match report.srg {
                    Some([n, k, a, c]) => println!("srg:       ({n},{k},{a},{c})"),
                    None => println!("srg:       no"),
                }
                match &report.intersection_array {
                    Some(arr) => println!("array:     (b = {:?}; c = {:?})", arr.b, arr.c),
                    None => println!("array:     not distance-regular"),
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Transitivity { file, group, mode, s } => {
            let text = std::fs::read_to_string(&file).map_err(|e| e.to_string())?;
            let graph = io::parse_edge_list(&text).map_err(|e| e.to_string())?;
            let perm_group = if group == "auto" {
                aut::automorphism_group_with(&graph, &[], budgets.search_nodes)
                    .map_err(|e| e.to_string())?
            } else {
                let gtext = std::fs::read_to_string(&group).map_err(|e| e.to_string())?;
                io::parse_generators_json(&gtext).map_err(|e| e.to_string())?
            };
            let report =
                symmetry::transitivity(&graph, &perm_group, mode.into(), s, budgets.tuple_orbit)
                    .map_err(|e| e.to_string())?;
            println!("{}", serde_json::to_string_pretty(&report).expect("serializes"));
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyTheorem2 => Ok(run_suite(census::verify_theorem2(budgets))),
        Command::VerifyTable1 => Ok(run_suite(census::verify_table1(budgets))),
        Command::VerifyForcing => Ok(run_suite(census::verify_forcing(budgets))),
    }
}

fn main() -> ExitCode {
    match real_main() {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::FAILURE
        }
    }
}
