use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use scfc::harness::{self, CensusClass, RunOptions, SolvedCorpus, Status, TheoremCheck};
use scfc::io::{self, graph_argument, write_edge_list};
use scfc::{Error, Result};
use scfc_core::coloring::{is_strong_cfc, is_strong_pc};
use scfc_core::constructions::Construction;
use scfc_core::enumerate::{enumerate_connected, enumerate_cubic};
use scfc_core::families::FamilySpec;
use scfc_core::graph6::write_graph6;
use scfc_core::solver::{scfc_decide_budget, scfc_exact_budget, spc_decide_budget, Decision, ExactOutcome};
use serde_json::json;

#[derive(Parser)]
#[command(name = "scfc", version, about = "Strong conflict-free connection number toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Graph6,
    Edgelist,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named graph family member.
    Family {
        name: String,
        #[arg(long, num_args = 0.., value_delimiter = ',')]
        params: Vec<usize>,
        #[arg(long, value_enum, default_value = "graph6")]
        emit: Emit,
    },
    /// Check a coloring file against a graph.
    Verify {
        /// graph6 string or a file (graph6 or edge list)
        #[arg(long)]
        graph: String,
        #[arg(long)]
        coloring: PathBuf,
        /// check proper connection instead
        #[arg(long)]
        spc: bool,
    },
    /// Produce one of the explicit colorings.
    Color {
        construction: String,
        #[arg(long, num_args = 0.., value_delimiter = ',')]
        params: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact scfc with witness and bound trace.
    Compute {
        #[arg(long)]
        graph6: String,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Whether k colors suffice.
    Decide {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        graph6: String,
        #[arg(long)]
        spc: bool,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// List graphs up to isomorphism.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        cubic: bool,
        #[arg(long, value_enum, default_value = "graph6")]
        emit: Emit,
    },
    /// Run a registry check, or `all`; `list` prints the registry.
    Theorem {
        id: String,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        budget: Option<u64>,
        /// write the report(s) to this file
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Census of graphs with scfc = m - 2 or m - 3.
    Census {
        #[arg(long)]
        class: String,
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn emit(g: &scfc_core::Graph, how: Emit) -> String {
    match how {
        Emit::Graph6 => write_graph6(g) + "\n",
        Emit::Edgelist => write_edge_list(g),
    }
}

fn write_file(path: &PathBuf, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|source| Error::Io {
        path: path.clone(),
        source,
    })
}

fn status_json(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::Partial => "partial",
    }
}

fn print_check(c: &TheoremCheck) {
    println!(
        "{:<24} {:<8} {} ({} ms)",
        c.id,
        status_json(c.status).to_uppercase(),
        c.corpus,
        c.runtime_ms
    );
    for note in &c.notes {
        println!("    {note}");
    }
    if !c.unresolved.is_empty() {
        println!("    unresolved: {}", c.unresolved.join(" "));
    }
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Family { name, params, emit: how } => {
            let g = FamilySpec::parse(&name, &params)?.build()?;
            print!("{}", emit(&g, how));
        }
        Command::Verify { graph, coloring, spc } => {
            let g = graph_argument(&graph)?;
            let c = io::coloring_from_json(&g, &io::read_to_string(&coloring)?)?;
            let report = if spc { is_strong_pc(&g, &c)? } else { is_strong_cfc(&g, &c)? };
            let out = json!({
                "ok": report.ok,
                "failing_pair": report.failing_pair,
                "witness_path": report.witness_path,
            });
            println!("{out}");
            return Ok(if report.ok { 0 } else { 1 });
        }
        Command::Color { construction, params, out } => {
            let con = Construction::parse(&construction, &params)?;
            let g = con.graph()?;
            let text = io::coloring_to_json(&g, &con.coloring()?);
            match out {
                Some(path) => write_file(&path, &text)?,
                None => println!("{text}"),
            }
        }
        Command::Compute { graph6, budget } => {
            let g = graph_argument(&graph6)?;
            let out = match scfc_exact_budget(&g, budget)? {
                ExactOutcome::Solved(r) => json!({
                    "value": r.value,
                    "witness": serde_json::to_value(io::ColoringFile::new(&g, &r.witness))?,
                    "trace": {
                        "lower": { "value": r.trace.lower.value, "reason": format!("{:?}", r.trace.lower.reason) },
                        "upper": { "value": r.trace.upper.value, "reason": format!("{:?}", r.trace.upper.reason) },
                    },
                    "nodes": r.nodes,
                }),
                ExactOutcome::Exhausted { lower, upper, nodes, .. } => {
                    println!("{}", json!({ "value": null, "lower": lower, "upper": upper, "nodes": nodes }));
                    return Ok(2);
                }
            };
            println!("{out}");
        }
        Command::Decide { k, graph6, spc, budget } => {
            let g = graph_argument(&graph6)?;
            let out = if spc {
                spc_decide_budget(&g, k, budget)?
            } else {
                scfc_decide_budget(&g, k, budget)?
            };
            let (answer, witness, code) = match out.decision {
                Decision::Colorable(c) => (json!(true), serde_json::to_value(io::ColoringFile::new(&g, &c))?, 0),
                Decision::NotColorable => (json!(false), json!(null), 1),
                Decision::Exhausted => (json!(null), json!(null), 2),
            };
            println!("{}", json!({ "k": k, "colorable": answer, "witness": witness, "nodes": out.nodes }));
            return Ok(code);
        }
        Command::Enumerate { n, cubic, emit: how } => {
            let graphs = if cubic { enumerate_cubic(n)? } else { enumerate_connected(n)? };
            for g in &graphs {
                print!("{}", emit(g, how));
            }
        }
        Command::Theorem { id, max_n, budget, json } => {
            let opts = RunOptions { max_n, budget };
            if id == "list" {
                for t in harness::THEOREMS {
                    println!("{:<24} {}", t.id, t.summary);
                }
                return Ok(0);
            }
            let checks = if id == "all" {
                harness::THEOREMS
                    .iter()
                    .map(|t| harness::run_theorem(t.id, opts))
                    .collect::<Result<Vec<_>>>()?
            } else {
                vec![harness::run_theorem(&id, opts)?]
            };
            checks.iter().for_each(print_check);
            if let Some(path) = json {
                let text = if checks.len() == 1 {
                    serde_json::to_string_pretty(&checks[0])?
                } else {
                    serde_json::to_string_pretty(&checks)?
                };
                write_file(&path, &text)?;
            }
            return Ok(Status::combine(checks.iter().map(|c| c.status)).exit_code());
        }
        Command::Census { class, max_n, budget, json } => {
            let class = CensusClass::parse(&class)?;
            let corpus = SolvedCorpus::connected(max_n, budget)?;
            let census = harness::family_census(&corpus, class);
            for e in &census.entries {
                println!("n={} m={} count={}: {}", e.n, e.m, e.members.len(), e.members.join(" "));
            }
            println!("total {}", census.total());
            if let Some(path) = json {
                write_file(&path, &serde_json::to_string_pretty(&census)?)?;
            }
            return Ok(if census.unresolved.is_empty() { 0 } else { 2 });
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}
