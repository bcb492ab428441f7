//! Command-line front end: instance generation, genus/dual/branchwidth
//! queries on `.emb`/`.hemb` files, and seeded verification campaigns with
//! machine-readable reports.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use branchdual::gen::{self, Campaign, GenOptions, HyperGenOptions};
use branchdual::hypergraph::EmbeddedHypergraph;
use branchdual::lemmas::{run_campaign, LemmaName, VerificationReport};
use branchdual::solver::{self, MeasureKind};
use branchdual::{decomposition, io, EmbeddedGraph};

#[derive(Parser)]
#[command(name = "branchdual", version, about = "Branch decompositions and duals of surface-embedded (hyper)graphs")]
struct Cli {
    /// Worker threads for campaign verification (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Measure {
    Delta,
    Mu,
}

#[derive(Subcommand)]
enum Command {
    /// Face count and Euler genus of an embedded graph.
    Genus {
        file: PathBuf,
    },
    /// Dual of a connected embedded graph or hypergraph.
    Dual {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Branchwidth of a graph (`.emb`) or hypergraph (`.hemb`).
    Bw {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "delta")]
        measure: Measure,
        /// Restrict to connected decompositions (delta measure only).
        #[arg(long)]
        connected: bool,
        /// Greedy bisection instead of the exact subset DP.
        #[arg(long, conflicts_with = "connected")]
        heuristic: bool,
    },
    /// Run verification campaigns and write instance files plus a report.
    Verify(VerifyArgs),
    /// Generate seeded instances.
    Gen(GenArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Lemma checker name or 'all'.
    #[arg(long)]
    lemma: Vec<String>,
    /// Self-duality theorem to verify: 1 (graphs) or 2 (hypergraphs).
    #[arg(long)]
    theorem: Vec<u8>,
    /// Also run standalone reduction traces.
    #[arg(long)]
    traces: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 50)]
    count: usize,
    #[arg(long, default_value_t = 10)]
    max_edges: usize,
    #[arg(long, default_value_t = 2)]
    max_genus: u32,
    /// Campaign output directory (instances + aggregate report).
    #[arg(long, default_value = "campaign")]
    out: PathBuf,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 10)]
    count: usize,
    #[arg(long, default_value_t = 10)]
    max_edges: usize,
    #[arg(long, default_value_t = 2)]
    max_genus: u32,
    #[arg(long)]
    loopless: bool,
    #[arg(long)]
    bridgeless: bool,
    /// Generate hypergraphs (`.hemb`) instead of graphs.
    #[arg(long)]
    hyper: bool,
    /// Output directory; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.jobs > 0 {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.jobs)
            .build_global();
    }
    match run(cli.command) {
        Ok(all_passed) => {
            if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn is_hemb(path: &Path) -> bool {
    path.extension().is_some_and(|e| e == "hemb")
}

fn read_graph(path: &Path) -> branchdual::Result<EmbeddedGraph> {
    let text = std::fs::read_to_string(path)?;
    if text.trim_start().starts_with('{') {
        io::parse_emb_json(&text)
    } else {
        io::parse_emb(&text)
    }
}

fn read_hypergraph(path: &Path) -> branchdual::Result<EmbeddedHypergraph> {
    let text = std::fs::read_to_string(path)?;
    if text.trim_start().starts_with('{') {
        io::parse_hemb_json(&text)
    } else {
        io::parse_hemb(&text)
    }
}

fn run(command: Command) -> branchdual::Result<bool> {
    match command {
        Command::Genus { file } => {
            let g = read_graph(&file)?;
            let (cc, _) = g.connected_components();
            let out = json!({
                "file": file.display().to_string(),
                "vertices": g.num_vertices(),
                "edges": g.num_edges(),
                "faces": g.trace_faces().len(),
                "components": cc,
                "euler_genus": g.euler_genus(),
            });
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
            Ok(true)
        }
        Command::Dual { file, format } => {
            if is_hemb(&file) {
                let h = read_hypergraph(&file)?;
                let dual = h.hyper_dual()?.dual;
                match format {
                    Format::Json => println!("{}", io::emit_hemb_json(&dual)),
                    _ => print!("{}", io::emit_hemb(&dual)),
                }
            } else {
                let g = read_graph(&file)?;
                let dual = g.dual()?.graph;
                match format {
                    Format::Json => println!("{}", io::emit_emb_json(&dual)),
                    _ => print!("{}", io::emit_emb(&dual)),
                }
            }
            Ok(true)
        }
        Command::Bw {
            file,
            measure,
            connected,
            heuristic,
        } => {
            let (value, tree, explored, ground) = if is_hemb(&file) {
                let h = read_hypergraph(&file)?;
                let ground = h.hyperedge_ids();
                if measure == Measure::Mu {
                    return Err(branchdual::Error::Precondition(
                        "the mu measure is defined for graphs only".to_string(),
                    ));
                }
                if connected {
                    return Err(branchdual::Error::Precondition(
                        "connected decompositions are searched for graphs only".to_string(),
                    ));
                }
                let res = if heuristic {
                    solver::heuristic_bw(&ground, |f| h.hyper_delta(f))?
                } else {
                    solver::exact_bw_set(&ground, |f| h.hyper_delta(f), solver::exact_cap())?
                };
                (
                    res.value,
                    res.tree.to_paren_string(),
                    res.explored,
                    ground.len(),
                )
            } else {
                let g = read_graph(&file)?;
                let kind = match measure {
                    Measure::Delta => MeasureKind::Delta,
                    Measure::Mu => MeasureKind::Mu,
                };
                let res = if connected {
                    if measure == Measure::Mu {
                        return Err(branchdual::Error::Precondition(
                            "connected decompositions are evaluated under delta".to_string(),
                        ));
                    }
                    solver::exact_connected_bw(&g)?
                } else if heuristic {
                    solver::heuristic_bw_graph(&g, kind)?
                } else {
                    solver::exact_bw(&g, kind)?
                };
                if connected {
                    debug_assert!(decomposition::is_connected_decomposition(&g, &res.tree));
                }
                (
                    res.value,
                    res.tree.to_paren_string(),
                    res.explored,
                    g.num_edges(),
                )
            };
            let out = json!({
                "file": file.display().to_string(),
                "measure": match measure { Measure::Delta => "delta", Measure::Mu => "mu" },
                "mode": if heuristic { "heuristic" } else if connected { "exact-connected" } else { "exact" },
                "ground_size": ground,
                "value": value,
                "tree": tree,
                "explored": explored,
            });
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
            Ok(true)
        }
        Command::Verify(args) => verify(args),
        Command::Gen(args) => generate(args),
    }
}

fn verify(args: VerifyArgs) -> branchdual::Result<bool> {
    let mut targets: std::collections::BTreeSet<String> = std::collections::BTreeSet::new();
    for name in &args.lemma {
        if name == "all" {
            targets.extend(LemmaName::ALL.iter().map(|l| l.as_str().to_string()));
        } else {
            let lemma = LemmaName::parse(name).ok_or_else(|| {
                branchdual::Error::Precondition(format!("unknown lemma {name:?}"))
            })?;
            targets.insert(lemma.as_str().to_string());
        }
    }
    for t in &args.theorem {
        match t {
            1 => targets.insert("theorem-1".to_string()),
            2 => targets.insert("theorem-2".to_string()),
            other => {
                return Err(branchdual::Error::Precondition(format!(
                    "unknown theorem {other}; expected 1 or 2"
                )))
            }
        };
    }
    if args.traces {
        targets.insert("traces".to_string());
    }
    if targets.is_empty() {
        return Err(branchdual::Error::Precondition(
            "nothing to verify: pass --lemma, --theorem, or --traces".to_string(),
        ));
    }
    let campaign = Campaign {
        seed: args.seed,
        count: args.count,
        max_edges: args.max_edges,
        max_genus: args.max_genus,
        targets,
    };
    let reports: Vec<VerificationReport> = run_campaign(&campaign)?;

    std::fs::create_dir_all(&args.out)?;
    std::fs::write(
        args.out.join("campaign.json"),
        serde_json::to_string_pretty(&campaign).unwrap(),
    )?;
    write_campaign_instances(&args)?;
    let all_pass = reports.iter().all(|r| r.pass);
    match args.format {
        Format::Csv => {
            let mut csv = String::from("check,seed,instance,pass,detail,measured\n");
            for r in &reports {
                let measured = serde_json::to_string(&r.measured).unwrap().replace('"', "\"\"");
                csv.push_str(&format!(
                    "{},{},{},{},{},\"{}\"\n",
                    r.check,
                    r.seed.map(|s| s.to_string()).unwrap_or_default(),
                    r.instance,
                    r.pass,
                    r.detail.clone().unwrap_or_default().replace(',', ";"),
                    measured
                ));
            }
            std::fs::write(args.out.join("report.csv"), csv)?;
        }
        _ => {
            let payload = serde_json::to_string_pretty(&reports).unwrap();
            std::fs::write(args.out.join("report.json"), payload)?;
        }
    }
    let passed = reports.iter().filter(|r| r.pass).count();
    println!(
        "{} checks, {} passed, {} failed; report in {}",
        reports.len(),
        passed,
        reports.len() - passed,
        args.out.display()
    );
    Ok(all_pass)
}

/// One instance file per campaign index, so any failure can be replayed in
/// isolation.
fn write_campaign_instances(args: &VerifyArgs) -> branchdual::Result<()> {
    let dir = args.out.join("instances");
    std::fs::create_dir_all(&dir)?;
    let opts = GenOptions::new(args.max_edges, args.max_genus)
        .loopless()
        .bridgeless();
    for (i, (name, g)) in gen::instances(args.seed, args.count, &opts)?
        .into_iter()
        .enumerate()
    {
        std::fs::write(dir.join(format!("{i:04}-{name}.emb")), io::emit_emb(&g))?;
    }
    if args.theorem.contains(&2) {
        let hopts = HyperGenOptions::new(args.max_edges.max(4), args.max_genus);
        for (i, (name, h)) in gen::hyper_instances(args.seed, args.count, &hopts)?
            .into_iter()
            .enumerate()
        {
            std::fs::write(dir.join(format!("{i:04}-{name}.hemb")), io::emit_hemb(&h))?;
        }
    }
    Ok(())
}

fn generate(args: GenArgs) -> branchdual::Result<bool> {
    if let Some(dir) = &args.out {
        std::fs::create_dir_all(dir)?;
    }
    let emit = |name: String, text: String, json_text: String, ext: &str| -> branchdual::Result<()> {
        let body = if args.format == Format::Json {
            json_text
        } else {
            text
        };
        match &args.out {
            Some(dir) => std::fs::write(dir.join(format!("{name}.{ext}")), body)?,
            None => {
                println!("# {name}");
                print!("{body}");
                if args.format == Format::Json {
                    println!();
                }
            }
        }
        Ok(())
    };
    if args.hyper {
        let opts = HyperGenOptions::new(args.max_edges, args.max_genus);
        for (i, (name, h)) in gen::hyper_instances(args.seed, args.count, &opts)?
            .into_iter()
            .enumerate()
        {
            emit(
                format!("{i:04}-{name}"),
                io::emit_hemb(&h),
                io::emit_hemb_json(&h),
                "hemb",
            )?;
        }
    } else {
        let mut opts = GenOptions::new(args.max_edges, args.max_genus);
        if args.loopless {
            opts = opts.loopless();
        }
        if args.bridgeless {
            opts = opts.bridgeless();
        }
        for (i, (name, g)) in gen::instances(args.seed, args.count, &opts)?
            .into_iter()
            .enumerate()
        {
            emit(
                format!("{i:04}-{name}"),
                io::emit_emb(&g),
                io::emit_emb_json(&g),
                "emb",
            )?;
        }
    }
    Ok(true)
}
