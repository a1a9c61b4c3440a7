//! `cqf`: compute chromatic quasisymmetric functions exactly, verify the
//! coloring bijections and symmetry statements behind them, and classify
//! small connected DAGs.
//!
//! Exit codes: 0 success/pass, 1 verification failure, 2 usage error,
//! 3 size guard.

use clap::{Args, Parser, Subcommand, ValueEnum};
use cqf::bijections::{self, BijectionError, MapReport, DEFAULT_MAX_COLORINGS};
use cqf::engine::MAX_DP_VERTICES;
use cqf::families::{self, MountainGeometry, MountainSpec};
use cqf::graph::OrientedGraph;
use cqf_cli::compute::{compute, PalindromeCenter};
use cqf_cli::verify::{self, CheckOutcome};
use cqf_cli::{classify, exit_codes};
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "cqf",
    version,
    about = "Exact chromatic quasisymmetric functions"
)]
struct Cli {
    /// Emit machine-readable JSON instead of the human summary.
    #[arg(long, global = true)]
    json: bool,

    /// Number of worker threads (default: all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,

    /// Enumeration budget for coloring-class verification.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_COLORINGS)]
    max_colorings: usize,

    /// Directory for the classifier's one-record-per-file result cache.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// CQF of a graph with its symmetry/e-positivity/palindromicity report.
    Compute {
        #[command(flatten)]
        input: GraphInput,
        /// Center convention for the palindromicity diagnostic.
        #[arg(long, value_enum, default_value_t = CenterArg::Edges)]
        palindrome_center: CenterArg,
        /// Lift the default vertex guard (n <= 10).
        #[arg(long)]
        unsafe_large: bool,
    },
    /// Construct a family graph and print it (with geometry if it has one).
    Family {
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// Classify all small connected DAGs by CQF symmetry.
    Classify {
        #[arg(long)]
        max_n: usize,
        /// Recompute cache hits and require byte-identical records.
        #[arg(long)]
        recheck: bool,
        /// Allow the long-running n = 8 sweep.
        #[arg(long)]
        unsafe_large: bool,
    },
    /// Machine-check a statement (--theorem) or a coloring map (--map).
    Verify {
        /// One of: lemma-rev, lemma-source-sink, lemma-antichain, thm-dag,
        /// thm-product, cor-trees, cor-cycles, thm-mountain, thm-bottomless,
        /// thm-mixed, thm-swap, palindromic.
        #[arg(long, conflicts_with = "map")]
        theorem: Option<String>,
        /// One of: psi, cycle, reflect, swap, phi, l-auto.
        #[arg(long, value_enum)]
        map: Option<MapArg>,
        /// Sweep bound (vertex count) where the check is a sweep.
        #[arg(long)]
        max_n: Option<usize>,
        /// Color index for psi/cycle/l-auto (default: all applicable).
        #[arg(long)]
        a: Option<usize>,
        /// Swap site (0-based clique index).
        #[arg(long)]
        clique_index: Option<usize>,
        #[command(flatten)]
        input: GraphInput,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CenterArg {
    Edges,
    Own,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum MapArg {
    Psi,
    Cycle,
    Reflect,
    Swap,
    Phi,
    #[value(name = "l-auto")]
    LAuto,
}

#[derive(Args, Default)]
struct GraphInput {
    /// Path to a graph JSON file {"n": .., "edges": [[u,v], ..]}; "-" reads
    /// standard input.
    #[arg(long)]
    graph: Option<String>,
    #[command(flatten)]
    family: FamilyArgs,
}

#[derive(Args, Default)]
struct FamilyArgs {
    /// mountain | bottomless | mixed | nui | path | cycle | star
    #[arg(long)]
    family: Option<String>,
    /// Number of cliques (mountain families).
    #[arg(long)]
    p: Option<usize>,
    /// Clique size parameter (mountain families).
    #[arg(long)]
    k: Option<usize>,
    /// Clique tags for mixed mountains, e.g. "fbf".
    #[arg(long)]
    spec: Option<String>,
    /// Step function for unit interval graphs, e.g. "2,3,3".
    #[arg(long)]
    h: Option<String>,
    /// Vertex count (path, cycle, star).
    #[arg(long)]
    n: Option<usize>,
    /// Edge orientation bits for path/star, e.g. "101" (1 = forward/inward).
    #[arg(long)]
    bits: Option<String>,
}

enum CliError {
    Usage(String),
    SizeGuard(String),
    Failed(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => exit_codes::USAGE,
            CliError::SizeGuard(_) => exit_codes::SIZE_GUARD,
            CliError::Failed(_) => exit_codes::VERIFICATION_FAILED,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::SizeGuard(m) | CliError::Failed(m) => m,
        }
    }
}

fn usage(message: impl Into<String>) -> CliError {
    CliError::Usage(message.into())
}

impl FamilyArgs {
    fn is_set(&self) -> bool {
        self.family.is_some()
    }

    fn build(&self) -> Result<(OrientedGraph, Option<MountainGeometry>), CliError> {
        let name = self
            .family
            .as_deref()
            .ok_or_else(|| usage("no --family given"))?;
        let need = |value: Option<usize>, flag: &str| {
            value.ok_or_else(|| usage(format!("--family {name} requires --{flag}")))
        };
        let mountain_result =
            |r: Result<(OrientedGraph, MountainGeometry), families::FamilyError>| {
                r.map(|(g, geom)| (g, Some(geom)))
                    .map_err(|e| usage(e.to_string()))
            };
        match name {
            "mountain" => {
                mountain_result(families::mountain(need(self.p, "p")?, need(self.k, "k")?))
            }
            "bottomless" => mountain_result(families::bottomless_mountain(
                need(self.p, "p")?,
                need(self.k, "k")?,
            )),
            "mixed" => {
                let tags = self
                    .spec
                    .as_deref()
                    .ok_or_else(|| usage("--family mixed requires --spec"))?;
                let spec = MountainSpec::parse(need(self.k, "k")?, tags)
                    .map_err(|e| usage(e.to_string()))?;
                let (g, geom) = families::mixed_mountain(&spec);
                Ok((g, Some(geom)))
            }
            "nui" => {
                let h = self
                    .h
                    .as_deref()
                    .ok_or_else(|| usage("--family nui requires --h"))?;
                let values: Vec<usize> = h
                    .split(',')
                    .map(|s| s.trim().parse::<usize>())
                    .collect::<Result<_, _>>()
                    .map_err(|e| usage(format!("--h: {e}")))?;
                families::natural_unit_interval(&values)
                    .map(|g| (g, None))
                    .map_err(|e| usage(e.to_string()))
            }
            "path" => {
                let n = need(self.n, "n")?;
                if n == 0 {
                    return Err(usage("--n must be positive"));
                }
                let bits = self.parse_bits(n - 1, true)?;
                Ok((families::path_oriented(&bits), None))
            }
            "cycle" => {
                let n = need(self.n, "n")?;
                if n < 3 {
                    return Err(usage("cycles need --n >= 3"));
                }
                Ok((families::natural_cycle(n), None))
            }
            "star" => {
                let n = need(self.n, "n")?;
                if n < 2 {
                    return Err(usage("stars need --n >= 2"));
                }
                let bits = self.parse_bits(n - 1, true)?;
                Ok((families::oriented_star(n, &bits), None))
            }
            other => Err(usage(format!("unknown family {other:?}"))),
        }
    }

    fn parse_bits(&self, len: usize, default: bool) -> Result<Vec<bool>, CliError> {
        match self.bits.as_deref() {
            None => Ok(vec![default; len]),
            Some(s) => {
                let bits: Vec<bool> = s
                    .chars()
                    .map(|c| match c {
                        '1' => Ok(true),
                        '0' => Ok(false),
                        other => Err(usage(format!("--bits: unexpected character {other:?}"))),
                    })
                    .collect::<Result<_, _>>()?;
                if bits.len() != len {
                    return Err(usage(format!("--bits needs exactly {len} characters")));
                }
                Ok(bits)
            }
        }
    }
}

impl GraphInput {
    fn resolve(&self) -> Result<(OrientedGraph, Option<MountainGeometry>), CliError> {
        match (&self.graph, self.family.is_set()) {
            (Some(_), true) => Err(usage("--graph and --family are mutually exclusive")),
            (Some(path), false) => {
                let text = if path == "-" {
                    let mut buf = String::new();
                    std::io::stdin()
                        .read_to_string(&mut buf)
                        .map_err(|e| usage(format!("reading standard input: {e}")))?;
                    buf
                } else {
                    std::fs::read_to_string(path)
                        .map_err(|e| usage(format!("reading {path}: {e}")))?
                };
                let g: OrientedGraph = serde_json::from_str(&text)
                    .map_err(|e| usage(format!("parsing graph JSON: {e}")))?;
                Ok((g, None))
            }
            (None, true) => self.family.build(),
            (None, false) => Err(usage("provide a graph with --graph or --family")),
        }
    }
}

fn print_outcome(outcome: &CheckOutcome, json: bool) -> Result<(), CliError> {
    if json {
        println!(
            "{}",
            serde_json::to_string(outcome).map_err(|e| CliError::Failed(e.to_string()))?
        );
    } else {
        println!(
            "{}: {} ({})",
            outcome.id,
            if outcome.pass { "pass" } else { "FAIL" },
            outcome.detail
        );
        for c in &outcome.counterexamples {
            println!("  counterexample: {c}");
        }
    }
    if outcome.pass {
        Ok(())
    } else {
        Err(CliError::Failed(format!("{} failed", outcome.id)))
    }
}

fn print_map_report(report: &MapReport, json: bool) -> Result<(), CliError> {
    if json {
        println!(
            "{}",
            serde_json::to_string(report).map_err(|e| CliError::Failed(e.to_string()))?
        );
    } else {
        println!(
            "map {}: {} (domain {}, image {}, target {}; ascents preserved: {}, injective: {}, surjective: {})",
            report.map,
            if report.passed() { "pass" } else { "FAIL" },
            report.domain_size,
            report.image_size,
            report.target_size,
            report.ascent_preserved,
            report.injective,
            report.surjective,
        );
        println!("  content effect: {}", report.content_effect);
        if let Some(witness) = &report.non_image_witness {
            println!("  non-image witness: {witness:?}");
        }
        for c in &report.counterexamples {
            println!("  counterexample: {c}");
        }
    }
    if report.passed() {
        Ok(())
    } else {
        Err(CliError::Failed(format!("map {} failed", report.map)))
    }
}

fn map_bijection_error(err: BijectionError) -> CliError {
    match err {
        BijectionError::SizeGuard(m) => CliError::SizeGuard(m),
        other => usage(other.to_string()),
    }
}

fn run_verify_map(
    map: MapArg,
    input: &GraphInput,
    a: Option<usize>,
    clique_index: Option<usize>,
    max_colorings: usize,
    json: bool,
) -> Result<(), CliError> {
    let (graph, geometry) = input.resolve()?;
    let need_geometry = || {
        geometry
            .clone()
            .ok_or_else(|| usage("this map needs a mountain-family graph (use --family)"))
    };
    let report = match map {
        MapArg::Psi => bijections::verify_psi(&need_geometry()?, a, max_colorings),
        MapArg::Cycle => bijections::verify_cycle(&need_geometry()?, a, max_colorings),
        MapArg::Reflect => bijections::verify_reflect(&need_geometry()?, max_colorings),
        MapArg::Swap => {
            bijections::verify_swap(&need_geometry()?, clique_index.unwrap_or(0), max_colorings)
        }
        MapArg::LAuto => bijections::verify_l_automorphism(&need_geometry()?, a, max_colorings),
        MapArg::Phi => bijections::verify_phi(&graph, max_colorings),
    }
    .map_err(map_bijection_error)?;
    print_map_report(&report, json)
}

fn run_verify_theorem(
    id: &str,
    input: &GraphInput,
    max_n: Option<usize>,
    clique_index: Option<usize>,
    json: bool,
) -> Result<(), CliError> {
    let sweep_guard = |default: usize| -> usize { max_n.unwrap_or(default) };
    let as_failed = |e: anyhow::Error| {
        let text = e.to_string();
        if text.contains("size guard") {
            CliError::SizeGuard(text)
        } else {
            usage(text)
        }
    };
    let outcome = match id {
        "lemma-rev" => verify::lemma_rev(sweep_guard(5)).map_err(as_failed)?,
        "lemma-source-sink" => {
            let sweep = verify::sweep_connected_dags(sweep_guard(6)).map_err(as_failed)?;
            verify::lemma_source_sink(&sweep)
        }
        "lemma-antichain" => {
            let sweep = verify::sweep_connected_dags(sweep_guard(6)).map_err(as_failed)?;
            verify::lemma_antichain(&sweep)
        }
        "thm-dag" => {
            let sweep = verify::sweep_connected_dags(sweep_guard(6)).map_err(as_failed)?;
            verify::thm_dag(&sweep)
        }
        "palindromic" => {
            let sweep = verify::sweep_connected_dags(sweep_guard(6)).map_err(as_failed)?;
            verify::palindromicity(&sweep)
        }
        "thm-product" => verify::thm_product(sweep_guard(4)).map_err(as_failed)?,
        "cor-trees" => verify::cor_trees(sweep_guard(7)),
        "cor-cycles" => verify::cor_cycles(sweep_guard(7)),
        "thm-mountain" => verify::thm_mountain(sweep_guard(10)),
        "thm-bottomless" => verify::thm_bottomless(sweep_guard(10)),
        "thm-mixed" => verify::thm_mixed(sweep_guard(10)),
        "thm-swap" => {
            if input.family.spec.is_some() || input.family.k.is_some() {
                let tags = input
                    .family
                    .spec
                    .as_deref()
                    .ok_or_else(|| usage("thm-swap with --k also needs --spec"))?;
                let k = input
                    .family
                    .k
                    .ok_or_else(|| usage("thm-swap with --spec also needs --k"))?;
                let spec = MountainSpec::parse(k, tags).map_err(|e| usage(e.to_string()))?;
                let site = clique_index.unwrap_or_else(|| {
                    spec.cliques
                        .iter()
                        .zip(spec.cliques.iter().skip(1))
                        .position(|(a, b)| {
                            *a == families::CliqueKind::Full
                                && *b == families::CliqueKind::Bottomless
                        })
                        .unwrap_or(0)
                });
                verify::thm_swap_spec(&spec, site).map_err(|e| usage(e.to_string()))?
            } else {
                verify::thm_swap_all(sweep_guard(10))
            }
        }
        other => return Err(usage(format!("unknown theorem id {other:?}"))),
    };
    print_outcome(&outcome, json)
}

fn run(cli: Cli) -> Result<(), CliError> {
    if let Some(workers) = cli.workers {
        rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global()
            .map_err(|e| usage(format!("--workers: {e}")))?;
    }
    match &cli.command {
        Command::Compute {
            input,
            palindrome_center,
            unsafe_large,
        } => {
            let (graph, _) = input.resolve()?;
            let guard = if *unsafe_large { MAX_DP_VERTICES } else { 10 };
            if graph.n() > guard {
                return Err(CliError::SizeGuard(format!(
                    "graph has {} vertices; the guard is {guard}",
                    graph.n()
                )));
            }
            let report = compute(
                &graph,
                match palindrome_center {
                    CenterArg::Edges => PalindromeCenter::Edges,
                    CenterArg::Own => PalindromeCenter::Own,
                },
            );
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string(&report).map_err(|e| CliError::Failed(e.to_string()))?
                );
            } else {
                print!("{}", report.human_readable());
            }
            Ok(())
        }
        Command::Family { family } => {
            let (graph, geometry) = family.build()?;
            let value = match geometry {
                Some(geom) => serde_json::json!({
                    "graph": graph,
                    "geometry": geom.to_json(),
                }),
                None => serde_json::json!({ "graph": graph }),
            };
            println!(
                "{}",
                serde_json::to_string(&value).map_err(|e| CliError::Failed(e.to_string()))?
            );
            Ok(())
        }
        Command::Classify {
            max_n,
            recheck,
            unsafe_large,
        } => {
            let options = classify::ClassifyOptions {
                max_n: *max_n,
                cache_dir: cli.cache_dir.clone(),
                recheck: *recheck,
                allow_large: *unsafe_large,
            };
            let output = classify::classify(&options).map_err(|e| {
                let text = e.to_string();
                if text.contains("size guard") {
                    CliError::SizeGuard(text)
                } else {
                    CliError::Failed(text)
                }
            })?;
            for record in &output.records {
                println!(
                    "{}",
                    serde_json::to_string(record).map_err(|e| CliError::Failed(e.to_string()))?
                );
            }
            if !cli.json {
                let symmetric = output.records.iter().filter(|r| r.symmetric).count();
                eprintln!(
                    "classified {} classes ({} symmetric, {} cache hits, {} rechecked)",
                    output.records.len(),
                    symmetric,
                    output.cache_hits,
                    output.rechecked
                );
            }
            Ok(())
        }
        Command::Verify {
            theorem,
            map,
            max_n,
            a,
            clique_index,
            input,
        } => match (theorem, map) {
            (Some(id), None) => run_verify_theorem(id, input, *max_n, *clique_index, cli.json),
            (None, Some(map)) => {
                run_verify_map(*map, input, *a, *clique_index, cli.max_colorings, cli.json)
            }
            _ => Err(usage("verify needs exactly one of --theorem or --map")),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {}", err.message());
            ExitCode::from(err.code() as u8)
        }
    }
}
