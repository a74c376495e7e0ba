//! Command-line surface of `gcontract`.
//!
//! Exit codes: 0 on success, 1 when input validation or a verification
//! fails, 2 on usage errors.

use std::fs;
use std::io::{self, BufRead, BufReader, Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use colour_contraction::generators::invert_permutation;
use colour_contraction::invariants::trace_violations;
use colour_contraction::io::ParseError;
use colour_contraction::oracle::canonical_set_of_sets;
use colour_contraction::{
    contract_to_fixpoint, equivalent_contractions, eval_colour_partition, export_dot, generate_fib_instance,
    parse_graph_str, permute_enumeration, serialize_graph, simple_gamma_contraction, ColouredGraph, ContractOptions,
    EdgeTarget, MergeStrategy, RandomSpec, Role, RunStats,
};
use serde::Serialize;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "gcontract", version, about = "Colour contraction of vertex-coloured graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Contract a graph to its colour contraction by iterated beta steps
    Contract {
        /// Input graph file, `-` for stdin
        input: String,
        /// Where to write the contracted graph, `-` for stdout
        #[arg(long)]
        out: Option<String>,
        /// Where to write JSON run statistics, `-` for stdout
        #[arg(long)]
        stats: Option<String>,
        /// Include every per-iteration map in the statistics
        #[arg(long)]
        trace: bool,
        /// Relabel the input by a random permutation before contracting
        #[arg(long)]
        permute_seed: Option<u64>,
        #[arg(long, value_enum, default_value_t = Scratchpad::Faithful)]
        scratchpad: Scratchpad,
    },
    /// Contract a graph with the traversal-based reference
    Oracle {
        input: String,
        #[arg(long)]
        out: Option<String>,
    },
    /// Check the beta engine against the reference on one graph
    Verify {
        input: String,
        /// Also check random relabellings with these seeds
        #[arg(long, num_args = 1..)]
        seeds: Vec<u64>,
    },
    /// Generate instances
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Render a graph as Graphviz DOT
    ExportDot {
        input: String,
        /// Style vertices by the role labels stored in the file
        #[arg(long)]
        roles: bool,
    },
    /// Time contractions of random graphs
    Bench {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 1)]
        colours: u32,
        /// Number of seeds, run as 0..K
        #[arg(long, default_value_t = 1)]
        seeds: u64,
        #[arg(long, value_enum, default_value_t = Scratchpad::Faithful)]
        scratchpad: Scratchpad,
    },
}

#[derive(Debug, Subcommand)]
enum GenKind {
    /// Worst-case instance of the given level
    Fib {
        #[arg(long)]
        level: usize,
        /// Record role labels as a comment line
        #[arg(long)]
        roles: bool,
    },
    /// Seeded Erdős–Rényi graph with random colours
    Random(RandomArgs),
}

#[derive(Debug, Args)]
struct RandomArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, conflicts_with = "p", required_unless_present = "p")]
    m: Option<usize>,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long, default_value_t = 1)]
    colours: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Scratchpad {
    Faithful,
    Epoch,
}

impl From<Scratchpad> for MergeStrategy {
    fn from(s: Scratchpad) -> Self {
        match s {
            Scratchpad::Faithful => MergeStrategy::Faithful,
            Scratchpad::Epoch => MergeStrategy::Epoch,
        }
    }
}

const ROLES_PREFIX: &str = "# roles:";

/// Failure that maps to exit code 1.
#[derive(Debug)]
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

struct Streams<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
}

impl Streams<'_> {
    fn read_input(&mut self, path: &str) -> Result<String, Failure> {
        if path == "-" {
            let mut text = String::new();
            self.stdin.read_to_string(&mut text)?;
            Ok(text)
        } else {
            fs::read_to_string(path).map_err(|e| Failure(format!("{path}: {e}")))
        }
    }

    fn write_output(&mut self, target: Option<&str>, text: &str) -> Result<(), Failure> {
        match target {
            None | Some("-") => Ok(self.stdout.write_all(text.as_bytes())?),
            Some(path) => fs::write(PathBuf::from(path), text).map_err(|e| Failure(format!("{path}: {e}"))),
        }
    }

    fn read_graph(&mut self, path: &str) -> Result<(ColouredGraph, String), Failure> {
        let text = self.read_input(path)?;
        let graph = parse_graph_str(&text).map_err(|e: ParseError| Failure(format!("{path}: {e}")))?;
        Ok((graph, text))
    }
}

/// Runs the CLI with process streams and returns the exit code.
pub fn run_cli<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdin = io::stdin();
    let mut stdin = BufReader::new(stdin.lock());
    let stdout = io::stdout();
    let mut stdout = stdout.lock();
    let stderr = io::stderr();
    let mut stderr = stderr.lock();
    run_cli_with(args, &mut stdin, &mut stdout, &mut stderr)
}

/// Runs the CLI against the given streams and returns the exit code.
pub fn run_cli_with<I, T>(args: I, stdin: &mut dyn BufRead, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let mut streams = Streams { stdin, stdout, stderr };
    let outcome = dispatch(cli.command, &mut streams);
    let _ = streams.stdout.flush();
    match outcome {
        Ok(code) => code,
        Err(Failure(msg)) => {
            let _ = writeln!(streams.stderr, "error: {msg}");
            EXIT_FAILURE
        }
    }
}

#[derive(Serialize)]
struct TraceDump<'a> {
    total_map: &'a [usize],
    becomes: Vec<&'a [usize]>,
}

#[derive(Serialize)]
struct StatsWithTrace<'a> {
    #[serde(flatten)]
    stats: &'a RunStats,
    #[serde(skip_serializing_if = "Option::is_none")]
    permutation: Option<&'a [usize]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<TraceDump<'a>>,
}

#[derive(Serialize)]
struct BenchRow {
    seed: u64,
    n: usize,
    m: usize,
    colours: u32,
    iterations: usize,
    final_n: usize,
    final_m: usize,
    contract_ms: f64,
}

fn dispatch(command: Command, io: &mut Streams<'_>) -> Result<i32, Failure> {
    match command {
        Command::Contract { input, out, stats, trace, permute_seed, scratchpad } => {
            let (graph, _) = io.read_graph(&input)?;
            let (graph, permutation) = match permute_seed {
                Some(seed) => {
                    let (g, perm) = permute_enumeration(&graph, seed);
                    (g, Some(perm))
                }
                None => (graph, None),
            };
            let options = ContractOptions { merge: scratchpad.into(), ..Default::default() };
            let (result, run) = contract_to_fixpoint(&graph, &options)?;
            let run_stats = RunStats::from_trace(&graph, &result, &run);
            let graph_target = match (&out, &stats) {
                (Some(path), _) => Some(path.as_str()),
                (None, Some(s)) if s == "-" => None,
                (None, _) => Some("-"),
            };
            if let Some(target) = graph_target {
                io.write_output(Some(target), &serialize_graph(&result))?;
            }
            if let Some(target) = stats {
                let dump = StatsWithTrace {
                    stats: &run_stats,
                    permutation: permutation.as_deref(),
                    trace: trace.then(|| TraceDump {
                        total_map: &run.total_map,
                        becomes: run.per_iteration.iter().map(|r| r.mapping.becomes()).collect(),
                    }),
                };
                let json = serde_json::to_string_pretty(&dump)? + "\n";
                io.write_output(Some(&target), &json)?;
            }
            Ok(EXIT_OK)
        }
        Command::Oracle { input, out } => {
            let (graph, _) = io.read_graph(&input)?;
            let (result, _) = simple_gamma_contraction(&graph);
            io.write_output(out.as_deref(), &serialize_graph(&result))?;
            Ok(EXIT_OK)
        }
        Command::Verify { input, seeds } => {
            let (graph, _) = io.read_graph(&input)?;
            let failures = verify_graph(&graph, &seeds);
            for f in &failures {
                writeln!(io.stdout, "FAIL {f}")?;
            }
            if failures.is_empty() {
                writeln!(io.stdout, "OK n={} seeds={}", graph.n(), seeds.len())?;
                Ok(EXIT_OK)
            } else {
                Ok(EXIT_FAILURE)
            }
        }
        Command::Gen { kind: GenKind::Fib { level, roles } } => {
            let inst = generate_fib_instance(level)?;
            let mut text = String::new();
            if roles {
                let labels: Vec<String> = inst.roles.iter().map(Role::to_string).collect();
                text.push_str(&format!("{ROLES_PREFIX} {}\n", labels.join(" ")));
            }
            text.push_str(&serialize_graph(&inst.graph));
            io.write_output(None, &text)?;
            Ok(EXIT_OK)
        }
        Command::Gen { kind: GenKind::Random(args) } => {
            let edges = match (args.m, args.p) {
                (Some(m), _) => EdgeTarget::Count(m),
                (None, Some(p)) => EdgeTarget::Probability(p),
                (None, None) => unreachable!("clap requires --m or --p"),
            };
            let spec = RandomSpec { n: args.n, edges, colour_count: args.colours, seed: args.seed };
            let graph = spec.build()?;
            io.write_output(None, &serialize_graph(&graph))?;
            Ok(EXIT_OK)
        }
        Command::ExportDot { input, roles } => {
            let (graph, text) = io.read_graph(&input)?;
            let labels = if roles { Some(parse_roles(&text, graph.n())?) } else { None };
            io.write_output(None, &export_dot(&graph, labels.as_deref()))?;
            Ok(EXIT_OK)
        }
        Command::Bench { n, m, colours, seeds, scratchpad } => {
            let options = ContractOptions { merge: scratchpad.into(), ..Default::default() };
            for seed in 0..seeds {
                let spec = RandomSpec { n, edges: EdgeTarget::Count(m), colour_count: colours, seed };
                let graph = spec.build()?;
                let started = Instant::now();
                let (result, run) = contract_to_fixpoint(&graph, &options)?;
                let row = BenchRow {
                    seed,
                    n,
                    m: graph.m(),
                    colours,
                    iterations: run.iterations,
                    final_n: result.n(),
                    final_m: result.m(),
                    contract_ms: started.elapsed().as_secs_f64() * 1e3,
                };
                writeln!(io.stdout, "{}", serde_json::to_string(&row)?)?;
            }
            Ok(EXIT_OK)
        }
    }
}

fn parse_roles(text: &str, n: usize) -> Result<Vec<Role>, Failure> {
    let line = text
        .lines()
        .find_map(|l| l.trim().strip_prefix(ROLES_PREFIX))
        .ok_or_else(|| Failure("no role labels in input (generate with `gen fib --roles`)".into()))?;
    let roles = line
        .split_whitespace()
        .map(|t| match t {
            "P" => Ok(Role::P),
            "Q" => Ok(Role::Q),
            "R\\P" => Ok(Role::RootOnly),
            other => Err(Failure(format!("unknown role label {other:?}"))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    if roles.len() != n {
        return Err(Failure(format!("{} role labels for {n} vertices", roles.len())));
    }
    Ok(roles)
}

/// Everything `verify` checks; returns one message per failed check.
pub fn verify_graph(graph: &ColouredGraph, seeds: &[u64]) -> Vec<String> {
    let mut failures = Vec::new();
    let oracle = eval_colour_partition(graph);
    let expected = oracle.canonical_blocks();
    let mut results = Vec::new();
    for merge in [MergeStrategy::Faithful, MergeStrategy::Epoch] {
        let options = ContractOptions { merge, keep_graphs: true, ..Default::default() };
        match contract_to_fixpoint(graph, &options) {
            Ok((result, trace)) => {
                if !equivalent_contractions(graph, &result, &trace, &oracle) {
                    failures.push(format!("{merge:?}: beta contraction differs from the reference"));
                }
                failures.extend(trace_violations(graph, &result, &trace).iter().map(|v| format!("{merge:?}: {v}")));
                results.push(result);
            }
            Err(e) => failures.push(format!("{merge:?}: {e}")),
        }
    }
    if results.len() == 2 && results[0] != results[1] {
        failures.push("scratchpad variants disagree".into());
    }
    for &seed in seeds {
        let (permuted, perm) = permute_enumeration(graph, seed);
        let inverse = invert_permutation(&perm);
        match contract_to_fixpoint(&permuted, &ContractOptions::default()) {
            Ok((_, trace)) => {
                let mut fibres = vec![Vec::new(); trace.per_iteration.last().map_or(permuted.n(), |r| r.n_prime)];
                for (v, &t) in trace.total_map.iter().enumerate() {
                    fibres[t].push(inverse[v]);
                }
                if canonical_set_of_sets(fibres) != expected {
                    failures.push(format!("seed {seed}: partition differs after relabelling"));
                }
            }
            Err(e) => failures.push(format!("seed {seed}: {e}")),
        }
    }
    failures
}
