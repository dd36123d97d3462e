//! Command-line front end. Exit codes: 0 for YES or accept, 1 for NO or
//! reject, 2 for errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bench::{agreement_suite, scaling_suite, CSV_HEADER};
use crate::error::{Error, Result};
use crate::format::{parse_instance, parse_solution, write_instance, write_solution};
use crate::kernels::{kernelize_dissimilarity, kernelize_similarity};
use crate::model::{Measure, StaticGraph};
use crate::reductions::{
    gen_from_3sat, gen_from_clique, gen_from_clique_vc, gen_from_hampath, random_instance,
    reduce_ede_to_vdv, reduce_eie_to_viv, CnfFormula, Literal, MulticoloredGraph,
};
use crate::repsets::solve_fpt_dissimilar;
use crate::solvers::{solve_naive, solve_xp};
use crate::verify::verify_solution;

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "mstp", version, about = "Multistage s-t path solver")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide an instance and optionally write a witness.
    Solve {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Algo::Auto)]
        algo: Algo,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check a solution against an instance.
    Verify {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        solution: PathBuf,
    },
    /// Write an equivalent kernel.
    Kernelize {
        #[arg(long, value_enum)]
        rule: Rule,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: PathBuf,
    },
    /// Transform an edge-measure instance into a vertex-measure one.
    Reduce {
        #[arg(long, value_enum)]
        from: From,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: PathBuf,
    },
    /// Generate an instance.
    Gen {
        #[command(subcommand)]
        kind: Gen,
    },
    /// Run a benchmark suite and print CSV.
    Bench {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Number of instances for the agreement suite.
        #[arg(long, default_value_t = 500)]
        count: usize,
        /// Runs per size for the scaling suite.
        #[arg(long, default_value_t = 3)]
        repeats: usize,
        /// Print 0 in the time column.
        #[arg(long)]
        no_timing: bool,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Algo {
    Auto,
    Xp,
    Fpt,
    Naive,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Rule {
    Dissimilar,
    Similar,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum From {
    Ede,
    Eie,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Suite {
    Scaling,
    Agreement,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum EdgeMeasure {
    Ede,
    Eie,
}

#[derive(Debug, Args)]
struct Out {
    /// Destination file; standard output when omitted.
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Debug, Subcommand)]
enum Gen {
    /// From a 3-CNF formula: DIMACS file or random.
    Sat {
        /// DIMACS CNF file with clauses of exactly three literals.
        #[arg(long, conflicts_with_all = ["vars", "clauses"])]
        cnf: Option<PathBuf>,
        #[arg(long, default_value_t = 3)]
        vars: usize,
        #[arg(long, default_value_t = 4)]
        clauses: usize,
        #[arg(long, value_enum, default_value_t = EdgeMeasure::Ede)]
        measure: EdgeMeasure,
        #[command(flatten)]
        out: Out,
    },
    /// From a random graph, preserving Hamiltonian paths.
    Hampath {
        #[arg(long, default_value_t = 6)]
        n: usize,
        #[arg(long, default_value_t = 8)]
        edges: usize,
        #[command(flatten)]
        out: Out,
    },
    /// From a random multicolored graph (edge symmetric difference).
    Clique {
        #[command(flatten)]
        graph: PartiteArgs,
        #[command(flatten)]
        out: Out,
    },
    /// From a random multicolored graph (vertex symmetric difference, ell = 1).
    Cliquevc {
        #[command(flatten)]
        graph: PartiteArgs,
        #[command(flatten)]
        out: Out,
    },
    /// Uniformly random instance with s = 0 and t = n - 1.
    Random {
        #[arg(long, default_value_t = 8)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        tau: usize,
        #[arg(long, default_value_t = 12)]
        edges: usize,
        #[arg(long, default_value_t = 4)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        ell: usize,
        #[arg(long, default_value = "vdv")]
        measure: String,
        #[command(flatten)]
        out: Out,
    },
}

#[derive(Debug, Args)]
struct PartiteArgs {
    #[arg(long, default_value_t = 3)]
    parts: usize,
    #[arg(long, default_value_t = 2)]
    part_size: usize,
    /// Probability of each edge between distinct parts.
    #[arg(long, default_value_t = 0.6)]
    density: f64,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn load_instance(path: &Path) -> Result<crate::ProblemInstance> {
    parse_instance(&read(path)?).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))
}

/// Parses a DIMACS CNF document whose clauses all have three literals.
fn parse_dimacs(text: &str) -> Result<CnfFormula> {
    let mut vars = None;
    let mut lits = Vec::new();
    let mut clauses = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
            continue;
        }
        let bad = |m: String| Error::Parse {
            line: i + 1,
            column: 1,
            message: m,
        };
        if let Some(rest) = line.strip_prefix('p') {
            let f: Vec<&str> = rest.split_whitespace().collect();
            match f.as_slice() {
                ["cnf", v, _] => vars = Some(v.parse::<usize>().map_err(|_| bad("bad variable count".into()))?),
                _ => return Err(bad("expected `p cnf <vars> <clauses>`".into())),
            }
            continue;
        }
        let n = vars.ok_or_else(|| bad("clause before problem line".into()))?;
        for tok in line.split_whitespace() {
            let x: i64 = tok.parse().map_err(|_| bad(format!("bad literal `{tok}`")))?;
            if x == 0 {
                let clause: [Literal; 3] = std::mem::take(&mut lits)
                    .try_into()
                    .map_err(|v: Vec<Literal>| bad(format!("clause has {} literals, expected 3", v.len())))?;
                clauses.push(clause);
                continue;
            }
            let var = x.unsigned_abs() as usize - 1;
            if var >= n {
                return Err(bad(format!("variable {} exceeds {n}", var + 1)));
            }
            lits.push(if x > 0 { Literal::pos(var) } else { Literal::neg(var) });
        }
    }
    if !lits.is_empty() {
        return Err(Error::InvalidInput("last clause is not terminated by 0".into()));
    }
    CnfFormula::new(vars.unwrap_or(0), clauses)
}

fn random_formula(vars: usize, clauses: usize, rng: &mut ChaCha8Rng) -> Result<CnfFormula> {
    if vars == 0 && clauses > 0 {
        return Err(Error::InvalidInput("clauses need at least one variable".into()));
    }
    let cl = (0..clauses)
        .map(|_| {
            std::array::from_fn(|_| Literal {
                var: rng.random_range(0..vars),
                positive: rng.random(),
            })
        })
        .collect();
    CnfFormula::new(vars, cl)
}

fn random_graph(n: usize, edges: usize, rng: &mut ChaCha8Rng) -> Result<StaticGraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    if edges > pairs.len() {
        return Err(Error::InvalidInput(format!("{edges} edges requested but only {} pairs exist", pairs.len())));
    }
    let picked = rand::seq::index::sample(rng, pairs.len(), edges);
    StaticGraph::new(n, picked.into_iter().map(|i| pairs[i]))
}

fn random_partite(a: &PartiteArgs, rng: &mut ChaCha8Rng) -> Result<MulticoloredGraph> {
    if !(0.0..=1.0).contains(&a.density) {
        return Err(Error::InvalidInput(format!("density {} outside [0, 1]", a.density)));
    }
    let parts: Vec<Vec<usize>> = (0..a.parts)
        .map(|p| (p * a.part_size..(p + 1) * a.part_size).collect())
        .collect();
    let mut edges = Vec::new();
    for p in 0..a.parts {
        for q in p + 1..a.parts {
            for &u in &parts[p] {
                for &v in &parts[q] {
                    if rng.random_bool(a.density) {
                        edges.push((u, v));
                    }
                }
            }
        }
    }
    MulticoloredGraph::new(parts, edges)
}

fn emit(out: &mut dyn Write, dest: &Option<PathBuf>, text: &str) -> Result<()> {
    match dest {
        Some(path) => write_file(path, text),
        None => out.write_all(text.as_bytes()).map_err(Error::from),
    }
}

fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match cli.command {
        Command::Solve { input, algo, output } => {
            let inst = load_instance(&input)?;
            let answer = match algo {
                Algo::Auto if inst.measure.is_dissimilarity() => solve_fpt_dissimilar(&inst)?,
                Algo::Auto | Algo::Xp => solve_xp(&inst)?,
                Algo::Fpt => solve_fpt_dissimilar(&inst)?,
                Algo::Naive => solve_naive(&inst),
            };
            match answer {
                Some(seq) => {
                    writeln!(out, "YES")?;
                    if let Some(path) = output {
                        write_file(&path, &write_solution(&seq))?;
                    }
                    Ok(EXIT_YES)
                }
                None => {
                    writeln!(out, "NO")?;
                    Ok(EXIT_NO)
                }
            }
        }
        Command::Verify { instance, solution } => {
            let inst = load_instance(&instance)?;
            let seq = parse_solution(&read(&solution)?)
                .map_err(|e| Error::InvalidInput(format!("{}: {e}", solution.display())))?;
            let report = verify_solution(&inst, &seq);
            writeln!(out, "{report}")?;
            Ok(if report.accepted() { EXIT_YES } else { EXIT_NO })
        }
        Command::Kernelize { rule, input, output } => {
            let inst = load_instance(&input)?;
            let kr = match rule {
                Rule::Dissimilar => kernelize_dissimilarity(&inst)?,
                Rule::Similar => kernelize_similarity(&inst)?,
            };
            write_file(&output, &write_instance(&kr.instance))?;
            writeln!(
                out,
                "original_n {} kernel_n {} bound {}",
                kr.stats.original_n, kr.stats.kernel_n, kr.stats.bound_value
            )?;
            Ok(EXIT_YES)
        }
        Command::Reduce { from, input, output } => {
            let inst = load_instance(&input)?;
            let art = match from {
                From::Ede => reduce_ede_to_vdv(&inst)?,
                From::Eie => reduce_eie_to_viv(&inst)?,
            };
            write_file(&output, &write_instance(&art.instance))?;
            let t = &art.instance;
            writeln!(out, "n {} k {} ell {} measure {}", t.n(), t.k, t.ell, t.measure)?;
            Ok(EXIT_YES)
        }
        Command::Gen { kind } => {
            let (inst, dest) = match kind {
                Gen::Sat {
                    cnf,
                    vars,
                    clauses,
                    measure,
                    out: o,
                } => {
                    let mut rng = ChaCha8Rng::seed_from_u64(o.seed);
                    let f = match cnf {
                        Some(path) => parse_dimacs(&read(&path)?)?,
                        None => random_formula(vars, clauses, &mut rng)?,
                    };
                    let m = match measure {
                        EdgeMeasure::Ede => Measure::Ede,
                        EdgeMeasure::Eie => Measure::Eie,
                    };
                    (gen_from_3sat(&f, m)?, o.output)
                }
                Gen::Hampath { n, edges, out: o } => {
                    let mut rng = ChaCha8Rng::seed_from_u64(o.seed);
                    (gen_from_hampath(&random_graph(n, edges, &mut rng)?)?, o.output)
                }
                Gen::Clique { graph, out: o } => {
                    let mut rng = ChaCha8Rng::seed_from_u64(o.seed);
                    (gen_from_clique(&random_partite(&graph, &mut rng)?)?, o.output)
                }
                Gen::Cliquevc { graph, out: o } => {
                    let mut rng = ChaCha8Rng::seed_from_u64(o.seed);
                    (gen_from_clique_vc(&random_partite(&graph, &mut rng)?)?, o.output)
                }
                Gen::Random {
                    n,
                    tau,
                    edges,
                    k,
                    ell,
                    measure,
                    out: o,
                } => {
                    let m: Measure = measure.parse()?;
                    (random_instance(n, tau, edges, k, ell, m, o.seed)?, o.output)
                }
            };
            emit(out, &dest, &write_instance(&inst))?;
            Ok(EXIT_YES)
        }
        Command::Bench {
            suite,
            seed,
            count,
            repeats,
            no_timing,
        } => {
            writeln!(out, "{CSV_HEADER}")?;
            match suite {
                Suite::Agreement => {
                    let report = agreement_suite(seed, count)?;
                    for row in &report.rows {
                        writeln!(out, "{}", row.csv(!no_timing))?;
                    }
                    for d in &report.disagreements {
                        writeln!(err, "{d}")?;
                    }
                    writeln!(
                        err,
                        "{} instances, {} disagreements",
                        report.instances,
                        report.disagreements.len()
                    )?;
                    Ok(if report.disagreements.is_empty() { EXIT_YES } else { EXIT_NO })
                }
                Suite::Scaling => {
                    let report = scaling_suite(seed, repeats)?;
                    for row in &report.rows {
                        writeln!(out, "{}", row.csv(!no_timing))?;
                    }
                    for (tau, r) in &report.ratios {
                        writeln!(err, "tau {tau}: time per snapshot {r:.3}x of the smallest")?;
                    }
                    Ok(if report.linear() { EXIT_YES } else { EXIT_NO })
                }
            }
        }
    }
}

/// Runs the command line `args` (including the program name) and returns the
/// exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                EXIT_ERROR
            } else {
                let _ = write!(out, "{}", e.render());
                EXIT_YES
            };
            return code;
        }
    };
    match run(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let (mut o, mut e) = (Vec::new(), Vec::new());
        let code = run_with(std::iter::once("mstp").chain(args.iter().copied()), &mut o, &mut e);
        (code, String::from_utf8(o).unwrap(), String::from_utf8(e).unwrap())
    }

    #[test]
    fn dimacs_parsing() {
        let f = parse_dimacs("c hi\np cnf 3 2\n1 -2 3 0\n-1 2 -3 0\n").unwrap();
        assert_eq!(f.clauses.len(), 2);
        assert!(f.clauses[0][1] == Literal::neg(1));
        assert!(parse_dimacs("p cnf 2 1\n1 2 0\n").is_err());
        assert!(parse_dimacs("p cnf 2 1\n1 2 3 0\n").is_err());
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_args(&["frobnicate"]).0, EXIT_ERROR);
        assert_eq!(run_args(&["solve"]).0, EXIT_ERROR);
        let (code, out, _) = run_args(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("solve"));
    }

    #[test]
    fn gen_is_deterministic() {
        let a = run_args(&["gen", "random", "--seed", "9"]);
        let b = run_args(&["gen", "random", "--seed", "9"]);
        assert_eq!(a, b);
        assert!(a.1.starts_with("mstp 1\n"));
        assert_eq!(run_args(&["gen", "random", "--measure", "xyz"]).0, EXIT_ERROR);
    }
}
