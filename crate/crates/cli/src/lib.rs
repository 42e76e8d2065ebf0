//! Command-line front end for the simultaneous Padé solvers.
//!
//! Exit codes: 0 success, 1 parse/validation error or bad parameters,
//! 2 solver precondition failure, 3 empty solution set (output still
//! written), 4 a verified invariant failed.

pub mod format;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use simpade_core::oracle::{oracle_solution_space, spec_matches_oracle};
use simpade_core::simpade::check_spec;
use simpade_core::{
    direct_sim_pade, duality_sim_pade, recursive_sim_pade, Error as CoreError, Poly, PrimeField,
    ProblemInstance, SolutionSpec,
};

use format::{instance_hash, InstanceFile, OracleFile, SpecFile};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_EMPTY: i32 = 3;
pub const EXIT_INVARIANT: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "simpade", version, about = "Simultaneous Padé approximation over GF(p)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve an instance and write a solution specification.
    Solve {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        algo: Algo,
        #[arg(long)]
        output: PathBuf,
    },
    /// Check a solution specification against an instance.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        spec: PathBuf,
    },
    /// Check that two specifications describe the same solution space.
    VerifyEquiv {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        other: PathBuf,
    },
    /// Time solvers on random instances with moduli x^d; prints CSV.
    Bench {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_delimiter = ',', default_value = "direct,recursive")]
        algos: Vec<Algo>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Direct,
    Duality,
    Recursive,
    Oracle,
}

impl Algo {
    fn name(self) -> &'static str {
        match self {
            Algo::Direct => "direct",
            Algo::Duality => "duality",
            Algo::Recursive => "recursive",
            Algo::Oracle => "oracle",
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
        }
    };
    let result = match cli.command {
        Command::Solve { input, algo, output } => cmd_solve(&input, algo, &output),
        Command::Verify { input, spec } => cmd_verify(&input, &spec),
        Command::VerifyEquiv { input, spec, other } => cmd_verify_equiv(&input, &spec, &other),
        Command::Bench { n, d, p, seed, algos } => cmd_bench(n, d, p, seed, &algos),
    };
    match result {
        Ok(code) => code,
        Err(Failure { code, message }) => {
            eprintln!("error: {message}");
            code
        }
    }
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

fn fail(code: i32, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| fail(EXIT_PARSE, format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| fail(EXIT_PARSE, format!("{}: {e}", path.display())))
}

fn load_instance(path: &Path) -> Result<ProblemInstance, Failure> {
    let text = read(path)?;
    InstanceFile::parse(&text)
        .and_then(|f| f.to_instance())
        .map_err(|e| fail(EXIT_PARSE, format!("{}: {e}", path.display())))
}

fn load_spec(path: &Path, field: PrimeField) -> Result<(SpecFile, SolutionSpec), Failure> {
    let text = read(path)?;
    let file = SpecFile::parse(&text).map_err(|e| fail(EXIT_PARSE, format!("{}: {e}", path.display())))?;
    let spec = file
        .to_spec(field)
        .map_err(|e| fail(EXIT_PARSE, format!("{}: {e}", path.display())))?;
    Ok((file, spec))
}

fn solver_failure(e: CoreError) -> Failure {
    match e {
        CoreError::InvalidInstance(_) => fail(EXIT_PARSE, e.to_string()),
        _ => fail(EXIT_PRECONDITION, e.to_string()),
    }
}

fn run_solver(algo: Algo, inst: &ProblemInstance) -> Result<SolutionSpec, CoreError> {
    match algo {
        Algo::Direct => direct_sim_pade(inst),
        Algo::Duality => duality_sim_pade(inst),
        Algo::Recursive => recursive_sim_pade(inst),
        Algo::Oracle => {
            // Unit deltas: each basis vector is its own generator.
            let space = oracle_solution_space(inst)?;
            Ok(SolutionSpec {
                lambdas: space.basis.into_iter().map(|c| Poly::new(inst.field(), c)).collect(),
                deltas: vec![-1; space.dim],
            })
        }
    }
}

fn cmd_solve(input: &Path, algo: Algo, output: &Path) -> Result<i32, Failure> {
    let inst = load_instance(input)?;
    let (text, k) = if algo == Algo::Oracle {
        let space = oracle_solution_space(&inst).map_err(solver_failure)?;
        (OracleFile::from_space(&space, &inst).emit(), space.dim)
    } else {
        let spec = run_solver(algo, &inst).map_err(solver_failure)?;
        (SpecFile::from_spec(&spec, &inst).emit(), spec.k())
    };
    write(output, &text)?;
    println!("{}: k = {k}, written to {}", algo.name(), output.display());
    Ok(if k == 0 { EXIT_EMPTY } else { EXIT_OK })
}

fn cmd_verify(input: &Path, spec_path: &Path) -> Result<i32, Failure> {
    let inst = load_instance(input)?;
    let (file, spec) = load_spec(spec_path, inst.field())?;
    let mut report = String::new();
    let mut ok = true;
    let mut line = |passed: Option<bool>, name: &str, detail: &str| {
        let tag = match passed {
            Some(true) => "PASS",
            Some(false) => "FAIL",
            None => "SKIP",
        };
        ok &= passed != Some(false);
        let _ = writeln!(report, "[{tag}] {name}: {detail}");
    };

    match &file.instance_hash {
        Some(h) => {
            let want = instance_hash(&inst);
            let same = *h == want;
            line(
                Some(same),
                "instance-hash",
                if same { "matches the instance" } else { "spec was written for a different instance" },
            );
        }
        None => line(None, "instance-hash", "not recorded in the spec"),
    }
    let checks = check_spec(&spec, &inst);
    let structural = checks
        .iter()
        .filter(|c| matches!(c.name, "lengths" | "negative-deltas"))
        .all(|c| c.passed);
    for c in &checks {
        line(Some(c.passed), c.name, &c.detail);
    }
    if structural {
        match oracle_solution_space(&inst) {
            Ok(space) => {
                let matches = spec_matches_oracle(&spec, &inst).map_err(solver_failure)?;
                line(
                    Some(matches),
                    "completeness",
                    &format!(
                        "oracle dim {}, spec dim {}{}",
                        space.dim,
                        spec.dimension(),
                        if matches { ", same span" } else { ", spans differ" }
                    ),
                );
            }
            Err(e @ CoreError::OracleTooLarge { .. }) => line(None, "completeness", &e.to_string()),
            Err(e) => return Err(solver_failure(e)),
        }
    } else {
        line(None, "completeness", "skipped: malformed spec");
    }
    print!("{report}");
    Ok(if ok { EXIT_OK } else { EXIT_INVARIANT })
}

fn cmd_verify_equiv(input: &Path, a: &Path, b: &Path) -> Result<i32, Failure> {
    let inst = load_instance(input)?;
    let (_, sa) = load_spec(a, inst.field())?;
    let (_, sb) = load_spec(b, inst.field())?;
    let ma = spec_matches_oracle(&sa, &inst).map_err(solver_failure)?;
    let mb = spec_matches_oracle(&sb, &inst).map_err(solver_failure)?;
    let same = ma && mb;
    println!(
        "[{}] equivalence: first {} the oracle, second {} the oracle",
        if same { "PASS" } else { "FAIL" },
        if ma { "matches" } else { "differs from" },
        if mb { "matches" } else { "differs from" },
    );
    Ok(if same { EXIT_OK } else { EXIT_INVARIANT })
}

/// Random instance with moduli `x^d`, `N_0 = min(ceil(d/2) + 1, d)` and
/// `N_i = ceil(d/2)`.
pub fn bench_instance(n: usize, d: usize, p: u64, seed: u64) -> Result<ProblemInstance, CoreError> {
    let field = PrimeField::new(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let half = d.div_ceil(2);
    let series = (0..n)
        .map(|_| Poly::new(field, (0..d).map(|_| rng.gen_range(0..p)).collect()))
        .collect();
    let moduli = vec![Poly::monomial(field, 1, d); n];
    let mut bounds = vec![(half + 1).min(d)];
    bounds.extend(std::iter::repeat_n(half, n));
    ProblemInstance::new(series, moduli, bounds)
}

fn cmd_bench(n: usize, d: usize, p: u64, seed: u64, algos: &[Algo]) -> Result<i32, Failure> {
    if n == 0 || d == 0 {
        return Err(fail(EXIT_PARSE, "n and d must be positive"));
    }
    let inst = bench_instance(n, d, p, seed).map_err(|e| fail(EXIT_PARSE, e.to_string()))?;
    println!("algo,n,d,wall_time,k,sum_neg_delta");
    for &algo in algos {
        let start = Instant::now();
        let spec = run_solver(algo, &inst).map_err(solver_failure)?;
        let secs = start.elapsed().as_secs_f64();
        println!("{},{n},{d},{secs:.6},{},{}", algo.name(), spec.k(), spec.dimension());
    }
    Ok(EXIT_OK)
}
