use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use eh_core::constructions::{
    affine_plane, blowup, clique_plus_isolated, hprime, ngon, parity_triples, random_coloring,
    PartSizes,
};
use eh_core::enumerate::{enumerate_qfree, h_value};
use eh_core::extractors::{
    extract_42_43, extract_coclique_41_44, extract_coclique_42_44, extract_graph_homogeneous,
};
use eh_core::homsolve::{greedy_homogeneous, homogeneous_number};
use eh_core::osh::{parse_osh, serialize_osh};
use eh_core::profiles::{is_q_free, profile, ForbiddenFamily, QCheck};
use eh_core::suites::{run_suite, SuiteParams, SUITES};
use eh_core::{Error, UniformHypergraph};

/// Homogeneous sets in hypergraphs avoiding order-size pairs.
#[derive(Parser)]
#[command(name = "eh", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a construction and write it as OSH.
    Gen(GenArgs),
    /// Check Q-freeness; exit 0 if free, 1 if violated.
    Check(CheckArgs),
    /// Largest homogeneous set.
    Hom(HomArgs),
    /// Run a witness-extraction procedure.
    Extract(ExtractArgs),
    /// Enumerate Q-free 3-graphs up to isomorphism.
    Enumerate(EnumerateArgs),
    /// Minimum homogeneous number over Q-free 3-graphs on n vertices.
    Hvalue(HvalueArgs),
    /// Run a verification suite; exit 0 iff every claim passes.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Construction {
    Affine,
    Ngon,
    Hprime,
    Blowup,
    Parity,
    Cliqueiso,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    construction: Construction,
    /// Order of the affine plane (a prime >= 3).
    #[arg(long)]
    q: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    /// Blow-up part sizes, comma separated, one per base vertex.
    #[arg(long, value_delimiter = ',')]
    sizes: Option<Vec<usize>>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(short = 'o')]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct CheckArgs {
    file: PathBuf,
    /// Forbidden family `m:f1,f2,...`.
    #[arg(long)]
    q: String,
    /// Also print the edge counts attained by the M-subsets.
    #[arg(long, value_name = "M")]
    profile: Option<usize>,
}

#[derive(Args)]
struct HomArgs {
    file: PathBuf,
    #[arg(long, conflicts_with = "greedy")]
    exact: bool,
    #[arg(long)]
    greedy: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Case {
    Graph,
    #[value(name = "41-44")]
    C41_44,
    #[value(name = "42-43")]
    C42_43,
    #[value(name = "42-44")]
    C42_44,
}

#[derive(Args)]
struct ExtractArgs {
    file: PathBuf,
    #[arg(long, value_enum)]
    case: Case,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    f: Option<usize>,
    /// Print the recorded steps before the witness.
    #[arg(long)]
    trace: bool,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    q: String,
    #[arg(long, conflicts_with = "list")]
    count: bool,
    /// Write one OSH file per class, named by its index in canonical order.
    #[arg(long, value_name = "DIR")]
    list: Option<PathBuf>,
}

#[derive(Args)]
struct HvalueArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    q: String,
    /// Write the minimizer here instead of stdout.
    #[arg(short = 'o')]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Human,
    Kv,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    suite: String,
    #[arg(long)]
    nmax: Option<usize>,
    #[arg(long, value_enum, default_value = "human")]
    format: Format,
    /// Include wall time in the report.
    #[arg(long)]
    timing: bool,
}

type CmdResult = Result<ExitCode, String>;

fn read_graph(path: &Path) -> Result<UniformHypergraph, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_osh(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), String> {
    match output {
        Some(p) => fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn family(text: &str) -> Result<ForbiddenFamily, String> {
    ForbiddenFamily::parse(text, 3).map_err(|e| e.to_string())
}

fn need<T>(value: Option<T>, flag: &str, what: &str) -> Result<T, String> {
    value.ok_or_else(|| format!("--{flag} is required for {what}"))
}

fn gen(a: GenArgs) -> CmdResult {
    let err = |e: Error| e.to_string();
    let h = match a.construction {
        Construction::Affine => affine_plane(need(a.q, "q", "affine")?, a.n).map_err(err)?,
        Construction::Ngon => ngon(need(a.n, "n", "ngon")?).map_err(err)?,
        Construction::Hprime => hprime(),
        Construction::Blowup => {
            blowup(&hprime(), &PartSizes(need(a.sizes, "sizes", "blowup")?)).map_err(err)?
        }
        Construction::Parity => parity_triples(&random_coloring(need(a.n, "n", "parity")?, a.seed)),
        Construction::Cliqueiso => {
            clique_plus_isolated(need(a.n, "n", "cliqueiso")?).map_err(err)?
        }
    };
    emit(&serialize_osh(&h), a.output.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

fn check(a: CheckArgs) -> CmdResult {
    let h = read_graph(&a.file)?;
    let q = ForbiddenFamily::parse(&a.q, h.r()).map_err(|e| e.to_string())?;
    if let Some(m) = a.profile {
        let p = profile(&h, m).map_err(|e| e.to_string())?;
        let items: Vec<String> = p.iter().map(|f| f.to_string()).collect();
        println!("profile {}", items.join(" "));
    }
    match is_q_free(&h, &q).map_err(|e| e.to_string())? {
        QCheck::Free => {
            println!("free");
            Ok(ExitCode::SUCCESS)
        }
        QCheck::Violated { witness, .. } => {
            println!("violated {witness}");
            Ok(ExitCode::from(1))
        }
    }
}

fn hom(a: HomArgs) -> CmdResult {
    let h = read_graph(&a.file)?;
    let w = if a.greedy {
        greedy_homogeneous(&h, a.seed)
    } else {
        homogeneous_number(&h).map_err(|e| e.to_string())?.witness
    };
    println!("{w}");
    Ok(ExitCode::SUCCESS)
}

fn extract(a: ExtractArgs) -> CmdResult {
    let h = read_graph(&a.file)?;
    let trace = match a.case {
        Case::Graph => extract_graph_homogeneous(
            &h,
            need(a.m, "m", "the graph case")?,
            need(a.f, "f", "the graph case")?,
        ),
        Case::C41_44 => extract_coclique_41_44(&h),
        Case::C42_43 => extract_42_43(&h),
        Case::C42_44 => extract_coclique_42_44(&h),
    }
    .map_err(|e| e.to_string())?;
    if a.trace {
        for (i, s) in trace.steps.iter().enumerate() {
            println!("step {i}: {}: {}", s.description, s.claim);
        }
    }
    println!("{}", trace.witness);
    Ok(ExitCode::SUCCESS)
}

fn enumerate(a: EnumerateArgs) -> CmdResult {
    let q = family(&a.q)?;
    let classes = enumerate_qfree(a.n, &q).map_err(|e| e.to_string())?;
    if let Some(dir) = a.list {
        fs::create_dir_all(&dir).map_err(|e| format!("{}: {e}", dir.display()))?;
        for (i, c) in classes.iter().enumerate() {
            let path = dir.join(format!("{i}.osh"));
            fs::write(&path, serialize_osh(&c.rep))
                .map_err(|e| format!("{}: {e}", path.display()))?;
        }
    }
    println!("{}", classes.len());
    Ok(ExitCode::SUCCESS)
}

fn hvalue(a: HvalueArgs) -> CmdResult {
    let q = family(&a.q)?;
    let rep = h_value(a.n, &q).map_err(|e| e.to_string())?;
    println!("{} {}", rep.value, rep.count);
    emit(&serialize_osh(&rep.minimizer.rep), a.output.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

fn verify(a: VerifyArgs) -> CmdResult {
    if !SUITES.contains(&a.suite.as_str()) {
        return Err(format!(
            "unknown suite `{}`; known suites: {}",
            a.suite,
            SUITES.join(", ")
        ));
    }
    let report = run_suite(&a.suite, &SuiteParams { nmax: a.nmax }).map_err(|e| e.to_string())?;
    match a.format {
        Format::Human => print!("{}", report.render_human(a.timing)),
        Format::Kv => print!("{}", report.render_kv(a.timing)),
    }
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen(a) => gen(a),
        Command::Check(a) => check(a),
        Command::Hom(a) => hom(a),
        Command::Extract(a) => extract(a),
        Command::Enumerate(a) => enumerate(a),
        Command::Hvalue(a) => hvalue(a),
        Command::Verify(a) => verify(a),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("eh: {msg}");
            ExitCode::from(2)
        }
    }
}
