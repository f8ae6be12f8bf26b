//! Command-line front end: evaluate terms, run law suites, sweep the
//! naturality check, enumerate port corelations, and read circuit files.

use std::io::Read as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use circsem::bondgraph::{black_box, eval_corel, eval_lagrel, sweep, Signature};
use circsem::laws::{self, Backend};
use circsem::{dsl, enumerate, Circuit, Error};

#[derive(Parser)]
#[command(name = "circsem", version, about = "Exact semantics for ideal-wire circuits and bond graphs")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SigName {
    Bond,
    CorelWire,
    CorelPort,
}

impl SigName {
    fn signature(self) -> Signature {
        match self {
            SigName::Bond => Signature::bond(),
            SigName::CorelWire => Signature::corel_wire(),
            SigName::CorelPort => Signature::corel_port(),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum EvalBackend {
    Corel,
    LagrelEffortflow,
    LagrelPotentialcurrent,
}

#[derive(Clone, Copy, ValueEnum)]
enum LawBackend {
    Corel,
    Lagrel,
}

impl From<LawBackend> for Backend {
    fn from(b: LawBackend) -> Self {
        match b {
            LawBackend::Corel => Backend::Corel,
            LawBackend::Lagrel => Backend::Lagrel,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a term written in the infix language (`-` reads stdin).
    Eval {
        term: String,
        #[arg(long, value_enum, default_value = "bond")]
        sig: SigName,
        #[arg(long, value_enum, default_value = "corel")]
        backend: EvalBackend,
    },
    /// Check every equation of a suite; exits 1 if any verdict is unexpected.
    Laws {
        suite: String,
        /// Defaults to every backend the suite is claimed for.
        #[arg(long, value_enum)]
        backend: Option<LawBackend>,
    },
    /// Check naturality on random bond terms; exits 1 unless all pass.
    Nat {
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = 12)]
        max_size: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// List the port corelations reachable by small terms.
    Enum {
        #[arg(long = "in")]
        ports_in: usize,
        #[arg(long = "out")]
        ports_out: usize,
        #[arg(long)]
        max_size: usize,
        #[arg(long)]
        max_ports: Option<usize>,
    },
    /// Read a circuit file and print its underlying corelation.
    Circuit {
        file: PathBuf,
        /// Also write a Graphviz rendering.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
}

/// A failed check (exit 1) or a usage problem (exit 2).
enum Failure {
    Check,
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("values serialise"));
}

fn read_source(term: &str) -> Result<String, Failure> {
    if term == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::Usage(format!("reading stdin: {e}")))?;
        Ok(text)
    } else {
        Ok(term.to_string())
    }
}

fn eval(term: &str, sig: SigName, backend: EvalBackend, json: bool) -> Result<(), Failure> {
    let sig = sig.signature();
    let t = dsl::parse(&read_source(term)?, &sig)?;
    match backend {
        EvalBackend::Corel => {
            let c = eval_corel(&t, &sig)?;
            if json { print_json(&c) } else { println!("{c}") }
        }
        EvalBackend::LagrelEffortflow | EvalBackend::LagrelPotentialcurrent => {
            let r = match backend {
                EvalBackend::LagrelEffortflow => eval_lagrel(&t, &sig)?,
                _ => black_box(&eval_corel(&t, &sig)?),
            };
            if json { print_json(&r) } else { println!("{r}") }
        }
    }
    Ok(())
}

fn run_laws(suite: &str, backend: Option<LawBackend>, json: bool) -> Result<(), Failure> {
    let backends = match backend {
        Some(b) => vec![b.into()],
        None => laws::load(suite)?.backends,
    };
    let mut ok = true;
    for backend in backends {
        let report = laws::run_suite(suite, backend)?;
        if json {
            print!("{}", report.json_lines());
        } else {
            for v in &report.verdicts {
                let mark = match (v.holds, v.as_expected()) {
                    (true, true) => "holds",
                    (false, true) => "fails (expected)",
                    (true, false) => "HOLDS (expected to fail)",
                    (false, false) => "FAILS",
                };
                println!("{backend:<6} {mark:<24} {}", v.equation);
            }
            println!(
                "{suite} in {backend}: {} equations, {} hold, {} fail, {} unexpected",
                report.total, report.held, report.failed, report.unexpected
            );
        }
        ok &= report.ok();
    }
    if ok { Ok(()) } else { Err(Failure::Check) }
}

#[derive(Serialize)]
struct NatLine<'a> {
    term: &'a str,
    dom: usize,
    cod: usize,
    left_dim: usize,
    right_dim: usize,
    equal: bool,
    pulled_back: bool,
}

fn nat(count: usize, max_size: usize, seed: u64, json: bool) -> Result<(), Failure> {
    let reports = sweep(count, max_size, seed);
    for r in &reports {
        let line = NatLine {
            term: &r.term,
            dom: r.dom,
            cod: r.cod,
            left_dim: r.left.dim(),
            right_dim: r.right.dim(),
            equal: r.equal,
            pulled_back: r.pulled_back,
        };
        if json {
            print_json(&line);
        } else {
            println!(
                "{} {}->{} dims {}/{} {}",
                if r.equal { "ok  " } else { "FAIL" },
                line.dom,
                line.cod,
                line.left_dim,
                line.right_dim,
                line.term
            );
        }
    }
    let passed = reports.iter().filter(|r| r.equal).count();
    if !json {
        println!("naturality: {passed} of {} terms pass", reports.len());
    }
    if passed == reports.len() { Ok(()) } else { Err(Failure::Check) }
}

fn run_enum(
    ports_in: usize,
    ports_out: usize,
    max_size: usize,
    max_ports: Option<usize>,
    json: bool,
) -> Result<(), Failure> {
    let e = enumerate::enumerate(ports_in, ports_out, max_size, max_ports);
    if json {
        print_json(&e);
    } else {
        for r in &e.corelations {
            println!("{}  [size {}] {}", r.corelation, r.size, r.witness);
        }
        println!(
            "{} corelations {}->{} ports within {} leaves (at most {} ports inside)",
            e.count, ports_in, ports_out, max_size, e.max_ports
        );
    }
    Ok(())
}

fn circuit(file: &PathBuf, dot: Option<&PathBuf>, json: bool) -> Result<(), Failure> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| Failure::Usage(format!("reading {}: {e}", file.display())))?;
    let c: Circuit = serde_json::from_str(&text)
        .map_err(|e| Failure::Usage(format!("malformed circuit {}: {e}", file.display())))?;
    let corel = c.underlying_corelation();
    if json { print_json(&corel) } else { println!("{corel}") }
    if let Some(path) = dot {
        std::fs::write(path, c.to_dot())
            .map_err(|e| Failure::Usage(format!("writing {}: {e}", path.display())))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    let result = match &cli.command {
        Command::Eval { term, sig, backend } => eval(term, *sig, *backend, json),
        Command::Laws { suite, backend } => run_laws(suite, *backend, json),
        Command::Nat { count, max_size, seed } => nat(*count, *max_size, *seed, json),
        Command::Enum { ports_in, ports_out, max_size, max_ports } => {
            run_enum(*ports_in, *ports_out, *max_size, *max_ports, json)
        }
        Command::Circuit { file, dot } => circuit(file, dot.as_ref(), json),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
