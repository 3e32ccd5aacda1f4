use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use kfock::exact::{Exact, Ground, Sampled};
use kfock::fockrep::relations::{verify_relation, Relation, RelationParams};
use kfock::fockrep::{e_operator, f_operator, psi_operator, Sign};
use kfock::partitions::{partitions_up_to, TieBreak};
use kfock::report::Check;
use kfock::shufflealg::{k_element, shuffle_operator, verify_k_commute, verify_wheel};
use kfock::suite::{self, run_suite, Mode, Suite, SuiteConfig, VerificationReport};
use kfock::symfun::{BasisTables, MacdonaldTable};
use kfock::theta::{heisenberg_plus, verify_theta, Normalization};
use kfock::Error;

#[derive(Parser)]
#[command(
    name = "kfock",
    version,
    about = "Exact verification of Fock space actions"
)]
struct Cli {
    /// Largest diagram size considered.
    #[arg(long, global = true, default_value_t = 5)]
    max_size: usize,
    /// Number of series coefficients compared.
    #[arg(long, global = true, default_value_t = 8)]
    series_order: usize,
    #[arg(long, global = true, value_enum, default_value_t = ModeArg::Exact)]
    mode: ModeArg,
    /// Seed for the sample point in sampled mode.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads; defaults to the number of cores.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Include wall times in the report.
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exact,
    Sampled,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Run a named suite of checks.
    Run {
        #[arg(value_parser = ["relations", "shuffle", "macdonald", "theta", "all"])]
        suite: String,
    },
    /// Verify one of the defining relations, numbered 1 to 5.
    Verify {
        #[arg(long)]
        relation: u8,
        /// Mode indices range over -range..=range.
        #[arg(long, default_value_t = 2)]
        range: i32,
    },
    #[command(subcommand)]
    Shuffle(ShuffleCmd),
    /// Orthogonality, Pieri and basis checks for Macdonald polynomials.
    Macdonald {
        #[arg(long)]
        degree: Option<usize>,
    },
    #[command(subcommand)]
    Theta(ThetaCmd),
    /// Write an operator matrix or table as JSON.
    Dump {
        #[arg(value_enum)]
        kind: DumpKind,
        /// Mode index of e_r or f_r.
        #[arg(long, default_value_t = 0)]
        r: i32,
        /// Source degree of a matrix block, or the index of K_n.
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, value_enum, default_value_t = SignArg::Plus)]
        sign: SignArg,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum ShuffleCmd {
    /// `K_m * K_n = K_n * K_m` as elements and as operators.
    KCommute {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Wheel condition on triple products of `x^a` with `|a| <= range`.
    Wheel {
        #[arg(long, default_value_t = 1)]
        range: i32,
    },
}

#[derive(Subcommand)]
enum ThetaCmd {
    /// Renormalized `K_n` against vertical-strip Pieri coefficients.
    Verify {
        #[arg(long)]
        n: usize,
    },
    /// The Heisenberg generator `h_i`, checked against power-sum multiplication.
    Heisenberg {
        #[arg(long)]
        i: usize,
        /// Also write the operator matrix to this file.
        #[arg(long)]
        dump: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum DumpKind {
    EMatrix,
    FMatrix,
    Psi,
    KMatrix,
    Macdonald,
    CNorms,
}

#[derive(Clone, Copy, ValueEnum)]
enum SignArg {
    Plus,
    Minus,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match execute(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn config(cli: &Cli) -> SuiteConfig {
    SuiteConfig {
        max_size: cli.max_size,
        series_order: cli.series_order,
        mode: match cli.mode {
            ModeArg::Exact => Mode::Exact,
            ModeArg::Sampled => Mode::Sampled,
        },
        seed: cli.seed,
    }
}

fn execute(cli: &Cli) -> Result<ExitCode, Error> {
    let cfg = config(cli);
    if let Command::Run { suite } = &cli.command {
        let report = run_suite(suite.parse::<Suite>()?, &cfg)?;
        return Ok(emit(cli, &report));
    }
    if let Command::Dump {
        kind,
        r,
        n,
        sign,
        out,
    } = &cli.command
    {
        let value = match cfg.mode {
            Mode::Exact => dump(&Exact::new(), cli, *kind, *r, *n, *sign)?,
            Mode::Sampled => dump(&Sampled::from_seed(cfg.seed), cli, *kind, *r, *n, *sign)?,
        };
        write_json(out.as_ref(), &value)?;
        return Ok(ExitCode::SUCCESS);
    }
    let start = Instant::now();
    let (name, checks) = match cfg.mode {
        Mode::Exact => checks(&Exact::new(), cli)?,
        Mode::Sampled => checks(&Sampled::from_seed(cfg.seed), cli)?,
    };
    let report = VerificationReport {
        suite: name,
        config: cfg,
        checks,
        elapsed: start.elapsed(),
    };
    Ok(emit(cli, &report))
}

fn checks<G: Ground>(g: &G, cli: &Cli) -> Result<(String, Vec<Check>), Error> {
    let n_max = cli.max_size;
    match &cli.command {
        Command::Verify { relation, range } => {
            let rel = Relation::from_number(*relation)?;
            let params = RelationParams {
                i_range: -range..=*range,
                j_range: -range..=*range,
                n_max,
                series_order: cli.series_order,
            };
            Ok((
                format!("relation-{relation}"),
                verify_relation(g, rel, &params)?,
            ))
        }
        Command::Shuffle(ShuffleCmd::KCommute { m, n }) => {
            Ok(("k-commute".into(), verify_k_commute(g, *m, *n, n_max)))
        }
        Command::Shuffle(ShuffleCmd::Wheel { range }) => {
            let exps: Vec<i32> = (-range..=*range).collect();
            Ok(("wheel".into(), verify_wheel(g, &exps)))
        }
        Command::Macdonald { degree } => Ok((
            "macdonald".into(),
            suite::macdonald(g, degree.unwrap_or(n_max))?,
        )),
        Command::Theta(ThetaCmd::Verify { n }) => {
            Ok(("theta".into(), vec![verify_theta(g, *n, n_max)]))
        }
        Command::Theta(ThetaCmd::Heisenberg { i, dump }) => {
            if *i == 0 || *i > n_max {
                return Err(Error::InvalidArgument(format!(
                    "need 1 <= i <= {n_max}, got {i}"
                )));
            }
            let gq = g.qt();
            let tables = BasisTables::new(n_max);
            let table = MacdonaldTable::build(&gq, &tables, n_max, TieBreak::ReverseLex)?;
            let check = kfock::theta::verify_intertwining(g, &tables, &table, *i);
            if let Some(path) = dump {
                let h = heisenberg_plus(g, *i, n_max - i)?;
                let op = &h.last().expect("one operator per index").op;
                write_json(Some(path), &op.to_json(g))?;
            }
            Ok(("heisenberg".into(), vec![check]))
        }
        Command::Run { .. } | Command::Dump { .. } => unreachable!("handled by the caller"),
    }
}

fn dump<G: Ground>(
    g: &G,
    cli: &Cli,
    kind: DumpKind,
    r: i32,
    n: usize,
    sign: SignArg,
) -> Result<Value, Error> {
    let missing = || Error::InvalidArgument(format!("degree {n} is not materialized"));
    Ok(match kind {
        DumpKind::EMatrix => {
            let op = e_operator(g, r, n)?;
            json!({ "kind": "e-matrix", "r": r, "block": op.block_json(g, n).ok_or_else(missing)? })
        }
        DumpKind::FMatrix => {
            let op = f_operator(g, r, n)?;
            json!({ "kind": "f-matrix", "r": r, "block": op.block_json(g, n).ok_or_else(missing)? })
        }
        DumpKind::Psi => {
            let sign = match sign {
                SignArg::Plus => Sign::Plus,
                SignArg::Minus => Sign::Minus,
            };
            let op = psi_operator(g, sign, cli.series_order, cli.max_size)?;
            json!({ "kind": "psi", "operator": op.to_json(g) })
        }
        DumpKind::KMatrix => {
            let op = shuffle_operator(g, &k_element(g, n)?, cli.max_size)?;
            json!({ "kind": "k-matrix", "n": n, "operator": op.to_json(g) })
        }
        DumpKind::Macdonald => {
            let gq = g.qt();
            let degree = cli.max_size;
            let tables = BasisTables::new(degree);
            let table = MacdonaldTable::build(&gq, &tables, degree, TieBreak::ReverseLex)?;
            let mut polys = serde_json::Map::new();
            for lam in partitions_up_to(degree) {
                polys.insert(lam.to_string(), table.poly(&lam)?.to_json(&gq));
            }
            json!({ "kind": "macdonald", "degree": degree, "polys": polys })
        }
        DumpKind::CNorms => {
            let c = Normalization::new(g, cli.max_size);
            let mut values = serde_json::Map::new();
            for lam in partitions_up_to(cli.max_size) {
                values.insert(lam.to_string(), json!(g.render(c.get(&lam)?)));
            }
            json!({ "kind": "c-norms", "values": values })
        }
    })
}

fn write_json(path: Option<&PathBuf>, value: &Value) -> Result<(), Error> {
    let text = serde_json::to_string_pretty(value).expect("JSON values serialize") + "\n";
    match path {
        Some(p) => {
            fs::write(p, text).map_err(|e| Error::InvalidArgument(format!("{}: {e}", p.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit(cli: &Cli, report: &VerificationReport) -> ExitCode {
    match cli.format {
        Format::Json => {
            let text = serde_json::to_string_pretty(&report.to_json(cli.timings))
                .expect("JSON values serialize");
            println!("{text}");
        }
        Format::Text => print!("{}", report.to_text(cli.timings)),
    }
    match report.first_failure() {
        None => ExitCode::SUCCESS,
        Some(c) => {
            eprintln!(
                "FAIL {}: {}",
                c.id,
                c.witness.as_deref().unwrap_or("no witness")
            );
            ExitCode::FAILURE
        }
    }
}
