use std::io::{self, Write};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use orbitkit::enumerate::{verify_sweep, SweepOptions};
use orbitkit::tables::{evaluate_table, F4_TABLE, G2_TABLE};
use orbitkit::weyl::involution_stats;
use orbitkit::{
    display_root, parse_roots, scan_non_admissible, ChevalleyTable, Error, OrthoSubset, PrimeField,
    RootSystem, RootSystemId, VerifyReport,
};

#[derive(Parser)]
#[command(
    name = "orbitkit",
    version,
    about = "Coadjoint orbit dimensions for orthogonal root subsets"
)]
struct Cli {
    /// Print the Chevalley structure constants of a system as CSV and exit.
    #[arg(long, value_name = "TYPE")]
    dump_constants: Option<String>,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Orbit dimension and the bound l(sigma) - s(sigma) for one subset.
    Dim {
        #[arg(long = "type")]
        system: String,
        /// Comma-separated roots, e.g. "e1,e2+e3" or "a1+a2,3a1+a2".
        #[arg(long, allow_hyphen_values = true)]
        roots: String,
        /// Comma-separated scalars, one per root (default all 1).
        #[arg(long, value_delimiter = ',')]
        xi: Vec<u32>,
        /// Field characteristic (default: first prime above the Coxeter number).
        #[arg(long)]
        prime: Option<u32>,
        #[arg(long, env = "ORBITKIT_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Re-evaluate a stored table of subsets.
    Table {
        which: Which,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        prime: Option<u32>,
    },
    /// Check dim even, ξ- and prime-independent and at most the bound, over all subsets.
    Verify {
        #[arg(long = "type")]
        system: String,
        #[arg(long, default_value_t = 8)]
        max_size: usize,
        #[arg(long, value_delimiter = ',')]
        primes: Vec<u32>,
        #[arg(long, default_value_t = 5)]
        xi_samples: usize,
        #[arg(long, env = "ORBITKIT_SEED", default_value_t = 0)]
        seed: u64,
        /// Sample this many random subsets instead of enumerating all of them.
        #[arg(long)]
        sample_budget: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Search for non-admissible subsets of the four pattern types.
    Scan {
        #[arg(long = "type")]
        system: String,
        /// Exit with status 1 if anything is found.
        #[arg(long)]
        expect_none: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    F4,
    G2,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

enum Failure {
    Mismatch,
    Parse(String),
    Precondition(String),
    Field(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(e.into())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.into())
    }
}

/// Classifies a library error, naming roots of `rs` where indices are known.
fn classify(e: Error, rs: Option<&RootSystem>) -> Failure {
    let name = |i: usize| match rs {
        Some(rs) if i < rs.num_positive() => display_root(rs, rs.positive(i)),
        _ => format!("#{i}"),
    };
    match e {
        Error::Parse { .. } | Error::BadSystemId(_) | Error::UnsupportedRank { .. } => {
            Failure::Parse(e.to_string())
        }
        Error::NotOrthogonal(a, b) => Failure::Precondition(format!(
            "roots {} and {} are not orthogonal",
            name(a),
            name(b)
        )),
        Error::DuplicateRoot(a) => Failure::Precondition(format!("root {} appears twice", name(a))),
        Error::FieldTooSmall { .. } | Error::NotPrime(_) | Error::ZeroXi(_) => {
            Failure::Field(e.to_string())
        }
        _ => Failure::Precondition(e.to_string()),
    }
}

type Outcome = Result<(), Failure>;

fn load(system: &str) -> Result<ChevalleyTable, Failure> {
    let id: RootSystemId = system.parse().map_err(|e| classify(e, None))?;
    Ok(ChevalleyTable::new(Arc::new(RootSystem::new(id))))
}

fn field_for(rs: &RootSystem, prime: Option<u32>) -> Result<PrimeField, Failure> {
    let field = match prime {
        Some(p) => PrimeField::new(p).map_err(|e| classify(e, Some(rs)))?,
        None => PrimeField::default_for(rs),
    };
    field.check_coxeter(rs).map_err(|e| classify(e, Some(rs)))?;
    Ok(field)
}

#[derive(Serialize)]
struct Flags {
    even: bool,
    bound_ok: bool,
    xi_independent: bool,
    prime_independent: bool,
    reduced_applied: bool,
}

/// The machine-readable record shared by `dim` and `verify`.
#[derive(Serialize)]
struct Record {
    system: String,
    #[serde(rename = "D")]
    d: Vec<usize>,
    dim: usize,
    bound: usize,
    l: usize,
    s: usize,
    flags: Flags,
    prime: Vec<u32>,
    seed: u64,
}

impl From<&VerifyReport> for Record {
    fn from(r: &VerifyReport) -> Self {
        Record {
            system: r.system.to_string(),
            d: r.d.clone(),
            dim: r.dim,
            bound: r.bound,
            l: r.l,
            s: r.s,
            flags: Flags {
                even: r.even_ok,
                bound_ok: r.bound_ok,
                xi_independent: r.xi_independent,
                prime_independent: r.prime_independent,
                reduced_applied: r.reduced_applied,
            },
            prime: r.primes.clone(),
            seed: r.seed,
        }
    }
}

fn names(rs: &RootSystem, idx: &[usize]) -> String {
    idx.iter()
        .map(|&i| display_root(rs, rs.positive(i)))
        .collect::<Vec<_>>()
        .join(", ")
}

fn cmd_dim(
    system: &str,
    roots: &str,
    xi: Vec<u32>,
    prime: Option<u32>,
    seed: u64,
    json: bool,
) -> Outcome {
    let tbl = load(system)?;
    let rs = tbl.root_system();
    let d = parse_roots(rs, roots).map_err(|e| classify(e, Some(rs)))?;
    let field = field_for(rs, prime)?;
    let xi = if xi.is_empty() { vec![1; d.len()] } else { xi };
    let sub = OrthoSubset::new(rs, d, xi, field).map_err(|e| classify(e, Some(rs)))?;
    let reduced = sub.reduce_singular(rs);
    let dim = tbl
        .orbit_dimension(&sub)
        .map_err(|e| classify(e, Some(rs)))?
        .dim;
    let stats = involution_stats(rs, reduced.roots()).map_err(|e| classify(e, Some(rs)))?;
    let record = Record {
        system: rs.id().to_string(),
        d: sub.roots().iter().map(|r| r.index()).collect(),
        dim,
        bound: stats.bound,
        l: stats.l,
        s: stats.s,
        flags: Flags {
            even: dim % 2 == 0,
            bound_ok: dim <= stats.bound,
            xi_independent: true,
            prime_independent: true,
            reduced_applied: !sub.is_reduced(),
        },
        prime: vec![field.p()],
        seed,
    };
    let mut out = io::stdout().lock();
    if json {
        serde_json::to_writer(&mut out, &record)?;
        writeln!(out)?;
        return Ok(());
    }
    writeln!(out, "system: {}", record.system)?;
    writeln!(out, "D: {}", names(rs, &record.d))?;
    if record.flags.reduced_applied {
        let kept: Vec<usize> = reduced.roots().iter().map(|r| r.index()).collect();
        writeln!(
            out,
            "reduced to: {} (singular roots of D removed)",
            names(rs, &kept)
        )?;
    }
    writeln!(out, "dim: {dim}")?;
    writeln!(
        out,
        "bound: {} (l = {}, s = {})",
        stats.bound, stats.l, stats.s
    )?;
    writeln!(out, "prime: {}", field.p())?;
    Ok(())
}

#[derive(Serialize)]
struct CsvRow {
    row: usize,
    #[serde(rename = "D")]
    d: String,
    #[serde(rename = "M")]
    m: String,
    #[serde(rename = "|M|")]
    m_size: usize,
    #[serde(rename = "F")]
    f: usize,
    dim_computed: usize,
}

fn yes_no(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "yes",
        Some(false) => "no",
        None => "-",
    }
}

fn cmd_table(which: Which, format: Format, prime: Option<u32>) -> Outcome {
    let (system, entries) = match which {
        Which::F4 => ("F4", F4_TABLE),
        Which::G2 => ("G2", G2_TABLE),
    };
    let tbl = load(system)?;
    let rs = tbl.root_system();
    let field = field_for(rs, prime)?;
    let rows = evaluate_table(entries, &tbl, field).map_err(|e| classify(e, Some(rs)))?;
    let mut out = io::stdout().lock();
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut out, &rows)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            for r in &rows {
                w.serialize(CsvRow {
                    row: r.row,
                    d: r.d.join("; "),
                    m: r.m.join("; "),
                    m_size: r.m_size,
                    f: r.f,
                    dim_computed: r.dim_computed,
                })?;
            }
            w.flush()?;
        }
        Format::Text => {
            let dw = rows.iter().map(|r| r.d.join(", ").len()).max().unwrap_or(1);
            writeln!(
                out,
                "{:>3}  {:<dw$}  {:>3}  {:>3}  {:>3}  {:>5}  {:>6}  {:>5}  status",
                "row", "D", "|M|", "F", "dim", "bound", "M-cond", "P-iso"
            )?;
            for r in &rows {
                writeln!(
                    out,
                    "{:>3}  {:<dw$}  {:>3}  {:>3}  {:>3}  {:>5}  {:>6}  {:>5}  {}",
                    r.row,
                    r.d.join(", "),
                    r.m_size,
                    r.f,
                    r.dim_computed,
                    r.bound_computed,
                    yes_no(r.m_conditions),
                    yes_no(Some(r.p_maximal_isotropic)),
                    if r.consistent() { "ok" } else { "MISMATCH" },
                )?;
            }
        }
    }
    let bad = rows.iter().filter(|r| !r.consistent()).count();
    if bad > 0 {
        eprintln!("{bad} row(s) where dim != 2|M| or bound != F");
        return Err(Failure::Mismatch);
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    system: &str,
    max_size: usize,
    primes: Vec<u32>,
    xi_samples: usize,
    seed: u64,
    sample_budget: Option<usize>,
    json: bool,
) -> Outcome {
    let tbl = load(system)?;
    let rs = tbl.root_system();
    let opts = SweepOptions {
        max_size,
        primes,
        xi_samples,
        seed,
        sample_budget,
    };
    let reports = verify_sweep(&tbl, &opts).map_err(|e| classify(e, Some(rs)))?;
    let mut out = io::stdout().lock();
    for r in &reports {
        if json {
            serde_json::to_writer(&mut out, &Record::from(r))?;
            writeln!(out)?;
        } else {
            let status = if r.passed() { "ok" } else { "FAIL" };
            let note = if r.reduced_applied { " (reduced)" } else { "" };
            writeln!(
                out,
                "{{{}}}  dim {}  bound {}{note}  {status}",
                names(rs, &r.d),
                r.dim,
                r.bound
            )?;
        }
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    let summary = format!(
        "{}: {} subsets, {} passed, {} failed",
        rs.id(),
        reports.len(),
        reports.len() - failed,
        failed
    );
    if json {
        eprintln!("{summary}");
    } else {
        writeln!(out, "{summary}")?;
    }
    if failed > 0 {
        return Err(Failure::Mismatch);
    }
    Ok(())
}

fn cmd_scan(system: &str, expect_none: bool) -> Outcome {
    let tbl = load(system)?;
    let rs = tbl.root_system();
    let hits = scan_non_admissible(rs).map_err(|e| classify(e, Some(rs)))?;
    let mut out = io::stdout().lock();
    writeln!(out, "{}: {} hits", rs.id(), hits.len())?;
    for h in &hits {
        let body: Vec<String> = h
            .roots
            .iter()
            .map(|(n, r)| format!("{n} = {}", display_root(rs, *r)))
            .collect();
        writeln!(out, "type {}: {}", h.pattern_type, body.join(", "))?;
    }
    if expect_none && !hits.is_empty() {
        return Err(Failure::Mismatch);
    }
    Ok(())
}

fn dump_constants(system: &str) -> Outcome {
    let tbl = load(system)?;
    let rs = tbl.root_system();
    let mut w = csv::Writer::from_writer(io::stdout().lock());
    w.write_record(["alpha", "gamma", "alpha+gamma", "N"])?;
    for (a, g, s, n) in tbl.entries() {
        w.write_record([
            display_root(rs, a),
            display_root(rs, g),
            display_root(rs, s),
            n.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    if let Some(system) = cli.dump_constants {
        return dump_constants(&system);
    }
    match cli.command {
        None => Err(Failure::Parse(
            "a subcommand or --dump-constants is required (see --help)".into(),
        )),
        Some(Command::Dim {
            system,
            roots,
            xi,
            prime,
            seed,
            json,
        }) => cmd_dim(&system, &roots, xi, prime, seed, json),
        Some(Command::Table {
            which,
            format,
            prime,
        }) => cmd_table(which, format, prime),
        Some(Command::Verify {
            system,
            max_size,
            primes,
            xi_samples,
            seed,
            sample_budget,
            json,
        }) => cmd_verify(
            &system,
            max_size,
            primes,
            xi_samples,
            seed,
            sample_budget,
            json,
        ),
        Some(Command::Scan {
            system,
            expect_none,
        }) => cmd_scan(&system, expect_none),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Parse(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Precondition(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
        Err(Failure::Field(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(4)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
