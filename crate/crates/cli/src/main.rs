use std::fs::File;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use btspin_core::alexander::{alexander_polynomial, knot_determinant};
use btspin_core::batch::{read_pairs, run_batch};
use btspin_core::btspin::{
    btspin_presentation, e0_check, e1_brute_force, e1_closed_form, BtSpinParams, ParityPreference, DEFAULT_MINOR_LIMIT,
};
use btspin_core::distinguish::distinguish;
use btspin_core::knot::table::KnotTable;
use btspin_core::knot::{parse_braid, Format, KnotCode, KnotDiagram};
use btspin_core::{Error, Presentation};

const EXIT_DATA: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "btspin",
    version,
    about = "Knot groups, Alexander ideals and branched twist spins"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a knot code and print the diagram summary and Wirtinger presentation.
    Parse(KnotArg),
    /// Print the normalized Alexander polynomial.
    Alexander(KnotArg),
    /// Print the knot determinant |Δ(-1)|.
    Det(KnotArg),
    /// Presentation and elementary ideals of the branched twist spin K^{m,n}.
    Btspin(BtspinArgs),
    /// Apply the determinant criterion to two branched twist spins.
    Distinguish(DistinguishArgs),
    /// Compare pairs from a knot table and write a CSV report.
    Batch(BatchArgs),
}

#[derive(Args)]
struct CodeOptions {
    /// Notation of the code; detected from its shape when omitted.
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    /// Strand count for braid words; inferred when omitted.
    #[arg(long)]
    strands: Option<usize>,
}

#[derive(Args)]
struct KnotArg {
    /// A knot code (PD, Gauss or braid) or the name of a bundled knot.
    input: String,
    #[command(flatten)]
    code: CodeOptions,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Pd,
    Gauss,
    Braid,
}

#[derive(Clone, Copy, ValueEnum)]
enum Parity {
    Any,
    Even,
    Odd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Show {
    Presentation,
    E1,
    E1Brute,
    E0,
}

#[derive(Args)]
struct BtspinArgs {
    /// A knot code or bundled knot name.
    input: String,
    #[arg(long, allow_hyphen_values = true)]
    m: i64,
    #[arg(long)]
    n: i64,
    /// Preferred parity of β when |m| is odd.
    #[arg(long, value_enum, default_value = "even")]
    parity: Parity,
    #[arg(long, value_enum, default_value = "presentation")]
    show: Show,
    /// Maximum number of minors to enumerate for e1-brute and e0.
    #[arg(long, default_value_t = DEFAULT_MINOR_LIMIT)]
    limit: u128,
    #[command(flatten)]
    code: CodeOptions,
}

#[derive(Args)]
struct DistinguishArgs {
    left: String,
    #[arg(allow_hyphen_values = true)]
    m1: i64,
    n1: i64,
    right: String,
    #[arg(allow_hyphen_values = true)]
    m2: i64,
    n2: i64,
}

#[derive(Args)]
struct BatchArgs {
    /// Knot table CSV (`name,format,code`); the bundled table when omitted.
    #[arg(long)]
    table: Option<PathBuf>,
    /// Pairs CSV (`left_name,m1,n1,right_name,m2,n2`).
    #[arg(long)]
    pairs: PathBuf,
    /// Report path; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(cmd: Command) -> Result<ExitCode, Error> {
    match cmd {
        Command::Parse(k) => {
            let code = resolve(&k.input, &k.code)?;
            let d = code.to_diagram()?;
            println!("format: {}", code.format().as_str());
            println!("diagram: {d}");
            println!("presentation: {}", d.wirtinger());
        }
        Command::Alexander(k) => {
            let p = presentation(&k.input, &k.code)?;
            println!("{}", alexander_polynomial(&p)?);
        }
        Command::Det(k) => {
            let p = presentation(&k.input, &k.code)?;
            println!("{}", knot_determinant(&p)?);
        }
        Command::Btspin(a) => btspin(a)?,
        Command::Distinguish(a) => {
            let none = CodeOptions {
                format: None,
                strands: None,
            };
            let left = presentation(&a.left, &none)?;
            let right = presentation(&a.right, &none)?;
            println!("{}", distinguish(&left, a.m1, a.n1, &right, a.m2, a.n2)?);
        }
        Command::Batch(a) => return batch(a),
    }
    Ok(ExitCode::SUCCESS)
}

fn btspin(a: BtspinArgs) -> Result<(), Error> {
    let k = presentation(&a.input, &a.code)?;
    let parity = match a.parity {
        Parity::Any => ParityPreference::Any,
        Parity::Even => ParityPreference::PreferEven,
        Parity::Odd => ParityPreference::PreferOdd,
    };
    let params = match (a.m, a.n) {
        (0, 1) => BtSpinParams::spun(),
        (0, _) => return Err(Error::InvalidArgument("m = 0 requires n = 1".into())),
        (m, n) => BtSpinParams::solve(m, n, parity)?,
    };
    match a.show {
        Show::Presentation => {
            let p = btspin_presentation(&k, &params)?;
            println!("{params}");
            println!("{p}");
            println!("meridian: {}", p.render_word(p.meridian()));
        }
        Show::E1 => println!("{}", e1_closed_form(&k, &params)?.render(1)),
        Show::E1Brute => println!("{}", e1_brute_force(&k, &params, Some(a.limit))?.render(1)),
        Show::E0 => {
            let r = e0_check(&k, &params, Some(a.limit))?;
            if r.vanishes {
                println!("E0 = 0 (verified, {} minors)", r.minors);
            } else {
                println!("E0 ≠ 0 (nonzero minor found)");
            }
        }
    }
    Ok(())
}

fn batch(a: BatchArgs) -> Result<ExitCode, Error> {
    let table = match &a.table {
        Some(path) => KnotTable::from_path(path),
        None => Ok(KnotTable::bundled()),
    };
    let report = table.and_then(|t| {
        let pairs = read_pairs(File::open(&a.pairs)?)?;
        run_batch(&t, &pairs, a.jobs)
    });
    let report = match report {
        Ok(r) => r,
        Err(Error::Io(e)) => return Err(Error::Io(e)),
        Err(e) => {
            eprintln!("error: {e}");
            return Ok(ExitCode::from(EXIT_DATA));
        }
    };
    match &a.out {
        Some(path) => std::fs::write(path, &report.csv)?,
        None => print!("{}", String::from_utf8_lossy(&report.csv)),
    }
    for e in &report.errors {
        eprintln!("{e}");
    }
    Ok(if report.has_errors() {
        ExitCode::from(EXIT_DATA)
    } else {
        ExitCode::SUCCESS
    })
}

/// A bundled knot name, or a code in the given (or detected) notation.
fn resolve(input: &str, opts: &CodeOptions) -> Result<KnotCode, Error> {
    if opts.format.is_none() {
        if let Some(entry) = KnotTable::bundled().get(input.trim()) {
            return Ok(entry.code.clone());
        }
    }
    let format = match opts.format {
        Some(FormatArg::Pd) => Format::Pd,
        Some(FormatArg::Gauss) => Format::Gauss,
        Some(FormatArg::Braid) => Format::Braid,
        None => Format::detect(input).ok_or_else(|| {
            Error::InvalidArgument(format!("'{input}' is neither a bundled knot nor a recognizable code"))
        })?,
    };
    match format {
        Format::Braid => Ok(KnotCode::Braid(parse_braid(input, opts.strands)?)),
        f => KnotCode::parse(f, input),
    }
}

fn presentation(input: &str, opts: &CodeOptions) -> Result<Presentation, Error> {
    let d: KnotDiagram = resolve(input, opts)?.to_diagram()?;
    Ok(d.wirtinger())
}
