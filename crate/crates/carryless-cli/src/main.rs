//! The `carryless` command line tool.
//!
//! Exit codes: 0 success (verify: match), 1 verify mismatch, 2 verify
//! unavailable, 64 usage error, 65 domain error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use carryless_cli::oeis::{self, BFileSeq, ComparisonReport, Source, Verdict};
use carryless_core::classify::classify;
use carryless_core::factorize::{divisors, factor, ClassShape, Factorization};
use carryless_core::powers::{count_squares_with_digits, squares_with_digits};
use carryless_core::primes::{count_primes_with_digits, primes_with_digits};
use carryless_core::sequences::{generate, lookup, SUPPORTED};
use carryless_core::DigitNum;

const EXIT_MISMATCH: u8 = 1;
const EXIT_UNAVAILABLE: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_DOMAIN: u8 = 65;

#[derive(Parser)]
#[command(
    name = "carryless",
    version,
    about = "Carryless arithmetic mod 10: calculator, factorizer, enumerators, OEIS verification"
)]
struct Cli {
    /// Never hit the network; rely on fixtures and cache only.
    #[arg(long, global = true)]
    offline: bool,

    /// Directory for cached b-files.
    #[arg(long, global = true, env = "CARRYLESS_CACHE_DIR")]
    cache_dir: Option<PathBuf>,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Digitwise arithmetic with no carries.
    #[command(subcommand)]
    Calc(CalcOp),
    /// Class of a number: unit, evenish, fiveish, zero or regular.
    Classify { n: String },
    /// Factor into unit, special factor and primes.
    Factor {
        n: String,
        /// One factor per line: value, multiplicity, kind.
        #[arg(long)]
        machine: bool,
    },
    /// Divisors, either the full finite list or class representatives.
    Divisors { n: String },
    /// Primes with exactly K digits.
    Primes(EnumArgs),
    /// Squares with exactly K digits.
    Squares(SquaresArgs),
    /// Emit a supported sequence in b-file format.
    Seq {
        a_number: String,
        #[arg(long, default_value_t = 20)]
        terms: usize,
    },
    /// Compare a generated sequence against reference b-file data.
    Verify {
        a_number: String,
        #[arg(long, default_value_t = 200)]
        terms: usize,
        /// Use this b-file instead of fixture/cache/remote resolution.
        #[arg(long)]
        bfile: Option<PathBuf>,
    },
    /// Verify every supported sequence.
    VerifyAll {
        #[arg(long, default_value_t = 200)]
        terms: usize,
    },
}

#[derive(Subcommand)]
enum CalcOp {
    Add { a: String, b: String },
    Mul { a: String, b: String },
    Sub { a: String, b: String },
    Neg { a: String },
    Pow { a: String, exponent: u32 },
}

#[derive(Args)]
struct EnumArgs {
    #[arg(long)]
    digits: usize,
    /// Print only how many there are.
    #[arg(long)]
    count: bool,
    /// Annotate each prime with its kind (e or f).
    #[arg(long)]
    kind: bool,
}

#[derive(Args)]
struct SquaresArgs {
    #[arg(long)]
    digits: usize,
    #[arg(long)]
    count: bool,
}

enum CmdError {
    Usage(String),
    Domain(String),
}

impl CmdError {
    fn code(&self) -> u8 {
        match self {
            CmdError::Usage(_) => EXIT_USAGE,
            CmdError::Domain(_) => EXIT_DOMAIN,
        }
    }

    fn message(&self) -> &str {
        match self {
            CmdError::Usage(m) | CmdError::Domain(m) => m,
        }
    }
}

fn domain(e: impl std::fmt::Display) -> CmdError {
    CmdError::Domain(e.to_string())
}

fn parse_num(s: &str) -> Result<DigitNum, CmdError> {
    s.parse()
        .map_err(|e| CmdError::Usage(format!("bad number {s:?}: {e}")))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn run(cli: &Cli) -> Result<u8, CmdError> {
    match &cli.cmd {
        Cmd::Calc(op) => {
            println!("{}", calc(op)?);
            Ok(0)
        }
        Cmd::Classify { n } => {
            let c = classify(&parse_num(n)?);
            let mut line = c.class.token().to_string();
            if c.e_type {
                line.push_str(" e-type");
            }
            if c.f_type {
                line.push_str(" f-type");
            }
            println!("{line}");
            Ok(0)
        }
        Cmd::Factor { n, machine } => {
            let value = parse_num(n)?;
            let f = factor(&value).map_err(domain)?;
            if *machine {
                print!("{}", render_factorization_machine(&f));
            } else {
                println!("{}", render_factorization(&value, &f));
            }
            Ok(0)
        }
        Cmd::Divisors { n } => {
            let d = divisors(&parse_num(n)?).map_err(domain)?;
            match d.class_shape {
                ClassShape::Finite => {
                    println!("shape: finite");
                    for v in d.full_finite_list() {
                        println!("{v}");
                    }
                }
                shape => {
                    // infinite coset classes: print one representative each
                    let extra = match shape {
                        ClassShape::PlusFiveish => "fiveish",
                        _ => "evenish",
                    };
                    println!("shape: representatives, each class closed under adding {extra} values");
                    for v in &d.representatives {
                        println!("{v}");
                    }
                }
            }
            Ok(0)
        }
        Cmd::Primes(args) => {
            if args.count {
                let c = count_primes_with_digits(args.digits).map_err(domain)?;
                println!("{c}");
            } else {
                for rec in primes_with_digits(args.digits) {
                    if args.kind {
                        println!("{} {}", rec.value, rec.kind.token());
                    } else {
                        println!("{}", rec.value);
                    }
                }
            }
            Ok(0)
        }
        Cmd::Squares(args) => {
            if args.digits == 0 {
                return Err(CmdError::Domain("digit count must be positive".into()));
            }
            if args.count {
                println!("{}", count_squares_with_digits(args.digits));
            } else {
                for v in squares_with_digits(args.digits) {
                    println!("{v}");
                }
            }
            Ok(0)
        }
        Cmd::Seq { a_number, terms } => {
            let terms = generate(a_number, *terms).map_err(domain)?;
            for (i, v) in terms {
                println!("{i} {v}");
            }
            Ok(0)
        }
        Cmd::Verify {
            a_number,
            terms,
            bfile,
        } => {
            let report = verify_one(cli, a_number, *terms, bfile.as_deref())?;
            println!("{}", render_report(&report));
            Ok(match report.verdict {
                Verdict::Match => 0,
                Verdict::Mismatch => EXIT_MISMATCH,
                Verdict::Unavailable => EXIT_UNAVAILABLE,
            })
        }
        Cmd::VerifyAll { terms } => {
            let mut all_match = true;
            for info in SUPPORTED {
                let report = verify_one(cli, info.a_number, *terms, None)?;
                println!("{}", render_report(&report));
                all_match &= report.verdict == Verdict::Match;
            }
            Ok(if all_match { 0 } else { EXIT_MISMATCH })
        }
    }
}

fn calc(op: &CalcOp) -> Result<DigitNum, CmdError> {
    Ok(match op {
        CalcOp::Add { a, b } => parse_num(a)?.add(&parse_num(b)?),
        CalcOp::Mul { a, b } => parse_num(a)?.mul(&parse_num(b)?),
        CalcOp::Sub { a, b } => parse_num(a)?.sub(&parse_num(b)?),
        CalcOp::Neg { a } => parse_num(a)?.neg(),
        CalcOp::Pow { a, exponent } => parse_num(a)?.pow(*exponent),
    })
}

/// `505 = 5 ⊠ 51^2 (carryless)`; the unit is shown only when it is not
/// 1 or when nothing else is.
fn render_factorization(n: &DigitNum, f: &Factorization) -> String {
    let mut parts: Vec<String> = Vec::new();
    if f.unit != DigitNum::one() || (f.special.is_none() && f.primes.is_empty()) {
        parts.push(f.unit.to_string());
    }
    if let Some(s) = &f.special {
        parts.push(s.to_string());
    }
    for (p, e) in &f.primes {
        if *e == 1 {
            parts.push(p.to_string());
        } else {
            parts.push(format!("{p}^{e}"));
        }
    }
    format!("{n} = {} (carryless)", parts.join(" ⊠ "))
}

fn render_factorization_machine(f: &Factorization) -> String {
    let mut out = String::new();
    out.push_str(&format!("{} 1 unit\n", f.unit));
    if let Some(s) = &f.special {
        out.push_str(&format!("{s} 1 special\n"));
    }
    for (rec, e) in f.prime_records() {
        out.push_str(&format!("{} {} {}\n", rec.value, e, rec.kind.token()));
    }
    out
}

fn verify_one(
    cli: &Cli,
    a_number: &str,
    terms: usize,
    bfile: Option<&std::path::Path>,
) -> Result<ComparisonReport, CmdError> {
    lookup(a_number)
        .ok_or_else(|| CmdError::Domain(format!("unsupported sequence {a_number}")))?;
    let reference: BFileSeq = match bfile {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CmdError::Domain(format!("{}: {e}", path.display())))?;
            oeis::parse_bfile(a_number, &text, Source::Cache).map_err(domain)?
        }
        None => {
            let cache_dir = cli
                .cache_dir
                .clone()
                .unwrap_or_else(oeis::default_cache_dir);
            match oeis::fetch(a_number, &cache_dir, cli.offline) {
                Ok(seq) => seq,
                Err(oeis::OeisError::Unavailable { cause, .. }) => {
                    eprintln!("{a_number}: {cause}");
                    return Ok(ComparisonReport {
                        a_number: a_number.to_string(),
                        terms_compared: 0,
                        first_mismatch: None,
                        verdict: Verdict::Unavailable,
                    });
                }
                Err(e) => return Err(domain(e)),
            }
        }
    };
    let generated = generate(a_number, terms).map_err(domain)?;
    Ok(oeis::compare(&generated, &reference, terms))
}

fn render_report(r: &ComparisonReport) -> String {
    match (&r.verdict, &r.first_mismatch) {
        (Verdict::Mismatch, Some((idx, expected, actual))) => format!(
            "{} mismatch at index {idx}: reference {expected}, generated {actual}",
            r.a_number
        ),
        _ => format!(
            "{} {} ({} terms)",
            r.a_number,
            r.verdict.token(),
            r.terms_compared
        ),
    }
}
