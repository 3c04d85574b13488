//! `jackd`: Jack derangement sums and derangement graph spectra from the command line.

mod cache;
mod output;
mod suites;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use jackd_core::{AlphaSpec, Method, Partition};

use crate::output::Format;
use crate::suites::Suite;

#[derive(Debug, Parser)]
#[command(
    name = "jackd",
    version,
    about = "Jack derangement sums and derangement graph spectra"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    format: Format,
    /// Character-table cache directory [default: $JACKD_CACHE, else ./.jackd-cache].
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// The eigenvalue η^λ_α for one shape.
    Eta(EtaArgs),
    /// η^λ_α and multiplicities for every λ ⊢ n.
    Spectrum(SpectrumArgs),
    /// Colored derangement counts d^λ_k by number of cycles.
    Profile(ShapeArgs),
    /// Immanantal polynomial coefficients and d_λ.
    Immanant(ShapeArgs),
    /// Runs a verification suite.
    Check(CheckArgs),
}

#[derive(Debug, Args)]
struct ShapeArgs {
    /// Partition as comma-separated parts, e.g. 3,2,1.
    #[arg(long, value_parser = parse_shape)]
    shape: Partition,
}

#[derive(Debug, Args)]
struct EtaArgs {
    #[command(flatten)]
    shape: ShapeArgs,
    /// "sym" for the polynomial in α, or an integer or p/q.
    #[arg(long, default_value = "sym", value_parser = parse_alpha)]
    alpha: AlphaSpec,
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    method: MethodArg,
}

#[derive(Debug, Args)]
struct SpectrumArgs {
    #[arg(long)]
    n: usize,
    /// "sym" for polynomials in α, or an integer or p/q.
    #[arg(long, default_value = "sym", value_parser = parse_alpha)]
    alpha: AlphaSpec,
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    method: MethodArg,
}

#[derive(Debug, Args)]
struct CheckArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    suite: Suite,
    /// Largest n to check [default: per suite].
    #[arg(long)]
    max_n: Option<usize>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Colored,
    Minors,
    Rencontres,
    Closed1,
    Det1,
    Closed2,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Auto => Method::Auto,
            MethodArg::Colored => Method::Colored,
            MethodArg::Minors => Method::Minors,
            MethodArg::Rencontres => Method::Rencontres,
            MethodArg::Closed1 => Method::Closed1,
            MethodArg::Det1 => Method::Det1,
            MethodArg::Closed2 => Method::Closed2,
        }
    }
}

fn parse_shape(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: jackd_core::Error| e.to_string())
}

fn parse_alpha(s: &str) -> Result<AlphaSpec, String> {
    s.parse().map_err(|e: jackd_core::Error| e.to_string())
}

fn cache_dir(flag: Option<PathBuf>) -> PathBuf {
    flag.or_else(|| {
        std::env::var_os("JACKD_CACHE")
            .filter(|v| !v.is_empty())
            .map(PathBuf::from)
    })
    .unwrap_or_else(|| PathBuf::from(".jackd-cache"))
}

/// Output text and whether every check passed.
fn run(cli: Cli) -> Result<(String, bool), String> {
    let fmt = cli.format;
    let err = |e: jackd_core::Error| e.to_string();
    match cli.command {
        Command::Eta(a) => {
            let method = Method::from(a.method);
            let value =
                jackd_core::spectra::eta_with(&a.shape.shape, &a.alpha, method).map_err(err)?;
            Ok((
                output::eta(fmt, &a.shape.shape, &a.alpha, method, &value),
                true,
            ))
        }
        Command::Spectrum(a) => {
            let table =
                jackd_core::spectra::spectrum_table(a.n, &a.alpha, a.method.into()).map_err(err)?;
            Ok((output::spectrum(fmt, &table), true))
        }
        Command::Profile(a) => {
            let p = jackd_core::colored::colored_derangement_counts(&a.shape).map_err(err)?;
            Ok((output::profile(fmt, &p), true))
        }
        Command::Immanant(a) => {
            let coeffs = jackd_core::spectra::immanant_polynomial(&a.shape).map_err(err)?;
            let d = jackd_core::spectra::d_lambda(&a.shape);
            Ok((output::immanant(fmt, &a.shape, &d, &coeffs), true))
        }
        Command::Check(a) => {
            let cache = cache::CharacterCache::new(cache_dir(cli.cache_dir));
            let report = suites::run(a.suite, a.max_n, &cache)?;
            let pass = report.pass();
            Ok((output::check(fmt, &report), pass))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok((text, pass)) => {
            print!("{text}");
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
