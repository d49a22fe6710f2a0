//! Command-line driver: certified digits, continued fractions, complexity
//! profiles, and end-to-end verification reports.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use repx_core::analysis::{both_profiles, write_profile_csv};
use repx_core::diophantine::{continued_fraction, mu_estimate};
use repx_core::expansions::{
    generate_digits_capped, CertifiedDigits, ConstantSpec, DigitCache, DEFAULT_PRECISION_CAP,
};
use repx_core::numeric::{decimal_string, parse_rational};
use repx_core::verify::{run_batch, RunConfig, VerificationCase};
use repx_core::words::{read_word_file, Alphabet};

#[derive(Parser)]
#[command(name = "repx", version, about = "digit-expansion complexity toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct DigitSource {
    /// Constant recipe, e.g. `e`, `log1p(1,1)`, `kmosek_shallit`,
    /// `sturmian((sqrt(5)-1)/2,0)`
    #[arg(long = "const")]
    spec: String,
    /// Output base (2..=36)
    #[arg(long)]
    base: u32,
    /// Digit cache directory (optional)
    #[arg(long)]
    cache_dir: Option<PathBuf>,
    /// Maximum working precision in bits
    #[arg(long, default_value_t = DEFAULT_PRECISION_CAP)]
    precision_cap: u32,
}

impl DigitSource {
    fn fetch(&self, count: usize) -> Result<CertifiedDigits> {
        let spec: ConstantSpec = self.spec.parse().map_err(|e| anyhow::anyhow!("{e}"))?;
        let base = Alphabet::new(self.base).map_err(|e| anyhow::anyhow!("{e}"))?;
        let digits = match &self.cache_dir {
            Some(dir) => DigitCache::new(dir)
                .and_then(|cache| cache.get_or_generate(&spec, base, count, self.precision_cap)),
            None => generate_digits_capped(&spec, base, count, self.precision_cap),
        }
        .map_err(|e| anyhow::anyhow!("{e}"))?;
        Ok(digits)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Generate certified digits of a constant
    Digits {
        #[command(flatten)]
        source: DigitSource,
        /// Number of fractional digits
        #[arg(long)]
        count: usize,
    },
    /// Certified continued fraction with per-step exponent ratios
    Cf {
        #[command(flatten)]
        source: DigitSource,
        /// Number of digits to certify the expansion from
        #[arg(long)]
        digits: usize,
        /// Maximum number of partial quotients to print
        #[arg(long)]
        terms: usize,
    },
    /// Complexity and return profiles as CSV
    Profile {
        #[command(flatten)]
        input: ProfileInput,
        /// Largest factor length n
        #[arg(long)]
        nmax: usize,
        /// Output file (stdout when absent)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run verification cases and emit reports
    Verify(VerifyArgs),
}

#[derive(Args)]
struct ProfileInput {
    /// Constant recipe (needs --base and --digits)
    #[arg(long = "const")]
    spec: Option<String>,
    #[arg(long)]
    base: Option<u32>,
    /// Digit count when profiling a constant
    #[arg(long)]
    digits: Option<usize>,
    /// Profile a word from a `WORD v1` file instead
    #[arg(long, conflicts_with_all = ["spec", "base", "digits"])]
    word_file: Option<PathBuf>,
    #[arg(long)]
    cache_dir: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_PRECISION_CAP)]
    precision_cap: u32,
}

#[derive(Args)]
struct VerifyArgs {
    /// JSON config file with cache dir, precision cap, output dir, cases
    #[arg(long, conflicts_with_all = ["spec", "base", "digits", "nmax", "window", "mu_hint"])]
    config: Option<PathBuf>,
    #[arg(long = "const")]
    spec: Option<String>,
    #[arg(long)]
    base: Option<u32>,
    #[arg(long)]
    digits: Option<usize>,
    #[arg(long)]
    nmax: Option<usize>,
    /// Estimation window as `lo:hi`
    #[arg(long)]
    window: Option<String>,
    /// Externally known irrationality exponent (rational, e.g. `2` or `5/2`)
    #[arg(long)]
    mu_hint: Option<String>,
    #[arg(long)]
    cache_dir: Option<PathBuf>,
    /// Report output directory (single-case mode)
    #[arg(long, default_value = "reports")]
    out_dir: PathBuf,
    #[arg(long, default_value_t = DEFAULT_PRECISION_CAP)]
    precision_cap: u32,
}

fn cmd_digits(source: &DigitSource, count: usize) -> Result<()> {
    let digits = source.fetch(count)?;
    let mut out = std::io::stdout().lock();
    write!(
        out,
        "DIGITS v1\nid={} base={} count={}\ncert={} prec={}\n",
        digits.spec.canonical_id(),
        digits.base().size(),
        digits.count(),
        digits.certificate.tail_bound,
        digits.certificate.precision_bits
    )?;
    let text = digits.digits.to_string();
    for chunk in text.as_bytes().chunks(80) {
        out.write_all(chunk)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

fn cmd_cf(source: &DigitSource, digit_count: usize, terms: usize) -> Result<()> {
    let digits = source.fetch(digit_count)?;
    let cf = continued_fraction(&digits).map_err(|e| anyhow::anyhow!("{e}"))?;
    let estimate = mu_estimate(&cf).map_err(|e| anyhow::anyhow!("{e}"))?;
    let shown = terms.min(cf.terms());
    let ratio_at = |k: usize| {
        estimate
            .per_step
            .iter()
            .find(|s| s.k == k)
            .map(|s| decimal_string(&s.ratio, 6))
            .unwrap_or_default()
    };
    let mut out = std::io::stdout().lock();
    writeln!(out, "k,a_k,q_k,step_ratio")?;
    writeln!(out, "0,{},1,{}", cf.a0, ratio_at(0))?;
    for k in 1..=shown {
        writeln!(
            out,
            "{k},{},{},{}",
            cf.partial_quotients[k - 1],
            cf.q(k),
            ratio_at(k)
        )?;
    }
    eprintln!(
        "certified terms: {}; mu_hat = {} (step {})",
        cf.terms(),
        decimal_string(&estimate.mu_hat, 6),
        estimate.k_used
    );
    Ok(())
}

fn cmd_profile(input: &ProfileInput, nmax: usize, out: Option<&PathBuf>) -> Result<()> {
    let word = match (&input.word_file, &input.spec) {
        (Some(path), _) => read_word_file(path).map_err(|e| anyhow::anyhow!("{e}"))?,
        (None, Some(spec)) => {
            let source = DigitSource {
                spec: spec.clone(),
                base: input.base.context("--base required with --const")?,
                cache_dir: input.cache_dir.clone(),
                precision_cap: input.precision_cap,
            };
            let count = input.digits.context("--digits required with --const")?;
            source.fetch(count)?.digits
        }
        (None, None) => bail!("either --word-file or --const is required"),
    };
    let (complexity, returns) = both_profiles(&word, nmax).map_err(|e| anyhow::anyhow!("{e}"))?;
    match out {
        Some(path) => {
            let mut buf = Vec::new();
            write_profile_csv(&complexity, &returns, &mut buf)
                .map_err(|e| anyhow::anyhow!("{e}"))?;
            std::fs::write(path, buf)?;
        }
        None => {
            write_profile_csv(&complexity, &returns, std::io::stdout().lock())
                .map_err(|e| anyhow::anyhow!("{e}"))?;
        }
    }
    Ok(())
}

fn parse_window(text: &str) -> Result<(usize, usize)> {
    let (lo, hi) = text
        .split_once(':')
        .context("window must be written lo:hi")?;
    Ok((lo.trim().parse()?, hi.trim().parse()?))
}

fn cmd_verify(args: &VerifyArgs) -> Result<bool> {
    let config = match &args.config {
        Some(path) => RunConfig::from_json_file(path).map_err(|e| anyhow::anyhow!("{e}"))?,
        None => {
            let spec: ConstantSpec = args
                .spec
                .as_deref()
                .context("--const required without --config")?
                .parse()
                .map_err(|e| anyhow::anyhow!("{e}"))?;
            let base = Alphabet::new(args.base.context("--base required")?)
                .map_err(|e| anyhow::anyhow!("{e}"))?;
            let digit_count = args.digits.context("--digits required")?;
            let n_max = args.nmax.context("--nmax required")?;
            let window = match &args.window {
                Some(w) => parse_window(w)?,
                None => repx_core::analysis::default_window(n_max),
            };
            let mu_hint = args
                .mu_hint
                .as_deref()
                .map(parse_rational)
                .transpose()
                .map_err(|e| anyhow::anyhow!("{e}"))?;
            RunConfig {
                cache_dir: args.cache_dir.clone(),
                precision_cap_bits: args.precision_cap,
                output_dir: args.out_dir.clone(),
                cases: vec![VerificationCase {
                    spec,
                    base,
                    digit_count,
                    n_max,
                    window,
                    mu_hint,
                }],
            }
        }
    };
    let outcomes = run_batch(&config).map_err(|e| anyhow::anyhow!("{e}"))?;
    let mut clean = true;
    for outcome in &outcomes {
        match &outcome.result {
            Ok(artifacts) => {
                let status = if artifacts.violation {
                    clean = false;
                    "VIOLATED"
                } else {
                    "ok"
                };
                println!(
                    "{}: {status} -> {}",
                    outcome.case_id,
                    artifacts.json_path.display()
                );
            }
            Err(e) => {
                clean = false;
                println!("{}: ERROR {e}", outcome.case_id);
            }
        }
    }
    Ok(clean)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Digits { source, count } => cmd_digits(source, *count).map(|()| true),
        Command::Cf {
            source,
            digits,
            terms,
        } => cmd_cf(source, *digits, *terms).map(|()| true),
        Command::Profile { input, nmax, out } => {
            cmd_profile(input, *nmax, out.as_ref()).map(|()| true)
        }
        Command::Verify(args) => cmd_verify(args),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
