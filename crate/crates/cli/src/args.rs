//! Command-line grammar.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hybridcipher_core::cryptanalysis::DispersionMode;
use hybridcipher_core::hybrid::DEFAULT_MAX_CANDIDATES;
use hybridcipher_core::PaddingPolicy;

use crate::chart::ChartFormat;

#[derive(Debug, Parser)]
#[command(
    name = "hybridcipher",
    version,
    about = "Columnar-keyed Vigenere hybrid cipher, classical ciphers and frequency cryptanalysis",
    long_about = "Columnar-keyed Vigenere hybrid cipher, classical ciphers and frequency cryptanalysis.\n\n\
        Input is read from stdin (or --in FILE) and letters are case-folded; spaces and \
        punctuation are stripped. Ciphertext is written as uppercase A-Z with no separators.\n\n\
        Exit status: 0 on success, 1 on usage errors, 2 on invalid data."
)]
pub struct Cli {
    /// Read input from FILE instead of stdin.
    #[arg(long = "in", value_name = "FILE", global = true)]
    pub input: Option<PathBuf>,
    /// Write output to FILE instead of stdout.
    #[arg(long = "out", value_name = "FILE", global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Encrypt the input.
    #[command(subcommand)]
    Encrypt(Scheme<EncryptColumnar, EncryptHybrid>),
    /// Decrypt the input.
    #[command(subcommand)]
    Decrypt(Scheme<DecryptColumnar, DecryptHybrid>),
    /// Full statistics report (I.C., chi-squared, entropy, dispersion, Friedman, Kasiski).
    ///
    /// chi2_english is measured against the shipped English monogram table
    /// (conventional published frequencies, also in data/english.csv) unless
    /// --english-table or HYBRIDCIPHER_ENGLISH_TABLE names another one; the
    /// figure is only meaningful relative to that table.
    Analyze(AnalyzeArgs),
    /// Repeated n-grams, their distances and the factor histogram.
    Kasiski(KasiskiArgs),
    /// Letter-frequency chart: 26 rows of LETTER,count,percent or bars.
    Chart(ChartArgs),
}

#[derive(Debug, Subcommand)]
pub enum Scheme<C: Args, H: Args> {
    /// Caesar shift.
    Caesar(CaesarArgs),
    /// Vigenere with a repeating letter key.
    Vigenere(VigenereArgs),
    /// Keyword columnar transposition.
    Columnar(C),
    /// Vigenere keyed by the columnar transposition of the message itself.
    Hybrid(H),
}

#[derive(Debug, Args)]
pub struct CaesarArgs {
    /// Shift, 0-25.
    #[arg(long, value_parser = clap::value_parser!(u8).range(0..26))]
    pub shift: u8,
    /// Keep spaces and punctuation in place instead of stripping them.
    #[arg(long)]
    pub keep_nonletters: bool,
}

#[derive(Debug, Args)]
pub struct VigenereArgs {
    /// Letter key (A = shift 0).
    #[arg(long)]
    pub key: String,
    /// Keep spaces and punctuation in place instead of stripping them.
    #[arg(long)]
    pub keep_nonletters: bool,
}

fn parse_pad(s: &str) -> Result<PaddingPolicy, String> {
    match s {
        "first-key-char" => Ok(PaddingPolicy::FirstKeyChar),
        "none" => Ok(PaddingPolicy::None),
        _ => match s.as_bytes() {
            [c] if c.is_ascii_alphabetic() => Ok(PaddingPolicy::FixedChar(c.to_ascii_uppercase() - b'A')),
            _ => Err("expected first-key-char, none or a single letter".into()),
        },
    }
}

#[derive(Debug, Args)]
pub struct EncryptColumnar {
    /// Transposition keyword.
    #[arg(long)]
    pub key: String,
    /// Padding that completes the last row: first-key-char, none, or a letter.
    #[arg(long, default_value = "first-key-char", value_parser = parse_pad)]
    pub pad: PaddingPolicy,
}

#[derive(Debug, Args)]
pub struct DecryptColumnar {
    /// Transposition keyword.
    #[arg(long)]
    pub key: String,
    /// Original message length; padding beyond it is dropped.
    #[arg(long)]
    pub length: Option<usize>,
}

#[derive(Debug, Args)]
pub struct EncryptHybrid {
    /// Transposition keyword.
    #[arg(long)]
    pub key: String,
    /// Padding that completes the last row: first-key-char, none, or a letter.
    #[arg(long, default_value = "first-key-char", value_parser = parse_pad)]
    pub pad: PaddingPolicy,
    /// Also print the columnar intermediate (the Vigenere key) on a second line.
    #[arg(long)]
    pub emit_intermediate: bool,
}

#[derive(Debug, Args)]
pub struct DecryptHybrid {
    /// Transposition keyword.
    #[arg(long)]
    pub key: String,
    /// Padding used at encryption: first-key-char, none, or a letter.
    #[arg(long, default_value = "first-key-char", value_parser = parse_pad)]
    pub pad: PaddingPolicy,
    /// Known columnar intermediate; decrypts directly without solving.
    #[arg(long, conflicts_with_all = ["all_candidates", "max_candidates"])]
    pub intermediate: Option<String>,
    /// Print every candidate, best first, as JSON lines.
    #[arg(long)]
    pub all_candidates: bool,
    /// Cap on enumerated candidates.
    #[arg(long, default_value_t = DEFAULT_MAX_CANDIDATES, value_parser = clap::value_parser!(usize))]
    pub max_candidates: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DispersionArg {
    /// Population variance of the 26 letter counts.
    CountsOver26,
    /// Population variance of the 26 letter percentages.
    PercentsOver26,
    /// Population variance of the counts of letters that occur.
    CountsOverPresent,
}

impl From<DispersionArg> for DispersionMode {
    fn from(d: DispersionArg) -> Self {
        match d {
            DispersionArg::CountsOver26 => DispersionMode::CountsOver26,
            DispersionArg::PercentsOver26 => DispersionMode::PercentsOver26,
            DispersionArg::CountsOverPresent => DispersionMode::CountsOverPresent,
        }
    }
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// English monogram table: 26 lines LETTER,probability summing to 1 +/- 1e-6.
    #[arg(long, value_name = "FILE", env = "HYBRIDCIPHER_ENGLISH_TABLE")]
    pub english_table: Option<PathBuf>,
    /// TOML file overriding kappa_plain, kappa_random and numerator.
    #[arg(long, value_name = "FILE")]
    pub friedman_config: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    pub format: ReportFormat,
    /// Shortest repeated n-gram counted by the Kasiski examination.
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(2..))]
    pub min_ngram: u64,
    /// Value set behind the headline variance and std_dev.
    #[arg(long, value_enum, default_value_t = DispersionArg::CountsOver26)]
    pub dispersion: DispersionArg,
    /// Published variance to compare against every dispersion mode.
    #[arg(long, value_name = "VARIANCE")]
    pub expect_variance: Option<f64>,
    /// Tolerance for --expect-variance.
    #[arg(long, default_value_t = 1e-3, requires = "expect_variance")]
    pub variance_tolerance: f64,
}

#[derive(Debug, Args)]
pub struct KasiskiArgs {
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(2..))]
    pub min_ngram: u64,
    /// Number of histogram peaks to report.
    #[arg(long, default_value_t = 3)]
    pub top: usize,
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    pub format: ReportFormat,
}

#[derive(Debug, Args)]
pub struct ChartArgs {
    #[arg(long, value_enum, default_value_t = ChartFormat::Csv)]
    pub format: ChartFormat,
}
