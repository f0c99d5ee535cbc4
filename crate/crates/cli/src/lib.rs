//! Command-line front end for `hybridcipher-core`.
//!
//! [`run`] is the whole program with its streams passed in, so tests can
//! drive it without spawning a process.

pub mod args;
pub mod chart;
pub mod report;
pub mod tables;

use std::ffi::OsString;
use std::fmt;
use std::fs;
use std::io::{Read, Write};

use clap::error::ErrorKind;
use clap::Parser;
use hybridcipher_core::columnar::{decrypt_columnar, encrypt_columnar};
use hybridcipher_core::cryptanalysis::{analyze, frequency_profile, kasiski, matching_dispersion_modes, AnalysisConfig};
use hybridcipher_core::hybrid::{hybrid_decrypt, hybrid_decrypt_known_intermediate, hybrid_encrypt};
use hybridcipher_core::text_codec::{letters_from_str, normalize, to_string};
use hybridcipher_core::vigenere::{caesar_decrypt, caesar_encrypt, vigenere_decrypt, vigenere_encrypt};
use hybridcipher_core::{HybridCiphertext, Keyword, NormalizedText, ShiftKey, SolverOptions};

use args::{Cli, Command, ReportFormat, Scheme};
use report::{CandidateLine, KasiskiDocument, ReportDocument, VarianceCheck};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DATA: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Usage(String),
    Data(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Data(_) => EXIT_DATA,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Data(m) => f.write_str(m),
        }
    }
}

impl From<hybridcipher_core::Error> for CliError {
    fn from(e: hybridcipher_core::Error) -> Self {
        CliError::Data(e.to_string())
    }
}

/// Parses `args` (including the program name), executes the command and
/// returns the exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let informational = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let rendered = e.render().to_string();
            return if informational {
                let _ = stdout.write_all(rendered.as_bytes());
                EXIT_OK
            } else {
                let _ = stderr.write_all(rendered.as_bytes());
                EXIT_USAGE
            };
        }
    };
    match execute(&cli, stdin).and_then(|out| deliver(&cli, &out, stdout)) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn read_input(cli: &Cli, stdin: &mut dyn Read) -> Result<String, CliError> {
    let mut bytes = Vec::new();
    match &cli.input {
        Some(path) => {
            bytes = fs::read(path).map_err(|e| CliError::Data(format!("cannot read {}: {e}", path.display())))?
        }
        None => {
            stdin
                .read_to_end(&mut bytes)
                .map_err(|e| CliError::Data(format!("cannot read stdin: {e}")))?;
        }
    }
    let mut text = String::from_utf8(bytes).map_err(|_| CliError::Data("input is not valid UTF-8".into()))?;
    // one trailing line terminator belongs to the file, not the message
    if text.ends_with('\n') {
        text.pop();
        if text.ends_with('\r') {
            text.pop();
        }
    }
    Ok(text)
}

fn deliver(cli: &Cli, out: &str, stdout: &mut dyn Write) -> Result<(), CliError> {
    match &cli.output {
        Some(path) => fs::write(path, out).map_err(|e| CliError::Data(format!("cannot write {}: {e}", path.display()))),
        None => stdout
            .write_all(out.as_bytes())
            .map_err(|e| CliError::Data(format!("cannot write stdout: {e}"))),
    }
}

fn line(letters: &[u8]) -> String {
    let mut s = to_string(letters);
    s.push('\n');
    s
}

fn keep_or_strip(text: &NormalizedText, letters: &[u8], keep: bool) -> Result<String, CliError> {
    if keep {
        let mut s = text.reinsert(letters)?;
        s.push('\n');
        Ok(s)
    } else {
        Ok(line(letters))
    }
}

fn keyword(s: &str) -> Result<Keyword, CliError> {
    Ok(Keyword::parse(s)?)
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<String, CliError> {
    let raw = read_input(cli, stdin)?;
    let text = normalize(&raw, true)?;
    let letters = text.letters();
    match &cli.command {
        Command::Encrypt(scheme) => match scheme {
            Scheme::Caesar(a) => keep_or_strip(&text, &caesar_encrypt(letters, a.shift)?, a.keep_nonletters),
            Scheme::Vigenere(a) => {
                let key = ShiftKey::parse(&a.key)?;
                keep_or_strip(&text, &vigenere_encrypt(letters, &key)?, a.keep_nonletters)
            }
            Scheme::Columnar(a) => Ok(line(&encrypt_columnar(letters, &keyword(&a.key)?, a.pad)?)),
            Scheme::Hybrid(a) => {
                let out = hybrid_encrypt(letters, &keyword(&a.key)?, a.pad)?;
                let mut s = line(&out.cipher);
                if a.emit_intermediate {
                    s.push_str(&line(&out.intermediate));
                }
                Ok(s)
            }
        },
        Command::Decrypt(scheme) => match scheme {
            Scheme::Caesar(a) => keep_or_strip(&text, &caesar_decrypt(letters, a.shift)?, a.keep_nonletters),
            Scheme::Vigenere(a) => {
                let key = ShiftKey::parse(&a.key)?;
                keep_or_strip(&text, &vigenere_decrypt(letters, &key)?, a.keep_nonletters)
            }
            Scheme::Columnar(a) => {
                let kw = keyword(&a.key)?;
                let padded = decrypt_columnar(letters, &kw)?;
                match a.length {
                    None => Ok(line(&padded)),
                    Some(n) if n <= padded.len() && padded.len() - n < kw.len() => Ok(line(&padded[..n])),
                    Some(n) => Err(CliError::Data(format!(
                        "length {n} is inconsistent with {} letters under a {}-letter keyword",
                        padded.len(),
                        kw.len()
                    ))),
                }
            }
            Scheme::Hybrid(a) => {
                let kw = keyword(&a.key)?;
                if let Some(c1) = &a.intermediate {
                    let c1 = letters_from_str(c1)
                        .map_err(|_| CliError::Data("intermediate must contain only letters".into()))?;
                    return Ok(line(&hybrid_decrypt_known_intermediate(letters, &c1)?));
                }
                if a.max_candidates == 0 {
                    return Err(CliError::Usage("--max-candidates must be at least 1".into()));
                }
                let ht = HybridCiphertext::new(letters.to_vec(), kw)?;
                let set = hybrid_decrypt(&ht, a.pad, SolverOptions { max_candidates: a.max_candidates })?;
                if a.all_candidates {
                    let mut s = String::new();
                    for (i, c) in set.candidates().iter().enumerate() {
                        let entry = CandidateLine {
                            rank: i + 1,
                            plaintext: to_string(&c.plaintext),
                            score: c.score,
                        };
                        s.push_str(&serde_json::to_string(&entry).expect("candidate serializes"));
                        s.push('\n');
                    }
                    Ok(s)
                } else {
                    let best = set.best().ok_or_else(|| CliError::Data("no candidate plaintext".into()))?;
                    Ok(line(&best.plaintext))
                }
            }
        },
        Command::Analyze(a) => {
            let mut config = AnalysisConfig {
                min_ngram: a.min_ngram as usize,
                dispersion_mode: a.dispersion.into(),
                ..AnalysisConfig::default()
            };
            let mut table_name = "builtin".to_string();
            if let Some(path) = &a.english_table {
                config.english = tables::load_english_table(path)?;
                table_name = path.display().to_string();
            }
            if let Some(path) = &a.friedman_config {
                config.friedman = tables::load_friedman_config(path)?;
            }
            let report = analyze(letters, &config)?;
            let mut doc = ReportDocument::new(&report, &config, &text, table_name);
            if let Some(expected) = a.expect_variance {
                let modes = matching_dispersion_modes(&report.profile, expected, a.variance_tolerance);
                doc.variance_check = Some(VarianceCheck {
                    expected,
                    tolerance: a.variance_tolerance,
                    definition_mismatch: modes.is_empty(),
                    matching_modes: modes.iter().map(|m| m.name().to_string()).collect(),
                });
            }
            Ok(match a.format {
                ReportFormat::Json => doc.to_json(),
                ReportFormat::Text => doc.to_text(),
            })
        }
        Command::Kasiski(a) => {
            let min = a.min_ngram as usize;
            let doc = KasiskiDocument::new(&kasiski(letters, min)?, min, a.top);
            Ok(match a.format {
                ReportFormat::Json => {
                    let mut s = serde_json::to_string_pretty(&doc).expect("kasiski serializes");
                    s.push('\n');
                    s
                }
                ReportFormat::Text => doc.to_text(),
            })
        }
        Command::Chart(a) => Ok(chart::emit_chart(&frequency_profile(letters), a.format)),
    }
}
