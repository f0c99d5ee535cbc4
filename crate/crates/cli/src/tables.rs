//! Configuration files: the English reference table and Friedman constants.

use std::fs;
use std::path::Path;

use hybridcipher_core::cryptanalysis::{FriedmanConstants, ReferenceDistribution};
use serde::Deserialize;

use crate::CliError;

/// Accepted deviation of the table's probability sum from 1.
pub const TABLE_SUM_TOLERANCE: f64 = 1e-6;

/// Parses 26 `LETTER,probability` lines, one per letter in any order.
/// Blank lines are ignored. The sum must be 1 within 1e-6; the accepted
/// table is renormalized to sum to 1 exactly.
pub fn parse_english_table(text: &str) -> Result<ReferenceDistribution, String> {
    let mut probs = [None::<f64>; 26];
    for (lineno, line) in text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())) {
        if line.is_empty() {
            continue;
        }
        let (letter, value) = line
            .split_once(',')
            .ok_or_else(|| format!("line {lineno}: expected LETTER,probability"))?;
        let letter = match letter.trim().as_bytes() {
            [c] if c.is_ascii_alphabetic() => c.to_ascii_uppercase() - b'A',
            _ => return Err(format!("line {lineno}: {letter:?} is not a single letter")),
        };
        let value: f64 = value
            .trim()
            .parse()
            .map_err(|_| format!("line {lineno}: {value:?} is not a number"))?;
        if !value.is_finite() || value < 0.0 {
            return Err(format!("line {lineno}: probability must be finite and non-negative"));
        }
        if probs[letter as usize].replace(value).is_some() {
            return Err(format!("line {lineno}: letter {} listed twice", (b'A' + letter) as char));
        }
    }
    let mut out = [0.0; 26];
    for (i, p) in probs.iter().enumerate() {
        out[i] = p.ok_or_else(|| format!("letter {} missing", (b'A' + i as u8) as char))?;
    }
    let sum: f64 = out.iter().sum();
    if (sum - 1.0).abs() > TABLE_SUM_TOLERANCE {
        return Err(format!("probabilities sum to {sum}, not 1 +/- {TABLE_SUM_TOLERANCE}"));
    }
    ReferenceDistribution::from_weights(out).map_err(|e| e.to_string())
}

pub fn load_english_table(path: &Path) -> Result<ReferenceDistribution, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Data(format!("cannot read English table {}: {e}", path.display())))?;
    parse_english_table(&text)
        .map_err(|e| CliError::Data(format!("invalid English table {}: {e}", path.display())))
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct FriedmanFile {
    kappa_plain: Option<f64>,
    kappa_random: Option<f64>,
    numerator: Option<f64>,
}

/// TOML with optional `kappa_plain`, `kappa_random` and `numerator` keys;
/// missing keys keep their defaults.
pub fn parse_friedman_config(text: &str) -> Result<FriedmanConstants, String> {
    let file: FriedmanFile = toml::from_str(text).map_err(|e| e.to_string())?;
    let d = FriedmanConstants::default();
    let c = FriedmanConstants {
        kappa_plain: file.kappa_plain.unwrap_or(d.kappa_plain),
        kappa_random: file.kappa_random.unwrap_or(d.kappa_random),
        numerator: file.numerator.unwrap_or(d.numerator),
    };
    if [c.kappa_plain, c.kappa_random, c.numerator].iter().any(|v| !v.is_finite()) {
        return Err("constants must be finite".into());
    }
    Ok(c)
}

pub fn load_friedman_config(path: &Path) -> Result<FriedmanConstants, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Data(format!("cannot read Friedman config {}: {e}", path.display())))?;
    parse_friedman_config(&text)
        .map_err(|e| CliError::Data(format!("invalid Friedman config {}: {e}", path.display())))
}
