//! The JSON analysis report.
//!
//! The first nine fields have fixed names and types (see
//! `data/report.schema.json`); the rest carry provenance and the extra
//! statistics that have no fixed field.

use std::collections::BTreeMap;
use std::fmt::Write;

use hybridcipher_core::cryptanalysis::{AnalysisConfig, AnalysisReport, FactorHistogram, KasiskiReport};
use hybridcipher_core::text_codec::to_string;
use hybridcipher_core::NormalizedText;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub n: u64,
    pub ic: f64,
    pub chi2_english: f64,
    pub chi2_uniform: f64,
    pub entropy_bits: f64,
    pub variance: f64,
    pub std_dev: f64,
    /// `None` only when the estimate is not a finite number.
    pub friedman_keylen: Option<f64>,
    pub counts: BTreeMap<String, u64>,
    pub friedman_unstable: bool,
    pub friedman_denominator: f64,
    pub dispersion: Vec<DispersionEntry>,
    pub kasiski_peaks: Vec<usize>,
    pub kasiski_factors: Vec<FactorCount>,
    /// Present when a reference variance was supplied: the modes that
    /// reproduce it. Empty means no standard definition matches.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variance_check: Option<VarianceCheck>,
    pub input: InputDigest,
    pub scheme: SchemeParameters,
    pub tool_version: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DispersionEntry {
    pub mode: String,
    pub variance: f64,
    pub std_dev: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VarianceCheck {
    pub expected: f64,
    pub tolerance: f64,
    pub matching_modes: Vec<String>,
    pub definition_mismatch: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorCount {
    pub factor: usize,
    pub count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputDigest {
    /// Characters in the input, before normalization.
    pub length: usize,
    /// Letters kept after normalization.
    pub letters: usize,
    /// True when normalization removed nothing.
    pub letters_only: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SchemeParameters {
    /// `"builtin"` or the path of the English table file.
    pub english_table: String,
    pub dispersion_mode: String,
    pub min_ngram: usize,
    pub kappa_plain: f64,
    pub kappa_random: f64,
    pub friedman_numerator: f64,
}

pub const TOOL_VERSION: &str = concat!("hybridcipher ", env!("CARGO_PKG_VERSION"));

pub fn factor_counts(h: &FactorHistogram) -> Vec<FactorCount> {
    h.entries().map(|(factor, count)| FactorCount { factor, count }).collect()
}

impl ReportDocument {
    pub fn new(
        report: &AnalysisReport,
        config: &AnalysisConfig,
        input: &NormalizedText,
        english_table: String,
    ) -> Self {
        let key_length = report.friedman.key_length;
        ReportDocument {
            n: report.profile.total(),
            ic: report.ic,
            chi2_english: report.chi2_english,
            chi2_uniform: report.chi2_uniform,
            entropy_bits: report.entropy_bits,
            variance: report.variance,
            std_dev: report.std_dev,
            friedman_keylen: key_length.is_finite().then_some(key_length),
            counts: (0..26u8)
                .map(|l| (((b'A' + l) as char).to_string(), report.profile.count(l)))
                .collect(),
            friedman_unstable: report.friedman.unstable,
            friedman_denominator: report.friedman.denominator,
            dispersion: report
                .dispersion_modes
                .iter()
                .map(|(mode, d)| DispersionEntry {
                    mode: mode.name().to_string(),
                    variance: d.variance,
                    std_dev: d.std_dev,
                })
                .collect(),
            kasiski_peaks: report.kasiski.factors.peaks(3),
            kasiski_factors: factor_counts(&report.kasiski.factors),
            variance_check: None,
            input: InputDigest {
                length: input.original_length(),
                letters: input.len(),
                letters_only: input.removed().is_empty(),
            },
            scheme: SchemeParameters {
                english_table,
                dispersion_mode: config.dispersion_mode.name().to_string(),
                min_ngram: config.min_ngram,
                kappa_plain: config.friedman.kappa_plain,
                kappa_random: config.friedman.kappa_random,
                friedman_numerator: config.friedman.numerator,
            },
            tool_version: TOOL_VERSION.to_string(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let keylen = match self.friedman_keylen {
            Some(k) => format!("{k:.4}"),
            None => "undefined".into(),
        };
        let rows: [(&str, String); 8] = [
            ("letters", self.n.to_string()),
            ("index of coincidence", format!("{:.6}", self.ic)),
            ("chi-squared (English)", format!("{:.4}", self.chi2_english)),
            ("chi-squared (uniform)", format!("{:.4}", self.chi2_uniform)),
            ("entropy (bits)", format!("{:.6}", self.entropy_bits)),
            ("variance", format!("{:.4} ({})", self.variance, self.scheme.dispersion_mode)),
            ("standard deviation", format!("{:.4}", self.std_dev)),
            (
                "Friedman key length",
                format!("{keylen}{}", if self.friedman_unstable { " (unstable)" } else { "" }),
            ),
        ];
        for (name, value) in rows {
            writeln!(out, "{name:<24}{value}").unwrap();
        }
        for d in &self.dispersion {
            writeln!(out, "{:<24}variance {:.4}, std dev {:.4}", d.mode, d.variance, d.std_dev).unwrap();
        }
        if let Some(check) = &self.variance_check {
            let verdict = if check.definition_mismatch {
                "no standard definition reproduces it".to_string()
            } else {
                format!("reproduced by {}", check.matching_modes.join(", "))
            };
            writeln!(out, "{:<24}{} (+/- {}): {verdict}", "expected variance", check.expected, check.tolerance).unwrap();
        }
        writeln!(out, "{:<24}{:?}", "Kasiski peaks", self.kasiski_peaks).unwrap();
        writeln!(out, "{:<24}{}", "English table", self.scheme.english_table).unwrap();
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KasiskiDocument {
    pub min_ngram: usize,
    pub repeats: Vec<RepeatEntry>,
    pub factors: Vec<FactorCount>,
    pub peaks: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepeatEntry {
    pub ngram: String,
    pub positions: Vec<usize>,
    pub distances: Vec<usize>,
}

impl KasiskiDocument {
    pub fn new(report: &KasiskiReport, min_ngram: usize, top: usize) -> Self {
        KasiskiDocument {
            min_ngram,
            repeats: report
                .repeats
                .iter()
                .map(|r| RepeatEntry {
                    ngram: to_string(&r.ngram),
                    positions: r.positions.clone(),
                    distances: r.distances.clone(),
                })
                .collect(),
            factors: factor_counts(&report.factors),
            peaks: report.factors.peaks(top),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.repeats {
            writeln!(out, "{} at {:?} distances {:?}", r.ngram, r.positions, r.distances).unwrap();
        }
        let factors: Vec<String> = self.factors.iter().map(|f| format!("{}:{}", f.factor, f.count)).collect();
        writeln!(out, "factors {}", factors.join(" ")).unwrap();
        writeln!(out, "peaks {:?}", self.peaks).unwrap();
        out
    }
}

/// One line of `decrypt hybrid --all-candidates`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CandidateLine {
    pub rank: usize,
    pub plaintext: String,
    pub score: f64,
}
