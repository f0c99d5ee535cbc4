//! Frequency statistics for letters-only text.
//!
//! Everything here works on the `0..=25` symbol domain; strip non-letters
//! with [`crate::text_codec::normalize`] first.

mod friedman;
mod kasiski;
mod language;
mod reference;

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::ALPHABET_LEN;

pub use friedman::{friedman_from_ic, friedman_keylength, FriedmanConstants, FriedmanEstimate};
pub use kasiski::{kasiski, FactorHistogram, KasiskiReport, Repeat, MAX_FACTOR};
pub use language::{english_chi_squared, english_score, trigram_nll};
pub use reference::ReferenceDistribution;

/// Letter counts `f_A..f_Z` and their total.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct FrequencyProfile {
    counts: [u64; ALPHABET_LEN],
    total: u64,
}

impl FrequencyProfile {
    /// Builds a profile from explicit counts.
    pub fn from_counts(counts: [u64; ALPHABET_LEN]) -> Self {
        FrequencyProfile {
            total: counts.iter().sum(),
            counts,
        }
    }

    pub fn counts(&self) -> &[u64; ALPHABET_LEN] {
        &self.counts
    }

    pub fn count(&self, letter: u8) -> u64 {
        self.counts[letter as usize]
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    /// Share of `letter` in percent; zero for an empty profile.
    pub fn percent(&self, letter: u8) -> f64 {
        if self.total == 0 {
            0.0
        } else {
            100.0 * self.count(letter) as f64 / self.total as f64
        }
    }

    /// Number of distinct letters present.
    pub fn present(&self) -> usize {
        self.counts.iter().filter(|&&c| c > 0).count()
    }
}

/// Counts each symbol of `text`. Symbols must be in `0..=25`.
pub fn frequency_profile(text: &[u8]) -> FrequencyProfile {
    let mut counts = [0u64; ALPHABET_LEN];
    for &s in text {
        counts[s as usize] += 1;
    }
    FrequencyProfile::from_counts(counts)
}

/// `sum f_i (f_i - 1) / (N (N - 1))`, without the x26 normalization.
pub fn index_of_coincidence(profile: &FrequencyProfile) -> Result<f64> {
    let n = profile.total();
    if n < 2 {
        return Err(Error::UndefinedStatistic {
            needed: 2,
            got: n as usize,
        });
    }
    let pairs: u64 = profile.counts().iter().map(|&f| f * f.saturating_sub(1)).sum();
    Ok(pairs as f64 / (n * (n - 1)) as f64)
}

/// Pearson statistic `sum (f_i - N p_i)^2 / (N p_i)` against `reference`.
pub fn chi_squared(profile: &FrequencyProfile, reference: &ReferenceDistribution) -> Result<f64> {
    let n = profile.total();
    if n == 0 {
        return Err(Error::UndefinedStatistic { needed: 1, got: 0 });
    }
    let n = n as f64;
    let mut acc = 0.0;
    for (i, (&f, &p)) in profile.counts().iter().zip(reference.probs()).enumerate() {
        if p <= 0.0 {
            return Err(Error::ZeroReferenceProbability((b'A' + i as u8) as char));
        }
        let expected = n * p;
        let diff = f as f64 - expected;
        acc += diff * diff / expected;
    }
    Ok(acc)
}

/// Shannon entropy of the letter distribution in the given log base.
pub fn entropy(profile: &FrequencyProfile, base: f64) -> Result<f64> {
    let n = profile.total();
    if n == 0 {
        return Err(Error::UndefinedStatistic { needed: 1, got: 0 });
    }
    if !(base > 0.0 && base != 1.0) {
        return Err(Error::InvalidParameter("entropy base must be positive and not 1"));
    }
    let n = n as f64;
    let nats: f64 = profile
        .counts()
        .iter()
        .filter(|&&f| f > 0)
        .map(|&f| {
            let p = f as f64 / n;
            -p * libm::log(p)
        })
        .sum();
    // the sum is exactly zero for a single letter; avoid returning -0.0
    Ok((nats / libm::log(base)).max(0.0))
}

/// Which values the variance is taken over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum DispersionMode {
    /// Raw counts of all 26 letters.
    #[default]
    CountsOver26,
    /// Percent shares of all 26 letters.
    PercentsOver26,
    /// Raw counts of the letters that occur.
    CountsOverPresent,
}

impl DispersionMode {
    pub const ALL: [DispersionMode; 3] = [
        DispersionMode::CountsOver26,
        DispersionMode::PercentsOver26,
        DispersionMode::CountsOverPresent,
    ];

    pub fn name(self) -> &'static str {
        match self {
            DispersionMode::CountsOver26 => "counts_over_26",
            DispersionMode::PercentsOver26 => "percents_over_26",
            DispersionMode::CountsOverPresent => "counts_over_present",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dispersion {
    pub variance: f64,
    pub std_dev: f64,
}

/// Population variance and standard deviation of the selected value set.
/// An empty profile has zero dispersion.
pub fn dispersion(profile: &FrequencyProfile, mode: DispersionMode) -> Dispersion {
    let n = profile.total() as f64;
    let values: Vec<f64> = match mode {
        DispersionMode::CountsOver26 => profile.counts().iter().map(|&f| f as f64).collect(),
        DispersionMode::PercentsOver26 => (0..ALPHABET_LEN as u8).map(|l| profile.percent(l)).collect(),
        DispersionMode::CountsOverPresent => profile
            .counts()
            .iter()
            .filter(|&&f| f > 0)
            .map(|&f| f as f64)
            .collect(),
    };
    if values.is_empty() || n == 0.0 {
        return Dispersion {
            variance: 0.0,
            std_dev: 0.0,
        };
    }
    let len = values.len() as f64;
    let mean = values.iter().sum::<f64>() / len;
    let variance = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / len;
    Dispersion {
        variance,
        std_dev: libm::sqrt(variance),
    }
}

/// Modes whose variance lies within `tol` of `target`. Empty when no standard
/// definition reproduces the figure.
pub fn matching_dispersion_modes(
    profile: &FrequencyProfile,
    target_variance: f64,
    tol: f64,
) -> Vec<DispersionMode> {
    DispersionMode::ALL
        .into_iter()
        .filter(|&m| libm::fabs(dispersion(profile, m).variance - target_variance) <= tol)
        .collect()
}

/// Settings for [`analyze`].
#[derive(Debug, Clone, PartialEq)]
pub struct AnalysisConfig {
    pub english: ReferenceDistribution,
    pub friedman: FriedmanConstants,
    pub min_ngram: usize,
    /// Mode reported as the headline variance/std_dev.
    pub dispersion_mode: DispersionMode,
}

impl Default for AnalysisConfig {
    fn default() -> Self {
        AnalysisConfig {
            english: ReferenceDistribution::english().clone(),
            friedman: FriedmanConstants::default(),
            min_ngram: 3,
            dispersion_mode: DispersionMode::CountsOver26,
        }
    }
}

/// Full statistics battery for one text.
#[derive(Debug, Clone, PartialEq)]
pub struct AnalysisReport {
    pub profile: FrequencyProfile,
    pub ic: f64,
    pub chi2_english: f64,
    pub chi2_uniform: f64,
    pub entropy_bits: f64,
    pub variance: f64,
    pub std_dev: f64,
    /// Dispersion under every mode, in [`DispersionMode::ALL`] order.
    pub dispersion_modes: [(DispersionMode, Dispersion); 3],
    pub kasiski: KasiskiReport,
    pub friedman: FriedmanEstimate,
}

/// Runs every statistic on `text`. Needs at least two letters.
pub fn analyze(text: &[u8], config: &AnalysisConfig) -> Result<AnalysisReport> {
    let profile = frequency_profile(text);
    let ic = index_of_coincidence(&profile)?;
    let headline = dispersion(&profile, config.dispersion_mode);
    let dispersion_modes = DispersionMode::ALL.map(|m| (m, dispersion(&profile, m)));
    Ok(AnalysisReport {
        ic,
        chi2_english: chi_squared(&profile, &config.english)?,
        chi2_uniform: chi_squared(&profile, &ReferenceDistribution::uniform())?,
        entropy_bits: entropy(&profile, 2.0)?,
        variance: headline.variance,
        std_dev: headline.std_dev,
        dispersion_modes,
        kasiski: kasiski(text, config.min_ngram)?,
        friedman: friedman_from_ic(ic, profile.total(), &config.friedman),
        profile,
    })
}
