use crate::error::{Error, Result};
use crate::ALPHABET_LEN;

/// Letter probabilities `p_A..p_Z` summing to 1.
#[derive(Debug, Clone, PartialEq)]
pub struct ReferenceDistribution {
    probs: [f64; ALPHABET_LEN],
}

/// Conventional English monogram frequencies in percent.
const ENGLISH_PERCENT: [f64; ALPHABET_LEN] = [
    8.167, 1.492, 2.782, 4.253, 12.702, 2.228, 2.015, 6.094, 6.966, 0.153, 0.772, 4.025, 2.406,
    6.749, 7.507, 1.929, 0.095, 5.987, 6.327, 9.056, 2.758, 0.978, 2.360, 0.150, 1.974, 0.074,
];

const fn normalized(weights: [f64; ALPHABET_LEN]) -> [f64; ALPHABET_LEN] {
    let mut sum = 0.0;
    let mut i = 0;
    while i < ALPHABET_LEN {
        sum += weights[i];
        i += 1;
    }
    let mut out = [0.0; ALPHABET_LEN];
    let mut i = 0;
    while i < ALPHABET_LEN {
        out[i] = weights[i] / sum;
        i += 1;
    }
    out
}

static ENGLISH: ReferenceDistribution = ReferenceDistribution {
    probs: normalized(ENGLISH_PERCENT),
};

/// Tolerance on the probability sum accepted by [`ReferenceDistribution::new`].
pub const SUM_TOLERANCE: f64 = 1e-9;

impl ReferenceDistribution {
    /// Accepts non-negative probabilities summing to 1 within 1e-9.
    pub fn new(probs: [f64; ALPHABET_LEN]) -> Result<Self> {
        if probs.iter().any(|p| !p.is_finite() || *p < 0.0) {
            return Err(Error::InvalidDistribution("probabilities must be finite and non-negative"));
        }
        let sum: f64 = probs.iter().sum();
        if libm::fabs(sum - 1.0) > SUM_TOLERANCE {
            return Err(Error::InvalidDistribution("probabilities must sum to 1"));
        }
        Ok(ReferenceDistribution { probs })
    }

    /// Rescales non-negative weights to sum to 1.
    pub fn from_weights(weights: [f64; ALPHABET_LEN]) -> Result<Self> {
        if weights.iter().any(|w| !w.is_finite() || *w < 0.0) {
            return Err(Error::InvalidDistribution("weights must be finite and non-negative"));
        }
        if weights.iter().sum::<f64>() <= 0.0 {
            return Err(Error::InvalidDistribution("weights sum to zero"));
        }
        Ok(ReferenceDistribution {
            probs: normalized(weights),
        })
    }

    /// Built-in English monogram table.
    pub fn english() -> &'static ReferenceDistribution {
        &ENGLISH
    }

    pub fn uniform() -> ReferenceDistribution {
        ReferenceDistribution {
            probs: [1.0 / ALPHABET_LEN as f64; ALPHABET_LEN],
        }
    }

    pub fn probs(&self) -> &[f64; ALPHABET_LEN] {
        &self.probs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn english_sums_to_one() {
        let s: f64 = ReferenceDistribution::english().probs().iter().sum();
        assert!((s - 1.0).abs() < 1e-12);
        assert!(ReferenceDistribution::new(*ReferenceDistribution::english().probs()).is_ok());
        // E then T lead the table
        let p = ReferenceDistribution::english().probs();
        assert!(p[4] > p[19] && p[19] > p[0]);
    }

    #[test]
    fn rejects_bad_tables() {
        assert!(ReferenceDistribution::new([0.05; 26]).is_err());
        let mut neg = [1.0 / 26.0; 26];
        neg[0] = -0.1;
        assert!(ReferenceDistribution::new(neg).is_err());
        assert!(ReferenceDistribution::from_weights([0.0; 26]).is_err());
        let w = ReferenceDistribution::from_weights([2.0; 26]).unwrap();
        assert_eq!(w, ReferenceDistribution::uniform());
    }
}
