use super::{index_of_coincidence, FrequencyProfile};
use crate::error::Result;

/// Coincidence constants of the Friedman key-length estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FriedmanConstants {
    /// Expected I.C. of plain English.
    pub kappa_plain: f64,
    /// Expected I.C. of uniformly random letters.
    pub kappa_random: f64,
    /// Numerator coefficient.
    pub numerator: f64,
}

impl Default for FriedmanConstants {
    fn default() -> Self {
        FriedmanConstants {
            kappa_plain: 0.0665,
            kappa_random: 0.0385,
            numerator: 0.0265,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FriedmanEstimate {
    /// Raw estimate; meaningless when `unstable` is set.
    pub key_length: f64,
    pub denominator: f64,
    /// Set when the denominator is not positive.
    pub unstable: bool,
}

/// `k = a N / ((kp - IC) + N (IC - kr))`.
pub fn friedman_from_ic(ic: f64, n: u64, constants: &FriedmanConstants) -> FriedmanEstimate {
    let n = n as f64;
    let denominator = (constants.kappa_plain - ic) + n * (ic - constants.kappa_random);
    FriedmanEstimate {
        key_length: constants.numerator * n / denominator,
        denominator,
        unstable: denominator <= 0.0,
    }
}

/// Friedman estimate from a profile. Needs `N >= 2`.
pub fn friedman_keylength(
    profile: &FrequencyProfile,
    constants: &FriedmanConstants,
) -> Result<FriedmanEstimate> {
    let ic = index_of_coincidence(profile)?;
    Ok(friedman_from_ic(ic, profile.total(), constants))
}
