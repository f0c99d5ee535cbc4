//! English plausibility scores used to rank candidate plaintexts.

use super::{chi_squared, frequency_profile, ReferenceDistribution};

/// Quantized negative log-likelihoods (`round(8 * -ln p)`) for spaceless
/// English, laid out as:
///
/// | offset  | len   | entry                                   |
/// |---------|-------|-----------------------------------------|
/// | 0       | 17576 | `p(c \| a b)` at `676a + 26b + c`        |
/// | 17576   | 26    | `p(a)` for the first letter of a text   |
/// | 17602   | 676   | `p(b \| a)` for the second letter         |
/// | 18278   | 676   | `p(end \| a b)` for the last two letters  |
static NGRAM_NLL: &[u8; 18954] = include_bytes!("../../data/english_ngrams.bin");

const SCALE: f64 = 8.0;
const START: usize = 17576;
const START_PAIR: usize = START + 26;
const END_PAIR: usize = START_PAIR + 676;

fn entry(offset: usize) -> f64 {
    NGRAM_NLL[offset] as f64 / SCALE
}

/// Negative log-likelihood (nats) of `c` following `a b`.
pub fn trigram_nll(a: u8, b: u8, c: u8) -> f64 {
    entry(676 * a as usize + 26 * b as usize + c as usize)
}

/// Mean negative log-likelihood per scored event, in nats; lower is more
/// English-like.
///
/// The text is treated as starting and ending on a word boundary: events are
/// the first letter, the second letter given the first, every trigram, and
/// the end of text after the last two letters. Empty text scores 0.
pub fn english_score(text: &[u8]) -> f64 {
    let n = text.len();
    if n == 0 {
        return 0.0;
    }
    let mut total = entry(START + text[0] as usize);
    let mut events = 1;
    if n >= 2 {
        total += entry(START_PAIR + 26 * text[0] as usize + text[1] as usize);
        total += text
            .windows(3)
            .map(|w| trigram_nll(w[0], w[1], w[2]))
            .sum::<f64>();
        total += entry(END_PAIR + 26 * text[n - 2] as usize + text[n - 1] as usize);
        events += 1 + (n - 2) + 1;
    }
    total / events as f64
}

/// Chi-squared of the letter counts against the built-in English table.
/// Empty text scores 0.
pub fn english_chi_squared(text: &[u8]) -> f64 {
    if text.is_empty() {
        return 0.0;
    }
    chi_squared(&frequency_profile(text), ReferenceDistribution::english())
        .expect("built-in table has no zero entries")
}
