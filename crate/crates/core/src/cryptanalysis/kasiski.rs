use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Largest factor tallied in the histogram.
pub const MAX_FACTOR: usize = 20;

/// One repeated substring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Repeat {
    pub ngram: Vec<u8>,
    /// Start offsets, ascending.
    pub positions: Vec<usize>,
    /// `positions[b] - positions[a]` for every `a < b`.
    pub distances: Vec<usize>,
}

/// Counts of distances divisible by each factor `2..=MAX_FACTOR`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct FactorHistogram {
    counts: [u64; MAX_FACTOR + 1],
}

impl FactorHistogram {
    fn add_distance(&mut self, d: usize) {
        for f in 2..=MAX_FACTOR {
            if d.is_multiple_of(f) {
                self.counts[f] += 1;
            }
        }
    }

    /// Count for `factor`; zero outside `2..=MAX_FACTOR`.
    pub fn count(&self, factor: usize) -> u64 {
        if (2..=MAX_FACTOR).contains(&factor) {
            self.counts[factor]
        } else {
            0
        }
    }

    /// `(factor, count)` for non-zero entries, ascending by factor.
    pub fn entries(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        (2..=MAX_FACTOR)
            .map(|f| (f, self.counts[f]))
            .filter(|&(_, c)| c > 0)
    }

    /// The `k` most frequent factors. Ties go to the larger factor, since a
    /// period's divisors always collect at least as many hits as the period.
    pub fn peaks(&self, k: usize) -> Vec<usize> {
        let mut entries: Vec<(usize, u64)> = self.entries().collect();
        entries.sort_by(|a, b| b.1.cmp(&a.1).then(b.0.cmp(&a.0)));
        entries.into_iter().take(k).map(|(f, _)| f).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct KasiskiReport {
    /// Sorted by ngram length, then lexicographically.
    pub repeats: Vec<Repeat>,
    pub factors: FactorHistogram,
}

/// Finds every substring of length `>= min_ngram` that occurs at least twice.
pub fn kasiski(text: &[u8], min_ngram: usize) -> Result<KasiskiReport> {
    if min_ngram < 2 {
        return Err(Error::InvalidParameter("kasiski needs min_ngram >= 2"));
    }
    let mut report = KasiskiReport::default();
    // starts whose (len - 1)-gram repeats; any repeat of length len extends one
    let mut starts: BTreeSet<usize> = (0..text.len()).collect();
    let mut len = min_ngram;
    while len < text.len() && !starts.is_empty() {
        let mut seen: BTreeMap<&[u8], Vec<usize>> = BTreeMap::new();
        for &i in starts.iter().filter(|&&i| i + len <= text.len()) {
            seen.entry(&text[i..i + len]).or_default().push(i);
        }
        starts.clear();
        for (ngram, positions) in seen.into_iter().filter(|(_, p)| p.len() >= 2) {
            let mut distances = Vec::new();
            for (a, &pa) in positions.iter().enumerate() {
                for &pb in &positions[a + 1..] {
                    distances.push(pb - pa);
                    report.factors.add_distance(pb - pa);
                }
            }
            starts.extend(positions.iter().copied());
            report.repeats.push(Repeat {
                ngram: ngram.to_vec(),
                positions,
                distances,
            });
        }
        len += 1;
    }
    Ok(report)
}
