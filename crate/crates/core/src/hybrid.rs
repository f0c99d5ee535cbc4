//! Columnar-keyed Vigenere hybrid.
//!
//! Encryption transposes the plaintext under the keyword and uses the
//! transposed text `C1` as a Vigenere key over the plaintext itself:
//! `c[i] = p[i] + C1[i] = p[i] + p[sigma(i)] (mod 26)` where `sigma` is the
//! transposition's position map and `p` is the padded plaintext.
//!
//! Decryption with only the keyword solves that system. Positions past the
//! message length hold known pad symbols. Following `i -> sigma(i)` splits
//! the unknowns into chains that end on a known pad (one solution) and
//! closed cycles of unknowns. A closed cycle of odd length reduces to
//! `2x = s (mod 26)` (zero or two solutions); an even one leaves one residue
//! free (zero or 26 solutions).

use alloc::collections::BinaryHeap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::columnar::{self, Keyword, PositionPermutation};
use crate::cryptanalysis::{english_score, trigram_nll, ReferenceDistribution};
use crate::error::{Error, Result};
use crate::text_codec::{self, PaddingPolicy};
use crate::vigenere::{add, sub};

/// Result of [`hybrid_encrypt`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HybridOutput {
    /// Final ciphertext, same length as the message.
    pub cipher: Vec<u8>,
    /// Columnar ciphertext used as the Vigenere key (padded length).
    pub intermediate: Vec<u8>,
}

/// Transposes `letters` under `keyword`, then Vigenere-encrypts `letters`
/// with the transposed text truncated to the message length.
pub fn hybrid_encrypt(
    letters: &[u8],
    keyword: &Keyword,
    policy: PaddingPolicy,
) -> Result<HybridOutput> {
    if letters.is_empty() {
        return Err(Error::EmptyMessage);
    }
    let intermediate = columnar::encrypt_columnar(letters, keyword, policy)?;
    let cipher = letters
        .iter()
        .zip(&intermediate)
        .map(|(&p, &k)| add(p, k))
        .collect();
    Ok(HybridOutput {
        cipher,
        intermediate,
    })
}

/// Undoes the Vigenere layer when the intermediate text is known.
pub fn hybrid_decrypt_known_intermediate(cipher: &[u8], intermediate: &[u8]) -> Result<Vec<u8>> {
    if intermediate.len() < cipher.len() {
        return Err(Error::KeyTooShort {
            key: intermediate.len(),
            needed: cipher.len(),
        });
    }
    if let Some(&bad) = cipher.iter().chain(intermediate).find(|&&s| s > 25) {
        return Err(Error::SymbolOutOfRange(bad));
    }
    Ok(cipher
        .iter()
        .zip(intermediate)
        .map(|(&c, &k)| sub(c, k))
        .collect())
}

/// A hybrid ciphertext together with the keyword needed to read it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HybridCiphertext {
    cipher: Vec<u8>,
    keyword: Keyword,
    padded_length: usize,
}

impl HybridCiphertext {
    /// The padded length is recomputed from the cipher length and keyword.
    pub fn new(cipher: Vec<u8>, keyword: Keyword) -> Result<Self> {
        if let Some(&bad) = cipher.iter().find(|&&s| s > 25) {
            return Err(Error::SymbolOutOfRange(bad));
        }
        let padded_length = text_codec::padded_length(cipher.len(), keyword.len());
        Ok(HybridCiphertext {
            cipher,
            keyword,
            padded_length,
        })
    }

    pub fn cipher(&self) -> &[u8] {
        &self.cipher
    }

    pub fn keyword(&self) -> &Keyword {
        &self.keyword
    }

    pub fn padded_length(&self) -> usize {
        self.padded_length
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ComponentKind {
    /// Chain of unknowns ending on a known pad symbol.
    AnchoredChain,
    /// Closed cycle of unknowns with odd length.
    OddCycle,
    /// Closed cycle of unknowns with even length.
    EvenCycle,
}

/// Connected set of unknown positions under `i -> sigma(i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub kind: ComponentKind,
    /// Positions in traversal order: `sigma(positions[t]) == positions[t + 1]`.
    /// For a chain, `sigma` of the last position is `anchor`; for a cycle it
    /// wraps to the first.
    pub positions: Vec<usize>,
    pub anchor: Option<usize>,
}

/// Splits positions `0..message_len` into solver components.
pub fn components(sigma: &PositionPermutation, message_len: usize) -> Vec<Component> {
    let s = sigma.sigma();
    let mut visited = vec![false; s.len()];
    let mut out = Vec::new();
    for start in 0..s.len() {
        if visited[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !visited[i] {
            visited[i] = true;
            cycle.push(i);
            i = s[i];
        }
        let Some(first_known) = cycle.iter().position(|&p| p >= message_len) else {
            let kind = if cycle.len() % 2 == 1 {
                ComponentKind::OddCycle
            } else {
                ComponentKind::EvenCycle
            };
            out.push(Component {
                kind,
                positions: cycle,
                anchor: None,
            });
            continue;
        };
        // walk the cycle from a known position; each run of unknowns is a chain
        // anchored on the known position that follows it
        cycle.rotate_left(first_known);
        let mut run = Vec::new();
        for &p in cycle.iter().skip(1).chain(core::iter::once(&cycle[0])) {
            if p >= message_len {
                if !run.is_empty() {
                    out.push(Component {
                        kind: ComponentKind::AnchoredChain,
                        positions: core::mem::take(&mut run),
                        anchor: Some(p),
                    });
                }
            } else {
                run.push(p);
            }
        }
    }
    out
}

/// All assignments (aligned with `component.positions`) satisfying
/// `p[i] + p[sigma(i)] = cipher[i]` on the component. `known` holds the
/// values of positions at or past the message length.
pub fn solve_component(component: &Component, cipher: &[u8], known: &[Option<u8>]) -> Vec<Vec<u8>> {
    let pos = &component.positions;
    let m = pos.len();
    match component.anchor {
        Some(anchor) => {
            let Some(anchor_value) = known[anchor] else {
                return Vec::new();
            };
            let mut values = vec![0u8; m];
            let mut next = anchor_value;
            for t in (0..m).rev() {
                values[t] = sub(cipher[pos[t]], next);
                next = values[t];
            }
            vec![values]
        }
        None => {
            let mut solutions = Vec::new();
            for x in 0..26u8 {
                let mut values = vec![0u8; m];
                values[0] = x;
                for t in 1..m {
                    values[t] = sub(cipher[pos[t - 1]], values[t - 1]);
                }
                if add(values[m - 1], x) == cipher[pos[m - 1]] {
                    solutions.push(values);
                }
            }
            solutions
        }
    }
}

/// Enumeration limits for [`hybrid_decrypt`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverOptions {
    pub max_candidates: usize,
}

pub const DEFAULT_MAX_CANDIDATES: usize = 10_000;

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            max_candidates: DEFAULT_MAX_CANDIDATES,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Candidate {
    pub plaintext: Vec<u8>,
    /// Chi-squared against English; lower is better.
    pub score: f64,
}

/// Solution count of one component.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComponentSummary {
    pub kind: ComponentKind,
    pub size: usize,
    pub solutions: usize,
}

/// Ranked plaintexts consistent with a hybrid ciphertext.
#[derive(Debug, Clone, PartialEq)]
pub struct CandidateSet {
    candidates: Vec<Candidate>,
    components: Vec<ComponentSummary>,
    total_solutions: u128,
    truncated: bool,
}

impl CandidateSet {
    /// Ascending by score, ties by plaintext.
    pub fn candidates(&self) -> &[Candidate] {
        &self.candidates
    }

    pub fn best(&self) -> Option<&Candidate> {
        self.candidates.first()
    }

    pub fn components(&self) -> &[ComponentSummary] {
        &self.components
    }

    /// Product of per-component solution counts (saturating).
    pub fn total_solutions(&self) -> u128 {
        self.total_solutions
    }

    /// Set when the solution space exceeded the cap and only the locally
    /// best-scoring combinations were enumerated.
    pub fn truncated(&self) -> bool {
        self.truncated
    }

    /// 1-based rank of `plaintext`, if present.
    pub fn rank_of(&self, plaintext: &[u8]) -> Option<usize> {
        self.candidates
            .iter()
            .position(|c| c.plaintext == plaintext)
            .map(|i| i + 1)
    }

    pub fn len(&self) -> usize {
        self.candidates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.candidates.is_empty()
    }
}

/// Recovers every plaintext that hybrid-encrypts to `ht` under its keyword and
/// `policy`, ranked by English score.
pub fn hybrid_decrypt(
    ht: &HybridCiphertext,
    policy: PaddingPolicy,
    options: SolverOptions,
) -> Result<CandidateSet> {
    let n = ht.cipher.len();
    let padded_len = ht.padded_length;
    if n == 0 {
        return Err(Error::EmptyMessage);
    }
    let pad = policy.pad_symbol(ht.keyword.first())?;
    if pad.is_none() && padded_len != n {
        return Err(Error::Misaligned {
            length: n,
            block: ht.keyword.len(),
        });
    }
    let sigma = columnar::permutation_of(&ht.keyword, padded_len)?;
    let mut known = vec![None; padded_len];
    for slot in &mut known[n..] {
        *slot = pad;
    }

    let mut base = vec![0u8; n];
    let mut free: Vec<(Vec<usize>, Vec<Vec<u8>>)> = Vec::new();
    let mut summaries = Vec::new();
    let mut total: u128 = 1;
    for comp in components(&sigma, n) {
        let solutions = solve_component(&comp, &ht.cipher, &known);
        summaries.push(ComponentSummary {
            kind: comp.kind,
            size: comp.positions.len(),
            solutions: solutions.len(),
        });
        match solutions.len() {
            0 => return Err(Error::NoSolution),
            1 => {
                for (&p, &v) in comp.positions.iter().zip(&solutions[0]) {
                    base[p] = v;
                }
            }
            k => {
                total = total.saturating_mul(k as u128);
                free.push((comp.positions, solutions));
            }
        }
    }

    let cap = options.max_candidates;
    let truncated = total > cap as u128;
    let choices: Vec<Vec<usize>> = if truncated {
        let mut fixed = vec![true; n];
        for (positions, _) in &free {
            for &p in positions {
                fixed[p] = false;
            }
        }
        let ranked = free
            .iter()
            .map(|(positions, solutions)| rank_locally(&base, &fixed, positions, solutions))
            .collect::<Vec<_>>();
        best_combinations(&ranked, cap)
    } else {
        all_combinations(&free)
    };

    let mut candidates: Vec<Candidate> = choices
        .into_iter()
        .map(|choice| {
            let mut plaintext = base.clone();
            for ((positions, solutions), &pick) in free.iter().zip(&choice) {
                for (&p, &v) in positions.iter().zip(&solutions[pick]) {
                    plaintext[p] = v;
                }
            }
            let score = english_score(&plaintext);
            Candidate { plaintext, score }
        })
        .collect();
    candidates.sort_by(|a, b| {
        a.score
            .total_cmp(&b.score)
            .then_with(|| a.plaintext.cmp(&b.plaintext))
    });

    Ok(CandidateSet {
        candidates,
        components: summaries,
        total_solutions: total,
        truncated,
    })
}

fn all_combinations(free: &[(Vec<usize>, Vec<Vec<u8>>)]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::with_capacity(free.len())];
    for (_, solutions) in free {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..solutions.len()).map(move |pick| {
                    let mut next = prefix.clone();
                    next.push(pick);
                    next
                })
            })
            .collect();
    }
    out
}

struct Frontier {
    cost: f64,
    picks: Vec<usize>,
    last: usize,
}

impl PartialEq for Frontier {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Frontier {}

impl PartialOrd for Frontier {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Frontier {
    // reversed so BinaryHeap pops the cheapest entry
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .cost
            .total_cmp(&self.cost)
            .then_with(|| other.picks.cmp(&self.picks))
    }
}

/// Orders one component's solutions by how English the letters they set look,
/// counting trigram windows whose other cells are already fixed plus a
/// monogram term. Returns `(solution index, local score)` ascending.
fn rank_locally(
    base: &[u8],
    fixed: &[bool],
    positions: &[usize],
    solutions: &[Vec<u8>],
) -> Vec<(usize, f64)> {
    let n = base.len();
    let mut windows: Vec<usize> = positions
        .iter()
        .flat_map(|&p| p.saturating_sub(2)..=p)
        .filter(|&w| w + 3 <= n)
        .collect();
    windows.sort_unstable();
    windows.dedup();
    let english = ReferenceDistribution::english().probs();
    let mut text = base.to_vec();
    let mut inside = vec![false; n];
    for &p in positions {
        inside[p] = true;
    }
    windows.retain(|&w| (w..w + 3).all(|q| fixed[q] || inside[q]));
    let mut ranked: Vec<(usize, f64)> = solutions
        .iter()
        .enumerate()
        .map(|(i, values)| {
            for (&p, &v) in positions.iter().zip(values) {
                text[p] = v;
            }
            let mono: f64 = values.iter().map(|&v| -libm::log(english[v as usize])).sum();
            let tri: f64 = windows
                .iter()
                .map(|&w| trigram_nll(text[w], text[w + 1], text[w + 2]))
                .sum();
            (i, mono + tri)
        })
        .collect();
    ranked.sort_by(|a, b| a.1.total_cmp(&b.1).then(a.0.cmp(&b.0)));
    ranked
}

/// The `cap` combinations with the lowest summed local score, cheapest first.
/// `ranked[t]` lists component `t`'s solutions in ascending local score.
fn best_combinations(ranked: &[Vec<(usize, f64)>], cap: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(cap);
    if cap == 0 {
        return out;
    }
    let cost_of = |picks: &[usize]| -> f64 {
        picks.iter().zip(ranked).map(|(&r, list)| list[r].1).sum()
    };
    let mut heap = BinaryHeap::new();
    heap.push(Frontier {
        cost: cost_of(&vec![0; ranked.len()]),
        picks: vec![0; ranked.len()],
        last: 0,
    });
    // each rank vector is reached once: only positions >= the last bumped one
    // may be incremented
    while let Some(entry) = heap.pop() {
        out.push(
            entry
                .picks
                .iter()
                .zip(ranked)
                .map(|(&r, list)| list[r].0)
                .collect(),
        );
        if out.len() == cap {
            break;
        }
        for t in entry.last..ranked.len() {
            let r = entry.picks[t];
            if r + 1 < ranked[t].len() {
                let mut picks = entry.picks.clone();
                picks[t] += 1;
                heap.push(Frontier {
                    cost: cost_of(&picks),
                    picks,
                    last: t,
                });
            }
        }
    }
    out
}
