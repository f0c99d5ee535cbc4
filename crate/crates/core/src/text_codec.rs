//! Conversion between raw text and the `0..=25` letter domain.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Letters of a message with the stripped non-letters kept aside.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizedText {
    letters: Vec<u8>,
    original_length: usize,
    removed: Vec<(usize, char)>,
}

impl NormalizedText {
    /// Wraps an already-normalized letter sequence.
    pub fn from_letters(letters: Vec<u8>) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&s| s > 25) {
            return Err(Error::SymbolOutOfRange(bad));
        }
        Ok(NormalizedText {
            original_length: letters.len(),
            letters,
            removed: Vec::new(),
        })
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Character count of the text this was built from.
    pub fn original_length(&self) -> usize {
        self.original_length
    }

    /// `(original index, character)` for every non-letter that was stripped.
    pub fn removed(&self) -> &[(usize, char)] {
        &self.removed
    }

    /// Rebuilds the original layout around `letters` (which must have the same
    /// length as this text), re-inserting every stripped character.
    pub fn reinsert(&self, letters: &[u8]) -> Result<String> {
        if letters.len() != self.letters.len() {
            return Err(Error::Misaligned {
                length: letters.len(),
                block: self.letters.len(),
            });
        }
        let mut out = String::with_capacity(self.original_length);
        let mut removed = self.removed.iter().peekable();
        let mut next_letter = letters.iter();
        for idx in 0..self.original_length {
            match removed.peek() {
                Some(&&(at, ch)) if at == idx => {
                    out.push(ch);
                    removed.next();
                }
                _ => {
                    let sym = *next_letter.next().expect("letter count matches layout");
                    out.push(symbol_to_char(sym)?);
                }
            }
        }
        Ok(out)
    }

    /// The uppercased original text.
    pub fn restore(&self) -> String {
        self.reinsert(&self.letters)
            .expect("own letters always fit own layout")
    }
}

/// How the last row of a transposition grid is filled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PaddingPolicy {
    /// Repeat the first letter of the keyword.
    #[default]
    FirstKeyChar,
    /// Always use the given symbol (`0..=25`).
    FixedChar(u8),
    /// No padding; the message must already fill the grid.
    None,
}

impl PaddingPolicy {
    /// Symbol used for padding under this policy, if any.
    pub fn pad_symbol(self, key_first: u8) -> Result<Option<u8>> {
        match self {
            PaddingPolicy::FirstKeyChar => check_symbol(key_first).map(Some),
            PaddingPolicy::FixedChar(s) => check_symbol(s).map(Some),
            PaddingPolicy::None => Ok(None),
        }
    }
}

/// Accepts printable ASCII plus tab, CR and LF.
fn is_accepted(ch: char) -> bool {
    matches!(ch, ' '..='~' | '\t' | '\n' | '\r')
}

/// Splits `text` into letters and stripped characters.
///
/// With `case_fold` set, `a..=z` count as letters and are uppercased; without
/// it only `A..=Z` are letters and lowercase characters are stripped like
/// punctuation.
pub fn normalize(text: &str, case_fold: bool) -> Result<NormalizedText> {
    let mut letters = Vec::with_capacity(text.len());
    let mut removed = Vec::new();
    let mut count = 0;
    for (index, ch) in text.chars().enumerate() {
        count = index + 1;
        if !is_accepted(ch) {
            return Err(Error::UnsupportedCharacter { index, ch });
        }
        match ch {
            'A'..='Z' => letters.push(ch as u8 - b'A'),
            'a'..='z' if case_fold => letters.push(ch as u8 - b'a'),
            _ => removed.push((index, ch)),
        }
    }
    Ok(NormalizedText {
        letters,
        original_length: count,
        removed,
    })
}

/// Appends pad symbols until the length is a multiple of `block`.
pub fn pad_to_block(
    letters: &[u8],
    block: usize,
    policy: PaddingPolicy,
    key_first: u8,
) -> Result<Vec<u8>> {
    if block == 0 {
        return Err(Error::InvalidKey("block size must be positive"));
    }
    let target = padded_length(letters.len(), block);
    let mut out = Vec::with_capacity(target);
    out.extend_from_slice(letters);
    if target == letters.len() {
        return Ok(out);
    }
    match policy.pad_symbol(key_first)? {
        Some(pad) => out.resize(target, pad),
        None => {
            return Err(Error::Misaligned {
                length: letters.len(),
                block,
            })
        }
    }
    Ok(out)
}

/// Drops the last `pad_len` symbols.
pub fn unpad(padded: &[u8], pad_len: usize) -> &[u8] {
    &padded[..padded.len().saturating_sub(pad_len)]
}

/// Smallest multiple of `block` that is `>= len`.
pub fn padded_length(len: usize, block: usize) -> usize {
    len.div_ceil(block) * block
}

fn check_symbol(s: u8) -> Result<u8> {
    if s < 26 {
        Ok(s)
    } else {
        Err(Error::SymbolOutOfRange(s))
    }
}

pub fn symbol_to_char(s: u8) -> Result<char> {
    check_symbol(s).map(|s| (b'A' + s) as char)
}

/// Maps an ASCII letter (either case) to its symbol.
pub fn char_to_symbol(ch: char) -> Option<u8> {
    match ch {
        'A'..='Z' => Some(ch as u8 - b'A'),
        'a'..='z' => Some(ch as u8 - b'a'),
        _ => None,
    }
}

/// Renders symbols as uppercase `A..=Z`.
///
/// # Panics
/// If a symbol is outside `0..=25`.
pub fn to_string(letters: &[u8]) -> String {
    letters
        .iter()
        .map(|&s| symbol_to_char(s).expect("letter symbol in range"))
        .collect()
}

/// Parses a string made only of ASCII letters.
pub fn letters_from_str(s: &str) -> Result<Vec<u8>> {
    s.chars()
        .enumerate()
        .map(|(index, ch)| char_to_symbol(ch).ok_or(Error::UnsupportedCharacter { index, ch }))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    const FOREST: &str = "IN THE FOREST THERE ARE MANY TREES WITH THE SAME HEIGHT";

    #[test]
    fn forest_plaintext_normalizes_to_45_letters() {
        let n = normalize(FOREST, true).unwrap();
        assert_eq!(n.len(), 45);
        assert_eq!(n.removed().len(), 10);
        assert!(n.removed().iter().all(|&(_, c)| c == ' '));
        assert_eq!(
            to_string(n.letters()),
            "INTHEFORESTTHEREAREMANYTREESWITHTHESAMEHEIGHT"
        );
        assert_eq!(n.restore(), FOREST);
    }

    #[test]
    fn lowercase_folds() {
        let n = normalize("abc", true).unwrap();
        assert_eq!(n.letters(), &[0, 1, 2]);
        assert!(n.removed().is_empty());
    }

    #[test]
    fn without_case_fold_lowercase_is_stripped() {
        let n = normalize("aBc", false).unwrap();
        assert_eq!(n.letters(), &[1]);
        assert_eq!(n.restore(), "aBc");
    }

    #[test]
    fn empty_input() {
        let n = normalize("", true).unwrap();
        assert!(n.is_empty());
        assert!(n.removed().is_empty());
        assert_eq!(n.original_length(), 0);
    }

    #[test]
    fn rejects_non_ascii_with_index() {
        let err = normalize("ab\u{e9}c", true).unwrap_err();
        assert_eq!(err, Error::UnsupportedCharacter { index: 2, ch: '\u{e9}' });
        assert!(err.to_string().contains("index 2"));
        assert!(normalize("a\u{7}", true).is_err());
    }

    #[test]
    fn pads_forest_with_first_key_char() {
        let n = normalize(FOREST, true).unwrap();
        let padded = pad_to_block(n.letters(), 4, PaddingPolicy::FirstKeyChar, 19).unwrap();
        assert_eq!(padded.len(), 48);
        assert!(to_string(&padded).ends_with("HEIGHTTTT"));
        assert_eq!(unpad(&padded, 3), n.letters());
    }

    #[test]
    fn pads_german_example_with_x() {
        let letters = letters_from_str("defendtheeastwallofthecastle").unwrap();
        assert_eq!(letters.len(), 28);
        let padded = pad_to_block(&letters, 6, PaddingPolicy::FixedChar(23), 6).unwrap();
        assert_eq!(padded.len(), 30);
        assert!(to_string(&padded).ends_with("CASTLEXX"));
    }

    #[test]
    fn aligned_input_is_unchanged_under_every_policy() {
        let letters = [1, 2, 3, 4, 5, 6];
        for policy in [
            PaddingPolicy::FirstKeyChar,
            PaddingPolicy::FixedChar(0),
            PaddingPolicy::None,
        ] {
            assert_eq!(pad_to_block(&letters, 3, policy, 0).unwrap(), letters);
        }
    }

    #[test]
    fn no_padding_rejects_misaligned() {
        assert_eq!(
            pad_to_block(&[0, 1, 2], 2, PaddingPolicy::None, 0),
            Err(Error::Misaligned { length: 3, block: 2 })
        );
    }

    #[test]
    fn bad_fixed_char_and_zero_block() {
        assert_eq!(
            pad_to_block(&[0], 2, PaddingPolicy::FixedChar(26), 0),
            Err(Error::SymbolOutOfRange(26))
        );
        assert!(pad_to_block(&[0], 0, PaddingPolicy::None, 0).is_err());
    }

    #[test]
    fn reinsert_rejects_wrong_length() {
        let n = normalize("a b", true).unwrap();
        assert!(n.reinsert(&[0]).is_err());
        assert_eq!(n.reinsert(&[25, 24]).unwrap(), "Z Y");
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn restore_reconstructs_uppercased(s in "[ -~\t\n]{0,64}") {
                let n = normalize(&s, true).unwrap();
                prop_assert_eq!(n.restore(), s.to_ascii_uppercase());
                prop_assert!(n.letters().iter().all(|&l| l < 26));
            }

            #[test]
            fn normalize_is_idempotent(s in "[ -~]{0,64}") {
                let once = normalize(&s, true).unwrap();
                let twice = normalize(&to_string(once.letters()), true).unwrap();
                prop_assert_eq!(once.letters(), twice.letters());
                prop_assert!(twice.removed().is_empty());
            }

            #[test]
            fn padding_aligns_and_preserves_prefix(
                letters in proptest::collection::vec(0u8..26, 0..40),
                block in 1usize..9,
                pad in 0u8..26,
                fixed in any::<bool>(),
            ) {
                let policy = if fixed { PaddingPolicy::FixedChar(pad) } else { PaddingPolicy::FirstKeyChar };
                let out = pad_to_block(&letters, block, policy, pad).unwrap();
                prop_assert_eq!(out.len() % block, 0);
                prop_assert!(out.len() - letters.len() < block);
                prop_assert!(out[letters.len()..].iter().all(|&p| p == pad));
                prop_assert_eq!(unpad(&out, out.len() - letters.len()), &letters[..]);
            }
        }
    }
}
