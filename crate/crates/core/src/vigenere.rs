//! Caesar and Vigenere ciphers over mod-26 symbols.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::text_codec;

/// Non-empty sequence of shifts in `0..=25`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftKey(Vec<u8>);

impl ShiftKey {
    pub fn new(shifts: Vec<u8>) -> Result<Self> {
        if shifts.is_empty() {
            return Err(Error::InvalidKey("shift key is empty"));
        }
        if let Some(&bad) = shifts.iter().find(|&&s| s > 25) {
            return Err(Error::SymbolOutOfRange(bad));
        }
        Ok(ShiftKey(shifts))
    }

    /// Parses a letter key such as `"LUCK"` (`A` = shift 0).
    pub fn parse(s: &str) -> Result<Self> {
        let shifts = text_codec::letters_from_str(s)
            .map_err(|_| Error::InvalidKey("key must contain only letters A-Z"))?;
        Self::new(shifts)
    }

    pub fn shifts(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    fn at(&self, i: usize) -> u8 {
        self.0[i % self.0.len()]
    }
}

#[inline]
pub(crate) fn add(a: u8, b: u8) -> u8 {
    (a + b) % 26
}

#[inline]
pub(crate) fn sub(a: u8, b: u8) -> u8 {
    (a + 26 - b) % 26
}

fn check_shift(n: u8) -> Result<()> {
    if n > 25 {
        Err(Error::SymbolOutOfRange(n))
    } else {
        Ok(())
    }
}

fn check_letters(msg: &[u8]) -> Result<()> {
    match msg.iter().find(|&&s| s > 25) {
        Some(&bad) => Err(Error::SymbolOutOfRange(bad)),
        None => Ok(()),
    }
}

pub fn caesar_encrypt(msg: &[u8], n: u8) -> Result<Vec<u8>> {
    check_shift(n)?;
    check_letters(msg)?;
    Ok(msg.iter().map(|&x| add(x, n)).collect())
}

pub fn caesar_decrypt(cipher: &[u8], n: u8) -> Result<Vec<u8>> {
    check_shift(n)?;
    check_letters(cipher)?;
    Ok(cipher.iter().map(|&x| sub(x, n)).collect())
}

/// `out[i] = msg[i] + key[i mod |key|]`. The key repeats when shorter than `msg`.
pub fn vigenere_encrypt(msg: &[u8], key: &ShiftKey) -> Result<Vec<u8>> {
    check_letters(msg)?;
    Ok(msg
        .iter()
        .enumerate()
        .map(|(i, &x)| add(x, key.at(i)))
        .collect())
}

pub fn vigenere_decrypt(cipher: &[u8], key: &ShiftKey) -> Result<Vec<u8>> {
    check_letters(cipher)?;
    Ok(cipher
        .iter()
        .enumerate()
        .map(|(i, &x)| sub(x, key.at(i)))
        .collect())
}

/// The 26x26 Vigenere square: `table[r][c] = (r + c) mod 26`.
pub fn tabula_recta() -> [[u8; 26]; 26] {
    let mut table = [[0u8; 26]; 26];
    for (r, row) in table.iter_mut().enumerate() {
        for (c, cell) in row.iter_mut().enumerate() {
            *cell = ((r + c) % 26) as u8;
        }
    }
    table
}
