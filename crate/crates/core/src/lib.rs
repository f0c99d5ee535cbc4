//! Classical hybrid cipher toolkit.
//!
//! The hybrid scheme lays the plaintext into a keyword-ordered columnar
//! transposition and uses the transposed text as a running Vigenere key over
//! the plaintext itself. Keyword holders decrypt by solving the resulting
//! mod-26 system (see [`hybrid::hybrid_decrypt`]).
//!
//! Letters are represented throughout as `u8` symbols in `0..=25`
//! (`A` = 0). Use [`text_codec::normalize`] to get there from raw text and
//! [`text_codec::to_string`] to get back.
//!
//! The crate is `no_std` and needs only `alloc`.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod columnar;
pub mod cryptanalysis;
mod error;
pub mod hybrid;
pub mod text_codec;
pub mod vigenere;

pub use columnar::{ColumnGrid, ColumnOrder, Keyword, PositionPermutation};
pub use error::{Error, Result};
pub use hybrid::{CandidateSet, HybridCiphertext, HybridOutput, SolverOptions};
pub use text_codec::{NormalizedText, PaddingPolicy};
pub use vigenere::ShiftKey;

/// Size of the cipher alphabet.
pub const ALPHABET_LEN: usize = 26;
