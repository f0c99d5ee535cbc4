use core::fmt;

/// Errors produced by the cipher and analysis routines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Input contained a character outside printable ASCII (plus tab/CR/LF).
    UnsupportedCharacter { index: usize, ch: char },
    /// Keyword or shift key was empty or contained a non-letter.
    InvalidKey(&'static str),
    /// A symbol outside 0..=25 was supplied where a letter was expected.
    SymbolOutOfRange(u8),
    /// Length is not a multiple of the block/column count.
    Misaligned { length: usize, block: usize },
    /// Vigenere key shorter than required.
    KeyTooShort { key: usize, needed: usize },
    EmptyMessage,
    /// A statistic needs at least `needed` letters.
    UndefinedStatistic { needed: usize, got: usize },
    /// A reference distribution assigns zero probability to a letter.
    ZeroReferenceProbability(char),
    InvalidDistribution(&'static str),
    InvalidParameter(&'static str),
    /// The ciphertext admits no plaintext for this keyword and padding.
    NoSolution,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnsupportedCharacter { index, ch } => {
                write!(f, "unsupported character {ch:?} at index {index}")
            }
            Error::InvalidKey(why) => write!(f, "invalid key: {why}"),
            Error::SymbolOutOfRange(s) => write!(f, "symbol {s} is outside 0..=25"),
            Error::Misaligned { length, block } => {
                write!(f, "length {length} is not a multiple of {block}")
            }
            Error::KeyTooShort { key, needed } => {
                write!(f, "key of length {key} is shorter than the {needed} symbols required")
            }
            Error::EmptyMessage => f.write_str("message contains no letters"),
            Error::UndefinedStatistic { needed, got } => {
                write!(f, "statistic needs at least {needed} letters, got {got}")
            }
            Error::ZeroReferenceProbability(c) => {
                write!(f, "reference distribution gives letter {c} zero probability")
            }
            Error::InvalidDistribution(why) => write!(f, "invalid distribution: {why}"),
            Error::InvalidParameter(why) => write!(f, "invalid parameter: {why}"),
            Error::NoSolution => {
                f.write_str("not a valid hybrid ciphertext for this keyword")
            }
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;

impl core::error::Error for Error {}
