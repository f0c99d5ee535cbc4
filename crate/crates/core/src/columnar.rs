//! Keyword columnar transposition.
//!
//! The padded message is written row by row into a grid with one column per
//! keyword letter, and the columns are read top to bottom in the alphabetical
//! order of their keyword letters. Repeated keyword letters keep their
//! left-to-right order.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::text_codec::{self, PaddingPolicy};

/// A validated transposition keyword (letters `0..=25`, non-empty).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Keyword(Vec<u8>);

impl Keyword {
    /// Parses an ASCII keyword, folding case. Anything but letters is rejected.
    pub fn parse(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::InvalidKey("keyword is empty"));
        }
        let letters = text_codec::letters_from_str(s)
            .map_err(|_| Error::InvalidKey("keyword must contain only letters A-Z"))?;
        Ok(Keyword(letters))
    }

    pub fn from_letters(letters: Vec<u8>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::InvalidKey("keyword is empty"));
        }
        if let Some(&bad) = letters.iter().find(|&&s| s > 25) {
            return Err(Error::SymbolOutOfRange(bad));
        }
        Ok(Keyword(letters))
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    /// Number of grid columns.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn first(&self) -> u8 {
        self.0[0]
    }
}

/// Column read order derived from a keyword.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnOrder {
    keyword: Keyword,
    read_order: Vec<usize>,
}

impl ColumnOrder {
    pub fn keyword(&self) -> &Keyword {
        &self.keyword
    }

    /// `read_order()[j]` is the original column read `j`-th.
    pub fn read_order(&self) -> &[usize] {
        &self.read_order
    }

    pub fn columns(&self) -> usize {
        self.read_order.len()
    }
}

/// Stable alphabetical ordering of the keyword's columns.
pub fn column_order(keyword: &Keyword) -> ColumnOrder {
    let mut read_order: Vec<usize> = (0..keyword.len()).collect();
    // sort_by_key is stable, so equal letters stay in column order
    read_order.sort_by_key(|&col| keyword.letters()[col]);
    ColumnOrder {
        keyword: keyword.clone(),
        read_order,
    }
}

/// Row-major rectangular layout of a padded message.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnGrid<T = u8> {
    rows: usize,
    cols: usize,
    cells: Vec<T>,
}

impl<T: Copy> ColumnGrid<T> {
    /// Lays `cells` out with `cols` columns; the length must fill whole rows.
    pub fn new(cells: Vec<T>, cols: usize) -> Result<Self> {
        if cols == 0 {
            return Err(Error::InvalidKey("grid needs at least one column"));
        }
        if !cells.len().is_multiple_of(cols) {
            return Err(Error::Misaligned {
                length: cells.len(),
                block: cols,
            });
        }
        Ok(ColumnGrid {
            rows: cells.len() / cols,
            cols,
            cells,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> T {
        self.cells[row * self.cols + col]
    }

    pub fn column(&self, col: usize) -> impl Iterator<Item = T> + '_ {
        (0..self.rows).map(move |row| self.get(row, col))
    }

    pub fn row(&self, row: usize) -> &[T] {
        &self.cells[row * self.cols..(row + 1) * self.cols]
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> &[T] {
        &self.cells
    }

    /// Columns concatenated in `order`.
    pub fn read_columns(&self, order: &ColumnOrder) -> Vec<T> {
        debug_assert_eq!(order.columns(), self.cols);
        let mut out = Vec::with_capacity(self.cells.len());
        for &col in order.read_order() {
            out.extend(self.column(col));
        }
        out
    }
}

/// Transposes an already padded sequence of any cell type.
pub fn transpose<T: Copy>(padded: &[T], order: &ColumnOrder) -> Result<Vec<T>> {
    Ok(ColumnGrid::new(padded.to_vec(), order.columns())?.read_columns(order))
}

/// Pads `letters` under `policy` and reads the grid in keyword order.
pub fn encrypt_columnar(
    letters: &[u8],
    keyword: &Keyword,
    policy: PaddingPolicy,
) -> Result<Vec<u8>> {
    let padded = text_codec::pad_to_block(letters, keyword.len(), policy, keyword.first())?;
    transpose(&padded, &column_order(keyword))
}

/// Inverse transposition. Returns the padded plaintext.
pub fn decrypt_columnar(cipher: &[u8], keyword: &Keyword) -> Result<Vec<u8>> {
    let sigma = permutation_of(keyword, cipher.len())?;
    let mut out = alloc::vec![0u8; cipher.len()];
    for (j, &src) in sigma.sigma().iter().enumerate() {
        out[src] = cipher[j];
    }
    Ok(out)
}

/// Position map of the transposition: output `j` comes from padded index `sigma[j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositionPermutation {
    sigma: Vec<usize>,
}

impl PositionPermutation {
    pub fn identity(len: usize) -> Self {
        PositionPermutation {
            sigma: (0..len).collect(),
        }
    }

    /// Checks that `sigma` is a bijection on `0..sigma.len()`.
    pub fn from_vec(sigma: Vec<usize>) -> Option<Self> {
        let mut seen = alloc::vec![false; sigma.len()];
        for &s in &sigma {
            if s >= sigma.len() || core::mem::replace(&mut seen[s], true) {
                return None;
            }
        }
        Some(PositionPermutation { sigma })
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn len(&self) -> usize {
        self.sigma.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sigma.is_empty()
    }

    /// `out[j] = input[sigma[j]]`.
    pub fn apply<T: Copy>(&self, input: &[T]) -> Vec<T> {
        assert_eq!(input.len(), self.sigma.len(), "permutation length mismatch");
        self.sigma.iter().map(|&s| input[s]).collect()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = alloc::vec![0; self.sigma.len()];
        for (j, &s) in self.sigma.iter().enumerate() {
            inv[s] = j;
        }
        PositionPermutation { sigma: inv }
    }

    /// The permutation `j -> self[other[j]]`, i.e. `apply` with `self` then `other`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len(), "permutation length mismatch");
        PositionPermutation {
            sigma: other.sigma.iter().map(|&j| self.sigma[j]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.sigma.iter().enumerate().all(|(j, &s)| j == s)
    }
}

/// Closed form of the grid read for a padded message of `padded_length`.
pub fn permutation_of(keyword: &Keyword, padded_length: usize) -> Result<PositionPermutation> {
    let cols = keyword.len();
    if !padded_length.is_multiple_of(cols) {
        return Err(Error::Misaligned {
            length: padded_length,
            block: cols,
        });
    }
    let rows = padded_length / cols;
    let order = column_order(keyword);
    let sigma = (0..padded_length)
        .map(|j| order.read_order()[j / rows] + cols * (j % rows))
        .collect();
    Ok(PositionPermutation { sigma })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text_codec::{letters_from_str, to_string};

    fn kw(s: &str) -> Keyword {
        Keyword::parse(s).unwrap()
    }

    #[test]
    fn german_read_order() {
        assert_eq!(column_order(&kw("GERMAN")).read_order(), &[4, 1, 0, 3, 5, 2]);
    }

    #[test]
    fn true_read_order() {
        assert_eq!(column_order(&kw("TRUE")).read_order(), &[3, 1, 0, 2]);
    }

    #[test]
    fn repeated_letters_keep_column_order() {
        assert_eq!(column_order(&kw("ABBA")).read_order(), &[0, 3, 1, 2]);
    }

    #[test]
    fn keyword_validation() {
        assert_eq!(Keyword::parse(""), Err(Error::InvalidKey("keyword is empty")));
        assert!(Keyword::parse("TR UE").is_err());
        assert!(Keyword::parse("k3y").is_err());
        assert_eq!(kw("german"), kw("GERMAN"));
        assert!(Keyword::from_letters(alloc::vec![]).is_err());
        assert!(Keyword::from_letters(alloc::vec![30]).is_err());
    }

    #[test]
    fn cipher1_of_forest_text() {
        let msg = letters_from_str("INTHEFORESTTHEREAREMANYTREESWITHTHESAMEHEIGHT").unwrap();
        let c1 = encrypt_columnar(&msg, &kw("TRUE"), PaddingPolicy::FirstKeyChar).unwrap();
        assert_eq!(
            to_string(&c1),
            "HRTEMTSHSHHTNFSERNEIHMITIEEHAARWTAETTOTREYETEEGT"
        );
    }

    #[test]
    fn german_example_with_x_padding() {
        let msg = letters_from_str("defendtheeastwallofthecastle").unwrap();
        let out = encrypt_columnar(&msg, &kw("GERMAN"), PaddingPolicy::FixedChar(23)).unwrap();
        assert_eq!(to_string(&out), "NALCXEHWTTDTTFSEELEEDSOAXFEAHL");
        assert_eq!(out.len(), 30);
    }

    #[test]
    fn grid_layout_matches_rows() {
        let msg = letters_from_str("defendtheeastwallofthecastlexx").unwrap();
        let grid = ColumnGrid::new(msg.clone(), 6).unwrap();
        assert_eq!(grid.rows(), 5);
        assert_eq!(to_string(grid.row(4)), "STLEXX");
        assert_eq!(grid.cells(), &msg[..]);
        assert_eq!(to_string(&grid.column(4).collect::<Vec<_>>()), "NALCX");
    }

    #[test]
    fn single_column_is_identity() {
        let msg = letters_from_str("HELLOWORLD").unwrap();
        assert_eq!(
            encrypt_columnar(&msg, &kw("A"), PaddingPolicy::FirstKeyChar).unwrap(),
            msg
        );
        assert!(permutation_of(&kw("Q"), 7).unwrap().is_identity());
    }

    #[test]
    fn decrypt_cipher1() {
        let c1 = letters_from_str("HRTEMTSHSHHTNFSERNEIHMITIEEHAARWTAETTOTREYETEEGT").unwrap();
        let padded = decrypt_columnar(&c1, &kw("TRUE")).unwrap();
        assert_eq!(
            to_string(&padded),
            "INTHEFORESTTHEREAREMANYTREESWITHTHESAMEHEIGHTTTT"
        );
    }

    #[test]
    fn decrypt_rejects_misaligned() {
        assert_eq!(
            decrypt_columnar(&[0, 1, 2], &kw("AB")),
            Err(Error::Misaligned { length: 3, block: 2 })
        );
    }

    #[test]
    fn permutation_for_true_48() {
        let p = permutation_of(&kw("TRUE"), 48).unwrap();
        assert_eq!(&p.sigma()[..3], &[3, 7, 11]);
        assert!(PositionPermutation::from_vec(p.sigma().to_vec()).is_some());
        assert!(p.compose(&p.inverse()).is_identity());
        assert!(p.inverse().compose(&p).is_identity());
    }

    #[test]
    fn from_vec_rejects_non_bijections() {
        assert!(PositionPermutation::from_vec(alloc::vec![0, 0]).is_none());
        assert!(PositionPermutation::from_vec(alloc::vec![0, 2]).is_none());
    }
}
