mod common;

use common::{oracle_columnar, oracle_read_order};
use hybridcipher_core::columnar::{
    column_order, decrypt_columnar, encrypt_columnar, permutation_of, transpose, Keyword,
};
use hybridcipher_core::text_codec::{pad_to_block, PaddingPolicy};
use proptest::prelude::*;

/// Heap's algorithm.
fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n <= 1 {
            out.push(a.clone());
            return;
        }
        for i in 0..n - 1 {
            go(n - 1, a, out);
            if n.is_multiple_of(2) { a.swap(i, n - 1) } else { a.swap(0, n - 1) }
        }
        go(n - 1, a, out);
    }
    let mut out = Vec::new();
    go(k, &mut (0..k).collect(), &mut out);
    out
}

/// Keyword whose stable sort reads columns in `order`.
fn keyword_for(order: &[usize]) -> Keyword {
    let mut letters = vec![0u8; order.len()];
    for (rank, &col) in order.iter().enumerate() {
        letters[col] = rank as u8;
    }
    Keyword::from_letters(letters).unwrap()
}

#[test]
fn permutation_agrees_with_grid_read_exhaustively() {
    for k in 1..=8 {
        for order in permutations(k) {
            let keyword = keyword_for(&order);
            assert_eq!(column_order(&keyword).read_order(), &order[..]);
            let co = column_order(&keyword);
            for rows in 1..=8 {
                let probe: Vec<usize> = (0..k * rows).collect();
                let sigma = permutation_of(&keyword, k * rows).unwrap();
                assert_eq!(sigma.apply(&probe), transpose(&probe, &co).unwrap());
                assert_eq!(sigma.sigma(), &transpose(&probe, &co).unwrap()[..]);
            }
        }
    }
}

#[test]
fn read_order_matches_selection_sort_on_all_short_keywords() {
    for k in 1..=4u32 {
        for code in 0..4u32.pow(k) {
            let letters: Vec<u8> = (0..k).map(|i| ((code / 4u32.pow(i)) % 4) as u8).collect();
            let kw = Keyword::from_letters(letters.clone()).unwrap();
            assert_eq!(column_order(&kw).read_order(), &oracle_read_order(&letters)[..]);
        }
    }
}

fn keyword_strategy() -> impl Strategy<Value = Vec<u8>> {
    proptest::collection::vec(0u8..26, 1..9)
}

proptest! {
    #[test]
    fn decrypt_inverts_encrypt(
        msg in proptest::collection::vec(0u8..26, 0..70),
        key in keyword_strategy(),
        pad in 0u8..26,
    ) {
        let kw = Keyword::from_letters(key.clone()).unwrap();
        let policy = PaddingPolicy::FixedChar(pad);
        let c = encrypt_columnar(&msg, &kw, policy).unwrap();
        let padded = pad_to_block(&msg, kw.len(), policy, kw.first()).unwrap();
        prop_assert_eq!(decrypt_columnar(&c, &kw).unwrap(), padded.clone());
        prop_assert_eq!(encrypt_columnar(&padded, &kw, PaddingPolicy::None).unwrap(), c.clone());
        prop_assert_eq!(Some(c), oracle_columnar(&msg, &key, Some(pad)));
    }

    #[test]
    fn output_is_an_anagram_of_padded_input(
        msg in proptest::collection::vec(0u8..26, 0..70),
        key in keyword_strategy(),
    ) {
        let kw = Keyword::from_letters(key).unwrap();
        let mut c = encrypt_columnar(&msg, &kw, PaddingPolicy::FirstKeyChar).unwrap();
        let mut padded = pad_to_block(&msg, kw.len(), PaddingPolicy::FirstKeyChar, kw.first()).unwrap();
        c.sort_unstable();
        padded.sort_unstable();
        prop_assert_eq!(c, padded);
    }

    #[test]
    fn inverse_permutation_composes_to_identity(key in keyword_strategy(), rows in 1usize..10) {
        let kw = Keyword::from_letters(key).unwrap();
        let sigma = permutation_of(&kw, kw.len() * rows).unwrap();
        prop_assert!(sigma.compose(&sigma.inverse()).is_identity());
    }
}
