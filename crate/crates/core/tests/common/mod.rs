//! Reference implementations written independently of the library paths
//! they check.
#![allow(dead_code)]

/// Column read order by repeated selection of the smallest unused letter
/// (leftmost on ties).
pub fn oracle_read_order(keyword: &[u8]) -> Vec<usize> {
    let mut used = vec![false; keyword.len()];
    let mut order = Vec::new();
    for _ in 0..keyword.len() {
        let mut best: Option<usize> = None;
        for (i, &c) in keyword.iter().enumerate() {
            if used[i] {
                continue;
            }
            match best {
                Some(b) if keyword[b] <= c => {}
                _ => best = Some(i),
            }
        }
        let b = best.unwrap();
        used[b] = true;
        order.push(b);
    }
    order
}

/// Pads with `pad` (when given) and reads an explicit grid column by column.
pub fn oracle_columnar<T: Copy>(msg: &[T], keyword: &[u8], pad: Option<T>) -> Option<Vec<T>> {
    let k = keyword.len();
    let mut padded = msg.to_vec();
    while !padded.len().is_multiple_of(k) {
        padded.push(pad?);
    }
    let rows: Vec<&[T]> = padded.chunks(k).collect();
    let mut out = Vec::new();
    for col in oracle_read_order(keyword) {
        for row in &rows {
            out.push(row[col]);
        }
    }
    Some(out)
}

pub fn oracle_hybrid(msg: &[u8], keyword: &[u8], pad: Option<u8>) -> Option<Vec<u8>> {
    let key = oracle_columnar(msg, keyword, pad)?;
    Some(msg.iter().zip(&key).map(|(&p, &k)| (p + k) % 26).collect())
}

/// Every sequence of length `n` over symbols `0..base`, in lexicographic order.
pub fn all_texts(n: usize, base: u8) -> impl Iterator<Item = Vec<u8>> {
    let total = (base as u64).pow(n as u32);
    (0..total).map(move |mut code| {
        let mut t = vec![0u8; n];
        for slot in t.iter_mut().rev() {
            *slot = (code % base as u64) as u8;
            code /= base as u64;
        }
        t
    })
}

/// Common words weighted roughly by rank, for English-like test streams.
pub const WORDS: &[&str] = &[
    "THE", "OF", "AND", "TO", "IN", "IS", "IT", "THAT", "WAS", "HE", "FOR", "ON", "ARE", "WITH",
    "AS", "HIS", "THEY", "AT", "BE", "THIS", "FROM", "HAVE", "OR", "BY", "ONE", "HAD", "NOT",
    "BUT", "WHAT", "ALL", "WERE", "WHEN", "WE", "THERE", "CAN", "AN", "YOUR", "WHICH", "THEIR",
    "SAID", "IF", "DO", "WILL", "EACH", "ABOUT", "HOW", "UP", "OUT", "THEM", "THEN", "SHE",
    "MANY", "SOME", "SO", "THESE", "WOULD", "OTHER", "INTO", "HAS", "MORE", "HER", "TWO",
    "LIKE", "HIM", "SEE", "TIME", "COULD", "NO", "MAKE", "THAN", "FIRST", "BEEN", "ITS", "WHO",
    "NOW", "PEOPLE", "MY", "MADE", "OVER", "DID", "DOWN", "ONLY", "WAY", "FIND", "USE", "MAY",
    "WATER", "LONG", "LITTLE", "VERY", "AFTER", "WORDS", "CALLED", "JUST", "WHERE", "MOST",
    "KNOW", "FOREST", "TREES", "HEIGHT", "MESSAGE", "CASTLE", "WALL", "EAST", "DEFEND",
];

/// Word stream of at least `min_len` letters drawn with weight `1 / (rank + 1)`.
pub fn english_like<R: rand::Rng>(rng: &mut R, min_len: usize) -> Vec<u8> {
    let weights: Vec<f64> = (0..WORDS.len()).map(|r| 1.0 / (r as f64 + 1.0)).collect();
    let dist = rand::distributions::WeightedIndex::new(&weights).unwrap();
    let mut out = Vec::new();
    while out.len() < min_len {
        let w = WORDS[rng.sample(&dist)];
        out.extend(w.bytes().map(|b| b - b'A'));
    }
    out
}
