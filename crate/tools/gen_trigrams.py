"""Regenerate crates/core/data/english_ngrams.bin.

Builds letter-trigram statistics for spaceless English from the `wordfreq`
English word list: a seeded stream of words drawn by frequency is joined
without separators (so word-boundary trigrams are included) and counted.
All values are round(8 * -ln p) clipped to 255, add-one smoothed:

  bytes 0..17576       p(c | a b), index 676*a + 26*b + c
  bytes 17576..17602   p(a) for the first letter of a text (word-initial)
  bytes 17602..18278   p(b | a) for the second letter, index 26*a + b
  bytes 18278..18954   p(text ends | last two letters a b), index 26*a + b
"""
import math
import random
import sys
from collections import Counter

import wordfreq

WORDS = 30000
STREAM_WORDS = 1_500_000
SEED = 1

def main(out_path):
    words = [w.upper() for w in wordfreq.top_n_list("en", WORDS)]
    words = [w for w in words if w.isascii() and w.isalpha()]
    weights = [wordfreq.word_frequency(w, "en") for w in words]
    rng = random.Random(SEED)
    stream = "".join(rng.choices(words, weights, k=STREAM_WORDS))
    tri = Counter(stream[i:i + 3] for i in range(len(stream) - 2))
    out = bytearray()
    idx = "ABCDEFGHIJKLMNOPQRSTUVWXYZ"
    for a in idx:
        for b in idx:
            ctx = sum(tri[a + b + c] for c in idx) + 26
            for c in idx:
                p = (tri[a + b + c] + 1) / ctx
                out.append(min(255, round(-8 * math.log(p))))
    starts = Counter(w[0] for w in rng.choices(words, weights, k=STREAM_WORDS // 3))
    total = sum(starts.values()) + 26
    for a in idx:
        out.append(min(255, round(-8 * math.log((starts[a] + 1) / total))))
    long_words = [(w, f) for w, f in zip(words, weights) if len(w) >= 2]
    first2 = Counter()
    for w, f in long_words:
        first2[w[:2]] += f
    for a in idx:
        ctx = sum(first2[a + b] for b in idx)
        for b in idx:
            # additive smoothing of 1/1000 of the context mass per cell
            p = (first2[a + b] + ctx / 1000) / (ctx * 1.026) if ctx else 1 / 26
            out.append(min(255, round(-8 * math.log(p))))
    # how often a letter pair in the stream sits at the end of a word
    bi = Counter(stream[i:i + 2] for i in range(len(stream) - 1))
    ends = Counter()
    for w, f in long_words:
        ends[w[-2:]] += f
    end_mass = sum(ends.values())
    n_words = STREAM_WORDS
    for a in idx:
        for b in idx:
            expected_end = ends[a + b] / end_mass * n_words
            p = (expected_end + 0.5) / (bi[a + b] + 1.0)
            p = min(max(p, 1e-6), 1.0)
            out.append(min(255, round(-8 * math.log(p))))
    with open(out_path, "wb") as f:
        f.write(out)

if __name__ == "__main__":
    main(sys.argv[1])
