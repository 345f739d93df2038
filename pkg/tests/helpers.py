"""Independent oracles for the test suite.

These deliberately avoid the library's own composition/reduction/boolean
machinery: maps are evaluated pair-by-pair on explicit finite words, and
clopen sets are compared by brute-force membership of every word of a
given depth.  Tests check library results against these.
"""

import itertools

ALPHABET = "0123456789"


def all_words(arity: int, depth: int) -> list[str]:
    return ["".join(p) for p in itertools.product(ALPHABET[:arity], repeat=depth)]


def apply_pairs(pairs, word: str) -> str:
    """Evaluate a prefix map given as raw pairs on a long-enough word."""
    for d, r in pairs:
        if word.startswith(d):
            return r + word[len(d):]
    raise AssertionError(f"word {word!r} not covered by {pairs}")


def member(code, word: str) -> bool:
    """Cylinder membership of a word at least as deep as every code word."""
    return any(word.startswith(c) for c in code)


def max_word_len(*codes) -> int:
    return max((len(w) for code in codes for w in code), default=0)


def clopen_equal(a, b) -> bool:
    """Brute-force equality of two clopen sets via depth-wise membership."""
    depth = max(max_word_len(a.code, b.code), 1)
    return all(member(a.code, w) == member(b.code, w)
               for w in all_words(a.arity, depth))


def maps_equal(g, h) -> bool:
    """Brute-force equality of two prefix maps via pointwise evaluation."""
    depth = max(max_word_len([d for d, _ in g.pairs], [d for d, _ in h.pairs]), 1)
    return all(apply_pairs(g.pairs, w) == apply_pairs(h.pairs, w)
               for w in all_words(g.arity, depth))


def image_words(g, region, depth: int) -> set[str]:
    """All depth-d images under g of the points named by region's code."""
    out = set()
    for w in all_words(g.arity, depth):
        if member(region.code, w):
            out.add(apply_pairs(g.pairs, w))
    return out
