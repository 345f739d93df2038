"""Finite words and canonical clopen subsets of the Cantor space.

Points of the space are infinite sequences over the alphabet {0, ..., k-1};
a finite word w names the cylinder of all sequences extending w, and the
empty word names the whole space.  Clopen subsets are exactly the finite
unions of cylinders.  Every clopen set has a unique canonical code: an
antichain of words (no word a prefix of another) in which no full sibling
family d0, ..., d(k-1) survives (such a family merges to d), listed in
length-lexicographic order.  Canonical codes make equality, hashing and
printing of clopen sets plain tuple operations.

>>> canonicalize({"00", "01", "10"}).code
('0', '10')
>>> cylinder("01").complement().code
('1', '00')
"""

from dataclasses import dataclass
from typing import Iterable

from .errors import ArityMismatchError, PreconditionError

ALPHABET = "0123456789"


def letters(arity: int) -> str:
    """The alphabet for a given arity, as a string of digit symbols."""
    if not 2 <= arity <= len(ALPHABET):
        raise ArityMismatchError(f"arity must be between 2 and {len(ALPHABET)}, got {arity}")
    return ALPHABET[:arity]


def check_word(word: str, arity: int) -> None:
    alpha = letters(arity)
    for ch in word:
        if ch not in alpha:
            raise ArityMismatchError(f"symbol {ch!r} out of range for arity {arity} in word {word!r}")


def lenlex(word: str) -> tuple[int, str]:
    """Sort key for the canonical length-lexicographic order."""
    return (len(word), word)


@dataclass(frozen=True)
class ClopenSet:
    """A clopen subset of the Cantor space in canonical antichain form.

    Build instances through :func:`canonicalize` (or the helpers below);
    the constructor trusts its arguments.
    """

    code: tuple[str, ...]
    arity: int = 2

    def __str__(self) -> str:
        return "[" + ",".join(w if w else "e" for w in self.code) + "]"

    def _check_same(self, other: "ClopenSet") -> None:
        if self.arity != other.arity:
            raise ArityMismatchError(f"mixed arities {self.arity} and {other.arity}")

    def is_empty(self) -> bool:
        return not self.code

    def is_full(self) -> bool:
        return self.code == ("",)

    def is_proper(self) -> bool:
        """Non-empty and not the whole space."""
        return bool(self.code) and self.code != ("",)

    def union(self, other: "ClopenSet") -> "ClopenSet":
        self._check_same(other)
        return canonicalize(self.code + other.code, self.arity)

    def intersect(self, other: "ClopenSet") -> "ClopenSet":
        self._check_same(other)
        out = []
        for a in self.code:
            for b in other.code:
                if a.startswith(b):
                    out.append(a)
                elif b.startswith(a):
                    out.append(b)
        return canonicalize(out, self.arity)

    def complement(self) -> "ClopenSet":
        return ClopenSet(tuple(sorted(_complement_words(self.code, self.arity), key=lenlex)),
                         self.arity)

    def subset(self, other: "ClopenSet") -> bool:
        return self.intersect(other.complement()).is_empty()

    def disjoint(self, other: "ClopenSet") -> bool:
        return self.intersect(other).is_empty()

    def split_to_size(self, size: int) -> tuple[str, ...]:
        """Refine the canonical code into an antichain of exactly `size` words.

        Each refinement step replaces one word by its arity-many children, so
        reachable sizes are |code| + t*(arity-1); anything else is rejected.
        """
        n = len(self.code)
        if n == 0:
            raise PreconditionError("cannot split the empty set")
        if size < n or (size - n) % (self.arity - 1) != 0:
            raise PreconditionError(
                f"infeasible size: {size} not reachable from {n} words with arity {self.arity}")
        return split_words(self.code, size, self.arity)


def _complement_words(code: tuple[str, ...], arity: int) -> list[str]:
    # code is a canonical antichain; recurse on first letters.
    if not code:
        return [""]
    if "" in code:
        return []
    out = []
    for ch in letters(arity):
        sub = tuple(w[1:] for w in code if w[0] == ch)
        if not sub:
            out.append(ch)
        else:
            out.extend(ch + v for v in _complement_words(sub, arity))
    return out


def split_words(words: Iterable[str], size: int, arity: int) -> tuple[str, ...]:
    """Refine an antichain to exactly `size` words, splitting the
    length-lexicographically last word at each step."""
    out = sorted(words, key=lenlex)
    alpha = letters(arity)
    while len(out) < size:
        w = out.pop()
        out.extend(w + c for c in alpha)
        out.sort(key=lenlex)
    if len(out) != size:
        raise PreconditionError(f"infeasible size {size} for {len(out)}-word antichain")
    return tuple(out)


def canonicalize(words: Iterable[str], arity: int = 2) -> ClopenSet:
    """The unique canonical antichain denoting the same union of cylinders.

    Idempotent: canonicalize(canonicalize(S).code) == canonicalize(S).

    >>> canonicalize({"0", "01"}).code
    ('0',)
    >>> canonicalize({"00", "01", "10", "11"}).code
    ('',)
    """
    ws = set(words)
    for w in ws:
        check_word(w, arity)
    # prefix absorption: drop any word with a proper prefix present
    ws = {w for w in ws if not any(w[:i] in ws for i in range(len(w)))}
    # merge full sibling families until none remain
    alpha = letters(arity)
    changed = True
    while changed:
        changed = False
        parents = {w[:-1] for w in ws if w}
        for p in parents:
            if all(p + c in ws for c in alpha):
                ws.difference_update(p + c for c in alpha)
                ws.add(p)
                changed = True
    return ClopenSet(tuple(sorted(ws, key=lenlex)), arity)


def cylinder(word: str, arity: int = 2) -> ClopenSet:
    check_word(word, arity)
    return ClopenSet((word,), arity)


def whole_space(arity: int = 2) -> ClopenSet:
    return ClopenSet(("",), arity)


def empty_set(arity: int = 2) -> ClopenSet:
    letters(arity)
    return ClopenSet((), arity)
