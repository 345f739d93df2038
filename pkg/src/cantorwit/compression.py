"""Witness constructors for compressibility and wandering dynamics.

Everything here returns explicit prefix maps whose postconditions are
checkable with the clopen-set algebra: a transporter squeezing one clopen
set inside another, an element whose integer powers move a cylinder to
pairwise disjoint images, the two-swap construction compressing a disjoint
union into its first part, and a minimal 3-element cover with private
witness cylinders.
"""

from typing import NamedTuple

from .clopen import ClopenSet, canonicalize, cylinder, letters, split_words
from .errors import PreconditionError
from .prefixmap import PrefixMap, identity, matched_pairs, sigma_swap


def transporter(src: ClopenSet, dst: ClopenSet) -> PrefixMap:
    """An element h with h(src) contained in dst.

    The target is carved out of dst's code: split it until at least
    |code(src)| words are available (one more than that if dst is the whole
    space, so the image never exhausts it), map src's code onto the first
    words order-wise and complete length-lexicographically.
    """
    if src.arity != dst.arity:
        raise PreconditionError("mixed arities")
    if src.is_empty() or dst.is_empty():
        raise PreconditionError("transporter needs non-empty source and target")
    if src.is_full():
        if dst.is_full():
            return identity(src.arity)
        raise PreconditionError("the whole space can only be transported onto itself")
    k = src.arity
    n_src = len(src.code)
    need = n_src + 1 if dst.is_full() else n_src
    m = len(dst.code)
    if m < need:
        m += -(-(need - m) // (k - 1)) * (k - 1)
    target_words = split_words(dst.code, m, k)[:n_src]
    target = canonicalize(target_words, k)
    pairs = list(zip(src.code, target_words))
    pairs += matched_pairs(src.complement().code, target.complement().code, k)
    return PrefixMap.from_pairs(pairs, k)


def wandering_base(arity: int = 2) -> tuple[PrefixMap, ClopenSet]:
    """The fixed base element g0 and its wandering cylinder Z0 = [01].

    g0 contracts into [0...] and expands out of the top letter, so the
    orbit of Z0 consists of the pairwise incomparable cylinders
    [0^n 01] (forward) and [(k-1)^(n-1) 1] (backward).
    """
    alpha = letters(arity)
    top = alpha[-1]
    pairs = [("0", "00")]
    pairs += [(alpha[j], "0" + alpha[j]) for j in range(1, arity - 1)]
    pairs += [(top + "0", "0" + top)]
    pairs += [(top + alpha[j], alpha[j]) for j in range(1, arity)]
    return PrefixMap.from_pairs(pairs, arity), cylinder("01", arity)


def wandering_witness(region: ClopenSet) -> tuple[PrefixMap, ClopenSet]:
    """An element g and a clopen set Z with region ⊆ Z and the images
    g^n(Z), n in Z, pairwise disjoint.

    Conjugates the fixed base element by a transporter f carrying the
    region into the base wandering cylinder; Z is the pullback f^-1(Z0).
    """
    if not region.is_proper():
        raise PreconditionError("wandering witness needs a proper non-empty region")
    g0, z0 = wandering_base(region.arity)
    f = transporter(region, z0)
    g = f.inverse() * g0 * f
    return g, f.inverse().image(z0)


def join_compression(part_a: ClopenSet, part_b: ClopenSet) -> PrefixMap:
    """An element mapping the disjoint union A ∪ B into A.

    Requires a non-empty complement W of the union.  Built from three
    transporters: g1 carries A into W, g2 and g3 carry A and B into
    disjoint halves of g1(A); the result is g1^-1 · σ(g2, A) · σ(g3, B).
    """
    if part_a.arity != part_b.arity:
        raise PreconditionError("mixed arities")
    if part_a.is_empty() or part_b.is_empty():
        raise PreconditionError("join compression needs non-empty parts")
    if not part_a.disjoint(part_b):
        raise PreconditionError("parts overlap")
    rest = part_a.union(part_b).complement()
    if rest.is_empty():
        raise PreconditionError("the union leaves no room to move into")
    g1 = transporter(part_a, rest)
    landing = g1.image(part_a)
    half_a, half_b = _split_in_two(landing)
    g2 = transporter(part_a, half_a)
    g3 = transporter(part_b, half_b)
    return g1.inverse() * sigma_swap(g2, part_a) * sigma_swap(g3, part_b)


def _split_in_two(region: ClopenSet) -> tuple[ClopenSet, ClopenSet]:
    """Two disjoint non-empty clopen pieces covering the region."""
    k = region.arity
    if len(region.code) >= 2:
        first = canonicalize(region.code[:1], k)
        return first, canonicalize(region.code[1:], k)
    w = region.code[0]
    first = cylinder(w + "0", k)
    return first, canonicalize([w + c for c in letters(k)[1:]], k)


class TriCover(NamedTuple):
    """A minimal 3-element cover J1, J2, J3 of the space with private
    witness sets U_i ⊆ J_i disjoint from the other two members."""

    j1: ClopenSet
    j2: ClopenSet
    j3: ClopenSet
    u1: ClopenSet
    u2: ClopenSet
    u3: ClopenSet

    @property
    def members(self) -> tuple[ClopenSet, ...]:
        return (self.j1, self.j2, self.j3, self.u1, self.u2, self.u3)

    @property
    def cover(self) -> tuple[ClopenSet, ClopenSet, ClopenSet]:
        return (self.j1, self.j2, self.j3)

    @property
    def privates(self) -> tuple[ClopenSet, ClopenSet, ClopenSet]:
        return (self.u1, self.u2, self.u3)


def min_cover_3(arity: int = 2) -> TriCover:
    """The fixed minimal 3-cover with private cylinders.

    For arity 2 the constants are J1={00,110}, J2={01,111}, J3={10,11}
    with U1={00}, U2={01}, U3={10}.  For larger arities the privates are
    the depth-2 cylinders [00], [01], [02] and the remaining depth-2
    cylinders are distributed round-robin.
    """
    if arity == 2:
        return TriCover(
            canonicalize(["00", "110"], 2),
            canonicalize(["01", "111"], 2),
            canonicalize(["10", "11"], 2),
            cylinder("00", 2),
            cylinder("01", 2),
            cylinder("10", 2),
        )
    alpha = letters(arity)
    privates = ["00", "01", "02"]
    rest = sorted(a + b for a in alpha for b in alpha if a + b not in privates)
    buckets: list[list[str]] = [[privates[i]] for i in range(3)]
    for i, w in enumerate(rest):
        buckets[i % 3].append(w)
    j1, j2, j3 = (canonicalize(b, arity) for b in buckets)
    u1, u2, u3 = (cylinder(w, arity) for w in privates)
    return TriCover(j1, j2, j3, u1, u2, u3)


def two_disjoint_cylinders(region: ClopenSet) -> tuple[ClopenSet, ClopenSet]:
    """Two disjoint cylinders inside a non-empty clopen set."""
    if region.is_empty():
        raise PreconditionError("no room for spare cylinders")
    k = region.arity
    if len(region.code) >= 2:
        return cylinder(region.code[0], k), cylinder(region.code[1], k)
    w = region.code[0]
    return cylinder(w + "0", k), cylinder(w + "1", k)


__all__ = [
    "transporter",
    "wandering_base",
    "wandering_witness",
    "join_compression",
    "TriCover",
    "min_cover_3",
    "two_disjoint_cylinders",
]
