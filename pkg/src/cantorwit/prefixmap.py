"""Prefix-exchange bijections of the Cantor space.

An element is a finite list of pairs (d, r): it sends every sequence d·x to
r·x.  The domain words and the range words each form a complete prefix code
(an antichain whose cylinders partition the space), so the map is a
homeomorphism.  Elements are stored reduced — no family of pairs
(d0, r0), ..., (d(k-1), r(k-1)) with a common parent on both sides survives,
it merges to (d, r) — and sorted by domain word, which makes equality of
maps a plain tuple comparison: two pair lists denote the same bijection iff
their reduced forms are identical.

Composition is written like function application: (g * h)(x) = g(h(x)).
"""

import itertools
from dataclasses import dataclass

from .clopen import ClopenSet, canonicalize, cylinder, letters, lenlex, check_word, split_words
from .errors import ArityMismatchError, PreconditionError


@dataclass(frozen=True)
class PrefixMap:
    """A reduced, domain-sorted prefix-exchange bijection.

    Build instances through :meth:`from_pairs` (or the module helpers);
    the constructor trusts its arguments.
    """

    pairs: tuple[tuple[str, str], ...]
    arity: int = 2

    @classmethod
    def from_pairs(cls, pairs, arity: int = 2) -> "PrefixMap":
        """Validate a pair list and return its reduced form."""
        plist = [(str(d), str(r)) for d, r in pairs]
        if not plist:
            raise PreconditionError("a prefix map needs at least one pair")
        for d, r in plist:
            check_word(d, arity)
            check_word(r, arity)
        _check_complete_code([d for d, _ in plist], arity, "domain")
        _check_complete_code([r for _, r in plist], arity, "range")
        return cls(_reduce(plist, arity), arity)

    def __str__(self) -> str:
        return "{" + ",".join(f"{d if d else 'e'}->{r if r else 'e'}" for d, r in self.pairs) + "}"

    def _check_same(self, other: "PrefixMap") -> None:
        if self.arity != other.arity:
            raise ArityMismatchError(f"mixed arities {self.arity} and {other.arity}")

    def is_identity(self) -> bool:
        return self.pairs == (("", ""),)

    def __mul__(self, other: "PrefixMap") -> "PrefixMap":
        """Composition: (g * h)(x) = g(h(x))."""
        self._check_same(other)
        out = []
        for dh, rh in other.pairs:
            for dg, rg in self.pairs:
                if rh.startswith(dg):
                    out.append((dh, rg + rh[len(dg):]))
                elif dg.startswith(rh) and dg != rh:
                    out.append((dh + dg[len(rh):], rg))
        return PrefixMap(_reduce(out, self.arity), self.arity)

    def inverse(self) -> "PrefixMap":
        flipped = tuple(sorted(((r, d) for d, r in self.pairs), key=lambda p: lenlex(p[0])))
        return PrefixMap(flipped, self.arity)

    def __pow__(self, n: int) -> "PrefixMap":
        if n < 0:
            return self.inverse() ** (-n)
        acc = identity(self.arity)
        for _ in range(n):
            acc = acc * self
        return acc

    def restrict(self, region: ClopenSet) -> list[tuple[str, str]]:
        """Pieces (w, image of w) refining the map over `region`.

        The returned domain words form an antichain whose union is the
        region; images are the corresponding range words.
        """
        if self.arity != region.arity:
            raise ArityMismatchError("region arity differs from map arity")
        out = []
        for d, r in self.pairs:
            for w in region.code:
                if w.startswith(d):
                    out.append((w, r + w[len(d):]))
                elif d.startswith(w) and d != w:
                    out.append((d, r))
        return out

    def image(self, region: ClopenSet) -> ClopenSet:
        return canonicalize([im for _, im in self.restrict(region)], self.arity)

    def fixes_pointwise(self, region: ClopenSet) -> bool:
        """True iff every point of `region` is fixed.

        A pair (d, r) with d != r has at most one fixed point in its domain
        cylinder, so it moves points inside any cylinder meeting the region.
        """
        for d, r in self.pairs:
            if d != r and not cylinder(d, self.arity).disjoint(region):
                return False
        return True

    def in_rist(self, region: ClopenSet) -> bool:
        """Membership in the rigid stabiliser: fixes the complement pointwise."""
        return self.fixes_pointwise(region.complement())

    def support_upper(self) -> ClopenSet:
        """Clopen over-approximation of the support (diagnostic only: the
        exact support may be smaller by finitely many fixed points)."""
        return canonicalize([d for d, r in self.pairs if d != r], self.arity)

    def moved_cylinder(self) -> ClopenSet:
        """A cylinder Z with g(Z) disjoint from Z.

        Takes the first moved pair in canonical order.  A prefix-incomparable
        pair gives Z = [d] directly; for a comparable pair with excess u on
        either side, Z = [d·w] with the letter w != u[0] works, since the
        image [r·w] then differs from [d·w] at the first excess position.
        """
        moved = [(d, r) for d, r in self.pairs if d != r]
        if not moved:
            raise PreconditionError("the identity moves no cylinder")
        d, r = moved[0]
        if not d.startswith(r) and not r.startswith(d):
            return cylinder(d, self.arity)
        u = r[len(d):] if r.startswith(d) else d[len(r):]
        w = "0" if u[0] != "0" else "1"
        return cylinder(d + w, self.arity)


def identity(arity: int = 2) -> PrefixMap:
    return PrefixMap((("", ""),), arity)


def _check_complete_code(words: list[str], arity: int, side: str) -> None:
    if len(set(words)) != len(words):
        raise PreconditionError(f"duplicate {side} word")
    srt = sorted(words, key=lenlex)
    for a, b in itertools.combinations(srt, 2):
        if b.startswith(a):
            raise PreconditionError(f"{side} words overlap: {a!r} is a prefix of {b!r}")
    if not canonicalize(words, arity).is_full():
        raise PreconditionError(f"incomplete {side} code")


def _reduce(pairs: list[tuple[str, str]], arity: int) -> tuple[tuple[str, str], ...]:
    table = dict(pairs)
    alpha = letters(arity)
    changed = True
    while changed:
        changed = False
        for d in list(table):
            if not d:
                continue
            r = table.get(d)
            if r is None or not r or d[-1] != r[-1]:
                continue
            p, q = d[:-1], r[:-1]
            if all(table.get(p + c) == q + c for c in alpha):
                for c in alpha:
                    del table[p + c]
                table[p] = q
                changed = True
                break
    return tuple(sorted(table.items(), key=lambda pr: lenlex(pr[0])))


def matched_pairs(dom_words, ran_words, arity: int) -> list[tuple[str, str]]:
    """Pair two antichains order-wise after splitting to a common size.

    Splitting a word adds arity-1 words, so the sizes must agree mod
    arity-1 (always true for arity 2); both sides must be non-empty or both
    empty.
    """
    dom = list(dom_words)
    ran = list(ran_words)
    if (len(dom) == 0) != (len(ran) == 0):
        raise PreconditionError("one side of the completion is empty, the other is not")
    if not dom:
        return []
    if (len(dom) - len(ran)) % (arity - 1) != 0:
        raise PreconditionError(
            f"infeasible completion: {len(dom)} vs {len(ran)} words, arity {arity}")
    size = max(len(dom), len(ran))
    return list(zip(split_words(dom, size, arity), split_words(ran, size, arity)))


def onto_transporter(src: ClopenSet, dst: ClopenSet) -> PrefixMap:
    """A bijection mapping `src` exactly onto `dst`, completed
    length-lexicographically off `src`."""
    if src.arity != dst.arity:
        raise ArityMismatchError("mixed arities")
    if not src.is_empty() and dst.is_empty() or src.is_empty() and not dst.is_empty():
        raise PreconditionError("cannot map a non-empty set onto an empty one")
    pairs = matched_pairs(src.code, dst.code, src.arity)
    pairs += matched_pairs(src.complement().code, dst.complement().code, src.arity)
    return PrefixMap.from_pairs(pairs, src.arity)


def sigma_swap(g: PrefixMap, region: ClopenSet) -> PrefixMap:
    """The involution acting as g on `region`, g^-1 on its image, identity
    elsewhere; requires the region and its image to be disjoint."""
    g_region = g.image(region)
    if not region.disjoint(g_region):
        raise PreconditionError("swap region overlaps its image")
    forward = g.restrict(region)
    pairs = list(forward) + [(im, w) for w, im in forward]
    rest = region.union(g_region).complement()
    pairs += [(w, w) for w in rest.code]
    return PrefixMap.from_pairs(pairs, g.arity)


def patch(constraints) -> PrefixMap:
    """Assemble a bijection agreeing with g_i on each region C_i.

    `constraints` is a sequence of (ClopenSet, PrefixMap).  The regions must
    be pairwise disjoint and so must the images g_i(C_i); the behaviour off
    the regions is the deterministic length-lexicographic completion of the
    leftover domain onto the leftover range.
    """
    constraints = list(constraints)
    if not constraints:
        raise PreconditionError("patch needs at least one constraint")
    arity = constraints[0][1].arity
    pinned: list[tuple[str, str]] = []
    regions: list[ClopenSet] = []
    images: list[ClopenSet] = []
    for region, g in constraints:
        if g.arity != arity or region.arity != arity:
            raise ArityMismatchError("mixed arities in patch constraints")
        for seen in regions:
            if not seen.disjoint(region):
                raise PreconditionError("patch regions overlap")
        img = g.image(region)
        for seen in images:
            if not seen.disjoint(img):
                raise PreconditionError("patch images overlap")
        regions.append(region)
        images.append(img)
        pinned.extend(g.restrict(region))
    dom_left = _union_all(regions, arity).complement()
    ran_left = _union_all(images, arity).complement()
    pinned += matched_pairs(dom_left.code, ran_left.code, arity)
    return PrefixMap.from_pairs(pinned, arity)


def _union_all(sets: list[ClopenSet], arity: int) -> ClopenSet:
    words: list[str] = []
    for s in sets:
        words.extend(s.code)
    return canonicalize(words, arity)
