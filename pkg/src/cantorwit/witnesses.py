"""Certificate types and witness-producing constructions.

A NormalWord is a product of conjugates of a fixed base element n^{±1}; it
certifies membership in the normal closure of n.  A CommutatorWord is a
product of commutators [x, y] = x y x^-1 y^-1; it certifies membership in
the derived subgroup.  Both evaluate to prefix maps, and equality of
reduced forms is the verification criterion everywhere.

The constructions all follow one theme: an element with clopen support
bound S is insensitive to what a conjugator does off S, so a raw conjugator
can be traded for one that agrees with it pointwise on S and carries a
commutator-word certificate.  derived_conjugator produces such elements
(two commutators suffice, one per factor of a two-piece splitting), and the
witness builders below compose them into full certificates.
"""

import json
from dataclasses import dataclass

from .clopen import ClopenSet, canonicalize, cylinder
from .compression import transporter, two_disjoint_cylinders, wandering_witness
from .errors import PreconditionError, VerificationError
from .prefixmap import PrefixMap, identity, onto_transporter, patch, sigma_swap


# ---------------------------------------------------------------------------
# certificate types


@dataclass(frozen=True)
class NormalWord:
    """Product of conjugates c·base^e·c^-1, composed left to right."""

    base: PrefixMap
    letters: tuple[tuple[PrefixMap, int], ...] = ()

    def __post_init__(self):
        if self.base.is_identity():
            raise PreconditionError("a normal word needs a non-identity base")
        if any(e not in (1, -1) for _, e in self.letters):
            raise PreconditionError("letter exponents must be +1 or -1")

    def evaluate(self) -> PrefixMap:
        acc = identity(self.base.arity)
        inv = self.base.inverse()
        for conj, exp in self.letters:
            acc = acc * (conj * (self.base if exp == 1 else inv) * conj.inverse())
        return acc


@dataclass(frozen=True)
class CommutatorWord:
    """Product of commutators [x, y], composed left to right."""

    factors: tuple[tuple[PrefixMap, PrefixMap], ...] = ()

    def evaluate(self, arity: int = 2) -> PrefixMap:
        if self.factors:
            arity = self.factors[0][0].arity
        acc = identity(arity)
        for x, y in self.factors:
            acc = acc * commutator(x, y)
        return acc

    def inverse(self) -> "CommutatorWord":
        return CommutatorWord(tuple((y, x) for x, y in reversed(self.factors)))


def eval_normal_word(word: NormalWord) -> PrefixMap:
    return word.evaluate()


def eval_commutator_word(word: CommutatorWord, arity: int = 2) -> PrefixMap:
    return word.evaluate(arity)


def commutator(x: PrefixMap, y: PrefixMap) -> PrefixMap:
    return x * y * x.inverse() * y.inverse()


@dataclass(frozen=True)
class _Certified:
    """A prefix map together with commutator-word factors evaluating to it."""

    elem: PrefixMap
    factors: tuple[tuple[PrefixMap, PrefixMap], ...] = ()

    def __mul__(self, other: "_Certified") -> "_Certified":
        return _Certified(self.elem * other.elem, self.factors + other.factors)

    def inverse(self) -> "_Certified":
        return _Certified(self.elem.inverse(),
                          tuple((y, x) for x, y in reversed(self.factors)))

    def cert(self) -> CommutatorWord:
        return CommutatorWord(self.factors)


# ---------------------------------------------------------------------------
# splitting and derived conjugators


@dataclass(frozen=True)
class Decomposition:
    """g = s1 * s2 with s_i supported inside the proper clopen set
    support_i (membership in the corresponding rigid stabiliser)."""

    s1: PrefixMap
    support1: ClopenSet
    s2: PrefixMap
    support2: ClopenSet


def decompose2(g: PrefixMap) -> Decomposition:
    """Split a non-identity element into two rigidly supported factors.

    Take a proper sub-cylinder Y of a moved cylinder (so Y ∪ gY is never
    the whole space), let s2 be the swap σ(g, Y) and s1 = g·s2^-1; then s1
    fixes gY pointwise and s2 is supported in Y ∪ gY.
    """
    if g.is_identity():
        raise PreconditionError("cannot decompose the identity")
    z = g.moved_cylinder().code[0]
    y = cylinder(z + "0", g.arity)
    s2 = sigma_swap(g, y)
    gy = g.image(y)
    s1 = g * s2.inverse()
    return Decomposition(s1, gy.complement(), s2, y.union(gy))


def derived_conjugator(g: PrefixMap, region: ClopenSet) -> tuple[PrefixMap, CommutatorWord]:
    """A product of at most two commutators agreeing with g pointwise on
    the proper clopen `region` (hence with the same image of it).

    For each factor s of g = s1·s2 with support bound S, a transporter h
    pushes S off the current image of the region, so h·s^-1·h^-1 fixes that
    image pointwise and [s, h] acts on it exactly as s does.
    """
    if not region.is_proper():
        raise PreconditionError("degenerate region for derived conjugator")
    if g.is_identity():
        return identity(g.arity), CommutatorWord(())
    dec = decompose2(g)
    current = region
    built: list[tuple[PrefixMap, PrefixMap]] = []
    for s, bound in ((dec.s2, dec.support2), (dec.s1, dec.support1)):
        if s.is_identity():
            continue
        h = transporter(bound, current.complement())
        built.append((s, h))
        current = s.image(current)
    built.reverse()
    word = CommutatorWord(tuple(built))
    return word.evaluate(g.arity), word


def shift_identity_check(a: PrefixMap, b: PrefixMap, region: ClopenSet
                         ) -> tuple[PrefixMap, bool]:
    """Verify [a, b] = [[a, g], [b, g^2]] for a wandering g of the region.

    Both a and b must be supported in the proper clopen region; g comes
    from wandering_witness, so its powers move the region to pairwise
    disjoint sets and the identity holds by disjoint-support commutation.
    """
    if not region.is_proper():
        raise PreconditionError("region must be proper and non-empty")
    if not (a.in_rist(region) and b.in_rist(region)):
        raise PreconditionError("both elements must be supported in the region")
    g, _ = wandering_witness(region)
    lhs = commutator(a, b)
    rhs = commutator(commutator(a, g), commutator(b, g * g))
    return g, lhs == rhs


# ---------------------------------------------------------------------------
# normal-closure witnesses


def _check_witness_inputs(a, ya, b, yb, n):
    if n.is_identity():
        raise PreconditionError("base element must be non-trivial")
    for name, (elem, region) in {"a": (a, ya), "b": (b, yb)}.items():
        if not region.is_proper():
            raise PreconditionError(f"support region of {name} must be proper and non-empty")
        if not elem.in_rist(region):
            raise PreconditionError(f"element {name} is not supported in its region")


def _proper_union_letters(a: PrefixMap, ya: ClopenSet, b: PrefixMap, yb: ClopenSet,
                          n: PrefixMap) -> list[tuple[PrefixMap, int]]:
    """Letters for [a, b] over base n when W = ya ∪ yb is proper.

    g' = u^-1·n·u moves W off itself (u transports W into a moved cylinder
    of n), so g'·a^-1·g'^-1 commutes with b and [a, b] = [[a, g'], b],
    which expands into four conjugates of g'^{±1} with conjugators
    a, e, b, b·a.
    """
    if commutator(a, b).is_identity():
        return []
    w = ya.union(yb)
    u = transporter(w, n.moved_cylinder())
    uinv = u.inverse()
    return [(a * uinv, 1), (uinv, -1), (b * uinv, 1), (b * a * uinv, -1)]


def _full_union_mover(ya: ClopenSet, n: PrefixMap) -> tuple[PrefixMap, PrefixMap]:
    """h = u^-1·n·u with h(ya) inside the complement of ya.

    u is a patch sending ya into a sub-cylinder Z' of a moved cylinder of
    n and pulling n(Z') back into a proper part of ya's complement, so
    conjugating by h lands the first support inside the second's region.
    Returns (h, u).
    """
    k = n.arity
    z = n.moved_cylinder().code[0]
    zsub = cylinder(z + "0", k)
    n_zsub = n.image(zsub)
    room = ya.complement()
    room_target = cylinder(room.code[0] + "0", k)
    t2 = transporter(n_zsub, room_target)
    r1 = t2.image(n_zsub)
    t1 = transporter(ya, zsub)
    u = patch([(ya, t1), (r1, t2.inverse())])
    return u.inverse() * n * u, u


def monolith_witness(a: PrefixMap, ya: ClopenSet, b: PrefixMap, yb: ClopenSet,
                     n: PrefixMap) -> NormalWord:
    """A normal word over base n evaluating to [a, b], at most 8 letters.

    When ya ∪ yb is proper the four-letter expansion of [[a, g'], b]
    applies directly.  Otherwise a one-letter conjugate h of n carries ya
    into its own complement; with a1 = h·a·h^-1 the pair (a1, b) falls
    into the proper-union case and

        [a, b] = h^-1·( a1·[h,b]·a1^-1 · [a1, b] )·h · [h^-1, b]

    recombines everything, for 2 + 4 + 2 = 8 letters.
    """
    _check_witness_inputs(a, ya, b, yb, n)
    target = commutator(a, b)
    if target.is_identity():
        return NormalWord(n, ())
    w = ya.union(yb)
    if w.is_full():
        h, u = _full_union_mover(ya, n)
        uinv = u.inverse()
        a1 = h * a * h.inverse()
        ya1 = h.image(ya)
        inner = _proper_union_letters(a1, ya1, b, yb, n)
        pre = [(a1 * uinv, 1), (a1 * b * uinv, -1)] + inner
        hinv = h.inverse()
        letters = [(hinv * c, e) for c, e in pre]
        letters += [(uinv, -1), (b * uinv, 1)]
    else:
        letters = _proper_union_letters(a, ya, b, yb, n)
    word = NormalWord(n, tuple(letters))
    if word.evaluate() != target:
        raise VerificationError("internal error: monolith witness failed to evaluate")
    return word


# ---------------------------------------------------------------------------
# simple witnesses: certified conjugators


def _swap_cylinders(wa: str, wb: str, arity: int) -> PrefixMap:
    rest = canonicalize([wa, wb], arity).complement()
    pairs = [(wa, wb), (wb, wa)] + [(w, w) for w in rest.code]
    return PrefixMap.from_pairs(pairs, arity)


@dataclass(frozen=True)
class _SmallBase:
    """m = [q, n], a two-letter word over n with proper support bound."""

    q: _Certified            # explicit 3-cycle of cylinders, one commutator
    m: _Certified            # [q, n]
    bound: ClopenSet         # proper clopen support bound of m
    letters: tuple           # m as letters over n: ((q, +1), (e, -1))
    inv_letters: tuple       # m^-1 as letters over n: ((e, +1), (q, -1))


def _small_base(n: PrefixMap) -> _SmallBase:
    """A non-trivial certified element of the normal closure of n whose
    support bound Z1 ∪ n(Z1) is proper.

    q is the 3-cycle of three disjoint sub-cylinders of Z1 (a sub-cylinder
    of a moved cylinder of n, so Z1 ∪ n(Z1) misses Z1's sibling), written
    as the single commutator [τ, σ] of two swaps; m = [q, n] = q·n·q^-1·n^-1
    restricts to q on Z1, hence is non-trivial.
    """
    k = n.arity
    z1 = n.moved_cylinder().code[0] + "0"
    wa, wb, wc = z1 + "00", z1 + "01", z1 + "10"
    sig = _swap_cylinders(wa, wb, k)
    tau = _swap_cylinders(wb, wc, k)
    three_cycle = PrefixMap.from_pairs(
        [(wa, wb), (wb, wc), (wc, wa)]
        + [(w, w) for w in canonicalize([wa, wb, wc], k).complement().code], k)
    q = _Certified(three_cycle, ((tau, sig),))
    if q.cert().evaluate(k) != three_cycle:
        raise VerificationError("internal error: 3-cycle certificate")
    m = _Certified(commutator(three_cycle, n), ((three_cycle, n),))
    zone = cylinder(z1, k)
    bound = zone.union(n.image(zone))
    ident = identity(k)
    return _SmallBase(q, m, bound,
                      letters=((q, 1), (_Certified(ident), -1)),
                      inv_letters=((_Certified(ident), 1), (q, -1)))


def _conjugate_letters(outer: _Certified, lts) -> list[tuple[_Certified, int]]:
    return [(outer * c, e) for c, e in lts]


def _agreeing_conjugator(x: PrefixMap, bound: ClopenSet) -> _Certified:
    """A certified element acting like x on everything supported in `bound`:
    it agrees with x pointwise on the proper clopen set, so conjugating any
    element supported inside the bound by it or by x gives the same result."""
    elem, cert = derived_conjugator(x, bound)
    return _Certified(elem, cert.factors)


def _simple_proper_letters(a, ya, b, yb, n, small: _SmallBase):
    """Certified letters for [a, b] over base n, proper ya ∪ yb; 8 letters.

    Same skeleton as the monolith construction but with g' = d^-1·m·d:
    d is a certified transporter agreeing with a raw one pointwise on W,
    and the conjugations by a, b and b·a are replaced by certified elements
    agreeing with them pointwise on g'`s proper support bound.
    """
    if commutator(a, b).is_identity():
        return []
    k = n.arity
    w = ya.union(yb)
    m_elem = small.m.elem
    zm = m_elem.moved_cylinder().code[0]
    u = transporter(w, cylinder(zm + "0", k))
    d = _agreeing_conjugator(u, w)
    dinv = d.inverse()
    sp = d.elem.inverse().image(small.bound)
    e1 = _agreeing_conjugator(a, sp)
    e3 = _agreeing_conjugator(b, sp)
    e4 = _agreeing_conjugator(b * a, sp)
    g_letters = _conjugate_letters(dinv, small.letters)        # g' = d^-1 m d
    g_inv_letters = _conjugate_letters(dinv, small.inv_letters)
    out = []
    out += _conjugate_letters(e1, g_letters)       # a g' a^-1
    out += g_inv_letters                           # g'^-1
    out += _conjugate_letters(e3, g_letters)       # b g' b^-1
    out += _conjugate_letters(e4, g_inv_letters)   # (b a) g'^-1 (b a)^-1
    return out


def _simple_full_letters(a, ya, b, yb, n, small: _SmallBase):
    """Certified letters for the full-union branch; at most 16 letters.

    h = du^-1·m·du (du certified, agreeing with the patch mover u on
    ya ∪ u^-1(m(Z'))) plays the monolith role of the one-letter conjugate;
    every conjugation by a1, a1·b or b is traded for a certified element
    agreeing with it on h's proper support bound.
    """
    k = n.arity
    m_elem = small.m.elem
    zm = m_elem.moved_cylinder().code[0]
    zsub = cylinder(zm + "0", k)
    m_zsub = m_elem.image(zsub)
    room = ya.complement()
    room_target = cylinder(room.code[0] + "0", k)
    t2 = transporter(m_zsub, room_target)
    r1 = t2.image(m_zsub)
    t1 = transporter(ya, zsub)
    u = patch([(ya, t1), (r1, t2.inverse())])
    du = _agreeing_conjugator(u, ya.union(r1))
    duinv = du.inverse()
    h_cert = duinv * small.m * du
    h = h_cert.elem
    hinv_cert = h_cert.inverse()
    sh = du.elem.inverse().image(small.bound)
    a1 = h * a * h.inverse()
    ya1 = h.image(ya)
    inner = _simple_proper_letters(a1, ya1, b, yb, n, small)
    e6 = _agreeing_conjugator(a1, sh)
    e7 = _agreeing_conjugator(a1 * b, sh)
    e8 = _agreeing_conjugator(b, sh)
    h_letters = _conjugate_letters(duinv, small.letters)
    hinv_letters = _conjugate_letters(duinv, small.inv_letters)
    pre = []
    pre += _conjugate_letters(e6, h_letters)       # a1 h a1^-1
    pre += _conjugate_letters(e7, hinv_letters)    # (a1 b) h^-1 (a1 b)^-1
    pre += inner                                   # [a1, b]
    out = _conjugate_letters(hinv_cert, pre)       # conjugate the block by h^-1
    out += hinv_letters                            # [h^-1, b] = h^-1 · (b h b^-1)
    out += _conjugate_letters(e8, h_letters)
    return out


def simple_witness(a: PrefixMap, ya: ClopenSet, b: PrefixMap, yb: ClopenSet,
                   n: PrefixMap, n_cert: CommutatorWord
                   ) -> tuple[NormalWord, tuple[CommutatorWord, ...]]:
    """Like monolith_witness, but every conjugator carries a
    commutator-word certificate, so the whole certificate shows
    [a, b] ∈ <<n>> with conjugation inside the derived subgroup.

    Letter count: at most 8 when ya ∪ yb is proper, at most 16 otherwise
    (each base letter becomes two letters of the small certified word
    m = [q, n]).
    """
    _check_witness_inputs(a, ya, b, yb, n)
    if n_cert.evaluate(n.arity) != n:
        raise PreconditionError("n_cert does not evaluate to the base element")
    target = commutator(a, b)
    if target.is_identity():
        return NormalWord(n, ()), ()
    small = _small_base(n)
    if ya.union(yb).is_full():
        tagged = _simple_full_letters(a, ya, b, yb, n, small)
    else:
        tagged = _simple_proper_letters(a, ya, b, yb, n, small)
    letters = tuple((c.elem, e) for c, e in tagged)
    certs = tuple(c.cert() for c, _ in tagged)
    word = NormalWord(n, letters)
    if word.evaluate() != target:
        raise VerificationError("internal error: simple witness failed to evaluate")
    for (conj, _), cert in zip(letters, certs):
        if cert.evaluate(n.arity) != conj:
            raise VerificationError("internal error: conjugator certificate mismatch")
    return word, certs


# ---------------------------------------------------------------------------
# transitivity and factorization claims


def claim1_transporter(ia: ClopenSet, ib: ClopenSet, ic: ClopenSet
                       ) -> tuple[PrefixMap, CommutatorWord]:
    """A single commutator e = [c, d] with e(ia) = ib and e fixing ic
    pointwise; c swaps ia and ib (so it fixes ic pointwise too) and d is a
    certified transporter moving ia ∪ ib into the free region."""
    if ia.is_empty() or ib.is_empty() or ic.is_empty():
        raise PreconditionError("regions must be non-empty")
    free = ia.union(ib).union(ic).complement()
    if free.is_empty():
        raise PreconditionError("the three regions must not cover the space")
    if ia == ib:
        # the image condition already holds; no movement is needed
        if not ia.disjoint(ic):
            raise PreconditionError("regions must be pairwise disjoint")
        return identity(ia.arity), CommutatorWord(())
    for x, y in ((ia, ib), (ia, ic), (ib, ic)):
        if not x.disjoint(y):
            raise PreconditionError("regions must be pairwise disjoint")
    phi = onto_transporter(ia, ib)
    c = patch([(ia, phi), (ib, phi.inverse())])
    u = transporter(ia.union(ib), free)
    d, _ = derived_conjugator(u, ia.union(ib))
    word = CommutatorWord(((c, d),))
    return word.evaluate(ia.arity), word


def _certified_patch(region: ClopenSet, action: PrefixMap, spare: ClopenSet,
                     free: ClopenSet) -> tuple[PrefixMap, CommutatorWord]:
    """A single commutator agreeing with `action` pointwise on `region`
    and fixing pointwise everything outside region ∪ action(region) ∪
    spare ∪ free.

    c is a patch pinned to the identity off region ∪ action(region) ∪
    spare; dm moves that support bound into `free`, so [c, dm] = c·junk
    with the junk supported in `free`.
    """
    k = action.arity
    img = action.image(region)
    zone = region.union(img).union(spare)
    c = patch([(region, action), (zone.complement(), identity(k))])
    u = transporter(zone, free)
    dm, _ = derived_conjugator(u, zone)
    word = CommutatorWord(((c, dm),))
    return word.evaluate(k), word


@dataclass(frozen=True)
class Claim2Result:
    s1: PrefixMap
    s2: PrefixMap
    s3: PrefixMap
    indices: tuple[int, int, int]      # positions in cover.members fixed pointwise
    certs: tuple[CommutatorWord, CommutatorWord, CommutatorWord] | None = None


def claim2_factorization(g: PrefixMap, cover, g_cert: CommutatorWord | None = None
                         ) -> Claim2Result:
    """Factor g = s1·s2·s3 with each factor fixing a cover member pointwise.

    Pick the first private U_beta such that some part of its complement
    with the other two privates also avoids them after applying g; a
    transporter phi parks U_beta there, s3 undoes phi, s1 performs g∘phi,
    and s2 = s1^-1·g·s3^-1 is then the identity on U_beta.  s1 and s3 are
    single commutators (certified patches), so they always carry
    certificates; s2 inherits one exactly when g does.
    """
    members = cover.members
    if g_cert is not None and g_cert.evaluate(g.arity) != g:
        raise PreconditionError("certificate does not evaluate to g")
    ident = identity(g.arity)
    empty = CommutatorWord(())
    for i, member in enumerate(members):
        if g.in_rist(member.complement()):
            certs = (g_cert, empty, empty) if g_cert is not None else None
            return Claim2Result(g, ident, ident, (i, i, i), certs)
    privates = cover.privates
    ginv = g.inverse()
    chosen = None
    for beta in range(3):
        alpha, gamma = [i for i in range(3) if i != beta]
        outside = privates[alpha].union(privates[gamma]).complement()
        vstar = outside.intersect(ginv.image(outside))
        if not vstar.is_empty():
            chosen = (alpha, beta, gamma, vstar)
            break
    if chosen is None:
        raise PreconditionError("no room to park a private set")  # unreachable
    alpha, beta, gamma, vstar = chosen
    u_a, u_b, u_c = privates[alpha], privates[beta], privates[gamma]
    phi = transporter(u_b, vstar)
    parked = phi.image(u_b)
    psi = g * phi
    psi_img = psi.image(u_b)
    spare1, free1 = two_disjoint_cylinders(u_b.union(psi_img).union(u_a).complement())
    s1, s1_cert = _certified_patch(u_b, psi, spare1, free1)
    spare3, free3 = two_disjoint_cylinders(parked.union(u_b).union(u_c).complement())
    s3, s3_cert = _certified_patch(parked, phi.inverse(), spare3, free3)
    s2 = s1.inverse() * g * s3.inverse()
    certs = None
    if g_cert is not None:
        s2_cert = CommutatorWord(s1_cert.inverse().factors + g_cert.factors
                                 + s3_cert.inverse().factors)
        certs = (s1_cert, s2_cert, s3_cert)
    return Claim2Result(s1, s2, s3, (3 + alpha, 3 + beta, 3 + gamma), certs)


@dataclass(frozen=True)
class Claim3Result:
    c: PrefixMap
    ia: ClopenSet
    ib: ClopenSet
    ic: ClopenSet
    f_table: tuple[PrefixMap, ...]


def claim3_witness(g: PrefixMap, h: PrefixMap, cover) -> Claim3Result:
    """Disjoint targets ia, ib, ic (union proper) and an element c with
    c·g fixing ia, c·h fixing ib and c fixing ic pointwise, plus a
    transporter table pushing each cover member's complement off the
    targets.

    The targets are found by a deterministic search over cylinders of
    increasing depth; c is a three-constraint patch (g^-1 on g(ia), h^-1
    on h(ib), identity on ic).
    """
    if g.arity != h.arity:
        raise PreconditionError("mixed arities")
    k = g.arity
    ia, ib, ic = _claim3_targets(g, h, k)
    c = patch([(g.image(ia), g.inverse()), (h.image(ib), h.inverse()),
               (ic, identity(k))])
    blocked = ia.union(ib).union(ic)
    room = blocked.complement()
    table = tuple(transporter(member.complement(), room) for member in cover.members)
    return Claim3Result(c, ia, ib, ic, table)


def _claim3_targets(g: PrefixMap, h: PrefixMap, k: int):
    """Three disjoint cylinders whose g/h-images avoid each other as the
    patch in claim3 requires; exists at some finite depth because finitely
    many point constraints can always be separated."""
    from itertools import product

    from .clopen import letters as _letters

    alpha = _letters(k)
    for depth in range(2, 13):
        words = ["".join(p) for p in product(alpha, repeat=depth)]
        for wc in words:
            ic = cylinder(wc, k)
            for wb in words:
                ib = cylinder(wb, k)
                if not ib.disjoint(ic) or not h.image(ib).disjoint(ic):
                    continue
                hib = h.image(ib)
                for wa in words:
                    ia = cylinder(wa, k)
                    if not ia.disjoint(ib) or not ia.disjoint(ic):
                        continue
                    gia = g.image(ia)
                    if not gia.disjoint(hib) or not gia.disjoint(ic):
                        continue
                    # the patch needs leftover room on both sides
                    if not ia.union(ib).union(ic).is_full() \
                            and not gia.union(hib).union(ic).is_full():
                        return ia, ib, ic
    raise PreconditionError("could not separate claim3 targets")  # unreachable in practice


def commuting_chain(ya: ClopenSet, yb: ClopenSet) -> tuple[PrefixMap, PrefixMap]:
    """Elements g, h with g(ya), ya disjoint; h(ya), g(ya) disjoint; and
    h(ya), yb disjoint — so conjugates of anything supported in ya by
    1, g, h commute along the chain down to anything supported in yb."""
    if not (ya.is_proper() and yb.is_proper()):
        raise PreconditionError("both regions must be proper and non-empty")
    k = ya.arity
    t = ya.complement().code[0]
    while yb.complement().subset(cylinder(t, k)):
        t += "0"
    first_stop = cylinder(t, k)
    g = transporter(ya, first_stop)
    second_stop = first_stop.union(yb).complement()
    h = transporter(ya, second_stop)
    return g, h


# ---------------------------------------------------------------------------
# JSON serialization of certificates


def normal_word_to_obj(word: NormalWord, target: PrefixMap | None = None) -> dict:
    obj = {
        "kind": "normal_word",
        "arity": word.base.arity,
        "base": str(word.base),
        "letters": [{"conj": str(c), "exp": e} for c, e in word.letters],
    }
    if target is not None:
        obj["target"] = str(target)
    return obj


def commutator_word_to_obj(word: CommutatorWord, target: PrefixMap | None = None,
                           arity: int = 2) -> dict:
    if word.factors:
        arity = word.factors[0][0].arity
    obj = {
        "kind": "commutator_word",
        "arity": arity,
        "factors": [{"x": str(x), "y": str(y)} for x, y in word.factors],
    }
    if target is not None:
        obj["target"] = str(target)
    return obj


def certificate_from_obj(obj: dict, arity: int = 2):
    """Parse a certificate object; returns (word, target-or-None).

    Any structural defect (missing or mistyped fields, bad literals, an
    identity base) is reported as a ParseError.
    """
    from .literals import parse_element

    from .errors import ParseError

    if not isinstance(obj, dict) or "kind" not in obj:
        raise ParseError("certificate object must carry a 'kind'")
    try:
        k = int(obj.get("arity", arity))
        target = parse_element(obj["target"], k) if "target" in obj else None
        if obj["kind"] == "normal_word":
            base = parse_element(obj["base"], k)
            letters = tuple((parse_element(l["conj"], k), int(l["exp"]))
                            for l in obj["letters"])
            return NormalWord(base, letters), target
        if obj["kind"] == "commutator_word":
            factors = tuple((parse_element(f["x"], k), parse_element(f["y"], k))
                            for f in obj["factors"])
            return CommutatorWord(factors), target
    except ParseError:
        raise
    except (KeyError, TypeError, ValueError, AttributeError, PreconditionError) as exc:
        raise ParseError(f"malformed certificate: {exc}") from exc
    raise ParseError(f"unknown certificate kind {obj['kind']!r}")


def verify_certificate(obj: dict, arity: int = 2) -> PrefixMap:
    """Re-evaluate a certificate object against its embedded target.

    Raises VerificationError on mismatch; returns the evaluated element.
    Composite simple-witness objects are verified part by part.
    """
    from .errors import ParseError

    if isinstance(obj, dict) and obj.get("kind") == "simple_witness":
        if not isinstance(obj.get("witness"), dict):
            raise ParseError("simple_witness certificate needs a 'witness' object")
        word, target = certificate_from_obj(obj["witness"], arity)
        value = word.evaluate()
        if target is None or value != target:
            raise VerificationError("witness does not evaluate to its target")
        conj_objs = obj.get("conjugators", [])
        if len(conj_objs) != len(word.letters):
            raise VerificationError("conjugator certificate count mismatch")
        for cobj, (conj, _) in zip(conj_objs, word.letters):
            cert, _tgt = certificate_from_obj(cobj, arity)
            if cert.evaluate(word.base.arity) != conj:
                raise VerificationError("a conjugator certificate does not match its letter")
        return value
    word, target = certificate_from_obj(obj, arity)
    if target is None:
        raise ParseError("certificate carries no target to verify against")
    k = int(obj.get("arity", arity))
    value = word.evaluate() if isinstance(word, NormalWord) else word.evaluate(k)
    if value != target:
        raise VerificationError("certificate does not evaluate to its target")
    return value


def dumps_certificate(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)
