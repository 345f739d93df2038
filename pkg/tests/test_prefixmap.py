import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cantorwit.clopen import cylinder, whole_space
from cantorwit.corpus import random_clopen, random_element
from cantorwit.errors import ArityMismatchError, PreconditionError
from cantorwit.literals import parse_clopen, parse_element
from cantorwit.prefixmap import PrefixMap, identity, patch, sigma_swap

from helpers import all_words, apply_pairs, maps_equal, member

E = parse_element
C = parse_clopen


def seeded_elements(seed, count, **kw):
    rng = random.Random(seed)
    return [random_element(rng, **kw) for _ in range(count)]


class TestReduce:
    def test_identity_reduction(self):
        assert E("{00->00,01->01,1->1}") == identity()

    def test_sibling_merge(self):
        assert E("{00->10,01->11,1->0}") == E("{0->1,1->0}")

    def test_six_pair_refinement(self):
        # a refinement of {0->00,10->01,11->1}, pair by pair
        refined = E("{00->000,01->001,100->010,101->011,110->10,111->11}")
        assert refined == E("{0->00,10->01,11->1}")

    def test_incomplete_domain(self):
        with pytest.raises(PreconditionError):
            PrefixMap.from_pairs([("0", "00"), ("10", "01")])

    def test_overlapping_domain(self):
        with pytest.raises(PreconditionError):
            PrefixMap.from_pairs([("0", "0"), ("01", "10"), ("1", "11")])

    def test_incomplete_range(self):
        with pytest.raises(PreconditionError):
            PrefixMap.from_pairs([("0", "00"), ("1", "01")])

    def test_reduction_soundness_on_random_refinements(self):
        rng = random.Random(11)
        for _ in range(100):
            g = random_element(rng)
            refined = []
            for d, r in g.pairs:
                if rng.random() < 0.5:
                    refined.extend((d + c, r + c) for c in "01")
                else:
                    refined.append((d, r))
            assert PrefixMap.from_pairs(refined, 2) == g


class TestComposeInvert:
    def test_identity_neutral(self):
        g = E("{0->00,10->01,11->1}")
        assert identity() * g == g and g * identity() == g

    def test_involution(self):
        g = E("{0->1,1->0}")
        assert (g * g).is_identity()

    def test_contracting_square(self):
        g = E("{0->00,10->01,11->1}")
        expected = E("{0->000,10->001,110->01,111->1}")
        assert g * g == expected
        # oracle: pointwise evaluation at depth 5
        for w in all_words(2, 5):
            assert apply_pairs((g * g).pairs, w) == apply_pairs(g.pairs, apply_pairs(g.pairs, w))

    def test_inverse_cancels(self):
        g = E("{0->00,10->01,11->1}")
        assert (g * g.inverse()).is_identity()
        assert (g.inverse() * g).is_identity()

    def test_arity_mismatch(self):
        with pytest.raises(ArityMismatchError):
            E("{0->1,1->0}") * parse_element("{0->1,1->2,2->0}", 3)

    def test_group_laws_random(self):
        els = seeded_elements(5, 60)
        for f, g, h in zip(els, els[1:], els[2:]):
            assert (f * g) * h == f * (g * h)
        for g in els:
            assert maps_equal(g * g.inverse(), identity())

    def test_compose_matches_oracle_random(self):
        rng = random.Random(6)
        for _ in range(50):
            g, h = random_element(rng), random_element(rng)
            gh = g * h
            depth = max(len(d) for d, _ in list(g.pairs) + list(h.pairs) + list(gh.pairs)) + 1
            for w in all_words(2, depth):
                assert apply_pairs(gh.pairs, w) == apply_pairs(g.pairs, apply_pairs(h.pairs, w))

    @given(st.integers(min_value=0, max_value=10_000))
    @settings(max_examples=60, deadline=None)
    def test_power_consistency(self, seed):
        g = random_element(random.Random(seed))
        assert g ** 3 == g * g * g
        assert g ** -2 == (g * g).inverse()


class TestImage:
    def test_identity_image(self):
        assert identity().image(C("[01]")) == C("[01]")

    def test_contracting_image(self):
        assert E("{0->00,10->01,11->1}").image(C("[01]")) == C("[001]")

    def test_swap_image(self):
        assert E("{0->1,1->0}").image(C("[00,11]")) == C("[10,01]")

    def test_whole_space_preserved(self):
        g = E("{0->00,10->01,11->1}")
        assert g.image(whole_space()).is_full()

    def test_roundtrip(self):
        g = E("{0->00,10->01,11->1}")
        c = C("[001,1]")
        assert g.inverse().image(g.image(c)) == c

    def test_image_matches_pointwise_oracle(self):
        rng = random.Random(7)
        for _ in range(50):
            g = random_element(rng)
            c = random_clopen(rng, proper=False)
            img = g.image(c)
            # deep enough that every image word is longer than every code word
            depth = (max(len(d) for d, _ in g.pairs)
                     + max([len(w) for w in c.code + img.code] + [1]) + 1)
            for w in all_words(2, depth):
                assert member(img.code, apply_pairs(g.pairs, w)) == member(c.code, w)

    def test_boolean_isomorphism(self):
        rng = random.Random(8)
        for _ in range(60):
            g = random_element(rng)
            a, b = random_clopen(rng, proper=False), random_clopen(rng, proper=False)
            assert g.image(a.union(b)) == g.image(a).union(g.image(b))
            assert g.image(a.complement()) == g.image(a).complement()


class TestFixesAndRist:
    def test_identity_fixes_everything(self):
        assert identity().fixes_pointwise(C("[0,10]"))

    def test_disjoint_swap_case(self):
        g = E("{00->10,10->00,01->01,11->11}")
        assert g.fixes_pointwise(C("[01,11]"))
        assert g.in_rist(C("[00,10]"))

    def test_swap_moves_everything(self):
        assert not E("{0->1,1->0}").fixes_pointwise(C("[0]"))

    def test_contracting_pair_detected(self):
        # 0 -> 00 fixes only the single point 000...; the cylinder still moves
        g = E("{0->00,10->01,11->1}")
        assert not g.fixes_pointwise(C("[0]"))
        assert not g.fixes_pointwise(C("[000]"))

    def test_support_upper(self):
        g = E("{00->10,10->00,01->01,11->11}")
        assert g.support_upper() == C("[00,10]")


class TestMovedCylinder:
    def test_incomparable(self):
        assert E("{0->1,1->0}").moved_cylinder() == C("[0]")

    def test_identity_error(self):
        with pytest.raises(PreconditionError):
            identity().moved_cylinder()

    def test_contracting_branch(self):
        # first moved pair (0, 00) is comparable: excess "0", letter "1"
        g = E("{0->00,10->01,11->1}")
        z = g.moved_cylinder()
        assert z == C("[01]")
        assert z.disjoint(g.image(z))

    def test_expanding_branch(self):
        # first moved pair in canonical order is (1, 11): excess "1", letter "0"
        g = E("{00->0,01->10,1->11}")
        z = g.moved_cylinder()
        assert z == C("[10]")
        assert z.disjoint(g.image(z))

    def test_random_corpus_disjointness(self):
        rng = random.Random(9)
        for _ in range(200):
            g = random_element(rng, nontrivial=True)
            z = g.moved_cylinder()
            assert len(z.code) == 1
            assert z.disjoint(g.image(z))


class TestSigmaSwap:
    def test_full_swap_is_g(self):
        g = E("{0->1,1->0}")
        assert sigma_swap(g, C("[0]")) == g

    def test_partial_swap(self):
        g = E("{0->1,1->0}")
        assert sigma_swap(g, C("[00]")) == E("{00->10,10->00,01->01,11->11}")

    def test_overlap_rejected(self):
        g = E("{0->00,10->01,11->1}")
        with pytest.raises(PreconditionError):
            sigma_swap(g, C("[0]"))

    def test_involution_and_rist(self):
        rng = random.Random(10)
        for _ in range(100):
            g = random_element(rng, nontrivial=True)
            y = cylinder(g.moved_cylinder().code[0] + "0")
            s = sigma_swap(g, y)
            assert (s * s).is_identity()
            assert s.in_rist(y.union(g.image(y)))
            # s agrees with g on y: pointwise via the composite fixing y
            assert (g.inverse() * s).fixes_pointwise(y)


class TestPatch:
    def test_single_identity_constraint(self):
        b = patch([(C("[0]"), identity())])
        assert (identity().inverse() * b).fixes_pointwise(C("[0]"))

    def test_two_constraints(self):
        b = patch([(C("[00]"), E("{0->1,1->0}")), (C("[01]"), identity())])
        assert b.image(C("[00]")) == C("[10]")
        assert b.fixes_pointwise(C("[01]"))
        assert b == E("{00->10,01->01,10->00,11->11}")

    def test_full_cover_identity(self):
        assert patch([(C("[0]"), identity()), (C("[1]"), identity())]).is_identity()

    def test_overlapping_regions_rejected(self):
        with pytest.raises(PreconditionError):
            patch([(C("[0]"), identity()), (C("[01]"), identity())])

    def test_overlapping_images_rejected(self):
        with pytest.raises(PreconditionError):
            patch([(C("[00]"), E("{00->01,01->00,1->1}")), (C("[01]"), identity())])

    def test_one_sided_leftover_rejected(self):
        # region covers everything, image does not
        with pytest.raises(PreconditionError):
            patch([(C("[0]"), E("{0->00,10->01,11->1}")), (C("[1]"), E("{1->01,00->1,01->00}"))])

    def test_agreement_postcondition_random(self):
        rng = random.Random(12)
        for _ in range(60):
            g = random_element(rng)
            region = random_clopen(rng)
            b = patch([(region, g)])
            assert (g.inverse() * b).fixes_pointwise(region)


class TestLiteralRoundTrip:
    def test_element_roundtrip(self):
        for text in ("{0->1,1->0}", "{e->e}", "{0->00,10->01,11->1}"):
            assert str(E(text)) == text

    def test_clopen_roundtrip(self):
        for text in ("[]", "[e]", "[0,10]"):
            assert str(C(text)) == text

    def test_parse_canonicalizes(self):
        assert str(C("[00,01]")) == "[0]"
        assert str(E("{00->00,01->01,1->1}")) == "{e->e}"
