import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cantorwit.clopen import canonicalize, cylinder, empty_set, whole_space
from cantorwit.errors import ArityMismatchError, PreconditionError

from helpers import all_words, member

words2 = st.lists(st.text(alphabet="01", max_size=5), max_size=8)


def codes(*ws):
    return canonicalize(ws)


class TestCanonicalize:
    def test_full_sibling_merge(self):
        assert canonicalize({"00", "01"}).code == ("0",)

    def test_prefix_absorption(self):
        assert canonicalize({"0", "01"}).code == ("0",)

    def test_total_merge(self):
        assert canonicalize({"00", "01", "10", "11"}).code == ("",)

    def test_cascading_merge(self):
        assert canonicalize({"000", "001", "01", "1"}).code == ("",)

    def test_empty(self):
        assert canonicalize(set()).code == ()

    def test_arity_mismatch(self):
        with pytest.raises(ArityMismatchError):
            canonicalize({"02"}, arity=2)

    def test_arity3_partial_family_not_merged(self):
        assert canonicalize({"00", "01"}, arity=3).code == ("00", "01")
        assert canonicalize({"00", "01", "02"}, arity=3).code == ("0",)

    @given(words2)
    @settings(max_examples=150)
    def test_idempotent(self, ws):
        c = canonicalize(ws)
        assert canonicalize(c.code) == c

    @given(words2)
    @settings(max_examples=150)
    def test_same_denotation(self, ws):
        c = canonicalize(ws)
        depth = max([len(w) for w in ws] + [len(w) for w in c.code] + [1])
        for w in all_words(2, depth):
            assert member(ws, w) == member(c.code, w)


class TestBooleanOps:
    def test_complement_cylinder(self):
        assert cylinder("0").complement().code == ("1",)

    def test_intersect(self):
        assert codes("0").intersect(codes("01", "1")).code == ("01",)

    def test_union_derived(self):
        # oracle: membership of every depth-3 word against both sides
        a, b = codes("00"), codes("01", "10")
        u = a.union(b)
        for w in all_words(2, 3):
            assert member(u.code, w) == (member(a.code, w) or member(b.code, w))
        assert u.code == ("0", "10")

    def test_complement_involution(self):
        a = codes("00", "101")
        assert a.complement().complement() == a

    def test_subset_order(self):
        a, b = codes("00"), codes("0")
        assert a.subset(b) and not b.subset(a)
        assert a.subset(a)

    def test_empty_full(self):
        assert empty_set().is_empty() and not empty_set().is_full()
        assert whole_space().is_full()
        assert whole_space().complement().is_empty()

    def test_arity_mismatch(self):
        with pytest.raises(ArityMismatchError):
            codes("0").union(canonicalize({"0"}, arity=3))

    @given(words2, words2)
    @settings(max_examples=150)
    def test_de_morgan(self, ws1, ws2):
        a, b = canonicalize(ws1), canonicalize(ws2)
        assert a.union(b).complement() == a.complement().intersect(b.complement())

    @given(words2, words2)
    @settings(max_examples=150)
    def test_ops_match_membership_oracle(self, ws1, ws2):
        a, b = canonicalize(ws1), canonicalize(ws2)
        depth = max([len(w) for w in a.code + b.code] + [1])
        u, i = a.union(b), a.intersect(b)
        for w in all_words(2, depth):
            ina, inb = member(a.code, w), member(b.code, w)
            assert member(u.code, w) == (ina or inb)
            assert member(i.code, w) == (ina and inb)

    @given(words2, words2)
    @settings(max_examples=100)
    def test_subset_iff_pointwise(self, ws1, ws2):
        a, b = canonicalize(ws1), canonicalize(ws2)
        depth = max([len(w) for w in a.code + b.code] + [1])
        pointwise = all(member(b.code, w) for w in all_words(2, depth)
                        if member(a.code, w))
        assert a.subset(b) == pointwise


class TestSplitToSize:
    def test_identity_split(self):
        assert codes("0").split_to_size(1) == ("0",)

    def test_three_way(self):
        assert codes("0").split_to_size(3) == ("00", "010", "011")

    def test_infeasible_arity3(self):
        with pytest.raises(PreconditionError):
            canonicalize({"0"}, arity=3).split_to_size(2)

    def test_too_small(self):
        with pytest.raises(PreconditionError):
            codes("0", "10").split_to_size(1)

    @given(words2, st.integers(min_value=0, max_value=6))
    @settings(max_examples=100)
    def test_splits_canonicalize_back(self, ws, extra):
        c = canonicalize(ws)
        if c.is_empty():
            return
        refined = c.split_to_size(len(c.code) + extra)
        assert canonicalize(refined) == c
        assert len(refined) == len(c.code) + extra
