"""
Unit tests for linked pairs and the LP1/LP2 enumerations.
"""

import math
import os
import sys

import pytest

# Add parent directory to path for imports
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from axioms import exhaustive_words
from bialgebra import gamma
from brute_force import naive_is_linked, naive_lp1, naive_lp2
from linked_pairs import (
    LinkedPair,
    enumerate_lp1,
    enumerate_lp2,
    exponent_caps,
    format_sign,
    is_linked,
    nonzero,
    pair_shape,
    power_for,
)
from orientation import PairType, parse_surface_symbol
from words import CyclicWord, Occurrence, format_word, parse_word, smallest_period

SURFACES = ['a1a2A1A2', 'a2a1A2A1', 'a1a2a3A1A2A3']


@pytest.fixture(scope='module')
def torus():
    return parse_surface_symbol('a1a2A1A2')


@pytest.fixture(scope='module')
def genus_three():
    return parse_surface_symbol('a1a2a3A1A2A3')


@pytest.fixture(scope='module', params=SURFACES)
def surface(request):
    return parse_surface_symbol(request.param)


@pytest.fixture(scope='module')
def short_words(surface):
    return exhaustive_words(surface.alphabet, 3 if surface.n == 2 else 2)


def cyc(text, surface):
    return CyclicWord.parse(text, surface.alphabet)


def as_tuples(pairs):
    return {
        (pair.p_occ.start, pair.p_occ.length, pair.q_occ.start, pair.q_occ.length, pair.kind, pair.sign)
        for pair in pairs
    }


def by_words(pairs):
    return {(pair.p_word, pair.q_word, pair.kind, pair.sign) for pair in pairs}


def share_root(v, w):
    root_v = smallest_period(v)[0]
    root_w = smallest_period(w)[0]
    return root_v == root_w or root_v == root_w.bar()


class TestIsLinked:
    """Pair shapes and the linkage conditions."""

    def test_type_one(self, torus):
        a = torus.alphabet
        assert is_linked(parse_word('a1a1', a), parse_word('a2a2', a), torus) == (PairType.TYPE1, 1)
        assert is_linked(parse_word('a2a2', a), parse_word('a1a1', a), torus) == (PairType.TYPE1, -1)

    def test_type_one_needs_nonzero_orientation(self, torus):
        a = torus.alphabet
        assert is_linked(parse_word('a1a1', a), parse_word('a1a2', a), torus) is None
        assert is_linked(parse_word('a1a2', a), parse_word('a2a1', a), torus) is None

    def test_type_two_with_opposite_orientations_is_not_linked(self, torus):
        a = torus.alphabet
        assert is_linked(parse_word('a1a2a2', a), parse_word('a2a2a1', a), torus) is None
        assert is_linked(parse_word('a1a1a2', a), parse_word('a2a1a1', a), torus) is None

    def test_type_two_on_three_generators(self, genus_three):
        a = genus_three.alphabet
        p = parse_word('A2a1a2', a)
        q = parse_word('A3a1a3', a)
        assert is_linked(p, q, genus_three) == (PairType.TYPE2, 1)
        assert is_linked(q, p, genus_three) == (PairType.TYPE2, -1)

    def test_condition_words_need_not_be_reduced(self, torus):
        # A1A2a2 and a1a2A2 are not cyclically reduced
        a = torus.alphabet
        assert is_linked(parse_word('a1a2a1', a), parse_word('a2a2a2', a), torus) == (PairType.TYPE2, 1)

    def test_shapes(self, torus):
        a = torus.alphabet
        assert pair_shape(parse_word('a1a2a1', a), parse_word('A1a2A2', a)) == PairType.TYPE2
        assert pair_shape(parse_word('a1a2a1', a), parse_word('a1A2A2', a)) == PairType.TYPE3
        assert pair_shape(parse_word('a1a2a1', a), parse_word('a1a2A2', a)) is None
        assert pair_shape(parse_word('a1', a), parse_word('a2', a)) is None
        assert pair_shape(parse_word('a1a2', a), parse_word('a2a1a1', a)) is None

    def test_type_three_excludes_backtracking_ends(self, torus):
        a = torus.alphabet
        # p1 = bar(q2)
        assert pair_shape(parse_word('a1a2a1', a), parse_word('a2A2A1', a)) is None

    def test_unreduced_words_are_not_linked(self, torus):
        a = torus.alphabet
        assert is_linked(parse_word('a1A1a2', a), parse_word('a2A1a1', a), torus) is None

    def test_matches_direct_transcription(self, surface):
        windows = [
            tuple(letters)
            for w in exhaustive_words(surface.alphabet, 4 if surface.n == 2 else 3)
            for letters in [w.canonical[:2], w.canonical[:3], w.canonical]
            if len(letters) >= 2
        ]
        for p in windows:
            for q in windows:
                assert is_linked(p, q, surface) == naive_is_linked(p, q, surface)

    def test_format_sign(self):
        assert [format_sign(value) for value in (1, 0, -1)] == ['+1', '0', '-1']


class TestLP1:
    """Linked pairs of subwords of one cyclic word."""

    def test_square_of_generators(self, torus):
        pairs = enumerate_lp1(cyc('a1a1a2a2', torus), torus)
        lines = [pair.format_line() for pair in pairs]
        assert lines == [
            'type=1 sign=+1 P=0+2 Q=2+2 Pword=a1a1 Qword=a2a2',
            'type=1 sign=-1 P=2+2 Q=0+2 Pword=a2a2 Qword=a1a1',
        ]
        assert nonzero(pairs) == pairs

    def test_sorted_by_occurrences(self, torus):
        pairs = enumerate_lp1(cyc('a1a2A1A2a1A2', torus), torus)
        keys = [(pair.p_occ, pair.q_occ) for pair in pairs]
        assert keys == sorted(keys)
        assert all(pair.p_occ != pair.q_occ for pair in pairs)
        assert all(pair.exponents == (1, 1) for pair in pairs)

    def test_short_words_have_no_pairs(self, torus):
        assert enumerate_lp1(cyc('a1', torus), torus) == []

    def test_matches_brute_force(self, surface):
        for w in exhaustive_words(surface.alphabet, 4):
            assert as_tuples(enumerate_lp1(w, surface)) == naive_lp1(w, surface), str(w)

    def test_matches_brute_force_on_long_word(self, genus_three):
        w = cyc('a1a2a3A1A2A3', genus_three)
        assert as_tuples(enumerate_lp1(w, genus_three)) == naive_lp1(w, genus_three)

    def test_closed_under_reversal(self, surface):
        for w in exhaustive_words(surface.alphabet, 4):
            pairs = enumerate_lp1(w, surface)
            assert as_tuples(pairs) == as_tuples(pair.reversed() for pair in pairs)

    def test_every_pair_is_signed(self, surface):
        for w in exhaustive_words(surface.alphabet, 4):
            assert all(pair.sign in (1, -1) for pair in enumerate_lp1(w, surface))

    def test_pair_count_bound(self, surface):
        words = exhaustive_words(surface.alphabet, 4)
        if surface.n == 3:
            words.append(cyc('a1a2a3A1A2A3', surface))
        for w in words:
            assert len(enumerate_lp1(w, surface)) <= len(w) * (len(w) - 1), str(w)

    def test_extended_windows_only_add_pairs(self, surface):
        for w in exhaustive_words(surface.alphabet, 3):
            plain = as_tuples(enumerate_lp1(w, surface))
            extended = enumerate_lp1(w, surface, extended_windows=True)
            assert plain <= as_tuples(extended)
            assert all(pair.p_occ.length <= 2 * len(w) for pair in extended)


class TestLP2:
    """Linked pairs between powers of two cyclic words."""

    def test_generators(self, torus):
        pairs = enumerate_lp2(cyc('a1', torus), cyc('a2', torus), torus)
        assert len(pairs) == 1
        pair = pairs[0]
        assert pair.kind == PairType.TYPE1
        assert pair.sign == 1
        assert pair.exponents == (2, 2)
        assert format_word(pair.p_word) == 'a1a1'

    def test_worked_example(self, torus):
        v = cyc('a1a1a2', torus)
        w = cyc('a1a1a2a1a1a2a1', torus)
        assert v.text == 'a1a1a2'
        assert w.text == 'a1a1a1a2a1a1a2'
        assert exponent_caps(v, w) == (4, 2)
        pairs = enumerate_lp2(v, w, torus)
        found = [
            pair for pair in pairs
            if pair.p_occ == Occurrence(2, 10) and pair.q_occ == Occurrence(0, 10)
        ]
        assert len(found) == 1
        pair = found[0]
        assert pair.kind == PairType.TYPE2
        assert pair.sign == -1
        assert pair.exponents == (4, 2)
        assert format_word(pair.p_word) == 'a2a1a1a2a1a1a2a1a1a2'
        assert format_word(pair.q_word) == 'a1a1a1a2a1a1a2a1a1a1'
        assert 'j=4 k=2' in pair.format_record()

    def test_power_for(self):
        assert power_for(10, 3) == 4
        assert power_for(9, 3) == 3
        assert power_for(2, 7) == 1

    def test_matches_brute_force(self, surface):
        words = exhaustive_words(surface.alphabet, 2)
        for v in words:
            for w in words:
                assert as_tuples(enumerate_lp2(v, w, surface)) == naive_lp2(
                    v, w, surface, 2 * (len(v) + len(w)) + 2
                ), f"({v}, {w})"

    def test_caps_lose_nothing(self, surface, short_words):
        for v in short_words:
            for w in short_words:
                assert enumerate_lp2(v, w, surface, cap_slack=2) == enumerate_lp2(v, w, surface)

    def test_caps_agree_with_unbounded_search_on_long_word(self, genus_three):
        long_word = cyc('a1a2a3A1A2A3', genus_three)
        for other in exhaustive_words(genus_three.alphabet, 2):
            for v, w in ((long_word, other), (other, long_word)):
                assert as_tuples(enumerate_lp2(v, w, genus_three)) == naive_lp2(
                    v, w, genus_three, 2 * (len(v) + len(w)) + 2
                ), f"({v}, {w})"

    def test_pair_count_bound(self, surface, short_words):
        for v in short_words:
            for w in short_words:
                assert len(enumerate_lp2(v, w, surface)) <= len(v) * len(w), f"({v}, {w})"

    def test_longer_word_needs_at_most_square(self, surface, short_words):
        for v in short_words:
            for w in short_words:
                if len(w) < len(v):
                    continue
                for pair in enumerate_lp2(v, w, surface):
                    assert pair.exponents[1] <= 2

    def test_reversal_symmetry(self, surface, short_words):
        for v in short_words:
            for w in short_words:
                forward = enumerate_lp2(v, w, surface)
                backward = enumerate_lp2(w, v, surface)
                assert sorted(pair.reversed() for pair in forward) == backward

    def test_every_pair_is_signed(self, surface, short_words):
        for v in short_words:
            for w in short_words:
                assert all(pair.sign in (1, -1) for pair in enumerate_lp2(v, w, surface))

    def test_shared_stretch_is_shorter_than_both_words_together(self, surface, short_words):
        for v in short_words:
            for w in short_words:
                if share_root(v, w):
                    continue
                for pair in enumerate_lp2(v, w, surface):
                    assert pair.p_occ.length - 2 < len(v) + len(w)

    def test_overlap_bound(self, surface, short_words):
        for v in short_words:
            for w in short_words:
                limit = len(v) + len(w) - math.gcd(len(v), len(w)) + 1
                for pair in enumerate_lp2(v, w, surface):
                    assert pair.p_occ.length <= limit, f"({v}, {w}) {pair.format_line()}"

    def test_sorted(self, torus):
        pairs = enumerate_lp2(cyc('a1a2A1A2', torus), cyc('a2a1A2a1', torus), torus)
        keys = [(pair.p_occ, pair.q_occ) for pair in pairs]
        assert keys == sorted(keys)


def extend_through(v, w, pair, surface):
    """
    Check that a type-2 pair of LP2(V, W) extends to the joined word.

    With gamma = V1 W1 (V read from p2, W read from q2), the pairs
    (p1 X W1 p2, q1 X W1 q2) and (p1 X V1 p2, q1 X V1 q2) must be linked in
    LP2(gamma, W) and LP2(V, gamma) with the sign of the original pair.
    """
    joined = gamma(v, w, pair, surface)
    p, q = pair.p_word, pair.q_word
    middle = p[1:-1]
    v1 = v.rotation(pair.p_occ.last(len(v)))
    w1 = w.rotation(pair.q_occ.last(len(w)))
    through_w = (
        (p[0],) + middle + w1 + (p[-1],),
        (q[0],) + middle + w1 + (q[-1],),
        PairType.TYPE2,
        pair.sign,
    )
    through_v = (
        (p[0],) + middle + v1 + (p[-1],),
        (q[0],) + middle + v1 + (q[-1],),
        PairType.TYPE2,
        pair.sign,
    )
    assert through_w in by_words(enumerate_lp2(joined, w, surface)), pair.format_line()
    assert through_v in by_words(enumerate_lp2(v, joined, surface)), pair.format_line()


class TestExtension:
    """A short type-2 pair grows through the word it was joined with."""

    def test_extension_holds(self, surface):
        words = exhaustive_words(surface.alphabet, 2) + [cyc('a1a1a1', surface), cyc('a1a2a2', surface)]
        extended = 0
        for v in words:
            for w in words:
                if share_root(v, w):
                    continue
                for pair in enumerate_lp2(v, w, surface):
                    if pair.kind != PairType.TYPE2 or pair.p_occ.length > min(len(v), len(w)):
                        continue
                    extend_through(v, w, pair, surface)
                    extended += 1
        assert extended > 0

    def test_known_pair_extends(self, surface):
        v = cyc('a1a1a1', surface)
        w = cyc('a1a2a2', surface)
        pair = next(
            pair for pair in enumerate_lp2(v, w, surface)
            if format_word(pair.p_word) == 'a1a1a1' and format_word(pair.q_word) == 'a2a1a2'
        )
        assert pair.kind == PairType.TYPE2
        extend_through(v, w, pair, surface)


class TestLinkedPair:
    """LinkedPair value behaviour."""

    def test_reversed(self, torus):
        a = torus.alphabet
        pair = LinkedPair(
            Occurrence(0, 3), Occurrence(1, 3), PairType.TYPE2, 1,
            parse_word('a1a2a1', a), parse_word('A1a2A2', a), (1, 2),
        )
        back = pair.reversed()
        assert back.p_occ == Occurrence(1, 3)
        assert back.sign == -1
        assert back.exponents == (2, 1)
        assert back.reversed() == pair

    def test_format_record(self, torus):
        pair = enumerate_lp2(cyc('a1', torus), cyc('a2', torus), torus)[0]
        assert pair.format_record() == (
            'type=1 sign=+1 p_start=0 p_length=2 q_start=0 q_length=2 '
            'j=2 k=2 p_word=a1a1 q_word=a2a2'
        )


if __name__ == '__main__':
    pytest.main([__file__])
