"""The thirty exceptional class recognizers."""
from __future__ import annotations

import re

import pytest

from aofcanon import classes, reductions, words
from aofcanon.errors import NotR1Reduced

import _oracles as slow


def test_table_shape():
    table = classes.pattern_table()
    assert len(table) == 30
    reps = [p.representative for p in table]
    assert len(set(reps)) == 30
    # fixed order: nine a-side entries, their negations, six three-block
    # languages, six singletons
    assert reps[0] == "aabaa"
    assert reps[8] == "aabaabbaabaa"
    assert reps[9:18] == [words.negate(r) for r in reps[:9]]
    assert reps[18] == "abaabaab"
    assert reps[24:] == ["a", "b", "aa", "bb", "ab", "ba"]


def test_representatives_accepted_and_reduced():
    for p in classes.pattern_table():
        assert reductions.r1(p.representative) == p.representative
        assert p.accepts(p.representative), p.representative


def test_acceptors_pairwise_disjoint():
    # match_S asserts this internally; drive it over every cube-collapsed
    # word up to length 12
    for w in slow.words_up_to(12):
        if slow.r1_slow(w) != w:
            continue
        hits = [p.representative for p in classes.pattern_table() if p.accepts(w)]
        assert len(hits) <= 1, (w, hits)


@pytest.mark.parametrize(
    ("x", "rep"),
    [
        ("b", "b"),
        ("aa", "aa"),
        ("ba", "ba"),
        ("aabaa", "aabaa"),
        ("aabaabaab", "aabaab"),
        ("bbabb", "bbabb"),
        ("aabaabaa", "aabaabaa"),
        ("babbabba", "babbabba"),
        ("aabaabbaabaa", "aabaabbaabaa"),
        ("aabaabaabbaabbaabaabaa", "aabaabbaabaa"),
        ("ababab", None),
        ("aabb", None),
        ("aabaabb", "aabaabb"),
    ],
)
def test_match_S(x, rep):
    assert classes.match_S(x) == rep


def test_match_S_requires_reduced():
    with pytest.raises(NotR1Reduced):
        classes.match_S("aaa")


_SPECIAL_RX = re.compile(r"(?:aab){2,}(?:b(?:aab)+)*(?:baa){2,}")


def test_special_acceptor_matches_star_expression():
    # independent reading of the display pattern
    # (aab)^2(aab)*(b(aab)*aab)*(baa)*(baa)^2
    for w in slow.words_up_to(16):
        assert (_SPECIAL_RX.fullmatch(w) is not None) == classes.pattern_table()[8].accepts(
            w
        ), w


def test_in_special_class():
    assert classes.in_special_class("aabaabbaabaa")
    assert classes.in_special_class("bbabbaabbabb")
    assert classes.in_special_class("aabaabaabbaabbaabaabaa")
    assert not classes.in_special_class("aabaab")
    assert not classes.in_special_class("ab")
    with pytest.raises(NotR1Reduced):
        classes.in_special_class("bbb")


def test_negation_closure_of_table():
    # the table as a whole is negation-closed; check acceptors agree
    table = classes.pattern_table()
    by_rep = {p.representative: p for p in table}
    for w in slow.words_up_to(10):
        if slow.r1_slow(w) != w:
            continue
        for p in table:
            if p.accepts(w):
                assert by_rep[words.negate(p.representative)].accepts(words.negate(w))
