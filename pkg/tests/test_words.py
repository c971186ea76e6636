"""Word predicates and morphism plumbing."""
from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aofcanon import words
from aofcanon.errors import NotPhiImage, WordError

import _oracles as slow

ab_words = st.text(alphabet="ab", max_size=200)


@pytest.mark.parametrize("bad", ["abc", "A", "a b", "ab\n", "1"])
def test_check_word_rejects(bad):
    with pytest.raises(WordError):
        words.check_word(bad)


def test_check_word_accepts_lambda():
    # the library accepts the empty word; only the CLI refuses it
    assert words.check_word("") == ""
    assert words.check_word("abba") == "abba"


@given(ab_words)
def test_negate_reverse_involutions(w):
    assert words.negate(words.negate(w)) == w
    assert words.reverse(words.reverse(w)) == w
    assert words.negate(words.reverse(w)) == words.reverse(words.negate(w))


@given(ab_words)
def test_phi_roundtrip(w):
    img = words.phi(w)
    assert len(img) == 2 * len(w)
    assert words.is_phi_image(img)
    assert words.phi_inverse(img) == w


@given(ab_words)
def test_phi_commutes_with_negation(w):
    assert words.phi(words.negate(w)) == words.negate(words.phi(w))


def test_phi_image_matches_slow():
    for w in slow.words_up_to(12):
        assert words.is_phi_image(w) == slow.phi_image_slow(w), w


@pytest.mark.parametrize("w", ["a", "aa", "abb", "aabb"])
def test_phi_inverse_rejects(w):
    with pytest.raises(NotPhiImage):
        words.phi_inverse(w)


def test_first_double_matches_scan():
    for w in slow.words_up_to(9):
        expected = next((i for i in range(len(w) - 1) if w[i] == w[i + 1]), -1)
        assert words.first_double(w) == expected, w


def test_uniform_matches_slow_exhaustive():
    for w in slow.words_up_to(12):
        assert words.is_uniform(w) == slow.uniform_slow(w), w


@given(st.text(alphabet="ab", max_size=400))
@settings(max_examples=300)
def test_uniform_matches_slow_random(w):
    assert words.is_uniform(w) == slow.uniform_slow(w)


def test_overlap_free_matches_slow_exhaustive():
    for w in slow.words_up_to(12):
        assert words.is_overlap_free(w) == (not slow.has_overlap_slow(w)), w


def test_cube_free_matches_slow_exhaustive():
    for w in slow.words_up_to(12):
        assert words.is_cube_free(w) == (not slow.has_cube_slow(w)), w


def test_aof_matches_slow_exhaustive():
    for w in slow.words_up_to(12):
        assert words.is_almost_overlap_free(w) == slow.aof_slow(w), w


@given(st.text(alphabet="ab", min_size=1, max_size=64))
@settings(max_examples=200)
def test_aof_matches_slow_random(w):
    assert words.is_almost_overlap_free(w) == slow.aof_slow(w)


def test_aof_edge_cases():
    # the two letter cubes are almost overlap-free even though they are
    # overlaps themselves
    assert words.is_almost_overlap_free("aaa")
    assert words.is_almost_overlap_free("bbb")
    assert not words.is_overlap_free("aaa")
    assert not words.is_almost_overlap_free("aaaa")
    assert words.is_almost_overlap_free("")


def test_letter_alternating():
    assert words.is_letter_alternating("ababab")
    assert words.is_letter_alternating("ba")
    assert words.is_letter_alternating("")
    assert not words.is_letter_alternating("abba")
