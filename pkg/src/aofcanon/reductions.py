"""Length-reducing rewriting: letter cubes, protected-pattern collapses, tails.

Three layers, matching the structure of the rewriting system:

  r1                 collapse every run of a single letter to length 2
  complete_reduction additionally collapse aXa -> aa and bXb -> bb sites
                     (X letter-alternating of odd length) until none remain
  tail_reduce        trim the two non-uniform boundary patterns that block
                     equivalence-preserving reduction at the word ends

Spans in reports are 1-indexed and inclusive.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from . import words
from .errors import NotR1Reduced

_R1_A = re.compile(r"aaa+")
_R1_B = re.compile(r"bbb+")


def r1(w: str) -> str:
    """Collapse every maximal single-letter run of length 3 or more to 2."""
    return _R1_B.sub("bb", _R1_A.sub("aa", w))


def _check_r1(w: str) -> None:
    if "aaa" in w or "bbb" in w:
        raise NotR1Reduced(f"letter cube present: {w[:32]!r}")


_DOUBLE = re.compile(r"aa|bb")


def _sites(w: str):
    """Yield (start0, end0, letter) for each aXa / bXb occurrence.

    In a cube-collapsed word these are exactly the consecutive same-letter
    double pairs: the stretch between consecutive doubles is alternating by
    definition, and same-letter consecutive doubles always sit at odd
    distance (an even distance would force a third double between them).
    """
    prev_pos = -1
    prev_c = ""
    for m in _DOUBLE.finditer(w):
        pos, c = m.start(), w[m.start()]
        if prev_pos >= 0 and prev_c == c:
            yield prev_pos, pos + 1, c
        prev_pos, prev_c = pos, c


def find_whole_violations(w: str) -> list[tuple[tuple[int, int], str]]:
    """Unprotected aXa / bXb occurrences in a cube-collapsed word.

    Returns ((start, end), letterClass) per violation, left to right. An
    occurrence is protected when wrapped as ab...ba (class A) or ba...ab
    (class B); only protected sites can be collapsed without changing the
    equivalence class in general.
    """
    _check_r1(w)
    out = []
    for s, e, c in _sites(w):
        before, after = ("ab", "ba") if c == "a" else ("ba", "ab")
        if not (s >= 2 and w[s - 2 : s] == before and w[e + 1 : e + 3] == after):
            out.append(((s + 1, e + 1), "A" if c == "a" else "B"))
    return out


def is_ab_whole(w: str) -> bool:
    """True when every aXa / bXb occurrence is wrapped ab...ba / ba...ab."""
    _check_r1(w)
    if words.is_uniform(w):
        # uniform words have no same-letter consecutive double pairs at all
        return True
    for s, e, c in _sites(w):
        before, after = ("ab", "ba") if c == "a" else ("ba", "ab")
        if not (s >= 2 and w[s - 2 : s] == before and w[e + 1 : e + 3] == after):
            return False
    return True


_REDEX = re.compile(r"a(?:ab)+?aa|b(?:ba)+?bb")


def complete_reduction(w: str) -> str:
    """Fixpoint of the cube collapse plus the aXa/bXb collapse, any input.

    Strategy: leftmost site, shortest match there. The fixpoint is
    order-independent (property-tested); uniform words are already fixpoints.
    """
    w = r1(w)
    while not words.is_uniform(w):
        # non-uniformity means doubles at both parities, and parity only
        # changes across a same-letter consecutive pair, so a site exists
        m = _REDEX.search(w)
        w = r1(w[: m.start()] + m.group()[0] * 2 + w[m.end() :])
    return w


@dataclass(frozen=True, slots=True)
class Tail:
    """One boundary pattern occurrence; span is 1-indexed inclusive."""

    side: str  # "left" | "right"
    letter_class: str  # "A" | "B"
    family: str  # "nonuniform" | "nonreducible"
    start: int
    end: int


NON_UNIFORM = "nonuniform"
NON_REDUCIBLE = "nonreducible"

# Left-side patterns; the right-side ones are their reversals and the B ones
# their negations, so two expressions cover all eight kinds. Greedy matching
# is safe: the double-letter positions inside a match determine the block
# counts, so each word has at most one match length per pattern.
_LEFT = {
    NON_UNIFORM: {
        "A": re.compile(r"(?:aab){2,}ba"),
        "B": re.compile(r"(?:bba){2,}ab"),
    },
    NON_REDUCIBLE: {
        "A": re.compile(r"(?:aba)+(?:ab){2,}aa"),
        "B": re.compile(r"(?:bab)+(?:ba){2,}bb"),
    },
}


def _detect(w: str, family: str) -> list[Tail]:
    out = []
    for cls, rx in _LEFT[family].items():
        m = rx.match(w)
        if m:
            out.append(Tail("left", cls, family, 1, m.end()))
            break
    rev = w[::-1]
    for cls, rx in _LEFT[family].items():
        m = rx.match(rev)
        if m:
            out.append(Tail("right", cls, family, len(w) - m.end() + 1, len(w)))
            break
    return out


def detect_non_uniform_tails(w: str) -> list[Tail]:
    """Boundary patterns that make the word non-uniform; at most one per side."""
    return _detect(w, NON_UNIFORM)


def detect_non_reducible_tails(w: str) -> list[Tail]:
    """Boundary patterns whose collapse would change the equivalence class."""
    return _detect(w, NON_REDUCIBLE)


def tail_reduce_left(w: str) -> str:
    """Trim a non-uniform left tail down to its last 7 letters, if present."""
    _check_r1(w)
    for t in detect_non_uniform_tails(w):
        if t.side == "left":
            return w[t.end - 7 :]
    return w


def tail_reduce_right(w: str) -> str:
    _check_r1(w)
    for t in detect_non_uniform_tails(w):
        if t.side == "right":
            return w[: t.start + 6]
    return w


def tail_reduce(w: str) -> str:
    """Trim both non-uniform tails; the two sides commute."""
    return tail_reduce_right(tail_reduce_left(w))
