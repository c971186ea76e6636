"""Ancestor descent, rebuild, and the canonical-form entry points.

The descent halves the word each round: cube-collapse, trim non-uniform
tails (remembering the dropped boundary letters), check that every collapse
site is protected, collapse completely, strip the fringe, and pull back
through the morphism. It stops on a short word, on one of the exceptional
classes, or on a word whose sites cannot all be collapsed safely.

The rebuild runs the same tape backwards from a replacement stop word,
re-wrapping fringes and boundary letters and collapsing a letter-for-letter
cube YYY to YY once per round if one appears. When the stop word is swapped
for its class representative, the rebuilt word is the unique almost
overlap-free member of the input's class, when one exists.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import words
from .classes import in_special_class, match_S
from .errors import EmptyInput
from .frames import frame
from .reductions import (
    complete_reduction,
    detect_non_reducible_tails,
    detect_non_uniform_tails,
    is_ab_whole,
    r1,
    tail_reduce,
)


@dataclass(frozen=True, slots=True)
class PrimarySeries:
    """Record of one descent: arrays are 1-indexed by round (entry k-1).

    L/R hold the boundary letters dropped by tail trimming, h/t the fringe
    letters stripped with the core. The final round's entries are never
    read back by the rebuild. series carries the per-round words when
    tracing.
    """

    ell: int
    anc: str
    L: tuple[str, ...]
    R: tuple[str, ...]
    h: tuple[str, ...]
    t: tuple[str, ...]
    series: tuple[str, ...] | None = None


def ancestor(u: str, trace: bool = False) -> PrimarySeries:
    """Run the descent to its stop word."""
    if u == "":
        raise EmptyInput("ancestor needs a nonempty word")
    words.check_word(u)
    L: list[str] = []
    R: list[str] = []
    h: list[str] = []
    t: list[str] = []
    seen: list[str] = []
    prev_len = None
    while True:
        u = r1(u)
        assert prev_len is None or 2 * len(u) <= prev_len
        L.append("")
        R.append("")
        h.append("")
        t.append("")
        if trace:
            seen.append(u)
        if len(u) <= 2 or in_special_class(u):
            anc = u
            break
        tails = detect_non_uniform_tails(u)
        for tl in tails:
            if tl.side == "left":
                L[-1] = u[0]
            else:
                R[-1] = u[-1]
        up = tail_reduce(u) if tails else u
        if not is_ab_whole(up) or detect_non_reducible_tails(up):
            anc = u  # the pre-trim word: trimming is only sound when the
            break  # remainder collapses cleanly
        up = complete_reduction(up)
        f = frame(up)
        h[-1] = f.h
        t[-1] = f.t
        prev_len = len(u)
        u = words.phi_inverse(f.core)
    return PrimarySeries(
        len(L), anc, tuple(L), tuple(R), tuple(h), tuple(t), tuple(seen) if trace else None
    )


def normalize(w: str, series: PrimarySeries) -> str:
    """Rebuild through a recorded descent, starting from stop word w."""
    if w == "":
        raise EmptyInput("normalize needs a nonempty word")
    m = series.ell
    while m > 1:
        m -= 1
        w = series.h[m - 1] + words.phi(w) + series.t[m - 1]
        n = len(w)
        if n % 3 == 0:
            third = n // 3
            if w[: 2 * third] == w[third:]:
                w = w[: 2 * third]
        w = series.L[m - 1] + w + series.R[m - 1]
    return w


def eqaof(u: str) -> str | None:
    """Canonical almost overlap-free member of u's class, or None.

    None means the class has no almost overlap-free member at all: the
    descent stopping outside the exceptional classes, or the rebuilt word
    failing the final check, both certify that.
    """
    series = ancestor(u)
    rep = match_S(series.anc)
    if rep is None:
        return None
    v = normalize(rep, series)
    return v if words.is_almost_overlap_free(v) else None


class Verdict(Enum):
    EQUIVALENT = "EQUIVALENT"
    NOT_EQUIVALENT = "NOT_EQUIVALENT"
    UNKNOWN = "UNKNOWN"


def decide_equiv(u: str, v: str) -> Verdict:
    """Partial equivalence decision through canonical forms."""
    cu = eqaof(u)
    cv = eqaof(v)
    if cu is not None and cv is not None:
        return Verdict.EQUIVALENT if cu == cv else Verdict.NOT_EQUIVALENT
    if (cu is None) != (cv is None):
        # one class has an almost overlap-free member and the other has
        # none, so they differ
        return Verdict.NOT_EQUIVALENT
    return Verdict.UNKNOWN
