"""Brute-force rewriting oracle: bounded closures under YY <-> YYY.

Ground truth for the fast pipeline, at small scale only. The closure of a
word under both rewrite directions inside a length budget gives a partial
view of its equivalence class: intersection proves equivalence, and nothing
here ever proves inequivalence.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from enum import Enum

from . import words
from .errors import EmptyInput
from .reductions import r1


def _neighbours(w: str, length_bound: int) -> tuple[set[str], bool]:
    """One rewrite step each way; clipped reports a blocked expansion."""
    out: set[str] = set()
    clipped = False
    n = len(w)
    for per in range(1, n // 2 + 1):
        grow_ok = n + per <= length_bound
        for i in range(0, n - 2 * per + 1):
            if w[i : i + per] == w[i + per : i + 2 * per]:
                if grow_ok:
                    out.add(w[: i + per] + w[i:])
                else:
                    clipped = True
                    break
    for per in range(1, n // 3 + 1):
        for i in range(0, n - 3 * per + 1):
            if w[i : i + per] == w[i + per : i + 2 * per] == w[i + 2 * per : i + 3 * per]:
                out.add(w[:i] + w[i + per :])
    return out, clipped


def pi_neighbours(w: str, length_bound: int) -> set[str]:
    """All single-step rewrites of w within the length bound."""
    if w == "":
        raise EmptyInput("pi_neighbours needs a nonempty word")
    words.check_word(w)
    if length_bound < len(w):
        raise ValueError(f"length bound {length_bound} below |w| = {len(w)}")
    out, _ = _neighbours(w, length_bound)
    return out


@dataclass(frozen=True, slots=True)
class ClosureResult:
    seed: str
    members: tuple[str, ...]  # sorted by (length, lexicographic)
    exhausted: bool
    length_bound: int
    step_bound: int


def _sort_key(w: str) -> tuple[int, str]:
    return len(w), w


def closure(
    seed: str,
    length_bound: int,
    step_bound: int = 1_000_000,
    stop_on: str | None = None,
) -> ClosureResult:
    """Breadth-first closure in deterministic (length, lex) expansion order.

    exhausted=False flags either a blocked expansion at the length bound or
    running out of step budget; the partial result is still returned.
    stop_on short-circuits once the given word is generated (the member list
    is then partial, which is all equivalence probing needs).
    """
    if seed == "":
        raise EmptyInput("closure needs a nonempty seed")
    words.check_word(seed)
    if length_bound < len(seed):
        raise ValueError(f"length bound {length_bound} below |seed| = {len(seed)}")
    visited = {seed}
    heap = [_sort_key(seed)]
    steps = 0
    exhausted = True
    while heap:
        if steps >= step_bound:
            exhausted = False
            break
        _, w = heapq.heappop(heap)
        steps += 1
        nbrs, clipped = _neighbours(w, length_bound)
        if clipped:
            exhausted = False
        new = nbrs - visited
        visited |= new
        if stop_on is not None and stop_on in visited:
            exhausted = False
            break
        for x in new:
            heapq.heappush(heap, _sort_key(x))
    return ClosureResult(
        seed, tuple(sorted(visited, key=_sort_key)), exhausted, length_bound, step_bound
    )


def r1_reduced_members(result: ClosureResult) -> tuple[str, ...]:
    """The cube-collapsed words among the closure members."""
    return tuple(m for m in result.members if r1(m) == m)


class OracleAnswer(Enum):
    YES = "YES"
    UNKNOWN = "UNKNOWN"


def oracle_equiv(
    u: str, v: str, length_bound: int, step_bound: int = 1_000_000
) -> OracleAnswer:
    """YES when the bounded closures meet; UNKNOWN otherwise, never no."""
    if u == v:
        return OracleAnswer.YES
    cu = closure(u, max(length_bound, len(u)), step_bound, stop_on=v)
    mu = set(cu.members)
    if v in mu:
        return OracleAnswer.YES
    cv = closure(v, max(length_bound, len(v)), step_bound)
    if mu & set(cv.members):
        return OracleAnswer.YES
    return OracleAnswer.UNKNOWN


def enumerate_aof(max_len: int) -> list[str]:
    """All almost overlap-free words up to max_len, in (length, lex) order.

    The empty word is left out. Prefixes of almost overlap-free words are
    almost overlap-free (both defining factors of a prefix are proper
    factors of the longer word), so extension with pruning is exhaustive.
    """
    out: list[str] = []
    level = [""]
    for _ in range(max_len):
        nxt = []
        for w in level:
            for c in "ab":
                x = w + c
                if words.is_almost_overlap_free(x):
                    nxt.append(x)
        out.extend(nxt)
        level = nxt
        if not level:
            break
    return out
