"""Fringe/core split of uniform words.

A uniform word U reads as c * Q1...Qk * d where each Qi is ab or ba and the
fringe letters c, d are empty or single letters. The split is forced: the
parity of the first double-letter position dictates |c| (doubles inside a
morphism image start at odd 0-indexed offsets), and |d| mops up the length
parity. The core is the maximal morphism-image factor in that alignment.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import words
from .errors import NotUniform


@dataclass(frozen=True, slots=True)
class Frame:
    h: str  # left fringe, "" or one letter
    core: str  # morphism image
    t: str  # right fringe, "" or one letter


def frame(u: str) -> Frame:
    """Split a uniform word into fringe letters and morphism-image core."""
    if not words.is_uniform(u):
        raise NotUniform(f"not uniform: {u[:32]!r}")
    d0 = words.first_double(u)
    lc = (d0 + 1) % 2 if d0 >= 0 else 0
    ld = (len(u) - lc) % 2
    core = u[lc : len(u) - ld]
    assert words.is_phi_image(core)
    return Frame(u[:lc], core, u[len(u) - ld :] if ld else "")


def eta(u: str) -> str:
    """The morphism-image core of a uniform word."""
    return frame(u).core


def xi(u: str) -> str:
    """Extend a uniform word by the negated fringe letters on both sides.

    The result embeds U in a morphism image of its own: negate(h) completes
    the left fringe letter into a block, negate(t) the right one.
    """
    f = frame(u)
    return words.negate(f.h) + u + words.negate(f.t)
