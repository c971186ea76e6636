"""Basic word operations over the alphabet {a, b}.

Words are plain Python strings. Positions in reported spans are 1-indexed,
following the usual combinatorics-on-words convention; internal code uses
0-indexed offsets.
"""
from __future__ import annotations

from .errors import NotPhiImage, WordError
from . import overlap

NEGATE = str.maketrans("ab", "ba")

_VALID = frozenset("ab")


def is_word(w: str) -> bool:
    """True when w uses only the letters a and b (the empty word counts)."""
    return _VALID.issuperset(w)


def check_word(w: str) -> str:
    if not is_word(w):
        raise WordError(f"not a word over {{a,b}}: {w!r}")
    return w


def negate(w: str) -> str:
    """Exchange a and b throughout."""
    return w.translate(NEGATE)


def reverse(w: str) -> str:
    return w[::-1]


def phi(w: str) -> str:
    """Thue-Morse morphism: a -> ab, b -> ba."""
    n = len(w)
    out = bytearray(2 * n)
    b = w.encode()
    out[0::2] = b
    out[1::2] = negate(w).encode()
    return out.decode()


def is_phi_image(w: str) -> bool:
    """True when w = phi(x) for some word x.

    Images are exactly the even-length words whose block pairs are ab or ba,
    i.e. the second half-sample is the negation of the first.
    """
    if len(w) % 2:
        return False
    return negate(w[0::2]) == w[1::2]


def phi_inverse(w: str) -> str:
    """Unique preimage under phi. Raises NotPhiImage when none exists."""
    if not is_phi_image(w):
        raise NotPhiImage(f"not a morphism image: {w[:32]!r}...")
    return w[0::2]


def is_letter_alternating(w: str) -> bool:
    """No aa or bb factor."""
    return "aa" not in w and "bb" not in w


def first_double(w: str) -> int:
    """0-indexed start of the leftmost aa or bb factor, or -1."""
    ia = w.find("aa")
    ib = w.find("bb")
    if ia < 0:
        return ib
    if ib < 0:
        return ia
    return min(ia, ib)


def is_uniform(w: str) -> bool:
    """All double-letter factors start at positions of one parity.

    Letter-alternating words are vacuously uniform. Equivalent to being a
    factor of some morphism image.
    """
    b = w.encode()
    e = b[0::2]
    o = b[1::2]
    # A double at an even 0-indexed position pairs e[i] with o[i]; at an odd
    # position it pairs o[i] with e[i+1].
    even_dbl = _any_eq(e[: len(o)], o)
    odd_dbl = _any_eq(o[: max(0, len(e) - 1)], e[1:])
    return not (even_dbl and odd_dbl)


def _any_eq(x: bytes, y: bytes) -> bool:
    # Some position where x and y agree, i.e. a zero byte in their xor.
    n = len(x)
    if n == 0:
        return False
    d = int.from_bytes(x, "big") ^ int.from_bytes(y[:n], "big")
    return b"\x00" in d.to_bytes(n, "big")


def is_cube_free(w: str) -> bool:
    """No factor of shape YYY with Y nonempty."""
    return not overlap.has_cube(w)


def is_overlap_free(w: str) -> bool:
    """No factor of length 2p+1 with period p (equivalently no cYcYc)."""
    return not overlap.has_overlap(w)


def is_almost_overlap_free(w: str) -> bool:
    """Every proper factor is overlap-free.

    Equivalent to both maximal proper factors being overlap-free; the word
    itself may be an overlap (aaa and bbb qualify).
    """
    if len(w) <= 2:
        return True
    return not (overlap.has_overlap(w[:-1]) or overlap.has_overlap(w[1:]))
