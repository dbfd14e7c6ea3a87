"""Symbol-level primitives for quaternary strands and binary words.

A strand (oligo) is a tuple over {0, 1, 2, 3} with the fixed nucleotide
mapping G=0, C=1, A=2, T=3.  Every strand x decomposes into two binary
planes, x = low + 2*high, and the high plane marks which symbols are A
or T, so the AT-content of x equals the bit weight of its high plane.
"""

from __future__ import annotations

from collections.abc import Sequence

ALPHABET = "GCAT"

Oligo = tuple[int, ...]
Bits = tuple[int, ...]

_SYMBOL_BY_BASE = {base: value for value, base in enumerate(ALPHABET)}


def phi(u: int) -> int:
    """AT-membership indicator of a quaternary symbol: 1 for A/T, else 0."""
    if u not in (0, 1, 2, 3):
        raise ValueError(f"not a quaternary symbol: {u!r}")
    return 1 if u > 1 else 0


def at_weight(word: Sequence[int]) -> int:
    """Number of A/T symbols (symbol values 2 and 3) in a quaternary word."""
    return sum(phi(u) for u in word)


def bit_weight(bits: Sequence[int]) -> int:
    """Number of ones in a binary word."""
    return sum(bits)


def max_run(seq: Sequence[int]) -> int:
    """Length of the longest block of identical consecutive symbols."""
    best = 0
    cur = 0
    prev = object()
    for s in seq:
        cur = cur + 1 if s == prev else 1
        prev = s
        if cur > best:
            best = cur
    return best


def relative_unbalance(word: Sequence[int]) -> float:
    """|w/n - 1/2| where w is the AT-content of the quaternary word."""
    n = len(word)
    if n == 0:
        raise ValueError("relative unbalance of the empty word is undefined")
    return abs(at_weight(word) / n - 0.5)


def split_planes(word: Sequence[int]) -> tuple[Bits, Bits]:
    """Decompose a quaternary word into (low, high) binary planes."""
    if any(u not in (0, 1, 2, 3) for u in word):
        raise ValueError("symbol out of range for a quaternary word")
    low = tuple(u & 1 for u in word)
    high = tuple(u >> 1 for u in word)
    return low, high


def merge_planes(low: Sequence[int], high: Sequence[int]) -> Oligo:
    """Rebuild a quaternary word from its (low, high) binary planes."""
    if len(low) != len(high):
        raise ValueError(f"plane lengths differ: {len(low)} != {len(high)}")
    if any(b not in (0, 1) for b in low) or any(b not in (0, 1) for b in high):
        raise ValueError("planes must be binary")
    return tuple(lo + 2 * hi for lo, hi in zip(low, high))


def text_to_oligo(text: str) -> Oligo:
    """Parse an ACGT string (case-insensitive) into a symbol tuple."""
    symbols = []
    for pos, ch in enumerate(text):
        value = _SYMBOL_BY_BASE.get(ch.upper())
        if value is None:
            raise ValueError(f"invalid nucleotide {ch!r} at position {pos}")
        symbols.append(value)
    return tuple(symbols)


def oligo_to_text(word: Sequence[int]) -> str:
    """Render a symbol tuple as an uppercase ACGT string."""
    try:
        return "".join(ALPHABET[u] for u in word)
    except (IndexError, TypeError):
        raise ValueError("symbol out of range for a quaternary word") from None
