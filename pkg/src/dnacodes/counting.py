"""Exact enumeration of constrained sequences.

All counts are exact Python ints: balance counts by binomial summation,
run-length-limited counts by recurrence and by generating-function
coefficient extraction, and combined weight-plus-run counts through a
bivariate series (binary) or the four-state transfer matrix (quaternary).
Everything here is a pure function; the cached weight rows are guarded
by functools.lru_cache and safe for concurrent use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .series import (
    TransferMatrix,
    TruncatedSeries,
    run_polynomial,
    weighted_run_polynomial,
)

__all__ = [
    "WeightProfile",
    "admitted_weights",
    "balance_redundancy",
    "binomial_weight_count",
    "near_balanced_count",
    "rll_count",
    "rll_count_gf",
    "rll_weight_count_binary",
    "rll_weight_count_quaternary",
    "weight_profile",
]

BOUNDARY_MODES = ("strict", "inclusive")


def binomial_weight_count(n: int, w: int) -> int:
    """Number of length-n quaternary words with AT-content exactly w.

    Each of the w AT positions holds A or T and each remaining position
    G or C, hence C(n, w) * 2**n.
    """
    if n < 1:
        raise ValueError("length must be at least 1")
    if not 0 <= w <= n:
        raise ValueError(f"weight {w} out of range 0..{n}")
    return math.comb(n, w) * 2**n


def unbalance_bound(a) -> Fraction:
    """Normalize a relative-unbalance bound to an exact fraction.

    Floats are read through their decimal representation, so a bound
    written as 0.05 means exactly 1/20.
    """
    if isinstance(a, float):
        bound = Fraction(str(a))
    else:
        bound = Fraction(a)
    if bound < 0:
        raise ValueError("unbalance bound must be non-negative")
    return bound


def admitted_weights(n: int, a, boundary: str = "strict") -> list[int]:
    """Weights w with |w/n - 1/2| < a (strict) or <= a (inclusive)."""
    if n < 1:
        raise ValueError("length must be at least 1")
    if boundary not in BOUNDARY_MODES:
        raise ValueError(f"boundary must be one of {BOUNDARY_MODES}")
    bound = unbalance_bound(a)
    half = Fraction(1, 2)
    admitted = []
    for w in range(n + 1):
        gap = abs(Fraction(w, n) - half)
        if gap < bound or (boundary == "inclusive" and gap == bound):
            admitted.append(w)
    return admitted


def near_balanced_count(n: int, a, boundary: str = "strict") -> int:
    """Number of length-n quaternary words whose relative unbalance stays within a."""
    return sum(binomial_weight_count(n, w) for w in admitted_weights(n, a, boundary))


def balance_redundancy(n: int, a, boundary: str = "strict") -> float:
    """Redundancy in bits, 2n - log2 of the near-balanced count."""
    count = near_balanced_count(n, a, boundary)
    if count == 0:
        raise ValueError(f"no weight satisfies the bound; redundancy undefined (n={n}, a={a})")
    return 2 * n - math.log2(count)


def _check_rll_args(q: int, m: int, n: int) -> None:
    if q < 2:
        raise ValueError("alphabet size must be at least 2")
    if m < 1:
        raise ValueError("maximum run must be at least 1")
    if n < 0:
        raise ValueError("length must be non-negative")


def rll_count(q: int, m: int, n: int) -> int:
    """Number of q-ary length-n words with every run of identical symbols <= m.

    Follows the recurrence: q**n for n <= m, and (q-1) times the sum of
    the previous m values beyond that; the empty word counts once.
    """
    _check_rll_args(q, m, n)
    if n <= m:
        return q**n
    counts = [q**i for i in range(1, m + 1)]  # lengths 1..m
    for _ in range(m + 1, n + 1):
        counts.append((q - 1) * sum(counts[-m:]))
    return counts[-1]


def rll_count_gf(q: int, m: int, n: int) -> int:
    """Same count as rll_count, via coefficient extraction from q*T/(1-(q-1)*T).

    Kept as an independent cross-check of the recurrence.
    """
    _check_rll_args(q, m, n)
    if n == 0:
        return 1
    t = TruncatedSeries.from_terms({k: 1 for k in range(1, m + 1)}, n)
    series = (q * t) * ((q - 1) * t).quasi_inverse()
    return series.coefficient(n)


@lru_cache(maxsize=64)
def _binary_weight_row(m: int, n: int) -> tuple[int, ...]:
    """Coefficients over w of the n-th x-degree of the binary run/weight series."""
    t = run_polynomial(m, n)
    t1 = weighted_run_polynomial(m, n)
    t1t = t1 * t
    series = (t1 + t + 2 * t1t) * t1t.quasi_inverse()
    row = series.row(n)
    return row + (0,) * (n + 1 - len(row))


@lru_cache(maxsize=64)
def _quaternary_weight_row(m: int, n: int) -> tuple[int, ...]:
    """Coefficients over w of the n-th x-degree of the quaternary run/weight count."""
    raw = TransferMatrix.build(m, n).cumulative_entry_sum().row(n)
    assert all(c % 3 == 0 for c in raw), "transfer-matrix entry sum not divisible by 3"
    counts = tuple(c // 3 for c in raw)
    return counts + (0,) * (n + 1 - len(counts))


def rll_weight_count_binary(m: int, w: int, n: int) -> int:
    """Number of n-bit words with max run m and exactly w ones."""
    if n < 1:
        raise ValueError("length must be at least 1")
    if m < 1:
        raise ValueError("maximum run must be at least 1")
    if not 0 <= w <= n:
        raise ValueError(f"weight {w} out of range 0..{n}")
    return _binary_weight_row(m, n)[w]


def rll_weight_count_quaternary(m: int, w: int, n: int) -> int:
    """Number of quaternary length-n words with max run m and AT-content w."""
    if n < 1:
        raise ValueError("length must be at least 1")
    if m < 1:
        raise ValueError("maximum run must be at least 1")
    if not 0 <= w <= n:
        raise ValueError(f"weight {w} out of range 0..{n}")
    return _quaternary_weight_row(m, n)[w]


@dataclass(frozen=True)
class WeightProfile:
    """Counts of constrained words of one length, indexed by weight."""

    kind: str
    m: int | None
    n: int
    counts: tuple[int, ...]

    def total(self) -> int:
        return sum(self.counts)


def weight_profile(kind: str, m: int | None, n: int) -> WeightProfile:
    """Full weight distribution for one family and length.

    kind is "binary" or "quaternary"; m=None drops the run constraint and
    yields the plain binomial row (scaled by 2**n for quaternary words).
    """
    if n < 1:
        raise ValueError("length must be at least 1")
    if kind == "binary":
        if m is None:
            counts = tuple(math.comb(n, w) for w in range(n + 1))
        else:
            counts = _binary_weight_row(m, n)
    elif kind == "quaternary":
        if m is None:
            counts = tuple(binomial_weight_count(n, w) for w in range(n + 1))
        else:
            counts = _quaternary_weight_row(m, n)
    else:
        raise ValueError(f"unknown profile kind {kind!r}")
    return WeightProfile(kind=kind, m=m, n=n, counts=counts)
