"""Capacities, growth coefficients, Gaussian weight models, and redundancies.

The dominant root of the run-length characteristic equation drives
everything here: capacity, the leading coefficient of the count
asymptote, and the run-length distributions behind the weight-variance
factors.  All quantities are 64-bit floats; exact counts are folded in
through log2 so nothing overflows.  Pure functions throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import counting

__all__ = [
    "CapacityResult",
    "GaussianApprox",
    "RunlengthDistribution",
    "balance_count_approx",
    "balance_penalty",
    "capacity",
    "combined_redundancy",
    "efficiency_eta",
    "gamma_binary",
    "gamma_quaternary",
    "gaussian_weight_approx",
    "gaussian_weight_model",
    "leading_coefficient",
    "q_function",
    "rll_count_approx",
    "rll_redundancy",
    "runlength_distribution",
]

_NEWTON_CAP = 200


@dataclass(frozen=True)
class CapacityResult:
    """Dominant root and capacity of the max-run-m q-ary constraint."""

    q: int
    m: int
    lam: float
    capacity_bits: float
    residual: float


def _char_residual(q: int, m: int, x: float) -> float:
    """Exact-rational evaluation of x**(m+1) - q*x**m + q - 1 at a float point."""
    fx = Fraction(x)
    return float(fx**m * (fx - q) + q - 1)


def _deflated(q: int, m: int, x: float) -> float:
    """x**m - (q-1)*(x**(m-1) + ... + 1): the characteristic factor without the root at 1."""
    acc = 1.0
    for _ in range(m):
        acc = acc * x - (q - 1)
    return acc


def _deflated_derivative(q: int, m: int, x: float) -> float:
    acc = 1.0
    d = 0.0
    for _ in range(m):
        d = d * x + acc
        acc = acc * x - (q - 1)
    return d


@lru_cache(maxsize=None)
def capacity(q: int, m: int) -> CapacityResult:
    """Capacity C_q(m) = log2 of the largest real characteristic root.

    Bisection brackets the root in (q-1, q), a Newton polish finishes it;
    m=1 is the exact root q-1 (so the binary m=1 channel has capacity 0).
    """
    if q < 2:
        raise ValueError("alphabet size must be at least 2")
    if m < 1:
        raise ValueError("maximum run must be at least 1")
    if m == 1:
        lam = float(q - 1)
        return CapacityResult(q, m, lam, math.log2(lam), abs(_char_residual(q, m, lam)))
    lo, hi = float(q - 1), float(q)
    if not (_deflated(q, m, lo) < 0 < _deflated(q, m, hi)):
        raise ArithmeticError(f"root bracket invalid for q={q}, m={m}")
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        if _deflated(q, m, mid) < 0:
            lo = mid
        else:
            hi = mid
        if hi - lo < 1e-12:
            break
    lam = 0.5 * (lo + hi)
    for _ in range(_NEWTON_CAP):
        step = _deflated(q, m, lam) / _deflated_derivative(q, m, lam)
        lam -= step
        if abs(step) <= 1e-15 * lam:
            break
    else:
        raise ArithmeticError(f"root refinement did not converge for q={q}, m={m}")
    return CapacityResult(q, m, lam, math.log2(lam), abs(_char_residual(q, m, lam)))


def _run_sum(m: int, x: float) -> float:
    """T(x) = x + x**2 + ... + x**m."""
    return sum(x**i for i in range(1, m + 1))


def _run_sum_derivative(m: int, x: float) -> float:
    return sum(i * x ** (i - 1) for i in range(1, m + 1))


def leading_coefficient(q: int, m: int) -> float:
    """Coefficient A_q(m) in the count asymptote A * lam**n.

    With the count series written as r(x)/p(x) for r = q*T and
    p = 1 - (q-1)*T, this is -lam * r(1/lam) / p'(1/lam).
    """
    lam = capacity(q, m).lam
    x = 1.0 / lam
    r = q * _run_sum(m, x)
    p_prime = -(q - 1) * _run_sum_derivative(m, x)
    if abs(p_prime) < 1e-12:
        raise ArithmeticError(f"degenerate denominator derivative for q={q}, m={m}")
    return -lam * r / p_prime


def rll_count_approx(q: int, m: int, n: int) -> float:
    """Asymptotic count A_q(m) * lam_q(m)**n."""
    if n < 1:
        raise ValueError("length must be at least 1")
    res = capacity(q, m)
    return leading_coefficient(q, m) * res.lam**n


def rll_redundancy(q: int, m: int, n: int, mode: str = "exact") -> float:
    """Redundancy in bits of the max-run constraint at length n.

    exact: n*log2(q) - log2 of the exact count; asymptotic: the linear
    form n*(log2(q) - C_q(m)) - log2(A_q(m)).
    """
    if q not in (2, 4):
        raise ValueError("alphabet size must be 2 or 4")
    if mode == "exact":
        return n * math.log2(q) - math.log2(counting.rll_count(q, m, n))
    if mode == "asymptotic":
        res = capacity(q, m)
        return n * (math.log2(q) - res.capacity_bits) - math.log2(leading_coefficient(q, m))
    raise ValueError(f"unknown mode {mode!r}")


def efficiency_eta(m: int) -> float:
    """Asymptotic rate efficiency (1 + C_2(m)) / C_4(m) of the binary route."""
    if m < 2:
        raise ValueError("efficiency is defined for m >= 2")
    return (1.0 + capacity(2, m).capacity_bits) / capacity(4, m).capacity_bits


@dataclass(frozen=True)
class RunlengthDistribution:
    """Run-length probabilities of one weight plane of a constrained source."""

    probs: tuple[tuple[int, float], ...]
    truncation_k: int
    mean_runlength: float

    def mass(self) -> float:
        return sum(p for _, p in self.probs)


def gamma_binary(m: int) -> float:
    """Variance factor of the binary run-constrained weight distribution.

    Run lengths occur with probability lam**-k, k = 1..m; the factor is
    the run-length variance over its mean.
    """
    if m < 2:
        raise ValueError("the binary variance factor needs m >= 2")
    lam = capacity(2, m).lam
    probs = [lam**-k for k in range(1, m + 1)]
    if abs(sum(probs) - 1.0) > 1e-12:
        raise ArithmeticError("run-length probabilities do not sum to 1")
    mean = sum(k * p for k, p in enumerate(probs, start=1))
    var = sum((k - mean) ** 2 * p for k, p in enumerate(probs, start=1))
    return var / mean


@lru_cache(maxsize=None)
def runlength_distribution(m: int) -> RunlengthDistribution:
    """Run-length distribution of the AT plane of the quaternary source.

    A maximal AT block of length k arises from any of the N_2(m, k)
    alternating A/T arrangements, weighted by lam_4**-k and normalized.
    The series is truncated once the next term drops below 1e-15 and the
    geometric tail bound (ratio 2/lam_4) is below 1e-12.
    """
    if m < 1:
        raise ValueError("maximum run must be at least 1")
    lam = capacity(4, m).lam
    x = 1.0 / lam
    terms: list[float] = []
    k = 0
    while True:
        k += 1
        term = float(counting.rll_count(2, m, k)) * x**k
        terms.append(term)
        tail_bound = (2 * x) ** (k + 1) / (1 - 2 * x)
        if term < 1e-15 and tail_bound < 1e-12:
            break
        if k > 10_000:
            raise ArithmeticError("run-length distribution failed to truncate")
    total = sum(terms)
    if not -1e-12 <= 1.0 - total <= 1e-9:
        # The normalizer is exactly 1 in the infinite sum: the plain
        # run-length series evaluates to 1 at 1/lam_4.
        raise ArithmeticError(f"truncated run-length mass {total} out of range")
    c = 1.0 / total
    probs = tuple((i, c * t) for i, t in enumerate(terms, start=1))
    mean = sum(i * p for i, p in probs)
    return RunlengthDistribution(probs=probs, truncation_k=k, mean_runlength=mean)


def gamma_quaternary(m: int) -> float:
    """Variance factor of the quaternary run-constrained AT-weight distribution."""
    dist = runlength_distribution(m)
    mean = dist.mean_runlength
    var = sum((k - mean) ** 2 * p for k, p in dist.probs)
    return var / mean


def q_function(x: float) -> float:
    """Upper-tail probability of the standard normal distribution."""
    return 0.5 * math.erfc(x / math.sqrt(2.0))


@dataclass(frozen=True)
class GaussianApprox:
    """Gaussian model of a weight distribution: count ~ total * density(w)."""

    mean: float
    variance: float
    total: float

    def density(self, u: float) -> float:
        if self.variance <= 0:
            raise ValueError("variance must be positive")
        z = (u - self.mean) / math.sqrt(self.variance)
        return math.exp(-0.5 * z * z) / math.sqrt(2 * math.pi * self.variance)

    def estimate(self, w: float) -> float:
        return self.total * self.density(w)


def gaussian_weight_model(
    kind: str, m: int | None, n: int, plain_variance: bool = False
) -> GaussianApprox:
    """Gaussian weight model for one sequence family at length n.

    kind "balance" models unconstrained quaternary words (variance n/4);
    "binary-rll" and "quaternary-rll" shrink the variance by the run
    factor and scale by the exact constrained count.  plain_variance
    keeps the unconstrained n/4 variance for the run-constrained kinds,
    for comparing the two modeling choices.
    """
    if n < 1:
        raise ValueError("length must be at least 1")
    if kind == "balance":
        return GaussianApprox(mean=n / 2, variance=n / 4, total=float(4**n))
    if kind == "binary-rll":
        if m is None:
            raise ValueError("binary-rll model needs m")
        gamma = 1.0 if plain_variance else gamma_binary(m)
        return GaussianApprox(n / 2, gamma * n / 4, float(counting.rll_count(2, m, n)))
    if kind == "quaternary-rll":
        if m is None:
            raise ValueError("quaternary-rll model needs m")
        gamma = 1.0 if plain_variance else gamma_quaternary(m)
        return GaussianApprox(n / 2, gamma * n / 4, float(counting.rll_count(4, m, n)))
    raise ValueError(f"unknown model kind {kind!r}")


def gaussian_weight_approx(kind: str, m: int | None, w: int, n: int) -> float:
    """Gaussian estimate of the number of length-n words with weight w."""
    return gaussian_weight_model(kind, m, n).estimate(w)


def balance_count_approx(n: int, a: float) -> float:
    """Gaussian estimate 4**n * (1 - 2*Q(2*a*sqrt(n))) of the near-balanced count."""
    if n < 1:
        raise ValueError("length must be at least 1")
    return float(4**n) * (1.0 - 2.0 * q_function(2.0 * float(a) * math.sqrt(n)))


def _gamma_for(kind: str, m: int) -> float:
    if kind == "binary":
        return gamma_binary(m)
    if kind == "quaternary":
        return gamma_quaternary(m)
    raise ValueError(f"unknown kind {kind!r}")


def balance_penalty(kind: str, m: int, a: float, n: int) -> float:
    """Extra redundancy in bits for also keeping the weight within a of balance."""
    gamma = _gamma_for(kind, m)
    inner = 1.0 - 2.0 * q_function(2.0 * float(a) * math.sqrt(n / gamma))
    if inner <= 0.0:
        raise ValueError("balance penalty undefined: admitted probability is not positive")
    return -math.log2(inner)


def combined_redundancy(
    kind: str,
    m: int,
    a,
    n: int,
    mode: str = "asymptotic",
    boundary: str = "strict",
) -> float:
    """Redundancy in bits under both the run and the weight constraint.

    asymptotic: run redundancy plus the Gaussian balance penalty.
    exact: bits-per-symbol * n minus log2 of the admitted-weight count,
    using the same weight-admission rule as the balance counters.
    """
    if kind not in ("binary", "quaternary"):
        raise ValueError(f"unknown kind {kind!r}")
    q = 2 if kind == "binary" else 4
    if kind == "binary" and m < 2:
        raise ValueError("binary combined redundancy needs m >= 2")
    if mode == "asymptotic":
        return rll_redundancy(q, m, n, "asymptotic") + balance_penalty(kind, m, a, n)
    if mode == "exact":
        profile = counting.weight_profile(kind, m, n)
        admitted = sum(profile.counts[w] for w in counting.admitted_weights(n, a, boundary))
        if admitted == 0:
            raise ValueError("no admitted words; redundancy undefined")
        return n * math.log2(q) - math.log2(admitted)
    raise ValueError(f"unknown mode {mode!r}")
