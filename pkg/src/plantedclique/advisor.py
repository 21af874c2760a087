"""Minimum graph sizes that keep each known attack above 2^lambda steps.

Every row gives the smallest ``n`` (at the row's ``p`` and ``k``) at which
the attack's cost formula reaches ``2^lambda``. Unpinned asymptotic
constants are taken as 1, and each formula string says so. Sizes are exact
integers, computed with arbitrary-precision arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath

_PREC_BITS = 256


@dataclass(frozen=True)
class SecurityLevel:
    bits: int

    def __post_init__(self) -> None:
        if self.bits < 1:
            raise ValueError(f"security level must be at least 1 bit, got {self.bits}")


@dataclass(frozen=True)
class Recommendation:
    adversary: str
    min_n: int | None  # None means no recommendation
    p_constraint: str
    k_constraint: str
    formula: str

    def __post_init__(self) -> None:
        if self.min_n is not None and self.min_n < 2:
            raise ValueError("min_n must be at least 2")

    @property
    def n_text(self) -> str:
        return "no recommendation" if self.min_n is None else str(self.min_n)

    def record(self) -> dict:
        return {
            "adversary": self.adversary,
            "min_n": self.min_n,
            "p": self.p_constraint,
            "k": self.k_constraint,
            "formula": self.formula,
        }


def _ceil_pow2(exponent) -> int:
    """``ceil(2^exponent)`` for a non-negative mpmath exponent, clamped to at least 2."""
    with mpmath.workprec(_PREC_BITS + int(mpmath.ceil(exponent))):
        value = int(mpmath.ceil(mpmath.power(2, exponent)))
    return max(2, value)


def log2_binomial(n: int, k: int) -> float:
    """``log2 C(n, k)`` from the exact integer binomial."""
    c = math.comb(n, k)
    if c == 0:
        return float("-inf")
    shift = max(0, c.bit_length() - 64)
    return shift + math.log2(c >> shift)


def clique_size_for(n: int, p: float) -> int:
    """``floor(2 log_{1/p} n)``: the largest planted size the brute-force row considers."""
    return math.floor(2 * math.log(n) / math.log(1 / p))


def brute_force_min_n(level: SecurityLevel, p: float) -> int:
    """Smallest ``n >= 2`` with ``log2 C(n, floor(2 log_{1/p} n)) >= lambda``."""

    def secure(n: int) -> bool:
        k = clique_size_for(n, p)
        return 0 <= k <= n and log2_binomial(n, k) >= level.bits

    hi = 2
    while not secure(hi):
        hi *= 2
    lo = hi // 2 if hi > 2 else 1
    # cost grows with n, so the first secure point is found by bisection
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if secure(mid):
            hi = mid
        else:
            lo = mid
    return max(2, hi)


def brute_force_alternative(level: SecurityLevel) -> tuple[float, int]:
    """The fixed-size alternative: ``p = 2^(-2 log2(lambda) / lambda)`` with ``n = lambda``."""
    lam = level.bits
    p = 2.0 ** (-2 * math.log2(lam) / lam) if lam > 1 else 0.5
    return p, max(2, lam)


def advise(level: SecurityLevel, p: float = 0.5, q: float = 0.5, r_eps: float = 1.0) -> list[Recommendation]:
    """One row per adversary, then the combined row (the maximum over all rows)."""
    if not 0 < p < 1:
        raise ValueError(f"p must lie in (0, 1), got {p}")
    if q <= 0:
        raise ValueError("q must be positive")
    if r_eps <= 0:
        raise ValueError("r_eps must be positive")
    lam = level.bits
    mp_lam = mpmath.mpf(lam)
    half = math.isclose(p, 0.5)
    rows: list[Recommendation] = []

    bf = brute_force_min_n(level, p)
    alt_p, alt_n = brute_force_alternative(level)
    rows.append(
        Recommendation(
            "Brute force",
            bf,
            f"p = {p:g} (or p = {alt_p:.6g} with n = {alt_n})",
            "k = 2 log_{1/p} n",
            "least n with log2 C(n, 2 log_{1/p} n) >= lambda, exact binomial",
        )
    )
    rows.append(Recommendation("Greedy", None, "any", "k > (1+eps) log_{1/p} n", "polynomial time; no n suffices"))

    log_p_lam = mpmath.log(mp_lam) / mpmath.log(1 / mpmath.mpf(p))
    metro = _ceil_pow2(mpmath.sqrt(max(log_p_lam, 0))) if lam > 1 else 2
    rows.append(
        Recommendation(
            "Metropolis",
            metro,
            f"p = {p:g}",
            "k = (1+eps) log_{1/p} n",
            "n >= 2^sqrt(log_{1/p} lambda) (as-printed; constant 1)",
        )
    )
    spectral = _ceil_pow2(mpmath.sqrt(mp_lam)) if half else None
    rows.append(
        Recommendation(
            "Spectral",
            spectral,
            "p = 1/2" if half else "method covers p = 1/2 only",
            "k < 10 sqrt(n)",
            "n >= 2^sqrt(lambda) (constant 1)",
        )
    )
    rows.append(
        Recommendation(
            "Dekel et al.",
            _ceil_pow2(mpmath.sqrt(mp_lam)),
            f"p = {p:g}",
            "k < 1.65 sqrt(n)",
            "n >= 2^sqrt(lambda) (constant 1)",
        )
    )
    rows.append(
        Recommendation(
            "Sum of squares",
            _ceil_pow2(mpmath.sqrt(mp_lam / r_eps)),
            f"p = {p:g}",
            "k = (1+eps) log_{1/p} n",
            f"n >= 2^sqrt(lambda / r_eps), r_eps = {r_eps:g} (assumed)",
        )
    )
    rows.append(
        Recommendation(
            "Feige",
            _ceil_pow2(mpmath.power(mp_lam, q)),
            f"p = {p:g}",
            "k = (1+eps) log_{1/p} n",
            f"n = 2^(lambda^q), q = {q:g}",
        )
    )
    combined = max(r.min_n for r in rows if r.min_n is not None)
    rows.append(
        Recommendation(
            "Combined",
            combined,
            "p = 1/2",
            "k = (1+eps) log_2 n, eps near 1",
            "maximum of the rows above",
        )
    )
    return rows


def storage_estimate(n: int, p: float = 0.5) -> int:
    """Bytes for one bit per vertex pair; ``p`` does not change a dense bit matrix."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return -(-(n * (n - 1) // 2) // 8)


HEADERS = ("Adversary", "Value of n", "Value of p", "Choice of k")


def render_table(rows: list[Recommendation]) -> str:
    body = [(r.adversary, r.n_text, r.p_constraint, r.k_constraint) for r in rows]
    widths = [max(len(h), *(len(row[i]) for row in body)) for i, h in enumerate(HEADERS)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(HEADERS, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    for row in body:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    return "\n".join(lines)
