"""Closed-form exact distributions for the symmetric +-1 lattice walk.

A walker starts at the origin and makes N fair +-1 steps.  This module
evaluates, in exact dyadic arithmetic:

* the endpoint distribution p_N(X) and its cumulative sums,
* the joint law of the endpoint X and the number of visits K to a marked
  site Z >= 1 (a visit is an arrival at Z during steps 1..N; the starting
  point is never counted),
* both marginals, and the low-order moments of each.

The joint law has a closed form in terms of the plain endpoint
distribution evaluated at a reflected argument: writing c = Z + |X - Z|,

    P_N(X, 0 | Z)      = p_N(X) - p_N(c)
    P_N(X, K | Z), K>=1 = ( p_{N-K}(c + K - 2) - p_{N-K}(c + K) ) / 2

with p_m(Y) := 0 whenever |Y| > m or Y and m differ in parity.  Sites
Z <= 0 are rejected: the decomposition behind the closed form assumes the
marked site lies strictly to the right of the start.  For Z <= -1,
callers should reflect the whole problem, (X, Z) -> (-X, -Z).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .dyadic import DyadicProb, dyadic_sum

__all__ = [
    "WalkQuery",
    "JointTable",
    "SiteDist",
    "VisitDist",
    "p_step",
    "cumulant_F",
    "no_visit_prob",
    "joint_point",
    "joint_table",
    "marginal_x",
    "marginal_k",
    "moments_x",
    "moments_k",
    "max_visits",
]


def _require_site(z: int) -> None:
    if z < 1:
        raise ValueError(
            f"marked site must satisfy Z >= 1, got {z} "
            "(for negative sites reflect the problem: (X, Z) -> (-X, -Z))"
        )


def _require_steps(n: int) -> None:
    if n < 0:
        raise ValueError(f"step count must be >= 0, got {n}")


def _path_count(n: int, x: int) -> int:
    """Number of n-step +-1 paths from 0 to x (0 off support/parity)."""
    if abs(x) > n or (x - n) % 2:
        return 0
    return math.comb(n, (n + x) // 2)


def _cum_count(n: int, x: int) -> int:
    """Number of n-step paths ending at or left of x, as an integer."""
    if x >= n:
        return 1 << n
    if x < -n:
        return 0
    # walk the binomial row up to the largest lattice point <= x
    top = x if (x - n) % 2 == 0 else x - 1
    j_max = (n + top) // 2
    total = 0
    c = 1  # comb(n, 0)
    for j in range(j_max + 1):
        total += c
        c = c * (n - j) // (j + 1)
    return total


def p_step(n: int, x: int) -> DyadicProb:
    """Probability that an n-step walk ends at x: comb(n, (n+x)/2) / 2**n."""
    _require_steps(n)
    return DyadicProb(_path_count(n, x), n)


def cumulant_F(n: int, x: int) -> DyadicProb:
    """Cumulative endpoint distribution: sum of p_step(n, y) for y <= x."""
    _require_steps(n)
    return DyadicProb(_cum_count(n, x), n)


def no_visit_prob(n: int, z: int) -> DyadicProb:
    """Probability that an n-step walk never arrives at z >= 1.

    Equals F_n(z-1) + F_n(z) - 1: the complement, by reflection, of the
    probability that the running maximum reaches z.
    """
    _require_steps(n)
    _require_site(z)
    mant = _cum_count(n, z - 1) + _cum_count(n, z) - (1 << n)
    return DyadicProb(mant, n)


def max_visits(n: int, z: int, x: int | None = None) -> int:
    """Largest K with positive probability, optionally for a fixed endpoint.

    K visits ending at x need at least z + 2(K-1) + |x-z| steps.
    """
    budget = n - z if x is None else n - z - abs(x - z)
    return budget // 2 + 1 if budget >= 0 else 0


@dataclass(frozen=True, slots=True)
class WalkQuery:
    """One cell of the joint law: n steps, site z, endpoint x, visits k."""

    n: int
    z: int
    x: int
    k: int

    def __post_init__(self) -> None:
        _require_steps(self.n)
        _require_site(self.z)
        if abs(self.x) > self.n:
            raise ValueError(f"|x| = {abs(self.x)} exceeds step count {self.n}")
        if not 0 <= self.k <= self.n:
            raise ValueError(f"visit count {self.k} outside 0..{self.n}")


def _joint_raw(n: int, z: int, x: int, k: int) -> tuple[int, int]:
    """Joint cell value as an uncanonicalized (numerator, exponent) pair."""
    c = z + abs(x - z)
    if k == 0:
        return _path_count(n, x) - _path_count(n, c), n
    m = n - k
    return _path_count(m, c + k - 2) - _path_count(m, c + k), m + 1


def joint_point(q: WalkQuery) -> DyadicProb:
    """Exact probability of one (endpoint, visit count) cell.

    Total over its domain: off-parity or otherwise unreachable cells give
    exact zero.
    """
    num, expo = _joint_raw(q.n, q.z, q.x, q.k)
    return DyadicProb(num, expo)


@dataclass(frozen=True)
class JointTable:
    """Exact joint distribution of (endpoint, visit count) for fixed (n, z).

    Only reachable cells are stored; the entries sum to exactly 1.
    """

    n: int
    z: int
    entries: dict[tuple[int, int], DyadicProb]

    def items(self) -> list[tuple[tuple[int, int], DyadicProb]]:
        """Cells in lexicographic (x, k) order, for deterministic output."""
        return sorted(self.entries.items())

    def total(self) -> DyadicProb:
        return dyadic_sum(self.entries.values())

    def x_marginal(self) -> dict[int, DyadicProb]:
        sums: dict[int, list[DyadicProb]] = {}
        for (x, _), v in self.entries.items():
            sums.setdefault(x, []).append(v)
        return {x: dyadic_sum(vs) for x, vs in sorted(sums.items())}

    def k_marginal(self) -> dict[int, DyadicProb]:
        sums: dict[int, list[DyadicProb]] = {}
        for (_, k), v in self.entries.items():
            sums.setdefault(k, []).append(v)
        return {k: dyadic_sum(vs) for k, vs in sorted(sums.items())}

    def x_moments(self) -> tuple[Fraction, Fraction]:
        mean = Fraction(0)
        second = Fraction(0)
        for (x, _), v in self.entries.items():
            f = v.as_fraction()
            mean += x * f
            second += x * x * f
        return mean, second

    def k_moment(self, order: int) -> Fraction:
        return sum(
            (k**order * v.as_fraction() for (_, k), v in self.entries.items()),
            Fraction(0),
        )


@dataclass(frozen=True)
class SiteDist:
    """Exact endpoint distribution over the lattice {-n, -n+2, ..., n}."""

    n: int
    values: dict[int, DyadicProb]

    def total(self) -> DyadicProb:
        return dyadic_sum(self.values.values())


@dataclass(frozen=True)
class VisitDist:
    """Exact visit-count distribution at site z for an n-step walk."""

    n: int
    z: int
    values: dict[int, DyadicProb]

    def total(self) -> DyadicProb:
        return dyadic_sum(self.values.values())


def joint_table(n: int, z: int) -> JointTable:
    """Full joint law over the reachable (x, k) support; sums to exactly 1."""
    _require_steps(n)
    _require_site(z)
    entries: dict[tuple[int, int], DyadicProb] = {}
    for x in range(-n, n + 1, 2):
        num, expo = _joint_raw(n, z, x, 0)
        if num:
            entries[(x, 0)] = DyadicProb(num, expo)
        for k in range(1, max_visits(n, z, x) + 1):
            num, expo = _joint_raw(n, z, x, k)
            if num:
                entries[(x, k)] = DyadicProb(num, expo)
    return JointTable(n, z, entries)


def marginal_x(n: int, z: int) -> SiteDist:
    """Endpoint marginal of the joint law.

    Counting visits at z reveals nothing about the endpoint alone, so this
    is exactly the unconditioned endpoint distribution.
    """
    _require_steps(n)
    _require_site(z)
    values = {x: p_step(n, x) for x in range(-n, n + 1, 2)}
    return SiteDist(n, values)


def marginal_k(n: int, z: int) -> VisitDist:
    """Visit-count marginal, by the parity-split closed form.

    The k = 0 atom is the no-visit probability.  For k >= 1 the sum over
    endpoints telescopes to a single binomial row: row n-k when n-z is
    odd, row n+1-k when n-z is even.
    """
    _require_steps(n)
    _require_site(z)
    values: dict[int, DyadicProb] = {}
    atom = no_visit_prob(n, z)
    if atom:
        values[0] = atom
    odd = (n - z) % 2 == 1
    for k in range(1, max_visits(n, z) + 1):
        if odd:
            count, expo = _path_count(n - k, z + k - 1), n - k
        else:
            row = n + 1 - k
            count, expo = (
                math.comb(row, (n + z) // 2) if 0 <= (n + z) // 2 <= row else 0,
                row,
            )
        if count:
            values[k] = DyadicProb(count, expo)
    return VisitDist(n, z, values)


def moments_x(n: int, z: int) -> tuple[Fraction, Fraction]:
    """Mean and second moment of the endpoint, by direct exact summation."""
    dist = marginal_x(n, z)
    mean = Fraction(0)
    second = Fraction(0)
    for x, v in dist.values.items():
        f = v.as_fraction()
        mean += x * f
        second += x * x * f
    return mean, second


def moments_k(n: int, z: int, order: int) -> Fraction:
    """k-th visit-count moment (order 1 or 2), by direct exact summation."""
    if order not in (1, 2):
        raise ValueError(f"moment order must be 1 or 2, got {order}")
    dist = marginal_k(n, z)
    return sum(
        (k**order * v.as_fraction() for k, v in dist.values.items()), Fraction(0)
    )
