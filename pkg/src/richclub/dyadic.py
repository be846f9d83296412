"""Expected dyad counts, dyadicity/heterophilicity and upper bounds on dyad counts."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, UndefinedRatioError
from .graph import DegreeSequence, DyadCounts, Graph, density


@dataclass(frozen=True)
class DyadExpectation:
    """Expected 1-1 and 1-0 edge counts under random placement of n1 ones."""

    expected_m11: Fraction
    expected_m10: Fraction


@dataclass(frozen=True)
class DyadBounds:
    """Basic and degree-sequence-refined upper bounds on m11 and m10."""

    ub_m11_basic: int
    ub_m10_basic: int
    ub_m11: int
    ub_m10: int


def expected_dyads(g: Graph, n1: int) -> DyadExpectation:
    """Expected (m11, m10) when n1 of the N nodes carry the characteristic at random.

    Exact rationals: C(n1,2)*delta and n1*(N-n1)*delta with delta = 2M/N(N-1).
    """
    n = g.node_count
    if not 0 <= n1 <= n:
        raise DomainError(f"n1={n1} outside 0..{n}")
    delta = density(g)  # raises for N < 2
    return DyadExpectation(
        expected_m11=Fraction(n1 * (n1 - 1), 2) * delta,
        expected_m10=Fraction(n1 * (n - n1)) * delta,
    )


def dyadicity(counts: DyadCounts, exp: DyadExpectation) -> float:
    """Observed over expected 1-1 edges."""
    if exp.expected_m11 <= 0:
        raise UndefinedRatioError("dyadicity undefined: expected m11 is zero (n1 < 2 or M = 0)")
    return counts.m11 / float(exp.expected_m11)


def heterophilicity(counts: DyadCounts, exp: DyadExpectation) -> float:
    """Observed over expected 1-0 edges."""
    if exp.expected_m10 <= 0:
        raise UndefinedRatioError(
            "heterophilicity undefined: expected m10 is zero (n1 in {0, N} or M = 0)"
        )
    return counts.m10 / float(exp.expected_m10)


def ub_m11_basic(g: Graph, n1: int) -> int:
    """min(M, C(n1, 2))."""
    _check_n1(g.node_count, n1)
    return min(g.edge_count, n1 * (n1 - 1) // 2)


def ub_m10_basic(g: Graph, n1: int) -> int:
    """min(M, n1 * n0)."""
    _check_n1(g.node_count, n1)
    return min(g.edge_count, n1 * (g.node_count - n1))


def ub_m11(ds: DegreeSequence, n1: int) -> int:
    """Degree-sequence bound on 1-1 edges.

    min(M, C(n1,2), ceil(sum over the n1 highest degrees of min(d_i, n1-1) / 2)).
    The ceiling is taken once, over the half-sum, in exact integer arithmetic.
    """
    _check_n1(len(ds), n1)
    m = ds.total // 2
    if n1 < 2:
        return 0
    half_sum = sum(min(d, n1 - 1) for d in ds.head(n1))
    return min(m, n1 * (n1 - 1) // 2, (half_sum + 1) // 2)


def ub_m10(ds: DegreeSequence, n1: int) -> int:
    """Degree-sequence bound on 1-0 edges.

    min(M, n1*n0, min(sum over head(n1) of min(d_i, n0),
                      sum over head(n0) of min(d_i, n1))).
    """
    _check_n1(len(ds), n1)
    n0 = len(ds) - n1
    m = ds.total // 2
    if n1 == 0 or n0 == 0:
        return 0
    star_1 = sum(min(d, n0) for d in ds.head(n1))
    star_0 = sum(min(d, n1) for d in ds.head(n0))
    return min(m, n1 * n0, star_1, star_0)


def dyad_bounds(g: Graph, ds: DegreeSequence, n1: int) -> DyadBounds:
    return DyadBounds(
        ub_m11_basic=ub_m11_basic(g, n1),
        ub_m10_basic=ub_m10_basic(g, n1),
        ub_m11=ub_m11(ds, n1),
        ub_m10=ub_m10(ds, n1),
    )


def _check_n1(n: int, n1: int):
    if not 0 <= n1 <= n:
        raise DomainError(f"n1={n1} outside 0..{n}")
