"""Per-threshold rich-club coefficients and profile assembly.

All coefficients return None at degenerate thresholds (empty or single-node
club, zero upper bound). None is a first-class "undefined" value; downstream
serialization must emit gaps, never zeros.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .dyadic import ub_m10, ub_m11
from .errors import DomainError
from .graph import (
    Characteristic,
    DegreeSequence,
    Graph,
    characteristic_from_threshold,
    count_dyads,
    degree_sequence,
)


@dataclass(frozen=True)
class RichClubPoint:
    k: int
    n1: int
    n0: int
    m11: int
    m10: int
    m00: int
    ub_m11: int
    ub_m10: int
    phi: Optional[float]
    phi_new: Optional[float]
    phi_bar: Optional[float]
    delta: Optional[float]


@dataclass(frozen=True)
class RichClubProfile:
    points: tuple[RichClubPoint, ...]
    node_count: int
    edge_count: int
    max_degree: int

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)

    @property
    def k_values(self) -> tuple[int, ...]:
        return tuple(p.k for p in self.points)


def phi(g: Graph, k: int) -> Optional[float]:
    """Fraction of realized club-internal edges out of C(n1, 2); None if n1 < 2.

    Computed both as 2*m11/(n1*(n1-1)) and as m11/C(n1,2); the two forms are
    asserted identical.
    """
    c = characteristic_from_threshold(g, k)
    n1 = c.n1
    if n1 < 2:
        return None
    m11 = count_dyads(g, c).m11
    classic = 2 * m11 / (n1 * (n1 - 1))
    via_dyads = m11 / (n1 * (n1 - 1) // 2)
    assert classic == via_dyads
    return classic


def phi_new(g: Graph, k: int) -> Optional[float]:
    """Club-internal edges over the degree-sequence bound; None when the bound is 0."""
    c = characteristic_from_threshold(g, k)
    ub = ub_m11(degree_sequence(g), c.n1)
    if ub == 0:
        return None
    return count_dyads(g, c).m11 / ub


def phi_bar(g: Graph, k: int) -> Optional[float]:
    """Feeder edges over their degree-sequence bound; None when the bound is 0."""
    c = characteristic_from_threshold(g, k)
    ub = ub_m10(degree_sequence(g), c.n1)
    if ub == 0:
        return None
    return count_dyads(g, c).m10 / ub


def delta_k(g: Graph, k: int) -> Optional[float]:
    """Relative gain of the refined coefficient: (phi_new - phi) / phi_new.

    0 when both coefficients are 0; None when either is undefined.
    """
    return _delta(phi(g, k), phi_new(g, k))


def _delta(p: Optional[float], p_new: Optional[float]) -> Optional[float]:
    if p is None or p_new is None:
        return None
    if p_new == 0.0:
        return 0.0
    return (p_new - p) / p_new


def default_k_grid(g: Graph) -> tuple[int, ...]:
    """Thresholds where the club changes: 0 plus every distinct degree below the maximum.

    Each distinct non-degenerate club size is evaluated exactly once; the empty
    club at k = max degree is omitted.
    """
    distinct = set(g.degrees)
    if not distinct:
        return ()
    distinct.discard(max(distinct))
    distinct.add(0)
    return tuple(sorted(distinct))


def profile_point(g: Graph, ds: DegreeSequence, k: int) -> RichClubPoint:
    c = characteristic_from_threshold(g, k)
    counts = count_dyads(g, c)
    n1 = c.n1
    ub11 = ub_m11(ds, n1)
    ub10 = ub_m10(ds, n1)
    p = 2 * counts.m11 / (n1 * (n1 - 1)) if n1 >= 2 else None
    p_new = counts.m11 / ub11 if ub11 > 0 else None
    p_bar = counts.m10 / ub10 if ub10 > 0 else None
    return RichClubPoint(
        k=k,
        n1=n1,
        n0=c.n0,
        m11=counts.m11,
        m10=counts.m10,
        m00=counts.m00,
        ub_m11=ub11,
        ub_m10=ub10,
        phi=p,
        phi_new=p_new,
        phi_bar=p_bar,
        delta=_delta(p, p_new),
    )


def profile(g: Graph, k_grid: Optional[Sequence[int]] = None) -> RichClubProfile:
    """One RichClubPoint per threshold, ascending k.

    The default grid covers every distinct club once; an explicit grid must be
    sorted ascending with values in [0, max degree].
    """
    max_deg = g.max_degree
    if k_grid is None:
        ks = default_k_grid(g)
    else:
        ks = tuple(k_grid)
        if any(ks[i] >= ks[i + 1] for i in range(len(ks) - 1)):
            raise DomainError("k grid must be strictly increasing")
        if ks and (ks[0] < 0 or ks[-1] > max_deg):
            raise DomainError(f"k grid values must lie in 0..{max_deg}")
    ds = degree_sequence(g)
    points = tuple(profile_point(g, ds, k) for k in ks)
    return RichClubProfile(
        points=points,
        node_count=g.node_count,
        edge_count=g.edge_count,
        max_degree=max_deg,
    )
