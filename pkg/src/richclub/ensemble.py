"""Degree-preserving null-model ensembles and normalized rich-club coefficients.

Replicates are seeded independently from (master_seed, replicate index), so
results are a pure function of the inputs and identical for any thread count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import _kernels_py, kernels
from ._seed import MASK64, derive_seed
from .errors import DegenerateGraphError, DomainError, RichClubError
from .graph import Graph
from .metrics import RichClubProfile, default_k_grid, profile

# Relative tolerance for the two-path identity checks on rho and rho_bar.
RHO_IDENTITY_RTOL = 1e-12


@dataclass(frozen=True)
class EnsembleConfig:
    """Null-ensemble parameters; defaults follow the standard 1000-replicate protocol."""

    size: int = 1000
    master_seed: int = 0
    swaps_per_edge: int = 10
    max_attempt_factor: int = 100
    strict_connected: bool = False

    def __post_init__(self):
        if self.size < 1:
            raise DomainError("ensemble size must be >= 1")
        if self.swaps_per_edge < 1:
            raise DomainError("swaps_per_edge must be >= 1")
        if self.max_attempt_factor < 1:
            raise DomainError("max_attempt_factor must be >= 1")


class Rewirer:
    """Mutable working copy of a graph for step-by-step degree-preserving swaps."""

    def __init__(self, g: Graph, seed: int = 0):
        if g.edge_count < 2:
            raise DegenerateGraphError("need at least 2 edges to swap")
        self._labels = g.labels
        self._us = [u for u, _ in g.edges]
        self._vs = [v for _, v in g.edges]
        self._edge_set = _kernels_py.build_edge_set(self._us, self._vs)
        self._state = seed & MASK64

    def swap(self) -> bool:
        """One swap proposal; True if it was applied, False if rejected."""
        applied, self._state = _kernels_py.swap_attempt(
            self._us, self._vs, self._edge_set, self._state
        )
        return applied

    def to_graph(self) -> Graph:
        return Graph(self._labels, zip(self._us, self._vs))


def double_edge_swap(rewirer: Rewirer) -> bool:
    """Propose one degree-preserving swap on a working graph."""
    return rewirer.swap()


def _edge_arrays(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    edges = np.asarray(g.edges, dtype=np.int64).reshape(g.edge_count, 2)
    return np.ascontiguousarray(edges[:, 0]), np.ascontiguousarray(edges[:, 1])


def _arrays_connected(n: int, u: np.ndarray, v: np.ndarray) -> bool:
    if n <= 1:
        return True
    adj: list[list[int]] = [[] for _ in range(n)]
    for a, b in zip(u.tolist(), v.tolist()):
        adj[a].append(b)
        adj[b].append(a)
    seen = [False] * n
    stack = [0]
    seen[0] = True
    reached = 1
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if not seen[y]:
                seen[y] = True
                reached += 1
                stack.append(y)
    return reached == n


def randomize(
    g: Graph,
    swaps_per_edge: int = 10,
    seed: int = 0,
    max_attempt_factor: int = 100,
) -> Graph:
    """Degree-preserving randomization of a whole graph.

    Runs until swaps_per_edge*M applied swaps or max_attempt_factor*M proposals.
    The result is simple, has the same degree sequence, and depends only on
    (graph, parameters, seed). Connectivity is not enforced.
    """
    if g.edge_count < 2:
        raise DegenerateGraphError("need at least 2 edges to randomize")
    u, v = _edge_arrays(g)
    kernels.randomize_edges(
        u,
        v,
        g.node_count,
        seed,
        swaps_per_edge * g.edge_count,
        max_attempt_factor * g.edge_count,
    )
    return Graph(g.labels, zip(u.tolist(), v.tolist()))


@dataclass(frozen=True)
class EnsembleTables:
    """Per-replicate dyad counts on a fixed threshold grid.

    m11 and m10 are (size x len(ks)) integer arrays; row r holds replicate r.
    """

    ks: tuple[int, ...]
    m11: np.ndarray
    m10: np.ndarray

    @property
    def size(self) -> int:
        return self.m11.shape[0]

    def column(self, k: int) -> int:
        try:
            return self.ks.index(k)
        except ValueError:
            raise DomainError(f"threshold k={k} not in ensemble grid") from None


def _replicate_counts(
    u0: np.ndarray,
    v0: np.ndarray,
    deg: np.ndarray,
    n_nodes: int,
    ks: np.ndarray,
    seed: int,
    target: int,
    max_attempts: int,
    strict: bool,
) -> tuple[np.ndarray, np.ndarray]:
    rep_seed = seed
    for retry in range(100):
        u = u0.copy()
        v = v0.copy()
        kernels.randomize_edges(u, v, n_nodes, rep_seed, target, max_attempts)
        if not strict or _arrays_connected(n_nodes, u, v):
            break
        rep_seed = derive_seed(seed, retry)
    else:
        raise RichClubError("strict connected mode: no connected replicate in 100 resamples")
    m = u.shape[0]
    lo = np.minimum(deg[u], deg[v])
    hi = np.maximum(deg[u], deg[v])
    lo.sort()
    hi.sort()
    m11 = m - np.searchsorted(lo, ks, side="right")
    both = m - np.searchsorted(hi, ks, side="right")
    return m11.astype(np.int64), (both - m11).astype(np.int64)


def generate_ensemble(
    g: Graph,
    cfg: EnsembleConfig,
    k_grid: Optional[Sequence[int]] = None,
    threads: Optional[int] = None,
) -> EnsembleTables:
    """Randomize ``cfg.size`` replicates and tabulate m11/m10 per threshold.

    Replicate r is seeded from (cfg.master_seed, r); the tables are identical
    for any ``threads`` value, including 1.
    """
    if g.edge_count < 2:
        raise DegenerateGraphError("need at least 2 edges to build an ensemble")
    ks = tuple(k_grid) if k_grid is not None else default_k_grid(g)
    ks_arr = np.asarray(ks, dtype=np.int64)
    u0, v0 = _edge_arrays(g)
    deg = np.zeros(g.node_count, dtype=np.int64)
    np.add.at(deg, u0, 1)
    np.add.at(deg, v0, 1)
    target = cfg.swaps_per_edge * g.edge_count
    max_attempts = cfg.max_attempt_factor * g.edge_count

    def run(r: int) -> tuple[np.ndarray, np.ndarray]:
        return _replicate_counts(
            u0,
            v0,
            deg,
            g.node_count,
            ks_arr,
            derive_seed(cfg.master_seed, r),
            target,
            max_attempts,
            cfg.strict_connected,
        )

    if threads is not None and threads > 1 and cfg.size > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run, range(cfg.size)))
    else:
        results = [run(r) for r in range(cfg.size)]

    m11 = np.stack([r11 for r11, _ in results])
    m10 = np.stack([r10 for _, r10 in results])
    return EnsembleTables(ks=ks, m11=m11, m10=m10)


def rho(m11_observed: int, tables: EnsembleTables, k: int) -> Optional[float]:
    """Observed m11 over the ensemble-mean m11; None when the mean is 0."""
    if tables.size == 0:
        raise DomainError("empty ensemble")
    mean = float(tables.m11[:, tables.column(k)].mean())
    if mean == 0.0:
        return None
    return m11_observed / mean


def rho_bar(m10_observed: int, tables: EnsembleTables, k: int) -> Optional[float]:
    """Observed m10 over the ensemble-mean m10; None when the mean is 0."""
    if tables.size == 0:
        raise DomainError("empty ensemble")
    mean = float(tables.m10[:, tables.column(k)].mean())
    if mean == 0.0:
        return None
    return m10_observed / mean


def rho_via_coefficients(
    observed: float, replicate_values: np.ndarray
) -> Optional[float]:
    """Normalization through the coefficient ratio (observed / mean of replicates)."""
    mean = float(np.mean(replicate_values))
    if mean == 0.0:
        return None
    return observed / mean


@dataclass(frozen=True)
class NormalizedPoint:
    k: int
    m11_ran_mean: float
    m11_ran_sd: float
    m10_ran_mean: float
    m10_ran_sd: float
    rho: Optional[float]
    rho_bar: Optional[float]


def _check_identity(name: str, k: int, direct: Optional[float], via: Optional[float]):
    if (direct is None) != (via is None):
        raise RichClubError(f"{name} identity violated at k={k}: one path undefined")
    if direct is None:
        return
    if abs(direct - via) > RHO_IDENTITY_RTOL * max(1.0, abs(direct)):
        raise RichClubError(
            f"{name} identity violated at k={k}: {direct!r} vs {via!r}"
        )


def normalized_profile(
    g: Graph,
    cfg: EnsembleConfig,
    k_grid: Optional[Sequence[int]] = None,
    threads: Optional[int] = None,
    rich_profile: Optional[RichClubProfile] = None,
    tables: Optional[EnsembleTables] = None,
) -> list[NormalizedPoint]:
    """One NormalizedPoint per threshold of the profile grid.

    Cross-checks the count-ratio and coefficient-ratio computation paths for
    both rho and rho_bar (they must agree because the bound denominators are
    degree-sequence invariants) and fails loudly if they disagree.
    """
    prof = rich_profile if rich_profile is not None else profile(g, k_grid)
    ks = prof.k_values
    if tables is None:
        tables = generate_ensemble(g, cfg, k_grid=ks, threads=threads)
    elif tables.ks != ks:
        raise DomainError("ensemble tables grid does not match the profile grid")

    out: list[NormalizedPoint] = []
    for col, point in enumerate(prof.points):
        col11 = tables.m11[:, col]
        col10 = tables.m10[:, col]
        r = rho(point.m11, tables, point.k)
        rb = rho_bar(point.m10, tables, point.k)
        if point.ub_m11 > 0:
            via = rho_via_coefficients(point.m11 / point.ub_m11, col11 / point.ub_m11)
            _check_identity("rho", point.k, r, via)
        if point.ub_m10 > 0:
            via = rho_via_coefficients(point.m10 / point.ub_m10, col10 / point.ub_m10)
            _check_identity("rho_bar", point.k, rb, via)
        out.append(
            NormalizedPoint(
                k=point.k,
                m11_ran_mean=float(col11.mean()),
                m11_ran_sd=float(col11.std()),
                m10_ran_mean=float(col10.mean()),
                m10_ran_sd=float(col10.std()),
                rho=r,
                rho_bar=rb,
            )
        )
    return out
