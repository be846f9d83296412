"""Undirected simple graph, degree sequences, node characteristics and dyad counts."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import (
    DisconnectedGraphError,
    DomainError,
    DuplicateEdgeError,
    EdgeListParseError,
    SelfLoopError,
)


class Graph:
    """Immutable undirected simple graph with string labels and dense 0-based indices.

    No self-loops, no duplicate edges; adjacency is symmetric. The degree sum
    equals twice the edge count for every instance.
    """

    __slots__ = ("_labels", "_index", "_adj", "_edges")

    def __init__(self, labels: Sequence[str], edges: Iterable[tuple[int, int]]):
        labels = tuple(str(x) for x in labels)
        if len(set(labels)) != len(labels):
            raise DomainError("node labels must be unique")
        n = len(labels)
        adj: list[set[int]] = [set() for _ in range(n)]
        edge_list: list[tuple[int, int]] = []
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge ({u}, {v}) references a node outside 0..{n - 1}")
            if u == v:
                raise SelfLoopError(f"self-loop at node {labels[u]!r}")
            a, b = (u, v) if u < v else (v, u)
            if b in adj[a]:
                raise DuplicateEdgeError(f"duplicate edge {labels[a]!r} -- {labels[b]!r}")
            adj[a].add(b)
            adj[b].add(a)
            edge_list.append((a, b))
        self._labels = labels
        self._index = {lab: i for i, lab in enumerate(labels)}
        self._adj = tuple(tuple(sorted(s)) for s in adj)
        self._edges = tuple(edge_list)

    @property
    def node_count(self) -> int:
        return len(self._labels)

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    @property
    def labels(self) -> tuple[str, ...]:
        return self._labels

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as (u, v) index pairs with u < v, in insertion order."""
        return self._edges

    def neighbors(self, i: int) -> tuple[int, ...]:
        return self._adj[i]

    def degree(self, i: int) -> int:
        return len(self._adj[i])

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self._adj)

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    def index_of(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise DomainError(f"unknown node label {label!r}") from None

    def label_of(self, i: int) -> str:
        return self._labels[i]

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return v in self._adj[u]

    def is_connected(self) -> bool:
        n = self.node_count
        if n <= 1:
            return True
        seen = [False] * n
        seen[0] = True
        queue = deque([0])
        reached = 1
        while queue:
            x = queue.popleft()
            for y in self._adj[x]:
                if not seen[y]:
                    seen[y] = True
                    reached += 1
                    queue.append(y)
        return reached == n

    def __repr__(self) -> str:
        return f"Graph(N={self.node_count}, M={self.edge_count})"


def load_edge_list(source: Iterable[str], allow_disconnected: bool = False) -> Graph:
    """Build a Graph from lines of two whitespace-separated labels.

    Lines starting with '#' and blank lines are skipped. Node indices are
    assigned in order of first appearance. Self-loops and duplicate edges are
    hard errors; a disconnected graph is rejected unless ``allow_disconnected``.
    """
    labels: list[str] = []
    index: dict[str, int] = {}
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(source, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListParseError(
                f"expected two whitespace-separated node labels, got {len(parts)}", lineno
            )
        a_lab, b_lab = parts
        if a_lab == b_lab:
            raise SelfLoopError(f"line {lineno}: self-loop {a_lab!r} -- {b_lab!r}")
        for lab in (a_lab, b_lab):
            if lab not in index:
                index[lab] = len(labels)
                labels.append(lab)
        a, b = index[a_lab], index[b_lab]
        key = (a, b) if a < b else (b, a)
        if key in seen:
            raise DuplicateEdgeError(f"line {lineno}: duplicate edge {a_lab!r} -- {b_lab!r}")
        seen.add(key)
        edges.append(key)
    g = Graph(labels, edges)
    if not allow_disconnected and not g.is_connected():
        raise DisconnectedGraphError(
            "graph is not connected (pass allow_disconnected to accept it)"
        )
    return g


def read_edge_list(path, allow_disconnected: bool = False) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return load_edge_list(fh, allow_disconnected=allow_disconnected)


@dataclass(frozen=True)
class DegreeSequence:
    """Node degrees in non-increasing order, with an optional back-map to node indices."""

    degrees: tuple[int, ...]
    origin: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        if any(self.degrees[i] < self.degrees[i + 1] for i in range(len(self.degrees) - 1)):
            raise DomainError("degree sequence must be non-increasing")
        if self.origin is not None and len(self.origin) != len(self.degrees):
            raise DomainError("origin map length must match sequence length")

    def __len__(self) -> int:
        return len(self.degrees)

    def __getitem__(self, i):
        return self.degrees[i]

    def __iter__(self):
        return iter(self.degrees)

    def head(self, n: int) -> "DegreeSequence":
        """First n elements (the n highest degrees)."""
        self._check_bounds(n)
        org = self.origin[:n] if self.origin is not None else None
        return DegreeSequence(self.degrees[:n], org)

    def tail(self, n: int) -> "DegreeSequence":
        """Last n elements (the n lowest degrees)."""
        self._check_bounds(n)
        if n == 0:
            return DegreeSequence((), () if self.origin is not None else None)
        org = self.origin[-n:] if self.origin is not None else None
        return DegreeSequence(self.degrees[-n:], org)

    def _check_bounds(self, n: int):
        if not 0 <= n <= len(self.degrees):
            raise DomainError(f"subsequence length {n} outside 0..{len(self.degrees)}")

    @property
    def total(self) -> int:
        return sum(self.degrees)


def degree_sequence(g: Graph) -> DegreeSequence:
    """Degrees sorted non-increasing; ties broken by ascending node index."""
    order = sorted(range(g.node_count), key=lambda i: (-g.degree(i), i))
    return DegreeSequence(tuple(g.degree(i) for i in order), tuple(order))


@dataclass(frozen=True)
class Characteristic:
    """Binary per-node labeling; n1 counts 1-nodes, n0 counts 0-nodes."""

    values: tuple[int, ...]

    def __post_init__(self):
        if any(v not in (0, 1) for v in self.values):
            raise DomainError("characteristic values must be 0 or 1")

    @property
    def n1(self) -> int:
        return sum(self.values)

    @property
    def n0(self) -> int:
        return len(self.values) - self.n1


def characteristic_from_threshold(g: Graph, k: int) -> Characteristic:
    """Flag nodes whose degree exceeds k."""
    return Characteristic(tuple(1 if g.degree(i) > k else 0 for i in range(g.node_count)))


def characteristic_top_n(g: Graph, n1: int, mode: str = "highest") -> Characteristic:
    """Flag exactly n1 nodes by degree rank; ties broken by ascending node index."""
    if not 0 <= n1 <= g.node_count:
        raise DomainError(f"n1={n1} outside 0..{g.node_count}")
    if mode not in ("highest", "lowest"):
        raise DomainError(f"mode must be 'highest' or 'lowest', got {mode!r}")
    sign = -1 if mode == "highest" else 1
    order = sorted(range(g.node_count), key=lambda i: (sign * g.degree(i), i))
    chosen = set(order[:n1])
    return Characteristic(tuple(1 if i in chosen else 0 for i in range(g.node_count)))


@dataclass(frozen=True)
class DyadCounts:
    """Edge counts by dyad class: 1-1, 1-0 and 0-0."""

    m11: int
    m10: int
    m00: int

    @property
    def total(self) -> int:
        return self.m11 + self.m10 + self.m00


def count_dyads(g: Graph, c: Characteristic) -> DyadCounts:
    if len(c.values) != g.node_count:
        raise DomainError("characteristic must cover every node")
    m11 = m10 = m00 = 0
    vals = c.values
    for u, v in g.edges:
        s = vals[u] + vals[v]
        if s == 2:
            m11 += 1
        elif s == 1:
            m10 += 1
        else:
            m00 += 1
    return DyadCounts(m11, m10, m00)


def density(g: Graph) -> Fraction:
    """Edge density 2M / N(N-1) as an exact rational."""
    n = g.node_count
    if n < 2:
        raise DomainError("density undefined for graphs with fewer than 2 nodes")
    return Fraction(2 * g.edge_count, n * (n - 1))


def is_graphic(seq: Sequence[int]) -> bool:
    """Erdős–Gallai test: can ``seq`` be the degree sequence of a simple graph?"""
    d = sorted(seq, reverse=True)
    if any(x < 0 for x in d):
        raise DomainError("degrees must be nonnegative")
    n = len(d)
    if n == 0:
        return True
    if d[0] >= n:
        return False
    if sum(d) % 2 != 0:
        return False
    prefix = 0
    for k in range(1, n + 1):
        prefix += d[k - 1]
        slack = k * (k - 1) + sum(min(k, d[i]) for i in range(k, n))
        if prefix > slack:
            return False
    return True
