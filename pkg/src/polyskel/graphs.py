"""Finite simple graphs on ``{0, ..., n-1}``."""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import ParseError


def canonical_key(subset: Iterable[int]) -> tuple[int, tuple[int, ...]]:
    """Sort key for vertex subsets: size first, then sorted members."""
    members = tuple(sorted(subset))
    return len(members), members


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    edges: frozenset[tuple[int, int]] = frozenset()
    adj: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"graph size must be non-negative, got {self.n}")
        norm = set()
        adj = [0] * self.n
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            norm.add((min(u, v), max(u, v)))
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "edges", frozenset(norm))
        object.__setattr__(self, "adj", tuple(adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> SimpleGraph:
        edges = list(edges)
        seen = set()
        for u, v in edges:
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
        return cls(n, frozenset(edges))

    @classmethod
    def cycle(cls, n: int) -> SimpleGraph:
        return cls(n, frozenset((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def path(cls, n: int) -> SimpleGraph:
        return cls(n, frozenset((i, i + 1) for i in range(n - 1)))

    @classmethod
    def complete(cls, n: int) -> SimpleGraph:
        return cls(n, frozenset(itertools.combinations(range(n), 2)))

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, u: int) -> frozenset[int]:
        return frozenset(v for v in range(self.n) if self.adj[u] >> v & 1)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def complement(self) -> SimpleGraph:
        return SimpleGraph(
            self.n,
            frozenset(
                (u, v)
                for u, v in itertools.combinations(range(self.n), 2)
                if not self.adjacent(u, v)
            ),
        )


def _check_subset(G: SimpleGraph, S: Iterable[int]) -> frozenset[int]:
    S = frozenset(S)
    for v in S:
        if not 0 <= v < G.n:
            raise IndexError(f"vertex {v} out of range for n={G.n}")
    return S


def is_stable(G: SimpleGraph, S: Iterable[int]) -> bool:
    S = _check_subset(G, S)
    return not any(G.adjacent(u, v) for u, v in itertools.combinations(S, 2))


def enumerate_stable_sets(G: SimpleGraph) -> list[frozenset[int]]:
    """All stable sets of ``G`` (including the empty set), canonically ordered."""
    out: list[frozenset[int]] = []

    def extend(current: list[int], start: int, forbidden: int) -> None:
        out.append(frozenset(current))
        for v in range(start, G.n):
            if not forbidden >> v & 1:
                current.append(v)
                extend(current, v + 1, forbidden | G.adj[v])
                current.pop()

    extend([], 0, 0)
    out.sort(key=canonical_key)
    return out


def maximal_cliques(G: SimpleGraph) -> list[frozenset[int]]:
    """Inclusion-maximal cliques by Bron-Kerbosch with Tomita pivoting."""
    out: list[frozenset[int]] = []

    def expand(R: list[int], P: int, X: int) -> None:
        if not P and not X:
            out.append(frozenset(R))
            return
        # pivot maximizing |P & N(u)|
        pivot = max(_bits(P | X), key=lambda u: bin(P & G.adj[u]).count("1"))
        for v in _bits(P & ~G.adj[pivot]):
            R.append(v)
            expand(R, P & G.adj[v], X & G.adj[v])
            R.pop()
            P &= ~(1 << v)
            X |= 1 << v

    if G.n:
        expand([], (1 << G.n) - 1, 0)
    out.sort(key=canonical_key)
    return out


def _bits(mask: int) -> list[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def induced_subgraph(G: SimpleGraph, S: Iterable[int]) -> tuple[SimpleGraph, tuple[int, ...]]:
    """Subgraph induced on ``S``, relabeled to ``0..|S|-1``.

    The second item maps new labels back to the original vertices.
    """
    labels = tuple(sorted(_check_subset(G, S)))
    index = {v: k for k, v in enumerate(labels)}
    edges = frozenset(
        (index[u], index[v]) for u, v in G.edges if u in index and v in index
    )
    return SimpleGraph(len(labels), edges), labels


def is_connected(G: SimpleGraph) -> bool:
    if G.n == 0:
        return False
    seen = 1
    frontier = 1
    while frontier:
        reach = 0
        for u in _bits(frontier):
            reach |= G.adj[u]
        frontier = reach & ~seen
        seen |= frontier
    return seen == (1 << G.n) - 1


def is_connected_bipartite(G: SimpleGraph) -> bool:
    """Connected with no odd cycle.  The graph on zero vertices is not connected."""
    if G.n == 0:
        return False
    color = [-1] * G.n
    color[0] = 0
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v in _bits(G.adj[u]):
            if color[v] < 0:
                color[v] = 1 - color[u]
                queue.append(v)
            elif color[v] == color[u]:
                return False
    return all(c >= 0 for c in color)


def symmetric_difference(W: Iterable[int], W2: Iterable[int]) -> frozenset[int]:
    return frozenset(W) ^ frozenset(W2)


def _has_odd_hole(G: SimpleGraph) -> bool:
    for k in range(5, G.n + 1, 2):
        for S in itertools.combinations(range(G.n), k):
            mask = 0
            for v in S:
                mask |= 1 << v
            if all(bin(G.adj[v] & mask).count("1") == 2 for v in S):
                H, _ = induced_subgraph(G, S)
                if is_connected(H):
                    return True
    return False


@lru_cache(maxsize=4096)
def is_perfect(G: SimpleGraph) -> bool:
    """No induced odd cycle of length >= 5 in ``G`` or its complement.

    Exhaustive over vertex subsets; meant for graphs with about a dozen
    vertices at most.
    """
    return not _has_odd_hole(G) and not _has_odd_hole(G.complement())


def all_graphs(n: int) -> Iterator[SimpleGraph]:
    """Every labeled simple graph on ``range(n)``."""
    pairs = list(itertools.combinations(range(n), 2))
    for m in range(1 << len(pairs)):
        yield SimpleGraph(n, frozenset(p for k, p in enumerate(pairs) if m >> k & 1))


def format_graph(G: SimpleGraph) -> str:
    lines = [f"graph {G.n}"]
    lines += [f"{u + 1} {v + 1}" for u, v in G.sorted_edges()]
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> SimpleGraph:
    """Parse the ``graph <n>`` format: one ``i j`` edge per line, 1-indexed."""
    n = None
    edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "graph":
                raise ParseError("expected header 'graph <n>'", lineno)
            n = _parse_int(parts[1], lineno)
            if n < 1:
                raise ParseError("graph size must be positive", lineno)
            continue
        if len(parts) != 2:
            raise ParseError("expected 'i j'", lineno)
        u, v = (_parse_int(p, lineno) - 1 for p in parts)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range 1..{n}", lineno)
        if u == v:
            raise ParseError("loop", lineno)
        key = (min(u, v), max(u, v))
        if key in edges:
            raise ParseError("duplicate edge", lineno)
        edges.add(key)
    if n is None:
        raise ParseError("empty input", 1)
    return SimpleGraph(n, frozenset(edges))


def _parse_int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"not an integer: {tok!r}", lineno) from None
