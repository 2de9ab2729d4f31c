"""Finite posets on ``{0, ..., d-1}``: ideals, Hasse diagrams, antichains.

Elements are 0-indexed in the Python API.  The text format used by the CLI is
1-indexed (see :func:`parse_poset`).
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import ParseError
from .graphs import SimpleGraph, _parse_int, canonical_key

def _mask(subset: Iterable[int]) -> int:
    m = 0
    for i in subset:
        m |= 1 << i
    return m


def _members(mask: int) -> frozenset[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


@dataclass(frozen=True)
class Poset:
    """A strict partial order on ``range(d)``.

    ``relations`` may be any acyclic set of pairs ``(i, j)`` meaning
    ``p_i < p_j``; the transitive closure is taken on construction.
    """

    d: int
    relations: frozenset[tuple[int, int]] = frozenset()
    below: tuple[int, ...] = field(init=False, repr=False, compare=False)
    above: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.d < 0:
            raise ValueError(f"poset size must be non-negative, got {self.d}")
        below = [0] * self.d
        for i, j in self.relations:
            if not (0 <= i < self.d and 0 <= j < self.d):
                raise ValueError(f"relation ({i}, {j}) out of range for d={self.d}")
            if i == j:
                raise ValueError(f"loop on element {i}")
            below[j] |= 1 << i
        # Warshall closure on bitmasks
        for k in range(self.d):
            bit = 1 << k
            for j in range(self.d):
                if below[j] & bit:
                    below[j] |= below[k]
        for j in range(self.d):
            if below[j] >> j & 1:
                raise ValueError("relations contain a cycle")
        above = [0] * self.d
        for j in range(self.d):
            for i in _members(below[j]):
                above[i] |= 1 << j
        closed = frozenset((i, j) for j in range(self.d) for i in _members(below[j]))
        object.__setattr__(self, "relations", closed)
        object.__setattr__(self, "below", tuple(below))
        object.__setattr__(self, "above", tuple(above))

    @classmethod
    def chain(cls, d: int) -> Poset:
        return cls(d, frozenset((i, i + 1) for i in range(d - 1)))

    @classmethod
    def antichain(cls, d: int) -> Poset:
        return cls(d)

    def less(self, i: int, j: int) -> bool:
        return bool(self.below[j] >> i & 1)

    def comparable(self, i: int, j: int) -> bool:
        return self.less(i, j) or self.less(j, i)

    def less_table(self) -> list[list[bool]]:
        return [[self.less(i, j) for j in range(self.d)] for i in range(self.d)]

    def minimal(self) -> list[int]:
        return [i for i in range(self.d) if not self.below[i]]

    def maximal(self) -> list[int]:
        return [i for i in range(self.d) if not self.above[i]]

    def covers(self) -> list[tuple[int, int]]:
        """Cover pairs ``(i, j)`` with ``p_i`` covered by ``p_j``, sorted."""
        out = []
        for i, j in sorted(self.relations):
            between = self.above[i] & self.below[j]
            if not between:
                out.append((i, j))
        return out


def _check_subset(P: Poset, S: Iterable[int]) -> frozenset[int]:
    S = frozenset(S)
    for i in S:
        if not 0 <= i < P.d:
            raise IndexError(f"element {i} out of range for d={P.d}")
    return S


def is_ideal(P: Poset, S: Iterable[int]) -> bool:
    S = _check_subset(P, S)
    m = _mask(S)
    return all(P.below[i] & ~m == 0 for i in S)


def enumerate_ideals(P: Poset) -> list[frozenset[int]]:
    """All down-sets of ``P``, ordered by size and then lexicographically."""
    # grow ideals by adding elements whose down-set is already present
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for m in frontier:
            for i in range(P.d):
                if not m >> i & 1 and P.below[i] & ~m == 0:
                    m2 = m | 1 << i
                    if m2 not in seen:
                        seen.add(m2)
                        nxt.append(m2)
        frontier = nxt
    ideals = [_members(m) for m in seen]
    ideals.sort(key=canonical_key)
    return ideals


def hasse_edges(P: Poset) -> list[tuple[int, int]]:
    """Edges of the Hasse diagram as sorted pairs ``(lower, upper)``."""
    return P.covers()


def is_connected_in_poset(P: Poset, S: Iterable[int]) -> bool:
    """Connectivity of the Hasse diagram of ``P`` restricted to ``S``."""
    S = _check_subset(P, S)
    if not S:
        raise ValueError("connectivity of the empty subset is undefined")
    adj: dict[int, list[int]] = {i: [] for i in S}
    for i, j in P.covers():
        if i in S and j in S:
            adj[i].append(j)
            adj[j].append(i)
    start = min(S)
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return len(seen) == len(S)


def comparability_graph(P: Poset) -> SimpleGraph:
    return SimpleGraph(P.d, frozenset(P.relations))


def antichains(P: Poset) -> list[frozenset[int]]:
    out = []
    for m in range(1 << P.d):
        S = _members(m)
        if all(not P.comparable(i, j) for i in S for j in S if i < j):
            out.append(S)
    out.sort(key=canonical_key)
    return out


def all_posets(d: int) -> Iterator[Poset]:
    """Every labeled poset on ``range(d)``, in a fixed order.

    Built by inserting element ``d-1`` into each poset on ``d-1`` elements
    below an ideal ``D`` and above a filter ``U`` with ``D < U`` elementwise.
    """
    if d == 0:
        yield Poset(0)
        return
    k = d - 1
    for Q in all_posets(k):
        ideals = [_mask(I) for I in enumerate_ideals(Q)]
        full = (1 << k) - 1
        filters = [full & ~m for m in ideals]
        for D in ideals:
            for U in filters:
                if D & U:
                    continue
                if any(U & ~Q.above[a] for a in _members(D)):
                    continue
                rel = set(Q.relations)
                rel.update((a, k) for a in _members(D))
                rel.update((k, b) for b in _members(U))
                yield Poset(d, frozenset(rel))


def random_poset(d: int, rng: random.Random, density: float = 0.5) -> Poset:
    """Random DAG under a random labeling, then transitive closure."""
    order = list(range(d))
    rng.shuffle(order)
    rel = set()
    for a in range(d):
        for b in range(a + 1, d):
            if rng.random() < density:
                rel.add((order[a], order[b]))
    return Poset(d, frozenset(rel))


def format_poset(P: Poset) -> str:
    lines = [f"poset {P.d}"]
    lines += [f"{i + 1} {j + 1}" for i, j in P.covers()]
    return "\n".join(lines) + "\n"


def parse_poset(text: str) -> Poset:
    """Parse the ``poset <d>`` format: one ``i j`` cover per line, 1-indexed.

    Duplicate pairs, loops and cycles raise :class:`ParseError` carrying the
    offending line number.
    """
    d = None
    rel: set[tuple[int, int]] = set()
    below: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if d is None:
            if len(parts) != 2 or parts[0] != "poset":
                raise ParseError("expected header 'poset <d>'", lineno)
            d = _parse_int(parts[1], lineno)
            if d < 1:
                raise ParseError("poset size must be positive", lineno)
            below = [0] * d
            continue
        if len(parts) != 2:
            raise ParseError("expected 'i j'", lineno)
        i, j = (_parse_int(p, lineno) - 1 for p in parts)
        if not (0 <= i < d and 0 <= j < d):
            raise ParseError(f"element out of range 1..{d}", lineno)
        if i == j:
            raise ParseError("loop", lineno)
        if (i, j) in rel:
            raise ParseError("duplicate cover", lineno)
        if below[i] >> j & 1:
            raise ParseError("cover creates a cycle", lineno)
        rel.add((i, j))
        # keep ``below`` transitively closed as pairs arrive
        add = below[i] | 1 << i
        for x in range(d):
            if x == j or below[x] >> j & 1:
                below[x] |= add
    if d is None:
        raise ParseError("empty input", 1)
    return Poset(d, frozenset(rel))
