"""Exact face tests for polytopes given by a list of points.

A subset ``S`` of the points is the vertex set of a face exactly when some
linear functional is constant on ``S`` and strictly smaller on every other
point.  Scaling the functional makes the gap at least 1, so the test is the
LP feasibility question

    a . v - b == 0   for v in S,
    a . w - b <= -1  for w not in S.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .complex import SimplicialComplex, SkeletonGraph
from .lp import solve_int_system


def _validate(vertices: Sequence[Sequence[int]]) -> None:
    if len(set(map(tuple, vertices))) != len(vertices):
        raise ValueError("duplicate vertices")
    dims = {len(v) for v in vertices}
    if len(dims) > 1:
        raise ValueError("vertices of mixed dimension")


class _Points:
    """Vertex list plus lookup tables shared by repeated face tests."""

    def __init__(self, vertices: Sequence[Sequence[int]]):
        self.vertices = [tuple(v) for v in vertices]
        self.index = {v: k for k, v in enumerate(self.vertices)}
        cols = list(zip(*self.vertices))
        self.hi = [max(c) for c in cols]
        self.lo = [min(c) for c in cols]


def _box_witness(pts: _Points, S: frozenset[int]) -> tuple[tuple[int, ...], int, int] | None:
    """Try the functional of the smallest bounding-box face containing ``S``."""
    inside = [pts.vertices[k] for k in S]
    first = inside[0]
    a = []
    for i, x in enumerate(first):
        if pts.hi[i] != pts.lo[i] and all(v[i] == x for v in inside):
            a.append(1 if x == pts.hi[i] else -1 if x == pts.lo[i] else 0)
        else:
            a.append(0)
    b = sum(c * x for c, x in zip(a, first))
    for k, w in enumerate(pts.vertices):
        if k not in S and sum(c * x for c, x in zip(a, w)) > b - 1:
            return None
    return tuple(a), b, 1


def _midpoint_obstruction(pts: _Points, S: frozenset[int]) -> bool:
    """True if two points outside ``S`` have the same sum as two points of ``S``.

    Any functional constant on ``S`` and smaller off ``S`` would then give
    ``2b - 2 >= 2b``, so ``S`` is not the vertex set of a face.
    """
    inside = [pts.vertices[k] for k in sorted(S)]
    for s1, s2 in combinations(inside, 2):
        target = [x + y for x, y in zip(s1, s2)]
        for k, w in enumerate(pts.vertices):
            if k in S:
                continue
            j = pts.index.get(tuple(t - x for t, x in zip(target, w)))
            if j is not None and j not in S:
                return True
    return False


def _solve_face(pts: _Points, S: frozenset[int],
                shortcuts: bool = True) -> tuple[tuple[int, ...], int, int] | None:
    """Integer form of the face test: ``(a_num, b_num, den)`` or ``None``.

    With ``shortcuts`` two cheap exact certificates are tried before the LP;
    either way the returned functional is checked by substitution.
    """
    vertices = pts.vertices
    sol = None
    if shortcuts:
        sol = _box_witness(pts, S)
        if sol is None and len(S) <= 3 and _midpoint_obstruction(pts, S):
            return None
    if sol is None:
        sol = _lp_face(vertices, S)
        if sol is None:
            return None
    a, b, den = sol
    for k, v in enumerate(vertices):
        val = sum(c * x for c, x in zip(a, v))
        if (k in S and val != b) or (k not in S and val > b - den):
            raise AssertionError("face witness fails substitution")
    return sol


def _lp_face(vertices: Sequence[tuple[int, ...]],
             S: frozenset[int]) -> tuple[tuple[int, ...], int, int] | None:
    dim = len(vertices[0])
    rows = []
    bounds = []
    for k, v in enumerate(vertices):
        row = list(v) + [-1]
        if k in S:
            rows.append(row)
            bounds.append(0)
            rows.append([-x for x in row])
            bounds.append(0)
        else:
            rows.append(row)
            bounds.append(-1)
    sol = solve_int_system(rows, bounds, dim + 1)
    if not sol.feasible:
        return None
    return sol.numerators[:dim], sol.numerators[dim], sol.denominator


def face_witness(vertices: Sequence[Sequence[int]], S: Iterable[int], *,
                 shortcuts: bool = True) -> tuple[tuple[Fraction, ...], Fraction] | None:
    """A supporting functional ``(a, b)`` isolating ``S``, or ``None``.

    The returned pair satisfies ``a . v == b`` on ``S`` and
    ``a . w <= b - 1`` elsewhere, checked exactly before returning.
    """
    _validate(vertices)
    S = _check_indices(vertices, S)
    sol = _solve_face(_Points(vertices), S, shortcuts)
    if sol is None:
        return None
    a, b, den = sol
    return tuple(Fraction(x, den) for x in a), Fraction(b, den)


def _check_indices(vertices: Sequence[Sequence[int]], S: Iterable[int]) -> frozenset[int]:
    S = frozenset(S)
    if not S:
        raise ValueError("face test needs a nonempty subset")
    if any(not 0 <= k < len(vertices) for k in S):
        raise IndexError("vertex index out of range")
    return S


def is_face(vertices: Sequence[Sequence[int]], S: Iterable[int], *,
            shortcuts: bool = True) -> bool:
    _validate(vertices)
    return _solve_face(_Points(vertices), _check_indices(vertices, S), shortcuts) is not None


class FaceOracle:
    """Memoizing wrapper around :func:`is_face` for one vertex list."""

    def __init__(self, vertices: Sequence[Sequence[int]], *, shortcuts: bool = True):
        _validate(vertices)
        self._points = _Points(vertices)
        self.vertices = self._points.vertices
        self.shortcuts = shortcuts
        self._cache: dict[frozenset[int], bool] = {}
        self.calls = 0

    def __call__(self, S: Iterable[int]) -> bool:
        S = frozenset(S)
        hit = self._cache.get(S)
        if hit is None:
            self.calls += 1
            S = _check_indices(self.vertices, S)
            hit = _solve_face(self._points, S, self.shortcuts) is not None
            self._cache[S] = hit
        return hit


def affinely_independent(points: Sequence[Sequence[int]]) -> bool:
    """Exact rank test on the difference vectors (Bareiss elimination)."""
    if len(points) <= 1:
        return True
    base = points[0]
    M = [[x - y for x, y in zip(p, base)] for p in points[1:]]
    return _rank(M) == len(M)


def _rank(M: list[list[int]]) -> int:
    M = [list(r) for r in M]
    if not M:
        return 0
    ncols = len(M[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = next((i for i in range(rank, len(M)) if M[i][col] != 0), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        p = M[rank][col]
        for i in range(rank + 1, len(M)):
            f = M[i][col]
            M[i] = [(a * p - f * b) // prev for a, b in zip(M[i], M[rank])]
        prev = p
        rank += 1
        if rank == len(M):
            break
    return rank


def brute_force_skeleton(vertices: Sequence[Sequence[int]],
                         oracle: FaceOracle | None = None) -> SkeletonGraph:
    """Edge ``{i, j}`` whenever ``conv{v_i, v_j}`` is a face."""
    _validate(vertices)
    if len(vertices) < 2:
        raise ValueError("a skeleton needs at least two vertices")
    oracle = oracle or FaceOracle(vertices)
    edges = frozenset(
        (i, j) for i, j in combinations(range(len(vertices)), 2) if oracle((i, j))
    )
    return SkeletonGraph(len(vertices), edges)


def simplicial_faces(vertices: Sequence[Sequence[int]],
                     oracle: FaceOracle | None = None) -> SimplicialComplex:
    """All faces whose vertex sets are affinely independent.

    Candidates of size ``k + 1`` are only formed from size-``k`` faces all of
    whose ``k``-subsets are faces, since every subset of a simplex face spans
    a face too.
    """
    _validate(vertices)
    oracle = oracle or FaceOracle(vertices)
    level = [(k,) for k in range(len(vertices)) if oracle((k,))]
    found = list(level)
    while level:
        present = set(level)
        candidates = []
        # join faces sharing all but their last element
        for a, b in combinations(level, 2):
            if a[:-1] != b[:-1]:
                continue
            cand = a + (b[-1],)
            if all(cand[:i] + cand[i + 1:] in present for i in range(len(cand) - 2)):
                candidates.append(cand)
        candidates.sort()
        level = [
            c for c in candidates
            if affinely_independent([vertices[k] for k in c]) and oracle(c)
        ]
        found.extend(level)
    cx = SimplicialComplex.from_faces(len(vertices), found)
    if set(map(frozenset, found)) != set(cx.faces()):
        raise AssertionError("simplicial faces are not closed under subsets")
    return cx
