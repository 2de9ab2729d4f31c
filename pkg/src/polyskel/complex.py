"""Skeleton graphs, clique complexes and the per-instance verification report."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Callable, Iterable, Sequence

from .geometry import Hyperplane, vertices_on_system
from .graphs import SimpleGraph, canonical_key, maximal_cliques


@dataclass(frozen=True)
class SkeletonGraph:
    """A graph on vertex indices ``0..n-1`` with optional per-vertex labels."""

    n: int
    edges: frozenset[tuple[int, int]]
    labels: tuple = ()

    def __post_init__(self) -> None:
        norm = frozenset((min(e), max(e)) for e in self.edges)
        if any(i == j or not 0 <= i < self.n or not 0 <= j < self.n for i, j in norm):
            raise ValueError("skeleton edges must join distinct in-range vertices")
        if self.labels and len(self.labels) != self.n:
            raise ValueError("label count differs from vertex count")
        object.__setattr__(self, "edges", norm)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def as_graph(self) -> SimpleGraph:
        return SimpleGraph(self.n, self.edges)


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex on ``0..n-1`` stored by its facets (inclusion-maximal faces)."""

    n: int
    facets: frozenset[frozenset[int]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        facets = frozenset(frozenset(f) for f in self.facets)
        for f in facets:
            if not f:
                raise ValueError("empty facet")
            if any(not 0 <= v < self.n for v in f):
                raise ValueError("facet vertex out of range")
            if any(f < g for g in facets):
                raise ValueError("a facet is contained in another facet")
        object.__setattr__(self, "facets", facets)

    @classmethod
    def from_faces(cls, n: int, faces: Iterable[Iterable[int]]) -> SimplicialComplex:
        faces = sorted({frozenset(f) for f in faces}, key=len, reverse=True)
        facets: list[frozenset[int]] = []
        for f in faces:
            if f and not any(f <= g for g in facets):
                facets.append(f)
        return cls(n, frozenset(facets))

    def sorted_facets(self) -> list[tuple[int, ...]]:
        return [tuple(sorted(f)) for f in sorted(self.facets, key=canonical_key)]

    def faces(self) -> set[frozenset[int]]:
        out: set[frozenset[int]] = set()
        for f in self.facets:
            members = sorted(f)
            for k in range(1, len(members) + 1):
                out.update(frozenset(c) for c in combinations(members, k))
        return out

    @property
    def dimension(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1


def all_cliques(g: SkeletonGraph) -> list[tuple[int, ...]]:
    """Every nonempty clique of ``g`` as a sorted tuple, canonically ordered."""
    out: set[tuple[int, ...]] = set()
    for m in maximal_cliques(g.as_graph()):
        members = sorted(m)
        for k in range(1, len(members) + 1):
            out.update(combinations(members, k))
    return sorted(out, key=canonical_key)


def clique_complex(g: SkeletonGraph) -> SimplicialComplex:
    return SimplicialComplex(g.n, frozenset(maximal_cliques(g.as_graph())))


def complexes_equal(A: SimplicialComplex,
                    B: SimplicialComplex) -> tuple[bool, tuple[int, ...] | None]:
    """Compare facet sets; on mismatch also name the first face present in only one."""
    if A.n != B.n:
        raise ValueError(f"ambient vertex counts differ: {A.n} != {B.n}")
    if A.facets == B.facets:
        return True, None
    diff = A.faces() ^ B.faces()
    first = min(diff, key=canonical_key)
    return False, tuple(sorted(first))


def dumps(obj: dict[str, Any]) -> str:
    """JSON with one top-level key per line; stable under load/dump round trips."""
    if not obj:
        return "{}"
    body = ",\n".join(f"  {json.dumps(k)}: {json.dumps(v)}" for k, v in obj.items())
    return "{\n" + body + "\n}"


FaceSystem = Callable[[Sequence[int]], list[Hyperplane]]


@dataclass
class VerificationReport:
    """Outcome of checking one polytope.

    ``None`` in a verdict field means the check was not run.
    """

    instance: dict[str, Any]
    vertices: list[tuple[int, ...]]
    edges: list[tuple[int, int]]
    cliques_checked: int
    skeleton_agrees: bool | None
    constructions_agree: bool | None
    cliques_are_faces: bool | None
    complex_equal: bool | None
    counterexample: dict[str, Any] | None = None
    labels: list[Any] = field(default_factory=list)
    extra: dict[str, Any] = field(default_factory=dict)

    @property
    def verdicts(self) -> tuple[bool | None, ...]:
        return (self.skeleton_agrees, self.constructions_agree,
                self.cliques_are_faces, self.complex_equal)

    @property
    def all_faces(self) -> bool:
        verdicts = self.verdicts
        return self.counterexample is None and all(v is not False for v in verdicts)

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = dict(self.instance)
        out["num_vertices"] = len(self.vertices)
        out["vertices"] = [list(v) for v in self.vertices]
        if self.labels:
            out["labels"] = self.labels
        out["edges"] = [list(e) for e in self.edges]
        out["cliques_checked"] = self.cliques_checked
        out["skeleton_agrees"] = self.skeleton_agrees
        out["constructions_agree"] = self.constructions_agree
        out["cliques_are_faces"] = self.cliques_are_faces
        out["complex_equal"] = self.complex_equal
        out.update(self.extra)
        out["all_faces"] = self.all_faces
        out["counterexample"] = self.counterexample
        return out

    def to_json(self) -> str:
        return dumps(self.to_dict())


def verify_instance(vertices: Sequence[Sequence[int]],
                    edges: Iterable[tuple[int, int]],
                    face_system: FaceSystem | None = None,
                    *,
                    instance: dict[str, Any] | None = None,
                    labels: Sequence[Any] = (),
                    oracle: bool = True) -> VerificationReport:
    """Check a combinatorially predicted skeleton against the polytope.

    Checks the predicted skeleton against the oracle's skeleton; for every
    clique, that the hyperplane system from ``face_system`` cuts out exactly
    that clique and that the oracle accepts it as a face; and that the clique
    complex equals the complex of simplicial faces.
    """
    # deferred: oracle imports this module for its types
    from .oracle import FaceOracle, simplicial_faces

    vertices = [tuple(v) for v in vertices]
    if len(set(vertices)) != len(vertices):
        raise ValueError("duplicate vertices")
    skel = SkeletonGraph(len(vertices), frozenset(edges), tuple(labels))
    cliques = all_cliques(skel)
    counter: dict[str, Any] | None = None

    def label(ix: Iterable[int]) -> list:
        return [_render(labels[k]) for k in ix] if labels else []

    def fail(kind: str, **info: Any) -> None:
        nonlocal counter
        if counter is None:
            counter = {"kind": kind, **info}

    skeleton_agrees = complex_equal = None
    faces = None
    face_of = None
    if oracle:
        face_of = FaceOracle(vertices)
        faces = simplicial_faces(vertices, face_of)
        skeleton_agrees = True
        for i, j in combinations(range(len(vertices)), 2):
            predicted = (i, j) in skel.edges
            if predicted != face_of((i, j)):
                skeleton_agrees = False
                fail("skeleton", pair=[i, j], labels=label((i, j)),
                     predicted=predicted, oracle=not predicted)

    constructions_agree = None if face_system is None else True
    cliques_are_faces = None if face_of is None else True
    for c in cliques:
        if face_system is not None:
            survivors = vertices_on_system(vertices, face_system(c))
            if survivors != list(c):
                constructions_agree = False
                fail("construction", clique=list(c), labels=label(c),
                     survivors=survivors)
        if face_of is not None and not face_of(c):
            cliques_are_faces = False
            fail("oracle", clique=list(c), labels=label(c))

    if faces is not None:
        complex_equal, first = complexes_equal(clique_complex(skel), faces)
        if not complex_equal:
            fail("complex", face=list(first), labels=label(first))

    return VerificationReport(
        instance=dict(instance or {}),
        vertices=vertices,
        edges=skel.sorted_edges(),
        cliques_checked=len(cliques),
        skeleton_agrees=skeleton_agrees,
        constructions_agree=constructions_agree,
        cliques_are_faces=cliques_are_faces,
        complex_equal=complex_equal,
        counterexample=counter,
        labels=label(range(len(vertices))),
    )


def _render(payload: Any) -> Any:
    """Vertex payloads (sets of 0-based elements) as sorted 1-based lists."""
    if isinstance(payload, (set, frozenset)):
        return [v + 1 for v in sorted(payload)]
    return payload
