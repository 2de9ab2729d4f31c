"""Verification campaigns over many posets or graphs."""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable

from .graphs import SimpleGraph, all_graphs, is_perfect
from .order import verify_order_polytope
from .posets import Poset, all_posets, comparability_graph, random_poset
from .stable import verify_stable_polytope


@dataclass
class SweepResult:
    kind: str
    size: int
    mode: str            # "exhaustive" or "sample"
    instances: int = 0
    skipped: int = 0     # non-perfect graphs in an exhaustive graph sweep
    failures: int = 0
    first_failure: dict[str, Any] | None = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": self.kind,
            "size": self.size,
            "mode": self.mode,
            "instances": self.instances,
            "skipped": self.skipped,
            "failures": self.failures,
            "first_failure": self.first_failure,
        }


def _check_poset(P: Poset, oracle: bool = True) -> dict[str, Any] | None:
    report = verify_order_polytope(P, oracle=oracle)
    return None if report.all_faces else report.to_dict()


def _check_graph(G: SimpleGraph, oracle: bool = True) -> dict[str, Any] | None:
    report = verify_stable_polytope(G, oracle=oracle)
    return None if report.all_faces else report.to_dict()


def _run(check: Callable, items: list, result: SweepResult, jobs: int,
         oracle: bool) -> SweepResult:
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            outcomes = list(pool.map(check, items, [oracle] * len(items), chunksize=8))
    else:
        outcomes = [check(x, oracle) for x in items]
    # pool.map keeps input order, so the first failure is well defined
    for out in outcomes:
        result.instances += 1
        if out is not None:
            result.failures += 1
            if result.first_failure is None:
                result.first_failure = out
    return result


def sample_posets(d: int, count: int, rng: random.Random) -> list[Poset]:
    # density drawn per instance so both sparse and dense posets appear
    return [random_poset(d, rng, rng.uniform(0.15, 0.6)) for _ in range(count)]


def sample_comparability_graphs(n: int, count: int, rng: random.Random) -> list[SimpleGraph]:
    return [comparability_graph(P) for P in sample_posets(n, count, rng)]


def sweep_posets(sizes: Iterable[int], *, sample: int | None = None, seed: int = 0,
                 jobs: int = 1, oracle: bool = True) -> list[SweepResult]:
    """Exhaustive over labeled posets per size, or ``sample`` random ones."""
    results = []
    rng = random.Random(seed)
    for d in sizes:
        if sample is None:
            items = list(all_posets(d))
            res = SweepResult("poset", d, "exhaustive")
        else:
            items = sample_posets(d, sample, rng)
            res = SweepResult("poset", d, "sample")
        results.append(_run(_check_poset, items, res, jobs, oracle))
    return results


def sweep_graphs(sizes: Iterable[int], *, sample: int | None = None, seed: int = 0,
                 jobs: int = 1, oracle: bool = True) -> list[SweepResult]:
    """Exhaustive over perfect labeled graphs per size, or random comparability graphs."""
    results = []
    rng = random.Random(seed)
    for n in sizes:
        if sample is None:
            items, skipped = [], 0
            for G in all_graphs(n):
                if is_perfect(G):
                    items.append(G)
                else:
                    skipped += 1
            res = SweepResult("graph", n, "exhaustive", skipped=skipped)
        else:
            items = sample_comparability_graphs(n, sample, rng)
            res = SweepResult("graph", n, "sample")
        results.append(_run(_check_graph, items, res, jobs, oracle))
    return results


@dataclass
class Summary:
    results: list[SweepResult] = field(default_factory=list)

    @property
    def instances(self) -> int:
        return sum(r.instances for r in self.results)

    @property
    def failures(self) -> int:
        return sum(r.failures for r in self.results)

    def to_dict(self) -> dict[str, Any]:
        return {
            "results": [r.to_dict() for r in self.results],
            "instances": self.instances,
            "failures": self.failures,
        }

    def to_text(self) -> str:
        lines = []
        for r in self.results:
            extra = f" skipped={r.skipped}" if r.skipped else ""
            lines.append(
                f"{r.kind}s size={r.size} {r.mode}: instances={r.instances}"
                f"{extra} failures={r.failures}"
            )
        lines.append(f"total: instances={self.instances} failures={self.failures}")
        return "\n".join(lines) + "\n"
