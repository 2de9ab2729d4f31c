"""Exact feasibility of rational linear systems over free variables.

``A x <= c`` is decided through its Farkas alternative

    y >= 0,  A^T y = 0,  c^T y = -1,

which has one row per variable and one column per inequality.  Phase one of
the simplex method (Bland's rule, integer pivoting) either finds such a ``y``
or stops with a positive artificial cost, in which case the simplex
multipliers of the final tableau give a point ``x`` with ``A x <= c``.  Both
outcomes are re-checked by exact substitution before being returned.

A small Fourier-Motzkin eliminator is included as an independent check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import NamedTuple, Sequence

from .geometry import EQ, GE, LE, Hyperplane


class IntSolution(NamedTuple):
    """Result of :func:`solve_int_system`.

    If ``feasible``, ``numerators / denominator`` is a point ``x`` with
    ``A x <= c``.  Otherwise ``numerators / denominator`` are non-negative
    row multipliers ``y`` with ``A^T y = 0`` and ``c^T y = -1``.
    """

    feasible: bool
    numerators: tuple[int, ...]
    denominator: int


def solve_int_system(rows: Sequence[Sequence[int]], bounds: Sequence[int],
                     nvars: int) -> IntSolution:
    """Decide ``rows . x <= bounds`` for integer data and free ``x``."""
    m = len(rows)
    if len(bounds) != m:
        raise ValueError("rows and bounds differ in length")
    for r in rows:
        if len(r) != nvars:
            raise ValueError(f"row of length {len(r)} for {nvars} variables")

    nrows = nvars + 1
    art = m                   # first artificial column
    rhs = m + nrows           # right-hand side column
    width = rhs + 1
    T = []
    for k in range(nvars):
        row = [rows[j][k] for j in range(m)] + [0] * nrows + [0]
        row[art + k] = 1
        T.append(row)
    last = [-b for b in bounds] + [0] * nrows + [1]
    last[art + nvars] = 1
    T.append(last)
    z = [0] * width
    for row in T:
        for j in range(m):
            z[j] -= row[j]
        z[rhs] -= row[rhs]
    basis = [art + k for k in range(nrows)]
    det = 1

    while True:
        s = next((j for j in range(m) if z[j] < 0), None)
        if s is None:
            break
        r = -1
        for i in range(nrows):
            a = T[i][s]
            if a <= 0:
                continue
            if r < 0:
                r = i
                continue
            # compare T[i][rhs] / a against T[r][rhs] / T[r][s]
            lhs = T[i][rhs] * T[r][s]
            cur = T[r][rhs] * a
            if lhs < cur or (lhs == cur and basis[i] < basis[r]):
                r = i
        if r < 0:
            # unbounded phase one cannot happen: the objective is >= 0
            raise AssertionError("phase one reported unbounded")
        p = T[r][s]
        pivot_row = T[r]
        for i in range(nrows):
            if i == r:
                continue
            f = T[i][s]
            T[i] = [(a * p - f * b) // det for a, b in zip(T[i], pivot_row)]
        f = z[s]
        z = [(a * p - f * b) // det for a, b in zip(z, pivot_row)]
        basis[r] = s
        det = p

    if z[rhs] < 0:
        # multipliers pi_i = 1 - z[art + i] / det; x = pi[:n] / pi[n]
        den = det - z[art + nvars]
        nums = tuple(det - z[art + k] for k in range(nvars))
        return _checked_point(rows, bounds, nums, den)
    y = [0] * m
    for i, b in enumerate(basis):
        if b < m:
            y[b] = T[i][rhs]
    return _checked_farkas(rows, bounds, tuple(y), det)


def _checked_point(rows, bounds, nums, den) -> IntSolution:
    if den <= 0:
        raise AssertionError("non-positive witness denominator")
    for r, b in zip(rows, bounds):
        if sum(a * x for a, x in zip(r, nums)) > b * den:
            raise AssertionError("feasibility witness fails substitution")
    return IntSolution(True, nums, den)


def _checked_farkas(rows, bounds, y, den) -> IntSolution:
    nvars = len(rows[0]) if rows else 0
    if any(v < 0 for v in y):
        raise AssertionError("negative Farkas multiplier")
    for k in range(nvars):
        if sum(r[k] * v for r, v in zip(rows, y)) != 0:
            raise AssertionError("Farkas certificate does not cancel")
    if sum(b * v for b, v in zip(bounds, y)) != -den:
        raise AssertionError("Farkas certificate has wrong right-hand side")
    return IntSolution(False, y, den)


@dataclass(frozen=True)
class LPProblem:
    """A system of rational linear constraints over free variables."""

    nvars: int
    constraints: tuple[Hyperplane, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "constraints", tuple(self.constraints))
        for h in self.constraints:
            if h.dim != self.nvars:
                raise ValueError(
                    f"constraint of dimension {h.dim} in a problem with {self.nvars} variables"
                )


class Feasibility(NamedTuple):
    feasible: bool
    witness: tuple[Fraction, ...] | None
    # one multiplier per constraint when infeasible: >= 0 on "<=", <= 0 on
    # ">=", free on "=="; the combination reads 0 <= negative
    certificate: tuple[Fraction, ...] | None

    def __bool__(self) -> bool:
        return self.feasible


def _scaled(h: Hyperplane) -> tuple[list[int], int, int]:
    scale = lcm(*(c.denominator for c in h.coeffs), h.bound.denominator)
    return [int(c * scale) for c in h.coeffs], int(h.bound * scale), scale


def lp_feasible(prob: LPProblem) -> Feasibility:
    """Exact feasibility test with a verified witness or Farkas certificate."""
    rows: list[list[int]] = []
    bounds: list[int] = []
    origin: list[tuple[int, int]] = []  # (constraint index, signed scale)
    for k, h in enumerate(prob.constraints):
        a, c, scale = _scaled(h)
        if h.relation in (LE, EQ):
            rows.append(a)
            bounds.append(c)
            origin.append((k, scale))
        if h.relation in (GE, EQ):
            rows.append([-x for x in a])
            bounds.append(-c)
            origin.append((k, -scale))
    sol = solve_int_system(rows, bounds, prob.nvars)
    if sol.feasible:
        x = tuple(Fraction(v, sol.denominator) for v in sol.numerators)
        if not all(h.satisfied_by(x) for h in prob.constraints):
            raise AssertionError("witness violates the original constraints")
        return Feasibility(True, x, None)
    lam = [Fraction(0)] * len(prob.constraints)
    for (k, signed), y in zip(origin, sol.numerators):
        lam[k] += Fraction(signed * y, sol.denominator)
    return Feasibility(False, None, tuple(lam))


def fourier_motzkin_feasible(prob: LPProblem) -> bool:
    """Feasibility by Gaussian substitution of equalities, then Fourier-Motzkin.

    Exponential in the number of variables; only for small cross-checks.
    """
    n = prob.nvars
    eqs = []
    ineqs = []
    for h in prob.constraints:
        row = list(h.coeffs) + [h.bound]
        if h.relation == EQ:
            eqs.append(row)
        elif h.relation == LE:
            ineqs.append(row)
        else:
            ineqs.append([-v for v in row])

    # eliminate with equalities first
    while eqs:
        e = eqs.pop()
        k = next((i for i in range(n) if e[i] != 0), None)
        if k is None:
            if e[n] != 0:
                return False
            continue
        piv = e[k]
        e = [v / piv for v in e]

        def substitute(row):
            f = row[k]
            return [v - f * w for v, w in zip(row, e)] if f else row

        eqs = [substitute(r) for r in eqs]
        ineqs = [substitute(r) for r in ineqs]

    for k in range(n):
        pos, neg, rest = [], [], set()
        for r in ineqs:
            if r[k] > 0:
                pos.append(r)
            elif r[k] < 0:
                neg.append(r)
            else:
                rest.add(tuple(r))
        for p in pos:
            for q in neg:
                combo = [a * -q[k] + b * p[k] for a, b in zip(p, q)]
                lead = next((abs(v) for v in combo[:n] if v), None)
                if lead:
                    combo = [v / lead for v in combo]
                rest.add(tuple(combo))
        ineqs = [list(r) for r in rest]
    return all(r[n] >= 0 for r in ineqs)
