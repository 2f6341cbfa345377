"""Exact rational feasibility via phase-one simplex.

Only the question "is there a nonnegative ``x`` with ``A x = b``" is
answered, which is all convex-hull membership needs.  Inputs and outputs
are :class:`fractions.Fraction`; the pivoting itself runs on integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Optional, Sequence

from .errors import DimensionError

Rational = Fraction

# Pivots chosen by largest improvement before switching to Bland's rule.
DANTZIG_PIVOTS = 50
RationalVector = tuple


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are refused: a float literal such as ``0.1`` is not the rational
    the caller meant.
    """
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot use {type(x).__name__} {x!r} as an exact rational")


def format_rational(x: Fraction) -> str:
    return str(x)


@dataclass(frozen=True)
class FeasibilityProblem:
    """Constraints ``A @ lam == b`` and ``lam >= 0``."""

    A: tuple
    b: tuple

    def __post_init__(self):
        A = tuple(tuple(as_rational(a) for a in row) for row in self.A)
        b = tuple(as_rational(x) for x in self.b)
        if len(A) != len(b):
            raise DimensionError(f"A has {len(A)} rows but b has {len(b)} entries")
        if not A:
            raise DimensionError("feasibility problem needs at least one constraint")
        width = len(A[0])
        if width == 0:
            raise DimensionError("feasibility problem needs at least one variable")
        if any(len(row) != width for row in A):
            raise DimensionError("ragged constraint matrix")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "b", b)

    @property
    def n_vars(self) -> int:
        return len(self.A[0])

    def satisfied_by(self, lam: Sequence[Fraction]) -> bool:
        if len(lam) != self.n_vars or any(x < 0 for x in lam):
            return False
        return all(sum(a * x for a, x in zip(row, lam)) == bi
                   for row, bi in zip(self.A, self.b))


def solve_feasible(problem: FeasibilityProblem) -> Optional[tuple]:
    """Return some ``lam >= 0`` with ``A lam = b``, or ``None`` if infeasible.

    Each row is scaled to clear denominators, after which the whole solve
    runs on integers (see :func:`solve_integer`).
    """
    rows, rhs = [], []
    for row, bi in zip(problem.A, problem.b):
        scale = lcm(*(x.denominator for x in row), bi.denominator)
        rows.append([int(x * scale) for x in row])
        rhs.append(int(bi * scale))
    sol = solve_integer(rows, rhs)
    if sol is None:
        return None
    nums, denom = sol
    lam = tuple(Fraction(x, denom) for x in nums)
    assert problem.satisfied_by(lam)
    return lam


def solve_integer(A: Sequence[Sequence[int]], b: Sequence[int]):
    """Phase-one simplex on integer data.

    Returns ``(nums, denom)`` with ``lam = nums / denom >= 0`` solving
    ``A lam = b``, or ``None`` when no such ``lam`` exists.  The tableau
    stays integral: pivots use the integer-preserving update, so every
    entry is an exact multiple of a common denominator (the last pivot).
    Entering columns follow Dantzig's rule for the first
    ``DANTZIG_PIVOTS`` pivots and Bland's rule afterwards, which rules out
    cycling.
    """
    k = len(A)
    m = len(A[0]) if k else 0
    # Rows are [A | I | b], sign-flipped so b >= 0.
    rows = []
    for i, (row, bi) in enumerate(zip(A, b)):
        sign = -1 if bi < 0 else 1
        art = [0] * k
        art[i] = 1
        rows.append([sign * a for a in row] + art + [sign * bi])
    ncols = m + k
    basis = list(range(m, ncols))
    cost = [0] * (ncols + 1)
    for row in rows:
        for j in range(m):
            cost[j] -= row[j]
        cost[-1] -= row[-1]
    denom = 1

    pivots = 0
    while True:
        if pivots < DANTZIG_PIVOTS:
            best = min(range(ncols), key=cost.__getitem__)
            entering = best if cost[best] < 0 else None
        else:
            entering = next((j for j in range(ncols) if cost[j] < 0), None)
        if entering is None:
            break
        pivots += 1
        leave = None
        for i, row in enumerate(rows):
            a = row[entering]
            if a > 0:
                if leave is None:
                    leave = i
                    continue
                lr = rows[leave]
                lhs, rhs = row[-1] * lr[entering], lr[-1] * a
                if lhs < rhs or (lhs == rhs and basis[i] < basis[leave]):
                    leave = i
        if leave is None:
            # Unbounded direction cannot occur: the objective is bounded below by 0.
            break
        denom = _pivot(rows, cost, leave, entering, denom)
        basis[leave] = entering

    if cost[-1] != 0:
        return None
    nums = [0] * m
    for i, var in enumerate(basis):
        if var < m:
            nums[var] = rows[i][-1]
    if any(sum(a * x for a, x in zip(row, nums)) != denom * bi for row, bi in zip(A, b)):
        raise AssertionError("integer simplex returned a non-solution")
    return nums, denom


def _pivot(rows, cost, r, c, denom):
    """Integer-preserving pivot on ``rows[r][c]``; returns the new common denominator."""
    prow = rows[r]
    p = prow[c]
    for row in rows + [cost]:
        if row is prow:
            continue
        f = row[c]
        if f:
            row[:] = [(p * x - f * y) // denom for x, y in zip(row, prow)]
        elif p != denom:
            row[:] = [p * x // denom for x in row]
    return p


def convex_coefficients(point: Sequence, generators: Sequence[Sequence]) -> Optional[tuple]:
    """Weights ``lam`` (summing to 1) with ``sum(lam_k * g_k) == point``, or None."""
    point = tuple(as_rational(x) for x in point)
    gens = [tuple(as_rational(x) for x in g) for g in generators]
    if not gens:
        raise DimensionError("convex hull of an empty generator list")
    dim = len(point)
    if dim == 0:
        raise DimensionError("zero-dimensional vector")
    if any(len(g) != dim for g in gens):
        raise DimensionError("generators and point have different dimensions")
    A = [[g[d] for g in gens] for d in range(dim)]
    A.append([Fraction(1)] * len(gens))
    return solve_feasible(FeasibilityProblem(A, point + (Fraction(1),)))


def in_integer_hull(point: Sequence[int], generators: Sequence[Sequence[int]]) -> bool:
    """Hull membership for integer vectors, without any Fraction arithmetic."""
    if not generators:
        raise DimensionError("convex hull of an empty generator list")
    if tuple(point) in {tuple(g) for g in generators}:
        return True
    dims = range(len(point))
    # When every vector has the same coordinate sum, one coordinate row is
    # implied by the others together with the weights summing to one.
    total = sum(point)
    if len(point) > 1 and all(sum(g) == total for g in generators):
        dims = range(len(point) - 1)
    A = [[g[d] for g in generators] for d in dims]
    A.append([1] * len(generators))
    return solve_integer(A, [point[d] for d in dims] + [1]) is not None


def in_convex_hull(point: Sequence, generators: Sequence[Sequence]) -> bool:
    """Exact test for membership of ``point`` in the convex hull of ``generators``."""
    point = tuple(as_rational(x) for x in point)
    gens = [tuple(as_rational(x) for x in g) for g in generators]
    if gens and point in gens:
        return True
    return convex_coefficients(point, gens) is not None
