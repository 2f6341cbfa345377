"""Finitely generated credal sets and their Kleisli structure.

A :class:`CredalSet` is the convex hull of finitely many probability
vectors.  It is stored by its extreme points in sorted order, so two sets
are equal exactly when their canonical lists are equal.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Callable, Iterable, Sequence

from .errors import DimensionError
from .finstoch import FinSet, ProbVector, as_finset, dirac
from .rational_lp import as_rational, in_convex_hull, in_integer_hull

ZERO = Fraction(0)


def extreme_points(points: Iterable[Sequence], method: str = "auto") -> tuple:
    """Vertices of the convex hull of ``points``, sorted lexicographically.

    ``method="lp"`` runs one feasibility test per point against all the
    others.  ``"auto"`` gives the same answer faster: exact planar hulls
    when the simplex has dimension <= 2, otherwise vertices certified from
    planar shadows plus feasibility tests for the rest.
    """
    if method not in ("auto", "lp"):
        raise ValueError(f"unknown method {method!r}")
    pts = sorted({tuple(as_rational(x) for x in p) for p in points})
    if not pts:
        raise DimensionError("a credal set needs at least one generator")
    n = len(pts[0])
    if any(len(p) != n for p in pts):
        raise DimensionError("generators of different dimensions")
    if len(pts) <= 2:
        return tuple(pts)
    if method == "lp":
        return tuple(p for i, p in enumerate(pts) if not in_convex_hull(p, pts[:i] + pts[i + 1:]))
    if n <= 3:
        return tuple(sorted(_planar_extremes(pts, n)))
    return tuple(_lp_extremes(pts, n))


def _lp_extremes(pts, n):
    # Work with integer points; scaling does not change which points are vertices.
    den = lcm(*(x.denominator for p in pts for x in p))
    ints = [tuple(int(x * den) for x in p) for p in pts]
    # A vertex of a coordinate-plane shadow with a single preimage is a vertex.
    certain = set()
    for a, b in combinations(range(n), 2):
        shadow = {}
        for i, q in enumerate(ints):
            shadow.setdefault((q[a], q[b]), []).append(i)
        for v in _chain(sorted(shadow)):
            if len(shadow[v]) == 1:
                certain.add(shadow[v][0])
    verts = [ints[i] for i in sorted(certain)]
    alive = list(range(len(pts)))
    for i, q in enumerate(ints):
        if i in certain:
            continue
        # Inside the hull of known vertices settles it with a small LP.
        if (verts and in_integer_hull(q, verts)) or \
                in_integer_hull(q, [ints[j] for j in alive if j != i]):
            # Dropping a non-vertex leaves the hull unchanged.
            alive.remove(i)
    return [pts[i] for i in alive]


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _chain(flat):
    """Strict vertices of the planar hull of sorted distinct points (monotone chain)."""
    if len(flat) <= 2:
        return list(flat)
    lower, upper = [], []
    for p in flat:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(flat):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _planar_extremes(pts, n):
    if n == 1:
        return pts
    if n == 2:
        return [pts[0], pts[-1]]
    # Points with a common coordinate sum live in a plane; the first two
    # coordinates are affine coordinates for it.  Andrew's monotone chain,
    # dropping collinear points.
    back = {(p[0], p[1]): p for p in pts}
    return [back[q] for q in _chain(sorted(back))]


class CredalSet:
    """Convex hull of finitely many distributions on ``dim`` outcomes."""

    __slots__ = ("dim", "generators", "extremes")

    def __init__(self, generators: Iterable[Sequence], dim: int = None):
        gens = tuple(ProbVector(g) for g in generators)
        if not gens:
            raise DimensionError("empty credal sets are not representable")
        d = len(gens[0])
        if dim is not None and dim != d:
            raise DimensionError(f"generators have dimension {d}, expected {dim}")
        if any(len(g) != d for g in gens):
            raise DimensionError("generators of different dimensions")
        self.dim = d
        self.generators = gens
        self.extremes = tuple(ProbVector(p) for p in extreme_points(gens))

    @classmethod
    def _from_extremes(cls, extremes, dim: int) -> "CredalSet":
        """Wrap points already known to be the sorted, distinct vertices of their hull."""
        s = object.__new__(cls)
        s.dim = dim
        s.generators = s.extremes = tuple(ProbVector(p) for p in extremes)
        return s

    @classmethod
    def simplex(cls, n: int) -> "CredalSet":
        """The full simplex, i.e. total Knightian ignorance over ``n`` outcomes."""
        return cls(dirac(i, n) for i in range(1, n + 1))

    def __eq__(self, other):
        if not isinstance(other, CredalSet):
            return NotImplemented
        return self.dim == other.dim and self.extremes == other.extremes

    def __hash__(self):
        return hash(self.extremes)

    def __le__(self, other):
        return subset(self, other)

    def __lt__(self, other):
        return subset(self, other) and self != other

    def __contains__(self, p):
        return in_convex_hull(p, self.extremes)

    def __repr__(self):
        pts = ", ".join("(" + ", ".join(str(x) for x in p) + ")" for p in self.extremes)
        return f"CredalSet[{self.dim}]{{{pts}}}"

    def to_json(self):
        return {"dim": self.dim, "extremes": [[str(x) for x in p] for p in self.extremes]}

    @classmethod
    def from_json(cls, data) -> "CredalSet":
        return cls(data["extremes"], data["dim"])


def _check_dims(S: CredalSet, T: CredalSet):
    if S.dim != T.dim:
        raise DimensionError(f"credal sets of dimension {S.dim} and {T.dim}")


def subset(S: CredalSet, T: CredalSet) -> bool:
    _check_dims(S, T)
    return all(p in T for p in S.extremes)


def equal(S: CredalSet, T: CredalSet) -> bool:
    _check_dims(S, T)
    return S.extremes == T.extremes


def mix(S: CredalSet, T: CredalSet, r) -> CredalSet:
    """``S +_r T``: all ``r*p + (1-r)*q`` for ``p`` in ``S`` and ``q`` in ``T``."""
    _check_dims(S, T)
    r = as_rational(r)
    if not 0 <= r <= 1:
        raise ValueError(f"mixing weight {r} outside [0, 1]")
    return CredalSet(tuple(r * a + (1 - r) * b for a, b in zip(p, q))
                     for p in S.extremes for q in T.extremes)


def join(S: CredalSet, T: CredalSet) -> CredalSet:
    """Convex closure of the union."""
    _check_dims(S, T)
    return CredalSet(S.extremes + T.extremes)


def unit(i: int, n: int) -> CredalSet:
    """``{delta_i}`` with ``i`` 1-based."""
    return CredalSet([dirac(i, n)])


def scale_sum(weighted: Sequence) -> CredalSet:
    """Weighted Minkowski sum ``sum_k w_k * S_k`` for weights summing to one.

    Partial sums are canonicalized as they are formed, which keeps the
    generator count small.
    """
    terms = [(as_rational(w), S) for w, S in weighted if as_rational(w) != 0]
    if not terms:
        raise ValueError("weights sum to zero")
    dim = terms[0][1].dim
    acc = [tuple(ZERO for _ in range(dim))]
    for w, S in terms:
        if S.dim != dim:
            raise DimensionError("Minkowski sum of sets of different dimension")
        pts = {tuple(a + w * b for a, b in zip(p, q)) for p in acc for q in S.extremes}
        acc = extreme_points(pts)
    return CredalSet._from_extremes(acc, dim)


def pushforward(S: CredalSet, fn: Callable[[int], int], cod: int) -> CredalSet:
    """Image of ``S`` under the distribution map of a function ``dim -> cod``."""
    def push(p):
        out = [ZERO] * cod
        for i, x in enumerate(p):
            out[fn(i)] += x
        return out
    return CredalSet(push(p) for p in S.extremes)


class KlMorphism:
    """A morphism ``m -> n`` of the Kleisli category: one credal set per input."""

    __slots__ = ("dom", "cod", "images")

    def __init__(self, images: Sequence[CredalSet], cod=None):
        images = tuple(images)
        if not images:
            raise DimensionError("Kleisli morphisms have a nonempty domain")
        n = images[0].dim
        if cod is not None and as_finset(cod).size != n:
            raise DimensionError("codomain size does not match the images")
        if any(S.dim != n for S in images):
            raise DimensionError("all images must live in the same simplex")
        self.dom = FinSet(len(images))
        self.cod = FinSet(n)
        self.images = images

    def __call__(self, i: int) -> CredalSet:
        return self.images[i]

    def __eq__(self, other):
        if not isinstance(other, KlMorphism):
            return NotImplemented
        return self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __le__(self, other):
        return leq(self, other)

    def __repr__(self):
        return f"KlMorphism({self.dom.size} -> {self.cod.size}: {list(self.images)})"

    def to_json(self):
        return {"dom": self.dom.size, "cod": self.cod.size,
                "images": [S.to_json() for S in self.images]}

    @classmethod
    def from_json(cls, data) -> "KlMorphism":
        return cls([CredalSet.from_json(S) for S in data["images"]], data["cod"])


def kl_identity(n: int) -> KlMorphism:
    return KlMorphism([unit(i, n) for i in range(1, n + 1)])


def kleisli_extend(f: KlMorphism, X: CredalSet) -> CredalSet:
    """``f*(X)``: join over extreme ``x`` of ``X`` of ``sum_i x_i * f(i)``."""
    if X.dim != f.dom.size:
        raise DimensionError(f"set has dimension {X.dim} but morphism domain is {f.dom.size}")
    parts = [scale_sum(list(zip(x, f.images))) for x in X.extremes]
    if len(parts) == 1:
        return parts[0]
    return CredalSet([p for S in parts for p in S.extremes])


def kl_compose(g: KlMorphism, f: KlMorphism) -> KlMorphism:
    """``g . f = g* . f``."""
    if f.cod.size != g.dom.size:
        raise DimensionError("Kleisli morphisms are not composable")
    return KlMorphism([kleisli_extend(g, S) for S in f.images])


def kl_copair(f: KlMorphism, g: KlMorphism) -> KlMorphism:
    if f.cod.size != g.cod.size:
        raise DimensionError("copairing needs equal codomains")
    return KlMorphism(f.images + g.images)


def leq(f: KlMorphism, g: KlMorphism) -> bool:
    """Pointwise inclusion order on Kleisli morphisms."""
    if f.dom.size != g.dom.size or f.cod.size != g.cod.size:
        raise DimensionError("order is only defined on parallel morphisms")
    return all(subset(a, b) for a, b in zip(f.images, g.images))
