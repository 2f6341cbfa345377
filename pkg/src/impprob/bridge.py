"""From graded stochastic maps to credal sets.

``phi`` forgets the urn names of a morphism out of ``1`` and keeps only the
set of distributions it can produce.  ``R`` does the same input by input,
landing in the Kleisli category of credal sets.  ``R`` preserves identities
and copairing but only laxly preserves composition: ``R(g . f)`` is contained
in ``R(g) . R(f)``, and the containment can be strict because ``R(g) . R(f)``
no longer knows that both uses of an urn are the same draw.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from . import finstoch as fs
from .credal import CredalSet, KlMorphism, kl_compose, subset
from .errors import DimensionError, InvariantViolation
from .finstoch import FinSet, StochMatrix
from .imp import Grade, GradedMorphism, gcompose, lift
from .rational_lp import convex_coefficients

HALF = Fraction(1, 2)


def phi(f: GradedMorphism) -> CredalSet:
    """The credal set generated by the columns of ``f : 1 -> n``."""
    if f.dom.size != 1:
        raise DimensionError(f"phi is defined on morphisms out of 1, got dom {f.dom.size}")
    return CredalSet(f.matrix.columns())


def R(f: GradedMorphism) -> KlMorphism:
    """``R(f)(i) = image(f(-, i))``."""
    return KlMorphism([phi(f.at_input(i)) for i in range(f.dom.size)])


@dataclass(frozen=True)
class OplaxReport:
    lhs: KlMorphism
    rhs: KlMorphism
    pointwise_subset: tuple
    strict: bool

    def to_json(self):
        return {
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
            "pointwise_subset": list(self.pointwise_subset),
            "strict": self.strict,
        }


def check_oplax(g: GradedMorphism, f: GradedMorphism) -> OplaxReport:
    """Compare ``R(g . f)`` with ``R(g) . R(f)``; containment must hold."""
    lhs = R(gcompose(g, f))
    rhs = kl_compose(R(g), R(f))
    flags = tuple(subset(a, b) for a, b in zip(lhs.images, rhs.images))
    if not all(flags):
        raise InvariantViolation(f"R(g.f) is not contained in R(g).R(f): {flags}")
    strict = any(a != b for a, b in zip(lhs.images, rhs.images))
    return OplaxReport(lhs, rhs, flags, strict)


def _copy_name(name: str, k: int) -> str:
    return f"{name}#{k}"


def star_compose(g: GradedMorphism, f: GradedMorphism) -> GradedMorphism:
    """Composite at grade ``gamma (x) eps^m`` using a fresh copy of ``g``'s urns per intermediate value.

    For ``f : 1 -> m`` at ``gamma`` and ``g : m -> n`` at ``eps``, the urns of
    ``g`` are duplicated once per intermediate value ``y``, and the copy used
    is the one indexed by ``y``.  Copy ``k`` of urn ``a`` is named ``a#k``.
    """
    if f.dom.size != 1:
        raise DimensionError("star composite is defined for f out of 1")
    if f.cod.size != g.dom.size:
        raise DimensionError("cannot compose: codomain/domain mismatch")
    m = f.cod.size
    copies = [Grade(tuple((_copy_name(n, y), k) for n, k in g.grade.sites)) for y in range(m)]
    big = f.grade
    for c in copies:
        big = big.tensor(c)
    rf = big.restriction(f.grade)
    rcopies = []
    for y, cp in enumerate(copies):
        to_eps = [g.grade.index({n: a[_copy_name(n, y)] for n in g.grade.names})
                  for a in cp.assignments()]
        rcopies.append([to_eps[j] for j in big.restriction(cp)])
    fcols = f.matrix.columns()
    cols = []
    for c in range(big.size):
        acc = [Fraction(0)] * g.cod.size
        for y, w in enumerate(fcols[rf[c]]):
            if w:
                for i, v in enumerate(g.column(rcopies[y][c], y)):
                    acc[i] += w * v
        cols.append(tuple(acc))
    return GradedMorphism.from_columns(big, 1, g.cod, cols, check=False)


@dataclass(frozen=True)
class KanWitness:
    """Surjections ``g : m -> m''``, ``gp : m' -> m''`` and ``h : m'' -> n``
    with ``h . g == f`` and ``h . gp == f2``."""

    mpp: FinSet
    g: StochMatrix
    gp: StochMatrix
    h: StochMatrix

    def validates(self, f: StochMatrix, f2: StochMatrix) -> bool:
        return (fs.compose(self.h, self.g).same_entries(f)
                and fs.compose(self.h, self.gp).same_entries(f2)
                and fs.is_surjective(self.g) and fs.is_surjective(self.gp))


def kan_witness(f: StochMatrix, f2: StochMatrix) -> KanWitness:
    """Identify two matrices with the same image through the extreme points of that image."""
    S, S2 = CredalSet(f.columns()), CredalSet(f2.columns())
    if S != S2:
        raise ValueError("the two maps have different images")
    # Extremes in order of first appearance among the columns of f.
    vertices = set(S.extremes)
    ext = tuple(dict.fromkeys(c for c in f.columns() if c in vertices))
    h = StochMatrix.from_columns(ext, cod=f.cod.size)

    def coefficients(m: StochMatrix) -> StochMatrix:
        cols = []
        for col in m.columns():
            lam = convex_coefficients(col, ext)
            if lam is None:
                raise InvariantViolation(f"column {col} is not in the hull of the extreme points")
            cols.append(lam)
        return StochMatrix.from_columns(cols, cod=len(ext))

    w = KanWitness(FinSet(len(ext)), coefficients(f), coefficients(f2), h)
    if not w.validates(f, f2):
        raise InvariantViolation("Kan witness does not factor the inputs")
    return w


def pointwise_mix(h: GradedMorphism, k: GradedMorphism, r) -> GradedMorphism:
    """``(h +_r k)(x) = h(x) +_r k(x)`` for parallel morphisms at one grade."""
    if h.grade != k.grade or h.dom.size != k.dom.size or h.cod.size != k.cod.size:
        raise DimensionError("pointwise mixing needs parallel morphisms at equal grades")
    r = Fraction(r)
    cols = [tuple(r * a + (1 - r) * b for a, b in zip(p, q))
            for p, q in zip(h.matrix.columns(), k.matrix.columns())]
    return GradedMorphism.from_columns(h.grade, h.dom, h.cod, cols, check=False)


def encode(f: GradedMorphism) -> GradedMorphism:
    """``j . f +_1/2 i . d`` into ``n + k`` outcomes.

    ``f : 1 -> n`` has a grade with ``k`` assignments, ``d`` is the tuple
    of Diracs ``1 -> k`` at that grade, and ``j``, ``i`` are the coproduct
    injections of ``n`` and ``k`` into ``n + k``.  Column ``c`` of the result
    is ``f(c)/2`` on the first ``n`` outcomes plus ``1/2`` at marker ``n + c``.
    """
    if f.dom.size != 1:
        raise DimensionError("encode works on morphisms out of 1")
    n, k = f.cod.size, f.grade.size
    d = GradedMorphism(f.grade, 1, k, fs.identity(k))
    j = lift(fs.injection(0, [n, k]))
    i = lift(fs.injection(1, [n, k]))
    return pointwise_mix(gcompose(j, f), gcompose(i, d), HALF)


def recover(S: CredalSet, n: int, k: int) -> Optional[StochMatrix]:
    """Read ``f`` back from the image of its encoding, or None if impossible."""
    if S.dim != n + k:
        return None
    cols: List[Optional[tuple]] = [None] * k
    for p in S.extremes:
        marks = [c for c in range(k) if p[n + c]]
        if len(marks) != 1 or p[n + marks[0]] != HALF:
            return None
        cols[marks[0]] = tuple(2 * x for x in p[:n])
    if any(c is None for c in cols):
        return None
    return StochMatrix.from_columns(cols, cod=n)


def encode_recover_roundtrip(f: GradedMorphism) -> bool:
    """Encode each input slice, take its image, decode, and compare with ``f``."""
    n, k = f.cod.size, f.grade.size
    for x in range(f.dom.size):
        slice_ = f.at_input(x)
        got = recover(phi(encode(slice_)), n, k)
        if got is None or not got.same_entries(slice_.matrix):
            return False
    return True
