"""The graded Markov category of imprecise probability.

A morphism ``X -> Y`` at grade ``g`` is a stochastic matrix
``carrier(g) (x) X -> Y``: for every assignment of values to the named
Knightian urns in ``g`` and every input, a distribution over outputs.

Grades are sets of named urns with arities.  They are kept sorted by name,
and the carrier of a grade is the mixed-radix product of the arities in
that order.  With this choice the union of disjoint grades is the tensor
product on the nose, so symmetry and associativity regradings are
identities and never need to be written.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

from . import finstoch as fs
from .errors import DimensionError, GradeError, NameClash
from .finstoch import FinSet, ProbVector, StochMatrix

ZERO, ONE = Fraction(0), Fraction(1)


@dataclass(frozen=True)
class Grade:
    """A finite set of named choice sites ``(name, arity)``, sorted by name."""

    sites: Tuple[Tuple[str, int], ...] = ()

    def __post_init__(self):
        sites = tuple(sorted((str(n), int(k)) for n, k in self.sites))
        names = [n for n, _ in sites]
        if len(set(names)) != len(names):
            raise NameClash(f"duplicate names in grade: {names}")
        for n, k in sites:
            if k < 2:
                raise GradeError(f"urn {n!r} needs arity >= 2, got {k}")
        object.__setattr__(self, "sites", sites)

    @classmethod
    def of(cls, mapping: Optional[Mapping[str, int]] = None, **kw) -> "Grade":
        items = dict(mapping or {})
        items.update(kw)
        return cls(tuple(items.items()))

    @classmethod
    def single(cls, name: str, arity: int = 2) -> "Grade":
        return cls(((name, arity),))

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(n for n, _ in self.sites)

    @property
    def arities(self) -> Tuple[int, ...]:
        return tuple(k for _, k in self.sites)

    def arity(self, name: str) -> int:
        return dict(self.sites)[name]

    def __contains__(self, name):
        return name in self.names

    def __len__(self):
        return len(self.sites)

    def __bool__(self):
        return bool(self.sites)

    @cached_property
    def size(self) -> int:
        n = 1
        for k in self.arities:
            n *= k
        return n

    @property
    def carrier(self) -> FinSet:
        return FinSet(self.size)

    def assignments(self):
        """All assignments in carrier order, as dicts ``name -> value``."""
        for values in product(*(range(k) for k in self.arities)):
            yield dict(zip(self.names, values))

    def index(self, assignment: Mapping[str, int]) -> int:
        return fs.mixed_radix_index([assignment[n] for n in self.names], self.arities)

    def assignment(self, index: int) -> Dict[str, int]:
        return dict(zip(self.names, fs.mixed_radix_digits(index, self.arities)))

    def is_disjoint(self, other: "Grade") -> bool:
        return not set(self.names) & set(other.names)

    def tensor(self, other: "Grade") -> "Grade":
        """Disjoint union; overlapping names are a :class:`NameClash`."""
        clash = set(self.names) & set(other.names)
        if clash:
            raise NameClash(f"name(s) {sorted(clash)} used on both sides of a sequential composition")
        return Grade(self.sites + other.sites)

    __matmul__ = tensor

    def union(self, other: "Grade") -> "Grade":
        """Union allowing shared names, which must agree on arity."""
        merged = dict(self.sites)
        for n, k in other.sites:
            if merged.get(n, k) != k:
                raise NameClash(f"urn {n!r} used with arities {merged[n]} and {k}")
            merged[n] = k
        return Grade(tuple(merged.items()))

    def restriction(self, sub: "Grade") -> Tuple[int, ...]:
        """For each carrier index of ``self``, the index of its restriction to ``sub``."""
        for n, k in sub.sites:
            if n not in self.names or self.arity(n) != k:
                raise GradeError(f"{sub} is not a sub-grade of {self}")
        pos = [self.names.index(n) for n in sub.names]
        out = []
        for i in range(self.size):
            digits = fs.mixed_radix_digits(i, self.arities)
            out.append(fs.mixed_radix_index([digits[p] for p in pos], sub.arities))
        return tuple(out)

    def __str__(self):
        if not self.sites:
            return "{}"
        return "{" + ", ".join(f"{n}:{k}" for n, k in self.sites) + "}"

    def to_json(self):
        return [{"name": n, "arity": k} for n, k in self.sites]

    @classmethod
    def from_json(cls, data) -> "Grade":
        return cls(tuple((d["name"], d["arity"]) for d in data))


EMPTY = Grade()


class GradeMap:
    """A surjective stochastic map ``carrier(src) -> carrier(dst)``.

    Regrading a morphism at ``dst`` along this map yields one at ``src``.
    """

    __slots__ = ("src", "dst", "matrix")

    def __init__(self, src: Grade, dst: Grade, matrix: StochMatrix, *, check=True):
        if matrix.dom.size != src.size or matrix.cod.size != dst.size:
            raise DimensionError(
                f"grade map matrix is {matrix.shape}, expected {(dst.size, src.size)}")
        if check and not fs.is_surjective(matrix):
            raise GradeError("grade maps must be surjective stochastic maps")
        self.src, self.dst, self.matrix = src, dst, matrix

    def __repr__(self):
        return f"GradeMap({self.src} -> {self.dst})"

    def __eq__(self, other):
        return (isinstance(other, GradeMap) and self.src == other.src
                and self.dst == other.dst and self.matrix.same_entries(other.matrix))

    @classmethod
    def identity(cls, grade: Grade) -> "GradeMap":
        return cls(grade, grade, fs.identity(grade.size), check=False)

    @classmethod
    def projection(cls, src: Grade, dst: Grade) -> "GradeMap":
        """Forget the urns of ``src`` that are not in ``dst`` (weakening)."""
        r = src.restriction(dst)
        return cls(src, dst, StochMatrix.from_function(lambda i: r[i], src.size, dst.size),
                   check=False)

    @classmethod
    def rename(cls, src: Grade, dst: Grade, mapping: Mapping[str, str]) -> "GradeMap":
        """Regrading induced by an injective renaming of names.

        ``mapping`` sends each name of ``dst`` to a distinct name of ``src``
        with the same arity; the map reads each ``dst`` urn from its image.
        """
        targets = [mapping[n] for n in dst.names]
        if len(set(targets)) != len(targets):
            raise GradeError("renaming must be injective")
        for n in dst.names:
            if src.arity(mapping[n]) != dst.arity(n):
                raise GradeError(f"arity mismatch renaming {n!r} to {mapping[n]!r}")

        def fn(i):
            a = src.assignment(i)
            return dst.index({n: a[mapping[n]] for n in dst.names})

        return cls(src, dst, StochMatrix.from_function(fn, src.size, dst.size), check=False)

    @classmethod
    def permutation(cls, grade: Grade, name: str, perm: Sequence[int]) -> "GradeMap":
        """Relabel the values of urn ``name``: value ``v`` is read as ``perm[v]``."""
        k = grade.arity(name)
        if sorted(perm) != list(range(k)):
            raise GradeError(f"{list(perm)} is not a permutation of range({k})")

        def fn(i):
            a = grade.assignment(i)
            a[name] = perm[a[name]]
            return grade.index(a)

        return cls(grade, grade, StochMatrix.from_function(fn, grade.size, grade.size),
                   check=False)

    @classmethod
    def negation(cls, grade: Grade, name: str) -> "GradeMap":
        if grade.arity(name) != 2:
            raise GradeError("negation is only defined on binary urns")
        return cls.permutation(grade, name, (1, 0))

    def then(self, other: "GradeMap") -> "GradeMap":
        """``other . self`` where ``self.dst == other.src``."""
        if self.dst != other.src:
            raise GradeError("grade maps are not composable")
        return GradeMap(self.src, other.dst, fs.compose(other.matrix, self.matrix), check=False)

    def to_json(self):
        return {"src": self.src.to_json(), "dst": self.dst.to_json(), "matrix": self.matrix.to_json()}


class GradedMorphism:
    """A stochastic matrix ``carrier(grade) (x) dom -> cod``.

    Column ``c * |dom| + x`` is the output distribution for urn assignment
    ``c`` and input ``x``.
    """

    __slots__ = ("grade", "dom", "cod", "matrix")

    def __init__(self, grade: Grade, dom, cod, matrix: StochMatrix):
        dom, cod = fs.as_finset(dom), fs.as_finset(cod)
        if matrix.dom.size != grade.size * dom.size or matrix.cod.size != cod.size:
            raise DimensionError(
                f"matrix {matrix.shape} does not fit grade {grade} with dom {dom.size}, cod {cod.size}")
        self.grade, self.dom, self.cod, self.matrix = grade, dom, cod, matrix

    @classmethod
    def from_columns(cls, grade: Grade, dom, cod, columns, *, check=True) -> "GradedMorphism":
        cod = fs.as_finset(cod)
        if check:
            return cls(grade, dom, cod, StochMatrix.from_columns(columns, cod=cod))
        return cls(grade, dom, cod, StochMatrix._trusted(tuple(columns), cod=cod))

    def column(self, c: int, x: int) -> tuple:
        return self.matrix.column(c * self.dom.size + x)

    def at_input(self, x: int) -> "GradedMorphism":
        """The restriction ``f(-, x)`` as a morphism ``1 -> cod`` at the same grade."""
        cols = [self.column(c, x) for c in range(self.grade.size)]
        return GradedMorphism.from_columns(self.grade, 1, self.cod, cols, check=False)

    def __eq__(self, other):
        if not isinstance(other, GradedMorphism):
            return NotImplemented
        return (self.grade == other.grade and self.dom.size == other.dom.size
                and self.cod.size == other.cod.size and self.matrix.same_entries(other.matrix))

    def __hash__(self):
        return hash((self.grade, self.matrix.entries))

    def __repr__(self):
        return f"GradedMorphism({self.dom.size} -> {self.cod.size} at {self.grade}: {self.matrix!r})"

    def to_json(self):
        return {
            "grade": self.grade.to_json(),
            "dom": self.dom.size,
            "cod": self.cod.size,
            "matrix": [[str(x) for x in row] for row in self.matrix.entries],
        }

    @classmethod
    def from_json(cls, data) -> "GradedMorphism":
        grade = Grade.from_json(data["grade"])
        matrix = StochMatrix(data["matrix"], grade.size * data["dom"], data["cod"])
        return cls(grade, data["dom"], data["cod"], matrix)


def lift(m: StochMatrix) -> GradedMorphism:
    """An ordinary stochastic map viewed at the empty grade."""
    return GradedMorphism(EMPTY, m.dom, m.cod, m)


def regrade(f: GradedMorphism, u: GradeMap) -> GradedMorphism:
    """Precompose with ``u (x) id``, moving ``f`` from grade ``u.dst`` to ``u.src``."""
    if u.dst != f.grade:
        raise GradeError(f"grade map targets {u.dst} but morphism is at {f.grade}")
    m = fs.compose(f.matrix, fs.kron(u.matrix, fs.identity(f.dom.size)))
    return GradedMorphism(u.src, f.dom, f.cod, m)


def weaken(f: GradedMorphism, grade: Grade) -> GradedMorphism:
    """Regrade ``f`` to a larger grade along the canonical projection."""
    if grade == f.grade:
        return f
    return regrade(f, GradeMap.projection(grade, f.grade))


def gcompose(g: GradedMorphism, f: GradedMorphism) -> GradedMorphism:
    """``g . f`` at the disjoint union of the two grades."""
    if f.cod.size != g.dom.size:
        raise DimensionError(f"cannot compose: cod(f)={f.cod.size}, dom(g)={g.dom.size}")
    grade = f.grade.tensor(g.grade)
    rf, rg = grade.restriction(f.grade), grade.restriction(g.grade)
    X, Y = f.dom.size, g.dom.size
    gcols = g.matrix.columns()
    fcols = f.matrix.columns()
    cols = []
    for c in range(grade.size):
        cf, cg = rf[c], rg[c]
        for x in range(X):
            acc = [ZERO] * g.cod.size
            for y, w in enumerate(fcols[cf * X + x]):
                if w:
                    for i, v in enumerate(gcols[cg * Y + y]):
                        if v:
                            acc[i] += w * v
            cols.append(tuple(acc))
    return GradedMorphism.from_columns(grade, f.dom, g.cod, cols, check=False)


def gtensor(f: GradedMorphism, g: GradedMorphism) -> GradedMorphism:
    """``f (x) g : X (x) Y -> X' (x) Y'`` at the disjoint union of grades."""
    grade = f.grade.tensor(g.grade)
    rf, rg = grade.restriction(f.grade), grade.restriction(g.grade)
    cols = []
    for c in range(grade.size):
        for x in range(f.dom.size):
            fc = f.column(rf[c], x)
            for y in range(g.dom.size):
                gc = g.column(rg[c], y)
                cols.append(fs.outer(fc, gc))
    return GradedMorphism.from_columns(grade, f.dom * g.dom, f.cod * g.cod, cols, check=False)


def gpair(f: GradedMorphism, g: GradedMorphism) -> GradedMorphism:
    """``<f, g> = (f (x) g) . copy : X -> A (x) B`` computed without the ``X (x) X`` detour."""
    if f.dom.size != g.dom.size:
        raise DimensionError("pairing needs a common domain")
    grade = f.grade.tensor(g.grade)
    rf, rg = grade.restriction(f.grade), grade.restriction(g.grade)
    cols = [fs.outer(f.column(rf[c], x), g.column(rg[c], x))
            for c in range(grade.size) for x in range(f.dom.size)]
    return GradedMorphism.from_columns(grade, f.dom, f.cod * g.cod, cols, check=False)


def gcoproduct(f: GradedMorphism, g: GradedMorphism) -> GradedMorphism:
    """Copairing ``[f, g] : X + Y -> Z``; both must already share a grade."""
    if f.grade != g.grade:
        raise GradeError(f"copairing needs equal grades, got {f.grade} and {g.grade}")
    if f.cod.size != g.cod.size:
        raise DimensionError("copairing needs equal codomains")
    cols = []
    for c in range(f.grade.size):
        cols.extend(f.column(c, x) for x in range(f.dom.size))
        cols.extend(g.column(c, y) for y in range(g.dom.size))
    return GradedMorphism.from_columns(f.grade, f.dom + g.dom, f.cod, cols, check=False)


def identity(n) -> GradedMorphism:
    return lift(fs.identity(n))


def discard(f: GradedMorphism) -> GradedMorphism:
    """Compose with the unique map to ``1``."""
    return gcompose(lift(fs.bang(f.cod)), f)


def bernoulli() -> GradedMorphism:
    """The fair coin ``1 -> 2``."""
    return choose([Fraction(1, 2), Fraction(1, 2)])


def choose(p) -> GradedMorphism:
    """A fixed distribution ``1 -> n`` at the empty grade."""
    return lift(fs.column_matrix(ProbVector(p)))


def knight(name: str, arity: int = 2) -> GradedMorphism:
    """A Knightian draw from urn ``name``: the identity at grade ``{name: arity}``."""
    if arity < 2:
        raise GradeError("a Knightian urn needs at least two outcomes")
    grade = Grade.single(name, arity)
    return GradedMorphism(grade, 1, arity, fs.identity(arity))
