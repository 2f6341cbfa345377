"""Finite sets and column-stochastic matrices over the rationals.

A morphism ``m -> n`` is an ``n x m`` matrix whose columns are probability
vectors.  Products of finite sets are enumerated mixed-radix, row-major:
the pair ``(i, j)`` in ``m (x) n`` sits at index ``i * n + j``.  This is the
enumeration used by :func:`kron` and :func:`copy`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence

from .errors import DimensionError, StochasticityError
from .rational_lp import as_rational

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class FinSet:
    """A finite set ``{0, ..., size-1}`` with optional display labels."""

    size: int
    labels: Optional[tuple] = None

    def __post_init__(self):
        if not isinstance(self.size, int) or self.size < 1:
            raise DimensionError(f"finite sets here are nonempty, got size {self.size!r}")
        if self.labels is not None:
            labels = tuple(str(x) for x in self.labels)
            if len(labels) != self.size:
                raise DimensionError("one label per element required")
            if len(set(labels)) != len(labels):
                raise DimensionError("labels must be distinct")
            object.__setattr__(self, "labels", labels)

    def __len__(self):
        return self.size

    def compatible(self, other: "FinSet") -> bool:
        """Same size, and same labels when both sides carry labels."""
        if self.size != other.size:
            return False
        if self.labels is None or other.labels is None:
            return True
        return self.labels == other.labels

    def __mul__(self, other: "FinSet") -> "FinSet":
        labels = None
        if self.labels is not None and other.labels is not None:
            labels = tuple(f"{a},{b}" for a in self.labels for b in other.labels)
        return FinSet(self.size * other.size, labels)

    def __add__(self, other: "FinSet") -> "FinSet":
        return FinSet(self.size + other.size)


def as_finset(x) -> FinSet:
    return x if isinstance(x, FinSet) else FinSet(int(x))


class ProbVector(tuple):
    """An exact probability vector: nonnegative rationals summing to one."""

    def __new__(cls, entries: Iterable):
        values = tuple(as_rational(x) for x in entries)
        if not values:
            raise DimensionError("zero-dimensional probability vector")
        if any(v < 0 for v in values):
            raise StochasticityError(f"negative entry in {_fmt(values)}")
        if sum(values) != 1:
            raise StochasticityError(f"entries of {_fmt(values)} sum to {sum(values)}")
        return super().__new__(cls, values)

    @property
    def dim(self) -> int:
        return len(self)

    def __repr__(self):
        return f"ProbVector({_fmt(self)})"

    def to_json(self):
        return [str(x) for x in self]


def _fmt(values) -> str:
    return "(" + ", ".join(str(v) for v in values) + ")"


def dirac(i: int, n: int) -> ProbVector:
    """The Dirac vector at ``i`` (1-based) in ``D(n)``."""
    if not 1 <= i <= n:
        raise IndexError(f"dirac index {i} out of range 1..{n}")
    return ProbVector(ONE if k == i - 1 else ZERO for k in range(n))


def uniform(n: int) -> ProbVector:
    if n < 1:
        raise DimensionError("uniform distribution on an empty set")
    return ProbVector([Fraction(1, n)] * n)


def convex_comb(p: Sequence, q: Sequence, r) -> ProbVector:
    """``p +_r q = r*p + (1-r)*q``."""
    r = as_rational(r)
    if not 0 <= r <= 1:
        raise ValueError(f"mixing weight {r} outside [0, 1]")
    if len(p) != len(q):
        raise DimensionError("cannot mix vectors of different dimension")
    return ProbVector(r * a + (1 - r) * b for a, b in zip(p, q))


class StochMatrix:
    """Column-stochastic matrix ``dom -> cod`` with exact entries.

    ``entries`` is stored row-major as a tuple of ``cod.size`` rows each of
    length ``dom.size``.
    """

    __slots__ = ("dom", "cod", "_rows", "_cols")

    def __init__(self, entries, dom=None, cod=None, *, check=True):
        rows = tuple(tuple(as_rational(x) for x in row) for row in entries)
        if not rows or not rows[0]:
            raise DimensionError("stochastic matrices have at least one row and column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionError("ragged matrix")
        self._setup(dom, cod, width, len(rows))
        self._rows = rows
        self._cols = None
        if check:
            self._check()

    def _setup(self, dom, cod, width, height):
        dom = FinSet(width) if dom is None else as_finset(dom)
        cod = FinSet(height) if cod is None else as_finset(cod)
        if dom.size != width or cod.size != height:
            raise DimensionError(
                f"entries are {height}x{width} but dom={dom.size}, cod={cod.size}")
        self.dom = dom
        self.cod = cod

    def _check(self):
        for j, col in enumerate(self.columns()):
            if any(x < 0 for x in col) or sum(col) != 1:
                raise StochasticityError(f"column {j} is not a probability vector: {_fmt(col)}")

    @classmethod
    def from_columns(cls, columns, cod=None, dom=None, *, check=True) -> "StochMatrix":
        cols = tuple(tuple(as_rational(x) for x in c) for c in columns)
        if not cols or not cols[0]:
            raise DimensionError("a stochastic matrix needs at least one column")
        n = len(cols[0])
        if any(len(c) != n for c in cols):
            raise DimensionError("columns of different lengths")
        return cls._trusted(cols, dom, cod, check=check)

    @classmethod
    def _trusted(cls, cols: tuple, dom=None, cod=None, *, check=False) -> "StochMatrix":
        """Build from a tuple of equal-length tuples of Fractions without conversion."""
        m = object.__new__(cls)
        m._setup(dom, cod, len(cols), len(cols[0]))
        m._rows = None
        m._cols = cols
        if check:
            m._check()
        return m

    @property
    def entries(self) -> tuple:
        """Row-major entries."""
        if self._rows is None:
            self._rows = tuple(zip(*self._cols))
        return self._rows

    @classmethod
    def from_function(cls, fn: Callable[[int], int], dom, cod) -> "StochMatrix":
        """Deterministic matrix of a function on indices."""
        dom, cod = as_finset(dom), as_finset(cod)
        cols = []
        for i in range(dom.size):
            j = fn(i)
            if not 0 <= j < cod.size:
                raise IndexError(f"function sends {i} outside codomain of size {cod.size}")
            cols.append(tuple(ONE if k == j else ZERO for k in range(cod.size)))
        return cls._trusted(tuple(cols), dom, cod)

    @property
    def shape(self):
        return (self.cod.size, self.dom.size)

    def column(self, j: int) -> tuple:
        return self.columns()[j]

    def columns(self) -> tuple:
        if self._cols is None:
            self._cols = tuple(zip(*self._rows))
        return self._cols

    def __eq__(self, other):
        if not isinstance(other, StochMatrix):
            return NotImplemented
        return self.dom == other.dom and self.cod == other.cod and self.columns() == other.columns()

    def __hash__(self):
        return hash((self.dom, self.cod, self.columns()))

    def same_entries(self, other: "StochMatrix") -> bool:
        """Equality of the underlying numbers, ignoring labels."""
        return self.columns() == other.columns()

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.entries)
        return f"StochMatrix[{self.cod.size}x{self.dom.size}]({body})"

    def __matmul__(self, other: "StochMatrix") -> "StochMatrix":
        return compose(self, other)

    def apply(self, p: Sequence) -> ProbVector:
        """Push a distribution on ``dom`` forward to ``cod``."""
        if len(p) != self.dom.size:
            raise DimensionError("vector length does not match the domain")
        return ProbVector(sum(a * x for a, x in zip(row, p)) for row in self.entries)

    def is_deterministic(self) -> bool:
        return all(sum(1 for x in c if x) == 1 for c in self.columns())

    def to_json(self):
        return {
            "dom": self.dom.size,
            "cod": self.cod.size,
            "entries": [[str(x) for x in row] for row in self.entries],
        }

    @classmethod
    def from_json(cls, data) -> "StochMatrix":
        return cls(data["entries"], data["dom"], data["cod"])


def identity(n) -> StochMatrix:
    n = as_finset(n)
    return StochMatrix.from_function(lambda i: i, n, n)


def bang(n) -> StochMatrix:
    """The unique map to the one-point set."""
    return StochMatrix.from_function(lambda i: 0, as_finset(n), FinSet(1))


def column_matrix(p: Sequence) -> StochMatrix:
    """A distribution seen as a morphism ``1 -> n``."""
    return StochMatrix.from_columns([ProbVector(p)])


def compose(g: StochMatrix, f: StochMatrix) -> StochMatrix:
    """``g . f`` (first ``f``, then ``g``), i.e. the matrix product ``g f``."""
    if not f.cod.compatible(g.dom):
        raise DimensionError(f"cannot compose: cod(f)={f.cod} but dom(g)={g.dom}")
    gcols = g.columns()
    cols = []
    for fc in f.columns():
        acc = [ZERO] * g.cod.size
        for y, w in enumerate(fc):
            if w:
                for i, x in enumerate(gcols[y]):
                    if x:
                        acc[i] += w * x
        cols.append(tuple(acc))
    return StochMatrix._trusted(tuple(cols), f.dom, g.cod)


def outer(p: Sequence, q: Sequence) -> tuple:
    """Flattened outer product ``p (x) q``, row-major."""
    zeros = (ZERO,) * len(q)
    out = []
    for a in p:
        out.extend([a * b if b else ZERO for b in q] if a else zeros)
    return tuple(out)


def kron(f: StochMatrix, g: StochMatrix) -> StochMatrix:
    """Kronecker product: ``f (x) g : f.dom*g.dom -> f.cod*g.cod``."""
    cols = []
    for fc in f.columns():
        for gc in g.columns():
            cols.append(outer(fc, gc))
    return StochMatrix._trusted(tuple(cols), f.dom * g.dom, f.cod * g.cod)


def coproduct(f: StochMatrix, g: StochMatrix) -> StochMatrix:
    """Copairing ``[f, g] : m + n -> k``: the columns of ``f`` then those of ``g``."""
    if not f.cod.compatible(g.cod):
        raise DimensionError("copairing needs equal codomains")
    return StochMatrix._trusted(f.columns() + g.columns(), f.dom + g.dom, f.cod)


def injection(k: int, sizes: Sequence[int]) -> StochMatrix:
    """The ``k``-th (0-based) coproduct injection into ``sizes[0] + sizes[1] + ...``."""
    offset = sum(sizes[:k])
    total = sum(sizes)
    return StochMatrix.from_function(lambda i: offset + i, sizes[k], total)


def copy(n) -> StochMatrix:
    """``copy_n : n -> n (x) n``, column ``i`` is the Dirac at ``(i, i)``."""
    n = as_finset(n)
    return StochMatrix.from_function(lambda i: i * n.size + i, n, n * n)


def swap(m, n) -> StochMatrix:
    """Symmetry ``m (x) n -> n (x) m``."""
    m, n = as_finset(m), as_finset(n)
    return StochMatrix.from_function(
        lambda k: (k % n.size) * m.size + k // n.size, m * n, n * m)


def projection(sizes: Sequence[int], keep: int) -> StochMatrix:
    """Marginal onto factor ``keep`` (0-based) of a mixed-radix product."""
    total = 1
    for s in sizes:
        total *= s
    stride = 1
    for s in sizes[keep + 1:]:
        stride *= s
    return StochMatrix.from_function(lambda k: (k // stride) % sizes[keep], total, sizes[keep])


def is_surjective(f: StochMatrix) -> bool:
    """Every codomain point is hit by some Dirac column."""
    hit = set()
    for col in f.columns():
        nz = [i for i, x in enumerate(col) if x]
        if len(nz) == 1:
            hit.add(nz[0])
    return len(hit) == f.cod.size


def mixed_radix_index(digits: Sequence[int], sizes: Sequence[int]) -> int:
    idx = 0
    for d, s in zip(digits, sizes):
        idx = idx * s + d
    return idx


def mixed_radix_digits(index: int, sizes: Sequence[int]) -> tuple:
    digits = []
    for s in reversed(sizes):
        digits.append(index % s)
        index //= s
    return tuple(reversed(digits))
