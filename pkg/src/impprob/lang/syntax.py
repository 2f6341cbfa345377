"""Types and abstract syntax of the surface language, plus a pretty-printer."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple


# -- types -----------------------------------------------------------------

class Type:
    size: int


@dataclass(frozen=True)
class Fin(Type):
    """A finite type with ``n`` constructors; ``Fin(2)`` is Bool, ``Fin(3)`` is Three."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("Fin(n) needs n >= 1")

    @property
    def size(self):
        return self.n

    def __str__(self):
        return {1: "Unit", 2: "Bool", 3: "Three"}.get(self.n, f"Fin({self.n})")


@dataclass(frozen=True)
class Prod(Type):
    items: Tuple[Type, ...]

    @property
    def size(self):
        n = 1
        for t in self.items:
            n *= t.size
        return n

    def __str__(self):
        return "(" + " * ".join(str(t) for t in self.items) + ")"


@dataclass(frozen=True)
class Sum(Type):
    items: Tuple[Type, ...]

    @property
    def size(self):
        return sum(t.size for t in self.items)

    def __str__(self):
        return "(" + " + ".join(str(t) for t in self.items) + ")"


def sum_type(*items: Type) -> Type:
    """Sums of units collapse to ``Fin``, so ``1 + 1`` is Bool."""
    if all(t == UNIT for t in items):
        return Fin(len(items))
    return Sum(tuple(items))


UNIT = Fin(1)
BOOL = Fin(2)
THREE = Fin(3)


# -- terms -----------------------------------------------------------------

class Term:
    pass


@dataclass(frozen=True)
class Var(Term):
    name: str


@dataclass(frozen=True)
class Let(Term):
    name: str
    bound: Term
    body: Term


@dataclass(frozen=True)
class If(Term):
    cond: Term
    then: Term
    orelse: Term


@dataclass(frozen=True)
class Pair(Term):
    items: Tuple[Term, ...]


@dataclass(frozen=True)
class Bernoulli(Term):
    pass


@dataclass(frozen=True)
class Choose(Term):
    probs: Tuple[Fraction, ...]


@dataclass(frozen=True)
class Knight(Term):
    name: str
    arity: int = 2


@dataclass(frozen=True)
class Ctor(Term):
    """The ``index``-th (0-based) constructor of ``Fin(n)``."""

    index: int
    type: Fin

    def __post_init__(self):
        if not 0 <= self.index < self.type.n:
            raise ValueError(f"constructor {self.index} out of range for {self.type}")


@dataclass(frozen=True)
class Regrade(Term):
    """Explicit coercion: ``("flip", a)`` or ``("perm", a, (p0, p1, ...))``."""

    op: tuple
    body: Term


TRUE = Ctor(0, BOOL)
FALSE = Ctor(1, BOOL)
RED, GREEN, BLUE = Ctor(0, THREE), Ctor(1, THREE), Ctor(2, THREE)

_CTOR_NAMES = {(0, 2): "true", (1, 2): "false", (0, 3): "r", (1, 3): "g", (2, 3): "b"}


def free_vars(t: Term) -> frozenset:
    if isinstance(t, Var):
        return frozenset([t.name])
    if isinstance(t, Let):
        return free_vars(t.bound) | (free_vars(t.body) - {t.name})
    if isinstance(t, If):
        return free_vars(t.cond) | free_vars(t.then) | free_vars(t.orelse)
    if isinstance(t, Pair):
        return frozenset().union(*(free_vars(x) for x in t.items))
    if isinstance(t, Regrade):
        return free_vars(t.body)
    return frozenset()


def knight_names(t: Term) -> frozenset:
    if isinstance(t, Knight):
        return frozenset([t.name])
    if isinstance(t, Let):
        return knight_names(t.bound) | knight_names(t.body)
    if isinstance(t, If):
        return knight_names(t.cond) | knight_names(t.then) | knight_names(t.orelse)
    if isinstance(t, Pair):
        return frozenset().union(*(knight_names(x) for x in t.items))
    if isinstance(t, Regrade):
        return knight_names(t.body)
    return frozenset()


# -- derived operators -----------------------------------------------------

def prob_choice(t: Term, u: Term) -> Term:
    """``t +_1/2 u``."""
    return If(Bernoulli(), t, u)


def knight_choice(name: str, t: Term, u: Term) -> Term:
    """``t (+)_name u``: a binary Knightian choice drawn from urn ``name``."""
    return If(Knight(name), t, u)


def flip(name: str, t: Term) -> Term:
    return Regrade(("flip", name), t)


# -- pretty printing -------------------------------------------------------

def pretty(t: Term) -> str:
    """Concrete syntax that parses back to ``t``."""
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Bernoulli):
        return "bernoulli"
    if isinstance(t, Choose):
        return "choose[" + ", ".join(str(p) for p in t.probs) + "]"
    if isinstance(t, Knight):
        return f"knight({t.name})" if t.arity == 2 else f"knight({t.name}:{t.arity})"
    if isinstance(t, Ctor):
        return _CTOR_NAMES.get((t.index, t.type.n), f"inj {t.index + 1} of {t.type.n}")
    if isinstance(t, Pair):
        return "(" + ", ".join(pretty(x) for x in t.items) + ")"
    if isinstance(t, Regrade):
        if t.op[0] == "flip":
            head = f"flip({t.op[1]})"
        else:
            head = f"perm({t.op[1]}, [" + ", ".join(str(i) for i in t.op[2]) + "])"
        return f"{head}({pretty(t.body)})"
    if isinstance(t, Let):
        return f"{t.name} <- {_wrap(t.bound)} ; {pretty(t.body)}"
    if isinstance(t, If):
        return f"if {_wrap(t.cond)} then {_wrap(t.then)} else {_wrap(t.orelse)}"
    raise TypeError(f"not a term: {t!r}")


def _wrap(t: Term) -> str:
    s = pretty(t)
    return f"({s})" if isinstance(t, (Let, If)) else s
