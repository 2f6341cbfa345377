"""Type and grade inference.

A judgement ``ctx |- t : A @ grade`` is represented by :class:`TypedTerm`,
which keeps the typed subterms so elaboration does not need to re-infer.
The grade of ``if`` is the condition's grade tensored with the union of the
branch grades; each branch is later weakened to that union.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

from ..errors import GradeError, ImpTypeError, NameClash, ScopeError
from ..finstoch import ProbVector
from ..imp import EMPTY, Grade
from .syntax import (BOOL, Bernoulli, Choose, Ctor, Fin, If, Knight, Let, Pair, Prod, Regrade,
                     Term, Type, Var)

Context = Tuple[Tuple[str, Type], ...]


@dataclass(frozen=True)
class TypedTerm:
    term: Term
    context: Context
    type: Type
    grade: Grade
    children: Tuple["TypedTerm", ...] = ()

    @property
    def context_sizes(self) -> Tuple[int, ...]:
        return tuple(t.size for _, t in self.context)

    @property
    def context_size(self) -> int:
        n = 1
        for s in self.context_sizes:
            n *= s
        return n


def as_context(context) -> Context:
    if context is None:
        return ()
    if isinstance(context, dict):
        context = context.items()
    return tuple((str(n), t) for n, t in context)


def infer(term: Term, context: Sequence = ()) -> TypedTerm:
    """Infer type and grade of ``term`` in ``context``, an ordered list of ``(name, Type)``."""
    return _infer(term, as_context(context))


def _tensor(a: Grade, b: Grade, what: str) -> Grade:
    try:
        return a.tensor(b)
    except NameClash as e:
        raise NameClash(f"{what}: {e}") from None


def _infer(t: Term, ctx: Context) -> TypedTerm:
    if isinstance(t, Var):
        for name, ty in reversed(ctx):
            if name == t.name:
                return TypedTerm(t, ctx, ty, EMPTY)
        raise ScopeError(f"unbound variable {t.name!r}")
    if isinstance(t, Ctor):
        return TypedTerm(t, ctx, t.type, EMPTY)
    if isinstance(t, Bernoulli):
        return TypedTerm(t, ctx, BOOL, EMPTY)
    if isinstance(t, Choose):
        ProbVector(t.probs)
        return TypedTerm(t, ctx, Fin(len(t.probs)), EMPTY)
    if isinstance(t, Knight):
        return TypedTerm(t, ctx, Fin(t.arity), Grade.single(t.name, t.arity))
    if isinstance(t, Let):
        bound = _infer(t.bound, ctx)
        body = _infer(t.body, ctx + ((t.name, bound.type),))
        grade = _tensor(bound.grade, body.grade, f"in binding of {t.name!r}")
        return TypedTerm(t, ctx, body.type, grade, (bound, body))
    if isinstance(t, If):
        cond = _infer(t.cond, ctx)
        if cond.type != BOOL:
            raise ImpTypeError(f"condition has type {cond.type}, expected Bool")
        then, orelse = _infer(t.then, ctx), _infer(t.orelse, ctx)
        if then.type != orelse.type:
            raise ImpTypeError(f"branches have types {then.type} and {orelse.type}")
        joined = then.grade.union(orelse.grade)
        grade = _tensor(cond.grade, joined, "between condition and branches")
        return TypedTerm(t, ctx, then.type, grade, (cond, then, orelse))
    if isinstance(t, Pair):
        items = tuple(_infer(x, ctx) for x in t.items)
        grade = EMPTY
        for x in items:
            grade = _tensor(grade, x.grade, "between tuple components")
        return TypedTerm(t, ctx, Prod(tuple(x.type for x in items)), grade, items)
    if isinstance(t, Regrade):
        body = _infer(t.body, ctx)
        kind, name = t.op[0], t.op[1]
        if name not in body.grade:
            raise GradeError(f"{kind}({name}) applied to a term that does not draw from {name!r}")
        k = body.grade.arity(name)
        if kind == "flip" and k != 2:
            raise GradeError(f"flip({name}) needs a binary urn, {name!r} has arity {k}")
        if kind == "perm" and sorted(t.op[2]) != list(range(k)):
            raise GradeError(f"{list(t.op[2])} is not a permutation of 0..{k - 1}")
        if kind not in ("flip", "perm"):
            raise GradeError(f"unknown coercion {kind!r}")
        return TypedTerm(t, ctx, body.type, body.grade, (body,))
    raise ImpTypeError(f"not a term: {t!r}")
