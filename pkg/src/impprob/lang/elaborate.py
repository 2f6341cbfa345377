"""Two semantics for typed terms.

``elaborate_imp`` builds a graded stochastic matrix out of the categorical
operations in :mod:`impprob.imp`; this is the name-aware semantics.
``elaborate_cp`` forgets names, reads every ``knight`` as the full simplex
and sequences with Kleisli extension of credal sets.  The second semantics
depends on evaluation order, which is selected with ``order``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Sequence

from .. import finstoch as fs
from ..credal import CredalSet, KlMorphism, kleisli_extend, unit
from ..imp import (GradeMap, GradedMorphism, choose, gcompose, gcoproduct, gpair, knight, lift,
                   regrade, weaken)
from .checker import TypedTerm, infer
from .syntax import (Bernoulli, Choose, Ctor, If, Knight, Let, Pair, Regrade, Term, Var,
                     free_vars)

ORDERS = ("left", "right")
HALF = Fraction(1, 2)


def _var_position(tt: TypedTerm) -> int:
    name = tt.term.name
    for i in range(len(tt.context) - 1, -1, -1):
        if tt.context[i][0] == name:
            return i
    raise AssertionError("checker let an unbound variable through")


def _const(tt: TypedTerm, gen: GradedMorphism) -> GradedMorphism:
    """A closed generator precomposed with discarding the context."""
    return gcompose(gen, lift(fs.bang(tt.context_size)))


def elaborate_imp(tt: TypedTerm) -> GradedMorphism:
    """Graded morphism ``carrier(grade) (x) [[ctx]] -> [[type]]`` denoted by ``tt``."""
    t = tt.term
    n_ctx = tt.context_size
    if isinstance(t, Var):
        proj = fs.projection(tt.context_sizes, _var_position(tt))
        return lift(proj)
    if isinstance(t, Ctor):
        return _const(tt, lift(fs.column_matrix(fs.dirac(t.index + 1, t.type.n))))
    if isinstance(t, Bernoulli):
        return _const(tt, choose([HALF] * 2))
    if isinstance(t, Choose):
        return _const(tt, choose(t.probs))
    if isinstance(t, Knight):
        return _const(tt, knight(t.name, t.arity))
    # gpair(f, g) is (f (x) g) . copy, fused.
    ident = lift(fs.identity(n_ctx))
    if isinstance(t, Let):
        bound, body = (elaborate_imp(c) for c in tt.children)
        return gcompose(body, gpair(ident, bound))
    if isinstance(t, If):
        cond, then, orelse = (elaborate_imp(c) for c in tt.children)
        joined = tt.children[1].grade.union(tt.children[2].grade)
        # (1+1) (x) ctx and ctx + ctx enumerate in the same order.
        branches = gcoproduct(weaken(then, joined), weaken(orelse, joined))
        return gcompose(branches, gpair(cond, ident))
    if isinstance(t, Pair):
        parts = [elaborate_imp(c) for c in tt.children]
        acc = parts[-1]
        for p in reversed(parts[:-1]):
            acc = gpair(p, acc)
        return acc
    if isinstance(t, Regrade):
        body = elaborate_imp(tt.children[0])
        if t.op[0] == "flip":
            u = GradeMap.negation(body.grade, t.op[1])
        else:
            u = GradeMap.permutation(body.grade, t.op[1], t.op[2])
        return regrade(body, u)
    raise TypeError(f"cannot elaborate {t!r}")


# -- unnamed credal semantics ---------------------------------------------

def right_first(t: Term, bound: frozenset = frozenset()) -> Term:
    """Reorder chains of independent bindings so later ones run first.

    A chain ``x1 <- t1 ; ... ; xk <- tk ; body`` is rescheduled so that,
    among the bindings whose dependencies are already available, the one
    written last is evaluated first.  Chains that shadow a name are left
    in textual order.
    """
    if isinstance(t, Let):
        chain = []
        node = t
        while isinstance(node, Let):
            chain.append(node)
            node = node.body
        names = [b.name for b in chain]
        scope = set(bound)
        bindings = []
        for b in chain:
            bindings.append((b.name, right_first(b.bound, frozenset(scope))))
            scope.add(b.name)
        body = right_first(node, frozenset(scope))
        if len(set(names)) == len(names) and not (set(names) & bound):
            deps = [{j for j in range(i) if names[j] in free_vars(bindings[i][1])}
                    for i in range(len(bindings))]
            done: List[int] = []
            while len(done) < len(bindings):
                ready = [i for i in range(len(bindings)) if i not in done and deps[i] <= set(done)]
                done.append(max(ready))
            bindings = [bindings[i] for i in done]
        for name, b in reversed(bindings):
            body = Let(name, b, body)
        return body
    if isinstance(t, If):
        return If(right_first(t.cond, bound), right_first(t.then, bound),
                  right_first(t.orelse, bound))
    if isinstance(t, Pair):
        return Pair(tuple(right_first(x, bound) for x in t.items))
    if isinstance(t, Regrade):
        return Regrade(t.op, right_first(t.body, bound))
    return t


def elaborate_cp(tt: TypedTerm, order: str = "left") -> KlMorphism:
    """Credal-set semantics with unnamed Knightian choice.

    ``order="left"`` sequences bindings and tuple components as written;
    ``order="right"`` evaluates independent later bindings and tuple
    components first.
    """
    if order not in ORDERS:
        raise ValueError(f"order must be one of {ORDERS}")
    if order == "right":
        tt = infer(right_first(tt.term, frozenset(n for n, _ in tt.context)), tt.context)
    return KlMorphism([_cp(tt, env, order) for env in range(tt.context_size)],
                      cod=tt.type.size)


def _cp(tt: TypedTerm, env: int, order: str) -> CredalSet:
    t = tt.term
    if isinstance(t, Var):
        digits = fs.mixed_radix_digits(env, tt.context_sizes)
        return unit(digits[_var_position(tt)] + 1, tt.type.size)
    if isinstance(t, Ctor):
        return unit(t.index + 1, t.type.n)
    if isinstance(t, Bernoulli):
        return CredalSet([(HALF, HALF)])
    if isinstance(t, Choose):
        return CredalSet([t.probs])
    if isinstance(t, Knight):
        return CredalSet.simplex(t.arity)
    if isinstance(t, Let):
        bound, body = tt.children
        S = _cp(bound, env, order)
        k = bound.type.size
        f = KlMorphism([_cp(body, env * k + a, order) for a in range(k)])
        return kleisli_extend(f, S)
    if isinstance(t, If):
        cond, then, orelse = tt.children
        f = KlMorphism([_cp(then, env, order), _cp(orelse, env, order)])
        return kleisli_extend(f, _cp(cond, env, order))
    if isinstance(t, Pair):
        sets = [_cp(c, env, order) for c in tt.children]
        sizes = [c.type.size for c in tt.children]
        seq = list(range(len(sets)))
        if order == "right":
            seq.reverse()
        return _sequence(sets, sizes, seq, {})
    if isinstance(t, Regrade):
        return _cp(tt.children[0], env, order)
    raise TypeError(f"cannot elaborate {t!r}")


def _sequence(sets: Sequence[CredalSet], sizes, seq, chosen: Dict[int, int]) -> CredalSet:
    if len(chosen) == len(sets):
        idx = fs.mixed_radix_index([chosen[i] for i in range(len(sets))], sizes)
        total = 1
        for s in sizes:
            total *= s
        return unit(idx + 1, total)
    i = seq[len(chosen)]
    f = KlMorphism([_sequence(sets, sizes, seq, {**chosen, i: v}) for v in range(sizes[i])])
    return kleisli_extend(f, sets[i])
