"""Seeded random generation of well-typed, well-graded programs.

Knightian names are handed out from a *pool*.  Sequential constructs
(binding, tuples, the condition of ``if``) split the pool so their parts
never draw the same urn twice; the two branches of ``if`` share what is
left, which is how the same urn comes to be used on both sides.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .syntax import BOOL, THREE, Bernoulli, Choose, Ctor, If, Knight, Let, Pair, Prod, Term, Type, Var

Pool = Dict[str, int]

VALUE_TYPES: Tuple[Type, ...] = (BOOL, THREE)
BINDING_TYPES: Tuple[Type, ...] = (BOOL, BOOL, THREE, Prod((BOOL, BOOL)))


def random_probs(rng: random.Random, n: int, max_weight: int = 3) -> Tuple[Fraction, ...]:
    weights = [rng.randint(0, max_weight) for _ in range(n)]
    if not any(weights):
        weights[rng.randrange(n)] = 1
    total = sum(weights)
    return tuple(Fraction(w, total) for w in weights)


def random_pool(rng: random.Random, names: Sequence[str], max_arity: int = 3) -> Pool:
    return {n: rng.randint(2, max_arity) for n in names}


def random_context(rng: random.Random, max_vars: int = 2) -> Tuple[Tuple[str, Type], ...]:
    return tuple((f"c{i}", rng.choice(VALUE_TYPES)) for i in range(rng.randint(0, max_vars)))


def split_pool(rng: random.Random, pool: Pool, parts: int) -> List[Pool]:
    out: List[Pool] = [{} for _ in range(parts)]
    for name, arity in pool.items():
        out[rng.randrange(parts)][name] = arity
    return out


def _visible(ctx) -> Dict[str, Type]:
    return {name: ty for name, ty in ctx}


def random_term(rng: random.Random, ctx, ty: Type, pool: Pool, depth: int = 3) -> Term:
    """A term of type ``ty`` in ``ctx`` whose urns all come from ``pool``."""
    if isinstance(ty, Prod):
        parts = split_pool(rng, pool, len(ty.items))
        if depth <= 0 or rng.random() < 0.6:
            return Pair(tuple(random_term(rng, ctx, t, p, depth - 1) for t, p in zip(ty.items, parts)))
    if depth > 0 and rng.random() < 0.55:
        kind = rng.choice(("let", "let", "if"))
        if kind == "let":
            name = f"v{len(ctx)}"
            bty = rng.choice(BINDING_TYPES)
            pt, pu = split_pool(rng, pool, 2)
            bound = random_term(rng, ctx, bty, pt, depth - 1)
            return Let(name, bound, random_term(rng, ctx + ((name, bty),), ty, pu, depth - 1))
        pb, rest = split_pool(rng, pool, 2)
        cond = random_term(rng, ctx, BOOL, pb, depth - 1)
        return If(cond, random_term(rng, ctx, ty, rest, depth - 1),
                  random_term(rng, ctx, ty, rest, depth - 1))
    return _leaf(rng, ctx, ty, pool)


def _leaf(rng: random.Random, ctx, ty: Type, pool: Pool) -> Term:
    if isinstance(ty, Prod):
        parts = split_pool(rng, pool, len(ty.items))
        return Pair(tuple(_leaf(rng, ctx, t, p) for t, p in zip(ty.items, parts)))
    options: List[Term] = [Ctor(rng.randrange(ty.n), ty)]
    options += [Var(n) for n, t in _visible(ctx).items() if t == ty] * 2
    options.append(Choose(random_probs(rng, ty.n)))
    if ty == BOOL:
        options.append(Bernoulli())
    options += [Knight(n, k) for n, k in pool.items() if k == ty.n] * 2
    return rng.choice(options)


def random_closed_term(rng: random.Random, ty: Type = None, names=("a1", "a2", "a3"),
                       depth: int = 3) -> Term:
    ty = ty or rng.choice(VALUE_TYPES)
    return random_term(rng, (), ty, random_pool(rng, names), depth)

