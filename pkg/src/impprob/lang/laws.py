"""Program equivalences checked by exact elaboration.

Two families are covered.  The structural laws (associativity,
commutativity, weakening, hoisting) relate ``let``/``if`` programs with
metavariables ``t, u, v, b``.  The graded equations relate the derived
binary operators ``+_1/2`` and ``(+)_a`` with metavariables ``u, v, x, y``.
Grades are canonical name-sets, so the coherence regradings of the laws
are identities; where the two sides have different grades the smaller one
is weakened along the canonical projection.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Dict, Mapping, Tuple

from ..errors import NameClash, SideConditionError
from ..imp import GradedMorphism, weaken
from .checker import as_context, infer
from .elaborate import elaborate_imp
from .generate import BINDING_TYPES, VALUE_TYPES, random_context, random_pool, random_term, split_pool
from .syntax import (BOOL, If, Let, Term, flip, free_vars, knight_choice, knight_names, pretty,
                     prob_choice)

LAWS = ("assoc", "comm", "weaken", "hoist")

_REQUIRED = {"assoc": "tuv", "comm": "tuv", "weaken": "tu", "hoist": "btuv"}


@dataclass(frozen=True)
class LawInstance:
    """Metavariable assignment for one of :data:`LAWS`.

    ``terms`` maps the law's metavariables to programs.  For ``assoc``,
    ``u`` lives in ``context, x`` and ``v`` in ``context, y``; for ``comm``,
    ``v`` lives in ``context, x, y``; for ``hoist``, ``u`` and ``v`` live
    in ``context, x``.
    """

    law: str
    terms: Mapping[str, Term]
    context: Tuple = ()
    x: str = "x"
    y: str = "y"

    def to_json(self):
        return {"law": self.law, "context": [[n, str(t)] for n, t in self.context],
                "x": self.x, "y": self.y,
                "terms": {k: pretty(v) for k, v in sorted(self.terms.items())}}


def law_sides(inst: LawInstance) -> Tuple[Term, Term]:
    """Left- and right-hand programs of the law."""
    t = inst.terms
    x, y = inst.x, inst.y
    if inst.law == "assoc":
        return Let(x, t["t"], Let(y, t["u"], t["v"])), Let(y, Let(x, t["t"], t["u"]), t["v"])
    if inst.law == "comm":
        return Let(x, t["t"], Let(y, t["u"], t["v"])), Let(y, t["u"], Let(x, t["t"], t["v"]))
    if inst.law == "weaken":
        return Let(x, t["t"], t["u"]), t["u"]
    if inst.law == "hoist":
        return (If(t["b"], Let(x, t["t"], t["u"]), Let(x, t["t"], t["v"])),
                Let(x, t["t"], If(t["b"], t["u"], t["v"])))
    raise ValueError(f"unknown law {inst.law!r}; expected one of {LAWS}")


def check_side_conditions(inst: LawInstance) -> None:
    if inst.law not in LAWS:
        raise ValueError(f"unknown law {inst.law!r}; expected one of {LAWS}")
    missing = set(_REQUIRED[inst.law]) - set(inst.terms)
    if missing:
        raise SideConditionError(f"{inst.law} needs programs for {sorted(missing)}")
    t = inst.terms
    x, y = inst.x, inst.y
    names = {k: knight_names(v) for k, v in t.items()}

    def disjoint(*keys):
        for i, a in enumerate(keys):
            for b in keys[i + 1:]:
                if names[a] & names[b]:
                    raise SideConditionError(
                        f"{a} and {b} share urns {sorted(names[a] & names[b])}")

    def fresh(var, key):
        if var in free_vars(t[key]):
            raise SideConditionError(f"{var} must not occur free in {key}")

    if inst.law in ("assoc", "comm") and x == y:
        raise SideConditionError("the two bound variables must differ")
    if inst.law == "assoc":
        fresh(x, "v")
        disjoint("t", "u", "v")
    elif inst.law == "comm":
        fresh(x, "u")
        fresh(y, "t")
        disjoint("t", "u", "v")
    elif inst.law == "weaken":
        fresh(x, "u")
        disjoint("t", "u")
    else:
        fresh(x, "b")
        disjoint("b", "t", "u")
        disjoint("b", "t", "v")


def same_denotation(m1: GradedMorphism, m2: GradedMorphism) -> bool:
    """Exact equality, weakening both sides to the union of their grades."""
    if m1.dom.size != m2.dom.size or m1.cod.size != m2.cod.size:
        return False
    if m1.grade != m2.grade:
        try:
            joined = m1.grade.union(m2.grade)
        except NameClash:
            return False
        m1, m2 = weaken(m1, joined), weaken(m2, joined)
    return m1 == m2


def programs_equal(lhs: Term, rhs: Term, context=()) -> bool:
    ctx = as_context(context)
    return same_denotation(elaborate_imp(infer(lhs, ctx)), elaborate_imp(infer(rhs, ctx)))


def check_law(law: str, instance) -> bool:
    """Elaborate both sides of ``law`` and compare them exactly.

    ``instance`` is a :class:`LawInstance` or a mapping of metavariables to
    programs (optionally with ``context``, ``x`` and ``y`` entries).
    Raises :class:`SideConditionError` when the instance is not admissible.
    """
    if not isinstance(instance, LawInstance):
        data = dict(instance)
        instance = LawInstance(law, {k: v for k, v in data.items() if len(k) == 1},
                               as_context(data.get("context", ())),
                               data.get("x", "x"), data.get("y", "y"))
    elif instance.law != law:
        raise ValueError(f"instance is for {instance.law!r}, not {law!r}")
    check_side_conditions(instance)
    lhs, rhs = law_sides(instance)
    try:
        return programs_equal(lhs, rhs, instance.context)
    except NameClash as e:
        raise SideConditionError(str(e)) from None


# -- graded equations for the binary operators ---------------------------

def _kc(a):
    return lambda s, t: knight_choice(a, s, t)


def _pc(s, t):
    return prob_choice(s, t)


def equation_sides(name: str, m: Mapping[str, Term], a: str = "a", b: str = "b"):
    """Both sides of a named equation; ``m`` holds metavariables ``u, v, x, y``."""
    u, v, x, y = (m.get(k) for k in "uvxy")
    ka, kb = _kc(a), _kc(b)
    if name == "knight_interchange":
        return ka(kb(u, v), kb(x, y)), kb(ka(u, x), ka(v, y))
    if name == "coin_interchange":
        return _pc(_pc(u, v), _pc(x, y)), _pc(_pc(u, x), _pc(v, y))
    if name == "mixed_interchange":
        return _pc(ka(u, v), ka(x, y)), ka(_pc(u, x), _pc(v, y))
    if name == "coin_idempotent":
        return _pc(x, x), x
    if name == "knight_idempotent":
        return ka(x, x), x
    if name == "coin_symmetric":
        return _pc(x, y), _pc(y, x)
    if name == "knight_symmetric":
        return ka(x, y), flip(a, ka(y, x))
    if name == "distrib_knight_over_coin":
        return ka(u, _pc(v, x)), _pc(ka(u, v), ka(u, x))
    if name == "distrib_coin_over_knight":
        return _pc(u, ka(v, x)), ka(_pc(u, v), _pc(u, x))
    raise ValueError(f"unknown equation {name!r}")


GRADED_EQUATIONS = ("knight_interchange", "coin_interchange", "mixed_interchange",
                    "coin_idempotent", "knight_idempotent", "coin_symmetric", "knight_symmetric")
DISTRIBUTIVITY = ("distrib_knight_over_coin", "distrib_coin_over_knight")


def check_equation(name: str, metas: Mapping[str, Term], context=(), a: str = "a",
                   b: str = "b") -> bool:
    """Compare both sides of a graded equation exactly."""
    for k, t in metas.items():
        clash = knight_names(t) & {a, b}
        if clash:
            raise SideConditionError(f"metavariable {k} draws from operator urn {sorted(clash)}")
    lhs, rhs = equation_sides(name, metas, a, b)
    return programs_equal(lhs, rhs, context)


# -- randomized suites -----------------------------------------------------

def random_law_instance(rng: random.Random, law: str, depth: int = 2) -> LawInstance:
    """A random admissible instance with at most three urns of arity at most three."""
    ctx = random_context(rng)
    pool = random_pool(rng, ("a1", "a2", "a3"))
    A, B = rng.choice(BINDING_TYPES), rng.choice(BINDING_TYPES)
    C = rng.choice(VALUE_TYPES)
    x, y = "x", "y"
    if law == "assoc":
        pt, pu, pv = split_pool(rng, pool, 3)
        terms = {"t": random_term(rng, ctx, A, pt, depth),
                 "u": random_term(rng, ctx + ((x, A),), B, pu, depth),
                 "v": random_term(rng, ctx + ((y, B),), C, pv, depth)}
    elif law == "comm":
        pt, pu, pv = split_pool(rng, pool, 3)
        terms = {"t": random_term(rng, ctx, A, pt, depth),
                 "u": random_term(rng, ctx, B, pu, depth),
                 "v": random_term(rng, ctx + ((x, A), (y, B)), C, pv, depth)}
    elif law == "weaken":
        pt, pu = split_pool(rng, pool, 2)
        terms = {"t": random_term(rng, ctx, A, pt, depth),
                 "u": random_term(rng, ctx, C, pu, depth)}
    elif law == "hoist":
        pb, pt, puv = split_pool(rng, pool, 3)
        terms = {"b": random_term(rng, ctx, BOOL, pb, depth),
                 "t": random_term(rng, ctx, A, pt, depth),
                 "u": random_term(rng, ctx + ((x, A),), C, puv, depth),
                 "v": random_term(rng, ctx + ((x, A),), C, puv, depth)}
    else:
        raise ValueError(f"unknown law {law!r}")
    return LawInstance(law, terms, ctx, x, y)


def random_equation_metas(rng: random.Random, depth: int = 2):
    """Context and metavariables ``u, v, x, y`` of one type, avoiding urns ``a`` and ``b``."""
    ctx = random_context(rng)
    ty = rng.choice(VALUE_TYPES)
    pool = random_pool(rng, ("c1", "c2"))
    return ctx, {k: random_term(rng, ctx, ty, pool, depth) for k in "uvxy"}


@dataclass
class SuiteReport:
    seed: int
    count: int
    passed: Dict[str, int] = field(default_factory=dict)
    failed: Dict[str, int] = field(default_factory=dict)
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self):
        return {"seed": self.seed, "count": self.count, "passed": self.passed,
                "failed": self.failed, "ok": self.ok, "failures": self.failures[:10]}


def run_law_suite(seed: int = 0, count: int = 200, equation_count: int = None) -> SuiteReport:
    """Check ``count`` random law instances (cycling through :data:`LAWS`), then
    ``equation_count`` random instances of the graded equations (default ``count // 2``).
    """
    rng = random.Random(seed)
    report = SuiteReport(seed, count)
    equations = list(GRADED_EQUATIONS + DISTRIBUTIVITY)
    if equation_count is None:
        equation_count = count // 2

    def record(name, ok, detail):
        bucket = report.passed if ok else report.failed
        bucket[name] = bucket.get(name, 0) + 1
        if not ok:
            report.failures.append(detail)

    for i in range(count):
        law = LAWS[i % len(LAWS)]
        inst = random_law_instance(rng, law)
        record(law, check_law(law, inst), inst.to_json())
    for i in range(equation_count):
        name = equations[i % len(equations)]
        ctx, metas = random_equation_metas(rng)
        record(name, check_equation(name, metas, ctx),
               {"equation": name, "metas": {k: pretty(v) for k, v in sorted(metas.items())}})
    return report
