"""Seeded generators of small exact instances.

Entries have small denominators and columns are often Dirac, so credal
images have interesting faces rather than being generic polytopes.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import List, Sequence, Tuple

from .finstoch import StochMatrix
from .imp import Grade, GradedMorphism

# Grades whose carrier has at most four elements, as (arity, ...) shapes.
GRADE_SHAPES: Tuple[Tuple[int, ...], ...] = ((), (2,), (3,), (4,), (2, 2))


def random_prob_vector(rng: random.Random, n: int, dirac_bias: float = 0.3,
                       max_weight: int = 4) -> Tuple[Fraction, ...]:
    if rng.random() < dirac_bias:
        i = rng.randrange(n)
        return tuple(Fraction(int(j == i)) for j in range(n))
    weights = [rng.randint(0, max_weight) for _ in range(n)]
    if not any(weights):
        weights[rng.randrange(n)] = 1
    total = sum(weights)
    return tuple(Fraction(w, total) for w in weights)


def random_grade(rng: random.Random, prefix: str = "a", shapes=GRADE_SHAPES) -> Grade:
    shape = rng.choice(shapes)
    return Grade(tuple((f"{prefix}{i + 1}", k) for i, k in enumerate(shape)))


def random_stoch(rng: random.Random, dom: int, cod: int, **kw) -> StochMatrix:
    return StochMatrix.from_columns([random_prob_vector(rng, cod, **kw) for _ in range(dom)],
                                    cod=cod)


def random_graded(rng: random.Random, grade: Grade = None, dom: int = None, cod: int = None,
                  max_dim: int = 4, prefix: str = "a") -> GradedMorphism:
    grade = random_grade(rng, prefix) if grade is None else grade
    dom = rng.randint(1, max_dim) if dom is None else dom
    cod = rng.randint(1, max_dim) if cod is None else cod
    return GradedMorphism(grade, dom, cod, random_stoch(rng, grade.size * dom, cod))


def random_composable_pair(rng: random.Random, max_dim: int = 4, closed: bool = False):
    """``(g, f)`` with ``f : k -> m`` and ``g : m -> n`` at disjoint grades."""
    m = rng.randint(1, max_dim)
    f = random_graded(rng, dom=1 if closed else None, cod=m, max_dim=max_dim, prefix="a")
    g = random_graded(rng, dom=m, max_dim=max_dim, prefix="b")
    return g, f


def random_equal_image_pair(rng: random.Random, max_dim: int = 4,
                            max_points: int = 4) -> Tuple[StochMatrix, StochMatrix]:
    """Two matrices whose columns have the same convex hull.

    Both contain every generator as a column (in different orders) plus
    different convex mixtures of the generators.
    """
    n = rng.randint(1, max_dim)
    points = [random_prob_vector(rng, n) for _ in range(rng.randint(1, max_points))]

    def columns() -> List[Sequence[Fraction]]:
        cols = list(points)
        for _ in range(rng.randint(0, 3)):
            lam = random_prob_vector(rng, len(points), dirac_bias=0.0)
            cols.append(tuple(sum(l * p[i] for l, p in zip(lam, points)) for i in range(n)))
        rng.shuffle(cols)
        return cols

    return (StochMatrix.from_columns(columns(), cod=n),
            StochMatrix.from_columns(columns(), cod=n))
