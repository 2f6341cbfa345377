import random
from fractions import Fraction as F

import pytest

from impprob import finstoch as fs
from impprob.errors import DimensionError, GradeError, NameClash
from impprob.finstoch import StochMatrix
from impprob.imp import (EMPTY, Grade, GradeMap, GradedMorphism, bernoulli, choose, discard,
                         gcompose, gcoproduct, gpair, gtensor, identity, knight, lift, regrade,
                         weaken)
from impprob.random_instances import random_graded

H = F(1, 2)
R_, G_, B_ = fs.dirac(1, 3), fs.dirac(2, 3), fs.dirac(3, 3)


def shuffle_to(grade, parts, rest_sizes):
    """Matrix ``carrier(grade) (x) rest -> carrier(parts[0]) (x) ... (x) rest`` reading each urn by name."""
    rest = 1
    for s in rest_sizes:
        rest *= s
    size = 1
    for p in parts:
        size *= p.size

    def fn(i):
        c, x = divmod(i, rest)
        a = grade.assignment(c)
        idx = fs.mixed_radix_index([p.index(a) for p in parts], [p.size for p in parts])
        return idx * rest + x

    return StochMatrix.from_function(fn, grade.size * rest, size * rest)


def oracle_compose(g, f):
    # gamma (x) eps (x) X  ->  eps (x) gamma (x) X  ->  eps (x) Y  ->  Z
    grade = f.grade.tensor(g.grade)
    P = shuffle_to(grade, [g.grade, f.grade], [f.dom.size])
    m = fs.compose(g.matrix, fs.compose(fs.kron(fs.identity(g.grade.size), f.matrix), P))
    return GradedMorphism(grade, f.dom, g.cod, m)


def oracle_tensor(f, g):
    # gamma (x) eps (x) X (x) Y  ->  gamma (x) X (x) eps (x) Y  ->  X' (x) Y'
    grade = f.grade.tensor(g.grade)
    X, Y = f.dom.size, g.dom.size
    P = shuffle_to(grade, [f.grade, g.grade], [X, Y])
    n1, n2 = f.grade.size, g.grade.size

    def mid(i):  # (c1, c2, x, y) -> (c1, x, c2, y)
        c1, c2, x, y = fs.mixed_radix_digits(i, [n1, n2, X, Y])
        return fs.mixed_radix_index([c1, x, c2, y], [n1, X, n2, Y])

    Q = StochMatrix.from_function(mid, n1 * n2 * X * Y, n1 * X * n2 * Y)
    m = fs.compose(fs.kron(f.matrix, g.matrix), fs.compose(Q, P))
    return GradedMorphism(grade, X * Y, f.cod.size * g.cod.size, m)


def conditionals():
    g = GradedMorphism(Grade.single("a1"), 1, 3, StochMatrix.from_columns([R_, G_]))
    h = GradedMorphism(Grade.single("a1"), 1, 3, StochMatrix.from_columns([R_, B_]))
    return g, h


def test_grade_canonical_order_and_carrier():
    g = Grade.of(b=3, a=2)
    assert g.names == ("a", "b") and g.size == 6
    assert EMPTY.size == 1
    assert g.assignment(g.index({"a": 1, "b": 2})) == {"a": 1, "b": 2}
    with pytest.raises(GradeError):
        Grade.of(a=1)
    with pytest.raises(NameClash):
        Grade.of(a=2).tensor(Grade.of(a=2))
    with pytest.raises(NameClash):
        Grade.of(a=2).union(Grade.of(a=3))


def test_generators():
    assert bernoulli().matrix.columns() == ((H, H),)
    assert choose(fs.dirac(1, 2)).matrix.columns() == ((1, 0),)
    assert sum(choose((F(1, 3), F(2, 3))).matrix.column(0)) == 1
    k = knight("a", 2)
    assert k.matrix == fs.identity(2) and k.grade == Grade.single("a")
    assert knight("a", 3).matrix == fs.identity(3)
    with pytest.raises(GradeError):
        knight("a", 1)


def test_listing1_pipeline():
    g, h = conditionals()
    out = gcompose(gcoproduct(g, h), bernoulli())
    assert out.grade == Grade.of(a1=2)
    assert [list(r) for r in out.matrix.entries] == [[1, 0], [0, H], [0, H]]


def test_listing2_pipeline_lifts_along_projections():
    g, h = conditionals()
    h2 = GradedMorphism(Grade.single("a2"), 1, 3, h.matrix)
    both = Grade.of(a1=2, a2=2)
    lifted = gcoproduct(weaken(g, both), weaken(h2, both))
    # two columns per assignment of the four-element carrier
    assert lifted.matrix.shape == (3, 8)
    out = gcompose(lifted, bernoulli())
    assert [list(r) for r in out.matrix.entries] == [[1, H, H, 0], [0, 0, H, H], [0, H, 0, H]]


def test_regrading():
    f = random_graded(random.Random(1), grade=Grade.of(a=2))
    assert regrade(f, GradeMap.identity(f.grade)) == f
    c = lift(fs.column_matrix((H, H)))
    w = weaken(c, Grade.of(a1=2))
    assert w.matrix.columns() == ((H, H), (H, H))
    k = weaken(knight("a"), Grade.of(a=2, b=2))
    # carrier order (a, b): columns follow the value of a
    assert k.matrix.columns() == ((1, 0), (1, 0), (0, 1), (0, 1))
    with pytest.raises(GradeError):
        regrade(f, GradeMap.identity(Grade.of(b=2)))
    with pytest.raises(GradeError):
        GradeMap(Grade.of(a=2), Grade.of(a=2), StochMatrix.from_columns([(1, 0), (1, 0)]))


def test_gcompose_and_gtensor_match_displayed_composites():
    rng = random.Random(7)
    for _ in range(80):
        f = random_graded(rng, prefix="a", max_dim=3)
        g = random_graded(rng, dom=f.cod.size, prefix="b", max_dim=3)
        assert gcompose(g, f) == oracle_compose(g, f)
        h = random_graded(rng, prefix="b", max_dim=3)
        assert gtensor(f, h) == oracle_tensor(f, h)


def test_composition_units_and_clashes():
    rng = random.Random(8)
    f = random_graded(rng)
    assert gcompose(identity(f.cod.size), f) == f
    assert gcompose(f, identity(f.dom.size)) == f
    assert gtensor(identity(1), f) == f
    with pytest.raises(NameClash):
        gcompose(knight("a1"), random_graded(rng, grade=Grade.of(a1=2), cod=1))
    with pytest.raises(DimensionError):
        gcompose(random_graded(rng, dom=3), random_graded(rng, cod=2, prefix="b"))


def test_interchange():
    rng = random.Random(9)
    for _ in range(40):
        f = random_graded(rng, prefix="a", max_dim=3)
        g = random_graded(rng, dom=f.cod.size, prefix="b", max_dim=3)
        h = random_graded(rng, prefix="c", max_dim=3)
        k = random_graded(rng, dom=h.cod.size, prefix="d", max_dim=3)
        assert gcompose(gtensor(g, k), gtensor(f, h)) == gtensor(gcompose(g, f), gcompose(k, h))


def test_pairing_is_tensor_after_copy():
    rng = random.Random(10)
    for _ in range(40):
        f = random_graded(rng, prefix="a", max_dim=3)
        g = random_graded(rng, dom=f.dom.size, prefix="b", max_dim=3)
        assert gpair(f, g) == gcompose(gtensor(f, g), lift(fs.copy(f.dom.size)))


def test_tensor_of_knights_and_coins():
    kk = gtensor(knight("a1"), knight("a2"))
    assert kk.grade == Grade.of(a1=2, a2=2) and kk.matrix == fs.identity(4)
    bb = gtensor(bernoulli(), bernoulli())
    assert bb.grade == EMPTY and bb.matrix.columns() == ((F(1, 4),) * 4,)


def test_coproduct_laws():
    inj = gcoproduct(lift(fs.injection(0, [2, 3])), lift(fs.injection(1, [2, 3])))
    assert inj == identity(5)
    f = random_graded(random.Random(4), grade=Grade.of(a=2))
    both = gcoproduct(f, f)
    n = f.dom.size
    assert gcompose(both, lift(fs.injection(0, [n, n]))) == f
    assert gcompose(both, lift(fs.injection(1, [n, n]))) == f
    with pytest.raises(GradeError):
        gcoproduct(f, weaken(f, Grade.of(a=2, b=2)))


def test_discarding_is_weakened_bang():
    rng = random.Random(12)
    for _ in range(20):
        f = random_graded(rng)
        assert discard(f) == weaken(lift(fs.bang(f.dom.size)), f.grade)


def test_commutativity_needs_no_regrading():
    # x <- knight(a1); y <- knight(b1); (x, y)  versus the other order followed by a swap
    a, b = knight("a1"), knight("b1", 3)
    xy = gcompose(lift(fs.identity(6)), gtensor(a, b))
    yx = gcompose(lift(fs.swap(3, 2)), gtensor(b, a))
    assert xy.grade == yx.grade
    assert xy == yx


def test_permutation_grade_maps():
    g = Grade.of(a=3)
    u = GradeMap.permutation(g, "a", (2, 0, 1))
    f = knight("a", 3)
    assert regrade(f, u).matrix.columns() == (fs.dirac(3, 3), fs.dirac(1, 3), fs.dirac(2, 3))
    with pytest.raises(GradeError):
        GradeMap.permutation(g, "a", (0, 0, 1))
    with pytest.raises(GradeError):
        GradeMap.negation(g, "a")


def test_json_roundtrip():
    f = random_graded(random.Random(13))
    assert GradedMorphism.from_json(f.to_json()) == f
    assert f.to_json()["grade"] == [{"name": n, "arity": k} for n, k in f.grade.sites]
