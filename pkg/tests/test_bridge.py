import random
from fractions import Fraction as F
from itertools import product

import pytest

from impprob import finstoch as fs
from impprob.bridge import (R, check_oplax, encode, encode_recover_roundtrip, kan_witness, phi,
                            recover, star_compose)
from impprob.credal import CredalSet, kl_compose, kl_copair, kl_identity, pushforward
from impprob.finstoch import StochMatrix
from impprob.imp import (Grade, GradeMap, GradedMorphism, bernoulli, gcompose, gcoproduct,
                         identity, knight, lift, regrade)
from impprob.lang import denote
from impprob.random_instances import random_composable_pair, random_equal_image_pair, random_graded

H = F(1, 2)
FOUR = CredalSet([(1, 0, 0), (H, 0, H), (H, H, 0), (0, H, H)])
TWO = CredalSet([(1, 0, 0), (0, H, H)])


def example_pair():
    """The coin and the two colour conditionals sharing urn a1."""
    a = Grade.single("a1")
    g = GradedMorphism(a, 1, 3, StochMatrix.from_columns([(1, 0, 0), (0, 1, 0)]))
    h = GradedMorphism(a, 1, 3, StochMatrix.from_columns([(1, 0, 0), (0, 0, 1)]))
    return gcoproduct(g, h), bernoulli()


def reachable(g, f, i):
    """All distributions reachable when every intermediate value picks its own column of g."""
    pts = []
    for c in range(f.grade.size):
        p = f.column(c, i)
        for picks in product(range(g.grade.size), repeat=g.dom.size):
            pts.append(tuple(sum(p[y] * g.column(picks[y], y)[j] for y in range(g.dom.size))
                             for j in range(g.cod.size)))
    return set(pts)


def test_phi_examples():
    assert phi(bernoulli()) == CredalSet([(H, H)])
    assert phi(knight("a", 2)) == CredalSet.simplex(2)
    assert phi(denote(corpus_source("listing1"))) == TWO
    with pytest.raises(Exception):
        phi(identity(2))


def corpus_source(name):
    from impprob import corpus
    return corpus.source(name)


def test_R_examples():
    g, _ = example_pair()
    Rg = R(g)
    assert Rg.images == (CredalSet([(1, 0, 0), (0, 1, 0)]), CredalSet([(1, 0, 0), (0, 0, 1)]))
    assert R(identity(3)) == kl_identity(3)
    assert R(denote(corpus_source("listing2"))).images == (FOUR,)


def test_oplax_example_is_strict():
    g, f = example_pair()
    rep = check_oplax(g, f)
    assert rep.lhs.images == (TWO,) and rep.rhs.images == (FOUR,)
    assert rep.pointwise_subset == (True,) and rep.strict
    data = rep.to_json()
    assert data["strict"] is True and data["rhs"]["images"][0]["extremes"][0] == ["0", "1/2", "1/2"]


def test_oplax_equality_for_deterministic_first_stage():
    g, _ = example_pair()
    f = lift(fs.column_matrix(fs.dirac(2, 2)))
    assert not check_oplax(g, f).strict


def test_oplax_against_enumeration_oracle():
    rng = random.Random(21)
    for _ in range(60):
        g, f = random_composable_pair(rng, max_dim=3)
        rep = check_oplax(g, f)
        for i in range(f.dom.size):
            pts = reachable(g, f, i)
            S = rep.rhs.images[i]
            # same hull: S is spanned by reachable points and contains all of them
            assert set(S.extremes) <= pts
            assert all(p in S for p in pts)
            if f.cod.size == 1:
                assert rep.lhs.images[i] == rep.rhs.images[i]


def test_R_preserves_identities_and_copairing():
    rng = random.Random(22)
    for _ in range(20):
        f = random_graded(rng, grade=Grade.of(a=2))
        h = random_graded(rng, grade=Grade.of(a=2), cod=f.cod.size)
        assert R(gcoproduct(f, h)) == kl_copair(R(f), R(h))
        assert R(gcompose(identity(f.cod.size), f)) == R(f)


def test_phi_is_natural():
    rng = random.Random(23)
    for _ in range(20):
        f = random_graded(rng, grade=Grade.of(a=2), dom=1)
        big = Grade.of(a=2, b=3)
        assert phi(regrade(f, GradeMap.projection(big, f.grade))) == phi(f)
        assert phi(regrade(f, GradeMap.negation(f.grade, "a"))) == phi(f)
        n = f.cod.size
        fn = lambda j: j % 2
        pushed = gcompose(lift(StochMatrix.from_function(fn, n, 2)), f)
        assert phi(pushed) == pushforward(phi(f), fn, 2)


def test_star_composite():
    g, f = example_pair()
    s = star_compose(g, f)
    assert phi(s) == FOUR
    assert s.grade.size == f.grade.size * g.grade.size ** g.dom.size
    rng = random.Random(24)
    for _ in range(30):
        g, f = random_composable_pair(rng, closed=True, max_dim=3)
        s = star_compose(g, f)
        assert s.grade.size == f.grade.size * g.grade.size ** g.dom.size
        assert phi(s) == kl_compose(R(g), R(f)).images[0]
        if g.dom.size == 1:
            assert phi(s) == phi(gcompose(g, f))


def test_kan_witness_examples():
    w = kan_witness(fs.identity(2), fs.identity(2))
    assert w.mpp.size == 2 and w.g == fs.identity(2) and w.h == fs.identity(2)
    f = StochMatrix.from_columns([(1, 0), (0, 1), (H, H)])
    f2 = StochMatrix.from_columns([(0, 1), (1, 0)])
    w = kan_witness(f, f2)
    assert w.mpp.size == 2
    assert w.h == fs.identity(2)
    assert w.g.column(2) == (H, H)
    assert w.validates(f, f2)
    with pytest.raises(ValueError):
        kan_witness(f, StochMatrix.from_columns([(1, 0)]))


def test_kan_witness_random():
    rng = random.Random(25)
    for _ in range(40):
        f, f2 = random_equal_image_pair(rng)
        w = kan_witness(f, f2)
        assert fs.compose(w.h, w.g) == f and fs.compose(w.h, w.gp) == f2
        assert fs.is_surjective(w.g) and fs.is_surjective(w.gp)
        assert w.mpp.size == len(CredalSet(f.columns()).extremes)


def test_encode_recover():
    assert encode_recover_roundtrip(knight("a", 2))
    assert encode_recover_roundtrip(denote(corpus_source("listing1")))
    e = encode(knight("a", 2))
    # each column is half the original plus half a marker
    assert e.matrix.columns() == ((H, 0, H, 0), (0, H, 0, H))
    assert recover(CredalSet([(1, 0)]), 1, 1) is None
    rng = random.Random(26)
    for _ in range(40):
        assert encode_recover_roundtrip(random_graded(rng, max_dim=3))


def test_oracle_runner():
    from impprob.oracles import ORACLES, run_oracle
    with pytest.raises(ValueError):
        run_oracle("nope")
    for which in sorted(ORACLES):
        a, b = run_oracle(which, seed=3, count=5), run_oracle(which, seed=3, count=5)
        assert a.ok and a.to_json() == b.to_json()
    assert "strict" in run_oracle("oplax", seed=0, count=40).stats
