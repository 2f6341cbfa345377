import random
from fractions import Fraction as F
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from impprob.credal import (CredalSet, KlMorphism, equal, extreme_points, join, kl_compose,
                            kl_identity, kleisli_extend, leq, mix, pushforward, subset, unit)
from impprob.errors import DimensionError
from impprob.finstoch import dirac
from impprob.random_instances import random_prob_vector

from hull_oracle import brute_extremes

H = F(1, 2)
d1, d2, d3 = dirac(1, 3), dirac(2, 3), dirac(3, 3)
FOUR = [(1, 0, 0), (H, 0, H), (H, H, 0), (0, H, H)]


def random_set(rng, n, max_gens=3):
    return CredalSet(random_prob_vector(rng, n) for _ in range(rng.randint(1, max_gens)))


def random_kl(rng, m, n):
    return KlMorphism([random_set(rng, n) for _ in range(m)])


def extend_oracle(f, X):
    """Every combination of one generator per image, weighted by each generator of X."""
    pts = []
    for x in X.generators:
        for choice in product(*(S.generators for S in f.images)):
            pts.append(tuple(sum(xi * q[j] for xi, q in zip(x, choice)) for j in range(f.cod.size)))
    # pure LP pruning of the raw combinations; the LP itself is checked against brute force
    return extreme_points(pts, method="lp")


def test_extreme_point_examples():
    assert extreme_points([d1]) == (d1,)
    assert extreme_points([(1, 0, 0), (0, H, H), (H, F(1, 4), F(1, 4))]) == ((0, H, H), (1, 0, 0))
    assert set(extreme_points(FOUR)) == {tuple(F(x) for x in p) for p in FOUR}
    with pytest.raises(ValueError):
        extreme_points([d1], method="qhull")


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_extreme_points_agree_with_lp_and_brute_force(n):
    rng = random.Random(n)
    for _ in range(40):
        pts = [random_prob_vector(rng, n) for _ in range(rng.randint(1, 7))]
        auto = extreme_points(pts)
        assert auto == extreme_points(pts, method="lp")
        if n <= 4:
            assert auto == brute_extremes(pts)
        assert extreme_points(auto) == auto
        assert CredalSet(auto) == CredalSet(pts)


def test_mix_and_join_examples():
    S = CredalSet([d1, d2])
    assert mix(S, S, F(1, 3)) == S
    assert mix(unit(1, 2), unit(2, 2), H) == CredalSet([(H, H)])
    assert mix(S, unit(3, 3), H) == CredalSet([(H, 0, H), (0, H, H)])
    assert join(S, S) == S
    assert join(unit(1, 2), unit(2, 2)) == CredalSet.simplex(2)
    with pytest.raises(ValueError):
        mix(S, S, 2)
    with pytest.raises(DimensionError):
        join(S, unit(1, 2))


def test_join_is_a_semilattice():
    rng = random.Random(1)
    for _ in range(30):
        A, B, C = (random_set(rng, 3) for _ in range(3))
        assert join(A, join(B, C)) == join(join(A, B), C)
        assert join(A, B) == join(B, A)
        assert join(A, A) == A


def test_subset_and_equality():
    S = CredalSet(FOUR)
    T = CredalSet([(1, 0, 0), (0, H, H)])
    assert subset(S, S) and subset(T, S) and not subset(S, T)
    assert T < S and T <= S
    assert not subset(CredalSet.simplex(2), CredalSet([(H, H)]))
    assert equal(S, CredalSet(list(reversed(FOUR))))
    assert unit(1, 3).extremes == (d1,) and unit(2, 3).extremes == (d2,)
    assert unit(3, 3).extremes == (d3,)


def test_kleisli_extension_examples():
    f = KlMorphism([unit(1, 2), CredalSet.simplex(2)])
    assert kleisli_extend(f, CredalSet.simplex(2)) == CredalSet.simplex(2)
    g = KlMorphism([unit(1, 3), CredalSet([d1, d3])])
    assert kleisli_extend(g, CredalSet([(H, H)])) == CredalSet([(1, 0, 0), (H, 0, H)])
    X = CredalSet([(F(1, 3), F(2, 3))])
    assert kleisli_extend(kl_identity(2), X) == X


def test_kleisli_extension_matches_combination_oracle():
    rng = random.Random(2)
    for _ in range(60):
        m, n = rng.randint(1, 3), rng.randint(1, 4)
        f, X = random_kl(rng, m, n), random_set(rng, m)
        assert kleisli_extend(f, X).extremes == extend_oracle(f, X)


def test_relative_monad_laws():
    rng = random.Random(3)
    for _ in range(40):
        a, b, c, d = (rng.randint(1, 3) for _ in range(4))
        f, g, h = random_kl(rng, a, b), random_kl(rng, b, c), random_kl(rng, c, d)
        assert kl_compose(kl_identity(b), f) == f == kl_compose(f, kl_identity(a))
        assert kl_compose(h, kl_compose(g, f)) == kl_compose(kl_compose(h, g), f)
        # f*(eta(i)) = f(i)
        for i in range(a):
            assert kleisli_extend(f, unit(i + 1, a)) == f.images[i]


def test_composition_is_monotone():
    rng = random.Random(4)
    for _ in range(30):
        m, n, k = (rng.randint(1, 3) for _ in range(3))
        f, g = random_kl(rng, m, n), random_kl(rng, n, k)
        bigger = KlMorphism([join(S, random_set(rng, n)) for S in f.images])
        assert leq(f, bigger)
        assert leq(kl_compose(g, f), kl_compose(g, bigger))


small_sets = st.lists(st.lists(st.integers(0, 3), min_size=3, max_size=3).filter(any),
                      min_size=1, max_size=3).map(
    lambda ws: CredalSet(tuple(F(x, sum(w)) for x in w) for w in ws))


@settings(max_examples=60, deadline=None)
@given(small_sets, small_sets, small_sets)
def test_half_mixing_distributes_over_join(t, u, v):
    assert mix(t, join(u, v), H) == join(mix(t, u, H), mix(t, v, H))


@settings(max_examples=60, deadline=None)
@given(small_sets, small_sets, small_sets)
def test_join_over_half_mixing_only_contains(t, u, v):
    assert subset(join(t, mix(u, v, H)), mix(join(t, u), join(t, v), H))


def test_join_over_half_mixing_is_strict_on_the_colour_example():
    r, g, b = unit(1, 3), unit(2, 3), unit(3, 3)
    lhs = join(r, mix(g, b, H))
    rhs = mix(join(r, g), join(r, b), H)
    assert lhs == CredalSet([(1, 0, 0), (0, H, H)])
    assert rhs == CredalSet(FOUR)
    assert lhs < rhs


def test_join_and_half_mixing_are_different_operations():
    assert join(unit(1, 2), unit(2, 2)) != mix(unit(1, 2), unit(2, 2), H)
    assert join(unit(1, 2), unit(2, 2)) == CredalSet.simplex(2)
    assert mix(unit(1, 2), unit(2, 2), H) == CredalSet([(H, H)])


def test_pushforward():
    S = CredalSet([d1, d2])
    assert pushforward(S, lambda i: 0 if i < 2 else 1, 2) == unit(1, 2)
    assert pushforward(S, lambda i: i, 3) == S


def test_dimension_checks_and_json():
    with pytest.raises(DimensionError):
        CredalSet([])
    with pytest.raises(DimensionError):
        CredalSet([(1, 0), (1, 0, 0)])
    with pytest.raises(DimensionError):
        KlMorphism([unit(1, 2), unit(1, 3)])
    S = CredalSet(FOUR)
    assert S.to_json()["extremes"][0] == ["0", "1/2", "1/2"]
    assert CredalSet.from_json(S.to_json()) == S
    f = KlMorphism([S, unit(2, 3)])
    assert KlMorphism.from_json(f.to_json()) == f
