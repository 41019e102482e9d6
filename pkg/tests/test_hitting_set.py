import random
from itertools import combinations

import pytest

from cclosed import HittingSetInstance, InputError, brute_force_hitting_set, expressive_kernel
from cclosed.hitting_set import all_hitting_sets


def random_hs(rng, max_u=8, max_sets=12, d_values=(2, 3, 4), k_max=3):
    u = rng.randint(1, max_u)
    d = rng.choice(d_values)
    sets = []
    for _ in range(rng.randint(0, max_sets)):
        size = rng.randint(1, min(d, u))
        sets.append(tuple(rng.sample(range(u), size)))
    return HittingSetInstance(u, tuple(sets), d, rng.randint(0, k_max))


def test_canonicalization():
    hs = HittingSetInstance(4, ((2, 1), (1, 2), (3,)), 2, 1)
    assert hs.sets == ((3,), (1, 2))
    with pytest.raises(InputError):
        HittingSetInstance(3, ((),), 2, 1)
    with pytest.raises(InputError):
        HittingSetInstance(3, ((0, 1, 2),), 2, 1)
    with pytest.raises(InputError):
        HittingSetInstance(3, ((0, 5),), 2, 1)


def test_brute_force_hitting_set():
    hs = HittingSetInstance(3, ((0, 1), (1, 2)), 2, 1)
    assert brute_force_hitting_set(hs) == frozenset({1})
    hs0 = HittingSetInstance(3, ((0,), (1,)), 1, 1)
    assert brute_force_hitting_set(hs0) is None
    assert brute_force_hitting_set(hs0, k_max=2) == frozenset({0, 1})


def test_kernel_small_family_unchanged():
    hs = HittingSetInstance(5, ((0, 1), (2, 3), (1, 4)), 2, 2)
    kern = expressive_kernel(hs)
    assert kern.sets == hs.sets
    assert kern.universe == (0, 1, 2, 3, 4)


def test_kernel_k0_disjoint_singletons():
    hs = HittingSetInstance(6, tuple((i,) for i in range(6)), 1, 0)
    kern = expressive_kernel(hs)
    assert len(kern.sets) <= 1
    assert brute_force_hitting_set(hs) is None
    # one kept singleton still cannot be hit with k = 0
    assert brute_force_hitting_set(kern) is None


def test_kernel_sunflower_forces_center():
    hs = HittingSetInstance(6, tuple((0, i) for i in range(1, 6)), 2, 1)
    kern = expressive_kernel(hs)
    assert len(kern.sets) <= 4
    before = all_hitting_sets(hs, 1)
    after = all_hitting_sets(kern, 1, universe=hs.universe)
    assert before == after == {frozenset({0})}


def test_kernel_preserves_small_hitting_sets_random():
    rng = random.Random(3)
    for _ in range(300):
        hs = random_hs(rng, max_sets=20)
        kern = expressive_kernel(hs)
        assert set(kern.sets) <= set(hs.sets)
        assert set(kern.universe) <= set(hs.universe)
        assert len(kern.sets) <= (hs.k + 1) ** hs.d
        hits = all_hitting_sets(hs, hs.k)
        assert hits == all_hitting_sets(kern, hs.k, universe=hs.universe)
        minimal = {h for h in hits if hs.is_minimal_hitting_set(h)}
        assert minimal == {h for h in hits if kern.is_minimal_hitting_set(h)}
        assert all(h <= set(kern.universe) for h in minimal)


def test_kernel_bound_is_tight_enough_under_pressure():
    # many pairwise-different sets around one element: the kernel must cut
    sets = tuple(combinations(range(10), 3))
    hs = HittingSetInstance(10, sets, 3, 1)
    kern = expressive_kernel(hs)
    assert len(kern.sets) <= 8
    assert all_hitting_sets(hs, 1) == all_hitting_sets(kern, 1, universe=hs.universe)
