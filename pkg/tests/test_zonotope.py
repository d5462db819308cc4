import random
from itertools import product

from farkas.linprog import feasible_box_system
from farkas.zonotope import ZonotopeProfile

from conftest import random_family, vec_sum


def test_interval_case():
    p = ZonotopeProfile([(1, 0), (2, 0)])
    assert p.contains((0, 0)) and p.contains((2, 0)) and p.contains((3, 0))
    assert not p.contains((4, 0)) and not p.contains((1, 1))


def test_point_case():
    p = ZonotopeProfile([(0, 0)])
    assert p.contains((0, 0))
    assert not p.contains((1, 0)) and not p.contains((0, -1))


def test_subset_sums_sorted_unique():
    p = ZonotopeProfile([(1, 0), (1, 0), (0, 1)])
    sums = p.subset_sums()
    assert sums == sorted(set(sums))
    assert (2, 1) in sums and (0, 0) in sums


def test_membership_matches_exact_lp():
    """Facet membership and Fourier-Motzkin feasibility are independent
    routes to the same answer; compare them on grid samples."""
    rng = random.Random(91)
    for _ in range(150):
        m = rng.randint(1, 5)
        n = rng.randint(1, 4)
        vectors = random_family(rng, m, n, 2)
        profile = ZonotopeProfile(vectors)
        points = list(
            product(
                *(
                    range(lo - 1, hi + 2)
                    for lo, hi in zip(profile.coord_lo, profile.coord_hi)
                )
            )
        )
        if len(points) > 60:
            points = rng.sample(points, 60)
        for w in points:
            lp = feasible_box_system(vectors, (0,) * m, (1,) * m, w)
            assert profile.contains(w) == (lp is not None), (vectors, w)


def test_grid_contains_all_01_sums():
    rng = random.Random(7)
    for _ in range(100):
        vectors = random_family(rng, rng.randint(1, 5), rng.randint(1, 3), 3)
        profile = ZonotopeProfile(vectors)
        for choice in product((0, 1), repeat=len(vectors)):
            point = vec_sum(vectors, choice)
            assert profile.contains(point)
            assert all(
                lo <= x <= hi
                for lo, x, hi in zip(profile.coord_lo, point, profile.coord_hi)
            )
