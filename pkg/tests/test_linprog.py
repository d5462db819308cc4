import random
from fractions import Fraction

import pytest

from farkas.linprog import feasible_box_system

from conftest import enumerate_box_points, random_family, vec_sum


def check_witness(vectors, lower, upper, target, witness):
    assert witness is not None
    assert all(isinstance(x, Fraction) for x in witness)
    n = len(target)
    total = [Fraction(0)] * n
    for x, v in zip(witness, vectors):
        for j in range(n):
            total[j] += x * v[j]
    assert tuple(total) == tuple(Fraction(t) for t in target)
    assert all(lo <= x <= up for lo, x, up in zip(lower, witness, upper))


def test_simple_feasible():
    fam = [(1, 0), (2, 0)]
    got = feasible_box_system(fam, (0, 0), (1, 1), (3, 0))
    check_witness(fam, (0, 0), (1, 1), (3, 0), got)


def test_fractional_witness_needed():
    fam = [(1, 0), (3, 0)]
    got = feasible_box_system(fam, (0, 0), (1, 1), (2, 0))
    check_witness(fam, (0, 0), (1, 1), (2, 0), got)


def test_interval_bound_infeasible():
    assert feasible_box_system([(1, 0), (2, 0)], (0, 0), (1, 1), (4, 0)) is None


def test_span_miss():
    assert feasible_box_system([(1, 0)], (-5,), (5,), (0, 1)) is None


def test_empty_interval():
    assert feasible_box_system([(1,)], (1,), (0,), (0,)) is None


def test_pinned_coordinates():
    fam = [(1, 0), (0, 1)]
    got = feasible_box_system(fam, (2, 3), (2, 3), (2, 3))
    check_witness(fam, (2, 3), (2, 3), (2, 3), got)
    assert feasible_box_system(fam, (2, 3), (2, 3), (2, 4)) is None


def test_degenerate_zero_vectors():
    fam = [(0, 0), (0, 0)]
    got = feasible_box_system(fam, (-1, -1), (1, 1), (0, 0))
    check_witness(fam, (-1, -1), (1, 1), (0, 0), got)
    assert feasible_box_system(fam, (-1, -1), (1, 1), (1, 0)) is None


def test_agrees_with_integer_enumeration():
    """Integer feasibility implies rational feasibility; any rational
    verdict of infeasible must rule out all integer box points."""
    rng = random.Random(20240817)
    for _ in range(300):
        m = rng.randint(1, 4)
        n = rng.randint(1, 3)
        vectors = random_family(rng, m, n, 3)
        lower = tuple(rng.randint(-2, 1) for _ in range(m))
        upper = tuple(lo + rng.randint(0, 3) for lo in lower)
        target = tuple(rng.randint(-4, 4) for _ in range(n))
        witness = feasible_box_system(vectors, lower, upper, target)
        integer_points = [
            y
            for y in enumerate_box_points(lower, upper)
            if vec_sum(vectors, y) == target
        ]
        if witness is None:
            assert not integer_points
        else:
            check_witness(vectors, lower, upper, target, witness)


def test_scaled_grid_completeness():
    """On a 1/2-grid the rational verdict must cover half-integer points."""
    rng = random.Random(4)
    for _ in range(200):
        m = rng.randint(1, 3)
        vectors = random_family(rng, m, 2, 2)
        lower = tuple(rng.randint(-1, 0) for _ in range(m))
        upper = tuple(lo + 1 for lo in lower)
        halves = [
            [Fraction(k, 2) for k in range(2 * lo, 2 * up + 1)]
            for lo, up in zip(lower, upper)
        ]
        import itertools

        for xs in itertools.product(*halves):
            target = [Fraction(0), Fraction(0)]
            for x, v in zip(xs, vectors):
                target[0] += x * v[0]
                target[1] += x * v[1]
            if all(f.denominator == 1 for f in target):
                t = (int(target[0]), int(target[1]))
                assert feasible_box_system(vectors, lower, upper, t) is not None
