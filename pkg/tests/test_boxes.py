import random
from fractions import Fraction

import pytest

from farkas.boxes import (
    Box,
    Certificate,
    Reason,
    certificate_rhs,
    decide_afr,
    decide_wfr,
    integer_solve,
    rational_feasible,
    verify_certificate,
)
from farkas.classify import is_afr, is_wfr
from farkas.errors import ClassCheckError, DimensionMismatch, LimitExceeded
from farkas.lattice import dot
from farkas.limits import Limits

from conftest import box_max_dot, enumerate_box_points, random_family, vec_sum


class TestBox:
    def test_validation(self):
        box = Box((0, -1), (1, 1))
        assert box.size == 2 and box.is_strict and box.point_count() == 6
        assert not Box((0, 1), (0, 1)).is_strict
        with pytest.raises(ValueError):
            Box((1,), (0,))
        with pytest.raises(DimensionMismatch):
            Box((0, 0), (1,))


class TestCertificateType:
    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            Certificate((0, 0))
        assert Certificate((Fraction(1, 2), 0)).u == (Fraction(1, 2), 0)


class TestRationalFeasible:
    def test_feasible(self):
        got = rational_feasible([(1, 0), (2, 0)], ((0, 0), (1, 1)), (3, 0))
        assert got == (1, 1)

    def test_infeasible_interval(self):
        assert rational_feasible([(1, 0), (2, 0)], ((0, 0), (1, 1)), (4, 0)) is None

    def test_half_integral(self):
        got = rational_feasible([(1, 0), (3, 0)], ((0, 0), (1, 1)), (2, 0))
        assert got is not None
        assert got[0] + 3 * got[1] == 2


class TestIntegerSolve:
    def test_lex_first(self):
        assert integer_solve([(1, 0), (2, 0)], ((0, 0), (1, 1)), (3, 0)) == (1, 1)
        assert integer_solve([(1, 0), (1, 0)], ((0, 0), (1, 1)), (1, 0)) == (0, 1)

    def test_none(self):
        assert integer_solve([(1, 0), (3, 0)], ((0, 0), (1, 1)), (2, 0)) is None

    def test_pinned(self):
        fam = [(1, 2), (0, 5)]
        w = vec_sum(fam, (-3, 2))
        assert integer_solve(fam, ((-3, 2), (-3, 2)), w) == (-3, 2)

    def test_limit_guard(self):
        with pytest.raises(LimitExceeded):
            integer_solve([(1,)], ((0,), (10,)), (5,), Limits(box_enumeration=10))

    def test_agrees_with_plain_enumeration(self):
        rng = random.Random(2718)
        for _ in range(200):
            m = rng.randint(1, 4)
            n = rng.randint(1, 3)
            fam = random_family(rng, m, n, 2)
            lower = tuple(rng.randint(-2, 1) for _ in range(m))
            upper = tuple(lo + rng.randint(0, 2) for lo in lower)
            w = tuple(rng.randint(-3, 3) for _ in range(n))
            brute = next(
                (
                    y
                    for y in enumerate_box_points(lower, upper)
                    if vec_sum(fam, y) == w
                ),
                None,
            )
            assert integer_solve(fam, (lower, upper), w) == brute


class TestDecideAfr:
    def test_representable(self):
        decision = decide_afr([(1, 0), (2, 0)], ((0, 0), (1, 1)), (3, 0))
        assert decision.representable and decision.solution == (1, 1)
        assert decision.reason is Reason.FOUND

    def test_rational_infeasible(self):
        decision = decide_afr([(1, 0), (2, 0)], ((0, 0), (1, 1)), (4, 0))
        assert not decision.representable
        assert decision.reason is Reason.RATIONAL_INFEASIBLE

    def test_lattice_fail(self):
        decision = decide_afr([(2, 0), (2, 0)], ((0, 0), (1, 1)), (1, 0))
        assert not decision.representable
        assert decision.reason is Reason.LATTICE_FAIL

    def test_class_check(self):
        with pytest.raises(ClassCheckError):
            decide_afr([(1, 0), (3, 0)], ((0, 0), (1, 1)), (2, 0))
        decision = decide_afr(
            [(1, 0), (3, 0)], ((0, 0), (1, 1)), (3, 0), check_class=False
        )
        assert decision.representable

    def test_pinned_coordinates_use_shifted_span(self):
        # x_0 pinned to 1; w - v_0 must lie in span{v_1}
        fam = [(1, 1), (2, 0)]
        decision = decide_afr(fam, ((1, 0), (1, 1)), (3, 1))
        assert decision.representable and decision.solution == (1, 1)
        decision = decide_afr(fam, ((1, 0), (1, 1)), (2, 2))
        assert decision.reason is Reason.LATTICE_FAIL


class TestDecideWfr:
    def test_representable(self):
        decision = decide_wfr([(1, 0), (2, 0)], ((0, -1), (2, 1)), (0, 0))
        assert decision.representable and decision.solution == (0, 0)

    def test_rational_infeasible(self):
        decision = decide_wfr([(1, 0), (2, 0)], ((0, -1), (2, 1)), (-3, 0))
        assert decision.reason is Reason.RATIONAL_INFEASIBLE

    def test_lattice_fail(self):
        decision = decide_wfr([(2, 0), (4, 0)], ((0, 0), (1, 1)), (3, 0))
        assert decision.reason is Reason.LATTICE_FAIL

    def test_strictness_enforced(self):
        with pytest.raises(ValueError):
            decide_wfr([(1, 0), (2, 0)], ((0, 0), (0, 1)), (0, 0))

    def test_class_check(self):
        with pytest.raises(ClassCheckError):
            decide_wfr([(1, 0), (3, 0)], ((0, 0), (1, 1)), (0, 0))


class TestCertificates:
    def test_rhs_values(self):
        fam = [(1, 0), (2, 0)]
        assert certificate_rhs((1, 0), fam, ((0, 0), (1, 1))) == 3
        assert certificate_rhs((0, 1), fam, ((0, 0), (1, 1))) == 0
        assert certificate_rhs((1, 0), fam, ((-1, -1), (0, 0))) == 0

    def test_verify(self):
        fam = [(1, 0), (2, 0)]
        assert verify_certificate((1, 0), fam, ((0, 0), (1, 1)), (4, 0))
        assert not verify_certificate((1, 0), fam, ((0, 0), (1, 1)), (3, 0))
        assert not verify_certificate((0, 1), fam, ((0, 0), (1, 1)), (3, 0))

    def test_rhs_equals_independent_box_maximum(self):
        rng = random.Random(5150)
        for _ in range(300):
            m = rng.randint(1, 5)
            n = rng.randint(1, 3)
            fam = random_family(rng, m, n, 4)
            lower = tuple(rng.randint(-3, 2) for _ in range(m))
            upper = tuple(lo + rng.randint(0, 4) for lo in lower)
            u = tuple(
                Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(n)
            )
            if not any(u):
                continue
            assert certificate_rhs(u, fam, (lower, upper)) == box_max_dot(
                u, fam, lower, upper
            )

    def test_soundness_against_rational_feasibility(self):
        rng = random.Random(404)
        checked = 0
        for _ in range(400):
            m = rng.randint(1, 4)
            n = rng.randint(1, 3)
            fam = random_family(rng, m, n, 2)
            lower = tuple(rng.randint(-2, 1) for _ in range(m))
            upper = tuple(lo + rng.randint(0, 2) for lo in lower)
            w = tuple(rng.randint(-4, 4) for _ in range(n))
            u = tuple(Fraction(rng.randint(-3, 3)) for _ in range(n))
            if not any(u):
                continue
            if verify_certificate(u, fam, (lower, upper), w):
                checked += 1
                assert rational_feasible(fam, (lower, upper), w) is None
        assert checked > 20


def test_decisions_match_exhaustive_search():
    """The decision rules agree with brute-force integer search on their
    respective classes."""
    rng = random.Random(161803)
    afr_seen = wfr_seen = 0
    while afr_seen < 150 or wfr_seen < 150:
        m = rng.randint(1, 4)
        n = rng.randint(1, 3)
        fam = random_family(rng, m, n, 2)
        lower = tuple(rng.randint(-2, 1) for _ in range(m))
        upper = tuple(lo + rng.randint(0, 3) for lo in lower)
        w = tuple(rng.randint(-4, 4) for _ in range(n))
        brute = any(
            vec_sum(fam, y) == w for y in enumerate_box_points(lower, upper)
        )
        if afr_seen < 150 and is_afr(fam).is_afr:
            afr_seen += 1
            assert decide_afr(fam, (lower, upper), w).representable == brute
        strict = all(a < b for a, b in zip(lower, upper))
        if wfr_seen < 150 and strict and is_wfr(fam).is_wfr:
            wfr_seen += 1
            assert decide_wfr(fam, (lower, upper), w).representable == brute


def test_solutions_reverify():
    rng = random.Random(44)
    for _ in range(150):
        m = rng.randint(1, 3)
        fam = random_family(rng, m, 2, 2)
        if not is_afr(fam).is_afr:
            continue
        lower = tuple(rng.randint(-1, 0) for _ in range(m))
        upper = tuple(lo + rng.randint(0, 2) for lo in lower)
        coeffs = tuple(rng.randint(lo, up) for lo, up in zip(lower, upper))
        w = vec_sum(fam, coeffs)
        decision = decide_afr(fam, (lower, upper), w)
        assert decision.representable
        assert vec_sum(fam, decision.solution) == w
        assert all(
            lo <= y <= up for lo, y, up in zip(lower, decision.solution, upper)
        )
