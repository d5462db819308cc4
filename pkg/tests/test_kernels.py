"""Backend agreement: the compiled kernels must reproduce the pure ones
bit for bit, including which witness comes first."""

import random

import pytest

from farkas import _kernels_py as pure
from farkas import kernels
from farkas.zonotope import ZonotopeProfile

from conftest import random_family

compiled = pytest.importorskip("farkas._ckernels")


def _profile_args(vectors):
    p = ZonotopeProfile(vectors)
    return p, (
        p.coord_lo,
        p.coord_hi,
        p.normals,
        p.rhs,
        p.lattice.pivots,
        p.lattice.basis,
        p.subset_sums(),
    )


def test_afr_scan_agreement():
    rng = random.Random(1)
    for _ in range(300):
        vectors = random_family(rng, rng.randint(1, 5), rng.randint(1, 3), 2)
        _, args = _profile_args(vectors)
        assert compiled.afr_subset_scan(*args) == pure.afr_subset_scan(*args)


def test_wfr_scan_agreement():
    rng = random.Random(2)
    for _ in range(300):
        vectors = random_family(rng, rng.randint(1, 6), rng.randint(1, 3), 2)
        p = ZonotopeProfile(vectors)
        for restricted in (True, False):
            args = (vectors, p.normals, p.rhs, p.subset_sums(), restricted)
            assert compiled.wfr_pattern_scan(*args) == pure.wfr_pattern_scan(*args)


def test_box_search_agreement():
    rng = random.Random(3)
    for _ in range(300):
        m = rng.randint(1, 5)
        n = rng.randint(1, 3)
        vectors = random_family(rng, m, n, 3)
        lower = tuple(rng.randint(-3, 1) for _ in range(m))
        upper = tuple(lo + rng.randint(0, 4) for lo in lower)
        target = tuple(rng.randint(-5, 5) for _ in range(n))
        args = (vectors, lower, upper, target)
        assert compiled.box_search_lex(*args) == pure.box_search_lex(*args)


def test_wrapper_falls_back_on_big_integers():
    # magnitudes beyond the compiled guard must still work (pure path)
    big = 1 << 40
    got = kernels.box_search_lex([(big,)], (1,), (1,), (big,))
    assert got == (1,)
    got = kernels.box_search_lex([(big,)], (0,), (1,), (1,))
    assert got is None


def test_wrapper_matches_backends_spotcheck():
    vectors = ((1, 0), (3, 0))
    p = ZonotopeProfile(vectors)
    args = (vectors, p.normals, p.rhs, p.subset_sums(), True)
    assert kernels.wfr_pattern_scan(*args) == pure.wfr_pattern_scan(*args) == (1, -1)


def test_active_backend_reports():
    assert kernels.active_backend() in ("c", "pure")
    assert kernels.compiled_available() in (True, False)
