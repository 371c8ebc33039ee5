"""Smoke tests for the Python bindings.

These exercise the main entry points on hand-checkable inputs; the heavy
numerical verification lives in the C++ test suites.
"""

import math

import pytest

try:
    import polycurv as pc
except ImportError:  # running against an in-tree build of the raw module
    import _polycurv as pc

SQUARE = [[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]]
CUBE = [
    [x, y, z]
    for x in (0.0, 1.0)
    for y in (0.0, 1.0)
    for z in (0.0, 1.0)
]


def square():
    return pc.Polytope.from_vertices(SQUARE)


def cube():
    return pc.Polytope.from_vertices(CUBE)


def test_polytope_basics():
    sq = square()
    assert sq.dim == 2
    assert len(sq.vertices) == 4
    assert sq.volume() == pytest.approx(1.0)
    assert sq.face_count(1) == 4
    cb = cube()
    assert cb.dim == 3
    assert cb.volume() == pytest.approx(1.0)
    assert cb.face_count(2) == 6


def test_degenerate_input_rejected():
    with pytest.raises(pc.ValidationError):
        pc.Polytope.from_vertices([[0.0, 0.0], [1.0, 0.0], [2.0, 0.0]])


def test_intrinsic_volumes():
    sq = square()
    assert pc.intrinsic_volume(sq, 0) == pytest.approx(1.0)
    assert pc.intrinsic_volume(sq, 1) == pytest.approx(2.0)
    assert pc.intrinsic_volume(sq, 2) == pytest.approx(1.0)
    cb = cube()
    assert pc.intrinsic_volume(cb, 1) == pytest.approx(3.0)
    assert pc.intrinsic_volume(cb, 2) == pytest.approx(3.0)


def test_restricted_curvature_measure():
    sq = square()
    half = pc.curvature_measure(sq, 1, box=([0.0, 0.0], [0.5, 2.0]))
    assert half == pytest.approx(1.0)
    # a small cap around (1, 1) picks up only the corner at (1, 1)
    corner = pc.curvature_measure(sq, 0, cap=([1.0, 1.0], 0.1))
    assert corner == pytest.approx(0.2 / (2.0 * math.pi))


def test_external_angle():
    sq = square()
    assert pc.external_angle(sq, 0, 0) == pytest.approx(0.25)


def test_steiner_volume():
    assert pc.steiner_volume(square(), 1.0) == pytest.approx(5.0 + math.pi)


def test_mixed_curvature_measure():
    sq = square()
    rep = pc.mixed_curvature_measure([sq, sq], [1, 1])
    assert rep.value == pytest.approx(2.0)
    assert len(rep.contributions) == 8
    assert rep.std_error == 0.0
    with pytest.raises(pc.ValidationError):
        pc.mixed_curvature_measure([sq, sq], [0, 1])


def test_mixed_volume():
    sq = square()
    assert pc.mixed_volume(sq, sq, 1) == pytest.approx(1.0)


def test_translative_check_grid():
    sq = square()
    rep = pc.translative_check([sq, sq], 0, integrator="grid", grid_step=0.02)
    assert rep.rhs.value == pytest.approx(4.0)
    assert abs(rep.lhs.value - rep.rhs.value) < 0.1
    assert {tuple(k) for k in rep.rhs_breakdown} == {(0, 2), (1, 1), (2, 0)}


def test_translative_check_mc_reproducible():
    sq = square()
    cfg = pc.McConfig()
    cfg.samples = 20000
    a = pc.translative_check([sq, sq], 1, config=cfg)
    b = pc.translative_check([sq, sq], 1, config=cfg)
    assert a.lhs.value == b.lhs.value
    assert a.discrepancy_sigma <= 4.0
