"""Fiber solving against brute force, involution laws, integer dynamics."""

import random

import pytest

from corpus import EXTRA_TWO_PERIODIC, REFERENCE_ORBITS
from wehler.errors import (
    DegenerateFiberError,
    PointNotOnSurfaceError,
    UsageError,
)
from wehler.ff import FiniteField, ZZ, enumerate_projective_plane, normalize_int_triple
from wehler.fiber import FiberSolution, conjugate, phi, phi_inverse, solve_fiber
from wehler.surface import SurfaceCoefficients, evaluate, reduce_mod_p, transpose


def _surface(n):
    _, L, Q = REFERENCE_ORBITS[n]
    return SurfaceCoefficients(L, Q)


def _brute_fiber(surface, a, K, side="x"):
    if side == "y":
        return _brute_fiber(transpose(surface), a, K)
    return sorted(y for y in enumerate_projective_plane(K)
                  if evaluate(surface, (a, y), K) == (0, 0))


@pytest.mark.parametrize("p", [3, 5])
@pytest.mark.parametrize("n", [2, 7, 11])
def test_solve_fiber_matches_brute_force(n, p):
    K = FiniteField(p)
    s = reduce_mod_p(_surface(n), p)
    for side in ("x", "y"):
        for a in enumerate_projective_plane(K):
            sol = solve_fiber(s, a, K, side)
            if sol.degenerate:
                assert sol.points == ()
                continue
            got = sorted(pt[1] if side == "x" else pt[0] for pt in sol.points)
            assert got == _brute_fiber(s, a, K, side), (n, p, side, a)


def test_solve_fiber_extension_field():
    K = FiniteField(3, 2)
    s = reduce_mod_p(_surface(16), 3)
    for a in enumerate_projective_plane(K):
        sol = solve_fiber(s, a, K)
        if not sol.degenerate:
            assert sorted(pt[1] for pt in sol.points) == _brute_fiber(s, a, K)


def test_solve_fiber_point_shapes():
    K = FiniteField(5)
    s = reduce_mod_p(_surface(4), 5)
    for a in enumerate_projective_plane(K):
        sol = solve_fiber(s, a, K)
        assert isinstance(sol, FiberSolution)
        assert len(sol.points) <= 2
        if sol.tangent:
            assert len(sol.points) == 1
        for x, y in sol.points:
            assert x == a
            assert evaluate(s, (x, y), K) == (0, 0)


def test_tangent_fiber_is_involution_fixed_point():
    K = FiniteField(5)
    s = reduce_mod_p(_surface(4), 5)
    seen = 0
    for a in enumerate_projective_plane(K):
        sol = solve_fiber(s, a, K)
        if sol.tangent:
            seen += 1
            pt = sol.points[0]
            assert conjugate(s, pt, "x", K) == pt
    assert seen > 0  # the sweep must actually exercise the branch


def test_solve_fiber_rejects_bad_arguments():
    s = _surface(1)
    with pytest.raises(UsageError):
        solve_fiber(s, (1, 0, 0), ZZ)
    with pytest.raises(UsageError):
        solve_fiber(reduce_mod_p(s, 2), (1, 0, 0), FiniteField(2))
    with pytest.raises(UsageError):
        solve_fiber(reduce_mod_p(s, 5), (1, 0, 0), FiniteField(5), side="q")


def test_conjugate_is_involution_mod_p():
    # the period-6 surface is non-degenerate on both sides at 3 and 5
    for p in (3, 5):
        K = FiniteField(p)
        s = reduce_mod_p(_surface(6), p)
        pts = [(a, y) for a in enumerate_projective_plane(K)
               for y in _brute_fiber(s, a, K)]
        for pt in pts:
            for side in ("x", "y"):
                q = conjugate(s, pt, side, K)
                assert evaluate(s, q, K) == (0, 0)
                assert conjugate(s, q, side, K) == pt


def test_conjugate_char2():
    # the period-6 surface has good, non-degenerate reduction mod 2
    K = FiniteField(2)
    s = reduce_mod_p(_surface(6), 2)
    pts = [(a, y) for a in enumerate_projective_plane(K)
           for y in _brute_fiber(s, a, K)]
    assert pts
    for pt in pts:
        for side in ("x", "y"):
            q = conjugate(s, pt, side, K)
            assert conjugate(s, q, side, K) == pt
        img = phi(s, pt, K)
        assert phi_inverse(s, img, K) == pt


def test_conjugate_rejects_off_surface_points():
    s = _surface(1)
    with pytest.raises(PointNotOnSurfaceError):
        conjugate(s, ((1, 1, 1), (1, 1, 1)))
    K = FiniteField(2)
    with pytest.raises(PointNotOnSurfaceError):
        conjugate(reduce_mod_p(_surface(6), 2), ((1, 1, 1), (1, 1, 1)), "x", K)


def test_conjugate_degenerate_fiber_raises():
    # the period-1 surface reduced mod 3 has a degenerate fiber over
    # (0, 1, 1) on the x side; pick a surface point over that base
    K = FiniteField(3)
    s = reduce_mod_p(_surface(1), 3)
    base = (0, 1, 1)
    fiber = _brute_fiber(s, base, K)
    assert len(fiber) == 4  # a full line of points, the degeneracy witness
    with pytest.raises(DegenerateFiberError) as err:
        conjugate(s, (base, fiber[0]), "x", K)
    assert err.value.base == base


def test_phi_and_inverse_over_integers():
    rng = random.Random(21)
    for n, (point, L, Q) in REFERENCE_ORBITS.items():
        s = SurfaceCoefficients(L, Q)
        pt = (normalize_int_triple(point[0]), normalize_int_triple(point[1]))
        forward = phi(s, pt)
        assert evaluate(s, forward) == (0, 0)
        assert phi_inverse(s, forward) == pt
    # walking forward k steps then back k steps is the identity
    s = _surface(9)
    pt = (normalize_int_triple(REFERENCE_ORBITS[9][0][0]),
          normalize_int_triple(REFERENCE_ORBITS[9][0][1]))
    walk = pt
    k = rng.randint(3, 7)
    for _ in range(k):
        walk = phi(s, walk)
    for _ in range(k):
        walk = phi_inverse(s, walk)
    assert walk == pt


def test_known_primitive_periods_spot_check():
    # exact periods for a few orbits; the acceptance suite covers all 16
    for n in (1, 2, 5):
        point, L, Q = REFERENCE_ORBITS[n]
        s = SurfaceCoefficients(L, Q)
        pt = (normalize_int_triple(point[0]), normalize_int_triple(point[1]))
        walk = pt
        for step in range(1, n + 1):
            walk = phi(s, walk)
            if walk == pt:
                assert step == n
                break
        else:
            pytest.fail(f"no return within {n} steps")


def test_extra_two_periodic_point():
    s = _surface(6)
    pt = (normalize_int_triple(EXTRA_TWO_PERIODIC[0]),
          normalize_int_triple(EXTRA_TWO_PERIODIC[1]))
    once = phi(s, pt)
    assert once != pt
    assert phi(s, once) == pt
