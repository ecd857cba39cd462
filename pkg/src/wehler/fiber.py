"""Fiber solving and the two covering involutions.

Projecting the surface to one factor makes the other factor's coordinates
satisfy a line-conic intersection in the plane: generically two points,
counted with multiplicity.  Swapping the two points of each fiber defines an
involution per side, and the composition of the two involutions is the
dynamical map iterated everywhere else in this package.

The solver substitutes the line into the conic.  For a completion index k
with L*_k != 0, eliminating the k-th coordinate leaves the binary quadratic

    G_j u^2 + H_ij u v + G_i v^2        (u, v) = (y_i, y_j)

whose projective roots lift back to fiber points via

    y_i = L*_k u,  y_j = L*_k v,  y_k = -(L*_i u + L*_j v).

Conjugation (finding the partner of a known fiber point) never needs square
roots: the quadratic already has one known root, so the other follows from
Vieta's formulas, or from the closed form w_t = G_t y_t,
w_i = -(H_ti y_t + G_t y_i) valid over any ring.  That keeps the involutions
exact over the integers, which the lifting pipeline relies on.
"""

from dataclasses import dataclass, field

from .errors import (
    DegenerateFiberError,
    InconsistentDataError,
    PointNotOnSurfaceError,
    UsageError,
)
from .ff import ZZ, enumerate_projective_plane, normalize_int_triple, normalize_triple
from .surface import (
    SurfaceCoefficients,
    evaluate,
    gh_from_parts,
    side_coefficients,
    transpose,
)


@dataclass(frozen=True)
class FiberSolution:
    """Points of one fiber, as normalized (x, y) pairs.

    tangent is True when the fiber is a single point of multiplicity two,
    i.e. a fixed point of the corresponding involution.  degenerate means
    the fiber is positive-dimensional and carries no involution at all;
    points is empty in that case.
    """

    points: tuple = field(default=())
    tangent: bool = False
    degenerate: bool = False


def _normalize(K, v):
    if getattr(K, "is_field", False):
        return normalize_triple(K, v)
    return normalize_int_triple(v)


def _solve_binary_quadratic(K, a, b, c):
    """Projective roots (u : v) of a u^2 + b u v + c v^2 over a finite field.

    Returns (roots, tangent).  The coefficients must not all be zero.
    """
    if a != 0:
        disc = K.sub(K.mul(b, b), K.mul(K.embed(4), K.mul(a, c)))
        roots = K.sqrt(disc)
        if not roots:
            return (), False
        inv2a = K.inv(K.mul(K.embed(2), a))
        if disc == 0:
            return ((K.mul(K.neg(b), inv2a), K.embed(1)),), True
        u0 = K.mul(K.add(K.neg(b), roots[0]), inv2a)
        u1 = K.mul(K.add(K.neg(b), roots[1]), inv2a)
        return ((u0, K.embed(1)), (u1, K.embed(1))), False
    if b != 0:
        # One root at infinity, the other from b u v + c v^2 = 0.
        return ((K.embed(1), 0), (K.neg(c), b)), False
    # c v^2 alone: the root at infinity, doubled.
    return ((K.embed(1), 0),), True


def _complete_point(K, line, i, j, k, u, v):
    mul, add, neg = K.mul, K.add, K.neg
    y = [0, 0, 0]
    y[i] = mul(line[k], u)
    y[j] = mul(line[k], v)
    y[k] = neg(add(mul(line[i], u), mul(line[j], v)))
    return tuple(y)


def _brute_fiber(surface, a, K):
    """All y with (a, y) on the surface, by scanning P^2(F_q).

    Only used in characteristic 2, where the discriminant method breaks.
    """
    found = []
    for y in enumerate_projective_plane(K):
        lv, qv = evaluate(surface, (a, y), K)
        if lv == 0 and qv == 0:
            found.append(y)
    return found


def _solve_fiber_x(surface, a, K):
    a = normalize_triple(K, a)
    line, conic = side_coefficients(surface, a, "x", K)
    if not any(line):
        return FiberSolution(degenerate=True)
    gh = gh_from_parts(line, conic, K)
    if gh.all_zero():
        return FiberSolution(degenerate=True)
    for k in range(3):
        if line[k] == 0:
            continue
        i, j = (t for t in range(3) if t != k)
        qa, qb, qc = gh.g[j], gh.h_at(i, j), gh.g[i]
        if qa == 0 and qb == 0 and qc == 0:
            continue
        roots, tangent = _solve_binary_quadratic(K, qa, qb, qc)
        points = []
        for u, v in roots:
            y = _complete_point(K, line, i, j, k, u, v)
            lv, qv = evaluate(surface, (a, y), K)
            if lv == 0 and qv == 0:
                points.append((a, normalize_triple(K, y)))
        points = list(dict.fromkeys(points))
        return FiberSolution(tuple(points), tangent and len(points) == 1, False)
    raise InconsistentDataError(
        "no usable completion index despite nonzero line and G/H data")


def solve_fiber(surface: SurfaceCoefficients, a, K, side="x") -> FiberSolution:
    """Solve the fiber of the projection to the given side over base point a.

    The surface must already be reduced into K.  Characteristic 2 is
    rejected; square roots of the discriminant do not see the fiber there,
    so callers should fall back to exhaustive search.
    """
    if not getattr(K, "is_field", False):
        raise UsageError("solve_fiber needs a finite field, not a ring")
    if K.p == 2:
        raise UsageError("fiber solving is unsupported in characteristic 2")
    if side == "y":
        sol = _solve_fiber_x(transpose(surface), a, K)
        return FiberSolution(tuple((x, y) for y, x in sol.points),
                             sol.tangent, sol.degenerate)
    if side != "x":
        raise UsageError(f"side must be 'x' or 'y', got {side!r}")
    return _solve_fiber_x(surface, a, K)


def _vieta_partner(K, line, gh, k, u0, v0):
    """Second root of the completion-k quadratic, given the first.

    Pure ring arithmetic: if a != 0 the pair (u1, v1) with
    u1 v0 - u0 v1 != 0 is (-(b v0 + a u0), a v0), clearing the division
    by homogeneity.  Works verbatim over the integers.
    """
    mul, add, neg = K.mul, K.add, K.neg
    i, j = (t for t in range(3) if t != k)
    qa, qb = gh.g[j], gh.h_at(i, j)
    qc = gh.g[i]
    if qa != 0:
        if v0 == 0:
            # a u0^2 = 0 with u0 != 0 contradicts a != 0.
            raise InconsistentDataError("claimed root fails the quadratic")
        u1 = neg(add(mul(qb, v0), mul(qa, u0)))
        v1 = mul(qa, v0)
    elif v0 == 0:
        # Known root is (1 : 0); partner solves b u v + c v^2 = 0.
        if qb == 0:
            u1, v1 = u0, v0
        else:
            u1, v1 = neg(qc), qb
    else:
        u1, v1 = K.embed(1), 0
    return _complete_point(K, line, i, j, k, u1, v1)


def _conjugate_x(surface, P, K):
    """Partner of P in its fiber under the projection to the x factor."""
    x, y = P
    x = _normalize(K, x)
    y = _normalize(K, y)
    lv, qv = evaluate(surface, (x, y), K)
    if lv != 0 or qv != 0:
        raise PointNotOnSurfaceError(f"point {(x, y)} is not on the surface")
    line, conic = side_coefficients(surface, x, "x", K)
    if not any(line):
        raise DegenerateFiberError(
            "fiber is positive-dimensional", side="x", base=x)
    gh = gh_from_parts(line, conic, K)
    if gh.all_zero():
        raise DegenerateFiberError(
            "fiber is positive-dimensional", side="x", base=x)
    mul, add, neg = K.mul, K.add, K.neg
    for t in range(3):
        if y[t] == 0:
            continue
        w = [0, 0, 0]
        w[t] = mul(gh.g[t], y[t])
        for i in range(3):
            if i != t:
                w[i] = neg(add(mul(gh.h_at(t, i), y[t]), mul(gh.g[t], y[i])))
        if any(w):
            w = _normalize(K, tuple(w))
            lv, qv = evaluate(surface, (x, w), K)
            if lv == 0 and qv == 0:
                return x, w
        break
    # Closed form degenerated (the point is its own partner, or the scale
    # factor vanished).  Redo it through Vieta on an explicit completion.
    for k in range(3):
        if line[k] == 0:
            continue
        i, j = (t for t in range(3) if t != k)
        if gh.g[j] == 0 and gh.h_at(i, j) == 0 and gh.g[i] == 0:
            continue
        w = _vieta_partner(K, line, gh, k, y[i], y[j])
        if not any(w):
            raise InconsistentDataError(
                f"fiber partner of {(x, y)} collapsed to zero")
        w = _normalize(K, w)
        lv, qv = evaluate(surface, (x, w), K)
        if lv != 0 or qv != 0:
            raise InconsistentDataError(
                f"fiber partner of {(x, y)} left the surface")
        return x, w
    raise InconsistentDataError(
        "no usable completion index despite nonzero line and G/H data")


def _conjugate_char2(surface, P, K, side):
    x, y = P
    if side == "y":
        ry, rx = _conjugate_char2(transpose(surface), (y, x), K, "x")
        return rx, ry
    x = normalize_triple(K, x)
    y = normalize_triple(K, y)
    # The degeneracy test is the same integer identity as in odd
    # characteristic; only root finding needs the exhaustive scan.
    line, conic = side_coefficients(surface, x, "x", K)
    if not any(line) or gh_from_parts(line, conic, K).all_zero():
        raise DegenerateFiberError(
            "fiber is positive-dimensional", side=side, base=x)
    fiber = _brute_fiber(surface, x, K)
    if y not in fiber:
        raise PointNotOnSurfaceError(f"point {(x, y)} is not on the surface")
    others = [z for z in fiber if z != y]
    return (x, others[0]) if others else (x, y)


def conjugate(surface: SurfaceCoefficients, P, side="x", K=ZZ):
    """Swap P with the other point of its fiber on the given side.

    P is an ((x0, x1, x2), (y0, y1, y2)) pair, already reduced into K.
    Fixed points of the involution come back unchanged.  Raises
    PointNotOnSurfaceError if P fails the surface equations and
    DegenerateFiberError over a positive-dimensional fiber.
    """
    if getattr(K, "is_field", False) and K.p == 2:
        return _conjugate_char2(surface, P, K, side)
    if side == "y":
        x, y = P
        ry, rx = _conjugate_x(transpose(surface), (y, x), K)
        return rx, ry
    if side != "x":
        raise UsageError(f"side must be 'x' or 'y', got {side!r}")
    return _conjugate_x(surface, P, K)


def phi(surface: SurfaceCoefficients, P, K=ZZ):
    """One step of the composed map: the y-side swap, then the x-side swap."""
    return conjugate(surface, conjugate(surface, P, "y", K), "x", K)


def phi_inverse(surface: SurfaceCoefficients, P, K=ZZ):
    """One step backwards: the x-side swap, then the y-side swap."""
    return conjugate(surface, conjugate(surface, P, "x", K), "y", K)
