"""Surfaces in P^2 x P^2 cut out by a (1,1) form and a (2,2) form.

Coefficient layout, fixed across the package and the file format:

* L is 9 integers, row-major: L[3*i+j] multiplies x_i * y_j.
* Q is 36 integers over unordered index pairs. Pairs are listed
  [00, 01, 02, 11, 12, 22]; Q[6*A+B] multiplies x_{i}x_{j} * y_{k}y_{l}
  where A indexes the x-pair (i,j) and B the y-pair (k,l). Each unordered
  combination appears exactly once (no implicit factor 2 on mixed terms).

Everything here is plain coefficient combinatorics: evaluation, the induced
line/conic coefficients over one factor, the six fiber invariants G_k and
H_ij, and reduction mod p. Arithmetic runs over any backend exposing
add/sub/mul/neg/embed, i.e. a FiniteField or the integers.
"""

import hashlib
import json
from dataclasses import dataclass

from .errors import BadReductionError, UsageError
from .ff import ZZ

PAIRS = ((0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2))

# PAIR_INDEX[i][j] = position of the unordered pair {i, j} in PAIRS
PAIR_INDEX = ((0, 1, 2), (1, 3, 4), (2, 4, 5))


@dataclass(frozen=True)
class SurfaceCoefficients:
    """Integer coefficient vectors of the two defining forms."""

    L: tuple
    Q: tuple

    def __post_init__(self):
        object.__setattr__(self, "L", tuple(int(c) for c in self.L))
        object.__setattr__(self, "Q", tuple(int(c) for c in self.Q))
        if len(self.L) != 9:
            raise UsageError("L needs exactly 9 coefficients")
        if len(self.Q) != 36:
            raise UsageError("Q needs exactly 36 coefficients")
        if not any(self.L):
            raise UsageError("the (1,1) form must not vanish identically")
        if not any(self.Q):
            raise UsageError("the (2,2) form must not vanish identically")


def surface_to_dict(surface: SurfaceCoefficients) -> dict:
    return {"L": list(surface.L), "Q": list(surface.Q)}


def parse_surface(data) -> SurfaceCoefficients:
    """Accept a dict or JSON text of the form {"L": [...9], "Q": [...36]}."""
    if isinstance(data, (str, bytes)):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise UsageError(f"surface file is not valid JSON: {exc}") from exc
    if not isinstance(data, dict) or "L" not in data or "Q" not in data:
        raise UsageError('surface data needs "L" and "Q" entries')
    try:
        return SurfaceCoefficients(tuple(data["L"]), tuple(data["Q"]))
    except (TypeError, ValueError) as exc:
        raise UsageError(f"bad surface coefficients: {exc}") from exc


def surface_digest(surface: SurfaceCoefficients) -> str:
    """Stable short hash of the coefficient vectors, used as a cache key."""
    blob = ",".join(map(str, surface.L)) + ";" + ",".join(map(str, surface.Q))
    return hashlib.sha256(blob.encode()).hexdigest()[:16]


def transpose(surface: SurfaceCoefficients) -> SurfaceCoefficients:
    """Swap the roles of the two P^2 factors."""
    L = tuple(surface.L[3 * j + i] for i in range(3) for j in range(3))
    Q = tuple(surface.Q[6 * B + A] for A in range(6) for B in range(6))
    return SurfaceCoefficients(L, Q)


def reduce_mod_p(surface: SurfaceCoefficients, p: int) -> SurfaceCoefficients:
    """Coefficients reduced into [0, p). Collapse of either form is an error."""
    L = tuple(c % p for c in surface.L)
    Q = tuple(c % p for c in surface.Q)
    if not any(L) or not any(Q):
        raise BadReductionError(f"surface collapses mod {p}")
    return SurfaceCoefficients(L, Q)


def evaluate(surface: SurfaceCoefficients, point, K=ZZ):
    """Values (L(x,y), Q(x,y)) of both forms at a point pair.

    Over a finite field the surface must already be reduced (coefficients
    in [0, p)); its entries then double as field constants.
    """
    x, y = point
    add, mul = K.add, K.mul
    lv = 0
    for i in range(3):
        xi = x[i]
        if xi == 0:
            continue
        for j in range(3):
            c = surface.L[3 * i + j]
            if c != 0 and y[j] != 0:
                lv = add(lv, mul(c, mul(xi, y[j])))
    xm = [mul(x[i], x[j]) for (i, j) in PAIRS]
    ym = [mul(y[k], y[l]) for (k, l) in PAIRS]
    qv = 0
    for A in range(6):
        if xm[A] == 0:
            continue
        for B in range(6):
            c = surface.Q[6 * A + B]
            if c != 0 and ym[B] != 0:
                qv = add(qv, mul(c, mul(xm[A], ym[B])))
    return lv, qv


def side_coefficients(surface: SurfaceCoefficients, a, side="x", K=ZZ):
    """Line and conic coefficients over the other factor, at base point a.

    For side 'x' these are the coefficients of y in L(a, y) and Q(a, y):
    a length-3 tuple and a length-6 tuple over PAIRS. Side 'y' is the
    mirror image via the transpose.
    """
    if side == "y":
        return side_coefficients(transpose(surface), a, "x", K)
    if side != "x":
        raise UsageError("side must be 'x' or 'y'")
    add, mul = K.add, K.mul
    line = []
    for j in range(3):
        s = 0
        for i in range(3):
            c = surface.L[3 * i + j]
            if c != 0 and a[i] != 0:
                s = add(s, mul(c, a[i]))
        line.append(s)
    mon = [mul(a[i], a[j]) for (i, j) in PAIRS]
    conic = []
    for B in range(6):
        s = 0
        for A in range(6):
            c = surface.Q[6 * A + B]
            if c != 0 and mon[A] != 0:
                s = add(s, mul(c, mon[A]))
        conic.append(s)
    return tuple(line), tuple(conic)


@dataclass(frozen=True)
class GHData:
    """The six invariants of one fiber: g[k] and h[(i,j)] for i < j.

    h is stored over pairs in the order (0,1), (0,2), (1,2); index i+j-1.
    """

    g: tuple
    h: tuple

    def h_at(self, i, j):
        return self.h[i + j - 1]

    def all_zero(self):
        return not any(self.g) and not any(self.h)


def gh_from_parts(line, conic, K=ZZ) -> GHData:
    """G_k and H_ij from precomputed line and conic coefficients."""
    add, sub, mul = K.add, K.sub, K.mul
    two = K.embed(2)

    def q_at(i, j):
        return conic[PAIR_INDEX[i][j]]

    g = []
    for k in range(3):
        i, j = (t for t in range(3) if t != k)
        li, lj = line[i], line[j]
        val = sub(add(mul(mul(lj, lj), q_at(i, i)),
                      mul(mul(li, li), q_at(j, j))),
                  mul(mul(li, lj), q_at(i, j)))
        g.append(val)
    h = []
    for i, j in ((0, 1), (0, 2), (1, 2)):
        k = 3 - i - j
        li, lj, lk = line[i], line[j], line[k]
        val = mul(mul(mul(two, li), lj), q_at(k, k))
        val = sub(val, mul(mul(li, lk), q_at(j, k)))
        val = sub(val, mul(mul(lj, lk), q_at(i, k)))
        val = add(val, mul(mul(lk, lk), q_at(i, j)))
        h.append(val)
    return GHData(tuple(g), tuple(h))


def gh_values(surface: SurfaceCoefficients, a, side="x", K=ZZ) -> GHData:
    """G_k and H_ij of the fiber over base point a.

    With (i, j, k) a permutation of {0, 1, 2}, L* the line and Q* the conic
    coefficients over a:

        G_k  = L*_j^2 Q*_ii - L*_i L*_j Q*_ij + L*_i^2 Q*_jj
        H_ij = 2 L*_i L*_j Q*_kk - L*_i L*_k Q*_jk - L*_j L*_k Q*_ik
               + L*_k^2 Q*_ij

    The fiber is one-dimensional exactly when all six vanish, in which case
    the two covering involutions break down there.
    """
    line, conic = side_coefficients(surface, a, side, K)
    return gh_from_parts(line, conic, K)


def is_degenerate_fiber(surface: SurfaceCoefficients, a, side="x", K=ZZ):
    """True when the fiber over a is positive-dimensional."""
    line, _ = side_coefficients(surface, a, side, K)
    if not any(line):
        return True
    return gh_values(surface, a, side, K).all_zero()
