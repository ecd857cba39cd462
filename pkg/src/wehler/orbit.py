"""Point sets over finite fields: enumeration, counting, cycle structure.

A non-degenerate surface carries the composed map as a permutation of its
finite set of F_q-points, so the whole dynamical picture over F_q is a
disjoint union of cycles.  This module produces that picture three ways,
from slow and explicit to fast and opaque:

  * enumerate_points walks base points of P^2 and solves each fiber,
  * count_points does the same through the table-driven kernel (optionally
    sharded across processes; contiguous index ranges partition the plane),
  * cycle_decomposition iterates the map over the enumerated points and
    returns the full permutation with its cycle labels, ready to cache.

Counting and decomposition raise DegenerateFiberError as soon as any fiber
is positive-dimensional; the cycle table variant records the failure
instead, because a cached "this surface is bad mod p" is still useful.
"""

import multiprocessing
from dataclasses import dataclass, field

import numpy as np

from . import _kernel
from .errors import DegenerateFiberError, UsageError
from .ff import (
    TABLE_BUDGET,
    FiniteField,
    enumerate_projective_plane,
    projective_plane_size,
    projective_point_at,
)
from .fiber import _brute_fiber, phi, solve_fiber
from .surface import (
    SurfaceCoefficients,
    gh_values,
    reduce_mod_p,
    side_coefficients,
    surface_digest,
)


def enumerate_points(surface: SurfaceCoefficients, K: FiniteField,
                     start=0, stop=None):
    """Yield all F_q-points of a surface already reduced into K.

    Points come out as normalized ((x0, x1, x2), (y0, y1, y2)) pairs,
    grouped by base point in canonical plane order.  Raises
    DegenerateFiberError on the first positive-dimensional fiber.
    """
    char2 = K.p == 2
    for a in enumerate_projective_plane(K, start, stop):
        if char2:
            line, _ = side_coefficients(surface, a, "x", K)
            if not any(line) or gh_values(surface, a, "x", K).all_zero():
                raise DegenerateFiberError(
                    "fiber is positive-dimensional", side="x", base=a)
            for y in _brute_fiber(surface, a, K):
                yield a, y
            continue
        sol = solve_fiber(surface, a, K, side="x")
        if sol.degenerate:
            raise DegenerateFiberError(
                "fiber is positive-dimensional", side="x", base=a)
        yield from sol.points


def _count_by_scan(surface, K):
    return sum(1 for _ in enumerate_points(surface, K))


def _shard_bounds(npts, shards):
    step, extra = divmod(npts, shards)
    bounds = [0]
    for i in range(shards):
        bounds.append(bounds[-1] + step + (1 if i < extra else 0))
    return bounds


def _run_shard(args):
    return _kernel.count_fibers_range(*args)


def count_points(surface: SurfaceCoefficients, p, m=1, threads=1,
                 method="auto"):
    """Number of F_{p^m}-points of the reduction of an integer surface.

    method "kernel" forces the table-driven scan (odd p with tables in
    budget only), "scan" forces per-fiber solving in Python, "auto" picks
    the kernel whenever it applies.  threads > 1 shards the kernel scan
    across forked processes; results do not depend on the shard count.
    """
    if method not in ("auto", "kernel", "scan"):
        raise UsageError(f"unknown counting method {method!r}")
    K = FiniteField(p, m)
    reduced = reduce_mod_p(surface, p)
    kernel_ok = p != 2 and K.q <= TABLE_BUDGET
    if method == "kernel" and not kernel_ok:
        raise UsageError(
            "kernel counting needs an odd field with tables in budget")
    if method == "scan" or not kernel_ok:
        return _count_by_scan(reduced, K)

    log, exp, zech, negt = K.kernel_tables()
    lc = np.array(reduced.L, dtype=np.int64)
    qc = np.array(reduced.Q, dtype=np.int64)
    npts = projective_plane_size(K)
    base_args = (K.q, K.q - 1, log, exp, zech, negt, lc, qc, 2 % p, 4 % p)

    threads = max(1, min(int(threads), npts))
    if threads == 1:
        results = [_kernel.count_fibers_range(0, npts, *base_args)]
    else:
        bounds = _shard_bounds(npts, threads)
        jobs = [(bounds[i], bounds[i + 1]) + base_args
                for i in range(threads)]
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(threads) as pool:
            results = pool.map(_run_shard, jobs)

    bad = [-(r + 1) for r in results if r < 0]
    if bad:
        base = projective_point_at(K, min(bad))
        raise DegenerateFiberError(
            "fiber is positive-dimensional", side="x", base=base)
    return int(sum(results))


@dataclass
class CycleTable:
    """The composed map restricted to S(F_q), as an explicit permutation.

    points[i] is a normalized point pair, image[i] the index of its image
    under the map, cycle_id[i] a label per cycle in discovery order and
    cycle_length[i] the length of the cycle through points[i].  When
    degenerate is True the map does not exist everywhere mod p and only
    p, m, digest and detail are meaningful.
    """

    p: int
    m: int
    digest: str
    degenerate: bool = False
    detail: str = ""
    points: tuple = field(default=())
    image: tuple = field(default=())
    cycle_id: tuple = field(default=())
    cycle_length: tuple = field(default=())

    def spectrum(self):
        """Map cycle length -> number of cycles of that length."""
        out = {}
        for n, cid in zip(self.cycle_length, self.cycle_id):
            out.setdefault(n, set()).add(cid)
        return {n: len(ids) for n, ids in sorted(out.items())}

    def points_with_period(self, n):
        return tuple(pt for pt, ln in zip(self.points, self.cycle_length)
                     if ln == n)

    def points_with_period_dividing(self, n):
        return tuple(pt for pt, ln in zip(self.points, self.cycle_length)
                     if n % ln == 0)

    def to_dict(self):
        return {
            "p": self.p,
            "m": self.m,
            "digest": self.digest,
            "degenerate": self.degenerate,
            "detail": self.detail,
            "points": [[list(x), list(y)] for x, y in self.points],
            "image": list(self.image),
            "cycle_id": list(self.cycle_id),
            "cycle_length": list(self.cycle_length),
        }

    @classmethod
    def from_dict(cls, data):
        points = tuple((tuple(x), tuple(y)) for x, y in data["points"])
        table = cls(
            p=int(data["p"]),
            m=int(data.get("m", 1)),
            digest=data["digest"],
            degenerate=bool(data["degenerate"]),
            detail=data.get("detail", ""),
            points=points,
            image=tuple(data["image"]),
            cycle_id=tuple(data["cycle_id"]),
            cycle_length=tuple(data["cycle_length"]),
        )
        n = len(table.points)
        if not (len(table.image) == len(table.cycle_id)
                == len(table.cycle_length) == n):
            raise UsageError("cycle table arrays disagree in length")
        return table


def cycle_decomposition(surface: SurfaceCoefficients, p, m=1) -> CycleTable:
    """Cycle structure of the composed map on S(F_{p^m}).

    The input surface is integral; reduction happens here.  A degenerate
    fiber anywhere makes the permutation undefined, which is recorded in
    the returned table rather than raised: negative results are worth
    caching too.
    """
    K = FiniteField(p, m)
    digest = surface_digest(surface)
    reduced = reduce_mod_p(surface, p)
    try:
        points = list(enumerate_points(reduced, K))
        index = {pt: i for i, pt in enumerate(points)}
        image = [index[phi(reduced, pt, K)] for pt in points]
    except DegenerateFiberError as exc:
        detail = str(exc)
        if exc.base is not None:
            detail += f" over {tuple(exc.base)} on side {exc.side}"
        return CycleTable(p=p, m=m, digest=digest, degenerate=True,
                          detail=detail)
    n = len(points)
    cycle_id = [-1] * n
    cycle_length = [0] * n
    next_id = 0
    for i in range(n):
        if cycle_id[i] >= 0:
            continue
        path = [i]
        j = image[i]
        while j != i:
            path.append(j)
            j = image[j]
        for k in path:
            cycle_id[k] = next_id
            cycle_length[k] = len(path)
        next_id += 1
    return CycleTable(p=p, m=m, digest=digest, degenerate=False,
                      points=tuple(points), image=tuple(image),
                      cycle_id=tuple(cycle_id),
                      cycle_length=tuple(cycle_length))
