"""Lifting modular cycle data to rational periodic points.

The pipeline, per surface: reduce modulo a list of small primes, compute the
cycle structure of the composed map over each prime field, pick residue
points whose cycle length is compatible with the target period n, glue their
coordinates with the Chinese remainder theorem, reconstruct bounded
rationals from the glued residues, and verify the resulting integer point
exactly over ZZ.  Only exactly verified points are ever reported; everything
before verification is a heuristic and allowed to be wrong.

Two facts drive the pruning.  A rational point of primitive period n has, at
every prime of good reduction, a reduction whose cycle length divides n; so
a single good prime with no such point rules the period out for the whole
surface.  And projective coordinates mod p carry an arbitrary scale, so
residues are normalized to make the first nonzero coordinate 1 and are only
ever combined across primes that agree on which coordinate that is.
"""

import itertools
import multiprocessing
import random
from dataclasses import dataclass
from math import gcd, isqrt, lcm

from .errors import BadReductionError, DegenerateFiberError, UsageError
from .ff import FiniteField, ZZ, normalize_int_triple, odd_primes
from .fiber import phi
from .orbit import cycle_decomposition
from .surface import SurfaceCoefficients, evaluate


@dataclass(frozen=True)
class SearchConfig:
    """Knobs for the period-n search.

    primes overrides the default list (the first num_primes odd primes).
    mode "strict" keeps only primes whose residue data is unambiguous: a
    single cycle of length exactly n, or failing that a single cycle of
    length dividing n.  mode "exhaustive" tries every point of length
    dividing n at every prime, capped at max_combinations CRT gluings.
    coeff_bound B draws random surface coefficients uniformly from [-B, B].
    verify_bits aborts exact orbit iteration once any coordinate outgrows
    that many bits; periodic orbits never come close.
    """

    period: int
    primes: tuple = ()
    num_primes: int = 30
    mode: str = "strict"
    coeff_bound: int = 1
    max_combinations: int = 10000
    verify_bits: int = 20000

    def __post_init__(self):
        if self.period < 1:
            raise UsageError("target period must be >= 1")
        if self.mode not in ("strict", "exhaustive"):
            raise UsageError(f"unknown search mode {self.mode!r}")
        if self.coeff_bound < 1:
            raise UsageError("coefficient bound must be >= 1")
        ps = tuple(self.primes)
        if len(set(ps)) != len(ps):
            raise UsageError("primes must be distinct")
        object.__setattr__(self, "primes", ps)

    def prime_list(self):
        return self.primes if self.primes else tuple(odd_primes(self.num_primes))


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    period: int | None
    reason: str = ""


@dataclass
class SurfaceVerdict:
    """Outcome of the pipeline on one surface.

    status is one of:
      found             an exactly verified point of primitive period n
      ruled_out         some good prime has no point of period dividing n,
                        so no rational point of period n can exist
      needs_more_primes candidates existed but none reconstructed/verified
      no_good_primes    every requested prime had bad or degenerate reduction
    """

    surface: SurfaceCoefficients
    status: str
    period: int | None = None
    point: tuple | None = None
    detail: str = ""
    primes_used: tuple = ()
    candidates_tried: int = 0


def random_surface(rng: random.Random, coeff_bound=1) -> SurfaceCoefficients:
    """A surface with coefficients uniform in [-B, B], forms nonzero."""
    while True:
        L = tuple(rng.randint(-coeff_bound, coeff_bound) for _ in range(9))
        Q = tuple(rng.randint(-coeff_bound, coeff_bound) for _ in range(36))
        if any(L) and any(Q):
            return SurfaceCoefficients(L, Q)


def pivot_pattern(point):
    """Indices of the first nonzero coordinate in each factor."""
    x, y = point
    return (next(i for i, v in enumerate(x) if v),
            next(i for i, v in enumerate(y) if v))


def reduce_point(point, K: FiniteField):
    """Reduce an integer point into K, normalized to pivot 1."""
    out = []
    for triple in point:
        res = tuple(v % K.p for v in triple)
        if not any(res):
            raise BadReductionError(
                f"point coordinate triple {triple} vanishes mod {K.p}")
        inv = K.inv(res[next(i for i, v in enumerate(res) if v)])
        out.append(tuple(K.mul(K.embed(v), inv) for v in res))
    return tuple(out)


# -- CRT and rational reconstruction ----------------------------------------

def crt_list(residues, moduli):
    """Combine residues over pairwise coprime moduli; returns (r, M)."""
    r, M = residues[0] % moduli[0], moduli[0]
    for rv, mv in zip(residues[1:], moduli[1:]):
        k = ((rv - r) * pow(M, -1, mv)) % mv
        r += M * k
        M *= mv
    return r, M


def rational_reconstruct(r, M):
    """The unique n/d = r mod M with |n|, d <= isqrt(M/2), or None.

    Half-extended Euclid on (M, r); the usual bound makes the answer unique
    when it exists at all.
    """
    bound = isqrt(M // 2)
    r0, r1 = M, r % M
    t0, t1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    if t1 == 0 or abs(t1) > bound or gcd(r1, abs(t1)) != 1:
        return None
    return (-r1, -t1) if t1 < 0 else (r1, t1)


def _reconstruct_triple(residue_triples, primes):
    fractions = []
    for c in range(3):
        r, M = crt_list([t[c] for t in residue_triples], list(primes))
        frac = rational_reconstruct(r, M)
        if frac is None:
            return None
        fractions.append(frac)
    scale = lcm(*(d for _, d in fractions))
    return normalize_int_triple(
        tuple(n * (scale // d) for n, d in fractions))


def crt_reconstruct(residue_points, primes):
    """Glue per-prime residue points into one integer point, or None.

    All residue points must share the pivot pattern and be normalized to
    pivot 1; reconstruction failure on any coordinate rejects the whole
    combination.
    """
    patterns = {pivot_pattern(pt) for pt in residue_points}
    if len(patterns) != 1:
        return None
    x = _reconstruct_triple([pt[0] for pt in residue_points], primes)
    y = _reconstruct_triple([pt[1] for pt in residue_points], primes)
    if x is None or y is None:
        return None
    return (x, y)


# -- exact verification ------------------------------------------------------

OFF_SURFACE = "point is not on the surface"


def verify_periodic(surface: SurfaceCoefficients, point, n,
                    max_bits=20000) -> VerifyResult:
    """Check that point has primitive period exactly n, over ZZ.

    Iterates the composed map at most n times; the first return to the
    start is the primitive period by definition.  Orbits of genuinely
    periodic points stay small, so a coordinate passing max_bits means the
    point is not periodic and the iteration stops early.
    """
    start = (normalize_int_triple(point[0]), normalize_int_triple(point[1]))
    if evaluate(surface, start, ZZ) != (0, 0):
        return VerifyResult(False, None, OFF_SURFACE)
    cur = start
    for k in range(1, n + 1):
        try:
            cur = phi(surface, cur, ZZ)
        except DegenerateFiberError:
            return VerifyResult(
                False, None, f"orbit hits a degenerate fiber at step {k}")
        if max(abs(v).bit_length() for pair in cur for v in pair) > max_bits:
            return VerifyResult(
                False, None, f"coordinates exceed {max_bits} bits at step {k}")
        if cur == start:
            if k == n:
                return VerifyResult(True, n)
            return VerifyResult(
                False, k, f"primitive period is {k}, not {n}")
    return VerifyResult(False, None, f"no return within {n} steps")


# -- candidate selection ------------------------------------------------------

def _cycles_by_length(table, n):
    """Cycles grouped as {cycle_id: points}, split by exact n and dividing n."""
    exact = {}
    dividing = {}
    for pt, cid, ln in zip(table.points, table.cycle_id, table.cycle_length):
        if ln == n:
            exact.setdefault(cid, []).append(pt)
        if n % ln == 0:
            dividing.setdefault(cid, []).append(pt)
    return exact, dividing


def select_candidates(tables, n, mode="strict", max_combinations=10000):
    """Combinations of per-prime residue points compatible with period n.

    Every table must be non-degenerate.  Returns (status, combinations)
    where each combination is a list of (p, point) pairs sharing a pivot
    pattern.  status "ruled_out" means some prime has no point of period
    dividing n, which is definitive; "empty" means the data gave nothing
    to try under the requested mode.

    Strict mode keeps a prime only when its data is unambiguous at the
    cycle level: a single cycle of length exactly n (whose points are the
    candidate residues), or, when there is none, a single cycle of length
    dividing n.  Exhaustive mode takes every point of period dividing n at
    every prime.  Either way the cross-prime product is grouped by pivot
    pattern and capped at max_combinations, spending the budget on the
    primes with the fewest candidates first.
    """
    per_prime = []
    for table in tables:
        if table.degenerate:
            raise UsageError("select_candidates needs non-degenerate tables")
        exact, dividing = _cycles_by_length(table, n)
        if not dividing:
            return "ruled_out", []
        if mode == "strict":
            if len(exact) == 1:
                candidates = next(iter(exact.values()))
            elif not exact and len(dividing) == 1:
                candidates = next(iter(dividing.values()))
            else:
                continue
        else:
            candidates = [pt for pts in dividing.values() for pt in pts]
        per_prime.append((table.p, candidates))
    if not per_prime:
        return "empty", []

    patterns = set()
    for _, candidates in per_prime:
        patterns.update(pivot_pattern(pt) for pt in candidates)
    combos = []
    budget = max_combinations
    for pattern in sorted(patterns):
        lists = []
        for p, candidates in per_prime:
            matching = [pt for pt in candidates
                        if pivot_pattern(pt) == pattern]
            if matching:
                lists.append((p, matching))
        if not lists:
            continue
        # cheapest primes first so the budget buys the most primes
        lists.sort(key=lambda item: (len(item[1]), item[0]))
        used = []
        size = 1
        for p, matching in lists:
            if size * len(matching) > budget:
                break
            size *= len(matching)
            used.append((p, matching))
        if not used:
            continue
        for combination in itertools.product(*(m for _, m in used)):
            combos.append([(p, pt) for (p, _), pt in zip(used, combination)])
        budget -= size
        if budget <= 0:
            break
    return ("ok", combos) if combos else ("empty", [])


# -- the pipeline -------------------------------------------------------------

def _table_for_prime(args):
    surface, p = args
    try:
        return cycle_decomposition(surface, p)
    except BadReductionError:
        return None


def good_cycle_tables(surface, primes, threads=1):
    """Non-degenerate cycle tables of the reductions at the given primes."""
    jobs = [(surface, p) for p in primes]
    if threads > 1:
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(min(threads, len(jobs))) as pool:
            tables = pool.map(_table_for_prime, jobs)
    else:
        tables = [_table_for_prime(job) for job in jobs]
    return [t for t in tables if t is not None and not t.degenerate]


def _tables_until_refuted(surface, primes, n, threads):
    """Good tables in prime order, stopping at one that excludes period n.

    A rational period-n point reduces to a cycle of length dividing n at
    every good prime, so the first table without such a cycle is already
    a proof of absence; the remaining (larger, costlier) primes are never
    computed.  Returns (tables, refuting prime or None).
    """
    tables = []
    chunk = max(threads, 1)
    ctx = multiprocessing.get_context("fork") if chunk > 1 else None
    for start in range(0, len(primes), chunk):
        jobs = [(surface, p) for p in primes[start:start + chunk]]
        if ctx and len(jobs) > 1:
            with ctx.Pool(min(chunk, len(jobs))) as pool:
                batch = pool.map(_table_for_prime, jobs)
        else:
            batch = [_table_for_prime(job) for job in jobs]
        for t in batch:
            if t is None or t.degenerate:
                continue
            tables.append(t)
            if not t.points_with_period_dividing(n):
                return tables, t.p
    return tables, None


def analyze_surface(surface, config: SearchConfig, threads=1) -> SurfaceVerdict:
    """Run the whole pipeline on one surface."""
    n = config.period
    tables, refuter = _tables_until_refuted(
        surface, config.prime_list(), n, threads)
    if not tables:
        return SurfaceVerdict(surface, "no_good_primes",
                              detail="no prime gave a usable reduction")
    primes_used = tuple(t.p for t in tables)
    if refuter is not None:
        return SurfaceVerdict(
            surface, "ruled_out", primes_used=primes_used,
            detail=f"no point of period dividing {n} modulo {refuter}")
    # every table now has a dividing cycle, so select_candidates cannot
    # come back ruled_out
    status, combos = select_candidates(
        tables, n, config.mode, config.max_combinations)
    if status == "empty":
        return SurfaceVerdict(
            surface, "needs_more_primes", primes_used=primes_used,
            detail="no unambiguous residue data under the current mode")
    tried = 0
    seen = set()
    for combo in combos:
        point = crt_reconstruct([pt for _, pt in combo],
                                [p for p, _ in combo])
        if point is None or point in seen:
            continue
        seen.add(point)
        tried += 1
        result = verify_periodic(surface, point, n, config.verify_bits)
        if result.ok:
            return SurfaceVerdict(
                surface, "found", period=n, point=point,
                primes_used=tuple(p for p, _ in combo),
                candidates_tried=tried)
    return SurfaceVerdict(
        surface, "needs_more_primes", primes_used=primes_used,
        candidates_tried=tried,
        detail="candidates existed but none verified")


def search(surfaces, config: SearchConfig, threads=1):
    """Yield one SurfaceVerdict per surface, in input order."""
    for surface in surfaces:
        yield analyze_surface(surface, config, threads)
