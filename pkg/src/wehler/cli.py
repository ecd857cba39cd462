"""Command-line entry point.

Subcommands: check, count, cycles, search, zeta, verify.  Surfaces live in
JSON files {"L": [9 ints], "Q": [36 ints]}, points in {"x": [..], "y": [..]},
counts files as plain "m N_m" lines.  Exit code 0 means the command ran (its
verdict may still be negative, e.g. a failed verification); 1 is a usage
problem; 2 means the mathematics refused: degenerate surface where a map was
needed, counts failing an exactness check, a point off its surface.

Output goes to stdout in either human or machine form; machine form is JSON
with sorted keys (one document per command, one document per line for
search, which streams).  Progress notes that must not pollute the
comparable output (cache hits, timing) go to stderr.
"""

import argparse
import json
import os
import sys
from pathlib import Path

from .errors import (
    BadReductionError,
    DegenerateFiberError,
    MathematicalInconsistencyError,
    UsageError,
)
from .ff import FiniteField, enumerate_projective_plane, is_prime
from .liftsearch import (
    OFF_SURFACE,
    SearchConfig,
    random_surface,
    search,
    verify_periodic,
)
from .orbit import CycleTable, count_points, cycle_decomposition
from .surface import (
    SurfaceCoefficients,
    is_degenerate_fiber,
    parse_surface,
    reduce_mod_p,
    surface_digest,
)
from .zeta import PAIRS, zeta_data, zeta_report


class _Parser(argparse.ArgumentParser):
    # usage problems exit 1; argparse's default of 2 is reserved for
    # mathematical inconsistencies here
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _load_surface(path) -> SurfaceCoefficients:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read surface file: {exc}") from exc
    return parse_surface(text)


def _load_point(path):
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read point file: {exc}") from exc
    if not isinstance(data, dict) or set(data) != {"x", "y"}:
        raise UsageError('point file must be {"x": [3 ints], "y": [3 ints]}')
    x, y = list(data["x"]), list(data["y"])
    if len(x) != 3 or len(y) != 3:
        raise UsageError("point coordinates must be triples")
    return (tuple(int(v) for v in x), tuple(int(v) for v in y))


def _read_counts_file(path):
    counts = {}
    try:
        lines = Path(path).read_text().splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read counts file: {exc}") from exc
    for line in lines:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise UsageError(f"counts line not of the form 'm N_m': {line!r}")
        m, n = int(parts[0]), int(parts[1])
        if m in counts:
            raise UsageError(f"duplicate count for m = {m}")
        counts[m] = n
    missing = [m for m in range(1, PAIRS + 1) if m not in counts]
    if missing:
        raise UsageError(f"counts file lacks m = {missing}; "
                         f"all of 1..{PAIRS} are required")
    return [counts[m] for m in range(1, PAIRS + 1)]


def _threads(args):
    if getattr(args, "threads", None):
        return args.threads
    env = os.environ.get("WEHLER_THREADS")
    if env:
        try:
            n = int(env)
        except ValueError:
            raise UsageError(f"WEHLER_THREADS is not an integer: {env!r}")
        if n >= 1:
            return n
        raise UsageError("WEHLER_THREADS must be >= 1")
    return os.cpu_count() or 1

def _odd_prime(p):
    if not is_prime(p) or p == 2:
        raise UsageError(f"{p} is not an odd prime")
    return p


def _emit(args, payload):
    # flush so machine output streams through pipes as it is produced
    print(json.dumps(payload, sort_keys=True), flush=True)


def _point_json(point):
    return [list(point[0]), list(point[1])]


def _plot_path(args, name):
    directory = Path(args.plots)
    directory.mkdir(parents=True, exist_ok=True)
    return str(directory / name)


# -- commands -----------------------------------------------------------------

def cmd_check(args):
    surface = _load_surface(args.surface)
    digest = surface_digest(surface)
    try:
        primes = [int(v) for v in args.primes.split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"bad prime list: {args.primes!r}")
    if not primes or not all(is_prime(p) for p in primes):
        raise UsageError(f"bad prime list: {args.primes!r}")
    rows = []
    for p in primes:
        row = {"p": p, "ok": True, "reason": "", "side": "", "base": None}
        try:
            reduced = reduce_mod_p(surface, p)
        except BadReductionError as exc:
            row.update(ok=False, reason=f"bad reduction: {exc}")
            rows.append(row)
            continue
        K = FiniteField(p)
        for side in ("x", "y"):
            hit = next((a for a in enumerate_projective_plane(K)
                        if is_degenerate_fiber(reduced, a, side, K)), None)
            if hit is not None:
                row.update(ok=False, reason="degenerate fiber",
                           side=side, base=list(hit))
                break
        rows.append(row)
    if args.format == "machine":
        _emit(args, {"digest": digest, "command": "check", "results": rows})
        return 0
    print(f"surface {digest}")
    for row in rows:
        if row["ok"]:
            print(f"p={row['p']}: non-degenerate on both sides")
        elif row["side"]:
            print(f"p={row['p']}: degenerate fiber on side {row['side']} "
                  f"over {tuple(row['base'])}")
        else:
            print(f"p={row['p']}: {row['reason']}")
    return 0


def cmd_count(args):
    surface = _load_surface(args.surface)
    digest = surface_digest(surface)
    _odd_prime(args.p)
    if args.mmax < 1:
        raise UsageError("--mmax must be >= 1")
    threads = _threads(args)
    counts = []
    for m in range(1, args.mmax + 1):
        counts.append(count_points(surface, args.p, m, threads=threads))
    out = args.out or f"wehler-counts-{digest[:8]}-p{args.p}.txt"
    Path(out).write_text(
        "".join(f"{m} {n}\n" for m, n in enumerate(counts, start=1)))
    plot = None
    if args.plots:
        from .plots import save_count_growth
        plot = save_count_growth(
            counts, args.p,
            _plot_path(args, f"count-growth-{digest[:8]}-p{args.p}.png"))
    if args.format == "machine":
        _emit(args, {"digest": digest, "command": "count", "p": args.p,
                     "counts": counts, "out": out, "plot": plot})
        return 0
    print(f"surface {digest} over F_{args.p}")
    for m, n in enumerate(counts, start=1):
        print(f"N_{m} = {n}")
    print(f"counts written to {out}", file=sys.stderr)
    if plot:
        print(f"plot written to {plot}", file=sys.stderr)
    return 0


def _cycle_table_cached(surface, p, cache_dir):
    digest = surface_digest(surface)
    path = Path(cache_dir) / f"{digest}-p{p}.json"
    if path.exists():
        try:
            table = CycleTable.from_dict(json.loads(path.read_text()))
            if table.digest == digest and table.p == p:
                return table, True
        except (ValueError, KeyError, UsageError):
            pass  # unreadable cache entries are recomputed below
    table = cycle_decomposition(surface, p)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(table.to_dict(), sort_keys=True))
    return table, False


def cmd_cycles(args):
    surface = _load_surface(args.surface)
    digest = surface_digest(surface)
    _odd_prime(args.p)
    table, cached = _cycle_table_cached(surface, args.p, args.cache)
    if cached:
        print("cycle table loaded from cache", file=sys.stderr)
    if table.degenerate:
        raise DegenerateFiberError(
            f"no cycle structure mod {args.p}: {table.detail}")
    spectrum = table.spectrum()
    plot = None
    if args.plots:
        from .plots import save_cycle_spectrum
        plot = save_cycle_spectrum(
            spectrum,
            _plot_path(args, f"cycle-spectrum-{digest[:8]}-p{args.p}.png"),
            title=f"cycle spectrum mod {args.p}")
    if args.format == "machine":
        payload = table.to_dict()
        payload.update(command="cycles",
                       spectrum={str(k): v for k, v in spectrum.items()},
                       plot=plot)
        _emit(args, payload)
        return 0
    print(f"surface {digest} mod {args.p}: {len(table.points)} points, "
          f"{len(set(table.cycle_id))} cycles")
    for length, count in spectrum.items():
        print(f"length {length}: {count} cycle{'s' if count > 1 else ''}")
    if plot:
        print(f"plot written to {plot}", file=sys.stderr)
    return 0


def cmd_search(args):
    if args.surface:
        surfaces = [_load_surface(args.surface)]
    else:
        if args.surfaces < 1:
            raise UsageError("--surfaces must be >= 1")
        import random
        rng = random.Random(args.seed)
        surfaces = (random_surface(rng, args.coeff_range)
                    for _ in range(args.surfaces))
    config = SearchConfig(period=args.period, num_primes=args.primes,
                          mode=args.mode, coeff_bound=args.coeff_range)
    threads = _threads(args)
    found = 0
    for verdict in search(surfaces, config, threads=threads):
        digest = surface_digest(verdict.surface)
        if args.format == "machine":
            _emit(args, {
                "command": "search",
                "digest": digest,
                "L": list(verdict.surface.L),
                "Q": list(verdict.surface.Q),
                "status": verdict.status,
                "period": verdict.period,
                "point": _point_json(verdict.point) if verdict.point else None,
                "detail": verdict.detail,
                "primes_used": list(verdict.primes_used),
                "candidates_tried": verdict.candidates_tried,
            })
        elif verdict.status == "found":
            found += 1
            x, y = verdict.point
            print(f"surface {digest}: period {verdict.period} point "
                  f"x={list(x)} y={list(y)} (verified)", flush=True)
        else:
            detail = f" ({verdict.detail})" if verdict.detail else ""
            print(f"surface {digest}: {verdict.status}{detail}", flush=True)
    if args.format != "machine":
        print(f"verified points found: {found}", file=sys.stderr)
    return 0


def cmd_zeta(args):
    _odd_prime(args.p)
    if args.counts:
        counts = _read_counts_file(args.counts)
        digest = None
    else:
        surface = _load_surface(args.surface)
        digest = surface_digest(surface)
        threads = _threads(args)
        counts = [count_points(surface, args.p, m, threads=threads)
                  for m in range(1, PAIRS + 1)]
    data = zeta_data(counts, args.p)
    plot = None
    if args.plots:
        from .plots import save_root_diagram
        stem = digest[:8] if digest else "counts"
        plot = save_root_diagram(
            data.p2, args.p,
            _plot_path(args, f"zeta-roots-{stem}-p{args.p}.png"))
    if args.format == "machine":
        payload = data.to_dict()
        payload.update(command="zeta", digest=digest, plot=plot)
        _emit(args, payload)
        return 0
    if digest:
        print(f"surface {digest}")
    print(zeta_report(data))
    if plot:
        print(f"plot written to {plot}", file=sys.stderr)
    return 0


def cmd_verify(args):
    surface = _load_surface(args.surface)
    point = _load_point(args.point)
    if args.period < 1:
        raise UsageError("--period must be >= 1")
    result = verify_periodic(surface, point, args.period)
    if args.format == "machine":
        _emit(args, {"command": "verify",
                     "digest": surface_digest(surface),
                     "point": _point_json(point),
                     "claimed_period": args.period,
                     "verified": result.ok,
                     "period": result.period,
                     "reason": result.reason})
    elif result.ok:
        print(f"verified: primitive period {result.period}")
    elif result.period is not None:
        print(f"not verified: primitive period is {result.period}, "
              f"not {args.period}")
    else:
        print(f"not verified: {result.reason}")
    if result.reason == OFF_SURFACE:
        return 2
    return 0


# -- parser ---------------------------------------------------------------------

def build_parser():
    parser = _Parser(prog="wehler",
                     description="dynamics of composed involutions on "
                                 "surfaces cut from P2 x P2")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, plots=False, threads=False):
        p.add_argument("--format", choices=("human", "machine"),
                       default="human")
        if plots:
            p.add_argument("--plots", metavar="DIR",
                           help="also render figures into DIR")
        if threads:
            p.add_argument("--threads", type=int, default=0,
                           help="worker processes (default: WEHLER_THREADS "
                                "or all cores)")

    p = sub.add_parser("check", help="degenerate-fiber scan mod small primes")
    p.add_argument("--surface", required=True)
    p.add_argument("--primes", default="2,3,5,7,11,13",
                   help="comma-separated primes to scan")
    common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("count", help="count points over GF(p^m)")
    p.add_argument("--surface", required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--mmax", type=int, required=True)
    p.add_argument("--out", help="counts file to write (default: derived)")
    common(p, plots=True, threads=True)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("cycles", help="cycle structure of the map mod p")
    p.add_argument("--surface", required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--cache", default="wehler-cache",
                   help="cycle table cache directory")
    common(p, plots=True)
    p.set_defaults(func=cmd_cycles)

    p = sub.add_parser("search",
                       help="search for rational periodic points")
    p.add_argument("--period", type=int, required=True)
    p.add_argument("--primes", type=int, default=30,
                   help="how many odd primes to reduce at")
    p.add_argument("--coeff-range", type=int, default=1,
                   help="random coefficients drawn from [-R, R]")
    p.add_argument("--seed", type=int)
    p.add_argument("--mode", choices=("strict", "exhaustive"),
                   default="strict")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--surfaces", type=int,
                       help="number of random surfaces to try")
    group.add_argument("--surface", help="a single surface file")
    common(p, threads=True)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("zeta", help="zeta function and Picard bound")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--surface", help="surface file (counts live)")
    group.add_argument("--counts", help="counts file with m = 1..11")
    p.add_argument("--p", type=int, required=True)
    common(p, plots=True, threads=True)
    p.set_defaults(func=cmd_zeta)

    p = sub.add_parser("verify", help="verify a claimed primitive period")
    p.add_argument("--surface", required=True)
    p.add_argument("--point", required=True)
    p.add_argument("--period", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except MathematicalInconsistencyError as exc:
        print(f"inconsistency: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        # the consumer closed the stream mid-output (e.g. | head);
        # detach stdout so the interpreter's flush-at-exit stays quiet
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return 141


if __name__ == "__main__":
    raise SystemExit(main())
