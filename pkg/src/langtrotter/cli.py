"""Command line entry point: census, curve-scan, lt-count, bounds, twists, simulate.

Exit status is 0 on success, 1 on invalid input and 2 when a computation
contradicts an identity it must satisfy.  Every failure also prints one
``error-code: <CODE> <message>`` line on stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import os
import re
import sys
import tempfile
import time
import warnings
import zlib
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Sequence

CACHE_VERSION = "langtrotter-cache v1"
CACHE_COLUMNS = ("label", "p", "a_p", "b_p", "crc")


class ValidationError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ValidationError(message)


# ---------------------------------------------------------------------------
# atomic output


def write_atomic(path, text: str) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
            fh.flush()
            os.fsync(fh.fileno())
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def csv_text(header: Sequence, rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _fmt(v) -> str:
    if isinstance(v, float):
        return repr(v)
    return str(v)


# ---------------------------------------------------------------------------
# record cache


def _row_crc(label: str, p: int, a: int, b: int) -> str:
    return f"{zlib.crc32(f'{label},{p},{a},{b}'.encode()):08x}"


@dataclass
class CacheLoad:
    entries: dict[tuple[str, int], tuple[int, int]]
    corrupt: list[int] = field(default_factory=list)  # line numbers with bad checksums
    truncated: bool = False
    version_ok: bool = True


def read_cache(path) -> CacheLoad:
    """Parse a cache file; bad rows are dropped, a truncated tail is cut off."""
    path = Path(path)
    if not path.exists():
        return CacheLoad({})
    raw = path.read_bytes().decode("utf-8", errors="replace")
    lines = raw.split("\n")
    if not lines or lines[0].strip() != f"# {CACHE_VERSION}":
        warnings.warn(f"cache {path} has an unknown version header; recomputing everything")
        return CacheLoad({}, version_ok=False)
    truncated = not raw.endswith("\n")
    body = lines[1:]
    if truncated:
        body = body[:-1]
    entries, corrupt = {}, []
    for i, line in enumerate(body, start=2):
        if not line or line == ",".join(CACHE_COLUMNS):
            continue
        parts = line.split(",")
        try:
            label, p, a, b, crc = parts[0], int(parts[1]), int(parts[2]), int(parts[3]), parts[4]
            ok = len(parts) == 5 and crc == _row_crc(label, p, a, b)
        except (IndexError, ValueError):
            ok = False
        if not ok:
            corrupt.append(i)
            continue
        entries[(label, p)] = (a, b)
    return CacheLoad(entries, corrupt, truncated)


def write_cache(path, entries: dict[tuple[str, int], tuple[int, int]]) -> None:
    lines = [f"# {CACHE_VERSION}", ",".join(CACHE_COLUMNS)]
    for (label, p), (a, b) in sorted(entries.items()):
        lines.append(f"{label},{p},{a},{b},{_row_crc(label, p, a, b)}")
    write_atomic(path, "\n".join(lines) + "\n")


def cache_roundtrip(records: dict[tuple[str, int], tuple[int, int]], path) -> dict[tuple[str, int], tuple[int, int]]:
    write_cache(path, records)
    return read_cache(path).entries


@dataclass
class ScanStats:
    computed: int = 0
    cached: int = 0
    corrupt: int = 0


def scan_curve(curve, p_max: int, cache: dict | None, stats: ScanStats, method: str = "auto"):
    """FrobeniusRecords for all good p <= p_max, reusing and filling ``cache``."""
    from . import genus2

    good, _ = genus2.good_primes(curve, p_max)
    out = []
    for p in good:
        key = (curve.label, p)
        if cache is not None and key in cache:
            a, b = cache[key]
            rec = genus2.FrobeniusRecord(p, a, b)
            stats.cached += 1
        else:
            rec = genus2.frobenius_record(curve, p, method)
            stats.computed += 1
            if cache is not None:
                cache[key] = (rec.a_p, rec.b_p)
        out.append(rec)
    return out


# ---------------------------------------------------------------------------
# commands


ARTIFACT_VERSION = "v1"


def _emit(args, name: str, text: str) -> Path | None:
    """Write ``text`` under --out (a directory, or a file when it has a suffix); stdout otherwise.

    Each artifact starts with a ``# langtrotter <kind> v1`` line.
    """
    kind = re.sub(r"(_[a-z]+\d+)+$", "", name.split(".")[0])
    text = f"# langtrotter {kind} {ARTIFACT_VERSION}\n" + text
    if args.out is None:
        sys.stdout.write(text)
        return None
    out = Path(args.out)
    target = out if out.suffix else out / name
    write_atomic(target, text)
    return target


def _int_list(s: str) -> list[int]:
    try:
        return [int(t) for t in s.split(",") if t.strip()]
    except ValueError:
        raise ValidationError(f"expected comma-separated integers, got {s!r}") from None


def _float_list(s: str) -> list[float]:
    try:
        return [float(t) for t in s.split(",") if t.strip()]
    except ValueError:
        raise ValidationError(f"expected comma-separated numbers, got {s!r}") from None


def cmd_census(args) -> int:
    from . import census

    from sympy import isprime

    if not isprime(args.ell) or args.ell > 13:
        raise ValidationError("--ell must be a prime <= 13")
    if args.n < 1 or args.n > 2:
        raise ValidationError("--n must be 1 or 2")
    degrees = tuple(_int_list(args.residue_degrees)) if args.residue_degrees else (1,) * args.n
    if sum(degrees) != args.n:
        raise ValidationError("residue degrees must sum to --n")
    rep = census.census_report(args.ell, degrees, args.a, args.weight_exponent, with_slopes=args.slopes)
    _emit(args, f"census_l{args.ell}_n{args.n}.csv", csv_text(rep.CSV_HEADER, rep.rows()))
    print(rep.summary(), file=sys.stderr)
    mismatch = [k for k, v in rep.formula_counts.items() if rep.exact_counts.get(k) != v]
    if mismatch:
        raise ArithmeticError(f"exact and formula counts disagree for {mismatch}")
    return 0


def _load_curves(args):
    from . import genus2

    if not args.curve:
        return list(genus2.FIXED_CURVES)
    try:
        return genus2.load_curves(args.curve)
    except FileNotFoundError:
        raise ValidationError(f"curve file {args.curve} not found") from None


def _records_with_cache(args, curves, p_max):
    stats = ScanStats()
    cache = None
    if args.cache:
        load = read_cache(args.cache)
        cache = load.entries
        stats.corrupt = len(load.corrupt)
        if load.corrupt:
            warnings.warn(f"{len(load.corrupt)} corrupt cache rows dropped; they will be recomputed")
        if load.truncated:
            warnings.warn("cache file truncated; intact prefix kept")
    per_curve = {c.label: scan_curve(c, p_max, cache, stats, args.method) for c in curves}
    if args.cache and (stats.computed or stats.corrupt or not Path(args.cache).exists()):
        write_cache(args.cache, cache)
    return per_curve, stats


def cmd_curve_scan(args) -> int:
    from . import genus2

    if args.pmax < 3 or args.pmax > 10**5:
        raise ValidationError("--pmax must lie in [3, 100000]")
    curves = _load_curves(args)
    t0 = time.perf_counter()
    per_curve, stats = _records_with_cache(args, curves, args.pmax)
    rows = []
    for c in curves:
        for rec in per_curve[c.label]:
            rows.append((c.label,) + rec.csv_row())
    _emit(args, "frobenius_records.csv", csv_text(("label",) + genus2.RECORD_HEADER, rows))
    print(f"records: {len(rows)} ({stats.computed} computed, {stats.cached} from cache) in {time.perf_counter() - t0:.2f}s", file=sys.stderr)
    return 0


def cmd_lt_count(args) -> int:
    from . import ltlab

    curves = _load_curves(args)
    if len(curves) != 1 and not args.label:
        raise ValidationError("several curves given; choose one with --label")
    curve = next((c for c in curves if c.label == args.label), None) if args.label else curves[0]
    if curve is None:
        raise ValidationError(f"no curve labelled {args.label!r}")
    xs = _float_list(args.x)
    if not xs or any(b <= a for a, b in zip(xs, xs[1:])) or xs[-1] > 10**5 or xs[0] < 2:
        raise ValidationError("--x must be an increasing list within [2, 100000]")
    ells = _int_list(args.ell)
    a_vals = _int_list(args.a)
    per_curve, _ = _records_with_cache(args, [curve], int(xs[-1]))
    recs = per_curve[curve.label]
    rows = ltlab.lt_report(recs, a_vals, xs, ells, n=args.n)
    _emit(args, "lt_counts.csv", csv_text(ltlab.REPORT_HEADER, [tuple(_fmt(v) for v in r) for r in rows]))
    return 0


def cmd_bounds(args) -> int:
    from . import chebotarev

    if args.n < 1:
        raise ValidationError("--n must be positive")
    regimes = chebotarev.REGIMES if args.regime == "both" else (args.regime,)
    zeros = {"0": (False,), "1": (True,), "both": (False, True)}[args.a_zero]
    rows = []
    for r in regimes:
        for z in zeros:
            eps = args.epsilon if r == "unconditional" else 0.0
            rows.append(chebotarev.BoundProfile(args.n, r, z, epsilon=eps).csv_row())
    _emit(args, f"bounds_n{args.n}.csv", csv_text(chebotarev.PROFILE_HEADER, rows))
    return 0


def cmd_twists(args) -> int:
    from . import twists

    if args.modulus_bound < 1:
        raise ValidationError("--modulus-bound must be positive")
    if args.twist_exceptions < 0:
        raise ValidationError("--twist-exceptions must be >= 0")
    if args.twist_exceptions:
        warnings.warn("--twist-exceptions > 0 is heuristic: detected twists may be spurious")
    if args.synthetic:
        d, q = _int_list(args.synthetic)
        system = twists.synthetic_quadratic_system(d, q, p_max=100 * args.modulus_bound, seed=args.seed)
    else:
        if not (args.field_poly and args.table):
            raise ValidationError("give --synthetic D,Q or both --field-poly and --table")
        autos = []
        for spec in args.automorphism or []:
            autos.append([Fraction(t) for t in spec.split(",")])
        E = twists.NumberFieldSpec(_int_list(args.field_poly), autos)
        eps = twists.load_character(args.character) if args.character else twists.DirichletCharacter.trivial()
        system = twists.EigenvalueSystem.from_csv(args.table, E, args.level, eps)
    found = twists.detect_inner_twists(system, args.modulus_bound, args.twist_exceptions)
    ff = twists.fixed_field_degree(found, system)
    kf = twists.kernel_field(found)
    rows = [(t.sigma, t.chi.conductor(), t.chi.order, ";".join(f"{r}:{v}" for r, v in t.chi.values)) for t in found]
    _emit(args, "twists.csv", csv_text(("sigma", "modulus", "order", "values"), rows))
    print(
        f"|Gamma| = {ff.gamma_order}, [F:Q] = {ff.degree}, K: m = {kf.modulus}, "
        f"S = {sorted(kf.subgroup)}, [K:Q] = {kf.degree}",
        file=sys.stderr,
    )
    return 0


def _group_model(spec: str):
    from . import chebotarev

    kind, _, arg = spec.partition(":")
    try:
        val = int(arg)
    except ValueError:
        raise ValidationError(f"bad group spec {spec!r}") from None
    if kind == "torus":
        return chebotarev.torus_model(val).model()
    if kind == "gsp4-trace":
        if val != 3:
            raise ValidationError("gsp4-trace is enumerated only for q = 3")
        return chebotarev.gsp4_trace_classes(val)
    raise ValidationError(f"unknown group kind {kind!r}; use torus:L or gsp4-trace:3")


def cmd_simulate(args) -> int:
    from . import chebotarev

    if args.x < 2 or args.x > 10**7:
        raise ValidationError("--x must lie in [2, 10^7]")
    model = _group_model(args.group)
    stream = chebotarev.simulate_frobenius(model, int(args.x), args.seed)
    _emit(args, "frobenius_stream.csv", csv_text(chebotarev.STREAM_HEADER, stream.dump_rows()))
    print(f"chi-square p-value {chebotarev.chi_square_pvalue(stream):.4g} over {len(stream.draws)} primes", file=sys.stderr)
    return 0


# ---------------------------------------------------------------------------
# parser and config


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--cache", default=None)
    common.add_argument("--out", default=None)
    common.add_argument("--config", default=None)

    # global flags are accepted after the subcommand only
    parser = _Parser(prog="langtrotter", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("census", parents=[common], help="exact subset counts in GSp4")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--residue-degrees", default=None)
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--weight-exponent", type=int, default=1)
    p.add_argument("--slopes", action=argparse.BooleanOptionalAction, default=False)
    p.set_defaults(func=cmd_census)

    for name, func, help_ in (("curve-scan", cmd_curve_scan, "Frobenius records for genus-2 curves"), ("lt-count", cmd_lt_count, "Lang-Trotter counts")):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("--curve", default=None)
        p.add_argument("--method", choices=("auto", "direct", "cartier"), default="auto")
        if name == "curve-scan":
            p.add_argument("--pmax", type=int, required=True)
        else:
            p.add_argument("--label", default=None)
            p.add_argument("--x", default="1000,10000")
            p.add_argument("--a", default="0")
            p.add_argument("--ell", default="5,13")
            p.add_argument("--n", type=int, default=1)
        p.set_defaults(func=func)

    p = sub.add_parser("bounds", parents=[common], help="theorem exponents")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--regime", choices=("unconditional", "grh", "both"), default="both")
    p.add_argument("--a-zero", choices=("0", "1", "both"), default="both")
    p.add_argument("--epsilon", type=float, default=0.0)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("twists", parents=[common], help="inner-twist detection")
    p.add_argument("--synthetic", default=None, help="D,Q: the built-in Q(sqrt D) system twisted by the character mod Q")
    p.add_argument("--field-poly", default=None)
    p.add_argument("--automorphism", action="append")
    p.add_argument("--table", default=None)
    p.add_argument("--level", type=int, default=1)
    p.add_argument("--character", default=None)
    p.add_argument("--modulus-bound", type=int, default=100)
    p.add_argument("--twist-exceptions", type=int, default=0)
    p.set_defaults(func=cmd_twists)

    p = sub.add_parser("simulate", parents=[common], help="Frobenius class simulator")
    p.add_argument("--group", default="torus:5")
    p.add_argument("--x", type=float, default=1e6)
    p.set_defaults(func=cmd_simulate)
    return parser


def read_config(path) -> dict[str, str]:
    out = {}
    for n, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValidationError(f"{path}:{n}: expected key=value")
        k, v = (t.strip() for t in line.split("=", 1))
        out[k.replace("-", "_")] = v
    return out


def parse_args(argv: Sequence[str]) -> argparse.Namespace:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.config:
        try:
            conf = read_config(args.config)
        except FileNotFoundError:
            raise ValidationError(f"config file {args.config} not found") from None
        # rebuild argv with config values first so explicit flags win
        known = vars(args)
        extra = []
        for k, v in conf.items():
            if k not in known or k in ("command", "func", "config"):
                raise ValidationError(f"unknown config key {k!r}")
            extra += [f"--{k.replace('_', '-')}", v]
        idx = argv.index(args.command)
        args = parser.parse_args(list(argv[: idx + 1]) + extra + list(argv[idx + 1 :]))
    if args.threads < 1:
        raise ValidationError("--threads must be >= 1")
    return args


def _set_threads(n: int) -> None:
    if n == 1:
        return
    import numba

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        numba.set_num_threads(min(n, numba.config.NUMBA_NUM_THREADS))


def run(argv: Sequence[str] | None = None) -> int:
    from .genus2 import ArithmeticInconsistency, BadPrime
    from .twists import TwistDegeneracy

    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = parse_args(argv)
        _set_threads(args.threads)
        return args.func(args)
    except (ValidationError, BadPrime, TwistDegeneracy, FileNotFoundError, ValueError) as exc:
        print(f"error-code: E_VALIDATION {exc}", file=sys.stderr)
        return 1
    except (ArithmeticInconsistency, ArithmeticError) as exc:
        print(f"error-code: E_ARITHMETIC {exc}", file=sys.stderr)
        return 2


def main() -> None:
    try:
        code = run()
        sys.stdout.flush()
    except BrokenPipeError:
        # reader went away (e.g. piped into head)
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        code = 0
    sys.exit(code)


if __name__ == "__main__":
    main()
