"""Command-line interface: ``orbidt <command> [flags]``.

Exit codes: 0 success or equality, 1 mismatch, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import dataclass, field

from .cache import partition_records
from .checks import CRITERIA, as_crational, run_criterion
from .errors import OrbiDTError, UsageError
from .laurent import RationalPoint
from .partitions import partitions_up_to
from .pleth import FORMULAS, build_F_limit, build_F_num, expand, pexp_eval
from .points import parse_point, random_points
from .qseries import QSeries, z_enumerated
from .transfer import transfer_checks, z_limit
from .vertex import vertex_record

COMMANDS = ("enumerate", "vertex", "zseries", "closedform", "limit", "transfer", "compare", "selfcheck")


@dataclass
class RunConfig:
    command: str
    r: int = 1
    N: int = 4
    mode: str | None = None
    point: tuple[str, ...] | None = None
    n_points: int = 1
    seed: int = 0
    formula: str = "main"
    pair: str = "main"
    fmt: str = "json"
    cache_dir: str | None = None
    jobs: int = 1
    raw: bool = False
    method: str = "enumeration"
    timings: bool = False

    def __post_init__(self):
        if self.r < 1:
            raise UsageError("--r must be at least 1")
        if self.N < 0:
            raise UsageError("--max-boxes must be nonnegative")
        if self.n_points < 1:
            raise UsageError("--points must be at least 1")
        if self.jobs < 1:
            raise UsageError("--jobs must be at least 1")

    def points(self) -> list[RationalPoint]:
        if self.point is not None:
            return [parse_point(self.point)]
        return random_points(self.n_points, self.seed)


@dataclass
class CompareReport:
    pair: str
    params: dict
    coefficients: list = field(default_factory=list)  # {"alpha", "point", "lhs", "rhs", "equal"}
    timings: dict = field(default_factory=dict)

    @property
    def overall(self) -> bool:
        return all(c["equal"] for c in self.coefficients)

    def to_json(self, timings: bool = False) -> dict:
        out = {"pair": self.pair, "params": self.params, "overall": self.overall, "coefficients": self.coefficients}
        if timings:
            out["timings"] = self.timings
        return out


# -- output --------------------------------------------------------------------------

def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def emit_series(s: QSeries, cfg: RunConfig, mode: str, extra: dict | None = None) -> str:
    if cfg.fmt == "json":
        obj = s.to_json(mode)
        if extra:
            obj.update(extra)
        return _dump(obj)
    rows = [("-".join(map(str, k)), s.coefficient_json(v)) for k, v in s.items()]
    if cfg.fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["alpha", "value"])
        for a, v in rows:
            w.writerow([a, v if isinstance(v, str) else _dump(v)])
        return buf.getvalue().rstrip("\n")
    return "\n".join(f"q^({a}): {s[tuple(map(int, a.split('-')))]!r}" for a, _ in rows)


def emit_records(recs: list[dict], cfg: RunConfig) -> str:
    if cfg.fmt == "json":
        return "\n".join(_dump(r) for r in recs)
    if cfg.fmt == "csv":
        buf = io.StringIO()
        keys = list(recs[0]) if recs else ["boxes", "alpha", "index"]
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(keys)
        for r in recs:
            w.writerow([_dump(r[k]) if isinstance(r[k], list) else r[k] for k in keys])
        return buf.getvalue().rstrip("\n")
    return "\n".join(" ".join(f"{k}={r[k]}" for k in r) for r in recs)


# -- commands ------------------------------------------------------------------------------

def cmd_enumerate(cfg: RunConfig) -> tuple[str, int]:
    return emit_records(partition_records(cfg.r, cfg.N, cfg.cache_dir), cfg), 0


def cmd_vertex(cfg: RunConfig) -> tuple[str, int]:
    pt = cfg.points()[0]
    recs = [vertex_record(pi, cfg.r, pt) for pi in partitions_up_to(cfg.N) if len(pi)]
    return emit_records(recs, cfg), 0


def cmd_zseries(cfg: RunConfig) -> tuple[str, int]:
    mode = cfg.mode or "point"
    if mode not in ("point", "limit", "numerical"):
        raise UsageError(f"zseries mode must be point, limit or numerical, not {mode!r}")
    pt = cfg.points()[0] if mode == "point" else None
    s = z_enumerated(cfg.r, cfg.N, mode, pt, jobs=cfg.jobs)
    extra = {"point": [str(x) for x in pt.s]} if pt else None
    return emit_series(s, cfg, mode, extra), 0


_DEFAULT_RING = {"Flim": "c", "Fnum": "numeric"}


def cmd_closedform(cfg: RunConfig) -> tuple[str, int]:
    if cfg.formula not in FORMULAS:
        raise UsageError(f"unknown formula {cfg.formula!r}; choose from {sorted(FORMULAS)}")
    S = FORMULAS[cfg.formula](cfg.r)
    mode = cfg.mode or _DEFAULT_RING.get(cfg.formula, "point")
    if mode not in ("point", "c", "numeric", "poly"):
        raise UsageError(f"closedform mode must be point, c, numeric or poly, not {mode!r}")
    pt = cfg.points()[0] if mode == "point" else None
    ring = pt if pt is not None else mode
    s = expand(S, ring, cfg.N) if cfg.raw else pexp_eval(S, ring, cfg.N)
    if cfg.formula == "Fnum" and not cfg.raw:
        s = s.flip_q0()
    if mode == "c":
        s = as_crational(s)
    extra = {"formula": cfg.formula, "pexp": not cfg.raw}
    if pt:
        extra["point"] = [str(x) for x in pt.s]
    return emit_series(s, cfg, mode, extra), 0


def cmd_limit(cfg: RunConfig) -> tuple[str, int]:
    if cfg.method == "enumeration":
        s = z_enumerated(cfg.r, cfg.N, "limit", jobs=cfg.jobs)
    elif cfg.method == "transfer":
        s = z_limit(cfg.r, cfg.N)
    elif cfg.method == "closed":
        s = as_crational(pexp_eval(build_F_limit(cfg.r), "c", cfg.N))
    else:
        raise UsageError(f"unknown limit method {cfg.method!r}")
    return emit_series(s, cfg, "limit", {"method": cfg.method}), 0


def cmd_transfer(cfg: RunConfig) -> tuple[str, int]:
    s = z_limit(cfg.r, cfg.N)
    checks = transfer_checks(sorted({1, cfg.r} if cfg.r <= 2 else {1, 2}), min(cfg.N, 4))
    code = 0 if all(checks) else 1
    if cfg.fmt != "json":
        lines = [emit_series(s, cfg, "limit")] + [f"check {c.name}: {'ok' if c.ok else 'FAILED'}" for c in checks]
        return "\n".join(lines), code
    return emit_series(s, cfg, "limit", {"checks": [c.to_json() for c in checks]}), code


def _compare_series(pair: str, cfg: RunConfig):
    """Yield ``(label, lhs, rhs)`` series pairs for the named comparison."""
    if pair == "main":
        closed = FORMULAS["main"](cfg.r)
        for pt in cfg.points():
            yield str(pt), z_enumerated(cfg.r, cfg.N, "point", pt, jobs=cfg.jobs), pexp_eval(closed, pt, cfg.N)
    elif pair == "limit":
        enum = z_enumerated(cfg.r, cfg.N, "limit", jobs=cfg.jobs)
        yield "transfer", enum, z_limit(cfg.r, cfg.N)
        yield "closed", enum, as_crational(pexp_eval(build_F_limit(cfg.r), "c", cfg.N))
    elif pair == "numerical":
        yield None, z_enumerated(cfg.r, cfg.N, "numerical", jobs=cfg.jobs), pexp_eval(build_F_num(cfg.r), "numeric", cfg.N).flip_q0()
    else:
        raise UsageError(f"unknown comparison {pair!r}; choose main, limit or numerical")


def cmd_compare(cfg: RunConfig) -> tuple[str, int]:
    params = {"r": cfg.r, "N": cfg.N, "pair": cfg.pair}
    if cfg.pair == "main":
        params.update({"seed": cfg.seed, "points": cfg.n_points} if cfg.point is None else {"point": list(cfg.point)})
    rep = CompareReport(cfg.pair, params)
    t0 = time.perf_counter()
    for label, lhs, rhs in _compare_series(cfg.pair, cfg):
        for k in sorted(set(lhs.keys()) | set(rhs.keys()), key=lambda k: (sum(k), k)):
            a, b = lhs[k], rhs[k]
            rep.coefficients.append({
                "alpha": list(k), "point": label,
                "lhs": lhs.coefficient_json(a), "rhs": rhs.coefficient_json(b), "equal": a == b,
            })
    rep.timings["total_s"] = round(time.perf_counter() - t0, 3)
    code = 0 if rep.overall else 1
    if cfg.fmt == "json":
        return _dump(rep.to_json(cfg.timings)), code
    bad = [c for c in rep.coefficients if not c["equal"]]
    lines = [f"{cfg.pair}: {'EQUAL' if rep.overall else 'MISMATCH'} ({len(rep.coefficients)} coefficients)"]
    lines += [f"  alpha={c['alpha']} point={c['point']} lhs={c['lhs']} rhs={c['rhs']}" for c in bad[:10]]
    return "\n".join(lines), code


def cmd_selfcheck(cfg: RunConfig) -> tuple[str, int]:
    results = [run_criterion(n) for n in CRITERIA]
    code = 0 if all(r.ok for r in results) else 1
    if cfg.fmt == "json":
        out = [{"name": r.name, "ok": r.ok, "detail": r.detail, "failures": r.failures[:5]} for r in results]
        return _dump({"ok": code == 0, "criteria": out}), code
    return "\n".join(r.line() for r in results), code


HANDLERS = {
    "enumerate": cmd_enumerate,
    "vertex": cmd_vertex,
    "zseries": cmd_zseries,
    "closedform": cmd_closedform,
    "limit": cmd_limit,
    "transfer": cmd_transfer,
    "compare": cmd_compare,
    "selfcheck": cmd_selfcheck,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--r", type=int, default=1, help="order of the cyclic group")
    common.add_argument("--max-boxes", dest="N", type=int, default=4, help="truncation order N")
    common.add_argument("--points", dest="n_points", type=int, default=1, help="number of random points")
    common.add_argument("--point", nargs=3, metavar=("S1", "S2", "S3"), help="explicit point (rationals p/q)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--mode", default=None)
    common.add_argument("--formula", default="main", help="F|Fr|Fcol|Fnum|Flim|main")
    common.add_argument("--pair", default="main", help="main|limit|numerical")
    common.add_argument("--method", default="enumeration", help="enumeration|transfer|closed")
    common.add_argument("--raw", action="store_true", help="closedform: expand the sum itself, not its PExp")
    common.add_argument("--format", dest="fmt", choices=("json", "csv", "text"), default="json")
    common.add_argument("--cache-dir", default=None)
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--timings", action="store_true", help="compare: include wall-clock timings")
    p = _Parser(prog="orbidt", description="Equivariant DT series of [C^3/mu_r] by localization and closed forms.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return p


def main(argv=None) -> int:
    try:
        ns = build_parser().parse_args(argv)
        cfg = RunConfig(**{k: v for k, v in vars(ns).items()})
        if cfg.point is not None:
            cfg.point = tuple(cfg.point)
        text, code = HANDLERS[cfg.command](cfg)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 2
    except OrbiDTError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    if text:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
