"""Command-line front end.

Subcommands: gen-x, gen-es, analyze, verify, bounds, fat-cap, plot.
Exit codes: 0 success, 1 verification failure, 2 usage or parse errors.
All outputs are written atomically (temp file + rename) and are
byte-deterministic for identical arguments and seeds.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, replace
from fractions import Fraction

from . import espts
from .bounds import BoundsConfig, bound_table
from .constructions import build_convex_free, build_free_set, verify_construction
from .extremal import (find_structure, longest_cap, longest_cup,
                       max_collinear, max_convex_subset)
from .geom import PointSet, shear_distinct_x
from .relative import find_fat_cap, populate_support, transversal_check

_CONFIG_KEYS = ("c", "c1", "big_c", "epsilon", "seed", "sample_budget",
                "search_budget")


@dataclass(frozen=True)
class RunConfig:
    bounds: BoundsConfig = BoundsConfig()
    seed: int = 0
    sample_budget: int = 10_000
    search_budget: int = 200

    @staticmethod
    def from_file(path: str) -> "RunConfig":
        values: dict[str, str] = {}
        with open(path, "r", encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, start=1):
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                if "=" not in line:
                    raise ValueError(f"config line {lineno}: expected key=value")
                key, _, val = line.partition("=")
                key = key.strip()
                if key not in _CONFIG_KEYS:
                    raise ValueError(f"config line {lineno}: unknown key {key!r}")
                values[key] = val.strip()
        cfg = BoundsConfig(
            c=Fraction(values.get("c", "100")),
            c1=Fraction(values.get("c1", "1")),
            big_c=Fraction(values.get("big_c", "2")),
            epsilon=Fraction(values.get("epsilon", "1/10")),
        )
        return RunConfig(
            bounds=cfg,
            seed=int(values.get("seed", "0")),
            sample_budget=int(values.get("sample_budget", "10000")),
            search_budget=int(values.get("search_budget", "200")),
        )


def _jsonable(v):
    if isinstance(v, Fraction):
        return int(v) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(v, dict):
        return {k: _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


def _write_json(path: str, payload: dict) -> None:
    text = json.dumps(_jsonable(payload), indent=2, sort_keys=True) + "\n"
    espts.write_text_atomic(path, text)


def _points_json(ps) -> list:
    return [[str(p.x), str(p.y)] for p in ps]


def _parse_claim(text: str) -> tuple:
    kind, _, rest = text.partition(":")
    parts = [p for p in rest.split(",") if p]
    try:
        nums = [int(p) for p in parts]
    except ValueError:
        raise ValueError(f"malformed claim {text!r}") from None
    if kind == "x" and len(nums) == 3:
        return ("x", *nums)
    if kind == "es" and len(nums) == 2:
        return ("es", *nums)
    raise ValueError(f"malformed claim {text!r} (want x:L,M,N or es:L,N)")


# ---------------------------------------------------------------------------
# subcommand implementations


def _cmd_gen_x(args, cfg: RunConfig) -> int:
    ps = build_free_set(args.l, args.m, args.n)
    espts.save_file(ps, args.out)
    if args.cert:
        cert = verify_construction(ps, ("x", args.l, args.m, args.n))
        _write_json(args.cert, cert.as_dict())
        if not cert.passes:
            return 1
    return 0


def _cmd_gen_es(args, cfg: RunConfig) -> int:
    ps = build_convex_free(args.l, args.n)
    espts.save_file(ps, args.out)
    if args.cert:
        cert = verify_construction(ps, ("es", args.l, args.n))
        _write_json(args.cert, cert.as_dict())
        if not cert.passes:
            return 1
    return 0


def _cmd_analyze(args, cfg: RunConfig) -> int:
    ps = espts.load_file(args.infile)
    sheared = shear_distinct_x(ps)
    cup = longest_cup(sheared) if len(ps) >= 2 else None
    cap = longest_cap(sheared) if len(ps) >= 2 else None
    coll = max_collinear(ps) if len(ps) >= 2 else None
    convex = max_convex_subset(ps) if len(ps) >= 3 else None
    report = {
        "input_file": args.infile,
        "n_points": len(ps),
        "longest_cup": len(cup) if cup else len(ps),
        "longest_cap": len(cap) if cap else len(ps),
        "max_collinear": len(coll) if coll else len(ps),
        "max_convex_subset": len(convex) if convex else len(ps),
        "witnesses": {
            "longest_cup": _points_json(cup.members) if cup else [],
            "longest_cap": _points_json(cap.members) if cap else [],
            "max_collinear": _points_json(coll.members) if coll else [],
            "max_convex_subset": _points_json(convex.members) if convex else [],
        },
    }
    if args.l is not None and args.m is not None and args.n is not None:
        found = find_structure(sheared, args.l, args.m, args.n)
        report["structure"] = (
            None if found is None else
            {"kind": found.kind.value, "points": _points_json(found.members)})
    _write_json(args.report, report)
    return 0


def _cmd_verify(args, cfg: RunConfig) -> int:
    ps = espts.load_file(args.infile)
    claim = _parse_claim(args.claim)
    cert = verify_construction(ps, claim)
    payload = cert.as_dict()
    payload["input_file"] = args.infile
    if args.report:
        _write_json(args.report, payload)
    else:
        sys.stdout.write(json.dumps(_jsonable(payload), indent=2,
                                    sort_keys=True) + "\n")
    return 0 if cert.passes else 1


def _cmd_bounds(args, cfg: RunConfig) -> int:
    bcfg = cfg.bounds
    overrides = {}
    for name in ("c", "c1", "big_c", "epsilon"):
        val = getattr(args, name)
        if val is not None:
            overrides[name] = Fraction(val)
    if overrides:
        bcfg = replace(bcfg, **overrides)
    table = bound_table(args.l, args.maxmn, bcfg)
    _write_json(args.out, table)
    return 0


def _cmd_fat_cap(args, cfg: RunConfig) -> int:
    ps = espts.load_file(args.infile)
    seed = args.seed if args.seed is not None else cfg.seed
    budget = args.budget if args.budget is not None else cfg.search_budget
    sample_budget = (args.sample_budget if args.sample_budget is not None
                     else cfg.sample_budget)
    cap, min_occ = find_fat_cap(ps, args.k, seed=seed, budget=budget)
    occ = populate_support(ps, cap)
    rep = transversal_check(ps, cap, sample_budget=sample_budget, seed=seed)
    payload = {
        "k": args.k,
        "cap": _points_json(cap),
        "occupancies": list(occ.counts[:args.k - 1]),
        "min_occupancy": min_occ,
        "transversal": rep.as_dict(),
    }
    _write_json(args.report, payload)
    return 0


def _svg_document(ps: PointSet, highlight: list[int]) -> str:
    width, height, margin = 800.0, 600.0, 40.0
    xs = [float(p.x) for p in ps]
    ys = [float(p.y) for p in ps]
    xmin, xmax = min(xs), max(xs)
    ymin, ymax = min(ys), max(ys)
    spanx = (xmax - xmin) or 1.0
    spany = (ymax - ymin) or 1.0
    scale = min((width - 2 * margin) / spanx, (height - 2 * margin) / spany)

    def tx(x):
        return margin + (x - xmin) * scale

    def ty(y):
        return height - margin - (y - ymin) * scale

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" '
        f'height="{height:.0f}" viewBox="0 0 {width:.0f} {height:.0f}">',
        f'<rect width="{width:.0f}" height="{height:.0f}" fill="white"/>',
    ]
    if highlight:
        pts = " ".join(f"{tx(xs[i]):.6f},{ty(ys[i]):.6f}" for i in highlight)
        lines.append(f'<polyline points="{pts}" fill="none" stroke="#c62828" '
                     'stroke-width="2"/>')
    hi = set(highlight)
    for i in range(len(ps)):
        r = 5.0 if i in hi else 3.0
        fill = "#c62828" if i in hi else "#222222"
        lines.append(f'<circle cx="{tx(xs[i]):.6f}" cy="{ty(ys[i]):.6f}" '
                     f'r="{r:.1f}" fill="{fill}"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _cmd_plot(args, cfg: RunConfig) -> int:
    ps = espts.load_file(args.infile)
    highlight: list[int] = []
    if args.highlight:
        try:
            highlight = [int(t) for t in args.highlight.split(",") if t]
        except ValueError:
            raise ValueError(f"malformed highlight list {args.highlight!r}")
        for i in highlight:
            if not (0 <= i < len(ps)):
                raise ValueError(f"highlight index {i} out of range")
    espts.write_text_atomic(args.svg_out, _svg_document(ps, highlight))
    return 0


# ---------------------------------------------------------------------------
# argument parsing


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="cupcap",
        description="generate, analyze, and verify extremal planar point sets")
    top.add_argument("--config", help="key=value config file")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-x", help="generate a cup/cap/collinear-free set")
    p.add_argument("l", type=int)
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--out", required=True)
    p.add_argument("--cert", help="also write a verification certificate")
    p.set_defaults(func=_cmd_gen_x)

    p = sub.add_parser("gen-es",
                       help="generate a convex-position-free set")
    p.add_argument("l", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--out", required=True)
    p.add_argument("--cert", help="also write a verification certificate")
    p.set_defaults(func=_cmd_gen_es)

    p = sub.add_parser("analyze", help="run all analyzers on a point set")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--report", required=True)
    p.add_argument("--l", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("verify", help="check a claim against a point set")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--claim", required=True,
                   help="x:L,M,N or es:L,N")
    p.add_argument("--report")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bounds", help="emit the bound table as JSON")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--maxmn", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--c")
    p.add_argument("--c1")
    p.add_argument("--big-c", dest="big_c")
    p.add_argument("--epsilon")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("fat-cap", help="search for a well-populated cup/cap")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--seed", type=int)
    p.add_argument("--budget", type=int)
    p.add_argument("--sample-budget", dest="sample_budget", type=int)
    p.add_argument("--report", required=True)
    p.set_defaults(func=_cmd_fat_cap)

    p = sub.add_parser("plot", help="emit a standalone SVG of a point set")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--svg", dest="svg_out", required=True)
    p.add_argument("--highlight",
                   help="comma-separated point indices to mark")
    p.set_defaults(func=_cmd_plot)
    return top


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig.from_file(args.config) if args.config else RunConfig()
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        return args.func(args, cfg)
    except espts.EsptsParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
