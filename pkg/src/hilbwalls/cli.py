"""Command-line interface.

Exit codes: 0 success, 1 domain error (error class name on stderr),
2 usage error. JSON output uses sorted keys and canonical rational strings,
so identical invocations give identical bytes.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from ._exact import frac_str, parse_fraction
from .cones import TABLE_RANGE, ConeStatus, chamber_table, effective_cone, mori_wall_rays, phi_contains
from .correspondence import check_bijection
from .errors import HilbWallsError
from .gaeta import gaeta_resolution, generic_destabilizer_candidates
from .quiver import as_dimension_vector, chern_to_dims, dims_to_chern, ideal_dims
from .svg import render_walls
from .walls import RankOneWitness, WitnessStatus, wall_list

MAX_RANK_ENV = "HSW_MAX_RANK"


class UsageError(Exception):
    pass


def dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def _triple_json(t) -> list[str]:
    return [frac_str(x) for x in t]


def witness_json(w) -> dict:
    if isinstance(w, RankOneWitness):
        return {"kind": "rank_one", "k": w.k, "lW": w.lW}
    out = {
        "kind": "higher_rank",
        "ch": None if w.ch is None else _triple_json(w.ch),
        "status": w.status.value,
    }
    if w.reason is not None:
        out["reason"] = w.reason.value
    if w.status is WitnessStatus.TRUNCATED:
        out["rank"] = w.rank
        out["reason"] = "rank cap reached"
    return out


def _witness_text(w) -> str:
    if isinstance(w, RankOneWitness):
        return f"I_W(-{w.k}) l(W)={w.lW}"
    if w.ch is None:
        return f"rank {w.rank} {w.status.value}"
    return "(" + ", ".join(frac_str(x) for x in w.ch) + f") {w.status.value}"


def _max_rank() -> int | None:
    raw = os.environ.get(MAX_RANK_ENV)
    if raw is None or raw == "":
        return None
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"{MAX_RANK_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise UsageError(f"{MAX_RANK_ENV} must be positive")
    return value


def walls_payload(n: int) -> list[dict]:
    result = wall_list(n, _max_rank())
    out = []
    for wall in result.walls:
        witnesses = list(wall.witnesses)
        if wall.collapsing:
            witnesses += result.truncated
        out.append(
            {
                "center": frac_str(wall.center),
                "radius_sq": frac_str(wall.radius_sq),
                "witnesses": [witness_json(w) for w in witnesses],
                "status": result.status.value,
            }
        )
    return out


def cmd_walls(args) -> str:
    result = wall_list(args.n, _max_rank())
    if args.fmt == "json":
        return dump_json(walls_payload(args.n))
    lines = [f"walls for n={args.n} ({result.status.value}), outermost first"]
    for wall in result.walls:
        tag = "  COLLAPSING" if wall.collapsing else ""
        wit = "; ".join(_witness_text(w) for w in wall.witnesses)
        lines.append(f"  x = {frac_str(wall.center):>7}  r^2 = {frac_str(wall.radius_sq):>7}  [{wit}]{tag}")
    if result.truncated:
        lines.append(f"  search truncated at rank {min(w.rank for w in result.truncated) - 1}")
    return "\n".join(lines) + "\n"


def cmd_mori(args) -> str:
    n = args.n
    mori = mori_wall_rays(n)
    rows = []
    if n in TABLE_RANGE:
        for row in chamber_table(n).rows:
            rows.append(
                {
                    "ray": str(row.edge_ray),
                    "divisor": row.divisor_name,
                    "dual_curves": [str(c) for c in row.dual_curves],
                    "locus_below": None if row.locus_below is None else str(row.locus_below),
                }
            )
    else:
        rows = [{"ray": str(r)} for r in mori.rays]
    if args.fmt == "json":
        return dump_json({"n": n, "complete": mori.complete, "rows": rows})
    lines = [f"Mori chambers for n={n}" + ("" if mori.complete else " (D_k walls only, incomplete)")]
    for row in rows:
        extra = ""
        if "divisor" in row:
            extra = f"  {row['divisor']}"
            if row["locus_below"] is not None:
                extra += f"  | base locus beyond: {row['locus_below']}"
        lines.append(f"  {row['ray']}{extra}")
    return "\n".join(lines) + "\n"


def cmd_cone(args) -> str:
    res = effective_cone(args.n)
    payload = {"status": res.status.value, "edge": str(res.lower_edge), "via": res.provenance}
    if res.status is ConeStatus.BOUNDS_ONLY:
        lo, hi = res.inclusion_bounds
        payload["alpha_bounds"] = [None if lo is None else frac_str(lo), None if hi is None else frac_str(hi)]
    if args.fmt == "json":
        return dump_json(payload)
    text = f"effective cone n={args.n}: [{res.lower_edge}, B]  {res.status.value} via {res.provenance}"
    if "alpha_bounds" in payload:
        lo, hi = payload["alpha_bounds"]
        text += f"\n  alpha between {lo or '?'} and {hi or '?'} (neighbouring n)"
    return text + "\n"


def cmd_correspond(args) -> str:
    rep = check_bijection(args.n)
    if args.fmt == "json":
        return dump_json(
            {
                "n": rep.n,
                "pairs": [{"ray": str(r), "center": frac_str(x)} for r, x in rep.pairs],
                "unmatched_mori": [str(r) for r in rep.unmatched_mori],
                "unmatched_bridgeland": [frac_str(x) for x in rep.unmatched_bridgeland],
                "bijection": rep.bijection,
            }
        )
    lines = [f"  {str(r):<12} <-> x = {frac_str(x)}" for r, x in rep.pairs]
    for r in rep.unmatched_mori:
        lines.append(f"  {r} unmatched")
    for x in rep.unmatched_bridgeland:
        lines.append(f"  x = {frac_str(x)} unmatched")
    lines.append("BIJECTION: OK" if rep.bijection else "BIJECTION: FAILED")
    return "\n".join(lines) + "\n"


def cmd_gaeta(args) -> str:
    res = gaeta_resolution(args.n)
    cands = generic_destabilizer_candidates(args.n)
    if args.fmt == "json":
        return dump_json(
            {
                "n": res.n,
                "d": res.d,
                "form": res.form.value,
                "a": res.a,
                "c": res.c,
                "c_prime": res.c_prime,
                "b": res.b,
                "resolution": str(res),
                "candidates": [
                    {"ch": _triple_json(c.ch.triple()), "center": frac_str(c.center), "origin": c.origin}
                    for c in cands
                ],
            }
        )
    lines = [f"form {res.form.value}: {res}"]
    for c in cands:
        lines.append(f"  {c.ch}  center {frac_str(c.center)}  ({c.origin})")
    return "\n".join(lines) + "\n"


def _parse_triple(text: str) -> tuple[Fraction, ...]:
    parts = text.split(",")
    if len(parts) != 3:
        raise UsageError(f"expected three comma-separated values, got {text!r}")
    try:
        return tuple(parse_fraction(p) for p in parts)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_quiver(args) -> str:
    if args.quiver_cmd == "dims":
        v = ideal_dims(args.n, args.d)
        if args.fmt == "json":
            return dump_json({"n": args.n, "d": args.d, "dims": list(v.as_tuple())})
        return f"I_Z[1] in A(-{args.d}): dims {v}\n"
    if (args.dims is None) == (args.chern is None):
        raise UsageError("give exactly one of --dims or --chern")
    if args.dims is not None:
        raw = _parse_triple(args.dims)
        if any(x.denominator != 1 or x < 0 for x in raw):
            raise UsageError("dimensions must be nonnegative integers")
        ch = dims_to_chern(args.k, [int(x) for x in raw])
        if args.fmt == "json":
            return dump_json({"k": args.k, "dims": _triple_json(raw), "chern": _triple_json(ch)})
        return f"ch = ({', '.join(frac_str(x) for x in ch)})\n"
    ch = _parse_triple(args.chern)
    dims = chern_to_dims(args.k, ch)
    try:
        as_dimension_vector(dims)
        member = True
    except HilbWallsError:
        member = False
    if args.fmt == "json":
        return dump_json({"k": args.k, "chern": _triple_json(ch), "dims": _triple_json(dims), "in_category": member})
    note = "" if member else "  (not a dimension vector of A(k))"
    return f"dims = ({', '.join(frac_str(x) for x in dims)}){note}\n"


def cmd_phi(args) -> str:
    alpha = args.alpha
    inside = phi_contains(alpha)
    if args.fmt == "json":
        return dump_json({"alpha": frac_str(alpha), "in_phi": inside})
    return ("true" if inside else "false") + "\n"


def cmd_plot(args) -> str:
    walls = wall_list(args.n, _max_rank()).walls
    svg = render_walls(args.n, walls, quiver_regions=args.quiver_regions)
    with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(svg)
    if args.fmt == "json":
        return dump_json({"out": args.out, "walls": len(walls)})
    return f"wrote {args.out} ({len(walls)} walls)\n"


def _n_arg(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 2:
        raise argparse.ArgumentTypeError(f"n must be at least 2, got {n}")
    return n


def _fraction_arg(text: str) -> Fraction:
    try:
        return parse_fraction(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _format_flags(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument("--json", dest="fmt", action="store_const", const="json", default=argparse.SUPPRESS)
    g.add_argument("--text", dest="fmt", action="store_const", const="text", default=argparse.SUPPRESS)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hilbwalls",
        description="Walls for Hilbert schemes of points in the plane: Mori chambers and Bridgeland walls.",
    )
    _format_flags(parser)
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        _format_flags(p)
        p.set_defaults(func=func)
        return p

    for name, func, help_text in [
        ("walls", cmd_walls, "Bridgeland walls for ideal sheaves of n points"),
        ("mori", cmd_mori, "stable base locus chambers"),
        ("cone", cmd_cone, "effective cone edge"),
        ("correspond", cmd_correspond, "match Mori rays with Bridgeland walls"),
        ("gaeta", cmd_gaeta, "generic resolution and destabilizer candidates"),
    ]:
        command(name, func, help_text).add_argument("n", type=_n_arg)

    q = command("quiver", cmd_quiver, "quiver numerics")
    qsub = q.add_subparsers(dest="quiver_cmd", required=True)
    qd = qsub.add_parser("dims", help="dimension vector of I_Z[1] in A(-d)")
    _format_flags(qd)
    qd.add_argument("n", type=int)
    qd.add_argument("d", type=int)
    qc = qsub.add_parser("convert", help="convert dimensions and Chern characters")
    _format_flags(qc)
    qc.add_argument("--k", type=int, required=True)
    qc.add_argument("--dims")
    qc.add_argument("--chern")

    ph = command("phi", cmd_phi, "membership of p/q in the golden-ratio set")
    ph.add_argument("alpha", type=_fraction_arg)

    pl = command("plot", cmd_plot, "SVG diagram of the walls")
    pl.add_argument("n", type=_n_arg)
    pl.add_argument("--out", required=True)
    pl.add_argument("--quiver-regions", action="store_true")
    return parser


_VALUE_OPTIONS = ("--k", "--dims", "--chern")


def _glue_values(argv: list[str]) -> list[str]:
    """Rewrite ``--chern -1,0,7`` as ``--chern=-1,0,7`` so that negative
    triples are not mistaken for flags."""
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_OPTIONS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_glue_values(argv))
    if not hasattr(args, "fmt"):
        args.fmt = "text"
    try:
        out = args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except HilbWallsError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
