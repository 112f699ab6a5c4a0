"""Command line entry point: ``rank2spectra <group> <action> [options]``.

Every command prints one document on stdout.  JSON documents carry
``"schema": 1``; rationals are written as ``"p/q"`` strings (bare integers
when the denominator is 1).  Exit codes: 0 success, 1 domain error, 2
malformed input.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Sequence

from . import gm_family, hn_polygon, riemann_roch, spectrum, threefold
from .errors import ArtifactError, InvalidChernData, InvalidSpectrum
from .rational import format_rational, parse_rational

SCHEMA = 1

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_MALFORMED = 2

CHERN_FLAGS = {
    "c1_cubed": "--c1-cubed",
    "c1_c2": "--c1-c2",
    "c1sq_lambda": "--c1sq-lambda",
    "c2_lambda": "--c2-lambda",
    "c1_lambdasq": "--c1-lambdasq",
    "c1_c2Z": "--c1-c2z",
}


class MalformedInput(Exception):
    pass


@dataclass
class Output:
    payload: dict[str, Any]
    columns: list[str] | None = None
    rows: list[dict[str, Any]] = field(default_factory=list)


def _doc(**kwargs: Any) -> dict[str, Any]:
    return {"schema": SCHEMA, **kwargs}


def _q(x: Fraction | int) -> str:
    return format_rational(x)


def _load_json(path: str) -> Any:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
        return json.loads(text)
    except OSError as exc:
        raise MalformedInput(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"{path} is not valid JSON: {exc}") from None


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _pair(text: str) -> tuple[int, int]:
    values = _int_list(text)
    if len(values) != 2:
        raise argparse.ArgumentTypeError(f"expected RANK,DEGREE, got {text!r}")
    return values[0], values[1]


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


# threefold and Chern input ---------------------------------------------------


def _threefold_from(args: argparse.Namespace, request: dict[str, Any]) -> threefold.ThreefoldInvariants:
    source = request.get("threefold")
    if args.threefold is not None:
        source = args.threefold
    inline = [args.lambda3, args.lambda_c2z, args.dim_l]
    if any(v is not None for v in inline):
        if None in inline:
            raise MalformedInput("--lambda3, --lambda-c2z and --dim-l must be given together")
        source = {"lambda3": args.lambda3, "lambda_c2Z": args.lambda_c2z, "dim_L": args.dim_l}
    if source is None:
        source = "p3-o2"
    if isinstance(source, str):
        return threefold.catalog_lookup(source)
    if isinstance(source, dict):
        return threefold.validate_threefold(threefold.ThreefoldInvariants.from_dict(source))
    raise MalformedInput("threefold must be a catalog name or an invariants object")


def _chern_from(args: argparse.Namespace, request: dict[str, Any]) -> threefold.BundleChern:
    data = dict(request.get("chern") or {})
    for name in CHERN_FLAGS:
        value = getattr(args, name)
        if value is not None:
            data[name] = value
    return threefold.BundleChern.from_dict(data)


def _request(args: argparse.Namespace) -> dict[str, Any]:
    if getattr(args, "request", None) is None:
        return {}
    data = _load_json(args.request)
    if not isinstance(data, dict):
        raise MalformedInput("request file must contain a JSON object")
    if data.get("schema", SCHEMA) != SCHEMA:
        raise MalformedInput(f"unsupported request schema {data.get('schema')!r}")
    return data


def _add_chern_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--request", metavar="FILE", help="JSON request with 'threefold' and 'chern'")
    p.add_argument("--threefold", metavar="NAME", help="catalog entry (default p3-o2)")
    p.add_argument("--lambda3", type=int)
    p.add_argument("--lambda-c2z", type=int)
    p.add_argument("--dim-l", type=int)
    for name, flag in CHERN_FLAGS.items():
        p.add_argument(flag, dest=name, type=int)


# command handlers -------------------------------------------------------------


def cmd_catalog(args: argparse.Namespace) -> Output:
    if args.action == "list":
        entries = []
        for name, entry in threefold.CATALOG.items():
            entries.append({**entry.invariants.to_dict(), "description": entry.description})
        columns = ["name", "lambda3", "lambda_c2Z", "dim_L", "description"]
        return Output(_doc(threefolds=entries), columns, entries)
    if not args.name:
        raise MalformedInput("catalog show needs NAME")
    inv = threefold.catalog_lookup(args.name)
    chi_l = riemann_roch.euler_char_line_bundle(inv.lambda3, inv.lambda3, inv.lambda3, 12, inv)
    payload = _doc(
        **inv.to_dict(),
        description=threefold.CATALOG[args.name].description,
        chi_L=_q(chi_l),
        dW_elliptic=_q(gm_family.d_elliptic(inv.dim_L)),
    )
    return Output(payload)


def cmd_chern(args: argparse.Namespace) -> Output:
    request = _request(args)
    inv = _threefold_from(args, request)
    chern = _chern_from(args, request)
    if args.action == "slope":
        return Output(_doc(mu=_q(threefold.slope(chern, inv)), mu_L=_q(threefold.mu_L(inv))))
    if args.action == "twist":
        m = args.m if args.m is not None else request.get("m")
        if not isinstance(m, int) or isinstance(m, bool):
            raise MalformedInput("chern twist needs an integer --m")
        out = threefold.twist(chern, inv, m)
        return Output(_doc(m=m, chern=out.to_dict(), mu=_q(out.mu)))
    res = threefold.normalize(chern, inv)
    return Output(
        _doc(
            twist_exponent=res.twist_exponent,
            chern=res.normalized.to_dict(),
            mu=_q(res.mu_normalized),
        )
    )


def cmd_rr(args: argparse.Namespace) -> Output:
    request = _request(args)
    inv = _threefold_from(args, request)
    chern = _chern_from(args, request)
    strict = not args.diagnostic
    if args.normalize:
        chern = threefold.normalize(chern, inv).normalized
    if args.action == "chi":
        return Output(
            _doc(
                chi_E=_q(riemann_roch.euler_char_threefold(chern, inv)),
                chi_E_S=_q(riemann_roch.euler_char_surface(chern, inv)),
            )
        )
    if args.action == "rank":
        r = riemann_roch.spectrum_rank(chern, inv, strict=strict)
        return Output(_doc(r=r, d=riemann_roch.spectrum_degree(chern, inv, strict=strict)))
    d = riemann_roch.spectrum_degree(chern, inv, strict=strict)
    return Output(
        _doc(
            d=d,
            r_formula=_q(riemann_roch.rank_formula(chern, inv)),
            d_closed=_q(riemann_roch.degree_closed_formula(chern, inv)),
            d_route=_q(riemann_roch.degree_route_formula(chern, inv)),
        )
    )


def _spectrum_rows(items: Sequence[spectrum.Spectrum]) -> list[dict[str, Any]]:
    return [
        {"index": i, "spectrum": str(s), "a": s.a, "b": s.b, "r": s.r, "d": s.d}
        for i, s in enumerate(items)
    ]


def cmd_spectrum(args: argparse.Namespace) -> Output:
    if args.action == "enumerate":
        c = spectrum.SpectrumConstraints(
            connected=args.connected, symmetric=args.symmetric, bounds=args.bounds
        )
        window = tuple(args.window) if args.window else None
        found = spectrum.enumerate_spectra(args.r, args.d, c, window)
        payload = _doc(
            r=args.r,
            d=args.d,
            constraints={"connected": c.connected, "symmetric": c.symmetric, "bounds": c.bounds},
            spectra=[s.to_dict() for s in found],
        )
        return Output(payload, ["index", "spectrum", "a", "b", "r", "d"], _spectrum_rows(found))
    if args.action == "bounds":
        a_min, b_max = spectrum.bounds(args.r, args.d)
        return Output(_doc(r=args.r, d=args.d, a_min=_q(a_min), b_max=_q(b_max)))
    t1, t2 = spectrum.vanishing_thresholds(args.r, args.d)
    return Output(_doc(r=args.r, d=args.d, h1_vanishes_from=t1, h2_vanishes_from=t2))


def _spectra_from_document(data: Any) -> list[spectrum.Spectrum]:
    if isinstance(data, dict) and "spectra" in data:
        data = data["spectra"]
    if isinstance(data, dict):
        return [spectrum.Spectrum.from_dict(data)]
    if isinstance(data, list):
        return [spectrum.Spectrum.from_dict(item) for item in data]
    raise MalformedInput("spectrum file must hold a spectrum, a list of spectra or enumerate output")


def cmd_cohomology(args: argparse.Namespace) -> Output:
    items = _spectra_from_document(_load_json(args.spectrum))
    if args.index is not None:
        if not 0 <= args.index < len(items):
            raise MalformedInput(f"--index {args.index} out of range for {len(items)} spectra")
        items = [items[args.index]]
    if args.lmin > args.lmax:
        raise MalformedInput("--lmin must not exceed --lmax")
    tables = []
    rows: list[dict[str, Any]] = []
    for s in items:
        table = spectrum.cohomology_table(s, args.lmin, args.lmax)
        rows = [{"l": row.l, "h1": row.h1, "h2": row.h2} for row in table]
        tables.append({"spectrum": s.to_dict(), "rows": rows})
    if args.format != "json" and len(items) != 1:
        raise MalformedInput("csv/table output needs exactly one spectrum; pass --index")
    return Output(_doc(tables=tables), ["l", "h1", "h2"], rows)


def cmd_gm(args: argparse.Namespace) -> Output:
    if args.action == "d-invariant":
        if args.kind == "rational":
            if args.normal_degrees is None:
                raise MalformedInput("--normal-degrees is required for kind rational")
            fam = gm_family.CurveFamily("rational", normal_degrees=tuple(args.normal_degrees))
        elif args.kind == "elliptic_pencil":
            if args.dim_l is None:
                raise MalformedInput("--dim-l is required for kind elliptic_pencil")
            fam = gm_family.CurveFamily("elliptic_pencil", dim_L=args.dim_l)
        else:
            if args.dw is None:
                raise MalformedInput("--dw is required for kind custom")
            fam = gm_family.CurveFamily("custom", custom_dW=args.dw)
        payload = _doc(dW=_q(fam.dW))
        if not fam.validated:
            payload["validated"] = False
        return Output(payload)
    if args.action == "splittings":
        types = gm_family.splitting_types_rational(args.rank, args.degree)
        rows = [{"degrees": " ".join(map(str, t.degrees))} for t in types]
        return Output(
            _doc(rank=args.rank, degree=args.degree, splitting_types=[list(t.degrees) for t in types]),
            ["degrees"],
            rows,
        )
    if args.action == "kernel-slope":
        k = gm_family.kernel_slope(args.n)
        return Output(_doc(rank=k.rank, degree=k.degree, slope=_q(k.slope)))
    res = gm_family.restriction_types_elliptic(args.degree)
    return Output(
        _doc(
            degree=res.total_degree,
            split_types=[list(t.degrees) for t in res.split_types],
            semistable_alternative=res.semistable_alternative,
        )
    )


def _points_arg(text: str) -> list[tuple[int, int]]:
    data = _load_json(text[1:]) if text.startswith("@") else json.loads(text)
    if not isinstance(data, list) or not all(
        isinstance(p, list) and len(p) == 2 and all(isinstance(x, int) for x in p) for p in data
    ):
        raise MalformedInput("points must be a JSON array of [rank, degree] integer pairs")
    return [tuple(p) for p in data]  # type: ignore[misc]


def cmd_hnp(args: argparse.Namespace) -> Output:
    try:
        if args.action == "compare":
            p_pts, q_pts = _points_arg(args.p), _points_arg(args.q)
        else:
            points = _points_arg(args.points)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"points are not valid JSON: {exc}") from None
    if args.action == "hull":
        poly = hn_polygon.hnp_from_points(points, args.total)
        return Output(
            _doc(vertices=poly.to_list(), slopes=[_q(s) for s in hn_polygon.slopes(poly)]),
            ["rank", "degree"],
            [{"rank": v.rank, "degree": v.degree} for v in poly.vertices],
        )
    if args.action == "semistable":
        return Output(_doc(semistable=hn_polygon.is_semistable_profile(points, args.total)))
    p = hn_polygon.HNPolygon(tuple(p_pts))
    q = hn_polygon.HNPolygon(tuple(q_pts))
    return Output(_doc(p_geq_q=hn_polygon.polygon_geq(p, q), q_geq_p=hn_polygon.polygon_geq(q, p)))


# parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rank2spectra",
        description="Spectra of rank-2 bundles, HN polygons and Grauert-Mulich invariants.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "table"], default="json")
    groups = parser.add_subparsers(dest="group", required=True)

    p = groups.add_parser("catalog", parents=[common], help="built-in threefolds")
    p.add_argument("action", choices=["list", "show"])
    p.add_argument("name", nargs="?")
    p.set_defaults(handler=cmd_catalog)

    p = groups.add_parser("chern", parents=[common], help="slope, twist, normalization")
    p.add_argument("action", choices=["slope", "twist", "normalize"])
    _add_chern_options(p)
    p.add_argument("--m", type=int, help="twist exponent")
    p.set_defaults(handler=cmd_chern)

    p = groups.add_parser("rr", parents=[common], help="Riemann-Roch, spectrum rank and degree")
    p.add_argument("action", choices=["chi", "rank", "degree"])
    _add_chern_options(p)
    p.add_argument("--normalize", action="store_true", help="normalize the bundle first")
    p.add_argument("--diagnostic", action="store_true", help="skip the normalization-window check")
    p.set_defaults(handler=cmd_rr)

    p = groups.add_parser("spectrum", parents=[common], help="enumerate and bound spectra")
    p.add_argument("action", choices=["enumerate", "bounds", "thresholds"])
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--symmetric", action="store_true")
    p.add_argument("--bounds", action="store_true")
    p.add_argument("--window", type=_pair, metavar="LO,HI", help="support window")
    p.set_defaults(handler=cmd_spectrum)

    p = groups.add_parser("cohomology", parents=[common], help="h1/h2 tables from a spectrum")
    p.add_argument("action", choices=["table"])
    p.add_argument("--spectrum", required=True, metavar="FILE", help="JSON file, '-' for stdin")
    p.add_argument("--lmin", type=int, required=True)
    p.add_argument("--lmax", type=int, required=True)
    p.add_argument("--index", type=int, help="pick one spectrum from a list")
    p.set_defaults(handler=cmd_cohomology)

    p = groups.add_parser("gm", parents=[common], help="d(W) and splitting types")
    p.add_argument("action", choices=["d-invariant", "splittings", "elliptic-restriction", "kernel-slope"])
    p.add_argument("--kind", choices=["rational", "elliptic_pencil", "custom"], default="rational")
    p.add_argument("--normal-degrees", type=_int_list)
    p.add_argument("--dim-l", type=int)
    p.add_argument("--dw", type=_rational_arg)
    p.add_argument("--rank", type=int, default=2)
    p.add_argument("--degree", type=int, default=0)
    p.add_argument("--n", type=int, default=2)
    p.set_defaults(handler=cmd_gm)

    p = groups.add_parser("hnp", parents=[common], help="Harder-Narasimhan polygons")
    p.add_argument("action", choices=["hull", "compare", "semistable"])
    p.add_argument("--points", default="[]", help="JSON [[rank, degree], ...] or @FILE")
    p.add_argument("--total", type=_pair, metavar="RANK,DEGREE")
    p.add_argument("--p", help="vertex list of the first polygon (compare)")
    p.add_argument("--q", help="vertex list of the second polygon (compare)")
    p.set_defaults(handler=cmd_hnp)
    return parser


# rendering ----------------------------------------------------------------------


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, dict)):
        return json.dumps(value)
    return str(value)


def _flat(out: Output) -> tuple[list[str], list[dict[str, Any]]]:
    if out.columns is not None:
        return out.columns, out.rows
    rows = [{"key": k, "value": v} for k, v in out.payload.items() if k != "schema"]
    return ["key", "value"], rows


def render(out: Output, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(out.payload, indent=2) + "\n"
    columns, rows = _flat(out)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_cell(row.get(c)) for c in columns])
        return buf.getvalue()
    cells = [[_cell(row.get(c)) for c in columns] for row in rows]
    widths = [max([len(c)] + [len(r[i]) for r in cells]) for i, c in enumerate(columns)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip()]
    lines += ["  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip() for r in cells]
    return "\n".join(lines) + "\n"


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.group == "hnp" and args.action in ("hull", "semistable") and args.total is None:
        parser.error("--total is required for hnp hull/semistable")
    if args.group == "hnp" and args.action == "compare" and (args.p is None or args.q is None):
        parser.error("--p and --q are required for hnp compare")
    handler: Callable[[argparse.Namespace], Output] = args.handler
    try:
        out = handler(args)
    except (MalformedInput, InvalidChernData, InvalidSpectrum) as exc:
        code = type(exc).__name__
        print(f"error: {code}: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except ArtifactError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (KeyError, TypeError, ValueError) as exc:
        print(f"error: MalformedInput: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    sys.stdout.write(render(out, args.format))
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
