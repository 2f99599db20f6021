"""Command-line front end: subcommands, rendering, and verification reports.

Exit codes: 0 success / all checks passed, 1 a verification check failed
(the report carries a replayable counterexample), 2 usage error (unknown
subcommand, malformed input, size cap exceeded).
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
import time
from dataclasses import dataclass

from .coeffs import ZZ, CoefficientRing, parse_ring
from .duality import (
    POLYTABLOID_MAP,
    WEDGE_MAP,
    EntryMatrix,
    entry_action,
    equivariance_counterexample,
    pairing_image,
)
from .places import boxset_from_json, boxset_to_json
from .powers import TableauElement
from .schur import SizeCapExceeded, garnir, polytabloid, verify_schur_ses
from .tableaux import (
    ALL,
    COLUMN_STANDARD,
    ROW_SEMISTANDARD,
    SEMISTANDARD,
    Tableau,
    check_partition,
    count_tableaux,
    enumerate_tableaux,
    sort_rows,
)
from .powers import rsym
from .weyl import (
    STAR_STAR_VARIANT,
    STAR_VARIANT,
    copolytabloid,
    dual_garnir,
    dual_garnir_double_coset,
    dual_snake,
    straighten,
    variant_relation,
    verify_weyl_kernel,
)
from .powers import SymLowerElement
from .coeffs import LinComb


class CliError(Exception):
    pass


@dataclass
class RunConfig:
    """Size caps and run options; WEYLKIT_MAX_SIZE raises the size caps."""

    element_size_cap: int = 8
    verify_size_cap: int = 5
    verify_entry_cap: int = 3
    max_entries: int = 9
    jobs: int = 1

    @classmethod
    def from_env(cls) -> "RunConfig":
        cfg = cls()
        override = os.environ.get("WEYLKIT_MAX_SIZE")
        if override:
            try:
                cap = int(override)
            except ValueError as exc:
                raise CliError(f"WEYLKIT_MAX_SIZE must be an integer, got {override!r}") from exc
            cfg.element_size_cap = cap
            cfg.verify_size_cap = cap
        return cfg


# ---------------------------------------------------------------------------
# argument parsing helpers


def parse_shape(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(p) for p in text.split(","))
        return check_partition(parts)
    except ValueError as exc:
        raise CliError(f"malformed shape {text!r}: {exc}") from exc


def parse_tableau_arg(text: str) -> Tableau:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(f"malformed tableau JSON: {exc}") from exc
    try:
        return Tableau.from_json(obj)
    except (ValueError, TypeError, KeyError) as exc:
        raise CliError(f"malformed tableau JSON: {exc}") from exc


_BOX_RE = re.compile(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)")


def parse_boxes(text: str) -> frozenset:
    found = _BOX_RE.findall(text)
    if not found or _BOX_RE.sub("", text).strip(", \t") != "":
        raise CliError(f"malformed box set {text!r}: expected e.g. '(1,1),(1,2)'")
    return frozenset((int(i), int(j)) for i, j in found)


def parse_ring_arg(text: str) -> CoefficientRing:
    try:
        return parse_ring(text)
    except ValueError as exc:
        raise CliError(str(exc)) from exc


def parse_matrix_arg(text: str, ring: CoefficientRing) -> EntryMatrix:
    try:
        rows = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(f"malformed matrix JSON: {exc}") from exc
    try:
        return EntryMatrix(ring, rows)
    except (ValueError, TypeError) as exc:
        raise CliError(f"bad entry matrix: {exc}") from exc


def _check_element_caps(shape, entries, cfg: RunConfig):
    if sum(shape) > cfg.element_size_cap:
        raise CliError(f"size cap exceeded: |shape| = {sum(shape)} > {cfg.element_size_cap}")
    if entries is not None and entries > cfg.max_entries:
        raise CliError(f"size cap exceeded: entries = {entries} > {cfg.max_entries}")


def _check_verify_caps(shape, entries, cfg: RunConfig):
    if sum(shape) > cfg.verify_size_cap:
        raise CliError(f"size cap exceeded: |shape| = {sum(shape)} > {cfg.verify_size_cap}")
    if entries > cfg.verify_entry_cap:
        raise CliError(f"size cap exceeded: entries = {entries} > {cfg.verify_entry_cap}")


# ---------------------------------------------------------------------------
# rendering


def _tableau_text(t: Tableau) -> str:
    return "[" + ",".join("[" + ",".join(str(v) for v in row) + "]" for row in t.rows) + "]"


def _tableau_latex(t: Tableau) -> str:
    body = ",".join("".join(f"{{{v}}}" for v in row) for row in t.rows)
    return f"\\ytableaushort{{{body}}}"


_TEXT_WRAP = {
    "tensor": ("", ""),
    "sym_upper": ("⌊", "⌋"),
    "sym_lower": ("rsym(", ")"),
    "wedge": ("|", "|"),
}

_LATEX_WRAP = {
    "tensor": ("\\ytab{", "}"),
    "sym_upper": ("\\yrowtab{", "}"),
    "sym_lower": ("\\yrsym{", "}"),
    "wedge": ("\\ycoltab{", "}"),
}


def render_element(x: TableauElement, fmt: str) -> str:
    """Serialize an element: bit-stable JSON, or a human/LaTeX sum."""
    if fmt == "json":
        return json.dumps(x.to_json())
    if fmt not in ("text", "latex"):
        raise CliError(f"unknown format {fmt!r}")
    if x.is_zero:
        return "0"
    bits = []
    for t, c in x.items():
        c_str = x.ring.format_coeff(c)
        if fmt == "text":
            left, right = _TEXT_WRAP[x.space]
            body = f"{left}{_tableau_text(t)}{right}"
            prefix = "" if c_str == "1" else f"{c_str}*"
            bits.append(f"{prefix}{body}")
        else:
            left, right = _LATEX_WRAP[x.space]
            inner = _tableau_latex(t)
            body = f"{left}{inner}{right}"
            prefix = "" if c_str == "1" else f"{c_str}\\,"
            bits.append(f"{prefix}{body}")
    return " + ".join(bits)


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def _emit_element(x: TableauElement, args) -> int:
    print(render_element(x, args.format))
    return 0


def _emit_report(report: dict) -> int:
    _emit(report)
    return 0 if report["ok"] else 1


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_dims(args, cfg):
    shape = parse_shape(args.shape)
    _check_element_caps(shape, args.entries, cfg)
    _emit(
        {
            "ssyt": count_tableaux(shape, args.entries, SEMISTANDARD),
            "rssyt": count_tableaux(shape, args.entries, ROW_SEMISTANDARD),
            "csyt": count_tableaux(shape, args.entries, COLUMN_STANDARD),
        }
    )
    return 0


_CLASS_NAMES = {
    "all": ALL,
    "row": ROW_SEMISTANDARD,
    "column": COLUMN_STANDARD,
    "semistandard": SEMISTANDARD,
}


def _cmd_basis(args, cfg):
    shape = parse_shape(args.shape)
    _check_element_caps(shape, args.entries, cfg)
    kind = _CLASS_NAMES[args.cls]
    if kind == ALL and args.entries ** sum(shape) > 10**6:
        raise CliError("size cap exceeded: refusing to list more than 10^6 tableaux")
    tabs = enumerate_tableaux(shape, args.entries, kind)
    _emit(
        {
            "shape": list(shape),
            "entries": args.entries,
            "class": args.cls,
            "count": len(tabs),
            "tableaux": [t.to_json() for t in tabs],
        }
    )
    return 0


def _element_op_common(args, cfg) -> tuple[Tableau, CoefficientRing]:
    t = parse_tableau_arg(args.tableau)
    if getattr(args, "shape", None) and parse_shape(args.shape) != t.shape:
        raise CliError("--shape disagrees with the tableau")
    _check_element_caps(t.shape, getattr(args, "entries", None) or t.max_entry, cfg)
    entries = getattr(args, "entries", None)
    if entries is not None and t.max_entry > entries:
        raise CliError(f"tableau entries exceed --entries {entries}")
    return t, parse_ring_arg(args.ring)


def _cmd_rsym(args, cfg):
    t, ring = _element_op_common(args, cfg)
    return _emit_element(rsym(t, ring), args)


def _cmd_polytabloid(args, cfg):
    t, ring = _element_op_common(args, cfg)
    return _emit_element(polytabloid(t, ring), args)


def _cmd_copolytabloid(args, cfg):
    t, ring = _element_op_common(args, cfg)
    return _emit_element(copolytabloid(t, ring), args)


def _cmd_garnir(args, cfg):
    t, ring = _element_op_common(args, cfg)
    rel = garnir(t, parse_boxes(args.boxA), parse_boxes(args.boxB), ring)
    if args.format == "json":
        _emit(
            {
                "kind": "garnir",
                "tableau": t.to_json(),
                "boxA": boxset_to_json(rel.box_a),
                "boxB": boxset_to_json(rel.box_b),
                "element": rel.element.to_json(),
            }
        )
        return 0
    return _emit_element(rel.element, args)


def _cmd_dual_garnir(args, cfg):
    t, ring = _element_op_common(args, cfg)
    box_a, box_b = parse_boxes(args.boxA), parse_boxes(args.boxB)
    if args.rows:
        try:
            ra, rb = (int(v) for v in args.rows.split(":"))
        except ValueError as exc:
            raise CliError(f"malformed --rows {args.rows!r}: expected i:i'") from exc
        if {b[0] for b in box_a} != {ra} or {b[0] for b in box_b} != {rb}:
            raise CliError("--rows disagrees with the box sets")
    builders = {
        "plain": dual_garnir,
        "dc": dual_garnir_double_coset,
        "star": lambda *a: variant_relation(*a[:3], STAR_VARIANT, a[3]),
        "star-star": lambda *a: variant_relation(*a[:3], STAR_STAR_VARIANT, a[3]),
    }
    rel = builders[args.variant](t, box_a, box_b, ring)
    if args.format == "json":
        _emit({**rel.label_json(), "element": rel.element.to_json()})
        return 0
    return _emit_element(rel.element, args)


def _cmd_snake(args, cfg):
    t, ring = _element_op_common(args, cfg)
    try:
        j, jp = (int(v) for v in args.cols.split(":"))
    except ValueError as exc:
        raise CliError(f"malformed --cols {args.cols!r}: expected j:j'") from exc
    rel = dual_snake(t, args.row, j, jp, ring)
    if args.format == "json":
        _emit({**rel.label_json(), "element": rel.element.to_json()})
        return 0
    return _emit_element(rel.element, args)


def _cmd_straighten(args, cfg):
    t, ring = _element_op_common(args, cfg)
    source = SymLowerElement(LinComb(ring, {sort_rows(t): 1}))
    cert = straighten(source)
    _emit(
        {
            "input": cert.source.to_json(),
            "coords": cert.coords.to_json(),
            "gamma": [
                {
                    "tableau": label.to_json(),
                    "row": i,
                    "cols": [j, jp],
                    "coeff": ring.format_coeff(coeff),
                }
                for label, i, j, jp, coeff in cert.gamma
            ],
            "verified": cert.verify(),
        }
    )
    return 0


def _cmd_schur_verify(args, cfg):
    shape = parse_shape(args.shape)
    _check_verify_caps(shape, args.entries, cfg)
    report = verify_schur_ses(shape, args.entries, parse_ring_arg(args.ring), None, None)
    return _emit_report(report)


def _cmd_weyl_verify(args, cfg):
    shape = parse_shape(args.shape)
    _check_verify_caps(shape, args.entries, cfg)
    report = verify_weyl_kernel(shape, args.entries, parse_ring_arg(args.ring), None, None)
    return _emit_report(report)


def _cmd_duality_check(args, cfg):
    shape = parse_shape(args.shape)
    _check_verify_caps(shape, args.entries, cfg)
    started = time.perf_counter()
    counterexample = None
    checked = 0
    for t in enumerate_tableaux(shape, args.entries, ROW_SEMISTANDARD):
        checked += 1
        image = pairing_image(t, args.entries)
        expected = copolytabloid(t)
        if image != expected:
            counterexample = {
                "tableau": t.to_json(),
                "pairing_image": image.to_json(),
                "copolytabloid": expected.to_json(),
            }
            break
    report = {
        "command": "duality-check",
        "instance": {"shape": list(shape), "entries": args.entries, "ring": "z"},
        "dims": {"rssyt_checked": checked},
        "checks": [
            {
                "name": "pairing_image_matches_copolytabloid",
                "ok": counterexample is None,
                "counterexample": counterexample,
            }
        ],
        "ok": counterexample is None,
        "wall_time_s": round(time.perf_counter() - started, 6),
    }
    return _emit_report(report)


def _cmd_equivariance(args, cfg):
    shape = parse_shape(args.shape)
    _check_verify_caps(shape, args.entries, cfg)
    ring = parse_ring_arg(args.ring)
    g = parse_matrix_arg(args.matrix, ring)
    started = time.perf_counter()
    which = WEDGE_MAP if args.map == "lambda" else POLYTABLOID_MAP
    try:
        counterexample = equivariance_counterexample(shape, args.entries, g, which)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    report = {
        "command": "equivariance",
        "instance": {
            "shape": list(shape),
            "entries": args.entries,
            "ring": ring.tag,
            "map": args.map,
            "matrix": [list(r) for r in g.entries],
        },
        "dims": {},
        "checks": [
            {"name": "map_commutes_with_action", "ok": counterexample is None, "counterexample": counterexample}
        ],
        "ok": counterexample is None,
        "wall_time_s": round(time.perf_counter() - started, 6),
    }
    return _emit_report(report)


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weylkit",
        description="Exact polytabloid/copolytabloid computations and theorem checks.",
    )
    parser.add_argument("--output", help="write the result here instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(func=handler)
        return p

    def add_format(p):
        p.add_argument("--format", choices=("json", "text", "latex"), default="json")

    def add_ring(p, default="z"):
        p.add_argument("--ring", default=default, help="z | q | zmod:<n>")

    p = add("dims", _cmd_dims, help="basis cardinalities for one shape and alphabet")
    p.add_argument("--shape", required=True)
    p.add_argument("--entries", type=int, required=True)

    p = add("basis", _cmd_basis, help="list the tableaux of one classification")
    p.add_argument("--shape", required=True)
    p.add_argument("--entries", type=int, required=True)
    p.add_argument("--class", dest="cls", choices=sorted(_CLASS_NAMES), default="semistandard")

    for name, handler in (
        ("rsym", _cmd_rsym),
        ("polytabloid", _cmd_polytabloid),
        ("copolytabloid", _cmd_copolytabloid),
    ):
        p = add(name, handler, help=f"{name} of a tableau")
        p.add_argument("--tableau", required=True)
        p.add_argument("--shape")
        p.add_argument("--entries", type=int)
        add_ring(p)
        add_format(p)

    p = add("garnir", _cmd_garnir, help="column-pair relation for (tableau, A, B)")
    p.add_argument("--tableau", required=True)
    p.add_argument("--boxA", required=True)
    p.add_argument("--boxB", required=True)
    p.add_argument("--shape")
    p.add_argument("--entries", type=int)
    add_ring(p)
    add_format(p)

    p = add("dual-garnir", _cmd_dual_garnir, help="row-pair relation for (tableau, A, B)")
    p.add_argument("--tableau", required=True)
    p.add_argument("--boxA", required=True)
    p.add_argument("--boxB", required=True)
    p.add_argument("--shape")
    p.add_argument("--rows", help="i:i' sanity check against the box sets")
    p.add_argument("--entries", type=int)
    p.add_argument("--variant", choices=("plain", "dc", "star", "star-star"), default="plain")
    add_ring(p)
    add_format(p)

    p = add("snake", _cmd_snake, help="adjacent-row relation labelled (tableau, i, (j, j'))")
    p.add_argument("--tableau", required=True)
    p.add_argument("--row", type=int, required=True)
    p.add_argument("--cols", required=True, help="j:j'")
    p.add_argument("--entries", type=int)
    add_ring(p)
    add_format(p)

    p = add("straighten", _cmd_straighten, help="semistandard coordinates with certificate")
    p.add_argument("--tableau", required=True)
    p.add_argument("--entries", type=int, required=True)
    add_ring(p)

    p = add("schur-verify", _cmd_schur_verify, help="rank bookkeeping of the column-side kernel")
    p.add_argument("--shape", required=True)
    p.add_argument("--entries", type=int, required=True)
    add_ring(p, default="q")

    p = add("weyl-verify", _cmd_weyl_verify, help="rank bookkeeping of the row-side kernel")
    p.add_argument("--shape", required=True)
    p.add_argument("--entries", type=int, required=True)
    add_ring(p, default="q")

    p = add("duality-check", _cmd_duality_check, help="pairing image against copolytabloids")
    p.add_argument("--shape", required=True)
    p.add_argument("--entries", type=int, required=True)

    p = add("equivariance", _cmd_equivariance, help="map commutation with an entry matrix")
    p.add_argument("--shape", required=True)
    p.add_argument("--entries", type=int, required=True)
    p.add_argument("--matrix", required=True)
    p.add_argument("--map", choices=("e", "lambda"), required=True)
    add_ring(p)

    return parser


def dispatch(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        if args.output:
            import contextlib

            with open(args.output, "w") as handle:
                with contextlib.redirect_stdout(handle):
                    return args.func(args, RunConfig.from_env())
        return args.func(args, RunConfig.from_env())
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SizeCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main(argv=None) -> int:
    return dispatch(argv)


if __name__ == "__main__":
    sys.exit(main())
