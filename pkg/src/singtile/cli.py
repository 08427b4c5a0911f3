"""Command-line front end: ``singtile <command> --tiling K --alpha A [options]``.

Exit codes: 0 success, 1 usage or parse error, 2 domain error (inadmissible
alpha, incompatible coloring), 3 when ``verify`` finds a disagreement.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import __version__
from .cyclotomic import RingElement, parse_element
from .errors import DomainError, IncompatibleColoringError, ParseError
from .lattice_coloring import Sublattice, build_ideal_coloring, build_sublattice_coloring
from .render import RenderPlan, emit_svg
from .singular_tiling import (
    AdmissibleAlpha,
    alpha_from_LR,
    check_admissible,
    color_symmetry_transfer,
    compatibility,
    compatible_ideal_report,
    symmetry_group,
    tiling_report,
)
from .tilings import TilingKind, parse_kind
from .verifier import conformance_report, default_radius_sq

SCHEMA_VERSION = "v1"
EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_DISAGREE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--tiling", required=True, help="44, 63 or 36")
    src = common.add_mutually_exclusive_group(required=True)
    src.add_argument("--alpha", help='conformal parameter, e.g. "-5+5i" or "2+10w"')
    src.add_argument("--LR", dest="lr", help='coordinates in the translation basis, e.g. "4,6"')
    common.add_argument("--format", choices=("json", "text"), default="text")

    def coloring_args(p, required=False):
        g = p.add_mutually_exclusive_group(required=required)
        g.add_argument("--ideal", help='ideal generator, e.g. "1+3w"')
        g.add_argument("--sublattice", help='basis, e.g. "v1=2,v2=2i"')

    parser = _Parser(prog="singtile", description="Singular tilings from regular tilings.")
    parser.add_argument("--version", action="version", version=f"singtile {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("classify", parents=[common], help="class, (L,R) and curve census")
    sub.add_parser("symmetry", parents=[common], help="symmetry group and its flat lifts")
    sub.add_parser("ideals", parents=[common], help="compatible ideal colorings")
    coloring_args(sub.add_parser("check", parents=[common], help="one coloring"), required=True)
    p = sub.add_parser("verify", parents=[common], help="brute-force conformance report")
    coloring_args(p)
    p.add_argument("--matrix", action="store_true", help="also sweep every divisor of alpha")
    p.add_argument("--radius-sq", type=int, default=None, help="patch radius squared")
    p = sub.add_parser("render", parents=[common], help="write an SVG")
    p.add_argument("--ideal", help="color by this ideal")
    p.add_argument("--rmin", type=float, default=0.05)
    p.add_argument("--rmax", type=float, default=1.0)
    p.add_argument("--samples", type=int, default=24)
    p.add_argument("--size", type=int, default=800)
    p.add_argument("--palette", help="comma-separated fills, e.g. '#ff0000,#00ff00'")
    p.add_argument("--out", default="-", help="output path, '-' for stdout")
    return parser


def _parse_lr(text: str, kind: TilingKind) -> RingElement:
    parts = text.split(",")
    if len(parts) != 2:
        raise ParseError("expected two integers L,R", text, 0)
    vals = []
    pos = 0
    for part in parts:
        try:
            vals.append(int(part.strip()))
        except ValueError:
            raise ParseError("not an integer", text, pos) from None
        pos += len(part) + 1
    return alpha_from_LR(kind, *vals)


def _parse_sublattice(text: str, kind: TilingKind) -> Sublattice:
    vecs: dict[str, RingElement] = {}
    pos = 0
    for part in text.split(","):
        key, eq, val = part.partition("=")
        if not eq or key.strip() not in ("v1", "v2"):
            raise ParseError("expected v1=<element>,v2=<element>", text, pos)
        try:
            vecs[key.strip()] = parse_element(val, kind.tag)
        except ParseError as e:
            raise ParseError(str(e).split(" at position")[0], text, pos + len(key) + 1 + e.pos) from None
        pos += len(part) + 1
    if set(vecs) != {"v1", "v2"}:
        raise ParseError("both v1 and v2 are required", text, 0)
    return Sublattice.from_basis(vecs["v1"], vecs["v2"])


def _alpha(args) -> AdmissibleAlpha:
    kind = parse_kind(args.tiling)
    if args.lr is not None:
        alpha = _parse_lr(args.lr, kind)
    else:
        alpha = parse_element(args.alpha, kind.tag)
    return check_admissible(kind, alpha)


def _coloring(args, kind: TilingKind):
    if getattr(args, "ideal", None):
        return build_ideal_coloring(parse_element(args.ideal, kind.tag), kind)
    if getattr(args, "sublattice", None):
        return build_sublattice_coloring(_parse_sublattice(args.sublattice, kind), kind)
    return None


def _header(command: str, adm: AdmissibleAlpha) -> dict:
    return {"schema": SCHEMA_VERSION, "command": command, "alpha": str(adm.alpha), "kind": adm.kind.value}


def _symmetry_dict(adm: AdmissibleAlpha) -> dict:
    sym = symmetry_group(adm)
    return {
        "type": sym.group_type,
        "n": sym.n,
        "label": sym.label,
        "order": sym.order,
        "f1": str(sym.f1),
        "f2": str(sym.f2) if sym.f2 is not None else None,
    }


def cmd_classify(args) -> tuple[dict, int]:
    adm = _alpha(args)
    full = tiling_report(adm)
    out = _header("classify", adm)
    for key in ("L", "R", "n", "balanced", "class", "canonical_form", "census"):
        out[key] = full[key]
    return out, EXIT_OK


def cmd_symmetry(args) -> tuple[dict, int]:
    adm = _alpha(args)
    out = _header("symmetry", adm)
    out["symmetry"] = _symmetry_dict(adm)
    return out, EXIT_OK


def cmd_ideals(args) -> tuple[dict, int]:
    adm = _alpha(args)
    full = tiling_report(adm)
    out = _header("ideals", adm)
    out["ideals"] = full["ideals"]
    out["max_colors"] = full["max_colors"]
    out["color_counts"] = sorted({d["colors"] for d in full["ideals"]})
    return out, EXIT_OK


def cmd_check(args) -> tuple[dict, int]:
    adm = _alpha(args)
    col = _coloring(args, adm.kind)
    out = _header("check", adm)
    compat = compatibility(col, adm)
    out["coloring"] = col.generator_text
    out["colors"] = col.color_count
    out["compatible"] = compat
    out["perfect"] = col.perfectness.value if col.perfectness is not None else None
    if not compat:
        out["reason"] = f"{adm.alpha} is not in the coloring sublattice"
        return out, EXIT_DOMAIN
    sym = symmetry_group(adm)
    verdicts = [color_symmetry_transfer("g1", col, adm)]
    if sym.dihedral:
        verdicts.append(color_symmetry_transfer("g2", col, adm))
    out["color_symmetries"] = [
        {"element": v.element, "flat": str(v.flat), "is_color_symmetry": v.is_color_symmetry}
        for v in verdicts
    ]
    out["singular_perfect"] = all(v.is_color_symmetry for v in verdicts)
    return out, EXIT_OK


def cmd_verify(args) -> tuple[dict, int]:
    adm = _alpha(args)
    betas = []
    col = _coloring(args, adm.kind)
    if col is not None:
        betas.append(col)
    if args.matrix:
        betas.extend(compatible_ideal_report(adm).colorings)
    r2 = args.radius_sq if args.radius_sq is not None else default_radius_sq(adm.alpha)
    checks = conformance_report(adm, betas=betas, radius_sq=r2)
    out = _header("verify", adm)
    out["radius_sq"] = r2
    out["checks"] = [c.as_dict() for c in checks]
    out["disagreements"] = sum(not c.agree for c in checks)
    return out, EXIT_OK if out["disagreements"] == 0 else EXIT_DISAGREE


def cmd_render(args) -> tuple[Optional[dict], int]:
    adm = _alpha(args)
    col = _coloring(args, adm.kind)
    palette = tuple(c.strip() for c in args.palette.split(",") if c.strip()) if args.palette else None
    if args.samples < 2:
        raise UsageError("--samples must be at least 2")
    plan = RenderPlan(adm, col, args.rmin, args.rmax, args.samples, palette, args.size)
    svg = emit_svg(plan)
    if args.out == "-":
        args.stdout.write(svg)
        return None, EXIT_OK
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(svg)
    out = _header("render", adm)
    out["out"] = args.out
    out["tiles"] = svg.count("<path ")
    out["coloring"] = col.generator_text if col is not None else None
    return out, EXIT_OK


_COMMANDS = {
    "classify": cmd_classify,
    "symmetry": cmd_symmetry,
    "ideals": cmd_ideals,
    "check": cmd_check,
    "verify": cmd_verify,
    "render": cmd_render,
}


def _text(obj, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.extend(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, dict):
                inner = ", ".join(f"{k}={_scalar(x)}" for k, x in v.items())
                lines.append(f"{pad}- {inner}")
            else:
                lines.append(f"{pad}- {_scalar(v)}")
    return lines


def _scalar(v) -> str:
    if v is None:
        return "none"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, (list, dict)):
        return json.dumps(v, ensure_ascii=False)
    return str(v)


def format_report(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2, ensure_ascii=False)
    return "\n".join(_text(report))


_VALUE_FLAGS = ("--alpha", "--ideal", "--sublattice", "--LR")


def _glue_negative_values(argv: Sequence[str]) -> list[str]:
    """Turn ``--alpha -5+5i`` into ``--alpha=-5+5i``; argparse would read it as a flag."""
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            if nxt is not None and nxt.startswith("-") and not nxt.startswith("--"):
                out.append(f"{tok}={nxt}")
                continue
            out.append(tok)
            if nxt is not None:
                out.append(nxt)
        else:
            out.append(tok)
    return out


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = _glue_negative_values(sys.argv[1:] if argv is None else argv)
    try:
        args = _build_parser().parse_args(argv)
        args.stdout = stdout
        report, code = _COMMANDS[args.command](args)
    except (UsageError, ParseError) as e:
        print(f"error: {e}", file=stderr)
        return EXIT_USAGE
    except (DomainError, IncompatibleColoringError) as e:
        print(f"error: {e}", file=stderr)
        return EXIT_DOMAIN
    except SystemExit as e:  # --help / --version
        return int(e.code or 0)
    if report is not None:
        print(format_report(report, args.format), file=stdout)
    return code


def main() -> None:
    sys.exit(run())


__all__ = ["run", "main", "format_report", "SCHEMA_VERSION"]