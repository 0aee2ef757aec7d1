"""The ``mapsym`` command line tool.

Exit status: 0 on success, 1 when the checked property fails (a map that is
not polyhedral, an invalid patch, a table contradiction, ...), 2 for usage
and parse errors.  ``-`` stands for standard input or output.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import analysis, families, goldberg, io, library, operations
from .flags import MapError, dual, summary
from .polyhedral import is_polyhedral

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _resolve(path: str) -> str:
    """Existing path, "-", or a shipped fixture with the same file name."""
    if path == "-" or Path(path).exists():
        return path
    try:
        return str(library.fixture_path(path))
    except FileNotFoundError:
        raise UsageError(f"{path}: no such file") from None


def _map(path):
    return io.load_map(_resolve(path))


def _patch(path):
    return io.load_patch(_resolve(path))


def _emit(text: str, out: str | None) -> None:
    io.write_text(text, out)


class Report:
    """Line-oriented report; ``kv`` switches to ``key=value`` lines."""

    def __init__(self, kv: bool):
        self.kv = kv
        self.lines: list[str] = []

    def add(self, key: str, value, text: str | None = None) -> None:
        if self.kv:
            self.lines.append(f"{key}={value}")
        else:
            self.lines.append(text if text is not None else f"{key.replace('_', ' ')}: {value}")

    def print(self) -> None:
        for line in self.lines:
            print(line)


def _profile(d: dict[int, int]) -> str:
    return " ".join(f"{k}:{v}" for k, v in sorted(d.items()))


# ----------------------------------------------------------------------
# subcommands


def cmd_info(args) -> int:
    text, source = io.read_text(_resolve(args.file))
    kind = io.detect_format(text, source)
    rep = Report(args.kv)
    if kind == "lsp":
        p = io.parse_lsp(text, source)
        k = p.inflation_factor
        names = [n for n in library.PATCH_NAMES if operations.patches_isomorphic(p, library.patch(n))]
        tag = f" ({', '.join(names)})" if names else ""
        rep.add("kind", "lsp patch")
        rep.add("inflation_factor", k, f"inflation factor {k}{tag}")
        rep.add("vertices", p.vertex_count)
        rep.add("special_colours", " ".join(map(str, p.special_colours)))
        rep.add("c3", str(operations.is_c3(p)).lower())
        if names and args.kv:
            rep.add("name", ",".join(names))
    else:
        m = io.map_from_text(text, source)
        s = summary(m)
        rep.add("kind", "chamber complex" if m.colored else "map")
        rep.add("flags", m.flag_count)
        rep.add("vertices", s.vertex_count)
        rep.add("edges", s.edge_count)
        rep.add("faces", s.face_count)
        rep.add("genus", s.genus)
        rep.add("face_sizes", _profile(s.face_profile()))
        rep.add("degrees", _profile(s.degree_profile()))
        rep.add("polyhedral", str(bool(is_polyhedral(m))).lower())
    rep.print()
    return OK


def cmd_apply(args) -> int:
    p = _patch(args.patch)
    m = _map(args.map)
    result, _ = operations.apply(p, m, check=True)
    _emit(io.emit_map(result, args.format), args.output)
    return OK


def cmd_compose(args) -> int:
    a, b = _patch(args.first), _patch(args.second)
    _emit(io.emit_lsp(operations.compose(a, b)), args.output)
    return OK


def cmd_dual(args) -> int:
    _emit(io.emit_map(dual(_map(args.map)), args.format), args.output)
    return OK


def cmd_aut(args) -> int:
    m = _map(args.map)
    r = analysis.automorphisms(m, args.mode)
    rep = Report(args.kv)
    rep.add("mode", r.mode)
    rep.add("group_order", r.group_order, f"group order {r.group_order}")
    if args.mode == analysis.ALLOW_DUAL_SWAP:
        rep.add("colour_swapping", int(r._swap.sum()))
    rep.print()
    return OK


def cmd_orbits(args) -> int:
    m = _map(args.map)
    r = analysis.automorphisms(m, args.mode)
    rep = Report(args.kv)
    rep.add("chamber_orbits", r.orbit_count, f"chamber orbits {r.orbit_count}")
    rep.add("orbit_sizes", " ".join(map(str, r.orbit_sizes().tolist())))
    rep.add("group_order", r.group_order)
    rep.print()
    return OK


def cmd_iso(args) -> int:
    a, b = _map(args.first), _map(args.second)
    same = analysis.are_isomorphic(a, b, args.mode)
    print("isomorphic" if same else "not isomorphic")
    return OK if same else FAILED


def cmd_selfdual(args) -> int:
    same = analysis.is_self_dual(_map(args.map))
    print("self-dual" if same else "not self-dual")
    return OK if same else FAILED


def cmd_check(args) -> int:
    report = is_polyhedral(_map(args.map))
    print(str(report))
    return OK if report else FAILED


def cmd_validate(args) -> int:
    text, source = io.read_text(_resolve(args.patch))
    data, _ = io.parse_lsp_data(text, source)
    violations = operations.lsp_violations(data)
    if not violations:
        p = operations.validate_lsp(data)
        print(f"valid lsp-operation, inflation factor {p.inflation_factor}")
        return OK
    for v in violations:
        print(f"violation: {v}")
    return FAILED


def cmd_gc(args) -> int:
    try:
        params = goldberg.GCParams(args.l, args.m)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(io.emit_lsp(goldberg.gc_patch(params)), args.output)
    return OK


def cmd_family(args) -> int:
    name = args.name.lower()
    if name in families.PLATONIC:
        m = families.platonic(name)
    elif name in ("hg", "h"):
        m = families.h_family(_need(args.g, "--g"))
    elif name == "square-torus":
        m = families.square_torus(_need(args.n, "--n"))
    elif name == "hex-torus":
        m = families.hex_torus(_need(args.r, "--r"), _need(args.s, "--s"))
    elif name == "selfdual":
        m = families.selfdual(_need(args.genus, "--genus"))
    else:
        raise UsageError(f"unknown family {args.name!r}")
    _emit(io.emit_map(m, args.format), args.output)
    return OK


def _need(value, flag):
    if value is None:
        raise UsageError(f"{flag} is required for this family")
    return value


def cmd_increase(args) -> int:
    p, m = _patch(args.patch), _map(args.map)
    r = analysis.increases_symmetry(p, m)
    rep = Report(args.kv)
    rep.add("ratio", f"{r.ratio.numerator}/{r.ratio.denominator}", str(r))
    if args.kv:
        rep.add("increased", str(r.increased).lower())
    rep.add("orders", f"{r.order_before} {r.order_after}")
    if r.increased:
        rep.add("certificate_chamber", r.chamber)
        rep.add("crosses_every_chamber", str(r.crosses_every_chamber).lower())
    if r.input_polyhedral is False:
        print("note: faces of the input meet in more than a vertex or an edge", file=sys.stderr)
    rep.print()
    return OK


def _map_face(spec: str):
    path, sep, face = spec.rpartition(":")
    if not sep:
        raise UsageError(f"{spec!r}: expected MAP:FACE")
    try:
        return _map(path), int(face)
    except ValueError:
        raise UsageError(f"{spec!r}: face must be an integer") from None


def cmd_glue(args) -> int:
    m1, f1 = _map_face(args.first)
    m2, f2 = _map_face(args.second)
    for m, f in ((m1, f1), (m2, f2)):
        if not 0 <= f < m.face_count:
            raise UsageError(f"face {f} out of range 0..{m.face_count - 1}")
    glued = families.glue_along_face(families.GlueSpec(m1, f1, m2, f2, args.offset, args.flip))
    _emit(io.emit_map(glued, args.format), args.output)
    return OK


def cmd_verify_tables(args) -> int:
    checks = analysis.verify_tables(args.max_genus, jobs=args.jobs)
    bad = 0
    for c in checks:
        witnesses = ",".join(c.witnesses) if c.witnesses else "-"
        if args.kv:
            print(f"row={c.row} operation={c.operation} genus={c.genus} expected={str(c.expected).lower()} "
                  f"observed={str(c.observed).lower()} status={c.status} witnesses={witnesses}")
        else:
            print(f"{c.row:>3} {c.operation:<10} g={c.genus} expected={'yes' if c.expected else 'no':<3} "
                  f"observed={'yes' if c.observed else 'no':<3} {c.status:<13} {witnesses}")
        bad += c.status == "contradiction"
    print(f"contradictions: {bad}")
    return FAILED if bad else OK


# ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mapsym", description="Maps, lsp-operations and symmetry.")
    parser.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")
    sub = parser.add_subparsers(dest="command", required=True)
    modes = list(analysis.MODES)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        return p

    def out_opts(p, formats=True):
        p.add_argument("-o", "--output", default=None, help="output file (default stdout)")
        if formats:
            p.add_argument("--format", choices=["rot", "flg"], default="rot")

    p = add("info", cmd_info, "summarise a map or patch")
    p.add_argument("file")
    p.add_argument("--kv", action="store_true")

    p = add("apply", cmd_apply, "apply a patch to a map")
    p.add_argument("patch")
    p.add_argument("map")
    out_opts(p)

    p = add("compose", cmd_compose, "compose two patches (first after second)")
    p.add_argument("first")
    p.add_argument("second")
    out_opts(p, formats=False)

    p = add("dual", cmd_dual, "dual map")
    p.add_argument("map")
    out_opts(p)

    for name, func, text in (("aut", cmd_aut, "automorphism group order"), ("orbits", cmd_orbits, "chamber orbits")):
        p = add(name, func, text)
        p.add_argument("map")
        p.add_argument("--mode", choices=modes, default=analysis.COLOUR_PRESERVING)
        p.add_argument("--kv", action="store_true")

    p = add("iso", cmd_iso, "isomorphism test")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--mode", choices=modes, default=analysis.COLOUR_PRESERVING)

    p = add("selfdual", cmd_selfdual, "self-duality test")
    p.add_argument("map")

    p = add("check", cmd_check, "polyhedrality test")
    p.add_argument("map")

    p = add("validate", cmd_validate, "check an .lsp file against the lsp definition")
    p.add_argument("patch")

    p = add("gc", cmd_gc, "Goldberg-Coxeter patch GC(l,m)")
    p.add_argument("l", type=int)
    p.add_argument("m", type=int)
    out_opts(p, formats=False)

    p = add("family", cmd_family, "generate a fixture map")
    p.add_argument("name", help="tetrahedron|cube|octahedron|dodecahedron|icosahedron|Hg|square-torus|hex-torus|selfdual")
    p.add_argument("--g", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--genus", type=int)
    out_opts(p)

    p = add("increase", cmd_increase, "does a patch increase the symmetry of a map")
    p.add_argument("patch")
    p.add_argument("map")
    p.add_argument("--kv", action="store_true")

    p = add("glue", cmd_glue, "glue two maps along faces")
    p.add_argument("first", metavar="MAP:FACE")
    p.add_argument("second", metavar="MAP:FACE")
    p.add_argument("--offset", type=int, required=True)
    p.add_argument("--flip", action="store_true")
    out_opts(p)

    p = add("verify-tables", cmd_verify_tables, "check the table of small operations on the witness corpus")
    p.add_argument("--max-genus", type=int, default=3)
    p.add_argument("--kv", action="store_true")
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else USAGE
    if args.jobs < 1:
        print("mapsym: error: --jobs must be at least 1", file=sys.stderr)
        return USAGE
    try:
        return args.func(args)
    except (UsageError, io.FormatError, operations.LspValidationError, MapError, ValueError) as exc:
        print(f"mapsym: error: {exc}", file=sys.stderr)
        return USAGE
    except BrokenPipeError:
        return OK


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
