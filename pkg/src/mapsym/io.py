"""Reading and writing ``.rot``, ``.flg`` and ``.lsp`` files.

All three are line-oriented text.  Lines starting with ``#`` are comments;
the writers put a ``# mapsym <kind>`` header on the first line, which is what
:func:`detect_format` looks at.  Vertices are 1-indexed in ``.rot`` and
``.lsp`` files; flags are 0-indexed in ``.flg`` files.

A rotation line lists the clockwise neighbours of one vertex.  When a vertex
has several darts to the same neighbour ``v`` each entry is written ``v/k``:
the dart paired with the ``k``-th occurrence (counting from 1) of this vertex
in the row of ``v``.
"""
from __future__ import annotations

import sys
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .flags import FlagSystem, MapError, RotationSystem, from_rotation_system, to_rotation_system
from .operations import LspData, OperationPatch, validate_lsp


class FormatError(ValueError):
    """A file that cannot be parsed; the message names the source and line."""

    def __init__(self, source: str, line: int | None, message: str):
        self.source = source
        self.line = line
        where = f"{source}:{line}" if line is not None else source
        super().__init__(f"{where}: {message}")


@dataclass
class _Lines:
    """Non-comment lines with their 1-based line numbers."""

    source: str
    items: list[tuple[int, str]]
    comments: list[str]
    pos: int = 0

    @classmethod
    def from_text(cls, text: str, source: str) -> "_Lines":
        items, comments = [], []
        for no, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                comments.append(line[1:].strip())
                continue
            items.append((no, line))
        return cls(source, items, comments)

    def next(self, what: str) -> tuple[int, str]:
        if self.pos >= len(self.items):
            last = self.items[-1][0] if self.items else None
            raise FormatError(self.source, last, f"unexpected end of file, expected {what}")
        item = self.items[self.pos]
        self.pos += 1
        return item

    def done(self) -> None:
        if self.pos < len(self.items):
            no, _ = self.items[self.pos]
            raise FormatError(self.source, no, "unexpected trailing data")

    def fail(self, no, message):
        return FormatError(self.source, no, message)


def _int(lines: _Lines, no: int, token: str, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise lines.fail(no, f"{what} must be an integer, got {token!r}") from None


# ----------------------------------------------------------------------
# rotation lists


def _parse_rotation_rows(lines: _Lines, n: int) -> RotationSystem:
    raw = []
    for u in range(n):
        no, text = lines.next(f"rotation line for vertex {u + 1}")
        row = []
        for token in text.split():
            v_text, _, k_text = token.partition("/")
            v = _int(lines, no, v_text, "neighbour") - 1
            if not 0 <= v < n:
                raise lines.fail(no, f"neighbour {v + 1} out of range 1..{n}")
            k = _int(lines, no, k_text, "dart index") if k_text else None
            if k is not None and k < 1:
                raise lines.fail(no, "dart index must be at least 1")
            row.append((v, k))
        if not row:
            raise lines.fail(no, f"vertex {u + 1} has no neighbours")
        raw.append((no, row))

    neighbors = []
    for u, (no, row) in enumerate(raw):
        out = []
        for v, k in row:
            far = [j for j, (w, _) in enumerate(raw[v][1]) if w == u]
            if k is None:
                if len(far) != 1 or (u == v):
                    raise lines.fail(no, f"entry {v + 1} at vertex {u + 1} is ambiguous; write {v + 1}/k")
                out.append((v, far[0]))
            else:
                if k > len(far):
                    raise lines.fail(no, f"entry {v + 1}/{k}: vertex {u + 1} occurs only {len(far)} times at {v + 1}")
                out.append((v, far[k - 1]))
        neighbors.append(tuple(out))
    r = RotationSystem(tuple(neighbors))
    for u, row in enumerate(r.neighbors):
        for j, (v, k) in enumerate(row):
            if r.neighbors[v][k] != (u, j):
                raise lines.fail(raw[u][0], f"dart {u + 1} -> {v + 1} is not paired consistently")
    return r


def _rotation_rows(r: RotationSystem) -> list[str]:
    rows = []
    for u, row in enumerate(r.neighbors):
        counts = Counter(v for v, _ in row)
        tokens = []
        for v, k in row:
            if counts[v] == 1 and v != u:
                tokens.append(str(v + 1))
            else:
                nth = sum(1 for w, _ in r.neighbors[v][:k] if w == u) + 1
                tokens.append(f"{v + 1}/{nth}")
        rows.append(" ".join(tokens))
    return rows


# ----------------------------------------------------------------------
# parsing and emitting


def parse_rot(text: str, source: str = "<rot>") -> RotationSystem:
    lines = _Lines.from_text(text, source)
    no, first = lines.next("vertex count")
    n = _int(lines, no, first, "vertex count")
    if n < 1:
        raise lines.fail(no, "vertex count must be positive")
    r = _parse_rotation_rows(lines, n)
    lines.done()
    return r


def emit_rot(r: RotationSystem | FlagSystem, comment: str | None = None) -> str:
    if isinstance(r, FlagSystem):
        r = to_rotation_system(r)
    out = ["# mapsym rot"]
    if comment:
        out.append(f"# {comment}")
    out.append(str(r.n))
    out.extend(_rotation_rows(r))
    return "\n".join(out) + "\n"


def parse_flg(text: str, source: str = "<flg>") -> FlagSystem:
    lines = _Lines.from_text(text, source)
    colored = any(c.replace(" ", "").lower() == "colored:true" for c in lines.comments)
    no, first = lines.next("flag count")
    n = _int(lines, no, first, "flag count")
    if n < 1:
        raise lines.fail(no, "flag count must be positive")
    sigma = np.empty((3, n), dtype=np.int64)
    for i in range(3):
        no, text_i = lines.next(f"sigma{i}")
        values = [_int(lines, no, t, f"sigma{i} entry") for t in text_i.split()]
        if len(values) != n:
            raise lines.fail(no, f"sigma{i} has {len(values)} entries, expected {n}")
        if min(values) < 0 or max(values) >= n:
            raise lines.fail(no, f"sigma{i} entries must lie in 0..{n - 1}")
        sigma[i] = values
    lines.done()
    try:
        return FlagSystem.from_array(sigma, colored=colored, check=True)
    except MapError as exc:
        raise FormatError(source, None, str(exc)) from None


def emit_flg(m: FlagSystem, comment: str | None = None) -> str:
    out = ["# mapsym flg"]
    if m.colored:
        out.append("# colored: true")
    if comment:
        out.append(f"# {comment}")
    out.append(str(m.flag_count))
    for i in range(3):
        out.append(" ".join(map(str, m.sigma[i].tolist())))
    return "\n".join(out) + "\n"


def parse_lsp_data(text: str, source: str = "<lsp>") -> tuple[LspData, str | None]:
    lines = _Lines.from_text(text, source)
    name = None
    for c in lines.comments:
        if c.lower().startswith("name:"):
            name = c.split(":", 1)[1].strip() or None
    no, first = lines.next("vertex count")
    n = _int(lines, no, first, "vertex count")
    if n < 1:
        raise lines.fail(no, "vertex count must be positive")
    no, text_c = lines.next("colour line")
    colours = tuple(_int(lines, no, t, "colour") for t in text_c.split())
    if len(colours) != n:
        raise lines.fail(no, f"{len(colours)} colours given for {n} vertices")
    r = _parse_rotation_rows(lines, n)

    def labelled(prefix):
        no, text_l = lines.next(f"'{prefix}' line")
        head, _, rest = text_l.partition(":")
        if head.strip().lower() != prefix:
            raise lines.fail(no, f"expected a line starting with '{prefix}:'")
        values = [_int(lines, no, t, prefix) - 1 for t in rest.split()]
        if any(not 0 <= v < n for v in values):
            raise lines.fail(no, f"{prefix} vertices must lie in 1..{n}")
        return no, values

    _, outer = labelled("outer")
    no, special = labelled("special")
    if len(special) != 3:
        raise lines.fail(no, "special needs exactly three vertices")
    lines.done()
    return LspData(colours, r, tuple(outer), tuple(special)), name


def parse_lsp(text: str, source: str = "<lsp>") -> OperationPatch:
    data, name = parse_lsp_data(text, source)
    return validate_lsp(data, name=name)


def emit_lsp(p: OperationPatch, comment: str | None = None) -> str:
    data = p.data
    out = ["# mapsym lsp"]
    if p.name:
        out.append(f"# name: {p.name}")
    if comment:
        out.append(f"# {comment}")
    out.append(str(len(data.colours)))
    out.append(" ".join(map(str, data.colours)))
    out.extend(_rotation_rows(data.rotation))
    out.append("outer: " + " ".join(str(v + 1) for v in p.outer_walk))
    out.append("special: " + " ".join(str(v + 1) for v in data.special))
    return "\n".join(out) + "\n"


# ----------------------------------------------------------------------
# files and auto-detection

FORMATS = ("rot", "flg", "lsp")


def detect_format(text: str, source: str = "<input>") -> str:
    """Format named in the ``# mapsym <kind>`` header, else guessed from the layout."""
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if not line.startswith("#"):
            break
        words = line[1:].split()
        if len(words) >= 2 and words[0].lower() == "mapsym" and words[1].lower() in FORMATS:
            return words[1].lower()
    lines = _Lines.from_text(text, source)
    if not lines.items:
        raise FormatError(source, None, "empty input")
    if any(t.lower().startswith("outer:") for _, t in lines.items):
        return "lsp"
    if any(c.replace(" ", "").lower() == "colored:true" for c in lines.comments):
        return "flg"
    first = lines.items[0][1].split()
    if len(lines.items) == 4 and len(first) == 1 and first[0].isdigit():
        n = int(first[0])
        if all(len(t.split()) == n for _, t in lines.items[1:]):
            return "flg"
    return "rot"


def read_text(path: str | Path) -> tuple[str, str]:
    """Contents and display name of ``path`` ("-" is standard input)."""
    if str(path) == "-":
        return sys.stdin.read(), "<stdin>"
    p = Path(path)
    return p.read_text(), str(p)


def load_map(path: str | Path) -> FlagSystem:
    text, source = read_text(path)
    return map_from_text(text, source)


def map_from_text(text: str, source: str = "<input>") -> FlagSystem:
    kind = detect_format(text, source)
    if kind == "lsp":
        raise FormatError(source, None, "expected a map (.rot or .flg), got an .lsp patch")
    if kind == "flg":
        return parse_flg(text, source)
    r = parse_rot(text, source)
    try:
        return from_rotation_system(r)
    except MapError as exc:
        raise FormatError(source, None, str(exc)) from None


def load_patch(path: str | Path) -> OperationPatch:
    text, source = read_text(path)
    kind = detect_format(text, source)
    if kind != "lsp":
        raise FormatError(source, None, f"expected an .lsp patch, got .{kind}")
    return parse_lsp(text, source)


def write_text(text: str, path: str | Path | None = None) -> None:
    if path is None or str(path) == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def emit_map(m: FlagSystem, fmt: str = "rot", comment: str | None = None) -> str:
    """``.rot`` unless the system is coloured or ``fmt`` asks for ``.flg``."""
    if fmt == "flg" or m.colored:
        return emit_flg(m, comment)
    return emit_rot(m, comment)


__all__ = [
    "FormatError",
    "parse_rot",
    "emit_rot",
    "parse_flg",
    "emit_flg",
    "parse_lsp",
    "parse_lsp_data",
    "emit_lsp",
    "detect_format",
    "load_map",
    "load_patch",
    "map_from_text",
    "emit_map",
    "read_text",
    "write_text",
]
