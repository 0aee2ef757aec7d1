"""Named patches and maps shipped with the package, and the table of small operations.

Each row of :data:`TABLE_ROWS` groups the operations ``O``, ``D o O``,
``O o D`` and ``D o O o D`` (repeats dropped) together with the set of genera
in which the row can increase symmetry.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from .flags import FlagSystem
from .operations import OperationPatch

FIXTURE_DIR = Path(__file__).with_name("fixtures")


@dataclass(frozen=True)
class GenusSet:
    """``kind`` is one of "empty", "all", "positive" or "only" (with ``only``)."""

    kind: str
    only: tuple[int, ...] = ()

    def __contains__(self, g: int) -> bool:
        if self.kind == "empty":
            return False
        if self.kind == "all":
            return True
        if self.kind == "positive":
            return g > 0
        return g in self.only

    def __str__(self) -> str:
        return {"empty": "{}", "all": "N", "positive": "N\\{0}"}.get(self.kind, "{" + ",".join(map(str, self.only)) + "}")


EMPTY = GenusSet("empty")
ALL = GenusSet("all")
POSITIVE = GenusSet("positive")


@dataclass(frozen=True)
class TableRow:
    label: str
    inflation: int
    members: tuple[str, ...]
    genera: GenusSet

    @property
    def name(self) -> str:
        return self.members[0]


TABLE_ROWS = (
    TableRow("1", 1, ("identity", "dual"), EMPTY),
    TableRow("2", 2, ("ambo", "join"), ALL),
    TableRow("3", 3, ("truncate", "needle", "zip", "kis"), POSITIVE),
    TableRow("4a", 4, ("expand", "ortho"), ALL),
    TableRow("4b", 4, ("chamfer", "d_chamfer", "chamfer_d", "subdivide"), GenusSet("only", (1,))),
    TableRow("5", 5, ("o_5", "d_o_5", "o_5_d", "loft"), EMPTY),
    TableRow("6a", 6, ("o_6a", "d_o_6a", "o_6a_d", "d_o_6a_d"), EMPTY),
    TableRow("6b", 6, ("o_6b", "d_o_6b"), ALL),
    TableRow("6c", 6, ("bevel", "meta"), ALL),
    TableRow("6d", 6, ("o_6d", "d_o_6d", "o_6d_d", "join-lace"), EMPTY),
    TableRow("6e", 6, ("o_6e", "d_o_6e", "o_6e_d", "d_o_6e_d"), POSITIVE),
    TableRow("6f", 6, ("quinto", "d_quinto", "quinto_d", "d_quinto_d"), EMPTY),
)

PATCH_NAMES = tuple(name for row in TABLE_ROWS for name in row.members)


def _normalise(name: str) -> str:
    return name.strip().lower().replace("_", "-") if name else name


_BY_KEY = {_normalise(n): n for n in PATCH_NAMES}


def fixture_path(name: str) -> Path:
    """Path of a shipped fixture file given a file name or a bare stem."""
    p = FIXTURE_DIR / Path(name).name
    if p.exists():
        return p
    for suffix in (".lsp", ".rot", ".flg"):
        q = FIXTURE_DIR / (Path(name).name + suffix)
        if q.exists():
            return q
    raise FileNotFoundError(f"no fixture named {name!r}")


@lru_cache(maxsize=None)
def patch(name: str) -> OperationPatch:
    """A shipped patch by name (case and ``_``/``-`` insensitive)."""
    from .io import parse_lsp

    key = _BY_KEY.get(_normalise(name))
    if key is None:
        raise KeyError(f"unknown patch {name!r}; known: {', '.join(PATCH_NAMES)}")
    path = FIXTURE_DIR / f"{key}.lsp"
    return parse_lsp(path.read_text(), str(path)).renamed(key)


def row_of(name: str) -> TableRow:
    key = _BY_KEY.get(_normalise(name))
    for row in TABLE_ROWS:
        if key in row.members:
            return row
    raise KeyError(name)


@lru_cache(maxsize=None)
def fixture_map(name: str) -> FlagSystem:
    from .io import load_map

    return load_map(fixture_path(name))
