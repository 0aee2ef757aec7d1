"""Generators for the fixture maps: Platonic solids, torus tilings, H_g, face gluing."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import networkx as nx
import numpy as np

from .flags import FlagSystem, MapError, RotationSystem, from_rotation_system, summary
from .polyhedral import is_polyhedral

PLATONIC = {
    "tetrahedron": nx.tetrahedral_graph,
    "cube": nx.cubical_graph,
    "octahedron": nx.octahedral_graph,
    "dodecahedron": nx.dodecahedral_graph,
    "icosahedron": nx.icosahedral_graph,
}


def planar_rotation(graph: nx.Graph) -> RotationSystem:
    """Rotation system of the (unique up to mirroring) plane embedding of a 3-connected graph."""
    planar, embedding = nx.check_planarity(graph)
    if not planar:
        raise MapError("graph is not planar")
    nodes = sorted(graph.nodes)
    index = {v: i for i, v in enumerate(nodes)}
    return RotationSystem.from_simple([[index[w] for w in embedding.neighbors_cw_order(v)] for v in nodes])


@lru_cache(maxsize=None)
def platonic(name: str) -> FlagSystem:
    try:
        builder = PLATONIC[name]
    except KeyError:
        raise ValueError(f"unknown Platonic solid {name!r}; choose from {sorted(PLATONIC)}") from None
    return from_rotation_system(planar_rotation(builder()))


def _lattice_torus(r: int, s: int, steps) -> FlagSystem:
    """Translation-invariant map on the r x s torus grid; ``steps`` in clockwise order."""
    deg = len(steps)

    def vid(i, j):
        return (i % r) * s + (j % s)

    rows = []
    for i in range(r):
        for j in range(s):
            row = []
            for d, (di, dj) in enumerate(steps):
                # the reverse step sits half a turn further round
                row.append((vid(i + di, j + dj), (d + deg // 2) % deg))
            rows.append(tuple(row))
    return from_rotation_system(RotationSystem(tuple(rows)))


def square_torus(n: int) -> FlagSystem:
    """The n x n square tiling of the torus (self-dual, polyhedral for n >= 3)."""
    if n < 3:
        raise ValueError(f"square_torus needs n >= 3 (n={n} gives loops or parallel edges)")
    return _lattice_torus(n, n, [(1, 0), (0, -1), (-1, 0), (0, 1)])


def triangular_torus(r: int, s: int) -> FlagSystem:
    """6-regular triangulation of the torus on an r x s grid."""
    return _lattice_torus(r, s, [(1, 0), (1, -1), (0, -1), (-1, 0), (-1, 1), (0, 1)])


def hex_torus(r: int, s: int) -> FlagSystem:
    """3-regular honeycomb on the torus with r*s hexagons (dual of the triangular grid)."""
    if r < 1 or s < 1:
        raise ValueError("hex_torus needs positive parameters")
    try:
        tri = triangular_torus(r, s)
    except MapError as exc:
        raise ValueError(f"hex_torus({r}, {s}) is degenerate: {exc}") from None
    m = FlagSystem(tri.sigma2, tri.sigma1, tri.sigma0)
    report = is_polyhedral(m)
    if not report:
        raise ValueError(f"hex_torus({r}, {s}) is not polyhedral: {report.condition}")
    return m


def h_family_rotation(g: int) -> RotationSystem:
    """The rotation system of H_g; A_i is vertex i, B_i is vertex 2g + i."""
    if g < 2:
        raise ValueError("H_g is defined for g >= 2")
    n = 2 * g

    def A(i):
        return i % n

    def B(i):
        return n + i % n

    rows = []
    for i in range(n):
        rows.append([A(i + 1), A(i - 1), B(i), B(i + g), B(i + g + 1), B(i + 1)])
    for i in range(n):
        rows.append([B(i - 1), B(i + 1), A(i + g), A(i), A(i - 1), A(i + g - 1)])
    return RotationSystem.from_simple(rows)


@lru_cache(maxsize=None)
def h_family(g: int) -> FlagSystem:
    return from_rotation_system(h_family_rotation(g))


# ----------------------------------------------------------------------
# gluing along faces


@dataclass(frozen=True)
class GlueSpec:
    """Glue ``m1`` and ``m2`` along faces ``f1`` and ``f2`` of equal size.

    Going round the boundary of ``f1`` from its lowest flag, vertex ``t`` is
    identified with vertex ``offset - t`` of ``f2`` (read the same way), or
    with vertex ``offset + t`` of the mirror image when ``flip`` is set.
    """

    m1: FlagSystem
    f1: int
    m2: FlagSystem
    f2: int
    offset: int = 0
    flip: bool = False


def _face_cycle(m: FlagSystem, face: int) -> list[int]:
    """The 2k flags of a face in the order f, s0 f, s1 s0 f, ..."""
    start = int(np.flatnonzero(m.face_of == face)[0])
    out = [start]
    f = start
    i = 0
    while True:
        f = int(m.sigma[i][f])
        i ^= 1
        if f == start:
            return out
        out.append(f)


def glue_along_face(spec: GlueSpec) -> FlagSystem:
    m1, m2 = spec.m1, spec.m2
    a = _face_cycle(m1, spec.f1)
    b = _face_cycle(m2, spec.f2)
    if len(a) != len(b):
        raise ValueError(f"face sizes differ: {len(a) // 2} vs {len(b) // 2}")
    k2 = len(a)
    n1 = m1.flag_count
    # flag a[t] is matched with b[s + t] (s even) or b[s - t] (s odd)
    s = 2 * spec.offset + (1 if spec.flip else 0)
    psi = {}
    for t, x in enumerate(a):
        psi[x] = b[(s + t) % k2] if s % 2 == 0 else b[(s - t) % k2]

    keep1 = np.ones(n1, dtype=bool)
    keep1[a] = False
    keep2 = np.ones(m2.flag_count, dtype=bool)
    keep2[b] = False
    old1 = np.flatnonzero(keep1)
    old2 = np.flatnonzero(keep2)
    new1 = -np.ones(n1, dtype=np.int64)
    new1[old1] = np.arange(len(old1))
    new2 = -np.ones(m2.flag_count, dtype=np.int64)
    new2[old2] = len(old1) + np.arange(len(old2))

    n = len(old1) + len(old2)
    sigma = np.empty((3, n), dtype=np.int64)
    for i in range(2):
        sigma[i, : len(old1)] = new1[m1.sigma[i][old1]]
        sigma[i, len(old1):] = new2[m2.sigma[i][old2]]
    s2 = np.empty(n, dtype=np.int64)
    for x, nx_ in zip(old1, range(len(old1))):
        y = int(m1.sigma2[x])
        s2[nx_] = new1[y] if keep1[y] else new2[m2.sigma2[psi[y]]]
    inv = {v: key for key, v in psi.items()}
    for x, nx_ in zip(old2, range(len(old1), n)):
        y = int(m2.sigma2[x])
        s2[nx_] = new2[y] if keep2[y] else new1[m1.sigma2[inv[y]]]
    sigma[2] = s2
    result = FlagSystem.from_array(sigma)
    ends = result.edge_endpoints()
    if np.any(ends[:, 0] == ends[:, 1]):
        raise ValueError("identification creates a loop")
    return result


# ----------------------------------------------------------------------
# square tori with hexagon sites, the pieces of the self-dual chains
#
# A site replaces the squares with corners (0,0), (1,0), (2,0) by a hexagon,
# a square and two pentagons, adding three vertices X, Y, Z:
#   hexagon   (1,0) (0,0) Y X Z (2,0)
#   pentagons (0,0) (0,1) (1,1) X Y  and  (2,0) Z (2,1) (3,1) (3,0)
#   square    (1,1) (2,1) Z X
# Every edit is a replacement, a removal or an insertion between two
# consecutive neighbours, so it reads the same for mirrored sites.

# the eight symmetries of the square lattice, as integer matrices
LATTICE_SYMMETRIES = (
    ((1, 0), (0, 1)),
    ((0, -1), (1, 0)),
    ((-1, 0), (0, -1)),
    ((0, 1), (-1, 0)),
    ((1, 0), (0, -1)),
    ((-1, 0), (0, 1)),
    ((0, 1), (1, 0)),
    ((0, -1), (-1, 0)),
)


@dataclass(frozen=True)
class HexagonSite:
    """Translation ``(i, j)`` and lattice symmetry index ``sym`` of one site."""

    i: int = 0
    j: int = 0
    sym: int = 0


def _square_torus_lists(n: int) -> dict:
    rows = {}
    for i in range(n):
        for j in range(n):
            rows[(i, j)] = [((i + 1) % n, j), (i, (j - 1) % n), ((i - 1) % n, j), (i, (j + 1) % n)]
    return rows


def hexagon_site_rotation(n: int, sites) -> RotationSystem:
    """Rotation system of the n x n square torus with the given hexagon sites."""
    rows = _square_torus_lists(n)
    touched = set()
    for s, site in enumerate(sites):
        (a, b), (c, d) = LATTICE_SYMMETRIES[site.sym]

        def P(x, y):
            return ((site.i + a * x + b * y) % n, (site.j + c * x + d * y) % n)

        X, Y, Z = ("X", s), ("Y", s), ("Z", s)
        block = {P(x, y) for x in range(4) for y in range(2)}
        if block & touched:
            raise ValueError(f"hexagon site {site} overlaps an earlier site")
        touched |= block

        def replace(u, old, new):
            row = rows[u]
            row[row.index(old)] = new

        def insert_between(u, p, q, new):
            row = rows[u]
            k, m = row.index(p), row.index(q)
            if (k + 1) % len(row) == m:
                row.insert(m if m else len(row), new)
            elif (m + 1) % len(row) == k:
                row.insert(k if k else len(row), new)
            else:
                raise ValueError(f"{p} and {q} are not consecutive at {u}")

        rows[P(1, 0)].remove(P(1, 1))
        rows[P(1, 1)].remove(P(1, 0))  # re-added through X below
        insert_between(P(1, 1), P(2, 1), P(0, 1), X)
        replace(P(2, 0), P(2, 1), Z)
        replace(P(2, 1), P(2, 0), Z)
        insert_between(P(0, 0), P(0, 1), P(1, 0), Y)
        mirrored = a * d - b * c < 0
        rows[X] = [Y, P(1, 1), Z]
        rows[Y] = [P(0, 0), X]
        rows[Z] = [P(2, 0), X, P(2, 1)]
        if mirrored:
            rows[X].reverse()
            rows[Z].reverse()
    labels = sorted(k for k in rows if isinstance(k[0], int)) + sorted(k for k in rows if isinstance(k[0], str))
    index = {v: t for t, v in enumerate(labels)}
    return RotationSystem.from_simple([[index[w] for w in rows[v]] for v in labels])


# ----------------------------------------------------------------------
# self-dual polyhedral maps in every genus up to 4

# both pieces live on the 5 x 5 square torus; G has one hexagon site, H two
SELFDUAL_PIECES = {
    "G": (HexagonSite(0, 0, 0),),
    "H": (HexagonSite(0, 0, 0), HexagonSite(0, 2, 0)),
}
# every join in a chain G - H - ... - H - G matches the hexagons this way
SELFDUAL_JOIN = (4, True)


def _check_piece(name: str, m: FlagSystem) -> None:
    k = len(SELFDUAL_PIECES[name])
    s = summary(m)
    faces = s.face_profile()
    problems = []
    if s.genus != 1:
        problems.append(f"genus {s.genus}")
    if (s.vertex_count, s.face_count) != (25 + 3 * k, 25 + k):
        problems.append(f"{s.vertex_count} vertices and {s.face_count} faces")
    if faces != {4: 25 - 2 * k, 5: 2 * k, 6: k}:
        problems.append(f"face sizes {faces}")
    for f in np.flatnonzero(m.face_sizes == 6):
        # the hexagon corners have low degree so that gluing gives degrees 4 and 5
        if m.degrees[m.face_walk(int(f))].sum() != 20:
            problems.append(f"hexagon {int(f)} has corner degrees {m.degrees[m.face_walk(int(f))].tolist()}")
    others = [v for v in range(m.vertex_count)
              if not any(m.face_sizes[m.face_of[x]] == 6 for x in np.flatnonzero(m.vertex_of == v))]
    if set(m.degrees[others].tolist()) - {4, 5}:
        problems.append("a vertex off the hexagons has degree outside 4..5")
    if problems:
        raise ValueError(f"piece {name} does not match its description: {'; '.join(problems)}")


@lru_cache(maxsize=None)
def selfdual_piece(name: str) -> FlagSystem:
    """The torus piece ``G`` or ``H``, read from its shipped ``.rot`` file and checked."""
    from .io import parse_rot
    from .library import FIXTURE_DIR

    path = FIXTURE_DIR / f"selfdual_{name}.rot"
    m = from_rotation_system(parse_rot(path.read_text(), str(path)))
    _check_piece(name, m)
    return m


def _hexagons(m: FlagSystem) -> list[int]:
    return [int(f) for f in np.flatnonzero(m.face_sizes == 6)]


def glue_chain(pieces, join=SELFDUAL_JOIN) -> FlagSystem:
    """Glue pieces in a row; each step uses the one open hexagon of the partial result
    and the first hexagon of the next piece."""
    out = pieces[0]
    for p in pieces[1:]:
        (h,) = _hexagons(out)
        out = glue_along_face(GlueSpec(out, h, p, _hexagons(p)[0], *join))
    return out


@lru_cache(maxsize=None)
def selfdual(genus: int) -> FlagSystem:
    """A self-dual polyhedral map of the given genus.

    Genus 0 is the tetrahedron, genus 1 the 5 x 5 square torus, and genus
    ``g >= 2`` the chain G, H (g - 2 times), G.
    """
    if genus < 0:
        raise ValueError("genus must be non-negative")
    if genus == 0:
        return platonic("tetrahedron")
    if genus == 1:
        return square_torus(5)
    g, h = selfdual_piece("G"), selfdual_piece("H")
    m = glue_chain([g] + [h] * (genus - 2) + [g])
    s = summary(m)
    if s.genus != genus or set(s.face_profile()) - {4, 5} or set(s.degree_profile()) - {4, 5}:
        raise ValueError(f"glued chain has genus {s.genus}, faces {s.face_profile()}, degrees {s.degree_profile()}")
    return m


# ----------------------------------------------------------------------
# witness corpus for the table of small operations


@lru_cache(maxsize=None)
def witness_corpus(genus_cap: int = 3) -> dict:
    """Maps of each genus ``<= genus_cap`` on which operations are tested, as (name, map) lists."""
    from .flags import dual

    corpus = {0: [(n, platonic(n)) for n in PLATONIC]}
    if genus_cap >= 1:
        corpus[1] = [
            ("hex_torus_3_3", hex_torus(3, 3)),
            ("triangular_torus_3_3", triangular_torus(3, 3)),
            ("square_torus_5", square_torus(5)),
        ]
    for g in range(2, genus_cap + 1):
        corpus[g] = [(f"H_{g}", h_family(g)), (f"dual_H_{g}", dual(h_family(g))), (f"selfdual_{g}", selfdual(g))]
    return {g: v for g, v in corpus.items() if g <= genus_cap}
