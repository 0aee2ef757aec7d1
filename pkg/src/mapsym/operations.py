"""Local symmetry preserving operations.

An operation is a 3-coloured plane patch of triangular chambers with three
marked outer vertices ``v0, v1, v2``.  Internally a patch is a partial chamber
system: ``adj[i, c]`` is the chamber across the side of chamber ``c``
opposite its colour-``i`` corner, or -1 when that side lies on the outer
face.  ``side[i, c]`` then names the outer side: side ``S_jk`` (between
``v_j`` and ``v_k``) is stored as the missing index ``l``, which is also the
involution of the host map that the side is glued across.

Applying a patch to a map never materialises copies.  The chamber ``(f, c)``
of the result (chamber ``c`` of the copy glued into flag ``f``) has the
index ``f * k + c`` and::

    sigma_i(f, c) = (f, adj[i, c])            if adj[i, c] >= 0
                  = (sigma_l(f), c)           with l = side[i, c] otherwise

A neighbouring flag carries the mirrored copy, whose chamber at the same
position along the shared side is the same chamber ``c``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .chambers import triangle_map
from .flags import FlagSystem, MapError, RotationSystem, from_rotation_system, to_rotation_system
from .polyhedral import articulation_points

SIDE_NAMES = {2: "S01", 0: "S12", 1: "S02"}


@dataclass(frozen=True)
class LspData:
    """Raw patch data as found in a ``.lsp`` file (0-indexed)."""

    colours: tuple[int, ...]
    rotation: RotationSystem
    outer: tuple[int, ...]
    special: tuple[int, int, int]


@dataclass(frozen=True)
class Violation:
    clause: str
    witness: tuple = ()

    def __str__(self) -> str:
        return f"{self.clause} {self.witness}" if self.witness else self.clause


class LspValidationError(ValueError):
    def __init__(self, violations: list[Violation]):
        self.violations = violations
        super().__init__("; ".join(str(v) for v in violations))


def _cyclic_match(walk, target, both_ways: bool = True) -> bool:
    n = len(walk)
    if n != len(target):
        return False
    for seq in (list(target), list(reversed(target)))[: 2 if both_ways else 1]:
        for r in range(n):
            if all(walk[(r + t) % n] == seq[t] for t in range(n)):
                return True
    return False


def _analyse(data: LspData):
    """Check every clause; return (violations, chamber structure or None)."""
    violations: list[Violation] = []
    n = len(data.colours)
    if data.rotation.n != n:
        return [Violation("colour list and rotation system disagree", (len(data.colours), data.rotation.n))], None
    bad_colours = [v for v, c in enumerate(data.colours) if c not in (0, 1, 2)]
    if bad_colours:
        return [Violation("colours must be 0, 1 or 2", tuple(bad_colours))], None
    try:
        plane = from_rotation_system(data.rotation)
        plane.check()
    except MapError as exc:
        return [Violation("not a connected map", (str(exc),))], None
    chi = plane.vertex_count - plane.edge_count + plane.face_count
    if chi != 2:
        violations.append(Violation("map is not plane", (chi,)))

    walks = [plane.face_walk(f) for f in range(plane.face_count)]
    outer_faces = [f for f, w in enumerate(walks) if _cyclic_match(w, data.outer, both_ways=False)]
    if len(outer_faces) != 1:
        outer_faces = [f for f, w in enumerate(walks) if _cyclic_match(w, data.outer)]
    if len(outer_faces) != 1:
        violations.append(Violation("outer walk is not a face", tuple(data.outer)))
        return violations, None
    outer = outer_faces[0]

    for f, w in enumerate(walks):
        if f != outer and len(w) != 3:
            violations.append(Violation("inner face is not a triangle", tuple(w)))

    colours = data.colours
    ends = plane.edge_endpoints()
    for u, v in ends.tolist():
        if colours[u] == colours[v]:
            violations.append(Violation("edge joins vertices of the same colour", (u, v)))

    adjacency = [sorted({v for v, _ in row if v != u}) for u, row in enumerate(data.rotation.neighbors)]
    cuts = articulation_points(adjacency)
    if cuts or n < 3:
        violations.append(Violation("map is not 2-connected", tuple(cuts)))

    deg = data.rotation.degrees()
    on_outer = set(walks[outer])
    v0, v1, v2 = data.special
    if len({v0, v1, v2}) != 3:
        violations.append(Violation("special vertices are not distinct", tuple(data.special)))
    for name, v in zip(("v0", "v1", "v2"), data.special):
        if not (0 <= v < n) or v not in on_outer:
            violations.append(Violation(f"{name} is not on the outer face", (v,)))
    for v in range(n):
        if colours[v] != 1 or v in data.special:
            continue
        if v in on_outer and deg[v] != 3:
            violations.append(Violation("outer vertex with c(v)=1 must have deg(v)=3", (v, deg[v])))
        if v not in on_outer and deg[v] != 4:
            violations.append(Violation("inner vertex with c(v)=1 must have deg(v)=4", (v, deg[v])))
    for name, v in (("v0", v0), ("v2", v2)):
        if 0 <= v < n and colours[v] == 1:
            violations.append(Violation(f"c({name}) must not be 1", (v,)))
    if 0 <= v1 < n and colours[v1] == 1 and deg[v1] != 2:
        violations.append(Violation("c(v1)=1 requires deg(v1)=2", (v1, deg[v1])))
    if violations:
        return violations, None
    return [], (plane, outer, walks[outer])


def _chambers_from_plane(plane: FlagSystem, outer: int, colours):
    faces = [f for f in range(plane.face_count) if f != outer]
    index = {f: i for i, f in enumerate(faces)}
    k = len(faces)
    verts = np.full((k, 3), -1, dtype=np.int64)
    adj = np.full((3, k), -1, dtype=np.int64)
    s0, _, s2 = plane.sigma
    vert, face = plane.vertex_of, plane.face_of
    for x in range(plane.flag_count):
        fx = int(face[x])
        if fx == outer:
            continue
        c = index[fx]
        a = colours[int(vert[x])]
        verts[c, a] = vert[x]
        b = 3 - a - colours[int(vert[s0[x]])]
        other = int(face[s2[x]])
        if other != outer:
            adj[b, c] = index[other]
    return verts, adj


def _orient_outer(walk, special):
    """Rotate/reverse the outer walk so it reads v0 ... v1 ... v2."""
    v0, v1, v2 = special
    t = walk.index(v0)
    walk = walk[t:] + walk[:t]
    if walk.index(v1) > walk.index(v2):
        walk = [walk[0]] + walk[1:][::-1]
    return walk


class OperationPatch:
    """A validated lsp-operation.  Build with :func:`validate_lsp` or :func:`patch_from_chambers`."""

    def __init__(self, data: LspData, verts: np.ndarray, adj: np.ndarray, outer_walk, name: str | None = None):
        self.data = data
        self.name = name
        self.verts = verts
        self.adj = adj
        self.verts.setflags(write=False)
        self.adj.setflags(write=False)
        walk = _orient_outer(list(outer_walk), data.special)
        self.outer_walk = tuple(walk)
        v0, v1, v2 = data.special
        i1, i2 = walk.index(v1), walk.index(v2)
        self.sides = {
            "S01": tuple(walk[: i1 + 1]),
            "S12": tuple(walk[i1: i2 + 1]),
            "S02": tuple([v0] + walk[i2:][::-1]),
        }
        label = {}
        L = len(walk)
        for t in range(L):
            u, w = walk[t], walk[(t + 1) % L]
            label[frozenset((u, w))] = 2 if t < i1 else (0 if t < i2 else 1)
        k = adj.shape[1]
        side = np.full((3, k), -1, dtype=np.int64)
        for c in range(k):
            for i in range(3):
                if adj[i, c] < 0:
                    j, l = [x for x in range(3) if x != i]
                    side[i, c] = label[frozenset((int(verts[c, j]), int(verts[c, l])))]
        side.setflags(write=False)
        self.side = side

    def __repr__(self) -> str:
        tag = f"{self.name!r}, " if self.name else ""
        return f"OperationPatch({tag}chambers={self.chamber_count}, v0..v2 colours={self.special_colours})"

    @property
    def chamber_count(self) -> int:
        return self.adj.shape[1]

    @property
    def inflation_factor(self) -> int:
        return self.chamber_count

    @property
    def colours(self) -> tuple[int, ...]:
        return self.data.colours

    @property
    def special(self) -> tuple[int, int, int]:
        return self.data.special

    @property
    def special_colours(self) -> tuple[int, int, int]:
        return tuple(self.colours[v] for v in self.special)

    @property
    def vertex_count(self) -> int:
        return len(self.colours)

    def chambers_at(self, v: int) -> int:
        """Number of chambers containing vertex ``v``."""
        return int(np.count_nonzero(self.verts == v))

    def special_chamber(self, i: int) -> tuple[int, int]:
        """A (chamber, colour) pair locating special vertex ``v_i``."""
        v = self.special[i]
        c, a = np.argwhere(self.verts == v)[0]
        return int(c), int(a)

    @cached_property
    def plane_map(self) -> FlagSystem:
        return from_rotation_system(self.data.rotation)

    def renamed(self, name: str | None) -> "OperationPatch":
        return OperationPatch(self.data, self.verts.copy(), self.adj.copy(), self.outer_walk, name=name)


def lsp_violations(data: LspData) -> list[Violation]:
    """All violated clauses of the lsp definition (empty for a valid patch)."""
    return _analyse(data)[0]


def validate_lsp(data: LspData, name: str | None = None) -> OperationPatch:
    violations, found = _analyse(data)
    if violations:
        raise LspValidationError(violations)
    plane, outer, walk = found
    verts, adj = _chambers_from_plane(plane, outer, data.colours)
    return OperationPatch(data, verts, adj, walk, name=name)


def inflation_factor(p: OperationPatch) -> int:
    return p.inflation_factor


def _canonical_chamber_order(adj: np.ndarray, start: int) -> list[int]:
    k = adj.shape[1]
    order = [start]
    seen = {start}
    head = 0
    while head < len(order):
        c = order[head]
        head += 1
        for i in range(3):
            d = int(adj[i, c])
            if d >= 0 and d not in seen:
                seen.add(d)
                order.append(d)
    if len(order) != k:
        raise LspValidationError([Violation("chambers are not connected")])
    return order


def patch_from_chambers(adj, special, name: str | None = None, start: int | None = None) -> OperationPatch:
    """Build and validate a patch from a partial chamber system.

    ``special`` holds three ``(chamber, colour)`` pairs locating ``v0, v1,
    v2``.  Chambers are relabelled breadth-first from ``start`` (default: the
    chamber holding ``v2``) so equal inputs produce identical patches.
    """
    adj = np.asarray(adj, dtype=np.int64)
    k = adj.shape[1]
    if start is None:
        start = special[2][0]
    order = _canonical_chamber_order(adj, start)
    new = {c: i for i, c in enumerate(order)}
    adj = np.array([[new[int(adj[i, c])] if adj[i, c] >= 0 else -1 for c in order] for i in range(3)], dtype=np.int64)
    special = [(new[c], a) for c, a in special]

    # corners (c, colour) glued together form vertices
    parent = list(range(3 * k))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for c in range(k):
        for i in range(3):
            d = adj[i, c]
            if d >= 0:
                for a in range(3):
                    if a != i:
                        ra, rb = find(3 * c + a), find(3 * int(d) + a)
                        if ra != rb:
                            parent[max(ra, rb)] = min(ra, rb)
    vid = {}
    verts = np.empty((k, 3), dtype=np.int64)
    for c in range(k):
        for a in range(3):
            r = find(3 * c + a)
            if r not in vid:
                vid[r] = len(vid)
            verts[c, a] = vid[r]
    colours = [0] * len(vid)
    for c in range(k):
        for a in range(3):
            colours[verts[c, a]] = a

    plane, flag_colour, n_inner = triangle_map(adj)
    flag_vertex = np.empty(plane.flag_count, dtype=np.int64)
    flag_vertex[: n_inner] = verts[np.arange(n_inner) // 6, flag_colour[: n_inner]]
    # boundary flags take the vertex of the inner flag across sigma2
    outer_flags = np.arange(n_inner, plane.flag_count)
    flag_vertex[outer_flags] = flag_vertex[plane.sigma2[outer_flags]]
    labels = np.empty(plane.vertex_count, dtype=np.int64)
    labels[plane.vertex_of] = flag_vertex
    if len(np.unique(labels)) != len(labels) or len(labels) != len(vid):
        raise LspValidationError([Violation("chamber system is not a disk (pinched vertex)")])
    rotation = to_rotation_system(plane, vertex_labels=labels)
    outer_faces = np.unique(plane.face_of[n_inner:])
    if len(outer_faces) != 1:
        raise LspValidationError([Violation("chamber system boundary is not a single cycle", (len(outer_faces),))])
    walk = [int(labels[v]) for v in plane.face_walk(int(outer_faces[0]))]
    spec = tuple(int(verts[c, a]) for c, a in special)
    data = LspData(tuple(colours), rotation, tuple(walk), spec)
    return validate_lsp(data, name=name)


# ----------------------------------------------------------------------
# application


@dataclass(frozen=True)
class ClassLabeling:
    """Which patch element each element of ``O(P)`` is a copy of."""

    patch: OperationPatch
    chamber_class: np.ndarray
    source_flag: np.ndarray

    def element_class(self, result: FlagSystem, dim: int) -> np.ndarray:
        """Patch vertex copied by each colour-``dim`` vertex of the result's subdivision."""
        labels = result.element_of(dim)
        out = np.empty(int(labels.max()) + 1, dtype=np.int64)
        out[labels] = self.patch.verts[self.chamber_class, dim]
        return out

    def class_sizes(self) -> np.ndarray:
        return np.bincount(self.chamber_class, minlength=self.patch.chamber_count)


def apply(p: OperationPatch, m: FlagSystem, check: bool = False) -> tuple[FlagSystem, ClassLabeling]:
    """Glue a copy of ``p`` (or its mirror image) into every chamber of ``m``."""
    k = p.chamber_count
    n = m.flag_count
    f = np.repeat(np.arange(n), k)
    c = np.tile(np.arange(k), n)
    sigma = np.empty((3, n * k), dtype=np.int64)
    for i in range(3):
        inner = p.adj[i, c]
        l = p.side[i, c]
        glued = m.sigma[np.maximum(l, 0), f]
        sigma[i] = np.where(inner >= 0, f * k + inner, glued * k + c)
    result = FlagSystem.from_array(sigma, colored=False, check=check)
    return result, ClassLabeling(p, c, f)


def compose(o: OperationPatch, o2: OperationPatch, name: str | None = None) -> OperationPatch:
    """The operation ``o`` after ``o2``: a copy of ``o`` in every chamber of ``o2``."""
    k, k2 = o.chamber_count, o2.chamber_count
    c2 = np.repeat(np.arange(k2), k)
    c = np.tile(np.arange(k), k2)
    adj = np.empty((3, k * k2), dtype=np.int64)
    for i in range(3):
        inner = o.adj[i, c]
        l = o.side[i, c]
        across = o2.adj[np.maximum(l, 0), c2]
        adj[i] = np.where(inner >= 0, c2 * k + inner, np.where(across >= 0, across * k + c, -1))
    special = []
    for i in range(3):
        ch2, col = o2.special_chamber(i)
        ch, a = o.special_chamber(col)
        special.append((ch2 * k + ch, a))
    return patch_from_chambers(adj, special, name=name)


def _single_chamber(colours, name):
    # one chamber; v_i sits at the corner of colour colours[i]
    adj = -np.ones((3, 1), dtype=np.int64)
    return patch_from_chambers(adj, [(0, colours[0]), (0, colours[1]), (0, colours[2])], name=name)


IDENTITY = _single_chamber((0, 1, 2), "identity")
DUAL = _single_chamber((2, 1, 0), "dual")


def post_dual(p: OperationPatch) -> OperationPatch:
    """``D o O``: colours 0 and 2 of the result exchanged."""
    return compose(DUAL, p)


def pre_dual(p: OperationPatch) -> OperationPatch:
    """``O o D``: the roles of ``v0`` and ``v2`` exchanged."""
    return compose(p, DUAL)


def patch_isomorphism(a: OperationPatch, b: OperationPatch) -> np.ndarray | None:
    """Chamber bijection respecting colours, outer sides and special vertices."""
    if a.chamber_count != b.chamber_count or a.special_colours != b.special_colours:
        return None
    k = a.chamber_count
    order = _canonical_chamber_order(a.adj, 0)
    for target in range(k):
        phi = np.full(k, -1, dtype=np.int64)
        phi[0] = target
        ok = True
        for c in order:
            pc = phi[c]
            for i in range(3):
                d, e = a.adj[i, c], b.adj[i, pc]
                if (d < 0) != (e < 0):
                    ok = False
                    break
                if d < 0:
                    if a.side[i, c] != b.side[i, pc]:
                        ok = False
                        break
                    continue
                if phi[d] < 0:
                    phi[d] = e
                elif phi[d] != e:
                    ok = False
                    break
            if not ok:
                break
        if not ok or len(set(phi.tolist())) != k:
            continue
        vmap = {}
        for c in range(k):
            for i in range(3):
                u, w = int(a.verts[c, i]), int(b.verts[phi[c], i])
                if vmap.setdefault(u, w) != w:
                    ok = False
        if ok and all(vmap.get(a.special[i]) == b.special[i] for i in range(3)):
            return phi
    return None


def patches_isomorphic(a: OperationPatch, b: OperationPatch) -> bool:
    return patch_isomorphism(a, b) is not None


def is_c3(p: OperationPatch) -> bool:
    """Polyhedrality of ``p`` applied to the tetrahedron decides c3 status."""
    from .families import platonic
    from .polyhedral import is_polyhedral

    result, _ = apply(p, platonic("tetrahedron"))
    return bool(is_polyhedral(result))
