"""Polyhedrality of embedded graphs."""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

from .flags import FlagSystem


@dataclass(frozen=True)
class PolyhedralReport:
    ok: bool
    condition: str | None = None
    witness: tuple = field(default=())

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "polyhedral"
        return f"not polyhedral: {self.condition} {self.witness}"


def _simple_adjacency(m: FlagSystem):
    ends = m.edge_endpoints()
    adj: list[set[int]] = [set() for _ in range(m.vertex_count)]
    seen: dict[tuple[int, int], int] = {}
    for e, (u, v) in enumerate(ends.tolist()):
        if u == v:
            return None, PolyhedralReport(False, "loop", (e, u))
        key = (min(u, v), max(u, v))
        if key in seen:
            return None, PolyhedralReport(False, "parallel edges", (seen[key], e, key))
        seen[key] = e
        adj[u].add(v)
        adj[v].add(u)
    return [sorted(a) for a in adj], None


def articulation_points(adj, removed=-1) -> list[int]:
    """Cut vertices of the graph ``adj`` with vertex ``removed`` deleted.

    Returns ``[-1]`` if the remaining graph is disconnected.
    """
    n = len(adj)
    disc = [-1] * n
    low = [0] * n
    cuts = set()
    root = 0 if removed != 0 else 1
    if root >= n:
        return []
    timer = 0
    disc[root] = low[root] = timer
    timer += 1
    root_children = 0
    stack = [(root, -1, iter(adj[root]))]
    while stack:
        u, parent, it = stack[-1]
        advanced = False
        for w in it:
            if w == removed or w == parent:
                continue
            if disc[w] < 0:
                disc[w] = low[w] = timer
                timer += 1
                if u == root:
                    root_children += 1
                stack.append((w, u, iter(adj[w])))
                advanced = True
                break
            low[u] = min(low[u], disc[w])
        if advanced:
            continue
        stack.pop()
        if parent >= 0:
            low[parent] = min(low[parent], low[u])
            if parent != root and low[u] >= disc[parent]:
                cuts.add(parent)
    if any(disc[v] < 0 for v in range(n) if v != removed):
        return [-1]
    if root_children > 1:
        cuts.add(root)
    return sorted(cuts)


def is_3_connected(adj) -> tuple[bool, tuple]:
    """Vertex 3-connectivity; the witness is a separating set of size < 3."""
    n = len(adj)
    if n < 4:
        return False, ("fewer than 4 vertices",)
    cuts = articulation_points(adj)
    if cuts:
        return False, ((),) if cuts == [-1] else ((cuts[0],),)
    for x in range(n):
        cuts = articulation_points(adj, removed=x)
        if cuts:
            return False, ((x, cuts[0]),)
    return True, ()


def graph_conditions(m: FlagSystem) -> PolyhedralReport:
    """Only the graph part of polyhedrality: simple and 3-connected."""
    adj, bad = _simple_adjacency(m)
    if bad is not None:
        return bad
    ok, witness = is_3_connected(adj)
    if not ok:
        return PolyhedralReport(False, "not 3-connected", witness)
    return PolyhedralReport(True)


def is_polyhedral(m: FlagSystem) -> PolyhedralReport:
    """Simple, 3-connected, faces are disks meeting in a vertex, an edge or not at all."""
    adj, bad = _simple_adjacency(m)
    if bad is not None:
        return bad
    ok, witness = is_3_connected(adj)
    if not ok:
        return PolyhedralReport(False, "not 3-connected", witness)

    walks = [m.face_walk(f) for f in range(m.face_count)]
    for f, walk in enumerate(walks):
        if len(set(walk)) != len(walk):
            return PolyhedralReport(False, "face boundary is not a simple cycle", (f, tuple(walk)))

    faces_at = defaultdict(set)
    for f, walk in enumerate(walks):
        for v in walk:
            faces_at[v].add(f)
    shared_vertices: dict[tuple[int, int], list[int]] = defaultdict(list)
    for v, faces in faces_at.items():
        fs = sorted(faces)
        for i, a in enumerate(fs):
            for b in fs[i + 1:]:
                shared_vertices[(a, b)].append(v)
    edge_faces = defaultdict(set)
    face_of, edge_of = m.face_of, m.edge_of
    for e, f in zip(edge_of.tolist(), face_of.tolist()):
        edge_faces[e].add(f)
    shared_edges: dict[tuple[int, int], int] = defaultdict(int)
    for e, fs in edge_faces.items():
        if len(fs) == 2:
            a, b = sorted(fs)
            shared_edges[(a, b)] += 1
    for pair, verts in sorted(shared_vertices.items()):
        if len(verts) == 1:
            continue
        if len(verts) == 2 and shared_edges.get(pair, 0) == 1:
            continue
        return PolyhedralReport(False, "faces meet in a disconnected set or more than an edge", (pair, tuple(sorted(verts))))
    return PolyhedralReport(True)


def underlying_graph(m: FlagSystem) -> list[list[int]]:
    """Sorted neighbour lists of a simple map (raises on loops/multi-edges)."""
    adj, bad = _simple_adjacency(m)
    if bad is not None:
        raise ValueError(str(bad))
    return adj


__all__ = ["PolyhedralReport", "is_polyhedral", "graph_conditions", "is_3_connected", "articulation_points", "underlying_graph"]
