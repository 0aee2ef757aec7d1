"""Exhaustive enumeration of small c3-lsp-operations.

A patch with ``k`` chambers is a partial chamber system on ``k`` triangles
that forms a disk.  Because a disk is orientable its chambers split into two
classes with every adjacency joining the classes, so each ``adj[i]`` is a
partial matching between them.  For ``k <= 6`` all such systems are small
enough to list directly; each disk is then tried with every admissible
choice of special vertices and kept if applying it to the tetrahedron gives
a polyhedral map.
"""
from __future__ import annotations

import itertools
from collections import defaultdict
from functools import lru_cache

import numpy as np

from .operations import (
    LspValidationError,
    OperationPatch,
    is_c3,
    patch_from_chambers,
    patches_isomorphic,
    post_dual,
    pre_dual,
)


def _partial_matchings(left, right):
    """All partial matchings between two disjoint lists, as lists of pairs."""
    out = []
    for j in range(min(len(left), len(right)) + 1):
        for ls in itertools.combinations(left, j):
            for rs in itertools.permutations(right, j):
                out.append(list(zip(ls, rs)))
    return out


def _union_vertices(adj):
    k = adj.shape[1]
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
    roots = {}
    verts = np.empty((k, 3), dtype=np.int64)
    for c in range(k):
        for a in range(3):
            verts[c, a] = roots.setdefault(find(3 * c + a), len(roots))
    return verts, len(roots)


def _canonical_key(adj, marks):
    """Isomorphism-invariant key of a chamber system with marked corners.

    ``marks`` lists, per special vertex, the set of (chamber, colour) corners
    it occupies.  Breadth-first relabelling from each root is unique, so the
    minimum over roots is canonical.
    """
    k = adj.shape[1]
    best = None
    for root in range(k):
        order = [root]
        pos = {root: 0}
        head = 0
        while head < len(order):
            c = order[head]
            head += 1
            for i in range(3):
                d = int(adj[i, c])
                if d >= 0 and d not in pos:
                    pos[d] = len(order)
                    order.append(d)
        flat = tuple(pos[int(adj[i, c])] if adj[i, c] >= 0 else -1 for c in order for i in range(3))
        mk = tuple(tuple(sorted((pos[c], a) for c, a in m)) for m in marks)
        key = (flat, mk)
        if best is None or key < best:
            best = key
    return best


def _disks(k: int):
    """Connected bipartite partial chamber systems on ``k`` chambers (with repeats)."""
    for a in range(1, k // 2 + 1):
        white = list(range(a))
        black = list(range(a, k))
        matchings = _partial_matchings(white, black)
        for m0, m1, m2 in itertools.product(matchings, repeat=3):
            if len(m0) + len(m1) + len(m2) < k - 1:
                continue
            adj = -np.ones((3, k), dtype=np.int64)
            for i, m in enumerate((m0, m1, m2)):
                for u, w in m:
                    adj[i, u], adj[i, w] = w, u
            yield adj
    if k == 1:
        yield -np.ones((3, 1), dtype=np.int64)


def _connected(adj) -> bool:
    k = adj.shape[1]
    seen = {0}
    stack = [0]
    while stack:
        c = stack.pop()
        for i in range(3):
            d = int(adj[i, c])
            if d >= 0 and d not in seen:
                seen.add(d)
                stack.append(d)
    return len(seen) == k


def _boundary_vertices(adj, verts):
    """Vertices on boundary sides, or None if this is not a disk."""
    k = adj.shape[1]
    n_inner_sides = int(np.count_nonzero(adj >= 0)) // 2
    n_boundary = 3 * k - 2 * n_inner_sides
    n_vertices = int(verts.max()) + 1
    # a disk has V - E + F = 1 and as many boundary vertices as boundary sides
    if n_vertices - (n_inner_sides + n_boundary) + k != 1:
        return None
    on = set()
    for c in range(k):
        for i in range(3):
            if adj[i, c] < 0:
                on.update(int(verts[c, a]) for a in range(3) if a != i)
    if len(on) != n_boundary:
        return None
    return sorted(on)


def enumerate_c3(k: int) -> list[OperationPatch]:
    """All c3-lsp-operations with ``k`` chambers, one patch per isomorphism class."""
    seen_disks = set()
    found = {}
    for adj in _disks(k):
        if not _connected(adj):
            continue
        dkey = _canonical_key(adj, ())
        if dkey in seen_disks:
            continue
        seen_disks.add(dkey)
        verts, nv = _union_vertices(adj)
        boundary = _boundary_vertices(adj, verts)
        if boundary is None:
            continue
        colour = np.empty(nv, dtype=np.int64)
        count = np.zeros(nv, dtype=np.int64)
        corners = defaultdict(list)
        for c in range(k):
            for a in range(3):
                colour[verts[c, a]] = a
                count[verts[c, a]] += 1
                corners[int(verts[c, a])].append((c, a))
        on = set(boundary)
        if any(colour[v] == 1 and v not in on and count[v] != 4 for v in range(nv)):
            continue
        odd = [v for v in boundary if colour[v] == 1 and count[v] != 2]
        if len(odd) > 1 or any(count[v] != 1 for v in odd):
            continue
        ends = [v for v in boundary if colour[v] != 1]
        middles = odd if odd else boundary
        for v1 in middles:
            for v0, v2 in itertools.permutations(ends, 2):
                if v1 in (v0, v2):
                    continue
                marks = [corners[v0], corners[v1], corners[v2]]
                key = _canonical_key(adj, [set(m) for m in marks])
                if key in found:
                    continue
                special = [marks[0][0], marks[1][0], marks[2][0]]
                try:
                    patch = patch_from_chambers(adj, special)
                except LspValidationError:
                    found[key] = None
                    continue
                found[key] = patch if is_c3(patch) else None
    return [p for p in found.values() if p is not None]


def dual_row(p: OperationPatch) -> list[OperationPatch]:
    """The distinct members of ``[O, D o O, O o D, D o O o D]``."""
    members = [p, post_dual(p), pre_dual(p), post_dual(pre_dual(p))]
    distinct = []
    for q in members:
        if not any(patches_isomorphic(q, r) for r in distinct):
            distinct.append(q)
    return distinct


@lru_cache(maxsize=None)
def c3_rows(k: int) -> tuple[tuple[OperationPatch, ...], ...]:
    """Rows of mutually dual-equivalent c3-lsp-operations with ``k`` chambers."""
    rows: list[list[OperationPatch]] = []
    for p in enumerate_c3(k):
        if any(any(patches_isomorphic(p, q) for q in row) for row in rows):
            continue
        rows.append(dual_row(p))
    return tuple(tuple(r) for r in rows)
