"""Search the square torus for the one-hexagon map used in the self-dual gluing.

Three squares of the n x n square tiling (in a row or an L) are merged into
one face, which is then refilled by three ears (a chord subdivided k times,
3 new vertices in total).  A candidate is kept when the faces are one
hexagon, two pentagons and otherwise squares, and gluing two copies along
the hexagon (for some offset and flip) gives a self-dual polyhedral map of
genus 2 with all faces and degrees 4 or 5.
"""
import itertools
import sys

import numpy as np

from mapsym.analysis import is_self_dual
from mapsym.families import GlueSpec, glue_along_face, square_torus
from mapsym.flags import FlagSystem, MapError, summary
from mapsym.polyhedral import is_polyhedral


def delete_edge(m: FlagSystem, e: int) -> FlagSystem:
    s = m.sigma.copy()
    gone = np.flatnonzero(m.edge_of == e)
    for x in gone:
        if m.edge_of[s[1, x]] == e:
            return None
    for x in gone:
        y = s[1, x]
        z = s[1, s[2, x]]
        s[1, y] = z
        s[1, z] = y
    keep = np.setdiff1d(np.arange(m.flag_count), gone)
    new = -np.ones(m.flag_count, dtype=np.int64)
    new[keep] = np.arange(len(keep))
    try:
        return FlagSystem.from_array(new[s[:, keep]])
    except MapError:
        return None


def add_edge(m: FlagSystem, p: int, r: int):
    """Join the corners (p, s1 p) and (r, s1 r) of one face by a new edge."""
    n = m.flag_count
    s = np.concatenate([m.sigma, np.zeros((3, 4), dtype=np.int64)], axis=1)
    q, t = m.sigma[1, p], m.sigma[1, r]
    a, b, c, d = n, n + 1, n + 2, n + 3
    s[1, p], s[1, a] = a, p
    s[1, q], s[1, b] = b, q
    s[1, r], s[1, c] = c, r
    s[1, t], s[1, d] = d, t
    s[2, a], s[2, b] = b, a
    s[2, c], s[2, d] = d, c
    for x0, y0, x1, y1 in ((a, c, b, d), (a, d, b, c)):
        s[0, x0], s[0, y0], s[0, x1], s[0, y1] = y0, x0, y1, x1
        try:
            out = FlagSystem.from_array(s.copy())
        except MapError:
            continue
        if out.face_count == m.face_count + 1:
            return out
    return None


def subdivide_edge(m: FlagSystem, e: int) -> FlagSystem:
    """Put a new degree-2 vertex in the middle of edge ``e``."""
    flags = np.flatnonzero(m.edge_of == e)
    n = m.flag_count
    hat = {int(x): n + i for i, x in enumerate(flags)}
    s = np.concatenate([m.sigma, np.zeros((3, 4), dtype=np.int64)], axis=1)
    for x in hat:
        s[0, x], s[0, hat[x]] = hat[x], x
        s[1, hat[x]] = hat[int(m.sigma0[x])]
        s[2, hat[x]] = hat[int(m.sigma2[x])]
    return FlagSystem.from_array(s)


def profile_ok(m: FlagSystem) -> bool:
    sizes = m.face_sizes.tolist()
    return sizes.count(6) == 1 and sizes.count(5) == 2 and sizes.count(4) == len(sizes) - 3


def gluings(g: FlagSystem):
    hexagon = int(np.flatnonzero(g.face_sizes == 6)[0])
    for offset in range(6):
        for flip in (False, True):
            try:
                glued = glue_along_face(GlueSpec(g, hexagon, g, hexagon, offset, flip))
            except (ValueError, MapError):
                continue
            yield offset, flip, glued


def _face_between(m, u, v):
    ends = m.edge_endpoints().tolist()
    for e, (a, b) in enumerate(ends):
        if {a, b} == {u, v}:
            return e
    raise KeyError((u, v))


def merged_region(n, shape):
    """Square torus with three squares merged; returns the map and the region flags."""
    base = square_torus(n)
    vid = lambda i, j: (i % n) * n + (j % n)  # noqa: E731  matches the lattice numbering
    if shape == "I":
        cuts = [((1, 0), (1, 1)), ((2, 0), (2, 1))]
    else:
        cuts = [((1, 0), (1, 1)), ((1, 1), (2, 1))]
    m = base
    for (a, b) in cuts:
        e = _face_between(m, vid(*a), vid(*b))
        m = delete_edge(m, e)
    big = int(np.argmax(m.face_sizes))
    return m, set(np.flatnonzero(m.face_of == big).tolist())


def fills(m, region, budget, ears):
    """All ways to add ``ears`` ears with ``budget`` interior vertices in total."""
    if ears == 0:
        if budget == 0:
            yield m
        return
    n0 = len(region)
    in_region = lambda x: x in region or x >= base_n  # noqa: E731
    faces = {int(m.face_of[x]) for x in range(m.flag_count) if in_region(x)}
    for f in sorted(faces):
        corners = np.flatnonzero((m.face_of == f) & (m.orientation == 0)).tolist()
        for p, r in itertools.combinations(corners, 2):
            if m.vertex_of[p] == m.vertex_of[r]:
                continue
            g = add_edge(m, p, r)
            if g is None:
                continue
            for k in range(budget + 1) if ears > 1 else [budget]:
                h = g
                e = int(h.edge_of[m.flag_count])
                for _ in range(k):
                    h = subdivide_edge(h, e)
                    e = int(h.edge_of[h.flag_count - 4])
                yield from fills(h, region, budget - k, ears - 1)
    del n0


base_n = 0


def main(n=5, limit=4):
    global base_n
    found = []
    seen = 0
    for shape in ("I", "L"):
        m, region = merged_region(n, shape)
        base_n = m.flag_count
        for g in fills(m, region, 3, 3):
            seen += 1
            if not profile_ok(g):
                continue
            deg = g.degrees
            if deg.min() < 2:
                continue
            for offset, flip, glued in gluings(g):
                s = summary(glued)
                if s.genus != 2 or set(s.face_profile()) - {4, 5} or set(s.degree_profile()) - {4, 5}:
                    continue
                if not is_polyhedral(glued) or not is_self_dual(glued):
                    continue
                found.append((shape, g, offset, flip))
                print("found", shape, offset, flip, s.face_profile(), s.degree_profile(), flush=True)
                if len(found) >= limit:
                    print("candidates", seen)
                    return found
    print("candidates", seen)
    return found


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 5)
