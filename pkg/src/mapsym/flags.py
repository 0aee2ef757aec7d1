"""Maps on orientable surfaces encoded as flag systems.

A flag is an incident triple (vertex, edge, face).  The three involutions
``sigma[i]`` replace the element of dimension ``i`` and keep the other two.
Flags are dense integers, the involutions are integer arrays.

Rotation systems are read clockwise.  A dart ``d`` leaving vertex ``u``
carries two flags: ``2*d`` ("+", the face clockwise after ``d``) and
``2*d + 1`` ("-", the face clockwise before ``d``).  With ``rot`` the
clockwise successor and ``rev`` the opposite dart::

    sigma0: 2d <-> 2 rev(d) + 1
    sigma1: 2d <-> 2 rot(d) + 1
    sigma2: 2d <-> 2d + 1
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components


class MapError(ValueError):
    """Raised for inputs that do not describe a connected orientable map."""


def _as_perm_array(values, n=None) -> np.ndarray:
    arr = np.asarray(values, dtype=np.int64)
    if arr.ndim != 1 or (n is not None and len(arr) != n):
        raise MapError("involution has the wrong length")
    return arr


def orbit_labels(n: int, *perms: np.ndarray) -> tuple[np.ndarray, int]:
    """Label the orbits of the group generated by ``perms`` on ``range(n)``.

    Labels are numbered in order of the smallest element of each orbit.
    """
    if n == 0:
        return np.zeros(0, dtype=np.int64), 0
    rows = np.concatenate([np.arange(n)] * len(perms))
    cols = np.concatenate(perms)
    graph = coo_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(n, n))
    count, labels = connected_components(graph, directed=False)
    # connected_components numbers components by discovery from node 0 upward,
    # which already orders them by smallest element
    return labels.astype(np.int64), int(count)


class FlagSystem:
    """A map given by three fixed-point-free involutions on its flags.

    ``colored`` marks whether the colours of the involutions matter, i.e.
    whether the object is read as a chamber complex rather than a bare map.
    Instances are immutable; the involution arrays are read-only.
    """

    __slots__ = ("sigma", "colored", "__dict__")

    def __init__(self, sigma0, sigma1, sigma2, colored: bool = False, check: bool = True):
        s0 = _as_perm_array(sigma0)
        n = len(s0)
        sigma = np.stack([s0, _as_perm_array(sigma1, n), _as_perm_array(sigma2, n)])
        sigma.setflags(write=False)
        self.sigma = sigma
        self.colored = bool(colored)
        if check:
            self.check()

    @classmethod
    def from_array(cls, sigma: np.ndarray, colored: bool = False, check: bool = True) -> "FlagSystem":
        return cls(sigma[0], sigma[1], sigma[2], colored=colored, check=check)

    @property
    def flag_count(self) -> int:
        return self.sigma.shape[1]

    @property
    def sigma0(self) -> np.ndarray:
        return self.sigma[0]

    @property
    def sigma1(self) -> np.ndarray:
        return self.sigma[1]

    @property
    def sigma2(self) -> np.ndarray:
        return self.sigma[2]

    def __eq__(self, other) -> bool:
        if not isinstance(other, FlagSystem):
            return NotImplemented
        return self.sigma.shape == other.sigma.shape and bool(np.array_equal(self.sigma, other.sigma))

    def __hash__(self) -> int:
        return hash(self.sigma.tobytes())

    def __repr__(self) -> str:
        return f"FlagSystem(flag_count={self.flag_count}, colored={self.colored})"

    def with_colored(self, colored: bool) -> "FlagSystem":
        return FlagSystem.from_array(self.sigma, colored=colored, check=False)

    # ------------------------------------------------------------------
    # validation

    def check(self) -> None:
        """Raise :class:`MapError` unless all flag-system invariants hold."""
        n = self.flag_count
        if n == 0 or n % 4:
            raise MapError(f"flag count {n} is not a positive multiple of 4")
        idx = np.arange(n)
        for i, s in enumerate(self.sigma):
            if s.min() < 0 or s.max() >= n:
                raise MapError(f"sigma{i} has images outside 0..{n - 1}")
            if not np.array_equal(s[s], idx):
                raise MapError(f"sigma{i} is not an involution")
            if np.any(s == idx):
                raise MapError(f"sigma{i} has a fixed point")
        s0, _, s2 = self.sigma
        s02 = s0[s2]
        if not np.array_equal(s02, s2[s0]) or np.any(s02 == idx):
            raise MapError("sigma0*sigma2 is not a fixed-point-free involution")
        if orbit_labels(n, *self.sigma)[1] != 1:
            raise MapError("flag system is disconnected")
        _ = self.orientation  # raises for non-orientable input

    # ------------------------------------------------------------------
    # derived structure

    @cached_property
    def orientation(self) -> np.ndarray:
        """Orientation class (0/1) of each flag; flag 0 has class 0."""
        n = self.flag_count
        side = np.full(n, -1, dtype=np.int8)
        side[0] = 0
        frontier = np.array([0])
        while len(frontier):
            nxt = []
            for s in self.sigma:
                img = s[frontier]
                want = 1 - side[frontier]
                seen = side[img] >= 0
                if np.any(side[img[seen]] != want[seen]):
                    raise MapError("flag system is not orientable")
                new = img[~seen]
                side[new] = want[~seen]
                nxt.append(new)
            frontier = np.unique(np.concatenate(nxt))
        if np.any(side < 0):
            raise MapError("flag system is disconnected")
        return side

    @cached_property
    def vertex_of(self) -> np.ndarray:
        return orbit_labels(self.flag_count, self.sigma[1], self.sigma[2])[0]

    @cached_property
    def edge_of(self) -> np.ndarray:
        return orbit_labels(self.flag_count, self.sigma[0], self.sigma[2])[0]

    @cached_property
    def face_of(self) -> np.ndarray:
        return orbit_labels(self.flag_count, self.sigma[0], self.sigma[1])[0]

    def element_of(self, dim: int) -> np.ndarray:
        """Orbit labels of the elements of dimension ``dim`` (0, 1 or 2)."""
        return (self.vertex_of, self.edge_of, self.face_of)[dim]

    @property
    def vertex_count(self) -> int:
        return int(self.vertex_of.max()) + 1

    @property
    def edge_count(self) -> int:
        return self.flag_count // 4

    @property
    def face_count(self) -> int:
        return int(self.face_of.max()) + 1

    @cached_property
    def degrees(self) -> np.ndarray:
        """Degree of every vertex (number of edge ends)."""
        return np.bincount(self.vertex_of) // 2

    @cached_property
    def face_sizes(self) -> np.ndarray:
        return np.bincount(self.face_of) // 2

    def face_walk(self, face: int) -> list[int]:
        """Vertices along the boundary walk of ``face``.

        The walk starts at the lowest flag of the face that lies in the
        orientation class of flag 0, so every face is read the same way round.
        """
        members = np.flatnonzero(self.face_of == face)
        try:
            members = members[self.orientation[members] == self.orientation[0]]
        except MapError:
            pass
        start = int(members[0])
        s0, s1, _ = self.sigma
        walk = []
        f = start
        while True:
            walk.append(int(self.vertex_of[f]))
            f = s1[s0[f]]
            if f == start:
                return walk

    def edge_endpoints(self) -> np.ndarray:
        """Array of shape (E, 2) with the two end vertices of every edge."""
        first = np.full(self.edge_count, -1, dtype=np.int64)
        order = np.arange(self.flag_count)[::-1]
        first[self.edge_of[order]] = order
        v = self.vertex_of
        return np.stack([v[first], v[self.sigma[0][first]]], axis=1)


@dataclass(frozen=True)
class MapSummary:
    vertex_count: int
    edge_count: int
    face_count: int
    genus: int
    face_sizes: tuple[int, ...]
    vertex_degrees: tuple[int, ...]

    @property
    def euler_characteristic(self) -> int:
        return self.vertex_count - self.edge_count + self.face_count

    def face_profile(self) -> dict[int, int]:
        return dict(sorted(Counter(self.face_sizes).items()))

    def degree_profile(self) -> dict[int, int]:
        return dict(sorted(Counter(self.vertex_degrees).items()))


def summary(m: FlagSystem) -> MapSummary:
    V, E, F = m.vertex_count, m.edge_count, m.face_count
    chi = V - E + F
    if chi > 2 or chi % 2:
        raise MapError(f"Euler characteristic {chi} is not that of an orientable surface")
    return MapSummary(
        vertex_count=V,
        edge_count=E,
        face_count=F,
        genus=(2 - chi) // 2,
        face_sizes=tuple(sorted(int(x) for x in m.face_sizes)),
        vertex_degrees=tuple(sorted(int(x) for x in m.degrees)),
    )


def dual(m: FlagSystem) -> FlagSystem:
    """Swap the roles of vertices and faces."""
    return FlagSystem(m.sigma[2], m.sigma[1], m.sigma[0], colored=m.colored, check=False)


@dataclass(frozen=True)
class RotationSystem:
    """Clockwise cyclic dart lists.

    ``neighbors[u][j] = (v, k)`` says that the ``j``-th dart at ``u`` runs to
    ``v`` and is paired with the ``k``-th dart at ``v``.  Parallel edges and
    loops are allowed.
    """

    neighbors: tuple[tuple[tuple[int, int], ...], ...]

    @property
    def n(self) -> int:
        return len(self.neighbors)

    @classmethod
    def from_simple(cls, adjacency) -> "RotationSystem":
        """Build from plain cyclic neighbour lists of a simple graph."""
        adjacency = [list(a) for a in adjacency]
        slots = []
        for u, nbrs in enumerate(adjacency):
            row = []
            for v in nbrs:
                back = [k for k, w in enumerate(adjacency[v]) if w == u]
                if len(back) != 1:
                    raise MapError(f"edge {u}-{v} is not listed exactly once at {v}")
                row.append((v, back[0]))
            slots.append(tuple(row))
        return cls(tuple(slots))

    def simple_lists(self) -> list[list[int]]:
        return [[v for v, _ in row] for row in self.neighbors]

    def degrees(self) -> list[int]:
        return [len(row) for row in self.neighbors]


def from_rotation_system(r: RotationSystem) -> FlagSystem:
    offsets = np.zeros(r.n + 1, dtype=np.int64)
    for u, row in enumerate(r.neighbors):
        if not row:
            raise MapError(f"vertex {u} has degree 0")
        offsets[u + 1] = offsets[u] + len(row)
    darts = int(offsets[-1])
    rot = np.empty(darts, dtype=np.int64)
    rev = np.empty(darts, dtype=np.int64)
    for u, row in enumerate(r.neighbors):
        deg = len(row)
        for j, (v, k) in enumerate(row):
            d = offsets[u] + j
            rot[d] = offsets[u] + (j + 1) % deg
            if not (0 <= v < r.n and 0 <= k < len(r.neighbors[v])):
                raise MapError(f"dart {u}:{j} points to a missing dart {v}:{k}")
            if r.neighbors[v][k] != (u, j):
                raise MapError(f"dart {u}:{j} -> {v}:{k} is not matched back")
            rev[d] = offsets[v] + k
    if np.any(rev == np.arange(darts)):
        raise MapError("a dart is matched with itself")
    plus = 2 * np.arange(darts)
    s0 = np.empty(2 * darts, dtype=np.int64)
    s1 = np.empty(2 * darts, dtype=np.int64)
    s0[plus] = 2 * rev + 1
    s0[2 * rev + 1] = plus
    s1[plus] = 2 * rot + 1
    s1[2 * rot + 1] = plus
    s2 = np.arange(2 * darts) ^ 1
    if orbit_labels(2 * darts, s0, s1, s2)[1] != 1:
        raise MapError("rotation system is disconnected")
    return FlagSystem(s0, s1, s2)


def to_rotation_system(m: FlagSystem, vertex_labels=None) -> RotationSystem:
    """Read off a clockwise rotation system.

    The flags in the orientation class of flag 0 play the role of the "+"
    flags.  ``vertex_labels`` optionally fixes the vertex numbering (a
    bijection from vertex orbits to ``range(V)``).
    """
    s0, s1, s2 = m.sigma
    plus = np.flatnonzero(m.orientation == 0)
    vert = m.vertex_of if vertex_labels is None else np.asarray(vertex_labels)[m.vertex_of]
    V = int(vert.max()) + 1
    lists: list[list[int]] = [[] for _ in range(V)]
    position = {}
    done = np.zeros(m.flag_count, dtype=bool)
    for f in plus:
        if done[f]:
            continue
        u = int(vert[f])
        g = int(f)
        cycle = []
        while not done[g]:
            done[g] = True
            cycle.append(g)
            g = int(s2[s1[g]])
        if lists[u]:
            raise MapError("vertex orbit visited twice")
        lists[u] = cycle
    for u, cycle in enumerate(lists):
        for j, g in enumerate(cycle):
            position[g] = (u, j)
    neighbors = []
    for u, cycle in enumerate(lists):
        neighbors.append(tuple(position[int(s2[s0[g]])] for g in cycle))
    return RotationSystem(tuple(neighbors))
