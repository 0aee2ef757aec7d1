"""Goldberg-Coxeter patches GC(l,0) and GC(l,l).

Points are written in the basis ``e1 = (1, 0)``, ``e2`` at 60 degrees of the
triangular lattice formed by the vertices and face centres of the hexagonal
tiling.  The origin is a face centre.  Incidence tests only need barycentric
signs, which are affine invariant, so the skew basis never has to be turned
into Cartesian coordinates.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

import numpy as np

from .operations import OperationPatch, compose, patch_isomorphism, patch_from_chambers

# unit steps of the triangular lattice, counter-clockwise
_STEPS = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)]


class PointKind(Enum):
    FACE_CENTER = 2
    VERTEX = 0
    EDGE_MIDPOINT = 1
    NONE = -1


@dataclass(frozen=True)
class HexPoint:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))
        if (2 * self.x).denominator != 1 or (2 * self.y).denominator != 1:
            raise ValueError(f"coordinates must be multiples of 1/2: {self}")

    def __add__(self, other: "HexPoint") -> "HexPoint":
        return HexPoint(self.x + other.x, self.y + other.y)

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


def classify_point(p: HexPoint) -> PointKind:
    x, y = p.x, p.y
    if x.denominator == 1 and y.denominator == 1:
        return PointKind.FACE_CENTER if (x - y) % 3 == 0 else PointKind.VERTEX
    if (2 * (x - y)) % 3 == 0:
        return PointKind.EDGE_MIDPOINT
    return PointKind.NONE


@dataclass(frozen=True)
class GCParams:
    l: int
    m: int

    def __post_init__(self):
        if not (isinstance(self.l, int) and isinstance(self.m, int)):
            raise ValueError("GC parameters must be integers")
        if not ((self.m == 0 and self.l >= 1) or (self.l == self.m and self.l >= 1)):
            raise ValueError(f"GC({self.l},{self.m}) not supported: need m = 0 < l or l = m > 0")

    @property
    def v0(self) -> HexPoint:
        return HexPoint(self.l, self.m)

    @property
    def v1(self) -> HexPoint:
        # midpoint of v0 and its image under a 60 degree turn, (-m, l + m)
        return HexPoint(Fraction(self.l - self.m, 2), Fraction(self.l + 2 * self.m, 2))

    @property
    def v2(self) -> HexPoint:
        return HexPoint(0, 0)

    @property
    def inflation_factor(self) -> int:
        return self.l * self.l + self.l * self.m + self.m * self.m


def _orient(a, b, c) -> Fraction:
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def _location(tri, p) -> int:
    """1 strictly inside, 0 on the boundary, -1 outside the triangle ``tri``."""
    signs = [_orient(tri[i], tri[(i + 1) % 3], p) for i in range(3)]
    area = _orient(*tri)
    signs = [s * (1 if area > 0 else -1) for s in signs]
    if any(s < 0 for s in signs):
        return -1
    return 1 if all(s > 0 for s in signs) else 0


def _chambers_near(lo_x, hi_x, lo_y, hi_y):
    """Chamber triangles (vertex, midpoint, centre) around centres in a box."""
    for cx in range(lo_x, hi_x + 1):
        for cy in range(lo_y, hi_y + 1):
            if (cx - cy) % 3:
                continue
            for t in range(6):
                u = (cx + _STEPS[t][0], cy + _STEPS[t][1])
                w = (cx + _STEPS[(t + 1) % 6][0], cy + _STEPS[(t + 1) % 6][1])
                mid = (Fraction(u[0] + w[0], 2), Fraction(u[1] + w[1], 2))
                centre = (Fraction(cx), Fraction(cy))
                for vert in (u, w):
                    yield ((Fraction(vert[0]), Fraction(vert[1])), mid, centre)


def gc_chambers(params: GCParams):
    """The chambers of the hexagonal subdivision inside the cut triangle.

    Raises if a chamber straddles the boundary, which would mean the
    triangle sides do not run along chamber edges.
    """
    tri = [(p.x, p.y) for p in (params.v0, params.v1, params.v2)]
    xs = [t[0] for t in tri]
    ys = [t[1] for t in tri]
    box = (math.floor(min(xs)) - 2, math.ceil(max(xs)) + 2, math.floor(min(ys)) - 2, math.ceil(max(ys)) + 2)
    inside = []
    for ch in _chambers_near(*box):
        centroid = (sum(p[0] for p in ch) / 3, sum(p[1] for p in ch) / 3)
        where = _location(tri, centroid)
        corners = [_location(tri, p) for p in ch]
        if where > 0:
            if min(corners) < 0:
                raise ValueError(f"chamber {ch} straddles the boundary of GC{(params.l, params.m)}")
            inside.append(ch)
        elif where == 0 or (where < 0 and max(corners) > 0):
            raise ValueError(f"chamber {ch} straddles the boundary of GC{(params.l, params.m)}")
    return inside


def gc_patch(params: GCParams | tuple[int, int]) -> OperationPatch:
    if not isinstance(params, GCParams):
        params = GCParams(*params)
    chambers = gc_chambers(params)
    k = len(chambers)
    if k != params.inflation_factor:
        raise AssertionError(f"GC{(params.l, params.m)} cut {k} chambers, expected {params.inflation_factor}")
    # two chambers are adjacent across the side opposite colour i when they
    # share the other two corners
    sides = {}
    adj = -np.ones((3, k), dtype=np.int64)
    for c, ch in enumerate(chambers):
        for i in range(3):
            key = tuple(ch[j] for j in range(3) if j != i) + (i,)
            if key in sides:
                d = sides.pop(key)
                adj[i, c], adj[i, d] = d, c
            else:
                sides[key] = c

    special = []
    for name, point in (("v0", params.v0), ("v1", params.v1), ("v2", params.v2)):
        kind = classify_point(point)
        if kind is PointKind.NONE:
            raise ValueError(f"{name} = {point} is not a vertex of the subdivision")
        xy = (point.x, point.y)
        holder = next(c for c, ch in enumerate(chambers) if ch[kind.value] == xy)
        special.append((holder, kind.value))
    return patch_from_chambers(adj, special, name=f"gc({params.l},{params.m})")


def v0_chamber_incidence(params: GCParams | tuple[int, int]) -> tuple[int, int, int]:
    """Colour of v0 and the number of patch chambers at v0 and at v2."""
    p = gc_patch(params)
    v0, _, v2 = p.special
    return p.colours[v0], p.chambers_at(v0), p.chambers_at(v2)


@dataclass(frozen=True)
class DecompositionReport:
    ok: bool
    lhs: tuple[int, int]
    rhs: tuple[tuple[int, int], tuple[int, int]]
    witness: np.ndarray | None

    def __bool__(self) -> bool:
        return self.ok


def verify_gc_decomposition(params: GCParams | tuple[int, int]) -> DecompositionReport:
    """Check GC(3k,0) = GC(k,k) o GC(1,1) or GC(l,l) = GC(l,0) o GC(1,1)."""
    if not isinstance(params, GCParams):
        params = GCParams(*params)
    l, m = params.l, params.m
    if m == 0 and l % 3 == 0:
        outer = (l // 3, l // 3)
    elif l == m:
        outer = (l, 0)
    else:
        raise ValueError(f"GC({l},{m}) is not covered by the decomposition")
    composed = compose(gc_patch(outer), gc_patch((1, 1)))
    phi = patch_isomorphism(gc_patch(params), composed)
    return DecompositionReport(phi is not None, (l, m), (outer, (1, 1)), phi)
