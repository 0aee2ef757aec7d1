"""Barycentric subdivisions viewed as coloured chamber complexes.

The chambers of the barycentric subdivision of a map are its flags, so a
chamber complex is just a flag system whose colours are significant:
``sigma[i]`` crosses the chamber side opposite the colour-``i`` corner.
"""
from __future__ import annotations

import numpy as np

from .flags import FlagSystem

# (corner colour, opposite-side colour) pairs of the six flags of one triangle
_PAIRS = [(a, b) for a in range(3) for b in range(3) if a != b]
_SLOT = {pair: i for i, pair in enumerate(_PAIRS)}


class ChamberComplex(FlagSystem):
    """A flag system read as the coloured chamber complex of a subdivision."""

    def __init__(self, sigma0, sigma1, sigma2, check: bool = True):
        super().__init__(sigma0, sigma1, sigma2, colored=True, check=check)

    @property
    def chamber_count(self) -> int:
        return self.flag_count

    def colour_vertices(self, colour: int) -> np.ndarray:
        """Label of the colour-``colour`` corner of every chamber."""
        return self.element_of(colour)


def barycentric(m: FlagSystem) -> ChamberComplex:
    return ChamberComplex(m.sigma[0], m.sigma[1], m.sigma[2], check=False)


def map_from_chambers(c: FlagSystem) -> FlagSystem:
    """Recover the map whose subdivision is ``c`` (vertices = colour-0 corners)."""
    return FlagSystem(c.sigma[0], c.sigma[1], c.sigma[2], colored=False, check=False)


def triangle_map(adj: np.ndarray) -> tuple[FlagSystem, np.ndarray, int]:
    """Flag system of the surface built from rainbow triangles.

    ``adj[b, c]`` is the chamber across the side of chamber ``c`` opposite its
    colour-``b`` corner, or -1 on the boundary.  Every boundary component is
    closed off by one extra face.  Returns the flag system, the colour of each
    flag's vertex, and the index of the first boundary-face flag (flags
    ``6*c + slot`` belong to chamber ``c``).
    """
    adj = np.asarray(adj, dtype=np.int64)
    k = adj.shape[1]
    n_inner = 6 * k
    boundary = [(c, b) for c in range(k) for b in range(3) if adj[b, c] < 0]
    outer_index = {}
    for i, (c, b) in enumerate(boundary):
        for j, a in enumerate(x for x in range(3) if x != b):
            outer_index[(c, b, a)] = n_inner + 2 * i + j
    n = n_inner + 2 * len(boundary)
    s0 = np.empty(n, dtype=np.int64)
    s1 = np.empty(n, dtype=np.int64)
    s2 = np.empty(n, dtype=np.int64)
    colour = np.empty(n, dtype=np.int64)
    for c in range(k):
        for (a, b), slot in _SLOT.items():
            f = 6 * c + slot
            third = 3 - a - b
            colour[f] = a
            s0[f] = 6 * c + _SLOT[(third, b)]
            s1[f] = 6 * c + _SLOT[(a, third)]
            nb = adj[b, c]
            s2[f] = 6 * nb + slot if nb >= 0 else outer_index[(c, b, a)]
    for (c, b, a), f in outer_index.items():
        colour[f] = a
        s2[f] = 6 * c + _SLOT[(a, b)]
        s0[f] = outer_index[(c, b, 3 - a - b)]
        # walk around the corner of colour a to the next boundary side
        cur, side = c, 3 - a - b
        while adj[side, cur] >= 0:
            cur = adj[side, cur]
            side = 3 - a - side
        s1[f] = outer_index[(cur, side, a)]
    return FlagSystem(s0, s1, s2, check=False), colour, n_inner


def subdivision_as_map(c: FlagSystem) -> tuple[FlagSystem, np.ndarray]:
    """The barycentric subdivision as an ordinary triangulated map.

    Returns the map and the colour (0, 1 or 2) of each of its vertices.
    """
    m, colour, _ = triangle_map(c.sigma)
    vertex_colour = np.empty(m.vertex_count, dtype=np.int64)
    vertex_colour[m.vertex_of] = colour
    return m, vertex_colour
