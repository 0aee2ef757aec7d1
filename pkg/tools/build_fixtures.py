"""Regenerate the shipped patch and map fixtures.

Patches whose layout is fixed by a composition are built from it; the rest
are picked out of the exhaustive enumeration of c3-lsp-operations by the
properties that name them.  Every named patch is then checked against all
compositional identities that apply to it before anything is written.
"""
from __future__ import annotations

import sys
from pathlib import Path

import numpy as np

from mapsym.catalog import c3_rows
from mapsym.families import (
    PLATONIC,
    SELFDUAL_PIECES,
    h_family,
    hex_torus,
    hexagon_site_rotation,
    platonic,
    square_torus,
)
from mapsym.flags import summary
from mapsym.goldberg import gc_patch
from mapsym.io import emit_lsp, emit_rot
from mapsym.library import FIXTURE_DIR, TABLE_ROWS
from mapsym.operations import DUAL, IDENTITY, apply, compose, patch_from_chambers, patches_isomorphic, post_dual, pre_dual

CUBE = platonic("cube")


def truncate_patch():
    # chambers (w, v1, v2), (w, m, v2), (w, m, v0) of the corner cut
    adj = -np.ones((3, 3), dtype=np.int64)
    adj[1, 0], adj[1, 1] = 1, 0
    adj[2, 1], adj[2, 2] = 2, 1
    return patch_from_chambers(adj, [(2, 2), (0, 1), (0, 2)])


def ambo_patch():
    # chambers (v1, m, v0) and (v1, m, v2) sharing the edge v1-m
    adj = -np.ones((3, 2), dtype=np.int64)
    adj[2, 0], adj[2, 1] = 1, 0
    return patch_from_chambers(adj, [(0, 2), (0, 0), (1, 2)])


def _find(k, test):
    hits = [p for row in c3_rows(k) for p in row if test(p)]
    if len(hits) != 1:
        raise SystemExit(f"expected one match with {k} chambers, got {len(hits)}")
    return hits[0]


def _profile(p):
    s = summary(apply(p, CUBE)[0])
    return s.vertex_count, s.face_count, s.degree_profile(), s.face_profile()


def loft_patch():
    # original vertices double their degree, each face gains an inset copy
    # joined by quadrangles
    return _find(5, lambda p: _profile(p) == (32, 30, {3: 24, 6: 8}, {4: 30}))


def quinto_patch():
    # each face gets an inset copy ringed by pentagons
    return _find(6, lambda p: _profile(p) == (44, 30, {3: 32, 4: 12}, {4: 6, 5: 24}))


def o6a_patch():
    def ok(p):
        if p.special_colours[2] != 2:
            return False
        for m in (platonic(n) for n in PLATONIC):
            r, lab = apply(p, m)
            deg = r.degrees
            if set(deg.tolist()) != {3, 6}:
                return False
            fc = lab.element_class(r, 2)
            only6 = {f for f in range(r.face_count) if all(deg[v] == 6 for v in r.face_walk(f))}
            if only6 != set(np.flatnonzero(fc == p.special[2]).tolist()):
                return False
        return True

    return _find(6, ok)


def o6d_patch():
    # v0 of colour 0 sitting only in quadrangles, v2 faces at least hexagons
    def ok(p):
        if p.special_colours[0] != 0 or p.special_colours[2] != 2:
            return False
        r, lab = apply(p, CUBE)
        fc = lab.element_class(r, 2)
        vc = lab.element_class(r, 0)
        if not all(r.face_sizes[f] >= 6 for f in np.flatnonzero(fc == p.special[2])):
            return False
        quads_only = set()
        for v in range(r.vertex_count):
            faces = set(r.face_of[r.vertex_of == v].tolist())
            if all(r.face_sizes[f] == 4 for f in faces):
                quads_only.add(v)
        return quads_only == set(np.flatnonzero(vc == p.special[0]).tolist())

    return _find(6, ok)


def main():
    D = DUAL
    A = ambo_patch()
    T = truncate_patch()
    base = {
        "identity": IDENTITY,
        "ambo": A,
        "truncate": T,
        "expand": compose(A, A),
        "chamfer": gc_patch((2, 0)),
        "o_5": post_dual(pre_dual(loft_patch())),
        "o_6a": o6a_patch(),
        "o_6b": compose(T, compose(D, A)),
        "bevel": compose(T, A),
        "o_6d": o6d_patch(),
        "o_6e": compose(A, T),
        "quinto": quinto_patch(),
    }
    named = {}
    for row in TABLE_ROWS:
        o = base[row.name]
        candidates = [o, post_dual(o), pre_dual(o), post_dual(pre_dual(o))]
        distinct = []
        for q in candidates:
            if not any(patches_isomorphic(q, r) for r in distinct):
                distinct.append(q)
        if len(distinct) != len(row.members):
            raise SystemExit(f"row {row.label}: {len(distinct)} distinct members, table lists {len(row.members)}")
        for name, q in zip(row.members, distinct):
            named[name] = q.renamed(name)

    # compositional cross-checks
    checks = {
        "dual": DUAL,
        "expand": compose(A, A),
        "bevel": compose(T, A),
        "o_6b": compose(T, compose(D, A)),
        "o_6e": compose(A, T),
        "chamfer": gc_patch((2, 0)),
        "zip": gc_patch((1, 1)),
        "needle": post_dual(T),
        "loft": loft_patch(),
        "quinto": quinto_patch(),
    }
    for name, q in checks.items():
        assert patches_isomorphic(named[name], q), name
    assert patches_isomorphic(named["zip"], compose(T, D))
    assert _profile(named["ambo"])[2] == {4: 12}

    # every enumerated c3 operation is named exactly once
    total = sum(len(row) for k in range(1, 7) for row in c3_rows(k))
    assert total == len(named), (total, len(named))
    for k in range(1, 7):
        for row in c3_rows(k):
            for p in row:
                assert sum(patches_isomorphic(p, q) for q in named.values()) == 1

    FIXTURE_DIR.mkdir(exist_ok=True)
    for name, q in named.items():
        (FIXTURE_DIR / f"{name}.lsp").write_text(emit_lsp(q))
    for name in PLATONIC:
        (FIXTURE_DIR / f"{name}.rot").write_text(emit_rot(platonic(name), comment=name))
    (FIXTURE_DIR / "square_torus_5.rot").write_text(emit_rot(square_torus(5), comment="5 x 5 square tiling of the torus"))
    (FIXTURE_DIR / "hex_torus_3_3.rot").write_text(emit_rot(hex_torus(3, 3), comment="honeycomb with 9 hexagons on the torus"))
    for g in (2, 3, 4):
        (FIXTURE_DIR / f"H_{g}.rot").write_text(emit_rot(h_family(g), comment=f"H_{g}"))
    for name, sites in SELFDUAL_PIECES.items():
        text = emit_rot(hexagon_site_rotation(5, sites), comment=f"piece {name}: 5 x 5 square torus with {len(sites)} hexagon site(s)")
        (FIXTURE_DIR / f"selfdual_{name}.rot").write_text(text)
    print(f"wrote {len(named)} patches to {FIXTURE_DIR}")


if __name__ == "__main__":
    sys.exit(main())
