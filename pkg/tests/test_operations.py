import dataclasses
import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from mapsym.analysis import are_isomorphic, group_order
from mapsym.families import PLATONIC, h_family, platonic, square_torus
from mapsym.flags import RotationSystem, dual, summary
from mapsym.library import PATCH_NAMES, TABLE_ROWS, patch, row_of
from mapsym.operations import (
    DUAL,
    IDENTITY,
    LspValidationError,
    apply,
    compose,
    is_c3,
    lsp_violations,
    patches_isomorphic,
    post_dual,
    pre_dual,
    validate_lsp,
)

SMALL = ("ambo", "truncate", "kis", "zip", "chamfer", "expand", "dual")


def clauses(data):
    return {v.clause for v in lsp_violations(data)}


def test_identity_and_dual_act_as_expected():
    m = h_family(2)
    assert apply(IDENTITY, m)[0] == m
    d = apply(DUAL, m)[0]
    assert are_isomorphic(d, dual(m))
    assert patches_isomorphic(compose(DUAL, DUAL), IDENTITY)


def test_known_identities():
    A, T, D = patch("ambo"), patch("truncate"), DUAL
    assert are_isomorphic(apply(A, platonic("tetrahedron"))[0], platonic("octahedron"))
    assert are_isomorphic(apply(A, platonic("cube"))[0], apply(A, platonic("octahedron"))[0])
    assert patches_isomorphic(post_dual(A), A) is False
    assert patches_isomorphic(pre_dual(A), A)  # ambo is symmetric under duality of the input
    assert patches_isomorphic(patch("kis"), compose(D, compose(T, D)))
    assert patches_isomorphic(patch("expand"), compose(A, A))
    assert patches_isomorphic(patch("join"), post_dual(A))


def test_truncated_cube_counts():
    s = summary(apply(patch("truncate"), platonic("cube"))[0])
    assert (s.vertex_count, s.edge_count, s.face_count) == (24, 36, 14)
    assert s.face_profile() == {3: 8, 8: 6}


@pytest.mark.parametrize("name", PATCH_NAMES)
def test_every_named_patch_is_c3_with_its_row_inflation(name):
    p = patch(name)
    assert is_c3(p)
    assert p.inflation_factor == row_of(name).inflation
    assert p.chamber_count == p.inflation_factor


def test_named_patches_are_pairwise_distinct():
    ps = [patch(n) for n in PATCH_NAMES]
    for a, b in itertools.combinations(ps, 2):
        if a.inflation_factor == b.inflation_factor:
            assert not patches_isomorphic(a, b), (a.name, b.name)


def test_table_rows_are_closed_under_duality():
    for row in TABLE_ROWS:
        members = [patch(n) for n in row.members]
        o = members[0]
        for q in (post_dual(o), pre_dual(o), post_dual(pre_dual(o))):
            assert any(patches_isomorphic(q, m) for m in members), row.label


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(SMALL), st.sampled_from(SMALL), st.sampled_from(sorted(PLATONIC) + ["square_torus_4"]))
def test_apply_respects_composition(a, b, mapname):
    m = square_torus(4) if mapname == "square_torus_4" else platonic(mapname)
    pa, pb = patch(a), patch(b)
    lhs = apply(compose(pa, pb), m)[0]
    rhs = apply(pa, apply(pb, m)[0])[0]
    assert are_isomorphic(lhs, rhs)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(PATCH_NAMES), st.sampled_from(sorted(PLATONIC)))
def test_edge_law_and_genus(name, mapname):
    p, m = patch(name), platonic(mapname)
    r, labels = apply(p, m)
    assert r.edge_count == p.inflation_factor * m.edge_count
    assert summary(r).genus == 0
    # every chamber of the result belongs to exactly one patch chamber class
    sizes = labels.class_sizes()
    assert sizes.sum() == r.flag_count and np.all(sizes == m.flag_count)


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(SMALL), st.sampled_from(SMALL), st.sampled_from(SMALL))
def test_compose_is_associative(a, b, c):
    pa, pb, pc = patch(a), patch(b), patch(c)
    assert patches_isomorphic(compose(compose(pa, pb), pc), compose(pa, compose(pb, pc)))


def test_operations_preserve_symmetry_at_least():
    m = platonic("cube")
    base = group_order(m)
    for name in PATCH_NAMES:
        assert group_order(apply(patch(name), m)[0]) % base == 0


# ---------------------------------------------------------------- validation


def _tweak(p, **changes):
    return dataclasses.replace(p.data, **changes)


def test_valid_data_has_no_violations():
    for name in PATCH_NAMES:
        assert lsp_violations(patch(name).data) == []


def test_same_colour_edge_is_reported():
    d = patch("truncate").data
    colours = list(d.colours)
    u, v = d.rotation.neighbors[0][0][0], 0
    colours[u] = colours[v]
    assert "edge joins vertices of the same colour" in clauses(_tweak(patch("truncate"), colours=tuple(colours)))


def test_bad_colours_and_special_vertices():
    p = patch("truncate")
    assert "colours must be 0, 1 or 2" in clauses(_tweak(p, colours=(3,) + p.data.colours[1:]))
    s = p.data.special
    assert "special vertices are not distinct" in clauses(_tweak(p, special=(s[0], s[0], s[2])))


def test_outer_walk_must_be_a_face():
    p = patch("ambo")
    walk = p.data.outer
    broken = walk[:1] + walk[2:] + walk[1:2]
    assert "outer walk is not a face" in clauses(_tweak(p, outer=broken))


def test_inner_faces_must_be_triangles():
    # a quadrangle with one diagonal missing
    rot = RotationSystem.from_simple([[1, 3], [2, 0], [3, 1], [0, 2]])
    p = patch("identity")
    data = dataclasses.replace(p.data, colours=(0, 1, 2, 1), rotation=rot, outer=(0, 1, 2, 3), special=(0, 1, 2))
    assert "inner face is not a triangle" in clauses(data)


def test_validate_raises_with_every_violation():
    p = patch("truncate")
    s = p.data.special
    bad = _tweak(p, special=(s[0], s[0], s[0]))
    with pytest.raises(LspValidationError) as err:
        validate_lsp(bad)
    assert len(err.value.violations) >= 1


def test_non_c3_patch_detected():
    # two chambers across their colour-0 side, with the special corners chosen
    # so that v0 and v1 carry the same colour: a valid lsp that is not c3
    from mapsym.operations import patch_from_chambers

    adj = -np.ones((3, 2), dtype=np.int64)
    adj[0, 0], adj[0, 1] = 1, 0
    p = patch_from_chambers(adj, [(0, 0), (1, 0), (0, 2)])
    assert p.special_colours == (0, 0, 2)
    assert not is_c3(p)
    q = patch_from_chambers(adj, [(0, 0), (0, 2), (1, 0)])
    assert is_c3(q) and patches_isomorphic(q, patch("join"))
