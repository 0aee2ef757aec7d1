import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import counts, rows_from_rotation
from mapsym.chambers import barycentric, map_from_chambers
from mapsym.families import PLATONIC, platonic, square_torus
from mapsym.flags import FlagSystem, MapError, RotationSystem, dual, from_rotation_system, summary, to_rotation_system

PLATONIC_COUNTS = {
    "tetrahedron": (4, 6, 4),
    "cube": (8, 12, 6),
    "octahedron": (6, 12, 8),
    "dodecahedron": (20, 30, 12),
    "icosahedron": (12, 30, 20),
}


@pytest.mark.parametrize("name", PLATONIC)
def test_platonic_counts(name):
    s = summary(platonic(name))
    assert (s.vertex_count, s.edge_count, s.face_count) == PLATONIC_COUNTS[name]
    assert s.genus == 0
    assert platonic(name).flag_count == 4 * s.edge_count


def test_counts_match_independent_face_tracing(corpus):
    for name, m in corpus:
        V, E, F, g, faces = counts(rows_from_rotation(to_rotation_system(m)))
        s = summary(m)
        assert (s.vertex_count, s.edge_count, s.face_count, s.genus) == (V, E, F, g), name
        assert s.face_profile() == faces, name


def test_dual_swaps_vertices_and_faces(corpus):
    for name, m in corpus:
        d = dual(m)
        assert d.vertex_count == m.face_count and d.face_count == m.vertex_count
        assert sorted(d.degrees.tolist()) == sorted(m.face_sizes.tolist())
        assert dual(d) == m


def test_rejects_non_involution():
    s = np.array([[1, 0, 3, 2], [1, 2, 3, 0], [2, 3, 0, 1]])
    with pytest.raises(MapError):
        FlagSystem.from_array(s)


def test_rejects_fixed_points():
    with pytest.raises(MapError):
        FlagSystem([0, 1], [1, 0], [1, 0])


def test_rotation_round_trip(corpus):
    for name, m in corpus:
        r = to_rotation_system(m)
        back = from_rotation_system(r)
        assert summary(back) == summary(m), name


def test_parallel_edges_in_rotation_system():
    # two vertices joined by three edges: the dual of a triangle on the sphere
    tri = from_rotation_system(RotationSystem.from_simple([[1, 2], [2, 0], [0, 1]]))
    theta = dual(tri)
    assert (theta.vertex_count, theta.edge_count, theta.face_count) == (2, 3, 3)
    assert summary(from_rotation_system(to_rotation_system(theta))) == summary(theta)


def test_barycentric_subdivision_is_lossless():
    m = platonic("cube")
    c = barycentric(m)
    assert c.colored and c.chamber_count == 48
    assert map_from_chambers(c) == m
    # colour-1 corners of the subdivision are the edge midpoints
    assert len(np.unique(c.colour_vertices(1))) == 12


@settings(max_examples=20, deadline=None)
@given(st.integers(min_value=3, max_value=9))
def test_square_torus_counts(n):
    s = summary(square_torus(n))
    assert (s.vertex_count, s.edge_count, s.face_count, s.genus) == (n * n, 2 * n * n, n * n, 1)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(sorted(PLATONIC)), st.randoms(use_true_random=False))
def test_relabelling_flags_keeps_counts(name, rnd):
    m = platonic(name)
    perm = np.arange(m.flag_count)
    rnd.shuffle(perm)
    inv = np.argsort(perm)
    relabelled = FlagSystem.from_array(perm[m.sigma[:, inv]])
    assert summary(relabelled) == summary(m)
