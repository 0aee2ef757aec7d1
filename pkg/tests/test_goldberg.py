from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from mapsym.families import platonic
from mapsym.goldberg import (
    GCParams,
    HexPoint,
    PointKind,
    classify_point,
    gc_chambers,
    gc_patch,
    v0_chamber_incidence,
    verify_gc_decomposition,
)
from mapsym.library import patch
from mapsym.operations import IDENTITY, apply, compose, is_c3, patches_isomorphic


def test_point_classes():
    assert classify_point(HexPoint(0, 0)) is PointKind.FACE_CENTER
    assert classify_point(HexPoint(3, 0)) is PointKind.FACE_CENTER
    assert classify_point(HexPoint(1, 1)) is PointKind.FACE_CENTER
    assert classify_point(HexPoint(1, 0)) is PointKind.VERTEX
    assert classify_point(HexPoint(2, 0)) is PointKind.VERTEX
    assert classify_point(HexPoint(Fraction(1, 2), Fraction(1, 2))) is PointKind.EDGE_MIDPOINT
    assert classify_point(HexPoint(Fraction(1, 2), 0)) is PointKind.NONE


def test_half_integers_only():
    with pytest.raises(ValueError):
        HexPoint(Fraction(1, 3), 0)


@pytest.mark.parametrize("lm", [(0, 0), (0, 1), (2, 1), (-1, 0), (1, 2)])
def test_unsupported_parameters(lm):
    with pytest.raises(ValueError):
        GCParams(*lm)


@pytest.mark.parametrize("lm", [(1, 0), (2, 0), (3, 0), (4, 0), (1, 1), (2, 2), (3, 3), (6, 0)])
def test_chamber_count_is_the_inflation_factor(lm):
    params = GCParams(*lm)
    l, m = lm
    assert params.inflation_factor == l * l + l * m + m * m
    assert len(gc_chambers(params)) == params.inflation_factor
    p = gc_patch(params)
    assert p.inflation_factor == params.inflation_factor
    assert is_c3(p)


def test_v1_is_never_a_vertex():
    for l in range(1, 9):
        kind = classify_point(GCParams(l, 0).v1)
        assert kind is (PointKind.FACE_CENTER if l % 2 == 0 else PointKind.EDGE_MIDPOINT)
    for l in range(1, 6):
        assert classify_point(GCParams(l, l).v1) in (PointKind.FACE_CENTER, PointKind.EDGE_MIDPOINT)


def test_v0_incidences():
    assert v0_chamber_incidence((2, 0)) == (0, 1, 1)
    assert v0_chamber_incidence((3, 0)) == (2, 2, 1)
    assert v0_chamber_incidence((1, 1)) == (2, 2, 1)


def test_small_cases_are_known_operations():
    assert patches_isomorphic(gc_patch((1, 0)), IDENTITY)
    assert patches_isomorphic(gc_patch((2, 0)), patch("chamfer"))
    assert patches_isomorphic(gc_patch((1, 1)), patch("zip"))
    assert patches_isomorphic(gc_patch((1, 1)), compose(patch("truncate"), patch("dual")))


@pytest.mark.parametrize("lm", [(3, 0), (6, 0), (1, 1), (2, 2), (3, 3)])
def test_decompositions(lm):
    report = verify_gc_decomposition(lm)
    assert report.ok


def test_gc_on_the_dodecahedron_gives_fullerenes():
    # GC(l, m) of a cubic map only adds hexagons
    for lm in ((2, 0), (1, 1), (3, 0), (2, 2)):
        r = apply(gc_patch(lm), platonic("dodecahedron"))[0]
        assert set(r.degrees.tolist()) == {3}
        sizes = r.face_sizes.tolist()
        assert sizes.count(5) == 12 and set(sizes) == {5, 6}


@settings(max_examples=10, deadline=None)
@given(st.integers(1, 5), st.booleans())
def test_gc_composition_multiplies_inflation(k, diagonal):
    a = (k, k) if diagonal else (k, 0)
    c = compose(gc_patch(a), gc_patch((2, 0)))
    assert c.inflation_factor == 4 * GCParams(*a).inflation_factor
