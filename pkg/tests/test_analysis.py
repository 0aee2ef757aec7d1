from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import brute_force_automorphisms, rows_from_rotation
from mapsym.analysis import (
    ALLOW_DUAL_SWAP,
    COLOUR_PRESERVING,
    ORIENTATION_PRESERVING,
    are_isomorphic,
    automorphisms,
    chamber_orbits,
    group_order,
    increases_symmetry,
    is_self_dual,
    isomorphism,
    self_duality,
    verify_tables,
)
from mapsym.families import PLATONIC, h_family, hex_torus, platonic, square_torus, triangular_torus
from mapsym.flags import FlagSystem, dual, to_rotation_system
from mapsym.library import patch
from mapsym.operations import apply

ORDERS = {"tetrahedron": 24, "cube": 48, "octahedron": 48, "dodecahedron": 120, "icosahedron": 120}


@pytest.mark.parametrize("name", PLATONIC)
def test_platonic_group_orders(name):
    m = platonic(name)
    assert group_order(m) == ORDERS[name]
    assert group_order(m, ORIENTATION_PRESERVING) == ORDERS[name] // 2
    swap = 2 * ORDERS[name] if name == "tetrahedron" else ORDERS[name]
    assert group_order(m, ALLOW_DUAL_SWAP) == swap


def test_torus_group_orders():
    # translations times the point group of the tiling
    assert group_order(square_torus(5)) == 25 * 8
    assert group_order(square_torus(5), ALLOW_DUAL_SWAP) == 400
    assert group_order(hex_torus(3, 3)) == 9 * 12
    assert group_order(triangular_torus(3, 3)) == 9 * 12


def test_elements_are_automorphisms():
    m = platonic("cube")
    rep = automorphisms(m)
    assert rep.elements.shape == (48, m.flag_count)
    for phi in rep.elements:
        for i in range(3):
            assert np.array_equal(phi[m.sigma[i]], m.sigma[i][phi])
    assert len({tuple(p) for p in rep.elements.tolist()}) == 48


def test_dual_swap_elements_exchange_colours():
    m = square_torus(4)
    rep = automorphisms(m, ALLOW_DUAL_SWAP)
    assert rep.group_order == 2 * group_order(m)
    swapping = [k for k in range(rep.group_order) if rep.swaps_colours(k)]
    assert len(swapping) == rep.group_order // 2
    phi = rep.elements[swapping[0]]
    assert np.array_equal(phi[m.sigma0], m.sigma2[phi])


def test_chamber_orbits_partition():
    labels, count = chamber_orbits(h_family(2))
    assert count == 2
    assert np.bincount(labels).tolist() == [48, 48]


@pytest.mark.parametrize("name", ["tetrahedron", "cube", "octahedron", "icosahedron"])
def test_group_order_agrees_with_oracle(name):
    rows = rows_from_rotation(to_rotation_system(platonic(name)))
    assert group_order(platonic(name)) == brute_force_automorphisms(rows)


def test_isomorphism_witness():
    m = platonic("cube")
    phi = isomorphism(apply(patch("ambo"), m)[0], apply(patch("ambo"), platonic("octahedron"))[0])
    assert phi is not None and len(set(phi.tolist())) == len(phi)
    assert not are_isomorphic(platonic("cube"), platonic("octahedron"))
    assert are_isomorphic(dual(platonic("cube")), platonic("octahedron"))


@settings(max_examples=15, deadline=None)
@given(st.sampled_from(sorted(PLATONIC) + ["H_2"]), st.randoms(use_true_random=False))
def test_isomorphic_to_any_relabelling(name, rnd):
    m = h_family(2) if name == "H_2" else platonic(name)
    perm = np.arange(m.flag_count)
    rnd.shuffle(perm)
    inv = np.argsort(perm)
    relabelled = FlagSystem.from_array(perm[m.sigma[:, inv]])
    assert are_isomorphic(m, relabelled)
    assert group_order(relabelled) == group_order(m)


def test_self_duality():
    assert is_self_dual(platonic("tetrahedron"))
    assert not is_self_dual(platonic("cube"))
    assert is_self_dual(square_torus(5))
    phi = self_duality(square_torus(4))
    assert phi is not None


def test_increase_report_for_ambo_on_the_tetrahedron():
    r = increases_symmetry(patch("ambo"), platonic("tetrahedron"))
    assert r.increased and r.ratio == Fraction(2)
    assert (r.order_before, r.order_after) == (24, 48)
    assert r.certificate is not None and r.crosses_every_chamber
    assert str(r) == "ratio 2/1, increased"


def test_no_increase_has_no_certificate():
    r = increases_symmetry(patch("ambo"), platonic("cube"))
    assert not r.increased and r.ratio == 1 and r.certificate is None
    assert str(r) == "ratio 1/1, not increased"


def test_increase_rejects_bad_inputs():
    from mapsym.flags import RotationSystem, from_rotation_system

    tri = from_rotation_system(RotationSystem.from_simple([[1, 2], [2, 0], [0, 1]]))
    with pytest.raises(ValueError):
        increases_symmetry(patch("ambo"), dual(tri))


def test_h_inputs_are_flagged_but_accepted():
    r = increases_symmetry(patch("truncate"), h_family(2))
    assert r.input_polyhedral is False
    assert r.ratio == 2


def test_verify_tables_with_a_custom_corpus():
    corpus = {0: [("tetrahedron", platonic("tetrahedron"))], 1: [("hex_torus_3_3", hex_torus(3, 3))]}
    checks = verify_tables(1, corpus=corpus)
    by = {(c.operation, c.genus): c for c in checks}
    assert by[("ambo", 0)].status == "ok" and by[("ambo", 0)].witnesses == ("tetrahedron",)
    assert by[("chamfer", 1)].observed
    # a "can increase" row without a witness is a gap, not a contradiction
    assert by[("truncate", 1)].status == "gap"
    assert not any(c.status == "contradiction" for c in checks)
