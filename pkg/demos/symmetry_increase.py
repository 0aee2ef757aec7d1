"""When does a local operation make a map more symmetric?

Walks through the three ways it happens for small operations: ambo on a
self-dual map, truncation on H_g, and chamfer on the honeycomb torus, and
shows a case where nothing happens (truncation of the Platonic solids).
Run with ``python demos/symmetry_increase.py``.
"""
from mapsym.analysis import chamber_orbits, group_order, increases_symmetry
from mapsym.families import PLATONIC, h_family, hex_torus, platonic, square_torus
from mapsym.library import patch
from mapsym.operations import apply


def show(op_name, map_name, m):
    r = increases_symmetry(patch(op_name), m)
    print(f"  {op_name:>9} on {map_name:<15} |Aut| {r.order_before:>4} -> {r.order_after:<4} {r}")


print("Ambo doubles the group of a self-dual map:")
show("ambo", "tetrahedron", platonic("tetrahedron"))
show("ambo", "square torus 5", square_torus(5))
show("ambo", "cube", platonic("cube"))

print("\nTruncation never helps on the sphere:")
for name in PLATONIC:
    show("truncate", name, platonic(name))

print("\n...but it does on H_g (orbits before -> after):")
for g in (2, 3, 4):
    h = h_family(g)
    t = apply(patch("truncate"), h)[0]
    print(f"  H_{g}: {chamber_orbits(h)[1]} -> {chamber_orbits(t)[1]} chamber orbits, "
          f"|Aut| {group_order(h)} -> {group_order(t)}")

print("\nChamfer (GC(2,0)) only on the torus:")
show("chamfer", "hex torus 3x3", hex_torus(3, 3))
show("chamfer", "dodecahedron", platonic("dodecahedron"))
