"""Self-dual polyhedral maps of genus 0 to 5.

The higher-genus maps are chains of square-torus pieces glued along
hexagons: G, then some copies of H, then G again.  Each join adds one to
the genus.
"""
from mapsym.analysis import is_self_dual
from mapsym.families import selfdual, selfdual_piece
from mapsym.flags import summary
from mapsym.polyhedral import is_polyhedral

for name in ("G", "H"):
    s = summary(selfdual_piece(name))
    print(f"piece {name}: V={s.vertex_count} F={s.face_count} faces {s.face_profile()} degrees {s.degree_profile()}")

print()
for genus in range(6):
    m = selfdual(genus)
    s = summary(m)
    print(f"genus {s.genus}: V={s.vertex_count:>3} E={s.edge_count:>3} F={s.face_count:>3} "
          f"polyhedral={bool(is_polyhedral(m))} self-dual={is_self_dual(m)}")
