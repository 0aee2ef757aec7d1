"""Goldberg-Coxeter patches GC(l, m) and their factorisations."""
from mapsym.families import platonic
from mapsym.flags import summary
from mapsym.goldberg import GCParams, classify_point, gc_patch, verify_gc_decomposition
from mapsym.operations import apply

for lm in [(1, 0), (2, 0), (3, 0), (1, 1), (2, 2), (4, 0)]:
    params = GCParams(*lm)
    p = gc_patch(params)
    fullerene = summary(apply(p, platonic("dodecahedron"))[0])
    print(f"GC{lm}: {p.inflation_factor:>2} chambers, v1 is a {classify_point(params.v1).name.lower():<13} "
          f"dodecahedron -> {fullerene.vertex_count} vertices")

print()
for lm in [(3, 0), (6, 0), (1, 1), (2, 2), (3, 3)]:
    r = verify_gc_decomposition(lm)
    print(f"GC{r.lhs} = GC{r.rhs[0]} o GC{r.rhs[1]}: {'verified' if r.ok else 'FAILED'}")
