"""Knitting and Auslander algebras of small Dynkin quivers.

Knits the preprojective component of A3 in two orientations, builds the
Auslander algebras, and checks the fractional Calabi-Yau shadows on K0.
"""
from tensortilt.algebra import linear_path_algebra, path_algebra, tensor_algebra
from tensortilt.ar import auslander_algebra, ar_quiver_dot, is_homogeneous, knit, stable_auslander_algebra
from tensortilt.dynkin import dynkin_quiver
from tensortilt.invariants import aus_table_row, cy_check, cy_sum, derived_probe

for orient in ("linear", "bipartite"):
    a = path_algebra(dynkin_quiver("A", 3, orient))
    data = knit(a)
    homog, r = is_homogeneous(a, data)
    print(f"A3 {orient}: {data.count()} indecomposables, orbit sizes {data.orbit_sizes}, homogeneous={homog}")
    for x, i, m in data.positions():
        print(f"   tau^-{i} P{x + 1}: {m.dimvec()}")
    aus = auslander_algebra(a, data)
    print(f"   Aus: dim {aus.dim}, {len(aus.gabriel_quiver().arrows)} arrows")

lin = auslander_algebra(path_algebra(dynkin_quiver("A", 3)))
bip = auslander_algebra(path_algebra(dynkin_quiver("A", 3, "bipartite")))
print("\nAus(A3 linear) vs kD6:", derived_probe(lin, path_algebra(dynkin_quiver("D", 6))).verdict)
print("Aus(A3 bipartite) vs kE6:", derived_probe(bip, path_algebra(dynkin_quiver("E", 6))).verdict)
print("the two Auslander algebras:", derived_probe(lin, bip).verdict)

print("\nCY shadows for symmetric orientations")
for kind, n in [("A", 3), ("A", 5), ("D", 4)]:
    a = path_algebra(dynkin_quiver(kind, n, "symmetric"))
    _, (_, m), fx, fy = aus_table_row(kind, n)
    frac = cy_sum(fx, fy)
    aus = auslander_algebra(a)
    rect = tensor_algebra(a, linear_path_algebra(m))
    print(f"  {kind}{n}: Aus ~ {kind}{n} x A{m} ({derived_probe(aus, rect).verdict}), "
          f"{fx} + {fy} = {frac}, N^e = (-1)^d I: {cy_check(aus, frac)}")

print("\nsAus(A5) has", stable_auslander_algebra(linear_path_algebra(5)).n_vertices, "vertices")
print("\nAR quiver of linear A3 in DOT:")
print(ar_quiver_dot(knit(linear_path_algebra(3))))
