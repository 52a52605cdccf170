"""Lines, rectangles and triangles.

Builds the line A(10,3), the rectangle kA5 (x) kA2 and the stable Auslander
algebra of linear A5, then compares their K0 invariants.  Afterwards walks
the ADE chain A(n,3) for n = 1..8.
"""
from tensortilt.algebra import linear_path_algebra, path_algebra, tensor_algebra, truncated_line_algebra
from tensortilt.ar import stable_auslander_algebra
from tensortilt.dynkin import ade_chain_member, dynkin_quiver
from tensortilt.invariants import cartan_data, derived_probe
from tensortilt.tilting import verify_line_rectangle_iso


def show(name, alg):
    d = cartan_data(alg)
    print(f"{name:>24}: dim {alg.dim:3d}, rank {alg.n_vertices:2d}, coxeter poly {d.coxeter_poly}")


line = truncated_line_algebra(10, 3)
rect = tensor_algebra(linear_path_algebra(5), linear_path_algebra(2))
tri = stable_auslander_algebra(linear_path_algebra(5))
for name, alg in [("line A(10,3)", line), ("rectangle kA5 x kA2", rect), ("triangle sAus(kA5)", tri)]:
    show(name, alg)
print("line vs rectangle:", derived_probe(line, rect).verdict)
print("rectangle vs triangle:", derived_probe(rect, tri).verdict)

# The small cases are not just derived equivalent but isomorphic after reordering
cert = verify_line_rectangle_iso(2, 3)
print(f"\nline/rectangle iso for (2,3): {cert.ok}")

print("\nADE chain: A(n,3) against the n-th member")
for n in range(1, 9):
    kind, m = ade_chain_member(n)
    rep = derived_probe(truncated_line_algebra(n, 3), path_algebra(dynkin_quiver(kind, m)))
    print(f"  n={n}: {kind}{m:<2} {rep.verdict}")
print("(K0 invariants can refute, never prove, a derived equivalence)")
