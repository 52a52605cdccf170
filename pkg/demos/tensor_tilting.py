"""Tensoring tilting complexes.

Takes the regular module over kA2 and the shifted simples over kA3, builds
the tensor complexes over kA2 (x) kA3 and compares the computed
endomorphism ring with the one predicted from the two Hom tables.  Then
drops the Koszul sign to watch the comparison fail.
"""
import json

from tensortilt.algebra import linear_path_algebra
from tensortilt.complexes import stalk
from tensortilt.tensor import TensorTiltingInput, check_compatibility, verify_construction
from tensortilt.tilting import certify_tilting, standard_tilting

a, b = linear_path_algebra(2), linear_path_algebra(3)
t = [stalk(a, [0, 1])] * 3
u = standard_tilting(3, "S", b)
print("U over kA3:", certify_tilting(u).verdict)

inp = TensorTiltingInput(a, b, t, u)
table = check_compatibility(inp)
print("compatibility:", "ok" if table.ok else "fails")

rep = verify_construction(inp)
summary = rep.to_json_dict()
print("match:", summary["match"])
print("output certificate:", summary["output_certificate"]["verdict"])
print("computed ring dim:", rep.computed.algebra.dim)

s = standard_tilting(2, "S", a)
bad = verify_construction(TensorTiltingInput(a, a, s, s), koszul=False)
print("\nwithout signs, S x S over kA2 x kA2: match =", bad.match)
print("witness:", json.dumps(bad.to_json_dict()["witness"]))
