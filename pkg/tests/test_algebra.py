import pytest

from oracles import line_dim
from tensortilt.algebra import (
    Algebra,
    AlgebraError,
    Quiver,
    dual_bimodule,
    iterated_tilt_ring,
    linear_path_algebra,
    path_algebra,
    point_algebra,
    regular_bimodule,
    replicated_algebra,
    tensor_algebra,
    triangular_matrix_algebra,
    truncated_line_algebra,
)
from tensortilt.dynkin import dynkin_quiver
from tensortilt.linalg import Matrix


def test_point_algebra():
    k = point_algebra()
    assert k.dim == 1 and k.n_vertices == 1
    assert k.cartan_matrix() == Matrix([[1]])


def test_linear_path_algebra_dims():
    for n in range(1, 7):
        assert linear_path_algebra(n).dim == n * (n + 1) // 2


@pytest.mark.parametrize("n,ell", [(4, 3), (6, 3), (10, 3), (5, 2), (3, 7)])
def test_line_algebra_dim_matches_path_count(n, ell):
    assert truncated_line_algebra(n, ell).dim == line_dim(n, ell)


def test_line_10_3_has_dim_27():
    # 10 + 9 + 8 paths of length 0, 1, 2
    assert truncated_line_algebra(10, 3).dim == 27


def test_line_algebra_relations():
    a = truncated_line_algebra(4, 3)
    idx = {lab: k for k, lab in enumerate(a.labels)}
    assert a.mul(idx["eps(1,2)"], idx["eps(2,3)"]) == ((idx["eps(1,3)"], 1),)
    assert a.mul(idx["eps(1,3)"], idx["eps(3,4)"]) == ()
    assert a.loewy_length() == 3


def test_path_algebra_of_dynkin_quiver():
    a = path_algebra(dynkin_quiver("D", 4, "all-in"))
    assert a.dim == 4 + 3
    assert len(a.gabriel_quiver().arrows) == 3
    assert a.cartan_matrix().det() == 1


def test_cyclic_quiver_is_rejected():
    q = Quiver(2, ((0, 1, "a"), (1, 0, "b")))
    assert not q.is_acyclic()
    with pytest.raises(ValueError):
        path_algebra(q)


def test_associativity_failure_names_a_triple():
    # "a" squares to itself without being listed as an idempotent
    bad = {(0, 0): {0: 1}, (1, 1): {1: 1}, (2, 2): {2: 1}, (0, 1): {1: 1}, (1, 2): {1: 1}}
    with pytest.raises(AlgebraError):
        Algebra(["e1", "a", "e2"], bad, [0, 2])


def test_tensor_algebra_dims_and_cartan():
    a, b = linear_path_algebra(2), linear_path_algebra(3)
    ab = tensor_algebra(a, b)
    assert ab.dim == 18
    assert ab.n_vertices == 6
    assert ab.cartan_matrix() == a.cartan_matrix().kron(b.cartan_matrix())


def test_triangular_matrix_algebra():
    t = triangular_matrix_algebra(linear_path_algebra(5), 2)
    assert t.dim == 45


def test_opposite_reverses_corners():
    a = linear_path_algebra(3)
    op = a.opposite()
    assert op.cartan_matrix() == a.cartan_matrix().T
    assert op.opposite().same_structure(a)


def test_json_round_trip():
    a = truncated_line_algebra(5, 3)
    b = Algebra.from_json(a.to_json())
    assert b == a


def test_bimodules_validate():
    lam = truncated_line_algebra(3, 2)
    regular_bimodule(lam).validate()
    dq = dual_bimodule(lam)
    dq.validate()
    assert dq.labels[0].startswith("D(")


def test_iterated_ring_dims():
    lam = linear_path_algebra(2)
    dq = dual_bimodule(lam)
    ring = iterated_tilt_ring([lam, lam, lam], [dq, dq])
    assert ring.dim == 3 * 3 + 2 * 3
    assert ring.n_vertices == 6


def test_replicated_algebra_of_kA2():
    # two diagonal copies of kA2 and one copy of D(kA2)
    r = replicated_algebra(linear_path_algebra(2), 2)
    assert r.dim == 9
    assert r.n_vertices == 4


def test_radical_and_arrows_of_kA3():
    a = linear_path_algebra(3)
    assert len(a.radical()) == 3
    assert len(a.arrows()) == 2
    q = a.gabriel_quiver()
    assert {(s, t) for s, t, _ in q.arrows} == {(0, 1), (1, 2)}
