import pytest

from oracles import coxeter_poly_closed_form
from tensortilt.algebra import linear_path_algebra, path_algebra, point_algebra, tensor_algebra, truncated_line_algebra
from tensortilt.dynkin import dynkin_quiver
from tensortilt.invariants import (
    CYFraction,
    InvariantError,
    aus_table_row,
    cartan_data,
    cy_check,
    cy_sum,
    derived_probe,
    dynkin_cy,
    saus_table_row,
)
from tensortilt.algebra import Algebra
from tensortilt.linalg import Matrix


def test_cartan_data_of_kA2():
    d = cartan_data(linear_path_algebra(2))
    assert d.C == Matrix([[1, 1], [0, 1]])
    assert d.Phi == Matrix([[-1, -1], [1, 0]])
    assert d.N == Matrix([[0, 1], [-1, 1]])
    assert d.coxeter_poly == (1, 1, 1)


def test_semisimple_algebra():
    k3 = tensor_algebra(point_algebra(), path_algebra(dynkin_quiver("A", 1)))
    d = cartan_data(k3)
    assert d.Phi == -Matrix.identity(1)


def test_nakayama_sends_projective_classes_to_injective_classes():
    a = truncated_line_algebra(5, 3)
    d = cartan_data(a)
    for x in range(5):
        p = d.C.submatrix([x], range(5)).T
        i = d.C.submatrix(range(5), [x])
        assert d.N @ p == i


def test_infinite_global_dimension_is_refused():
    a = Algebra(["e", "x"], {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}}, [0])
    with pytest.raises(InvariantError):
        cartan_data(a)


@pytest.mark.parametrize("kind,n", [("A", 4), ("D", 4), ("D", 5), ("D", 7), ("E", 6), ("E", 7), ("E", 8)])
def test_coxeter_polynomials_of_dynkin_quivers(kind, n):
    for o in ("linear", "bipartite"):
        a = path_algebra(dynkin_quiver(kind, n, o))
        assert cartan_data(a).coxeter_poly == coxeter_poly_closed_form(kind, n)


@pytest.mark.parametrize("n", range(1, 9))
def test_kA_n_fractional_cy(n):
    assert cy_check(linear_path_algebra(n), CYFraction(n - 1, n + 1))


def test_kA2_period_and_negative_control():
    a = linear_path_algebra(2)
    assert cy_check(a, CYFraction(1, 3))
    assert not cy_check(a, CYFraction(1, 2))


@pytest.mark.parametrize("kind,n", [("D", 4), ("D", 5), ("E", 6), ("E", 7), ("E", 8)])
def test_dynkin_fractional_cy(kind, n):
    assert cy_check(path_algebra(dynkin_quiver(kind, n)), dynkin_cy(kind, n))


def test_kronecker_law():
    a, b = linear_path_algebra(2), truncated_line_algebra(4, 3)
    ab = tensor_algebra(a, b)
    da, db, dab = cartan_data(a), cartan_data(b), cartan_data(ab)
    assert dab.C == da.C.kron(db.C)
    assert dab.N == da.N.kron(db.N)


def test_cy_sum_examples():
    assert cy_sum(CYFraction(10, 12), CYFraction(5, 7)) == CYFraction(130, 84)
    assert cy_sum(CYFraction(8, 9), CYFraction(8, 10)) == CYFraction(152, 90)
    assert cy_sum(CYFraction(0, 1), CYFraction(3, 5)) == CYFraction(3, 5)
    assert cy_sum(CYFraction(14, 15), CYFraction(13, 15)) == CYFraction(27, 15)


def test_cy_fraction_validation():
    with pytest.raises(ValueError):
        CYFraction(1, 0)
    assert CYFraction.parse("130/84") == CYFraction(130, 84)
    assert str(CYFraction(4, 6)) == "4/6"


def test_probe_examples():
    a63 = truncated_line_algebra(6, 3)
    assert derived_probe(a63, tensor_algebra(linear_path_algebra(2), linear_path_algebra(3))).verdict == "consistent"
    assert derived_probe(a63, path_algebra(dynkin_quiver("E", 6))).verdict == "consistent"
    rep = derived_probe(linear_path_algebra(3), tensor_algebra(linear_path_algebra(2), linear_path_algebra(2)))
    assert rep.verdict == "distinguished" and rep.witness == "rank"
    assert set(rep.to_json_dict()) == {"rank", "det_cartan", "coxeter_poly", "verdict", "witness"}


def test_probe_sees_coxeter_polynomial():
    # same rank and determinant, different polynomial
    rep = derived_probe(path_algebra(dynkin_quiver("D", 4)), linear_path_algebra(4))
    assert rep.verdict == "distinguished" and rep.witness == "coxeter_poly"


def test_coxeter_polynomial_is_relabeling_invariant():
    a = path_algebra(dynkin_quiver("D", 5, "<><>"))
    d = cartan_data(a)
    perm = [4, 2, 0, 3, 1]
    from tensortilt.linalg import char_poly

    c = d.C.permuted(perm)
    cit = c.inverse().T
    assert char_poly(-(cit @ c)) == d.coxeter_poly


def test_table_rows():
    assert aus_table_row("A", 3)[1] == ("A", 2)
    assert saus_table_row("D", 4)[1] == ("A", 2)
    assert cy_sum(*aus_table_row("E", 6)[2:]) == CYFraction(130, 84)
    with pytest.raises(InvariantError):
        aus_table_row("A", 4)


def test_cy_fractions_add_under_tensor_products():
    fracs = {n: CYFraction(n - 1, n + 1) for n in range(1, 6)}
    for n in range(1, 6):
        for m in range(1, 6):
            ab = tensor_algebra(linear_path_algebra(n), linear_path_algebra(m))
            assert cy_check(ab, cy_sum(fracs[n], fracs[m]))


def test_tilted_rings_probe_consistent_with_base():
    from tensortilt.tilting import endomorphism_ring, standard_tilting

    for kind in ("P", "I", "S"):
        a = linear_path_algebra(4)
        end = endomorphism_ring(standard_tilting(4, kind, a)).algebra
        assert derived_probe(end, a).verdict == "consistent"
