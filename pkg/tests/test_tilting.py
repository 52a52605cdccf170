import pytest

from oracles import ps_hom
from tensortilt.algebra import (
    dual_bimodule,
    iterated_tilt_ring,
    linear_path_algebra,
    point_algebra,
    regular_bimodule,
    replicated_algebra,
    truncated_line_algebra,
)
from tensortilt.complexes import derived_hom, direct_sum_complexes, regular_complex, stalk
from tensortilt.invariants import derived_probe
from tensortilt.linalg import Matrix
from tensortilt.tilting import (
    TiltingError,
    certify_tilting,
    check_exceptional,
    dual_module,
    endomorphism_ring,
    exceptional_witness,
    k0_certificate,
    standard_tilting,
    verify_line_rectangle_iso,
)


@pytest.mark.parametrize("kind", ["P", "I", "S"])
@pytest.mark.parametrize("n", range(1, 5))
def test_standard_families_certify(kind, n):
    cert = certify_tilting(standard_tilting(n, kind))
    assert cert.exceptional and cert.k0_unimodular
    assert cert.verdict == "certified-necessary"


def test_simples_unshifted_fail_with_witness():
    summands = standard_tilting(2, "S0")
    cert = certify_tilting(summands)
    assert not cert.exceptional
    assert cert.witness == (1, 2, 1)
    assert exceptional_witness(summands) == (1, 2, 1)


def test_regular_stalk_is_exceptional():
    table, ok = check_exceptional(regular_complex(truncated_line_algebra(4, 3)))
    assert ok and table[0] == 9


def test_k0_certificates():
    p = standard_tilting(3, "P")
    m, uni = k0_certificate(p)
    assert m == Matrix.identity(3) and uni
    m, uni = k0_certificate(standard_tilting(3, "S"))
    assert uni
    a = linear_path_algebra(2)
    with pytest.raises(TiltingError):
        k0_certificate([stalk(a, [0]), stalk(a, [0]), stalk(a, [1])])


def test_endomorphism_ring_of_projectives_is_kA_n():
    a = linear_path_algebra(3)
    end = endomorphism_ring(standard_tilting(3, "P"))
    ok, witness = end.algebra.is_isomorphic_via(a, list(range(a.dim)))
    assert ok, witness


@pytest.mark.parametrize("n", [2, 3, 4])
def test_endomorphism_ring_of_injectives_matches_kA_n(n):
    end = endomorphism_ring(standard_tilting(n, "I"))
    assert end.algebra.dim == n * (n + 1) // 2
    assert end.algebra.cartan_matrix() == linear_path_algebra(n).cartan_matrix()


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_endomorphism_ring_of_shifted_simples(n):
    end = endomorphism_ring(standard_tilting(n, "S"))
    alg = end.algebra
    assert alg.dim == 2 * n - 1
    assert alg.loewy_length() == 2
    assert len(alg.gabriel_quiver().arrows) == n - 1


def test_end_table_matches_derived_hom():
    summands = standard_tilting(3, "S")
    end = endomorphism_ring(summands)
    for i, ti in enumerate(summands):
        for j, tj in enumerate(summands):
            assert end.hom_dims()[i][j] == derived_hom(tj, ti, 0).dim


def test_endomorphism_ring_refuses_non_exceptional():
    with pytest.raises(TiltingError):
        endomorphism_ring(standard_tilting(2, "S0"))


@pytest.mark.parametrize("kind", ["P", "I", "S"])
@pytest.mark.parametrize("n", range(1, 5))
def test_hom_tables_match_hand_oracle(kind, n):
    xs = standard_tilting(n, kind)
    for i in range(n):
        for j in range(n):
            for r in range(-n, n + 1):
                assert derived_hom(xs[i], xs[j], r).dim == ps_hom(kind, i + 1, j + 1, r)


def test_iterated_ring_over_points():
    # zeros below the subdiagonal make this A(4,2), derived equivalent to T_4(k) = kA_4
    k = point_algebra()
    ring = iterated_tilt_ring([k] * 4, [regular_bimodule(k)] * 3)
    assert ring.dim == 7
    assert ring.loewy_length() == 2
    assert derived_probe(ring, linear_path_algebra(4)).verdict == "consistent"


def test_two_block_iterated_ring_matches_replicated_algebra():
    lam = linear_path_algebra(2)
    it = iterated_tilt_ring([lam, lam], [dual_bimodule(lam)])
    rep = replicated_algebra(lam, 2)
    assert it.dim == rep.dim
    # lower vs upper triangular: the Cartan matrices agree after reversing blocks
    perm = [2, 3, 0, 1]
    assert it.cartan_matrix().permuted(perm) == rep.cartan_matrix()


@pytest.mark.parametrize("m,n", [(1, 3), (2, 3), (3, 3), (2, 2)])
def test_line_rectangle_isomorphism(m, n):
    cert = verify_line_rectangle_iso(m, n)
    assert cert.ok, cert.witness
    assert cert.dims[0] == cert.dims[1]


def test_dual_module_certificates():
    dl, cert = dual_module(linear_path_algebra(3))
    assert dl.dim == 6 and cert.verdict == "certified-necessary"
    dl, cert = dual_module(point_algebra())
    assert dl.dim == 1 and cert.verdict == "certified-necessary"
    dl, cert = dual_module(truncated_line_algebra(4, 3))
    assert cert.exceptional and cert.k0_unimodular


def test_certificate_json_records_k0_tier():
    d = certify_tilting(standard_tilting(2, "S")).to_json_dict()
    assert d["generation"].startswith("K0")
    assert d["verdict"] == "certified-necessary"
