import pytest

from oracles import interval_dimvecs, positive_roots
from tensortilt.algebra import Algebra, linear_path_algebra, path_algebra, truncated_line_algebra
from tensortilt.ar import (
    KnitError,
    ar_quiver_dot,
    auslander_algebra,
    initial_endomorphism_algebra,
    is_homogeneous,
    knit,
    stable_auslander_algebra,
)
from tensortilt.dynkin import all_orientations, dynkin_edges, dynkin_quiver, is_symmetric_orientation
from tensortilt.invariants import derived_probe


def kq(kind, n, orientation="linear"):
    return path_algebra(dynkin_quiver(kind, n, orientation))


@pytest.mark.parametrize("n", range(1, 7))
def test_knit_linear_A_gives_intervals(n):
    data = knit(linear_path_algebra(n))
    assert data.count() == n * (n + 1) // 2
    assert {m.dimvec() for m in data.indecomposables} == interval_dimvecs(n)


@pytest.mark.parametrize("kind,n,orientation", [("D", 4, "linear"), ("D", 4, "all-in"), ("D", 5, "bipartite"),
                                                ("E", 6, "linear")])
def test_knit_gives_positive_roots(kind, n, orientation):
    data = knit(kq(kind, n, orientation))
    assert {m.dimvec() for m in data.indecomposables} == positive_roots(n, dynkin_edges(kind, n))


def test_orbit_lengths_over_kA2():
    data = knit(linear_path_algebra(2))
    assert data.orbit_sizes == (0, 1)
    assert sum(r + 1 for r in data.orbit_sizes) == data.count()


def test_non_hereditary_input_is_refused():
    with pytest.raises(KnitError):
        knit(truncated_line_algebra(3, 2))


def test_max_steps_guard():
    with pytest.raises(KnitError):
        knit(kq("D", 4), max_steps=1)


def test_homogeneity():
    assert is_homogeneous(kq("A", 3, "bipartite")) == (True, 1)
    assert is_homogeneous(kq("A", 3)) == (False, None)
    for o in ("linear", "bipartite", "all-in"):
        assert is_homogeneous(kq("E", 7, o))[0]


@pytest.mark.parametrize("kind,n", [("A", 3), ("A", 4), ("D", 4), ("D", 5)])
def test_homogeneity_matches_symmetric_orientations(kind, n):
    for _, q in all_orientations(kind, n):
        assert is_homogeneous(path_algebra(q))[0] == is_symmetric_orientation(q, kind, n)


def test_initial_endomorphism_algebra_r0_is_A():
    a = kq("A", 3, "bipartite")
    end = initial_endomorphism_algebra(a, 0)
    assert end.dim == a.dim
    assert derived_probe(end, a).verdict == "consistent"


def test_initial_endomorphism_algebra_dims_from_hom_grid():
    a = kq("A", 3, "bipartite")
    data = knit(a)
    end = initial_endomorphism_algebra(a, 1, data)
    assert end.n_vertices == 6
    assert end.dim == auslander_algebra(a, data).dim == 15


def test_initial_endomorphism_precondition():
    with pytest.raises(KnitError) as err:
        initial_endomorphism_algebra(kq("A", 3), 1)
    assert err.value.witness == (0, 1)


def test_full_homogeneous_range_is_auslander_algebra():
    a = kq("D", 4, "all-in")
    data = knit(a)
    assert initial_endomorphism_algebra(a, 2, data) == auslander_algebra(a, data)


def test_auslander_algebra_of_kA2():
    aus = auslander_algebra(linear_path_algebra(2))
    assert aus.n_vertices == 3
    assert len(aus.gabriel_quiver().arrows) == 2
    assert aus.dim == 5


def test_auslander_algebra_of_linear_A3_quiver():
    aus = auslander_algebra(kq("A", 3))
    assert aus.n_vertices == 6
    assert len(aus.gabriel_quiver().arrows) == 6
    # six arrows and two commutativity/zero relations in a 15-dimensional algebra
    assert aus.dim == 15


@pytest.mark.parametrize("n", range(2, 6))
def test_auslander_and_stable_vertex_counts(n):
    a = linear_path_algebra(n)
    assert auslander_algebra(a).n_vertices == n * (n + 1) // 2
    assert stable_auslander_algebra(a).n_vertices == n * (n + 1) // 2 - n


def test_stable_auslander_algebra_of_kA2_is_k():
    s = stable_auslander_algebra(linear_path_algebra(2))
    assert s.dim == 1


def test_stable_auslander_of_bipartite_A3_is_type_A3():
    s = stable_auslander_algebra(kq("A", 3, "bipartite"))
    assert s.n_vertices == 3
    assert derived_probe(s, linear_path_algebra(3)).verdict == "consistent"


@pytest.mark.parametrize("n", [1, 2])
def test_aus_even_line_is_stable_aus_of_next(n):
    aus = auslander_algebra(linear_path_algebra(2 * n))
    saus = stable_auslander_algebra(linear_path_algebra(2 * n + 1))
    assert aus.dim == saus.dim and aus.n_vertices == saus.n_vertices
    assert aus.cartan_matrix() == saus.cartan_matrix()
    assert derived_probe(aus, saus).verdict == "consistent"


def test_ar_quiver_dot_marks_projectives():
    dot = ar_quiver_dot(knit(kq("A", 3)))
    assert dot.count("fillcolor=white") == 3
    assert dot.count("fillcolor=black") == 3
    assert dot.count("->") == 6
    assert 'label="111"' in dot
