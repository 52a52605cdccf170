import pytest

from tensortilt.algebra import linear_path_algebra, truncated_line_algebra
from tensortilt.modules import (
    ModuleError,
    cokernel,
    direct_sum,
    hom_dim,
    hom_space,
    identity_map,
    injective_module,
    is_indecomposable,
    kernel,
    module_dual,
    projective_module,
    simple_module,
    standard_modules,
)


def test_projective_dims_over_kA3():
    a = linear_path_algebra(3)
    assert projective_module(a, 2).dim == 1
    assert projective_module(a, 0).dim == 3


def test_projective_over_line_algebra():
    assert projective_module(truncated_line_algebra(4, 3), 0).dim == 3


@pytest.mark.parametrize("n", range(1, 6))
def test_standard_module_identities(n):
    m = standard_modules(n)
    assert m["S"][n - 1] == m["P"][n - 1]
    assert m["S"][0] == m["I"][0]
    assert m["I"][n - 1] == m["P"][0]
    for i in range(n):
        assert m["P"][i].dim == n - i
        assert m["I"][i].dim == i + 1
        assert m["S"][i].dim == 1


def _unique_map(src, tgt):
    maps = hom_space(src, tgt)
    assert len(maps) == 1
    return maps[0]


def _exact(f, g):
    mid = f.target
    composite_zero = f.then(g).is_zero()
    return composite_zero and f.rank() == f.source.dim and g.rank() == g.target.dim \
        and mid.dim == f.source.dim + g.target.dim


@pytest.mark.parametrize("n", range(2, 7))
def test_psi_sequences_are_exact(n):
    m = standard_modules(n)
    p, s, inj = m["P"], m["S"], m["I"]
    for i in range(n - 1):
        # 0 -> P_{i+1} -> P_i -> S_i -> 0 and 0 -> P_{i+1} -> P_1 -> I_i -> 0
        assert _exact(_unique_map(p[i + 1], p[i]), _unique_map(p[i], s[i]))
        assert _exact(_unique_map(p[i + 1], p[0]), _unique_map(p[0], inj[i]))
    for i in range(1, n):
        # 0 -> S_i -> I_i -> I_{i-1} -> 0
        assert _exact(_unique_map(s[i], inj[i]), _unique_map(inj[i], inj[i - 1]))


def test_hom_from_projective_is_evaluation():
    m = standard_modules(4)
    mods = m["P"] + m["S"] + m["I"]
    for x in range(4):
        for mod in mods:
            assert hom_dim(m["P"][x], mod) == mod.vertex_dims[x]


def test_hom_between_simples():
    a = linear_path_algebra(2)
    assert hom_dim(simple_module(a, 0), simple_module(a, 1)) == 0
    assert hom_dim(simple_module(a, 0), simple_module(a, 0)) == 1


def test_identity_is_a_hom():
    p = projective_module(linear_path_algebra(3), 0)
    identity_map(p).validate()


def test_kernel_and_cokernel_of_projective_cover():
    m = standard_modules(3)
    f = _unique_map(m["P"][0], m["S"][0])
    assert kernel(f).dimvec() == m["P"][1].dimvec()
    assert cokernel(f).dim == 0


def test_dual_of_projective_is_injective_over_opposite():
    a = linear_path_algebra(3)
    d = module_dual(projective_module(a, 0))
    assert d.algebra.same_structure(a.opposite())
    assert d.dimvec() == (1, 1, 1)


def test_indecomposability():
    m = standard_modules(3)
    assert all(is_indecomposable(x) for x in m["P"] + m["I"] + m["S"])
    assert not is_indecomposable(direct_sum([m["S"][0], m["S"][1]]))


def test_modules_over_different_algebras_refuse_homs():
    with pytest.raises(ModuleError):
        hom_space(simple_module(linear_path_algebra(2), 0), simple_module(linear_path_algebra(3), 0))


def test_injective_socle():
    a = linear_path_algebra(3)
    for x in range(3):
        soc = injective_module(a, x).socle_dims()
        assert soc == tuple(int(y == x) for y in range(3))
