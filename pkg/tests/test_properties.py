"""Randomized checks.  Each property runs on 100 generated instances unless noted."""
import random
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import interval_dimvecs, random_vect_complex
from tensortilt.algebra import linear_path_algebra, tensor_algebra, truncated_line_algebra
from tensortilt.ar import knit
from tensortilt.complexes import (
    direct_sum_complexes,
    hom_complex,
    shift,
    tensor_complex,
    tensor_hom_element,
)
from tensortilt.invariants import cartan_data
from tensortilt.linalg import Subspace
from tensortilt.modules import standard_modules, hom_space
from tensortilt.tilting import standard_tilting

HUNDRED = settings(max_examples=100, deadline=None, derandomize=True)


# --- Kunneth over a field ---

@HUNDRED
@given(st.integers(0, 10 ** 9))
def test_kunneth_for_vector_space_complexes(seed):
    rng = random.Random(seed)
    k = random_vect_complex(rng, rng.randint(-2, 1), rng.randint(1, 4))
    l = random_vect_complex(rng, rng.randint(-2, 1), rng.randint(1, 4))
    kl = k.tensor(l)
    assert kl.check_dd()
    for n in range(kl.lo - 1, kl.hi + 2):
        expect = sum(k.cohomology_dim(p) * l.cohomology_dim(n - p) for p in range(k.lo, k.hi + 1))
        assert kl.cohomology_dim(n) == expect


# --- the sign map Hom(P,X) (x) Hom(Q,Y) -> Hom(P(x)Q, X(x)Y) ---

def _matvec(v, rows, ncols):
    if not rows or not ncols:
        return [Fraction(0)] * ncols
    return [sum(v[r] * rows[r][c] for r in range(len(v))) for c in range(ncols)]


def sign_map_is_chain_iso(p, x, q, y) -> bool:
    ab = tensor_algebra(p.algebra, q.algebra)
    hf, hg = hom_complex(p, x), hom_complex(q, y)
    pq, xy = tensor_complex(p, q, ab), tensor_complex(x, y, ab)
    ho = hom_complex(pq, xy)
    for n in sorted(set(ho.dims) | {a + b for a in hf.dims for b in hg.dims}):
        images, sources = [], []
        for a in sorted(hf.dims):
            b = n - a
            if b not in hg.dims:
                continue
            for k1 in range(hf.dim(a)):
                for k2 in range(hg.dim(b)):
                    f = [Fraction(int(t == k1)) for t in range(hf.dim(a))]
                    g = [Fraction(int(t == k2)) for t in range(hg.dim(b))]
                    images.append(tensor_hom_element(f, a, hf, g, b, hg, ho, xy))
                    sources.append((a, b, f, g))
        dn = ho.dim(n)
        if len(images) != dn or (dn and Subspace(images, dn).dim != dn):
            return False
        for img, (a, b, f, g) in zip(images, sources):
            lhs = _matvec(img, ho.diff(n), ho.dim(n + 1))
            rhs = [Fraction(0)] * ho.dim(n + 1)
            df = _matvec(f, hf.diff(a), hf.dim(a + 1))
            if any(df):
                rhs = [u + v for u, v in zip(rhs, tensor_hom_element(df, a + 1, hf, g, b, hg, ho, xy))]
            dg = _matvec(g, hg.diff(b), hg.dim(b + 1))
            if any(dg):
                s = -1 if a % 2 else 1
                rhs = [u + s * v for u, v in zip(rhs, tensor_hom_element(f, a, hf, dg, b + 1, hg, ho, xy))]
            if lhs != rhs:
                return False
    return True


def _family(rng, n):
    alg = linear_path_algebra(n)
    kind = rng.choice("PSI")
    parts = standard_tilting(n, kind, alg)
    return parts, alg


@settings(max_examples=30, deadline=None, derandomize=True)
@given(st.integers(0, 10 ** 9))
def test_sign_map_is_an_isomorphism_of_complexes(seed):
    # 30 instances: each builds four Hom complexes over tensor products
    rng = random.Random(seed)
    tp, _ = _family(rng, rng.randint(1, 3))
    tq, _ = _family(rng, rng.randint(1, 2))
    p = shift(rng.choice(tp), rng.randint(-1, 1))
    q = shift(rng.choice(tq), rng.randint(-1, 1))
    x = direct_sum_complexes(rng.sample(tp, rng.randint(1, len(tp))))
    y = direct_sum_complexes(rng.sample(tq, rng.randint(1, len(tq))))
    assert sign_map_is_chain_iso(p, x, q, y)


# --- short exact sequences between standard modules ---

def _exact(f, g):
    return f.then(g).is_zero() and f.rank() == f.source.dim and g.rank() == g.target.dim \
        and f.target.dim == f.source.dim + g.target.dim


@HUNDRED
@given(st.integers(2, 7), st.data())
def test_standard_sequences_are_exact(n, data):
    m = standard_modules(n)
    i = data.draw(st.integers(0, n - 2))
    (f,), (g,) = hom_space(m["P"][i + 1], m["P"][i]), hom_space(m["P"][i], m["S"][i])
    assert _exact(f, g)
    (f,), (g,) = hom_space(m["P"][i + 1], m["P"][0]), hom_space(m["P"][0], m["I"][i])
    assert _exact(f, g)
    (f,), (g,) = hom_space(m["S"][i + 1], m["I"][i + 1]), hom_space(m["I"][i + 1], m["I"][i])
    assert _exact(f, g)


# --- Cartan data of tensor products ---

_POOL = [(n, ell) for n in range(1, 5) for ell in range(2, n + 2)]


@HUNDRED
@given(st.sampled_from(_POOL), st.sampled_from(_POOL))
def test_kronecker_law(a, b):
    la, lb = truncated_line_algebra(*a), truncated_line_algebra(*b)
    da, db = cartan_data(la), cartan_data(lb)
    dab = cartan_data(tensor_algebra(la, lb))
    assert dab.C == da.C.kron(db.C)
    assert dab.N == da.N.kron(db.N)
    assert dab.Phi == -(da.Phi.kron(db.Phi))


# --- knitting ---

@settings(max_examples=20, deadline=None, derandomize=True)
@given(st.integers(1, 7), st.data())
def test_knit_counts_for_A_n(n, data):
    from tensortilt.algebra import path_algebra
    from tensortilt.dynkin import dynkin_quiver

    orient = "".join(data.draw(st.lists(st.sampled_from("<>"), min_size=n - 1, max_size=n - 1)))
    res = knit(path_algebra(dynkin_quiver("A", n, orient or "linear")))
    assert res.count() == n * (n + 1) // 2
    assert {m.dimvec() for m in res.indecomposables} == interval_dimvecs(n)
