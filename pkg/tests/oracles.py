"""Independent oracles.  None of these reuse the code paths they check."""
from __future__ import annotations

import itertools
import random
from fractions import Fraction

from tensortilt.linalg import Subspace, nullspace_rows
from tensortilt.modules import hom_space


def interval_dimvecs(n: int) -> set[tuple[int, ...]]:
    """Indecomposables of a type A_n quiver are the interval modules."""
    return {tuple(1 if a <= k <= b else 0 for k in range(n)) for a in range(n) for b in range(a, n)}


def positive_roots(n: int, edges) -> set[tuple[int, ...]]:
    """Positive roots of a Dynkin graph: nonzero x >= 0 with Tits form q(x) = 1."""
    roots = set()
    for x in itertools.product(range(7), repeat=n):
        if not any(x):
            continue
        q = sum(v * v for v in x) - sum(x[u] * x[v] for u, v in edges)
        if q == 1:
            roots.add(x)
    return roots


def coxeter_poly_closed_form(kind: str, n: int) -> tuple[int, ...]:
    """Textbook Coxeter polynomials, highest degree first."""
    if kind == "A":
        return (1,) * (n + 1)
    if kind == "D":
        # (x^{n-1} + 1)(x + 1)
        c = [0] * (n + 1)
        c[0] = c[1] = c[n - 1] = c[n] = 1
        return tuple(c)
    return {
        6: (1, 1, 0, -1, 0, 1, 1),
        7: (1, 1, 0, -1, -1, 0, 1, 1),
        8: (1, 1, 0, -1, -1, -1, 0, 1, 1),
    }[n]


def line_dim(n: int, ell: int) -> int:
    """Paths of length < ell in the linear quiver with n vertices."""
    return sum(min(ell, n - i) for i in range(n))


def ps_hom(kind: str, i: int, j: int, r: int) -> int:
    """Hom(X_i, X_j[r]) over kA_n for the three standard families, by hand."""
    if r != 0:
        return 0
    if kind in ("P", "I"):
        return int(j <= i)
    return int(j - i in (0, 1))


def homotopy_hom_dim(p, x, r: int) -> int:
    """dim Hom_K(P, X[r]) as chain maps modulo null-homotopic ones.

    Works degreewise with module homomorphisms only.  Chain maps satisfy
    ``f^{p+1} d_P = d_X f^p``; a global sign convention does not change
    the dimension.
    """
    degs = list(p.degrees())
    xdeg = set(x.degrees())

    def xterm(m):
        return x.module(m)

    def homs(deg, shift):
        m = deg + r + shift
        if m not in xdeg:
            return []
        return hom_space(p.module(deg), xterm(m))

    fb = {d: homs(d, 0) for d in degs}
    hb = {d: homs(d, -1) for d in degs}
    cols = [(d, k) for d in degs for k in range(len(fb[d]))]
    if not cols:
        return 0
    col_of = {c: t for t, c in enumerate(cols)}
    # equations: for each p, f^{p+1} o d_P^p - d_X^{p+r} o f^p = 0
    blocks = []
    for d in degs:
        pieces = {}
        if d + 1 in fb and fb[d + 1]:
            dp = p.differential_map(d)
            for k, f in enumerate(fb[d + 1]):
                pieces[(d + 1, k)] = dp.then(f).flat()
        if fb[d] and d + r + 1 in xdeg:
            dx = x.differential_map(d + r)
            for k, f in enumerate(fb[d]):
                v = [-a for a in f.then(dx).flat()]
                prev = pieces.get((d, k))
                pieces[(d, k)] = v if prev is None else [a + b for a, b in zip(prev, v)]
        if pieces:
            length = len(next(iter(pieces.values())))
            for e in range(length):
                row = [Fraction(0)] * len(cols)
                for c, v in pieces.items():
                    row[col_of[c]] = v[e]
                if any(row):
                    blocks.append(row)
    z = len(nullspace_rows(blocks, len(cols))) if blocks else len(cols)
    # null-homotopic maps: f^p = h^{p+1} d_P^p + d_X^{p+r-1} h^p
    images = []
    for d in degs:
        for h in hb[d]:
            vec = [Fraction(0)] * len(cols)
            if d + r - 1 + 1 in xdeg and fb[d]:
                img = h.then(x.differential_map(d + r - 1))
                vec = _add_coords(vec, img, fb[d], d, col_of)
            if d - 1 in fb and fb[d - 1]:
                img = p.differential_map(d - 1).then(h)
                vec = _add_coords(vec, img, fb[d - 1], d - 1, col_of)
            images.append(vec)
    b = Subspace(images, len(cols)).dim if images else 0
    return z - b


def _add_coords(vec, mp, basis, d, col_of):
    flat = mp.flat()
    sub = Subspace([f.flat() for f in basis], len(flat))
    if not sub.dim:
        return vec
    # express mp in the hom_space basis
    rows = [f.flat() for f in basis]
    coeffs = _solve(rows, flat)
    out = list(vec)
    for k, c in enumerate(coeffs):
        out[col_of[(d, k)]] += c
    return out


def _solve(rows, target):
    """Coefficients c with sum c_k rows[k] = target (rows independent)."""
    n = len(rows)
    m = len(target)
    aug = [[rows[k][e] for k in range(n)] + [target[e]] for e in range(m)]
    piv_rows = []
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, m) if aug[i][c]), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        inv = 1 / Fraction(aug[r][c])
        aug[r] = [v * inv for v in aug[r]]
        for i in range(m):
            if i != r and aug[i][c]:
                fct = aug[i][c]
                aug[i] = [a - fct * b for a, b in zip(aug[i], aug[r])]
        piv_rows.append((r, c))
        r += 1
    out = [Fraction(0)] * n
    for rr, c in piv_rows:
        out[c] = aug[rr][n]
    return out


def random_vect_complex(rng: random.Random, lo: int = 0, length: int = 3, max_dim: int = 3):
    """Random complex of vector spaces built backwards so that d o d = 0."""
    from tensortilt.complexes import VectComplex

    dims = {lo + k: rng.randint(0, max_dim) for k in range(length)}
    diffs = {}
    for n in range(lo + length - 2, lo - 1, -1):
        rows_needed, cols = dims[n], dims[n + 1]
        if not rows_needed or not cols:
            continue
        nxt = diffs.get(n + 1)
        if nxt is None:
            allowed = [[Fraction(int(i == j)) for j in range(cols)] for i in range(cols)]
        else:
            tr = [[nxt[i][j] for i in range(cols)] for j in range(len(nxt[0]))]
            allowed = nullspace_rows(tr, cols)
        rows = []
        for _ in range(rows_needed):
            v = [Fraction(0)] * cols
            for b in allowed:
                c = rng.randint(-2, 2)
                v = [a + c * x for a, x in zip(v, b)]
            rows.append(v)
        diffs[n] = rows
    return VectComplex(dims, diffs)
