"""Bounded complexes, projective resolutions, Hom complexes and tensor products.

Conventions: differentials raise degree.  A :class:`ProjComplex` has
terms ``(+)_i e_{x_i} A`` and its differential from summand ``j`` of
degree ``n`` to summand ``i`` of degree ``n+1`` is left multiplication by
an element ``a_ij`` of ``e_{x_i} A e_{y_j}``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .algebra import Algebra, tensor_algebra
from .linalg import ONE, ZERO, Matrix, Subspace, nullspace_rows, rref_rows
from .modules import (
    CofreeModule,
    FreeModule,
    Module,
    ModuleError,
    ModuleMap,
    dual_map,
    module_dual,
    full_subspaces,
    image_subspaces,
    kernel_subspaces,
    null_subspaces,
    subquotient,
    vec_mat,
    zero_module,
)

Entries = dict  # {(target summand, source summand): {basis index: Fraction}}


class ComplexError(ValueError):
    pass


class ResolutionTooLong(ComplexError):
    """Raised when a resolution exceeds ``max_len`` (infinite global dimension suspected)."""


def _clean_elem(e: Mapping[int, object]) -> dict[int, Fraction]:
    return {int(b): Fraction(x) for b, x in e.items() if x}


# --- complexes of modules ---

class ModuleComplex:
    """Bounded complex of modules; ``diffs[n]`` maps degree ``n`` to ``n+1``."""

    def __init__(self, algebra: Algebra, terms: Mapping[int, Module],
                 diffs: Mapping[int, ModuleMap] | None = None, *, validate: bool = True):
        self.algebra = algebra
        diffs = diffs or {}
        keep = sorted(n for n, m in terms.items() if m.dim)
        self.terms = {n: terms[n] for n in keep}
        self.lo = keep[0] if keep else 0
        self.hi = keep[-1] if keep else -1
        self.diffs = {}
        for n in range(self.lo, self.hi):
            if n in diffs and n in self.terms and n + 1 in self.terms:
                self.diffs[n] = diffs[n]
        if validate:
            self.validate()

    def term(self, n: int) -> Module:
        return self.terms.get(n) or zero_module(self.algebra)

    def diff(self, n: int) -> ModuleMap:
        if n in self.diffs:
            return self.diffs[n]
        return ModuleMap(self.term(n), self.term(n + 1), {}, validate=False)

    def validate(self) -> None:
        for n, d in self.diffs.items():
            d.validate()
            if n + 1 in self.diffs and not d.then(self.diffs[n + 1]).is_zero():
                raise ComplexError(f"d o d != 0 at degree {n}")

    def cohomology(self, n: int) -> Module:
        if n not in self.terms:
            return zero_module(self.algebra)
        return subquotient(self.term(n), kernel_subspaces(self.diff(n)),
                           image_subspaces(self.diff(n - 1)))[0]

    def cohomology_dims(self) -> dict[int, tuple[int, ...]]:
        return {n: self.cohomology(n).dimvec() for n in range(self.lo, self.hi + 1)}

    @classmethod
    def stalk(cls, m: Module, degree: int = 0) -> "ModuleComplex":
        return cls(m.algebra, {degree: m}, {}, validate=False)


# --- complexes of projectives ---

class ProjComplex:
    """Bounded complex of finitely generated projective right modules."""

    def __init__(self, algebra: Algebra, summands: Mapping[int, Sequence[int]],
                 diffs: Mapping[int, Mapping[tuple[int, int], Mapping[int, object]]] | None = None,
                 *, validate: bool = True):
        self.algebra = algebra
        diffs = diffs or {}
        keep = sorted(n for n, s in summands.items() if len(s))
        self.summands = {n: tuple(int(x) for x in summands[n]) for n in keep}
        self.lo = keep[0] if keep else 0
        self.hi = keep[-1] if keep else -1
        self.diffs: dict[int, Entries] = {}
        for n in keep:
            if n + 1 in self.summands and n in diffs:
                ent = {}
                for (i, j), e in diffs[n].items():
                    ce = _clean_elem(e)
                    if ce:
                        ent[(int(i), int(j))] = ce
                if ent:
                    self.diffs[n] = ent
        self._modules: dict[int, FreeModule] = {}
        if validate:
            self.validate()

    # -- basics --

    def term(self, n: int) -> tuple[int, ...]:
        return self.summands.get(n, ())

    def terms(self, n: int) -> list[tuple[int, int]]:
        """Term in degree ``n`` as (vertex, multiplicity) pairs, vertex order."""
        out: dict[int, int] = {}
        for x in self.term(n):
            out[x] = out.get(x, 0) + 1
        return sorted(out.items())

    def entries(self, n: int) -> Entries:
        return self.diffs.get(n, {})

    def degrees(self) -> range:
        return range(self.lo, self.hi + 1)

    def is_zero(self) -> bool:
        return not self.summands

    def validate(self) -> None:
        alg = self.algebra
        for n, ent in self.diffs.items():
            src, tgt = self.term(n), self.term(n + 1)
            for (i, j), e in ent.items():
                if not (0 <= i < len(tgt) and 0 <= j < len(src)):
                    raise ComplexError(f"differential entry ({i},{j}) out of range in degree {n}")
                for b in e:
                    if alg.corners[b] != (tgt[i], src[j]):
                        raise ComplexError(f"differential entry ({i},{j}) in degree {n} leaves its corner")
        for n in self.diffs:
            if n + 1 in self.diffs and not self._dd_zero(n):
                raise ComplexError(f"d o d != 0 at degree {n}")

    def _dd_zero(self, n: int) -> bool:
        alg = self.algebra
        d0, d1 = self.diffs[n], self.diffs[n + 1]
        acc: dict[tuple[int, int], dict] = {}
        by_src: dict[int, list] = {}
        for (k, i), e in d1.items():
            by_src.setdefault(i, []).append((k, e))
        for (i, j), e in d0.items():
            for k, e1 in by_src.get(i, ()):
                prod = alg.mul_vec(e1, e)
                slot = acc.setdefault((k, j), {})
                for c, x in prod.items():
                    slot[c] = slot.get(c, ZERO) + x
        return all(not any(v.values()) for v in acc.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProjComplex):
            return NotImplemented
        return (self.algebra.same_structure(other.algebra) and self.summands == other.summands
                and self.diffs == other.diffs)

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.summands.items())))

    def __repr__(self) -> str:
        body = ", ".join(f"{n}:{self.terms(n)}" for n in self.degrees())
        return f"<ProjComplex {body}>"

    # -- module views --

    def module(self, n: int) -> FreeModule:
        if n not in self._modules:
            self._modules[n] = FreeModule(self.algebra, self.term(n))
        return self._modules[n]

    def differential_map(self, n: int) -> ModuleMap:
        src, tgt = self.module(n), self.module(n + 1)
        alg = self.algebra
        ent = self.entries(n)
        by_src: dict[int, list] = {}
        for (i, j), e in ent.items():
            by_src.setdefault(j, []).append((i, e))
        blocks = {}
        for z in range(alg.n_vertices):
            rows = []
            for j, c in src.layout[z]:
                images = {}
                for i, e in by_src.get(j, ()):
                    prod = alg.mul_vec(e, {c: ONE})
                    if prod:
                        images[i] = prod
                rows.append(tgt.from_entries(z, images))
            blocks[z] = rows
        return ModuleMap(src, tgt, blocks, validate=False)

    def to_module_complex(self) -> ModuleComplex:
        terms = {n: self.module(n) for n in self.degrees()}
        diffs = {n: self.differential_map(n) for n in self.degrees() if n + 1 in self.summands}
        return ModuleComplex(self.algebra, terms, diffs, validate=False)

    def cohomology(self, n: int) -> Module:
        return self.to_module_complex().cohomology(n)

    def k0_class(self) -> tuple[int, ...]:
        """Alternating sum of projective multiplicities (coordinates in the basis [P_x])."""
        v = [0] * self.algebra.n_vertices
        for n in self.degrees():
            for x in self.term(n):
                v[x] += 1 if n % 2 == 0 else -1
        return tuple(v)

    # -- serialization --

    def to_json_dict(self) -> dict:
        return {
            "terms": {str(n): list(self.term(n)) for n in self.degrees()},
            "differentials": {
                str(n): [[i, j, b, str(x)] for (i, j), e in sorted(ent.items()) for b, x in sorted(e.items())]
                for n, ent in sorted(self.diffs.items())
            },
        }

    @classmethod
    def from_json_dict(cls, algebra: Algebra, data: Mapping) -> "ProjComplex":
        summands = {int(n): v for n, v in data["terms"].items()}
        diffs: dict[int, dict] = {}
        for n, quads in data.get("differentials", {}).items():
            ent: dict = {}
            for i, j, b, x in quads:
                ent.setdefault((i, j), {})[b] = Fraction(x)
            diffs[int(n)] = ent
        return cls(algebra, summands, diffs)


def stalk(algebra: Algebra, vertices: Sequence[int], degree: int = 0) -> ProjComplex:
    """``(+) e_x A`` concentrated in one degree."""
    return ProjComplex(algebra, {degree: tuple(vertices)}, {}, validate=False)


def regular_complex(algebra: Algebra) -> ProjComplex:
    return stalk(algebra, range(algebra.n_vertices))


def shift(x: ProjComplex, r: int) -> ProjComplex:
    """``X[r]``: degree ``n`` holds ``X^{n+r}``; differential times ``(-1)^r``."""
    sign = -1 if r % 2 else 1
    summands = {n - r: s for n, s in x.summands.items()}
    diffs = {n - r: {k: {b: sign * v for b, v in e.items()} for k, e in ent.items()}
             for n, ent in x.diffs.items()}
    return ProjComplex(x.algebra, summands, diffs, validate=False)


def direct_sum_complexes(parts: Sequence[ProjComplex]) -> ProjComplex:
    if not parts:
        raise ComplexError("empty direct sum")
    alg = parts[0].algebra
    summands: dict[int, list[int]] = {}
    offsets: list[dict[int, int]] = []
    for p in parts:
        off = {}
        for n in p.degrees():
            off[n] = len(summands.setdefault(n, []))
            summands[n].extend(p.term(n))
        offsets.append(off)
    diffs: dict[int, dict] = {}
    for p, off in zip(parts, offsets):
        for n, ent in p.diffs.items():
            tgt = diffs.setdefault(n, {})
            for (i, j), e in ent.items():
                tgt[(i + off[n + 1], j + off[n])] = e
    return ProjComplex(alg, summands, diffs, validate=False)


# --- resolutions ---

def _stack_kernel(rows: list[list[Fraction]], nrows: int, ncols: int) -> Subspace:
    """Left kernel ``{v : v @ rows = 0}`` as an rref subspace of Q^nrows."""
    if ncols == 0 or not any(any(r) for r in rows):
        return Subspace([[ONE if i == j else ZERO for j in range(nrows)] for i in range(nrows)], nrows)
    cols = [list(c) for c in zip(*rows)]
    return Subspace(nullspace_rows(cols, nrows), nrows)


def resolve(mc: ModuleComplex, max_len: int | None = None, with_map: bool = False):
    """Projective complex quasi-isomorphic to ``mc`` via iterated projective covers.

    Works down from the top degree: at degree ``n`` it covers
    ``K = {(p, m) in P^{n+1} + M^n : d p = 0, f(p) = d m}``.  Stops once
    ``K`` vanishes below the support of ``mc``.  For a module stalk this
    is the minimal projective resolution.
    """
    alg = mc.algebra
    nv = alg.n_vertices
    rad = alg.radical()
    summands: dict[int, tuple[int, ...]] = {}
    diffs: dict[int, dict] = {}
    fmaps: dict[int, dict[int, list]] = {}
    if not mc.terms:
        pc = ProjComplex(alg, {}, {}, validate=False)
        return (pc, {}) if with_map else pc
    limit = max_len if max_len is not None else max(alg.dim, 1) + 2
    f1: dict[int, list] = {}
    d1: dict[int, list] = {}
    free1 = FreeModule(alg, ())
    free2 = FreeModule(alg, ())
    n = mc.hi
    while True:
        m_n = mc.term(n)
        m_1 = mc.term(n + 1)
        dm = mc.diff(n)
        kspaces = []
        for z in range(nv):
            a, b = free1.vertex_dims[z], m_n.vertex_dims[z]
            t2, t1 = free2.vertex_dims[z], m_1.vertex_dims[z]
            rows = []
            for k in range(a):
                rows.append(list(d1[z][k]) + list(f1[z][k]) if (t2 + t1) else [])
            for k in range(b):
                rows.append([ZERO] * t2 + [-v for v in dm.blocks[z][k]] if (t2 + t1) else [])
            kspaces.append(_stack_kernel(rows, a + b, t2 + t1))
        if n < mc.lo and all(k.dim == 0 for k in kspaces):
            break
        if n < mc.lo - limit:
            raise ResolutionTooLong(f"resolution longer than {limit} steps")

        def act_e(z, v, bb):
            a = free1.vertex_dims[z]
            return free1.act(v[:a], bb) + m_n.act(v[a:], bb)

        # radical of K at each vertex, in K-coordinates
        radvecs: list[list] = [[] for _ in range(nv)]
        for bb in rad:
            y, z = alg.corners[bb]
            if not kspaces[y].dim or not kspaces[z].dim:
                continue
            for kv in kspaces[y].basis:
                img = act_e(y, kv, bb)
                if any(img):
                    radvecs[z].append(kspaces[z].coords(img))
        gens = []
        for z in range(nv):
            sub = Subspace(radvecs[z], kspaces[z].dim)
            for u in sub.complement_units():
                gens.append((z, kspaces[z].basis[u]))
        verts = tuple(z for z, _ in gens)
        summands[n] = verts
        ent = {}
        for j, (z, g) in enumerate(gens):
            a = free1.vertex_dims[z]
            for i, e in free1.to_entries(z, g[:a]).items():
                ent[(i, j)] = e
        if ent:
            diffs[n] = ent
        new_free = FreeModule(alg, verts)
        # f^n : new_free -> M^n, and d^n : new_free -> free1, per vertex
        newf, newd = {}, {}
        for w in range(nv):
            frows, drows = [], []
            for j, c in new_free.layout[w]:
                z, g = gens[j]
                a = free1.vertex_dims[z]
                if c == alg.idempotents[z]:
                    frows.append(list(g[a:]))
                    drows.append(list(g[:a]))
                else:
                    frows.append(m_n.act(g[a:], c))
                    drows.append(free1.act(g[:a], c))
            newf[w], newd[w] = frows, drows
        fmaps[n] = newf
        free2, free1 = free1, new_free
        f1, d1 = newf, newd
        n -= 1
    pc = ProjComplex(alg, summands, diffs, validate=False)
    if with_map:
        return pc, fmaps
    return pc


def projective_resolution(m: Module, max_len: int | None = None) -> ProjComplex:
    return resolve(ModuleComplex.stalk(m), max_len=max_len)


def resolution_length(m: Module, max_len: int | None = None) -> int:
    pc = projective_resolution(m, max_len)
    return pc.hi - pc.lo if not pc.is_zero() else 0


def global_dimension(algebra: Algebra, max_len: int | None = None) -> int:
    """Max projective dimension of the simples; raises ResolutionTooLong if unbounded."""
    key = "global_dimension"
    if key in algebra._cache:
        val = algebra._cache[key]
        if isinstance(val, Exception):
            raise val
        return val
    from .modules import simple_module

    if max_len is None:
        max_len = algebra.n_vertices + 1 if algebra.gabriel_quiver().is_acyclic() else 2 * algebra.dim + 2
    try:
        val = max(resolution_length(simple_module(algebra, x), max_len) for x in range(algebra.n_vertices))
    except ResolutionTooLong as exc:
        algebra._cache[key] = exc
        raise
    algebra._cache[key] = val
    return val


def has_finite_global_dimension(algebra: Algebra) -> bool:
    try:
        global_dimension(algebra)
    except ResolutionTooLong:
        return False
    return True


# --- minimization ---

def _local_inverse(alg: Algebra, a: Mapping[int, Fraction], x: int) -> dict[int, Fraction]:
    """Inverse of ``a`` in the local ring ``e_x A e_x`` (idempotent coefficient nonzero)."""
    e = alg.idempotents[x]
    lam = a.get(e, ZERO)
    if not lam:
        raise ComplexError("element is not invertible")
    r = {b: -v / lam for b, v in a.items() if b != e}
    inv = {e: ONE}
    power = {e: ONE}
    while True:
        power = alg.mul_vec(power, r)
        if not power:
            break
        for b, v in power.items():
            inv[b] = inv.get(b, ZERO) + v
    return {b: v / lam for b, v in inv.items() if v}


def minimize(pc: ProjComplex) -> ProjComplex:
    """Cancel contractible pairs until every differential entry lies in the radical."""
    alg = pc.algebra
    idem_set = set(alg.idempotents)
    summands = {n: list(s) for n, s in pc.summands.items()}
    diffs = {n: dict(e) for n, e in pc.diffs.items()}
    while True:
        found = None
        for n in sorted(diffs):
            for (i, j), e in sorted(diffs[n].items()):
                if any(b in idem_set for b in e):
                    found = (n, i, j)
                    break
            if found:
                break
        if not found:
            break
        n, i, j = found
        a = diffs[n][(i, j)]
        x = summands[n][j]
        ainv = _local_inverse(alg, a, x)
        d = diffs[n]
        new = {}
        col_i = {jj: e for (ii, jj), e in d.items() if ii == i and jj != j}  # beta
        row_j = {ii: e for (ii, jj), e in d.items() if jj == j and ii != i}  # gamma
        for (ii, jj), e in d.items():
            if ii != i and jj != j:
                new[(ii, jj)] = dict(e)
        for ii, g in row_j.items():
            ga = alg.mul_vec(g, ainv)
            for jj, bta in col_i.items():
                corr = alg.mul_vec(ga, bta)
                slot = new.setdefault((ii, jj), {})
                for b, v in corr.items():
                    slot[b] = slot.get(b, ZERO) - v
        diffs[n] = {k: {b: v for b, v in e.items() if v} for k, e in new.items()}
        diffs[n] = {k: e for k, e in diffs[n].items() if e}
        # reindex: drop summand j from degree n and i from degree n+1
        summands[n].pop(j)
        summands[n + 1].pop(i)

        def rj(k, gone):
            return k - 1 if k > gone else k

        diffs[n] = {(rj(ii, i), rj(jj, j)): e for (ii, jj), e in diffs[n].items()}
        if n - 1 in diffs:
            diffs[n - 1] = {(rj(ii, j), jj): e for (ii, jj), e in diffs[n - 1].items() if ii != j}
        if n + 1 in diffs:
            diffs[n + 1] = {(ii, rj(jj, i)): e for (ii, jj), e in diffs[n + 1].items() if jj != i}
    return ProjComplex(alg, summands, diffs, validate=False)


# --- duality and Nakayama functors ---

def dual_complex(mc: ModuleComplex) -> ModuleComplex:
    """``D X`` over the opposite algebra: degree ``n`` holds ``D(X^{-n})``."""
    op = mc.algebra.opposite()
    terms = {-n: module_dual(m) for n, m in mc.terms.items()}
    diffs = {-n - 1: dual_map(d) for n, d in mc.diffs.items()}
    return ModuleComplex(op, terms, diffs, validate=False)


def _check_finite_gldim(algebra: Algebra) -> None:
    if not has_finite_global_dimension(algebra):
        raise ComplexError("algebra has infinite global dimension")


def nakayama_modules(pc: ProjComplex) -> ModuleComplex:
    """Termwise ``nu``: ``e_x A -> D(A e_x)`` with the induced maps (a complex of injectives)."""
    alg = pc.algebra
    terms = {n: CofreeModule(alg, pc.term(n)) for n in pc.degrees()}
    diffs = {}
    for n, ent in pc.diffs.items():
        src, tgt = terms[n], terms[n + 1]
        by_src: dict[int, list] = {}
        for (i, j), e in ent.items():
            by_src.setdefault(j, []).append((i, e))
        blocks = {}
        for u in range(alg.n_vertices):
            rows = []
            for j, b in src.layout[u]:
                row = [ZERO] * tgt.vertex_dims[u]
                # a . phi_b = sum_z coef_b(z a) phi_z, z in e_u A e_{x_i}
                for i, e in by_src.get(j, ()):
                    for z in alg.corner_basis(u, tgt.summands[i]):
                        coef = alg.mul_vec({z: ONE}, e).get(b, ZERO)
                        if coef:
                            row[tgt.position[(i, z)][1]] += coef
                rows.append(row)
            blocks[u] = rows
        diffs[n] = ModuleMap(src, tgt, blocks, validate=False)
    return ModuleComplex(alg, terms, diffs, validate=False)


def nakayama(pc: ProjComplex, check: bool = True) -> ProjComplex:
    """Serre functor on perfect complexes: apply nu termwise, then re-resolve and minimize."""
    if check:
        _check_finite_gldim(pc.algebra)
    return minimize(resolve(nakayama_modules(pc)))


def injective_resolution_dual(mc: ModuleComplex) -> ProjComplex:
    """Projective resolution over the opposite algebra of ``D X``; dualizing it
    gives the minimal injective resolution of ``X``."""
    return minimize(resolve(dual_complex(mc)))


def nakayama_inverse(x, check: bool = True) -> ProjComplex:
    """Inverse Serre functor: injective resolution, then ``D(A e_x) -> e_x A``."""
    mc = x.to_module_complex() if isinstance(x, ProjComplex) else x
    alg = mc.algebra
    if check:
        _check_finite_gldim(alg)
    pp = injective_resolution_dual(mc)
    summands = {-n: pp.term(n) for n in pp.degrees()}
    diffs = {}
    for m, ent in pp.diffs.items():
        # pp.d^m : degree m -> m+1 becomes degree -(m+1) -> -m with transposed indices
        diffs[-m - 1] = {(j, i): e for (i, j), e in ent.items()}
    return ProjComplex(alg, summands, diffs, validate=True)


def tau_inverse(m: Module) -> Module:
    """Inverse AR translate ``H^0 nu^-[1]``: cokernel of nu^- applied to a
    minimal injective copresentation.  Requires a hereditary algebra."""
    alg = m.algebra
    if global_dimension(alg) > 1:
        raise ComplexError("tau_inverse needs a hereditary algebra")
    if m.dim == 0:
        return m
    nu = nakayama_inverse(ModuleComplex.stalk(m), check=False)
    return nu.cohomology(1)


def tau(m: Module) -> Module:
    """AR translate ``H^0 nu[-1]`` on a hereditary algebra."""
    alg = m.algebra
    if global_dimension(alg) > 1:
        raise ComplexError("tau needs a hereditary algebra")
    if m.dim == 0:
        return m
    pres = projective_resolution(m)
    return nakayama_modules(pres).cohomology(-1)


# --- vector space complexes and Hom complexes ---

class VectComplex:
    """Complex of vector spaces; ``diffs[n]`` is a ``dims[n] x dims[n+1]`` row-vector matrix."""

    def __init__(self, dims: Mapping[int, int], diffs: Mapping[int, list]):
        self.dims = {n: d for n, d in dims.items()}
        self.diffs = dict(diffs)

    @property
    def lo(self) -> int:
        nz = [n for n, d in self.dims.items() if d]
        return min(nz) if nz else 0

    @property
    def hi(self) -> int:
        nz = [n for n, d in self.dims.items() if d]
        return max(nz) if nz else -1

    def dim(self, n: int) -> int:
        return self.dims.get(n, 0)

    def diff(self, n: int) -> list:
        if n in self.diffs:
            return self.diffs[n]
        return [[ZERO] * self.dim(n + 1) for _ in range(self.dim(n))]

    def cycles(self, n: int) -> Subspace:
        return _stack_kernel(self.diff(n), self.dim(n), self.dim(n + 1))

    def boundaries(self, n: int) -> Subspace:
        return Subspace(self.diff(n - 1), self.dim(n))

    def cohomology(self, n: int) -> "Cohomology":
        return Cohomology(self.cycles(n), self.boundaries(n))

    def cohomology_dim(self, n: int) -> int:
        return self.cycles(n).dim - self.boundaries(n).dim

    def check_dd(self) -> bool:
        for n in self.diffs:
            if n + 1 in self.diffs:
                prod = [vec_mat(r, self.diffs[n + 1], self.dim(n + 2)) for r in self.diffs[n]]
                if any(any(r) for r in prod):
                    return False
        return True

    def tensor(self, other: "VectComplex") -> "VectComplex":
        """``K (x) L`` with ``d(x (x) y) = dx (x) y + (-1)^p x (x) dy``; basis ordered by p, then x, then y."""
        index, dims = {}, {}
        for n in range(self.lo + other.lo, self.hi + other.hi + 1):
            pos = 0
            for p in range(self.lo, self.hi + 1):
                index[(p, n - p)] = pos
                pos += self.dim(p) * other.dim(n - p)
            dims[n] = pos
        diffs = {}
        for n, d in dims.items():
            if not d or not dims.get(n + 1):
                continue
            rows = [[ZERO] * dims[n + 1] for _ in range(d)]
            for p in range(self.lo, self.hi + 1):
                q = n - p
                dk, dl = self.dim(p), other.dim(q)
                if not (dk and dl):
                    continue
                o = index[(p, q)]
                sign = -1 if p % 2 else 1
                kd, ld = self.diff(p), other.diff(q)
                ok = index.get((p + 1, q))
                ol = index.get((p, q + 1))
                for x in range(dk):
                    for y in range(dl):
                        row = rows[o + x * dl + y]
                        if ok is not None and self.dim(p + 1):
                            for x2, v in enumerate(kd[x]):
                                if v:
                                    row[ok + x2 * dl + y] += v
                        if ol is not None and other.dim(q + 1):
                            m = other.dim(q + 1)
                            for y2, v in enumerate(ld[y]):
                                if v:
                                    row[ol + x * m + y2] += sign * v
            diffs[n] = rows
        return VectComplex(dims, diffs)


class Cohomology:
    """``Z / B`` with representatives: the rref complement of ``B`` in ``Z``."""

    def __init__(self, cycles: Subspace, boundaries: Subspace, preferred: Sequence[Sequence] = ()):
        self.cycles, self.boundaries = cycles, boundaries
        n = cycles.dim_ambient
        reps = []
        span = Subspace(list(boundaries.basis), n)
        for v in list(preferred):
            w = span.reduce(v)
            if any(w):
                reps.append(list(v))
                span = Subspace(span.basis + [w], n)
        extra = Subspace([boundaries.reduce(v) for v in cycles.basis], n)
        for v in extra.basis:
            w = span.reduce(v)
            if any(w):
                reps.append(list(v))
                span = Subspace(span.basis + [w], n)
        self.representatives = reps
        self.dim = len(reps)
        self._reduced = Subspace([], n)
        from .linalg import Basis

        self._basis = Basis([boundaries.reduce(r) for r in reps], n) if reps else None

    def coords(self, v: Sequence) -> list[Fraction]:
        """Coordinates of the class of cycle ``v``."""
        if not self.dim:
            return []
        return self._basis.coords(self.boundaries.reduce(v))

    def is_boundary(self, v: Sequence) -> bool:
        return self.boundaries.contains(v)


class HomComplex(VectComplex):
    """``Hom^n = (+)_p Hom(P^p, X^{n+p})``; coordinates ``(p, i, k)``:
    summand ``i`` of ``P^p`` sent to local basis vector ``k`` of ``X^{n+p}(x_i)``."""

    def __init__(self, p: ProjComplex, x: ModuleComplex, dims, diffs, index, target_proj=None):
        super().__init__(dims, diffs)
        self.source, self.target = p, x
        self.target_proj = target_proj
        self.index = index  # n -> {(p, i): (offset, length)}

    def component(self, n: int, v: Sequence, deg: int, i: int) -> list[Fraction]:
        off, ln = self.index[n][(deg, i)]
        return list(v[off:off + ln])


def _hom_layout(p: ProjComplex, x: ModuleComplex, n: int):
    idx, pos = {}, 0
    for deg in p.degrees():
        xm = x.term(n + deg)
        for i, v in enumerate(p.term(deg)):
            ln = xm.vertex_dims[v]
            idx[(deg, i)] = (pos, ln)
            pos += ln
    return idx, pos


def hom_complex(p: ProjComplex, x, degrees: Sequence[int] | None = None) -> HomComplex:
    """``Hom^*(P, X)`` with ``(df)^p = d_X f^p - (-1)^n f^{p+1} d_P^p``.

    ``degrees`` restricts which differentials are assembled.
    """
    xm = x.to_module_complex() if isinstance(x, ProjComplex) else x
    alg = p.algebra
    if not (alg is xm.algebra or alg.same_structure(xm.algebra)):
        raise ComplexError("complexes over different algebras")
    if p.is_zero() or not xm.terms:
        return HomComplex(p, xm, {}, {}, {}, x if isinstance(x, ProjComplex) else None)
    nlo, nhi = xm.lo - p.hi, xm.hi - p.lo
    index, dims = {}, {}
    for n in range(nlo - 1, nhi + 2):
        index[n], dims[n] = _hom_layout(p, xm, n)
    wanted = range(nlo - 1, nhi + 1) if degrees is None else degrees
    diffs = {}
    for n in wanted:
        if not dims.get(n) or not dims.get(n + 1):
            continue
        sign = -1 if n % 2 == 0 else 1  # -(-1)^n
        rows = [[ZERO] * dims[n + 1] for _ in range(dims[n])]
        for deg in p.degrees():
            xt = xm.term(n + deg)
            dx = xm.diff(n + deg)
            tgt_prev = {}
            if deg - 1 in p.summands:
                for (i, j), e in p.entries(deg - 1).items():
                    tgt_prev.setdefault(i, []).append((j, e))
            for i, v in enumerate(p.term(deg)):
                off, ln = index[n][(deg, i)]
                for k in range(ln):
                    row = rows[off + k]
                    unit = [ZERO] * ln
                    unit[k] = ONE
                    if (deg, i) in index[n + 1]:
                        o2, l2 = index[n + 1][(deg, i)]
                        img = dx.apply(v, unit) if l2 else []
                        for t, val in enumerate(img):
                            if val:
                                row[o2 + t] += val
                    for j, e in tgt_prev.get(i, ()):
                        yj = p.term(deg - 1)[j]
                        o3, l3 = index[n + 1][(deg - 1, j)]
                        if not l3:
                            continue
                        img = xt.act_element(unit, e, yj)
                        for t, val in enumerate(img):
                            if val:
                                row[o3 + t] += sign * val
        diffs[n] = rows
    return HomComplex(p, xm, dims, diffs, index, x if isinstance(x, ProjComplex) else None)


@dataclass
class DerivedHom:
    degree: int
    dim: int
    representatives: list


def derived_hom(t: ProjComplex, x, r: int) -> DerivedHom:
    """``Hom_{D(A)}(T, X[r]) = H^r Hom^*(T, X)`` for ``T`` perfect."""
    hc = hom_complex(t, x, degrees=(r - 1, r))
    coh = hc.cohomology(r)
    return DerivedHom(r, coh.dim, coh.representatives)


def hom_range(t: ProjComplex, x) -> range:
    """Degrees where ``Hom^*(T, X)`` can be nonzero."""
    empty = x.is_zero() if isinstance(x, ProjComplex) else not x.terms
    if t.is_zero() or empty:
        return range(0)
    return range(x.lo - t.hi, x.hi - t.lo + 1)


def chain_map_blocks(f: Sequence, hc: HomComplex, deg: int) -> ModuleMap:
    """Degree-0 element of ``Hom^*(P, X)`` as the module map ``P^deg -> X^deg``."""
    p, xm = hc.source, hc.target
    src = p.module(deg)
    tgt = xm.term(deg)
    alg = p.algebra
    gens = [hc.component(0, f, deg, i) for i in range(len(p.term(deg)))]
    blocks = {}
    for z in range(alg.n_vertices):
        rows = []
        for i, c in src.layout[z]:
            g = gens[i]
            rows.append(g if c == alg.idempotents[p.term(deg)[i]] else tgt.act(g, c))
        blocks[z] = rows
    return ModuleMap(src, tgt, blocks, validate=False)


def compose_chain_maps(g: Sequence, hc_g: HomComplex, f: Sequence, hc_f: HomComplex,
                       hc_out: HomComplex) -> list[Fraction]:
    """Degree-0 composite ``g o f`` for ``f in Hom(P, X)``, ``g in Hom(X, Y)``, all perfect."""
    p = hc_f.source
    out = [ZERO] * hc_out.dim(0)
    for deg in p.degrees():
        gmap = chain_map_blocks(g, hc_g, deg)
        for i, v in enumerate(p.term(deg)):
            fi = hc_f.component(0, f, deg, i)
            img = gmap.apply(v, fi) if fi else []
            off, ln = hc_out.index[0][(deg, i)]
            out[off:off + ln] = img
    return out


# --- tensor products ---

def tensor_complex(x: ProjComplex, y: ProjComplex, algebra: Algebra | None = None,
                   *, koszul: bool = True) -> ProjComplex:
    """``X (x) Y`` over ``A (x) B`` with ``d(a (x) b) = da (x) b + (-1)^p a (x) db``.

    Summands of degree ``n`` are ordered by ``p``, then ``i`` (in ``X^p``), then
    ``j`` (in ``Y^{n-p}``).  ``koszul=False`` drops the sign (for negative controls).
    """
    a, b = x.algebra, y.algebra
    ab = algebra or tensor_algebra(a, b)
    nb, db = b.n_vertices, b.dim
    summands: dict[int, list[int]] = {}
    pos: dict[tuple[int, int, int], tuple[int, int]] = {}
    if x.is_zero() or y.is_zero():
        return ProjComplex(ab, {}, {}, validate=False)
    for n in range(x.lo + y.lo, x.hi + y.hi + 1):
        lst = summands.setdefault(n, [])
        for p in x.degrees():
            q = n - p
            for i, u in enumerate(x.term(p)):
                for j, v in enumerate(y.term(q)):
                    pos[(p, q, i, j)] = (n, len(lst))
                    lst.append(u * nb + v)
    diffs: dict[int, dict] = {}
    for (p, q, i, j), (n, s) in pos.items():
        q = n - p
        ent = diffs.setdefault(n, {})
        ey = b.idempotents[y.term(q)[j]]
        for (i2, i1), e in x.entries(p).items():
            if i1 == i:
                t = pos[(p + 1, q, i2, j)][1]
                ent[(t, s)] = {c * db + ey: v for c, v in e.items()}
        sign = -1 if (koszul and p % 2) else 1
        ex = a.idempotents[x.term(p)[i]]
        for (j2, j1), e in y.entries(q).items():
            if j1 == j:
                t = pos[(p, q + 1, i, j2)][1]
                ent[(t, s)] = {ex * db + c: sign * v for c, v in e.items()}
    return ProjComplex(ab, summands, diffs, validate=koszul)


def tensor_chain_map(f: Sequence, hc_f: HomComplex, g: Sequence, hc_g: HomComplex,
                     hc_out: HomComplex, src: ProjComplex, tgt: ProjComplex) -> list[Fraction]:
    """Degree-0 ``f (x) g`` as an element of ``Hom^0(P (x) Q, X (x) Y)``.

    ``src = P (x) Q`` and ``tgt = X (x) Y`` as built by :func:`tensor_complex`.
    No sign enters in degree 0.
    """
    return tensor_hom_element(f, 0, hc_f, g, 0, hc_g, hc_out, tgt)


def tensor_hom_element(f: Sequence, a: int, hc_f: HomComplex, g: Sequence, b: int, hc_g: HomComplex,
                       hc_out: HomComplex, tgt: ProjComplex) -> list[Fraction]:
    """Image of ``f (x) g`` (degrees ``a`` and ``b``) in ``Hom^{a+b}(P (x) Q, X (x) Y)``.

    On the summand ``P^i (x) Q^j`` the map is ``(-1)^{i b} f (x) g``.
    """
    p, q = hc_f.source, hc_g.source
    xc, yc = hc_f.target, hc_g.target
    db = q.algebra.dim
    out = [ZERO] * hc_out.dim(a + b)
    src_index = _tensor_positions(p, q)
    tgt_index = _tensor_positions(hc_f.target_proj, hc_g.target_proj)
    for (deg_p, deg_q, i, j), (n, s) in src_index.items():
        if (deg_p, i) not in hc_f.index.get(a, {}) or (deg_q, j) not in hc_g.index.get(b, {}):
            continue
        fi = hc_f.component(a, f, deg_p, i)
        gj = hc_g.component(b, g, deg_q, j)
        if not any(fi) or not any(gj):
            continue
        sign = -1 if (deg_p * b) % 2 else 1
        xm, ym = xc.term(deg_p + a), yc.term(deg_q + b)
        u, v = p.term(deg_p)[i], q.term(deg_q)[j]
        tm = tgt.module(n + a + b)
        off, ln = hc_out.index[a + b][(n, s)]
        vec = [ZERO] * ln
        for k1, c1 in enumerate(fi):
            if not c1:
                continue
            i2, a_el = xm.layout[u][k1]
            for k2, c2 in enumerate(gj):
                if not c2:
                    continue
                j2, b_el = ym.layout[v][k2]
                t = tgt_index[(deg_p + a, deg_q + b, i2, j2)][1]
                loc = tm.position[(t, a_el * db + b_el)][1]
                vec[loc] += sign * c1 * c2
        out[off:off + ln] = vec
    return out


def _tensor_positions(x: ProjComplex, y: ProjComplex):
    pos = {}
    if x.is_zero() or y.is_zero():
        return pos
    for n in range(x.lo + y.lo, x.hi + y.hi + 1):
        k = 0
        for p in x.degrees():
            for i in range(len(x.term(p))):
                for j in range(len(y.term(n - p))):
                    pos[(p, n - p, i, j)] = (n, k)
                    k += 1
    return pos
