"""Right modules over a directed algebra, stored vertex by vertex.

A module ``M`` is a family of spaces ``M(x) = M e_x`` and, for each
non-idempotent basis element ``b`` in corner ``(x, y)``, a block matrix
``M(x) -> M(y)`` acting on row vectors: ``v -> v @ block(b)``.  This is a
quiver representation when the algebra is a path algebra.  The full
``dim x dim`` action matrix is available through :meth:`Module.action`.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from .algebra import Algebra
from .linalg import ONE, ZERO, Matrix, Subspace, nullspace_rows

Rows = list  # list of lists of Fraction


class ModuleError(ValueError):
    pass


def _mm(a: Sequence[Sequence], b: Sequence[Sequence], bcols: int) -> list[list[Fraction]]:
    out = []
    for row in a:
        acc = [ZERO] * bcols
        for k, x in enumerate(row):
            if x:
                for j, y in enumerate(b[k]):
                    if y:
                        acc[j] += x * y
        out.append(acc)
    return out


def vec_mat(v: Sequence, m: Sequence[Sequence], ncols: int) -> list[Fraction]:
    acc = [ZERO] * ncols
    for k, x in enumerate(v):
        if x:
            for j, y in enumerate(m[k]):
                if y:
                    acc[j] += x * y
    return acc


def _is_zero(rows) -> bool:
    return not any(x for r in rows for x in r)


def _identity(n: int) -> list[list[Fraction]]:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


class Module:
    """Right module given by vertex dimensions and radical action blocks."""

    def __init__(self, algebra: Algebra, vertex_dims: Sequence[int],
                 blocks: Mapping[int, object], *, validate: bool = True):
        self.algebra = algebra
        self.vertex_dims = tuple(int(d) for d in vertex_dims)
        if len(self.vertex_dims) != algebra.n_vertices:
            raise ModuleError("one dimension per vertex required")
        idem = set(algebra.idempotents)
        self._blocks: dict[int, tuple] = {}
        for b, m in blocks.items():
            if b in idem:
                raise ModuleError("idempotents act by the identity; give radical blocks only")
            rows = m.rows if isinstance(m, Matrix) else m
            x, y = algebra.corners[b]
            if len(rows) != self.vertex_dims[x] or any(len(r) != self.vertex_dims[y] for r in rows):
                raise ModuleError(f"block for {algebra.labels[b]} has wrong shape")
            rows = tuple(tuple(Fraction(v) for v in r) for r in rows)
            if not _is_zero(rows):
                self._blocks[b] = rows
        self.dim = sum(self.vertex_dims)
        self.offsets = []
        pos = 0
        for d in self.vertex_dims:
            self.offsets.append(pos)
            pos += d
        if validate:
            self.validate()

    # -- access --

    def raw_block(self, b: int):
        """Rows of the block of basis element ``b`` (identity for idempotents)."""
        alg = self.algebra
        x, y = alg.corners[b]
        if b in self._blocks:
            return self._blocks[b]
        if x == y and alg.idempotents[x] == b:
            return _identity(self.vertex_dims[x])
        return [[ZERO] * self.vertex_dims[y] for _ in range(self.vertex_dims[x])]

    def block(self, b: int) -> Matrix:
        x, y = self.algebra.corners[b]
        return Matrix(self.raw_block(b), ncols=self.vertex_dims[y])

    def action(self, b: int) -> Matrix:
        """Full action matrix of basis element ``b`` on row vectors of length ``dim``."""
        x, y = self.algebra.corners[b]
        out = [[ZERO] * self.dim for _ in range(self.dim)]
        ox, oy = self.offsets[x], self.offsets[y]
        for r, row in enumerate(self.raw_block(b)):
            for c, v in enumerate(row):
                out[ox + r][oy + c] = v
        return Matrix(out, ncols=self.dim)

    def nonzero_blocks(self) -> dict[int, tuple]:
        return dict(self._blocks)

    def act(self, v: Sequence, b: int) -> list[Fraction]:
        """Local vector in ``M(x)`` times basis element ``b`` in corner (x, y)."""
        y = self.algebra.corners[b][1]
        return vec_mat(v, self.raw_block(b), self.vertex_dims[y])

    def act_element(self, v: Sequence, elem: Mapping[int, Fraction], target: int) -> list[Fraction]:
        """``v`` times a sparse algebra element whose terms all end at ``target``."""
        acc = [ZERO] * self.vertex_dims[target]
        for b, c in elem.items():
            if c:
                w = self.act(v, b)
                for k, x in enumerate(w):
                    if x:
                        acc[k] += c * x
        return acc

    def dimvec(self) -> tuple[int, ...]:
        return self.vertex_dims

    def is_zero(self) -> bool:
        return self.dim == 0

    def validate(self) -> None:
        alg = self.algebra
        rad = set(alg.radical())
        for (a, b), vec in alg.mult.items():
            if a not in rad or b not in rad:
                continue
            x, _ = alg.corners[a]
            z = alg.corners[b][1]
            lhs = _mm(self.raw_block(a), self.raw_block(b), self.vertex_dims[z])
            rhs = [[ZERO] * self.vertex_dims[z] for _ in range(self.vertex_dims[x])]
            for c, coef in vec:
                for r, row in enumerate(self.raw_block(c)):
                    for k, v in enumerate(row):
                        if v:
                            rhs[r][k] += coef * v
            if lhs != rhs:
                raise ModuleError(f"action not multiplicative on ({alg.labels[a]}, {alg.labels[b]})")
        # products of radical elements that vanish in A must vanish on M
        for a in rad:
            ya = alg.corners[a][1]
            for b in alg.from_source[ya]:
                if b in rad and (a, b) not in alg.mult:
                    z = alg.corners[b][1]
                    if not _is_zero(_mm(self.raw_block(a), self.raw_block(b), self.vertex_dims[z])):
                        raise ModuleError(f"action not multiplicative on ({alg.labels[a]}, {alg.labels[b]})")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Module):
            return NotImplemented
        same_alg = self.algebra is other.algebra or self.algebra.same_structure(other.algebra)
        return same_alg and self.vertex_dims == other.vertex_dims and self._blocks == other._blocks

    def __hash__(self) -> int:
        return hash((self.vertex_dims, tuple(sorted(self._blocks))))

    def __repr__(self) -> str:
        return f"<Module dimvec={self.vertex_dims}>"

    # -- structure --

    def radical_subspaces(self) -> list[Subspace]:
        """Per vertex, the subspace ``(M rad)(y)`` in local coordinates."""
        alg = self.algebra
        vecs: list[list] = [[] for _ in self.vertex_dims]
        for b, rows in self._blocks.items():
            y = alg.corners[b][1]
            vecs[y].extend(list(r) for r in rows)
        return [Subspace(vecs[y], d) for y, d in enumerate(self.vertex_dims)]

    def top_dims(self) -> tuple[int, ...]:
        return tuple(d - s.dim for d, s in zip(self.vertex_dims, self.radical_subspaces()))

    def generators(self) -> list[tuple[int, list[Fraction]]]:
        """Minimal generators ``(vertex, local vector)``: units completing the radical at each vertex."""
        out = []
        for y, sub in enumerate(self.radical_subspaces()):
            for u in sub.complement_units():
                v = [ZERO] * self.vertex_dims[y]
                v[u] = ONE
                out.append((y, v))
        return out

    def socle_dims(self) -> tuple[int, ...]:
        alg = self.algebra
        out = []
        for x, d in enumerate(self.vertex_dims):
            cols = [b for b in self._blocks if alg.corners[b][0] == x]
            if not cols or d == 0:
                out.append(d)
                continue
            big = [sum((list(self._blocks[b][r]) for b in cols), []) for r in range(d)]
            out.append(len(nullspace_rows([list(c) for c in zip(*big)], d)))
        return tuple(out)


class FreeModule(Module):
    """``(+)_i e_{x_i} A`` with basis ``(i, c)``, ``c`` a basis element of ``e_{x_i} A``.

    ``layout[z]`` lists the pairs ``(i, c)`` spanning ``M(z)`` in order.
    """

    def __init__(self, algebra: Algebra, summands: Sequence[int]):
        self.summands = tuple(summands)
        layout = []
        for z in range(algebra.n_vertices):
            layout.append([(i, c) for i, x in enumerate(self.summands) for c in algebra.corner_basis(x, z)])
        self.layout = layout
        self.position = {ic: (z, k) for z, lay in enumerate(layout) for k, ic in enumerate(lay)}
        blocks = {}
        idem = set(algebra.idempotents)
        for b in range(algebra.dim):
            if b in idem:
                continue
            y, z = algebra.corners[b]
            if not layout[y] or not layout[z]:
                continue
            rows = []
            for i, c in layout[y]:
                row = [ZERO] * len(layout[z])
                for d, coef in algebra.mul(c, b):
                    row[self.position[(i, d)][1]] += coef
                rows.append(row)
            blocks[b] = rows
        super().__init__(algebra, [len(l) for l in layout], blocks, validate=False)

    def generator_vector(self, i: int) -> tuple[int, list[Fraction]]:
        x = self.summands[i]
        v = [ZERO] * self.vertex_dims[x]
        v[self.position[(i, self.algebra.idempotents[x])][1]] = ONE
        return x, v

    def to_entries(self, z: int, v: Sequence) -> dict[int, dict[int, Fraction]]:
        """Split a local vector at ``z`` into per-summand algebra elements."""
        out: dict[int, dict[int, Fraction]] = {}
        for k, x in enumerate(v):
            if x:
                i, c = self.layout[z][k]
                out.setdefault(i, {})[c] = x
        return out

    def from_entries(self, z: int, entries: Mapping[int, Mapping[int, Fraction]]) -> list[Fraction]:
        v = [ZERO] * self.vertex_dims[z]
        for i, elem in entries.items():
            for c, x in elem.items():
                if x:
                    v[self.position[(i, c)][1]] += x
        return v


class CofreeModule(Module):
    """``(+)_i D(A e_{x_i})``; basis ``(i, b)`` is the functional dual to ``b`` in ``A e_{x_i}``."""

    def __init__(self, algebra: Algebra, summands: Sequence[int]):
        self.summands = tuple(summands)
        layout = []
        for u in range(algebra.n_vertices):
            layout.append([(i, b) for i, x in enumerate(self.summands) for b in algebra.corner_basis(u, x)])
        self.layout = layout
        self.position = {ib: (u, k) for u, lay in enumerate(layout) for k, ib in enumerate(lay)}
        blocks = {}
        idem = set(algebra.idempotents)
        for a in range(algebra.dim):
            if a in idem:
                continue
            u, w = algebra.corners[a]
            if not layout[u] or not layout[w]:
                continue
            rows = []
            for i, b in layout[u]:
                row = [ZERO] * len(layout[w])
                for y in algebra.corner_basis(w, self.summands[i]):
                    for c, coef in algebra.mul(a, y):
                        if c == b:
                            row[self.position[(i, y)][1]] += coef
                rows.append(row)
            blocks[a] = rows
        super().__init__(algebra, [len(l) for l in layout], blocks, validate=False)


def projective_module(algebra: Algebra, x: int) -> FreeModule:
    if not 0 <= x < algebra.n_vertices:
        raise ModuleError(f"vertex {x} out of range")
    return FreeModule(algebra, (x,))


def injective_module(algebra: Algebra, x: int) -> CofreeModule:
    if not 0 <= x < algebra.n_vertices:
        raise ModuleError(f"vertex {x} out of range")
    return CofreeModule(algebra, (x,))


def simple_module(algebra: Algebra, x: int) -> Module:
    dims = [0] * algebra.n_vertices
    dims[x] = 1
    return Module(algebra, dims, {}, validate=False)


def zero_module(algebra: Algebra) -> Module:
    return Module(algebra, [0] * algebra.n_vertices, {}, validate=False)


def direct_sum(modules: Sequence[Module]) -> Module:
    if not modules:
        raise ModuleError("empty direct sum needs an algebra; use zero_module")
    alg = modules[0].algebra
    n = alg.n_vertices
    dims = [sum(m.vertex_dims[x] for m in modules) for x in range(n)]
    blocks = {}
    for b in alg.radical():
        x, y = alg.corners[b]
        if not dims[x] or not dims[y]:
            continue
        rows = []
        col = 0
        for m in modules:
            for r in m.raw_block(b):
                rows.append([ZERO] * col + list(r) + [ZERO] * (dims[y] - col - m.vertex_dims[y]))
            col += m.vertex_dims[y]
        blocks[b] = rows
    return Module(alg, dims, blocks, validate=False)


def standard_modules(n: int) -> dict[str, list[Module]]:
    """P_i, S_i, I_i over kA_n (lists indexed from 0 for i = 1..n)."""
    from .algebra import linear_path_algebra

    alg = linear_path_algebra(n)
    return {
        "algebra": alg,
        "P": [projective_module(alg, x) for x in range(n)],
        "S": [simple_module(alg, x) for x in range(n)],
        "I": [injective_module(alg, x) for x in range(n)],
    }


# --- maps ---

class ModuleMap:
    """Homomorphism of right modules, one block ``M(x) -> N(x)`` per vertex (row vectors)."""

    def __init__(self, source: Module, target: Module, blocks: Mapping[int, object], *, validate: bool = True):
        self.source, self.target = source, target
        n = source.algebra.n_vertices
        bl = {}
        for x in range(n):
            m = blocks.get(x)
            if m is None:
                m = [[ZERO] * target.vertex_dims[x] for _ in range(source.vertex_dims[x])]
            rows = m.rows if isinstance(m, Matrix) else m
            if len(rows) != source.vertex_dims[x] or any(len(r) != target.vertex_dims[x] for r in rows):
                raise ModuleError(f"map block at vertex {x} has wrong shape")
            bl[x] = [list(r) for r in rows]
        self.blocks = bl
        if validate:
            self.validate()

    @classmethod
    def from_matrix(cls, source: Module, target: Module, matrix: Matrix) -> "ModuleMap":
        if matrix.shape != (source.dim, target.dim):
            raise ModuleError("matrix shape does not match modules")
        blocks = {}
        for x in range(source.algebra.n_vertices):
            for y in range(source.algebra.n_vertices):
                sub = [matrix.rows[source.offsets[x] + r][target.offsets[y]:target.offsets[y] + target.vertex_dims[y]]
                       for r in range(source.vertex_dims[x])]
                if x == y:
                    blocks[x] = sub
                elif not _is_zero(sub):
                    raise ModuleError("matrix does not respect vertices")
        return cls(source, target, blocks)

    @property
    def matrix(self) -> Matrix:
        out = [[ZERO] * self.target.dim for _ in range(self.source.dim)]
        for x, rows in self.blocks.items():
            ox, oy = self.source.offsets[x], self.target.offsets[x]
            for r, row in enumerate(rows):
                for c, v in enumerate(row):
                    out[ox + r][oy + c] = v
        return Matrix(out, ncols=self.target.dim)

    def validate(self) -> None:
        alg = self.source.algebra
        if not (alg is self.target.algebra or alg.same_structure(self.target.algebra)):
            raise ModuleError("modules over different algebras")
        for b in alg.arrows():
            x, y = alg.corners[b]
            lhs = _mm(self.source.raw_block(b), self.blocks[y], self.target.vertex_dims[y])
            rhs = _mm(self.blocks[x], self.target.raw_block(b), self.target.vertex_dims[y])
            if lhs != rhs:
                raise ModuleError(f"map does not commute with {alg.labels[b]}")

    def then(self, g: "ModuleMap") -> "ModuleMap":
        """Composite ``g o self``."""
        blocks = {x: _mm(self.blocks[x], g.blocks[x], g.target.vertex_dims[x]) for x in self.blocks}
        return ModuleMap(self.source, g.target, blocks, validate=False)

    def is_zero(self) -> bool:
        return all(_is_zero(b) for b in self.blocks.values())

    def apply(self, x: int, v: Sequence) -> list[Fraction]:
        return vec_mat(v, self.blocks[x], self.target.vertex_dims[x])

    def rank(self) -> int:
        return sum(Subspace(rows, self.target.vertex_dims[x]).dim for x, rows in self.blocks.items())

    def flat(self) -> list[Fraction]:
        return [v for x in sorted(self.blocks) for r in self.blocks[x] for v in r]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ModuleMap):
            return NotImplemented
        return self.source == other.source and self.target == other.target and self.blocks == other.blocks

    def __hash__(self) -> int:
        return hash(tuple(self.flat()))


def identity_map(m: Module) -> ModuleMap:
    return ModuleMap(m, m, {x: _identity(d) for x, d in enumerate(m.vertex_dims)}, validate=False)


def zero_map(m: Module, n: Module) -> ModuleMap:
    return ModuleMap(m, n, {}, validate=False)


def _hom_unknowns(m: Module, n: Module):
    off, pos = {}, 0
    for x in range(m.algebra.n_vertices):
        off[x] = pos
        pos += m.vertex_dims[x] * n.vertex_dims[x]
    return off, pos


def hom_space(m: Module, n: Module) -> list[ModuleMap]:
    """Basis of Hom_A(M, N) from the intertwining equations on the arrows."""
    alg = m.algebra
    if not (alg is n.algebra or alg.same_structure(n.algebra)):
        raise ModuleError("modules over different algebras")
    off, total = _hom_unknowns(m, n)
    if total == 0:
        return []
    eqs = []
    for b in alg.arrows():
        x, y = alg.corners[b]
        mx, my, nx, ny = m.vertex_dims[x], m.vertex_dims[y], n.vertex_dims[x], n.vertex_dims[y]
        if not (mx and ny):
            continue
        mb, nb = m.raw_block(b), n.raw_block(b)
        for r in range(mx):
            for c in range(ny):
                row = {}
                for k in range(my):
                    if mb[r][k]:
                        idx = off[y] + k * ny + c
                        row[idx] = row.get(idx, ZERO) + mb[r][k]
                for k in range(nx):
                    if nb[k][c]:
                        idx = off[x] + r * nx + k
                        row[idx] = row.get(idx, ZERO) - nb[k][c]
                if any(row.values()):
                    dense = [ZERO] * total
                    for i, v in row.items():
                        dense[i] = v
                    eqs.append(dense)
    basis = nullspace_rows(eqs, total) if eqs else _identity(total)
    return [_unflatten(m, n, off, v) for v in basis]


def _unflatten(m: Module, n: Module, off, v) -> ModuleMap:
    blocks = {}
    for x in range(m.algebra.n_vertices):
        mx, nx = m.vertex_dims[x], n.vertex_dims[x]
        blocks[x] = [list(v[off[x] + r * nx: off[x] + (r + 1) * nx]) for r in range(mx)]
    return ModuleMap(m, n, blocks, validate=False)


def hom_dim(m: Module, n: Module) -> int:
    return len(hom_space(m, n))


# --- subquotients and duality ---

def subquotient(m: Module, upper: Sequence[Subspace], lower: Sequence[Subspace]):
    """Module ``U / L`` for submodules ``L <= U <= M`` given per vertex.

    Returns ``(module, reps)`` where ``reps[x]`` are the representatives in
    ``M(x)`` of the quotient basis.
    """
    alg = m.algebra
    reps = []
    spaces = []
    for x in range(alg.n_vertices):
        reduced = [lower[x].reduce(u) for u in upper[x].basis]
        w = Subspace(reduced, m.vertex_dims[x])
        spaces.append(w)
        reps.append(w.basis)
    blocks = {}
    for b in alg.radical():
        x, y = alg.corners[b]
        if not spaces[x].dim or not spaces[y].dim:
            continue
        rows = []
        for v in reps[x]:
            img = lower[y].reduce(m.act(v, b))
            if spaces[y].reduce(img) and any(spaces[y].reduce(img)):
                raise ModuleError("subspaces are not submodules")
            rows.append(spaces[y].coords(img))
        blocks[b] = rows
    return Module(alg, [s.dim for s in spaces], blocks, validate=False), reps


def kernel_subspaces(f: ModuleMap) -> list[Subspace]:
    out = []
    for x, rows in f.blocks.items():
        d = f.source.vertex_dims[x]
        if not rows or f.target.vertex_dims[x] == 0:
            out.append(Subspace(_identity(d), d))
        else:
            cols = [list(c) for c in zip(*rows)]
            out.append(Subspace(nullspace_rows(cols, d), d))
    return out


def image_subspaces(f: ModuleMap) -> list[Subspace]:
    return [Subspace(rows, f.target.vertex_dims[x]) for x, rows in f.blocks.items()]


def full_subspaces(m: Module) -> list[Subspace]:
    return [Subspace(_identity(d), d) for d in m.vertex_dims]


def null_subspaces(m: Module) -> list[Subspace]:
    return [Subspace([], d) for d in m.vertex_dims]


def cokernel(f: ModuleMap) -> Module:
    return subquotient(f.target, full_subspaces(f.target), image_subspaces(f))[0]


def kernel(f: ModuleMap) -> Module:
    return subquotient(f.source, kernel_subspaces(f), null_subspaces(f.source))[0]


def module_dual(m: Module) -> Module:
    """``D M = Hom_k(M, k)`` as a right module over the opposite algebra."""
    op = m.algebra.opposite()
    blocks = {b: [list(c) for c in zip(*rows)] for b, rows in m.nonzero_blocks().items()}
    return Module(op, m.vertex_dims, blocks, validate=False)


def dual_map(f: ModuleMap) -> ModuleMap:
    src, tgt = module_dual(f.target), module_dual(f.source)
    blocks = {}
    for x, rows in f.blocks.items():
        blocks[x] = [list(c) for c in zip(*rows)] if rows and rows[0] else \
            [[ZERO] * f.source.vertex_dims[x] for _ in range(f.target.vertex_dims[x])]
    return ModuleMap(src, tgt, blocks, validate=False)


def endomorphism_trace_rank(m: Module) -> int:
    """Rank of the trace form on End(M); equals 1 for a module with local End over Q."""
    basis = hom_space(m, m)
    k = len(basis)
    gram = []
    for f in basis:
        row = []
        for g in basis:
            fg = f.then(g)
            row.append(sum((fg.blocks[x][i][i] for x in fg.blocks for i in range(len(fg.blocks[x]))), ZERO))
        gram.append(row)
    return Subspace(gram, k).dim


def is_indecomposable(m: Module) -> bool:
    """End(M) is local; decided by dim End = 1 or the trace-form criterion.

    Over Q, End(M) is local iff every endomorphism is a scalar plus a
    nilpotent.  The trace form then has rank exactly 1 and, conversely,
    rank 1 with nilpotent radical forces End/rad = Q.
    """
    if m.dim == 0:
        return False
    basis = hom_space(m, m)
    if len(basis) == 1:
        return True
    if endomorphism_trace_rank(m) != 1:
        return False
    # every endomorphism minus (trace/dim) id must be nilpotent
    for f in basis:
        tr = sum((f.blocks[x][i][i] for x in f.blocks for i in range(len(f.blocks[x]))), ZERO)
        lam = tr / m.dim
        g = Matrix(f.matrix.rows) - Matrix.identity(m.dim) * lam
        p = g
        for _ in range(m.dim):
            p = p @ g
        if not p.is_zero():
            return False
    return True
