"""Basic finite-dimensional algebras given by structure constants.

An :class:`Algebra` carries a *directed* basis: every basis element ``b``
satisfies ``e_x b e_y = b`` for a unique pair of primitive idempotents
``(x, y)``, its *corner*.  Primitive idempotents are themselves basis
elements.  For a path algebra the corner of a path is (source, target) and
products are concatenation, so right modules are representations of the
quiver.
"""
from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .linalg import ONE, ZERO, Matrix, Subspace, as_scalar

Element = dict  # sparse algebra element {basis index: Fraction}


class AlgebraError(ValueError):
    """Raised when structure constants violate an algebra axiom.

    ``witness`` names the offending basis labels.
    """

    def __init__(self, message: str, witness: tuple = ()):
        super().__init__(message if not witness else f"{message}: {witness}")
        self.witness = witness


@dataclass(frozen=True)
class Quiver:
    vertex_count: int
    arrows: tuple[tuple[int, int, str], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "arrows", tuple(tuple(a) for a in self.arrows))
        labels = [a[2] for a in self.arrows]
        if len(set(labels)) != len(labels):
            raise ValueError("arrow labels must be unique")
        for s, t, lab in self.arrows:
            if not (0 <= s < self.vertex_count and 0 <= t < self.vertex_count):
                raise ValueError(f"arrow {lab} has endpoint out of range")

    @classmethod
    def linear(cls, n: int) -> "Quiver":
        """1 -> 2 -> ... -> n (0-based vertices)."""
        return cls(n, tuple((i, i + 1, f"a{i + 1}") for i in range(n - 1)))

    def out_arrows(self, v: int) -> list[tuple[int, int, str]]:
        return [a for a in self.arrows if a[0] == v]

    def is_acyclic(self) -> bool:
        indeg = [0] * self.vertex_count
        for _, t, _ in self.arrows:
            indeg[t] += 1
        stack = [v for v in range(self.vertex_count) if indeg[v] == 0]
        seen = 0
        while stack:
            v = stack.pop()
            seen += 1
            for _, t, _ in self.out_arrows(v):
                indeg[t] -= 1
                if indeg[t] == 0:
                    stack.append(t)
        return seen == self.vertex_count

    def arrow_counts(self) -> dict[tuple[int, int], int]:
        counts: dict[tuple[int, int], int] = defaultdict(int)
        for s, t, _ in self.arrows:
            counts[(s, t)] += 1
        return dict(counts)

    def to_dot(self, name: str = "Q", vertex_labels: Sequence[str] | None = None) -> str:
        lines = [f"digraph {name} {{"]
        for v in range(self.vertex_count):
            lab = vertex_labels[v] if vertex_labels else str(v + 1)
            lines.append(f'  v{v} [label="{lab}"];')
        for s, t, lab in self.arrows:
            lines.append(f'  v{s} -> v{t} [label="{lab}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


class Algebra:
    """Finite-dimensional basic algebra with a directed basis.

    ``mult`` maps basis index pairs ``(a, b)`` to the sparse coefficient
    vector of ``basis_a * basis_b``; missing pairs multiply to zero.
    Construction validates associativity on every composable triple.
    """

    def __init__(
        self,
        labels: Sequence[str],
        mult: Mapping[tuple[int, int], Mapping[int, object]],
        idempotents: Sequence[int],
        *,
        name: str | None = None,
        validate: bool = True,
    ):
        self.labels = tuple(str(s) for s in labels)
        self.dim = len(self.labels)
        table: dict[tuple[int, int], tuple[tuple[int, Fraction], ...]] = {}
        for (a, b), vec in mult.items():
            items = tuple(sorted((int(c), as_scalar(x)) for c, x in vec.items() if x))
            if items:
                table[(a, b)] = items
        self._mult = table
        self.idempotents = tuple(int(i) for i in idempotents)
        self.name = name
        self._cache: dict = {}
        self.corners = self._find_corners()
        self.n_vertices = len(self.idempotents)
        self.by_corner: dict[tuple[int, int], list[int]] = defaultdict(list)
        self.from_source: list[list[int]] = [[] for _ in self.idempotents]
        for b, (x, y) in enumerate(self.corners):
            self.by_corner[(x, y)].append(b)
            self.from_source[x].append(b)
        self.by_corner = dict(self.by_corner)
        if validate:
            self.validate()

    # -- structure --

    def _find_corners(self) -> tuple[tuple[int, int], ...]:
        idem = self.idempotents
        if len(set(idem)) != len(idem):
            raise AlgebraError("repeated idempotent")
        corners = []
        for b in range(self.dim):
            left = [x for x, e in enumerate(idem) if (e, b) in self._mult]
            right = [y for y, e in enumerate(idem) if (b, e) in self._mult]
            if len(left) != 1 or len(right) != 1:
                raise AlgebraError("basis is not directed", (self.labels[b],))
            x, y = left[0], right[0]
            if self._mult[(idem[x], b)] != ((b, ONE),) or self._mult[(b, idem[y])] != ((b, ONE),):
                raise AlgebraError("basis element not fixed by its idempotents", (self.labels[b],))
            corners.append((x, y))
        return tuple(corners)

    def validate(self) -> None:
        idem = self.idempotents
        for x, ex in enumerate(idem):
            if self.corners[ex] != (x, x):
                raise AlgebraError("idempotent in wrong corner", (self.labels[ex],))
            for y, ey in enumerate(idem):
                got = self._mult.get((ex, ey), ())
                want = ((ex, ONE),) if x == y else ()
                if got != want:
                    raise AlgebraError("idempotents not orthogonal", (self.labels[ex], self.labels[ey]))
        for (a, b), vec in self._mult.items():
            xa, ya = self.corners[a]
            xb, yb = self.corners[b]
            if ya != xb:
                raise AlgebraError("nonzero product across corners", (self.labels[a], self.labels[b]))
            for c, _ in vec:
                if self.corners[c] != (xa, yb):
                    raise AlgebraError("product leaves its corner", (self.labels[a], self.labels[b]))
        self._check_associativity()

    def _check_associativity(self) -> None:
        right_of: dict[int, list[int]] = defaultdict(list)
        for (a, b) in self._mult:
            right_of[a].append(b)
        for a in range(self.dim):
            ya = self.corners[a][1]
            for b in self.from_source[ya]:
                ab = self._mult.get((a, b))
                yb = self.corners[b][1]
                for c in self.from_source[yb]:
                    bc = self._mult.get((b, c))
                    lhs = self.mul_vec(dict(ab), {c: ONE}) if ab else {}
                    rhs = self.mul_vec({a: ONE}, dict(bc)) if bc else {}
                    if lhs != rhs:
                        raise AlgebraError(
                            "associativity fails",
                            (self.labels[a], self.labels[b], self.labels[c]),
                        )

    @property
    def unit(self) -> tuple[Fraction, ...]:
        u = [ZERO] * self.dim
        for e in self.idempotents:
            u[e] = ONE
        return tuple(u)

    @property
    def mult(self) -> dict[tuple[int, int], tuple[tuple[int, Fraction], ...]]:
        return self._mult

    def mul(self, a: int, b: int) -> tuple[tuple[int, Fraction], ...]:
        return self._mult.get((a, b), ())

    def mul_vec(self, u: Mapping[int, Fraction], v: Mapping[int, Fraction]) -> Element:
        out: dict[int, Fraction] = defaultdict(lambda: ZERO)
        for a, x in u.items():
            if not x:
                continue
            for b, y in v.items():
                if not y:
                    continue
                for c, z in self._mult.get((a, b), ()):
                    out[c] += x * y * z
        return {c: x for c, x in out.items() if x}

    def corner_basis(self, x: int, y: int) -> list[int]:
        return self.by_corner.get((x, y), [])

    def cartan_matrix(self) -> Matrix:
        n = self.n_vertices
        return Matrix([[len(self.corner_basis(x, y)) for y in range(n)] for x in range(n)])

    def __repr__(self) -> str:
        nm = f" {self.name}" if self.name else ""
        return f"<Algebra{nm} dim={self.dim} vertices={self.n_vertices}>"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Algebra):
            return NotImplemented
        return (
            self.labels == other.labels
            and self.idempotents == other.idempotents
            and self._mult == other._mult
        )

    def __hash__(self) -> int:
        return hash((self.labels, self.idempotents, len(self._mult)))

    def same_structure(self, other: "Algebra") -> bool:
        """Equal structure constants and idempotents, labels ignored."""
        return self.idempotents == other.idempotents and self._mult == other._mult

    def is_isomorphic_via(self, other: "Algebra", mapping: Sequence[int]) -> tuple[bool, tuple]:
        """Check that basis map ``i -> mapping[i]`` is an algebra isomorphism.

        Returns ``(True, ())`` or ``(False, witness)``.
        """
        if self.dim != other.dim or sorted(mapping) != list(range(other.dim)):
            return False, ("not a bijection of bases",)
        if sorted(mapping[e] for e in self.idempotents) != sorted(other.idempotents):
            return False, ("idempotents not matched",)
        for a in range(self.dim):
            for b in range(self.dim):
                lhs = {mapping[c]: x for c, x in self.mul(a, b)}
                rhs = dict(other.mul(mapping[a], mapping[b]))
                if lhs != rhs:
                    return False, (self.labels[a], self.labels[b])
        return True, ()

    def opposite(self) -> "Algebra":
        key = "opposite"
        if key not in self._cache:
            mult = {(b, a): dict(v) for (a, b), v in self._mult.items()}
            op = Algebra(self.labels, mult, self.idempotents, name=f"{self.name or 'A'}^op", validate=False)
            op._cache["opposite"] = self
            self._cache[key] = op
        return self._cache[key]

    # -- radical and quiver --

    def radical(self) -> list[int]:
        """Indices of non-idempotent basis elements, checked to span a nilpotent ideal."""
        if "radical" in self._cache:
            return self._cache["radical"]
        idem = set(self.idempotents)
        rad = [b for b in range(self.dim) if b not in idem]
        for a in rad:
            for b in rad:
                for c, _ in self.mul(a, b):
                    if c in idem:
                        raise AlgebraError("radical not closed", (self.labels[a], self.labels[b]))
        power = [{b: ONE} for b in rad]
        for _ in range(self.dim + 1):
            if not power:
                break
            nxt = Subspace(
                [self._dense(self.mul_vec(p, {b: ONE})) for p in power for b in rad], self.dim
            )
            power = [self._sparse(v) for v in nxt.basis]
        else:
            raise AlgebraError("radical is not nilpotent")
        if power:
            raise AlgebraError("radical is not nilpotent")
        self._cache["radical"] = rad
        return rad

    def radical_power_basis(self, k: int) -> list[dict]:
        """rref basis of rad^k as sparse vectors."""
        rad = self.radical()
        cur = [{b: ONE} for b in rad]
        for _ in range(k - 1):
            sub = Subspace([self._dense(self.mul_vec(p, {b: ONE})) for p in cur for b in rad], self.dim)
            cur = [self._sparse(v) for v in sub.basis]
        return cur

    def loewy_length(self) -> int:
        k = 1
        while self.radical_power_basis(k):
            k += 1
        return k

    def arrows(self) -> list[int]:
        """Basis elements of rad chosen greedily to complement rad^2; they generate rad."""
        if "arrows" in self._cache:
            return self._cache["arrows"]
        rad = self.radical()
        rad2 = [self._dense(v) for v in self.radical_power_basis(2)]
        span = list(rad2)
        rank = Subspace(span, self.dim).dim
        chosen = []
        for b in rad:
            v = [ZERO] * self.dim
            v[b] = ONE
            trial = Subspace(span + [v], self.dim).dim
            if trial > rank:
                span.append(v)
                rank = trial
                chosen.append(b)
        self._cache["arrows"] = chosen
        return chosen

    def gabriel_quiver(self) -> Quiver:
        self.radical()
        arrows = sorted(self.arrows(), key=lambda b: (self.corners[b], b))
        return Quiver(self.n_vertices, tuple((*self.corners[b], self.labels[b]) for b in arrows))

    def _dense(self, v: Mapping[int, Fraction]) -> list[Fraction]:
        w = [ZERO] * self.dim
        for c, x in v.items():
            w[c] = x
        return w

    @staticmethod
    def _sparse(v: Sequence[Fraction]) -> dict:
        return {i: x for i, x in enumerate(v) if x}

    # -- interchange --

    def to_json_dict(self) -> dict:
        triples = []
        for (a, b), vec in sorted(self._mult.items()):
            for c, x in vec:
                triples.append([a, b, c, str(x)])
        return {
            "basis": list(self.labels),
            "unit": [str(x) for x in self.unit],
            "idempotents": [[e] for e in self.idempotents],
            "mult": triples,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), ensure_ascii=False, sort_keys=True)

    @classmethod
    def from_json_dict(cls, data: Mapping, name: str | None = None) -> "Algebra":
        mult: dict[tuple[int, int], dict[int, Fraction]] = defaultdict(dict)
        for a, b, c, x in data["mult"]:
            mult[(a, b)][c] = Fraction(x)
        idem = []
        for group in data["idempotents"]:
            if len(group) != 1:
                raise AlgebraError("idempotents must be single basis elements")
            idem.append(group[0])
        alg = cls(data["basis"], mult, idem, name=name)
        if "unit" in data and tuple(Fraction(x) for x in data["unit"]) != alg.unit:
            raise AlgebraError("unit does not match idempotents")
        return alg

    @classmethod
    def from_json(cls, text: str) -> "Algebra":
        return cls.from_json_dict(json.loads(text))


# --- constructors ---

def _unit_mult_for(idem_of_corner, corners, extra):
    """Add e_x b = b = b e_y relations for a directed basis."""
    mult = dict(extra)
    for b, (x, y) in enumerate(corners):
        mult[(idem_of_corner[x], b)] = {b: ONE}
        mult[(b, idem_of_corner[y])] = {b: ONE}
    return mult


def point_algebra() -> Algebra:
    """The one-dimensional algebra k."""
    return Algebra(["e"], {(0, 0): {0: ONE}}, [0], name="k")


def path_algebra(q: Quiver, name: str | None = None) -> Algebra:
    if not q.is_acyclic():
        raise ValueError("path algebra of a quiver with an oriented cycle is infinite-dimensional")
    paths: list[tuple[int, int, tuple[str, ...]]] = []
    for v in range(q.vertex_count):
        stack = [(v, v, ())]
        found = []
        while stack:
            s, t, arr = stack.pop()
            found.append((s, t, arr))
            for _, t2, lab in reversed(q.out_arrows(t)):
                stack.append((s, t2, arr + (lab,)))
        found.sort(key=lambda p: (len(p[2]), p[2]))
        paths.extend(found)
    index = {(p[0], p[2]): i for i, p in enumerate(paths)}
    labels = [f"e{p[0] + 1}" if not p[2] else "*".join(p[2]) for p in paths]
    idem = [index[(v, ())] for v in range(q.vertex_count)]
    mult: dict[tuple[int, int], dict[int, Fraction]] = {}
    by_source: dict[int, list[int]] = defaultdict(list)
    for i, (s, _, _) in enumerate(paths):
        by_source[s].append(i)
    for i, (s, t, arr) in enumerate(paths):
        for j in by_source[t]:
            _, _, arr2 = paths[j]
            mult[(i, j)] = {index[(s, arr + arr2)]: ONE}
    return Algebra(labels, mult, idem, name=name or "kQ")


def linear_path_algebra(n: int) -> Algebra:
    """kA_n with basis e(i,j), i <= j: paths from i to j in 1 -> 2 -> ... -> n."""
    return truncated_line_algebra(n, n + 1, symbol="e", name=f"kA{n}")


def truncated_line_algebra(n: int, ell: int, *, symbol: str = "eps", name: str | None = None) -> Algebra:
    """A(n, ell): kA_n modulo all paths of length ell."""
    if n < 1 or ell < 1:
        raise ValueError("need n >= 1 and ell >= 1")
    m = ell - 1
    basis = [(i, j) for i in range(1, n + 1) for j in range(i, min(n, i + m) + 1)]
    index = {p: k for k, p in enumerate(basis)}
    mult = {}
    for (i, j), a in index.items():
        for q in range(j, min(n, j + m) + 1):
            if q <= i + m:
                mult[(a, index[(j, q)])] = {index[(i, q)]: ONE}
    labels = [f"{symbol}({i},{j})" for i, j in basis]
    idem = [index[(i, i)] for i in range(1, n + 1)]
    return Algebra(labels, mult, idem, name=name or f"A({n},{ell})")


def tensor_algebra(a: Algebra, b: Algebra, name: str | None = None) -> Algebra:
    """A (x) B over k; basis pairs in A-major order, vertex (x, y) -> x * |B_0| + y."""
    db = b.dim
    labels = [f"{la}⊗{lb}" for la in a.labels for lb in b.labels]
    mult = {}
    for (a1, a2), va in a.mult.items():
        for (b1, b2), vb in b.mult.items():
            mult[(a1 * db + b1, a2 * db + b2)] = {
                c * db + d: x * y for c, x in va for d, y in vb
            }
    idem = [ea * db + eb for ea in a.idempotents for eb in b.idempotents]
    return Algebra(labels, mult, idem, name=name or f"({a.name or 'A'})⊗({b.name or 'B'})")


def triangular_matrix_algebra(lam: Algebra, n: int) -> Algebra:
    """T_n(Lambda) = Lambda (x) kA_n (upper triangular n x n matrices over Lambda)."""
    if n < 1:
        raise ValueError("n must be positive")
    t = tensor_algebra(lam, linear_path_algebra(n), name=f"T{n}({lam.name or 'L'})")
    return t


# --- bimodules and generalized matrix rings ---

class Bimodule:
    """A (left, right)-bimodule with row-vector action matrices.

    ``left_action[b]`` sends coordinates of q to those of ``basis_b * q``;
    ``right_action[b]`` those of ``q * basis_b``.
    """

    def __init__(
        self,
        left: Algebra,
        right: Algebra,
        labels: Sequence[str],
        left_action: Sequence[Matrix],
        right_action: Sequence[Matrix],
        *,
        validate: bool = True,
    ):
        self.left, self.right = left, right
        self.labels = tuple(labels)
        self.dim = len(self.labels)
        self.left_action = tuple(left_action)
        self.right_action = tuple(right_action)
        if validate:
            self.validate()
        self.corners = self._find_corners()

    def _find_corners(self):
        corners = []
        for q in range(self.dim):
            xs = [x for x, e in enumerate(self.left.idempotents) if self.left_action[e][q, q]]
            ys = [y for y, e in enumerate(self.right.idempotents) if self.right_action[e][q, q]]
            if len(xs) != 1 or len(ys) != 1:
                raise AlgebraError("bimodule basis is not adapted to idempotents", (self.labels[q],))
            corners.append((xs[0], ys[0]))
        return tuple(corners)

    def validate(self) -> None:
        for alg, act, side in ((self.left, self.left_action, "left"), (self.right, self.right_action, "right")):
            if len(act) != alg.dim:
                raise AlgebraError(f"{side} action needs one matrix per basis element")
            for m in act:
                if m.shape != (self.dim, self.dim):
                    raise AlgebraError(f"{side} action matrix has wrong shape")
            ident = Matrix.zeros(self.dim, self.dim)
            for e in alg.idempotents:
                ident = ident + act[e]
            if ident != Matrix.identity(self.dim):
                raise AlgebraError(f"{side} unit does not act as identity")
            for (a, b), vec in alg.mult.items():
                prod = Matrix.zeros(self.dim, self.dim)
                for c, x in vec:
                    prod = prod + act[c] * x
                composed = act[b] @ act[a] if side == "left" else act[a] @ act[b]
                if composed != prod:
                    raise AlgebraError(f"{side} action not multiplicative", (alg.labels[a], alg.labels[b]))
        for a, la in enumerate(self.left_action):
            for b, rb in enumerate(self.right_action):
                if la @ rb != rb @ la:
                    raise AlgebraError("left and right actions do not commute",
                                       (self.left.labels[a], self.right.labels[b]))


def _action_from_products(dim, pairs):
    return Matrix([[pairs.get((r, c), ZERO) for c in range(dim)] for r in range(dim)])


def regular_bimodule(lam: Algebra) -> Bimodule:
    d = lam.dim
    left, right = [], []
    for b in range(d):
        lp, rp = {}, {}
        for q in range(d):
            for c, x in lam.mul(b, q):
                lp[(q, c)] = x
            for c, x in lam.mul(q, b):
                rp[(q, c)] = x
        left.append(_action_from_products(d, lp))
        right.append(_action_from_products(d, rp))
    return Bimodule(lam, lam, lam.labels, left, right)


def dual_bimodule(lam: Algebra) -> Bimodule:
    """D(Lambda) = Hom_k(Lambda, k) with (l phi l')(x) = phi(l' x l).

    ``phi_b`` is the dual basis functional of basis element ``b``.
    """
    d = lam.dim
    left, right = [], []
    for a in range(d):
        lp, rp = {}, {}
        for x in range(d):
            # a . phi_b = sum_x coef_b(x a) phi_x ;  phi_b . a = sum_x coef_b(a x) phi_x
            for b, c in lam.mul(x, a):
                lp[(b, x)] = c
            for b, c in lam.mul(a, x):
                rp[(b, x)] = c
        left.append(_action_from_products(d, lp))
        right.append(_action_from_products(d, rp))
    labels = [f"D({s})" for s in lam.labels]
    return Bimodule(lam, lam, labels, left, right)


@dataclass
class GeneralizedMatrixRing:
    """An n x n grid of spaces M_ij with composition maps M_ij x M_jl -> M_il.

    ``cells[(i, j)]`` lists basis labels of M_ij (absent means zero).
    ``compose[(i, j, l)][(p, q)]`` is the sparse vector in M_il of the
    product of basis ``p`` of M_ij with basis ``q`` of M_jl.
    ``idempotents[i]`` lists the positions in M_ii of its primitive
    idempotents (default: position 0 is the identity).
    """

    size: int
    cells: dict[tuple[int, int], tuple[str, ...]]
    compose: dict[tuple[int, int, int], dict[tuple[int, int], dict[int, Fraction]]]
    idempotents: dict[int, tuple[int, ...]] = field(default_factory=dict)

    def cell_dim(self, i: int, j: int) -> int:
        return len(self.cells.get((i, j), ()))

    def dims(self) -> list[list[int]]:
        return [[self.cell_dim(i, j) for j in range(self.size)] for i in range(self.size)]

    def offsets(self) -> dict[tuple[int, int], int]:
        off, pos = {}, 0
        for i in range(self.size):
            for j in range(self.size):
                off[(i, j)] = pos
                pos += self.cell_dim(i, j)
        return off

    def to_algebra(self, name: str | None = None, validate: bool = True) -> Algebra:
        return generalized_matrix_ring(self, name=name, validate=validate)


def generalized_matrix_ring(grid: GeneralizedMatrixRing, *, name: str | None = None,
                            validate: bool = True) -> Algebra:
    off = grid.offsets()
    labels = []
    for i in range(grid.size):
        for j in range(grid.size):
            labels.extend(f"[{i + 1},{j + 1}]{s}" for s in grid.cells.get((i, j), ()))
    mult: dict[tuple[int, int], dict[int, Fraction]] = {}
    for (i, j, l), table in grid.compose.items():
        for (p, q), vec in table.items():
            if vec:
                mult[(off[(i, j)] + p, off[(j, l)] + q)] = {off[(i, l)] + r: x for r, x in vec.items()}
    idem = []
    for i in range(grid.size):
        if grid.cell_dim(i, i) == 0:
            raise AlgebraError("diagonal cell must be nonzero", (i,))
        for p in grid.idempotents.get(i, (0,)):
            idem.append(off[(i, i)] + p)
    return Algebra(labels, mult, idem, name=name, validate=validate)


def _algebra_cell_tables(lam: Algebra):
    return {(p, q): dict(v) for (p, q), v in lam.mult.items()}


def _left_table(bm: Bimodule):
    """(p, q) -> vector for basis p of the left algebra times basis q of the bimodule."""
    out = {}
    for p, m in enumerate(bm.left_action):
        for q in range(bm.dim):
            vec = {r: x for r, x in enumerate(m.rows[q]) if x}
            if vec:
                out[(p, q)] = vec
    return out


def _right_table(bm: Bimodule):
    out = {}
    for q in range(bm.dim):
        for p, m in enumerate(bm.right_action):
            vec = {r: x for r, x in enumerate(m.rows[q]) if x}
            if vec:
                out[(q, p)] = vec
    return out


def iterated_tilt_ring(lambdas: Sequence[Algebra], qs: Sequence[Bimodule], name: str | None = None) -> Algebra:
    """Lower triangular ring with Lambda_i on the diagonal and Q_i (a
    (Lambda_{i+1}, Lambda_i)-bimodule) just below it."""
    n = len(lambdas)
    if len(qs) != n - 1:
        raise ValueError("need one bimodule between consecutive algebras")
    for i, q in enumerate(qs):
        if q.left is not lambdas[i + 1] and not q.left.same_structure(lambdas[i + 1]):
            raise AlgebraError("bimodule left algebra mismatch", (i,))
        if q.right is not lambdas[i] and not q.right.same_structure(lambdas[i]):
            raise AlgebraError("bimodule right algebra mismatch", (i,))
        q.validate()
    cells, compose, idem = {}, {}, {}
    for i, lam in enumerate(lambdas):
        cells[(i, i)] = lam.labels
        compose[(i, i, i)] = _algebra_cell_tables(lam)
        idem[i] = lam.idempotents
    for i, q in enumerate(qs):
        cells[(i + 1, i)] = q.labels
        compose[(i + 1, i + 1, i)] = _left_table(q)
        compose[(i + 1, i, i)] = _right_table(q)
    grid = GeneralizedMatrixRing(n, cells, compose, idem)
    return generalized_matrix_ring(grid, name=name)


def replicated_algebra(lam: Algebra, n: int) -> Algebra:
    """Upper bidiagonal ring: Lambda on the diagonal, D(Lambda) on the superdiagonal."""
    if n < 1:
        raise ValueError("n must be positive")
    dl = dual_bimodule(lam)
    cells, compose, idem = {}, {}, {}
    for s in range(n):
        cells[(s, s)] = lam.labels
        compose[(s, s, s)] = _algebra_cell_tables(lam)
        idem[s] = lam.idempotents
    for s in range(n - 1):
        cells[(s, s + 1)] = dl.labels
        compose[(s, s, s + 1)] = _left_table(dl)
        compose[(s, s + 1, s + 1)] = _right_table(dl)
    grid = GeneralizedMatrixRing(n, cells, compose, idem)
    return generalized_matrix_ring(grid, name=f"Rep{n}({lam.name or 'L'})")


def relabel_vertices(alg: Algebra, order: Sequence[int]) -> list[int]:
    """Idempotent basis indices listed in the given vertex order (helper for comparisons)."""
    return [alg.idempotents[v] for v in order]


def element_to_str(alg: Algebra, v: Mapping[int, Fraction]) -> str:
    if not v:
        return "0"
    parts = []
    for b in sorted(v):
        x = v[b]
        parts.append(f"{'' if x == 1 else str(x) + '*'}{alg.labels[b]}")
    return " + ".join(parts)


def iter_basis_pairs(alg: Algebra) -> Iterable[tuple[int, int]]:
    for a in range(alg.dim):
        for b in alg.from_source[alg.corners[a][1]]:
            yield a, b
