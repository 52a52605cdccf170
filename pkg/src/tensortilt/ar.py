"""Auslander-Reiten knitting for representation-finite hereditary algebras.

Every indecomposable over a Dynkin path algebra is ``tau^{-i} P_x`` for a
unique pair ``(x, i)``, so iterating the inverse translate from each
indecomposable projective lists them all.  Endomorphism rings of sums of
these modules are assembled as generalized matrix rings, with the identity
first in each diagonal cell.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .algebra import Algebra, GeneralizedMatrixRing
from .complexes import Cohomology, global_dimension, tau_inverse
from .linalg import Subspace
from .modules import (
    Module,
    ModuleMap,
    _hom_unknowns,
    _unflatten,
    hom_space,
    identity_map,
    is_indecomposable,
    projective_module,
)
from .tilting import HomCategory


class KnitError(ValueError):
    def __init__(self, message: str, witness: tuple = ()):
        super().__init__(message)
        self.witness = witness


@dataclass
class ARData:
    """Preprojective orbits: ``orbits[x][i]`` is ``tau^{-i} P_x``."""

    algebra: Algebra
    orbits: list[list[Module]]
    orbit_sizes: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        self.orbit_sizes = tuple(len(o) - 1 for o in self.orbits)

    @property
    def indecomposables(self) -> list[Module]:
        """All modules, ordered by translate level and then by vertex."""
        return [m for _, _, m in self.positions()]

    def positions(self) -> list[tuple[int, int, Module]]:
        out = []
        for i in range(max(self.orbit_sizes) + 1):
            for x, orb in enumerate(self.orbits):
                if i < len(orb):
                    out.append((x, i, orb[i]))
        return out

    def count(self) -> int:
        return sum(len(o) for o in self.orbits)

    def is_projective(self, x: int, i: int) -> bool:
        return i == 0


def default_max_steps(algebra: Algebra) -> int:
    q = algebra.gabriel_quiver()
    return 2 * (q.vertex_count + len(q.arrows))


def knit(algebra: Algebra, max_steps: int | None = None, *, certify: bool = True) -> ARData:
    """Iterate ``tau^-`` from each indecomposable projective until it vanishes."""
    if global_dimension(algebra) > 1:
        raise KnitError("knitting needs a hereditary algebra")
    if max_steps is None:
        max_steps = default_max_steps(algebra)
    orbits = []
    seen: dict[tuple[int, ...], tuple[int, int]] = {}
    for x in range(algebra.n_vertices):
        m: Module = projective_module(algebra, x)
        orbit = []
        while m.dim:
            i = len(orbit)
            if i > max_steps:
                raise KnitError(f"orbit of P{x + 1} did not terminate within {max_steps} steps", (x, i))
            dv = m.dimvec()
            if dv in seen:
                # Dynkin indecomposables are determined by their dimension vectors
                raise KnitError(f"repeated dimension vector {dv}", (x, i, seen[dv]))
            if certify and not is_indecomposable(m):
                raise KnitError(f"tau^-{i} P{x + 1} is decomposable", (x, i))
            seen[dv] = (x, i)
            orbit.append(m)
            m = tau_inverse(m)
        orbits.append(orbit)
    return ARData(algebra, orbits)


def is_homogeneous(algebra: Algebra, data: ARData | None = None) -> tuple[bool, int | None]:
    """True (with the common r) iff every projective has the same orbit length."""
    data = data or knit(algebra)
    sizes = set(data.orbit_sizes)
    if len(sizes) == 1:
        return True, sizes.pop()
    return False, None


# --- endomorphism rings of module sums ---

def _flat_dim(m: Module, n: Module) -> int:
    return _hom_unknowns(m, n)[1]


def projectively_trivial(m: Module, n: Module) -> Subspace:
    """Maps ``M -> N`` factoring through a projective, as flattened vectors."""
    alg = m.algebra
    vecs = []
    for x in range(alg.n_vertices):
        p = projective_module(alg, x)
        into = hom_space(m, p)
        if not into:
            continue
        outof = hom_space(p, n)
        vecs.extend(a.then(b).flat() for a in into for b in outof)
    return Subspace(vecs, _flat_dim(m, n))


class ModuleHomCategory(HomCategory):
    """Hom spaces between listed modules; ``cell(i, j)`` is ``Hom(M_j, M_i)``.

    With ``stable=True`` maps factoring through projectives are divided out.
    """

    def __init__(self, modules: Sequence[Module], stable: bool = False):
        self.objects = list(modules)
        self.stable = stable
        self._coh: dict[tuple[int, int], Cohomology] = {}

    def hom_complex(self, i, j):
        raise NotImplementedError("module categories have no Hom complexes")

    def cell(self, i: int, j: int) -> Cohomology:
        key = (i, j)
        if key not in self._coh:
            src, tgt = self.objects[j], self.objects[i]
            n = _flat_dim(src, tgt)
            cycles = Subspace([f.flat() for f in hom_space(src, tgt)], n)
            bounds = projectively_trivial(src, tgt) if self.stable else Subspace([], n)
            pref = [identity_map(src).flat()] if i == j else []
            self._coh[key] = Cohomology(cycles, bounds, pref)
        return self._coh[key]

    def as_map(self, i: int, j: int, v: Sequence[Fraction]) -> ModuleMap:
        src, tgt = self.objects[j], self.objects[i]
        return _unflatten(src, tgt, _hom_unknowns(src, tgt)[0], v)

    def compose(self, i: int, j: int, l: int, g, f) -> list[Fraction]:
        return self.as_map(j, l, f).then(self.as_map(i, j, g)).flat()


def module_end_ring(modules: Sequence[Module], *, stable: bool = False,
                    labels: Sequence[str] | None = None, name: str | None = None) -> Algebra:
    cat = ModuleHomCategory(modules, stable=stable)
    grid: GeneralizedMatrixRing = cat.grid(labels)
    return grid.to_algebra(name=name)


def _labels(data: ARData, keep) -> list[str]:
    return [f"t{i}P{x + 1}" for x, i, _ in data.positions() if keep(x, i)]


def initial_endomorphism_algebra(algebra: Algebra, r: int, data: ARData | None = None) -> Algebra:
    """End of the sum of ``tau^{-i} P_x`` over all x and ``0 <= i <= r``."""
    data = data or knit(algebra)
    for x, size in enumerate(data.orbit_sizes):
        if size < r:
            raise KnitError(f"tau^-{r} P{x + 1} vanishes", (x, r))
    keep = lambda x, i: i <= r
    mods = [m for x, i, m in data.positions() if keep(x, i)]
    return module_end_ring(mods, labels=_labels(data, keep), name=f"End(T{r})")


def auslander_algebra(algebra: Algebra, data: ARData | None = None) -> Algebra:
    data = data or knit(algebra)
    keep = lambda x, i: True
    return module_end_ring(data.indecomposables, labels=_labels(data, keep), name="Aus")


def stable_auslander_algebra(algebra: Algebra, data: ARData | None = None) -> Algebra:
    data = data or knit(algebra)
    keep = lambda x, i: i > 0
    mods = [m for x, i, m in data.positions() if keep(x, i)]
    if not mods:
        raise KnitError("every indecomposable is projective")
    return module_end_ring(mods, stable=True, labels=_labels(data, keep), name="sAus")


def ar_quiver_dot(data: ARData, name: str = "AR") -> str:
    """AR quiver in DOT: projectives as white dots, the rest black.

    Irreducible maps are read off the Gabriel quiver of the Auslander algebra;
    an arrow there in cell (i, j) is a map ``M_j -> M_i``.
    """
    aus = auslander_algebra(data.algebra, data)
    pos = data.positions()
    lines = [f"digraph {name} {{", "  rankdir=LR;"]
    for k, (x, i, m) in enumerate(pos):
        fill = "white" if i == 0 else "black"
        font = "black" if i == 0 else "white"
        dv = "".join(str(d) for d in m.dimvec())
        lines.append(f'  n{k} [label="{dv}", shape=circle, style=filled, '
                     f'fillcolor={fill}, fontcolor={font}];')
    for s, t, _ in aus.gabriel_quiver().arrows:
        lines.append(f"  n{t} -> n{s};")
    lines.append("}")
    return "\n".join(lines)
