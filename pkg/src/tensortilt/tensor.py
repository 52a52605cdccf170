"""The tensor construction: ``(+)_i T_i (x) U_i`` over ``A (x) B``.

Each ``T_i`` (over A) and ``U_i`` (over B) may be given as a list of
indecomposable pieces; a stalk complex with several summands is split
automatically.  The predicted endomorphism ring is the grid over pieces
``(i, a, b)`` whose cells are ``Hom(T_j^a', T_i^a) (x) Hom(U_j^b', U_i^b)``
with componentwise composition.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

from .algebra import Algebra, GeneralizedMatrixRing, generalized_matrix_ring, tensor_algebra
from .complexes import (
    ComplexError,
    ProjComplex,
    direct_sum_complexes,
    hom_complex,
    hom_range,
    stalk,
    tensor_chain_map,
    tensor_complex,
)
from .linalg import ZERO, Matrix
from .tilting import HomCategory, TiltingCertificate, certify_tilting, k0_certificate

Piecewise = Union[ProjComplex, Sequence[ProjComplex]]


class ConstructionError(ValueError):
    def __init__(self, message: str, witness: tuple = ()):
        super().__init__(f"{message}: {witness}" if witness else message)
        self.witness = witness


def pieces_of(x: Piecewise) -> list[ProjComplex]:
    if isinstance(x, ProjComplex):
        if x.lo == x.hi and not x.diffs and len(x.term(x.lo)) > 1:
            return [stalk(x.algebra, [v], x.lo) for v in x.term(x.lo)]
        return [x]
    return list(x)


@dataclass
class TensorTiltingInput:
    A: Algebra
    B: Algebra
    T: list
    U: list

    def __post_init__(self):
        if len(self.T) != len(self.U):
            raise ConstructionError("T and U need the same length")
        self.T = [pieces_of(t) for t in self.T]
        self.U = [pieces_of(u) for u in self.U]
        for ps in self.T:
            for p in ps:
                if not p.algebra.same_structure(self.A):
                    raise ConstructionError("T piece over the wrong algebra")
        for ps in self.U:
            for p in ps:
                if not p.algebra.same_structure(self.B):
                    raise ConstructionError("U piece over the wrong algebra")

    @property
    def n(self) -> int:
        return len(self.T)

    def t_complex(self, i: int) -> ProjComplex:
        return direct_sum_complexes(self.T[i])

    def u_complex(self, i: int) -> ProjComplex:
        return direct_sum_complexes(self.U[i])

    def piece_index(self) -> list[tuple[int, int, int]]:
        """Pieces ``(i, a, b)`` in A-factor-major order within each ``i``."""
        return [(i, a, b) for i in range(self.n) for a in range(len(self.T[i])) for b in range(len(self.U[i]))]


@dataclass
class CompatibilityTable:
    rows: list[dict]
    ok: bool
    first_violation: tuple | None

    def to_json_dict(self) -> dict:
        return {"ok": self.ok, "first_violation": list(self.first_violation) if self.first_violation else None,
                "rows": self.rows}


def check_compatibility(inp: TensorTiltingInput) -> CompatibilityTable:
    """For each (i, j) with Hom(U_i, U_j) != 0, require Hom(T_i, T_j[r]) = 0 for r != 0."""
    rows, first = [], None
    for i in range(inp.n):
        for j in range(inp.n):
            ui, uj = inp.u_complex(i), inp.u_complex(j)
            hom_u = hom_complex(ui, uj, degrees=(-1, 0)).cohomology_dim(0)
            row = {"i": i + 1, "j": j + 1, "hom_U": hom_u, "required": bool(hom_u), "nonzero_r": []}
            if hom_u:
                ti, tj = inp.t_complex(i), inp.t_complex(j)
                hc = hom_complex(ti, tj)
                for r in hom_range(ti, tj):
                    if r != 0 and hc.cohomology_dim(r):
                        row["nonzero_r"].append(r)
                        if first is None:
                            first = (i + 1, j + 1, r)
            rows.append(row)
    return CompatibilityTable(rows, first is None, first)


def build_tensor_tilting(inp: TensorTiltingInput, *, algebra: Algebra | None = None, koszul: bool = True,
                         check: bool = True) -> tuple[ProjComplex, list[ProjComplex]]:
    """The complex ``(+)_i T_i (x) U_i`` and its pieces ``T_i^a (x) U_i^b``."""
    if check:
        comp = check_compatibility(inp)
        if not comp.ok:
            raise ConstructionError("compatibility fails", comp.first_violation)
        ucert = certify_tilting([u for ps in inp.U for u in ps])
        if not ucert.exceptional:
            raise ConstructionError("U is not exceptional", ucert.witness or ())
    ab = algebra or tensor_algebra(inp.A, inp.B)
    pieces = []
    for i, a, b in inp.piece_index():
        pieces.append(tensor_complex(inp.T[i][a], inp.U[i][b], ab, koszul=koszul))
    return direct_sum_complexes(pieces), pieces


def predicted_end_ring(inp: TensorTiltingInput, t_homs: HomCategory | None = None,
                       u_homs: HomCategory | None = None) -> GeneralizedMatrixRing:
    """Componentwise tensor product of the End grids of the T and U pieces."""
    t_objs = [(i, a) for i in range(inp.n) for a in range(len(inp.T[i]))]
    u_objs = [(i, b) for i in range(inp.n) for b in range(len(inp.U[i]))]
    th = t_homs or HomCategory([inp.T[i][a] for i, a in t_objs])
    uh = u_homs or HomCategory([inp.U[i][b] for i, b in u_objs])
    tpos = {o: k for k, o in enumerate(t_objs)}
    upos = {o: k for k, o in enumerate(u_objs)}
    idx = inp.piece_index()
    cells, compose = {}, {}

    def tu(piece):
        i, a, b = piece
        return tpos[(i, a)], upos[(i, b)]

    for I, pi in enumerate(idx):
        for J, pj in enumerate(idx):
            (ti, ui), (tj, uj) = tu(pi), tu(pj)
            dt, du = th.dim(ti, tj), uh.dim(ui, uj)
            if dt and du:
                cells[(I, J)] = tuple(f"f{p}(x)g{q}" for p in range(dt) for q in range(du))
    for I, pi in enumerate(idx):
        for J, pj in enumerate(idx):
            if (I, J) not in cells:
                continue
            for L, pl in enumerate(idx):
                if (J, L) not in cells:
                    continue
                (ti, ui), (tj, uj), (tl, ul) = tu(pi), tu(pj), tu(pl)
                du_il = uh.dim(ui, ul)
                table = {}
                for p1 in range(th.dim(ti, tj)):
                    for q1 in range(uh.dim(ui, uj)):
                        for p2 in range(th.dim(tj, tl)):
                            ct = th.product_coords(ti, tj, tl, p1, p2)
                            if not any(ct):
                                continue
                            for q2 in range(uh.dim(uj, ul)):
                                cu = uh.product_coords(ui, uj, ul, q1, q2)
                                vec = {}
                                for r, x in enumerate(ct):
                                    if x:
                                        for s, y in enumerate(cu):
                                            if y:
                                                vec[r * du_il + s] = x * y
                                if vec:
                                    table[(p1 * uh.dim(ui, uj) + q1, p2 * uh.dim(uj, ul) + q2)] = vec
                if table:
                    compose[(I, J, L)] = table
    return GeneralizedMatrixRing(len(idx), cells, compose, {I: (0,) for I in range(len(idx))})


@dataclass
class ConstructionReport:
    compatibility: CompatibilityTable
    u_certificate: TiltingCertificate
    built: ProjComplex
    pieces: list
    predicted: GeneralizedMatrixRing
    computed: object  # tilting.EndRing or None
    output_certificate: TiltingCertificate | None
    match: bool
    witness: tuple | None = None
    notes: list[str] = field(default_factory=list)

    def to_json_dict(self) -> dict:
        return {
            "compatibility": self.compatibility.to_json_dict(),
            "U_certificate": self.u_certificate.to_json_dict(),
            "hypotheses_ii_iii": "satisfied over a field",
            "built_terms": {str(n): list(self.built.term(n)) for n in self.built.degrees()},
            "predicted_cell_dims": self.predicted.dims(),
            "computed_dim": self.computed.algebra.dim if self.computed else None,
            "output_certificate": self.output_certificate.to_json_dict() if self.output_certificate else None,
            "match": self.match,
            "witness": [str(w) for w in self.witness] if self.witness else None,
            "notes": self.notes,
        }


def verify_construction(inp: TensorTiltingInput, *, koszul: bool = True, max_dim: int = 400) -> ConstructionReport:
    """Build the tensor complex and compare its End ring with the predicted grid.

    Each predicted basis element ``f (x) g`` is sent to the chain map
    ``f (x) g`` and expressed in the canonical basis of the computed Hom
    space.  The match requires this map to be bijective on every cell and
    multiplicative on every composable pair.
    """
    dim_ab = inp.A.dim * inp.B.dim
    if dim_ab > max_dim:
        raise ConstructionError(f"dim(A (x) B) = {dim_ab} exceeds the bound {max_dim}")
    comp = check_compatibility(inp)
    ucert = certify_tilting([u for ps in inp.U for u in ps])
    notes = []
    if not comp.ok:
        raise ConstructionError("compatibility fails", comp.first_violation)
    ab = tensor_algebra(inp.A, inp.B)
    built, pieces = build_tensor_tilting(inp, algebra=ab, koszul=koszul, check=False)
    t_objs = [(i, a) for i in range(inp.n) for a in range(len(inp.T[i]))]
    u_objs = [(i, b) for i in range(inp.n) for b in range(len(inp.U[i]))]
    th = HomCategory([inp.T[i][a] for i, a in t_objs])
    uh = HomCategory([inp.U[i][b] for i, b in u_objs])
    predicted = predicted_end_ring(inp, th, uh)

    def fail(witness, message):
        notes.append(message)
        return ConstructionReport(comp, ucert, built, pieces, predicted, None, None, False, witness, notes)

    for k, pc in enumerate(pieces):
        try:
            pc.validate()
        except ComplexError as exc:
            return fail(("piece", k + 1), f"built piece is not a complex: {exc}")
    from .tilting import endomorphism_ring

    out_cert = certify_tilting(pieces)
    if not out_cert.exceptional:
        return fail(out_cert.witness, "built complex is not exceptional")
    computed = endomorphism_ring(pieces, check=False, name="End(T(x)U)")
    ch = computed.homs
    idx = inp.piece_index()
    tpos = {o: k for k, o in enumerate(t_objs)}
    upos = {o: k for k, o in enumerate(u_objs)}

    def tu(piece):
        i, a, b = piece
        return tpos[(i, a)], upos[(i, b)]

    # images of the predicted bases as chain-map representatives
    images: dict[tuple[int, int], list] = {}
    for I, pi in enumerate(idx):
        for J, pj in enumerate(idx):
            (ti, ui), (tj, uj) = tu(pi), tu(pj)
            dp = predicted.cell_dim(I, J)
            dc = ch.dim(I, J)
            if dp != dc:
                return ConstructionReport(comp, ucert, built, pieces, predicted, computed, out_cert, False,
                                          ("cell", I + 1, J + 1, dp, dc), notes + ["cell dimensions differ"])
            if not dp:
                continue
            hc_out = ch.hom_complex(I, J)
            reps = []
            for f in th.basis(ti, tj):
                for g in uh.basis(ui, uj):
                    reps.append(tensor_chain_map(f, th.hom_complex(ti, tj), g, uh.hom_complex(ui, uj),
                                                 hc_out, pieces[J], pieces[I]))
            coords = [ch.cell(I, J).coords(v) for v in reps]
            if Matrix(coords).rank() != dp:
                return ConstructionReport(comp, ucert, built, pieces, predicted, computed, out_cert, False,
                                          ("cell", I + 1, J + 1), notes + ["tensor basis map not bijective"])
            images[(I, J)] = (reps, coords)
    for (I, J, L), table in predicted.compose.items():
        reps_ij, _ = images[(I, J)]
        reps_jl, _ = images[(J, L)]
        _, coords_il = images[(I, L)]
        for x in range(predicted.cell_dim(I, J)):
            for y in range(predicted.cell_dim(J, L)):
                got = ch.cell(I, L).coords(ch.compose(I, J, L, reps_ij[x], reps_jl[y]))
                want = [ZERO] * ch.dim(I, L)
                for z, c in table.get((x, y), {}).items():
                    for t, v in enumerate(coords_il[z]):
                        want[t] += c * v
                if got != want:
                    return ConstructionReport(comp, ucert, built, pieces, predicted, computed, out_cert, False,
                                              ("product", I + 1, J + 1, L + 1, x, y),
                                              notes + ["structure constants differ"])
    # products that vanish in the prediction must vanish in the computation
    for I in range(len(idx)):
        for J in range(len(idx)):
            if (I, J) not in images:
                continue
            for L in range(len(idx)):
                if (J, L) not in images or (I, J, L) in predicted.compose:
                    continue
                if (I, L) not in images:
                    continue
                reps_ij, _ = images[(I, J)]
                reps_jl, _ = images[(J, L)]
                for x in reps_ij:
                    for y in reps_jl:
                        if any(ch.cell(I, L).coords(ch.compose(I, J, L, x, y))):
                            return ConstructionReport(comp, ucert, built, pieces, predicted, computed, out_cert,
                                                      False, ("product", I + 1, J + 1, L + 1),
                                                      notes + ["predicted zero product is nonzero"])
    return ConstructionReport(comp, ucert, built, pieces, predicted, computed, out_cert, True, None, notes)


def kunneth_table(inp: TensorTiltingInput) -> list[tuple]:
    """Rows ``(i, j, r, lhs, rhs)`` comparing dim Hom(T_i U_i, T_j U_j [r]) with the product formula."""
    ab = tensor_algebra(inp.A, inp.B)
    out = []
    for i in range(inp.n):
        for j in range(inp.n):
            x = direct_sum_complexes([tensor_complex(t, u, ab) for t in inp.T[i] for u in inp.U[i]])
            y = direct_sum_complexes([tensor_complex(t, u, ab) for t in inp.T[j] for u in inp.U[j]])
            hu = hom_complex(inp.u_complex(i), inp.u_complex(j)).cohomology_dim(0)
            ht = hom_complex(inp.t_complex(i), inp.t_complex(j))
            hx = hom_complex(x, y)
            for r in hom_range(x, y):
                out.append((i + 1, j + 1, r, hx.cohomology_dim(r), ht.cohomology_dim(r) * hu))
    return out
