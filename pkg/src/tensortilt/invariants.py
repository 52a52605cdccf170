"""K_0-level derived invariants.

``N = C C^{-T}`` sends the class of ``P_x`` to that of ``I_x`` (classes are
dimension vectors, row ``x`` of C for ``P_x`` and column ``x`` for ``I_x``),
so it is the shadow of the Serre functor.  The shift acts as ``-I``.  These
probes can refute a derived equivalence but never prove one.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .algebra import Algebra
from .complexes import global_dimension
from .dynkin import coxeter_number
from .linalg import Matrix, char_poly, matrix_power


class InvariantError(ValueError):
    pass


@dataclass(frozen=True)
class CartanData:
    C: Matrix
    N: Matrix
    Phi: Matrix
    coxeter_poly: tuple[int, ...]

    def to_json_dict(self) -> dict:
        def ints(m):
            return [[int(v) for v in row] for row in m.rows]
        return {"cartan": ints(self.C), "nakayama": ints(self.N), "coxeter": ints(self.Phi),
                "coxeter_poly": list(self.coxeter_poly)}


def cartan_data(algebra: Algebra) -> CartanData:
    if "cartan_data" in algebra._cache:
        return algebra._cache["cartan_data"]
    try:
        global_dimension(algebra)
    except Exception as exc:
        raise InvariantError(f"{algebra.name or 'algebra'} has infinite global dimension") from exc
    c = algebra.cartan_matrix()
    cit = c.inverse().T
    n, phi = c @ cit, -(cit @ c)
    if not (n.is_integral() and phi.is_integral()):
        raise InvariantError("Cartan matrix is not unimodular")
    poly = tuple(int(a) for a in char_poly(phi))
    data = CartanData(c, n, phi, poly)
    algebra._cache["cartan_data"] = data
    return data


@dataclass(frozen=True)
class CYFraction:
    """``nu^e = [d]``, kept unreduced."""

    d: int
    e: int

    def __post_init__(self):
        if self.e <= 0:
            raise ValueError("CY denominator must be positive")

    @classmethod
    def parse(cls, text: str) -> "CYFraction":
        d, e = text.split("/")
        return cls(int(d), int(e))

    def value(self) -> Fraction:
        return Fraction(self.d, self.e)

    def __str__(self) -> str:
        return f"{self.d}/{self.e}"


def cy_sum(a: CYFraction, b: CYFraction) -> CYFraction:
    """``nu^e = [d]`` and ``nu^e' = [d']`` give ``nu^L = [d L/e + d' L/e']`` for ``L = lcm(e, e')``."""
    lcm = a.e * b.e // gcd(a.e, b.e)
    return CYFraction(a.d * (lcm // a.e) + b.d * (lcm // b.e), lcm)


def cy_check(algebra: Algebra, frac: CYFraction) -> bool:
    """K_0 shadow of ``nu^e = [d]``: ``N^e = (-1)^d I``.  Necessary only."""
    n = cartan_data(algebra).N
    target = Matrix.identity(n.shape[0])
    if frac.d % 2:
        target = -target
    return matrix_power(n, frac.e) == target


def dynkin_cy(kind: str, n: int) -> CYFraction:
    """A Dynkin path algebra is ``(h-2)/h``-CY."""
    h = coxeter_number(kind, n)
    return CYFraction(h - 2, h)


@dataclass
class ProbeReport:
    rank: tuple[int, int]
    det_cartan: tuple[int, int]
    coxeter_poly: tuple[tuple[int, ...], tuple[int, ...]]
    verdict: str
    witness: str | None = None

    def to_json_dict(self) -> dict:
        return {"rank": list(self.rank), "det_cartan": list(self.det_cartan),
                "coxeter_poly": [list(p) for p in self.coxeter_poly],
                "verdict": self.verdict, "witness": self.witness}


def derived_probe(a: Algebra, b: Algebra) -> ProbeReport:
    da, db = cartan_data(a), cartan_data(b)
    rank = (a.n_vertices, b.n_vertices)
    det = (abs(int(da.C.det())), abs(int(db.C.det())))
    poly = (da.coxeter_poly, db.coxeter_poly)
    witness = None
    if rank[0] != rank[1]:
        witness = "rank"
    elif det[0] != det[1]:
        witness = "det_cartan"
    elif poly[0] != poly[1]:
        witness = "coxeter_poly"
    return ProbeReport(rank, det, poly, "distinguished" if witness else "consistent", witness)


# --- table data for Dynkin Auslander algebras ---

def _a(n): return ("A", n)


def aus_table_row(kind: str, n: int) -> tuple[tuple[str, int], tuple[str, int], CYFraction, CYFraction]:
    """Derived type ``X x Y`` of Aus(kQ) for symmetric Q, with the CY summands."""
    kind = kind.upper()
    if kind == "A" and n % 2 == 1:
        m = (n - 1) // 2
        return (kind, n), _a(m + 1), CYFraction(2 * m, 2 * m + 2), CYFraction(m, m + 2)
    if kind == "D" and n % 2 == 0:
        m = n // 2
        return (kind, n), _a(2 * m - 1), CYFraction(2 * m - 2, 2 * m - 1), CYFraction(2 * m - 2, 2 * m)
    if kind == "D":
        m = (n - 1) // 2
        return (kind, n), _a(2 * m), CYFraction(4 * m - 2, 4 * m), CYFraction(2 * m - 1, 2 * m + 1)
    if kind == "E":
        y, fx, fy = {6: (6, (10, 12), (5, 7)), 7: (9, (8, 9), (8, 10)), 8: (15, (14, 15), (14, 16))}[n]
        return (kind, n), _a(y), CYFraction(*fx), CYFraction(*fy)
    raise InvariantError(f"no Auslander table row for {kind}{n}")


def saus_table_row(kind: str, n: int) -> tuple[tuple[str, int], tuple[str, int], CYFraction, CYFraction]:
    kind = kind.upper()
    if kind == "A" and n % 2 == 1:
        m = (n - 1) // 2
        return (kind, n), _a(m), CYFraction(2 * m, 2 * m + 2), CYFraction(m - 1, m + 1)
    if kind == "D" and n % 2 == 0:
        m = n // 2
        return (kind, n), _a(2 * m - 2), CYFraction(2 * m - 2, 2 * m - 1), CYFraction(2 * m - 3, 2 * m - 1)
    if kind == "D":
        m = (n - 1) // 2
        return (kind, n), _a(2 * m - 1), CYFraction(4 * m - 2, 4 * m), CYFraction(2 * m - 2, 2 * m)
    if kind == "E":
        y, fx, fy = {6: (5, (10, 12), (4, 6)), 7: (8, (8, 9), (7, 9)), 8: (14, (14, 15), (13, 15))}[n]
        return (kind, n), _a(y), CYFraction(*fx), CYFraction(*fy)
    raise InvariantError(f"no stable Auslander table row for {kind}{n}")
