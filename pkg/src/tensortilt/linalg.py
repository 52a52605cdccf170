"""Exact dense linear algebra over the rationals.

Every entry is a :class:`fractions.Fraction` (reduced, positive
denominator).  Matrices are immutable; all routines are pure.

Row reduction uses a fixed pivot rule: columns are scanned left to right
and the pivot is taken from the smallest remaining row index with a
nonzero entry.  This keeps every derived basis byte-stable.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

ZERO = Fraction(0)
ONE = Fraction(1)


def as_scalar(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point entries are not allowed")
    return Fraction(x)


class Matrix:
    """Immutable dense rational matrix."""

    __slots__ = ("_rows", "nrows", "ncols", "_hash")

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None):
        data = tuple(tuple(as_scalar(x) for x in row) for row in rows)
        if data:
            width = len(data[0])
            if any(len(r) != width for r in data):
                raise ValueError("ragged rows")
            if ncols is not None and ncols != width:
                raise ValueError("column count mismatch")
        else:
            width = ncols or 0
        self._rows = data
        self.nrows = len(data)
        self.ncols = width
        self._hash = None

    @classmethod
    def _trusted(cls, rows: tuple, nrows: int, ncols: int) -> "Matrix":
        m = cls.__new__(cls)
        m._rows = rows
        m.nrows = nrows
        m.ncols = ncols
        m._hash = None
        return m

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        row = (ZERO,) * ncols
        return cls._trusted((row,) * nrows, nrows, ncols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        rows = tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))
        return cls._trusted(rows, n, n)

    @classmethod
    def column(cls, values: Sequence) -> "Matrix":
        return cls([[v] for v in values], ncols=1)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    def __getitem__(self, idx):
        i, j = idx
        return self._rows[i][j]

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._rows]

    def col(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self._rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.shape, self._rows))
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self._rows)
        return f"Matrix([{body}])"

    @property
    def T(self) -> "Matrix":
        rows = tuple(zip(*self._rows)) if self.nrows else ()
        if not rows:
            return Matrix.zeros(self.ncols, self.nrows)
        return Matrix._trusted(rows, self.ncols, self.nrows)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        rows = tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._rows, other._rows))
        return Matrix._trusted(rows, self.nrows, self.ncols)

    def __neg__(self) -> "Matrix":
        return Matrix._trusted(tuple(tuple(-a for a in r) for r in self._rows), self.nrows, self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __mul__(self, c) -> "Matrix":
        c = as_scalar(c)
        return Matrix._trusted(tuple(tuple(c * a for a in r) for r in self._rows), self.nrows, self.ncols)

    __rmul__ = __mul__

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        return Matrix._trusted(_matmul(self._rows, other._rows, other.ncols), self.nrows, other.ncols)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_zero(self) -> bool:
        return all(not a for r in self._rows for a in r)

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for r in self._rows for a in r)

    def kron(self, other: "Matrix") -> "Matrix":
        rows = []
        for r in self._rows:
            for s in other._rows:
                rows.append(tuple(a * b for a in r for b in s))
        return Matrix._trusted(tuple(rows), self.nrows * other.nrows, self.ncols * other.ncols)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix._trusted(
            tuple(tuple(self._rows[i][j] for j in cols) for i in rows), len(rows), len(cols)
        )

    def permuted(self, perm: Sequence[int]) -> "Matrix":
        """Simultaneous row/column permutation: result[i][j] = self[perm[i]][perm[j]]."""
        return self.submatrix(perm, perm)

    def rref(self) -> tuple["Matrix", tuple[int, ...]]:
        rows, pivots = rref_rows([list(r) for r in self._rows], self.ncols)
        rows += [[ZERO] * self.ncols for _ in range(self.nrows - len(rows))]
        return Matrix(rows, ncols=self.ncols), tuple(pivots)

    def rank(self) -> int:
        return len(rref_rows([list(r) for r in self._rows], self.ncols)[1])

    def det(self) -> Fraction:
        _require_square(self)
        return determinant(self._rows)

    def inverse(self) -> "Matrix":
        _require_square(self)
        inv = invert(self._rows)
        if inv is None:
            raise ZeroDivisionError("matrix is singular")
        return Matrix(inv, ncols=self.ncols)


def _require_square(a: Matrix) -> None:
    if not a.is_square():
        raise ValueError(f"square matrix required, got {a.shape}")


def _matmul(a: Sequence[Sequence], b: Sequence[Sequence], bcols: int) -> tuple:
    out = []
    for r in a:
        acc = [ZERO] * bcols
        for k, x in enumerate(r):
            if x:
                for j, y in enumerate(b[k]):
                    if y:
                        acc[j] += x * y
        out.append(tuple(acc))
    return tuple(out)


# --- raw row-list kernels (lists of lists of Fraction, mutated in place) ---

def rref_rows(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form of ``rows``; returns nonzero rows and pivot columns.

    ``rows`` is consumed.
    """
    rows = [r for r in rows if any(r)]
    pivots: list[int] = []
    top = 0
    for col in range(ncols):
        if top == len(rows):
            break
        piv = None
        for i in range(top, len(rows)):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            continue
        if piv != top:
            rows.insert(top, rows.pop(piv))
        prow = rows[top]
        inv = 1 / prow[col]
        if inv != 1:
            for j in range(col, ncols):
                if prow[j]:
                    prow[j] *= inv
        nz = [j for j in range(col, ncols) if prow[j]]
        for i, r in enumerate(rows):
            if i != top:
                f = r[col]
                if f:
                    for j in nz:
                        r[j] -= f * prow[j]
        pivots.append(col)
        top += 1
    return rows[:top], pivots


def nullspace_rows(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of {x : rows . x = 0}; free coordinates set to 0/1."""
    red, pivots = rref_rows([list(r) for r in rows], ncols)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [ZERO] * ncols
        v[free] = ONE
        for r, p in zip(red, pivots):
            if r[free]:
                v[p] = -r[free]
        basis.append(v)
    return basis


def determinant(rows: Sequence[Sequence]) -> Fraction:
    a = [list(r) for r in rows]
    n = len(a)
    det = ONE
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col]), None)
        if piv is None:
            return ZERO
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        p = a[col][col]
        det *= p
        for i in range(col + 1, n):
            f = a[i][col]
            if f:
                f = f / p
                ri, rc = a[i], a[col]
                for j in range(col, n):
                    if rc[j]:
                        ri[j] -= f * rc[j]
    return det


def invert(rows: Sequence[Sequence]) -> list[list[Fraction]] | None:
    n = len(rows)
    aug = [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(rows)]
    red, pivots = rref_rows(aug, 2 * n)
    if len(pivots) < n or pivots[n - 1] != n - 1:
        return None
    return [r[n:] for r in red]


class Subspace:
    """A subspace of Q^n held as an rref basis.

    For a vector ``v`` inside the span, its coordinates in the rref basis
    are just ``v`` read off at the pivot columns.
    """

    __slots__ = ("dim_ambient", "basis", "pivots", "_pivset")

    def __init__(self, vectors: Iterable[Sequence], dim_ambient: int):
        self.dim_ambient = dim_ambient
        self.basis, self.pivots = rref_rows([list(v) for v in vectors], dim_ambient)
        self._pivset = set(self.pivots)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def reduce(self, v: Sequence) -> list[Fraction]:
        w = list(v)
        for b, p in zip(self.basis, self.pivots):
            f = w[p]
            if f:
                for j in range(p, self.dim_ambient):
                    if b[j]:
                        w[j] -= f * b[j]
        return w

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    def coords(self, v: Sequence) -> list[Fraction]:
        """Coordinates of ``v`` (assumed in the span) in the rref basis."""
        return [v[p] for p in self.pivots]

    def complement_units(self) -> list[int]:
        """Coordinate indices whose unit vectors complete the basis."""
        return [j for j in range(self.dim_ambient) if j not in self._pivset]


class Basis:
    """An arbitrary ordered basis of a subspace with a fixed coordinate solver."""

    __slots__ = ("vectors", "dim_ambient", "_cols", "_inv")

    def __init__(self, vectors: Sequence[Sequence], dim_ambient: int):
        self.vectors = [list(v) for v in vectors]
        self.dim_ambient = dim_ambient
        k = len(self.vectors)
        if k == 0:
            self._cols, self._inv = [], []
            return
        # columns where the basis restricts to an invertible k x k block
        _, piv = rref_rows([list(v) for v in self.vectors], dim_ambient)
        if len(piv) != k:
            raise ValueError("basis vectors are linearly dependent")
        self._cols = piv
        sub = [[v[c] for c in piv] for v in self.vectors]
        self._inv = invert(sub)

    def __len__(self) -> int:
        return len(self.vectors)

    def coords(self, v: Sequence) -> list[Fraction]:
        """Coordinates of ``v`` assuming it lies in the span."""
        k = len(self.vectors)
        if not k:
            return []
        x = [v[c] for c in self._cols]
        out = [ZERO] * k
        for i, xi in enumerate(x):
            if xi:
                row = self._inv[i]
                for j in range(k):
                    if row[j]:
                        out[j] += xi * row[j]
        return out

    def combine(self, coeffs: Sequence) -> list[Fraction]:
        w = [ZERO] * self.dim_ambient
        for c, v in zip(coeffs, self.vectors):
            if c:
                for j, x in enumerate(v):
                    if x:
                        w[j] += c * x
        return w


# --- public operations ---

@dataclass(frozen=True)
class Solution:
    """All X with A X = B: ``particular + span(kernel)``; ``particular`` is None if inconsistent."""

    particular: Matrix | None
    kernel: tuple[Matrix, ...]

    @property
    def consistent(self) -> bool:
        return self.particular is not None


def rref_solve(a: Matrix, b: Matrix) -> Solution:
    if a.nrows != b.nrows:
        raise ValueError(f"dimension mismatch: A has {a.nrows} rows, B has {b.nrows}")
    n, k = a.ncols, b.ncols
    aug = [list(ra) + list(rb) for ra, rb in zip(a.rows, b.rows)]
    red, pivots = rref_rows(aug, n + k)
    kern_vecs = nullspace_rows(a.rows, n)
    kernel = []
    for v in kern_vecs:
        for j in range(k):
            kernel.append(Matrix([[v[i] if jj == j else ZERO for jj in range(k)] for i in range(n)], ncols=k))
    if any(p >= n for p in pivots):
        return Solution(None, tuple(kernel))
    x = [[ZERO] * k for _ in range(n)]
    for r, p in zip(red, pivots):
        x[p] = r[n:]
    return Solution(Matrix(x, ncols=k), tuple(kernel))


def kernel_basis(a: Matrix) -> list[Matrix]:
    return [Matrix.column(v) for v in nullspace_rows(a.rows, a.ncols)]


def char_poly(a: Matrix) -> tuple:
    """Monic characteristic polynomial det(xI - A), coefficients from x^n down.

    Faddeev-LeVerrier; integral inputs run on Python ints with exact division.
    """
    _require_square(a)
    n = a.nrows
    if a.is_integral():
        m = [[int(x) for x in r] for r in a.rows]
        div = lambda num, k: _exact_div(num, k)
        zero = 0
    else:
        m = a.tolist()
        div = lambda num, k: num / k
        zero = ZERO
    coeffs = [1]
    mk = [[zero] * n for _ in range(n)]  # M_0 = 0
    c = 1
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        prev = mk
        for i in range(n):
            prev[i][i] += c
        mk = _mat_mul_lists(m, prev)
        trace = sum(mk[i][i] for i in range(n))
        c = div(-trace, k)
        coeffs.append(c)
    out = []
    for x in coeffs:
        if isinstance(x, Fraction) and x.denominator == 1:
            x = int(x)
        out.append(x)
    return tuple(out)


def _exact_div(num: int, k: int) -> int:
    q, r = divmod(num, k)
    if r:
        raise ArithmeticError("inexact division in Faddeev-LeVerrier")
    return q


def _mat_mul_lists(a, b):
    n = len(a)
    cols = len(b[0]) if b else 0
    out = []
    for r in a:
        acc = [0] * cols
        for k, x in enumerate(r):
            if x:
                bk = b[k]
                for j in range(cols):
                    y = bk[j]
                    if y:
                        acc[j] += x * y
        out.append(acc)
    return out


def matrix_power(a: Matrix, e: int) -> Matrix:
    _require_square(a)
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    n = a.nrows
    if a.is_integral():
        base = [[int(x) for x in r] for r in a.rows]
        result = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        while e:
            if e & 1:
                result = _mat_mul_lists(result, base)
            e >>= 1
            if e:
                base = _mat_mul_lists(base, base)
        return Matrix(result, ncols=n)
    result, base = Matrix.identity(n), a
    while e:
        if e & 1:
            result = result @ base
        e >>= 1
        if e:
            base = base @ base
    return result


def is_unimodular(a: Matrix) -> bool:
    _require_square(a)
    if not a.is_integral():
        raise ValueError("is_unimodular needs integer entries")
    return a.det() in (1, -1)


def poly_to_str(coeffs: Sequence, var: str = "x") -> str:
    n = len(coeffs) - 1
    terms = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        d = n - i
        mag = abs(c)
        coef = "" if mag == 1 and d else str(mag)
        mono = "" if d == 0 else (var if d == 1 else f"{var}^{d}")
        sign = "-" if c < 0 else "+"
        terms.append((sign, f"{coef}{mono}"))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    s = ("-" if first_sign == "-" else "") + first
    for sign, t in terms[1:]:
        s += f" {sign} {t}"
    return s
