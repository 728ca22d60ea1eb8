"""
Dense matrices over Q(zeta_n) and exact elimination.

Elimination works on sparse rows (``dict`` column -> CycNum) because the
systems that come up here (intertwiner equations, word spans) are mostly
zeros.  ``Echelon`` keeps a reduced row-echelon basis that grows one
vector at a time; inverse, nullspace and span tests are all built on it.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional, Sequence

from .cyclo import CycNum, as_cyc, from_rational
from .errors import DimensionMismatch, SingularMatrix

SparseVec = dict  # int -> CycNum, no zero values


class Echelon:
    """Reduced row-echelon basis with first-nonzero-column pivoting."""

    def __init__(self, order: int):
        self.order = order
        self.rows: dict[int, SparseVec] = {}

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, vec: SparseVec) -> SparseVec:
        vec = dict(vec)
        for p in [c for c in vec if c in self.rows]:
            c = vec.get(p)
            if c is None:
                continue
            for col, val in self.rows[p].items():
                new = vec.get(col, 0) - c * val if col in vec else -(c * val)
                if new:
                    vec[col] = new
                else:
                    vec.pop(col, None)
        return vec

    def insert(self, vec: SparseVec, limit: Optional[int] = None) -> bool:
        """Add vec to the basis; False if it is dependent.

        With ``limit`` set, only columns below it may hold pivots; a vector
        whose reduction vanishes there counts as dependent.
        """
        vec = self.reduce(vec)
        cols = [c for c in vec if limit is None or c < limit]
        if not cols:
            return False
        p = min(cols)
        scale = vec[p].inv()
        vec = {c: v * scale for c, v in vec.items()}
        for row in self.rows.values():
            c = row.get(p)
            if c is not None:
                for col, val in vec.items():
                    new = row.get(col, 0) - c * val if col in row else -(c * val)
                    if new:
                        row[col] = new
                    else:
                        row.pop(col, None)
        self.rows[p] = vec
        return True

    def nullspace(self, ncols: int) -> list[SparseVec]:
        """Kernel basis of the stored rows, one vector per free column."""
        out = []
        for f in range(ncols):
            if f in self.rows:
                continue
            vec = {f: from_rational(1, self.order)}
            for p, row in self.rows.items():
                c = row.get(f)
                if c is not None:
                    vec[p] = -c
            lead = vec[min(vec)]
            if lead != 1:
                s = lead.inv()
                vec = {c: v * s for c, v in vec.items()}
            out.append(vec)
        return out


class CMatrix:
    """Immutable rows x cols matrix with entries in Q(zeta_order)."""

    __slots__ = ("order", "rows", "cols", "_data")

    def __init__(self, order: int, data: Sequence[Sequence]):
        self.order = order
        self._data = tuple(tuple(as_cyc(x, order) for x in row) for row in data)
        self.rows = len(self._data)
        self.cols = len(self._data[0]) if self._data else 0
        if any(len(r) != self.cols for r in self._data):
            raise DimensionMismatch("ragged matrix rows")

    @classmethod
    def _wrap(cls, order: int, data: tuple, rows: int, cols: int) -> "CMatrix":
        obj = cls.__new__(cls)
        obj.order, obj._data, obj.rows, obj.cols = order, data, rows, cols
        return obj

    # -- constructors -------------------------------------------------------

    @classmethod
    def zeros(cls, order: int, rows: int, cols: Optional[int] = None) -> "CMatrix":
        cols = rows if cols is None else cols
        z = from_rational(0, order)
        return cls._wrap(order, tuple((z,) * cols for _ in range(rows)), rows, cols)

    @classmethod
    def identity(cls, order: int, size: int) -> "CMatrix":
        return cls.diag(order, [1] * size)

    @classmethod
    def diag(cls, order: int, values: Sequence) -> "CMatrix":
        n = len(values)
        z = from_rational(0, order)
        data = [[z] * n for _ in range(n)]
        for i, v in enumerate(values):
            data[i][i] = as_cyc(v, order)
        return cls._wrap(order, tuple(map(tuple, data)), n, n)

    @classmethod
    def antidiag(cls, order: int, values: Sequence) -> "CMatrix":
        """values[r] is placed at (r, size-1-r)."""
        n = len(values)
        z = from_rational(0, order)
        data = [[z] * n for _ in range(n)]
        for i, v in enumerate(values):
            data[i][n - 1 - i] = as_cyc(v, order)
        return cls._wrap(order, tuple(map(tuple, data)), n, n)

    @classmethod
    def from_sparse(cls, order: int, rows: int, cols: int, entries: dict) -> "CMatrix":
        z = from_rational(0, order)
        data = [[z] * cols for _ in range(rows)]
        for (i, j), v in entries.items():
            data[i][j] = as_cyc(v, order)
        return cls._wrap(order, tuple(map(tuple, data)), rows, cols)

    @classmethod
    def from_vector(cls, order: int, rows: int, cols: int, vec: SparseVec) -> "CMatrix":
        return cls.from_sparse(order, rows, cols, {divmod(k, cols): v for k, v in vec.items()})

    # -- access -------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, idx: tuple[int, int]) -> CycNum:
        i, j = idx
        return self._data[i][j]

    def row(self, i: int) -> tuple[CycNum, ...]:
        return self._data[i]

    def to_lists(self) -> list[list[CycNum]]:
        return [list(r) for r in self._data]

    @property
    def entries(self) -> list[CycNum]:
        return [x for r in self._data for x in r]

    def nonzero(self) -> Iterator[tuple[int, int, CycNum]]:
        for i, r in enumerate(self._data):
            for j, x in enumerate(r):
                if x:
                    yield i, j, x

    def vectorize(self) -> SparseVec:
        """Row-major sparse vector of the entries."""
        return {i * self.cols + j: x for i, j, x in self.nonzero()}

    # -- arithmetic ---------------------------------------------------------

    def _check_same(self, other: "CMatrix") -> None:
        if self.shape != other.shape or self.order != other.order:
            raise DimensionMismatch(f"shape/order mismatch {self.shape}@{self.order} vs {other.shape}@{other.order}")

    def __add__(self, other: "CMatrix") -> "CMatrix":
        self._check_same(other)
        data = tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._data, other._data))
        return CMatrix._wrap(self.order, data, self.rows, self.cols)

    def __sub__(self, other: "CMatrix") -> "CMatrix":
        self._check_same(other)
        data = tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self._data, other._data))
        return CMatrix._wrap(self.order, data, self.rows, self.cols)

    def __neg__(self) -> "CMatrix":
        return self.scale(-1)

    def scale(self, c) -> "CMatrix":
        c = as_cyc(c, self.order)
        data = tuple(tuple(c * x for x in r) for r in self._data)
        return CMatrix._wrap(self.order, data, self.rows, self.cols)

    def __mul__(self, c) -> "CMatrix":
        if isinstance(c, CMatrix):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other: "CMatrix") -> "CMatrix":
        if self.cols != other.rows or self.order != other.order:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        z = from_rational(0, self.order)
        out = [[z] * other.cols for _ in range(self.rows)]
        orows = other._data
        for i, r in enumerate(self._data):
            acc = out[i]
            for k, a in enumerate(r):
                if a:
                    for j, b in enumerate(orows[k]):
                        if b:
                            acc[j] = acc[j] + a * b
        return CMatrix._wrap(self.order, tuple(map(tuple, out)), self.rows, other.cols)

    def transpose(self) -> "CMatrix":
        return CMatrix._wrap(self.order, tuple(zip(*self._data)) if self.rows else (), self.cols, self.rows)

    @property
    def T(self) -> "CMatrix":
        return self.transpose()

    def __eq__(self, other) -> bool:
        if not isinstance(other, CMatrix):
            return NotImplemented
        return self.order == other.order and self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        return hash((self.order, self._data))

    # -- square-matrix invariants -------------------------------------------

    def _require_square(self) -> None:
        if self.rows != self.cols:
            raise DimensionMismatch(f"square matrix required, got {self.shape}")

    def trace(self) -> CycNum:
        self._require_square()
        out = from_rational(0, self.order)
        for i in range(self.rows):
            out = out + self._data[i][i]
        return out

    def det(self) -> CycNum:
        self._require_square()
        a = [list(r) for r in self._data]
        n = self.rows
        result = from_rational(1, self.order)
        for col in range(n):
            piv = next((r for r in range(col, n) if a[r][col]), None)
            if piv is None:
                return from_rational(0, self.order)
            if piv != col:
                a[col], a[piv] = a[piv], a[col]
                result = -result
            p = a[col][col]
            result = result * p
            pinv = p.inv()
            for r in range(col + 1, n):
                f = a[r][col]
                if f:
                    f = f * pinv
                    row, prow = a[r], a[col]
                    for c in range(col + 1, n):
                        if prow[c]:
                            row[c] = row[c] - f * prow[c]
        return result

    def inverse(self) -> "CMatrix":
        self._require_square()
        n = self.rows
        ech = Echelon(self.order)
        unit = from_rational(1, self.order)
        for i in range(n):
            vec = {j: x for j, x in enumerate(self._data[i]) if x}
            vec[n + i] = unit
            if not ech.insert(vec, limit=n):
                raise SingularMatrix("matrix is singular")
        entries = {}
        for p, row in ech.rows.items():
            for c, v in row.items():
                if c >= n:
                    entries[(p, c - n)] = v
        return CMatrix.from_sparse(self.order, n, n, entries)

    def is_zero(self) -> bool:
        return not any(x for r in self._data for x in r)

    def scalar_value(self) -> Optional[CycNum]:
        """c if the matrix equals c*I, else None."""
        self._require_square()
        if self.rows == 0:
            return None
        c = self._data[0][0]
        for i, r in enumerate(self._data):
            for j, x in enumerate(r):
                if x != (c if i == j else 0):
                    return None
        return c

    def is_antidiagonal(self) -> bool:
        return all(not x for i, j, x in self.nonzero() if i + j != self.rows - 1)

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[x.to_json() for x in r] for r in self._data],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "CMatrix":
        entries = [[CycNum.from_json(x) for x in r] for r in obj["entries"]]
        order = entries[0][0].order
        m = cls(order, entries)
        if m.shape != (obj["rows"], obj["cols"]):
            raise DimensionMismatch("declared shape disagrees with entries")
        return m

    def pretty(self, var: str = "q", exponent: int = 1) -> str:
        cells = [[x.pretty(var, exponent) for x in r] for r in self._data]
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in r) + " ]" for r in cells)

    def __repr__(self) -> str:
        return f"CMatrix(order={self.order}, shape={self.shape})\n{self.pretty('z')}"


def sylvester_nullspace(constraints: Iterable[tuple[CMatrix, CMatrix]]) -> list[CMatrix]:
    """Basis of {Q : A Q = Q B for every (A, B)}.

    A is r x r and B is c x c, so Q is r x c.  Each basis matrix is scaled
    so that its first nonzero entry in row-major order equals 1.
    """
    constraints = list(constraints)
    if not constraints:
        raise ValueError("at least one constraint is required")
    A0, B0 = constraints[0]
    order, r, c = A0.order, A0.rows, B0.rows
    for A, B in constraints:
        if A.shape != (r, r) or B.shape != (c, c) or A.order != order or B.order != order:
            raise DimensionMismatch("inconsistent constraint shapes")
    ncols = r * c
    ech = Echelon(order)
    for A, B in constraints:
        a_nz = [list((k, x) for k, x in enumerate(A.row(i)) if x) for i in range(r)]
        b_cols = [list((k, B[k, j]) for k in range(c) if B[k, j]) for j in range(c)]
        for i in range(r):
            for j in range(c):
                # (AQ - QB)_{ij} = sum_k A_ik Q_kj - sum_k Q_ik B_kj
                eq: SparseVec = {}
                for k, x in a_nz[i]:
                    col = k * c + j
                    eq[col] = eq.get(col, 0) + x
                for k, x in b_cols[j]:
                    col = i * c + k
                    eq[col] = eq.get(col, 0) - x
                eq = {k: v for k, v in eq.items() if v}
                if eq:
                    ech.insert(eq)
                if len(ech) == ncols:
                    return []
    return [CMatrix.from_vector(order, r, c, v) for v in ech.nullspace(ncols)]
