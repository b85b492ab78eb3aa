"""Exact linear algebra over the two-element field.

Matrices are dense and bit-packed: each row is a Python int whose bit j is
the entry in column j, so a row operation is a single whole-row XOR.  At the
sizes this library needs (a few thousand columns at most) plain Gaussian
elimination on int rows is both the simplest and the fastest option.
"""

from __future__ import annotations

from typing import Iterable, Sequence


class BitMatrix:
    """Dense GF(2) matrix; immutable from the caller's point of view."""

    __slots__ = ("nrows", "ncols", "_rows")

    def __init__(self, nrows: int, ncols: int, rows: Sequence[int] | None = None):
        if nrows < 0 or ncols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if rows is None:
            rows = [0] * nrows
        if len(rows) != nrows:
            raise ValueError(f"expected {nrows} rows, got {len(rows)}")
        mask = (1 << ncols) - 1
        for r in rows:
            if r & ~mask:
                raise ValueError("row has bits outside the column range")
        self.nrows = nrows
        self.ncols = ncols
        self._rows = list(rows)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "BitMatrix":
        return cls(nrows, ncols)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, n, [1 << i for i in range(n)])

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "BitMatrix":
        """Build from nested 0/1 entries (row-major)."""
        packed = []
        width = 0
        for row in rows:
            row = list(row)
            width = max(width, len(row))
            packed.append(sum(1 << j for j, v in enumerate(row) if v & 1))
        return cls(len(packed), width, packed)

    @classmethod
    def from_columns(cls, columns: Sequence[int], nrows: int) -> "BitMatrix":
        rows = [0] * nrows
        for j, col in enumerate(columns):
            if col >> nrows:
                raise ValueError("column has bits outside the row range")
            while col:
                low = col & -col
                rows[low.bit_length() - 1] |= 1 << j
                col ^= low
        return cls(nrows, len(columns), rows)

    def entry(self, i: int, j: int) -> int:
        return (self._rows[i] >> j) & 1

    def row(self, i: int) -> int:
        return self._rows[i]

    def rows(self) -> list[int]:
        return list(self._rows)

    def column(self, j: int) -> int:
        out = 0
        for i, r in enumerate(self._rows):
            out |= ((r >> j) & 1) << i
        return out

    def is_zero(self) -> bool:
        return not any(self._rows)

    def transpose(self) -> "BitMatrix":
        return BitMatrix.from_columns(self._rows, self.ncols)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return (self.nrows, self.ncols, self._rows) == (other.nrows, other.ncols, other._rows)

    __hash__ = None  # mutable storage inside

    def __repr__(self) -> str:
        return f"BitMatrix({self.nrows}x{self.ncols})"

    def __matmul__(self, other: "BitMatrix") -> "BitMatrix":
        if self.ncols != other.nrows:
            raise ValueError("inner dimensions do not match")
        rows = []
        for r in self._rows:
            acc = 0
            v = r
            while v:
                low = v & -v
                acc ^= other._rows[low.bit_length() - 1]
                v ^= low
            rows.append(acc)
        return BitMatrix(self.nrows, other.ncols, rows)

    def mul_vec(self, v: int) -> int:
        """Matrix times column vector; v is a bitmask over the columns."""
        if v >> self.ncols:
            raise ValueError("vector has bits outside the column range")
        out = 0
        for i, r in enumerate(self._rows):
            out |= ((r & v).bit_count() & 1) << i
        return out

    def rank(self) -> int:
        span = Gf2Span()
        for r in self._rows:
            span.add(r)
        return span.rank

    def _rref(self) -> tuple[list[int], list[int]]:
        """Row-reduce a working copy; returns (rows, pivot column per row)."""
        work = list(self._rows)
        pivots: list[int] = []
        r = 0
        for c in range(self.ncols):
            pivot = next((i for i in range(r, len(work)) if (work[i] >> c) & 1), None)
            if pivot is None:
                continue
            work[r], work[pivot] = work[pivot], work[r]
            for i in range(len(work)):
                if i != r and (work[i] >> c) & 1:
                    work[i] ^= work[r]
            pivots.append(c)
            r += 1
            if r == len(work):
                break
        return work, pivots

    def kernel_basis(self) -> list[int]:
        """Basis of the right null space, one vector per free column."""
        work, pivots = self._rref()
        pivot_set = set(pivots)
        basis = []
        for free in range(self.ncols):
            if free in pivot_set:
                continue
            v = 1 << free
            for row_idx, pc in enumerate(pivots):
                if (work[row_idx] >> free) & 1:
                    v |= 1 << pc
            basis.append(v)
        return basis

    def solve(self, target: int) -> int | None:
        """A coefficient vector x with self @ x == target, or None.

        Interprets the matrix columns as spanning vectors; x selects a
        combination of them producing the target.
        """
        if target >> self.nrows:
            raise ValueError("target has bits outside the row range")
        aug = BitMatrix(
            self.nrows,
            self.ncols + 1,
            [r | (((target >> i) & 1) << self.ncols) for i, r in enumerate(self._rows)],
        )
        work, pivots = aug._rref()
        x = 0
        for row_idx, pc in enumerate(pivots):
            if pc == self.ncols:
                return None  # pivot in the augmented column: inconsistent
            if (work[row_idx] >> self.ncols) & 1:
                x |= 1 << pc
        return x

    def inverse(self) -> "BitMatrix":
        if self.nrows != self.ncols:
            raise ValueError("only square matrices can be inverted")
        n = self.nrows
        aug = BitMatrix(n, 2 * n, [r | (1 << (n + i)) for i, r in enumerate(self._rows)])
        work, pivots = aug._rref()
        if pivots[:n] != list(range(n)):
            raise ValueError("matrix is singular over GF(2)")
        mask = (1 << n) - 1
        return BitMatrix(n, n, [work[i] >> n & mask for i in range(n)])


class Gf2Span:
    """Incrementally built span of GF(2) bit vectors.

    Keeps one reduced vector per leading bit, so membership tests and rank
    updates are a handful of XORs.
    """

    __slots__ = ("_pivots",)

    def __init__(self, vectors: Iterable[int] = ()):
        self._pivots: dict[int, int] = {}
        for v in vectors:
            self.add(v)

    def reduce(self, v: int) -> int:
        while v:
            top = v.bit_length() - 1
            basis = self._pivots.get(top)
            if basis is None:
                break
            v ^= basis
        return v

    def add(self, v: int) -> bool:
        """Insert v; True if it enlarged the span."""
        v = self.reduce(v)
        if v == 0:
            return False
        self._pivots[v.bit_length() - 1] = v
        return True

    def __contains__(self, v: int) -> bool:
        return self.reduce(v) == 0

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def copy(self) -> "Gf2Span":
        new = Gf2Span()
        new._pivots = dict(self._pivots)
        return new
