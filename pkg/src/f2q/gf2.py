"""Square bit matrices over GF(2) with packed integer rows.

Rows are stored as Python ints: bit j of ``rows[i]`` is the entry in row i,
column j.  Row and column indices run 0..n-1 and refer to the *logical*
labels of the transform (output bit i, input bit j), so row 0 is the
lowest-order bit, not the top of the printed matrix.  ``format_grid``
prints in the conventional orientation (row n-1 on top, column n-1 on the
left) for eyeballing.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Upper bound on matrix size; keeps worst-case memory/time at desk scale.
N_CAP = 1024


def _check_size(n: int) -> None:
    if n < 1:
        raise ValueError(f"matrix size must be >= 1, got {n}")
    if n > N_CAP:
        raise ValueError(f"matrix size {n} exceeds cap {N_CAP}")


@dataclass(frozen=True)
class BitMatrix:
    """Immutable n x n matrix over GF(2), one int bitmask per row."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_size(self.n)
        if len(self.rows) != self.n:
            raise ValueError("row count does not match size")
        mask = (1 << self.n) - 1
        if any(r & ~mask for r in self.rows):
            raise ValueError("row has bits outside the matrix width")

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def row_support(self, i: int) -> tuple[int, ...]:
        """Column indices with a 1 in row i, ascending."""
        return _bits(self.rows[i])

    def col_support(self, j: int) -> tuple[int, ...]:
        """Row indices with a 1 in column j, ascending."""
        return tuple(i for i in range(self.n) if (self.rows[i] >> j) & 1)

    def mul(self, other: BitMatrix) -> BitMatrix:
        """Matrix product over GF(2)."""
        if self.n != other.n:
            raise ValueError("size mismatch")
        out = []
        for r in self.rows:
            acc = 0
            for k in _bits(r):
                acc ^= other.rows[k]
            out.append(acc)
        return BitMatrix(self.n, tuple(out))

    def matvec(self, v: int) -> int:
        """Apply to a bit vector packed as an int (bit j = component j)."""
        if v >> self.n:
            raise ValueError("vector has bits outside the matrix width")
        out = 0
        for i in range(self.n):
            out |= ((self.rows[i] & v).bit_count() & 1) << i
        return out

    def add(self, other: BitMatrix) -> BitMatrix:
        if self.n != other.n:
            raise ValueError("size mismatch")
        return BitMatrix(self.n, tuple(a ^ b for a, b in zip(self.rows, other.rows)))

    def inverse(self) -> BitMatrix:
        """Inverse over GF(2) by Gauss-Jordan elimination.

        Raises ValueError if the matrix is singular.
        """
        n = self.n
        work = list(self.rows)
        inv = [1 << i for i in range(n)]
        for col in range(n):
            pivot = next(
                (r for r in range(col, n) if (work[r] >> col) & 1), None
            )
            if pivot is None:
                raise ValueError("matrix is singular over GF(2)")
            work[col], work[pivot] = work[pivot], work[col]
            inv[col], inv[pivot] = inv[pivot], inv[col]
            for r in range(n):
                if r != col and (work[r] >> col) & 1:
                    work[r] ^= work[col]
                    inv[r] ^= inv[col]
        return BitMatrix(n, tuple(inv))

    def is_identity(self) -> bool:
        return all(r == (1 << i) for i, r in enumerate(self.rows))

    def to_numpy(self) -> np.ndarray:
        """Dense uint8 array A with A[i, j] = entry(i, j)."""
        a = np.zeros((self.n, self.n), dtype=np.uint8)
        for i in range(self.n):
            for j in self.row_support(i):
                a[i, j] = 1
        return a

    def format_grid(self) -> str:
        """Printable grid, row n-1 on top and column n-1 leftmost."""
        lines = []
        for i in range(self.n - 1, -1, -1):
            lines.append(" ".join(str(self.entry(i, j)) for j in range(self.n - 1, -1, -1)))
        return "\n".join(lines)


def identity(n: int) -> BitMatrix:
    _check_size(n)
    return BitMatrix(n, tuple(1 << i for i in range(n)))


def _bits(x: int) -> tuple[int, ...]:
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return tuple(out)


def bits_of(x: int) -> tuple[int, ...]:
    """Indices of set bits, ascending."""
    return _bits(x)


def pack_bits(indices) -> int:
    """Bitmask with the given indices set."""
    out = 0
    for i in indices:
        out |= 1 << i
    return out
