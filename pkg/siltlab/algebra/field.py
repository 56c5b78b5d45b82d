"""Exact dense linear algebra over a prime field F_p.

Matrices are plain ``numpy`` int64 arrays whose entries are residues in
``[0, p)``. Every routine reduces its input modulo ``p`` first, so callers may
pass signed integers (``-1`` for ``p - 1``) freely.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

FMatrix = npt.NDArray[np.int64]


@dataclass(frozen=True)
class FieldElement:
    """A residue class modulo a prime ``p``."""

    value: int
    p: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", self.value % self.p)

    def _coerce(self, other: FieldElement | int) -> int:
        if isinstance(other, FieldElement):
            if other.p != self.p:
                raise ValueError(f"Mixed moduli {self.p} and {other.p}")
            return other.value
        return int(other)

    def __add__(self, other: FieldElement | int) -> FieldElement:
        return FieldElement(self.value + self._coerce(other), self.p)

    def __sub__(self, other: FieldElement | int) -> FieldElement:
        return FieldElement(self.value - self._coerce(other), self.p)

    def __mul__(self, other: FieldElement | int) -> FieldElement:
        return FieldElement(self.value * self._coerce(other), self.p)

    __radd__ = __add__
    __rmul__ = __mul__

    def __neg__(self) -> FieldElement:
        return FieldElement(-self.value, self.p)

    def inverse(self) -> FieldElement:
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse modulo {self.p}")
        return FieldElement(pow(self.value, self.p - 2, self.p), self.p)

    def __truediv__(self, other: FieldElement | int) -> FieldElement:
        return self * FieldElement(self._coerce(other), self.p).inverse()

    def __int__(self) -> int:
        return self.value

    def __bool__(self) -> bool:
        return self.value != 0


@dataclass(frozen=True)
class RowReduceResult:
    """Reduced row echelon form with rank and pivot columns."""

    matrix: FMatrix
    rank: int
    pivots: tuple[int, ...]


def as_matrix(values: npt.ArrayLike, p: int, cols: int | None = None) -> FMatrix:
    """Copy ``values`` into a 2-D int64 array reduced modulo ``p``."""
    arr = np.array(values, dtype=np.int64)
    if arr.ndim == 1:
        if arr.size == 0 and cols is not None:
            arr = arr.reshape(0, cols)
        else:
            arr = arr.reshape(1, -1)
    return arr % p


def scalar_inverse(x: int, p: int) -> int:
    x %= p
    if x == 0:
        raise ZeroDivisionError(f"0 has no inverse modulo {p}")
    return pow(x, p - 2, p)


def rref(matrix: npt.ArrayLike, p: int) -> RowReduceResult:
    """Gauss-Jordan elimination modulo ``p``.

    Returns the reduced row echelon form; zero rows are kept at the bottom so
    the shape is unchanged.
    """
    m = as_matrix(matrix, p)
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(m[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        inv = scalar_inverse(int(m[r, c]), p)
        if inv != 1:
            m[r] = (m[r] * inv) % p
        col = m[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            m[hit] = (m[hit] - np.outer(col[hit], m[r])) % p
        pivots.append(c)
        r += 1
    return RowReduceResult(matrix=m, rank=r, pivots=tuple(pivots))


def rank(matrix: npt.ArrayLike, p: int) -> int:
    m = as_matrix(matrix, p)
    if m.size == 0:
        return 0
    return rref(m, p).rank


def kernel_basis(matrix: npt.ArrayLike, p: int, cols: int | None = None) -> FMatrix:
    """Basis of the right null space ``{v : M v = 0}``.

    The basis vectors are returned as the *rows* of a ``(k, cols)`` array with
    ``k = cols - rank(M)``. Pass ``cols`` when ``matrix`` has no rows.
    """
    m = as_matrix(matrix, p, cols)
    n_cols = m.shape[1] if m.ndim == 2 else int(cols or 0)
    if m.shape[0] == 0:
        return np.eye(n_cols, dtype=np.int64)
    red = rref(m, p)
    pivots = list(red.pivots)
    free = [c for c in range(n_cols) if c not in set(pivots)]
    basis = np.zeros((len(free), n_cols), dtype=np.int64)
    if not free:
        return basis
    basis[np.arange(len(free)), free] = 1
    if pivots:
        basis[:, pivots] = (-red.matrix[: red.rank][:, free].T) % p
    return basis


def solve(matrix: npt.ArrayLike, b: npt.ArrayLike, p: int) -> FMatrix | None:
    """Some ``x`` with ``M x = b``, or ``None`` when the system is inconsistent."""
    m = as_matrix(matrix, p)
    rhs = np.array(b, dtype=np.int64).reshape(-1) % p
    rows, cols = m.shape
    if rhs.size != rows:
        raise ValueError(f"Right-hand side has {rhs.size} entries, expected {rows}")
    aug = np.concatenate([m, rhs.reshape(-1, 1)], axis=1)
    red = rref(aug, p)
    if cols in red.pivots:
        return None
    x = np.zeros(cols, dtype=np.int64)
    for i, c in enumerate(red.pivots):
        x[c] = red.matrix[i, cols]
    return x


def inverse_matrix(matrix: npt.ArrayLike, p: int) -> FMatrix:
    m = as_matrix(matrix, p)
    n = m.shape[0]
    if m.shape != (n, n):
        raise ValueError(f"Cannot invert non-square matrix of shape {m.shape}")
    if n == 0:
        return m.copy()
    red = rref(np.concatenate([m, np.eye(n, dtype=np.int64)], axis=1), p)
    if red.rank < n or red.pivots[n - 1] >= n:
        raise ValueError("Matrix is singular")
    return red.matrix[:, n:]


def left_inverse(matrix: npt.ArrayLike, p: int) -> FMatrix:
    """``L`` with ``L @ M = I`` for ``M`` of full column rank."""
    m = as_matrix(matrix, p)
    rows, cols = m.shape
    if cols == 0:
        return np.zeros((0, rows), dtype=np.int64)
    chosen = rref(m.T, p)
    if chosen.rank < cols:
        raise ValueError("Matrix does not have full column rank")
    picked = list(chosen.pivots)
    inv = inverse_matrix(m[picked, :], p)
    left = np.zeros((cols, rows), dtype=np.int64)
    left[:, picked] = inv
    return left


def reduce_against(rows: npt.ArrayLike, basis: RowReduceResult, p: int) -> FMatrix:
    """Reduce ``rows`` modulo the row space described by ``basis``."""
    m = as_matrix(rows, p, basis.matrix.shape[1])
    if basis.rank == 0 or m.shape[0] == 0:
        return m
    piv = list(basis.pivots)
    return (m - m[:, piv] @ basis.matrix[: basis.rank]) % p


def independent_rows(
    candidates: npt.ArrayLike, p: int, modulo: RowReduceResult | None = None
) -> list[int]:
    """Indices of an earliest-first maximal subset of rows independent modulo
    the span recorded in ``modulo``."""
    m = as_matrix(candidates, p)
    if m.shape[0] == 0:
        return []
    if modulo is not None:
        m = reduce_against(m, modulo, p)
    if not m.any():
        return []
    return list(rref(m.T, p).pivots)


def integer_determinant(matrix: npt.ArrayLike) -> int:
    """Determinant over the integers by fraction-free (Bareiss) elimination."""
    m = [[int(x) for x in row] for row in np.asarray(matrix, dtype=np.int64)]
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError(f"Determinant of non-square matrix with {n} rows")
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact: the previous pivot divides every 2x2 minor
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]
