#!/usr/bin/env python3
"""
Dense exact rational matrices.

A ``RationalMatrix`` is a numpy object array of Python-int numerators over a
single positive common denominator, kept in lowest terms. Entries read back as
``fractions.Fraction``. Products whose numerators provably fit in 63 bits are
evaluated in int64 and converted back, everything else stays in Python ints.
"""

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, List, Sequence, Tuple, Union

import numpy as np

from ..errors import PreconditionError

Scalar = Union[int, Fraction]

_INT64_HEADROOM = 1 << 62


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def _max_abs(values: np.ndarray) -> int:
    return max((abs(int(x)) for x in values.flat), default=0)


def _as_object_ints(values: np.ndarray) -> np.ndarray:
    if values.dtype == object:
        return np.array(values, dtype=object)
    if values.dtype.kind not in "iub":
        raise PreconditionError(f"numerators must be integers, got dtype {values.dtype}")
    return values.astype(object)


# =============================================================================
# RATIONAL MATRIX
# =============================================================================


class RationalMatrix:
    """
    Immutable dense matrix over the rationals.

    Example:
        >>> A = RationalMatrix.from_rows([[1, Fraction(1, 2)], [0, 1]])
        >>> (A @ A)[0, 1]
        Fraction(1, 1)
    """

    __slots__ = ("_num", "_den")

    def __init__(
        self, numerators: Union[np.ndarray, Sequence[Sequence[int]]], denominator: int = 1
    ):
        num = _as_object_ints(np.asarray(numerators))
        if num.ndim != 2:
            raise PreconditionError(f"expected a 2-d array of numerators, got {num.ndim}-d")
        den = int(denominator)
        if den == 0:
            raise ZeroDivisionError("RationalMatrix denominator is zero")
        if den < 0:
            num, den = -num, -den

        g = reduce(gcd, (int(x) for x in num.flat), den)
        if g > 1:
            num = num // g
            den //= g
        num.setflags(write=False)
        self._num = num
        self._den = den

    # -------------------------------------------------------------------------
    # Constructors
    # -------------------------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[Scalar]]) -> "RationalMatrix":
        """Build from nested rows of ints / Fractions."""
        table = [[Fraction(x) for x in row] for row in rows]
        if not table:
            return cls(np.zeros((0, 0), dtype=object))
        width = len(table[0])
        if any(len(row) != width for row in table):
            raise PreconditionError("ragged rows")
        den = reduce(_lcm, (x.denominator for row in table for x in row), 1)
        num = np.array(
            [[x.numerator * (den // x.denominator) for x in row] for row in table],
            dtype=object,
        ).reshape(len(table), width)
        return cls(num, den)

    @classmethod
    def from_int_array(cls, values: np.ndarray, denominator: int = 1) -> "RationalMatrix":
        return cls(np.asarray(values), denominator)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls(np.zeros((rows, cols), dtype=object))

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        num = np.zeros((n, n), dtype=object)
        for i in range(n):
            num[i, i] = 1
        return cls(num)

    @classmethod
    def diagonal(cls, values: Sequence[Scalar]) -> "RationalMatrix":
        fracs = [Fraction(v) for v in values]
        den = reduce(_lcm, (f.denominator for f in fracs), 1)
        num = np.zeros((len(fracs), len(fracs)), dtype=object)
        for i, f in enumerate(fracs):
            num[i, i] = f.numerator * (den // f.denominator)
        return cls(num, den)

    @classmethod
    def ones(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls(np.ones((rows, cols), dtype=object))

    @classmethod
    def hstack(cls, blocks: Sequence["RationalMatrix"]) -> "RationalMatrix":
        den = reduce(_lcm, (b._den for b in blocks), 1)
        return cls(np.hstack([b._num * (den // b._den) for b in blocks]), den)

    # -------------------------------------------------------------------------
    # Accessors
    # -------------------------------------------------------------------------

    @property
    def shape(self) -> Tuple[int, int]:
        return self._num.shape  # type: ignore[return-value]

    @property
    def rows(self) -> int:
        return self._num.shape[0]

    @property
    def cols(self) -> int:
        return self._num.shape[1]

    @property
    def numerators(self) -> np.ndarray:
        """Read-only object array of Python-int numerators."""
        return self._num

    @property
    def denominator(self) -> int:
        return self._den

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, key: Tuple[int, int]) -> Fraction:
        i, j = key
        return Fraction(int(self._num[i, j]), self._den)

    def column(self, j: int) -> "RationalMatrix":
        return RationalMatrix(self._num[:, j : j + 1], self._den)

    def row(self, i: int) -> "RationalMatrix":
        return RationalMatrix(self._num[i : i + 1, :], self._den)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "RationalMatrix":
        return RationalMatrix(self._num[np.ix_(list(rows), list(cols))], self._den)

    def to_float(self) -> np.ndarray:
        if self._den == 1 and _max_abs(self._num) < _INT64_HEADROOM:
            return self._num.astype(np.float64)
        out = np.empty(self.shape, dtype=np.float64)
        for idx, value in np.ndenumerate(self._num):
            out[idx] = float(Fraction(int(value), self._den))
        return out

    def to_int_array(self) -> np.ndarray:
        """int64 view of an integer matrix."""
        if self._den != 1:
            raise PreconditionError("matrix has non-integer entries")
        return self._num.astype(np.int64)

    # -------------------------------------------------------------------------
    # Arithmetic
    # -------------------------------------------------------------------------

    def _aligned(self, other: "RationalMatrix") -> Tuple[np.ndarray, np.ndarray, int]:
        if self.shape != other.shape:
            raise PreconditionError(f"shape mismatch: {self.shape} vs {other.shape}")
        den = _lcm(self._den, other._den)
        return self._num * (den // self._den), other._num * (den // other._den), den

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        a, b, den = self._aligned(other)
        return RationalMatrix(a + b, den)

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        a, b, den = self._aligned(other)
        return RationalMatrix(a - b, den)

    def __neg__(self) -> "RationalMatrix":
        return RationalMatrix(-self._num, self._den)

    def __mul__(self, scalar: Scalar) -> "RationalMatrix":
        if isinstance(scalar, RationalMatrix):
            raise TypeError("use @ for matrix products")
        f = Fraction(scalar)
        return RationalMatrix(self._num * f.numerator, self._den * f.denominator)

    __rmul__ = __mul__

    def __truediv__(self, scalar: Scalar) -> "RationalMatrix":
        return self * (1 / Fraction(scalar))

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise PreconditionError(f"cannot multiply {self.shape} by {other.shape}")
        bound = _max_abs(self._num) * _max_abs(other._num) * max(self.cols, 1)
        if bound < _INT64_HEADROOM:
            product = np.dot(self._num.astype(np.int64), other._num.astype(np.int64)).astype(object)
        else:
            product = np.dot(self._num, other._num)
            if not isinstance(product, np.ndarray):
                product = np.array(product, dtype=object)
        return RationalMatrix(product.reshape(self.rows, other.cols), self._den * other._den)

    @property
    def T(self) -> "RationalMatrix":  # noqa: N802
        return RationalMatrix(self._num.T, self._den)

    def transpose(self) -> "RationalMatrix":
        return self.T

    def power(self, exponent: int) -> "RationalMatrix":
        """``self ** exponent`` by repeated squaring."""
        if not self.is_square:
            raise PreconditionError("power of a non-square matrix")
        if exponent < 0:
            raise PreconditionError(f"negative exponent {exponent}")
        result = RationalMatrix.identity(self.rows)
        base = self
        while exponent:
            if exponent & 1:
                result = result @ base
            exponent >>= 1
            if exponent:
                base = base @ base
        return result

    def trace(self) -> Fraction:
        if not self.is_square:
            raise PreconditionError("trace of a non-square matrix")
        return Fraction(sum(int(self._num[i, i]) for i in range(self.rows)), self._den)

    # -------------------------------------------------------------------------
    # Predicates
    # -------------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return (
            self.shape == other.shape
            and self._den == other._den
            and bool(np.array_equal(self._num, other._num))
        )

    def __hash__(self) -> int:
        return hash((self.shape, self._den, tuple(int(x) for x in self._num.flat)))

    def is_zero(self) -> bool:
        return all(int(x) == 0 for x in self._num.flat)

    def is_identity(self) -> bool:
        return self.is_square and self == RationalMatrix.identity(self.rows)

    def is_symmetric(self) -> bool:
        return self.is_square and bool(np.array_equal(self._num, self._num.T))

    # -------------------------------------------------------------------------
    # Exact elimination
    # -------------------------------------------------------------------------

    def rank(self) -> int:
        """Rank over the rationals by fraction-free (Bareiss) elimination."""
        return bareiss_rank(self._num.tolist())

    def nullspace(self) -> "RationalMatrix":
        """Columns spanning the right null space, one per free column of the RREF."""
        rows, cols = self.shape
        work = [[Fraction(int(x)) for x in row] for row in self._num.tolist()]
        pivots: List[int] = []
        r = 0
        for c in range(cols):
            pivot = next((i for i in range(r, rows) if work[i][c] != 0), None)
            if pivot is None:
                continue
            work[r], work[pivot] = work[pivot], work[r]
            lead = work[r][c]
            work[r] = [x / lead for x in work[r]]
            for i in range(rows):
                if i != r and work[i][c] != 0:
                    factor = work[i][c]
                    work[i] = [a - factor * b for a, b in zip(work[i], work[r])]
            pivots.append(c)
            r += 1
            if r == rows:
                break

        free = [c for c in range(cols) if c not in set(pivots)]
        if not free:
            return RationalMatrix.zeros(cols, 0)
        basis = []
        for f in free:
            vector = [Fraction(0)] * cols
            vector[f] = Fraction(1)
            for i, pc in enumerate(pivots):
                vector[pc] = -work[i][f]
            basis.append(vector)
        return RationalMatrix.from_rows([list(entries) for entries in zip(*basis)])

    def column_space_contains(self, other: "RationalMatrix") -> bool:
        """True iff every column of ``other`` lies in the column space of ``self``."""
        return RationalMatrix.hstack([self, other]).rank() == self.rank()

    def __repr__(self) -> str:
        return f"RationalMatrix(shape={self.shape}, denominator={self._den})"


def bareiss_rank(rows: List[List[int]]) -> int:
    """
    Rank of an integer matrix by fraction-free Gaussian elimination.

    Pivots are taken in column order, scanning rows top-down for the first
    nonzero entry. Every intermediate value is an integer minor.
    """
    work = [[int(x) for x in row] for row in rows]
    nrows = len(work)
    ncols = len(work[0]) if nrows else 0
    rank = 0
    previous = 1
    for col in range(ncols):
        pivot_row = next((r for r in range(rank, nrows) if work[r][col] != 0), None)
        if pivot_row is None:
            continue
        work[rank], work[pivot_row] = work[pivot_row], work[rank]
        pivot = work[rank][col]
        for r in range(rank + 1, nrows):
            lead = work[r][col]
            row = work[r]
            top = work[rank]
            for c in range(col + 1, ncols):
                row[c] = (row[c] * pivot - lead * top[c]) // previous
            row[col] = 0
        previous = pivot
        rank += 1
        if rank == nrows:
            break
    return rank
