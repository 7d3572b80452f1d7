"""
Integer polynomials and exact characteristic polynomials.

Coefficients are stored highest degree first, matching the list convention of
the usual dense polynomial toolkits (``[1, -5, -2]`` is t^2 - 5t - 2).
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import List, Sequence, Tuple, Union

import numpy as np
from loguru import logger

from ..errors import ConsistencyError, PreconditionError
from .rational import RationalMatrix

# Integer roots of the scaled char poly are swept exhaustively up to this bound
EXACT_ROOT_SEARCH_LIMIT = 4096


@dataclass(frozen=True)
class IntegerPolynomial:
    """Dense polynomial with integer coefficients, highest degree first."""

    coefficients: Tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(int(c) for c in self.coefficients)
        while len(coeffs) > 1 and coeffs[0] == 0:
            coeffs = coeffs[1:]
        object.__setattr__(self, "coefficients", coeffs or (0,))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading(self) -> int:
        return self.coefficients[0]

    def __call__(self, x: Union[int, Fraction]) -> Fraction:
        """Exact Horner evaluation."""
        acc = Fraction(0)
        for c in self.coefficients:
            acc = acc * x + c
        return acc

    def evaluate_matrix(self, matrix: RationalMatrix) -> RationalMatrix:
        """p(A) by Horner's scheme over exact rationals."""
        if not matrix.is_square:
            raise PreconditionError("polynomial of a non-square matrix")
        identity = RationalMatrix.identity(matrix.rows)
        acc = identity * self.coefficients[0]
        for c in self.coefficients[1:]:
            acc = acc @ matrix + identity * c
        return acc

    def primitive(self) -> "IntegerPolynomial":
        """Divide out the content and make the leading coefficient positive."""
        content = reduce(gcd, self.coefficients, 0) or 1
        sign = -1 if self.leading < 0 else 1
        return IntegerPolynomial(tuple(sign * c // content for c in self.coefficients))

    def deflate(self, root: Union[int, Fraction]) -> "IntegerPolynomial":
        """
        Divide by the primitive linear factor (q t - p) of a rational root p/q.

        Raises:
            ConsistencyError: if ``root`` is not a root
        """
        root = Fraction(root)
        p, q = root.numerator, root.denominator
        quotient: List[Fraction] = []
        carry = Fraction(0)
        for c in self.coefficients[:-1]:
            carry = (c + p * carry) / q
            quotient.append(carry)
        remainder = self.coefficients[-1] + p * (quotient[-1] if quotient else 0)
        if remainder != 0 or any(b.denominator != 1 for b in quotient):
            raise ConsistencyError(f"{root} is not a root of {self}")
        return IntegerPolynomial(tuple(int(b) for b in quotient))

    def __str__(self) -> str:
        terms = []
        for power, c in zip(range(self.degree, -1, -1), self.coefficients):
            if c == 0:
                continue
            mag = abs(c)
            body = "" if (mag == 1 and power) else str(mag)
            if power >= 2:
                body += f"t^{power}"
            elif power == 1:
                body += "t"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


# =============================================================================
# CHARACTERISTIC POLYNOMIALS
# =============================================================================


def berkowitz(matrix: Sequence[Sequence[int]]) -> List[int]:
    """
    Characteristic polynomial det(tI - A) of an integer matrix, division free.

    Each step borders the leading principal submatrix by one row and column
    and multiplies the previous coefficient vector by a lower-triangular
    Toeplitz matrix built from -R M^k S.
    """
    a = [[int(x) for x in row] for row in matrix]
    n = len(a)
    poly = [1]
    for r in range(n):
        column = [a[i][r] for i in range(r)]
        toeplitz = [1, -a[r][r]]
        for _ in range(r):
            toeplitz.append(-sum(a[r][j] * column[j] for j in range(r)))
            column = [sum(a[i][j] * column[j] for j in range(r)) for i in range(r)]

        bordered = []
        for i in range(r + 2):
            acc = 0
            for j in range(max(0, i - len(toeplitz) + 1), min(i, r) + 1):
                acc += toeplitz[i - j] * poly[j]
            bordered.append(acc)
        poly = bordered
    return poly


def char_poly(matrix: RationalMatrix) -> IntegerPolynomial:
    """
    Characteristic polynomial of a rational matrix, cleared to primitive integers.

    With A = B/q, det(tI - A) = q^-n det(qtI - B), so the coefficients of the
    integer char poly of B are rescaled by powers of q.

    Args:
        matrix: Square RationalMatrix

    Returns:
        Primitive integer polynomial with positive leading coefficient
    """
    if not matrix.is_square:
        raise PreconditionError(f"char_poly needs a square matrix, got {matrix.shape}")
    n = matrix.rows
    q = matrix.denominator
    monic = berkowitz(matrix.numerators.tolist())
    scaled = [c * q ** (n - i) for i, c in enumerate(monic)]
    # scaled[i] multiplies t^(n-i) after substituting s = q t; the leading term is q^n t^n
    return IntegerPolynomial(tuple(scaled)).primitive()


def rational_eigenvalues(
    matrix: RationalMatrix,
    approximations: Sequence[complex] = (),
) -> Tuple[bool, List[Fraction]]:
    """
    Rational eigenvalues of a square rational matrix, with multiplicity.

    For A = B/q the integer matrix B has a monic integer characteristic
    polynomial, so its rational roots are integers (rational root theorem)
    and those of A are integers over q. Float approximations propose
    candidates. Every root of B is bounded by its largest absolute row sum,
    so when that bound is at most ``EXACT_ROOT_SEARCH_LIMIT`` all integers in
    range are tried as well and the answer does not depend on the floats.
    Each candidate is confirmed exactly by evaluation and deflation.

    Args:
        matrix: Square RationalMatrix
        approximations: Optional float eigenvalues of ``matrix``; computed with
            numpy when omitted

    Returns:
        (all_rational, sorted roots with multiplicity)
    """
    if not matrix.is_square:
        raise PreconditionError(f"rational_eigenvalues needs a square matrix, got {matrix.shape}")
    n = matrix.rows
    if n == 0:
        return True, []
    q = matrix.denominator
    remaining = IntegerPolynomial(tuple(berkowitz(matrix.numerators.tolist())))

    if len(approximations) == 0:
        approximations = np.linalg.eigvals(matrix.to_float())
    candidates = set()
    for value in approximations:
        centre = int(round(complex(value).real * q))
        candidates.update((centre - 1, centre, centre + 1))
    bound = max(sum(abs(int(x)) for x in row) for row in matrix.numerators.tolist())
    if bound <= EXACT_ROOT_SEARCH_LIMIT:
        candidates.update(range(-bound, bound + 1))

    roots: List[Fraction] = []
    for candidate in sorted(candidates, key=lambda c: (abs(c), c)):
        while remaining.degree > 0 and remaining(candidate) == 0:
            roots.append(Fraction(candidate, q))
            remaining = remaining.deflate(candidate)

    all_rational = remaining.degree == 0
    logger.debug(f"rational_eigenvalues: {len(roots)}/{n} roots rational")
    return all_rational, sorted(roots)
