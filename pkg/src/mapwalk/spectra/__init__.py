"""
Exact and floating-point linear algebra for mapwalk.

Components:
- rational: RationalMatrix, dense exact rational matrices
- polynomial: IntegerPolynomial, char_poly, rational_eigenvalues
- eigen: cyclic Jacobi eigensolver and eigenvalue clustering
- spectrum: eigenvalues of U from Chat Chat^T (import ``mapwalk.spectra.spectrum``;
  it depends on ``mapwalk.core``)

Example:
--------
>>> from mapwalk.spectra import RationalMatrix, char_poly
>>> str(char_poly(RationalMatrix.from_rows([[2, 2], [2, 2]])))
't^2 - 4t'
"""

from .eigen import EigenCluster, EigenPairs, cluster_eigenvalues, group_eigenvalues, symmetric_eigs
from .polynomial import IntegerPolynomial, berkowitz, char_poly, rational_eigenvalues
from .rational import RationalMatrix, bareiss_rank

__all__ = [
    "RationalMatrix",
    "bareiss_rank",
    "IntegerPolynomial",
    "berkowitz",
    "char_poly",
    "rational_eigenvalues",
    "EigenPairs",
    "EigenCluster",
    "symmetric_eigs",
    "group_eigenvalues",
    "cluster_eigenvalues",
]
