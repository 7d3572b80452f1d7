"""
Analysis of vertex-face walks.

Components:
- report: result records and the AnalysisReport
- transfer: PST, periodicity, identity powers, cospectrality, variant transfers
- characterize: U^2 = I, odd-prime identity powers, rational-spectrum cap
- analyzer: MapAnalyzer, which runs and cross-checks everything

Example:
--------
>>> from mapwalk.analysis import MapAnalyzer
>>> from mapwalk.families import dipole
>>> report = MapAnalyzer().analyze(dipole(5))
>>> [(p.u, p.v, p.tau) for p in report.pst_pairs]
[(0, 1, 1), (1, 0, 1)]
"""

from .analyzer import MapAnalysis, MapAnalyzer
from .characterize import (
    characterize_u2,
    classify_prime_power,
    is_prime,
    odd_period_column_check,
    rationality_period_constraint,
)
from .report import (
    AnalysisReport,
    Characterizations,
    CospectralPair,
    GeneralPSTPair,
    IdentityPower,
    PeriodicVertex,
    PrimePowerCase,
    PSTPair,
    TransferKind,
    U2Verdict,
    VariantWitness,
    render_rational,
)
from .transfer import (
    cospectrality_verdict,
    detect_identity_power,
    detect_periodicity,
    detect_pst,
    general_pst,
    period_bound,
    propagate_pst_by_symmetry,
    strong_cospectrality,
    variant_transfers,
)

__all__ = [
    "AnalysisReport",
    "Characterizations",
    "CospectralPair",
    "GeneralPSTPair",
    "IdentityPower",
    "MapAnalysis",
    "MapAnalyzer",
    "PSTPair",
    "PeriodicVertex",
    "PrimePowerCase",
    "TransferKind",
    "U2Verdict",
    "VariantWitness",
    "characterize_u2",
    "classify_prime_power",
    "cospectrality_verdict",
    "detect_identity_power",
    "detect_periodicity",
    "detect_pst",
    "general_pst",
    "is_prime",
    "odd_period_column_check",
    "period_bound",
    "propagate_pst_by_symmetry",
    "rationality_period_constraint",
    "render_rational",
    "strong_cospectrality",
    "variant_transfers",
]
