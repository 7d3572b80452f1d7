"""
Result records for map analyses.

Every record has ``to_dict()``; exact values render as "p/q" strings next to
their float approximations.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple, Union


def render_rational(value: Union[int, Fraction]) -> str:
    """Canonical text for an exact rational: "n" or "p/q" in lowest terms."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


# =============================================================================
# ENUMS
# =============================================================================


class PrimePowerCase(Enum):
    """Which case of the odd-prime identity-power classification holds."""

    CASE_I = "i"
    CASE_II = "ii"
    CASE_III = "iii"
    NOT_APPLICABLE = "none"


class TransferKind(Enum):
    REVERSE = "reverse"
    VERTEX_FACE = "vertex_face"


# =============================================================================
# RECORDS
# =============================================================================


@dataclass(frozen=True, order=True)
class PSTPair:
    u: int
    v: int
    tau: int

    def to_dict(self) -> Dict[str, int]:
        return {"u": self.u, "v": self.v, "tau": self.tau}


@dataclass(frozen=True, order=True)
class GeneralPSTPair:
    """Transfer between vertices of unequal degree: U^tau N e_u = c N e_v."""

    u: int
    v: int
    tau: int
    coefficient: Fraction

    def to_dict(self) -> Dict[str, Any]:
        return {
            "u": self.u,
            "v": self.v,
            "tau": self.tau,
            "coefficient": render_rational(self.coefficient),
        }


@dataclass(frozen=True, order=True)
class PeriodicVertex:
    u: int
    tau: int

    def to_dict(self) -> Dict[str, int]:
        return {"u": self.u, "tau": self.tau}


@dataclass(frozen=True)
class VariantWitness:
    """
    A reverse-PST (target is a vertex) or vertex-face PST (target is a face).

    ``periodic_at_double`` records whether u is periodic at 2t; None when 2t
    lies beyond the computed sequence.
    """

    kind: TransferKind
    u: int
    target: int
    t: int
    coefficient: Fraction = Fraction(1)
    periodic_at_double: Optional[bool] = None

    def sort_key(self) -> Tuple[str, int, int, int]:
        return (self.kind.value, self.u, self.target, self.t)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "u": self.u,
            "target": self.target,
            "t": self.t,
            "coefficient": render_rational(self.coefficient),
            "periodic_at_2t": self.periodic_at_double,
        }


@dataclass(frozen=True)
class CospectralPair:
    """Strong cospectrality of (u, v) for B_d; ``verdict`` None means indeterminate."""

    u: int
    v: int
    d: int
    verdict: Optional[bool]

    def to_dict(self) -> Dict[str, Any]:
        return {"u": self.u, "v": self.v, "d": self.d, "strongly_cospectral": self.verdict}


@dataclass(frozen=True)
class IdentityPower:
    """
    Outcome of the U^s = I search.

    Attributes:
        s: Minimal s with U^s = I, when found
        map_period: Minimal tau with B'_tau = D
        dual_period: Same for the dual map
        confirmed: U^s = I checked by exact power (None when skipped)
        excluded: No s can exist (rational spectrum cap exhausted)
    """

    s: Optional[int]
    map_period: Optional[int]
    dual_period: Optional[int]
    confirmed: Optional[bool] = None
    excluded: bool = False

    @property
    def period_is_identity(self) -> Optional[bool]:
        if self.map_period is None or self.s is None:
            return None
        return self.s == self.map_period

    def to_dict(self) -> Dict[str, Any]:
        return {
            "s": self.s,
            "map_period": self.map_period,
            "dual_period": self.dual_period,
            "period_is_identity": self.period_is_identity,
            "confirmed_by_power": self.confirmed,
            "excluded": self.excluded,
        }


@dataclass(frozen=True)
class U2Verdict:
    """The five equivalent U^2 = I conditions and their common verdict."""

    holds: bool
    conditions: Dict[str, bool]
    failed_witness: Optional[str] = None
    uniform_fast_path: Optional[bool] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "holds": self.holds,
            "conditions": dict(sorted(self.conditions.items())),
            "failed_witness": self.failed_witness,
            "uniform_fast_path": self.uniform_fast_path,
        }


@dataclass(frozen=True)
class Characterizations:
    is_quasi_tree_bouquet: bool
    u_squared_is_identity: bool
    rational_cc_spectrum: bool
    prime_power_case: PrimePowerCase
    classified_prime: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "is_quasi_tree_bouquet": self.is_quasi_tree_bouquet,
            "u_squared_is_identity": self.u_squared_is_identity,
            "rational_cc_spectrum": self.rational_cc_spectrum,
            "prime_power_case": self.prime_power_case.value,
            "classified_prime": self.classified_prime,
        }


@dataclass
class AnalysisReport:
    """
    Everything the analyzer found for one map.

    Pair lists are sorted; ``notes`` carries horizon caveats (a detection
    missing within the horizon is not a proof of absence).
    """

    horizon: int
    pst_pairs: List[PSTPair] = field(default_factory=list)
    periodic_vertices: List[PeriodicVertex] = field(default_factory=list)
    identity: Optional[IdentityPower] = None
    characterizations: Optional[Characterizations] = None
    u2: Optional[U2Verdict] = None
    cospectral_pairs: List[CospectralPair] = field(default_factory=list)
    variant_transfers: List[VariantWitness] = field(default_factory=list)
    general_pst: Optional[List[GeneralPSTPair]] = None
    period_bound: Optional[int] = None
    allowed_identity_powers: Optional[List[int]] = None
    advisory_root_orders: List[int] = field(default_factory=list)
    odd_period_column_check: Optional[bool] = None
    symmetry: Optional[Dict[str, Any]] = None
    pst_pairing: Optional[List[Tuple[int, int]]] = None
    notes: List[str] = field(default_factory=list)

    @property
    def map_period(self) -> Optional[int]:
        return None if self.identity is None else self.identity.map_period

    @property
    def identity_power(self) -> Optional[int]:
        return None if self.identity is None else self.identity.s

    def to_dict(self) -> Dict[str, Any]:
        bound = None
        if self.period_bound is not None:
            text = str(self.period_bound)
            bound = {"value": text, "digits": len(text)}
        return {
            "horizon": self.horizon,
            "pst_pairs": [p.to_dict() for p in self.pst_pairs],
            "periodic_vertices": [p.to_dict() for p in self.periodic_vertices],
            "identity": None if self.identity is None else self.identity.to_dict(),
            "characterizations": (
                None if self.characterizations is None else self.characterizations.to_dict()
            ),
            "u_squared": None if self.u2 is None else self.u2.to_dict(),
            "cospectral_pairs": [c.to_dict() for c in self.cospectral_pairs],
            "variant_transfers": [w.to_dict() for w in self.variant_transfers],
            "general_pst": (
                None if self.general_pst is None else [g.to_dict() for g in self.general_pst]
            ),
            "bounds": {
                "period_bound": bound,
                "allowed_identity_powers": self.allowed_identity_powers,
                "advisory_root_orders": self.advisory_root_orders,
            },
            "odd_period_column_check": self.odd_period_column_check,
            "symmetry": self.symmetry,
            "pst_pairing": (
                None if self.pst_pairing is None else [list(p) for p in self.pst_pairing]
            ),
            "notes": list(self.notes),
        }
