#!/usr/bin/env python3
"""
Map analyzer: runs every detector on one map and cross-checks the results.

Usage:
    analyzer = MapAnalyzer(settings)
    result = analyzer.run(structure)
    print(result.report.to_dict())
"""

from dataclasses import dataclass, field
from typing import List, Optional

from loguru import logger

from ..config import MapwalkSettings, default_settings
from ..core.incidence import IncidenceMatrices, incidence
from ..core.maps import MapStructure, map_profile
from ..core.symmetry import automorphisms, symmetry_summary
from ..errors import ConsistencyError, PreconditionError
from ..families.generators import is_quasi_tree_bouquet
from ..spectra.spectrum import (
    SpectralData,
    advisory_root_orders,
    float_eigenspace_dimensions,
    trace_formula,
    u_spectrum,
    uniform_type_trace,
    verify_root_space,
)
from ..walk.chebyshev import ProjectedSequence, projected_sequence
from ..walk.operator import WalkOperator, build_operator
from .characterize import (
    characterize_u2,
    classify_prime_power,
    is_prime,
    odd_period_column_check,
)
from .report import AnalysisReport, Characterizations, CospectralPair, PrimePowerCase, PSTPair
from .transfer import (
    cospectrality_verdict,
    detect_identity_power,
    detect_periodicity,
    detect_pst,
    general_pst,
    period_bound,
    propagate_pst_by_symmetry,
    rational_identity_powers,
    variant_transfers,
)


@dataclass
class MapAnalysis:
    """A finished analysis together with the objects it was computed from."""

    structure: MapStructure
    incidence: IncidenceMatrices = field(repr=False)
    operator: WalkOperator = field(repr=False)
    spectral: SpectralData = field(repr=False)
    sequence: ProjectedSequence = field(repr=False)
    report: AnalysisReport = field(repr=False)


class MapAnalyzer:
    """
    Runs PST, periodicity, identity-power and characterization detectors.

    Every result is checked against the others (parity of the identity
    power, U^2 = I against s, PST pairs against periodicity at 2 tau, ...);
    a disagreement raises ConsistencyError rather than producing a report.
    """

    def __init__(self, settings: Optional[MapwalkSettings] = None):
        self.settings = settings or default_settings()

    def analyze(self, structure: MapStructure) -> AnalysisReport:
        return self.run(structure).report

    def run(self, structure: MapStructure) -> MapAnalysis:
        settings = self.settings
        horizon = settings.max_steps
        logger.info(f"Analyzing {structure!r} with horizon {horizon}")

        mats = incidence(structure, verify=settings.verify_operators)
        op = build_operator(mats, verify=settings.verify_operators)
        spectral = u_spectrum(structure, mats, settings)
        self._check_spectrum(structure, mats, op, spectral)

        seq = projected_sequence(op, horizon, stop_at_period=True)
        report = AnalysisReport(horizon=horizon)
        report.pst_pairs = detect_pst(seq, horizon)
        report.periodic_vertices, map_period = detect_periodicity(seq, horizon)
        self._check_pst_pairs(report.pst_pairs, seq)

        rational = spectral.rational_chat is not None
        report.allowed_identity_powers = rational_identity_powers(rational)
        report.identity = detect_identity_power(
            structure, op, seq, horizon, rational_spectrum=rational, settings=settings
        )
        if report.identity.map_period != map_period:
            raise ConsistencyError(
                f"map period {map_period} disagrees with identity search "
                f"{report.identity.map_period}"
            )
        self._check_small_maps(structure, report)
        report.odd_period_column_check = self._check_odd_period(structure, op, map_period)

        report.u2 = characterize_u2(structure, mats, op)
        self._check_u2(structure, report)
        report.characterizations = Characterizations(
            is_quasi_tree_bouquet=is_quasi_tree_bouquet(structure),
            u_squared_is_identity=report.u2.holds,
            rational_cc_spectrum=rational,
            prime_power_case=PrimePowerCase.NOT_APPLICABLE,
        )
        self._classify_prime_power(structure, mats, op, report)

        report.cospectral_pairs = self._cospectral_pairs(report.pst_pairs, seq)
        variant_horizon = min(settings.variant_max_steps, horizon)
        report.variant_transfers = variant_transfers(op, structure, variant_horizon, seq)
        if settings.general_pst:
            report.general_pst = general_pst(op, structure, variant_horizon)

        report.period_bound = period_bound(structure.num_vertices, structure.num_faces)
        report.advisory_root_orders = advisory_root_orders(
            spectral, structure.num_vertices, structure.num_faces
        )
        self._symmetry(structure, op, report)
        self._horizon_notes(seq, report)

        logger.info(
            f"Analysis done: {len(report.pst_pairs) // 2} PST pair(s), "
            f"period {report.map_period}, s={report.identity_power}"
        )
        return MapAnalysis(structure, mats, op, spectral, seq, report)

    # =========================================================================
    # CROSS-CHECKS
    # =========================================================================

    def _check_spectrum(
        self,
        structure: MapStructure,
        mats: IncidenceMatrices,
        op: WalkOperator,
        spectral: SpectralData,
    ) -> None:
        exact_trace = op.U.trace()
        if trace_formula(mats) != exact_trace:
            raise ConsistencyError(f"trace formula differs from tr U = {exact_trace}")
        uniform = uniform_type_trace(structure)
        if uniform is not None and uniform != exact_trace:
            raise ConsistencyError(f"uniform trace {uniform} differs from tr U = {exact_trace}")
        if abs(spectral.trace - float(exact_trace)) > 1e-6:
            raise ConsistencyError(f"eigenvalue sum {spectral.trace} differs from {exact_trace}")

        dims = float_eigenspace_dimensions(op.U_float)
        if dims != spectral.dims:
            raise ConsistencyError(f"numerical eigenspace dims {dims} differ from {spectral.dims}")
        if not spectral.has_minus_one and structure.num_vertices != structure.num_faces:
            raise ConsistencyError("-1 is not an eigenvalue of U but |V| != |F|")

        if spectral.rational_chat is not None and op.num_arcs <= self.settings.exact_power_max_arcs:
            for lam in sorted(set(spectral.rational_chat)):
                if 0 < lam < 1 and not verify_root_space(op, lam):
                    raise ConsistencyError(f"root space of {lam} is not annihilated")

    def _check_pst_pairs(self, pairs: List[PSTPair], seq: ProjectedSequence) -> None:
        partner = {}
        for pair in pairs:
            if partner.setdefault(pair.u, pair.v) != pair.v:
                raise ConsistencyError(
                    f"vertex {pair.u} has PST to both {partner[pair.u]} and {pair.v}"
                )
            double = 2 * pair.tau
            if seq.covers(double):
                d_u = seq.degrees[pair.u]
                if seq[double][pair.u, pair.u] != d_u:
                    raise ConsistencyError(
                        f"PST {pair.u} -> {pair.v} at {pair.tau} without periodicity at {double}"
                    )

    def _check_small_maps(self, structure: MapStructure, report: AnalysisReport) -> None:
        """A single vertex or a single face forces s in {1, 2}."""
        if min(structure.num_vertices, structure.num_faces) != 1:
            return
        s = report.identity_power
        if s not in (1, 2):
            raise ConsistencyError(f"map with a single vertex or face has s = {s}")

    def _check_odd_period(
        self, structure: MapStructure, op: WalkOperator, map_period: Optional[int]
    ) -> Optional[bool]:
        if map_period is None or map_period % 2 == 0:
            return None
        if structure.num_vertices > structure.num_faces:
            raise ConsistencyError(f"odd period {map_period} with |V| > |F|")
        if op.num_arcs > self.settings.exact_power_max_arcs:
            return None
        contained = odd_period_column_check(op, map_period)
        if not contained:
            raise ConsistencyError(f"periodic at odd {map_period} but col(U^k N) not in col(M)")
        return contained

    def _check_u2(self, structure: MapStructure, report: AnalysisReport) -> None:
        s = report.identity_power
        if s is not None and report.u2.holds != (s in (1, 2)):
            raise ConsistencyError(f"U^2 = I is {report.u2.holds} but s = {s}")
        if report.u2.holds and any(p.tau == 1 for p in report.pst_pairs):
            if structure.num_vertices != 2:
                raise ConsistencyError("PST at time 1 with U^2 = I on more than two vertices")

    def _classify_prime_power(
        self,
        structure: MapStructure,
        mats: IncidenceMatrices,
        op: WalkOperator,
        report: AnalysisReport,
    ) -> None:
        s = report.identity_power
        if s == 1:
            p = 3
        elif s is not None and s > 2 and is_prime(s):
            p = s
        else:
            return
        profile = map_profile(structure)
        if profile.map_type is None or profile.multiplicity is None:
            report.notes.append(f"U^{p} = I on a map without uniform type; no case applies")
            return
        try:
            case = classify_prime_power(structure, mats, op, p)
        except PreconditionError as exc:
            logger.warning(f"prime-power classification skipped: {exc}")
            return
        report.characterizations = Characterizations(
            is_quasi_tree_bouquet=report.characterizations.is_quasi_tree_bouquet,
            u_squared_is_identity=report.characterizations.u_squared_is_identity,
            rational_cc_spectrum=report.characterizations.rational_cc_spectrum,
            prime_power_case=case,
            classified_prime=p,
        )

    def _cospectral_pairs(
        self, pairs: List[PSTPair], seq: ProjectedSequence
    ) -> List[CospectralPair]:
        results = []
        for pair in pairs:
            if pair.u > pair.v:
                continue
            for d in range(1, pair.tau + 1):
                if pair.tau % d:
                    continue
                verdict = cospectrality_verdict(seq, pair.u, pair.v, d, self.settings)
                if verdict is False:
                    logger.warning(
                        f"PST pair ({pair.u}, {pair.v}) not strongly cospectral for B_{d}"
                    )
                results.append(CospectralPair(pair.u, pair.v, d, verdict))
        return results

    # =========================================================================
    # SYMMETRY AND NOTES
    # =========================================================================

    def _symmetry(self, structure: MapStructure, op: WalkOperator, report: AnalysisReport) -> None:
        autos = automorphisms(structure)
        summary = symmetry_summary(structure, autos)
        report.symmetry = summary.to_dict()
        if not summary.vertex_transitive or not report.pst_pairs:
            return
        first = next(p for p in report.pst_pairs if p.u < p.v)
        report.pst_pairing = propagate_pst_by_symmetry(
            structure,
            autos,
            first,
            detected=report.pst_pairs,
            op=op,
            max_arcs=self.settings.exact_power_max_arcs,
        )

    def _horizon_notes(self, seq: ProjectedSequence, report: AnalysisReport) -> None:
        if seq.period is None:
            message = (
                f"no map period within {report.horizon} steps; "
                "PST and periodicity beyond the horizon are undecided"
            )
            logger.warning(message)
            report.notes.append(message)
        if report.identity is not None and report.identity.excluded:
            report.notes.append(
                "rational Chat Chat^T spectrum: no U^s = I with s in the allowed set"
            )
        if any(w.periodic_at_double is False for w in report.variant_transfers):
            report.notes.append("a vertex-face transfer at t is not followed by periodicity at 2t")
        if report.identity is not None and report.identity.confirmed is None:
            if report.identity.s is not None:
                report.notes.append(
                    "U^s = I decided from map and dual periods without a power check"
                )
