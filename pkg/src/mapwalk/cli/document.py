"""
Report documents and their canonical JSON form.

Canonical JSON: UTF-8, sorted keys, no insignificant whitespace. Two runs
with the same inputs and settings produce byte-identical files.
"""

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Optional, Union

from ..analysis.analyzer import MapAnalysis
from ..config import MapwalkSettings
from ..core.maps import map_profile
from ..fileio import atomic_write_bytes


def canonical_json(payload: Any) -> bytes:
    text = json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
    return text.encode("utf-8")


@dataclass
class ReportDocument:
    """
    Everything ``mapwalk analyze`` emits for one map.

    Attributes:
        source: Where the map came from (a path or a family label)
        map_summary: |V|, |E|, |F|, genus, darts plus type and multiplicity
        spectral: Spectral summary of U
        report: AnalysisReport payload
        version: mapwalk version
        config: Settings echo
    """

    source: str
    map_summary: Dict[str, Any]
    spectral: Dict[str, Any]
    report: Dict[str, Any]
    version: str
    config: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_analysis(
        cls, analysis: MapAnalysis, source: str, settings: MapwalkSettings
    ) -> "ReportDocument":
        from .. import __version__

        structure = analysis.structure
        summary = dict(structure.summary())
        summary["profile"] = map_profile(structure).to_dict()
        return cls(
            source=source,
            map_summary=summary,
            spectral=analysis.spectral.to_dict(),
            report=analysis.report.to_dict(),
            version=__version__,
            config=settings.echo(),
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "source": self.source,
            "map": self.map_summary,
            "spectral": self.spectral,
            "report": self.report,
            "version": self.version,
            "config": self.config,
        }

    def to_json(self) -> bytes:
        return canonical_json(self.to_dict())

    def write(self, path: Optional[Union[str, Path]]) -> Optional[Path]:
        """Write atomically to ``path``; ``None`` or "-" means the caller prints it."""
        if path is None or str(path) == "-":
            return None
        return atomic_write_bytes(path, self.to_json())
