"""
The ``.rotmap`` text format.

Example:
--------
    # X_2: two vertices joined by two edges on the sphere
    darts 4
    v 0: 1 3
    v 1: 0 2

The header ``darts <2|E|>`` comes first; then one line per vertex listing its
darts clockwise. ``#`` starts a comment. Reversal is implicit (d XOR 1).
"""

import re
from pathlib import Path
from typing import Dict, List, Optional, Union

from loguru import logger

from ..errors import MapValidationError, RotmapParseError
from ..fileio import atomic_write_text
from .maps import MapStructure, build_map

_HEADER = re.compile(r"^darts\s+(\S+)$")
_VERTEX = re.compile(r"^v\s+(\S+)\s*:\s*(.*)$")


def _to_int(token: str, line_number: int, what: str, raw: str) -> int:
    try:
        value = int(token)
    except ValueError:
        raise RotmapParseError(line_number, f"{what} {token!r} is not an integer", raw) from None
    if value < 0:
        raise RotmapParseError(line_number, f"{what} {value} is negative", raw)
    return value


def parse_rotmap(text: str) -> MapStructure:
    """
    Parse ``.rotmap`` text into a map.

    Raises:
        RotmapParseError: malformed line, with its 1-based line number
        MapValidationError: well-formed text describing an invalid map
    """
    declared: Optional[int] = None
    rotations: Dict[int, List[int]] = {}
    first_seen: Dict[int, int] = {}
    header_line = 0
    last_line = 0

    for line_number, raw in enumerate(text.splitlines(), start=1):
        last_line = line_number
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue

        if declared is None:
            match = _HEADER.match(body)
            if not match:
                raise RotmapParseError(line_number, "expected header 'darts <count>'", raw)
            declared = _to_int(match.group(1), line_number, "dart count", raw)
            header_line = line_number
            continue

        match = _VERTEX.match(body)
        if not match:
            if _HEADER.match(body):
                raise RotmapParseError(line_number, "duplicate 'darts' header", raw)
            raise RotmapParseError(line_number, "expected 'v <id>: <darts...>'", raw)
        vertex = _to_int(match.group(1), line_number, "vertex id", raw)
        if vertex in rotations:
            raise RotmapParseError(
                line_number, f"vertex {vertex} already defined on line {first_seen[vertex]}", raw
            )
        darts = [_to_int(tok, line_number, "dart", raw) for tok in match.group(2).split()]
        if not darts:
            raise RotmapParseError(line_number, f"vertex {vertex} has an empty rotation", raw)
        for dart in darts:
            if dart >= declared:
                raise RotmapParseError(
                    line_number, f"dart {dart} out of range for 'darts {declared}'", raw
                )
        rotations[vertex] = darts
        first_seen[vertex] = line_number

    if declared is None:
        raise RotmapParseError(max(last_line, 1), "missing 'darts <count>' header")
    if not rotations:
        raise RotmapParseError(max(last_line, 1), "no vertex lines")
    expected = list(range(len(rotations)))
    if sorted(rotations) != expected:
        missing = sorted(set(expected) - set(rotations))
        raise RotmapParseError(
            header_line, f"vertex ids must be 0..{len(rotations) - 1}; missing {missing[:8]}"
        )
    used = sum(len(r) for r in rotations.values())
    if used != declared:
        raise RotmapParseError(
            header_line, f"header declares {declared} darts but rotations list {used}"
        )

    structure = build_map([rotations[v] for v in expected])
    logger.debug(f"Parsed rotmap: {structure!r}")
    return structure


def read_rotmap(path: Union[str, Path]) -> MapStructure:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise MapValidationError(f"cannot read {path}: {exc}") from exc
    return parse_rotmap(text)


def emit_rotmap(structure: MapStructure, comment: Optional[str] = None) -> str:
    """Canonical ``.rotmap`` text; rotation lists are written verbatim."""
    lines = []
    if comment:
        lines.extend(f"# {part}" for part in comment.splitlines())
    summary = structure.summary()
    lines.append(
        f"# V={summary['vertices']} E={summary['edges']} F={summary['faces']} g={summary['genus']}"
    )
    lines.append(f"darts {structure.dart_count}")
    for v, cycle in enumerate(structure.rotation_lists):
        lines.append(f"v {v}: " + " ".join(str(d) for d in cycle))
    return "\n".join(lines) + "\n"


def write_rotmap(
    structure: MapStructure, path: Union[str, Path], comment: Optional[str] = None
) -> Path:
    target = atomic_write_text(path, emit_rotmap(structure, comment))
    logger.info(f"Wrote {target}")
    return target
