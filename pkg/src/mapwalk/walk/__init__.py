"""
The vertex-face quantum walk.

Components:
- operator: exact U = (2P - I)(2Q - I), states, evolution, transfer probabilities
- chebyshev: the projected sequence B'_t = N^T U^t N and its oracle checks

Example:
--------
>>> from mapwalk.core import build_map, incidence
>>> from mapwalk.walk import build_operator, transfer_probability
>>> op = build_operator(incidence(build_map([[1, 3], [0, 2]])))
>>> transfer_probability(op, 0, 1, 2)
[0.0, 1.0, 0.0]
"""

from .chebyshev import (
    ProjectedSequence,
    chebyshev_oracle_check,
    chebyshev_values,
    coupled_recurrence_check,
    first_period,
    oracle_agreement,
    projected_sequence,
)
from .operator import (
    WalkOperator,
    WalkState,
    build_operator,
    dual_operator,
    evolve,
    evolve_sequence,
    float_state,
    transfer_probability,
    vector_sequence,
    vertex_state,
)

__all__ = [
    "WalkOperator",
    "WalkState",
    "build_operator",
    "dual_operator",
    "evolve",
    "evolve_sequence",
    "float_state",
    "transfer_probability",
    "vector_sequence",
    "vertex_state",
    "ProjectedSequence",
    "projected_sequence",
    "first_period",
    "chebyshev_oracle_check",
    "chebyshev_values",
    "coupled_recurrence_check",
    "oracle_agreement",
]
