"""Trace functions of multicurves on SU(2) character varieties.

Dehn parameters are dicts ``{edge_id: (m, t)}``; angle and twist vectors
are dicts ``{edge_id: value}``. Errors raise :class:`CurvetraceError`, a
subclass of :class:`ValueError`.
"""

from ._core import (
    CurvetraceError,
    Graph,
    Representation,
    build_representation,
    check_trace_relation,
    enumerate_dehn,
    in_delta,
    independence,
    intersection_number,
    isotypes,
    phi,
    route,
    sample_interior,
    suite,
    top_isotype,
    trace,
    twist,
    twist_phase_check,
    validate_dehn,
    word_trace,
)

__all__ = [
    "CurvetraceError",
    "Graph",
    "Representation",
    "build_representation",
    "check_trace_relation",
    "enumerate_dehn",
    "in_delta",
    "independence",
    "intersection_number",
    "isotypes",
    "phi",
    "route",
    "sample_interior",
    "suite",
    "top_isotype",
    "trace",
    "twist",
    "twist_phase_check",
    "validate_dehn",
    "word_trace",
]
