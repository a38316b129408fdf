"""Factorizations of bijective functions through two-row arrays."""
from .arrays import (
    Triple,
    TwoRowArray,
    classify_transposition,
    diagonal,
    from_top_and_diagonal,
    parse_array,
    position_order,
    transpose,
)
from .core import (
    BijectiveMap,
    Component,
    ComponentType,
    canonical_map,
    component_type,
    decompose,
    parse_cycles,
    parse_map,
    types_of,
)
from .enumeration import (
    WTable,
    enumerate_arrays,
    scan_conjecture,
    verify_theorem31,
    w_table,
)
from .phi import PhiCase, phi, preimages_direct, preimages_oracle
from .tracking import TrackInstance, puncture, theta, track_counts, verify_reduction

__version__ = "0.1.0"

__all__ = [
    "BijectiveMap",
    "Component",
    "ComponentType",
    "PhiCase",
    "TrackInstance",
    "Triple",
    "TwoRowArray",
    "WTable",
    "canonical_map",
    "classify_transposition",
    "component_type",
    "decompose",
    "diagonal",
    "enumerate_arrays",
    "from_top_and_diagonal",
    "parse_array",
    "parse_cycles",
    "parse_map",
    "phi",
    "position_order",
    "preimages_direct",
    "preimages_oracle",
    "puncture",
    "scan_conjecture",
    "theta",
    "track_counts",
    "transpose",
    "types_of",
    "verify_reduction",
    "verify_theorem31",
    "w_table",
]
