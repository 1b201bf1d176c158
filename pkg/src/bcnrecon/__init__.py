"""Reconstructibility analysis for Boolean control networks.

Networks are handled in matrix form over basis-vector states.  The
package builds weighted pair graphs and observer automata, decides
whether a homing input sequence exists (and whether every long enough
word is one), extracts and verifies shortest homing sequences, tracks
the current state from an input/output record, and ships brute-force
oracles plus example generators for cross-checking.
"""

from .bcn import Bcn, TransitionGraph
from .decider import (
    NoConsistentStateError,
    NotHomingError,
    ReconReport,
    TrackingTrace,
    determine_current_state,
    is_fornasini_reconstructible,
    is_reconstructible,
    is_reconstructible_via_dfa,
    oracle_fornasini,
    oracle_reconstructible,
    verify_homing,
)
from .dot import dfa_dot, stg_dot, wpg_dot
from .generators import (
    example_5state,
    family_cycle_stayer,
    family_stay_stepper,
    random_bcn,
    sat_reduction_bn,
)
from .netfile import NetworkFormatError, parse_network, serialize_network
from .observer import ObserverDfa, build_observer_dfa
from .pair_graph import DoomedSet, StatePair, WeightedPairGraph, build_wpg
from .stp import (
    LogicalMatrix,
    boolean_to_algebraic,
    decode_bits,
    encode_bits,
    stp,
    stp_logical,
    tabulate,
)

__version__ = "0.1.0"

__all__ = [
    "Bcn",
    "DoomedSet",
    "LogicalMatrix",
    "NetworkFormatError",
    "NoConsistentStateError",
    "NotHomingError",
    "ObserverDfa",
    "ReconReport",
    "StatePair",
    "TrackingTrace",
    "TransitionGraph",
    "WeightedPairGraph",
    "boolean_to_algebraic",
    "build_observer_dfa",
    "build_wpg",
    "decode_bits",
    "determine_current_state",
    "dfa_dot",
    "encode_bits",
    "example_5state",
    "family_cycle_stayer",
    "family_stay_stepper",
    "is_fornasini_reconstructible",
    "is_reconstructible",
    "is_reconstructible_via_dfa",
    "oracle_fornasini",
    "oracle_reconstructible",
    "parse_network",
    "random_bcn",
    "sat_reduction_bn",
    "serialize_network",
    "stg_dot",
    "stp",
    "stp_logical",
    "tabulate",
    "verify_homing",
    "wpg_dot",
]
