"""Reconstructibility deciders, homing checks, state tracking, and oracles.

Two notions are decided.  A network is reconstructible when at least one
homing input sequence exists (some word whose outputs pin down the
current state regardless of the initial state); it is reconstructible in
the Fornasini sense when every long enough word is homing.  The fast
deciders read both answers off the weighted pair graph; the oracles
re-derive them from raw step/output semantics and exist so the graph
machinery can be checked against an independent route.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .bcn import Bcn
from .observer import build_observer_dfa
from .pair_graph import StatePair, build_wpg

__all__ = [
    "ReconReport",
    "TrackingTrace",
    "NoConsistentStateError",
    "NotHomingError",
    "is_reconstructible",
    "is_reconstructible_via_dfa",
    "is_fornasini_reconstructible",
    "verify_homing",
    "determine_current_state",
    "oracle_reconstructible",
    "oracle_fornasini",
]


class NoConsistentStateError(ValueError):
    """The output record matches no state of the network."""


class NotHomingError(ValueError):
    """The input word leaves more than one candidate current state."""


@dataclass(frozen=True)
class ReconReport:
    """Decision plus a machine-checkable witness.

    Exactly one witness field is populated: the shortest homing word for
    a positive existential verdict, the complete subgraph's vertex set
    for a negative one, a pair-graph cycle for a negative Fornasini
    verdict, and the sufficient word length (horizon) for a positive
    Fornasini verdict.
    """

    reconstructible: bool
    method: str
    homing_word: tuple[int, ...] | None = None
    complete_subgraph: frozenset[StatePair] | None = None
    cycle: tuple[StatePair, ...] | None = None
    horizon: int | None = None


@dataclass(frozen=True)
class TrackingTrace:
    """Candidate state sets per time step, ending in the tracked state."""

    candidates: tuple[tuple[int, ...], ...]
    final_state: int


def is_reconstructible(bcn: Bcn) -> ReconReport:
    """Decide whether some homing input sequence exists.

    The network is reconstructible exactly when its weighted pair graph
    has no complete subgraph, i.e. when the doomed set swallows every
    vertex.  A negative verdict carries the complete subgraph; a positive
    verdict carries the shortest homing word, read off the observer
    automaton.
    """
    wpg = build_wpg(bcn)
    witness = wpg.complete_subgraph()
    if witness is not None:
        return ReconReport(False, "wpg-complete-subgraph", complete_subgraph=witness)
    word = build_observer_dfa(wpg).shortest_escaping_word()
    assert word is not None, "no complete subgraph implies an incomplete observer"
    return ReconReport(True, "wpg-complete-subgraph", homing_word=word)


def is_reconstructible_via_dfa(bcn: Bcn) -> bool:
    """Same decision through the observer automaton's completeness."""
    return not build_observer_dfa(build_wpg(bcn)).is_complete()


def is_fornasini_reconstructible(bcn: Bcn) -> ReconReport:
    """Decide whether every long enough input word is homing.

    Holds exactly when the weighted pair graph is acyclic.  A positive
    verdict reports the horizon (longest pair-graph path plus one, or 0
    for an empty graph): every input word of that length is homing.  A
    negative verdict carries a witness cycle.
    """
    wpg = build_wpg(bcn)
    cycle = wpg.find_cycle()
    if cycle is not None:
        return ReconReport(False, "wpg-cycle", cycle=cycle)
    horizon = wpg.longest_path_length() + 1 if wpg.vertices else 0
    return ReconReport(True, "wpg-cycle", horizon=horizon)


def verify_homing(bcn: Bcn, word: Sequence[int]) -> bool:
    """Check the defining property of a homing word directly.

    For every pair of distinct initial states, equal output trajectories
    under the word must force equal final states.
    """
    word = tuple(word)
    for a in range(1, bcn.n_states + 1):
        for b in range(a + 1, bcn.n_states + 1):
            if (bcn.output_trajectory(a, word) == bcn.output_trajectory(b, word)
                    and bcn.state_trajectory(a, word)[-1]
                    != bcn.state_trajectory(b, word)[-1]):
                return False
    return True


def determine_current_state(bcn: Bcn, inputs: Sequence[int],
                            outputs: Sequence[int]) -> tuple[int, TrackingTrace]:
    """Track the candidate state set along an input/output record.

    ``outputs`` must be one longer than ``inputs``.  Candidates start as
    the states producing the first output and are advanced and filtered
    one input at a time; the record must end with exactly one candidate,
    which is returned with the whole trace.  An empty input word reduces
    to the readout preimage of the single output, which must be unique.

    Raises :class:`NoConsistentStateError` when some step leaves no
    candidates and :class:`NotHomingError` when several remain at the
    end, so a caller violating the homing precondition is caught.
    """
    inputs = tuple(inputs)
    outputs = tuple(outputs)
    if len(outputs) != len(inputs) + 1:
        raise ValueError(
            f"need {len(inputs) + 1} outputs for {len(inputs)} inputs, "
            f"got {len(outputs)}"
        )
    for y in outputs:
        if not 1 <= y <= bcn.n_outputs:
            raise ValueError(f"output {y} outside [1, {bcn.n_outputs}]")
    current = [x for x in range(1, bcn.n_states + 1) if bcn.output(x) == outputs[0]]
    if not current:
        raise NoConsistentStateError(
            f"no consistent state: no state produces output {outputs[0]}"
        )
    trace = [tuple(current)]
    for t, u in enumerate(inputs):
        advanced = {bcn.step(x, u) for x in current}
        current = sorted(x for x in advanced if bcn.output(x) == outputs[t + 1])
        if not current:
            raise NoConsistentStateError(
                f"no consistent state at step {t + 1}: output {outputs[t + 1]} "
                "matches no successor"
            )
        trace.append(tuple(current))
    if len(current) > 1:
        raise NotHomingError(
            "input word is not homing for this output record: candidates "
            + ", ".join(map(str, current))
        )
    return current[0], TrackingTrace(tuple(trace), current[0])


def _indistinct_pairs(bcn: Bcn) -> frozenset[tuple[int, int]]:
    return frozenset(
        (a, b)
        for a in range(1, bcn.n_states + 1)
        for b in range(a + 1, bcn.n_states + 1)
        if bcn.output(a) == bcn.output(b)
    )


def _pair_step(bcn: Bcn, pairs, u: int) -> frozenset[tuple[int, int]]:
    advanced = set()
    for a, b in pairs:
        ta = bcn.step(a, u)
        tb = bcn.step(b, u)
        if ta != tb and bcn.output(ta) == bcn.output(tb):
            advanced.add((min(ta, tb), max(ta, tb)))
    return frozenset(advanced)


def oracle_reconstructible(bcn: Bcn) -> bool:
    """Exact brute-force decision of the existential notion.

    Explores, breadth-first over input words, the set of state pairs
    still indistinguishable and separated after each word, working on raw
    states via step/output only.  Distinct pair sets are memoized, so the
    walk over the finite lattice terminates; the network is
    reconstructible exactly when some reachable pair set is empty.
    Intended for small instances.
    """
    start = _indistinct_pairs(bcn)
    seen = {start}
    queue = deque([start])
    while queue:
        pairs = queue.popleft()
        if not pairs:
            return True
        for u in range(1, bcn.n_inputs + 1):
            advanced = _pair_step(bcn, pairs, u)
            if advanced not in seen:
                seen.add(advanced)
                queue.append(advanced)
    return False


def oracle_fornasini(bcn: Bcn) -> bool:
    """Exact brute-force decision of the Fornasini notion.

    Walks sets of indistinguishable separated state pairs forward for as
    many steps as there are unordered state pairs.  If any pair survives
    that long, some configuration repeated, so arbitrarily long
    confusing words exist and the notion fails; otherwise every word of
    that length is homing.  Intended for small instances.
    """
    bound = (bcn.n_states * bcn.n_states - bcn.n_states) // 2
    alive = _indistinct_pairs(bcn)
    for _ in range(bound):
        if not alive:
            break
        alive = frozenset().union(
            *(_pair_step(bcn, alive, u) for u in range(1, bcn.n_inputs + 1))
        )
    return not alive
