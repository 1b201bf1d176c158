"""Observer automaton over subsets of pair-graph vertices.

A word is accepted exactly when some pair of distinct states is still
indistinguishable after feeding it, so the words that fall off a missing
transition are precisely the homing input sequences.  The automaton is a
partial DFA produced by subset construction from the weighted pair
graph; every state is accepting and the automaton is complete exactly
when no homing sequence exists.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Mapping, Sequence

from .pair_graph import StatePair, WeightedPairGraph

__all__ = ["ObserverDfa", "build_observer_dfa"]


class ObserverDfa:
    """Partial DFA whose states are sets of pair-graph vertices.

    State 0 is the initial state, the full vertex set of the pair graph
    (empty exactly when the readout never repeats an output).  Every
    other state is a nonempty set; ``transitions`` maps (state index,
    input letter) to a state index and is partial.
    """

    def __init__(self, states: Iterable[frozenset[StatePair]],
                 transitions: Mapping[tuple[int, int], int],
                 n_inputs: int) -> None:
        if n_inputs < 1:
            raise ValueError(f"alphabet size must be positive, got {n_inputs}")
        self.n_inputs = int(n_inputs)
        self.states: tuple[frozenset[StatePair], ...] = tuple(
            frozenset(s) for s in states
        )
        if not self.states:
            raise ValueError("an observer automaton needs an initial state")
        if len(set(self.states)) != len(self.states):
            raise ValueError("duplicate automaton states")
        for i, s in enumerate(self.states[1:], start=1):
            if not s:
                raise ValueError(f"state {i} is empty; only state 0 may be")
        self.transitions: dict[tuple[int, int], int] = dict(transitions)
        for (si, u), ti in self.transitions.items():
            if not (0 <= si < len(self.states) and 0 <= ti < len(self.states)):
                raise ValueError(f"transition ({si}, {u}) -> {ti} out of range")
            if not 1 <= u <= self.n_inputs:
                raise ValueError(f"transition letter {u} outside [1, {self.n_inputs}]")

    @property
    def initial(self) -> frozenset[StatePair]:
        return self.states[0]

    def __repr__(self) -> str:
        return (f"ObserverDfa({len(self.states)} states, "
                f"{len(self.transitions)} transitions, {self.n_inputs} inputs)")

    def successor(self, state_index: int, letter: int) -> int | None:
        """Target state index, or None where the automaton is undefined."""
        if not 1 <= letter <= self.n_inputs:
            raise ValueError(f"letter {letter} outside [1, {self.n_inputs}]")
        return self.transitions.get((state_index, letter))

    def is_complete(self) -> bool:
        """Whether a transition is defined at every (state, letter) pair."""
        return len(self.transitions) == len(self.states) * self.n_inputs

    def accepts(self, word: Sequence[int]) -> bool:
        """Whether the word runs on defined transitions into a nonempty state.

        The empty word is accepted exactly when the initial state is
        nonempty.
        """
        current = 0
        for letter in word:
            nxt = self.successor(current, letter)
            if nxt is None:
                return False
            current = nxt
        return bool(self.states[current])

    def shortest_escaping_word(self) -> tuple[int, ...] | None:
        """Length-lexicographically smallest rejected word.

        None when the automaton is complete (no rejected word exists);
        the empty word when the initial state is already empty.  The
        breadth-first scan tries letters in ascending order, so the
        result is never longer than the number of states.
        """
        if not self.states[0]:
            return ()
        if self.is_complete():
            return None
        seen = {0}
        queue: deque[tuple[int, tuple[int, ...]]] = deque([(0, ())])
        while queue:
            si, word = queue.popleft()
            for u in range(1, self.n_inputs + 1):
                ti = self.transitions.get((si, u))
                if ti is None:
                    return word + (u,)
                if ti not in seen:
                    seen.add(ti)
                    queue.append((ti, word + (u,)))
        raise AssertionError("incomplete automaton must have an escaping word")


def build_observer_dfa(wpg: WeightedPairGraph) -> ObserverDfa:
    """Subset construction over the weighted pair graph.

    Starting from the full vertex set, the successor of a state under a
    letter collects every vertex reachable from the state by an edge
    whose weight contains that letter; an empty successor leaves the
    transition undefined.  States are deduplicated as sets and numbered
    in breadth-first discovery order (letters tried in ascending order),
    which makes the construction reproducible.
    """
    initial = frozenset(wpg.vertices)
    states = [initial]
    index = {initial: 0}
    transitions: dict[tuple[int, int], int] = {}
    queue = deque([0])
    while queue:
        si = queue.popleft()
        for u in range(1, wpg.n_inputs + 1):
            successor = {
                target
                for vertex in states[si]
                for target, weight in wpg.successors(vertex).items()
                if u in weight
            }
            if not successor:
                continue
            frozen = frozenset(successor)
            ti = index.get(frozen)
            if ti is None:
                ti = len(states)
                index[frozen] = ti
                states.append(frozen)
                queue.append(ti)
            transitions[(si, u)] = ti
    return ObserverDfa(states, transitions, wpg.n_inputs)
