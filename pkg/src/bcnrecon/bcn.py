"""Boolean control networks in matrix form and their step semantics."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .stp import LogicalMatrix

__all__ = ["Bcn", "TransitionGraph"]


@dataclass(frozen=True)
class Bcn:
    """An input-state-output network over basis-vector spaces.

    The dynamics are ``x(t+1) = transition * u(t) * x(t)`` and
    ``y(t) = readout * x(t)`` with semi-tensor products, which for the
    column-selector matrices used here boils down to index lookups.
    States, inputs and outputs are 1-based basis indices.  The transition
    matrix has one column per (input, state) pair in input-major order;
    the readout matrix has one column per state.
    """

    n_states: int
    n_inputs: int
    n_outputs: int
    transition: LogicalMatrix
    readout: LogicalMatrix

    def __post_init__(self) -> None:
        if min(self.n_states, self.n_inputs, self.n_outputs) < 1:
            raise ValueError("state, input and output counts must be positive")
        if self.transition.rows != self.n_states:
            raise ValueError(
                f"transition matrix has {self.transition.rows} rows, "
                f"expected {self.n_states}"
            )
        if self.transition.cols != self.n_states * self.n_inputs:
            raise ValueError(
                f"transition matrix has {self.transition.cols} columns, "
                f"expected states*inputs = {self.n_states * self.n_inputs}"
            )
        if self.readout.rows != self.n_outputs:
            raise ValueError(
                f"readout matrix has {self.readout.rows} rows, "
                f"expected {self.n_outputs}"
            )
        if self.readout.cols != self.n_states:
            raise ValueError(
                f"readout matrix has {self.readout.cols} columns, "
                f"expected {self.n_states}"
            )

    def _check_state(self, state: int) -> None:
        if not 1 <= state <= self.n_states:
            raise ValueError(f"state {state} outside [1, {self.n_states}]")

    def _check_input(self, control: int) -> None:
        if not 1 <= control <= self.n_inputs:
            raise ValueError(f"input {control} outside [1, {self.n_inputs}]")

    def step(self, state: int, control: int) -> int:
        """Successor state for one input letter."""
        self._check_state(state)
        self._check_input(control)
        return self.transition.col_index[(control - 1) * self.n_states + state - 1]

    def output(self, state: int) -> int:
        """Output produced by a state."""
        self._check_state(state)
        return self.readout.col_index[state - 1]

    def state_trajectory(self, start: int, controls: Sequence[int]) -> tuple[int, ...]:
        """States visited under an input word, starting word included.

        The result has one more letter than ``controls``; the empty input
        word yields just ``(start,)``.
        """
        self._check_state(start)
        states = [start]
        for u in controls:
            states.append(self.step(states[-1], u))
        return tuple(states)

    def output_trajectory(self, start: int, controls: Sequence[int]) -> tuple[int, ...]:
        """Outputs along :meth:`state_trajectory`, pointwise."""
        return tuple(self.output(x) for x in self.state_trajectory(start, controls))

    def state_transition_graph(self) -> "TransitionGraph":
        """Graph on (state, output) pairs with input-set edge weights."""
        edges: dict[tuple[int, int], set[int]] = {}
        for x in range(1, self.n_states + 1):
            for u in range(1, self.n_inputs + 1):
                edges.setdefault((x, self.step(x, u)), set()).add(u)
        return TransitionGraph(
            n_inputs=self.n_inputs,
            vertices=tuple((x, self.output(x)) for x in range(1, self.n_states + 1)),
            edges={e: frozenset(us) for e, us in sorted(edges.items())},
        )


@dataclass(frozen=True)
class TransitionGraph:
    """State transition graph of a network.

    Vertices are (state, output) pairs; the edge (x, x') carries exactly
    the inputs driving x to x', so the out-edge weights of every vertex
    partition the input alphabet.
    """

    n_inputs: int
    vertices: tuple[tuple[int, int], ...]
    edges: dict[tuple[int, int], frozenset[int]]
