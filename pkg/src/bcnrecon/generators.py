"""Constructors for the bundled example networks and seeded random ones."""

from __future__ import annotations

import itertools
import random
from typing import Sequence

from .bcn import Bcn
from .stp import LogicalMatrix, boolean_to_algebraic, encode_bits

__all__ = [
    "example_5state",
    "family_cycle_stayer",
    "family_stay_stepper",
    "sat_reduction_bn",
    "random_bcn",
]


def example_5state() -> Bcn:
    """Bundled five-state network with two inputs and two outputs.

    Small enough to analyze by hand, yet it has a nontrivial pair graph
    (a two-edge chain) and a shortest homing word of length two, so it
    doubles as the worked sample in the docs and tests.
    """
    return Bcn(
        n_states=5,
        n_inputs=2,
        n_outputs=2,
        transition=LogicalMatrix(5, (1, 4, 3, 5, 4, 2, 3, 3, 4, 4)),
        readout=LogicalMatrix(2, (1, 1, 2, 1, 2)),
    )


def family_cycle_stayer(n: int) -> Bcn:
    """Constant-output family: input j sends every state to j, except
    state j itself, which moves one step around the n-cycle.

    Defined for n >= 3 with n states and n inputs.  Every state pair
    stays confusable under exactly two inputs, so the pair graph is as
    large as possible (n(n-1)/2 vertices) while every vertex has
    weight-union outdegree 2.
    """
    if n < 3:
        raise ValueError(f"family needs at least 3 states, got {n}")
    cols = []
    for j in range(1, n + 1):
        for i in range(1, n + 1):
            cols.append(j % n + 1 if i == j else j)
    return Bcn(n, n, 1, LogicalMatrix(n, tuple(cols)), LogicalMatrix(1, (1,) * n))


def family_stay_stepper(n: int) -> Bcn:
    """Constant-output family: every state holds still unless the input
    names it, in which case it moves one step around the n-cycle.

    Defined for n >= 3 with n states and n inputs.  Its observer
    automaton realizes one state per subset of at least two states, which
    makes it the worst case for subset construction.
    """
    if n < 3:
        raise ValueError(f"family needs at least 3 states, got {n}")
    cols = []
    for j in range(1, n + 1):
        for i in range(1, n + 1):
            cols.append(i % n + 1 if i == j else i)
    return Bcn(n, n, 1, LogicalMatrix(n, tuple(cols)), LogicalMatrix(1, (1,) * n))


def sat_reduction_bn(g_bits: Sequence[int]) -> Bcn:
    """Autonomous counter network whose output is masked by a Boolean g.

    ``g_bits`` lists g's values over the last n-1 state bits in basis
    order (all-true assignment first); its length, a power of two, fixes
    n.  Each state bit flips when all later bits are true and the last
    bit always flips, so the state transition graph is one cycle through
    all 2^n states; the output is the first bit ANDed with g of the rest.
    The network is reconstructible exactly when g is satisfiable.
    """
    size = len(g_bits)
    if size < 2 or size & (size - 1):
        raise ValueError(f"g_bits length must be a power of two >= 2, got {size}")
    for b in g_bits:
        if b not in (0, 1):
            raise ValueError(f"g_bits must contain 0/1, got {b!r}")
    n = size.bit_length()
    f_table = {}
    h_table = {}
    for x in itertools.product((0, 1), repeat=n):
        nxt = []
        for k in range(n - 1):
            tail = 1
            for bit in x[k + 1:]:
                tail &= bit
            nxt.append(x[k] ^ tail)
        nxt.append(x[n - 1] ^ 1)
        f_table[x] = tuple(nxt)
        h_table[x] = (x[0] & g_bits[encode_bits(x[1:]) - 1],)
    transition, readout = boolean_to_algebraic(f_table, h_table)
    return Bcn(2**n, 1, 2, transition, readout)


def random_bcn(n_states: int, n_inputs: int, n_outputs: int, seed: int) -> Bcn:
    """Uniformly random network from a deterministic seed."""
    if min(n_states, n_inputs, n_outputs) < 1:
        raise ValueError("state, input and output counts must be positive")
    rng = random.Random(seed)
    l_cols = tuple(rng.randint(1, n_states) for _ in range(n_states * n_inputs))
    h_cols = tuple(rng.randint(1, n_outputs) for _ in range(n_states))
    return Bcn(
        n_states,
        n_inputs,
        n_outputs,
        LogicalMatrix(n_states, l_cols),
        LogicalMatrix(n_outputs, h_cols),
    )
