"""Deterministic DOT renderers for the analysis graphs.

Output is byte-identical across runs for the same input: vertices are
emitted in sorted order and edge labels list inputs in ascending order.
"""

from __future__ import annotations

from .bcn import TransitionGraph
from .observer import ObserverDfa
from .pair_graph import WeightedPairGraph

__all__ = ["wpg_dot", "dfa_dot", "stg_dot"]


def _label(inputs) -> str:
    return ",".join(str(u) for u in sorted(inputs))


def wpg_dot(wpg: WeightedPairGraph) -> str:
    """Pair graph as DOT; vertices labeled "lo,hi", edges by their inputs."""
    lines = ["digraph wpg {", "  rankdir=LR;"]
    for v in wpg.vertices:
        lines.append(f'  "{v}";')
    for (src, dst), weight in wpg.edges.items():
        lines.append(f'  "{src}" -> "{dst}" [label="{_label(weight)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def dfa_dot(dfa: ObserverDfa) -> str:
    """Observer automaton as DOT; states labeled by their sorted pairs."""
    lines = [
        "digraph observer {",
        "  rankdir=LR;",
        "  node [shape=box];",
        "  __start [shape=point];",
    ]
    for i, state in enumerate(dfa.states):
        label = " ".join(str(v) for v in sorted(state)) if state else "{}"
        lines.append(f'  s{i} [label="{label}"];')
    lines.append("  __start -> s0;")
    for i in range(len(dfa.states)):
        grouped: dict[int, list[int]] = {}
        for u in range(1, dfa.n_inputs + 1):
            target = dfa.transitions.get((i, u))
            if target is not None:
                grouped.setdefault(target, []).append(u)
        for target, inputs in sorted(grouped.items(), key=lambda kv: kv[1][0]):
            lines.append(f'  s{i} -> s{target} [label="{_label(inputs)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def stg_dot(graph: TransitionGraph) -> str:
    """State transition graph as DOT; vertices labeled "state/output"."""
    lines = ["digraph stg {", "  rankdir=LR;"]
    output_of = dict(graph.vertices)
    for x, y in graph.vertices:
        lines.append(f'  "{x}/{y}";')
    for src, dst in sorted(graph.edges):
        label = _label(graph.edges[(src, dst)])
        lines.append(
            f'  "{src}/{output_of[src]}" -> "{dst}/{output_of[dst]}" '
            f'[label="{label}"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
