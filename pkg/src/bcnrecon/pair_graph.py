"""Weighted pair graphs over indistinguishable state pairs.

The vertex set collects every unordered pair of distinct states that
produce the same output.  An edge carries the set of inputs driving one
pair onto another; inputs that merge the pair or split its outputs
contribute nothing, so the out-edge weights of a vertex are pairwise
disjoint and the weight-union outdegree is at most the alphabet size.

Two structural questions about this graph settle reconstructibility: a
network has a homing input sequence exactly when no subgraph keeps every
input alive at every vertex, and every long enough word is homing
exactly when the graph is acyclic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping

from .bcn import Bcn

__all__ = ["StatePair", "WeightedPairGraph", "DoomedSet", "build_wpg"]


@dataclass(frozen=True, order=True)
class StatePair:
    """Unordered pair of distinct states, stored with lo < hi."""

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if not 1 <= self.lo < self.hi:
            raise ValueError(f"need 1 <= lo < hi, got ({self.lo}, {self.hi})")

    @classmethod
    def of(cls, a: int, b: int) -> "StatePair":
        if a == b:
            raise ValueError(f"states of a pair must differ, got {a} twice")
        return cls(min(a, b), max(a, b))

    def __iter__(self):
        yield self.lo
        yield self.hi

    def __str__(self) -> str:
        return f"{self.lo},{self.hi}"


DoomedSet = frozenset[StatePair]

_WHITE, _GRAY, _BLACK = 0, 1, 2


class WeightedPairGraph:
    """Directed graph on state pairs with input-set edge weights.

    Vertices are kept in sorted order and edges keyed by (source, target)
    in sorted order, so iteration and rendering are reproducible.  The
    constructor rejects empty weights, out-of-range inputs, unknown
    endpoints and overlapping weights on edges out of one vertex.
    """

    def __init__(self, vertices: Iterable[StatePair],
                 edges: Mapping[tuple[StatePair, StatePair], Iterable[int]],
                 n_inputs: int) -> None:
        if n_inputs < 1:
            raise ValueError(f"alphabet size must be positive, got {n_inputs}")
        self.n_inputs = int(n_inputs)
        self.vertices: tuple[StatePair, ...] = tuple(sorted(set(vertices)))
        known = set(self.vertices)
        cleaned = {}
        for (src, dst), weight in edges.items():
            w = frozenset(weight)
            if not w:
                raise ValueError(f"edge {src} -> {dst} has an empty weight")
            if src not in known or dst not in known:
                raise ValueError(f"edge {src} -> {dst} leaves the vertex set")
            bad = [u for u in w if not 1 <= u <= self.n_inputs]
            if bad:
                raise ValueError(
                    f"edge {src} -> {dst} carries input {bad[0]} outside "
                    f"[1, {self.n_inputs}]"
                )
            cleaned[(src, dst)] = w
        self.edges: dict[tuple[StatePair, StatePair], frozenset[int]] = dict(
            sorted(cleaned.items())
        )
        self._succ: dict[StatePair, dict[StatePair, frozenset[int]]] = {
            v: {} for v in self.vertices
        }
        self._pred: dict[StatePair, list[StatePair]] = {v: [] for v in self.vertices}
        for (src, dst), w in self.edges.items():
            self._succ[src][dst] = w
            self._pred[dst].append(src)
        for v in self.vertices:
            weights = list(self._succ[v].values())
            total = sum(len(w) for w in weights)
            union = frozenset().union(*weights) if weights else frozenset()
            if len(union) != total:
                raise ValueError(f"overlapping out-edge weights at vertex {v}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedPairGraph):
            return NotImplemented
        return (self.n_inputs == other.n_inputs
                and self.vertices == other.vertices
                and self.edges == other.edges)

    def __repr__(self) -> str:
        return (f"WeightedPairGraph({len(self.vertices)} vertices, "
                f"{len(self.edges)} edges, {self.n_inputs} inputs)")

    def successors(self, v: StatePair) -> Mapping[StatePair, frozenset[int]]:
        self._check_vertex(v)
        return self._succ[v]

    def predecessors(self, v: StatePair) -> tuple[StatePair, ...]:
        self._check_vertex(v)
        return tuple(sorted(self._pred[v]))

    def _check_vertex(self, v: StatePair) -> None:
        if v not in self._succ:
            raise ValueError(f"unknown vertex {v}")

    def outdegree(self, v: StatePair) -> int:
        """Size of the union of out-edge weights (equals the sum, as the
        weights are disjoint)."""
        self._check_vertex(v)
        return sum(len(w) for w in self._succ[v].values())

    def doomed_set(self) -> DoomedSet:
        """Vertices missing some input, plus everything with a path into them.

        Computed by one reverse breadth-first sweep seeded on the
        low-outdegree vertices.
        """
        doomed = {v for v in self.vertices if self.outdegree(v) < self.n_inputs}
        queue = deque(sorted(doomed))
        while queue:
            v = queue.popleft()
            for p in self.predecessors(v):
                if p not in doomed:
                    doomed.add(p)
                    queue.append(p)
        return frozenset(doomed)

    def complete_subgraph(self) -> frozenset[StatePair] | None:
        """Vertex set generating a complete subgraph, or None.

        The complement of the doomed set is the maximal such set: inside
        it every vertex keeps all inputs available.  None means no
        nonempty complete subgraph exists.
        """
        survivors = set(self.vertices) - self.doomed_set()
        return frozenset(survivors) if survivors else None

    def has_complete_subgraph(self) -> bool:
        return self.complete_subgraph() is not None

    def find_cycle(self) -> tuple[StatePair, ...] | None:
        """First cycle under deterministic order, or None if acyclic.

        Depth-first search with three-color marking; the returned vertex
        sequence starts and ends at the same vertex (a self-loop comes
        back as a length-2 sequence).
        """
        color = {v: _WHITE for v in self.vertices}
        for root in self.vertices:
            if color[root] != _WHITE:
                continue
            color[root] = _GRAY
            path = [root]
            stack = [iter(sorted(self._succ[root]))]
            while stack:
                advanced = False
                for w in stack[-1]:
                    if color[w] == _GRAY:
                        return tuple(path[path.index(w):]) + (w,)
                    if color[w] == _WHITE:
                        color[w] = _GRAY
                        path.append(w)
                        stack.append(iter(sorted(self._succ[w])))
                        advanced = True
                        break
                if not advanced:
                    color[path.pop()] = _BLACK
                    stack.pop()
        return None

    def has_cycle(self) -> bool:
        return self.find_cycle() is not None

    def is_strongly_connected(self) -> bool:
        """Mutual reachability of all vertices; rejects the empty graph."""
        if not self.vertices:
            raise ValueError("connectivity is undefined for an empty graph")
        return self._reaches_all(forward=True) and self._reaches_all(forward=False)

    def _reaches_all(self, forward: bool) -> bool:
        start = self.vertices[0]
        seen = {start}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            nbrs = self._succ[v].keys() if forward else self._pred[v]
            for w in nbrs:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == len(self.vertices)

    def longest_path_length(self) -> int:
        """Edge count of a longest path; requires an acyclic graph."""
        indeg = {v: 0 for v in self.vertices}
        for _, dst in self.edges:
            indeg[dst] += 1
        dist = {v: 0 for v in self.vertices}
        queue = deque(v for v in self.vertices if indeg[v] == 0)
        done = 0
        while queue:
            v = queue.popleft()
            done += 1
            for w in self._succ[v]:
                dist[w] = max(dist[w], dist[v] + 1)
                indeg[w] -= 1
                if indeg[w] == 0:
                    queue.append(w)
        if done < len(self.vertices):
            raise ValueError("longest path is undefined on a cyclic graph")
        return max(dist.values(), default=0)


def build_wpg(bcn: Bcn) -> WeightedPairGraph:
    """Weighted pair graph of a network.

    Vertices are the unordered pairs of distinct states with equal
    output.  For each vertex and input, the pair of successor states
    yields an edge exactly when the successors are distinct and again
    share an output; the input joins that edge's weight.
    """
    verts = [
        StatePair(a, b)
        for a in range(1, bcn.n_states + 1)
        for b in range(a + 1, bcn.n_states + 1)
        if bcn.output(a) == bcn.output(b)
    ]
    known = set(verts)
    edges: dict[tuple[StatePair, StatePair], set[int]] = {}
    for v in verts:
        for u in range(1, bcn.n_inputs + 1):
            ta = bcn.step(v.lo, u)
            tb = bcn.step(v.hi, u)
            if ta == tb:
                continue
            target = StatePair.of(ta, tb)
            if target not in known:
                continue
            edges.setdefault((v, target), set()).add(u)
    return WeightedPairGraph(verts, edges, bcn.n_inputs)
