"""Graph-side criteria tied to the vector classifiers.

Every edge of a simple connected graph has an incidence vector: the 0/1
vector over the (ordered) vertex set with ones at the two endpoints.  The
family of all edge vectors is almost-Farkas-related exactly when every two
vertex-disjoint simple odd cycles cover all vertices, and weakly so
exactly when every two vertex-disjoint simple odd cycles are joined by an
edge (the odd-cycle condition).  `cross_validate` checks the graph-side
verdicts against the vector classifiers on the edge family, which is the
empirical anchor for the incidence-vector reading.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .classify import is_afr, is_wfr
from .errors import (
    DisconnectedGraphError,
    InternalInconsistency,
    LimitExceeded,
)
from .lattice import VectorFamily
from .limits import DEFAULT_LIMITS, Limits


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; vertex order is part of the structure."""

    vertices: tuple[str, ...]
    edges: tuple[tuple[int, int], ...]  # index pairs i < j, sorted

    def __post_init__(self):
        vertices = tuple(str(v) for v in self.vertices)
        if len(set(vertices)) != len(vertices):
            raise ValueError("duplicate vertex labels")
        seen = set()
        edges = []
        for i, j in self.edges:
            if i == j:
                raise ValueError(f"self-loop at vertex {vertices[i]!r}")
            if not (0 <= i < len(vertices) and 0 <= j < len(vertices)):
                raise ValueError(f"edge ({i}, {j}) references unknown vertices")
            key = (min(i, j), max(i, j))
            if key in seen:
                raise ValueError(
                    f"duplicate edge {vertices[key[0]]!r} -- {vertices[key[1]]!r}"
                )
            seen.add(key)
            edges.append(key)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", tuple(sorted(edges)))

    @classmethod
    def from_edges(cls, pairs: Iterable[tuple[str, str]],
                   vertices: Optional[Sequence[str]] = None) -> "Graph":
        """Build from label pairs; vertex order is first appearance unless given."""
        order: list[str] = list(vertices) if vertices is not None else []
        index = {v: i for i, v in enumerate(order)}
        edges = []
        for a, b in pairs:
            for label in (a, b):
                if label not in index:
                    if vertices is not None:
                        raise ValueError(f"edge endpoint {label!r} not declared")
                    index[label] = len(order)
                    order.append(label)
            edges.append((index[a], index[b]))
        return cls(tuple(order), tuple(edges))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in self.vertices]
        for i, j in self.edges:
            nbrs[i].append(j)
            nbrs[j].append(i)
        return tuple(tuple(sorted(ns)) for ns in nbrs)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: k for k, e in enumerate(self.edges)}

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edge_index

    def index_of(self, label: str) -> int:
        return self.vertices.index(label)

    def edge_labels(self) -> list[tuple[str, str]]:
        return [(self.vertices[i], self.vertices[j]) for i, j in self.edges]

    def is_connected(self) -> bool:
        if not self.vertices:
            return False
        seen = {0}
        frontier = [0]
        while frontier:
            v = frontier.pop()
            for u in self.adjacency[v]:
                if u not in seen:
                    seen.add(u)
                    frontier.append(u)
        return len(seen) == len(self.vertices)


@dataclass(frozen=True)
class OddCycle:
    """A simple odd cycle, stored in canonical orientation.

    The sequence starts at the cycle's smallest-index vertex and proceeds
    toward its smaller neighbour, which is the lexicographically smallest
    rotation/reflection in vertex-order indices.
    """

    vertex_sequence: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.vertex_sequence)


@dataclass(frozen=True)
class GraphVerdict:
    almost_farkas: Optional[bool] = None
    weakly_farkas: Optional[bool] = None
    witness: Optional[tuple[OddCycle, OddCycle, str]] = None


def _require_connected(g: Graph):
    if not g.is_connected():
        raise DisconnectedGraphError("the graph must be connected")


def edge_vectors(g: Graph) -> VectorFamily:
    """Incidence vector family, one 0/1 column per edge in canonical edge order."""
    _require_connected(g)
    if not g.edges:
        raise ValueError("the graph must have at least one edge")
    n = len(g.vertices)
    vecs = []
    for i, j in g.edges:
        v = [0] * n
        v[i] = 1
        v[j] = 1
        vecs.append(tuple(v))
    return VectorFamily(tuple(vecs))


def _odd_cycles_idx(g: Graph, limits: Limits) -> list[tuple[int, ...]]:
    if len(g.vertices) > limits.odd_cycle_max_vertices:
        raise LimitExceeded(
            f"{len(g.vertices)} vertices exceed the cycle-enumeration limit "
            f"{limits.odd_cycle_max_vertices}"
        )
    adj = g.adjacency
    cycles: list[tuple[int, ...]] = []
    path: list[int] = []
    on_path: set[int] = set()

    def extend(v: int, start: int):
        for u in adj[v]:
            if u == start and len(path) >= 3:
                if path[1] < path[-1] and len(path) % 2 == 1:
                    cycles.append(tuple(path))
            elif u > start and u not in on_path:
                path.append(u)
                on_path.add(u)
                extend(u, start)
                path.pop()
                on_path.remove(u)

    for start in range(len(g.vertices)):
        path = [start]
        on_path = {start}
        extend(start, start)
    return sorted(cycles, key=lambda c: (len(c), c))


def _as_labels(g: Graph, cycle: tuple[int, ...]) -> OddCycle:
    return OddCycle(tuple(g.vertices[i] for i in cycle))


def enumerate_odd_cycles(g: Graph, limits: Limits = DEFAULT_LIMITS) -> list[OddCycle]:
    """All simple odd cycles, each once, canonically oriented and ordered."""
    return [_as_labels(g, c) for c in _odd_cycles_idx(g, limits)]


def _disjoint_pairs(cycles: list[tuple[int, ...]]):
    for c1, c2 in combinations(cycles, 2):
        if not set(c1) & set(c2):
            yield c1, c2


def is_almost_farkas_graph(g: Graph, limits: Limits = DEFAULT_LIMITS) -> GraphVerdict:
    """True iff every two vertex-disjoint simple odd cycles cover all vertices."""
    _require_connected(g)
    cycles = _odd_cycles_idx(g, limits)
    everything = set(range(len(g.vertices)))
    for c1, c2 in _disjoint_pairs(cycles):
        uncovered = everything - set(c1) - set(c2)
        if uncovered:
            missing = g.vertices[min(uncovered)]
            return GraphVerdict(
                almost_farkas=False,
                witness=(
                    _as_labels(g, c1),
                    _as_labels(g, c2),
                    f"vertex {missing!r} is covered by neither cycle",
                ),
            )
    return GraphVerdict(almost_farkas=True)


def is_weakly_farkas_graph(g: Graph, limits: Limits = DEFAULT_LIMITS) -> GraphVerdict:
    """True iff every two vertex-disjoint simple odd cycles are joined by an edge."""
    _require_connected(g)
    cycles = _odd_cycles_idx(g, limits)
    for c1, c2 in _disjoint_pairs(cycles):
        if not any(g.has_edge(i, j) for i in c1 for j in c2):
            return GraphVerdict(
                weakly_farkas=False,
                witness=(
                    _as_labels(g, c1),
                    _as_labels(g, c2),
                    "no edge joins the two cycles",
                ),
            )
    return GraphVerdict(weakly_farkas=True)


def _rotate_to(sequence: list[int], anchor: int) -> list[int]:
    k = sequence.index(anchor)
    return sequence[k:] + sequence[:k]


def _cycle_indices(g: Graph, cycle) -> list[int]:
    seq = cycle.vertex_sequence if isinstance(cycle, OddCycle) else tuple(cycle)
    idx = [g.index_of(str(v)) for v in seq]
    if len(set(idx)) != len(idx) or len(idx) < 3 or len(idx) % 2 == 0:
        raise ValueError("each cycle must list distinct vertices, odd count >= 3")
    for a, b in zip(idx, idx[1:] + idx[:1]):
        if not g.has_edge(a, b):
            raise ValueError(
                f"cycle edge {g.vertices[a]!r} -- {g.vertices[b]!r} is not in the graph"
            )
    return idx


def proof_fixture(g: Graph, cycles, path) -> tuple[dict, dict]:
    """Shift pattern and rational witness for two far-apart odd cycles.

    `cycles` is the pair of vertex-disjoint odd cycles, `path` a simple
    path from a vertex of the first to a vertex of the second whose
    interior avoids both cycles and has even length >= 2.  Returns
    (pattern, witness) maps keyed by canonical edge label pairs: the
    pattern values lie in {-1, 0, 1} with a single +1, the witness values
    are rationals with sum(x_e * v(e)) == 0 and pattern <= witness <=
    pattern + 1 everywhere.  Such a graph is never weakly Farkas: no
    integer point of the pattern's unit boxes sums to zero.
    """
    _require_connected(g)
    cyc_a, cyc_b = cycles
    idx_a = _cycle_indices(g, cyc_a)
    idx_b = _cycle_indices(g, cyc_b)
    if set(idx_a) & set(idx_b):
        raise ValueError("the two cycles must be vertex-disjoint")
    path_idx = [g.index_of(str(v)) for v in path]
    if len(set(path_idx)) != len(path_idx):
        raise ValueError("the connecting path must be simple")
    for a, b in zip(path_idx, path_idx[1:]):
        if not g.has_edge(a, b):
            raise ValueError(
                f"path edge {g.vertices[a]!r} -- {g.vertices[b]!r} is not in the graph"
            )
    if path_idx[0] in idx_b and path_idx[-1] in idx_a:
        path_idx.reverse()
    if path_idx[0] not in idx_a or path_idx[-1] not in idx_b:
        raise ValueError("the path must run from the first cycle to the second")
    interior = path_idx[1:-1]
    if set(interior) & (set(idx_a) | set(idx_b)):
        raise ValueError("path interior must avoid both cycles")
    if len(interior) < 2 or len(interior) % 2:
        raise ValueError(
            "only paths with an even interior length >= 2 are constructed here"
        )

    u = _rotate_to(idx_a, path_idx[0])
    v = _rotate_to(idx_b, path_idx[-1])
    walk = interior  # w_1 .. w_p between u[0] and v[0]

    def edge_key(i: int, j: int) -> tuple[int, int]:
        return (min(i, j), max(i, j))

    pattern: dict[tuple[int, int], int] = {}
    witness: dict[tuple[int, int], Fraction] = {}

    # Witness values: +-1 alternating along the path, +-1/2 alternating
    # around each cycle, arranged so each vertex's incident values cancel.
    witness[edge_key(u[0], walk[0])] = Fraction(1)
    witness[edge_key(walk[-1], v[0])] = Fraction(1)
    for i in range(1, len(walk)):  # edge w_i w_{i+1}, 1-based i
        witness[edge_key(walk[i - 1], walk[i])] = Fraction(1 if i % 2 == 0 else -1)
    for cyc in (u, v):
        for i in range(1, len(cyc)):  # edge c_i c_{i+1}, 1-based i
            witness[edge_key(cyc[i - 1], cyc[i])] = Fraction(
                1 if i % 2 == 0 else -1, 2
            )
        witness[edge_key(cyc[-1], cyc[0])] = Fraction(-1, 2)

    # Pattern values: +1 on the first path edge; -1 below every -1 or -1/2
    # witness; -1 on any stray edge at an even cycle position; else 0.
    pattern[edge_key(u[0], walk[0])] = 1
    for i in range(1, len(walk)):
        if i % 2 == 1:
            pattern[edge_key(walk[i - 1], walk[i])] = -1
    for cyc in (u, v):
        for i in range(1, len(cyc)):
            if i % 2 == 1:
                pattern[edge_key(cyc[i - 1], cyc[i])] = -1
        pattern[edge_key(cyc[-1], cyc[0])] = -1
    for pos in range(2, len(u) + 1, 2):  # stray edges at even positions of u
        at = u[pos - 1]
        successor = u[pos % len(u)]
        for nbr in g.adjacency[at]:
            if nbr != successor:
                pattern.setdefault(edge_key(at, nbr), -1)

    full_pattern = {e: pattern.get(e, 0) for e in g.edges}
    full_witness = {e: witness.get(e, Fraction(0)) for e in g.edges}

    per_vertex = [Fraction(0)] * len(g.vertices)
    for (i, j), x in full_witness.items():
        per_vertex[i] += x
        per_vertex[j] += x
    if any(per_vertex):
        raise InternalInconsistency("fixture witness does not sum to zero")
    ones = [e for e, a in full_pattern.items() if a == 1]
    if ones != [edge_key(u[0], walk[0])] or any(
        a not in (-1, 0, 1) for a in full_pattern.values()
    ):
        raise InternalInconsistency("fixture pattern is not a valid shift pattern")
    for e in g.edges:
        if not full_pattern[e] <= full_witness[e] <= full_pattern[e] + 1:
            raise InternalInconsistency("fixture witness escapes its unit box")

    label = {e: (g.vertices[e[0]], g.vertices[e[1]]) for e in g.edges}
    return (
        {label[e]: a for e, a in full_pattern.items()},
        {label[e]: x for e, x in full_witness.items()},
    )


def cross_validate(g: Graph, limits: Limits = DEFAULT_LIMITS) -> bool:
    """Graph-side verdicts must match the vector classifiers on edge vectors."""
    _require_connected(g)
    graph_afr = is_almost_farkas_graph(g, limits).almost_farkas
    graph_wfr = is_weakly_farkas_graph(g, limits).weakly_farkas
    family = edge_vectors(g)
    if family.size > limits.wfr_max_size:
        raise LimitExceeded(
            f"{family.size} edges exceed the pattern-scan limit {limits.wfr_max_size}"
        )
    return graph_afr == is_afr(family).is_afr and graph_wfr == is_wfr(
        family, limits
    ).is_wfr
