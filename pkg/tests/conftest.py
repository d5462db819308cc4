"""Shared helpers: independent oracles and exhaustive generators.

Everything here recomputes expectations from definitions, on purpose not
reusing the package's optimized paths, so tests stay two-route.
"""

import itertools
from fractions import Fraction

import pytest

from farkas.lattice import int_rank, make_primitive, primitive_kernel
from farkas.graphs import Graph


def vec_sum(vectors, coeffs):
    """Exact sum(c_i * v_i) as a tuple."""
    n = len(vectors[0])
    out = [0] * n
    for c, v in zip(coeffs, vectors):
        for j in range(n):
            out[j] += c * v[j]
    return tuple(out)


def brute_circuits(vectors):
    """Circuit supports+coefficients straight from the definition: every
    subset whose rank is size-1 and whose proper subsets are all
    independent."""
    m = len(vectors)
    found = []
    for size in range(1, m + 1):
        for support in itertools.combinations(range(m), size):
            sub = [vectors[i] for i in support]
            if int_rank(sub) != size - 1:
                continue
            if size >= 2 and any(
                int_rank([vectors[i] for i in smaller]) != size - 1
                for smaller in itertools.combinations(support, size - 1)
            ):
                continue
            found.append((support, primitive_kernel(sub)))
    return found


def box_max_dot(u, vectors, lower, upper):
    """Independent box maximum of <u, sum x_i v_i>: maximize each term."""
    total = Fraction(0)
    for a, b, v in zip(lower, upper, vectors):
        c = sum(Fraction(x) * y for x, y in zip(u, v))
        total += max(a * c, b * c)
    return total


def enumerate_box_points(lower, upper):
    return itertools.product(*(range(a, b + 1) for a, b in zip(lower, upper)))


def _canonical_edge_set(n, edges):
    best = None
    for perm in itertools.permutations(range(n)):
        key = tuple(sorted(tuple(sorted((perm[a], perm[b]))) for a, b in edges))
        if best is None or key < best:
            best = key
    return best


def connected_graphs_up_to_iso(max_vertices):
    """All connected simple graphs with >= 1 edge on 2..max_vertices vertices,
    one representative per isomorphism class."""
    graphs = []
    seen = set()
    for n in range(2, max_vertices + 1):
        pairs = list(itertools.combinations(range(n), 2))
        for bits in range(1, 1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
            if {v for e in edges for v in e} != set(range(n)):
                continue
            g = Graph(tuple(str(i) for i in range(n)), tuple(edges))
            if not g.is_connected():
                continue
            key = (n, _canonical_edge_set(n, edges))
            if key not in seen:
                seen.add(key)
                graphs.append(g)
    return graphs


def random_family(rng, m, n, bound):
    return tuple(
        tuple(rng.randint(-bound, bound) for _ in range(n)) for _ in range(m)
    )


def random_connected_graph(rng, n, max_edges):
    """Rejection-sample a connected graph on n labelled vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    while True:
        k = rng.randint(n - 1, min(max_edges, len(pairs)))
        edges = tuple(sorted(rng.sample(pairs, k)))
        g = Graph(tuple(str(i) for i in range(n)), edges)
        if g.is_connected():
            return g


@pytest.fixture
def bridge_graph():
    """Two triangles joined by a single edge (6 vertices, 7 edges)."""
    return Graph.from_edges(
        [
            ("u1", "u2"), ("u2", "u3"), ("u3", "u1"),
            ("v1", "v2"), ("v2", "v3"), ("v3", "v1"),
            ("u1", "v1"),
        ]
    )


@pytest.fixture
def short_path_graph():
    """Two triangles joined through one middle vertex (7 vertices, 8 edges)."""
    return Graph.from_edges(
        [
            ("u1", "u2"), ("u2", "u3"), ("u3", "u1"),
            ("v1", "v2"), ("v2", "v3"), ("v3", "v1"),
            ("u1", "w1"), ("w1", "v1"),
        ]
    )


@pytest.fixture
def long_path_graph():
    """Two triangles joined through two middle vertices (8 vertices, 9 edges)."""
    return Graph.from_edges(
        [
            ("u1", "u2"), ("u2", "u3"), ("u3", "u1"),
            ("v1", "v2"), ("v2", "v3"), ("v3", "v1"),
            ("u1", "w1"), ("w1", "w2"), ("w2", "v1"),
        ]
    )
