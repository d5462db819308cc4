"""Text input formats and exact value encoding for reports.

Vector files: '#' starts a comment line, the first data line is "m n",
then m lines of n whitespace-separated integers.  Graph files: one edge
"u v" per data line, labels are arbitrary non-whitespace UTF-8, the vertex
order is first appearance.  Both accept \\n or \\r\\n endings.

Reports encode every integer as a decimal string and every rational as
"p/q" in lowest terms, so arbitrary precision survives JSON.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .errors import ParseError
from .graphs import Graph
from .lattice import VectorFamily


def _data_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def parse_vector_text(text: str) -> VectorFamily:
    header = None
    rows: list[tuple[int, ...]] = []
    for lineno, line in _data_lines(text):
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise ParseError("header must be two integers 'm n'", lineno)
            try:
                m, n = int(parts[0]), int(parts[1])
            except ValueError:
                raise ParseError("header must be two integers 'm n'", lineno)
            if m < 1 or n < 1:
                raise ParseError("both header values must be positive", lineno)
            header = (m, n)
            continue
        m, n = header
        if len(rows) == m:
            raise ParseError(f"more than the declared {m} vectors", lineno)
        try:
            vec = tuple(int(p) for p in parts)
        except ValueError:
            raise ParseError("vector entries must be integers", lineno)
        if len(vec) != n:
            raise ParseError(f"expected {n} entries, got {len(vec)}", lineno)
        rows.append(vec)
    if header is None:
        raise ParseError("missing 'm n' header")
    if len(rows) != header[0]:
        raise ParseError(f"expected {header[0]} vectors, found {len(rows)}")
    return VectorFamily(tuple(rows))


def parse_graph_text(text: str) -> Graph:
    pairs: list[tuple[str, str]] = []
    seen: set[frozenset] = set()
    for lineno, line in _data_lines(text):
        parts = line.split()
        if len(parts) != 2:
            raise ParseError("expected two vertex labels 'u v'", lineno)
        a, b = parts
        if a == b:
            raise ParseError(f"self-loop at {a!r}", lineno)
        key = frozenset((a, b))
        if key in seen:
            raise ParseError(f"duplicate edge {a!r} -- {b!r}", lineno)
        seen.add(key)
        pairs.append((a, b))
    if not pairs:
        raise ParseError("the graph file lists no edges")
    return Graph.from_edges(pairs)


def parse_int_csv(text: str, what: str = "value") -> tuple[int, ...]:
    try:
        return tuple(int(p.strip()) for p in text.split(","))
    except ValueError:
        raise ParseError(f"{what} must be comma-separated integers: {text!r}")


def parse_rational_csv(text: str, what: str = "value") -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(p.strip()) for p in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"{what} must be comma-separated rationals p/q: {text!r}")


def fmt_int(x: int) -> str:
    return str(int(x))


def fmt_rational(x) -> str:
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}"


def fmt_int_vec(v: Iterable[int]) -> list[str]:
    return [fmt_int(x) for x in v]


def fmt_rational_vec(v) -> list[str]:
    return [fmt_rational(x) for x in v]
