"""Simple graphs, their matrices, and equitable-partition quotients.

Vertices are labeled 1..n to match standard usage; conversion to 0-based
indices happens only at the matrix boundary.  Everything accepts general
simple graphs; the path (Dynkin A_n) constructors and the mirror partition
are the inputs the rest of the package is tuned for.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .intmat import IntMatrix

__all__ = [
    "Graph",
    "EquitablePartition",
    "QuotientData",
    "dynkin_a",
    "adjacency_matrix",
    "degree_matrix",
    "signless_laplacian",
    "mirror_partition",
    "is_equitable",
    "quotient",
    "reduced_degree_matrix",
    "format_graph_text",
    "parse_graph_text",
    "graph_to_json_dict",
    "graph_from_json_dict",
    "graph_to_json",
    "graph_from_json",
]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 1..n; edges as (i, j) with i < j."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        for e in self.edges:
            if len(e) != 2:
                raise ValueError(f"edge {e!r} is not a pair")
            i, j = e
            if i == j:
                raise ValueError(f"loop at vertex {i} not allowed")
            if not (1 <= i < j <= self.n):
                raise ValueError(f"edge {e!r} out of range or not normalized (i < j)")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        normalized = set()
        for e in edges:
            i, j = int(e[0]), int(e[1])
            if i == j:
                raise ValueError(f"loop at vertex {i} not allowed")
            normalized.add((min(i, j), max(i, j)))
        return cls(n, frozenset(normalized))

    def neighbors(self, v: int) -> set[int]:
        out = set()
        for i, j in self.edges:
            if i == v:
                out.add(j)
            elif j == v:
                out.add(i)
        return out

    def degree(self, v: int) -> int:
        return sum(1 for i, j in self.edges if v in (i, j))


def dynkin_a(n: int) -> Graph:
    """The Dynkin graph A_n: the path 1 - 2 - ... - n."""
    if n < 1:
        raise ValueError(f"path graph needs at least one vertex, got n={n}")
    return Graph(n, frozenset((i, i + 1) for i in range(1, n)))


def adjacency_matrix(g: Graph) -> IntMatrix:
    """Symmetric 0/1 matrix with zero diagonal."""
    n = g.n
    entries = [0] * (n * n)
    for i, j in g.edges:
        entries[(i - 1) * n + (j - 1)] = 1
        entries[(j - 1) * n + (i - 1)] = 1
    return IntMatrix(n, n, tuple(entries))


def degree_matrix(g: Graph) -> IntMatrix:
    return IntMatrix.diagonal([g.degree(v) for v in range(1, g.n + 1)])


def signless_laplacian(g: Graph) -> IntMatrix:
    """Adjacency plus degree matrix."""
    return adjacency_matrix(g) + degree_matrix(g)


@dataclass(frozen=True)
class EquitablePartition:
    """An ordered partition of 1..n into disjoint cells.

    Equitability (every vertex of a cell has the same number of neighbors in
    each cell) is a property relative to a graph; ``is_equitable`` checks it.
    """

    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for cell in self.cells:
            if not cell:
                raise ValueError("empty cells are not allowed")
            for v in cell:
                if v < 1:
                    raise ValueError(f"vertex {v} must be >= 1")
                if v in seen:
                    raise ValueError(f"vertex {v} appears in two cells")
                seen.add(v)

    @classmethod
    def from_cells(cls, cells: Iterable[Iterable[int]]) -> "EquitablePartition":
        return cls(tuple(tuple(sorted(int(v) for v in cell)) for cell in cells))

    @property
    def size(self) -> int:
        return len(self.cells)

    def vertex_set(self) -> set[int]:
        return {v for cell in self.cells for v in cell}

    def cell_index(self) -> dict[int, int]:
        """Map vertex -> 0-based index of its cell."""
        return {v: c for c, cell in enumerate(self.cells) for v in cell}


def mirror_partition(n: int) -> EquitablePartition:
    """Cells pairing vertex i with its mirror n+1-i: {1,n}, {2,n-1}, ...

    For odd n the middle vertex (n+1)/2 forms a singleton last cell.  This
    partition has ceil(n/2) cells and is equitable for the path graph.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got n={n}")
    cells = []
    for i in range(1, n // 2 + 1):
        cells.append((i, n + 1 - i))
    if n % 2:
        cells.append(((n + 1) // 2,))
    return EquitablePartition(tuple(cells))


def _check_covers(g: Graph, p: EquitablePartition) -> None:
    have = p.vertex_set()
    want = set(range(1, g.n + 1))
    if have != want:
        raise ValueError(
            f"partition covers {sorted(have)} but the graph has vertices 1..{g.n}"
        )


def is_equitable(g: Graph, p: EquitablePartition) -> bool:
    """True iff neighbor counts into every cell are constant within each cell."""
    _check_covers(g, p)
    idx = p.cell_index()
    r = p.size
    for cell in p.cells:
        counts_first: list[int] | None = None
        for v in cell:
            counts = [0] * r
            for w in g.neighbors(v):
                counts[idx[w]] += 1
            if counts_first is None:
                counts_first = counts
            elif counts != counts_first:
                return False
    return True


@dataclass(frozen=True)
class QuotientData:
    """Characteristic matrix C (n x r, one 1 per row) and divisor matrix B
    (r x r) of an equitable partition, satisfying A @ C = C @ B exactly."""

    partition: EquitablePartition
    characteristic: IntMatrix
    divisor: IntMatrix


def quotient(g: Graph, p: EquitablePartition) -> QuotientData:
    """Quotient data of an equitable partition; raises if p is not equitable."""
    if not is_equitable(g, p):
        raise ValueError("partition is not equitable for this graph")
    idx = p.cell_index()
    n, r = g.n, p.size
    c_entries = [0] * (n * r)
    for v in range(1, n + 1):
        c_entries[(v - 1) * r + idx[v]] = 1
    characteristic = IntMatrix(n, r, tuple(c_entries))
    b_rows = []
    for cell in p.cells:
        counts = [0] * r
        for w in g.neighbors(cell[0]):
            counts[idx[w]] += 1
        b_rows.append(counts)
    return QuotientData(p, characteristic, IntMatrix.from_rows(b_rows))


def reduced_degree_matrix(n: int) -> IntMatrix:
    """Leading ceil(n/2) principal submatrix of the path's degree matrix."""
    if n < 1:
        raise ValueError(f"need n >= 1, got n={n}")
    r = (n + 1) // 2
    return degree_matrix(dynkin_a(n)).leading_submatrix(r)


# ---------------------------------------------------------------------------
# Text and JSON interchange
# ---------------------------------------------------------------------------


def format_graph_text(g: Graph) -> str:
    """Render: first line "n", then one edge "i j" per line (1-based, sorted)."""
    lines = [str(g.n)]
    for i, j in sorted(g.edges):
        lines.append(f"{i} {j}")
    return "\n".join(lines) + "\n"


def parse_graph_text(text: str) -> Graph:
    lines = [ln for ln in text.splitlines()]
    if not lines or not lines[0].strip():
        raise ValueError("line 1: missing vertex count")
    try:
        n = int(lines[0])
    except ValueError:
        raise ValueError(f"line 1: invalid vertex count {lines[0]!r}") from None
    edges = []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'i j', got {line!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ValueError(f"line {lineno}: invalid edge {line!r}") from None
    return Graph.from_edges(n, edges)


def graph_to_json_dict(g: Graph) -> dict:
    return {"n": g.n, "edges": [[i, j] for i, j in sorted(g.edges)]}


def graph_from_json_dict(obj: dict) -> Graph:
    try:
        return Graph.from_edges(int(obj["n"]), obj["edges"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed graph object: {exc}") from None


def graph_to_json(g: Graph) -> str:
    return json.dumps(graph_to_json_dict(g))


def graph_from_json(text: str) -> Graph:
    return graph_from_json_dict(json.loads(text))
