"""Simple undirected graphs with bit-row adjacency and text interchange.

Row ``v`` of the adjacency is a Python int whose bit ``u`` is set iff
``{u, v}`` is an edge. Vertex labels are display metadata only: they never
enter equality, encodings or symmetry computations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import InvalidEdge, ParseError, Unsupported

GRAPH6_HEADER = b">>graph6<<"
GRAPH6_MAX_N = 62


@dataclass(frozen=True)
class Graph:
    n: int
    rows: Tuple[int, ...]
    labels: Optional[Tuple[str, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise InvalidEdge(f"expected {self.n} adjacency rows, got {len(self.rows)}")
        for v, row in enumerate(self.rows):
            if row >> self.n:
                raise InvalidEdge(f"row {v} has bits beyond vertex {self.n - 1}")
            if row >> v & 1:
                raise InvalidEdge(f"loop at vertex {v}")
            for u in _bits(row):
                if not self.rows[u] >> v & 1:
                    raise InvalidEdge(f"adjacency not symmetric at ({v}, {u})")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("one label per vertex required")

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> List[int]:
        return list(_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def edges(self) -> List[Tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in _bits(self.rows[u] >> (u + 1) << (u + 1))]

    def arcs(self) -> List[Tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.rows[u])]

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def relabeled(self, perm: Sequence[int]) -> "Graph":
        """The image graph with vertex ``v`` renamed ``perm[v]``."""
        return from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph; new vertex ``k`` is old vertex ``vertices[k]``."""
        pos = {v: k for k, v in enumerate(vertices)}
        edges = [(pos[u], pos[v]) for u, v in self.edges() if u in pos and v in pos]
        labels = tuple(self.label(v) for v in vertices) if self.labels is not None else None
        return from_edges(len(vertices), edges, labels=labels)

    def with_labels(self, labels: Optional[Sequence[str]]) -> "Graph":
        return Graph(self.n, self.rows, tuple(labels) if labels is not None else None)


def _bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def from_edges(n: int, edges: Iterable[Tuple[int, int]], labels: Optional[Sequence[str]] = None) -> Graph:
    if n < 0:
        raise InvalidEdge(f"negative vertex count {n}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidEdge(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise InvalidEdge(f"loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows), tuple(labels) if labels is not None else None)


def to_graph6(g: Graph) -> bytes:
    """Short-form graph6 encoding, without header or trailing newline."""
    if g.n > GRAPH6_MAX_N:
        raise Unsupported(f"graph6 short form needs n <= {GRAPH6_MAX_N}, got {g.n}")
    bits = [g.has_edge(i, j) for j in range(1, g.n) for i in range(j)]
    bits += [False] * (-len(bits) % 6)
    out = bytearray([g.n + 63])
    for k in range(0, len(bits), 6):
        value = 0
        for bit in bits[k:k + 6]:
            value = (value << 1) | bit
        out.append(value + 63)
    return bytes(out)


def from_graph6(data) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii", errors="replace")
    data = bytes(data).strip()
    start = 0
    if data.startswith(GRAPH6_HEADER):
        start = len(GRAPH6_HEADER)
    if start >= len(data):
        raise ParseError("empty graph6 string", start)
    first = data[start]
    if first == 126:
        raise Unsupported("graph6 long form (n > 62) is not supported")
    if not 63 <= first <= 126:
        raise ParseError(f"invalid size byte {first!r}", start)
    n = first - 63
    nbits = n * (n - 1) // 2
    body = data[start + 1:]
    expected = (nbits + 5) // 6
    if len(body) != expected:
        raise ParseError(f"expected {expected} data bytes for n={n}, got {len(body)}",
                         start + 1 + min(len(body), expected))
    bits = []
    for k, byte in enumerate(body):
        if not 63 <= byte <= 126:
            raise ParseError(f"invalid data byte {byte!r}", start + 1 + k)
        value = byte - 63
        bits.extend((value >> s) & 1 for s in range(5, -1, -1))
    if any(bits[nbits:]):
        raise ParseError("nonzero padding bits", start + len(body))
    pairs = ((i, j) for j in range(1, n) for i in range(j))
    return from_edges(n, [p for p, bit in zip(pairs, bits) if bit])


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        if g.labels is not None:
            lines.append(f"  {v} [label={_dot_quote(g.labels[v])}];")
        else:
            lines.append(f"  {v};")
    lines += [f"  {u} -- {v};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_edgelist(g: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.edges())


def degree_sequence(g: Graph) -> List[int]:
    return [g.degree(v) for v in range(g.n)]


def is_regular(g: Graph) -> Optional[int]:
    """The common degree, or None if degrees differ (or there are no vertices)."""
    degrees = set(degree_sequence(g))
    return degrees.pop() if len(degrees) == 1 else None


# Small named graphs used by the test corpus and the CLI.

def complete_graph(n: int) -> Graph:
    return from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidEdge("a cycle needs at least 3 vertices")
    return from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def path_graph(n: int) -> Graph:
    return from_edges(n, [(v, v + 1) for v in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with center 0."""
    return from_edges(leaves + 1, [(0, v) for v in range(1, leaves + 1)])
