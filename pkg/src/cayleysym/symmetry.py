"""Graph automorphism groups by individualization-refinement.

Partitions are ordered lists of cells (tuples of vertices). Refinement splits
each cell by the vector of neighbour counts into every current cell until the
partition is equitable. Subcells take the place of their parent, ordered by
signature, so cell order depends only on the graph structure and never on the
vertex names.

The search fixes a base path: from the refined initial partition it keeps
individualizing the smallest vertex of the first smallest non-singleton cell
until the partition is discrete. Every automorphism maps that base leaf to
another leaf of the search tree. For each level of the base path, starting at
the deepest, we look for automorphisms that send the base vertex to each
not-yet-covered vertex of its target cell; the resulting generators are closed
into the explicit element list.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import asdict, dataclass
from typing import Callable, Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

from .errors import NotAnEdge, TooLarge
from .graph_core import Graph
from .metrics import diameter, girth

MAX_VERTICES = 128

Partition = List[Tuple[int, ...]]


@dataclass(frozen=True)
class Permutation:
    image: Tuple[int, ...]

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    def __call__(self, v: int) -> int:
        return self.image[v]

    def __len__(self):
        return len(self.image)

    def compose(self, other: "Permutation") -> "Permutation":
        """``self o other``: apply ``other`` first."""
        return Permutation(tuple(self.image[x] for x in other.image))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.image)
        for x, y in enumerate(self.image):
            inv[y] = x
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(x == y for x, y in enumerate(self.image))

    def is_automorphism_of(self, g: Graph) -> bool:
        img = self.image
        if len(img) != g.n or sorted(img) != list(range(g.n)):
            return False
        # Row counts are preserved by a bijection, so edges-to-edges suffices.
        return all(g.has_edge(img[u], img[v]) for u, v in g.edges())


@dataclass(frozen=True)
class PermutationGroup:
    n: int
    elements: Tuple[Permutation, ...]
    generators: Tuple[Permutation, ...]

    @classmethod
    def from_generators(cls, n: int, generators: Iterable[Permutation]) -> "PermutationGroup":
        generators = tuple(generators)
        identity = Permutation.identity(n)
        seen = {identity}
        queue = deque([identity])
        while queue:
            p = queue.popleft()
            for s in generators:
                q = s.compose(p)
                if q not in seen:
                    seen.add(q)
                    queue.append(q)
        return cls(n, tuple(sorted(seen, key=lambda p: p.image)), generators)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, p: Permutation) -> bool:
        return p in set(self.elements)

    def stabilizer(self, v: int) -> List[Permutation]:
        return [p for p in self.elements if p(v) == v]


def _bits_mask(cell: Iterable[int]) -> int:
    mask = 0
    for v in cell:
        mask |= 1 << v
    return mask


def _check_partition(n: int, cells: Sequence[Iterable[int]]) -> Partition:
    out = [tuple(sorted(c)) for c in cells]
    flat = sorted(v for c in out for v in c)
    if flat != list(range(n)) or any(not c for c in out):
        raise ValueError(f"not an ordered partition of range({n}) into non-empty cells")
    return out


def refine_partition(g: Graph, initial: Sequence[Iterable[int]]) -> Partition:
    """Coarsest equitable refinement of ``initial`` (see module docstring)."""
    cells = _check_partition(g.n, initial)
    return _refine(g.rows, cells)


def _refine(rows: Sequence[int], cells: Partition) -> Partition:
    while True:
        masks = [_bits_mask(c) for c in cells]
        refined: Partition = []
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups: Dict[Tuple[int, ...], List[int]] = {}
            for v in cell:
                row = rows[v]
                sig = tuple((row & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            refined.extend(tuple(groups[sig]) for sig in sorted(groups))
        if len(refined) == len(cells):
            return refined
        cells = refined


def _individualize(cells: Partition, index: int, v: int) -> Partition:
    cell = cells[index]
    rest = tuple(x for x in cell if x != v)
    return cells[:index] + [(v,), rest] + cells[index + 1:]


def _target_cell(cells: Partition) -> Optional[int]:
    best = None
    for k, c in enumerate(cells):
        if len(c) > 1 and (best is None or len(c) < len(cells[best])):
            best = k
    return best


def _quotient(rows: Sequence[int], cells: Partition) -> Tuple:
    # Exact invariant of an equitable partition: cell sizes plus cell-to-cell
    # neighbour counts.
    masks = [_bits_mask(c) for c in cells]
    return tuple((len(c),) + tuple((rows[c[0]] & m).bit_count() for m in masks) for c in cells)


class _Search:
    """Search tree anchored at the base path of a refined initial partition."""

    def __init__(self, g: Graph, initial: Partition):
        if g.n > MAX_VERTICES:
            raise TooLarge(f"{g.n} vertices exceeds the policy bound of {MAX_VERTICES}")
        self.g = g
        self.rows = g.rows
        self.initial = initial
        root = _refine(self.rows, initial)
        self.path: List[Partition] = [root]
        self.targets: List[int] = []
        self.base_vertices: List[int] = []
        while True:
            t = _target_cell(self.path[-1])
            if t is None:
                break
            v = self.path[-1][t][0]
            self.targets.append(t)
            self.base_vertices.append(v)
            self.path.append(_refine(self.rows, _individualize(self.path[-1], t, v)))
        self.invariants = [_quotient(self.rows, p) for p in self.path]
        self.leaf = [c[0] for c in self.path[-1]]

    @property
    def depth(self) -> int:
        return len(self.targets)

    def child(self, level: int, cells: Partition, w: int) -> Optional[Partition]:
        nxt = _refine(self.rows, _individualize(cells, self.targets[level], w))
        if _quotient(self.rows, nxt) != self.invariants[level + 1]:
            return None
        return nxt

    def descend(self, level: int, cells: Partition,
                accept: Callable[[Permutation], bool]) -> Optional[Permutation]:
        """First leaf below ``cells`` whose map from the base leaf passes ``accept``."""
        if level == self.depth:
            image = [0] * self.g.n
            for v, cell in zip(self.leaf, cells):
                image[v] = cell[0]
            perm = Permutation(tuple(image))
            return perm if accept(perm) else None
        for w in cells[self.targets[level]]:
            nxt = self.child(level, cells, w)
            if nxt is not None:
                found = self.descend(level + 1, nxt, accept)
                if found is not None:
                    return found
        return None


def _preserves_cells(perm: Permutation, source: Partition, target: Partition) -> bool:
    return all(sorted(perm(v) for v in s) == list(t) for s, t in zip(source, target))


def _orbit(point: Hashable, generators: Sequence[Permutation],
           act: Callable[[Permutation, Hashable], Hashable]) -> set:
    seen = {point}
    queue = deque([point])
    while queue:
        x = queue.popleft()
        for s in generators:
            y = act(s, x)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def automorphism_group(g: Graph, initial: Optional[Sequence[Iterable[int]]] = None) -> PermutationGroup:
    """Automorphisms of ``g`` that map every cell of ``initial`` onto itself.

    With ``initial`` omitted this is the full automorphism group.
    """
    cells = _check_partition(g.n, initial if initial is not None else ([range(g.n)] if g.n else []))
    search = _Search(g, cells)

    def accept(perm):
        return perm.is_automorphism_of(g) and _preserves_cells(perm, cells, cells)

    generators: List[Permutation] = []
    expected_order = 1
    for level in reversed(range(search.depth)):
        base_v = search.base_vertices[level]
        parent = search.path[level]
        orbit = _orbit(base_v, generators, lambda p, x: p(x))
        for w in parent[search.targets[level]]:
            if w in orbit:
                continue
            nxt = search.child(level, parent, w)
            if nxt is None:
                continue
            perm = search.descend(level + 1, nxt, accept)
            if perm is not None:
                generators.append(perm)
                orbit = _orbit(base_v, generators, lambda p, x: p(x))
        expected_order *= len(orbit)

    group = PermutationGroup.from_generators(g.n, generators)
    if group.order != expected_order:
        raise AssertionError(f"closure has {group.order} elements, stabilizer chain gives {expected_order}")
    return group


def find_mapping(g: Graph, source: Sequence[Iterable[int]],
                 target: Sequence[Iterable[int]]) -> Optional[Permutation]:
    """An automorphism sending each cell of ``source`` onto the matching cell of ``target``."""
    src = _check_partition(g.n, source)
    dst = _check_partition(g.n, target)
    if [len(c) for c in src] != [len(c) for c in dst]:
        return None
    search = _Search(g, src)
    start = _refine(g.rows, dst)
    if _quotient(g.rows, start) != search.invariants[0]:
        return None

    def accept(perm):
        return perm.is_automorphism_of(g) and _preserves_cells(perm, src, dst)

    return search.descend(0, start, accept)


def find_arc_reversal(g: Graph, u: int, v: int) -> Optional[Permutation]:
    """An automorphism swapping the endpoints of edge ``{u, v}``, if one exists."""
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise NotAnEdge(f"({u}, {v}) is not an edge")
    rest = tuple(x for x in range(g.n) if x not in (u, v))
    tail = [rest] if rest else []
    return find_mapping(g, [(u,), (v,)] + tail, [(v,), (u,)] + tail)


def _orbit_partition(points: Sequence, generators: Sequence[Permutation], act) -> List[List]:
    remaining = set(points)
    orbits = []
    for p in points:
        if p in remaining:
            orbit = _orbit(p, generators, act)
            remaining -= orbit
            orbits.append(sorted(orbit))
    return orbits


def _act_edge(p: Permutation, e):
    a, b = p(e[0]), p(e[1])
    return (a, b) if a < b else (b, a)


def _act_arc(p: Permutation, e):
    return (p(e[0]), p(e[1]))


def vertex_orbits(A: PermutationGroup) -> List[List[int]]:
    return _orbit_partition(range(A.n), A.generators, lambda p, x: p(x))


def edge_orbits(A: PermutationGroup, g: Graph) -> List[List[Tuple[int, int]]]:
    return _orbit_partition(g.edges(), A.generators, _act_edge)


def arc_orbits(A: PermutationGroup, g: Graph) -> List[List[Tuple[int, int]]]:
    return _orbit_partition(g.arcs(), A.generators, _act_arc)


def is_vertex_transitive(g: Graph) -> bool:
    return len(vertex_orbits(automorphism_group(g))) == 1


CLASSIFICATIONS = (
    "arc-transitive",
    "half-transitive",
    "edge-but-not-vertex-transitive",
    "vertex-but-not-edge-transitive",
    "other",
)


@dataclass(frozen=True)
class SymmetryReport:
    n: int
    edge_count: int
    regular_degree: Optional[int]
    vertex_orbit_count: int
    edge_orbit_count: int
    arc_orbit_count: int
    aut_order: int
    vertex_transitive: bool
    edge_transitive: bool
    arc_transitive: bool
    classification: str
    girth: Optional[int]
    diameter: Optional[int]

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _classification(vt: bool, et: bool, at: bool) -> str:
    if vt and et:
        return "arc-transitive" if at else "half-transitive"
    if et:
        return "edge-but-not-vertex-transitive"
    if vt:
        return "vertex-but-not-edge-transitive"
    return "other"


def classify(g: Graph) -> SymmetryReport:
    A = automorphism_group(g)
    nv = len(vertex_orbits(A))
    ne = len(edge_orbits(A, g))
    na = len(arc_orbits(A, g))
    vt, et, at = nv == 1, ne == 1, na == 1
    degrees = {g.degree(v) for v in range(g.n)}
    return SymmetryReport(
        n=g.n,
        edge_count=g.edge_count,
        regular_degree=degrees.pop() if len(degrees) == 1 else None,
        vertex_orbit_count=nv,
        edge_orbit_count=ne,
        arc_orbit_count=na,
        aut_order=A.order,
        vertex_transitive=vt,
        edge_transitive=et,
        arc_transitive=at,
        classification=_classification(vt, et, at),
        girth=girth(g),
        diameter=diameter(g),
    )
