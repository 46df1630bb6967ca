"""Small finite groups given by explicit multiplication tables.

Elements are integer indices ``0 .. order-1`` with the identity at index 0.
Two families are provided: the non-abelian group of order 27 with presentation
``<a, b | a^9 = b^3 = 1, b^-1 a b = a^4>`` (normal form ``a^i b^j``, index
``3*i + j``) and cyclic groups ``C_n`` used as test cases.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .errors import ContractViolation, NonGeneratingSet, ParseError, SelfCheckFailed

MAX_ORDER = 64

# A word is a sequence of (generator name, exponent) pairs.
Word = Tuple[Tuple[str, int], ...]


@dataclass(frozen=True, order=True)
class GroupElement:
    """The element ``a^i b^j`` of the order-27 group, always reduced."""

    i: int
    j: int

    def __post_init__(self):
        object.__setattr__(self, "i", self.i % 9)
        object.__setattr__(self, "j", self.j % 3)

    @property
    def index(self) -> int:
        return 3 * self.i + self.j

    @classmethod
    def from_index(cls, idx: int) -> "GroupElement":
        if not 0 <= idx < 27:
            raise ContractViolation(f"element index {idx} out of range [0, 27)")
        return cls(idx // 3, idx % 3)

    def __str__(self):
        return _normal_form_label(self.i, self.j)


def _power_label(name: str, k: int) -> str:
    return name if k == 1 else f"{name}^{k}"


def _normal_form_label(i: int, j: int) -> str:
    parts = [_power_label(name, k) for name, k in (("a", i), ("b", j)) if k]
    return " ".join(parts) if parts else "e"


@dataclass(frozen=True)
class FiniteGroup:
    name: str
    order: int
    mul_table: Tuple[Tuple[int, ...], ...]
    inverse_table: Tuple[int, ...]
    generators: Mapping[str, int]
    # names of the presentation generators; relations are words over these
    presentation: Tuple[str, ...]
    relations: Tuple[Word, ...]
    labels: Tuple[str, ...] = field(repr=False)

    @property
    def identity(self) -> int:
        return 0

    def __getitem__(self, name: str) -> int:
        return self.generators[name]

    def check_index(self, x: int) -> int:
        if not isinstance(x, int) or not 0 <= x < self.order:
            raise ContractViolation(f"element index {x!r} out of range [0, {self.order})")
        return x

    def label(self, x: int) -> str:
        return self.labels[self.check_index(x)]


@dataclass(frozen=True)
class GroupAutomorphism:
    mapping: Tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    def compose(self, other: "GroupAutomorphism") -> "GroupAutomorphism":
        """Return ``self o other`` (apply ``other`` first)."""
        return GroupAutomorphism(tuple(self.mapping[y] for y in other.mapping))

    def inverse(self) -> "GroupAutomorphism":
        inv = [0] * len(self.mapping)
        for x, y in enumerate(self.mapping):
            inv[y] = x
        return GroupAutomorphism(tuple(inv))

    def is_identity(self) -> bool:
        return all(x == y for x, y in enumerate(self.mapping))


def mul(G: FiniteGroup, x: int, y: int) -> int:
    return G.mul_table[G.check_index(x)][G.check_index(y)]


def inv(G: FiniteGroup, x: int) -> int:
    return G.inverse_table[G.check_index(x)]


def power(G: FiniteGroup, x: int, k: int) -> int:
    G.check_index(x)
    if k < 0:
        x, k = G.inverse_table[x], -k
    result = 0
    for _ in range(k):
        result = G.mul_table[result][x]
    return result


def element_order(G: FiniteGroup, x: int) -> int:
    G.check_index(x)
    n, y = 1, x
    while y != 0:
        y = G.mul_table[y][x]
        n += 1
    return n


def evaluate_word(G: FiniteGroup, word: Iterable[Tuple[str, int]],
                  images: Optional[Mapping[str, int]] = None) -> int:
    """Multiply out ``word`` left to right.

    ``images`` substitutes generator names; by default the group's own
    distinguished generators are used.
    """
    images = G.generators if images is None else images
    result = 0
    for name, k in word:
        result = G.mul_table[result][power(G, images[name], k)]
    return result


def parse_word(G: FiniteGroup, text: str) -> int:
    """Parse an element written as a word such as ``"Ba"`` (``b^-1 a``).

    Lowercase letters are generators, uppercase their inverses, and ``"e"`` or
    the empty string is the identity.
    """
    text = text.strip()
    if text in ("", "e"):
        return 0
    result = 0
    for offset, ch in enumerate(text):
        name = ch.lower()
        if len(name) != 1 or name not in G.generators:
            raise ParseError(f"unknown generator {ch!r} in word {text!r}", offset)
        g = G.generators[name]
        if ch.isupper():
            g = G.inverse_table[g]
        result = G.mul_table[result][g]
    return result


def closure(G: FiniteGroup, elements: Iterable[int]) -> List[int]:
    """Sorted list of elements of the subgroup generated by ``elements``."""
    gens = [G.check_index(x) for x in elements]
    seen = {0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = G.mul_table[x][g]
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return sorted(seen)


def generates(G: FiniteGroup, elements: Iterable[int]) -> bool:
    return len(closure(G, elements)) == G.order


def check_group_axioms(G: FiniteGroup) -> None:
    """Exhaustively verify the table is a group; raise SelfCheckFailed if not."""
    n, t = G.order, G.mul_table
    if n > MAX_ORDER:
        raise SelfCheckFailed(f"group order {n} exceeds {MAX_ORDER}")
    for x in range(n):
        if t[0][x] != x or t[x][0] != x:
            raise SelfCheckFailed(f"index 0 is not a two-sided identity at {x}")
        y = G.inverse_table[x]
        if t[x][y] != 0 or t[y][x] != 0:
            raise SelfCheckFailed(f"inverse_table wrong at {x}")
        if sorted(t[x]) != list(range(n)):
            raise SelfCheckFailed(f"row {x} is not a permutation")
    for x, y, z in itertools.product(range(n), repeat=3):
        if t[t[x][y]][z] != t[x][t[y][z]]:
            raise SelfCheckFailed(f"associativity fails at ({x}, {y}, {z})")
    for rel in G.relations:
        if evaluate_word(G, rel) != 0:
            raise SelfCheckFailed(f"relation {rel} does not hold")


def _inverse_table(table: Sequence[Sequence[int]]) -> Tuple[int, ...]:
    return tuple(row.index(0) for row in table)


def conjugation_exponent() -> int:
    """The t in [0, 9) with 4t = 1 (mod 9), so that b a b^-1 = a^t."""
    (t,) = [t for t in range(9) if (4 * t) % 9 == 1]
    return t


def make_modular27() -> FiniteGroup:
    t = conjugation_exponent()

    def product(x: int, y: int) -> int:
        i1, j1 = divmod(x, 3)
        i2, j2 = divmod(y, 3)
        return 3 * ((i1 + pow(t, j1) * i2) % 9) + (j1 + j2) % 3

    table = tuple(tuple(product(x, y) for y in range(27)) for x in range(27))
    a, b = GroupElement(1, 0).index, GroupElement(0, 1).index
    # c = b a^-1
    c = table[b][_inverse_table(table)[a]]
    G = FiniteGroup(
        name="modular27",
        order=27,
        mul_table=table,
        inverse_table=_inverse_table(table),
        generators={"a": a, "b": b, "c": c},
        presentation=("a", "b"),
        relations=(
            (("a", 9),),
            (("b", 3),),
            (("b", -1), ("a", 1), ("b", 1), ("a", -4)),
        ),
        labels=tuple(str(GroupElement.from_index(x)) for x in range(27)),
    )
    check_group_axioms(G)
    return G


def make_cyclic(n: int) -> FiniteGroup:
    """Cyclic group C_n with generator ``x``; element k is ``x^k``."""
    if not 1 <= n <= MAX_ORDER:
        raise ContractViolation(f"cyclic order {n} outside [1, {MAX_ORDER}]")
    table = tuple(tuple((x + y) % n for y in range(n)) for x in range(n))
    G = FiniteGroup(
        name=f"C{n}",
        order=n,
        mul_table=table,
        inverse_table=tuple((-x) % n for x in range(n)),
        generators={"x": 1 % n},
        presentation=("x",),
        relations=((("x", n),),),
        labels=tuple("e" if k == 0 else _power_label("x", k) for k in range(n)),
    )
    check_group_axioms(G)
    return G


def _extend(G: FiniteGroup, gens: Sequence[int], images: Sequence[int]) -> Optional[Tuple[int, ...]]:
    # Walk the Cayley graph of gens; the map is a homomorphism iff it is
    # consistent on every edge x -> x*g.
    t = G.mul_table
    mapping: List[Optional[int]] = [None] * G.order
    mapping[0] = 0
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for g, h in zip(gens, images):
            y, val = t[x][g], t[mapping[x]][h]
            if mapping[y] is None:
                mapping[y] = val
                queue.append(y)
            elif mapping[y] != val:
                return None
    if len(set(mapping)) != G.order:
        return None
    return tuple(mapping)


def is_automorphism(G: FiniteGroup, mapping: Sequence[int]) -> bool:
    t = G.mul_table
    if sorted(mapping) != list(range(G.order)):
        return False
    return all(mapping[t[x][y]] == t[mapping[x]][mapping[y]]
               for x in range(G.order) for y in range(G.order))


def enumerate_automorphisms(G: FiniteGroup, gens: Optional[Sequence[int]] = None) -> List[GroupAutomorphism]:
    """All automorphisms of ``G``, determined by their values on ``gens``.

    ``gens`` defaults to the presentation generators. Candidate image tuples
    must preserve element orders, satisfy the defining relations (when
    ``gens`` are the presentation generators) and extend consistently to a
    bijection. The result is sorted with the identity first.
    """
    if gens is None:
        gens = [G.generators[name] for name in G.presentation]
    gens = [G.check_index(g) for g in gens]
    if not generates(G, gens):
        raise NonGeneratingSet(f"{[G.labels[g] for g in gens]} do not generate {G.name}")

    use_relations = list(gens) == [G.generators[name] for name in G.presentation]
    orders = [element_order(G, x) for x in range(G.order)]
    candidates = [[y for y in range(G.order) if orders[y] == orders[g]] for g in gens]

    found = []
    for images in itertools.product(*candidates):
        if use_relations:
            subst = dict(zip(G.presentation, images))
            if any(evaluate_word(G, rel, subst) != 0 for rel in G.relations):
                continue
        if not generates(G, images):
            continue
        mapping = _extend(G, gens, images)
        if mapping is None:
            continue
        if not is_automorphism(G, mapping):
            raise SelfCheckFailed(f"extension of {images} is not an automorphism")
        found.append(GroupAutomorphism(mapping))
    found.sort(key=lambda phi: phi.mapping)
    return found


def element_table(G: FiniteGroup) -> Dict[str, int]:
    """Map from label to index, e.g. ``{"e": 0, "a": 3, ...}``."""
    return {label: x for x, label in enumerate(G.labels)}
