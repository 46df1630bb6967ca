"""Connection-set conditions and group-graph (Cayley graph) construction."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .errors import InvalidConnectionSet, NotSymmetric
from .finite_group import FiniteGroup, GroupAutomorphism, enumerate_automorphisms, generates, make_modular27
from .graph_core import Graph, from_edges


@dataclass(frozen=True)
class GeneratingSet:
    group: FiniteGroup = field(repr=False)
    K: FrozenSet[int]

    def __post_init__(self):
        object.__setattr__(self, "K", frozenset(self.group.check_index(k) for k in self.K))
        if self.group.identity in self.K:
            raise InvalidConnectionSet("the identity cannot belong to a connection set")

    @property
    def inverses(self) -> FrozenSet[int]:
        return frozenset(self.group.inverse_table[k] for k in self.K)

    @property
    def closure(self) -> FrozenSet[int]:
        """K together with the inverses of its elements."""
        return self.K | self.inverses


@dataclass(frozen=True)
class ConditionReport:
    cond1: bool
    cond2: bool
    cond3: bool
    generates: bool
    # (k1, k2) -> index into `automorphisms` of some phi with phi(k1) = k2
    cond2_witnesses: Dict[Tuple[int, int], int]
    cond3_counterexample: Optional[int]
    automorphisms: Tuple[GroupAutomorphism, ...] = field(repr=False)

    @property
    def all_hold(self) -> bool:
        return self.cond1 and self.cond2 and self.cond3

    def summary(self, G: FiniteGroup) -> dict:
        return {
            "cond1": self.cond1,
            "cond2": self.cond2,
            "cond3": self.cond3,
            "generates": self.generates,
            "automorphism_count": len(self.automorphisms),
            "cond2_witnesses": {
                f"{G.labels[k1]} -> {G.labels[k2]}": idx
                for (k1, k2), idx in sorted(self.cond2_witnesses.items())
            },
        }


def check_generating_conditions(G: FiniteGroup, K: Iterable[int],
                                gens_for_aut: Optional[Sequence[int]] = None) -> ConditionReport:
    """Evaluate the three connection-set conditions for K.

    1. K and K^-1 are disjoint.
    2. Every k1 in K can be sent to every k2 in K by a group automorphism.
    3. Every automorphism preserving K u K^-1 also preserves K.
    """
    S = GeneratingSet(G, frozenset(K))
    autos = tuple(enumerate_automorphisms(G, gens_for_aut))

    cond1 = not (S.K & S.inverses)

    # Prefer a witness that also sends k2 back to k1 (a swap) when one exists.
    witnesses: Dict[Tuple[int, int], int] = {}
    for k1 in sorted(S.K):
        for k2 in sorted(S.K):
            hits = [idx for idx, phi in enumerate(autos) if phi(k1) == k2]
            swaps = [idx for idx in hits if autos[idx](k2) == k1]
            if hits:
                witnesses[(k1, k2)] = (swaps or hits)[0]
    cond2 = len(witnesses) == len(S.K) ** 2

    H = S.closure
    counterexample = None
    for idx, phi in enumerate(autos):
        if frozenset(map(phi, H)) == H and frozenset(map(phi, S.K)) != S.K:
            counterexample = idx
            break

    return ConditionReport(
        cond1=cond1,
        cond2=cond2,
        cond3=counterexample is None,
        generates=generates(G, S.K),
        cond2_witnesses=witnesses,
        cond3_counterexample=counterexample,
        automorphisms=autos,
    )


def cayley_graph(G: FiniteGroup, H: Iterable[int]) -> Graph:
    """Group-graph on G joining every g to every element of gH."""
    H = frozenset(G.check_index(h) for h in H)
    if G.identity in H:
        raise InvalidConnectionSet("the identity cannot belong to a connection set")
    missing = sorted(h for h in H if G.inverse_table[h] not in H)
    if missing:
        raise NotSymmetric(f"connection set lacks inverses of {[G.labels[h] for h in missing]}")
    edges = [(g, G.mul_table[g][h]) for g in range(G.order) for h in H]
    return from_edges(G.order, edges, labels=G.labels)


def left_translation(G: FiniteGroup, g: int) -> Tuple[int, ...]:
    """The vertex map x -> g x, an automorphism of every Cayley graph on G."""
    return tuple(G.mul_table[g][x] for x in range(G.order))


def doyle_connection_set(G: FiniteGroup) -> List[int]:
    a, c = G["a"], G["c"]
    inv = G.inverse_table
    return sorted({a, c, inv[a], inv[c]})


def doyle_graph() -> Graph:
    """The 27-vertex, 4-regular half-transitive Cayley graph on the modular group of order 27."""
    G = make_modular27()
    return cayley_graph(G, doyle_connection_set(G))
