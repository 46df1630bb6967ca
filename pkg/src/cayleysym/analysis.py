"""Local certificate that a vertex-transitive graph has no reversal of a given arc.

Suppose some automorphism reverses the arc (center, u), and some automorphism
tau sends u to center and center to u_inv. Composing the two gives an
automorphism that fixes center and sends u to u_inv. Such a map also
restricts to an automorphism of every ball around center. So if no
automorphism of the ball fixes center while sending u to u_inv, the arc
cannot be reversed in the whole graph. The reverse implication does not hold,
so a positive local search proves nothing.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional, Tuple

from .errors import NotAnArc, PreconditionFailed
from .graph_core import Graph
from .metrics import BallSubgraph, ball_subgraph
from .symmetry import Permutation, automorphism_group, find_mapping, is_vertex_transitive

# Re-exported so callers find all distance helpers next to the certificate.
from .metrics import bfs_distances, diameter, girth  # noqa: F401


@dataclass(frozen=True)
class ObstructionCertificate:
    ball_size: int
    fixing_aut_count: int
    reversal_found: bool
    conclusion: bool
    radius: int
    center_label: str
    arc_labels: Tuple[str, str]
    justification: str = field(compare=False)
    translation: Optional[Permutation] = field(default=None, compare=False, repr=False)
    ball: Optional[BallSubgraph] = field(default=None, compare=False, repr=False)

    def to_dict(self) -> dict:
        return {
            "ball_size": self.ball_size,
            "fixing_aut_count": self.fixing_aut_count,
            "reversal_found": self.reversal_found,
            "conclusion": self.conclusion,
            "radius": self.radius,
            "center_label": self.center_label,
            "arc_labels": list(self.arc_labels),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def verify_non_arc_transitive_locally(g: Graph, center: int, u: int, u_inv: int,
                                      r: int = 2) -> ObstructionCertificate:
    """Try to certify that the arc (center, u) has no reversing automorphism.

    Looks at the radius-``r`` ball around ``center`` for automorphisms that fix
    ``center`` and send ``u`` to ``u_inv``. ``conclusion`` is True only when
    the ball has none.
    """
    for x in (u, u_inv):
        if not (0 <= center < g.n and 0 <= x < g.n) or not g.has_edge(center, x):
            raise NotAnArc(f"vertex {x} is not a neighbour of {center}")
    if r < 1:
        raise PreconditionFailed("radius must be at least 1 so the arc lies inside the ball")
    if not is_vertex_transitive(g):
        raise PreconditionFailed("graph is not vertex-transitive")
    src_rest = tuple(x for x in range(g.n) if x not in (u, center))
    dst_rest = tuple(x for x in range(g.n) if x not in (center, u_inv))
    tau = find_mapping(g, [(u,), (center,)] + ([src_rest] if src_rest else []),
                       [(center,), (u_inv,)] + ([dst_rest] if dst_rest else []))
    if tau is None:
        raise PreconditionFailed(
            f"no automorphism sends ({u}, {center}) to ({center}, {u_inv}); "
            "the reduction to center-fixing maps does not apply")

    ball = ball_subgraph(g, center, r)
    c_loc, u_loc, v_loc = (ball.local_index(x) for x in (center, u, u_inv))
    others = tuple(x for x in range(ball.graph.n) if x != c_loc)
    fixing = automorphism_group(ball.graph, [(c_loc,)] + ([others] if others else []))
    reversal_found = any(p(u_loc) == v_loc for p in fixing.elements)

    justification = (
        f"vertex-transitive; automorphism {list(tau.image)} maps {u}->{center}, {center}->{u_inv}, "
        f"so a reversal of ({center},{u}) exists iff some automorphism fixing {center} maps "
        f"{u}->{u_inv}; every such map restricts to the radius-{r} ball, "
        f"whose {fixing.order} center-fixing automorphisms were enumerated"
    )
    return ObstructionCertificate(
        ball_size=ball.graph.n,
        fixing_aut_count=fixing.order,
        reversal_found=reversal_found,
        conclusion=not reversal_found,
        radius=r,
        center_label=g.label(center),
        arc_labels=(g.label(u), g.label(u_inv)),
        justification=justification,
        translation=tau,
        ball=ball,
    )
