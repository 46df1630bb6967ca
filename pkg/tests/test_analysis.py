import math
import random

import pytest

from cayleysym.analysis import verify_non_arc_transitive_locally
from cayleysym.cayley import cayley_graph, doyle_graph
from cayleysym.errors import NotAnArc, PreconditionFailed
from cayleysym.finite_group import make_cyclic, make_modular27
from cayleysym.graph_core import complete_graph, cycle_graph, from_edges, path_graph
from cayleysym.metrics import ball_subgraph, bfs_distances, diameter, girth, is_connected
from cayleysym.symmetry import automorphism_group, classify, find_arc_reversal

from corpus import cayley_corpus, corpus_graphs, random_graph
from oracles import distance_matrix, girth_by_edge_removal

# Regression constants, computed once with the Floyd-Warshall and
# edge-removal oracles in tests/oracles.py.
DOYLE_GIRTH = 5
DOYLE_DIAMETER = 3
DOYLE_BALL2 = 17
# Center-fixing automorphisms of the radius-2 ball (backtracking oracle).
DOYLE_BALL2_FIXING = 2


@pytest.fixture(scope="module")
def doyle():
    return doyle_graph()


def test_bfs_examples(doyle):
    assert bfs_distances(from_edges(1, []), 0) == [0]
    assert bfs_distances(path_graph(3), 0) == [0, 1, 2]
    assert max(bfs_distances(doyle, 0)) == DOYLE_DIAMETER
    assert bfs_distances(from_edges(2, []), 0) == [0, math.inf]


def test_bfs_matches_floyd_warshall():
    rng = random.Random(11)
    for g in corpus_graphs()[:60] + [random_graph(rng, 15, 0.2) for _ in range(10)]:
        if g.n == 0:
            continue
        D = distance_matrix(g)
        for v in range(g.n):
            assert bfs_distances(g, v) == list(D[v])


def test_girth_and_diameter_examples(doyle):
    assert (girth(complete_graph(3)), diameter(complete_graph(3))) == (3, 1)
    assert (girth(cycle_graph(5)), diameter(cycle_graph(5))) == (5, 2)
    assert girth(path_graph(4)) is None
    assert diameter(from_edges(2, [])) is None
    assert (girth(doyle), diameter(doyle)) == (DOYLE_GIRTH, DOYLE_DIAMETER)


def test_doyle_constants_against_oracles(doyle):
    D = distance_matrix(doyle)
    assert D.max() == DOYLE_DIAMETER
    assert (D[0] <= 2).sum() == DOYLE_BALL2
    assert girth_by_edge_removal(doyle) == DOYLE_GIRTH


def test_girth_matches_oracle():
    rng = random.Random(5)
    for _ in range(40):
        g = random_graph(rng, rng.randint(1, 10), 0.3)
        assert girth(g) == girth_by_edge_removal(g)


def test_ball_subgraph(doyle):
    ball = ball_subgraph(doyle, 0, 0)
    assert ball.graph.n == 1 and ball.graph.edge_count == 0
    ball = ball_subgraph(doyle, 0, 2)
    assert ball.graph.n == DOYLE_BALL2
    assert list(ball.vertex_map) == sorted(ball.vertex_map)
    dist = bfs_distances(doyle, 0)
    assert set(ball.vertex_map) == {v for v in range(27) if dist[v] <= 2}
    for i, u in enumerate(ball.vertex_map):
        for j, v in enumerate(ball.vertex_map):
            assert ball.graph.has_edge(i, j) == doyle.has_edge(u, v)
    assert ball_subgraph(doyle, 0, 3).graph == doyle
    assert ball_subgraph(doyle, 5, 99).graph.n == 27


def test_ball_at_diameter_covers_component():
    g = from_edges(5, [(0, 1), (1, 2), (3, 4)])
    assert ball_subgraph(g, 0, 2).vertex_map == (0, 1, 2)
    for g in corpus_graphs():
        d = diameter(g)
        if d is not None and g.n:
            assert ball_subgraph(g, 0, d).graph.n == g.n


def test_doyle_certificate(doyle):
    G = make_modular27()
    a = G["a"]
    cert = verify_non_arc_transitive_locally(doyle, 0, a, G.inverse_table[a], r=2)
    assert cert.ball_size == DOYLE_BALL2
    assert cert.fixing_aut_count == DOYLE_BALL2_FIXING
    assert cert.reversal_found is False and cert.conclusion is True
    assert cert.center_label == "e" and cert.arc_labels == ("a", "a^8")
    assert cert.translation(a) == 0 and cert.translation(0) == G.inverse_table[a]
    assert set(cert.to_dict()) == {"ball_size", "fixing_aut_count", "reversal_found",
                                   "conclusion", "radius", "center_label", "arc_labels"}


def test_c5_certificate_finds_reflection():
    cert = verify_non_arc_transitive_locally(cycle_graph(5), 0, 1, 4, r=2)
    assert cert.reversal_found is True and cert.conclusion is False


def test_certificate_errors(doyle):
    with pytest.raises(NotAnArc):
        verify_non_arc_transitive_locally(doyle, 0, 1, 24)
    with pytest.raises(PreconditionFailed):
        verify_non_arc_transitive_locally(path_graph(3), 1, 0, 2)


def test_restriction_soundness(doyle):
    for g in [doyle, cycle_graph(6), complete_graph(4)]:
        rest = list(range(1, g.n))
        for r in (1, 2):
            ball = ball_subgraph(g, 0, r)
            pos = {v: k for k, v in enumerate(ball.vertex_map)}
            for p in automorphism_group(g, [(0,), rest]).elements:
                image = [pos[p(v)] for v in ball.vertex_map]
                assert all(ball.graph.has_edge(image[i], image[j]) for i, j in ball.graph.edges())


def test_certificate_cross_validation():
    for name, group, H, g in cayley_corpus():
        report = classify(g)
        for h in H:
            hinv = group.inverse_table[h]
            for r in (1, 2, 3):
                cert = verify_non_arc_transitive_locally(g, 0, h, hinv, r=r)
                reversal = find_arc_reversal(g, 0, h)
                if cert.conclusion:
                    assert reversal is None, name
                    assert report.arc_transitive is False, name
            if report.arc_transitive:
                assert find_arc_reversal(g, 0, h) is not None
