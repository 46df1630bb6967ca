import pytest

from cayleysym.cayley import (
    GeneratingSet, cayley_graph, check_generating_conditions, doyle_connection_set, doyle_graph,
    left_translation,
)
from cayleysym.errors import InvalidConnectionSet, NotSymmetric
from cayleysym.finite_group import GroupElement, inv, make_cyclic, make_modular27, mul
from cayleysym.graph_core import complete_graph, cycle_graph, is_regular, to_graph6
from cayleysym.metrics import is_connected
from cayleysym.symmetry import Permutation, is_vertex_transitive

from corpus import cayley_corpus


@pytest.fixture(scope="module")
def G():
    return make_modular27()


def test_generating_set(G):
    S = GeneratingSet(G, {G["a"], G["c"]})
    assert S.closure == frozenset(doyle_connection_set(G))
    assert S.closure == frozenset(inv(G, x) for x in S.closure)
    with pytest.raises(InvalidConnectionSet):
        GeneratingSet(G, {0, G["a"]})


def test_conditions_for_doyle_set(G):
    a, c = G["a"], G["c"]
    rep = check_generating_conditions(G, [a, c])
    assert (rep.cond1, rep.cond2, rep.cond3, rep.generates) == (True, True, True, True)
    for (k1, k2), idx in rep.cond2_witnesses.items():
        assert rep.automorphisms[idx](k1) == k2
    swap = rep.automorphisms[rep.cond2_witnesses[(a, c)]]
    assert swap(c) == a
    assert rep.cond3_counterexample is None


def test_condition1_fails_for_inverse_pair(G):
    a = G["a"]
    rep = check_generating_conditions(G, [a, inv(G, a)])
    assert rep.cond1 is False


def test_conditions_cyclic_single_generator():
    C = make_cyclic(9)
    rep = check_generating_conditions(C, [1])
    assert rep.cond1 and rep.cond2 and rep.generates
    # Inversion preserves {x, x^-1} but not {x}.
    assert rep.cond3 is False
    phi = rep.automorphisms[rep.cond3_counterexample]
    assert {phi(1), phi(8)} == {1, 8} and phi(1) != 1


def test_identity_in_K_rejected(G):
    with pytest.raises(InvalidConnectionSet):
        check_generating_conditions(G, [0, G["a"]])


def test_cayley_small_cyclic():
    assert cayley_graph(make_cyclic(3), [1, 2]) == complete_graph(3)
    assert cayley_graph(make_cyclic(4), [1, 3]) == cycle_graph(4)


def test_cayley_errors(G):
    with pytest.raises(NotSymmetric):
        cayley_graph(G, [G["a"]])
    with pytest.raises(InvalidConnectionSet):
        cayley_graph(G, [0])


def test_doyle_graph_shape(G):
    g = doyle_graph()
    assert g.n == 27 and g.edge_count == 54
    assert is_regular(g) == 4
    assert is_connected(g)
    expected = {GroupElement(1, 0).index, GroupElement(8, 0).index,
                GroupElement(2, 1).index, GroupElement(1, 2).index}
    assert set(g.neighbors(0)) == expected
    assert mul(G, G["c"], GroupElement(1, 2).index) == 0
    assert g.label(0) == "e" and g.label(G["c"]) == "a^2 b"


def test_doyle_graph_deterministic():
    assert to_graph6(doyle_graph()) == to_graph6(doyle_graph())


@pytest.mark.parametrize("name, group, H, g", cayley_corpus(), ids=lambda x: x if isinstance(x, str) else "")
def test_left_translations_are_automorphisms(name, group, H, g):
    assert is_regular(g) == len(H)
    for x in range(group.order):
        assert Permutation(left_translation(group, x)).is_automorphism_of(g)
    assert is_vertex_transitive(g)
