import pytest

import powergenus.groups as gr
import powergenus.powergraph as pg
from powergenus.errors import InvalidVertex, NoOrderSixSubgroup, ParseError

from conftest import hexagon_union


def test_power_graph_z6():
    g = pg.power_graph(gr.cyclic(6))
    assert g.n == 6 and g.m == 13  # K6 minus two edges


def test_power_graph_z8_complete():
    g = pg.power_graph(gr.cyclic(8))
    assert g.m == 28  # K8: prime-power cyclic groups give complete graphs


def test_power_graph_klein_star():
    g = pg.power_graph(gr.direct_product(gr.cyclic(2), gr.cyclic(2)))
    assert g.m == 3  # star on the identity


def test_power_graph_symmetry():
    g = pg.power_graph(gr.symmetric(3))
    adj = g.adjacency()
    for u, v in g.edges:
        assert v in adj[u] and u in adj[v]
    # identity is adjacent to everything
    assert len(adj[0]) == g.n - 1


def test_complete_graphs():
    assert pg.complete_graph(5).m == 10
    assert pg.complete_bipartite(3, 4).m == 12


def test_induced():
    k5 = pg.complete_graph(5)
    sub = pg.induced(k5, [0, 2, 4])
    assert sub.n == 3 and sub.m == 3
    with pytest.raises(InvalidVertex):
        pg.induced(k5, [0, 9])


def test_hexagon_union_graph():
    g = gr.direct_product(gr.cyclic(2), gr.cyclic(6))
    h = pg.hexagon_union_graph(g)
    assert h.n == 12 and h.m == 33
    with pytest.raises(NoOrderSixSubgroup):
        pg.hexagon_union_graph(gr.symmetric(3))


def test_built_hexagon_unions_expected_sizes():
    two = hexagon_union(2)
    assert (two.n, two.m) == (9, 23)
    three = hexagon_union(3)
    assert (three.n, three.m) == (12, 33)


def test_edge_list_roundtrip():
    g = pg.power_graph(gr.cyclic(6))
    text = pg.to_edge_list(g)
    back = pg.from_edge_list(text)
    assert (back.n, back.edges) == (g.n, g.edges)  # labels are not exported
    with pytest.raises(ParseError):
        pg.from_edge_list("3 2\n0 1\n")  # missing an edge line


def test_to_dot():
    g = pg.complete_graph(3)
    dot = pg.to_dot(g)
    assert dot.startswith("graph")
    assert dot.count("--") == 3


def test_degree():
    g = pg.complete_bipartite(3, 4)
    assert g.degree(0) == 4 and g.degree(3) == 3
