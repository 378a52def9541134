import pytest
from hypothesis import given, strategies as st

import brute
from diffgraph.graphs import (
    SimpleGraph,
    commuting_graph,
    complement,
    difference_graph,
    enhanced_power_graph,
    induced_subgraph,
    power_graph,
    predicted_vertex_set,
)
from diffgraph.groupspec import realize


def label_edges(g: SimpleGraph) -> set:
    out = set()
    for a, b in g.edges():
        x, y = g.labels[a], g.labels[b]
        out.add((x, y) if x < y else (y, x))
    return out


ORACLE_SPECS = ["Z6", "Z12", "S3", "S4", "D30", "Q12", "Q8 x Z3", "D8 x Z3",
                "Z2 x Z7", "Z2 x Z9", "Z5 x Z7", "Z2 x Z2 x Z2 x Z3", "A5"]


@pytest.mark.parametrize("spec", ORACLE_SPECS)
def test_power_and_enhanced_match_brute_force(spec):
    g, m = realize(spec), brute.from_spec(spec)
    assert label_edges(power_graph(g)) == brute.power_edges(m)
    assert label_edges(enhanced_power_graph(g)) == brute.enhanced_edges(m)


@pytest.mark.parametrize("spec", ORACLE_SPECS)
def test_difference_matches_brute_force(spec):
    g, m = realize(spec), brute.from_spec(spec)
    d = difference_graph(g)
    verts, edges = brute.difference(m)
    assert set(d.labels) == verts
    assert label_edges(d) == edges


@pytest.mark.parametrize("spec", ["S3", "S4", "D30", "Q12", "Q8"])
def test_commuting_matches_brute_force(spec):
    g, m = realize(spec), brute.from_spec(spec)
    assert label_edges(commuting_graph(g)) == brute.commuting_edges(m)


# counts frozen from the brute-force models in tests/brute.py
@pytest.mark.parametrize("spec, power, enhanced, dv, de", [
    ("Z4", 6, 6, 0, 0),
    ("Z6", 13, 15, 3, 2),
    ("S3", 6, 6, 0, 0),
    ("Z12", 56, 66, 7, 10),
    ("Z15", 97, 105, 6, 8),
    ("D30", 112, 120, 6, 8),
    ("Q12", 28, 30, 3, 2),
    ("Z2 x Z7", 85, 91, 7, 6),
    ("Z2 x Z9", 133, 153, 11, 20),
    ("Z4 x Z9", 530, 630, 23, 100),
    ("Z5 x Z7", 571, 595, 10, 24),
    ("Z3 x Z25", 2567, 2775, 34, 208),
    ("Z45", 910, 990, 20, 80),
    ("Z2 x Z2 x Z2 x Z3", 73, 87, 9, 14),
    ("S5", 280, 300, 30, 20),
    ("S6", 2085, 2325, 110, 240),
    ("A7", 6930, 7140, 175, 210),
])
def test_frozen_counts(spec, power, enhanced, dv, de):
    g = realize(spec)
    assert power_graph(g).edge_count == power
    assert enhanced_power_graph(g).edge_count == enhanced
    d = difference_graph(g)
    assert (d.n, d.edge_count) == (dv, de)


@pytest.mark.parametrize("spec, edges", [("S3", 6), ("S4", 48), ("D30", 120), ("Q12", 30),
                                         ("S5", 360), ("D8 x Z3", 168)])
def test_commuting_counts(spec, edges):
    assert commuting_graph(realize(spec)).edge_count == edges


def test_small_examples():
    z4 = power_graph(realize("Z4"))
    assert z4.edge_count == 6
    s3 = realize("S3")
    p = power_graph(s3)
    e = s3.index_of("()")
    assert set(p.neighbors(e)) == set(range(6)) - {e}
    assert p.adjacent(s3.index_of("(1 2 3)"), s3.index_of("(1 3 2)"))
    assert label_edges(enhanced_power_graph(s3)) == label_edges(p)
    c = commuting_graph(s3)
    assert c.adjacent(s3.index_of("(1 2 3)"), s3.index_of("(1 3 2)"))
    assert not c.adjacent(s3.index_of("(1 2)"), s3.index_of("(1 3)"))
    assert enhanced_power_graph(realize("Z6")).edge_count == 15


def test_d30_graphs():
    g = realize("D30")
    rotations = [i for i in range(g.n) if "y" not in g.name(i)]
    pe = enhanced_power_graph(g)
    for a in rotations:
        for b in rotations:
            if a != b:
                assert pe.adjacent(a, b)
    e = g.identity
    for r in range(g.n):
        if "y" in g.name(r):
            assert pe.neighbors(r) == [e]
    comm = commuting_graph(g)
    assert all(comm.adjacent(a, b) for a in rotations for b in rotations if a != b)
    d = difference_graph(g)
    assert sorted(d.degrees()) == [2, 2, 2, 2, 4, 4]


def test_abelian_commuting_complete():
    g = commuting_graph(realize("Z2 x Z6"))
    assert g.edge_count == 12 * 11 // 2


def test_difference_empty_for_eppo():
    assert difference_graph(realize("S4")).n == 0
    assert predicted_vertex_set(realize("S4")) == set()


def test_predicted_vertex_set():
    g = realize("D30")
    assert {g.name(v) for v in predicted_vertex_set(g)} == {"x^3", "x^5", "x^6", "x^9",
                                                             "x^10", "x^12"}
    z12 = realize("Z12")
    assert sorted(int(z12.orders[v]) for v in predicted_vertex_set(z12)) == [2, 3, 3, 4, 4, 6, 6]


def test_induced_subgraph_examples():
    d = difference_graph(realize("D30"))
    side = [v for v in range(d.n) if d.degree(v) == 4]
    assert induced_subgraph(d, side).edge_count == 0
    assert induced_subgraph(d, range(d.n)).rows == d.rows
    with pytest.raises(IndexError):
        induced_subgraph(d, [0, 99])

    s6 = realize("S6")
    d = difference_graph(s6)
    cyc = [d.vertex_of_label(x) for x in ["(1 2)", "(3 4 5)", "(1 6)", "(3 5 4)"]]
    h = induced_subgraph(d, cyc)
    assert h.degrees() == [2, 2, 2, 2]
    assert not h.adjacent(0, 2) and not h.adjacent(1, 3)


def test_dot_is_deterministic_and_quoted():
    g = difference_graph(realize("D30"))
    dot = g.to_dot()
    assert dot == difference_graph(realize("D30")).to_dot()
    assert dot.startswith('graph "D30 difference" {')
    assert dot.count(" -- ") == 8
    assert '"x^3";' in dot


@st.composite
def graphs(draw):
    n = draw(st.integers(1, 10))
    edges = draw(st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
                         .filter(lambda e: e[0] != e[1])))
    return SimpleGraph.from_edges(n, edges)


@given(graphs())
def test_graph_invariants(g):
    g.check()
    assert sum(g.degrees()) == 2 * g.edge_count
    c = complement(g)
    c.check()
    assert g.edge_count + c.edge_count == g.n * (g.n - 1) // 2
    assert complement(c).rows == g.rows
