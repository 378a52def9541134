import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from cache import diff
from diffgraph.graphs import SimpleGraph
from diffgraph.recognizers import (
    RECOGNIZERS,
    CertificateError,
    Status,
    Verdict,
    Witness,
    brute_force_class,
    brute_force_forbidden,
    check_verdict,
    check_witness,
    lex_bfs,
)
from diffgraph.recognizers.certify import check_induced_cycle, check_induced_path, check_2k2
from diffgraph.recognizers.classes import (
    c4_free,
    dominating_vertices,
    is_bipartite,
    is_chordal,
    is_cograph,
    is_dominatable,
    is_eulerian,
    is_split,
    is_star,
    is_threshold,
)
from diffgraph.recognizers.oracle import OracleCapError
from diffgraph.recognizers.planarity import is_outerplanar, is_planar

EMPTY = SimpleGraph([], [])


def graph(n, edges):
    return SimpleGraph.from_edges(n, edges)


def star(k):
    return graph(k + 1, [(0, i) for i in range(1, k + 1)])


def cycle(n):
    return graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def k_mn(m, n):
    return graph(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def verified(g, cls):
    v = RECOGNIZERS[cls](g)
    check_verdict(g, cls, v)
    return v


def labels_of(g, w):
    return {g.labels[v] for v in w.vertices}


def ids(g, names):
    return [g.vertex_of_label(x) for x in names]


@pytest.mark.parametrize("cls", sorted(RECOGNIZERS))
def test_empty_graph_is_vacuous(cls):
    v = RECOGNIZERS[cls](EMPTY)
    assert v.status is Status.VACUOUS and v.value is None
    check_verdict(EMPTY, cls, v)


def test_small_shapes():
    assert verified(star(5), "split").value
    assert verified(star(5), "threshold").value
    assert verified(star(5), "star").value
    assert verified(graph(2, [(0, 1)]), "star").value
    assert not verified(cycle(4), "chordal").value
    assert verified(cycle(4), "cograph").value
    assert not verified(graph(4, [(0, 1), (1, 2), (2, 3)]), "cograph").value
    assert not verified(cycle(5), "bipartite").value
    assert verified(cycle(5), "eulerian").value
    assert not verified(complete(5), "planar").value
    assert verified(complete(4), "planar").value
    assert not verified(complete(4), "outerplanar").value
    assert not verified(k_mn(3, 3), "planar").value
    assert not verified(k_mn(2, 3), "outerplanar").value
    assert verified(cycle(7), "outerplanar").value


def test_single_vertex():
    g = graph(1, [])
    assert verified(g, "eulerian").value
    assert not verified(g, "star").value
    assert verified(g, "dominatable").value


def test_d30():
    g = diff("D30")
    assert verified(g, "cograph").value
    v = verified(g, "chordal")
    assert not v.value and v.witness.kind == "C4"
    assert not verified(g, "split").value
    assert not verified(g, "threshold").value
    assert verified(g, "bipartite").value
    assert verified(g, "eulerian").value
    assert verified(g, "planar").value
    v = verified(g, "outerplanar")
    assert not v.value and v.witness.kind == "K23"
    assert dominating_vertices(g) == []
    assert not verified(g, "star").value


def test_s5():
    g = diff("S5")
    assert verified(g, "cograph").value
    assert verified(g, "chordal").value
    v = verified(g, "split")
    assert not v.value and v.witness.kind == "2K2"
    v = verified(g, "threshold")
    assert not v.value and v.witness.kind == "2K2"
    v = verified(g, "eulerian")
    assert not v.value
    # the induced 2K2 exhibited for S5
    check_2k2(g, ids(g, ["(1 2)", "(3 4 5)", "(1 3)", "(2 4 5)"]))


def test_s6():
    g = diff("S6")
    v = verified(g, "chordal")
    assert not v.value and v.witness.kind == "C4"
    check_induced_cycle(g, ids(g, ["(1 2)", "(3 4 5)", "(1 6)", "(3 5 4)"]), 4)
    v = verified(g, "cograph")
    assert not v.value and v.witness.kind == "P4"
    check_induced_path(g, ids(g, ["(1 5)(2 4)(3 6)", "(1 6 4)(2 5 3)", "(1 2)(3 4)(5 6)",
                                  "(1 5 3)(2 6 4)"]))


def test_a7():
    g = diff("A7")
    assert verified(g, "cograph").value
    v = verified(g, "chordal")
    assert not v.value and v.witness.kind == "C4"
    check_induced_cycle(g, ids(g, ["(1 2)(3 4)", "(5 6 7)", "(1 3)(2 4)", "(5 7 6)"]), 4)


def test_split_threshold_examples():
    assert not verified(diff("D30"), "threshold").value
    assert verified(star(4), "threshold").value


def test_bipartite_examples():
    assert verified(diff("Z2 x Z9"), "bipartite").value
    v = verified(diff("Z4 x Z9"), "bipartite")
    assert not v.value and v.witness.kind == "odd-cycle"


def test_eulerian_examples():
    assert verified(diff("Z45"), "eulerian").value
    v = verified(diff("S5"), "eulerian")
    assert not v.value


def test_planarity_examples():
    g = diff("Z12")
    assert (g.n, g.edge_count) == (7, 10)
    assert verified(g, "planar").value
    v = verified(diff("Z5 x Z7"), "planar")
    assert not v.value and v.witness.kind == "K33"
    assert verified(diff("Z6"), "outerplanar").value
    v = verified(diff("Z3 x Z25"), "outerplanar")
    assert not v.value and v.witness.kind == "K23"


def test_star_examples():
    g = diff("Z2 x Z7")
    v = verified(g, "star")
    assert v.value and labels_of(g, v.witness) == {"(1, 0)"}
    assert [g.labels[v] for v in dominating_vertices(g)] == ["(1, 0)"]
    z6 = diff("Z6")
    assert [z6.labels[v] for v in dominating_vertices(z6)] == ["3"]
    assert not verified(diff("D30"), "star").value


def test_brute_force_forbidden_examples():
    g = k_mn(2, 4)
    c4 = brute_force_forbidden(g, "C4")
    assert c4 is not None
    assert sum(1 for v in c4 if v < 2) == 2
    assert brute_force_forbidden(graph(3, [(0, 1), (1, 2)]), "P4") is None
    assert brute_force_forbidden(diff("S5"), "2K2") is not None
    with pytest.raises(OracleCapError):
        brute_force_forbidden(diff("S6"), "P4")


def test_lex_bfs_is_a_permutation():
    g = diff("S6")
    order = lex_bfs(g.rows)
    assert sorted(order) == list(range(g.n))


def test_certifier_rejects_bogus_witnesses():
    g = cycle(5)
    bad = [
        Witness("P4", [0, 1, 2, 0]),
        Witness("C4", [0, 1, 2, 3]),
        Witness("2K2", [0, 1, 2, 3]),
        Witness("peo", [0, 1, 2, 3, 4]),
        Witness("2-coloring", [0, 2]),
        Witness("euler-circuit", [0, 1, 2, 3, 4]),
        Witness("star-center", [0]),
        Witness("K33", [0, 1, 2, 3, 4], {"paths": [], "parts": [[0, 1, 2], [3, 4]]}),
    ]
    for w in bad:
        with pytest.raises(CertificateError):
            check_witness(g, w)
    with pytest.raises(CertificateError):
        check_verdict(g, "bipartite", Verdict.yes("odd-cycle", [0, 1, 2, 3, 4]))
    with pytest.raises(CertificateError):
        check_verdict(g, "planar", Verdict(Status.TRUE, None))
    with pytest.raises(CertificateError):
        check_verdict(g, "chordal", Verdict.vacuous())


@st.composite
def random_graphs(draw, max_n=11):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return graph(n, [e for e, keep in zip(pairs, mask) if keep])


@settings(max_examples=300, deadline=None)
@given(random_graphs())
def test_witnesses_reverify(g):
    for cls, rec in RECOGNIZERS.items():
        check_verdict(g, cls, rec(g))
    check_verdict(g, "c4_free", c4_free(g))


@settings(max_examples=200, deadline=None)
@given(random_graphs(max_n=9))
def test_agrees_with_brute_force(g):
    for cls, rec in [("cograph", is_cograph), ("chordal", is_chordal), ("split", is_split),
                     ("threshold", is_threshold), ("bipartite", is_bipartite)]:
        assert rec(g).value == brute_force_class(g, cls), cls
    assert c4_free(g).value == (brute_force_forbidden(g, "C4") is None)


@settings(max_examples=200, deadline=None)
@given(random_graphs())
def test_agrees_with_reference_implementations(g):
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    assert is_planar(g).value == nx.check_planarity(G)[0]
    assert is_bipartite(g).value == nx.is_bipartite(G)
    assert is_eulerian(g).value == nx.is_eulerian(G)
    assert is_chordal(g).value == nx.is_chordal(G)
    degs = sorted(d for _, d in G.degree())
    assert is_star(g).value == (g.n >= 2 and degs == [1] * (g.n - 1) + [g.n - 1])
    assert is_dominatable(g).value == (g.n - 1 in degs)
    # outerplanar iff the graph plus a universal vertex is planar
    H = G.copy()
    H.add_edges_from(("apex", v) for v in range(g.n))
    assert is_outerplanar(g).value == nx.check_planarity(H)[0]


def test_larger_random_graphs_reverify():
    rng = random.Random(7)
    for _ in range(20):
        n = rng.randint(20, 60)
        p = rng.choice([0.05, 0.1, 0.3])
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
        g = graph(n, edges)
        for cls, rec in RECOGNIZERS.items():
            check_verdict(g, cls, rec(g))
