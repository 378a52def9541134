"""Planarity and outerplanarity with checkable certificates.

Planar graphs come with a rotation system (clockwise neighbour lists);
non-planar graphs with a subdivision of K5 or K3,3 given as branch vertices
plus the connecting paths.  Outerplanarity is reduced to planarity of the
graph with an added apex; its obstructions are subdivisions of K4 or K2,3.
"""

from __future__ import annotations

import networkx as nx

from ..graphs import SimpleGraph, bits
from .verdict import Verdict


def to_networkx(g: SimpleGraph, within: list[int] | None = None) -> nx.Graph:
    vs = range(g.n) if within is None else within
    keep = set(vs)
    G = nx.Graph()
    G.add_nodes_from(vs)
    for a in vs:
        for b in bits(g.rows[a]):
            if b > a and b in keep:
                G.add_edge(a, b)
    return G


def _planar(G: nx.Graph) -> bool:
    n, m = G.number_of_nodes(), G.number_of_edges()
    if n >= 3 and m > 3 * n - 6:
        return False
    return nx.check_planarity(G)[0]


def _shrink_prefix(G: nx.Graph, test) -> nx.Graph:
    """Smallest prefix (by descending degree) whose induced subgraph fails ``test``.

    ``test(H)`` is True for "good" graphs; G itself must fail it.  Failing is
    monotone under taking induced subgraphs, so binary search applies.
    """
    order = sorted(G.nodes, key=lambda v: (-G.degree(v), v))
    lo, hi = 0, len(order)  # test holds for prefix lo, fails for prefix hi
    k = 8
    while k < hi:
        if not test(G.subgraph(order[:k])):
            hi = k
            break
        lo = k
        k *= 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if test(G.subgraph(order[:mid])):
            lo = mid
        else:
            hi = mid
    return nx.Graph(G.subgraph(order[:hi]))


def _trace_paths(H: nx.Graph, branch: list[int]) -> list[list[int]]:
    """Split a subdivision into paths between branch vertices."""
    bset = set(branch)
    paths, used = [], set()
    for b in sorted(branch):
        for nb in sorted(H.neighbors(b)):
            if (b, nb) in used:
                continue
            path = [b, nb]
            prev, cur = b, nb
            while cur not in bset:
                nxt = [w for w in H.neighbors(cur) if w != prev]
                if len(nxt) != 1:
                    raise ValueError("not a subdivision")
                prev, cur = cur, nxt[0]
                path.append(cur)
            used.add((path[-1], path[-2]))
            paths.append(path)
    return paths


def _bipartition(branch: list[int], paths: list[list[int]]) -> list[list[int]]:
    adj = {b: set() for b in branch}
    for p in paths:
        adj[p[0]].add(p[-1])
        adj[p[-1]].add(p[0])
    first = min(branch)
    left = sorted(adj[next(iter(sorted(adj[first])))])
    right = sorted(set(branch) - set(left))
    return [left, right]


def _subdivision_witness(H: nx.Graph) -> tuple[str, list[int], dict]:
    """Classify a Kuratowski-type subgraph and trace its paths."""
    H = nx.Graph(H)
    H.remove_nodes_from([v for v in list(H.nodes) if H.degree(v) == 0])
    branch = sorted(v for v in H.nodes if H.degree(v) >= 3)
    paths = _trace_paths(H, branch)
    degs = sorted(H.degree(v) for v in branch)
    if degs == [4] * 5:
        return "K5", branch, {"paths": paths}
    if degs != [3] * 6:
        raise ValueError(f"unexpected obstruction with degrees {degs}")
    parts = _bipartition(branch, paths)
    return "K33", parts[0] + parts[1], {"paths": paths, "parts": parts}


def _kuratowski(G: nx.Graph) -> tuple[str, list[int], dict]:
    H = _shrink_prefix(G, _planar)
    ok, sub = nx.check_planarity(H, counterexample=True)
    assert not ok
    return _subdivision_witness(sub)


def is_planar(g: SimpleGraph) -> Verdict:
    if g.n == 0:
        return Verdict.vacuous()
    G = to_networkx(g)
    n, m = g.n, g.edge_count
    if not (n >= 3 and m > 3 * n - 6):
        ok, emb = nx.check_planarity(G)
        if ok:
            rot = emb.get_data()
            return Verdict.yes("rotation", [],
                               rotation={str(v): list(rot.get(v, [])) for v in range(n)})
    kind, vs, data = _kuratowski(G)
    return Verdict.no(kind, vs, **data)


# ---------------------------------------------------------------------------
# outerplanarity


def _with_apex(G: nx.Graph) -> tuple[nx.Graph, int]:
    apex = max(G.nodes, default=-1) + 1
    A = nx.Graph(G)
    A.add_edges_from((apex, v) for v in G.nodes)
    return A, apex


def _outerplanar(G: nx.Graph) -> bool:
    if G.number_of_nodes() == 0:
        return True
    A, _ = _with_apex(G)
    return _planar(A)


def _from_apex_obstruction(sub: nx.Graph, apex: int):
    kind, vs, data = _subdivision_witness(sub)
    if apex not in vs:
        return None
    paths = [p for p in data["paths"] if apex not in (p[0], p[-1])]
    if kind == "K5":
        return "K4", [v for v in vs if v != apex], {"paths": paths}
    left, right = data["parts"]
    side, other = (left, right) if apex in left else (right, left)
    side = [v for v in side if v != apex]
    return "K23", side + other, {"paths": paths, "parts": [side, other]}


def _minimal_non_outerplanar(G: nx.Graph):
    """Delete edges while the graph stays non-outerplanar, then trace."""
    H = nx.Graph(G)
    for e in sorted(H.edges):
        H.remove_edge(*e)
        if _outerplanar(H):
            H.add_edge(*e)
    H.remove_nodes_from([v for v in list(H.nodes) if H.degree(v) == 0])
    branch = sorted(v for v in H.nodes if H.degree(v) >= 3)
    if len(branch) == 4:
        return "K4", branch, {"paths": _trace_paths(H, branch)}
    # K2,3: two degree-3 vertices joined by three internally disjoint paths;
    # promote one internal vertex per path to a branch vertex
    a, b = branch
    raw = _trace_paths(H, branch)
    paths, mids = [], []
    for p in raw:
        if p[0] != a:
            p = p[::-1]
        mid_i = len(p) // 2
        mids.append(p[mid_i])
        paths.append(p[: mid_i + 1])
        paths.append(p[mid_i:][::-1])
    return "K23", [a, b] + mids, {"paths": paths, "parts": [[a, b], mids]}


def is_outerplanar(g: SimpleGraph) -> Verdict:
    if g.n == 0:
        return Verdict.vacuous()
    G = to_networkx(g)
    n, m = g.n, g.edge_count
    if not (n >= 2 and m > 2 * n - 3):
        A, apex = _with_apex(G)
        ok, emb = nx.check_planarity(A)
        if ok:
            rot = emb.get_data()
            rotation = {str(v): [w for w in rot.get(v, []) if w != apex] for v in range(n)}
            return Verdict.yes("outer-rotation", [], rotation=rotation)
    H = _shrink_prefix(G, _outerplanar)
    A, apex = _with_apex(H)
    ok, sub = nx.check_planarity(A, counterexample=True)
    assert not ok
    found = _from_apex_obstruction(sub, apex)
    if found is None:
        found = _minimal_non_outerplanar(H)
    kind, vs, data = found
    return Verdict.no(kind, vs, **data)
