"""Graph-class recognizers returning three-valued verdicts with witnesses.

The empty graph (a difference graph of an EPPO group) is ``vacuous`` for
every class.
"""

from __future__ import annotations

from ..graphs import SimpleGraph, bits
from . import search
from .verdict import Status, Verdict, Witness


def _low(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


# ---------------------------------------------------------------------------
# cographs


class _Prime(Exception):
    def __init__(self, part: int):
        self.part = part


def _cotree(rows: list[int], whole: int):
    """Cotree by complement-connectivity recursion; raises _Prime on failure.

    Nodes are ``{"op": "union"|"join", "children": [...]}`` or a vertex id.
    """
    root: dict = {}
    stack = [(whole, root)]
    while stack:
        part, slot = stack.pop()
        if part & (part - 1) == 0:
            slot["leaf"] = _low(part)
            continue
        comps = search.components(rows, part)
        if len(comps) > 1:
            op = "union"
        else:
            comps = search.co_components(rows, part)
            if len(comps) == 1:
                raise _Prime(part)
            op = "join"
        slot["op"] = op
        slot["children"] = [{} for _ in comps]
        for comp, child in zip(comps, slot["children"]):
            stack.append((comp, child))
    return _compact(root)


def _compact(node: dict):
    if "leaf" in node:
        return node["leaf"]
    return {"op": node["op"], "children": [_compact(c) for c in node["children"]]}


def is_cograph(g: SimpleGraph) -> Verdict:
    if g.n == 0:
        return Verdict.vacuous()
    try:
        tree = _cotree(g.rows, g.all_mask)
    except _Prime as exc:
        path = search.find_p4(g.rows, exc.part)
        if path is None:  # pragma: no cover - contradicts the cograph theorem
            raise RuntimeError("prime part without an induced P4")
        return Verdict.no("P4", path)
    return Verdict.yes("cotree", [], tree=tree)


# ---------------------------------------------------------------------------
# chordal graphs


def lex_bfs(rows: list[int]) -> list[int]:
    """Lexicographic BFS by partition refinement on bitmask parts.

    Ties are broken by the lowest vertex id in the leading part.
    """
    n = len(rows)
    parts = [(1 << n) - 1] if n else []
    order = []
    while parts:
        head = parts[0]
        v = _low(head)
        order.append(v)
        parts[0] = head & ~(1 << v)
        nv = rows[v]
        refined = []
        for part in parts:
            inside = part & nv
            if inside:
                refined.append(inside)
            outside = part & ~nv
            if outside:
                refined.append(outside)
        parts = refined
    return order


def is_chordal(g: SimpleGraph) -> Verdict:
    """Reverse LexBFS order checked as a perfect elimination ordering."""
    if g.n == 0:
        return Verdict.vacuous()
    rows = g.rows
    peo = lex_bfs(rows)[::-1]
    pos = [0] * g.n
    for i, v in enumerate(peo):
        pos[v] = i
    after = [0] * g.n
    acc = 0
    for v in reversed(peo):
        after[v] = acc
        acc |= 1 << v
    for v in peo:
        ln = rows[v] & after[v]
        if not ln:
            continue
        u = min(bits(ln), key=pos.__getitem__)
        bad = ln & ~(1 << u) & ~rows[u]
        if bad:
            cyc = search.hole_through(rows, v, u)
            if cyc is None:
                cyc = search.hole_through(rows, v, _low(bad))
            if cyc is None:
                cyc = search.find_hole(rows)
            if cyc is None:  # pragma: no cover
                raise RuntimeError("elimination failure without a hole")
            return Verdict.no("C4" if len(cyc) == 4 else "hole", cyc)
    return Verdict.yes("peo", peo)


def c4_free(g: SimpleGraph) -> Verdict:
    """C4-freeness by direct search, independent of the chordal recognizer."""
    if g.n == 0:
        return Verdict.vacuous()
    cyc = search.find_c4(g.rows)
    if cyc is None:
        return Verdict.yes("c4-search", [])
    return Verdict.no("C4", cyc)


# ---------------------------------------------------------------------------
# split and threshold graphs


def _split_obstruction(rows: list[int], within: int | None = None) -> Witness | None:
    for kind, fn in (("2K2", search.find_2k2), ("C4", search.find_c4),
                     ("C5", search.find_c5)):
        found = fn(rows, within)
        if found is not None:
            return Witness(kind, found)
    return None


def is_split(g: SimpleGraph) -> Verdict:
    """Hammer-Simeone degree-sequence test."""
    if g.n == 0:
        return Verdict.vacuous()
    deg = g.degrees()
    order = sorted(range(g.n), key=lambda v: (-deg[v], v))
    d = [deg[v] for v in order]
    m = max(i + 1 for i in range(g.n) if d[i] >= i)
    if sum(d[:m]) == m * (m - 1) + sum(d[m:]):
        return Verdict.yes("split-partition", order[:m], independent=order[m:])
    w = _split_obstruction(g.rows)
    if w is None:  # pragma: no cover
        raise RuntimeError("degree test failed but no C4/C5/2K2 found")
    return Verdict(Status.FALSE, w)


def is_threshold(g: SimpleGraph) -> Verdict:
    """Peel isolated or dominating vertices until nothing is left."""
    if g.n == 0:
        return Verdict.vacuous()
    rows = g.rows
    alive = g.all_mask
    deg = g.degrees()
    size = g.n
    peel, moves = [], []
    while alive:
        iso = [v for v in bits(alive) if deg[v] == 0]
        dom = [v for v in bits(alive) if deg[v] == size - 1]
        if iso:
            v, move = iso[0], "isolated"
        elif dom:
            v, move = dom[0], "dominating"
        else:
            break
        peel.append(v)
        moves.append(move)
        alive &= ~(1 << v)
        size -= 1
        for w in bits(rows[v] & alive):
            deg[w] -= 1
    if not alive:
        return Verdict.yes("peel-order", peel, moves=moves)
    for kind, fn in (("2K2", search.find_2k2), ("C4", search.find_c4),
                     ("P4", search.find_p4)):
        found = fn(rows, alive)
        if found is not None:
            return Verdict.no(kind, found)
    raise RuntimeError("peeling stuck but no P4/C4/2K2 found")  # pragma: no cover


# ---------------------------------------------------------------------------
# bipartite, Eulerian


def is_bipartite(g: SimpleGraph) -> Verdict:
    if g.n == 0:
        return Verdict.vacuous()
    cycle, color = search.odd_cycle_or_coloring(g.rows)
    if cycle is not None:
        return Verdict.no("odd-cycle", cycle)
    return Verdict.yes("2-coloring", [v for v in range(g.n) if color[v] == 0])


def is_eulerian(g: SimpleGraph) -> Verdict:
    """Connected and every degree even (a disconnected graph is never Eulerian)."""
    if g.n == 0:
        return Verdict.vacuous()
    for v, r in enumerate(g.rows):
        if r.bit_count() % 2:
            return Verdict.no("odd-degree-vertex", [v])
    comps = search.components(g.rows)
    if len(comps) > 1:
        return Verdict.no("disconnected", list(bits(comps[0])))
    return Verdict.yes("euler-circuit", search.euler_circuit(g.rows))


# ---------------------------------------------------------------------------
# dominating vertices, stars


def dominating_vertices(g: SimpleGraph) -> list[int]:
    return [v for v, r in enumerate(g.rows) if r.bit_count() == g.n - 1]


def _non_dominating_set(g: SimpleGraph) -> list[int]:
    """Vertices whose closed neighbourhoods have empty common intersection."""
    closed = [r | (1 << v) for v, r in enumerate(g.rows)]
    common = g.all_mask
    chosen: list[int] = []
    while common:
        x = _low(common)
        y = _low(g.all_mask & ~closed[x])
        chosen.append(y)
        common &= closed[y]
    return chosen


def is_dominatable(g: SimpleGraph) -> Verdict:
    if g.n == 0:
        return Verdict.vacuous()
    dom = dominating_vertices(g)
    if dom:
        return Verdict.yes("dominating-vertex", dom[:1])
    return Verdict.no("non-dominating-set", _non_dominating_set(g))


def is_star(g: SimpleGraph) -> Verdict:
    """g isomorphic to K_{1,n} with n >= 1."""
    if g.n == 0:
        return Verdict.vacuous()
    if g.n == 1:
        return Verdict.no("too-few-vertices", [0])
    dom = dominating_vertices(g)
    if not dom:
        return Verdict.no("non-dominating-set", _non_dominating_set(g))
    c = dom[0]
    for a, row in enumerate(g.rows):
        if a == c:
            continue
        other = row & ~(1 << c)
        if other:
            return Verdict.no("odd-cycle", [c, a, _low(other)])
    return Verdict.yes("star-center", [c])
