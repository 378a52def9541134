"""Targeted searches for small induced structures on bitset rows.

All functions take the adjacency ``rows`` of a graph and, optionally, a
bitmask ``within`` restricting the search to an induced subgraph.  Results
are deterministic: vertices are scanned in ascending order.
"""

from __future__ import annotations

from collections import deque

from ..graphs import bits


def _low(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def _full(rows: list[int]) -> int:
    return (1 << len(rows)) - 1


def components(rows: list[int], within: int | None = None) -> list[int]:
    """Connected components of the induced subgraph, as bitmasks."""
    rest = _full(rows) if within is None else within
    out = []
    while rest:
        start = rest & -rest
        comp = start
        frontier = start
        while frontier:
            new = 0
            for v in bits(frontier):
                new |= rows[v]
            frontier = new & rest & ~comp
            comp |= frontier
        out.append(comp)
        rest &= ~comp
    return out


def co_components(rows: list[int], within: int) -> list[int]:
    """Connected components of the complement of the induced subgraph."""
    rest = within
    out = []
    while rest:
        start = rest & -rest
        comp = start
        queue = [_low(start)]
        while queue:
            v = queue.pop()
            new = rest & ~rows[v] & ~comp
            comp |= new
            queue.extend(bits(new))
        out.append(comp)
        rest &= ~comp
    return out


def find_p4(rows: list[int], within: int | None = None) -> list[int] | None:
    """Induced path a-b-c-d."""
    S = _full(rows) if within is None else within
    for a in bits(S):
        na = rows[a] & S
        for b in bits(na):
            cs = rows[b] & S & ~na & ~(1 << a)
            for c in bits(cs):
                ds = rows[c] & S & ~na & ~rows[b] & ~(1 << a) & ~(1 << b)
                if ds:
                    return [a, b, c, _low(ds)]
    return None


def find_c4(rows: list[int], within: int | None = None) -> list[int] | None:
    """Induced 4-cycle a-b-c-d-a."""
    S = _full(rows) if within is None else within
    for a in bits(S):
        na = rows[a] & S
        two_hop = 0
        for b in bits(na):
            two_hop |= rows[b]
        two_hop &= S & ~na & ~((1 << (a + 1)) - 1)
        for c in bits(two_hop):
            common = na & rows[c]
            for b in bits(common):
                ds = common & ~rows[b] & ~(1 << b)
                if ds:
                    return [a, b, c, _low(ds)]
    return None


def find_2k2(rows: list[int], within: int | None = None) -> list[int] | None:
    """Edges a-b and c-d with no edges between them; returned as [a, b, c, d]."""
    S = _full(rows) if within is None else within
    for a in bits(S):
        for b in bits(rows[a] & S & ~((1 << (a + 1)) - 1)):
            cand = S & ~rows[a] & ~rows[b] & ~(1 << a) & ~(1 << b)
            for c in bits(cand):
                ds = rows[c] & cand
                if ds:
                    return [a, b, c, _low(ds)]
    return None


def find_c5(rows: list[int], within: int | None = None) -> list[int] | None:
    """Induced 5-cycle a-b-c-d-e-a."""
    S = _full(rows) if within is None else within
    for a in bits(S):
        na = rows[a] & S
        for b in bits(na):
            nb = rows[b]
            for c in bits(rows[b] & S & ~na & ~(1 << a)):
                for d in bits(rows[c] & S & ~na & ~nb & ~(1 << a) & ~(1 << b)):
                    es = rows[d] & na & ~nb & ~rows[c] & ~(1 << b)
                    if es:
                        return [a, b, c, d, _low(es)]
    return None


def shortest_path(rows: list[int], src: int, dst: int, allowed: int) -> list[int] | None:
    """BFS path src..dst using only vertices in ``allowed`` (src, dst included)."""
    allowed |= (1 << src) | (1 << dst)
    parent = {src: -1}
    seen = 1 << src
    queue = deque([src])
    while queue:
        v = queue.popleft()
        if v == dst:
            path = []
            while v != -1:
                path.append(v)
                v = parent[v]
            return path[::-1]
        new = rows[v] & allowed & ~seen
        seen |= new
        for w in bits(new):
            parent[w] = v
            queue.append(w)
    return None


def hole_through(rows: list[int], v: int, u: int) -> list[int] | None:
    """Chordless cycle (length >= 4) containing the edge v-u, if any.

    BFS from u avoiding N[v]; the first layer adjacent to a neighbour w of v
    outside N[u] closes a chordless cycle v, u, ..., x, w.
    """
    nv = rows[v]
    targets = nv & ~rows[u] & ~(1 << u)
    if not targets:
        return None
    allowed = _full(rows) & ~nv & ~(1 << v)
    parent = {u: -1}
    seen = 1 << u
    layer = [u]
    while layer:
        for x in layer:
            hit = rows[x] & targets
            if hit and x != u:
                w = _low(hit)
                path = []
                y = x
                while y != -1:
                    path.append(y)
                    y = parent[y]
                return [v] + path[::-1] + [w]
        nxt = []
        for x in layer:
            new = rows[x] & allowed & ~seen
            seen |= new
            for y in bits(new):
                parent[y] = x
                nxt.append(y)
        layer = nxt
    return None


def find_hole(rows: list[int]) -> list[int] | None:
    """Any chordless cycle of length >= 4."""
    for v in range(len(rows)):
        for u in bits(rows[v]):
            cyc = hole_through(rows, v, u)
            if cyc is not None:
                return cyc
    return None


def odd_cycle_or_coloring(rows: list[int]) -> tuple[list[int] | None, list[int]]:
    """BFS 2-colouring; returns (odd cycle, colours) with cycle None if bipartite."""
    n = len(rows)
    color = [-1] * n
    parent = [-1] * n
    depth = [0] * n
    for s in range(n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in bits(rows[v]):
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    parent[w] = v
                    depth[w] = depth[v] + 1
                    queue.append(w)
                elif color[w] == color[v]:
                    return _tree_cycle(v, w, parent, depth), color
    return None, color


def _tree_cycle(x: int, y: int, parent: list[int], depth: list[int]) -> list[int]:
    left, right = [x], [y]
    while depth[x] > depth[y]:
        x = parent[x]
        left.append(x)
    while depth[y] > depth[x]:
        y = parent[y]
        right.append(y)
    while x != y:
        x, y = parent[x], parent[y]
        left.append(x)
        right.append(y)
    return left + right[-2::-1]


def euler_circuit(rows: list[int]) -> list[int]:
    """Hierholzer's algorithm; caller guarantees a connected even graph."""
    remaining = list(rows)
    start = next((v for v, r in enumerate(rows) if r), 0)
    stack = [start]
    circuit = []
    while stack:
        v = stack[-1]
        if remaining[v]:
            w = _low(remaining[v])
            remaining[v] &= ~(1 << w)
            remaining[w] &= ~(1 << v)
            stack.append(w)
        else:
            circuit.append(stack.pop())
    return circuit[::-1]
