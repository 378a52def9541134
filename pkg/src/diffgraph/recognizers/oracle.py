"""Naive subset-enumeration oracles used to cross-check the fast recognizers."""

from __future__ import annotations

from itertools import combinations

from ..graphs import SimpleGraph

DEFAULT_CAP = 64
# subsets of every size are enumerated for these kinds, so the cap is tighter
EXHAUSTIVE_CAP = 20


class OracleCapError(ValueError):
    pass


def _induced(g: SimpleGraph, vs: tuple[int, ...]) -> dict[int, list[int]]:
    return {v: [w for w in vs if w != v and g.adjacent(v, w)] for v in vs}


def _cycle_order(adj: dict[int, list[int]]) -> list[int] | None:
    """Vertex order of a connected 2-regular graph, else None."""
    if any(len(n) != 2 for n in adj.values()):
        return None
    start = min(adj)
    order, prev, cur = [start], None, start
    while True:
        a, b = adj[cur]
        nxt = a if a != prev else b
        if nxt == start:
            break
        order.append(nxt)
        prev, cur = cur, nxt
    return order if len(order) == len(adj) else None


def _path_order(adj: dict[int, list[int]]) -> list[int] | None:
    degs = sorted(len(n) for n in adj.values())
    if degs != [1, 1] + [2] * (len(adj) - 2):
        return None
    start = min(v for v, n in adj.items() if len(n) == 1)
    order, prev, cur = [start], None, start
    while len(order) < len(adj):
        nxt = [w for w in adj[cur] if w != prev]
        if not nxt:
            return None
        prev, cur = cur, nxt[0]
        order.append(cur)
    return order


def _two_k2(adj: dict[int, list[int]]) -> list[int] | None:
    if any(len(n) != 1 for n in adj.values()):
        return None
    a = min(adj)
    b = adj[a][0]
    c, d = sorted(v for v in adj if v not in (a, b))
    return [a, b, c, d]


def brute_force_forbidden(g: SimpleGraph, kind: str, cap: int = DEFAULT_CAP) -> list[int] | None:
    """First induced copy of ``kind`` in lexicographic subset order, or None.

    kind is one of P4, C4, C5, 2K2, Cn_chordless (any induced cycle of
    length >= 4) or odd_cycle (any odd induced cycle).
    """
    n = g.n
    if kind in ("Cn_chordless", "odd_cycle"):
        if n > min(cap, EXHAUSTIVE_CAP):
            raise OracleCapError(f"{n} vertices exceeds oracle cap {min(cap, EXHAUSTIVE_CAP)}")
        sizes = range(4, n + 1) if kind == "Cn_chordless" else range(3, n + 1, 2)
        for k in sizes:
            for vs in combinations(range(n), k):
                order = _cycle_order(_induced(g, vs))
                if order is not None:
                    return order
        return None
    if n > cap:
        raise OracleCapError(f"{n} vertices exceeds oracle cap {cap}")
    size, test = {
        "P4": (4, _path_order),
        "C4": (4, _cycle_order),
        "C5": (5, _cycle_order),
        "2K2": (4, _two_k2),
    }[kind]
    for vs in combinations(range(n), size):
        found = test(_induced(g, vs))
        if found is not None:
            return found
    return None


FORBIDDEN_SETS = {
    "cograph": ("P4",),
    "chordal": ("Cn_chordless",),
    "split": ("C4", "C5", "2K2"),
    "threshold": ("P4", "C4", "2K2"),
    "bipartite": ("odd_cycle",),
}


def brute_force_class(g: SimpleGraph, cls: str, cap: int = DEFAULT_CAP) -> bool:
    return all(brute_force_forbidden(g, k, cap) is None for k in FORBIDDEN_SETS[cls])
