"""Independent re-verification of recognizer witnesses.

Nothing here calls a recognizer; each check works from the adjacency rows
and the certificate alone.  ``check_verdict`` raises :class:`CertificateError`
on any defect and returns None otherwise.
"""

from __future__ import annotations

from itertools import combinations

from ..graphs import SimpleGraph, bits
from .verdict import Status, Verdict, Witness


class CertificateError(AssertionError):
    pass


def _fail(msg: str):
    raise CertificateError(msg)


def _require(cond: bool, msg: str) -> None:
    if not cond:
        _fail(msg)


def _distinct(g: SimpleGraph, vs: list[int]) -> None:
    _require(len(set(vs)) == len(vs), f"repeated vertex in {vs}")
    for v in vs:
        _require(0 <= v < g.n, f"vertex {v} out of range")


# ---------------------------------------------------------------------------
# forbidden induced structures


def check_induced_path(g: SimpleGraph, vs: list[int]) -> None:
    _distinct(g, vs)
    for i, j in combinations(range(len(vs)), 2):
        want = j == i + 1
        _require(g.adjacent(vs[i], vs[j]) == want,
                  f"path {vs}: pair {vs[i]},{vs[j]} adjacency should be {want}")


def check_induced_cycle(g: SimpleGraph, vs: list[int], min_len: int = 3) -> None:
    _distinct(g, vs)
    k = len(vs)
    _require(k >= min_len, f"cycle {vs} shorter than {min_len}")
    for i, j in combinations(range(k), 2):
        want = j == i + 1 or (i == 0 and j == k - 1)
        _require(g.adjacent(vs[i], vs[j]) == want,
                  f"cycle {vs}: pair {vs[i]},{vs[j]} adjacency should be {want}")


def check_cycle(g: SimpleGraph, vs: list[int]) -> None:
    """A (not necessarily induced) cycle."""
    _distinct(g, vs)
    _require(len(vs) >= 3, "cycle too short")
    for a, b in zip(vs, vs[1:] + vs[:1]):
        _require(g.adjacent(a, b), f"cycle {vs}: {a},{b} not adjacent")


def check_2k2(g: SimpleGraph, vs: list[int]) -> None:
    _distinct(g, vs)
    _require(len(vs) == 4, "2K2 needs four vertices")
    a, b, c, d = vs
    for x, y in combinations(vs, 2):
        want = {x, y} in ({a, b}, {c, d})
        _require(g.adjacent(x, y) == want, f"2K2 {vs}: pair {x},{y} wrong")


_FORBIDDEN = {
    "P4": lambda g, vs: (_require(len(vs) == 4, "P4 size"), check_induced_path(g, vs)),
    "C4": lambda g, vs: (_require(len(vs) == 4, "C4 size"), check_induced_cycle(g, vs)),
    "C5": lambda g, vs: (_require(len(vs) == 5, "C5 size"), check_induced_cycle(g, vs)),
    "hole": lambda g, vs: check_induced_cycle(g, vs, 4),
    "2K2": check_2k2,
}


# ---------------------------------------------------------------------------
# positive certificates


def check_cotree(g: SimpleGraph, tree) -> None:
    seen: list[int] = []

    def walk(node) -> list[int]:
        if isinstance(node, int):
            seen.append(node)
            return [node]
        op = node["op"]
        _require(op in ("union", "join"), f"bad cotree op {op}")
        _require(len(node["children"]) >= 2, "cotree node with < 2 children")
        groups = [walk(c) for c in node["children"]]
        for x, y in combinations(range(len(groups)), 2):
            for a in groups[x]:
                for b in groups[y]:
                    _require(g.adjacent(a, b) == (op == "join"),
                              f"cotree {op} wrong for {a},{b}")
        return [v for grp in groups for v in grp]

    walk(tree)
    _require(sorted(seen) == list(range(g.n)), "cotree leaves are not the vertex set")


def check_peo(g: SimpleGraph, order: list[int]) -> None:
    _require(sorted(order) == list(range(g.n)), "PEO is not a permutation")
    later = g.all_mask
    for v in order:
        later &= ~(1 << v)
        ln = g.rows[v] & later
        for u in bits(ln):
            _require(ln & ~(1 << u) & ~g.rows[u] == 0,
                      f"later neighbours of {v} are not a clique")


def check_split_partition(g: SimpleGraph, clique: list[int], independent: list[int]) -> None:
    _require(sorted(clique + independent) == list(range(g.n)), "not a partition")
    for a, b in combinations(clique, 2):
        _require(g.adjacent(a, b), f"clique side has non-edge {a},{b}")
    for a, b in combinations(independent, 2):
        _require(not g.adjacent(a, b), f"independent side has edge {a},{b}")


def check_peel(g: SimpleGraph, order: list[int]) -> None:
    _require(sorted(order) == list(range(g.n)), "peel order is not a permutation")
    alive = g.all_mask
    for v in order:
        deg = (g.rows[v] & alive).bit_count()
        size = alive.bit_count()
        _require(deg == 0 or deg == size - 1, f"{v} neither isolated nor dominating")
        alive &= ~(1 << v)


def check_two_coloring(g: SimpleGraph, side: list[int]) -> None:
    _distinct(g, side)
    left = 0
    for v in side:
        left |= 1 << v
    right = g.all_mask & ~left
    for v in range(g.n):
        own = left if left >> v & 1 else right
        _require(g.rows[v] & own == 0, f"edge inside a colour class at {v}")


def check_euler_circuit(g: SimpleGraph, walk: list[int]) -> None:
    if g.n == 1 and walk == [0]:
        return  # trivial closed trail
    _require(len(walk) >= 2 and walk[0] == walk[-1], "circuit is not closed")
    used = set()
    for a, b in zip(walk, walk[1:]):
        _require(g.adjacent(a, b), f"circuit uses non-edge {a},{b}")
        e = (min(a, b), max(a, b))
        _require(e not in used, f"edge {e} used twice")
        used.add(e)
    _require(len(used) == g.edge_count, "circuit misses edges")
    _require(set(walk) == set(range(g.n)), "circuit misses vertices")


def _components(g: SimpleGraph) -> list[set[int]]:
    left = set(range(g.n))
    out = []
    while left:
        start = min(left)
        comp, stack = {start}, [start]
        while stack:
            v = stack.pop()
            for w in bits(g.rows[v]):
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        out.append(comp)
        left -= comp
    return out


def trace_faces(g: SimpleGraph, rotation: dict) -> list[list[int]]:
    """Face boundary walks of a rotation system (lists of vertices)."""
    rot = {v: [int(w) for w in rotation[str(v)]] for v in range(g.n)}
    for v in range(g.n):
        _require(sorted(rot[v]) == g.neighbors(v), f"rotation at {v} is not N({v})")
    pos = {v: {w: i for i, w in enumerate(r)} for v, r in rot.items()}
    faces, seen = [], set()
    for u in range(g.n):
        for v in rot[u]:
            if (u, v) in seen:
                continue
            face = []
            a, b = u, v
            while (a, b) not in seen:
                seen.add((a, b))
                face.append(a)
                nb = rot[b]
                a, b = b, nb[(pos[b][a] + 1) % len(nb)]
            faces.append(face)
    return faces


def check_rotation(g: SimpleGraph, rotation: dict, outer: bool = False) -> None:
    faces = trace_faces(g, rotation)
    for comp in _components(g):
        if len(comp) == 1:
            continue
        cf = [f for f in faces if f[0] in comp]
        edges = sum(g.degree(v) for v in comp) // 2
        _require(len(comp) - edges + len(cf) == 2,
                  f"Euler count fails on component of size {len(comp)}")
        if outer:
            _require(any(set(f) == comp for f in cf),
                      "no face carries every vertex of a component")


def check_subdivision(g: SimpleGraph, kind: str, branch: list[int], data: dict) -> None:
    _distinct(g, branch)
    if kind in ("K5", "K4"):
        size = 5 if kind == "K5" else 4
        _require(len(branch) == size, f"{kind} needs {size} branch vertices")
        need = {frozenset(p) for p in combinations(branch, 2)}
    else:
        left, right = data["parts"]
        sizes = (3, 3) if kind == "K33" else (2, 3)
        _require((len(left), len(right)) == sizes, f"{kind} part sizes wrong")
        _require(sorted(left + right) == sorted(branch), "parts differ from branch set")
        need = {frozenset((a, b)) for a in left for b in right}
    bset = set(branch)
    internal: set[int] = set()
    got = set()
    for path in data["paths"]:
        _require(len(path) >= 2, "path too short")
        ends = frozenset((path[0], path[-1]))
        _require(ends in need, f"path joins {path[0]},{path[-1]} which is not required")
        _require(ends not in got, f"pair {sorted(ends)} joined twice")
        got.add(ends)
        for a, b in zip(path, path[1:]):
            _require(g.adjacent(a, b), f"path uses non-edge {a},{b}")
        for x in path[1:-1]:
            _require(x not in bset and x not in internal, f"path vertex {x} reused")
            internal.add(x)
    _require(got == need, f"{kind}: missing branch paths")


# ---------------------------------------------------------------------------


def check_witness(g: SimpleGraph, w: Witness) -> None:
    """Check a witness for the statement its kind asserts about ``g``."""
    vs, data, kind = list(w.vertices), w.data, w.kind
    if kind in _FORBIDDEN:
        _FORBIDDEN[kind](g, vs)
    elif kind == "odd-cycle":
        check_cycle(g, vs)
        _require(len(vs) % 2 == 1, "odd cycle has even length")
    elif kind == "cotree":
        check_cotree(g, data["tree"])
    elif kind == "peo":
        check_peo(g, vs)
    elif kind == "split-partition":
        check_split_partition(g, vs, list(data["independent"]))
    elif kind == "peel-order":
        check_peel(g, vs)
    elif kind == "2-coloring":
        check_two_coloring(g, vs)
    elif kind == "euler-circuit":
        check_euler_circuit(g, vs)
    elif kind == "odd-degree-vertex":
        _require(len(vs) == 1 and g.degree(vs[0]) % 2 == 1, "vertex degree is even")
    elif kind == "disconnected":
        _distinct(g, vs)
        mask = sum(1 << v for v in vs)
        _require(0 < len(vs) < g.n, "component must be a proper nonempty subset")
        _require(all(g.rows[v] & ~mask == 0 for v in vs), "set has outgoing edges")
    elif kind in ("dominating-vertex", "star-center"):
        _require(len(vs) == 1, "expected one vertex")
        c = vs[0]
        _require(g.degree(c) == g.n - 1, f"{c} does not dominate")
        if kind == "star-center":
            _require(g.n >= 2, "star needs an edge")
            _require(all(g.degree(v) == 1 for v in range(g.n) if v != c), "leaf degree != 1")
    elif kind == "non-dominating-set":
        _distinct(g, vs)
        common = g.all_mask
        for v in vs:
            common &= g.rows[v] | (1 << v)
        _require(common == 0, "closed neighbourhoods share a vertex")
    elif kind == "too-few-vertices":
        _require(g.n < 2, "graph has at least two vertices")
    elif kind in ("rotation", "outer-rotation"):
        check_rotation(g, data["rotation"], outer=kind == "outer-rotation")
    elif kind in ("K5", "K33", "K4", "K23"):
        check_subdivision(g, kind, vs, data)
    else:
        _fail(f"unknown witness kind {kind!r}")


# witness kinds that prove a class holds (True) or fails (False)
PROOF_KINDS = {
    "cograph": ({"cotree"}, {"P4"}),
    "chordal": ({"peo"}, {"C4", "hole"}),
    "c4_free": ({"c4-search"}, {"C4"}),
    "split": ({"split-partition"}, {"2K2", "C4", "C5"}),
    "threshold": ({"peel-order"}, {"2K2", "C4", "P4"}),
    "star": ({"star-center"}, {"non-dominating-set", "odd-cycle", "too-few-vertices"}),
    "dominatable": ({"dominating-vertex"}, {"non-dominating-set"}),
    "bipartite": ({"2-coloring"}, {"odd-cycle"}),
    "eulerian": ({"euler-circuit"}, {"odd-degree-vertex", "disconnected"}),
    "planar": ({"rotation"}, {"K5", "K33"}),
    "outerplanar": ({"outer-rotation"}, {"K4", "K23"}),
}


def check_verdict(g: SimpleGraph, cls: str, verdict: Verdict) -> None:
    if verdict.status is Status.VACUOUS:
        _require(g.n == 0, "vacuous verdict on a nonempty graph")
        return
    _require(verdict.witness is not None, "verdict without witness")
    pos, neg = PROOF_KINDS[cls]
    allowed = pos if verdict.status is Status.TRUE else neg
    w = verdict.witness
    _require(w.kind in allowed, f"{cls}: witness kind {w.kind} cannot prove {verdict.status.value}")
    if w.kind == "c4-search":
        return  # exhaustive search result, re-checked by the oracle in tests
    check_witness(g, w)
