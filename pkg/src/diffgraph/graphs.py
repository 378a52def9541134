"""Simple graphs on bitset rows and the four group graphs.

Adjacency rows are Python ints used as bitsets: bit ``j`` of ``rows[i]`` is
set iff ``i ~ j``.  Vertex ``i`` of a graph built from a group carries the
element index ``elements[i]`` and the display label ``labels[i]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

import numpy as np

from .group_core import Group, is_prime_power

MAX_VERTICES = 50_000


def bits(mask: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    idx = np.fromiter(indices, dtype=np.int64)
    if idx.size < 64:
        m = 0
        for i in idx.tolist():
            m |= 1 << i
        return m
    flags = np.zeros(int(idx.max()) + 1, dtype=bool)
    flags[idx] = True
    return int.from_bytes(np.packbits(flags, bitorder="little").tobytes(), "little")


@dataclass
class SimpleGraph:
    rows: list[int]
    labels: list[str]
    elements: list[int] = field(default_factory=list)
    name: str = ""

    def __post_init__(self):
        if not self.elements:
            self.elements = list(range(len(self.rows)))
        if len(self.rows) > MAX_VERTICES:
            raise ValueError(f"graph has {len(self.rows)} vertices; limit is {MAX_VERTICES}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]],
                   labels: list[str] | None = None, name: str = "") -> "SimpleGraph":
        rows = [0] * n
        for a, b in edges:
            if a == b:
                raise ValueError("loops are not allowed")
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return cls(rows, labels or [str(i) for i in range(n)], name=name)

    @property
    def n(self) -> int:
        return len(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def adjacent(self, a: int, b: int) -> bool:
        return bool(self.rows[a] >> b & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.rows[v]))

    def edges(self) -> Iterator[tuple[int, int]]:
        for a, row in enumerate(self.rows):
            for b in bits(row >> (a + 1)):
                yield a, a + 1 + b

    def is_empty(self) -> bool:
        return self.n == 0

    def vertex_of_element(self, element: int) -> int:
        return self.elements.index(element)

    def vertex_of_label(self, label: str) -> int:
        return self.labels.index(label)

    def edge_set(self) -> set[tuple[int, int]]:
        """Edges as element-index pairs (smaller first)."""
        el = self.elements
        return {tuple(sorted((el[a], el[b]))) for a, b in self.edges()}

    def check(self) -> None:
        for a, row in enumerate(self.rows):
            if row >> a & 1:
                raise ValueError(f"loop at {a}")
            for b in bits(row):
                if not self.rows[b] >> a & 1:
                    raise ValueError(f"asymmetric edge {a}-{b}")

    def to_dot(self) -> str:
        lines = [f"graph {_dot_id(self.name or 'G')} {{"]
        for label in self.labels:
            lines.append(f"  {_dot_id(label)};")
        for a, b in self.edges():
            lines.append(f"  {_dot_id(self.labels[a])} -- {_dot_id(self.labels[b])};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _dot_id(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def induced_subgraph(g: SimpleGraph, vs: Iterable[int]) -> SimpleGraph:
    """Induced subgraph on local vertex ids ``vs`` (kept in the given order)."""
    vs = list(vs)
    for v in vs:
        if not 0 <= v < g.n:
            raise IndexError(f"unknown vertex {v}")
    if len(set(vs)) != len(vs):
        raise ValueError("repeated vertex")
    pos = {v: i for i, v in enumerate(vs)}
    keep = mask_of(vs)
    rows = []
    for v in vs:
        rows.append(mask_of(pos[u] for u in bits(g.rows[v] & keep)))
    return SimpleGraph(rows, [g.labels[v] for v in vs], [g.elements[v] for v in vs],
                       name=g.name)


def complement(g: SimpleGraph) -> SimpleGraph:
    full = g.all_mask
    return SimpleGraph([full & ~r & ~(1 << i) for i, r in enumerate(g.rows)],
                       list(g.labels), list(g.elements), name=g.name)


# ---------------------------------------------------------------------------
# group graphs


def _check_size(group: Group) -> None:
    if group.n > MAX_VERTICES:
        raise ValueError(f"group has {group.n} elements; graph limit is {MAX_VERTICES}")


def _full_graph(group: Group, rows: list[int], kind: str) -> SimpleGraph:
    return SimpleGraph(rows, list(group.names), list(range(group.n)),
                       name=f"{group.spec} {kind}".strip())


def power_graph(group: Group) -> SimpleGraph:
    """a ~ b iff a in <b> or b in <a>.

    Row of a is <a> together with the generators of every cyclic subgroup
    containing a.
    """
    _check_size(group)
    lat = group.lattice
    rows = [0] * group.n
    for s in lat.subgroups:
        gens = mask_of(s.generators)
        elems = mask_of(s.elements)
        for g in s.generators:
            rows[g] |= elems
        for x in s.elements:
            rows[x] |= gens
    for i in range(group.n):
        rows[i] &= ~(1 << i)
    return _full_graph(group, rows, "power")


def enhanced_power_graph(group: Group) -> SimpleGraph:
    """x ~ y iff x, y share a maximal cyclic subgroup."""
    _check_size(group)
    lat = group.lattice
    rows = [0] * group.n
    for sid in lat.maximal_ids():
        s = lat.subgroups[sid]
        m = mask_of(s.elements)
        for x in s.elements:
            rows[x] |= m
    for i in range(group.n):
        rows[i] &= ~(1 << i)
    return _full_graph(group, rows, "enhanced")


def commuting_graph(group: Group) -> SimpleGraph:
    _check_size(group)
    n = group.n
    rows = []
    table = group.table
    elts = group.elements
    for x in range(n):
        if table is not None:
            same = table[x] == table[:, x]
        else:
            same = group.commutes_with(x, elts)
        same[x] = False
        packed = np.packbits(same, bitorder="little").tobytes()
        rows.append(int.from_bytes(packed, "little"))
    return _full_graph(group, rows, "commuting")


def difference_graph(group: Group, enhanced: SimpleGraph | None = None,
                     power: SimpleGraph | None = None) -> SimpleGraph:
    """E(enhanced) minus E(power), isolated vertices dropped."""
    if enhanced is None:
        enhanced = enhanced_power_graph(group)
    if power is None:
        power = power_graph(group)
    diff = [e & ~p for e, p in zip(enhanced.rows, power.rows)]
    keep = [v for v, r in enumerate(diff) if r]
    pos = {v: i for i, v in enumerate(keep)}
    rows = [mask_of(pos[u] for u in bits(diff[v])) for v in keep]
    return SimpleGraph(rows, [group.names[v] for v in keep], keep,
                       name=f"{group.spec} difference".strip())


def predicted_vertex_set(group: Group) -> set[int]:
    """Non-identity g with <g> not maximal and lying in a cyclic subgroup of
    non-prime-power order, read from the lattice alone."""
    lat = group.lattice
    out = set()
    for g in range(group.n):
        if g == group.identity:
            continue
        if lat.maximal[int(lat.generated_by[g])]:
            continue
        if any(not is_prime_power(lat.subgroups[s].order) for s in lat.membership[g]):
            out.add(g)
    return out


GRAPH_BUILDERS = {
    "power": power_graph,
    "enhanced": enhanced_power_graph,
    "commuting": commuting_graph,
    "difference": difference_graph,
}
