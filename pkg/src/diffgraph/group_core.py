"""Finite groups on indexed element sets.

Every group stores its elements as indices ``0..n-1`` with vectorised
multiplication over numpy index arrays.  Concrete backends cover the shapes
the group-spec language can build (cyclic, dihedral, dicyclic, permutation
groups, direct products) plus explicit Cayley tables.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property, reduce
from itertools import permutations

import numpy as np

__all__ = [
    "Group",
    "CyclicGroup",
    "DihedralGroup",
    "DicyclicGroup",
    "PermutationGroup",
    "ProductGroup",
    "TableGroup",
    "CyclicLattice",
    "element_order",
    "order_spectrum",
    "exponent",
    "is_eppo",
    "is_nilpotent",
    "sylow_decomposition",
    "cyclic_lattice",
    "is_prime_power",
    "prime_factors",
    "NotNilpotentError",
    "check_axioms",
    "parse_cycles",
]

TABLE_LIMIT = 2048


class NotNilpotentError(ValueError):
    pass


def prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def is_prime_power(n: int) -> bool:
    """True for p**k with k >= 1 (1 itself is not a prime power)."""
    return n > 1 and len(prime_factors(n)) == 1


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _as_index(a) -> np.ndarray:
    return np.asarray(a, dtype=np.int64)


class Group:
    """Base class: subclasses implement ``mul`` and ``inverse`` on index arrays."""

    n: int
    identity: int = 0
    spec: str = ""

    # -- element level ----------------------------------------------------
    def mul(self, a, b):
        raise NotImplementedError

    def inverse(self, a):
        raise NotImplementedError

    def name(self, g: int) -> str:
        return str(g)

    @cached_property
    def names(self) -> list[str]:
        return [self.name(g) for g in range(self.n)]

    @cached_property
    def name_index(self) -> dict[str, int]:
        return {s: i for i, s in enumerate(self.names)}

    def index_of(self, name: str) -> int:
        return self.name_index[name]

    def __len__(self) -> int:
        return self.n

    @property
    def elements(self) -> np.ndarray:
        return np.arange(self.n, dtype=np.int64)

    def power(self, g, k: int):
        """g**k for an index or index array, by binary powering."""
        g = _as_index(g)
        result = np.full(g.shape, self.identity, dtype=np.int64)
        base = g.copy()
        while k:
            if k & 1:
                result = self.mul(result, base)
            k >>= 1
            if k:
                base = self.mul(base, base)
        return result

    def powers(self, g: int) -> np.ndarray:
        """[g^0, g^1, ..., g^(o(g)-1)]."""
        out = [self.identity]
        cur = int(g)
        while cur != self.identity:
            out.append(cur)
            cur = int(self.mul(cur, g))
        return np.asarray(out, dtype=np.int64)

    @cached_property
    def table(self) -> np.ndarray | None:
        """Full Cayley table for small groups, ``None`` above TABLE_LIMIT."""
        if self.n > TABLE_LIMIT:
            return None
        a, b = np.meshgrid(self.elements, self.elements, indexing="ij")
        return self.mul(a, b).astype(np.int64)

    @cached_property
    def inv(self) -> np.ndarray:
        return _as_index(self.inverse(self.elements))

    @cached_property
    def orders(self) -> np.ndarray:
        """Order of every element.

        Tests divisors of |G| in increasing order; the first divisor d with
        g**d == e is o(g).
        """
        orders = np.zeros(self.n, dtype=np.int64)
        pending = self.elements
        for d in _divisors(self.n):
            if pending.size == 0:
                break
            hit = self.power(pending, d) == self.identity
            orders[pending[hit]] = d
            pending = pending[~hit]
        if pending.size:
            raise ValueError("element orders do not divide |G|; not a group")
        return orders

    def commutes_with(self, x: int, ys) -> np.ndarray:
        ys = _as_index(ys)
        xs = np.full(ys.shape, x, dtype=np.int64)
        return self.mul(xs, ys) == self.mul(ys, xs)

    def subgroup(self, elements) -> "TableGroup":
        """Subset closed under multiplication, re-indexed as a Cayley table."""
        elements = sorted(int(e) for e in elements)
        if self.identity not in elements:
            raise ValueError("subset does not contain the identity")
        pos = {g: i for i, g in enumerate(elements)}
        idx = np.asarray(elements, dtype=np.int64)
        a, b = np.meshgrid(idx, idx, indexing="ij")
        prod = self.mul(a, b)
        try:
            table = np.vectorize(pos.__getitem__, otypes=[np.int64])(prod)
        except KeyError:
            raise ValueError("subset is not closed under multiplication") from None
        return TableGroup(table, names=[self.names[g] for g in elements],
                          parent_index=idx)

    @cached_property
    def lattice(self) -> "CyclicLattice":
        return cyclic_lattice(self)


# ---------------------------------------------------------------------------
# backends


class CyclicGroup(Group):
    """Z_n as integers mod n."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("cyclic group order must be >= 1")
        self.n = n
        self.identity = 0

    def mul(self, a, b):
        return (_as_index(a) + _as_index(b)) % self.n

    def inverse(self, a):
        return (-_as_index(a)) % self.n

    def powers(self, g):
        g = int(g)
        return (np.arange(self.n // math.gcd(g, self.n), dtype=np.int64) * g) % self.n

    @cached_property
    def orders(self):
        return self.n // np.gcd(self.elements, self.n)


class DihedralGroup(Group):
    """D_{2m} = <x, y | x^m = y^2 = e, xy = yx^-1>; index = f*m + i for x^i y^f."""

    def __init__(self, m: int):
        if m < 3:
            raise ValueError("dihedral group needs m >= 3")
        self.m = m
        self.n = 2 * m
        self.identity = 0

    def _split(self, a):
        a = _as_index(a)
        return a % self.m, a // self.m

    def mul(self, a, b):
        i, f = self._split(a)
        j, g = self._split(b)
        sign = 1 - 2 * f
        return ((i + sign * j) % self.m) + self.m * (f ^ g)

    def inverse(self, a):
        i, f = self._split(a)
        return np.where(f == 1, a, (-i) % self.m)

    def name(self, g):
        i, f = int(g) % self.m, int(g) // self.m
        parts = []
        if i:
            parts.append("x" if i == 1 else f"x^{i}")
        if f:
            parts.append("y")
        return " ".join(parts) or "e"


class DicyclicGroup(Group):
    """Q_{4n} = <a, b | a^{2n} = e, a^n = b^2, ba = a^-1 b>; index = j*2n + i for a^i b^j."""

    def __init__(self, n: int):
        if n < 2:
            raise ValueError("dicyclic group needs n >= 2")
        self.half = n
        self.k = 2 * n
        self.n = 4 * n
        self.identity = 0

    def mul(self, a, b):
        a, b = _as_index(a), _as_index(b)
        i, j = a % self.k, a // self.k
        s, t = b % self.k, b // self.k
        # a^i b^j a^s b^t = a^(i + (-1)^j s) b^(j+t), and b^2 = a^n
        e = i + (1 - 2 * j) * s + self.half * (j & t)
        return (e % self.k) + self.k * (j ^ t)

    def inverse(self, a):
        a = _as_index(a)
        i, j = a % self.k, a // self.k
        # (a^i b)^-1 = a^(i+n) b
        return np.where(j == 1, ((i + self.half) % self.k) + self.k, (-i) % self.k)

    def name(self, g):
        i, j = int(g) % self.k, int(g) // self.k
        parts = []
        if i:
            parts.append("a" if i == 1 else f"a^{i}")
        if j:
            parts.append("b")
        return " ".join(parts) or "e"


def _cycle_string(perm) -> str:
    seen = [False] * len(perm)
    cycles = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            continue
        cyc = []
        k = start
        while not seen[k]:
            seen[k] = True
            cyc.append(k + 1)
            k = perm[k]
        cycles.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(cycles) or "()"


def parse_cycles(text: str, degree: int) -> np.ndarray:
    """Cycle notation on points 1..degree (e.g. '(1 2)(3 4 5)') to an image array."""
    perm = np.arange(degree, dtype=np.int64)
    text = text.strip()
    if text in ("", "()", "e"):
        return perm
    for chunk in text.replace(")", ")\0").split("\0"):
        chunk = chunk.strip()
        if not chunk:
            continue
        pts = [int(t) - 1 for t in chunk.strip("()").replace(",", " ").split()]
        # cycles are composed right to left; within a disjoint product order is moot
        img = perm.copy()
        for a, b in zip(pts, pts[1:] + pts[:1]):
            img[a] = b
        perm = img[perm]
    return perm


class PermutationGroup(Group):
    """S_n or A_n on points 0..d-1, elements in lexicographic order.

    Composition is left-to-right as functions applied right first:
    ``(p*q)(i) = p(q(i))``.
    """

    def __init__(self, degree: int, alternating: bool = False):
        if degree < 1:
            raise ValueError("degree must be >= 1")
        self.degree = degree
        perms = np.array(list(permutations(range(degree))), dtype=np.int8)
        if perms.ndim == 1:
            perms = perms.reshape(1, degree)
        full_rank = np.arange(len(perms), dtype=np.int64)
        if alternating:
            keep = self._parity(perms) == 0
            perms = perms[keep]
            lookup = np.full(len(full_rank), -1, dtype=np.int64)
            lookup[keep] = np.arange(int(keep.sum()), dtype=np.int64)
        else:
            lookup = full_rank
        self.perms = perms
        self._lookup = lookup
        self.alternating = alternating
        self.n = len(perms)
        self.identity = 0
        self._fact = np.array([math.factorial(degree - 1 - i) for i in range(degree)],
                              dtype=np.int64)

    @staticmethod
    def _parity(perms: np.ndarray) -> np.ndarray:
        d = perms.shape[1]
        inv = np.zeros(len(perms), dtype=np.int64)
        for i in range(d):
            for j in range(i + 1, d):
                inv += perms[:, i] > perms[:, j]
        return inv % 2

    def rank(self, perms: np.ndarray) -> np.ndarray:
        """Group index of each row of an image array (Lehmer code)."""
        perms = np.atleast_2d(perms)
        d = self.degree
        code = np.zeros(len(perms), dtype=np.int64)
        for i in range(d):
            smaller = np.zeros(len(perms), dtype=np.int64)
            for j in range(i + 1, d):
                smaller += perms[:, j] < perms[:, i]
            code += smaller * self._fact[i]
        return self._lookup[code]

    def mul(self, a, b):
        a, b = _as_index(a), _as_index(b)
        shape = np.broadcast(a, b).shape
        a = np.broadcast_to(a, shape).ravel()
        b = np.broadcast_to(b, shape).ravel()
        pa, pb = self.perms[a], self.perms[b]
        composed = np.take_along_axis(pa, pb.astype(np.int64), axis=1)
        return self.rank(composed).reshape(shape)

    def commutes_with(self, x: int, ys) -> np.ndarray:
        # compare image arrays directly, skipping the rank lookup
        ys = _as_index(ys)
        px = self.perms[int(x)].astype(np.intp)
        py = self.perms[ys.ravel()]
        same = np.all(px[py] == py[:, px], axis=1)
        return same.reshape(ys.shape)

    def inverse(self, a):
        a = _as_index(a)
        shape = a.shape
        p = self.perms[a.ravel()].astype(np.int64)
        inv = np.empty_like(p)
        rows = np.arange(len(p))[:, None]
        inv[rows, p] = np.arange(self.degree)
        return self.rank(inv).reshape(shape)

    def powers(self, g):
        p = self.perms[int(g)].astype(np.int64)
        stack = [np.arange(self.degree)]
        cur = p
        while not np.array_equal(cur, stack[0]):
            stack.append(cur)
            cur = p[cur]
        return self.rank(np.array(stack))

    @cached_property
    def orders(self):
        out = np.empty(self.n, dtype=np.int64)
        for g, p in enumerate(self.perms):
            out[g] = _perm_order(p)
        return out

    def name(self, g):
        return _cycle_string(self.perms[int(g)])

    def from_cycles(self, text: str) -> int:
        idx = int(self.rank(parse_cycles(text, self.degree))[0])
        if idx < 0:
            raise ValueError(f"{text} is not in this group")
        return idx


def _perm_order(p) -> int:
    seen = [False] * len(p)
    result = 1
    for s in range(len(p)):
        if seen[s]:
            continue
        length = 0
        k = s
        while not seen[k]:
            seen[k] = True
            k = p[k]
            length += 1
        result = result * length // math.gcd(result, length)
    return result


class ProductGroup(Group):
    """Direct product; index is mixed-radix with the first factor most significant."""

    def __init__(self, factors: list[Group]):
        if not factors:
            raise ValueError("empty direct product")
        self.factors = list(factors)
        sizes = [f.n for f in self.factors]
        self.n = math.prod(sizes)
        self._radix = [math.prod(sizes[i + 1:]) for i in range(len(sizes))]
        self.identity = self.join([f.identity for f in self.factors])

    def split(self, a) -> list[np.ndarray]:
        a = _as_index(a)
        return [(a // r) % f.n for f, r in zip(self.factors, self._radix)]

    def join(self, parts) -> np.ndarray:
        return sum(_as_index(p) * r for p, r in zip(parts, self._radix))

    def mul(self, a, b):
        return self.join([f.mul(x, y) for f, x, y in
                          zip(self.factors, self.split(a), self.split(b))])

    def inverse(self, a):
        return self.join([f.inverse(x) for f, x in zip(self.factors, self.split(a))])

    def powers(self, g):
        parts = [int(x) for x in self.split(int(g))]
        comp = [f.powers(x) for f, x in zip(self.factors, parts)]
        o = reduce(lambda u, v: u * v // math.gcd(u, v), (len(c) for c in comp), 1)
        k = np.arange(o)
        return self.join([c[k % len(c)] for c in comp])

    @cached_property
    def orders(self):
        parts = self.split(self.elements)
        result = np.ones(self.n, dtype=np.int64)
        for f, x in zip(self.factors, parts):
            result = np.lcm(result, f.orders[x])
        return result

    def name(self, g):
        parts = [int(x) for x in self.split(int(g))]
        return "(" + ", ".join(f.name(x) for f, x in zip(self.factors, parts)) + ")"


class TableGroup(Group):
    """Group given by an explicit multiplication table."""

    def __init__(self, table, names: list[str] | None = None, parent_index=None):
        table = np.asarray(table, dtype=np.int64)
        n = table.shape[0]
        if table.shape != (n, n) or n == 0:
            raise ValueError("multiplication table must be a non-empty square array")
        self._table = table
        self.n = n
        ident = [e for e in range(n)
                 if np.array_equal(table[e], np.arange(n))
                 and np.array_equal(table[:, e], np.arange(n))]
        if not ident:
            raise ValueError("table has no identity element")
        self.identity = ident[0]
        self._names = names
        self.parent_index = parent_index

    @cached_property
    def table(self):
        return self._table

    def mul(self, a, b):
        return self._table[_as_index(a), _as_index(b)]

    def inverse(self, a):
        a = _as_index(a)
        rows = self._table[a.ravel()] == self.identity
        return rows.argmax(axis=-1).reshape(a.shape)

    def name(self, g):
        if self._names is not None:
            return self._names[int(g)]
        return f"g{int(g)}"


def check_axioms(group: Group, samples: int = 10_000, seed: int = 0,
                 full_limit: int = 200) -> None:
    """Raise ValueError unless closure, identity, inverses and associativity hold.

    Associativity is checked exhaustively for |G| <= full_limit and on
    ``samples`` random triples otherwise.
    """
    n = group.n
    e = group.identity
    elts = group.elements
    if not (np.array_equal(group.mul(e, elts), elts)
            and np.array_equal(group.mul(elts, e), elts)):
        raise ValueError("identity law fails")
    inv = group.inv
    if not np.all(group.mul(elts, inv) == e) or not np.all(group.mul(inv, elts) == e):
        raise ValueError("inverse law fails")
    if n <= full_limit:
        a, b, c = (x.ravel() for x in np.meshgrid(elts, elts, elts, indexing="ij"))
    else:
        rng = np.random.default_rng(seed)
        a, b, c = rng.integers(0, n, size=(3, samples))
    left = group.mul(group.mul(a, b), c)
    right = group.mul(a, group.mul(b, c))
    if not np.array_equal(left, right):
        raise ValueError("associativity fails")


# ---------------------------------------------------------------------------
# element arithmetic


def element_order(group: Group, g: int) -> int:
    return int(group.orders[g])


def order_spectrum(group: Group) -> set[int]:
    return {int(o) for o in np.unique(group.orders)}


def exponent(group: Group) -> int:
    return reduce(lambda a, b: a * b // math.gcd(a, b), order_spectrum(group), 1)


def is_eppo(group: Group) -> bool:
    return all(o == 1 or is_prime_power(o) for o in order_spectrum(group))


def is_nilpotent(group: Group) -> bool:
    """Elements of coprime order commute.

    Restricting the scan to prime-power-order elements is enough: every
    element is a product of commuting prime-power powers of itself.
    """
    orders = group.orders
    ppo = np.array([is_prime_power(int(o)) for o in orders])
    prime_of = np.zeros(group.n, dtype=np.int64)
    for g in np.flatnonzero(ppo):
        prime_of[g] = prime_factors(int(orders[g]))[0]
    candidates = np.flatnonzero(ppo)
    for x in candidates:
        others = candidates[prime_of[candidates] > prime_of[x]]
        if others.size and not np.all(group.commutes_with(int(x), others)):
            return False
    return True


def sylow_decomposition(group: Group) -> list[tuple[int, frozenset[int]]]:
    if not is_nilpotent(group):
        raise NotNilpotentError("Sylow decomposition requires a nilpotent group")
    orders = group.orders
    out = []
    for p in prime_factors(group.n):
        members = [g for g in range(group.n)
                   if orders[g] == 1 or (is_prime_power(int(orders[g]))
                                         and orders[g] % p == 0)]
        idx = np.asarray(members, dtype=np.int64)
        a, b = np.meshgrid(idx, idx, indexing="ij")
        if not np.isin(group.mul(a, b), idx).all():
            raise ValueError(f"{p}-elements are not closed under multiplication")
        out.append((p, frozenset(members)))
    if math.prod(len(s) for _, s in out) != group.n:
        raise ValueError("Sylow subgroup orders do not multiply to |G|")
    return out


# ---------------------------------------------------------------------------
# cyclic subgroup lattice


@dataclass
class CyclicSubgroup:
    elements: frozenset[int]
    generator: int
    order: int
    powers: tuple[int, ...]  # generator^k for k = 0..order-1

    @cached_property
    def generators(self) -> list[int]:
        return [self.powers[k] for k in range(self.order)
                if math.gcd(k, self.order) == 1]


@dataclass
class CyclicLattice:
    subgroups: list[CyclicSubgroup]
    maximal: list[bool]
    membership: list[list[int]]
    generated_by: np.ndarray = field(repr=False)  # id of <g> per element

    def maximal_ids(self) -> list[int]:
        return [i for i, m in enumerate(self.maximal) if m]

    def subgroup_of(self, g: int) -> CyclicSubgroup:
        return self.subgroups[int(self.generated_by[g])]


def cyclic_lattice(group: Group) -> CyclicLattice:
    """Enumerate every <g> once.

    Elements are visited in decreasing order; each visited g contributes
    <g> and all of its subgroups <g^d>, d | o(g), read off g's power list,
    and every generator of those subgroups is marked done.
    """
    orders = group.orders
    n = group.n
    sub_id = np.full(n, -1, dtype=np.int64)
    subgroups: list[CyclicSubgroup] = []
    by_key: dict[frozenset[int], int] = {}
    for g in np.argsort(-orders, kind="stable"):
        g = int(g)
        if sub_id[g] >= 0:
            continue
        pw = group.powers(g)
        o = len(pw)
        for d in _divisors(o):
            if sub_id[pw[d % o]] >= 0:
                continue
            k = o // d
            pows = tuple(int(pw[(d * j) % o]) for j in range(k))
            key = frozenset(pows)
            sid = by_key.get(key)
            if sid is None:
                sid = len(subgroups)
                by_key[key] = sid
                subgroups.append(CyclicSubgroup(key, pows[1 % k] if k > 1 else pows[0],
                                                k, pows))
            for j in range(k):
                if math.gcd(j, k) == 1:
                    sub_id[pows[j]] = sid
    membership: list[list[int]] = [[] for _ in range(n)]
    for sid, s in enumerate(subgroups):
        for x in s.elements:
            membership[x].append(sid)
    # <h> is properly contained in some cyclic subgroup iff a generator of
    # <h> lies in a larger one; compare against subgroups of multiple order
    maximal = []
    for sid, s in enumerate(subgroups):
        rep = s.generator
        maximal.append(all(subgroups[t].order == s.order for t in membership[rep]))
    return CyclicLattice(subgroups, maximal, membership, sub_id)
