"""Group-description language.

Grammar (case-insensitive, whitespace ignored)::

    spec := term (("x" | "*") term)*
    term := atom | "(" spec ")"
    atom := ("Z" | "D" | "Q" | "S" | "A") integer

For Z, D and Q the integer is the group order (``D30`` is dihedral of order
30, ``Q12`` dicyclic of order 12); for S and A it is the degree.  Products
are flattened into a single n-ary node.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .group_core import (
    CyclicGroup,
    DicyclicGroup,
    DihedralGroup,
    Group,
    PermutationGroup,
    ProductGroup,
    TableGroup,
    check_axioms,
)

DEFAULT_MAX_ELEMENTS = 50_000


class GroupSpecError(ValueError):
    """Base class for parse and semantic errors."""


class SpecSyntaxError(GroupSpecError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class SpecSemanticError(GroupSpecError):
    pass


class ResourceError(RuntimeError):
    pass


@dataclass(frozen=True)
class Atom:
    kind: str  # one of Z, D, Q, S, A
    value: int

    @property
    def order(self) -> int:
        if self.kind in "ZDQ":
            return self.value
        fact = math.factorial(self.value)
        return fact if self.kind == "S" or self.value < 2 else fact // 2

    def render(self) -> str:
        return f"{self.kind}{self.value}"


@dataclass(frozen=True)
class DirectProduct:
    factors: tuple

    @property
    def order(self) -> int:
        return math.prod(f.order for f in self.factors)

    def render(self) -> str:
        return " x ".join(f.render() for f in self.factors)


@dataclass(frozen=True)
class GroupSpec:
    ast: Atom | DirectProduct
    source: str

    @property
    def order(self) -> int:
        return self.ast.order

    def __str__(self) -> str:
        return self.source


def Cyclic(n: int) -> Atom:
    return Atom("Z", n)


def Dihedral(order: int) -> Atom:
    return Atom("D", order)


def Dicyclic(order: int) -> Atom:
    return Atom("Q", order)


def Symmetric(n: int) -> Atom:
    return Atom("S", n)


def Alternating(n: int) -> Atom:
    return Atom("A", n)


def render(ast: Atom | DirectProduct) -> str:
    return ast.render()


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def error(self, message: str):
        offset = len(self.text[:self.pos].encode("utf-8"))
        raise SpecSyntaxError(message, offset)

    def spec(self):
        factors = [self.term()]
        while self.peek() in ("x", "X", "*"):
            self.pos += 1
            factors.append(self.term())
        flat = []
        for f in factors:
            flat.extend(f.factors if isinstance(f, DirectProduct) else [f])
        return flat[0] if len(flat) == 1 else DirectProduct(tuple(flat))

    def term(self):
        c = self.peek()
        if c == "(":
            self.pos += 1
            node = self.spec()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            return node
        if c and c.upper() in "ZDQSA":
            kind = c.upper()
            self.pos += 1
            self.skip()
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            if start == self.pos:
                self.error(f"expected integer after '{kind}'")
            atom = Atom(kind, int(self.text[start:self.pos]))
            _validate(atom)
            return atom
        if not c:
            self.error("unexpected end of input")
        self.error(f"unexpected character {c!r}")


def _validate(atom: Atom) -> None:
    k, v = atom.kind, atom.value
    if k == "D" and (v % 2 or v < 6):
        raise SpecSemanticError(f"dihedral order must be even and >= 6, got D{v}")
    if k == "Q" and (v % 4 or v < 8):
        raise SpecSemanticError(f"dicyclic order must be a multiple of 4 and >= 8, got Q{v}")
    if k in "ZSA" and v < 1:
        raise SpecSemanticError(f"{k}{v}: order/degree must be >= 1")


def parse(text: str) -> GroupSpec:
    if not text or not text.strip():
        raise SpecSyntaxError("empty group spec", 0)
    p = _Parser(text)
    ast = p.spec()
    if p.peek():
        p.error(f"unexpected trailing input {p.peek()!r}")
    return GroupSpec(ast, text.strip())


def _build(node) -> Group:
    if isinstance(node, DirectProduct):
        return ProductGroup([_build(f) for f in node.factors])
    if node.kind == "Z":
        return CyclicGroup(node.value)
    if node.kind == "D":
        return DihedralGroup(node.value // 2)
    if node.kind == "Q":
        return DicyclicGroup(node.value // 4)
    return PermutationGroup(node.value, alternating=node.kind == "A")


def realize(spec: GroupSpec | str, max_elements: int = DEFAULT_MAX_ELEMENTS) -> Group:
    if isinstance(spec, str):
        spec = parse(spec)
    if spec.order > max_elements:
        raise ResourceError(f"{spec.source} has {spec.order} elements, cap is {max_elements}")
    group = _build(spec.ast)
    group.spec = spec.source
    return group


def load_cayley(path: str | Path, max_elements: int = DEFAULT_MAX_ELEMENTS,
                seed: int = 0) -> TableGroup:
    """Read ``n`` then ``n`` rows of ``n`` indices; row i, column j is g_i * g_j."""
    tokens = Path(path).read_text().split()
    if not tokens:
        raise GroupSpecError(f"{path}: empty Cayley file")
    try:
        values = [int(t) for t in tokens]
    except ValueError as exc:
        raise GroupSpecError(f"{path}: non-integer entry ({exc})") from None
    n = values[0]
    if n < 1:
        raise GroupSpecError(f"{path}: order must be positive")
    if n > max_elements:
        raise ResourceError(f"{path}: {n} elements exceeds cap {max_elements}")
    if len(values) != 1 + n * n:
        raise GroupSpecError(f"{path}: expected {n * n} table entries, got {len(values) - 1}")
    table = np.asarray(values[1:], dtype=np.int64).reshape(n, n)
    if table.min() < 0 or table.max() >= n:
        raise GroupSpecError(f"{path}: table entries must lie in 0..{n - 1}")
    try:
        group = TableGroup(table)
        check_axioms(group, seed=seed)
    except ValueError as exc:
        raise GroupSpecError(f"{path}: not a group ({exc})") from None
    group.spec = f"cayley:{Path(path).name}"
    return group
