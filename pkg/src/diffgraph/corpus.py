"""Deterministic group corpus for sweeps.

Families:

* ``cyclic``       Z_n, n = 2..max
* ``dihedral``     D_n, n = 6..max step 2
* ``dicyclic``     Q_n, n = 8..max step 4
* ``product``      direct products of at least two prime-power atoms
                   (Z_{p^k}, and D/Q of 2-power order >= 8), factors in
                   canonical order so each multiset appears once
* ``symmetric``    S_n, 3 <= n <= 7 (opt-in)
* ``alternating``  A_n, 4 <= n <= 8 (opt-in)

``nilpotent`` selects cyclic, product and the 2-power dihedral/dicyclic
groups; ``default`` is cyclic, dihedral, dicyclic and product; ``all`` adds
the permutation groups.  Permutation groups are bounded by the element cap,
not by ``max_order``.
"""

from __future__ import annotations

from math import factorial

from .group_core import is_prime_power, prime_factors

BASE_FAMILIES = ("cyclic", "dihedral", "dicyclic", "product", "symmetric", "alternating")
ALIASES = {
    "default": ("cyclic", "dihedral", "dicyclic", "product"),
    "all": BASE_FAMILIES,
    "nilpotent": ("cyclic", "product", "dihedral2", "dicyclic2"),
}
MAX_SYMMETRIC = 7
MAX_ALTERNATING = 8


def resolve_families(spec: str | list[str] | tuple[str, ...]) -> set[str]:
    names = spec.split(",") if isinstance(spec, str) else list(spec)
    out: set[str] = set()
    for name in (n.strip().lower() for n in names):
        if not name:
            continue
        if name in ALIASES:
            out.update(ALIASES[name])
        elif name in BASE_FAMILIES:
            out.add(name)
        else:
            raise ValueError(f"unknown family {name!r}")
    return out


def _is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


def prime_power_atoms(max_order: int) -> list[tuple[int, str, int]]:
    """(prime, kind, order) for every prime-power atom of order <= max_order."""
    atoms = []
    for n in range(2, max_order + 1):
        if is_prime_power(n):
            p = prime_factors(n)[0]
            atoms.append((p, "Z", n))
            if p == 2 and n >= 8:
                atoms.append((p, "D", n))
                atoms.append((p, "Q", n))
    atoms.sort(key=lambda a: (a[0], a[2], a[1]))
    return atoms


def product_specs(max_order: int) -> list[str]:
    atoms = prime_power_atoms(max_order // 2)
    out = []

    def grow(start: int, order: int, chosen: list[int]) -> None:
        if len(chosen) >= 2:
            out.append(" x ".join(f"{atoms[i][1]}{atoms[i][2]}" for i in chosen))
        for i in range(start, len(atoms)):
            if order * atoms[i][2] > max_order:
                continue
            grow(i, order * atoms[i][2], chosen + [i])

    grow(0, 1, [])
    return out


def corpus_specs(max_order: int, families="default",
                 max_elements: int = 50_000) -> list[str]:
    fams = resolve_families(families) if not isinstance(families, set) else families
    specs: list[str] = []
    if "cyclic" in fams:
        specs += [f"Z{n}" for n in range(2, max_order + 1)]
    if "dihedral" in fams:
        specs += [f"D{n}" for n in range(6, max_order + 1, 2)]
    elif "dihedral2" in fams:
        specs += [f"D{n}" for n in range(8, max_order + 1, 2) if _is_power_of_two(n)]
    if "dicyclic" in fams:
        specs += [f"Q{n}" for n in range(8, max_order + 1, 4)]
    elif "dicyclic2" in fams:
        specs += [f"Q{n}" for n in range(8, max_order + 1, 4) if _is_power_of_two(n)]
    if "product" in fams:
        specs += product_specs(max_order)
    if "symmetric" in fams:
        specs += [f"S{n}" for n in range(3, MAX_SYMMETRIC + 1) if factorial(n) <= max_elements]
    if "alternating" in fams:
        specs += [f"A{n}" for n in range(4, MAX_ALTERNATING + 1)
                  if factorial(n) // 2 <= max_elements]
    return sorted(set(specs))
