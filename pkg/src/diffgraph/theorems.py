"""Conditions A and B, theorem-based predictions, and the verification harness.

``predict`` encodes only classifications that are proven for difference
graphs; it never guesses.  ``verify`` runs every recognizer on D(G) and
compares the observations with those predictions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .graphs import SimpleGraph, difference_graph
from .group_core import (
    Group,
    exponent,
    is_eppo,
    is_nilpotent,
    is_prime_power,
    order_spectrum,
    prime_factors,
    sylow_decomposition,
)
from .groupspec import Atom, GroupSpecError, parse
from .recognizers import RECOGNIZERS, Status, Verdict, c4_free

SCHEMA_VERSION = "v1"

CLASSES = ("cograph", "chordal", "split", "threshold", "star", "dominatable",
           "bipartite", "eulerian", "planar", "outerplanar")
# reported alongside the ten classes; predicted by condition A
EXTRA_CLASSES = ("c4_free",)


def _is_prime(n: int) -> bool:
    return n >= 2 and prime_factors(n) == [n]


# ---------------------------------------------------------------------------
# conditions A and B


def _twice_odd_prime(o: int) -> bool:
    return o % 2 == 0 and _is_prime(o // 2) and o // 2 > 2


def spectrum_condition(spectrum: set[int]) -> bool:
    """Every order is 1, a prime power, or 2p for an odd prime p."""
    return all(o == 1 or is_prime_power(o) or _twice_odd_prime(o) for o in spectrum)


def _two_p_subgroups(group: Group):
    return [s for s in group.lattice.subgroups if _twice_odd_prime(s.order)]


def condition_a(group: Group) -> bool:
    if not spectrum_condition(order_spectrum(group)):
        return False
    by_order: dict[int, list[frozenset]] = {}
    for s in _two_p_subgroups(group):
        by_order.setdefault(s.order, []).append(s.elements)
    for subs in by_order.values():
        for m, n in combinations(subs, 2):
            if len(m & n) > 2:
                return False
    return True


def condition_b(group: Group) -> bool:
    if not spectrum_condition(order_spectrum(group)):
        return False
    subs = [s.elements for s in _two_p_subgroups(group)]
    return all(len(m & n) == 2 for m, n in combinations(subs, 2))


# ---------------------------------------------------------------------------
# structural profile


@dataclass
class StructuralProfile:
    order: int
    spectrum: list[int]
    eppo: bool
    nilpotent: bool
    sylow: list[tuple[int, int, int]] | None  # (prime, size, exponent)
    condition_a: bool
    condition_b: bool
    family_tag: str | None = None
    families: list[str] = field(default_factory=list)
    exponent: int = 1

    @property
    def p_group(self) -> bool:
        return self.sylow is not None and len(self.sylow) <= 1

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "spectrum": list(self.spectrum),
            "exponent": self.exponent,
            "eppo": self.eppo,
            "nilpotent": self.nilpotent,
            "sylow": None if self.sylow is None else [list(t) for t in self.sylow],
            "condition_a": self.condition_a,
            "condition_b": self.condition_b,
            "family_tag": self.family_tag,
            "families": list(self.families),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "StructuralProfile":
        sylow = d["sylow"]
        return cls(d["order"], list(d["spectrum"]), d["eppo"], d["nilpotent"],
                   None if sylow is None else [tuple(t) for t in sylow],
                   d["condition_a"], d["condition_b"], d["family_tag"],
                   list(d.get("families", [])), d.get("exponent", 1))


def named_family(group: Group) -> tuple[str, int] | None:
    """("S", n) or ("A", n) when the group was built from a single S/A atom."""
    if not group.spec or group.spec.startswith("cayley:"):
        return None
    try:
        ast = parse(group.spec).ast
    except GroupSpecError:
        return None
    if isinstance(ast, Atom) and ast.kind in ("S", "A"):
        return ast.kind, ast.value
    return None


def _maximal_cyclic_trivially_intersecting(sub: Group) -> bool:
    lat = sub.lattice
    maxes = [lat.subgroups[i].elements for i in lat.maximal_ids()]
    return all(len(m & n) == 1 for m, n in combinations(maxes, 2))


def nilpotent_families(group: Group, sylow_sets) -> list[str]:
    """Family tags for a nilpotent group that is not a p-group."""
    info = [(p, len(s), max(int(group.orders[g]) for g in s)) for p, s in sylow_sets]
    tags = []
    if len(info) != 2:
        return tags
    (p1, n1, e1), (p2, n2, e2) = info
    if (p1, n1) == (2, 2) and e2 == p2:
        tags.append("Z2xP_odd_exp_p")
    if (p1, n1) == (3, 3) and e2 == p2 and p2 > 3:
        tags.append("Z3xP_exp_p_gt3")
    if p1 == 2 and e1 == 4 and (p2, n2) == (3, 3):
        sub = group.subgroup(sylow_sets[0][1])
        if _maximal_cyclic_trivially_intersecting(sub):
            tags.append("P2exp4_trivial_intersections_xZ3")
    if p1 == 2 and e1 == 2 and (p2, n2) == (3, 3):
        tags.append("elem_abelian_2_xZ3")
    if e1 == p1 and e2 == p2:
        tags.append("P1xP2_both_prime_exponent")
    if e1 == p1 or e2 == p2:
        tags.append("at_least_one_prime_exponent")
    return tags


def profile(group: Group) -> StructuralProfile:
    spectrum = sorted(order_spectrum(group))
    nil = is_nilpotent(group)
    sylow_sets = sylow_decomposition(group) if nil else None
    sylow = None
    families: list[str] = []
    if sylow_sets is not None:
        sylow = [(p, len(s), max(int(group.orders[g]) for g in s)) for p, s in sylow_sets]
        if len(sylow) >= 2:
            families = nilpotent_families(group, sylow_sets)
    fam = named_family(group)
    if fam is not None:
        families.append(("symmetric" if fam[0] == "S" else "alternating") + f"({fam[1]})")
    if not families:
        families = ["other"]
    return StructuralProfile(
        order=group.n,
        spectrum=spectrum,
        eppo=is_eppo(group),
        nilpotent=nil,
        sylow=sylow,
        condition_a=condition_a(group),
        condition_b=condition_b(group),
        family_tag=families[0],
        families=families,
        exponent=exponent(group),
    )


# ---------------------------------------------------------------------------
# predictions


@dataclass
class Prediction:
    value: bool
    basis: list[str]


def predict(group: Group, prof: StructuralProfile | None = None) -> dict[str, Prediction]:
    """Theorem-backed predictions for the classes of D(G); EPPO groups get none."""
    prof = prof or profile(group)
    out: dict[str, Prediction] = {}
    conflicts: list[str] = []

    def put(cls: str, value: bool, basis: str) -> None:
        prev = out.get(cls)
        if prev is None:
            out[cls] = Prediction(value, [basis])
            return
        prev.basis.append(basis)
        if prev.value != value:
            conflicts.append(cls)

    if prof.eppo:
        return out

    a, b = prof.condition_a, prof.condition_b
    put("chordal", a, "chordal iff condition A")
    put("c4_free", a, "C4-free iff condition A")
    for cls in ("star", "dominatable"):
        put(cls, b, "star iff dominatable iff condition B")
    for cls in ("threshold", "split"):
        put(cls, b, "threshold iff split iff condition B")

    if prof.nilpotent and not prof.p_group:
        fams = set(prof.families)
        z2p = "Z2xP_odd_exp_p" in fams
        for cls in ("chordal", "star", "dominatable", "threshold", "split"):
            put(cls, z2p, "nilpotent: Z2 x P with exp P = p > 2")
        put("cograph", "P1xP2_both_prime_exponent" in fams,
            "nilpotent: two Sylow factors of prime exponent")
        put("bipartite", "at_least_one_prime_exponent" in fams,
            "nilpotent: two Sylow factors, one of prime exponent")
        put("eulerian", prof.order % 2 == 1, "nilpotent: |G| odd")
        planar = bool(fams & {"Z2xP_odd_exp_p", "Z3xP_exp_p_gt3",
                              "P2exp4_trivial_intersections_xZ3", "elem_abelian_2_xZ3"})
        put("planar", planar, "nilpotent: one of the four planar families")
        put("outerplanar", z2p, "nilpotent: Z2 x P with exp P = p > 2")

    for fam in prof.families:
        if fam.startswith("symmetric(") and int(fam[10:-1]) >= 5:
            n = int(fam[10:-1])
            put("chordal", n == 5, "S_n chordal iff n = 5")
            put("cograph", n == 5, "S_n cograph iff n = 5")
            put("split", False, "S_n never split for n >= 5")
            put("threshold", False, "S_n never threshold for n >= 5")
        if fam.startswith("alternating(") and int(fam[12:-1]) >= 7:
            n = int(fam[12:-1])
            put("chordal", False, "A_n not chordal for n >= 7")
            put("split", False, "A_n never split for n >= 7")
            put("threshold", False, "A_n never threshold for n >= 7")
            put("cograph", n == 7, "A_n cograph iff n = 7")

    for cls in conflicts:
        out[cls].basis.append("CONFLICT between theorems")
    return out


# ---------------------------------------------------------------------------
# verification


@dataclass
class ClassResult:
    observed: Verdict
    predicted: bool | None = None
    basis: list[str] = field(default_factory=list)

    @property
    def agrees(self) -> bool | None:
        if self.predicted is None or self.observed.status is Status.VACUOUS:
            return None
        return self.predicted == self.observed.value

    def to_dict(self) -> dict:
        return {
            "observed": self.observed.to_dict(),
            "predicted": self.predicted,
            "basis": list(self.basis),
            "agrees": self.agrees,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ClassResult":
        return cls(Verdict.from_dict(d["observed"]), d["predicted"], list(d["basis"]))


@dataclass
class ClassReport:
    spec: str
    profile: StructuralProfile
    classes: dict[str, ClassResult]
    graph_stats: dict[str, int]
    notes: list[str] = field(default_factory=list)

    @property
    def vacuous(self) -> bool:
        return self.graph_stats["vertex_count"] == 0

    def mismatches(self) -> list[str]:
        return [c for c, r in self.classes.items() if r.agrees is False]

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "spec": self.spec,
            "profile": self.profile.to_dict(),
            "graph_stats": dict(self.graph_stats),
            "classes": {c: r.to_dict() for c, r in self.classes.items()},
            "notes": list(self.notes),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ClassReport":
        if d.get("schema") != SCHEMA_VERSION:
            raise ValueError(f"unsupported report schema {d.get('schema')!r}")
        return cls(d["spec"], StructuralProfile.from_dict(d["profile"]),
                   {c: ClassResult.from_dict(r) for c, r in d["classes"].items()},
                   dict(d["graph_stats"]), list(d["notes"]))


def verify(group: Group, graph: SimpleGraph | None = None) -> ClassReport:
    prof = profile(group)
    D = difference_graph(group) if graph is None else graph
    preds = predict(group, prof)
    results: dict[str, ClassResult] = {}
    recognizers = dict(RECOGNIZERS, c4_free=c4_free)
    for cls in CLASSES + EXTRA_CLASSES:
        verdict = recognizers[cls](D)
        if verdict.witness is not None:
            verdict.witness.annotate(D.labels, D.elements)
        p = preds.get(cls)
        results[cls] = ClassResult(verdict, None if p is None else p.value,
                                   [] if p is None else p.basis)
    notes = []
    if prof.eppo:
        notes.append("EPPO group: difference graph is empty, every verdict is vacuous")
    elif not preds:
        notes.append("no applicable predictions")
    if (not prof.nilpotent and prof.order % 2 == 0
            and results["eulerian"].observed.status is Status.TRUE):
        notes.append("Eulerian although |G| is even; the odd-order criterion "
                     "needs a nilpotent group")
    for cls, p in preds.items():
        if "CONFLICT between theorems" in p.basis:
            notes.append(f"conflicting predictions for {cls}")
    report = ClassReport(group.spec, prof, results,
                         {"vertex_count": D.n, "edge_count": D.edge_count}, notes)
    for cls in report.mismatches():
        notes.append(f"MISMATCH {cls}: predicted {results[cls].predicted}, "
                     f"observed {results[cls].observed.status.value}")
    return report
