"""Recognizers for graph classes, each returning a :class:`Verdict`."""

from .classes import (
    c4_free,
    dominating_vertices,
    is_bipartite,
    is_chordal,
    is_cograph,
    is_dominatable,
    is_eulerian,
    is_split,
    is_star,
    is_threshold,
    lex_bfs,
)
from .planarity import is_outerplanar, is_planar
from .verdict import Status, Verdict, Witness

RECOGNIZERS = {
    "cograph": is_cograph,
    "chordal": is_chordal,
    "split": is_split,
    "threshold": is_threshold,
    "star": is_star,
    "dominatable": is_dominatable,
    "bipartite": is_bipartite,
    "eulerian": is_eulerian,
    "planar": is_planar,
    "outerplanar": is_outerplanar,
}

__all__ = [
    "RECOGNIZERS", "Status", "Verdict", "Witness", "c4_free", "dominating_vertices",
    "is_bipartite", "is_chordal", "is_cograph", "is_dominatable", "is_eulerian",
    "is_outerplanar", "is_planar", "is_split", "is_star", "is_threshold", "lex_bfs",
]

from .certify import CertificateError, check_verdict, check_witness  # noqa: E402
from .oracle import OracleCapError, brute_force_class, brute_force_forbidden  # noqa: E402

__all__ += [
    "CertificateError", "OracleCapError", "brute_force_class", "brute_force_forbidden",
    "check_verdict", "check_witness",
]
