"""Difference graphs of finite groups: construction, recognition, theorem checks."""

from .groupspec import GroupSpec, parse, realize, render, load_cayley
from .group_core import Group, cyclic_lattice, is_eppo, is_nilpotent

__all__ = ["GroupSpec", "parse", "realize", "render", "load_cayley", "Group",
           "cyclic_lattice", "is_eppo", "is_nilpotent"]
